use std::fmt;
use std::str::FromStr;

/// The four overlap-matrix families.
///
/// `O` and `L` are the tridiagonal `n x n` closed-end ladder matrices with
/// zero and free diagonal. `P` and `R` are the `(n+1) x (n+1)` Ringel ladder
/// matrices (bordered tridiagonal) with zero and free diagonal.
///
/// Two indexings are in use. The *index* `k` of a family polynomial is the
/// matrix dimension (`R_3(z)` counts 3x3 matrices). The *parameter* `n` is
/// the ladder parameter: `n` for `O`/`L`, and `n` with `k = n + 1` for
/// `P`/`R`, so that parameter `n` matches the Ringel ladder `R_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    O,
    L,
    P,
    R,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::O, Family::L, Family::P, Family::R];

    /// Smallest index `k` at which the family polynomial is defined.
    pub fn min_index(self) -> usize {
        match self {
            Family::O | Family::L => 1,
            Family::P | Family::R => 2,
        }
    }

    /// Matrix dimension for ladder parameter `n`.
    pub fn dim(self, n: usize) -> usize {
        match self {
            Family::O | Family::L => n,
            Family::P | Family::R => n + 1,
        }
    }

    /// Ladder parameter for polynomial index `k`.
    pub fn param(self, k: usize) -> usize {
        match self {
            Family::O | Family::L => k,
            Family::P | Family::R => k - 1,
        }
    }

    /// Number of free GF(2) variables at ladder parameter `n`.
    pub fn free_bits(self, n: usize) -> u32 {
        let n = n as u32;
        match self {
            Family::O => n - 1,
            Family::L | Family::P => 2 * n - 1,
            Family::R => 3 * n,
        }
    }

    /// Whether the diagonal is forced to zero.
    pub fn zero_diagonal(self) -> bool {
        matches!(self, Family::O | Family::P)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::O => "O",
            Family::L => "L",
            Family::P => "P",
            Family::R => "R",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" | "o" => Ok(Family::O),
            "L" | "l" => Ok(Family::L),
            "P" | "p" => Ok(Family::P),
            "R" | "r" => Ok(Family::R),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// How a distribution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Recurrence,
    ClosedForm,
    FaceTracing,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "bruteforce",
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed",
            Method::FaceTracing => "trace",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bruteforce" | "brute" => Ok(Method::BruteForce),
            "recurrence" => Ok(Method::Recurrence),
            "closed" | "closed_form" => Ok(Method::ClosedForm),
            "trace" | "face_tracing" => Ok(Method::FaceTracing),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}
