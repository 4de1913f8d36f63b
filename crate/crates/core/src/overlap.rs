//! Overlap-matrix families and their rank distributions by exhaustive
//! enumeration.
//!
//! Assignments are packed into one integer so that a whole family is the
//! contiguous range `0..2^bits`:
//!
//! * `L` (parameter `n`): bits `0..n` are `x_1..x_n`, then `y_1..y_{n-1}`.
//! * `O`: the `L` layout with the `x` block removed, i.e. just `y_1..y_{n-1}`.
//! * `R` (parameter `n`, dimension `n+1`): bits `0..=n` are `x_0..x_n`, then
//!   `y_1..y_{n-1}`, then `z_1..z_n`.
//! * `P`: the `R` layout with the `x` block removed: `y_1..y_{n-1}`, `z_1..z_n`.

use num_bigint::BigUint;

use crate::error::EnumError;
use crate::family::{Family, Method};
use crate::gf2::{rank_in_place, Gf2SymMatrix, MAX_DIM};
use crate::parallel;
use crate::poly::Poly;

/// Diagonal `x_1..x_n` and off-diagonal `y_1..y_{n-1}` of the tridiagonal
/// closed-end ladder matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderAssignment {
    x: Vec<bool>,
    y: Vec<bool>,
}

impl LadderAssignment {
    pub fn new(x: Vec<bool>, y: Vec<bool>) -> Result<Self, EnumError> {
        let expected = x.len().saturating_sub(1);
        if x.is_empty() {
            return Err(EnumError::BadLength {
                name: "x",
                got: 0,
                expected: 1,
            });
        }
        if y.len() != expected {
            return Err(EnumError::BadLength {
                name: "y",
                got: y.len(),
                expected,
            });
        }
        Ok(LadderAssignment { x, y })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[bool] {
        &self.x
    }

    pub fn y(&self) -> &[bool] {
        &self.y
    }

    pub fn encode(&self) -> u64 {
        pack(self.x.iter().chain(self.y.iter()))
    }

    pub fn decode(n: usize, code: u64) -> Self {
        let bits = unpack(code, 2 * n - 1);
        LadderAssignment {
            x: bits[..n].to_vec(),
            y: bits[n..].to_vec(),
        }
    }
}

/// `x_0..x_n`, `y_1..y_{n-1}` and `z_1..z_n` of the bordered Ringel ladder
/// matrix. `x_0` is the twist of `e`, `x_i` of `a_i`; `y_j` and `z_k` mark
/// unmatched `b_j` and `c_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingelAssignment {
    x: Vec<bool>,
    y: Vec<bool>,
    z: Vec<bool>,
}

impl RingelAssignment {
    pub fn new(x: Vec<bool>, y: Vec<bool>, z: Vec<bool>) -> Result<Self, EnumError> {
        let n = z.len();
        if n == 0 {
            return Err(EnumError::BadLength {
                name: "z",
                got: 0,
                expected: 1,
            });
        }
        if x.len() != n + 1 {
            return Err(EnumError::BadLength {
                name: "x",
                got: x.len(),
                expected: n + 1,
            });
        }
        if y.len() != n - 1 {
            return Err(EnumError::BadLength {
                name: "y",
                got: y.len(),
                expected: n - 1,
            });
        }
        Ok(RingelAssignment { x, y, z })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn x(&self) -> &[bool] {
        &self.x
    }

    pub fn y(&self) -> &[bool] {
        &self.y
    }

    pub fn z(&self) -> &[bool] {
        &self.z
    }

    pub fn encode(&self) -> u64 {
        pack(self.x.iter().chain(&self.y).chain(&self.z))
    }

    pub fn decode(n: usize, code: u64) -> Self {
        let bits = unpack(code, 3 * n);
        RingelAssignment {
            x: bits[..=n].to_vec(),
            y: bits[n + 1..2 * n].to_vec(),
            z: bits[2 * n..].to_vec(),
        }
    }
}

fn pack<'a>(bits: impl Iterator<Item = &'a bool>) -> u64 {
    bits.enumerate()
        .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
}

fn unpack(code: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| (code >> i) & 1 == 1).collect()
}

/// The `n x n` tridiagonal matrix with diagonal `x` and off-diagonal `y`.
pub fn build_ladder_matrix(a: &LadderAssignment) -> Result<Gf2SymMatrix, EnumError> {
    let n = a.n();
    let mut m = Gf2SymMatrix::zero(n)?;
    for (i, &xi) in a.x.iter().enumerate() {
        m.set(i, i, xi);
    }
    for (i, &yi) in a.y.iter().enumerate() {
        m.set(i, i + 1, yi);
    }
    Ok(m)
}

/// The `(n+1) x (n+1)` matrix whose first row/column is `(x_0, z_1..z_n)`
/// and whose lower-right block is the tridiagonal `x_1..x_n` / `y` matrix.
pub fn build_ringel_matrix(a: &RingelAssignment) -> Result<Gf2SymMatrix, EnumError> {
    let n = a.n();
    let mut m = Gf2SymMatrix::zero(n + 1)?;
    for (i, &xi) in a.x.iter().enumerate() {
        m.set(i, i, xi);
    }
    for (k, &zk) in a.z.iter().enumerate() {
        m.set(0, k + 1, zk);
    }
    for (j, &yj) in a.y.iter().enumerate() {
        m.set(j + 1, j + 2, yj);
    }
    Ok(m)
}

#[inline]
fn bit(code: u64, i: usize) -> u64 {
    (code >> i) & 1
}

/// Writes the matrix for packed assignment `code` into `rows[..dim]`.
#[inline]
pub(crate) fn fill_rows(family: Family, n: usize, code: u64, rows: &mut [u64]) {
    match family {
        Family::O | Family::L => {
            let (x_at, y_at) = if family == Family::L { (0, n) } else { (usize::MAX, 0) };
            for (i, row) in rows.iter_mut().enumerate().take(n) {
                let mut r = 0;
                if x_at != usize::MAX {
                    r |= bit(code, x_at + i) << i;
                }
                if i > 0 {
                    r |= bit(code, y_at + i - 1) << (i - 1);
                }
                if i + 1 < n {
                    r |= bit(code, y_at + i) << (i + 1);
                }
                *row = r;
            }
        }
        Family::P | Family::R => {
            let (y_at, z_at) = if family == Family::R {
                (n + 1, 2 * n)
            } else {
                (0, n - 1)
            };
            let diag = |i: usize| if family == Family::R { bit(code, i) } else { 0 };
            let mut top = diag(0);
            for k in 1..=n {
                top |= bit(code, z_at + k - 1) << k;
            }
            rows[0] = top;
            for i in 1..=n {
                let mut r = bit(code, z_at + i - 1) | (diag(i) << i);
                if i >= 2 {
                    r |= bit(code, y_at + i - 2) << (i - 1);
                }
                if i < n {
                    r |= bit(code, y_at + i - 1) << (i + 1);
                }
                rows[i] = r;
            }
        }
    }
}

/// Exact count of assignments per rank, index = rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDistribution {
    pub family: Family,
    /// Ladder parameter (see [`Family`]); the matrix dimension is
    /// `family.dim(n)`.
    pub n: usize,
    pub method: Method,
    pub counts: Vec<BigUint>,
}

impl RankDistribution {
    pub fn dim(&self) -> usize {
        self.family.dim(self.n)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `2^bits`, the size of the family's assignment space.
    pub fn domain_size(&self) -> BigUint {
        BigUint::from(1u8) << self.family.free_bits(self.n)
    }

    pub fn as_poly(&self) -> Poly {
        Poly::from_ints(self.counts.iter().cloned())
    }

    /// Builds a distribution from a polynomial with nonnegative integer
    /// coefficients, padding the counts to `dim + 1` entries.
    pub fn from_poly(family: Family, n: usize, method: Method, p: &Poly) -> Option<Self> {
        let dim = family.dim(n);
        if p.degree().is_some_and(|d| d > dim) {
            return None;
        }
        let ints = p.to_integers().ok()?;
        let mut counts = vec![BigUint::default(); dim + 1];
        for (i, c) in ints.into_iter().enumerate() {
            counts[i] = c.to_biguint()?;
        }
        Some(RankDistribution {
            family,
            n,
            method,
            counts,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    pub workers: usize,
    /// Largest allowed `log2` of the assignment space.
    pub max_bits: u32,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            workers: parallel::default_workers(),
            max_bits: 32,
        }
    }
}

impl EnumConfig {
    pub fn with_workers(workers: usize) -> Self {
        EnumConfig {
            workers,
            ..Self::default()
        }
    }
}

/// Largest parameter `n` the bound admits for `family`.
pub fn max_brute_param(family: Family, max_bits: u32) -> usize {
    (1..=MAX_DIM)
        .take_while(|&n| family.free_bits(n) <= max_bits && family.dim(n) <= MAX_DIM)
        .last()
        .unwrap_or(0)
}

/// Rank distribution of `family` at ladder parameter `n` by enumerating
/// every assignment. The result does not depend on `cfg.workers`.
pub fn brute_rank_distribution(
    family: Family,
    n: usize,
    cfg: &EnumConfig,
) -> Result<RankDistribution, EnumError> {
    if n < 1 {
        return Err(EnumError::BelowRange { family, n, min: 1 });
    }
    let bits = family.free_bits(n);
    let dim = family.dim(n);
    if bits > cfg.max_bits || dim > MAX_DIM {
        return Err(EnumError::Infeasible {
            family,
            n,
            bits,
            max_bits: cfg.max_bits,
        });
    }
    let partial = parallel::partitioned(1u64 << bits, cfg.workers, |range| {
        let mut counts = vec![0u64; dim + 1];
        let mut rows = [0u64; MAX_DIM];
        for code in range {
            fill_rows(family, n, code, &mut rows[..dim]);
            counts[rank_in_place(&mut rows[..dim])] += 1;
        }
        counts
    });
    let mut counts = vec![BigUint::default(); dim + 1];
    for part in partial {
        for (acc, c) in counts.iter_mut().zip(part) {
            *acc += c;
        }
    }
    Ok(RankDistribution {
        family,
        n,
        method: Method::BruteForce,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn counts(d: &RankDistribution) -> Vec<u64> {
        d.counts
            .iter()
            .map(|c| u64::try_from(c.clone()).unwrap())
            .collect()
    }

    fn single() -> EnumConfig {
        EnumConfig::with_workers(1)
    }

    #[test]
    fn ladder_matrix_examples() {
        let a = LadderAssignment::new(bits("10"), bits("1")).unwrap();
        let m = build_ladder_matrix(&a).unwrap();
        assert_eq!(m.render(), "1 1\n1 0\n");

        let a = LadderAssignment::new(bits("000"), bits("11")).unwrap();
        assert_eq!(build_ladder_matrix(&a).unwrap().rank(), 2);

        let a = LadderAssignment::new(bits("1"), vec![]).unwrap();
        let m = build_ladder_matrix(&a).unwrap();
        assert_eq!((m.dim(), m.rank()), (1, 1));
    }

    #[test]
    fn ringel_matrix_examples() {
        let a = RingelAssignment::new(bits("000"), bits("1"), bits("00")).unwrap();
        let m = build_ringel_matrix(&a).unwrap();
        assert_eq!(m.render(), "0 0 0\n0 0 1\n0 1 0\n");
        assert_eq!(m.rank(), 2);

        let a = RingelAssignment::new(bits("111"), bits("0"), bits("00")).unwrap();
        let m = build_ringel_matrix(&a).unwrap();
        assert_eq!(m, Gf2SymMatrix::identity(3).unwrap());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn ringel_matrix_border_layout() {
        // x = (1,0,1,0), y = (1,0), z = (0,1,1)
        let a = RingelAssignment::new(bits("1010"), bits("10"), bits("011")).unwrap();
        let m = build_ringel_matrix(&a).unwrap();
        assert_eq!(
            m.render(),
            "1 0 1 1\n0 0 1 0\n1 1 1 0\n1 0 0 0\n"
        );
    }

    #[test]
    fn exhaustive_three_by_three_ringel() {
        let mut hist = [0u64; 4];
        for code in 0..64 {
            let m = build_ringel_matrix(&RingelAssignment::decode(2, code)).unwrap();
            hist[m.rank()] += 1;
        }
        assert_eq!(hist, [1, 7, 28, 28]);
    }

    #[test]
    fn assignment_length_errors() {
        assert!(LadderAssignment::new(bits("10"), vec![]).is_err());
        assert!(LadderAssignment::new(vec![], vec![]).is_err());
        assert!(RingelAssignment::new(bits("00"), bits("1"), bits("00")).is_err());
        assert!(RingelAssignment::new(bits("000"), vec![], bits("00")).is_err());
    }

    #[test]
    fn encode_decode_round_trip() {
        for code in 0..(1 << 12) {
            assert_eq!(RingelAssignment::decode(4, code).encode(), code);
        }
        for code in 0..(1 << 9) {
            assert_eq!(LadderAssignment::decode(5, code).encode(), code);
        }
    }

    #[test]
    fn fast_fill_matches_builders() {
        let mut rows = [0u64; MAX_DIM];
        for n in 1..=5 {
            for code in 0..(1u64 << (3 * n)) {
                let slow = build_ringel_matrix(&RingelAssignment::decode(n, code)).unwrap();
                fill_rows(Family::R, n, code, &mut rows[..n + 1]);
                assert_eq!(&rows[..n + 1], slow.rows());
            }
            for code in 0..(1u64 << (2 * n - 1)) {
                // P drops the x block of the R layout
                let r_code = code << (n + 1);
                let slow = build_ringel_matrix(&RingelAssignment::decode(n, r_code)).unwrap();
                fill_rows(Family::P, n, code, &mut rows[..n + 1]);
                assert_eq!(&rows[..n + 1], slow.rows());

                let slow = build_ladder_matrix(&LadderAssignment::decode(n, code)).unwrap();
                fill_rows(Family::L, n, code, &mut rows[..n]);
                assert_eq!(&rows[..n], slow.rows());
            }
            for code in 0..(1u64 << (n - 1)) {
                let slow = build_ladder_matrix(&LadderAssignment::decode(n, code << n)).unwrap();
                fill_rows(Family::O, n, code, &mut rows[..n]);
                assert_eq!(&rows[..n], slow.rows());
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let p = brute_rank_distribution(Family::P, 2, &single()).unwrap();
        assert_eq!(counts(&p), vec![1, 0, 7, 0]);
        let l = brute_rank_distribution(Family::L, 2, &single()).unwrap();
        assert_eq!(counts(&l), vec![1, 3, 4]);
        let o = brute_rank_distribution(Family::O, 3, &single()).unwrap();
        assert_eq!(counts(&o), vec![1, 0, 3, 0]);
        let r = brute_rank_distribution(Family::R, 3, &single()).unwrap();
        assert_eq!(counts(&r), vec![1, 11, 80, 212, 208]);
        let r = brute_rank_distribution(Family::R, 2, &single()).unwrap();
        assert_eq!(counts(&r), vec![1, 7, 28, 28]);
    }

    #[test]
    fn sums_and_odd_ranks() {
        for family in Family::ALL {
            for n in 1..=6 {
                let d = brute_rank_distribution(family, n, &single()).unwrap();
                assert_eq!(d.total(), d.domain_size(), "{family} n={n}");
                assert_eq!(d.counts.len(), d.dim() + 1);
                if family.zero_diagonal() {
                    for r in (1..d.counts.len()).step_by(2) {
                        assert_eq!(d.counts[r], BigUint::default(), "{family} n={n} rank={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_counts() {
        for family in Family::ALL {
            let reference = brute_rank_distribution(family, 5, &single()).unwrap();
            for w in [2, 7, 16] {
                let d = brute_rank_distribution(family, 5, &EnumConfig::with_workers(w)).unwrap();
                assert_eq!(d, reference);
            }
        }
    }

    #[test]
    fn feasibility_bound() {
        let cfg = single();
        assert_eq!(max_brute_param(Family::R, 32), 10);
        let err = brute_rank_distribution(Family::R, 11, &cfg).unwrap_err();
        assert!(err.to_string().contains("2^32"), "{err}");
        assert!(matches!(
            brute_rank_distribution(Family::O, 0, &cfg),
            Err(EnumError::BelowRange { .. })
        ));
        let tight = EnumConfig {
            workers: 1,
            max_bits: 8,
        };
        assert!(brute_rank_distribution(Family::R, 3, &tight).is_err());
    }
}
