//! Chebyshev polynomials of the second kind and closed-form solutions of
//! second-order polynomial recurrences `P_n = a1 P_{n-1} + a2 P_{n-2}`.
//!
//! The classical closed form is
//! `P_n = (i sqrt(a2))^n [A U_n(t) + B U_{n-1}(t) + C U_{n-2}(t)]` with
//! `t = a1 / (2 i sqrt(a2))`. Writing `S_k = (i sqrt(a2))^k U_k(t)`, the
//! binomial expansion of `U_k` gives the radical-free
//!
//! ```text
//! S_k = sum_j binom(k-j, j) a1^(k-2j) a2^j
//! ```
//!
//! so `P_n = A S_n + B' S_{n-1} + C' S_{n-2}` with `B' = i sqrt(a2) B` and
//! `C' = -a2 C`. Everything here works with `S_k` and the real multipliers
//! `(A, B', C')`; no complex number is ever formed. `S_{-1} = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::SolveError;
use crate::poly::Poly;

/// `binom(a, b)`, zero whenever `a < 0`, `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `U_k(x)` from `U_k = 2x U_{k-1} - U_{k-2}`, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(k: usize) -> Poly {
    let two_x = Poly::from_ints([0, 2]);
    let mut prev = Poly::one();
    if k == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for _ in 1..k {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `U_k(x) = sum_j binom(k-j, j) (-1)^j (2x)^(k-2j)`.
pub fn chebyshev_u_binomial(k: usize) -> Poly {
    let k = k as i64;
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    for j in 0..=k / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = binom(k - j, j) * sign * (BigInt::one() << (k - 2 * j) as usize);
        coeffs[(k - 2 * j) as usize] = BigRational::from_integer(c);
    }
    Poly::from_coeffs(coeffs)
}

/// Whether the recurrence and binomial-sum definitions of `U_k` agree.
pub fn chebyshev_u_identity_holds(k: usize) -> bool {
    chebyshev_u(k) == chebyshev_u_binomial(k)
}

/// `S_k = (i sqrt(a2))^k U_k(a1 / (2 i sqrt(a2)))` as a real polynomial.
pub fn scaled_u_expansion(k: usize, a1: &Poly, a2: &Poly) -> Poly {
    ScaledU::new(a1.clone(), a2.clone()).term(k as i64)
}

/// Power tables for repeated evaluation of `S_k` with fixed `a1`, `a2`.
#[derive(Clone, Debug)]
pub struct ScaledU {
    a1_pows: Vec<Poly>,
    a2_pows: Vec<Poly>,
}

impl ScaledU {
    pub fn new(a1: Poly, a2: Poly) -> Self {
        ScaledU {
            a1_pows: vec![Poly::one(), a1],
            a2_pows: vec![Poly::one(), a2],
        }
    }

    fn pow(table: &mut Vec<Poly>, e: usize) -> &Poly {
        while table.len() <= e {
            let next = &table[table.len() - 1] * &table[1];
            table.push(next);
        }
        &table[e]
    }

    /// `S_k`, with `S_{-1} = 0`.
    ///
    /// # Panics
    /// For `k < -1`.
    pub fn term(&mut self, k: i64) -> Poly {
        assert!(k >= -1, "S_k is only defined here for k >= -1");
        if k < 0 {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for j in 0..=k / 2 {
            let c = binom(k - j, j);
            let a1p = Self::pow(&mut self.a1_pows, (k - 2 * j) as usize).clone();
            let a2p = Self::pow(&mut self.a2_pows, j as usize);
            acc = &acc + &(&a1p * a2p).scale_int(&c);
        }
        acc
    }
}

/// `num / z^den_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    pub num: Poly,
    pub den_degree: usize,
}

impl RationalFn {
    pub fn poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den_degree: 0,
        }
    }

    /// `num / (c z^d)`, reduced so the denominator is a bare power of `z`
    /// with as small an exponent as possible.
    pub fn new(num: Poly, c: &BigRational, d: usize) -> Self {
        let num = num.scale(&c.recip());
        let low = num
            .coeffs()
            .iter()
            .position(|a| !a.is_zero())
            .unwrap_or(d);
        let shift = low.min(d);
        let num = num
            .div_monomial(&BigRational::one(), shift)
            .expect("low coefficients are zero");
        RationalFn {
            num,
            den_degree: d - shift,
        }
    }

    /// The polynomial, if the denominator cancelled.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den_degree == 0).then_some(&self.num)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den_degree {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/z", self.num),
            d => write!(f, "({})/z^{d}", self.num),
        }
    }
}

/// Particular solution `Y_n` of an inhomogeneous recurrence.
pub type Particular = Arc<dyn Fn(usize) -> Poly + Send + Sync>;

#[derive(Clone)]
pub struct RecurrenceSpec {
    pub a1: Poly,
    pub a2: Poly,
    pub initials: BTreeMap<usize, Poly>,
    pub particular: Option<Particular>,
}

impl fmt::Debug for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecurrenceSpec")
            .field("a1", &self.a1.to_string())
            .field("a2", &self.a2.to_string())
            .field("initials", &self.initials)
            .field("particular", &self.particular.is_some())
            .finish()
    }
}

impl RecurrenceSpec {
    pub fn homogeneous(a1: Poly, a2: Poly, initials: BTreeMap<usize, Poly>) -> Self {
        RecurrenceSpec {
            a1,
            a2,
            initials,
            particular: None,
        }
    }

    pub fn with_particular(mut self, y: Particular) -> Self {
        self.particular = Some(y);
        self
    }

    /// Smallest `k >= 1` with initials at both `k` and `k + 1`.
    pub fn first_index(&self) -> Result<usize, SolveError> {
        self.initials
            .keys()
            .copied()
            .find(|&k| k >= 1 && self.initials.contains_key(&(k + 1)))
            .ok_or(SolveError::MissingInitials)
    }

    pub fn particular_at(&self, n: usize) -> Poly {
        self.particular.as_ref().map_or_else(Poly::zero, |y| y(n))
    }

    /// Value at `n` by running the recurrence forward from the first pair
    /// of initials, adding `Y_n - a1 Y_{n-1} - a2 Y_{n-2}` as forcing term.
    pub fn iterate(&self, n: usize) -> Result<Poly, SolveError> {
        let k0 = self.first_index()?;
        if n < k0 {
            return Err(SolveError::BelowInitials { n, min: k0 });
        }
        let mut prev = self.initials[&k0].clone();
        if n == k0 {
            return Ok(prev);
        }
        let mut cur = self.initials[&(k0 + 1)].clone();
        for k in k0 + 2..=n {
            let forcing = match &self.particular {
                Some(_) => {
                    &(&self.particular_at(k) - &(&self.a1 * &self.particular_at(k - 1)))
                        - &(&self.a2 * &self.particular_at(k - 2))
                }
                None => Poly::zero(),
            };
            let next = &(&(&self.a1 * &cur) + &(&self.a2 * &prev)) + &forcing;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }
}

/// Real multipliers of `S_n`, `S_{n-1}`, `S_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormConstants {
    pub a: RationalFn,
    pub b: RationalFn,
    pub c: RationalFn,
}

impl ClosedFormConstants {
    /// Constants given directly as polynomials.
    pub fn from_polys(a: Poly, b: Poly, c: Poly) -> Self {
        ClosedFormConstants {
            a: RationalFn::poly(a),
            b: RationalFn::poly(b),
            c: RationalFn::poly(c),
        }
    }
}

/// Solves for `B'`, `C'` with `A = 1` from the first two consecutive initial
/// values, after subtracting the particular solution.
///
/// With `k0` the first initial index and `H_k = P_k - Y_k` the system is
///
/// ```text
/// B' S_{k0-1} + C' S_{k0-2} = H_{k0}   - S_{k0}
/// B' S_{k0}   + C' S_{k0-1} = H_{k0+1} - S_{k0+1}
/// ```
///
/// whose determinant `S_{k0-1}^2 - S_{k0} S_{k0-2}` equals `(-a2)^(k0-1)`
/// by the Chebyshev Cassini identity; only monomial determinants are
/// accepted.
pub fn solve_constants(spec: &RecurrenceSpec) -> Result<ClosedFormConstants, SolveError> {
    if spec.a2.is_zero() {
        return Err(SolveError::DegenerateA2);
    }
    let k0 = spec.first_index()?;
    let mut s = ScaledU::new(spec.a1.clone(), spec.a2.clone());
    let k = k0 as i64;
    let (s_m2, s_m1, s_0, s_1) = (s.term(k - 2), s.term(k - 1), s.term(k), s.term(k + 1));

    let h0 = &spec.initials[&k0] - &spec.particular_at(k0);
    let h1 = &spec.initials[&(k0 + 1)] - &spec.particular_at(k0 + 1);
    let r0 = &h0 - &s_0;
    let r1 = &h1 - &s_1;

    let det = &(&s_m1 * &s_m1) - &(&s_0 * &s_m2);
    if det.is_zero() {
        return Err(SolveError::Singular);
    }
    let (dc, dd) = det
        .as_monomial()
        .ok_or_else(|| SolveError::NonMonomialDeterminant(det.to_string()))?;
    let b_num = &(&r0 * &s_m1) - &(&s_m2 * &r1);
    let c_num = &(&s_m1 * &r1) - &(&s_0 * &r0);
    Ok(ClosedFormConstants {
        a: RationalFn::poly(Poly::one()),
        b: RationalFn::new(b_num, &dc, dd),
        c: RationalFn::new(c_num, &dc, dd),
    })
}

/// `A S_n + B' S_{n-1} + C' S_{n-2} + Y_n`.
pub fn closed_form_eval(
    spec: &RecurrenceSpec,
    consts: &ClosedFormConstants,
    n: usize,
) -> Result<Poly, SolveError> {
    let mut s = ScaledU::new(spec.a1.clone(), spec.a2.clone());
    closed_form_eval_with(&mut s, spec, consts, n)
}

/// As [`closed_form_eval`], reusing a power table across calls.
pub fn closed_form_eval_with(
    s: &mut ScaledU,
    spec: &RecurrenceSpec,
    consts: &ClosedFormConstants,
    n: usize,
) -> Result<Poly, SolveError> {
    let k0 = spec.first_index()?;
    if n < k0 {
        return Err(SolveError::BelowInitials { n, min: k0 });
    }
    let k = n as i64;
    let parts = [(&consts.a, k), (&consts.b, k - 1), (&consts.c, k - 2)];
    let top = parts.iter().map(|(r, _)| r.den_degree).max().unwrap_or(0);
    let mut acc = Poly::zero();
    for (r, idx) in parts {
        let term = &r.num * &s.term(idx);
        acc = &acc + &term.shift(top - r.den_degree);
    }
    let hom = acc.div_monomial(&BigRational::one(), top)?;
    Ok(&hom + &spec.particular_at(n))
}
