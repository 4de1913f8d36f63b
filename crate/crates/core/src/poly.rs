//! Dense univariate polynomials with exact rational coefficients, and the
//! split genus/crosscap polynomial `I(x, y)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// A polynomial in one variable with [`BigRational`] coefficients.
///
/// Index `i` of the coefficient vector is the coefficient of `z^i`.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// stored coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

/// Which end of the polynomial is printed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Ascending,
    Descending,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * z^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Poly {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `z -> z^2`.
    pub fn substitute_square(&self) -> Poly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_mul(2)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn coeff_sum(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, lowest degree first, or an error naming the
    /// first non-integral position.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, PolyError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(PolyError::NonIntegral {
                        degree: i,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Exact division by the monomial `c * z^degree`. Fails when a
    /// coefficient below `z^degree` is nonzero.
    pub fn div_monomial(&self, c: &BigRational, degree: usize) -> Result<Poly, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if let Some(i) = self.coeffs.iter().take(degree).position(|a| !a.is_zero()) {
            return Err(PolyError::NotDivisible { degree: i });
        }
        let inv = c.recip();
        Ok(Poly::from_coeffs(
            self.coeffs.iter().skip(degree).map(|a| a * &inv).collect(),
        ))
    }

    /// If the polynomial is `c * z^d` with `c != 0`, returns `(c, d)`.
    pub fn as_monomial(&self) -> Option<(BigRational, usize)> {
        let d = self.degree()?;
        if self.coeffs[..d].iter().all(Zero::is_zero) {
            Some((self.coeffs[d].clone(), d))
        } else {
            None
        }
    }

    /// Renders with the given variable name, e.g. `28z^3+28z^2+7z+1`.
    pub fn render(&self, var: &str, order: TermOrder) -> String {
        let terms: Vec<(usize, &BigRational)> = match order {
            TermOrder::Ascending => self.coeffs.iter().enumerate().collect(),
            TermOrder::Descending => self.coeffs.iter().enumerate().rev().collect(),
        };
        render_terms(
            terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, var, c)),
        )
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (usize, &'a str, &'a BigRational)>) -> String {
    let mut out = String::new();
    for (i, var, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let unit = mag.is_one();
        if i == 0 || !unit {
            if mag.is_integer() {
                out.push_str(&mag.to_integer().to_string());
            } else if i == 0 {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("({mag})"));
            }
        }
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z", TermOrder::Descending))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// The total embedding polynomial `I(x, y) = g(x) + f(y)`.
///
/// `genus` holds `g_i`, the number of embeddings into the orientable
/// surface with `i` handles; `crosscap` holds `f_j`, the number into the
/// nonorientable surface with `j` crosscaps. `f_0` is always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotalPoly {
    genus: Poly,
    crosscap: Poly,
}

impl TotalPoly {
    pub fn new(genus: Poly, crosscap: Poly) -> Result<Self, PolyError> {
        for (part, p) in [("genus", &genus), ("crosscap", &crosscap)] {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_integer() || c.is_negative() {
                    return Err(PolyError::NotCounting {
                        part,
                        degree: i,
                        value: c.to_string(),
                    });
                }
            }
        }
        if !crosscap.coeff(0).is_zero() {
            return Err(PolyError::CrosscapConstant(crosscap.coeff(0).to_string()));
        }
        Ok(TotalPoly { genus, crosscap })
    }

    /// Builds from plain counts, lowest degree first.
    pub fn from_counts(genus: &[u64], crosscap: &[u64]) -> Result<Self, PolyError> {
        Self::new(
            Poly::from_ints(genus.iter().copied()),
            Poly::from_ints(crosscap.iter().copied()),
        )
    }

    pub fn genus_part(&self) -> &Poly {
        &self.genus
    }

    pub fn crosscap_part(&self) -> &Poly {
        &self.crosscap
    }

    /// `g_0, g_1, ...` as nonnegative integers.
    pub fn genus_counts(&self) -> Vec<BigUint> {
        to_naturals(&self.genus)
    }

    /// `f_0 = 0, f_1, f_2, ...` as nonnegative integers.
    pub fn crosscap_counts(&self) -> Vec<BigUint> {
        to_naturals(&self.crosscap)
    }

    pub fn genus_sum(&self) -> BigUint {
        self.genus_counts().iter().sum()
    }

    pub fn crosscap_sum(&self) -> BigUint {
        self.crosscap_counts().iter().sum()
    }

    pub fn total_sum(&self) -> BigUint {
        self.genus_sum() + self.crosscap_sum()
    }

    /// Renders as `2+14x+14y+42y^2+56y^3`.
    pub fn render(&self) -> String {
        let g = self.genus.coeffs().iter().enumerate().map(|(i, c)| (i, "x", c));
        let f = self.crosscap.coeffs().iter().enumerate().map(|(i, c)| (i, "y", c));
        render_terms(g.chain(f).filter(|(_, _, c)| !c.is_zero()))
    }
}

fn to_naturals(p: &Poly) -> Vec<BigUint> {
    // Constructor guarantees nonnegative integers.
    p.coeffs()
        .iter()
        .map(|c| {
            let (sign, mag) = c.to_integer().into_parts();
            debug_assert!(sign != Sign::Minus);
            mag
        })
        .collect()
}

impl fmt::Display for TotalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn square_of_binomial() {
        let p = Poly::from_ints([1, 1]);
        assert_eq!(&p * &p, Poly::from_ints([1, 2, 1]));
    }

    #[test]
    fn ladder_two_sums_to_eight() {
        let l2 = Poly::from_ints([1, 3, 4]);
        assert_eq!(l2.eval(&BigRational::one()), q(8, 1));
        assert_eq!(l2.coeff_sum(), q(8, 1));
    }

    #[test]
    fn one_ladder_recurrence_step() {
        let l1 = Poly::from_ints([1, 1]);
        let l2 = Poly::from_ints([1, 3, 4]);
        let a1 = Poly::from_ints([1, 2]);
        let a2 = Poly::from_ints([0, 0, 4]);
        let l3 = &a1 * &l2 + &a2 * &l1;
        assert_eq!(l3, Poly::from_ints([1, 5, 14, 12]));
    }

    #[test]
    fn substitute_square_cases() {
        assert_eq!(
            Poly::from_ints([1, 0, 7]).substitute_square(),
            Poly::from_ints([1, 0, 0, 0, 7])
        );
        assert_eq!(
            Poly::from_ints([2, 14]).substitute_square(),
            Poly::from_ints([2, 0, 14])
        );
        assert_eq!(Poly::zero().substitute_square(), Poly::zero());
    }

    #[test]
    fn halves_recombine_exactly() {
        let half = Poly::constant(q(7, 2));
        let two = Poly::from_ints([2]);
        assert_eq!(&half * &two, Poly::from_ints([7]));
        assert!(!half.is_integral());
        assert!(half.to_integers().is_err());
    }

    #[test]
    fn trimming_and_degree() {
        let p = Poly::from_ints([1, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!((&p - &p).degree(), None);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn monomial_division() {
        let p = Poly::from_ints([0, 0, 4, 8]);
        assert_eq!(
            p.div_monomial(&q(4, 1), 2).unwrap(),
            Poly::from_ints([1, 2])
        );
        assert!(Poly::from_ints([1, 0, 4]).div_monomial(&q(1, 1), 1).is_err());
        assert_eq!(
            Poly::from_ints([0, 0, 16]).as_monomial(),
            Some((q(16, 1), 2))
        );
        assert_eq!(Poly::from_ints([1, 1]).as_monomial(), None);
    }

    #[test]
    fn rendering() {
        let r3 = Poly::from_ints([1, 7, 28, 28]);
        assert_eq!(r3.to_string(), "28z^3+28z^2+7z+1");
        assert_eq!(r3.render("y", TermOrder::Ascending), "1+7y+28y^2+28y^3");
        assert_eq!(Poly::from_ints([0, -1, 0, 2]).to_string(), "2z^3-z");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
        let h = Poly::from_coeffs(vec![q(1, 2), q(-7, 2)]);
        assert_eq!(h.to_string(), "-(7/2)z+1/2");
    }

    #[test]
    fn total_poly_rendering_and_sums() {
        let t = TotalPoly::from_counts(&[2, 14], &[0, 14, 42, 56]).unwrap();
        assert_eq!(t.render(), "2+14x+14y+42y^2+56y^3");
        assert_eq!(t.total_sum(), BigUint::from(128u32));
    }

    #[test]
    fn total_poly_rejects_bad_parts() {
        assert!(TotalPoly::from_counts(&[1], &[1, 2]).is_err());
        let neg = Poly::from_ints([0, -1]);
        assert!(TotalPoly::new(Poly::one(), neg).is_err());
        let frac = Poly::from_coeffs(vec![q(1, 2)]);
        assert!(TotalPoly::new(frac, Poly::zero()).is_err());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(Poly::from_ints)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn square_substitution_is_a_homomorphism(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(
                (&a * &b).substitute_square(),
                &a.substitute_square() * &b.substitute_square()
            );
        }
    }
}
