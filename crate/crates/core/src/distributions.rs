//! Rank-distribution polynomials of the four families by recurrence, by
//! Chebyshev closed form and by explicit coefficient formulas, and assembly
//! of the total embedding polynomial of a Ringel ladder.
//!
//! Family polynomials are indexed by matrix dimension `k` (`R_3(z)` counts
//! 3x3 matrices). The total embedding polynomial takes the ladder parameter
//! `n`, which names the graph `R_{n-1}` and uses `P_{n+1}` and `R_{n+1}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebyshev::{
    binom, closed_form_eval_with, solve_constants, ClosedFormConstants, RecurrenceSpec, ScaledU,
};
use crate::error::DistError;
use crate::family::Family;
use crate::overlap::{brute_rank_distribution, EnumConfig};
use crate::poly::{Poly, TotalPoly};

fn z_pow(c: i64, d: usize) -> Poly {
    Poly::monomial(BigRational::from_integer(c.into()), d)
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn check_index(family: Family, k: usize) -> Result<(), DistError> {
    let min = family.min_index();
    if k < min {
        return Err(DistError::BelowRange { family, k, min });
    }
    Ok(())
}

/// The family polynomials at indices `0..=up_to`; entries below the
/// family's minimum index are zero placeholders.
///
/// * `O_k = O_{k-1} + 2z^2 O_{k-2}` from `O_1 = 1`, `O_2 = z^2 + 1`
/// * `L_k = (1+2z) L_{k-1} + 4z^2 L_{k-2}` from `L_1 = 1+z`, `L_2 = 4z^2+3z+1`
/// * `P_k = P_{k-1} + 8z^2 P_{k-2} + 2^(k-2) z^2 O_{k-2}` from `P_2`, `P_3`
/// * `R_k = (4z+1) R_{k-1} + 16z^2 R_{k-2} + 2^(k-1) z^2 L_{k-2}` from `R_2`, `R_3`
pub fn recurrence_sequence(family: Family, up_to: usize) -> Vec<Poly> {
    let mut seq = vec![Poly::zero(); up_to + 1];
    let min = family.min_index();
    let initials = initial_values(family);
    for (k, slot) in seq.iter_mut().enumerate().skip(min).take(2) {
        *slot = initials[&k].clone();
    }
    let inner = match family {
        Family::P => recurrence_sequence(Family::O, up_to),
        Family::R => recurrence_sequence(Family::L, up_to),
        _ => Vec::new(),
    };
    for k in (min + 2)..=up_to {
        seq[k] = match family {
            Family::O => &seq[k - 1] + &(&z_pow(2, 2) * &seq[k - 2]),
            Family::L => &(&Poly::from_ints([1, 2]) * &seq[k - 1]) + &(&z_pow(4, 2) * &seq[k - 2]),
            Family::P => {
                let forcing = inner[k - 2].shift(2).scale_int(&pow2(k - 2));
                &(&seq[k - 1] + &(&z_pow(8, 2) * &seq[k - 2])) + &forcing
            }
            Family::R => {
                let forcing = inner[k - 2].shift(2).scale_int(&pow2(k - 1));
                &(&(&Poly::from_ints([1, 4]) * &seq[k - 1]) + &(&z_pow(16, 2) * &seq[k - 2]))
                    + &forcing
            }
        };
    }
    seq
}

/// One family polynomial by recurrence.
pub fn recurrence_poly(family: Family, k: usize) -> Result<Poly, DistError> {
    check_index(family, k)?;
    Ok(recurrence_sequence(family, k).swap_remove(k))
}

/// The two lowest polynomials of each family, taken as given data.
pub fn initial_values(family: Family) -> BTreeMap<usize, Poly> {
    match family {
        Family::O => BTreeMap::from([(1, Poly::one()), (2, Poly::from_ints([1, 0, 1]))]),
        Family::L => BTreeMap::from([
            (1, Poly::from_ints([1, 1])),
            (2, Poly::from_ints([1, 3, 4])),
        ]),
        Family::P => BTreeMap::from([
            (2, Poly::from_ints([1, 0, 1])),
            (3, Poly::from_ints([1, 0, 7])),
        ]),
        Family::R => BTreeMap::from([
            (2, Poly::from_ints([1, 3, 4])),
            (3, Poly::from_ints([1, 7, 28, 28])),
        ]),
    }
}

/// Homogeneous coefficients `(a1, a2)` of each family's recurrence.
pub fn recurrence_coefficients(family: Family) -> (Poly, Poly) {
    match family {
        Family::O => (Poly::one(), z_pow(2, 2)),
        Family::L => (Poly::from_ints([1, 2]), z_pow(4, 2)),
        Family::P => (Poly::one(), z_pow(8, 2)),
        Family::R => (Poly::from_ints([1, 4]), z_pow(16, 2)),
    }
}

/// Recurrence data for the closed-form solver. `P` and `R` carry the
/// particular solutions `Y_k = 2^(k-1) z^2 O_{k-1}` and `Y_k = 2^k z^2 L_{k-1}`;
/// the inner `O`/`L` values come from their own closed forms.
pub fn family_spec(family: Family) -> RecurrenceSpec {
    let (a1, a2) = recurrence_coefficients(family);
    let spec = RecurrenceSpec::homogeneous(a1, a2, initial_values(family));
    match family {
        Family::O | Family::L => spec,
        Family::P | Family::R => {
            let inner_family = if family == Family::P { Family::O } else { Family::L };
            let inner = ClosedForm::new(inner_family).expect("inner family solves");
            let inner = Arc::new(std::sync::Mutex::new(inner));
            let exponent_shift = usize::from(family == Family::R);
            spec.with_particular(Arc::new(move |k: usize| {
                if k < 2 {
                    return Poly::zero();
                }
                let inner_k = inner.lock().expect("inner closed form").eval(k - 1);
                inner_k
                    .expect("inner index in range")
                    .shift(2)
                    .scale_int(&pow2(k - 1 + exponent_shift))
            }))
        }
    }
}

/// Solved closed form of one family, with its power table.
#[derive(Debug)]
pub struct ClosedForm {
    pub family: Family,
    pub spec: RecurrenceSpec,
    pub constants: ClosedFormConstants,
    table: ScaledU,
}

impl ClosedForm {
    pub fn new(family: Family) -> Result<Self, DistError> {
        let spec = family_spec(family);
        let constants = solve_constants(&spec)?;
        let table = ScaledU::new(spec.a1.clone(), spec.a2.clone());
        Ok(ClosedForm {
            family,
            spec,
            constants,
            table,
        })
    }

    pub fn eval(&mut self, k: usize) -> Result<Poly, DistError> {
        check_index(self.family, k)?;
        Ok(closed_form_eval_with(
            &mut self.table,
            &self.spec,
            &self.constants,
            k,
        )?)
    }
}

/// One family polynomial through the Chebyshev closed form.
pub fn closed_form_poly(family: Family, k: usize) -> Result<Poly, DistError> {
    ClosedForm::new(family)?.eval(k)
}

fn pow_q(base: i64, e: i64) -> BigRational {
    let b = BigRational::from_integer(base.into());
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

/// `sum_{j=0}^{floor(top/2)} binom(a - j, j) binom(b - 2j, c)`; empty when
/// `top < 0`.
fn bsum(top: i64, a: i64, b: i64, c: i64) -> BigInt {
    if top < 0 {
        return BigInt::zero();
    }
    (0..=top.div_euclid(2))
        .map(|j| binom(a - j, j) * binom(b - 2 * j, c))
        .sum()
}

fn integral(family: Family, n: usize, m: usize, v: BigRational) -> Result<BigInt, DistError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(DistError::NonIntegral {
            family,
            n,
            m,
            value: v.to_string(),
        })
    }
}

/// Coefficient of `z^rank` in `O_n`: zero for odd rank, and for
/// `rank = 2m`, `binom(n-m, m) 2^m - binom(n-m-1, m-1) 2^(m-1)`.
pub fn coeff_o_closed(n: usize, rank: usize) -> BigInt {
    if rank % 2 == 1 {
        return BigInt::zero();
    }
    let (n, m) = (n as i64, (rank / 2) as i64);
    let first = binom(n - m, m) * pow2(m as usize);
    let second = if m >= 1 {
        binom(n - m - 1, m - 1) * pow2((m - 1) as usize)
    } else {
        BigInt::zero()
    };
    first - second
}

/// Coefficient of `z^m` in `L_n`, with the third sum subtracted.
pub fn coeff_l_closed(n: usize, m: usize) -> Result<BigInt, DistError> {
    coeff_l_signed(n, m, -1)
}

/// The `L` coefficient formula with its third sum added, as printed.
pub fn coeff_l_printed(n: usize, m: usize) -> Result<BigInt, DistError> {
    coeff_l_signed(n, m, 1)
}

fn coeff_l_signed(n: usize, m: usize, third_sign: i64) -> Result<BigInt, DistError> {
    let (ni, mi) = (n as i64, m as i64);
    let first = BigRational::from_integer(bsum(mi, ni, ni, ni - mi)) * pow_q(2, mi);
    let second = BigRational::from_integer(bsum(mi - 1, ni - 1, ni - 1, ni - mi)) * pow_q(2, mi - 1);
    let third = BigRational::from_integer(bsum(mi - 2, ni - 2, ni - 2, ni - mi) * third_sign)
        * pow_q(2, mi - 1);
    integral(Family::L, n, m, first - second + third)
}

/// Coefficient of `z^m` in `P_n` (`n >= 2`), read off the expansion
/// `S_n - (z^2+1)/2 S_{n-1} - (17z^2-1)/2 S_{n-2} + 2^(n-1) z^2 O_{n-1}`
/// with `a1 = 1`, `a2 = 8z^2`, where `[z^(2t)] S_k = binom(k-t, t) 8^t`.
pub fn coeff_p_closed(n: usize, m: usize) -> Result<BigInt, DistError> {
    check_index(Family::P, n)?;
    if m % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let s = |k: i64, t: i64| -> BigRational {
        if t < 0 {
            return BigRational::zero();
        }
        BigRational::from_integer(binom(k - t, t)) * pow_q(8, t)
    };
    let (k, t) = (n as i64, (m / 2) as i64);
    let half = BigRational::new(1.into(), 2.into());
    let v = s(k, t) - &half * (s(k - 1, t - 1) + s(k - 1, t))
        - &half * (BigRational::from_integer(17.into()) * s(k - 2, t - 1) - s(k - 2, t))
        + BigRational::from_integer(
            pow2(n - 1) * if m >= 2 { coeff_o_closed(n - 1, m - 2) } else { BigInt::zero() },
        );
    integral(Family::P, n, m, v)
}

/// The eight-term coefficient formula for `z^m` in `R_n` (`n >= 2`), in
/// exact rationals. Its last term uses the `L` coefficients.
pub fn coeff_r_rational(n: usize, m: usize) -> Result<BigRational, DistError> {
    check_index(Family::R, n)?;
    let (ni, mi) = (n as i64, m as i64);
    let q = |v: BigInt| BigRational::from_integer(v);
    let half = BigRational::new(1.into(), 2.into());
    let mut v = q(bsum(mi, ni, ni, ni - mi)) * pow_q(4, mi);
    v -= q(bsum(mi - 2, ni - 1, ni - 1, ni - mi + 1)) * pow_q(4, mi - 2);
    v -= BigRational::new(7.into(), 2.into()) * q(bsum(mi - 1, ni - 1, ni - 1, ni - mi)) * pow_q(4, mi - 1);
    v -= &half * q(bsum(mi, ni - 1, ni - 1, ni - mi - 1)) * pow_q(4, mi);
    v -= q(17.into()) * q(bsum(mi - 2, ni - 2, ni - 2, ni - mi)) * pow_q(4, mi - 2);
    v += &half * q(bsum(mi - 1, ni - 2, ni - 2, ni - mi - 1)) * pow_q(4, mi - 1);
    v += &half * q(bsum(mi, ni - 2, ni - 2, ni - mi - 2)) * pow_q(4, mi);
    if m >= 2 {
        v += q(pow2(n) * coeff_l_closed(n - 1, m - 2)?);
    }
    Ok(v)
}

/// [`coeff_r_rational`], asserted integral.
pub fn coeff_r_closed(n: usize, m: usize) -> Result<BigInt, DistError> {
    integral(Family::R, n, m, coeff_r_rational(n, m)?)
}

/// All coefficients `0..=k` of a family polynomial from the explicit
/// coefficient formulas.
pub fn closed_coefficients(family: Family, k: usize) -> Result<Vec<BigInt>, DistError> {
    check_index(family, k)?;
    (0..=k)
        .map(|m| match family {
            Family::O => Ok(coeff_o_closed(k, m)),
            Family::L => coeff_l_closed(k, m),
            Family::P => coeff_p_closed(k, m),
            Family::R => coeff_r_closed(k, m),
        })
        .collect()
}

/// Genus polynomial from `P_{n+1}`: `g_m = 2 [z^(2m)] P_{n+1}`.
pub fn orientable_from_p(p: &Poly) -> Result<Poly, DistError> {
    let deg = p.degree().unwrap_or(0);
    let mut g = Vec::with_capacity(deg / 2 + 1);
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 1 {
            if !c.is_zero() {
                return Err(DistError::Inconsistent(format!(
                    "zero-diagonal family has odd rank {i} with count {c}"
                )));
            }
        } else {
            g.push(c * BigRational::from_integer(2.into()));
        }
    }
    Ok(Poly::from_coeffs(g))
}

/// `I(x, y)` from `P_{n+1}` and `R_{n+1}`: genus part `g` from
/// [`orientable_from_p`], crosscap part `2 R_{n+1}(y) - g(y^2)`.
pub fn assemble_total(p_next: &Poly, r_next: &Poly) -> Result<TotalPoly, DistError> {
    let genus = orientable_from_p(p_next)?;
    let crosscap = &r_next.scale_int(&BigInt::from(2)) - &genus.substitute_square();
    TotalPoly::new(genus, crosscap).map_err(|e| DistError::Inconsistent(e.to_string()))
}

fn check_total_param(n: usize) -> Result<(), DistError> {
    if n < 2 {
        return Err(DistError::TotalBelowRange(n));
    }
    Ok(())
}

/// Genus polynomial of `R_{n-1}`.
pub fn orientable_part(n: usize) -> Result<Poly, DistError> {
    check_total_param(n)?;
    orientable_from_p(&recurrence_poly(Family::P, n + 1)?)
}

/// Total embedding polynomial of `R_{n-1}` by recurrence.
pub fn total_embedding_poly(n: usize) -> Result<TotalPoly, DistError> {
    check_total_param(n)?;
    assemble_total(
        &recurrence_poly(Family::P, n + 1)?,
        &recurrence_poly(Family::R, n + 1)?,
    )
}

/// Total embedding polynomial from the explicit coefficient formulas.
pub fn total_embedding_poly_closed(n: usize) -> Result<TotalPoly, DistError> {
    check_total_param(n)?;
    let p = Poly::from_ints(closed_coefficients(Family::P, n + 1)?);
    let r = Poly::from_ints(closed_coefficients(Family::R, n + 1)?);
    assemble_total(&p, &r)
}

/// Total embedding polynomial from brute-force `P` and `R` rank counts.
pub fn total_embedding_poly_brute(n: usize, cfg: &EnumConfig) -> Result<TotalPoly, DistError> {
    check_total_param(n)?;
    let p = brute_rank_distribution(Family::P, n, cfg)?.as_poly();
    let r = brute_rank_distribution(Family::R, n, cfg)?.as_poly();
    assemble_total(&p, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn ints(p: &Poly) -> Vec<i64> {
        p.to_integers()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_poly(Family::P, 4).unwrap(), Poly::from_ints([1, 0, 19, 0, 12]));
        assert_eq!(recurrence_poly(Family::P, 5).unwrap(), Poly::from_ints([1, 0, 35, 0, 92]));
        assert_eq!(recurrence_poly(Family::R, 3).unwrap(), Poly::from_ints([1, 7, 28, 28]));
        assert_eq!(recurrence_poly(Family::O, 1).unwrap(), Poly::one());
        assert_eq!(recurrence_poly(Family::O, 3).unwrap(), Poly::from_ints([1, 0, 3]));
        assert_eq!(recurrence_poly(Family::L, 3).unwrap(), Poly::from_ints([1, 5, 14, 12]));
        assert_eq!(
            recurrence_poly(Family::R, 4).unwrap(),
            Poly::from_ints([1, 11, 80, 212, 208])
        );
    }

    #[test]
    fn recurrence_index_errors() {
        assert!(matches!(
            recurrence_poly(Family::R, 1),
            Err(DistError::BelowRange { min: 2, .. })
        ));
        assert!(recurrence_poly(Family::O, 0).is_err());
        assert!(total_embedding_poly(1).is_err());
    }

    #[test]
    fn family_sums_and_degrees() {
        for family in Family::ALL {
            let seq = recurrence_sequence(family, 40);
            for k in family.min_index()..=40 {
                let n = family.param(k);
                let want = BigRational::from_integer(pow2(family.free_bits(n) as usize));
                assert_eq!(seq[k].coeff_sum(), want, "{family}_{k}");
                assert!(seq[k].degree().unwrap() <= k);
                assert!(seq[k].coeffs().iter().all(|c| c.is_integer() && *c >= BigRational::zero()));
            }
        }
    }

    #[test]
    fn particular_solutions_satisfy_inhomogeneous_recurrences() {
        let o = recurrence_sequence(Family::O, 20);
        let l = recurrence_sequence(Family::L, 20);
        // Y_k for P is 2^(k-1) z^2 O_{k-1}; for R it is 2^k z^2 L_{k-1}.
        let yp = |k: usize| o[k - 1].shift(2).scale_int(&pow2(k - 1));
        let yr = |k: usize| l[k - 1].shift(2).scale_int(&pow2(k));
        for k in 4..=20 {
            let rhs = &(&yp(k - 1) + &(&z_pow(8, 2) * &yp(k - 2)))
                + &o[k - 2].shift(2).scale_int(&pow2(k - 2));
            assert_eq!(yp(k), rhs, "P particular at {k}");
            let rhs = &(&(&Poly::from_ints([1, 4]) * &yr(k - 1)) + &(&z_pow(16, 2) * &yr(k - 2)))
                + &l[k - 2].shift(2).scale_int(&pow2(k - 1));
            assert_eq!(yr(k), rhs, "R particular at {k}");
        }
    }

    #[test]
    fn solved_constants() {
        let half = |p: Poly| p.scale(&BigRational::new(1.into(), 2.into()));
        let l = ClosedForm::new(Family::L).unwrap().constants;
        assert_eq!(l.b.as_poly(), Some(&Poly::from_ints([0, -1])));
        assert_eq!(l.c.as_poly(), Some(&Poly::from_ints([0, 0, -2])));

        let p = ClosedForm::new(Family::P).unwrap().constants;
        assert_eq!(p.b.as_poly(), Some(&half(Poly::from_ints([-1, 0, -1]))));
        assert_eq!(p.c.as_poly(), Some(&half(Poly::from_ints([1, 0, -17]))));

        let r = ClosedForm::new(Family::R).unwrap().constants;
        assert_eq!(r.b.as_poly(), Some(&half(Poly::from_ints([-1, -7, -2]))));
        assert_eq!(r.c.as_poly(), Some(&half(Poly::from_ints([1, 1, -34]))));

        let o = ClosedForm::new(Family::O).unwrap().constants;
        assert_eq!(o.b.as_poly(), Some(&Poly::zero()));
        assert_eq!(o.c.as_poly(), Some(&Poly::from_ints([0, 0, -1])));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(ints(&closed_form_poly(Family::P, 3).unwrap()), vec![1, 0, 7]);
        assert_eq!(ints(&closed_form_poly(Family::R, 2).unwrap()), vec![1, 3, 4]);
        assert_eq!(
            ints(&closed_form_poly(Family::R, 4).unwrap()),
            vec![1, 11, 80, 212, 208]
        );
    }

    #[test]
    fn closed_form_matches_recurrence_to_sixty() {
        for family in Family::ALL {
            let seq = recurrence_sequence(family, 60);
            let mut cf = ClosedForm::new(family).unwrap();
            for k in family.min_index()..=60 {
                assert_eq!(cf.eval(k).unwrap(), seq[k], "{family}_{k}");
            }
        }
    }

    #[test]
    fn coefficient_formula_examples() {
        assert_eq!(coeff_o_closed(3, 2), BigInt::from(3));
        assert_eq!(coeff_o_closed(2, 2), BigInt::from(1));
        for n in 1..10 {
            for r in (1..=n).step_by(2) {
                assert_eq!(coeff_o_closed(n, r), BigInt::zero());
            }
        }
        assert_eq!(coeff_l_closed(2, 2).unwrap(), BigInt::from(4));
        assert_eq!(coeff_l_closed(3, 2).unwrap(), BigInt::from(14));
        assert_eq!(coeff_l_closed(1, 0).unwrap(), BigInt::from(1));
        assert_eq!(coeff_l_printed(2, 2).unwrap(), BigInt::from(8));
        assert_eq!(coeff_p_closed(3, 2).unwrap(), BigInt::from(7));
        assert_eq!(coeff_p_closed(4, 4).unwrap(), BigInt::from(12));
        assert_eq!(coeff_p_closed(5, 4).unwrap(), BigInt::from(92));
        assert_eq!(coeff_r_closed(3, 1).unwrap(), BigInt::from(7));
        assert_eq!(coeff_r_closed(3, 3).unwrap(), BigInt::from(28));
        assert_eq!(coeff_r_closed(4, 4).unwrap(), BigInt::from(208));
    }

    #[test]
    fn coefficient_formulas_match_recurrence_to_sixty() {
        for family in Family::ALL {
            let seq = recurrence_sequence(family, 60);
            for k in family.min_index()..=60 {
                let got = Poly::from_ints(closed_coefficients(family, k).unwrap());
                assert_eq!(got, seq[k], "{family}_{k}");
            }
        }
    }

    #[test]
    fn orientable_part_examples() {
        assert_eq!(ints(&orientable_part(2).unwrap()), vec![2, 14]);
        assert_eq!(ints(&orientable_part(3).unwrap()), vec![2, 38, 24]);
        assert_eq!(ints(&orientable_part(6).unwrap()), vec![2, 198, 1656, 2240]);
    }

    #[test]
    fn total_examples() {
        let t = total_embedding_poly(2).unwrap();
        assert_eq!(t.render(), "2+14x+14y+42y^2+56y^3");
        let t = total_embedding_poly(3).unwrap();
        assert_eq!(t.render(), "2+38x+24x^2+22y+122y^2+424y^3+392y^4");
    }

    #[test]
    fn total_counting_identities() {
        for n in 2..=40 {
            let t = total_embedding_poly(n).unwrap();
            let four_n = BigUint::from(1u8) << (2 * n);
            assert_eq!(t.genus_sum(), four_n.clone());
            assert_eq!(t.crosscap_sum(), ((BigUint::from(1u8) << (n + 1)) - 1u8) * four_n);
            assert!(t.crosscap_part().degree().unwrap() <= n + 1);
            assert!(t.genus_part().degree().unwrap() <= (n + 1) / 2);
        }
    }

    #[test]
    fn three_routes_to_the_total() {
        let cfg = EnumConfig::with_workers(2);
        for n in 2..=5 {
            let rec = total_embedding_poly(n).unwrap();
            assert_eq!(total_embedding_poly_closed(n).unwrap(), rec);
            assert_eq!(total_embedding_poly_brute(n, &cfg).unwrap(), rec);
        }
    }
}
