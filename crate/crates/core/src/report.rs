//! Cross-method verification, reproduction of the reference total
//! embedding polynomials, and the errata report.
//!
//! Every errata entry is computed, not written down: it pairs the formula
//! as printed with an oracle and searches for the first argument where they
//! disagree. If a suspected typo turns out to be right, the entry reports
//! that no witness was found.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebyshev::{closed_form_eval_with, scaled_u_expansion, ClosedFormConstants, ScaledU};
use crate::distributions::{
    closed_coefficients, coeff_l_closed, coeff_l_printed, coeff_o_closed, coeff_r_closed,
    family_spec, recurrence_sequence, total_embedding_poly, total_embedding_poly_brute,
    total_embedding_poly_closed, ClosedForm,
};
use crate::error::{DistError, ReportError};
use crate::family::Family;
use crate::oracle::{survey, total_poly_by_tracing, TraceConfig};
use crate::overlap::{brute_rank_distribution, max_brute_param, EnumConfig};
use crate::parallel;
use crate::poly::{Poly, TotalPoly};

/// The five reference total embedding polynomials, keyed by ladder
/// parameter `n` (graph `R_{n-1}`).
pub const REFERENCE_TOTALS: [(usize, &str); 5] = [
    (2, "2+14x+14y+42y^2+56y^3"),
    (3, "2+38x+24x^2+22y+122y^2+424y^3+392y^4"),
    (4, "2+70x+184x^2+30y+242y^2+1448y^3+3272y^4+2944y^5"),
    (
        5,
        "2+118x+648x^2+256x^3+38y+410y^2+3496y^3+12952y^4+26880y^5+20736y^6",
    ),
    (
        6,
        "2+198x+1656x^2+2240x^3+46y+642y^2+7240y^3+36808y^4+120832y^5+207168y^6+147456y^7",
    ),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableLine {
    /// Graph name, `R_1` through `R_5`.
    pub graph: String,
    pub n: usize,
    pub expected: String,
    pub computed: String,
}

impl TableLine {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Recomputes each reference total polynomial by recurrence and assembly.
pub fn table_check() -> Result<Vec<TableLine>, DistError> {
    REFERENCE_TOTALS
        .iter()
        .map(|&(n, expected)| {
            Ok(TableLine {
                graph: format!("R_{}", n - 1),
                n,
                expected: expected.to_string(),
                computed: total_embedding_poly(n)?.render(),
            })
        })
        .collect()
}

/// The first disagreement found by a check: `family` is `O`, `L`, `P`,
/// `R`, `genus` or `crosscap`; `n` is the polynomial index (ladder
/// parameter for totals) and `rank` the exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub family: String,
    pub n: usize,
    pub rank: usize,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, m={}, {}, {})",
            self.family, self.n, self.rank, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// What was compared, e.g. `"n=1..=8"`.
    pub scope: String,
    pub counterexample: Option<Counterexample>,
    /// Failure that is not a coefficient mismatch.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.failure.is_none()
    }

    fn new(name: &str, scope: String) -> Self {
        Check {
            name: name.to_string(),
            scope,
            counterexample: None,
            failure: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n_brute: usize,
    pub max_n_trace: usize,
    pub max_n_closed: usize,
    pub workers: usize,
    /// Test fixture: use the `L` coefficient formula with its third sum
    /// added instead of subtracted.
    pub corrupt_l_coefficients: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n_brute: 8,
            max_n_trace: 5,
            max_n_closed: 40,
            workers: parallel::default_workers(),
            corrupt_l_coefficients: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn coeff_string(p: &Poly, i: usize) -> String {
    p.coeff(i).to_string()
}

fn first_poly_diff(family: &str, n: usize, expected: &Poly, got: &Poly) -> Option<Counterexample> {
    let top = expected.coeffs().len().max(got.coeffs().len());
    (0..top)
        .find(|&i| expected.coeff(i) != got.coeff(i))
        .map(|rank| Counterexample {
            family: family.to_string(),
            n,
            rank,
            expected: coeff_string(expected, rank),
            got: coeff_string(got, rank),
        })
}

fn first_total_diff(n: usize, expected: &TotalPoly, got: &TotalPoly) -> Option<Counterexample> {
    first_poly_diff("genus", n, expected.genus_part(), got.genus_part())
        .or_else(|| first_poly_diff("crosscap", n, expected.crosscap_part(), got.crosscap_part()))
}

/// Runs every cross-method comparison and invariant within the caps.
///
/// Returns `Err(ReportError::Infeasible)` when a cap exceeds what the
/// enumerators accept.
pub fn verify(cfg: &VerifyConfig) -> Result<VerifyReport, ReportError> {
    let enum_cfg = EnumConfig::with_workers(cfg.workers);
    for family in Family::ALL {
        let cap = max_brute_param(family, enum_cfg.max_bits);
        if cfg.max_n_brute > cap {
            return Err(ReportError::Infeasible(format!(
                "brute force for {family} is capped at n = {cap}, asked for {}",
                cfg.max_n_brute
            )));
        }
    }
    let trace_cfg = TraceConfig::with_workers(cfg.workers);
    if cfg.max_n_trace > trace_cfg.max_n {
        return Err(ReportError::Infeasible(format!(
            "face tracing is capped at n = {}, asked for {}",
            trace_cfg.max_n, cfg.max_n_trace
        )));
    }

    let closed_top = cfg.max_n_closed.max(cfg.max_n_brute + 1);
    let rec: Vec<Vec<Poly>> = Family::ALL
        .iter()
        .map(|&f| recurrence_sequence(f, closed_top + 1))
        .collect();
    let mut checks = Vec::new();

    let mut c = Check::new("bruteforce = recurrence", format!("n=1..={}", cfg.max_n_brute));
    'brute: for (fi, &family) in Family::ALL.iter().enumerate() {
        for n in 1..=cfg.max_n_brute {
            let got = brute_rank_distribution(family, n, &enum_cfg)?.as_poly();
            let k = family.dim(n);
            if let Some(ce) = first_poly_diff(family.symbol(), k, &rec[fi][k], &got) {
                c.counterexample = Some(ce);
                break 'brute;
            }
        }
    }
    checks.push(c);

    let mut c = Check::new(
        "coefficient formulas = recurrence",
        format!("k<={}", cfg.max_n_closed),
    );
    'coeff: for (fi, &family) in Family::ALL.iter().enumerate() {
        for k in family.min_index()..=cfg.max_n_closed {
            let got = if family == Family::L && cfg.corrupt_l_coefficients {
                (0..=k).map(|m| coeff_l_printed(k, m)).collect::<Result<Vec<_>, _>>()
            } else {
                closed_coefficients(family, k)
            };
            let got = match got {
                Ok(v) => Poly::from_ints(v),
                Err(e) => {
                    c.failure = Some(e.to_string());
                    break 'coeff;
                }
            };
            if let Some(ce) = first_poly_diff(family.symbol(), k, &rec[fi][k], &got) {
                c.counterexample = Some(ce);
                break 'coeff;
            }
        }
    }
    checks.push(c);

    let mut c = Check::new(
        "Chebyshev closed form = recurrence",
        format!("k<={}", cfg.max_n_closed),
    );
    'cheb: for (fi, &family) in Family::ALL.iter().enumerate() {
        let mut cf = ClosedForm::new(family)?;
        for k in family.min_index()..=cfg.max_n_closed {
            let got = cf.eval(k)?;
            if let Some(ce) = first_poly_diff(family.symbol(), k, &rec[fi][k], &got) {
                c.counterexample = Some(ce);
                break 'cheb;
            }
        }
    }
    checks.push(c);

    let totals: Vec<TotalPoly> = (2..=closed_top)
        .map(total_embedding_poly)
        .collect::<Result<_, _>>()?;
    let total_at = |n: usize| &totals[n - 2];

    let mut c = Check::new("bruteforce total = recurrence total", format!("n=2..={}", cfg.max_n_brute));
    for n in 2..=cfg.max_n_brute {
        let got = total_embedding_poly_brute(n, &enum_cfg)?;
        if let Some(ce) = first_total_diff(n, total_at(n), &got) {
            c.counterexample = Some(ce);
            break;
        }
    }
    checks.push(c);

    let mut c = Check::new("closed total = recurrence total", format!("n=2..={}", cfg.max_n_closed));
    for n in 2..=cfg.max_n_closed {
        let got = total_embedding_poly_closed(n)?;
        if let Some(ce) = first_total_diff(n, total_at(n), &got) {
            c.counterexample = Some(ce);
            break;
        }
    }
    checks.push(c);

    let mut c = Check::new("traced total = recurrence total", format!("n=2..={}", cfg.max_n_trace));
    for n in 2..=cfg.max_n_trace {
        let got = total_poly_by_tracing(n, &trace_cfg)?;
        if let Some(ce) = first_total_diff(n, total_at(n), &got) {
            c.counterexample = Some(ce);
            break;
        }
    }
    checks.push(c);

    let mut c = Check::new("counting identities", format!("n=2..={}", cfg.max_n_closed));
    for n in 2..=cfg.max_n_closed {
        if let Some(msg) = counting_identity_failure(n, total_at(n), &rec) {
            c.failure = Some(msg);
            break;
        }
    }
    checks.push(c);

    let mut c = Check::new(
        "rank = surface and two-to-one matrix map",
        format!("n=2..={}", cfg.max_n_trace),
    );
    for n in 2..=cfg.max_n_trace {
        let s = survey(n, &trace_cfg)?;
        if let Some(e) = s.mohar_exceptions.first() {
            c.failure = Some(format!(
                "n={n}: system {} has rank {} on {}",
                e.code, e.rank, e.surface
            ));
        } else if !s.two_to_one() {
            c.failure = Some(format!("n={n}: preimage histogram {:?}", s.preimage_histogram));
        } else if s.sanity_violations > 0 {
            c.failure = Some(format!("n={n}: {} face-count violations", s.sanity_violations));
        }
        if c.failure.is_some() {
            break;
        }
    }
    checks.push(c);

    let mut c = Check::new("reference totals", "R_1..R_5".to_string());
    for line in table_check()? {
        if !line.passed() {
            c.failure = Some(format!(
                "{}: expected {}, got {}",
                line.graph, line.expected, line.computed
            ));
            break;
        }
    }
    checks.push(c);

    Ok(VerifyReport { checks })
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Sum checks at ladder parameter `n`, or a description of the first one
/// that fails. `rec` holds recurrence sequences in `Family::ALL` order.
fn counting_identity_failure(n: usize, total: &TotalPoly, rec: &[Vec<Poly>]) -> Option<String> {
    let expect = [
        ("genus sum", total.genus_sum(), pow2(2 * n)),
        (
            "crosscap sum",
            total.crosscap_sum(),
            (pow2(n + 1) - 1u32) * pow2(2 * n),
        ),
        ("total sum", total.total_sum(), pow2(3 * n + 1)),
    ];
    for (what, got, want) in expect {
        if got != want {
            return Some(format!("n={n}: {what} is {got}, expected {want}"));
        }
    }
    for (fi, &family) in Family::ALL.iter().enumerate() {
        let k = family.dim(n);
        let got = rec[fi][k].coeff_sum();
        let want = BigRational::from_integer(BigInt::from(pow2(family.free_bits(n) as usize)));
        if got != want {
            return Some(format!("n={n}: {family}_{k}(1) is {got}, expected {want}"));
        }
    }
    None
}

/// The smallest argument where a printed formula and its oracle differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub m: Option<usize>,
    pub printed: String,
    pub correct: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "n={}, m={}: ", self.n, m)?,
            None => write!(f, "n={}: ", self.n)?,
        }
        write!(f, "printed {}, correct {}", self.printed, self.correct)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrataEntry {
    pub id: &'static str,
    pub location: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub witness: Option<Witness>,
    /// Largest `n` searched.
    pub searched_to: usize,
}

impl fmt::Display for ErrataEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}", self.id, self.location)?;
        writeln!(f, "  printed:   {}", self.printed)?;
        writeln!(f, "  corrected: {}", self.corrected)?;
        match &self.witness {
            Some(w) => write!(f, "  witness:   {w}"),
            None => write!(f, "  witness:   no witness \u{2264} {}", self.searched_to),
        }
    }
}

pub const ERRATA_SEARCH_LIMIT: usize = 60;

fn poly_z(p: &Poly) -> String {
    p.render("z", crate::poly::TermOrder::Ascending)
}

/// First `k` in `range` where two polynomial evaluators differ.
fn search_poly(
    range: impl Iterator<Item = usize>,
    mut printed: impl FnMut(usize) -> Poly,
    mut correct: impl FnMut(usize) -> Poly,
) -> Option<Witness> {
    for k in range {
        let (p, c) = (printed(k), correct(k));
        if p != c {
            return Some(Witness {
                n: k,
                m: None,
                printed: poly_z(&p),
                correct: poly_z(&c),
            });
        }
    }
    None
}

/// First `(n, m)` in lexicographic order where two coefficient evaluators
/// differ, over `0 <= m <= n`.
fn search_coeff(
    range: impl Iterator<Item = usize>,
    mut printed: impl FnMut(usize, usize) -> Result<BigInt, DistError>,
    mut correct: impl FnMut(usize, usize) -> BigInt,
) -> Result<Option<Witness>, DistError> {
    for n in range {
        for m in 0..=n {
            let (p, c) = (printed(n, m)?, correct(n, m));
            if p != c {
                return Ok(Some(Witness {
                    n,
                    m: Some(m),
                    printed: p.to_string(),
                    correct: c.to_string(),
                }));
            }
        }
    }
    Ok(None)
}

fn rec_coeff(seq: &[Poly], n: usize, m: usize) -> BigInt {
    seq[n].coeff(m).to_integer()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn poly_q(coeffs: &[(i64, i64)]) -> Poly {
    Poly::from_coeffs(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
}

/// Closed form of `family` with the given constants and an optionally
/// replaced `a1`.
fn closed_form_with(family: Family, consts: &ClosedFormConstants, a1: Option<Poly>) -> impl FnMut(usize) -> Poly {
    let spec = family_spec(family);
    let mut table = ScaledU::new(a1.unwrap_or_else(|| spec.a1.clone()), spec.a2.clone());
    let consts = consts.clone();
    move |k| closed_form_eval_with(&mut table, &spec, &consts, k).expect("index in range")
}

/// All errata entries, each with its smallest witness.
pub fn errata() -> Result<Vec<ErrataEntry>, ReportError> {
    let limit = ERRATA_SEARCH_LIMIT;
    let rec: Vec<Vec<Poly>> = Family::ALL
        .iter()
        .map(|&f| recurrence_sequence(f, limit))
        .collect();
    let [rec_o, rec_l, rec_p, rec_r] = [&rec[0], &rec[1], &rec[2], &rec[3]];
    let mut out = Vec::new();

    // Chebyshev expansion without the a2^j factor, tried on the R family's
    // a1 = 1+4z, a2 = 16z^2. Setting a2 = 1 in the correct sum drops it.
    let (a1, a2) = (Poly::from_ints([1, 4]), Poly::from_ints([0, 0, 16]));
    out.push(ErrataEntry {
        id: "scaled-u-expansion",
        location: "binomial expansion of (i sqrt(a2))^k U_k(a1 / (2 i sqrt(a2)))",
        printed: "sum_j binom(k-j, j) a1^(k-2j)",
        corrected: "sum_j binom(k-j, j) a1^(k-2j) a2^j",
        witness: search_poly(
            0..=limit,
            |k| scaled_u_expansion(k, &a1, &Poly::one()),
            |k| scaled_u_expansion(k, &a1, &a2),
        ),
        searched_to: limit,
    });

    let printed_l = ClosedFormConstants::from_polys(Poly::one(), poly_q(&[(0, 1), (-1, 1)]), poly_q(&[(0, 1), (0, 1), (2, 1)]));
    out.push(ErrataEntry {
        id: "l-closed-form-constant",
        location: "closed form of L_k, coefficient of U_{k-2}",
        printed: "-1/2 U_{k-2}, i.e. +2z^2 S_{k-2}",
        corrected: "+1/2 U_{k-2}, i.e. -2z^2 S_{k-2}",
        witness: search_poly(
            1..=limit,
            closed_form_with(Family::L, &printed_l, None),
            |k| rec_l[k].clone(),
        ),
        searched_to: limit,
    });

    let r_b = poly_q(&[(-1, 2), (-7, 2), (-1, 1)]);
    let printed_r = ClosedFormConstants::from_polys(Poly::one(), r_b, poly_q(&[(-1, 2), (-1, 2), (17, 1)]));
    out.push(ErrataEntry {
        id: "r-closed-form-constant",
        location: "closed form of R_k, third term",
        printed: "+(34z^2-z-1)/2 S_{k-2}",
        corrected: "-(34z^2-z-1)/2 S_{k-2}",
        witness: search_poly(
            2..=limit,
            closed_form_with(Family::R, &printed_r, None),
            |k| rec_r[k].clone(),
        ),
        searched_to: limit,
    });

    let p_consts = ClosedForm::new(Family::P)?.constants;
    out.push(ErrataEntry {
        id: "p-chebyshev-argument",
        location: "closed form of P_k, argument of U",
        printed: "U_k(1 / (2 sqrt(2) i z))",
        corrected: "U_k(1 / (4 sqrt(2) i z))",
        witness: search_poly(
            2..=limit,
            closed_form_with(Family::P, &p_consts, Some(Poly::constant(q(2, 1)))),
            |k| rec_p[k].clone(),
        ),
        searched_to: limit,
    });

    out.push(ErrataEntry {
        id: "l-coefficient-sign",
        location: "coefficient formula for L_n(m), third sum",
        printed: "+ sum_j binom(n-2-j, j) binom(n-2-2j, n-m) 2^(m-1)",
        corrected: "- sum_j binom(n-2-j, j) binom(n-2-2j, n-m) 2^(m-1)",
        witness: search_coeff(1..=limit, coeff_l_printed, |n, m| rec_coeff(rec_l, n, m))?,
        searched_to: limit,
    });

    out.push(ErrataEntry {
        id: "r-coefficient-formula",
        location: "eight-term coefficient formula for R_n(m)",
        printed: "as printed",
        corrected: "as printed",
        witness: search_coeff(2..=limit, coeff_r_closed, |n, m| rec_coeff(rec_r, n, m))?,
        searched_to: limit,
    });

    // Domain of the Ringel matrices: x has n+1 entries and z has n, so the
    // family has 2^(3n) members, not 2^(n + 2(n-1)).
    let brute_cap = max_brute_param(Family::R, EnumConfig::default().max_bits).min(6);
    let mut domain = None;
    for n in 2..=brute_cap {
        let printed = pow2(3 * n - 2);
        let counted = brute_rank_distribution(Family::R, n, &EnumConfig::with_workers(1))?.total();
        if printed != counted {
            domain = Some(Witness {
                n,
                m: None,
                printed: printed.to_string(),
                correct: counted.to_string(),
            });
            break;
        }
    }
    out.push(ErrataEntry {
        id: "ringel-domain",
        location: "domains of X and Z for the Ringel matrices",
        printed: "X in GF(2)^n, Z in GF(2)^(n-1)",
        corrected: "X in GF(2)^(n+1), Z in GF(2)^n",
        witness: domain,
        searched_to: brute_cap,
    });

    // Read literally, "1 >= m <= [n/2]" only admits m <= 1; the first
    // nonzero coefficient it leaves out is the witness.
    let mut range = None;
    'range: for n in 1..=limit {
        for m in 2..=n / 2 {
            let c = rec_coeff(rec_o, n, 2 * m);
            if !c.is_zero() {
                range = Some(Witness {
                    n,
                    m: Some(m),
                    printed: "not covered".to_string(),
                    correct: c.to_string(),
                });
                debug_assert_eq!(coeff_o_closed(n, 2 * m), c);
                break 'range;
            }
        }
    }
    out.push(ErrataEntry {
        id: "o-coefficient-range",
        location: "range of m in the O_n(2m) coefficient formula",
        printed: "1 >= m <= [n/2]",
        corrected: "1 <= m <= [n/2]",
        witness: range,
        searched_to: limit,
    });

    // keep the corrected L formula honest against the same oracle
    debug_assert!(search_coeff(1..=12, coeff_l_closed, |n, m| rec_coeff(rec_l, n, m))
        .unwrap()
        .is_none());

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_table_reproduces() {
        let lines = table_check().unwrap();
        assert_eq!(lines.len(), 5);
        for l in &lines {
            assert!(l.passed(), "{} {} {}", l.graph, l.expected, l.computed);
        }
        assert_eq!(lines[4].graph, "R_5");
    }

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_n_brute: 4,
            max_n_trace: 3,
            max_n_closed: 12,
            workers: 2,
            corrupt_l_coefficients: false,
        }
    }

    #[test]
    fn verify_small_passes() {
        let r = verify(&small()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.checks.len(), 9);
    }

    #[test]
    fn corrupted_l_formula_is_caught() {
        let cfg = VerifyConfig {
            corrupt_l_coefficients: true,
            ..small()
        };
        let r = verify(&cfg).unwrap();
        let ce = r.first_failure().unwrap().counterexample.clone().unwrap();
        assert_eq!(
            ce,
            Counterexample {
                family: "L".into(),
                n: 2,
                rank: 2,
                expected: "4".into(),
                got: "8".into()
            }
        );
    }

    #[test]
    fn infeasible_caps() {
        let cfg = VerifyConfig {
            max_n_trace: 9,
            ..small()
        };
        assert!(matches!(verify(&cfg), Err(ReportError::Infeasible(_))));
        let cfg = VerifyConfig {
            max_n_brute: 20,
            ..small()
        };
        assert!(matches!(verify(&cfg), Err(ReportError::Infeasible(_))));
    }

    #[test]
    fn errata_witnesses() {
        let e = errata().unwrap();
        let by_id = |id: &str| e.iter().find(|x| x.id == id).unwrap().clone();

        let w = by_id("l-coefficient-sign").witness.unwrap();
        assert_eq!((w.n, w.m, w.printed.as_str(), w.correct.as_str()), (2, Some(2), "8", "4"));

        let w = by_id("l-closed-form-constant").witness.unwrap();
        assert_eq!((w.n, w.printed.as_str(), w.correct.as_str()), (2, "1+3z+8z^2", "1+3z+4z^2"));

        let w = by_id("r-closed-form-constant").witness.unwrap();
        assert_eq!(w.n, 2);

        let w = by_id("scaled-u-expansion").witness.unwrap();
        assert_eq!(w.n, 2);

        let w = by_id("p-chebyshev-argument").witness.unwrap();
        assert_eq!(w.n, 2);

        let r = by_id("r-coefficient-formula");
        assert_eq!(r.witness, None);
        assert_eq!(r.searched_to, 60);
        assert!(r.to_string().contains("no witness \u{2264} 60"));

        let w = by_id("ringel-domain").witness.unwrap();
        assert_eq!((w.n, w.printed.as_str(), w.correct.as_str()), (2, "16", "64"));

        let w = by_id("o-coefficient-range").witness.unwrap();
        assert_eq!((w.n, w.m, w.correct.as_str()), (4, Some(2), "2"));
    }
}
