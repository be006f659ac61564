//! Sound decision rules producing [`Certificate`]s.
//!
//! Each certifier decides with direct exact arithmetic and records the
//! inequalities it relied on as printable [`Check`]s; [`replay`] re-verifies
//! them independently. Whenever a hypothesis cannot be established the
//! verdict is [`Verdict::Unknown`] and a note says why. Geometric hypotheses
//! that cannot be computed are taken from [`Hypotheses`] and echoed in the
//! certificate's assumptions.

mod certificate;
mod expr;
pub mod replay;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::dehornoy::{sigma_sign_with, OrderSign, ReductionBudget};
use crate::error::{Error, Result};
use crate::fdtc::{fdtc_interval_with, fdtc_lower_bound, FdtcValue};
use crate::rational::{floor_int, int, Rational};
use crate::threebraid::{normal_form, ThreeBraidNormalForm};

pub use certificate::{Certificate, Justification, RuleId, Verdict};
pub use expr::{Check, Expr, Rel};

/// User assertions for hypotheses the library cannot verify itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Hypotheses {
    /// The knot (or companion) is hyperbolic and fibred in an integer homology sphere.
    pub hyperbolic: bool,
    /// The ambient 3-manifold is irreducible.
    pub irreducible: bool,
    /// The braid is pseudo-Anosov. Only consulted when it cannot be proved.
    pub pseudo_anosov: bool,
    /// The fractional Dehn twist coefficient is nonzero.
    pub fdtc_nonzero: bool,
}

pub const ASSUME_HYPERBOLIC: &str =
    "knot asserted hyperbolic and fibred in an integer homology sphere";
pub const ASSUME_IRREDUCIBLE: &str = "ambient manifold asserted irreducible";
pub const ASSUME_PSEUDO_ANOSOV: &str = "braid asserted pseudo-Anosov";
pub const ASSUME_NONZERO: &str = "fractional Dehn twist coefficient asserted nonzero";
pub const ASSUME_EXACT_ZERO: &str = "companion coefficient asserted to be exactly zero";

/// A slope `nμ + qλ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurgerySlope {
    pub n: i64,
    pub q: i64,
}

impl SurgerySlope {
    pub fn new(n: i64, q: i64) -> Result<Self> {
        if n == 0 && q == 0 {
            return Err(Error::BadParameters("slope (0, 0) is not a slope".into()));
        }
        Ok(Self { n, q })
    }
}

/// The degeneracy slope `δ = bμ + aλ` of a coefficient `c = a/b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegeneracySlope {
    pub b: i64,
    pub a: i64,
}

impl DegeneracySlope {
    pub fn new(b: i64, a: i64) -> Result<Self> {
        if b <= 0 || a.gcd(&b) != 1 {
            return Err(Error::BadParameters(format!(
                "degeneracy slope needs b > 0, gcd(a, b) = 1; got b={b}, a={a}"
            )));
        }
        Ok(Self { b, a })
    }

    pub fn from_coefficient(c: &Rational) -> Result<Self> {
        let conv = |x: &BigInt| {
            i64::try_from(x.clone()).map_err(|_| Error::BadParameters(format!("{c} is too large")))
        };
        Self::new(conv(c.denom())?, conv(c.numer())?)
    }
}

/// `Δ(nμ + qλ, bμ + aλ) = |na − qb|`.
pub fn slope_distance(s: SurgerySlope, delta: DegeneracySlope) -> u128 {
    (s.n as i128 * delta.a as i128 - s.q as i128 * delta.b as i128).unsigned_abs()
}

/// Certifies `scale · |slope·c − offset| ≥ 1` for every `c` in the enclosure.
///
/// The left side is monotone in `c` on either side of `offset/slope`, so
/// the checks use the endpoint nearest to that point.
fn affine_clearance(c: &FdtcValue, scale: i64, slope: i64, offset: i64) -> Option<Check> {
    debug_assert!(slope > 0 && scale > 0);
    let (s, p, q) = (int(scale), int(slope), int(offset));
    let lin = |x: &Rational| &s * (&p * x - &q);
    let e = |x: &Rational| Expr::int(scale) * (Expr::int(slope) * Expr::rat(x) - Expr::int(offset));
    match c.exact_value() {
        Some(x) => {
            let check = (Expr::int(scale)
                * (Expr::int(slope) * Expr::rat(x) - Expr::int(offset)).abs())
            .ge(Expr::int(1));
            (lin(x).abs() >= Rational::one()).then_some(check)
        }
        None => {
            if lin(c.lo()) >= Rational::one() {
                Some(e(c.lo()).ge(Expr::int(1)))
            } else if lin(c.hi()) <= -Rational::one() {
                Some(e(c.hi()).le(Expr::int(-1)))
            } else {
                None
            }
        }
    }
}

/// `− q` or `+ |q|`, for notes.
fn minus_term(q: i64) -> String {
    if q < 0 {
        format!("+ {}", q.unsigned_abs())
    } else {
        format!("− {q}")
    }
}

/// `= x` for an exact value, `∈ [lo, hi]` for an enclosure.
fn membership(c: &FdtcValue) -> String {
    match c.exact_value() {
        Some(x) => format!("= {x}"),
        None => format!("∈ {c}"),
    }
}

fn assume(cert: &mut Certificate, flag: bool, text: &str) -> bool {
    if flag {
        cert.assumptions.push(text.to_string());
    }
    flag
}

/// An Unknown certificate with nothing recorded yet.
fn pending() -> Certificate {
    Certificate {
        verdict: Verdict::Unknown,
        justifications: Vec::new(),
        assumptions: Vec::new(),
        notes: Vec::new(),
    }
}

/// Surgery on the `n`-fold cyclic cover of a fibred knot exterior.
pub fn certify_fibred_cover(
    c_h: &FdtcValue,
    genus: Option<i64>,
    n: i64,
    q: i64,
    hyp: &Hypotheses,
) -> Result<Certificate> {
    if n < 1 {
        return Err(Error::BadParameters(format!(
            "cover order must be ≥ 1, got {n}"
        )));
    }
    if let Some(g) = genus {
        fdtc_lower_bound(g)?;
    }
    let mut cert = pending();
    if !assume(&mut cert, hyp.hyperbolic, ASSUME_HYPERBOLIC) {
        cert.notes
            .push("hyperbolicity of the fibred knot was not asserted".into());
        return Ok(cert);
    }
    if let Some(check) = affine_clearance(c_h, 1, n, q) {
        cert.verdict = Verdict::Excellent;
        cert.justifications
            .push(Justification::new(RuleId::FibredCoverSlope, vec![check]));
        return Ok(cert);
    }
    if let (Some(g), 0) = (genus, q) {
        let nonzero_check = if c_h.lo().is_positive() {
            Some(Expr::rat(c_h.lo()).gt(Expr::int(0)))
        } else if c_h.hi().is_negative() {
            Some(Expr::rat(c_h.hi()).lt(Expr::int(0)))
        } else {
            None
        };
        let nonzero = nonzero_check.is_some() || hyp.fdtc_nonzero;
        if nonzero && n >= 2 * (2 * g - 1) {
            let mut checks = vec![
                Expr::int(n).ge(Expr::int(2) * (Expr::int(2) * Expr::int(g) - Expr::int(1))),
                Expr::int(q).eq(Expr::int(0)),
            ];
            match nonzero_check {
                Some(c) => checks.push(c),
                None => {
                    assume(&mut cert, true, ASSUME_NONZERO);
                }
            }
            cert.verdict = Verdict::Excellent;
            cert.justifications
                .push(Justification::new(RuleId::FibredCoverGenusBound, checks));
            return Ok(cert);
        }
    }
    cert.notes.push(format!(
        "|{n}·c {}| ≥ 1 is not certified for c in {c_h}",
        minus_term(q)
    ));
    Ok(cert)
}

/// Values of `q` not covered by the universal abelian cover rule.
///
/// `{nc}` when `nc` is an integer, `{⌊nc⌋, ⌊nc⌋ + 1}` otherwise.
pub fn excluded_q(c_h: &Rational, n: i64) -> BTreeSet<BigInt> {
    let nc = c_h * int(n);
    let f = floor_int(&nc);
    if nc.is_integer() {
        BTreeSet::from([f])
    } else {
        BTreeSet::from([f.clone(), f + 1])
    }
}

/// Universal abelian cover of the orbifold with cone order `m` along the
/// core of `X(K)(pμ + qλ)`.
pub fn certify_orbifold_cover(
    c_h: &FdtcValue,
    p: i64,
    q: i64,
    m: i64,
    hyp: &Hypotheses,
) -> Result<Certificate> {
    if p <= 0 || m < 1 {
        return Err(Error::BadParameters(format!(
            "need p > 0 and m ≥ 1, got p={p}, m={m}"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::BadParameters(format!("gcd({p}, {q}) ≠ 1")));
    }
    let mut cert = pending();
    if !assume(&mut cert, hyp.hyperbolic, ASSUME_HYPERBOLIC) {
        cert.notes
            .push("hyperbolicity of the fibred knot was not asserted".into());
        return Ok(cert);
    }
    match affine_clearance(c_h, m, p, q) {
        Some(check) => {
            cert.verdict = Verdict::Excellent;
            let checks = vec![
                Expr::gcd(Expr::int(p), Expr::int(q)).eq(Expr::int(1)),
                check,
            ];
            cert.justifications
                .push(Justification::new(RuleId::OrbifoldCover, checks));
        }
        None => cert.notes.push(format!(
            "{m}·|{p}·c {}| ≥ 1 is not certified for c in {c_h}",
            minus_term(q)
        )),
    }
    Ok(cert)
}

/// Outcome of establishing that a braid is pseudo-Anosov.
enum PaStatus {
    Proved(Justification),
    Asserted,
    Refuted(String),
    Missing,
}

fn pseudo_anosov_status(b: &BraidWord, asserted: bool) -> Result<PaStatus> {
    if b.strands() == 3 {
        let nf = normal_form(b)?;
        return Ok(match nf {
            ThreeBraidNormalForm::PseudoAnosov { .. } => PaStatus::Proved(
                Justification::new(RuleId::ThreeBraidClassification, vec![])
                    .with_fact(format!("{b} is conjugate to the normal form {nf}")),
            ),
            _ => PaStatus::Refuted(format!(
                "{b} has normal form {nf}, which is not pseudo-Anosov"
            )),
        });
    }
    Ok(if asserted {
        PaStatus::Asserted
    } else {
        PaStatus::Missing
    })
}

/// Records the pseudo-Anosov hypothesis; `false` means the certifier must stop.
fn establish_pseudo_anosov(cert: &mut Certificate, b: &BraidWord, asserted: bool) -> Result<bool> {
    match pseudo_anosov_status(b, asserted)? {
        PaStatus::Proved(j) => {
            cert.justifications.push(j);
            Ok(true)
        }
        PaStatus::Asserted => {
            cert.assumptions.push(ASSUME_PSEUDO_ANOSOV.into());
            Ok(true)
        }
        PaStatus::Refuted(why) => {
            cert.notes.push(why);
            Ok(false)
        }
        PaStatus::Missing => {
            cert.notes.push(format!(
                "pseudo-Anosov status of a {}-braid cannot be computed and was not asserted",
                b.strands()
            ));
            Ok(false)
        }
    }
}

/// Enclosure of `c(b)` used by the braid certifiers.
pub fn braid_fdtc(b: &BraidWord, tol: &Rational, budget: &ReductionBudget) -> Result<FdtcValue> {
    fdtc_interval_with(b, tol, budget)
}

/// Least `n` with `n | t`, `2 ≤ n ≤ lower` and `gcd(m, n) = 1`.
pub fn closed_braid_cover_factor(m: u64, t: u64, lower: &Rational) -> Option<u64> {
    let bound = floor_int(lower);
    (2..=t).find(|&n| t.is_multiple_of(n) && m.gcd(&n) == 1 && BigInt::from(n) <= bound)
}

/// The `t`-fold cyclic branched cover of the closure of `b`.
pub fn certify_closed_braid_cover(
    b: &BraidWord,
    t: u64,
    hyp: &Hypotheses,
    tol: &Rational,
    budget: &ReductionBudget,
) -> Result<Certificate> {
    if t < 2 {
        return Err(Error::BadParameters(format!(
            "cover order must be ≥ 2, got {t}"
        )));
    }
    let mut cert = pending();
    if !establish_pseudo_anosov(&mut cert, b, hyp.pseudo_anosov)? {
        cert.justifications.clear();
        return Ok(cert);
    }
    let c = braid_fdtc(b, tol, budget)?;
    let lower = c.abs_lower_bound();
    let m = b.strands() as u64;
    let (ti, mi) = (t as i64, m as i64);
    let bound_expr = |x: &FdtcValue| -> Expr {
        match x.exact_value() {
            Some(v) => Expr::rat(v).abs(),
            None if x.lo().is_positive() => Expr::rat(x.lo()),
            None => Expr::int(0) - Expr::rat(x.hi()),
        }
    };
    let fdtc_fact = format!("c(b) {} ({})", membership(&c), c.provenance);
    if let Some(n) = closed_braid_cover_factor(m, t, &lower) {
        let ni = n as i64;
        let checks = vec![
            Expr::modulo(Expr::int(ti), Expr::int(ni)).eq(Expr::int(0)),
            Expr::int(ni).ge(Expr::int(2)),
            Expr::int(ni).le(bound_expr(&c)),
            Expr::gcd(Expr::int(mi), Expr::int(ni)).eq(Expr::int(1)),
        ];
        cert.justifications.push(
            Justification::new(RuleId::ClosedBraidNkCover, checks).with_fact(fdtc_fact.clone()),
        );
        cert.notes
            .push(format!("t = n·k with n = {n}, k = {}", t / n));
    }
    if m % 2 == 1 && t.is_multiple_of(2) && lower >= int(2) {
        let checks = vec![
            Expr::modulo(Expr::int(mi), Expr::int(2)).eq(Expr::int(1)),
            Expr::modulo(Expr::int(ti), Expr::int(2)).eq(Expr::int(0)),
            bound_expr(&c).ge(Expr::int(2)),
        ];
        cert.justifications
            .push(Justification::new(RuleId::ClosedBraidEvenCover, checks).with_fact(fdtc_fact));
    }
    if cert.justifications.iter().any(|j| !j.checks.is_empty()) {
        cert.verdict = Verdict::Excellent;
    } else {
        cert.justifications.clear();
        cert.notes.push(format!(
            "no factorization t = n·k with 2 ≤ n ≤ {lower}, gcd({m}, n) = 1 and no even-cover rule; c(b) {}", membership(&c)
        ));
    }
    Ok(cert)
}

/// Residue period and the `nd` window for the periodic family `w_j`,
/// `n = Pk + r`. `None` for the window means `nd = centre ± 1`.
fn periodic_window(j: i64, n: i64) -> (i64, i64, i64, Window) {
    let period = if j == 2 { 2 } else { 3 };
    let (k, r) = (n.div_euclid(period), n.rem_euclid(period));
    let scale = if j == 3 { 2 } else { 1 };
    let base = scale * k;
    let window = match (j, r) {
        (_, 0) => Window::PlusMinusOne(base),
        (3, 2) => Window::Range(base, base + 3),
        _ => Window::Range(base - 1, base + 2),
    };
    (period, k, r, window)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Window {
    PlusMinusOne(i64),
    Range(i64, i64),
}

/// The `n`-fold cyclic branched cover of the binding of the genus-one open
/// book with monodromy `h` (Dehn twists about the two curves map to `σ1`, `σ2`).
pub fn certify_genus1_cover(h: &BraidWord, n: u64, hyp: &Hypotheses) -> Result<Certificate> {
    let nf = normal_form(h)?;
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "cover order must be ≥ 2, got {n}"
        )));
    }
    let ni = i64::try_from(n)
        .map_err(|_| Error::BadParameters(format!("cover order {n} is too large")))?;
    if let ThreeBraidNormalForm::Reducible { d: 0, .. } = nf {
        return Err(Error::SplitBinding);
    }
    let mut cert = pending();
    if !assume(&mut cert, hyp.irreducible, ASSUME_IRREDUCIBLE) {
        cert.notes
            .push("irreducibility of the ambient manifold was not asserted".into());
        return Ok(cert);
    }
    let fact = format!("{h} is conjugate to the normal form {nf}");
    let d = nf.d();
    let (n_e, d_e) = (Expr::int(ni), Expr::int(d));
    let two = || Expr::int(2);
    let (verdict, rule, checks) = match nf {
        ThreeBraidNormalForm::PseudoAnosov { .. } if d == 0 => (
            Verdict::TotalLSpace,
            RuleId::GenusOnePseudoAnosovZero,
            vec![d_e.eq(Expr::int(0)), n_e.ge(two())],
        ),
        ThreeBraidNormalForm::PseudoAnosov { .. } => (
            Verdict::Excellent,
            RuleId::GenusOnePseudoAnosovTwisted,
            vec![(n_e * (d_e / two()).abs()).ge(Expr::int(1))],
        ),
        ThreeBraidNormalForm::Reducible { .. } => (
            Verdict::Excellent,
            RuleId::GenusOneReducible,
            vec![
                d_e.clone().ne(Expr::int(0)),
                (n_e * d_e).abs().ne(Expr::int(1)),
            ],
        ),
        ThreeBraidNormalForm::Periodic { m, .. } => {
            let j = -m;
            let (period, k, r, window) = periodic_window(j, ni);
            let p_e = Expr::int(period);
            let k_e = || (Expr::int(ni) / p_e.clone()).floor();
            let base = || if j == 3 { two() * k_e() } else { k_e() };
            let nd = ni * d;
            let nd_e = || Expr::int(ni) * Expr::int(d);
            let mut checks = vec![Expr::modulo(Expr::int(ni), p_e.clone()).eq(Expr::int(r))];
            cert.notes
                .push(format!("w_{j} family, n = {period}·{k} + {r}, nd = {nd}"));
            let lspace = match window {
                Window::PlusMinusOne(c) => {
                    let hit = (nd - c).abs() == 1;
                    let diff = (nd_e() - base()).abs();
                    checks.push(if hit {
                        diff.eq(Expr::int(1))
                    } else {
                        diff.ne(Expr::int(1))
                    });
                    hit
                }
                Window::Range(lo, hi) => {
                    let (lo_off, hi_off) = (lo - window_base(j, k), hi - window_base(j, k));
                    let lo_e = || offset(base(), lo_off);
                    let hi_e = || offset(base(), hi_off);
                    if nd < lo {
                        checks.push(nd_e().lt(lo_e()));
                        false
                    } else if nd > hi {
                        checks.push(nd_e().gt(hi_e()));
                        false
                    } else {
                        checks.push(nd_e().ge(lo_e()));
                        checks.push(nd_e().le(hi_e()));
                        true
                    }
                }
            };
            let verdict = if lspace {
                Verdict::TotalLSpace
            } else {
                Verdict::Excellent
            };
            (verdict, RuleId::GenusOnePeriodic, checks)
        }
    };
    cert.verdict = verdict;
    cert.justifications
        .push(Justification::new(rule, checks).with_fact(fact));
    Ok(cert)
}

fn window_base(j: i64, k: i64) -> i64 {
    if j == 3 {
        2 * k
    } else {
        k
    }
}

fn offset(e: Expr, by: i64) -> Expr {
    match by.cmp(&0) {
        std::cmp::Ordering::Equal => e,
        std::cmp::Ordering::Greater => e + Expr::int(by),
        std::cmp::Ordering::Less => e - Expr::int(-by),
    }
}

/// Inputs describing the companion of a satellite.
#[derive(Clone, Debug)]
pub struct Companion {
    pub fdtc: FdtcValue,
    /// The companion's coefficient is known to be exactly zero.
    pub exact_zero: bool,
}

/// The `n`-fold cyclic branched cover of a satellite knot whose pattern is
/// the closure of `pattern` in the solid torus.
pub fn certify_satellite(
    pattern: &BraidWord,
    companion: &Companion,
    n: u64,
    hyp: &Hypotheses,
    budget: &ReductionBudget,
) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "cover order must be ≥ 2, got {n}"
        )));
    }
    let c = &companion.fdtc;
    if companion.exact_zero && !c.contains(&int(0)) {
        return Err(Error::BadParameters(format!(
            "companion asserted to have c = 0 but its enclosure is {c}"
        )));
    }
    let m = pattern.strands() as u64;
    let (mi, ni) = (m as i64, n as i64);
    let mut cert = pending();
    if m.gcd(&n) != 1 {
        cert.notes.push(format!("gcd({m}, {n}) ≠ 1"));
        return Ok(cert);
    }
    if !assume(&mut cert, hyp.hyperbolic, ASSUME_HYPERBOLIC) {
        cert.notes
            .push("the companion was not asserted hyperbolic and fibred".into());
        return Ok(cert);
    }
    if !establish_pseudo_anosov(&mut cert, pattern, hyp.pseudo_anosov)? {
        cert.justifications.clear();
        return Ok(cert);
    }
    let coprime = || Expr::gcd(Expr::int(mi), Expr::int(ni)).eq(Expr::int(1));
    let exact_zero = c.exact_value().is_some_and(|v| v.is_zero());
    if exact_zero || companion.exact_zero {
        let mut checks = vec![coprime()];
        if exact_zero {
            checks.push(Expr::rat(c.lo()).eq(Expr::int(0)));
        } else {
            cert.assumptions.push(ASSUME_EXACT_ZERO.into());
        }
        cert.justifications
            .push(Justification::new(RuleId::SatelliteZero, checks));
    }
    let lower = c.abs_lower_bound();
    if lower.is_positive() && int(ni) * &lower >= int(2) {
        let bound = if c.lo().is_positive() {
            Expr::rat(c.lo())
        } else {
            Expr::int(0) - Expr::rat(c.hi())
        };
        let checks = vec![
            coprime(),
            bound.clone().gt(Expr::int(0)),
            Expr::int(ni).ge(Expr::int(2) / bound),
        ];
        cert.justifications
            .push(Justification::new(RuleId::SatelliteNonzero, checks));
    }
    let pattern_sign = sigma_sign_with(pattern, budget)?;
    if pattern_sign != OrderSign::Negative && !c.lo().is_negative() {
        let checks = vec![
            coprime(),
            Expr::rat(c.lo()).ge(Expr::int(0)),
            Expr::int(ni).ge(Expr::int(2)),
        ];
        cert.justifications.push(
            Justification::new(RuleId::SatelliteNonnegative, checks).with_fact(format!(
                "pattern has Dehornoy sign {pattern_sign:?}, so c(pattern) ≥ 0"
            )),
        );
    }
    if cert.justifications.iter().any(|j| !j.checks.is_empty()) {
        cert.verdict = Verdict::Excellent;
    } else {
        cert.justifications.clear();
        cert.notes.push(format!(
            "no satellite rule applies with n = {n} and c(companion) {}",
            membership(c)
        ));
    }
    Ok(cert)
}
