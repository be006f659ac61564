//! Fractional Dehn twist coefficients of braids.
//!
//! The coefficient `c(b)` is homogeneous (`c(bⁿ) = n c(b)`), invariant under
//! conjugation, additive on commuting pairs and equal to 1 on the full twist
//! `Δ²`. Two routes are provided:
//!
//! * for 3-braids the value is exact, read off the conjugacy normal form;
//! * for any braid the Dehornoy floor sandwich `⌊b⌋ ≤ |c(b)| ≤ ⌊b⌋ + 1`,
//!   applied to `b^k`, traps `c(b)` in an interval of width `1/k`, and the
//!   sign of `b` in the Dehornoy order fixes the sign of `c(b)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::dehornoy::{dehornoy_floor_with, sigma_sign_with, OrderSign, ReductionBudget};
use crate::error::{Error, Result};
use crate::rational::{ceil_int, int, ratio, Rational};
use crate::threebraid::{normal_form, ThreeBraidNormalForm};

/// Exact value or rigorous enclosure of a fractional Dehn twist coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FdtcKind {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdtcValue {
    pub kind: FdtcKind,
    /// How the value was obtained.
    pub provenance: String,
}

impl FdtcValue {
    pub fn exact(value: Rational, provenance: impl Into<String>) -> Self {
        Self {
            kind: FdtcKind::Exact(value),
            provenance: provenance.into(),
        }
    }

    pub fn interval(lo: Rational, hi: Rational, provenance: impl Into<String>) -> Result<Self> {
        if lo > hi {
            return Err(Error::BadParameters(format!("empty interval [{lo}, {hi}]")));
        }
        if lo == hi {
            return Ok(Self::exact(lo, provenance));
        }
        Ok(Self {
            kind: FdtcKind::Interval { lo, hi },
            provenance: provenance.into(),
        })
    }

    pub fn lo(&self) -> &Rational {
        match &self.kind {
            FdtcKind::Exact(v) => v,
            FdtcKind::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match &self.kind {
            FdtcKind::Exact(v) => v,
            FdtcKind::Interval { hi, .. } => hi,
        }
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match &self.kind {
            FdtcKind::Exact(v) => Some(v),
            FdtcKind::Interval { .. } => None,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }

    /// Largest `L` with `|c| ≥ L` for every `c` in the enclosure.
    pub fn abs_lower_bound(&self) -> Rational {
        if self.lo().is_positive() {
            self.lo().clone()
        } else if self.hi().is_negative() {
            -self.hi()
        } else {
            Rational::zero()
        }
    }

    /// Intersection of two enclosures of the same coefficient.
    pub fn intersect(&self, other: &FdtcValue) -> Option<FdtcValue> {
        let lo = self.lo().max(other.lo()).clone();
        let hi = self.hi().min(other.hi()).clone();
        FdtcValue::interval(
            lo,
            hi,
            format!("{} ∩ {}", self.provenance, other.provenance),
        )
        .ok()
    }
}

impl fmt::Display for FdtcValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FdtcKind::Exact(v) => write!(f, "{v}"),
            FdtcKind::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Default enclosure width, `1/12`.
pub fn default_tolerance() -> Rational {
    ratio(1, 12)
}

/// Exact coefficient of a 3-braid from its conjugacy normal form.
pub fn fdtc_exact_b3(b: &BraidWord) -> Result<Rational> {
    Ok(fdtc_of_normal_form(&normal_form(b)?))
}

/// `d` for families (1) and (2); `d − 1/3`, `d − 1/2`, `d − 2/3` for the
/// periodic family with `m = −1, −2, −3`.
///
/// Family (1): the core `σ1σ2^{-a_1}⋯` is Dehornoy-positive while its
/// conjugate by `Δ` (which swaps `σ1` and `σ2`) is negative, so its
/// coefficient is both `≥ 0` and `≤ 0`. Family (2): `⌊σ2^{mk}⌋ = 0` for every
/// `k`, so `|c(σ2^m)| ≤ 1/k` for all `k`. Family (3): `(σ1^{-1}σ2^{-1})³ = C⁻¹`,
/// `(σ1^{-2}σ2^{-1})² = C⁻¹`, `(σ1^{-3}σ2^{-1})³ = C⁻²`, and homogeneity
/// gives `−1/3`, `−1/2`, `−2/3`. In every case `C^d` adds `d`.
pub fn fdtc_of_normal_form(nf: &ThreeBraidNormalForm) -> Rational {
    let d = int(nf.d());
    match nf {
        ThreeBraidNormalForm::PseudoAnosov { .. } | ThreeBraidNormalForm::Reducible { .. } => d,
        ThreeBraidNormalForm::Periodic { m, .. } => match m {
            -1 => d - ratio(1, 3),
            -2 => d - ratio(1, 2),
            -3 => d - ratio(2, 3),
            _ => unreachable!("periodic normal form with m = {m}"),
        },
    }
}

/// Enclosure of `c(b)` of width at most `tol`; exact for 3-braids.
pub fn fdtc_interval(b: &BraidWord, tol: &Rational) -> Result<FdtcValue> {
    fdtc_interval_with(b, tol, &ReductionBudget::default())
}

pub fn fdtc_interval_with(
    b: &BraidWord,
    tol: &Rational,
    budget: &ReductionBudget,
) -> Result<FdtcValue> {
    check_tolerance(tol)?;
    if b.strands() == 3 {
        let nf = normal_form(b)?;
        return Ok(FdtcValue::exact(
            fdtc_of_normal_form(&nf),
            format!("3-braid normal form {nf}"),
        ));
    }
    fdtc_floor_bounds(b, tol, budget)
}

/// The floor-sandwich enclosure, for any strand count.
///
/// With `k = ⌈1/tol⌉` and `f = ⌊b^k⌋`, `f ≤ k|c(b)| ≤ f + 1`.
pub fn fdtc_floor_bounds(
    b: &BraidWord,
    tol: &Rational,
    budget: &ReductionBudget,
) -> Result<FdtcValue> {
    check_tolerance(tol)?;
    let sign = sigma_sign_with(b, budget)?;
    if sign == OrderSign::Trivial {
        return Ok(FdtcValue::exact(Rational::zero(), "trivial braid"));
    }
    let k = ceil_int(&(Rational::one() / tol));
    let k_small: i64 = k
        .clone()
        .try_into()
        .map_err(|_| Error::BadParameters(format!("tolerance {tol} is too small")))?;
    let floor = dehornoy_floor_with(&b.pow(k_small)?, budget)?;
    let f = Rational::new(BigInt::from(floor), k.clone());
    let f1 = Rational::new(BigInt::from(floor) + 1, k);
    let provenance = format!("Dehornoy floor of b^{k_small} is {floor}");
    match sign {
        OrderSign::Positive => FdtcValue::interval(f, f1, provenance),
        _ => FdtcValue::interval(-f1, -f, provenance),
    }
}

fn check_tolerance(tol: &Rational) -> Result<()> {
    if !tol.is_positive() {
        return Err(Error::BadParameters(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Coefficient of the lift of `b ∈ B_m` to the `n`-fold cyclic branched
/// cover of the disk: `gcd(m, n)/n · c`.
pub fn fdtc_lift(c: &Rational, m: u64, n: u64) -> Result<Rational> {
    if m < 2 || n < 1 {
        return Err(Error::BadParameters(format!(
            "lift needs m ≥ 2 and n ≥ 1, got m={m}, n={n}"
        )));
    }
    let g = m.gcd(&n);
    Ok(c * Rational::new(BigInt::from(g), BigInt::from(n)))
}

/// `1/(2(2g − 1))`: the least nonzero `|c|` for a pseudo-Anosov monodromy
/// of a genus-`g` surface with one boundary component.
pub fn fdtc_lower_bound(genus: i64) -> Result<Rational> {
    if genus < 1 {
        return Err(Error::BadGenus(genus));
    }
    Ok(ratio(1, 2 * (2 * genus - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta, full_twist_power};

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn full_twist_has_coefficient_one() {
        for m in [3, 4, 5] {
            let v = fdtc_interval(&full_twist_power(m, 1).unwrap(), &int(1)).unwrap();
            assert!(v.contains(&int(1)), "m={m}: {v}");
        }
    }

    #[test]
    fn identity_is_exact_zero() {
        for m in [2, 3, 4] {
            let v = fdtc_interval(&BraidWord::identity(m).unwrap(), &ratio(1, 5)).unwrap();
            assert_eq!(v.kind, FdtcKind::Exact(int(0)));
        }
    }

    #[test]
    fn rotation_three_braid() {
        let b = w("3: 1 2");
        let tol = ratio(1, 12);
        assert_eq!(
            fdtc_interval(&b, &tol).unwrap().kind,
            FdtcKind::Exact(ratio(1, 3))
        );
        let bounds = fdtc_floor_bounds(&b, &tol, &ReductionBudget::default()).unwrap();
        assert!(bounds.width() <= tol);
        assert!(bounds.contains(&ratio(1, 3)));
    }

    #[test]
    fn exact_b3_examples() {
        let c2 = full_twist_power(3, 2).unwrap();
        assert_eq!(
            fdtc_exact_b3(&c2.compose(&w("3: 1 -2")).unwrap()).unwrap(),
            int(2)
        );
        assert_eq!(fdtc_exact_b3(&w("3: -1 -2")).unwrap(), ratio(-1, 3));
        assert_eq!(fdtc_exact_b3(&w("3: 2 2 2 2 2 2 2")).unwrap(), int(0));
        assert_eq!(fdtc_exact_b3(&delta(3).unwrap()).unwrap(), ratio(1, 2));
        assert_eq!(
            fdtc_exact_b3(&w("4: 1")).unwrap_err(),
            Error::NotThreeBraid(4)
        );
    }

    #[test]
    fn periodic_identities_hold_in_the_group() {
        // w1³ C = 1, w2² C = 1, w3³ C² = 1
        let c = full_twist_power(3, 1).unwrap();
        let w1 = w("3: -1 -2");
        let w2 = w("3: -1 -1 -2");
        let w3 = w("3: -1 -1 -1 -2");
        assert!(w1
            .pow(3)
            .unwrap()
            .compose(&c)
            .unwrap()
            .is_trivial()
            .unwrap());
        assert!(w2
            .pow(2)
            .unwrap()
            .compose(&c)
            .unwrap()
            .is_trivial()
            .unwrap());
        assert!(w3
            .pow(3)
            .unwrap()
            .compose(&c.pow(2).unwrap())
            .unwrap()
            .is_trivial()
            .unwrap());
    }

    #[test]
    fn sigma2_powers_have_floor_zero() {
        for m in -6i64..=6 {
            for k in 1..=12 {
                let p = BraidWord::generator(3, 2).unwrap().pow(m * k).unwrap();
                assert_eq!(
                    crate::dehornoy::dehornoy_floor(&p).unwrap(),
                    0,
                    "m={m} k={k}"
                );
            }
        }
        for k in 1..=20 {
            let p = BraidWord::generator(3, 2).unwrap().pow(7 * k).unwrap();
            assert_eq!(crate::dehornoy::dehornoy_floor(&p).unwrap(), 0);
        }
    }

    #[test]
    fn lift_examples() {
        let c = ratio(5, 4);
        assert_eq!(fdtc_lift(&c, 5, 1).unwrap(), c);
        assert_eq!(fdtc_lift(&c, 3, 3).unwrap(), c);
        assert_eq!(fdtc_lift(&c, 4, 3).unwrap(), ratio(5, 12));
        assert_eq!(fdtc_lift(&int(2), 3, 2).unwrap(), int(1));
        assert!(fdtc_lift(&c, 1, 3).is_err());
        assert!(fdtc_lift(&c, 3, 0).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(fdtc_lower_bound(1).unwrap(), ratio(1, 2));
        assert_eq!(fdtc_lower_bound(2).unwrap(), ratio(1, 6));
        assert_eq!(fdtc_lower_bound(0).unwrap_err(), Error::BadGenus(0));
        for g in 1..20 {
            // n ≥ 1/|c| with the extremal |c| is n ≥ 2(2g − 1)
            let threshold = Rational::one() / fdtc_lower_bound(g).unwrap();
            assert_eq!(threshold, int(2 * (2 * g - 1)));
        }
    }

    #[test]
    fn negative_braids_get_negative_enclosures() {
        let b = w("4: -1 -2 -3 -1 -2 -1").pow(2).unwrap();
        let v = fdtc_interval(&b, &ratio(1, 3)).unwrap();
        assert!(v.contains(&int(-1)), "{v}");
        assert!(!v.hi().is_positive());
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(fdtc_interval(&w("4: 1"), &int(0)).is_err());
        assert!(fdtc_interval(&w("4: 1"), &ratio(-1, 2)).is_err());
    }

    #[test]
    fn abs_lower_bound_of_enclosures() {
        let v = FdtcValue::interval(ratio(2, 5), ratio(3, 5), "t").unwrap();
        assert_eq!(v.abs_lower_bound(), ratio(2, 5));
        let v = FdtcValue::interval(ratio(-3, 5), ratio(-2, 5), "t").unwrap();
        assert_eq!(v.abs_lower_bound(), ratio(2, 5));
        let v = FdtcValue::interval(ratio(-1, 5), ratio(2, 5), "t").unwrap();
        assert_eq!(v.abs_lower_bound(), int(0));
        assert!(FdtcValue::interval(int(1), int(0), "t").is_err());
    }
}
