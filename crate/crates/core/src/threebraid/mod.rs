//! Conjugacy classification of 3-braids.
//!
//! Every 3-braid is conjugate to exactly one of
//!
//! 1. `C^d · σ1 σ2^{-a_1} ⋯ σ1 σ2^{-a_n}` with `a_i ≥ 0`, some `a_i > 0` (pseudo-Anosov),
//! 2. `C^d · σ2^m` (reducible; `m = 0` is the central braid `C^d`),
//! 3. `C^d · σ1^m σ2^{-1}` with `m ∈ {−1, −2, −3}` (periodic),
//!
//! where `C = Δ_3² = (σ1σ2)³`. The classifier works in `B_3/⟨C⟩ ≅ Z/2 * Z/3`,
//! where conjugacy is cyclic reduction of alternating words, and then
//! recovers `d` from the exponent sum (`e(C) = 6`).

mod quotient;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::braid::{full_twist_power, BraidWord};
use crate::error::{Error, Result};

use quotient::{ModularWord, Syllable};

/// Representative datum of a conjugacy class in `B_3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ThreeBraidNormalForm {
    /// `C^d · σ1 σ2^{-a_1} ⋯ σ1 σ2^{-a_n}`; `a` is the lexicographically least rotation.
    PseudoAnosov { d: i64, a: Vec<u64> },
    /// `C^d · σ2^m`.
    Reducible { d: i64, m: i64 },
    /// `C^d · σ1^m σ2^{-1}`, `m ∈ {−1, −2, −3}`.
    Periodic { d: i64, m: i64 },
}

/// Nielsen–Thurston type of the family a normal form belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NtType {
    PseudoAnosov,
    Reducible,
    Periodic,
}

/// Whether the double branched cover of the closed 3-braid is an L-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LSpaceStatus {
    LSpace,
    NotLSpace,
}

impl ThreeBraidNormalForm {
    /// Exponent of the central factor `C^d`.
    pub fn d(&self) -> i64 {
        match self {
            Self::PseudoAnosov { d, .. } | Self::Reducible { d, .. } | Self::Periodic { d, .. } => {
                *d
            }
        }
    }

    /// True for `C^d`, which sits in family (2) with `m = 0`.
    ///
    /// These braids are periodic as mapping classes as well; [`nt_type`]
    /// still reports them as reducible because that is the family they are
    /// listed in.
    pub fn is_central(&self) -> bool {
        matches!(self, Self::Reducible { m: 0, .. })
    }

    /// Exponent sum of the representative without its central factor.
    fn core_exponent_sum(&self) -> i64 {
        match self {
            Self::PseudoAnosov { a, .. } => a.len() as i64 - a.iter().sum::<u64>() as i64,
            Self::Reducible { m, .. } => *m,
            Self::Periodic { m, .. } => *m - 1,
        }
    }

    /// The braid word `C^d · (family representative)`.
    pub fn representative(&self) -> BraidWord {
        let mut letters = Vec::new();
        match self {
            Self::PseudoAnosov { a, .. } => {
                for &ai in a {
                    letters.push(1);
                    letters.extend(std::iter::repeat_n(-2, ai as usize));
                }
            }
            Self::Reducible { m, .. } => {
                let s = if *m > 0 { 2 } else { -2 };
                letters.extend(std::iter::repeat_n(s, m.unsigned_abs() as usize));
            }
            Self::Periodic { m, .. } => {
                letters.extend(std::iter::repeat_n(-1, m.unsigned_abs() as usize));
                letters.push(-2);
            }
        }
        let core = BraidWord::new(3, letters).expect("valid 3-braid letters");
        full_twist_power(3, self.d())
            .and_then(|c| c.compose(&core))
            .expect("representative within the word length limit")
    }
}

impl fmt::Display for ThreeBraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PseudoAnosov { d, a } => {
                let a: Vec<String> = a.iter().map(u64::to_string).collect();
                write!(f, "PseudoAnosov d={d} a=[{}]", a.join(","))
            }
            Self::Reducible { d, m } => {
                write!(f, "Reducible d={d} m={m}")?;
                if *m == 0 {
                    write!(f, " central")?;
                }
                Ok(())
            }
            Self::Periodic { d, m } => write!(f, "Periodic d={d} m={m}"),
        }
    }
}

impl fmt::Display for NtType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NtType::PseudoAnosov => "PseudoAnosov",
            NtType::Reducible => "Reducible",
            NtType::Periodic => "Periodic",
        };
        f.write_str(s)
    }
}

impl fmt::Display for LSpaceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LSpaceStatus::LSpace => "LSpace",
            LSpaceStatus::NotLSpace => "NotLSpace",
        })
    }
}

fn require_three(b: &BraidWord) -> Result<()> {
    if b.strands() != 3 {
        return Err(Error::NotThreeBraid(b.strands()));
    }
    Ok(())
}

/// Classifies the conjugacy class of a 3-braid.
pub fn normal_form(b: &BraidWord) -> Result<ThreeBraidNormalForm> {
    require_three(b)?;
    let cyclic = ModularWord::from_braid(b).cyclically_reduced();
    let shape = match cyclic.word.as_slice() {
        [] => ThreeBraidNormalForm::Reducible { d: 0, m: 0 },
        [Syllable::X] => ThreeBraidNormalForm::Periodic { d: 0, m: -2 },
        [Syllable::Y(1)] => ThreeBraidNormalForm::Periodic { d: 0, m: -3 },
        [Syllable::Y(_)] => ThreeBraidNormalForm::Periodic { d: 0, m: -1 },
        word => {
            // alternating, even length: read the cyclic sequence of y-exponents
            let exps: Vec<u8> = word
                .iter()
                .filter_map(|s| match s {
                    Syllable::Y(e) => Some(*e),
                    Syllable::X => None,
                })
                .collect();
            let r = exps.len() as i64;
            if exps.iter().all(|&e| e == 2) {
                // (y²x)^r = C^r σ1^r, conjugate to C^r σ2^r
                ThreeBraidNormalForm::Reducible { d: 0, m: r }
            } else if exps.iter().all(|&e| e == 1) {
                // (yx)^r = C^r σ2^{-r}
                ThreeBraidNormalForm::Reducible { d: 0, m: -r }
            } else {
                // each y² opens a σ1, each following y is one σ2⁻¹
                let start = exps.iter().position(|&e| e == 2).expect("mixed exponents");
                let mut a: Vec<u64> = Vec::new();
                for k in 0..exps.len() {
                    match exps[(start + k) % exps.len()] {
                        2 => a.push(0),
                        _ => *a.last_mut().expect("starts at a y²") += 1,
                    }
                }
                ThreeBraidNormalForm::PseudoAnosov {
                    d: 0,
                    a: least_rotation(&a),
                }
            }
        }
    };
    let excess = b.exponent_sum() - shape.core_exponent_sum();
    debug_assert_eq!(excess.rem_euclid(6), 0, "exponent sum mismatch for {b}");
    let d = excess.div_euclid(6);
    Ok(match shape {
        ThreeBraidNormalForm::PseudoAnosov { a, .. } => ThreeBraidNormalForm::PseudoAnosov { d, a },
        ThreeBraidNormalForm::Reducible { m, .. } => ThreeBraidNormalForm::Reducible { d, m },
        ThreeBraidNormalForm::Periodic { m, .. } => ThreeBraidNormalForm::Periodic { d, m },
    })
}

/// Lexicographically least rotation; the earliest one wins ties.
fn least_rotation(a: &[u64]) -> Vec<u64> {
    (0..a.len())
        .map(|k| a[k..].iter().chain(&a[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn nt_type(nf: &ThreeBraidNormalForm) -> NtType {
    match nf {
        ThreeBraidNormalForm::PseudoAnosov { .. } => NtType::PseudoAnosov,
        ThreeBraidNormalForm::Reducible { .. } => NtType::Reducible,
        ThreeBraidNormalForm::Periodic { .. } => NtType::Periodic,
    }
}

/// Baldwin's list of 3-braids whose double branched covers are L-spaces.
pub fn baldwin_lspace_double_cover(nf: &ThreeBraidNormalForm) -> LSpaceStatus {
    let listed = match nf {
        ThreeBraidNormalForm::PseudoAnosov { d, .. } => (-1..=1).contains(d),
        ThreeBraidNormalForm::Reducible { d, .. } => d.abs() == 1,
        ThreeBraidNormalForm::Periodic { d, .. } => (-1..=2).contains(d),
    };
    if listed {
        LSpaceStatus::LSpace
    } else {
        LSpaceStatus::NotLSpace
    }
}

/// A 2×2 integer matrix; images of braids always have determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix2x2 {
    pub entries: [[BigInt; 2]; 2],
}

impl IntegerMatrix2x2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self {
            entries: [[a.into(), b.into()], [c.into(), d.into()]],
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &other.entries;
        Self {
            entries: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        }
    }

    pub fn neg(&self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        Self {
            entries: [[-a, -b], [-c, -d]],
        }
    }

    pub fn trace(&self) -> BigInt {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> BigInt {
        let [[a, b], [c, d]] = &self.entries;
        a * d - b * c
    }

    /// True when the matrix is `±I`.
    pub fn is_projectively_trivial(&self) -> bool {
        let [[a, b], [c, d]] = &self.entries;
        b.is_zero() && c.is_zero() && a == d && a.abs().is_one()
    }

    /// Order in `PSL(2, Z)` when it divides 6, otherwise `None`.
    pub fn projective_order(&self) -> Option<u32> {
        let mut power = self.clone();
        for k in 1..=6u32 {
            if power.is_projectively_trivial() {
                return (6 % k == 0).then_some(k);
            }
            power = power.mul(self);
        }
        None
    }
}

/// Image of a 3-braid under `σ1 ↦ [[1,1],[0,1]]`, `σ2 ↦ [[1,0],[−1,1]]`.
///
/// This is the action on the first homology of the once-holed torus that
/// double covers the disk with three marked points; `Δ_3²` goes to `−I`.
pub fn sl2_image(b: &BraidWord) -> Result<IntegerMatrix2x2> {
    require_three(b)?;
    let mut out = IntegerMatrix2x2::identity();
    for &l in b.letters() {
        let g = match l {
            1 => IntegerMatrix2x2::new(1, 1, 0, 1),
            -1 => IntegerMatrix2x2::new(1, -1, 0, 1),
            2 => IntegerMatrix2x2::new(1, 0, -1, 1),
            -2 => IntegerMatrix2x2::new(1, 0, 1, 1),
            _ => unreachable!(),
        };
        out = out.mul(&g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn c_pow(d: i64) -> BraidWord {
        full_twist_power(3, d).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            normal_form(&w("3: 1 -2")).unwrap(),
            ThreeBraidNormalForm::PseudoAnosov { d: 0, a: vec![1] }
        );
        assert_eq!(
            normal_form(&w("3: -1 -1 -2")).unwrap(),
            ThreeBraidNormalForm::Periodic { d: 0, m: -2 }
        );
        let conj = w("3: 2 -1 2 2");
        let b = c_pow(2)
            .compose(&w("3: 2 2 2"))
            .unwrap()
            .conjugate_by(&conj)
            .unwrap();
        assert_eq!(
            normal_form(&b).unwrap(),
            ThreeBraidNormalForm::Reducible { d: 2, m: 3 }
        );
    }

    #[test]
    fn half_twist_and_rotation_are_periodic() {
        // Δ = C σ1^{-2} σ2^{-1},  σ1σ2 = C σ1^{-3} σ2^{-1},  (σ1σ2)² = C σ1^{-1} σ2^{-1}
        assert_eq!(
            normal_form(&w("3: 1 2 1")).unwrap(),
            ThreeBraidNormalForm::Periodic { d: 1, m: -2 }
        );
        assert_eq!(
            normal_form(&w("3: 1 2")).unwrap(),
            ThreeBraidNormalForm::Periodic { d: 1, m: -3 }
        );
        assert_eq!(
            normal_form(&w("3: 1 2 1 2")).unwrap(),
            ThreeBraidNormalForm::Periodic { d: 1, m: -1 }
        );
    }

    #[test]
    fn central_and_trivial() {
        let nf = normal_form(&c_pow(-3)).unwrap();
        assert_eq!(nf, ThreeBraidNormalForm::Reducible { d: -3, m: 0 });
        assert!(nf.is_central());
        assert_eq!(nt_type(&nf), NtType::Reducible);
        assert_eq!(
            normal_form(&w("3:")).unwrap(),
            ThreeBraidNormalForm::Reducible { d: 0, m: 0 }
        );
    }

    #[test]
    fn sigma1_powers_match_sigma2_powers() {
        for m in [-4i64, -1, 1, 5] {
            let s1 = BraidWord::generator(3, 1).unwrap().pow(m).unwrap();
            assert_eq!(
                normal_form(&s1).unwrap(),
                ThreeBraidNormalForm::Reducible { d: 0, m }
            );
        }
    }

    #[test]
    fn pseudo_anosov_rotation_is_canonical() {
        let a = ThreeBraidNormalForm::PseudoAnosov {
            d: 1,
            a: vec![0, 2, 1],
        };
        let nf = normal_form(&a.representative()).unwrap();
        assert_eq!(
            nf,
            ThreeBraidNormalForm::PseudoAnosov {
                d: 1,
                a: vec![0, 2, 1]
            }
        );
        let rotated = ThreeBraidNormalForm::PseudoAnosov {
            d: 1,
            a: vec![2, 1, 0],
        };
        assert_eq!(normal_form(&rotated.representative()).unwrap(), nf);
    }

    #[test]
    fn not_three_braid() {
        assert_eq!(
            normal_form(&w("4: 1")).unwrap_err(),
            Error::NotThreeBraid(4)
        );
        assert_eq!(sl2_image(&w("2: 1")).unwrap_err(), Error::NotThreeBraid(2));
    }

    #[test]
    fn nt_type_projection() {
        assert_eq!(
            nt_type(&ThreeBraidNormalForm::PseudoAnosov { d: 0, a: vec![1] }),
            NtType::PseudoAnosov
        );
        assert_eq!(
            nt_type(&ThreeBraidNormalForm::Periodic { d: 0, m: -1 }),
            NtType::Periodic
        );
        assert_eq!(
            nt_type(&ThreeBraidNormalForm::Reducible { d: 4, m: 0 }),
            NtType::Reducible
        );
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(sl2_image(&w("3:")).unwrap(), IntegerMatrix2x2::identity());
        assert_eq!(
            sl2_image(&c_pow(1)).unwrap(),
            IntegerMatrix2x2::identity().neg()
        );
        let m = sl2_image(&w("3: 1 -2")).unwrap();
        assert_eq!(m, IntegerMatrix2x2::new(2, 1, 1, 1));
        assert_eq!(m.trace(), BigInt::from(3));
        assert_eq!(m.det(), BigInt::one());
    }

    #[test]
    fn baldwin_lists() {
        use ThreeBraidNormalForm::*;
        assert_eq!(
            baldwin_lspace_double_cover(&PseudoAnosov { d: 0, a: vec![1] }),
            LSpaceStatus::LSpace
        );
        assert_eq!(
            baldwin_lspace_double_cover(&Reducible { d: 2, m: 5 }),
            LSpaceStatus::NotLSpace
        );
        assert_eq!(
            baldwin_lspace_double_cover(&Reducible { d: -1, m: 5 }),
            LSpaceStatus::LSpace
        );
        assert_eq!(
            baldwin_lspace_double_cover(&Periodic { d: 3, m: -1 }),
            LSpaceStatus::NotLSpace
        );
        assert_eq!(
            baldwin_lspace_double_cover(&Periodic { d: 2, m: -3 }),
            LSpaceStatus::LSpace
        );
        assert_eq!(
            baldwin_lspace_double_cover(&PseudoAnosov { d: 2, a: vec![1] }),
            LSpaceStatus::NotLSpace
        );
    }

    #[test]
    fn display_matches_cli_format() {
        let nf = ThreeBraidNormalForm::PseudoAnosov { d: 0, a: vec![1] };
        assert_eq!(nf.to_string(), "PseudoAnosov d=0 a=[1]");
    }
}
