//! Braid words in the Artin generators of `B_m`.
//!
//! A letter is a nonzero signed integer: `+i` is `σ_i` (a right-handed
//! crossing of strands `i` and `i+1`), `-i` is `σ_i⁻¹`. Words are read left to
//! right and the product `uv` places `u` on top of `v`, so as mapping classes
//! of the punctured disk `uv` acts as `u` after `v`.
//!
//! Words are freely reduced when they are built. Deciding whether two words
//! name the same braid is never done here; that goes through the handle
//! reduction kernel in [`crate::dehornoy`].

use std::fmt;
use std::str::FromStr;

use crate::dehornoy::{self, ReductionBudget};
use crate::error::{Error, Result};

/// Longest word any operation is allowed to build.
pub const MAX_WORD_LEN: usize = 1_000_000;

/// A freely reduced word in the Artin generators of `B_m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word, checking every generator index and freely reducing.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        check_strands(strands)?;
        let mut out: Vec<i32> = Vec::new();
        for letter in letters {
            let index = letter.unsigned_abs() as usize;
            if letter == 0 || index >= strands {
                return Err(Error::BadGenerator {
                    letter: letter.into(),
                    strands,
                });
            }
            push_reduced(&mut out, letter);
        }
        check_len(out.len())?;
        Ok(Self {
            strands,
            letters: out,
        })
    }

    /// Wraps letters that are already valid and freely reduced.
    pub(crate) fn from_reduced_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != -w[1]));
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(Self {
            strands,
            letters: Vec::new(),
        })
    }

    /// The single generator `σ_i^{±1}` given as a signed index.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, [letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        check_len(out.len())?;
        Ok(Self {
            strands: self.strands,
            letters: out,
        })
    }

    /// Reverse the word and negate every letter.
    pub fn inverse(&self) -> BraidWord {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self^n` for any integer `n`; negative powers use the inverse.
    pub fn pow(&self, n: i64) -> Result<BraidWord> {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let times = n.unsigned_abs() as usize;
        check_len(base.len().saturating_mul(times))?;
        let mut out = Vec::with_capacity(base.len() * times);
        for _ in 0..times {
            for &l in &base.letters {
                push_reduced(&mut out, l);
            }
        }
        Ok(Self {
            strands: self.strands,
            letters: out,
        })
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(&self, other: &BraidWord) -> Result<BraidWord> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    /// `w · self · w⁻¹`.
    pub fn conjugate_by(&self, w: &BraidWord) -> Result<BraidWord> {
        w.compose(self)?.compose(&w.inverse())
    }

    /// Sum of letter signs, the image under the abelianisation `B_m → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// The strand permutation, composed so that `perm(uv) = perm(u) ∘ perm(v)`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    /// Number of components of the closed braid.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Whether the word represents the identity of `B_m`.
    pub fn is_trivial(&self) -> Result<bool> {
        self.is_trivial_with(&ReductionBudget::default())
    }

    pub fn is_trivial_with(&self, budget: &ReductionBudget) -> Result<bool> {
        Ok(dehornoy::sigma_sign_with(self, budget)? == dehornoy::OrderSign::Trivial)
    }

    /// Whether `self` and `other` represent the same braid.
    pub fn equals_in_group(&self, other: &BraidWord) -> Result<bool> {
        self.inverse().compose(other)?.is_trivial()
    }
}

/// The Garside half twist `Δ_m = (σ_1⋯σ_{m−1})(σ_1⋯σ_{m−2})⋯(σ_1σ_2)(σ_1)`.
pub fn delta(strands: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for top in (1..strands).rev() {
        letters.extend(1..=top as i32);
    }
    Ok(BraidWord::from_reduced_unchecked(strands, letters))
}

/// `Δ_m^{2d}`, a power of the generator of the centre.
pub fn full_twist_power(strands: usize, d: i64) -> Result<BraidWord> {
    delta(strands)?.pow(2 * d)
}

fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 {
        return Err(Error::BadStrands(strands));
    }
    Ok(())
}

pub(crate) fn check_len(len: usize) -> Result<()> {
    if len > MAX_WORD_LEN {
        return Err(Error::WordTooLong {
            len,
            max: MAX_WORD_LEN,
        });
    }
    Ok(())
}

fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

/// Parses the text form `m: i1 i2 ...`, e.g. `3: 1 2 -1`.
///
/// Columns in parse errors are 1-based character positions.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let colon = s.find(':').ok_or_else(|| Error::Parse {
            column: s.chars().count() + 1,
            message: "expected `strands:` prefix".into(),
        })?;
        let head = &s[..colon];
        let head_col = head.len() - head.trim_start().len() + 1;
        let strands: usize = head.trim().parse().map_err(|_| Error::Parse {
            column: head_col,
            message: format!("invalid strand count `{}`", head.trim()),
        })?;
        if strands < 2 {
            return Err(Error::Parse {
                column: head_col,
                message: format!("strand count must be at least 2, got {strands}"),
            });
        }
        let mut letters = Vec::new();
        for (offset, token) in tokens(&s[colon + 1..]) {
            let column = s[..colon + 1 + offset].chars().count() + 1;
            let letter: i32 = token.parse().map_err(|_| Error::Parse {
                column,
                message: format!("invalid generator `{token}`"),
            })?;
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::Parse {
                    column,
                    message: format!("generator {letter} out of range for {strands} strands"),
                });
            }
            letters.push(letter);
        }
        BraidWord::new(strands, letters)
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize, t))
}

/// A permutation of the strands `{1, …, m}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::BadParameters(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|i| i - 1).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}
