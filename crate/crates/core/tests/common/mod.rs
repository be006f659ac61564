#![allow(dead_code)]

use braidcert::braid::{full_twist_power, BraidWord};
use proptest::prelude::*;
use rand::Rng;

/// Random letters for `B_m`, freely reduced by construction.
pub fn arb_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let k = (strands - 1) as i32;
    proptest::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(
            strands,
            ls.into_iter().map(|(i, pos)| if pos { i } else { -i }),
        )
        .unwrap()
    })
}

pub fn arb_word_any(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |m| arb_word(m, max_len))
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let k = (strands - 1) as i32;
    let letters = (0..len).map(|_| {
        let i = rng.gen_range(1..=k);
        if rng.gen_bool(0.5) {
            i
        } else {
            -i
        }
    });
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_positive_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let k = (strands - 1) as i32;
    BraidWord::new(strands, (0..len).map(|_| rng.gen_range(1..=k))).unwrap()
}

/// `σ_i σ_{i+1} σ_i σ_{i+1}⁻¹ σ_i⁻¹ σ_{i+1}⁻¹`, a relator that free reduction keeps.
fn braid_relator(i: i32) -> [i32; 6] {
    [i, i + 1, i, -(i + 1), -i, -(i + 1)]
}

/// A different word for the same braid: inserts relators and applies
/// braid and commutation moves at random positions.
pub fn scramble(rng: &mut impl Rng, w: &BraidWord, moves: usize) -> BraidWord {
    let m = w.strands();
    let mut letters = w.letters().to_vec();
    for _ in 0..moves {
        let p = rng.gen_range(0..=letters.len());
        match rng.gen_range(0..3) {
            0 if m >= 3 => {
                let i = rng.gen_range(1..(m as i32 - 1));
                let mut r = braid_relator(i).to_vec();
                if rng.gen_bool(0.5) {
                    r = r.into_iter().rev().map(|l| -l).collect();
                }
                letters.splice(p..p, r);
            }
            1 if p + 1 < letters.len() => {
                let (a, b) = (letters[p], letters[p + 1]);
                if a.unsigned_abs().abs_diff(b.unsigned_abs()) >= 2 {
                    letters.swap(p, p + 1);
                }
            }
            2 if p + 2 < letters.len() => {
                let (a, b, c) = (letters[p], letters[p + 1], letters[p + 2]);
                if a == c
                    && a.signum() == b.signum()
                    && a.unsigned_abs().abs_diff(b.unsigned_abs()) == 1
                {
                    letters[p] = b;
                    letters[p + 1] = a;
                    letters[p + 2] = b;
                }
            }
            _ => {
                let i = rng.gen_range(1..m as i32);
                letters.splice(p..p, [i, -i]);
            }
        }
    }
    BraidWord::new(m, letters).unwrap()
}

pub fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn c_power(d: i64) -> BraidWord {
    full_twist_power(3, d).unwrap()
}

/// `C^d · σ1 σ2^{-a_1} ⋯ σ1 σ2^{-a_n}`.
pub fn type_one(d: i64, a: &[u64]) -> BraidWord {
    let mut letters = Vec::new();
    for &ai in a {
        letters.push(1);
        letters.extend(std::iter::repeat_n(-2, ai as usize));
    }
    c_power(d)
        .compose(&BraidWord::new(3, letters).unwrap())
        .unwrap()
}

/// `C^d · σ1^{-j} σ2^{-1}`.
pub fn periodic(d: i64, j: usize) -> BraidWord {
    let mut letters = vec![-1; j];
    letters.push(-2);
    c_power(d)
        .compose(&BraidWord::new(3, letters).unwrap())
        .unwrap()
}
