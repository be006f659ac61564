//! The Dehornoy order on `B_m`, decided by handle reduction.
//!
//! A braid is positive when some word for it contains `σ_j` but no `σ_j⁻¹`
//! and no `σ_i^{±1}` with `i < j`. Handle reduction rewrites any word into an
//! equivalent one that is empty, σ-positive or σ-negative, which decides both
//! the order and the word problem. The comparator is left-invariant:
//! `u < v` iff `u⁻¹v` is positive.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}` where `v` only uses
//! generators with index above `i`. It is replaced by `v` with every
//! `σ_{i+1}^d` rewritten as `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. We always reduce
//! the handle whose right end is leftmost; such a handle cannot contain a
//! nested `σ_{i+1}`-handle, so it is permitted.

use std::cmp::Ordering;

use crate::braid::{full_twist_power, BraidWord, MAX_WORD_LEN};
use crate::error::{Error, Result};

/// Cap on the length of intermediate words during handle reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionBudget {
    pub max_len: usize,
}

impl ReductionBudget {
    pub fn new(max_len: usize) -> Self {
        Self { max_len }
    }
}

impl Default for ReductionBudget {
    fn default() -> Self {
        Self {
            max_len: MAX_WORD_LEN,
        }
    }
}

/// Position of a braid relative to the identity in the Dehornoy order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum OrderSign {
    Negative,
    Trivial,
    Positive,
}

const NONE: usize = usize::MAX;

/// Runs handle reduction to completion and returns the handle-free word.
pub fn handle_reduce(word: &BraidWord, budget: &ReductionBudget) -> Result<Vec<i32>> {
    reduce_letters(word.letters().to_vec(), word.strands(), budget.max_len)
}

#[allow(clippy::mut_range_bound)] // the range restarts via `continue 'scan`
fn reduce_letters(mut w: Vec<i32>, strands: usize, max_len: usize) -> Result<Vec<i32>> {
    // last[i]: position of the latest σ_i^{±1} with no smaller index after it
    let mut last = vec![NONE; strands];
    let mut replacement: Vec<i32> = Vec::new();
    let mut resume = 0;
    'scan: loop {
        rebuild_state(&w, resume, &mut last);
        for p in resume..w.len() {
            let letter = w[p];
            let i = letter.unsigned_abs() as usize;
            let q = last[i];
            if q != NONE && w[q] == -letter {
                let e = w[q].signum();
                let next = (i + 1) as i32;
                replacement.clear();
                for &l in &w[q + 1..p] {
                    if l.unsigned_abs() as usize == i + 1 {
                        let d = l.signum();
                        push_reduced(&mut replacement, -e * next);
                        push_reduced(&mut replacement, d * i as i32);
                        push_reduced(&mut replacement, e * next);
                    } else {
                        push_reduced(&mut replacement, l);
                    }
                }
                let new_len = w.len() - (p - q + 1) + replacement.len();
                if new_len > max_len {
                    return Err(Error::ReductionBudgetExceeded {
                        len: new_len,
                        max: max_len,
                    });
                }
                w.splice(q..=p, replacement.drain(..));
                resume = q;
                continue 'scan;
            }
            last[i] = p;
            for slot in &mut last[i + 1..] {
                *slot = NONE;
            }
        }
        return Ok(w);
    }
}

/// Recomputes the scan state for the prefix `w[..end]`.
fn rebuild_state(w: &[i32], end: usize, last: &mut [usize]) {
    last.iter_mut().for_each(|s| *s = NONE);
    let mut min_seen = usize::MAX;
    for q in (0..end).rev() {
        let j = w[q].unsigned_abs() as usize;
        if j < min_seen {
            last[j] = q;
            min_seen = j;
            if j == 1 {
                break;
            }
        }
    }
}

fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

/// Sign of a handle-free word: the sign of its lowest generator.
fn sign_of_reduced(w: &[i32]) -> OrderSign {
    match w.iter().min_by_key(|l| l.unsigned_abs()) {
        None => OrderSign::Trivial,
        Some(l) if *l > 0 => OrderSign::Positive,
        Some(_) => OrderSign::Negative,
    }
}

pub fn sigma_sign(u: &BraidWord) -> Result<OrderSign> {
    sigma_sign_with(u, &ReductionBudget::default())
}

pub fn sigma_sign_with(u: &BraidWord, budget: &ReductionBudget) -> Result<OrderSign> {
    Ok(sign_of_reduced(&handle_reduce(u, budget)?))
}

/// Compares `u` and `v` in the Dehornoy order: `u < v` iff `u⁻¹v > 1`.
pub fn compare(u: &BraidWord, v: &BraidWord) -> Result<Ordering> {
    compare_with(u, v, &ReductionBudget::default())
}

pub fn compare_with(u: &BraidWord, v: &BraidWord, budget: &ReductionBudget) -> Result<Ordering> {
    let quotient = u.inverse().compose(v)?;
    Ok(match sigma_sign_with(&quotient, budget)? {
        OrderSign::Positive => Ordering::Less,
        OrderSign::Trivial => Ordering::Equal,
        OrderSign::Negative => Ordering::Greater,
    })
}

/// The Dehornoy floor: the least `k ≥ 0` with `Δ^{−2k−2} < b < Δ^{2k+2}`.
pub fn dehornoy_floor(u: &BraidWord) -> Result<u64> {
    dehornoy_floor_with(u, &ReductionBudget::default())
}

pub fn dehornoy_floor_with(u: &BraidWord, budget: &ReductionBudget) -> Result<u64> {
    let sign = sigma_sign_with(u, budget)?;
    if sign == OrderSign::Trivial {
        return Ok(0);
    }
    let m = u.strands() as u64;
    // Δ² is central, so only the bound on the side of u's sign can fail:
    // a positive u always exceeds Δ^{-2k-2}, a negative one is below Δ^{2k+2}.
    let inside = |k: u64| -> Result<bool> {
        let twist = full_twist_power(u.strands(), k as i64 + 1)?;
        let probe = match sign {
            // u < Δ^{2k+2}  ⟺  u⁻¹ Δ^{2k+2} > 1
            OrderSign::Positive => u.inverse().compose(&twist)?,
            // Δ^{-2k-2} < u  ⟺  Δ^{2k+2} u > 1
            _ => twist.compose(u)?,
        };
        Ok(sigma_sign_with(&probe, budget)? == OrderSign::Positive)
    };
    let mut k = u.exponent_sum().unsigned_abs() / (m * (m - 1));
    if inside(k)? {
        while k > 0 && inside(k - 1)? {
            k -= 1;
        }
    } else {
        loop {
            k += 1;
            if inside(k)? {
                break;
            }
        }
    }
    Ok(k)
}
