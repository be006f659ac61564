//! `B_3` as the amalgam `⟨x, y | x² = y³⟩` with `x = Δ = σ1σ2σ1`, `y = σ1σ2`.
//!
//! `C = x² = y³` generates the centre, and `B_3 / ⟨C⟩` is the free product
//! `Z/2 * Z/3`. Every element is `C^k` times a unique alternating word in the
//! syllables `x`, `y`, `y²`, so this doubles as an exact word-problem oracle
//! for 3-braids. In these coordinates
//!
//! ```text
//! σ1   = C⁻¹ y² x      σ2   = C⁻¹ x y²
//! σ1⁻¹ = C⁻¹ x y       σ2⁻¹ = C⁻¹ y x
//! ```

use std::collections::VecDeque;

use crate::braid::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Syllable {
    X,
    /// `y^e` with `e ∈ {1, 2}`.
    Y(u8),
}

/// `C^central · word`, with `word` alternating and reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct ModularWord {
    pub central: i64,
    pub word: Vec<Syllable>,
}

impl ModularWord {
    pub fn from_braid(b: &BraidWord) -> Self {
        debug_assert_eq!(b.strands(), 3);
        let mut out = ModularWord::default();
        for &l in b.letters() {
            let (first, second) = match l {
                1 => (Syllable::Y(2), Syllable::X),
                2 => (Syllable::X, Syllable::Y(2)),
                -1 => (Syllable::X, Syllable::Y(1)),
                -2 => (Syllable::Y(1), Syllable::X),
                _ => unreachable!("3-braid letter {l}"),
            };
            out.central -= 1;
            out.push(first);
            out.push(second);
        }
        out
    }

    fn push(&mut self, s: Syllable) {
        push_syllable(&mut self.word, &mut self.central, s);
    }

    /// Conjugates to a cyclically reduced word: either at most one syllable,
    /// or an alternating word whose first and last syllables differ in kind.
    pub fn cyclically_reduced(&self) -> ModularWord {
        let mut central = self.central;
        let mut word: VecDeque<Syllable> = self.word.iter().copied().collect();
        while word.len() >= 2 {
            let (first, last) = (word[0], word[word.len() - 1]);
            let same_kind = matches!(
                (first, last),
                (Syllable::X, Syllable::X) | (Syllable::Y(_), Syllable::Y(_))
            );
            if !same_kind {
                break;
            }
            // s·w ~ w·s
            word.pop_front();
            let mut tail = vec![word.pop_back().expect("len >= 1")];
            push_syllable(&mut tail, &mut central, first);
            word.extend(tail);
        }
        ModularWord {
            central,
            word: word.into_iter().collect(),
        }
    }
}

fn push_syllable(word: &mut Vec<Syllable>, central: &mut i64, s: Syllable) {
    match (word.last().copied(), s) {
        (Some(Syllable::X), Syllable::X) => {
            word.pop();
            *central += 1;
        }
        (Some(Syllable::Y(a)), Syllable::Y(b)) => {
            word.pop();
            let mut e = a + b;
            if e >= 3 {
                *central += 1;
                e -= 3;
            }
            if e > 0 {
                word.push(Syllable::Y(e));
            }
        }
        _ => word.push(s),
    }
}


#[cfg(test)]
mod oracle {
    use super::*;
    use proptest::prelude::*;

    fn arb_three_braid() -> impl Strategy<Value = BraidWord> {
        proptest::collection::vec(prop_oneof![Just(1), Just(2), Just(-1), Just(-2)], 0..30)
            .prop_map(|ls| BraidWord::new(3, ls).unwrap())
    }

    proptest! {
        #[test]
        fn agrees_with_handle_reduction(u in arb_three_braid(), v in arb_three_braid()) {
            let same = ModularWord::from_braid(&u) == ModularWord::from_braid(&v);
            prop_assert_eq!(same, u.equals_in_group(&v).unwrap());
            let trivial = ModularWord::from_braid(&u) == ModularWord::default();
            prop_assert_eq!(trivial, u.is_trivial().unwrap());
        }

        #[test]
        fn cyclic_reduction_keeps_the_exponent_sum(u in arb_three_braid()) {
            // e(x) = 3, e(y) = 2, e(C) = 6
            let weight = |m: &ModularWord| {
                6 * m.central + m.word.iter().map(|s| match s {
                    Syllable::X => 3,
                    Syllable::Y(e) => 2 * *e as i64,
                }).sum::<i64>()
            };
            let m = ModularWord::from_braid(&u);
            prop_assert_eq!(weight(&m), u.exponent_sum());
            prop_assert_eq!(weight(&m.cyclically_reduced()), u.exponent_sum());
        }
    }
}
