//! Characters of Z/n and the digit calculus attached to an expansion.
//!
//! Every residue d in [0, n-1] has a unique expansion d = sum_t d_t i_t
//! over the descending sequence i_1 > ... > i_r whose tails stay below the
//! next i value; the greedy digits computed here are that expansion. The
//! dual value f = sum_t d_t j_t satisfies q f = d (mod n).
//!
//! A digit vector is *valid* when every digit obeys 0 <= d_t <= b_t - 1 and
//! any two maximal digits (d_t = b_t - 1) are separated by a position l
//! strictly between them with d_l <= b_l - 3. The valid vectors are exactly
//! the expansions that arise from residues, giving a bijection with
//! [0, n-1] that the verification suite checks exhaustively.

use std::fmt;

use serde::Serialize;

use crate::hj::HjExpansion;

/// A character of Z/n, stored by its canonical representative in [0, n-1].
///
/// Tensor product of characters is addition of representatives modulo n.
/// The derived order compares representatives as integers; that order is
/// the one used for the collection and the K-theory matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CharIndex(i64);

impl CharIndex {
    /// Canonical representative of `v` modulo `n`.
    pub fn reduce(v: i64, n: i64) -> Self {
        assert!(n > 0, "modulus must be positive");
        CharIndex(v.rem_euclid(n))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for CharIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The digit expansion of a residue over the i sequence, together with the
/// dual value over the j sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitVector {
    pub d: CharIndex,
    /// digits[t - 1] is the coefficient of i_t, t in [1, r].
    pub digits: Vec<i64>,
    /// f = sum_t digits[t - 1] * j_t.
    pub f: i64,
}

/// Greedy digits of `d`: peel off the largest multiple of each i_t in turn.
/// Greediness forces every tail sum below the preceding i value, which pins
/// the expansion down uniquely.
pub fn digits_of(e: &HjExpansion, d: CharIndex) -> DigitVector {
    let mut rem = d.value();
    let mut digits = Vec::with_capacity(e.r());
    let mut f = 0;
    for t in 1..=e.r() {
        let dt = rem / e.i(t);
        rem -= dt * e.i(t);
        f += dt * e.j(t);
        digits.push(dt);
    }
    debug_assert_eq!(rem, 0, "i_r = 1 absorbs any remainder");
    DigitVector { d, digits, f }
}

/// Dual value of a digit vector without the greedy recomputation.
pub fn dual_value(e: &HjExpansion, digits: &[i64]) -> i64 {
    digits
        .iter()
        .enumerate()
        .map(|(idx, &dt)| dt * e.j(idx + 1))
        .sum()
}

/// Test the digit bounds and the separation condition.
///
/// Scanning left to right, it suffices to look at *consecutive* maximal
/// digits: if some position between them were <= b_l - 3 the first maximum
/// would have been closed off, and a separator for a wider pair of maxima
/// in particular separates some consecutive pair.
pub fn is_valid_digits(e: &HjExpansion, digits: &[i64]) -> bool {
    if digits.len() != e.r() {
        return false;
    }
    let mut open_max = false;
    for (idx, &dt) in digits.iter().enumerate() {
        let bt = e.b(idx + 1);
        if dt < 0 || dt > bt - 1 {
            return false;
        }
        if dt == bt - 1 {
            if open_max {
                return false;
            }
            open_max = true;
        } else if dt <= bt - 3 {
            open_max = false;
        }
    }
    true
}

/// All valid digit vectors, in lexicographic order. The sum values
/// sum_t d_t i_t run over [0, n-1] without repetition; that bijection is a
/// theorem checked by the verification suite, not assumed here.
pub fn enumerate_valid_digits(e: &HjExpansion) -> Vec<Vec<i64>> {
    fn extend(
        e: &HjExpansion,
        t: usize,
        open_max: bool,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if t > e.r() {
            out.push(cur.clone());
            return;
        }
        let bt = e.b(t);
        for dt in 0..bt {
            let is_max = dt == bt - 1;
            if is_max && open_max {
                continue;
            }
            let next_open = if is_max {
                true
            } else if dt <= bt - 3 {
                false
            } else {
                open_max
            };
            cur.push(dt);
            extend(e, t + 1, next_open, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    extend(e, 1, false, &mut Vec::with_capacity(e.r()), &mut out);
    out
}

/// The special characters: 0 together with the residues i_1, ..., i_r.
/// These index the full sheaves on the resolution in Wunram's sense; there
/// are exactly r + 1 of them. Sorted ascending.
pub fn specials_of(e: &HjExpansion) -> Vec<CharIndex> {
    let mut out: Vec<CharIndex> = (0..=e.r() + 1).map(|t| e.char(e.i(t))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn is_special(e: &HjExpansion, c: CharIndex) -> bool {
    let v = c.value();
    v == 0 || (1..=e.r()).any(|t| e.i(t) == v)
}

/// The non-special characters, sorted ascending. There are n - r - 1.
pub fn non_specials_of(e: &HjExpansion) -> Vec<CharIndex> {
    (0..e.n())
        .map(|v| e.char(v))
        .filter(|&c| !is_special(e, c))
        .collect()
}
