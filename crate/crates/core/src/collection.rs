//! The exceptional collection attached to a cyclic quotient singularity.
//!
//! Each non-special character d sits strictly between two consecutive
//! members of the descending sequence, i_{t-1} > d > i_t; the index t is
//! the *level* of d. The collection member E_d is the equivariant module
//!
//! ```text
//! E_d = R_{j_t} (x) rho_c,    c = d - (j_t - 1) q  (mod n),
//! ```
//!
//! where R_k = C[y]/(y^k) carries the G-action with char(y^l) = c + l q.
//! Its socle (the last basis vector y^{k-1}) has character d, and every
//! character appearing in E_d is non-special with d the smallest of them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hj::HjExpansion;
use crate::reps::{is_special, non_specials_of, CharIndex};

/// One member of the collection: a cyclic C[y]-module of finite length with
/// an equivariant structure, recorded by its length and twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalObject {
    d: CharIndex,
    level: usize,
    length: i64,
    twist: CharIndex,
    chars: Vec<CharIndex>,
}

impl ExceptionalObject {
    /// The indexing character, equal to the character of the socle.
    pub fn d(&self) -> CharIndex {
        self.d
    }

    /// The level t with i_{t-1} > d > i_t.
    pub fn level(&self) -> usize {
        self.level
    }

    /// The C-dimension j_t of the underlying module R_{j_t}.
    pub fn length(&self) -> i64 {
        self.length
    }

    /// The character of the generator 1 in R_{j_t} (x) rho_c.
    pub fn twist(&self) -> CharIndex {
        self.twist
    }

    /// Characters of the monomial basis 1, y, ..., y^{j_t - 1}, in that
    /// order; entry l is twist + l q.
    pub fn chars(&self) -> &[CharIndex] {
        &self.chars
    }

    /// Character of the socle basis vector y^{j_t - 1}.
    pub fn socle_char(&self) -> CharIndex {
        *self.chars.last().expect("length is at least 1")
    }
}

/// The level of a non-special character: the unique t in [1, r] with
/// i_{t-1} > d > i_t. Special characters have no level.
pub fn level_of(e: &HjExpansion, d: CharIndex) -> Result<usize> {
    if is_special(e, d) {
        return Err(Error::SpecialCharacter {
            d: d.value(),
            n: e.n(),
        });
    }
    let v = d.value();
    for t in 1..=e.r() {
        if e.i(t - 1) > v && v > e.i(t) {
            return Ok(t);
        }
    }
    unreachable!("a non-special character lies strictly between consecutive i values");
}

/// Build the collection member indexed by the non-special character `d`.
pub fn build_object(e: &HjExpansion, d: CharIndex) -> Result<ExceptionalObject> {
    let t = level_of(e, d)?;
    let length = e.j(t);
    let q = e.q();
    let twist = e.char(d.value() - (length - 1) * q);
    let chars = (0..length).map(|l| e.char(twist.value() + l * q)).collect();
    Ok(ExceptionalObject {
        d,
        level: t,
        length,
        twist,
        chars,
    })
}

/// The full collection E_d over all non-special characters, ordered by
/// ascending d. This is the exceptional collection order: Hom and Ext
/// groups vanish from larger d to strictly smaller d.
pub fn build_collection(e: &HjExpansion) -> Vec<ExceptionalObject> {
    non_specials_of(e)
        .into_iter()
        .map(|d| build_object(e, d).expect("non-special by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hj::{expand, SingularityType};
    use num_integer::Integer;

    fn instance(n: i64, q: i64) -> HjExpansion {
        expand(SingularityType::new(n, q).unwrap())
    }

    fn chars(obj: &ExceptionalObject) -> Vec<i64> {
        obj.chars().iter().map(|c| c.value()).collect()
    }

    #[test]
    fn seven_five_collection() {
        let e = instance(7, 5);
        let coll = build_collection(&e);
        assert_eq!(coll.len(), 3);

        assert_eq!(coll[0].d().value(), 2);
        assert_eq!(coll[0].level(), 3);
        assert_eq!(coll[0].length(), 3);
        assert_eq!(coll[0].twist().value(), 6);
        assert_eq!(chars(&coll[0]), vec![6, 4, 2]);

        assert_eq!(coll[1].d().value(), 4);
        assert_eq!(coll[1].level(), 2);
        assert_eq!(coll[1].length(), 2);
        assert_eq!(coll[1].twist().value(), 6);
        assert_eq!(chars(&coll[1]), vec![6, 4]);

        assert_eq!(coll[2].d().value(), 6);
        assert_eq!(coll[2].level(), 1);
        assert_eq!(coll[2].length(), 1);
        assert_eq!(coll[2].twist().value(), 6);
        assert_eq!(chars(&coll[2]), vec![6]);
    }

    #[test]
    fn level_rejects_special_characters() {
        let e = instance(7, 5);
        for v in [0, 1, 3, 5] {
            assert!(matches!(
                level_of(&e, e.char(v)),
                Err(Error::SpecialCharacter { .. })
            ));
        }
    }

    #[test]
    fn smooth_chain_has_empty_collection() {
        // q = n - 1 expands to a chain of (-2)-curves; every character is
        // special and the collection is empty.
        for n in 2_i64..=10 {
            let e = instance(n, n - 1);
            assert!(build_collection(&e).is_empty());
        }
    }

    #[test]
    fn object_invariants_small_sweep() {
        for n in 2_i64..=40 {
            for q in 1..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let e = instance(n, q);
                for obj in build_collection(&e) {
                    let d = obj.d();
                    let t = obj.level();
                    assert!(e.i(t - 1) > d.value() && d.value() > e.i(t));
                    assert_eq!(obj.length(), e.j(t));
                    assert_eq!(obj.socle_char(), d);
                    assert_eq!(obj.chars().len() as i64, obj.length());
                    // every character in E_d is non-special, d the smallest
                    for &c in obj.chars() {
                        assert!(!is_special(&e, c), "({n}, {q}), d = {d}");
                        assert!(c.value() >= d.value());
                    }
                    // characters are pairwise distinct
                    let mut vals = chars(&obj);
                    vals.sort_unstable();
                    vals.dedup();
                    assert_eq!(vals.len() as i64, obj.length());
                }
            }
        }
    }
}
