//! K-theory classes of the collection members.
//!
//! In the Grothendieck group of finite-length equivariant modules modulo
//! the classes of the special characters, each E_d decomposes as the sum
//! of the simple characters appearing in it, and those are exactly the
//! non-special characters that are >= d. Listing both the objects and the
//! character basis in increasing order therefore yields an upper
//! unitriangular integer matrix, which exhibits the classes [E_d] as a
//! basis of what they span: the collection generates.

use serde::Serialize;

use crate::collection::build_collection;
use crate::hj::HjExpansion;
use crate::linalg::det;
use crate::reps::{non_specials_of, CharIndex};

/// The order on characters used for rows and columns: comparison of
/// canonical representatives as integers.
pub fn precedes(a: CharIndex, b: CharIndex) -> bool {
    a.value() < b.value()
}

/// Multiplicity matrix of the collection in the character basis: rows are
/// collection members E_d, columns non-special characters, both in
/// increasing order; the (d, f) entry is the multiplicity of the character
/// f in E_d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KClassMatrix {
    labels: Vec<i64>,
    entries: Vec<Vec<i64>>,
}

impl KClassMatrix {
    /// Row and column labels: the non-special characters, ascending.
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    /// Sum of each row; for this matrix it equals the length of the
    /// corresponding module.
    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    /// Ones on the diagonal, zeros strictly below.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(row, values)| {
            values.iter().enumerate().all(|(col, &v)| {
                if col < row {
                    v == 0
                } else {
                    col != row || v == 1
                }
            })
        })
    }

    /// Exact determinant. For an honest unitriangular matrix this is 1,
    /// but it is computed by elimination, not read off the diagonal.
    pub fn determinant(&self) -> i64 {
        i64::try_from(det(&self.entries)).expect("determinant exceeds i64")
    }
}

/// Character multiplicity matrix of the collection.
pub fn k_matrix(e: &HjExpansion) -> KClassMatrix {
    let basis = non_specials_of(e);
    let labels: Vec<i64> = basis.iter().map(|c| c.value()).collect();
    let entries = build_collection(e)
        .iter()
        .map(|obj| {
            basis
                .iter()
                .map(|f| obj.chars().iter().filter(|&&c| c == *f).count() as i64)
                .collect()
        })
        .collect();
    KClassMatrix { labels, entries }
}

/// The generation statement in matrix form: the class matrix is square of
/// size n - r - 1, unitriangular, and has determinant one.
pub fn check_generation(e: &HjExpansion) -> bool {
    let m = k_matrix(e);
    let expected = (e.n() - e.r() as i64 - 1) as usize;
    m.size() == expected
        && m.entries().len() == m.size()
        && m.is_unitriangular()
        && m.determinant() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::build_collection;
    use crate::hj::{expand, SingularityType};
    use num_integer::Integer;

    fn instance(n: i64, q: i64) -> HjExpansion {
        expand(SingularityType::new(n, q).unwrap())
    }

    #[test]
    fn seven_five_matrix() {
        let m = k_matrix(&instance(7, 5));
        assert_eq!(m.labels(), &[2, 4, 6]);
        assert_eq!(m.entries(), &[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        assert!(m.is_unitriangular());
        assert_eq!(m.determinant(), 1);
        assert_eq!(m.row_sums(), vec![3, 2, 1]);
    }

    #[test]
    fn five_two_matrix_is_the_identity() {
        let m = k_matrix(&instance(5, 2));
        assert_eq!(m.labels(), &[3, 4]);
        assert_eq!(m.entries(), &[vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn empty_collection_still_generates() {
        let m = k_matrix(&instance(4, 3));
        assert_eq!(m.size(), 0);
        assert!(m.is_unitriangular());
        assert_eq!(m.determinant(), 1);
        assert!(check_generation(&instance(4, 3)));
    }

    #[test]
    fn generation_small_sweep() {
        for n in 2_i64..=40 {
            for q in 1..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let e = instance(n, q);
                assert!(check_generation(&e), "({n}, {q})");
                let m = k_matrix(&e);
                let lengths: Vec<i64> = build_collection(&e)
                    .iter()
                    .map(|obj| obj.length())
                    .collect();
                assert_eq!(m.row_sums(), lengths, "({n}, {q})");
            }
        }
    }
}
