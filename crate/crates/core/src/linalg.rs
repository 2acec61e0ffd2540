//! Exact rank and determinant of integer matrices.
//!
//! Fraction-free (Bareiss) elimination: after eliminating below the pivot
//! of step s, every entry is divided by the pivot of step s - 1, and that
//! division is exact because the intermediate entries are minors of the
//! original matrix. All arithmetic is checked i128; the matrices here are
//! small with entries in {-1, 0, 1}, so overflow would indicate a logic
//! error rather than a size problem.

fn widen(mat: &[Vec<i64>]) -> Vec<Vec<i128>> {
    mat.iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect()
}

fn checked(value: Option<i128>) -> i128 {
    value.expect("exact elimination overflowed i128")
}

/// Elimination state shared by rank and determinant: the number of pivots
/// found and, for square full-rank input, the signed last pivot.
struct Elimination {
    rank: usize,
    sign: i128,
    last_pivot: i128,
}

fn eliminate(mut a: Vec<Vec<i128>>) -> Elimination {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut state = Elimination {
        rank: 0,
        sign: 1,
        last_pivot: 1,
    };
    let mut prev_pivot: i128 = 1;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&rr| a[rr][col] != 0) else {
            continue;
        };
        if p != row {
            a.swap(row, p);
            state.sign = -state.sign;
        }
        let pivot = a[row][col];
        for rr in row + 1..rows {
            for cc in col + 1..cols {
                let num = checked(
                    checked(a[rr][cc].checked_mul(pivot))
                        .checked_sub(checked(a[rr][col].checked_mul(a[row][cc]))),
                );
                assert_eq!(
                    num % prev_pivot,
                    0,
                    "fraction-free step must divide exactly"
                );
                a[rr][cc] = num / prev_pivot;
            }
            a[rr][col] = 0;
        }
        prev_pivot = pivot;
        state.last_pivot = pivot;
        state.rank += 1;
        row += 1;
    }
    state
}

/// Rank over the rationals, computed without leaving the integers.
pub fn rank(mat: &[Vec<i64>]) -> usize {
    eliminate(widen(mat)).rank
}

/// Determinant of a square matrix. Panics on ragged or non-square input.
pub fn det(mat: &[Vec<i64>]) -> i128 {
    let n = mat.len();
    assert!(
        mat.iter().all(|row| row.len() == n),
        "determinant requires a square matrix"
    );
    if n == 0 {
        return 1;
    }
    let state = eliminate(widen(mat));
    if state.rank < n {
        0
    } else {
        // after full fraction-free elimination the last pivot is the
        // determinant of the row-permuted matrix
        state.sign * state.last_pivot
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion along the first row; exponential, test-only.
    fn det_cofactor(mat: &[Vec<i64>]) -> i128 {
        let n = mat.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return i128::from(mat[0][0]);
        }
        let mut total = 0_i128;
        for (col, &top) in mat[0].iter().enumerate() {
            if top == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = mat[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(cc, _)| cc != col)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = i128::from(top) * det_cofactor(&minor);
            total += if col % 2 == 0 { term } else { -term };
        }
        total
    }

    /// Rank as the largest size of a non-vanishing minor; test-only.
    fn rank_by_minors(mat: &[Vec<i64>]) -> usize {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if k > n {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let rows = mat.len();
        let cols = if rows == 0 { 0 } else { mat[0].len() };
        for size in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, size) {
                for cs in subsets(cols, size) {
                    let minor: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&rr| cs.iter().map(|&cc| mat[rr][cc]).collect())
                        .collect();
                    if det_cofactor(&minor) != 0 {
                        return size;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn known_values() {
        assert_eq!(det(&[]), 1);
        assert_eq!(det(&[vec![5]]), 5);
        assert_eq!(det(&[vec![1, 2], vec![3, 4]]), -2);
        assert_eq!(det(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]), 5);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![0, 1, 0], vec![0, 0, 1]]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn unitriangular_has_determinant_one() {
        let m = vec![
            vec![1, 1, 0, 1],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        assert_eq!(det(&m), 1);
        assert_eq!(rank(&m), 4);
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(
            entries in proptest::collection::vec(-4_i64..=4, 16)
        ) {
            let mat: Vec<Vec<i64>> =
                entries.chunks(4).map(|c| c.to_vec()).collect();
            prop_assert_eq!(det(&mat), det_cofactor(&mat));
        }

        #[test]
        fn rank_matches_minor_search(
            entries in proptest::collection::vec(-2_i64..=2, 12)
        ) {
            let mat: Vec<Vec<i64>> =
                entries.chunks(4).map(|c| c.to_vec()).collect();
            prop_assert_eq!(rank(&mat), rank_by_minors(&mat));
        }
    }
}
