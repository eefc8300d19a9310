//! Exact Gaussian elimination over [`Scalar`] matrices.
//!
//! Pivots are the first nonzero entry in column order; with exact arithmetic
//! the strategy has no effect on the result.

use crate::exact_fields::{Field, Scalar};

/// Solution set of `M x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Inconsistent,
    /// `particular + span(kernel)`; free coordinates of `particular` are zero.
    Solutions {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn reduce(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let (pivot_row, row) = if i < r {
                let (lo, hi) = rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut work = rows.to_vec();
    reduce(&mut work, cols).len()
}

/// Solves `coeffs · x = rhs` exactly.
pub fn solve(field: Field, coeffs: &[Vec<Scalar>], rhs: &[Scalar]) -> AffineSolution {
    assert_eq!(coeffs.len(), rhs.len(), "row count mismatch");
    let n = coeffs.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = coeffs
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut aug, n);
    // a pivot in the augmented column would mean 0 = 1
    if aug.iter().skip(pivots.len()).any(|row| !row[n].is_zero()) {
        return AffineSolution::Inconsistent;
    }

    let mut particular = vec![field.zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = aug[row][n].clone();
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -&aug[row][free];
            }
            v
        })
        .collect();
    AffineSolution::Solutions { particular, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let q = Field::Rational;
        assert_eq!(rank(&ints(q, &[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&ints(q, &[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&ints(q, &[&[0, 0], &[0, 0]])), 0);
        let f2 = Field::Prime(2);
        // det = 1*4 - 2*3 = -2 ≡ 0 mod 2
        assert_eq!(rank(&ints(f2, &[&[1, 2], &[3, 4]])), 1);
    }

    #[test]
    fn solve_unique() {
        let q = Field::Rational;
        let a = ints(q, &[&[2, 1], &[1, 3]]);
        let b = vec![q.int(3), q.int(5)];
        let AffineSolution::Solutions { particular, kernel } = solve(q, &a, &b) else {
            panic!("expected a solution");
        };
        assert!(kernel.is_empty());
        assert_eq!(
            particular,
            vec![q.ratio(4, 5).unwrap(), q.ratio(7, 5).unwrap()]
        );
    }

    #[test]
    fn solve_line_and_inconsistent() {
        let q = Field::Rational;
        let a = ints(q, &[&[1, 1], &[2, 2]]);
        let sol = solve(q, &a, &[q.int(1), q.int(2)]);
        assert_eq!(
            sol,
            AffineSolution::Solutions {
                particular: vec![q.int(1), q.int(0)],
                kernel: vec![vec![q.int(-1), q.int(1)]],
            }
        );
        assert_eq!(
            solve(q, &a, &[q.int(1), q.int(3)]),
            AffineSolution::Inconsistent
        );
    }

    #[test]
    fn overdetermined_system() {
        let f3 = Field::Prime(3);
        let a = ints(f3, &[&[1, 0], &[0, 1], &[1, 1], &[0, 0]]);
        let b = vec![f3.int(1), f3.int(2), f3.int(0), f3.int(0)];
        assert_eq!(
            solve(f3, &a, &b),
            AffineSolution::Solutions {
                particular: vec![f3.int(1), f3.int(2)],
                kernel: vec![],
            }
        );
        let b_bad = vec![f3.int(1), f3.int(2), f3.int(1), f3.int(0)];
        assert_eq!(solve(f3, &a, &b_bad), AffineSolution::Inconsistent);
    }
}
