//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[allow(clippy::needless_range_loop)]
/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an integer
/// matrix given by rows.
pub fn invariant_factors(rows: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = smallest_nonzero(&m, t, cols) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let delta = &q * &m[t][j];
                    m[i][j] -= delta;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..nrows {
                    let delta = &q * &m[i][t];
                    m[i][j] -= delta;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // Enforce divisibility into the trailing block.
                let bad = (t + 1..nrows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            let v = m[i][j].clone();
                            m[t][j] += v;
                        }
                    }
                }
            }
            // Move the smallest nonzero entry of row t / column t to the pivot.
            let mut best = (t, t);
            for i in t..nrows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                m.swap(t, best.0);
            }
            if best.1 != t {
                for row in m.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

fn smallest_nonzero(m: &[Vec<BigInt>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().take(cols).skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// `Z^cols / (row span)` as free rank and torsion factors `> 1`.
pub fn cokernel(rows: &[Vec<BigInt>], cols: usize) -> (usize, Vec<BigInt>) {
    let d = invariant_factors(rows, cols);
    let torsion = d.iter().filter(|x| !x.is_one()).cloned().collect();
    (cols - d.len(), torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(invariant_factors(&mat(&[&[1, 1, -1, -1]]), 4), ints(&[1]));
        assert_eq!(invariant_factors(&mat(&[&[-1]]), 1), ints(&[1]));
        assert_eq!(
            invariant_factors(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3),
            ints(&[2, 6, 12])
        );
        assert_eq!(invariant_factors(&mat(&[&[2, 0], &[0, 3]]), 2), ints(&[1, 6]));
        assert!(invariant_factors(&[], 3).is_empty());
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel(&mat(&[&[1, 1, -1, -1]]), 4), (3, vec![]));
        assert_eq!(cokernel(&mat(&[&[-2]]), 1), (0, ints(&[2])));
        assert_eq!(cokernel(&[], 2), (2, vec![]));
    }
}
