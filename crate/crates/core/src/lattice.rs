//! Integer lattices: row-style Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-echelon reduction over `Z` using only unimodular row operations, pivoting
/// in columns `0..pivot_cols`. Returns the rank (number of pivot rows, which
/// come first). With `pivot_cols` equal to the row length this is the Hermite
/// normal form: pivots positive, entries above each pivot reduced into
/// `[0, pivot)`.
fn echelon(rows: &mut [Vec<BigInt>], pivot_cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..pivot_cols {
        if rank == rows.len() {
            break;
        }
        loop {
            let best = (rank..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(best) = best else { break };
            rows.swap(rank, best);
            let mut done = true;
            for i in rank + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[rank][c]);
                let pivot = rows[rank].clone();
                sub_multiple(&mut rows[i], &pivot, &q);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rank < rows.len() && !rows[rank][c].is_zero() {
            if rows[rank][c].is_negative() {
                for x in rows[rank].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot = rows[rank].clone();
            for row in rows.iter_mut().take(rank) {
                let q = row[c].div_floor(&pivot[c]);
                if !q.is_zero() {
                    sub_multiple(row, &pivot, &q);
                }
            }
            rank += 1;
        }
    }
    rank
}

fn sub_multiple(row: &mut [BigInt], pivot: &[BigInt], q: &BigInt) {
    for (x, p) in row.iter_mut().zip(pivot) {
        *x -= q * p;
    }
}

/// Hermite normal form of the lattice spanned by `rows`; zero rows dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows = rows.to_vec();
    let rank = echelon(&mut rows, width);
    rows.truncate(rank);
    rows
}

/// A `Z`-basis (in Hermite normal form) of `{x ∈ Z^ncols : A x = 0}`.
pub fn integer_kernel(a: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    // rows [A^T e_j | e_j]; row operations keep the right block unimodular
    let mut rows: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut row: Vec<BigInt> = a.iter().map(|r| r[j].clone()).collect();
            row.extend((0..ncols).map(|k| if k == j { 1.into() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelon(&mut rows, m);
    let kernel: Vec<Vec<BigInt>> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
    hermite_normal_form(&kernel)
}

/// `gcd` of the `col`-th coordinates of a lattice basis and an explicit
/// lattice vector attaining it (`None` if the coordinate vanishes on the lattice).
pub fn coordinate_generator(basis: &[Vec<BigInt>], col: usize) -> Option<(BigInt, Vec<BigInt>)> {
    let width = basis.first()?.len();
    // move `col` to the front, then the first HNF row carries the gcd
    let permuted: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|r| {
            let mut p = vec![r[col].clone()];
            p.extend(r.iter().enumerate().filter(|(i, _)| *i != col).map(|(_, x)| x.clone()));
            p
        })
        .collect();
    let hnf = hermite_normal_form(&permuted);
    let first = hnf.first()?;
    if first[0].is_zero() {
        return None;
    }
    let mut v = vec![BigInt::zero(); width];
    v[col] = first[0].clone();
    let mut rest = first[1..].iter();
    for (i, slot) in v.iter_mut().enumerate() {
        if i != col {
            *slot = rest.next().expect("width preserved").clone();
        }
    }
    Some((first[0].clone(), v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mat_vec(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn hnf_small() {
        let h = hermite_normal_form(&m(&[&[2, 4], &[3, 5]]));
        assert_eq!(h, m(&[&[1, 1], &[0, 2]]));
        let h = hermite_normal_form(&m(&[&[4, 6], &[6, 9]]));
        assert_eq!(h, m(&[&[2, 3]]));
    }

    #[test]
    fn kernel_of_single_relation() {
        // 3 x0 - 6 x1 + 6 x2 - 4 x3 = 0
        let a = m(&[&[3, -6, 6, -4]]);
        let k = integer_kernel(&a, 4);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(Zero::is_zero));
        }
        let (g, v) = coordinate_generator(&k, 0).unwrap();
        assert_eq!(g, BigInt::from(2));
        assert_eq!(v[0], BigInt::from(2));
        assert!(mat_vec(&a, &v).iter().all(Zero::is_zero));
    }

    #[test]
    fn kernel_is_saturated() {
        // x0 + 2 x1 = 0 has kernel spanned by (-2, 1), not (-4, 2)
        let k = integer_kernel(&m(&[&[2, 4]]), 2);
        assert_eq!(k, m(&[&[2, -1]]));
        assert!(integer_kernel(&m(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }

    #[test]
    fn coordinate_generator_vanishing() {
        let basis = m(&[&[0, 1, 2]]);
        assert!(coordinate_generator(&basis, 0).is_none());
        assert_eq!(coordinate_generator(&basis, 2).unwrap().0, BigInt::from(2));
    }
}
