//! Integer kernels by unimodular row reduction, then Hermite normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `row_a -= q * row_b`.
fn sub_mul(rows: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (ra, rb) = if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &lo[b])
    };
    for (x, y) in ra.iter_mut().zip(rb.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Euclid on column `c` over rows `from..`: afterwards row `from` holds the
/// gcd and every later row is zero in that column. Returns false if the
/// column is already zero there.
fn eliminate(rows: &mut [Vec<BigInt>], c: usize, from: usize) -> bool {
    loop {
        let mut best: Option<usize> = None;
        for i in from..rows.len() {
            if !rows[i][c].is_zero() && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs()) {
                best = Some(i);
            }
        }
        let Some(p) = best else {
            return false;
        };
        rows.swap(from, p);
        let mut done = true;
        for i in from + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let q = rows[i][c].div_floor(&rows[from][c]);
            sub_mul(rows, i, from, &q);
            if !rows[i][c].is_zero() {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
}

/// Row Hermite normal form: positive pivots, entries above pivots reduced
/// into `0..pivot`, zero rows removed.
pub(crate) fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        if !eliminate(&mut rows, c, r) {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            sub_mul(&mut rows, i, r, &q);
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// A `Z`-basis (in Hermite normal form) of `{x ∈ Z^n : A x = 0}` where
/// `a` lists the rows of `A`.
pub(crate) fn integer_kernel(a: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    // Row i of `b` is (column i of A | e_i); row operations are unimodular.
    let mut b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = a.iter().map(|r| r[i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        if eliminate(&mut b, c, r) {
            r += 1;
        }
    }
    let kernel: Vec<Vec<BigInt>> = b[r..].iter().map(|row| row[m..].to_vec()).collect();
    debug_assert!(kernel
        .iter()
        .all(|x| a.iter().all(|row| { row.iter().zip(x).map(|(p, q)| p * q).sum::<BigInt>().is_zero() })));
    hermite_rows(kernel)
}

/// Rank over `Q` of the given rows.
pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    hermite_rows(rows.to_vec()).len()
}
