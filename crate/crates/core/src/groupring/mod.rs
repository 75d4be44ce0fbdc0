//! Integral group rings `Z[π]`, `Z[π']`, the Laurent rings `Z[H]`, `Z[H']`,
//! Fox calculus, and exact determinants over the Laurent rings.

use alloc::vec::Vec;
use core::fmt;

mod elem;
mod laurent;

pub use elem::{fox_laurent, GroupRingElem};
pub use laurent::{render_additive, LaurentElem};

use crate::{Error, Result};

/// The ring operations shared by [`GroupRingElem`] and [`LaurentElem`].
pub trait RingElem: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Square matrix over a group ring or Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: RingElem> Matrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix must be square and nonempty".into()));
        }
        Ok(Matrix { rows })
    }

    /// Identity whose entries share the ring of `proto`.
    pub fn identity(n: usize, proto: &T) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { proto.one_like() } else { proto.zero_like() }).collect())
            .collect();
        Matrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = self.rows[i][j].zero_like();
                        for k in 0..n {
                            acc = acc.add(&self.rows[i][k].mul(&other.rows[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    pub fn map<U: RingElem, F: FnMut(&T) -> U>(&self, mut f: F) -> Matrix<U> {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect() }
    }

    pub fn try_map<U: RingElem, F: FnMut(&T) -> Result<U>>(&self, mut f: F) -> Result<Matrix<U>> {
        let rows =
            self.rows.iter().map(|r| r.iter().map(&mut f).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows })
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.size(), &self.rows[0][0])
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> T {
        let mut acc = self.rows[0][0].zero_like();
        for i in 0..self.size() {
            acc = acc.add(&self.rows[i][i]);
        }
        acc
    }
}

impl<T: RingElem> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn cofactor_det(m: &[Vec<LaurentElem>]) -> LaurentElem {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentElem>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn bareiss_det(m: &[Vec<LaurentElem>]) -> LaurentElem {
    let n = m.len();
    let mut a: Vec<Vec<LaurentElem>> = m.to_vec();
    let mut prev = a[0][0].one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return a[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.zero_like().sub(&d)
    } else {
        d
    }
}

/// Exact determinant over `Z[H]` or `Z[H']`: cofactor expansion up to size
/// 4, fraction-free Bareiss elimination above.
pub fn laurent_det(m: &Matrix<LaurentElem>) -> LaurentElem {
    if m.size() <= 4 {
        cofactor_det(&m.rows)
    } else {
        bareiss_det(&m.rows)
    }
}
