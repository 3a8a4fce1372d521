//! Small exact linear algebra over a [`Scalar`]: just enough to convert
//! between the coordinate bases of a rank <= 3 weight lattice.

use crate::scalar::Scalar;

pub type Mat<S> = Vec<Vec<S>>;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn mat_vec<S: Scalar>(m: &Mat<S>, v: &[S]) -> Vec<S> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let n = a.len();
    let k = b.len();
    let p = b[0].len();
    let mut out = vec![vec![S::zero(); p]; n];
    for i in 0..n {
        for j in 0..p {
            let mut acc = S::zero();
            for t in 0..k {
                acc = acc + a[i][t].clone() * b[t][j].clone();
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn identity<S: Scalar>(n: usize) -> Mat<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` for a singular matrix.
pub fn invert<S: Scalar>(m: &Mat<S>) -> Option<Mat<S>> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity::<S>(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].clone() / p.clone();
            inv[col][j] = inv[col][j].clone() / p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                    inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
                }
            }
        }
    }
    Some(inv)
}
