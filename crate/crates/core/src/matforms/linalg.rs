//! Dense linear algebra over any `Scalar` field, on row-major `Vec<Vec<F>>`.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Scalar>(n: usize) -> Matrix<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn mat_mul<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let mut acc = F::zero();
                    for k in 0..m {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = acc + a[i][k].clone() * b[k][j].clone();
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Scalar>(a: &Matrix<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(F::zero(), |acc, (x, y)| {
                if x.is_zero() || y.is_zero() { acc } else { acc + x.clone() * y.clone() }
            })
        })
        .collect()
}

pub fn transpose<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduces in place to reduced row-echelon form and returns the pivot columns.
pub fn rref<F: Scalar>(a: &mut Matrix<F>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    if !a[r][j].is_zero() {
                        a[i][j] = a[i][j].clone() - f.clone() * a[r][j].clone();
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(rows);
    pivots
}

pub fn rank<F: Scalar>(a: &Matrix<F>) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

pub fn determinant<F: Scalar>(a: &Matrix<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return F::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = det * m[c][c].clone();
        let inv = m[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * inv.clone();
            for j in c..n {
                if !m[c][j].is_zero() {
                    m[i][j] = m[i][j].clone() - f.clone() * m[c][j].clone();
                }
            }
        }
    }
    det
}

pub fn inverse<F: Scalar>(a: &Matrix<F>) -> Result<Matrix<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right kernel {v : a v = 0}.
pub fn kernel<F: Scalar>(a: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut m = a.clone();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution x of a x = b, if one exists.
pub fn solve<F: Scalar>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &p) in piv.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CycNum;

    fn m(rows: &[&[i64]]) -> Matrix<CycNum> {
        rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect()).collect()
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&a), CycNum::from_int(18));
        let ai = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &ai), identity(3));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(CycNum::is_zero));
        let b = [CycNum::from_int(1), CycNum::from_int(2)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(mat_vec(&a, &x), b.to_vec());
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &b).is_none());
    }
}
