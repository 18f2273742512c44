#![allow(dead_code)]

use kpell_core::tridiagonal::Matrix;
use kpell_core::{BigInt, Rational};
use num_traits::{One, Zero};

/// Plain two-term recurrence from an arbitrary start pair.
pub fn recurrence(k: u64, x0: i64, x1: i64, n_max: usize) -> Vec<BigInt> {
    let k = BigInt::from(k);
    let mut v = vec![BigInt::from(x0), BigInt::from(x1)];
    while v.len() <= n_max {
        let l = v.len();
        let next = &v[l - 1] * 2 + &k * &v[l - 2];
        v.push(next);
    }
    v.truncate(n_max + 1);
    v
}

pub fn pell(k: u64, n_max: usize) -> Vec<BigInt> {
    recurrence(k, 0, 1, n_max)
}

pub fn gen_pell(k: u64, a: u64, n_max: usize) -> Vec<BigInt> {
    recurrence(k, a as i64, a as i64, n_max)
}

/// Inverse by Gauss-Jordan elimination over the rationals.
pub fn gauss_jordan_inverse(m: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = m.rows().take(n).map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Matrix::from_rows(inv).ok()
}
