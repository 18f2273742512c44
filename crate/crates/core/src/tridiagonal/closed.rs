//! Closed-form inverses and cofactor matrices of `P_n(k)` and `G_n(k)`,
//! written in terms of sequence values instead of continuants.

use num_rational::Ratio;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::IntScalar;
use crate::sequences::{terms_upto, SeqKind, SeqParams};

struct Tables<T> {
    p: Vec<T>,
    g: Vec<T>,
    k_pow: Vec<T>,
    a: T,
}

impl<T: IntScalar> Tables<T> {
    fn new(params: &SeqParams, n: usize) -> Self {
        let k = T::from_u64(params.k());
        let mut k_pow = vec![T::one()];
        for i in 1..=n {
            k_pow.push(k_pow[i - 1].clone() * k.clone());
        }
        Self {
            p: terms_upto(SeqKind::Pell, params, n as u64 + 1),
            g: terms_upto(SeqKind::GenPell, params, n as u64 + 1),
            k_pow,
            a: T::from_u64(params.a()),
        }
    }
}

fn sign<T: IntScalar>(v: T, i: usize, j: usize) -> T {
    if (i + j).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn check_dim(op: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::IndexOutOfDomain {
            op,
            index: n as u64,
            reason: "matrix dimension too small",
        })
    } else {
        Ok(())
    }
}

/// `(P_n(k))⁻¹` with entries (1-based)
/// `(−1)^{i+j} k^{j−i} P_i P_{n−j+1} / P_{n+1}` for `i ≤ j` and
/// `P_j P_{n−i+1} / P_{n+1}` for `i > j`.
pub fn inverse_closed_p<T: IntScalar>(k: u64, n: usize) -> Result<Matrix<Ratio<T>>> {
    check_dim("inverse_closed_p", n, 1)?;
    let t = Tables::<T>::new(&SeqParams::with_k(k)?, n);
    let det = t.p[n + 1].clone();
    Ok(Matrix::from_fn(n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        let num = if i <= j {
            sign(
                t.k_pow[j - i].clone() * t.p[i].clone() * t.p[n - j + 1].clone(),
                i,
                j,
            )
        } else {
            t.p[j].clone() * t.p[n - i + 1].clone()
        };
        Ratio::new(num, det.clone())
    }))
}

/// `(G_n(k))⁻¹`, four cases (1-based):
///
/// ```text
/// 1 = i < j:   (−1)^{j+1} a k^{j−1} P_{n−j+1} / G_{n+1}
/// 1 < i ≤ j:   (−1)^{i+j} k^{j−i} G_i P_{n−j+1} / G_{n+1}
/// i ≥ j = 1:   P_{n−i+1} / G_{n+1}
/// i > j > 1:   G_j P_{n−i+1} / G_{n+1}
/// ```
pub fn inverse_closed_g<T: IntScalar>(params: &SeqParams, n: usize) -> Result<Matrix<Ratio<T>>> {
    check_dim("inverse_closed_g", n, 1)?;
    let t = Tables::<T>::new(params, n);
    let det = t.g[n + 1].clone();
    Ok(Matrix::from_fn(n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        let num = if i == 1 && j > 1 {
            sign(
                t.a.clone() * t.k_pow[j - 1].clone() * t.p[n - j + 1].clone(),
                1,
                j,
            )
        } else if i > 1 && i <= j {
            sign(
                t.k_pow[j - i].clone() * t.g[i].clone() * t.p[n - j + 1].clone(),
                i,
                j,
            )
        } else if j == 1 {
            t.p[n - i + 1].clone()
        } else {
            t.g[j].clone() * t.p[n - i + 1].clone()
        };
        Ratio::new(num, det.clone())
    }))
}

/// Cofactor matrix `C_n(k)` of `P_n(k)`:
/// `(−1)^{i+j} k^{i−j} P_j P_{n−i+1}` for `i ≥ j`, `P_i P_{n−j+1}` for `i < j`.
/// `C_1 = [1]`.
pub fn cofactor_p<T: IntScalar>(k: u64, n: usize) -> Result<Matrix<T>> {
    check_dim("cofactor_p", n, 1)?;
    let t = Tables::<T>::new(&SeqParams::with_k(k)?, n);
    Ok(Matrix::from_fn(n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        if i >= j {
            sign(
                t.k_pow[i - j].clone() * t.p[j].clone() * t.p[n - i + 1].clone(),
                i,
                j,
            )
        } else {
            t.p[i].clone() * t.p[n - j + 1].clone()
        }
    }))
}

/// Cofactor matrix `D_n(k)` of `G_n(k)`, four cases (1-based):
///
/// ```text
/// i > j = 1:   (−1)^{i+j} a k^{i−j} P_{n−i+1}
/// i ≥ j > 1:   (−1)^{i+j} k^{i−j} G_j P_{n−i+1}
/// 1 = i ≤ j:   P_{n−j+1}
/// 1 < i < j:   G_i P_{n−j+1}
/// ```
///
/// `D_1 = [1]`.
pub fn cofactor_g<T: IntScalar>(params: &SeqParams, n: usize) -> Result<Matrix<T>> {
    check_dim("cofactor_g", n, 1)?;
    let t = Tables::<T>::new(params, n);
    Ok(Matrix::from_fn(n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        if i > 1 && j == 1 {
            sign(
                t.a.clone() * t.k_pow[i - 1].clone() * t.p[n - i + 1].clone(),
                i,
                j,
            )
        } else if j > 1 && i >= j {
            sign(
                t.k_pow[i - j].clone() * t.g[j].clone() * t.p[n - i + 1].clone(),
                i,
                j,
            )
        } else if i == 1 {
            t.p[n - j + 1].clone()
        } else {
            t.g[i].clone() * t.p[n - j + 1].clone()
        }
    }))
}
