//! Tridiagonal generating matrices, continuant determinants and Usmani's
//! inverse formula.
//!
//! A tridiagonal matrix is stored by its three bands:
//!
//! ```text
//! a₁ b₁
//! c₁ a₂ b₂
//!    c₂ a₃ ⋱
//!       ⋱  ⋱  b_{n−1}
//!          c_{n−1} a_n
//! ```
//!
//! The bottom-right corner is `a_n`; the forward recurrence
//! `θ_i = a_i·θ_{i−1} − b_{i−1}·c_{i−1}·θ_{i−2}` only yields the determinant
//! with that corner.

mod closed;
mod dense;

pub use closed::{cofactor_g, cofactor_p, inverse_closed_g, inverse_closed_p};
pub use dense::{bareiss_det, Matrix, MatrixDoc};

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::scalar::FieldScalar;
use crate::sequences::{SeqKind, SeqParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal<T> {
    diag: Vec<T>,
    sup: Vec<T>,
    sub: Vec<T>,
}

impl<T> Tridiagonal<T> {
    pub fn new(diag: Vec<T>, sup: Vec<T>, sub: Vec<T>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::Dimension("tridiagonal matrix needs n >= 1".into()));
        }
        if sup.len() != n - 1 || sub.len() != n - 1 {
            return Err(Error::Dimension(format!(
                "bands of length {}/{} for n = {n}, expected {}",
                sup.len(),
                sub.len(),
                n - 1
            )));
        }
        Ok(Self { diag, sup, sub })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn sup(&self) -> &[T] {
        &self.sup
    }

    pub fn sub(&self) -> &[T] {
        &self.sub
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tridiagonal<U> {
        Tridiagonal {
            diag: self.diag.iter().map(&mut f).collect(),
            sup: self.sup.iter().map(&mut f).collect(),
            sub: self.sub.iter().map(&mut f).collect(),
        }
    }
}

impl<T: Clone + Zero> Tridiagonal<T> {
    pub fn to_dense(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim(), |i, j| {
            if i == j {
                self.diag[i].clone()
            } else if j == i + 1 {
                self.sup[i].clone()
            } else if i == j + 1 {
                self.sub[j].clone()
            } else {
                T::zero()
            }
        })
    }
}

impl Tridiagonal<BigInt> {
    pub fn to_field<F: FieldScalar>(&self) -> Tridiagonal<F> {
        self.map(F::from_big)
    }
}

/// The n×n generating matrix of `kind`: interior bands `2` (diagonal), `k`
/// (super) and `−1` (sub), with a kind-specific first row
///
/// | kind | `a₁`     | `b₁` |
/// |------|----------|------|
/// | P    | 2        | k    |
/// | Q    | 2k + 4   | 2k   |
/// | q    | k + 2    | k    |
/// | G    | ak + 2a  | ak   |
///
/// Its determinant is term `n + 1` of the sequence.
pub fn gen_matrix(kind: SeqKind, params: &SeqParams, n: usize) -> Result<Tridiagonal<BigInt>> {
    if n == 0 {
        return Err(Error::Dimension("generating matrix needs n >= 1".into()));
    }
    let k = BigInt::from(params.k());
    let a = BigInt::from(params.a());
    let (a1, b1) = match kind {
        SeqKind::Pell => (BigInt::from(2), k.clone()),
        SeqKind::PellLucas => (&k * 2 + 4, &k * 2),
        SeqKind::ModifiedPell => (&k + 2, k.clone()),
        SeqKind::GenPell => (&a * &k + &a * 2, &a * &k),
    };
    let mut diag = vec![BigInt::from(2); n];
    diag[0] = a1;
    let mut sup = vec![k; n - 1];
    if let Some(first) = sup.first_mut() {
        *first = b1;
    }
    let sub = vec![BigInt::from(-1); n - 1];
    Tridiagonal::new(diag, sup, sub)
}

/// Forward (`θ₀..θ_n`) and backward (`φ₁..φ_{n+1}`) continuants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPhi<T> {
    theta: Vec<T>,
    phi: Vec<T>,
}

impl<T> ThetaPhi<T> {
    /// `θ_i`, `0 ≤ i ≤ n`.
    pub fn theta(&self, i: usize) -> &T {
        &self.theta[i]
    }

    /// `φ_j`, `1 ≤ j ≤ n + 1`.
    pub fn phi(&self, j: usize) -> &T {
        &self.phi[j - 1]
    }

    pub fn thetas(&self) -> &[T] {
        &self.theta
    }

    pub fn phis(&self) -> &[T] {
        &self.phi
    }

    pub fn dim(&self) -> usize {
        self.theta.len() - 1
    }
}

/// `θ_i = a_i·θ_{i−1} − b_{i−1}c_{i−1}·θ_{i−2}` with `θ₀ = 1, θ₁ = a₁`, and
/// `φ_i = a_i·φ_{i+1} − b_i c_i·φ_{i+2}` with `φ_{n+1} = 1, φ_n = a_n`.
pub fn theta_phi<T: Num + Clone>(t: &Tridiagonal<T>) -> ThetaPhi<T> {
    let n = t.dim();
    let (a, b, c) = (&t.diag, &t.sup, &t.sub);
    let mut theta = Vec::with_capacity(n + 1);
    theta.push(T::one());
    theta.push(a[0].clone());
    for i in 2..=n {
        let next = a[i - 1].clone() * theta[i - 1].clone()
            - b[i - 2].clone() * c[i - 2].clone() * theta[i - 2].clone();
        theta.push(next);
    }
    // phi[j - 1] holds φ_j
    let mut phi = vec![T::zero(); n + 1];
    phi[n] = T::one();
    phi[n - 1] = a[n - 1].clone();
    for i in (1..n).rev() {
        phi[i - 1] = a[i - 1].clone() * phi[i].clone()
            - b[i - 1].clone() * c[i - 1].clone() * phi[i + 1].clone();
    }
    ThetaPhi { theta, phi }
}

/// Determinant `θ_n` by the continuant recurrence.
pub fn det_continuant<T: Num + Clone>(t: &Tridiagonal<T>) -> T {
    let n = t.dim();
    let (mut prev, mut cur) = (T::one(), t.diag[0].clone());
    for i in 1..n {
        let next =
            t.diag[i].clone() * cur.clone() - t.sup[i - 1].clone() * t.sub[i - 1].clone() * prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Inverse by Usmani's formula (1-based indices):
///
/// ```text
/// i < j:  (−1)^{i+j} b_i⋯b_{j−1} θ_{i−1} φ_{j+1} / θ_n
/// i = j:  θ_{i−1} φ_{i+1} / θ_n
/// i > j:  (−1)^{i+j} c_j⋯c_{i−1} θ_{j−1} φ_{i+1} / θ_n
/// ```
pub fn usmani_inverse<F: FieldScalar>(t: &Tridiagonal<F>) -> Result<Matrix<F>> {
    let n = t.dim();
    let tp = theta_phi(t);
    let det = tp.theta(n).clone();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let signed = |v: F, i: usize, j: usize| if (i + j).is_multiple_of(2) { v } else { -v };
    let mut out = vec![vec![F::zero(); n]; n];
    for i in 1..=n {
        out[i - 1][i - 1] = tp.theta(i - 1).clone() * tp.phi(i + 1).clone() / det.clone();
        let mut band = F::one();
        for j in i + 1..=n {
            band = band * t.sup[j - 2].clone();
            let v = band.clone() * tp.theta(i - 1).clone() * tp.phi(j + 1).clone() / det.clone();
            out[i - 1][j - 1] = signed(v, i, j);
        }
        // lower triangle of column i: rows r > i
        let mut band = F::one();
        for r in i + 1..=n {
            band = band * t.sub[r - 2].clone();
            let v = band.clone() * tp.theta(i - 1).clone() * tp.phi(r + 1).clone() / det.clone();
            out[r - 1][i - 1] = signed(v, r, i);
        }
    }
    Matrix::from_rows(out)
}
