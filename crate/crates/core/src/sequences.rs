//! The four sequences sharing the recurrence `x_n = 2x_{n−1} + k·x_{n−2}`.
//!
//! | kind | initial pair |
//! |------|--------------|
//! | k-Pell `P`            | 0, 1 |
//! | k-Pell-Lucas `Q`      | 2, 2 |
//! | Modified k-Pell `q`   | 1, 1 |
//! | Generalized k-Pell `G`| a, a |
//!
//! Every term can be evaluated several independent ways: the two-term
//! recurrence, exact Binet formulas in ℚ(√(1+k)), the relations to `Q` and
//! `P`, and `O(log n)` fast doubling for `P`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{quad_roots, QuadSurd};
use crate::scalar::IntScalar;

/// Largest index accepted by the `O(n)` recurrence unless a caller raises it.
pub const DEFAULT_GUARD_N: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeqKind {
    #[serde(rename = "P")]
    Pell,
    #[serde(rename = "Q")]
    PellLucas,
    #[serde(rename = "q")]
    ModifiedPell,
    #[serde(rename = "G")]
    GenPell,
}

impl SeqKind {
    pub const ALL: [SeqKind; 4] = [
        SeqKind::Pell,
        SeqKind::PellLucas,
        SeqKind::ModifiedPell,
        SeqKind::GenPell,
    ];

    pub fn symbol(self) -> char {
        match self {
            SeqKind::Pell => 'P',
            SeqKind::PellLucas => 'Q',
            SeqKind::ModifiedPell => 'q',
            SeqKind::GenPell => 'G',
        }
    }

    /// Terms 0 and 1. Only `GenPell` depends on `a`.
    pub fn initial<T: IntScalar>(self, a: u64) -> (T, T) {
        let (x0, x1) = match self {
            SeqKind::Pell => (0, 1),
            SeqKind::PellLucas => (2, 2),
            SeqKind::ModifiedPell => (1, 1),
            SeqKind::GenPell => (a, a),
        };
        (T::from_u64(x0), T::from_u64(x1))
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Recurrence parameter `k ≥ 1` and generalized initial value `a ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeqParams {
    k: u64,
    a: u64,
}

impl SeqParams {
    pub fn new(k: u64, a: u64) -> Result<Self> {
        check_k(k)?;
        if a == 0 {
            return Err(Error::InvalidParameter {
                name: "a",
                value: 0,
                reason: "a must be a positive integer",
            });
        }
        Ok(Self { k, a })
    }

    /// Parameters for the kinds that do not use `a`.
    pub fn with_k(k: u64) -> Result<Self> {
        Self::new(k, 1)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

pub(crate) fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter {
            name: "k",
            value: 0,
            reason: "k must be a positive integer",
        })
    } else {
        Ok(())
    }
}

/// Lazy iterator over terms `n = 0, 1, 2, …`.
#[derive(Clone, Debug)]
pub struct TermStream<T> {
    cur: T,
    next: T,
    k: T,
}

impl<T: IntScalar> Iterator for TermStream<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let after = self.next.clone() + self.next.clone() + self.k.clone() * self.cur.clone();
        let out = std::mem::replace(&mut self.cur, std::mem::replace(&mut self.next, after));
        Some(out)
    }
}

pub fn term_stream<T: IntScalar>(kind: SeqKind, params: &SeqParams) -> TermStream<T> {
    let (cur, next) = kind.initial(params.a);
    TermStream {
        cur,
        next,
        k: T::from_u64(params.k),
    }
}

/// The n-th term by the recurrence, capped at [`DEFAULT_GUARD_N`].
pub fn term<T: IntScalar>(kind: SeqKind, params: &SeqParams, n: u64) -> Result<T> {
    term_with_guard(kind, params, n, DEFAULT_GUARD_N)
}

pub fn term_with_guard<T: IntScalar>(
    kind: SeqKind,
    params: &SeqParams,
    n: u64,
    guard: u64,
) -> Result<T> {
    if n > guard {
        return Err(Error::GuardExceeded { n, guard });
    }
    let k = T::from_u64(params.k);
    let (mut prev, mut cur) = kind.initial::<T>(params.a);
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = cur.clone() + cur.clone() + k.clone() * prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Terms `0..=n_max` in one pass.
pub fn terms_upto<T: IntScalar>(kind: SeqKind, params: &SeqParams, n_max: u64) -> Vec<T> {
    term_stream(kind, params).take(n_max as usize + 1).collect()
}

/// `G_{k,n} = (a·r₁ⁿ + a·r₂ⁿ)/2` evaluated exactly in ℚ(√(1+k)).
pub fn gen_binet<T: IntScalar>(params: &SeqParams, n: u64) -> Result<T> {
    let (r1, r2) = quad_roots::<T>(params.k)?;
    let half_a = Ratio::new(T::from_u64(params.a), T::from_u64(2));
    let value = (r1.pow(n) + r2.pow(n)).scale(&half_a);
    integral("gen_binet", &value)
}

/// `P_{k,n} = (r₁ⁿ − r₂ⁿ)/(2√(1+k))` evaluated exactly. For a perfect-square
/// `1+k = s²` the denominator is the rational `2s`.
pub fn pell_binet<T: IntScalar>(k: u64, n: u64) -> Result<T> {
    let (r1, r2) = quad_roots::<T>(k)?;
    let gap = &r1 - &r2;
    let value = (r1.pow(n) - r2.pow(n)).try_div(&gap)?;
    integral("pell_binet", &value)
}

fn integral<T: IntScalar>(op: &str, value: &QuadSurd<T>) -> Result<T> {
    value
        .to_integer()
        .ok_or_else(|| Error::Invariant(format!("{op} produced non-integral value {value}")))
}

/// `G_{k,n} = a·Q_{k,n}/2`.
pub fn gen_from_lucas<T: IntScalar>(params: &SeqParams, n: u64) -> Result<T> {
    let lucas: T = term(SeqKind::PellLucas, params, n)?;
    let scaled = lucas * T::from_u64(params.a);
    let two = T::from_u64(2);
    if !scaled.is_multiple_of(&two) {
        return Err(Error::Invariant(format!("a·Q_(k,{n}) = {scaled} is odd")));
    }
    Ok(scaled / two)
}

/// `G_{k,n} = a·P_{k,n} + a·k·P_{k,n−1}` for `n ≥ 1`.
pub fn gen_from_pell<T: IntScalar>(params: &SeqParams, n: u64) -> Result<T> {
    if n == 0 {
        return Err(Error::IndexOutOfDomain {
            op: "gen_from_pell",
            index: 0,
            reason: "needs P_(k,n-1), so n >= 1",
        });
    }
    let (a, k) = (T::from_u64(params.a), T::from_u64(params.k));
    let p_n: T = term(SeqKind::Pell, params, n)?;
    let p_prev: T = term(SeqKind::Pell, params, n - 1)?;
    Ok(a.clone() * p_n + a * k * p_prev)
}

/// Right-hand side of `P_{k,n+m} = k·P_{k,n−1}·P_{k,m} + P_{k,n}·P_{k,m+1}`.
pub fn pell_addition<T: IntScalar>(k: u64, n: u64, m: u64) -> Result<T> {
    if n == 0 || m == 0 {
        return Err(Error::IndexOutOfDomain {
            op: "pell_addition",
            index: n.min(m),
            reason: "n and m must be >= 1",
        });
    }
    let params = SeqParams::with_k(k)?;
    let p = terms_upto::<T>(SeqKind::Pell, &params, n.max(m) + 1);
    let at = |i: u64| p[i as usize].clone();
    Ok(T::from_u64(k) * at(n - 1) * at(m) + at(n) * at(m + 1))
}

/// `(P_{k,n}, P_{k,n+1})` by fast doubling:
///
/// ```text
/// P_{2j}   = 2·P_j·(P_{j+1} − P_j)
/// P_{2j+1} = P_{j+1}² + k·P_j²
/// ```
///
/// `O(log n)` big-integer multiplications.
pub fn pell_fast<T: IntScalar>(k: u64, n: u64) -> Result<(T, T)> {
    check_k(k)?;
    let k = T::from_u64(k);
    let mut lo = T::zero();
    let mut hi = T::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let even = (lo.clone() + lo.clone()) * (hi.clone() - lo.clone());
        let odd = hi.clone() * hi + k.clone() * lo.clone() * lo;
        if (n >> bit) & 1 == 1 {
            let after = odd.clone() + odd.clone() + k.clone() * even;
            lo = odd;
            hi = after;
        } else {
            lo = even;
            hi = odd;
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn params(k: u64, a: u64) -> SeqParams {
        SeqParams::new(k, a).unwrap()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(SeqParams::new(0, 1).is_err());
        assert!(SeqParams::new(1, 0).is_err());
        assert!(pell_fast::<BigInt>(0, 4).is_err());
        assert!(pell_binet::<BigInt>(0, 4).is_err());
    }

    #[test]
    fn tabulated_values() {
        for k in 1..=6 {
            assert_eq!(
                term::<BigInt>(SeqKind::Pell, &params(k, 1), 0).unwrap(),
                b(0)
            );
        }
        assert_eq!(
            term::<BigInt>(SeqKind::Pell, &params(1, 1), 5).unwrap(),
            b(29)
        );
        assert_eq!(
            term::<BigInt>(SeqKind::GenPell, &params(1, 1), 4).unwrap(),
            b(17)
        );
    }

    #[test]
    fn streams() {
        let g: Vec<BigInt> = term_stream(SeqKind::GenPell, &params(2, 1))
            .take(4)
            .collect();
        assert_eq!(g, [1, 1, 4, 10].map(b));
        let q: Vec<BigInt> = term_stream(SeqKind::PellLucas, &params(1, 1))
            .take(3)
            .collect();
        assert_eq!(q, [2, 2, 6].map(b));
        for kind in SeqKind::ALL {
            let first: Vec<BigInt> = term_stream(kind, &params(3, 4)).take(2).collect();
            let (x0, x1) = kind.initial::<BigInt>(4);
            assert_eq!(first, vec![x0, x1]);
        }
    }

    #[test]
    fn guard() {
        assert_eq!(
            term_with_guard::<BigInt>(SeqKind::Pell, &params(1, 1), 11, 10),
            Err(Error::GuardExceeded { n: 11, guard: 10 })
        );
        assert!(term::<BigInt>(SeqKind::Pell, &params(1, 1), DEFAULT_GUARD_N + 1).is_err());
    }

    #[test]
    fn binet_generalized() {
        for a in 1..=4 {
            assert_eq!(gen_binet::<BigInt>(&params(5, a), 0).unwrap(), b(a as i64));
        }
        assert_eq!(gen_binet::<BigInt>(&params(1, 1), 3).unwrap(), b(7));
        // d = 4 is a perfect square
        assert_eq!(gen_binet::<BigInt>(&params(3, 2), 2).unwrap(), b(10));
    }

    #[test]
    fn binet_pell() {
        for k in 1..=10 {
            assert_eq!(pell_binet::<BigInt>(k, 1).unwrap(), b(1));
        }
        assert_eq!(pell_binet::<BigInt>(1, 4).unwrap(), b(12));
        assert_eq!(pell_binet::<BigInt>(3, 3).unwrap(), b(7));
        assert_eq!(pell_binet::<BigInt>(8, 0).unwrap(), b(0));
    }

    #[test]
    fn lucas_relation() {
        assert_eq!(gen_from_lucas::<BigInt>(&params(1, 1), 0).unwrap(), b(1));
        assert_eq!(gen_from_lucas::<BigInt>(&params(2, 3), 2).unwrap(), b(12));
        assert_eq!(gen_from_lucas::<BigInt>(&params(1, 1), 5).unwrap(), b(41));
    }

    #[test]
    fn pell_relation() {
        for (k, a) in [(1, 1), (4, 3), (7, 2)] {
            assert_eq!(
                gen_from_pell::<BigInt>(&params(k, a), 1).unwrap(),
                b(a as i64)
            );
        }
        assert_eq!(gen_from_pell::<BigInt>(&params(1, 1), 3).unwrap(), b(7));
        assert_eq!(gen_from_pell::<BigInt>(&params(3, 2), 4).unwrap(), b(82));
        assert!(gen_from_pell::<BigInt>(&params(1, 1), 0).is_err());
    }

    #[test]
    fn addition_lemma() {
        assert_eq!(pell_addition::<BigInt>(1, 2, 3).unwrap(), b(29));
        assert_eq!(pell_addition::<BigInt>(1, 1, 1).unwrap(), b(2));
        assert_eq!(pell_addition::<BigInt>(2, 2, 2).unwrap(), b(16));
        assert!(pell_addition::<BigInt>(1, 0, 2).is_err());
        assert!(pell_addition::<BigInt>(1, 2, 0).is_err());
    }

    #[test]
    fn fast_doubling() {
        for k in 1..=5 {
            assert_eq!(pell_fast::<BigInt>(k, 0).unwrap(), (b(0), b(1)));
        }
        assert_eq!(pell_fast::<BigInt>(1, 4).unwrap(), (b(12), b(29)));
        // even step from (P₂, P₃) = (2, 5)
        let (p2, p3) = pell_fast::<BigInt>(1, 2).unwrap();
        assert_eq!(b(2) * &p2 * (p3 - &p2), b(12));
    }

    #[test]
    fn machine_integers_agree() {
        let p = params(3, 2);
        for n in 0..30 {
            let big: BigInt = term(SeqKind::GenPell, &p, n).unwrap();
            let small: i128 = term(SeqKind::GenPell, &p, n).unwrap();
            assert_eq!(big, BigInt::from(small));
            let (fast, _) = pell_fast::<i128>(3, n).unwrap();
            assert_eq!(
                BigInt::from(fast),
                term::<BigInt>(SeqKind::Pell, &p, n).unwrap()
            );
        }
    }

    #[test]
    fn strictly_increasing() {
        for kind in SeqKind::ALL {
            let t: Vec<BigInt> = terms_upto(kind, &params(2, 3), 50);
            assert!(t[1..].windows(2).all(|w| w[0] < w[1]), "{kind}");
        }
    }
}
