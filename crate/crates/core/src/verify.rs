//! Executable identity suite.
//!
//! Each `check_*` evaluates both sides of one identity at concrete
//! parameters and returns them together with an exact-equality verdict;
//! nothing here asserts. [`run_suite`] sweeps a parameter grid and collects
//! the results in deterministic grid order.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::pow;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::closed_forms::eigen_product;
use crate::error::{Error, Result};
use crate::exact_arith::quad_roots;
use crate::sequences::{
    gen_binet, gen_from_lucas, gen_from_pell, pell_addition, pell_binet, term, terms_upto, SeqKind,
    SeqParams,
};
use crate::tridiagonal::{bareiss_det, cofactor_g, cofactor_p, det_continuant, gen_matrix};
use crate::{ComplexF, QuadNum};

/// Largest dimension for which cofactor determinants are swept.
pub const COFACTOR_N_MAX: u64 = 8;

/// Largest dimension for which the floating-point eigenvalue product is
/// swept; beyond it `P_{k,n+1}` outgrows the 53-bit mantissa for k = 5.
pub const EIGEN_N_MAX: u64 = 20;

/// Relative tolerance of the eigenvalue-product check.
pub const EIGEN_REL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// Both Binet formulas against the recurrence.
    Binet,
    /// `G = aQ/2` and `G = aP_n + akP_{n−1}`.
    Lemmas,
    Catalan,
    Cassini,
    Docagne,
    /// Both parts of the k-Pell addition lemma.
    Convolution,
    /// Both parts of the squares theorem.
    Squares,
    Partition,
    /// Continuant determinant of each generating matrix.
    Determinant,
    /// `|C_n| = P_{k,n+1}^{n−1}` and `|D_n| = G_{k,n+1}^{n−1}`.
    CofactorDets,
    /// Eigenvalue product with the `2i√k` factor.
    Eigen,
    /// Eigenvalue product with the factor `i√k` in place of `2i√k`; fails
    /// for every `n ≥ 2`.
    EigenVerbatim,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Binet,
        Identity::Lemmas,
        Identity::Catalan,
        Identity::Cassini,
        Identity::Docagne,
        Identity::Convolution,
        Identity::Squares,
        Identity::Partition,
        Identity::Determinant,
        Identity::CofactorDets,
        Identity::Eigen,
        Identity::EigenVerbatim,
    ];

    /// What `all` selects: everything that is expected to hold.
    pub fn default_selection() -> Vec<Identity> {
        Self::ALL
            .into_iter()
            .filter(|&id| id != Identity::EigenVerbatim)
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::Binet => "binet",
            Identity::Lemmas => "lemmas",
            Identity::Catalan => "catalan",
            Identity::Cassini => "cassini",
            Identity::Docagne => "docagne",
            Identity::Convolution => "convolution",
            Identity::Squares => "squares",
            Identity::Partition => "partition",
            Identity::Determinant => "determinant",
            Identity::CofactorDets => "cofactor-dets",
            Identity::Eigen => "eigen",
            Identity::EigenVerbatim => "eigen-verbatim",
        }
    }

    /// Whether results vary with the generalized initial value `a`.
    fn uses_a(self) -> bool {
        matches!(
            self,
            Identity::Binet
                | Identity::Lemmas
                | Identity::Catalan
                | Identity::Cassini
                | Identity::Docagne
                | Identity::Partition
                | Identity::Determinant
                | Identity::CofactorDets
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownIdentity(pub String);

impl fmt::Display for UnknownIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
        write!(
            f,
            "unknown identity `{}` (expected all or one of: {})",
            self.0,
            names.join(", ")
        )
    }
}

impl std::error::Error for UnknownIdentity {}

impl FromStr for Identity {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_owned()))
    }
}

/// Parses `all` or a comma-separated list of identity names. Duplicates are
/// dropped; order is preserved.
pub fn parse_selection(s: &str) -> std::result::Result<Vec<Identity>, UnknownIdentity> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let ids = if part == "all" {
            Identity::default_selection()
        } else {
            vec![part.parse()?]
        };
        for id in ids {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(out)
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(BigInt),
    Quad(QuadNum),
    Complex(ComplexF),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Quad(v) => write!(f, "{v}"),
            Value::Complex(c) if c.im.is_sign_negative() => write!(f, "{} - {}i", c.re, -c.im),
            Value::Complex(c) => write!(f, "{} + {}i", c.re, c.im),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters a check was evaluated at. Absent indices are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u64>,
}

impl Inputs {
    fn new(a: Option<u64>, k: u64) -> Self {
        Self {
            a,
            k,
            ..Self::default()
        }
    }

    fn n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    fn m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    fn r(mut self, r: u64) -> Self {
        self.r = Some(r);
        self
    }

    fn i(mut self, i: u64) -> Self {
        self.i = Some(i);
        self
    }
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(a) = self.a {
            write!(f, "a={a} ")?;
        }
        write!(f, "k={}", self.k)?;
        for (name, v) in [("n", self.n), ("m", self.m), ("r", self.r), ("i", self.i)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub identity_name: String,
    pub inputs: Inputs,
    pub lhs: Value,
    pub rhs: Value,
    pub residual_is_zero: bool,
    /// Only for floating-point checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_residual: Option<f64>,
}

impl CheckResult {
    fn exact(name: impl Into<String>, inputs: Inputs, lhs: Value, rhs: Value) -> Self {
        Self {
            identity_name: name.into(),
            inputs,
            residual_is_zero: lhs == rhs,
            lhs,
            rhs,
            abs_residual: None,
        }
    }

    fn ints(name: impl Into<String>, inputs: Inputs, lhs: BigInt, rhs: BigInt) -> Self {
        Self::exact(name, inputs, Value::Int(lhs), Value::Int(rhs))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: lhs = {}, rhs = {}",
            self.identity_name, self.inputs, self.lhs, self.rhs
        )?;
        if let Some(res) = self.abs_residual {
            write!(f, ", residual = {res}")?;
        }
        f.write_str(if self.residual_is_zero {
            " ok"
        } else {
            " FAIL"
        })
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn neg_k_pow(k: u64, e: u64) -> BigInt {
    pow(-big(k), e as usize)
}

fn domain(op: &'static str, index: u64, reason: &'static str) -> Error {
    Error::IndexOutOfDomain { op, index, reason }
}

fn gen_terms(params: &SeqParams, n_max: u64) -> Vec<BigInt> {
    terms_upto(SeqKind::GenPell, params, n_max)
}

fn pell_terms(k: u64, n_max: u64) -> Result<Vec<BigInt>> {
    Ok(terms_upto(SeqKind::Pell, &SeqParams::with_k(k)?, n_max))
}

/// `G_{n−r}G_{n+r} − G_n² = (−k)^{n−r}(G_r² − a²(−k)^r)`, `n ≥ r ≥ 1`.
pub fn check_catalan(params: &SeqParams, n: u64, r: u64) -> Result<CheckResult> {
    if r == 0 {
        return Err(domain("check_catalan", r, "r must be >= 1"));
    }
    if n < r {
        return Err(domain("check_catalan", n, "n must be >= r"));
    }
    let (a, k) = (big(params.a()), params.k());
    let g = gen_terms(params, n + r);
    let at = |i: u64| &g[i as usize];
    let lhs = at(n - r) * at(n + r) - at(n) * at(n);
    let rhs = neg_k_pow(k, n - r) * (at(r) * at(r) - &a * &a * neg_k_pow(k, r));
    let inputs = Inputs::new(Some(params.a()), k).n(n).r(r);
    Ok(CheckResult::ints("catalan", inputs, lhs, rhs))
}

/// `G_{n−1}G_{n+1} − G_n² = a²(−k)^{n−1}(1+k)`, `n ≥ 1`.
pub fn check_cassini(params: &SeqParams, n: u64) -> Result<CheckResult> {
    if n == 0 {
        return Err(domain("check_cassini", n, "n must be >= 1"));
    }
    let (a, k) = (big(params.a()), params.k());
    let g = gen_terms(params, n + 1);
    let at = |i: u64| &g[i as usize];
    let lhs = at(n - 1) * at(n + 1) - at(n) * at(n);
    let rhs = &a * &a * neg_k_pow(k, n - 1) * (big(k) + 1);
    let inputs = Inputs::new(Some(params.a()), k).n(n);
    Ok(CheckResult::ints("cassini", inputs, lhs, rhs))
}

/// `G_m G_{n+1} − G_{m+1} G_n = a(−1)ⁿkⁿ√(1+k)(G_{m−n} − a·r₁^{m−n})`,
/// `m > n ≥ 0`, compared exactly in ℚ(√(1+k)).
pub fn check_docagne(params: &SeqParams, m: u64, n: u64) -> Result<CheckResult> {
    if m <= n {
        return Err(domain("check_docagne", m, "m must exceed n"));
    }
    let (a, k) = (big(params.a()), params.k());
    let d: BigInt = big(k) + 1;
    let g = gen_terms(params, m + 1);
    let at = |i: u64| &g[i as usize];
    let lhs = at(m) * at(n + 1) - at(m + 1) * at(n);

    let (r1, _) = quad_roots::<BigInt>(k)?;
    let a_ratio = Ratio::from_integer(a.clone());
    let gap = QuadNum::from_integer(at(m - n).clone(), d.clone())?
        .try_sub(&r1.pow(m - n).scale(&a_ratio))?;
    let factor = QuadNum::sqrt_d(d.clone())?.scale(&Ratio::from_integer(&a * neg_k_pow(k, n)));
    let rhs = factor.try_mul(&gap)?;

    let inputs = Inputs::new(Some(params.a()), k).n(n).m(m);
    Ok(CheckResult::exact(
        "docagne",
        inputs,
        Value::Quad(QuadNum::from_integer(lhs, d)?),
        Value::Quad(rhs),
    ))
}

/// `P_{n+m} = kP_{n−1}P_m + P_nP_{m+1}`, `n, m ≥ 1`.
pub fn check_convolution1(k: u64, n: u64, m: u64) -> Result<CheckResult> {
    let rhs = pell_addition::<BigInt>(k, n, m)?;
    let lhs: BigInt = term(SeqKind::Pell, &SeqParams::with_k(k)?, n + m)?;
    Ok(CheckResult::ints(
        "convolution.1",
        Inputs::new(None, k).n(n).m(m),
        lhs,
        rhs,
    ))
}

/// `2P_{n+m} = P_{n+1}P_{m+1} − k²P_{m−1}P_{n−1}`, `n, m ≥ 1`.
pub fn check_convolution2(k: u64, n: u64, m: u64) -> Result<CheckResult> {
    if n == 0 || m == 0 {
        return Err(domain(
            "check_convolution2",
            n.min(m),
            "n and m must be >= 1",
        ));
    }
    let p = pell_terms(k, n + m + 1)?;
    let at = |i: u64| &p[i as usize];
    let lhs = at(n + m) * 2;
    let rhs = at(n + 1) * at(m + 1) - big(k) * big(k) * at(m - 1) * at(n - 1);
    Ok(CheckResult::ints(
        "convolution.2",
        Inputs::new(None, k).n(n).m(m),
        lhs,
        rhs,
    ))
}

/// `P_{n+1}² + kP_n² = P_{2n+1}` and `P_{n+1}² − k²P_{n−1}² = 2P_{2n}`, `n ≥ 1`.
pub fn check_squares(k: u64, n: u64) -> Result<[CheckResult; 2]> {
    if n == 0 {
        return Err(domain("check_squares", n, "n must be >= 1"));
    }
    let p = pell_terms(k, 2 * n + 1)?;
    let at = |i: u64| &p[i as usize];
    let kb = big(k);
    let part1 = CheckResult::ints(
        "squares.1",
        Inputs::new(None, k).n(n),
        at(n + 1) * at(n + 1) + &kb * at(n) * at(n),
        at(2 * n + 1).clone(),
    );
    let part2 = CheckResult::ints(
        "squares.2",
        Inputs::new(None, k).n(n),
        at(n + 1) * at(n + 1) - &kb * &kb * at(n - 1) * at(n - 1),
        at(2 * n) * 2,
    );
    Ok([part1, part2])
}

/// `G_{n+1} = kG_iP_{n−i} + G_{i+1}P_{n+1−i}`, `1 ≤ i ≤ n`.
pub fn check_partition(params: &SeqParams, n: u64, i: u64) -> Result<CheckResult> {
    if i == 0 || i > n {
        return Err(domain("check_partition", i, "i must satisfy 1 <= i <= n"));
    }
    let k = params.k();
    let g = gen_terms(params, n + 1);
    let p = pell_terms(k, n + 1)?;
    let (gi, pi) = (|j: u64| &g[j as usize], |j: u64| &p[j as usize]);
    let lhs = gi(n + 1).clone();
    let rhs = big(k) * gi(i) * pi(n - i) + gi(i + 1) * pi(n + 1 - i);
    let inputs = Inputs::new(Some(params.a()), k).n(n).i(i);
    Ok(CheckResult::ints("partition", inputs, lhs, rhs))
}

/// Bareiss determinants of `C_n(k)` and `D_n(k)` against
/// `P_{k,n+1}^{n−1}` and `G_{k,n+1}^{n−1}`, `2 ≤ n ≤ 8`.
pub fn check_cofactor_dets(params: &SeqParams, n: u64) -> Result<[CheckResult; 2]> {
    if !(2..=COFACTOR_N_MAX).contains(&n) {
        return Err(domain(
            "check_cofactor_dets",
            n,
            "n must satisfy 2 <= n <= 8",
        ));
    }
    let k = params.k();
    let dim = n as usize;
    let p_next: BigInt = term(SeqKind::Pell, params, n + 1)?;
    let g_next: BigInt = term(SeqKind::GenPell, params, n + 1)?;
    let c = CheckResult::ints(
        "cofactor-dets.C",
        Inputs::new(None, k).n(n),
        bareiss_det(&cofactor_p::<BigInt>(k, dim)?),
        pow(p_next, dim - 1),
    );
    let d = CheckResult::ints(
        "cofactor-dets.D",
        Inputs::new(Some(params.a()), k).n(n),
        bareiss_det(&cofactor_g::<BigInt>(params, dim)?),
        pow(g_next, dim - 1),
    );
    Ok([c, d])
}

/// Binet formulas for `G` and `P` against the recurrence.
pub fn check_binet(params: &SeqParams, n: u64) -> Result<[CheckResult; 2]> {
    let k = params.k();
    let g = CheckResult::ints(
        "binet.G",
        Inputs::new(Some(params.a()), k).n(n),
        gen_binet(params, n)?,
        term(SeqKind::GenPell, params, n)?,
    );
    let p = CheckResult::ints(
        "binet.P",
        Inputs::new(None, k).n(n),
        pell_binet(k, n)?,
        term(SeqKind::Pell, params, n)?,
    );
    Ok([g, p])
}

/// `G_n = aQ_n/2` and, for `n ≥ 1`, `G_n = aP_n + akP_{n−1}`.
pub fn check_lemmas(params: &SeqParams, n: u64) -> Result<Vec<CheckResult>> {
    let inputs = Inputs::new(Some(params.a()), params.k()).n(n);
    let expect: BigInt = term(SeqKind::GenPell, params, n)?;
    let mut out = vec![CheckResult::ints(
        "lemmas.lucas",
        inputs.clone(),
        expect.clone(),
        gen_from_lucas(params, n)?,
    )];
    if n >= 1 {
        out.push(CheckResult::ints(
            "lemmas.pell",
            inputs,
            expect,
            gen_from_pell(params, n)?,
        ));
    }
    Ok(out)
}

/// Continuant determinant of the n×n generating matrix against term `n+1`.
pub fn check_determinant(kind: SeqKind, params: &SeqParams, n: u64) -> Result<CheckResult> {
    if n == 0 {
        return Err(domain("check_determinant", n, "n must be >= 1"));
    }
    let a = (kind == SeqKind::GenPell).then_some(params.a());
    Ok(CheckResult::ints(
        format!("determinant.{kind}"),
        Inputs::new(a, params.k()).n(n),
        det_continuant(&gen_matrix(kind, params, n as usize)?),
        term(kind, params, n + 1)?,
    ))
}

/// Eigenvalue product of `P_n(k)` against `P_{k,n+1}`: passes when the
/// rounded real part equals the exact value and the relative residual is
/// below [`EIGEN_REL_TOL`].
pub fn check_eigen(k: u64, n: u64, verbatim: bool) -> Result<CheckResult> {
    let rep = eigen_product::<f64>(k, n, verbatim)?;
    let ok = rep.rounding_matches() && rep.relative_residual() < EIGEN_REL_TOL;
    Ok(CheckResult {
        identity_name: if verbatim { "eigen-verbatim" } else { "eigen" }.to_owned(),
        inputs: Inputs::new(None, k).n(n),
        lhs: Value::Complex(rep.product),
        rhs: Value::Int(rep.exact),
        residual_is_zero: ok,
        abs_residual: Some(rep.abs_residual),
    })
}

/// Sweep definition. For every selected identity and every `(a, k)` in the
/// grid, indices run up to `n`'s upper bound within that identity's domain:
///
/// | identity | indices |
/// |----------|---------|
/// | binet, lemmas | `n` |
/// | catalan | `n ≥ 1`, `1 ≤ r ≤ n` |
/// | cassini, squares | `n ≥ 1` |
/// | docagne | `m ≥ 1` in the range, `0 ≤ n < m` |
/// | convolution | `n ≥ 1` in the range, `1 ≤ m ≤ n_max` |
/// | partition | `n ≥ 1`, `1 ≤ i ≤ n` |
/// | determinant | `n ≥ 1`, all four kinds |
/// | cofactor-dets | `2 ≤ n ≤ 8` |
/// | eigen, eigen-verbatim | `1 ≤ n ≤ 20` |
///
/// Identities that do not involve `a` run once per `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    a: RangeInclusive<u64>,
    k: RangeInclusive<u64>,
    n: RangeInclusive<u64>,
    identities: Vec<Identity>,
}

impl Grid {
    pub fn new(
        a: RangeInclusive<u64>,
        k: RangeInclusive<u64>,
        n: RangeInclusive<u64>,
        identities: Vec<Identity>,
    ) -> Result<Self> {
        for (name, range) in [("a", &a), ("k", &k)] {
            if range.is_empty() || *range.start() == 0 {
                return Err(Error::InvalidParameter {
                    name,
                    value: *range.start() as i128,
                    reason: "range must be nonempty and start at >= 1",
                });
            }
        }
        if n.is_empty() {
            return Err(Error::InvalidParameter {
                name: "n",
                value: *n.start() as i128,
                reason: "range must be nonempty",
            });
        }
        Ok(Self {
            a,
            k,
            n,
            identities,
        })
    }

    /// `a ∈ 1..=a_max`, `k ∈ 1..=k_max`, `n ∈ 1..=n_max`.
    pub fn upto(a_max: u64, k_max: u64, n_max: u64, identities: Vec<Identity>) -> Result<Self> {
        Self::new(1..=a_max, 1..=k_max, 1..=n_max, identities)
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitySummary {
    pub identity: Identity,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub per_identity: Vec<IdentitySummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.residual_is_zero)
    }

    pub fn summary_table(&self) -> String {
        let mut out = format!("{:<16}{:>10}{:>10}\n", "identity", "pass", "fail");
        for row in &self.summary.per_identity {
            out.push_str(&format!(
                "{:<16}{:>10}{:>10}\n",
                row.identity.name(),
                row.pass,
                row.fail
            ));
        }
        out.push_str(&format!(
            "{:<16}{:>10}{:>10}\n",
            "total", self.summary.pass, self.summary.fail
        ));
        out
    }
}

fn clamp(range: &RangeInclusive<u64>, lo: u64, hi: u64) -> RangeInclusive<u64> {
    (*range.start()).max(lo)..=(*range.end()).min(hi)
}

fn run_cell(
    id: Identity,
    (a, first_a): (u64, bool),
    k: u64,
    n_range: &RangeInclusive<u64>,
) -> Result<Vec<CheckResult>> {
    let params = SeqParams::new(k, a)?;
    let n_max = *n_range.end();
    let positive = clamp(n_range, 1, u64::MAX);
    let mut out = Vec::new();
    match id {
        Identity::Binet => {
            for n in n_range.clone() {
                out.extend(check_binet(&params, n)?);
            }
        }
        Identity::Lemmas => {
            for n in n_range.clone() {
                out.extend(check_lemmas(&params, n)?);
            }
        }
        Identity::Catalan => {
            for n in positive {
                for r in 1..=n {
                    out.push(check_catalan(&params, n, r)?);
                }
            }
        }
        Identity::Cassini => {
            for n in positive {
                out.push(check_cassini(&params, n)?);
            }
        }
        Identity::Docagne => {
            for m in positive {
                for n in 0..m {
                    out.push(check_docagne(&params, m, n)?);
                }
            }
        }
        Identity::Convolution => {
            for n in positive {
                for m in 1..=n_max {
                    out.push(check_convolution1(k, n, m)?);
                    out.push(check_convolution2(k, n, m)?);
                }
            }
        }
        Identity::Squares => {
            for n in positive {
                out.extend(check_squares(k, n)?);
            }
        }
        Identity::Partition => {
            for n in positive {
                for i in 1..=n {
                    out.push(check_partition(&params, n, i)?);
                }
            }
        }
        Identity::Determinant => {
            for kind in SeqKind::ALL {
                if kind != SeqKind::GenPell && !first_a {
                    continue;
                }
                for n in positive.clone() {
                    out.push(check_determinant(kind, &params, n)?);
                }
            }
        }
        Identity::CofactorDets => {
            for n in clamp(n_range, 2, COFACTOR_N_MAX) {
                let [c, d] = check_cofactor_dets(&params, n)?;
                if first_a {
                    out.push(c);
                }
                out.push(d);
            }
        }
        Identity::Eigen | Identity::EigenVerbatim => {
            for n in clamp(n_range, 1, EIGEN_N_MAX) {
                out.push(check_eigen(k, n, id == Identity::EigenVerbatim)?);
            }
        }
    }
    Ok(out)
}

/// Runs every selected identity over the grid. Cells are evaluated in
/// parallel; results keep grid order (identity, then `a`, then `k`, then
/// indices).
pub fn run_suite(grid: &Grid) -> Result<Report> {
    let a_first = *grid.a.start();
    let mut cells = Vec::new();
    for &id in &grid.identities {
        for a in grid.a.clone() {
            // a-independent identities run once, tagged with the first a
            if !id.uses_a() && a != a_first {
                continue;
            }
            for k in grid.k.clone() {
                cells.push((id, a, k));
            }
        }
    }
    let results: Vec<Vec<CheckResult>> = cells
        .par_iter()
        .map(|&(id, a, k)| run_cell(id, (a, a == a_first), k, &grid.n))
        .collect::<Result<_>>()?;

    let mut per_identity: Vec<IdentitySummary> = grid
        .identities
        .iter()
        .map(|&identity| IdentitySummary {
            identity,
            pass: 0,
            fail: 0,
        })
        .collect();
    for ((id, _, _), cell) in cells.iter().zip(&results) {
        let row = per_identity
            .iter_mut()
            .find(|r| r.identity == *id)
            .expect("identity is part of the selection");
        for r in cell {
            if r.residual_is_zero {
                row.pass += 1;
            } else {
                row.fail += 1;
            }
        }
    }
    let pass = per_identity.iter().map(|r| r.pass).sum();
    let fail = per_identity.iter().map(|r| r.fail).sum();
    Ok(Report {
        summary: Summary {
            pass,
            fail,
            per_identity,
        },
        results: results.into_iter().flatten().collect(),
    })
}
