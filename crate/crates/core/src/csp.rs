//! Exact cyclic sieving checks.
//!
//! `f(ζ^d) = N` for a primitive `r`-th root of unity `ζ` is decided in the
//! integers: reduce `f(q^d)` modulo `q^r - 1` and test whether `Φ_r` divides
//! the result minus `N`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kostka::{kostka_foulkes, Partition};
use crate::paths::{orbit_structure, WeightSequence};
use crate::poly::IntPolynomial;
use crate::rootsys::Family;

/// The `r`-th cyclotomic polynomial, `(q^r - 1) / Π_{d | r, d < r} Φ_d`.
pub fn cyclotomic(r: usize) -> IntPolynomial {
    assert!(r >= 1, "cyclotomic index must be positive");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(r, &mut memo)
}

fn cyclotomic_memo(r: usize, memo: &mut BTreeMap<usize, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = memo.get(&r) {
        return p.clone();
    }
    let mut acc = &IntPolynomial::monomial(1, r) - &IntPolynomial::one();
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        let phi = cyclotomic_memo(d, memo);
        let (quot, rem) = acc.div_rem_monic(&phi);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    memo.insert(r, acc.clone());
    acc
}

/// Whether `f(ζ^d) = value` for `ζ` a primitive `r`-th root of unity.
pub fn eval_matches(f: &IntPolynomial, r: usize, d: usize, value: i64) -> bool {
    let reduced = f.substitute_power_mod_cyclic(d, r);
    let diff = &reduced - &IntPolynomial::constant(value);
    diff.div_rem_monic(&cyclotomic(r)).1.is_zero()
}

/// Type A data of a sequence of fundamental weights of `SL_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangularData {
    pub n: usize,
    /// Number of columns, `Σ i_j / n`.
    pub b: usize,
    /// `(i_1, …, i_m)`.
    pub content: Vec<u32>,
}

impl RectangularData {
    pub fn new(seq: &WeightSequence<'_>) -> Result<Self> {
        let rs = seq.root_system();
        if rs.family() != Family::A {
            return Err(Error::TypeMismatch);
        }
        let n = rs.rank() + 1;
        let content: Vec<u32> = seq.nodes().iter().map(|&i| i as u32 + 1).collect();
        let total: usize = content.iter().map(|&i| i as usize).sum();
        if !total.is_multiple_of(n) {
            return Err(Error::NotInRootLattice);
        }
        Ok(RectangularData { n, b: total / n, content })
    }

    /// The rectangle `(n, …, n)` with `b` parts.
    pub fn shape(&self) -> Partition {
        Partition::new(alloc::vec![self.n as u32; self.b]).expect("constant parts")
    }

    /// `(n²b - Σ i_j²) / 2`, or `None` if it is not a non-negative integer.
    pub fn q_exponent(&self) -> Option<usize> {
        let n = self.n as i64;
        let twice = n * n * self.b as i64 - self.content.iter().map(|&i| (i * i) as i64).sum::<i64>();
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
    }
}

/// `q^{(n²b - Σ i_j²)/2} K_{(n^b), γ}(q)`. The exponent is checked against
/// `⟨|λ|, ρ∨⟩`.
pub fn type_a_csp_polynomial(seq: &WeightSequence<'_>) -> Result<IntPolynomial> {
    let data = RectangularData::new(seq)?;
    let exponent = data
        .q_exponent()
        .ok_or(Error::AlgorithmInvariantViolated("q exponent is not a non-negative integer"))?;
    let two_rho = seq.root_system().two_rho_pairing(&seq.total());
    if two_rho != 2 * exponent as i64 {
        return Err(Error::AlgorithmInvariantViolated("q exponent differs from ⟨|λ|, ρ∨⟩"));
    }
    Ok(kostka_foulkes(&data.shape(), &data.content)?.shift(exponent))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspReport {
    pub r: usize,
    pub ell: usize,
    pub fixed_counts: Vec<usize>,
    pub polynomial: IntPolynomial,
    pub evaluations_ok: Vec<bool>,
    /// `(-1)^{⟨λ_1 + ⋯ + λ_ℓ, 2ρ∨⟩}`; informational only.
    pub sign_diagnostic: i64,
    pub verdict: Verdict,
}

/// Checks `(P(λ), R^ℓ, poly)` for cyclic sieving. With `poly = None` the type
/// A polynomial is used.
pub fn csp_check(
    seq: &WeightSequence<'_>,
    ell: usize,
    poly: Option<IntPolynomial>,
) -> Result<CspReport> {
    if !seq.is_periodic(ell) {
        return Err(Error::SequenceNotPeriodic { ell, len: seq.len() });
    }
    let rs = seq.root_system();
    if !rs.in_root_lattice(&seq.total()) {
        return Err(Error::NotInRootLattice);
    }
    let polynomial = match poly {
        Some(p) => p,
        None if rs.family() == Family::A => type_a_csp_polynomial(seq)?,
        None => return Err(Error::PolynomialUnavailable),
    };
    let orbits = orbit_structure(seq, ell)?;
    let evaluations_ok: Vec<bool> = orbits
        .fixed_counts
        .iter()
        .enumerate()
        .map(|(d, &n)| eval_matches(&polynomial, orbits.r, d, n as i64))
        .collect();
    let mut first = rs.zero();
    for w in &seq.weights()[..ell] {
        first += w;
    }
    let sign_diagnostic = if rs.two_rho_pairing(&first) % 2 == 0 { 1 } else { -1 };
    let verdict = if evaluations_ok.iter().all(|&ok| ok) { Verdict::Pass } else { Verdict::Fail };
    Ok(CspReport {
        r: orbits.r,
        ell,
        fixed_counts: orbits.fixed_counts,
        polynomial,
        evaluations_ok,
        sign_diagnostic,
        verdict,
    })
}
