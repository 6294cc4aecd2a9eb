//! Tensor products of minuscule crystals.
//!
//! For a minuscule `λ` the crystal `B(λ)` is identified with the orbit `Wλ`
//! via the weight map, so an element of `B(λ_1) ⊗ ⋯ ⊗ B(λ_m)` is just a list
//! of weights. Factors are ordered as written, and the tensor rule follows
//! Kashiwara: `f_i` acts on the left factor when `φ_i(b_1) > ε_i(b_2)`, `e_i`
//! when `φ_i(b_1) ≥ ε_i(b_2)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::paths::{LittelmannPath, WeightSequence};
use crate::rootsys::{RootSystem, Weight};

/// Default bound on the number of search nodes visited while enumerating.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Which factor order the tensor rule uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TensorConvention {
    #[default]
    Kashiwara,
    /// The mirror image: the rule is applied to the reversed factor list.
    AntiKashiwara,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorCrystalElement {
    factors: Vec<Weight>,
}

impl TensorCrystalElement {
    /// Checks that factor `k` lies in `W λ_k`.
    pub fn new(seq: &WeightSequence<'_>, factors: Vec<Weight>) -> Result<Self> {
        if factors.len() != seq.len() {
            return Err(Error::InvalidPath("factor count differs from the type"));
        }
        let rs = seq.root_system();
        for (b, lambda) in factors.iter().zip(seq.weights()) {
            rs.check_weight(b)?;
            if !rs.in_orbit_of(b, lambda) {
                return Err(Error::InvalidPath("factor outside the prescribed Weyl orbit"));
            }
        }
        Ok(TensorCrystalElement { factors })
    }

    pub fn factors(&self) -> &[Weight] {
        &self.factors
    }

    pub fn weight(&self) -> Weight {
        let mut it = self.factors.iter();
        let mut total = it.next().cloned().unwrap_or_default();
        for f in it {
            total += f;
        }
        total
    }

    fn from_factors(factors: Vec<Weight>) -> Self {
        TensorCrystalElement { factors }
    }
}

/// Chooses which raising operator to apply next while moving to the highest
/// weight element.
pub trait IndexPolicy {
    /// Returns one element of the non-empty, increasing `candidates`.
    fn choose(&mut self, candidates: &[usize]) -> usize;
}

/// Always raise at the smallest available index.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallestFirst;

impl IndexPolicy for SmallestFirst {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        candidates[0]
    }
}

impl<F: FnMut(&[usize]) -> usize> IndexPolicy for F {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        self(candidates)
    }
}

/// The crystal operators of one root system under a fixed tensor convention.
#[derive(Debug, Clone, Copy)]
pub struct TensorCrystal<'a> {
    rs: &'a RootSystem,
    convention: TensorConvention,
}

impl<'a> TensorCrystal<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Self::with_convention(rs, TensorConvention::Kashiwara)
    }

    pub fn with_convention(rs: &'a RootSystem, convention: TensorConvention) -> Self {
        TensorCrystal { rs, convention }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    // Bracket rule on the string -^ε +^φ of each factor, read in tensor
    // order: f acts on the leftmost unmatched +, e on the rightmost unmatched
    // -. Returns the factor acted on, if any.
    fn acting_factor(&self, dir: Direction, i: usize, factors: &[Weight]) -> Option<usize> {
        let m = factors.len();
        let at = |p: usize| match self.convention {
            TensorConvention::Kashiwara => p,
            TensorConvention::AntiKashiwara => m - 1 - p,
        };
        let mut found = None;
        let mut pending = 0i64;
        match dir {
            Direction::Lower => {
                for p in (0..m).rev() {
                    let k = at(p);
                    let c = factors[k].coords()[i];
                    let (eps, phi) = (0.max(-c), 0.max(c));
                    let matched = phi.min(pending);
                    if phi > matched {
                        found = Some(k);
                    }
                    pending += eps - matched;
                }
            }
            Direction::Raise => {
                for p in 0..m {
                    let k = at(p);
                    let c = factors[k].coords()[i];
                    let (eps, phi) = (0.max(-c), 0.max(c));
                    let matched = eps.min(pending);
                    if eps > matched {
                        found = Some(k);
                    }
                    pending += phi - matched;
                }
            }
        }
        found
    }

    // On a minuscule factor the operator is the simple reflection.
    fn apply_in_place(&self, dir: Direction, i: usize, factors: &mut [Weight]) -> bool {
        match self.acting_factor(dir, i, factors) {
            Some(k) => {
                self.rs.reflect_in_place(i, &mut factors[k]);
                true
            }
            None => false,
        }
    }

    fn apply(&self, dir: Direction, i: usize, b: &TensorCrystalElement) -> Option<TensorCrystalElement> {
        let k = self.acting_factor(dir, i, &b.factors)?;
        let mut factors = b.factors.clone();
        self.rs.reflect_in_place(i, &mut factors[k]);
        Some(TensorCrystalElement::from_factors(factors))
    }

    /// `e_i b` or `f_i b`; `None` is the crystal zero.
    pub fn op(
        &self,
        dir: Direction,
        i: usize,
        b: &TensorCrystalElement,
    ) -> Result<Option<TensorCrystalElement>> {
        if i >= self.rs.rank() {
            return Err(Error::InvalidIndex { index: i, rank: self.rs.rank() });
        }
        Ok(self.apply(dir, i, b))
    }

    pub fn raise(&self, i: usize, b: &TensorCrystalElement) -> Result<Option<TensorCrystalElement>> {
        self.op(Direction::Raise, i, b)
    }

    pub fn lower(&self, i: usize, b: &TensorCrystalElement) -> Result<Option<TensorCrystalElement>> {
        self.op(Direction::Lower, i, b)
    }

    fn first_available(&self, dir: Direction, factors: &[Weight]) -> Option<usize> {
        (0..self.rs.rank()).find(|&i| self.acting_factor(dir, i, factors).is_some())
    }

    pub fn is_highest(&self, b: &TensorCrystalElement) -> bool {
        self.first_available(Direction::Raise, &b.factors).is_none()
    }

    pub fn is_lowest(&self, b: &TensorCrystalElement) -> bool {
        self.first_available(Direction::Lower, &b.factors).is_none()
    }

    /// Highest weight and killed by every `e_i`.
    pub fn is_invariant(&self, b: &TensorCrystalElement) -> bool {
        b.weight().is_zero() && self.is_highest(b)
    }

    /// Raises `b` to the highest element of its component. Returns that
    /// element and the indices used, in application order.
    pub fn to_highest(
        &self,
        b: &TensorCrystalElement,
        policy: &mut dyn IndexPolicy,
    ) -> (TensorCrystalElement, Vec<usize>) {
        let mut factors = b.factors.clone();
        let record = self.raise_fully(&mut factors, policy);
        (TensorCrystalElement::from_factors(factors), record)
    }

    fn raise_fully(&self, factors: &mut [Weight], policy: &mut dyn IndexPolicy) -> Vec<usize> {
        let mut record = Vec::new();
        let mut cands = Vec::with_capacity(self.rs.rank());
        loop {
            cands.clear();
            cands.extend(
                (0..self.rs.rank()).filter(|&i| self.acting_factor(Direction::Raise, i, factors).is_some()),
            );
            if cands.is_empty() {
                return record;
            }
            let i = policy.choose(&cands);
            debug_assert!(cands.contains(&i));
            let acted = self.apply_in_place(Direction::Raise, i, factors);
            debug_assert!(acted);
            record.push(i);
        }
    }

    fn lower_fully(&self, factors: &mut [Weight]) {
        while let Some(i) = self.first_available(Direction::Lower, factors) {
            self.apply_in_place(Direction::Lower, i, factors);
        }
    }

    pub fn to_lowest(&self, b: &TensorCrystalElement) -> TensorCrystalElement {
        let mut factors = b.factors.clone();
        self.lower_fully(&mut factors);
        TensorCrystalElement::from_factors(factors)
    }

    /// The Schützenberger involution with the canonical raising policy.
    pub fn schutzenberger(&self, b: &TensorCrystalElement) -> Result<TensorCrystalElement> {
        self.schutzenberger_with(b, &mut SmallestFirst)
    }

    /// Writes `b = f_{i_1} ⋯ f_{i_k} b_high`, moves to the lowest element
    /// `b_low` of the component and returns `e_{i_1*} ⋯ e_{i_k*} b_low`.
    pub fn schutzenberger_with(
        &self,
        b: &TensorCrystalElement,
        policy: &mut dyn IndexPolicy,
    ) -> Result<TensorCrystalElement> {
        let mut factors = b.factors.clone();
        let record = self.raise_fully(&mut factors, policy);
        self.lower_fully(&mut factors);
        for &i in record.iter().rev() {
            if !self.apply_in_place(Direction::Raise, self.rs.dual_node(i), &mut factors) {
                return Err(Error::AlgorithmInvariantViolated("replayed raising operator vanished"));
            }
        }
        Ok(TensorCrystalElement::from_factors(factors))
    }

    /// All highest weight elements of weight 0 in `B(λ_1) ⊗ ⋯ ⊗ B(λ_m)`,
    /// sorted by coordinates.
    pub fn invariant_elements(&self, seq: &WeightSequence<'_>) -> Result<Vec<TensorCrystalElement>> {
        self.invariant_elements_with_cap(seq, DEFAULT_ELEMENT_CAP)
    }

    pub fn invariant_elements_with_cap(
        &self,
        seq: &WeightSequence<'_>,
        cap: usize,
    ) -> Result<Vec<TensorCrystalElement>> {
        let rs = self.rs;
        let m = seq.len();
        let rank = rs.rank();
        let orbits = seq
            .weights()
            .iter()
            .map(|l| rs.weyl_orbit(l))
            .collect::<Result<Vec<_>>>()?;
        // reach[k][i]: range of coordinate i over sums of factors k..m.
        let mut reach = alloc::vec![alloc::vec![(0i64, 0i64); rank]; m + 1];
        for k in (0..m).rev() {
            let next = reach[k + 1].clone();
            for (i, (slot, (plo, phi))) in reach[k].iter_mut().zip(next).enumerate() {
                let lo = orbits[k].iter().map(|x| x.coords()[i]).min().unwrap_or(0);
                let hi = orbits[k].iter().map(|x| x.coords()[i]).max().unwrap_or(0);
                *slot = (plo + lo, phi + hi);
            }
        }

        let mut out = Vec::new();
        let mut visited = 0usize;
        let mut factors: Vec<Weight> = Vec::with_capacity(m);
        let mut sums: Vec<Weight> = alloc::vec![rs.zero()];
        let mut stack = alloc::vec![(0usize, 0usize)];
        while let Some((depth, next)) = stack.pop() {
            factors.truncate(depth);
            sums.truncate(depth + 1);
            if depth == m {
                if sums[m].is_zero() {
                    let b = TensorCrystalElement::from_factors(factors.clone());
                    if self.is_highest(&b) {
                        out.push(b);
                    }
                }
                continue;
            }
            if next >= orbits[depth].len() {
                continue;
            }
            stack.push((depth, next + 1));
            let x = &orbits[depth][next];
            let sum = &sums[depth] + x;
            let ok = sum
                .coords()
                .iter()
                .zip(&reach[depth + 1])
                .all(|(&s, &(lo, hi))| -s >= lo && -s <= hi);
            if !ok {
                continue;
            }
            visited += 1;
            if visited > cap {
                return Err(Error::EnumerationTooLarge { cap });
            }
            factors.push(x.clone());
            sums.push(sum);
            stack.push((depth + 1, 0));
        }
        out.sort();
        Ok(out)
    }

    /// Rotation through the commutor: `ξ(b_2 ⊗ ⋯ ⊗ b_m) ⊗ ξ(b_1)`, an
    /// invariant element of type `λ^{(1)}`.
    pub fn commutor_rotate(
        &self,
        seq: &WeightSequence<'_>,
        b: &TensorCrystalElement,
    ) -> Result<TensorCrystalElement> {
        if b.factors.len() != seq.len() || !self.is_invariant(b) {
            return Err(Error::NotInvariant);
        }
        let head = TensorCrystalElement::from_factors(b.factors[..1].to_vec());
        let tail = TensorCrystalElement::from_factors(b.factors[1..].to_vec());
        let mut factors = if tail.factors.is_empty() {
            Vec::new()
        } else {
            self.schutzenberger(&tail)?.factors
        };
        factors.extend(self.schutzenberger(&head)?.factors);
        let out = TensorCrystalElement::new(&seq.rotated(1), factors)
            .map_err(|_| Error::AlgorithmInvariantViolated("commutor left B(λ^(1))"))?;
        if !self.is_invariant(&out) {
            return Err(Error::AlgorithmInvariantViolated("commutor image is not invariant"));
        }
        Ok(out)
    }
}

/// `μ ↦ b_{μ_1} ⊗ b_{μ_2 - μ_1} ⊗ ⋯ ⊗ b_{μ_m - μ_{m-1}}`.
pub fn path_bijection(path: &LittelmannPath) -> TensorCrystalElement {
    TensorCrystalElement::from_factors(path.steps())
}

/// Inverse of [`path_bijection`]: partial sums of the factors.
pub fn element_to_path(
    seq: &WeightSequence<'_>,
    b: &TensorCrystalElement,
) -> Result<LittelmannPath> {
    let mut acc = seq.root_system().zero();
    let points = b
        .factors
        .iter()
        .map(|f| {
            acc += f;
            acc.clone()
        })
        .collect();
    LittelmannPath::new(seq, points)
}
