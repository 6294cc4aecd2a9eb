//! Minuscule Littelmann paths and their rotation.
//!
//! A path of type `(λ_1, …, λ_m)` is stored as its points `γ_1, …, γ_m`; the
//! starting point `γ_0 = 0` is implicit. Indices into `points` are 0-based, so
//! `points[k]` is `γ_{k+1}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Default bound on the number of search nodes visited while enumerating.
pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// A sequence of minuscule weights `(λ_1, …, λ_m)` of one root system.
#[derive(Debug, Clone)]
pub struct WeightSequence<'a> {
    rs: &'a RootSystem,
    weights: Vec<Weight>,
}

impl PartialEq for WeightSequence<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
    }
}

impl Eq for WeightSequence<'_> {}

impl<'a> WeightSequence<'a> {
    pub fn new(rs: &'a RootSystem, weights: Vec<Weight>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidPath("empty weight sequence"));
        }
        for w in &weights {
            rs.check_weight(w)?;
            if !rs.is_minuscule(w) {
                return Err(Error::NotMinuscule);
            }
        }
        Ok(WeightSequence { rs, weights })
    }

    /// The sequence `(ω_{nodes[0]}, ω_{nodes[1]}, …)` (0-based nodes).
    pub fn from_nodes(rs: &'a RootSystem, nodes: &[usize]) -> Result<Self> {
        let weights = nodes
            .iter()
            .map(|&i| rs.fundamental(i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs, weights)
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Node of each (fundamental) weight.
    pub fn nodes(&self) -> Vec<usize> {
        self.weights
            .iter()
            .map(|w| w.fundamental_node().expect("minuscule weights are fundamental"))
            .collect()
    }

    /// `λ^{(j)}` with `λ^{(j)}_k = λ_{j+k}`, indices mod `m`.
    pub fn rotated(&self, j: usize) -> Self {
        let mut weights = self.weights.clone();
        let m = weights.len();
        weights.rotate_left(j % m);
        WeightSequence { rs: self.rs, weights }
    }

    pub fn is_periodic(&self, ell: usize) -> bool {
        ell > 0 && self.len().is_multiple_of(ell) && self.rotated(ell) == *self
    }

    /// `|λ| = Σ λ_k`.
    pub fn total(&self) -> Weight {
        let mut t = self.rs.zero();
        for w in &self.weights {
            t += w;
        }
        t
    }

    fn tail(&self) -> Self {
        WeightSequence { rs: self.rs, weights: self.weights[1..].to_vec() }
    }
}

fn check_steps(seq: &WeightSequence<'_>, points: &[Weight]) -> Result<()> {
    if points.len() != seq.len() {
        return Err(Error::InvalidPath("length differs from the type"));
    }
    let rs = seq.root_system();
    let mut prev = rs.zero();
    for (p, lambda) in points.iter().zip(seq.weights()) {
        rs.check_weight(p)?;
        if !rs.in_orbit_of(&(p - &prev), lambda) {
            return Err(Error::InvalidPath("step outside the prescribed Weyl orbit"));
        }
        prev = p.clone();
    }
    Ok(())
}

/// A minuscule path, not necessarily dominant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinusculePath {
    points: Vec<Weight>,
}

impl MinusculePath {
    pub fn new(seq: &WeightSequence<'_>, points: Vec<Weight>) -> Result<Self> {
        check_steps(seq, &points)?;
        Ok(MinusculePath { points })
    }

    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    pub fn is_dominant(&self) -> bool {
        self.points.iter().all(Weight::is_dominant)
    }

    /// Position in `points` of the first non-dominant point. In the 1-based
    /// numbering with `γ_0 = 0`, this is `dom(γ) - 1`.
    pub fn dom_index(&self) -> Result<usize> {
        first_non_dominant(&self.points).ok_or(Error::NotApplicable)
    }

    /// One straightening step `r`: every point from the first non-dominant
    /// one onwards is shifted by `wγ - γ`, where `w` is the minimal word
    /// making that point `γ` dominant.
    pub fn raise_once(&self, rs: &RootSystem) -> Result<MinusculePath> {
        let mut points = self.points.clone();
        let k = first_non_dominant(&points).ok_or(Error::NotApplicable)?;
        raise_at(rs, &mut points, k);
        Ok(MinusculePath { points })
    }
}

fn first_non_dominant(points: &[Weight]) -> Option<usize> {
    points.iter().position(|p| !p.is_dominant())
}

fn raise_at(rs: &RootSystem, points: &mut [Weight], k: usize) {
    let (dom, _) = rs.to_dominant(&points[k]);
    let shift = &dom - &points[k];
    for p in &mut points[k..] {
        *p += &shift;
    }
}

/// An element of `P(λ)`: a minuscule path through dominant weights ending at 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LittelmannPath {
    points: Vec<Weight>,
}

impl LittelmannPath {
    pub fn new(seq: &WeightSequence<'_>, points: Vec<Weight>) -> Result<Self> {
        check_steps(seq, &points)?;
        if !points.iter().all(Weight::is_dominant) {
            return Err(Error::InvalidPath("point is not dominant"));
        }
        if !points.last().is_some_and(Weight::is_zero) {
            return Err(Error::InvalidPath("path does not end at 0"));
        }
        Ok(LittelmannPath { points })
    }

    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Successive differences `μ_k - μ_{k-1}`.
    pub fn steps(&self) -> Vec<Weight> {
        let mut prev = Weight::zero(self.points[0].rank());
        self.points
            .iter()
            .map(|p| {
                let s = p - &prev;
                prev = p.clone();
                s
            })
            .collect()
    }
}

impl From<LittelmannPath> for MinusculePath {
    fn from(p: LittelmannPath) -> Self {
        MinusculePath { points: p.points }
    }
}

/// All of `P(λ)`, sorted lexicographically by coordinates.
pub fn enumerate_paths(seq: &WeightSequence<'_>) -> Result<Vec<LittelmannPath>> {
    enumerate_paths_with(seq, DEFAULT_ENUMERATION_CAP, true)
}

/// Depth-first enumeration of `P(λ)`. `cap` bounds the number of visited
/// search nodes. With `prune`, a prefix is abandoned when some coordinate
/// (or the coordinate sum) of its endpoint exceeds the largest decrease the
/// remaining steps can achieve.
pub fn enumerate_paths_with(
    seq: &WeightSequence<'_>,
    cap: usize,
    prune: bool,
) -> Result<Vec<LittelmannPath>> {
    let rs = seq.root_system();
    let m = seq.len();
    let mut orbit_cache: BTreeMap<Weight, Vec<Weight>> = BTreeMap::new();
    let mut orbits = Vec::with_capacity(m);
    for lambda in seq.weights() {
        if !orbit_cache.contains_key(lambda) {
            orbit_cache.insert(lambda.clone(), rs.weyl_orbit(lambda)?);
        }
        orbits.push(orbit_cache[lambda].clone());
    }

    // budget[k]: largest decrease per coordinate, then of the coordinate
    // sum, available to steps k+1..m (0-based: orbits[k..]).
    let rank = rs.rank();
    let mut budget = alloc::vec![alloc::vec![0i64; rank + 1]; m + 1];
    for k in (0..m).rev() {
        let mut row = budget[k + 1].clone();
        for (i, slot) in row.iter_mut().take(rank).enumerate() {
            *slot += orbits[k].iter().map(|x| -x.coords()[i]).max().unwrap_or(0);
        }
        row[rank] += orbits[k]
            .iter()
            .map(|x| -x.coords().iter().sum::<i64>())
            .max()
            .unwrap_or(0);
        budget[k] = row;
    }

    let mut out = Vec::new();
    let mut visited = 0usize;
    let mut prefix: Vec<Weight> = Vec::with_capacity(m);
    let mut stack: Vec<(usize, usize)> = alloc::vec![(0, 0)];
    let zero = rs.zero();
    // Explicit DFS: stack entries are (depth, next orbit element to try).
    while let Some((depth, next)) = stack.pop() {
        prefix.truncate(depth);
        if depth == m {
            if prefix.last().is_some_and(Weight::is_zero) {
                out.push(LittelmannPath { points: prefix.clone() });
            }
            continue;
        }
        if next >= orbits[depth].len() {
            continue;
        }
        stack.push((depth, next + 1));
        let base = if depth == 0 { &zero } else { &prefix[depth - 1] };
        let point = base + &orbits[depth][next];
        if !point.is_dominant() {
            continue;
        }
        if prune {
            let b = &budget[depth + 1];
            let c = point.coords();
            if c.iter().zip(b).any(|(x, y)| x > y) || c.iter().sum::<i64>() > b[rank] {
                continue;
            }
        }
        visited += 1;
        if visited > cap {
            return Err(Error::EnumerationTooLarge { cap });
        }
        prefix.push(point);
        stack.push((depth + 1, 0));
    }
    out.sort();
    Ok(out)
}

/// The rotation `R: P(λ) → P(λ^{(1)})`.
pub fn rotate(seq: &WeightSequence<'_>, path: &LittelmannPath) -> Result<LittelmannPath> {
    let m = seq.len();
    if path.len() != m {
        return Err(Error::InvalidPath("length differs from the type"));
    }
    let rs = seq.root_system();
    let mu1 = &path.points[0];
    let mut nu: Vec<Weight> = path.points[1..].iter().map(|p| p - mu1).collect();
    // dom strictly increases under r, so at most m - 1 steps are needed.
    let mut steps = 0;
    while let Some(k) = first_non_dominant(&nu) {
        steps += 1;
        if steps > m {
            return Err(Error::AlgorithmInvariantViolated("r^max did not terminate"));
        }
        raise_at(rs, &mut nu, k);
    }
    nu.push(rs.zero());
    LittelmannPath::new(&seq.rotated(1), nu)
        .map_err(|_| Error::AlgorithmInvariantViolated("rotation left P(λ^(1))"))
}

/// `R^k`, starting from a path of type `seq`.
pub fn rotate_times(
    seq: &WeightSequence<'_>,
    path: &LittelmannPath,
    k: usize,
) -> Result<LittelmannPath> {
    let mut cur = path.clone();
    let mut cur_seq = seq.clone();
    for _ in 0..k {
        cur = rotate(&cur_seq, &cur)?;
        cur_seq = cur_seq.rotated(1);
    }
    Ok(cur)
}

/// The straightening `r^max` applied to a non-dominant minuscule path of type
/// `(λ_2, …, λ_m)`; exposed for inspection of the intermediate paths.
pub fn straighten_trace(
    seq: &WeightSequence<'_>,
    path: &LittelmannPath,
) -> Result<Vec<MinusculePath>> {
    let rs = seq.root_system();
    let mu1 = &path.points[0];
    let nu: Vec<Weight> = path.points[1..].iter().map(|p| p - mu1).collect();
    let mut cur = MinusculePath::new(&seq.tail(), nu)?;
    let mut trace = alloc::vec![cur.clone()];
    while !cur.is_dominant() {
        cur = cur.raise_once(rs)?;
        trace.push(cur.clone());
        if trace.len() > seq.len() + 1 {
            return Err(Error::AlgorithmInvariantViolated("r^max did not terminate"));
        }
    }
    Ok(trace)
}

/// Cycle structure of `R^ℓ` acting on `P(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructure {
    pub ell: usize,
    /// `m / ℓ`.
    pub r: usize,
    pub paths: Vec<LittelmannPath>,
    /// `permutation[i]` is the index of `R^ℓ(paths[i])`.
    pub permutation: Vec<usize>,
    /// Cycles of `permutation`, each starting at its smallest index.
    pub orbits: Vec<Vec<usize>>,
    /// `fixed_counts[d]` = number of paths fixed by `(R^ℓ)^d`, `d = 0..r`.
    pub fixed_counts: Vec<usize>,
}

pub fn orbit_structure(seq: &WeightSequence<'_>, ell: usize) -> Result<OrbitStructure> {
    if !seq.is_periodic(ell) {
        return Err(Error::SequenceNotPeriodic { ell, len: seq.len() });
    }
    let r = seq.len() / ell;
    let paths = enumerate_paths(seq)?;
    let mut permutation = Vec::with_capacity(paths.len());
    for p in &paths {
        let image = rotate_times(seq, p, ell)?;
        let idx = paths
            .binary_search(&image)
            .map_err(|_| Error::AlgorithmInvariantViolated("R^ℓ image not in P(λ)"))?;
        permutation.push(idx);
    }
    let mut seen = alloc::vec![false; paths.len()];
    for &i in &permutation {
        if core::mem::replace(&mut seen[i], true) {
            return Err(Error::AlgorithmInvariantViolated("R^ℓ is not injective"));
        }
    }
    let orbits = cycles(&permutation);
    let fixed_counts = (0..r)
        .map(|d| {
            orbits
                .iter()
                .filter(|o| d % o.len() == 0)
                .map(Vec::len)
                .sum()
        })
        .collect();
    Ok(OrbitStructure { ell, r, paths, permutation, orbits, fixed_counts })
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}
