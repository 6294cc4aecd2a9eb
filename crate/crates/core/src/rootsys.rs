//! Cartan data, weights and Weyl group actions for the finite root systems.
//!
//! Weights are always stored in the fundamental-weight basis, so the `i`-th
//! coordinate of a weight is its pairing with the simple coroot `α_i∨`.
//! The Cartan matrix uses the convention `C[i][j] = ⟨α_j, α_i∨⟩` with
//! Bourbaki node numbering; column `j` is therefore `α_j` written in the
//! fundamental-weight basis. Node indices are 0-based throughout the library.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Default bound on the size of an enumerated Weyl orbit.
pub const DEFAULT_ORBIT_CAP: usize = 10_000;

/// An integral weight, `Σ coords[i]·ω_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    /// The fundamental weight `ω_node`.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[node] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The node `i` if this weight is exactly `ω_i`.
    pub fn fundamental_node(&self) -> Option<usize> {
        let mut node = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if node.is_none() => node = Some(i),
                _ => return None,
            }
        }
        node
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

/// A word in the simple reflections. Letters act right to left: the word
/// `[i, j]` is `s_i s_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, rs: &RootSystem, w: &Weight) -> Weight {
        let mut out = w.clone();
        for &i in self.0.iter().rev() {
            rs.reflect_in_place(i, &mut out);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
    dual_nodes: Vec<usize>,
    minuscule_nodes: Vec<usize>,
    orbit_cap: usize,
}

impl RootSystem {
    /// Builds the root system of type `family` and `rank`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(family, rank).ok_or(Error::InvalidType { family, rank })?;
        let positive_coroots = close_positive_coroots(&cartan);
        let two_rho = (0..rank)
            .map(|i| positive_coroots.iter().map(|v| v[i]).sum())
            .collect();
        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            positive_coroots,
            two_rho,
            dual_nodes: Vec::new(),
            minuscule_nodes: Vec::new(),
            orbit_cap: DEFAULT_ORBIT_CAP,
        };
        rs.dual_nodes = (0..rank)
            .map(|i| {
                let (dom, _) = rs.to_dominant(&-&Weight::fundamental(rank, i));
                dom.fundamental_node().expect("-w0 permutes fundamental weights")
            })
            .collect();
        rs.minuscule_nodes = (0..rank).filter(|&i| rs.orbit_is_minuscule(i)).collect();
        Ok(rs)
    }

    pub fn with_orbit_cap(mut self, cap: usize) -> Self {
        self.orbit_cap = cap;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn orbit_cap(&self) -> usize {
        self.orbit_cap
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive coroots in the simple-coroot basis.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// `v[i] = ⟨ω_i, 2ρ∨⟩`.
    pub fn two_rho_covector(&self) -> &[i64] {
        &self.two_rho
    }

    /// The involution `i ↦ i*` with `ω_{i*} = -w0 ω_i`.
    pub fn dual_node(&self, i: usize) -> usize {
        self.dual_nodes[i]
    }

    pub fn fundamental(&self, node: usize) -> Result<Weight> {
        self.check_index(node)?;
        Ok(Weight::fundamental(self.rank, node))
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// `α_i` in the fundamental-weight basis.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight((0..self.rank).map(|r| self.cartan[r][i]).collect()))
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: w.rank() });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::InvalidIndex { index: i, rank: self.rank });
        }
        Ok(())
    }

    /// `⟨w, β∨⟩` for a coroot given in the simple-coroot basis.
    pub fn pair_coroot(&self, w: &Weight, coroot: &[i64]) -> i64 {
        w.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let p = w.0[i];
        if p != 0 {
            for (r, c) in w.0.iter_mut().enumerate() {
                *c -= p * self.cartan[r][i];
            }
        }
    }

    /// `s_i(w) = w - ⟨w, α_i∨⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(w)?;
        let mut out = w.clone();
        self.reflect_in_place(i, &mut out);
        Ok(out)
    }

    /// The dominant weight in the orbit of `w` and a minimal word carrying
    /// `w` to it. Reflects at the smallest negative coordinate each step.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, WeylWord) {
        let mut cur = w.clone();
        let mut applied = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut cur);
            applied.push(i);
        }
        applied.reverse();
        (cur, WeylWord(applied))
    }

    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        self.to_dominant(w).0
    }

    /// The full Weyl orbit of `w`, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check_weight(w)?;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank {
                if cur.0[i] == 0 {
                    continue;
                }
                let mut next = cur.clone();
                self.reflect_in_place(i, &mut next);
                if seen.insert(next.clone()) {
                    if seen.len() > self.orbit_cap {
                        return Err(Error::OrbitTooLarge { cap: self.orbit_cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `true` iff `x` lies in the orbit of the dominant weight `lambda`.
    pub fn in_orbit_of(&self, x: &Weight, lambda: &Weight) -> bool {
        x.rank() == self.rank && self.dominant_representative(x) == *lambda
    }

    // Orbit search that gives up as soon as a pairing leaves {-1, 0, 1}.
    fn orbit_is_minuscule(&self, node: usize) -> bool {
        let start = Weight::fundamental(self.rank, node);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            if cur.0.iter().any(|c| c.abs() > 1) {
                return false;
            }
            for i in 0..self.rank {
                if cur.0[i] != 0 {
                    let mut next = cur.clone();
                    self.reflect_in_place(i, &mut next);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        true
    }

    /// Nodes `i` for which `ω_i` is minuscule.
    pub fn minuscule_nodes(&self) -> &[usize] {
        &self.minuscule_nodes
    }

    pub fn minuscule_weights(&self) -> Vec<Weight> {
        self.minuscule_nodes
            .iter()
            .map(|&i| Weight::fundamental(self.rank, i))
            .collect()
    }

    pub fn is_minuscule(&self, w: &Weight) -> bool {
        w.rank() == self.rank
            && w
                .fundamental_node()
                .is_some_and(|i| self.minuscule_nodes.contains(&i))
    }

    /// `⟨w, 2ρ∨⟩`.
    pub fn two_rho_pairing(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.two_rho).map(|(a, b)| a * b).sum()
    }

    /// Number of positive roots `α` with `⟨w, α∨⟩ < 0`.
    pub fn count_negative_pairings(&self, w: &Weight) -> usize {
        self.positive_coroots
            .iter()
            .filter(|v| self.pair_coroot(w, v) < 0)
            .count()
    }

    /// Whether `w` is an integral combination of simple roots.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        if w.rank() != self.rank {
            return false;
        }
        // Cramer's rule on C v = w.
        let det = determinant(self.cartan.clone());
        (0..self.rank).all(|col| {
            let mut m = self.cartan.clone();
            for (r, row) in m.iter_mut().enumerate() {
                row[col] = w.0[r];
            }
            determinant(m) % det == 0
        })
    }
}

fn cartan_matrix(family: Family, rank: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !valid {
        return None;
    }
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
        }
    }
    let n = rank;
    match family {
        Family::B => c[n - 1][n - 2] = -2,
        Family::C => c[n - 2][n - 1] = -2,
        Family::F => c[2][1] = -2,
        Family::G => c[0][1] = -3,
        _ => {}
    }
    Some(c)
}

fn close_positive_coroots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    // s_i(α_j∨) = α_j∨ - ⟨α_i, α_j∨⟩ α_i∨
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let k: i64 = (0..rank).map(|j| v[j] * cartan[j][i]).sum();
            if k == 0 {
                continue;
            }
            let mut next = v.clone();
            next[i] -= k;
            if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Fraction-free (Bareiss) determinant.
fn determinant(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
