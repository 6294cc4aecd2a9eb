//! Kostka-Foulkes polynomials and the invariant-dimension count.
//!
//! `K_{ν,γ}(q)` is computed from the charge statistic on column-strict
//! tableaux, and independently from the q-analog of Kostant's multiplicity
//! formula. The invariant dimension of a tensor product of minuscule
//! representations comes from the Brauer-Klimyk rule, which uses nothing but
//! the root system.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::paths::WeightSequence;
use crate::poly::IntPolynomial;
use crate::rootsys::Weight;

/// Default largest number of parts accepted by [`q_kostant`].
pub const DEFAULT_ORACLE_CAP: usize = 8;

/// A weakly decreasing list of positive parts (zeros are dropped).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidContent);
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary content vector into a partition.
    pub fn sorted(content: &[u32]) -> Self {
        let mut parts = content.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts are decreasing")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Lascoux–Schützenberger charge of a word with partition content.
///
/// Standard subwords are extracted by reading leftwards, cyclically, from the
/// right end: first a 1, then a 2, and so on. Within a subword the letter 1
/// has index 0 and the index goes up by one each time the search for `k+1`
/// wraps around, i.e. when `k+1` sits to the right of `k`.
pub fn charge(word: &[u32]) -> Result<u64> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    if word.contains(&0) {
        return Err(Error::InvalidContent);
    }
    let mut counts = vec![0usize; max];
    for &x in word {
        counts[x as usize - 1] += 1;
    }
    if counts.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidContent);
    }

    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0u64;
    while remaining > 0 {
        let mut pos = n; // one past the right end
        let mut index = 0u64;
        let mut letter = 1u32;
        loop {
            let mut found = None;
            let mut wrapped = false;
            for step in 1..=n {
                let p = if step <= pos { pos - step } else { n + pos - step };
                if step > pos {
                    wrapped = true;
                }
                if !used[p] && word[p] == letter {
                    found = Some(p);
                    break;
                }
            }
            let Some(p) = found else { break };
            if wrapped && letter > 1 {
                index += 1;
            }
            total += index;
            used[p] = true;
            remaining -= 1;
            pos = p;
            letter += 1;
        }
    }
    Ok(total)
}

/// Column-strict tableaux of shape `shape` and content `content`, as rows.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    fill_strips(shape.parts(), content.parts(), 0, &mut rows, &mut out);
    out
}

// Adds the letter `k+1` as a horizontal strip of size content[k].
fn fill_strips(
    shape: &[u32],
    content: &[u32],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if k == content.len() {
        out.push(rows.clone());
        return;
    }
    let old: Vec<usize> = rows.iter().map(Vec::len).collect();
    place_row(shape, content, k, &old, 0, content[k] as usize, rows, out);
}

#[allow(clippy::too_many_arguments)]
fn place_row(
    shape: &[u32],
    content: &[u32],
    k: usize,
    old: &[usize],
    r: usize,
    left: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if left == 0 {
        fill_strips(shape, content, k + 1, rows, out);
        return;
    }
    if r == shape.len() {
        return;
    }
    let cap = if r == 0 { shape[0] as usize } else { (shape[r] as usize).min(old[r - 1]) };
    let room = cap.saturating_sub(old[r]).min(left);
    for add in (0..=room).rev() {
        rows[r].extend(core::iter::repeat_n(k as u32 + 1, add));
        place_row(shape, content, k, old, r + 1, left - add, rows, out);
        let len = rows[r].len();
        rows[r].truncate(len - add);
    }
}

/// Rows left to right, bottom row first.
pub fn reading_word(rows: &[Vec<u32>]) -> Vec<u32> {
    rows.iter().rev().flatten().copied().collect()
}

/// `K_{ν,γ}(q) = Σ_T q^{charge(T)}` over column-strict tableaux of shape `ν`
/// and content `γ` sorted into a partition.
pub fn kostka_foulkes(shape: &Partition, content: &[u32]) -> Result<IntPolynomial> {
    kostka_foulkes_by(shape, content, charge)
}

/// [`kostka_foulkes`] with the statistic on reading words supplied.
pub fn kostka_foulkes_by(
    shape: &Partition,
    content: &[u32],
    statistic: impl Fn(&[u32]) -> Result<u64>,
) -> Result<IntPolynomial> {
    let total: u32 = content.iter().sum();
    if shape.size() != total {
        return Err(Error::SizeMismatch { shape: shape.size(), content: total });
    }
    let mu = Partition::sorted(content);
    let mut coeffs: Vec<i64> = Vec::new();
    for t in semistandard_tableaux(shape, &mu) {
        let c = statistic(&reading_word(&t))? as usize;
        if coeffs.len() <= c {
            coeffs.resize(c + 1, 0);
        }
        coeffs[c] += 1;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `Σ_{w ∈ S_m} (-1)^{l(w)} P_q(w(ν+ρ) - (γ+ρ))` with `P_q` the q-analog
/// of Kostant's partition function for type `A_{m-1}`.
pub fn q_kostant(shape: &Partition, content: &[u32]) -> Result<IntPolynomial> {
    q_kostant_with_cap(shape, content, DEFAULT_ORACLE_CAP)
}

pub fn q_kostant_with_cap(shape: &Partition, content: &[u32], cap: usize) -> Result<IntPolynomial> {
    let total: u32 = content.iter().sum();
    if shape.size() != total {
        return Err(Error::SizeMismatch { shape: shape.size(), content: total });
    }
    let mu = Partition::sorted(content);
    let m = shape.len().max(mu.len());
    if m > cap {
        return Err(Error::OracleTooLarge { len: m, cap });
    }
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    let padded = |p: &Partition| {
        let mut v: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        v.resize(m, 0);
        for (i, x) in v.iter_mut().enumerate() {
            *x += (m - 1 - i) as i64;
        }
        v
    };
    let lam_rho = padded(shape);
    let mu_rho = padded(&mu);

    let mut memo = BTreeMap::new();
    let mut total_poly = IntPolynomial::zero();
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        let mut c = Vec::with_capacity(m - 1);
        let mut acc = 0i64;
        let mut feasible = true;
        for i in 0..m - 1 {
            acc += lam_rho[perm[i]] - mu_rho[i];
            if acc < 0 {
                feasible = false;
                break;
            }
            c.push(acc);
        }
        if feasible {
            let p = partition_function(&c, &mut memo);
            if !p.is_zero() {
                total_poly = if inversions(&perm).is_multiple_of(2) {
                    &total_poly + &p
                } else {
                    &total_poly - &p
                };
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(total_poly)
}

/// q-analog of Kostant's partition function in type A, for the vector `c`
/// of simple-root coefficients: `Σ q^{#roots}` over ways to write it as a sum
/// of positive roots `α_i + ⋯ + α_j`.
fn partition_function(c: &[i64], memo: &mut BTreeMap<Vec<i64>, IntPolynomial>) -> IntPolynomial {
    if c.is_empty() {
        return IntPolynomial::one();
    }
    if let Some(p) = memo.get(c) {
        return p.clone();
    }
    // Roots starting at the first node: exactly c[0] of them. Their tail
    // counts s[t] = #{roots reaching node t} are weakly decreasing and
    // bounded by c[t].
    let mut out = IntPolynomial::zero();
    let mut rest = vec![0i64; c.len() - 1];
    tails(c, 1, c[0], &mut rest, memo, &mut out);
    let out = out.shift(c[0] as usize);
    memo.insert(c.to_vec(), out.clone());
    out
}

fn tails(
    c: &[i64],
    t: usize,
    bound: i64,
    rest: &mut Vec<i64>,
    memo: &mut BTreeMap<Vec<i64>, IntPolynomial>,
    out: &mut IntPolynomial,
) {
    if t == c.len() {
        let p = partition_function(rest, memo);
        *out = &*out + &p;
        return;
    }
    for s in 0..=bound.min(c[t]) {
        rest[t - 1] = c[t] - s;
        tails(c, t + 1, s, rest, memo, out);
    }
}

fn inversions(perm: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `dim V(λ_1) ⊗ ⋯ ⊗ V(λ_m)^G` by iterated Brauer-Klimyk: tensoring a
/// dominant `μ` with a minuscule `V(λ)` contributes `μ + x` for each
/// `x ∈ Wλ`, straightened by the dot action (walls cancel, otherwise a sign).
pub fn invariant_dim(seq: &WeightSequence<'_>) -> Result<u64> {
    let rs = seq.root_system();
    let rho = Weight::from_coords(vec![1; rs.rank()]);
    let mut state: BTreeMap<Weight, i64> = BTreeMap::new();
    state.insert(rs.zero(), 1);
    for lambda in seq.weights() {
        let orbit = rs.weyl_orbit(lambda)?;
        let mut next: BTreeMap<Weight, i64> = BTreeMap::new();
        for (mu, &mult) in &state {
            let shifted = mu + &rho;
            for x in &orbit {
                let (dom, word) = rs.to_dominant(&(&shifted + x));
                if dom.coords().contains(&0) {
                    continue;
                }
                let sign = if word.len() % 2 == 0 { 1 } else { -1 };
                *next.entry(&dom - &rho).or_insert(0) += sign * mult;
            }
        }
        next.retain(|_, v| *v != 0);
        if next.values().any(|&v| v < 0) {
            return Err(Error::AlgorithmInvariantViolated("negative tensor multiplicity"));
        }
        state = next;
    }
    Ok(state.get(&rs.zero()).copied().unwrap_or(0) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystem};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn charge_anchors() {
        assert_eq!(charge(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(charge(&[3, 1, 2]).unwrap(), 2);
        assert_eq!(charge(&[2, 1, 3]).unwrap(), 1);
        assert_eq!(charge(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(charge(&[1, 1, 2, 2]).unwrap(), 2);
        assert_eq!(charge(&[]).unwrap(), 0);
    }

    #[test]
    fn charge_rejects_non_partition_content() {
        assert_eq!(charge(&[2, 2, 1]).unwrap_err(), Error::InvalidContent);
        assert_eq!(charge(&[1, 3]).unwrap_err(), Error::InvalidContent);
        assert_eq!(charge(&[0, 1]).unwrap_err(), Error::InvalidContent);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn kostka_anchors() {
        assert_eq!(kostka_foulkes(&part(&[2, 2]), &[1, 1, 1, 1]).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(kostka_foulkes(&part(&[2, 1]), &[2, 1]).unwrap(), poly(&[1]));
        assert_eq!(kostka_foulkes(&part(&[3]), &[1, 1, 1]).unwrap(), poly(&[0, 0, 0, 1]));
        assert_eq!(kostka_foulkes(&part(&[2, 1]), &[1, 1, 1]).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes(&part(&[1, 1, 1]), &[1, 1, 1]).unwrap(), poly(&[1]));
        assert_eq!(kostka_foulkes(&part(&[2, 2]), &[1, 2, 1]).unwrap(), poly(&[0, 1]));
        assert_eq!(
            kostka_foulkes(&part(&[2, 2]), &[1, 1]).unwrap_err(),
            Error::SizeMismatch { shape: 4, content: 2 }
        );
    }

    #[test]
    fn q_kostant_anchors() {
        assert_eq!(q_kostant(&part(&[2, 2]), &[1, 1, 1, 1]).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(q_kostant(&part(&[1, 1]), &[1, 1]).unwrap(), poly(&[1]));
        assert_eq!(q_kostant(&part(&[2]), &[1, 1]).unwrap(), poly(&[0, 1]));
        assert_eq!(q_kostant(&part(&[1, 1]), &[2]).unwrap(), IntPolynomial::zero());
        assert_eq!(
            q_kostant(&part(&[9]), &[1; 9]).unwrap_err(),
            Error::OracleTooLarge { len: 9, cap: 8 }
        );
    }

    #[test]
    fn ssyt_enumeration() {
        assert_eq!(semistandard_tableaux(&part(&[2, 2]), &part(&[1, 1, 1, 1])).len(), 2);
        assert_eq!(semistandard_tableaux(&part(&[3, 2]), &part(&[2, 2, 1])).len(), 2);
        assert_eq!(
            semistandard_tableaux(&part(&[2, 1]), &part(&[1, 1, 1])),
            vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]
        );
    }

    #[test]
    fn invariant_dim_anchors() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        let seq = WeightSequence::from_nodes(&a1, &[0; 4]).unwrap();
        assert_eq!(invariant_dim(&seq).unwrap(), 2);
        let seq = WeightSequence::from_nodes(&a1, &[0; 3]).unwrap();
        assert_eq!(invariant_dim(&seq).unwrap(), 0);
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let seq = WeightSequence::from_nodes(&d4, &[0; 4]).unwrap();
        assert_eq!(invariant_dim(&seq).unwrap(), 3);
        let e6 = RootSystem::new(Family::E, 6).unwrap();
        let seq = WeightSequence::from_nodes(&e6, &[0, 5, 0, 5]).unwrap();
        assert_eq!(invariant_dim(&seq).unwrap(), 3);
    }
}
