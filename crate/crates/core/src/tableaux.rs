//! Rectangular row-strict tableaux and promotion, the type A model of `P(λ)`.
//!
//! Internally shapes are `GL_n` vectors (row lengths); an `SL_n` weight in
//! the fundamental basis is the vector of consecutive differences.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::paths::{LittelmannPath, WeightSequence};
use crate::rootsys::{Family, RootSystem, Weight};

/// `n` rows of equal length `b`, rows strictly increasing, columns weakly
/// increasing, every label `1..=m` used.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowStrictTableau {
    rows: Vec<Vec<u32>>,
}

impl RowStrictTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let b = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || b == 0 {
            return Err(Error::InvalidTableau("empty"));
        }
        if rows.iter().any(|r| r.len() != b) {
            return Err(Error::InvalidTableau("not rectangular"));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive"));
        }
        if rows.iter().any(|r| r.windows(2).any(|p| p[0] >= p[1])) {
            return Err(Error::InvalidTableau("row not strictly increasing"));
        }
        for c in 0..b {
            if rows.windows(2).any(|p| p[0][c] > p[1][c]) {
                return Err(Error::InvalidTableau("column not weakly increasing"));
            }
        }
        let t = RowStrictTableau { rows };
        if t.content().contains(&0) {
            return Err(Error::InvalidTableau("labels 1..m must all occur"));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Largest label `m`.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `(i_1, …, i_m)` with `i_j` the multiplicity of label `j`.
    pub fn content(&self) -> Vec<usize> {
        let mut content = vec![0; self.max_entry() as usize];
        for &x in self.rows.iter().flatten() {
            content[x as usize - 1] += 1;
        }
        content
    }
}

fn require_type_a(rs: &RootSystem) -> Result<usize> {
    if rs.family() != Family::A {
        return Err(Error::TypeMismatch);
    }
    Ok(rs.rank() + 1)
}

fn sl_weight(shape: &[i64]) -> Weight {
    Weight::from_coords(shape.windows(2).map(|p| p[0] - p[1]).collect())
}

/// The `GL_n` shape of total size `size` whose `SL_n` projection is `w`.
fn gl_shape(w: &Weight, size: i64) -> Option<Vec<i64>> {
    let n = w.rank() + 1;
    // size = n·last + Σ_t (t+1)·w_t
    let weighted: i64 = w.coords().iter().enumerate().map(|(t, &c)| (t as i64 + 1) * c).sum();
    let rest = size - weighted;
    if rest % n as i64 != 0 {
        return None;
    }
    let mut shape = vec![rest / n as i64; n];
    for k in (0..n - 1).rev() {
        shape[k] = shape[k + 1] + w.coords()[k];
    }
    Some(shape)
}

/// Row `r` of the tableau lists the steps `j` whose lift to `GL_n` adds a box
/// to row `r`.
pub fn path_to_tableau(seq: &WeightSequence<'_>, path: &LittelmannPath) -> Result<RowStrictTableau> {
    let n = require_type_a(seq.root_system())?;
    if path.len() != seq.len() {
        return Err(Error::InvalidPath("length differs from the type"));
    }
    let mut rows = vec![Vec::new(); n];
    let mut shape = vec![0i64; n];
    let mut size = 0i64;
    for (j, (mu, node)) in path.points().iter().zip(seq.nodes()).enumerate() {
        size += node as i64 + 1;
        let next = gl_shape(mu, size).ok_or(Error::InvalidPath("point does not lift to GL_n"))?;
        for (r, (a, b)) in shape.iter().zip(&next).enumerate() {
            match b - a {
                0 => {}
                1 => rows[r].push(j as u32 + 1),
                _ => return Err(Error::InvalidPath("step is not a 0/1 vector")),
            }
        }
        shape = next;
    }
    RowStrictTableau::new(rows)
}

/// Inverse of [`path_to_tableau`]; the type is read off the content.
pub fn tableau_to_path<'a>(
    rs: &'a RootSystem,
    t: &RowStrictTableau,
) -> Result<(WeightSequence<'a>, LittelmannPath)> {
    let n = require_type_a(rs)?;
    if t.n_rows() != n {
        return Err(Error::TypeMismatch);
    }
    let content = t.content();
    if content.iter().any(|&i| i >= n) {
        return Err(Error::InvalidTableau("a label fills every row"));
    }
    let nodes: Vec<usize> = content.iter().map(|&i| i - 1).collect();
    let seq = WeightSequence::from_nodes(rs, &nodes)?;
    let points = (1..=t.max_entry())
        .map(|j| {
            let shape: Vec<i64> = t
                .rows()
                .iter()
                .map(|r| r.iter().filter(|&&x| x <= j).count() as i64)
                .collect();
            sl_weight(&shape)
        })
        .collect();
    let path = LittelmannPath::new(&seq, points)?;
    Ok((seq, path))
}

/// Promotion: delete the 1s; for each label `j+1` in turn slide its boxes
/// left, then up, into empty cells and relabel them `j`; finally fill the
/// vacated cells with `m`.
pub fn promote(t: &RowStrictTableau) -> RowStrictTableau {
    let m = t.max_entry();
    let n = t.n_rows();
    let b = t.n_cols();
    let mut grid: Vec<Vec<Option<u32>>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| (x != 1).then_some(x)).collect())
        .collect();
    for label in 2..=m {
        let mut moved = Vec::new();
        for (r, row) in grid.iter_mut().enumerate() {
            let Some(mut c) = row.iter().position(|&x| x == Some(label)) else {
                continue;
            };
            row[c] = None;
            while c > 0 && row[c - 1].is_none() {
                c -= 1;
            }
            row[c] = Some(label);
            moved.push((r, c));
        }
        // Rows are scanned top to bottom, so stacked boxes settle in order.
        for (r, c) in moved {
            let mut r = r;
            grid[r][c] = None;
            while r > 0 && grid[r - 1][c].is_none() {
                r -= 1;
            }
            grid[r][c] = Some(label - 1);
        }
    }
    let rows = grid
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.unwrap_or(m)).collect())
        .collect();
    debug_assert_eq!(n * b, t.rows().iter().map(Vec::len).sum());
    RowStrictTableau { rows }
}

/// `T, p(T), p²(T), …` up to (not including) the first repeat of `T`.
/// Returns `None` if `T` does not recur within `limit` steps.
pub fn promotion_orbit(t: &RowStrictTableau, limit: usize) -> Option<Vec<RowStrictTableau>> {
    let mut out = vec![t.clone()];
    let mut cur = promote(t);
    while cur != *t {
        if out.len() >= limit {
            return None;
        }
        out.push(cur.clone());
        cur = promote(&cur);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_paths;

    fn t(rows: &[&[u32]]) -> RowStrictTableau {
        RowStrictTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn path(seq: &WeightSequence<'_>, pts: &[&[i64]]) -> LittelmannPath {
        LittelmannPath::new(seq, pts.iter().map(|c| Weight::from_coords(c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn validation() {
        let bad = |rows: &[&[u32]]| RowStrictTableau::new(rows.iter().map(|r| r.to_vec()).collect());
        assert!(bad(&[&[1, 2], &[3]]).is_err());
        assert!(bad(&[&[2, 1], &[3, 4]]).is_err());
        assert!(bad(&[&[1, 3], &[2, 2]]).is_err());
        assert!(bad(&[&[2, 4], &[1, 3]]).is_err());
        assert!(bad(&[&[1, 3], &[3, 4]]).is_err());
        assert!(bad(&[]).is_err());
        assert_eq!(t(&[&[1, 3], &[2, 4]]).content(), vec![1, 1, 1, 1]);
        assert_eq!(t(&[&[1, 2], &[1, 3]]).content(), vec![2, 1, 1]);
    }

    #[test]
    fn a1_bijection() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let seq = WeightSequence::from_nodes(&rs, &[0; 4]).unwrap();
        let p = path(&seq, &[&[1], &[0], &[1], &[0]]);
        assert_eq!(path_to_tableau(&seq, &p).unwrap(), t(&[&[1, 3], &[2, 4]]));
        let q = path(&seq, &[&[1], &[2], &[1], &[0]]);
        assert_eq!(path_to_tableau(&seq, &q).unwrap(), t(&[&[1, 2], &[3, 4]]));

        let (s, back) = tableau_to_path(&rs, &t(&[&[1, 3], &[2, 4]])).unwrap();
        assert_eq!((s, back), (seq.clone(), p));
        assert_eq!(tableau_to_path(&rs, &t(&[&[1, 2], &[3, 4]])).unwrap().1, q);
    }

    #[test]
    fn a2_single_column() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let seq = WeightSequence::from_nodes(&rs, &[0, 0, 0]).unwrap();
        let paths = enumerate_paths(&seq).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(path_to_tableau(&seq, &paths[0]).unwrap(), t(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn type_checks() {
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        assert_eq!(tableau_to_path(&d4, &t(&[&[1], &[2]])).unwrap_err(), Error::TypeMismatch);
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(tableau_to_path(&a2, &t(&[&[1], &[2]])).unwrap_err(), Error::TypeMismatch);
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert!(matches!(
            tableau_to_path(&a1, &t(&[&[1], &[1]])).unwrap_err(),
            Error::InvalidTableau(_)
        ));
    }

    #[test]
    fn promotion_examples() {
        assert_eq!(promote(&t(&[&[1, 3], &[2, 4]])), t(&[&[1, 2], &[3, 4]]));
        assert_eq!(promote(&t(&[&[1, 2], &[3, 4]])), t(&[&[1, 3], &[2, 4]]));
        assert_eq!(promote(&t(&[&[1], &[2], &[3]])), t(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn promotion_shifts_content() {
        let x = t(&[&[1, 2, 4], &[1, 3, 5], &[2, 4, 5]]);
        let y = promote(&x);
        let y = RowStrictTableau::new(y.rows().to_vec()).unwrap();
        let mut c = x.content();
        c.rotate_left(1);
        assert_eq!(y.content(), c);
    }

    #[test]
    fn orbit_listing() {
        let orbit = promotion_orbit(&t(&[&[1, 3], &[2, 4]]), 10).unwrap();
        assert_eq!(orbit.len(), 2);
    }
}
