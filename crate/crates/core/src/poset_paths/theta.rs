use std::collections::BTreeSet;

use serde::Serialize;

use super::poset::{Point, RootPoset};
use crate::dual_pair::Setting;
use crate::error::{Error, Result};
use crate::plane_partitions::{diagram_d, HermitianType, PlanePartition};

/// A subset of the root poset, optionally split into `k` lattice paths
/// `N_t = K_t + L_t + M_t` listed from northeast to southwest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PathFamily {
    pub points: BTreeSet<Point>,
    pub paths: Option<Vec<Vec<Point>>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The fixed data of the path construction for one `(type, k)` with `k <= r`:
/// anchors on the k-th antidiagonal, forced paths, and the region each free
/// path `L_t` ranges over, in offsets from its anchor.
#[derive(Debug, Clone)]
pub(crate) struct Frame {
    ty: HermitianType,
    k: i32,
    /// Rows of `D_k` in offset units.
    rows: i32,
    cols: i32,
}

impl Frame {
    /// `None` when the construction does not apply (`k > r`, or O*(2n) with
    /// `n` even and `k = n/2`); the only facet is then the whole poset.
    pub(crate) fn new(ty: HermitianType, k: u32) -> Result<Option<Self>> {
        if !ty.is_dual_pair() {
            return Err(Error::Unsupported(format!(
                "path construction is implemented for the dual-pair types, not {ty}"
            )));
        }
        if k == 0 {
            return Err(Error::KOutOfRange {
                k,
                reason: "k must be positive".into(),
            });
        }
        if k > ty.real_rank() {
            return Ok(None);
        }
        let ki = k as i32;
        let (rows, cols) = match ty {
            HermitianType::UnitaryPQ { p, q } => (p as i32 - ki, q as i32 - ki),
            HermitianType::Metaplectic { n } => (n as i32 - ki, n as i32 - ki),
            HermitianType::StarOrthogonal { n } => {
                let m = n as i32 - 2 * ki - 1;
                if m < 0 {
                    return Ok(None);
                }
                (m, m)
            }
            _ => unreachable!(),
        };
        Ok(Some(Frame { ty, k: ki, rows, cols }))
    }

    fn anchor(&self, t: i32) -> Point {
        match self.ty {
            HermitianType::StarOrthogonal { .. } => (t, 2 * self.k + 2 - t),
            _ => (t, self.k + 1 - t),
        }
    }

    fn k_path(&self, t: i32) -> Vec<Point> {
        let a = self.anchor(t);
        let first = match self.ty {
            HermitianType::StarOrthogonal { .. } => t + 1,
            _ => 1,
        };
        (first..a.1).map(|c| (t, c)).collect()
    }

    /// `M_t` below `b_t`, excluding `b_t`.
    fn m_path(&self, t: i32) -> Vec<Point> {
        let a = self.anchor(t);
        let b = (a.0 + self.rows, a.1 + self.cols);
        let last = match self.ty {
            HermitianType::UnitaryPQ { p, .. } => p as i32,
            HermitianType::StarOrthogonal { .. } => b.1 - 1,
            _ => return Vec::new(),
        };
        (b.0 + 1..=last).map(|i| (i, b.1)).collect()
    }

    fn valid(&self, x: i32, y: i32) -> bool {
        match self.ty {
            HermitianType::Metaplectic { .. } => x >= 0 && y >= 0 && x + y <= self.rows,
            HermitianType::StarOrthogonal { .. } => x >= 0 && y >= 0 && x <= self.rows && y <= self.cols && y >= x - 1,
            _ => x >= 0 && y >= 0 && x <= self.rows && y <= self.cols,
        }
    }

    fn is_end(&self, x: i32, y: i32) -> bool {
        match self.ty {
            HermitianType::Metaplectic { .. } => x + y == self.rows,
            _ => x == self.rows && y == self.cols,
        }
    }

    /// First column of row `r` of `D_k`, minus one.
    fn row_start(&self, r: i32) -> i32 {
        match self.ty {
            HermitianType::StarOrthogonal { .. } => r - 1,
            _ => 0,
        }
    }

    fn row_end(&self, r: i32) -> i32 {
        match self.ty {
            HermitianType::Metaplectic { .. } => self.rows + 1 - r,
            _ => self.cols,
        }
    }

    fn to_points(&self, t: i32, offsets: &[Point]) -> Vec<Point> {
        let a = self.anchor(t);
        offsets.iter().map(|&(x, y)| (a.0 + x, a.1 + y)).collect()
    }

    /// Offsets of the free path `L_t` bounding `{entries > k - t}` from the southwest.
    fn free_path(&self, p: &PlanePartition, t: i32) -> Vec<Point> {
        let threshold = (self.k - t) as u32;
        let mut path = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for r in 1..=self.rows {
            let c_r = (self.row_start(r) + 1..=self.row_end(r))
                .filter(|&c| p.get(r, c).is_some_and(|v| v <= threshold))
                .max()
                .unwrap_or(self.row_start(r));
            while y < c_r && !self.is_end(x, y) {
                y += 1;
                path.push((x, y));
            }
            if self.is_end(x, y) {
                return path;
            }
            x += 1;
            path.push((x, y));
        }
        while !self.is_end(x, y) {
            y += 1;
            path.push((x, y));
        }
        path
    }

    /// Every offset path from the origin to an end point.
    fn all_free_paths(&self) -> Vec<Vec<Point>> {
        fn go(f: &Frame, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
            let (x, y) = *cur.last().expect("path is never empty");
            if f.is_end(x, y) {
                out.push(cur.clone());
                return;
            }
            for (nx, ny) in [(x, y + 1), (x + 1, y)] {
                if f.valid(nx, ny) {
                    cur.push((nx, ny));
                    go(f, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut vec![(0, 0)], &mut out);
        out
    }

    fn assemble(&self, free: &[Vec<Point>]) -> PathFamily {
        let mut points = BTreeSet::new();
        let mut paths = Vec::new();
        for (idx, offsets) in free.iter().enumerate() {
            let t = idx as i32 + 1;
            let mut path = self.k_path(t);
            path.extend(self.to_points(t, offsets));
            path.extend(self.m_path(t));
            points.extend(path.iter().copied());
            paths.push(path);
        }
        PathFamily {
            points,
            paths: Some(paths),
        }
    }
}

fn dk_for(setting_ty: HermitianType, k: u32) -> crate::plane_partitions::Diagram {
    diagram_d(&setting_ty, k)
}

/// `Theta(P)`: the facet cut out by the southwest boundaries of the level sets of `P`.
pub fn theta(ty: HermitianType, k: u32, p: &PlanePartition) -> Result<PathFamily> {
    let dk = dk_for(ty, k);
    if p.diagram() != &dk {
        return Err(Error::InvalidPlanePartition(format!(
            "expected a filling of D_{k} for {ty}"
        )));
    }
    if p.entries().iter().any(|&v| v > k) {
        return Err(Error::InvalidPlanePartition(format!("entries must be at most {k}")));
    }
    let Some(frame) = Frame::new(ty, k)? else {
        let poset = RootPoset::new(ty)?;
        return Ok(PathFamily {
            points: poset.points().clone(),
            paths: None,
        });
    };
    let free: Vec<Vec<Point>> = (1..=frame.k).map(|t| frame.free_path(p, t)).collect();
    Ok(frame.assemble(&free))
}

/// Inverse of [`theta`]: each box counts the free paths passing to its southwest.
pub fn theta_inverse(ty: HermitianType, k: u32, f: &PathFamily) -> Result<PlanePartition> {
    let dk = dk_for(ty, k);
    let Some(frame) = Frame::new(ty, k)? else {
        let poset = RootPoset::new(ty)?;
        if &f.points != poset.points() {
            return Err(Error::NotAFacet("for k >= r the only facet is the whole poset".into()));
        }
        return Ok(PlanePartition::zero(dk));
    };
    let mut remaining = f.points.clone();
    for t in 1..=frame.k {
        remaining.retain(|q| !frame.k_path(t).contains(q) && !frame.m_path(t).contains(q));
    }
    // cut[t][r - 1]: last column of row r left of L_t
    let mut cut = Vec::new();
    for t in 1..=frame.k {
        let a = frame.anchor(t);
        let at = |x: i32, y: i32| (a.0 + x, a.1 + y);
        if !remaining.remove(&a) {
            return Err(Error::NotAFacet(format!("missing anchor {a:?}")));
        }
        let (mut x, mut y) = (0, 0);
        let mut c: Vec<i32> = (1..=frame.rows).map(|r| frame.row_end(r)).collect();
        while !frame.is_end(x, y) {
            if frame.valid(x, y + 1) && remaining.remove(&at(x, y + 1)) {
                y += 1;
            } else if frame.valid(x + 1, y) && remaining.remove(&at(x + 1, y)) {
                c[x as usize] = y;
                x += 1;
            } else {
                return Err(Error::NotAFacet(format!("path {t} stops at {:?}", at(x, y))));
            }
        }
        cut.push(c);
    }
    let entries: Vec<u32> = dk
        .boxes()
        .map(|(r, col)| cut.iter().filter(|c| col > c[r as usize - 1]).count() as u32)
        .collect();
    let p = PlanePartition::new(dk, entries, k)?;
    if theta(ty, k, &p)?.points != f.points {
        return Err(Error::NotAFacet(
            "point set is not a union of the forced nonintersecting paths".into(),
        ));
    }
    Ok(p)
}

/// Facets of the k-th order complex, built as k-tuples of nonintersecting paths
/// through the forced prefixes and suffixes.
pub fn enumerate_facets(ty: HermitianType, k: u32) -> Result<Vec<PathFamily>> {
    let Some(frame) = Frame::new(ty, k)? else {
        let poset = RootPoset::new(ty)?;
        return Ok(vec![PathFamily {
            points: poset.points().clone(),
            paths: None,
        }]);
    };
    let free = frame.all_free_paths();
    let mut out = Vec::new();
    fn go(
        frame: &Frame,
        free: &[Vec<Point>],
        chosen: &mut Vec<Vec<Point>>,
        used: &mut BTreeSet<Point>,
        out: &mut Vec<PathFamily>,
    ) {
        let t = chosen.len() as i32 + 1;
        if t > frame.k {
            out.push(frame.assemble(chosen));
            return;
        }
        for offsets in free {
            let pts = frame.to_points(t, offsets);
            if pts.iter().any(|q| used.contains(q)) {
                continue;
            }
            used.extend(pts.iter().copied());
            chosen.push(offsets.clone());
            go(frame, free, chosen, used, out);
            chosen.pop();
            for q in &pts {
                used.remove(q);
            }
        }
    }
    go(&frame, &free, &mut Vec::new(), &mut BTreeSet::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Points where some path `N_t` turns from south to east.
///
/// For Mp(2n,R) a path stopping on the main antidiagonal is read as
/// continuing east, so a final south step also ends in a corner.
/// A family without a path decomposition is the whole poset for `k >= r`,
/// which carries only the empty plane partition, and has no corners.
pub fn corners(ty: HermitianType, f: &PathFamily) -> BTreeSet<Point> {
    let open_end = matches!(ty, HermitianType::Metaplectic { .. });
    let mut out = BTreeSet::new();
    for path in f.paths.iter().flatten() {
        let set: BTreeSet<Point> = path.iter().copied().collect();
        out.extend(
            path.iter()
                .copied()
                .filter(|&(i, j)| set.contains(&(i - 1, j)) && set.contains(&(i, j + 1))),
        );
        if let [.., prev, last] = path.as_slice() {
            if open_end && prev.1 == last.1 {
                out.insert(*last);
            }
        }
    }
    out
}

/// Convenience wrapper taking a dual-pair setting.
pub fn enumerate_facets_for(setting: &Setting) -> Result<Vec<PathFamily>> {
    enumerate_facets(setting.family.into(), setting.k)
}
