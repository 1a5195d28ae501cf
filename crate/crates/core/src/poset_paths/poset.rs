use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::dual_pair::Family;
use crate::error::{Error, Result};
use crate::plane_partitions::{Diagram, HermitianType};

/// A point in depiction coordinates `(row, col)`: the minimal element sits in
/// the northwest and covers are east and south steps.
pub type Point = (i32, i32);

/// The poset of noncompact positive roots, drawn in the plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootPoset {
    #[serde(skip)]
    pub ty: HermitianType,
    points: BTreeSet<Point>,
    /// `above[x]`: every point `y` with `x < y`.
    #[serde(skip)]
    above: BTreeMap<Point, BTreeSet<Point>>,
}

impl RootPoset {
    fn from_points(ty: HermitianType, points: BTreeSet<Point>) -> Self {
        // reachability by east and south steps, filled from the southeast corner
        let mut above: BTreeMap<Point, BTreeSet<Point>> = BTreeMap::new();
        for &p in points.iter().rev() {
            let mut up = BTreeSet::new();
            for q in [(p.0, p.1 + 1), (p.0 + 1, p.1)] {
                if points.contains(&q) {
                    up.insert(q);
                    up.extend(above[&q].iter().copied());
                }
            }
            above.insert(p, up);
        }
        RootPoset { ty, points, above }
    }

    /// The poset for any Hermitian type, read off its `D_0`. For the dual-pair
    /// families the coordinates are the native ones, see [`RootPoset::to_native`].
    pub fn new(ty: HermitianType) -> Result<Self> {
        ty.validate()?;
        let pts: BTreeSet<Point> = match ty {
            HermitianType::UnitaryPQ { .. } | HermitianType::Metaplectic { .. } => ty.d0().boxes().collect(),
            // native (i, j) with i < j: shift the shifted staircase one column right
            HermitianType::StarOrthogonal { .. } => ty.d0().boxes().map(|(r, c)| (r, c + 1)).collect(),
            _ => ty.d0().boxes().collect(),
        };
        Ok(Self::from_points(ty, pts))
    }

    pub fn from_family(family: Family) -> Result<Self> {
        Self::new(family.into())
    }

    /// A poset on the boxes of an arbitrary diagram.
    pub fn from_diagram(ty: HermitianType, d: &Diagram) -> Self {
        Self::from_points(ty, d.boxes().collect())
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    /// `a < b` strictly.
    pub fn lt(&self, a: Point, b: Point) -> bool {
        self.above.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn comparable(&self, a: Point, b: Point) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    /// Native root coordinates: `(i, j)` for U(p,q) and O*(2n); for Mp(2n,R)
    /// the columns are reflected, `(i, n + 1 - col)`.
    pub fn to_native(&self, p: Point) -> Point {
        match self.ty {
            HermitianType::Metaplectic { n } => (p.0, n as i32 + 1 - p.1),
            _ => p,
        }
    }

    pub fn from_native(&self, p: Point) -> Point {
        // the reflection is an involution
        self.to_native(p)
    }

    /// Size of the largest antichain in `subset`, as `|S|` minus a maximum
    /// matching in the strict comparability graph.
    pub fn width(&self, subset: &BTreeSet<Point>) -> usize {
        let pts: Vec<Point> = subset.iter().copied().collect();
        let adj: Vec<Vec<usize>> = pts
            .iter()
            .map(|&a| (0..pts.len()).filter(|&j| self.lt(a, pts[j])).collect())
            .collect();
        let mut mate: Vec<Option<usize>> = vec![None; pts.len()];
        fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    if mate[v].is_none_or(|w| augment(w, adj, seen, mate)) {
                        mate[v] = Some(u);
                        return true;
                    }
                }
            }
            false
        }
        let mut matching = 0;
        for u in 0..pts.len() {
            let mut seen = vec![false; pts.len()];
            if augment(u, &adj, &mut seen, &mut mate) {
                matching += 1;
            }
        }
        pts.len() - matching
    }

    pub fn full_width(&self) -> usize {
        self.width(&self.points)
    }

    /// Every inclusion-maximal subset of width at most `k`, by exhaustive search.
    pub fn brute_force_facets(&self, k: usize, max_points: usize) -> Result<Vec<BTreeSet<Point>>> {
        let pts: Vec<Point> = self.points.iter().copied().collect();
        let n = pts.len();
        if n > max_points || n > 24 {
            return Err(Error::TooLarge(format!(
                "{n} points exceed the brute-force cap {max_points}"
            )));
        }
        // antichains of size k + 1, as bitmasks
        let mut bad: Vec<u32> = Vec::new();
        fn grow(
            start: usize,
            mask: u32,
            size: usize,
            target: usize,
            pts: &[Point],
            poset: &RootPoset,
            bad: &mut Vec<u32>,
        ) {
            if size == target {
                bad.push(mask);
                return;
            }
            for i in start..pts.len() {
                if (0..pts.len()).all(|j| mask & (1 << j) == 0 || !poset.comparable(pts[i], pts[j])) {
                    grow(i + 1, mask | (1 << i), size + 1, target, pts, poset, bad);
                }
            }
        }
        grow(0, 0, 0, k + 1, &pts, self, &mut bad);
        let ok = |m: u32| bad.iter().all(|&b| m & b != b);
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut out = Vec::new();
        for m in 0..=full {
            if ok(m) && (0..n).all(|i| m & (1 << i) != 0 || !ok(m | (1 << i))) {
                out.push((0..n).filter(|&i| m & (1 << i) != 0).map(|i| pts[i]).collect());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(ty: HermitianType) -> RootPoset {
        RootPoset::new(ty).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(poset(HermitianType::UnitaryPQ { p: 2, q: 3 }).len(), 6);
        assert_eq!(poset(HermitianType::Metaplectic { n: 3 }).len(), 6);
        let o = poset(HermitianType::StarOrthogonal { n: 4 });
        assert_eq!(o.len(), 6);
        assert!(o.points().iter().all(|&(i, j)| 1 <= i && i < j && j <= 4));
    }

    #[test]
    fn order_is_product_order_on_dual_pairs() {
        for ty in [
            HermitianType::UnitaryPQ { p: 3, q: 4 },
            HermitianType::Metaplectic { n: 4 },
            HermitianType::StarOrthogonal { n: 5 },
        ] {
            let p = poset(ty);
            for &a in p.points() {
                for &b in p.points() {
                    assert_eq!(p.lt(a, b), a != b && a.0 <= b.0 && a.1 <= b.1);
                }
            }
        }
    }

    #[test]
    fn metaplectic_native_order_is_reflected() {
        let p = poset(HermitianType::Metaplectic { n: 3 });
        // native (1,3) is the minimum
        assert_eq!(p.from_native((1, 3)), (1, 1));
        assert!(p.lt(p.from_native((1, 3)), p.from_native((2, 2))));
        assert!(!p.comparable(p.from_native((1, 1)), p.from_native((2, 3))));
    }

    #[test]
    fn widths() {
        assert_eq!(poset(HermitianType::UnitaryPQ { p: 2, q: 3 }).full_width(), 2);
        assert_eq!(poset(HermitianType::StarOrthogonal { n: 7 }).full_width(), 3);
        let p = poset(HermitianType::UnitaryPQ { p: 3, q: 3 });
        let chain: BTreeSet<Point> = [(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)].into();
        assert_eq!(p.width(&chain), 1);
        assert_eq!(p.width(&BTreeSet::new()), 0);
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(
            poset(HermitianType::Metaplectic { n: 3 })
                .brute_force_facets(1, 16)
                .unwrap()
                .len(),
            4
        );
        let full = poset(HermitianType::UnitaryPQ { p: 2, q: 2 })
            .brute_force_facets(2, 16)
            .unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].len(), 4);
        assert!(poset(HermitianType::E6).brute_force_facets(1, 12).is_err());
    }
}
