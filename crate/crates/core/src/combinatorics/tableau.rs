use std::fmt;

use serde::Serialize;

use super::partition::Partition;

/// A filling of a Young diagram, stored row-major.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<u32>,
}

impl Tableau {
    /// Panics if the entry count does not match the shape.
    pub fn new(shape: Partition, entries: Vec<u32>) -> Self {
        assert_eq!(shape.size() as usize, entries.len(), "entry count must match shape");
        Tableau { shape, entries }
    }

    pub fn from_rows(rows: &[&[u32]]) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).ok()?;
        Some(Tableau::new(
            shape,
            rows.iter().flat_map(|r| r.iter().copied()).collect(),
        ))
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn offset(&self, row: usize) -> usize {
        self.shape.parts()[..row - 1].iter().map(|&p| p as usize).sum()
    }

    /// `T_{row,col}`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        if row == 0 || col == 0 || row > self.shape.len() || col > self.shape.part(row) as usize {
            return None;
        }
        Some(self.entries[self.offset(row) + col - 1])
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let start = self.offset(row);
        &self.entries[start..start + self.shape.part(row) as usize]
    }

    pub fn rows(&self) -> Vec<&[u32]> {
        (1..=self.shape.len()).map(|r| self.row(r)).collect()
    }

    /// Entries of column `col`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<u32> {
        (1..=self.shape.len()).map_while(|r| self.get(r, col)).collect()
    }

    /// `T_1` as a set (first column entries are distinct).
    pub fn first_column(&self) -> Vec<u32> {
        self.column(1)
    }

    /// `T_1 ⊎ T_2` as a sorted multiset.
    pub fn first_two_columns(&self) -> Vec<u32> {
        let mut v = self.column(1);
        v.extend(self.column(2));
        v.sort_unstable();
        v
    }

    /// Adds `shift` to every entry.
    pub fn shifted(&self, shift: i64) -> Vec<Vec<i64>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|&x| x as i64 + shift).collect())
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[]");
        }
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// Rows weakly increase, columns strictly increase, entries in `[1, max_entry]`.
pub fn is_semistandard(t: &Tableau, max_entry: u32) -> bool {
    let shape = t.shape();
    for r in 1..=shape.len() {
        for c in 1..=shape.part(r) as usize {
            let x = t.get(r, c).unwrap();
            if x == 0 || x > max_entry {
                return false;
            }
            if c > 1 && t.get(r, c - 1).unwrap() > x {
                return false;
            }
            if r > 1 && t.get(r - 1, c).unwrap() >= x {
                return false;
            }
        }
    }
    true
}

/// All semistandard tableaux of `shape` with entries in `[1, max_entry]`,
/// lexicographic in the row-major entry vector.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.len() as u32 > max_entry {
        return out;
    }
    let cells: Vec<(usize, usize)> = (1..=shape.len())
        .flat_map(|r| (1..=shape.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let width = shape.part(1) as usize;
    let mut grid = vec![vec![0u32; width + 1]; shape.len() + 1];
    let mut buf = Vec::with_capacity(cells.len());
    fill(shape, max_entry, &cells, 0, &mut grid, &mut buf, &mut out);
    out
}

fn fill(
    shape: &Partition,
    max_entry: u32,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<u32>>,
    buf: &mut Vec<u32>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau::new(shape.clone(), buf.clone()));
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > 1 { grid[r][c - 1] } else { 1 };
    let above = if r > 1 { grid[r - 1][c] + 1 } else { 1 };
    // room for the strictly increasing cells below in this column
    let below = shape.conjugate_part(c as u32) as usize - r;
    let hi = max_entry.saturating_sub(below as u32);
    for v in left.max(above)..=hi {
        grid[r][c] = v;
        buf.push(v);
        fill(shape, max_entry, cells, idx + 1, grid, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_shape_gives_one_tableau() {
        let ts = enumerate_ssyt(&Partition::empty(), 5);
        assert_eq!(ts, vec![Tableau::empty()]);
        assert_eq!(enumerate_ssyt(&Partition::empty(), 0).len(), 1);
    }

    #[test]
    fn too_long_column_gives_none() {
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn two_one_over_three() {
        let ts = enumerate_ssyt(&p(&[2, 1]), 3);
        assert_eq!(ts.len(), 8);
        assert!(ts.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert!(ts.iter().all(|t| is_semistandard(t, 3)));
    }

    #[test]
    fn matches_naive_filter() {
        let shape = p(&[3, 2]);
        let n = 3u32;
        let mut naive = 0;
        let boxes = shape.size();
        for code in 0..n.pow(boxes) {
            let mut e = Vec::new();
            let mut c = code;
            for _ in 0..boxes {
                e.push(c % n + 1);
                c /= n;
            }
            if is_semistandard(&Tableau::new(shape.clone(), e), n) {
                naive += 1;
            }
        }
        assert_eq!(enumerate_ssyt(&shape, n).len(), naive);
    }

    #[test]
    fn column_views() {
        let t = Tableau::from_rows(&[&[1, 2, 5], &[3, 4], &[6]]).unwrap();
        assert_eq!(t.first_column(), vec![1, 3, 6]);
        assert_eq!(t.first_two_columns(), vec![1, 2, 3, 4, 6]);
        assert_eq!(t.get(2, 2), Some(4));
        assert_eq!(t.get(3, 2), None);
    }
}
