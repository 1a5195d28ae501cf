use std::fmt;

use serde::Serialize;

use super::diagram::Diagram;
use crate::error::{Error, Result};

/// A filling of a diagram by integers in `[0, bound]` that weakly increases
/// left to right and bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlanePartition {
    #[serde(skip)]
    diagram: Diagram,
    /// Entries in the diagram's reading order.
    entries: Vec<u32>,
}

impl PlanePartition {
    pub fn new(diagram: Diagram, entries: Vec<u32>, bound: u32) -> Result<Self> {
        if entries.len() != diagram.len() {
            return Err(Error::InvalidPlanePartition(format!(
                "{} entries for {} boxes",
                entries.len(),
                diagram.len()
            )));
        }
        let p = PlanePartition { diagram, entries };
        if p.entries.iter().any(|&x| x > bound) {
            return Err(Error::InvalidPlanePartition(format!("entry exceeds bound {bound}")));
        }
        for (r, c) in p.diagram.boxes() {
            let v = p.get(r, c).unwrap_or(0);
            if p.get(r, c - 1).is_some_and(|l| l > v) || p.get(r + 1, c).is_some_and(|b| b > v) {
                return Err(Error::InvalidPlanePartition(format!("not monotone at ({r},{c})")));
            }
        }
        Ok(p)
    }

    /// Parses rows of digits such as `["1233", "022"]`, left-justified at
    /// column 1 unless the row starts with `.` padding.
    pub fn from_rows(rows: &[&str], bound: u32) -> Result<Self> {
        let mut boxes = Vec::new();
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, ch) in row.chars().enumerate() {
                if ch == '.' || ch == ' ' {
                    continue;
                }
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::InvalidPlanePartition(format!("bad character {ch:?}")))?;
                boxes.push((i as i32 + 1, j as i32 + 1));
                entries.push(d);
            }
        }
        let diagram = Diagram::new(boxes.clone());
        // Diagram::new normalizes, so recover entries in reading order
        let mut pairs: Vec<((i32, i32), u32)> = boxes.into_iter().zip(entries).collect();
        pairs.sort();
        PlanePartition::new(diagram, pairs.into_iter().map(|p| p.1).collect(), bound)
    }

    pub fn zero(diagram: Diagram) -> Self {
        let entries = vec![0; diagram.len()];
        PlanePartition { diagram, entries }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, row: i32, col: i32) -> Option<u32> {
        self.diagram
            .boxes()
            .position(|b| b == (row, col))
            .map(|i| self.entries[i])
    }

    /// Entry with boxes outside the diagram read as 0.
    pub fn get_or_zero(&self, row: i32, col: i32) -> u32 {
        self.get(row, col).unwrap_or(0)
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.diagram.is_empty() {
            return f.write_str("(empty)");
        }
        for r in 1..=self.diagram.rows() {
            let line: String = (1..=self.diagram.cols())
                .map(|c| match self.get(r, c) {
                    Some(v) if v < 10 => char::from_digit(v, 10).unwrap_or('?'),
                    Some(_) => '*',
                    None => '.',
                })
                .collect();
            writeln!(f, "{}", line.trim_end_matches('.'))?;
        }
        Ok(())
    }
}

/// All plane partitions in `diagram` bounded by `bound`, filled bottom row
/// first and left to right.
pub fn enumerate_plane_partitions(diagram: &Diagram, bound: u32) -> Vec<PlanePartition> {
    let boxes: Vec<(i32, i32)> = diagram.boxes().collect();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by_key(|&i| (-boxes[i].0, boxes[i].1));
    let index = |r: i32, c: i32| boxes.iter().position(|&b| b == (r, c));
    // for each step, the reading-order indices of the left and lower neighbours
    let deps: Vec<(usize, Option<usize>, Option<usize>)> = order
        .iter()
        .map(|&i| {
            let (r, c) = boxes[i];
            (i, index(r, c - 1), index(r + 1, c))
        })
        .collect();
    let mut out = Vec::new();
    let mut entries = vec![0u32; boxes.len()];
    fn go(
        step: usize,
        deps: &[(usize, Option<usize>, Option<usize>)],
        bound: u32,
        entries: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if step == deps.len() {
            out.push(entries.clone());
            return;
        }
        let (i, left, below) = deps[step];
        let lo = left.map_or(0, |l| entries[l]).max(below.map_or(0, |b| entries[b]));
        for v in lo..=bound {
            entries[i] = v;
            go(step + 1, deps, bound, entries, out);
        }
    }
    let mut raw = Vec::new();
    go(0, &deps, bound, &mut entries, &mut raw);
    out.extend(raw.into_iter().map(|e| PlanePartition {
        diagram: diagram.clone(),
        entries: e,
    }));
    out
}

/// `c(P)`: the sum over boxes of `P - max(P below, P left)`, outside entries 0.
pub fn c_statistic(p: &PlanePartition) -> u32 {
    p.diagram
        .boxes()
        .map(|(r, c)| p.get_or_zero(r, c) - p.get_or_zero(r + 1, c).max(p.get_or_zero(r, c - 1)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box() {
        let d = Diagram::rectangle(1, 1);
        let all = enumerate_plane_partitions(&d, 1);
        assert_eq!(all.len(), 2);
        assert_eq!(all.iter().map(c_statistic).collect::<Vec<_>>(), [0, 1]);
    }

    #[test]
    fn empty_diagram_has_one_filling() {
        assert_eq!(enumerate_plane_partitions(&Diagram::empty(), 3).len(), 1);
    }

    #[test]
    fn rectangle_count() {
        assert_eq!(enumerate_plane_partitions(&Diagram::rectangle(2, 3), 2).len(), 50);
    }

    #[test]
    fn every_filling_is_valid_and_distinct() {
        let d = Diagram::staircase(3);
        let all = enumerate_plane_partitions(&d, 2);
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for p in &all {
            assert!(PlanePartition::new(d.clone(), p.entries().to_vec(), 2).is_ok());
        }
    }

    #[test]
    fn parse_rows() {
        let p = PlanePartition::from_rows(&["1233", "022", "01", "0"], 3).unwrap();
        assert_eq!(p.diagram(), &Diagram::staircase(4));
        assert_eq!(p.get(1, 2), Some(2));
        let s = PlanePartition::from_rows(&["1233", ".122", "..02", "...1"], 3).unwrap();
        assert_eq!(s.diagram(), &Diagram::shifted_staircase(4));
        assert!(PlanePartition::from_rows(&["10"], 3).is_err());
        assert!(PlanePartition::from_rows(&["1", "2"], 3).is_err());
    }

    #[test]
    fn zero_filling_has_zero_statistic() {
        assert_eq!(c_statistic(&PlanePartition::zero(Diagram::rectangle(3, 4))), 0);
    }
}
