use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts.iter().map(|&p| p as i64).collect()))
        }
    }

    /// Drops trailing zeros before validating, so `[2,1,0,0]` is accepted.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Self::new(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `sigma_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Column length `sigma'_j` with 1-based `j`.
    pub fn conjugate_part(&self, j: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= j).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.conjugate_part(j)).collect())
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        while v.len() < n {
            v.push(0);
        }
        v
    }

    /// Removes the first column.
    pub fn without_first_column(&self) -> Partition {
        Partition(self.0.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect())
    }

    /// All partitions of `m`, largest first.
    pub fn all_of_size(m: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with size at most `m`, by increasing size.
    pub fn all_up_to(m: u32) -> Vec<Partition> {
        (0..=m).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `3,2,1`; an empty string or `0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| Error::InvalidPartition(vec![]))?;
            if v < 0 {
                return Err(Error::InvalidPartition(vec![v]));
            }
            parts.push(v as u32);
        }
        Partition::from_padded(&parts)
    }
}

/// A weakly decreasing integer tuple split into its positive part and its
/// negated, reversed negative part.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedPartitionPair {
    pub plus: Partition,
    pub minus: Partition,
}

impl SignedPartitionPair {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        SignedPartitionPair { plus, minus }
    }

    /// The `k`-tuple `(plus, 0, ..., 0, -reverse(minus))`.
    pub fn to_tuple(&self, k: usize) -> Result<Vec<i64>> {
        let (a, b) = (self.plus.len(), self.minus.len());
        if a + b > k {
            return Err(Error::Inadmissible(format!(
                "{} parts do not fit in a {k}-tuple",
                a + b
            )));
        }
        let mut v = self.plus.padded(a);
        v.extend(std::iter::repeat_n(0, k - a - b));
        v.extend(self.minus.parts().iter().rev().map(|&m| -(m as i64)));
        Ok(v)
    }

    pub fn from_tuple(t: &[i64]) -> Result<Self> {
        if t.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(t.to_vec()));
        }
        let plus: Vec<u32> = t.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        let minus: Vec<u32> = t.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as u32).collect();
        Ok(SignedPartitionPair::new(Partition::new(plus)?, Partition::new(minus)?))
    }

    pub fn size(&self) -> u32 {
        self.plus.size() + self.minus.size()
    }
}

impl fmt::Display for SignedPartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_padded(&[2, 1, 0]).is_ok());
    }

    #[test]
    fn conjugate_counts() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate_part(2), 2);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|m| Partition::all_of_size(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "3,2,1".parse().unwrap();
        assert_eq!(p.to_string(), "(3,2,1)");
        assert!("0".parse::<Partition>().unwrap().is_empty());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn signed_pair_round_trip() {
        let s = SignedPartitionPair::new(Partition::new(vec![2, 1]).unwrap(), Partition::new(vec![3]).unwrap());
        let t = s.to_tuple(5).unwrap();
        assert_eq!(t, vec![2, 1, 0, 0, -3]);
        assert_eq!(SignedPartitionPair::from_tuple(&t).unwrap(), s);
        assert!(s.to_tuple(2).is_err());
    }
}
