//! Strict and ordinary partitions.

use std::fmt;
use std::str::FromStr;

/// A strict partition: strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    /// The empty partition.
    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// Validates strict decrease and positivity.
    pub fn new(parts: Vec<u32>) -> Result<Self, String> {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(format!("parts must strictly decrease, got {parts:?}"));
            }
        }
        if parts.last().is_some_and(|&p| p == 0) {
            return Err("parts must be positive".to_string());
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weight |lambda|.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Diagram containment: self_i <= other_i for every part.
    pub fn contained_in(&self, other: &StrictPartition) -> bool {
        self.0.len() <= other.0.len()
            && self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// The shifted evaluation point shape: parts raised by one, with an
    /// extra 1 appended when the length is odd, so the result always has
    /// even length.
    pub fn sh(&self) -> StrictPartition {
        let mut parts: Vec<u32> = self.0.iter().map(|&p| p + 1).collect();
        if parts.len() % 2 == 1 {
            parts.push(1);
        }
        StrictPartition(parts)
    }

    /// All strict partitions of weight exactly n, in descending lex order.
    pub fn of_weight(n: u32) -> Vec<StrictPartition> {
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if remaining == 0 {
                out.push(StrictPartition(prefix.clone()));
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                prefix.push(p);
                rec(remaining - p, p.saturating_sub(1), prefix, out);
                prefix.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All strict partitions of weight <= n, smallest weights first.
    pub fn up_to_weight(n: u32) -> Vec<StrictPartition> {
        (0..=n).flat_map(Self::of_weight).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = String;

    /// Parses "3,1" (or "" / "0" for the empty partition).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        StrictPartition::new(parts)
    }
}

/// An ordinary partition: weakly decreasing nonnegative parts (trailing
/// zeros are dropped).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Result<Self, String> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(format!("parts must weakly decrease, got {parts:?}"));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
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

    /// The part at `i` (0 beyond the length).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Componentwise containment of `self` inside `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// All partitions of weight exactly n with at most `max_len` parts,
    /// in descending lex order (a linear extension of dominance).
    pub fn of_weight(n: u32, max_len: usize) -> Vec<Partition> {
        fn rec(
            remaining: u32,
            max_part: u32,
            slots: usize,
            prefix: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            if slots == 0 || max_part == 0 {
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                prefix.push(p);
                rec(remaining - p, p, slots - 1, prefix, out);
                prefix.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_partition_validation() {
        assert!(StrictPartition::new(vec![3, 1]).is_ok());
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert!(StrictPartition::new(vec![3, 0]).is_err());
        assert_eq!("3,1".parse::<StrictPartition>().unwrap().parts(), &[3, 1]);
        assert!("".parse::<StrictPartition>().unwrap().is_empty());
    }

    #[test]
    fn sh_always_has_even_length() {
        let mu = StrictPartition::new(vec![3, 1]).unwrap();
        assert_eq!(mu.sh().parts(), &[4, 2]);
        let mu = StrictPartition::new(vec![2]).unwrap();
        assert_eq!(mu.sh().parts(), &[3, 1]);
    }

    #[test]
    fn strict_partitions_of_weight_four() {
        let got = StrictPartition::of_weight(4);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].parts(), &[4]);
        assert_eq!(got[1].parts(), &[3, 1]);
    }

    #[test]
    fn partitions_are_lex_descending() {
        let got = Partition::of_weight(4, 4);
        let shapes: Vec<&[u32]> = got.iter().map(Partition::parts).collect();
        assert_eq!(
            shapes,
            vec![
                &[4][..],
                &[3, 1][..],
                &[2, 2][..],
                &[2, 1, 1][..],
                &[1, 1, 1, 1][..]
            ]
        );
        assert_eq!(Partition::of_weight(4, 2).len(), 3);
    }

    #[test]
    fn conjugate_round_trips() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn containment() {
        let a = StrictPartition::new(vec![2, 1]).unwrap();
        let b = StrictPartition::new(vec![3, 1]).unwrap();
        assert!(a.contained_in(&b));
        assert!(!b.contained_in(&a));
    }
}
