//! Kneser vertex labels: sorted k-subsets of the ground set [n] = {1..n}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bitmask over a ground set of at most 256 elements; bit `e - 1` is element `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundMask(pub [u64; 4]);

impl GroundMask {
    #[inline]
    pub fn insert(&mut self, element: u16) {
        let b = element as usize - 1;
        self.0[b / 64] |= 1 << (b % 64);
    }

    #[inline]
    pub fn is_disjoint(&self, other: &GroundMask) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersection_len(&self, other: &GroundMask) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }
}

/// A vertex of K(k, n): a sorted set of k distinct elements of [n].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KneserLabel {
    elements: Vec<u16>,
}

impl KneserLabel {
    pub const MAX_GROUND: usize = 256;

    /// Validates and sorts; rejects repeats and elements outside [n].
    pub fn new(mut elements: Vec<u16>, n: usize) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated element in {elements:?}")));
        }
        if let Some(&e) = elements.iter().find(|&&e| e == 0 || e as usize > n) {
            return Err(Error::invalid(format!("element {e} outside [1, {n}]")));
        }
        if n > Self::MAX_GROUND {
            return Err(Error::invalid(format!("ground set [{n}] too large")));
        }
        Ok(KneserLabel { elements })
    }

    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn mask(&self) -> GroundMask {
        let mut m = GroundMask::default();
        for &e in &self.elements {
            m.insert(e);
        }
        m
    }

    /// Position of this subset in the lexicographic order of k-subsets of [n].
    pub fn rank(&self, n: usize) -> usize {
        let k = self.k();
        let mut rank = 0usize;
        let mut prev = 0usize;
        for (i, &c) in self.elements.iter().enumerate() {
            for j in prev + 1..c as usize {
                rank += binomial(n - j, k - i - 1) as usize;
            }
            prev = c as usize;
        }
        rank
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(mut index: usize, k: usize, n: usize) -> Result<Self> {
        if index as u128 >= binomial(n, k) {
            return Err(Error::invalid(format!(
                "index {index} out of range for {k}-subsets of [{n}]"
            )));
        }
        let mut elements = Vec::with_capacity(k);
        let mut next = 1usize;
        for i in 0..k {
            loop {
                let block = binomial(n - next, k - i - 1) as usize;
                if index < block {
                    break;
                }
                index -= block;
                next += 1;
            }
            elements.push(next as u16);
            next += 1;
        }
        Ok(KneserLabel { elements })
    }

    /// Compact display: digits run together when n <= 9 ("16"), dotted otherwise ("1.10").
    pub fn display(&self, n: usize) -> String {
        let sep = if n <= 9 { "" } else { "." };
        self.elements
            .iter()
            .map(u16::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses the [`display`](Self::display) form, also accepting `,` `-` `.` separators.
    pub fn parse(token: &str, k: usize, n: usize) -> Result<Self> {
        let token = token.trim();
        let elements: Vec<u16> = if token.contains(['.', '-', ',', ' ']) {
            token
                .split(['.', '-', ',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u16>()
                        .map_err(|_| Error::invalid(format!("bad label `{token}`")))
                })
                .collect::<Result<_>>()?
        } else if n <= 9 {
            token
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u16)
                        .ok_or_else(|| Error::invalid(format!("bad label `{token}`")))
                })
                .collect::<Result<_>>()?
        } else {
            return Err(Error::invalid(format!(
                "label `{token}` needs separators when n > 9"
            )));
        };
        if elements.len() != k {
            return Err(Error::invalid(format!(
                "label `{token}` does not have {k} elements"
            )));
        }
        Self::new(elements, n)
    }
}

impl fmt::Display for KneserLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.elements.iter().map(u16::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All k-subsets of [n] in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<KneserLabel> {
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    for_each_k_subset(n, k, |c| {
        out.push(KneserLabel {
            elements: c.iter().map(|&x| x as u16 + 1).collect(),
        });
        true
    });
    out
}

/// Visits every k-subset of `0..n` (as a sorted index slice) in lexicographic
/// order until the callback returns false. Returns false if stopped early.
pub fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return true;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !f(&c) {
            return false;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if c[i] < n - k + i {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        let s = k_subsets(6, 2);
        assert_eq!(s.len(), 15);
        assert_eq!(s[0].elements(), &[1, 2]);
        assert_eq!(s[14].elements(), &[5, 6]);
        assert_eq!(k_subsets(5, 0).len(), 1);
        assert_eq!(k_subsets(3, 4).len(), 0);
        assert_eq!(k_subsets(9, 3).len(), 84);
    }

    #[test]
    fn rank_inverts_enumeration() {
        for (n, k) in [(6, 2), (9, 3), (7, 1), (8, 4), (12, 5)] {
            for (i, l) in k_subsets(n, k).iter().enumerate() {
                assert_eq!(l.rank(n), i);
                assert_eq!(&KneserLabel::unrank(i, k, n).unwrap(), l);
            }
            assert!(KneserLabel::unrank(binomial(n, k) as usize, k, n).is_err());
        }
    }

    #[test]
    fn parse_and_display() {
        let l = KneserLabel::parse("16", 2, 6).unwrap();
        assert_eq!(l.elements(), &[1, 6]);
        assert_eq!(l.display(6), "16");
        let l = KneserLabel::parse("1.10", 2, 10).unwrap();
        assert_eq!(l.display(10), "1.10");
        assert!(KneserLabel::parse("110", 2, 10).is_err());
        assert!(KneserLabel::parse("17", 2, 6).is_err());
        assert!(KneserLabel::parse("11", 2, 6).is_err());
        assert!(KneserLabel::parse("123", 2, 6).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(105, 3), 187_460);
        assert_eq!(binomial(3, 5), 0);
    }
}
