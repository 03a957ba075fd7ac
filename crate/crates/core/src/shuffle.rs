//! Shuffles: the Weyl elements surviving the constant term.
//!
//! A shuffle of type (m, n) is a permutation w of {1, …, m+n} with
//! w(1) < ⋯ < w(m) and w(m+1) < ⋯ < w(m+n). These are exactly the Weyl
//! group elements that send every simple root of the Levi GL_m × GL_n to a
//! positive root, i.e. the ones contributing to the constant term along
//! the Borel.

use crate::error::EisenError;
use crate::rat::binomial;
use itertools::Itertools;
use num::BigInt;

/// Default cap on m+n for exhaustive enumeration (≈ 700k shuffles at the
/// midpoint), keeping exhaustive suites interactive.
pub const DEFAULT_ENUMERATION_CAP: usize = 22;

/// A two-block shuffle. Images are stored 0-indexed internally
/// (`values[k] = w(k+1)`); all I/O and formulas use the 1-based reading.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    values: Vec<usize>,
    m: usize,
    n: usize,
}

impl std::fmt::Debug for Shuffle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Shuffle{:?}", self.values)
    }
}

impl std::fmt::Display for Shuffle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.values.iter().join(","))
    }
}

impl Shuffle {
    /// Build from 1-based images, validating the shuffle invariants.
    pub fn new(values: Vec<usize>, m: usize, n: usize) -> Result<Self, EisenError> {
        let rank = m + n;
        if m == 0 || n == 0 {
            return Err(EisenError::InvalidShuffle(format!(
                "block sizes must be positive, got m={m}, n={n}"
            )));
        }
        if values.len() != rank {
            return Err(EisenError::InvalidShuffle(format!(
                "expected {rank} images, got {}",
                values.len()
            )));
        }
        let mut seen = vec![false; rank + 1];
        for &v in &values {
            if v < 1 || v > rank || seen[v] {
                return Err(EisenError::InvalidShuffle(format!(
                    "images must be a permutation of 1..={rank}, got {values:?}"
                )));
            }
            seen[v] = true;
        }
        if !values[..m].windows(2).all(|p| p[0] < p[1])
            || !values[m..].windows(2).all(|p| p[0] < p[1])
        {
            return Err(EisenError::InvalidShuffle(format!(
                "blocks of {values:?} are not increasing (m={m}, n={n})"
            )));
        }
        Ok(Shuffle { values, m, n })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        Shuffle {
            values: (1..=m + n).collect(),
            m,
            n,
        }
    }

    /// The block-swap element: w(i) = n + i on the first block,
    /// w(m+j) = j on the second.
    pub fn longest(m: usize, n: usize) -> Self {
        let mut values: Vec<usize> = (n + 1..=m + n).collect();
        values.extend(1..=n);
        Shuffle { values, m, n }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// w(i) for 1-based i.
    pub fn image(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 1-based images in position order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// The inverse permutation as 1-based images.
    pub fn inverse_images(&self) -> Vec<usize> {
        let mut inv = vec![0; self.rank()];
        for (k, &v) in self.values.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        inv
    }

    /// Least 1-based i ≤ m with w(i) > i; m+1 when there is none (identity).
    /// For a shuffle the set {i ≤ m : w(i) > i} is the contiguous tail
    /// {first_raised(w), …, m}, so this index is where the telescoped
    /// factor product starts.
    pub fn first_raised(&self) -> usize {
        for i in 1..=self.m {
            if self.image(i) > i {
                return i;
            }
        }
        self.m + 1
    }

    /// All inversions of the shuffle: the pairs (i, j) with
    /// 1 ≤ i ≤ m < j ≤ m+n and w(i) > w(j). For a shuffle every inversion
    /// straddles the two blocks, so this scan is complete.
    pub fn inversion_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in self.m + 1..=self.rank() {
                if self.image(i) > self.image(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Enumerate every shuffle of type (m, n), in lexicographic order by image
/// vectors, with the default cap on m+n.
pub fn enumerate_shuffles(m: usize, n: usize) -> Result<Vec<Shuffle>, EisenError> {
    enumerate_shuffles_capped(m, n, DEFAULT_ENUMERATION_CAP)
}

/// Enumerate every shuffle of type (m, n) with an explicit cap on m+n.
///
/// Returns exactly binomial(m+n, m) shuffles: the first block is an
/// increasing choice of m values, the second block is its complement.
pub fn enumerate_shuffles_capped(
    m: usize,
    n: usize,
    cap: usize,
) -> Result<Vec<Shuffle>, EisenError> {
    if m == 0 || n == 0 {
        return Err(EisenError::InvalidShuffle(format!(
            "block sizes must be positive, got m={m}, n={n}"
        )));
    }
    let rank = m + n;
    if rank > cap {
        return Err(EisenError::EnumerationTooLarge {
            m,
            rank,
            count: binomial(rank, m),
            cap,
        });
    }
    let mut out = Vec::with_capacity(usize::try_from(binomial(rank, m)).unwrap_or(usize::MAX));
    for first in (1..=rank).combinations(m) {
        let mut taken = vec![false; rank + 1];
        for &v in &first {
            taken[v] = true;
        }
        let mut values = first;
        values.extend((1..=rank).filter(|&v| !taken[v]));
        out.push(Shuffle { values, m, n });
    }
    debug_assert_eq!(BigInt::from(out.len()), binomial(rank, m));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::binomial;

    #[test]
    fn enumerate_smallest() {
        let s = enumerate_shuffles(1, 1).unwrap();
        assert_eq!(
            s.iter().map(|w| w.values().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(enumerate_shuffles(2, 2).unwrap().len(), 6);
    }

    /// Independent oracle for (2, 3): filter all 120 permutations of S_5 by
    /// the two-block monotonicity and compare sets.
    #[test]
    fn enumerate_2_3_against_exhaustive_filter() {
        let mut expected: Vec<Vec<usize>> = (1..=5usize)
            .permutations(5)
            .filter(|p| p[..2].windows(2).all(|w| w[0] < w[1]))
            .filter(|p| p[2..].windows(2).all(|w| w[0] < w[1]))
            .collect();
        expected.sort();
        let got: Vec<Vec<usize>> = enumerate_shuffles(2, 3)
            .unwrap()
            .iter()
            .map(|w| w.values().to_vec())
            .collect();
        assert_eq!(got.len(), 10);
        assert_eq!(got, expected, "lexicographic order must match");
    }

    #[test]
    fn enumerate_counts_match_binomial_up_to_rank_10() {
        for rank in 2..=10usize {
            for m in 1..rank {
                let n = rank - m;
                let s = enumerate_shuffles(m, n).unwrap();
                assert_eq!(BigInt::from(s.len()), binomial(rank, m));
                for w in &s {
                    assert!(Shuffle::new(w.values().to_vec(), m, n).is_ok());
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced_and_names_the_binomial() {
        let err = enumerate_shuffles_capped(12, 11, 22).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("binomial(23, 12)"), "{msg}");
        assert!(msg.contains(&binomial(23, 12).to_string()), "{msg}");
    }

    #[test]
    fn first_raised_examples() {
        assert_eq!(Shuffle::identity(2, 2).first_raised(), 3);
        assert_eq!(Shuffle::identity(3, 4).first_raised(), 4);
        let w = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        assert_eq!(w.first_raised(), 1);
        let w = Shuffle::new(vec![1, 4, 2, 3], 2, 2).unwrap();
        assert_eq!(w.first_raised(), 2);
    }

    #[test]
    fn raised_set_is_contiguous_tail() {
        for rank in 2..=8usize {
            for m in 1..rank {
                let n = rank - m;
                for w in enumerate_shuffles(m, n).unwrap() {
                    let mw = w.first_raised();
                    for i in 1..=m {
                        assert_eq!(w.image(i) > i, i >= mw, "w={w} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_pairs_examples() {
        assert!(Shuffle::identity(3, 2).inversion_pairs().is_empty());
        let w = Shuffle::new(vec![2, 1], 1, 1).unwrap();
        assert_eq!(w.inversion_pairs(), vec![(1, 2)]);
        let w = Shuffle::new(vec![2, 4, 1, 3], 2, 2).unwrap();
        assert_eq!(w.inversion_pairs(), vec![(1, 3), (2, 3), (2, 4)]);
    }

    /// Every inversion of a shuffle straddles the blocks: the dedicated scan
    /// agrees with a full pair scan over all positions.
    #[test]
    fn inversions_against_full_pair_scan() {
        for rank in 2..=8usize {
            for m in 1..rank {
                let n = rank - m;
                for w in enumerate_shuffles(m, n).unwrap() {
                    let mut full = Vec::new();
                    for i in 1..rank {
                        for j in i + 1..=rank {
                            if w.image(i) > w.image(j) {
                                full.push((i, j));
                            }
                        }
                    }
                    let mut ours = w.inversion_pairs();
                    ours.sort();
                    full.sort();
                    assert_eq!(ours, full, "w={w}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_shuffles() {
        assert!(Shuffle::new(vec![2, 1, 3, 4], 2, 2).is_err());
        assert!(Shuffle::new(vec![1, 1, 2, 3], 2, 2).is_err());
        assert!(Shuffle::new(vec![1, 2, 3], 2, 2).is_err());
        assert!(Shuffle::new(vec![0, 1, 2, 3], 2, 2).is_err());
    }

    #[test]
    fn longest_element() {
        let w0 = Shuffle::longest(2, 3);
        assert_eq!(w0.values(), &[4, 5, 1, 2, 3]);
        assert_eq!(w0.first_raised(), 1);
    }
}
