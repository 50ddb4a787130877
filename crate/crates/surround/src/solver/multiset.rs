//! Ranking, unranking, and ordered enumeration of cop configurations.
//!
//! A configuration of `k` indistinguishable cops over `d` positions is a
//! multiset, kept as an ascending sorted slice. Mapping `a_i = c_i + i`
//! turns it into a strictly increasing sequence, ranked by the
//! combinatorial number system: `rank = sum C(c_i + i, i + 1)`. Ranks are
//! dense in `0..count` and enumeration in rank order only ever increments
//! one entry and zeroes the prefix below it, like an odometer.

/// Rank/unrank helper for `k`-multisets over `0..domain`.
#[derive(Debug, Clone)]
pub struct MultisetIndexer {
    domain: u32,
    k: u32,
    /// binom[a * (k + 1) + j] = C(a, j) for a < domain + k, j <= k.
    binom: Vec<u64>,
}

impl MultisetIndexer {
    pub fn new(domain: u32, k: u32) -> MultisetIndexer {
        assert!(domain >= 1 && k >= 1, "need a position and a cop");
        let rows = (domain + k) as usize;
        let cols = k as usize + 1;
        let mut binom = vec![0u64; rows * cols];
        for a in 0..rows {
            binom[a * cols] = 1;
            for j in 1..cols.min(a + 1) {
                binom[a * cols + j] =
                    binom[(a - 1) * cols + j - 1].saturating_add(binom[(a - 1) * cols + j]);
            }
            if a < cols {
                binom[a * cols + a] = 1;
            }
        }
        MultisetIndexer { domain, k, binom }
    }

    pub fn domain(&self) -> u32 {
        self.domain
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    fn c(&self, a: u32, j: u32) -> u64 {
        self.binom[(a * (self.k + 1) + j) as usize]
    }

    /// Number of distinct configurations: C(domain + k - 1, k).
    pub fn count(&self) -> u64 {
        self.c(self.domain + self.k - 1, self.k)
    }

    /// Rank of an ascending sorted configuration.
    #[inline]
    pub fn rank(&self, cops: &[u32]) -> u64 {
        debug_assert_eq!(cops.len(), self.k as usize);
        debug_assert!(cops.is_sorted());
        let mut r = 0u64;
        for (i, &c) in cops.iter().enumerate() {
            r += self.c(c + i as u32, i as u32 + 1);
        }
        r
    }

    /// Writes the configuration with the given rank into `out` (ascending).
    pub fn unrank(&self, mut rank: u64, out: &mut [u32]) {
        debug_assert_eq!(out.len(), self.k as usize);
        debug_assert!(rank < self.count());
        for i in (0..self.k).rev() {
            // Largest a with C(a, i + 1) <= rank, searched over i..domain+i.
            let (mut lo, mut hi) = (i, self.domain + i);
            while lo < hi {
                let mid = (lo + hi + 1) / 2;
                if self.c(mid, i + 1) <= rank {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            out[i as usize] = lo - i;
            rank -= self.c(lo, i + 1);
        }
        debug_assert_eq!(rank, 0);
    }

    /// The rank-0 configuration: every cop on position 0.
    pub fn first(&self) -> Vec<u32> {
        vec![0; self.k as usize]
    }

    /// Advances to the next configuration in rank order; returns false
    /// after the last one, leaving the slice untouched.
    pub fn advance(&self, cops: &mut [u32]) -> bool {
        let k = self.k as usize;
        for i in 0..k {
            let limit = if i + 1 < k {
                cops[i + 1]
            } else {
                self.domain - 1
            };
            if cops[i] < limit {
                cops[i] += 1;
                for c in &mut cops[..i] {
                    *c = 0;
                }
                return true;
            }
        }
        false
    }
}
