//! Union-find over item indices carrying a relative two-coloring: each
//! component remembers which of its two unlabeled color classes every member
//! sits in. Merging with a stated same/different relation either succeeds or
//! reports the contradiction.

use crate::error::Error;

#[derive(Clone, Debug)]
pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    /// Parity relative to parent: 1 means opposite class.
    parity: Vec<u8>,
    /// At roots: members per class, class 0 being the root's own class.
    counts: Vec<[usize; 2]>,
    /// At roots: smallest member of the component.
    min_elem: Vec<usize>,
    n: usize,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..=n).collect(),
            parity: vec![0; n + 1],
            counts: (0..=n).map(|_| [1, 0]).collect(),
            min_elem: (0..=n).collect(),
            n,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Root of `x` and parity of `x` relative to it, with path compression.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let mut path: Vec<(usize, u8)> = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push((r, self.parity[r]));
            r = self.parent[r];
        }
        let mut acc = 0u8;
        for &(node, par) in path.iter().rev() {
            acc ^= par;
            self.parent[node] = r;
            self.parity[node] = acc;
        }
        let px = if x == r { 0 } else { self.parity[x] };
        (r, px)
    }

    /// Records `x_a != x_b` when `differ`, else `x_a == x_b`.
    /// Ok(true) if two components merged, Ok(false) if already consistent.
    pub fn union(&mut self, a: usize, b: usize, differ: bool) -> Result<bool, Error> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        let rel = pa ^ pb ^ (differ as u8);
        if ra == rb {
            return if rel == 0 {
                Ok(false)
            } else {
                Err(Error::Inconsistent(format!(
                    "items {} and {} already related the other way",
                    a, b
                )))
            };
        }
        let (big, small) = if self.size(ra) >= self.size(rb) { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.parity[small] = rel;
        let moved = self.counts[small];
        if rel == 0 {
            self.counts[big][0] += moved[0];
            self.counts[big][1] += moved[1];
        } else {
            self.counts[big][0] += moved[1];
            self.counts[big][1] += moved[0];
        }
        self.min_elem[big] = self.min_elem[big].min(self.min_elem[small]);
        Ok(true)
    }

    pub fn size(&self, root: usize) -> usize {
        self.counts[root][0] + self.counts[root][1]
    }

    pub fn class_counts(&self, root: usize) -> [usize; 2] {
        self.counts[root]
    }

    pub fn discrepancy(&self, root: usize) -> usize {
        self.counts[root][0].abs_diff(self.counts[root][1])
    }

    pub fn min_of(&self, root: usize) -> usize {
        self.min_elem[root]
    }

    /// Same/different relation between `a` and `b` if they share a component.
    pub fn relation(&mut self, a: usize, b: usize) -> Option<bool> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            Some(pa != pb)
        } else {
            None
        }
    }

    /// Roots of all components over `1..=n`, sorted by smallest member.
    pub fn roots(&mut self) -> Vec<usize> {
        let mut rs: Vec<usize> = Vec::new();
        for i in 1..=self.n {
            let (r, _) = self.find(i);
            if self.min_elem[r] == i {
                rs.push(r);
            }
        }
        rs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_tracking() {
        let mut d = ParityDsu::new(6);
        d.union(1, 2, true).unwrap();
        d.union(2, 3, true).unwrap();
        assert_eq!(d.relation(1, 3), Some(false));
        assert_eq!(d.relation(1, 2), Some(true));
        let (r, _) = d.find(1);
        assert_eq!(d.size(r), 3);
        assert_eq!(d.discrepancy(r), 1);
        assert_eq!(d.min_of(r), 1);
        assert!(d.union(1, 3, true).is_err());
        assert_eq!(d.union(1, 3, false).unwrap(), false);
        assert_eq!(d.roots().len(), 4);
    }

    #[test]
    fn counts_after_merges() {
        let mut d = ParityDsu::new(5);
        d.union(1, 2, false).unwrap();
        d.union(3, 4, false).unwrap();
        d.union(1, 3, true).unwrap();
        let (r, _) = d.find(4);
        assert_eq!(d.size(r), 4);
        assert_eq!(d.discrepancy(r), 0);
        d.union(5, 1, false).unwrap();
        let (r, _) = d.find(5);
        assert_eq!(d.discrepancy(r), 1);
    }
}
