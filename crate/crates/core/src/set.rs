//! Index-set algebra and coloring semantics shared by every other module.
//!
//! Items are numbered `1..=n`. A [`Coloring`] assigns each item one of two
//! colors; algorithms never see it directly, only oracles and test harnesses
//! hold it. An [`IndexSet`] is the argument of every query: a strictly
//! increasing, duplicate-free list of item indices.

use crate::error::Error;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;

/// Sorted, duplicate-free set of 1-based item indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds a set from arbitrary order. Rejects duplicates and index 0.
    pub fn new(mut elems: Vec<usize>) -> Result<Self, Error> {
        elems.sort_unstable();
        if elems.first() == Some(&0) {
            return Err(Error::InvalidArgument("indices are 1-based".into()));
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate index".into()));
        }
        Ok(IndexSet(elems))
    }

    /// The set `{1, 2, ..., m}`.
    pub fn range(m: usize) -> Self {
        IndexSet((1..=m).collect())
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(vec![i])
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn minus(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|i| !other.contains(*i)).collect())
    }

    pub fn intersect(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|i| other.contains(*i)).collect())
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|i| !other.contains(*i))
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|i| other.contains(*i))
    }

    /// The `count` smallest elements.
    pub fn take_smallest(&self, count: usize) -> IndexSet {
        IndexSet(self.0.iter().copied().take(count).collect())
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for i in &self.0 {
            seq.serialize_element(i)?;
        }
        seq.end()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

/// Hidden assignment of one bit per item. Text form: a string of '0'/'1'.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    bits: Vec<u8>,
}

impl Coloring {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self, Error> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument("coloring bits must be 0 or 1".into()));
        }
        Ok(Coloring { bits })
    }

    /// Item `i+1` gets bit `i` of `word`. Handy for exhaustive sweeps.
    pub fn from_word(n: usize, word: u64) -> Self {
        Coloring {
            bits: (0..n).map(|i| ((word >> i) & 1) as u8).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "coloring must be a '0'/'1' string, found {:?}",
                        c
                    )))
                }
            }
        }
        Ok(Coloring { bits })
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    /// Color of item `i` (1-based).
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn flipped(&self) -> Coloring {
        Coloring {
            bits: self.bits.iter().map(|b| b ^ 1).collect(),
        }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// The two monochromatic classes of a queried set, unlabeled: equality
/// ignores which side is which. Canonical form puts the side holding the
/// smallest element first and an empty side last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionPair {
    side_a: IndexSet,
    side_b: IndexSet,
}

impl PartitionPair {
    pub fn new(a: IndexSet, b: IndexSet) -> Result<Self, Error> {
        if !a.is_disjoint(&b) {
            return Err(Error::InvalidArgument("partition sides must be disjoint".into()));
        }
        Ok(Self::canonical(a, b))
    }

    fn canonical(a: IndexSet, b: IndexSet) -> Self {
        let swap = match (a.min(), b.min()) {
            (None, Some(_)) => true,
            (Some(x), Some(y)) => x > y,
            _ => false,
        };
        if swap {
            PartitionPair { side_a: b, side_b: a }
        } else {
            PartitionPair { side_a: a, side_b: b }
        }
    }

    pub fn side_a(&self) -> &IndexSet {
        &self.side_a
    }

    pub fn side_b(&self) -> &IndexSet {
        &self.side_b
    }

    /// Which side `i` is on, if any.
    pub fn side_of(&self, i: usize) -> Option<u8> {
        if self.side_a.contains(i) {
            Some(0)
        } else if self.side_b.contains(i) {
            Some(1)
        } else {
            None
        }
    }

    /// Size of the smaller side.
    pub fn smaller_size(&self) -> usize {
        self.side_a.len().min(self.side_b.len())
    }

    pub fn union(&self) -> IndexSet {
        self.side_a.union(&self.side_b)
    }
}

/// Outcome of the majority problem: a majority-colored item, or the report
/// that the input is split exactly evenly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorityAnswer {
    Element(usize),
    NoMajority,
}

impl MajorityAnswer {
    /// Checks the answer against ground truth by color, not identity: any
    /// index of the strict majority color is accepted.
    pub fn is_correct_for(&self, hidden: &Coloring) -> bool {
        let n = hidden.n();
        let ones = hidden.ones();
        match *self {
            MajorityAnswer::NoMajority => 2 * ones == n,
            MajorityAnswer::Element(i) => {
                if i == 0 || i > n {
                    return false;
                }
                if hidden.bit(i) == 1 {
                    2 * ones > n
                } else {
                    2 * (n - ones) > n
                }
            }
        }
    }
}

impl Serialize for MajorityAnswer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            MajorityAnswer::Element(i) => serializer.serialize_some(i),
            MajorityAnswer::NoMajority => serializer.serialize_none(),
        }
    }
}

fn check_bound(q: &IndexSet, x: &Coloring) -> Result<(), Error> {
    if q.is_empty() {
        return Err(Error::InvalidArgument("query set is empty".into()));
    }
    if q.max().unwrap_or(0) > x.n() {
        return Err(Error::InvalidArgument(format!(
            "index {} out of range for n={}",
            q.max().unwrap(),
            x.n()
        )));
    }
    Ok(())
}

/// `(S \ {i}) ∪ {j}`: replaces `i` by `j` in `S`.
pub fn substitute(s: &IndexSet, i: usize, j: usize) -> Result<IndexSet, Error> {
    if !s.contains(i) {
        return Err(Error::InvalidArgument(format!("{} not in {}", i, s)));
    }
    if s.contains(j) {
        return Err(Error::InvalidArgument(format!("{} already in {}", j, s)));
    }
    Ok(s.minus(&IndexSet::singleton(i)).union(&IndexSet::singleton(j)))
}

/// `(S \ A) ∪ B` for `A ⊆ S` and `B` disjoint from `S`.
pub fn substitute_set(s: &IndexSet, a: &IndexSet, b: &IndexSet) -> Result<IndexSet, Error> {
    if !a.is_subset(s) {
        return Err(Error::InvalidArgument(format!("{} not a subset of {}", a, s)));
    }
    if !b.is_disjoint(s) {
        return Err(Error::InvalidArgument(format!("{} intersects {}", b, s)));
    }
    Ok(s.minus(a).union(b))
}

/// Grafts `T` into `S`: removes the `|T∖S|` largest elements of `S∖T` and
/// adds `T∖S`. The result keeps `|S|` elements, sits inside `S ∪ T`, and
/// contains all of `T`.
pub fn graft(s: &IndexSet, t: &IndexSet) -> Result<IndexSet, Error> {
    if s.len() < t.len() {
        return Err(Error::InvalidArgument(format!("|{}| < |{}|", s, t)));
    }
    let fresh = t.minus(s);
    let removable = s.minus(t);
    let keep = removable.len() - fresh.len();
    Ok(removable.take_smallest(keep).union(&s.intersect(t)).union(&fresh))
}

/// Single-element shorthand for [`graft`].
pub fn graft_one(s: &IndexSet, t: usize) -> Result<IndexSet, Error> {
    graft(s, &IndexSet::singleton(t))
}

/// Size of the smaller color class of `Q` under `X`. Defined for any
/// nonempty set, not only query-sized ones.
pub fn count_of(q: &IndexSet, x: &Coloring) -> Result<usize, Error> {
    check_bound(q, x)?;
    let ones = q.iter().filter(|&i| x.bit(i) == 1).count();
    Ok(ones.min(q.len() - ones))
}

/// `|#ones − #zeros|` over `Q`.
pub fn discrepancy_of(q: &IndexSet, x: &Coloring) -> Result<usize, Error> {
    check_bound(q, x)?;
    let ones = q.iter().filter(|&i| x.bit(i) == 1).count();
    Ok(ones.abs_diff(q.len() - ones))
}

/// The two monochromatic classes of `Q`, unlabeled.
pub fn partition_of(q: &IndexSet, x: &Coloring) -> Result<PartitionPair, Error> {
    check_bound(q, x)?;
    let zeros: Vec<usize> = q.iter().filter(|&i| x.bit(i) == 0).collect();
    let ones: Vec<usize> = q.iter().filter(|&i| x.bit(i) == 1).collect();
    PartitionPair::new(IndexSet(zeros), IndexSet(ones))
}

/// Discrepancy at most one.
pub fn is_balanced(q: &IndexSet, x: &Coloring) -> Result<bool, Error> {
    Ok(discrepancy_of(q, x)? <= 1)
}

/// Splits `[n]` into the indices matching the majority value of `[k]` and
/// the rest. Test-harness utility: query algorithms never see this.
pub fn classify_ml(x: &Coloring, k: usize) -> Result<(IndexSet, IndexSet), Error> {
    if k % 2 == 0 {
        return Err(Error::InvalidArgument(
            "majority of the first k items needs odd k".into(),
        ));
    }
    if k > x.n() {
        return Err(Error::InvalidArgument(format!("k={} exceeds n={}", k, x.n())));
    }
    let ones_k = (1..=k).filter(|&i| x.bit(i) == 1).count();
    let maj = if 2 * ones_k > k { 1 } else { 0 };
    let m: Vec<usize> = (1..=x.n()).filter(|&i| x.bit(i) == maj).collect();
    let l: Vec<usize> = (1..=x.n()).filter(|&i| x.bit(i) != maj).collect();
    Ok((IndexSet(m), IndexSet(l)))
}

/// Ground truth for the majority problem: the smallest index of the strict
/// majority color, or the report of an exact tie.
pub fn majority_truth(x: &Coloring) -> MajorityAnswer {
    let n = x.n();
    let ones = x.ones();
    if 2 * ones == n {
        return MajorityAnswer::NoMajority;
    }
    let maj = if 2 * ones > n { 1 } else { 0 };
    let i = (1..=n).find(|&i| x.bit(i) == maj).expect("nonempty majority");
    MajorityAnswer::Element(i)
}
