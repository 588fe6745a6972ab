//! Instrumented query interfaces that hide the coloring from algorithms.
//!
//! Every oracle answers `count` and/or `partition` queries on sets of exactly
//! `k` items, counts accepted queries, and keeps a transcript that can be
//! replayed against a candidate coloring. Budget enforcement is observational:
//! harnesses assert on `queries_used` after a run instead of killing it.

use crate::error::Error;
use crate::set::{count_of, partition_of, Coloring, IndexSet, MajorityAnswer, PartitionPair};
use serde::Serialize;

/// Which query types an oracle is willing to answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryMode {
    CountOnly,
    PartitionOnly,
    Both,
}

/// One answered query.
#[derive(Clone, Debug, PartialEq)]
pub enum Answer {
    Count(usize),
    Parts(PartitionPair),
}

/// Entry of a transcript; ordinals are consecutive from 1.
#[derive(Clone, Debug)]
pub struct QueryRecord {
    pub ordinal: usize,
    pub query: IndexSet,
    pub answer: Answer,
}

#[derive(Serialize)]
struct RecordLine<'a> {
    q: &'a IndexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<[&'a IndexSet; 2]>,
}

/// Ordered log of every accepted query with its answer.
#[derive(Clone, Debug, Default)]
pub struct Transcript {
    pub n: usize,
    pub k: usize,
    pub records: Vec<QueryRecord>,
}

impl Transcript {
    pub fn new(n: usize, k: usize) -> Self {
        Transcript { n, k, records: Vec::new() }
    }

    pub(crate) fn push(&mut self, query: IndexSet, answer: Answer) {
        let ordinal = self.records.len() + 1;
        self.records.push(QueryRecord { ordinal, query, answer });
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn queries(&self) -> impl Iterator<Item = &IndexSet> {
        self.records.iter().map(|r| &r.query)
    }

    /// One JSON object per line: `{"q":[...],"count":c}` or
    /// `{"q":[...],"parts":[[...],[...]]}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for rec in &self.records {
            let line = match &rec.answer {
                Answer::Count(c) => RecordLine { q: &rec.query, count: Some(*c), parts: None },
                Answer::Parts(p) => RecordLine {
                    q: &rec.query,
                    count: None,
                    parts: Some([p.side_a(), p.side_b()]),
                },
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        out
    }

    /// True iff every recorded answer equals the honest answer under `x`
    /// (partition answers compared unordered).
    pub fn replays_under(&self, x: &Coloring) -> bool {
        if x.n() != self.n {
            return false;
        }
        self.records.iter().all(|rec| match &rec.answer {
            Answer::Count(c) => count_of(&rec.query, x).ok() == Some(*c),
            Answer::Parts(p) => partition_of(&rec.query, x).ok().as_ref() == Some(p),
        })
    }
}

/// See [`Transcript::replays_under`].
pub fn replay(transcript: &Transcript, x: &Coloring) -> bool {
    transcript.replays_under(x)
}

/// The query interface every algorithm speaks. A call with `|Q| = k`
/// increments `queries_used` by exactly one; any other size is rejected
/// without counting.
pub trait Oracle {
    /// `(n, k)`.
    fn params(&self) -> (usize, usize);
    fn queries_used(&self) -> usize;
    fn query_count(&mut self, q: &IndexSet) -> Result<usize, Error>;
    fn query_partition(&mut self, q: &IndexSet) -> Result<PartitionPair, Error>;
    fn transcript(&self) -> &Transcript;
}

pub(crate) fn validate_query(q: &IndexSet, n: usize, k: usize) -> Result<(), Error> {
    if q.len() != k {
        return Err(Error::QuerySize { expected: k, got: q.len() });
    }
    if q.max().unwrap_or(0) > n {
        return Err(Error::InvalidArgument(format!(
            "index {} out of range for n={}",
            q.max().unwrap_or(0),
            n
        )));
    }
    Ok(())
}

/// Answers from a fixed hidden coloring.
#[derive(Clone, Debug)]
pub struct HonestOracle {
    hidden: Coloring,
    mode: QueryMode,
    transcript: Transcript,
    used: usize,
}

impl HonestOracle {
    pub fn new(hidden: Coloring, k: usize, mode: QueryMode) -> Result<Self, Error> {
        let n = hidden.n();
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("k={} out of range for n={}", k, n)));
        }
        Ok(HonestOracle { transcript: Transcript::new(n, k), hidden, mode, used: 0 })
    }

    pub fn hidden(&self) -> &Coloring {
        &self.hidden
    }

    /// Ground-truth answer, for harness-side checks only.
    pub fn truth(&self) -> MajorityAnswer {
        crate::set::majority_truth(&self.hidden)
    }
}

impl Oracle for HonestOracle {
    fn params(&self) -> (usize, usize) {
        (self.hidden.n(), self.transcript.k)
    }

    fn queries_used(&self) -> usize {
        self.used
    }

    fn query_count(&mut self, q: &IndexSet) -> Result<usize, Error> {
        if self.mode == QueryMode::PartitionOnly {
            return Err(Error::ModeDisallowed("count"));
        }
        validate_query(q, self.hidden.n(), self.transcript.k)?;
        let c = count_of(q, &self.hidden)?;
        self.used += 1;
        self.transcript.push(q.clone(), Answer::Count(c));
        Ok(c)
    }

    fn query_partition(&mut self, q: &IndexSet) -> Result<PartitionPair, Error> {
        if self.mode == QueryMode::CountOnly {
            return Err(Error::ModeDisallowed("partition"));
        }
        validate_query(q, self.hidden.n(), self.transcript.k)?;
        let p = partition_of(q, &self.hidden)?;
        self.used += 1;
        self.transcript.push(q.clone(), Answer::Parts(p.clone()));
        Ok(p)
    }

    fn transcript(&self) -> &Transcript {
        &self.transcript
    }
}

/// Claims every queried set is balanced: the count is always `⌊k/2⌋`. No
/// coloring realizes its answers; it exists to drive non-adaptive query
/// sequences to their forced conclusion.
#[derive(Clone, Debug)]
pub struct AlwaysBalancedOracle {
    n: usize,
    k: usize,
    transcript: Transcript,
    used: usize,
}

impl AlwaysBalancedOracle {
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("k={} out of range for n={}", k, n)));
        }
        Ok(AlwaysBalancedOracle { n, k, transcript: Transcript::new(n, k), used: 0 })
    }
}

impl Oracle for AlwaysBalancedOracle {
    fn params(&self) -> (usize, usize) {
        (self.n, self.k)
    }

    fn queries_used(&self) -> usize {
        self.used
    }

    fn query_count(&mut self, q: &IndexSet) -> Result<usize, Error> {
        validate_query(q, self.n, self.k)?;
        let c = self.k / 2;
        self.used += 1;
        self.transcript.push(q.clone(), Answer::Count(c));
        Ok(c)
    }

    fn query_partition(&mut self, _q: &IndexSet) -> Result<PartitionPair, Error> {
        Err(Error::ModeDisallowed("partition"))
    }

    fn transcript(&self) -> &Transcript {
        &self.transcript
    }
}

/// A majority-finding strategy that can be run against any oracle.
pub trait MajorityAlgorithm {
    fn name(&self) -> &'static str;
    fn run(&self, oracle: &mut dyn Oracle) -> Result<MajorityAnswer, Error>;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn honest_counting_and_size_rejection() {
        let x = Coloring::parse("0011").unwrap();
        let mut o = HonestOracle::new(x, 4, QueryMode::Both).unwrap();
        assert_eq!(o.query_count(&set(&[1, 2, 3, 4])).unwrap(), 2);
        assert_eq!(o.queries_used(), 1);
        // wrong cardinality: rejected, counter unchanged
        let err = o.query_count(&set(&[1, 2, 3])).unwrap_err();
        assert!(matches!(err, Error::QuerySize { expected: 4, got: 3 }));
        assert_eq!(o.queries_used(), 1);
        // re-query still increments and answers identically
        assert_eq!(o.query_count(&set(&[1, 2, 3, 4])).unwrap(), 2);
        assert_eq!(o.queries_used(), 2);
        assert_eq!(o.transcript().len(), 2);
    }

    #[test]
    fn honest_partition_and_modes() {
        let x = Coloring::parse("0101").unwrap();
        let mut o = HonestOracle::new(x.clone(), 4, QueryMode::Both).unwrap();
        let p = o.query_partition(&set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(p, PartitionPair::new(set(&[1, 3]), set(&[2, 4])).unwrap());

        let mut co = HonestOracle::new(x.clone(), 4, QueryMode::CountOnly).unwrap();
        assert!(matches!(co.query_partition(&set(&[1, 2, 3, 4])), Err(Error::ModeDisallowed(_))));
        assert_eq!(co.queries_used(), 0);

        let mut po = HonestOracle::new(x, 4, QueryMode::PartitionOnly).unwrap();
        assert!(matches!(po.query_count(&set(&[1, 2, 3, 4])), Err(Error::ModeDisallowed(_))));
    }

    #[test]
    fn homogeneous_partition_has_empty_side() {
        let x = Coloring::parse("0000").unwrap();
        let mut o = HonestOracle::new(x, 3, QueryMode::Both).unwrap();
        let p = o.query_partition(&set(&[1, 2, 4])).unwrap();
        assert_eq!(p.smaller_size(), 0);
        assert_eq!(p.union(), set(&[1, 2, 4]));
    }

    #[test]
    fn always_balanced() {
        let mut o = AlwaysBalancedOracle::new(10, 5).unwrap();
        assert_eq!(o.query_count(&set(&[1, 2, 3, 4, 5])).unwrap(), 2);
        assert_eq!(o.query_count(&set(&[6, 7, 8, 9, 10])).unwrap(), 2);
        assert_eq!(o.queries_used(), 2);
        assert!(o.query_partition(&set(&[1, 2, 3, 4, 5])).is_err());
    }

    #[test]
    fn replay_honest_transcripts() {
        let x = Coloring::parse("011010").unwrap();
        let mut o = HonestOracle::new(x.clone(), 3, QueryMode::Both).unwrap();
        o.query_count(&set(&[1, 2, 3])).unwrap();
        o.query_partition(&set(&[2, 4, 6])).unwrap();
        o.query_count(&set(&[4, 5, 6])).unwrap();
        assert!(replay(o.transcript(), &x));
        // flipped coloring still replays: answers are label-free
        assert!(replay(o.transcript(), &x.flipped()));
        let y = Coloring::parse("000000").unwrap();
        assert!(!replay(o.transcript(), &y));
        // empty transcript replays trivially
        assert!(replay(&Transcript::new(6, 3), &y));
    }

    #[test]
    fn jsonl_format() {
        let x = Coloring::parse("010").unwrap();
        let mut o = HonestOracle::new(x, 2, QueryMode::Both).unwrap();
        o.query_count(&set(&[1, 2])).unwrap();
        o.query_partition(&set(&[1, 3])).unwrap();
        let lines: Vec<&str> = o.transcript().to_jsonl().lines().collect();
        assert_eq!(lines[0], r#"{"q":[1,2],"count":1}"#);
        assert_eq!(lines[1], r#"{"q":[1,3],"parts":[[1,3],[]]}"#);
    }
}
