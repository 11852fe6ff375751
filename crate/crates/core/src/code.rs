//! Code objects and their weight/distance invariants.
//!
//! A `LinearCode` is a subspace of GF(2)^m held as a canonical RREF
//! generator matrix; an `UnrestrictedCode` is an explicit word set. Weight
//! distributions of linear codes are produced by a Gray-code walk over all
//! 2^k codewords: each step XORs a single generator row into the running
//! word, so the walk costs one row-XOR plus one popcount per codeword.

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};

/// Enumeration budget: linear weight walks refuse above 2^28 codewords.
pub const ENUM_BUDGET_LOG2: usize = 28;

/// Full-vertex-space budget for unrestricted codes.
pub const VERTEX_BUDGET_LOG2: usize = 24;

/// A linear code, canonically represented by its RREF generator matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    gen: BitMatrix,
}

impl LinearCode {
    /// Span of the rows of `gen`; dependent rows are eliminated.
    pub fn from_generator(gen: BitMatrix) -> Self {
        LinearCode { gen: gen.rref().matrix }
    }

    pub fn zero(m: usize) -> Self {
        LinearCode { gen: BitMatrix::empty(m) }
    }

    pub fn repetition(m: usize) -> Self {
        LinearCode::from_generator(BitMatrix::from_rows(m, vec![BitVec::ones(m)]).unwrap())
    }

    pub fn full(m: usize) -> Self {
        LinearCode { gen: BitMatrix::identity(m) }
    }

    /// Even-weight code: the dual of the repetition code.
    pub fn even_weight(m: usize) -> Self {
        LinearCode::repetition(m).dual()
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.gen.row_count()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.gen.contains(v)
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode { gen: self.gen.dual() }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.gen.rows();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| !a.dot(b)))
    }

    /// Visit every codeword exactly once. The closure receives the packed
    /// words of the current codeword.
    ///
    /// The traversal follows the binary reflected Gray code, flipping one
    /// generator-row coefficient per step; which row order is used does not
    /// affect the set visited.
    pub fn for_each_codeword<F: FnMut(&[u64])>(&self, mut f: F) -> Result<()> {
        let k = self.dimension();
        if k > ENUM_BUDGET_LOG2 {
            return Err(Error::Budget {
                what: "codeword enumeration",
                needed: k,
                limit: ENUM_BUDGET_LOG2,
            });
        }
        let rows: Vec<&[u64]> = self.gen.rows().iter().map(|r| r.words()).collect();
        let nwords = self.length().div_ceil(64);
        let mut acc = vec![0u64; nwords];
        f(&acc);
        for i in 1u64..(1u64 << k) {
            let j = i.trailing_zeros() as usize;
            for (a, b) in acc.iter_mut().zip(rows[j]) {
                *a ^= b;
            }
            f(&acc);
        }
        Ok(())
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u64; self.length() + 1];
        self.for_each_codeword(|w| {
            let wt: usize = w.iter().map(|x| x.count_ones() as usize).sum();
            counts[wt] += 1;
        })?;
        Ok(WeightDistribution { counts })
    }

    /// Exact minimum distance; for a linear code this is the least nonzero
    /// weight.
    pub fn minimum_distance(&self) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::UndefinedDistance);
        }
        let wd = self.weight_distribution()?;
        Ok(wd.min_positive_weight().expect("nonzero code has a nonzero word"))
    }

    /// All codewords of weight exactly `w`.
    pub fn words_of_weight(&self, w: usize) -> Result<Vec<BitVec>> {
        let m = self.length();
        let nwords = m.div_ceil(64);
        let mut out = Vec::new();
        self.for_each_codeword(|words| {
            let wt: usize = words.iter().map(|x| x.count_ones() as usize).sum();
            if wt == w {
                let mut v = BitVec::zeros(m);
                for i in 0..m {
                    if (words[i / 64] >> (i % 64)) & 1 == 1 {
                        v.set(i, true);
                    }
                }
                debug_assert_eq!(v.words().len(), nwords);
                out.push(v);
            }
        })?;
        Ok(out)
    }

    /// Delete entry `i` from every codeword. The dimension is recomputed:
    /// it drops by one exactly when the weight-1 word at `i` is a codeword.
    pub fn puncture(&self, i: usize) -> Result<LinearCode> {
        let m = self.length();
        if m < 2 {
            return Err(Error::Range {
                context: "puncture length",
                value: m,
                allowed: "2..".into(),
            });
        }
        if i >= m {
            return Err(Error::Range {
                context: "puncture entry",
                value: i,
                allowed: format!("0..{m}"),
            });
        }
        let keep: Vec<usize> = (0..m).filter(|&c| c != i).collect();
        let rows: Vec<BitVec> = self.gen.rows().iter().map(|r| r.gather(&keep)).collect();
        Ok(LinearCode::from_generator(BitMatrix::from_rows(m - 1, rows)?))
    }

    /// Append an overall parity bit, making every codeword even weight.
    pub fn extend_parity(&self) -> LinearCode {
        let m = self.length();
        let rows: Vec<BitVec> = self
            .gen
            .rows()
            .iter()
            .map(|r| r.extended(r.weight() % 2 == 1))
            .collect();
        LinearCode::from_generator(BitMatrix::from_rows(m + 1, rows).unwrap())
    }

    /// Subcode of even-weight words; dimension k or k-1.
    pub fn even_subcode(&self) -> LinearCode {
        let m = self.length();
        let rows = self.gen.rows();
        let Some(first_odd) = rows.iter().position(|r| r.weight() % 2 == 1) else {
            return self.clone();
        };
        let odd_row = rows[first_odd].clone();
        let new_rows: Vec<BitVec> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != first_odd)
            .map(|(_, r)| {
                if r.weight() % 2 == 1 {
                    r.xor(&odd_row)
                } else {
                    r.clone()
                }
            })
            .collect();
        LinearCode::from_generator(BitMatrix::from_rows(m, new_rows).unwrap())
    }

    /// True when the projection onto entries `{i, j}` is surjective onto
    /// GF(2)^2, i.e. all four patterns occur (each then exactly |C|/4 times).
    pub fn pair_balance(&self, i: usize, j: usize) -> Result<bool> {
        let m = self.length();
        if i == j || i >= m || j >= m {
            return Err(Error::Range {
                context: "pair_balance entries",
                value: if i == j || i >= m { i } else { j },
                allowed: format!("distinct entries in 0..{m}"),
            });
        }
        // rank of the two-column submatrix of the generator: any two distinct
        // nonzero patterns in GF(2)^2 are independent
        let mut patterns = [false; 4];
        for r in self.gen.rows() {
            patterns[(r.get(i) as usize) << 1 | r.get(j) as usize] = true;
        }
        let nonzero = patterns[1] as usize + patterns[2] as usize + patterns[3] as usize;
        Ok(nonzero >= 2)
    }

    /// Every codeword, as `BitVec`s. Only for small dimensions.
    pub fn all_words(&self) -> Result<Vec<BitVec>> {
        let m = self.length();
        let mut out = Vec::with_capacity(1usize << self.dimension().min(ENUM_BUDGET_LOG2));
        self.for_each_codeword(|words| {
            let mut v = BitVec::zeros(m);
            for i in 0..m {
                if (words[i / 64] >> (i % 64)) & 1 == 1 {
                    v.set(i, true);
                }
            }
            out.push(v);
        })?;
        Ok(out)
    }
}

/// An explicit codeword set; used for the Hadamard-family codes, which are
/// not linear.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnrestrictedCode {
    m: usize,
    words: Vec<BitVec>,
}

impl UnrestrictedCode {
    /// Duplicates are rejected.
    pub fn new(m: usize, mut words: Vec<BitVec>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::Range {
                context: "unrestricted code size",
                value: 0,
                allowed: "1..".into(),
            });
        }
        for w in &words {
            if w.len() != m {
                return Err(Error::DimensionMismatch {
                    context: "codeword length",
                    expected: m,
                    got: w.len(),
                });
            }
        }
        words.sort();
        let before = words.len();
        words.dedup();
        if words.len() != before {
            return Err(Error::Parse {
                path: "<word set>".into(),
                line: 0,
                message: "duplicate codeword".into(),
            });
        }
        Ok(UnrestrictedCode { m, words })
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[BitVec] {
        &self.words
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.words.binary_search(v).is_ok()
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut counts = vec![0u64; self.m + 1];
        for w in &self.words {
            counts[w.weight()] += 1;
        }
        WeightDistribution { counts }
    }

    /// Minimum distance over all distinct pairs.
    pub fn minimum_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedDistance);
        }
        let mut best = self.m + 1;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(a.distance(b));
            }
        }
        Ok(best)
    }

    /// Delete entry `i`; fails if two words collapse onto each other.
    pub fn puncture(&self, i: usize) -> Result<UnrestrictedCode> {
        if self.m < 2 {
            return Err(Error::Range {
                context: "puncture length",
                value: self.m,
                allowed: "2..".into(),
            });
        }
        if i >= self.m {
            return Err(Error::Range {
                context: "puncture entry",
                value: i,
                allowed: format!("0..{}", self.m),
            });
        }
        let keep: Vec<usize> = (0..self.m).filter(|&c| c != i).collect();
        let words: Vec<BitVec> = self.words.iter().map(|w| w.gather(&keep)).collect();
        UnrestrictedCode::new(self.m - 1, words)
    }

    /// The subset of even-weight words.
    pub fn even_subset(&self) -> Result<UnrestrictedCode> {
        let words: Vec<BitVec> = self
            .words
            .iter()
            .filter(|w| w.weight() % 2 == 0)
            .cloned()
            .collect();
        UnrestrictedCode::new(self.m, words)
    }
}

/// Either kind of code, for operations defined on both.
#[derive(Clone, Debug)]
pub enum Code {
    Linear(LinearCode),
    Words(UnrestrictedCode),
}

impl Code {
    pub fn length(&self) -> usize {
        match self {
            Code::Linear(c) => c.length(),
            Code::Words(c) => c.length(),
        }
    }

    /// |C| as u128 (linear codes up to dimension 127).
    pub fn size(&self) -> u128 {
        match self {
            Code::Linear(c) => 1u128 << c.dimension(),
            Code::Words(c) => c.size() as u128,
        }
    }

    pub fn minimum_distance(&self) -> Result<usize> {
        match self {
            Code::Linear(c) => c.minimum_distance(),
            Code::Words(c) => c.minimum_distance(),
        }
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        match self {
            Code::Linear(c) => c.weight_distribution(),
            Code::Words(c) => Ok(c.weight_distribution()),
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        match self {
            Code::Linear(c) => c.contains(v),
            Code::Words(c) => c.contains(v),
        }
    }

    pub fn as_linear(&self) -> Option<&LinearCode> {
        match self {
            Code::Linear(c) => Some(c),
            Code::Words(_) => None,
        }
    }
}

/// Codeword counts by weight: `counts[i]` words of weight `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    /// Weights with at least one codeword, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&i| self.counts[i] > 0).collect()
    }
}
