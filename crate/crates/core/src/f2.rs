//! Bit-packed linear algebra over GF(2).
//!
//! `BitVec` stores a fixed-length vector packed into `u64` words; `BitMatrix`
//! is a list of equal-length rows. Row reduction, duals, and subspace
//! arithmetic all go through the reduced row echelon form, which is the
//! canonical representative of a row space: two matrices span the same
//! subspace iff their RREFs are identical.

use crate::error::{Error, Result};

/// Maximum supported vector length.
pub const MAX_LEN: usize = 1024;

const WORD_BITS: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bit `i` lives in `words[i / 64]` at position `i % 64`. Trailing bits of
/// the last word are kept zero, so whole-word operations (XOR, popcount,
/// comparisons) need no masking.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1 && len <= MAX_LEN, "vector length {len} out of range 1..={MAX_LEN}");
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in &mut v.words {
            *w = !0;
        }
        v.mask_tail();
        v
    }

    /// Single set bit at `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Build from the support set.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    /// Parse a string of `0`/`1` characters.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let n = s.len();
        if n == 0 || n > MAX_LEN {
            return Err(Error::Range {
                context: "bitstring length",
                value: n,
                allowed: format!("1..={MAX_LEN}"),
            });
        }
        let mut v = Self::zeros(n);
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse {
                        path: "<bitstring>".into(),
                        line: 1,
                        message: format!("invalid character {c:?} at position {i}"),
                    })
                }
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Hamming distance to another vector of the same length.
    pub fn distance(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "distance: length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Entrywise XOR (addition over GF(2)).
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        let acc: u64 = self
            .words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b));
        acc.count_ones() % 2 == 1
    }

    /// Index of the first set bit, if any.
    pub fn leading_bit(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of all set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Apply a coordinate relabelling: bit `i` of the result is bit
    /// `position_of[i]` of `self`. Used when deleting or reordering entries.
    pub fn gather(&self, position_of: &[usize]) -> Self {
        let mut out = Self::zeros(position_of.len());
        for (new_i, &old_i) in position_of.iter().enumerate() {
            if self.get(old_i) {
                out.set(new_i, true);
            }
        }
        out
    }

    /// Copy of the vector with one extra entry appended.
    pub fn extended(&self, bit: bool) -> Self {
        let mut out = Self::zeros(self.len + 1);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        out.set(self.len, bit);
        out
    }

    /// Raw packed words (read-only).
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << rem) - 1;
        }
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVec({})", self.to_bitstring())
    }
}

/// A matrix over GF(2), stored as rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Result of reduced row echelon form: canonical matrix, rank, pivot columns.
pub struct Echelon {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    /// A matrix with no rows (the zero subspace of GF(2)^cols).
    pub fn empty(cols: usize) -> Self {
        assert!(cols >= 1 && cols <= MAX_LEN, "column count {cols} out of range");
        BitMatrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: cols,
                    got: rows[i].len(),
                });
            }
        }
        Ok(BitMatrix { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix {
            cols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols, "push_row: length mismatch");
        self.rows.push(row);
    }

    /// Reduced row echelon form with rank and pivot columns.
    ///
    /// Pivots are strictly increasing and each pivot column has a single
    /// nonzero entry, so the output is the unique canonical basis of the
    /// row space.
    pub fn rref(&self) -> Echelon {
        let mut rows: Vec<BitVec> = self.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            // find a row at or below `rank` with a leading 1 in `col`
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        // remaining rows were zeroed by elimination
        let rows: Vec<BitVec> = rows.into_iter().filter(|r| !r.is_zero()).collect();
        let rank = rows.len();
        Echelon {
            matrix: BitMatrix { cols: self.cols, rows },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Generator matrix of the dual space: all vectors orthogonal to every
    /// row of `self`. The result is in RREF and has `cols - rank` rows.
    pub fn dual(&self) -> BitMatrix {
        let ech = self.rref();
        let m = self.cols;
        let k = ech.rank;
        let pivots = &ech.pivots;
        let is_pivot = {
            let mut flags = vec![false; m];
            for &p in pivots {
                flags[p] = true;
            }
            flags
        };
        let free_cols: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Vec::with_capacity(m - k);
        for &f in &free_cols {
            // basis vector: 1 at the free column, R[i][f] at pivot column i
            let mut v = BitVec::unit(m, f);
            for (i, &p) in pivots.iter().enumerate() {
                if ech.matrix.rows[i].get(f) {
                    v.set(p, true);
                }
            }
            rows.push(v);
        }
        BitMatrix { cols: m, rows }.rref().matrix
    }

    /// Row space membership test.
    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.cols, "contains: length mismatch");
        self.reduce(v).is_zero()
    }

    /// True when the rows have strictly increasing leading bits (no zero
    /// rows), which is what single-pass reduction needs.
    fn is_echelon(&self) -> bool {
        let mut last: Option<usize> = None;
        for row in &self.rows {
            match (row.leading_bit(), last) {
                (None, _) => return false,
                (Some(l), Some(prev)) if l <= prev => return false,
                (Some(l), _) => last = Some(l),
            }
        }
        true
    }

    /// Reduce `v` against the row space; the remainder is zero exactly when
    /// `v` lies in it. Echelon matrices reduce in a single pass; anything
    /// else is canonicalized first.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        if self.is_echelon() {
            return reduce_against_echelon(&self.rows, v);
        }
        reduce_against_echelon(&self.rref().matrix.rows, v)
    }

    /// Row space of both matrices stacked (subspace sum), in RREF.
    pub fn sum(&self, other: &BitMatrix) -> Result<BitMatrix> {
        self.check_cols(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix { cols: self.cols, rows }.rref().matrix)
    }

    /// Subspace intersection, computed through duality:
    /// `(A ∩ B) = (A⊥ + B⊥)⊥`.
    pub fn intersection(&self, other: &BitMatrix) -> Result<BitMatrix> {
        self.check_cols(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Row-space equality via canonical forms.
    pub fn same_space(&self, other: &BitMatrix) -> Result<bool> {
        self.check_cols(other)?;
        Ok(self.rref().matrix == other.rref().matrix)
    }

    fn check_cols(&self, other: &BitMatrix) -> Result<()> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "subspace arithmetic column count",
                expected: self.cols,
                got: other.cols,
            });
        }
        Ok(())
    }
}

fn reduce_against_echelon(rows: &[BitVec], v: &BitVec) -> BitVec {
    let mut r = v.clone();
    for row in rows {
        let lead = row.leading_bit().expect("echelon rows are nonzero");
        if r.get(lead) {
            r.xor_assign(row);
        }
    }
    r
}

/// Incremental RREF basis: rows are kept in canonical echelon form and new
/// vectors are adjoined one at a time. This is the workhorse of spinning.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    /// Rows sorted by leading bit; fully reduced against each other.
    rows: Vec<BitVec>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; if a nonzero remainder survives, insert
    /// it and return `true`.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let mut r = v.clone();
        for row in &self.rows {
            let lead = row.leading_bit().unwrap();
            if r.get(lead) {
                r.xor_assign(row);
            }
        }
        let Some(lead) = r.leading_bit() else {
            return false;
        };
        // back-substitute into existing rows to stay fully reduced
        for row in &mut self.rows {
            if row.get(lead) {
                row.xor_assign(&r);
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&lead, |row| row.leading_bit().unwrap())
            .unwrap_err();
        self.rows.insert(pos, r);
        true
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut r = v.clone();
        for row in &self.rows {
            let lead = row.leading_bit().unwrap();
            if r.get(lead) {
                r.xor_assign(row);
            }
        }
        r.is_zero()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_matrix(self) -> BitMatrix {
        BitMatrix { cols: self.cols, rows: self.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: usize, rows: &[&str]) -> BitMatrix {
        BitMatrix::from_rows(
            cols,
            rows.iter().map(|s| BitVec::from_bitstring(s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = BitMatrix::identity(3);
        let ech = id.rref();
        assert_eq!(ech.matrix, id);
        assert_eq!(ech.rank, 3);
        assert_eq!(ech.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        let a = mat(3, &["110", "011", "101"]);
        let ech = a.rref();
        assert_eq!(ech.rank, 2);
        assert_eq!(ech.matrix, mat(3, &["101", "011"]));
    }

    #[test]
    fn rref_idempotent() {
        let a = mat(5, &["11010", "01110", "10100", "11111"]);
        let once = a.rref().matrix;
        let twice = once.rref().matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn dual_of_repetition_is_even_weight() {
        let m = 6;
        let rep = mat(m, &["111111"]);
        let d = rep.dual();
        assert_eq!(d.row_count(), m - 1);
        for row in d.rows() {
            assert_eq!(row.weight() % 2, 0);
        }
        // double dual returns the repetition space
        assert!(d.dual().same_space(&rep).unwrap());
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let full = BitMatrix::identity(5);
        let d = full.dual();
        assert_eq!(d.row_count(), 0);
    }

    #[test]
    fn hamming_dual_is_simplex() {
        // parity-check rows of the [7,4] Hamming code: all nonzero columns
        let h = mat(
            7,
            &[
                "1010101", // bit 0 of column index 1..7
                "0110011",
                "0001111",
            ],
        );
        let hamming = h.dual();
        assert_eq!(hamming.row_count(), 4);
        let simplex = hamming.dual();
        assert_eq!(simplex.row_count(), 3);
        // all nonzero simplex words have weight 4
        for a in 1u8..8 {
            let mut v = BitVec::zeros(7);
            for (i, row) in simplex.rows().iter().enumerate() {
                if (a >> i) & 1 == 1 {
                    v.xor_assign(row);
                }
            }
            assert_eq!(v.weight(), 4, "simplex word {a:#05b}");
        }
    }

    #[test]
    fn sum_and_intersection() {
        let m = 6;
        let y = mat(m, &["111111"]);
        let zero = BitMatrix::empty(m);
        assert!(y.sum(&zero).unwrap().same_space(&y).unwrap());

        let yperp = y.dual();
        // even m: all-ones is even weight, so Y is inside Y-perp
        let inter = y.intersection(&yperp).unwrap();
        assert!(inter.same_space(&y).unwrap());

        let y5 = mat(5, &["11111"]);
        let inter5 = y5.intersection(&y5.dual()).unwrap();
        assert_eq!(inter5.row_count(), 0);
    }

    #[test]
    fn cols_mismatch_is_error() {
        let a = mat(3, &["110"]);
        let b = mat(4, &["1100"]);
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn echelon_basis_matches_rref() {
        let a = mat(5, &["11010", "01110", "10100", "11111"]);
        let mut basis = EchelonBasis::new(5);
        for row in a.rows() {
            basis.insert(row);
        }
        assert_eq!(basis.into_matrix(), a.rref().matrix);
    }

    #[test]
    fn gather_and_extend() {
        let v = BitVec::from_bitstring("10110").unwrap();
        let punctured = v.gather(&[0, 2, 3, 4]); // drop entry 1
        assert_eq!(punctured.to_bitstring(), "1110");
        let ext = v.extended(true);
        assert_eq!(ext.to_bitstring(), "101101");
    }
}
