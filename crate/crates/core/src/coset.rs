//! Syndrome and coset machinery: coset leader weights, covering radius,
//! distance partitions, and s-regularity checks.
//!
//! For a linear code the distance from a vertex to the code equals the
//! minimum weight of its coset, so everything reduces to a breadth-first
//! walk of the syndrome graph: syndromes are nodes, adding one coordinate
//! vector is an edge. Leader weights are bytes (the covering radius never
//! approaches 256) and the whole table is indexed by the syndrome value.

use num_bigint::BigUint;

use crate::code::{Code, LinearCode, UnrestrictedCode, ENUM_BUDGET_LOG2, VERTEX_BUDGET_LOG2};
use crate::error::{Error, Result};
use crate::f2::BitVec;

/// Redundancy budget: coset tables refuse above 2^28 syndromes.
pub const SYNDROME_BUDGET_LOG2: usize = 28;

/// Coset leader weights for every syndrome of a linear code.
pub struct CosetTable {
    code: LinearCode,
    /// Syndrome of each unit vector, packed into an integer.
    column_syndromes: Vec<u32>,
    /// Minimum weight in the coset of each syndrome.
    leader_weight: Vec<u8>,
    /// Last coordinate used on a shortest path to this syndrome
    /// (`u32::MAX` at the zero syndrome); lets leaders be reconstructed.
    parent_column: Vec<u32>,
}

impl CosetTable {
    /// Breadth-first expansion from the zero syndrome; deterministic.
    pub fn build(code: &LinearCode) -> Result<CosetTable> {
        let m = code.length();
        let r = m - code.dimension();
        if r > SYNDROME_BUDGET_LOG2 {
            return Err(Error::Budget {
                what: "coset table",
                needed: r,
                limit: SYNDROME_BUDGET_LOG2,
            });
        }
        let check = code.generator().dual();
        debug_assert_eq!(check.row_count(), r);
        let column_syndromes: Vec<u32> = (0..m)
            .map(|j| {
                let mut s = 0u32;
                for (i, row) in check.rows().iter().enumerate() {
                    if row.get(j) {
                        s |= 1 << i;
                    }
                }
                s
            })
            .collect();
        let n_synd = 1usize << r;
        let mut leader_weight = vec![u8::MAX; n_synd];
        let mut parent_column = vec![u32::MAX; n_synd];
        leader_weight[0] = 0;
        let mut queue: Vec<u32> = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let s = queue[head];
            head += 1;
            let d = leader_weight[s as usize];
            for (j, &col) in column_syndromes.iter().enumerate() {
                let t = s ^ col;
                if leader_weight[t as usize] == u8::MAX {
                    leader_weight[t as usize] = d + 1;
                    parent_column[t as usize] = j as u32;
                    queue.push(t);
                }
            }
        }
        debug_assert!(leader_weight.iter().all(|&w| w != u8::MAX));
        Ok(CosetTable { code: code.clone(), column_syndromes, leader_weight, parent_column })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn syndrome_count(&self) -> usize {
        self.leader_weight.len()
    }

    pub fn syndrome_of(&self, v: &BitVec) -> u32 {
        let mut s = 0u32;
        for j in v.support() {
            s ^= self.column_syndromes[j];
        }
        s
    }

    pub fn leader_weight(&self, syndrome: u32) -> usize {
        self.leader_weight[syndrome as usize] as usize
    }

    /// Distance from a vertex to the code.
    pub fn distance_to_code(&self, v: &BitVec) -> usize {
        self.leader_weight(self.syndrome_of(v))
    }

    pub fn covering_radius(&self) -> usize {
        self.leader_weight.iter().copied().max().unwrap_or(0) as usize
    }

    /// A minimum-weight representative of the coset with this syndrome.
    pub fn leader(&self, syndrome: u32) -> BitVec {
        let mut v = BitVec::zeros(self.code.length());
        let mut s = syndrome;
        while s != 0 {
            let j = self.parent_column[s as usize];
            debug_assert_ne!(j, u32::MAX);
            v.set(j as usize, !v.get(j as usize));
            s ^= self.column_syndromes[j as usize];
        }
        debug_assert_eq!(v.weight(), self.leader_weight(syndrome));
        v
    }

    /// Number of cosets whose leader weight is exactly `i`.
    pub fn cosets_at_distance(&self, i: usize) -> u64 {
        self.leader_weight.iter().filter(|&&w| w as usize == i).count() as u64
    }

    /// Weight distribution of the coset containing `rep`.
    pub fn coset_weight_distribution(&self, rep: &BitVec) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; self.code.length() + 1];
        let rep_words = rep.words().to_vec();
        self.code.for_each_codeword(|w| {
            let wt: usize = w
                .iter()
                .zip(&rep_words)
                .map(|(a, b)| (a ^ b).count_ones() as usize)
                .sum();
            counts[wt] += 1;
        })?;
        Ok(counts)
    }
}

/// Sizes of the cells of the distance partition `{C, C_1, ..., C_rho}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistancePartition {
    pub sizes: Vec<BigUint>,
}

impl DistancePartition {
    pub fn covering_radius(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.sizes.iter().sum()
    }
}

/// Distance partition of a linear code, from the coset table:
/// `|C_i| = |C| * #{cosets at leader weight i}`.
pub fn distance_partition_linear(code: &LinearCode) -> Result<DistancePartition> {
    let table = CosetTable::build(code)?;
    let rho = table.covering_radius();
    let code_size = BigUint::from(1u32) << code.dimension();
    let sizes = (0..=rho)
        .map(|i| &code_size * BigUint::from(table.cosets_at_distance(i)))
        .collect();
    Ok(DistancePartition { sizes })
}

/// Distance partition of an explicit word set, by exhaustive evaluation of
/// all 2^m vertices.
pub fn distance_partition_words(code: &UnrestrictedCode) -> Result<DistancePartition> {
    let m = code.length();
    if m > VERTEX_BUDGET_LOG2 {
        return Err(Error::Budget {
            what: "vertex enumeration",
            needed: m,
            limit: VERTEX_BUDGET_LOG2,
        });
    }
    let words: Vec<u32> = code.words().iter().map(|w| w.words()[0] as u32).collect();
    let mut counts = vec![0u64; m + 1];
    for v in 0u32..(1u32 << m) {
        let d = words
            .iter()
            .map(|&w| (v ^ w).count_ones() as usize)
            .min()
            .expect("word set is nonempty");
        counts[d] += 1;
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(DistancePartition { sizes: counts.into_iter().map(BigUint::from).collect() })
}

pub fn distance_partition(code: &Code) -> Result<DistancePartition> {
    match code {
        Code::Linear(c) => distance_partition_linear(c),
        Code::Words(c) => distance_partition_words(c),
    }
}

/// Two vertices at the same distance from the code whose distance
/// distributions to the code differ.
#[derive(Clone, Debug)]
pub struct RegularityWitness {
    pub distance: usize,
    pub vertex_a: BitVec,
    pub vertex_b: BitVec,
}

/// s-regularity: for each i <= s, every vertex at distance i from the code
/// has the same multiset of distances to the codewords. Returns a witness
/// pair on failure.
pub fn s_regular_check(
    code: &Code,
    s: usize,
) -> Result<std::result::Result<(), RegularityWitness>> {
    match code {
        Code::Linear(c) => s_regular_linear(c, s),
        Code::Words(c) => s_regular_words(c, s),
    }
}

fn s_regular_linear(
    code: &LinearCode,
    s: usize,
) -> Result<std::result::Result<(), RegularityWitness>> {
    if code.dimension() > ENUM_BUDGET_LOG2 {
        return Err(Error::Budget {
            what: "coset weight distributions",
            needed: code.dimension(),
            limit: ENUM_BUDGET_LOG2,
        });
    }
    let table = CosetTable::build(code)?;
    let rho = table.covering_radius();
    if s > rho {
        return Err(Error::Range {
            context: "s-regularity level",
            value: s,
            allowed: format!("0..={rho} (covering radius)"),
        });
    }
    // all vertices of one coset share a distance distribution, so compare
    // cosets rather than vertices
    for i in 0..=s {
        let mut reference: Option<(BitVec, Vec<u64>)> = None;
        for synd in 0..table.syndrome_count() {
            if table.leader_weight(synd as u32) as usize != i {
                continue;
            }
            let rep = table.leader(synd as u32);
            let dist = table.coset_weight_distribution(&rep)?;
            match &reference {
                None => reference = Some((rep, dist)),
                Some((ref_rep, ref_dist)) => {
                    if dist != *ref_dist {
                        return Ok(Err(RegularityWitness {
                            distance: i,
                            vertex_a: ref_rep.clone(),
                            vertex_b: rep,
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

fn s_regular_words(
    code: &UnrestrictedCode,
    s: usize,
) -> Result<std::result::Result<(), RegularityWitness>> {
    let m = code.length();
    if m > VERTEX_BUDGET_LOG2 {
        return Err(Error::Budget {
            what: "vertex enumeration",
            needed: m,
            limit: VERTEX_BUDGET_LOG2,
        });
    }
    let words: Vec<u32> = code.words().iter().map(|w| w.words()[0] as u32).collect();
    let mut rho = 0usize;
    let mut profiles: Vec<(usize, u32, Vec<u64>)> = Vec::new();
    for v in 0u32..(1u32 << m) {
        let mut profile = vec![0u64; m + 1];
        let mut dmin = m;
        for &w in &words {
            let d = (v ^ w).count_ones() as usize;
            profile[d] += 1;
            dmin = dmin.min(d);
        }
        rho = rho.max(dmin);
        if dmin <= s {
            profiles.push((dmin, v, profile));
        }
    }
    if s > rho {
        return Err(Error::Range {
            context: "s-regularity level",
            value: s,
            allowed: format!("0..={rho} (covering radius)"),
        });
    }
    for i in 0..=s {
        let mut reference: Option<(u32, &Vec<u64>)> = None;
        for (dmin, v, profile) in &profiles {
            if *dmin != i {
                continue;
            }
            match reference {
                None => reference = Some((*v, profile)),
                Some((ref_v, ref_profile)) => {
                    if profile != ref_profile {
                        let unpack = |x: u32| {
                            let mut b = BitVec::zeros(m);
                            for j in 0..m {
                                if (x >> j) & 1 == 1 {
                                    b.set(j, true);
                                }
                            }
                            b
                        };
                        return Ok(Err(RegularityWitness {
                            distance: i,
                            vertex_a: unpack(ref_v),
                            vertex_b: unpack(*v),
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::BitMatrix;

    fn hamming7() -> LinearCode {
        let check = BitMatrix::from_rows(
            7,
            ["1010101", "0110011", "0001111"]
                .iter()
                .map(|s| BitVec::from_bitstring(s).unwrap())
                .collect(),
        )
        .unwrap();
        LinearCode::from_generator(check).dual()
    }

    #[test]
    fn hamming_is_perfect() {
        let c = hamming7();
        assert_eq!(c.dimension(), 4);
        let table = CosetTable::build(&c).unwrap();
        assert_eq!(table.covering_radius(), 1);
        let dp = distance_partition_linear(&c).unwrap();
        assert_eq!(dp.sizes, vec![BigUint::from(16u32), BigUint::from(112u32)]);
        assert_eq!(dp.total(), BigUint::from(128u32));
    }

    #[test]
    fn full_space_has_single_coset() {
        let c = LinearCode::full(5);
        let table = CosetTable::build(&c).unwrap();
        assert_eq!(table.syndrome_count(), 1);
        assert_eq!(table.covering_radius(), 0);
    }

    #[test]
    fn repetition5_partition() {
        let c = Code::Linear(LinearCode::repetition(5));
        let dp = distance_partition(&c).unwrap();
        let expect: Vec<BigUint> = [2u32, 10, 20].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(dp.sizes, expect);
    }

    #[test]
    fn leaders_have_recorded_weight() {
        let c = hamming7();
        let table = CosetTable::build(&c).unwrap();
        for s in 0..table.syndrome_count() as u32 {
            let leader = table.leader(s);
            assert_eq!(table.syndrome_of(&leader), s);
            assert_eq!(leader.weight(), table.leader_weight(s));
        }
    }

    #[test]
    fn coset_distance_is_translation_invariant() {
        let c = hamming7();
        let table = CosetTable::build(&c).unwrap();
        let v = BitVec::from_bitstring("1100100").unwrap();
        let words = c.all_words().unwrap();
        for w in &words {
            assert_eq!(table.distance_to_code(&v), table.distance_to_code(&v.xor(w)));
        }
    }

    #[test]
    fn tiny_word_code_is_not_1_regular() {
        let words = vec![
            BitVec::from_bitstring("00000").unwrap(),
            BitVec::from_bitstring("11100").unwrap(),
        ];
        let c = Code::Words(UnrestrictedCode::new(5, words).unwrap());
        match s_regular_check(&c, 1).unwrap() {
            Err(w) => assert_eq!(w.distance, 1),
            Ok(()) => panic!("expected a regularity witness"),
        }
    }

    #[test]
    fn s_above_covering_radius_is_range_error() {
        let c = Code::Linear(LinearCode::full(4));
        assert!(matches!(s_regular_check(&c, 1), Err(Error::Range { .. })));
    }
}
