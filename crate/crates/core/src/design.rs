//! Weight layers of codes as block designs: extraction, exact t-design
//! certification by dense incidence counting, the standard counting
//! identities, and the minimum-distance bounds they imply.
//!
//! Certification is exact and deterministic: every t-subset count is
//! computed (each block of size w covers C(w,t) subsets of its support),
//! refused above a fixed incidence budget rather than sampled.

use num_bigint::BigUint;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::f2::BitVec;

/// Incidence budget for t-subset counting.
pub const INCIDENCE_BUDGET: u64 = 50_000_000;

/// Candidate budget for the by-weight dual-distance search.
const DUAL_SEARCH_BUDGET: u64 = 20_000_000;

/// A weight layer regarded as the blocks of a design on `v` points.
#[derive(Clone, Debug)]
pub struct Design {
    v: usize,
    block_size: usize,
    blocks: Vec<BitVec>,
    /// (t, lambda) pairs established by certification.
    certified: Vec<(usize, u64)>,
}

impl Design {
    /// Blocks must all have the declared size; duplicates are forbidden.
    pub fn new(v: usize, block_size: usize, mut blocks: Vec<BitVec>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyLayer { weight: block_size });
        }
        for b in &blocks {
            if b.len() != v {
                return Err(Error::DimensionMismatch {
                    context: "block length",
                    expected: v,
                    got: b.len(),
                });
            }
            if b.weight() != block_size {
                return Err(Error::Hypothesis(format!(
                    "block of weight {} in a layer of weight {}",
                    b.weight(),
                    block_size
                )));
            }
        }
        blocks.sort();
        let before = blocks.len();
        blocks.dedup();
        if blocks.len() != before {
            return Err(Error::Hypothesis("duplicate block in design".into()));
        }
        Ok(Design { v, block_size, blocks, certified: Vec::new() })
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_count(&self) -> u64 {
        self.blocks.len() as u64
    }

    pub fn blocks(&self) -> &[BitVec] {
        &self.blocks
    }

    /// Replication number: blocks through a point, uniform exactly when the
    /// layer is a 1-design.
    pub fn replication_number(&self) -> Option<u64> {
        let mut counts = vec![0u64; self.v];
        for b in &self.blocks {
            for i in b.support() {
                counts[i] += 1;
            }
        }
        if counts.iter().all(|&c| c == counts[0]) {
            Some(counts[0])
        } else {
            None
        }
    }

    pub fn certified(&self) -> &[(usize, u64)] {
        &self.certified
    }

    pub fn certified_lambda(&self, t: usize) -> Option<u64> {
        self.certified.iter().find(|&&(s, _)| s == t).map(|&(_, l)| l)
    }

    pub fn record_certificate(&mut self, t: usize, lambda: u64) {
        if self.certified_lambda(t).is_none() {
            self.certified.push((t, lambda));
            self.certified.sort();
        }
    }
}

/// All codewords of weight `w` as a design on the code's entries.
pub fn extract_layer(code: &LinearCode, w: usize) -> Result<Design> {
    let blocks = code.words_of_weight(w)?;
    if blocks.is_empty() {
        return Err(Error::EmptyLayer { weight: w });
    }
    Design::new(code.length(), w, blocks)
}

/// Witness: two t-subsets covered by different numbers of blocks.
#[derive(Clone, Debug)]
pub struct DesignWitness {
    pub subset_a: Vec<usize>,
    pub count_a: u64,
    pub subset_b: Vec<usize>,
    pub count_b: u64,
}

/// Outcome of certifying one strength value.
#[derive(Clone, Debug)]
pub struct DesignCertificate {
    pub t: usize,
    pub is_design: bool,
    pub lambda: u64,
    pub witness: Option<DesignWitness>,
}

/// Binomial coefficient, saturating into u64 territory only for in-budget
/// sizes.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Combinadic rank of a sorted t-subset.
fn subset_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &a)| binomial(a, i + 1) as usize)
        .sum()
}

/// Unrank back to a sorted subset (used only for witnesses).
fn subset_unrank(mut rank: usize, v: usize, t: usize) -> Vec<usize> {
    let mut out = vec![0usize; t];
    for i in (1..=t).rev() {
        // largest a with C(a, i) <= rank
        let mut a = i - 1;
        while binomial(a + 1, i) as usize <= rank {
            a += 1;
        }
        debug_assert!(a < v);
        out[i - 1] = a;
        rank -= binomial(a, i) as usize;
    }
    out
}

/// Visit each t-combination of `items` in lexicographic order.
fn for_each_combination<F: FnMut(&[usize])>(items: &[usize], t: usize, mut f: F) {
    if t > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        let subset: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
        f(&subset);
        // advance
        let mut i = t;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + items.len() - t {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact strength-t certification: count, for every t-subset of points, the
/// blocks whose support contains it; a design iff all counts agree.
pub fn certify_design(design: &Design, t: usize) -> Result<DesignCertificate> {
    let v = design.points();
    let w = design.block_size();
    if t == 0 || t > w {
        return Err(Error::Range {
            context: "design strength",
            value: t,
            allowed: format!("1..={w} (block size)"),
        });
    }
    let table_size = binomial(v, t);
    let incidences = design.block_count() * binomial(w, t);
    if table_size > INCIDENCE_BUDGET || incidences > INCIDENCE_BUDGET {
        return Err(Error::Budget {
            what: "t-subset incidence counting",
            needed: table_size.max(incidences).ilog2() as usize + 1,
            limit: INCIDENCE_BUDGET.ilog2() as usize + 1,
        });
    }
    let mut counts = vec![0u64; table_size as usize];
    for block in design.blocks() {
        let support = block.support();
        for_each_combination(&support, t, |subset| {
            counts[subset_rank(subset)] += 1;
        });
    }
    let lambda = counts[0];
    for (rank, &c) in counts.iter().enumerate() {
        if c != lambda {
            return Ok(DesignCertificate {
                t,
                is_design: false,
                lambda: 0,
                witness: Some(DesignWitness {
                    subset_a: subset_unrank(0, v, t),
                    count_a: lambda,
                    subset_b: subset_unrank(rank, v, t),
                    count_b: c,
                }),
            });
        }
    }
    Ok(DesignCertificate { t, is_design: true, lambda, witness: None })
}

/// Result of checking the three standard counting identities.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub ok: bool,
    pub failed: Vec<&'static str>,
    pub r: BigUint,
    pub b: BigUint,
}

/// For a certified 2-design, check vr = bk, r(k-1) = lambda(v-1), and
/// b = v(v-1)lambda / (k(k-1)), exactly.
pub fn design_identities(design: &Design) -> Result<IdentityReport> {
    let Some(lambda) = design.certified_lambda(2) else {
        return Err(Error::Hypothesis(
            "identities need a certified strength-2 design".into(),
        ));
    };
    let v = BigUint::from(design.points());
    let k = BigUint::from(design.block_size());
    let b = BigUint::from(design.block_count());
    let lambda = BigUint::from(lambda);
    let r = match design.replication_number() {
        Some(r) => BigUint::from(r),
        None => {
            return Ok(IdentityReport {
                ok: false,
                failed: vec!["replication number is not constant"],
                r: BigUint::from(0u32),
                b,
            })
        }
    };
    let one = BigUint::from(1u32);
    let mut failed = Vec::new();
    if &v * &r != &b * &k {
        failed.push("vr = bk");
    }
    if &r * (&k - &one) != &lambda * (&v - &one) {
        failed.push("r(k-1) = lambda(v-1)");
    }
    if &b * &k * (&k - &one) != &v * (&v - &one) * &lambda {
        failed.push("b = v(v-1)lambda / k(k-1)");
    }
    Ok(IdentityReport { ok: failed.is_empty(), failed, r, b })
}

/// Exact or lower-bounded dual distance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DualDistance {
    Exact(usize),
    AtLeast(usize),
}

/// Three-valued bound status: the product bound can stay open when only a
/// lower bound on the dual distance is available.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundStatus {
    Proven,
    Failed,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct DistanceBoundReport {
    pub delta: usize,
    pub dual_delta: DualDistance,
    pub lambda: u64,
    /// m-1 <= (delta-1)(delta_perp - 1)
    pub product_bound: BoundStatus,
    /// (delta-1)^2 >= m-1, evaluated only for self-orthogonal codes.
    pub self_orthogonal_bound: Option<bool>,
}

/// Minimum weight of the dual code. Enumerates the dual when its dimension
/// is in budget, otherwise searches lightweight vectors directly and may
/// return only a lower bound.
pub fn dual_minimum_distance(code: &LinearCode) -> Result<DualDistance> {
    let m = code.length();
    let dual_dim = m - code.dimension();
    if dual_dim == 0 {
        return Err(Error::UndefinedDistance);
    }
    if dual_dim <= crate::code::ENUM_BUDGET_LOG2 {
        return Ok(DualDistance::Exact(code.dual().minimum_distance()?));
    }
    // a vector lies in the dual iff it is orthogonal to every generator row
    let rows = code.generator().rows();
    let mut spent = 0u64;
    for w in 1..=m {
        let layer = binomial(m, w);
        if spent + layer > DUAL_SEARCH_BUDGET {
            return Ok(DualDistance::AtLeast(w));
        }
        spent += layer;
        let points: Vec<usize> = (0..m).collect();
        let mut found = false;
        for_each_combination(&points, w, |subset| {
            if found {
                return;
            }
            let v = BitVec::from_support(m, subset);
            if rows.iter().all(|r| !r.dot(&v)) {
                found = true;
            }
        });
        if found {
            return Ok(DualDistance::Exact(w));
        }
    }
    Err(Error::UndefinedDistance)
}

/// Check the design-derived distance bounds for a linear code whose minimum
/// weight layer is a 2-design:
/// `m-1 <= (delta-1)(delta_perp-1)`, and for self-orthogonal codes
/// `delta >= sqrt(m-1) + 1` in the exact squared form `(delta-1)^2 >= m-1`.
pub fn distance_bound_check(code: &LinearCode) -> Result<DistanceBoundReport> {
    let m = code.length();
    let delta = code.minimum_distance()?;
    if delta < 3 || delta >= m {
        return Err(Error::Hypothesis(format!(
            "distance bounds need 3 <= delta < m, got delta={delta}, m={m}"
        )));
    }
    let layer = extract_layer(code, delta)?;
    let cert = certify_design(&layer, 2)?;
    if !cert.is_design {
        return Err(Error::Hypothesis(
            "minimum-weight layer is not a 2-design".into(),
        ));
    }
    let dual_delta = dual_minimum_distance(code)?;
    let product_bound = {
        let lhs = m - 1;
        match dual_delta {
            DualDistance::Exact(dp) => {
                if lhs <= (delta - 1) * (dp - 1) {
                    BoundStatus::Proven
                } else {
                    BoundStatus::Failed
                }
            }
            DualDistance::AtLeast(dp_lo) => {
                if lhs <= (delta - 1) * (dp_lo - 1) {
                    BoundStatus::Proven
                } else {
                    BoundStatus::Inconclusive
                }
            }
        }
    };
    let self_orthogonal_bound = if code.is_self_orthogonal() {
        Some((delta - 1) * (delta - 1) >= m - 1)
    } else {
        None
    };
    Ok(DistanceBoundReport {
        delta,
        dual_delta,
        lambda: cert.lambda,
        product_bound,
        self_orthogonal_bound,
    })
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
    fn binomials() {
        assert_eq!(binomial(24, 5), 42504);
        assert_eq!(binomial(8, 5), 56);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn rank_unrank_round_trip() {
        // combinadic ranks are a bijection onto 0..C(v,t) and unranking
        // inverts them (the rank order is colex, not lex)
        let v = 9;
        let t = 3;
        let points: Vec<usize> = (0..v).collect();
        let mut seen = vec![false; binomial(v, t) as usize];
        for_each_combination(&points, t, |subset| {
            let rank = subset_rank(subset);
            assert!(!seen[rank], "rank collision at {subset:?}");
            seen[rank] = true;
            assert_eq!(subset_unrank(rank, v, t), subset);
        });
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn even_weight_pairs_form_trivial_design() {
        // weight-2 layer of the even-weight code on 6 points: every pair once
        let layer = extract_layer(&LinearCode::even_weight(6), 2).unwrap();
        assert_eq!(layer.block_count(), 15);
        let cert = certify_design(&layer, 2).unwrap();
        assert!(cert.is_design);
        assert_eq!(cert.lambda, 1);
    }

    #[test]
    fn hamming_weight3_layer() {
        let layer = extract_layer(&hamming7(), 3).unwrap();
        assert_eq!(layer.block_count(), 7);
        let cert = certify_design(&layer, 2).unwrap();
        assert!(cert.is_design);
        assert_eq!(cert.lambda, 1); // the Fano plane
        let mut layer = layer;
        layer.record_certificate(2, cert.lambda);
        let report = design_identities(&layer).unwrap();
        assert!(report.ok);
        assert_eq!(report.r, BigUint::from(3u32));
        assert_eq!(report.b, BigUint::from(7u32));
    }

    #[test]
    fn corrupted_block_set_fails_identities() {
        let mut layer = extract_layer(&hamming7(), 3).unwrap();
        let cert = certify_design(&layer, 2).unwrap();
        layer.record_certificate(2, cert.lambda);
        // drop one block: vr = bk must now fail
        let mut blocks = layer.blocks().to_vec();
        blocks.pop();
        let mut corrupted = Design::new(7, 3, blocks).unwrap();
        corrupted.record_certificate(2, cert.lambda);
        let report = design_identities(&corrupted).unwrap();
        assert!(!report.ok);
    }

    #[test]
    fn non_design_produces_witness() {
        let blocks = vec![
            BitVec::from_bitstring("11000").unwrap(),
            BitVec::from_bitstring("01100").unwrap(),
        ];
        let d = Design::new(5, 2, blocks).unwrap();
        let cert = certify_design(&d, 2).unwrap();
        assert!(!cert.is_design);
        let w = cert.witness.unwrap();
        assert_ne!(w.count_a, w.count_b);
    }

    #[test]
    fn empty_layer_is_error() {
        assert!(matches!(
            extract_layer(&hamming7(), 2),
            Err(Error::EmptyLayer { weight: 2 })
        ));
    }

    #[test]
    fn hamming_distance_bounds_tight() {
        let report = distance_bound_check(&hamming7()).unwrap();
        assert_eq!(report.delta, 3);
        assert_eq!(report.dual_delta, DualDistance::Exact(4));
        // 6 <= 2*3, tight
        assert_eq!(report.product_bound, BoundStatus::Proven);
        assert_eq!(report.self_orthogonal_bound, None);
    }
}
