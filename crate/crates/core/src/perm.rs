//! Permutation groups on the entry set, with orbit and stabilizer-chain
//! machinery.
//!
//! Orders are computed by a deterministic Schreier-Sims construction: a
//! base and strong generating set with explicit transversals, giving the
//! group order as the product of fundamental orbit lengths. Degrees in
//! scope stay small (at most a few hundred points), so no randomised
//! speedups are needed.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::code::{Code, LinearCode, UnrestrictedCode};
use crate::error::{Error, Result};
use crate::f2::BitVec;

/// A permutation of `{0..degree-1}`, stored as the image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse {
                    path: "<permutation>".into(),
                    line: 0,
                    message: "image list is not a bijection".into(),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Build from disjoint cycles over `{0..n-1}`; points not mentioned are
    /// fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::Range {
                        context: "cycle point",
                        value: from.max(to),
                        allowed: format!("0..{n}"),
                    });
                }
                images[from] = to;
            }
        }
        Permutation::new(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Composition in application order: `(a.then(b))(x) = b(a(x))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), next.degree());
        Permutation {
            images: self.images.iter().map(|&x| next.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Coordinate action on a vector: entry `i` of the input lands in entry
    /// `sigma(i)` of the output.
    pub fn act_on_vector(&self, v: &BitVec) -> BitVec {
        debug_assert_eq!(self.degree(), v.len());
        let mut out = BitVec::zeros(v.len());
        for i in v.support() {
            out.set(self.images[i], true);
        }
        out
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut ord = 1;
        while !p.is_identity() {
            p = p.then(self);
            ord += 1;
        }
        ord
    }
}

impl std::fmt::Debug for Permutation {
    /// Cycle notation; files use the image-list format instead.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// One level of the stabilizer chain: a base point and the transversal of
/// its fundamental orbit.
struct ChainLevel {
    base: usize,
    /// `transversal[p]` maps `base` to `p`; `None` outside the orbit.
    transversal: Vec<Option<Permutation>>,
    /// Orbit points in discovery order (the BFS queue survives here).
    orbit: Vec<usize>,
    /// Schreier edges (orbit point, strong-generator index) already
    /// examined; every edge needs processing exactly once because
    /// transversals are never replaced and the chain below only grows.
    processed: HashSet<(usize, usize)>,
}

impl ChainLevel {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        ChainLevel { base, transversal, orbit: vec![base], processed: HashSet::new() }
    }

    fn orbit_len(&self) -> usize {
        self.orbit.len()
    }
}

/// Base, strong generating set, and transversals.
///
/// Strong generators live in one arena tagged with their level: the
/// generator set relevant to level l is every generator tagged >= l (each
/// fixes the first l base points). Placing a generator therefore re-closes
/// all orbits at or above its level.
struct StabChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    /// (level tag, generator): fixes bases[0..tag) and moves bases[tag].
    strong: Vec<(usize, Permutation)>,
}

impl StabChain {
    /// `base_hint` points are installed as the first base points in order,
    /// which makes the strong generators tagged past the hint a generating
    /// set for its pointwise stabilizer.
    fn build(degree: usize, gens: &[Permutation], base_hint: &[usize]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new(), strong: Vec::new() };
        for &b in base_hint {
            chain.levels.push(ChainLevel::new(b, degree));
        }
        let mut pending: Vec<Permutation> = gens.iter().rev().cloned().collect();
        while let Some(g) = pending.pop() {
            chain.sift(g, &mut pending);
        }
        chain
    }

    /// Strip `h` along the chain. A residue that cannot be stripped is
    /// placed as a strong generator at the level where it got stuck, and
    /// every orbit at or above that level is re-closed; fresh Schreier
    /// generators land on `pending`.
    fn sift(&mut self, g: Permutation, pending: &mut Vec<Permutation>) {
        let mut h = g;
        let mut level = 0;
        loop {
            if h.is_identity() {
                return;
            }
            if level == self.levels.len() {
                let moved = (0..self.degree)
                    .find(|&p| h.apply(p) != p)
                    .expect("non-identity permutation moves a point");
                self.levels.push(ChainLevel::new(moved, self.degree));
            }
            let base = self.levels[level].base;
            let image = h.apply(base);
            if image == base {
                level += 1;
                continue;
            }
            match &self.levels[level].transversal[image] {
                Some(u) => {
                    h = h.then(&u.inverse());
                    debug_assert_eq!(h.apply(base), base);
                    level += 1;
                }
                None => {
                    self.strong.push((level, h));
                    for l in (0..=level).rev() {
                        self.close_orbit(l, pending);
                    }
                    return;
                }
            }
        }
    }

    /// Close the fundamental orbit at `level` under every strong generator
    /// tagged at or past it, pushing the Schreier generator of each new
    /// edge onto `pending`.
    fn close_orbit(&mut self, level: usize, pending: &mut Vec<Permutation>) {
        let mut head = 0;
        while head < self.levels[level].orbit.len() {
            let u_pt = self.levels[level].orbit[head];
            head += 1;
            for si in 0..self.strong.len() {
                if self.strong[si].0 < level {
                    continue;
                }
                if self.levels[level].processed.contains(&(u_pt, si)) {
                    continue;
                }
                self.levels[level].processed.insert((u_pt, si));
                let s = self.strong[si].1.clone();
                let v_pt = s.apply(u_pt);
                let u = self.levels[level].transversal[u_pt]
                    .clone()
                    .expect("orbit point has a transversal element");
                match &self.levels[level].transversal[v_pt] {
                    None => {
                        self.levels[level].transversal[v_pt] = Some(u.then(&s));
                        self.levels[level].orbit.push(v_pt);
                    }
                    Some(t) => {
                        // u then s then t^-1 fixes the bases through this
                        // level; sifting it establishes it below
                        let schreier = u.then(&s).then(&t.inverse());
                        if !schreier.is_identity() {
                            pending.push(schreier);
                        }
                    }
                }
            }
        }
    }

    fn order(&self) -> BigUint {
        let mut ord = BigUint::from(1u32);
        for level in &self.levels {
            ord *= BigUint::from(level.orbit_len());
        }
        ord
    }

    /// Strong generators fixing the first `n_fixed` base points pointwise.
    fn stabilizer_gens(&self, n_fixed: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|(level, _)| *level >= n_fixed)
            .map(|(_, g)| g.clone())
            .collect()
    }
}

/// Transitivity facts established by orbit computations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TransitivityProfile {
    pub is_transitive: bool,
    pub is_2_homogeneous: bool,
    pub is_2_transitive: bool,
}

/// Witness returned when a code is not invariant under a group.
#[derive(Clone, Debug)]
pub struct InvarianceWitness {
    pub generator_index: usize,
    pub moved_word: BitVec,
    pub image: BitVec,
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Groups are immutable once constructed.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: std::sync::OnceLock<StabChain>,
}

impl PermGroup {
    /// At least one generator is required (use the identity for the trivial
    /// group).
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Range {
                context: "generator count",
                value: 0,
                allowed: "1..".into(),
            });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DimensionMismatch {
                    context: "generator degree",
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup { degree, gens, chain: std::sync::OnceLock::new() })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.gens, &[]))
    }

    /// Exact group order via the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    #[doc(hidden)]
    pub fn debug_chain(&self) -> String {
        use std::fmt::Write as _;
        let chain = self.chain();
        let mut out = String::new();
        for (i, level) in chain.levels.iter().enumerate() {
            let tagged = chain.strong.iter().filter(|(l, _)| *l == i).count();
            writeln!(
                out,
                "level {i}: base {} orbit {} gens {tagged}",
                level.base,
                level.orbit_len()
            )
            .unwrap();
        }
        out
    }

    /// Generators of the pointwise stabilizer of the given points,
    /// computed from a chain with those points as initial base.
    pub fn stabilizer_generators(&self, points: &[usize]) -> Vec<Permutation> {
        let chain = StabChain::build(self.degree, &self.gens, points);
        let gens = chain.stabilizer_gens(points.len());
        if gens.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            gens
        }
    }

    /// Orbit of a point.
    pub fn orbit_point(&self, seed: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[seed] = true;
        let mut queue = vec![seed];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push(q);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Orbit of an ordered tuple of points.
    pub fn orbit_tuple(&self, seed: &[usize]) -> Vec<Vec<usize>> {
        self.orbit_generic(seed.to_vec(), |g, t| t.iter().map(|&p| g.apply(p)).collect())
    }

    /// Orbit of an unordered point set (represented sorted).
    pub fn orbit_subset(&self, seed: &[usize]) -> Vec<Vec<usize>> {
        let mut s = seed.to_vec();
        s.sort_unstable();
        self.orbit_generic(s, |g, t| {
            let mut out: Vec<usize> = t.iter().map(|&p| g.apply(p)).collect();
            out.sort_unstable();
            out
        })
    }

    /// Orbit of a vertex under the coordinate action.
    pub fn orbit_vector(&self, seed: &BitVec) -> Result<Vec<BitVec>> {
        if seed.len() != self.degree {
            return Err(Error::DimensionMismatch {
                context: "orbit seed length",
                expected: self.degree,
                got: seed.len(),
            });
        }
        Ok(self.orbit_generic(seed.clone(), |g, v| g.act_on_vector(v)))
    }

    fn orbit_generic<T, F>(&self, seed: T, act: F) -> Vec<T>
    where
        T: Clone + Eq + std::hash::Hash + Ord,
        F: Fn(&Permutation, &T) -> T,
    {
        let mut seen: HashSet<T> = HashSet::new();
        seen.insert(seed.clone());
        let mut queue = vec![seed];
        let mut head = 0;
        while head < queue.len() {
            let t = queue[head].clone();
            head += 1;
            for g in &self.gens {
                let u = act(g, &t);
                if seen.insert(u.clone()) {
                    queue.push(u);
                }
            }
        }
        queue.sort();
        queue
    }

    /// Transitivity, 2-homogeneity, and 2-transitivity, decided by single
    /// orbit computations. Seed choice is irrelevant once transitivity
    /// holds, so the pair `{0,1}` and tuple `(0,1)` suffice.
    pub fn transitivity_profile(&self) -> TransitivityProfile {
        let m = self.degree;
        assert!(m >= 2, "transitivity profile needs degree >= 2");
        let is_transitive = self.orbit_point(0).len() == m;
        let (is_2_homogeneous, is_2_transitive) = if is_transitive {
            let two_hom = self.orbit_subset(&[0, 1]).len() == m * (m - 1) / 2;
            let two_trans = two_hom && self.orbit_tuple(&[0, 1]).len() == m * (m - 1);
            (two_hom, two_trans)
        } else {
            (false, false)
        };
        debug_assert!(!is_2_transitive || is_2_homogeneous);
        TransitivityProfile { is_transitive, is_2_homogeneous, is_2_transitive }
    }

    /// Invariance of a code under every generator. For linear codes each
    /// permuted generator row must stay in the row space; for unrestricted
    /// codes the permuted word set must equal the word set.
    pub fn leaves_invariant(&self, code: &Code) -> Result<std::result::Result<(), InvarianceWitness>> {
        if code.length() != self.degree {
            return Err(Error::DimensionMismatch {
                context: "code length vs group degree",
                expected: self.degree,
                got: code.length(),
            });
        }
        match code {
            Code::Linear(c) => {
                for (gi, g) in self.gens.iter().enumerate() {
                    for row in c.generator().rows() {
                        let image = g.act_on_vector(row);
                        if !c.contains(&image) {
                            return Ok(Err(InvarianceWitness {
                                generator_index: gi,
                                moved_word: row.clone(),
                                image,
                            }));
                        }
                    }
                }
                Ok(Ok(()))
            }
            Code::Words(c) => {
                for (gi, g) in self.gens.iter().enumerate() {
                    for w in c.words() {
                        let image = g.act_on_vector(w);
                        if !c.contains(&image) {
                            return Ok(Err(InvarianceWitness {
                                generator_index: gi,
                                moved_word: w.clone(),
                                image,
                            }));
                        }
                    }
                }
                Ok(Ok(()))
            }
        }
    }

    pub fn is_invariant_linear(&self, code: &LinearCode) -> Result<bool> {
        Ok(self.leaves_invariant(&Code::Linear(code.clone()))?.is_ok())
    }

    pub fn is_invariant_words(&self, code: &UnrestrictedCode) -> Result<bool> {
        Ok(self.leaves_invariant(&Code::Words(code.clone()))?.is_ok())
    }

    /// Divisibility test on the group order: true iff m(m-1)/2 * (q-1)^2
    /// divides |G| (with q = 2 the second factor is 1).
    pub fn codeword_stabilizer_divisibility(&self) -> bool {
        let m = BigUint::from(self.degree);
        let required = &m * (&m - 1u32) / 2u32;
        (self.order() % required) == BigUint::from(0u32)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(degree={}, gens={})", self.degree, self.gens.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic7() -> PermGroup {
        let c = Permutation::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap();
        PermGroup::new(7, vec![c]).unwrap()
    }

    /// x -> x+1 and x -> 2x mod 7 (2 is a square mod 7).
    fn affine7() -> PermGroup {
        let add = Permutation::new((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
        let mul = Permutation::new((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
        PermGroup::new(7, vec![add, mul]).unwrap()
    }

    fn symmetric(m: usize) -> PermGroup {
        let cycle = Permutation::new((0..m).map(|x| (x + 1) % m).collect()).unwrap();
        let swap = Permutation::from_cycles(m, &[vec![0, 1]]).unwrap();
        PermGroup::new(m, vec![cycle, swap]).unwrap()
    }

    #[test]
    fn cyclic_orbit_covers_all_points() {
        assert_eq!(cyclic7().orbit_point(0), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn affine7_is_2hom_not_2trans() {
        let g = affine7();
        assert_eq!(g.orbit_tuple(&[0, 1]).len(), 21);
        let profile = g.transitivity_profile();
        assert!(profile.is_transitive);
        assert!(profile.is_2_homogeneous);
        assert!(!profile.is_2_transitive);
        assert_eq!(g.order(), BigUint::from(21u32));
        assert!(g.codeword_stabilizer_divisibility()); // 21 | 21
    }

    #[test]
    fn cyclic7_fails_divisibility() {
        assert!(!cyclic7().codeword_stabilizer_divisibility()); // 21 does not divide 7
    }

    #[test]
    fn symmetric_group_order() {
        for m in [3usize, 5, 8] {
            let expected: u64 = (1..=m as u64).product();
            assert_eq!(symmetric(m).order(), BigUint::from(expected));
        }
    }

    #[test]
    fn non_transitive_profile() {
        let g = PermGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()],
        )
        .unwrap();
        let profile = g.transitivity_profile();
        assert!(!profile.is_transitive);
        assert!(!profile.is_2_homogeneous);
        assert!(!profile.is_2_transitive);
    }

    #[test]
    fn weight2_orbit_under_symmetric_group() {
        let g = symmetric(5);
        let seed = BitVec::from_bitstring("11000").unwrap();
        let orbit = g.orbit_vector(&seed).unwrap();
        assert_eq!(orbit.len(), 10);
    }

    #[test]
    fn repetition_invariant_under_anything() {
        let g = symmetric(6);
        let rep = LinearCode::repetition(6);
        assert!(g.is_invariant_linear(&rep).unwrap());
    }

    #[test]
    fn stabilizer_of_point_in_symmetric_group() {
        let g = symmetric(5);
        let stab_gens = g.stabilizer_generators(&[4]);
        for s in &stab_gens {
            assert_eq!(s.apply(4), 4);
        }
        let stab = PermGroup::new(5, stab_gens).unwrap();
        assert_eq!(stab.order(), BigUint::from(24u32)); // Sym({0..3})
    }

    #[test]
    fn order_stable_under_generator_shuffle() {
        let g = affine7();
        let mut gens = g.generators().to_vec();
        gens.reverse();
        let h = PermGroup::new(7, gens).unwrap();
        assert_eq!(g.order(), h.order());
    }
}
