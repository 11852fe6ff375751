//! Constructions for the classified code families and their invariance
//! groups.
//!
//! Every construction is deterministic: primitive roots are the smallest
//! ones, field arithmetic uses fixed primitive polynomials, and point sets
//! are listed in a canonical order. Changing these constants would permute
//! coordinates and may yield an equivalent (not identical) code; only
//! parameters are certified, never equivalence.
//!
//! The Mathieu groups, the 15-point alternating group, and the large
//! sporadic families are not built natively: they load from
//! `data/groups/<name>.perm` / `data/codes/<name>.code`, each of which must
//! carry a `# source:` provenance comment.

use crate::code::{Code, LinearCode, UnrestrictedCode};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};
use crate::fileio;
use crate::perm::{PermGroup, Permutation};

// ---------------------------------------------------------------------------
// small-field arithmetic
// ---------------------------------------------------------------------------

/// Fixed primitive polynomials for GF(2^k), k = 1..4, as bit masks
/// (x^4 + x + 1 = 0b10011, and so on).
const GF2K_POLY: [u16; 5] = [0, 0b10, 0b111, 0b1011, 0b10011];

/// GF(2^k) with elements represented as k-bit integers.
#[derive(Clone, Copy)]
struct Gf2k {
    k: usize,
}

impl Gf2k {
    fn new(k: usize) -> Result<Self> {
        if k == 0 || k > 4 {
            return Err(Error::UnsupportedParameters {
                family: "GF(2^k) arithmetic".into(),
                constraint: "field degree k must be in 1..=4".into(),
            });
        }
        Ok(Gf2k { k })
    }

    fn size(&self) -> u16 {
        1 << self.k
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        let mut acc = 0u16;
        let mut a = a;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a & (1 << self.k) != 0 {
                a ^= GF2K_POLY[self.k];
            }
            b >>= 1;
        }
        acc
    }
}

/// GF(9) as GF(3)[i] with i^2 = -1; elements are `a + 3b` for `a + b*i`.
#[derive(Clone, Copy)]
struct Gf9;

impl Gf9 {
    const SIZE: u8 = 9;

    fn parts(x: u8) -> (i32, i32) {
        ((x % 3) as i32, (x / 3) as i32)
    }

    fn make(a: i32, b: i32) -> u8 {
        (a.rem_euclid(3) + 3 * b.rem_euclid(3)) as u8
    }

    fn add(x: u8, y: u8) -> u8 {
        let (a, b) = Self::parts(x);
        let (c, d) = Self::parts(y);
        Self::make(a + c, b + d)
    }

    fn mul(x: u8, y: u8) -> u8 {
        let (a, b) = Self::parts(x);
        let (c, d) = Self::parts(y);
        // (a + bi)(c + di) with i^2 = -1
        Self::make(a * c - b * d, a * d + b * c)
    }

    /// Frobenius x -> x^3, which is conjugation a + bi -> a - bi.
    fn conj(x: u8) -> u8 {
        let (a, b) = Self::parts(x);
        Self::make(a, -b)
    }

    fn is_zero(x: u8) -> bool {
        x == 0
    }

    fn inverse(x: u8) -> u8 {
        assert!(x != 0);
        (1..Self::SIZE).find(|&y| Self::mul(x, y) == 1).unwrap()
    }

    /// A fixed primitive element: 1 + i has order 8.
    fn primitive() -> u8 {
        let omega = Self::make(1, 1);
        debug_assert_eq!(
            (1..8).find(|&e| {
                let mut acc = 1u8;
                for _ in 0..e {
                    acc = Self::mul(acc, omega);
                }
                acc == 1
            }),
            None
        );
        omega
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest primitive root modulo an odd prime.
pub fn smallest_primitive_root(r: usize) -> usize {
    assert!(is_prime(r) && r > 2);
    'candidate: for g in 2..r {
        let mut x = 1usize;
        for _ in 0..r - 2 {
            x = x * g % r;
            if x == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

/// Indicator of the nonzero quadratic residues modulo r.
fn quadratic_residues(r: usize) -> Vec<bool> {
    let mut qr = vec![false; r];
    for x in 1..r {
        qr[x * x % r] = true;
    }
    qr
}

// ---------------------------------------------------------------------------
// code families
// ---------------------------------------------------------------------------

/// The constructible code families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CodeFamily {
    Repetition { m: usize },
    EvenWeight { m: usize },
    /// First-order Reed-Muller code on 2^t points: constants plus the t
    /// coordinate projections.
    Rm1 { t: usize },
    /// The perfect [2^t - 1, 2^t - 1 - t, 3] code.
    Hamming { t: usize },
    /// Span of hyperplane characteristic vectors in PG(t-1, 2^k).
    PgHyperplane { t: usize, k: usize },
    /// Span of hyperplane-complement characteristic vectors.
    PgComplement { t: usize, k: usize },
    /// Quadratic residue code of prime length r: the spin of the residue
    /// indicator under translations and square multiplications.
    Qr { r: usize },
    /// Even-weight subcode of the quadratic residue code.
    QrEven { r: usize },
    /// Parity extension of the quadratic residue code, on r+1 points.
    Eqr { r: usize },
    Golay23,
    Golay24,
    Golay23Even,
    /// Dual of the Golay [23,12] code punctured at entry 0, on 22 points.
    M22Code,
    /// Rows and complemented rows of the order-12 Paley Hadamard matrix.
    Hadamard12,
    PunctHadamard11,
    PunctHadamard11Even,
    /// Evaluation code on the quadratic forms of one Arf type polarizing to
    /// the standard symplectic form on F2^(2t).
    SpQuadric { t: usize, plus: bool },
    /// Dual of the block span of the Hermitian unital design in PG(2, r^2).
    HermitianUnital { r: usize },
    /// A generator matrix or word list loaded from a file.
    External { path: String },
    /// A code loaded from the data directory by slot name (provenance
    /// comment required).
    DataCode { name: String },
}

impl CodeFamily {
    pub fn name(&self) -> String {
        match self {
            CodeFamily::Repetition { m } => format!("repetition({m})"),
            CodeFamily::EvenWeight { m } => format!("even_weight({m})"),
            CodeFamily::Rm1 { t } => format!("rm1({t})"),
            CodeFamily::Hamming { t } => format!("hamming({t})"),
            CodeFamily::PgHyperplane { t, k } => format!("pg_hyperplane({t},{k})"),
            CodeFamily::PgComplement { t, k } => format!("pg_complement({t},{k})"),
            CodeFamily::Qr { r } => format!("qr({r})"),
            CodeFamily::QrEven { r } => format!("qr_even({r})"),
            CodeFamily::Eqr { r } => format!("eqr({r})"),
            CodeFamily::Golay23 => "golay23".into(),
            CodeFamily::Golay24 => "golay24".into(),
            CodeFamily::Golay23Even => "golay23_even".into(),
            CodeFamily::M22Code => "m22_code".into(),
            CodeFamily::Hadamard12 => "hadamard12".into(),
            CodeFamily::PunctHadamard11 => "punct_hadamard11".into(),
            CodeFamily::PunctHadamard11Even => "punct_hadamard11_even".into(),
            CodeFamily::SpQuadric { t, plus } => {
                format!("sp_quadric({t},{})", if *plus { "plus" } else { "minus" })
            }
            CodeFamily::HermitianUnital { r } => format!("hermitian_unital_code({r})"),
            CodeFamily::External { path } => format!("external({path})"),
            CodeFamily::DataCode { name } => format!("data({name})"),
        }
    }

    pub fn construct(&self) -> Result<Code> {
        match self {
            CodeFamily::Repetition { m } => {
                check_length(*m)?;
                Ok(Code::Linear(LinearCode::repetition(*m)))
            }
            CodeFamily::EvenWeight { m } => {
                check_length(*m)?;
                Ok(Code::Linear(LinearCode::even_weight(*m)))
            }
            CodeFamily::Rm1 { t } => Ok(Code::Linear(rm1(*t)?)),
            CodeFamily::Hamming { t } => Ok(Code::Linear(hamming(*t)?)),
            CodeFamily::PgHyperplane { t, k } => Ok(Code::Linear(pg_code(*t, *k, false)?)),
            CodeFamily::PgComplement { t, k } => Ok(Code::Linear(pg_code(*t, *k, true)?)),
            CodeFamily::Qr { r } => Ok(Code::Linear(qr_code(*r)?)),
            CodeFamily::QrEven { r } => Ok(Code::Linear(qr_code(*r)?.even_subcode())),
            CodeFamily::Eqr { r } => Ok(Code::Linear(qr_code(*r)?.extend_parity())),
            CodeFamily::Golay23 => Ok(Code::Linear(qr_code(23)?)),
            CodeFamily::Golay24 => Ok(Code::Linear(qr_code(23)?.extend_parity())),
            CodeFamily::Golay23Even => Ok(Code::Linear(qr_code(23)?.even_subcode())),
            CodeFamily::M22Code => Ok(Code::Linear(qr_code(23)?.puncture(0)?.dual())),
            CodeFamily::Hadamard12 => Ok(Code::Words(hadamard12())),
            CodeFamily::PunctHadamard11 => Ok(Code::Words(hadamard12().puncture(11)?)),
            CodeFamily::PunctHadamard11Even => {
                Ok(Code::Words(hadamard12().puncture(11)?.even_subset()?))
            }
            CodeFamily::SpQuadric { t, plus } => Ok(Code::Linear(sp_quadric_code(*t, *plus)?)),
            CodeFamily::HermitianUnital { r } => Ok(Code::Linear(hermitian_unital_code(*r)?)),
            CodeFamily::External { path } => fileio::read_code(std::path::Path::new(path)),
            CodeFamily::DataCode { name } => fileio::load_data_code(name),
        }
    }

    /// The invariance group conventionally paired with this family.
    pub fn matching_group(&self) -> Result<GroupFamily> {
        Ok(match self {
            CodeFamily::Repetition { m } | CodeFamily::EvenWeight { m } => {
                GroupFamily::Symmetric { m: *m }
            }
            CodeFamily::Rm1 { t } => GroupFamily::Agl { t: *t },
            CodeFamily::Hamming { t } => GroupFamily::Psl { t: *t, k: 1 },
            CodeFamily::PgHyperplane { t, k } | CodeFamily::PgComplement { t, k } => {
                GroupFamily::Psl { t: *t, k: *k }
            }
            CodeFamily::Qr { r } | CodeFamily::QrEven { r } => GroupFamily::Affine2Hom { r: *r },
            CodeFamily::Eqr { r } => GroupFamily::Psl2 { r: *r },
            CodeFamily::Golay23 | CodeFamily::Golay23Even => GroupFamily::Mathieu { n: 23 },
            CodeFamily::Golay24 => GroupFamily::Mathieu { n: 24 },
            CodeFamily::M22Code => GroupFamily::Mathieu { n: 22 },
            CodeFamily::SpQuadric { t, plus } => GroupFamily::Sp { t: *t, plus: *plus },
            CodeFamily::HermitianUnital { r } => GroupFamily::Psu3 { r: *r },
            CodeFamily::Hadamard12
            | CodeFamily::PunctHadamard11
            | CodeFamily::PunctHadamard11Even
            | CodeFamily::External { .. }
            | CodeFamily::DataCode { .. } => {
                return Err(Error::UnsupportedParameters {
                    family: self.name(),
                    constraint: "no native matching group for this family".into(),
                })
            }
        })
    }
}

fn check_length(m: usize) -> Result<()> {
    if m < 1 || m > crate::f2::MAX_LEN {
        return Err(Error::UnsupportedParameters {
            family: "code length".into(),
            constraint: format!("1 <= m <= {}", crate::f2::MAX_LEN),
        });
    }
    Ok(())
}

/// All-ones row plus the t coordinate projections of the points of F2^t.
fn rm1(t: usize) -> Result<LinearCode> {
    if t < 1 || t > 10 {
        return Err(Error::UnsupportedParameters {
            family: "rm1".into(),
            constraint: "1 <= t <= 10".into(),
        });
    }
    let m = 1usize << t;
    let mut rows = vec![BitVec::ones(m)];
    for bit in 0..t {
        let mut row = BitVec::zeros(m);
        for x in 0..m {
            if (x >> bit) & 1 == 1 {
                row.set(x, true);
            }
        }
        rows.push(row);
    }
    Ok(LinearCode::from_generator(BitMatrix::from_rows(m, rows)?))
}

/// Kernel of the parity-check matrix whose columns are all nonzero vectors
/// of F2^t; the coordinate order matches the PG(t-1, 2) point order.
fn hamming(t: usize) -> Result<LinearCode> {
    if t < 2 || t > 10 {
        return Err(Error::UnsupportedParameters {
            family: "hamming".into(),
            constraint: "2 <= t <= 10".into(),
        });
    }
    let m = (1usize << t) - 1;
    let mut rows = Vec::with_capacity(t);
    for bit in 0..t {
        let mut row = BitVec::zeros(m);
        for col in 0..m {
            let point = col + 1; // nonzero vectors, ascending
            if (point >> bit) & 1 == 1 {
                row.set(col, true);
            }
        }
        rows.push(row);
    }
    let check = BitMatrix::from_rows(m, rows)?;
    Ok(LinearCode::from_generator(check).dual())
}

/// Points of PG(t-1, q) as monic vectors over GF(q), listed in ascending
/// lexicographic order of their coordinate tuples.
fn pg_points(t: usize, field: Gf2k) -> Vec<Vec<u16>> {
    let q = field.size() as usize;
    let mut points = Vec::new();
    let mut vec = vec![0u16; t];
    loop {
        if let Some(first) = vec.iter().position(|&c| c != 0) {
            if vec[first] == 1 {
                points.push(vec.clone());
            }
        }
        // increment the tuple
        let mut i = t;
        loop {
            if i == 0 {
                let expected = ((q.pow(t as u32) - 1) / (q - 1)) as usize;
                assert_eq!(points.len(), expected);
                return points;
            }
            i -= 1;
            vec[i] += 1;
            if (vec[i] as usize) < q {
                break;
            }
            vec[i] = 0;
        }
    }
}

fn pg_normalize(v: &mut [u16], field: Gf2k) {
    let first = v.iter().position(|&c| c != 0).expect("nonzero vector");
    let lead = v[first];
    if lead != 1 {
        let inv = (1..field.size()).find(|&x| field.mul(lead, x) == 1).unwrap();
        for c in v.iter_mut() {
            *c = field.mul(*c, inv);
        }
    }
}

/// Hyperplane or hyperplane-complement code of PG(t-1, 2^k).
fn pg_code(t: usize, k: usize, complement: bool) -> Result<LinearCode> {
    if t < 2 {
        return Err(Error::UnsupportedParameters {
            family: "projective geometry code".into(),
            constraint: "t >= 2".into(),
        });
    }
    let field = Gf2k::new(k)?;
    let points = pg_points(t, field);
    let m = points.len();
    check_length(m)?;
    // hyperplanes are indexed by monic functionals
    let functionals = pg_points(t, field);
    let mut rows = Vec::with_capacity(functionals.len());
    for a in &functionals {
        let mut row = BitVec::zeros(m);
        for (idx, x) in points.iter().enumerate() {
            let dot = x
                .iter()
                .zip(a)
                .fold(0u16, |acc, (&xi, &ai)| acc ^ field.mul(xi, ai));
            let in_hyperplane = dot == 0;
            if in_hyperplane != complement {
                row.set(idx, true);
            }
        }
        rows.push(row);
    }
    Ok(LinearCode::from_generator(BitMatrix::from_rows(m, rows)?))
}

/// Quadratic residue code: spin of the residue indicator vector under
/// x -> x+1 and x -> g^2 x, g the smallest primitive root.
fn qr_code(r: usize) -> Result<LinearCode> {
    validate_qr_length(r)?;
    let qr = quadratic_residues(r);
    let seed = BitVec::from_support(r, &(1..r).filter(|&x| qr[x]).collect::<Vec<_>>());
    let group = affine_2hom_group(r)?;
    crate::submodule::spin(&group, &seed)
}

fn validate_qr_length(r: usize) -> Result<()> {
    if !is_prime(r) || r < 7 || (r % 8 != 1 && r % 8 != 7) {
        return Err(Error::UnsupportedParameters {
            family: "quadratic residue code".into(),
            constraint: "r must be a prime congruent to +-1 mod 8, at least 7".into(),
        });
    }
    Ok(())
}

/// Order-12 Hadamard matrix over GF(11): H = A + I where A is the
/// skew-symmetric matrix with A[inf][b] = +1, A[a][inf] = -1, and
/// A[a][b] = chi(b - a). Rows and their complements, with +1 -> 0 and
/// -1 -> 1; coordinates are the field elements 0..10 followed by the
/// point at infinity.
fn hadamard12() -> UnrestrictedCode {
    const R: usize = 11;
    let qr = quadratic_residues(R);
    let chi = |x: usize| -> i32 {
        let x = x % R;
        if x == 0 {
            0
        } else if qr[x] {
            1
        } else {
            -1
        }
    };
    let inf = R; // coordinate index 11
    let m = R + 1;
    let mut rows: Vec<BitVec> = Vec::with_capacity(2 * m);
    for a in 0..m {
        let mut row = BitVec::zeros(m);
        for b in 0..m {
            let h = if a == inf {
                1 // A[inf][.] = +1 off-diagonal, 0 + I on it
            } else if b == inf {
                -1
            } else if a == b {
                1 // A vanishes on the diagonal, identity contributes
            } else {
                chi(b + R - a)
            };
            debug_assert!(h == 1 || h == -1);
            if h == -1 {
                row.set(b, true);
            }
        }
        let complement = {
            let mut c = BitVec::ones(m);
            c.xor_assign(&row);
            c
        };
        rows.push(row);
        rows.push(complement);
    }
    UnrestrictedCode::new(m, rows).expect("Hadamard rows are distinct")
}

// ---------------------------------------------------------------------------
// symplectic quadric machinery
// ---------------------------------------------------------------------------

/// The standard symplectic form on F2^(2t) with coordinates paired
/// (0,1)(2,3)...: B(u,v) = parity of u & swap_pairs(v).
fn symplectic_form(u: u32, v: u32) -> u32 {
    let swapped = ((v & 0x5555_5555) << 1) | ((v & 0xaaaa_aaaa) >> 1);
    (u & swapped).count_ones() & 1
}

/// The split quadratic form x0 x1 + x2 x3 + ... polarizing to the form
/// above.
fn split_quadratic_form(v: u32) -> u32 {
    (v & (v >> 1) & 0x5555_5555).count_ones() & 1
}

/// Transvection along u: v -> v + B(v,u) u.
fn transvection(v: u32, u: u32) -> u32 {
    if symplectic_form(v, u) == 1 {
        v ^ u
    } else {
        v
    }
}

/// The quadratic forms polarizing to the standard symplectic form, of the
/// requested type, indexed by their linear part: Q_a = Q0 + B(a, .) with
/// Q0(a) = 1 for the minus type (2^(2t-1) - 2^(t-1) forms) and Q0(a) = 0
/// for the plus type.
fn quadric_points(t: usize, plus: bool) -> Vec<u32> {
    let n = 2 * t;
    let want = if plus { 0 } else { 1 };
    let points: Vec<u32> = (0..1u32 << n)
        .filter(|&a| split_quadratic_form(a) == want)
        .collect();
    let expected = (1usize << (n - 1)) + if plus { 1 << (t - 1) } else { 0 } - if plus { 0 } else { 1 << (t - 1) };
    assert_eq!(points.len(), expected);
    points
}

fn validate_sp_params(t: usize) -> Result<()> {
    if t < 2 || t > 4 {
        return Err(Error::UnsupportedParameters {
            family: "symplectic quadric family".into(),
            constraint: "2 <= t <= 4 (native constructions)".into(),
        });
    }
    Ok(())
}

/// Permutation induced on the forms of one type by the transvection along
/// u. The image of the form with linear part `a` is read off by evaluating
/// the transported form on the basis vectors.
fn quadric_transvection_perm(t: usize, points: &[u32], index_of: &[usize], u: u32) -> Permutation {
    let n = 2 * t;
    let images = points
        .iter()
        .map(|&a| {
            let mut image = 0u32;
            for i in 0..n {
                let e = 1u32 << i;
                let te = transvection(e, u);
                // value of (Q_a o T_u) at e, minus Q0(e)
                let q_val = split_quadratic_form(te) ^ (symplectic_form(a, te) as u32);
                let ell = q_val ^ split_quadratic_form(e);
                if ell == 1 {
                    // B(a', e_i) = bit partner(i) of a'
                    image |= 1 << (i ^ 1);
                }
            }
            index_of[image as usize]
        })
        .collect();
    Permutation::new(images).expect("transvections permute the forms of one type")
}

/// Sp(2t, 2) acting on the quadric points of one type, generated by all
/// nonzero transvections.
fn sp_group(t: usize, plus: bool) -> Result<PermGroup> {
    validate_sp_params(t)?;
    let n = 2 * t;
    let points = quadric_points(t, plus);
    let mut index_of = vec![usize::MAX; 1 << n];
    for (i, &p) in points.iter().enumerate() {
        index_of[p as usize] = i;
    }
    let gens: Vec<Permutation> = (1u32..1 << n)
        .map(|u| quadric_transvection_perm(t, &points, &index_of, u))
        .collect();
    PermGroup::new(points.len(), gens)
}

/// The evaluation code on one quadric type: the all-ones row together with
/// the rows a -> Q_a(v) for v over a basis of F2^(2t). Its span is the
/// invariant subspace of dimension 2t + 1.
fn sp_quadric_code(t: usize, plus: bool) -> Result<LinearCode> {
    validate_sp_params(t)?;
    let n = 2 * t;
    let points = quadric_points(t, plus);
    let m = points.len();
    let mut rows = vec![BitVec::ones(m)];
    for i in 0..n {
        let v = 1u32 << i;
        let mut row = BitVec::zeros(m);
        for (idx, &a) in points.iter().enumerate() {
            let q_a_of_v = split_quadratic_form(v) ^ symplectic_form(a, v);
            if q_a_of_v == 1 {
                row.set(idx, true);
            }
        }
        rows.push(row);
    }
    Ok(LinearCode::from_generator(BitMatrix::from_rows(m, rows)?))
}

// ---------------------------------------------------------------------------
// Hermitian unital machinery (r = 3)
// ---------------------------------------------------------------------------

/// Monic projective points of PG(2, 9).
fn pg2_gf9_points() -> Vec<[u8; 3]> {
    let mut points = Vec::new();
    for a in 0..Gf9::SIZE {
        for b in 0..Gf9::SIZE {
            for c in 0..Gf9::SIZE {
                let v = [a, b, c];
                if let Some(first) = v.iter().position(|&x| !Gf9::is_zero(x)) {
                    if v[first] == 1 {
                        points.push(v);
                    }
                }
            }
        }
    }
    assert_eq!(points.len(), 91);
    points
}

/// Hermitian form x0 conj(y2) + x1 conj(y1) + x2 conj(y0).
fn hermitian_form(x: &[u8; 3], y: &[u8; 3]) -> u8 {
    let mut acc = 0u8;
    for i in 0..3 {
        acc = Gf9::add(acc, Gf9::mul(x[i], Gf9::conj(y[2 - i])));
    }
    acc
}

/// The 28 isotropic points of the Hermitian curve, in point-list order.
fn unital_points() -> Vec<usize> {
    let points = pg2_gf9_points();
    let unital: Vec<usize> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| Gf9::is_zero(hermitian_form(p, p)))
        .map(|(i, _)| i)
        .collect();
    assert_eq!(unital.len(), 28);
    unital
}

/// The 63 secant-line blocks of the 2-(28, 4, 1) Hermitian unital design.
pub fn hermitian_unital_design() -> Design {
    let points = pg2_gf9_points();
    let unital = unital_points();
    let mut position = vec![usize::MAX; points.len()];
    for (idx, &p) in unital.iter().enumerate() {
        position[p] = idx;
    }
    let mut blocks = Vec::new();
    for line in &points {
        // line as a functional: incident points x with sum a_i x_i = 0
        let mut block = BitVec::zeros(28);
        let mut size = 0;
        for (pi, point) in points.iter().enumerate() {
            if position[pi] == usize::MAX {
                continue;
            }
            let dot = (0..3).fold(0u8, |acc, i| Gf9::add(acc, Gf9::mul(line[i], point[i])));
            if Gf9::is_zero(dot) {
                block.set(position[pi], true);
                size += 1;
            }
        }
        match size {
            1 => {} // tangent line
            4 => blocks.push(block),
            other => panic!("line meets the unital in {other} points"),
        }
    }
    assert_eq!(blocks.len(), 63);
    Design::new(28, 4, blocks).expect("secant blocks are distinct")
}

/// Dual of the span of the unital blocks: the invariant code of dimension
/// r^2 - r + 1 = 7.
fn hermitian_unital_code(r: usize) -> Result<LinearCode> {
    if r != 3 {
        return Err(Error::UnsupportedParameters {
            family: "hermitian_unital_code".into(),
            constraint: "only r = 3 is built natively; supply larger unitals as data files".into(),
        });
    }
    let design = hermitian_unital_design();
    let span = LinearCode::from_generator(BitMatrix::from_rows(28, design.blocks().to_vec())?);
    Ok(span.dual())
}

/// PGU3(3) acting on the 28 unital points: the full unitriangular root
/// group, a torus generator, and the antidiagonal involution. Larger r
/// loads from a data file slot.
fn psu3_group(r: usize) -> Result<PermGroup> {
    if r != 3 {
        return fileio::load_data_group(&format!("psu3_{r}"));
    }
    let points = pg2_gf9_points();
    let unital = unital_points();
    let mut position = vec![usize::MAX; points.len()];
    for (idx, &p) in unital.iter().enumerate() {
        position[p] = idx;
    }
    let mut matrices: Vec<[[u8; 3]; 3]> = Vec::new();
    // root group u(alpha, beta): beta + conj(beta) + alpha * conj(alpha) = 0
    for alpha in 0..Gf9::SIZE {
        for beta in 0..Gf9::SIZE {
            let norm_alpha = Gf9::mul(alpha, Gf9::conj(alpha));
            if !Gf9::is_zero(Gf9::add(Gf9::add(beta, Gf9::conj(beta)), norm_alpha)) {
                continue;
            }
            let gamma = {
                // gamma = -conj(alpha)
                let (a, b) = Gf9::parts(Gf9::conj(alpha));
                Gf9::make(-a, -b)
            };
            matrices.push([[1, alpha, beta], [0, 1, gamma], [0, 0, 1]]);
        }
    }
    assert_eq!(matrices.len(), 27);
    // torus: diag(w, conj(w)/w, 1/conj(w)) for the primitive element w
    let w = Gf9::primitive();
    let t1 = Gf9::mul(Gf9::conj(w), Gf9::inverse(w));
    let t2 = Gf9::inverse(Gf9::conj(w));
    matrices.push([[w, 0, 0], [0, t1, 0], [0, 0, t2]]);
    // antidiagonal involution
    matrices.push([[0, 0, 1], [0, 1, 0], [1, 0, 0]]);

    let apply = |mat: &[[u8; 3]; 3], v: &[u8; 3]| -> [u8; 3] {
        let mut out = [0u8; 3];
        for (i, row) in mat.iter().enumerate() {
            for (j, &coef) in row.iter().enumerate() {
                out[i] = Gf9::add(out[i], Gf9::mul(coef, v[j]));
            }
        }
        out
    };
    let normalize = |v: &mut [u8; 3]| {
        let first = v.iter().position(|&x| !Gf9::is_zero(x)).expect("nonzero");
        let lead = v[first];
        if lead != 1 {
            let inv = Gf9::inverse(lead);
            for c in v.iter_mut() {
                *c = Gf9::mul(*c, inv);
            }
        }
    };
    let point_index: std::collections::HashMap<[u8; 3], usize> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();

    let mut gens = Vec::with_capacity(matrices.len());
    for mat in &matrices {
        let images: Vec<usize> = unital
            .iter()
            .map(|&pi| {
                let mut image = apply(mat, &points[pi]);
                normalize(&mut image);
                let target = point_index[&image];
                assert_ne!(position[target], usize::MAX, "unitary maps preserve the unital");
                position[target]
            })
            .collect();
        gens.push(Permutation::new(images)?);
    }
    PermGroup::new(28, gens)
}

// ---------------------------------------------------------------------------
// group families
// ---------------------------------------------------------------------------

/// The constructible (or data-loaded) invariance groups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupFamily {
    /// x -> x+1 and x -> g^2 x on GF(r): 2-homogeneous but not 2-transitive
    /// for r = 7 mod 8.
    Affine2Hom { r: usize },
    /// Translations plus GL(t,2) on F2^t.
    Agl { t: usize },
    /// PSL(t, 2^k) on the projective points.
    Psl { t: usize, k: usize },
    /// PSL(2, r) on the projective line (infinity is the last coordinate).
    Psl2 { r: usize },
    /// Sp(2t, 2) on the quadric points of one type.
    Sp { t: usize, plus: bool },
    /// PGU(3, r) on the unital points (r = 3 native).
    Psu3 { r: usize },
    /// The full symmetric group.
    Symmetric { m: usize },
    /// Mathieu group from a bundled data file (n = 22, 23, 24).
    Mathieu { n: usize },
    /// The 15-point alternating group of degree 7, from a data file.
    Alt7On15,
    /// 176-point sporadic group, data file only.
    HigmanSims,
    /// 276-point sporadic group, data file only.
    Co3,
    /// Ree group on r^3 + 1 points, data file only.
    Ree { r: usize },
}

impl GroupFamily {
    pub fn name(&self) -> String {
        match self {
            GroupFamily::Affine2Hom { r } => format!("affine_2hom({r})"),
            GroupFamily::Agl { t } => format!("agl({t},2)"),
            GroupFamily::Psl { t, k } => format!("psl({t},{})", 1usize << k),
            GroupFamily::Psl2 { r } => format!("psl2({r})"),
            GroupFamily::Sp { t, plus } => {
                format!("sp({},2)@{}", 2 * t, if *plus { "plus" } else { "minus" })
            }
            GroupFamily::Psu3 { r } => format!("psu3({r})"),
            GroupFamily::Symmetric { m } => format!("sym({m})"),
            GroupFamily::Mathieu { n } => format!("m{n}"),
            GroupFamily::Alt7On15 => "alt7_15".into(),
            GroupFamily::HigmanSims => "hs176".into(),
            GroupFamily::Co3 => "co3_276".into(),
            GroupFamily::Ree { r } => format!("ree({r})"),
        }
    }

    /// The data file name for data-backed families.
    pub fn data_file(&self) -> Option<String> {
        match self {
            GroupFamily::Mathieu { n } => Some(format!("m{n}")),
            GroupFamily::Alt7On15 => Some("alt7_15".into()),
            GroupFamily::HigmanSims => Some("hs176".into()),
            GroupFamily::Co3 => Some("co3_276".into()),
            GroupFamily::Ree { r } => Some(format!("ree{r}")),
            GroupFamily::Psu3 { r } if *r != 3 => Some(format!("psu3_{r}")),
            _ => None,
        }
    }

    pub fn construct(&self) -> Result<PermGroup> {
        match self {
            GroupFamily::Affine2Hom { r } => affine_2hom_group(*r),
            GroupFamily::Agl { t } => agl_group(*t),
            GroupFamily::Psl { t, k } => psl_group(*t, *k),
            GroupFamily::Psl2 { r } => psl2_group(*r),
            GroupFamily::Sp { t, plus } => sp_group(*t, *plus),
            GroupFamily::Psu3 { r } => psu3_group(*r),
            GroupFamily::Symmetric { m } => symmetric_group(*m),
            GroupFamily::Mathieu { n } => {
                if ![22, 23, 24].contains(n) {
                    return Err(Error::UnsupportedParameters {
                        family: "mathieu".into(),
                        constraint: "n must be 22, 23, or 24".into(),
                    });
                }
                fileio::load_data_group(&format!("m{n}"))
            }
            GroupFamily::Alt7On15 | GroupFamily::HigmanSims | GroupFamily::Co3 | GroupFamily::Ree { .. } => {
                fileio::load_data_group(&self.data_file().unwrap())
            }
        }
    }
}

fn symmetric_group(m: usize) -> Result<PermGroup> {
    check_length(m)?;
    if m < 2 {
        return Err(Error::UnsupportedParameters {
            family: "sym".into(),
            constraint: "m >= 2".into(),
        });
    }
    let cycle = Permutation::new((0..m).map(|x| (x + 1) % m).collect())?;
    let swap = Permutation::from_cycles(m, &[vec![0, 1]])?;
    PermGroup::new(m, vec![cycle, swap])
}

/// x -> x + 1 and x -> g^2 x on GF(r), g the smallest primitive root;
/// order r(r-1)/2.
fn affine_2hom_group(r: usize) -> Result<PermGroup> {
    if !is_prime(r) || r < 3 {
        return Err(Error::UnsupportedParameters {
            family: "affine_2hom".into(),
            constraint: "r must be an odd prime (prime powers are out of native scope)".into(),
        });
    }
    let g = smallest_primitive_root(r);
    let g2 = g * g % r;
    let add = Permutation::new((0..r).map(|x| (x + 1) % r).collect())?;
    let mul = Permutation::new((0..r).map(|x| g2 * x % r).collect())?;
    PermGroup::new(r, vec![add, mul])
}

/// Translations by basis vectors plus GL(t, 2) transvections on F2^t.
fn agl_group(t: usize) -> Result<PermGroup> {
    if t < 1 || t > 10 {
        return Err(Error::UnsupportedParameters {
            family: "agl".into(),
            constraint: "1 <= t <= 10".into(),
        });
    }
    let m = 1usize << t;
    let mut gens = Vec::new();
    for bit in 0..t {
        gens.push(Permutation::new((0..m).map(|x| x ^ (1 << bit)).collect())?);
    }
    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            // x_i += x_j
            gens.push(Permutation::new(
                (0..m)
                    .map(|x| if (x >> j) & 1 == 1 { x ^ (1 << i) } else { x })
                    .collect(),
            )?);
        }
    }
    PermGroup::new(m, gens)
}

/// PSL(t, 2^k) on the monic projective points, generated by the elementary
/// transvections with coefficients over a basis of the field.
fn psl_group(t: usize, k: usize) -> Result<PermGroup> {
    if t < 2 || t > 10 {
        return Err(Error::UnsupportedParameters {
            family: "psl".into(),
            constraint: "2 <= t <= 10".into(),
        });
    }
    let field = Gf2k::new(k)?;
    let points = pg_points(t, field);
    check_length(points.len())?;
    let index: std::collections::HashMap<Vec<u16>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut gens = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            for e in 0..k {
                let lambda = 1u16 << e;
                let images: Vec<usize> = points
                    .iter()
                    .map(|p| {
                        let mut q = p.clone();
                        q[i] ^= field.mul(lambda, p[j]);
                        pg_normalize(&mut q, field);
                        index[&q]
                    })
                    .collect();
                gens.push(Permutation::new(images)?);
            }
        }
    }
    PermGroup::new(points.len(), gens)
}

/// PSL(2, r) on {0..r-1} plus infinity at index r: generated by x -> x+1,
/// x -> g^2 x, and x -> -1/x.
fn psl2_group(r: usize) -> Result<PermGroup> {
    if !is_prime(r) || r < 5 {
        return Err(Error::UnsupportedParameters {
            family: "psl2".into(),
            constraint: "r must be a prime, at least 5".into(),
        });
    }
    let inf = r;
    let m = r + 1;
    let g = smallest_primitive_root(r);
    let g2 = g * g % r;
    let inv = |x: usize| -> usize { (1..r).find(|&y| x * y % r == 1).unwrap() };
    let add = Permutation::new(
        (0..m).map(|x| if x == inf { inf } else { (x + 1) % r }).collect(),
    )?;
    let mul = Permutation::new(
        (0..m).map(|x| if x == inf { inf } else { g2 * x % r }).collect(),
    )?;
    let neg_recip = Permutation::new(
        (0..m)
            .map(|x| {
                if x == inf {
                    0
                } else if x == 0 {
                    inf
                } else {
                    (r - inv(x)) % r
                }
            })
            .collect(),
    )?;
    PermGroup::new(m, vec![add, mul, neg_recip])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(7), 3);
        assert_eq!(smallest_primitive_root(23), 5);
        assert_eq!(smallest_primitive_root(31), 3);
    }

    #[test]
    fn rm1_parameters() {
        let c = rm1(4).unwrap();
        assert_eq!((c.length(), c.dimension()), (16, 5));
        assert_eq!(c.minimum_distance().unwrap(), 8);
    }

    #[test]
    fn hamming_parameters() {
        let c = hamming(3).unwrap();
        assert_eq!((c.length(), c.dimension()), (7, 4));
        assert_eq!(c.minimum_distance().unwrap(), 3);
    }

    #[test]
    fn simplex_is_complement_span() {
        let c = pg_code(4, 1, true).unwrap();
        assert_eq!((c.length(), c.dimension()), (15, 4));
        assert_eq!(c.minimum_distance().unwrap(), 8);
        let h = pg_code(4, 1, false).unwrap();
        assert_eq!((h.length(), h.dimension()), (15, 5));
        assert_eq!(h.minimum_distance().unwrap(), 7);
        // hyperplane vector + all-ones = complement vector
        let sum = h.generator().sum(&LinearCode::repetition(15).generator()).unwrap();
        for row in c.generator().rows() {
            assert!(sum.contains(row));
        }
    }

    #[test]
    fn pg2_gf4_dimensions() {
        let h = pg_code(3, 2, false).unwrap();
        assert_eq!((h.length(), h.dimension()), (21, 10));
        let c = pg_code(3, 2, true).unwrap();
        assert_eq!((c.length(), c.dimension()), (21, 9));
    }

    #[test]
    fn qr7_is_hamming() {
        let c = qr_code(7).unwrap();
        assert_eq!((c.length(), c.dimension()), (7, 4));
        assert_eq!(c.minimum_distance().unwrap(), 3);
        let d = c.dual();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.minimum_distance().unwrap(), 4);
    }

    #[test]
    fn qr_rejects_bad_lengths() {
        assert!(qr_code(11).is_err()); // 11 = 3 mod 8
        assert!(qr_code(9).is_err()); // not prime
    }

    #[test]
    fn affine_2hom_23_order() {
        let g = affine_2hom_group(23).unwrap();
        assert_eq!(g.order(), BigUint::from(253u32));
        let profile = g.transitivity_profile();
        assert!(profile.is_2_homogeneous && !profile.is_2_transitive);
    }

    #[test]
    fn agl4_order_and_profile() {
        let g = agl_group(4).unwrap();
        assert_eq!(g.order(), BigUint::from(322_560u32));
        assert!(g.transitivity_profile().is_2_transitive);
    }

    #[test]
    fn psl32_is_gl3() {
        let g = psl_group(3, 1).unwrap();
        assert_eq!(g.order(), BigUint::from(168u32));
        assert!(g.transitivity_profile().is_2_transitive);
    }

    #[test]
    fn psl2_23_order() {
        let g = psl2_group(23).unwrap();
        assert_eq!(g.order(), BigUint::from(6072u32));
        let profile = g.transitivity_profile();
        assert!(profile.is_2_transitive);
    }

    #[test]
    fn hadamard_codes() {
        let h = hadamard12();
        assert_eq!(h.size(), 24);
        assert_eq!(h.minimum_distance().unwrap(), 6);
        let p = h.puncture(11).unwrap();
        assert_eq!(p.size(), 24);
        assert_eq!(p.minimum_distance().unwrap(), 5);
        let e = p.even_subset().unwrap();
        assert_eq!(e.size(), 12);
        assert_eq!(e.minimum_distance().unwrap(), 6);
    }

    #[test]
    fn sp6_group_order() {
        let g = sp_group(3, false).unwrap();
        assert_eq!(g.degree(), 28);
        assert_eq!(g.order(), BigUint::from(1_451_520u32));
        assert!(g.transitivity_profile().is_2_transitive);
    }

    #[test]
    fn sp6_codes_dimension_7() {
        for plus in [false, true] {
            let c = sp_quadric_code(3, plus).unwrap();
            assert_eq!(c.dimension(), 7);
            let g = sp_group(3, plus).unwrap();
            assert!(g.is_invariant_linear(&c).unwrap());
        }
    }

    #[test]
    fn unital_design_parameters() {
        let d = hermitian_unital_design();
        assert_eq!(d.points(), 28);
        assert_eq!(d.block_count(), 63);
        let cert = crate::design::certify_design(&d, 2).unwrap();
        assert!(cert.is_design);
        assert_eq!(cert.lambda, 1);
    }

    #[test]
    fn unital_code_parameters() {
        let c = hermitian_unital_code(3).unwrap();
        assert_eq!((c.length(), c.dimension()), (28, 7));
        let g = psu3_group(3).unwrap();
        assert_eq!(g.order(), BigUint::from(6048u32));
        assert!(g.transitivity_profile().is_2_transitive);
        assert!(g.is_invariant_linear(&c).unwrap());
    }

    #[test]
    fn golay24_contains_no_light_vector() {
        // exhaustive over all weight-4 vectors of length 24
        let g24 = qr_code(23).unwrap().extend_parity();
        for a in 0..24usize {
            for b in (a + 1)..24 {
                for c in (b + 1)..24 {
                    for d in (c + 1)..24 {
                        let v = BitVec::from_support(24, &[a, b, c, d]);
                        assert!(!g24.contains(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn golay_aliases() {
        let g23 = CodeFamily::Golay23.construct().unwrap();
        let c = g23.as_linear().unwrap();
        assert_eq!((c.length(), c.dimension()), (23, 12));
        assert_eq!(c.minimum_distance().unwrap(), 7);
    }

    #[test]
    fn golay23_invariant_under_affine_group() {
        let c = qr_code(23).unwrap();
        let g = affine_2hom_group(23).unwrap();
        assert!(g.is_invariant_linear(&c).unwrap());
        // and not under the full symmetric group
        let sym = symmetric_group(23).unwrap();
        assert!(!sym.is_invariant_linear(&c).unwrap());
    }

    #[test]
    fn golay24_invariant_under_psl2() {
        let g24 = qr_code(23).unwrap().extend_parity();
        let psl = psl2_group(23).unwrap();
        assert!(psl.is_invariant_linear(&g24).unwrap());
    }
}
