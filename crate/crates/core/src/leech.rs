//! The binary Golay code in MOG coordinates, the Leech lattice at scale 8,
//! octad sublattices and the isometry `xi`.
//!
//! MOG position (row `r`, column `c`) of the 4x6 array is coordinate
//! `4c + r`. Leech vectors are stored as integers, i.e. `sqrt 8` times the
//! actual coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{IntMatrix, RatMatrix};
use crate::lattice::Lattice;
use crate::rssd::{IsometryMap, RssdError};

pub const LEECH_SCALE: i64 = 8;
const ALL: u32 = (1 << 24) - 1;

#[derive(Debug, thiserror::Error)]
pub enum LeechError {
    #[error("{0:#08x} is not an octad")]
    NotOctad(u32),
    #[error("{0:#08x} is not a Golay codeword")]
    NotCodeword(u32),
    #[error("permutation does not preserve the Golay code")]
    NotAutomorphism,
    #[error("vector has {0} coordinates, expected 24")]
    Length(usize),
    #[error(transparent)]
    Rssd(#[from] RssdError),
}

pub fn mog_index(row: usize, col: usize) -> usize {
    4 * col + row
}

/// `(row, col)` of a coordinate.
pub fn mog_position(i: usize) -> (usize, usize) {
    (i % 4, i / 4)
}

// GF(4) as 0, 1, w, w-bar = 0, 1, 2, 3; addition is xor.
fn gf4_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    let log = |x: u8| (x - 1) as usize;
    [1, 2, 3][(log(a) + log(b)) % 3]
}

fn hexacode() -> Vec<[u8; 6]> {
    let mut words = Vec::with_capacity(64);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let phi = |x: u8| gf4_mul(a, gf4_mul(x, x)) ^ gf4_mul(b, x) ^ c;
                words.push([a, b, c, phi(1), phi(2), phi(3)]);
            }
        }
    }
    words
}

/// The binary Golay code as 24-bit masks.
#[derive(Clone, Debug)]
pub struct GolayCode {
    generator: Vec<u32>,
    words: Vec<u32>,
}

impl GolayCode {
    /// MOG description: every column has the parity of the top row, and
    /// the column scores (sum of the GF(4) row labels 0, 1, w, w-bar of
    /// the set entries) form a hexacode word.
    fn build() -> GolayCode {
        // column patterns indexed by (score, parity)
        let mut patterns: [[Vec<u32>; 2]; 4] = Default::default();
        for bits in 0u32..16 {
            let mut score = 0u8;
            for r in 0..4 {
                if bits >> r & 1 == 1 {
                    score ^= r as u8;
                }
            }
            patterns[score as usize][(bits.count_ones() % 2) as usize].push(bits);
        }
        let mut words = Vec::with_capacity(4096);
        for h in hexacode() {
            for parity in 0..2 {
                let mut partial = vec![0u32];
                for (c, &score) in h.iter().enumerate() {
                    let mut next = Vec::new();
                    for &w in &partial {
                        for &p in &patterns[score as usize][parity] {
                            next.push(w | p << (4 * c));
                        }
                    }
                    partial = next;
                }
                let top: u32 = (0..6).map(|c| 1u32 << mog_index(0, c)).sum();
                words.extend(partial.into_iter().filter(|w| (w & top).count_ones() as usize % 2 == parity));
            }
        }
        words.sort_unstable();
        words.dedup();
        let generator = gf2_basis(&words);
        GolayCode { generator, words }
    }

    pub fn generator(&self) -> &[u32] {
        &self.generator
    }

    /// All 4096 codewords in increasing order.
    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn contains(&self, w: u32) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        let mut d = BTreeMap::new();
        for w in &self.words {
            *d.entry(w.count_ones()).or_insert(0) += 1;
        }
        d
    }

    pub fn octads(&self) -> Vec<u32> {
        self.words.iter().copied().filter(|w| w.count_ones() == 8).collect()
    }

    /// Whether `perm` (coordinate `i` goes to `perm[i]`) maps the code to
    /// itself.
    pub fn is_automorphism(&self, perm: &[u8; 24]) -> bool {
        self.generator.iter().all(|&w| self.contains(permute_mask(w, perm)))
    }
}

fn gf2_basis(words: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &w in words {
        let mut v = w;
        for &b in &basis {
            let top = 31 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

pub fn permute_mask(w: u32, perm: &[u8; 24]) -> u32 {
    (0..24).filter(|&i| w >> i & 1 == 1).map(|i| 1u32 << perm[i]).sum()
}

pub fn golay() -> &'static GolayCode {
    static CODE: OnceLock<GolayCode> = OnceLock::new();
    CODE.get_or_init(GolayCode::build)
}

pub fn octads() -> &'static [u32] {
    static OCTADS: OnceLock<Vec<u32>> = OnceLock::new();
    OCTADS.get_or_init(|| golay().octads())
}

fn mask_of(cells: &[(usize, usize)]) -> u32 {
    cells.iter().map(|&(r, c)| 1u32 << mog_index(r, c)).sum()
}

/// First two MOG columns.
pub fn octad_o1() -> u32 {
    mask_of(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (3, 1)])
}

/// Top row of columns 2-6 and rows 2-4 of column 1.
pub fn octad_o2() -> u32 {
    mask_of(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (2, 0), (3, 0)])
}

pub fn mask_to_indices(w: u32) -> Vec<usize> {
    (0..24).filter(|&i| w >> i & 1 == 1).collect()
}

/// A 4x6 array view of a 24-vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MogArray(pub [[i64; 6]; 4]);

impl MogArray {
    pub fn from_vector(x: &[i64]) -> Result<MogArray, LeechError> {
        if x.len() != 24 {
            return Err(LeechError::Length(x.len()));
        }
        let mut a = [[0; 6]; 4];
        for (i, &v) in x.iter().enumerate() {
            let (r, c) = mog_position(i);
            a[r][c] = v;
        }
        Ok(MogArray(a))
    }

    pub fn to_vector(&self) -> Vec<i64> {
        (0..24)
            .map(|i| {
                let (r, c) = mog_position(i);
                self.0[r][c]
            })
            .collect()
    }
}

impl fmt::Display for MogArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.0.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Codeword display: `*` for set positions, `.` otherwise.
pub fn mog_set_display(w: u32) -> String {
    let mut s = String::new();
    for r in 0..4 {
        let cells: Vec<&str> = (0..6)
            .map(|c| if w >> mog_index(r, c) & 1 == 1 { "*" } else { "." })
            .collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

/// Congruence test for membership in the Leech lattice (scale 8
/// coordinates).
pub fn leech_contains(x: &[i64]) -> bool {
    if x.len() != 24 {
        return false;
    }
    let m = x[0].rem_euclid(2);
    if x.iter().any(|v| v.rem_euclid(2) != m) {
        return false;
    }
    let sum: i64 = x.iter().sum();
    if sum.rem_euclid(8) != 4 * m {
        return false;
    }
    let target = if m == 0 { 2 } else { 3 };
    let support: u32 = (0..24).filter(|&i| x[i].rem_euclid(4) == target).map(|i| 1u32 << i).sum();
    golay().contains(support)
}

fn build_leech() -> Lattice {
    let code = golay();
    let mut rows: Vec<Vec<i64>> = code
        .generator()
        .iter()
        .map(|&w| (0..24).map(|i| 2 * i64::from(w >> i & 1)).collect())
        .collect();
    let mut v = vec![1i64; 24];
    v[0] = -3;
    rows.push(v);
    for i in 0..23 {
        let mut r = vec![0; 24];
        r[i] = 4;
        r[i + 1] = -4;
        rows.push(r);
    }
    let mut r = vec![0; 24];
    r[0] = 4;
    r[1] = 4;
    rows.push(r);
    let l = Lattice::from_generators(
        24,
        BigRational::from_integer(LEECH_SCALE.into()),
        &IntMatrix::from_rows(24, &rows),
    )
    .expect("valid generators");
    assert_eq!(l.rank(), 24);
    assert!(l.is_even() && l.det() == BigRational::from_integer(1.into()), "Leech certificate failed");
    l
}

pub fn leech() -> Arc<Lattice> {
    static LEECH: OnceLock<Arc<Lattice>> = OnceLock::new();
    LEECH.get_or_init(|| Arc::new(build_leech())).clone()
}

/// `E(O)`: vectors of the Leech lattice supported on the octad `O`.
pub fn e_octad(octad: u32) -> Result<Lattice, LeechError> {
    if octad & !ALL != 0 || octad.count_ones() != 8 || !golay().contains(octad) {
        return Err(LeechError::NotOctad(octad));
    }
    let rows: Vec<Vec<i64>> = mask_to_indices(octad)
        .into_iter()
        .map(|i| {
            let mut r = vec![0; 24];
            r[i] = 1;
            r
        })
        .collect();
    let coord = Lattice::new(24, BigRational::from_integer(LEECH_SCALE.into()), IntMatrix::from_rows(24, &rows))
        .expect("independent");
    let l = leech();
    Ok(l.intersect(&coord).expect("same space"))
}

/// Matrix of `X -> A X D` with `A = (J - 2I)/2` and `D = diag(-1,1,1,1,1,1)`.
pub fn xi_map8() -> Map8 {
    let mut m = Map8::zero();
    for i in 0..24 {
        let (r, c) = mog_position(i);
        let d = if c == 0 { -1 } else { 1 };
        for r2 in 0..4 {
            let a = if r2 == r { -4 } else { 4 };
            m.set(i, mog_index(r2, c), a * d);
        }
    }
    m
}

pub fn xi() -> IsometryMap {
    IsometryMap::certify(xi_map8().to_rat(), leech()).expect("xi preserves the Leech lattice")
}

/// Sign change on a codeword, followed by a coordinate permutation:
/// `x -> y` with `y[perm[i]] = s_i x[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub perm: [u8; 24],
    pub signs: u32,
}

impl Monomial {
    pub fn identity() -> Monomial {
        Monomial {
            perm: std::array::from_fn(|i| i as u8),
            signs: 0,
        }
    }

    pub fn map8(&self) -> Map8 {
        let mut m = Map8::zero();
        for i in 0..24 {
            let s = if self.signs >> i & 1 == 1 { -8 } else { 8 };
            m.set(i, self.perm[i] as usize, s);
        }
        m
    }

    pub fn certified(&self) -> Result<IsometryMap, LeechError> {
        if !golay().contains(self.signs) {
            return Err(LeechError::NotCodeword(self.signs));
        }
        if !golay().is_automorphism(&self.perm) {
            return Err(LeechError::NotAutomorphism);
        }
        Ok(IsometryMap::certify(self.map8().to_rat(), leech())?)
    }
}

/// Random element of the automorphism group of the code, by randomized
/// backtracking on images of points. A partial map is kept only if every
/// octad meeting the domain in at least five points is sent into an octad.
pub fn random_automorphism<R: Rng + ?Sized>(rng: &mut R) -> [u8; 24] {
    let five = five_point_octads();
    let mut perm = [u8::MAX; 24];
    let mut used = 0u32;
    let found = extend(0, &mut perm, &mut used, five, rng);
    assert!(found, "backtracking always finds an automorphism");
    debug_assert!(golay().is_automorphism(&perm));
    perm
}

fn extend<R: Rng + ?Sized>(
    i: usize,
    perm: &mut [u8; 24],
    used: &mut u32,
    five: &HashMap<u32, u32>,
    rng: &mut R,
) -> bool {
    if i == 24 {
        return true;
    }
    let mut cands: Vec<u8> = (0..24u8).filter(|&q| *used >> q & 1 == 0).collect();
    cands.shuffle(rng);
    for q in cands {
        perm[i] = q;
        *used |= 1 << q;
        if consistent(i, perm, five) && extend(i + 1, perm, used, five, rng) {
            return true;
        }
        *used &= !(1 << q);
        perm[i] = u8::MAX;
    }
    false
}

fn consistent(newest: usize, perm: &[u8; 24], five: &HashMap<u32, u32>) -> bool {
    let domain: u32 = (1u32 << (newest + 1)) - 1;
    for &o in octads() {
        if o >> newest & 1 == 0 {
            continue;
        }
        let inter = o & domain;
        if inter.count_ones() < 5 {
            continue;
        }
        let pts = mask_to_indices(inter);
        let img5: u32 = pts[..5].iter().map(|&p| 1u32 << perm[p]).sum();
        let target = five[&img5];
        if pts.iter().any(|&p| target >> perm[p] & 1 == 0) {
            return false;
        }
    }
    true
}

/// Every 5-subset of the 24 points lies in exactly one octad.
fn five_point_octads() -> &'static HashMap<u32, u32> {
    static FIVE: OnceLock<HashMap<u32, u32>> = OnceLock::new();
    FIVE.get_or_init(|| {
        let mut m = HashMap::with_capacity(759 * 56);
        for &o in octads() {
            let pts = mask_to_indices(o);
            for a in 0..8 {
                for b in a + 1..8 {
                    for c in b + 1..8 {
                        // the complement of three points in the octad is a 5-set
                        let drop = (1u32 << pts[a]) | (1 << pts[b]) | (1 << pts[c]);
                        m.insert(o & !drop, o);
                    }
                }
            }
        }
        m
    })
}

/// Named search moves on the Leech lattice: code automorphisms found by
/// backtracking from a fixed seed and sign changes on the generator
/// codewords.
pub fn monomial_maps() -> Vec<(String, Monomial)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(24);
    let mut out = Vec::new();
    for k in 0..4 {
        out.push((
            format!("perm{k}"),
            Monomial {
                perm: random_automorphism(&mut rng),
                signs: 0,
            },
        ));
    }
    for (k, &w) in golay().generator().iter().enumerate() {
        out.push((
            format!("sign{k}"),
            Monomial {
                perm: Monomial::identity().perm,
                signs: w,
            },
        ));
    }
    out
}

/// A 24x24 matrix with entries in `(1/8)Z`, stored as eight times its
/// entries. Every isometry of the Leech lattice has this form in these
/// coordinates, so products stay exact in `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Map8 {
    m: Vec<i64>,
}

impl Map8 {
    pub fn zero() -> Map8 {
        Map8 { m: vec![0; 576] }
    }

    pub fn identity() -> Map8 {
        let mut m = Map8::zero();
        for i in 0..24 {
            m.set(i, i, 8);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.m[24 * i + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.m[24 * i + j] = v;
    }

    /// `self` then `other`, or `None` if the product leaves `(1/8)Z`.
    pub fn checked_mul(&self, other: &Map8) -> Option<Map8> {
        let mut out = Map8::zero();
        for i in 0..24 {
            for k in 0..24 {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..24 {
                    out.m[24 * i + j] += a * other.get(k, j);
                }
            }
        }
        for v in &mut out.m {
            if *v % 8 != 0 {
                return None;
            }
            *v /= 8;
        }
        Some(out)
    }

    pub fn mul(&self, other: &Map8) -> Map8 {
        self.checked_mul(other).expect("product of Leech isometries")
    }

    pub fn transpose(&self) -> Map8 {
        let mut t = Map8::zero();
        for i in 0..24 {
            for j in 0..24 {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == Map8::identity()
    }

    /// Smallest `k <= cap` with `self^k = 1`.
    pub fn order(&self, cap: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Row vector times the map; `None` if the image is not integral.
    pub fn apply(&self, x: &[i64]) -> Option<Vec<i64>> {
        let mut y = [0i64; 24];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, yj) in y.iter_mut().enumerate() {
                *yj += xi * self.get(i, j);
            }
        }
        y.iter()
            .map(|v| (v % 8 == 0).then_some(v / 8))
            .collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        let rows: Vec<Vec<BigInt>> = (0..24).map(|i| (0..24).map(|j| self.get(i, j).into()).collect()).collect();
        RatMatrix::new(IntMatrix::from_big_rows(24, rows), 8.into())
    }
}

/// One step of a word in Leech isometries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordStep {
    Xi,
    Perm(Vec<u8>),
    Sign(u32),
}

impl WordStep {
    pub fn map8(&self) -> Result<Map8, LeechError> {
        Ok(match self {
            WordStep::Xi => xi_map8(),
            WordStep::Perm(p) => {
                let perm: [u8; 24] = p.as_slice().try_into().map_err(|_| LeechError::Length(p.len()))?;
                if perm.iter().any(|&q| q >= 24) || !golay().is_automorphism(&perm) {
                    return Err(LeechError::NotAutomorphism);
                }
                Monomial { perm, signs: 0 }.map8()
            }
            WordStep::Sign(w) => {
                if !golay().contains(*w) {
                    return Err(LeechError::NotCodeword(*w));
                }
                Monomial {
                    perm: Monomial::identity().perm,
                    signs: *w,
                }
                .map8()
            }
        })
    }
}

/// Product of the steps, left to right.
pub fn word_map8(word: &[WordStep]) -> Result<Map8, LeechError> {
    let mut m = Map8::identity();
    for s in word {
        m = m.mul(&s.map8()?);
    }
    Ok(m)
}

pub fn word_isometry(word: &[WordStep]) -> Result<IsometryMap, LeechError> {
    Ok(IsometryMap::certify(word_map8(word)?.to_rat(), leech())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rssd;
    use crate::shortvec;
    use rand::SeedableRng;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn golay_weights() {
        let d = golay().weight_distribution();
        let want: BTreeMap<u32, usize> = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)].into();
        assert_eq!(d, want);
        assert_eq!(golay().generator().len(), 12);
        assert_eq!(octads().len(), 759);
    }

    #[test]
    fn golay_is_self_dual() {
        let g = golay().generator();
        for &a in g {
            for &b in g {
                assert_eq!((a & b).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn frame_octads_are_codewords() {
        assert!(golay().contains(octad_o1()));
        assert!(golay().contains(octad_o2()));
        assert_eq!(octad_o1(), 0xff);
    }

    #[test]
    fn mog_round_trip() {
        let x: Vec<i64> = (0..24).collect();
        let a = MogArray::from_vector(&x).unwrap();
        assert_eq!(a.0[1][0], 1);
        assert_eq!(a.0[0][1], 4);
        assert_eq!(a.to_vector(), x);
        assert!(a.to_string().starts_with("[  0  4  8 12 16 20 ]"));
        assert_eq!(mog_set_display(octad_o1()).lines().next(), Some("* * . . . ."));
    }

    #[test]
    fn leech_certificate() {
        let l = leech();
        assert_eq!(l.rank(), 24);
        assert!(l.is_even());
        assert_eq!(l.det(), BigRational::from_integer(1.into()));
        assert!(shortvec::is_rootless(&l).unwrap());
    }

    #[test]
    fn leech_membership_examples() {
        assert!(leech_contains(&[0; 24]));
        let mut e = [0i64; 24];
        e[0] = 1;
        assert!(!leech_contains(&e));
        let sample: Vec<i64> = (0..24).map(|i| if i < 8 { 2 } else { 0 }).collect();
        assert!(leech_contains(&sample));
        assert_eq!(leech().norm(&big(&sample)), BigRational::from_integer(4.into()));
        let mut beta1 = [0i64; 24];
        beta1[mog_index(0, 0)] = 4;
        beta1[mog_index(0, 1)] = -4;
        assert!(leech_contains(&beta1));
    }

    #[test]
    fn congruences_agree_with_basis() {
        let l = leech();
        let basis = l.basis().to_i64_rows();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let mut x = vec![0i64; 24];
            for b in &basis {
                let c: i64 = rng.gen_range(-2..=2);
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += c * bi;
                }
            }
            assert!(leech_contains(&x));
            assert!(l.contains_vector(&big(&x)));
            let i = rng.gen_range(0..24);
            let mut y = x.clone();
            y[i] += rng.gen_range(1..8);
            assert_eq!(leech_contains(&y), l.contains_vector(&big(&y)));
            let z: Vec<i64> = (0..24).map(|_| rng.gen_range(-3..=3)).collect();
            assert_eq!(leech_contains(&z), l.contains_vector(&big(&z)));
        }
    }

    #[test]
    fn octad_lattice_is_ee8() {
        let e = e_octad(octad_o1()).unwrap();
        let ee8 = crate::catalog::lattice(&crate::catalog::CatalogId::EE(8)).unwrap();
        assert_eq!(e.fingerprint(6).unwrap(), ee8.fingerprint(6).unwrap());
        assert!(rssd::rssd_check(&leech(), &e).unwrap());
        assert!(e_octad(0xfff).is_err());
    }

    #[test]
    fn disjoint_octads_are_orthogonal() {
        let o1 = octad_o1();
        let other = *octads().iter().find(|&&o| o & o1 == 0).unwrap();
        let a = e_octad(o1).unwrap();
        let b = e_octad(other).unwrap();
        assert!(a.cross_gram(a.basis(), b.basis()).numerator().is_zero());
    }

    #[test]
    fn xi_preserves_leech() {
        let x = xi();
        assert!(x.matrix().mul(&x.matrix().transpose()).is_identity());
        let x2 = x.pow(2);
        assert!(IsometryMap::certify(x2.matrix().clone(), leech()).is_ok());
        assert_eq!(xi_map8().order(12), x.order(12));
    }

    #[test]
    fn random_automorphisms_preserve_octads() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let p = random_automorphism(&mut rng);
            assert!(octads().iter().all(|&o| golay().contains(permute_mask(o, &p))));
        }
    }

    #[test]
    fn monomial_moves_certify() {
        for (name, m) in monomial_maps() {
            assert!(m.certified().is_ok(), "{name}");
        }
        let minus = Monomial {
            perm: Monomial::identity().perm,
            signs: ALL,
        };
        assert_eq!(minus.map8().to_rat(), RatMatrix::identity(24).neg());
        let flip = Monomial {
            perm: Monomial::identity().perm,
            signs: octad_o1(),
        };
        assert!(flip.certified().is_ok());
    }

    #[test]
    fn word_steps_serialize() {
        let w = vec![WordStep::Xi, WordStep::Sign(0xff)];
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"["xi",{"sign":255}]"#);
        let back: Vec<WordStep> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(word_isometry(&w).is_ok());
        assert!(WordStep::Sign(1).map8().is_err());
    }
}
