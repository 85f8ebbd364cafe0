//! Quaternions, octonions and the 480 octonion multiplication tables.

use core::cmp::Ordering;
use core::hash::Hash;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::exactfield::{Rational, TowerScalar};
use crate::linalg::{Matrix, Vector};
use crate::{Error, Result};

/// w + x·e₁ + y·e₂ + z·e₃ with e₁e₂ = e₃.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub c: [TowerScalar; 4],
}

impl Quaternion {
    pub fn new(w: TowerScalar, x: TowerScalar, y: TowerScalar, z: TowerScalar) -> Self {
        Quaternion { c: [w, x, y, z] }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        Quaternion { c: v.map(TowerScalar::from_int) }
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn from_vector(v: &Vector) -> Result<Self> {
        if v.len() != 4 {
            return Err(Error::Shape(format!("quaternion from length {}", v.len())));
        }
        Ok(Quaternion { c: core::array::from_fn(|i| v[i].clone()) })
    }

    pub fn to_vector(&self) -> Vector {
        Vector(self.c.to_vec())
    }

    pub fn conj(&self) -> Self {
        Quaternion { c: [self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3]] }
    }

    pub fn norm2(&self) -> TowerScalar {
        let mut s = TowerScalar::zero();
        for x in &self.c {
            if !x.is_zero() {
                s += &x.square();
            }
        }
        s
    }

    pub fn dot(&self, o: &Self) -> TowerScalar {
        let mut s = TowerScalar::zero();
        for (a, b) in self.c.iter().zip(&o.c) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    pub fn scale(&self, s: &TowerScalar) -> Self {
        Quaternion { c: core::array::from_fn(|i| &self.c[i] * s) }
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(TowerScalar::is_zero)
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.conj().scale(&self.norm2().inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> [f64; 4] {
        core::array::from_fn(|i| self.c[i].to_f64())
    }

    pub fn value_cmp(&self, o: &Self) -> Ordering {
        for (a, b) in self.c.iter().zip(&o.c) {
            let x = a.cmp_value(b);
            if x.is_ne() {
                return x;
            }
        }
        Ordering::Equal
    }
}

impl core::fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(self.c.iter()).finish()
    }
}

fn acc(s: &mut TowerScalar, a: &TowerScalar, b: &TowerScalar, neg: bool) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    let p = a * b;
    if neg {
        *s -= &p;
    } else {
        *s += &p;
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let mut w = TowerScalar::zero();
        acc(&mut w, a0, b0, false);
        acc(&mut w, a1, b1, true);
        acc(&mut w, a2, b2, true);
        acc(&mut w, a3, b3, true);
        let mut x = TowerScalar::zero();
        acc(&mut x, a0, b1, false);
        acc(&mut x, a1, b0, false);
        acc(&mut x, a2, b3, false);
        acc(&mut x, a3, b2, true);
        let mut y = TowerScalar::zero();
        acc(&mut y, a0, b2, false);
        acc(&mut y, a1, b3, true);
        acc(&mut y, a2, b0, false);
        acc(&mut y, a3, b1, false);
        let mut z = TowerScalar::zero();
        acc(&mut z, a0, b3, false);
        acc(&mut z, a1, b2, false);
        acc(&mut z, a2, b1, true);
        acc(&mut z, a3, b0, false);
        Quaternion { c: [w, x, y, z] }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion { c: core::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion { c: core::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { c: core::array::from_fn(|i| -&self.c[i]) }
    }
}

/// Signed structure constants: `e_a·e_b = sign[a][b]·e_{idx[a][b]}`, index 0 the real unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OctTable {
    pub triads: [[u8; 3]; 7],
    pub idx: [[u8; 8]; 8],
    pub sign: [[i8; 8]; 8],
}

impl OctTable {
    /// Table from 7 oriented triads (a,b,c) meaning e_a·e_b = e_c.
    ///
    /// Only the Steiner-system condition is checked here; see [`select_table`]
    /// for the full validity filter.
    pub fn from_triads(triads: [[u8; 3]; 7]) -> Result<Self> {
        if !is_sts(&triads) {
            return Err(Error::Invalid(format!("triads {:?} are not a Steiner triple system", triads)));
        }
        let mut idx = [[0u8; 8]; 8];
        let mut sign = [[0i8; 8]; 8];
        for a in 0..8 {
            idx[0][a] = a as u8;
            idx[a][0] = a as u8;
            sign[0][a] = 1;
            sign[a][0] = 1;
            if a > 0 {
                idx[a][a] = 0;
                sign[a][a] = -1;
            }
        }
        for t in &triads {
            let [a, b, c] = t.map(usize::from);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                idx[x][y] = z as u8;
                sign[x][y] = 1;
                idx[y][x] = z as u8;
                sign[y][x] = -1;
            }
        }
        Ok(OctTable { triads, idx, sign })
    }

    /// Product of integer coordinate vectors.
    pub fn mul_int(&self, x: &[i64; 8], y: &[i64; 8]) -> [i64; 8] {
        let mut out = [0i64; 8];
        for a in 0..8 {
            if x[a] == 0 {
                continue;
            }
            for b in 0..8 {
                if y[b] == 0 {
                    continue;
                }
                out[self.idx[a][b] as usize] += self.sign[a][b] as i64 * x[a] * y[b];
            }
        }
        out
    }

    /// Sign matrix of e_a·e_b over the full 8×8 basis.
    pub fn sign_matrix(&self) -> [[i8; 8]; 8] {
        self.sign
    }
}

fn is_sts(triads: &[[u8; 3]; 7]) -> bool {
    let mut seen = [[false; 8]; 8];
    for t in triads {
        if t.iter().any(|&x| x == 0 || x > 7) {
            return false;
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let (a, b) = (t[i] as usize, t[j] as usize);
            if a == b || seen[a][b] {
                return false;
            }
            seen[a][b] = true;
            seen[b][a] = true;
        }
    }
    true
}

/// Exact norm composition on every pair of two-term basis sums e_a + e_b.
///
/// Single basis elements always compose (their products are signed units),
/// so the sums are the smallest inputs that see the signs.
pub fn passes_composition(t: &OctTable) -> bool {
    let mut probes = Vec::with_capacity(28);
    for a in 0..8 {
        for b in a + 1..8 {
            let mut v = [0i64; 8];
            v[a] = 1;
            v[b] = 1;
            probes.push(v);
        }
    }
    for x in &probes {
        for y in &probes {
            let p = t.mul_int(x, y);
            if p.iter().map(|c| c * c).sum::<i64>() != 4 {
                return false;
            }
        }
    }
    true
}

/// All Steiner triple systems on {1..7}, each as sorted triples in sorted order.
pub fn enumerate_sts() -> Vec<[[u8; 3]; 7]> {
    fn rec(cov: &mut [[bool; 8]; 8], cur: &mut Vec<[u8; 3]>, out: &mut Vec<[[u8; 3]; 7]>) {
        let next = (1..8u8).flat_map(|a| (a + 1..8).map(move |b| (a, b))).find(|&(a, b)| !cov[a as usize][b as usize]);
        let Some((a, b)) = next else {
            let mut s: [[u8; 3]; 7] = cur.clone().try_into().expect("seven triples");
            s.sort();
            out.push(s);
            return;
        };
        for c in b + 1..8 {
            let (ai, bi, ci) = (a as usize, b as usize, c as usize);
            if cov[ai][ci] || cov[bi][ci] {
                continue;
            }
            for (x, y) in [(ai, bi), (ai, ci), (bi, ci)] {
                cov[x][y] = true;
                cov[y][x] = true;
            }
            cur.push([a, b, c]);
            rec(cov, cur, out);
            cur.pop();
            for (x, y) in [(ai, bi), (ai, ci), (bi, ci)] {
                cov[x][y] = false;
                cov[y][x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut [[false; 8]; 8], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The 480 valid tables: 30 systems × the 16 orientations passing composition.
pub fn enumerate_octonion_tables() -> Vec<OctTable> {
    let mut out = Vec::new();
    for sys in enumerate_sts() {
        for mask in 0u32..128 {
            let triads: [[u8; 3]; 7] = core::array::from_fn(|i| {
                let [a, b, c] = sys[i];
                if mask >> i & 1 == 1 {
                    [a, c, b]
                } else {
                    [a, b, c]
                }
            });
            let t = OctTable::from_triads(triads).expect("enumerated system");
            if passes_composition(&t) {
                out.push(t);
            }
        }
    }
    out
}

/// Validated table from oriented triads.
pub fn select_table(triads: [[u8; 3]; 7]) -> Result<OctTable> {
    let t = OctTable::from_triads(triads)?;
    if !passes_composition(&t) {
        return Err(Error::Invalid(format!("triads {:?} do not give a composition algebra", triads)));
    }
    Ok(t)
}

/// Cayley–Dickson doubling of the standard quaternions.
pub const DEFAULT_TRIADS: [[u8; 3]; 7] =
    [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

/// The alternative, palindromic triad set.
pub const PALINDROMIC_TRIADS: [[u8; 3]; 7] =
    [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 6, 4], [2, 5, 7], [3, 4, 7], [3, 5, 6]];

pub fn default_table() -> OctTable {
    select_table(DEFAULT_TRIADS).expect("default triads")
}

pub fn palindromic_example_table() -> OctTable {
    select_table(PALINDROMIC_TRIADS).expect("palindromic triads")
}

/// Products of two units of {e₄..e₇} stay in span{1, e₁, e₂, e₃}.
pub fn is_quadrant_closed(t: &OctTable) -> bool {
    (4..8).all(|a| (4..8).all(|b| t.idx[a][b] < 4))
}

/// Each row of the sign matrix reads the same reversed, up to one overall sign.
pub fn is_palindromic_table(t: &OctTable) -> bool {
    t.sign.iter().all(|row| {
        let same = (0..8).all(|j| row[7 - j] == row[j]);
        let flip = (0..8).all(|j| row[7 - j] == -row[j]);
        same || flip
    })
}

/// Octonion over basis (1, e₁..e₇).
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Octonion {
    pub c: [TowerScalar; 8],
}

impl Octonion {
    pub fn basis(i: usize) -> Self {
        let mut o = Octonion::default();
        o.c[i] = TowerScalar::one();
        o
    }

    pub fn real(x: TowerScalar) -> Self {
        let mut o = Octonion::default();
        o.c[0] = x;
        o
    }

    /// Embedding along the first triad (1,2,3).
    pub fn from_quaternion(q: &Quaternion) -> Self {
        let mut o = Octonion::default();
        o.c[..4].clone_from_slice(&q.c);
        o
    }

    pub fn conj(&self) -> Self {
        Octonion { c: core::array::from_fn(|i| if i == 0 { self.c[0].clone() } else { -&self.c[i] }) }
    }

    pub fn norm2(&self) -> TowerScalar {
        let mut s = TowerScalar::zero();
        for x in &self.c {
            if !x.is_zero() {
                s += &x.square();
            }
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        Octonion { c: core::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Octonion { c: core::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }

    pub fn scale(&self, s: &TowerScalar) -> Self {
        Octonion { c: core::array::from_fn(|i| &self.c[i] * s) }
    }

    pub fn to_f64(&self) -> [f64; 8] {
        core::array::from_fn(|i| self.c[i].to_f64())
    }
}

/// The ∘ product under table `t`.
pub fn oct_mul(x: &Octonion, y: &Octonion, t: &OctTable) -> Octonion {
    let mut out = Octonion::default();
    for a in 0..8 {
        if x.c[a].is_zero() {
            continue;
        }
        for b in 0..8 {
            if y.c[b].is_zero() {
                continue;
            }
            let p = &x.c[a] * &y.c[b];
            let k = t.idx[a][b] as usize;
            if t.sign[a][b] > 0 {
                out.c[k] += &p;
            } else {
                out.c[k] -= &p;
            }
        }
    }
    out
}

/// Elementwise ∘ across two lists, all combinations, deduplicated in first-seen order.
pub fn oct_mul_lists(xs: &[Octonion], ys: &[Octonion], t: &OctTable) -> Vec<Octonion> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            let p = oct_mul(x, y, t);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// (xy)z − x(yz).
pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion, t: &OctTable) -> Octonion {
    oct_mul(&oct_mul(x, y, t), z, t).sub(&oct_mul(x, &oct_mul(y, z, t), t))
}

/// [p,q]:r over lists: p∘(r∘q), or (p∘r)∘q when `left`, every combination,
/// deduplicated in first-seen order.
pub fn prq<T, F>(ps: &[T], rs: &[T], qs: &[T], left: bool, mul: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in ps {
        for r in rs {
            for q in qs {
                let v = if left { mul(&mul(p, r), q) } else { mul(p, &mul(r, q)) };
                if seen.insert(v.clone()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn prq_quat(ps: &[Quaternion], rs: &[Quaternion], qs: &[Quaternion], left: bool) -> Vec<Quaternion> {
    prq(ps, rs, qs, left, |a, b| a * b)
}

/// Results of the binary operator set applied to one pair.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorRecord {
    pub conj_x: Octonion,
    pub scalar_plus: Octonion,
    pub scalar_minus: Octonion,
    pub commutator: Octonion,
    pub anti_commutator: Octonion,
    pub kronecker: Matrix,
}

/// ½(x ȳ + y x̄): the inner product as a real octonion.
pub fn scalar_plus(x: &Octonion, y: &Octonion, t: &OctTable) -> Octonion {
    oct_mul(x, &y.conj(), t).add(&oct_mul(y, &x.conj(), t)).scale(&TowerScalar::from_ratio(1, 2))
}

/// ½(x ȳ − y x̄): the imaginary part of x ȳ.
pub fn scalar_minus(x: &Octonion, y: &Octonion, t: &OctTable) -> Octonion {
    oct_mul(x, &y.conj(), t).sub(&oct_mul(y, &x.conj(), t)).scale(&TowerScalar::from_ratio(1, 2))
}

pub fn commutator(x: &Octonion, y: &Octonion, t: &OctTable) -> Octonion {
    oct_mul(x, y, t).sub(&oct_mul(y, x, t))
}

pub fn anti_commutator(x: &Octonion, y: &Octonion, t: &OctTable) -> Octonion {
    oct_mul(x, y, t).add(&oct_mul(y, x, t))
}

/// D_{x,y}(z) = [[x,y],z] − 3((xy)z − x(yz)).
pub fn derivation(x: &Octonion, y: &Octonion, z: &Octonion, t: &OctTable) -> Octonion {
    commutator(&commutator(x, y, t), z, t).sub(&associator(x, y, z, t).scale(&TowerScalar::from_int(3)))
}

/// Outer product of coordinate vectors.
pub fn kronecker(x: &Octonion, y: &Octonion) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    for i in 0..8 {
        for j in 0..8 {
            m.set(i, j, &x.c[i] * &y.c[j]);
        }
    }
    m
}

pub fn algebra_operators(x: &Octonion, y: &Octonion, t: &OctTable) -> OperatorRecord {
    OperatorRecord {
        conj_x: x.conj(),
        scalar_plus: scalar_plus(x, y, t),
        scalar_minus: scalar_minus(x, y, t),
        commutator: commutator(x, y, t),
        anti_commutator: anti_commutator(x, y, t),
        kronecker: kronecker(x, y),
    }
}

/// e^{a + v} = eᵃ(cos|v| + v̂ sin|v|) in floating point.
pub fn oct_exp(x: &[f64; 8]) -> [f64; 8] {
    let a = x[0];
    let n = libm::sqrt(x[1..].iter().map(|v| v * v).sum::<f64>());
    let ea = libm::exp(a);
    let mut out = [0.0; 8];
    out[0] = ea * libm::cos(n);
    if n > 0.0 {
        let s = ea * libm::sin(n) / n;
        for i in 1..8 {
            out[i] = s * x[i];
        }
    }
    out
}

/// Rational coefficients of `x` in ℚ, if it has no irrational part.
pub fn rational_coords(x: &Octonion) -> Option<[Rational; 8]> {
    let mut out: [Rational; 8] = Default::default();
    for i in 0..8 {
        out[i] = x.c[i].as_rational()?.clone();
    }
    Some(out)
}
