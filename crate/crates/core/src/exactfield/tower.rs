use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use alloc::string::String;
use alloc::vec::Vec;

use super::rational::Rational;
use crate::Error;

/// Element of ℚ(√2,√5) as coefficients over (1, √2, √5, √10).
///
/// Index bits: bit 0 is √2, bit 1 is √5, so the product of basis elements
/// `i` and `j` lands on `i ^ j` scaled by the squares of the shared bits.
type K = [Rational; 4];

const K_FACTOR: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 2, 1, 2], [1, 1, 5, 5], [1, 2, 5, 10]];

fn k_zero() -> K {
    [Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO]
}

fn k_is_zero(a: &K) -> bool {
    a.iter().all(Rational::is_zero)
}

fn k_add(a: &K, b: &K) -> K {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2], &a[3] + &b[3]]
}

fn k_sub(a: &K, b: &K) -> K {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2], &a[3] - &b[3]]
}

fn k_neg(a: &K) -> K {
    [-&a[0], -&a[1], -&a[2], -&a[3]]
}

fn k_mul(a: &K, b: &K) -> K {
    let mut c = k_zero();
    for i in 0..4 {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..4 {
            if b[j].is_zero() {
                continue;
            }
            let mut t = &a[i] * &b[j];
            let f = K_FACTOR[i][j];
            if f != 1 {
                t = &t * &Rational::from_integer(f);
            }
            c[i ^ j] = &c[i ^ j] + &t;
        }
    }
    c
}

fn k_scale(a: &K, r: &Rational) -> K {
    [&a[0] * r, &a[1] * r, &a[2] * r, &a[3] * r]
}

/// φ·a with φ = (1+√5)/2.
fn k_mul_phi(a: &K) -> K {
    let half = Rational::new(1, 2);
    let five = Rational::from_integer(5);
    [
        &(&a[0] + &(&five * &a[2])) * &half,
        &(&a[1] + &(&five * &a[3])) * &half,
        &(&a[0] + &a[2]) * &half,
        &(&a[1] + &a[3]) * &half,
    ]
}

/// Conjugate under √2 ↦ −√2.
fn k_conj2(a: &K) -> K {
    [a[0].clone(), -&a[1], a[2].clone(), -&a[3]]
}

fn q5_inv(u: &Rational, v: &Rational) -> Result<(Rational, Rational), Error> {
    let n = &(u * u) - &(&Rational::from_integer(5) * &(v * v));
    let ni = n.recip()?;
    Ok((u * &ni, -&(v * &ni)))
}

fn k_inv(a: &K) -> Result<K, Error> {
    // a·conj2(a) lies in ℚ(√5)
    let c = k_conj2(a);
    let n = k_mul(a, &c);
    debug_assert!(n[1].is_zero() && n[3].is_zero());
    let (u, v) = q5_inv(&n[0], &n[2])?;
    Ok(k_mul(&c, &[u, Rational::ZERO, v, Rational::ZERO]))
}

/// Sign of u + v·√d over ℚ.
fn sign_quad(u: &Rational, v: &Rational, d: i64) -> i32 {
    let su = u.signum();
    let sv = v.signum();
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return if su == 0 { sv } else { su };
    }
    let diff = &(u * u) - &(&Rational::from_integer(d) * &(v * v));
    su * diff.signum()
}

/// Sign of an element of ℚ(√5).
fn sign_q5(u: &Rational, v: &Rational) -> i32 {
    sign_quad(u, v, 5)
}

fn k_sign(a: &K) -> i32 {
    // p + q√2 with p = a0 + a2√5, q = a1 + a3√5
    let sp = sign_q5(&a[0], &a[2]);
    let sq = sign_q5(&a[1], &a[3]);
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return if sp == 0 { sq } else { sp };
    }
    let p: K = [a[0].clone(), Rational::ZERO, a[2].clone(), Rational::ZERO];
    let q: K = [a[1].clone(), Rational::ZERO, a[3].clone(), Rational::ZERO];
    let p2 = k_mul(&p, &p);
    let q2 = k_scale(&k_mul(&q, &q), &Rational::from_integer(2));
    let d = k_sub(&p2, &q2);
    sp * sign_q5(&d[0], &d[2])
}

/// Float values of the eight basis elements.
fn basis_f64() -> [f64; 8] {
    let s2 = libm::sqrt(2.0);
    let s5 = libm::sqrt(5.0);
    let s10 = libm::sqrt(10.0);
    let sp = libm::sqrt((1.0 + s5) / 2.0);
    [1.0, s2, s5, s10, sp, s2 * sp, s5 * sp, s10 * sp]
}

/// Exact element of ℚ(√2,√5)(√φ).
///
/// Coefficients are over (1, √2, √5, √10, √φ, √2√φ, √5√φ, √10√φ). Internally the
/// value is a + b·√φ with a, b in ℚ(√2,√5).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TowerScalar {
    c: [Rational; 8],
}

impl TowerScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut t = Self::zero();
        t.c[0] = r;
        t
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d))
    }

    pub fn from_coeffs(c: [Rational; 8]) -> Self {
        TowerScalar { c }
    }

    fn basis(i: usize) -> Self {
        let mut t = Self::zero();
        t.c[i] = Rational::ONE;
        t
    }

    pub fn sqrt2() -> Self {
        Self::basis(1)
    }

    pub fn sqrt5() -> Self {
        Self::basis(2)
    }

    pub fn sqrt10() -> Self {
        Self::basis(3)
    }

    pub fn sqrt_phi() -> Self {
        Self::basis(4)
    }

    pub fn phi() -> Self {
        ts_from_parts(Rational::ZERO, Rational::ONE)
    }

    /// 1/φ = φ − 1.
    pub fn phi_inv() -> Self {
        ts_from_parts(-Rational::ONE, Rational::ONE)
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.c
    }

    fn parts(&self) -> (K, K) {
        let [a0, a1, a2, a3, b0, b1, b2, b3] = self.c.clone();
        ([a0, a1, a2, a3], [b0, b1, b2, b3])
    }

    fn from_parts_k(a: K, b: K) -> Self {
        let [a0, a1, a2, a3] = a;
        let [b0, b1, b2, b3] = b;
        TowerScalar { c: [a0, a1, a2, a3, b0, b1, b2, b3] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// The rational value when every irrational coefficient vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        let mut t = self.clone();
        for x in t.c.iter_mut() {
            if !x.is_zero() {
                *x = &*x * r;
            }
        }
        t
    }

    pub fn mul_phi(&self) -> Self {
        let (a, b) = self.parts();
        Self::from_parts_k(k_mul_phi(&a), k_mul_phi(&b))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by conjugating away √φ, then √2, then √5.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b) = self.parts();
        if k_is_zero(&b) {
            return Ok(Self::from_parts_k(k_inv(&a)?, k_zero()));
        }
        // (a + b√φ)(a − b√φ) = a² − φb²
        let n = k_sub(&k_mul(&a, &a), &k_mul_phi(&k_mul(&b, &b)));
        let ni = k_inv(&n)?;
        Ok(Self::from_parts_k(k_mul(&a, &ni), k_neg(&k_mul(&b, &ni))))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        let b = basis_f64();
        let mut s = 0.0;
        for i in 0..8 {
            if !self.c[i].is_zero() {
                s += self.c[i].to_f64() * b[i];
            }
        }
        s
    }

    /// Exact sign in {−1, 0, 1}.
    ///
    /// A float evaluation with a conservative error bound settles the common
    /// case; otherwise the sign is decided exactly down the tower.
    pub fn sign(&self) -> i32 {
        let b = basis_f64();
        let mut s = 0.0;
        let mut mag = 0.0;
        let mut nonzero = false;
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            nonzero = true;
            let t = self.c[i].to_f64() * b[i];
            s += t;
            mag += libm::fabs(t);
        }
        if !nonzero {
            return 0;
        }
        if s.is_finite() && mag.is_finite() && libm::fabs(s) > mag * 1e-12 && mag > 1e-250 {
            return if s > 0.0 { 1 } else { -1 };
        }
        self.exact_sign()
    }

    /// Sign decided without floating point.
    pub fn exact_sign(&self) -> i32 {
        let (a, b) = self.parts();
        let sa = k_sign(&a);
        let sb = k_sign(&b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // compare a² with φb²
        let d = k_sub(&k_mul(&a, &a), &k_mul_phi(&k_mul(&b, &b)));
        sa * k_sign(&d)
    }

    /// Numeric ordering.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Lexicographic order on coefficients; a total order used for
    /// deterministic output, unrelated to numeric size.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.c.cmp(&other.c)
    }

    /// The eight `num/den` fields in basis order.
    pub fn to_fields(&self) -> [String; 8] {
        core::array::from_fn(|i| alloc::format!("{}", self.c[i]))
    }

    pub fn from_fields<S: AsRef<str>>(fields: &[S]) -> Result<Self, Error> {
        if fields.len() != 8 {
            return Err(Error::Parse(alloc::format!(
                "expected 8 fields, got {}",
                fields.len()
            )));
        }
        let mut c: [Rational; 8] = Default::default();
        for (slot, f) in c.iter_mut().zip(fields) {
            *slot = f.as_ref().parse()?;
        }
        Ok(TowerScalar { c })
    }

    /// Fields joined by single spaces.
    pub fn encode(&self) -> String {
        let f = self.to_fields();
        let v: Vec<&str> = f.iter().map(String::as_str).collect();
        v.join(" ")
    }

    pub fn decode(s: &str) -> Result<Self, Error> {
        let v: Vec<&str> = s.split_whitespace().collect();
        Self::from_fields(&v)
    }

    /// The 8×8 rational matrix of y ↦ self·y in the coefficient basis.
    pub fn mul_matrix(&self) -> [[Rational; 8]; 8] {
        let mut m: [[Rational; 8]; 8] = Default::default();
        for j in 0..8 {
            let col = self * &Self::basis(j);
            for i in 0..8 {
                m[i][j] = col.c[i].clone();
            }
        }
        m
    }
}

/// a + b·φ.
pub fn ts_from_parts(a: Rational, b: Rational) -> TowerScalar {
    let half = &b * &Rational::new(1, 2);
    let mut t = TowerScalar::zero();
    t.c[0] = &a + &half;
    t.c[2] = half;
    t
}

pub fn ts_mul(x: &TowerScalar, y: &TowerScalar) -> TowerScalar {
    x * y
}

pub fn ts_inv(x: &TowerScalar) -> Result<TowerScalar, Error> {
    x.inv()
}

pub fn ts_sign(x: &TowerScalar) -> i32 {
    x.sign()
}

impl<'a> Add<&'a TowerScalar> for &'a TowerScalar {
    type Output = TowerScalar;
    fn add(self, rhs: &TowerScalar) -> TowerScalar {
        let mut t = self.clone();
        t += rhs;
        t
    }
}

impl<'a> AddAssign<&'a TowerScalar> for TowerScalar {
    fn add_assign(&mut self, rhs: &TowerScalar) {
        for i in 0..8 {
            if !rhs.c[i].is_zero() {
                self.c[i] = &self.c[i] + &rhs.c[i];
            }
        }
    }
}

impl<'a> SubAssign<&'a TowerScalar> for TowerScalar {
    fn sub_assign(&mut self, rhs: &TowerScalar) {
        for i in 0..8 {
            if !rhs.c[i].is_zero() {
                self.c[i] = &self.c[i] - &rhs.c[i];
            }
        }
    }
}

impl<'a> Sub<&'a TowerScalar> for &'a TowerScalar {
    type Output = TowerScalar;
    fn sub(self, rhs: &TowerScalar) -> TowerScalar {
        let mut t = self.clone();
        t -= rhs;
        t
    }
}

impl Neg for &TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        let mut t = self.clone();
        for x in t.c.iter_mut() {
            if !x.is_zero() {
                *x = -&*x;
            }
        }
        t
    }
}

impl Neg for TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        -&self
    }
}

impl<'a> Mul<&'a TowerScalar> for &'a TowerScalar {
    type Output = TowerScalar;
    fn mul(self, rhs: &TowerScalar) -> TowerScalar {
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        let bz = k_is_zero(&b);
        let dz = k_is_zero(&d);
        let mut lo = k_mul(&a, &c);
        if !bz && !dz {
            lo = k_add(&lo, &k_mul_phi(&k_mul(&b, &d)));
        }
        let hi = match (bz, dz) {
            (true, true) => k_zero(),
            (true, false) => k_mul(&a, &d),
            (false, true) => k_mul(&b, &c),
            (false, false) => k_add(&k_mul(&a, &d), &k_mul(&b, &c)),
        };
        TowerScalar::from_parts_k(lo, hi)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TowerScalar> for TowerScalar {
            type Output = TowerScalar;
            fn $m(self, rhs: TowerScalar) -> TowerScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a TowerScalar> for TowerScalar {
            type Output = TowerScalar;
            fn $m(self, rhs: &TowerScalar) -> TowerScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for TowerScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for TowerScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Debug for TowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TowerScalar {
    /// Human-readable sum such as `1/2 + 1/2·√5`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["", "√2", "√5", "√10", "√φ", "√2√φ", "√5√φ", "√10√φ"];
        let mut first = true;
        for i in 0..8 {
            let c = &self.c[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let text = if a.is_integer() { alloc::format!("{}", a.numer()) } else { alloc::format!("{}", a) };
            if i == 0 {
                f.write_str(&text)?;
            } else if a.is_one() {
                f.write_str(NAMES[i])?;
            } else {
                write!(f, "{}·{}", text, NAMES[i])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn phi_parts() {
        let phi = ts_from_parts(r(0, 1), r(1, 1));
        assert!((phi.to_f64() - 1.618_033_988_7).abs() < 1e-10);
        assert_eq!(ts_from_parts(r(1, 1), r(0, 1)), TowerScalar::one());
        let inv = ts_from_parts(r(-1, 1), r(1, 1));
        assert!(ts_mul(&inv, &phi).is_one());
        assert_eq!(phi.coeffs()[0], r(1, 2));
        assert_eq!(phi.coeffs()[2], r(1, 2));
    }

    #[test]
    fn defining_relations() {
        let phi = TowerScalar::phi();
        assert_eq!(&phi * &phi, &phi + &TowerScalar::one());
        let sp = TowerScalar::sqrt_phi();
        assert_eq!(&sp * &sp, phi);
        let two_sp = sp.scale(&r(2, 1));
        assert_eq!(&two_sp * &two_sp, phi.scale(&r(4, 1)));
        assert_eq!(&TowerScalar::sqrt2() * &TowerScalar::sqrt5(), TowerScalar::sqrt10());
        assert_eq!(phi.mul_phi(), &phi * &phi);
    }

    #[test]
    fn inverses() {
        assert!(TowerScalar::one().inv().unwrap().is_one());
        assert_eq!(TowerScalar::phi().inv().unwrap(), TowerScalar::phi_inv());
        let sp = TowerScalar::sqrt_phi();
        let expect = &sp * &TowerScalar::phi_inv();
        assert_eq!(sp.inv().unwrap(), expect);
        assert!((&sp * &expect).is_one());
        assert_eq!(TowerScalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(ts_sign(&TowerScalar::zero()), 0);
        let x = &TowerScalar::phi() - &TowerScalar::from_ratio(8, 5);
        assert_eq!(ts_sign(&x), 1);
        let y = &TowerScalar::sqrt2() - &TowerScalar::sqrt_phi().scale(&r(9, 8));
        assert_eq!(ts_sign(&y), -1);
        assert_eq!(y.exact_sign(), -1);
        // 2 − (81/64)φ decides the same comparison after squaring
        let z = &TowerScalar::from_int(2) - &TowerScalar::phi().scale(&r(81, 64));
        assert_eq!(z.exact_sign(), -1);
    }

    #[test]
    fn sign_of_tiny_difference_is_exact() {
        // F30/F29 sits about 1.7e-12 below φ, F31/F30 about 6e-13 above
        let below = &TowerScalar::from_ratio(832_040, 514_229) - &TowerScalar::phi();
        assert_eq!(below.exact_sign(), -1);
        assert_eq!(below.sign(), -1);
        let above = &TowerScalar::from_ratio(1_346_269, 832_040) - &TowerScalar::phi();
        assert_eq!(above.exact_sign(), 1);
        assert_eq!(below.pow(3).sign(), -1);
        assert_eq!((&below * &above).sign(), -1);
    }

    #[test]
    fn field_round_trip() {
        let x = TowerScalar::phi_inv().scale(&r(1, 2));
        let fields = x.to_fields();
        assert_eq!(fields[0], "-1/4");
        assert_eq!(fields[1], "0/1");
        assert_eq!(TowerScalar::from_fields(&fields).unwrap(), x);
        assert_eq!(TowerScalar::decode(&x.encode()).unwrap(), x);
        assert!(TowerScalar::decode("1/2 3").is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(alloc::format!("{}", TowerScalar::phi()), "1/2 + 1/2·√5");
        assert_eq!(alloc::format!("{}", -TowerScalar::sqrt_phi()), "-√φ");
        assert_eq!(alloc::format!("{}", TowerScalar::zero()), "0");
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn tower() -> impl Strategy<Value = TowerScalar> {
        proptest::array::uniform8(small()).prop_map(TowerScalar::from_coeffs)
    }

    /// Independent inverse: solve the multiplication-matrix system by
    /// Gauss–Jordan over ℚ.
    fn matrix_inverse_oracle(x: &TowerScalar) -> TowerScalar {
        let m = x.mul_matrix();
        let mut a: Vec<Vec<Rational>> = (0..8)
            .map(|i| {
                let mut row = m[i].to_vec();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for col in 0..8 {
            let p = (col..8).find(|&i| !a[i][col].is_zero()).unwrap();
            a.swap(col, p);
            let inv = a[col][col].recip().unwrap();
            for k in 0..9 {
                a[col][k] = &a[col][k] * &inv;
            }
            for i in 0..8 {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for k in 0..9 {
                        let t = &f * &a[col][k];
                        a[i][k] = &a[i][k] - &t;
                    }
                }
            }
        }
        TowerScalar::from_coeffs(core::array::from_fn(|i| a[i][8].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn associative_and_distributive(x in tower(), y in tower(), z in tower()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
        }

        #[test]
        fn inverse_round_trip(x in tower()) {
            prop_assume!(!x.is_zero());
            let xi = x.inv().unwrap();
            prop_assert!((&x * &xi).is_one());
            prop_assert_eq!(xi, matrix_inverse_oracle(&x));
        }

        #[test]
        fn float_agrees_with_sign(x in tower()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.exact_sign(), if f > 0.0 { 1 } else { -1 });
            }
            prop_assert_eq!(x.sign(), x.exact_sign());
        }

        #[test]
        fn canonical_form_is_idempotent(x in tower()) {
            let once = TowerScalar::decode(&x.encode()).unwrap();
            let twice = TowerScalar::decode(&once.encode()).unwrap();
            prop_assert_eq!(&once, &x);
            prop_assert_eq!(once.encode(), twice.encode());
        }
    }
}
