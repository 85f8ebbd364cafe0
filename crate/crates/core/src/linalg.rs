//! Exact dense vectors and matrices over [`TowerScalar`].

use core::fmt;
use core::ops::Index;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::{Rational, TowerScalar};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(pub Vec<TowerScalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![TowerScalar::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Vector(v.iter().map(|&x| TowerScalar::from_int(x)).collect())
    }

    pub fn from_rationals(v: &[Rational]) -> Self {
        Vector(v.iter().cloned().map(TowerScalar::from_rational).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[TowerScalar] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> TowerScalar {
        debug_assert_eq!(self.len(), other.len());
        let mut s = TowerScalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            s += &(a * b);
        }
        s
    }

    pub fn norm2(&self) -> TowerScalar {
        self.dot(self)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &TowerScalar) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a.scale(r)).collect())
    }

    /// self − s·other
    pub fn sub_scaled(&self, s: &TowerScalar, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b.is_zero() { a.clone() } else { a - &(s * b) })
                .collect(),
        )
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn split(&self, at: usize) -> (Vector, Vector) {
        (Vector(self.0[..at].to_vec()), Vector(self.0[at..].to_vec()))
    }

    pub fn reversed(&self) -> Vector {
        Vector(self.0.iter().rev().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(TowerScalar::is_zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(TowerScalar::to_f64).collect()
    }

    /// Lexicographic coefficient order; deterministic, not geometric.
    pub fn canonical_cmp(&self, other: &Vector) -> core::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.canonical_cmp(b);
            if o.is_ne() {
                return o;
            }
        }
        self.len().cmp(&other.len())
    }

    /// Lexicographic order by numeric value of the entries.
    pub fn value_cmp(&self, other: &Vector) -> core::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.cmp_value(b);
            if o.is_ne() {
                return o;
            }
        }
        self.len().cmp(&other.len())
    }
}

impl Index<usize> for Vector {
    type Output = TowerScalar;
    fn index(&self, i: usize) -> &TowerScalar {
        &self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    e: Vec<TowerScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, e: vec![TowerScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, TowerScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<TowerScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, e: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| TowerScalar::from_int(x)).collect()).collect(),
        )
    }

    pub fn diag(d: &[TowerScalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TowerScalar {
        &self.e[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: TowerScalar) {
        self.e[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.e[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn map(&self, f: impl Fn(&TowerScalar) -> TowerScalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, e: self.e.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &TowerScalar) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&TowerScalar::from_int(-1)))
    }

    pub fn trace(&self) -> TowerScalar {
        let mut s = TowerScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            s += self.get(i, i);
        }
        s
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_f64()).collect())
            .collect()
    }

    /// Places `b` with its top-left corner at (r, c).
    pub fn set_block(&mut self, r: usize, c: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r + i, c + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Matrix {
        let mut b = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                b.set(i, j, self.get(r + i, c + j).clone());
            }
        }
        b
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vector> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows.iter()).finish()
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!("{}x{} · {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut c = Matrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if y.is_zero() {
                    continue;
                }
                let idx = i * c.cols + j;
                c.e[idx] += &(x * y);
            }
        }
    }
    Ok(c)
}

pub fn mat_vec(a: &Matrix, v: &Vector) -> Result<Vector> {
    if a.cols != v.len() {
        return Err(Error::Shape(format!("{}x{} · {}", a.rows, a.cols, v.len())));
    }
    Ok(Vector((0..a.rows).map(|i| a.row(i).dot(v)).collect()))
}

/// Determinant by Gaussian elimination over the field.
pub fn det(m: &Matrix) -> Result<TowerScalar> {
    if !m.is_square() {
        return Err(Error::Shape("det of non-square matrix".into()));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut d = TowerScalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a.get(i, col).is_zero()) else {
            return Ok(TowerScalar::zero());
        };
        if p != col {
            for j in 0..n {
                a.e.swap(p * n + j, col * n + j);
            }
            d = -d;
        }
        let piv = a.get(col, col).clone();
        d = &d * &piv;
        let inv = piv.inv()?;
        for i in col + 1..n {
            if a.get(i, col).is_zero() {
                continue;
            }
            let f = a.get(i, col) * &inv;
            for j in col..n {
                if a.get(col, j).is_zero() {
                    continue;
                }
                let t = &f * a.get(col, j);
                a.e[i * n + j] -= &t;
            }
        }
    }
    Ok(d)
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn mat_inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Shape("inverse of non-square matrix".into()));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = Matrix::identity(n);
    for col in 0..n {
        let p = (col..n).find(|&i| !a.get(i, col).is_zero()).ok_or(Error::Singular)?;
        if p != col {
            for j in 0..n {
                a.e.swap(p * n + j, col * n + j);
                inv.e.swap(p * n + j, col * n + j);
            }
        }
        let pinv = a.get(col, col).inv()?;
        for j in 0..n {
            a.e[col * n + j] = a.get(col, j) * &pinv;
            inv.e[col * n + j] = inv.get(col, j) * &pinv;
        }
        for i in 0..n {
            if i == col || a.get(i, col).is_zero() {
                continue;
            }
            let f = a.get(i, col).clone();
            for j in 0..n {
                if !a.get(col, j).is_zero() {
                    let t = &f * a.get(col, j);
                    a.e[i * n + j] -= &t;
                }
                if !inv.get(col, j).is_zero() {
                    let t = &f * inv.get(col, j);
                    inv.e[i * n + j] -= &t;
                }
            }
        }
    }
    Ok(inv)
}

/// Coefficients c₀..cₙ of det(λI − M), lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    pub coeffs: Vec<TowerScalar>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// p(M), evaluated by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = mat_mul(&acc, m)?.add(&Matrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &TowerScalar) -> TowerScalar {
        let mut acc = TowerScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

/// Faddeev–LeVerrier: only divisions by the integers 1..n.
pub fn charpoly(m: &Matrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::Shape("charpoly of non-square matrix".into()));
    }
    let n = m.rows;
    let mut coeffs = vec![TowerScalar::zero(); n + 1];
    coeffs[n] = TowerScalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let am = mat_mul(m, &mk)?;
        mk = am.add(&Matrix::identity(n).scale(&coeffs[n - k + 1]))?;
        let t = mat_mul(m, &mk)?.trace();
        coeffs[n - k] = -t.scale(&Rational::new(1, k as i64));
    }
    Ok(CharPoly { coeffs })
}

pub fn is_palindromic(p: &CharPoly) -> bool {
    let n = p.coeffs.len();
    (0..n).all(|k| p.coeffs[k] == p.coeffs[n - 1 - k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cnot() -> Matrix {
        Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]).unwrap()
    }

    fn swap() -> Matrix {
        Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]).unwrap()
    }

    fn binom(n: i64, k: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn products_and_shapes() {
        assert_eq!(mat_mul(&swap(), &swap()).unwrap(), Matrix::identity(4));
        assert!(mat_mul(&Matrix::zeros(2, 3), &Matrix::zeros(2, 3)).is_err());
        let z = mat_vec(&cnot(), &Vector::zeros(4)).unwrap();
        assert!(z.is_zero());
        assert!(mat_vec(&cnot(), &Vector::zeros(3)).is_err());
    }

    #[test]
    fn determinants() {
        assert!(det(&Matrix::identity(8)).unwrap().is_one());
        assert_eq!(det(&cnot()).unwrap(), TowerScalar::from_int(-1));
        let phi = TowerScalar::phi();
        let m = Matrix::from_rows(vec![
            vec![phi.clone(), TowerScalar::one()],
            vec![TowerScalar::one(), TowerScalar::zero()],
        ])
        .unwrap();
        assert_eq!(det(&m).unwrap(), TowerScalar::from_int(-1));
        assert!(det(&Matrix::zeros(3, 3)).unwrap().is_zero());
    }

    #[test]
    fn inverses() {
        assert_eq!(mat_inverse(&Matrix::identity(5)).unwrap(), Matrix::identity(5));
        assert_eq!(mat_inverse(&swap()).unwrap(), swap());
        assert_eq!(mat_inverse(&Matrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn identity_charpoly_is_binomial() {
        let p = charpoly(&Matrix::identity(8)).unwrap();
        for k in 0..=8i64 {
            let sign = if (8 - k) % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.coeffs[k as usize], TowerScalar::from_int(sign * binom(8, k)));
        }
        assert!(is_palindromic(&p));
    }

    #[test]
    fn diagonal_charpoly() {
        let mut d = vec![TowerScalar::one(); 8];
        d[0] = TowerScalar::from_int(2);
        let m = Matrix::diag(&d);
        let p = charpoly(&m).unwrap();
        assert!(p.coeffs[8].is_one());
        assert_eq!(p.coeffs[0], det(&m).unwrap());
        assert!(!is_palindromic(&p));
    }

    fn entry() -> impl Strategy<Value = TowerScalar> {
        (-3i64..=3, -2i64..=2, 0usize..3).prop_map(|(a, b, k)| {
            let basis = [TowerScalar::one(), TowerScalar::phi(), TowerScalar::sqrt_phi()];
            &TowerScalar::from_int(a) + &basis[k].scale(&Rational::from_integer(b))
        })
    }

    fn square(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(entry(), n * n).prop_map(move |e| Matrix { rows: n, cols: n, e })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn det_is_multiplicative(a in square(3), b in square(3)) {
            let ab = mat_mul(&a, &b).unwrap();
            prop_assert_eq!(det(&ab).unwrap(), &det(&a).unwrap() * &det(&b).unwrap());
        }

        #[test]
        fn cayley_hamilton(a in square(4)) {
            let p = charpoly(&a).unwrap();
            let z = p.eval_matrix(&a).unwrap();
            prop_assert!(z.e.iter().all(TowerScalar::is_zero));
            prop_assert_eq!(&p.coeffs[0], &det(&a).unwrap());
        }

        #[test]
        fn inverse_round_trip(a in square(3)) {
            match mat_inverse(&a) {
                Ok(ai) => prop_assert_eq!(mat_mul(&a, &ai).unwrap(), Matrix::identity(3)),
                Err(_) => prop_assert!(det(&a).unwrap().is_zero()),
            }
        }
    }
}
