//! The golden-ratio folding matrix 𝕌, the E8 → 4·H4 decomposition, the
//! chiral L↔R map and the unfolding back to E8.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::exactfield::{Rational, TowerScalar};
use crate::linalg::{charpoly, det, is_palindromic, mat_inverse, mat_mul, mat_vec, CharPoly, Matrix, Vector};
use crate::polytopes::icosians;
use crate::quatoct::Quaternion;
use crate::rootsys::{e8_roots_direct, edge_graph, min_distance2};
use crate::{Error, Result};

/// Entry symbols of the unscaled matrices: 𝕌 = M/(2√φ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    Z,
    One,
    MinusOne,
    Phi,
    MinusPhi,
    MinusPhi2,
    OneMinusPhi,
    PhiMinusOne,
}

use Sym::*;

impl Sym {
    fn value(self) -> TowerScalar {
        let phi = TowerScalar::phi();
        match self {
            Z => TowerScalar::zero(),
            One => TowerScalar::one(),
            MinusOne => TowerScalar::from_int(-1),
            Phi => phi,
            MinusPhi => -phi,
            MinusPhi2 => -(&phi * &phi),
            OneMinusPhi => &TowerScalar::one() - &phi,
            PhiMinusOne => &phi - &TowerScalar::one(),
        }
    }

    /// 1 ↔ φ, leaving −φ² alone.
    fn exchange(self) -> Sym {
        match self {
            One => Phi,
            Phi => One,
            MinusOne => MinusPhi,
            MinusPhi => MinusOne,
            OneMinusPhi => PhiMinusOne,
            PhiMinusOne => OneMinusPhi,
            s => s,
        }
    }
}

const M_U: [[Sym; 8]; 8] = [
    [OneMinusPhi, Z, Z, Z, Z, Z, Z, MinusPhi2],
    [Z, MinusOne, Phi, Z, Z, Phi, One, Z],
    [Z, Phi, Z, MinusOne, One, Z, Phi, Z],
    [Z, Z, MinusOne, Phi, Phi, One, Z, Z],
    [Z, Z, One, Phi, Phi, MinusOne, Z, Z],
    [Z, Phi, Z, One, MinusOne, Z, Phi, Z],
    [Z, One, Phi, Z, Z, Phi, MinusOne, Z],
    [MinusPhi2, Z, Z, Z, Z, Z, Z, OneMinusPhi],
];

const M_U_INV: [[Sym; 8]; 8] = [
    [PhiMinusOne, Z, Z, Z, Z, Z, Z, MinusPhi2],
    [Z, MinusPhi, One, Z, Z, One, Phi, Z],
    [Z, One, Z, MinusPhi, Phi, Z, One, Z],
    [Z, Z, MinusPhi, One, One, Phi, Z, Z],
    [Z, Z, Phi, One, One, MinusPhi, Z, Z],
    [Z, One, Z, Phi, MinusPhi, Z, One, Z],
    [Z, Phi, One, Z, Z, One, MinusPhi, Z],
    [MinusPhi2, Z, Z, Z, Z, Z, Z, PhiMinusOne],
];

/// 1/(2√φ) = √φ/(2φ).
pub fn inv_two_sqrt_phi() -> TowerScalar {
    (&TowerScalar::sqrt_phi() * &TowerScalar::phi_inv()).scale(&Rational::new(1, 2))
}

fn from_syms(m: &[[Sym; 8]; 8]) -> Matrix {
    let s = inv_two_sqrt_phi();
    Matrix::from_rows(m.iter().map(|row| row.iter().map(|x| &x.value() * &s).collect()).collect())
        .expect("8x8")
}

/// 𝕌, the golden-ratio folding matrix.
pub fn build_u() -> Matrix {
    from_syms(&M_U)
}

pub fn build_u_inverse() -> Matrix {
    from_syms(&M_U_INV)
}

/// 𝕌 with 1 ↔ φ exchanged entrywise, −φ² entries kept.
pub fn exchanged_u() -> Matrix {
    let m: [[Sym; 8]; 8] = core::array::from_fn(|i| core::array::from_fn(|j| M_U[i][j].exchange()));
    from_syms(&m)
}

pub fn cnot() -> Matrix {
    Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]).expect("4x4")
}

pub fn swap() -> Matrix {
    Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]).expect("4x4")
}

fn reversal4() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]).expect("4x4")
}

/// The four φ-scaled gate blocks (TL, TR, BL, BR) of 2√φ·𝕌.
///
/// TL = D(CNOT − φ·SWAP), TR = −D(CNOT + φ·SWAP)·J with D = diag(1,−1,−1,−1)
/// and J the reversal; the bottom blocks are the J-conjugates of the top ones
/// swapped across the diagonal.
pub fn gate_blocks() -> [Matrix; 4] {
    let phi = TowerScalar::phi();
    let d = Matrix::diag(&[1, -1, -1, -1].map(TowerScalar::from_int));
    let j = reversal4();
    let minus = cnot().sub(&swap().scale(&phi)).expect("4x4");
    let plus = cnot().add(&swap().scale(&phi)).expect("4x4");
    let tl = mat_mul(&d, &minus).expect("4x4");
    let tr = mat_mul(&mat_mul(&d, &plus).expect("4x4"), &j).expect("4x4").scale(&TowerScalar::from_int(-1));
    let conj = |m: &Matrix| mat_mul(&mat_mul(&j, m).expect("4x4"), &j).expect("4x4");
    let bl = conj(&tr);
    let br = conj(&tl);
    [tl, tr, bl, br]
}

pub fn build_u_from_gates() -> Matrix {
    let [tl, tr, bl, br] = gate_blocks();
    let mut m = Matrix::zeros(8, 8);
    m.set_block(0, 0, &tl);
    m.set_block(0, 4, &tr);
    m.set_block(4, 0, &bl);
    m.set_block(4, 4, &br);
    m.scale(&inv_two_sqrt_phi())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormClass {
    /// squared norm 1/φ
    Small,
    /// squared norm φ
    Large,
}

/// The halves of 𝕌·root.
#[derive(Clone, Debug, PartialEq)]
pub struct FoldPair {
    pub root: Vector,
    pub left: Vector,
    pub right: Vector,
    pub class_left: NormClass,
    pub class_right: NormClass,
    /// Both halves in the same class: the root lies in one of the 24-cells.
    pub t_class: bool,
}

pub fn is_e8_root(v: &Vector) -> bool {
    if v.len() != 8 || v.norm2() != TowerScalar::from_int(2) {
        return false;
    }
    let Some(q) = v.0.iter().map(|x| x.as_rational().cloned()).collect::<Option<Vec<Rational>>>() else {
        return false;
    };
    let all_int = q.iter().all(Rational::is_integer);
    let two = Rational::from_integer(2);
    let all_half = q.iter().all(|x| !x.is_integer() && (x * &two).is_integer());
    let mut sum = Rational::ZERO;
    for x in &q {
        sum = &sum + x;
    }
    (all_int || all_half) && sum.is_integer() && (&sum * &Rational::new(1, 2)).is_integer()
}

fn classify(n2: &TowerScalar) -> Result<NormClass> {
    if *n2 == TowerScalar::phi_inv() {
        Ok(NormClass::Small)
    } else if *n2 == TowerScalar::phi() {
        Ok(NormClass::Large)
    } else {
        Err(Error::Invariant(format!("folded half has squared norm {}", n2)))
    }
}

pub fn fold_with(u: &Matrix, root: &Vector) -> Result<FoldPair> {
    if !is_e8_root(root) {
        return Err(Error::Invalid(format!("{:?} is not an E8 root", root)));
    }
    let img = mat_vec(u, root)?;
    let (left, right) = img.split(4);
    let class_left = classify(&left.norm2())?;
    let class_right = classify(&right.norm2())?;
    Ok(FoldPair { root: root.clone(), left, right, class_left, class_right, t_class: class_left == class_right })
}

pub fn fold(root: &Vector) -> Result<FoldPair> {
    fold_with(&build_u(), root)
}

/// The four 600-cells inside the folded roots.
#[derive(Clone, Debug)]
pub struct H4Decomposition {
    pub h4l: Vec<Vector>,
    pub phi_h4l: Vec<Vector>,
    pub h4r: Vec<Vector>,
    pub phi_h4r: Vec<Vector>,
    pub pairs: Vec<FoldPair>,
}

fn sorted_set(vs: impl IntoIterator<Item = Vector>) -> Vec<Vector> {
    let set: HashSet<Vector> = vs.into_iter().collect();
    let mut v: Vec<Vector> = set.into_iter().collect();
    v.sort_by(|a, b| b.value_cmp(a));
    v
}

/// Multiplies a small-class vector by √φ to reach unit norm.
pub fn to_unit(v: &Vector) -> Vector {
    v.scale(&TowerScalar::sqrt_phi())
}

/// Rescales a folded half of either class to unit norm.
pub fn unit_rescale(v: &Vector, class: NormClass) -> Vector {
    match class {
        NormClass::Small => to_unit(v),
        NormClass::Large => v.scale(&(&TowerScalar::sqrt_phi() * &TowerScalar::phi_inv())),
    }
}

impl FoldPair {
    /// Both halves at unit scale, as quaternions.
    pub fn unit_quaternions(&self) -> [Quaternion; 2] {
        [
            Quaternion::from_vector(&unit_rescale(&self.left, self.class_left)).expect("length 4"),
            Quaternion::from_vector(&unit_rescale(&self.right, self.class_right)).expect("length 4"),
        ]
    }
}

fn check_600_cell(name: &str, vs: &[Vector], norm2: &TowerScalar) -> Result<()> {
    if vs.len() != 120 {
        return Err(Error::Invariant(format!("{} has {} vertices", name, vs.len())));
    }
    if vs.iter().any(|v| v.norm2() != *norm2) {
        return Err(Error::Invariant(format!("{} vertices differ in norm", name)));
    }
    let d = min_distance2(vs).ok_or_else(|| Error::Invariant(format!("{} is degenerate", name)))?;
    let e = edge_graph(vs, &d).len();
    if e != 720 {
        return Err(Error::Invariant(format!("{} has {} minimal edges", name, e)));
    }
    Ok(())
}

pub fn decompose(roots: &[Vector]) -> Result<H4Decomposition> {
    let given: HashSet<Vector> = roots.iter().cloned().collect();
    if roots.len() != 240 || given != e8_roots_direct().vertex_set() {
        return Err(Error::Invalid("decompose needs the 240 E8 roots".into()));
    }
    let u = build_u();
    let pairs: Vec<FoldPair> = roots.iter().map(|r| fold_with(&u, r)).collect::<Result<_>>()?;
    let pick = |left: bool, class: NormClass| {
        sorted_set(pairs.iter().filter_map(|p| {
            let (v, c) = if left { (&p.left, p.class_left) } else { (&p.right, p.class_right) };
            (c == class).then(|| v.clone())
        }))
    };
    let d = H4Decomposition {
        h4l: pick(true, NormClass::Small),
        phi_h4l: pick(true, NormClass::Large),
        h4r: pick(false, NormClass::Small),
        phi_h4r: pick(false, NormClass::Large),
        pairs,
    };
    let small = TowerScalar::phi_inv();
    let large = TowerScalar::phi();
    check_600_cell("H4L", &d.h4l, &small)?;
    check_600_cell("φH4L", &d.phi_h4l, &large)?;
    check_600_cell("H4R", &d.h4r, &small)?;
    check_600_cell("φH4R", &d.phi_h4r, &large)?;
    let phi = TowerScalar::phi();
    for (unit, big, name) in [(&d.h4l, &d.phi_h4l, "L"), (&d.h4r, &d.phi_h4r, "R")] {
        let scaled: HashSet<Vector> = unit.iter().map(|v| v.scale(&phi)).collect();
        if scaled != big.iter().cloned().collect() {
            return Err(Error::Invariant(format!("φH4{} is not φ·H4{}", name, name)));
        }
        let quats: Vec<Quaternion> =
            unit.iter().map(|v| Quaternion::from_vector(&to_unit(v))).collect::<Result<_>>()?;
        let qs: HashSet<Quaternion> = quats.iter().cloned().collect();
        if !quats.iter().all(|x| quats.iter().all(|y| qs.contains(&(x * y)))) {
            return Err(Error::Invariant(format!("unit H4{} is not closed under multiplication", name)));
        }
    }
    Ok(d)
}

impl H4Decomposition {
    /// Unit-rescaled left copy as quaternions.
    pub fn unit_left(&self) -> Vec<Quaternion> {
        self.h4l.iter().map(|v| Quaternion::from_vector(&to_unit(v)).expect("length 4")).collect()
    }

    pub fn unit_right(&self) -> Vec<Quaternion> {
        self.h4r.iter().map(|v| Quaternion::from_vector(&to_unit(v)).expect("length 4")).collect()
    }
}

/// The fold-induced L ↔ R lookup.
#[derive(Clone, Debug)]
pub struct MapLr {
    pub table: HashMap<Vector, Vector>,
}

impl MapLr {
    pub fn get(&self, v: &Vector) -> Option<&Vector> {
        self.table.get(v)
    }
}

/// Builds L ↦ R and R ↦ L from the folded roots and checks they agree.
///
/// Each 4-vector must occur as the left half of exactly one root and the right
/// half of exactly one root.
pub fn map_lr(d: &H4Decomposition) -> Result<MapLr> {
    let mut l2r: HashMap<Vector, Vector> = HashMap::new();
    let mut r2l: HashMap<Vector, Vector> = HashMap::new();
    for p in &d.pairs {
        if l2r.insert(p.left.clone(), p.right.clone()).is_some() {
            return Err(Error::Invariant("a left half occurs twice".into()));
        }
        if r2l.insert(p.right.clone(), p.left.clone()).is_some() {
            return Err(Error::Invariant("a right half occurs twice".into()));
        }
    }
    if l2r != r2l {
        return Err(Error::Invariant("L→R and R→L lookups differ".into()));
    }
    Ok(MapLr { table: l2r })
}

/// Closed form of mapLR: with 2√φ·v = (aᵢ + bᵢφ), send each entry to
/// −aᵢ + bᵢφ and reverse the coordinates.
pub fn map_lr_closed(v: &Vector) -> Result<Vector> {
    let two_sp = TowerScalar::sqrt_phi().scale(&Rational::from_integer(2));
    let w = v.scale(&two_sp);
    let mut out = Vec::with_capacity(v.len());
    for x in w.0.iter().rev() {
        let c = x.coeffs();
        if c.iter().enumerate().any(|(i, q)| i != 0 && i != 2 && !q.is_zero()) {
            return Err(Error::Invalid("mapLR input is not in √φ·ℚ(√5)".into()));
        }
        // c0 + c2√5 = a + bφ with b = 2c2, a = c0 − c2
        let b = &c[2] * &Rational::from_integer(2);
        let a = &c[0] - &c[2];
        out.push(crate::exactfield::ts_from_parts(-a, b));
    }
    Ok(Vector(out).scale(&inv_two_sqrt_phi()))
}

/// Rebuilds the 240 roots from a unit 600-cell: each vertex u gives
/// w = u/√φ and φ·w, and each of those x yields 𝕌⁻¹·(x ‖ mapLR(x)).
pub fn unfold(h4_unit: &[Vector]) -> Result<Vec<Vector>> {
    let set: HashSet<Vector> = h4_unit.iter().cloned().collect();
    if set.len() != h4_unit.len() || h4_unit.iter().any(|v| v.len() != 4) {
        return Err(Error::Invalid("unfold input must be distinct 4-vectors".into()));
    }
    check_600_cell("unfold input", h4_unit, &TowerScalar::one())
        .map_err(|e| Error::Invalid(format!("unfold input is not a unit 600-cell: {}", e)))?;
    let uinv = build_u_inverse();
    let to_small = &TowerScalar::sqrt_phi() * &TowerScalar::phi_inv();
    let phi = TowerScalar::phi();
    let mut out = Vec::with_capacity(240);
    for u in h4_unit {
        let w = u.scale(&to_small);
        for x in [w.clone(), w.scale(&phi)] {
            let y = map_lr_closed(&x)?;
            out.push(mat_vec(&uinv, &x.concat(&y))?);
        }
    }
    let out = sorted_set(out);
    if out.len() != 240 || out.iter().any(|r| !is_e8_root(r)) {
        return Err(Error::Invariant("unfolding did not give the E8 roots".into()));
    }
    Ok(out)
}

/// e^{i𝕌} and its diagnostics, in floating point.
#[derive(Clone, Debug)]
pub struct ExpIU {
    pub re: [[f64; 8]; 8],
    pub im: [[f64; 8]; 8],
    pub eigenvalues: [f64; 8],
    pub unitarity_residual: f64,
    pub re_trace: f64,
    pub im_trace: f64,
}

/// Cyclic Jacobi eigendecomposition of a symmetric 8×8 matrix; columns of
/// the second result are eigenvectors.
pub fn jacobi_eigen(a: &[[f64; 8]; 8]) -> ([f64; 8], [[f64; 8]; 8]) {
    let mut a = *a;
    let mut v = [[0.0; 8]; 8];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..8 {
            for q in p + 1..8 {
                if libm::fabs(a[p][q]) < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = libm::copysign(1.0, theta) / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..8 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..8 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    (core::array::from_fn(|i| a[i][i]), v)
}

pub fn exp_iu_numeric() -> ExpIU {
    let uf = build_u().to_f64();
    let u: [[f64; 8]; 8] = core::array::from_fn(|i| core::array::from_fn(|j| uf[i][j]));
    let (lam, v) = jacobi_eigen(&u);
    let mut re = [[0.0; 8]; 8];
    let mut im = [[0.0; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let w = v[i][k] * v[j][k];
                re[i][j] += w * libm::cos(lam[k]);
                im[i][j] += w * libm::sin(lam[k]);
            }
        }
    }
    // (E†E)ᵢⱼ = Σₖ conj(Eₖᵢ) Eₖⱼ
    let mut residual: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let mut r = 0.0;
            let mut m = 0.0;
            for k in 0..8 {
                r += re[k][i] * re[k][j] + im[k][i] * im[k][j];
                m += re[k][i] * im[k][j] - im[k][i] * re[k][j];
            }
            let target = if i == j { 1.0 } else { 0.0 };
            residual = residual.max(libm::fabs(r - target)).max(libm::fabs(m));
        }
    }
    let re_trace = (0..8).map(|i| re[i][i]).sum();
    let im_trace = (0..8).map(|i| im[i][i]).sum();
    ExpIU { re, im, eigenvalues: lam, unitarity_residual: residual, re_trace, im_trace }
}

/// Exact invariants of one matrix.
#[derive(Clone, Debug)]
pub struct MatrixProperties {
    pub trace: TowerScalar,
    pub det: TowerScalar,
    pub symmetric: bool,
    pub charpoly: CharPoly,
    pub palindromic: bool,
}

fn properties(m: &Matrix) -> Result<MatrixProperties> {
    let cp = charpoly(m)?;
    Ok(MatrixProperties {
        trace: m.trace(),
        det: det(m)?,
        symmetric: m.is_symmetric(),
        palindromic: is_palindromic(&cp),
        charpoly: cp,
    })
}

#[derive(Clone, Debug)]
pub struct UReport {
    pub u: MatrixProperties,
    pub u_inverse: MatrixProperties,
    pub product_is_identity: bool,
    pub inverse_matches_elimination: bool,
    pub exchange_rule_holds: bool,
    pub gates_match: bool,
}

impl UReport {
    pub fn all_pass(&self) -> bool {
        let ok = |p: &MatrixProperties| p.trace.is_zero() && p.det.is_one() && p.symmetric && p.palindromic;
        ok(&self.u)
            && ok(&self.u_inverse)
            && self.product_is_identity
            && self.inverse_matches_elimination
            && self.exchange_rule_holds
            && self.gates_match
    }
}

pub fn u_property_report() -> Result<UReport> {
    let u = build_u();
    let ui = build_u_inverse();
    Ok(UReport {
        u: properties(&u)?,
        u_inverse: properties(&ui)?,
        product_is_identity: mat_mul(&u, &ui)? == Matrix::identity(8),
        inverse_matches_elimination: mat_inverse(&u)? == ui,
        exchange_rule_holds: exchanged_u() == ui,
        gates_match: build_u_from_gates() == u,
    })
}

/// Which (left, right) copies each root lands in.
pub fn copy_classes(pairs: &[FoldPair]) -> HashMap<Vector, (NormClass, NormClass)> {
    pairs.iter().map(|p| (p.root.clone(), (p.class_left, p.class_right))).collect()
}

/// Rows (1,2,3) of 2√φ·𝕌 read as 8 column 3-vectors.
pub fn icosahedral_columns() -> Vec<[TowerScalar; 3]> {
    (0..8).map(|j| core::array::from_fn(|i| M_U[i + 1][j].value())).collect()
}

/// Exact image of the folded set under an index list, for tests and reports.
pub fn fold_all(roots: &[Vector]) -> Result<Vec<FoldPair>> {
    let u = build_u();
    roots.iter().map(|r| fold_with(&u, r)).collect()
}

pub fn unit_icosians_as_vectors() -> Vec<Vector> {
    icosians().elements.iter().map(Quaternion::to_vector).collect()
}
