//! Root systems, Weyl-orbit closure and edge graphs.

use core::cmp::Ordering;

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::exactfield::{Rational, TowerScalar};
use crate::linalg::{mat_inverse, Matrix, Vector};
use crate::{Error, Result};

/// Simple roots and Cartan matrix of a finite reflection group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vector>,
    pub cartan: Matrix,
}

fn r(n: i64, d: i64) -> TowerScalar {
    TowerScalar::from_ratio(n, d)
}

fn unit(dim: usize, i: usize, s: i64) -> Vec<TowerScalar> {
    let mut v = vec![TowerScalar::zero(); dim];
    v[i] = TowerScalar::from_int(s);
    v
}

/// eᵢ − eⱼ (or + when `plus`).
fn ee(dim: usize, i: usize, j: usize, plus: bool) -> Vector {
    let mut v = unit(dim, i, 1);
    v[j] = TowerScalar::from_int(if plus { 1 } else { -1 });
    Vector(v)
}

impl GroupSpec {
    /// Builds the spec and derives `cartan[i][j] = 2⟨αᵢ,αⱼ⟩/⟨αⱼ,αⱼ⟩`.
    pub fn new(name: &str, simple_roots: Vec<Vector>) -> Result<Self> {
        let rank = simple_roots.len();
        if rank == 0 || rank > 8 {
            return Err(Error::Invalid(format!("rank {} outside 1..=8", rank)));
        }
        let dim = simple_roots[0].len();
        if simple_roots.iter().any(|a| a.len() != dim) {
            return Err(Error::Shape("simple roots of mixed length".into()));
        }
        let mut cartan = Matrix::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                let num = simple_roots[i].dot(&simple_roots[j]).scale(&Rational::from_integer(2));
                cartan.set(i, j, num.div(&simple_roots[j].norm2())?);
            }
        }
        Ok(GroupSpec { name: name.to_string(), rank, simple_roots, cartan })
    }

    pub fn dim(&self) -> usize {
        self.simple_roots[0].len()
    }

    /// Bourbaki simple roots: α₁ = ½(1,−1,…,−1,1), α₂ = e₁+e₂, αₖ = eₖ₋₁ − eₖ₋₂.
    pub fn e8() -> Self {
        let mut a1 = vec![r(-1, 2); 8];
        a1[0] = r(1, 2);
        a1[7] = r(1, 2);
        let mut roots = vec![Vector(a1), ee(8, 0, 1, true)];
        for k in 3..=8 {
            roots.push(ee(8, k - 2, k - 3, false));
        }
        Self::new("E8", roots).expect("E8 data")
    }

    /// 5-bond between the last two nodes; (1000) gives the 600-cell.
    pub fn h4() -> Self {
        let phi = TowerScalar::phi();
        let iphi = TowerScalar::phi_inv();
        let h = Rational::new(1, 2);
        let z = TowerScalar::zero();
        let roots = vec![
            Vector::from_ints(&[1, 0, 0, 0]),
            Vector(vec![r(-1, 1), phi.clone(), z.clone(), iphi.clone()]).scale_rational(&h),
            Vector(vec![z.clone(), -&iphi, r(1, 1), -&phi]).scale_rational(&h),
            Vector(vec![z, -&iphi, r(-1, 1), phi]).scale_rational(&h),
        ];
        Self::new("H4", roots).expect("H4 data")
    }

    /// 5-bond between the last two nodes; (100) gives the icosahedron.
    pub fn h3() -> Self {
        let roots = vec![
            Vector::from_ints(&[1, 0, 0]),
            Vector(vec![r(-1, 1), TowerScalar::phi(), TowerScalar::phi_inv()])
                .scale_rational(&Rational::new(1, 2)),
            Vector::from_ints(&[0, -1, 0]),
        ];
        Self::new("H3", roots).expect("H3 data")
    }

    fn a_n(n: usize) -> Self {
        let roots = (0..n).map(|i| ee(n + 1, i, i + 1, false)).collect();
        Self::new(&format!("A{}", n), roots).expect("A data")
    }

    pub fn a3() -> Self {
        Self::a_n(3)
    }

    pub fn a4() -> Self {
        Self::a_n(4)
    }

    pub fn b3() -> Self {
        let roots = vec![ee(3, 0, 1, false), ee(3, 1, 2, false), Vector(unit(3, 2, 1))];
        Self::new("B3", roots).expect("B3 data")
    }

    fn d_n(n: usize) -> Self {
        let mut roots: Vec<Vector> = (0..n - 1).map(|i| ee(n, i, i + 1, false)).collect();
        roots.push(ee(n, n - 2, n - 1, true));
        Self::new(&format!("D{}", n), roots).expect("D data")
    }

    pub fn d4() -> Self {
        Self::d_n(4)
    }

    pub fn d6() -> Self {
        Self::d_n(6)
    }

    pub fn f4() -> Self {
        let roots = vec![
            ee(4, 1, 2, false),
            ee(4, 2, 3, false),
            Vector(unit(4, 3, 1)),
            Vector(vec![r(1, 2), r(-1, 2), r(-1, 2), r(-1, 2)]),
        ];
        Self::new("F4", roots).expect("F4 data")
    }

    pub fn by_name(name: &str) -> Result<Self> {
        Ok(match name.to_ascii_uppercase().as_str() {
            "E8" => Self::e8(),
            "H4" => Self::h4(),
            "H3" => Self::h3(),
            "A3" => Self::a3(),
            "A4" => Self::a4(),
            "B3" => Self::b3(),
            "D4" => Self::d4(),
            "D6" => Self::d6(),
            "F4" => Self::f4(),
            _ => return Err(Error::Invalid(format!("unknown group {:?}", name))),
        })
    }

    pub fn coroots(&self) -> Result<Vec<Vector>> {
        self.simple_roots
            .iter()
            .map(|a| Ok(a.scale(&TowerScalar::from_int(2).div(&a.norm2())?)))
            .collect()
    }

    /// ωᵢ = Σⱼ (C⁻¹)ᵢⱼ αⱼ, so that ⟨ωᵢ, αₖ^∨⟩ = δᵢₖ.
    pub fn fundamental_weights(&self) -> Result<Vec<Vector>> {
        let ci = mat_inverse(&self.cartan)?;
        Ok((0..self.rank)
            .map(|i| {
                let mut w = Vector::zeros(self.dim());
                for j in 0..self.rank {
                    let c = ci.get(i, j);
                    if !c.is_zero() {
                        w = w.add(&self.simple_roots[j].scale(c));
                    }
                }
                w
            })
            .collect())
    }

    /// Σ bitsᵢ ωᵢ.
    pub fn weight(&self, label: &OrbitLabel) -> Result<Vector> {
        if label.bits.len() != self.rank {
            return Err(Error::Invalid(format!(
                "orbit label {} has {} nodes, {} has rank {}",
                label,
                label.bits.len(),
                self.name,
                self.rank
            )));
        }
        if label.is_snub() {
            return Err(Error::Invalid("the snub orbit is not a Weyl orbit of a weight".into()));
        }
        let om = self.fundamental_weights()?;
        let mut w = Vector::zeros(self.dim());
        for (b, o) in label.bits.iter().zip(&om) {
            if *b != 0 {
                w = w.add(o);
            }
        }
        Ok(w)
    }

    /// Named E8 orbits (421, 241, 142) in Bourbaki labelling.
    pub fn label_alias(&self, s: &str) -> Option<OrbitLabel> {
        if self.name != "E8" {
            return None;
        }
        let bits = match s {
            "421" => "00000001",
            "241" => "10000000",
            "142" => "01000000",
            _ => return None,
        };
        OrbitLabel::parse(bits).ok()
    }

    pub fn parse_label(&self, s: &str) -> Result<OrbitLabel> {
        match self.label_alias(s) {
            Some(l) => Ok(l),
            None => OrbitLabel::parse(s),
        }
    }
}

/// Ringed nodes of a Coxeter diagram; all zero is the snub.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    pub bits: Vec<u8>,
}

impl OrbitLabel {
    pub fn parse(s: &str) -> Result<Self> {
        let bits: Option<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        match bits {
            Some(b) if !b.is_empty() && b.len() <= 8 => Ok(OrbitLabel { bits: b }),
            _ => Err(Error::Parse(s.to_string())),
        }
    }

    pub fn is_snub(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

impl core::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub group: String,
    pub label: String,
    pub mode: String,
}

/// Vertices sharing one exact squared norm.
#[derive(Clone, Debug, PartialEq)]
pub struct Shell {
    pub norm2: TowerScalar,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct OrbitPolytope {
    pub vertices: Vec<Vector>,
    pub edges: Vec<(usize, usize)>,
    pub shells: Vec<Shell>,
    pub provenance: Provenance,
}

impl OrbitPolytope {
    /// Deduplicates, sorts canonically and computes shells.
    pub fn from_vertices(vertices: Vec<Vector>, provenance: Provenance) -> Self {
        let vertices = canonical_sort(dedup(vertices));
        let shells = exact_shells(&vertices);
        OrbitPolytope { vertices, edges: Vec::new(), shells, provenance }
    }

    pub fn with_edges(mut self, squared_length: &TowerScalar) -> Self {
        self.edges = edge_graph(&self.vertices, squared_length);
        self
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> HashSet<Vector> {
        self.vertices.iter().cloned().collect()
    }
}

pub fn dedup(vs: Vec<Vector>) -> Vec<Vector> {
    let mut seen = HashSet::with_capacity(vs.len());
    vs.into_iter().filter(|v| seen.insert(v.clone())).collect()
}

/// Descending lexicographic order by numeric value.
pub fn canonical_sort(mut vs: Vec<Vector>) -> Vec<Vector> {
    vs.sort_by(|a, b| b.value_cmp(a));
    vs
}

/// Partition by exact squared norm, smallest first.
pub fn exact_shells(vs: &[Vector]) -> Vec<Shell> {
    let mut map: HashMap<TowerScalar, Vec<usize>> = HashMap::new();
    let mut order = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        let n = v.norm2();
        map.entry(n.clone())
            .or_insert_with(|| {
                order.push(n);
                Vec::new()
            })
            .push(i);
    }
    order.sort_by(|a, b| a.cmp_value(b));
    order
        .into_iter()
        .map(|n| {
            let indices = map.remove(&n).unwrap_or_default();
            Shell { norm2: n, indices }
        })
        .collect()
}

/// The 112 integer and 128 half-integer roots.
pub fn e8_roots_direct() -> OrbitPolytope {
    let mut vs = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![TowerScalar::zero(); 8];
                v[i] = TowerScalar::from_int(si);
                v[j] = TowerScalar::from_int(sj);
                vs.push(Vector(v));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            vs.push(Vector(
                (0..8).map(|k| r(if mask >> k & 1 == 1 { -1 } else { 1 }, 2)).collect(),
            ));
        }
    }
    OrbitPolytope::from_vertices(
        vs,
        Provenance { group: "E8".into(), label: "00000001".into(), mode: "direct".into() },
    )
}

fn is_half_integer(v: &Vector) -> bool {
    v.0.iter().all(|x| x.as_rational().is_some_and(|q| !q.is_integer()))
}

fn minus_count(v: &Vector) -> usize {
    v.0.iter().filter(|x| x.sign() < 0).count()
}

fn first_nonzero_sign(v: &Vector) -> i32 {
    v.0.iter().map(TowerScalar::sign).find(|&s| s != 0).unwrap_or(0)
}

/// The 240 roots plus ±eᵢ in ten blocks of sizes 1,8,28,56,35,35,56,28,8,1.
///
/// Blocks follow the count k of minus signs in the sign pattern (±)⁸: even k
/// are half-integer roots, k = 1 and 7 the generators ±eᵢ, k = 3 and 5 the
/// integer roots whose first nonzero entry is positive or negative. The middle
/// 70 splits on the sign of the first coordinate. Each block is sorted in
/// descending lexicographic order.
pub fn canonical_pascal_order(roots: &[Vector]) -> Result<Vec<Vec<Vector>>> {
    let given: HashSet<Vector> = roots.iter().cloned().collect();
    if given.len() != roots.len() || given != e8_roots_direct().vertex_set() {
        return Err(Error::Invalid("input is not the 240 E8 roots".into()));
    }
    let mut blocks: Vec<Vec<Vector>> = vec![Vec::new(); 10];
    for v in roots {
        let k = if is_half_integer(v) {
            match minus_count(v) {
                0 => 0,
                2 => 2,
                4 if v[0].sign() > 0 => 4,
                4 => 5,
                6 => 7,
                _ => 9,
            }
        } else if first_nonzero_sign(v) > 0 {
            3
        } else {
            6
        };
        blocks[k].push(v.clone());
    }
    for i in 0..8 {
        blocks[1].push(Vector(unit(8, i, 1)));
        blocks[8].push(Vector(unit(8, i, -1)));
    }
    Ok(blocks.into_iter().map(canonical_sort).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    BreadthFirst,
    DepthFirst,
}

/// Closure of `weight` under the simple reflections.
pub fn weyl_orbit(spec: &GroupSpec, weight: &Vector) -> Result<OrbitPolytope> {
    weyl_orbit_with(spec, weight, Traversal::BreadthFirst)
}

pub fn weyl_orbit_with(spec: &GroupSpec, weight: &Vector, order: Traversal) -> Result<OrbitPolytope> {
    if weight.len() != spec.dim() {
        return Err(Error::Shape(format!(
            "weight of length {} for {} in dimension {}",
            weight.len(),
            spec.name,
            spec.dim()
        )));
    }
    let coroots = spec.coroots()?;
    let mut seen: HashSet<Vector> = HashSet::new();
    let mut found = Vec::new();
    let mut work = VecDeque::new();
    seen.insert(weight.clone());
    found.push(weight.clone());
    work.push_back(weight.clone());
    while let Some(x) = match order {
        Traversal::BreadthFirst => work.pop_front(),
        Traversal::DepthFirst => work.pop_back(),
    } {
        for (a, ac) in spec.simple_roots.iter().zip(&coroots) {
            let c = x.dot(ac);
            if c.is_zero() {
                continue;
            }
            let y = x.sub_scaled(&c, a);
            if seen.insert(y.clone()) {
                found.push(y.clone());
                work.push_back(y);
            }
        }
    }
    Ok(OrbitPolytope::from_vertices(
        found,
        Provenance { group: spec.name.clone(), label: String::new(), mode: "reflection".into() },
    ))
}

/// Orbit of a labelled weight with its provenance filled in.
pub fn labelled_orbit(spec: &GroupSpec, label: &OrbitLabel) -> Result<OrbitPolytope> {
    let w = spec.weight(label)?;
    let mut p = weyl_orbit(spec, &w)?;
    p.provenance.label = format!("{}", label);
    Ok(p)
}

/// Least nonzero squared distance between two vertices.
pub fn min_distance2(vs: &[Vector]) -> Option<TowerScalar> {
    if let Some((iv, den)) = lattice(vs) {
        let mut best: Option<i64> = None;
        for i in 0..iv.len() {
            for j in i + 1..iv.len() {
                let d: i64 = iv[i].iter().zip(&iv[j]).map(|(a, b)| (a - b) * (a - b)).sum();
                if d != 0 && best.map_or(true, |b| d < b) {
                    best = Some(d);
                }
            }
        }
        return best.map(|b| TowerScalar::from_rational(Rational::new(b, den * den)));
    }
    let mut best: Option<TowerScalar> = None;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let d = vs[i].sub(&vs[j]).norm2();
            if d.is_zero() {
                continue;
            }
            if best.as_ref().map_or(true, |b| d.cmp_value(b) == Ordering::Less) {
                best = Some(d);
            }
        }
    }
    best
}

/// Unordered pairs (i < j) at exact squared distance `squared_length`.
pub fn edge_graph(vs: &[Vector], squared_length: &TowerScalar) -> Vec<(usize, usize)> {
    edge_graph_with_progress(vs, squared_length, &mut |_, _| {})
}

/// As [`edge_graph`], reporting (processed, total) vertices as it goes.
pub fn edge_graph_with_progress(
    vs: &[Vector],
    squared_length: &TowerScalar,
    progress: &mut dyn FnMut(usize, usize),
) -> Vec<(usize, usize)> {
    let mut edges = match integer_scaled(vs, squared_length) {
        Some((iv, target)) => edges_integer(&iv, target, progress),
        None => edges_general(vs, squared_length, progress),
    };
    edges.sort_unstable();
    edges
}

fn lcm(a: i64, b: i64) -> Option<i64> {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    (a / x).checked_mul(b)
}

/// Scales rational coordinates to a common integer lattice.
/// Rational coordinates scaled to a common integer lattice, with the
/// common denominator.
fn lattice(vs: &[Vector]) -> Option<(Vec<Vec<i64>>, i64)> {
    let mut den = 1i64;
    for v in vs {
        for x in &v.0 {
            let (_, d) = x.as_rational()?.as_small()?;
            den = lcm(den, d)?;
            if den > 1 << 20 {
                return None;
            }
        }
    }
    let mut out = Vec::with_capacity(vs.len());
    for v in vs {
        let mut row = Vec::with_capacity(v.len());
        for x in &v.0 {
            let (n, d) = x.as_rational()?.as_small()?;
            let s = n.checked_mul(den / d)?;
            if s.abs() > 1 << 24 {
                return None;
            }
            row.push(s);
        }
        out.push(row);
    }
    Some((out, den))
}

/// Scales rational coordinates to a common integer lattice.
fn integer_scaled(vs: &[Vector], l: &TowerScalar) -> Option<(Vec<Vec<i64>>, i64)> {
    let lr = l.as_rational()?.as_small()?;
    let (out, den) = lattice(vs)?;
    let t = (lr.0 as i128) * (den as i128) * (den as i128);
    if t % lr.1 as i128 != 0 {
        return Some((out, -1));
    }
    Some((out, i64::try_from(t / lr.1 as i128).ok()?))
}

fn isqrt_ceil(x: i64) -> i64 {
    let mut r = libm::sqrt(x as f64) as i64;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

fn edges_integer(
    iv: &[Vec<i64>],
    target: i64,
    progress: &mut dyn FnMut(usize, usize),
) -> Vec<(usize, usize)> {
    let n = iv.len();
    let mut edges = Vec::new();
    if target <= 0 || n < 2 {
        return edges;
    }
    // sweep along the first coordinate
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| iv[i][0]);
    let reach = isqrt_ceil(target);
    let dim = iv[0].len();
    let step = (n / 100).max(1);
    for a in 0..n {
        if a % step == 0 {
            progress(a, n);
        }
        let i = idx[a];
        let u = &iv[i];
        for &j in &idx[a + 1..] {
            let w = &iv[j];
            let d0 = w[0] - u[0];
            if d0 > reach {
                break;
            }
            let mut s = d0 * d0;
            for k in 1..dim {
                let d = w[k] - u[k];
                s += d * d;
                if s > target {
                    break;
                }
            }
            if s == target {
                edges.push(if i < j { (i, j) } else { (j, i) });
            }
        }
    }
    progress(n, n);
    edges
}

fn edges_general(
    vs: &[Vector],
    l: &TowerScalar,
    progress: &mut dyn FnMut(usize, usize),
) -> Vec<(usize, usize)> {
    let n = vs.len();
    let fl: Vec<Vec<f64>> = vs.iter().map(Vector::to_f64).collect();
    let lf = l.to_f64();
    let tol = 1e-7 * (1.0 + lf);
    let reach = libm::sqrt(lf) + 1e-7;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| fl[a][0].total_cmp(&fl[b][0]));
    let mut edges = Vec::new();
    let step = (n / 100).max(1);
    for a in 0..n {
        if a % step == 0 {
            progress(a, n);
        }
        let i = idx[a];
        for &j in &idx[a + 1..] {
            if fl[j][0] - fl[i][0] > reach {
                break;
            }
            let d: f64 = fl[i].iter().zip(&fl[j]).map(|(x, y)| (x - y) * (x - y)).sum();
            if (d - lf).abs() > tol {
                continue;
            }
            if vs[i].sub(&vs[j]).norm2() == *l {
                edges.push(if i < j { (i, j) } else { (j, i) });
            }
        }
    }
    progress(n, n);
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrices() {
        let e8 = GroupSpec::e8();
        // Bourbaki E8: chain 1-3-4-5-6-7-8 with 2 attached to 4
        let bonds = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
        for i in 0..8 {
            for j in 0..8 {
                let expect = if i == j {
                    2
                } else if bonds.contains(&(i, j)) || bonds.contains(&(j, i)) {
                    -1
                } else {
                    0
                };
                assert_eq!(*e8.cartan.get(i, j), TowerScalar::from_int(expect), "({},{})", i, j);
            }
        }
        let h4 = GroupSpec::h4();
        assert_eq!(*h4.cartan.get(2, 3), -TowerScalar::phi());
        assert_eq!(*h4.cartan.get(0, 1), TowerScalar::from_int(-1));
        assert!(h4.cartan.get(0, 3).is_zero());
        let f4 = GroupSpec::f4();
        assert_eq!(*f4.cartan.get(1, 2), TowerScalar::from_int(-2));
        assert_eq!(*f4.cartan.get(2, 1), TowerScalar::from_int(-1));
        for g in ["E8", "H4", "H3", "A3", "A4", "B3", "D4", "D6", "F4"] {
            let s = GroupSpec::by_name(g).unwrap();
            for i in 0..s.rank {
                assert_eq!(*s.cartan.get(i, i), TowerScalar::from_int(2));
            }
        }
        assert!(GroupSpec::by_name("G2").is_err());
    }

    #[test]
    fn fundamental_weights_are_dual() {
        for g in ["E8", "H4", "B3", "A3", "F4"] {
            let s = GroupSpec::by_name(g).unwrap();
            let om = s.fundamental_weights().unwrap();
            let co = s.coroots().unwrap();
            for i in 0..s.rank {
                for k in 0..s.rank {
                    let d = om[i].dot(&co[k]);
                    assert_eq!(d, TowerScalar::from_int((i == k) as i64), "{} {} {}", g, i, k);
                }
            }
        }
        let e8 = GroupSpec::e8();
        let om = e8.fundamental_weights().unwrap();
        assert_eq!(om[7], Vector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(om[0], Vector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 2]));
    }

    #[test]
    fn direct_roots() {
        let p = e8_roots_direct();
        assert_eq!(p.len(), 240);
        assert_eq!(p.vertices.iter().filter(|v| is_half_integer(v)).count(), 128);
        assert!(p.vertices.iter().all(|v| v.norm2() == TowerScalar::from_int(2)));
        let mut v = vec![r(1, 2); 8];
        v[2] = r(-1, 2);
        v[5] = r(-1, 2);
        assert!(p.vertex_set().contains(&Vector(v)));
        assert_eq!(p.shells.len(), 1);
    }

    #[test]
    fn highest_root_orbit_is_direct_set() {
        let e8 = GroupSpec::e8();
        let l = e8.parse_label("421").unwrap();
        let bfs = labelled_orbit(&e8, &l).unwrap();
        let direct = e8_roots_direct();
        assert_eq!(bfs.vertex_set(), direct.vertex_set());
        assert_eq!(bfs.vertices, direct.vertices);
        let w = e8.weight(&l).unwrap();
        let dfs = weyl_orbit_with(&e8, &w, Traversal::DepthFirst).unwrap();
        assert_eq!(dfs.vertices, bfs.vertices);
    }

    #[test]
    fn root_edges_and_min_distance() {
        let p = e8_roots_direct();
        assert_eq!(edge_graph(&p.vertices, &TowerScalar::from_int(2)).len(), 6720);
        assert_eq!(min_distance2(&p.vertices), Some(TowerScalar::from_int(2)));
        let mut general = Vec::new();
        edges_general(&p.vertices, &TowerScalar::from_int(2), &mut |_, _| {})
            .into_iter()
            .for_each(|e| general.push(e));
        general.sort_unstable();
        assert_eq!(general, edge_graph(&p.vertices, &TowerScalar::from_int(2)));
    }

    #[test]
    fn h4_orbits() {
        let h4 = GroupSpec::h4();
        let i = labelled_orbit(&h4, &OrbitLabel::parse("1000").unwrap()).unwrap();
        assert_eq!(i.len(), 120);
        let d = min_distance2(&i.vertices).unwrap();
        assert_eq!(edge_graph(&i.vertices, &d).len(), 720);
        let j = labelled_orbit(&h4, &OrbitLabel::parse("0001").unwrap()).unwrap();
        assert_eq!(j.len(), 600);
        assert_eq!(j.shells.len(), 1);
    }

    #[test]
    fn small_group_orbit_counts() {
        let cases: &[(&str, &str, usize)] = &[
            ("H3", "100", 12),
            ("H3", "001", 20),
            ("H3", "010", 30),
            ("H3", "111", 120),
            ("B3", "111", 48),
            ("A3", "111", 24),
            ("A4", "1000", 5),
            ("D4", "0100", 24),
            ("F4", "1000", 24),
            ("D6", "010000", 60),
        ];
        for &(g, l, n) in cases {
            let s = GroupSpec::by_name(g).unwrap();
            let p = labelled_orbit(&s, &OrbitLabel::parse(l).unwrap()).unwrap();
            assert_eq!(p.len(), n, "{} {}", g, l);
            assert_eq!(p.shells.len(), 1);
        }
    }

    #[test]
    fn labels() {
        assert!(OrbitLabel::parse("0102").is_err());
        assert!(OrbitLabel::parse("").is_err());
        assert!(OrbitLabel::parse("0000").unwrap().is_snub());
        let h4 = GroupSpec::h4();
        assert!(h4.weight(&OrbitLabel::parse("0000").unwrap()).is_err());
        assert!(h4.weight(&OrbitLabel::parse("100").unwrap()).is_err());
    }

    #[test]
    fn pascal_blocks() {
        let roots = e8_roots_direct().vertices;
        let blocks = canonical_pascal_order(&roots).unwrap();
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 8, 28, 56, 35, 35, 56, 28, 8, 1]);
        for k in 0..5 {
            let neg: HashSet<Vector> = blocks[k].iter().map(Vector::neg).collect();
            let other: HashSet<Vector> = blocks[9 - k].iter().cloned().collect();
            assert_eq!(neg, other, "block {}", k);
        }
        let half: Vec<bool> = blocks.iter().map(|b| b.iter().all(is_half_integer)).collect();
        assert_eq!(half, vec![true, false, true, false, true, true, false, true, false, true]);
        assert!(blocks.iter().all(|b| b.iter().all(is_half_integer) || b.iter().all(|v| !is_half_integer(v))));
        assert!(canonical_pascal_order(&roots[1..]).is_err());
    }
}
