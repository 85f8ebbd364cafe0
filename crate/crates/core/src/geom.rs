//! Floating-point projections and norm shells.
//!
//! The sine constants of the Petrie basis live outside the tower, so this is
//! the one place where coordinates are floats. Shells built from exact input
//! are regrouped by exact squared norm.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::exactfield::TowerScalar;
use crate::foldcore::{build_u, fold_all, NormClass};
use crate::linalg::{mat_vec, Vector};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionBasis {
    pub rows: Vec<Vec<f64>>,
    pub label: String,
}

impl ProjectionBasis {
    pub fn dim(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// The first `n` rows.
    pub fn truncate(&self, n: usize) -> ProjectionBasis {
        ProjectionBasis { rows: self.rows[..n.min(self.rows.len())].to_vec(), label: self.label.clone() }
    }
}

fn phi_f() -> f64 {
    (1.0 + libm::sqrt(5.0)) / 2.0
}

/// Van Oss basis of the 600-cell, padded to 8 coordinates, with a third
/// vector for 3D views.
pub fn h4_petrie_basis() -> ProjectionBasis {
    let pi = core::f64::consts::PI;
    let phi = phi_f();
    let s2_15 = 2.0 * libm::sin(2.0 * pi / 15.0);
    let s1_15 = 2.0 * libm::sin(pi / 15.0);
    let s1_30 = 2.0 * libm::sin(pi / 30.0);
    let mut x = alloc::vec![0.0; 8];
    let mut y = alloc::vec![0.0; 8];
    let mut z = alloc::vec![0.0; 8];
    x[1] = phi * s1_15;
    x[2] = s2_15;
    y[0] = -phi * s1_30;
    y[3] = 1.0;
    z[0] = 1.0;
    z[3] = phi * s1_30;
    ProjectionBasis { rows: alloc::vec![x, y, z], label: "H4 Petrie".into() }
}

/// 𝕌 applied to the H4 basis.
pub fn e8_petrie_basis() -> ProjectionBasis {
    let u = build_u().to_f64();
    let rows = h4_petrie_basis()
        .rows
        .iter()
        .map(|r| (0..8).map(|i| (0..8).map(|j| u[i][j] * r[j]).sum()).collect())
        .collect();
    ProjectionBasis { rows, label: "E8 Petrie".into() }
}

pub fn project(points: &[Vec<f64>], basis: &ProjectionBasis) -> Result<Vec<Vec<f64>>> {
    let n = basis.dim();
    points
        .iter()
        .map(|p| {
            if p.len() != n {
                return Err(Error::Shape(format!("point of length {} against basis of length {}", p.len(), n)));
            }
            Ok(basis.rows.iter().map(|r| r.iter().zip(p).map(|(a, b)| a * b).sum()).collect())
        })
        .collect()
}

pub fn project_exact(vertices: &[Vector], basis: &ProjectionBasis) -> Result<Vec<Vec<f64>>> {
    let pts: Vec<Vec<f64>> = vertices.iter().map(Vector::to_f64).collect();
    project(&pts, basis)
}

/// First three coordinates of 𝕌·v, exactly.
pub fn platonic_3d_exact(vertices: &[Vector]) -> Result<Vec<Vector>> {
    let u = build_u();
    vertices
        .iter()
        .map(|v| {
            if v.len() != 8 {
                return Err(Error::Shape(format!("platonic projection needs 8D input, got {}", v.len())));
            }
            Ok(mat_vec(&u, v)?.split(3).0)
        })
        .collect()
}

pub fn platonic_3d(vertices: &[Vector]) -> Result<Vec<[f64; 3]>> {
    Ok(platonic_3d_exact(vertices)?
        .iter()
        .map(|p| {
            let f = p.to_f64();
            [f[0], f[1], f[2]]
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShellGroup {
    pub norm: f64,
    pub exact_norm2: Option<TowerScalar>,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShellPartition {
    pub groups: Vec<ShellGroup>,
    pub tolerance: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

impl ShellPartition {
    pub fn counts(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.indices.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// Groups points by Euclidean norm; a group closes once a norm lies
/// `tolerance` or more above its smallest member.
pub fn shell_partition(points: &[Vec<f64>], tolerance: f64) -> Result<ShellPartition> {
    if !(tolerance > 0.0) {
        return Err(Error::Invalid(format!("tolerance must be positive, got {}", tolerance)));
    }
    let mut order: Vec<(f64, usize)> =
        points.iter().enumerate().map(|(i, p)| (libm::sqrt(p.iter().map(|x| x * x).sum()), i)).collect();
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut groups: Vec<ShellGroup> = Vec::new();
    for (n, i) in order {
        match groups.last_mut() {
            Some(g) if n - g.norm < tolerance => g.indices.push(i),
            _ => groups.push(ShellGroup { norm: n, exact_norm2: None, indices: alloc::vec![i] }),
        }
    }
    for g in &mut groups {
        g.indices.sort_unstable();
    }
    Ok(ShellPartition { groups, tolerance })
}

/// Shells keyed by exact squared norm, sorted by value.
pub fn shell_partition_exact(points: &[Vector], tolerance: f64) -> Result<ShellPartition> {
    if !(tolerance > 0.0) {
        return Err(Error::Invalid(format!("tolerance must be positive, got {}", tolerance)));
    }
    let mut by: HashMap<TowerScalar, Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        by.entry(p.norm2()).or_default().push(i);
    }
    let mut groups: Vec<ShellGroup> = by
        .into_iter()
        .map(|(n2, indices)| ShellGroup { norm: libm::sqrt(n2.to_f64()), exact_norm2: Some(n2), indices })
        .collect();
    groups.sort_by(|a, b| {
        a.exact_norm2.as_ref().expect("exact").cmp_value(b.exact_norm2.as_ref().expect("exact"))
    });
    for g in &mut groups {
        g.indices.sort_unstable();
    }
    Ok(ShellPartition { groups, tolerance })
}

/// Exact squared shell norms of the platonic projection, split by the fold
/// class of the left half: (unit copy, φ copy). Origin shells are dropped.
pub fn platonic_copy_shells(roots: &[Vector]) -> Result<(Vec<TowerScalar>, Vec<TowerScalar>)> {
    let pairs = fold_all(roots)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    for p in &pairs {
        let n2 = p.left.split(3).0.norm2();
        if n2.is_zero() {
            continue;
        }
        match p.class_left {
            NormClass::Small => small.push(n2),
            NormClass::Large => large.push(n2),
        }
    }
    let distinct = |mut v: Vec<TowerScalar>| {
        v.sort_by(|a, b| a.cmp_value(b));
        v.dedup();
        v
    };
    Ok((distinct(small), distinct(large)))
}

/// max |X·Y| style orthogonality residual among the basis rows.
pub fn max_cross_dot(basis: &ProjectionBasis) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..basis.rows.len() {
        for j in i + 1..basis.rows.len() {
            let d: f64 = basis.rows[i].iter().zip(&basis.rows[j]).map(|(a, b)| a * b).sum();
            m = m.max(libm::fabs(d));
        }
    }
    m
}
