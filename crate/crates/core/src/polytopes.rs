//! Named quaternionic constructions: the 24-cells T and T′, snub sets, the
//! 600-cell I, the 5-cell A′ and the 120-cell J.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::exactfield::{Rational, TowerScalar};
use crate::quatoct::{prq_quat, Quaternion};
use crate::{Error, Result};

/// Deduplicated quaternions in canonical order with a construction name.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatSet {
    pub label: String,
    pub elements: Vec<Quaternion>,
}

impl QuatSet {
    /// Deduplicates and sorts in descending lexicographic value order.
    pub fn new(label: &str, elements: Vec<Quaternion>) -> Self {
        let mut seen = HashSet::with_capacity(elements.len());
        let mut v: Vec<Quaternion> = elements.into_iter().filter(|q| seen.insert(q.clone())).collect();
        v.sort_by(|a, b| b.value_cmp(a));
        QuatSet { label: label.to_string(), elements: v }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn set(&self) -> HashSet<Quaternion> {
        self.elements.iter().cloned().collect()
    }

    pub fn contains(&self, q: &Quaternion) -> bool {
        self.elements.contains(q)
    }

    pub fn union(&self, label: &str, other: &QuatSet) -> QuatSet {
        let mut v = self.elements.clone();
        v.extend(other.elements.iter().cloned());
        QuatSet::new(label, v)
    }

    /// x∘y ∈ self for all x, y.
    pub fn is_closed(&self) -> bool {
        let s = self.set();
        self.elements.iter().all(|x| self.elements.iter().all(|y| s.contains(&(x * y))))
    }

    pub fn all_unit(&self) -> bool {
        self.elements.iter().all(|q| q.norm2().is_one())
    }
}

fn t(n: i64, d: i64) -> TowerScalar {
    TowerScalar::from_ratio(n, d)
}

fn inv_sqrt2() -> TowerScalar {
    TowerScalar::sqrt2().scale(&Rational::new(1, 2))
}

/// ±1, ±eᵢ and ½(±1±e₁±e₂±e₃).
pub fn make_t() -> QuatSet {
    let mut v = Vec::new();
    for i in 0..4 {
        for s in [1, -1] {
            let mut c = [0; 4];
            c[i] = s;
            v.push(Quaternion::from_ints(c));
        }
    }
    for m in 0..16 {
        let c: [TowerScalar; 4] = core::array::from_fn(|k| t(if m >> k & 1 == 1 { -1 } else { 1 }, 2));
        v.push(Quaternion { c });
    }
    QuatSet::new("T", v)
}

/// (±1 ± 1 in two coordinates)/√2.
pub fn make_tp() -> QuatSet {
    let h = inv_sqrt2();
    let mut v = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c: [TowerScalar; 4] = Default::default();
                c[i] = h.scale(&Rational::from_integer(si));
                c[j] = h.scale(&Rational::from_integer(sj));
                v.push(Quaternion { c });
            }
        }
    }
    QuatSet::new("Tp", v)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Seeds {
    pub c: Quaternion,
    pub cp: Quaternion,
    pub alpha: Quaternion,
    pub beta: Quaternion,
}

/// c = ½(1+e₁−e₂−e₃), c′ = (e₂−e₃)/√2, α = ½(1/φ+e₁+φe₂), β = (−φ+√5e₁−e₂/φ)/√8.
pub fn make_seeds() -> Seeds {
    let c = Quaternion { c: [t(1, 2), t(1, 2), t(-1, 2), t(-1, 2)] };
    let h = inv_sqrt2();
    let cp = Quaternion::new(TowerScalar::zero(), TowerScalar::zero(), h.clone(), -&h);
    let half = Rational::new(1, 2);
    let alpha = Quaternion::new(
        TowerScalar::phi_inv().scale(&half),
        t(1, 2),
        TowerScalar::phi().scale(&half),
        TowerScalar::zero(),
    );
    let s8 = TowerScalar::sqrt2().scale(&Rational::new(1, 4));
    let beta = Quaternion::new(-TowerScalar::phi(), TowerScalar::sqrt5(), -TowerScalar::phi_inv(), TowerScalar::zero())
        .scale(&s8);
    Seeds { c, cp, alpha, beta }
}

fn powers(seed: &Quaternion, from: u32) -> Vec<Quaternion> {
    (from..5).map(|i| seed.pow(i)).collect()
}

/// ∪ᵢ₌₁..₄ seedⁱ∘base.
///
/// Requires a unit seed whose four rotations give 96 new elements disjoint
/// from `base`. The fifth-power condition is checked separately by
/// [`seed_constraint_filter`].
pub fn make_s(seed: &Quaternion, base: &QuatSet, label: &str) -> Result<QuatSet> {
    if !seed.norm2().is_one() {
        return Err(Error::Invalid("seed is not a unit quaternion".into()));
    }
    let s = QuatSet::new(label, prq_quat(&powers(seed, 1), &[Quaternion::one()], &base.elements, false));
    if s.len() != 4 * base.len() {
        return Err(Error::Invariant(format!("{} has {} elements, expected {}", label, s.len(), 4 * base.len())));
    }
    let b = base.set();
    if s.elements.iter().any(|q| b.contains(q)) {
        return Err(Error::Invariant(format!("{} meets its base set", label)));
    }
    Ok(s)
}

/// prq(seed⁰⁻⁴, 1, base).
pub fn make_i(seed: &Quaternion, base: &QuatSet, label: &str) -> Result<QuatSet> {
    if !seed.norm2().is_one() {
        return Err(Error::Invalid("seed is not a unit quaternion".into()));
    }
    let s = QuatSet::new(label, prq_quat(&powers(seed, 0), &[Quaternion::one()], &base.elements, false));
    if s.len() != 5 * base.len() {
        return Err(Error::Invariant(format!("{} has {} elements, expected {}", label, s.len(), 5 * base.len())));
    }
    Ok(s)
}

/// I = α⁰⁻⁴∘T, the binary icosahedral group.
pub fn icosians() -> QuatSet {
    make_i(&make_seeds().alpha, &make_t(), "I").expect("icosians")
}

/// The 600 tetrahedral cells of a unit 600-cell as unnormalized vertex sums.
pub fn cell_sums(i: &QuatSet) -> Vec<Quaternion> {
    let edge_dot = TowerScalar::phi().scale(&Rational::new(1, 2));
    let v = &i.elements;
    let n = v.len();
    let adj: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).filter(|&b| b != a && v[a].dot(&v[b]) == edge_dot).collect()).collect();
    let is_adj = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();
    let mut out = Vec::new();
    for a in 0..n {
        for &b in adj[a].iter().filter(|&&b| b > a) {
            for &c in adj[a].iter().filter(|&&c| c > b && is_adj(b, c)) {
                for &d in adj[a].iter().filter(|&&d| d > c && is_adj(b, d) && is_adj(c, d)) {
                    out.push(&(&(&v[a] + &v[b]) + &v[c]) + &v[d]);
                }
            }
        }
    }
    out
}

/// Result of the A′ search.
#[derive(Clone, Debug)]
pub struct APrimeSearch {
    pub aprime: QuatSet,
    /// Every 120-cell J ⊇ I with J∘I = J obtained from normalized cell centers.
    pub candidates: Vec<QuatSet>,
    /// Number of regular 5-cells through 1 in each candidate.
    pub five_cells: Vec<usize>,
}

/// Regular 5-cells {1, a₁..a₄} of unit quaternions inside 120-cells built
/// from I, and the lexicographically least one.
///
/// The 120-cells are d̄∘D for d among the normalized cell centers D of I.
/// D is stable under left multiplication by I, so d and g∘d give the same
/// set and one d per I-orbit suffices.
pub fn search_aprime(i: &QuatSet) -> Result<APrimeSearch> {
    let sums = cell_sums(i);
    if sums.len() != 600 {
        return Err(Error::Invariant(format!("{} cells, expected 600", sums.len())));
    }
    // |s|² = 2φ⁴ for every cell sum
    let n2 = sums[0].norm2();
    let inv_n2 = n2.inv()?;
    let mut remaining: HashSet<Quaternion> = sums.iter().cloned().collect();
    let mut candidates = Vec::new();
    for s in &sums {
        if !remaining.contains(s) {
            continue;
        }
        for g in &i.elements {
            remaining.remove(&(g * s));
        }
        let sb = s.conj();
        let j: Vec<Quaternion> = sums.iter().map(|x| (&sb * x).scale(&inv_n2)).collect();
        candidates.push(QuatSet::new("J", j));
    }
    let quarter = t(-1, 4);
    let mut five_cells = Vec::new();
    let mut best: Option<Vec<Quaternion>> = None;
    for j in &candidates {
        let ring: Vec<&Quaternion> = j.elements.iter().filter(|q| q.c[0] == quarter).collect();
        let mut count = 0;
        let m = ring.len();
        let ok = |a: &Quaternion, b: &Quaternion| a.dot(b) == quarter;
        for a in 0..m {
            for b in a + 1..m {
                if !ok(ring[a], ring[b]) {
                    continue;
                }
                for c in b + 1..m {
                    if !ok(ring[a], ring[c]) || !ok(ring[b], ring[c]) {
                        continue;
                    }
                    for d in c + 1..m {
                        if !ok(ring[a], ring[d]) || !ok(ring[b], ring[d]) || !ok(ring[c], ring[d]) {
                            continue;
                        }
                        count += 1;
                        let mut tuple =
                            vec![Quaternion::one(), ring[a].clone(), ring[b].clone(), ring[c].clone(), ring[d].clone()];
                        tuple.sort_by(|x, y| x.value_cmp(y));
                        let better = match &best {
                            None => true,
                            Some(cur) => tuple_cmp(&tuple, cur).is_lt(),
                        };
                        if better {
                            best = Some(tuple);
                        }
                    }
                }
            }
        }
        five_cells.push(count);
    }
    let best = best.ok_or_else(|| Error::Invariant("no regular 5-cell found".into()))?;
    let aprime = QuatSet::new("Ap", best);
    if prq_quat(&aprime.elements, &[Quaternion::one()], &i.elements, false).len() != 600 {
        return Err(Error::Invariant("A′∘I does not have 600 elements".into()));
    }
    Ok(APrimeSearch { aprime, candidates, five_cells })
}

fn tuple_cmp(a: &[Quaternion], b: &[Quaternion]) -> core::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.value_cmp(y);
        if o.is_ne() {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// (A′, A) with A = (c′∘A′)*.
pub fn make_a() -> Result<(QuatSet, QuatSet)> {
    let ap = search_aprime(&icosians())?.aprime;
    let cp = make_seeds().cp;
    let a = QuatSet::new("A", ap.elements.iter().map(|x| (&cp * x).conj()).collect());
    Ok((ap, a))
}

/// Which 120-cell to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JVariant {
    /// prq(A′, 1, I)
    J,
    /// prq(A′, 1, I′)
    JPrime,
}

/// J = prq(A′,1,I), checked against prq(A′,α⁰⁻⁴,T); J′ = prq(A′,1,I′).
pub fn make_j(aprime: &QuatSet, variant: JVariant) -> Result<QuatSet> {
    let seeds = make_seeds();
    let one = [Quaternion::one()];
    match variant {
        JVariant::J => {
            let i = make_i(&seeds.alpha, &make_t(), "I")?;
            let j = QuatSet::new("J", prq_quat(&aprime.elements, &one, &i.elements, false));
            let j2 = QuatSet::new("J", prq_quat(&aprime.elements, &powers(&seeds.alpha, 0), &make_t().elements, false));
            if j.set() != j2.set() {
                return Err(Error::Invariant("the two J formulas disagree".into()));
            }
            if j.len() != 600 {
                return Err(Error::Invariant(format!("J has {} elements", j.len())));
            }
            Ok(j)
        }
        JVariant::JPrime => {
            let ip = make_i(&seeds.beta, &make_tp(), "Ip")?;
            let j = QuatSet::new("Jp", prq_quat(&aprime.elements, &one, &ip.elements, false));
            if j.len() != 600 {
                return Err(Error::Invariant(format!("J′ has {} elements", j.len())));
            }
            Ok(j)
        }
    }
}

/// S′ ∪ T ∪ T′.
pub fn make_dual_snub() -> Result<QuatSet> {
    let seeds = make_seeds();
    let tp = make_tp();
    let sp = make_s(&seeds.beta, &tp, "Sp")?;
    Ok(sp.union("dual-snub", &make_t()).union("dual-snub", &tp))
}

/// F₄ = T ∪ T′.
pub fn make_f4() -> QuatSet {
    make_t().union("F4", &make_tp())
}

/// Per-element conjugate-power relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedCheck {
    pub index: usize,
    pub fifth_power_pm1: bool,
    /// p̄ = ±p⁴ ∧ p̄⁴ = ±p ∧ p̄² = p³ ∧ p̄³ = p²
    pub conjugate_powers: bool,
}

fn pm(a: &Quaternion, b: &Quaternion) -> bool {
    a == b || *a == -b
}

pub fn seed_check(index: usize, p: &Quaternion) -> SeedCheck {
    let p2 = p.pow(2);
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    let p5 = &p4 * p;
    let one = Quaternion::one();
    let fifth = p.norm2().is_one() && pm(&p5, &one);
    let conj = pm(&p.conj(), &p4) && pm(&p4.conj(), p) && p2.conj() == p3 && p3.conj() == p2;
    SeedCheck { index, fifth_power_pm1: fifth, conjugate_powers: conj }
}

/// Unit elements with p⁵ = ±1, plus the per-element report.
pub fn seed_constraint_filter(s: &QuatSet) -> (QuatSet, Vec<SeedCheck>) {
    let checks: Vec<SeedCheck> = s.elements.iter().enumerate().map(|(i, p)| seed_check(i, p)).collect();
    let kept = checks.iter().filter(|c| c.fifth_power_pm1).map(|c| s.elements[c.index].clone()).collect();
    (QuatSet::new(&format!("{}*", s.label), kept), checks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermMode {
    /// All 16 sign changes of the 4 cyclic rotations.
    Rotate,
    /// Odd numbers of sign changes with the even permutations of positions.
    OSign,
    /// Even numbers of sign changes with the even permutations of positions.
    ESign,
}

impl core::str::FromStr for PermMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Rotate" => Ok(PermMode::Rotate),
            "oSign" => Ok(PermMode::OSign),
            "eSign" => Ok(PermMode::ESign),
            _ => Err(Error::UnsupportedMode(s.to_string())),
        }
    }
}

const EVEN_PERMS: [[usize; 4]; 12] = [
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 2, 1, 0],
];

pub fn perm_orbit(seed: &Quaternion, mode: PermMode) -> QuatSet {
    let positions: Vec<[usize; 4]> = match mode {
        PermMode::Rotate => (0..4).map(|r| core::array::from_fn(|k| (k + r) % 4)).collect(),
        _ => EVEN_PERMS.to_vec(),
    };
    let mut v = Vec::new();
    for m in 0u32..16 {
        let keep = match mode {
            PermMode::Rotate => true,
            PermMode::OSign => m.count_ones() % 2 == 1,
            PermMode::ESign => m.count_ones() % 2 == 0,
        };
        if !keep {
            continue;
        }
        let signed: [TowerScalar; 4] =
            core::array::from_fn(|k| if m >> k & 1 == 1 { -&seed.c[k] } else { seed.c[k].clone() });
        for p in &positions {
            v.push(Quaternion { c: core::array::from_fn(|k| signed[p[k]].clone()) });
        }
    }
    let name = match mode {
        PermMode::Rotate => "Rotate",
        PermMode::OSign => "oSign",
        PermMode::ESign => "eSign",
    };
    QuatSet::new(name, v)
}

/// Named constructions by CLI name.
pub fn construction(name: &str) -> Result<QuatSet> {
    let seeds = make_seeds();
    Ok(match name {
        "T" => make_t(),
        "Tp" => make_tp(),
        "F4" => make_f4(),
        "S" => make_s(&seeds.alpha, &make_t(), "S")?,
        "Sp" => make_s(&seeds.beta, &make_tp(), "Sp")?,
        "I" => icosians(),
        "Ip" => make_i(&seeds.beta, &make_tp(), "Ip")?,
        "Ap" => make_a()?.0,
        "A" => make_a()?.1,
        "J" => make_j(&make_a()?.0, JVariant::J)?,
        "Jp" => make_j(&make_a()?.0, JVariant::JPrime)?,
        "dual-snub" => make_dual_snub()?,
        _ => return Err(Error::Invalid(format!("unknown construction {:?}", name))),
    })
}

pub const CONSTRUCTIONS: [&str; 12] = ["T", "Tp", "S", "Sp", "I", "Ip", "A", "Ap", "J", "Jp", "F4", "dual-snub"];

/// Multiplicity of each J vertex when every unit folded vertex is rotated by A′.
pub fn e8_to_j_multiplicity(unit_vertices: &[Quaternion], aprime: &QuatSet, j: &QuatSet) -> Result<HashMap<Quaternion, usize>> {
    let js = j.set();
    let mut mult: HashMap<Quaternion, usize> = HashMap::new();
    for u in unit_vertices {
        for a in &aprime.elements {
            let x = a * u;
            if !js.contains(&x) {
                return Err(Error::Invariant("rotated folded vertex is not in J".into()));
            }
            *mult.entry(x).or_default() += 1;
        }
    }
    Ok(mult)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_cells() {
        let t = make_t();
        let tp = make_tp();
        assert_eq!(t.len(), 24);
        assert_eq!(tp.len(), 24);
        assert!(t.all_unit() && tp.all_unit());
        assert_eq!(make_f4().len(), 48);
        assert!(t.is_closed());
        assert!(!tp.is_closed());
    }

    #[test]
    fn seeds() {
        let s = make_seeds();
        assert!(s.alpha.norm2().is_one());
        assert!(s.beta.norm2().is_one());
        assert!(make_t().contains(&s.c));
        assert!(make_tp().contains(&s.cp));
        assert!(s.alpha.pow(5).is_one());
        let b5 = s.beta.pow(5);
        assert!(!pm(&b5, &Quaternion::one()));
    }

    #[test]
    fn snubs_and_icosians() {
        let s = make_seeds();
        let t = make_t();
        let snub = make_s(&s.alpha, &t, "S").unwrap();
        assert_eq!(snub.len(), 96);
        let i = icosians();
        assert_eq!(i.len(), 120);
        assert_eq!(snub.union("I", &t).set(), i.set());
        assert!(i.is_closed());
        let sp = make_s(&s.beta, &make_tp(), "Sp").unwrap();
        assert_eq!(sp.len(), 96);
        let ip = make_i(&s.beta, &make_tp(), "Ip").unwrap();
        assert_eq!(ip.len(), 120);
        assert!(!ip.is_closed());
        assert!(make_s(&Quaternion::from_ints([1, 1, 0, 0]), &t, "x").is_err());
    }

    #[test]
    fn dual_snub() {
        let d = make_dual_snub().unwrap();
        assert_eq!(d.len(), 144);
        assert!(d.all_unit());
    }

    #[test]
    fn seed_filter() {
        let s = make_seeds();
        let snub = make_s(&s.alpha, &make_t(), "S").unwrap();
        let (kept, report) = seed_constraint_filter(&snub);
        assert_eq!(kept.len(), 48);
        assert_eq!(report.len(), 96);
        assert!(kept.contains(&s.alpha));
        assert!(report.iter().all(|c| !c.conjugate_powers || c.fifth_power_pm1));
    }

    #[test]
    fn perm_modes() {
        let s = make_seeds();
        let o = perm_orbit(&s.alpha, PermMode::OSign);
        assert_eq!(o.union("I", &make_t()).set(), icosians().set());
        let r = perm_orbit(&Quaternion::from_ints([1, 0, 0, 0]), PermMode::Rotate);
        assert_eq!(r.len(), 8);
        let h = perm_orbit(&Quaternion { c: [t(1, 2), t(1, 2), t(1, 2), t(1, 2)] }, PermMode::Rotate);
        assert_eq!(h.len(), 16);
        assert_eq!("Spin".parse::<PermMode>(), Err(Error::UnsupportedMode("Spin".into())));
    }

    #[test]
    fn aprime_and_j() {
        let i = icosians();
        let search = search_aprime(&i).unwrap();
        assert_eq!(search.candidates.len(), 5);
        assert_eq!(search.five_cells, vec![7; 5]);
        let ap = &search.aprime;
        assert_eq!(ap.len(), 5);
        for a in 0..5 {
            for b in a + 1..5 {
                assert_eq!(ap.elements[a].dot(&ap.elements[b]), t(-1, 4));
            }
        }
        assert!(ap.contains(&Quaternion::one()));
        for j in &search.candidates {
            assert_eq!(j.len(), 600);
            let js = j.set();
            assert!(i.elements.iter().all(|g| js.contains(g)));
            assert!(j.elements.iter().all(|x| i.elements.iter().all(|g| js.contains(&(x * g)))));
        }
        let j = make_j(ap, JVariant::J).unwrap();
        assert_eq!(j.len(), 600);
        assert!(search.candidates.iter().any(|c| c.set() == j.set()));
        // ×4: (−1, −3.854, 0, −0.382) etc.; check the float image of the least vertex
        let f = ap.elements.last().unwrap().to_f64();
        assert!((f[0] * 4.0 + 1.0).abs() < 1e-9 && (f[1] * 4.0 + 3.854).abs() < 1e-3);
        assert_eq!(make_j(ap, JVariant::JPrime).unwrap().len(), 600);
        let (_, a) = make_a().unwrap();
        let cp = make_seeds().cp;
        assert_eq!(a.len(), 5);
        assert!(ap.elements.iter().all(|x| a.contains(&(&cp * x).conj())));
    }
}
