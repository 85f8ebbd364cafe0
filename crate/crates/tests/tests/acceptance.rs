//! End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::{HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use h4e8::exactfield::TowerScalar;
use h4e8::foldcore::{
    build_u, build_u_inverse, decompose, exchanged_u, exp_iu_numeric, fold_all, map_lr, u_property_report, unfold,
    NormClass,
};
use h4e8::geom::{
    e8_petrie_basis, platonic_3d, platonic_copy_shells, shell_partition, DEFAULT_TOLERANCE,
};
use h4e8::linalg::{charpoly, det, is_palindromic, mat_mul, Matrix, Vector};
use h4e8::polytopes::{
    e8_to_j_multiplicity, icosians, make_a, make_dual_snub, make_f4, make_j, make_s, make_seeds, make_t, make_tp,
    seed_constraint_filter, construction, JVariant,
};
use h4e8::quatoct::{
    default_table, enumerate_octonion_tables, enumerate_sts, is_palindromic_table, palindromic_example_table,
};
use h4e8::rootsys::{edge_graph, labelled_orbit, GroupSpec, OrbitPolytope};

/// Named sub-results of one criterion.
#[derive(Default)]
struct Parts(Vec<(String, bool)>);

impl Parts {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn timed(&mut self, name: &str, took: Duration, limit: Duration) {
        self.check(format!("{} {:.2}s < {}s", name, took.as_secs_f64(), limit.as_secs()), took < limit);
    }

    fn pass(&self) -> bool {
        self.0.iter().all(|(_, ok)| *ok)
    }
}

fn ts(n: i64) -> TowerScalar {
    TowerScalar::from_int(n)
}

/// Roots in doubled coordinates, enumerated directly: (±2,±2,0⁶) and
/// (±1)⁸ with an even number of minus signs.
fn oracle_roots_doubled() -> Vec<[i64; 8]> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [-2, 2] {
                for sj in [-2, 2] {
                    let mut v = [0i64; 8];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(core::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 }));
        }
    }
    out
}

fn doubled(v: &Vector) -> [i64; 8] {
    core::array::from_fn(|k| {
        let r = v[k].scale(&h4e8::exactfield::Rational::from_integer(2));
        let q = r.as_rational().expect("rational");
        assert!(q.is_integer());
        q.as_small().expect("small").0
    })
}

fn orbit(alias: &str) -> OrbitPolytope {
    let e8 = GroupSpec::e8();
    labelled_orbit(&e8, &e8.parse_label(alias).unwrap()).unwrap()
}

fn c1(p: &mut Parts) {
    let t = Instant::now();
    let roots = orbit("421");
    let edges = edge_graph(&roots.vertices, &ts(2));
    let took = t.elapsed();
    let oracle: HashSet<[i64; 8]> = oracle_roots_doubled().into_iter().collect();
    let got: HashSet<[i64; 8]> = roots.vertices.iter().map(doubled).collect();
    p.check("240 roots", roots.len() == 240);
    p.check("equal to direct enumeration", got == oracle);
    let integer = roots.vertices.iter().filter(|v| v.0.iter().all(|x| x.as_rational().unwrap().is_integer())).count();
    p.check(format!("112 integer ({}) + 128 half-integer", integer), integer == 112);
    p.check("all |r|² = 2", roots.vertices.iter().all(|v| v.norm2() == ts(2)));
    // |a − b|² = 2 ⇔ a·b = 1, i.e. 4 in doubled coordinates
    let dv: Vec<[i64; 8]> = roots.vertices.iter().map(doubled).collect();
    let mut oracle_edges = 0;
    for i in 0..dv.len() {
        for j in i + 1..dv.len() {
            if dv[i].iter().zip(&dv[j]).map(|(a, b)| a * b).sum::<i64>() == 4 {
                oracle_edges += 1;
            }
        }
    }
    p.check(format!("{} edges", edges.len()), edges.len() == 6720 && oracle_edges == 6720);
    p.timed("time", took, Duration::from_secs(1));
}

fn c2(p: &mut Parts) {
    let sqrt2 = TowerScalar::sqrt2();
    for (alias, n, e, radius) in [("241", 2160, 69120, 2), ("142", 17280, 483840, 4)] {
        let t = Instant::now();
        let o = orbit(alias);
        let edges = edge_graph(&o.vertices, &ts(2));
        let took = t.elapsed();
        p.check(format!("{} vertices {}", alias, o.len()), o.len() == n);
        p.check(format!("{} edges {}", alias, edges.len()), edges.len() == e);
        p.timed(alias, took, Duration::from_secs(600));
        let r2 = o.shells.iter().map(|s| s.norm2.clone()).collect::<Vec<_>>();
        let literal = &sqrt2.scale(&h4e8::exactfield::Rational::from_integer(radius));
        let literal2 = literal.square();
        p.check(
            format!("{} radius {}√2 (|v|² = {})", alias, radius, r2.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
            r2.len() == 1 && r2[0] == literal2,
        );
        let over = r2[0].div(&sqrt2).unwrap();
        p.check(format!("{} |v|²/√2 = {}√2", alias, radius), over == *literal);
    }
}

fn c3(p: &mut Parts) {
    let t = Instant::now();
    let u = build_u();
    let ui = build_u_inverse();
    p.check("symmetric", u.is_symmetric());
    p.check("trace 0", u.trace().is_zero());
    p.check("det 1", det(&u).unwrap().is_one());
    p.check("U·U⁻¹ = I", mat_mul(&u, &ui).unwrap() == Matrix::identity(8));
    let cp = charpoly(&u).unwrap();
    p.check("charpoly palindromic", is_palindromic(&cp));
    p.check("U⁻¹ = 1↔φ exchange", exchanged_u() == ui);
    p.check("report agrees", u_property_report().unwrap().all_pass());
    p.timed("time", t.elapsed(), Duration::from_secs(1));
}

fn c4(p: &mut Parts) {
    let t = Instant::now();
    let roots = orbit("421").vertices;
    let d = decompose(&roots);
    let took = t.elapsed();
    p.check("decomposition invariants", d.is_ok());
    let Ok(d) = d else { return };
    let small = TowerScalar::phi_inv();
    let large = TowerScalar::phi();
    for (name, set, n2) in [("H4L", &d.h4l, &small), ("φH4L", &d.phi_h4l, &large), ("H4R", &d.h4r, &small), ("φH4R", &d.phi_h4r, &large)] {
        let distinct: HashSet<&Vector> = set.iter().collect();
        let e = edge_graph(set, &h4e8::rootsys::min_distance2(set).unwrap()).len();
        p.check(format!("{} 120 distinct, 720 edges", name), distinct.len() == 120 && e == 720 && set.iter().all(|v| v.norm2() == *n2));
    }
    p.check("norm ratio φ²", large.div(&small).unwrap() == TowerScalar::phi().square());
    let i = icosians();
    p.check("unit L = I", d.unit_left().into_iter().collect::<HashSet<_>>() == i.elements.iter().cloned().collect::<HashSet<_>>());
    p.check("unit R = I", d.unit_right().into_iter().collect::<HashSet<_>>() == i.elements.iter().cloned().collect::<HashSet<_>>());
    p.check("I closed", i.is_closed());
    p.timed("time", took, Duration::from_secs(5));
}

fn c5(p: &mut Parts) {
    let roots = orbit("421").vertices;
    let d = decompose(&roots).unwrap();
    let m = map_lr(&d);
    p.check("well defined", m.is_ok());
    let Ok(m) = m else { return };
    let occurrences: usize = d.pairs.len() * 2;
    let covered = d.pairs.iter().all(|q| m.get(&q.left).is_some() && m.get(&q.right).is_some());
    p.check(format!("defined on all {} folded vectors", occurrences), covered);
    p.check("involution", m.table.iter().all(|(k, v)| m.get(v) == Some(k)));
    let mut rev = true;
    let mut exchange = true;
    for q in &d.pairs {
        let img = m.get(&q.left).unwrap();
        if q.t_class {
            let s = if q.class_left == NormClass::Large { 1 } else { -1 };
            rev &= *img == q.left.reversed().scale(&ts(s));
        } else {
            let other = if q.class_left == NormClass::Small { &large() } else { &small() };
            exchange &= img.norm2() == *other;
        }
    }
    p.check("24-cell classes: reversal, + for φ copy, − for unit copy", rev);
    p.check("norm-class exchange elsewhere", exchange);
}

fn small() -> TowerScalar {
    TowerScalar::phi_inv()
}

fn large() -> TowerScalar {
    TowerScalar::phi()
}

fn c6(p: &mut Parts) {
    let unit: Vec<Vector> = icosians().elements.iter().map(|q| q.to_vector()).collect();
    let back = unfold(&unit);
    p.check("unfold runs", back.is_ok());
    let Ok(back) = back else { return };
    let oracle: HashSet<[i64; 8]> = oracle_roots_doubled().into_iter().collect();
    let got: HashSet<[i64; 8]> = back.iter().map(doubled).collect();
    p.check(format!("{} vectors equal the root set", back.len()), back.len() == 240 && got == oracle);
}

fn c7(p: &mut Parts) {
    let e = exp_iu_numeric();
    p.check(format!("unitarity {:.1e}", e.unitarity_residual), e.unitarity_residual < 1e-12);
    p.check(format!("Im trace {:.1e}", e.im_trace), e.im_trace.abs() < 1e-12);
    p.check(format!("Re trace {:.12} within 0.5 of 4", e.re_trace), (e.re_trace - 4.0).abs() < 0.5);
    p.check("Re trace frozen", (e.re_trace - 4.003701114674876).abs() < 1e-12);
}

fn c8(p: &mut Parts) {
    let t = Instant::now();
    let tt = make_t();
    let tp = make_tp();
    p.check("|T| = |T′| = 24", tt.len() == 24 && tp.len() == 24);
    p.check("|T∪T′| = 48", make_f4().len() == 48);
    let seeds = make_seeds();
    let s = make_s(&seeds.alpha, &tt, "S").unwrap();
    let sp = make_s(&seeds.beta, &tp, "Sp").unwrap();
    p.check("|S| = |S′| = 96", s.len() == 96 && sp.len() == 96);
    let i = icosians();
    let ip = construction("Ip").unwrap();
    p.check("|I| = |I′| = 120", i.len() == 120 && ip.len() == 120);
    p.check("I closed", i.is_closed());
    let (ap, _) = make_a().unwrap();
    let j = make_j(&ap, JVariant::J);
    p.check("J formulas agree", j.is_ok());
    let jp = make_j(&ap, JVariant::JPrime).unwrap();
    p.check("|J| = |J′| = 600", j.map_or(false, |j| j.len() == 600) && jp.len() == 600);
    p.check("dual snub 144", make_dual_snub().unwrap().len() == 144);
    let (kept, _) = seed_constraint_filter(&s);
    p.check(format!("seed filter {} of 96, α kept", kept.len()), kept.len() == 48 && kept.contains(&seeds.alpha));
    p.timed("time", t.elapsed(), Duration::from_secs(30));
}

fn c9(p: &mut Parts) {
    let (ap, _) = make_a().unwrap();
    let j = make_j(&ap, JVariant::J).unwrap();
    let pairs = fold_all(&orbit("421").vertices).unwrap();
    let mut per_root = true;
    let js = j.set();
    for q in &pairs {
        let imgs: Vec<_> = q.unit_quaternions().iter().flat_map(|u| ap.elements.iter().map(move |a| a * u)).collect();
        per_root &= imgs.len() == 10 && imgs.iter().all(|x| js.contains(x));
    }
    p.check("10 J members per root", per_root);
    let units: Vec<_> = pairs.iter().flat_map(|q| q.unit_quaternions()).collect();
    let m = e8_to_j_multiplicity(&units, &ap, &j).unwrap();
    let hist: HashMap<usize, usize> = m.values().fold(HashMap::new(), |mut h, &k| {
        *h.entry(k).or_default() += 1;
        h
    });
    p.check(format!("covers J uniformly {:?}", hist), m.len() == 600 && hist.get(&4) == Some(&600));
}

fn c10(p: &mut Parts) {
    let t = Instant::now();
    p.check("30 STS(7)", enumerate_sts().len() == 30);
    let all = enumerate_octonion_tables();
    p.check(format!("{} valid tables", all.len()), all.len() == 480);
    let d = default_table();
    p.check("default first triad 123", d.triads[0] == [1, 2, 3]);
    let q = |a: usize, b: usize, c: usize| d.idx[a][b] as usize == c && d.sign[a][b] == 1 && d.sign[b][a] == -1;
    p.check("e1e2 = e3, e2e3 = e1, e3e1 = e2", q(1, 2, 3) && q(2, 3, 1) && q(3, 1, 2));
    p.check("footnote triads palindromic", is_palindromic_table(&palindromic_example_table()));
    p.check("default not palindromic", !is_palindromic_table(&d));
    p.timed("time", t.elapsed(), Duration::from_secs(60));
}

fn c11(p: &mut Parts) {
    let printed: [[f64; 8]; 3] = [
        [0.0, 0.252, 0.427, -0.319, 0.319, 0.427, 0.781, 0.0],
        [0.0821, 0.0, -0.393, 0.636, 0.636, 0.393, 0.0, 0.348],
        [-0.242, 0.0, -0.132, 0.215, 0.215, 0.132, 0.0, -1.03],
    ];
    let b = e8_petrie_basis();
    for (name, row, want) in [("X", &b.rows[0], printed[0]), ("Y", &b.rows[1], printed[1]), ("Z", &b.rows[2], printed[2])] {
        let dev = row.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        p.check(format!("{} within 5e-4 (max dev {:.1e})", name, dev), dev < 5e-4);
    }

    let roots = orbit("421").vertices;
    let pts: Vec<Vec<f64>> = platonic_3d(&roots).unwrap().iter().map(|x| x.to_vec()).collect();
    let s = shell_partition(&pts, DEFAULT_TOLERANCE).unwrap();
    p.check(format!("421 shells {:?}", s.counts()), s.len() == 8);
    let (sm, lg) = platonic_copy_shells(&roots).unwrap();
    let phi2 = TowerScalar::phi().square();
    p.check("φ-ratio quadruples", sm.iter().map(|x| x * &phi2).collect::<Vec<_>>() == lg);
    let float_ratio = s.groups.iter().map(|g| g.norm).filter(|n| *n > 0.0).collect::<Vec<_>>();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let matched = sm.iter().all(|x| {
        let n = x.to_f64().sqrt();
        float_ratio.iter().any(|m| (m - n * phi).abs() < 1e-9)
    });
    p.check("float ratios φ within 1e-9", matched);

    for (alias, want) in [("241", [24, 30]), ("142", [40, 60])] {
        let o = orbit(alias);
        let pts: Vec<Vec<f64>> = platonic_3d(&o.vertices).unwrap().iter().map(|x| x.to_vec()).collect();
        let c = shell_partition(&pts, DEFAULT_TOLERANCE).unwrap().counts();
        let outer = [c[c.len() - 2], c[c.len() - 1]];
        p.check(format!("{} outer shells {:?}", alias, outer), outer == want);
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Parts)); 11] = [
        ("E8 construction", c1),
        ("orbit engine", c2),
        ("U properties", c3),
        ("fold decomposition", c4),
        ("mapLR", c5),
        ("unfold round trip", c6),
        ("exp(iU)", c7),
        ("quaternion constructions", c8),
        ("E8 to J mapping", c9),
        ("octonion tables", c10),
        ("projections", c11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let mut parts = Parts::default();
        let r = catch_unwind(AssertUnwindSafe(|| f(&mut parts)));
        let ok = r.is_ok() && parts.pass();
        if r.is_err() {
            parts.check("panicked", false);
        }
        let detail: Vec<String> =
            parts.0.iter().map(|(n, ok)| format!("{}: {}", n, if *ok { "ok" } else { "FAIL" })).collect();
        println!("criterion {:>2} {}: {} [{}]", k + 1, name, if ok { "PASS" } else { "FAIL" }, detail.join("; "));
        if !ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
