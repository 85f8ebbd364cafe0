use std::path::Path;

use anyhow::{bail, Context, Result};
use h4e8::exactfield::TowerScalar;
use h4e8::foldcore::{
    decompose, exp_iu_numeric, fold_all, map_lr, map_lr_closed, to_unit, u_property_report, unfold,
    FoldPair, NormClass,
};
use h4e8::geom::{
    e8_petrie_basis, h4_petrie_basis, platonic_3d_exact, project_exact, shell_partition, shell_partition_exact,
    ProjectionBasis,
};
use h4e8::linalg::Vector;
use h4e8::polytopes::{
    construction, e8_to_j_multiplicity, icosians, make_a, make_dual_snub, make_f4, make_j, make_s, make_seeds, make_t,
    make_tp, seed_check, seed_constraint_filter, JVariant, QuatSet,
};
use h4e8::quatoct::{
    default_table, enumerate_octonion_tables, enumerate_sts, is_palindromic_table, is_quadrant_closed,
    palindromic_example_table, OctTable, DEFAULT_TRIADS, PALINDROMIC_TRIADS,
};
use h4e8::rootsys::{canonical_pascal_order, e8_roots_direct, edge_graph, edge_graph_with_progress, labelled_orbit, min_distance2, GroupSpec};
use serde::Serialize;
use serde_json::json;

use crate::config::{Command, Format, RunConfig};
use crate::dump::{Header, VertexSet};
use crate::formats::{csv_bytes, fnum, off, svg, OffShell, SvgScene};

/// Bytes to write and whether every verification passed.
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub passed: bool,
}

impl Outcome {
    fn ok(bytes: Vec<u8>) -> Self {
        Outcome { bytes, passed: true }
    }
}

pub type Progress<'a> = &'a mut dyn FnMut(&str);

pub fn run(cfg: &RunConfig, progress: Progress) -> Result<Outcome> {
    cfg.validate()?;
    let header = Header::new(&cfg.hash());
    match cfg.command {
        Command::Generate => generate(cfg, &header, progress),
        Command::Fold => fold(cfg, &header),
        Command::Verify => verify(cfg, &header, progress),
        Command::Project => project(cfg, &header, progress),
        Command::Export => export(cfg, progress),
        Command::Tables => tables(cfg, &header),
    }
}

fn json_bytes<T: Serialize>(v: &T) -> Vec<u8> {
    let mut b = serde_json::to_vec_pretty(v).expect("serializes");
    b.push(b'\n');
    b
}

fn edges_with_progress(vs: &[Vector], progress: Progress) -> (Vec<(usize, usize)>, Option<TowerScalar>) {
    let Some(d) = min_distance2(vs) else {
        return (Vec::new(), None);
    };
    let mut last = 0usize;
    let mut report = |done: usize, total: usize| {
        let pct = if total == 0 { 100 } else { done * 100 / total };
        if pct >= last + 10 || done == total {
            last = pct;
            progress(&format!("edges: {}/{} vertices ({}%)", done, total, pct));
        }
    };
    let e = edge_graph_with_progress(vs, &d, &mut report);
    (e, Some(d))
}

fn quat_vertex_set(header: &Header, set: &QuatSet, mode: &str) -> VertexSet {
    VertexSet {
        header: header.clone(),
        group: "H4".into(),
        label: set.label.clone(),
        mode: mode.into(),
        vertices: set.elements.iter().map(|q| q.to_vector()).collect(),
        edges: Vec::new(),
        edge_length2: None,
    }
}

fn orbit_vertex_set(header: &Header, group: &str, orbit: &str, progress: Progress) -> Result<VertexSet> {
    let spec = GroupSpec::by_name(group)?;
    let label = spec.parse_label(orbit)?;
    progress(&format!("orbit {} of {}", label, spec.name));
    let p = labelled_orbit(&spec, &label)?;
    progress(&format!("{} vertices", p.len()));
    Ok(VertexSet {
        header: header.clone(),
        group: spec.name.clone(),
        label: orbit.to_string(),
        mode: "weyl".into(),
        vertices: p.vertices,
        edges: Vec::new(),
        edge_length2: None,
    })
}

fn with_edges(mut set: VertexSet, progress: Progress) -> VertexSet {
    let (e, d) = edges_with_progress(&set.vertices, progress);
    progress(&format!("{} edges", e.len()));
    set.edges = e;
    set.edge_length2 = d;
    set
}

fn vertex_set_csv(set: &VertexSet) -> Result<Vec<u8>> {
    let d = set.dimension();
    let mut cols: Vec<String> = vec!["index".into()];
    cols.extend((0..d).map(|i| format!("x{}", i)));
    cols.extend((0..d).map(|i| format!("approx{}", i)));
    let rows: Vec<Vec<String>> = set
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let mut r = vec![k.to_string()];
            r.extend(v.0.iter().map(TowerScalar::encode));
            r.extend(v.to_f64().iter().map(|x| fnum(*x, 12)));
            r
        })
        .collect();
    let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
    csv_bytes(&set.header, &cols, &rows)
}

fn write_vertex_set(set: &VertexSet, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => Ok(set.to_json().into_bytes()),
        Format::Csv => vertex_set_csv(set),
        _ => bail!("vertex sets are written as json or csv"),
    }
}

fn generate(cfg: &RunConfig, header: &Header, progress: Progress) -> Result<Outcome> {
    let mut set = match &cfg.construction {
        Some(name) => {
            progress(&format!("construction {}", name));
            quat_vertex_set(header, &construction(name)?, "construction")
        }
        None => orbit_vertex_set(
            header,
            cfg.group.as_deref().expect("validated"),
            cfg.orbit.as_deref().expect("validated"),
            progress,
        )?,
    };
    if cfg.edges {
        set = with_edges(set, progress);
    }
    Ok(Outcome::ok(write_vertex_set(&set, cfg.format)?))
}

/// Named E8 orbits, or a JSON vertex dump on disk.
fn load_input(cfg: &RunConfig, header: &Header, need_edges: bool, progress: Progress) -> Result<VertexSet> {
    let input = cfg.input.as_deref().expect("validated");
    let set = match input {
        "421" | "241" | "142" => orbit_vertex_set(header, "E8", input, progress)?,
        _ => {
            let text = std::fs::read_to_string(Path::new(input)).with_context(|| format!("reading {}", input))?;
            return VertexSet::from_json(&text);
        }
    };
    Ok(if need_edges { with_edges(set, progress) } else { set })
}

fn fold_rows(pairs: &[FoldPair]) -> Vec<serde_json::Value> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let [ul, _] = p.unit_quaternions();
            json!({
                "index": k,
                "root": fields(&p.root),
                "left": fields(&p.left),
                "right": fields(&p.right),
                "class_left": class_name(p.class_left),
                "class_right": class_name(p.class_right),
                "t_class": p.t_class,
                "seed": seed_check(k, &ul).fifth_power_pm1,
            })
        })
        .collect()
}

fn fields(v: &Vector) -> Vec<[String; 8]> {
    v.0.iter().map(TowerScalar::to_fields).collect()
}

fn class_name(c: NormClass) -> &'static str {
    match c {
        NormClass::Small => "1/phi",
        NormClass::Large => "phi",
    }
}

fn pascal_roots() -> Result<Vec<Vector>> {
    let roots = e8_roots_direct().vertices;
    // blocks 1 and 8 hold the generators ±eᵢ, which are not roots
    Ok(canonical_pascal_order(&roots)?
        .into_iter()
        .enumerate()
        .filter(|(k, _)| *k != 1 && *k != 8)
        .flat_map(|(_, b)| b)
        .collect())
}

fn fold(cfg: &RunConfig, header: &Header) -> Result<Outcome> {
    let pairs = fold_all(&pascal_roots()?)?;
    let bytes = match cfg.format {
        Format::Json => json_bytes(&json!({
            "tool": header.tool,
            "version": header.version,
            "config_hash": header.config_hash,
            "order": "pascal",
            "rows": fold_rows(&pairs),
        })),
        _ => {
            let enc = |v: &Vector| v.0.iter().map(TowerScalar::encode).collect::<Vec<_>>().join(";");
            let approx = |v: &Vector| v.to_f64().iter().map(|x| fnum(*x, 6)).collect::<Vec<_>>().join(" ");
            let rows: Vec<Vec<String>> = pairs
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let [ul, _] = p.unit_quaternions();
                    vec![
                        k.to_string(),
                        enc(&p.root),
                        enc(&p.left),
                        enc(&p.right),
                        class_name(p.class_left).into(),
                        class_name(p.class_right).into(),
                        if p.t_class { "1" } else { "0" }.into(),
                        if seed_check(k, &ul).fifth_power_pm1 { "*" } else { "" }.into(),
                        approx(&p.left),
                        approx(&p.right),
                    ]
                })
                .collect();
            csv_bytes(
                header,
                &["index", "root", "left", "right", "class_left", "class_right", "t_class", "seed", "left_approx", "right_approx"],
                &rows,
            )?
        }
    };
    Ok(Outcome::ok(bytes))
}

#[derive(Serialize)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, section: &'static str, name: &str, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { section, name: name.into(), pass, detail: detail.into() });
    }

    /// Records an error from a lower module as a failed check.
    fn attempt<T>(&mut self, section: &'static str, name: &str, r: h4e8::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.add(section, name, false, e.to_string());
                None
            }
        }
    }
}

fn verify_isomorphism(c: &mut Checks, progress: Progress) {
    const S: &str = "isomorphism";
    progress("checking U");
    if let Some(r) = c.attempt(S, "U properties", u_property_report()) {
        c.add(S, "U symmetric", r.u.symmetric, "");
        c.add(S, "trace U = 0", r.u.trace.is_zero(), r.u.trace.to_string());
        c.add(S, "det U = 1", r.u.det.is_one(), r.u.det.to_string());
        c.add(S, "U charpoly palindromic", r.u.palindromic, "");
        c.add(S, "U^-1 symmetric, trace 0, det 1", r.u_inverse.symmetric && r.u_inverse.trace.is_zero() && r.u_inverse.det.is_one(), "");
        c.add(S, "U^-1 charpoly palindromic", r.u_inverse.palindromic, "");
        c.add(S, "U U^-1 = I", r.product_is_identity, "");
        c.add(S, "U^-1 equals Gauss-Jordan inverse", r.inverse_matches_elimination, "");
        c.add(S, "U^-1 is the 1<->phi exchange of U", r.exchange_rule_holds, "");
        c.add(S, "U from CNOT and SWAP gates", r.gates_match, "");
    }
    progress("folding roots");
    let roots = e8_roots_direct().vertices;
    let Some(d) = c.attempt(S, "decomposition into four 600-cells", decompose(&roots)) else {
        return;
    };
    c.add(S, "four 600-cells of 120 vertices and 720 edges", true, "");
    let count = |l, r| d.pairs.iter().filter(|p| p.class_left == l && p.class_right == r).count();
    let counts = [
        count(NormClass::Small, NormClass::Large),
        count(NormClass::Large, NormClass::Small),
        count(NormClass::Large, NormClass::Large),
        count(NormClass::Small, NormClass::Small),
    ];
    c.add(S, "class counts 96/96/24/24", counts == [96, 96, 24, 24], format!("{:?}", counts));
    let i = icosians().set();
    c.add(S, "unit H4L equals I", d.unit_left().into_iter().all(|q| i.contains(&q)) && d.h4l.len() == 120, "");
    c.add(S, "unit H4R equals I", d.unit_right().into_iter().all(|q| i.contains(&q)) && d.h4r.len() == 120, "");
    if let Some(m) = c.attempt(S, "mapLR well defined", map_lr(&d)) {
        let inv = m.table.iter().all(|(k, v)| m.get(v) == Some(k));
        c.add(S, "mapLR involution", inv, format!("{} vectors", m.table.len()));
        let closed = m.table.iter().all(|(k, v)| map_lr_closed(k).as_ref() == Ok(v));
        c.add(S, "mapLR closed form agrees", closed, "");
    }
    progress("unfolding");
    let unit: Vec<Vector> = d.h4l.iter().map(to_unit).collect();
    if let Some(back) = c.attempt(S, "unfold", unfold(&unit)) {
        let set: std::collections::HashSet<&Vector> = back.iter().collect();
        let ok = back.len() == 240 && roots.iter().all(|r| set.contains(r));
        c.add(S, "unfold reproduces the 240 roots", ok, "");
    }
    let e = exp_iu_numeric();
    c.add(S, "exp(iU) unitary", e.unitarity_residual < 1e-12, format!("{:e}", e.unitarity_residual));
    c.add(S, "Im trace exp(iU) = 0", e.im_trace.abs() < 1e-12, format!("{:e}", e.im_trace));
    c.add(S, "Re trace exp(iU) near 4", (e.re_trace - 4.0).abs() < 0.5, format!("{:.12}", e.re_trace));
}

fn verify_constructions(c: &mut Checks, progress: Progress) {
    const S: &str = "constructions";
    progress("building quaternion sets");
    let t = make_t();
    let tp = make_tp();
    c.add(S, "|T| = 24", t.len() == 24, t.len().to_string());
    c.add(S, "|T'| = 24", tp.len() == 24, tp.len().to_string());
    c.add(S, "|F4| = 48", make_f4().len() == 48, "");
    let seeds = make_seeds();
    if let Some(s) = c.attempt(S, "S", make_s(&seeds.alpha, &t, "S")) {
        c.add(S, "|S| = 96", s.len() == 96, s.len().to_string());
        let (kept, _) = seed_constraint_filter(&s);
        c.add(S, "seed filter keeps 48 of 96", kept.len() == 48, kept.len().to_string());
        c.add(S, "alpha passes the seed filter", kept.contains(&seeds.alpha), "");
    }
    if let Some(sp) = c.attempt(S, "S'", make_s(&seeds.beta, &tp, "Sp")) {
        c.add(S, "|S'| = 96", sp.len() == 96, sp.len().to_string());
    }
    let i = icosians();
    c.add(S, "|I| = 120", i.len() == 120, "");
    c.add(S, "I closed", i.is_closed(), "");
    if let Some(ip) = c.attempt(S, "I'", construction("Ip")) {
        c.add(S, "|I'| = 120", ip.len() == 120, ip.len().to_string());
    }
    progress("searching A'");
    let Some((ap, a)) = c.attempt(S, "A and A'", make_a()) else {
        return;
    };
    c.add(S, "|A'| = |A| = 5", ap.len() == 5 && a.len() == 5, "");
    if let Some(j) = c.attempt(S, "J (both formulas)", make_j(&ap, JVariant::J)) {
        c.add(S, "|J| = 600", j.len() == 600, j.len().to_string());
        let pairs = fold_all(&e8_roots_direct().vertices);
        if let Some(pairs) = c.attempt(S, "fold", pairs) {
            let units: Vec<_> = pairs.iter().flat_map(FoldPair::unit_quaternions).collect();
            if let Some(m) = c.attempt(S, "E8 to J", e8_to_j_multiplicity(&units, &ap, &j)) {
                let uniform = m.len() == 600 && m.values().all(|&k| k == 4);
                c.add(S, "E8 covers J with multiplicity 4", uniform, format!("{} vertices hit", m.len()));
            }
        }
    }
    if let Some(jp) = c.attempt(S, "J'", make_j(&ap, JVariant::JPrime)) {
        c.add(S, "|J'| = 600", jp.len() == 600, jp.len().to_string());
    }
    if let Some(ds) = c.attempt(S, "dual snub", make_dual_snub()) {
        c.add(S, "dual snub 24-cell has 144 vertices", ds.len() == 144, ds.len().to_string());
    }
}

fn verify_tables(c: &mut Checks, progress: Progress) {
    const S: &str = "tables";
    progress("enumerating octonion tables");
    let sts = enumerate_sts().len();
    c.add(S, "30 Steiner triple systems", sts == 30, sts.to_string());
    let all = enumerate_octonion_tables();
    c.add(S, "480 octonion tables", all.len() == 480, all.len().to_string());
    let d = default_table();
    c.add(S, "default first triad is 123", d.triads[0] == [1, 2, 3], "");
    c.add(S, "default table among the 480", all.contains(&d), "");
    c.add(S, "default quadrant closed", is_quadrant_closed(&d), "");
    c.add(S, "palindromic triads pass", is_palindromic_table(&palindromic_example_table()), "");
    c.add(S, "default table is not palindromic", !is_palindromic_table(&d), "");
}

fn verify_input(c: &mut Checks, set: &VertexSet) {
    const S: &str = "input";
    let distinct: std::collections::HashSet<&Vector> = set.vertices.iter().collect();
    c.add(S, "vertices distinct", distinct.len() == set.vertices.len(), set.vertices.len().to_string());
    if let Some(l) = &set.edge_length2 {
        let uniform = set.edges.iter().all(|&(a, b)| set.vertices[a].sub(&set.vertices[b]).norm2() == *l);
        c.add(S, "edges at the recorded length", uniform, l.to_string());
        let full = edge_graph(&set.vertices, l).len();
        c.add(S, "edge list complete", full == set.edges.len(), format!("{} of {}", set.edges.len(), full));
    } else {
        c.add(S, "no edges without a recorded length", set.edges.is_empty(), "");
    }
    let expected = match (set.group.as_str(), set.label.as_str()) {
        ("E8", "421") => Some(240),
        ("E8", "241") => Some(2160),
        ("E8", "142") => Some(17280),
        _ => None,
    };
    if let Some(n) = expected {
        c.add(S, "orbit size", set.vertices.len() == n, format!("{} (expected {})", set.vertices.len(), n));
    }
}

fn verify(cfg: &RunConfig, header: &Header, progress: Progress) -> Result<Outcome> {
    let mut c = Checks(Vec::new());
    if cfg.input.is_some() {
        let set = load_input(cfg, header, true, progress)?;
        verify_input(&mut c, &set);
    }
    let all = !(cfg.isomorphism || cfg.constructions || cfg.tables || cfg.input.is_some());
    if all || cfg.isomorphism {
        verify_isomorphism(&mut c, progress);
    }
    if all || cfg.constructions {
        verify_constructions(&mut c, progress);
    }
    if all || cfg.tables {
        verify_tables(&mut c, progress);
    }
    let passed = c.0.iter().all(|k| k.pass);
    let bytes = match cfg.format {
        Format::Json => json_bytes(&json!({
            "tool": header.tool,
            "version": header.version,
            "config_hash": header.config_hash,
            "all_pass": passed,
            "checks": c.0,
        })),
        _ => {
            let rows: Vec<Vec<String>> =
                c.0.iter().map(|k| vec![k.section.into(), k.name.clone(), k.pass.to_string(), k.detail.clone()]).collect();
            csv_bytes(header, &["section", "check", "pass", "detail"], &rows)?
        }
    };
    Ok(Outcome { bytes, passed })
}

/// E8 Petrie basis for 8D input, the padded H4 basis for 4D input.
fn petrie_for(dim: usize) -> Result<ProjectionBasis> {
    match dim {
        8 => Ok(e8_petrie_basis().truncate(2)),
        4 => {
            let h = h4_petrie_basis();
            Ok(ProjectionBasis { rows: h.rows[..2].iter().map(|r| r[..4].to_vec()).collect(), label: h.label })
        }
        d => bail!("no Petrie basis for dimension {}", d),
    }
}

fn petrie_output(set: &VertexSet, header: &Header, format: Format, cull: f64) -> Result<Vec<u8>> {
    let basis = petrie_for(set.dimension())?;
    let pts: Vec<[f64; 2]> = project_exact(&set.vertices, &basis)?.iter().map(|p| [p[0], p[1]]).collect();
    Ok(match format {
        Format::Svg => {
            let title = format!("{} {} Petrie projection", set.group, set.label);
            svg(&SvgScene { header, title: &title, basis: &basis.rows, points: &pts, edges: &set.edges, cull_fraction: cull })
                .into_bytes()
        }
        Format::Json => json_bytes(&json!({
            "tool": header.tool,
            "version": header.version,
            "config_hash": header.config_hash,
            "group": set.group,
            "label": set.label,
            "basis": basis.rows,
            "points": pts,
            "edges": set.edges,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                pts.iter().enumerate().map(|(k, p)| vec![k.to_string(), fnum(p[0], 12), fnum(p[1], 12)]).collect();
            csv_bytes(header, &["index", "x", "y"], &rows)?
        }
        Format::Off => bail!("OFF output is for the platonic projection"),
    })
}

fn platonic_output(set: &VertexSet, header: &Header, format: Format, tolerance: f64) -> Result<Vec<u8>> {
    if set.dimension() != 8 {
        bail!("platonic projection needs 8D vertices");
    }
    let exact = platonic_3d_exact(&set.vertices)?;
    let pts: Vec<[f64; 3]> = exact.iter().map(|p| {
        let f = p.to_f64();
        [f[0], f[1], f[2]]
    }).collect();
    let shells = shell_partition_exact(&exact, tolerance)?;
    let float = shell_partition(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), tolerance)?;
    let mut shell_of = vec![0usize; pts.len()];
    for (k, g) in shells.groups.iter().enumerate() {
        for &i in &g.indices {
            shell_of[i] = k;
        }
    }
    Ok(match format {
        Format::Off => {
            let sh: Vec<OffShell> = shells
                .groups
                .iter()
                .map(|g| OffShell {
                    norm: g.norm,
                    norm2: g.exact_norm2.as_ref().map(TowerScalar::encode),
                    points: g.indices.iter().map(|&i| pts[i]).collect(),
                })
                .collect();
            off(header, &sh).into_bytes()
        }
        Format::Json => {
            let groups: Vec<serde_json::Value> = shells
                .groups
                .iter()
                .map(|g| {
                    json!({
                        "norm": g.norm,
                        "norm2": g.exact_norm2.as_ref().map(TowerScalar::to_fields),
                        "count": g.indices.len(),
                        "indices": g.indices,
                    })
                })
                .collect();
            json_bytes(&json!({
                "tool": header.tool,
                "version": header.version,
                "config_hash": header.config_hash,
                "group": set.group,
                "label": set.label,
                "tolerance": tolerance,
                "float_shell_counts": float.counts(),
                "shells": groups,
                "points": pts,
            }))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = pts
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    vec![k.to_string(), fnum(p[0], 12), fnum(p[1], 12), fnum(p[2], 12), shell_of[k].to_string()]
                })
                .collect();
            csv_bytes(header, &["index", "x", "y", "z", "shell"], &rows)?
        }
        Format::Svg => bail!("SVG output is for the Petrie projection"),
    })
}

fn project(cfg: &RunConfig, header: &Header, progress: Progress) -> Result<Outcome> {
    let need_edges = cfg.petrie && cfg.format == Format::Svg;
    let set = load_input(cfg, header, need_edges, progress)?;
    let bytes = if cfg.petrie {
        petrie_output(&set, header, cfg.format, cfg.cull_fraction)?
    } else {
        platonic_output(&set, header, cfg.format, cfg.tolerance())?
    };
    Ok(Outcome::ok(bytes))
}

/// Rewrites a vertex set, keeping the header it was produced with.
fn export(cfg: &RunConfig, progress: Progress) -> Result<Outcome> {
    let own = Header::new(&cfg.hash());
    let set = load_input(cfg, &own, cfg.format == Format::Svg, progress)?;
    let header = set.header.clone();
    let bytes = match cfg.format {
        Format::Json | Format::Csv => write_vertex_set(&set, cfg.format)?,
        Format::Svg => petrie_output(&set, &header, Format::Svg, cfg.cull_fraction)?,
        Format::Off => platonic_output(&set, &header, Format::Off, cfg.tolerance())?,
    };
    Ok(Outcome::ok(bytes))
}

fn triad_strings(t: &[[u8; 3]; 7]) -> Vec<String> {
    t.iter().map(|x| format!("{}{}{}", x[0], x[1], x[2])).collect()
}

fn grid(t: &OctTable) -> Vec<Vec<String>> {
    (0..8)
        .map(|a| {
            let mut r = vec![format!("e{}", a)];
            r.extend((0..8).map(|b| format!("{}{}", if t.sign[a][b] < 0 { '-' } else { '+' }, t.idx[a][b])));
            r
        })
        .collect()
}

fn tables(cfg: &RunConfig, header: &Header) -> Result<Outcome> {
    let chosen = match cfg.table.as_deref() {
        Some("palindromic") => palindromic_example_table(),
        _ => default_table(),
    };
    let bytes = match cfg.format {
        Format::Csv => csv_bytes(header, &["", "e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"], &grid(&chosen))?,
        _ => {
            let all = enumerate_octonion_tables();
            let listed: Vec<serde_json::Value> = all
                .iter()
                .map(|t| {
                    json!({
                        "triads": triad_strings(&t.triads),
                        "palindromic": is_palindromic_table(t),
                        "quadrant_closed": is_quadrant_closed(t),
                    })
                })
                .collect();
            json_bytes(&json!({
                "tool": header.tool,
                "version": header.version,
                "config_hash": header.config_hash,
                "sts_count": enumerate_sts().len(),
                "table_count": all.len(),
                "palindromic_count": all.iter().filter(|t| is_palindromic_table(t)).count(),
                "quadrant_closed_count": all.iter().filter(|t| is_quadrant_closed(t)).count(),
                "default_triads": triad_strings(&DEFAULT_TRIADS),
                "palindromic_triads": triad_strings(&PALINDROMIC_TRIADS),
                "selected": {
                    "triads": triad_strings(&chosen.triads),
                    "palindromic": is_palindromic_table(&chosen),
                    "quadrant_closed": is_quadrant_closed(&chosen),
                    "grid": grid(&chosen),
                },
                "tables": listed,
            }))
        }
    };
    Ok(Outcome::ok(bytes))
}
