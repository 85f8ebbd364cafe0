//! CSV, SVG and OFF writers. Floats are printed at fixed precision so output
//! bytes depend only on the data.

use std::fmt::Write as _;

use anyhow::Result;

use crate::dump::Header;

/// Fixed-precision float with negative zero folded to zero.
pub fn fnum(x: f64, digits: usize) -> String {
    let s = format!("{:.*}", digits, x);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// CSV with a leading `#` comment line carrying the header.
pub fn csv_bytes(header: &Header, columns: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut out = format!("# {}\n", header.comment()).into_bytes();
    {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(columns)?;
        for r in rows {
            w.write_record(r)?;
        }
        w.flush()?;
    }
    Ok(out)
}

pub struct SvgScene<'a> {
    pub header: &'a Header,
    pub title: &'a str,
    pub basis: &'a [Vec<f64>],
    pub points: &'a [[f64; 2]],
    pub edges: &'a [(usize, usize)],
    pub cull_fraction: f64,
}

/// Edges left after dropping the innermost `fraction` of them, innermost
/// meaning smallest projected midpoint radius.
pub fn cull_edges(points: &[[f64; 2]], edges: &[(usize, usize)], fraction: f64) -> Vec<(usize, usize)> {
    let drop = ((edges.len() as f64) * fraction).floor() as usize;
    let mut keyed: Vec<(f64, usize)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            let mx = (points[a][0] + points[b][0]) / 2.0;
            let my = (points[a][1] + points[b][1]) / 2.0;
            (mx.hypot(my), k)
        })
        .collect();
    keyed.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let mut kept: Vec<usize> = keyed[drop.min(keyed.len())..].iter().map(|&(_, k)| k).collect();
    kept.sort_unstable();
    kept.into_iter().map(|k| edges[k]).collect()
}

pub fn svg(scene: &SvgScene) -> String {
    const SIZE: f64 = 800.0;
    let r = scene.points.iter().map(|p| p[0].hypot(p[1])).fold(0.0, f64::max);
    let scale = if r > 0.0 { 0.47 * SIZE / r } else { 1.0 };
    let c = SIZE / 2.0;
    let xy = |p: &[f64; 2]| (fnum(c + scale * p[0], 3), fnum(c - scale * p[1], 3));
    let edges = cull_edges(scene.points, scene.edges, scene.cull_fraction);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        SIZE
    );
    let _ = writeln!(s, "<!-- {} -->", scene.header.comment());
    let _ = writeln!(s, "<title>{}</title>", scene.title);
    s.push_str("<metadata>\n");
    for (name, row) in ["X", "Y", "Z"].iter().zip(scene.basis) {
        let v: Vec<String> = row.iter().map(|x| fnum(*x, 6)).collect();
        let _ = writeln!(s, "<basis name=\"{}\">{}</basis>", name, v.join(" "));
    }
    let _ = writeln!(
        s,
        "<counts vertices=\"{}\" edges=\"{}\" drawn-edges=\"{}\" cull-fraction=\"{}\"/>",
        scene.points.len(),
        scene.edges.len(),
        edges.len(),
        fnum(scene.cull_fraction, 4)
    );
    s.push_str("</metadata>\n");
    let _ = writeln!(s, "<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>", SIZE);
    s.push_str("<g stroke=\"#3060a0\" stroke-width=\"0.3\" stroke-opacity=\"0.5\">\n");
    for &(a, b) in &edges {
        let (x1, y1) = xy(&scene.points[a]);
        let (x2, y2) = xy(&scene.points[b]);
        let _ = writeln!(s, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", x1, y1, x2, y2);
    }
    s.push_str("</g>\n<g fill=\"#b02020\">\n");
    for p in scene.points {
        let (x, y) = xy(p);
        let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"1.5\"/>", x, y);
    }
    s.push_str("</g>\n</svg>\n");
    s
}

pub struct OffShell {
    pub norm: f64,
    pub norm2: Option<String>,
    pub points: Vec<[f64; 3]>,
}

/// One OFF object per shell, concatenated, each preceded by a comment.
pub fn off(header: &Header, shells: &[OffShell]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {}", header.comment());
    let _ = writeln!(s, "# {} shells", shells.len());
    for (k, sh) in shells.iter().enumerate() {
        let _ = write!(s, "# shell {} norm {} count {}", k, fnum(sh.norm, 9), sh.points.len());
        if let Some(n2) = &sh.norm2 {
            let _ = write!(s, " norm2 {}", n2);
        }
        s.push('\n');
        s.push_str("OFF\n");
        let _ = writeln!(s, "{} 0 0", sh.points.len());
        for p in &sh.points {
            let _ = writeln!(s, "{} {} {}", fnum(p[0], 9), fnum(p[1], 9), fnum(p[2], 9));
        }
    }
    s
}
