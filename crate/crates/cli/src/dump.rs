//! JSON vertex-set dump: exact coordinates as 8 "num/den" fields per
//! coordinate, with float approximations alongside.

use anyhow::{bail, Context, Result};
use h4e8::exactfield::TowerScalar;
use h4e8::linalg::Vector;
use h4e8::rootsys::exact_shells;
use serde::{Deserialize, Serialize};

pub const TOOL: &str = "h4e8";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub config_hash: String,
}

impl Header {
    pub fn new(config_hash: &str) -> Self {
        Header { tool: TOOL.into(), version: VERSION.into(), config_hash: config_hash.into() }
    }

    /// One-line form for comment headers in CSV, SVG and OFF files.
    pub fn comment(&self) -> String {
        format!("{} {} config {}", self.tool, self.version, self.config_hash)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub config_hash: String,
    pub group: String,
    pub label: String,
    pub mode: String,
    pub dimension: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edge_length2: Option<[String; 8]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellRecord {
    pub norm2: [String; 8],
    pub norm: f64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDump {
    pub metadata: Metadata,
    pub vertices: Vec<Vec<[String; 8]>>,
    pub approx: Vec<Vec<f64>>,
    pub edges: Vec<[usize; 2]>,
    pub shells: Vec<ShellRecord>,
}

/// Exact vertex set with its provenance, the in-memory side of a dump.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexSet {
    pub header: Header,
    pub group: String,
    pub label: String,
    pub mode: String,
    pub vertices: Vec<Vector>,
    pub edges: Vec<(usize, usize)>,
    pub edge_length2: Option<TowerScalar>,
}

impl VertexSet {
    pub fn dimension(&self) -> usize {
        self.vertices.first().map_or(0, Vector::len)
    }

    pub fn to_dump(&self) -> VertexDump {
        let shells = exact_shells(&self.vertices)
            .into_iter()
            .map(|s| ShellRecord { norm: s.norm2.to_f64().sqrt(), norm2: s.norm2.to_fields(), count: s.indices.len() })
            .collect();
        VertexDump {
            metadata: Metadata {
                tool: self.header.tool.clone(),
                version: self.header.version.clone(),
                config_hash: self.header.config_hash.clone(),
                group: self.group.clone(),
                label: self.label.clone(),
                mode: self.mode.clone(),
                dimension: self.dimension(),
                vertex_count: self.vertices.len(),
                edge_count: self.edges.len(),
                edge_length2: self.edge_length2.as_ref().map(TowerScalar::to_fields),
            },
            vertices: self.vertices.iter().map(|v| v.0.iter().map(TowerScalar::to_fields).collect()).collect(),
            approx: self.vertices.iter().map(Vector::to_f64).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            shells,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_dump()).expect("dump serializes");
        s.push('\n');
        s
    }

    pub fn from_dump(d: VertexDump) -> Result<Self> {
        let m = d.metadata;
        let vertices = d
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let coords = v
                    .iter()
                    .map(|f| TowerScalar::from_fields(f).map_err(anyhow::Error::from))
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("vertex {}", i))?;
                Ok(Vector(coords))
            })
            .collect::<Result<Vec<_>>>()?;
        if vertices.len() != m.vertex_count {
            bail!("metadata says {} vertices, found {}", m.vertex_count, vertices.len());
        }
        if vertices.iter().any(|v| v.len() != m.dimension) {
            bail!("vertex dimension differs from metadata ({})", m.dimension);
        }
        if d.edges.len() != m.edge_count {
            bail!("metadata says {} edges, found {}", m.edge_count, d.edges.len());
        }
        if d.edges.iter().any(|e| e[0] >= vertices.len() || e[1] >= vertices.len()) {
            bail!("edge index out of range");
        }
        let edge_length2 = m.edge_length2.as_ref().map(|f| TowerScalar::from_fields(f)).transpose()?;
        let set = VertexSet {
            header: Header { tool: m.tool, version: m.version, config_hash: m.config_hash },
            group: m.group,
            label: m.label,
            mode: m.mode,
            vertices,
            edges: d.edges.iter().map(|e| (e[0], e[1])).collect(),
            edge_length2,
        };
        if set.to_dump().shells != d.shells {
            bail!("shell records do not match the vertices");
        }
        Ok(set)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: VertexDump = serde_json::from_str(text).context("parsing vertex dump")?;
        Self::from_dump(d)
    }
}
