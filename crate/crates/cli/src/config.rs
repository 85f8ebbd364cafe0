use std::path::PathBuf;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Generate,
    Fold,
    Verify,
    Project,
    Export,
    Tables,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Svg,
    Off,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Off => "off",
        }
    }
}

/// Everything a run depends on. Deserializing rejects unknown keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default)]
    pub orbit: Option<String>,
    #[serde(default)]
    pub construction: Option<String>,
    #[serde(default)]
    pub edges: bool,
    #[serde(default)]
    pub isomorphism: bool,
    #[serde(default)]
    pub constructions: bool,
    #[serde(default)]
    pub tables: bool,
    #[serde(default)]
    pub petrie: bool,
    #[serde(default)]
    pub platonic: bool,
    /// Orbit name (421, 241, 142) or path to a JSON vertex dump.
    #[serde(default)]
    pub input: Option<String>,
    /// "default" or "palindromic".
    #[serde(default)]
    pub table: Option<String>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub cull_fraction: f64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            group: None,
            orbit: None,
            construction: None,
            edges: false,
            isomorphism: false,
            constructions: false,
            tables: false,
            petrie: false,
            platonic: false,
            input: None,
            table: None,
            output: None,
            format: Format::Json,
            tolerance: None,
            cull_fraction: 0.0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(h4e8::geom::DEFAULT_TOLERANCE)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.cull_fraction) {
            bail!("cull fraction must lie in [0, 1], got {}", self.cull_fraction);
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0) {
                bail!("tolerance must be positive, got {}", t);
            }
        }
        let fmt = self.format;
        let ok = match self.command {
            Command::Generate => {
                if self.construction.is_some() == (self.group.is_some() || self.orbit.is_some()) {
                    bail!("generate needs either --construction or --group with --orbit");
                }
                if self.construction.is_none() && (self.group.is_none() || self.orbit.is_none()) {
                    bail!("generate needs both --group and --orbit");
                }
                matches!(fmt, Format::Json | Format::Csv)
            }
            Command::Fold | Command::Verify => matches!(fmt, Format::Json | Format::Csv),
            Command::Tables => matches!(fmt, Format::Json | Format::Csv),
            Command::Project => {
                if self.petrie == self.platonic {
                    bail!("project needs exactly one of --petrie and --platonic");
                }
                if self.input.is_none() {
                    bail!("project needs --input");
                }
                match fmt {
                    Format::Svg => self.petrie,
                    Format::Off => self.platonic,
                    _ => true,
                }
            }
            Command::Export => {
                if self.input.is_none() {
                    bail!("export needs --input");
                }
                true
            }
        };
        if !ok {
            bail!("format {} is not available for this command", fmt.name());
        }
        if let Some(t) = &self.table {
            if t != "default" && t != "palindromic" {
                bail!("unknown table {:?}", t);
            }
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON form, ignoring the output path.
    pub fn hash(&self) -> String {
        let mut c = self.clone();
        c.output = None;
        let text = serde_json::to_string(&c).expect("config serializes");
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().map(|b| format!("{:02x}", b)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::from_json(r#"{"command":"verify","bogus":1}"#).is_err());
        let c = RunConfig::from_json(r#"{"command":"verify","isomorphism":true}"#).unwrap();
        assert!(c.isomorphism);
    }

    #[test]
    fn hash_ignores_output() {
        let mut a = RunConfig::new(Command::Tables);
        let h = a.hash();
        a.output = Some("x.json".into());
        assert_eq!(a.hash(), h);
        a.format = Format::Csv;
        assert_ne!(a.hash(), h);
        assert_eq!(h.len(), 64);
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::new(Command::Project);
        assert!(c.validate().is_err());
        c.petrie = true;
        c.input = Some("421".into());
        c.format = Format::Svg;
        c.validate().unwrap();
        c.format = Format::Off;
        assert!(c.validate().is_err());
        c.format = Format::Svg;
        c.cull_fraction = 1.5;
        assert!(c.validate().is_err());
        let mut g = RunConfig::new(Command::Generate);
        g.group = Some("E8".into());
        assert!(g.validate().is_err());
        g.orbit = Some("421".into());
        g.validate().unwrap();
    }
}
