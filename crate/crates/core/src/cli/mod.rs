//! Run configuration shared by the `blocking-ca` binary.
//!
//! Every output carries a one-line header built by
//! [`RunConfig::header_line`]; [`RunConfig::parse_header`] reads it back.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::ca::{Diagram, RuleParams, Tape};
use crate::error::{Error, Result};
use crate::game::WindowMode;
use crate::render::Orientation;

/// How the initial row is produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitSpec {
    /// A single 1 at column 0.
    Single1,
    /// 1 exactly at columns `x >= 1`.
    Step,
    /// `width` ChaCha8 bits starting at column 0.
    Random { seed: u64, width: usize },
    /// A tape line read from a file; comment lines and a leading params line
    /// are skipped.
    File(PathBuf),
}

impl InitSpec {
    pub fn build(&self) -> Result<Tape> {
        match self {
            InitSpec::Single1 => Ok(Tape::single_one(0)),
            InitSpec::Step => Ok(Tape::step_at(1)),
            InitSpec::Random { seed, width } => Ok(Tape::random(*seed, 0, *width)),
            InitSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                let line = text
                    .lines()
                    .map(str::trim)
                    .rfind(|l| !l.is_empty() && !l.starts_with('#'))
                    .ok_or_else(|| {
                        Error::Parse(format!("{} holds no tape line", path.display()))
                    })?;
                line.parse()
            }
        }
    }
}

impl fmt::Display for InitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitSpec::Single1 => f.write_str("single1"),
            InitSpec::Step => f.write_str("step"),
            InitSpec::Random { seed, width } => write!(f, "random:seed={seed}:width={width}"),
            InitSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for InitSpec {
    type Err = Error;

    /// `single1`, `step`, `random:seed=S:width=W` or `file:PATH`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(InitSpec::File(PathBuf::from(path)));
        }
        let mut parts = s.split(':');
        match parts.next() {
            Some("single1") if parts.next().is_none() => Ok(InitSpec::Single1),
            Some("step") if parts.next().is_none() => Ok(InitSpec::Step),
            Some("random") => {
                let (mut seed, mut width) = (None, None);
                for kv in parts {
                    match kv.split_once('=') {
                        Some(("seed", v)) => seed = Some(parse_num::<u64>(v)?),
                        Some(("width", v)) => width = Some(parse_num::<usize>(v)?),
                        _ => return Err(Error::Parse(format!("bad random init field `{kv}`"))),
                    }
                }
                match (seed, width) {
                    (Some(seed), Some(width)) => Ok(InitSpec::Random { seed, width }),
                    _ => Err(Error::Parse("random init needs seed and width".into())),
                }
            }
            _ => Err(Error::Parse(format!("unknown init `{s}`"))),
        }
    }
}

fn parse_num<T: FromStr>(v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Parse(format!("bad number `{v}`")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Plain PBM (`P1`).
    #[default]
    Pbm,
    /// Raw PBM (`P4`).
    PbmRaw,
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Pbm => "pbm",
            OutputFormat::PbmRaw => "pbm-raw",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pbm" => Ok(OutputFormat::Pbm),
            "pbm-raw" => Ok(OutputFormat::PbmRaw),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// Everything that determines the bytes of one run's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub params: RuleParams,
    pub init: InitSpec,
    pub steps: usize,
    pub xmin: i64,
    pub xmax: i64,
    pub format: OutputFormat,
    pub window_mode: WindowMode,
    pub orientation: Orientation,
}

const HEADER_TAG: &str = "blocking-ca";

impl RunConfig {
    pub fn header_line(&self) -> String {
        format!(
            "{HEADER_TAG} {} {} init={} steps={} xmin={} xmax={} format={} window-mode={} orientation={}",
            self.command,
            self.params,
            self.init,
            self.steps,
            self.xmin,
            self.xmax,
            self.format,
            self.window_mode,
            self.orientation
        )
    }

    /// Reads a line produced by [`RunConfig::header_line`], with or without
    /// a leading `# `.
    pub fn parse_header(line: &str) -> Result<RunConfig> {
        let line = line.trim().trim_start_matches('#').trim();
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some(HEADER_TAG) {
            return Err(Error::Parse(format!("not a {HEADER_TAG} header: `{line}`")));
        }
        let command = tokens
            .next()
            .ok_or_else(|| Error::Parse("header has no command".into()))?
            .to_string();
        let mut params = Vec::new();
        let mut fields = std::collections::HashMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header token `{tok}`")))?;
            match k {
                "gamma" | "left" | "right" | "block" => params.push(tok),
                _ => {
                    if fields.insert(k, v).is_some() {
                        return Err(Error::Parse(format!("duplicate header key `{k}`")));
                    }
                }
            }
        }
        let mut take = |k: &str| {
            fields
                .remove(k)
                .ok_or_else(|| Error::Parse(format!("header lacks `{k}`")))
        };
        let config = RunConfig {
            command,
            params: params.join(" ").parse()?,
            init: take("init")?.parse()?,
            steps: parse_num(take("steps")?)?,
            xmin: parse_num(take("xmin")?)?,
            xmax: parse_num(take("xmax")?)?,
            format: take("format")?.parse()?,
            window_mode: take("window-mode")?.parse()?,
            orientation: take("orientation")?.parse()?,
        };
        if let Some(k) = fields.keys().next() {
            return Err(Error::Parse(format!("unknown header key `{k}`")));
        }
        Ok(config)
    }
}

/// Columns reachable from the initial row within `steps` steps. Random
/// rows use exactly their drawn width.
pub fn default_range(
    params: &RuleParams,
    init: &InitSpec,
    tape: &Tape,
    steps: usize,
) -> (i64, i64) {
    if let InitSpec::Random { width, .. } = init {
        return (0, *width as i64 - 1);
    }
    let (lo, hi) = tape.active_extent().unwrap_or((0, 0));
    let s = steps as i64;
    (lo - s * params.reach_right(), hi + s * params.reach_left())
}

/// Fraction of 1s in `xmin..=xmax` for each row.
pub fn density_series(d: &Diagram, xmin: i64, xmax: i64) -> Vec<f64> {
    if xmax < xmin {
        return vec![0.0; d.rows().len()];
    }
    let width = (xmax - xmin + 1) as f64;
    d.rows()
        .iter()
        .map(|row| row.read_range(xmin, xmax).count_ones() as f64 / width)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub config: String,
    pub xmin: i64,
    pub xmax: i64,
    pub density: Vec<f64>,
    pub active_extent: Vec<Option<(i64, i64)>>,
}

impl DensityReport {
    pub fn new(config: &RunConfig, d: &Diagram) -> DensityReport {
        DensityReport {
            config: config.header_line(),
            xmin: config.xmin,
            xmax: config.xmax,
            density: density_series(d, config.xmin, config.xmax),
            active_extent: d.rows().iter().map(Tape::active_extent).collect(),
        }
    }
}
