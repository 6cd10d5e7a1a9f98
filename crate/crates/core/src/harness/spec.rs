//! Experiment description files.
//!
//! ```text
//! # comment
//! datasets = zebra, ca-netscience, gen:ba:100000:3:1
//! methods  = all            # or e.g. degree, vrank, random
//! k_max    = 100
//! n        = 100            # random samples per k
//! seed     = 0
//! outdir   = results
//! exact_k  = 5              # brute-force optimum for k <= exact_k (0 = off)
//! budget   = 2000000000     # subset cap for the brute force
//! timing   = measured       # or `omit` for byte-reproducible output
//! data_dir = /data/networks # else $KMEDIAN_DATA_DIR
//! registry = my-registry.txt
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::centrality::MethodId;
use crate::error::{Error, Result};
use crate::exact::DEFAULT_BUDGET;

/// Whether wall-clock times go into the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Timing {
    #[default]
    Measured,
    /// Every time is written as 0, so reruns are byte-identical.
    Omit,
}

impl FromStr for Timing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "measured" | "on" => Ok(Timing::Measured),
            "omit" | "off" => Ok(Timing::Omit),
            _ => Err(Error::InvalidArgument(format!(
                "timing must be `measured` or `omit`, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    /// Registry names, edge-list paths or `gen:` generators.
    pub datasets: Vec<String>,
    pub methods: Vec<MethodId>,
    pub k_max: usize,
    /// Random subsets drawn per k for the `random` baseline.
    pub samples: usize,
    pub seed: u64,
    pub outdir: PathBuf,
    /// Largest k solved by brute force; 0 disables the optimum tables.
    pub exact_k: usize,
    pub budget: u128,
    pub timing: Timing,
    pub data_dir: Option<PathBuf>,
    pub registry: Option<PathBuf>,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        ExperimentSpec {
            datasets: Vec::new(),
            methods: MethodId::ALL.to_vec(),
            k_max: 100,
            samples: 100,
            seed: 0,
            outdir: PathBuf::from("results"),
            exact_k: 0,
            budget: DEFAULT_BUDGET,
            timing: Timing::Measured,
            data_dir: None,
            registry: None,
        }
    }
}

impl ExperimentSpec {
    /// Reads a spec file. Relative `outdir`, `data_dir` and `registry`
    /// values are taken relative to the file's directory.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut spec = Self::parse(&text)?;
        if let Some(base) = path.parent() {
            let rebase = |p: &mut PathBuf| {
                if p.is_relative() {
                    *p = base.join(&*p);
                }
            };
            rebase(&mut spec.outdir);
            spec.data_dir.as_mut().map(rebase);
            spec.registry.as_mut().map(rebase);
        }
        Ok(spec)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = ExperimentSpec::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = |v: &str| -> Result<u128> {
                v.replace('_', "")
                    .parse()
                    .map_err(|_| err(format!("{key}: not a non-negative integer: {v:?}")))
            };
            match key {
                "datasets" | "dataset" => {
                    spec.datasets = list(value).map(str::to_string).collect();
                }
                "methods" => {
                    spec.methods = if value == "all" {
                        MethodId::ALL.to_vec()
                    } else {
                        list(value)
                            .map(|m| m.parse().map_err(|e: Error| err(e.to_string())))
                            .collect::<Result<_>>()?
                    };
                }
                "k_max" => spec.k_max = number(value)? as usize,
                "n" | "samples" => spec.samples = number(value)? as usize,
                "seed" => spec.seed = number(value)? as u64,
                "outdir" => spec.outdir = PathBuf::from(value),
                "exact_k" => spec.exact_k = number(value)? as usize,
                "budget" => spec.budget = number(value)?,
                "timing" => spec.timing = value.parse().map_err(|e: Error| err(e.to_string()))?,
                "data_dir" => spec.data_dir = Some(PathBuf::from(value)),
                "registry" => spec.registry = Some(PathBuf::from(value)),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::InvalidArgument("k_max must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidArgument("no methods selected".into()));
        }
        if self.datasets.is_empty() {
            return Err(Error::InvalidArgument("no datasets given".into()));
        }
        if self.samples == 0 && self.methods.contains(&MethodId::Random) {
            return Err(Error::InvalidArgument(
                "the random baseline needs n >= 1".into(),
            ));
        }
        Ok(())
    }

    /// Selected methods, deduplicated, in enumeration order.
    pub fn method_set(&self) -> Vec<MethodId> {
        MethodId::ALL
            .into_iter()
            .filter(|m| self.methods.contains(m))
            .collect()
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}
