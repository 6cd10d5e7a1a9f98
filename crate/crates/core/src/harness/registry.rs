//! Named datasets and where to find them.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{load_edge_list, Graph, LoadedGraph, VertexMapping};

/// Environment variable naming the directory that holds dataset files.
pub const DATA_DIR_ENV: &str = "KMEDIAN_DATA_DIR";

const BUILTIN: &str = include_str!("../../../../datasets/registry.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetEntry {
    pub name: String,
    pub path: PathBuf,
    pub expected_vertices: Option<usize>,
    pub expected_edges: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DatasetRegistry {
    entries: Vec<DatasetEntry>,
}

impl DatasetRegistry {
    /// The manifest compiled into the library.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("builtin registry parses")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    /// One `name path vertices edges` entry per line; `-` for unknown counts.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            if fields.len() != 2 && fields.len() != 4 {
                return Err(parse_err(format!(
                    "expected `name path [vertices edges]`, got {} fields",
                    fields.len()
                )));
            }
            let count = |s: &str| -> Result<Option<usize>> {
                if s == "-" {
                    return Ok(None);
                }
                s.parse()
                    .map(Some)
                    .map_err(|_| parse_err(format!("invalid count {s:?}")))
            };
            let (expected_vertices, expected_edges) = if fields.len() == 4 {
                (count(fields[2])?, count(fields[3])?)
            } else {
                (None, None)
            };
            entries.push(DatasetEntry {
                name: fields[0].to_string(),
                path: PathBuf::from(fields[1]),
                expected_vertices,
                expected_edges,
            });
        }
        Ok(DatasetRegistry { entries })
    }

    pub fn entries(&self) -> &[DatasetEntry] {
        &self.entries
    }

    pub fn find(&self, name: &str) -> Option<&DatasetEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// `$KMEDIAN_DATA_DIR`, if set.
pub fn data_dir_from_env() -> Option<PathBuf> {
    env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

/// Where a dataset's graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum DatasetSource {
    File(PathBuf),
    /// Synthetic graph described by a `gen:` entry.
    Generated(Generator),
}

/// `gen:` dataset entries:
///
/// * `gen:path:N`, `gen:cycle:N`, `gen:star:LEAVES`, `gen:complete:N`
/// * `gen:ba:N:M:SEED` (preferential attachment)
/// * `gen:random:N:P:SEED` (random tree plus edges with probability `P`)
#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    BarabasiAlbert { n: usize, m: usize, seed: u64 },
    Random { n: usize, p: f64, seed: u64 },
}

impl Generator {
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed generator {spec:?}"));
        let parts: Vec<&str> = spec
            .strip_prefix("gen:")
            .ok_or_else(bad)?
            .split(':')
            .collect();
        let int = |i: usize| -> Result<usize> {
            parts.get(i).and_then(|s| s.parse().ok()).ok_or_else(bad)
        };
        let gen = match (parts[0], parts.len()) {
            ("path", 2) => Generator::Path(int(1)?),
            ("cycle", 2) => Generator::Cycle(int(1)?),
            ("star", 2) => Generator::Star(int(1)?),
            ("complete", 2) => Generator::Complete(int(1)?),
            ("ba", 4) => Generator::BarabasiAlbert {
                n: int(1)?,
                m: int(2)?,
                seed: int(3)? as u64,
            },
            ("random", 4) => Generator::Random {
                n: int(1)?,
                p: parts[2].parse().map_err(|_| bad())?,
                seed: int(3)? as u64,
            },
            _ => return Err(bad()),
        };
        let too_small = match gen {
            Generator::Path(n) | Generator::Cycle(n) | Generator::Complete(n) => n < 3,
            Generator::Star(leaves) => leaves < 1,
            Generator::BarabasiAlbert { n, m, .. } => m == 0 || n <= m,
            Generator::Random { n, p, .. } => n < 2 || !(0.0..=1.0).contains(&p),
        };
        if too_small {
            return Err(bad());
        }
        Ok(gen)
    }

    pub fn build(&self) -> Graph {
        match *self {
            Generator::Path(n) => generate::path(n),
            Generator::Cycle(n) => generate::cycle(n),
            Generator::Star(leaves) => generate::star(leaves),
            Generator::Complete(n) => generate::complete(n),
            Generator::BarabasiAlbert { n, m, seed } => generate::barabasi_albert(n, m, seed),
            Generator::Random { n, p, seed } => generate::random_connected(n, p, seed),
        }
    }
}

/// A dataset entry of an experiment after name resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedDataset {
    pub name: String,
    pub source: DatasetSource,
    pub expected_vertices: Option<usize>,
    pub expected_edges: Option<usize>,
}

impl ResolvedDataset {
    /// Resolution order: `gen:` generator, registry name (relative paths
    /// joined to `data_dir`), existing file path, then `data_dir/entry`.
    pub fn resolve(entry: &str, registry: &DatasetRegistry, data_dir: Option<&Path>) -> Self {
        let join = |p: &Path| match data_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p.to_path_buf(),
        };
        if entry.starts_with("gen:") {
            let source = match Generator::parse(entry) {
                Ok(gen) => DatasetSource::Generated(gen),
                // surfaces as a load error for this dataset only
                Err(_) => DatasetSource::File(PathBuf::from(entry)),
            };
            return ResolvedDataset {
                name: entry.to_string(),
                source,
                expected_vertices: None,
                expected_edges: None,
            };
        }
        if let Some(e) = registry.find(entry) {
            return ResolvedDataset {
                name: e.name.clone(),
                source: DatasetSource::File(join(&e.path)),
                expected_vertices: e.expected_vertices,
                expected_edges: e.expected_edges,
            };
        }
        let direct = PathBuf::from(entry);
        let path = if direct.exists() {
            direct
        } else {
            join(&direct)
        };
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| entry.to_string());
        ResolvedDataset {
            name,
            source: DatasetSource::File(path),
            expected_vertices: None,
            expected_edges: None,
        }
    }

    pub fn load(&self) -> Result<LoadedGraph> {
        let loaded = match &self.source {
            DatasetSource::File(path) => load_edge_list(path)?,
            DatasetSource::Generated(gen) => {
                let graph = gen.build();
                LoadedGraph {
                    simple_vertex_count: graph.vertex_count(),
                    simple_edge_count: graph.edge_count(),
                    mapping: VertexMapping::identity(graph.vertex_count()),
                    graph,
                }
            }
        };
        if let Some(warning) = self.size_mismatch(&loaded.graph) {
            log::warn!("{warning}");
        }
        Ok(loaded)
    }

    /// Describes any difference from the manifest's expected sizes.
    pub fn size_mismatch(&self, g: &Graph) -> Option<String> {
        let vertices_ok = self.expected_vertices.is_none_or(|v| v == g.vertex_count());
        let edges_ok = self.expected_edges.is_none_or(|e| e == g.edge_count());
        (!(vertices_ok && edges_ok)).then(|| {
            format!(
                "{}: largest component has {} vertices and {} edges, manifest expects {} and {}",
                self.name,
                g.vertex_count(),
                g.edge_count(),
                self.expected_vertices.map_or("-".into(), |v| v.to_string()),
                self.expected_edges.map_or("-".into(), |e| e.to_string()),
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_has_the_small_networks() {
        let reg = DatasetRegistry::builtin();
        let ns = reg.find("ca-netscience").unwrap();
        assert_eq!(ns.expected_vertices, Some(379));
        assert_eq!(ns.expected_edges, Some(914));
        assert_eq!(reg.find("zebra").unwrap().expected_edges, Some(105));
        assert_eq!(reg.find("USAir87").unwrap().expected_vertices, None);
        assert!(reg.find("karate").is_none());
    }

    #[test]
    fn parse_errors_carry_line() {
        assert!(matches!(
            DatasetRegistry::parse("# c\nfoo bar 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            DatasetRegistry::parse("foo bar x 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn resolution_order() {
        let reg = DatasetRegistry::parse("net sub/net.txt 3 2\n").unwrap();
        let dir = Path::new("/data");
        let r = ResolvedDataset::resolve("net", &reg, Some(dir));
        assert_eq!(
            r.source,
            DatasetSource::File(PathBuf::from("/data/sub/net.txt"))
        );
        assert_eq!(r.expected_vertices, Some(3));
        let r = ResolvedDataset::resolve("other.edges", &reg, Some(dir));
        assert_eq!(r.name, "other");
        assert_eq!(
            r.source,
            DatasetSource::File(PathBuf::from("/data/other.edges"))
        );
        let r = ResolvedDataset::resolve("gen:ba:50:2:7", &reg, None);
        assert_eq!(
            r.source,
            DatasetSource::Generated(Generator::BarabasiAlbert {
                n: 50,
                m: 2,
                seed: 7
            })
        );
    }

    #[test]
    fn generators_parse() {
        assert_eq!(Generator::parse("gen:star:4").unwrap(), Generator::Star(4));
        assert_eq!(
            Generator::parse("gen:path:3").unwrap().build().edge_count(),
            2
        );
        for bad in [
            "gen:star",
            "gen:ba:3:3:1",
            "gen:random:10:2.0:1",
            "gen:nope:1",
            "star:4",
        ] {
            assert!(Generator::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let reg = DatasetRegistry::parse("p gen 3 5\n").unwrap();
        let r = ResolvedDataset::resolve("p", &reg, None);
        let g = generate::path(3);
        let msg = r.size_mismatch(&g).unwrap();
        assert!(msg.contains("expects 3 and 5"), "{msg}");
    }
}
