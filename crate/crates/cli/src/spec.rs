//! Graph sources and layer factors named on the command line.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use pmcount::format::parse_edge_list;
use pmcount::graph::star_graph;
use pmcount::{cycle_graph, path_graph, random_tree, Graph};

use crate::error::CliError;

/// `path:N`, `cycle:N`, `star:N`, `tree-random:N:SEED`, or a file path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    RandomTree { n: usize, seed: u64 },
    File(String),
}

fn number<T: FromStr>(spec: &str, field: &str) -> Result<T, CliError> {
    field
        .parse()
        .map_err(|_| CliError::Spec(format!("{spec:?}: {field:?} is not a non-negative integer")))
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let spec = match parts.as_slice() {
            ["path", n] => GraphSpec::Path(number(s, n)?),
            ["cycle", n] => GraphSpec::Cycle(number(s, n)?),
            ["star", n] => GraphSpec::Star(number(s, n)?),
            ["tree-random", n, seed] => GraphSpec::RandomTree {
                n: number(s, n)?,
                seed: number(s, seed)?,
            },
            [kind, ..] if matches!(*kind, "path" | "cycle" | "star" | "tree-random") => {
                return Err(CliError::Spec(format!("{s:?}: wrong number of fields")))
            }
            _ => GraphSpec::File(s.to_string()),
        };
        match spec {
            GraphSpec::Path(0) | GraphSpec::RandomTree { n: 0, .. } => {
                Err(CliError::Spec(format!("{s:?}: need at least one vertex")))
            }
            GraphSpec::Cycle(n) if n < 3 => Err(CliError::Spec(format!(
                "{s:?}: a cycle needs at least three vertices"
            ))),
            other => Ok(other),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::RandomTree { n, seed } => write!(f, "tree-random:{n}:{seed}"),
            GraphSpec::File(p) => f.write_str(p),
        }
    }
}

impl GraphSpec {
    pub fn load(&self) -> Result<Graph, CliError> {
        Ok(match self {
            GraphSpec::Path(n) => path_graph(*n)?.into_graph(),
            GraphSpec::Cycle(n) => cycle_graph(*n)?,
            GraphSpec::Star(n) => star_graph(*n)?.into_graph(),
            GraphSpec::RandomTree { n, seed } => random_tree(*n, *seed)?.into_graph(),
            GraphSpec::File(p) => parse_edge_list(&read(p)?)?,
        })
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(Path::new(path)).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// The left factor of a product: `pN` (path) or `cN` (cycle).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layers {
    Path(usize),
    Cycle(usize),
}

impl FromStr for Layers {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected pN or cN (e.g. p4, c4), got {s:?}");
        let (kind, n) = s.split_at_checked(1).ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "p" | "P" if n >= 1 => Ok(Layers::Path(n)),
            "c" | "C" if n >= 3 => Ok(Layers::Cycle(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Layers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layers::Path(n) => write!(f, "p{n}"),
            Layers::Cycle(n) => write!(f, "c{n}"),
        }
    }
}

impl serde::Serialize for Layers {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Layers {
    pub fn graph(self) -> Graph {
        match self {
            Layers::Path(n) => path_graph(n).expect("n >= 1").into_graph(),
            Layers::Cycle(n) => cycle_graph(n).expect("n >= 3"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_specs() {
        assert_eq!("path:4".parse::<GraphSpec>().unwrap(), GraphSpec::Path(4));
        assert_eq!(
            "tree-random:8:42".parse::<GraphSpec>().unwrap(),
            GraphSpec::RandomTree { n: 8, seed: 42 }
        );
        assert_eq!(
            "dir/g.txt".parse::<GraphSpec>().unwrap(),
            GraphSpec::File("dir/g.txt".into())
        );
        for bad in ["path:x", "path:0", "cycle:2", "tree-random:5", "path:1:2"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
        let s = "tree-random:6:9".parse::<GraphSpec>().unwrap();
        assert_eq!(s.to_string(), "tree-random:6:9");
    }

    #[test]
    fn layer_specs() {
        assert_eq!("c4".parse::<Layers>().unwrap(), Layers::Cycle(4));
        assert_eq!("p3".parse::<Layers>().unwrap(), Layers::Path(3));
        for bad in ["", "c2", "p0", "q4", "p"] {
            assert!(bad.parse::<Layers>().is_err(), "{bad}");
        }
        assert_eq!(Layers::Cycle(4).graph().edge_count(), 4);
    }
}
