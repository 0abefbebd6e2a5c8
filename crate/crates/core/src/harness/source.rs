use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::str::FromStr;

use super::enumerate::{enumerate_graphs, GnpStream, MAX_BUILTIN_ORDER};
use super::grid::ParamGrid;
use super::{ClassFilter, HarnessError};
use crate::constructions::ConstructionSpec;
use crate::graph::Graph;

/// A family of constructions: a kind plus a grid over its parameters.
/// Parameter combinations the builder rejects are skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionGrid {
    pub kind: String,
    pub grid: ParamGrid,
}

impl ConstructionGrid {
    pub fn specs(&self) -> Result<Vec<ConstructionSpec>, HarnessError> {
        let no_invariants = |_: &str| Ok(None);
        let cells = self.grid.expand(&no_invariants).map_err(|e| match e {
            super::grid::ExpandError::Fatal(e) => e,
            super::grid::ExpandError::Analysis(e) => HarnessError::Config(e.to_string()),
        })?;
        let mut specs = Vec::new();
        // Unknown kinds and missing parameters are configuration errors;
        // out-of-domain values just drop the cell.
        ConstructionSpec::from_parts(&self.kind, |k| self.grid.names().any(|n| n == k).then_some(0))
            .map_err(|e| HarnessError::Config(e.0))?;
        for cell in cells.iter().filter(|c| c.values().all(|&v| v >= 0)) {
            let spec = ConstructionSpec::from_parts(&self.kind, |k| cell.get(k).copied())
                .map_err(|e| HarnessError::Config(e.0))?;
            if spec.build().is_ok() {
                specs.push(spec);
            }
        }
        Ok(specs)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    /// Every labeled graph on `1..=max_n` vertices.
    Builtin {
        max_n: usize,
    },
    /// One graph6 record per line; `>>graph6<<` headers and blank lines are ignored.
    Graph6File(PathBuf),
    Gnp {
        n: usize,
        p: f64,
        count: u64,
        seed: u64,
    },
    Constructions(Vec<ConstructionGrid>),
    /// Explicit graphs, mostly for tests and library callers.
    Graphs(Vec<Graph>),
}

/// A graph drawn from a source, with the construction that produced it if any.
#[derive(Debug, Clone)]
pub struct SourceItem {
    pub graph: Graph,
    pub construction: Option<ConstructionSpec>,
}

pub type SourceIter = Box<dyn Iterator<Item = Result<SourceItem, HarnessError>> + Send>;

impl GraphSource {
    pub fn validate(&self) -> Result<(), HarnessError> {
        match self {
            GraphSource::Builtin { max_n } if *max_n > MAX_BUILTIN_ORDER => Err(HarnessError::Config(format!(
                "builtin enumeration stops at n = {MAX_BUILTIN_ORDER}; use a graph6 stream for larger orders"
            ))),
            GraphSource::Gnp { n, p, seed, .. } => GnpStream::new(*n, *p, *seed).map(|_| ()),
            GraphSource::Constructions(grids) => grids.iter().try_for_each(|g| g.specs().map(|_| ())),
            _ => Ok(()),
        }
    }

    /// Streams the source, pre-filtering builtin enumeration by `class`.
    /// Other sources yield everything; callers filter.
    pub fn stream(&self, class: ClassFilter) -> Result<SourceIter, HarnessError> {
        self.validate()?;
        let plain = |g: Graph| Ok(SourceItem { graph: g, construction: None });
        Ok(match self {
            GraphSource::Builtin { max_n } => {
                let mut parts = Vec::new();
                for n in 1..=*max_n {
                    parts.push(enumerate_graphs(n, class)?);
                }
                Box::new(parts.into_iter().flatten().map(plain))
            }
            GraphSource::Graph6File(path) => {
                let file = File::open(path).map_err(|e| HarnessError::io(path, e))?;
                let path = path.clone();
                Box::new(BufReader::new(file).lines().enumerate().filter_map(move |(i, line)| {
                    let line = match line {
                        Ok(l) => l,
                        Err(e) => return Some(Err(HarnessError::io(&path, e))),
                    };
                    let record = line.trim().trim_start_matches(">>graph6<<");
                    if record.is_empty() {
                        return None;
                    }
                    Some(
                        Graph::parse_graph6(record)
                            .map(|graph| SourceItem { graph, construction: None })
                            .map_err(|source| HarnessError::Record { path: path.clone(), line: i + 1, source }),
                    )
                }))
            }
            GraphSource::Gnp { n, p, count, seed } => {
                let stream = GnpStream::new(*n, *p, *seed)?;
                Box::new(stream.take(*count as usize).map(plain))
            }
            GraphSource::Constructions(grids) => {
                let mut items = Vec::new();
                for grid in grids {
                    for spec in grid.specs()? {
                        let graph = spec.build().expect("specs() only keeps buildable cells");
                        items.push(Ok(SourceItem { graph, construction: Some(spec) }));
                    }
                }
                Box::new(items.into_iter())
            }
            GraphSource::Graphs(graphs) => Box::new(graphs.clone().into_iter().map(plain)),
        })
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Builtin { max_n } => write!(f, "builtin:{max_n}"),
            GraphSource::Graph6File(path) => write!(f, "g6:{}", path.display()),
            GraphSource::Gnp { n, p, count, seed } => write!(f, "gnp:{n},{p},{count},{seed}"),
            GraphSource::Constructions(grids) => {
                let parts: Vec<String> = grids.iter().map(|g| format!("construction:{}:{}", g.kind, g.grid)).collect();
                f.write_str(&parts.join(";"))
            }
            GraphSource::Graphs(graphs) => write!(f, "explicit:{}", graphs.len()),
        }
    }
}

impl FromStr for GraphSource {
    type Err = HarnessError;

    /// `builtin:N`, `g6:FILE`, `gnp:N,P,COUNT,SEED`, or one or more
    /// `construction:KIND:GRID` joined by `;`.
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let bad = |why: &str| HarnessError::Config(format!("bad graph source {s:?}: {why}"));
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected KIND:ARGS"))?;
        match kind {
            "builtin" => {
                let max_n = rest.trim().parse().map_err(|_| bad("expected builtin:N"))?;
                Ok(GraphSource::Builtin { max_n })
            }
            "g6" => {
                if rest.is_empty() {
                    return Err(bad("missing file name"));
                }
                Ok(GraphSource::Graph6File(PathBuf::from(rest)))
            }
            "gnp" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                let [n, p, count, seed] = parts[..] else {
                    return Err(bad("expected gnp:N,P,COUNT,SEED"));
                };
                Ok(GraphSource::Gnp {
                    n: n.parse().map_err(|_| bad("N"))?,
                    p: p.parse().map_err(|_| bad("P"))?,
                    count: count.parse().map_err(|_| bad("COUNT"))?,
                    seed: seed.parse().map_err(|_| bad("SEED"))?,
                })
            }
            "construction" => {
                let mut grids = Vec::new();
                for part in s.split(';') {
                    let body = part
                        .trim()
                        .strip_prefix("construction:")
                        .ok_or_else(|| bad("every part must start with construction:"))?;
                    let (kind, grid) = body.split_once(':').unwrap_or((body, ""));
                    grids.push(ConstructionGrid { kind: kind.to_string(), grid: grid.parse()? });
                }
                Ok(GraphSource::Constructions(grids))
            }
            _ => Err(bad("unknown kind")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn collect(src: &GraphSource, class: ClassFilter) -> Vec<SourceItem> {
        src.stream(class).unwrap().map(Result::unwrap).collect()
    }

    #[test]
    fn parses_and_displays() {
        for s in ["builtin:5", "gnp:10,0.5,100,7", "g6:graphs.g6", "construction:hnkc:n=5..16,c=5..n,k=2..(c-1)/2"] {
            let src: GraphSource = s.parse().unwrap();
            assert_eq!(src.to_string().parse::<GraphSource>().unwrap(), src);
        }
        assert!("builtin:x".parse::<GraphSource>().is_err());
        assert!("gnp:1,2".parse::<GraphSource>().is_err());
        assert!("random:3".parse::<GraphSource>().is_err());
        assert!("builtin:8".parse::<GraphSource>().unwrap().stream(ClassFilter::All).is_err());
    }

    #[test]
    fn builtin_covers_all_orders() {
        let src = GraphSource::Builtin { max_n: 4 };
        assert_eq!(collect(&src, ClassFilter::All).len(), 1 + 2 + 8 + 64);
        assert_eq!(collect(&src, ClassFilter::Connected).len(), 1 + 1 + 4 + 38);
    }

    #[test]
    fn construction_grid_skips_invalid_cells() {
        let src: GraphSource = "construction:shared-cliques:n=5..9,l=3..n".parse().unwrap();
        let items = collect(&src, ClassFilter::All);
        assert!(items.iter().all(|it| it.construction.is_some()));
        // (l-2) | (n-1): n=5: l=3,4,5; n=6: l=3,7(no)... computed directly.
        let expected: usize = (5..=9).map(|n: usize| (3..=n).filter(|l| (n - 1).is_multiple_of(l - 2)).count()).sum();
        assert_eq!(items.len(), expected);
        assert!("construction:wheel:n=5".parse::<GraphSource>().unwrap().validate().is_err());
        assert!("construction:hnkc:n=5".parse::<GraphSource>().unwrap().validate().is_err());
    }

    #[test]
    fn graph6_file_reports_line_numbers() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, ">>graph6<<Bw\n\nDQc\nnot-a-graph").unwrap();
        let src = GraphSource::Graph6File(f.path().to_path_buf());
        let items: Vec<_> = src.stream(ClassFilter::All).unwrap().collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].as_ref().unwrap().graph, Graph::complete(3).unwrap());
        assert!(matches!(items[2], Err(HarnessError::Record { line: 4, .. })));
        let missing = GraphSource::Graph6File("/nonexistent/x.g6".into());
        assert!(matches!(missing.stream(ClassFilter::All), Err(HarnessError::Io { .. })));
    }
}
