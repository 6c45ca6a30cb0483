use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::Args;
use thompson_links::{GridDiagram, HalfGrid, Permutation, SdPartition, TreePair};

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Parse(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
        }
    }
}

pub fn domain(e: impl fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

pub fn parse(e: impl fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Tree pair "<top>|<bottom>", e.g. "(..)|(..)"
    #[arg(long)]
    pub trees: Option<String>,
    /// Top and bottom partitions, e.g. "0,1/2,1" "0,1/2,1"
    #[arg(long, num_args = 2, value_names = ["TOP", "BOTTOM"])]
    pub partitions: Option<Vec<String>>,
    /// Top and bottom permutations, e.g. "4 2 5 3 1 6" "3 1 5 2 6 4"
    #[arg(long, num_args = 2, value_names = ["PLUS", "MINUS"])]
    pub perms: Option<Vec<String>>,
    /// File holding a grid line, or two half grid lines (top, then bottom)
    #[arg(long)]
    pub grid_file: Option<PathBuf>,
}

/// What an input resolves to.
pub enum Input {
    Halves { top: HalfGrid, bottom: HalfGrid, pair: Option<TreePair> },
    Grid(GridDiagram),
}

impl Source {
    pub fn resolve(&self, reduce: bool) -> Result<Input, CliError> {
        let pair = if let Some(t) = &self.trees {
            Some(t.parse::<TreePair>().map_err(parse)?)
        } else if let Some(p) = &self.partitions {
            let top: SdPartition = p[0].parse().map_err(|e| parse(format!("top partition: {e}")))?;
            let bottom: SdPartition = p[1].parse().map_err(|e| parse(format!("bottom partition: {e}")))?;
            Some(TreePair::from_partitions(&top, &bottom).map_err(domain)?)
        } else {
            None
        };
        if let Some(pair) = pair {
            let pair = if reduce { pair.reduce() } else { pair };
            let top = HalfGrid::from_tree(pair.top()).map_err(domain)?;
            let bottom = HalfGrid::from_tree(pair.bottom()).map_err(domain)?;
            return Ok(Input::Halves { top, bottom, pair: Some(pair) });
        }
        if let Some(p) = &self.perms {
            let decode = |s: &str| -> Result<HalfGrid, CliError> {
                let sigma: Permutation = s.parse().map_err(|e| match e {
                    thompson_links::halfgrid::HalfGridError::NotAPermutation(_) => domain(e),
                    _ => parse(e),
                })?;
                HalfGrid::perm_decode(&sigma).map_err(domain)
            };
            return Ok(Input::Halves { top: decode(&p[0])?, bottom: decode(&p[1])?, pair: None });
        }
        let path = self.grid_file.as_ref().expect("clap requires one source");
        let text = fs::read_to_string(path).map_err(|e| domain(format!("{}: {e}", path.display())))?;
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        match lines.as_slice() {
            [g] => Ok(Input::Grid(g.parse().map_err(parse)?)),
            [t, b] => Ok(Input::Halves { top: t.parse().map_err(parse)?, bottom: b.parse().map_err(parse)?, pair: None }),
            _ => Err(parse(format!("{}: expected one grid line or two half grid lines", path.display()))),
        }
    }
}

impl Input {
    /// The grid diagram: oriented when the halves are compatible and
    /// `unoriented` is off. Incompatible halves without `unoriented` are an error.
    pub fn grid(&self, unoriented: bool) -> Result<GridDiagram, CliError> {
        match self {
            Input::Grid(g) => Ok(if unoriented { g.unoriented() } else { g.clone() }),
            Input::Halves { top, bottom, .. } => {
                if unoriented {
                    top.assemble_unoriented(bottom).map_err(domain)
                } else {
                    top.assemble(bottom).map_err(|e| domain(format!("{e} (use --unoriented)")))
                }
            }
        }
    }
}
