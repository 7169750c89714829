use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use sombor::graph::{parse_edge_list, parse_graph6, Graph};
use sombor::qspr::acid_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    Cycle,
    Complete,
    /// K_k joined to K_1 ⊔ K_{n-k-1}; needs --k
    Knk,
    /// acid skeleton; --n is the carbon count
    Acid,
}

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// graph6 string
    #[arg(long)]
    pub graph6: Option<String>,
    /// file holding one graph6 string, or a `u,v` edge list if it ends in .csv
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// named family, sized by --n (and --k for knk)
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
pub struct FamilyParams {
    /// vertex count (carbon count for --family acid)
    #[arg(long)]
    pub n: Option<usize>,
    /// connectivity parameter for --family knk
    #[arg(long)]
    pub k: Option<usize>,
}

pub fn build_family(family: Family, n: usize, k: Option<usize>) -> Result<Graph> {
    Ok(match family {
        Family::Path => Graph::path(n),
        Family::Star => Graph::star(n),
        Family::Cycle => Graph::cycle(n)?,
        Family::Complete => Graph::complete(n),
        Family::Knk => {
            let Some(k) = k else {
                bail!("--family knk needs --k")
            };
            Graph::k_n_k(n, k)?
        }
        Family::Acid => acid_graph(n)?,
    })
}

pub fn resolve(source: &GraphSource, params: &FamilyParams) -> Result<Graph> {
    if let Some(s) = &source.graph6 {
        return Ok(parse_graph6(s)?);
    }
    if let Some(path) = &source.file {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        if path.extension().is_some_and(|e| e == "csv") {
            return Ok(parse_edge_list(&text, None)?);
        }
        return Ok(parse_graph6(&text)?);
    }
    let family = source.family.expect("clap enforces one source");
    build_family(family, params.n.expect("clap enforces --n"), params.k)
}
