use std::fs;
use std::path::Path;
use std::str::FromStr;

use spiderstar::{Spider, Tree};

use crate::{CliError, Source};

/// Inclusive range of set sizes: `3`, `1..4` or `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad set size `{x}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let t = num(s)?;
                (t, t)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("set-size range `{s}` must satisfy 1 <= lo <= hi"));
        }
        Ok(Self { lo, hi })
    }
}

impl TRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

pub(crate) struct Loaded {
    pub label: String,
    pub tree: Tree,
    pub spider: Option<Spider>,
}

pub(crate) fn spider(descriptor: &str) -> Result<Spider, CliError> {
    descriptor
        .parse::<Spider>()
        .map_err(|e| CliError::BadInput(e.to_string()))
}

pub(crate) fn tree_file(path: &Path) -> Result<Tree, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        context: format!("reading {}", path.display()),
        source,
    })?;
    Tree::parse_edge_list(&text).map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

pub(crate) fn load(source: &Source) -> Result<Loaded, CliError> {
    match (&source.spider, &source.tree) {
        (Some(desc), None) => {
            let s = spider(desc)?;
            Ok(Loaded {
                label: format!("spider:{}", s.descriptor()),
                tree: s.tree().clone(),
                spider: Some(s),
            })
        }
        (None, Some(path)) => Ok(Loaded {
            label: path.display().to_string(),
            tree: tree_file(path)?,
            spider: None,
        }),
        _ => Err(CliError::BadInput(
            "give exactly one of --spider or --tree".into(),
        )),
    }
}
