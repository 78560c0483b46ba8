//! Exhaustive graph universes, memoised in memory and optionally cached on
//! disk as sorted `.g6` files with a version sidecar.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::coloring;
use crate::enumerate::{EnumerationTask, Filter};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};

use super::VerifyError;

/// Bumped whenever enumeration output could change.
pub const CACHE_VERSION: &str = "defcol-universe 1";

/// Canonical representatives of one (order, filter) pair, sorted by graph6.
#[derive(Debug)]
pub struct Universe {
    pub n: usize,
    pub filter: Filter,
    pub graphs: Vec<Graph>,
    pub g6: Vec<String>,
}

impl Universe {
    fn from_graphs(n: usize, filter: Filter, graphs: Vec<Graph>) -> Universe {
        let mut pairs: Vec<(String, Graph)> = graphs.into_iter().map(|g| (write_graph6(&g), g)).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let (g6, graphs) = pairs.into_iter().unzip();
        Universe { n, filter, graphs, g6 }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

type Memo<T> = Mutex<HashMap<(usize, Filter), Arc<T>>>;

pub struct Universes {
    cache_dir: Option<PathBuf>,
    memo: Memo<Universe>,
    chi1: Memo<Vec<usize>>,
}

impl Universes {
    pub fn in_memory() -> Universes {
        Universes {
            cache_dir: None,
            memo: Mutex::new(HashMap::new()),
            chi1: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Universes {
        Universes {
            cache_dir: Some(dir.into()),
            ..Universes::in_memory()
        }
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn get(&self, n: usize, filter: Filter) -> Result<Arc<Universe>, VerifyError> {
        if let Some(u) = self.memo.lock().expect("memo lock").get(&(n, filter)) {
            return Ok(u.clone());
        }
        let u = Arc::new(self.load_or_build(n, filter)?);
        self.memo.lock().expect("memo lock").insert((n, filter), u.clone());
        Ok(u)
    }

    pub fn triangle_free(&self, n: usize) -> Result<Arc<Universe>, VerifyError> {
        self.get(n, Filter::TriangleFree)
    }

    /// `chi_1` of every member, aligned with `get(n, filter).graphs`.
    pub fn chi1(&self, n: usize, filter: Filter) -> Result<Arc<Vec<usize>>, VerifyError> {
        if let Some(c) = self.chi1.lock().expect("memo lock").get(&(n, filter)) {
            return Ok(c.clone());
        }
        let u = self.get(n, filter)?;
        let c: Arc<Vec<usize>> = Arc::new(u.graphs.par_iter().map(|g| coloring::chi(g, 1)).collect());
        self.chi1.lock().expect("memo lock").insert((n, filter), c.clone());
        Ok(c)
    }

    fn build(n: usize, filter: Filter) -> Result<Universe, VerifyError> {
        let graphs = if n == 0 {
            vec![Graph::empty(0)]
        } else {
            EnumerationTask::new(n, filter)?.collect()
        };
        Ok(Universe::from_graphs(n, filter, graphs))
    }

    fn load_or_build(&self, n: usize, filter: Filter) -> Result<Universe, VerifyError> {
        let Some(dir) = &self.cache_dir else {
            return Self::build(n, filter);
        };
        let path = cache_path(dir, n, filter);
        if let Some(u) = read_cache(&path, n, filter)? {
            return Ok(u);
        }
        let u = Self::build(n, filter)?;
        write_cache(&path, &u)?;
        Ok(u)
    }
}

pub fn cache_path(dir: &Path, n: usize, filter: Filter) -> PathBuf {
    dir.join(format!("{}-{n}.g6", filter.tag()))
}

fn stamp_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".version");
    PathBuf::from(s)
}

/// `None` when the file or stamp is missing or stale.
fn read_cache(path: &Path, n: usize, filter: Filter) -> Result<Option<Universe>, VerifyError> {
    match fs::read_to_string(stamp_path(path)) {
        Ok(s) if s.trim() == CACHE_VERSION => {}
        _ => return Ok(None),
    }
    let Ok(file) = fs::File::open(path) else {
        return Ok(None);
    };
    let mut graphs = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| VerifyError::Io(path.display().to_string(), e.to_string()))?;
        if line.is_empty() {
            continue;
        }
        match parse_graph6(&line) {
            Ok(g) if g.order() == n => graphs.push(g),
            // a damaged cache is rebuilt rather than trusted
            _ => return Ok(None),
        }
    }
    Ok(Some(Universe::from_graphs(n, filter, graphs)))
}

fn write_cache(path: &Path, u: &Universe) -> Result<(), VerifyError> {
    let io = |e: std::io::Error| VerifyError::Io(path.display().to_string(), e.to_string());
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io)?;
    }
    let tmp = path.with_extension("g6.tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp).map_err(io)?);
        for s in &u.g6 {
            writeln!(w, "{s}").map_err(io)?;
        }
        w.flush().map_err(io)?;
    }
    fs::rename(&tmp, path).map_err(io)?;
    fs::write(stamp_path(path), format!("{CACHE_VERSION}\n")).map_err(io)?;
    Ok(())
}
