//! Structured outcome of one check, serialised as JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::coloring::is_k_independent;
use crate::graph::VertexSet;
use crate::graph6::parse_graph6;
use crate::iso::VertexMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Verified,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseDescription {
    /// Order or order range, e.g. `"10"` or `"1-8"`.
    pub n: String,
    pub filter: String,
    pub hypothesis: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub g6: String,
    pub reason: String,
}

/// Machine-checkable evidence attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `classes` partition the vertices of `g6` into at most `m` k-independent sets.
    Colouring {
        g6: String,
        m: usize,
        k: usize,
        classes: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        about: Option<String>,
    },
    /// `map` is an isomorphism from `g6 - vertex` (relabelled by ascending
    /// index) onto the catalog graph `target`.
    DeletedCopy {
        g6: String,
        vertex: usize,
        target: String,
        map: Vec<usize>,
    },
    /// `map` is an isomorphism from `g6` onto the catalog graph `target`.
    Isomorphism {
        g6: String,
        target: String,
        map: Vec<usize>,
    },
}

impl Certificate {
    pub fn colouring(g6: String, p: &crate::coloring::DefectivePartition, about: Option<String>) -> Certificate {
        Certificate::Colouring {
            g6,
            m: p.m,
            k: p.k,
            classes: p.classes().into_iter().map(|c| c.iter().collect()).collect(),
            about,
        }
    }

    /// Re-checks the certificate from its serialised fields alone.
    pub fn revalidate(&self) -> Result<(), String> {
        match self {
            Certificate::Colouring { g6, m, k, classes, .. } => {
                let g = parse_graph6(g6).map_err(|e| e.to_string())?;
                if classes.len() > *m {
                    return Err(format!("{} classes exceed m = {m}", classes.len()));
                }
                let mut covered = VertexSet::EMPTY;
                for class in classes {
                    let set: VertexSet = class.iter().copied().collect();
                    if set.len() != class.len() || !set.intersection(covered).is_empty() {
                        return Err("classes overlap".into());
                    }
                    if !set.is_subset(g.vertices()) {
                        return Err("class contains a non-vertex".into());
                    }
                    if !is_k_independent(&g, set, *k) {
                        return Err(format!("class {class:?} is not {k}-independent"));
                    }
                    covered = covered.union(set);
                }
                if covered != g.vertices() {
                    return Err("classes do not cover every vertex".into());
                }
                Ok(())
            }
            Certificate::DeletedCopy { g6, vertex, target, map } => {
                let g = parse_graph6(g6).map_err(|e| e.to_string())?;
                let sub = g.delete_vertex(*vertex).map_err(|e| e.to_string())?;
                let h = catalog::catalog_graph(target).map_err(|e| e.to_string())?;
                if VertexMap(map.clone()).is_isomorphism(&sub, &h) {
                    Ok(())
                } else {
                    Err(format!("map is not an isomorphism onto {target}"))
                }
            }
            Certificate::Isomorphism { g6, target, map } => {
                let g = parse_graph6(g6).map_err(|e| e.to_string())?;
                let h = catalog::catalog_graph(target).map_err(|e| e.to_string())?;
                if VertexMap(map.clone()).is_isomorphism(&g, &h) {
                    Ok(())
                } else {
                    Err(format!("map is not an isomorphism onto {target}"))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub statement: String,
    pub universe: UniverseDescription,
    pub universe_size: u64,
    pub outcome: Outcome,
    pub counterexamples: Vec<Counterexample>,
    pub certificates: Vec<Certificate>,
    /// Counts gathered along the way (class sizes, branch tallies).
    pub census: BTreeMap<String, u64>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(check_id: &str, statement: &str, universe: UniverseDescription) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            statement: statement.to_string(),
            universe,
            universe_size: 0,
            outcome: Outcome::Verified,
            counterexamples: Vec::new(),
            certificates: Vec::new(),
            census: BTreeMap::new(),
            wall_time_ms: 0,
        }
    }

    pub fn refute(&mut self, g6: impl Into<String>, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            g6: g6.into(),
            reason: reason.into(),
        });
    }

    pub fn tally(&mut self, key: impl Into<String>, by: u64) {
        *self.census.entry(key.into()).or_default() += by;
    }

    /// Sorts counterexamples and fixes the outcome.
    pub fn finish(mut self, started: std::time::Instant) -> Self {
        self.counterexamples
            .sort_by(|a, b| a.g6.cmp(&b.g6).then_with(|| a.reason.cmp(&b.reason)));
        self.outcome = if self.counterexamples.is_empty() {
            Outcome::Verified
        } else {
            Outcome::Refuted
        };
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    /// Re-checks every certificate; returns the failures.
    pub fn revalidate(&self) -> Vec<(usize, String)> {
        self.certificates
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.revalidate().err().map(|e| (i, e)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Copy with the timing field zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}
