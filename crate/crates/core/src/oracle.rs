//! Brute-force enumeration of cluster variables by seed mutation.
//!
//! Seeds are stored as an exchange matrix plus interned variable ids, and
//! mutation is implemented directly on the matrix, independently of
//! [`Quiver::mutate`](crate::quiver::Quiver::mutate).

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use dashmap::{DashMap, DashSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;
use crate::quiver::{Seed, Vertex};

type VarId = u32;

#[derive(Default)]
struct Interner {
    ids: DashMap<RationalFunction, VarId>,
    values: RwLock<Vec<RationalFunction>>,
}

impl Interner {
    fn intern(&self, v: RationalFunction) -> VarId {
        if let Some(id) = self.ids.get(&v) {
            return *id;
        }
        let mut values = self.values.write().expect("interner lock");
        // re-check under the write lock
        if let Some(id) = self.ids.get(&v) {
            return *id;
        }
        let id = values.len() as VarId;
        values.push(v.clone());
        self.ids.insert(v, id);
        id
    }

    fn get(&self, id: VarId) -> RationalFunction {
        self.values.read().expect("interner lock")[id as usize].clone()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    /// row-major skew-symmetric exchange matrix
    b: Vec<i32>,
    vars: Vec<VarId>,
}

#[derive(PartialEq, Eq, Hash)]
struct ExchangeKey {
    old: VarId,
    ins: Vec<(VarId, i32)>,
    outs: Vec<(VarId, i32)>,
}

struct Explorer<'a> {
    size: usize,
    interner: &'a Interner,
    exchanges: DashMap<ExchangeKey, VarId>,
}

impl Explorer<'_> {
    fn exchange(&self, s: &State, k: usize) -> Result<VarId> {
        let n = self.size;
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        for i in 0..n {
            let bik = s.b[i * n + k];
            if bik > 0 {
                ins.push((s.vars[i], bik));
            } else if bik < 0 {
                outs.push((s.vars[i], -bik));
            }
        }
        ins.sort_unstable();
        outs.sort_unstable();
        let key = ExchangeKey { old: s.vars[k], ins, outs };
        if let Some(id) = self.exchanges.get(&key) {
            return Ok(*id);
        }
        let product = |list: &[(VarId, i32)]| {
            list.iter().fold(RationalFunction::one(), |acc, &(id, c)| {
                &acc * &self.interner.get(id).pow(c as u32)
            })
        };
        let value = (&product(&key.ins) + &product(&key.outs)).checked_div(&self.interner.get(key.old))?;
        let id = self.interner.intern(value);
        self.exchanges.insert(key, id);
        Ok(id)
    }

    fn mutate(&self, s: &State, k: usize) -> Result<State> {
        let n = self.size;
        let mut b = s.b.clone();
        for i in 0..n {
            for j in 0..n {
                let idx = i * n + j;
                if i == k || j == k {
                    b[idx] = -s.b[idx];
                } else {
                    let (bik, bkj) = (s.b[i * n + k], s.b[k * n + j]);
                    b[idx] = s.b[idx] + (bik.abs() * bkj + bik * bkj.abs()) / 2;
                }
            }
        }
        let mut vars = s.vars.clone();
        vars[k] = self.exchange(s, k)?;
        Ok(State { b, vars })
    }
}

/// Variables reached within a mutation-depth bound, each with the smallest
/// depth at which it appeared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub depth: usize,
    pub seeds: usize,
    pub variables: BTreeMap<RationalFunction, usize>,
}

impl Enumeration {
    pub fn contains(&self, v: &RationalFunction) -> bool {
        self.variables.contains_key(v)
    }

    pub fn witness_depth(&self, v: &RationalFunction) -> Option<usize> {
        self.variables.get(v).copied()
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }
}

/// Breadth-first exploration of all mutation sequences of length at most
/// `depth` from `seed`. Labelled seeds already seen are not expanded again.
pub fn enumerate_by_mutation(seed: &Seed, depth: usize) -> Result<Enumeration> {
    let vertices: Vec<Vertex> = seed.quiver().vertices().collect();
    let size = vertices.len();
    let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut b = vec![0i32; size * size];
    for (a, c) in seed.quiver().arrows() {
        let (i, j) = (index[&a.source], index[&a.target]);
        b[i * size + j] += c as i32;
        b[j * size + i] -= c as i32;
    }
    let interner = Interner::default();
    let vars = vertices
        .iter()
        .map(|v| Ok(interner.intern(seed.variable(*v)?.clone())))
        .collect::<Result<Vec<_>>>()?;
    let explorer = Explorer {
        size,
        interner: &interner,
        exchanges: DashMap::new(),
    };

    let first_seen: DashMap<VarId, usize> = DashMap::new();
    for &id in &vars {
        first_seen.insert(id, 0);
    }
    let start = State { b, vars };
    let visited: DashSet<State> = DashSet::new();
    visited.insert(start.clone());
    // each frontier entry remembers the vertex it was reached by, which
    // would only undo the last step
    let mut frontier: Vec<(State, Option<usize>)> = vec![(start, None)];
    for level in 1..=depth {
        let next: Vec<(State, Option<usize>)> = frontier
            .par_iter()
            .map(|(s, last)| {
                let mut out = Vec::new();
                for k in (0..size).filter(|k| Some(*k) != *last) {
                    let m = explorer.mutate(s, k)?;
                    first_seen.entry(m.vars[k]).or_insert(level);
                    if visited.insert(m.clone()) {
                        out.push((m, Some(k)));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }

    let variables = first_seen
        .into_iter()
        .map(|(id, d)| (interner.get(id), d))
        .collect();
    Ok(Enumeration {
        depth,
        seeds: visited.len(),
        variables,
    })
}

/// Membership verdict for one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub entry: RationalFunction,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_depth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub depth: usize,
    pub oracle_size: usize,
    pub pass: bool,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn missing(&self) -> impl Iterator<Item = &RationalFunction> {
        self.entries.iter().filter(|e| !e.found).map(|e| &e.entry)
    }
}

/// Checks every value against an enumeration.
pub fn verify_values<'a>(values: impl IntoIterator<Item = &'a RationalFunction>, oracle: &Enumeration) -> Report {
    let entries: Vec<ReportEntry> = values
        .into_iter()
        .map(|v| ReportEntry {
            entry: v.clone(),
            found: oracle.contains(v),
            witness_depth: oracle.witness_depth(v),
        })
        .collect();
    Report {
        depth: oracle.depth,
        oracle_size: oracle.len(),
        pass: entries.iter().all(|e| e.found),
        entries,
    }
}

/// Default exploration depth for D̃ₙ.
pub fn default_depth(n: usize) -> usize {
    if n <= 4 {
        9
    } else {
        7
    }
}

/// Thread cap from `FRIEZE_LAB_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("FRIEZE_LAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("FRIEZE_LAB_THREADS must be a positive integer, got {value:?}")))?;
    // a global pool may already exist, in which case the cap is not applied
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    Ok(())
}
