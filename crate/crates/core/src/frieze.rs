//! Frieze function on the translation quiver ℤQ of a D̃ₙ quiver and its
//! modelled quiver (forks glued, fork values multiplied).

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;
use crate::quiver::{DTilde, Fork, ForkKind, Quiver, Seed, Vertex};

/// Horizontal line of the modelled quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelledLine {
    /// glued vertices 1 and 2
    Bottom,
    Interior(Vertex),
    /// glued vertices n and n+1
    Top,
}

impl ModelledLine {
    /// Lines from bottom to top: `Bottom, 3, ..., n-1, Top`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut lines = vec![ModelledLine::Bottom];
        lines.extend((3..n as Vertex).map(ModelledLine::Interior));
        lines.push(ModelledLine::Top);
        lines
    }
}

impl fmt::Display for ModelledLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelledLine::Bottom => f.write_str("bottom"),
            ModelledLine::Top => f.write_str("top"),
            ModelledLine::Interior(i) => write!(f, "{i}"),
        }
    }
}

impl Serialize for ModelledLine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Vertices of an acyclic quiver with every arrow going from an earlier to
/// a later vertex.
pub fn topological_order(q: &Quiver) -> Result<Vec<Vertex>> {
    let mut indegree: BTreeMap<Vertex, usize> = q.vertices().map(|v| (v, 0)).collect();
    for (a, _) in q.arrows() {
        *indegree.get_mut(&a.target).expect("arrow endpoint") += 1;
    }
    let mut ready: Vec<Vertex> = indegree.iter().filter(|e| *e.1 == 0).map(|e| *e.0).collect();
    let mut order = Vec::with_capacity(indegree.len());
    while let Some(v) = ready.pop() {
        order.push(v);
        for (t, _) in q.out_arrows(v) {
            let d = indegree.get_mut(&t).expect("arrow endpoint");
            *d -= 1;
            if *d == 0 {
                ready.push(t);
            }
        }
    }
    if order.len() != indegree.len() {
        return Err(Error::Quiver("the quiver has an oriented cycle".into()));
    }
    Ok(order)
}

/// One entry of a frieze dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriezeEntry {
    pub k: i64,
    pub vertex: String,
    pub value: RationalFunction,
}

/// Frieze values `a(k, i)` with `a(0, i) = u_i` and the mesh relation
/// `a(k,i) a(k+1,i) = 1 + prod a(m,j)` over the arrows `(k,i) -> (m,j)` of ℤQ.
pub struct FriezeSession {
    dtilde: DTilde,
    seed: Seed,
    order: Vec<Vertex>,
    cache: DashMap<(i64, Vertex), RationalFunction>,
}

impl FriezeSession {
    pub fn new(dtilde: &DTilde) -> Result<Self> {
        Self::with_seed(dtilde, dtilde.seed())
    }

    /// Frieze with arbitrary initial values on the slice `k = 0`.
    pub fn with_seed(dtilde: &DTilde, seed: Seed) -> Result<Self> {
        let order = topological_order(dtilde.quiver())?;
        let cache = DashMap::new();
        for &v in &order {
            cache.insert((0, v), seed.variable(v)?.clone());
        }
        Ok(Self {
            dtilde: dtilde.clone(),
            seed,
            order,
            cache,
        })
    }

    pub fn dtilde(&self) -> &DTilde {
        &self.dtilde
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    fn cached(&self, k: i64, v: Vertex) -> RationalFunction {
        self.cache.get(&(k, v)).expect("slice evaluated").clone()
    }

    fn has_slice(&self, k: i64) -> bool {
        self.cache.contains_key(&(k, self.order[0]))
            && self.cache.contains_key(&(k, self.order[self.order.len() - 1]))
    }

    /// Slice `k + 1` from slice `k`, sources first.
    fn forward(&self, k: i64) -> Result<()> {
        let q = self.dtilde.quiver();
        for &i in &self.order {
            let mut prod = RationalFunction::one();
            for (j, c) in q.out_arrows(i) {
                prod = &prod * &self.cached(k, j).pow(c);
            }
            for (j, c) in q.in_arrows(i) {
                prod = &prod * &self.cached(k + 1, j).pow(c);
            }
            let value = (&RationalFunction::one() + &prod).checked_div(&self.cached(k, i))?;
            self.cache.insert((k + 1, i), value);
        }
        Ok(())
    }

    /// Slice `k - 1` from slice `k`, sinks first.
    fn backward(&self, k: i64) -> Result<()> {
        let q = self.dtilde.quiver();
        for &i in self.order.iter().rev() {
            let mut prod = RationalFunction::one();
            for (j, c) in q.out_arrows(i) {
                prod = &prod * &self.cached(k - 1, j).pow(c);
            }
            for (j, c) in q.in_arrows(i) {
                prod = &prod * &self.cached(k, j).pow(c);
            }
            let value = (&RationalFunction::one() + &prod).checked_div(&self.cached(k, i))?;
            self.cache.insert((k - 1, i), value);
        }
        Ok(())
    }

    fn ensure_slice(&self, k: i64) -> Result<()> {
        if self.has_slice(k) {
            return Ok(());
        }
        let step = k.signum();
        let mut j = 0;
        while j != k {
            if !self.has_slice(j + step) {
                if step > 0 {
                    self.forward(j)?;
                } else {
                    self.backward(j)?;
                }
            }
            j += step;
        }
        Ok(())
    }

    /// `a(k, i)`.
    pub fn frieze_value(&self, k: i64, i: Vertex) -> Result<RationalFunction> {
        if !self.dtilde.quiver().contains(i) {
            return Err(Error::UnknownVertex(i));
        }
        self.ensure_slice(k)?;
        Ok(self.cached(k, i))
    }

    /// Value on a line of the modelled quiver. Forks must have both arrows
    /// entering or both leaving the joint.
    pub fn modelled_value(&self, k: i64, line: ModelledLine) -> Result<RationalFunction> {
        match line {
            ModelledLine::Interior(i) => {
                let n = self.dtilde.n() as Vertex;
                if !(3..n).contains(&i) {
                    return Err(Error::UnknownVertex(i));
                }
                self.frieze_value(k, i)
            }
            ModelledLine::Bottom | ModelledLine::Top => {
                let fork = if line == ModelledLine::Bottom { Fork::Bottom } else { Fork::Top };
                if self.dtilde.fork_kind(fork) == ForkKind::Mixed {
                    return Err(Error::Quiver(format!(
                        "the {line} fork is mixed; mutate to a fork with both arrows entering or leaving the joint first"
                    )));
                }
                let (a, b, _) = self.dtilde.fork_vertices(fork);
                Ok(&self.frieze_value(k, a)? * &self.frieze_value(k, b)?)
            }
        }
    }

    /// Shift `s` with `[a(k, joint) + 1]^2 = line(k) line(k + s)` for the
    /// fork: `+1` if its arrows enter the joint, `-1` if they leave it.
    pub fn fork_relation_shift(&self, fork: Fork) -> Result<i64> {
        match self.dtilde.fork_kind(fork) {
            ForkKind::BothIn => Ok(1),
            ForkKind::BothOut => Ok(-1),
            ForkKind::Mixed => Err(Error::Quiver("mixed fork has no square relation".into())),
        }
    }

    /// Checks `[a(k, joint) + 1]^2 = line(k) line(k + shift)`.
    pub fn check_fork_relation(&self, k: i64, fork: Fork, shift: i64) -> Result<bool> {
        let (_, _, joint) = self.dtilde.fork_vertices(fork);
        let line = if fork == Fork::Bottom { ModelledLine::Bottom } else { ModelledLine::Top };
        let lhs = (&self.frieze_value(k, joint)? + &RationalFunction::one()).pow(2);
        let rhs = &self.modelled_value(k, line)? * &self.modelled_value(k + shift, line)?;
        Ok(lhs == rhs)
    }

    /// Checks the mesh relation at `(k, i)`.
    pub fn check_mesh(&self, k: i64, i: Vertex) -> Result<bool> {
        let q = self.dtilde.quiver();
        let mut prod = RationalFunction::one();
        for (j, c) in q.out_arrows(i) {
            prod = &prod * &self.frieze_value(k, j)?.pow(c);
        }
        for (j, c) in q.in_arrows(i) {
            prod = &prod * &self.frieze_value(k + 1, j)?.pow(c);
        }
        let lhs = &self.frieze_value(k, i)? * &self.frieze_value(k + 1, i)?;
        Ok(lhs == &RationalFunction::one() + &prod)
    }

    /// Frieze entries for `k` in the range, vertices in label order.
    pub fn dump(&self, k_min: i64, k_max: i64) -> Result<Vec<FriezeEntry>> {
        let mut out = Vec::new();
        let vertices: Vec<Vertex> = self.dtilde.quiver().vertices().collect();
        for k in k_min..=k_max {
            for &v in &vertices {
                out.push(FriezeEntry {
                    k,
                    vertex: v.to_string(),
                    value: self.frieze_value(k, v)?,
                });
            }
        }
        Ok(out)
    }

    /// Modelled-quiver entries for `k` in the range, lines bottom to top.
    pub fn dump_modelled(&self, k_min: i64, k_max: i64) -> Result<Vec<FriezeEntry>> {
        let mut out = Vec::new();
        for k in k_min..=k_max {
            for line in ModelledLine::all(self.dtilde.n()) {
                out.push(FriezeEntry {
                    k,
                    vertex: line.to_string(),
                    value: self.modelled_value(k, line)?,
                });
            }
        }
        Ok(out)
    }
}

/// Small-window text rendering: one row per vertex (or line), one column per
/// `k`. Meant for reading, not parsing.
pub fn render_ascii(entries: &[FriezeEntry]) -> String {
    let mut rows: Vec<String> = Vec::new();
    let mut ks: Vec<i64> = Vec::new();
    let mut grid: BTreeMap<(String, i64), String> = BTreeMap::new();
    for e in entries {
        if !rows.contains(&e.vertex) {
            rows.push(e.vertex.clone());
        }
        if !ks.contains(&e.k) {
            ks.push(e.k);
        }
        grid.insert((e.vertex.clone(), e.k), e.value.to_string());
    }
    let widths: Vec<usize> = ks
        .iter()
        .map(|k| {
            let cells = grid.iter().filter(|((_, kk), _)| kk == k).map(|(_, v)| v.len());
            cells.chain([k.to_string().len()]).max().unwrap_or(1)
        })
        .collect();
    let label = rows.iter().map(String::len).max().unwrap_or(1);
    let mut out = format!("{:>label$} |", "k");
    for (k, width) in ks.iter().zip(&widths) {
        out.push_str(&format!(" {k:>width$}"));
    }
    out.push('\n');
    for r in rows.iter().rev() {
        out.push_str(&format!("{r:>label$} |"));
        for (k, width) in ks.iter().zip(&widths) {
            let cell = grid.get(&(r.clone(), *k)).map_or("", String::as_str);
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
    out
}
