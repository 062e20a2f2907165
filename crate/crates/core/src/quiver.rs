//! Quivers, seeds, mutation, reduced walks and the walk formula for
//! nontransjective cluster variables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;
use crate::mat2::Mat2;

pub type Vertex = i64;

/// An arrow `source -> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: Vertex,
    pub target: Vertex,
}

impl Arrow {
    pub fn new(source: Vertex, target: Vertex) -> Self {
        Self { source, target }
    }
}

/// Finite quiver with counted arrows, no loops and no oriented 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: BTreeSet<Vertex>,
    arrows: BTreeMap<(Vertex, Vertex), u32>,
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        A: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut counts: BTreeMap<(Vertex, Vertex), u32> = BTreeMap::new();
        for (s, t) in arrows {
            if !vertices.contains(&s) {
                return Err(Error::UnknownVertex(s));
            }
            if !vertices.contains(&t) {
                return Err(Error::UnknownVertex(t));
            }
            if s == t {
                return Err(Error::Quiver(format!("loop at vertex {s}")));
            }
            *counts.entry((s, t)).or_default() += 1;
        }
        for &(s, t) in counts.keys() {
            if counts.contains_key(&(t, s)) {
                return Err(Error::Quiver(format!("oriented 2-cycle between {s} and {t}")));
            }
        }
        Ok(Self {
            vertices,
            arrows: counts,
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Arrows with multiplicities, sorted.
    pub fn arrows(&self) -> impl Iterator<Item = (Arrow, u32)> + '_ {
        self.arrows.iter().map(|(&(s, t), &c)| (Arrow::new(s, t), c))
    }

    pub fn multiplicity(&self, source: Vertex, target: Vertex) -> u32 {
        self.arrows.get(&(source, target)).copied().unwrap_or(0)
    }

    /// Arrows ending at `v`, as `(source, multiplicity)`.
    pub fn in_arrows(&self, v: Vertex) -> Vec<(Vertex, u32)> {
        self.arrows
            .iter()
            .filter(|(&(_, t), _)| t == v)
            .map(|(&(s, _), &c)| (s, c))
            .collect()
    }

    /// Arrows starting at `v`, as `(target, multiplicity)`.
    pub fn out_arrows(&self, v: Vertex) -> Vec<(Vertex, u32)> {
        self.arrows
            .range((v, Vertex::MIN)..=(v, Vertex::MAX))
            .map(|(&(_, t), &c)| (t, c))
            .collect()
    }

    /// Underlying undirected neighbours of `v`.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self
            .in_arrows(v)
            .into_iter()
            .chain(self.out_arrows(v))
            .map(|(w, _)| w)
            .collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// Fomin-Zelevinsky quiver mutation at `k`.
    pub fn mutate(&self, k: Vertex) -> Result<Self> {
        if !self.contains(k) {
            return Err(Error::UnknownVertex(k));
        }
        // signed counts b(i,j) = #(i->j) - #(j->i)
        let mut b: BTreeMap<(Vertex, Vertex), i64> = BTreeMap::new();
        for (&(s, t), &c) in &self.arrows {
            *b.entry((s, t)).or_default() += i64::from(c);
            *b.entry((t, s)).or_default() -= i64::from(c);
        }
        let ins = self.in_arrows(k);
        let outs = self.out_arrows(k);
        for &(i, a) in &ins {
            for &(j, c) in &outs {
                let add = i64::from(a) * i64::from(c);
                *b.entry((i, j)).or_default() += add;
                *b.entry((j, i)).or_default() -= add;
            }
        }
        let mut arrows = BTreeMap::new();
        for (&(s, t), &c) in &b {
            if c <= 0 {
                continue;
            }
            let c = u32::try_from(c).expect("arrow count fits");
            let (s, t) = if s == k || t == k { (t, s) } else { (s, t) };
            arrows.insert((s, t), c);
        }
        Ok(Self {
            vertices: self.vertices.clone(),
            arrows,
        })
    }

    /// Reduced walk between two vertices of a tree-shaped underlying graph.
    pub fn reduced_walk(&self, from: Vertex, to: Vertex) -> Result<Walk> {
        if !self.contains(from) {
            return Err(Error::UnknownVertex(from));
        }
        if !self.contains(to) {
            return Err(Error::UnknownVertex(to));
        }
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        parent.insert(from, from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for w in self.neighbours(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            }
        }
        if !parent.contains_key(&to) {
            return Err(Error::Walk(format!("no walk from {from} to {to}")));
        }
        let mut path = vec![to];
        while *path.last().expect("nonempty") != from {
            path.push(parent[path.last().expect("nonempty")]);
        }
        path.reverse();
        let steps = path
            .windows(2)
            .map(|w| {
                if self.multiplicity(w[0], w[1]) > 0 {
                    Step::forward(Arrow::new(w[0], w[1]))
                } else {
                    Step::backward(Arrow::new(w[1], w[0]))
                }
            })
            .collect();
        Walk::new(self, from, steps)
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.iter().copied().collect(),
            arrows: self
                .arrows
                .iter()
                .flat_map(|(&(s, t), &c)| std::iter::repeat_n([s, t], c as usize))
                .collect(),
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|(&(s, t), &c)| {
                if c == 1 {
                    format!("{s}->{t}")
                } else {
                    format!("{s}-{c}->{t}")
                }
            })
            .collect();
        write!(f, "{{{}}}", arrows.join(", "))
    }
}

/// Plain JSON shape of a quiver file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<[Vertex; 2]>,
}

/// One step of a walk: an arrow traversed along or against its direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: Arrow,
    pub forward: bool,
}

impl Step {
    pub fn forward(arrow: Arrow) -> Self {
        Self { arrow, forward: true }
    }

    pub fn backward(arrow: Arrow) -> Self {
        Self { arrow, forward: false }
    }

    pub fn start(&self) -> Vertex {
        if self.forward {
            self.arrow.source
        } else {
            self.arrow.target
        }
    }

    pub fn end(&self) -> Vertex {
        if self.forward {
            self.arrow.target
        } else {
            self.arrow.source
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            arrow: self.arrow,
            forward: !self.forward,
        }
    }
}

/// Reduced walk `v1 - d1 - v2 - ... - d_m - v_{m+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    start: Vertex,
    steps: Vec<Step>,
}

impl Walk {
    /// Checks connectivity, arrow existence and reducedness.
    pub fn new(q: &Quiver, start: Vertex, steps: Vec<Step>) -> Result<Self> {
        if !q.contains(start) {
            return Err(Error::UnknownVertex(start));
        }
        let mut at = start;
        for (i, s) in steps.iter().enumerate() {
            if q.multiplicity(s.arrow.source, s.arrow.target) == 0 {
                return Err(Error::Walk(format!(
                    "no arrow {}->{}",
                    s.arrow.source, s.arrow.target
                )));
            }
            if s.start() != at {
                return Err(Error::Walk(format!("step {i} does not start at vertex {at}")));
            }
            if i > 0 && steps[i - 1].inverse() == *s {
                return Err(Error::Walk(format!("step {i} undoes the previous step")));
            }
            at = s.end();
        }
        Ok(Self { start, steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.steps.last().map_or(self.start, Step::end)
    }

    /// `v1, ..., v_{m+1}`.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(Step::end))
            .collect()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            let sym = if s.forward { "->" } else { "<-" };
            write!(f, " {sym} {}", s.end())?;
        }
        Ok(())
    }
}

/// A quiver with one variable per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    quiver: Quiver,
    variables: BTreeMap<Vertex, RationalFunction>,
}

impl Seed {
    pub fn new(quiver: Quiver, variables: BTreeMap<Vertex, RationalFunction>) -> Result<Self> {
        for v in quiver.vertices() {
            if !variables.contains_key(&v) {
                return Err(Error::Quiver(format!("no variable for vertex {v}")));
            }
        }
        if let Some(v) = variables.keys().find(|v| !quiver.contains(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        Ok(Self { quiver, variables })
    }

    /// Seed whose vertex `v` carries the indeterminate `u_v`.
    pub fn initial(quiver: Quiver) -> Result<Self> {
        let mut variables = BTreeMap::new();
        for v in quiver.vertices() {
            let idx = usize::try_from(v)
                .map_err(|_| Error::Quiver(format!("vertex {v} has no variable index")))?;
            variables.insert(v, RationalFunction::var(idx));
        }
        Self::new(quiver, variables)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn variables(&self) -> &BTreeMap<Vertex, RationalFunction> {
        &self.variables
    }

    pub fn variable(&self, v: Vertex) -> Result<&RationalFunction> {
        self.variables.get(&v).ok_or(Error::UnknownVertex(v))
    }

    /// The exchange value `(prod in + prod out) / x_k` at `k`.
    pub fn exchange_value(&self, k: Vertex) -> Result<RationalFunction> {
        let xk = self.variable(k)?;
        let mut ins = RationalFunction::one();
        for (s, c) in self.quiver.in_arrows(k) {
            ins = &ins * &self.variables[&s].pow(c);
        }
        let mut outs = RationalFunction::one();
        for (t, c) in self.quiver.out_arrows(k) {
            outs = &outs * &self.variables[&t].pow(c);
        }
        (&ins + &outs).checked_div(xk)
    }

    /// Seed mutation at `k`.
    pub fn mutate(&self, k: Vertex) -> Result<Self> {
        let fresh = self.exchange_value(k)?;
        let mut variables = self.variables.clone();
        variables.insert(k, fresh);
        Ok(Self {
            quiver: self.quiver.mutate(k)?,
            variables,
        })
    }

    /// Formula for the cluster variable attached to a reduced walk.
    ///
    /// Evaluates `[1,1] V(1) M(d1) V(2) ... M(dm) V(m+1) [1;1]` divided by
    /// the product of the variables along the walk.
    pub fn walk_cluster_variable(&self, walk: &Walk) -> Result<RationalFunction> {
        let steps = walk.steps();
        for w in steps.windows(2) {
            if w[0].inverse() == w[1] {
                return Err(Error::Walk("walk is not reduced".into()));
            }
        }
        let verts = walk.vertices();
        let x = |v: Vertex| self.variable(v).cloned();
        let mut row = [RationalFunction::one(), RationalFunction::one()];
        let mut prefactor = RationalFunction::one();
        for (k, &v) in verts.iter().enumerate() {
            prefactor = &prefactor * &x(v)?;
            let excluded: Vec<Arrow> = [k.checked_sub(1), Some(k)]
                .into_iter()
                .flatten()
                .filter_map(|i| steps.get(i).map(|s| s.arrow))
                .collect();
            let mut out_prod = RationalFunction::one();
            for (t, c) in self.quiver.out_arrows(v) {
                let c = c - excluded.iter().filter(|a| **a == Arrow::new(v, t)).count() as u32;
                out_prod = &out_prod * &x(t)?.pow(c);
            }
            let mut in_prod = RationalFunction::one();
            for (s, c) in self.quiver.in_arrows(v) {
                let c = c - excluded.iter().filter(|a| **a == Arrow::new(s, v)).count() as u32;
                in_prod = &in_prod * &x(s)?.pow(c);
            }
            row = Mat2::left_apply(&row, &Mat2::diag(out_prod, in_prod));
            if let Some(step) = steps.get(k) {
                let ut = x(step.arrow.target)?;
                let us = x(step.arrow.source)?;
                let m = if step.forward {
                    Mat2::new(ut, RationalFunction::zero(), RationalFunction::one(), us)
                } else {
                    Mat2::new(ut, RationalFunction::one(), RationalFunction::zero(), us)
                };
                row = Mat2::left_apply(&row, &m);
            }
        }
        let one = [RationalFunction::one(), RationalFunction::one()];
        Mat2::dot(&row, &one).checked_div(&prefactor)
    }
}

/// Orientation class of a fork `{a, b} -- joint`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForkKind {
    BothIn,
    BothOut,
    Mixed,
}

/// Which end of the D̃ diagram a fork sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fork {
    /// vertices 1, 2 with joint 3
    Bottom,
    /// vertices n, n+1 with joint n-1
    Top,
}

/// A quiver of type D̃ₙ on vertices `1..=n+1`: forks `{1,2}-3` and
/// `{n,n+1}-(n-1)` joined by the chain `3 - 4 - ... - (n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DTilde {
    n: usize,
    quiver: Quiver,
}

impl DTilde {
    /// Undirected edges in the order used by orientation strings: `1-3`,
    /// `2-3`, the chain `(i, i+1)`, then `n-(n-1)` and `(n+1)-(n-1)`.
    pub fn edges(n: usize) -> Vec<(Vertex, Vertex)> {
        let n = n as Vertex;
        let mut e = vec![(1, 3), (2, 3)];
        for i in 3..n - 1 {
            e.push((i, i + 1));
        }
        e.push((n, n - 1));
        e.push((n + 1, n - 1));
        e
    }

    /// Builds D̃ₙ from an orientation.
    ///
    /// `orientation` is either a named class (`all-in`, `all-out`, `in-out`,
    /// `out-in`; the chain points from 3 towards n-1) or one character per
    /// edge of [`DTilde::edges`]: `>` orients the edge as listed (fork
    /// edges into their joint, chain edges rightward) and `<` reverses it.
    pub fn build(n: usize, orientation: &str) -> Result<Self> {
        if n < 4 {
            return Err(Error::Quiver(format!("D-tilde needs n >= 4, got {n}")));
        }
        let edges = Self::edges(n);
        let chain = ">".repeat(n - 4);
        let spec = match orientation {
            "all-in" => format!(">>{chain}>>"),
            "all-out" => format!("<<{chain}<<"),
            "in-out" => format!(">>{chain}<<"),
            "out-in" => format!("<<{chain}>>"),
            other => other.to_string(),
        };
        if spec.chars().count() != edges.len() || spec.chars().any(|c| c != '>' && c != '<') {
            return Err(Error::Quiver(format!(
                "orientation {orientation:?} must be a named class or {} characters of '>'/'<'",
                edges.len()
            )));
        }
        let arrows = edges
            .iter()
            .zip(spec.chars())
            .map(|(&(a, b), c)| if c == '>' { (a, b) } else { (b, a) });
        let quiver = Quiver::new(1..=(n as Vertex + 1), arrows)?;
        Ok(Self { n, quiver })
    }

    /// Recognizes a quiver on `1..=n+1` whose underlying graph is D̃ₙ.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        let verts: Vec<Vertex> = q.vertices().collect();
        let count = verts.len();
        if count < 5 {
            return Err(Error::Quiver("D-tilde needs n >= 4 (at least 5 vertices)".into()));
        }
        let n = count - 1;
        if verts != (1..=count as Vertex).collect::<Vec<_>>() {
            return Err(Error::Quiver("D-tilde vertices must be 1..=n+1".into()));
        }
        let mut expected: BTreeSet<(Vertex, Vertex)> = Self::edges(n)
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        for (a, c) in q.arrows() {
            if c != 1 || !expected.remove(&(a.source.min(a.target), a.source.max(a.target))) {
                return Err(Error::Quiver(format!(
                    "arrow {}->{} is not an edge of D-tilde_{n}",
                    a.source, a.target
                )));
            }
        }
        if !expected.is_empty() {
            return Err(Error::Quiver(format!("missing D-tilde_{n} edges: {expected:?}")));
        }
        Ok(Self {
            n,
            quiver: q.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn seed(&self) -> Seed {
        Seed::initial(self.quiver.clone()).expect("vertices are positive")
    }

    /// `(outer1, outer2, joint)` of a fork.
    pub fn fork_vertices(&self, fork: Fork) -> (Vertex, Vertex, Vertex) {
        let n = self.n as Vertex;
        match fork {
            Fork::Bottom => (1, 2, 3),
            Fork::Top => (n, n + 1, n - 1),
        }
    }

    pub fn fork_kind(&self, fork: Fork) -> ForkKind {
        let (a, b, j) = self.fork_vertices(fork);
        let a_in = self.quiver.multiplicity(a, j) > 0;
        let b_in = self.quiver.multiplicity(b, j) > 0;
        match (a_in, b_in) {
            (true, true) => ForkKind::BothIn,
            (false, false) => ForkKind::BothOut,
            _ => ForkKind::Mixed,
        }
    }

    /// Whether the chain edge `(i, i+1)` points rightward.
    pub fn chain_rightward(&self, i: Vertex) -> bool {
        self.quiver.multiplicity(i, i + 1) > 0
    }
}

impl QuiverJson {
    pub fn to_quiver(&self) -> Result<Quiver> {
        Quiver::new(self.vertices.iter().copied(), self.arrows.iter().map(|a| (a[0], a[1])))
    }
}

/// Quiver file contents: a plain quiver or the D̃ shorthand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuiverFile {
    DTilde { dtilde: DTildeJson },
    Plain(QuiverJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTildeJson {
    pub n: usize,
    #[serde(default = "default_orientation")]
    pub arrows: String,
}

fn default_orientation() -> String {
    "all-in".into()
}

/// Parses quiver file JSON.
pub fn parse_quiver_json(text: &str) -> Result<Quiver> {
    let file: QuiverFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("quiver JSON: {e}")))?;
    match file {
        QuiverFile::DTilde { dtilde } => Ok(DTilde::build(dtilde.n, &dtilde.arrows)?.quiver),
        QuiverFile::Plain(q) => q.to_quiver(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_rational, u};

    fn rf(s: &str) -> RationalFunction {
        parse_rational(s).unwrap()
    }

    #[test]
    fn a2_exchange() {
        let q = Quiver::new([1, 2], [(1, 2)]).unwrap();
        let s = Seed::initial(q).unwrap();
        let m = s.mutate(1).unwrap();
        assert_eq!(m.variable(1).unwrap(), &rf("(1+u2)/u1"));
        assert_eq!(m.quiver().multiplicity(2, 1), 1);
        assert_eq!(m.mutate(1).unwrap(), s);
    }

    #[test]
    fn dtilde4_mutation_at_joint() {
        let d = DTilde::build(4, "all-in").unwrap();
        let m = d.seed().mutate(3).unwrap();
        assert_eq!(m.variable(3).unwrap(), &rf("(u1*u2*u4*u5 + 1)/u3"));
    }

    #[test]
    fn mutation_cancels_two_cycles() {
        let q = Quiver::new([1, 2, 3], [(1, 2), (2, 3), (3, 1)]).unwrap();
        let m = q.mutate(2).unwrap();
        assert_eq!(m.multiplicity(1, 3), 0);
        assert_eq!(m.multiplicity(3, 1), 0);
        assert_eq!(m.multiplicity(2, 1), 1);
        assert_eq!(m.multiplicity(3, 2), 1);
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new([1], [(1, 1)]).is_err());
        assert!(Quiver::new([1, 2], [(1, 2), (2, 1)]).is_err());
        assert!(Quiver::new([1, 2], [(1, 3)]).is_err());
        assert!(DTilde::build(3, "all-in").is_err());
        assert!(DTilde::build(4, ">>>").is_err());
    }

    #[test]
    fn fork_classification() {
        let d = DTilde::build(4, "<>>>").unwrap();
        assert_eq!(d.fork_kind(Fork::Bottom), ForkKind::Mixed);
        assert_eq!(d.fork_kind(Fork::Top), ForkKind::BothIn);
        let d = DTilde::build(5, "in-out").unwrap();
        assert_eq!(d.fork_kind(Fork::Top), ForkKind::BothOut);
        assert!(d.chain_rightward(3));
    }

    #[test]
    fn walks() {
        let d = DTilde::build(4, "all-in").unwrap();
        let w = d.quiver().reduced_walk(1, 5).unwrap();
        assert_eq!(
            w.steps(),
            &[Step::forward(Arrow::new(1, 3)), Step::backward(Arrow::new(5, 3))]
        );
        assert!(d.quiver().reduced_walk(3, 3).unwrap().is_empty());
        let d5 = DTilde::build(5, "all-in").unwrap();
        assert_eq!(d5.quiver().reduced_walk(2, 5).unwrap().vertices(), vec![2, 3, 4, 5]);
    }

    #[test]
    fn walk_formula_examples() {
        let d = DTilde::build(4, "all-in").unwrap();
        let s = d.seed();
        let var = |a, b| {
            let w = d.quiver().reduced_walk(a, b).unwrap();
            s.walk_cluster_variable(&w).unwrap()
        };
        assert_eq!(var(1, 5), rf("(u1*u2*u4*u5+(1+u3)^2)/(u1*u3*u5)"));
        assert_eq!(var(2, 4), rf("(u1*u2*u4*u5+(1+u3)^2)/(u2*u3*u4)"));
        assert_eq!(var(1, 4), rf("(u1*u2*u4*u5+(1+u3)^2)/(u1*u3*u4)"));
        assert_eq!(var(2, 5), rf("(u1*u2*u4*u5+(1+u3)^2)/(u2*u3*u5)"));
        // a length-zero walk gives the exchange value
        assert_eq!(var(3, 3), s.exchange_value(3).unwrap());
        assert_eq!(var(1, 1), (&u(3) + &RationalFunction::one()) / u(1));
    }

    #[test]
    fn unreduced_walk_rejected() {
        let d = DTilde::build(4, "all-in").unwrap();
        let a = Arrow::new(1, 3);
        assert!(Walk::new(d.quiver(), 1, vec![Step::forward(a), Step::backward(a)]).is_err());
        assert!(Walk::new(d.quiver(), 2, vec![Step::forward(a)]).is_err());
    }

    #[test]
    fn json_forms() {
        let q = parse_quiver_json(r#"{"vertices":[1,2,3,4,5],"arrows":[[1,3],[2,3],[4,3],[5,3]]}"#)
            .unwrap();
        let d = parse_quiver_json(r#"{"dtilde":{"n":4,"arrows":"all-in"}}"#).unwrap();
        assert_eq!(q, d);
        assert!(DTilde::from_quiver(&q).is_ok());
        assert!(parse_quiver_json(r#"{"dtilde":{"n":3}}"#).is_err());
        let json = serde_json::to_string(&q.to_json()).unwrap();
        assert_eq!(parse_quiver_json(&json).unwrap(), q);
    }
}
