//! Cluster variables of a D̃ₙ quiver: transjective variables from the
//! diagonal rays of the associated tiling, the two fork splittings, the
//! three tubes and the assembled catalog.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::boundary::{build_dtilde_boundary, Point, RootSpan};
use crate::error::{Error, Result};
use crate::exactalg::{u, RationalFunction};
use crate::frieze::{FriezeSession, ModelledLine};
use crate::quiver::{DTilde, Fork, ForkKind, QuiverJson, Vertex};
use crate::tiling::{continuant, Direction, Ray, TilingSession};

/// Splits a fork-line value `v` into the two cluster variables whose product
/// it is: with `s = sqrt(v * u_a * u_b)`, returns `(s / u_a, s / u_b)` where
/// `(a, b)` is `(1, 2)` for the bottom fork and `(n, n+1)` for the top.
pub fn split_extreme_value(v: &RationalFunction, fork: Fork, n: usize) -> Result<(RationalFunction, RationalFunction)> {
    let (a, b) = match fork {
        Fork::Bottom => (1, 2),
        Fork::Top => (n, n + 1),
    };
    let (ua, ub) = (u(a), u(b));
    let s = (&(v * &ua) * &ub).sqrt().map_err(|_| Error::NotForkProduct)?;
    let first = &s / &ua;
    let second = &s / &ub;
    if &first * &second != *v {
        return Err(Error::Internal(format!("split of {v} does not multiply back")));
    }
    Ok((first, second))
}

/// The mouth of a tube, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TubeSpec {
    pub label: String,
    pub rank: usize,
    pub mouth: Vec<RationalFunction>,
}

impl TubeSpec {
    fn map(&self, f: &impl Fn(&RationalFunction) -> Result<RationalFunction>) -> Result<Self> {
        Ok(Self {
            mouth: self.mouth.iter().map(f).collect::<Result<_>>()?,
            ..self.clone()
        })
    }
}

/// `q_d(a_i, ..., a_{i+d-1})` over the mouth, `i` counted from 1 and taken
/// modulo the rank.
pub fn tube_variable(tube: &TubeSpec, i: usize, depth: usize) -> Result<RationalFunction> {
    if i == 0 || i > tube.rank || depth == 0 || tube.mouth.len() != tube.rank {
        return Err(Error::Range(format!(
            "mouth index {i} and depth {depth} for a tube of rank {}",
            tube.rank
        )));
    }
    let args: Vec<RationalFunction> = (0..depth)
        .map(|j| tube.mouth[(i - 1 + j) % tube.rank].clone())
        .collect();
    Ok(continuant(&args))
}

/// One transjective catalog entry. Fork lines produce two entries, `part`
/// 1 and 2, in canonical order of their values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransjectiveEntry {
    pub k: i64,
    pub line: ModelledLine,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<u8>,
    pub value: RationalFunction,
}

/// Tiling, root and frieze of a D̃ₙ quiver whose forks are not mixed.
pub struct DTildePipeline {
    dtilde: DTilde,
    tiling: TilingSession,
    span: RootSpan,
    frieze: FriezeSession,
}

impl DTildePipeline {
    pub fn new(d: &DTilde) -> Result<Self> {
        for fork in [Fork::Bottom, Fork::Top] {
            if d.fork_kind(fork) == ForkKind::Mixed {
                return Err(Error::Quiver(format!(
                    "the {} fork is mixed; use all_variables, which mutates it first",
                    if fork == Fork::Bottom { "bottom" } else { "top" }
                )));
            }
        }
        let (boundary, span) = build_dtilde_boundary(d)?;
        let unit = BTreeMap::from([(0, RationalFunction::one())]);
        let boundary = boundary.substitute(&unit)?;
        let span = RootSpan {
            vertices: span
                .vertices
                .iter()
                .map(|(p, v)| Ok((*p, v.substitute(&unit)?)))
                .collect::<Result<_>>()?,
            ..span
        };
        Ok(Self {
            dtilde: d.clone(),
            tiling: TilingSession::new(boundary),
            span,
            frieze: FriezeSession::new(d)?,
        })
    }

    pub fn dtilde(&self) -> &DTilde {
        &self.dtilde
    }

    pub fn tiling(&self) -> &TilingSession {
        &self.tiling
    }

    pub fn frieze(&self) -> &FriezeSession {
        &self.frieze
    }

    pub fn root(&self) -> &RootSpan {
        &self.span
    }

    /// Root vertex at which the diagonal ray of a modelled line starts.
    pub fn ray_origin(&self, line: ModelledLine) -> Result<Point> {
        let n = self.dtilde.n();
        let idx = match line {
            ModelledLine::Bottom => 0,
            ModelledLine::Top => n - 2,
            ModelledLine::Interior(i) if (3..n as Vertex).contains(&i) => (i - 2) as usize,
            ModelledLine::Interior(i) => return Err(Error::UnknownVertex(i)),
        };
        Ok(self.span.vertices[idx].0)
    }

    pub fn ray(&self, line: ModelledLine) -> Result<Ray> {
        Ok(Ray::new(self.ray_origin(line)?, Direction::Diagonal))
    }

    /// `t(origin + k (1, 1))` on the ray of `line`, `k >= 0`.
    pub fn diagonal_value(&self, k: i64, line: ModelledLine) -> Result<RationalFunction> {
        if k < 0 {
            return Err(Error::Range(format!("diagonal rays start at k = 0, got {k}")));
        }
        self.tiling.tile_value(self.ray(line)?.point(k))
    }

    fn fork_of(line: ModelledLine) -> Option<Fork> {
        match line {
            ModelledLine::Bottom => Some(Fork::Bottom),
            ModelledLine::Top => Some(Fork::Top),
            ModelledLine::Interior(_) => None,
        }
    }

    fn slice_from_tiling(&self, k: i64) -> Result<Vec<TransjectiveEntry>> {
        let n = self.dtilde.n();
        let mut out = Vec::new();
        for line in ModelledLine::all(n) {
            let v = self.diagonal_value(k, line)?;
            match Self::fork_of(line) {
                Some(fork) => {
                    let (a, b) = split_extreme_value(&v, fork, n)?;
                    push_pair(&mut out, k, line, a, b);
                }
                None => out.push(TransjectiveEntry { k, line, part: None, value: v }),
            }
        }
        Ok(out)
    }

    fn slice_from_frieze(&self, k: i64) -> Result<Vec<TransjectiveEntry>> {
        let mut out = Vec::new();
        for line in ModelledLine::all(self.dtilde.n()) {
            match Self::fork_of(line) {
                Some(fork) => {
                    let (a, b, _) = self.dtilde.fork_vertices(fork);
                    let (va, vb) = (self.frieze.frieze_value(k, a)?, self.frieze.frieze_value(k, b)?);
                    push_pair(&mut out, k, line, va, vb);
                }
                None => {
                    let ModelledLine::Interior(i) = line else { unreachable!() };
                    out.push(TransjectiveEntry {
                        k,
                        line,
                        part: None,
                        value: self.frieze.frieze_value(k, i)?,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Transjective variables for `k` in `[k_min, k_max]`: diagonal rays for
    /// `k >= 0` (fork lines split in two), the frieze for `k < 0`. The two
    /// sources are compared on `k = 0, 1, 2`.
    pub fn transjective_variables(&self, k_min: i64, k_max: i64) -> Result<Vec<TransjectiveEntry>> {
        if k_min > k_max {
            return Err(Error::Range(format!("k range {k_min}..{k_max} is empty")));
        }
        for k in 0..=2 {
            if self.slice_from_tiling(k)? != self.slice_from_frieze(k)? {
                return Err(Error::Internal(format!(
                    "tiling and frieze disagree on the transjective slice k = {k}"
                )));
            }
        }
        let mut out = Vec::new();
        for k in k_min..=k_max {
            out.extend(if k >= 0 { self.slice_from_tiling(k)? } else { self.slice_from_frieze(k)? });
        }
        Ok(out)
    }

    /// Shift `s` for which `[t(d_k) + 1]^2 = t(j_k) t(j_{k+s})` along the
    /// fork's ray `j` and the joint's ray `d`: `+1` when the fork's arrows
    /// enter the joint, `-1` when they leave it.
    pub fn relation_shift(&self, fork: Fork) -> Result<i64> {
        self.frieze.fork_relation_shift(fork)
    }

    /// Checks `[t(d_k) + 1]^2 = t(j_k) t(j_{k+shift})` on the diagonal rays.
    pub fn check_ray_relation(&self, k: i64, fork: Fork, shift: i64) -> Result<bool> {
        let n = self.dtilde.n() as Vertex;
        let (line, joint) = match fork {
            Fork::Bottom => (ModelledLine::Bottom, ModelledLine::Interior(3)),
            Fork::Top if n == 4 => (ModelledLine::Top, ModelledLine::Interior(3)),
            Fork::Top => (ModelledLine::Top, ModelledLine::Interior(n - 1)),
        };
        let d = self.diagonal_value(k, joint)?;
        let lhs = (&d + &RationalFunction::one()).pow(2);
        let rhs = &self.diagonal_value(k, line)? * &self.diagonal_value(k + shift, line)?;
        Ok(lhs == rhs)
    }

    /// Column of the root vertex `u3`.
    pub fn joint_column(&self) -> i64 {
        self.span.vertices[1].0 .0
    }

    /// First column at or right of the `u3` column from which the column
    /// coefficients repeat with period `n - 2`.
    ///
    /// Columns whose word lies in the right tail are periodic; from the
    /// first such column, the start moves left while periodicity persists.
    pub fn periodic_column(&self) -> Result<i64> {
        let s = (self.dtilde.n() - 2) as i64;
        let b = self.tiling.boundary();
        let home = self.joint_column();
        let mut c = home;
        while b.first_index_at_col(c) - 1 < self.span.last {
            c += 1;
        }
        let coeff = |c| self.tiling.linearization_coefficient(c);
        while c > home && coeff(c - 1)? == coeff(c - 1 + s)? {
            c -= 1;
        }
        Ok(c)
    }

    /// Linearization coefficients of `count` consecutive columns from
    /// `first`.
    pub fn column_coefficients(&self, first: i64, count: usize) -> Result<Vec<RationalFunction>> {
        (0..count as i64)
            .map(|j| self.tiling.linearization_coefficient(first + j))
            .collect()
    }

    /// Mouth of the tube of rank `n - 2`: `n - 2` consecutive column
    /// coefficients from [`Self::periodic_column`], checked over two periods.
    pub fn big_tube_mouth(&self) -> Result<TubeSpec> {
        let s = self.dtilde.n() - 2;
        let coeffs = self.column_coefficients(self.periodic_column()?, 2 * s)?;
        if coeffs[..s] != coeffs[s..] {
            return Err(Error::Internal(format!(
                "column coefficients are not periodic with period {s}"
            )));
        }
        Ok(TubeSpec {
            label: "columns".into(),
            rank: s,
            mouth: coeffs[..s].to_vec(),
        })
    }

    /// Mouths of the two rank-2 tubes, from the reduced walks `1 - (n+1)`,
    /// `2 - n` and `1 - n`, `2 - (n+1)`.
    pub fn rank2_tube_mouths(&self) -> Result<(TubeSpec, TubeSpec)> {
        let n = self.dtilde.n() as Vertex;
        let q = self.dtilde.quiver();
        let seed = self.dtilde.seed();
        let tube = |pairs: [(Vertex, Vertex); 2]| -> Result<TubeSpec> {
            let mouth = pairs
                .iter()
                .map(|&(a, b)| seed.walk_cluster_variable(&q.reduced_walk(a, b)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(TubeSpec {
                label: format!("{}-{},{}-{}", pairs[0].0, pairs[0].1, pairs[1].0, pairs[1].1),
                rank: 2,
                mouth,
            })
        };
        Ok((tube([(1, n + 1), (2, n)])?, tube([(1, n), (2, n + 1)])?))
    }
}

fn push_pair(out: &mut Vec<TransjectiveEntry>, k: i64, line: ModelledLine, a: RationalFunction, b: RationalFunction) {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    out.push(TransjectiveEntry { k, line, part: Some(1), value: a });
    out.push(TransjectiveEntry { k, line, part: Some(2), value: b });
}

/// Provenance of a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Transjective {
        k: i64,
        line: ModelledLine,
        #[serde(skip_serializing_if = "Option::is_none")]
        part: Option<u8>,
    },
    Tube {
        tube: String,
        tube_rank: usize,
        mouth_index: usize,
        depth: usize,
        /// quasi-length below the rank
        rigid: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    #[serde(flatten)]
    pub provenance: Provenance,
    pub value: RationalFunction,
}

/// Cluster variables of a D̃ₙ quiver, with provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableCatalog {
    pub n: usize,
    pub quiver: QuiverJson,
    /// vertices mutated to remove mixed forks; values are mapped back
    pub mutated_at: Vec<Vertex>,
    pub boundary: String,
    pub k_range: Option<(i64, i64)>,
    pub tube_depth: usize,
    pub entries: Vec<CatalogEntry>,
}

impl VariableCatalog {
    pub fn values(&self) -> impl Iterator<Item = &RationalFunction> {
        self.entries.iter().map(|e| &e.value)
    }

    pub fn contains(&self, v: &RationalFunction) -> bool {
        self.values().any(|w| w == v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Transjective variables for `k` in `k_range` (the initial cluster is
/// always included), plus every tube variable of depth at most `tube_depth`.
///
/// A mixed fork is first removed by mutating at its outer vertex 1 (or n);
/// the results are mapped back by substituting that vertex's exchange value,
/// and `k` then refers to the frieze of the mutated quiver.
pub fn all_variables(d: &DTilde, k_range: Option<(i64, i64)>, tube_depth: usize) -> Result<VariableCatalog> {
    let n = d.n();
    let seed = d.seed();
    let mut quiver = d.quiver().clone();
    let mut mutated_at = Vec::new();
    let mut back: BTreeMap<usize, RationalFunction> = BTreeMap::new();
    for (fork, outer) in [(Fork::Bottom, 1), (Fork::Top, n as Vertex)] {
        if d.fork_kind(fork) == ForkKind::Mixed {
            back.insert(outer as usize, seed.exchange_value(outer)?);
            quiver = quiver.mutate(outer)?;
            mutated_at.push(outer);
        }
    }
    let reduced = DTilde::from_quiver(&quiver)?;
    let pipeline = DTildePipeline::new(&reduced)?;
    let map_back = |v: &RationalFunction| -> Result<RationalFunction> {
        if back.is_empty() {
            Ok(v.clone())
        } else {
            v.substitute(&back)
        }
    };

    let (k_min, k_max) = match k_range {
        Some((a, b)) if a > b => return Err(Error::Range(format!("k range {a}..{b} is empty"))),
        Some((a, b)) => (a.min(0), b.max(0)),
        None => (0, 0),
    };
    // a mutated outer vertex carries its original variable one slice away
    let pad = i64::from(!mutated_at.is_empty());
    let (k_min, k_max) = (k_min - pad, k_max + pad);
    let initial: BTreeSet<RationalFunction> = seed.variables().values().cloned().collect();
    let (transjective, tubes) = rayon::join(
        || pipeline.transjective_variables(k_min, k_max),
        || -> Result<Vec<TubeSpec>> {
            let big = pipeline.big_tube_mouth()?;
            let (a, b) = pipeline.rank2_tube_mouths()?;
            Ok(vec![big, a, b])
        },
    );
    let in_range = |k: i64| k == 0 || k_range.is_some_and(|(a, b)| (a..=b).contains(&k));

    let mut entries = Vec::new();
    for e in transjective? {
        let value = map_back(&e.value)?;
        if in_range(e.k) || initial.contains(&value) {
            entries.push(CatalogEntry {
                provenance: Provenance::Transjective { k: e.k, line: e.line, part: e.part },
                value,
            });
        }
    }
    let tubes = tubes?;
    for tube in &tubes {
        let tube = tube.map(&map_back)?;
        for depth in 1..=tube_depth {
            for i in 1..=tube.rank {
                entries.push(CatalogEntry {
                    provenance: Provenance::Tube {
                        tube: tube.label.clone(),
                        tube_rank: tube.rank,
                        mouth_index: i,
                        depth,
                        rigid: depth < tube.rank,
                    },
                    value: tube_variable(&tube, i, depth)?,
                });
            }
        }
    }
    sort_entries(&mut entries);

    let mut seen = BTreeSet::new();
    entries.retain(|e| seen.insert(e.value.clone()));
    if let Some(bad) = entries.iter().find(|e| e.value.laurent_decompose().is_none()) {
        return Err(Error::Internal(format!("catalog value {} is not Laurent", bad.value)));
    }
    Ok(VariableCatalog {
        n,
        quiver: d.quiver().to_json(),
        mutated_at,
        boundary: pipeline.tiling().boundary().to_string(),
        k_range,
        tube_depth,
        entries,
    })
}

fn sort_entries(entries: &mut [CatalogEntry]) {
    // transjective by (k, line); tubes by (rank desc, tube, mouth index, depth)
    entries.sort_by(|a, b| {
        use std::cmp::Ordering;
        match (&a.provenance, &b.provenance) {
            (Provenance::Transjective { k: k1, line: l1, part: p1 }, Provenance::Transjective { k: k2, line: l2, part: p2 }) => {
                (k1, l1, p1).cmp(&(k2, l2, p2))
            }
            (Provenance::Transjective { .. }, Provenance::Tube { .. }) => Ordering::Less,
            (Provenance::Tube { .. }, Provenance::Transjective { .. }) => Ordering::Greater,
            (
                Provenance::Tube { tube: t1, tube_rank: r1, mouth_index: i1, depth: d1, .. },
                Provenance::Tube { tube: t2, tube_rank: r2, mouth_index: i2, depth: d2, .. },
            ) => r2
                .cmp(r1)
                .then_with(|| tube_order(t1).cmp(&tube_order(t2)))
                .then_with(|| t1.cmp(t2))
                .then_with(|| (i1, d1).cmp(&(i2, d2))),
        }
    });
}

fn tube_order(label: &str) -> u8 {
    u8::from(label != "columns")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_rational;

    fn rf(s: &str) -> RationalFunction {
        parse_rational(s).unwrap()
    }

    const NUM: &str = "(u1*u2*u4*u5 + (1+u3)^2)";

    fn pipeline(n: usize, o: &str) -> DTildePipeline {
        DTildePipeline::new(&DTilde::build(n, o).unwrap()).unwrap()
    }

    #[test]
    fn splits() {
        let (a, b) = split_extreme_value(&rf("(1+u3)^2/(u1*u2)"), Fork::Bottom, 4).unwrap();
        assert_eq!((a, b), (rf("(1+u3)/u1"), rf("(1+u3)/u2")));
        let (a, b) = split_extreme_value(&rf("(1+u3)^2/(u4*u5)"), Fork::Top, 4).unwrap();
        assert_eq!((a, b), (rf("(1+u3)/u4"), rf("(1+u3)/u5")));
        let (a, b) = split_extreme_value(&rf("u1*u2"), Fork::Bottom, 4).unwrap();
        assert_eq!(BTreeSet::from([a, b]), BTreeSet::from([u(1), u(2)]));
        assert_eq!(split_extreme_value(&rf("u1*u3"), Fork::Bottom, 4), Err(Error::NotForkProduct));
    }

    #[test]
    fn dtilde4_rays() {
        let p = pipeline(4, "all-in");
        assert_eq!(p.diagonal_value(1, ModelledLine::Bottom).unwrap(), rf("(1+u3)^2/(u1*u2)"));
        assert_eq!(p.diagonal_value(1, ModelledLine::Top).unwrap(), rf("(1+u3)^2/(u4*u5)"));
        // the matrix product for this point reduces to this value
        assert_eq!(
            p.diagonal_value(1, ModelledLine::Interior(3)).unwrap(),
            rf("(u1*u2*u4*u5+(1+u3)^4)/(u1*u2*u3*u4*u5)")
        );
        let t = p.transjective_variables(0, 0).unwrap();
        assert!(t.iter().any(|e| e.line == ModelledLine::Interior(3) && e.value == u(3)));
    }

    #[test]
    fn tubes_dtilde4() {
        let p = pipeline(4, "all-in");
        let big = p.big_tube_mouth().unwrap();
        assert_eq!(big.mouth, vec![rf(&format!("{NUM}/(u3*u4*u5)")), rf(&format!("{NUM}/(u1*u2*u3)"))]);
        let (t2, t3) = p.rank2_tube_mouths().unwrap();
        assert_eq!(t2.mouth[1], rf(&format!("{NUM}/(u2*u3*u4)")));
        assert_eq!(t3.mouth[1], rf(&format!("{NUM}/(u2*u3*u5)")));
        let one = num_rational::BigRational::from_integer(1.into());
        for t in [&big, &t2, &t3] {
            for m in &t.mouth {
                assert_eq!(m.evaluate_uniform(&one).unwrap(), num_rational::BigRational::from_integer(5.into()));
            }
        }
        let (a, b) = (&big.mouth[0], &big.mouth[1]);
        assert_eq!(tube_variable(&big, 1, 2).unwrap(), &(a * b) - &RationalFunction::one());
        let (a, b) = (&t2.mouth[0], &t2.mouth[1]);
        let d3 = tube_variable(&t2, 1, 3).unwrap();
        assert_eq!(d3, &(&(a * b) * a) - &a.scale(2));
        assert!(d3.laurent_decompose().is_some());
        assert!(tube_variable(&t2, 3, 1).is_err());
    }

    #[test]
    fn big_tube_dtilde5_has_period_three() {
        let p = pipeline(5, "all-in");
        let c = p.column_coefficients(p.periodic_column().unwrap(), 9).unwrap();
        assert_eq!(&c[..3], &c[3..6]);
        assert_eq!(&c[..3], &c[6..9]);
        assert!(c[0] != c[1] && c[1] != c[2] && c[0] != c[2]);
    }

    #[test]
    fn joint_columns_are_simple_exchange_values() {
        // for forks entering 3 and leaving n-1 with the chain pointing right,
        // the columns through u3..u_{n-1} carry the walk formula at a vertex
        for n in [5, 6] {
            let p = pipeline(n, "in-out");
            let d = p.dtilde();
            let mouth = p.big_tube_mouth().unwrap().mouth;
            for i in 3..n as Vertex {
                let w = d.quiver().reduced_walk(i, i).unwrap();
                assert_eq!(mouth[(i - 3) as usize], d.seed().walk_cluster_variable(&w).unwrap());
            }
        }
    }

    #[test]
    fn ray_relations_follow_orientation() {
        for (n, o) in [(4, "in-out"), (5, "all-in"), (5, "out-in")] {
            let p = pipeline(n, o);
            for fork in [Fork::Bottom, Fork::Top] {
                let s = p.relation_shift(fork).unwrap();
                for k in 1..4 {
                    assert!(p.check_ray_relation(k, fork, s).unwrap(), "{n} {o} {fork:?} {k}");
                }
            }
        }
    }

    #[test]
    fn catalog_small() {
        let d = DTilde::build(4, "all-in").unwrap();
        let c = all_variables(&d, None, 0).unwrap();
        assert_eq!(c.entries.len(), 5);
        assert!((1..=5).all(|i| c.contains(&u(i))));
        let c = all_variables(&d, Some((0, 1)), 1).unwrap();
        for s in ["(1+u3)/u1", "(1+u3)/u5"] {
            assert!(c.contains(&rf(s)));
        }
        assert!(c.contains(&rf(&format!("{NUM}/(u2*u3*u4)"))));
        assert_eq!(c.entries.len(), 5 + 5 + 6);
    }

    #[test]
    fn mixed_fork_catalog_maps_back() {
        let d = DTilde::build(4, "><>>").unwrap();
        assert!(DTildePipeline::new(&d).is_err());
        let c = all_variables(&d, None, 0).unwrap();
        assert_eq!(c.mutated_at, vec![1]);
        assert!((1..=5).all(|i| c.contains(&u(i))));
        let c = all_variables(&d, Some((-1, 1)), 1).unwrap();
        assert!((1..=5).all(|i| c.contains(&u(i))));
        assert!(c.values().all(RationalFunction::is_positive_laurent));
    }
}
