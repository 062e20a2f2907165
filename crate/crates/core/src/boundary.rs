//! Boundary words, their lattice embedding, generators cut from cycle
//! quivers, and the boundary attached to a quiver of type D̃ₙ.
//!
//! Coordinates are `(col, row)` with rows growing downward. Letter `x`
//! moves one column right, letter `y` moves one row up, and the tiling
//! lives strictly below the staircase.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, u, RationalFunction};
use crate::quiver::{DTilde, Fork, ForkKind, Quiver, Vertex};

pub type Point = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    fn step(self) -> Point {
        match self {
            Letter::X => (1, 0),
            Letter::Y => (0, -1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X => "x",
            Letter::Y => "y",
        })
    }
}

/// One period `c0 x1 c1 ... c_{m-1} x_m` of a boundary; the vertex after the
/// last letter is `c0` of the next copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    values: Vec<RationalFunction>,
    letters: Vec<Letter>,
}

impl Generator {
    pub fn new(values: Vec<RationalFunction>, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() || values.len() != letters.len() {
            return Err(Error::Boundary(
                "a generator needs as many values as letters, at least one".into(),
            ));
        }
        Ok(Self { values, letters })
    }

    /// Generator with every value equal to 1.
    pub fn from_letters(letters: &str) -> Result<Self> {
        let letters = parse_letters(letters)?;
        let values = vec![RationalFunction::one(); letters.len()];
        Self::new(values, letters)
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter_string(&self) -> String {
        self.letters.iter().map(Letter::to_string).collect()
    }

    /// `(#x, #y)`.
    pub fn counts(&self) -> (usize, usize) {
        let x = self.letters.iter().filter(|l| **l == Letter::X).count();
        (x, self.letters.len() - x)
    }

    fn delta(&self) -> Point {
        let (x, y) = self.counts();
        (x as i64, -(y as i64))
    }

    fn prefix(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.letters.len() + 1);
        let mut at = (0, 0);
        out.push(at);
        for l in &self.letters {
            let (dc, dr) = l.step();
            at = (at.0 + dc, at.1 + dr);
            out.push(at);
        }
        out
    }

    fn map_values(&self, f: &impl Fn(&RationalFunction) -> Result<RationalFunction>) -> Result<Self> {
        Ok(Self {
            values: self.values.iter().map(f).collect::<Result<_>>()?,
            letters: self.letters.clone(),
        })
    }
}

fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            other => Err(Error::Boundary(format!("unknown letter {other:?}"))),
        })
        .collect()
}

/// The distinguished finite word between the two periodic tails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWord {
    values: Vec<RationalFunction>,
    letters: Vec<Letter>,
}

impl RootWord {
    pub fn new(values: Vec<RationalFunction>, letters: Vec<Letter>) -> Result<Self> {
        if values.len() != letters.len() + 1 {
            return Err(Error::Boundary("a root needs one more value than letters".into()));
        }
        Ok(Self { values, letters })
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryShape {
    Periodic(Generator),
    BiGenerated {
        left: Generator,
        root: RootWord,
        right: Generator,
    },
}

/// A finite stretch of boundary: `b0 x1 b1 ... x_m b_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWord {
    pub values: Vec<RationalFunction>,
    pub letters: Vec<Letter>,
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.letters[i - 1])?;
            }
            write_value(f, v)?;
        }
        Ok(())
    }
}

fn write_value(f: &mut fmt::Formatter<'_>, v: &RationalFunction) -> fmt::Result {
    let s = v.to_string();
    if s.contains(' ') {
        write!(f, "({s})")
    } else {
        f.write_str(&s)
    }
}

/// Vertices of the root occurrence with their coordinates and values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSpan {
    /// Word indices of the first and last root vertex.
    pub first: i64,
    pub last: i64,
    pub vertices: Vec<(Point, RationalFunction)>,
}

/// A bi-infinite admissible boundary embedded in the lattice.
///
/// Vertex `i` of the word (`i` in `Z`) sits at [`Boundary::coord`]; vertex 0
/// is the first root vertex (or the first vertex of a generator copy) and
/// sits at the anchor. Nothing is materialized: values and coordinates
/// come from index arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    shape: BoundaryShape,
    anchor: Point,
    // prefix offsets inside one copy / the root
    left_prefix: Vec<Point>,
    root_prefix: Vec<Point>,
    right_prefix: Vec<Point>,
}

impl Boundary {
    pub fn periodic(gen: Generator) -> Self {
        Self::from_shape(BoundaryShape::Periodic(gen))
    }

    /// `^inf(left) root (right)^inf`; the generators must agree with the
    /// root on the glued vertices.
    pub fn bi_generated(left: Generator, root: RootWord, right: Generator) -> Result<Self> {
        if left.values[0] != root.values[0] {
            return Err(Error::Boundary(format!(
                "left generator starts with {} but the root starts with {}",
                left.values[0], root.values[0]
            )));
        }
        let last = root.values.last().expect("root has a vertex");
        if &right.values[0] != last {
            return Err(Error::Boundary(format!(
                "right generator starts with {} but the root ends with {last}",
                right.values[0]
            )));
        }
        Ok(Self::from_shape(BoundaryShape::BiGenerated { left, root, right }))
    }

    fn from_shape(shape: BoundaryShape) -> Self {
        let (left_prefix, root_prefix, right_prefix) = match &shape {
            BoundaryShape::Periodic(g) => (g.prefix(), vec![(0, 0)], g.prefix()),
            BoundaryShape::BiGenerated { left, root, right } => {
                let mut rp = vec![(0, 0)];
                for l in &root.letters {
                    let (dc, dr) = l.step();
                    let p = *rp.last().expect("nonempty");
                    rp.push((p.0 + dc, p.1 + dr));
                }
                (left.prefix(), rp, right.prefix())
            }
        };
        Self {
            shape,
            anchor: (0, 0),
            left_prefix,
            root_prefix,
            right_prefix,
        }
    }

    pub fn with_anchor(mut self, anchor: Point) -> Self {
        self.anchor = anchor;
        self
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn shape(&self) -> &BoundaryShape {
        &self.shape
    }

    /// Number of root letters (0 for a periodic boundary).
    fn root_len(&self) -> i64 {
        self.root_prefix.len() as i64 - 1
    }

    fn tails(&self) -> (&Generator, &Generator) {
        match &self.shape {
            BoundaryShape::Periodic(g) => (g, g),
            BoundaryShape::BiGenerated { left, right, .. } => (left, right),
        }
    }

    /// Label of vertex `i`.
    pub fn value(&self, i: i64) -> &RationalFunction {
        let (left, right) = self.tails();
        let r = self.root_len();
        if i < 0 {
            &left.values[i.rem_euclid(left.len() as i64) as usize]
        } else if i > r {
            &right.values[(i - r).rem_euclid(right.len() as i64) as usize]
        } else {
            match &self.shape {
                BoundaryShape::Periodic(g) => &g.values[0],
                BoundaryShape::BiGenerated { root, .. } => &root.values[i as usize],
            }
        }
    }

    /// Letter between vertices `i - 1` and `i`.
    pub fn letter(&self, i: i64) -> Letter {
        let (left, right) = self.tails();
        let r = self.root_len();
        if i <= 0 {
            left.letters[(i - 1).rem_euclid(left.len() as i64) as usize]
        } else if i > r {
            right.letters[(i - r - 1).rem_euclid(right.len() as i64) as usize]
        } else {
            match &self.shape {
                BoundaryShape::Periodic(_) => unreachable!("periodic root has no letters"),
                BoundaryShape::BiGenerated { root, .. } => root.letters[(i - 1) as usize],
            }
        }
    }

    /// Lattice position of vertex `i`.
    pub fn coord(&self, i: i64) -> Point {
        let (left, right) = self.tails();
        let r = self.root_len();
        let (c, rr) = if i < 0 {
            let m = left.len() as i64;
            let q = i.div_euclid(m);
            let j = i.rem_euclid(m) as usize;
            let d = left.delta();
            let p = self.left_prefix[j];
            (q * d.0 + p.0, q * d.1 + p.1)
        } else if i > r {
            let m = right.len() as i64;
            let q = (i - r).div_euclid(m);
            let j = (i - r).rem_euclid(m) as usize;
            let d = right.delta();
            let base = self.root_prefix[r as usize];
            let p = self.right_prefix[j];
            (base.0 + q * d.0 + p.0, base.1 + q * d.1 + p.1)
        } else {
            self.root_prefix[i as usize]
        };
        (c + self.anchor.0, rr + self.anchor.1)
    }

    /// Finite subword over vertices `from..=to`.
    pub fn subword(&self, from: i64, to: i64) -> FiniteWord {
        FiniteWord {
            values: (from..=to).map(|i| self.value(i).clone()).collect(),
            letters: (from + 1..=to).map(|i| self.letter(i)).collect(),
        }
    }

    /// True iff neither tail is ultimately constant.
    pub fn is_admissible(&self) -> bool {
        let (l, r) = self.tails();
        let both = |g: &Generator| {
            let (x, y) = g.counts();
            x > 0 && y > 0
        };
        both(l) && both(r)
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Boundary("boundary is not admissible".into()))
        }
    }

    /// Smallest index whose predicate holds, for a predicate that is false
    /// far left and true far right.
    fn first_index(&self, pred: impl Fn(i64) -> bool) -> i64 {
        let mut hi = 0i64;
        let mut step = 1i64;
        while !pred(hi) {
            hi += step;
            step *= 2;
        }
        let mut lo = hi - 1;
        step = 1;
        while pred(lo) {
            lo -= step;
            step *= 2;
        }
        // pred(lo) false, pred(hi) true
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if pred(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// `min { i : col(i) >= c }`.
    pub fn first_index_at_col(&self, c: i64) -> i64 {
        self.first_index(|i| self.coord(i).0 >= c)
    }

    /// `max { i : col(i) <= c }`.
    pub fn last_index_at_col(&self, c: i64) -> i64 {
        self.first_index(|i| self.coord(i).0 > c) - 1
    }

    /// `max { i : row(i) >= r }`.
    pub fn last_index_at_row(&self, r: i64) -> i64 {
        self.first_index(|i| self.coord(i).1 < r) - 1
    }

    /// Where a lattice point sits relative to the staircase.
    pub fn locate(&self, p: Point) -> Result<Location> {
        self.require_admissible()?;
        let (c, r) = p;
        let i0 = self.last_index_at_row(r);
        let i1 = self.first_index_at_col(c);
        if i0 < i1 {
            return Ok(Location::Below { from: i0, to: i1 });
        }
        let mut i = i1;
        while self.coord(i).0 == c {
            if self.coord(i) == p {
                return Ok(Location::Vertex(i));
            }
            i += 1;
        }
        Ok(Location::Above)
    }

    /// Word between the horizontal and vertical projections of a point
    /// strictly below the boundary; it starts with `y` and ends with `x`.
    pub fn word_at_point(&self, p: Point) -> Result<FiniteWord> {
        match self.locate(p)? {
            Location::Below { from, to } => Ok(self.subword(from, to)),
            _ => Err(Error::AboveBoundary(p.0, p.1)),
        }
    }

    /// Boundary portion met by the columns `col_first..=col_last`, extended
    /// by one step on each side.
    pub fn word_for_columns(&self, col_first: i64, col_last: i64) -> Result<FiniteWord> {
        self.require_admissible()?;
        if col_first > col_last {
            return Err(Error::Range(format!(
                "empty column range {col_first}..={col_last}"
            )));
        }
        let from = self.first_index_at_col(col_first) - 1;
        let to = self.last_index_at_col(col_last) + 1;
        Ok(self.subword(from, to))
    }

    /// Lowest row touched by the boundary in column `c` (rows grow down).
    pub fn bottom_row(&self, c: i64) -> i64 {
        self.coord(self.first_index_at_col(c)).1
    }

    /// Same boundary with every label transformed.
    pub fn map_values(&self, f: impl Fn(&RationalFunction) -> Result<RationalFunction>) -> Result<Self> {
        let shape = match &self.shape {
            BoundaryShape::Periodic(g) => BoundaryShape::Periodic(g.map_values(&f)?),
            BoundaryShape::BiGenerated { left, root, right } => BoundaryShape::BiGenerated {
                left: left.map_values(&f)?,
                root: RootWord {
                    values: root.values.iter().map(&f).collect::<Result<_>>()?,
                    letters: root.letters.clone(),
                },
                right: right.map_values(&f)?,
            },
        };
        Ok(Self {
            shape,
            ..self.clone()
        })
    }

    /// Substitutes variables in every label.
    pub fn substitute(&self, map: &BTreeMap<usize, RationalFunction>) -> Result<Self> {
        self.map_values(|v| v.substitute(map))
    }

    /// The letters of both tails and the root, as `(left, root, right)`.
    pub fn letter_strings(&self) -> (String, String, String) {
        match &self.shape {
            BoundaryShape::Periodic(g) => (g.letter_string(), String::new(), g.letter_string()),
            BoundaryShape::BiGenerated { left, root, right } => (
                left.letter_string(),
                root.letters.iter().map(Letter::to_string).collect(),
                right.letter_string(),
            ),
        }
    }
}

/// Position of a lattice point relative to a boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// Strictly below; the associated word spans vertices `from..=to`.
    Below { from: i64, to: i64 },
    Vertex(i64),
    Above,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gen = |f: &mut fmt::Formatter<'_>, g: &Generator| -> fmt::Result {
            for (v, l) in g.values.iter().zip(&g.letters) {
                write_value(f, v)?;
                write!(f, " {l} ")?;
            }
            write_value(f, &g.values[0])
        };
        match &self.shape {
            BoundaryShape::Periodic(g) => {
                write!(f, "^inf( ")?;
                gen(f, g)?;
                write!(f, " )^inf")
            }
            BoundaryShape::BiGenerated { left, root, right } => {
                write!(f, "^inf( ")?;
                gen(f, left)?;
                write!(f, " ) ")?;
                let w = FiniteWord {
                    values: root.values.clone(),
                    letters: root.letters.clone(),
                };
                write!(f, "{w} ( ")?;
                gen(f, right)?;
                write!(f, " )^inf")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// text grammar

fn split_tokens(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse("unbalanced parentheses in boundary".into()));
        }
        if ch.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses in boundary".into()));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Alternating value/letter tokens with optional values.
struct Alternating {
    before: Vec<Option<RationalFunction>>,
    letters: Vec<Letter>,
    trailing: Option<RationalFunction>,
}

fn parse_alternating(s: &str) -> Result<Alternating> {
    let mut before = Vec::new();
    let mut letters = Vec::new();
    let mut pending: Option<RationalFunction> = None;
    for tok in split_tokens(s)? {
        match tok.as_str() {
            "x" | "y" => {
                before.push(pending.take());
                letters.push(if tok == "x" { Letter::X } else { Letter::Y });
            }
            _ => {
                if pending.is_some() {
                    return Err(Error::Parse(format!("two values in a row near {tok:?}")));
                }
                pending = Some(parse_rational(&tok)?);
            }
        }
    }
    Ok(Alternating {
        before,
        letters,
        trailing: pending,
    })
}

fn generator_from_alternating(a: Alternating, glued: Option<&RationalFunction>) -> Result<Generator> {
    if a.letters.is_empty() {
        return Err(Error::Parse("a generator needs at least one letter".into()));
    }
    let mut values: Vec<RationalFunction> = a
        .before
        .iter()
        .map(|v| v.clone().unwrap_or_else(RationalFunction::one))
        .collect();
    if a.before[0].is_none() {
        if let Some(t) = &a.trailing {
            values[0] = t.clone();
        } else if let Some(g) = glued {
            values[0] = g.clone();
        }
    } else if let Some(t) = &a.trailing {
        if t != &values[0] {
            return Err(Error::Parse(format!(
                "generator must end with its first value {}, found {t}",
                values[0]
            )));
        }
    }
    Generator::new(values, a.letters)
}

/// Parses `^inf( gen )^inf` or `^inf( left ) root ( right )^inf`. Values
/// equal to 1 may be omitted.
pub fn parse_boundary(s: &str) -> Result<Boundary> {
    let s = s.trim();
    let rest = s
        .strip_prefix("^inf")
        .ok_or_else(|| Error::Parse("boundary must start with ^inf(".into()))?
        .trim_start();
    let body = rest
        .strip_suffix("^inf")
        .ok_or_else(|| Error::Parse("boundary must end with )^inf".into()))?
        .trim_end();
    let close_first = matching_close(body, 0)?;
    if close_first == body.len() - 1 {
        let a = parse_alternating(&body[1..close_first])?;
        let g = generator_from_alternating(a, None)?;
        return Ok(Boundary::periodic(g));
    }
    let left_src = &body[1..close_first];
    let open_last = matching_open(body, body.len() - 1)?;
    let root_src = &body[close_first + 1..open_last];
    let right_src = &body[open_last + 1..body.len() - 1];
    let root_a = parse_alternating(root_src)?;
    let mut root_values: Vec<RationalFunction> = root_a
        .before
        .iter()
        .map(|v| v.clone().unwrap_or_else(RationalFunction::one))
        .collect();
    root_values.push(root_a.trailing.unwrap_or_else(RationalFunction::one));
    let root = RootWord::new(root_values, root_a.letters)?;
    let left = generator_from_alternating(parse_alternating(left_src)?, Some(&root.values[0]))?;
    let right = generator_from_alternating(
        parse_alternating(right_src)?,
        root.values.last(),
    )?;
    Boundary::bi_generated(left, root, right)
}

fn matching_close(s: &str, open: usize) -> Result<usize> {
    if s.as_bytes().get(open) != Some(&b'(') {
        return Err(Error::Parse("expected '('".into()));
    }
    let mut depth = 0;
    for (i, b) in s.bytes().enumerate().skip(open) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced parentheses in boundary".into()))
}

fn matching_open(s: &str, close: usize) -> Result<usize> {
    if s.as_bytes().get(close) != Some(&b')') {
        return Err(Error::Parse("expected ')'".into()));
    }
    let mut depth = 0;
    for i in (0..=close).rev() {
        match s.as_bytes()[i] {
            b')' => depth += 1,
            b'(' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced parentheses in boundary".into()))
}

// ---------------------------------------------------------------------------
// cycle quivers

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    Clockwise,
    Anticlockwise,
}

/// A quiver of type Ã given by its vertices in clockwise order, the value
/// at each vertex, and for each consecutive pair whether the arrow points
/// clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ATildeCycle {
    pub labels: Vec<String>,
    pub values: Vec<RationalFunction>,
    /// `clockwise[j]`: arrow goes from position `j` to `j + 1 (mod len)`.
    pub clockwise: Vec<bool>,
}

impl ATildeCycle {
    /// Reads a cycle quiver. The clockwise order starts at the smallest
    /// vertex and continues through its smaller neighbour; vertex `v`
    /// carries `u_v`.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        let verts: Vec<Vertex> = q.vertices().collect();
        if verts.len() < 2 {
            return Err(Error::Quiver("a cycle needs at least two vertices".into()));
        }
        for &v in &verts {
            let deg: u32 = q.in_arrows(v).iter().chain(q.out_arrows(v).iter()).map(|a| a.1).sum();
            if deg != 2 {
                return Err(Error::Quiver(format!("vertex {v} has degree {deg}, not a cycle")));
            }
        }
        let start = verts[0];
        let mut order = vec![start];
        let mut prev = None;
        let mut at = start;
        loop {
            let ns = q.neighbours(at);
            let next = match prev {
                None => ns[0],
                Some(p) => ns.iter().copied().find(|&w| w != p).unwrap_or(p),
            };
            if next == start {
                break;
            }
            if order.contains(&next) {
                return Err(Error::Quiver("not a single cycle".into()));
            }
            order.push(next);
            prev = Some(at);
            at = next;
        }
        if order.len() != verts.len() {
            return Err(Error::Quiver("quiver is not connected".into()));
        }
        let len = order.len();
        let clockwise = (0..len)
            .map(|j| q.multiplicity(order[j], order[(j + 1) % len]) > 0)
            .collect();
        let values = order
            .iter()
            .map(|&v| usize::try_from(v).map(u).map_err(|_| Error::UnknownVertex(v)))
            .collect::<Result<_>>()?;
        Ok(Self {
            labels: order.iter().map(Vertex::to_string).collect(),
            values,
            clockwise,
        })
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Quiver(format!("no vertex labelled {label}")))
    }

    /// Cuts the cycle at `cut` and reads it in the given direction: `x`
    /// for arrows pointing along the reading, `y` against it.
    pub fn generator(&self, cut: usize, reading: Reading) -> Result<Generator> {
        let len = self.labels.len();
        if cut >= len {
            return Err(Error::Range(format!("cut position {cut} out of range")));
        }
        let mut values = Vec::with_capacity(len);
        let mut letters = Vec::with_capacity(len);
        for step in 0..len {
            let (here, along) = match reading {
                Reading::Clockwise => {
                    let j = (cut + step) % len;
                    (j, self.clockwise[j])
                }
                Reading::Anticlockwise => {
                    let j = (cut + len - step) % len;
                    let prev = (j + len - 1) % len;
                    (j, !self.clockwise[prev])
                }
            };
            values.push(self.values[here].clone());
            letters.push(if along { Letter::X } else { Letter::Y });
        }
        Generator::new(values, letters)
    }
}

/// Generator of the boundary of a cycle quiver.
pub fn generator_from_a_tilde(q: &Quiver, cut: Vertex, reading: Reading) -> Result<Generator> {
    let cycle = ATildeCycle::from_quiver(q)?;
    let pos = cycle.position(&cut.to_string())?;
    cycle.generator(pos, reading)
}

// ---------------------------------------------------------------------------
// D-tilde boundary

/// The chain `Σ` of a D̃ₙ quiver: vertices `1, 3, 4, ..., n` with their
/// values and the letters of the arrows between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sigma {
    pub labels: Vec<Vertex>,
    pub values: Vec<RationalFunction>,
    pub letters: Vec<Letter>,
}

impl Sigma {
    pub fn new(d: &DTilde) -> Self {
        let n = d.n() as Vertex;
        let q = d.quiver();
        let mut labels = vec![1];
        labels.extend(3..=n);
        let mut values: Vec<RationalFunction> = labels.iter().map(|&v| u(v as usize)).collect();
        let one = RationalFunction::one();
        values[0] = match d.fork_kind(Fork::Bottom) {
            ForkKind::Mixed => &(&u(2) * &(&one + &u(3))) / &u(1),
            _ => &u(1) * &u(2),
        };
        let last = values.len() - 1;
        values[last] = match d.fork_kind(Fork::Top) {
            ForkKind::Mixed => {
                let nn = n as usize;
                &(&u(nn + 1) * &(&one + &u(nn - 1))) / &u(nn)
            }
            _ => &u(n as usize) * &u(n as usize + 1),
        };
        // for a mixed fork the outer vertex is replaced by its mutation, so
        // the edge takes the orientation of the other fork vertex
        let bottom_outer = if d.fork_kind(Fork::Bottom) == ForkKind::Mixed { 2 } else { 1 };
        let top_outer = if d.fork_kind(Fork::Top) == ForkKind::Mixed { n + 1 } else { n };
        let mut letters = Vec::with_capacity(labels.len() - 1);
        for w in labels.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (a, b) = if a == 1 { (bottom_outer, b) } else { (a, b) };
            let (a, b) = if b == n { (a, top_outer) } else { (a, b) };
            let along = q.multiplicity(a, b) > 0;
            letters.push(if along { Letter::X } else { Letter::Y });
        }
        Self {
            labels,
            values,
            letters,
        }
    }

    /// `ᵗΣ`: vertices reversed, letters reversed and swapped.
    pub fn transposed(&self) -> (Vec<RationalFunction>, Vec<Letter>) {
        let values = self.values.iter().rev().cloned().collect();
        let letters = self.letters.iter().rev().map(|l| l.swapped()).collect();
        (values, letters)
    }

    /// The cycle `Q'`: `o`, top `Σ`, `o`, bottom `Σ` reversed, clockwise.
    pub fn q_prime(&self) -> ATildeCycle {
        let len = self.labels.len();
        let o = u(0);
        let mut labels = vec!["o_left".to_string()];
        let mut values = vec![o.clone()];
        let mut clockwise = vec![true];
        for (j, l) in self.labels.iter().enumerate() {
            labels.push(format!("top{l}"));
            values.push(self.values[j].clone());
            clockwise.push(j + 1 == len || self.letters[j] == Letter::X);
        }
        labels.push("o_right".into());
        values.push(o);
        clockwise.push(true);
        for j in (0..len).rev() {
            labels.push(format!("bottom{}", self.labels[j]));
            values.push(self.values[j].clone());
            // reading bottom vertices from n down to 1: clockwise iff the
            // Σ arrow points from j to j-1
            if j > 0 {
                clockwise.push(self.letters[j - 1] == Letter::Y);
            } else {
                clockwise.push(true);
            }
        }
        ATildeCycle {
            labels,
            values,
            clockwise,
        }
    }
}

/// Boundary `^inf(ω1) ω̄ (ω2)^inf` of a D̃ₙ quiver together with its root.
///
/// `ω1 = ω̄ x o x ᵗω̄ x o x` and `ω2 = y o y ᵗω̄ y o y ω̄` (the latter
/// starting at the last root vertex); `o` carries `u0`.
pub fn build_dtilde_boundary(d: &DTilde) -> Result<(Boundary, RootSpan)> {
    let sigma = Sigma::new(d);
    let (tvals, tletters) = sigma.transposed();
    let o = u(0);
    let w = &sigma.values;
    let first = w[0].clone();
    let last = w[w.len() - 1].clone();

    let mut v1: Vec<RationalFunction> = w.clone();
    v1.push(o.clone());
    v1.extend(tvals.iter().cloned());
    v1.push(o.clone());
    let mut l1 = sigma.letters.clone();
    l1.extend([Letter::X, Letter::X]);
    l1.extend(tletters.iter().copied());
    l1.extend([Letter::X, Letter::X]);
    let omega1 = Generator::new(v1, l1)?;

    let mut v2 = vec![last, o.clone()];
    v2.extend(tvals.iter().cloned());
    v2.push(o);
    v2.extend(w[..w.len() - 1].iter().cloned());
    let mut l2 = vec![Letter::Y, Letter::Y];
    l2.extend(tletters.iter().copied());
    l2.extend([Letter::Y, Letter::Y]);
    l2.extend(sigma.letters.iter().copied());
    let omega2 = Generator::new(v2, l2)?;

    debug_assert_eq!(first, omega1.values()[0]);
    let root = RootWord::new(sigma.values.clone(), sigma.letters.clone())?;
    let boundary = Boundary::bi_generated(omega1, root, omega2)?;
    let last_index = sigma.letters.len() as i64;
    let span = RootSpan {
        first: 0,
        last: last_index,
        vertices: (0..=last_index)
            .map(|i| (boundary.coord(i), boundary.value(i).clone()))
            .collect(),
    };
    Ok((boundary, span))
}
