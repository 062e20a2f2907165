//! SL₂-tilings below an admissible boundary.

use std::fmt::Write as _;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{Boundary, FiniteWord, Letter, Location, Point};
use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;
use crate::mat2::Mat2;

/// Directing vector of a ray, in `(col, row)` with rows growing downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    pub fn vector(self) -> Point {
        match self {
            Direction::Horizontal => (1, 0),
            Direction::Vertical => (0, 1),
            Direction::Diagonal => (1, 1),
        }
    }
}

/// A ray `t(origin + k * direction)`, `k >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ray {
    pub origin: Point,
    pub direction: Direction,
}

impl Ray {
    pub fn new(origin: Point, direction: Direction) -> Self {
        Self { origin, direction }
    }

    pub fn point(&self, k: i64) -> Point {
        let (dc, dr) = self.direction.vector();
        (self.origin.0 + k * dc, self.origin.1 + k * dr)
    }
}

/// Value of the tiling for a word `b0 x1 b1 ... x_{n+1} b_{n+1}`:
/// `(1 / (b1...bn)) (1, b0) prod_{i=2}^{n} M(b_{i-1}, x_i, b_i) (1; b_{n+1})`.
pub fn word_value(word: &FiniteWord) -> Result<RationalFunction> {
    product_formula(word, false)
}

/// Same product with leading row `(b0, 1)`: the signed continuant of the
/// linearization coefficients of the columns the word belongs to.
pub fn word_continuant(word: &FiniteWord) -> Result<RationalFunction> {
    product_formula(word, true)
}

fn product_formula(word: &FiniteWord, continuant_row: bool) -> Result<RationalFunction> {
    let b = &word.values;
    let x = &word.letters;
    if x.len() < 2 {
        return Err(Error::Boundary(format!(
            "word {word} is too short for the tiling formula"
        )));
    }
    let n = x.len() - 1;
    let one = RationalFunction::one();
    let mut row = if continuant_row {
        [b[0].clone(), one.clone()]
    } else {
        [one.clone(), b[0].clone()]
    };
    for i in 2..=n {
        let (a, c) = (&b[i - 1], &b[i]);
        let m = match x[i - 1] {
            Letter::X => Mat2::new(a.clone(), one.clone(), RationalFunction::zero(), c.clone()),
            Letter::Y => Mat2::new(c.clone(), RationalFunction::zero(), one.clone(), a.clone()),
        };
        row = Mat2::left_apply(&row, &m);
    }
    let value = Mat2::dot(&row, &[one, b[n + 1].clone()]);
    let mut den = RationalFunction::one();
    for bi in &b[1..=n] {
        den = &den * bi;
    }
    value.checked_div(&den)
}

/// Signed continuant `q_k(a_1, ..., a_k)`, with `q_0 = 1`.
pub fn continuant(a: &[RationalFunction]) -> RationalFunction {
    let mut prev = RationalFunction::zero();
    let mut cur = RationalFunction::one();
    for ai in a {
        let next = &(&cur * ai) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// A boundary with a memo of evaluated points.
///
/// Every cached entry is a fresh evaluation of the matrix-product formula;
/// concurrent evaluations of the same point store the same canonical value.
pub struct TilingSession {
    boundary: Boundary,
    cache: DashMap<Point, RationalFunction>,
}

impl TilingSession {
    pub fn new(boundary: Boundary) -> Self {
        Self {
            boundary,
            cache: DashMap::new(),
        }
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    /// Number of memoized points.
    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    /// Tiling value at a point on or below the boundary.
    pub fn tile_value(&self, p: Point) -> Result<RationalFunction> {
        if let Some(v) = self.cache.get(&p) {
            return Ok(v.clone());
        }
        let value = match self.boundary.locate(p)? {
            Location::Vertex(i) => self.boundary.value(i).clone(),
            Location::Below { from, to } => word_value(&self.boundary.subword(from, to))?,
            Location::Above => return Err(Error::AboveBoundary(p.0, p.1)),
        };
        self.cache.insert(p, value.clone());
        Ok(value)
    }

    /// Whether a point is on or below the boundary.
    pub fn is_defined(&self, p: Point) -> Result<bool> {
        Ok(!matches!(self.boundary.locate(p)?, Location::Above))
    }

    pub fn ray_values(&self, ray: Ray, count: usize) -> Result<Vec<RationalFunction>> {
        (0..count as i64).map(|k| self.tile_value(ray.point(k))).collect()
    }

    /// `(t(c-1, r) + t(c+1, r)) / t(c, r)`.
    pub fn column_ratio(&self, c: i64, r: i64) -> Result<RationalFunction> {
        let mid = self.tile_value((c, r))?;
        if mid.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let sum = &self.tile_value((c - 1, r))? + &self.tile_value((c + 1, r))?;
        sum.checked_div(&mid)
    }

    /// Linearization coefficient of column `c`, computed on the lowest
    /// boundary row of the column and checked on the row below.
    pub fn linearization_coefficient(&self, c: i64) -> Result<RationalFunction> {
        let r = self.boundary.bottom_row(c);
        let alpha = self.column_ratio(c, r)?;
        let check = self.column_ratio(c, r + 1)?;
        if alpha != check {
            return Err(Error::Internal(format!(
                "column {c}: linearization coefficient differs between rows {r} and {}",
                r + 1
            )));
        }
        Ok(alpha)
    }

    /// Matrix-product form of `q_k` over the word of columns
    /// `col_first..=col_last`.
    pub fn continuant_via_word(&self, col_first: i64, col_last: i64) -> Result<RationalFunction> {
        word_continuant(&self.boundary.word_for_columns(col_first, col_last)?)
    }

    /// Evaluates a window `[c0, c1] x [r0, r1]` in parallel; points above
    /// the boundary are `None`. A window entirely above is an error.
    pub fn window(&self, c0: i64, r0: i64, c1: i64, r1: i64) -> Result<Window> {
        if c0 > c1 || r0 > r1 {
            return Err(Error::Range(format!("empty window {c0},{r0},{c1},{r1}")));
        }
        let points: Vec<Point> = (r0..=r1)
            .flat_map(|r| (c0..=c1).map(move |c| (c, r)))
            .collect();
        let cells: Vec<Option<RationalFunction>> = points
            .par_iter()
            .map(|&p| {
                if self.is_defined(p)? {
                    self.tile_value(p).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        if cells.iter().all(Option::is_none) {
            return Err(Error::AboveBoundary(c0, r0));
        }
        let cols = (c1 - c0 + 1) as usize;
        Ok(Window {
            origin: (c0, r0),
            cols,
            rows: (r1 - r0 + 1) as usize,
            cells: cells.chunks(cols).map(<[_]>::to_vec).collect(),
        })
    }
}

/// A rectangular, row-major block of tiling values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub origin: Point,
    pub cols: usize,
    pub rows: usize,
    pub cells: Vec<Vec<Option<RationalFunction>>>,
}

#[derive(Serialize)]
struct WindowJson<'a> {
    origin: [i64; 2],
    cols: usize,
    rows: usize,
    cells: &'a [Vec<Option<String>>],
}

impl Window {
    pub fn get(&self, p: Point) -> Option<&RationalFunction> {
        let c = usize::try_from(p.0 - self.origin.0).ok()?;
        let r = usize::try_from(p.1 - self.origin.1).ok()?;
        self.cells.get(r)?.get(c)?.as_ref()
    }

    /// Every 2x2 block of defined cells has `TL*BR - TR*BL = 1`; returns the
    /// number of blocks checked or the first offending top-left corner.
    pub fn check_unimodular(&self) -> std::result::Result<usize, Point> {
        let mut checked = 0;
        for r in 0..self.rows.saturating_sub(1) {
            for c in 0..self.cols.saturating_sub(1) {
                let (Some(tl), Some(tr), Some(bl), Some(br)) = (
                    &self.cells[r][c],
                    &self.cells[r][c + 1],
                    &self.cells[r + 1][c],
                    &self.cells[r + 1][c + 1],
                ) else {
                    continue;
                };
                if !(&(tl * br) - &(tr * bl)).is_one() {
                    return Err((self.origin.0 + c as i64, self.origin.1 + r as i64));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Applies `f` to every defined cell.
    pub fn map(&self, f: impl Fn(&RationalFunction) -> Result<RationalFunction>) -> Result<Self> {
        let cells = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.as_ref().map(&f).transpose())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Self { cells, ..self.clone() })
    }

    fn strings(&self) -> Vec<Vec<Option<String>>> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| c.as_ref().map(ToString::to_string)).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let cells = self.strings();
        serde_json::to_string_pretty(&WindowJson {
            origin: [self.origin.0, self.origin.1],
            cols: self.cols,
            rows: self.rows,
            cells: &cells,
        })
        .expect("serializable")
    }

    /// Header row of column indices, then one line per row; empty fields
    /// above the boundary.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row");
        for c in 0..self.cols {
            write!(out, ",{}", self.origin.0 + c as i64).expect("string write");
        }
        out.push('\n');
        for (r, row) in self.strings().iter().enumerate() {
            write!(out, "{}", self.origin.1 + r as i64).expect("string write");
            for cell in row {
                out.push(',');
                if let Some(s) = cell {
                    if s.contains(',') || s.contains('"') {
                        write!(out, "\"{}\"", s.replace('"', "\"\"")).expect("string write");
                    } else {
                        out.push_str(s);
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    /// Aligned text grid; `.` marks points above the boundary.
    pub fn to_text(&self) -> String {
        let strings = self.strings();
        let width = strings
            .iter()
            .flatten()
            .map(|c| c.as_ref().map_or(1, String::len))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &strings {
            let line: Vec<String> = row
                .iter()
                .map(|c| format!("{:>width$}", c.as_deref().unwrap_or(".")))
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}
