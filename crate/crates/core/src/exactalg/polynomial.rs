use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(Monomial::one(), c.into())
    }

    pub fn var(v: usize) -> Self {
        Self::term(Monomial::var(v), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self { terms }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// A single term `c * m` (including nonzero constants).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// One past the largest variable index appearing in any term.
    pub fn width(&self) -> usize {
        self.terms.iter().map(|t| t.0.width()).max().unwrap_or(0)
    }

    /// Sorted list of variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.width()];
        for (m, _) in &self.terms {
            for (v, _) in m.iter() {
                seen[v] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Self { terms }
    }

    /// Multiplication by a single term keeps the order, so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(n, k)| (n.mul(m), k * c))
            .collect();
        Self { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_integer(&self, c: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| {
                debug_assert!((k % c).is_zero());
                (m.clone(), k / c)
            })
            .collect();
        Self { terms }
    }

    /// Divides every term by `m`, which must divide them all.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        if m.is_one() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(n, k)| (n.div(m).expect("monomial must divide every term"), k.clone()))
            .collect();
        Self { terms }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_term() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.div(lm)?, q));
            }
            return Some(Self { terms });
        }
        if self.total_degree() < divisor.total_degree() {
            return None;
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (dm, dc) in &divisor.terms[1..] {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(Self { terms: quotient })
    }

    /// Coefficients with respect to variable `v`: entry `d` holds the
    /// coefficient of `u_v^d`.
    pub fn coefficients_in(&self, v: usize) -> Vec<Self> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        let strip: Vec<Monomial> = (0..=deg as u32).map(|e| Monomial::var_pow(v, e)).collect();
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            let rest = m.div(&strip[e]).expect("exponent present");
            buckets[e].push((rest, c.clone()));
        }
        // removing one variable preserves the relative graded-lex order within a bucket
        buckets
            .into_iter()
            .map(|mut terms| {
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Self { terms }
            })
            .collect()
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(v: usize, coeffs: &[Self]) -> Self {
        let terms = coeffs.iter().enumerate().flat_map(|(e, c)| {
            let m = Monomial::var_pow(v, e as u32);
            c.terms.iter().map(move |(n, k)| (n.mul(&m), k.clone()))
        });
        Self::from_terms(terms)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, assignment: &BTreeMap<usize, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, e) in m.iter() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| Error::Evaluation(format!("no value for u{v}")))?;
                t *= num_traits::pow::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// All coefficients strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_positive())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (a, b) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        if b.is_term() {
            let (m, c) = &b.terms[0];
            return a.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.len() * b.len());
        for (bm, bc) in &b.terms {
            for (am, ac) in &a.terms {
                let prod = ac * bc;
                match acc.entry(am.mul(bm)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Polynomial::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn merge(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    let mut terms = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (am, ac) = &a.terms[i];
        let (bm, bc) = &b.terms[j];
        match am.cmp(bm) {
            std::cmp::Ordering::Greater => {
                terms.push((am.clone(), ac.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                terms.push((bm.clone(), if negate_b { -bc } else { bc.clone() }));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { ac - bc } else { ac + bc };
                if !c.is_zero() {
                    terms.push((am.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend(a.terms[i..].iter().cloned());
    terms.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })),
    );
    Polynomial { terms }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Self::term(m, BigInt::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
