use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Element of `Q(u0, u1, ...)` held as a reduced fraction of integer
/// polynomials.
///
/// Canonical form: numerator and denominator coprime, their integer contents
/// coprime, denominator leading coefficient positive, zero stored as `0/1`.
/// Equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        canonicalize(num, den)
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn var(v: usize) -> Self {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn integer<T: Into<BigInt>>(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::from_poly(m.into())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return canon(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_term() && rhs.den.is_term() {
            let (ma, ca) = &self.den.terms()[0];
            let (mb, cb) = &rhs.den.terms()[0];
            let m = ma.lcm(mb);
            let c = ca.lcm(cb);
            let fa = m.div(ma).expect("lcm divisible");
            let fb = m.div(mb).expect("lcm divisible");
            let num = &self.num.mul_term(&fa, &(&c / ca)) + &rhs.num.mul_term(&fb, &(&c / cb));
            return canon(num, Polynomial::term(m, c));
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        canon(num, &self.den * &rhs.den)
    }

    fn neg_impl(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // cross-cancel first so the products stay small
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        canon(&n1 * &n2, &d1 * &d2)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_impl(&rhs.inverse()?))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if self.num.leading_coefficient().is_negative() {
            (-&self.den, -&self.num)
        } else {
            (self.den.clone(), self.num.clone())
        };
        Ok(Self { num, den })
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul_impl(&Self::integer(c))
    }

    /// `(numerator, denominator monomial)` when the denominator is a single
    /// monomial with coefficient 1, i.e. the value is a Laurent polynomial.
    pub fn laurent_decompose(&self) -> Option<(Polynomial, Monomial)> {
        match self.den.terms() {
            [(m, c)] if c.is_one() => Some((self.num.clone(), m.clone())),
            _ => None,
        }
    }

    /// Laurent with every numerator coefficient positive.
    pub fn is_positive_laurent(&self) -> bool {
        self.laurent_decompose().is_some() && self.num.has_positive_coefficients()
    }

    /// Square root of numerator and denominator separately.
    pub fn sqrt(&self) -> Result<Self> {
        let num = poly_sqrt(&self.num)?;
        let den = poly_sqrt(&self.den)?;
        Ok(Self { num, den })
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, assignment: &BTreeMap<usize, BigRational>) -> Result<BigRational> {
        let d = self.den.evaluate(assignment)?;
        if d.is_zero() {
            return Err(Error::Evaluation("denominator vanishes".into()));
        }
        Ok(self.num.evaluate(assignment)? / d)
    }

    /// Evaluation with every variable set to the same value.
    pub fn evaluate_uniform(&self, value: &BigRational) -> Result<BigRational> {
        let width = self.num.width().max(self.den.width());
        let assignment = (0..width).map(|v| (v, value.clone())).collect();
        self.evaluate(&assignment)
    }

    /// Replaces variables by rational functions; unmapped variables stay.
    pub fn substitute(&self, map: &BTreeMap<usize, RationalFunction>) -> Result<Self> {
        let num = substitute_poly(&self.num, map);
        let den = substitute_poly(&self.den, map);
        num.checked_div(&den)
    }

    /// Variables occurring in numerator or denominator.
    pub fn variables(&self) -> Vec<usize> {
        let mut vs = self.num.variables();
        vs.extend(self.den.variables());
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Square root of a perfect square polynomial, with positive leading
/// coefficient.
///
/// Terms are peeled off from the top in graded-lex order; any failure to
/// divide, or a candidate term below half the minimal degree of `p`, means
/// `p` is not a square.
pub fn poly_sqrt(p: &Polynomial) -> Result<Polynomial> {
    let Some((lm, lc)) = p.leading_term() else {
        return Ok(Polynomial::zero());
    };
    if lc.is_negative() {
        return Err(Error::NotASquare);
    }
    let root_c = lc.sqrt();
    if &(&root_c * &root_c) != lc {
        return Err(Error::NotASquare);
    }
    let root_m = lm.sqrt().ok_or(Error::NotASquare)?;
    let min_deg = p.terms().iter().map(|t| t.0.degree()).min().unwrap_or(0);
    let lead = Polynomial::term(root_m.clone(), root_c.clone());
    let twice_lead_c = &root_c * 2;
    let mut q = lead.clone();
    let mut rem = p - &(&lead * &lead);
    while let Some((rm, rc)) = rem.leading_term() {
        let tm = rm.div(&root_m).ok_or(Error::NotASquare)?;
        if 2 * tm.degree() < min_deg {
            return Err(Error::NotASquare);
        }
        let (tc, r) = rc.div_rem(&twice_lead_c);
        if !r.is_zero() {
            return Err(Error::NotASquare);
        }
        let t = Polynomial::term(tm, tc);
        // (q + t)^2 - q^2 = 2qt + t^2
        let delta = &(&(&q * &t) * &Polynomial::constant(2)) + &(&t * &t);
        rem = &rem - &delta;
        q = &q + &t;
    }
    Ok(q)
}

fn substitute_poly(p: &Polynomial, map: &BTreeMap<usize, RationalFunction>) -> RationalFunction {
    let mut powers: BTreeMap<(usize, u32), RationalFunction> = BTreeMap::new();
    let mut total = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut kept = Monomial::one();
        let mut value = RationalFunction::integer(c.clone());
        for (v, e) in m.iter() {
            match map.get(&v) {
                Some(f) => {
                    let pw = powers.entry((v, e)).or_insert_with(|| f.pow(e)).clone();
                    value = &value * &pw;
                }
                None => kept = kept.mul(&Monomial::var_pow(v, e)),
            }
        }
        total = &total + &(&value * &RationalFunction::from_monomial(kept));
    }
    total
}

/// Divides out the common monomial and integer content of a numerator and a
/// denominator.
fn cancel(num: &Polynomial, den: &Polynomial) -> (Polynomial, Polynomial) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let m = num.monomial_content().gcd(&den.monomial_content());
    let c = num.content().gcd(&den.content());
    if m.is_one() && c.is_one() {
        (num.clone(), den.clone())
    } else {
        (
            num.div_integer(&c).div_monomial(&m),
            den.div_integer(&c).div_monomial(&m),
        )
    }
}

fn canon(num: Polynomial, den: Polynomial) -> RationalFunction {
    canonicalize(num, den).expect("nonzero denominator")
}

fn canonicalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if num == den {
        return Ok(RationalFunction::one());
    }
    let (mut num, mut den) = cancel(&num, &den);
    if !num.is_term() && !den.is_term() {
        // den = c * m * d2 with d2 primitive; Laurent results divide by d2 exactly
        let c = den.content();
        let m = den.monomial_content();
        let d2 = den.div_integer(&c).div_monomial(&m);
        if let Some(q) = num.exact_div(&d2) {
            num = q;
            den = Polynomial::term(m, c);
            let reduced = cancel(&num, &den);
            num = reduced.0;
            den = reduced.1;
        } else {
            let g = gcd(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g).expect("gcd divides numerator");
                den = den.exact_div(&g).expect("gcd divides denominator");
            }
        }
    }
    if den.leading_coefficient().is_negative() {
        num = -num;
        den = -den;
    }
    Ok(RationalFunction { num, den })
}

/// Canonical reduction of `num/den`.
pub fn rf_canonicalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    canonicalize(num, den)
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

/// Panics on a zero divisor; use [`RationalFunction::checked_div`] for a `Result`.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero polynomial")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_impl()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                $tr::$f(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_impl()
    }
}

fn is_atomic_denominator(p: &Polynomial) -> bool {
    match p.terms() {
        [(m, c)] => m.is_one() || (c.is_one() && m.iter().count() == 1),
        _ => false,
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if is_atomic_denominator(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: usize) -> RationalFunction {
        RationalFunction::var(v)
    }

    fn one() -> RationalFunction {
        RationalFunction::one()
    }

    #[test]
    fn cancels_common_factor() {
        let num = Polynomial::var(1) * Polynomial::var(2) + Polynomial::var(1) * Polynomial::var(3);
        let f = RationalFunction::new(num, Polynomial::var(1)).unwrap();
        assert_eq!(f, u(2) + u(3));
        assert!(f.is_polynomial());
    }

    #[test]
    fn sign_normalization() {
        let p = Polynomial::var(1) + Polynomial::one();
        let q = Polynomial::var(2) - Polynomial::var(3);
        let a = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let b = RationalFunction::new(-p, -q).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::zero().inverse().is_err());
    }

    #[test]
    fn product_of_fork_factors() {
        let a = (one() + u(3)) / u(1);
        let b = (one() + u(3)) / u(2);
        let prod = &a * &b;
        assert_eq!(prod.to_string(), "(u3^2 + 2*u3 + 1)/(u1*u2)");
        assert_eq!(&prod / &a, b);
    }

    #[test]
    fn printing_forms() {
        assert_eq!((one() / u(1)).to_string(), "1/u1");
        assert_eq!((u(2) / (u(1) * u(1))).to_string(), "u2/u1^2");
        assert_eq!((u(2) / RationalFunction::integer(3)).to_string(), "u2/3");
        assert_eq!((u(2) / (u(1) * RationalFunction::integer(3))).to_string(), "u2/(3*u1)");
        assert_eq!((-u(2) / u(1)).to_string(), "-u2/u1");
    }

    #[test]
    fn sqrt_of_squares() {
        let q = Polynomial::var(3) + Polynomial::one();
        assert_eq!(poly_sqrt(&(&q * &q)).unwrap(), q);
        let m = Polynomial::var(1) * Polynomial::var(2);
        assert_eq!(poly_sqrt(&(&m * &m)).unwrap(), m);
        assert_eq!(poly_sqrt(&q), Err(Error::NotASquare));
        // perfect-square leading and trailing terms but not a square
        let fake = Polynomial::var(1).pow(2) + Polynomial::var(1) + Polynomial::one();
        assert_eq!(poly_sqrt(&fake), Err(Error::NotASquare));
    }

    #[test]
    fn laurent_decomposition() {
        assert_eq!(
            u(1).laurent_decompose(),
            Some((Polynomial::var(1), Monomial::one()))
        );
        let f = (one() + u(1)) / (one() + u(2));
        assert_eq!(f.laurent_decompose(), None);
        let half = u(1) / RationalFunction::integer(2);
        assert_eq!(half.laurent_decompose(), None);
    }

    #[test]
    fn evaluation() {
        let f = (u(1) + one()) / u(2);
        let mut at = BTreeMap::new();
        at.insert(1, BigRational::from_integer(3.into()));
        at.insert(2, BigRational::from_integer(2.into()));
        assert_eq!(f.evaluate(&at).unwrap(), BigRational::from_integer(2.into()));
        at.insert(2, BigRational::zero());
        assert!(f.evaluate(&at).is_err());
    }

    #[test]
    fn substitution_sets_u0() {
        let f = (u(0) * u(1) + one()) / u(2);
        let map = BTreeMap::from([(0, one())]);
        assert_eq!(f.substitute(&map).unwrap(), (u(1) + one()) / u(2));
    }
}
