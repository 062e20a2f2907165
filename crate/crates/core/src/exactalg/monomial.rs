use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A power product `u0^e0 * u1^e1 * ...`.
///
/// Exponents are stored densely by variable index with trailing zeros
/// trimmed, so two equal monomials always have identical storage.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u16; 10]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: usize) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        let mut m = Self::default();
        if e > 0 {
            m.exps.resize(v + 1, 0);
            m.exps[v] = to_u16(e);
        }
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut m = Self::default();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            if m.exps.len() <= v {
                m.exps.resize(v + 1, 0);
            }
            m.exps[v] = to_u16(u32::from(m.exps[v]) + e);
        }
        m
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps.get(v).copied().map_or(0, u32::from)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// One past the largest variable index present.
    pub fn width(&self) -> usize {
        self.exps.len()
    }

    /// Nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v, u32::from(e)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, &f) in exps.iter_mut().zip(short.exps.iter()) {
            *e = e.checked_add(f).expect("exponent overflow");
        }
        Self { exps }
    }

    pub fn pow(&self, k: u32) -> Self {
        let exps = self
            .exps
            .iter()
            .map(|&e| to_u16(u32::from(e) * k))
            .collect();
        let mut m = Self { exps };
        m.trim();
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, &f) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= f;
        }
        let mut m = Self { exps };
        m.trim();
        Some(m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.min(b))
            .collect();
        let mut m = Self { exps };
        m.trim();
        m
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n)
            .map(|v| {
                let a = self.exps.get(v).copied().unwrap_or(0);
                let b = other.exps.get(v).copied().unwrap_or(0);
                a.max(b)
            })
            .collect();
        Self { exps }
    }

    /// The monomial whose square is `self`, if every exponent is even.
    pub fn sqrt(&self) -> Option<Self> {
        if self.exps.iter().any(|e| e % 2 != 0) {
            return None;
        }
        let exps = self.exps.iter().map(|e| e / 2).collect();
        Some(Self { exps })
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }
}

fn to_u16(e: u32) -> u16 {
    u16::try_from(e).expect("exponent overflow")
}

/// Graded lexicographic order with `u0 < u1 < u2 < ...`: total degree
/// first, then the exponent of the highest-indexed variable decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let n = self.exps.len().max(other.exps.len());
        for v in (0..n).rev() {
            let a = self.exps.get(v).copied().unwrap_or(0);
            let b = other.exps.get(v).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "u{v}")?;
            } else {
                write!(f, "u{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_prefers_degree_then_high_variables() {
        let u = Monomial::var;
        assert!(u(1).mul(&u(2)) > u(5));
        assert!(u(2) > u(1));
        assert!(u(1) > u(0));
        // same degree: the higher variable wins
        assert!(u(1).mul(&u(4)) > u(2).mul(&u(3)));
    }

    #[test]
    fn storage_is_canonical() {
        let a = Monomial::var(3).div(&Monomial::var(3)).unwrap();
        assert_eq!(a, Monomial::one());
        assert!(a.is_one());
        let b = Monomial::from_pairs([(2, 1), (0, 0), (2, 1)]);
        assert_eq!(b, Monomial::var_pow(2, 2));
        assert_eq!(b.to_string(), "u2^2");
    }

    #[test]
    fn gcd_lcm_sqrt() {
        let a = Monomial::from_pairs([(1, 2), (2, 1)]);
        let b = Monomial::from_pairs([(1, 1), (3, 4)]);
        assert_eq!(a.gcd(&b), Monomial::var(1));
        assert_eq!(a.lcm(&b), Monomial::from_pairs([(1, 2), (2, 1), (3, 4)]));
        assert_eq!(a.sqrt(), None);
        assert_eq!(
            Monomial::from_pairs([(1, 2), (2, 4)]).sqrt(),
            Some(Monomial::from_pairs([(1, 1), (2, 2)]))
        );
    }
}
