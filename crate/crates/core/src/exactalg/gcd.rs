use num_integer::Integer;
use num_traits::Signed;

use super::polynomial::Polynomial;

/// Greatest common divisor over `Z[u0, u1, ...]`, normalized to a positive
/// leading coefficient. `gcd(0, 0) = 0`.
///
/// Integer and monomial contents are split off first; the primitive parts
/// are handled by a recursive primitive remainder sequence.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let pa = a.div_integer(&ca).div_monomial(&ma);
    let pb = b.div_integer(&cb).div_monomial(&mb);
    let g = primitive_gcd(&pa, &pb);
    normalize_sign(g.mul_term(&m, &c))
}

/// gcd of primitive inputs with no monomial content; returns a primitive
/// polynomial (sign unspecified).
fn primitive_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a == b {
        return a.clone();
    }
    if a.len() <= b.len() {
        if b.exact_div(a).is_some() {
            return a.clone();
        }
    } else if a.exact_div(b).is_some() {
        return b.clone();
    }
    let va = a.variables();
    let vb = b.variables();
    // a variable occurring in only one operand: the gcd lies in its coefficients
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd_with_coefficients(b, a, v);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd_with_coefficients(a, b, v);
    }
    let v = *va
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), std::cmp::Reverse(v)))
        .expect("non-constant polynomial has a variable");
    univariate_gcd(a, b, v)
}

fn gcd_with_coefficients(other: &Polynomial, p: &Polynomial, v: usize) -> Polynomial {
    let mut g = other.clone();
    let mut coeffs = p.coefficients_in(v);
    coeffs.sort_by_key(|c| c.len());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            return Polynomial::one();
        }
    }
    g
}

fn univariate_gcd(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let mut ua = a.coefficients_in(v);
    let mut ub = b.coefficients_in(v);
    let ca = coefficient_gcd(&ua);
    let cb = coefficient_gcd(&ub);
    let content = gcd(&ca, &cb);
    divide_all(&mut ua, &ca);
    divide_all(&mut ub, &cb);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    while ub.len() > 1 {
        let mut r = pseudo_remainder(&ua, &ub);
        if r.is_empty() {
            break;
        }
        let cr = coefficient_gcd(&r);
        divide_all(&mut r, &cr);
        ua = std::mem::replace(&mut ub, r);
    }
    let last = if ub.len() > 1 { ub } else { vec![Polynomial::one()] };
    &Polynomial::from_coefficients_in(v, &last) * &content
}

fn coefficient_gcd(coeffs: &[Polynomial]) -> Polynomial {
    let mut sorted: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    sorted.sort_by_key(|c| c.len());
    let mut g = Polynomial::zero();
    for c in sorted {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(coeffs: &mut [Polynomial], d: &Polynomial) {
    if d.is_one() {
        return;
    }
    for c in coeffs.iter_mut() {
        *c = c.exact_div(d).expect("content divides every coefficient");
    }
}

/// Pseudo-remainder of dense univariate polynomials with polynomial
/// coefficients (index = degree). Requires `deg a >= deg b >= 1`.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Polynomial> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(bc * &lr);
        }
        debug_assert!(r[dr].is_zero());
        while r.last().is_some_and(Polynomial::is_zero) {
            r.pop();
        }
    }
    r
}

fn normalize_sign(p: Polynomial) -> Polynomial {
    if p.leading_coefficient().is_negative() {
        -p
    } else {
        p
    }
}
