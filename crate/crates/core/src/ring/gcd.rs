//! Multivariate gcd by recursive content and primitive remainder sequences.
//!
//! Used only for denominators that are not recognizably irreducible, which
//! the class computations never produce; the sizes met here are tiny.

use super::poly::{invmod, mulmod, submod, Exps, LaurentPoly, MOD_P, SLOTS};
use crate::error::Result;

/// Greatest common divisor of two Laurent polynomials, normalized to have no
/// monomial content and a positive leading coefficient.
///
/// Laurent monomials are units, so the result is only defined up to them.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    a.ctx().check(&b.ctx())?;
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    Ok(normalize_sign(gcd_rec(&a, &b)))
}

/// Proves that `a` and `b` share no non-monomial factor, by specializing all
/// but one shared variable at a random point and taking a univariate gcd
/// modulo a prime. A `false` answer is inconclusive.
///
/// When the leading coefficients survive the specialization, the degree of
/// the specialized gcd bounds the degree of the true gcd in that variable,
/// and a gcd of degree zero in every shared variable is a unit.
pub(crate) fn certainly_coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    'slots: for slot in 0..SLOTS {
        if a.slot_degree(slot).unwrap_or(0) == 0 || b.slot_degree(slot).unwrap_or(0) == 0 {
            continue;
        }
        for seed in 0..3u64 {
            let point = sample_point(seed * 31 + slot as u64);
            let (Some(ua), Some(ub)) = (specialize(&a, slot, &point), specialize(&b, slot, &point)) else {
                continue;
            };
            if univariate_gcd_degree(ua, ub) == 0 {
                continue 'slots;
            }
        }
        return false;
    }
    true
}

/// Deterministic pseudo-random evaluation points.
pub(crate) fn sample_point(seed: u64) -> [u64; SLOTS] {
    let mut state = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0x2545_f491_4f6c_dd1d;
    let mut point = [0u64; SLOTS];
    for v in point.iter_mut() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        *v = 2 + state % (MOD_P - 3);
    }
    point
}

/// Coefficients in `slot`, lowest first, with the other variables evaluated;
/// `None` if the leading coefficient vanishes.
fn specialize(p: &LaurentPoly, slot: usize, point: &[u64; SLOTS]) -> Option<Vec<u64>> {
    let coeffs = p.coefficients_in(slot);
    let top = *coeffs.keys().next_back()? as usize;
    let mut out = vec![0u64; top + 1];
    for (k, c) in coeffs {
        out[k as usize] = c.eval_mod(point)?;
    }
    (out[top] != 0).then_some(out)
}

fn univariate_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), invmod(*b.last().unwrap()));
            for (k, &c) in b.iter().enumerate() {
                a[k + shift] = submod(a[k + shift], mulmod(f, c));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn strip_monomial(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.shift(&Exps::ZERO.sub(&p.monomial_content()))
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    match p.leading() {
        Some(t) if t.coeff.is_negative() => p.neg(),
        _ => p,
    }
}

fn gcd_rec(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ctx = a.ctx();
    if a.is_zero() {
        return strip_monomial(b);
    }
    if b.is_zero() {
        return strip_monomial(a);
    }
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::constant(ctx, a.content().gcd(&b.content()));
    }
    let slot = (0..SLOTS)
        .find(|&s| a.slot_degree(s).unwrap_or(0) > 0 && b.slot_degree(s).unwrap_or(0) > 0);
    let Some(slot) = slot else {
        // No shared variable: the gcd divides the coefficients of either
        // polynomial with respect to any variable of the other.
        let s = (0..SLOTS).find(|&s| a.slot_degree(s).unwrap_or(0) > 0).expect("nonconstant");
        return gcd_rec(&content_in(&a, s), &b);
    };
    let ca = content_in(&a, slot);
    let cb = content_in(&b, slot);
    let c = gcd_rec(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, slot);
    normalize_sign(&c * &g)
}

/// Gcd of the coefficients with respect to one variable.
fn content_in(p: &LaurentPoly, slot: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.ctx());
    for c in p.coefficients_in(slot).into_values() {
        g = gcd_rec(&g, &c);
        if g.is_one() {
            break;
        }
    }
    normalize_sign(g)
}

fn primitive_in(p: &LaurentPoly, slot: usize) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, slot);
    normalize_sign(p.exact_div(&c).expect("content divides"))
}

fn leading_coeff_in(p: &LaurentPoly, slot: usize) -> (i16, LaurentPoly) {
    p.coefficients_in(slot).into_iter().next_back().expect("nonzero polynomial")
}

fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, slot: usize) -> LaurentPoly {
    let (db, lb) = leading_coeff_in(b, slot);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = leading_coeff_in(&r, slot);
        if dr < db {
            break;
        }
        let shifted = lr.shift(&Exps::unit(slot, dr - db));
        r = &(&lb * &r) - &(&shifted * b);
    }
    r
}

/// Gcd of two polynomials that are primitive with respect to `slot`.
fn primitive_prs(a: LaurentPoly, b: LaurentPoly, slot: usize) -> LaurentPoly {
    let (mut a, mut b) = if a.slot_degree(slot) >= b.slot_degree(slot) { (a, b) } else { (b, a) };
    while !b.is_zero() {
        if b.slot_degree(slot) == Some(0) {
            return LaurentPoly::one(a.ctx());
        }
        let r = pseudo_remainder(&a, &b, slot);
        a = b;
        b = primitive_in(&r, slot);
    }
    primitive_in(&a, slot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Int, Var, VariableContext};

    #[test]
    fn recovers_planted_common_factor() {
        let c = VariableContext::new(3, true, false).unwrap();
        let t = |i| LaurentPoly::t(c, i);
        let u = LaurentPoly::var(c, Var::U);
        let g = &(&t(1) * &t(2)) - &(&u + &t(3));
        let a = &g * &(&t(1) + &LaurentPoly::constant(c, 2));
        let b = &g * &(&(&t(2) * &t(2)) - &u);
        assert_eq!(poly_gcd(&a, &b).unwrap(), normalize_sign(g.clone()));
        assert_eq!(poly_gcd(&a.scale(&Int::from(6)), &b.scale(&Int::from(4))).unwrap(), normalize_sign(g).scale(&Int::from(2)));
    }

    #[test]
    fn coprime_inputs() {
        let c = VariableContext::plain(3);
        let t = |i| LaurentPoly::t(c, i);
        assert!(poly_gcd(&(&t(1) - &t(2)), &(&t(1) - &t(3))).unwrap().is_one());
        let inv = LaurentPoly::var_pow(c, Var::T(1), -2);
        assert!(poly_gcd(&(&t(1) * &inv), &(&t(2) * &inv)).unwrap().is_one());
    }
}
