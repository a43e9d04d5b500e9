//! Rational functions with factored denominators.
//!
//! Every denominator met in the class computations is a product of powers of
//! polynomials that are linear in some variable, such as `u + t1 - t3`,
//! `u*t1 - t3` or `t2 - t3`. Such a factor is irreducible once its integer
//! content is removed, so keeping denominators as sorted lists of normalized
//! factors makes the representation canonical, and cancellation reduces to
//! trial division by each factor. Factors that are not recognizably
//! irreducible fall back to a multivariate gcd.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use super::gcd::{certainly_coprime, poly_gcd, sample_point};
use super::int::Int;
use super::poly::{mulmod, submod, Exps, LaurentPoly, Var, VariableContext, MOD_P, SLOTS};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Factor {
    poly: LaurentPoly,
    exp: u32,
    /// A slot in which `poly` has degree one with an integer coefficient,
    /// which certifies irreducibility.
    linear: Option<(usize, Int)>,
}

/// A normalized quotient `num / den` of Laurent polynomials.
///
/// The denominator is a positive integer times a product of distinct
/// normalized factors: polynomials with unit content, no monomial content
/// and a positive leading coefficient. Monomials are units of the Laurent
/// ring and always live in the numerator. Numerator and denominator are
/// coprime.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    scalar: Int,
    factors: Vec<Factor>,
}

fn linear_slot(p: &LaurentPoly) -> Option<(usize, Int)> {
    (0..SLOTS).find_map(|s| {
        if p.slot_degree(s) != Some(1) || p.slot_min_degree(s) != Some(0) {
            return None;
        }
        let mut coeff = None;
        for t in p.terms() {
            if t.exps.get(s) == 1 {
                if coeff.is_some() || t.exps.degree() != 1 {
                    return None;
                }
                coeff = Some(t.coeff.clone());
            }
        }
        coeff.map(|c| (s, c))
    })
}

/// Splits `p` as `unit * scalar * q` with `q` normalized; returns
/// `(sign, monomial, scalar, q)`.
fn normalize_factor(p: &LaurentPoly) -> (bool, Exps, Int, LaurentPoly) {
    let mono = p.monomial_content();
    let content = p.content();
    let mut q = p.shift(&Exps::ZERO.sub(&mono)).div_scalar(&content).expect("content divides");
    let negative = q.leading().is_some_and(|t| t.coeff.is_negative());
    if negative {
        q = q.neg();
    }
    (negative, mono, content, q)
}

impl Factor {
    fn new(poly: LaurentPoly, exp: u32) -> Factor {
        let linear = linear_slot(&poly);
        Factor { poly, exp, linear }
    }

    /// Whether `num` is divisible by this factor, decided by exact division
    /// after a cheap modular test on a point of the hypersurface.
    fn divides(&self, num: &LaurentPoly) -> Option<LaurentPoly> {
        if num.is_zero() {
            return Some(num.clone());
        }
        if let Some((slot, c)) = &self.linear {
            for seed in 0..2u64 {
                let mut point = sample_point(seed + 17 * *slot as u64);
                point[*slot] = 0;
                let Some(rest) = self.poly.eval_mod(&point) else { break };
                // Solve c * x + rest = 0 for the linear variable.
                let c_mod = c.rem_u64(MOD_P);
                if c_mod == 0 {
                    break;
                }
                let x = mulmod(submod(0, rest), super::poly::invmod(c_mod));
                if x == 0 {
                    continue;
                }
                point[*slot] = x;
                match num.eval_mod(&point) {
                    Some(0) => break,
                    Some(_) => return None,
                    None => continue,
                }
            }
        }
        num.exact_div(&self.poly).ok()
    }
}

impl RatFunc {
    pub fn zero(ctx: VariableContext) -> Self {
        Self::from_poly(LaurentPoly::zero(ctx))
    }

    pub fn one(ctx: VariableContext) -> Self {
        Self::from_poly(LaurentPoly::one(ctx))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFunc { num, scalar: Int::ONE, factors: Vec::new() }
    }

    pub fn constant(ctx: VariableContext, c: impl Into<Int>) -> Self {
        Self::from_poly(LaurentPoly::constant(ctx, c))
    }

    pub fn var(ctx: VariableContext, v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(ctx, v))
    }

    pub fn t(ctx: VariableContext, i: usize) -> Self {
        Self::from_poly(LaurentPoly::t(ctx, i))
    }

    /// `num / den`, normalized.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        Self::from_factors(num, [(den, 1)])
    }

    /// `num / prod f^e`, normalized.
    pub fn from_factors(
        num: LaurentPoly,
        factors: impl IntoIterator<Item = (LaurentPoly, u32)>,
    ) -> Result<Self> {
        let ctx = num.ctx();
        let mut r = RatFunc { num, scalar: Int::ONE, factors: Vec::new() };
        for (f, e) in factors {
            ctx.check(&f.ctx())?;
            if f.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            r.push_factor(&f, e);
        }
        r.reduce();
        Ok(r)
    }

    /// Appends `f^e` to the denominator without reducing.
    fn push_factor(&mut self, f: &LaurentPoly, e: u32) {
        if e == 0 {
            return;
        }
        let (negative, mono, content, q) = normalize_factor(f);
        let e16 = e as i16;
        self.num = self.num.shift(&Exps::ZERO.sub(&mono.scale(e16)));
        if negative && e % 2 == 1 {
            self.num = self.num.neg();
        }
        self.scalar = &self.scalar * &content.pow(e);
        if q.is_one() {
            return;
        }
        match self.factors.binary_search_by(|g| g.poly.cmp(&q)) {
            Ok(i) => self.factors[i].exp += e,
            Err(i) => self.factors.insert(i, Factor::new(q, e)),
        }
    }

    /// Cancels every common factor of numerator and denominator.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.factors.clear();
            self.scalar = Int::ONE;
            return;
        }
        let mut k = 0;
        while k < self.factors.len() {
            if self.factors[k].linear.is_some() {
                while self.factors[k].exp > 0 {
                    match self.factors[k].divides(&self.num) {
                        Some(q) => {
                            self.num = q;
                            self.factors[k].exp -= 1;
                        }
                        None => break,
                    }
                }
                k += 1;
                continue;
            }
            if let Some(q) = self.factors[k].divides(&self.num) {
                self.num = q;
                self.factors[k].exp -= 1;
                if self.factors[k].exp == 0 {
                    self.factors.remove(k);
                }
                continue;
            }
            if certainly_coprime(&self.num, &self.factors[k].poly) {
                k += 1;
                continue;
            }
            let g = poly_gcd(&self.num, &self.factors[k].poly).expect("same context");
            if g.is_constant() {
                k += 1;
                continue;
            }
            if g == self.factors[k].poly {
                self.num = self.num.exact_div(&g).expect("gcd divides");
                self.factors[k].exp -= 1;
                if self.factors[k].exp == 0 {
                    self.factors.remove(k);
                }
                continue;
            }
            // Split the factor along the common part and start over.
            let f = self.factors.remove(k);
            let h = f.poly.exact_div(&g).expect("gcd divides");
            self.push_factor(&g, f.exp);
            self.push_factor(&h, f.exp);
            k = 0;
        }
        self.factors.retain(|f| f.exp > 0);
        if !self.scalar.is_one() {
            let g = self.num.content().gcd(&self.scalar);
            if !g.is_one() {
                self.num = self.num.div_scalar(&g).expect("content divides");
                self.scalar = self.scalar.exact_div(&g).expect("gcd divides");
            }
        }
    }

    pub fn ctx(&self) -> VariableContext {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    /// Whether the denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.factors.is_empty() && self.scalar.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Expanded denominator, a polynomial with positive leading coefficient.
    pub fn denominator(&self) -> LaurentPoly {
        let ctx = self.ctx();
        let mut d = LaurentPoly::constant(ctx, self.scalar.clone());
        for f in &self.factors {
            d = &d * &f.poly.pow(f.exp);
        }
        d
    }

    /// Denominator factors with multiplicities, in canonical order.
    pub fn denominator_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.factors.iter().map(|f| (&f.poly, f.exp))
    }

    pub fn denominator_scalar(&self) -> &Int {
        &self.scalar
    }

    /// The underlying Laurent polynomial, if the denominator is trivial.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn into_laurent(self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotDivisible)
        }
    }

    fn all_linear(&self) -> bool {
        self.factors.iter().all(|f| f.linear.is_some())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), scalar: self.scalar.clone(), factors: self.factors.clone() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx().check(&other.ctx())?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.scalar == other.scalar && self.factors == other.factors {
            let mut r = RatFunc {
                num: &self.num + &other.num,
                scalar: self.scalar.clone(),
                factors: self.factors.clone(),
            };
            r.reduce();
            return Ok(r);
        }
        let ctx = self.ctx();
        let g = self.scalar.gcd(&other.scalar);
        let ca = other.scalar.exact_div(&g).expect("gcd divides");
        let cb = self.scalar.exact_div(&g).expect("gcd divides");
        let mut cof_a = LaurentPoly::constant(ctx, ca.clone());
        let mut cof_b = LaurentPoly::constant(ctx, cb);
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let ord = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) => a.poly.cmp(&b.poly),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    let a = &self.factors[i];
                    cof_b = &cof_b * &a.poly.pow(a.exp);
                    factors.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let b = &other.factors[j];
                    cof_a = &cof_a * &b.poly.pow(b.exp);
                    factors.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (a, b) = (&self.factors[i], &other.factors[j]);
                    if a.exp < b.exp {
                        cof_a = &cof_a * &a.poly.pow(b.exp - a.exp);
                    } else if b.exp < a.exp {
                        cof_b = &cof_b * &a.poly.pow(a.exp - b.exp);
                    }
                    factors.push(Factor { exp: a.exp.max(b.exp), ..a.clone() });
                    i += 1;
                    j += 1;
                }
            }
        }
        let num = &(&self.num * &cof_a) + &(&other.num * &cof_b);
        let mut r = RatFunc { num, scalar: &self.scalar * &ca, factors };
        r.reduce();
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ctx().check(&other.ctx())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ctx()));
        }
        // Cancel across before multiplying to keep the numerator small.
        let mut a = RatFunc { num: self.num.clone(), scalar: Int::ONE, factors: other.factors.clone() };
        let mut b = RatFunc { num: other.num.clone(), scalar: Int::ONE, factors: self.factors.clone() };
        a.scalar = other.scalar.clone();
        b.scalar = self.scalar.clone();
        a.reduce();
        b.reduce();
        let mut factors = a.factors;
        for f in b.factors {
            match factors.binary_search_by(|g| g.poly.cmp(&f.poly)) {
                Ok(i) => factors[i].exp += f.exp,
                Err(i) => factors.insert(i, f),
            }
        }
        let mut r = RatFunc { num: &a.num * &b.num, scalar: &a.scalar * &b.scalar, factors };
        if !r.all_linear() {
            r.reduce();
        }
        Ok(r)
    }

    /// Multiplies by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        self.checked_mul(&RatFunc::from_poly(p.clone()))
    }

    /// Divides by `f^e` for a polynomial `f`.
    pub fn div_poly(&self, f: &LaurentPoly, e: u32) -> Result<Self> {
        self.ctx().check(&f.ctx())?;
        if f.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut r = self.clone();
        r.push_factor(f, e);
        r.reduce();
        Ok(r)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let num = self.denominator();
        Self::from_factors(num, [(self.num.clone(), 1)])
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.ctx().check(&other.ctx())?;
        self.checked_mul(&other.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one(self.ctx()));
        }
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = k.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            scalar: base.scalar.pow(k),
            factors: base.factors.into_iter().map(|f| Factor { exp: f.exp * k, ..f }).collect(),
        })
    }

    /// Rebuilds the factor list after transforming every factor.
    fn map_parts(&self, f: impl Fn(&LaurentPoly) -> Result<LaurentPoly>, automorphism: bool) -> Result<Self> {
        let mut r = RatFunc { num: f(&self.num)?, scalar: self.scalar.clone(), factors: Vec::new() };
        for fac in &self.factors {
            let image = f(&fac.poly)?;
            if image.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            r.push_factor(&image, fac.exp);
        }
        if !automorphism {
            r.reduce();
        }
        Ok(r)
    }

    /// Applies `t_i -> t_{sigma(i)}` (one-line notation, 1-based).
    pub fn act_permutation(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.ctx().n {
            return Err(Error::SizeMismatch { expected: self.ctx().n, found: sigma.len() });
        }
        self.map_parts(|p| p.act_permutation(sigma), true)
    }

    /// Exchanges `t_i` and `t_{i+1}`.
    pub fn swap(&self, i: usize) -> Self {
        let mut r = RatFunc { num: self.num.swap(i), scalar: self.scalar.clone(), factors: Vec::new() };
        for fac in &self.factors {
            r.push_factor(&fac.poly.swap(i), fac.exp);
        }
        r
    }

    /// Substitutes every variable by a scalar multiple of a Laurent monomial
    /// of the target context.
    pub fn substitute_monomials(
        &self,
        target: VariableContext,
        image: &dyn Fn(Var) -> (Int, Exps),
    ) -> Result<Self> {
        self.map_parts(|p| p.substitute_monomials(target, image), false)
    }

    /// Simultaneous substitution of rational functions for the variables.
    pub fn substitute(&self, target: VariableContext, image: &dyn Fn(Var) -> RatFunc) -> Result<Self> {
        let ctx = self.ctx();
        let mut images: HashMap<usize, RatFunc> = HashMap::new();
        for s in ctx.slots() {
            let img = image(ctx.var_of_slot(s));
            target.check(&img.ctx())?;
            images.insert(s, img);
        }
        if images.values().all(|r| r.is_polynomial() && r.num.len() <= 1) {
            let mono = |v: Var| {
                let r = &images[&ctx.slot(v)];
                match r.num.leading() {
                    Some(t) => (t.coeff.clone(), t.exps),
                    None => (Int::ZERO, Exps::ZERO),
                }
            };
            return self.substitute_monomials(target, &mono);
        }
        let eval = |p: &LaurentPoly| -> Result<RatFunc> {
            let mut acc = RatFunc::zero(target);
            let mut powers: HashMap<(usize, i16), RatFunc> = HashMap::new();
            for t in p.terms() {
                let mut m = RatFunc::constant(target, t.coeff.clone());
                for s in ctx.slots() {
                    let k = t.exps.get(s);
                    if k == 0 {
                        continue;
                    }
                    let power = match powers.entry((s, k)) {
                        Entry::Occupied(e) => e.into_mut(),
                        Entry::Vacant(e) => {
                            let img = &images[&s];
                            if k < 0 && img.is_zero() {
                                return Err(Error::DenominatorVanishes);
                            }
                            e.insert(img.pow(k as i32)?)
                        }
                    };
                    m = m.checked_mul(power)?;
                }
                acc = acc.checked_add(&m)?;
            }
            Ok(acc)
        };
        let mut r = eval(&self.num)?;
        let mut den = RatFunc::constant(target, self.scalar.clone());
        for fac in &self.factors {
            let img = eval(&fac.poly)?;
            if img.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            den = den.checked_mul(&img.pow(fac.exp as i32)?)?;
        }
        r = r.checked_div(&den)?;
        Ok(r)
    }

    /// `self * prod(factors)`, which must be a Laurent polynomial.
    ///
    /// Denominator factors are cancelled against matching factors first so
    /// that the full product is never expanded; anything left over is removed
    /// by exact division, which fails with [`Error::NotDivisible`] if the
    /// result is not a Laurent polynomial.
    pub fn mul_factors_into_laurent(&self, factors: &[LaurentPoly]) -> Result<LaurentPoly> {
        let ctx = self.ctx();
        let mut den: Vec<Factor> = self.factors.clone();
        let mut scalar = self.scalar.clone();
        let mut acc = self.num.clone();
        let mut kept = Vec::new();
        for f in factors {
            ctx.check(&f.ctx())?;
            let (negative, mono, content, q) = normalize_factor(f);
            let mut unit = LaurentPoly::monomial(ctx, if negative { -1 } else { 1 }, mono);
            match scalar.exact_div(&content) {
                Some(s) => scalar = s,
                None => {
                    let g = scalar.gcd(&content);
                    scalar = scalar.exact_div(&g).expect("gcd divides");
                    unit = unit.scale(&content.exact_div(&g).expect("gcd divides"));
                }
            }
            acc = &acc * &unit;
            match den.iter_mut().find(|d| d.exp > 0 && d.poly == q) {
                Some(d) => d.exp -= 1,
                None => kept.push(q),
            }
        }
        kept.sort_by_key(|p| p.len());
        for q in &kept {
            acc = &acc * q;
        }
        for d in den.iter().filter(|d| d.exp > 0) {
            for _ in 0..d.exp {
                acc = acc.exact_div(&d.poly)?;
            }
        }
        acc.div_scalar(&scalar)
    }

    /// Moves to another context with the same slot layout.
    pub fn with_ctx(&self, ctx: VariableContext) -> Result<Self> {
        self.map_parts(|p| p.clone().with_ctx(ctx), true)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx() != other.ctx() {
            return false;
        }
        if self.all_linear() && other.all_linear() {
            return self.num == other.num && self.scalar == other.scalar && self.factors == other.factors;
        }
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl Eq for RatFunc {}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render::Naming::Standard.ratfunc(self))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$checked(rhs).expect("rational function operation failed")
            }
        }
        impl std::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$checked(&rhs).expect("rational function operation failed")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(3, true, true).unwrap()
    }

    fn t(i: usize) -> LaurentPoly {
        LaurentPoly::t(ctx(), i)
    }

    #[test]
    fn opposite_fractions_cancel() {
        let a = RatFunc::new(LaurentPoly::one(ctx()), &t(1) - &t(2)).unwrap();
        let b = RatFunc::new(LaurentPoly::one(ctx()), &t(2) - &t(1)).unwrap();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn common_denominator_sum() {
        let c = ctx();
        let a = RatFunc::new(LaurentPoly::one(c), &t(1) - &t(2)).unwrap();
        let b = RatFunc::new(LaurentPoly::one(c), &t(1) - &t(3)).unwrap();
        let num = &(&t(1).scale(&Int::from(2)) - &t(2)) - &t(3);
        let expected = RatFunc::new(num, &(&t(1) - &t(2)) * &(&t(1) - &t(3))).unwrap();
        assert_eq!(&a + &b, expected);
    }

    #[test]
    fn products_cancel() {
        let c = ctx();
        let d = &t(1) - &t(2);
        let x = RatFunc::new(d.clone(), t(3)).unwrap();
        let y = RatFunc::new(t(3), d.clone()).unwrap();
        assert!((&x * &y).is_one());
        let inv = RatFunc::new(LaurentPoly::one(c), d.clone()).unwrap();
        assert!((&RatFunc::from_poly(d) * &inv).is_one());
    }

    #[test]
    fn monomial_denominators_move_to_numerator() {
        let c = ctx();
        let u = LaurentPoly::var(c, Var::U);
        let one_minus = &LaurentPoly::one(c) - &(&t(3) * &(&u * &t(1)).exact_div(&(&(&u * &t(1)) * &(&u * &t(1)))).unwrap());
        let r = RatFunc::new(LaurentPoly::one(c), one_minus).unwrap();
        assert_eq!(r.denominator(), &(&u * &t(1)) - &t(3));
        assert_eq!(r.numerator(), &(&u * &t(1)));
    }

    #[test]
    fn non_linear_denominators_reduce_by_gcd() {
        let c = ctx();
        let num = &(&t(1) * &t(1)) - &(&t(2) * &t(2));
        let den = &(&t(1) * &t(1)) * &(&t(1) * &t(1)) - &(&t(2) * &t(2)) * &(&t(2) * &t(2));
        let r = RatFunc::new(num, den).unwrap();
        let expected = RatFunc::new(LaurentPoly::one(c), &(&t(1) * &t(1)) + &(&t(2) * &t(2))).unwrap();
        assert_eq!(r, expected);
        assert_eq!(r.denominator(), &(&t(1) * &t(1)) + &(&t(2) * &t(2)));
    }

    #[test]
    fn substitution_vanishing_denominator() {
        let c = ctx();
        let r = RatFunc::new(LaurentPoly::one(c), &t(1) - &t(2)).unwrap();
        let image = |v: Var| match v {
            Var::T(2) => RatFunc::t(c, 1),
            other => RatFunc::var(c, other),
        };
        assert_eq!(r.substitute(c, &image), Err(Error::DenominatorVanishes));
    }
}
