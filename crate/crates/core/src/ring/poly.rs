//! Sparse multivariate Laurent polynomials over the integers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use super::int::Int;
use crate::error::{Error, Result};

/// Number of exponent slots: `u`, `t1..t14`, `y`.
pub const SLOTS: usize = 16;
/// Largest supported number of `t`-variables.
pub const MAX_T: usize = SLOTS - 2;

/// Which variables a computation uses.
///
/// Exponent slot 0 holds `u`, slots `1..=n` hold `t1..tn` and slot `n + 1`
/// holds `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    pub n: usize,
    pub has_u: bool,
    pub has_y: bool,
}

impl VariableContext {
    pub fn new(n: usize, has_u: bool, has_y: bool) -> Result<Self> {
        if n == 0 || n > MAX_T {
            return Err(Error::SizeOutOfRange { n, max: MAX_T });
        }
        Ok(VariableContext { n, has_u, has_y })
    }

    /// Context with only `t`-variables.
    pub fn plain(n: usize) -> Self {
        Self::new(n, false, false).expect("size in range")
    }

    pub fn slot(&self, v: Var) -> usize {
        match v {
            Var::U => 0,
            Var::T(i) => {
                assert!(i >= 1 && i <= self.n, "t{i} outside context of size {}", self.n);
                i
            }
            Var::Y => self.n + 1,
        }
    }

    pub fn var_of_slot(&self, slot: usize) -> Var {
        if slot == 0 {
            Var::U
        } else if slot <= self.n {
            Var::T(slot)
        } else {
            Var::Y
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        match v {
            Var::U => self.has_u,
            Var::T(i) => i >= 1 && i <= self.n,
            Var::Y => self.has_y,
        }
    }

    /// Slots in use, in canonical variable order.
    pub fn slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.n + 1).filter(move |&s| self.contains(self.var_of_slot(s)))
    }

    pub fn check(&self, other: &VariableContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    U,
    T(usize),
    Y,
}

/// Exponent vector with cached total degree.
///
/// The derived order compares total degree first and then exponents
/// lexicographically on `(u, t1..tn, y)`: the canonical monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exps {
    deg: i32,
    e: [i16; SLOTS],
}

impl Exps {
    pub const ZERO: Exps = Exps { deg: 0, e: [0; SLOTS] };

    pub fn from_slots(e: [i16; SLOTS]) -> Exps {
        let deg = e.iter().map(|&x| x as i32).sum();
        Exps { deg, e }
    }

    pub fn unit(slot: usize, power: i16) -> Exps {
        let mut e = [0; SLOTS];
        e[slot] = power;
        Exps::from_slots(e)
    }

    #[inline]
    pub fn get(&self, slot: usize) -> i16 {
        self.e[slot]
    }

    pub fn slots(&self) -> &[i16; SLOTS] {
        &self.e
    }

    pub fn degree(&self) -> i32 {
        self.deg
    }

    #[inline]
    pub fn add(&self, o: &Exps) -> Exps {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e.iter()) {
            *a += *b;
        }
        Exps { deg: self.deg + o.deg, e }
    }

    #[inline]
    pub fn sub(&self, o: &Exps) -> Exps {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e.iter()) {
            *a -= *b;
        }
        Exps { deg: self.deg - o.deg, e }
    }

    pub fn scale(&self, k: i16) -> Exps {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a *= k;
        }
        Exps { deg: self.deg * k as i32, e }
    }

    /// Componentwise `self >= o`.
    pub fn dominates(&self, o: &Exps) -> bool {
        self.e.iter().zip(o.e.iter()).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.e.iter().all(|&a| a >= 0)
    }

    pub fn componentwise_min(&self, o: &Exps) -> Exps {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e.iter()) {
            *a = (*a).min(*b);
        }
        Exps::from_slots(e)
    }

    pub fn componentwise_max(&self, o: &Exps) -> Exps {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e.iter()) {
            *a = (*a).max(*b);
        }
        Exps::from_slots(e)
    }

    pub fn with(&self, slot: usize, value: i16) -> Exps {
        let mut e = self.e;
        e[slot] = value;
        Exps::from_slots(e)
    }
}

impl std::fmt::Debug for Exps {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.e.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.e[..last])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exps: Exps,
    pub coeff: Int,
}

#[derive(Default)]
struct FxHasher(u64);

impl Hasher for FxHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(buf));
        }
    }
    #[inline]
    fn write_u64(&mut self, v: u64) {
        self.0 = (self.0.rotate_left(5) ^ v).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
    fn write_i16(&mut self, v: i16) {
        self.write_u64(v as u16 as u64);
    }
    fn write_i32(&mut self, v: i32) {
        self.write_u64(v as u32 as u64);
    }
    fn write_usize(&mut self, v: usize) {
        self.write_u64(v as u64);
    }
}

type FxMap<K, V> = HashMap<K, V, BuildHasherDefault<FxHasher>>;

/// Products with more intermediate terms than this accumulate in a hash map.
const HASH_MUL_THRESHOLD: usize = 1 << 16;

/// A Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted in decreasing canonical order with distinct
/// exponent vectors and nonzero coefficients; the zero polynomial has no
/// terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ctx: VariableContext,
    terms: Vec<Term>,
}

impl LaurentPoly {
    pub fn zero(ctx: VariableContext) -> Self {
        LaurentPoly { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: VariableContext) -> Self {
        Self::constant(ctx, Int::ONE)
    }

    pub fn constant(ctx: VariableContext, c: impl Into<Int>) -> Self {
        Self::monomial(ctx, c, Exps::ZERO)
    }

    pub fn monomial(ctx: VariableContext, c: impl Into<Int>, exps: Exps) -> Self {
        let coeff = c.into();
        if coeff.is_zero() {
            return Self::zero(ctx);
        }
        LaurentPoly { ctx, terms: vec![Term { exps, coeff }] }
    }

    pub fn var(ctx: VariableContext, v: Var) -> Self {
        assert!(ctx.contains(v), "{v:?} not in context");
        Self::monomial(ctx, 1, Exps::unit(ctx.slot(v), 1))
    }

    /// Shorthand for `t_i`.
    pub fn t(ctx: VariableContext, i: usize) -> Self {
        Self::var(ctx, Var::T(i))
    }

    pub fn var_pow(ctx: VariableContext, v: Var, k: i16) -> Self {
        assert!(ctx.contains(v), "{v:?} not in context");
        Self::monomial(ctx, 1, Exps::unit(ctx.slot(v), k))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ctx: VariableContext, terms: impl IntoIterator<Item = (Exps, Int)>) -> Self {
        let mut v: Vec<Term> = terms
            .into_iter()
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        v.sort_unstable_by_key(|t| std::cmp::Reverse(t.exps));
        LaurentPoly { ctx, terms: merge_sorted_duplicates(v) }
    }

    pub fn ctx(&self) -> VariableContext {
        self.ctx
    }

    /// Reinterprets the polynomial in another context with the same slots.
    pub fn with_ctx(mut self, ctx: VariableContext) -> Result<Self> {
        for t in &self.terms {
            for s in 0..SLOTS {
                if t.exps.get(s) != 0 && (s > ctx.n + 1 || !ctx.contains(ctx.var_of_slot(s))) {
                    return Err(Error::ContextMismatch);
                }
            }
        }
        self.ctx = ctx;
        Ok(self)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exps == Exps::ZERO && self.terms[0].coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].exps == Exps::ZERO)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [t] if t.exps == Exps::ZERO => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &Exps) -> Int {
        self.terms
            .binary_search_by(|t| exps.cmp(&t.exps))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or(Int::ZERO)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.exps.is_nonnegative())
    }

    /// Largest total degree among terms.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.exps.degree())
    }

    pub fn min_total_degree(&self) -> Option<i32> {
        self.terms.iter().map(|t| t.exps.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.exps.degree() == t.exps.degree()),
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<i16> {
        let s = self.ctx.slot(v);
        self.terms.iter().map(|t| t.exps.get(s)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<i16> {
        let s = self.ctx.slot(v);
        self.terms.iter().map(|t| t.exps.get(s)).min()
    }

    pub(crate) fn slot_degree(&self, slot: usize) -> Option<i16> {
        self.terms.iter().map(|t| t.exps.get(slot)).max()
    }

    pub(crate) fn slot_min_degree(&self, slot: usize) -> Option<i16> {
        self.terms.iter().map(|t| t.exps.get(slot)).min()
    }

    pub fn involves(&self, v: Var) -> bool {
        let s = self.ctx.slot(v);
        self.terms.iter().any(|t| t.exps.get(s) != 0)
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn monomial_content(&self) -> Exps {
        let mut it = self.terms.iter();
        match it.next() {
            None => Exps::ZERO,
            Some(first) => it.fold(first.exps, |acc, t| acc.componentwise_min(&t.exps)),
        }
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for t in &self.terms {
            g = g.gcd(&t.coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { exps: t.exps, coeff: -&t.coeff })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { exps: t.exps, coeff: &t.coeff * c })
                .collect(),
        }
    }

    /// Multiplies by `x^shift`; the term order is preserved.
    pub fn shift(&self, shift: &Exps) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { exps: t.exps.add(shift), coeff: t.coeff.clone() })
                .collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar(&self, c: &Int) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                exps: t.exps,
                coeff: t.coeff.exact_div(c).ok_or(Error::NotDivisible)?,
            });
        }
        Ok(LaurentPoly { ctx: self.ctx, terms })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        Ok(LaurentPoly { ctx: self.ctx, terms: merge2(&self.terms, &other.terms, false) })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        Ok(LaurentPoly { ctx: self.ctx, terms: merge2(&self.terms, &other.terms, true) })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check(&other.ctx)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let ctx = self.ctx;
        if self.is_zero() || other.is_zero() {
            return Self::zero(ctx);
        }
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let s = &small.terms[0];
            let terms = big
                .terms
                .iter()
                .map(|b| Term { exps: b.exps.add(&s.exps), coeff: &b.coeff * &s.coeff })
                .collect();
            return LaurentPoly { ctx, terms };
        }
        if big.len().saturating_mul(small.len()) > HASH_MUL_THRESHOLD {
            let mut acc: FxMap<Exps, Int> = FxMap::default();
            for s in &small.terms {
                for b in &big.terms {
                    let p = &b.coeff * &s.coeff;
                    acc.entry(b.exps.add(&s.exps))
                        .and_modify(|c| *c += &p)
                        .or_insert(p);
                }
            }
            let mut terms: Vec<Term> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exps, coeff)| Term { exps, coeff })
                .collect();
            terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.exps));
            return LaurentPoly { ctx, terms };
        }
        // The monomial order is multiplicative, so every row is already sorted.
        let mut runs: Vec<Vec<Term>> = small
            .terms
            .iter()
            .map(|s| {
                big.terms
                    .iter()
                    .map(|b| Term { exps: b.exps.add(&s.exps), coeff: &b.coeff * &s.coeff })
                    .collect()
            })
            .collect();
        while runs.len() > 1 {
            let mut next = Vec::with_capacity(runs.len().div_ceil(2));
            let mut it = runs.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(merge2(&a, &b, false)),
                    None => next.push(a),
                }
            }
            runs = next;
        }
        LaurentPoly { ctx, terms: runs.pop().unwrap_or_default() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn product<'a>(ctx: VariableContext, factors: impl IntoIterator<Item = &'a LaurentPoly>) -> Result<Self> {
        let mut acc = Self::one(ctx);
        for f in factors {
            acc = acc.checked_mul(f)?;
        }
        Ok(acc)
    }

    /// Exact quotient in the Laurent polynomial ring.
    ///
    /// Returns [`Error::NotDivisible`] when no Laurent polynomial `q` with
    /// `self = q * divisor` exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.ctx.check(&divisor.ctx)?;
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        if divisor.is_monomial() {
            let d = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.len());
            for t in &self.terms {
                terms.push(Term {
                    exps: t.exps.sub(&d.exps),
                    coeff: t.coeff.exact_div(&d.coeff).ok_or(Error::NotDivisible)?,
                });
            }
            return Ok(LaurentPoly { ctx: self.ctx, terms });
        }
        let mb = divisor.monomial_content();
        let ma = self.monomial_content();
        let b0 = divisor.shift(&Exps::ZERO.sub(&mb));
        let a0 = self.shift(&Exps::ZERO.sub(&ma));
        let q0 = poly_divide(&a0, &b0)?;
        Ok(q0.shift(&ma.sub(&mb)))
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_component(&self, d: i32) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self.terms.iter().filter(|t| t.exps.degree() == d).cloned().collect(),
        }
    }

    /// Applies `t_i -> t_{sigma(i)}` where `sigma` is given in one-line
    /// notation (1-based) on the `t`-variables.
    pub fn act_permutation(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.ctx.n {
            return Err(Error::SizeMismatch { expected: self.ctx.n, found: sigma.len() });
        }
        let terms = self.terms.iter().map(|t| {
            let mut e = *t.exps.slots();
            for (i, &s) in sigma.iter().enumerate() {
                e[s] = t.exps.get(i + 1);
            }
            (Exps::from_slots(e), t.coeff.clone())
        });
        Ok(Self::from_terms(self.ctx, terms))
    }

    /// Exchanges `t_i` and `t_{i+1}`.
    pub fn swap(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.ctx.n, "s_{i} out of range");
        let terms = self.terms.iter().map(|t| {
            let mut e = *t.exps.slots();
            e.swap(i, i + 1);
            (Exps::from_slots(e), t.coeff.clone())
        });
        Self::from_terms(self.ctx, terms)
    }

    /// Replaces variables by Laurent monomials `c * x^a`; terms whose image
    /// involves `0^k` with `k < 0` produce [`Error::DenominatorVanishes`].
    pub fn substitute_monomials(
        &self,
        target: VariableContext,
        image: &dyn Fn(Var) -> (Int, Exps),
    ) -> Result<Self> {
        let images: Vec<Option<(Int, Exps)>> = (0..=self.ctx.n + 1)
            .map(|s| {
                let v = self.ctx.var_of_slot(s);
                self.terms.iter().any(|t| t.exps.get(s) != 0).then(|| image(v))
            })
            .collect();
        let mut out = Vec::with_capacity(self.len());
        'terms: for t in &self.terms {
            let mut coeff = t.coeff.clone();
            let mut exps = Exps::ZERO;
            for (s, img) in images.iter().enumerate() {
                let k = t.exps.get(s);
                if k == 0 {
                    continue;
                }
                let (c, a) = img.as_ref().expect("image computed for used slot");
                if c.is_zero() {
                    if k < 0 {
                        return Err(Error::DenominatorVanishes);
                    }
                    continue 'terms;
                }
                if k < 0 {
                    if !c.is_unit() {
                        return Err(Error::NotDivisible);
                    }
                    if (-k) % 2 == 1 {
                        coeff = &coeff * c;
                    }
                } else {
                    coeff = &coeff * &c.pow(k as u32);
                }
                exps = exps.add(&a.scale(k));
            }
            out.push((exps, coeff));
        }
        Ok(Self::from_terms(target, out))
    }

    /// Splits into coefficients with respect to one slot.
    pub(crate) fn coefficients_in(&self, slot: usize) -> BTreeMap<i16, LaurentPoly> {
        let mut map: BTreeMap<i16, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            let k = t.exps.get(slot);
            map.entry(k).or_default().push(Term { exps: t.exps.with(slot, 0), coeff: t.coeff.clone() });
        }
        map.into_iter()
            .map(|(k, terms)| (k, LaurentPoly { ctx: self.ctx, terms }))
            .collect()
    }

    /// Evaluates modulo the prime [`MOD_P`]; `None` if a negative power of a
    /// zero value is required.
    pub fn eval_mod(&self, point: &[u64; SLOTS]) -> Option<u64> {
        let mut acc = 0u64;
        for t in &self.terms {
            let mut v = t.coeff.rem_u64(MOD_P);
            for (s, &p) in point.iter().enumerate() {
                let k = t.exps.get(s);
                if k > 0 {
                    v = mulmod(v, powmod(p, k as u64));
                } else if k < 0 {
                    if p == 0 {
                        return None;
                    }
                    v = mulmod(v, powmod(invmod(p), (-k) as u64));
                }
            }
            acc = addmod(acc, v);
        }
        Some(acc)
    }
}

/// Mersenne prime used for modular fingerprints.
pub const MOD_P: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p as u64) & MOD_P;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= MOD_P {
        s - MOD_P
    } else {
        s
    }
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD_P {
        s - MOD_P
    } else {
        s
    }
}

pub(crate) fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MOD_P - b
    }
}

pub(crate) fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64) -> u64 {
    powmod(a, MOD_P - 2)
}

/// Polynomial long division; `b` must have no monomial content and `a`
/// must be a polynomial.
fn poly_divide(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let lead = &b.terms[0];
    if !a.terms[0].exps.dominates(&lead.exps) {
        return Err(Error::NotDivisible);
    }
    let rest = &b.terms[1..];
    let mut rem: BTreeMap<Exps, Int> = a.terms.iter().map(|t| (t.exps, t.coeff.clone())).collect();
    let mut quot = Vec::new();
    while let Some((e, c)) = rem.pop_last() {
        if !e.dominates(&lead.exps) {
            return Err(Error::NotDivisible);
        }
        let qc = c.exact_div(&lead.coeff).ok_or(Error::NotDivisible)?;
        let qe = e.sub(&lead.exps);
        for t in rest {
            let key = qe.add(&t.exps);
            let delta = &qc * &t.coeff;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= &delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
            }
        }
        quot.push(Term { exps: qe, coeff: qc });
    }
    Ok(LaurentPoly { ctx: a.ctx, terms: quot })
}

fn merge_sorted_duplicates(v: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(last) if last.exps == t.exps => last.coeff += &t.coeff,
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if out.last().is_some_and(|t| t.coeff.is_zero()) {
        out.pop();
    }
    out
}

fn merge2(a: &[Term], b: &[Term], negate_b: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].exps.cmp(&b[j].exps) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].coeff } else { b[j].coeff.clone() };
                out.push(Term { exps: b[j].exps, coeff: c });
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].coeff - &b[j].coeff } else { &a[i].coeff + &b[j].coeff };
                if !c.is_zero() {
                    out.push(Term { exps: a[i].exps, coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.coeff } else { t.coeff.clone() };
        out.push(Term { exps: t.exps, coeff: c });
    }
    out
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares term sequences; used only to sort factor lists deterministically.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let c = b.exps.cmp(&a.exps).then_with(|| a.coeff.cmp(&b.coeff));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("polynomial contexts must match")
            }
        }
        impl std::ops::$tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$checked(&rhs).expect("polynomial contexts must match")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> VariableContext {
        VariableContext::new(3, true, false).unwrap()
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let c = ctx3();
        let p = LaurentPoly::t(c, 3) + LaurentPoly::var(c, Var::U) + LaurentPoly::t(c, 1).pow(2)
            + LaurentPoly::one(c);
        let order: Vec<i32> = p.terms().iter().map(|t| t.exps.degree()).collect();
        assert_eq!(order, vec![2, 1, 1, 0]);
        assert_eq!(p.terms()[1].exps.get(0), 1, "u sorts before t-variables");
    }

    #[test]
    fn exact_division_examples() {
        let c = ctx3();
        let (t1, t2, t3) = (LaurentPoly::t(c, 1), LaurentPoly::t(c, 2), LaurentPoly::t(c, 3));
        let u = LaurentPoly::var(c, Var::U);
        let a = &t1 * &t1 - &t2 * &t2;
        assert_eq!(a.exact_div(&(&t1 - &t2)).unwrap(), &t1 + &t2);
        assert_eq!((&t1 - &t2).exact_div(&(&t1 - &t3)), Err(Error::NotDivisible));
        let f = &(&u + &t1) - &t2;
        let g = &(&u + &t1) - &t3;
        assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn laurent_division_shifts_monomials() {
        let c = ctx3();
        let t1 = LaurentPoly::t(c, 1);
        let inv = LaurentPoly::var_pow(c, Var::T(2), -1);
        let p = &(&t1 - &LaurentPoly::t(c, 2)) * &inv;
        assert_eq!(p.exact_div(&(&t1 - &LaurentPoly::t(c, 2))).unwrap(), inv);
    }

    #[test]
    fn homogeneous_components() {
        let c = ctx3();
        let (t1, t2) = (LaurentPoly::t(c, 1), LaurentPoly::t(c, 2));
        let u = LaurentPoly::var(c, Var::U);
        let p = LaurentPoly::one(c) + t1.clone() + &t1 * &t2;
        assert_eq!(p.homogeneous_component(1), t1);
        assert!(LaurentPoly::zero(c).homogeneous_component(3).is_zero());
        let q = &(&(&u + &t1) - &t2) * &(LaurentPoly::one(c) + u.clone());
        let expected = &(&u * &u + &u * &t1) - &(&u * &t2);
        assert_eq!(q.homogeneous_component(2), expected);
    }

    #[test]
    fn large_products_agree_across_strategies() {
        let c = VariableContext::new(5, true, true).unwrap();
        let mut p = LaurentPoly::one(c);
        for i in 1..=5 {
            p = &p * &(LaurentPoly::t(c, i) + LaurentPoly::var(c, Var::U) + LaurentPoly::var(c, Var::Y));
        }
        let sq_hash = &p * &p;
        let sq_pow = p.pow(2);
        assert_eq!(sq_hash, sq_pow);
        assert_eq!(sq_hash.exact_div(&p).unwrap(), p);
    }
}
