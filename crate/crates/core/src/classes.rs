//! Fundamental, CSM and motivic Chern classes of orbits, and the
//! fixed-point localization sum used to cross-check them.
//!
//! Torus weights are characters `u^a t^b`, stored as exponent vectors. The
//! coordinate `(i, j)` of the space `N` of strictly upper-triangular
//! matrices has weight `u t_i / t_j`. Euler classes are `e(χ) = a u + Σ b_k
//! t_k` in cohomology and `e(χ) = 1 - χ^{-1}` in K-theory.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combin::{self, conjugate, Involution, Permutation, ReducedWord};
use crate::error::{Error, Result};
use crate::operators::{OperatorKind, Theory, TheoryContext, UMode};
use crate::ring::{Exps, LaurentPoly, Naming, RatFunc, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "fund")]
    Fundamental,
    #[serde(rename = "csm")]
    Csm,
    #[serde(rename = "mc")]
    Mc,
}

impl Kind {
    fn check(self, theory: Theory) -> Result<()> {
        match (self, theory) {
            (Kind::Csm, Theory::KTheory) => Err(Error::WrongKind("CSM classes live in cohomology".into())),
            (Kind::Mc, Theory::Cohomology) => Err(Error::WrongKind("motivic Chern classes live in K-theory".into())),
            _ => Ok(()),
        }
    }

    /// The operator driving the recursion for this kind in this theory.
    pub fn operator(self, theory: Theory) -> OperatorKind {
        match (self, theory) {
            (Kind::Fundamental, Theory::Cohomology) => OperatorKind::BetaH,
            (Kind::Fundamental, Theory::KTheory) => OperatorKind::BetaK,
            (_, Theory::Cohomology) => OperatorKind::AH,
            (_, Theory::KTheory) => OperatorKind::AK,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Fundamental => "fund",
            Kind::Csm => "csm",
            Kind::Mc => "mc",
        })
    }
}

/// The character `u t_i / t_j`.
pub fn coordinate_weight(i: usize, j: usize) -> Exps {
    Exps::ZERO.add(&Exps::unit(0, 1)).add(&Exps::unit(i, 1)).add(&Exps::unit(j, -1))
}

/// The character `t_a / t_b`.
pub fn root_weight(a: usize, b: usize) -> Exps {
    Exps::unit(a, 1).add(&Exps::unit(b, -1))
}

fn drop_u(tc: &TheoryContext, chi: &Exps) -> Exps {
    if tc.vars.has_u {
        *chi
    } else {
        chi.with(0, 0)
    }
}

/// Euler class of the line with character `chi`.
pub fn euler_of_weight(tc: &TheoryContext, chi: &Exps) -> LaurentPoly {
    let ctx = tc.vars;
    let chi = drop_u(tc, chi);
    match tc.theory {
        Theory::Cohomology => LaurentPoly::from_terms(
            ctx,
            (0..=ctx.n).filter(|&s| chi.get(s) != 0).map(|s| (Exps::unit(s, 1), (chi.get(s) as i64).into())),
        ),
        Theory::KTheory => {
            &LaurentPoly::one(ctx) - &LaurentPoly::monomial(ctx, 1, Exps::ZERO.sub(&chi))
        }
    }
}

/// Total Chern class of the line: `1 + e(χ)` in cohomology and
/// `1 + y χ^{-1}` in K-theory.
pub fn chern_of_weight(tc: &TheoryContext, chi: &Exps) -> LaurentPoly {
    let ctx = tc.vars;
    match tc.theory {
        Theory::Cohomology => &LaurentPoly::one(ctx) + &euler_of_weight(tc, chi),
        Theory::KTheory => {
            let inv = Exps::ZERO.sub(&drop_u(tc, chi)).add(&Exps::unit(ctx.n + 1, 1));
            &LaurentPoly::one(ctx) + &LaurentPoly::monomial(ctx, 1, inv)
        }
    }
}

/// Euler classes of the coordinates of `N`, one factor per coordinate.
pub fn euler_factors(tc: &TheoryContext) -> Vec<LaurentPoly> {
    let n = tc.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(euler_of_weight(tc, &coordinate_weight(i, j)));
        }
    }
    out
}

/// `e(N) = ∏_{i<j} e(u t_i / t_j)`, expanded.
pub fn euler_class(tc: &TheoryContext) -> LaurentPoly {
    let mut acc = LaurentPoly::one(tc.vars);
    for f in euler_factors(tc) {
        acc = &acc * &f;
    }
    acc
}

/// Fundamental class of the minimal orbit of rank `m` divided by `e(N)`:
/// the reciprocal Euler class of its support.
pub fn base_fundamental(tc: &TheoryContext, m: usize) -> Result<RatFunc> {
    let n = tc.n();
    if 2 * m > n {
        return Err(Error::RankTooLarge { n, m });
    }
    let factors = combin::minimal_support(n, m)
        .into_iter()
        .map(|(i, j)| (euler_of_weight(tc, &coordinate_weight(i, j)), 1));
    RatFunc::from_factors(LaurentPoly::one(tc.vars), factors)
}

/// CSM (cohomology) or motivic Chern (K-theory) class of the minimal orbit
/// of rank `m` divided by `e(N)`: `c/e` off the anti-diagonal of the
/// support and `c/e - 1` on it.
pub fn base_characteristic(tc: &TheoryContext, m: usize) -> Result<RatFunc> {
    let n = tc.n();
    if 2 * m > n {
        return Err(Error::RankTooLarge { n, m });
    }
    let ctx = tc.vars;
    let mut num = LaurentPoly::one(ctx);
    let mut den = Vec::new();
    for (i, j) in combin::minimal_support(n, m) {
        let chi = coordinate_weight(i, j);
        let e = euler_of_weight(tc, &chi);
        let c = chern_of_weight(tc, &chi);
        let top = if j == n - m + i { &c - &e } else { c };
        num = &num * &top;
        den.push((e, 1));
    }
    RatFunc::from_factors(num, den)
}

/// A computed class together with the data it was computed from.
#[derive(Clone, Debug)]
pub struct ClassResult {
    pub involution: Involution,
    pub theory: Theory,
    pub u_mode: UMode,
    pub kind: Kind,
    pub word: ReducedWord,
    /// The class, a Laurent polynomial.
    pub value: LaurentPoly,
    /// The class divided by `e(N)`.
    pub normalized: RatFunc,
}

impl ClassResult {
    pub fn dim(&self) -> usize {
        self.involution.orbit_dim()
    }

    pub fn codim(&self) -> usize {
        self.involution.codim()
    }

    pub fn to_json(&self) -> ClassJson {
        ClassJson {
            involution: self.involution.pairs().to_vec(),
            n: self.involution.n(),
            dim: self.dim(),
            codim: self.codim(),
            theory: self.theory,
            kind: self.kind,
            u_mode: self.u_mode,
            word: self.word.letters().to_vec(),
            polynomial: poly_json(&self.value),
        }
    }

    pub fn render(&self, naming: &Naming) -> String {
        naming.poly(&self.value)
    }
}

/// JSON form of a class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub involution: Vec<(usize, usize)>,
    pub n: usize,
    pub dim: usize,
    pub codim: usize,
    pub theory: Theory,
    pub kind: Kind,
    pub u_mode: UMode,
    pub word: Vec<usize>,
    pub polynomial: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: ExpsJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpsJson {
    pub u: i32,
    pub t: Vec<i32>,
    pub y: i32,
}

/// Term list of a polynomial in canonical order, coefficients as decimal
/// strings.
pub fn poly_json(p: &LaurentPoly) -> Vec<TermJson> {
    let ctx = p.ctx();
    p.terms()
        .iter()
        .map(|t| TermJson {
            coeff: t.coeff.to_string(),
            exps: ExpsJson {
                u: t.exps.get(0) as i32,
                t: (1..=ctx.n).map(|i| t.exps.get(i) as i32).collect(),
                y: t.exps.get(ctx.n + 1) as i32,
            },
        })
        .collect()
}

/// The class of `O_w` computed along the default reduced word of `π_w`.
pub fn compute_class(w: &Involution, tc: &TheoryContext, kind: Kind) -> Result<ClassResult> {
    compute_class_with_word(w, &w.pi_w().reduced_word(), tc, kind)
}

/// Checks that `word` is a reduced word of a permutation carrying the
/// minimal orbit onto `O_w` with every intermediate step upper-triangular.
pub fn check_word(w: &Involution, word: &ReducedWord) -> Result<Permutation> {
    let (n, m) = (w.n(), w.rank());
    let dim = w.orbit_dim();
    let base = m * (m + 1) / 2;
    if !word.is_reduced(n) || word.len() + base != dim {
        return Err(Error::DimensionMismatch { word: word.len(), base, dim });
    }
    let mut current = combin::minimal_involution(n, m)?.n_matrix();
    for &a in word.letters().iter().rev() {
        current = conjugate(&Permutation::simple(n, a)?, &current)?;
    }
    if current != w.n_matrix() {
        return Err(Error::WordMismatch(format!("{word} does not reach {w}")));
    }
    word.product(n)
}

pub fn compute_class_with_word(
    w: &Involution,
    word: &ReducedWord,
    tc: &TheoryContext,
    kind: Kind,
) -> Result<ClassResult> {
    if w.n() != tc.n() {
        return Err(Error::SizeMismatch { expected: tc.n(), found: w.n() });
    }
    kind.check(tc.theory)?;
    check_word(w, word)?;
    let m = w.rank();
    let base = match kind {
        Kind::Fundamental => base_fundamental(tc, m)?,
        _ => base_characteristic(tc, m)?,
    };
    let normalized = kind.operator(tc.theory).apply_word(word, &base)?;
    let value = normalized.mul_factors_into_laurent(&euler_factors(tc))?;
    Ok(ClassResult {
        involution: w.clone(),
        theory: tc.theory,
        u_mode: tc.u_mode,
        kind,
        word: word.clone(),
        value,
        normalized,
    })
}

/// Lowest-degree part of a CSM class: its homogeneous component of degree
/// `codim(O_w)`.
pub fn csm_lowest_part(result: &ClassResult) -> Result<LaurentPoly> {
    if result.kind != Kind::Csm {
        return Err(Error::WrongKind(format!("expected a CSM class, found {}", result.kind)));
    }
    Ok(result.value.homogeneous_component(result.codim() as i32))
}

/// A torus-fixed point of the twisted Bott–Samelson resolution.
#[derive(Clone, Debug)]
pub struct FixedPoint {
    /// Which letters of the word are selected.
    pub subword: Vec<bool>,
    /// Product of the selected letters in word order.
    pub twist: Permutation,
    /// Tangent weights at the point.
    pub weights: Vec<Exps>,
}

fn swap_weight(chi: &Exps, a: usize) -> Exps {
    let mut e = *chi.slots();
    e.swap(a, a + 1);
    Exps::from_slots(e)
}

/// The `2^l` fixed points of the resolution built from `word` over the
/// minimal orbit of rank `m`, with their tangent weights.
///
/// Tangent weights are built from the innermost letter outwards: choosing
/// the zero section of the `s_a` fibre adds `t_{a+1}/t_a`, choosing the
/// infinity section twists what is inside by `s_a` and adds `t_a/t_{a+1}`.
pub fn fixed_points(word: &ReducedWord, tc: &TheoryContext, m: usize) -> Result<Vec<FixedPoint>> {
    let n = tc.n();
    if 2 * m > n {
        return Err(Error::RankTooLarge { n, m });
    }
    let base: Vec<Exps> = combin::minimal_support(n, m)
        .into_iter()
        .map(|(i, j)| coordinate_weight(i, j))
        .collect();
    let letters = word.letters();
    let l = letters.len();
    let mut out = Vec::with_capacity(1 << l);
    for bits in 0..(1u64 << l) {
        // Bit `l - 1 - k` selects letter `k`, so the first letter is the most
        // significant and the points come out in lexicographic order.
        let subword: Vec<bool> = (0..l).map(|k| bits >> (l - 1 - k) & 1 == 1).collect();
        let mut weights = base.clone();
        for k in (0..l).rev() {
            let a = letters[k];
            if a == 0 || a >= n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            if subword[k] {
                for w in weights.iter_mut() {
                    *w = swap_weight(w, a);
                }
                weights.push(root_weight(a, a + 1));
            } else {
                weights.push(root_weight(a + 1, a));
            }
        }
        let selected: Vec<usize> = (0..l).filter(|&k| subword[k]).map(|k| letters[k]).collect();
        out.push(FixedPoint { subword, twist: Permutation::from_word(n, &selected)?, weights });
    }
    Ok(out)
}

impl FixedPoint {
    /// Reciprocal of the tangent Euler class.
    pub fn contribution(&self, tc: &TheoryContext) -> Result<RatFunc> {
        let factors = self.weights.iter().map(|chi| (euler_of_weight(tc, chi), 1));
        RatFunc::from_factors(LaurentPoly::one(tc.vars), factors)
    }
}

/// Pushforward of `1` from the resolution, restricted to the origin and
/// divided by `e(N)`, as the sum over fixed points of reciprocal tangent
/// Euler classes.
pub fn localization_pushforward(word: &ReducedWord, tc: &TheoryContext, m: usize) -> Result<RatFunc> {
    let terms = fixed_points(word, tc, m)?
        .iter()
        .map(|p| p.contribution(tc))
        .collect::<Result<Vec<_>>>()?;
    balanced_sum(terms, tc)
}

/// Sums pairwise so that intermediate denominators stay small.
fn balanced_sum(mut terms: Vec<RatFunc>, tc: &TheoryContext) -> Result<RatFunc> {
    if terms.is_empty() {
        return Ok(RatFunc::zero(tc.vars));
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.checked_add(&b)?),
                None => next.push(a),
            }
        }
        terms = next;
    }
    Ok(terms.pop().expect("nonempty"))
}

/// `y`-degree of a class.
pub fn y_degree(p: &LaurentPoly) -> Option<i16> {
    p.degree_in(Var::Y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    #[test]
    fn minimal_orbit_base_classes() {
        let tc = TheoryContext::cohomology(3).unwrap();
        let b = base_fundamental(&tc, 1).unwrap();
        assert_eq!(b.denominator(), parse_poly("u + t1 - t3", tc.vars, &Naming::Standard).unwrap());
        assert!(base_fundamental(&tc, 0).unwrap().is_one());
        assert!(matches!(base_fundamental(&tc, 2), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn zero_orbit_is_the_euler_class() {
        let tc = TheoryContext::cohomology(2).unwrap();
        let r = compute_class(&Involution::identity(2), &tc, Kind::Fundamental).unwrap();
        assert_eq!(Naming::Standard.poly(&r.value), "u + t1 - t2");
    }

    #[test]
    fn single_letter_localization() {
        let tc = TheoryContext::cohomology(2).unwrap();
        let word = ReducedWord(vec![1]);
        let loc = localization_pushforward(&word, &tc, 1).unwrap();
        let direct = OperatorKind::BetaH.apply_word(&word, &base_fundamental(&tc, 1).unwrap()).unwrap();
        assert_eq!(loc, direct);
    }
}
