//! Divided-difference type operators on rational functions in `t1..tn`.
//!
//! `u` and `y` are scalars for the symmetric group, which permutes only the
//! `t`-variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combin::ReducedWord;
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RatFunc, Var, VariableContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    #[serde(rename = "H")]
    Cohomology,
    #[serde(rename = "K")]
    KTheory,
}

/// How the scaling variable `u` is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UMode {
    /// `u` is a genuine variable.
    Keep,
    /// `u = 0`; cohomology only.
    Zero,
    /// `u = 1`; K-theory only.
    One,
}

/// Theory, `u`-policy and the variables of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TheoryContext {
    pub theory: Theory,
    pub u_mode: UMode,
    pub vars: VariableContext,
}

impl TheoryContext {
    pub fn new(theory: Theory, u_mode: UMode, n: usize) -> Result<Self> {
        match (theory, u_mode) {
            (Theory::Cohomology, UMode::One) => {
                return Err(Error::InvalidTheory("u = 1 is only meaningful in K-theory".into()))
            }
            (Theory::KTheory, UMode::Zero) => {
                return Err(Error::InvalidTheory("u = 0 is only meaningful in cohomology".into()))
            }
            _ => {}
        }
        let vars = VariableContext::new(n, u_mode == UMode::Keep, theory == Theory::KTheory)?;
        Ok(TheoryContext { theory, u_mode, vars })
    }

    pub fn cohomology(n: usize) -> Result<Self> {
        Self::new(Theory::Cohomology, UMode::Keep, n)
    }

    pub fn k_theory(n: usize) -> Result<Self> {
        Self::new(Theory::KTheory, UMode::Keep, n)
    }

    pub fn n(&self) -> usize {
        self.vars.n
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Cohomology => "H",
            Theory::KTheory => "K",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `β_i(x) = (s_i x - x) / (t_i - t_{i+1})`.
    BetaH,
    /// `β_i^K(x) = (t_{i+1} x - t_i s_i x) / (t_{i+1} - t_i)`.
    BetaK,
    /// `A_i(x) = x / (t_{i+1} - t_i) + (1 + t_i - t_{i+1}) / (t_i - t_{i+1}) s_i x`.
    AH,
    /// `A_i^K(x) = (1+y) t_i / (t_{i+1} - t_i) x + (t_i + y t_{i+1}) / (t_i - t_{i+1}) s_i x`.
    AK,
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::BetaH => "beta_H",
            OperatorKind::BetaK => "beta_K",
            OperatorKind::AH => "A_H",
            OperatorKind::AK => "A_K",
        })
    }
}

fn check_index(ctx: &VariableContext, i: usize) -> Result<()> {
    if i == 0 || i >= ctx.n {
        Err(Error::IndexOutOfRange { index: i, n: ctx.n })
    } else {
        Ok(())
    }
}

/// `(p x + q s_i x) / (t_i - t_{i+1})`.
fn combine(x: &RatFunc, i: usize, p: &LaurentPoly, q: &LaurentPoly) -> Result<RatFunc> {
    let ctx = x.ctx();
    let sx = x.swap(i);
    let num = x.mul_poly(p)?.checked_add(&sx.mul_poly(q)?)?;
    num.div_poly(&(&LaurentPoly::t(ctx, i) - &LaurentPoly::t(ctx, i + 1)), 1)
}

pub fn beta_h(x: &RatFunc, i: usize) -> Result<RatFunc> {
    let ctx = x.ctx();
    check_index(&ctx, i)?;
    combine(x, i, &LaurentPoly::constant(ctx, -1), &LaurentPoly::one(ctx))
}

pub fn beta_k(x: &RatFunc, i: usize) -> Result<RatFunc> {
    let ctx = x.ctx();
    check_index(&ctx, i)?;
    // (t_{i+1} x - t_i s x) / (t_{i+1} - t_i) = (-t_{i+1} x + t_i s x) / (t_i - t_{i+1})
    combine(x, i, &LaurentPoly::t(ctx, i + 1).neg(), &LaurentPoly::t(ctx, i))
}

pub fn a_h(x: &RatFunc, i: usize) -> Result<RatFunc> {
    let ctx = x.ctx();
    check_index(&ctx, i)?;
    let q = &(&LaurentPoly::one(ctx) + &LaurentPoly::t(ctx, i)) - &LaurentPoly::t(ctx, i + 1);
    combine(x, i, &LaurentPoly::constant(ctx, -1), &q)
}

pub fn a_k(x: &RatFunc, i: usize) -> Result<RatFunc> {
    let ctx = x.ctx();
    check_index(&ctx, i)?;
    if !ctx.has_y {
        return Err(Error::InvalidTheory("the motivic operator needs the variable y".into()));
    }
    let y = LaurentPoly::var(ctx, Var::Y);
    let one_plus_y = &LaurentPoly::one(ctx) + &y;
    let p = (&one_plus_y * &LaurentPoly::t(ctx, i)).neg();
    let q = &LaurentPoly::t(ctx, i) + &(&y * &LaurentPoly::t(ctx, i + 1));
    combine(x, i, &p, &q)
}

impl OperatorKind {
    pub fn apply(self, x: &RatFunc, i: usize) -> Result<RatFunc> {
        match self {
            OperatorKind::BetaH => beta_h(x, i),
            OperatorKind::BetaK => beta_k(x, i),
            OperatorKind::AH => a_h(x, i),
            OperatorKind::AK => a_k(x, i),
        }
    }

    /// `op_{a1}(op_{a2}(... op_{al}(x)))`: the first letter is outermost.
    pub fn apply_word(self, word: &ReducedWord, x: &RatFunc) -> Result<RatFunc> {
        let mut acc = x.clone();
        for &a in word.letters().iter().rev() {
            acc = self.apply(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn all() -> [OperatorKind; 4] {
        [OperatorKind::BetaH, OperatorKind::BetaK, OperatorKind::AH, OperatorKind::AK]
    }
}

/// `op_{a1}(... op_{al}(x))` for a word given as letters.
pub fn apply_word(word: &ReducedWord, x: &RatFunc, op: OperatorKind) -> Result<RatFunc> {
    op.apply_word(word, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_ratfunc, Naming};

    fn ctx() -> VariableContext {
        VariableContext::new(4, true, true).unwrap()
    }

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s, ctx(), &Naming::Standard).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(beta_h(&r("t1"), 1).unwrap(), r("-1"));
        assert!(beta_h(&r("7"), 2).unwrap().is_zero());
        assert_eq!(beta_k(&r("1"), 3).unwrap(), r("1"));
        assert_eq!(beta_k(&r("t2/t3"), 2).unwrap(), r("-1"));
        assert_eq!(a_h(&r("1"), 1).unwrap(), r("1"));
        assert_eq!(a_h(&r("t2"), 2).unwrap(), r("-1 + t3"));
        assert_eq!(a_k(&r("1"), 1).unwrap(), r("-y"));
        assert!(matches!(beta_h(&r("1"), 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn printed_forms_agree() {
        let x = r("(u + t1^2 - y*t3) / ((u + t1 - t2)*(t2 - t4 + 2))");
        for i in 1..4 {
            let alt = &beta_h(&x, i).unwrap() + &x.swap(i);
            assert_eq!(a_h(&x, i).unwrap(), alt);
            let c = ctx();
            let ti = RatFunc::t(c, i);
            let tj = RatFunc::t(c, i + 1);
            let y = RatFunc::var(c, Var::Y);
            let one = RatFunc::one(c);
            let a = &ti / &tj;
            let weight = &one + &(&y * &a);
            let alt_k = &beta_k(&(&weight * &x), i).unwrap() - &x;
            assert_eq!(a_k(&x, i).unwrap(), alt_k);
        }
    }

    #[test]
    fn extra_denominator_breaks_the_isobaric_form() {
        let c = ctx();
        let one = RatFunc::one(c);
        let a = &RatFunc::t(c, 1) / &RatFunc::t(c, 2);
        let y = RatFunc::var(c, Var::Y);
        let weight = &(&one + &(&y * &a)) / &(&one - &a);
        let with_extra = &beta_k(&weight, 1).unwrap() - &one;
        assert_ne!(with_extra, a_k(&one, 1).unwrap());
    }
}
