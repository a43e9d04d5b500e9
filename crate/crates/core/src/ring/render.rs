//! Text and LaTeX rendering of polynomials and rational functions.

use super::poly::{LaurentPoly, Term, Var, VariableContext};
use super::ratfunc::RatFunc;

/// How the `t`-variables are named when printing or parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Naming {
    /// `u`, `t1..tn`, `y`.
    Standard,
    /// Block convention on `2n` variables: `t1..tn` print as `x1..xn` and
    /// `t(n+j)` as `yj`.
    Schubert { n: usize },
    /// Weight-function convention: `t1..tn` print as `z1..zn` and `t(n+j)`
    /// as `gj` (the second group of variables, gamma).
    Weight { n: usize },
    /// Virtual Chern classes: `tk` prints as `ck`.
    Chern,
}

impl Naming {
    /// Plain-text name of a variable.
    pub fn name(&self, v: Var) -> String {
        match (self, v) {
            (_, Var::U) => "u".into(),
            (_, Var::Y) => "y".into(),
            (Naming::Standard, Var::T(i)) => format!("t{i}"),
            (Naming::Chern, Var::T(i)) => format!("c{i}"),
            (Naming::Schubert { n }, Var::T(i)) => {
                if i <= *n {
                    format!("x{i}")
                } else {
                    format!("y{}", i - n)
                }
            }
            (Naming::Weight { n }, Var::T(i)) => {
                if i <= *n {
                    format!("z{i}")
                } else {
                    format!("g{}", i - n)
                }
            }
        }
    }

    fn latex_name(&self, v: Var) -> String {
        let plain = self.name(v);
        match plain.find(|c: char| c.is_ascii_digit()) {
            Some(p) => {
                let (head, idx) = plain.split_at(p);
                let head = if head == "g" { "\\gamma" } else { head };
                format!("{head}_{{{idx}}}")
            }
            None => plain,
        }
    }

    /// Resolves a variable name in the given context.
    pub fn lookup(&self, ctx: &VariableContext, ident: &str) -> Option<Var> {
        if ident == "u" {
            return ctx.has_u.then_some(Var::U);
        }
        if ident == "y" {
            return ctx.has_y.then_some(Var::Y);
        }
        let p = ident.find(|c: char| c.is_ascii_digit())?;
        let (head, idx) = ident.split_at(p);
        let idx: usize = idx.parse().ok()?;
        if idx == 0 {
            return None;
        }
        let i = match (self, head) {
            (Naming::Standard, "t") | (Naming::Chern, "c") => idx,
            (Naming::Schubert { n }, "x") | (Naming::Weight { n }, "z") if idx <= *n => idx,
            (Naming::Schubert { n }, "y") | (Naming::Weight { n }, "g") => n + idx,
            _ => return None,
        };
        (i <= ctx.n).then_some(Var::T(i))
    }

    /// Renders a Laurent polynomial in canonical term order.
    pub fn poly(&self, p: &LaurentPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let ctx = p.ctx();
        let mut out = String::new();
        for (k, t) in p.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&self.term_text(&ctx, t));
        }
        out
    }

    fn term_text(&self, ctx: &VariableContext, t: &Term) -> String {
        let c = t.coeff.abs();
        let mut parts = Vec::new();
        for s in ctx.slots() {
            let e = t.exps.get(s);
            if e == 0 {
                continue;
            }
            let name = self.name(ctx.var_of_slot(s));
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if parts.is_empty() {
            return c.to_string();
        }
        if !c.is_one() {
            parts.insert(0, c.to_string());
        }
        parts.join("*")
    }

    pub fn ratfunc(&self, r: &RatFunc) -> String {
        if r.is_polynomial() {
            return self.poly(r.numerator());
        }
        let mut den: Vec<String> = Vec::new();
        if !r.denominator_scalar().is_one() {
            den.push(r.denominator_scalar().to_string());
        }
        for (f, e) in r.denominator_factors() {
            let base = format!("({})", self.poly(f));
            den.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        format!("({})/({})", self.poly(r.numerator()), den.join("*"))
    }

    pub fn poly_latex(&self, p: &LaurentPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let ctx = p.ctx();
        let mut out = String::new();
        for (k, t) in p.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let c = t.coeff.abs();
            let mut parts = Vec::new();
            for s in ctx.slots() {
                let e = t.exps.get(s);
                if e == 0 {
                    continue;
                }
                let name = self.latex_name(ctx.var_of_slot(s));
                parts.push(if e == 1 { name } else { format!("{name}^{{{e}}}") });
            }
            if parts.is_empty() || !c.is_one() {
                parts.insert(0, c.to_string());
            }
            out.push_str(&parts.join(" "));
        }
        out
    }

    pub fn ratfunc_latex(&self, r: &RatFunc) -> String {
        if r.is_polynomial() {
            return self.poly_latex(r.numerator());
        }
        let mut den = String::new();
        if !r.denominator_scalar().is_one() {
            den.push_str(&r.denominator_scalar().to_string());
        }
        for (f, e) in r.denominator_factors() {
            den.push_str(&format!("\\left({}\\right)", self.poly_latex(f)));
            if e != 1 {
                den.push_str(&format!("^{{{e}}}"));
            }
        }
        format!("\\frac{{{}}}{{{}}}", self.poly_latex(r.numerator()), den)
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&Naming::Standard.poly(self))
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&Naming::Standard.poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Int;

    #[test]
    fn text_uses_explicit_signs_and_negative_exponents() {
        let c = VariableContext::new(2, true, false).unwrap();
        let p = &LaurentPoly::var_pow(c, Var::T(1), -1) - &LaurentPoly::t(c, 2).scale(&Int::from(3));
        assert_eq!(Naming::Standard.poly(&p), "-3*t2 + t1^-1");
        assert_eq!(Naming::Standard.poly_latex(&p), "-3 t_{2} + t_{1}^{-1}");
    }

    #[test]
    fn block_names() {
        let c = VariableContext::plain(4);
        let p = &LaurentPoly::t(c, 1) - &LaurentPoly::t(c, 3);
        assert_eq!(Naming::Schubert { n: 2 }.poly(&p), "x1 - y1");
        assert_eq!(Naming::Weight { n: 2 }.poly_latex(&p), "z_{1} - \\gamma_{1}");
        assert_eq!(Naming::Schubert { n: 2 }.lookup(&c, "y2"), Some(Var::T(4)));
    }
}
