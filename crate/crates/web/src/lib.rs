//! Browser bindings: orbit tables with arc diagrams, class computation and
//! weight functions. Every entry point returns a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use nilorbit::classes::{compute_class, Kind};
use nilorbit::combin::{enumerate_involutions, Involution, Permutation};
use nilorbit::operators::{Theory, TheoryContext, UMode};
use nilorbit::ring::Naming;
use nilorbit::weightfn;

/// Largest `n` the page offers; classes beyond it take too long in a tab.
pub const MAX_N: usize = 7;

#[derive(Serialize)]
pub struct Orbit {
    pub name: String,
    pub pairs: Vec<(usize, usize)>,
    pub rank: usize,
    pub dim: usize,
    pub codim: usize,
    pub pi_w: Vec<usize>,
    pub word: Vec<usize>,
}

#[derive(Serialize)]
pub struct ClassOutput {
    pub text: String,
    pub latex: String,
    pub terms: usize,
    pub word: Vec<usize>,
    pub dim: usize,
    pub codim: usize,
}

#[derive(Serialize)]
pub struct WeightOutput {
    pub text: String,
    pub latex: String,
    pub involution: String,
}

fn check_n(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_N {
        Err(format!("n must be between 1 and {MAX_N}"))
    } else {
        Ok(())
    }
}

/// All orbits of `N_n` with the data needed to draw their arc diagrams.
pub fn orbits(n: usize) -> Result<Vec<Orbit>, String> {
    check_n(n)?;
    Ok(enumerate_involutions(n)
        .iter()
        .map(|w| {
            let pi = w.pi_w();
            Orbit {
                name: w.to_string(),
                pairs: w.pairs().to_vec(),
                rank: w.rank(),
                dim: w.orbit_dim(),
                codim: w.codim(),
                pi_w: pi.one_line().to_vec(),
                word: pi.reduced_word().letters().to_vec(),
            }
        })
        .collect())
}

/// `theory` is `H` or `K`, `kind` is `fund`, `csm` or `mc`, `u` is `keep`,
/// `zero` or `one`.
pub fn class(n: usize, w: &str, theory: &str, kind: &str, u: &str) -> Result<ClassOutput, String> {
    check_n(n)?;
    let w = Involution::parse(n, w).map_err(|e| e.to_string())?;
    let theory = match theory {
        "H" | "h" => Theory::Cohomology,
        "K" | "k" => Theory::KTheory,
        other => return Err(format!("unknown theory '{other}'")),
    };
    let kind = match kind {
        "fund" => Kind::Fundamental,
        "csm" => Kind::Csm,
        "mc" => Kind::Mc,
        other => return Err(format!("unknown kind '{other}'")),
    };
    let u_mode = match u {
        "keep" => UMode::Keep,
        "zero" => UMode::Zero,
        "one" => UMode::One,
        other => return Err(format!("unknown u mode '{other}'")),
    };
    let tc = TheoryContext::new(theory, u_mode, n).map_err(|e| e.to_string())?;
    let r = compute_class(&w, &tc, kind).map_err(|e| e.to_string())?;
    Ok(ClassOutput {
        text: Naming::Standard.poly(&r.value),
        latex: Naming::Standard.poly_latex(&r.value),
        terms: r.value.len(),
        word: r.word.letters().to_vec(),
        dim: r.dim(),
        codim: r.codim(),
    })
}

/// `W̃_τ` for `τ` in one-line notation, `n <= 4`.
pub fn weight(tau: &str) -> Result<WeightOutput, String> {
    let tau: Permutation = tau.parse().map_err(|e: nilorbit::Error| e.to_string())?;
    if tau.n() > 4 {
        return Err("weight functions are offered for n <= 4".into());
    }
    let w = weightfn::weight_function(&tau).map_err(|e| e.to_string())?;
    Ok(WeightOutput {
        text: w.to_string(),
        latex: w.naming().ratfunc_latex(&w.value),
        involution: weightfn::tau_to_involution(&tau).to_string(),
    })
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let value = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = orbits)]
pub fn orbits_js(n: usize) -> Result<String, JsError> {
    to_js(orbits(n))
}

#[wasm_bindgen(js_name = computeClass)]
pub fn class_js(n: usize, w: &str, theory: &str, kind: &str, u: &str) -> Result<String, JsError> {
    to_js(class(n, w, theory, kind, u))
}

#[wasm_bindgen(js_name = weightFunction)]
pub fn weight_js(tau: &str) -> Result<String, JsError> {
    to_js(weight(tau))
}
