//! Rendering of command results as text, JSON or LaTeX.

use std::io::{self, Write};

use serde::Serialize;

use nilorbit::classes::ClassResult;
use nilorbit::combin::{Involution, Permutation};
use nilorbit::ring::{LaurentPoly, Naming};
use nilorbit::verify::Report;
use nilorbit::weightfn::WeightFunction;

use crate::Format;

#[derive(Serialize)]
struct Row {
    involution: String,
    pairs: Vec<(usize, usize)>,
    rank: usize,
    dim: usize,
    codim: usize,
    arcs: String,
    pi_w: Vec<usize>,
    word: Vec<usize>,
}

impl Row {
    fn new(w: &Involution) -> Row {
        let pi = w.pi_w();
        Row {
            involution: w.to_string(),
            pairs: w.pairs().to_vec(),
            rank: w.rank(),
            dim: w.orbit_dim(),
            codim: w.codim(),
            arcs: w.arc_diagram(),
            pi_w: pi.one_line().to_vec(),
            word: pi.reduced_word().letters().to_vec(),
        }
    }

    fn cells(&self) -> [String; 7] {
        let join = |v: &[usize]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        [
            self.involution.clone(),
            self.rank.to_string(),
            self.dim.to_string(),
            self.codim.to_string(),
            self.arcs.clone(),
            join(&self.pi_w),
            join(&self.word),
        ]
    }
}

const HEADER: [&str; 7] = ["involution", "rank", "dim", "codim", "arcs", "pi_w", "word"];

pub fn list(out: &mut impl Write, orbits: &[Involution], format: Format) -> io::Result<()> {
    let rows: Vec<Row> = orbits.iter().map(Row::new).collect();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("plain data")),
        Format::Latex => {
            writeln!(out, "\\begin{{tabular}}{{lrrrlll}}")?;
            writeln!(out, "{} \\\\ \\hline", HEADER.join(" & "))?;
            for r in &rows {
                let cells = r.cells();
                writeln!(out, "${}$ & {} \\\\", cells[0], cells[1..].join(" & "))?;
            }
            writeln!(out, "\\end{{tabular}}")
        }
        Format::Text => {
            let cells: Vec<[String; 7]> = rows.iter().map(Row::cells).collect();
            let mut widths = HEADER.map(str::len);
            for c in &cells {
                for (w, s) in widths.iter_mut().zip(c) {
                    *w = (*w).max(s.len());
                }
            }
            let line = |out: &mut dyn Write, c: &[&str]| -> io::Result<()> {
                let parts: Vec<String> = c.iter().zip(widths).map(|(s, w)| format!("{s:<w$}")).collect();
                writeln!(out, "{}", parts.join("  ").trim_end())
            };
            line(out, &HEADER)?;
            for c in &cells {
                let refs: Vec<&str> = c.iter().map(String::as_str).collect();
                line(out, &refs)?;
            }
            Ok(())
        }
    }
}

pub fn class(out: &mut impl Write, result: &ClassResult, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", result.render(&Naming::Standard)),
        Format::Json => writeln!(out, "{}", serde_json::to_string(&result.to_json()).expect("plain data")),
        Format::Latex => writeln!(out, "{}", Naming::Standard.poly_latex(&result.value)),
    }
}

#[derive(Serialize)]
struct BlockTerm {
    coeff: String,
    x: Vec<i16>,
    y: Vec<i16>,
}

#[derive(Serialize)]
struct BlockPoly {
    perm: Vec<usize>,
    polynomial: String,
    terms: Vec<BlockTerm>,
}

/// A polynomial in `x_1..x_n, y_1..y_n`.
pub fn block_poly(out: &mut impl Write, perm: &Permutation, p: &LaurentPoly, format: Format) -> io::Result<()> {
    let n = perm.n();
    let naming = Naming::Schubert { n };
    match format {
        Format::Text => writeln!(out, "{}", naming.poly(p)),
        Format::Latex => writeln!(out, "{}", naming.poly_latex(p)),
        Format::Json => {
            let terms = p
                .terms()
                .iter()
                .map(|t| BlockTerm {
                    coeff: t.coeff.to_string(),
                    x: (1..=n).map(|i| t.exps.get(i)).collect(),
                    y: (1..=n).map(|j| t.exps.get(n + j)).collect(),
                })
                .collect();
            let doc = BlockPoly { perm: perm.one_line().to_vec(), polynomial: naming.poly(p), terms };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("plain data"))
        }
    }
}

#[derive(Serialize)]
struct WeightJson {
    tau: Vec<usize>,
    value: String,
    numerator: String,
    denominator: String,
}

pub fn weight(out: &mut impl Write, w: &WeightFunction, format: Format) -> io::Result<()> {
    let naming = w.naming();
    match format {
        Format::Text => writeln!(out, "{w}"),
        Format::Latex => writeln!(out, "{}", naming.ratfunc_latex(&w.value)),
        Format::Json => {
            let doc = WeightJson {
                tau: w.tau.one_line().to_vec(),
                value: w.to_string(),
                numerator: naming.poly(w.value.numerator()),
                denominator: naming.poly(&w.value.denominator()),
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("plain data"))
        }
    }
}

pub fn report(out: &mut impl Write, report: &Report, format: Format) -> io::Result<()> {
    match format {
        Format::Json => write!(out, "{}", report.to_json_lines()),
        _ => writeln!(out, "{report}"),
    }
}
