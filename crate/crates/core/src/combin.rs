//! Involutions, permutations, reduced words and the orbit combinatorics.
//!
//! Permutations compose as functions, `(s t)(x) = s(t(x))`, so the word
//! `a1, ..., al` denotes `s_a1 ∘ ... ∘ s_al` and `s_al` acts first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{one_line:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    /// The simple transposition `s_a` of `S_n`.
    pub fn simple(n: usize, a: usize) -> Result<Self> {
        if a == 0 || a >= n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
        let mut p = Self::identity(n);
        p.one_line.swap(a - 1, a);
        Ok(p)
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// Product of simple transpositions, first letter outermost.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &a in word {
            if a == 0 || a >= n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            // p ∘ s_a swaps the values at positions a and a+1.
            p.one_line.swap(a - 1, a);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        permutations(n)
            .into_iter()
            .map(|p| Permutation { one_line: p.into_iter().map(|k| k + 1).collect() })
            .collect()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `self(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(Permutation { one_line: other.one_line.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.one_line;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// Positions `a` with `p(a) > p(a+1)`, i.e. `l(p s_a) < l(p)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&a| self.apply(a) > self.apply(a + 1)).collect()
    }

    /// Indices `a` with `l(s_a p) < l(p)`: the value `a+1` appears before `a`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&a| inv.apply(a) > inv.apply(a + 1)).collect()
    }

    /// A reduced word, obtained by repeatedly peeling the smallest right
    /// descent.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(a) = (1..p.n()).find(|&a| p.apply(a) > p.apply(a + 1)) {
            p.one_line.swap(a - 1, a);
            rev.push(a);
        }
        rev.reverse();
        ReducedWord(rev)
    }

    /// All reduced words, at most `limit` of them, in lexicographic order.
    pub fn reduced_words(&self, limit: usize) -> Vec<ReducedWord> {
        fn go(p: &mut Permutation, suffix: &mut Vec<usize>, out: &mut Vec<ReducedWord>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            let descents = p.right_descents();
            if descents.is_empty() {
                out.push(ReducedWord(suffix.iter().rev().copied().collect()));
                return;
            }
            for a in descents {
                p.one_line.swap(a - 1, a);
                suffix.push(a);
                go(p, suffix, out, limit);
                suffix.pop();
                p.one_line.swap(a - 1, a);
            }
        }
        let mut out = Vec::new();
        go(&mut self.clone(), &mut Vec::new(), &mut out, limit);
        out.sort();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad entry '{x}'"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad entry '{c}'"))))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(values)
    }
}

/// A word in the simple reflections; letter `a` stands for `s_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(n, &self.0)
    }

    pub fn is_reduced(&self, n: usize) -> bool {
        self.product(n).is_ok_and(|p| p.length() == self.len())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ReducedWord::default());
        }
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad letter '{x}'"))))
            .collect::<Result<_>>()
            .map(ReducedWord)
    }
}

/// A strictly upper-triangular 0/1 matrix, stored as its set of ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperMatrix {
    pub n: usize,
    pub entries: BTreeSet<(usize, usize)>,
}

impl UpperMatrix {
    /// Whether the matrix squares to zero: no column index of an entry is
    /// the row index of another.
    pub fn squares_to_zero(&self) -> bool {
        let rows: BTreeSet<usize> = self.entries.iter().map(|&(i, _)| i).collect();
        self.entries.iter().all(|&(_, j)| !rows.contains(&j))
    }
}

/// `M_σ N M_σ^{-1}`: the entry `(i, j)` moves to `(σ(i), σ(j))`.
pub fn conjugate(sigma: &Permutation, m: &UpperMatrix) -> Result<UpperMatrix> {
    if sigma.n() != m.n {
        return Err(Error::SizeMismatch { expected: m.n, found: sigma.n() });
    }
    let mut entries = BTreeSet::new();
    for &(i, j) in &m.entries {
        let (a, b) = (sigma.apply(i), sigma.apply(j));
        if a >= b {
            return Err(Error::NotUpperTriangular);
        }
        entries.insert((a, b));
    }
    Ok(UpperMatrix { n: m.n, entries })
}

/// An involution of `S_n`, written as disjoint transpositions `(i_k, j_k)`
/// with `i_k < j_k` and `i_1 < i_2 < ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution { n, pairs: Vec::new() }
    }

    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for (a, b) in pairs {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || j > n || i == j {
                return Err(Error::Parse(format!("invalid transposition ({a},{b}) for n = {n}")));
            }
            if seen[i] || seen[j] {
                return Err(Error::Parse(format!("transposition ({a},{b}) is not disjoint")));
            }
            seen[i] = true;
            seen[j] = true;
            out.push((i, j));
        }
        out.sort();
        Ok(Involution { n, pairs: out })
    }

    /// Parses `(i,j)(k,l)...` or `id`; whitespace is ignored and the comma
    /// may be dropped when both indices are single digits.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(Self::identity(n));
        }
        let mut pairs = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("expected '(i,j)' in '{s}'")))?;
            let (inner, tail) = body;
            let (a, b) = match inner.split_once(',') {
                Some((a, b)) => (a.to_string(), b.to_string()),
                None if inner.len() == 2 => (inner[..1].to_string(), inner[1..].to_string()),
                None => return Err(Error::Parse(format!("expected '(i,j)', found '({inner})'"))),
            };
            let a = a.parse().map_err(|_| Error::Parse(format!("bad index '{a}'")))?;
            let b = b.parse().map_err(|_| Error::Parse(format!("bad index '{b}'")))?;
            pairs.push((a, b));
            rest = tail;
        }
        Self::new(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn partner(&self, k: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(i, j)| {
            if i == k {
                Some(j)
            } else if j == k {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n).filter(|&k| self.partner(k).is_none()).collect()
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation { one_line: (1..=self.n).map(|k| self.partner(k).unwrap_or(k)).collect() }
    }

    /// The strictly upper-triangular part of the permutation matrix.
    pub fn n_matrix(&self) -> UpperMatrix {
        UpperMatrix { n: self.n, entries: self.pairs.iter().copied().collect() }
    }

    /// Dimension of the Borel orbit, from the closed formula with the
    /// correction terms `r_k`.
    pub fn orbit_dim(&self) -> usize {
        let (m, n) = (self.rank() as i64, self.n as i64);
        let mut d = m * n;
        for &(i, j) in &self.pairs {
            d += i as i64 - j as i64;
        }
        for k in 1..self.pairs.len() {
            let (ik, jk) = self.pairs[k];
            let r = self.pairs[..k].iter().filter(|&&(_, jl)| jl < jk).count()
                + self.pairs[..k].iter().filter(|&&(_, jl)| jl < ik).count();
            d -= r as i64;
        }
        d as usize
    }

    /// Dimension of the orbit read off the arc diagram: `m(n-m)` minus arc
    /// crossings minus, for every fixed point, the arcs passing over it.
    pub fn orbit_dim_arcs(&self) -> usize {
        let m = self.rank();
        let mut crossings = 0;
        for (a, &(i1, j1)) in self.pairs.iter().enumerate() {
            for &(i2, j2) in &self.pairs[a + 1..] {
                if (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1) {
                    crossings += 1;
                }
            }
        }
        let covers: usize = self
            .fixed_points()
            .iter()
            .map(|&p| self.pairs.iter().filter(|&&(i, j)| i < p && p < j).count())
            .sum();
        m * (self.n - m) - crossings - covers
    }

    /// Dimension of the ambient space of strictly upper-triangular matrices.
    pub fn ambient_dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.orbit_dim()
    }

    /// The permutation with one-line notation `i_1..i_m, k_1..k_{n-2m},
    /// j_1..j_m` (fixed points `k` ascending), which conjugates the minimal
    /// orbit of the same rank onto this one.
    pub fn pi_w(&self) -> Permutation {
        let mut one_line: Vec<usize> = self.pairs.iter().map(|&(i, _)| i).collect();
        one_line.extend(self.fixed_points());
        one_line.extend(self.pairs.iter().map(|&(_, j)| j));
        Permutation { one_line }
    }

    /// All permutations of minimal length that conjugate `N_{w_m}` onto
    /// `N_w`, sorted.
    pub fn minimal_conjugators(&self) -> Vec<Permutation> {
        let (n, m) = (self.n, self.rank());
        let target = self.pi_w().length();
        let fixed = self.fixed_points();
        let mut out = Vec::new();
        for pair_order in permutations(m) {
            for fixed_order in permutations(n - 2 * m) {
                let mut one_line = vec![0; n];
                for (k, &p) in pair_order.iter().enumerate() {
                    let (i, j) = self.pairs[p];
                    one_line[k] = i;
                    one_line[n - m + k] = j;
                }
                for (k, &f) in fixed_order.iter().enumerate() {
                    one_line[m + k] = fixed[f];
                }
                let p = Permutation { one_line };
                if p.length() == target {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// Arc diagram as text: fixed points print as `.`, the two ends of the
    /// `k`-th arc as the `k`-th lowercase letter.
    pub fn arc_diagram(&self) -> String {
        (1..=self.n)
            .map(|p| match self.pairs.iter().position(|&(i, j)| i == p || j == p) {
                Some(k) => (b'a' + (k % 26) as u8) as char,
                None => '.',
            })
            .collect()
    }

    /// The block permutation of an involution supported in the upper-right
    /// `k x k` block of a `2k x 2k` matrix: reversing the rows of the block
    /// gives the matrix of its inverse, so `π(r) = j - k` where `k + 1 - r`
    /// is paired with `j`.
    pub fn block_flag_permutation(&self, k: usize) -> Result<Permutation> {
        if self.n != 2 * k || self.rank() != k {
            return Err(Error::NotBlockSupported(format!("{self} is not of full rank {k} in size {}", 2 * k)));
        }
        let mut one_line = vec![0; k];
        for &(i, j) in &self.pairs {
            if i > k || j <= k {
                return Err(Error::NotBlockSupported(format!("({i},{j}) lies outside the block")));
            }
            one_line[k - i] = j - k;
        }
        Ok(Permutation { one_line })
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("id");
        }
        for (i, j) in &self.pairs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// `w_m = (1, n-m+1)(2, n-m+2)...(m, n)`, the minimal orbit of rank `m`.
pub fn minimal_involution(n: usize, m: usize) -> Result<Involution> {
    if 2 * m > n {
        return Err(Error::RankTooLarge { n, m });
    }
    Ok(Involution { n, pairs: (1..=m).map(|k| (k, n - m + k)).collect() })
}

/// Whether `(i, j)` lies in the support of the minimal orbit closure of
/// rank `m`: `i <= m` and `j >= n - m + i`.
pub fn in_minimal_support(n: usize, m: usize, i: usize, j: usize) -> bool {
    i <= m && j + m >= n + i && j <= n
}

/// Coordinates of the minimal orbit closure of rank `m`, row by row.
pub fn minimal_support(n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in (n - m + i)..=n {
            out.push((i, j));
        }
    }
    out
}

/// Every involution of `S_n`, sorted by rank and then by transpositions.
pub fn enumerate_involutions(n: usize) -> Vec<Involution> {
    fn go(n: usize, next: usize, used: &mut Vec<bool>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Involution>) {
        let Some(i) = (next..=n).find(|&i| !used[i]) else {
            out.push(Involution { n, pairs: pairs.clone() });
            return;
        };
        // `i` is either fixed or paired with a later unused point.
        used[i] = true;
        go(n, i + 1, used, pairs, out);
        for j in i + 1..=n {
            if !used[j] {
                used[j] = true;
                pairs.push((i, j));
                go(n, i + 1, used, pairs, out);
                pairs.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    go(n, 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.rank(), &a.pairs).cmp(&(b.rank(), &b.pairs)));
    out
}

/// All permutations of `0..k` as index vectors, in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, k - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_dimension_example() {
        let w = Involution::parse(8, "(2,6)(4,7)").unwrap();
        assert_eq!(w.orbit_dim(), 8);
        assert_eq!(w.orbit_dim_arcs(), 8);
        assert_eq!(w.arc_diagram(), ".a.b.ab.");
    }

    #[test]
    fn pi_w_and_words() {
        let w = Involution::parse(7, "(1,6)(3,4)").unwrap();
        let p = w.pi_w();
        assert_eq!(p.one_line(), &[1, 3, 2, 5, 7, 6, 4]);
        assert_eq!(p.length(), 5);
        assert_eq!(Permutation::from_word(7, &[2, 6, 4, 5, 6]).unwrap(), p);
        let word = p.reduced_word();
        assert_eq!(word.product(7).unwrap(), p);
        assert!(p.reduced_words(100).contains(&ReducedWord(vec![2, 6, 4, 5, 6])));
    }

    #[test]
    fn composition_convention() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        let s1s2 = s1.compose(&s2).unwrap();
        assert_eq!(s1s2.apply(3), 1);
        assert_eq!(Permutation::from_word(3, &[1, 2]).unwrap(), s1s2);
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn parse_forms() {
        let a = Involution::parse(4, " (1, 2)(3,4) ").unwrap();
        let b = Involution::parse(4, "(34)(12)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1,2)(3,4)");
        assert!(Involution::parse(4, "(1,2)(2,3)").is_err());
        assert!(Involution::parse(3, "(1,4)").is_err());
    }

    #[test]
    fn block_permutation_example() {
        let w = Involution::parse(6, "(1,4)(2,6)(3,5)").unwrap();
        assert_eq!(w.block_flag_permutation(3).unwrap().one_line(), &[2, 3, 1]);
    }
}
