//! Exact arithmetic in the right-angled Artin group of a graph.
//!
//! A word is reduced by a single left-to-right pass: each incoming letter scans
//! back over letters it commutes with and cancels against the first inverse it
//! meets. The reduced word is then rewritten as the lexicographically least
//! linearization of its dependence order (letters ordered by vertex index,
//! positive before negative), which makes equality a plain comparison.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A generator or its inverse. The derived order is the canonical letter order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub vertex: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(vertex: usize) -> Self {
        Letter {
            vertex,
            inverse: false,
        }
    }

    pub fn neg(vertex: usize) -> Self {
        Letter {
            vertex,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            vertex: self.vertex,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A possibly unreduced word.
pub type Word = Vec<Letter>;

/// The canonical reduced representative of a group element.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NormalForm(Vec<Letter>);

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn generator(v: usize) -> Self {
        NormalForm(vec![Letter::pos(v)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display<'a>(&'a self, g: &'a SimpleGraph) -> WordDisplay<'a> {
        WordDisplay {
            g,
            letters: &self.0,
        }
    }
}

impl AsRef<[Letter]> for NormalForm {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

fn commute(g: &SimpleGraph, a: Letter, b: Letter) -> bool {
    a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex)
}

fn check_letters(g: &SimpleGraph, w: &[Letter]) -> Result<()> {
    match w.iter().find(|l| l.vertex >= g.len()) {
        Some(l) => Err(Error::UnknownVertex(format!("#{}", l.vertex))),
        None => Ok(()),
    }
}

/// Free and commutation cancellation in one pass.
fn reduce(g: &SimpleGraph, w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        let mut i = out.len();
        let mut cancelled = false;
        while i > 0 {
            let m = out[i - 1];
            if m.vertex == l.vertex {
                if m.inverse != l.inverse {
                    out.remove(i - 1);
                    cancelled = true;
                }
                break;
            }
            if !g.adjacent(m.vertex, l.vertex) {
                break;
            }
            i -= 1;
        }
        if !cancelled {
            out.push(l);
        }
    }
    out
}

/// Greedy least-available-letter linearization of the dependence order.
fn linearize(g: &SimpleGraph, w: Word) -> Word {
    let n = w.len();
    // blockers[i]: earlier letters that must be emitted before letter i
    let mut blockers = vec![0usize; n];
    for j in 0..n {
        for i in 0..j {
            if !commute(g, w[i], w[j]) {
                blockers[j] += 1;
            }
        }
    }
    let mut emitted = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&i| !emitted[i] && blockers[i] == 0)
            .min_by_key(|&i| w[i])
            .expect("a dependence order always has a minimal letter");
        emitted[next] = true;
        out.push(w[next]);
        for j in next + 1..n {
            if !emitted[j] && !commute(g, w[next], w[j]) {
                blockers[j] -= 1;
            }
        }
    }
    out
}

pub(crate) fn nf_unchecked(g: &SimpleGraph, w: &[Letter]) -> NormalForm {
    NormalForm(linearize(g, reduce(g, w)))
}

pub fn normal_form(g: &SimpleGraph, w: &[Letter]) -> Result<NormalForm> {
    check_letters(g, w)?;
    Ok(nf_unchecked(g, w))
}

pub fn is_identity(g: &SimpleGraph, w: &[Letter]) -> Result<bool> {
    check_letters(g, w)?;
    Ok(reduce(g, w).is_empty())
}

pub fn multiply(g: &SimpleGraph, w1: &[Letter], w2: &[Letter]) -> Result<NormalForm> {
    let mut w = Vec::with_capacity(w1.len() + w2.len());
    w.extend_from_slice(w1);
    w.extend_from_slice(w2);
    normal_form(g, &w)
}

pub fn invert(g: &SimpleGraph, w: &[Letter]) -> Result<NormalForm> {
    normal_form(g, &inverse_word(w))
}

/// Reversed, sign-flipped word; no reduction.
pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Per-generator exponent sums.
pub fn exponent_sums(n: usize, w: &[Letter]) -> Vec<i64> {
    let mut v = vec![0; n];
    for l in w {
        v[l.vertex] += l.sign();
    }
    v
}

/// Concatenates words and normalizes.
pub(crate) fn product(g: &SimpleGraph, parts: &[&[Letter]]) -> NormalForm {
    let w: Word = parts.iter().flat_map(|p| p.iter().copied()).collect();
    nf_unchecked(g, &w)
}

/// `c w c⁻¹`, normalized.
pub(crate) fn conjugate(g: &SimpleGraph, c: &[Letter], w: &[Letter]) -> NormalForm {
    product(g, &[c, w, &inverse_word(c)])
}

/// Every normal form of length at most `radius`, ordered by (length, lexicographic).
#[derive(Clone, Debug)]
pub struct ConjugatorBall {
    pub radius: usize,
    elements: Vec<NormalForm>,
}

impl ConjugatorBall {
    pub fn new(g: &SimpleGraph, radius: usize) -> Self {
        let letters: Vec<Letter> = (0..g.len())
            .flat_map(|v| [Letter::pos(v), Letter::neg(v)])
            .collect();
        let mut elements = vec![NormalForm::identity()];
        let mut layer = vec![NormalForm::identity()];
        for len in 1..=radius {
            let mut next = BTreeSet::new();
            for c in &layer {
                for &l in &letters {
                    let mut w = c.0.clone();
                    w.push(l);
                    let nf = nf_unchecked(g, &w);
                    if nf.len() == len {
                        next.insert(nf);
                    }
                }
            }
            layer = next.into_iter().collect();
            elements.extend(layer.iter().cloned());
        }
        ConjugatorBall { radius, elements }
    }

    pub fn iter(&self) -> impl Iterator<Item = &NormalForm> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyResult {
    Conjugator(NormalForm),
    /// Nothing within the radius works; not a proof of non-conjugacy.
    NotConjugateWithinRadius,
}

/// Searches for `c` with `c w1 c⁻¹ = w2`, shortest and then lexicographically least first.
pub fn conjugacy_search(
    g: &SimpleGraph,
    w1: &[Letter],
    w2: &[Letter],
    radius: usize,
) -> Result<ConjugacyResult> {
    check_letters(g, w1)?;
    check_letters(g, w2)?;
    Ok(conjugacy_search_in(
        g,
        w1,
        w2,
        &ConjugatorBall::new(g, radius),
    ))
}

pub fn conjugacy_search_in(
    g: &SimpleGraph,
    w1: &[Letter],
    w2: &[Letter],
    ball: &ConjugatorBall,
) -> ConjugacyResult {
    // exponent sums are conjugacy invariants
    if exponent_sums(g.len(), w1) != exponent_sums(g.len(), w2) {
        return ConjugacyResult::NotConjugateWithinRadius;
    }
    let target = nf_unchecked(g, w2);
    for c in ball.iter() {
        if conjugate(g, &c.0, w1) == target {
            return ConjugacyResult::Conjugator(c.clone());
        }
    }
    ConjugacyResult::NotConjugateWithinRadius
}

/// Parses `a b^-1 c^3`; `^k` expands to `|k|` copies.
pub fn parse_word(g: &SimpleGraph, text: &str) -> Result<Word> {
    let mut w = Vec::new();
    for token in text.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => {
                let k: i64 = e
                    .parse()
                    .map_err(|_| Error::InvalidGenerator(format!("bad exponent in `{token}`")))?;
                if k == 0 {
                    return Err(Error::InvalidGenerator(format!(
                        "zero exponent in `{token}`"
                    )));
                }
                (name, k)
            }
            None => (token, 1),
        };
        let v = g.vertex(name)?;
        let l = if exp > 0 {
            Letter::pos(v)
        } else {
            Letter::neg(v)
        };
        w.extend(std::iter::repeat(l).take(exp.unsigned_abs() as usize));
    }
    Ok(w)
}

pub struct WordDisplay<'a> {
    g: &'a SimpleGraph,
    letters: &'a [Letter],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.g.label(l.vertex))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

pub fn format_word(g: &SimpleGraph, w: &[Letter]) -> String {
    WordDisplay { g, letters: w }.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &SimpleGraph, s: &str) -> Word {
        parse_word(g, s).unwrap()
    }

    fn nf(g: &SimpleGraph, s: &str) -> String {
        normal_form(g, &w(g, s)).unwrap().display(g).to_string()
    }

    #[test]
    fn normal_form_examples() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(nf(&p3, "a b a^-1"), "b");
        assert_eq!(nf(&p3, "a c a^-1 c^-1"), "a c a^-1 c^-1");
        assert_eq!(nf(&p3, ""), "");
        assert_eq!(nf(&p3, "b a"), "a b");
        assert_eq!(nf(&p3, "c b a"), "b c a");
    }

    #[test]
    fn identity_examples() {
        let p3 = SimpleGraph::path(3);
        assert!(is_identity(&p3, &w(&p3, "b a b^-1 a^-1")).unwrap());
        assert!(!is_identity(&p3, &w(&p3, "a c a^-1 c^-1")).unwrap());
        let k3 = SimpleGraph::complete(3);
        assert!(is_identity(&k3, &w(&k3, "a b c a^-1 c^-1 b^-1")).unwrap());
        assert!(is_identity(&k3, &w(&k3, "c^2 a b^-1 c^-2 b a^-1")).unwrap());
    }

    #[test]
    fn multiply_and_invert() {
        let p3 = SimpleGraph::path(3);
        assert!(multiply(&p3, &w(&p3, "a"), &w(&p3, "a^-1"))
            .unwrap()
            .is_empty());
        assert_eq!(
            invert(&p3, &w(&p3, "a b"))
                .unwrap()
                .display(&p3)
                .to_string(),
            "a^-1 b^-1"
        );
        let k3 = SimpleGraph::complete(3);
        let prod = multiply(&k3, &w(&k3, "a b"), &w(&k3, "b a")).unwrap();
        assert_eq!(exponent_sums(3, prod.letters()), vec![2, 2, 0]);
        assert_eq!(prod.display(&k3).to_string(), "a a b b");
    }

    #[test]
    fn exponent_shorthand() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(w(&p3, "a^3 b^-2"), w(&p3, "a a a b^-1 b^-1"));
        assert!(parse_word(&p3, "a^0").is_err());
        assert!(parse_word(&p3, "q").is_err());
    }

    #[test]
    fn conjugacy_examples() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(
            conjugacy_search(&p3, &w(&p3, "c"), &w(&p3, "a c a^-1"), 1).unwrap(),
            ConjugacyResult::Conjugator(NormalForm(w(&p3, "a")))
        );
        assert_eq!(
            conjugacy_search(&p3, &w(&p3, "a c"), &w(&p3, "a c"), 2).unwrap(),
            ConjugacyResult::Conjugator(NormalForm::identity())
        );
        assert_eq!(
            conjugacy_search(&p3, &w(&p3, "a"), &w(&p3, "c"), 3).unwrap(),
            ConjugacyResult::NotConjugateWithinRadius
        );
    }

    #[test]
    fn ball_is_ordered_and_complete() {
        let p3 = SimpleGraph::path(3);
        let ball = ConjugatorBall::new(&p3, 2);
        let lens: Vec<usize> = ball.iter().map(NormalForm::len).collect();
        assert!(lens.windows(2).all(|p| p[0] <= p[1]));
        // length-one layer: all six letters
        assert_eq!(lens.iter().filter(|&&l| l == 1).count(), 6);
        // length two: 36 words, minus 6 cancelling pairs, minus 8 duplicates from a-b and c-b swaps
        assert_eq!(lens.iter().filter(|&&l| l == 2).count(), 36 - 6 - 8);
    }
}
