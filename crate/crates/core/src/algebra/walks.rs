//! Strings and bands of the string algebra `Γ`.
//!
//! `Γ` is the monomial algebra with zero relations `a f(a)` and `A_a`, so a
//! path is nonzero in `Γ` exactly when it follows `g` and has length at most
//! `q(a) - 2`. Virtual arrows are zero.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::SurfaceAlgebraSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Letter {
    Direct(usize),
    Inverse(usize),
}

impl Letter {
    pub fn arrow(self) -> usize {
        match self {
            Letter::Direct(a) | Letter::Inverse(a) => a,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Direct(a) => Letter::Inverse(a),
            Letter::Inverse(a) => Letter::Direct(a),
        }
    }

    fn start<F: Field>(self, spec: &SurfaceAlgebraSpec<F>) -> usize {
        match self {
            Letter::Direct(a) => spec.tq.quiver.source(a),
            Letter::Inverse(a) => spec.tq.quiver.target(a),
        }
    }

    fn end<F: Field>(self, spec: &SurfaceAlgebraSpec<F>) -> usize {
        match self {
            Letter::Direct(a) => spec.tq.quiver.target(a),
            Letter::Inverse(a) => spec.tq.quiver.source(a),
        }
    }
}

pub type Walk = Vec<Letter>;

pub fn inverse_walk(w: &[Letter]) -> Walk {
    w.iter().rev().map(|l| l.inverse()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "lowercase")]
pub enum WalkKind {
    String,
    Band,
    Neither(String),
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkKind::String => write!(f, "string"),
            WalkKind::Band => write!(f, "band"),
            WalkKind::Neither(r) => write!(f, "neither ({r})"),
        }
    }
}

/// Parses whitespace-separated letters; an inverse letter is written `a^-1`
/// or `a-`.
pub fn parse_walk<F: Field>(spec: &SurfaceAlgebraSpec<F>, text: &str) -> Result<Walk> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let (id, inv) = if let Some(id) = tok.strip_suffix("^-1") {
            (id, true)
        } else if let Some(id) = tok.strip_suffix('-') {
            (id, true)
        } else {
            (tok, false)
        };
        let a = spec
            .tq
            .quiver
            .arrow_index(id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown arrow {id:?} in walk")))?;
        out.push(if inv {
            Letter::Inverse(a)
        } else {
            Letter::Direct(a)
        });
    }
    if out.is_empty() {
        return Err(Error::InvalidInput("empty walk".into()));
    }
    for w in out.windows(2) {
        if w[0].end(spec) != w[1].start(spec) {
            return Err(Error::InvalidInput(format!(
                "letters {} and {} do not compose",
                format_letter(spec, w[0]),
                format_letter(spec, w[1])
            )));
        }
    }
    Ok(out)
}

pub fn format_letter<F: Field>(spec: &SurfaceAlgebraSpec<F>, l: Letter) -> String {
    match l {
        Letter::Direct(a) => spec.tq.id(a).to_string(),
        Letter::Inverse(a) => format!("{}^-1", spec.tq.id(a)),
    }
}

pub fn format_walk<F: Field>(spec: &SurfaceAlgebraSpec<F>, w: &[Letter]) -> String {
    w.iter()
        .map(|&l| format_letter(spec, l))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Whether the path `word` (in path order) is nonzero in `Γ`.
pub fn nonzero_in_gamma<F: Field>(spec: &SurfaceAlgebraSpec<F>, word: &[usize]) -> bool {
    let Some(&first) = word.first() else {
        return true;
    };
    if word.len() + 2 > spec.q(first) {
        return false;
    }
    word.windows(2).all(|p| spec.tq.g(p[0]) == p[1])
}

/// Checks the string conditions; `Err` carries the reason.
fn check_string<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    w: &[Letter],
) -> std::result::Result<(), String> {
    for pair in w.windows(2) {
        if pair[1] == pair[0].inverse() {
            return Err(format!(
                "cancellation {} {}",
                format_letter(spec, pair[0]),
                format_letter(spec, pair[1])
            ));
        }
    }
    let mut i = 0;
    while i < w.len() {
        let direct = matches!(w[i], Letter::Direct(_));
        let mut j = i;
        while j < w.len() && matches!(w[j], Letter::Direct(_)) == direct {
            j += 1;
        }
        let mut path: Vec<usize> = w[i..j].iter().map(|l| l.arrow()).collect();
        if !direct {
            path.reverse();
        }
        if !nonzero_in_gamma(spec, &path) {
            let p = path
                .iter()
                .map(|&a| spec.tq.id(a))
                .collect::<Vec<_>>()
                .join(" ");
            return Err(format!("path {p} is zero in the string algebra"));
        }
        i = j;
    }
    Ok(())
}

pub fn is_string<F: Field>(spec: &SurfaceAlgebraSpec<F>, w: &[Letter]) -> bool {
    check_string(spec, w).is_ok()
}

fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| (0..n).any(|i| w[i] != w[i % d]))
}

/// Band conditions, assuming `w` is composable.
fn check_band<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    w: &[Letter],
) -> std::result::Result<(), String> {
    if w.last().expect("nonempty").end(spec) != w[0].start(spec) {
        return Err("not closed".into());
    }
    let has_direct = w.iter().any(|l| matches!(l, Letter::Direct(_)));
    let has_inverse = w.iter().any(|l| matches!(l, Letter::Inverse(_)));
    if !(has_direct && has_inverse) {
        return Err("needs both direct and inverse letters".into());
    }
    let ww: Walk = w.iter().chain(w.iter()).copied().collect();
    check_string(spec, &ww).map_err(|r| format!("square is not a string: {r}"))?;
    if !is_primitive(w) {
        return Err("proper power".into());
    }
    Ok(())
}

pub fn walk_classify<F: Field>(spec: &SurfaceAlgebraSpec<F>, w: &[Letter]) -> WalkKind {
    if let Err(r) = check_string(spec, w) {
        return WalkKind::Neither(r);
    }
    match check_band(spec, w) {
        Ok(()) => WalkKind::Band,
        Err(_) => WalkKind::String,
    }
}

/// Rotation/inversion class representative of a band.
pub fn band_representative(w: &[Letter]) -> Walk {
    let n = w.len();
    let inv = inverse_walk(w);
    let mut best: Option<Walk> = None;
    for base in [w, inv.as_slice()] {
        for r in 0..n {
            let rot: Walk = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.expect("nonempty")
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkCensus {
    pub max_length: usize,
    /// Strings of each length, a string and its inverse counted once; index 0
    /// counts the trivial strings at the vertices.
    pub strings_by_length: Vec<usize>,
    /// Bands up to rotation and inversion.
    pub bands: Vec<Walk>,
}

/// Enumerates strings and bands of length at most `max_length`.
pub fn enumerate_walks<F: Field>(spec: &SurfaceAlgebraSpec<F>, max_length: usize) -> WalkCensus {
    let n = spec.vertex_count();
    let mut letters_at: Vec<Vec<Letter>> = vec![Vec::new(); n];
    for a in spec.arrows() {
        if spec.is_virtual(a) || !nonzero_in_gamma(spec, &[a]) {
            continue;
        }
        letters_at[spec.tq.quiver.source(a)].push(Letter::Direct(a));
        letters_at[spec.tq.quiver.target(a)].push(Letter::Inverse(a));
    }
    let mut counts = vec![0usize; max_length + 1];
    counts[0] = n;
    let mut bands = BTreeSet::new();
    let mut stack: Vec<Letter> = Vec::new();
    fn dfs<F: Field>(
        spec: &SurfaceAlgebraSpec<F>,
        letters_at: &[Vec<Letter>],
        max_length: usize,
        stack: &mut Vec<Letter>,
        counts: &mut [usize],
        bands: &mut BTreeSet<Walk>,
    ) {
        let len = stack.len();
        counts[len] += 1;
        if check_band(spec, stack).is_ok() {
            bands.insert(band_representative(stack));
        }
        if len == max_length {
            return;
        }
        let here = stack.last().expect("nonempty").end(spec);
        for &l in &letters_at[here] {
            stack.push(l);
            if check_string(spec, stack).is_ok() {
                dfs(spec, letters_at, max_length, stack, counts, bands);
            }
            stack.pop();
        }
    }
    if max_length > 0 {
        for v in 0..n {
            for &l in &letters_at[v] {
                stack.push(l);
                dfs(
                    spec,
                    &letters_at,
                    max_length,
                    &mut stack,
                    &mut counts,
                    &mut bands,
                );
                stack.pop();
            }
        }
    }
    for c in counts.iter_mut().skip(1) {
        *c /= 2;
    }
    WalkCensus {
        max_length,
        strings_by_length: counts,
        bands: bands.into_iter().collect(),
    }
}
