//! Generating relations of the algebras attached to a surface algebra spec.

use crate::field::Field;
use crate::quiver::SurfaceAlgebraSpec;

/// A linear combination of nonempty paths.
pub type Relation<E> = Vec<(E, Vec<usize>)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// The weighted surface algebra.
    Weighted,
    /// The biserial algebra: `a f(a) = 0` and `c_a B_a = c_abar B_abar`.
    Biserial,
    /// The string algebra: `a f(a) = 0` and `A_a = 0`.
    String,
}

impl AlgebraKind {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraKind::Weighted => "weighted",
            AlgebraKind::Biserial => "biserial",
            AlgebraKind::String => "string",
        }
    }
}

/// Whether `a f(a) g(f(a))` is a generator of the weighted ideal.
///
/// Besides `f^2(a)` virtual, the case `f(abar)` virtual with `q(abar) = 3` is
/// skipped: there `a f(a) g(f(a))` is a nonzero multiple of `A_a`.
pub fn has_zero_relation_f<F: Field>(spec: &SurfaceAlgebraSpec<F>, a: usize) -> bool {
    let tq = &spec.tq;
    let b = tq.bar(a);
    !(spec.is_virtual(tq.f(tq.f(a))) || (spec.is_virtual(tq.f(b)) && spec.q(b) == 3))
}

/// Whether `a g(a) f(g(a))` is a generator of the weighted ideal; the
/// mirror image of [`has_zero_relation_f`].
pub fn has_zero_relation_g<F: Field>(spec: &SurfaceAlgebraSpec<F>, a: usize) -> bool {
    let tq = &spec.tq;
    let fa = tq.f(a);
    !(spec.is_virtual(fa) || (spec.is_virtual(tq.f(fa)) && spec.q(fa) == 3))
}

fn zero_relations<F: Field>(spec: &SurfaceAlgebraSpec<F>, out: &mut Vec<Relation<F::Elem>>) {
    let tq = &spec.tq;
    let one = spec.field.one();
    for a in spec.arrows() {
        let fa = tq.f(a);
        if has_zero_relation_f(spec, a) {
            out.push(vec![(one.clone(), vec![a, fa, tq.g(fa)])]);
        }
        if has_zero_relation_g(spec, a) {
            out.push(vec![(one.clone(), vec![a, tq.g(a), tq.f(tq.g(a))])]);
        }
    }
}

fn socle_relations<F: Field>(spec: &SurfaceAlgebraSpec<F>, out: &mut Vec<Relation<F::Elem>>) {
    let field = &spec.field;
    for v in 0..spec.vertex_count() {
        let (a, b) = spec.tq.out_pair(v);
        out.push(vec![
            (spec.c(a).clone(), spec.b_path(a)),
            (field.neg(spec.c(b)), spec.b_path(b)),
        ]);
    }
}

pub fn relations<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
) -> Vec<Relation<F::Elem>> {
    let field = &spec.field;
    let tq = &spec.tq;
    let one = field.one();
    let mut out = Vec::new();
    match kind {
        AlgebraKind::Weighted => {
            for a in spec.arrows() {
                let b = tq.bar(a);
                out.push(vec![
                    (one.clone(), vec![a, tq.f(a)]),
                    (field.neg(spec.c(b)), spec.a_path(b)),
                ]);
            }
            zero_relations(spec, &mut out);
        }
        AlgebraKind::Biserial => {
            for a in spec.arrows() {
                out.push(vec![(one.clone(), vec![a, tq.f(a)])]);
            }
            socle_relations(spec, &mut out);
        }
        AlgebraKind::String => {
            for a in spec.arrows() {
                out.push(vec![(one.clone(), vec![a, tq.f(a)])]);
                out.push(vec![(one.clone(), spec.a_path(a))]);
            }
        }
    }
    out
}

/// Relations of the family `A(t)`: `a f(a) = c_abar t^{e(a)} A_abar`, the
/// socle identifications and the zero relations of the weighted algebra.
pub fn degeneration_relations<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    t: &F::Elem,
    exponents: &[u32],
) -> Vec<Relation<F::Elem>> {
    let field = &spec.field;
    let tq = &spec.tq;
    let mut out = Vec::new();
    for a in spec.arrows() {
        let b = tq.bar(a);
        let coef = field.mul(spec.c(b), &field.pow(t, exponents[a] as u64));
        out.push(vec![
            (field.one(), vec![a, tq.f(a)]),
            (field.neg(&coef), spec.a_path(b)),
        ]);
    }
    socle_relations(spec, &mut out);
    zero_relations(spec, &mut out);
    out
}

/// One element of a canonical basis: `scale * word`, starting at `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElement<E> {
    pub source: usize,
    pub word: Vec<usize>,
    pub scale: E,
    /// Marks the socle element `w_i = c_a B_a`.
    pub is_socle: bool,
}

/// Canonical basis words in canonical order: by length, then by arrow
/// indices, idempotents ordered by vertex.
pub fn canonical_basis<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
) -> Vec<CanonicalElement<F::Elem>> {
    let field = &spec.field;
    let mut out = Vec::new();
    for v in 0..spec.vertex_count() {
        out.push(CanonicalElement {
            source: v,
            word: Vec::new(),
            scale: field.one(),
            is_socle: false,
        });
        let (a, b) = spec.tq.out_pair(v);
        for x in [a, b] {
            let top = match kind {
                AlgebraKind::String => spec.q(x) - 2,
                _ => spec.q(x) - 1,
            };
            for k in 1..=top {
                out.push(CanonicalElement {
                    source: v,
                    word: spec.g_walk(x, k),
                    scale: field.one(),
                    is_socle: false,
                });
            }
        }
        if kind != AlgebraKind::String {
            let s = spec.socle_arrow(v);
            out.push(CanonicalElement {
                source: v,
                word: spec.b_path(s),
                scale: spec.c(s).clone(),
                is_socle: true,
            });
        }
    }
    out.sort_by(|x, y| (x.word.len(), &x.word, x.source).cmp(&(y.word.len(), &y.word, y.source)));
    out
}
