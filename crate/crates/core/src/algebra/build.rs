//! Construction of algebra tables from a spec.

use std::collections::HashSet;

use super::quotient::Quotient;
use super::relations::{
    canonical_basis, degeneration_relations, relations, AlgebraKind, CanonicalElement, Relation,
};
use super::structure::socle;
use super::table::AlgebraTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{coordinates, span};
use crate::quiver::SurfaceAlgebraSpec;

/// Default path length cap: longest cycle path plus two.
pub fn default_cap<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> usize {
    spec.max_q() + 2
}

/// Expected dimension of the algebra of the given kind.
pub fn expected_dimension<F: Field>(spec: &SurfaceAlgebraSpec<F>, kind: AlgebraKind) -> usize {
    match kind {
        AlgebraKind::String => (0..spec.vertex_count())
            .map(|v| spec.projective_dimension(v) - 3)
            .sum(),
        _ => spec.dimension_formula(),
    }
}

pub fn build_algebra<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
) -> Result<AlgebraTable<F>> {
    build_algebra_with_cap(spec, kind, default_cap(spec))
}

pub fn build_algebra_with_cap<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
    cap: usize,
) -> Result<AlgebraTable<F>> {
    let rels = relations(spec, kind);
    build_from_relations(spec, &rels, kind, kind.label().to_string(), cap)
}

/// The member `A(t)` of a degeneration family with relation exponents `e`.
pub fn build_degeneration_member<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    t: &F::Elem,
    exponents: &[u32],
) -> Result<AlgebraTable<F>> {
    let rels = degeneration_relations(spec, t, exponents);
    let label = format!("degeneration(t={})", spec.field.to_string(t));
    build_from_relations(spec, &rels, AlgebraKind::Weighted, label, default_cap(spec))
}

/// Dimension of the truncated quotient at path cap `cap`.
pub fn quotient_dimension<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
    cap: usize,
) -> usize {
    let rels = relations(spec, kind);
    Quotient::new(spec.field.clone(), &spec.tq, &rels, &HashSet::new(), cap).dim()
}

/// The quotient with its surviving paths as basis, without any check against
/// the canonical basis. Useful for inspecting algebras that fail to build.
pub fn build_raw<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    kind: AlgebraKind,
    cap: usize,
) -> Result<AlgebraTable<F>> {
    let rels = relations(spec, kind);
    let canon = canonical_basis(spec, kind);
    let preferred = canon.iter().map(|b| (b.source, b.word.clone())).collect();
    let q = Quotient::new(spec.field.clone(), &spec.tq, &rels, &preferred, cap);
    raw_table(spec, &q, format!("{}-raw", kind.label()))
}

fn raw_table<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    q: &Quotient<F>,
    label: String,
) -> Result<AlgebraTable<F>> {
    let mut basis: Vec<CanonicalElement<F::Elem>> = q
        .standard_paths()
        .into_iter()
        .map(|p| CanonicalElement {
            source: q.space.source[p],
            word: q.space.words[p].clone(),
            scale: spec.field.one(),
            is_socle: false,
        })
        .collect();
    basis.sort_by(|x, y| (x.word.len(), &x.word, x.source).cmp(&(y.word.len(), &y.word, y.source)));
    q.table(&spec.tq, label, spec.name.clone(), &basis)
}

fn build_from_relations<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    rels: &[Relation<F::Elem>],
    basis_kind: AlgebraKind,
    label: String,
    cap: usize,
) -> Result<AlgebraTable<F>> {
    let report = spec.check_assumptions();
    if !report.ok() {
        return Err(Error::AssumptionViolated(report));
    }
    let canon = canonical_basis(spec, basis_kind);
    let preferred: HashSet<(usize, Vec<usize>)> =
        canon.iter().map(|b| (b.source, b.word.clone())).collect();
    let q = Quotient::new(spec.field.clone(), &spec.tq, rels, &preferred, cap);
    let standard: HashSet<(usize, Vec<usize>)> = q
        .standard_paths()
        .into_iter()
        .map(|p| (q.space.source[p], q.space.words[p].clone()))
        .collect();
    let check_socle = basis_kind != AlgebraKind::String;
    if standard != preferred {
        if check_socle {
            let raw = raw_table(spec, &q, label.clone())?;
            singular_socle_check(spec, &raw)?;
        }
        let mut missing: Vec<String> = preferred
            .difference(&standard)
            .map(|(_, w)| spec.word_string(w))
            .collect();
        let mut extra: Vec<String> = standard
            .difference(&preferred)
            .map(|(_, w)| spec.word_string(w))
            .collect();
        missing.sort();
        extra.sort();
        return Err(Error::DimensionMismatch {
            expected: canon.len(),
            found: q.dim(),
            detail: format!("canonical words not in the quotient basis: {missing:?}; extra surviving paths: {extra:?}"),
        });
    }
    let table = q.table(&spec.tq, label, spec.name.clone(), &canon)?;
    if check_socle {
        singular_socle_check(spec, &table)?;
    }
    let expected = expected_dimension(spec, basis_kind);
    if table.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: table.dim(),
            detail: "dimension formula".into(),
        });
    }
    if check_socle {
        check_cycle_paths(spec, &table)?;
    }
    Ok(table)
}

/// Fails with a witness if some `e_v A` has socle of dimension above one.
fn singular_socle_check<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    table: &AlgebraTable<F>,
) -> Result<()> {
    let socles = socle(table);
    for (v, s) in socles.iter().enumerate() {
        if s.dim() <= 1 {
            continue;
        }
        let b = table.eval_word(v, &spec.b_path(spec.socle_arrow(v)));
        let line = span(&table.field, table.dim(), vec![b]);
        let witness = s
            .basis
            .iter()
            .find(|x| coordinates(&table.field, &line, x).is_none())
            .expect("a socle of dimension two leaves the span of one vector");
        return Err(Error::SingularSocle {
            vertex: spec.tq.quiver.vertices[v].clone(),
            witness: table.format_element(witness),
        });
    }
    Ok(())
}

/// Every `B_a` is nonzero and annihilated by the arrows on both sides.
fn check_cycle_paths<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    table: &AlgebraTable<F>,
) -> Result<()> {
    for a in spec.arrows() {
        let s = spec.tq.source(a);
        let b = spec.b_path(a);
        if table.is_zero(&table.eval_word(s, &b)) {
            return Err(Error::Consistency(format!("B_{} vanishes", spec.tq.id(a))));
        }
        for x in spec.arrows() {
            let mut right = b.clone();
            right.push(x);
            let mut left = vec![x];
            left.extend_from_slice(&b);
            if (spec.tq.source(x) == spec.tq.target(*b.last().unwrap())
                && !table.is_zero(&table.eval_word(s, &right)))
                || (spec.tq.target(x) == s
                    && !table.is_zero(&table.eval_word(spec.tq.source(x), &left)))
            {
                return Err(Error::Consistency(format!(
                    "B_{} is not annihilated by {}",
                    spec.tq.id(a),
                    spec.tq.id(x)
                )));
            }
        }
    }
    Ok(())
}
