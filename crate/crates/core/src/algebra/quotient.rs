//! The quotient of the truncated path algebra by a two-sided ideal.
//!
//! Paths of length at most `cap` span the ambient space; the ideal is closed
//! under multiplication by arrows on both sides, dropping paths longer than
//! the cap. Column order puts non-canonical paths first, so whenever the
//! canonical words span the quotient they are exactly the surviving
//! (non-pivot) paths.

use std::collections::{HashMap, HashSet};

use super::paths::PathSpace;
use super::relations::{CanonicalElement, Relation};
use super::table::{AlgebraTable, BasisElement};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{SparseEchelon, SparseVec};
use crate::quiver::TriangulationQuiver;

pub struct Quotient<F: Field> {
    pub space: PathSpace,
    col_of: Vec<usize>,
    path_of: Vec<usize>,
    echelon: SparseEchelon<F>,
    field: F,
}

impl<F: Field> Quotient<F> {
    pub fn new(
        field: F,
        tq: &TriangulationQuiver,
        relations: &[Relation<F::Elem>],
        preferred: &HashSet<(usize, Vec<usize>)>,
        cap: usize,
    ) -> Quotient<F> {
        let space = PathSpace::new(tq, cap);
        let mut order: Vec<usize> = (0..space.len()).collect();
        order.sort_by_key(|&p| {
            let w = &space.words[p];
            (
                preferred.contains(&(space.source[p], w.clone())),
                std::cmp::Reverse(w.len()),
                w.clone(),
                space.source[p],
            )
        });
        let mut col_of = vec![0; space.len()];
        for (c, &p) in order.iter().enumerate() {
            col_of[p] = c;
        }
        let mut q = Quotient {
            space,
            col_of,
            path_of: order,
            echelon: SparseEchelon::new(field.clone()),
            field,
        };
        let mut queue = Vec::new();
        for rel in relations {
            let mut v = SparseVec::new();
            for (c, w) in rel {
                if let Some(p) = q.space.find(tq.source(w[0]), w) {
                    crate::linalg::sparse_axpy(&q.field, &mut v, c, q.col_of[p], &q.field.one());
                }
            }
            if let Some(r) = q.echelon.insert(v) {
                queue.push(r);
            }
        }
        while let Some(r) = queue.pop() {
            for side in [Side::Left, Side::Right] {
                for v in q.extend(&r, side) {
                    if let Some(new) = q.echelon.insert(v) {
                        queue.push(new);
                    }
                }
            }
        }
        q
    }

    /// Products of a homogeneous vector with each arrow on one side.
    fn extend(&self, r: &SparseVec<F::Elem>, side: Side) -> Vec<SparseVec<F::Elem>> {
        let mut by_arrow: HashMap<usize, SparseVec<F::Elem>> = HashMap::new();
        let one = self.field.one();
        for (&c, coef) in r {
            let p = self.path_of[c];
            let ext = match side {
                Side::Left => self.space.left_extensions(p),
                Side::Right => self.space.right_extensions(p),
            };
            for &(a, p2) in ext {
                let v = by_arrow.entry(a).or_default();
                crate::linalg::sparse_axpy(&self.field, v, coef, self.col_of[p2], &one);
            }
        }
        let mut out: Vec<_> = by_arrow.into_iter().collect();
        out.sort_by_key(|(a, _)| *a);
        out.into_iter().map(|(_, v)| v).collect()
    }

    pub fn dim(&self) -> usize {
        self.space.len() - self.echelon.rank()
    }

    /// Path ids that survive as basis of the quotient.
    pub fn standard_paths(&self) -> Vec<usize> {
        (0..self.space.len())
            .filter(|&p| !self.echelon.is_pivot(self.col_of[p]))
            .collect()
    }

    /// Normal form of a path as `(path id, coefficient)` over standard paths;
    /// paths beyond the cap are zero.
    pub fn normal_form(&self, source: usize, word: &[usize]) -> Vec<(usize, F::Elem)> {
        let Some(p) = self.space.find(source, word) else {
            return Vec::new();
        };
        let mut v = SparseVec::new();
        v.insert(self.col_of[p], self.field.one());
        self.echelon
            .reduce(v)
            .into_iter()
            .map(|(c, x)| (self.path_of[c], x))
            .collect()
    }

    /// Structure constants on a basis of standard paths, each scaled.
    pub fn table(
        &self,
        tq: &TriangulationQuiver,
        kind: String,
        name: Option<String>,
        basis: &[CanonicalElement<F::Elem>],
    ) -> Result<AlgebraTable<F>> {
        let f = &self.field;
        let mut index_of_path = HashMap::new();
        for (k, b) in basis.iter().enumerate() {
            let p = self
                .space
                .find(b.source, &b.word)
                .ok_or_else(|| Error::Consistency("basis word longer than the path cap".into()))?;
            index_of_path.insert(p, k);
        }
        let inv_scale: Vec<F::Elem> = basis
            .iter()
            .map(|b| f.inv(&b.scale).expect("nonzero scale"))
            .collect();
        let elems: Vec<BasisElement<F::Elem>> = basis
            .iter()
            .map(|b| BasisElement {
                source: b.source,
                target: b.word.last().map_or(b.source, |&a| tq.target(a)),
                word: b.word.clone(),
                scale: b.scale.clone(),
                is_socle: b.is_socle,
            })
            .collect();
        let d = basis.len();
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                if elems[i].target != elems[j].source {
                    continue;
                }
                let mut w = elems[i].word.clone();
                w.extend_from_slice(&elems[j].word);
                let s = f.mul(&elems[i].scale, &elems[j].scale);
                let mut entry = Vec::new();
                for (p, c) in self.normal_form(elems[i].source, &w) {
                    let k = *index_of_path.get(&p).ok_or_else(|| {
                        Error::Consistency(format!(
                            "normal form of {} leaves the basis",
                            tq.format_cycles(&[w.clone()])
                        ))
                    })?;
                    entry.push((k, f.mul(&f.mul(&s, &c), &inv_scale[k])));
                }
                entry.sort_by_key(|(k, _)| *k);
                mult[i * d + j] = entry;
            }
        }
        let q = &tq.quiver;
        AlgebraTable::new(
            f.clone(),
            kind,
            name,
            q.vertices.clone(),
            q.arrows.clone(),
            elems,
            mult,
        )
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}
