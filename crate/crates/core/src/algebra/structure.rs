//! Socle, Cartan matrix, symmetrizing form and Gabriel quiver.

use serde::Serialize;

use super::table::AlgebraTable;
use crate::field::Field;
use crate::linalg::{left_kernel, rank, sparse_axpy, Matrix, SparseEchelon, SparseVec, Subspace};
use crate::quiver::SurfaceAlgebraSpec;

/// Right socle of each `e_v A`, as a subspace of `A`.
pub fn socle<F: Field>(table: &AlgebraTable<F>) -> Vec<Subspace<F::Elem>> {
    let f = &table.field;
    let d = table.dim();
    let arrows: Vec<usize> = (0..table.arrows.len())
        .filter_map(|a| table.arrow_element(a))
        .collect();
    (0..table.vertex_count())
        .map(|v| {
            let rows_idx = table.starting_at(v);
            let mut data = Vec::new();
            for &i in &rows_idx {
                let mut row = Vec::with_capacity(d * arrows.len());
                for &a in &arrows {
                    let mut prod = table.zero();
                    if table.basis[i].target == table.basis[a].source {
                        for (k, c) in table.basis_product(i, a) {
                            prod[*k] = c.clone();
                        }
                    }
                    row.extend(prod);
                }
                data.push(row);
            }
            let m = Matrix::from_rows(d * arrows.len(), data);
            let k = left_kernel(f, &m);
            let vectors = k
                .basis
                .iter()
                .map(|y| {
                    let mut x = table.zero();
                    for (c, &i) in y.iter().zip(&rows_idx) {
                        x[i] = c.clone();
                    }
                    x
                })
                .collect();
            crate::linalg::span(f, d, vectors)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleReport {
    pub dims: Vec<(String, usize)>,
    pub singular: bool,
    pub elements: Vec<(String, Vec<String>)>,
}

pub fn socle_report<F: Field>(table: &AlgebraTable<F>) -> SocleReport {
    let s = socle(table);
    SocleReport {
        dims: s
            .iter()
            .enumerate()
            .map(|(v, x)| (table.vertices[v].clone(), x.dim()))
            .collect(),
        singular: s.iter().any(|x| x.dim() > 1),
        elements: s
            .iter()
            .enumerate()
            .map(|(v, x)| {
                (
                    table.vertices[v].clone(),
                    x.basis.iter().map(|b| table.format_element(b)).collect(),
                )
            })
            .collect(),
    }
}

/// `C[i][j] = dim e_j A e_i`.
pub fn cartan_matrix<F: Field>(table: &AlgebraTable<F>) -> Vec<Vec<i64>> {
    let b = table.block_dims();
    let n = table.vertex_count();
    (0..n)
        .map(|i| (0..n).map(|j| b[j][i] as i64).collect())
        .collect()
}

/// Exact integer determinant (fraction-free elimination).
pub fn integer_determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// A symmetrizing form, stored by its values on the basis.
#[derive(Clone, Debug)]
pub struct SymmetrizingForm<E> {
    pub values: Vec<E>,
    /// True when the form vanishes off the socle elements `w_i`.
    pub socle_supported: bool,
}

impl<E> SymmetrizingForm<E> {
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: &[E]) -> E {
        let mut acc = field.zero();
        for (c, v) in x.iter().zip(&self.values) {
            if !field.is_zero(c) && !field.is_zero(v) {
                field.add_mul_assign(&mut acc, c, v);
            }
        }
        acc
    }
}

fn commutator_rows<F: Field>(table: &AlgebraTable<F>) -> Vec<SparseVec<F::Elem>> {
    let f = &table.field;
    let d = table.dim();
    let minus_one = f.neg(&f.one());
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut row = SparseVec::new();
            for (k, c) in table.basis_product(i, j) {
                sparse_axpy(f, &mut row, &f.one(), *k, c);
            }
            for (k, c) in table.basis_product(j, i) {
                sparse_axpy(f, &mut row, &minus_one, *k, c);
            }
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

/// The form with `phi(w_i) = 1` (so `phi(B_a) = c_a^{-1}`) and 0 on the other
/// basis elements.
///
/// When that form is not symmetric, the symmetric form with `phi(w_i) = 1`
/// vanishing on as many basis elements as possible (greedily, in basis order)
/// is returned instead. Falls back to the socle form if no symmetric form
/// takes value 1 on every `w_i`.
pub fn symmetrizing_form<F: Field>(table: &AlgebraTable<F>) -> SymmetrizingForm<F::Elem> {
    let f = &table.field;
    let d = table.dim();
    let socle_form: Vec<F::Elem> = table
        .basis
        .iter()
        .map(|b| if b.is_socle { f.one() } else { f.zero() })
        .collect();
    let rows = commutator_rows(table);
    let socle_ok = rows.iter().all(|r| {
        let mut acc = f.zero();
        for (k, c) in r {
            f.add_mul_assign(&mut acc, c, &socle_form[*k]);
        }
        f.is_zero(&acc)
    });
    let fallback = SymmetrizingForm {
        values: socle_form,
        socle_supported: true,
    };
    if socle_ok {
        return fallback;
    }
    // Unknowns are the values on the basis; column `d` holds the constant.
    let mut ech = SparseEchelon::new(f.clone());
    for r in rows {
        ech.insert(r);
    }
    // None: contradicts the system; Some(new): whether the row adds information.
    let check = |ech: &SparseEchelon<F>, row: SparseVec<F::Elem>| {
        let r = ech.reduce(row);
        match r.keys().next() {
            Some(&c) if c == d => None,
            Some(_) => Some(true),
            None => Some(false),
        }
    };
    for (i, b) in table.basis.iter().enumerate() {
        if b.is_socle {
            let row: SparseVec<F::Elem> =
                [(i, f.one()), (d, f.neg(&f.one()))].into_iter().collect();
            match check(&ech, row.clone()) {
                None => return fallback,
                Some(true) => {
                    ech.insert(row);
                }
                Some(false) => {}
            }
        }
    }
    for (i, b) in table.basis.iter().enumerate() {
        if !b.is_socle {
            let row: SparseVec<F::Elem> = [(i, f.one())].into_iter().collect();
            if check(&ech, row.clone()) == Some(true) {
                ech.insert(row);
            }
        }
    }
    let mut values = vec![f.zero(); d];
    for (lead, row) in ech.rows_desc() {
        let mut v = f.zero();
        for (c, x) in row.iter().skip(1) {
            if *c == d {
                v = f.sub(&v, x);
            } else {
                v = f.sub(&v, &f.mul(x, &values[*c]));
            }
        }
        values[lead] = v;
    }
    let socle_supported = table
        .basis
        .iter()
        .zip(&values)
        .all(|(b, v)| b.is_socle || f.is_zero(v));
    SymmetrizingForm {
        values,
        socle_supported,
    }
}

/// Gram matrix `G[i][j] = phi(b_i b_j)`.
pub fn gram_matrix<F: Field>(
    table: &AlgebraTable<F>,
    form: &SymmetrizingForm<F::Elem>,
) -> Matrix<F::Elem> {
    let f = &table.field;
    let d = table.dim();
    let mut g = Matrix::filled(d, d, f.zero());
    for i in 0..d {
        for j in 0..d {
            if table.basis[i].target != table.basis[j].source {
                continue;
            }
            let mut acc = f.zero();
            for (k, c) in table.basis_product(i, j) {
                f.add_mul_assign(&mut acc, c, &form.values[*k]);
            }
            g.data[i][j] = acc;
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricReport {
    pub dimension: usize,
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub gram_rank: usize,
    pub asymmetric_pair: Option<(String, String)>,
    pub socle_supported: bool,
    /// Basis elements off the socle where the form is nonzero.
    pub corrections: Vec<(String, String)>,
}

pub fn symmetric_report<F: Field>(table: &AlgebraTable<F>) -> SymmetricReport {
    let f = &table.field;
    let form = symmetrizing_form(table);
    let g = gram_matrix(table, &form);
    let d = table.dim();
    let mut asymmetric_pair = None;
    'outer: for i in 0..d {
        for j in i + 1..d {
            if g.data[i][j] != g.data[j][i] {
                asymmetric_pair = Some((table.label(i), table.label(j)));
                break 'outer;
            }
        }
    }
    let gram_rank = rank(f, &g);
    let corrections = table
        .basis
        .iter()
        .enumerate()
        .filter(|(i, b)| !b.is_socle && !f.is_zero(&form.values[*i]))
        .map(|(i, _)| (table.label(i), f.to_string(&form.values[i])))
        .collect();
    SymmetricReport {
        dimension: d,
        symmetric: asymmetric_pair.is_none(),
        nondegenerate: gram_rank == d,
        gram_rank,
        asymmetric_pair,
        socle_supported: form.socle_supported,
        corrections,
    }
}

/// Arrow ids of the Gabriel quiver (the non-virtual arrows).
pub fn gabriel_quiver<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> Vec<(String, String, String)> {
    let q = &spec.tq.quiver;
    spec.gabriel_arrows()
        .into_iter()
        .map(|a| {
            (
                q.arrows[a].id.clone(),
                q.vertices[q.source(a)].clone(),
                q.vertices[q.target(a)].clone(),
            )
        })
        .collect()
}

/// Number of Gabriel arrows `j -> i` at `[i][j]`.
pub fn gabriel_arrow_counts<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> Vec<Vec<usize>> {
    let n = spec.vertex_count();
    let mut out = vec![vec![0; n]; n];
    for a in spec.gabriel_arrows() {
        out[spec.tq.target(a)][spec.tq.source(a)] += 1;
    }
    out
}
