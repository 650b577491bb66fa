//! Exact linear algebra over a [`Field`]: dense row reduction for small
//! matrices and a sparse echelon form for the large path spaces.

use std::collections::BTreeMap;

use crate::field::Field;

/// Dense matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(cols: usize, data: Vec<Vec<E>>) -> Self {
        debug_assert!(data.iter().all(|r| r.len() == cols));
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn filled(rows: usize, cols: usize, e: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![e; cols]; rows],
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            data.push((0..self.rows).map(|i| self.data[i][j].clone()).collect());
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

pub fn zero_matrix<F: Field>(field: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, field.zero())
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zero_matrix(field, n, n);
    for i in 0..n {
        m.data[i][i] = field.one();
    }
    m
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = zero_matrix(field, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = &a.data[i][k];
            if field.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                if !field.is_zero(&b.data[k][j]) {
                    let cur = &mut out.data[i][j];
                    field.add_mul_assign(cur, x, &b.data[k][j]);
                }
            }
        }
    }
    out
}

/// Row vector times matrix.
pub fn vec_mat<F: Field>(field: &F, v: &[F::Elem], m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    assert_eq!(v.len(), m.rows);
    let mut out = vec![field.zero(); m.cols];
    for (k, x) in v.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in m.data[k].iter().enumerate() {
            if !field.is_zero(y) {
                field.add_mul_assign(&mut out[j], x, y);
            }
        }
    }
    out
}

pub fn is_zero_vec<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(&m.data[i][c])) else {
            continue;
        };
        m.data.swap(r, p);
        let inv = field.inv(&m.data[r][c]).expect("nonzero pivot");
        for x in m.data[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m.data[r].clone();
        for i in 0..m.rows {
            if i == r || field.is_zero(&m.data[i][c]) {
                continue;
            }
            let factor = m.data[i][c].clone();
            for (x, y) in m.data[i].iter_mut().zip(&pivot_row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut m = m.clone();
    rref(field, &mut m).len()
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let id = identity(field, n);
    let data = m
        .data
        .iter()
        .zip(&id.data)
        .map(|(a, b)| a.iter().chain(b).cloned().collect())
        .collect();
    let mut aug = Matrix::from_rows(2 * n, data);
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let data = aug.data.into_iter().map(|r| r[n..].to_vec()).collect();
    Some(Matrix::from_rows(n, data))
}

/// Subspace of `F^n` held as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<E> {
    pub ambient: usize,
    pub basis: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn span<F: Field>(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Subspace<F::Elem> {
    let mut m = Matrix::from_rows(ambient, vectors);
    let pivots = rref(field, &mut m);
    m.data.truncate(pivots.len());
    Subspace {
        ambient,
        basis: m.data,
        pivots,
    }
}

/// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
pub fn coordinates<F: Field>(
    field: &F,
    s: &Subspace<F::Elem>,
    v: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let coords: Vec<F::Elem> = s.pivots.iter().map(|&p| v[p].clone()).collect();
    let mut rest = v.to_vec();
    for (c, b) in coords.iter().zip(&s.basis) {
        if field.is_zero(c) {
            continue;
        }
        for (x, y) in rest.iter_mut().zip(b) {
            if !field.is_zero(y) {
                *x = field.sub(x, &field.mul(c, y));
            }
        }
    }
    is_zero_vec(field, &rest).then_some(coords)
}

/// Basis of `{ y : y * m = 0 }`, in reduced echelon form.
pub fn left_kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let n = m.rows;
    let data = m
        .data
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let mut aug = Matrix::from_rows(m.cols + n, data);
    let pivots = rref(field, &mut aug);
    let vectors = aug
        .data
        .iter()
        .zip(0..)
        .filter(|(_, i)| pivots.get(*i).is_none_or(|&p| p >= m.cols))
        .map(|(r, _)| r[m.cols..].to_vec())
        .filter(|r| !is_zero_vec(field, r))
        .collect();
    span(field, n, vectors)
}

/// Basis of `{ x : m * x = 0 }`.
pub fn right_kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    left_kernel(field, &m.transpose())
}

pub type SparseVec<E> = BTreeMap<usize, E>;

pub fn sparse_axpy<F: Field>(
    field: &F,
    acc: &mut SparseVec<F::Elem>,
    c: &F::Elem,
    col: usize,
    x: &F::Elem,
) {
    let t = field.mul(c, x);
    if field.is_zero(&t) {
        return;
    }
    match acc.entry(col) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(t);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = field.add(e.get(), &t);
            if field.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Echelon form of sparse rows. The pivot of a row is its smallest column,
/// so column order encodes which coordinates get eliminated first.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        SparseEchelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows keyed by lead column, largest lead first (back-substitution order).
    pub fn rows_desc(&self) -> impl Iterator<Item = (usize, &[(usize, F::Elem)])> + '_ {
        self.rows.iter().rev().map(|(&k, r)| (k, r.as_slice()))
    }

    /// Remainder of `v` modulo the row space; it has no pivot columns and is
    /// independent of insertion history.
    pub fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut cursor = 0;
        loop {
            let Some((&c, coef)) = v.range(cursor..).next() else {
                break;
            };
            if let Some(row) = self.rows.get(&c) {
                let coef = f.neg(coef);
                for (col, x) in row {
                    sparse_axpy(f, &mut v, &coef, *col, x);
                }
                debug_assert!(!v.contains_key(&c));
            }
            cursor = c + 1;
        }
        v
    }

    /// Adds `v` to the row space. Returns the reduced nonzero remainder (with
    /// leading coefficient one) when `v` was independent.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        let r = self.reduce(v);
        let (&lead, lc) = r.iter().next()?;
        let inv = self.field.inv(lc).expect("nonzero");
        let row: Vec<(usize, F::Elem)> = r
            .iter()
            .map(|(&c, x)| (c, self.field.mul(x, &inv)))
            .collect();
        let out = row.iter().cloned().collect();
        self.rows.insert(lead, row);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m(f: &PrimeField, rows: &[&[i64]]) -> Matrix<u64> {
        let cols = rows[0].len();
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernels() {
        let f = PrimeField::new(7).unwrap();
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&f, &a), 2);
        let lk = left_kernel(&f, &a);
        assert_eq!(lk.dim(), 1);
        for y in &lk.basis {
            assert!(is_zero_vec(&f, &vec_mat(&f, y, &a)));
        }
        let rk = right_kernel(&f, &a);
        assert_eq!(rk.dim(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        let a = m(&f, &[&[2, 1], &[1, 1]]);
        let ai = inverse(&f, &a).unwrap();
        assert_eq!(mat_mul(&f, &a, &ai), identity(&f, 2));
        assert!(inverse(&f, &m(&f, &[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn sparse_echelon_normal_forms_are_unique() {
        let f = PrimeField::new(11).unwrap();
        let mut e = SparseEchelon::new(f);
        let v = |pairs: &[(usize, i64)]| {
            pairs
                .iter()
                .map(|&(c, x)| (c, f.from_i64(x)))
                .collect::<SparseVec<u64>>()
        };
        assert!(e.insert(v(&[(0, 1), (2, 3)])).is_some());
        assert!(e.insert(v(&[(1, 1), (2, 1)])).is_some());
        assert!(e.insert(v(&[(0, 2), (1, 2), (2, 8)])).is_none());
        assert_eq!(e.rank(), 2);
        let r = e.reduce(v(&[(0, 1), (1, 1)]));
        assert_eq!(r.keys().copied().collect::<Vec<_>>(), vec![2]);
    }
}
