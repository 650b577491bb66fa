//! Finite-dimensional right modules given by arrow actions.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{
    coordinates, is_zero_vec, left_kernel, mat_mul, rank, span, vec_mat, zero_matrix, Matrix,
    Subspace,
};

/// A right module with a basis adapted to the vertex decomposition: basis
/// vector `k` lies in `M e_{vertex[k]}`. Vectors are rows and arrows act on the
/// right, `m . a = m * action[a]`.
#[derive(Clone, Debug)]
pub struct RightModule<F: Field> {
    pub field: F,
    pub vertex: Vec<usize>,
    pub action: Vec<Matrix<F::Elem>>,
}

/// A homomorphism `x -> x * matrix`.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub matrix: Matrix<F::Elem>,
}

impl<F: Field> RightModule<F> {
    pub fn dim(&self) -> usize {
        self.vertex.len()
    }

    pub fn dim_vector(&self, vertices: usize) -> Vec<usize> {
        let mut out = vec![0; vertices];
        for &v in &self.vertex {
            out[v] += 1;
        }
        out
    }

    pub fn block(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.vertex[k] == v).collect()
    }

    /// `m . word`, for `m` in `M e_source`.
    pub fn act_word(&self, m: &[F::Elem], word: &[usize]) -> Vec<F::Elem> {
        let mut x = m.to_vec();
        for &a in word {
            x = vec_mat(&self.field, &x, &self.action[a]);
        }
        x
    }

    /// `m . b` for the basis element `b` of `table`.
    pub fn act_basis(&self, table: &AlgebraTable<F>, m: &[F::Elem], b: usize) -> Vec<F::Elem> {
        let el = &table.basis[b];
        let f = &self.field;
        let mut x: Vec<F::Elem> = m
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if self.vertex[k] == el.source {
                    c.clone()
                } else {
                    f.zero()
                }
            })
            .collect();
        x = self.act_word(&x, &el.word);
        x.iter().map(|c| f.mul(c, &el.scale)).collect()
    }

    /// Checks that the actions respect the grading and that every product of
    /// basis elements acts as prescribed by the table.
    pub fn check(&self, table: &AlgebraTable<F>) -> Result<()> {
        let f = &self.field;
        for (a, m) in self.action.iter().enumerate() {
            let (s, t) = (table.arrows[a].source, table.arrows[a].target);
            for k in 0..self.dim() {
                for l in 0..self.dim() {
                    if !f.is_zero(&m.data[k][l]) && (self.vertex[k] != s || self.vertex[l] != t) {
                        return Err(Error::Consistency(format!(
                            "arrow {} does not respect the grading",
                            table.arrows[a].id
                        )));
                    }
                }
            }
        }
        let d = table.dim();
        for k in 0..self.dim() {
            let m = unit(f, self.dim(), k);
            for i in 0..d {
                let x = self.act_basis(table, &m, i);
                for j in 0..d {
                    if table.basis[i].target != table.basis[j].source {
                        continue;
                    }
                    let lhs = self.act_basis(table, &x, j);
                    let mut rhs = vec![f.zero(); self.dim()];
                    for (kk, c) in table.basis_product(i, j) {
                        let y = self.act_basis(table, &m, *kk);
                        for (r, yv) in rhs.iter_mut().zip(&y) {
                            f.add_mul_assign(r, c, yv);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Consistency(format!(
                            "module action is not associative on {} * {}",
                            table.label(i),
                            table.label(j)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn unit<F: Field>(f: &F, n: usize, k: usize) -> Vec<F::Elem> {
    (0..n)
        .map(|i| if i == k { f.one() } else { f.zero() })
        .collect()
}

/// Arrow action matrices on the span of `rows` (a basis of a submodule of
/// `m`, each row homogeneous), in the coordinates of those rows.
fn restrict<F: Field>(
    m: &RightModule<F>,
    blocks: &[(usize, Subspace<F::Elem>)],
) -> Result<RightModule<F>> {
    let f = &m.field;
    let mut vertex = Vec::new();
    let mut offset = vec![0usize; blocks.len()];
    let mut block_of_vertex = std::collections::HashMap::new();
    for (bi, (v, s)) in blocks.iter().enumerate() {
        offset[bi] = vertex.len();
        block_of_vertex.insert(*v, bi);
        vertex.extend(std::iter::repeat_n(*v, s.dim()));
    }
    let n = vertex.len();
    let mut action = Vec::with_capacity(m.action.len());
    for a in &m.action {
        let mut mat = zero_matrix(f, n, n);
        for (bi, (_, s)) in blocks.iter().enumerate() {
            for (r, x) in s.basis.iter().enumerate() {
                let y = vec_mat(f, x, a);
                if is_zero_vec(f, &y) {
                    continue;
                }
                let tv = (0..y.len())
                    .find(|&k| !f.is_zero(&y[k]))
                    .map(|k| m.vertex[k])
                    .expect("nonzero");
                let bj = *block_of_vertex.get(&tv).ok_or_else(|| {
                    Error::Consistency("submodule is not closed under the action".into())
                })?;
                let c = coordinates(f, &blocks[bj].1, &y).ok_or_else(|| {
                    Error::Consistency("submodule is not closed under the action".into())
                })?;
                for (l, cv) in c.into_iter().enumerate() {
                    mat.data[offset[bi] + r][offset[bj] + l] = cv;
                }
            }
        }
        action.push(mat);
    }
    Ok(RightModule {
        field: f.clone(),
        vertex,
        action,
    })
}

pub fn simple_module<F: Field>(table: &AlgebraTable<F>, v: usize) -> Result<RightModule<F>> {
    if v >= table.vertex_count() {
        return Err(Error::InvalidInput(format!("unknown vertex index {v}")));
    }
    let f = &table.field;
    Ok(RightModule {
        field: f.clone(),
        vertex: vec![v],
        action: table.arrows.iter().map(|_| zero_matrix(f, 1, 1)).collect(),
    })
}

/// `e_v A` with the right regular action, in the basis `table.starting_at(v)`.
pub fn projective_module<F: Field>(table: &AlgebraTable<F>, v: usize) -> Result<RightModule<F>> {
    if v >= table.vertex_count() {
        return Err(Error::InvalidInput(format!("unknown vertex index {v}")));
    }
    let f = &table.field;
    let idx = table.starting_at(v);
    let mut local = vec![usize::MAX; table.dim()];
    for (l, &i) in idx.iter().enumerate() {
        local[i] = l;
    }
    let n = idx.len();
    let vertex = idx.iter().map(|&i| table.basis[i].target).collect();
    let mut action = Vec::with_capacity(table.arrows.len());
    for a in 0..table.arrows.len() {
        let mut mat = zero_matrix(f, n, n);
        if let Some(ae) = table.arrow_element(a) {
            for (l, &i) in idx.iter().enumerate() {
                if table.basis[i].target != table.arrows[a].source {
                    continue;
                }
                for (k, c) in table.basis_product(i, ae) {
                    mat.data[l][local[*k]] = c.clone();
                }
            }
        }
        action.push(mat);
    }
    Ok(RightModule {
        field: f.clone(),
        vertex,
        action,
    })
}

/// Direct sum, blocks in the given order.
pub fn direct_sum<F: Field>(field: &F, parts: &[RightModule<F>], arrows: usize) -> RightModule<F> {
    let n: usize = parts.iter().map(|p| p.dim()).sum();
    let mut vertex = Vec::with_capacity(n);
    let mut action: Vec<Matrix<F::Elem>> = (0..arrows).map(|_| zero_matrix(field, n, n)).collect();
    let mut off = 0;
    for p in parts {
        for (a, m) in p.action.iter().enumerate() {
            for k in 0..p.dim() {
                for l in 0..p.dim() {
                    action[a].data[off + k][off + l] = m.data[k][l].clone();
                }
            }
        }
        vertex.extend(&p.vertex);
        off += p.dim();
    }
    RightModule {
        field: field.clone(),
        vertex,
        action,
    }
}

/// Per-vertex generators of a complement of `M rad` in `M`.
pub fn top_generators<F: Field>(m: &RightModule<F>, vertices: usize) -> Vec<(usize, Vec<F::Elem>)> {
    let f = &m.field;
    let n = m.dim();
    let mut out = Vec::new();
    for v in 0..vertices {
        let block = m.block(v);
        if block.is_empty() {
            continue;
        }
        let mut vectors = Vec::new();
        for k in 0..n {
            let e = unit(f, n, k);
            for a in &m.action {
                let y = vec_mat(f, &e, a);
                if !is_zero_vec(f, &y) && block.iter().any(|&b| !f.is_zero(&y[b])) {
                    vectors.push(y);
                }
            }
        }
        let mut r = rank_of(f, n, &vectors);
        for &b in &block {
            let e = unit(f, n, b);
            vectors.push(e.clone());
            let r2 = rank_of(f, n, &vectors);
            if r2 > r {
                r = r2;
                out.push((v, e));
            } else {
                vectors.pop();
            }
        }
    }
    out
}

fn rank_of<F: Field>(f: &F, n: usize, vectors: &[Vec<F::Elem>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(f, &Matrix::from_rows(n, vectors.to_vec()))
}

/// A projective cover `P -> M` together with its summand vertices.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub summands: Vec<usize>,
    pub module: RightModule<F>,
    pub map: ModuleMap<F>,
}

pub fn projective_cover<F: Field>(
    table: &AlgebraTable<F>,
    m: &RightModule<F>,
) -> Result<ProjectiveCover<F>> {
    if m.dim() == 0 {
        return Err(Error::InvalidInput(
            "projective cover of the zero module".into(),
        ));
    }
    let f = &table.field;
    let gens = top_generators(m, table.vertex_count());
    let mut parts = Vec::new();
    let mut rows = Vec::new();
    for (v, t) in &gens {
        parts.push(projective_module(table, *v)?);
        for b in table.starting_at(*v) {
            rows.push(m.act_basis(table, t, b));
        }
    }
    let module = direct_sum(f, &parts, table.arrows.len());
    let matrix = Matrix::from_rows(m.dim(), rows);
    if rank(f, &matrix) != m.dim() {
        return Err(Error::Consistency(
            "projective cover is not surjective".into(),
        ));
    }
    Ok(ProjectiveCover {
        summands: gens.iter().map(|(v, _)| *v).collect(),
        module,
        map: ModuleMap { matrix },
    })
}

/// Kernel of a graded map, with the induced action.
pub fn kernel<F: Field>(
    p: &RightModule<F>,
    map: &ModuleMap<F>,
    vertices: usize,
) -> Result<RightModule<F>> {
    let f = &p.field;
    let mut blocks = Vec::new();
    for v in 0..vertices {
        let block = p.block(v);
        if block.is_empty() {
            continue;
        }
        let sub = Matrix::from_rows(
            map.matrix.cols,
            block.iter().map(|&k| map.matrix.data[k].clone()).collect(),
        );
        let k = left_kernel(f, &sub);
        if k.dim() == 0 {
            continue;
        }
        let vectors = k
            .basis
            .iter()
            .map(|y| {
                let mut x = vec![f.zero(); p.dim()];
                for (c, &b) in y.iter().zip(&block) {
                    x[b] = c.clone();
                }
                x
            })
            .collect();
        blocks.push((v, span(f, p.dim(), vectors)));
    }
    restrict(p, &blocks)
}

/// `Omega(M)`, the kernel of the projective cover, and the cover itself.
pub fn syzygy_with_cover<F: Field>(
    table: &AlgebraTable<F>,
    m: &RightModule<F>,
) -> Result<(RightModule<F>, ProjectiveCover<F>)> {
    let cover = projective_cover(table, m)?;
    let k = kernel(&cover.module, &cover.map, table.vertex_count())?;
    if k.dim() + m.dim() != cover.module.dim() {
        return Err(Error::Consistency(
            "rank and kernel dimensions disagree".into(),
        ));
    }
    Ok((k, cover))
}

pub fn syzygy<F: Field>(table: &AlgebraTable<F>, m: &RightModule<F>) -> Result<RightModule<F>> {
    Ok(syzygy_with_cover(table, m)?.0)
}

/// Checks `x . a` commutes with the map for every arrow.
pub fn is_homomorphism<F: Field>(
    m: &RightModule<F>,
    n: &RightModule<F>,
    map: &ModuleMap<F>,
) -> bool {
    let f = &m.field;
    m.action
        .iter()
        .zip(&n.action)
        .all(|(am, an)| mat_mul(f, am, &map.matrix).data == mat_mul(f, &map.matrix, an).data)
}
