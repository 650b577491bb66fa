//! Homomorphism spaces and isomorphism search.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::module::{ModuleMap, RightModule};
use crate::field::Field;
use crate::linalg::{inverse, right_kernel, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoVerdict {
    Yes,
    No,
    Undetermined,
}

/// Enumerate every element of Hom when it has at most this many elements.
const ENUMERATION_LIMIT: u128 = 1 << 14;
const RANDOM_TRIALS: usize = 64;

/// Basis of `Hom(M, N)`: graded matrices `X` with `A_M(a) X = X A_N(a)`.
pub fn hom_space<F: Field>(m: &RightModule<F>, n: &RightModule<F>) -> Vec<ModuleMap<F>> {
    let f = &m.field;
    let (dm, dn) = (m.dim(), n.dim());
    // Unknowns: entries X[k][l] with matching vertices.
    let vars: Vec<(usize, usize)> = (0..dm)
        .flat_map(|k| (0..dn).map(move |l| (k, l)))
        .filter(|&(k, l)| m.vertex[k] == n.vertex[l])
        .collect();
    if vars.is_empty() {
        return Vec::new();
    }
    let mut var_of = vec![vec![usize::MAX; dn]; dm];
    for (i, &(k, l)) in vars.iter().enumerate() {
        var_of[k][l] = i;
    }
    let mut rows = Vec::new();
    for (am, an) in m.action.iter().zip(&n.action) {
        // (A_M X - X A_N)[k][l] = sum_r A_M[k][r] X[r][l] - sum_r X[k][r] A_N[r][l]
        for k in 0..dm {
            for l in 0..dn {
                let mut row = vec![f.zero(); vars.len()];
                let mut any = false;
                for r in 0..dm {
                    let v = var_of[r][l];
                    if v != usize::MAX && !f.is_zero(&am.data[k][r]) {
                        row[v] = f.add(&row[v], &am.data[k][r]);
                        any = true;
                    }
                }
                for r in 0..dn {
                    let v = var_of[k][r];
                    if v != usize::MAX && !f.is_zero(&an.data[r][l]) {
                        row[v] = f.sub(&row[v], &an.data[r][l]);
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        crate::linalg::span(
            f,
            vars.len(),
            (0..vars.len()).map(|i| unit(f, vars.len(), i)).collect(),
        )
    } else {
        right_kernel(f, &Matrix::from_rows(vars.len(), rows))
    };
    sol.basis
        .iter()
        .map(|x| {
            let mut mat = Matrix::filled(dm, dn, f.zero());
            for (i, &(k, l)) in vars.iter().enumerate() {
                mat.data[k][l] = x[i].clone();
            }
            ModuleMap { matrix: mat }
        })
        .collect()
}

fn unit<F: Field>(f: &F, n: usize, k: usize) -> Vec<F::Elem> {
    (0..n)
        .map(|i| if i == k { f.one() } else { f.zero() })
        .collect()
}

fn combine<F: Field>(f: &F, basis: &[ModuleMap<F>], coeffs: &[F::Elem]) -> Matrix<F::Elem> {
    let m0 = &basis[0].matrix;
    let mut out = Matrix::filled(m0.rows, m0.cols, f.zero());
    for (b, c) in basis.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        for (ro, rb) in out.data.iter_mut().zip(&b.matrix.data) {
            for (x, y) in ro.iter_mut().zip(rb) {
                f.add_mul_assign(x, c, y);
            }
        }
    }
    out
}

/// Isomorphism test. `No` is returned when the dimension vectors differ or
/// when an exhaustive search of `Hom(M, N)` finds no invertible map; a
/// randomized search that fails reports `Undetermined`.
pub fn modules_isomorphic<F: Field>(
    m: &RightModule<F>,
    n: &RightModule<F>,
    vertices: usize,
    seed: u64,
) -> IsoVerdict {
    if m.dim_vector(vertices) != n.dim_vector(vertices) {
        return IsoVerdict::No;
    }
    if m.dim() == 0 {
        return IsoVerdict::Yes;
    }
    let f = &m.field;
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return IsoVerdict::No;
    }
    let invertible = |coeffs: &[F::Elem]| inverse(f, &combine(f, &basis, coeffs)).is_some();
    let h = basis.len() as u32;
    let exhaustive = f
        .order()
        .and_then(|q| (q as u128).checked_pow(h))
        .filter(|&total| total <= ENUMERATION_LIMIT);
    if let (Some(total), Some(q)) = (exhaustive, f.order()) {
        for idx in 0..total {
            let mut rest = idx;
            let coeffs: Vec<F::Elem> = (0..h)
                .map(|_| {
                    let d = (rest % q as u128) as u64;
                    rest /= q as u128;
                    f.nth(d)
                })
                .collect();
            if invertible(&coeffs) {
                return IsoVerdict::Yes;
            }
        }
        return IsoVerdict::No;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<F::Elem> = (0..h).map(|_| f.random(&mut rng)).collect();
        if invertible(&coeffs) {
            return IsoVerdict::Yes;
        }
    }
    IsoVerdict::Undetermined
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraKind};
    use crate::field::PrimeField;
    use crate::quiver::{builtin, BuiltinParams};
    use crate::resolution::module::{projective_module, simple_module, syzygy};

    #[test]
    fn simples_and_projectives() {
        let spec = builtin("disc", &BuiltinParams::new())
            .unwrap()
            .instantiate(PrimeField::new(5).unwrap())
            .unwrap();
        let t = build_algebra(&spec, AlgebraKind::Weighted).unwrap();
        let s1 = simple_module(&t, 0).unwrap();
        let s2 = simple_module(&t, 1).unwrap();
        assert_eq!(modules_isomorphic(&s1, &s1, 2, 0), IsoVerdict::Yes);
        assert_eq!(modules_isomorphic(&s1, &s2, 2, 0), IsoVerdict::No);
        let p = projective_module(&t, 0).unwrap();
        assert_eq!(modules_isomorphic(&p, &p, 2, 0), IsoVerdict::Yes);
        let mut o = s1.clone();
        for _ in 0..4 {
            o = syzygy(&t, &o).unwrap();
        }
        assert_eq!(modules_isomorphic(&o, &s1, 2, 0), IsoVerdict::Yes);
        let o1 = syzygy(&t, &s1).unwrap();
        let o3 = syzygy(&t, &syzygy(&t, &o1).unwrap()).unwrap();
        assert_ne!(modules_isomorphic(&o1, &o3, 2, 0), IsoVerdict::Yes);
    }
}
