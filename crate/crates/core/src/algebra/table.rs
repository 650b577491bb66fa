//! Finite-dimensional algebras given by a basis of paths and structure
//! constants.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::Arrow;

/// Basis element `scale * word` in `e_source A e_target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement<E> {
    pub source: usize,
    pub target: usize,
    pub word: Vec<usize>,
    pub scale: E,
    pub is_socle: bool,
}

#[derive(Clone, Debug)]
pub struct AlgebraTable<F: Field> {
    pub field: F,
    pub kind: String,
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub basis: Vec<BasisElement<F::Elem>>,
    /// Sparse product of basis elements `i` and `j` at `i * dim + j`.
    mult: Vec<Vec<(usize, F::Elem)>>,
    idempotent: Vec<usize>,
    arrow_elem: Vec<Option<usize>>,
}

impl<F: Field> AlgebraTable<F> {
    pub fn new(
        field: F,
        kind: String,
        name: Option<String>,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        basis: Vec<BasisElement<F::Elem>>,
        mult: Vec<Vec<(usize, F::Elem)>>,
    ) -> Result<Self> {
        let d = basis.len();
        if mult.len() != d * d {
            return Err(Error::Consistency(format!(
                "structure constants for {} pairs, expected {}",
                mult.len(),
                d * d
            )));
        }
        let idempotent = (0..vertices.len())
            .map(|v| {
                basis
                    .iter()
                    .position(|b| b.word.is_empty() && b.source == v)
                    .ok_or_else(|| {
                        Error::Consistency(format!("no idempotent for vertex {}", vertices[v]))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let arrow_elem = (0..arrows.len())
            .map(|a| {
                basis
                    .iter()
                    .position(|b| b.word == [a] && field.is_one(&b.scale))
            })
            .collect();
        Ok(AlgebraTable {
            field,
            kind,
            name,
            vertices,
            arrows,
            basis,
            mult,
            idempotent,
            arrow_elem,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotent[v]
    }

    /// Basis index of the arrow `a`, if `a` is a basis element.
    pub fn arrow_element(&self, a: usize) -> Option<usize> {
        self.arrow_elem[a]
    }

    /// Basis index of the socle element of `e_v A`, when the basis has one.
    pub fn socle_element(&self, v: usize) -> Option<usize> {
        self.basis.iter().position(|b| b.is_socle && b.source == v)
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// Basis indices of `e_v A`.
    pub fn starting_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == v)
            .collect()
    }

    /// Basis indices of `A e_v`.
    pub fn ending_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].target == v)
            .collect()
    }

    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::InvalidInput(format!(
                "element lengths {} and {} do not match dimension {d}",
                x.len(),
                y.len()
            )));
        }
        let f = &self.field;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) || self.basis[i].target != self.basis[j].source {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, s) in self.basis_product(i, j) {
                    f.add_mul_assign(&mut out[*k], &c, s);
                }
            }
        }
        Ok(out)
    }

    /// The path `word` starting at `source`, as an element.
    pub fn eval_word(&self, source: usize, word: &[usize]) -> Vec<F::Elem> {
        let mut acc = self.unit(self.idempotent(source));
        for &a in word {
            match self.arrow_elem[a] {
                Some(i) => {
                    acc = self
                        .multiply(&acc, &self.unit(i))
                        .expect("dimensions agree")
                }
                None => return self.zero(),
            }
        }
        acc
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|c| self.field.is_zero(c))
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&a| self.arrows[a].id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn label(&self, i: usize) -> String {
        let b = &self.basis[i];
        if b.word.is_empty() {
            format!("e_{}", self.vertices[b.source])
        } else if b.is_socle {
            format!("w_{}", self.vertices[b.source])
        } else {
            self.word_string(&b.word)
        }
    }

    /// Human-readable linear combination.
    pub fn format_element(&self, x: &[F::Elem]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                let l = self.label(i);
                if self.field.is_one(c) {
                    l
                } else {
                    format!("{}*({l})", self.field.to_string(c))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Sum of the idempotents.
    pub fn one(&self) -> Vec<F::Elem> {
        let mut v = self.zero();
        for &i in &self.idempotent {
            v[i] = self.field.one();
        }
        v
    }

    /// `dim e_i A e_j` for all vertices.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut out = vec![vec![0; n]; n];
        for b in &self.basis {
            out[b.source][b.target] += 1;
        }
        out
    }
}
