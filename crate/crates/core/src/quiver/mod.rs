//! Quivers, triangulation quivers and the data of a weighted surface algebra.

mod catalogue;
mod spec;
mod text;
mod validate;

use serde::Serialize;

pub use catalogue::{builtin, builtin_names, BuiltinParams};
pub use spec::{SpecDocument, SurfaceAlgebraSpec};
pub use text::{parse_spec_text, write_spec_text};
pub use validate::{
    permutation_from_cycles, validate_triangulation_quiver, ValidationReport, Violation,
    ViolationCode,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Arrows are kept sorted by id so that arrow indices follow
/// the lexicographic order used for canonical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(id, source, target)` with vertex ids. Fails on unknown
    /// vertices; duplicates are left for [`validate_triangulation_quiver`].
    pub fn new(
        vertices: Vec<String>,
        arrows: &[(String, String, String)],
    ) -> Result<Quiver, ValidationReport> {
        let mut report = ValidationReport::default();
        let mut out = Vec::new();
        for (id, s, t) in arrows {
            let find = |v: &String| vertices.iter().position(|x| x == v);
            match (find(s), find(t)) {
                (Some(source), Some(target)) => out.push(Arrow {
                    id: id.clone(),
                    source,
                    target,
                }),
                _ => report.push(
                    ViolationCode::UnknownVertex,
                    id,
                    format!("arrow {id} has an endpoint outside the vertex set"),
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.binary_search_by(|a| a.id.as_str().cmp(id)).ok()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].source
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].target
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == v)
            .collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].target == v)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A validated triangulation quiver with the derived permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationQuiver {
    pub quiver: Quiver,
    f: Vec<usize>,
    bar: Vec<usize>,
    g: Vec<usize>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl TriangulationQuiver {
    /// Validates `(quiver, f)` and derives `bar`, `g` and the `g`-orbits.
    pub fn new(quiver: Quiver, f: Vec<usize>) -> Result<TriangulationQuiver, ValidationReport> {
        let report = validate_triangulation_quiver(&quiver, &f);
        if !report.ok() {
            return Err(report);
        }
        let n = quiver.arrows.len();
        let mut bar = vec![0; n];
        for v in 0..quiver.vertices.len() {
            let out = quiver.out_arrows(v);
            bar[out[0]] = out[1];
            bar[out[1]] = out[0];
        }
        let g: Vec<usize> = (0..n).map(|a| bar[f[a]]).collect();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for a in 0..n {
            if orbit_of[a] != usize::MAX {
                continue;
            }
            let mut orbit = vec![a];
            orbit_of[a] = orbits.len();
            let mut b = g[a];
            while b != a {
                orbit_of[b] = orbits.len();
                orbit.push(b);
                b = g[b];
            }
            orbits.push(orbit);
        }
        Ok(TriangulationQuiver {
            quiver,
            f,
            bar,
            g,
            orbit_of,
            orbits,
        })
    }

    pub fn from_cycles(
        quiver: Quiver,
        cycles: &[Vec<String>],
    ) -> Result<TriangulationQuiver, ValidationReport> {
        let f = permutation_from_cycles(&quiver, cycles)?;
        TriangulationQuiver::new(quiver, f)
    }

    pub fn arrow_count(&self) -> usize {
        self.f.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn id(&self, a: usize) -> &str {
        &self.quiver.arrows[a].id
    }

    pub fn source(&self, a: usize) -> usize {
        self.quiver.source(a)
    }

    pub fn target(&self, a: usize) -> usize {
        self.quiver.target(a)
    }

    pub fn f(&self, a: usize) -> usize {
        self.f[a]
    }

    pub fn f_perm(&self) -> &[usize] {
        &self.f
    }

    pub fn bar(&self, a: usize) -> usize {
        self.bar[a]
    }

    pub fn g(&self, a: usize) -> usize {
        self.g[a]
    }

    pub fn g_perm(&self) -> &[usize] {
        &self.g
    }

    pub fn is_loop(&self, a: usize) -> bool {
        self.source(a) == self.target(a)
    }

    /// Index of the `g`-orbit containing `a`.
    pub fn orbit_of(&self, a: usize) -> usize {
        self.orbit_of[a]
    }

    /// The `g`-orbits, each starting at its smallest arrow and following `g`.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Length `n_a` of the `g`-orbit of `a`.
    pub fn n(&self, a: usize) -> usize {
        self.orbits[self.orbit_of[a]].len()
    }

    /// The two arrows starting at `v`, in index order.
    pub fn out_pair(&self, v: usize) -> (usize, usize) {
        let out = self.quiver.out_arrows(v);
        (out[0], out[1])
    }

    /// The `f`-orbits, each starting at its smallest arrow.
    pub fn f_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.f.len()];
        let mut out = Vec::new();
        for a in 0..self.f.len() {
            if seen[a] {
                continue;
            }
            let mut orbit = vec![a];
            seen[a] = true;
            let mut b = self.f[a];
            while b != a {
                seen[b] = true;
                orbit.push(b);
                b = self.f[b];
            }
            out.push(orbit);
        }
        out
    }

    pub fn format_cycles(&self, cycles: &[Vec<usize>]) -> String {
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&a| self.id(a)).collect::<Vec<_>>().join(" ")
                )
            })
            .collect::<Vec<_>>()
            .join("")
    }
}
