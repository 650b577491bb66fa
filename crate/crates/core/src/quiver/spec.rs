use std::collections::BTreeMap;

use num_integer::Integer;

use super::{Quiver, TriangulationQuiver, ValidationReport, ViolationCode};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};

/// Field-agnostic description of a weighted surface algebra, as read from a
/// spec file or produced by the catalogue. Multiplicities and weights are
/// keyed by a representative arrow of their `g`-orbit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecDocument {
    pub name: Option<String>,
    pub field: Option<FieldDescriptor>,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub f_cycles: Vec<Vec<String>>,
    pub multiplicity: Vec<(String, u32)>,
    pub weight: Vec<(String, String)>,
}

impl SpecDocument {
    pub fn triangulation(&self) -> Result<TriangulationQuiver> {
        let quiver =
            Quiver::new(self.vertices.clone(), &self.arrows).map_err(Error::InvalidQuiver)?;
        TriangulationQuiver::from_cycles(quiver, &self.f_cycles).map_err(Error::InvalidQuiver)
    }

    /// Resolves orbit data over `field`. Orbits without an entry get
    /// multiplicity 1 and weight 1.
    pub fn instantiate<F: Field>(&self, field: F) -> Result<SurfaceAlgebraSpec<F>> {
        let tq = self.triangulation()?;
        let orbits = tq.orbits().len();
        let mut m: Vec<Option<(u32, String)>> = vec![None; orbits];
        for (rep, value) in &self.multiplicity {
            let a = tq
                .quiver
                .arrow_index(rep)
                .ok_or_else(|| Error::Parse(format!("m given for unknown arrow {rep}")))?;
            if *value == 0 {
                return Err(Error::Parse(format!(
                    "multiplicity of {rep} must be positive"
                )));
            }
            let o = tq.orbit_of(a);
            match &m[o] {
                Some((old, other)) if old != value => {
                    return Err(Error::Parse(format!("conflicting multiplicities {old} (via {other}) and {value} (via {rep}) on one g-orbit")))
                }
                _ => m[o] = Some((*value, rep.clone())),
            }
        }
        let mut c: Vec<Option<(F::Elem, String)>> = vec![None; orbits];
        for (rep, text) in &self.weight {
            let a = tq
                .quiver
                .arrow_index(rep)
                .ok_or_else(|| Error::Parse(format!("c given for unknown arrow {rep}")))?;
            let value = field.parse(text)?;
            if field.is_zero(&value) {
                return Err(Error::Parse(format!(
                    "weight of {rep} vanishes in {}",
                    field.descriptor()
                )));
            }
            let o = tq.orbit_of(a);
            match &c[o] {
                Some((old, other)) if *old != value => {
                    return Err(Error::Parse(format!(
                        "conflicting weights {} (via {other}) and {} (via {rep}) on one g-orbit",
                        field.to_string(old),
                        field.to_string(&value)
                    )))
                }
                _ => c[o] = Some((value, rep.clone())),
            }
        }
        let multiplicity = m.into_iter().map(|x| x.map_or(1, |(v, _)| v)).collect();
        let weight = c
            .into_iter()
            .map(|x| x.map_or_else(|| field.one(), |(v, _)| v))
            .collect();
        let mut spec = SurfaceAlgebraSpec {
            name: self.name.clone(),
            tq,
            multiplicity,
            weight,
            field,
            warnings: Vec::new(),
        };
        for (o, orbit) in spec.tq.orbits().iter().enumerate() {
            let a = orbit[0];
            if spec.is_virtual(a) && !spec.field.is_one(&spec.weight[o]) {
                let w = format!(
                    "virtual orbit {} has weight {}; kept as given since rescaling it changes the other weights",
                    spec.tq.format_cycles(std::slice::from_ref(orbit)),
                    spec.field.to_string(&spec.weight[o])
                );
                log::warn!("{w}");
                spec.warnings.push(w);
            }
        }
        Ok(spec)
    }
}

/// A triangulation quiver with multiplicity and weight on every `g`-orbit.
#[derive(Clone, Debug)]
pub struct SurfaceAlgebraSpec<F: Field> {
    pub name: Option<String>,
    pub tq: TriangulationQuiver,
    /// Indexed by `g`-orbit.
    pub multiplicity: Vec<u32>,
    /// Indexed by `g`-orbit.
    pub weight: Vec<F::Elem>,
    pub field: F,
    pub warnings: Vec<String>,
}

impl<F: Field> SurfaceAlgebraSpec<F> {
    pub fn m(&self, a: usize) -> usize {
        self.multiplicity[self.tq.orbit_of(a)] as usize
    }

    pub fn c(&self, a: usize) -> &F::Elem {
        &self.weight[self.tq.orbit_of(a)]
    }

    pub fn n(&self, a: usize) -> usize {
        self.tq.n(a)
    }

    pub fn q(&self, a: usize) -> usize {
        self.m(a) * self.n(a)
    }

    pub fn is_virtual(&self, a: usize) -> bool {
        self.q(a) == 2
    }

    pub fn arrow_count(&self) -> usize {
        self.tq.arrow_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.tq.vertex_count()
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.arrow_count()
    }

    pub fn virtual_arrows(&self) -> Vec<usize> {
        self.arrows().filter(|&a| self.is_virtual(a)).collect()
    }

    pub fn gabriel_arrows(&self) -> Vec<usize> {
        self.arrows().filter(|&a| !self.is_virtual(a)).collect()
    }

    pub fn max_q(&self) -> usize {
        self.arrows().map(|a| self.q(a)).max().unwrap_or(0)
    }

    /// First `len` arrows of the `g`-cycle starting at `a`.
    pub fn g_walk(&self, a: usize, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(len);
        let mut x = a;
        for _ in 0..len {
            out.push(x);
            x = self.tq.g(x);
        }
        out
    }

    /// `B_a`, of length `q(a)`.
    pub fn b_path(&self, a: usize) -> Vec<usize> {
        self.g_walk(a, self.q(a))
    }

    /// `A_a`, of length `q(a) - 1`.
    pub fn a_path(&self, a: usize) -> Vec<usize> {
        self.g_walk(a, self.q(a) - 1)
    }

    /// `A'_a`, of length `q(a) - 2`, with `a A'_a = A_a`.
    pub fn a_prime_path(&self, a: usize) -> Vec<usize> {
        let mut p = self.a_path(a);
        p.remove(0);
        p
    }

    /// `sum m_O n_O^2` over the `g`-orbits.
    pub fn dimension_formula(&self) -> usize {
        self.tq
            .orbits()
            .iter()
            .enumerate()
            .map(|(o, orb)| self.multiplicity[o] as usize * orb.len() * orb.len())
            .sum()
    }

    pub fn projective_dimension(&self, v: usize) -> usize {
        let (a, b) = self.tq.out_pair(v);
        self.q(a) + self.q(b)
    }

    /// Arrow `a` at `v` whose `c_a B_a` serves as the socle element of `e_v`:
    /// the first non-virtual outgoing arrow.
    pub fn socle_arrow(&self, v: usize) -> usize {
        let (a, b) = self.tq.out_pair(v);
        if self.is_virtual(a) && !self.is_virtual(b) {
            b
        } else {
            a
        }
    }

    /// Lowest common multiple of `q` over all arrows.
    pub fn q_lcm(&self) -> usize {
        self.arrows()
            .map(|a| self.q(a))
            .fold(1, |acc, q| acc.lcm(&q))
    }

    pub fn check_assumptions(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let tq = &self.tq;
        for a in self.arrows() {
            let q = self.q(a);
            if q < 2 {
                report.push(
                    ViolationCode::MultiplicityTooSmall,
                    tq.id(a),
                    format!("m n = {q} < 2 for {}", tq.id(a)),
                );
                continue;
            }
            let b = tq.bar(a);
            if self.q(b) == 2 {
                if tq.is_loop(b) && q < 4 {
                    report.push(
                        ViolationCode::VirtualLoopNeighbourTooShort,
                        tq.id(a),
                        format!(
                            "{} has m n = {q} < 4 next to the virtual loop {}",
                            tq.id(a),
                            tq.id(b)
                        ),
                    );
                } else if !tq.is_loop(b) && q < 3 {
                    report.push(
                        ViolationCode::VirtualNeighbourTooShort,
                        tq.id(a),
                        format!(
                            "{} has m n = {q} < 3 next to the virtual arrow {}",
                            tq.id(a),
                            tq.id(b)
                        ),
                    );
                }
            }
        }
        for v in 0..tq.vertex_count() {
            let (a, b) = tq.out_pair(v);
            if self.q(a) == 2 && self.q(b) == 2 {
                let name = &tq.quiver.vertices[v];
                report.push(
                    ViolationCode::TwoVirtualArrows,
                    name,
                    format!(
                        "both arrows {} and {} at vertex {name} are virtual",
                        tq.id(a),
                        tq.id(b)
                    ),
                );
            }
        }
        report
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&a| self.tq.id(a))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Orbit table `(representative, m, c)` used by reports.
    pub fn orbit_table(&self) -> Vec<(String, usize, u32, String)> {
        self.tq
            .orbits()
            .iter()
            .enumerate()
            .map(|(o, orb)| {
                (
                    self.tq.format_cycles(std::slice::from_ref(orb)),
                    orb.len(),
                    self.multiplicity[o],
                    self.field.to_string(&self.weight[o]),
                )
            })
            .collect()
    }

    /// Round-trippable document; orbit data keyed by the first arrow of each
    /// orbit.
    pub fn to_document(&self) -> SpecDocument {
        let q = &self.tq.quiver;
        let f_cycles = self
            .tq
            .f_orbits()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|a| self.tq.id(a).to_string()).collect())
            .collect();
        let mut multiplicity = Vec::new();
        let mut weight = Vec::new();
        for (o, orb) in self.tq.orbits().iter().enumerate() {
            let rep = self.tq.id(orb[0]).to_string();
            multiplicity.push((rep.clone(), self.multiplicity[o]));
            weight.push((rep, self.field.to_string(&self.weight[o])));
        }
        SpecDocument {
            name: self.name.clone(),
            field: Some(self.field.descriptor()),
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.id.clone(),
                        q.vertices[a.source].clone(),
                        q.vertices[a.target].clone(),
                    )
                })
                .collect(),
            f_cycles,
            multiplicity,
            weight,
        }
    }

    /// Map from vertex id to index, handy for callers that address vertices by name.
    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.tq
            .quiver
            .vertex_index(id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {id}")))
    }

    pub fn arrow(&self, id: &str) -> Result<usize> {
        self.tq
            .quiver
            .arrow_index(id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown arrow {id}")))
    }

    /// Multiplicities keyed by orbit representative id.
    pub fn multiplicity_map(&self) -> BTreeMap<String, u32> {
        self.tq
            .orbits()
            .iter()
            .enumerate()
            .map(|(o, orb)| (self.tq.id(orb[0]).to_string(), self.multiplicity[o]))
            .collect()
    }
}
