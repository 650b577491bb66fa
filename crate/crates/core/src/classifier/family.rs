//! Recognition of the exceptional families.
//!
//! A spec with `v <= 0` somewhere is compared against the quivers of the
//! catalogue: an `f`-compatible isomorphism onto a family quiver whose `q`
//! values agree identifies the family. No isomorphism of algebras is
//! searched for.

use std::fmt;

use serde::Serialize;

use super::profile::{is_exceptional_triple, v_profile, VProfile};
use crate::algebra::{build_algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::{
    builtin, BuiltinParams, SpecDocument, SurfaceAlgebraSpec, TriangulationQuiver,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Generic,
    Disc,
    Triangle,
    Sigma,
    Tetrahedral,
    Spherical,
    #[serde(rename = "S_r")]
    SR,
    #[serde(rename = "Sigma_r")]
    SigmaR,
    #[serde(rename = "Omega_r")]
    OmegaR,
    Phi,
    #[serde(rename = "Psi_r")]
    PsiR,
    /// `v <= 0` somewhere, but no family quiver fits.
    NoMatch,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Generic => "Generic",
            Family::Disc => "Disc",
            Family::Triangle => "Triangle",
            Family::Sigma => "Sigma",
            Family::Tetrahedral => "Tetrahedral",
            Family::Spherical => "Spherical",
            Family::SR => "S_r",
            Family::SigmaR => "Sigma_r",
            Family::OmegaR => "Omega_r",
            Family::Phi => "Phi",
            Family::PsiR => "Psi_r",
            Family::NoMatch => "NoMatch",
        }
    }

    /// Families with a one-parameter normal form and a singular value.
    pub fn has_singular_value(self) -> bool {
        matches!(
            self,
            Family::Disc
                | Family::Triangle
                | Family::Sigma
                | Family::Tetrahedral
                | Family::Spherical
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

struct Template {
    family: Family,
    builtin: &'static str,
    /// Arrow whose `q` determines `r`, with `q = per * r`.
    key: Option<(&'static str, u64)>,
    min_r: u64,
}

const TEMPLATES: &[Template] = &[
    Template {
        family: Family::Disc,
        builtin: "disc",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::OmegaR,
        builtin: "Omega_r",
        key: Some(("alpha", 1)),
        min_r: 4,
    },
    Template {
        family: Family::Tetrahedral,
        builtin: "tetrahedral",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::Triangle,
        builtin: "triangle",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::Sigma,
        builtin: "sigma",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::SigmaR,
        builtin: "Sigma_r",
        key: Some(("eta", 1)),
        min_r: 3,
    },
    Template {
        family: Family::Spherical,
        builtin: "spherical",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::SR,
        builtin: "S_r",
        key: Some(("epsilon", 2)),
        min_r: 2,
    },
    Template {
        family: Family::Phi,
        builtin: "Phi",
        key: None,
        min_r: 0,
    },
    Template {
        family: Family::PsiR,
        builtin: "Psi_r",
        key: Some(("rho", 1)),
        min_r: 2,
    },
];

/// `q` per arrow of a document, without choosing a field.
fn document_q(doc: &SpecDocument) -> Result<(TriangulationQuiver, Vec<u64>)> {
    let tq = doc.triangulation()?;
    let mut m = vec![1u64; tq.orbits().len()];
    for (rep, value) in &doc.multiplicity {
        let a = tq
            .quiver
            .arrow_index(rep)
            .ok_or_else(|| Error::Parse(format!("unknown arrow {rep}")))?;
        m[tq.orbit_of(a)] = *value as u64;
    }
    let q = (0..tq.arrow_count())
        .map(|a| m[tq.orbit_of(a)] * tq.n(a) as u64)
        .collect();
    Ok((tq, q))
}

/// Arrow maps `a -> phi(a)` from `x` onto `y` commuting with `f` and `bar`.
/// Such a map also respects sources and targets.
pub fn triangulation_isomorphisms(
    x: &TriangulationQuiver,
    y: &TriangulationQuiver,
) -> Vec<Vec<usize>> {
    let n = x.arrow_count();
    if n != y.arrow_count() || x.vertex_count() != y.vertex_count() || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    'start: for image in 0..n {
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        phi[0] = image;
        used[image] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for (next, next_image) in [(x.f(a), y.f(phi[a])), (x.bar(a), y.bar(phi[a]))] {
                if phi[next] == usize::MAX {
                    if used[next_image] {
                        continue 'start;
                    }
                    phi[next] = next_image;
                    used[next_image] = true;
                    stack.push(next);
                } else if phi[next] != next_image {
                    continue 'start;
                }
            }
        }
        if phi.contains(&usize::MAX) {
            continue;
        }
        let mut vmap = vec![usize::MAX; x.vertex_count()];
        for a in 0..n {
            for (u, w) in [
                (x.source(a), y.source(phi[a])),
                (x.target(a), y.target(phi[a])),
            ] {
                if vmap[u] == usize::MAX {
                    vmap[u] = w;
                } else if vmap[u] != w {
                    continue 'start;
                }
            }
        }
        out.push(phi);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub arrow: String,
    pub v: i64,
    /// `(q(a), q(f a), q(f^2 a))`.
    pub triple: [u64; 3],
    pub in_triple_list: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularParameter {
    /// The weight combination that is the parameter of the normal form; for
    /// `Sigma` it is the square of the parameter.
    pub normalized: String,
    pub formula: String,
    pub singular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    pub family: Family,
    /// `r` for the families indexed by it.
    pub r: Option<u64>,
    pub profile: VProfile,
    pub witnesses: Vec<Witness>,
    pub singular_parameter: Option<SingularParameter>,
    /// Spec arrow id to family quiver arrow id.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub arrow_map: Vec<(String, String)>,
}

/// A match against a family quiver: the family, `r`, and the spec arrow
/// sent to each family arrow id.
pub struct FamilyMatch {
    pub family: Family,
    pub r: Option<u64>,
    pub template: TriangulationQuiver,
    /// `phi[a]` is the family arrow matching spec arrow `a`.
    pub phi: Vec<usize>,
}

impl FamilyMatch {
    /// The spec arrow that plays the role of the family arrow `id`.
    pub fn spec_arrow(&self, id: &str) -> usize {
        let t = self
            .template
            .quiver
            .arrow_index(id)
            .expect("family arrow ids are fixed");
        self.phi
            .iter()
            .position(|&p| p == t)
            .expect("phi is a bijection")
    }
}

pub fn match_family<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> Result<Option<FamilyMatch>> {
    let q: Vec<u64> = spec.arrows().map(|a| spec.q(a) as u64).collect();
    for t in TEMPLATES {
        let base = builtin(t.builtin, &BuiltinParams::new())?;
        let (tq, _) = document_q(&base)?;
        for phi in triangulation_isomorphisms(&spec.tq, &tq) {
            let (doc, r) = match t.key {
                None => (base.clone(), None),
                Some((key, per)) => {
                    let k = tq
                        .quiver
                        .arrow_index(key)
                        .expect("family arrow ids are fixed");
                    let a = phi.iter().position(|&p| p == k).expect("bijection");
                    if !q[a].is_multiple_of(per) || q[a] / per < t.min_r {
                        continue;
                    }
                    let r = q[a] / per;
                    let mut p = BuiltinParams::new();
                    p.insert("r".into(), r.to_string());
                    (builtin(t.builtin, &p)?, Some(r))
                }
            };
            let (_, tq_q) = document_q(&doc)?;
            if spec.arrows().all(|a| q[a] == tq_q[phi[a]]) {
                return Ok(Some(FamilyMatch {
                    family: t.family,
                    r,
                    template: tq.clone(),
                    phi,
                }));
            }
        }
    }
    Ok(None)
}

/// The normalized parameter of the one-parameter families.
fn singular_parameter<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    m: &FamilyMatch,
) -> Option<SingularParameter> {
    let f = &spec.field;
    let c = |id: &str| spec.c(m.spec_arrow(id)).clone();
    let prod = |ids: &[&str]| ids.iter().fold(f.one(), |acc, id| f.mul(&acc, &c(id)));
    let (value, formula) = match m.family {
        Family::Disc => (prod(&["alpha", "beta"]), "c(alpha) c(beta)"),
        Family::Tetrahedral => (
            prod(&["alpha", "beta", "gamma", "sigma"]),
            "c(alpha) c(beta) c(gamma) c(sigma)",
        ),
        Family::Triangle => (
            prod(&["alpha1", "alpha2", "alpha3", "alpha3"]),
            "c(alpha1) c(alpha2) c(alpha3)^2",
        ),
        Family::Spherical => (
            prod(&["alpha", "rho", "xi", "epsilon"]),
            "c(alpha) c(rho) c(xi) c(epsilon)",
        ),
        Family::Sigma => (
            prod(&["alpha", "beta", "beta", "eta"]),
            "c(alpha) c(beta)^2 c(eta)",
        ),
        _ => return None,
    };
    Some(SingularParameter {
        singular: f.is_one(&value),
        normalized: f.to_string(&value),
        formula: formula.to_string(),
    })
}

pub fn classify<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> Result<ClassificationResult> {
    let report = spec.check_assumptions();
    if !report.ok() {
        return Err(Error::AssumptionViolated(report));
    }
    let profile = v_profile(spec);
    let tq = &spec.tq;
    let witnesses: Vec<Witness> = spec
        .arrows()
        .filter(|&a| profile.v[a] <= 0)
        .map(|a| {
            let triple = [profile.q[a], profile.q[tq.f(a)], profile.q[tq.f(tq.f(a))]];
            Witness {
                arrow: tq.id(a).to_string(),
                v: profile.v[a],
                triple,
                in_triple_list: is_exceptional_triple(triple),
            }
        })
        .collect();
    if witnesses.is_empty() {
        return Ok(ClassificationResult {
            family: Family::Generic,
            r: None,
            profile,
            witnesses,
            singular_parameter: None,
            arrow_map: Vec::new(),
        });
    }
    match match_family(spec)? {
        Some(m) => Ok(ClassificationResult {
            family: m.family,
            r: m.r,
            singular_parameter: singular_parameter(spec, &m),
            arrow_map: spec
                .arrows()
                .map(|a| (tq.id(a).to_string(), m.template.id(m.phi[a]).to_string()))
                .collect(),
            profile,
            witnesses,
        }),
        None => Ok(ClassificationResult {
            family: Family::NoMatch,
            r: None,
            profile,
            witnesses,
            singular_parameter: None,
            arrow_map: Vec::new(),
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularProbe {
    pub family: Family,
    pub parameter: SingularParameter,
    /// Whether the socle test was run, and its witness if it failed.
    pub socle_tested: bool,
    pub socle_witness: Option<String>,
    /// Singular disc and tetrahedral algebras stay symmetric but are not
    /// periodic.
    pub note: String,
}

/// Diagnosis for the one-parameter families: the normalized parameter, and
/// for the families losing symmetry, the result of the socle test.
pub fn singular_parameter_probe<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
) -> Result<Option<SingularProbe>> {
    let c = classify(spec)?;
    let Some(parameter) = c.singular_parameter else {
        return Ok(None);
    };
    let family = c.family;
    let (socle_tested, socle_witness, note) = match family {
        Family::Triangle | Family::Sigma | Family::Spherical => {
            match build_algebra(spec, AlgebraKind::Weighted) {
                Ok(_) => (true, None, "socle test passed".to_string()),
                Err(Error::SingularSocle { vertex, witness }) => (
                    true,
                    Some(format!("{witness} at vertex {vertex}")),
                    "socle test failed: not symmetric".to_string(),
                ),
                Err(e) => return Err(e),
            }
        }
        _ if parameter.singular => (
            false,
            None,
            "singular value: symmetric but not periodic".to_string(),
        ),
        _ => (false, None, "regular value".to_string()),
    };
    Ok(Some(SingularProbe {
        family,
        parameter,
        socle_tested,
        socle_witness,
        note,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn spec(name: &str, kv: &[(&str, &str)]) -> SurfaceAlgebraSpec<PrimeField> {
        let p: BuiltinParams = kv
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        builtin(name, &p)
            .unwrap()
            .instantiate(PrimeField::new(101).unwrap())
            .unwrap()
    }

    #[test]
    fn builtins_classify_to_their_family() {
        let cases = [
            ("disc", vec![], Family::Disc),
            ("triangle", vec![], Family::Triangle),
            ("sigma", vec![], Family::Sigma),
            ("tetrahedral", vec![], Family::Tetrahedral),
            ("spherical", vec![], Family::Spherical),
            ("S_r", vec![("r", "3")], Family::SR),
            ("Sigma_r", vec![("r", "4")], Family::SigmaR),
            ("Omega_r", vec![("r", "5")], Family::OmegaR),
            ("Phi", vec![], Family::Phi),
            ("Psi_r", vec![("r", "2")], Family::PsiR),
            ("tetrahedral", vec![("m", "2")], Family::Generic),
        ];
        for (name, kv, fam) in cases {
            let c = classify(&spec(name, &kv)).unwrap();
            assert_eq!(c.family, fam, "{name}");
            assert!(c.witnesses.iter().all(|w| w.in_triple_list));
        }
    }

    #[test]
    fn relabelled_disc_is_recognised() {
        let mut doc = builtin("disc", &BuiltinParams::new()).unwrap();
        doc.arrows.reverse();
        let c = classify(&doc.instantiate(PrimeField::new(7).unwrap()).unwrap()).unwrap();
        assert_eq!(c.family, Family::Disc);
    }

    #[test]
    fn singular_values() {
        let t1 = spec("triangle", &[("lambda", "1")]);
        let p = singular_parameter_probe(&t1).unwrap().unwrap();
        assert!(p.parameter.singular && p.socle_witness.is_some());
        let d1 = spec("disc", &[("lambda", "1")]);
        let p = singular_parameter_probe(&d1).unwrap().unwrap();
        assert!(p.parameter.singular && p.socle_witness.is_none());
        let s = spec("spherical", &[("a", "1/6"), ("b", "2"), ("c", "3")]);
        assert!(
            singular_parameter_probe(&s)
                .unwrap()
                .unwrap()
                .parameter
                .singular
        );
        let sg = spec("sigma", &[("b", "-1")]);
        assert!(
            singular_parameter_probe(&sg)
                .unwrap()
                .unwrap()
                .parameter
                .singular
        );
    }
}
