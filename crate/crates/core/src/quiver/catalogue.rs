//! Built-in families of weighted surface algebras.

use std::collections::BTreeMap;

use super::SpecDocument;
use crate::error::{Error, Result};
use crate::field::parse_rational;

/// `key=value` parameters for [`builtin`].
pub type BuiltinParams = BTreeMap<String, String>;

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "disc",
        "triangle",
        "sigma",
        "tetrahedral",
        "spherical",
        "S_r",
        "Sigma_r",
        "Omega_r",
        "Phi",
        "Psi_r",
        "disc2",
    ]
}

struct Params<'a> {
    map: &'a BuiltinParams,
    used: Vec<&'static str>,
}

impl Params<'_> {
    fn weight(&mut self, key: &'static str, default: &str) -> Result<String> {
        self.used.push(key);
        let v = self.map.get(key).map(String::as_str).unwrap_or(default);
        parse_rational(v)?;
        Ok(v.to_string())
    }

    /// `lambda` is an alias for one weight of a family.
    fn weight_or_lambda(&mut self, key: &'static str, default: &str) -> Result<String> {
        self.used.push("lambda");
        if self.map.contains_key("lambda") && self.map.contains_key(key) {
            return Err(Error::InvalidInput(format!(
                "give either lambda or {key}, not both"
            )));
        }
        match self.map.get("lambda") {
            Some(v) => {
                parse_rational(v)?;
                self.used.push(key);
                Ok(v.clone())
            }
            None => self.weight(key, default),
        }
    }

    fn int(&mut self, key: &'static str, default: u32, min: u32) -> Result<u32> {
        self.used.push(key);
        let v = match self.map.get(key) {
            Some(s) => s.parse().map_err(|_| {
                Error::InvalidInput(format!("{key} must be a positive integer, got `{s}`"))
            })?,
            None => default,
        };
        if v < min {
            return Err(Error::InvalidInput(format!(
                "{key} must be at least {min}, got {v}"
            )));
        }
        Ok(v)
    }

    fn finish(self) -> Result<()> {
        for k in self.map.keys() {
            if !self.used.contains(&k.as_str()) {
                return Err(Error::InvalidInput(format!("unknown parameter `{k}`")));
            }
        }
        Ok(())
    }
}

fn doc(
    name: String,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    f: &[&[&str]],
    m: Vec<(&str, u32)>,
    c: Vec<(&str, String)>,
) -> SpecDocument {
    SpecDocument {
        name: Some(name),
        field: None,
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
            .collect(),
        f_cycles: f
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect(),
        multiplicity: m.into_iter().map(|(a, v)| (a.to_string(), v)).collect(),
        weight: c.into_iter().map(|(a, v)| (a.to_string(), v)).collect(),
    }
}

const DISC_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "1", "1"),
    ("beta", "1", "2"),
    ("gamma", "2", "1"),
    ("sigma", "2", "2"),
];
const DISC_F: &[&[&str]] = &[&["alpha", "beta", "gamma"], &["sigma"]];

const TETRA_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "4", "2"),
    ("beta", "3", "2"),
    ("gamma", "4", "1"),
    ("delta", "1", "5"),
    ("epsilon", "2", "5"),
    ("rho", "2", "6"),
    ("xi", "5", "3"),
    ("eta", "5", "4"),
    ("omega", "6", "4"),
    ("nu", "1", "6"),
    ("mu", "6", "3"),
    ("sigma", "3", "1"),
];
const TETRA_F: &[&[&str]] = &[
    &["gamma", "delta", "eta"],
    &["alpha", "rho", "omega"],
    &["beta", "epsilon", "xi"],
    &["sigma", "nu", "mu"],
];

const TRIANGLE_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha1", "1", "2"),
    ("beta1", "2", "1"),
    ("alpha2", "2", "3"),
    ("beta2", "3", "2"),
    ("alpha3", "3", "1"),
    ("beta3", "1", "3"),
];
const TRIANGLE_F: &[&[&str]] = &[
    &["alpha1", "alpha2", "alpha3"],
    &["beta1", "beta3", "beta2"],
];

const SIGMA_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "1", "1"),
    ("beta", "1", "2"),
    ("gamma", "2", "1"),
    ("sigma", "2", "3"),
    ("delta", "3", "2"),
    ("eta", "3", "3"),
];
const SIGMA_F: &[&[&str]] = &[&["alpha", "beta", "gamma"], &["eta", "delta", "sigma"]];

const SPHERE_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "1", "2"),
    ("xi", "2", "5"),
    ("delta", "5", "1"),
    ("eta", "5", "2"),
    ("beta", "2", "3"),
    ("nu", "3", "5"),
    ("rho", "1", "6"),
    ("epsilon", "6", "4"),
    ("sigma", "4", "1"),
    ("mu", "4", "6"),
    ("omega", "6", "3"),
    ("gamma", "3", "4"),
];
const SPHERE_F: &[&[&str]] = &[
    &["alpha", "xi", "delta"],
    &["beta", "nu", "eta"],
    &["rho", "epsilon", "sigma"],
    &["gamma", "mu", "omega"],
];

const PHI_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "1", "2"),
    ("omega", "1", "5"),
    ("delta", "4", "1"),
    ("eta", "4", "2"),
    ("xi", "2", "4"),
    ("beta", "2", "3"),
    ("sigma", "3", "4"),
    ("gamma", "3", "1"),
    ("epsilon", "5", "5"),
    ("nu", "5", "3"),
];
const PHI_F: &[&[&str]] = &[
    &["alpha", "xi", "delta"],
    &["beta", "sigma", "eta"],
    &["gamma", "omega", "nu"],
    &["epsilon"],
];

const PSI_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "1", "2"),
    ("omega", "1", "5"),
    ("delta", "4", "1"),
    ("eta", "4", "2"),
    ("xi", "2", "4"),
    ("beta", "2", "3"),
    ("sigma", "3", "4"),
    ("gamma", "3", "1"),
    ("nu", "5", "3"),
    ("epsilon", "5", "6"),
    ("mu", "6", "5"),
    ("rho", "6", "6"),
];
const PSI_F: &[&[&str]] = &[
    &["alpha", "xi", "delta"],
    &["beta", "sigma", "eta"],
    &["gamma", "omega", "nu"],
    &["epsilon", "rho", "mu"],
];

const DISC2_ARROWS: &[(&str, &str, &str)] = &[
    ("alpha", "3", "1"),
    ("beta", "1", "4"),
    ("xi", "1", "2"),
    ("eta", "2", "1"),
    ("delta", "2", "3"),
    ("rho", "3", "3"),
    ("gamma", "4", "4"),
    ("nu", "4", "2"),
];
const DISC2_F: &[&[&str]] = &[
    &["alpha", "xi", "delta"],
    &["beta", "nu", "eta"],
    &["rho"],
    &["gamma"],
];

const DISC1_ARROWS: &[(&str, &str, &str)] = &[
    ("xi", "1", "1"),
    ("beta", "1", "3"),
    ("alpha", "3", "1"),
    ("gamma", "3", "3"),
];
const DISC1_F: &[&[&str]] = &[&["xi", "beta", "alpha"], &["gamma"]];

/// Builds a catalogue entry. Weights default to 2 for the one-parameter
/// families (given as `lambda`) and for the parametrised families, with the
/// remaining weights of the one-parameter families set to 1.
pub fn builtin(name: &str, params: &BuiltinParams) -> Result<SpecDocument> {
    let mut p = Params {
        map: params,
        used: Vec::new(),
    };
    let out = match name {
        "disc" => {
            let a = p.weight_or_lambda("a", "2")?;
            let b = p.weight("b", "1")?;
            let ma = p.int("m_alpha", 3, 1)?;
            let mb = p.int("m_beta", 1, 1)?;
            doc(
                format!("D({a},{b})"),
                &["1", "2"],
                DISC_ARROWS,
                DISC_F,
                vec![("alpha", ma), ("beta", mb)],
                vec![("alpha", a), ("beta", b)],
            )
        }
        "tetrahedral" => {
            let l = p.weight("lambda", "2")?;
            let m = p.int("m", 1, 1)?;
            let reps = ["alpha", "beta", "gamma", "sigma"];
            doc(
                format!("Lambda({l})"),
                &["1", "2", "3", "4", "5", "6"],
                TETRA_ARROWS,
                TETRA_F,
                reps.iter().map(|&r| (r, m)).collect(),
                vec![
                    ("alpha", l),
                    ("beta", "1".into()),
                    ("gamma", "1".into()),
                    ("sigma", "1".into()),
                ],
            )
        }
        "triangle" => {
            let c1 = p.weight_or_lambda("c1", "2")?;
            let c2 = p.weight("c2", "1")?;
            let c3 = p.weight("c3", "1")?;
            let m1 = p.int("m1", 2, 1)?;
            let m2 = p.int("m2", 2, 1)?;
            let m3 = p.int("m3", 1, 1)?;
            doc(
                format!("T({c1},{c2},{c3})"),
                &["1", "2", "3"],
                TRIANGLE_ARROWS,
                TRIANGLE_F,
                vec![("alpha1", m1), ("alpha2", m2), ("alpha3", m3)],
                vec![("alpha1", c1), ("alpha2", c2), ("alpha3", c3)],
            )
        }
        "sigma" => {
            let a = p.weight("a", "1")?;
            let b = p.weight_or_lambda("b", "2")?;
            let c = p.weight("c", "1")?;
            let m1 = p.int("m1", 2, 1)?;
            let m2 = p.int("m2", 1, 1)?;
            let m3 = p.int("m3", 2, 1)?;
            doc(
                format!("Sigma({a},{b},{c})"),
                &["1", "2", "3"],
                SIGMA_ARROWS,
                SIGMA_F,
                vec![("alpha", m1), ("beta", m2), ("eta", m3)],
                vec![("alpha", a), ("beta", b), ("eta", c)],
            )
        }
        "spherical" => {
            let a = p.weight_or_lambda("a", "2")?;
            let b = p.weight("b", "1")?;
            let c = p.weight("c", "1")?;
            let d = p.weight("d", "1")?;
            doc(
                format!("S({a},{b},{c},{d})"),
                &["1", "2", "3", "4", "5", "6"],
                SPHERE_ARROWS,
                SPHERE_F,
                vec![],
                vec![("alpha", a), ("rho", b), ("xi", c), ("epsilon", d)],
            )
        }
        "S_r" => {
            let r = p.int("r", 2, 2)?;
            let (a, b, c, d) = (
                p.weight("a", "2")?,
                p.weight("b", "2")?,
                p.weight("c", "2")?,
                p.weight("d", "2")?,
            );
            doc(
                format!("S_{r}({a},{b},{c},{d})"),
                &["1", "2", "3", "4", "5", "6"],
                SPHERE_ARROWS,
                SPHERE_F,
                vec![("epsilon", r)],
                vec![("alpha", a), ("rho", b), ("xi", c), ("epsilon", d)],
            )
        }
        "Sigma_r" => {
            let r = p.int("r", 3, 3)?;
            let (a, b, c) = (
                p.weight("a", "2")?,
                p.weight("b", "2")?,
                p.weight("c", "2")?,
            );
            doc(
                format!("Sigma_{r}({a},{b},{c})"),
                &["1", "2", "3"],
                SIGMA_ARROWS,
                SIGMA_F,
                vec![("alpha", 2), ("beta", 1), ("eta", r)],
                vec![("alpha", a), ("beta", b), ("eta", c)],
            )
        }
        "Omega_r" => {
            let r = p.int("r", 4, 4)?;
            let (a, b) = (p.weight("a", "2")?, p.weight("b", "2")?);
            doc(
                format!("Omega_{r}({a},{b})"),
                &["1", "2"],
                DISC_ARROWS,
                DISC_F,
                vec![("alpha", r), ("beta", 1)],
                vec![("alpha", a), ("beta", b)],
            )
        }
        "Phi" => {
            let (a, b, c) = (
                p.weight("a", "2")?,
                p.weight("b", "2")?,
                p.weight("c", "2")?,
            );
            doc(
                format!("Phi({a},{b},{c})"),
                &["1", "2", "3", "4", "5"],
                PHI_ARROWS,
                PHI_F,
                vec![],
                vec![("alpha", a), ("delta", b), ("xi", c)],
            )
        }
        "Psi_r" => {
            let r = p.int("r", 2, 2)?;
            let (a, b, c, d) = (
                p.weight("a", "2")?,
                p.weight("b", "2")?,
                p.weight("c", "2")?,
                p.weight("d", "2")?,
            );
            doc(
                format!("Psi_{r}({a},{b},{c},{d})"),
                &["1", "2", "3", "4", "5", "6"],
                PSI_ARROWS,
                PSI_F,
                vec![("rho", r)],
                vec![("alpha", a), ("delta", b), ("xi", c), ("rho", d)],
            )
        }
        "disc2" => {
            let variant = p.int("variant", 2, 1)?;
            let a = p.weight_or_lambda("a", "2")?;
            let b = p.weight("b", "1")?;
            match variant {
                2 => doc(
                    format!("D({a},{b})^(2)"),
                    &["1", "2", "3", "4"],
                    DISC2_ARROWS,
                    DISC2_F,
                    vec![],
                    vec![("alpha", a), ("xi", b)],
                ),
                1 => doc(
                    format!("D({a},{b})^(1)"),
                    &["1", "3"],
                    DISC1_ARROWS,
                    DISC1_F,
                    vec![("alpha", 2), ("xi", 2)],
                    vec![("alpha", a), ("xi", b)],
                ),
                v => {
                    return Err(Error::InvalidInput(format!(
                        "disc2 variant must be 1 or 2, got {v}"
                    )))
                }
            }
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown built-in `{other}` (known: {})",
                builtin_names().join(", ")
            )));
        }
    };
    p.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn params(kv: &[(&str, &str)]) -> BuiltinParams {
        kv.iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn every_builtin_is_a_triangulation_quiver() {
        for name in builtin_names() {
            let doc = builtin(name, &BuiltinParams::new()).unwrap();
            doc.instantiate(PrimeField::new(101).unwrap()).unwrap();
        }
    }

    #[test]
    fn orbit_lengths() {
        let f = PrimeField::new(101).unwrap();
        let lens = |name: &str| {
            let s = builtin(name, &BuiltinParams::new())
                .unwrap()
                .instantiate(f)
                .unwrap();
            let mut v: Vec<usize> = s.tq.orbits().iter().map(Vec::len).collect();
            v.sort();
            v
        };
        assert_eq!(lens("disc"), vec![1, 3]);
        assert_eq!(lens("tetrahedral"), vec![3, 3, 3, 3]);
        assert_eq!(lens("triangle"), vec![2, 2, 2]);
        assert_eq!(lens("sigma"), vec![1, 1, 4]);
        assert_eq!(lens("spherical"), vec![2, 2, 4, 4]);
        assert_eq!(lens("Phi"), vec![2, 3, 5]);
        assert_eq!(lens("Psi_r"), vec![1, 2, 3, 6]);
        assert_eq!(lens("disc2"), vec![2, 6]);
    }

    #[test]
    fn rejects_unknown_params() {
        assert!(builtin("disc", &params(&[("zeta", "1")])).is_err());
        assert!(builtin("disc", &params(&[("lambda", "1"), ("a", "2")])).is_err());
        assert!(builtin("Omega_r", &params(&[("r", "3")])).is_err());
        assert!(builtin("nope", &BuiltinParams::new()).is_err());
    }
}
