use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ViolationCode {
    TooFewVertices,
    DuplicateVertex,
    DuplicateArrow,
    UnknownVertex,
    UnknownArrow,
    NotTwoRegular,
    Disconnected,
    NotAPermutation,
    TargetSourceMismatch,
    FCubeNotIdentity,
    MultiplicityTooSmall,
    VirtualNeighbourTooShort,
    VirtualLoopNeighbourTooShort,
    TwoVirtualArrows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub subject: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, code: ViolationCode, subject: &str, message: String) {
        self.violations.push(Violation {
            code,
            subject: subject.to_string(),
            message,
        });
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {:?} [{}]: {}", v.code, v.subject, v.message)?;
        }
        Ok(())
    }
}

/// Reads `f` from cycle notation; arrows not mentioned are fixed points.
pub fn permutation_from_cycles(
    q: &Quiver,
    cycles: &[Vec<String>],
) -> Result<Vec<usize>, ValidationReport> {
    let n = q.arrows.len();
    let mut f: Vec<Option<usize>> = vec![None; n];
    let mut report = ValidationReport::default();
    for cycle in cycles {
        let mut idx = Vec::new();
        for id in cycle {
            match q.arrow_index(id) {
                Some(a) => idx.push(a),
                None => report.push(
                    super::ViolationCode::UnknownArrow,
                    id,
                    format!("f mentions unknown arrow {id}"),
                ),
            }
        }
        for (k, &a) in idx.iter().enumerate() {
            let b = idx[(k + 1) % idx.len()];
            if f[a].is_some() {
                report.push(
                    ViolationCode::NotAPermutation,
                    &q.arrows[a].id,
                    format!("arrow {} occurs twice in f", q.arrows[a].id),
                );
            }
            f[a] = Some(b);
        }
    }
    if !report.ok() {
        return Err(report);
    }
    Ok(f.into_iter()
        .enumerate()
        .map(|(a, b)| b.unwrap_or(a))
        .collect())
}

/// Checks every axiom of a triangulation quiver and reports all failures.
pub fn validate_triangulation_quiver(q: &Quiver, f: &[usize]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let ids = |a: usize| q.arrows[a].id.as_str();
    if q.vertices.len() < 2 {
        report.push(
            ViolationCode::TooFewVertices,
            "",
            format!("{} vertices, at least 2 required", q.vertices.len()),
        );
    }
    let mut seen = HashSet::new();
    for v in &q.vertices {
        if !seen.insert(v) {
            report.push(
                ViolationCode::DuplicateVertex,
                v,
                format!("vertex {v} listed twice"),
            );
        }
    }
    let mut seen = HashSet::new();
    for a in &q.arrows {
        if !seen.insert(&a.id) {
            report.push(
                ViolationCode::DuplicateArrow,
                &a.id,
                format!("arrow {} listed twice", a.id),
            );
        }
    }
    for (v, name) in q.vertices.iter().enumerate() {
        let out = q.out_arrows(v).len();
        let inn = q.in_arrows(v).len();
        if out != 2 || inn != 2 {
            report.push(
                ViolationCode::NotTwoRegular,
                name,
                format!("vertex {name} has {out} outgoing and {inn} incoming arrows"),
            );
        }
    }
    if !q.vertices.is_empty() && !q.is_connected() {
        report.push(
            ViolationCode::Disconnected,
            "",
            "quiver is not connected".to_string(),
        );
    }
    let n = q.arrows.len();
    let mut hit = vec![false; n];
    let mut perm_ok = f.len() == n;
    for &b in f {
        if b >= n || hit[b] {
            perm_ok = false;
            break;
        }
        hit[b] = true;
    }
    if !perm_ok {
        report.push(
            ViolationCode::NotAPermutation,
            "",
            "f is not a permutation of the arrows".to_string(),
        );
        return report;
    }
    for a in 0..n {
        let fa = f[a];
        if q.target(a) != q.source(fa) {
            report.push(
                ViolationCode::TargetSourceMismatch,
                ids(a),
                format!(
                    "t({}) = {} but s(f({})) = s({}) = {}",
                    ids(a),
                    q.vertices[q.target(a)],
                    ids(a),
                    ids(fa),
                    q.vertices[q.source(fa)]
                ),
            );
        }
        if f[f[fa]] != a {
            report.push(
                ViolationCode::FCubeNotIdentity,
                ids(a),
                format!("f^3({}) = {}", ids(a), ids(f[f[fa]])),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(arrows: &[(&str, &str, &str)]) -> Quiver {
        let mut vs: Vec<String> = Vec::new();
        for (_, s, t) in arrows {
            for v in [s, t] {
                if !vs.iter().any(|x| x == v) {
                    vs.push(v.to_string());
                }
            }
        }
        let arrows: Vec<_> = arrows
            .iter()
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
            .collect();
        Quiver::new(vs, &arrows).unwrap()
    }

    fn cycles(cs: &[&[&str]]) -> Vec<Vec<String>> {
        cs.iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn disc_is_valid_and_transposition_is_not() {
        let q = quiver(&[
            ("alpha", "1", "1"),
            ("beta", "1", "2"),
            ("gamma", "2", "1"),
            ("sigma", "2", "2"),
        ]);
        let f = permutation_from_cycles(&q, &cycles(&[&["alpha", "beta", "gamma"], &["sigma"]]))
            .unwrap();
        assert!(validate_triangulation_quiver(&q, &f).ok());
        let f = permutation_from_cycles(&q, &cycles(&[&["alpha", "beta"], &["gamma", "sigma"]]))
            .unwrap();
        let r = validate_triangulation_quiver(&q, &f);
        assert!(!r.ok());
        assert!(r.has(ViolationCode::FCubeNotIdentity));
    }

    #[test]
    fn not_two_regular() {
        let q = quiver(&[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1")]);
        let r = validate_triangulation_quiver(&q, &[0, 1, 2]);
        assert!(r.has(ViolationCode::NotTwoRegular));
    }

    #[test]
    fn cycles_reject_repeats_and_unknowns() {
        let q = quiver(&[("a", "1", "2"), ("b", "2", "1")]);
        assert!(permutation_from_cycles(&q, &cycles(&[&["a", "a"]])).is_err());
        assert!(permutation_from_cycles(&q, &cycles(&[&["z"]])).is_err());
    }
}
