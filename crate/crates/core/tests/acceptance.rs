//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the summary is always printed; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    bareiss, census, doc, gf, oracle_dimension, orbit_dimension, rank_mod, weighted_generators,
};
use wsa_core::algebra::{
    build_algebra, cartan_matrix, gram_matrix, integer_determinant, quotient_dimension,
    symmetric_report, symmetrizing_form, AlgebraKind,
};
use wsa_core::classifier::{
    classify, degeneration_profile, v_profile, verify_degeneration_isomorphism, Family,
};
use wsa_core::quiver::builtin_names;
use wsa_core::resolution::bimodule::{verify_bimodule_period, DEFAULT_BIMODULE_CAP};
use wsa_core::resolution::{
    modules_isomorphic, omega_period_of_simple, resolution_shape, simple_module, syzygy, IsoVerdict,
};
use wsa_core::{Error, Field, PrimeField, Rationals, SpecDocument};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

fn name_of(d: &SpecDocument) -> String {
    d.name.clone().unwrap_or_default()
}

// 1. Built dimension equals sum m n^2 for every built-in, plus the anchored
// values for the indexed families.
fn dimensions() -> Outcome {
    let start = Instant::now();
    let field = gf(101);
    let mut docs: Vec<SpecDocument> = builtin_names().iter().map(|n| doc(n, &[])).collect();
    let anchored: Vec<(&str, &str, usize)> = vec![
        ("S_r", "2", 44),
        ("S_r", "3", 48),
        ("Sigma_r", "3", 21),
        ("Sigma_r", "4", 22),
        ("Sigma_r", "5", 23),
        ("Omega_r", "4", 13),
        ("Omega_r", "5", 14),
        ("Omega_r", "6", 15),
        ("Psi_r", "2", 51),
        ("Psi_r", "3", 52),
    ];
    for (fam, r, want) in &anchored {
        let d = doc(fam, &[("r", r)]);
        let spec = d.instantiate(field).map_err(|e| e.to_string())?;
        let dim = build_algebra(&spec, AlgebraKind::Weighted)
            .map_err(|e| format!("{fam} r={r}: {e}"))?
            .dim();
        ensure(dim == *want, || {
            format!("{fam} r={r}: dimension {dim}, expected {want}")
        })?;
        docs.push(d);
    }
    let phi = build_algebra(
        &doc("Phi", &[]).instantiate(field).unwrap(),
        AlgebraKind::Weighted,
    )
    .map_err(|e| e.to_string())?;
    ensure(phi.dim() == 38, || format!("Phi: dimension {}", phi.dim()))?;
    for d in &docs {
        let spec = d.instantiate(field).map_err(|e| e.to_string())?;
        let dim = build_algebra(&spec, AlgebraKind::Weighted)
            .map_err(|e| format!("{}: {e}", name_of(d)))?
            .dim();
        let formula = orbit_dimension(&spec);
        ensure(dim == formula, || {
            format!("{}: built {dim}, sum m n^2 = {formula}", name_of(d))
        })?;
    }
    within(start, Duration::from_secs(30), "dimension sweep")?;
    Ok(format!("{} algebras, {:?}", docs.len(), start.elapsed()))
}

fn symmetric_over<F: Field>(d: &SpecDocument, field: F) -> Result<(), String> {
    let spec = d.instantiate(field).map_err(|e| e.to_string())?;
    let t =
        build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| format!("{}: {e}", name_of(d)))?;
    let r = symmetric_report(&t);
    ensure(
        r.symmetric && r.nondegenerate && r.gram_rank == t.dim(),
        || format!("{}: {r:?}", name_of(d)),
    )
}

/// Direct check of the Gram matrix over GF(7): `phi(xy) = phi(yx)` on basis
/// pairs and full rank, with test-side elimination.
fn gram_oracle(d: &SpecDocument) -> Result<(), String> {
    let spec = d.instantiate(gf(7)).map_err(|e| e.to_string())?;
    let t = build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| e.to_string())?;
    let form = symmetrizing_form(&t);
    let n = t.dim();
    let phi = |i: usize, j: usize| -> u64 {
        t.basis_product(i, j)
            .iter()
            .map(|(k, c)| c * form.values[*k] % 7)
            .sum::<u64>()
            % 7
    };
    let mut g = vec![vec![0u64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = phi(i, j);
        }
    }
    for i in 0..n {
        for j in 0..i {
            ensure(g[i][j] == g[j][i], || {
                format!("{}: phi not symmetric at ({i}, {j})", name_of(d))
            })?;
        }
    }
    let engine = gram_matrix(&t, &form);
    ensure(engine.data == g, || {
        format!("{}: engine Gram matrix differs", name_of(d))
    })?;
    ensure(rank_mod(g, 7) == n, || {
        format!("{}: Gram matrix singular", name_of(d))
    })
}

// 2. Symmetric and nondegenerate over GF(7) and Q.
fn symmetry() -> Outcome {
    let docs = vec![
        doc("disc", &[]),
        doc("tetrahedral", &[]),
        doc("triangle", &[("c1", "2"), ("c2", "1"), ("c3", "1")]),
        doc(
            "spherical",
            &[("a", "2"), ("b", "1"), ("c", "1"), ("d", "1")],
        ),
        doc("Sigma_r", &[("r", "3"), ("a", "2"), ("b", "3"), ("c", "5")]),
        doc("Omega_r", &[("r", "4")]),
        doc("Phi", &[]),
        doc("Psi_r", &[("r", "2")]),
    ];
    for d in &docs {
        symmetric_over(d, gf(7))?;
        symmetric_over(d, Rationals)?;
        gram_oracle(d)?;
    }
    Ok(format!("{} algebras over GF(7) and Q", docs.len()))
}

// 3. Singular weights: T(1), S(1) fail the socle test with a witness; D(1),
// Lambda(1) build.
fn singular_detection() -> Outcome {
    let mut witnesses = Vec::new();
    for (name, kv) in [
        ("triangle", vec![("lambda", "1")]),
        ("spherical", vec![("lambda", "1")]),
    ] {
        let spec = doc(name, &kv).instantiate(gf(101)).unwrap();
        match build_algebra(&spec, AlgebraKind::Weighted) {
            Err(Error::SingularSocle { vertex, witness }) => {
                ensure(!witness.trim().is_empty(), || {
                    format!("{name}(1): empty witness")
                })?;
                witnesses.push(format!("{name}(1) at {vertex}: {witness}"));
            }
            Err(e) => return Err(format!("{name}(1): wrong error {e}")),
            Ok(_) => return Err(format!("{name}(1) built without error")),
        }
    }
    for (name, kv) in [
        ("disc", vec![("lambda", "1")]),
        ("tetrahedral", vec![("lambda", "1")]),
    ] {
        let spec = doc(name, &kv).instantiate(gf(101)).unwrap();
        let t =
            build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| format!("{name}(1): {e}"))?;
        let r = symmetric_report(&t);
        ensure(r.symmetric && r.nondegenerate, || {
            format!("{name}(1) not symmetric")
        })?;
    }
    Ok(witnesses.join("; "))
}

// 4. Cartan determinants.
fn cartan() -> Outcome {
    let cases = vec![
        (doc("tetrahedral", &[]), 0i128),
        (doc("spherical", &[]), 0),
        (doc("Phi", &[]), 0),
        (doc("Psi_r", &[("r", "2")]), 0),
        (doc("S_r", &[("r", "2")]), 0),
        (doc("disc", &[]), 12),
    ];
    for (d, want) in &cases {
        let spec = d.instantiate(gf(101)).unwrap();
        let t = build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| e.to_string())?;
        let c = cartan_matrix(&t);
        let det = integer_determinant(&c);
        ensure(det == bareiss(&c), || {
            format!(
                "{}: determinant {det} disagrees with Bareiss {}",
                name_of(d),
                bareiss(&c)
            )
        })?;
        ensure(det == *want, || {
            format!("{}: det C = {det}, expected {want}", name_of(d))
        })?;
        let sums: Vec<i64> = c.iter().map(|r| r.iter().sum()).collect();
        let proj: Vec<i64> = (0..spec.vertex_count())
            .map(|v| spec.projective_dimension(v) as i64)
            .collect();
        ensure(sums == proj, || {
            format!("{}: row sums {sums:?} vs dim P_i {proj:?}", name_of(d))
        })?;
    }
    Ok(format!("{} Cartan matrices", cases.len()))
}

// 5. Every simple has Omega-period exactly 4 and the expected resolution shape.
fn periodicity() -> Outcome {
    let start = Instant::now();
    let docs = vec![
        doc("disc", &[]),
        doc("tetrahedral", &[("m", "2")]),
        doc("Sigma_r", &[("r", "3")]),
        doc("Omega_r", &[("r", "5")]),
        doc("Phi", &[]),
        doc("Psi_r", &[("r", "2")]),
        doc("S_r", &[("r", "2")]),
    ];
    let mut simples = 0;
    for d in &docs {
        let spec = d.instantiate(gf(5)).unwrap();
        let t = build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| e.to_string())?;
        for v in 0..spec.vertex_count() {
            let p = omega_period_of_simple(&t, v, 8).map_err(|e| e.to_string())?;
            ensure(p == Some(4), || {
                format!("{} S_{}: period {p:?}", name_of(d), t.vertices[v])
            })?;
            let shape = resolution_shape(&t, &spec, v).map_err(|e| e.to_string())?;
            ensure(
                shape.matches_expected && shape.exact && shape.closes,
                || format!("{}: {shape:?}", name_of(d)),
            )?;
            let s = simple_module(&t, v).map_err(|e| e.to_string())?;
            let mut m = s.clone();
            for _ in 0..4 {
                m = syzygy(&t, &m).map_err(|e| e.to_string())?;
            }
            let iso = modules_isomorphic(&m, &s, t.vertex_count(), 0);
            ensure(iso == IsoVerdict::Yes, || {
                format!(
                    "{} S_{}: Omega^4 iso test {iso:?}",
                    name_of(d),
                    t.vertices[v]
                )
            })?;
            simples += 1;
        }
    }
    within(start, Duration::from_secs(60), "periodicity")?;
    Ok(format!("{simples} simple modules, {:?}", start.elapsed()))
}

// 6. D(1) over GF(5): no Omega^n(S_1) = S_1 for n <= 8.
fn non_periodicity() -> Outcome {
    let spec = doc("disc", &[("lambda", "1")]).instantiate(gf(5)).unwrap();
    let t = build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| e.to_string())?;
    let v = spec.vertex("1").map_err(|e| e.to_string())?;
    let p = omega_period_of_simple(&t, v, 8).map_err(|e| e.to_string())?;
    ensure(p.is_none(), || format!("period {p:?}"))?;
    let s = simple_module(&t, v).map_err(|e| e.to_string())?;
    let mut m = s.clone();
    let mut dims = Vec::new();
    for n in 1..=8 {
        m = syzygy(&t, &m).map_err(|e| e.to_string())?;
        dims.push(m.dim());
        let iso = modules_isomorphic(&m, &s, t.vertex_count(), n);
        ensure(iso == IsoVerdict::No, || format!("Omega^{n}(S_1): {iso:?}"))?;
    }
    Ok(format!("dim Omega^n(S_1), n = 1..8: {dims:?}"))
}

// 7. Period-four certificate from the bimodule resolution.
fn bimodule() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for d in [doc("disc", &[]), doc("Sigma_r", &[("r", "3")])] {
        let spec = d.instantiate(gf(5)).unwrap();
        let t = build_algebra(&spec, AlgebraKind::Weighted).map_err(|e| e.to_string())?;
        let r =
            verify_bimodule_period(&t, &spec, DEFAULT_BIMODULE_CAP).map_err(|e| e.to_string())?;
        ensure(
            r.d1_r_zero
                && r.r_psi_zero
                && r.s_xi_zero
                && r.theta_socle
                && r.theta_injective
                && r.ker_s_dim == t.dim()
                && r.exact,
            || format!("{}: {r:?}", name_of(&d)),
        )?;
        ensure(r.dims.iter().all(|&x| x <= 1600), || {
            format!("{}: dims {:?}", name_of(&d), r.dims)
        })?;
        out.push(format!("{} {:?}", name_of(&d), r.dims));
    }
    within(start, Duration::from_secs(120), "bimodule certificate")?;
    Ok(out.join(", "))
}

fn is_listed(mut t: [u64; 3]) -> bool {
    t.sort_unstable();
    matches!(t, [2, 2, _] | [2, 3, 3..=6] | [2, 4, 4] | [3, 3, 3])
}

// 8. Classification of the built-ins, the generic tetrahedral case, and the
// v <= 0 sweep.
fn classification() -> Outcome {
    let expect = [
        ("disc", Family::Disc),
        ("triangle", Family::Triangle),
        ("sigma", Family::Sigma),
        ("tetrahedral", Family::Tetrahedral),
        ("spherical", Family::Spherical),
        ("S_r", Family::SR),
        ("Sigma_r", Family::SigmaR),
        ("Omega_r", Family::OmegaR),
        ("Phi", Family::Phi),
        ("Psi_r", Family::PsiR),
    ];
    for (name, fam) in expect {
        let spec = doc(name, &[]).instantiate(gf(101)).unwrap();
        let c = classify(&spec).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.family == fam, || {
            format!("{name}: classified as {}", c.family)
        })?;
    }
    let spec = doc("tetrahedral", &[("m", "2")])
        .instantiate(gf(101))
        .unwrap();
    let c = classify(&spec).map_err(|e| e.to_string())?;
    ensure(
        c.family == Family::Generic && c.profile.v.iter().all(|&v| v == 6),
        || format!("tetrahedral m=2: {} {:?}", c.family, c.profile.v),
    )?;

    let docs = census(6);
    let mut nonpositive = 0;
    for d in &docs {
        let spec = d.instantiate(gf(101)).unwrap();
        let p = v_profile(&spec);
        let tq = &spec.tq;
        for a in spec.arrows() {
            let q = [spec.q(a), spec.q(tq.f(a)), spec.q(tq.f(tq.f(a)))].map(|x| x as u64);
            let m = p.m as i64;
            let v = m - q.iter().map(|&x| m / x as i64).sum::<i64>();
            ensure(v == p.v[a], || {
                format!("v({}) = {} but M - sum M/q = {v}", tq.id(a), p.v[a])
            })?;
            if v <= 0 {
                nonpositive += 1;
                ensure(is_listed(q), || {
                    format!("v({}) = {v} at unlisted triple {q:?} in {:?}", tq.id(a), d)
                })?;
            }
        }
        let c = classify(&spec).map_err(|e| e.to_string())?;
        ensure((c.family == Family::Generic) == (p.min_v() > 0), || {
            format!("{:?}: {} with min v {}", d, c.family, p.min_v())
        })?;
    }
    Ok(format!(
        "10 built-ins, {} census specs, {nonpositive} arrows with v <= 0",
        docs.len()
    ))
}

// 9. Degeneration A(1) ~ A(t) for t = 2, 3 over GF(7).
fn degeneration() -> Outcome {
    let docs = vec![
        doc("tetrahedral", &[("m", "2")]),
        doc("S_r", &[("r", "2")]),
        doc("Sigma_r", &[("r", "4")]),
        doc("Omega_r", &[("r", "5")]),
    ];
    let field = gf(7);
    for d in &docs {
        let spec = d.instantiate(field).unwrap();
        let profile = degeneration_profile(&spec).map_err(|e| format!("{}: {e}", name_of(d)))?;
        let tq = &spec.tq;
        for a in spec.arrows() {
            let b = tq.bar(a);
            let mut weight_a = 0;
            let mut x = b;
            for _ in 0..spec.q(b) - 1 {
                weight_a += profile.arrow_weights[x] as i64;
                x = tq.bar(tq.f(x));
            }
            let lhs = profile.relation_exponents[a]
                + profile.arrow_weights[a] as i64
                + profile.arrow_weights[tq.f(a)] as i64;
            ensure(lhs == weight_a, || {
                format!("{}: identity fails at {}", name_of(d), tq.id(a))
            })?;
        }
        for t in ["2", "3"] {
            let tv = field.parse(t).unwrap();
            let v = verify_degeneration_isomorphism(&spec, &tv)
                .map_err(|e| format!("{}: {e}", name_of(d)))?;
            ensure(
                v.pass && v.a0_is_biserial && v.a1_is_weighted && v.dagger_failures.is_empty(),
                || format!("{} t={t}: {v:?}", name_of(d)),
            )?;
        }
    }
    Ok(format!("{} families, t in {{2, 3}}", docs.len()))
}

// 10. Engine quotient dimension against the union-find oracle at caps N, N+1,
// N+2 for every spec of dimension at most 30.
fn oracle_equivalence() -> Outcome {
    let field: PrimeField = gf(101);
    let mut docs: Vec<SpecDocument> = builtin_names().iter().map(|n| doc(n, &[])).collect();
    docs.extend(census(6));
    let mut checked = 0;
    for d in &docs {
        let spec = d.instantiate(field).unwrap();
        let formula = orbit_dimension(&spec);
        if formula > 30 {
            continue;
        }
        let gens = weighted_generators(&spec);
        let n = spec.max_q() + 2;
        let dims: Vec<(usize, usize)> = (n..=n + 2)
            .map(|cap| {
                (
                    quotient_dimension(&spec, AlgebraKind::Weighted, cap),
                    oracle_dimension(&spec, &gens, cap),
                )
            })
            .collect();
        ensure(dims.iter().all(|&(e, o)| e == o && e == formula), || {
            format!("{:?}: (engine, oracle) by cap {dims:?}", d)
        })?;
        checked += 1;
    }
    Ok(format!("{checked} specs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("dimension formula", dimensions),
        ("symmetry", symmetry),
        ("singular detection", singular_detection),
        ("Cartan determinants", cartan),
        ("periodicity", periodicity),
        ("non-periodicity", non_periodicity),
        ("bimodule certificate", bimodule),
        ("classification", classification),
        ("degeneration", degeneration),
        ("oracle equivalence", oracle_equivalence),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
