use std::fmt::Write;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use wsa_core::algebra::json::{from_json, parse_document, to_json};
use wsa_core::algebra::walks::{enumerate_walks, format_walk, parse_walk, walk_classify};
use wsa_core::algebra::{
    build_algebra, build_algebra_with_cap, cartan_matrix, default_cap, expected_dimension,
    gabriel_quiver, integer_determinant, socle_report, symmetric_report, AlgebraKind, AlgebraTable,
};
use wsa_core::classifier::{
    classify, degeneration_algebra, singular_parameter_probe, verify_degeneration_isomorphism,
};
use wsa_core::quiver::{builtin, builtin_names, parse_spec_text, write_spec_text, BuiltinParams};
use wsa_core::resolution::bimodule::verify_bimodule_period;
use wsa_core::resolution::{
    ext2_dims, modules_isomorphic, omega_period_of_simple, resolution_shape, simple_module, syzygy,
    IsoVerdict,
};
use wsa_core::{Field, FieldDescriptor, PrimeField, Rationals, SpecDocument, SurfaceAlgebraSpec};

use crate::args::{Cli, Format, Kind, Source, Verb};
use crate::error::{CliError, CHECK_FAILED, OK};

/// Outcome of a verb: exit status, text rendering and JSON payload.
pub struct Report {
    pub status: u8,
    pub text: String,
    pub data: Value,
    /// Printed verbatim in JSON mode instead of the envelope.
    pub raw_json: Option<String>,
}

impl Report {
    fn new(status: u8, text: String, data: Value) -> Self {
        Report {
            status,
            text,
            data,
            raw_json: None,
        }
    }
}

pub struct Loaded {
    pub label: String,
    pub doc: SpecDocument,
}

fn parse_params(raw: &[String]) -> Result<BuiltinParams, CliError> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::Usage(format!("parameter `{kv}` is not KEY=VALUE")))
        })
        .collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn load(src: &Source) -> Result<Loaded, CliError> {
    match (&src.input.spec, &src.input.builtin) {
        (Some(path), None) => Ok(Loaded {
            label: path.display().to_string(),
            doc: parse_spec_text(&read(path)?)?,
        }),
        (None, Some(name)) => {
            let params = parse_params(&src.params)?;
            let label = std::iter::once(name.clone())
                .chain(src.params.iter().cloned())
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Loaded {
                label,
                doc: builtin(name, &params)?,
            })
        }
        _ => Err(CliError::Usage(
            "give a spec file or --builtin, not both".into(),
        )),
    }
}

fn field_for(cli: &Cli, doc: Option<&SpecDocument>) -> Result<FieldDescriptor, CliError> {
    match (&cli.field, doc.and_then(|d| d.field)) {
        (Some(s), _) => Ok(s.parse()?),
        (None, Some(d)) => Ok(d),
        (None, None) => Ok(FieldDescriptor::Prime(101)),
    }
}

fn source(verb: &Verb) -> Option<&Source> {
    match verb {
        Verb::Validate(s)
        | Verb::Info(s)
        | Verb::Socle(s)
        | Verb::Symmetric(s)
        | Verb::Resolve(s)
        | Verb::Classify(s) => Some(s),
        Verb::Build { src, .. }
        | Verb::Cartan { src, .. }
        | Verb::Period { src, .. }
        | Verb::Bimodule { src, .. }
        | Verb::Degenerate { src, .. }
        | Verb::Walks { src, .. } => Some(src),
        Verb::Table { .. } | Verb::Builtin { .. } => None,
    }
}

pub fn verb_name(verb: &Verb) -> &'static str {
    match verb {
        Verb::Validate(_) => "validate",
        Verb::Info(_) => "info",
        Verb::Build { .. } => "build",
        Verb::Table { .. } => "table",
        Verb::Cartan { .. } => "cartan",
        Verb::Socle(_) => "socle",
        Verb::Symmetric(_) => "symmetric",
        Verb::Period { .. } => "period",
        Verb::Resolve(_) => "resolve",
        Verb::Bimodule { .. } => "bimodule",
        Verb::Classify(_) => "classify",
        Verb::Degenerate { .. } => "degenerate",
        Verb::Walks { .. } => "walks",
        Verb::Builtin { .. } => "builtin",
    }
}

/// Runs the command; returns the input label, the field and the report.
pub fn run(cli: &Cli) -> Result<(String, String, Report), CliError> {
    match &cli.verb {
        Verb::Builtin { name, params } => {
            return Ok((
                String::new(),
                String::new(),
                run_builtin(name.as_deref(), params)?,
            ))
        }
        Verb::Table { path } => {
            let text = read(path)?;
            let doc = parse_document(&text)?;
            let field = match &cli.field {
                Some(s) => s.parse()?,
                None => doc.field_descriptor()?,
            };
            let label = path.display().to_string();
            let report = match field {
                FieldDescriptor::Rationals => table_report(&from_json(Rationals, &text)?),
                FieldDescriptor::Prime(p) => table_report(&from_json(PrimeField::new(p)?, &text)?),
            };
            return Ok((label, field.to_string(), report));
        }
        _ => {}
    }
    let src = source(&cli.verb).expect("every other verb takes an input");
    let loaded = load(src)?;
    let field = field_for(cli, Some(&loaded.doc))?;
    let report = match field {
        FieldDescriptor::Rationals => run_in(cli, &loaded, Rationals)?,
        FieldDescriptor::Prime(p) => run_in(cli, &loaded, PrimeField::new(p)?)?,
    };
    Ok((loaded.label, field.to_string(), report))
}

fn run_builtin(name: Option<&str>, params: &[String]) -> Result<Report, CliError> {
    match name {
        None => {
            let names = builtin_names();
            Ok(Report::new(
                OK,
                names.join("\n"),
                json!({ "builtins": names }),
            ))
        }
        Some(n) => {
            let doc = builtin(n, &parse_params(params)?)?;
            let text = write_spec_text(&doc);
            Ok(Report::new(
                OK,
                text.trim_end().to_string(),
                json!({ "spec": text }),
            ))
        }
    }
}

fn table_report<F: Field>(t: &AlgebraTable<F>) -> Report {
    let mut r = Report::new(
        OK,
        format!("{} algebra table, dimension {}", t.kind, t.dim()),
        Value::Null,
    );
    r.raw_json = Some(to_json(t));
    r
}

fn kind(k: Kind) -> AlgebraKind {
    match k {
        Kind::Weighted => AlgebraKind::Weighted,
        Kind::Biserial => AlgebraKind::Biserial,
        Kind::String => AlgebraKind::String,
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("--jobs: {e}")))
}

fn vertex_list<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    vertex: Option<&str>,
) -> Result<Vec<usize>, CliError> {
    match vertex {
        Some(v) => Ok(vec![spec.vertex(v)?]),
        None => Ok((0..spec.vertex_count()).collect()),
    }
}

fn run_in<F: Field>(cli: &Cli, loaded: &Loaded, field: F) -> Result<Report, CliError> {
    if let Verb::Validate(_) = cli.verb {
        return validate(&loaded.doc, field);
    }
    let spec = loaded.doc.instantiate(field)?;
    let f = &spec.field;
    match &cli.verb {
        Verb::Info(_) => Ok(info(&spec)),
        Verb::Build { kind: k, cap, .. } => {
            let t =
                build_algebra_with_cap(&spec, kind(*k), cap.unwrap_or_else(|| default_cap(&spec)))?;
            let mut text = format!(
                "{} algebra {}: dimension {}\n",
                t.kind,
                spec.name.as_deref().unwrap_or(""),
                t.dim()
            );
            for (i, b) in t.basis.iter().enumerate() {
                let _ = writeln!(text, "  {i:>3}  {}", t.label(i).trim());
                let _ = b;
            }
            let mut r = Report::new(OK, text.trim_end().to_string(), Value::Null);
            r.raw_json = Some(to_json(&t));
            Ok(r)
        }
        Verb::Cartan { kind: k, .. } => {
            let t = build_algebra(&spec, kind(*k))?;
            let c = cartan_matrix(&t);
            let det = integer_determinant(&c);
            let mut text =
                String::from("Cartan matrix (rows: P_i, columns: multiplicity of S_j)\n");
            for (v, row) in c.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(
                    text,
                    "  {:>4} | {}  (sum {})",
                    t.vertices[v],
                    cells.join(" "),
                    row.iter().sum::<i64>()
                );
            }
            let _ = write!(text, "det = {det}");
            Ok(Report::new(
                OK,
                text,
                json!({ "vertices": t.vertices, "matrix": c, "determinant": det.to_string() }),
            ))
        }
        Verb::Socle(_) => {
            let t = build_algebra(&spec, AlgebraKind::Weighted)?;
            let s = socle_report(&t);
            let mut text = String::new();
            for ((v, d), (_, els)) in s.dims.iter().zip(&s.elements) {
                let _ = writeln!(text, "soc P_{v}: dimension {d}: {}", els.join(", "));
            }
            let status = if s.singular { CHECK_FAILED } else { OK };
            Ok(Report::new(
                status,
                text.trim_end().to_string(),
                serde_json::to_value(&s).expect("serializable"),
            ))
        }
        Verb::Symmetric(_) => {
            let t = build_algebra(&spec, AlgebraKind::Weighted)?;
            let s = symmetric_report(&t);
            let mut text = format!(
                "dimension {}\nsymmetric: {}\nnondegenerate: {} (rank {})\nsocle-supported form: {}",
                s.dimension, s.symmetric, s.nondegenerate, s.gram_rank, s.socle_supported
            );
            if let Some((a, b)) = &s.asymmetric_pair {
                let _ = write!(text, "\nasymmetric pair: ({a}, {b})");
            }
            for (b, v) in &s.corrections {
                let _ = write!(text, "\nform correction: phi({b}) = {v}");
            }
            let status = if s.symmetric && s.nondegenerate {
                OK
            } else {
                CHECK_FAILED
            };
            Ok(Report::new(
                status,
                text,
                serde_json::to_value(&s).expect("serializable"),
            ))
        }
        Verb::Period {
            vertex, all, max, ..
        } => {
            if vertex.is_none() && !all {
                return Err(CliError::Usage("period needs --vertex V or --all".into()));
            }
            let t = build_algebra(&spec, AlgebraKind::Weighted)?;
            let vs = vertex_list(&spec, vertex.as_deref())?;
            let periods = pool(cli.jobs)?.install(|| {
                vs.par_iter()
                    .map(|&v| omega_period_of_simple(&t, v, *max).map(|p| (v, p)))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (v, p) in periods {
                let name = &t.vertices[v];
                match p {
                    Some(n) => {
                        let _ = writeln!(text, "S_{name}: period {n}");
                    }
                    None => {
                        let _ = writeln!(text, "S_{name}: no period up to {max}");
                    }
                }
                rows.push(json!({ "vertex": name, "period": p }));
            }
            Ok(Report::new(
                OK,
                text.trim_end().to_string(),
                json!({ "max": max, "periods": rows }),
            ))
        }
        Verb::Resolve(_) => {
            let t = build_algebra(&spec, AlgebraKind::Weighted)?;
            let vs: Vec<usize> = (0..spec.vertex_count()).collect();
            let seed = cli.seed;
            let per_vertex = pool(cli.jobs)?.install(|| {
                vs.par_iter()
                    .map(|&v| Ok((resolution_shape(&t, &spec, v)?, omega4_iso(&t, v, seed)?)))
                    .collect::<Result<Vec<_>, wsa_core::Error>>()
            })?;
            let (shapes, isos): (Vec<_>, Vec<_>) = per_vertex.into_iter().unzip();
            let ext2 = ext2_dims(&t)?;
            let mut ok = true;
            let mut text = String::new();
            for (s, iso) in shapes.iter().zip(&isos) {
                ok &= s.matches_expected && s.exact && s.closes && *iso == IsoVerdict::Yes;
                let terms: Vec<String> = s
                    .terms
                    .iter()
                    .map(|t| format!("[{}]", t.join(" ")))
                    .collect();
                let _ = writeln!(
                    text,
                    "S_{} ({:?}): {}  syzygies {:?}  expected: {}  exact: {}  closes: {}  Omega^4 iso: {:?}",
                    s.vertex,
                    s.case,
                    terms.join(" <- "),
                    s.syzygy_dims,
                    s.matches_expected,
                    s.exact,
                    s.closes,
                    iso
                );
            }
            let _ = write!(text, "dim Ext^2(S_i, S_j): {ext2:?}");
            let status = if ok { OK } else { CHECK_FAILED };
            Ok(Report::new(
                status,
                text,
                json!({ "shapes": shapes, "omega4_iso": isos, "ext2": ext2, "seed": seed }),
            ))
        }
        Verb::Bimodule { cap, .. } => {
            let t = build_algebra(&spec, AlgebraKind::Weighted)?;
            let r = verify_bimodule_period(&t, &spec, *cap)?;
            let text = format!(
                "dim P0..P3 = {:?}, dim A = {}\nd1 R = 0: {}\nR(psi_i) = 0: {}\nS(xi_i) = 0: {}\ntheta(w_i) = w_i (x) w_i: {}\ntheta injective: {}\nranks d0, d1, R, S = {:?}, exact: {}\ndim Ker S = {}\nperiod-four certificate: {}",
                r.dims, r.algebra_dim, r.d1_r_zero, r.r_psi_zero, r.s_xi_zero, r.theta_socle, r.theta_injective, r.ranks, r.exact,
                r.ker_s_dim, r.periodic4
            );
            let status = if r.periodic4 { OK } else { CHECK_FAILED };
            Ok(Report::new(
                status,
                text,
                serde_json::to_value(&r).expect("serializable"),
            ))
        }
        Verb::Classify(_) => {
            let c = classify(&spec)?;
            let probe = singular_parameter_probe(&spec)?;
            let dim = spec.dimension_formula();
            let mut text = format!("family: {}", c.family);
            if let Some(r) = c.r {
                let _ = write!(text, " (r = {r})");
            }
            let _ = write!(
                text,
                "\ndimension: {dim}\nM = {}, min v = {}",
                c.profile.m,
                c.profile.min_v()
            );
            for w in &c.witnesses {
                let _ = write!(
                    text,
                    "\n  v({}) = {} at q-triple {:?}",
                    w.arrow, w.v, w.triple
                );
            }
            if let Some(p) = &probe {
                let _ = write!(
                    text,
                    "\nparameter {} = {}{}; {}",
                    p.parameter.formula,
                    p.parameter.normalized,
                    if p.parameter.singular {
                        " (singular)"
                    } else {
                        ""
                    },
                    p.note
                );
                if let Some(w) = &p.socle_witness {
                    let _ = write!(text, "\nsocle witness: {w}");
                }
            }
            Ok(Report::new(
                OK,
                text,
                json!({ "classification": c, "dimension": dim, "singular_probe": probe }),
            ))
        }
        Verb::Degenerate { t, table, .. } => {
            let tv = f.parse(t)?;
            let v = verify_degeneration_isomorphism(&spec, &tv)?;
            let mut text = format!(
                "family: {}\nt = {}, dimension {}\n(dagger) failures: {:?}\nrelation images outside the ideal: {}\nbijective on the basis: {}\nA(0) = biserial table: {}\nA(1) = weighted table: {}\nverdict: {}",
                v.family,
                v.t,
                v.dimension,
                v.dagger_failures,
                v.relation_failures.len(),
                v.bijective,
                v.a0_is_biserial,
                v.a1_is_weighted,
                if v.pass { "pass" } else { "fail" }
            );
            let mut data = json!({ "verdict": v });
            if *table {
                let at = degeneration_algebra(&spec, &tv)?;
                let _ = write!(text, "\n{}", to_json(&at).trim_end());
                data["table"] = serde_json::from_str(&to_json(&at)).expect("valid json");
            }
            let status = if v.pass { OK } else { CHECK_FAILED };
            Ok(Report::new(status, text, data))
        }
        Verb::Walks { walk, census, .. } => {
            match (walk, census) {
                (Some(w), _) => {
                    let parsed = parse_walk(&spec, w)?;
                    let k = walk_classify(&spec, &parsed);
                    Ok(Report::new(
                        OK,
                        format!("{}: {k}", format_walk(&spec, &parsed)),
                        json!({ "walk": format_walk(&spec, &parsed), "kind": k }),
                    ))
                }
                (None, Some(n)) => {
                    let c = enumerate_walks(&spec, *n);
                    let bands: Vec<String> =
                        c.bands.iter().map(|b| format_walk(&spec, b)).collect();
                    let mut text = format!("strings by length (a string and its inverse counted once): {:?}\nbands: {}", c.strings_by_length, bands.len());
                    for b in &bands {
                        let _ = write!(text, "\n  {b}");
                    }
                    Ok(Report::new(
                        OK,
                        text,
                        json!({ "max_length": n, "strings_by_length": c.strings_by_length, "bands": bands }),
                    ))
                }
                (None, None) => Err(CliError::Usage("walks needs --walk or --census".into())),
            }
        }
        Verb::Validate(_) | Verb::Table { .. } | Verb::Builtin { .. } => {
            unreachable!("handled before")
        }
    }
}

/// Isomorphism test of `Omega^4(S_v)` against `S_v`.
fn omega4_iso<F: Field>(t: &AlgebraTable<F>, v: usize, seed: u64) -> wsa_core::Result<IsoVerdict> {
    let s = simple_module(t, v)?;
    let mut m = s.clone();
    for _ in 0..4 {
        m = syzygy(t, &m)?;
    }
    Ok(modules_isomorphic(&m, &s, t.vertex_count(), seed))
}

fn validate<F: Field>(doc: &SpecDocument, field: F) -> Result<Report, CliError> {
    let tq = match doc.triangulation() {
        Ok(tq) => tq,
        Err(wsa_core::Error::InvalidQuiver(r)) => {
            let text = format!("triangulation quiver: failed\n{r}");
            return Ok(Report::new(
                1,
                text,
                json!({ "triangulation_quiver": r, "assumptions": Value::Null }),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let spec = doc.instantiate(field)?;
    let a = spec.check_assumptions();
    let mut text = String::from("triangulation quiver: ok\n");
    if a.ok() {
        text.push_str("assumptions: ok");
    } else {
        let _ = write!(text, "assumptions: failed\n{a}");
    }
    for w in &spec.warnings {
        let _ = write!(text, "\nwarning: {w}");
    }
    let _ = tq;
    let status = if a.ok() { OK } else { 1 };
    Ok(Report::new(
        status,
        text,
        json!({ "triangulation_quiver": { "violations": [] }, "assumptions": a, "warnings": spec.warnings }),
    ))
}

fn info<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> Report {
    let tq = &spec.tq;
    let q = &tq.quiver;
    let mut text = String::new();
    if let Some(n) = &spec.name {
        let _ = writeln!(text, "name: {n}");
    }
    let _ = writeln!(text, "field: {}", spec.field.descriptor());
    let _ = writeln!(
        text,
        "vertices: {}  arrows: {}",
        tq.vertex_count(),
        tq.arrow_count()
    );
    let _ = writeln!(text, "f: {}", tq.format_cycles(&tq.f_orbits()));
    let _ = writeln!(text, "g-orbits (n, m, c):");
    let orbits = spec.orbit_table();
    for (cyc, n, m, c) in &orbits {
        let _ = writeln!(text, "  {cyc}  n = {n}, m = {m}, c = {c}");
    }
    let virt: Vec<&str> = spec
        .virtual_arrows()
        .into_iter()
        .map(|a| tq.id(a))
        .collect();
    let _ = writeln!(
        text,
        "virtual arrows: {}",
        if virt.is_empty() {
            "none".to_string()
        } else {
            virt.join(" ")
        }
    );
    let proj: Vec<(String, usize)> = (0..tq.vertex_count())
        .map(|v| (q.vertices[v].clone(), spec.projective_dimension(v)))
        .collect();
    let _ = writeln!(
        text,
        "dim P_i: {}",
        proj.iter()
            .map(|(v, d)| format!("{v}:{d}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let dims = [
        AlgebraKind::Weighted,
        AlgebraKind::Biserial,
        AlgebraKind::String,
    ]
    .map(|k| (k.label(), expected_dimension(spec, k)));
    let _ = writeln!(
        text,
        "dimension: {} (weighted, biserial), {} (string)",
        dims[0].1, dims[2].1
    );
    let gab = gabriel_quiver(spec);
    let _ = write!(
        text,
        "Gabriel quiver: {}",
        gab.iter()
            .map(|(a, s, t)| format!("{a}:{s}->{t}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let orbit_json: Vec<Value> = orbits
        .iter()
        .map(|(cyc, n, m, c)| json!({ "orbit": cyc, "n": n, "m": m, "c": c }))
        .collect();
    Report::new(
        OK,
        text,
        json!({
            "name": spec.name,
            "vertices": q.vertices,
            "f": tq.format_cycles(&tq.f_orbits()),
            "g_orbits": orbit_json,
            "virtual_arrows": virt,
            "projective_dimensions": proj,
            "dimensions": { "weighted": dims[0].1, "biserial": dims[1].1, "string": dims[2].1 },
            "gabriel_quiver": gab,
            "warnings": spec.warnings,
        }),
    )
}

pub fn render(cli: &Cli, label: &str, field: &str, report: &Report) -> String {
    match cli.format {
        Format::Text => report.text.clone(),
        Format::Json => match &report.raw_json {
            Some(raw) => raw.trim_end().to_string(),
            None => {
                let doc = json!({
                    "tool": "wsa",
                    "version": env!("CARGO_PKG_VERSION"),
                    "verb": verb_name(&cli.verb),
                    "input": label,
                    "field": field,
                    "status": report.status,
                    "report": report.data,
                });
                serde_json::to_string_pretty(&doc).expect("serializable")
            }
        },
    }
}
