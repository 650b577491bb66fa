//! Line-oriented spec file format.
//!
//! ```text
//! # comment
//! name disc
//! field GF(101)
//! vertices 1 2
//! arrow alpha 1 1
//! arrow beta 1 2
//! arrow gamma 2 1
//! arrow sigma 2 2
//! f (alpha beta gamma) (sigma)
//! m alpha 3
//! m beta 1
//! c alpha 2
//! ```
//!
//! `f` lists cycles (fixed points may be omitted, several `f` lines are
//! concatenated). `m` and `c` take any arrow of a `g`-orbit as representative;
//! missing orbits default to 1.

use std::fmt::Write;

use super::SpecDocument;
use crate::error::{Error, Result};

pub fn parse_spec_text(text: &str) -> Result<SpecDocument> {
    let mut doc = SpecDocument::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let args: Vec<&str> = rest.split_whitespace().collect();
        match key {
            "name" => {
                if rest.trim().is_empty() {
                    return Err(err("name needs a value".into()));
                }
                doc.name = Some(rest.trim().to_string());
            }
            "field" => {
                if args.len() != 1 {
                    return Err(err("field takes one argument".into()));
                }
                doc.field = Some(args[0].parse().map_err(|e: Error| err(e.to_string()))?);
            }
            "vertices" => {
                if args.is_empty() {
                    return Err(err("vertices needs at least one id".into()));
                }
                doc.vertices.extend(args.iter().map(|s| s.to_string()));
            }
            "arrow" => {
                if args.len() != 3 {
                    return Err(err("arrow takes: id source target".into()));
                }
                doc.arrows.push((
                    args[0].to_string(),
                    args[1].to_string(),
                    args[2].to_string(),
                ));
            }
            "f" => doc.f_cycles.extend(parse_cycles(rest).map_err(err)?),
            "m" => {
                if args.len() != 2 {
                    return Err(err("m takes: arrow value".into()));
                }
                let v: u32 = args[1]
                    .parse()
                    .map_err(|_| err(format!("bad multiplicity `{}`", args[1])))?;
                doc.multiplicity.push((args[0].to_string(), v));
            }
            "c" => {
                if args.len() != 2 {
                    return Err(err("c takes: arrow value".into()));
                }
                crate::field::parse_rational(args[1]).map_err(|e| err(e.to_string()))?;
                doc.weight.push((args[0].to_string(), args[1].to_string()));
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    if doc.vertices.is_empty() {
        return Err(Error::Parse("no vertices given".into()));
    }
    Ok(doc)
}

fn parse_cycles(s: &str) -> std::result::Result<Vec<Vec<String>>, String> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let cycle: Vec<String> = body[..close]
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if cycle.is_empty() {
            return Err("empty cycle".into());
        }
        out.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn write_spec_text(doc: &SpecDocument) -> String {
    let mut s = String::new();
    if let Some(name) = &doc.name {
        writeln!(s, "name {name}").unwrap();
    }
    if let Some(field) = &doc.field {
        writeln!(s, "field {field}").unwrap();
    }
    writeln!(s, "vertices {}", doc.vertices.join(" ")).unwrap();
    for (a, x, y) in &doc.arrows {
        writeln!(s, "arrow {a} {x} {y}").unwrap();
    }
    if !doc.f_cycles.is_empty() {
        let cycles: Vec<String> = doc
            .f_cycles
            .iter()
            .map(|c| format!("({})", c.join(" ")))
            .collect();
        writeln!(s, "f {}", cycles.join(" ")).unwrap();
    }
    for (a, m) in &doc.multiplicity {
        writeln!(s, "m {a} {m}").unwrap();
    }
    for (a, c) in &doc.weight {
        writeln!(s, "c {a} {c}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    const DISC: &str = "\
# disc
field GF(101)
vertices 1 2
arrow alpha 1 1
arrow beta 1 2
arrow gamma 2 1
arrow sigma 2 2
f (alpha beta gamma)
m alpha 3
c gamma 5
";

    #[test]
    fn parses_and_defaults() {
        let doc = parse_spec_text(DISC).unwrap();
        let spec = doc.instantiate(PrimeField::new(101).unwrap()).unwrap();
        let beta = spec.arrow("beta").unwrap();
        let alpha = spec.arrow("alpha").unwrap();
        assert_eq!(spec.q(alpha), 3);
        assert_eq!(spec.q(beta), 3);
        assert_eq!(*spec.c(beta), 5);
        assert_eq!(spec.dimension_formula(), 12);
    }

    #[test]
    fn rejects_unknown_keys_and_conflicts() {
        assert!(parse_spec_text("vertices 1\nweight a 2\n").is_err());
        let conflict = format!("{DISC}m beta 1\nm sigma 2\n");
        let doc = parse_spec_text(&conflict).unwrap();
        assert!(doc.instantiate(PrimeField::new(101).unwrap()).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let doc = parse_spec_text(DISC).unwrap();
        let spec = doc.instantiate(PrimeField::new(101).unwrap()).unwrap();
        let text = write_spec_text(&spec.to_document());
        let again = parse_spec_text(&text).unwrap();
        assert_eq!(write_spec_text(&again), text);
    }
}
