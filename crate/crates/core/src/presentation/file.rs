//! Line-oriented scenario file format for presentations.
//!
//! ```text
//! [meta]
//! name = BPGL2            # classifying stack of PGL2
//! bound = 4               # optional validity bound
//! [vars]
//! c2 = 2                  # classifying stack of PGL2
//! [relations]
//! 2*c3                    # classifying stack of PGL2
//! ```
//! Everything after `#` is a comment; blank lines are ignored.

use std::fmt::Write;

use super::RingPresentation;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableTable};

/// Writes `ring` with `anchor` on every line; `relation_anchors[i]`, when given,
/// replaces it on relation `i`.
pub fn dump_presentation(ring: &RingPresentation, anchor: &str, relation_anchors: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[meta]");
    let _ = writeln!(s, "name = {}  # {anchor}", ring.name());
    if let Some(b) = ring.validity_bound() {
        let _ = writeln!(s, "bound = {b}  # {anchor}");
    }
    let _ = writeln!(s, "[vars]");
    let t = ring.table();
    for (i, n) in t.names().iter().enumerate() {
        let _ = writeln!(s, "{n} = {}  # {anchor}", t.weight(i));
    }
    let _ = writeln!(s, "[relations]");
    for (i, r) in ring.relations().iter().enumerate() {
        let a = relation_anchors.get(i).map(String::as_str).unwrap_or(anchor);
        let _ = writeln!(s, "{r}  # {a}");
    }
    s
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse { offset: line, message: format!("line {}: {msg}", line + 1) }
}

pub fn parse_presentation(text: &str) -> Result<RingPresentation> {
    let mut section = "";
    let mut name = String::from("unnamed");
    let mut bound = None;
    let mut vars: Vec<(String, u32)> = Vec::new();
    let mut rels: Vec<(usize, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') && line.ends_with(']') {
            section = match &line[1..line.len() - 1] {
                "meta" => "meta",
                "vars" => "vars",
                "relations" => "relations",
                other => return Err(bad(ln, format!("unknown section [{other}]"))),
            };
            continue;
        }
        match section {
            "meta" | "vars" => {
                let (k, v) = line.split_once('=').ok_or_else(|| bad(ln, "expected key = value"))?;
                let (k, v) = (k.trim(), v.trim());
                if section == "vars" {
                    let d = v.parse().map_err(|_| bad(ln, format!("bad degree {v}")))?;
                    vars.push((k.to_string(), d));
                } else {
                    match k {
                        "name" => name = v.to_string(),
                        "bound" => bound = Some(v.parse().map_err(|_| bad(ln, format!("bad bound {v}")))?),
                        _ => {}
                    }
                }
            }
            "relations" => rels.push((ln, line.to_string())),
            _ => return Err(bad(ln, "content before the first section")),
        }
    }
    let table = VariableTable::new(&vars)?;
    let relations = rels
        .into_iter()
        .map(|(ln, r)| Polynomial::parse(&table, &r).map_err(|e| bad(ln, e)))
        .collect::<Result<Vec<_>>>()?;
    RingPresentation::new(name, &table, relations, bound)
}
