//! Text format for code descriptions.
//!
//! ```text
//! # comment
//! [field]
//! p = 5
//! degree = 1
//! modulus = [0, 1]
//!
//! [blocks]
//! lengths = [3, 9]
//! shifts = ["2", "3"]
//!
//! [[generator]]
//! blocks = ["1 + 4*x + 3*x^2", "4 + 2*x + 3*x^2 + x^3"]
//! ```
//!
//! Element and polynomial literals follow [`Field::parse_elem`] and
//! [`Poly::parse`]. Malformed input yields [`Error::Syntax`] with a 1-based
//! line and column; well-formed input that describes no valid code yields
//! [`Error::Semantic`] naming the offending key.

use std::fmt::Write as _;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::mt::MtSpec;
use crate::poly::Poly;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: RawField,
    blocks: RawBlocks,
    #[serde(default)]
    generator: Vec<RawGenerator>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    p: Spanned<u32>,
    degree: Spanned<usize>,
    modulus: Spanned<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlocks {
    lengths: Spanned<Vec<usize>>,
    shifts: Spanned<Vec<Spanned<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    blocks: Spanned<Vec<Spanned<String>>>,
}

/// 1-based line and column of a byte offset.
fn position(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[line_start..].chars().count() + 1)
}

fn syntax(src: &str, offset: usize, message: String) -> Error {
    let (line, column) = position(src, offset);
    Error::Syntax { line, column, message }
}

fn semantic(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Semantic { field: field.into(), message: message.into() }
}

/// Re-anchors a literal error at its position in the file. `span` covers the
/// quoted string, so the literal itself starts one byte later.
fn locate(src: &str, span: Range<usize>, key: &str, err: Error) -> Error {
    match err {
        Error::Literal { column, message, .. } => {
            syntax(src, span.start + 1 + column, format!("{key}: {message}"))
        }
        other => semantic(key, other.to_string()),
    }
}

/// Parses a spec file into a validated [`MtSpec`].
pub fn parse_spec(src: &str) -> Result<MtSpec> {
    let raw: RawSpec = toml::from_str(src).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        syntax(src, offset, e.message().trim().to_string())
    })?;

    let f = &raw.field;
    let field = Field::new(*f.p.get_ref(), *f.degree.get_ref(), f.modulus.get_ref()).map_err(|e| {
        let key = match e {
            Error::NonPrimeCharacteristic(_) | Error::FieldTooLarge(_) => "field.p",
            _ => "field.modulus",
        };
        semantic(key, e.to_string())
    })?;

    let lengths = raw.blocks.lengths.get_ref().clone();
    let shift_lits = raw.blocks.shifts.get_ref();
    if lengths.is_empty() {
        return Err(semantic("blocks.lengths", "at least one block is required"));
    }
    if shift_lits.len() != lengths.len() {
        return Err(semantic(
            "blocks.shifts",
            format!("{} shift constants for {} blocks", shift_lits.len(), lengths.len()),
        ));
    }
    if let Some(i) = lengths.iter().position(|&m| m == 0) {
        return Err(semantic(format!("blocks.lengths[{i}]"), "block length must be positive"));
    }

    let mut shifts = Vec::with_capacity(lengths.len());
    for (i, lit) in shift_lits.iter().enumerate() {
        let key = format!("blocks.shifts[{i}]");
        let e = field
            .parse_elem(lit.get_ref())
            .map_err(|e| locate(src, lit.span(), &key, e))?;
        if e.is_zero() {
            return Err(semantic(key, "shift constant must be nonzero"));
        }
        shifts.push(e);
    }

    if raw.generator.is_empty() {
        return Err(semantic("generator", "at least one [[generator]] section is required"));
    }
    let mut gens = Vec::with_capacity(raw.generator.len());
    for (k, g) in raw.generator.iter().enumerate() {
        let entries = g.blocks.get_ref();
        if entries.len() != lengths.len() {
            return Err(semantic(
                format!("generator[{k}].blocks"),
                format!("{} entries for {} blocks", entries.len(), lengths.len()),
            ));
        }
        let mut row = Vec::with_capacity(entries.len());
        for (i, lit) in entries.iter().enumerate() {
            let key = format!("generator[{k}].blocks[{i}]");
            let poly = Poly::parse(&field, lit.get_ref()).map_err(|e| locate(src, lit.span(), &key, e))?;
            if let Some(d) = poly.degree() {
                if d >= lengths[i] {
                    return Err(semantic(
                        key,
                        format!("degree {d} overflows block length {}", lengths[i]),
                    ));
                }
            }
            row.push(poly);
        }
        gens.push(row);
    }
    MtSpec::new(&field, lengths, shifts, gens).map_err(|e| semantic("generator", e.to_string()))
}

fn quoted_list<I: IntoIterator<Item = String>>(items: I) -> String {
    let parts: Vec<String> = items.into_iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", parts.join(", "))
}

fn plain_list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Serializes a spec in the same format; `parse_spec` reads it back to an
/// equal value.
pub fn write_spec(spec: &MtSpec) -> String {
    let field = spec.field();
    let modulus: Vec<u32> = field.modulus().to_vec();
    let mut out = String::new();
    let _ = writeln!(out, "[field]");
    let _ = writeln!(out, "p = {}", field.characteristic());
    let _ = writeln!(out, "degree = {}", field.degree());
    let _ = writeln!(out, "modulus = {}", plain_list(&modulus));
    let _ = writeln!(out);
    let _ = writeln!(out, "[blocks]");
    let _ = writeln!(out, "lengths = {}", plain_list(spec.lengths()));
    let _ = writeln!(
        out,
        "shifts = {}",
        quoted_list(spec.shifts().iter().map(|&s: &Elem| field.format_elem(s)))
    );
    for row in spec.generators() {
        let _ = writeln!(out);
        let _ = writeln!(out, "[[generator]]");
        let _ = writeln!(out, "blocks = {}", quoted_list(row.iter().map(|p| p.to_string())));
    }
    out
}
