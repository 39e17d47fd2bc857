//! The presentation file format.
//!
//! ```text
//! vertices: 1 2
//! arrow a: 1 -> 2
//! arrow b: 2 -> 1
//! relation: a b a b    # traversal order: first-traversed arrow first
//! ```
//!
//! One directive per line, `#` starts a comment, blank lines are ignored.

use crate::algebra::MonomialPresentation;
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// A whitespace token with its 1-based column.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 1;
    for chunk in line.split_inclusive(char::is_whitespace) {
        let word = chunk.trim_end_matches(char::is_whitespace);
        if !word.is_empty() {
            out.push((col, word));
        }
        col += chunk.chars().count();
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<MonomialPresentation> {
    let mut vertices: Vec<String> = Vec::new();
    let mut seen_vertices = false;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    // relations stay unresolved until the quiver exists
    let mut relations: Vec<Vec<(usize, usize, String)>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens = tokenize(line);
        let Some(&(first_col, first)) = tokens.first() else {
            continue;
        };
        match first {
            "vertices:" => {
                if seen_vertices {
                    return Err(err(lineno, first_col, "duplicate `vertices:` directive"));
                }
                seen_vertices = true;
                vertices.extend(tokens[1..].iter().map(|&(_, t)| t.to_string()));
            }
            "arrow" => {
                // arrow NAME: SRC -> TGT
                let get = |i: usize| tokens.get(i).copied();
                let Some((c1, name)) = get(1) else {
                    return Err(err(lineno, first_col, "expected `arrow NAME: SRC -> TGT`"));
                };
                let Some(name) = name.strip_suffix(':') else {
                    return Err(err(lineno, c1, "expected `:` after the arrow name"));
                };
                let (Some((_, src)), Some((carrow, sep)), Some((_, tgt))) =
                    (get(2), get(3), get(4))
                else {
                    return Err(err(lineno, first_col, "expected `arrow NAME: SRC -> TGT`"));
                };
                if sep != "->" {
                    return Err(err(lineno, carrow, "expected `->` between the endpoints"));
                }
                if let Some(&(c, _)) = tokens.get(5) {
                    return Err(err(lineno, c, "trailing tokens after arrow declaration"));
                }
                arrows.push((name.to_string(), src.to_string(), tgt.to_string()));
            }
            "relation:" => {
                relations.push(
                    tokens[1..]
                        .iter()
                        .map(|&(c, t)| (lineno, c, t.to_string()))
                        .collect(),
                );
            }
            other => {
                return Err(err(
                    lineno,
                    first_col,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let quiver = Quiver::new(vertices, arrows)?;
    let mut generators = Vec::with_capacity(relations.len());
    for rel in relations {
        if rel.is_empty() {
            return Err(Error::RelationTooShort {
                relation: String::new(),
                length: 0,
            });
        }
        let mut ids = Vec::with_capacity(rel.len());
        for (lineno, col, name) in &rel {
            let Some(a) = quiver.arrow_by_name(name) else {
                return Err(err(*lineno, *col, format!("unknown arrow `{name}`")));
            };
            ids.push(a);
        }
        generators.push(Path::from_arrows(&quiver, ids)?);
    }
    MonomialPresentation::new(quiver, generators)
}

/// Canonical rendering; `parse(pretty_print(p))` reproduces `p` exactly.
pub fn pretty_print(presentation: &MonomialPresentation) -> String {
    let quiver = presentation.quiver();
    let mut out = String::new();
    out.push_str("vertices:");
    for v in quiver.vertices() {
        out.push(' ');
        out.push_str(quiver.vertex_name(v));
    }
    out.push('\n');
    for a in quiver.arrows() {
        let arrow = quiver.arrow(a);
        out.push_str(&format!(
            "arrow {}: {} -> {}\n",
            quiver.arrow_name(a),
            quiver.vertex_name(arrow.source),
            quiver.vertex_name(arrow.target)
        ));
    }
    for r in presentation.generators() {
        out.push_str(&format!("relation: {}\n", r.display(quiver)));
    }
    out
}
