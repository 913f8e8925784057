//! Plain-text layouts (`x y` per vertex) and packings (`cx cy r` per
//! vertex). Blank lines and `#` comments are ignored; a packing may carry a
//! `# outer K` line naming its enclosing circle.

use std::fmt::Write;

use galoisdraw_core::equilib::Layout;
use galoisdraw_core::packing::{Circle, Packing};

use crate::polytext::TextError;

fn numbers(text: &str, width: usize) -> Result<Vec<Vec<f64>>, (usize, TextError)> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != width {
            return Err((
                i + 1,
                TextError {
                    column: 1,
                    message: format!("expected {} numbers, found {}", width, fields.len()),
                },
            ));
        }
        let mut row = Vec::with_capacity(width);
        for f in fields {
            let v: f64 = f
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| {
                    (
                        i + 1,
                        TextError {
                            column: line.find(f).map_or(1, |c| c + 1),
                            message: format!("'{}' is not a finite number", f),
                        },
                    )
                })?;
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn locate(line: usize, e: TextError) -> TextError {
    TextError {
        column: e.column,
        message: format!("line {}: {}", line, e.message),
    }
}

pub fn read_layout(text: &str) -> Result<Layout, TextError> {
    let rows = numbers(text, 2).map_err(|(l, e)| locate(l, e))?;
    Ok(Layout::new(
        rows.into_iter().map(|r| [r[0], r[1]]).collect(),
    ))
}

pub fn write_layout(layout: &Layout) -> String {
    let mut out = String::new();
    for p in &layout.positions {
        let _ = writeln!(out, "{} {}", p[0], p[1]);
    }
    out
}

pub fn read_packing(text: &str) -> Result<Packing, TextError> {
    let rows = numbers(text, 3).map_err(|(l, e)| locate(l, e))?;
    let mut outer = None;
    for (i, raw) in text.lines().enumerate() {
        if let Some(rest) = raw.trim().strip_prefix("# outer ") {
            let k: usize = rest.trim().parse().map_err(|_| TextError {
                column: 9,
                message: format!("line {}: bad outer index '{}'", i + 1, rest.trim()),
            })?;
            if k >= rows.len() {
                return Err(TextError {
                    column: 9,
                    message: format!("line {}: outer index {} out of range", i + 1, k),
                });
            }
            outer = Some(k);
        }
    }
    Ok(Packing {
        circles: rows
            .into_iter()
            .map(|r| Circle::new(r[0], r[1], r[2]))
            .collect(),
        outer,
    })
}

pub fn write_packing(p: &Packing) -> String {
    let mut out = String::new();
    if let Some(k) = p.outer {
        let _ = writeln!(out, "# outer {}", k);
    }
    for c in &p.circles {
        let _ = writeln!(out, "{} {} {}", c.center.re, c.center.im, c.radius);
    }
    out
}
