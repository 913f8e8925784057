//! Graph descriptors: `NAME(:INT)*` or `file:PATH`.
//!
//! An edge-list file holds one `u v` pair per line. A line with a single
//! integer fixes the vertex count; otherwise it is one more than the largest
//! index. `#` starts a comment.

use std::fmt;
use std::fs;

use galoisdraw_core::graphlab::{build_graph, pack_layout, Graph, GraphSpec, PackLayout};

/// A parse failure at a 1-based column of the descriptor, or at a line and
/// column of an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub input: String,
    pub line: Option<usize>,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{}:{}:{}: {}", self.input, l, self.column, self.message),
            None => write!(
                f,
                "graph spec {:?}, column {}: {}",
                self.input, self.column, self.message
            ),
        }
    }
}

impl std::error::Error for SpecError {}

const NAMES: [(&str, usize); 9] = [
    ("cycle", 1),
    ("path", 1),
    ("bipyr", 1),
    ("pack", 2),
    ("complete", 1),
    ("y9", 0),
    ("h12", 0),
    ("kk4", 0),
    ("grid2x3", 0),
];

fn err(input: &str, column: usize, message: impl Into<String>) -> SpecError {
    SpecError {
        input: input.into(),
        line: None,
        column,
        message: message.into(),
    }
}

pub fn parse_graph_spec(s: &str) -> Result<GraphSpec, SpecError> {
    if let Some(path) = s.strip_prefix("file:") {
        if path.is_empty() {
            return Err(err(s, 6, "expected a path after 'file:'"));
        }
        let text = fs::read_to_string(path)
            .map_err(|e| err(s, 6, format!("cannot read {}: {}", path, e)))?;
        return parse_edge_list(path, &text);
    }
    let mut parts = s.split(':');
    let name = parts.next().unwrap_or("");
    if name.is_empty() {
        return Err(err(s, 1, "expected a graph name"));
    }
    let Some(&(_, arity)) = NAMES.iter().find(|(n, _)| *n == name) else {
        let known: Vec<&str> = NAMES.iter().map(|(n, _)| *n).collect();
        return Err(err(
            s,
            1,
            format!(
                "unknown graph name '{}' (known: {}, file:PATH)",
                name,
                known.join(", ")
            ),
        ));
    };
    let mut args = Vec::new();
    let mut column = name.len() + 2;
    for part in parts {
        if args.len() == arity {
            return Err(err(
                s,
                column - 1,
                format!(
                    "'{}' takes {} argument{}",
                    name,
                    arity,
                    if arity == 1 { "" } else { "s" }
                ),
            ));
        }
        if part.is_empty() || !part.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err(
                s,
                column,
                format!("expected an integer, found '{}'", part),
            ));
        }
        let v: usize = part
            .parse()
            .map_err(|_| err(s, column, format!("integer '{}' is too large", part)))?;
        args.push(v);
        column += part.len() + 1;
    }
    if args.len() != arity {
        return Err(err(
            s,
            s.len() + 1,
            format!(
                "'{}' takes {} argument{}, got {}",
                name,
                arity,
                if arity == 1 { "" } else { "s" },
                args.len()
            ),
        ));
    }
    Ok(match name {
        "cycle" => GraphSpec::Cycle(args[0]),
        "path" => GraphSpec::Path(args[0]),
        "bipyr" => GraphSpec::Bipyr(args[0]),
        "pack" => GraphSpec::Pack(args[0], args[1]),
        "complete" => GraphSpec::Complete(args[0]),
        "y9" => GraphSpec::Y9,
        "h12" => GraphSpec::H12,
        "kk4" => GraphSpec::Kk4,
        _ => GraphSpec::Grid2x3,
    })
}

fn parse_edge_list(path: &str, text: &str) -> Result<GraphSpec, SpecError> {
    let at = |line: usize, column: usize, message: String| SpecError {
        input: path.into(),
        line: Some(line),
        column,
        message,
    };
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut fields = Vec::new();
        let mut start = None;
        for (j, ch) in line.char_indices().chain([(line.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    fields.push((s + 1, &line[s..j]));
                    start = None;
                }
                _ => {}
            }
        }
        let mut values = Vec::with_capacity(fields.len());
        for &(col, tok) in &fields {
            let v: usize = tok.parse().map_err(|_| {
                at(
                    i + 1,
                    col,
                    format!("expected a vertex index, found '{}'", tok),
                )
            })?;
            values.push(v);
        }
        match values.len() {
            0 => {}
            1 => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(at(
                        i + 1,
                        fields[0].0,
                        "vertex count must come before the edges".into(),
                    ));
                }
                declared = Some(values[0]);
            }
            2 => edges.push((values[0], values[1])),
            _ => {
                return Err(at(
                    i + 1,
                    fields[2].0,
                    "expected two indices per line".into(),
                ))
            }
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(GraphSpec::EdgeList { n, edges })
}

/// Parse and build, keeping the descriptor as the graph name.
pub fn load_graph(s: &str) -> Result<Graph, SpecError> {
    let spec = parse_graph_spec(s)?;
    let g = build_graph(&spec).map_err(|e| err(s, 1, e.to_string()))?;
    Ok(match spec {
        GraphSpec::EdgeList { .. } => g,
        other => g.with_name(&other.name()),
    })
}

/// Hub pair for concentric normalization, when the family has one.
pub fn hubs(spec: &GraphSpec) -> Option<(usize, usize)> {
    match *spec {
        GraphSpec::Bipyr(k) => Some((k, k + 1)),
        GraphSpec::Pack(k, n) => pack_layout(k, n).ok().map(
            |(
                _,
                PackLayout {
                    inner_hub,
                    outer_hub,
                    ..
                },
            )| (inner_hub, outer_hub),
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_specs() {
        assert_eq!(parse_graph_spec("cycle:7").unwrap(), GraphSpec::Cycle(7));
        assert_eq!(parse_graph_spec("pack:2:5").unwrap(), GraphSpec::Pack(2, 5));
        assert_eq!(parse_graph_spec("y9").unwrap(), GraphSpec::Y9);
    }

    #[test]
    fn arity_and_position() {
        let e = parse_graph_spec("cycle:7:9").unwrap_err();
        assert_eq!(e.column, 8);
        assert!(e.message.contains("takes 1 argument"));
        let e = parse_graph_spec("pack:2").unwrap_err();
        assert!(e.message.contains("got 1"));
        let e = parse_graph_spec("bipyr:x").unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_graph_spec("cube:3").unwrap_err();
        assert_eq!(e.column, 1);
        assert!(e.to_string().contains("unknown graph name 'cube'"));
        assert!(parse_graph_spec("y9:1").is_err());
        assert!(parse_graph_spec("").is_err());
    }

    #[test]
    fn edge_list_text() {
        let s = parse_edge_list("g.txt", "# square\n4\n0 1\n1 2\n2 3 # last\n3 0\n").unwrap();
        assert_eq!(
            s,
            GraphSpec::EdgeList {
                n: 4,
                edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)]
            }
        );
        let e = parse_edge_list("g.txt", "0 1\n1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (Some(2), 3));
        assert_eq!(
            e.to_string(),
            "g.txt:2:3: expected a vertex index, found 'x'"
        );
    }
}
