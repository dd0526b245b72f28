//! On-disk graph documents and DOT export.
//!
//! Rotation text lists one vertex per line as `v: n1 n2 ...` (0-indexed, in
//! rotation order), optionally followed by `outer: u v` lines naming a dart
//! whose left face is the outer face of its component, `color v c` lines and
//! `precolor v c` lines. `#` starts a comment. The JSON form has the same
//! fields; `planar_code` carries only the graph.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError, PathError, PrecoloredPath};
use crate::instances::planar_code::{self, PlanarCodeError};
use crate::plane_graph::{Dart, GraphError, PlaneGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    PlanarCode,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    PlanarCode(#[from] PlanarCodeError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{format:?} cannot represent {what}")]
    UnrepresentableInFormat { format: Format, what: &'static str },
    #[error("expected one graph, found {0}")]
    NotSingleGraph(usize),
}

/// A graph with an optional coloring and precolored path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: PlaneGraph,
    pub coloring: Option<Coloring>,
    pub precolored: Option<PrecoloredPath>,
}

impl GraphDocument {
    pub fn new(graph: PlaneGraph) -> Self {
        GraphDocument {
            graph,
            coloring: None,
            precolored: None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    rotations: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    outer: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<Color>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    precolored: Option<Vec<[usize; 2]>>,
}

/// Outer darts worth writing: none when every component uses its default.
fn outer_override(g: &PlaneGraph) -> Vec<Dart> {
    if g.has_default_outer() {
        Vec::new()
    } else {
        g.outer_darts()
    }
}

/// Rotation text for a graph with optional extras.
pub fn rotation_text(
    g: &PlaneGraph,
    coloring: Option<&Coloring>,
    precolored: Option<&PrecoloredPath>,
) -> String {
    let mut out = String::new();
    if g.n() == 0 {
        out.push_str("# empty graph\n");
    }
    for (v, rot) in g.rotations().iter().enumerate() {
        let _ = write!(out, "{v}:");
        for w in rot {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    for d in outer_override(g) {
        let _ = writeln!(out, "outer: {} {}", d.tail, d.head);
    }
    if let Some(p) = precolored {
        for &(v, c) in p.entries() {
            let _ = writeln!(out, "precolor {v} {c}");
        }
    }
    if let Some(c) = coloring {
        for (v, col) in c.colors().iter().enumerate() {
            let _ = writeln!(out, "color {v} {col}");
        }
    }
    out
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| FormatError::Syntax {
                line,
                message: format!("not a number: {t:?}"),
            })
        })
        .collect()
}

/// Parses rotation text.
pub fn parse_text(text: &str) -> Result<GraphDocument, FormatError> {
    let mut rotations: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut outer = Vec::new();
    let mut colors: Vec<(Vertex, usize, usize)> = Vec::new();
    let mut precolored = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: &str| FormatError::Syntax {
            line,
            message: message.to_string(),
        };
        if let Some(rest) = content.strip_prefix("outer:") {
            match parse_numbers(line, rest)?[..] {
                [u, v] => outer.push(Dart::new(u, v)),
                _ => return Err(syntax("expected `outer: u v`")),
            }
        } else if let Some(rest) = content.strip_prefix("precolor ") {
            match parse_numbers(line, rest)?[..] {
                [v, c] => precolored.push((v, c as Color)),
                _ => return Err(syntax("expected `precolor v c`")),
            }
        } else if let Some(rest) = content.strip_prefix("color ") {
            match parse_numbers(line, rest)?[..] {
                [v, c] => colors.push((v, c, line)),
                _ => return Err(syntax("expected `color v c`")),
            }
        } else if let Some((head, rest)) = content.split_once(':') {
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| syntax("expected a vertex number before `:`"))?;
            if v >= rotations.len() {
                rotations.resize(v + 1, None);
            }
            if rotations[v].is_some() {
                return Err(syntax("vertex listed twice"));
            }
            rotations[v] = Some(parse_numbers(line, rest)?);
        } else {
            return Err(syntax("unrecognized line"));
        }
    }
    let n = rotations.len();
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| {
            r.ok_or_else(|| FormatError::Syntax {
                line: 0,
                message: format!("vertex {v} has no rotation line"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let graph = PlaneGraph::with_outer(rotations, &outer)?;
    let coloring = if colors.is_empty() {
        None
    } else {
        let mut values: Vec<Option<Color>> = vec![None; n];
        for (v, c, line) in colors {
            let slot = values.get_mut(v).ok_or_else(|| FormatError::Syntax {
                line,
                message: format!("vertex {v} out of range"),
            })?;
            if slot.replace(c as Color).is_some() {
                return Err(FormatError::Syntax {
                    line,
                    message: format!("vertex {v} colored twice"),
                });
            }
        }
        let got = values.iter().filter(|c| c.is_some()).count();
        let values = values
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(ColoringError::PartialColoring { expected: n, got })?;
        Some(Coloring::new(values)?)
    };
    let precolored = if precolored.is_empty() {
        None
    } else {
        Some(PrecoloredPath::new(precolored)?)
    };
    Ok(GraphDocument {
        graph,
        coloring,
        precolored,
    })
}

pub fn to_json(doc: &GraphDocument) -> String {
    let json = JsonDocument {
        rotations: doc.graph.rotations().to_vec(),
        outer: outer_override(&doc.graph)
            .iter()
            .map(|d| [d.tail, d.head])
            .collect(),
        coloring: doc.coloring.as_ref().map(|c| c.colors().to_vec()),
        precolored: doc
            .precolored
            .as_ref()
            .map(|p| p.entries().iter().map(|&(v, c)| [v, c as usize]).collect()),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<GraphDocument, FormatError> {
    let json: JsonDocument = serde_json::from_str(text)?;
    let outer: Vec<Dart> = json.outer.iter().map(|&[u, v]| Dart::new(u, v)).collect();
    let graph = PlaneGraph::with_outer(json.rotations, &outer)?;
    let coloring = match json.coloring {
        Some(c) => {
            if c.len() != graph.n() {
                return Err(ColoringError::PartialColoring {
                    expected: graph.n(),
                    got: c.len(),
                }
                .into());
            }
            Some(Coloring::new(c)?)
        }
        None => None,
    };
    let precolored = match json.precolored {
        Some(p) => Some(PrecoloredPath::new(
            p.iter().map(|&[v, c]| (v, c as Color)).collect(),
        )?),
        None => None,
    };
    Ok(GraphDocument {
        graph,
        coloring,
        precolored,
    })
}

/// Guesses the format from the leading bytes.
pub fn sniff(bytes: &[u8]) -> Format {
    if bytes.starts_with(b">>planar_code") {
        return Format::PlanarCode;
    }
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => Format::Json,
        _ => Format::Text,
    }
}

/// Reads every document in `bytes` (planar_code files may hold many).
pub fn read_documents(bytes: &[u8]) -> Result<Vec<GraphDocument>, FormatError> {
    let text = || String::from_utf8_lossy(bytes);
    Ok(match sniff(bytes) {
        Format::PlanarCode => planar_code::parse_planar_code(bytes)?
            .into_iter()
            .map(GraphDocument::new)
            .collect(),
        Format::Json => vec![parse_json(&text())?],
        Format::Text => vec![parse_text(&text())?],
    })
}

/// Reads exactly one document.
pub fn read_document(bytes: &[u8]) -> Result<GraphDocument, FormatError> {
    let mut docs = read_documents(bytes)?;
    if docs.len() != 1 {
        return Err(FormatError::NotSingleGraph(docs.len()));
    }
    Ok(docs.pop().expect("one document"))
}

pub fn write_document(doc: &GraphDocument, format: Format) -> Result<Vec<u8>, FormatError> {
    Ok(match format {
        Format::Text => {
            rotation_text(&doc.graph, doc.coloring.as_ref(), doc.precolored.as_ref()).into_bytes()
        }
        Format::Json => to_json(doc).into_bytes(),
        Format::PlanarCode => {
            let unrepresentable = |what| FormatError::UnrepresentableInFormat { format, what };
            if doc.coloring.is_some() {
                return Err(unrepresentable("a coloring"));
            }
            if doc.precolored.is_some() {
                return Err(unrepresentable("a precolored path"));
            }
            if doc.graph.n() == 0 {
                return Err(unrepresentable("the empty graph"));
            }
            if !doc.graph.has_default_outer() {
                return Err(unrepresentable("an outer face override"));
            }
            planar_code::write_planar_code([&doc.graph])?
        }
    })
}

/// Graphviz text: vertices labeled by color (or index), color-4 vertices
/// filled, outer-face vertices drawn with a double border.
pub fn export_dot(g: &PlaneGraph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let mut attrs = Vec::new();
        match coloring {
            Some(c) => {
                attrs.push(format!("label=\"{v}:{}\"", c.get(v)));
                if c.get(v) == 4 {
                    attrs.push("style=filled".to_string());
                    attrs.push("fillcolor=\"#f4a261\"".to_string());
                }
            }
            None => attrs.push(format!("label=\"{v}\"")),
        }
        if g.is_outer_vertex(v) {
            attrs.push("peripheries=2".to_string());
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_text() {
        assert_eq!(
            rotation_text(&families::triangle(), None, None),
            "0: 1 2\n1: 2 0\n2: 0 1\n"
        );
    }

    #[test]
    fn text_round_trip_with_extras() {
        let doc = GraphDocument {
            graph: families::k4().reroot(Dart::new(0, 3)).unwrap(),
            coloring: Some(Coloring::new(vec![1, 2, 3, 4]).unwrap()),
            precolored: Some(PrecoloredPath::new(vec![(0, 1)]).unwrap()),
        };
        for format in [Format::Text, Format::Json] {
            let bytes = write_document(&doc, format).unwrap();
            assert_eq!(sniff(&bytes), format);
            assert_eq!(read_document(&bytes).unwrap(), doc);
        }
    }

    #[test]
    fn planar_code_rejects_extras() {
        let mut doc = GraphDocument::new(families::triangle());
        doc.coloring = Some(Coloring::new(vec![1, 2, 3]).unwrap());
        assert!(matches!(
            write_document(&doc, Format::PlanarCode).unwrap_err(),
            FormatError::UnrepresentableInFormat { .. }
        ));
        doc.coloring = None;
        let bytes = write_document(&doc, Format::PlanarCode).unwrap();
        assert_eq!(read_document(&bytes).unwrap(), doc);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            parse_text("0: 1\n1: x\n").unwrap_err(),
            FormatError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_text("0: 1\n").unwrap_err(),
            FormatError::Graph(_)
        ));
        assert!(matches!(
            parse_text("1: \n").unwrap_err(),
            FormatError::Syntax { .. }
        ));
        assert!(matches!(
            parse_text("0: 1\n1: 0\ncolor 0 1\n").unwrap_err(),
            FormatError::Coloring(ColoringError::PartialColoring {
                expected: 2,
                got: 1
            })
        ));
        let doc = parse_text("# comment\n0:\n").unwrap();
        assert_eq!(doc.graph.n(), 1);
        assert_eq!(parse_text("").unwrap().graph.n(), 0);
    }

    #[test]
    fn dot_output() {
        let dot = export_dot(
            &families::k4(),
            Some(&Coloring::new(vec![1, 2, 3, 4]).unwrap()),
        );
        assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 6);
        assert!(dot.contains("fillcolor"));
        let plain = export_dot(&families::triangle(), None);
        assert!(plain.contains("0 [label=\"0\", peripheries=2]"));
        assert_eq!(plain, export_dot(&families::triangle(), None));
    }
}
