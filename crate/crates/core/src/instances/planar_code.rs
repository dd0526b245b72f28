//! The `planar_code` binary format for embedded planar graphs.
//!
//! A file starts with `>>planar_code<<` (optionally `>>planar_code le<<` or
//! `>>planar_code be<<`). Each graph is its vertex count followed, for every
//! vertex, by its 1-indexed neighbors in rotation order and a terminating 0.
//! Entries are single bytes; graphs with 256 or more vertices start with a 0
//! byte and use two-byte entries throughout.

use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph, Vertex};

const HEADER: &[u8] = b">>planar_code<<";
const HEADER_LE: &[u8] = b">>planar_code le<<";
const HEADER_BE: &[u8] = b">>planar_code be<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarCodeError {
    #[error("missing >>planar_code<< header")]
    BadHeader,
    #[error("graph {index} is truncated at byte {offset}")]
    TruncatedGraph { index: usize, offset: usize },
    #[error("graph {index}: vertex {vertex} lists neighbor {value}, outside 1..={n}")]
    IndexOutOfRange {
        index: usize,
        vertex: Vertex,
        value: usize,
        n: usize,
    },
    #[error("graph {index}: {source}")]
    Graph { index: usize, source: GraphError },
    #[error("planar_code cannot represent {0}")]
    Unrepresentable(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Endian {
    Little,
    Big,
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    endian: Endian,
}

impl Reader<'_> {
    fn byte(&mut self) -> Option<usize> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        Some(b as usize)
    }

    fn word(&mut self) -> Option<usize> {
        let pair = self.bytes.get(self.pos..self.pos + 2)?;
        self.pos += 2;
        let pair = [pair[0], pair[1]];
        Some(match self.endian {
            Endian::Little => u16::from_le_bytes(pair),
            Endian::Big => u16::from_be_bytes(pair),
        } as usize)
    }
}

/// Raw rotation lists of one graph, before validation.
fn read_graph(r: &mut Reader<'_>, index: usize) -> Result<Vec<Vec<Vertex>>, PlanarCodeError> {
    let truncated = |r: &Reader<'_>| PlanarCodeError::TruncatedGraph {
        index,
        offset: r.pos,
    };
    let first = r.byte().ok_or_else(|| truncated(r))?;
    let wide = first == 0;
    let n = if wide {
        r.word().ok_or_else(|| truncated(r))?
    } else {
        first
    };
    let mut rotations = Vec::with_capacity(n);
    for vertex in 0..n {
        let mut rot = Vec::new();
        loop {
            let value = if wide { r.word() } else { r.byte() }.ok_or_else(|| truncated(r))?;
            if value == 0 {
                break;
            }
            if value > n {
                return Err(PlanarCodeError::IndexOutOfRange {
                    index,
                    vertex,
                    value,
                    n,
                });
            }
            rot.push(value - 1);
        }
        rotations.push(rot);
    }
    Ok(rotations)
}

fn reader(bytes: &[u8]) -> Result<Reader<'_>, PlanarCodeError> {
    for (header, endian) in [
        (HEADER_LE, Endian::Little),
        (HEADER_BE, Endian::Big),
        (HEADER, Endian::Little),
    ] {
        if bytes.starts_with(header) {
            return Ok(Reader {
                bytes,
                pos: header.len(),
                endian,
            });
        }
    }
    Err(PlanarCodeError::BadHeader)
}

/// Parses every graph in the stream; the first invalid graph is an error.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, PlanarCodeError> {
    let (graphs, skipped) = parse(bytes, false)?;
    debug_assert!(skipped.is_empty());
    Ok(graphs)
}

/// Parses every graph, skipping (and returning) graphs that fail validation.
/// Structural damage such as truncation is still fatal.
pub fn parse_planar_code_lenient(
    bytes: &[u8],
) -> Result<(Vec<PlaneGraph>, Vec<PlanarCodeError>), PlanarCodeError> {
    parse(bytes, true)
}

fn parse(
    bytes: &[u8],
    lenient: bool,
) -> Result<(Vec<PlaneGraph>, Vec<PlanarCodeError>), PlanarCodeError> {
    let mut r = reader(bytes)?;
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    let mut index = 0;
    while r.pos < bytes.len() {
        let rotations = read_graph(&mut r, index)?;
        match PlaneGraph::new(rotations) {
            Ok(g) => graphs.push(g),
            Err(source) if lenient => skipped.push(PlanarCodeError::Graph { index, source }),
            Err(source) => return Err(PlanarCodeError::Graph { index, source }),
        }
        index += 1;
    }
    Ok((graphs, skipped))
}

/// Appends the encoding of `g` (without header).
pub fn encode_graph(g: &PlaneGraph, out: &mut Vec<u8>) -> Result<(), PlanarCodeError> {
    let n = g.n();
    if n == 0 {
        return Err(PlanarCodeError::Unrepresentable("the empty graph"));
    }
    if n > u16::MAX as usize {
        return Err(PlanarCodeError::Unrepresentable("more than 65535 vertices"));
    }
    if !g.has_default_outer() {
        return Err(PlanarCodeError::Unrepresentable("an outer face override"));
    }
    if n < 256 {
        out.push(n as u8);
        for rot in g.rotations() {
            out.extend(rot.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    } else {
        out.push(0);
        out.extend((n as u16).to_le_bytes());
        for rot in g.rotations() {
            for &w in rot {
                out.extend(((w + 1) as u16).to_le_bytes());
            }
            out.extend(0u16.to_le_bytes());
        }
    }
    Ok(())
}

/// Header plus every graph. Large graphs use little-endian two-byte entries,
/// announced in the header.
pub fn write_planar_code<'a>(
    graphs: impl IntoIterator<Item = &'a PlaneGraph>,
) -> Result<Vec<u8>, PlanarCodeError> {
    let mut body = Vec::new();
    let mut wide = false;
    for g in graphs {
        wide |= g.n() >= 256;
        encode_graph(g, &mut body)?;
    }
    let mut out = if wide {
        HEADER_LE.to_vec()
    } else {
        HEADER.to_vec()
    };
    out.extend(body);
    Ok(out)
}
