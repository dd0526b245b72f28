mod common;

use std::collections::{BTreeMap, HashSet};

use fum::format::{self, Format, GraphDocument};
use fum::instances::canonical_id;
use fum::instances::enumerate::{canonical_code, enumerate_small, enumerate_subcubic};
use fum::instances::planar_code::{encode_graph, parse_planar_code, write_planar_code};

#[test]
fn corpus_counts_match_manifest() {
    let graphs = common::corpus();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &graphs {
        assert!(g.is_connected());
        *counts.entry(g.n()).or_default() += 1;
    }
    assert_eq!(counts, common::corpus_counts());
}

#[test]
fn enumerator_agrees_with_corpus() {
    let corpus: HashSet<Vec<u16>> = common::corpus().iter().map(canonical_code).collect();
    assert_eq!(
        corpus.len(),
        common::corpus().len(),
        "corpus embeddings are pairwise distinct"
    );
    let enumerated = enumerate_small(7);
    let ours: HashSet<Vec<u16>> = enumerated.iter().map(canonical_code).collect();
    assert_eq!(ours.len(), enumerated.len());
    assert_eq!(ours, corpus);
}

#[test]
fn subcubic_enumeration_is_the_subcubic_part_of_the_corpus() {
    let corpus: HashSet<Vec<u16>> = common::corpus()
        .iter()
        .filter(|g| g.max_degree() <= 3)
        .map(canonical_code)
        .collect();
    let ours: HashSet<Vec<u16>> = enumerate_subcubic(7).iter().map(canonical_code).collect();
    assert_eq!(ours, corpus);
}

#[test]
fn planar_code_round_trip_is_byte_exact() {
    let bytes = common::corpus_bytes();
    let graphs = parse_planar_code(&bytes).unwrap();
    assert_eq!(write_planar_code(graphs.iter()).unwrap(), bytes);
    for g in graphs.iter().filter(|g| g.n() <= 6) {
        let mut one = Vec::new();
        encode_graph(g, &mut one).unwrap();
        let mut framed = b">>planar_code<<".to_vec();
        framed.extend(&one);
        let back = parse_planar_code(&framed).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(&back[0], g);
    }
}

#[test]
fn text_and_json_round_trips_are_byte_exact() {
    for g in common::corpus_upto(6) {
        let doc = GraphDocument::new(g);
        for fmt in [Format::Text, Format::Json, Format::PlanarCode] {
            let bytes = format::write_document(&doc, fmt).unwrap();
            let back = format::read_document(&bytes).unwrap();
            assert_eq!(back, doc);
            assert_eq!(format::write_document(&back, fmt).unwrap(), bytes);
        }
    }
}

#[test]
fn canonical_ids_are_unique_on_corpus() {
    let graphs = common::corpus();
    let ids: HashSet<String> = graphs.iter().map(canonical_id).collect();
    // An id encodes its graph, so distinct embeddings never share one.
    assert_eq!(ids.len(), graphs.len());
}

#[test]
fn truncated_corpus_is_reported() {
    let bytes = common::corpus_bytes();
    let cut = &bytes[..bytes.len() - 3];
    assert!(parse_planar_code(cut).is_err());
}
