#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use fum::instances::planar_code::parse_planar_code;
use fum::plane_graph::PlaneGraph;

pub fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("testdata")
        .join(name)
}

pub fn corpus_bytes() -> Vec<u8> {
    std::fs::read(testdata("plane_connected_n7.pc")).expect("corpus file")
}

/// Every connected plane graph with at most seven vertices, from the
/// reference corpus.
pub fn corpus() -> Vec<PlaneGraph> {
    parse_planar_code(&corpus_bytes()).expect("corpus parses")
}

pub fn corpus_upto(n_max: usize) -> Vec<PlaneGraph> {
    corpus().into_iter().filter(|g| g.n() <= n_max).collect()
}

/// Expected number of corpus graphs per vertex count.
pub fn corpus_counts() -> BTreeMap<usize, usize> {
    std::fs::read_to_string(testdata("plane_connected_n7.counts"))
        .expect("counts file")
        .lines()
        .filter_map(|line| {
            let mut it = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().expect("number"));
            Some((it.next()?, it.next()?))
        })
        .collect()
}
