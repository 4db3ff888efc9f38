use std::collections::BTreeSet;
use std::fs::File;
use std::io::BufReader;

use shannon_core::census::{canonical_form, enumerate_connected, run_census, CensusRow};
use shannon_core::{graph6, Error};

fn fixture(n: usize) -> BufReader<File> {
    let path = format!("{}/tests/data/connected{n}.g6", env!("CARGO_MANIFEST_DIR"));
    BufReader::new(File::open(path).unwrap())
}

/// Published counts: order, total, simplicial-free, transverse-free,
/// two-triangle-free, both.
const ROWS: [[u64; 6]; 7] = [
    [1, 1, 0, 1, 0, 0],
    [2, 1, 0, 0, 1, 0],
    [3, 2, 0, 0, 1, 0],
    [4, 6, 1, 1, 3, 1],
    [5, 21, 4, 2, 10, 2],
    [6, 112, 24, 9, 52, 7],
    [7, 853, 191, 46, 363, 34],
];

fn as_array(r: &CensusRow) -> [u64; 6] {
    [
        r.order as u64,
        r.total,
        r.simplicial_free,
        r.transverse_free,
        r.two_triangle_free,
        r.both,
    ]
}

#[test]
fn stream_census_matches_published_rows() {
    for expected in ROWS {
        let n = expected[0] as usize;
        let row = run_census(fixture(n), n).unwrap();
        assert_eq!(as_array(&row), expected);
        assert!(row.both <= row.transverse_free.min(row.two_triangle_free));
    }
}

#[test]
fn generator_matches_external_stream() {
    use std::io::BufRead;
    for n in 1..=7 {
        let external: BTreeSet<u64> = fixture(n)
            .lines()
            .enumerate()
            .map(|(i, l)| canonical_form(&graph6::decode(&l.unwrap(), i).unwrap()).unwrap())
            .collect();
        let generated = enumerate_connected(n).unwrap();
        let ours: BTreeSet<u64> = generated.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(ours.len(), generated.len());
        assert_eq!(ours, external, "order {n}");
        assert_eq!(
            CensusRow::from_graphs(n, &generated),
            run_census(fixture(n), n).unwrap()
        );
    }
}

#[test]
fn wrong_order_is_malformed() {
    let err = run_census(fixture(4), 5).unwrap_err();
    assert!(matches!(err, Error::MalformedGraph6 { record: 0, .. }));
}
