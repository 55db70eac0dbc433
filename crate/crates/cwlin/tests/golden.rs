//! Every `.ideal` file under `golden/` must parse, carry at least one
//! expectation, evaluate with zero mismatches, and survive a print/reparse
//! round trip.

mod common;

use common::corpus;
use cwlin::parse::{parse, print};

#[test]
fn corpus_reproduces_expected_values() {
    let corpus = corpus();
    assert!(corpus.len() >= 12, "corpus too small: {}", corpus.len());
    let mut failures = Vec::new();
    for (name, text) in &corpus {
        let doc = parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!doc.expects.is_empty(), "{name}: no expectations");
        for m in common::eval_document(&doc) {
            failures.push(format!("{name}: {m}"));
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

#[test]
fn corpus_round_trips_through_printer() {
    for (name, text) in corpus() {
        let doc = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = print(&doc);
        let reparsed = parse(&printed)
            .unwrap_or_else(|e| panic!("{name}: printed form fails to parse: {e}\n{printed}"));
        assert_eq!(doc, reparsed, "{name}: round trip changed the document");
        assert_eq!(printed, print(&reparsed), "{name}: printer not idempotent");
    }
}
