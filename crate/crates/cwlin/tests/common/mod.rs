//! Shared fixtures for the integration tests: the golden-corpus expectation
//! driver, corpus loading, and the malformed-input table. Each test binary
//! uses its own slice of this module.
#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use cwlin::betti::{has_linear_resolution, is_componentwise_linear, regularity};
use cwlin::dim2::{cwl_ordering, fullsum_verdict, reg_plus_one_verdict};
use cwlin::fullset::{assemble, validate_assignment, FullSet};
use cwlin::ideal::MonomialIdeal;
use cwlin::parse::{ExpectValue, Expectation, IdealDocument};
use cwlin::verdict::{Verdict, WitnessData};

/// Loads the golden corpus as (file name, text) pairs, sorted by name.
pub fn corpus() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .expect("golden corpus directory")
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "ideal"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&p).unwrap())
        })
        .collect()
}

/// One entry per distinct failure mode the grammar can produce: lexical
/// (E1xx), syntactic (E2xx), and semantic (E3xx).
pub const MALFORMED: &[(&str, &str)] = &[
    ("ideal I = x^3 ;", "E301"),
    ("", "E301"),
    ("ring x y ; ring z ;", "E305"),
    ("ring x x ;", "E304"),
    ("ring x y ; ideal I = x ; ideal I = y ;", "E304"),
    ("ring x y ; ideal I = z^2 ;", "E302"),
    ("ring x y ; ideal I = x ; expect cwl I = maybe ;", "E302"),
    (
        "ring x y ; fullset L = { x, y, x*y } ; assign L[z] = x ;",
        "E302",
    ),
    ("ring x y ; assign L[x] = x^2 ;", "E303"),
    (
        "ring x y ; fullset L = { x, y, x*y } ; assign L[x^2] = x ;",
        "E307",
    ),
    ("ring x y ; fullset L = { x, y } ;", "E306"),
    ("ring x y ; fullset L = { } ;", "E306"),
    ("ring x y ; ideal I = x + y ;", "E101"),
    ("ring x y ; ideal I = x$3 ;", "E101"),
    ("ring x y ; ideal I = x^99999999999999999999 ;", "E102"),
    ("ring x y ; ideal I = x^3", "E202"),
    ("ring x y ; ideal I = ;", "E201"),
    ("ring ;", "E201"),
    ("ring x y ; sum K = x ;", "E201"),
    ("ring x y ; ideal 5 = x ;", "E201"),
    ("ring x y ; ideal I x ;", "E201"),
    ("ring x y ; ideal I = x^ ;", "E201"),
];

/// Runs every expectation in `doc`; returns one message per mismatch.
pub fn eval_document(doc: &IdealDocument) -> Vec<String> {
    doc.expects
        .iter()
        .filter_map(|e| {
            let expected = render_expected(e);
            let actual = evaluate(doc, e);
            (expected != actual).then(|| {
                format!(
                    "expect {} {}: expected {}, got {}",
                    e.op,
                    e.args.join(" "),
                    expected,
                    actual
                )
            })
        })
        .collect()
}

/// Sequence-significant ops compare terms in the written order; everything
/// else treats a term list as a generating set.
fn ordered_op(op: &str) -> bool {
    matches!(op, "ordering" | "ordering_colons")
}

fn render_terms(mut terms: Vec<String>, sorted: bool) -> String {
    if sorted {
        terms.sort();
    }
    terms.join(", ")
}

fn render_expected(e: &Expectation) -> String {
    match &e.value {
        ExpectValue::Bool(b) => b.to_string(),
        ExpectValue::Int(n) => n.to_string(),
        ExpectValue::Terms(ts) => render_terms(
            ts.iter().map(|t| t.to_string()).collect(),
            !ordered_op(&e.op),
        ),
    }
}

fn named<'a>(doc: &'a IdealDocument, name: &str) -> &'a MonomialIdeal {
    doc.ideal(name)
        .unwrap_or_else(|| panic!("no ideal named {name}"))
}

fn named_set<'a>(doc: &'a IdealDocument, name: &str) -> &'a FullSet {
    doc.fullset(name)
        .unwrap_or_else(|| panic!("no full set named {name}"))
}

fn witness_gens(v: &Verdict, description: &str) -> Vec<String> {
    let w = v
        .witnesses
        .iter()
        .find(|w| w.description == description)
        .unwrap_or_else(|| panic!("verdict {} has no witness {description}", v.criterion));
    match &w.data {
        WitnessData::Ideal(gens) => gens.clone(),
        other => panic!("witness {description} is not an ideal: {other:?}"),
    }
}

/// A conclusion from a worked example must be definite, and any attached
/// cross-check must have agreed; anything else is an implementation bug the
/// corpus should surface loudly.
fn decided(v: &Verdict) -> String {
    assert!(v.applicable, "{} verdict inapplicable", v.criterion);
    assert_ne!(
        v.cross_check,
        Some(false),
        "{} cross-check contradicted",
        v.criterion
    );
    v.conclusion
        .decided()
        .unwrap_or_else(|| panic!("{} verdict inconclusive", v.criterion))
        .to_string()
}

fn forced_assembly(doc: &IdealDocument, name: &str) -> MonomialIdeal {
    let set = named_set(doc, name);
    assemble(set, &doc.assignment_for(name), true).expect("forced assembly cannot fail")
}

fn evaluate(doc: &IdealDocument, e: &Expectation) -> String {
    let arg = |k: usize| -> &str {
        e.args
            .get(k)
            .unwrap_or_else(|| panic!("expect {} needs argument {k}", e.op))
    };
    let one = || named(doc, arg(0));
    let two = || (named(doc, arg(0)), named(doc, arg(1)));
    match e.op.as_str() {
        "cwl" => is_componentwise_linear(one()).unwrap().to_string(),
        "linear" => has_linear_resolution(one()).unwrap().to_string(),
        "reg" => regularity(one()).unwrap().regularity.to_string(),
        "o" => one().order().expect("zero ideal has no order").to_string(),
        "mu" => one().mu().to_string(),
        "sum_cwl" => {
            let (i, j) = two();
            is_componentwise_linear(&i.sum(j)).unwrap().to_string()
        }
        "reg_intersect" => {
            let (i, j) = two();
            regularity(&i.intersect(j)).unwrap().regularity.to_string()
        }
        "o_intersect" => {
            let (i, j) = two();
            i.intersect(j)
                .order()
                .expect("intersection is zero")
                .to_string()
        }
        "intersect" => {
            let (i, j) = two();
            render_terms(i.intersect(j).gen_strings(), true)
        }
        "sum" => {
            let (i, j) = two();
            render_terms(i.sum(j).gen_strings(), true)
        }
        "product" => {
            let (i, j) = two();
            render_terms(i.product(j).gen_strings(), true)
        }
        "colon" => {
            let (i, j) = two();
            render_terms(i.colon(j).unwrap().gen_strings(), true)
        }
        "fullsum" => {
            let (i, j) = two();
            decided(&fullsum_verdict(i, j))
        }
        "fullsum_socle" => {
            let (i, j) = two();
            render_terms(witness_gens(&fullsum_verdict(i, j), "(I+J):m"), true)
        }
        "reg_plus_one" => {
            let (i, j) = two();
            decided(&reg_plus_one_verdict(i, j, None))
        }
        "reg_plus_one_witness_i" => {
            let (i, j) = two();
            let v = reg_plus_one_verdict(i, j, None);
            render_terms(witness_gens(&v, "(m^{s+1}I':f')"), true)
        }
        "ordering" => {
            let cert = cwl_ordering(one()).unwrap();
            render_terms(cert.order.iter().map(|m| m.to_string()).collect(), false)
        }
        "ordering_colons" => {
            let cert = cwl_ordering(one()).unwrap();
            render_terms(
                cert.colon_vars.iter().map(|m| m.to_string()).collect(),
                false,
            )
        }
        "validate" => {
            let set = named_set(doc, arg(0));
            validate_assignment(set, &doc.assignment_for(arg(0)))
                .unwrap()
                .holds()
                .to_string()
        }
        "assemble" => render_terms(forced_assembly(doc, arg(0)).gen_strings(), true),
        "assemble_cwl" => is_componentwise_linear(&forced_assembly(doc, arg(0)))
            .unwrap()
            .to_string(),
        other => panic!("unknown expectation op {other}"),
    }
}
