//! Text format for rings, ideals, full sets, and expected-verdict
//! annotations.
//!
//! Grammar (one statement per `;`, `#` comments to end of line):
//!
//! ```text
//! ring x y ;
//! ideal I = x^3, x*y, y^3 ;
//! fullset L = { x, y, x*y } ;
//! assign L[x*y] = I ;            # or an inline generator list
//! expect cwl I = true ;          # golden-test annotation
//! ```
//!
//! A term is a `*`-separated product of `var` or `var^int` factors —
//! juxtaposition (`x2y`) is not accepted, so multi-character variable names
//! stay unambiguous. A term of total degree zero (`x^0`) denotes the unit
//! monomial, which is also how the unit ideal prints; the zero ideal has no
//! textual form. Errors carry a source location and a code: `E1xx` lexical,
//! `E2xx` syntactic, `E3xx` semantic.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::fullset::{Assignment, FullSet};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

pub const E_BAD_CHAR: &str = "E101";
pub const E_BAD_INT: &str = "E102";
pub const E_UNEXPECTED: &str = "E201";
pub const E_EOF: &str = "E202";
pub const E_NO_RING: &str = "E301";
pub const E_UNKNOWN_VAR: &str = "E302";
pub const E_UNKNOWN_NAME: &str = "E303";
pub const E_DUPLICATE: &str = "E304";
pub const E_SECOND_RING: &str = "E305";
pub const E_BAD_FULLSET: &str = "E306";
pub const E_NOT_ELEMENT: &str = "E307";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Lexical,
    Syntactic,
    Semantic,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{code} at {line}:{col}: {message}")]
pub struct ParseError {
    pub code: &'static str,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(code: &'static str, line: usize, col: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            code,
            line,
            col,
            message: message.into(),
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self.code.as_bytes()[1] {
            b'1' => ErrorClass::Lexical,
            b'2' => ErrorClass::Syntactic,
            _ => ErrorClass::Semantic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u32),
    Punct(char),
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<(Vec<Token>, (usize, usize)), ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let (start_line, start_col) = (line, col);
            let mut name = String::new();
            while chars
                .peek()
                .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
            {
                name.push(chars.next().unwrap());
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(name),
                line: start_line,
                col: start_col,
            });
        } else if c.is_ascii_digit() {
            let (start_line, start_col) = (line, col);
            let mut digits = String::new();
            while chars.peek().is_some_and(|&c| c.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
                col += 1;
            }
            let n: u32 = digits.parse().map_err(|_| {
                ParseError::new(
                    E_BAD_INT,
                    start_line,
                    start_col,
                    format!("integer `{digits}` does not fit in 32 bits"),
                )
            })?;
            out.push(Token {
                tok: Tok::Int(n),
                line: start_line,
                col: start_col,
            });
        } else if matches!(c, ';' | '=' | ',' | '^' | '*' | '{' | '}' | '[' | ']') {
            out.push(Token {
                tok: Tok::Punct(c),
                line,
                col,
            });
            chars.next();
            col += 1;
        } else {
            return Err(ParseError::new(
                E_BAD_CHAR,
                line,
                col,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok((out, (line, col)))
}

/// One full-set assignment statement, preserved as written (named reference
/// or inline generators) so documents print back faithfully.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignStatement {
    pub set: String,
    pub element: Monomial,
    pub value: AssignValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssignValue {
    Named(String),
    Inline(MonomialIdeal),
}

/// A golden-test annotation: `expect <op> <args>* = <value> ;`. The parser
/// records it; interpretation is up to the consumer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub op: String,
    pub args: Vec<String>,
    pub value: ExpectValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectValue {
    Bool(bool),
    Int(u32),
    Terms(Vec<Monomial>),
}

/// A parsed document: the ring, declarations in source order, and
/// annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub ring: Arc<Ring>,
    pub ideals: Vec<(String, MonomialIdeal)>,
    pub fullsets: Vec<(String, FullSet)>,
    pub assigns: Vec<AssignStatement>,
    pub expects: Vec<Expectation>,
}

impl IdealDocument {
    pub fn ideal(&self, name: &str) -> Option<&MonomialIdeal> {
        self.ideals
            .iter()
            .find_map(|(n, i)| (n == name).then_some(i))
    }

    pub fn fullset(&self, name: &str) -> Option<&FullSet> {
        self.fullsets
            .iter()
            .find_map(|(n, s)| (n == name).then_some(s))
    }

    /// Collects the assignment for one full set, resolving named references.
    /// Elements without an `assign` statement are simply absent; validation
    /// reports them.
    pub fn assignment_for(&self, set_name: &str) -> Assignment {
        let mut a = Assignment::new();
        for st in self.assigns.iter().filter(|st| st.set == set_name) {
            let value = match &st.value {
                AssignValue::Named(n) => self.ideal(n).expect("validated at parse time").clone(),
                AssignValue::Inline(i) => i.clone(),
            };
            a.insert(st.element.clone(), value);
        }
        a
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_err(&self, expected: &str) -> ParseError {
        ParseError::new(
            E_EOF,
            self.end.0,
            self.end.1,
            format!("unexpected end of input, expected {expected}"),
        )
    }

    fn unexpected(t: &Token, expected: &str) -> ParseError {
        ParseError::new(
            E_UNEXPECTED,
            t.line,
            t.col,
            format!("unexpected {}, expected {expected}", t.tok),
        )
    }

    fn at_punct(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Punct(p), .. }) if *p == c)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Punct(p), ..
            }) if p == c => Ok(()),
            Some(t) => Err(Self::unexpected(&t, &format!("`{c}`"))),
            None => Err(self.eof_err(&format!("`{c}`"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Ident(s),
                line,
                col,
            }) => Ok((s, line, col)),
            Some(t) => Err(Self::unexpected(&t, what)),
            None => Err(self.eof_err(what)),
        }
    }

    fn expect_int(&mut self) -> Result<u32, ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => Ok(n),
            Some(t) => Err(Self::unexpected(&t, "an integer")),
            None => Err(self.eof_err("an integer")),
        }
    }

    /// `var (^int)? (* var (^int)?)*`
    fn term(&mut self, ring: &Arc<Ring>) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u32; ring.arity()];
        loop {
            let (name, line, col) = self.expect_ident("a variable")?;
            let k = ring.index_of(&name).ok_or_else(|| {
                ParseError::new(
                    E_UNKNOWN_VAR,
                    line,
                    col,
                    format!("unknown variable `{name}`"),
                )
            })?;
            let e = if self.at_punct('^') {
                self.next();
                self.expect_int()?
            } else {
                1
            };
            exps[k] += e;
            if self.at_punct('*') {
                self.next();
            } else {
                break;
            }
        }
        Ok(Monomial::new(ring.clone(), exps))
    }

    fn term_list(&mut self, ring: &Arc<Ring>) -> Result<Vec<Monomial>, ParseError> {
        let mut terms = vec![self.term(ring)?];
        while self.at_punct(',') {
            self.next();
            terms.push(self.term(ring)?);
        }
        Ok(terms)
    }
}

fn require_ring(
    ring: &Option<Arc<Ring>>,
    line: usize,
    col: usize,
) -> Result<&Arc<Ring>, ParseError> {
    ring.as_ref().ok_or_else(|| {
        ParseError::new(
            E_NO_RING,
            line,
            col,
            "no ring declared before this statement",
        )
    })
}

pub fn parse(text: &str) -> Result<IdealDocument, ParseError> {
    let (toks, end) = lex(text)?;
    let mut p = Parser { toks, pos: 0, end };
    let mut ring: Option<Arc<Ring>> = None;
    let mut ideals: Vec<(String, MonomialIdeal)> = Vec::new();
    let mut fullsets: Vec<(String, FullSet)> = Vec::new();
    let mut assigns: Vec<AssignStatement> = Vec::new();
    let mut expects: Vec<Expectation> = Vec::new();

    while p.peek().is_some() {
        let (keyword, line, col) = p.expect_ident("a statement keyword")?;
        match keyword.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(ParseError::new(
                        E_SECOND_RING,
                        line,
                        col,
                        "the ring is already declared",
                    ));
                }
                let mut names = Vec::new();
                loop {
                    let (name, nline, ncol) = p.expect_ident("a variable name")?;
                    if names.contains(&name) {
                        return Err(ParseError::new(
                            E_DUPLICATE,
                            nline,
                            ncol,
                            format!("duplicate variable `{name}`"),
                        ));
                    }
                    names.push(name);
                    if p.at_punct(';') {
                        break;
                    }
                }
                p.expect_punct(';')?;
                ring = Some(Ring::new(names));
            }
            "ideal" => {
                let r = require_ring(&ring, line, col)?.clone();
                let (name, nline, ncol) = p.expect_ident("an ideal name")?;
                if ideals.iter().any(|(n, _)| *n == name) {
                    return Err(ParseError::new(
                        E_DUPLICATE,
                        nline,
                        ncol,
                        format!("ideal `{name}` is already declared"),
                    ));
                }
                p.expect_punct('=')?;
                let gens = p.term_list(&r)?;
                p.expect_punct(';')?;
                ideals.push((name, MonomialIdeal::new(r, gens)));
            }
            "fullset" => {
                let r = require_ring(&ring, line, col)?.clone();
                let (name, nline, ncol) = p.expect_ident("a full-set name")?;
                if fullsets.iter().any(|(n, _)| *n == name) {
                    return Err(ParseError::new(
                        E_DUPLICATE,
                        nline,
                        ncol,
                        format!("full set `{name}` is already declared"),
                    ));
                }
                p.expect_punct('=')?;
                p.expect_punct('{')?;
                let mut elements = Vec::new();
                if !p.at_punct('}') {
                    elements = p.term_list(&r)?;
                }
                p.expect_punct('}')?;
                p.expect_punct(';')?;
                let set = FullSet::new(elements).map_err(|e| {
                    ParseError::new(E_BAD_FULLSET, nline, ncol, format!("invalid full set: {e}"))
                })?;
                fullsets.push((name, set));
            }
            "assign" => {
                let r = require_ring(&ring, line, col)?.clone();
                let (set_name, nline, ncol) = p.expect_ident("a full-set name")?;
                let set = fullsets
                    .iter()
                    .find_map(|(n, s)| (*n == set_name).then_some(s))
                    .ok_or_else(|| {
                        ParseError::new(
                            E_UNKNOWN_NAME,
                            nline,
                            ncol,
                            format!("unknown full set `{set_name}`"),
                        )
                    })?;
                p.expect_punct('[')?;
                let element = p.term(&r)?;
                p.expect_punct(']')?;
                if !set.elements().contains(&element) {
                    return Err(ParseError::new(
                        E_NOT_ELEMENT,
                        nline,
                        ncol,
                        format!("`{element}` is not an element of `{set_name}`"),
                    ));
                }
                if assigns
                    .iter()
                    .any(|st| st.set == set_name && st.element == element)
                {
                    return Err(ParseError::new(
                        E_DUPLICATE,
                        nline,
                        ncol,
                        format!("`{set_name}[{element}]` is already assigned"),
                    ));
                }
                p.expect_punct('=')?;
                // a single identifier naming a declared ideal is a reference;
                // anything else must read as a generator list
                let value = match p.peek() {
                    Some(Token {
                        tok: Tok::Ident(name),
                        ..
                    }) if ideals.iter().any(|(n, _)| n == name) => {
                        let name = name.clone();
                        p.next();
                        AssignValue::Named(name)
                    }
                    Some(Token {
                        tok: Tok::Ident(name),
                        line,
                        col,
                    }) if r.index_of(name).is_none() => {
                        return Err(ParseError::new(
                            E_UNKNOWN_NAME,
                            *line,
                            *col,
                            format!("`{name}` is neither a declared ideal nor a variable"),
                        ));
                    }
                    _ => AssignValue::Inline(MonomialIdeal::new(r.clone(), p.term_list(&r)?)),
                };
                p.expect_punct(';')?;
                assigns.push(AssignStatement {
                    set: set_name,
                    element,
                    value,
                });
            }
            "expect" => {
                let (op, _, _) = p.expect_ident("an operation name")?;
                let mut args = Vec::new();
                while !p.at_punct('=') {
                    let (arg, _, _) = p.expect_ident("an argument or `=`")?;
                    args.push(arg);
                }
                p.expect_punct('=')?;
                let value = match p.peek() {
                    Some(Token {
                        tok: Tok::Ident(w), ..
                    }) if w == "true" || w == "false" => {
                        let b = w == "true";
                        p.next();
                        ExpectValue::Bool(b)
                    }
                    Some(Token {
                        tok: Tok::Int(_), ..
                    }) => ExpectValue::Int(p.expect_int()?),
                    _ => {
                        let r = require_ring(&ring, line, col)?.clone();
                        ExpectValue::Terms(p.term_list(&r)?)
                    }
                };
                p.expect_punct(';')?;
                expects.push(Expectation { op, args, value });
            }
            _ => {
                return Err(ParseError::new(
                    E_UNEXPECTED,
                    line,
                    col,
                    format!(
                        "unknown statement `{keyword}`, expected ring, ideal, fullset, \
                         assign, or expect"
                    ),
                ));
            }
        }
    }

    let Some(ring) = ring else {
        return Err(ParseError::new(
            E_NO_RING,
            p.end.0,
            p.end.1,
            "the document never declares a ring",
        ));
    };
    Ok(IdealDocument {
        ring,
        ideals,
        fullsets,
        assigns,
        expects,
    })
}

/// Parses a single term (monomial) against an existing ring; the whole input
/// must be one term.
pub fn parse_monomial(ring: &Arc<Ring>, text: &str) -> Result<Monomial, ParseError> {
    let (toks, end) = lex(text)?;
    let mut p = Parser { toks, pos: 0, end };
    let m = p.term(ring)?;
    match p.next() {
        None => Ok(m),
        Some(t) => Err(Parser::unexpected(&t, "end of input")),
    }
}

fn monomial_text(m: &Monomial) -> String {
    if m.is_unit() {
        // the unit monomial has no plain-product form; `x^0` re-parses to it
        format!("{}^0", m.ring().name(0))
    } else {
        m.to_string()
    }
}

fn gens_text(i: &MonomialIdeal) -> String {
    assert!(!i.is_zero(), "the zero ideal has no textual form");
    i.gens()
        .iter()
        .map(monomial_text)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Prints a document in the canonical layout `parse` accepts, one statement
/// per line. `parse(print(doc)) == doc` for every document this library
/// produces.
pub fn print(doc: &IdealDocument) -> String {
    let mut s = String::new();
    writeln!(s, "ring {} ;", doc.ring.names().join(" ")).unwrap();
    for (name, i) in &doc.ideals {
        writeln!(s, "ideal {name} = {} ;", gens_text(i)).unwrap();
    }
    for (name, set) in &doc.fullsets {
        let elements = set
            .elements()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(s, "fullset {name} = {{ {elements} }} ;").unwrap();
    }
    for st in &doc.assigns {
        let value = match &st.value {
            AssignValue::Named(n) => n.clone(),
            AssignValue::Inline(i) => gens_text(i),
        };
        writeln!(s, "assign {}[{}] = {value} ;", st.set, st.element).unwrap();
    }
    for e in &doc.expects {
        let mut head = e.op.clone();
        for a in &e.args {
            head.push(' ');
            head.push_str(a);
        }
        let value = match &e.value {
            ExpectValue::Bool(b) => b.to_string(),
            ExpectValue::Int(n) => n.to_string(),
            ExpectValue::Terms(ts) => ts.iter().map(monomial_text).collect::<Vec<_>>().join(", "),
        };
        writeln!(s, "expect {head} = {value} ;").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_generator_document() {
        let doc = parse("ring x y; ideal I = x^3, x*y, y^3;").unwrap();
        assert_eq!(doc.ring.names(), ["x", "y"]);
        let i = doc.ideal("I").unwrap();
        assert_eq!(i.gen_strings(), vec!["x*y", "x^3", "y^3"]);
    }

    #[test]
    fn parses_the_four_variable_document() {
        let doc = parse("ring a b c d; ideal J = a^2*b, a*b*c, b*c*d, c*d^2;").unwrap();
        let j = doc.ideal("J").unwrap();
        assert_eq!(j.mu(), 4);
        assert_eq!(j.gen_strings(), vec!["a^2*b", "a*b*c", "b*c*d", "c*d^2"]);
    }

    #[test]
    fn missing_ring_is_a_semantic_error() {
        let e = parse("ideal I = x^3;").unwrap_err();
        assert_eq!(e.code, E_NO_RING);
        assert_eq!(e.class(), ErrorClass::Semantic);
        assert_eq!((e.line, e.col), (1, 1));
    }

    #[test]
    fn lexical_errors_carry_locations() {
        let e = parse("ring x y;\nideal I = x$3;").unwrap_err();
        assert_eq!(e.code, E_BAD_CHAR);
        assert_eq!(e.class(), ErrorClass::Lexical);
        assert_eq!((e.line, e.col), (2, 12));
        let e = parse("ring x; ideal I = x^99999999999;").unwrap_err();
        assert_eq!(e.code, E_BAD_INT);
    }

    #[test]
    fn syntactic_errors_distinguish_eof() {
        let e = parse("ring x y; ideal I = ;").unwrap_err();
        assert_eq!(e.code, E_UNEXPECTED);
        assert_eq!(e.class(), ErrorClass::Syntactic);
        let e = parse("ring x y; ideal I = x^").unwrap_err();
        assert_eq!(e.code, E_EOF);
        let e = parse("ring x y; juxtapose I = x;").unwrap_err();
        assert_eq!(e.code, E_UNEXPECTED);
    }

    #[test]
    fn unknown_variables_and_names_are_semantic() {
        let e = parse("ring x y; ideal I = x*z;").unwrap_err();
        assert_eq!(e.code, E_UNKNOWN_VAR);
        assert_eq!((e.line, e.col), (1, 23));
        let e = parse("ring x y; fullset L = { x, y, x*y }; assign L[x] = Q;").unwrap_err();
        assert_eq!(e.code, E_UNKNOWN_NAME);
        let e = parse("ring x y; fullset L = { x }; assign M[x] = x;").unwrap_err();
        assert_eq!(e.code, E_UNKNOWN_NAME);
    }

    #[test]
    fn duplicates_and_second_rings_are_rejected() {
        assert_eq!(
            parse("ring x y; ideal I = x; ideal I = y;")
                .unwrap_err()
                .code,
            E_DUPLICATE
        );
        assert_eq!(parse("ring x y; ring z;").unwrap_err().code, E_SECOND_RING);
        assert_eq!(parse("ring x x;").unwrap_err().code, E_DUPLICATE);
    }

    #[test]
    fn fullset_statements_validate_their_sets() {
        let doc = parse("ring x y z; fullset L = { x, y, x*y };").unwrap();
        assert_eq!(doc.fullset("L").unwrap().elements().len(), 3);
        // {x, y} has no lcm inside the set
        let e = parse("ring x y; fullset L = { x, y };").unwrap_err();
        assert_eq!(e.code, E_BAD_FULLSET);
        let e = parse("ring x y; fullset L = { x^2 };").unwrap_err();
        assert_eq!(e.code, E_BAD_FULLSET);
    }

    #[test]
    fn assignments_resolve_names_and_elements() {
        let text = "ring x y ;\n\
                    ideal A = x^2 ;\n\
                    fullset L = { x, y, x*y } ;\n\
                    assign L[x] = A ;\n\
                    assign L[y] = y^3, x*y ;\n\
                    assign L[x*y] = x^0 ;\n";
        let doc = parse(text).unwrap();
        let a = doc.assignment_for("L");
        let r = &doc.ring;
        assert_eq!(
            a.get(&parse_monomial(r, "x").unwrap())
                .unwrap()
                .gen_strings(),
            vec!["x^2"]
        );
        assert_eq!(
            a.get(&parse_monomial(r, "y").unwrap())
                .unwrap()
                .gen_strings(),
            vec!["x*y", "y^3"]
        );
        assert!(a.get(&parse_monomial(r, "x*y").unwrap()).unwrap().is_unit());
        // an element outside the set
        let e = parse("ring x y; fullset L = { x, y, x*y }; assign L[x^2] = x;").unwrap_err();
        assert_eq!(e.code, E_NOT_ELEMENT);
        // double assignment
        let e = parse(
            "ring x y; ideal A = x; fullset L = { x, y, x*y }; \
             assign L[x] = A; assign L[x] = A;",
        )
        .unwrap_err();
        assert_eq!(e.code, E_DUPLICATE);
    }

    #[test]
    fn expectations_take_bools_ints_and_terms() {
        let text = "ring x y ;\n\
                    ideal I = x^3, x*y, y^3 ;\n\
                    expect cwl I = true ;\n\
                    expect reg I = 3 ;\n\
                    expect order I = x*y, x^3, y^3 ;\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.expects.len(), 3);
        assert_eq!(doc.expects[0].op, "cwl");
        assert_eq!(doc.expects[0].args, vec!["I"]);
        assert_eq!(doc.expects[0].value, ExpectValue::Bool(true));
        assert_eq!(doc.expects[1].value, ExpectValue::Int(3));
        match &doc.expects[2].value {
            ExpectValue::Terms(ts) => {
                let strings: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                assert_eq!(strings, vec!["x*y", "x^3", "y^3"]);
            }
            other => panic!("expected terms, got {other:?}"),
        }
    }

    #[test]
    fn print_then_parse_is_the_identity() {
        let text = "ring x y ;\n\
                    ideal A = x^2 ;\n\
                    ideal I = x^3, x*y, y^3 ;\n\
                    fullset L = { x, y, x*y } ;\n\
                    assign L[x] = A ;\n\
                    assign L[y] = x*y, y^3 ;\n\
                    assign L[x*y] = x^0 ;\n\
                    expect cwl I = true ;\n\
                    expect reg I = 3 ;\n";
        let doc = parse(text).unwrap();
        let printed = print(&doc);
        assert_eq!(parse(&printed).unwrap(), doc);
        // canonical text is a fixed point of print ∘ parse
        assert_eq!(print(&parse(&printed).unwrap()), printed);
    }

    #[test]
    fn single_monomials_parse_standalone() {
        let r = Ring::new(["x", "y"]);
        assert_eq!(parse_monomial(&r, "x^2*y").unwrap().to_string(), "x^2*y");
        assert!(parse_monomial(&r, "x^0").unwrap().is_unit());
        assert_eq!(parse_monomial(&r, "x y").unwrap_err().code, E_UNEXPECTED);
        assert_eq!(parse_monomial(&r, "z").unwrap_err().code, E_UNKNOWN_VAR);
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let doc = parse("# heading\nring x y ; # trailing\n# full line\nideal I = x ;").unwrap();
        assert_eq!(doc.ideal("I").unwrap().gen_strings(), vec!["x"]);
    }
}
