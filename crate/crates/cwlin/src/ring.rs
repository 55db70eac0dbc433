//! Polynomial rings and monomials with exponent-vector arithmetic.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A polynomial ring `k[x_1, ..., x_n]` over a field of characteristic zero,
/// identified by its ordered list of variable names.
///
/// Rings compare structurally: two rings are the same exactly when their
/// variable lists agree. Every monomial and ideal carries a shared handle to
/// its ring, and operations across distinct rings panic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    /// Builds a ring from variable names. Names must be nonempty and distinct.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "a ring needs at least one variable");
        for (i, a) in names.iter().enumerate() {
            assert!(!a.is_empty(), "empty variable name");
            assert!(!names[..i].contains(a), "duplicate variable name `{a}`");
        }
        Arc::new(Ring { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a variable name, if declared.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// All monomials of total degree `d`, in the canonical monomial order.
    pub fn monomials_of_degree(self: &Arc<Self>, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.arity()];
        fill_compositions(self, &mut exps, 0, d, &mut out);
        out.sort();
        out
    }
}

fn fill_compositions(
    ring: &Arc<Ring>,
    exps: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    out: &mut Vec<Monomial>,
) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.push(Monomial::new(ring.clone(), exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        fill_compositions(ring, exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

/// A monomial `x^a` in a fixed ring, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    ring: Arc<Ring>,
    exps: Vec<u32>,
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // The ring is deliberately left out: equal monomials still hash
        // equally, and lcm-closure loops hash millions of these.
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn new(ring: Arc<Ring>, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), ring.arity(), "exponent vector has wrong arity");
        Monomial { ring, exps }
    }

    pub fn unit(ring: Arc<Ring>) -> Monomial {
        let n = ring.arity();
        Monomial::new(ring, vec![0; n])
    }

    pub fn variable(ring: Arc<Ring>, i: usize) -> Monomial {
        let n = ring.arity();
        assert!(i < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial::new(ring, exps)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    fn assert_same_ring(&self, other: &Monomial) {
        assert_eq!(self.ring, other.ring, "monomials from different rings");
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.assert_same_ring(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.assert_same_ring(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial::new(self.ring.clone(), exps)
    }

    /// Exact division `self / other`; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.assert_same_ring(other);
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial::new(self.ring.clone(), exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.assert_same_ring(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(self.ring.clone(), exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.assert_same_ring(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(self.ring.clone(), exps)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self.exps.iter().map(|a| a * k).collect();
        Monomial::new(self.ring.clone(), exps)
    }
}

/// Canonical monomial order: ascending total degree, and within a degree the
/// variable-heavy side first (`x^3 < x^2*y < x*y^2 < y^3`). This is the order
/// used for generator lists, printing, and Betti table rows.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.assert_same_ring(other);
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ring.name(i))?;
            } else {
                write!(f, "{}^{}", self.ring.name(i), e)?;
            }
        }
        Ok(())
    }
}
