//! Monomial ideals, kept in minimal-generator form at all times.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::ring::{Monomial, Ring};

/// Errors from ideal operations whose preconditions can fail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("the zero ideal has no generator data for this operation")]
    ZeroIdeal,
    #[error("the unit ideal is not a valid input for this operation")]
    UnitIdeal,
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,
    #[error("bound too small: a generator of degree {0} sits at the scan boundary")]
    BoundTooSmall(u32),
    #[error("unsatisfiable random-ideal parameters: {0}")]
    Unsatisfiable(String),
    #[error("operation requires a two-variable ring")]
    NotArityTwo,
}

/// A monomial ideal presented by its unique minimal set of monomial
/// generators, sorted in the canonical monomial order.
///
/// The zero ideal has an empty generator list; the unit ideal's list is the
/// single unit monomial. Both are valid values everywhere unless an
/// operation documents otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal
    /// generators and duplicates.
    pub fn new(ring: Arc<Ring>, mut gens: Vec<Monomial>) -> MonomialIdeal {
        for g in &gens {
            assert_eq!(g.ring(), &ring, "generator from a different ring");
        }
        // Dedup before the quadratic minimality pass: callers like intersect
        // hand over large lcm lists with heavy repetition.
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            // Degree-ascending order means any strict divisor of g has
            // already been kept, so scanning the minimal prefix suffices.
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            ring,
            gens: minimal,
        }
    }

    pub fn zero(ring: Arc<Ring>) -> MonomialIdeal {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Arc<Ring>) -> MonomialIdeal {
        let one = Monomial::unit(ring.clone());
        MonomialIdeal {
            ring,
            gens: vec![one],
        }
    }

    pub fn principal(f: Monomial) -> MonomialIdeal {
        let ring = f.ring().clone();
        MonomialIdeal {
            ring,
            gens: vec![f],
        }
    }

    /// The graded maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Arc<Ring>) -> MonomialIdeal {
        let gens = (0..ring.arity())
            .map(|i| Monomial::variable(ring.clone(), i))
            .collect();
        MonomialIdeal { ring, gens }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Minimal generators in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Least degree of a generator: the order `o(I)`. `None` for the zero
    /// ideal, `0` for the unit ideal.
    pub fn order(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    fn assert_same_ring(&self, other: &MonomialIdeal) {
        assert_eq!(self.ring, other.ring, "ideals from different rings");
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.ring(), &self.ring, "monomial from a different ring");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.assert_same_ring(other);
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// Intersection, via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// `s`-fold product; the empty product is the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..s {
            acc = acc.product(self);
        }
        acc
    }

    /// The scaled ideal `f·I`. The scaled generators are again minimal, so no
    /// re-minimalization happens.
    pub fn scale(&self, f: &Monomial) -> MonomialIdeal {
        assert_eq!(f.ring(), &self.ring, "monomial from a different ring");
        let gens = self.gens.iter().map(|g| g.mul(f)).collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        }
    }

    /// Colon by a monomial: `(I : f) = ( g / gcd(g, f) : g ∈ G(I) )`.
    ///
    /// `(0 : f)` is zero, and `(I : f)` is the unit ideal when `f ∈ I`.
    pub fn colon_monomial(&self, f: &Monomial) -> MonomialIdeal {
        assert_eq!(f.ring(), &self.ring, "monomial from a different ring");
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(f)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// Colon by an ideal: `(I : J) = ∩_{g ∈ G(J)} (I : g)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.assert_same_ring(other);
        if other.is_zero() {
            return Err(IdealError::ColonByZero);
        }
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g));
        }
        Ok(acc)
    }

    /// The ideal generated by all monomials of `I` of total degree exactly
    /// `j`. Zero when `j` is below the order of `I`.
    pub fn component(&self, j: u32) -> MonomialIdeal {
        let gens = self
            .ring
            .monomials_of_degree(j)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect();
        // Monomials of a single degree form an antichain already.
        MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        }
    }

    /// Dimension of the degree-`d` graded piece of `I` as a vector space.
    pub fn graded_dim(&self, d: u32) -> usize {
        self.ring
            .monomials_of_degree(d)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> Vec<usize> {
        let mut seen: HashSet<usize> = HashSet::new();
        for g in &self.gens {
            seen.extend(g.support());
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Whether `I` is primary to the maximal ideal: proper, and containing a
    /// positive power of every variable.
    pub fn is_m_primary(&self) -> bool {
        if self.is_zero() || self.is_unit() {
            return false;
        }
        (0..self.ring.arity()).all(|i| self.gens.iter().any(|g| g.support() == [i]))
    }

    /// Splits `I = f·I'` with `f` the gcd of the generators, so that the
    /// generators of `I'` have gcd 1.
    pub fn factor_gcd(&self) -> Result<(Monomial, MonomialIdeal), IdealError> {
        let first = self.gens.first().ok_or(IdealError::ZeroIdeal)?;
        let f = self
            .gens
            .iter()
            .skip(1)
            .fold(first.clone(), |acc, g| acc.gcd(g));
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_div(&f).expect("gcd divides"))
            .collect();
        Ok((
            f,
            MonomialIdeal {
                ring: self.ring.clone(),
                gens,
            },
        ))
    }

    pub fn stats(&self) -> Result<IdealStats, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        Ok(IdealStats {
            order: self.order().expect("nonzero"),
            max_gen_degree: self.max_gen_degree().expect("nonzero"),
            mu: self.mu(),
            support: self.support(),
            is_m_primary: self.is_m_primary(),
        })
    }

    /// Canonical generator strings, e.g. `["x^3", "x^2*y"]`.
    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Basic numeric facts about a nonzero monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealStats {
    pub order: u32,
    pub max_gen_degree: u32,
    pub mu: usize,
    pub support: Vec<usize>,
    pub is_m_primary: bool,
}
