//! Full sets of squarefree monomials and the certified assembly of
//! componentwise linear sums `Σ f·I_f`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::betti::is_componentwise_linear;
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};
use crate::verdict::{Conclusion, Verdict, Witness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FullSetError {
    #[error("a full set cannot be empty")]
    Empty,
    #[error("the unit monomial cannot belong to a full set")]
    UnitElement,
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("the set is not full")]
    NotFull,
    #[error("no ideal assigned to {0}")]
    MissingAssignment(String),
    #[error("no power assigned to {0}")]
    MissingPower(String),
    #[error("the power assigned to {0} is below its degree")]
    PowerTooSmall(String),
    #[error("powers are not monotone: {0} divides {1} but is assigned the smaller power")]
    NonMonotonePowers(String, String),
    #[error("the assignment fails validation; assembly refused")]
    InvalidAssignment,
}

fn sanitize(elements: &[Monomial]) -> Result<Vec<Monomial>, FullSetError> {
    for f in elements {
        assert_eq!(
            f.ring(),
            elements[0].ring(),
            "element from a different ring"
        );
        if f.is_unit() {
            return Err(FullSetError::UnitElement);
        }
        if !f.is_squarefree() {
            return Err(FullSetError::NotSquarefree(f.to_string()));
        }
    }
    let mut sorted = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(sorted)
}

/// Breadth-first search for a chain `f, z_1 f, z_2 z_1 f, …, g` inside `set`,
/// multiplying by one variable at a time.
fn has_step_path(set: &BTreeSet<Monomial>, f: &Monomial, g: &Monomial) -> bool {
    let ring = f.ring().clone();
    let mut queue = VecDeque::from([f.clone()]);
    let mut seen = BTreeSet::from([f.clone()]);
    while let Some(h) = queue.pop_front() {
        if &h == g {
            return true;
        }
        for k in g.support() {
            // h divides g throughout, so h*z still divides g.
            if h.exp(k) == 0 {
                let next = h.mul(&Monomial::variable(ring.clone(), k));
                if set.contains(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

/// Decides whether a set of non-unit squarefree monomials is full: closed
/// under pairwise lcm, and every divisibility pair joined by a chain that
/// multiplies in one variable at a time.
pub fn is_full(elements: &[Monomial]) -> Result<Verdict, FullSetError> {
    let elems = sanitize(elements)?;
    let v =
        Verdict::new("full_set").input_names("L", elems.iter().map(|f| f.to_string()).collect());
    let set: BTreeSet<Monomial> = elems.iter().cloned().collect();
    for f in &elems {
        for g in &elems {
            let l = f.lcm(g);
            if !set.contains(&l) {
                return Ok(v
                    .witness(Witness::text("pair without lcm", format!("{f}, {g}")))
                    .witness(Witness::monomial("missing lcm", &l))
                    .conclude(Conclusion::False));
            }
        }
    }
    for f in &elems {
        for g in &elems {
            if f != g && f.divides(g) && !has_step_path(&set, f, g) {
                return Ok(v
                    .witness(Witness::text(
                        "divisibility pair with no one-variable-step path",
                        format!("{f}, {g}"),
                    ))
                    .conclude(Conclusion::False));
            }
        }
    }
    Ok(v.conclude(Conclusion::True))
}

/// Smallest lcm-closed superset. Path gaps are not repaired here; they are
/// reported by [`is_full`].
pub fn lcm_closure(elements: &[Monomial]) -> Result<Vec<Monomial>, FullSetError> {
    let mut set: BTreeSet<Monomial> = sanitize(elements)?.into_iter().collect();
    loop {
        let elems: Vec<Monomial> = set.iter().cloned().collect();
        let mut grew = false;
        for f in &elems {
            for g in &elems {
                grew |= set.insert(f.lcm(g));
            }
        }
        if !grew {
            return Ok(set.into_iter().collect());
        }
    }
}

/// A verified full set, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSet {
    elements: Vec<Monomial>,
}

impl FullSet {
    pub fn new(elements: Vec<Monomial>) -> Result<FullSet, FullSetError> {
        if elements.is_empty() {
            return Err(FullSetError::Empty);
        }
        if !is_full(&elements)?.holds() {
            return Err(FullSetError::NotFull);
        }
        Ok(FullSet {
            elements: sanitize(&elements)?,
        })
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.elements[0].ring()
    }
}

/// A choice of ideal `I_f` for each element of a full set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    entries: BTreeMap<Monomial, MonomialIdeal>,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn insert(&mut self, f: Monomial, ideal: MonomialIdeal) {
        self.entries.insert(f, ideal);
    }

    pub fn get(&self, f: &Monomial) -> Option<&MonomialIdeal> {
        self.entries.get(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &MonomialIdeal)> {
        self.entries.iter()
    }
}

/// Checks the assembly hypotheses for `A` over `L`: every `I_f` componentwise
/// linear (the unit ideal passes vacuously, the zero ideal never), condition
/// (1) `G(I_f) ⊆ k[supp f]`, and condition (2) `I_f ⊆ m·I_{zf}` whenever
/// `zf ∈ L`. The derived containment `I_f ⊆ I_g` for `f | g` is reported as a
/// diagnostic witness, not as part of the conclusion.
pub fn validate_assignment(set: &FullSet, a: &Assignment) -> Result<Verdict, FullSetError> {
    let mut v = Verdict::new("assignment")
        .input_names("L", set.elements().iter().map(|f| f.to_string()).collect());
    for f in set.elements() {
        let i_f = a
            .get(f)
            .ok_or_else(|| FullSetError::MissingAssignment(f.to_string()))?;
        v = v.input_names(&format!("I[{f}]"), i_f.gen_strings());
    }
    let ring = set.ring().clone();
    let m = MonomialIdeal::maximal(ring.clone());
    let mut ok = true;

    for f in set.elements() {
        let i_f = a.get(f).unwrap();
        if i_f.is_zero() {
            ok = false;
            v = v.witness(Witness::text(
                format!("I[{f}]"),
                "the zero ideal cannot be assigned",
            ));
            continue;
        }
        if !i_f.is_unit() && !is_componentwise_linear(i_f).expect("nonzero proper ideal") {
            ok = false;
            v = v.witness(Witness::text(format!("I[{f}]"), "not componentwise linear"));
        }
        if let Some(bad) = i_f
            .gens()
            .iter()
            .find(|g| g.support().iter().any(|&k| f.exp(k) == 0))
        {
            ok = false;
            v = v.witness(Witness::monomial(
                format!("generator of I[{f}] outside the variables of {f}"),
                bad,
            ));
        }
        for k in 0..ring.arity() {
            if f.exp(k) > 0 {
                continue;
            }
            let zf = f.mul(&Monomial::variable(ring.clone(), k));
            if !set.elements().contains(&zf) {
                continue;
            }
            let target = m.product(a.get(&zf).unwrap());
            if !target.contains_ideal(i_f) {
                ok = false;
                let culprit = i_f.gens().iter().find(|g| !target.contains(g)).unwrap();
                v = v.witness(Witness::monomial(
                    format!("generator of I[{f}] outside m*I[{zf}]"),
                    culprit,
                ));
            }
        }
    }

    let mut derived = true;
    'outer: for f in set.elements() {
        for g in set.elements() {
            if f != g && f.divides(g) && !a.get(g).unwrap().contains_ideal(a.get(f).unwrap()) {
                derived = false;
                v = v.witness(Witness::text(
                    "divisibility pair with I[f] not inside I[g]",
                    format!("{f}, {g}"),
                ));
                break 'outer;
            }
        }
    }
    v = v.witness(Witness::text(
        "derived containment I[f] ⊆ I[g] for every f | g",
        derived.to_string(),
    ));
    Ok(v.conclude_bool(ok))
}

/// Builds `Σ f·I_f`. Refuses invalid assignments unless `force` is set, so
/// counterexamples stay reproducible without weakening the certified path.
pub fn assemble(set: &FullSet, a: &Assignment, force: bool) -> Result<MonomialIdeal, FullSetError> {
    let verdict = validate_assignment(set, a)?;
    if !verdict.holds() && !force {
        return Err(FullSetError::InvalidAssignment);
    }
    let mut sum = MonomialIdeal::zero(set.ring().clone());
    for f in set.elements() {
        sum = sum.sum(&a.get(f).unwrap().scale(f));
    }
    Ok(sum)
}

/// The pure-power assignment `I_f = ⟨supp f⟩^{a_f − deg f}`.
pub fn power_assignment(
    set: &FullSet,
    powers: &BTreeMap<Monomial, u32>,
) -> Result<Assignment, FullSetError> {
    let ring = set.ring().clone();
    let mut a = Assignment::new();
    for f in set.elements() {
        let &a_f = powers
            .get(f)
            .ok_or_else(|| FullSetError::MissingPower(f.to_string()))?;
        if a_f < f.degree() {
            return Err(FullSetError::PowerTooSmall(f.to_string()));
        }
        let supp = MonomialIdeal::new(
            ring.clone(),
            f.support()
                .into_iter()
                .map(|k| Monomial::variable(ring.clone(), k))
                .collect(),
        );
        a.insert(f.clone(), supp.power(a_f - f.degree()));
    }
    Ok(a)
}

/// Assembles from a power assignment after checking monotonicity: `f | g`
/// requires `a_f ≥ a_g`. `force` skips both the monotonicity check and
/// validation, for counterexample exploration.
pub fn assemble_powers(
    set: &FullSet,
    powers: &BTreeMap<Monomial, u32>,
    force: bool,
) -> Result<MonomialIdeal, FullSetError> {
    let a = power_assignment(set, powers)?;
    if !force {
        for f in set.elements() {
            for g in set.elements() {
                if f != g && f.divides(g) && powers[f] < powers[g] {
                    return Err(FullSetError::NonMonotonePowers(
                        f.to_string(),
                        g.to_string(),
                    ));
                }
            }
        }
    }
    assemble(set, &a, force)
}

/// The key identity behind the assembly theorem: for the minimal-degree
/// `f ∈ L`, `(Σ_{g≠f} gI_g) ∩ fI_f = n·fI_f` with `n = ⟨z : zf ∈ L⟩`.
/// Returns both sides; they agree on every valid assignment.
pub fn intersection_identity(
    set: &FullSet,
    a: &Assignment,
) -> Result<(MonomialIdeal, MonomialIdeal), FullSetError> {
    let ring = set.ring().clone();
    // canonical order is degree-first, so the head has minimal degree
    let f = &set.elements()[0];
    let f_if = a
        .get(f)
        .ok_or_else(|| FullSetError::MissingAssignment(f.to_string()))?
        .scale(f);
    let mut rest = MonomialIdeal::zero(ring.clone());
    for g in &set.elements()[1..] {
        rest = rest.sum(
            &a.get(g)
                .ok_or_else(|| FullSetError::MissingAssignment(g.to_string()))?
                .scale(g),
        );
    }
    let steps: Vec<Monomial> = (0..ring.arity())
        .filter(|&k| {
            f.exp(k) == 0
                && set
                    .elements()
                    .contains(&f.mul(&Monomial::variable(ring.clone(), k)))
        })
        .map(|k| Monomial::variable(ring.clone(), k))
        .collect();
    let n = if steps.is_empty() {
        MonomialIdeal::zero(ring)
    } else {
        MonomialIdeal::new(ring, steps)
    };
    Ok((rest.intersect(&f_if), n.product(&f_if)))
}

/// Seeded generator of valid instances: seeds a few squarefree monomials,
/// closes under lcm, repairs step paths by inserting intermediates, then
/// assigns monotone powers.
pub fn random_power_instance(ring: &Arc<Ring>, seed: u64) -> (FullSet, BTreeMap<Monomial, u32>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.arity();
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; n];
        while exps.iter().all(|&e| e == 0) {
            for e in exps.iter_mut() {
                *e = rng.gen_range(0..=1);
            }
        }
        set.insert(Monomial::new(ring.clone(), exps));
    }
    loop {
        let elems: Vec<Monomial> = set.iter().cloned().collect();
        let mut grew = false;
        for f in &elems {
            for g in &elems {
                grew |= set.insert(f.lcm(g));
            }
        }
        for f in &elems {
            for g in &elems {
                if f != g && f.divides(g) {
                    let mut h = f.clone();
                    for k in 0..n {
                        if g.exp(k) > 0 && h.exp(k) == 0 {
                            h = h.mul(&Monomial::variable(ring.clone(), k));
                            grew |= set.insert(h.clone());
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    let elements: Vec<Monomial> = set.into_iter().collect();
    let d_top = elements.iter().map(|f| f.degree()).max().unwrap();
    let base = d_top + rng.gen_range(0..=2);
    let graded = rng.gen_bool(0.5);
    let powers: BTreeMap<Monomial, u32> = elements
        .iter()
        .map(|f| {
            let a_f = if graded {
                base + (d_top - f.degree())
            } else {
                base
            };
            (f.clone(), a_f)
        })
        .collect();
    let set = FullSet::new(elements).expect("closure and repair leave a full set");
    (set, powers)
}
