//! Multigraded Betti numbers, regularity, and componentwise linearity.
//!
//! The primary computation builds, for every candidate multidegree in the
//! lcm closure of the generators, the simplicial complex of squarefree
//! vectors `b` with `x^(a-b)` in the ideal, and reads `β_{i,a}` off its
//! reduced homology in degree `i-1`. Two independent routes — homology of
//! the open intervals of the lcm lattice, and the staircase resolution in
//! two variables — are exposed as oracles so the main route can be
//! cross-checked wholesale.

use std::collections::{BTreeMap, HashSet};

use crate::homology::{hereditary_faces, reduced_homology_ranks};
use crate::ideal::{IdealError, MonomialIdeal};
use crate::ring::Monomial;

/// Multigraded Betti numbers of an ideal: `(homological index, multidegree)
/// → rank`, with only nonzero ranks stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ideal: MonomialIdeal,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn rank(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Coarsely graded table `(i, total degree) → rank`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), r) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += r;
        }
        out
    }

    pub fn regularity_value(&self) -> u32 {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() - *i as u32)
            .max()
            .expect("a betti table is never empty")
    }

    /// Same nonzero entries, ignoring which route produced them.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }
}

fn guard_subject(i: &MonomialIdeal) -> Result<(), IdealError> {
    if i.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(IdealError::UnitIdeal);
    }
    Ok(())
}

/// The lcm closure of the minimal generators: every lcm of a nonempty
/// generator subset, each multidegree once, in canonical order. All nonzero
/// Betti multidegrees live here.
pub fn lcm_lattice(i: &MonomialIdeal) -> Vec<Monomial> {
    let gens = i.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let l = x.lcm(g);
                if seen.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// Multigraded Betti numbers over a field of characteristic zero.
pub fn betti(i: &MonomialIdeal) -> Result<BettiTable, IdealError> {
    guard_subject(i)?;
    let mut entries = BTreeMap::new();
    for a in lcm_lattice(i) {
        let supp = a.support();
        let faces = hereditary_faces(supp.len(), |mask| {
            let mut exps = a.exps().to_vec();
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                exps[supp[v]] -= 1;
                bits &= bits - 1;
            }
            i.contains(&Monomial::new(a.ring().clone(), exps))
        });
        record_ranks(&mut entries, &a, &reduced_homology_ranks(&faces));
    }
    Ok(BettiTable {
        ideal: i.clone(),
        entries,
    })
}

/// Independent oracle: for each lattice multidegree `a`, the homology of the
/// open interval below `a` in the lcm lattice, computed through the interval's
/// atom complex (generator subsets whose lcm stays strictly below `a`), which
/// carries the same reduced homology as the interval's order complex.
pub fn betti_oracle_lcm_lattice(i: &MonomialIdeal) -> Result<BettiTable, IdealError> {
    guard_subject(i)?;
    let mut entries = BTreeMap::new();
    for a in lcm_lattice(i) {
        let atoms: Vec<&Monomial> = i.gens().iter().filter(|g| g.divides(&a)).collect();
        let faces = hereditary_faces(atoms.len(), |mask| {
            let mut l = Monomial::unit(a.ring().clone());
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                l = l.lcm(atoms[v]);
                bits &= bits - 1;
            }
            l != a
        });
        record_ranks(&mut entries, &a, &reduced_homology_ranks(&faces));
    }
    Ok(BettiTable {
        ideal: i.clone(),
        entries,
    })
}

/// Second independent oracle, two variables only: the minimal resolution of
/// a monomial ideal in `k[x,y]` is `0 → S^(μ-1) → S^μ → I → 0`, with the
/// first syzygies at the lcms of staircase-adjacent generators.
pub fn betti_oracle_dim2(i: &MonomialIdeal) -> Result<BettiTable, IdealError> {
    guard_subject(i)?;
    if i.ring().arity() != 2 {
        return Err(IdealError::NotArityTwo);
    }
    let mut gens = i.gens().to_vec();
    gens.sort_by_key(|g| std::cmp::Reverse(g.exp(0)));
    let mut entries = BTreeMap::new();
    for g in &gens {
        *entries.entry((0, g.clone())).or_insert(0) += 1;
    }
    for pair in gens.windows(2) {
        *entries.entry((1, pair[0].lcm(&pair[1]))).or_insert(0) += 1;
    }
    Ok(BettiTable {
        ideal: i.clone(),
        entries,
    })
}

fn record_ranks(entries: &mut BTreeMap<(usize, Monomial), usize>, a: &Monomial, ranks: &[usize]) {
    for (i, &r) in ranks.iter().enumerate() {
        if r > 0 {
            entries.insert((i, a.clone()), r);
        }
    }
}

/// Castelnuovo–Mumford regularity with the Betti entries that attain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub regularity: u32,
    pub projective_dimension: usize,
    /// Entries `(i, a)` with `deg a - i` equal to the regularity.
    pub witnesses: Vec<(usize, Monomial)>,
}

pub fn regularity(i: &MonomialIdeal) -> Result<RegularityReport, IdealError> {
    let table = betti(i)?;
    Ok(regularity_of_table(&table))
}

pub fn regularity_of_table(table: &BettiTable) -> RegularityReport {
    let reg = table.regularity_value();
    let witnesses = table
        .entries()
        .keys()
        .filter(|(i, a)| a.degree() - *i as u32 == reg)
        .cloned()
        .collect();
    RegularityReport {
        regularity: reg,
        projective_dimension: table.projective_dimension(),
        witnesses,
    }
}

/// Whether all generators sit in one degree `t` and the resolution is
/// `t`-linear, i.e. the regularity equals `t`.
pub fn has_linear_resolution(i: &MonomialIdeal) -> Result<bool, IdealError> {
    guard_subject(i)?;
    let o = i.order().expect("nonzero");
    if i.max_gen_degree() != Some(o) {
        return Ok(false);
    }
    Ok(regularity(i)?.regularity == o)
}

/// Componentwise linearity: every degree component `I_<j>` for `j` from the
/// order of `I` through its regularity has a linear resolution. Components
/// above the regularity are linear automatically, and those below the order
/// vanish, so this window decides the property.
pub fn is_componentwise_linear(i: &MonomialIdeal) -> Result<bool, IdealError> {
    guard_subject(i)?;
    let reg = regularity(i)?.regularity;
    let o = i.order().expect("nonzero");
    for j in o..=reg {
        let component = i.component(j);
        if regularity(&component)?.regularity != j {
            return Ok(false);
        }
    }
    Ok(true)
}
