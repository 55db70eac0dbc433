//! Independent brute-force oracles, ideal generation, and theorem-validation
//! campaigns.
//!
//! The oracles reconstruct ideals purely from degree-by-degree membership,
//! sharing no code with the generator-level arithmetic they check. Campaigns
//! sweep a theorem over an exhaustive or seeded population and report every
//! violation witness instead of aborting, so counterexample mining and
//! regression testing use the same machinery.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::betti::{
    betti, betti_oracle_dim2, betti_oracle_lcm_lattice, is_componentwise_linear, regularity,
};
use crate::dim2::{
    cwl_ordering, fullness_checks, fullsum_verdict, order_length_formula, validate_ordering,
    OrderingFailure,
};
use crate::fullset::{assemble, power_assignment, random_power_instance, validate_assignment};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("a minimal generator appeared at the boundary degree {0}; raise d_max")]
    BoundTooSmall(u32),
    #[error("no candidate monomials: need arity >= 1 and max_gen_degree >= 1")]
    EmptyPool,
    #[error("mu_target must be at least 1")]
    ZeroTarget,
    #[error("unknown campaign `{0}`")]
    UnknownCampaign(String),
}

fn cwl(i: &MonomialIdeal) -> bool {
    is_componentwise_linear(i).expect("nonzero proper ideal")
}

fn reg(i: &MonomialIdeal) -> u32 {
    regularity(i).expect("nonzero proper ideal").regularity
}

fn reg_or_zero(i: &MonomialIdeal) -> u32 {
    if i.is_unit() {
        0
    } else {
        reg(i)
    }
}

fn show(i: &MonomialIdeal) -> String {
    format!("({})", i.gen_strings().join(", "))
}

/// Rebuilds an ideal from a membership predicate alone, scanning degrees
/// `0..=d_max`: a monomial is a minimal generator exactly when it is a member
/// and no earlier generator divides it. A generator landing on the boundary
/// degree means the scan may have missed later ones, so that is an error
/// rather than a silently truncated answer.
fn reconstruct(
    ring: &Arc<Ring>,
    d_max: u32,
    member: impl Fn(&Monomial) -> bool,
) -> Result<MonomialIdeal, VerifyError> {
    let mut gens: Vec<Monomial> = Vec::new();
    for d in 0..=d_max {
        for u in ring.monomials_of_degree(d) {
            if member(&u) && !gens.iter().any(|g| g.divides(&u)) {
                if d == d_max {
                    return Err(VerifyError::BoundTooSmall(d_max));
                }
                gens.push(u);
            }
        }
    }
    Ok(MonomialIdeal::new(ring.clone(), gens))
}

pub fn oracle_intersect(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    d_max: u32,
) -> Result<MonomialIdeal, VerifyError> {
    reconstruct(i.ring(), d_max, |u| i.contains(u) && j.contains(u))
}

pub fn oracle_sum(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    d_max: u32,
) -> Result<MonomialIdeal, VerifyError> {
    reconstruct(i.ring(), d_max, |u| i.contains(u) || j.contains(u))
}

pub fn oracle_colon(
    i: &MonomialIdeal,
    f: &Monomial,
    d_max: u32,
) -> Result<MonomialIdeal, VerifyError> {
    reconstruct(i.ring(), d_max, |u| i.contains(&u.mul(f)))
}

/// Membership form of the degree-`j` component: `u` lies in `I_<j>` exactly
/// when `deg u >= j` and some generator of degree `<= j` divides `u` (such a
/// divisor extends inside `u` to a degree-`j` member).
pub fn oracle_component(
    i: &MonomialIdeal,
    j: u32,
    d_max: u32,
) -> Result<MonomialIdeal, VerifyError> {
    reconstruct(i.ring(), d_max, |u| {
        u.degree() >= j && i.gens().iter().any(|g| g.degree() <= j && g.divides(u))
    })
}

/// A fixed ring with conventional variable names for generated populations.
pub fn standard_ring(arity: usize) -> Arc<Ring> {
    const NAMES: [&str; 8] = ["x", "y", "z", "w", "v", "u", "t", "s"];
    assert!(arity >= 1, "a ring needs at least one variable");
    if arity <= NAMES.len() {
        Ring::new(NAMES[..arity].iter().copied())
    } else {
        Ring::new((1..=arity).map(|k| format!("x{k}")))
    }
}

/// Every monomial ideal in `k[x,y]` whose minimal generators have degree at
/// most `max_gen_degree`, each exactly once, excluding the zero and unit
/// ideals. Generator sets are exactly the antichains of monomials of degree
/// `1..=max_gen_degree`: strictly increasing x-exponent, strictly decreasing
/// y-exponent.
pub fn enumerate_ideals_dim2(max_gen_degree: u32) -> Vec<MonomialIdeal> {
    assert!(max_gen_degree >= 1);
    let ring = standard_ring(2);
    let mut points: Vec<(u32, u32)> = Vec::new();
    for d in 1..=max_gen_degree {
        for a in 0..=d {
            points.push((a, d - a));
        }
    }
    points.sort();

    fn extend(
        points: &[(u32, u32)],
        from: usize,
        stack: &mut Vec<(u32, u32)>,
        ring: &Arc<Ring>,
        out: &mut Vec<MonomialIdeal>,
    ) {
        for k in from..points.len() {
            let (a, b) = points[k];
            if let Some(&(last_a, last_b)) = stack.last() {
                if a <= last_a || b >= last_b {
                    continue;
                }
            }
            stack.push((a, b));
            let gens = stack
                .iter()
                .map(|&(a, b)| Monomial::new(ring.clone(), vec![a, b]))
                .collect();
            out.push(MonomialIdeal::new(ring.clone(), gens));
            extend(points, k + 1, stack, ring, out);
            stack.pop();
        }
    }

    let mut out = Vec::new();
    extend(&points, 0, &mut Vec::new(), &ring, &mut out);
    out
}

/// Seeded random monomial ideal: draws `mu_target` exponent vectors uniformly
/// from all monomials of degree `1..=max_gen_degree` and minimalizes to an
/// antichain; retries a bounded number of times toward exactly `mu_target`
/// minimal generators and otherwise returns the largest antichain seen.
/// Deterministic for a fixed seed.
pub fn random_ideal(
    arity: usize,
    max_gen_degree: u32,
    mu_target: usize,
    seed: u64,
) -> Result<MonomialIdeal, VerifyError> {
    if arity == 0 || max_gen_degree == 0 {
        return Err(VerifyError::EmptyPool);
    }
    if mu_target == 0 {
        return Err(VerifyError::ZeroTarget);
    }
    let ring = standard_ring(arity);
    let pool: Vec<Monomial> = (1..=max_gen_degree)
        .flat_map(|d| ring.monomials_of_degree(d))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<MonomialIdeal> = None;
    for _ in 0..64 {
        let gens: Vec<Monomial> = (0..mu_target)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        let i = MonomialIdeal::new(ring.clone(), gens);
        if i.mu() == mu_target {
            return Ok(i);
        }
        if best.as_ref().is_none_or(|b| b.mu() < i.mu()) {
            best = Some(i);
        }
    }
    Ok(best.expect("at least one attempt"))
}

/// Outcome of a theorem sweep. Violations are collected, never thrown; an
/// empty list is the pass condition. Identical parameters reproduce the same
/// report except for the timing field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: String,
    pub population: String,
    pub checked: u64,
    pub violations: Vec<String>,
    pub bounds: BTreeMap<String, u64>,
    pub wall_time_ms: u128,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct CampaignParams {
    /// Degree bound for exhaustively enumerated populations.
    pub max_gen_degree: Option<u32>,
    /// Instance count for seeded populations.
    pub count: Option<u64>,
    pub seed: u64,
}

pub fn campaign_ids() -> &'static [&'static str] {
    &[
        "fullsum",
        "lq",
        "trio",
        "ord",
        "maxlength",
        "maincwl",
        "oracle-betti",
        "fIgJ",
        "distributivity",
        "regcwl1",
        "regndeg",
        "regm_primary",
        "dim2maxprop",
    ]
}

enum Check {
    Pass,
    Skip,
    Fail(String),
}

/// Partitions a population across worker threads; each worker is pure and
/// the merge is in chunk order, so results are deterministic regardless of
/// thread count. Returns (checked, skipped, violations).
fn sweep<T, F>(items: &[T], check: F) -> (u64, u64, Vec<String>)
where
    T: Sync,
    F: Fn(&T) -> Check + Sync,
{
    if items.is_empty() {
        return (0, 0, Vec::new());
    }
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(items.len());
    let chunk = items.len().div_ceil(workers);
    let mut checked = 0;
    let mut skipped = 0;
    let mut violations = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let check = &check;
                scope.spawn(move || {
                    let mut c = 0u64;
                    let mut sk = 0u64;
                    let mut v = Vec::new();
                    for item in part {
                        match check(item) {
                            Check::Pass => c += 1,
                            Check::Skip => sk += 1,
                            Check::Fail(w) => {
                                c += 1;
                                v.push(w);
                            }
                        }
                    }
                    (c, sk, v)
                })
            })
            .collect();
        for h in handles {
            let (c, sk, v) = h.join().expect("campaign worker panicked");
            checked += c;
            skipped += sk;
            violations.extend(v);
        }
    });
    (checked, skipped, violations)
}

/// Runs seeded instances in deterministic batches until `target` instances
/// pass the precondition filter or the attempt cap is reached.
fn adaptive<F>(target: u64, cap: u64, check: F) -> (u64, u64, Vec<String>)
where
    F: Fn(u64) -> Check + Sync,
{
    let mut checked = 0;
    let mut attempts = 0;
    let mut violations = Vec::new();
    while checked < target && attempts < cap {
        let upper = (attempts + 512).min(cap);
        let batch: Vec<u64> = (attempts..upper).collect();
        let (c, _, v) = sweep(&batch, |t| check(*t));
        checked += c;
        attempts = upper;
        violations.extend(v);
    }
    (checked, attempts, violations)
}

/// Per-instance sub-seed, decorrelated from neighboring indices.
fn mix(seed: u64, t: u64) -> u64 {
    seed ^ t.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17)
}

fn cwl_pairs(max_gen_degree: u32) -> (usize, Vec<(MonomialIdeal, MonomialIdeal)>) {
    let pop: Vec<MonomialIdeal> = enumerate_ideals_dim2(max_gen_degree)
        .into_iter()
        .filter(cwl_ref)
        .collect();
    let pairs = pop
        .iter()
        .flat_map(|i| pop.iter().map(move |j| (i.clone(), j.clone())))
        .collect();
    (pop.len(), pairs)
}

fn cwl_ref(i: &MonomialIdeal) -> bool {
    cwl(i)
}

fn m_primary_random(arity: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let ring = standard_ring(arity);
    let base = random_ideal(arity, 3, 3, rng.gen()).expect("valid parameters");
    let mut gens = base.gens().to_vec();
    for k in 0..arity {
        gens.push(Monomial::variable(ring.clone(), k).pow(rng.gen_range(1..=4)));
    }
    let i = MonomialIdeal::new(ring, gens);
    debug_assert!(i.is_m_primary());
    i
}

fn random_monomial(ring: &Arc<Ring>, max_degree: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let d = rng.gen_range(0..=max_degree);
    let pool = ring.monomials_of_degree(d);
    pool[rng.gen_range(0..pool.len())].clone()
}

/// Sweeps one named theorem over its population and reports the outcome.
/// Every statement is checked against an independent direct computation;
/// violations are recorded with re-runnable witnesses and never abort the
/// sweep.
pub fn run_campaign(theorem: &str, params: &CampaignParams) -> Result<CampaignReport, VerifyError> {
    let start = Instant::now();
    let seed = params.seed;
    let mut bounds: BTreeMap<String, u64> = BTreeMap::new();
    bounds.insert("seed".into(), seed);

    let (population, checked, violations) = match theorem {
        // the sum characterization, both directions of the equivalence
        "fullsum" => {
            let d = params.max_gen_degree.unwrap_or(4);
            bounds.insert("max_gen_degree".into(), d as u64);
            let (n, pairs) = cwl_pairs(d);
            let (checked, _, violations) = sweep(&pairs, |(i, j)| {
                let v = fullsum_verdict(i, j);
                if v.applicable && v.cross_check == Some(true) {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, J = {}", show(i), show(j)))
                }
            });
            (
                format!(
                    "all ordered pairs of componentwise linear ideals in k[x,y] with \
                     generator degrees <= {d} ({n} ideals, {} pairs)",
                    pairs.len()
                ),
                checked,
                violations,
            )
        }
        // linear quotients orderings exist exactly for componentwise linear ideals
        "lq" => {
            let d = params.max_gen_degree.unwrap_or(6);
            bounds.insert("max_gen_degree".into(), d as u64);
            let pop = enumerate_ideals_dim2(d);
            let (checked, _, violations) = sweep(&pop, |i| {
                let linear = cwl(i);
                match cwl_ordering(i) {
                    Ok(cert) => {
                        if linear && validate_ordering(i, &cert) {
                            Check::Pass
                        } else {
                            Check::Fail(format!("{}: bad certificate", show(i)))
                        }
                    }
                    Err(OrderingFailure::NotComponentwiseLinear { .. }) if !linear => Check::Pass,
                    Err(e) => Check::Fail(format!("{}: {e}", show(i))),
                }
            });
            (
                format!(
                    "all monomial ideals in k[x,y] with generator degrees <= {d} \
                     ({} ideals)",
                    pop.len()
                ),
                checked,
                violations,
            )
        }
        // full = m-full = componentwise linear in two variables
        "trio" => {
            let d = params.max_gen_degree.unwrap_or(5);
            bounds.insert("max_gen_degree".into(), d as u64);
            let pop = enumerate_ideals_dim2(d);
            let (checked, _, violations) = sweep(&pop, |i| {
                let v = fullness_checks(i, None);
                if v.applicable && v.cross_check == Some(true) {
                    Check::Pass
                } else {
                    Check::Fail(show(i))
                }
            });
            (
                format!(
                    "all monomial ideals in k[x,y] with generator degrees <= {d} \
                     ({} ideals)",
                    pop.len()
                ),
                checked,
                violations,
            )
        }
        // the order/length formula on pairs of full ideals
        "ord" => {
            let d = params.max_gen_degree.unwrap_or(4);
            bounds.insert("max_gen_degree".into(), d as u64);
            let (n, pairs) = cwl_pairs(d);
            let (checked, _, violations) = sweep(&pairs, |(i, j)| {
                let v = order_length_formula(i, j, None);
                if v.applicable && v.holds() {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, J = {}", show(i), show(j)))
                }
            });
            (
                format!(
                    "all ordered pairs of full ideals in k[x,y] with generator \
                     degrees <= {d} ({n} ideals, {} pairs)",
                    pairs.len()
                ),
                checked,
                violations,
            )
        }
        // when the sum is full, o(I ∩ J) exceeds max{o(I), o(J)} by at most one
        "maxlength" => {
            let d = params.max_gen_degree.unwrap_or(4);
            bounds.insert("max_gen_degree".into(), d as u64);
            let (n, pairs) = cwl_pairs(d);
            let (checked, _, violations) = sweep(&pairs, |(i, j)| {
                if !cwl(&i.sum(j)) {
                    return Check::Skip;
                }
                let o_meet = i.intersect(j).order().expect("nonzero");
                let max_o = i.order().expect("nonzero").max(j.order().expect("nonzero"));
                if max_o <= o_meet && o_meet <= max_o + 1 {
                    Check::Pass
                } else {
                    Check::Fail(format!(
                        "I = {}, J = {}: o(meet) = {o_meet}, max = {max_o}",
                        show(i),
                        show(j)
                    ))
                }
            });
            (
                format!(
                    "pairs of full ideals in k[x,y] with full sum, generator \
                     degrees <= {d} (from {n} ideals, {} candidate pairs)",
                    pairs.len()
                ),
                checked,
                violations,
            )
        }
        // assembled full-set sums are componentwise linear
        "maincwl" => {
            let count = params.count.unwrap_or(1000);
            bounds.insert("count".into(), count);
            let items: Vec<u64> = (0..count).collect();
            let (checked, _, violations) = sweep(&items, |&t| {
                let arity = 2 + (t % 3) as usize;
                let ring = standard_ring(arity);
                let s = mix(seed, t);
                let (set, powers) = random_power_instance(&ring, s);
                let elements: Vec<String> = set
                    .elements()
                    .iter()
                    .map(|f| format!("{f}:{}", powers[f]))
                    .collect();
                let label = format!(
                    "arity {arity}, seed {s}, powers {{{}}}",
                    elements.join(", ")
                );
                let assignment = match power_assignment(&set, &powers) {
                    Ok(a) => a,
                    Err(e) => return Check::Fail(format!("{label}: rejected powers: {e}")),
                };
                match validate_assignment(&set, &assignment) {
                    Ok(v) if v.holds() => {}
                    Ok(_) => return Check::Fail(format!("{label}: assignment invalid")),
                    Err(e) => return Check::Fail(format!("{label}: {e}")),
                }
                let sum = match assemble(&set, &assignment, false) {
                    Ok(s) => s,
                    Err(e) => return Check::Fail(format!("{label}: {e}")),
                };
                if cwl(&sum) {
                    Check::Pass
                } else {
                    Check::Fail(format!(
                        "{label}: assembled sum {} not componentwise linear",
                        show(&sum)
                    ))
                }
            });
            (
                format!(
                    "{count} seeded power assignments on random full sets in 2-4 \
                     variables"
                ),
                checked,
                violations,
            )
        }
        // three independent Betti computations agree
        "oracle-betti" => {
            let d = params.max_gen_degree.unwrap_or(5);
            let count = params.count.unwrap_or(200);
            bounds.insert("max_gen_degree".into(), d as u64);
            bounds.insert("random_count".into(), count);
            bounds.insert("random_max_gen_degree".into(), 4);
            bounds.insert("random_mu".into(), 8);
            let pop = enumerate_ideals_dim2(d);
            let (c1, _, mut violations) = sweep(&pop, |i| {
                let main = betti(i).expect("proper ideal");
                let lattice = betti_oracle_lcm_lattice(i).expect("proper ideal");
                let staircase = betti_oracle_dim2(i).expect("proper ideal");
                if main == lattice && lattice == staircase {
                    Check::Pass
                } else {
                    Check::Fail(format!("{}: oracle disagreement", show(i)))
                }
            });
            let items: Vec<u64> = (0..count).collect();
            let (c2, _, v2) = sweep(&items, |&t| {
                let arity = 3 + (t % 2) as usize;
                let i = random_ideal(arity, 4, 8, mix(seed, t)).expect("valid parameters");
                if betti(&i).expect("proper ideal")
                    == betti_oracle_lcm_lattice(&i).expect("proper ideal")
                {
                    Check::Pass
                } else {
                    Check::Fail(format!("arity {arity}: {}", show(&i)))
                }
            });
            violations.extend(v2);
            (
                format!(
                    "all arity-2 ideals with generator degrees <= {d} ({} ideals, \
                     three-way agreement) plus {count} random ideals in arities 3-4 \
                     (mu <= 8, two-way agreement)",
                    pop.len()
                ),
                c1 + c2,
                violations,
            )
        }
        // fI ∩ gJ = lcm(f,g)·((I:f') ∩ (J:g'))
        "fIgJ" => {
            let count = params.count.unwrap_or(500);
            bounds.insert("count".into(), count);
            let items: Vec<u64> = (0..count).collect();
            let (checked, _, violations) = sweep(&items, |&t| {
                let arity = 2 + (t % 3) as usize;
                let ring = standard_ring(arity);
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let j = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let f = random_monomial(&ring, 3, &mut rng);
                let g = random_monomial(&ring, 3, &mut rng);
                let l = f.lcm(&g);
                let f1 = l.checked_div(&f).expect("f divides the lcm");
                let g1 = l.checked_div(&g).expect("g divides the lcm");
                let lhs = i.scale(&f).intersect(&j.scale(&g));
                let rhs = i
                    .colon_monomial(&f1)
                    .intersect(&j.colon_monomial(&g1))
                    .scale(&l);
                if lhs == rhs {
                    Check::Pass
                } else {
                    Check::Fail(format!(
                        "I = {}, J = {}, f = {f}, g = {g}: {} != {}",
                        show(&i),
                        show(&j),
                        show(&lhs),
                        show(&rhs)
                    ))
                }
            });
            (
                format!("{count} seeded (f, I, g, J) quadruples in arities 2-4"),
                checked,
                violations,
            )
        }
        // (I + J) ∩ K = (I ∩ K) + (J ∩ K)
        "distributivity" => {
            let count = params.count.unwrap_or(500);
            bounds.insert("count".into(), count);
            let items: Vec<u64> = (0..count).collect();
            let (checked, _, violations) = sweep(&items, |&t| {
                let arity = 2 + (t % 3) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let j = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let k = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let lhs = i.sum(&j).intersect(&k);
                let rhs = i.intersect(&k).sum(&j.intersect(&k));
                if lhs == rhs {
                    Check::Pass
                } else {
                    Check::Fail(format!(
                        "I = {}, J = {}, K = {}",
                        show(&i),
                        show(&j),
                        show(&k)
                    ))
                }
            });
            (
                format!("{count} seeded ideal triples in arities 2-4"),
                checked,
                violations,
            )
        }
        // componentwise linear sums force reg(I ∩ J) <= max{reg I, reg J} + 1
        "regcwl1" => {
            let target = params.count.unwrap_or(500);
            let cap = target.saturating_mul(100);
            bounds.insert("count".into(), target);
            let (checked, attempts, violations) = adaptive(target, cap, |t| {
                let arity = 2 + (t % 4 == 3) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                let j = random_ideal(arity, 3, 4, rng.gen()).expect("valid parameters");
                if !cwl(&i.sum(&j)) {
                    return Check::Skip;
                }
                if reg(&i.intersect(&j)) <= reg(&i).max(reg(&j)) + 1 {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, J = {}", show(&i), show(&j)))
                }
            });
            bounds.insert("attempts".into(), attempts);
            (
                format!(
                    "{checked} seeded pairs with componentwise linear sum in \
                     arities 2-3 ({attempts} attempts)"
                ),
                checked,
                violations,
            )
        }
        // reg(I:f) + deg f <= reg I exactly when deg f <= reg I, for m-primary I
        "regndeg" => {
            let count = params.count.unwrap_or(500);
            bounds.insert("count".into(), count);
            let items: Vec<u64> = (0..count).collect();
            let (checked, _, violations) = sweep(&items, |&t| {
                let arity = 2 + (t % 2) as usize;
                let ring = standard_ring(arity);
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = m_primary_random(arity, &mut rng);
                let f = random_monomial(&ring, 6, &mut rng);
                let colon = i.colon_monomial(&f);
                let lhs = reg_or_zero(&colon) + f.degree() <= reg(&i);
                let rhs = f.degree() <= reg(&i);
                if lhs == rhs {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, f = {f}", show(&i)))
                }
            });
            (
                format!("{count} seeded (m-primary I, monomial f) pairs in arities 2-3"),
                checked,
                violations,
            )
        }
        // intersections of m-primary ideals never raise regularity
        "regm_primary" => {
            let count = params.count.unwrap_or(500);
            bounds.insert("count".into(), count);
            let items: Vec<u64> = (0..count).collect();
            let (checked, _, violations) = sweep(&items, |&t| {
                let arity = 2 + (t % 2) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = m_primary_random(arity, &mut rng);
                let j = m_primary_random(arity, &mut rng);
                if reg(&i.intersect(&j)) <= reg(&i).max(reg(&j)) {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, J = {}", show(&i), show(&j)))
                }
            });
            (
                format!("{count} seeded m-primary pairs in arities 2-3"),
                checked,
                violations,
            )
        }
        // non-principal intersections in k[x,y] never raise regularity
        "dim2maxprop" => {
            let target = params.count.unwrap_or(500);
            let cap = target.saturating_mul(100);
            bounds.insert("count".into(), target);
            let (checked, attempts, violations) = adaptive(target, cap, |t| {
                let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
                let i = random_ideal(2, 4, 4, rng.gen()).expect("valid parameters");
                let j = random_ideal(2, 4, 4, rng.gen()).expect("valid parameters");
                let meet = i.intersect(&j);
                if meet.is_principal() {
                    return Check::Skip;
                }
                if reg(&meet) <= reg(&i).max(reg(&j)) {
                    Check::Pass
                } else {
                    Check::Fail(format!("I = {}, J = {}", show(&i), show(&j)))
                }
            });
            bounds.insert("attempts".into(), attempts);
            (
                format!(
                    "{checked} seeded k[x,y] pairs with non-principal intersection \
                     ({attempts} attempts)"
                ),
                checked,
                violations,
            )
        }
        other => return Err(VerifyError::UnknownCampaign(other.to_string())),
    };

    Ok(CampaignReport {
        theorem: theorem.to_string(),
        population,
        checked,
        violations,
        bounds,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
