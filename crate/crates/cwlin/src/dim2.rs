//! The two-variable theory: fullness and m-fullness through exact graded
//! linear algebra, the order/length formula, the sum characterization, and
//! the constructive linear-quotients ordering.
//!
//! Genericity of the linear form: monomial ideals are fixed by the torus
//! action, so every linear form with all coordinates nonzero produces the
//! same graded dimensions. The all-ones form `z = x_1 + … + x_n` therefore
//! attains the generic value, and all "general linear form" computations
//! below use it. A colon ideal of a monomial ideal by a monomial contains a
//! linear form exactly when it contains a variable, so variables stand in
//! for linear forms throughout.

use std::collections::HashMap;

use thiserror::Error;

use crate::betti::{is_componentwise_linear, regularity};
use crate::ideal::{IdealError, MonomialIdeal};
use crate::linalg::exact_rank;
use crate::ring::Monomial;
use crate::verdict::{Conclusion, Verdict, Witness};

/// Graded dimensions of a subspace of the ring, degrees `0..=d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub d_max: u32,
    pub dims: Vec<usize>,
}

fn proper(i: &MonomialIdeal) -> bool {
    !i.is_zero() && !i.is_unit()
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

/// Graded dimensions of `I : z` for the all-ones linear form `z`: in degree
/// `d` this is the kernel of multiplication by `z` from the degree-`d` piece
/// of the ring to the degree-`d+1` piece of `R/I`, computed by exact rank of
/// a 0/1 matrix.
pub fn graded_colon_linear(i: &MonomialIdeal, d_max: u32) -> Result<GradedDims, IdealError> {
    if i.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let ring = i.ring().clone();
    let mut dims = Vec::with_capacity(d_max as usize + 1);
    for d in 0..=d_max {
        let domain = ring.monomials_of_degree(d);
        let codomain: Vec<Monomial> = ring
            .monomials_of_degree(d + 1)
            .into_iter()
            .filter(|w| !i.contains(w))
            .collect();
        let index: HashMap<&Monomial, usize> =
            codomain.iter().enumerate().map(|(c, w)| (w, c)).collect();
        let rows: Vec<Vec<i64>> = domain
            .iter()
            .map(|u| {
                let mut row = vec![0i64; codomain.len()];
                for k in 0..ring.arity() {
                    let w = u.mul(&Monomial::variable(ring.clone(), k));
                    if let Some(&c) = index.get(&w) {
                        row[c] = 1;
                    }
                }
                row
            })
            .collect();
        dims.push(domain.len() - exact_rank(&rows));
    }
    Ok(GradedDims { d_max, dims })
}

/// Graded dimensions of the ideal itself, degrees `0..=d_max`.
pub fn graded_dims(i: &MonomialIdeal, d_max: u32) -> GradedDims {
    GradedDims {
        d_max,
        dims: (0..=d_max).map(|d| i.graded_dim(d)).collect(),
    }
}

/// Fullness report: `I` is full when `I:z = I:m` degree by degree, and
/// m-full when `mI:z = I`. Both are decided exactly up to `d_max` (default
/// `reg I + 2`, past stabilization). In two variables both notions are
/// equivalent to componentwise linearity; the cross-check field records
/// whether the three independently computed answers coincide.
pub fn fullness_checks(i: &MonomialIdeal, d_max: Option<u32>) -> Verdict {
    let v = Verdict::new("full_check").input("I", i);
    if !proper(i) {
        return v.inapplicable("I must be a nonzero proper ideal");
    }
    let ring = i.ring().clone();
    let d_max = d_max.unwrap_or_else(|| reg(i) + 2);
    let v = v.bound("d_max", d_max);
    let m = MonomialIdeal::maximal(ring.clone());
    let full = graded_colon_linear(i, d_max).unwrap() == graded_dims(&i.colon(&m).unwrap(), d_max);
    let m_full = graded_colon_linear(&m.product(i), d_max).unwrap() == graded_dims(i, d_max);
    let v = v
        .witness(Witness::text("full", full.to_string()))
        .witness(Witness::text("m_full", m_full.to_string()));
    if ring.arity() == 2 {
        let c = cwl(i);
        v.witness(Witness::text("componentwise linear", c.to_string()))
            .conclude_bool(full)
            .cross_checked(full == m_full && m_full == c)
    } else {
        v.conclude_bool(full)
    }
}

/// The order/length formula for full ideals in two variables:
/// `o(I ∩ J) = max{o(I), o(J)} + ℓ((I+J):z / (I:m + J:m))`, the length
/// computed as a sum of graded dimension differences up to `d_max`.
pub fn order_length_formula(i: &MonomialIdeal, j: &MonomialIdeal, d_max: Option<u32>) -> Verdict {
    let v = Verdict::new("order_length").input("I", i).input("J", j);
    if i.ring().arity() != 2 {
        return v.inapplicable("the formula is stated in two variables");
    }
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    // fullness via the two-variable equivalence with componentwise linearity
    if !cwl(i) || !cwl(j) {
        return v.inapplicable("I and J must be full");
    }
    let m = MonomialIdeal::maximal(i.ring().clone());
    let d_max = d_max.unwrap_or_else(|| reg(i) + reg(j) + 2);
    let v = v.bound("d_max", d_max);
    let numerator = graded_colon_linear(&i.sum(j), d_max).unwrap();
    let denominator = graded_dims(&i.colon(&m).unwrap().sum(&j.colon(&m).unwrap()), d_max);
    let length: usize = numerator
        .dims
        .iter()
        .zip(&denominator.dims)
        .map(|(a, b)| {
            assert!(a >= b, "I:m + J:m must sit inside (I+J):z");
            a - b
        })
        .sum();
    let o_meet = i.intersect(j).order().unwrap();
    let max_o = i.order().unwrap().max(j.order().unwrap());
    v.witness(Witness::degree("o(I ∩ J)", o_meet))
        .witness(Witness::degree("max{o(I), o(J)}", max_o))
        .witness(Witness::degree(
            "length of (I+J):z over I:m + J:m",
            length as u32,
        ))
        .conclude_bool(o_meet == max_o + length as u32)
}

/// Exact characterization of full sums in two variables: for componentwise
/// linear `I`, `J`, the sum is componentwise linear if and only if either
/// `o(I ∩ J) = max{o(I), o(J)}`, or `o(I ∩ J) = max{o(I), o(J)} + 1` and
/// `(I+J):m ≠ I:m + J:m`.
pub fn fullsum_verdict(i: &MonomialIdeal, j: &MonomialIdeal) -> Verdict {
    let v = Verdict::new("fullsum").input("I", i).input("J", j);
    if i.ring().arity() != 2 {
        return v.inapplicable("the characterization is stated in two variables");
    }
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if !cwl(i) {
        return v.inapplicable("I is not componentwise linear");
    }
    if !cwl(j) {
        return v.inapplicable("J is not componentwise linear");
    }
    let m = MonomialIdeal::maximal(i.ring().clone());
    let o_meet = i.intersect(j).order().unwrap();
    let max_o = i.order().unwrap().max(j.order().unwrap());
    let sum_colon = i.sum(j).colon(&m).unwrap();
    let split = i.colon(&m).unwrap().sum(&j.colon(&m).unwrap());
    let holds = o_meet == max_o || (o_meet == max_o + 1 && sum_colon != split);
    let direct = cwl(&i.sum(j));
    v.witness(Witness::degree("o(I ∩ J)", o_meet))
        .witness(Witness::degree("max{o(I), o(J)}", max_o))
        .witness(Witness::ideal("(I+J):m", &sum_colon))
        .witness(Witness::ideal("I:m + J:m", &split))
        .conclude_bool(holds)
        .cross_checked(direct == holds)
}

/// Under additivity of minimal numbers of generators,
/// `μ(I+J) = μ(I) + μ(J)`, the sum of full ideals is full exactly when
/// `o(I ∩ J) ≤ max{o(I), o(J)} + 1`.
pub fn mu_additive_verdict(i: &MonomialIdeal, j: &MonomialIdeal) -> Verdict {
    let v = Verdict::new("mu_additive").input("I", i).input("J", j);
    if i.ring().arity() != 2 {
        return v.inapplicable("stated in two variables");
    }
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if !cwl(i) || !cwl(j) {
        return v.inapplicable("I and J must be full");
    }
    let (mi, mj, ms) = (i.mu(), j.mu(), i.sum(j).mu());
    let v = v
        .witness(Witness::degree("mu(I)", mi as u32))
        .witness(Witness::degree("mu(J)", mj as u32))
        .witness(Witness::degree("mu(I+J)", ms as u32));
    if ms != mi + mj {
        return v.inapplicable("mu(I+J) differs from mu(I) + mu(J)");
    }
    let o_meet = i.intersect(j).order().unwrap();
    let max_o = i.order().unwrap().max(j.order().unwrap());
    let holds = o_meet <= max_o + 1;
    let direct = cwl(&i.sum(j));
    v.witness(Witness::degree("o(I ∩ J)", o_meet))
        .witness(Witness::degree("max{o(I), o(J)}", max_o))
        .conclude_bool(holds)
        .cross_checked(direct == holds)
}

/// For full `I` and a monomial `f ∉ I` with `deg f ≥ o(I)` and
/// `μ(I + (f)) = μ(I) + 1`: the sum `I + (f)` is full exactly when `I:f`
/// contains a variable, and in that case `I:f` is generated by exactly one
/// variable.
pub fn linear_colon_tests(i: &MonomialIdeal, f: &Monomial) -> Verdict {
    let v = Verdict::new("linear_colon")
        .input("I", i)
        .input_names("f", vec![f.to_string()]);
    if i.ring().arity() != 2 {
        return v.inapplicable("stated in two variables");
    }
    if !proper(i) {
        return v.inapplicable("I must be a nonzero proper ideal");
    }
    if !cwl(i) {
        return v.inapplicable("I is not full");
    }
    if f.degree() < i.order().unwrap() {
        return v.inapplicable("deg f is below o(I)");
    }
    if i.contains(f) {
        return v.inapplicable("f lies in I");
    }
    let sum = i.sum(&MonomialIdeal::principal(f.clone()));
    if sum.mu() != i.mu() + 1 {
        return v.inapplicable("mu(I + (f)) differs from mu(I) + 1");
    }
    let colon = i.colon_monomial(f);
    let has_variable = colon.gens().iter().any(|g| g.degree() == 1);
    let principal_variable = colon.gens().len() == 1 && colon.gens()[0].degree() == 1;
    let sum_full = cwl(&sum);
    v.witness(Witness::ideal("I:f", &colon))
        .witness(Witness::text("I + (f) full", sum_full.to_string()))
        .conclude_bool(has_variable)
        .cross_checked(sum_full == has_variable && (!sum_full || principal_variable))
}

/// A linear-quotients certificate: generators in nondecreasing degrees with
/// every prefix componentwise linear and every colon `(f_1,…,f_j):f_{j+1}`
/// generated by the single recorded variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingCertificate {
    pub order: Vec<Monomial>,
    pub colon_vars: Vec<Monomial>,
    pub prefix_confirmed: Vec<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingFailure {
    #[error("ordering certificates are produced in two variables only")]
    NotArityTwo,
    #[error("I must be a nonzero proper ideal")]
    Improper,
    #[error("no eligible generator at step {step}: the input is not componentwise linear")]
    NotComponentwiseLinear { step: usize },
    #[error("no eligible generator at step {step} although the input is componentwise linear")]
    Internal { step: usize },
}

/// Greedy construction of a linear-quotients ordering: at each step, among
/// the remaining generators of minimal degree (taken in canonical order),
/// pick the first whose colon against the prefix is exactly one variable.
/// Failure distinguishes non-componentwise-linear input from an internal
/// error by running the direct check.
pub fn cwl_ordering(i: &MonomialIdeal) -> Result<OrderingCertificate, OrderingFailure> {
    if i.ring().arity() != 2 {
        return Err(OrderingFailure::NotArityTwo);
    }
    if !proper(i) {
        return Err(OrderingFailure::Improper);
    }
    let mut remaining: Vec<Monomial> = i.gens().to_vec();
    let mut order: Vec<Monomial> = Vec::new();
    let mut colon_vars: Vec<Monomial> = Vec::new();
    let mut prefix_confirmed: Vec<bool> = Vec::new();
    let mut prefix = MonomialIdeal::zero(i.ring().clone());
    while !remaining.is_empty() {
        let step = order.len() + 1;
        let o = remaining.iter().map(Monomial::degree).min().unwrap();
        let pick = remaining.iter().position(|f| {
            if f.degree() != o {
                return false;
            }
            if order.is_empty() {
                return true;
            }
            let colon = prefix.colon_monomial(f);
            colon.gens().len() == 1 && colon.gens()[0].degree() == 1
        });
        let Some(c) = pick else {
            return Err(if cwl(i) {
                OrderingFailure::Internal { step }
            } else {
                OrderingFailure::NotComponentwiseLinear { step }
            });
        };
        let f = remaining.remove(c);
        if !order.is_empty() {
            colon_vars.push(prefix.colon_monomial(&f).gens()[0].clone());
        }
        prefix = prefix.sum(&MonomialIdeal::principal(f.clone()));
        order.push(f);
        let confirmed = cwl(&prefix);
        prefix_confirmed.push(confirmed);
        if !confirmed {
            return Err(OrderingFailure::Internal { step });
        }
    }
    Ok(OrderingCertificate {
        order,
        colon_vars,
        prefix_confirmed,
    })
}

/// Standalone re-verification of a certificate against `I`: the order must
/// list the minimal generators exactly, degrees nondecreasing, every colon
/// must equal the single recorded variable, and every prefix must be
/// componentwise linear.
pub fn validate_ordering(i: &MonomialIdeal, cert: &OrderingCertificate) -> bool {
    let mut sorted = cert.order.clone();
    sorted.sort();
    if sorted != i.gens() {
        return false;
    }
    if cert.order.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return false;
    }
    if cert.colon_vars.len() + 1 != cert.order.len()
        || cert.prefix_confirmed.len() != cert.order.len()
    {
        return false;
    }
    let mut prefix = MonomialIdeal::principal(cert.order[0].clone());
    if !cwl(&prefix) || !cert.prefix_confirmed[0] {
        return false;
    }
    for (f, z) in cert.order[1..].iter().zip(&cert.colon_vars) {
        if z.degree() != 1 || prefix.colon_monomial(f) != MonomialIdeal::principal(z.clone()) {
            return false;
        }
        prefix = prefix.sum(&MonomialIdeal::principal(f.clone()));
        if !cwl(&prefix) {
            return false;
        }
    }
    cert.prefix_confirmed.iter().all(|&c| c)
}

/// The boundary case `reg(I ∩ J) = max{reg I, reg J} + 1` in two variables:
/// writing `I = fI'`, `J = gJ'` with `I'`, `J'` of finite colength (possibly
/// the unit ideal) and `lcm(f,g) = ff' = gg'`, the sum `I + J` is
/// componentwise linear if and only if
/// `(m^{s+1}I':f') ∩ (m^{s+1}J':g') ⊆ m^s` for all `s ≥ 0`. The scan is
/// truncated at `s_max` (default `reg I' + reg J' + 2`), recorded in bounds.
pub fn reg_plus_one_verdict(i: &MonomialIdeal, j: &MonomialIdeal, s_max: Option<u32>) -> Verdict {
    let v = Verdict::new("reg_plus_one").input("I", i).input("J", j);
    if i.ring().arity() != 2 {
        return v.inapplicable("stated in two variables");
    }
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if !cwl(i) {
        return v.inapplicable("I is not componentwise linear");
    }
    if !cwl(j) {
        return v.inapplicable("J is not componentwise linear");
    }
    let meet = i.intersect(j);
    let (r_meet, max_r) = (reg(&meet), reg(i).max(reg(j)));
    let v = v
        .witness(Witness::degree("reg(I ∩ J)", r_meet))
        .witness(Witness::degree("max{reg I, reg J}", max_r));
    if r_meet != max_r + 1 {
        return v.inapplicable("reg(I ∩ J) differs from max{reg I, reg J} + 1");
    }
    let (f, i1) = i.factor_gcd().unwrap();
    let (g, j1) = j.factor_gcd().unwrap();
    let l = f.lcm(&g);
    // the regularity gap forces the intersection to be the principal ideal
    // on lcm(f, g)
    assert!(
        meet.is_principal() && meet.gens()[0] == l,
        "I ∩ J must be (lcm(f, g)) when the regularity gap is one"
    );
    let f1 = l.checked_div(&f).unwrap();
    let g1 = l.checked_div(&g).unwrap();
    let s_max = s_max.unwrap_or_else(|| reg_or_zero(&i1) + reg_or_zero(&j1) + 2);
    let mut v = v
        .bound("s_max", s_max)
        .witness(Witness::monomial("f with I = fI'", &f))
        .witness(Witness::monomial("g with J = gJ'", &g));
    let m = MonomialIdeal::maximal(i.ring().clone());
    let mut failure = None;
    for s in 0..=s_max {
        let ci = m.power(s + 1).product(&i1).colon_monomial(&f1);
        let cj = m.power(s + 1).product(&j1).colon_monomial(&g1);
        let inter = ci.intersect(&cj);
        if !m.power(s).contains_ideal(&inter) {
            failure = Some((s, ci, cj, inter));
            break;
        }
    }
    let direct = cwl(&i.sum(j));
    match failure {
        Some((s, ci, cj, inter)) => {
            v = v
                .witness(Witness::degree("first failing s", s))
                .witness(Witness::ideal("(m^{s+1}I':f')", &ci))
                .witness(Witness::ideal("(m^{s+1}J':g')", &cj))
                .witness(Witness::ideal("their intersection", &inter));
            v.conclude(Conclusion::False).cross_checked(!direct)
        }
        None => v.conclude(Conclusion::True).cross_checked(direct),
    }
}
