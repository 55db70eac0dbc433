//! Sum criteria: executable certificates for when `I + J` stays componentwise
//! linear, each packaged as a [`Verdict`] with witnesses and bounds.

use crate::betti::{has_linear_resolution, is_componentwise_linear, regularity};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;
use crate::verdict::{Conclusion, Verdict, Witness};

fn proper(i: &MonomialIdeal) -> bool {
    !i.is_zero() && !i.is_unit()
}

fn cwl(i: &MonomialIdeal) -> bool {
    is_componentwise_linear(i).expect("nonzero proper ideal")
}

fn reg(i: &MonomialIdeal) -> u32 {
    regularity(i).expect("nonzero proper ideal").regularity
}

fn linear(i: &MonomialIdeal) -> bool {
    has_linear_resolution(i).expect("nonzero proper ideal")
}

/// Exact test for sums of two `t`-linear ideals: `I + J` has a `t`-linear
/// resolution if and only if `reg(I ∩ J) <= t + 1`.
pub fn check_lin_plus_lin(i: &MonomialIdeal, j: &MonomialIdeal, t: u32) -> Verdict {
    let v = Verdict::new("lin_plus_lin")
        .input("I", i)
        .input("J", j)
        .bound("t", t);
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if i.order() != Some(t) || !linear(i) {
        return v.inapplicable(format!("I does not have a {t}-linear resolution"));
    }
    if j.order() != Some(t) || !linear(j) {
        return v.inapplicable(format!("J does not have a {t}-linear resolution"));
    }
    let meet_reg = regularity(&i.intersect(j)).expect("nonzero proper ideal");
    let holds = meet_reg.regularity <= t + 1;
    let direct = linear(&i.sum(j));
    let (hom, a) = meet_reg.witnesses[0].clone();
    v.witness(Witness::degree("reg(I ∩ J)", meet_reg.regularity))
        .witness(Witness::monomial(
            format!("Betti degree attaining reg(I ∩ J) at homological index {hom}"),
            &a,
        ))
        .conclude_bool(holds)
        .cross_checked(direct == holds)
}

/// One-sided certificate: `I` componentwise linear, `J` with a linear
/// resolution, and `reg J >= reg I`. If `reg(I ∩ J) = reg J + 1`, the sum is
/// componentwise linear; otherwise nothing is claimed.
pub fn check_cwl_plus_linear(i: &MonomialIdeal, j: &MonomialIdeal) -> Verdict {
    let v = Verdict::new("cwl_plus_linear").input("I", i).input("J", j);
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if !cwl(i) {
        return v.inapplicable("I is not componentwise linear");
    }
    if !linear(j) {
        return v.inapplicable("J does not have a linear resolution");
    }
    let (ri, rj) = (reg(i), reg(j));
    let v = v
        .witness(Witness::degree("reg I", ri))
        .witness(Witness::degree("reg J", rj));
    if rj < ri {
        return v.inapplicable("reg J < reg I");
    }
    let meet_reg = reg(&i.intersect(j));
    let v = v.witness(Witness::degree("reg(I ∩ J)", meet_reg));
    let direct = cwl(&i.sum(j));
    if meet_reg == rj + 1 {
        v.conclude(Conclusion::True).cross_checked(direct)
    } else {
        v.witness(Witness::text(
            "direct check",
            format!("I + J componentwise linear: {direct}"),
        ))
        .conclude(Conclusion::Inconclusive)
        .cross_checked(true)
    }
}

/// Exact componentwise test: for componentwise linear `I` and `J`, the sum is
/// componentwise linear if and only if `reg(I_<t> ∩ J_<t>) <= t + 1` for every
/// `t`. The scan is truncated at `t_max` (default `reg I + reg J`), which the
/// verdict records; a clean scan is reported as true, a failure is definitive.
pub fn check_componentwise_criterion(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    t_max: Option<u32>,
) -> Verdict {
    let v = Verdict::new("componentwise").input("I", i).input("J", j);
    if !proper(i) || !proper(j) {
        return v.inapplicable("I and J must be nonzero proper ideals");
    }
    if !cwl(i) {
        return v.inapplicable("I is not componentwise linear");
    }
    if !cwl(j) {
        return v.inapplicable("J is not componentwise linear");
    }
    let t_max = t_max.unwrap_or_else(|| reg(i) + reg(j));
    let v = v.bound("t_max", t_max);
    let t_lo = i.order().unwrap().min(j.order().unwrap());
    let mut failure = None;
    for t in t_lo..=t_max {
        let (it, jt) = (i.component(t), j.component(t));
        if it.is_zero() || jt.is_zero() {
            continue;
        }
        let meet = it.intersect(&jt);
        let r = reg(&meet);
        if r > t + 1 {
            failure = Some((t, meet, r));
            break;
        }
    }
    let direct = cwl(&i.sum(j));
    match failure {
        Some((t, meet, r)) => v
            .witness(Witness::degree("first failing component degree", t))
            .witness(Witness::ideal("I_<t> ∩ J_<t>", &meet))
            .witness(Witness::degree("reg of the failing intersection", r))
            .conclude(Conclusion::False)
            .cross_checked(!direct),
        None => v.conclude(Conclusion::True).cross_checked(direct),
    }
}

/// Intersection-of-powers test. Under the precondition
/// `I ∩ J ⊆ mI ∩ mJ`, the sum of componentwise linear `I` and `J` is
/// componentwise linear if and only if `I ∩ J` is componentwise linear and
/// `m^{s+1}I ∩ m^{s+1}J = m^s(I ∩ J)` for every `s`. The per-`s` one-sided
/// chains `(I∩J) ∩ m^{s+1}I = J ∩ m^{s+1}I = m^s(I∩J)` (and the mirror with
/// `I` and `J` swapped), which are sufficient when one of them holds at each
/// `s`, are evaluated alongside and reported as witnesses.
pub fn check_hv_criterion(i: &MonomialIdeal, j: &MonomialIdeal, s_max: Option<u32>) -> Verdict {
    let v = Verdict::new("hv").input("I", i).input("J", j);
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
    let m = MonomialIdeal::maximal(i.ring().clone());
    let (mi, mj) = (m.product(i), m.product(j));
    if !(mi.contains_ideal(&meet) && mj.contains_ideal(&meet)) {
        let culprit = meet
            .gens()
            .iter()
            .find(|g| !mi.contains(g) || !mj.contains(g))
            .expect("some generator escapes")
            .clone();
        return v
            .witness(Witness::monomial(
                "generator of I ∩ J outside mI ∩ mJ",
                &culprit,
            ))
            .inapplicable("I ∩ J is not contained in mI ∩ mJ");
    }
    let s_max = s_max.unwrap_or_else(|| reg(i) + reg(j) + 2);
    let mut v = v.bound("s_max", s_max);
    let direct = cwl(&i.sum(j));

    let meet_cwl = cwl(&meet);
    v = v.witness(Witness::text(
        "I ∩ J componentwise linear",
        meet_cwl.to_string(),
    ));
    if !meet_cwl {
        return v.conclude(Conclusion::False).cross_checked(!direct);
    }

    let mut main_failure = None;
    let mut one_sided_gap = None;
    let mut scanned_to = s_max;
    for s in 0..=s_max {
        let rhs = m.power(s).product(&meet);
        let ms1 = m.power(s + 1);
        let (li, lj) = (ms1.product(i), ms1.product(j));
        let side_i = meet.intersect(&li) == rhs && j.intersect(&li) == rhs;
        let side_j = meet.intersect(&lj) == rhs && i.intersect(&lj) == rhs;
        if !(side_i || side_j) && one_sided_gap.is_none() {
            one_sided_gap = Some(s);
        }
        let lhs = li.intersect(&lj);
        if lhs != rhs {
            main_failure = Some((s, lhs, rhs));
            scanned_to = s;
            break;
        }
    }
    v = v.witness(Witness::text(
        "one-sided chains: at least one side held at every scanned s",
        format!("{} (scanned s <= {scanned_to})", one_sided_gap.is_none()),
    ));
    if let Some(s) = one_sided_gap {
        v = v.witness(Witness::degree(
            "first s where both one-sided chains fail",
            s,
        ));
    }
    match main_failure {
        Some((s, lhs, rhs)) => v
            .witness(Witness::degree("first failing power s", s))
            .witness(Witness::ideal("m^{s+1}I ∩ m^{s+1}J", &lhs))
            .witness(Witness::ideal("m^s(I ∩ J)", &rhs))
            .conclude(Conclusion::False)
            .cross_checked(!direct),
        None => v.conclude(Conclusion::True).cross_checked(direct),
    }
}

/// Disjoint prime times componentwise linear: when the monomial prime
/// `n = (variables)` has support disjoint from `Supp(J)`, the product `nJ` is
/// componentwise linear. With overlapping supports the hypothesis is void and
/// the direct answer for `nJ` is reported as a witness instead.
pub fn check_prime_product(vars: &[usize], j: &MonomialIdeal) -> Verdict {
    let ring = j.ring().clone();
    let mut sorted: Vec<usize> = vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let names: Vec<String> = sorted.iter().map(|&k| ring.name(k).to_string()).collect();
    let v = Verdict::new("prime_product")
        .input_names("n", names.clone())
        .input("J", j);
    if sorted.is_empty() {
        return v.inapplicable("the variable set generating n is empty");
    }
    if !proper(j) {
        return v.inapplicable("J must be a nonzero proper ideal");
    }
    if !cwl(j) {
        return v.inapplicable("J is not componentwise linear");
    }
    let n = MonomialIdeal::new(
        ring.clone(),
        sorted
            .iter()
            .map(|&k| Monomial::variable(ring.clone(), k))
            .collect(),
    );
    let nj = n.product(j);
    let direct = cwl(&nj);
    let support = j.support();
    let overlap: Vec<String> = sorted
        .iter()
        .filter(|k| support.contains(k))
        .map(|&k| ring.name(k).to_string())
        .collect();
    if !overlap.is_empty() {
        return v
            .witness(Witness::text("overlapping variables", overlap.join(", ")))
            .witness(Witness::text(
                "direct check",
                format!("nJ componentwise linear: {direct}"),
            ))
            .inapplicable("Supp(n) meets Supp(J)");
    }
    v.witness(Witness::ideal("nJ", &nj))
        .conclude(Conclusion::True)
        .cross_checked(direct)
}

/// Certified sum via a disjoint prime: if `I ∩ J ⊆ mI` and `I ∩ J = nJ` for
/// some monomial prime `n` with support disjoint from `Supp(J)`, then `I + J`
/// is componentwise linear. The prime is searched over the variable subsets
/// outside `Supp(J)`, smallest cardinality first, then lexicographically.
pub fn check_nj_sum(i: &MonomialIdeal, j: &MonomialIdeal) -> Verdict {
    let v = Verdict::new("nj_sum").input("I", i).input("J", j);
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
    let ring = i.ring().clone();
    let mi = MonomialIdeal::maximal(ring.clone()).product(i);
    if !mi.contains_ideal(&meet) {
        let culprit = meet
            .gens()
            .iter()
            .find(|g| !mi.contains(g))
            .expect("some generator escapes")
            .clone();
        return v
            .witness(Witness::monomial("generator of I ∩ J outside mI", &culprit))
            .inapplicable("I ∩ J is not contained in mI");
    }
    let support = j.support();
    let outside: Vec<usize> = (0..ring.arity()).filter(|k| !support.contains(k)).collect();
    let mut subsets: Vec<Vec<usize>> = (1u64..(1 << outside.len()))
        .map(|mask| {
            outside
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &k)| k)
                .collect()
        })
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    for vars in subsets {
        let n = MonomialIdeal::new(
            ring.clone(),
            vars.iter()
                .map(|&k| Monomial::variable(ring.clone(), k))
                .collect(),
        );
        if n.product(j) == meet {
            let direct = cwl(&i.sum(j));
            return v
                .witness(Witness::ideal("monomial prime n with I ∩ J = nJ", &n))
                .conclude(Conclusion::True)
                .cross_checked(direct);
        }
    }
    v.inapplicable("no monomial prime n disjoint from Supp(J) satisfies I ∩ J = nJ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::testutil::{ideal, ring_xy};
    use crate::verdict::WitnessData;

    fn degree_of(v: &Verdict, description: &str) -> u32 {
        v.witnesses
            .iter()
            .find_map(|w| match w.data {
                WitnessData::Degree(d) if w.description == description => Some(d),
                _ => None,
            })
            .unwrap_or_else(|| panic!("no degree witness {description:?} in {v:?}"))
    }

    fn text_of<'a>(v: &'a Verdict, description: &str) -> &'a str {
        v.witnesses
            .iter()
            .find_map(|w| match &w.data {
                WitnessData::Text(t) if w.description == description => Some(t.as_str()),
                _ => None,
            })
            .unwrap_or_else(|| panic!("no text witness {description:?} in {v:?}"))
    }

    fn ideal_witness(v: &Verdict, description: &str) -> Vec<String> {
        v.witnesses
            .iter()
            .find_map(|w| match &w.data {
                WitnessData::Ideal(gens) if w.description == description => Some(gens.clone()),
                _ => None,
            })
            .unwrap_or_else(|| panic!("no ideal witness {description:?} in {v:?}"))
    }

    #[test]
    fn lin_plus_lin_rejects_mixed_degrees() {
        let r = ring_xy();
        let v = check_lin_plus_lin(&ideal(&r, "x^4, x^3*y^2"), &ideal(&r, "y^4"), 4);
        assert!(!v.applicable);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn lin_plus_lin_certifies_the_square_of_the_maximal_ideal() {
        let r = ring_xy();
        let m2 = ideal(&r, "x^2, x*y, y^2");
        let v = check_lin_plus_lin(&m2, &m2, 2);
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
        assert_eq!(degree_of(&v, "reg(I ∩ J)"), 2);
    }

    #[test]
    fn lin_plus_lin_decides_false_in_three_variables() {
        let r = Ring::new(["x", "y", "z"]);
        let i = ideal(&r, "x^2*y, x*y^2");
        let j = ideal(&r, "y^2*z, y*z^2");
        assert_eq!(i.intersect(&j).gen_strings(), vec!["x*y^2*z", "x^2*y*z^2"]);
        let v = check_lin_plus_lin(&i, &j, 3);
        assert!(v.applicable);
        assert_eq!(v.conclusion, Conclusion::False);
        assert_eq!(degree_of(&v, "reg(I ∩ J)"), 5);
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn cwl_plus_linear_needs_the_regularity_gate() {
        // xyz(x, y, z) + xy(x, y) against yz(y, z): the gate reg J >= reg I
        // fails (4 > 3), and indeed the sum is not componentwise linear.
        let r = Ring::new(["x", "y", "z"]);
        let i = ideal(&r, "x^2*y, x*y^2, x*y*z^2");
        let j = ideal(&r, "y^2*z, y*z^2");
        assert!(is_componentwise_linear(&i).unwrap());
        assert_eq!(reg(&i), 4);
        let v = check_cwl_plus_linear(&i, &j);
        assert!(!v.applicable);
        assert_eq!(
            i.sum(&j).gen_strings(),
            vec!["x^2*y", "x*y^2", "y^2*z", "y*z^2"]
        );
        assert!(!is_componentwise_linear(&i.sum(&j)).unwrap());
    }

    #[test]
    fn cwl_plus_linear_needs_a_linear_resolution_on_j() {
        let r = ring_xy();
        let v = check_cwl_plus_linear(&ideal(&r, "x^4, x^3*y^2"), &ideal(&r, "y^4, x^2*y^3"));
        assert!(!v.applicable);
    }

    #[test]
    fn cwl_plus_linear_is_silent_without_the_regularity_jump() {
        let r = ring_xy();
        let v = check_cwl_plus_linear(&ideal(&r, "x^3"), &ideal(&r, "y^3"));
        assert!(v.applicable);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
        assert_eq!(degree_of(&v, "reg(I ∩ J)"), 6);
        assert_eq!(
            text_of(&v, "direct check"),
            "I + J componentwise linear: false"
        );
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn cwl_plus_linear_certifies_variable_plus_square() {
        let r = ring_xy();
        let v = check_cwl_plus_linear(&ideal(&r, "x"), &ideal(&r, "y^2"));
        assert!(v.holds());
        assert_eq!(degree_of(&v, "reg(I ∩ J)"), 3);
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn componentwise_criterion_on_the_joint_family() {
        let r = Ring::new(["a", "b"]);
        let i = ideal(&r, "a^2, a*b, b^4");
        let j = ideal(&r, "a^4, a*b, b^2");
        let v = check_componentwise_criterion(&i, &j, None);
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
        assert_eq!(v.bounds["t_max"], reg(&i) + reg(&j));
    }

    #[test]
    fn componentwise_criterion_finds_the_failing_degree() {
        let r = ring_xy();
        let i = ideal(&r, "x^4, x^3*y^2");
        let j = ideal(&r, "y^4, x^2*y^3");
        let v = check_componentwise_criterion(&i, &j, None);
        assert!(v.applicable);
        assert_eq!(v.conclusion, Conclusion::False);
        assert_eq!(degree_of(&v, "first failing component degree"), 4);
        assert_eq!(ideal_witness(&v, "I_<t> ∩ J_<t>"), vec!["x^4*y^4"]);
        assert_eq!(degree_of(&v, "reg of the failing intersection"), 8);
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn componentwise_criterion_identity_pair() {
        let r = ring_xy();
        let m3 = ideal(&r, "x^3, x^2*y, x*y^2, y^3");
        let v = check_componentwise_criterion(&m3, &m3, None);
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn componentwise_criterion_requires_componentwise_linear_inputs() {
        let r = ring_xy();
        let v = check_componentwise_criterion(&ideal(&r, "x^2, y^2"), &ideal(&r, "x"), None);
        assert!(!v.applicable);
    }

    #[test]
    fn hv_criterion_blocks_when_the_intersection_escapes() {
        let r = ring_xy();
        let i = ideal(&r, "x^3, x^2*y^2, x*y^3");
        let j = ideal(&r, "y^3");
        assert_eq!(i.intersect(&j).gen_strings(), vec!["x*y^3"]);
        let v = check_hv_criterion(&i, &j, None);
        assert!(!v.applicable);
        let culprit = v
            .witnesses
            .iter()
            .find_map(|w| match &w.data {
                WitnessData::Monomial(m) => Some(m.clone()),
                _ => None,
            })
            .unwrap();
        assert_eq!(culprit, "x*y^3");
    }

    #[test]
    fn hv_criterion_certifies_the_disjoint_prime_split() {
        // Splitting (p, q)(u^2, uv) as pJ + qJ: the main equalities hold at
        // every scanned s, and so does a one-sided chain.
        let r = Ring::new(["u", "v", "p", "q"]);
        let j0 = ideal(&r, "u^2, u*v");
        let p = ideal(&r, "p");
        let q = ideal(&r, "q");
        let v = check_hv_criterion(&p.product(&j0), &q.product(&j0), None);
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
        assert_eq!(text_of(&v, "I ∩ J componentwise linear"), "true");
        assert!(text_of(
            &v,
            "one-sided chains: at least one side held at every scanned s"
        )
        .starts_with("true"));
    }

    #[test]
    fn hv_criterion_refutes_within_the_scan() {
        let r = ring_xy();
        let i = ideal(&r, "x^4, x^3*y^2");
        let j = ideal(&r, "y^4, x^2*y^3");
        let v = check_hv_criterion(&i, &j, None);
        assert!(v.applicable, "intersection (x^3*y^3) sits inside mI ∩ mJ");
        assert_eq!(v.conclusion, Conclusion::False);
        assert_eq!(degree_of(&v, "first failing power s"), 3);
        assert_eq!(
            ideal_witness(&v, "m^{s+1}I ∩ m^{s+1}J"),
            vec!["x^4*y^4", "x^6*y^3", "x^3*y^6"]
        );
        assert_eq!(
            ideal_witness(&v, "m^s(I ∩ J)"),
            vec!["x^6*y^3", "x^5*y^4", "x^4*y^5", "x^3*y^6"]
        );
        assert_eq!(degree_of(&v, "first s where both one-sided chains fail"), 2);
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn hv_criterion_identity_pair_is_inapplicable() {
        let r = ring_xy();
        let m2 = ideal(&r, "x^2, x*y, y^2");
        let v = check_hv_criterion(&m2, &m2, None);
        assert!(!v.applicable);
    }

    #[test]
    fn prime_product_rejects_an_empty_variable_set() {
        let r = ring_xy();
        let v = check_prime_product(&[], &ideal(&r, "x^2"));
        assert!(!v.applicable);
    }

    #[test]
    fn prime_product_certifies_the_disjoint_case() {
        let r = Ring::new(["u", "v", "p", "q"]);
        let v = check_prime_product(&[2, 3], &ideal(&r, "u^2, u*v"));
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
        assert_eq!(
            ideal_witness(&v, "nJ"),
            vec!["u^2*p", "u^2*q", "u*v*p", "u*v*q"]
        );
    }

    #[test]
    fn prime_product_principal_prime_is_a_shift() {
        let r = Ring::new(["x", "y", "z"]);
        let v = check_prime_product(&[2], &ideal(&r, "x^2, x*y"));
        assert!(v.holds());
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn prime_product_overlap_reports_the_direct_answer() {
        // (b, c) against (a^2 b, abc, bcd, cd^2): the factor has a linear
        // resolution, yet the overlapping product fails componentwise
        // linearity — reported as a witness, not as a conclusion.
        let r = Ring::new(["a", "b", "c", "d"]);
        let j = ideal(&r, "a^2*b, a*b*c, b*c*d, c*d^2");
        assert!(has_linear_resolution(&j).unwrap());
        let v = check_prime_product(&[1, 2], &j);
        assert!(!v.applicable);
        assert_eq!(text_of(&v, "overlapping variables"), "b, c");
        assert_eq!(
            text_of(&v, "direct check"),
            "nJ componentwise linear: false"
        );
    }

    #[test]
    fn nj_sum_finds_the_prime() {
        let r = ring_xy();
        let i = ideal(&r, "x^2*y, x*y^2");
        let j = ideal(&r, "x^3");
        let v = check_nj_sum(&i, &j);
        assert!(v.holds());
        assert_eq!(
            ideal_witness(&v, "monomial prime n with I ∩ J = nJ"),
            vec!["y"]
        );
        assert_eq!(v.cross_check, Some(true));
    }

    #[test]
    fn nj_sum_requires_containment_in_m_i() {
        let r = ring_xy();
        let v = check_nj_sum(&ideal(&r, "x^3, x^2*y^2, x*y^3"), &ideal(&r, "y^3"));
        assert!(!v.applicable);
    }

    #[test]
    fn nj_sum_reports_when_no_prime_exists() {
        let r = ring_xy();
        let v = check_nj_sum(&ideal(&r, "x^2"), &ideal(&r, "y^2"));
        assert!(!v.applicable);
        assert!(text_of(&v, "unmet precondition").contains("no monomial prime"));
    }
}
