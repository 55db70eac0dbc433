//! Tiny constructors shared by unit tests: `mono(&ring, "x^2*y")` and
//! `ideal(&ring, "x^3, x*y, y^3")`.

use std::sync::Arc;

use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

pub(crate) fn mono(ring: &Arc<Ring>, text: &str) -> Monomial {
    let mut exps = vec![0u32; ring.arity()];
    let text = text.trim();
    if text == "1" {
        return Monomial::new(ring.clone(), exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n.trim(), e.trim().parse::<u32>().expect("exponent")),
            None => (factor, 1),
        };
        let idx = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        exps[idx] += exp;
    }
    Monomial::new(ring.clone(), exps)
}

pub(crate) fn ideal(ring: &Arc<Ring>, gens: &str) -> MonomialIdeal {
    let gens = gens.split(',').map(|t| mono(ring, t)).collect();
    MonomialIdeal::new(ring.clone(), gens)
}

pub(crate) fn ring_xy() -> Arc<Ring> {
    Ring::new(["x", "y"])
}
