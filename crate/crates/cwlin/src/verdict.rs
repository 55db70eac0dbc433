//! Structured outcomes for criterion checks: applicability, conclusion,
//! re-checkable witnesses, and the truncation bounds that were used.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// What a criterion decided. `Inconclusive` covers both unmet preconditions
/// and sufficient conditions that simply did not fire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    True,
    False,
    Inconclusive,
}

impl Conclusion {
    pub fn from_bool(b: bool) -> Conclusion {
        if b {
            Conclusion::True
        } else {
            Conclusion::False
        }
    }

    /// `Some` for a definite conclusion, `None` when inconclusive.
    pub fn decided(self) -> Option<bool> {
        match self {
            Conclusion::True => Some(true),
            Conclusion::False => Some(false),
            Conclusion::Inconclusive => None,
        }
    }
}

impl Serialize for Conclusion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Conclusion::True => serializer.serialize_bool(true),
            Conclusion::False => serializer.serialize_bool(false),
            Conclusion::Inconclusive => serializer.serialize_str("inconclusive"),
        }
    }
}

/// A piece of evidence attached to a verdict, concrete enough to re-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(flatten)]
    pub data: WitnessData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessData {
    Ideal(Vec<String>),
    Monomial(String),
    Degree(u32),
    Text(String),
}

impl Witness {
    pub fn ideal(description: impl Into<String>, i: &MonomialIdeal) -> Witness {
        Witness {
            description: description.into(),
            data: WitnessData::Ideal(i.gen_strings()),
        }
    }

    pub fn monomial(description: impl Into<String>, m: &Monomial) -> Witness {
        Witness {
            description: description.into(),
            data: WitnessData::Monomial(m.to_string()),
        }
    }

    pub fn degree(description: impl Into<String>, d: u32) -> Witness {
        Witness {
            description: description.into(),
            data: WitnessData::Degree(d),
        }
    }

    pub fn text(description: impl Into<String>, note: impl Into<String>) -> Witness {
        Witness {
            description: description.into(),
            data: WitnessData::Text(note.into()),
        }
    }
}

/// Outcome of one criterion on concrete inputs.
///
/// `cross_check` records whether an independent direct computation agreed
/// with the conclusion; `Some(false)` means the criterion and the direct
/// route contradict each other, which is treated as an internal bug.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub criterion: String,
    pub applicable: bool,
    pub conclusion: Conclusion,
    pub witnesses: Vec<Witness>,
    pub bounds: BTreeMap<String, u32>,
    pub inputs: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
}

impl Verdict {
    pub fn new(criterion: impl Into<String>) -> Verdict {
        Verdict {
            criterion: criterion.into(),
            applicable: true,
            conclusion: Conclusion::Inconclusive,
            witnesses: Vec::new(),
            bounds: BTreeMap::new(),
            inputs: BTreeMap::new(),
            cross_check: None,
        }
    }

    pub fn input(mut self, name: &str, i: &MonomialIdeal) -> Verdict {
        self.inputs.insert(name.to_string(), i.gen_strings());
        self
    }

    pub fn input_names(mut self, name: &str, values: Vec<String>) -> Verdict {
        self.inputs.insert(name.to_string(), values);
        self
    }

    pub fn bound(mut self, name: &str, value: u32) -> Verdict {
        self.bounds.insert(name.to_string(), value);
        self
    }

    pub fn witness(mut self, w: Witness) -> Verdict {
        self.witnesses.push(w);
        self
    }

    /// Marks the preconditions unmet; the conclusion is forced inconclusive.
    pub fn inapplicable(mut self, why: impl Into<String>) -> Verdict {
        self.applicable = false;
        self.conclusion = Conclusion::Inconclusive;
        self.witnesses
            .push(Witness::text("unmet precondition", why));
        self
    }

    pub fn conclude(mut self, conclusion: Conclusion) -> Verdict {
        debug_assert!(self.applicable, "conclusions require applicability");
        self.conclusion = conclusion;
        self
    }

    pub fn conclude_bool(self, b: bool) -> Verdict {
        self.conclude(Conclusion::from_bool(b))
    }

    pub fn cross_checked(mut self, agreed: bool) -> Verdict {
        self.cross_check = Some(agreed);
        self
    }

    /// Applicable and concluded true.
    pub fn holds(&self) -> bool {
        self.applicable && self.conclusion == Conclusion::True
    }
}
