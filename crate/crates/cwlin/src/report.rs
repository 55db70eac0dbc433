//! Machine-readable JSON and terminal text for every result type.
//!
//! JSON field order is fixed so reports are diff-stable; generator lists are
//! always in the canonical monomial order.

use serde_json::{json, Value};

use crate::betti::{BettiTable, RegularityReport};
use crate::dim2::OrderingCertificate;
use crate::verdict::{Conclusion, Verdict, WitnessData};
use crate::verify::CampaignReport;

pub fn to_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serialization is total")
}

pub fn verdict_value(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("serialization is total")
}

pub fn betti_value(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .iter()
        .map(|((i, a), r)| {
            json!({
                "i": i,
                "multidegree": a.to_string(),
                "degree": a.degree(),
                "rank": r,
            })
        })
        .collect();
    json!({
        "ideal": t.ideal().gen_strings(),
        "projective_dimension": t.projective_dimension(),
        "regularity": t.regularity_value(),
        "entries": entries,
    })
}

pub fn regularity_value(r: &RegularityReport) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|(i, a)| json!({ "i": i, "multidegree": a.to_string(), "degree": a.degree() }))
        .collect();
    json!({
        "regularity": r.regularity,
        "projective_dimension": r.projective_dimension,
        "witnesses": witnesses,
    })
}

pub fn ordering_value(cert: &OrderingCertificate) -> Value {
    json!({
        "order": cert.order.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "colon_vars": cert.colon_vars.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        "prefix_confirmed": cert.prefix_confirmed,
    })
}

pub fn campaign_value(r: &CampaignReport) -> Value {
    serde_json::to_value(r).expect("serialization is total")
}

fn conclusion_text(c: Conclusion) -> &'static str {
    match c {
        Conclusion::True => "true",
        Conclusion::False => "false",
        Conclusion::Inconclusive => "inconclusive",
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut s = String::new();
    s.push_str(&format!("criterion: {}\n", v.criterion));
    s.push_str(&format!("applicable: {}\n", v.applicable));
    s.push_str(&format!("conclusion: {}\n", conclusion_text(v.conclusion)));
    match v.cross_check {
        Some(true) => s.push_str("cross-check: agreed\n"),
        Some(false) => s.push_str("cross-check: CONTRADICTED (internal bug)\n"),
        None => {}
    }
    for (name, gens) in &v.inputs {
        s.push_str(&format!("input {name} = ({})\n", gens.join(", ")));
    }
    for (name, b) in &v.bounds {
        s.push_str(&format!("bound {name} = {b}\n"));
    }
    for w in &v.witnesses {
        let value = match &w.data {
            WitnessData::Ideal(gens) => format!("({})", gens.join(", ")),
            WitnessData::Monomial(m) => m.clone(),
            WitnessData::Degree(d) => d.to_string(),
            WitnessData::Text(t) => t.clone(),
        };
        s.push_str(&format!("  {}: {}\n", w.description, value));
    }
    s
}

pub fn betti_text(t: &BettiTable) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "ideal ({}), pd {}, reg {}\n",
        t.ideal().gen_strings().join(", "),
        t.projective_dimension(),
        t.regularity_value()
    ));
    for i in 0..=t.projective_dimension() {
        let row: Vec<String> = t
            .entries()
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|((_, a), r)| {
                if *r == 1 {
                    a.to_string()
                } else {
                    format!("{a} ({r})")
                }
            })
            .collect();
        s.push_str(&format!("beta_{i}: {}\n", row.join(", ")));
    }
    s
}

pub fn regularity_text(r: &RegularityReport) -> String {
    let spots: Vec<String> = r
        .witnesses
        .iter()
        .map(|(i, a)| format!("i = {i} at {a}"))
        .collect();
    format!(
        "reg {}, pd {}, attained: {}\n",
        r.regularity,
        r.projective_dimension,
        spots.join("; ")
    )
}

pub fn ordering_text(cert: &OrderingCertificate) -> String {
    let order: Vec<String> = cert.order.iter().map(|f| f.to_string()).collect();
    let colons: Vec<String> = cert.colon_vars.iter().map(|z| format!("({z})")).collect();
    let mut s = format!("order: {}\n", order.join(", "));
    if !colons.is_empty() {
        s.push_str(&format!("prefix colons: {}\n", colons.join(", ")));
    }
    s.push_str(&format!(
        "componentwise linear prefixes: {}\n",
        cert.prefix_confirmed.iter().all(|&c| c)
    ));
    s
}

pub fn campaign_text(r: &CampaignReport) -> String {
    let mut s = format!(
        "campaign {}: {}\npopulation: {}\nchecked: {}\n",
        r.theorem,
        if r.passed() { "PASS" } else { "FAIL" },
        r.population,
        r.checked
    );
    let bounds: Vec<String> = r.bounds.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    s.push_str(&format!("bounds: {}\n", bounds.join(", ")));
    s.push_str(&format!("time: {} ms\n", r.wall_time_ms));
    if !r.passed() {
        s.push_str(&format!("violations ({}):\n", r.violations.len()));
        for v in &r.violations {
            s.push_str(&format!("  {v}\n"));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti, regularity};
    use crate::dim2::cwl_ordering;
    use crate::testutil::{ideal, ring_xy};
    use crate::verify::{run_campaign, CampaignParams};

    #[test]
    fn verdict_json_has_the_schema_fields() {
        let r = ring_xy();
        let v = crate::dim2::fullsum_verdict(&ideal(&r, "x^2"), &ideal(&r, "y^2"));
        let json = verdict_value(&v);
        for field in [
            "criterion",
            "applicable",
            "conclusion",
            "witnesses",
            "bounds",
            "inputs",
        ] {
            assert!(json.get(field).is_some(), "missing {field}");
        }
        assert_eq!(json["criterion"], "fullsum");
        let text = verdict_text(&v);
        assert!(text.contains("criterion: fullsum"));
        assert!(text.contains("cross-check: agreed"));
    }

    #[test]
    fn betti_table_of_a_principal_ideal_is_a_single_entry() {
        let r = ring_xy();
        let t = betti(&ideal(&r, "x^2*y")).unwrap();
        let json = betti_value(&t);
        assert_eq!(json["entries"].as_array().unwrap().len(), 1);
        assert_eq!(json["entries"][0]["multidegree"], "x^2*y");
        assert_eq!(json["entries"][0]["rank"], 1);
        assert_eq!(json["projective_dimension"], 0);
        assert!(betti_text(&t).contains("beta_0: x^2*y"));
    }

    #[test]
    fn regularity_and_ordering_render() {
        let r = ring_xy();
        let i = ideal(&r, "x^3, x*y, y^3");
        let reg = regularity(&i).unwrap();
        assert_eq!(regularity_value(&reg)["regularity"], 3);
        assert!(regularity_text(&reg).starts_with("reg 3"));
        let cert = cwl_ordering(&i).unwrap();
        let json = ordering_value(&cert);
        assert_eq!(json["order"][0], "x*y");
        assert_eq!(json["colon_vars"][0], "y");
        assert!(ordering_text(&cert).contains("order: x*y, x^3, y^3"));
    }

    #[test]
    fn campaign_reports_round_trip_through_json() {
        let params = CampaignParams {
            count: Some(10),
            seed: 1,
            ..CampaignParams::default()
        };
        let report = run_campaign("distributivity", &params).unwrap();
        let json = campaign_value(&report);
        let back: Value = serde_json::from_str(&to_json(&json)).unwrap();
        assert_eq!(back, json);
        assert_eq!(back["theorem"], "distributivity");
        assert_eq!(back["checked"], 10);
        assert_eq!(back["violations"].as_array().unwrap().len(), 0);
        assert!(campaign_text(&report).contains("campaign distributivity: PASS"));
    }
}
