//! Rendering of reports: markdown constant-term tables and the stable JSON
//! schemas used by the command line.

use crate::factors::{b_alpha, pole_order_at, r_inverse_root_product, r_inverse_telescoped};
use crate::orbits::{Classification, ConstantTermReport, EPSILON_ASSUMPTION};
use crate::rat::rat_str;
use crate::shuffle::Shuffle;
use crate::zeta::FactorChar;
use crate::{CriticalPoint, EisenError};
use itertools::Itertools;

/// The per-shuffle factor report: both constructions of r(Λ_s, w)⁻¹, their
/// reduced forms, and the pole order when a point is given.
pub struct FactorReport {
    pub shuffle: Shuffle,
    pub root_product: crate::ZetaProduct,
    pub telescoped: crate::ZetaProduct,
    pub forms_agree: bool,
    pub pole_order: Option<i64>,
    pub point: Option<CriticalPoint>,
}

pub fn factor_report(
    w: &Shuffle,
    char_equal: bool,
    pt: Option<&CriticalPoint>,
) -> Result<FactorReport, EisenError> {
    let char_ = if char_equal {
        FactorChar::Trivial
    } else {
        FactorChar::Nontrivial
    };
    let root_product = r_inverse_root_product(w, char_);
    let telescoped = r_inverse_telescoped(w, char_);
    let forms_agree = root_product.reduced_eq(&telescoped);
    let pole_order = pt.map(|p| pole_order_at(w, p));
    Ok(FactorReport {
        shuffle: w.clone(),
        root_product,
        telescoped,
        forms_agree,
        pole_order,
        point: pt.cloned(),
    })
}

impl FactorReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "w": self.shuffle.values(),
            "root_product": self.root_product.to_json(),
            "root_product_reduced": self.root_product.reduce().to_json(),
            "telescoped": self.telescoped.to_json(),
            "telescoped_reduced": self.telescoped.reduce().to_json(),
            "forms_agree": self.forms_agree,
            "pole_order": self.pole_order,
            "point": self.point.as_ref().map(|p| p.to_json()).unwrap_or(serde_json::Value::Null),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("w = {}\n", self.shuffle));
        out.push_str(&format!(
            "root product r^-1  : {}\n",
            self.root_product.render()
        ));
        out.push_str(&format!(
            "telescoped r^-1    : {}\n",
            self.telescoped.render()
        ));
        out.push_str(&format!(
            "reduced            : {}\n",
            self.telescoped.reduce().render()
        ));
        out.push_str(&format!(
            "forms agree        : {}\n",
            if self.forms_agree { "yes" } else { "NO" }
        ));
        if let (Some(order), Some(pt)) = (self.pole_order, &self.point) {
            out.push_str(&format!(
                "pole order at s = {} : {}\n",
                rat_str(pt.s()),
                order
            ));
        }
        out
    }
}

/// Markdown constant-term table: one row per orbit, operators as opaque
/// labels keyed by the orbit's base point.
pub fn render_constant_term_markdown(report: &ConstantTermReport) -> String {
    let pt = &report.point;
    let mut out = String::new();
    out.push_str(&format!(
        "## Constant term at s = {} (m = {}, n = {}, alpha = {}, chi = mu: {})\n\n",
        rat_str(pt.s()),
        pt.m(),
        pt.n(),
        pt.alpha(),
        pt.char_equal()
    ));
    out.push_str(&format!("- {}\n", EPSILON_ASSUMPTION));
    for a in &report.classification.annotations {
        if a != EPSILON_ASSUMPTION {
            out.push_str(&format!("- {a}\n"));
        }
    }
    out.push_str(&format!(
        "- b_alpha = {} (maximal single-factor pole order)\n\n",
        b_alpha(pt)
    ));
    out.push_str("| orbit base | size | intervals | operator label | orbit sum | pole |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for orbit in &report.orbits {
        let intervals = if orbit.intervals.is_empty() {
            "-".to_string()
        } else {
            orbit
                .intervals
                .iter()
                .map(|iv| format!("{{{}..{}}}", iv.start, iv.end()))
                .join(", ")
        };
        let sum = match &orbit.sum {
            Some(s) => s.render(),
            None => "(not expanded; differing characters)".to_string(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | N(Lambda_s, w~{}) | {} | {} ({}) |\n",
            orbit.base,
            orbit.members.len(),
            intervals,
            orbit.base,
            sum,
            orbit.pole.order,
            orbit.pole.certainty.as_str(),
        ));
    }
    out.push_str(&format!(
        "\nverdict: {}\n",
        report.classification.verdict.as_str()
    ));
    if !report.classification.witnesses.is_empty() {
        out.push_str(&format!(
            "witness orbits: {}\n",
            report.classification.witnesses.iter().join(" ")
        ));
    }
    out
}

pub fn constant_term_json(report: &ConstantTermReport) -> serde_json::Value {
    serde_json::json!({
        "point": report.point.to_json(),
        "b_alpha": b_alpha(&report.point),
        "orbits": report.orbits.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
        "classification": report.classification.to_json(),
    })
}

pub fn render_classification_text(c: &Classification) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "point: m = {}, n = {}, s = {}, alpha = {}, chi = mu: {}\n",
        c.m,
        c.n,
        rat_str(&c.s),
        c.alpha.map(|a| a.to_string()).unwrap_or_else(|| "-".into()),
        c.char_equal
    ));
    out.push_str(&format!("verdict: {}\n", c.verdict.as_str()));
    if !c.witnesses.is_empty() {
        out.push_str(&format!(
            "witness orbits: {}\n",
            c.witnesses.iter().join(" ")
        ));
    }
    for a in &c.annotations {
        out.push_str(&format!("note: {a}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::constant_term_report;

    #[test]
    fn factor_report_for_w0_at_2_2_1() {
        let pt = CriticalPoint::new(2, 2, 1, true).unwrap();
        let w = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        let rep = factor_report(&w, true, Some(&pt)).unwrap();
        assert!(rep.forms_agree);
        assert_eq!(rep.pole_order, Some(2));
        let j = rep.to_json();
        assert_eq!(j["pole_order"], serde_json::json!(2));
        assert_eq!(j["forms_agree"], serde_json::json!(true));
    }

    #[test]
    fn markdown_table_flags_the_alpha_zero_discrepancy() {
        let pt = CriticalPoint::new(1, 1, 0, true).unwrap();
        let rep = constant_term_report(&pt, None).unwrap();
        let md = render_constant_term_markdown(&rep);
        assert!(md.contains("alpha-zero-discrepancy"), "{md}");
        assert!(md.contains("| [2,1] |"), "{md}");
        assert!(md.contains("AT_MOST_SIMPLE_POLE_REALIZED"), "{md}");
        assert!(md.contains("epsilon factors"), "{md}");
    }
}
