//! Report types for every subcommand, each with a deterministic text
//! rendering and a machine-readable JSON form that round-trips exactly
//! (numbers that can exceed native widths travel as exact `p/q` strings).

use std::fmt::Write as _;

use compositum_core::{
    BigRational, BoundReport, DecisionMethod, DecisionReport, HypothesisReport,
    IntermediateClassification, IntermediateLabel, NumberField, PermGroup, Quintuple, TriState,
    Verdict,
};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Truncated fixed-point decimal rendering of an exact rational;
/// deterministic and sign-correct.
pub fn decimal_approx(q: &BigRational, decimals: u32) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let abs = q.abs();
    let scale = num_traits::pow::pow(
        compositum_core::BigInt::from(10),
        decimals as usize,
    );
    let scaled = (abs * BigRational::from_integer(scale)).to_integer();
    let digits = scaled.to_string();
    let point = decimals as usize;
    if digits.len() <= point {
        let mut frac = String::new();
        for _ in 0..(point - digits.len()) {
            frac.push('0');
        }
        format!("{sign}0.{frac}{digits}")
    } else {
        let (int_part, frac_part) = digits.split_at(digits.len() - point);
        format!("{sign}{int_part}.{frac_part}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDto {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupDto {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupDto {
            degree: g.degree(),
            order: g.order(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
        }
    }
}

fn generators_text(generators: &[String]) -> String {
    if generators.is_empty() {
        "()".to_string()
    } else {
        generators.join(" ")
    }
}

// ---------------------------------------------------------------- diagonal

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalReportDto {
    pub verdict: String,
    pub method: String,
    pub certificate_checked: bool,
    pub witness: Option<GroupDto>,
    pub witness_pair: Option<(GroupDto, GroupDto)>,
    pub scanned: Option<usize>,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Diagonal => "Diagonal",
        Verdict::NoDiagonal => "NoDiagonal",
    }
}

pub fn method_name(m: DecisionMethod) -> &'static str {
    match m {
        DecisionMethod::MaxNonNormal => "MaxNonNormal",
        DecisionMethod::IndexDivisibility => "IndexDivisibility",
        DecisionMethod::BruteForce => "BruteForce",
        DecisionMethod::WitnessConstruction => "WitnessConstruction",
    }
}

pub fn diagonal_dto(report: &DecisionReport) -> DiagonalReportDto {
    DiagonalReportDto {
        verdict: verdict_name(report.verdict).to_string(),
        method: method_name(report.method).to_string(),
        certificate_checked: report.certificate_checked,
        witness: report.witness.as_ref().map(GroupDto::from_group),
        witness_pair: report
            .witness_pair
            .as_ref()
            .map(|(n, r)| (GroupDto::from_group(n), GroupDto::from_group(r))),
        scanned: report.scanned,
    }
}

pub fn render_diagonal_text(dto: &DiagonalReportDto) -> String {
    let mut out = format!("{} ({})\n", dto.verdict, dto.method);
    if let Some(w) = &dto.witness {
        let _ = writeln!(
            out,
            "witness: order {}, generators: {}",
            w.order,
            generators_text(&w.generators)
        );
    }
    if let Some((n, r)) = &dto.witness_pair {
        let _ = writeln!(
            out,
            "witness pair: N order {} ({}), R order {} ({})",
            n.order,
            generators_text(&n.generators),
            r.order,
            generators_text(&r.generators)
        );
    }
    if let Some(scanned) = dto.scanned {
        let _ = writeln!(out, "scanned: {scanned} intermediate groups");
    }
    let _ = writeln!(
        out,
        "certificate checked: {}",
        if dto.certificate_checked { "yes" } else { "no" }
    );
    out
}

// ----------------------------------------------------------------- goursat

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuintupleDto {
    pub a1_order: usize,
    pub a2_order: usize,
    pub b1_order: usize,
    pub b2_order: usize,
    pub subgroup_order: usize,
    pub phi: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoursatReportDto {
    pub left_order: usize,
    pub right_order: usize,
    pub product_order: usize,
    pub subgroup_count: usize,
    pub quintuples: Option<Vec<QuintupleDto>>,
}

pub fn quintuple_dto(q: &Quintuple, subgroup: &PermGroup) -> QuintupleDto {
    QuintupleDto {
        a1_order: q.a1.order(),
        a2_order: q.a2.order(),
        b1_order: q.b1.order(),
        b2_order: q.b2.order(),
        subgroup_order: subgroup.order(),
        phi: q
            .phi
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    }
}

pub fn render_goursat_text(dto: &GoursatReportDto) -> String {
    let mut out = format!("{} subgroups\n", dto.subgroup_count);
    let _ = writeln!(
        out,
        "product order {} = {} x {}",
        dto.product_order, dto.left_order, dto.right_order
    );
    if let Some(quintuples) = &dto.quintuples {
        for (i, q) in quintuples.iter().enumerate() {
            let phi: Vec<String> = q
                .phi
                .iter()
                .map(|(a, b)| format!("{a} -> {b}"))
                .collect();
            let _ = writeln!(
                out,
                "#{i}: |G| = {}, |A1| = {}, |A2| = {}, |B1| = {}, |B2| = {}, phi: {}",
                q.subgroup_order,
                q.a1_order,
                q.a2_order,
                q.b1_order,
                q.b2_order,
                phi.join(", ")
            );
        }
    }
    out
}

// ------------------------------------------------------------------- field

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReportDto {
    pub name: String,
    pub residue: String,
    pub trace: String,
    pub delta: String,
    /// `None` when the field is not totally real (positivity undefined).
    pub totally_positive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReportDto {
    pub label: String,
    pub min_poly: String,
    pub degree: usize,
    pub irreducibility: String,
    pub totally_real: bool,
    pub order_disc: String,
    pub disc_prime_support: Vec<String>,
    pub disc_unfactored_cofactor: Option<String>,
    pub elements: Vec<ElementReportDto>,
}

pub fn render_field_text(dto: &FieldReportDto) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "label: {}", dto.label);
    let _ = writeln!(out, "min poly: {}", dto.min_poly);
    let _ = writeln!(out, "degree: {}", dto.degree);
    let _ = writeln!(out, "irreducibility: {}", dto.irreducibility);
    let _ = writeln!(out, "totally real: {}", if dto.totally_real { "yes" } else { "no" });
    let _ = writeln!(out, "order disc: {}", dto.order_disc);
    let support = dto.disc_prime_support.join(", ");
    let _ = writeln!(out, "prime support: {{{support}}}");
    if let Some(cofactor) = &dto.disc_unfactored_cofactor {
        let _ = writeln!(out, "unfactored cofactor: {cofactor}");
    }
    for el in &dto.elements {
        let positive = match el.totally_positive {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let _ = writeln!(
            out,
            "element {} = {}: trace {}, delta {}, totally positive: {}",
            el.name, el.residue, el.trace, el.delta, positive
        );
    }
    out
}

pub fn irreducibility_name(field: &NumberField) -> &'static str {
    match field.irreducibility() {
        compositum_core::Irreducibility::Proven => "proven",
        compositum_core::Irreducibility::UserAsserted => "user-asserted",
    }
}

// ------------------------------------------------------------------- bound

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTermDto {
    pub e: u64,
    pub n: u32,
    pub c_lo: String,
    pub c_hi: String,
    pub term_lo: String,
    pub term_hi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReportDto {
    pub label: String,
    pub k: u64,
    pub ell: u64,
    pub t: String,
    pub terms: Vec<BoundTermDto>,
    pub c_lo: String,
    pub c_hi: String,
}

pub fn bound_dto(label: &str, report: &BoundReport) -> BoundReportDto {
    BoundReportDto {
        label: label.to_string(),
        k: report.k,
        ell: report.ell,
        t: report.t.to_string(),
        terms: report
            .terms
            .iter()
            .map(|term| BoundTermDto {
                e: term.e,
                n: term.n,
                c_lo: term.c_n.lo().to_string(),
                c_hi: term.c_n.hi().to_string(),
                term_lo: term.term.lo().to_string(),
                term_hi: term.term.hi().to_string(),
            })
            .collect(),
        c_lo: report.c.lo().to_string(),
        c_hi: report.c.hi().to_string(),
    }
}

pub fn render_bound_text(label: &str, report: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "C(L, k) for L = {label} (ell = {}), k = {}",
        report.ell, report.k
    );
    let _ = writeln!(out, "T = {}", report.t);
    let _ = writeln!(out, "  e |   n | c_n in [lo, hi] | term in [lo, hi]");
    for term in &report.terms {
        let _ = writeln!(
            out,
            "{:>3} | {:>3} | [{}, {}] | [{}, {}]",
            term.e,
            term.n,
            decimal_approx(term.c_n.lo(), 12),
            decimal_approx(term.c_n.hi(), 12),
            decimal_approx(term.term.lo(), 6),
            decimal_approx(term.term.hi(), 6),
        );
    }
    let _ = writeln!(
        out,
        "C in [{}, {}]",
        decimal_approx(report.c.lo(), 6),
        decimal_approx(report.c.hi(), 6)
    );
    let _ = writeln!(
        out,
        "certified threshold (hi): {}",
        decimal_approx(report.c.hi(), 6)
    );
    out
}

// ------------------------------------------------------------------- check

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReportDto {
    pub k: usize,
    pub ell: u64,
    pub disc_bound: String,
    pub coprimality: String,
    pub no_nontrivial_subfields: bool,
    pub not_galois_or_degree_nondivisible: bool,
    pub strict_galois_reading: bool,
    pub readings_agree: bool,
    pub overall: String,
}

pub fn tristate_name(t: TriState) -> &'static str {
    match t {
        TriState::Pass => "pass",
        TriState::Fail => "fail",
        TriState::Unknown => "unknown",
    }
}

pub fn check_dto(report: &HypothesisReport) -> CheckReportDto {
    CheckReportDto {
        k: report.k,
        ell: report.ell,
        disc_bound: tristate_name(report.disc_bound).to_string(),
        coprimality: tristate_name(report.coprimality).to_string(),
        no_nontrivial_subfields: report.no_nontrivial_subfields,
        not_galois_or_degree_nondivisible: report.not_galois_or_degree_nondivisible,
        strict_galois_reading: report.strict_galois_reading,
        readings_agree: report.readings_agree,
        overall: tristate_name(report.overall).to_string(),
    }
}

pub fn render_check_text(dto: &CheckReportDto) -> String {
    let pass_fail = |b: bool| if b { "PASS" } else { "FAIL" };
    let mut out = String::new();
    let _ = writeln!(out, "k = {}, ell = {}", dto.k, dto.ell);
    let _ = writeln!(out, "condition (i) disc bound: {} (supplied)", dto.disc_bound);
    let _ = writeln!(out, "condition (ii) coprimality: {} (supplied)", dto.coprimality);
    let _ = writeln!(
        out,
        "condition (iii) no nontrivial subfields: {}",
        pass_fail(dto.no_nontrivial_subfields)
    );
    let _ = writeln!(
        out,
        "condition (iv) not Galois or k does not divide ell: {}",
        pass_fail(dto.not_galois_or_degree_nondivisible)
    );
    let _ = writeln!(
        out,
        "conditions (iii),(iv): {}",
        pass_fail(dto.no_nontrivial_subfields && dto.not_galois_or_degree_nondivisible)
    );
    let _ = writeln!(
        out,
        "strict Galois reading: {} (agrees: {})",
        pass_fail(dto.strict_galois_reading),
        if dto.readings_agree { "yes" } else { "no" }
    );
    let _ = writeln!(out, "overall: {}", dto.overall);
    out
}

// ---------------------------------------------------------- classification

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDto {
    pub total: usize,
    pub contains_k: usize,
    pub subfield_of_l: usize,
    pub diagonal: usize,
}

pub fn classification_dto(c: &IntermediateClassification) -> ClassificationDto {
    ClassificationDto {
        total: c.labeled.len(),
        contains_k: c.contains_k,
        subfield_of_l: c.subfield_of_l,
        diagonal: c.diagonal,
    }
}

pub fn label_name(label: IntermediateLabel) -> &'static str {
    match label {
        IntermediateLabel::ContainsK => "ContainsK",
        IntermediateLabel::SubfieldOfL => "SubfieldOfL",
        IntermediateLabel::Diagonal => "Diagonal",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use compositum_core::BigInt;

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_approx(&qr(1, 2), 4), "0.5000");
        assert_eq!(decimal_approx(&qr(-7, 3), 6), "-2.333333");
        assert_eq!(decimal_approx(&qr(6912, 1), 2), "6912.00");
        assert_eq!(decimal_approx(&qr(1, 1000), 2), "0.00");
    }

    #[test]
    fn dto_round_trips() {
        let dto = DiagonalReportDto {
            verdict: "Diagonal".into(),
            method: "IndexDivisibility".into(),
            certificate_checked: true,
            witness: Some(GroupDto {
                degree: 4,
                order: 2,
                generators: vec!["(1 2)(3 4)".into()],
            }),
            witness_pair: None,
            scanned: Some(5),
        };
        let json = serde_json::to_string(&dto).unwrap();
        let back: DiagonalReportDto = serde_json::from_str(&json).unwrap();
        assert_eq!(dto, back);

        let bound = BoundReportDto {
            label: "Q(sqrt2)".into(),
            k: 3,
            ell: 2,
            t: "16".into(),
            terms: vec![BoundTermDto {
                e: 1,
                n: 3,
                c_lo: "1/2".into(),
                c_hi: "1/2".into(),
                term_lo: "6912".into(),
                term_hi: "6912".into(),
            }],
            c_lo: "6912".into(),
            c_hi: "6912".into(),
        };
        let json = serde_json::to_string(&bound).unwrap();
        let back: BoundReportDto = serde_json::from_str(&json).unwrap();
        assert_eq!(bound, back);
    }

    #[test]
    fn diagonal_text_leads_with_verdict() {
        let dto = DiagonalReportDto {
            verdict: "NoDiagonal".into(),
            method: "MaxNonNormal".into(),
            certificate_checked: false,
            witness: None,
            witness_pair: None,
            scanned: None,
        };
        let text = render_diagonal_text(&dto);
        assert!(text.starts_with("NoDiagonal (MaxNonNormal)\n"));
    }
}
