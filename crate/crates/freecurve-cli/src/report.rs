//! Analysis reports in machine-readable (JSON) and human-readable (text)
//! form. Both carry identical numeric content; the timing field is
//! suppressible for byte-for-byte deterministic output.

use freecurve::arrangements::{PairVerdict, WeakCombinatorics};
use freecurve::syzygy::CurveAnalysis;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Serialize)]
pub struct WeakCombReport {
    pub degrees: Vec<usize>,
    pub singularities: BTreeMap<String, usize>,
}

impl WeakCombReport {
    pub fn from_wc(wc: &WeakCombinatorics) -> Self {
        WeakCombReport {
            degrees: wc.degree_counts.clone(),
            singularities: wc
                .sing_counts
                .iter()
                .map(|(l, c)| (l.to_string(), *c))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub field: String,
    pub degree: usize,
    pub mdr: usize,
    pub tau: usize,
    pub exponents: Vec<usize>,
    pub relation_degrees: Vec<usize>,
    pub class: String,
    pub type_k: i64,
    pub subtype: String,
    pub resolution: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_combinatorics: Option<WeakCombReport>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl AnalysisReport {
    pub fn new(
        input: String,
        field: String,
        analysis: &CurveAnalysis,
        wc: Option<&WeakCombinatorics>,
        extra_warnings: Vec<String>,
        timing_ms: Option<u128>,
    ) -> Self {
        let mut warnings = analysis.warnings.clone();
        warnings.extend(extra_warnings);
        AnalysisReport {
            input,
            field,
            degree: analysis.degree,
            mdr: analysis.mdr,
            tau: analysis.tau,
            exponents: analysis.resolution.generator_degrees.clone(),
            relation_degrees: analysis.resolution.relation_degrees.clone(),
            class: analysis.class.to_string(),
            type_k: analysis.type_k as i64,
            subtype: analysis.subtype.to_string(),
            resolution: analysis.resolution.display(),
            weak_combinatorics: wc.map(WeakCombReport::from_wc),
            warnings,
            timing_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input:       {}\n", self.input));
        out.push_str(&format!("field:       {}\n", self.field));
        out.push_str(&format!("degree:      {}\n", self.degree));
        out.push_str(&format!("class:       {}\n", self.class));
        out.push_str(&format!("mdr:         {}\n", self.mdr));
        out.push_str(&format!("tau:         {}\n", self.tau));
        out.push_str(&format!("exponents:   {:?}\n", self.exponents));
        if !self.relation_degrees.is_empty() {
            out.push_str(&format!("relations:   {:?}\n", self.relation_degrees));
        }
        out.push_str(&format!("type:        {}\n", self.type_k));
        if self.subtype != "none" {
            out.push_str(&format!("subtype:     {}\n", self.subtype));
        }
        out.push_str(&format!("resolution:  {}\n", self.resolution));
        if let Some(wc) = &self.weak_combinatorics {
            let degrees: Vec<String> = wc.degrees.iter().map(|d| d.to_string()).collect();
            let sings: Vec<String> = wc
                .singularities
                .iter()
                .map(|(l, c)| format!("{} x {}", c, l))
                .collect();
            out.push_str(&format!(
                "weak-combinatorics: degrees ({}); singularities: {}\n",
                degrees.join(","),
                sings.join(", ")
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning:     {}\n", w));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("time:        {} ms\n", ms));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ZieglerReport {
    pub variant: String,
    pub verdict: String,
    pub is_pair: bool,
    pub detail: String,
    pub left: AnalysisReport,
    pub right: AnalysisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ZieglerReport {
    pub fn new(
        variant: String,
        verdict: &PairVerdict,
        left: AnalysisReport,
        right: AnalysisReport,
        timing_ms: Option<u128>,
    ) -> Self {
        let (is_pair, detail) = match verdict {
            PairVerdict::IsPair { detail } => (true, detail.clone()),
            PairVerdict::NotPair { reason } => (false, reason.clone()),
        };
        ZieglerReport {
            variant,
            verdict: if is_pair { "IsPair".into() } else { "NotPair".into() },
            is_pair,
            detail,
            left,
            right,
            timing_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("variant:  {}\n", self.variant));
        out.push_str(&format!("verdict:  {}\n", self.verdict));
        out.push_str(&format!("detail:   {}\n", self.detail));
        out.push_str("\n-- first arrangement --\n");
        out.push_str(&self.left.to_text());
        out.push_str("\n-- second arrangement --\n");
        out.push_str(&self.right.to_text());
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("\ntime:     {} ms\n", ms));
        }
        out
    }
}
