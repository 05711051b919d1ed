//! Classification results as text or JSON.

use realnf_core::local::{corank, milnor_number};
use realnf_core::roots::interval::{fmt_lower, fmt_upper};
use realnf_core::{classify, determine, BiPoly, Error, Interval, NormalFormRecord, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Classified,
    OutOfScope,
    Degenerate,
    NotIsolated,
}

impl Status {
    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::NotSingular | Error::NotCorank2(_) | Error::OutOfScope(_) => Status::OutOfScope,
            Error::NotIsolated => Status::NotIsolated,
            _ => Status::Degenerate,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Classified => 0,
            _ => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Classified => "classified",
            Status::OutOfScope => "out-of-scope",
            Status::Degenerate => "degenerate",
            Status::NotIsolated => "not-isolated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lower: String,
    pub upper: String,
    pub lower_closed: bool,
    pub upper_closed: bool,
}

impl From<&Interval> for IntervalJson {
    fn from(i: &Interval) -> Self {
        IntervalJson { lower: fmt_lower(i), upper: fmt_upper(i), lower_closed: i.lower_closed, upper_closed: i.upper_closed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub normal_form: String,
    pub minpoly: String,
    pub interval: IntervalJson,
}

impl From<&NormalFormRecord> for RecordJson {
    fn from(r: &NormalFormRecord) -> Self {
        RecordJson {
            ty: r.ty.label(),
            normal_form: r.normal_form.clone(),
            minpoly: r.parameter.minpoly.to_string(),
            interval: (&r.parameter.interval).into(),
        }
    }
}

impl RecordJson {
    /// The text-mode line for this record.
    pub fn line(&self) -> String {
        let i = &self.interval;
        format!(
            "{}: {}, a = root of {} in {}{}, {}{}",
            self.ty,
            self.normal_form,
            self.minpoly,
            if i.lower_closed { '[' } else { '(' },
            i.lower,
            i.upper,
            if i.upper_closed { ']' } else { ')' }
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corank: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputReport {
    pub input: String,
    pub status: Status,
    pub records: Vec<RecordJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

fn diagnostics(f: &BiPoly<Rational>) -> Diagnostics {
    match determine(f) {
        Ok(d) => Diagnostics { mu: Some(d.mu), corank: Some(d.corank), complex_type: Some(d.family.to_string()), reason: None },
        Err(_) => Diagnostics { mu: milnor_number(f).finite(), corank: corank(f).ok(), ..Default::default() },
    }
}

impl OutputReport {
    /// Classifies `f`. Diagnostics are attached when asked for, and always
    /// carry the reason when no record is produced.
    pub fn build(input: &str, f: &BiPoly<Rational>, with_diagnostics: bool) -> OutputReport {
        let (status, records, reason) = match classify(f) {
            Ok(rs) if !rs.is_empty() => (Status::Classified, rs.iter().map(RecordJson::from).collect(), None),
            Ok(_) => (Status::Degenerate, vec![], Some("no normal form equation found".to_string())),
            Err(e) => (Status::of_error(&e), vec![], Some(e.to_string())),
        };
        let diagnostics = match (with_diagnostics, reason) {
            (true, reason) => Some(Diagnostics { reason, ..diagnostics(f) }),
            (false, Some(reason)) => Some(Diagnostics { reason: Some(reason), ..Default::default() }),
            (false, None) => None,
        };
        OutputReport { input: input.to_string(), status, records, diagnostics }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = vec![format!("input: {}", self.input), format!("status: {}", self.status.as_str())];
        out.extend(self.records.iter().map(RecordJson::line));
        if let Some(d) = &self.diagnostics {
            let fields = [
                d.mu.map(|m| format!("mu = {m}")),
                d.corank.map(|c| format!("corank = {c}")),
                d.complex_type.as_ref().map(|t| format!("complex type = {t}")),
                d.reason.as_ref().map(|r| format!("reason: {r}")),
            ];
            out.extend(fields.into_iter().flatten());
        }
        out.join("\n")
    }

    /// Record lines in a text report.
    pub fn record_lines(text: &str) -> Vec<String> {
        text.lines()
            .filter(|l| !["input:", "status:", "mu =", "corank =", "complex type =", "reason:"].iter().any(|p| l.starts_with(p)))
            .map(str::to_string)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn report(s: &str) -> OutputReport {
        OutputReport::build(s, &parse_polynomial(s).unwrap().polynomial, true)
    }

    #[test]
    fn json_fields() {
        let r = report("x^4+y^4");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "classified");
        assert_eq!(v["records"].as_array().unwrap().len(), 2);
        let rec = &v["records"][0];
        assert_eq!(rec["type"], "X9++");
        assert_eq!(rec["normal_form"], "x^4+a*x^2*y^2+y^4");
        assert!(rec["interval"]["lower_closed"].is_boolean());
        assert_eq!(v["diagnostics"]["mu"], 9);
        assert_eq!(v["diagnostics"]["complex_type"], "X9");
    }

    #[test]
    fn statuses() {
        let r = report("x^2+y^2");
        assert_eq!(r.status, Status::OutOfScope);
        assert_eq!(r.status.exit_code(), 2);
        assert!(r.records.is_empty());
        assert_eq!(report("x^2*y^2").status, Status::NotIsolated);
        let v: serde_json::Value = serde_json::from_str(&report("x^2+y^2").to_json()).unwrap();
        assert_eq!(v["status"], "out-of-scope");
    }

    #[test]
    fn text_matches_json() {
        let r = report("x^3 - x*y^4");
        let lines = OutputReport::record_lines(&r.to_text());
        assert_eq!(lines, r.records.iter().map(RecordJson::line).collect::<Vec<_>>());
        assert_eq!(lines.len(), 3);
    }
}
