//! The machine-readable verdict: status, claim, criterion, and supporting
//! details, serialized as JSON with a fixed field order so identical inputs
//! always produce byte-identical output. Exit codes are derived from the
//! status and nowhere else.

use matcert_core::GuardedMatrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Certified,
    Rejected,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Certified => 0,
            Status::Rejected => 1,
            Status::InputError => 2,
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Rejected => "rejected",
            Status::InputError => "input-error",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionName {
    Triangular,
    Spectral,
    None,
}

/// What the certificate claims: termination, or a complexity degree once
/// certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub goal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
}

/// Supporting evidence: witnesses for rejections and errors, the constant
/// bound, the dominating matrix, its characteristic polynomial, and the
/// eigenvalue-1 multiplicity. Scalars are decimal strings to keep exact
/// values exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Details {
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_max: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

impl Details {
    pub fn empty() -> Details {
        Details { witnesses: Vec::new(), c: None, m_max: None, chi: None, m: None }
    }
}

/// One line of the oracle table: longest derivation from ground terms up to
/// `size`, next to the largest certified bound over the same terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub size: u64,
    pub steps: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
}

/// Result of the brute-force cross-check requested alongside a check run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub max_size: u64,
    pub step_cap: u64,
    pub counting: String,
    pub rows: Vec<OracleRow>,
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
    pub criterion: CriterionName,
    pub details: Details,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn input_error(message: String) -> Verdict {
        Verdict {
            status: Status::InputError,
            claim: None,
            criterion: CriterionName::None,
            details: Details {
                witnesses: vec![message],
                c: None,
                m_max: None,
                chi: None,
                m: None,
            },
            oracle: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("verdicts serialize without errors");
        text.push('\n');
        text
    }
}

/// Rows of decimal strings, the JSON image of an exact matrix.
pub fn matrix_strings(m: &GuardedMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_map_to_the_exit_codes() {
        assert_eq!(Status::Certified.exit_code(), 0);
        assert_eq!(Status::Rejected.exit_code(), 1);
        assert_eq!(Status::InputError.exit_code(), 2);
    }

    #[test]
    fn serialization_round_trips() {
        let verdict = Verdict {
            status: Status::Certified,
            claim: Some(Claim { goal: "complexity".into(), degree: Some(2) }),
            criterion: CriterionName::Triangular,
            details: Details {
                witnesses: Vec::new(),
                c: Some("1".into()),
                m_max: Some(vec![vec!["1".into(), "1".into()], vec!["0".into(), "1".into()]]),
                chi: Some("x^2 - 2x + 1".into()),
                m: Some(2),
            },
            oracle: Some(OracleSection {
                max_size: 6,
                step_cap: 10_000,
                counting: "rewrite steps".into(),
                rows: vec![OracleRow { size: 1, steps: 0, bound: Some("1".into()) }],
                violations: Vec::new(),
                note: None,
            }),
        };
        let json = verdict.to_json();
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, verdict);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn status_words_match_the_serialized_forms() {
        for (status, word) in [
            (Status::Certified, "certified"),
            (Status::Rejected, "rejected"),
            (Status::InputError, "input-error"),
        ] {
            assert_eq!(status.word(), word);
            assert_eq!(serde_json::to_string(&status).unwrap(), format!("\"{word}\""));
        }
    }

    #[test]
    fn input_errors_carry_a_witness() {
        let verdict = Verdict::input_error("bad file".into());
        assert_eq!(verdict.exit_code(), 2);
        assert_eq!(verdict.details.witnesses.len(), 1);
    }
}
