use braidcert::certify::{Certificate, Verdict};
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;
use crate::task::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One input and what became of it.
pub struct Record {
    pub id: Option<String>,
    pub task: String,
    pub input: Option<String>,
    pub outcome: Result<Output, CliError>,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    name: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<&'a str>,
    task: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<&'a str>,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorJson<'a>>,
}

impl Record {
    pub fn to_json(&self) -> String {
        let mut rec = RecordJson {
            id: self.id.as_deref(),
            task: &self.task,
            input: self.input.as_deref(),
            status: "ok",
            result: None,
            certificate: None,
            error: None,
        };
        match &self.outcome {
            Ok(Output::Value { json, .. }) => rec.result = Some(json),
            Ok(Output::Certificate(c)) => rec.certificate = Some(c),
            Err(e) => {
                let (line, column) = match e.position() {
                    Some((l, c)) => (Some(l), c),
                    None => (None, None),
                };
                rec.status = "error";
                rec.error = Some(ErrorJson {
                    name: e.name(),
                    message: e.to_string(),
                    line,
                    column,
                });
            }
        }
        serde_json::to_string(&rec).expect("records serialize")
    }

    /// Multi-line rendering for a single command.
    pub fn to_text(&self) -> String {
        match &self.outcome {
            Ok(Output::Value { text, .. }) => format!("{text}\n"),
            Ok(Output::Certificate(c)) => c.render_text(),
            Err(e) => format!("error {}: {e}\n", e.name()),
        }
    }

    /// One line per record for corpus runs.
    pub fn to_text_line(&self) -> String {
        let summary = match &self.outcome {
            Ok(Output::Value { text, .. }) => text.clone(),
            Ok(Output::Certificate(c)) => {
                let rules: Vec<&str> = c.rules().map(|r| r.name()).collect();
                format!("{} [{}]", c.verdict, rules.join(", "))
            }
            Err(e) => format!("error {}: {e}", e.name()),
        };
        format!(
            "{}\t{}\t{}\n",
            self.id.as_deref().unwrap_or("-"),
            self.task,
            summary
        )
    }

    fn is_unknown_certificate(&self) -> bool {
        matches!(&self.outcome, Ok(Output::Certificate(c)) if c.verdict == Verdict::Unknown)
    }
}

/// 1 on any error, 2 when every record is an Unknown certificate, else 0.
pub fn exit_code(records: &[Record]) -> i32 {
    if records.iter().any(|r| r.outcome.is_err()) {
        1
    } else if !records.is_empty() && records.iter().all(Record::is_unknown_certificate) {
        2
    } else {
        0
    }
}
