//! Output records and their JSON-lines and TSV renderings.

use std::fmt::Display;
use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};
use sturmian::{Error, Word};

/// Words longer than this are elided unless `--full` is given.
pub const ELIDE_AFTER: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Error => "error",
        }
    }
}

/// One line of output. Inputs and results are ordered string maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub result: Vec<(String, String)>,
    pub status: Status,
    pub error_kind: Option<String>,
}

impl OutputRecord {
    pub fn ok(command: &str) -> OutputRecord {
        OutputRecord {
            command: command.to_owned(),
            inputs: Vec::new(),
            result: Vec::new(),
            status: Status::Ok,
            error_kind: None,
        }
    }

    pub fn error(command: &str, inputs: Vec<(String, String)>, err: &Error) -> OutputRecord {
        OutputRecord {
            command: command.to_owned(),
            inputs,
            result: vec![("message".into(), err.to_string())],
            status: Status::Error,
            error_kind: Some(err.kind().to_owned()),
        }
    }

    pub fn input(mut self, key: &str, value: impl Display) -> Self {
        self.inputs.push((key.to_owned(), value.to_string()));
        self
    }

    pub fn field(mut self, key: &str, value: impl Display) -> Self {
        self.result.push((key.to_owned(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.result
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> Value {
        let map = |pairs: &[(String, String)]| -> Value {
            Value::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        obj.insert("inputs".into(), map(&self.inputs));
        obj.insert("result".into(), map(&self.result));
        obj.insert("status".into(), Value::String(self.status.as_str().into()));
        obj.insert(
            "error_kind".into(),
            self.error_kind.clone().map_or(Value::Null, Value::String),
        );
        Value::Object(obj)
    }

    /// Column names: `command`, `status`, `error_kind`, then `inputs.*` and
    /// `result.*` in record order.
    pub fn tsv_header(&self) -> Vec<String> {
        let mut cols = vec!["command".to_owned(), "status".into(), "error_kind".into()];
        cols.extend(self.inputs.iter().map(|(k, _)| format!("inputs.{k}")));
        cols.extend(self.result.iter().map(|(k, _)| format!("result.{k}")));
        cols
    }

    pub fn tsv_row(&self) -> Vec<String> {
        let mut cells = vec![
            self.command.clone(),
            self.status.as_str().into(),
            self.error_kind.clone().unwrap_or_default(),
        ];
        cells.extend(self.inputs.iter().map(|(_, v)| tsv_escape(v)));
        cells.extend(self.result.iter().map(|(_, v)| tsv_escape(v)));
        cells
    }
}

fn tsv_escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('\t', "\\t")
        .replace('\n', "\\n")
}

/// Writes records in order. Under TSV a header row precedes the first record
/// and every record whose columns differ from the previous one.
pub fn write_records(
    out: &mut impl Write,
    records: &[OutputRecord],
    format: Format,
) -> io::Result<()> {
    let mut header: Option<Vec<String>> = None;
    for record in records {
        match format {
            Format::Json => writeln!(out, "{}", record.to_json())?,
            Format::Tsv => {
                let cols = record.tsv_header();
                if header.as_ref() != Some(&cols) {
                    writeln!(out, "{}", cols.join("\t"))?;
                    header = Some(cols);
                }
                writeln!(out, "{}", record.tsv_row().join("\t"))?;
            }
        }
    }
    Ok(())
}

/// Word rendering shared by every command: `ε` for the empty word, and past
/// [`ELIDE_AFTER`] letters the first 60 and last 60 letters around `…`
/// unless `full` is set. Callers always emit the length separately.
pub fn render_word(w: &Word, full: bool) -> String {
    if w.is_empty() {
        return "ε".into();
    }
    let s = w.to_string();
    if full || w.len() <= ELIDE_AFTER {
        s
    } else {
        let half = ELIDE_AFTER / 2;
        format!("{}…{}", &s[..half], &s[s.len() - half..])
    }
}
