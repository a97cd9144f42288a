//! Output records and their three renderings.
//!
//! Every record carries `id` (0-based position in the input), `line` (where
//! the record starts) and the echoed configuration. `elapsed_us` is present
//! only without `--deterministic`, so deterministic runs are byte-identical.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
    Csv,
}

/// Why a record failed; ordered by exit-code precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Other,
    Parse,
    Cap,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Other => "other",
            ErrorKind::Parse => "parse",
            ErrorKind::Cap => "cap",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Other => 1,
            ErrorKind::Parse => 2,
            ErrorKind::Cap => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordError {
    pub error_kind: ErrorKind,
    pub error: String,
}

impl RecordError {
    pub fn new(error_kind: ErrorKind, error: impl ToString) -> Self {
        Self { error_kind, error: error.to_string() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Echo {
    pub seed: u64,
    pub deterministic: bool,
    pub oracle: bool,
    pub cap_override: bool,
}

/// Command-specific payload of a record.
pub trait Report: Serialize + Send {
    const CSV_HEADER: &'static [&'static str];
    fn csv_fields(&self) -> Vec<String>;
    fn text(&self) -> String;
}

#[derive(Serialize)]
#[serde(untagged)]
enum Body<'a, R> {
    Ok(&'a R),
    Err(&'a RecordError),
}

#[derive(Serialize)]
struct Envelope<'a, R> {
    id: usize,
    line: usize,
    #[serde(flatten)]
    body: Body<'a, R>,
    config: &'a Echo,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_us: Option<u128>,
}

enum Sink<W: Write> {
    Plain(W),
    Csv(Box<csv::Writer<W>>),
}

pub struct Emitter<W: Write> {
    format: OutFormat,
    sink: Sink<W>,
    echo: Echo,
}

const CSV_TAIL: &[&str] = &["error_kind", "error", "seed", "deterministic", "oracle", "elapsed_us"];

impl<W: Write> Emitter<W> {
    pub fn new(format: OutFormat, out: W, echo: Echo) -> Self {
        let sink = match format {
            OutFormat::Csv => Sink::Csv(Box::new(csv::Writer::from_writer(out))),
            _ => Sink::Plain(out),
        };
        Self { format, sink, echo }
    }

    pub fn header<R: Report>(&mut self) -> io::Result<()> {
        if let Sink::Csv(w) = &mut self.sink {
            let head: Vec<&str> = ["id", "line"].iter().chain(R::CSV_HEADER).chain(CSV_TAIL).copied().collect();
            w.write_record(head)?;
        }
        Ok(())
    }

    pub fn emit<R: Report>(
        &mut self,
        id: usize,
        line: usize,
        result: &Result<R, RecordError>,
        elapsed_us: Option<u128>,
    ) -> io::Result<()> {
        match (&mut self.sink, self.format) {
            (Sink::Plain(out), OutFormat::Json) => {
                let body = match result {
                    Ok(r) => Body::Ok(r),
                    Err(e) => Body::Err(e),
                };
                let env = Envelope { id, line, body, config: &self.echo, elapsed_us };
                serde_json::to_writer(&mut *out, &env)?;
                writeln!(out)
            }
            (Sink::Plain(out), _) => match result {
                Ok(r) => writeln!(out, "#{id} {}", r.text()),
                Err(e) => writeln!(out, "#{id} line {line}: {} error: {}", e.error_kind.as_str(), e.error),
            },
            (Sink::Csv(w), _) => {
                let mut row = vec![id.to_string(), line.to_string()];
                let (kind, msg) = match result {
                    Ok(r) => {
                        row.extend(r.csv_fields());
                        ("", String::new())
                    }
                    Err(e) => {
                        row.extend(R::CSV_HEADER.iter().map(|_| String::new()));
                        (e.error_kind.as_str(), e.error.clone())
                    }
                };
                row.extend([
                    kind.to_string(),
                    msg,
                    self.echo.seed.to_string(),
                    self.echo.deterministic.to_string(),
                    self.echo.oracle.to_string(),
                    elapsed_us.map(|t| t.to_string()).unwrap_or_default(),
                ]);
                w.write_record(row)?;
                Ok(())
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match &mut self.sink {
            Sink::Plain(out) => out.flush(),
            Sink::Csv(w) => w.flush(),
        }
    }
}

/// Space-separated list, used inside single CSV fields.
pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
