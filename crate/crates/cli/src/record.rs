use std::fmt::Write as _;

use balance_forge_core::pellsolver::{Sign, Solution};
use balance_forge_core::verifier::{Status, VerificationReport};
use balance_forge_core::BigInt;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Jsonl,
}

/// One output line. Integers travel as decimal strings so that JSON readers
/// without big-number support lose nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase", deny_unknown_fields)]
pub enum Record {
    Gen {
        kind: String,
        n: u64,
        value: String,
    },
    Solve {
        x: String,
        y: String,
        representative: usize,
        exponent: i64,
        sign: String,
    },
    Verify {
        id: String,
        from: u64,
        to: u64,
        status: String,
        candidate: bool,
        counterexample: Option<CounterexampleRecord>,
        note: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleRecord {
    pub index: u64,
    pub route: String,
    pub lhs: String,
    pub rhs: String,
}

impl Record {
    pub fn term(kind: &str, n: u64, value: &BigInt) -> Self {
        Record::Gen {
            kind: kind.to_string(),
            n,
            value: value.to_string(),
        }
    }

    pub fn solution(s: &Solution) -> Self {
        Record::Solve {
            x: s.x.to_string(),
            y: s.y.to_string(),
            representative: s.representative,
            exponent: s.exponent,
            sign: match s.sign {
                Sign::Plus => "+",
                Sign::Minus => "-",
            }
            .to_string(),
        }
    }

    pub fn report(r: &VerificationReport) -> Self {
        Record::Verify {
            id: r.id.clone(),
            from: r.range.0,
            to: r.range.1,
            status: match r.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            }
            .to_string(),
            candidate: r.candidate,
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleRecord {
                index: c.index,
                route: c.route.to_string(),
                lhs: c.lhs.clone(),
                rhs: c.rhs.clone(),
            }),
            note: r.note.clone(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Jsonl => serde_json::to_string(self).expect("records serialize"),
            Format::Plain => self.plain(),
        }
    }

    fn plain(&self) -> String {
        match self {
            Record::Gen { value, .. } => value.clone(),
            Record::Solve { x, y, .. } => format!("({x},{y})"),
            Record::Verify {
                id,
                from,
                to,
                status,
                candidate,
                counterexample,
                note,
            } => {
                let mut line = format!("{status}\t{id}\t{from}..={to}");
                if *candidate {
                    line.push_str("\tcandidate");
                }
                if let Some(c) = counterexample {
                    let _ = write!(
                        line,
                        "\tn={} route={} lhs={} rhs={}",
                        c.index, c.route, c.lhs, c.rhs
                    );
                }
                if let Some(note) = note {
                    let _ = write!(line, "\t# {note}");
                }
                line
            }
        }
    }
}
