use super::Candidate;
use crate::error::FeasibilityError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

const GOLDEN: &str = include_str!("../../data/feasible_n100.tsv");

pub const TABLE_HEADER: &str = "# n\ttheta0\ttheta1\tm1\ttheta2\tm2\tn1\tn2\tk1\tk2\tk12\texistence\tcomment";

/// Number of graphs with given parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Existence {
    Exactly(u32),
    AtLeast(u32),
    Unknown,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Existence::Exactly(k) => write!(f, "{k}"),
            Existence::AtLeast(k) => write!(f, ">={k}"),
            Existence::Unknown => f.write_str("?"),
        }
    }
}

impl FromStr for Existence {
    type Err = FeasibilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FeasibilityError::OutOfScope(format!("existence value {s:?}"));
        if s == "?" {
            Ok(Existence::Unknown)
        } else if let Some(k) = s.strip_prefix(">=") {
            k.parse().map(Existence::AtLeast).map_err(|_| bad())
        } else {
            s.parse().map(Existence::Exactly).map_err(|_| bad())
        }
    }
}

/// One line of the feasibility table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableRow {
    pub n: i64,
    pub theta0: i64,
    pub theta1: i64,
    pub m1: i64,
    pub theta2: i64,
    pub m2: i64,
    pub n1: i64,
    pub n2: i64,
    pub k1: i64,
    pub k2: i64,
    pub k12: i64,
    pub existence: Existence,
    pub comment: String,
}

impl TableRow {
    pub fn from_candidate(c: &Candidate, existence: Existence, comment: impl Into<String>) -> Self {
        TableRow {
            n: c.n,
            theta0: c.theta0,
            theta1: c.theta1,
            m1: c.m1,
            theta2: c.theta2,
            m2: c.m2,
            n1: c.n1,
            n2: c.n2,
            k1: c.k1,
            k2: c.k2,
            k12: c.k12(),
            existence,
            comment: comment.into(),
        }
    }

    /// The numeric columns, for comparison with candidates.
    pub fn numbers(&self) -> [i64; 11] {
        [
            self.n, self.theta0, self.theta1, self.m1, self.theta2, self.m2, self.n1, self.n2, self.k1, self.k2, self.k12,
        ]
    }

    pub fn matches(&self, c: &Candidate) -> bool {
        self.numbers() == TableRow::from_candidate(c, Existence::Unknown, "").numbers()
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.numbers() {
            write!(f, "{x}\t")?;
        }
        write!(f, "{}\t{}", self.existence, self.comment)
    }
}

/// Tab-separated table with a header line, one row per line.
pub fn format_table(rows: &[TableRow]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_table_rows(text: &str) -> Result<Vec<TableRow>, FeasibilityError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let bad = |what: &str| FeasibilityError::OutOfScope(format!("line {}: {what}", lineno + 1));
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 13 {
            return Err(bad("expected 13 columns"));
        }
        let mut v = [0i64; 11];
        for (slot, f) in v.iter_mut().zip(&fields) {
            *slot = f.trim().parse().map_err(|_| bad("not an integer"))?;
        }
        let [n, theta0, theta1, m1, theta2, m2, n1, n2, k1, k2, k12] = v;
        rows.push(TableRow {
            n,
            theta0,
            theta1,
            m1,
            theta2,
            m2,
            n1,
            n2,
            k1,
            k2,
            k12,
            existence: fields[11].parse()?,
            comment: fields[12].to_string(),
        });
    }
    Ok(rows)
}

/// The bundled reference table for n ≤ 100.
pub fn golden_rows() -> Vec<TableRow> {
    parse_table_rows(GOLDEN).expect("bundled table parses")
}

pub fn golden_text() -> &'static str {
    GOLDEN
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_round_trip() {
        let rows = golden_rows();
        assert_eq!(rows.len(), 58);
        assert_eq!(format_table(&rows), GOLDEN);
    }

    #[test]
    fn existence_parse() {
        for s in ["0", "78", ">=21", "?"] {
            assert_eq!(s.parse::<Existence>().unwrap().to_string(), s);
        }
        assert!("x".parse::<Existence>().is_err());
    }
}
