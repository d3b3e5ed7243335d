//! Line-oriented run records: `key=value` lines in insertion order, then an
//! optional comma-separated table introduced by `table=`.

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunRecord {
    fields: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// Shortest round-trip decimal form, so equal bits print identically.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn nums(xs: &[f64], sep: &str) -> String {
    xs.iter().map(|x| num(*x)).collect::<Vec<_>>().join(sep)
}

impl RunRecord {
    pub fn new(command: &str) -> Self {
        let mut r = RunRecord::default();
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn set_num(&mut self, key: impl Into<String>, value: f64) {
        self.set(key, num(value));
    }

    pub fn header(&mut self, columns: &[&str]) {
        self.header = columns.iter().map(|c| c.to_string()).collect();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }
}

impl fmt::Display for RunRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}={v}")?;
        }
        if !self.header.is_empty() {
            writeln!(f, "table={}", self.header.join(","))?;
            for row in &self.rows {
                writeln!(f, "{}", row.join(","))?;
            }
        }
        Ok(())
    }
}
