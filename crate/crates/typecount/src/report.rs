//! Flat report tables written as CSV or TSV.

use std::io::Write;

use crate::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Index of a named column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    pub fn write<W: Write>(&self, out: W, format: Format) -> CliResult<()> {
        let delim = match format {
            Format::Csv => b',',
            Format::Tsv => b'\t',
        };
        let mut w = csv::WriterBuilder::new().delimiter(delim).from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        let mut buf = Vec::new();
        self.write(&mut buf, format)?;
        Ok(String::from_utf8(buf).expect("reports are UTF-8"))
    }
}

/// Fixed-precision rendering for floating columns.
pub fn float(x: f64) -> String {
    let s = format!("{x:.9}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let mut t = Table::new(["a", "b"]);
        t.push(["1", "x, y"]);
        assert_eq!(t.render(Format::Csv).unwrap(), "a,b\n1,\"x, y\"\n");
        assert_eq!(t.render(Format::Tsv).unwrap(), "a\tb\n1\tx, y\n");
        assert_eq!(t.column("b"), Some(1));
    }

    #[test]
    fn negative_zero() {
        assert_eq!(float(-1e-12), "0.000000000");
        assert_eq!(float(-0.5), "-0.500000000");
    }
}
