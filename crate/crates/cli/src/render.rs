use serde::Serialize;
use serde_json::Value;

use pathsig::cumulants::SymSeries;
use pathsig::lie::LiePolynomial;
use pathsig::{Scalar, TensorSeries};

use crate::Format;

/// A result in both output formats.
pub struct Rendered {
    json: Value,
    pretty: String,
}

impl Rendered {
    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.json.to_string(),
            Format::Pretty => self.pretty.clone(),
        }
    }

    pub fn json(json: Value) -> Self {
        let pretty = serde_json::to_string_pretty(&json).expect("plain JSON value");
        Rendered { json, pretty }
    }

    pub fn value(x: &impl Serialize) -> Self {
        Self::json(serde_json::to_value(x).expect("in-memory serialization cannot fail"))
    }

    pub fn tensor<S: Scalar>(t: &TensorSeries<S>) -> Self {
        let rows = t.terms().map(|(w, c)| (format!("({w})"), c.render()));
        Self::with_table(t, header(t.dim(), t.level()), rows)
    }

    /// Coordinates are printed against the bracketed basis, `[1,[1,2]]`.
    pub fn lie<S: Scalar>(l: &LiePolynomial<S>) -> Self {
        let rows = pathsig::io::bracketed_coeffs(l).into_iter();
        Self::with_table(l, header(l.dim(), l.level()), rows)
    }

    pub fn sym<S: Scalar>(y: &SymSeries<S>) -> Self {
        let rows = y.terms().map(|(w, c)| (format!("{{{w}}}"), c.render()));
        Self::with_table(y, header(y.dim(), y.level()), rows)
    }

    fn with_table(
        x: &impl Serialize,
        header: String,
        rows: impl Iterator<Item = (String, String)>,
    ) -> Self {
        let rows: Vec<(String, String)> = rows.collect();
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut pretty = header;
        for (k, c) in &rows {
            pretty.push_str(&format!("\n  {k:<width$}  {c}"));
        }
        if rows.is_empty() {
            pretty.push_str("\n  0");
        }
        Rendered {
            json: serde_json::to_value(x).expect("in-memory serialization cannot fail"),
            pretty,
        }
    }
}

fn header(dim: usize, level: usize) -> String {
    format!("dim {dim}, level {level}")
}
