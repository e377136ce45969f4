//! Sequence writers. All numbers are written in full decimal with no
//! separators, so identical inputs give byte-identical files.

use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// OEIS b-file: one "<n> <a(n)>" line per term, starting at n = 0.
    Bfile,
    Json,
    Csv,
}

/// Which pipeline produced a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Product,
    Classes,
    Brute,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Product => "product",
            Method::Classes => "classes",
            Method::Brute => "brute",
        }
    }
}

/// Writes `values[n]` for `n = 0, 1, ...`. With `meta`, JSON output is an
/// object carrying the order and method tag; otherwise a bare array.
pub fn write_sequence<W: Write + ?Sized>(
    out: &mut W,
    format: OutputFormat,
    method: Method,
    values: &[BigInt],
    meta: bool,
) -> io::Result<()> {
    match format {
        OutputFormat::Bfile => {
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n} {v}")?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "a(n)"])?;
            for (n, v) in values.iter().enumerate() {
                w.write_record([n.to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let array = Value::Array(
                values
                    .iter()
                    .map(|v| Value::Number(Number::from_str(&v.to_string()).expect("decimal integer")))
                    .collect(),
            );
            let value = if meta {
                let mut obj = Map::new();
                obj.insert("method".into(), Value::from(method.tag()));
                obj.insert("order".into(), Value::from(values.len().saturating_sub(1)));
                obj.insert("coefficients".into(), array);
                Value::Object(obj)
            } else {
                array
            };
            serde_json::to_writer(&mut *out, &value)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
