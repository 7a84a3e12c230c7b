//! JSON-lines and CSV emission.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Values within this distance of an integer are printed as that integer.
const SNAP: f64 = 1e-12;

fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP * r.abs().max(1.0) {
        r + 0.0
    } else {
        x
    }
}

/// A named scalar; always a JSON float.
pub fn num(x: f64) -> Value {
    Number::from_f64(snap(x)).map(Value::Number).unwrap_or(Value::Null)
}

/// Coordinates; integers when every entry is integral.
pub fn coords(xs: &[f64]) -> Value {
    let s: Vec<f64> = xs.iter().map(|&x| snap(x)).collect();
    if s.iter().all(|x| x.fract() == 0.0 && x.abs() < 1e15) {
        Value::Array(s.iter().map(|&x| Value::from(x as i64)).collect())
    } else {
        Value::Array(s.iter().map(|&x| num(x)).collect())
    }
}

pub struct Sink<W: Write> {
    format: Format,
    out: W,
    header: Option<Vec<String>>,
}

impl<W: Write> Sink<W> {
    pub fn new(format: Format, out: W) -> Self {
        Sink { format, out, header: None }
    }

    pub fn emit(&mut self, record: Map<String, Value>) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, &Value::Object(record)).map_err(|e| CliError::Io(e.to_string()))?;
                writeln!(self.out)?;
            }
            Format::Csv => {
                let mut cols = Vec::new();
                flatten("", &Value::Object(record), &mut cols);
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
                if self.header.is_none() {
                    let names: Vec<String> = cols.iter().map(|(k, _)| k.clone()).collect();
                    w.write_record(&names).map_err(|e| CliError::Io(e.to_string()))?;
                    self.header = Some(names);
                }
                w.write_record(cols.iter().map(|(_, v)| v)).map_err(|e| CliError::Io(e.to_string()))?;
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                self.out.write_all(&bytes)?;
            }
        }
        Ok(())
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}_{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_texture() {
        assert_eq!(coords(&[0.0, 1.0 - 1e-16, -5.0]).to_string(), "[0,1,-5]");
        assert_eq!(coords(&[0.5, 1.0]).to_string(), "[0.5,1.0]");
        assert_eq!(num(3.9999999999999996).to_string(), "4.0");
        assert_eq!(coords(&[-0.0]).to_string(), "[0]");
    }

    #[test]
    fn csv_rows() {
        let mut sink = Sink::new(Format::Csv, Vec::new());
        let mut m = Map::new();
        m.insert("theta".into(), num(0.5));
        m.insert("point".into(), coords(&[1.0, 2.0]));
        sink.emit(m.clone()).unwrap();
        sink.emit(m).unwrap();
        assert_eq!(String::from_utf8(sink.out).unwrap(), "theta,point_0,point_1\n0.5,1,2\n0.5,1,2\n");
    }
}
