//! Parsers for the textual argument formats.

use algebrae_core::{AlgebraId, Scalar};

use crate::CliError;

fn bad(what: &str, text: &str) -> CliError {
    CliError::Parse(format!("cannot parse {what} from {text:?}"))
}

/// A real number, optionally written with `pi`: `1.5`, `pi`, `-pi/2`, `3*pi/4`, `0.5pi`.
pub fn real(text: &str) -> Result<f64, CliError> {
    let t = text.trim();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let Some(pos) = t.find("pi") else { return Err(bad("a number", text)) };
    let (head, tail) = (t[..pos].trim_end_matches('*'), &t[pos + 2..]);
    let k = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad("a number", text))?,
    };
    let d = match tail {
        "" => 1.0,
        s => s.strip_prefix('/').and_then(|s| s.parse::<f64>().ok()).ok_or_else(|| bad("a number", text))?,
    };
    Ok(k * core::f64::consts::PI / d)
}

/// Comma-separated reals.
pub fn list(text: &str) -> Result<Vec<f64>, CliError> {
    if text.trim().is_empty() {
        return Err(bad("a list", text));
    }
    text.split(',').map(real).collect()
}

pub fn list_of_len(text: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let v = list(text)?;
    if v.len() != n {
        return Err(CliError::Parse(format!("expected {n} numbers, found {} in {text:?}", v.len())));
    }
    Ok(v)
}

pub fn vec3(text: &str) -> Result<[f64; 3], CliError> {
    let v = list_of_len(text, 3)?;
    Ok([v[0], v[1], v[2]])
}

/// `START,END`.
pub fn range(text: &str) -> Result<(f64, f64), CliError> {
    let v = list_of_len(text, 2)?;
    Ok((v[0], v[1]))
}

/// Signature string over `+`/`-`.
pub fn signature(text: &str) -> Result<Vec<f64>, CliError> {
    text.chars()
        .map(|c| match c {
            '+' => Ok(1.0),
            '-' => Ok(-1.0),
            _ => Err(bad("a signature", text)),
        })
        .collect()
}

pub fn algebra(text: &str) -> Result<AlgebraId, CliError> {
    AlgebraId::parse(text).ok_or_else(|| bad("an algebra tag", text))
}

/// Complex literal: `2`, `-i`, `3i`, `1+2i`, `0.5-0.25i`.
pub fn complex(text: &str) -> Result<(f64, f64), CliError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad("a complex number", text));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok((real(&t)?, 0.0));
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (real(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => real(s).map_err(|_| bad("a complex number", text))?,
    };
    Ok((re, im))
}

/// Entries written as parenthesised pairs: `(x,y),(z,w)`.
pub fn pairs(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| bad("a pair list", text))?;
        let close = inner.find(')').ok_or_else(|| bad("a pair list", text))?;
        let (x, y) = inner[..close].split_once(',').ok_or_else(|| bad("a pair list", text))?;
        out.push((x.trim().to_string(), y.trim().to_string()));
        rest = inner[close + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    if out.is_empty() {
        return Err(bad("a pair list", text));
    }
    Ok(out)
}

/// Split-complex entries as `(a,a')` pairs in the idempotent coordinates.
pub fn cs_entries(text: &str) -> Result<Vec<Scalar>, CliError> {
    pairs(text)?.iter().map(|(a, b)| Ok(Scalar::cs_join(real(a)?, real(b)?))).collect()
}

/// ℂ×ℂ entries as `(a,b)` pairs of complex literals.
pub fn cxc_entries(text: &str) -> Result<Vec<Scalar>, CliError> {
    pairs(text)?
        .iter()
        .map(|(a, b)| {
            let (ar, ai) = complex(a)?;
            let (br, bi) = complex(b)?;
            Ok(Scalar::cxc(Scalar::complex(ar, ai), Scalar::complex(br, bi)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_with_pi() {
        assert_eq!(real("2.5").unwrap(), 2.5);
        assert_eq!(real("pi/2").unwrap(), core::f64::consts::FRAC_PI_2);
        assert_eq!(real("-pi").unwrap(), -core::f64::consts::PI);
        assert_eq!(real("3*pi/4").unwrap(), 3.0 * core::f64::consts::PI / 4.0);
        assert!(real("two").is_err());
    }

    #[test]
    fn complex_literals() {
        assert_eq!(complex("i").unwrap(), (0.0, 1.0));
        assert_eq!(complex("-i").unwrap(), (0.0, -1.0));
        assert_eq!(complex("1+2i").unwrap(), (1.0, 2.0));
        assert_eq!(complex("1e-3-4i").unwrap(), (1e-3, -4.0));
        assert_eq!(complex("3").unwrap(), (3.0, 0.0));
    }

    #[test]
    fn pair_lists() {
        let p = pairs("(1,1),(0, 0)").unwrap();
        assert_eq!(p, vec![("1".into(), "1".into()), ("0".into(), "0".into())]);
        assert!(pairs("(1,1").is_err());
    }
}
