//! Fans, classes, polynomials, ideals and points from files and literals.

use crate::Failure;
use coxhodge::grading::ClassGroup;
use coxhodge::{rational, DivisorClass, Fan, GradedPolynomial, RawFan, ToricVariety};
use num_rational::BigRational;
use std::fs;
use std::path::Path;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new("Io", format!("{}: {e}", path.display())))
}

pub fn load_fan(path: &Path) -> Result<Fan, Failure> {
    let raw: RawFan = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::new("InvalidFanFile", format!("{}: {e}", path.display())))?;
    Ok(Fan::from_raw(raw)?)
}

pub fn load_variety(path: &Path) -> Result<ToricVariety, Failure> {
    Ok(ToricVariety::new(load_fan(path)?)?)
}

fn int_list(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::new("MalformedClass", format!("bad {what} entry {t:?}"))))
        .collect()
}

/// `{"free": [..], "torsion": [..]}`, or the compact `a,b` / `a,b|t`.
pub fn parse_class(cl: &ClassGroup, text: &str) -> Result<DivisorClass, Failure> {
    let text = text.trim();
    let c = if text.starts_with('{') {
        serde_json::from_str::<DivisorClass>(text).map_err(|e| Failure::new("MalformedClass", format!("{text}: {e}")))?
    } else {
        let (free, torsion) = text.split_once('|').unwrap_or((text, ""));
        DivisorClass::new(int_list(free, "free")?, int_list(torsion, "torsion")?)
    };
    Ok(cl.normalize(c)?)
}

/// Nonblank, non-comment lines of the given files, in order.
pub fn read_lines(paths: &[impl AsRef<Path>]) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    for p in paths {
        for line in read(p.as_ref())?.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                out.push(line.to_string());
            }
        }
    }
    Ok(out)
}

pub fn load_polys(x: &ToricVariety, paths: &[impl AsRef<Path>]) -> Result<Vec<GradedPolynomial>, Failure> {
    let lines = read_lines(paths)?;
    if lines.is_empty() {
        return Err(Failure::new("NoPolynomials", "no polynomial found in the input files"));
    }
    lines.iter().map(|l| x.parse(l).map_err(Failure::from)).collect()
}

/// A JSON list of strings, or one generator per line.
pub fn load_ideal_texts(path: &Path) -> Result<Vec<String>, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('[') {
        serde_json::from_str(&text).map_err(|e| Failure::new("InvalidIdealFile", format!("{}: {e}", path.display())))
    } else {
        read_lines(&[path])
    }
}

pub fn parse_point(text: &str) -> Result<Vec<BigRational>, Failure> {
    text.split(',')
        .map(|t| rational::parse(t).ok_or_else(|| Failure::new("InvalidArgument", format!("bad coordinate {t:?}"))))
        .collect()
}

pub fn parse_rational(text: &str) -> Result<BigRational, Failure> {
    rational::parse(text).ok_or_else(|| Failure::new("InvalidArgument", format!("bad rational {text:?}")))
}

pub fn parse_ints(text: &str) -> Result<Vec<i64>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure::new("InvalidArgument", format!("bad integer {t:?}"))))
        .collect()
}
