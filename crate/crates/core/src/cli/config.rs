//! Run configuration and the parsing of override syntax.

use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;

use crate::catalog::{Catalog, Point};
use crate::error::{Error, Result};
use crate::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Which registry entries a command runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

/// A validated invocation of `verify` or `sweep`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub selection: Selection,
    pub tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub params: Option<Point>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
    pub timestamp: bool,
}

impl RunConfig {
    /// The ids to run, in registry order. Unknown ids are rejected here,
    /// before anything is evaluated.
    pub fn resolve_ids(&self, catalog: &Catalog) -> Result<Vec<&'static str>> {
        let known = catalog.ids();
        match &self.selection {
            Selection::All => Ok(known),
            Selection::Ids(wanted) => {
                if let Some(unknown) = wanted.iter().find(|id| !known.contains(&id.as_str())) {
                    return Err(Error::Usage(format!(
                        "unknown id '{unknown}' (see `hyperharmonic list`)"
                    )));
                }
                Ok(known.into_iter().filter(|id| wanted.iter().any(|w| w == id)).collect())
            }
        }
    }
}

/// A swept parameter: `name=lo:hi:steps`.
#[derive(Debug, Clone, PartialEq)]
pub struct Range {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Range {
    /// `steps` evenly spaced values from `lo` to `hi` inclusive, rounded
    /// to 15 significant digits so that decimal grids stay decimal.
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / last)
            .map(|x| format!("{x:.14e}").parse().expect("formatted float parses"))
            .collect()
    }
}

impl FromStr for Range {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("range '{text}' is not of the form name=lo:hi:steps"));
        let (name, spec) = text.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = spec.split(':').collect();
        let [lo, hi, steps] = parts[..] else { return Err(bad()) };
        let name = parse_name(name)?;
        let lo = parse_real(lo)?;
        let hi = parse_real(hi)?;
        let steps: usize = steps.trim().parse().map_err(|_| bad())?;
        if steps == 0 {
            return Err(Error::Usage(format!("range '{text}' has zero steps")));
        }
        Ok(Self { name, lo, hi, steps })
    }
}

fn parse_name(name: &str) -> Result<String> {
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Usage(format!("'{name}' is not a parameter name")));
    }
    Ok(name.to_owned())
}

fn parse_real(text: &str) -> Result<f64> {
    match text.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::Usage(format!("'{text}' is not a finite number"))),
    }
}

/// A real or complex literal: `0.25`, `-1e-3`, `0.3+0.1i`, `2i`.
pub fn parse_complex(text: &str) -> Result<ComplexValue> {
    match ComplexValue::from_str(text.trim()) {
        Ok(z) if z.re.is_finite() && z.im.is_finite() => Ok(z),
        _ => Err(Error::Usage(format!("'{text}' is not a finite real or complex number"))),
    }
}

/// `k=v,k=v`; later assignments to the same name win.
pub fn parse_params(text: &str) -> Result<Point> {
    let mut point = Point::new();
    for assignment in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("parameter '{assignment}' is not of the form name=value")))?;
        point.set(&parse_name(name)?, parse_complex(value)?);
    }
    if point.is_empty() {
        return Err(Error::Usage("--params needs at least one name=value".into()));
    }
    Ok(point)
}

/// Positive finite tolerance.
pub fn validate_tol(tol: f64) -> Result<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Error::Usage(format!(
            "--tol must be a positive finite number, got {tol}"
        )))
    }
}

/// The seed in effect: the environment variable wins over the flag.
pub fn effective_seed(flag: u64, env: Option<&str>) -> Result<u64> {
    match env {
        Some(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("HYPERHARMONIC_SEED='{text}' is not an unsigned integer"))),
        None => Ok(flag),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse_real_and_complex() {
        let p = parse_params("a=0.25,b=0.3+0.1i,c=-1e-3,d=2i").unwrap();
        assert_eq!(p.get("a"), Some(ComplexValue::new(0.25, 0.0)));
        assert_eq!(p.get("b"), Some(ComplexValue::new(0.3, 0.1)));
        assert_eq!(p.get("c"), Some(ComplexValue::new(-1e-3, 0.0)));
        assert_eq!(p.get("d"), Some(ComplexValue::new(0.0, 2.0)));
        assert_eq!(
            parse_params("a=1,a=2").unwrap().get("a"),
            Some(ComplexValue::new(2.0, 0.0))
        );
    }

    #[test]
    fn bad_params_are_usage_errors() {
        for text in ["a", "a=", "=1", "a=inf", "a=NaN", "a=x", ""] {
            assert!(matches!(parse_params(text), Err(Error::Usage(_))), "{text}");
        }
    }

    #[test]
    fn ranges() {
        let r: Range = "a=0.1:0.9:9".parse().unwrap();
        let v = r.values();
        assert_eq!(v.len(), 9);
        assert_eq!(v[0], 0.1);
        assert_eq!(v[8], 0.9);
        assert_eq!(v[2], 0.3);
        assert_eq!(v[6], 0.7);
        assert_eq!("k=0.3:0.9:1".parse::<Range>().unwrap().values(), vec![0.3]);
        for text in ["a=0.1:0.9:0", "a=0.1:0.9", "a0.1:0.9:3", "a=x:1:3", "a=0:1:-2"] {
            assert!(matches!(text.parse::<Range>(), Err(Error::Usage(_))), "{text}");
        }
    }

    #[test]
    fn environment_seed_wins() {
        assert_eq!(effective_seed(5, None).unwrap(), 5);
        assert_eq!(effective_seed(5, Some("9")).unwrap(), 9);
        assert!(effective_seed(5, Some("nine")).is_err());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let catalog = Catalog::standard();
        let mut config = RunConfig {
            selection: Selection::Ids(vec!["EX-2".into(), "EX-1".into()]),
            tol: None,
            max_terms: None,
            params: None,
            format: Format::Json,
            out: None,
            jobs: 1,
            seed: 0,
            timestamp: false,
        };
        assert_eq!(config.resolve_ids(&catalog).unwrap(), vec!["EX-1", "EX-2"]);
        config.selection = Selection::Ids(vec!["EX-1".into(), "NOPE".into()]);
        assert!(matches!(config.resolve_ids(&catalog), Err(Error::Usage(_))));
        config.selection = Selection::All;
        assert_eq!(config.resolve_ids(&catalog).unwrap().len(), 29);
    }
}
