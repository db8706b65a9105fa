//! Report rendering: JSON, CSV and text tables.

use serde_json::{json, Map, Value};

use super::json::{format_g17, number, render};
use crate::catalog::{Listing, Point, VerificationResult};
use crate::error::{Error, Result};
use crate::ComplexValue;

/// One evaluated (id, point) task.
#[derive(Debug, Clone)]
pub struct Row {
    pub id: &'static str,
    pub point: Point,
    pub outcome: Result<VerificationResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Row {
    pub fn status(&self) -> Status {
        match &self.outcome {
            Ok(r) if r.pass => Status::Pass,
            Ok(_) => Status::Fail,
            Err(_) => Status::Error,
        }
    }
}

/// Pass/fail/error counts over a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl Tally {
    pub fn of(rows: &[Row]) -> Self {
        rows.iter().fold(Self::default(), |mut t, row| {
            match row.status() {
                Status::Pass => t.passed += 1,
                Status::Fail => t.failed += 1,
                Status::Error => t.errors += 1,
            }
            t
        })
    }

    /// 3 if anything errored, else 2 if anything failed, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            3
        } else if self.failed > 0 {
            2
        } else {
            0
        }
    }
}

/// Header data of a JSON report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunInfo {
    pub seed: u64,
    pub timestamp: Option<u64>,
    pub tol_default: Option<f64>,
}

fn pair(z: ComplexValue) -> Value {
    json!([number(z.re), number(z.im)])
}

fn point_json(point: &Point) -> Value {
    Value::Object(
        point
            .iter()
            .map(|(name, z)| (name.to_owned(), pair(z)))
            .collect::<Map<_, _>>(),
    )
}

fn row_json(row: &Row) -> Value {
    let base = json!({"id": row.id, "point": point_json(&row.point)});
    let mut map = match base {
        Value::Object(map) => map,
        _ => unreachable!(),
    };
    let fields = match &row.outcome {
        Ok(r) => json!({
            "abs_err": number(r.abs_err),
            "error": null,
            "lhs": pair(r.lhs),
            "method": r.method.as_str(),
            "note": r.note,
            "pass": r.pass,
            "rel_err": number(r.rel_err),
            "rhs": pair(r.rhs),
            "terms_used": r.terms_used,
            "tol": number(r.tol),
        }),
        Err(e) => json!({
            "abs_err": null,
            "error": e.to_string(),
            "lhs": null,
            "method": null,
            "note": null,
            "pass": false,
            "rel_err": null,
            "rhs": null,
            "terms_used": error_terms(e),
            "tol": null,
        }),
    };
    if let Value::Object(extra) = fields {
        map.extend(extra);
    }
    Value::Object(map)
}

fn error_terms(e: &Error) -> Value {
    match e {
        Error::NonConvergent { terms, .. } => json!(terms),
        _ => Value::Null,
    }
}

/// The JSON verification report.
pub fn json_report(rows: &[Row], run: &RunInfo) -> String {
    let results: Vec<Value> = rows.iter().map(row_json).collect();
    render(&json!({
        "results": results,
        "run": {
            "seed": run.seed,
            "timestamp": run.timestamp,
            "tol_default": run.tol_default.map_or(Value::Null, number),
        },
    }))
}

fn g(x: f64) -> String {
    format_g17(x)
}

fn csv_text(writer: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = writer.into_inner().map_err(|e| Error::Evaluation(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Evaluation(e.to_string()))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Evaluation(e.to_string())
}

/// CSV verification report with a header row.
pub fn csv_report(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "point",
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "abs_err",
        "rel_err",
        "tol",
        "terms_used",
        "method",
        "pass",
        "error",
    ])
    .map_err(csv_error)?;
    for row in rows {
        let point = row.point.to_string();
        let record = match &row.outcome {
            Ok(r) => vec![
                row.id.to_owned(),
                point,
                g(r.lhs.re),
                g(r.lhs.im),
                g(r.rhs.re),
                g(r.rhs.im),
                g(r.abs_err),
                g(r.rel_err),
                g(r.tol),
                r.terms_used.to_string(),
                r.method.to_string(),
                r.pass.to_string(),
                r.note.clone().unwrap_or_default(),
            ],
            Err(e) => {
                let mut record = vec![row.id.to_owned(), point];
                record.extend(std::iter::repeat_n(String::new(), 9));
                record.extend(["false".to_owned(), e.to_string()]);
                record
            }
        };
        w.write_record(&record).map_err(csv_error)?;
    }
    csv_text(w)
}

/// Human-readable verification table followed by a summary line.
pub fn text_report(rows: &[Row]) -> String {
    let mut table = vec![["ID", "POINT", "REL_ERR", "TOL", "TERMS", "METHOD", "RESULT", "NOTE"]
        .map(str::to_owned)
        .to_vec()];
    for row in rows {
        table.push(match &row.outcome {
            Ok(r) => vec![
                row.id.to_owned(),
                row.point.to_string(),
                format!("{:.3e}", r.rel_err),
                format!("{:.0e}", r.tol),
                r.terms_used.to_string(),
                r.method.to_string(),
                if r.pass { "pass" } else { "FAIL" }.to_owned(),
                r.note.clone().unwrap_or_default(),
            ],
            Err(e) => vec![
                row.id.to_owned(),
                row.point.to_string(),
                "-".into(),
                "-".into(),
                "-".into(),
                "-".into(),
                format!("ERROR: {e}"),
            ],
        });
    }
    let mut out = align(&table);
    out.push_str(&summary(rows));
    out.push('\n');
    out
}

/// `N checks: P passed, F failed, E errors`.
pub fn summary(rows: &[Row]) -> String {
    let t = Tally::of(rows);
    format!(
        "{} checks: {} passed, {} failed, {} errors",
        rows.len(),
        t.passed,
        t.failed,
        t.errors
    )
}

fn align(table: &[Vec<String>]) -> String {
    let columns = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            table
                .iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Sweep rows as CSV: swept value, both sides, error, work.
pub fn sweep_csv(parameter: &str, values: &[f64], rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        parameter,
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "rel_err",
        "terms_used",
        "pass",
        "error",
    ])
    .map_err(csv_error)?;
    for (value, row) in values.iter().zip(rows) {
        let record = match &row.outcome {
            Ok(r) => vec![
                g(*value),
                g(r.lhs.re),
                g(r.lhs.im),
                g(r.rhs.re),
                g(r.rhs.im),
                g(r.rel_err),
                r.terms_used.to_string(),
                r.pass.to_string(),
                String::new(),
            ],
            Err(e) => {
                let mut record = vec![g(*value)];
                record.extend(std::iter::repeat_n(String::new(), 6));
                record.extend(["false".to_owned(), e.to_string()]);
                record
            }
        };
        w.write_record(&record).map_err(csv_error)?;
    }
    csv_text(w)
}

/// Registry listing as a JSON array.
pub fn list_json(listing: &[Listing]) -> String {
    let rows: Vec<Value> = listing
        .iter()
        .map(|l| {
            json!({
                "accel_required": l.accel_required,
                "citation": {"anchor": l.citation.anchor, "quote": l.citation.quote},
                "default_points": l.default_points,
                "id": l.id,
                "kind": l.kind.as_str(),
                "params": l.parameters,
                "tol": number(l.tol),
            })
        })
        .collect();
    render(&Value::Array(rows))
}

pub fn list_csv(listing: &[Listing]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "kind",
        "params",
        "default_points",
        "tol",
        "accel_required",
        "anchor",
        "quote",
    ])
    .map_err(csv_error)?;
    for l in listing {
        w.write_record([
            l.id.to_owned(),
            l.kind.as_str().to_owned(),
            l.parameters.join(" "),
            l.default_points.to_string(),
            g(l.tol),
            l.accel_required.to_string(),
            l.citation.anchor.to_owned(),
            l.citation.quote.to_owned(),
        ])
        .map_err(csv_error)?;
    }
    csv_text(w)
}

pub fn list_text(listing: &[Listing]) -> String {
    let mut table = vec![["ID", "KIND", "PARAMS", "POINTS", "TOL", "ACCEL", "SOURCE"]
        .map(str::to_owned)
        .to_vec()];
    for l in listing {
        table.push(vec![
            l.id.to_owned(),
            l.kind.as_str().to_owned(),
            l.parameters.join(","),
            l.default_points.to_string(),
            format!("{:.0e}", l.tol),
            if l.accel_required { "yes" } else { "no" }.to_owned(),
            format!("{}: \"{}\"", l.citation.anchor, l.citation.quote),
        ]);
    }
    align(&table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Catalog, VerifyOptions};
    use crate::cli::json::reserialize;

    fn rows() -> Vec<Row> {
        let catalog = Catalog::standard();
        let good = Point::new().with("a", 0.25).with("b", 0.25);
        let bad = Point::new().with("a", 0.25);
        vec![
            Row {
                id: "THM-A1",
                point: good.clone(),
                outcome: catalog.verify("THM-A1", &good, &VerifyOptions::default()),
            },
            Row {
                id: "THM-A1",
                point: bad.clone(),
                outcome: catalog.verify("THM-A1", &bad, &VerifyOptions::default()),
            },
            Row {
                id: "EX-1",
                point: Point::new(),
                outcome: catalog.verify(
                    "EX-1",
                    &Point::new(),
                    &VerifyOptions {
                        tol: Some(1e-30),
                        ..Default::default()
                    },
                ),
            },
        ]
    }

    #[test]
    fn tally_and_exit_codes() {
        let rows = rows();
        assert_eq!(
            rows.iter().map(Row::status).collect::<Vec<_>>(),
            vec![Status::Pass, Status::Error, Status::Fail]
        );
        let t = Tally::of(&rows);
        assert_eq!(
            t,
            Tally {
                passed: 1,
                failed: 1,
                errors: 1
            }
        );
        assert_eq!(t.exit_code(), 3);
        assert_eq!(Tally::of(&rows[..1]).exit_code(), 0);
        assert_eq!(Tally::of(&[rows[0].clone(), rows[2].clone()]).exit_code(), 2);
    }

    #[test]
    fn json_report_shape_and_round_trip() {
        let rows = rows();
        let text = json_report(
            &rows,
            &RunInfo {
                seed: 1,
                timestamp: None,
                tol_default: Some(1e-9),
            },
        );
        assert_eq!(reserialize(&text).unwrap(), text);
        let v: Value = serde_json::from_str(&text).unwrap();
        let results = v["results"].as_array().unwrap();
        assert_eq!(results.len(), 3);
        assert_eq!(results[0]["pass"], true);
        assert_eq!(results[0]["point"]["a"][0], 0.25);
        assert!(results[1]["error"].as_str().unwrap().contains("domain"));
        assert!(results[2]["note"].as_str().unwrap().contains("double-precision"));
        assert_eq!(v["run"]["timestamp"], Value::Null);
    }

    #[test]
    fn csv_and_text_have_one_line_per_row() {
        let rows = rows();
        assert_eq!(csv_report(&rows).unwrap().lines().count(), 4);
        let text = text_report(&rows);
        assert!(text.contains("FAIL") && text.contains("ERROR"));
        assert!(text.ends_with("3 checks: 1 passed, 1 failed, 1 errors\n"));
        let sweep = sweep_csv("a", &[0.25, -1.0], &rows[..2]).unwrap();
        assert!(sweep.starts_with("a,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,terms_used"));
        assert_eq!(sweep.lines().count(), 3);
    }
}
