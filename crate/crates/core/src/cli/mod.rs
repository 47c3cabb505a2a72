//! Command implementations behind the `csl` binary.
//!
//! Each `cmd_*` function takes raw argument strings, does all parsing itself
//! and returns the complete output text, so the binary only dispatches and
//! maps [`CliError::exit_code`] to the process status.

use num_bigint::BigInt;
use thiserror::Error;

use crate::coincidence::{isometries_of_index, Isometry};
use crate::gaussian::{factor, GaussianRational};
use crate::oracle::{verify_coset, verify_membership, Window};
use crate::shifted::{
    count_fx, group_structure, irrational_oc_group, member_isometries, oc_membership, shifted_csl, translation_vector,
    Shift, Verdict,
};

pub mod json;
pub mod parse;
pub mod svg;

use json::{
    CountInputs, CountRow, Envelope, FactorInputs, FactorResults, IsometryRecord, PrimePower, RotationsInputs,
    StructureInputs, StructureResults, VerifyInputs, VerifyMismatch, VerifyResults, Witness,
};
use parse::{parse_gaussian_int, parse_positive, parse_shift, parse_unit};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    /// Only meaningful for `render`.
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    NotMember(String),
    /// The full report is carried along so it can still be printed.
    #[error("verification failed")]
    Mismatch { report: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch { .. } => 1,
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::NotMember(_) => 4,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::NotMember { .. } => CliError::NotMember(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, CliError>;

fn no_svg(format: Format, command: &str) -> Result<(), CliError> {
    match format {
        Format::Svg => Err(CliError::Unsupported(format!("svg output is only available for render, not {command}"))),
        _ => Ok(()),
    }
}

fn rational_only(shift: &Shift, what: &str) -> Result<GaussianRational, CliError> {
    shift
        .as_rational()
        .cloned()
        .ok_or_else(|| CliError::Unsupported(format!("{what} needs a rational shift, got {shift}")))
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

pub fn cmd_factor(z: &str, format: Format) -> CmdResult {
    no_svg(format, "factor")?;
    let value = parse_gaussian_int(z)?;
    let fac = factor(&value)?;
    let results = FactorResults {
        norm: value.norm().to_string(),
        unit: fac.unit.to_string(),
        factors: fac
            .factors
            .iter()
            .map(|(p, e)| PrimePower { prime: p.to_string(), norm: p.norm().to_string(), exponent: *e })
            .collect(),
        rendered: fac.to_string(),
    };
    Ok(match format {
        Format::Json => Envelope::new("factor", FactorInputs { z: value.to_string() }, results).render(),
        _ => format!("{value} = {}\nnorm {}\n", results.rendered, results.norm),
    })
}

fn isometry_rows(records: &[IsometryRecord], with_translation: bool) -> String {
    let mut headers = vec!["sigma", "numerator", "unit", "reflected", "isometry"];
    if with_translation {
        headers.push("translation");
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.sigma.clone(),
                r.numerator.clone(),
                r.unit.clone(),
                if r.reflected { "yes" } else { "no" }.to_string(),
                r.isometry.clone(),
            ];
            if with_translation {
                row.push(r.translation.clone().unwrap_or_else(|| "-".into()));
            }
            row
        })
        .collect();
    table(&headers, &rows)
}

/// Coincidence isometries of index `sigma`, of `Z[i]` or of `shift + Z[i]`.
pub fn cmd_rotations(sigma: &str, shift: Option<&str>, format: Format) -> CmdResult {
    no_svg(format, "rotations")?;
    let m = parse_positive(sigma)?;
    let shift = shift.map(parse_shift).transpose()?;
    let records: Vec<IsometryRecord> = match &shift {
        None => isometries_of_index(&m).iter().map(|s| IsometryRecord::new(s, None)).collect(),
        Some(Shift::Rational(x)) => member_isometries(x, &m)
            .iter()
            .map(|s| {
                let t = translation_vector(x, s).expect("members have a translation vector");
                IsometryRecord::new(s, Some(&t))
            })
            .collect(),
        Some(Shift::Irrational(d)) => {
            irrational_oc_group(d)?.iter().filter(|s| s.sigma() == m).map(|s| IsometryRecord::new(s, None)).collect()
        }
    };
    Ok(match format {
        Format::Json => {
            let inputs = RotationsInputs { sigma: m.to_string(), shift: shift.as_ref().map(ToString::to_string) };
            Envelope::new("rotations", inputs, records).render()
        }
        _ => isometry_rows(&records, matches!(shift, Some(Shift::Rational(_)))),
    })
}

/// `f_x`, `fhat_x`, `Fhat_x` (and the point-set count) for every `m <= limit`.
pub fn cmd_count(shift: &str, limit: u64, format: Format) -> CmdResult {
    no_svg(format, "count")?;
    if limit == 0 {
        return Err(CliError::Parse("limit must be at least 1".into()));
    }
    let shift = parse_shift(shift)?;
    let x = rational_only(&shift, "count")?;
    let rows: Vec<CountRow> = (1..=limit)
        .map(|m| {
            let c = count_fx(&x, m);
            CountRow {
                m: m.to_string(),
                f_x: c.f_x.to_string(),
                fhat_x: c.fhat_x.to_string(),
                big_fhat_x: c.Fhat_x.to_string(),
                cosets: c.cosets.to_string(),
            }
        })
        .collect();
    Ok(match format {
        Format::Json => {
            let inputs = CountInputs { shift: x.to_string(), limit: limit.to_string() };
            Envelope::new("count", inputs, rows).render()
        }
        _ => {
            let cells: Vec<Vec<String>> =
                rows.into_iter().map(|r| vec![r.m, r.f_x, r.fhat_x, r.big_fhat_x, r.cosets]).collect();
            table(&["m", "f_x", "fhat_x", "Fhat_x", "cosets"], &cells)
        }
    })
}

/// Group / non-group verdict for the coincidence isometries of a shift.
pub fn cmd_structure(shift: &str, bound: u64, format: Format) -> CmdResult {
    no_svg(format, "structure")?;
    let shift = parse_shift(shift)?;
    let report = group_structure(&shift, bound);
    let elements = match &shift {
        Shift::Irrational(d) => irrational_oc_group(d)?.iter().map(ToString::to_string).collect(),
        Shift::Rational(_) => Vec::new(),
    };
    let (verdict, checked_up_to) = match report.verdict {
        Verdict::Proven => ("proven", None),
        Verdict::Bounded { bound } => ("bounded", Some(bound.to_string())),
        Verdict::Refuted => ("refuted", None),
    };
    let results = StructureResults {
        is_group: report.is_group,
        verdict: verdict.to_string(),
        checked_up_to,
        note: report.note.clone(),
        reflection: report.decomposition.as_ref().map(ToString::to_string),
        witness: report.witness.as_ref().map(|(t1, t2)| Witness {
            first: t1.to_string(),
            second: t2.to_string(),
            product: t1.compose(t2).to_string(),
        }),
        elements,
    };
    Ok(match format {
        Format::Json => {
            let inputs = StructureInputs { shift: shift.to_string(), bound: bound.to_string() };
            Envelope::new("structure", inputs, results).render()
        }
        _ => {
            let mut pairs = vec![
                ("shift", shift.to_string()),
                ("group", if results.is_group { "yes" } else { "no" }.to_string()),
                ("verdict", verdict.to_string()),
                ("note", results.note.clone()),
            ];
            if let Some(b) = &results.checked_up_to {
                pairs.push(("checked up to index", b.clone()));
            }
            if let Some(t) = &results.reflection {
                pairs.push(("reflection", t.clone()));
            }
            if let Some(w) = &results.witness {
                pairs.push(("witness", format!("{} * {} = {}", w.first, w.second, w.product)));
            }
            if !results.elements.is_empty() {
                pairs.push(("elements", results.elements.join(", ")));
            }
            key_values(&pairs)
        }
    })
}

/// Runs the oracle against the analytic membership test for every isometry
/// with index up to `sigma_max`. Members also get their coset checked.
pub fn cmd_verify(shift: &str, sigma_max: u64, radius: Option<u32>, format: Format) -> CmdResult {
    no_svg(format, "verify")?;
    let shift = parse_shift(shift)?;
    let x = rational_only(&shift, "the oracle")?;
    if let Some(r) = radius {
        Window::new(r)?;
    }
    let mut checked = 0u64;
    let mut members = 0u64;
    let mut mismatches = Vec::new();
    for m in 1..=sigma_max {
        for s in isometries_of_index(&BigInt::from(m)) {
            checked += 1;
            let window = match radius {
                Some(r) => Window::new(r)?,
                None => Window::for_isometry(&s)?,
            };
            let analytic = oc_membership(&shift, &s);
            let oracle = verify_membership(&x, &s, &window);
            let coset_ok = analytic && verify_coset(&shifted_csl(&x, &s)?, &window);
            if analytic {
                members += 1;
            }
            let oracle_text = match &oracle {
                Ok(b) => b.to_string(),
                Err(_) => "window-too-small".to_string(),
            };
            if oracle != Ok(analytic) || (analytic && !coset_ok) {
                mismatches.push(VerifyMismatch {
                    isometry: s.to_string(),
                    analytic,
                    oracle: oracle_text,
                    coset: if !analytic {
                        "-"
                    } else if coset_ok {
                        "ok"
                    } else {
                        "differs"
                    }
                    .to_string(),
                });
            }
        }
    }
    let results = VerifyResults {
        checked: checked.to_string(),
        members: members.to_string(),
        passed: mismatches.is_empty(),
        mismatches,
    };
    let out = match format {
        Format::Json => {
            let inputs = VerifyInputs {
                shift: x.to_string(),
                sigma_max: sigma_max.to_string(),
                radius: radius.map(|r| r.to_string()),
            };
            Envelope::new("verify", inputs, results.clone()).render()
        }
        _ => {
            let mut out = key_values(&[
                ("shift", x.to_string()),
                ("isometries checked", results.checked.clone()),
                ("members", results.members.clone()),
                ("mismatches", results.mismatches.len().to_string()),
            ]);
            if !results.mismatches.is_empty() {
                let rows: Vec<Vec<String>> = results
                    .mismatches
                    .iter()
                    .map(|m| vec![m.isometry.clone(), m.analytic.to_string(), m.oracle.clone(), m.coset.clone()])
                    .collect();
                out += &table(&["isometry", "analytic", "oracle", "coset"], &rows);
            }
            out += if results.passed { "PASS\n" } else { "FAIL\n" };
            out
        }
    };
    if results.passed {
        Ok(out)
    } else {
        Err(CliError::Mismatch { report: out })
    }
}

/// SVG picture of `shift + Z[i]`, its image under `R(z, eps)` (composed with
/// conjugation when `reflected`) and the shifted CSL.
pub fn cmd_render(shift: &str, numerator: &str, eps: &str, reflected: bool, radius: u32, format: Format) -> CmdResult {
    if format == Format::Json {
        return Err(CliError::Unsupported("render only produces svg".into()));
    }
    let shift = parse_shift(shift)?;
    let x = rational_only(&shift, "render")?;
    let z = parse_gaussian_int(numerator)?;
    let eps = parse_unit(eps)?;
    let s = Isometry::new(z, eps, reflected)?;
    let window = Window::new(radius)?;
    if !oc_membership(&shift, &s) {
        return Err(CliError::NotMember(format!("{s} is not a coincidence isometry of {x} + Z[i]")));
    }
    Ok(svg::render(&x, &s, &window))
}

#[cfg(test)]
mod tests {
    use super::*;
    use json::RotationsDocument;

    #[test]
    fn factor_outputs() {
        assert_eq!(cmd_factor("5", Format::Table).unwrap(), "5 = -i * (1+2i) * (2+i)\nnorm 25\n");
        assert_eq!(cmd_factor("0", Format::Table).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_factor("2+", Format::Table).unwrap_err().exit_code(), 2);
        let json = cmd_factor("4+7i", Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema_version"], "1");
        let norms: Vec<&str> =
            v["results"]["factors"].as_array().unwrap().iter().map(|f| f["norm"].as_str().unwrap()).collect();
        assert_eq!(norms, ["5", "13"]);
    }

    #[test]
    fn rotation_listings() {
        let all = cmd_rotations("5", None, Format::Json).unwrap();
        let doc: RotationsDocument = serde_json::from_str(&all).unwrap();
        assert_eq!(doc.results.len(), 16);
        assert_eq!(doc.results.iter().filter(|r| r.reflected).count(), 8);
        assert_eq!(doc.render(), all);

        let half = cmd_rotations("5", Some("1/2"), Format::Json).unwrap();
        let doc: RotationsDocument = serde_json::from_str(&half).unwrap();
        let rotations: Vec<&IsometryRecord> = doc.results.iter().filter(|r| !r.reflected).collect();
        assert_eq!(rotations.len(), 4);
        assert!(rotations.iter().all(|r| r.unit == "1" || r.unit == "-1"));
        assert!(rotations.iter().all(|r| r.translation.is_some()));

        let three = cmd_rotations("3", None, Format::Table).unwrap();
        assert_eq!(three.lines().count(), 1);
        assert_eq!(cmd_rotations("0", None, Format::Table).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn counting_rejects_irrational_shifts() {
        assert_eq!(cmd_count("indep", 5, Format::Table).unwrap_err().exit_code(), 3);
        let out = cmd_count("1/5", 13, Format::Table).unwrap();
        let row13: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
        assert_eq!(row13, ["13", "2", "2", "4", "2"]);
    }

    #[test]
    fn structure_reports() {
        let full = cmd_structure("1/2+1/2i", 20, Format::Table).unwrap();
        assert!(full.contains("full"));
        let fifth = cmd_structure("2/5+1/5i", 20, Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&fifth).unwrap();
        assert_eq!(v["results"]["is_group"], false);
        assert!(v["results"]["witness"]["product"].as_str().unwrap().starts_with("R(1, "));
        let dep = cmd_structure("dep 0/1 -2/1", 20, Format::Table).unwrap();
        // R(-2+i, 1)T_r in canonical form
        assert!(dep.contains("reflection  R(1+2i, -1)T_r"), "{dep}");
        assert_eq!(cmd_structure("dep 2/4 1/1", 5, Format::Table).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn verification() {
        let out = cmd_verify("1/2", 13, None, Format::Table).unwrap();
        assert!(out.ends_with("PASS\n"));
        assert_eq!(cmd_verify("irr-a b=1/3", 5, None, Format::Table).unwrap_err().exit_code(), 3);
        // a tiny window cannot exhibit index-13 cosets
        let err = cmd_verify("0", 13, Some(1), Format::Table).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn rendering() {
        let a = cmd_render("0", "2+i", "1", false, 4, Format::Table).unwrap();
        assert_eq!(a, cmd_render("0", "2+i", "1", false, 4, Format::Svg).unwrap());
        assert!(a.starts_with("<svg"));
        assert_eq!(cmd_render("1/2", "2+i", "i", false, 4, Format::Svg).unwrap_err().exit_code(), 4);
        assert_eq!(cmd_render("0", "2+i", "1", false, 4, Format::Json).unwrap_err().exit_code(), 3);
        assert_eq!(cmd_factor("5", Format::Svg).unwrap_err().exit_code(), 3);
    }
}
