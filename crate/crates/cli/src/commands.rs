use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::{bail, Context};
use bt_cohomology::cohomology::{
    closed_formula, coxeter_cohomology, eo_stratum_cohomology_with, spectral_first_page_with,
    stratum_cohomology_with, verify_coxeter_with, verify_stratum_with, CohomologyTable,
    SpectralPage, VerificationReport,
};
use bt_cohomology::harish_chandra::{hc_induce_with, pieri_restrict};
use bt_cohomology::unipotent::{degree_gl, degree_u, from_symbol, hc_series, symbol_of};
use bt_cohomology::weyl::{character_table, chi_sym, chi_typeb, SymClass, TypeBClass, WeylGroup};
use bt_cohomology::{
    Bipartition, CharValue, IntPolynomial, LeviShape, LeviUnipotentLabel, Partition, RepMultiset,
    SymbolLabel,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{align, emit, Document};
use crate::{
    faults, Command, GroupKind, RunConfig, StratumView, WeylKind, DEFAULT_MAX_A, DEFAULT_MAX_K,
    DEFAULT_MAX_N, DEFAULT_MAX_THETA,
};

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
        .map_err(|e| format!("malformed partition {s:?} (expected e.g. 3,3,2,2,1): {e}"))
}

pub fn parse_bipartition(s: &str) -> Result<Bipartition, String> {
    s.parse()
        .map_err(|e| format!("malformed bipartition {s:?} (expected e.g. 3,1,1/4,2): {e}"))
}

/// `3`, `0..6` or `0..=6`, all inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("malformed range {s:?} (expected e.g. 3 or 0..6)");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn cap(what: &str, flag: &str, value: usize, max: usize, default: usize) -> anyhow::Result<()> {
    if value > max {
        bail!("{what} = {value} exceeds the cap {max}; pass {flag} {value} to allow it");
    }
    if value > default {
        log::warn!("{what} = {value} is above the default cap {default}; this may take a while");
    }
    Ok(())
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn rep_rows(reps: &RepMultiset) -> anyhow::Result<Vec<Vec<String>>> {
    reps.iter()
        .map(|(label, m)| {
            let deg = bt_cohomology::unipotent::degree_of_symbol::<CharValue>(label)?;
            Ok(vec![
                label.to_partition().to_string(),
                label.to_string(),
                m.to_string(),
                deg.to_string(),
            ])
        })
        .collect()
}

fn reps_doc(reps: &RepMultiset) -> anyhow::Result<Document> {
    let header: Vec<String> = ["partition", "symbol", "multiplicity", "degree"]
        .map(String::from)
        .to_vec();
    let rows = rep_rows(reps)?;
    Ok(Document {
        text: align(&header, &rows),
        json: serde_json::to_value(reps)?,
        header,
        rows,
    })
}

fn cohomology_rows(table: &CohomologyTable) -> anyhow::Result<Vec<Vec<String>>> {
    let mut rows = Vec::new();
    for (degree, eigen, reps) in table.iter() {
        for r in rep_rows(reps)? {
            let mut row = vec![degree.to_string(), eigen.exponent.to_string()];
            row.extend(r);
            rows.push(row);
        }
    }
    Ok(rows)
}

const COHOMOLOGY_HEADER: [&str; 6] = [
    "degree",
    "exponent",
    "partition",
    "symbol",
    "multiplicity",
    "degree_poly",
];

fn cohomology_doc(table: &CohomologyTable) -> anyhow::Result<Document> {
    let header: Vec<String> = COHOMOLOGY_HEADER.map(String::from).to_vec();
    let rows = cohomology_rows(table)?;
    Ok(Document {
        text: format!("{}\n{}", table.variety, align(&header, &rows)),
        json: serde_json::to_value(table)?,
        header,
        rows,
    })
}

fn page_doc(page: &SpectralPage) -> anyhow::Result<Document> {
    let mut header: Vec<String> = vec!["column".into()];
    header.extend(COHOMOLOGY_HEADER.map(String::from));
    let mut rows = Vec::new();
    for theta_prime in 0..=page.theta {
        for row in cohomology_rows(&page.column(theta_prime))? {
            let mut r = vec![theta_prime.to_string()];
            r.extend(row);
            rows.push(r);
        }
    }
    Ok(Document {
        text: format!(
            "first page, theta={}\n{}",
            page.theta,
            align(&header, &rows)
        ),
        json: serde_json::to_value(page)?,
        header,
        rows,
    })
}

fn report_lines(reports: &[VerificationReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| {
                vec![
                    if c.passed { "PASS" } else { "FAIL" }.to_string(),
                    r.subject.to_string(),
                    c.name.clone(),
                    c.detail.clone().unwrap_or_default(),
                ]
            })
        })
        .collect()
}

pub fn run(command: &Command, config: &RunConfig) -> anyhow::Result<ExitCode> {
    let kernels = faults::kernels(config.inject_fault);
    let mut code = ExitCode::SUCCESS;
    let doc = match command {
        Command::CharSym { lambda, class } => {
            let v: CharValue = chi_sym(lambda, &SymClass(class.clone()))?;
            Document::scalar(
                "value",
                v.to_string(),
                json!({"lambda": parts_json(lambda), "class": parts_json(class), "value": v.to_string()}),
            )
        }
        Command::CharB { label, class } => {
            let v: CharValue = chi_typeb(label, &TypeBClass(class.clone()))?;
            Document::scalar(
                "value",
                v.to_string(),
                json!({"label": label, "class": class, "value": v.to_string()}),
            )
        }
        Command::Table { group, rank } => {
            let group = match group {
                WeylKind::Sym => {
                    cap("n", "--max-n", *rank, config.max_n, DEFAULT_MAX_N)?;
                    WeylGroup::Symmetric(*rank)
                }
                WeylKind::B => {
                    cap("a", "--max-a", *rank, config.max_a, DEFAULT_MAX_A)?;
                    WeylGroup::TypeB(*rank)
                }
            };
            let t = character_table::<CharValue>(group);
            let mut header = vec!["character".to_string()];
            header.extend(t.classes.iter().map(|c| c.to_string()));
            let rows: Vec<Vec<String>> = t
                .labels
                .iter()
                .zip(&t.values)
                .map(|(l, vals)| {
                    let mut row = vec![l.to_string()];
                    row.extend(vals.iter().map(|v| v.to_string()));
                    row
                })
                .collect();
            let mut sizes = vec!["class size".to_string()];
            sizes.extend(t.class_sizes.iter().map(|v| v.to_string()));
            let mut all = rows.clone();
            all.push(sizes);
            Document {
                text: align(&header, &all),
                json: serde_json::to_value(&t)?,
                header,
                rows,
            }
        }
        Command::Degree { lambda, group, q } => {
            let (poly, name): (IntPolynomial, &str) = match group {
                GroupKind::Gl => (degree_gl(lambda)?, "GL"),
                GroupKind::U => (degree_u(lambda)?, "U"),
            };
            let value = q.map(|q| poly.eval_at(q).to_string());
            let text = match &value {
                Some(v) => format!("{poly}\n{v}"),
                None => poly.to_string(),
            };
            let mut doc = Document::scalar(
                "degree_poly",
                text,
                json!({"group": name, "lambda": parts_json(lambda), "degree_poly": poly, "value": value}),
            );
            doc.rows = vec![vec![poly.to_string()]];
            if let Some(v) = value {
                doc.header.push("value".into());
                doc.rows[0].push(v);
            }
            doc
        }
        Command::TwoCore { lambda } => {
            let t = lambda.two_core();
            let core = Partition::staircase(t);
            Document {
                text: format!("t={t}, core {core}"),
                json: json!({"t": t, "core": parts_json(&core)}),
                header: vec!["t".into(), "core".into()],
                rows: vec![vec![t.to_string(), core.to_string()]],
            }
        }
        Command::TwoQuotient { lambda, rows } => {
            let r = rows.unwrap_or(lambda.len());
            let beta = lambda.beta_set(r)?;
            let q = lambda.two_quotient_at(r)?;
            let t = lambda.two_core();
            let quotient = json!([q.first.parts(), q.second.parts()]);
            Document {
                text: format!("core t={t}, quotient {quotient}"),
                json: json!({"t": t, "quotient": quotient, "beta_set": beta.entries()}),
                header: vec!["t".into(), "first".into(), "second".into()],
                rows: vec![vec![
                    t.to_string(),
                    q.first.to_string(),
                    q.second.to_string(),
                ]],
            }
        }
        Command::Reconstruct { core, quotient } => {
            let lam = Partition::from_core_quotient(*core, quotient);
            Document::scalar(
                "partition",
                lam.to_string(),
                json!({"partition": parts_json(&lam)}),
            )
        }
        Command::Label {
            lambda,
            t,
            bipartition,
        } => {
            let symbol = match (lambda, t, bipartition) {
                (Some(lam), _, _) => symbol_of(lam),
                (None, Some(t), Some(b)) => SymbolLabel::new(*t, b.first.clone(), b.second.clone()),
                _ => bail!("pass either --lambda or both --t and --bipartition"),
            };
            let lam = from_symbol(&symbol).lambda;
            Document {
                text: format!("ρ_{lam} = ρ_{symbol} of U_{}", lam.size()),
                json: json!({"partition": parts_json(&lam), "symbol": symbol, "rank": lam.size()}),
                header: vec!["partition".into(), "symbol".into()],
                rows: vec![vec![lam.to_string(), symbol.to_string()]],
            }
        }
        Command::Series { lambda } => {
            let s = hc_series(lambda);
            let symbol = symbol_of(lambda);
            let kind = if s.cuspidal {
                "cuspidal"
            } else if s.principal {
                "principal series"
            } else {
                "non-principal series"
            };
            Document {
                text: format!(
                    "ρ_{lambda} of U_{} lies in the series of Δ_{} ({kind}); symbol {symbol}",
                    s.rank, s.t
                ),
                json: json!({"series": s, "symbol": symbol}),
                header: vec![
                    "t".into(),
                    "rank".into(),
                    "principal".into(),
                    "cuspidal".into(),
                ],
                rows: vec![vec![
                    s.t.to_string(),
                    s.rank.to_string(),
                    s.principal.to_string(),
                    s.cuspidal.to_string(),
                ]],
            }
        }
        Command::Pieri {
            bipartition,
            boxes,
            restrict,
        } => {
            let m = if *restrict {
                pieri_restrict(bipartition, *boxes)?
            } else {
                (kernels.pieri_induce)(bipartition, *boxes)
            };
            let header = vec!["bipartition".to_string(), "multiplicity".to_string()];
            let rows: Vec<Vec<String>> = m
                .iter()
                .map(|(b, k)| vec![b.to_string(), k.to_string()])
                .collect();
            let list: Vec<Value> = m
                .iter()
                .map(|(b, k)| json!({"bipartition": b, "multiplicity": k}))
                .collect();
            Document {
                text: align(&header, &rows),
                json: Value::Array(list),
                header,
                rows,
            }
        }
        Command::Induce { t, bipartition, gl } => {
            let unitary =
                SymbolLabel::new(*t, bipartition.first.clone(), bipartition.second.clone());
            let gl: Vec<usize> = gl.iter().copied().filter(|&s| s > 0).collect();
            let shape = LeviShape {
                b: unitary.rank(),
                gl_ranks: gl.clone(),
            };
            let label = LeviUnipotentLabel {
                unitary,
                gl_parts: gl.iter().map(|&s| Partition::row(s)).collect(),
            };
            reps_doc(&hc_induce_with(&shape, &label, kernels.pieri_induce)?)?
        }
        Command::Coxeter { k } => {
            cap("k", "--max-k", *k, config.max_k, DEFAULT_MAX_K)?;
            cohomology_doc(&coxeter_cohomology(*k))?
        }
        Command::Stratum {
            theta,
            view,
            theta_prime,
        } => {
            cap(
                "theta",
                "--max-theta",
                *theta,
                config.max_theta,
                DEFAULT_MAX_THETA,
            )?;
            match view {
                StratumView::Spectral => {
                    cohomology_doc(&stratum_cohomology_with(*theta, kernels.pieri_induce)?)?
                }
                StratumView::ClosedFormula => cohomology_doc(&closed_formula(*theta))?,
                StratumView::Eo => {
                    let tp = theta_prime.context("--view eo needs --theta-prime")?;
                    cohomology_doc(&eo_stratum_cohomology_with(
                        *theta,
                        tp,
                        kernels.pieri_induce,
                    )?)?
                }
                StratumView::Page => {
                    page_doc(&spectral_first_page_with(*theta, kernels.pieri_induce)?)?
                }
            }
        }
        Command::Verify { theta, k } => {
            let (thetas, ks) = match (theta, k) {
                (None, None) => (Some(0..=6), Some(0..=6)),
                (t, k) => (t.clone(), k.clone()),
            };
            let mut reports = Vec::new();
            if let Some(r) = thetas {
                cap(
                    "theta",
                    "--max-theta",
                    *r.end(),
                    config.max_theta,
                    DEFAULT_MAX_THETA,
                )?;
                let v: Vec<usize> = r.collect();
                reports.extend(
                    v.par_iter()
                        .map(|&t| verify_stratum_with(t, &kernels))
                        .collect::<Vec<_>>(),
                );
            }
            if let Some(r) = ks {
                cap("k", "--max-k", *r.end(), config.max_k, DEFAULT_MAX_K)?;
                let v: Vec<usize> = r.collect();
                reports.extend(
                    v.par_iter()
                        .map(|&k| verify_coxeter_with(k, &kernels))
                        .collect::<Vec<_>>(),
                );
            }
            let passed = reports.iter().all(VerificationReport::passed);
            if !passed {
                code = ExitCode::from(1);
            }
            let header: Vec<String> = ["status", "subject", "check", "detail"]
                .map(String::from)
                .to_vec();
            let rows = report_lines(&reports);
            let summary = format!(
                "{} of {} checks passed",
                rows.iter().filter(|r| r[0] == "PASS").count(),
                rows.len()
            );
            let mut text = String::new();
            for r in &rows {
                text.push_str(&format!("{} {}: {}", r[0], r[1], r[2]));
                if !r[3].is_empty() {
                    text.push_str(&format!(" ({})", r[3]));
                }
                text.push('\n');
            }
            text.push_str(&summary);
            Document {
                text,
                json: json!({"passed": passed, "reports": reports}),
                header,
                rows,
            }
        }
    };
    emit(&doc, config.format, config.out.as_deref())?;
    Ok(code)
}
