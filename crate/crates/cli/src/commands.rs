use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use braidsig::lissajous::{percentage_table, reference_qs, sample_curve, PercentRow, REFERENCE_PERCENTAGES};
use braidsig::signature::gg_signature;
use braidsig::walks::{finite_walk_tv, hitting_table, monte_carlo_hitting, zero_density_with_budget, HitRow};
use braidsig::*;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::output::{big_json, Report, Table};

fn decimal(r: &BigRational) -> String {
    format!("{:.6}", r.to_f64().unwrap_or(f64::NAN))
}

fn parse_sl2(text: &str) -> anyhow::Result<Sl2> {
    let e: Vec<i64> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad matrix entry {s:?}")))
        .collect::<anyhow::Result<_>>()?;
    let e: [i64; 4] = e.try_into().map_err(|_| anyhow::anyhow!("expected four entries \"a b c d\", got {text:?}"))?;
    Ok(Sl2::from_entries(e)?)
}

fn matrix_table(m: &IntMatrix) -> Table {
    let mut t = Table::new((1..=m.dim()).map(|c| format!("c{c}")));
    for r in 0..m.dim() {
        t.push(m.row(r));
    }
    t
}

fn matrix_text(rows: Vec<Vec<String>>) -> String {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    rows.iter().map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ") + "\n").collect()
}

pub fn burau(word: &str, strands: usize, at: &str, symplectic: bool) -> anyhow::Result<Report> {
    let w = parse_word(word, strands)?;
    let cfg = RepConfig::new(strands)?;
    match at {
        "-1" => {
            let m = if symplectic { cfg.symplectic_image(&w)? } else { cfg.burau_minus1(&w)? };
            let rows: Vec<Vec<Value>> = m.rows().iter().map(|r| r.iter().map(big_json).collect()).collect();
            Ok(Report {
                text: matrix_text(m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()),
                json: json!({ "word": w.to_string(), "strands": strands, "at": "-1", "symplectic": symplectic, "matrix": rows }),
                table: matrix_table(&m),
            })
        }
        "t" | "generic" => {
            if symplectic {
                bail!("--symplectic needs --at -1");
            }
            let m = cfg.burau_t(&w)?;
            let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let mut table = Table::new((1..=m.dim()).map(|c| format!("c{c}")));
            for r in &cells {
                table.push(r);
            }
            Ok(Report {
                text: matrix_text(cells.clone()),
                json: json!({ "word": w.to_string(), "strands": strands, "at": "t", "matrix": cells }),
                table,
            })
        }
        other => bail!("--at must be -1 or t, got {other:?}"),
    }
}

pub fn alexander(word: &str, strands: usize) -> anyhow::Result<Report> {
    let w = parse_word(word, strands)?;
    let poly = alexander_poly(&w)?;
    let at_minus1 = if strands % 2 == 1 { Some(alexander_at_minus1(&w)?) } else { None };
    let value = poly.eval_int(-1)?.to_integer();
    let mut table = Table::new(["word", "strands", "alexander", "value_at_minus1", "determinant_path"]);
    let det_path = at_minus1.as_ref().map(|d| d.to_string()).unwrap_or_default();
    table.push([w.to_string(), strands.to_string(), poly.to_string(), value.to_string(), det_path.clone()]);
    let mut text = format!("{poly}\nΔ(-1) = {value}\n");
    if let Some(d) = &at_minus1 {
        text.push_str(&format!("det(B(-1) - I) path: {d}\n"));
    }
    Ok(Report {
        text,
        json: json!({
            "word": w.to_string(),
            "strands": strands,
            "alexander": poly.to_string(),
            "value_at_minus1": big_json(&value),
            "determinant_path": at_minus1.as_ref().map(big_json),
        }),
        table,
    })
}

pub fn signature(word: &str, strands: usize, oracle: bool) -> anyhow::Result<Report> {
    let w = parse_word(word, strands)?;
    let (value, method) =
        if oracle { (seifert_signature_oracle(&w), "seifert") } else { (gg_signature(&w)?.value, "meyer") };
    let components = w.closure_components();
    let mut table = Table::new(["word", "strands", "method", "components", "signature"]);
    table.push([w.to_string(), strands.to_string(), method.into(), components.to_string(), value.to_string()]);
    Ok(Report {
        text: format!("{value}\n"),
        json: json!({ "word": w.to_string(), "strands": strands, "method": method, "components": components, "signature": value }),
        table,
    })
}

pub fn meyer(g1: &str, g2: &str) -> anyhow::Result<Report> {
    let (a, b) = (parse_sl2(g1)?, parse_sl2(g2)?);
    let value = meyer_cocycle(&a, &b);
    let mut table = Table::new(["g1", "g2", "meyer"]);
    table.push([a.matrix().to_string(), b.matrix().to_string(), value.to_string()]);
    Ok(Report {
        text: format!("{value}\n"),
        json: json!({ "g1": a.matrix().to_string(), "g2": b.matrix().to_string(), "meyer": value }),
        table,
    })
}

pub struct WalkArgs<'a> {
    pub strands: usize,
    pub measure: &'a str,
    pub predicate: &'a str,
    pub steps: usize,
    pub monte_carlo: bool,
    pub trials: u64,
    pub seed: u64,
}

fn measure(name: &str, strands: usize) -> anyhow::Result<GenMeasure> {
    match name {
        "uniform" => Ok(GenMeasure::uniform_generators(strands)?),
        "uniform4" => {
            if strands != 3 {
                bail!("measure uniform4 is the 4-generator measure on 3 strands, got {strands} strands");
            }
            Ok(GenMeasure::uniform_generators(3)?)
        }
        custom => {
            let words = custom
                .strip_prefix("words:")
                .with_context(|| format!("unknown measure {custom:?} (uniform, uniform4 or words:W1;W2;...)"))?
                .split(';')
                .map(|s| parse_word(s, strands))
                .collect::<Result<Vec<_>>>()?;
            Ok(GenMeasure::uniform(words)?)
        }
    }
}

fn hit_rows_json(rows: &[HitRow]) -> Value {
    rows.iter()
        .map(|r| json!({ "step": r.step, "exact_rational": r.probability.to_string(), "decimal": r.decimal(), "states": r.states }))
        .collect()
}

pub fn walk(a: WalkArgs<'_>) -> anyhow::Result<Report> {
    let mu = measure(a.measure, a.strands)?;
    let pred = MatrixPredicate::parse(a.predicate, a.strands - 1)?;
    if !a.monte_carlo {
        let rows = hitting_table(&mu, &pred, a.steps)?;
        let mut table = Table::new(["step", "exact_rational", "decimal", "states"]);
        for r in &rows {
            table.push([r.step.to_string(), r.probability.to_string(), decimal(&r.probability), r.states.to_string()]);
        }
        return Ok(Report {
            text: table.aligned(),
            json: json!({ "mode": "exact", "strands": a.strands, "predicate": a.predicate, "rows": hit_rows_json(&rows) }),
            table,
        });
    }
    let rep = IntegralBurau::new(a.strands)?;
    let mut table =
        Table::new(["step", "hits", "trials", "exact_rational", "decimal", "std_error", "ci95_low", "ci95_high"]);
    let mut rows = Vec::new();
    for k in 0..=a.steps {
        let est = monte_carlo_hitting(&mu, &rep, |m| pred.test(m), k, a.trials, a.seed)?;
        table.push([
            k.to_string(),
            est.hits.to_string(),
            est.trials.to_string(),
            format!("{}/{}", est.hits, est.trials),
            format!("{:.6}", est.estimate),
            format!("{:.6}", est.std_error),
            format!("{:.6}", est.ci95.0),
            format!("{:.6}", est.ci95.1),
        ]);
        rows.push(json!({
            "step": k, "hits": est.hits, "trials": est.trials, "estimate": est.estimate,
            "std_error": est.std_error, "ci95": [est.ci95.0, est.ci95.1],
        }));
    }
    Ok(Report {
        text: format!("seed {}\n{}", a.seed, table.aligned()),
        json: json!({ "mode": "monte-carlo", "strands": a.strands, "predicate": a.predicate, "seed": a.seed, "rows": rows }),
        table,
    })
}

pub fn density(poly: &str, p: u64, l: usize, budget: u64) -> anyhow::Result<Report> {
    let ep = EntryPolynomial::parse(poly, 2 * l)?;
    let d = zero_density_with_budget(&ep, l, p, budget)?;
    let mut table = Table::new(["poly", "l", "p", "exact_rational", "decimal"]);
    table.push([ep.to_string(), l.to_string(), p.to_string(), d.to_string(), decimal(&d)]);
    Ok(Report {
        text: format!("{d} ({})\n", decimal(&d)),
        json: json!({ "poly": ep.to_string(), "l": l, "p": p, "exact_rational": d.to_string(), "decimal": d.to_f64() }),
        table,
    })
}

pub fn finite_walk(strands: usize, p: u64, projective: bool, steps: usize) -> anyhow::Result<Report> {
    let mu = GenMeasure::uniform_generators(strands)?;
    let report = finite_walk_tv(&mu, p, projective, steps)?;
    let group = if projective { "PSp" } else { "Sp" };
    let mut table = Table::new(["step", "exact_rational", "decimal"]);
    for (k, tv) in report.tv.iter().enumerate() {
        table.push([k.to_string(), tv.to_string(), format!("{:.6e}", tv.to_f64().unwrap_or(f64::NAN))]);
    }
    let header = format!(
        "{group}({}, F_{p}): order {}, generated subgroup order {}{}\n",
        2 * report.genus,
        report.group_order,
        report.generated_order,
        if report.generates { "" } else { " (support does not generate)" }
    );
    let mut text_table = Table::new(["step", "tv"]);
    for row in &table.rows {
        text_table.push([row[0].clone(), row[2].clone()]);
    }
    Ok(Report {
        text: header + &text_table.aligned(),
        json: json!({
            "group": group, "p": p, "genus": report.genus, "order": report.group_order.to_string(),
            "generated_order": report.generated_order, "generates": report.generates,
            "tv": report.tv.iter().map(|t| json!({ "exact_rational": t.to_string(), "decimal": t.to_f64() })).collect::<Vec<_>>(),
        }),
        table,
    })
}

pub fn lissajous_classify(q: u64, p: u64) -> anyhow::Result<Report> {
    let c = classify(q, p)?;
    let h = match c.class {
        LissajousClass::TorusConjugate { h } | LissajousClass::ThreeComponentRejected { h } => Some(h),
        LissajousClass::ZeroSignatureHyperbolic => None,
    };
    let mut table = Table::new(["q", "p", "class", "h", "braid", "p_matrix", "trace"]);
    table.push([
        q.to_string(),
        p.to_string(),
        c.class.name().to_string(),
        h.map(|h| h.to_string()).unwrap_or_default(),
        c.braid.to_string(),
        c.p_matrix.to_string(),
        c.trace.to_string(),
    ]);
    let hline = h.map(|h| format!(" (h = {h})")).unwrap_or_default();
    Ok(Report {
        text: format!("class: {}{hline}\nbraid: {}\nP: {}\ntrace: {}\n", c.class.name(), c.braid, c.p_matrix, c.trace),
        json: json!({
            "q": q, "p": p, "class": c.class.name(), "h": h, "braid": c.braid.letters(),
            "p_matrix": c.p_matrix.rows().iter().map(|r| r.iter().map(big_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "trace": big_json(&c.trace),
        }),
        table,
    })
}

fn percent_table(rows: &[PercentRow]) -> Table {
    let mut table = Table::new([
        "mode",
        "q",
        "eligible",
        "hyperbolic",
        "denominator",
        "exact_rational",
        "decimal",
        "percent",
        "reference",
    ]);
    for r in rows {
        table.push([
            r.mode.name().to_string(),
            r.q.to_string(),
            r.eligible.to_string(),
            r.hyperbolic.to_string(),
            r.denominator.to_string(),
            r.fraction.to_string(),
            decimal(&r.fraction),
            r.percent.to_string(),
            r.reference.map(|x| x.to_string()).unwrap_or_default(),
        ]);
    }
    table
}

pub fn modes(name: &str) -> anyhow::Result<Vec<Eligibility>> {
    Ok(match name {
        "literal" => vec![Eligibility::Literal],
        "full-range" => vec![Eligibility::FullRange],
        "both" => vec![Eligibility::Literal, Eligibility::FullRange],
        other => bail!("--mode must be literal, full-range or both, got {other:?}"),
    })
}

pub fn percentage_rows(qmax: u64, all: bool, modes: &[Eligibility]) -> anyhow::Result<Vec<PercentRow>> {
    let qs: Vec<u64> = if all { (5..=qmax).filter(|q| q % 2 == 1 && q % 3 != 0).collect() } else { reference_qs(qmax) };
    let mut rows = Vec::new();
    for &mode in modes {
        rows.extend(percentage_table(&qs, mode)?);
    }
    Ok(rows)
}

pub fn lissajous_table(qmax: u64, mode: &str, all: bool) -> anyhow::Result<Report> {
    let rows = percentage_rows(qmax, all, &modes(mode)?)?;
    let table = percent_table(&rows);
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "mode": r.mode.name(), "q": r.q, "eligible": r.eligible, "hyperbolic": r.hyperbolic,
                "denominator": r.denominator, "exact_rational": r.fraction.to_string(), "percent": r.percent,
                "reference": r.reference,
            })
        })
        .collect();
    Ok(Report { text: table.aligned(), json: json!({ "rows": json_rows }), table })
}

pub fn lissajous_sample(n: u64, q: u64, p: u64, alpha: f64, samples: usize) -> anyhow::Result<Report> {
    if samples == 0 {
        bail!("--samples must be positive");
    }
    let pts = sample_curve(n, q, p, alpha, samples);
    let mut table = Table::new(["x", "y", "z"]);
    for [x, y, z] in &pts {
        table.push([x, y, z]);
    }
    Ok(Report {
        text: format!("{} points of K({n}, {q}, {p}), alpha = {alpha}\n", pts.len()),
        json: json!({ "N": n, "q": q, "p": p, "alpha": alpha, "points": pts }),
        table,
    })
}

/// Writes the walk table and the percentage table into `dir`.
pub fn reproduce_paper_tables(dir: &Path, seed: u64) -> anyhow::Result<Report> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let walk = walk(WalkArgs {
        strands: 3,
        measure: "uniform4",
        predicate: "z11",
        steps: 12,
        monte_carlo: false,
        trials: 0,
        seed,
    })?;
    let qmax = REFERENCE_PERCENTAGES.iter().map(|(q, _)| *q).max().unwrap_or(101);
    let percent = percent_table(&percentage_rows(qmax, false, &[Eligibility::Literal, Eligibility::FullRange])?);
    let files: [(PathBuf, String); 2] = [
        (dir.join("walk_z11.csv"), walk.table.csv(seed)?),
        (dir.join("lissajous_percentages.csv"), percent.csv(seed)?),
    ];
    let mut text = String::new();
    for (path, body) in &files {
        fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
        text.push_str(&format!("wrote {}\n", path.display()));
    }
    let mut table = Table::new(["file"]);
    for (path, _) in &files {
        table.push([path.display().to_string()]);
    }
    Ok(Report {
        text,
        json: json!({ "files": files.iter().map(|(p, _)| p.display().to_string()).collect::<Vec<_>>() }),
        table,
    })
}
