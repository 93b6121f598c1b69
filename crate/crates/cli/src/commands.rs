use std::fmt::Write as _;
use std::collections::BTreeMap;

use serde_json::json;

use coverreg_core::graph::Graph;
use coverreg_core::ideal::{Grading, MonomialIdeal};
use coverreg_core::oracle::explicit::{build_explicit_complex, validate_explicit_complex, ExplicitComplex, Family};
use coverreg_core::oracle::verify::run_verification_suite;
use coverreg_core::resolution::{betti_table, BettiOptions, BettiTable, Field};
use coverreg_core::spec::{IdealKind, IdealSpec};
use coverreg_core::{Error, Result};

use crate::{exit, parse_complex, parse_families, ComputeArgs, EngineArgs, InputArgs, SyzygyArgs, VerifyArgs};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }

    fn json(value: serde_json::Value) -> Output {
        Output::ok(format!("{}\n", serde_json::to_string_pretty(&value).expect("json")))
    }
}

const CONVENTION: &str = "# Betti numbers of R/I: beta_{i+1}(R/I) = beta_i(I); reg is reported for I and for R/I";

fn options(e: &EngineArgs) -> Result<BettiOptions> {
    Ok(BettiOptions {
        field: Field::from_characteristic(e.field)?,
        lattice_cap: e.lattice_cap,
    })
}

fn variable_names(g: &Graph, spec: &IdealSpec) -> Vec<String> {
    match (spec.compressed, g.parts()) {
        (true, Some(parts)) => (1..=parts.len()).map(|i| format!("X{i}")).collect(),
        _ => g.labels().to_vec(),
    }
}

struct Loaded {
    spec: IdealSpec,
    ideal: MonomialIdeal,
    names: Vec<String>,
}

fn load(a: &InputArgs) -> Result<Loaded> {
    let spec = a.spec()?;
    let graph = spec.graph.build()?;
    let ideal = spec.build_on(&graph, a.max_vertices)?;
    let names = variable_names(&graph, &spec);
    Ok(Loaded {
        spec,
        ideal,
        names,
    })
}

fn describe(l: &Loaded) -> String {
    let name = match l.spec.kind {
        IdealKind::Cover => "J",
        IdealKind::Edge => "I",
    };
    let power = if l.spec.power == 1 {
        String::new()
    } else {
        format!("^{}", l.spec.power)
    };
    let weights = if l.ideal.grading().is_standard() {
        String::new()
    } else {
        format!(" with variable degrees {:?}", l.ideal.grading().degrees())
    };
    format!("{name}{power} in {} variables{weights}", l.ideal.num_vars())
}

pub fn covers(a: &InputArgs) -> Result<Output> {
    let spec = a.spec()?;
    let g = spec.graph.build()?;
    let covers = g.minimal_vertex_covers_bounded(a.max_vertices)?;
    let named: Vec<Vec<String>> = covers
        .iter()
        .map(|c| c.vertices.iter().map(|&v| g.labels()[v].clone()).collect())
        .collect();
    if a.json {
        return Ok(Output::json(json!({
            "spec": spec,
            "count": covers.len(),
            "covers": named,
            "indices": covers.iter().map(|c| c.vertices.clone()).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} minimal vertex covers", covers.len());
    for c in named {
        let _ = writeln!(out, "{{{}}}", c.join(", "));
    }
    Ok(Output::ok(out))
}

pub fn ideal(a: &InputArgs) -> Result<Output> {
    let l = load(a)?;
    let gens: Vec<String> = l.ideal.generators().iter().map(|m| m.display_with(&l.names)).collect();
    let lq = l.ideal.has_linear_quotients_grevlex();
    let ci = l.ideal.is_complete_intersection();
    if a.json {
        return Ok(Output::json(json!({
            "spec": l.spec,
            "variables": l.names,
            "grading": l.ideal.grading().degrees(),
            "generators": gens,
            "mu": l.ideal.mu(),
            "complete_intersection": ci,
            "linear_quotients": { "holds": lq.holds, "first_failure": lq.first_failure },
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", describe(&l));
    let _ = writeln!(out, "({})", gens.join(", "));
    let _ = writeln!(out, "mu = {}", l.ideal.mu());
    let _ = writeln!(out, "complete intersection: {}", if ci { "yes" } else { "no" });
    match lq.first_failure {
        None => {
            let _ = writeln!(out, "linear quotients in grevlex order: yes");
        }
        Some(j) => {
            let _ = writeln!(out, "linear quotients in grevlex order: no (first failure at generator {})", j + 1);
        }
    }
    Ok(Output::ok(out))
}

fn compute(a: &ComputeArgs) -> Result<(Loaded, BettiTable)> {
    let l = load(&a.input)?;
    let t = betti_table(&l.ideal, &options(&a.engine)?)?;
    Ok((l, t))
}

fn summary_json(l: &Loaded, t: &BettiTable) -> serde_json::Value {
    let reg = t.regularity();
    let h = t.hilbert_series();
    json!({
        "spec": l.spec,
        "field": t.field().characteristic(),
        "convention": "R/I",
        "grading": t.grading().degrees(),
        "betti": t.entries(),
        "reg": reg.ideal,
        "reg_quotient": reg.quotient,
        "pdim": t.pdim(),
        "depth": t.depth(),
        "hilbert": { "num": h.reduced_numerator.coeffs(), "den_pow": h.reduced_denominator_power },
    })
}

pub fn betti(a: &ComputeArgs) -> Result<Output> {
    let (l, t) = compute(a)?;
    if a.input.json {
        return Ok(Output::json(summary_json(&l, &t)));
    }
    let reg = t.regularity();
    let mut out = String::new();
    let _ = writeln!(out, "{CONVENTION}");
    let _ = writeln!(out, "# {} over {}", describe(&l), t.field());
    out.push_str(&t.to_grid());
    let total: Vec<String> = t.betti_vector().iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "betti vector: ({})", total.join(", "));
    let _ = writeln!(out, "reg(I) = {}, reg(R/I) = {}", reg.ideal, reg.quotient);
    let _ = writeln!(out, "pdim(R/I) = {}, depth(R/I) = {}", t.pdim(), t.depth());
    Ok(Output::ok(out))
}

pub fn reg(a: &ComputeArgs) -> Result<Output> {
    let (l, t) = compute(a)?;
    if a.input.json {
        return Ok(Output::json(summary_json(&l, &t)));
    }
    let reg = t.regularity();
    Ok(Output::ok(format!(
        "{}\n# reg(I) for I = {} over {}; reg(R/I) = {}\n",
        reg.ideal,
        describe(&l),
        t.field(),
        reg.quotient
    )))
}

pub fn hilbert(a: &ComputeArgs) -> Result<Output> {
    let (l, t) = compute(a)?;
    let h = t.hilbert_series();
    if a.input.json {
        let mut v = summary_json(&l, &t);
        v["hilbert"] = json!({
            "num": h.reduced_numerator.coeffs(),
            "den_pow": h.reduced_denominator_power,
            "unreduced_num": h.numerator.coeffs(),
            "den_degrees": h.denominator_degrees,
        });
        return Ok(Output::json(v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "# H(R/I, t) for I = {}", describe(&l));
    let weighted: Vec<String> = h
        .denominator_degrees
        .iter()
        .filter(|&&d| d > 1)
        .map(|d| format!("[{d}]"))
        .collect();
    let mut factors = match h.reduced_denominator_power {
        0 => Vec::new(),
        1 => vec!["(1-t)".to_string()],
        k => vec![format!("(1-t)^{k}")],
    };
    factors.extend(weighted.iter().cloned());
    let den = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
    let _ = writeln!(out, "H = ({}) / {den}", h.reduced_numerator);
    if !weighted.is_empty() {
        let _ = writeln!(out, "# [d] = 1 + t + ... + t^(d-1)");
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &d in &h.denominator_degrees {
        *counts.entry(d).or_default() += 1;
    }
    let dens: Vec<String> = counts
        .into_iter()
        .map(|(d, k)| {
            let base = if d == 1 { "(1-t)".to_string() } else { format!("(1-t^{d})") };
            if k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        })
        .collect();
    let _ = writeln!(out, "unreduced: ({}) / {}", h.numerator, dens.join(""));
    let reg = t.regularity();
    let upto = (reg.quotient.max(0) as usize) + 3;
    let coeffs: Vec<String> = h.expand(upto).iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "series: {} + ...", coeffs.join(", "));
    Ok(Output::ok(out))
}

fn complex_variable_names(f: Family) -> Vec<String> {
    match f {
        Family::P4 => ["X1", "X2", "Y1", "Y2"].iter().map(|s| s.to_string()).collect(),
        _ => (1..=f.num_vars()).map(|i| format!("x{i}")).collect(),
    }
}

fn render_maps(c: &ExplicitComplex) -> String {
    let names = complex_variable_names(c.family);
    let mut out = String::new();
    for (k, map) in c.maps.iter().enumerate() {
        for (j, col) in map.cols.iter().enumerate() {
            let mut rhs = String::new();
            for (n, t) in col.iter().enumerate() {
                let sign = match (n, t.coeff < 0) {
                    (0, false) => "",
                    (0, true) => "-",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                let mag = t.coeff.unsigned_abs();
                let coeff = if mag == 1 { String::new() } else { format!("{mag}*") };
                let target = &c.labels[k][t.row];
                let mono = t.mono.display_with(&names);
                if k == 0 {
                    let _ = write!(rhs, "{sign}{coeff}{mono}");
                } else {
                    let _ = write!(rhs, "{sign}{coeff}{mono}*{target}");
                }
            }
            let _ = writeln!(out, "d{}({}) = {rhs}", k + 1, c.labels[k + 1][j]);
        }
    }
    out
}

pub fn syzygy_check(a: &SyzygyArgs) -> Result<Output> {
    let family = parse_complex(&a.complex)?;
    let grading = if a.grading.is_empty() {
        Grading::standard(family.num_vars())
    } else {
        Grading::new(a.grading.clone())?
    };
    if a.power == 0 {
        return Err(Error::InvalidArgument("--power must be at least 1".into()));
    }
    let c = build_explicit_complex(family, a.power, &grading)?;
    let ideal = family.base_ideal(grading.clone())?.power(a.power)?;
    let table = betti_table(&ideal, &options(&a.engine)?)?;
    let v = validate_explicit_complex(&c, &ideal, &table);
    let code = if v.all_passed() { 0 } else { exit::MISMATCH };
    if a.json {
        let mut out = Output::json(json!({ "validation": v, "all_passed": v.all_passed(), "field": table.field().characteristic() }));
        out.code = code;
        return Ok(out);
    }
    let mut out = String::new();
    let ranks: Vec<String> = v.ranks.iter().map(|r| r.to_string()).collect();
    let _ = writeln!(
        out,
        "{family} complex, s = {}, grading {:?}: ranks {}",
        a.power,
        grading.degrees(),
        ranks.join(" <- ")
    );
    for chk in &v.checks {
        let _ = writeln!(out, "{:<5} {:<15} {}", if chk.passed { "PASS" } else { "FAIL" }, chk.name, chk.detail);
    }
    if a.show {
        out.push_str(&render_maps(&c));
    }
    Ok(Output { text: out, code })
}

pub fn verify(a: &VerifyArgs) -> Result<Output> {
    let families = parse_families(&a.families)?;
    let report = run_verification_suite(a.max_m, a.max_s, &families, &options(&a.engine)?)?;
    let json = report.to_json();
    if let Some(path) = &a.report {
        let text = serde_json::to_string_pretty(&json).expect("json");
        std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    let code = if report.theorem_mismatches() > 0 {
        exit::MISMATCH
    } else if report.counterexample_candidates() > 0 {
        exit::COUNTEREXAMPLE
    } else {
        0
    };
    let mut out = if a.json { Output::json(json) } else { Output::ok(report.to_text()) };
    out.code = code;
    Ok(out)
}
