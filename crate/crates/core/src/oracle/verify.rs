//! Verification harness: runs the engine on every in-scope member of each
//! family and compares against the predictions.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{cover_ideal, Grading, MonomialIdeal};
use crate::oracle::explicit::{build_explicit_complex, validate_explicit_complex, ComplexValidation, Family};
use crate::oracle::predict::{self, MultipartiteRange, Prediction, Quantity, Source, Value};
use crate::resolution::{betti_table, BettiOptions, BettiTable};

/// Groups of cases the suite knows how to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteFamily {
    CompleteBipartite,
    CmBipartite,
    NestedBipartite,
    Tripartite,
    FourPartite,
    CompleteGraph,
    Multipartite,
    ExplicitComplexes,
}

impl SuiteFamily {
    pub const ALL: [SuiteFamily; 8] = [
        SuiteFamily::CompleteBipartite,
        SuiteFamily::CmBipartite,
        SuiteFamily::NestedBipartite,
        SuiteFamily::Tripartite,
        SuiteFamily::FourPartite,
        SuiteFamily::CompleteGraph,
        SuiteFamily::Multipartite,
        SuiteFamily::ExplicitComplexes,
    ];
}

impl std::str::FromStr for SuiteFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteFamily::ALL
            .into_iter()
            .find(|f| serde_json::to_value(f).ok().and_then(|v| v.as_str().map(|t| t == s)) == Some(true))
            .ok_or_else(|| Error::Parse(format!("unknown suite family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Theorem-backed prediction equals the engine value.
    Match,
    /// Theorem-backed prediction differs from the engine value.
    Mismatch,
    ConjectureConfirmed,
    CounterexampleCandidate,
    /// A tabulated closed form without derivation disagrees with the
    /// max-formula it is meant to simplify.
    TableDiscrepancy,
    /// The engine ran but no statement predicts this quantity here.
    NoOracle,
    /// The computation hit a resource cap.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub prediction: Prediction,
    pub engine: Option<Value>,
    pub status: Status,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Full engine output, attached to counterexample candidates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub field_char: u64,
    pub max_m: usize,
    pub max_s: usize,
    pub families: Vec<SuiteFamily>,
    pub cases: Vec<Case>,
    pub complexes: Vec<ComplexValidation>,
    pub summary: BTreeMap<Status, usize>,
    pub complexes_failed: usize,
}

impl VerificationReport {
    pub fn theorem_mismatches(&self) -> usize {
        self.summary.get(&Status::Mismatch).copied().unwrap_or(0) + self.complexes_failed
    }

    pub fn counterexample_candidates(&self) -> usize {
        self.summary
            .get(&Status::CounterexampleCandidate)
            .copied()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One line per case and per explicit complex, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let params: Vec<String> = c.prediction.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let engine = c.engine.as_ref().map_or("-".to_string(), |v| v.to_string());
            let _ = write!(
                out,
                "{:<24} {:<32} {:<28} {:<17} predicted {} engine {}",
                status_name(c.status),
                c.prediction.source.to_string(),
                params.join(" "),
                quantity_name(c.prediction.quantity),
                c.prediction.value,
                engine
            );
            if let Some(k) = &c.prediction.case {
                let _ = write!(out, "  [{k}]");
            }
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        for v in &self.complexes {
            let failed: Vec<&str> = v.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            let _ = writeln!(
                out,
                "{:<24} explicit {} s={} grading={:?} ranks={:?}{}",
                if v.all_passed() { "match" } else { "mismatch" },
                v.family,
                v.power,
                v.grading,
                v.ranks,
                if failed.is_empty() {
                    String::new()
                } else {
                    format!(" failed: {}", failed.join(","))
                }
            );
        }
        let counts: Vec<String> = self
            .summary
            .iter()
            .map(|(s, n)| format!("{}={n}", status_name(*s)))
            .collect();
        let _ = writeln!(
            out,
            "summary: {} cases [{}], {} explicit complexes ({} failed), field {}",
            self.cases.len(),
            counts.join(", "),
            self.complexes.len(),
            self.complexes_failed,
            if self.field_char == 0 { "QQ".to_string() } else { format!("GF({})", self.field_char) }
        );
        out
    }
}

fn status_name(s: Status) -> String {
    serde_json::to_value(s).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn quantity_name(q: Quantity) -> String {
    serde_json::to_value(q).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

/// Engine output for one ideal, computed once and shared by its predictions.
struct EngineRun {
    ideal: MonomialIdeal,
    table: BettiTable,
    millis: u64,
}

impl EngineRun {
    fn value(&self, q: Quantity) -> Value {
        match q {
            Quantity::Reg => Value::Int(self.table.regularity().ideal),
            Quantity::BettiVector => {
                Value::Vector(self.table.betti_vector()[1..].iter().map(|&b| b as i64).collect())
            }
            Quantity::Mu => Value::Int(self.ideal.mu() as i64),
            Quantity::Pdim => Value::Int(self.table.pdim() as i64),
            Quantity::Depth => Value::Int(self.table.depth() as i64),
            Quantity::HilbertNumerator => {
                Value::Polynomial(self.table.hilbert_series().reduced_numerator.coeffs().to_vec())
            }
            Quantity::LinearQuotients => {
                Value::Int(self.ideal.has_linear_quotients_grevlex().holds as i64)
            }
        }
    }

    fn dump(&self) -> serde_json::Value {
        let reg = self.table.regularity();
        serde_json::json!({
            "generators": self.ideal.display_generators(),
            "grading": self.ideal.grading().degrees(),
            "betti": self.table.entries(),
            "reg": reg.ideal,
            "pdim": self.table.pdim(),
            "depth": self.table.depth(),
        })
    }
}

/// What to compare for one ideal.
struct Job {
    build: Box<dyn Fn() -> Result<MonomialIdeal> + Send + Sync>,
    predictions: Vec<(Prediction, Kind)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Theorem,
    Conjecture,
    Table,
    NoOracle,
}

fn run(ideal: Result<MonomialIdeal>, opts: &BettiOptions) -> Result<EngineRun> {
    let ideal = ideal?;
    let start = Instant::now();
    let table = betti_table(&ideal, opts)?;
    Ok(EngineRun {
        ideal,
        table,
        millis: start.elapsed().as_millis() as u64,
    })
}

fn evaluate(job: &Job, opts: &BettiOptions) -> Vec<Case> {
    let engine = run((job.build)(), opts);
    job.predictions
        .iter()
        .map(|(p, kind)| match &engine {
            Err(e) => Case {
                prediction: p.clone(),
                engine: None,
                status: if e.is_resource_cap() { Status::Skipped } else { Status::Mismatch },
                runtime_ms: 0,
                note: Some(e.to_string()),
                dump: None,
            },
            Ok(run) => {
                let got = run.value(p.quantity);
                let equal = got == p.value;
                let status = match (kind, equal) {
                    (Kind::Theorem, true) => Status::Match,
                    (Kind::Theorem, false) => Status::Mismatch,
                    (Kind::Conjecture, true) => Status::ConjectureConfirmed,
                    (Kind::Conjecture, false) => Status::CounterexampleCandidate,
                    (Kind::Table, true) => Status::Match,
                    (Kind::Table, false) => Status::TableDiscrepancy,
                    (Kind::NoOracle, _) => Status::NoOracle,
                };
                let note = match kind {
                    Kind::NoOracle => Some(format!(
                        "extrapolated formula {}",
                        if equal { "agrees" } else { "disagrees" }
                    )),
                    _ => None,
                };
                Case {
                    prediction: p.clone(),
                    dump: (status == Status::CounterexampleCandidate).then(|| run.dump()),
                    engine: Some(got),
                    status,
                    runtime_ms: run.millis,
                    note,
                }
            }
        })
        .collect()
}

fn ints(v: Vec<i64>) -> Value {
    Value::Vector(v)
}

fn part_params(parts: &[usize], s: usize) -> Vec<(String, i64)> {
    let mut p: Vec<(String, i64)> = parts
        .iter()
        .enumerate()
        .map(|(i, &n)| (format!("n{}", i + 1), n as i64))
        .collect();
    p.push(("s".into(), s as i64));
    p
}

fn pred(source: Source, q: Quantity, params: &[(String, i64)], value: Value) -> Prediction {
    Prediction {
        source,
        quantity: q,
        params: params.iter().cloned().collect(),
        value,
        case: None,
    }
}

fn multipartite_job(parts: Vec<usize>, s: usize) -> Job {
    let p = parts.clone();
    Job {
        build: Box::new(move || {
            cover_ideal(&Graph::complete_multipartite(&p)?, true)?.power(s as u32)
        }),
        predictions: Vec::new(),
    }
}

fn ordered_tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn jobs_for(family: SuiteFamily, max_m: usize, max_s: usize) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    match family {
        SuiteFamily::CompleteBipartite => {
            for n in 1..=max_m {
                for m in 1..=n {
                    for s in 1..=max_s {
                        let params = vec![("m".to_string(), m as i64), ("n".into(), n as i64), ("s".into(), s as i64)];
                        let value = predict::predict_reg_complete_bipartite(m, n, s)?;
                        // small cases uncompressed, the rest in the skeleton ring
                        let compressed = m + n > 8;
                        jobs.push(Job {
                            build: Box::new(move || {
                                cover_ideal(&Graph::complete_multipartite(&[m, n])?, compressed)?.power(s as u32)
                            }),
                            predictions: vec![(
                                pred(Source::CompleteBipartite, Quantity::Reg, &params, Value::Int(value)),
                                Kind::Theorem,
                            )],
                        });
                    }
                }
            }
        }
        SuiteFamily::CmBipartite => {
            for n in 2..=max_m {
                let (mu, pdim, slope) = predict::predict_mu_and_pdim_cm_family(n)?;
                for s in 1..=max_s.min(3) {
                    let params = vec![("n".to_string(), n as i64), ("s".into(), s as i64)];
                    let mut predictions = vec![(
                        pred(Source::CmBipartite, Quantity::Reg, &params, Value::Int(slope * s as i64)),
                        Kind::Theorem,
                    )];
                    if s == 1 {
                        for (q, v) in [
                            (Quantity::Mu, mu),
                            (Quantity::Pdim, pdim),
                            (Quantity::LinearQuotients, 1),
                        ] {
                            predictions.push((pred(Source::CmBipartite, q, &params, Value::Int(v)), Kind::Theorem));
                        }
                    }
                    jobs.push(Job {
                        build: Box::new(move || cover_ideal(&Graph::cm_bipartite(n)?, false)?.power(s as u32)),
                        predictions,
                    });
                }
            }
        }
        SuiteFamily::NestedBipartite => {
            let block_max = max_m.min(3);
            for t in ordered_tuples(4, block_max) {
                if t.iter().sum::<usize>() > 2 * max_m {
                    continue;
                }
                let (n1, n2, m1, m2) = (t[0], t[1], t[2], t[3]);
                for s in 1..=max_s {
                    let params: Vec<(String, i64)> = [("n1", n1), ("n2", n2), ("m1", m1), ("m2", m2), ("s", s)]
                        .iter()
                        .map(|&(k, v)| (k.to_string(), v as i64))
                        .collect();
                    let source = if s == 1 { Source::NestedBipartiteFirst } else { Source::NestedBipartitePowers };
                    let reg = predict::predict_reg_nested_bipartite(n1, n2, m1, m2, s)?;
                    let mut predictions = vec![
                        (pred(source, Quantity::Reg, &params, Value::Int(reg)), Kind::Theorem),
                        (
                            pred(source, Quantity::BettiVector, &params, ints(predict::predict_betti_p4_power(s)?)),
                            Kind::Theorem,
                        ),
                    ];
                    if s >= 2 {
                        let (a, b, c, d, si) = (n1 as i64, n2 as i64, m1 as i64, m2 as i64, s as i64);
                        for form in predict::NESTED_CLOSED_FORMS {
                            if (form.applies)(a, b, c, d) {
                                let mut pr = pred(Source::NestedClosedForm, Quantity::Reg, &params, Value::Int((form.value)(a, b, c, d, si)));
                                pr.case = Some(form.name.to_string());
                                predictions.push((pr, Kind::Theorem));
                            }
                        }
                        for form in predict::NESTED_TABLE_FORMS {
                            if (form.applies)(a, b, c, d) {
                                let mut pr = pred(Source::NestedClosedForm, Quantity::Reg, &params, Value::Int((form.value)(a, b, c, d, si)));
                                pr.case = Some(format!("table row {}", form.name));
                                predictions.push((pr, Kind::Table));
                            }
                        }
                    }
                    jobs.push(Job {
                        build: Box::new(move || {
                            cover_ideal(&Graph::nested_bipartite(n1, n2, m1, m2)?, true)?.power(s as u32)
                        }),
                        predictions,
                    });
                }
            }
        }
        SuiteFamily::Tripartite | SuiteFamily::FourPartite => {
            let (m, source, min_s, size_max) = if family == SuiteFamily::Tripartite {
                (3, Source::Tripartite, 2, max_m)
            } else {
                (4, Source::FourPartite, 3, max_m.min(3))
            };
            for parts in ordered_tuples(m, size_max) {
                for s in 1..=max_s {
                    let params = part_params(&parts, s);
                    let mut job = multipartite_job(parts.clone(), s);
                    job.predictions.push((
                        pred(source, Quantity::BettiVector, &params, ints(predict::predict_betti_km_power(m, s)?)),
                        Kind::Theorem,
                    ));
                    if s >= min_s {
                        let v = predict::multipartite_max_formula(&parts, s)?;
                        job.predictions.push((pred(source, Quantity::Reg, &params, Value::Int(v)), Kind::Theorem));
                    }
                    if parts.iter().all(|&p| p == 1) {
                        let h = if m == 3 { predict::predict_hilbert_k3(s) } else { predict::predict_hilbert_k4(s) };
                        job.predictions.push((
                            pred(source, Quantity::HilbertNumerator, &params, Value::Polynomial(h)),
                            Kind::Theorem,
                        ));
                        job.predictions.push((
                            pred(source, Quantity::Reg, &params, Value::Int(((m - 1) * s) as i64)),
                            Kind::Theorem,
                        ));
                    }
                    jobs.push(job);
                }
            }
        }
        SuiteFamily::CompleteGraph => {
            for m in 3..=max_m {
                for s in 1..=max_s {
                    let params = vec![("m".to_string(), m as i64), ("s".into(), s as i64)];
                    let betti = predict::predict_betti_km_power(m, s)?;
                    let kind = if m <= 4 {
                        Kind::Theorem
                    } else if s + 1 >= m {
                        Kind::Conjecture
                    } else {
                        Kind::NoOracle
                    };
                    let source = match m {
                        3 => Source::Tripartite,
                        4 => Source::FourPartite,
                        _ => Source::CompleteGraphBettiConjecture,
                    };
                    let predictions = vec![
                        (pred(source, Quantity::BettiVector, &params, ints(betti)), kind),
                        (
                            pred(
                                Source::CompleteGraphDepth,
                                Quantity::Depth,
                                &params,
                                Value::Int(predict::predict_depth_km_power(m, s)),
                            ),
                            Kind::Theorem,
                        ),
                    ];
                    jobs.push(Job {
                        build: Box::new(move || {
                            cover_ideal(&Graph::complete_multipartite(&vec![1; m])?, false)?.power(s as u32)
                        }),
                        predictions,
                    });
                }
            }
        }
        SuiteFamily::Multipartite => {
            for m in 5..=max_m {
                let mut seen = Vec::new();
                for parts in ordered_tuples(m, 2) {
                    let mut sorted = parts.clone();
                    sorted.sort_unstable();
                    if sorted != parts || seen.contains(&sorted) {
                        continue;
                    }
                    seen.push(sorted);
                    for s in 1..=max_s {
                        let Some((v, range)) = predict::predict_reg_multipartite(&parts, s)? else {
                            continue;
                        };
                        debug_assert_eq!(range, MultipartiteRange::Conjecture);
                        let params = part_params(&parts, s);
                        let mut job = multipartite_job(parts.clone(), s);
                        job.predictions.push((
                            pred(Source::MultipartiteRegConjecture, Quantity::Reg, &params, Value::Int(v)),
                            Kind::Conjecture,
                        ));
                        jobs.push(job);
                    }
                }
            }
        }
        SuiteFamily::ExplicitComplexes => {}
    }
    Ok(jobs)
}

fn complex_cases(max_s: usize) -> Vec<(Family, u32, Grading)> {
    let mut out = Vec::new();
    let std3 = Grading::standard(3);
    let std4 = Grading::standard(4);
    for s in 1..=max_s as u32 {
        out.push((Family::K3, s, std3.clone()));
        out.push((Family::K3, s, Grading::new(vec![2, 1, 3]).expect("positive")));
        out.push((Family::P4, s, std4.clone()));
        out.push((Family::P4, s, Grading::new(vec![2, 1, 1, 1]).expect("positive")));
        if s <= 4 {
            out.push((Family::K4, s, std4.clone()));
        }
    }
    out
}

fn validate_complex(family: Family, s: u32, grading: &Grading, opts: &BettiOptions) -> Result<ComplexValidation> {
    let c = build_explicit_complex(family, s, grading)?;
    let ideal = family.base_ideal(grading.clone())?.power(s)?;
    let table = betti_table(&ideal, opts)?;
    Ok(validate_explicit_complex(&c, &ideal, &table))
}

/// Runs every in-scope case. `max_m` bounds part counts and part sizes,
/// `max_s` bounds the power.
pub fn run_verification_suite(
    max_m: usize,
    max_s: usize,
    families: &[SuiteFamily],
    opts: &BettiOptions,
) -> Result<VerificationReport> {
    let mut families: Vec<SuiteFamily> = families.to_vec();
    families.sort();
    families.dedup();
    let mut jobs = Vec::new();
    for &f in &families {
        jobs.extend(jobs_for(f, max_m, max_s)?);
    }
    let complexes_in_scope = if families.contains(&SuiteFamily::ExplicitComplexes) {
        complex_cases(max_s)
    } else {
        Vec::new()
    };

    #[cfg(feature = "parallel")]
    let (cases, complexes) = {
        use rayon::prelude::*;
        let cases: Vec<Vec<Case>> = jobs.par_iter().map(|j| evaluate(j, opts)).collect();
        let complexes: Vec<Result<ComplexValidation>> = complexes_in_scope
            .par_iter()
            .map(|(f, s, g)| validate_complex(*f, *s, g, opts))
            .collect();
        (cases, complexes)
    };
    #[cfg(not(feature = "parallel"))]
    let (cases, complexes) = {
        let cases: Vec<Vec<Case>> = jobs.iter().map(|j| evaluate(j, opts)).collect();
        let complexes: Vec<Result<ComplexValidation>> = complexes_in_scope
            .iter()
            .map(|(f, s, g)| validate_complex(*f, *s, g, opts))
            .collect();
        (cases, complexes)
    };

    let mut cases: Vec<Case> = cases.into_iter().flatten().collect();
    cases.sort_by(|a, b| {
        let key = |c: &Case| {
            (c.prediction.source, c.prediction.params.clone(), c.prediction.quantity, c.prediction.case.clone())
        };
        key(a).cmp(&key(b))
    });
    let complexes: Vec<ComplexValidation> = complexes.into_iter().collect::<Result<_>>()?;
    let mut summary = BTreeMap::new();
    for c in &cases {
        *summary.entry(c.status).or_insert(0) += 1;
    }
    let complexes_failed = complexes.iter().filter(|c| !c.all_passed()).count();
    Ok(VerificationReport {
        field_char: opts.field.characteristic(),
        max_m,
        max_s,
        families,
        cases,
        complexes,
        summary,
        complexes_failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_family_list_gives_empty_report() {
        let r = run_verification_suite(4, 4, &[], &BettiOptions::default()).unwrap();
        assert!(r.cases.is_empty());
        assert!(r.complexes.is_empty());
        assert_eq!(r.theorem_mismatches(), 0);
    }

    #[test]
    fn small_bipartite_suite_matches() {
        let r = run_verification_suite(3, 2, &[SuiteFamily::CompleteBipartite, SuiteFamily::CmBipartite], &BettiOptions::default())
            .unwrap();
        assert!(!r.cases.is_empty());
        assert_eq!(r.theorem_mismatches(), 0, "{}", r.to_text());
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("nested_bipartite".parse::<SuiteFamily>().unwrap(), SuiteFamily::NestedBipartite);
        assert!("cycles".parse::<SuiteFamily>().is_err());
    }
}
