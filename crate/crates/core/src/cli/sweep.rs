//! Grid evaluation behind `g31 sweep`.

use std::time::Instant;

use serde::Serialize;

use crate::bounds::{all_estimates, Direction};
use crate::cli::CliError;
use crate::combinat::{binomial, c_fraction, Rational};
use crate::construction::build_construction;
use crate::solver::{
    branch_and_bound_r, brute_force_r, local_search_r, SearchConfig, Status, DEFAULT_ENUMERATION_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Construction,
    Heuristic,
    Exact,
    Oracle,
    Bounds,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LRule {
    Absolute(Vec<u64>),
    /// Densities `c`; `l = round((1-c) C(n,3))`, halves rounding down.
    Density(Vec<Rational>),
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub rule: LRule,
    pub methods: Vec<Method>,
    pub restarts: usize,
    pub search: SearchConfig,
    pub node_budget: Option<u64>,
}

/// One output line. `elapsed_ms` is the only column that varies between
/// identical runs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub l: u64,
    pub c_n: f64,
    pub value: f64,
    pub direction: String,
    pub validity: String,
    pub source: String,
    pub elapsed_ms: f64,
}

/// Exact decimal such as `0.35` or `1` as a rational.
pub fn parse_decimal(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("bad decimal {s:?}"));
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if frac.len() > 18 {
        return Err(bad());
    }
    let scale = 10i128.pow(frac.len() as u32);
    let whole: i128 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let part: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    Ok(Rational::new(whole * scale + part, scale))
}

/// `round((1 - c) * total)` with exact halves going down.
pub fn l_from_density(c: Rational, total: u64) -> u64 {
    let x = (Rational::one() - c) * Rational::integer(total.into());
    (x - Rational::new(1, 2)).ceil().clamp(0, total.into()) as u64
}

fn dir(d: Direction) -> String {
    serde_json::to_value(d).unwrap().as_str().unwrap().to_string()
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    let mut rows = Vec::new();
    for n in spec.n_min..=spec.n_max {
        let total = binomial(n as u64, 3)?;
        let ls: Vec<u64> = match &spec.rule {
            LRule::Absolute(v) => v.iter().copied().filter(|&l| l <= total).collect(),
            LRule::Density(cs) => cs
                .iter()
                .filter(|c| !c.is_negative() && *c <= &Rational::one())
                .map(|&c| l_from_density(c, total))
                .collect(),
        };
        for l in ls {
            let c_n = c_fraction(n, l)?.to_f64();
            for &m in &spec.methods {
                let t0 = Instant::now();
                let mut push = |value: f64, direction: String, validity: &str, source: &str, t0: Instant| {
                    rows.push(SweepRow {
                        n,
                        l,
                        c_n,
                        value,
                        direction,
                        validity: validity.into(),
                        source: source.into(),
                        elapsed_ms: t0.elapsed().as_secs_f64() * 1e3,
                    })
                };
                match m {
                    Method::Construction => {
                        let p = build_construction(n, l)?;
                        push(p.actual_edges as f64, "upper".into(), "exact-finite-n", "construction", t0);
                    }
                    Method::Heuristic => {
                        let cfg = SearchConfig { restarts: spec.restarts, ..spec.search.clone() };
                        let r = local_search_r(n, l, &cfg)?;
                        push(r.min_edges as f64, "upper".into(), "exact-finite-n", "heuristic", t0);
                    }
                    Method::Exact => {
                        if n > 30 {
                            continue;
                        }
                        let cfg =
                            SearchConfig { node_budget: spec.node_budget.or(Some(5_000_000)), ..spec.search.clone() };
                        let r = branch_and_bound_r(n, l, &cfg)?;
                        let d = if r.status == Status::ProvenOptimal { "exact" } else { "upper" };
                        push(r.min_edges as f64, d.into(), "exact-finite-n", "branch-and-bound", t0);
                    }
                    Method::Oracle => {
                        let budget = spec.node_budget.map_or(DEFAULT_ENUMERATION_BUDGET, u128::from);
                        match brute_force_r(n, l, budget) {
                            Ok(r) => push(r.min_edges as f64, "exact".into(), "exact-finite-n", "oracle", t0),
                            Err(crate::Error::OverBudget { .. }) => continue,
                            Err(e) => return Err(e.into()),
                        }
                    }
                    Method::Bounds => {
                        for e in all_estimates(n, l, None, 0.0)? {
                            let validity = serde_json::to_value(e.validity).unwrap();
                            push(e.value, dir(e.direction), validity.as_str().unwrap(), e.source.label(), t0);
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("0.35").unwrap(), Rational::new(7, 20));
        assert_eq!(parse_decimal("1").unwrap(), Rational::one());
        assert_eq!(parse_decimal(".5").unwrap(), Rational::new(1, 2));
        assert!(parse_decimal("-0.1").is_err());
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn density_rounding_ties_down() {
        // (1 - 0.5) * 5 = 2.5 -> 2
        assert_eq!(l_from_density(Rational::new(1, 2), 5), 2);
        assert_eq!(l_from_density(Rational::new(1, 2), 20), 10);
        assert_eq!(l_from_density(Rational::new(48, 100), 5), 3);
        assert_eq!(l_from_density(Rational::zero(), 120), 120);
        assert_eq!(l_from_density(Rational::one(), 120), 0);
    }

    #[test]
    fn sweep_rows_in_range() {
        let spec = SweepSpec {
            n_min: 5,
            n_max: 8,
            rule: LRule::Density((0..=10).map(|k| Rational::new(k, 10)).collect()),
            methods: vec![Method::Construction, Method::Bounds, Method::Oracle],
            restarts: 1,
            search: SearchConfig::default(),
            node_budget: None,
        };
        let rows = run_sweep(&spec).unwrap();
        for r in &rows {
            assert!(r.l <= binomial(r.n as u64, 3).unwrap());
        }
        assert!(rows.iter().any(|r| r.source == "oracle" && r.n == 6));
    }
}
