//! Verification sweeps. Each suite expands into independent cases that
//! may run on a worker pool; results keep the enumeration order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use capelli_core::capelli::{
    eigenvalue_poly, first_order_eigenvalue, first_order_top_check, gamma, rho_from_root_data, rho_relation_check,
    rho_vector,
};
use capelli_core::exactalg::{int, rat, x_vars};
use capelli_core::jack::{jack, stanley_sides};
use capelli_core::okounkov::{interpolation_combinatorial, interpolation_vanishing};
use capelli_core::partitions::{contains, enumerate_partitions, partitions_of, subpartitions, SkewShape};
use capelli_core::symfunc::{
    containment_necessity, lr_coefficient, rectangular_decomposition, rotate180, skew_schur, FieldCase,
};
use capelli_core::weyl::{verify_appendix_report, OperatorCase};
use capelli_core::{Error, MultiPoly, Partition, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    OkounkovDual,
    Interpolation,
    Vanishing,
    Stanley,
    JackTop,
    Appendix,
    FirstOrder,
    Rectangular,
    Containment,
    Rho,
    Scalars,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::OkounkovDual,
        Suite::Interpolation,
        Suite::Vanishing,
        Suite::Stanley,
        Suite::JackTop,
        Suite::Appendix,
        Suite::FirstOrder,
        Suite::Rectangular,
        Suite::Containment,
        Suite::Rho,
        Suite::Scalars,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OkounkovDual => "okounkov-dual",
            Suite::Interpolation => "interpolation",
            Suite::Vanishing => "vanishing",
            Suite::Stanley => "stanley",
            Suite::JackTop => "jack-top",
            Suite::Appendix => "appendix",
            Suite::FirstOrder => "first-order",
            Suite::Rectangular => "rectangular",
            Suite::Containment => "containment",
            Suite::Rho => "rho",
            Suite::Scalars => "scalars",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite '{}'", s))
    }
}

/// Optional overrides of the default sweep sizes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bounds {
    /// Largest partition weight.
    pub max_size: Option<usize>,
    pub max_r: Option<usize>,
    pub max_n: Option<usize>,
    /// Largest degree `m` (power, rectangle width or box side).
    pub max_m: Option<usize>,
}

impl Bounds {
    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in
            [("max-size", self.max_size), ("max-r", self.max_r), ("max-n", self.max_n), ("max-m", self.max_m)]
        {
            if v == Some(0) {
                return Err(format!("--{} must be positive", name));
            }
        }
        Ok(())
    }

    fn size(&self, default: usize) -> usize {
        self.max_size.unwrap_or(default)
    }

    fn r(&self, default: usize) -> usize {
        self.max_r.unwrap_or(default)
    }

    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn m(&self, default: usize) -> usize {
        self.max_m.unwrap_or(default)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub params: Value,
    pub pass: bool,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

type Check = Box<dyn Fn() -> capelli_core::Result<(bool, Value)> + Send + Sync>;

struct Job {
    params: Value,
    check: Check,
}

fn job(params: Value, check: impl Fn() -> capelli_core::Result<(bool, Value)> + Send + Sync + 'static) -> Job {
    Job { params, check: Box::new(check) }
}

fn pass() -> capelli_core::Result<(bool, Value)> {
    Ok((true, json!({})))
}

fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> capelli_core::Result<(bool, Value)> {
    if ok {
        pass()
    } else {
        Ok((false, witness()))
    }
}

fn taus() -> [Rational; 3] {
    [rat(1, 2), int(1), int(2)]
}

fn fields() -> [u32; 3] {
    [1, 2, 4]
}

fn case_json(c: &FieldCase) -> Value {
    json!({"d": c.d(), "n": c.n, "r": c.r})
}

fn poly_json(p: &MultiPoly) -> Value {
    serde_json::to_value(p.to_json()).expect("polynomial JSON")
}

fn monomial_map_json(m: &BTreeMap<Partition, Rational>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_csv(), Value::String(v.to_string()))).collect())
}

fn okounkov_dual(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for r in 1..=b.r(3) {
        for lambda in enumerate_partitions(b.size(3), r) {
            for tau in taus() {
                let params = json!({"lambda": lambda.to_csv(), "r": r, "tau": tau.to_string()});
                let lambda = lambda.clone();
                jobs.push(job(params, move || {
                    let comb = interpolation_combinatorial(&lambda, r, &tau)?;
                    for k in 0..=2 * lambda.weight() as i64 {
                        let alpha = rat(3 * k + 1, 3);
                        let a = comb.at_alpha(&alpha);
                        let v = interpolation_vanishing(&lambda, r, &tau, &alpha)?;
                        if a != v {
                            return Ok((
                                false,
                                json!({"alpha": alpha.to_string(), "difference": poly_json(&(&a - &v))}),
                            ));
                        }
                    }
                    pass()
                }));
            }
        }
    }
    jobs
}

fn interpolation(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for r in 1..=b.r(3) {
        for lambda in enumerate_partitions(b.size(3), r) {
            for tau in taus() {
                let params = json!({"lambda": lambda.to_csv(), "r": r, "tau": tau.to_string()});
                let lambda = lambda.clone();
                jobs.push(job(params, move || {
                    let p = interpolation_combinatorial(&lambda, r, &tau)?;
                    for mu in enumerate_partitions(lambda.weight(), r) {
                        let v = p.at_shifted(&mu)?;
                        if (mu == lambda) == v.is_zero() {
                            return Ok((false, json!({"mu": mu.to_csv(), "value": poly_json(&v)})));
                        }
                    }
                    pass()
                }));
            }
        }
    }
    jobs
}

fn cases_with(rs: impl IntoIterator<Item = usize>, ns: impl Fn(usize) -> Vec<usize>) -> Vec<FieldCase> {
    let mut out = Vec::new();
    for r in rs {
        for n in ns(r) {
            for d in fields() {
                if let Ok(c) = FieldCase::new(d, n, r) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn vanishing(b: &Bounds) -> Vec<Job> {
    let size = b.size(3);
    let mut jobs = Vec::new();
    for case in cases_with(1..=b.r(3), |r| vec![2 * r, 2 * r + 1, 2 * r + 2]) {
        for lambda in enumerate_partitions(size, case.r) {
            let params = json!({"lambda": lambda.to_csv(), "case": case_json(&case)});
            jobs.push(job(params, move || {
                let ev = eigenvalue_poly(&lambda, &case)?;
                for nu in enumerate_partitions(size, case.r) {
                    if contains(&lambda, &nu) {
                        continue;
                    }
                    let v = ev.at_shifted(&nu)?;
                    if !v.is_zero() {
                        return Ok((false, json!({"nu": nu.to_csv(), "residual": poly_json(&v)})));
                    }
                }
                pass()
            }));
        }
    }
    jobs
}

fn stanley(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for m in 1..=b.m(3) {
        for r in 1..=b.r(3) {
            for d in fields() {
                jobs.push(job(json!({"m": m, "r": r, "d": d}), move || {
                    let s = stanley_sides(m, r, d)?;
                    verdict(s.holds(), || json!({"lhs": monomial_map_json(&s.lhs), "rhs": monomial_map_json(&s.rhs)}))
                }));
            }
        }
    }
    jobs
}

fn jack_top(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for r in 1..=b.r(3) {
        for lambda in enumerate_partitions(b.size(4), r) {
            for tau in taus() {
                let params = json!({"lambda": lambda.to_csv(), "r": r, "tau": tau.to_string()});
                let lambda = lambda.clone();
                jobs.push(job(params, move || {
                    let p = interpolation_combinatorial(&lambda, r, &tau)?;
                    let vars = x_vars(r);
                    let grading: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                    let top = p.poly.top_homogeneous(&grading);
                    let j = jack(&lambda, r, &tau)?.to_poly(2);
                    verdict(top == j, || json!({"top": poly_json(&top), "jack": poly_json(&j)}))
                }));
            }
        }
    }
    jobs
}

fn appendix(b: &Bounds) -> Vec<Job> {
    let cases: Vec<(u32, usize, usize)> = if b.max_n.is_none() && b.max_r.is_none() {
        vec![(1, 2, 1), (1, 3, 1), (1, 4, 2), (2, 2, 1), (2, 3, 1), (4, 2, 1)]
    } else {
        let mut v = Vec::new();
        for d in fields() {
            for n in 2..=b.n(3) {
                for r in 1..=b.r(1).min(n / 2) {
                    v.push((d, n, r));
                }
            }
        }
        v
    };
    cases
        .into_iter()
        .map(|(d, n, r)| {
            job(json!({"d": d, "n": n, "r": r}), move || {
                let rep = verify_appendix_report(&OperatorCase::new(d, n, r)?)?;
                verdict(rep.equal, || {
                    json!({
                        "normal_form_sizes": {"lhs": rep.lhs_terms, "rhs": rep.rhs_terms},
                        "residual_euler_multiple": rep.residual_euler_multiple.as_ref().map(|c| c.to_string()),
                        "residual": rep.residual.to_string(),
                    })
                })
            })
        })
        .collect()
}

fn first_order(b: &Bounds) -> Vec<Job> {
    cases_with(1..=b.r(4), |r| vec![2 * r, 2 * r + 2])
        .into_iter()
        .map(|case| {
            job(case_json(&case), move || {
                let ok = first_order_top_check(&case)?;
                verdict(
                    ok,
                    || json!({"eigenvalue": poly_json(&first_order_eigenvalue(&case).expect("computed above"))}),
                )
            })
        })
        .collect()
}

fn rectangular(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for case in cases_with(1..=b.r(2), |r| vec![2 * r, 2 * r + 1]) {
        for m in 1..=b.m(3) {
            let mut params = case_json(&case);
            params["m"] = json!(m);
            jobs.push(job(params, move || {
                let labels = match rectangular_decomposition(&case, m) {
                    Ok(l) => l,
                    Err(Error::PropertyViolation(msg)) => return Ok((false, json!({ "violation": msg }))),
                    Err(e) => return Err(e),
                };
                let mut sorted = labels.clone();
                sorted.sort();
                sorted.dedup();
                let mut expect = subpartitions(&Partition::rectangle(case.r, m));
                expect.sort();
                let ok = sorted.len() == labels.len() && sorted == expect;
                verdict(ok, || json!({"labels": labels.iter().map(|p| p.to_csv()).collect::<Vec<_>>()}))
            }));
        }
    }
    jobs
}

fn containment(b: &Bounds) -> Vec<Job> {
    let (size, max_m) = (b.size(3), b.m(4));
    cases_with(1..=b.r(2), |r| vec![2 * r, 2 * r + 1])
        .into_iter()
        .map(|case| {
            job(case_json(&case), move || {
                let parts = enumerate_partitions(size, case.r);
                for lambda in &parts {
                    for nu in &parts {
                        let lo = lambda.get(0).max(nu.get(0)).max(1);
                        for m in lo..=max_m {
                            if !containment_necessity(&case, lambda, nu, m)? {
                                return Ok((false, json!({"lambda": lambda.to_csv(), "nu": nu.to_csv(), "m": m})));
                            }
                        }
                    }
                }
                pass()
            })
        })
        .collect()
}

fn rho(b: &Bounds) -> Vec<Job> {
    cases_with(1..=b.r(4), |r| (2 * r..=b.n(10)).collect())
        .into_iter()
        .map(|case| {
            job(case_json(&case), move || {
                let a = rho_vector(&case);
                let c = rho_from_root_data(&case);
                let rel = rho_relation_check(&case);
                let strs = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
                verdict(
                    a == c && rel,
                    || json!({"formula": strs(&a.entries), "root_data": strs(&c.entries), "relation": rel}),
                )
            })
        })
        .collect()
}

fn scalars(b: &Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for d in fields() {
        jobs.push(job(json!({"check": "gamma", "d": d}), move || {
            let g = gamma(&Partition::new(vec![1]).expect("partition"), d);
            verdict(g == int(-4), || json!({"gamma": g.to_string()}))
        }));
    }
    let side = b.m(3);
    for outer in subpartitions(&Partition::rectangle(side, side)) {
        for inner in subpartitions(&outer) {
            let params = json!({"check": "rotation", "outer": outer.to_csv(), "inner": inner.to_csv()});
            let shape = SkewShape::new(outer.clone(), inner).expect("inner fits in outer");
            jobs.push(job(params, move || {
                let a = skew_schur(&shape);
                let rot = rotate180(&shape);
                let c = skew_schur(&rot);
                verdict(a == c, || json!({"skew": a.to_string(), "rotated": c.to_string()}))
            }));
        }
    }
    for w in 0..=b.size(6) {
        for nu in partitions_of(w, w) {
            jobs.push(job(json!({"check": "lr", "nu": nu.to_csv()}), move || {
                for k in 0..=w {
                    for lambda in partitions_of(k, k) {
                        for mu in partitions_of(w - k, w - k) {
                            let c = lr_coefficient(&nu, &lambda, &mu);
                            let sym = c == lr_coefficient(&nu, &mu, &lambda);
                            let cont = c == 0 || (contains(&lambda, &nu) && contains(&mu, &nu));
                            if !(sym && cont) {
                                return Ok((
                                    false,
                                    json!({"lambda": lambda.to_csv(), "mu": mu.to_csv(), "coefficient": c}),
                                ));
                            }
                        }
                    }
                }
                pass()
            }));
        }
    }
    jobs
}

fn jobs_for(suite: Suite, b: &Bounds) -> Vec<Job> {
    match suite {
        Suite::OkounkovDual => okounkov_dual(b),
        Suite::Interpolation => interpolation(b),
        Suite::Vanishing => vanishing(b),
        Suite::Stanley => stanley(b),
        Suite::JackTop => jack_top(b),
        Suite::Appendix => appendix(b),
        Suite::FirstOrder => first_order(b),
        Suite::Rectangular => rectangular(b),
        Suite::Containment => containment(b),
        Suite::Rho => rho(b),
        Suite::Scalars => scalars(b),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| {
                jobs_for(s, b).into_iter().map(move |j| {
                    let mut params = j.params;
                    params["suite"] = json!(s.name());
                    Job { params, check: j.check }
                })
            })
            .collect(),
    }
}

/// Runs a suite on the current rayon pool.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<SuiteReport, String> {
    bounds.validate()?;
    let start = Instant::now();
    let jobs = jobs_for(suite, bounds);
    let cases: Vec<CaseReport> = jobs
        .par_iter()
        .map(|j| {
            let (pass, witness) = match (j.check)() {
                Ok(v) => v,
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            CaseReport { params: j.params.clone(), pass, witness }
        })
        .collect();
    let pass = cases.iter().all(|c| c.pass);
    Ok(SuiteReport { suite: suite.name().to_string(), cases, pass, elapsed: start.elapsed() })
}

/// Runs a suite on a dedicated pool of `jobs` threads (`0` for the default).
pub fn run_suite_with_jobs(suite: Suite, bounds: &Bounds, jobs: usize) -> Result<SuiteReport, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
    pool.install(|| run_suite(suite, bounds))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain(std::iter::once(&Suite::All)) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn zero_bounds_rejected() {
        let b = Bounds { max_r: Some(0), ..Bounds::default() };
        assert!(run_suite(Suite::Rho, &b).is_err());
    }

    #[test]
    fn small_rho_suite_passes() {
        let b = Bounds { max_r: Some(2), max_n: Some(5), ..Bounds::default() };
        let rep = run_suite(Suite::Rho, &b).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.cases.len(), 3 * (4 + 2));
    }
}
