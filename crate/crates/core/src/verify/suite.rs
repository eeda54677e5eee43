use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use chrono::{SecondsFormat, Utc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::report::Report;
use super::{Form, Sides, Theorem, Verifier, VerifyRecord};
use crate::error::{Error, Gate, Result};
use crate::field::{orthogonality_tally, CharacterIndex, FqElement, FqField};
use crate::gauss::{default_tolerance, GaussSums};

/// A named group of theorems, as selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Mt1,
    Cor2,
    Bs1,
    Mc,
    Hessian,
    Lemma31,
    Lemma5,
    Eq29,
    Gauss,
    Ortho,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Mt1 => "mt1",
            Suite::Cor2 => "cor2",
            Suite::Bs1 => "bs1",
            Suite::Mc => "mc",
            Suite::Hessian => "hessian",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma5 => "lemma5",
            Suite::Eq29 => "eq29",
            Suite::Gauss => "gauss",
            Suite::Ortho => "ortho",
            Suite::All => "all",
        }
    }

    /// Theorems run by this suite; the corrected forms only when asked for.
    pub fn theorems(self, corrected: bool) -> Vec<Theorem> {
        use Theorem::*;
        let printed: &[Theorem] = match self {
            Suite::Mt1 => &[Mt1],
            Suite::Cor2 => &[Cor2_1, Cor2_2],
            Suite::Bs1 => &[Bs1_1, Bs1_2],
            Suite::Mc => &[Mc],
            Suite::Hessian => &[Hessian],
            Suite::Lemma31 => &[Lemma31],
            Suite::Lemma5 => &[Lemma5],
            Suite::Eq29 => &[Eq29],
            Suite::Gauss => &[GaussGk, GaussTheta, GaussDh],
            Suite::Ortho => &[Ortho],
            Suite::All => &Theorem::ALL[..14],
        };
        let fixes: &[Theorem] = match self {
            Suite::Mt1 => &[Mt1Corrected],
            Suite::Cor2 => &[Cor2_1Corrected, Cor2_2Corrected],
            Suite::Bs1 => &[Bs1_2Corrected],
            Suite::All => &Theorem::ALL[14..],
            _ => &[],
        };
        let mut out = printed.to_vec();
        if corrected {
            out.extend_from_slice(fixes);
        }
        out
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::Mt1,
            Suite::Cor2,
            Suite::Bs1,
            Suite::Mc,
            Suite::Hessian,
            Suite::Lemma31,
            Suite::Lemma5,
            Suite::Eq29,
            Suite::Gauss,
            Suite::Ortho,
            Suite::All,
        ];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Suite {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How parameter tuples are chosen.
///
/// `Standard` is exhaustive except for the two families whose tuple space grows
/// like `q^2`: 20 seeded curves per field for `MC` and at most 1000 seeded tuples
/// per branch and field for the `(a, b)` identity. `Sample(n)` draws at most `n`
/// seeded tuples per theorem and field for every parameterized theorem; the
/// lemma, Gauss-sum and orthogonality checks stay exhaustive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Standard,
    Exhaustive,
    Sample(usize),
}

pub const MC_SAMPLES: usize = 20;
pub const BS1_SAMPLES: usize = 1000;

impl Strategy {
    fn sample_size(self, th: Theorem) -> Option<usize> {
        use Theorem::*;
        let parameterized = matches!(
            th,
            Mt1 | Mt1Corrected | Cor2_1 | Cor2_2 | Cor2_1Corrected | Cor2_2Corrected | Bs1_1 | Bs1_2 | Bs1_2Corrected | Mc | Hessian
        );
        match self {
            Strategy::Exhaustive => None,
            Strategy::Sample(n) => parameterized.then_some(n),
            Strategy::Standard => match th {
                Mc => Some(MC_SAMPLES),
                Bs1_1 | Bs1_2 | Bs1_2Corrected => Some(BS1_SAMPLES),
                _ => None,
            },
        }
    }
}

/// The configuration of one suite run; echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RangeSpec {
    pub suite: Suite,
    pub p_min: u64,
    pub p_max: u64,
    pub r: Vec<u32>,
    pub q_max: u64,
    /// Precision override; `None` selects the default rule per field.
    #[serde(rename = "K")]
    pub k: Option<u32>,
    pub strategy: Strategy,
    pub seed: u64,
    pub allow_p5: bool,
    pub corrected: bool,
    /// Record wall-clock time per record; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for RangeSpec {
    fn default() -> Self {
        RangeSpec {
            suite: Suite::All,
            p_min: 7,
            p_max: 50,
            r: vec![1, 2],
            q_max: 2500,
            k: None,
            strategy: Strategy::Standard,
            seed: 0,
            allow_p5: false,
            corrected: false,
            timings: false,
        }
    }
}

fn is_odd_prime(n: u64) -> bool {
    n > 2 && n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl RangeSpec {
    /// The fields `(p, r)` covered, ordered by `p` then `r`.
    pub fn fields(&self) -> Vec<(u64, u32)> {
        let mut rs = self.r.clone();
        rs.sort_unstable();
        rs.dedup();
        let mut out = Vec::new();
        for p in self.p_min..=self.p_max {
            if !is_odd_prime(p) {
                continue;
            }
            for &r in &rs {
                if p.checked_pow(r).is_some_and(|q| q <= self.q_max) {
                    out.push((p, r));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.r.is_empty() || self.r.contains(&0) {
            return Err(Error::InvalidParameter("the degree set must be nonempty and positive".into()));
        }
        if self.p_min > self.p_max {
            return Err(Error::InvalidParameter(format!("empty prime range [{}, {}]", self.p_min, self.p_max)));
        }
        if let Strategy::Sample(0) = self.strategy {
            return Err(Error::InvalidParameter("sample size must be positive".into()));
        }
        if self.fields().is_empty() {
            return Err(Error::InvalidParameter(format!(
                "no odd prime power p^r with p in [{}, {}], r in {:?}, q <= {}",
                self.p_min, self.p_max, self.r, self.q_max
            )));
        }
        Ok(())
    }
}

/// Records and gate rejections of one field.
#[derive(Debug, Default)]
pub(crate) struct FieldOutcome {
    pub records: Vec<VerifyRecord>,
    pub skipped: BTreeMap<(Theorem, Gate), usize>,
}

struct FieldRun<'a> {
    v: &'a Verifier,
    timings: bool,
    out: FieldOutcome,
}

impl FieldRun<'_> {
    /// Evaluates one tuple; true when it produced a record rather than a gate rejection.
    fn run(&mut self, th: Theorem, params: BTreeMap<String, String>, f: impl FnOnce() -> Result<Sides>) -> bool {
        let start = Instant::now();
        let mut rec = match f() {
            Ok(sides) => self.v.record(th, params, &sides),
            Err(Error::PreconditionFailed(g)) => {
                *self.out.skipped.entry((th, g)).or_default() += 1;
                return false;
            }
            Err(e) => {
                let mut rec = self.v.record(th, params, &Sides::Integer { lhs: 0, rhs: Err(e.clone()) });
                rec.lhs = format!("error: {e}");
                rec.pass = false;
                rec
            }
        };
        if self.timings {
            rec.elapsed_ms = start.elapsed().as_millis() as u64;
        }
        self.out.records.push(rec);
        true
    }

    fn skip(&mut self, th: Theorem, g: Gate) {
        *self.out.skipped.entry((th, g)).or_default() += 1;
    }

    fn params(&self, kv: &[(&str, FqElement)]) -> BTreeMap<String, String> {
        self.v.params(kv)
    }
}

fn int_params(kv: &[(&str, u64)]) -> BTreeMap<String, String> {
    kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// Visits indices of `0..space`: all of them in order, or, when a sample size is
/// given and smaller than the space, distinct seeded draws until `n` visits
/// produced a record.
fn visit(space: u64, n: Option<usize>, rng: &mut ChaCha8Rng, mut eval: impl FnMut(u64) -> bool) {
    match n {
        Some(n) if (n as u64) < space => {
            let mut seen = HashSet::new();
            let mut hits = 0;
            let mut draws = 0;
            while hits < n && (seen.len() as u64) < space && draws < 50 * n {
                draws += 1;
                let i = rng.random_range(0..space);
                if seen.insert(i) && eval(i) {
                    hits += 1;
                }
            }
        }
        _ => {
            for i in 0..space {
                eval(i);
            }
        }
    }
}

fn rng_for(seed: u64, p: u64, r: u32, th: Theorem) -> ChaCha8Rng {
    let mix = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (p << 24) ^ ((r as u64) << 16) ^ th as u64;
    ChaCha8Rng::seed_from_u64(mix)
}

fn form_of(th: Theorem) -> Form {
    use Theorem::*;
    match th {
        Mt1Corrected | Cor2_1Corrected | Cor2_2Corrected | Bs1_2Corrected => Form::Corrected,
        _ => Form::Printed,
    }
}

fn run_field(spec: &RangeSpec, theorems: &[Theorem], p: u64, r: u32) -> Result<FieldOutcome> {
    let field = Arc::new(FqField::build_with_limit(p, r, spec.q_max.max(p))?);
    let v = Verifier::from_field(field.clone(), spec.k)?.allow_p5(spec.allow_p5);
    let f = &*field;
    let q = f.q();
    let nz = |i: u64| f.from_index(i + 1).expect("index below q");
    let el = |i: u64| f.from_index(i).expect("index below q");
    let mut run = FieldRun { v: &v, timings: spec.timings, out: FieldOutcome::default() };

    for &th in theorems {
        let n = spec.strategy.sample_size(th);
        let mut rng = rng_for(spec.seed, p, r, th);
        let form = form_of(th);
        use Theorem::*;
        match th {
            Mt1 | Mt1Corrected => {
                visit(q, n, &mut rng, |i| {
                    let d = el(i);
                    run.run(th, run.params(&[("d", d)]), || v.mt1(d, form))
                });
            }
            Cor2_1 | Cor2_2 | Cor2_1Corrected | Cor2_2Corrected => {
                let (branch, key) = if matches!(th, Cor2_1 | Cor2_1Corrected) { (1, "k") } else { (2, "h") };
                visit(q, n, &mut rng, |i| {
                    let d = el(i);
                    let (m, nn) = match v.bridge(d, form) {
                        Ok(x) => x,
                        Err(Error::PreconditionFailed(g)) => {
                            run.skip(th, g);
                            return false;
                        }
                        Err(e) => return run.run(th, run.params(&[("d", d)]), || Err(e)),
                    };
                    let mut any = false;
                    for x in f.elements() {
                        let x2 = f.mul(x, x);
                        let on_branch = if branch == 1 {
                            f.add(f.mul(f.from_i64(3), x2), m) == f.zero()
                        } else {
                            f.add(f.mul(x2, x), f.add(f.mul(m, x), nn)) == f.zero()
                        };
                        if on_branch {
                            any |= run.run(th, run.params(&[("d", d), (key, x)]), || v.cor2(branch, d, x, form));
                        }
                    }
                    any
                });
            }
            Bs1_1 => {
                // k and b nonzero, a = -3k^2
                visit((q - 1) * (q - 1), n, &mut rng, |i| {
                    let (k, b) = (nz(i / (q - 1)), nz(i % (q - 1)));
                    let a = f.mul(f.from_i64(-3), f.mul(k, k));
                    run.run(th, run.params(&[("a", a), ("b", b), ("k", k)]), || v.bs1(1, a, b, k, form))
                });
            }
            Bs1_2 | Bs1_2Corrected => {
                // h and a nonzero, b = -h^3 - a h
                visit((q - 1) * (q - 1), n, &mut rng, |i| {
                    let (h, a) = (nz(i / (q - 1)), nz(i % (q - 1)));
                    let b = f.neg(f.add(f.mul(f.mul(h, h), h), f.mul(a, h)));
                    run.run(th, run.params(&[("a", a), ("b", b), ("h", h)]), || v.bs1(2, a, b, h, form))
                });
            }
            Mc => {
                visit(q * q, n, &mut rng, |i| {
                    let (a, b) = (el(i / q), el(i % q));
                    run.run(th, run.params(&[("a", a), ("b", b)]), || v.mc(a, b))
                });
            }
            Hessian => {
                visit(q, n, &mut rng, |i| {
                    let a = el(i);
                    run.run(th, run.params(&[("a", a)]), || v.hessian(a))
                });
            }
            Lemma31 => {
                for t in [2u64, 3, 6] {
                    for j in 0..q - 1 {
                        let res = v.lemma31(t, j);
                        for (idx, id) in ["1", "2"].into_iter().enumerate() {
                            let mut params = int_params(&[("t", t), ("j", j)]);
                            params.insert("identity".into(), id.into());
                            run.run(th, params, || res.clone().map(|s| s[idx].clone()));
                        }
                    }
                }
            }
            Eq29 => {
                for l in 1..q - 1 {
                    run.run(th, int_params(&[("l", l)]), || v.eq29(l));
                }
            }
            Lemma5 => {
                for i in 0..r {
                    for l in 1..q - 1 {
                        if 2 * l != q - 1 {
                            run.run(th, int_params(&[("l", l), ("i", i as u64)]), || v.lemma5(l, i));
                        }
                    }
                }
            }
            GaussGk | GaussTheta | GaussDh => {
                let gs = GaussSums::new(f);
                let tol = default_tolerance(q);
                match th {
                    GaussGk => {
                        for k in 1..q - 1 {
                            let c = CharacterIndex::new(k as i64, f);
                            run.run(th, int_params(&[("k", k)]), || Ok(Sides::Float(gs.check_gk_product(c, tol)?)));
                        }
                    }
                    GaussTheta => {
                        for alpha in f.nonzero_elements() {
                            let params = run.params(&[("alpha", alpha)]);
                            run.run(th, params, || Ok(Sides::Float(gs.check_theta_expansion(alpha, tol)?)));
                        }
                    }
                    _ => {
                        for m in [2u64, 3, 6] {
                            if (q - 1) % m != 0 {
                                run.skip(th, Gate::QNotOneModM);
                                continue;
                            }
                            for psi in 0..q - 1 {
                                let c = CharacterIndex::new(psi as i64, f);
                                run.run(th, int_params(&[("m", m), ("psi", psi)]), || {
                                    Ok(Sides::Float(gs.check_davenport_hasse(m, c, tol)?))
                                });
                            }
                        }
                    }
                }
            }
            Ortho => {
                let tally = orthogonality_tally(f);
                run.run(th, BTreeMap::new(), || {
                    Ok(Sides::Integer { lhs: (tally.checked - tally.failed) as i64, rhs: Ok(tally.checked as i64) })
                });
            }
        }
    }
    Ok(run.out)
}

/// Runs every selected theorem over every field of the range, fields in parallel,
/// records in the order `(p, r, theorem, tuple)`.
pub fn run_suite(spec: &RangeSpec) -> Result<Report> {
    spec.validate()?;
    let started_at = Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true);
    let theorems = spec.suite.theorems(spec.corrected);
    let outcomes: Vec<Result<FieldOutcome>> =
        spec.fields().par_iter().map(|&(p, r)| run_field(spec, &theorems, p, r)).collect();
    let mut report = Report::new(spec.clone(), started_at, &theorems);
    for o in outcomes {
        report.absorb(o?);
    }
    Ok(report)
}
