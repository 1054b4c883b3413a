//! Executable claim checks: the registry, sweeps over spaces, and replayable
//! counterexamples.
//!
//! Spaces are visited in size order, then by edge code; tuples in
//! lexicographic order of subset bits or class ids. A claim stops at its
//! first violation, so in exhaustive mode the reported counterexample is the
//! least one in that order.

mod claims;
mod judge;
pub mod verdict;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use claims::{ClaimId, Context, Domain};
use judge::Outcome;
pub use verdict::{AuditVerdict, Counterexample, SpaceCode, Status};

use crate::approx::ChoiceConfig;
use crate::space::{Subset, ToleranceSpace};
use crate::{Error, Result};

/// Largest universe for exhaustive sweeps.
pub const EXHAUSTIVE_MAX_POINTS: usize = 5;

/// Claims refuted somewhere in the exhaustive `n ≤ 5` scope under either
/// empty-cover convention. A refutation of anything else is unexpected.
pub const KNOWN_DELICATE: &[&str] = &[
    "T1b", "T1c", "T1d", "T1e", "T1h", "PR3b", "PR3c", "PR3e", "PR3f", "T3a", "T3c", "T3d",
    "T3e", "T3f", "T3g", "T4a", "T4b", "T4d", "T4e", "T4f", "T4g", "T4h", "T4i", "T4j", "T4k",
    "T4l", "T4m", "T4n", "T4o", "T4p", "T4q", "T4r", "T4s", "T4t", "T4u", "T4w", "IMPa", "IMPb",
    "IMPc", "IMPd", "IMPe", "AER01", "AER02", "AER03", "AER04", "AER05", "AER06", "AER07",
    "AER08", "AER09", "AER10", "AER11", "AER12", "AER13", "AER14", "AER15", "AER16", "AER17",
    "AER20", "AER21", "DRV4", "REP", "TAR2",
];

/// Reading of `t`'s characterization used by `T4m` and `AER11`.
pub const T4M_READING: &str = "T4m/AER11: the clause on a, b, c is read as: for all classes a, b, c \
     with 0 < a, b, c < x (strictly), at least two of a, b, c coincide";

/// Conventions for partial terms, printed in report headers.
pub const PARTIAL_TERMS: &str = "partial terms: '=' and '<=' need both sides defined; weak equalities \
     and '(if defined)' clauses are skipped where a side is undefined; premises with undefined parts \
     are false; s(x) = x and t(x) = x are read as class membership tests";

pub fn report_notes() -> [&'static str; 3] {
    [T4M_READING, PARTIAL_TERMS, crate::tarski::FILTER_DEFINITION]
}

pub fn is_known_delicate(tag: &str) -> bool {
    KNOWN_DELICATE.contains(&tag)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum SweepMode {
    /// Every relation on `1..=max_n` points.
    Exhaustive { max_n: usize },
    /// `count` spaces on `n` points, each pair related with `edge_probability`.
    Random {
        n: usize,
        count: usize,
        seed: u64,
        edge_probability: f64,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "policy")]
pub enum TuplePolicy {
    #[default]
    All,
    /// At most `per_space` uniformly drawn tuples per space and claim.
    Sampled { per_space: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub mode: SweepMode,
    #[serde(default)]
    pub tuples: TuplePolicy,
    #[serde(default)]
    pub config: ChoiceConfig,
}

impl SweepSpec {
    pub fn exhaustive(max_n: usize) -> Self {
        SweepSpec {
            mode: SweepMode::Exhaustive { max_n },
            tuples: TuplePolicy::All,
            config: ChoiceConfig::default(),
        }
    }

    pub fn random(n: usize, count: usize, seed: u64) -> Self {
        SweepSpec {
            mode: SweepMode::Random {
                n,
                count,
                seed,
                edge_probability: 0.5,
            },
            tuples: TuplePolicy::All,
            config: ChoiceConfig::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            SweepMode::Exhaustive { max_n } if max_n == 0 || max_n > EXHAUSTIVE_MAX_POINTS => {
                Err(Error::InvalidSweep(format!(
                    "exhaustive sweeps need 1 <= max_n <= {EXHAUSTIVE_MAX_POINTS}, got {max_n}"
                )))
            }
            SweepMode::Random { n, .. } if n == 0 || n > crate::quotient::QUOTIENT_MAX_POINTS => {
                Err(Error::InvalidSweep(format!(
                    "random sweeps need 1 <= n <= {}, got {n}",
                    crate::quotient::QUOTIENT_MAX_POINTS
                )))
            }
            SweepMode::Random { edge_probability: p, .. } if !(0.0..=1.0).contains(&p) => {
                Err(Error::InvalidSweep(format!("edge probability {p} outside [0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// The spaces of the sweep, in visiting order.
    pub fn spaces(&self) -> Result<Vec<ToleranceSpace>> {
        self.validate()?;
        match self.mode {
            SweepMode::Exhaustive { max_n } => {
                let mut out = Vec::new();
                for n in 1..=max_n {
                    for code in 0..(1u64 << ToleranceSpace::edge_slots(n)) {
                        out.push(ToleranceSpace::from_edge_code(n, code)?);
                    }
                }
                Ok(out)
            }
            SweepMode::Random {
                n,
                count,
                seed,
                edge_probability,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| random_space(&mut rng, n, edge_probability))
                    .collect()
            }
        }
    }

    pub fn describe(&self) -> String {
        let spaces = match self.mode {
            SweepMode::Exhaustive { max_n } => format!("exhaustive n <= {max_n}"),
            SweepMode::Random {
                n,
                count,
                seed,
                edge_probability,
            } => format!("{count} random spaces, n = {n}, p = {edge_probability}, seed {seed}"),
        };
        let tuples = match self.tuples {
            TuplePolicy::All => String::from("all tuples"),
            TuplePolicy::Sampled { per_space, seed } => {
                format!("{per_space} sampled tuples per space, seed {seed}")
            }
        };
        format!("{spaces}; {tuples}")
    }
}

/// Draws each pair `i < j` independently, in lexicographic pair order.
pub fn random_space(rng: &mut impl RngCore, n: usize, p: f64) -> Result<ToleranceSpace> {
    let threshold = if p >= 1.0 {
        u64::MAX
    } else {
        (p * 18_446_744_073_709_551_616.0) as u64
    };
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let draw = rng.next_u64();
            if draw < threshold || threshold == u64::MAX {
                pairs.push((i, j));
            }
        }
    }
    ToleranceSpace::build(n, &pairs, true)
}

pub(crate) struct SpaceResult {
    pub instances: u64,
    pub vacuous: u64,
    pub violation: Option<(Vec<u64>, String)>,
}

fn arity(domain: Domain) -> usize {
    match domain {
        Domain::Space => 0,
        Domain::Subsets(k) | Domain::Classes(k) => k as usize,
    }
}

fn evaluate_tuples(ctx: &Context, claim: ClaimId, tuples: impl Iterator<Item = Vec<u64>>) -> SpaceResult {
    let mut r = SpaceResult {
        instances: 0,
        vacuous: 0,
        violation: None,
    };
    for t in tuples {
        match claim.eval(ctx, &t) {
            Outcome::Holds => r.instances += 1,
            Outcome::Vacuous => r.vacuous += 1,
            Outcome::Violated(trace) => {
                r.instances += 1;
                r.violation = Some((t, trace));
                break;
            }
        }
    }
    r
}

/// All tuples of `ctx` for `claim`, in lexicographic order.
pub(crate) fn evaluate_all(ctx: &Context, claim: ClaimId) -> SpaceResult {
    let radix = ctx.radix(claim.domain());
    let k = arity(claim.domain());
    evaluate_tuples(ctx, claim, Odometer::new(radix, k))
}

fn evaluate_sampled(ctx: &Context, claim: ClaimId, count: u64, rng: &mut ChaCha8Rng) -> SpaceResult {
    let radix = ctx.radix(claim.domain());
    let k = arity(claim.domain());
    let total = radix.checked_pow(k as u32);
    if total.is_some_and(|t| t <= count) {
        return evaluate_all(ctx, claim);
    }
    let tuples = (0..count).map(|_| (0..k).map(|_| rng.next_u64() % radix).collect());
    evaluate_tuples(ctx, claim, tuples)
}

/// Lexicographic enumeration of `k`-tuples over `0..radix`.
struct Odometer {
    radix: u64,
    next: Option<Vec<u64>>,
}

impl Odometer {
    fn new(radix: u64, k: usize) -> Self {
        Odometer {
            radix,
            next: if radix == 0 && k > 0 {
                None
            } else {
                Some(alloc::vec![0; k])
            },
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut t = current.clone();
        let mut i = t.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < self.radix {
                self.next = Some(t);
                break;
            }
            t[i] = 0;
        }
        Some(current)
    }
}

fn witnesses(ctx: &Context, domain: Domain, t: &[u64]) -> Vec<Subset> {
    match domain {
        Domain::Space => Vec::new(),
        Domain::Subsets(_) => t.iter().map(|&b| Subset::from_bits(b)).collect(),
        Domain::Classes(_) => t
            .iter()
            .map(|&c| {
                ctx.quotient()
                    .class(crate::quotient::ClassId(c as u32))
                    .representative()
            })
            .collect(),
    }
}

fn binding_trace(domain: Domain, witnesses: &[Subset]) -> String {
    let names: &[&str] = match domain {
        Domain::Subsets(_) => &["A", "B", "C", "D"],
        _ => &["x", "y", "z", "w"],
    };
    let mut s = String::new();
    for (i, w) in witnesses.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        match domain {
            Domain::Subsets(_) => s.push_str(&format!("{} = {w}", names[i])),
            _ => s.push_str(&format!("{} = [{w}]", names[i])),
        }
    }
    s
}

fn bind(ctx: &Context, domain: Domain, t: &[u64], trace: String) -> (Vec<Subset>, String) {
    let w = witnesses(ctx, domain, t);
    let binding = binding_trace(domain, &w);
    if binding.is_empty() {
        (w, trace)
    } else {
        (w, format!("{binding}: {trace}"))
    }
}

struct Tally {
    claim: ClaimId,
    instances: u64,
    vacuous: u64,
    counterexample: Option<Counterexample>,
}

impl Tally {
    fn verdict(self, scope: &str) -> AuditVerdict {
        let status = if self.counterexample.is_some() {
            Status::Refuted
        } else if self.instances > 0 {
            Status::Verified
        } else {
            Status::Vacuous
        };
        AuditVerdict {
            claim: self.claim.tag().into(),
            scope: scope.into(),
            status,
            instances: self.instances,
            vacuous: self.vacuous,
            counterexample: self.counterexample,
        }
    }
}

/// Runs every claim over the same spaces, sharing one context per space.
pub fn run_claims_on(
    spaces: &[ToleranceSpace],
    claims: &[ClaimId],
    tuples: TuplePolicy,
    config: ChoiceConfig,
    scope: &str,
) -> Result<Vec<AuditVerdict>> {
    let mut tallies: Vec<Tally> = claims
        .iter()
        .map(|&claim| Tally {
            claim,
            instances: 0,
            vacuous: 0,
            counterexample: None,
        })
        .collect();
    if claims.is_empty() {
        return Ok(Vec::new());
    }
    for (index, space) in spaces.iter().enumerate() {
        if tallies.iter().all(|t| t.counterexample.is_some()) {
            break;
        }
        let ctx = Context::new(space.clone(), config)?;
        let mut rng = match tuples {
            TuplePolicy::Sampled { seed, .. } => Some(ChaCha8Rng::seed_from_u64(
                seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
            )),
            TuplePolicy::All => None,
        };
        for tally in tallies.iter_mut().filter(|t| t.counterexample.is_none()) {
            let r = match (tuples, rng.as_mut()) {
                (TuplePolicy::Sampled { per_space, .. }, Some(rng)) => {
                    evaluate_sampled(&ctx, tally.claim, per_space, rng)
                }
                _ => evaluate_all(&ctx, tally.claim),
            };
            tally.instances += r.instances;
            tally.vacuous += r.vacuous;
            if let Some((t, trace)) = r.violation {
                let (w, trace) = bind(&ctx, tally.claim.domain(), &t, trace);
                tally.counterexample = Some(Counterexample {
                    space: SpaceCode::of(space),
                    witnesses: w,
                    trace,
                });
            }
        }
    }
    Ok(tallies.into_iter().map(|t| t.verdict(scope)).collect())
}

pub fn run_claims(claims: &[ClaimId], sweep: &SweepSpec) -> Result<Vec<AuditVerdict>> {
    let spaces = sweep.spaces()?;
    run_claims_on(&spaces, claims, sweep.tuples, sweep.config, &sweep.describe())
}

pub fn run_claim(claim: ClaimId, sweep: &SweepSpec) -> Result<AuditVerdict> {
    Ok(run_claims(&[claim], sweep)?.remove(0))
}

/// The AER axiom groups, the derived-definition checks and `REP` on one space.
pub fn run_aer_suite(space: &ToleranceSpace, config: ChoiceConfig) -> Result<Vec<AuditVerdict>> {
    let claims: Vec<ClaimId> = ClaimId::aer_suite().chain([ClaimId::REP]).collect();
    let scope = format!("single space, n = {}", space.size());
    run_claims_on(core::slice::from_ref(space), &claims, TuplePolicy::All, config, &scope)
}

/// A self-contained record of one refutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub claim: String,
    #[serde(default)]
    pub config: ChoiceConfig,
    pub space: SpaceCode,
    pub witnesses: Vec<Subset>,
    pub trace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayOutcome {
    pub claim: String,
    pub reproduced: bool,
    pub trace: Option<String>,
}

impl Replay {
    pub fn from_verdict(v: &AuditVerdict, config: ChoiceConfig) -> Option<Replay> {
        let ce = v.counterexample.as_ref()?;
        Some(Replay {
            claim: v.claim.clone(),
            config,
            space: ce.space.clone(),
            witnesses: ce.witnesses.clone(),
            trace: ce.trace.clone(),
        })
    }
}

/// Re-evaluates a stored refutation from scratch.
pub fn replay(r: &Replay) -> Result<ReplayOutcome> {
    let claim = ClaimId::from_tag(&r.claim)?;
    let space = r.space.to_space()?;
    let ctx = Context::new(space, r.config)?;
    let domain = claim.domain();
    if r.witnesses.len() != arity(domain) {
        return Err(Error::InvalidReplay(format!(
            "{} expects {} witnesses, got {}",
            claim.tag(),
            arity(domain),
            r.witnesses.len()
        )));
    }
    let universe = ctx.space().universe();
    let mut tuple = Vec::new();
    for &w in &r.witnesses {
        if !w.is_subset(universe) {
            return Err(Error::InvalidReplay(format!("witness {w} outside the universe")));
        }
        tuple.push(match domain {
            Domain::Classes(_) => ctx.quotient().class_of(w).0 as u64,
            _ => w.bits(),
        });
    }
    let (reproduced, trace) = match claim.eval(&ctx, &tuple) {
        Outcome::Violated(t) => (true, Some(bind(&ctx, domain, &tuple, t).1)),
        _ => (false, None),
    };
    Ok(ReplayOutcome {
        claim: claim.tag().into(),
        reproduced,
        trace,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub verdicts: Vec<AuditVerdict>,
    pub replays: Vec<Replay>,
}

/// Like [`run_claims`], also packaging every refutation as a [`Replay`].
pub fn counterexample_search(claims: &[ClaimId], sweep: &SweepSpec) -> Result<SearchReport> {
    let verdicts = run_claims(claims, sweep)?;
    let replays = verdicts
        .iter()
        .filter_map(|v| Replay::from_verdict(v, sweep.config))
        .collect();
    Ok(SearchReport { verdicts, replays })
}
