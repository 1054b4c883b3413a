//! Argument parsing and command dispatch.

use std::path::{Path, PathBuf};

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lcd_rough::approx::{ApproxSpace, ChoiceConfig, EmptyCover};
use lcd_rough::audit::{self, AuditVerdict, ClaimId, Replay, Status, SweepMode, SweepSpec, TuplePolicy};
use lcd_rough::quotient::{self, QuotientAlgebra};
use lcd_rough::tarski::{self, DeltaVariant, TarskiStructure};
use lcd_rough::{BlockFamily, Subset, ToleranceSpace};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{self, Format};
use crate::report::{json_line, write_atomic, Envelope};

#[derive(Debug, Parser)]
#[command(name = "lcd-rough", version, about = "Choice-based rough approximations on finite tolerance spaces")]
pub struct Cli {
    /// Treatment of the empty set's 0-upper approximation.
    #[arg(long, global = true, value_enum, default_value = "defined")]
    pub empty_cover: CoverArg,
    /// Required by random sweeps and tuple sampling; recorded in every report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report here (atomically) instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoverArg {
    Defined,
    Undefined,
}

impl From<CoverArg> for EmptyCover {
    fn from(c: CoverArg) -> Self {
        match c {
            CoverArg::Defined => EmptyCover::Defined,
            CoverArg::Undefined => EmptyCover::Undefined,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Space document (pairs-json, matrix-text or info-table-csv).
    pub input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Similarity threshold for info tables.
    #[arg(long)]
    pub theta: Option<f64>,
}

impl InputArgs {
    fn load(&self) -> Result<ToleranceSpace> {
        input::read_space(&self.input, self.format, self.theta)
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated claim tags, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub claims: Vec<String>,
    /// Every relation on 1..=max-n points (the default sweep).
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Seeded random spaces on this many points instead of the exhaustive sweep.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 100, requires = "random")]
    pub count: usize,
    #[arg(long, default_value_t = 0.5, requires = "random")]
    pub edge_probability: f64,
    /// Sample this many tuples per space and claim instead of all of them.
    #[arg(long, value_name = "K")]
    pub sample: Option<u64>,
    /// Directory for replay files of refuted claims.
    #[arg(long, default_value = "replays")]
    pub replay_dir: PathBuf,
    /// Do not write replay files.
    #[arg(long)]
    pub no_replays: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Blocks, θ₀ classes and neighborhoods.
    Blocks {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the relation graph as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Approximations of one subset.
    Approx {
        #[command(flatten)]
        input: InputArgs,
        /// `0,2`, `{0,2}`, `{}` or labels.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        /// Operators, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "profile")]
        ops: Vec<String>,
    },
    /// Classes and operation tables of the quotient.
    Quotient {
        #[command(flatten)]
        input: InputArgs,
        /// Also check that every operation is independent of representatives.
        #[arg(long)]
        well_definedness: bool,
    },
    /// Audit claims on one space or over a sweep.
    Audit {
        /// Single space to audit; a sweep is used when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        theta: Option<f64>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Sweep for counterexamples and package them for replay.
    Search {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Block-complement family, implication closure, σ-classes and filters.
    Tarski {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "blocks")]
        variant: VariantArg,
    },
    /// Re-emit a space in canonical form.
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "pairs-json")]
        to: Format,
    },
    /// Re-evaluate stored counterexamples.
    Replay { files: Vec<PathBuf> },
    /// List the claim registry.
    Claims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Blocks,
    DisjointUnions,
}

impl From<VariantArg> for DeltaVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Blocks => DeltaVariant::Blocks,
            VariantArg::DisjointUnions => DeltaVariant::DisjointUnions,
        }
    }
}

/// What a command produced: report text and the process exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub exit: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit: 0 }
    }
}

pub const EXIT_UNEXPECTED_REFUTATION: u8 = 1;
pub const EXIT_TOOL_ERROR: u8 = 2;

pub fn run(cli: &Cli) -> Result<Output> {
    let config = ChoiceConfig {
        empty_cover: cli.empty_cover.into(),
    };
    let ctx = Ctx {
        config,
        seed: cli.seed,
    };
    let out = match &cli.command {
        Command::Blocks { input, dot } => ctx.blocks(&input.load()?, *dot)?,
        Command::Approx { input, subset, ops } => ctx.approx(&input.load()?, subset, ops)?,
        Command::Quotient {
            input,
            well_definedness,
        } => ctx.quotient(&input.load()?, *well_definedness)?,
        Command::Audit {
            input,
            format,
            theta,
            sweep,
        } => {
            let space = match input {
                Some(p) => Some(input::read_space(p, *format, *theta)?),
                None => None,
            };
            ctx.audit("audit", space.as_ref(), sweep)?
        }
        Command::Search { sweep } => ctx.audit("search", None, sweep)?,
        Command::Tarski { input, variant } => ctx.tarski(&input.load()?, (*variant).into())?,
        Command::Export { input, to } => Output::ok(input::export(&input.load()?, *to)?),
        Command::Replay { files } => ctx.replay(files)?,
        Command::Claims => ctx.claims(),
    };
    Ok(out)
}

struct Ctx {
    config: ChoiceConfig,
    seed: Option<u64>,
}

fn set_or_undefined(s: Option<Subset>) -> Value {
    match s {
        Some(s) => json!(s),
        None => json!("undefined"),
    }
}

pub const APPROX_OPS: [&str; 12] = [
    "l0", "u0", "lbreve", "ubreve", "l", "u", "lstar", "ustar", "ltheta", "utheta", "profile", "primitive",
];

fn parse_claims(tags: &[String]) -> Result<Vec<ClaimId>> {
    if tags.iter().any(|t| t.eq_ignore_ascii_case("all")) {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for t in tags {
        let c = ClaimId::from_tag(t)?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        bail!("no claims selected");
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerdictLine<'a> {
    #[serde(flatten)]
    verdict: &'a AuditVerdict,
    known_delicate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    replay: Option<String>,
}

#[derive(Serialize)]
struct Summary {
    claims: usize,
    verified: usize,
    refuted: usize,
    vacuous: usize,
    /// Refuted claims outside the known-delicate list.
    unexpected: Vec<String>,
}

impl Ctx {
    fn envelope<T: Serialize>(&self, command: &'static str, space: Option<&ToleranceSpace>, payload: T) -> String {
        Envelope::new(command, space.map(input::digest), self.seed, self.config.empty_cover, payload).line()
    }

    fn blocks(&self, space: &ToleranceSpace, dot: bool) -> Result<Output> {
        let family = BlockFamily::enumerate(space);
        let blocks: Vec<Subset> = family.blocks().iter().map(|b| b.members()).collect();
        if dot {
            return Ok(Output::ok(input::dot(space, &blocks)));
        }
        let payload = json!({
            "n": space.size(),
            "labels": space.labels(),
            "blocks": blocks,
            "theta0": space.theta0().classes(),
            "neighborhoods": (0..space.size()).map(|x| space.neighborhood(x)).collect::<Vec<_>>(),
            "is_equivalence": space.is_equivalence(),
        });
        Ok(Output::ok(self.envelope("blocks", Some(space), payload)))
    }

    fn approx(&self, space: &ToleranceSpace, subset: &str, ops: &[String]) -> Result<Output> {
        let a = input::parse_subset(space, subset)?;
        let ap = ApproxSpace::new(space.clone(), self.config)?;
        let ops: Vec<&str> = if ops.iter().any(|o| o == "all") {
            APPROX_OPS.to_vec()
        } else {
            ops.iter().map(String::as_str).collect()
        };
        let mut results = serde_json::Map::new();
        for op in ops {
            let v = match op {
                "l0" => json!(ap.lower_zero(a)),
                "u0" => set_or_undefined(ap.upper_zero(a)),
                "lbreve" => json!(ap.lateral_lower(a)),
                "ubreve" => json!(ap.lateral_upper(a)),
                "l" => json!(ap.classical_lower(a)),
                "u" => json!(ap.classical_upper(a)),
                "lstar" => json!(ap.star_lower(a)),
                "ustar" => json!(ap.star_upper(a)),
                "ltheta" => json!(ap.theta_lower(a)),
                "utheta" => json!(ap.theta_upper(a)),
                "profile" => {
                    let p = ap.profile(a);
                    json!([p.l0(), set_or_undefined(p.u0()), p.lateral_l(), p.lateral_u()])
                }
                "primitive" => json!({
                    "lower": ap.primitive_lower(a).indices().collect::<Vec<_>>(),
                    "upper": match ap.primitive_upper(a) {
                        Some(c) => json!(c.indices().collect::<Vec<_>>()),
                        None => json!("undefined"),
                    },
                }),
                other => bail!("unknown operator {other:?}; expected one of {}", APPROX_OPS.join(", ")),
            };
            results.insert(op.to_string(), v);
        }
        let payload = json!({ "subset": a, "results": results });
        Ok(Output::ok(self.envelope("approx", Some(space), payload)))
    }

    fn quotient(&self, space: &ToleranceSpace, well_definedness: bool) -> Result<Output> {
        let q = QuotientAlgebra::build(space.clone(), self.config)?;
        let audit = if well_definedness {
            Some(quotient::well_definedness_audit(space, self.config)?)
        } else {
            None
        };
        let payload = json!({ "tables": q.tables(), "well_definedness": audit });
        Ok(Output::ok(self.envelope("quotient", Some(space), payload)))
    }

    fn seed_for(&self, what: &str) -> Result<u64> {
        match self.seed {
            Some(s) => Ok(s),
            None => bail!("{what} needs an explicit --seed"),
        }
    }

    fn sweep(&self, args: &SweepArgs) -> Result<SweepSpec> {
        let mode = match args.random {
            Some(n) => SweepMode::Random {
                n,
                count: args.count,
                seed: self.seed_for("--random")?,
                edge_probability: args.edge_probability,
            },
            None => SweepMode::Exhaustive { max_n: args.max_n },
        };
        let tuples = match args.sample {
            Some(per_space) => TuplePolicy::Sampled {
                per_space,
                seed: self.seed_for("--sample")?,
            },
            None => TuplePolicy::All,
        };
        Ok(SweepSpec {
            mode,
            tuples,
            config: self.config,
        })
    }

    fn audit(&self, command: &'static str, space: Option<&ToleranceSpace>, args: &SweepArgs) -> Result<Output> {
        let claims = parse_claims(&args.claims)?;
        let (verdicts, scope) = match space {
            Some(s) => {
                let tuples = self.sweep(args)?.tuples;
                let scope = format!("single space, n = {}", s.size());
                let v = audit::run_claims_on(std::slice::from_ref(s), &claims, tuples, self.config, &scope)?;
                (v, scope)
            }
            None => {
                let sweep = self.sweep(args)?;
                sweep.validate()?;
                (audit::run_claims(&claims, &sweep)?, sweep.describe())
            }
        };

        let header = json!({
            "scope": scope,
            "claims": claims.iter().map(|c| c.tag()).collect::<Vec<_>>(),
            "notes": audit::report_notes(),
        });
        let mut text = self.envelope(command, space, header);
        let mut summary = Summary {
            claims: verdicts.len(),
            verified: 0,
            refuted: 0,
            vacuous: 0,
            unexpected: Vec::new(),
        };
        for v in &verdicts {
            match v.status {
                Status::Verified => summary.verified += 1,
                Status::Vacuous => summary.vacuous += 1,
                Status::Refuted => summary.refuted += 1,
            }
            let known = audit::is_known_delicate(&v.claim);
            if v.is_refuted() && !known {
                summary.unexpected.push(v.claim.clone());
            }
            let replay = match Replay::from_verdict(v, self.config) {
                Some(r) if !args.no_replays => Some(write_replay(&args.replay_dir, &r)?),
                _ => None,
            };
            text.push_str(&json_line(&VerdictLine {
                verdict: v,
                known_delicate: known,
                replay,
            }));
        }
        let exit = if summary.unexpected.is_empty() {
            0
        } else {
            EXIT_UNEXPECTED_REFUTATION
        };
        text.push_str(&json_line(&json!({ "summary": summary })));
        Ok(Output { text, exit })
    }

    fn tarski(&self, space: &ToleranceSpace, variant: DeltaVariant) -> Result<Output> {
        let family = BlockFamily::enumerate(space);
        let delta = tarski::build_delta(space, &family, variant)?;
        let q = QuotientAlgebra::build(space.clone(), self.config)?;
        let sigma = tarski::sigma_classify_delta(&q, &delta);
        let carrier: Vec<Value> = delta
            .sets()
            .iter()
            .enumerate()
            .map(|(i, s)| json!({ "set": s, "witnesses": delta.witnesses(i) }))
            .collect();
        let ts = TarskiStructure::new(delta);
        let closure = tarski::closure_audit(&ts, space);
        let filters: Vec<Vec<Subset>> = tarski::maximal_filters(&ts)?
            .into_iter()
            .map(|f| ts.mask_to_sets(f))
            .collect();
        let payload = json!({
            "variant": variant,
            "filter_definition": tarski::FILTER_DEFINITION,
            "delta": carrier,
            "closure": closure,
            "sigma": sigma,
            "maximal_filters": filters,
        });
        Ok(Output::ok(self.envelope("tarski", Some(space), payload)))
    }

    fn replay(&self, files: &[PathBuf]) -> Result<Output> {
        if files.is_empty() {
            bail!("no replay files given");
        }
        let mut outcomes = Vec::new();
        for f in files {
            let text = std::fs::read_to_string(f)?;
            let r: Replay = serde_json::from_str(&text)?;
            outcomes.push(audit::replay(&r)?);
        }
        let exit = if outcomes.iter().all(|o| o.reproduced) {
            0
        } else {
            EXIT_UNEXPECTED_REFUTATION
        };
        Ok(Output {
            text: self.envelope("replay", None, outcomes),
            exit,
        })
    }

    fn claims(&self) -> Output {
        let mut text = String::new();
        for c in ClaimId::ALL {
            text.push_str(&json_line(&json!({
                "tag": c.tag(),
                "domain": c.domain(),
                "statement": c.statement(),
                "known_delicate": audit::is_known_delicate(c.tag()),
            })));
        }
        Output::ok(text)
    }
}

fn write_replay(dir: &Path, r: &Replay) -> Result<String> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}.replay.json", r.claim));
    let body = serde_json::to_string_pretty(r)? + "\n";
    write_atomic(&path, body.as_bytes())?;
    Ok(path.display().to_string())
}
