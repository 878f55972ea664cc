//! Command dispatch: each command expands into a list of independent checks,
//! which run concurrently and are reported sorted by id.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use stdmono_core::degeneration::{initial_piece, sagbi_degree_check, straight_lm_report};
use stdmono_core::exactalg::render_monomials;
use stdmono_core::fiberprod::FiberProduct;
use stdmono_core::sections::flag::{chain_monomials, richardson_monomials, schubert_monomials, standard_monomials};
use stdmono_core::sections::sampling::{flag_space_dim, richardson_dim_oracle, schubert_dim_oracle};
use stdmono_core::sections::{kernel_condition_text, restriction_analysis};
use stdmono_core::tableaux::{
    column_sets, enumerate_straight, enumerate_straight_with, render, Orientation, Shape, Side,
};
use stdmono_core::weyl::{bruhat_leq, Permutation};
use stdmono_core::Error;

use crate::config::RunConfig;
use crate::error::{CliError, Result};
use crate::parallel;
use crate::report::{CheckRecord, Report, Timing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Columns,
    Enumerate,
    Dim,
    VerifyBs,
    VerifyRestriction,
    VerifySchubert,
    VerifyRichardson,
    VerifySagbi,
    FiberDim,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Columns => "columns",
            Command::Enumerate => "enumerate",
            Command::Dim => "dim",
            Command::VerifyBs => "verify bs",
            Command::VerifyRestriction => "verify restriction",
            Command::VerifySchubert => "verify schubert",
            Command::VerifyRichardson => "verify richardson",
            Command::VerifySagbi => "verify sagbi",
            Command::FiberDim => "fiber dim",
        }
    }
}

type Outcome = std::result::Result<(bool, Value), Error>;
type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

/// Runs `command` on a thread pool of `cfg.threads` threads (all cores when
/// unset).  The report does not depend on the thread count.
pub fn run(command: Command, cfg: &RunConfig) -> Result<Report> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        if t == 0 {
            return Err(CliError::field("threads", "need at least one thread"));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| CliError::field("threads", e.to_string()))?;
    pool.install(|| run_here(command, cfg))
}

fn run_here(command: Command, cfg: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let jobs = jobs(command, cfg)?;
    let results: Vec<(String, Outcome, u64)> = jobs
        .into_par_iter()
        .map(|(id, job)| {
            let t = Instant::now();
            let out = job();
            (id, out, t.elapsed().as_millis() as u64)
        })
        .collect();
    let mut checks = Vec::new();
    let mut timing = Timing::default();
    for (id, out, ms) in results {
        let record = match out {
            Ok((pass, data)) => CheckRecord::new(&id, pass, data),
            // findings, not crashes
            Err(e @ (Error::TheoremViolation(_) | Error::UnstableSample(_) | Error::EmptyFiber(_))) => {
                CheckRecord::new(&id, false, json!({ "finding": e.to_string() }))
            }
            Err(e) => return Err(e.into()),
        };
        timing.checks.insert(id, ms);
        checks.push(record);
    }
    let mut report = Report::new(command.name(), cfg.echo(), checks);
    timing.total_ms = start.elapsed().as_millis() as u64;
    report.timing = Some(timing);
    Ok(report)
}

fn job(f: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn jobs(command: Command, cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    Ok(match command {
        Command::Columns => columns(cfg)?,
        Command::Enumerate => enumerate(cfg)?,
        Command::Dim => dims(cfg)?,
        Command::VerifyBs => verify_bs(cfg)?,
        Command::VerifyRestriction => verify_restriction(cfg)?,
        Command::VerifySchubert => verify_schubert(cfg)?,
        Command::VerifyRichardson => verify_richardson(cfg)?,
        Command::VerifySagbi => verify_sagbi(cfg)?,
        Command::FiberDim => fiber_dim(cfg)?,
    })
}

fn columns(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let word = cfg.word()?;
    let sets: Vec<String> = column_sets(&word)?.iter().map(ToString::to_string).collect();
    Ok(vec![("columns".into(), job(move || Ok((true, json!({ "word": word.to_string(), "column_sets": sets })))))])
}

/// Ordered tableaux beyond this are not enumerated for the bottom-up count.
const ORDERED_LIMIT: u128 = 2_000_000;

fn enumerate(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let shape = cfg.shape()?;
    let dump = cfg.dump_tableaux.clone();
    Ok(vec![(
        "enumerate".into(),
        job(move || {
            let straight = enumerate_straight(&shape);
            let bottom_up = (shape.tableau_count() <= ORDERED_LIMIT)
                .then(|| enumerate_straight_with(&shape, Orientation::BottomUp).len());
            if let Some(path) = &dump {
                let text: Vec<String> = straight.iter().map(render).collect();
                std::fs::write(path, text.join("\n"))
                    .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok((
                true,
                json!({
                    "shape": shape.to_string(),
                    "ordered_tableaux": shape.tableau_count().to_string(),
                    "classes": shape.class_count().to_string(),
                    "straight": straight.len(),
                    "straight_bottom_up": bottom_up,
                }),
            ))
        }),
    )])
}

fn dims(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let shape = cfg.shape()?;
    Ok(cfg
        .powers(&[1])?
        .into_iter()
        .map(|p| {
            let shape = shape.scaled(p);
            let j = job(move || {
                let rank = parallel::span_pivots(&shape, Side::Primal).len();
                let opposite = parallel::span_pivots(&shape, Side::Opposite).len();
                Ok((rank == opposite, json!({ "shape": shape.to_string(), "p": p, "dim": rank, "opposite_dim": opposite })))
            });
            (format!("dim/p={p}"), j)
        })
        .collect())
}

fn verify_bs(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let shape = cfg.shape()?;
    Ok(cfg
        .powers(&[1])?
        .into_iter()
        .map(|p| {
            let shape = shape.scaled(p);
            let j = job(move || {
                let c = parallel::dim_sections(&shape);
                Ok((
                    c.pass(),
                    json!({
                        "shape": shape.to_string(),
                        "p": p,
                        "generator_count": c.generator_count.to_string(),
                        "class_count": c.class_count.to_string(),
                        "straight_count": c.straight_count,
                        "rank": c.rank,
                    }),
                ))
            });
            (format!("bs/p={p}"), j)
        })
        .collect())
}

fn verify_restriction(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let j = cfg.j()?;
    let m = cfg.mult()?;
    Ok(vec![(
        "restriction".into(),
        job(move || {
            let r = restriction_analysis(&m, &j)?;
            Ok((
                r.pass(),
                json!({
                    "j": r.j.to_string(),
                    "mult": r.mult_in,
                    "normalised_mult": r.mult,
                    "condition_blocks": r.condition_blocks,
                    "void_blocks": r.void_blocks,
                    "kernel_condition": kernel_condition_text(&r),
                    "dim_i": r.dim_i,
                    "dim_j": r.dim_j,
                    "well_defined": r.well_defined,
                    "literal_drop_well_defined": r.literal_drop_well_defined,
                    "kernel_dim": r.kernel_dim,
                    "flagged_count": r.flagged_count,
                    "flagged_rank": r.flagged_rank,
                    "straight_with_condition": r.straight_with_condition,
                    "rank_nullity": r.rank_nullity(),
                    "kernel_spanned_by_flagged": r.kernel_spanned_by_flagged(),
                    "straight_condition_matches": r.straight_condition_matches(),
                }),
            ))
        }),
    )])
}

fn flag_setup(cfg: &RunConfig) -> Result<(usize, Vec<u32>, Vec<u64>)> {
    let n = cfg.n()?;
    let m = cfg.mult()?;
    if m.len() + 1 != n {
        return Err(CliError::field("mult", format!("flag multiplicity needs n-1 = {} entries", n - 1)));
    }
    Ok((n, m, cfg.seeds()?))
}

fn oracle_runs(
    cfg: &RunConfig,
    n: usize,
    m: &[u32],
    seeds: &[u64],
    f: impl Fn(&stdmono_core::sections::sampling::SamplePlan) -> stdmono_core::Result<usize>,
) -> Result<Vec<stdmono_core::Result<usize>>> {
    seeds.iter().map(|&s| Ok(f(&cfg.sample_plan(s, n, m)?))).collect()
}

fn oracle_json(runs: &[stdmono_core::Result<usize>]) -> (Vec<Value>, bool) {
    let stable = runs.iter().all(|r| r.is_ok());
    let vals = runs.iter().map(|r| r.as_ref().map_or_else(|e| json!(e.to_string()), |d| json!(d))).collect();
    (vals, stable)
}

fn verify_schubert(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let (n, m, seeds) = flag_setup(cfg)?;
    let ws = match cfg.perm("w")? {
        Some(w) => vec![w],
        None => Permutation::all(n),
    };
    let mut out: Vec<(String, Job)> = Vec::new();
    {
        let m = m.clone();
        out.push((
            "schubert/space".into(),
            job(move || {
                let dim = flag_space_dim(n, &m)?;
                let standard = standard_monomials(n, &m)?.len();
                Ok((dim == standard, json!({ "mult": m, "dim": dim, "standard_monomials": standard })))
            }),
        ));
    }
    for w in ws {
        let (m, seeds, cfg) = (m.clone(), seeds.clone(), cfg.clone());
        out.push((
            format!("schubert/w={w}"),
            job(move || {
                let filtered = schubert_monomials(&w, &m)?.len();
                let chain = chain_monomials(&w, &Permutation::identity(n), &m)?.len();
                let runs = oracle_runs(&cfg, n, &m, &seeds, |plan| schubert_dim_oracle(&w, &m, plan))
                    .map_err(|e| Error::InvalidParameter(e.to_string()))?;
                let (oracle, stable) = oracle_json(&runs);
                let pass = stable && runs.iter().all(|r| r.as_ref().is_ok_and(|&d| d == filtered));
                Ok((pass, json!({ "w": w.to_string(), "filtered": filtered, "chain": chain, "oracle": oracle, "stable": stable })))
            }),
        ));
    }
    Ok(out)
}

fn verify_richardson(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let (n, m, seeds) = flag_setup(cfg)?;
    let all = Permutation::all(n);
    let ws = cfg.perm("w")?.map_or_else(|| all.clone(), |w| vec![w]);
    let vs = cfg.perm("v")?.map_or_else(|| all.clone(), |v| vec![v]);
    let mut out: Vec<(String, Job)> = Vec::new();
    for w in &ws {
        for v in &vs {
            let (w, v, m, seeds, cfg) = (w.clone(), v.clone(), m.clone(), seeds.clone(), cfg.clone());
            out.push((
                format!("richardson/w={w},v={v}"),
                job(move || {
                    let sandwich = richardson_monomials(&w, &v, &m)?.len();
                    let chain = chain_monomials(&w, &v, &m)?.len();
                    let runs = oracle_runs(&cfg, n, &m, &seeds, |plan| richardson_dim_oracle(&w, &v, &m, plan))
                        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
                    let (oracle, stable) = oracle_json(&runs);
                    let pass = stable && runs.iter().all(|r| r.as_ref().is_ok_and(|&d| d == sandwich));
                    Ok((
                        pass,
                        json!({
                            "w": w.to_string(),
                            "v": v.to_string(),
                            "comparable": bruhat_leq(&v, &w),
                            "sandwich": sandwich,
                            "chain": chain,
                            "oracle": oracle,
                            "stable": stable,
                        }),
                    ))
                }),
            ));
        }
    }
    Ok(out)
}

fn verify_sagbi(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let shape = cfg.shape()?;
    let powers = cfg.powers(&[2])?;
    if let Some(p) = powers.iter().find(|&&p| p < 2) {
        return Err(CliError::field("powers", format!("the degree check needs p >= 2, got {p}")));
    }
    let mut out: Vec<(String, Job)> = Vec::new();
    let base = shape.clone();
    out.push(("sagbi/p=1".into(), job(move || degree_one(&base))));
    for p in powers {
        let shape = shape.clone();
        out.push((
            format!("sagbi/p={p}"),
            job(move || {
                let r = sagbi_degree_check(&shape, p)?;
                Ok((
                    r.pass(),
                    json!({
                        "shape": shape.to_string(),
                        "p": p,
                        "degree_one": r.degree_one,
                        "lm_count": r.lm_count,
                        "straight_count": r.straight_count,
                        "product_count": r.product_count,
                        "matches_straight_lms": r.matches_straight_lms,
                        "contained": r.contained(),
                        "hilbert_match": r.hilbert_match(),
                        "missing": render_monomials(&r.missing),
                        "extra": render_monomials(&r.extra),
                    }),
                ))
            }),
        ));
    }
    Ok(out)
}

fn degree_one(shape: &Shape) -> Outcome {
    let lms = straight_lm_report(shape);
    let piece = initial_piece(shape, 1)?;
    let equal = lms.monomials == piece.lm_set;
    Ok((
        lms.distinct() && equal,
        json!({
            "shape": shape.to_string(),
            "straight_count": lms.straight_count,
            "distinct_lms": lms.monomials.len(),
            "collisions": lms.collisions.iter().map(|c| c.monomial.to_string()).collect::<Vec<_>>(),
            "initial_equals_straight": equal,
            "lm_set": render_monomials(&piece.lm_set),
        }),
    ))
}

fn fiber_dim(cfg: &RunConfig) -> Result<Vec<(String, Job)>> {
    let (j, k, m) = (cfg.j()?, cfg.k()?, cfg.mult()?);
    // validate up front so configuration mistakes are usage errors
    match FiberProduct::new(&j, &k, &m) {
        Ok(_) | Err(Error::EmptyFiber(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let mut out: Vec<(String, Job)> = Vec::new();
    {
        let (j, k, m) = (j.clone(), k.clone(), m.clone());
        out.push((
            "fiber/injectivity".into(),
            job(move || {
                let mut fp = FiberProduct::new(&j, &k, &m)?;
                let inj = fp.injectivity(1)?;
                Ok((
                    inj.pass(),
                    json!({
                        "w": fp.ring.w.to_string(),
                        "v": fp.ring.v.to_string(),
                        "m0": fp.ring.m0,
                        "a1": inj.basis_size,
                        "rank_phi_j": inj.rank_j,
                        "rank_phi_k": inj.rank_k,
                        "rank_pairs": inj.rank_pairs,
                    }),
                ))
            }),
        ));
    }
    for p in cfg.powers(&[0, 1, 2])? {
        let (j, k, m) = (j.clone(), k.clone(), m.clone());
        out.push((
            format!("fiber/p={p}"),
            job(move || {
                let mut fp = FiberProduct::new(&j, &k, &m)?;
                let piece = fp.piece(p, true, true)?;
                let (formula, formula_ok) = if p == 1 {
                    let inj = fp.injectivity(1)?;
                    let f = fp.r(1)?.dim + fp.s(1)?.dim - inj.basis_size;
                    (Some(f), !inj.pass() || inj.rank_pairs != inj.basis_size || f == piece.dim)
                } else {
                    (None, true)
                };
                Ok((
                    piece.stability_pass() && formula_ok,
                    json!({
                        "j": j.to_string(),
                        "k": k.to_string(),
                        "m": m,
                        "p": p,
                        "grading": "total degree",
                        "bidegrees": piece.bidegrees,
                        "numerator": piece.numerator,
                        "relation_rank": piece.relation_rank,
                        "dim": piece.dim,
                        "stability_pass": piece.stability_pass(),
                        "augmented_rank": piece.augmented_rank,
                        "degree_one_formula": formula,
                        "toric_dim": piece.toric_dim,
                    }),
                ))
            }),
        ));
    }
    Ok(out)
}
