//! The `qci` command line. Every command prints one JSON document with `"v": 1`.
//!
//! Exit codes: 0 on success, 1 when a check fails (the output carries the
//! witness), 2 on unreadable or structurally invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{check_module, check_quandle, AxiomReport, CoeffGroup, ModElem, QModule, Quandle, QuandleJson, Scalar};
use crate::cohomology::{
    cohomology_basis, is_cocycle, CochainEval, link_twisted_cohomology, Cochain, Cohomology, DifferentialSpec,
};
use crate::coloring::{enumerate_colorings, propagate_shadow};
use crate::corpus;
use crate::diagram::{r1_insert, r2_insert, Diagram, Side};
use crate::error::{Error, Result};
use crate::invariants::{invariant_multiset, orbit_refined_multisets, Flavor, Options};

#[derive(Parser, Debug)]
#[command(name = "qci", version, about = "Quandle cocycle invariants of oriented knots and links")]
struct Cli {
    /// Write a run manifest (arguments, input digests, output digest) to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check quandle axioms, module axioms or the cocycle condition.
    Check(CheckArgs),
    /// Orbits of a quandle, and of a finite module if given.
    Orbits {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        module: Option<String>,
    },
    /// Regions, arcs, components and crossing data of a diagram.
    Regions {
        #[arg(long)]
        diagram: String,
    },
    /// Alexander numbering of the regions, in total and per component.
    Indices {
        #[arg(long)]
        diagram: String,
    },
    /// All colorings of a diagram, with region colors when a module is given.
    Colorings {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        module: Option<String>,
        /// Color of the exterior region, comma-separated coordinates.
        #[arg(long)]
        exterior: Option<String>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Cocycle, coboundary and cohomology groups.
    Cohomology(CohomologyArgs),
    /// A cocycle invariant as a weight multiset.
    Invariant(InvariantArgs),
    /// Apply a Reidemeister I or II move.
    Rmove {
        #[command(subcommand)]
        mv: MoveCmd,
    },
    /// Verify the bundled corpus against its golden coloring counts.
    CorpusVerify,
    /// Rerun a manifest and compare input and output digests.
    Replay { manifest: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Quandle,
    Module,
    Cocycle,
}

#[derive(Args, Debug)]
struct CheckArgs {
    kind: CheckKind,
    file: String,
    /// Quandle the module or cocycle is over.
    #[arg(long)]
    quandle: Option<String>,
    /// Differential `α_l d_l - α_r d_r`, given as `α_l,α_r`.
    #[arg(long, default_value = "1,1")]
    spec: String,
    /// Skip the check that the cocycle vanishes on degenerate tuples.
    #[arg(long)]
    no_quandle_flag: bool,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    #[arg(long)]
    quandle: String,
    /// Coefficient group, e.g. `Z5` or `Z2xZ4`.
    #[arg(long)]
    coeff: String,
    #[arg(long, default_value = "trivial")]
    module: String,
    #[arg(long, default_value = "1,1", conflicts_with = "alpha_per_orbit")]
    spec: String,
    /// Per-orbit twisting units; computes the link-twisted groups in degree 2.
    #[arg(long)]
    alpha_per_orbit: Option<String>,
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Restrict to cochains vanishing on degenerate tuples (the default).
    #[arg(long, overrides_with = "no_quandle_flag")]
    quandle_flag: bool,
    #[arg(long)]
    no_quandle_flag: bool,
    /// Print the cocycle and coboundary generators.
    #[arg(long)]
    basis: bool,
    /// Report whether this cochain is a cocycle and a coboundary.
    #[arg(long)]
    member: Option<String>,
    /// Print this many random cocycles.
    #[arg(long, default_value_t = 0)]
    sample: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FlavorArg {
    Classical,
    Shadow,
    Positive,
    Twisted,
    ShadowTwisted,
    LinkTwisted,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    #[arg(long, value_enum)]
    flavor: FlavorArg,
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    quandle: String,
    /// Must match the module of the cocycle if both are given.
    #[arg(long)]
    module: Option<String>,
    /// Cocycle file; without it the zero cocycle over `--coeff` is used.
    #[arg(long)]
    cocycle: Option<String>,
    #[arg(long)]
    coeff: Option<String>,
    #[arg(long, conflicts_with = "alpha_per_orbit")]
    alpha: Option<String>,
    #[arg(long)]
    alpha_per_orbit: Option<String>,
    /// Exterior region color for shadow flavors, comma-separated coordinates.
    #[arg(long)]
    exterior: Option<String>,
    /// Skip the cocycle check.
    #[arg(long)]
    force: bool,
    /// Split the multiset by the orbits the components are colored from.
    #[arg(long)]
    refine: bool,
    /// Write flavor and input details to this file.
    #[arg(long)]
    metadata: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum MoveCmd {
    /// Add a kink to a semi-arc.
    R1 {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        semiarc: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        sign: i8,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Push one semi-arc over another.
    R2 {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        over: u32,
        #[arg(long)]
        under: u32,
        /// Sides of `over` and `under` facing the shared region, e.g. `left,right`.
        #[arg(long)]
        sides: Option<String>,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Reproducibility record of one run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub v: u32,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub version: String,
    pub output_sha256: String,
    pub exit_code: i32,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Default)]
struct Ctx {
    inputs: BTreeMap<String, String>,
}

impl Ctx {
    fn read(&mut self, path: &str) -> Result<String> {
        let text = std::fs::read_to_string(path).map_err(|e| io_error(e, path))?;
        self.inputs.insert(path.to_string(), sha256_hex(text.as_bytes()));
        Ok(text)
    }

    /// `dihedral:n`, `trivial:n`, `alexander:n:t` or a JSON file.
    fn quandle(&mut self, s: &str) -> Result<Arc<Quandle>> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad number `{x}` in `{s}`")));
        let size = |x: &str| -> Result<usize> {
            match num(x)? {
                n if n >= 1 => Ok(n as usize),
                _ => Err(Error::Parse(format!("quandle size must be positive in `{s}`"))),
            }
        };
        let q = match parts.as_slice() {
            ["dihedral", n] => Quandle::dihedral(size(n)?),
            ["trivial", n] => Quandle::trivial(size(n)?),
            ["alexander", n, t] => Quandle::alexander(size(n)?, num(t)?)?,
            _ => Quandle::from_json_str(&self.read(s)?)?,
        };
        Ok(Arc::new(q))
    }

    /// A module shorthand (see [`QModule::parse`]) or a JSON file.
    fn module(&mut self, s: &str, q: &Quandle) -> Result<Arc<QModule>> {
        let m = if Path::new(s).is_file() { QModule::from_json_str(&self.read(s)?, q)? } else { QModule::parse(s, q)? };
        Ok(Arc::new(m))
    }

    /// A diagram file, or the name of a bundled corpus diagram.
    fn diagram(&mut self, s: &str) -> Result<Diagram> {
        if Path::new(s).is_file() {
            return Diagram::from_json_str(&self.read(s)?);
        }
        let name = s.strip_prefix("corpus:").unwrap_or(s);
        match corpus::entry(name) {
            Some(e) => e.diagram(),
            None => Err(Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("{s}: no such file or corpus diagram")))),
        }
    }

    fn cochain(&mut self, s: &str, q: &Arc<Quandle>) -> Result<Cochain> {
        Cochain::from_json_str(&self.read(s)?, q.clone())
    }
}

fn io_error(e: std::io::Error, path: &str) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{path}: {e}")))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn parse_scalars(s: &str) -> Result<Vec<Scalar>> {
    s.split(',').map(|x| Scalar::parse(x.trim())).collect()
}

fn parse_elem(s: &str) -> Result<ModElem> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad module coordinate `{x}`"))))
        .collect::<Result<Vec<_>>>()
        .map(ModElem)
}

fn axiom_json(kind: &str, r: &AxiomReport) -> (Value, i32) {
    match r.violation() {
        None => (json!({"v": 1, "kind": kind, "pass": true}), 0),
        Some(v) => (json!({"v": 1, "kind": kind, "pass": false, "axiom": v.axiom, "witness": v.witness}), 1),
    }
}

fn cmd_check(ctx: &mut Ctx, a: &CheckArgs) -> Result<(Value, i32)> {
    let need_quandle = |ctx: &mut Ctx| -> Result<Arc<Quandle>> {
        let s = a.quandle.as_deref().ok_or_else(|| Error::Parse("--quandle is required".into()))?;
        ctx.quandle(s)
    };
    match a.kind {
        CheckKind::Quandle => {
            let j: QuandleJson = serde_json::from_str(&ctx.read(&a.file)?)?;
            Ok(axiom_json("quandle", &check_quandle(&j.op, j.inv.as_deref())?))
        }
        CheckKind::Module => {
            let q = need_quandle(ctx)?;
            let m = QModule::from_json_str(&ctx.read(&a.file)?, &q)?;
            Ok(axiom_json("module", &check_module(&m, &q)?))
        }
        CheckKind::Cocycle => {
            let q = need_quandle(ctx)?;
            let phi = ctx.cochain(&a.file, &q)?;
            let spec = DifferentialSpec::parse(&a.spec)?;
            let r = is_cocycle(&spec, &phi, !a.no_quandle_flag)?;
            let code = if r.holds { 0 } else { 1 };
            Ok((json!({"v": 1, "kind": "cocycle", "spec": spec.to_string(), "pass": r.holds, "witness": r.witness}), code))
        }
    }
}

fn cmd_orbits(ctx: &mut Ctx, quandle: &str, module: Option<&str>) -> Result<Value> {
    let q = ctx.quandle(quandle)?;
    let mut out = json!({"v": 1, "orbits": q.orbits().orbits()});
    if let Some(m) = module {
        let m = ctx.module(m, &q)?;
        out["module_orbits"] = json!(m.orbits()?.orbits());
    }
    Ok(out)
}

fn cmd_regions(ctx: &mut Ctx, diagram: &str) -> Result<Value> {
    let d = ctx.diagram(diagram)?;
    let labels = |xs: &[usize]| xs.iter().map(|&a| d.labels()[a]).collect::<Vec<_>>();
    let idx = d.indices();
    let shades = d.checkerboard();
    let regions: Vec<Value> = d
        .regions()
        .iter()
        .enumerate()
        .map(|(r, inc)| {
            json!({"incidences": inc, "index": idx.total[r], "per_component": idx.per_component[r], "shade": shades[r]})
        })
        .collect();
    let crossings: Vec<Value> = d
        .crossings()
        .iter()
        .zip(d.geometry())
        .map(|(x, g)| {
            json!({
                "rot": labels(&x.slots),
                "sign": x.sign,
                "positive_sign": g.positive_sign,
                "source": g.source,
                "quadrants": g.quadrants,
                "a_arc": g.a_arc,
                "b_arc": g.b_arc,
                "ab_arc": g.ab_arc,
            })
        })
        .collect();
    Ok(json!({
        "v": 1,
        "exterior": d.exterior(),
        "regions": regions,
        "arcs": d.arcs().iter().map(|a| labels(a)).collect::<Vec<_>>(),
        "components": d.components().iter().map(|c| labels(c)).collect::<Vec<_>>(),
        "crossings": crossings,
    }))
}

fn cmd_indices(ctx: &mut Ctx, diagram: &str) -> Result<Value> {
    let d = ctx.diagram(diagram)?;
    let idx = d.indices();
    Ok(json!({"v": 1, "exterior": d.exterior(), "total": idx.total, "per_component": idx.per_component}))
}

fn cmd_colorings(
    ctx: &mut Ctx,
    diagram: &str,
    quandle: &str,
    module: Option<&str>,
    exterior: Option<&str>,
    count_only: bool,
) -> Result<Value> {
    let d = ctx.diagram(diagram)?;
    let q = ctx.quandle(quandle)?;
    let cs = enumerate_colorings(&d, &q);
    let mut out = json!({"v": 1, "count": cs.len()});
    if count_only {
        return Ok(out);
    }
    out["colorings"] = json!(cs.iter().map(|c| &c.0).collect::<Vec<_>>());
    if let Some(m) = module {
        let m = ctx.module(m, &q)?;
        let ext = match exterior {
            Some(e) => parse_elem(e)?,
            None => m.zero(),
        };
        let regions = cs.iter().map(|c| Ok(propagate_shadow(&d, c, &m, &ext)?.regions)).collect::<Result<Vec<_>>>()?;
        out["regions"] = json!(regions);
    }
    Ok(out)
}

fn cohomology_json(h: &Cohomology) -> Value {
    json!({
        "degree": h.degree,
        "quandle_flag": h.quandle_flag,
        "cocycles": {"free_rank": h.cocycles.free_rank, "torsion": h.cocycles.torsion, "group": h.cocycles.to_string()},
        "coboundaries": {"free_rank": h.coboundaries.free_rank, "torsion": h.coboundaries.torsion, "group": h.coboundaries.to_string()},
        "cohomology": {"free_rank": h.cohomology.free_rank, "torsion": h.cohomology.torsion, "group": h.cohomology.to_string()},
    })
}

fn cochain_value(c: &Cochain) -> Value {
    serde_json::to_value(c.to_json()).expect("cochain serializes")
}

fn cmd_cohomology(ctx: &mut Ctx, a: &CohomologyArgs) -> Result<Value> {
    let q = ctx.quandle(&a.quandle)?;
    let g = CoeffGroup::parse(&a.coeff)?;
    let flag = !a.no_quandle_flag;
    let (h, label) = match &a.alpha_per_orbit {
        Some(s) => {
            if a.degree != 2 {
                return Err(Error::InvalidDegree(format!("link-twisted groups are computed in degree 2, not {}", a.degree)));
            }
            (link_twisted_cohomology(&q, &g, &parse_scalars(s)?, flag)?, format!("link-twisted({s})"))
        }
        None => {
            let m = ctx.module(&a.module, &q)?;
            let spec = DifferentialSpec::parse(&a.spec)?;
            (cohomology_basis(&q, &m, &g, &spec, a.degree, flag)?, spec.to_string())
        }
    };
    let mut out = cohomology_json(&h);
    out["v"] = json!(1);
    out["spec"] = json!(label);
    out["coeff"] = json!(g.to_string());
    if a.basis {
        out["cocycle_basis"] = json!(h.cocycle_basis().iter().map(cochain_value).collect::<Vec<_>>());
        out["coboundary_basis"] = json!(h.coboundary_basis().iter().map(cochain_value).collect::<Vec<_>>());
    }
    if let Some(path) = &a.member {
        let phi = ctx.cochain(path, &q)?;
        out["member"] = json!({"cocycle": h.is_cocycle(&phi)?, "coboundary": h.is_coboundary(&phi)?});
    }
    if a.sample > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        out["samples"] = json!((0..a.sample).map(|_| cochain_value(&h.random_cocycle(&mut rng))).collect::<Vec<_>>());
    }
    Ok(out)
}

fn cmd_invariant(ctx: &mut Ctx, a: &InvariantArgs) -> Result<String> {
    let d = ctx.diagram(&a.diagram)?;
    let q = ctx.quandle(&a.quandle)?;
    let module = a.module.as_deref().map(|m| ctx.module(m, &q)).transpose()?;
    let omega = match (&a.cocycle, &a.coeff) {
        (Some(path), _) => ctx.cochain(path, &q)?,
        (None, Some(g)) => {
            let m = module.clone().unwrap_or_else(|| Arc::new(QModule::trivial(&q)));
            Cochain::zero(q.clone(), m, CoeffGroup::parse(g)?, 2)?
        }
        (None, None) => return Err(Error::Parse("one of --cocycle or --coeff is required".into())),
    };
    if let Some(m) = &module {
        if m.to_json() != omega.module_arc().to_json() {
            return Err(Error::SizeMismatch("--module differs from the module of the cocycle".into()));
        }
    }
    let alpha = || -> Result<Scalar> {
        Scalar::parse(a.alpha.as_deref().ok_or_else(|| Error::Parse("--alpha is required".into()))?)
    };
    let exterior = || -> Result<ModElem> {
        match &a.exterior {
            Some(e) => parse_elem(e),
            None => Ok(omega.module_arc().zero()),
        }
    };
    let flavor = match a.flavor {
        FlavorArg::Classical => Flavor::Classical,
        FlavorArg::Shadow => Flavor::Shadow { exterior: exterior()? },
        FlavorArg::Positive => Flavor::Positive,
        FlavorArg::Twisted => Flavor::Twisted { alpha: alpha()? },
        FlavorArg::ShadowTwisted => Flavor::ShadowTwisted { exterior: exterior()?, alpha: alpha()? },
        FlavorArg::LinkTwisted => {
            let s = a.alpha_per_orbit.as_deref().ok_or_else(|| Error::Parse("--alpha-per-orbit is required".into()))?;
            Flavor::LinkTwisted { alphas: parse_scalars(s)? }
        }
    };
    let opts = Options { validate: !a.force };
    let (out, colorings) = if a.refine {
        let parts = orbit_refined_multisets(&d, &flavor, &omega, opts)?;
        let total: u64 = parts.values().map(|w| w.total()).sum();
        let refined: Vec<Value> = parts
            .iter()
            .map(|(orbits, w)| {
                let ms: Value = serde_json::from_str(&w.to_json_string()).expect("multiset json");
                json!({"orbits": orbits, "multiset": ms["multiset"]})
            })
            .collect();
        (serde_json::to_string(&json!({"v": 1, "refined": refined})).expect("json serializes") + "\n", total)
    } else {
        let w = invariant_multiset(&d, &flavor, &omega, opts)?;
        (w.to_json_string() + "\n", w.total())
    };
    if let Some(path) = &a.metadata {
        let meta = json!({
            "v": 1,
            "flavor": flavor.to_string(),
            "diagram": a.diagram,
            "quandle": a.quandle,
            "cocycle": a.cocycle,
            "module": omega.module_arc().to_json(),
            "coeff": omega.coeff().to_string(),
            "colorings": colorings,
            "validated": !a.force,
        });
        std::fs::write(path, pretty(&meta)).map_err(|e| io_error(e, &path.display().to_string()))?;
    }
    Ok(out)
}

fn cmd_rmove(ctx: &mut Ctx, mv: &MoveCmd) -> Result<Value> {
    let d = match mv {
        MoveCmd::R1 { diagram, semiarc, sign, side } => r1_insert(&ctx.diagram(diagram)?, *semiarc, *sign, Side::parse(side)?)?,
        MoveCmd::R2 { diagram, over, under, sides } => {
            let sides = match sides {
                Some(s) => match s.split_once(',') {
                    Some((l, r)) => Some((Side::parse(l.trim())?, Side::parse(r.trim())?)),
                    None => return Err(Error::Parse(format!("--sides expects two sides, got `{s}`"))),
                },
                None => None,
            };
            r2_insert(&ctx.diagram(diagram)?, *over, *under, sides)?
        }
    };
    Ok(serde_json::to_value(d.to_json()).expect("diagram serializes"))
}

fn cmd_corpus_verify() -> Result<(Value, i32)> {
    let golden: BTreeMap<String, usize> = serde_json::from_str(corpus::GOLDEN_COLORINGS)?;
    let mut all = true;
    let mut entries = Vec::new();
    for e in corpus::ENTRIES {
        let base = e.diagram()?;
        let (ra, rb) = e.r3_pair()?;
        let mut problems = Vec::new();
        for n in 3..=5 {
            let q = Quandle::dihedral(n);
            let got = [&base, &ra, &rb].map(|d| enumerate_colorings(d, &q).len());
            match golden.get(&format!("{}/dihedral{n}", e.name)) {
                Some(&want) if got.iter().all(|&g| g == want) => {}
                Some(&want) => problems.push(format!("dihedral{n}: expected {want}, got {got:?}")),
                None => problems.push(format!("dihedral{n}: no golden count")),
            }
        }
        if ra.component_count() != base.component_count() || rb.component_count() != base.component_count() {
            problems.push("R3 pair has a different number of components".into());
        }
        all &= problems.is_empty();
        entries.push(json!({"name": e.name, "ok": problems.is_empty(), "problems": problems}));
    }
    Ok((json!({"v": 1, "pass": all, "entries": entries}), if all { 0 } else { 1 }))
}

fn cmd_replay(ctx: &mut Ctx, path: &Path) -> Result<(Value, i32)> {
    let m: RunManifest = serde_json::from_str(&ctx.read(&path.to_string_lossy())?)?;
    let mut changed = Vec::new();
    for i in &m.inputs {
        match std::fs::read(&i.path) {
            Ok(bytes) if sha256_hex(&bytes) == i.sha256 => {}
            _ => changed.push(i.path.clone()),
        }
    }
    let again = run_inner(m.command.iter().map(OsString::from).collect());
    let digest = sha256_hex(again.stdout.as_bytes());
    let ok = changed.is_empty() && digest == m.output_sha256 && again.code == m.exit_code;
    let out = json!({
        "v": 1,
        "reproduced": ok,
        "changed_inputs": changed,
        "output_sha256": digest,
        "expected_sha256": m.output_sha256,
        "exit_code": again.code,
        "version": env!("CARGO_PKG_VERSION"),
        "manifest_version": m.version,
    });
    Ok((out, if ok { 0 } else { 1 }))
}

fn dispatch(ctx: &mut Ctx, cmd: &Command) -> Result<(String, i32)> {
    let value = |v: Result<Value>| v.map(|v| (pretty(&v), 0));
    let coded = |r: Result<(Value, i32)>| r.map(|(v, c)| (pretty(&v), c));
    match cmd {
        Command::Check(a) => coded(cmd_check(ctx, a)),
        Command::Orbits { quandle, module } => value(cmd_orbits(ctx, quandle, module.as_deref())),
        Command::Regions { diagram } => value(cmd_regions(ctx, diagram)),
        Command::Indices { diagram } => value(cmd_indices(ctx, diagram)),
        Command::Colorings { diagram, quandle, module, exterior, count } => {
            value(cmd_colorings(ctx, diagram, quandle, module.as_deref(), exterior.as_deref(), *count))
        }
        Command::Cohomology(a) => value(cmd_cohomology(ctx, a)),
        Command::Invariant(a) => cmd_invariant(ctx, a).map(|s| (s, 0)),
        Command::Rmove { mv } => value(cmd_rmove(ctx, mv)),
        Command::CorpusVerify => coded(cmd_corpus_verify()),
        Command::Replay { manifest } => coded(cmd_replay(ctx, manifest)),
    }
}

/// Drops `--manifest FILE` so a recorded command can be replayed without rewriting it.
fn strip_manifest(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a.clone());
        }
    }
    out
}

fn run_inner(args: Vec<OsString>) -> Outcome {
    let start = Instant::now();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let mut ctx = Ctx::default();
    let mut outcome = match dispatch(&mut ctx, &cli.command) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => {
            let code = if e.is_validation() { 1 } else { 2 };
            Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
        }
    };
    if let Some(path) = &cli.manifest {
        let strings: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
        let m = RunManifest {
            v: 1,
            command: strip_manifest(&strings),
            inputs: ctx.inputs.into_iter().map(|(path, sha256)| InputDigest { path, sha256 }).collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            output_sha256: sha256_hex(outcome.stdout.as_bytes()),
            exit_code: outcome.code,
            wall_ms: start.elapsed().as_millis() as u64,
        };
        let text = serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            outcome.stderr.push_str(&format!("error: {}: {e}\n", path.display()));
            outcome.code = 2;
        }
    }
    outcome
}

/// Runs `qci` with the given arguments (the first one is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    run_inner(args.into_iter().map(Into::into).collect())
}

/// Sizes the global thread pool from `QCI_THREADS`.
pub fn init_threads() {
    if let Some(n) = std::env::var("QCI_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

pub fn main() {
    init_threads();
    let o = run(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    std::process::exit(o.code);
}
