//! The `triarea` command line: `gen`, `census`, `audit` and `incidence`.
//!
//! Exit codes: 0 success, 1 audit failure, 2 usage or parse error,
//! 3 construction failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::census::{
    acute_min_area_count, area_census, distinct_areas_common_side, line_triple_census, max_area, min_nonzero_area,
    triples_with_key, CensusOptions,
};
use crate::charging::{audit_charge_2d, audit_charge_3d, grid_visibility_audit, AuditReport, Clause};
use crate::constructions::{self as cons, Certificate, GeneratedSet, Geometry, PrismShape, TwoRowsMode};
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, AreaKey, Geom, Point3};
use crate::incidence::{
    cylinder_multiset, cylinder_triple_intersection, point_cylinder_incidences_with, rich_lines, Cylinder3, Membership,
};
use crate::io::{digest, format_geometry, read_cylinders, read_geometry, CylinderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_AUDIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "triarea", version, about = "Exact triangle-area census, constructions, charging audits and incidence tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a construction and its certificate.
    Gen(GenArgs),
    /// Count triangle areas of a point or line file.
    Census(CensusArgs),
    /// Run a charging, grid or certificate audit.
    Audit(AuditArgs),
    /// Rich lines, point-cylinder incidences or three-cylinder counts.
    Incidence(IncidenceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Grid,
    Lattice,
    ConvexUnit,
    PerturbedMinkowski,
    Prism,
    TwoRows,
    Sphere,
    LineFamilies,
    GreatCircle,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub construction: Construction,
    #[arg(long)]
    pub w: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub i: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long, value_enum)]
    pub shape: Option<ShapeArg>,
    #[arg(long, value_enum)]
    pub mode: Option<RowsArg>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Point file to write; the certificate goes next to it as `.cert.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Equilateral,
    Rhombus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RowsArg {
    Acute,
    Distinct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusMode {
    All,
    Unit,
    Min,
    Max,
    Distinct,
    AcuteMin,
    CommonSide,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub mode: CensusMode,
    #[arg(long)]
    pub witnesses: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Charge2d,
    Charge3d,
    Grid,
    Certificate,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(long)]
    pub w: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IncidenceArgs {
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// List lines through at least this many points (planar input).
    #[arg(long, alias = "k")]
    pub rich: Option<usize>,
    /// Use the unit-area cylinders of all point pairs.
    #[arg(long)]
    pub from_pairs: bool,
    /// Cylinder list (JSON) to test the points against.
    #[arg(long)]
    pub cylinders: Option<PathBuf>,
    /// Projective membership for `--cylinders`.
    #[arg(long)]
    pub projective: bool,
    /// JSON file holding exactly three cylinders.
    #[arg(long)]
    pub cyl_triple: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub results: Value,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Command outcome before timing is attached.
struct Outcome {
    params: Value,
    digest: Option<String>,
    results: Value,
    seed: Option<u64>,
    code: i32,
    out: Option<PathBuf>,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ConstructionFailed { .. } => EXIT_CONSTRUCTION,
        Error::AuditFailed(_) | Error::ChargingInvariantViolated(_) => EXIT_AUDIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// reports to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let name = match &cli.command {
        Command::Gen(_) => "gen",
        Command::Census(_) => "census",
        Command::Audit(_) => "audit",
        Command::Incidence(_) => "incidence",
    };
    let res = match cli.command {
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Census(a) => cmd_census(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Incidence(a) => cmd_incidence(a),
    };
    let o = match res {
        Ok(Some(o)) => o,
        Ok(None) => return EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::ConstructionFailed { seed, .. } = &e {
                let _ = writeln!(stderr, "seed: {seed}");
            }
            return exit_code(&e);
        }
    };
    let report = Report {
        command: name.into(),
        params: o.params,
        input_digest: o.digest,
        results: o.results,
        runtime_ms: start.elapsed().as_millis() as u64,
        seed: o.seed,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let written = match &o.out {
        Some(p) => std::fs::write(p, &text).map_err(Error::from),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    o.code
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParam(format!("missing --{flag}")))
}

fn generate(a: &GenArgs, seed: u64) -> Result<GeneratedSet> {
    match a.construction {
        Construction::Grid => cons::gen_grid(need(a.w, "w")?, need(a.h, "h")?),
        Construction::Lattice => cons::gen_erdos_purdy_lattice(need(a.n, "n")?),
        Construction::ConvexUnit => cons::gen_convex_unit_seeded(need(a.i, "i")?, seed),
        Construction::PerturbedMinkowski => cons::gen_perturbed_minkowski_seeded(need(a.k, "k")?, seed),
        Construction::Prism => {
            let shape = match a.shape.unwrap_or(ShapeArg::Equilateral) {
                ShapeArg::Equilateral => PrismShape::Equilateral,
                ShapeArg::Rhombus => PrismShape::Rhombus,
            };
            cons::gen_prism(need(a.n, "n")?, shape)
        }
        Construction::TwoRows => {
            let mode = match a.mode.unwrap_or(RowsArg::Acute) {
                RowsArg::Acute => TwoRowsMode::Acute,
                RowsArg::Distinct => TwoRowsMode::Distinct,
            };
            cons::gen_two_rows(need(a.n, "n")?, mode)
        }
        Construction::Sphere => cons::gen_sphere_orthogonal(need(a.m, "m")?),
        Construction::LineFamilies => cons::gen_line_families(need(a.m, "m")?),
        Construction::GreatCircle => unreachable!("handled separately"),
    }
}

fn cert_path(out: &Path) -> PathBuf {
    out.with_extension("cert.json")
}

fn cmd_gen(a: GenArgs, stdout: &mut dyn Write) -> Result<Option<Outcome>> {
    let seeded = matches!(a.construction, Construction::ConvexUnit | Construction::PerturbedMinkowski);
    let seed = a.seed.unwrap_or(cons::DEFAULT_SEED);
    if a.construction == Construction::GreatCircle {
        return gen_great_circle(&a, stdout);
    }
    let g = generate(&a, seed)?;
    let text = format_geometry(&g.geometry);
    let Some(out) = &a.out else {
        stdout.write_all(text.as_bytes())?;
        return Ok(None);
    };
    std::fs::write(out, &text)?;
    let mut results = json!({ "n": g.geometry.len(), "points_file": out.display().to_string() });
    if let Some(c) = &g.certificate {
        let cp = cert_path(out);
        std::fs::write(&cp, serde_json::to_string_pretty(c)? + "\n")?;
        results["certificate_size"] = json!(c.len());
        results["certificate_file"] = json!(cp.display().to_string());
    }
    Ok(Some(Outcome {
        params: Value::Object(g.params.clone().into_iter().collect()),
        digest: Some(digest(&g.geometry)),
        results,
        seed: seeded.then_some(seed),
        code: EXIT_OK,
        out: None,
    }))
}

fn gen_great_circle(a: &GenArgs, stdout: &mut dyn Write) -> Result<Option<Outcome>> {
    let g = need(a.g, "g")?;
    let cfg = cons::gen_great_circle_config(g)?;
    let geom = Geometry::Space(cfg.points.clone());
    let text = format_geometry(&geom);
    let cyls: Vec<CylinderSpec> = cfg.cylinders.iter().map(CylinderSpec::from_cylinder).collect();
    let Some(out) = &a.out else {
        stdout.write_all(text.as_bytes())?;
        return Ok(None);
    };
    std::fs::write(out, &text)?;
    let cp = out.with_extension("cyl.json");
    std::fs::write(&cp, serde_json::to_string_pretty(&json!({ "cylinders": cyls, "projective": true }))? + "\n")?;
    Ok(Some(Outcome {
        params: json!({ "construction": "great-circle", "g": g }),
        digest: Some(digest(&geom)),
        results: json!({
            "n": cfg.points.len(),
            "cylinders": cfg.cylinders.len(),
            "planar_incidences": cfg.planar_incidences,
            "points_file": out.display().to_string(),
            "cylinders_file": cp.display().to_string(),
        }),
        seed: None,
        code: EXIT_OK,
        out: None,
    }))
}

fn key_str(k: &AreaKey) -> String {
    fmt_rat(&k.0)
}

fn extremal_json<P: Geom>(pts: &[P], max: bool, witnesses: bool) -> Result<Value> {
    let r = if max { max_area(pts) } else { min_nonzero_area(pts) };
    match r {
        Ok(e) => {
            let mut v = json!({ "key": key_str(&e.key), "count": e.count });
            if witnesses {
                v["witnesses"] = json!(e.witnesses);
            }
            Ok(v)
        }
        Err(Error::NoNonzeroTriangle) => Ok(json!("none")),
        Err(e) => Err(e),
    }
}

fn census_points<P: Geom>(pts: &[P], a: &CensusArgs, acute: impl Fn() -> Result<u64>) -> Result<Value> {
    let opts = CensusOptions { witnesses: a.witnesses, threads: a.threads };
    Ok(match a.mode {
        CensusMode::All => {
            let c = area_census(pts, &opts)?;
            let classes: Vec<Value> = c
                .classes
                .iter()
                .map(|(k, cl)| {
                    let mut v = json!({ "key": key_str(k), "count": cl.count });
                    if let Some(w) = &cl.witnesses {
                        v["witnesses"] = json!(w);
                    }
                    v
                })
                .collect();
            json!({
                "dim": c.dim,
                "n": c.n,
                "triples": c.total(),
                "degenerate": c.degenerate_count,
                "distinct": c.distinct_count(),
                "modal": c.modal_class().map(|(k, cl)| json!({ "key": key_str(k), "count": cl.count })),
                "classes": classes,
            })
        }
        CensusMode::Unit => {
            let key = AreaKey::unit(P::DIM);
            let w = triples_with_key(pts, &key)?;
            let mut v = json!({ "key": key_str(&key), "count": w.len() });
            if a.witnesses {
                v["witnesses"] = json!(w);
            }
            v
        }
        CensusMode::Min => extremal_json(pts, false, a.witnesses)?,
        CensusMode::Max => extremal_json(pts, true, a.witnesses)?,
        CensusMode::Distinct => json!({ "count": area_census(pts, &opts)?.distinct_count() }),
        CensusMode::AcuteMin => match acute() {
            Ok(c) => json!({ "count": c }),
            Err(Error::NoNonzeroTriangle) => json!("none"),
            Err(e) => return Err(e),
        },
        CensusMode::CommonSide => {
            let (seg, count) = distinct_areas_common_side(pts)?;
            json!({ "segment": [seg.p.to_string(), seg.q.to_string()], "distinct": count })
        }
    })
}

fn cmd_census(a: CensusArgs) -> Result<Option<Outcome>> {
    let g = read_geometry(&a.input)?;
    let results = match &g {
        Geometry::Plane(p) => census_points(p, &a, || acute_min_area_count(p))?,
        Geometry::Space(p) => census_points(p, &a, || Err(Error::InvalidParam("acute-min needs a planar point set".into())))?,
        Geometry::Lines(l) => {
            if a.mode != CensusMode::All {
                return Err(Error::InvalidParam("line files support --mode all only".into()));
            }
            let c = line_triple_census(l)?;
            let classes: Vec<Value> = c.classes.iter().map(|(k, n)| json!({ "key": key_str(k), "count": n })).collect();
            json!({
                "lines": c.n,
                "triples": c.total(),
                "skipped": c.skipped,
                "modal": c.modal_class().map(|(k, n)| json!({ "key": key_str(k), "count": n })),
                "classes": classes,
            })
        }
    };
    let mode = CensusMode::to_possible_value(&a.mode).map(|v| v.get_name().to_string());
    Ok(Some(Outcome {
        params: json!({ "in": a.input.display().to_string(), "mode": mode, "witnesses": a.witnesses }),
        digest: Some(digest(&g)),
        results,
        seed: None,
        code: EXIT_OK,
        out: a.out,
    }))
}

fn audit_json(r: &AuditReport) -> Value {
    json!({ "pass": r.passed(), "clauses": r.clauses, "stats": r.stats })
}

fn cmd_audit(a: AuditArgs) -> Result<Option<Outcome>> {
    let check = Check::to_possible_value(&a.check).map(|v| v.get_name().to_string());
    let mut params = Map::new();
    params.insert("check".into(), json!(check));
    let (rep, dig) = match a.check {
        Check::Grid => {
            let (w, h) = (need(a.w, "w")?, need(a.h, "h")?);
            params.insert("w".into(), json!(w));
            params.insert("h".into(), json!(h));
            (grid_visibility_audit(w, h)?, None)
        }
        Check::Charge2d | Check::Charge3d => {
            let path = need(a.input.clone(), "in")?;
            params.insert("in".into(), json!(path.display().to_string()));
            let g = read_geometry(&path)?;
            let rep = match (&g, a.check) {
                (Geometry::Plane(p), Check::Charge2d) => audit_charge_2d(p)?,
                (Geometry::Space(p), Check::Charge3d) => audit_charge_3d(p)?,
                _ => return Err(Error::InvalidParam("charge2d needs dim=2 input, charge3d needs dim=3".into())),
            };
            (rep, Some(digest(&g)))
        }
        Check::Certificate => {
            let path = need(a.input.clone(), "in")?;
            let cpath = a.cert.clone().unwrap_or_else(|| cert_path(&path));
            params.insert("in".into(), json!(path.display().to_string()));
            params.insert("cert".into(), json!(cpath.display().to_string()));
            let g = read_geometry(&path)?;
            let cert: Certificate = serde_json::from_str(&std::fs::read_to_string(&cpath)?)
                .map_err(|e| Error::Parse(format!("certificate JSON: {e}")))?;
            let mut rep = AuditReport::default();
            match cons::verify_certificate(&g, &cert) {
                Ok(c) => {
                    rep.clauses.push(Clause { name: "certificate".into(), pass: true, witness: None });
                    rep.stats.insert("checked".into(), json!(c.checked));
                    if let Some(m) = c.target_is_global_min {
                        rep.stats.insert("target_is_global_min".into(), json!(m));
                    }
                    if let Some(n) = c.census_count {
                        rep.stats.insert("census_count".into(), json!(n));
                    }
                }
                Err(Error::AuditFailed(w)) => {
                    rep.clauses.push(Clause { name: "certificate".into(), pass: false, witness: Some(w) })
                }
                Err(e) => return Err(e),
            }
            (rep, Some(digest(&g)))
        }
    };
    let code = if rep.passed() { EXIT_OK } else { EXIT_AUDIT_FAIL };
    Ok(Some(Outcome { params: Value::Object(params), digest: dig, results: audit_json(&rep), seed: None, code, out: a.out }))
}

fn incidence_json(pts: &[Point3], cyls: &[Cylinder3], mode: Membership) -> Value {
    let r = point_cylinder_incidences_with(pts, cyls, mode);
    json!({ "total": r.total, "type1": r.type1, "type2": r.type2, "per_cylinder": r.per_cylinder })
}

fn cmd_incidence(a: IncidenceArgs) -> Result<Option<Outcome>> {
    let mut params = Map::new();
    let mut results = Map::new();
    let mut dig = None;
    if let Some(path) = &a.cyl_triple {
        params.insert("cyl_triple".into(), json!(path.display().to_string()));
        let cs = read_cylinders(path)?;
        if cs.len() != 3 {
            return Err(Error::Parse(format!("--cyl-triple needs exactly 3 cylinders, got {}", cs.len())));
        }
        let t = cylinder_triple_intersection(&cs[0], &cs[1], &cs[2])?;
        results.insert("cylinder_triple".into(), serde_json::to_value(&t)?);
    }
    if let Some(path) = &a.points {
        params.insert("points".into(), json!(path.display().to_string()));
        let g = read_geometry(path)?;
        dig = Some(digest(&g));
        if let Some(k) = a.rich {
            params.insert("rich".into(), json!(k));
            let Geometry::Plane(p) = &g else {
                return Err(Error::InvalidParam("--rich needs a dim=2 point file".into()));
            };
            let lines: Vec<Value> = rich_lines(p, k)?
                .into_iter()
                .map(|(l, c)| json!({ "line": [fmt_rat(&l.a), fmt_rat(&l.b), fmt_rat(&l.c)], "points": c }))
                .collect();
            results.insert("rich_lines".into(), json!({ "count": lines.len(), "lines": lines }));
        }
        let space: Option<&[Point3]> = match &g {
            Geometry::Space(p) => Some(p),
            _ => None,
        };
        if a.from_pairs {
            params.insert("from_pairs".into(), json!(true));
            let p = space.ok_or_else(|| Error::InvalidParam("--from-pairs needs a dim=3 point file".into()))?;
            let m = cylinder_multiset(p)?;
            let cyls: Vec<Cylinder3> = m.classes.keys().cloned().collect();
            let mut v = incidence_json(p, &cyls, Membership::Affine);
            v["distinct_cylinders"] = json!(m.distinct());
            v["pairs"] = json!(m.total());
            v["max_multiplicity"] = json!(m.max_multiplicity());
            v["multiplicity_buckets"] = json!(m.buckets());
            v["max_points_on_axis"] = json!(m.axis_points.values().max());
            results.insert("from_pairs".into(), v);
        }
        if let Some(cp) = &a.cylinders {
            params.insert("cylinders".into(), json!(cp.display().to_string()));
            params.insert("projective".into(), json!(a.projective));
            let p = space.ok_or_else(|| Error::InvalidParam("--cylinders needs a dim=3 point file".into()))?;
            let cyls = read_cylinders(cp)?;
            let mode = if a.projective { Membership::Projective } else { Membership::Affine };
            results.insert("incidences".into(), incidence_json(p, &cyls, mode));
        }
    }
    if results.is_empty() {
        return Err(Error::InvalidParam("nothing to do: pass --cyl-triple, or --points with --rich, --from-pairs or --cylinders".into()));
    }
    Ok(Some(Outcome { params: Value::Object(params), digest: dig, results: Value::Object(results), seed: None, code: EXIT_OK, out: a.out }))
}
