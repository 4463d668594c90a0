//! Command-line front end for `ksk-core`: file formats and subcommand dispatch.
//!
//! [`run`] takes an argument vector and two sinks and returns the process exit
//! code, so the binary is a thin wrapper and tests drive the same code path.

pub mod formats;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use ksk_core::circlemaps::rotation_number;
use ksk_core::constructions::{snasi_declared_type, snasi_single_component, torus_symmetry_structure};
use ksk_core::geometry::{
    detect_type, gauss_linking, torus_action, torus_knot, MatrixAction, RoundCircle, DEFAULT_LINK_SAMPLES,
    RESIDUAL_LIMIT,
};
use ksk_core::orthrep::{identify_family, OrthMatrix, RepSum};
use ksk_core::typing::{
    admissible_types, classify, restrict_cyclic, restrict_dihedral, snappy_decide, GroupShape, SnappyProfile,
    SymmetryType,
};
use ksk_core::zmod::GroupSpec;
use ksk_core::{Error, ErrorCategory, Result};
use serde_json::{json, Value};

/// Environment variable overriding default sample counts.
pub const SAMPLES_ENV: &str = "KSK_SAMPLES";

#[derive(Parser, Debug)]
#[command(name = "ksk", version, about = "Finite cyclic and dihedral symmetries of knots in S^3")]
struct Cli {
    /// Machine-readable output (also for errors).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the admissible symmetry types of a group (C<n> or D<n>).
    Enumerate {
        #[arg(long)]
        group: String,
    },
    /// Type of a representation string, or the rule eliminating it.
    Classify {
        #[arg(long)]
        rep: String,
    },
    /// Restrict a type to <rho^d> (cyclic) or <rho^d, rho^r sigma> (dihedral).
    Restrict {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: Option<u64>,
    },
    /// Detect the type of an invariant curve under a matrix action.
    Detect {
        #[arg(long)]
        action: String,
        #[arg(long)]
        curve: String,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Linking number of two curves.
    Link {
        #[arg(long = "curve-a")]
        curve_a: String,
        #[arg(long = "curve-b")]
        curve_b: String,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Write a round circle as a curve file.
    Circle {
        #[arg(long, value_enum)]
        plane: Plane,
        #[arg(long, default_value_t = 1024)]
        points: usize,
        #[arg(long)]
        out: String,
    },
    /// Torus knot T(p,q): declared dihedral structure, optionally with files.
    Torus {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        n: Option<u64>,
        /// Write the knot as a curve file.
        #[arg(long)]
        out: Option<String>,
        /// Write the D_n action (needs --n).
        #[arg(long = "action-out")]
        action_out: Option<String>,
        #[arg(long, default_value_t = 2048)]
        points: usize,
    },
    /// SNASI strand closure check and declared type.
    Snasi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: u64,
    },
    /// Rotation number of a circle map.
    Rotnum {
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 1024)]
        iters: u64,
        /// Largest denominator tried when snapping to a fraction.
        #[arg(long = "max-den", default_value_t = 32)]
        max_den: u64,
    },
    /// Possible types from coarse symmetry-group data of a hyperbolic knot.
    SnappyDecide {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        invertible: bool,
        #[arg(long)]
        amphichiral: bool,
        /// Action on meridian and longitude as "x,y" (order-two groups only).
        #[arg(long, allow_hyphen_values = true)]
        cusp: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Plane {
    Xy,
    Zw,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Shape {
    Trivial,
    Cyclic,
    Dihedral,
}

/// Output of one subcommand in both renderings.
struct Report {
    human: String,
    json: Value,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.category() {
        ErrorCategory::Argument => 2,
        ErrorCategory::Classification => 3,
        ErrorCategory::Numeric => 4,
    }
}

fn error_json(e: &Error) -> Value {
    let category = match e.category() {
        ErrorCategory::Argument => "argument",
        ErrorCategory::Classification => "classification",
        ErrorCategory::Numeric => "numeric",
    };
    let mut obj = json!({ "kind": e.kind(), "category": category, "message": e.to_string() });
    if let Error::NotAKnotAction { family, rule } = e {
        obj["family"] = json!(family.to_string());
        obj["rule"] = json!(rule.tag());
    }
    json!({ "error": obj })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = dispatch(cli.command);
    match result {
        Ok(r) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r.json).unwrap_or_default())
            } else {
                write!(out, "{}", r.human)
            };
            0
        }
        Err(e) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&error_json(&e)).unwrap_or_default())
            } else {
                writeln!(err, "error: {e}")
            };
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Enumerate { group } => enumerate(&group),
        Command::Classify { rep } => classify_cmd(&rep),
        Command::Restrict { ty, d, r } => restrict(&ty, d, r),
        Command::Detect { action, curve, samples } => detect(&action, &curve, samples),
        Command::Link { curve_a, curve_b, samples } => link(&curve_a, &curve_b, samples),
        Command::Circle { plane, points, out } => circle(plane, points, &out),
        Command::Torus { p, q, n, out, action_out, points } => torus(p, q, n, out, action_out, points),
        Command::Snasi { n, a } => snasi(n, a),
        Command::Rotnum { map, iters, max_den } => rotnum(&map, iters, max_den),
        Command::SnappyDecide { shape, order, invertible, amphichiral, cusp } => {
            snappy(shape, order, invertible, amphichiral, cusp.as_deref())
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("cannot read {path}: {e}")))
}

fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Argument(format!("cannot write {path}: {e}")))
}

/// Flag value, else `KSK_SAMPLES`, else the default.
fn samples(flag: Option<usize>) -> Result<usize> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SAMPLES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("{SAMPLES_ENV}={v:?} is not a sample count"))),
        Err(_) => Ok(DEFAULT_LINK_SAMPLES),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn type_row(t: SymmetryType) -> Value {
    let mut row = json!({
        "type": t.to_string(),
        "tag": t.tag().name(),
        "quantification": t.quantification(),
        "even_n_only": t.needs_even_n(),
        "prime": t.prime_admissible(),
        "good_diagram": t.good_diagram(),
    });
    if let Some((k, s)) = t.c2_fixed_dims() {
        row["fix_knot"] = json!(k);
        row["fix_sphere"] = json!(s);
    }
    if let Some(d) = t.rho_fixed_sphere_dim() {
        row["fix_rho"] = json!(d);
    }
    if let (Some(r), Some((s, rs))) = (t.rho_type(), t.reflection_types()) {
        row["rho_type"] = json!(r.to_string());
        row["sigma_type"] = json!(s.tag().name());
        row["rho_sigma_type"] = json!(rs.tag().name());
    }
    row
}

fn enumerate(group: &str) -> Result<Report> {
    let g: GroupSpec = group.parse()?;
    let types = admissible_types(g);
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for t in &types {
        *counts.entry(t.tag().name()).or_default() += 1;
    }
    let mut human = String::new();
    let _ = writeln!(human, "{} admissible types for {g}", types.len());
    for t in &types {
        let mut cols = vec![format!("{:<16}", t.to_string())];
        if let Some((k, s)) = t.c2_fixed_dims() {
            cols.push(format!("fix_knot={k:<2} fix_sphere={s:<2}"));
        }
        if let (Some(r), Some((s, rs))) = (t.rho_type(), t.reflection_types()) {
            cols.push(format!("rho={:<14} sigma={:<5} rho_sigma={:<5}", r.to_string(), s.tag().name(), rs.tag().name()));
        } else if let Some(d) = t.rho_fixed_sphere_dim() {
            cols.push(format!("fix_rho={d:<2}"));
        }
        cols.push(format!("prime={:<3} good={}", yes_no(t.prime_admissible()), yes_no(t.good_diagram())));
        let _ = writeln!(human, "{}", cols.join("  ").trim_end());
    }
    Ok(Report {
        human,
        json: json!({
            "group": g.to_string(),
            "count": types.len(),
            "counts_by_tag": counts,
            "types": types.iter().map(|&t| type_row(t)).collect::<Vec<_>>(),
        }),
    })
}

fn classify_cmd(rep: &str) -> Result<Report> {
    let r: RepSum = rep.parse()?;
    let t = classify(&r)?;
    let family = if r.group().is_order_two() { None } else { Some(identify_family(&r)?.family.to_string()) };
    let mut human = format!("{r} -> {t}");
    if let Some(f) = &family {
        let _ = write!(human, " (family {f})");
    }
    human.push('\n');
    let mut js = json!({ "rep": r.to_string(), "family": family });
    js["type"] = type_row(t);
    Ok(Report { human, json: js })
}

fn restrict(ty: &str, d: u64, r: Option<u64>) -> Result<Report> {
    let t: SymmetryType = ty.parse()?;
    let n = t.n();
    let (s, sub) = if t.is_dihedral() {
        let r = r.unwrap_or(0);
        (restrict_dihedral(t, n, d, r)?, format!("<rho^{d}, rho^{r} sigma>"))
    } else {
        if r.is_some() {
            return Err(Error::Argument("--r applies to dihedral types only".into()));
        }
        (restrict_cyclic(t, n, d)?, format!("<rho^{d}>"))
    };
    Ok(Report {
        human: format!("{t} restricted to {sub} = {s}\n"),
        json: json!({ "type": t.to_string(), "d": d, "r": r, "subgroup": sub, "restricted": s.to_string() }),
    })
}

fn detect(action: &str, curve: &str, samples_flag: Option<usize>) -> Result<Report> {
    let a = formats::read_action(&read(action)?)?;
    let k = formats::read_curve(&read(curve)?)?;
    let d = detect_type(&a, &k, samples(samples_flag)?)?;
    let mut human = format!("{}\ngenerator: rho^{}\n", d.ty, d.generator_power);
    let mut links = Vec::new();
    for m in &d.linking {
        let l = &m.linking;
        let _ = writeln!(human, "lk(K, {}) = {} (raw {:.6}, residual {:.2e})", m.circle, l.value, l.raw, l.residual);
        links.push(json!({ "circle": m.circle, "value": l.value, "raw": l.raw, "residual": l.residual, "samples": l.samples }));
    }
    Ok(Report {
        human,
        json: json!({ "type": d.ty.to_string(), "generator_power": d.generator_power, "linking": links }),
    })
}

fn link(a: &str, b: &str, samples_flag: Option<usize>) -> Result<Report> {
    let ca = formats::read_curve(&read(a)?)?;
    let cb = formats::read_curve(&read(b)?)?;
    let l = gauss_linking(&ca, &cb, samples(samples_flag)?)?;
    Ok(Report {
        human: format!(
            "{} (residual < {RESIDUAL_LIMIT})\nraw {:.6} residual {:.2e} samples {} min_distance {:.3e}\n",
            l.value, l.raw, l.residual, l.samples, l.min_distance
        ),
        json: json!({
            "value": l.value, "raw": l.raw, "residual": l.residual,
            "samples": l.samples, "min_distance": l.min_distance,
        }),
    })
}

fn circle(plane: Plane, points: usize, out: &str) -> Result<Report> {
    let (c, name) = match plane {
        Plane::Xy => (RoundCircle::xy(), "S1_xy"),
        Plane::Zw => (RoundCircle::zw(), "S1_zw"),
    };
    let pts = c.curve().sample(points);
    write_file(out, &formats::write_curve(&pts))?;
    Ok(Report {
        human: format!("wrote {name} ({points} points) to {out}\n"),
        json: json!({ "circle": name, "points": points, "out": out }),
    })
}

fn rot2(t: f64) -> Result<OrthMatrix> {
    OrthMatrix::new(nalgebra::DMatrix::from_row_slice(2, 2, &[t.cos(), -t.sin(), t.sin(), t.cos()]))
}

fn torus(p: i64, q: i64, n: Option<u64>, out: Option<String>, action_out: Option<String>, points: usize) -> Result<Report> {
    let k = torus_knot(p, q)?;
    let orders = match n {
        Some(n) => vec![n],
        None => vec![p as u64, q as u64],
    };
    let mut human = format!("T({p},{q}): lk with S1_zw = {p}, with S1_xy = {q}\n");
    let mut structures = Vec::new();
    for &m in &orders {
        let t = torus_symmetry_structure(p as u64, q as u64, m)?;
        let _ = writeln!(human, "D{m}: {t}");
        structures.push(json!({ "n": m, "type": t.to_string() }));
    }
    let mut js = json!({ "p": p, "q": q, "structures": structures });
    if let Some(path) = out {
        write_file(&path, &formats::write_curve(&k.sample(points)))?;
        let _ = writeln!(human, "curve: {path} ({points} points)");
        js["curve"] = json!(path);
    }
    if let Some(path) = action_out {
        let Some(m) = n else {
            return Err(Error::Argument("--action-out needs --n".into()));
        };
        let flip = OrthMatrix::new(nalgebra::DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]))?;
        let rho = torus_action(p, q, &rot2(std::f64::consts::TAU / m as f64)?)?;
        let sigma = torus_action(p, q, &flip)?;
        let a = MatrixAction::new(GroupSpec::dihedral(m)?, &rho, Some(&sigma))?;
        write_file(&path, &formats::write_action(&a))?;
        let _ = writeln!(human, "action: {path}");
        js["action"] = json!(path);
    }
    Ok(Report { human, json: js })
}

fn snasi(n: u64, a: u64) -> Result<Report> {
    let single = snasi_single_component(n, a)?;
    let mut human = format!("n={n} a={a}: {}\n", if single { "single component" } else { "several components" });
    let mut js = json!({ "n": n, "a": a, "single_component": single });
    if single {
        let c = snasi_declared_type(n, a)?;
        let _ = writeln!(human, "declared type {} (axis linking {})", c.ty, c.axis_linking);
        js["type"] = json!(c.ty.to_string());
        js["axis_linking"] = json!(c.axis_linking);
    }
    Ok(Report { human, json: js })
}

fn rotnum(map: &str, iters: u64, max_den: u64) -> Result<Report> {
    let f = formats::read_circle_map(&read(map)?)?;
    let r = rotation_number(&f, iters)?;
    let snapped = r.snap(max_den);
    let mut human = format!("{:.9} +/- {:.2e} ({} iterations)\n", r.value, r.error_bound, r.iterations);
    if let Some((a, b)) = snapped {
        let _ = writeln!(human, "= {a}/{b}");
    }
    Ok(Report {
        human,
        json: json!({
            "value": r.value, "error_bound": r.error_bound, "iterations": r.iterations,
            "fraction": snapped.map(|(a, b)| vec![a, b as i64]),
        }),
    })
}

fn parse_cusp(s: &str) -> Result<(i8, i8)> {
    let bad = || Error::Argument(format!("--cusp expects \"x,y\" with entries +-1, got {s:?}"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    let p = |v: &str| v.trim().parse::<i8>().map_err(|_| bad());
    Ok((p(x)?, p(y)?))
}

fn snappy(shape: Shape, order: u64, invertible: bool, amphichiral: bool, cusp: Option<&str>) -> Result<Report> {
    let shape = match shape {
        Shape::Trivial => GroupShape::Trivial,
        Shape::Cyclic => GroupShape::Cyclic,
        Shape::Dihedral => GroupShape::Dihedral,
    };
    let cusp = cusp.map(parse_cusp).transpose()?;
    let tags = snappy_decide(SnappyProfile { shape, order, invertible, amphichiral, cusp })?;
    let names: Vec<&str> = tags.iter().map(|t| t.name()).collect();
    Ok(Report {
        human: format!("{}\n", if names.is_empty() { "(no symmetry)".to_string() } else { names.join(" ") }),
        json: json!({ "types": names }),
    })
}
