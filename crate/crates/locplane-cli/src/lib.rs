//! Command-line front end for `locplane`: plane export, axiom verification,
//! the counterexample suite, coordinatization, morphism decomposition,
//! extension and checking.
//!
//! [`run`] parses arguments, writes the report to the given sink and returns
//! the exit code: 0 on success, 1 on a mathematical failure, 2 on a usage or
//! parse error. Output depends only on the arguments and input files.

pub mod counterexamples;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use locplane::affine::{derive_affine, AffineRingPlane, DerivedAffinePlane};
use locplane::coordinatize::{build_tp_ring, coord_map, omega, omega4, proj_coordinatize, TpRing};
use locplane::morphisms::{decompose_aff, decompose_proj, extend_affine_to_projective, verify_morphism, PlaneMorphism};
use locplane::projective::{ProjLine, RingPlane};
use locplane::ring::{RingContext, RingHom};
use locplane::synthetic::{verify_synthetic, PlaneKind, SyntheticPlane, VerifyOptions};
use locplane::GeoError;

#[derive(Parser, Debug)]
#[command(name = "locplane", version, about = "Exact incidence geometry over finite local rings")]
pub struct Cli {
    /// Sampled configurations for Desargues and Pappus on large planes.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub samples: u64,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Projective,
    Affine,
}

impl From<Kind> for PlaneKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Projective => PlaneKind::Projective,
            Kind::Affine => PlaneKind::Affine,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the plane over a finite ring in the synthetic text format.
    #[command(alias = "export")]
    Build {
        /// Ring descriptor: zmod:N, dual:P.
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// With `--kind affine`: the plane derived from the projective plane
        /// by removing this line, in the point and line order `extend` uses.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        line: Option<Vec<i64>>,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a plane file against the projective or affine axioms.
    Verify {
        file: PathBuf,
        /// Theory to check against; defaults to the kind in the file.
        #[arg(long, value_enum)]
        theory: Option<Kind>,
    },
    /// Re-check the known counterexamples over Z/4, Z/6 and Q.
    Counterexamples,
    /// Recover the coordinate ring of a plane and the coordinate isomorphism.
    Coordinatize {
        file: PathBuf,
        /// Point indices X,Y,O (affine) or A,B,O,I (projective); the first
        /// admissible tuple when absent.
        #[arg(long, value_delimiter = ',')]
        frame: Option<Vec<usize>>,
        /// Ring descriptor to compare the recovered ring with.
        #[arg(long)]
        compare: Option<String>,
    },
    /// Split a morphism between ring planes into a matrix and a ring homomorphism.
    Decompose {
        /// Morphism file.
        file: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Extend a morphism of derived affine planes to the projective planes.
    Extend {
        /// Morphism file between the planes written by `build --kind affine --line`.
        file: PathBuf,
        #[arg(long)]
        source: String,
        /// Target ring; the source ring when absent.
        #[arg(long)]
        target: Option<String>,
        /// Line at infinity, as three integers.
        #[arg(long, value_delimiter = ',', num_args = 1, default_value = "0,0,1", allow_hyphen_values = true)]
        line: Vec<i64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Verify that a map between two plane files is a morphism.
    CheckMorphism { source: PathBuf, target: PathBuf, morphism: PathBuf },
}

/// A command failure and its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Usage(String),
    /// Exit 1; the report has already been written.
    Math(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}

type CliResult = Result<(), CliError>;

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Math errors for well-formed input; malformed or unsupported input is usage.
fn geo(e: GeoError) -> CliError {
    match e {
        GeoError::Invalid(_) | GeoError::RequiresFinite(_) | GeoError::Ring(_) => CliError::Usage(e.to_string()),
        _ => CliError::Math(e.to_string()),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Math(m) => m,
            };
            let _ = writeln!(err, "error: {msg}");
            e.code()
        }
    }
}

fn opts(cli: &Cli) -> VerifyOptions {
    VerifyOptions { seed: cli.seed, samples: cli.samples, ..VerifyOptions::default() }
}

fn read_plane(path: &Path) -> Result<SyntheticPlane, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    SyntheticPlane::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_morphism(path: &Path) -> Result<PlaneMorphism, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    PlaneMorphism::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn ring(desc: &str) -> Result<RingContext, CliError> {
    let ctx = RingContext::parse(desc).map_err(usage)?;
    if !ctx.is_finite() {
        return Err(usage(format!("{desc}: requires finite ring")));
    }
    Ok(ctx)
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Build { ring: r, kind, line, output } => cmd_build(r, *kind, line.as_deref(), output.as_ref(), out),
        Command::Verify { file, theory } => cmd_verify(file, *theory, &opts(cli), out),
        Command::Counterexamples => cmd_counterexamples(out),
        Command::Coordinatize { file, frame, compare } => {
            cmd_coordinatize(file, frame.as_deref(), compare.as_deref(), &opts(cli), out)
        }
        Command::Decompose { file, source, target, kind } => cmd_decompose(file, source, target, *kind, out),
        Command::Extend { file, source, target, line, output } => {
            cmd_extend(file, source, target.as_deref().unwrap_or(source), line, output.as_ref(), out)
        }
        Command::CheckMorphism { source, target, morphism } => cmd_check_morphism(source, target, morphism, out),
    }
}

fn cmd_build(r: &str, kind: Kind, line: Option<&[i64]>, output: Option<&PathBuf>, out: &mut dyn Write) -> CliResult {
    let ctx = ring(r)?;
    let (plane, note) = match (kind, line) {
        (Kind::Projective, None) => (RingPlane::new(&ctx).map_err(geo)?.plane, String::new()),
        (Kind::Affine, None) => (AffineRingPlane::new(&ctx).map_err(geo)?.plane, String::new()),
        (Kind::Affine, Some(v)) => (derived_plane(r, v)?.plane, format!(" without line {}", fmt_line(v))),
        (Kind::Projective, Some(_)) => return Err(usage("--line needs --kind affine")),
    };
    let text = format!("# {} plane over {ctx}{note}\n{}", PlaneKind::from(kind), plane.serialize());
    emit(out, output, &text)
}

fn fmt_line(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The affine plane derived from the projective plane over `desc` by
/// removing the line with coordinates `v`.
fn derived_plane(desc: &str, v: &[i64]) -> Result<DerivedAffinePlane, CliError> {
    let v: [i64; 3] = v.try_into().map_err(|_| usage("--line takes three integers"))?;
    let ctx = ring(desc)?;
    let p = RingPlane::new(&ctx).map_err(geo)?;
    let l = ProjLine::from_ints(&ctx, v).map_err(usage)?;
    let li = p.line_index(&l).ok_or_else(|| usage(format!("{l} is not a line")))?;
    derive_affine(&p.plane, li).map_err(geo)
}

fn cmd_verify(file: &Path, theory: Option<Kind>, o: &VerifyOptions, out: &mut dyn Write) -> CliResult {
    let plane = read_plane(file)?;
    let theory = theory.map(PlaneKind::from).unwrap_or(plane.kind());
    let plane = if theory == plane.kind() { plane } else { plane.with_kind(theory) };
    let report = verify_synthetic(&plane, theory, o);
    for line in report.lines() {
        writeln!(out, "{line}")?;
    }
    let failed = report.failures().count();
    writeln!(out, "{}/{} axioms passed", report.results.len() - failed, report.results.len())?;
    if failed > 0 {
        return Err(CliError::Math(format!("{failed} axiom(s) failed")));
    }
    Ok(())
}

fn cmd_counterexamples(out: &mut dyn Write) -> CliResult {
    let found = counterexamples::run_all();
    for f in &found {
        writeln!(out, "{}", f.line())?;
    }
    let ok = found.iter().filter(|f| f.reproduced).count();
    writeln!(out, "{ok}/{} counterexamples reproduced", found.len())?;
    if ok != found.len() {
        return Err(CliError::Math("counterexample drift".into()));
    }
    Ok(())
}

fn write_table(out: &mut dyn Write, name: &str, tp: &TpRing, op: impl Fn(u32, u32) -> u32) -> CliResult {
    let n = tp.size() as u32;
    let w = n.saturating_sub(1).to_string().len();
    writeln!(out, "{name}")?;
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| format!("{:>w$}", op(i, j))).collect();
        writeln!(out, "  {}", row.join(" "))?;
    }
    Ok(())
}

fn write_ring(out: &mut dyn Write, tp: &TpRing, compare: Option<&str>) -> CliResult {
    let t = tp.table();
    let (a0, b0) = tp.base_pair();
    writeln!(out, "RING size {} base_pair ({a0},{b0}) zero {} one {}", tp.size(), t.zero(), t.one())?;
    for i in 0..tp.size() as u32 {
        writeln!(out, "element {i} point {}", tp.point_of(i))?;
    }
    write_table(out, "add", tp, |i, j| t.add(i, j))?;
    write_table(out, "mul", tp, |i, j| t.mul(i, j))?;
    if let Some(desc) = compare {
        let other = ring(desc)?.table().map_err(usage)?;
        match t.find_isomorphism(&other) {
            Some(perm) => {
                let p: Vec<String> = perm.iter().map(|x| x.to_string()).collect();
                writeln!(out, "COMPARE {desc} ISOMORPHIC map=({})", p.join(","))?;
            }
            None => {
                writeln!(out, "COMPARE {desc} NOT ISOMORPHIC")?;
                return Err(CliError::Math(format!("recovered ring is not isomorphic to {desc}")));
            }
        }
    }
    Ok(())
}

fn write_map(out: &mut dyn Write, m: &PlaneMorphism) -> CliResult {
    writeln!(out, "ISOMORPHISM")?;
    for (i, p) in m.points.iter().enumerate() {
        writeln!(out, "point {i} {p}")?;
    }
    for (i, l) in m.lines.iter().enumerate() {
        writeln!(out, "line {i} {l}")?;
    }
    Ok(())
}

fn cmd_coordinatize(
    file: &Path,
    frame: Option<&[usize]>,
    compare: Option<&str>,
    o: &VerifyOptions,
    out: &mut dyn Write,
) -> CliResult {
    let plane = read_plane(file)?;
    let report = plane.verify(o);
    if let Some(f) = report.failures().next() {
        writeln!(out, "{}", f.line())?;
        return Err(CliError::Math("plane fails its axiom suite".into()));
    }
    let n = plane.n_points();
    if let Some(f) = frame {
        if let Some(&p) = f.iter().find(|&&p| p >= n) {
            return Err(usage(format!("frame point {p} out of range")));
        }
    }
    match plane.kind() {
        PlaneKind::Affine => {
            let [x, y, o] = match frame {
                Some(&[x, y, o]) => [x, y, o],
                Some(_) => return Err(usage("an affine frame is X,Y,O")),
                None => {
                    let [y, o, x] = *omega(&plane).first().ok_or_else(|| CliError::Math("no frame".into()))?;
                    [x, y, o]
                }
            };
            let tp = build_tp_ring(&plane).map_err(geo)?;
            let c = coord_map(&tp, x, y, o).map_err(geo)?;
            writeln!(out, "FRAME X={x} Y={y} O={o}")?;
            write_ring(out, &tp, compare)?;
            finish_map(out, &c.morphism, &c.report)
        }
        PlaneKind::Projective => {
            let f = match frame {
                Some(&[a, b, o, i]) => [a, b, o, i],
                Some(_) => return Err(usage("a projective frame is A,B,O,I")),
                None => *omega4(&plane).first().ok_or_else(|| CliError::Math("no frame".into()))?,
            };
            let pc = proj_coordinatize(&plane, f).map_err(geo)?;
            writeln!(out, "FRAME A={} B={} O={} I={}", f[0], f[1], f[2], f[3])?;
            write_ring(out, &pc.tp, compare)?;
            finish_map(out, &pc.morphism, &pc.report)
        }
    }
}

fn finish_map(out: &mut dyn Write, m: &PlaneMorphism, r: &locplane::morphisms::MorphismReport) -> CliResult {
    write_map(out, m)?;
    if !r.is_isomorphism() {
        for f in &r.failures {
            writeln!(out, "MORPHISM FAIL {f}")?;
        }
        return Err(CliError::Math("coordinate map is not an isomorphism".into()));
    }
    writeln!(out, "VERIFIED isomorphism")?;
    Ok(())
}

fn write_hom(out: &mut dyn Write, f: &RingHom) -> CliResult {
    writeln!(out, "HOM {} -> {}", f.source(), f.target())?;
    for (x, y) in f.source().enumerate().map_err(usage)?.iter().zip(f.images()) {
        writeln!(out, "  {x} -> {y}")?;
    }
    Ok(())
}

fn cmd_decompose(file: &Path, source: &str, target: &str, kind: Kind, out: &mut dyn Write) -> CliResult {
    let (r, s) = (ring(source)?, ring(target)?);
    let m = read_morphism(file)?;
    if m.kind != PlaneKind::from(kind) {
        return Err(usage(format!("morphism file is {}, expected {}", m.kind, PlaneKind::from(kind))));
    }
    match kind {
        Kind::Projective => {
            let (p, q) = (RingPlane::new(&r).map_err(geo)?, RingPlane::new(&s).map_err(geo)?);
            check_is_morphism(&p.plane, &q.plane, &m, out)?;
            let (h, f) = decompose_proj(&p, &q, &m).map_err(geo)?;
            writeln!(out, "MATRIX {h}")?;
            write_hom(out, &f)
        }
        Kind::Affine => {
            let (p, q) = (AffineRingPlane::new(&r).map_err(geo)?, AffineRingPlane::new(&s).map_err(geo)?);
            check_is_morphism(&p.plane, &q.plane, &m, out)?;
            let (g, f) = decompose_aff(&p, &q, &m).map_err(geo)?;
            writeln!(out, "MATRIX {g}")?;
            write_hom(out, &f)
        }
    }
}

fn check_is_morphism(src: &SyntheticPlane, tgt: &SyntheticPlane, m: &PlaneMorphism, out: &mut dyn Write) -> CliResult {
    let r = verify_morphism(src, tgt, m).map_err(geo)?;
    if !r.is_morphism() {
        for f in &r.failures {
            writeln!(out, "MORPHISM FAIL {f}")?;
        }
        return Err(CliError::Math("not a morphism".into()));
    }
    Ok(())
}

fn cmd_extend(
    file: &Path,
    source: &str,
    target: &str,
    line: &[i64],
    output: Option<&PathBuf>,
    out: &mut dyn Write,
) -> CliResult {
    let (ds, dt) = (derived_plane(source, line)?, derived_plane(target, line)?);
    let phi = read_morphism(file)?;
    if phi.kind != PlaneKind::Affine {
        return Err(usage("extend needs an affine morphism"));
    }
    if (phi.source_points, phi.source_lines, phi.target_points, phi.target_lines)
        != (ds.plane.n_points(), ds.plane.n_lines(), dt.plane.n_points(), dt.plane.n_lines())
    {
        return Err(usage("morphism does not match the derived planes"));
    }
    check_is_morphism(&ds.plane, &dt.plane, &phi, out)?;
    let psi = extend_affine_to_projective(&ds, &dt, &phi).map_err(geo)?;
    check_is_morphism(&ds.parent, &dt.parent, &psi, out)?;
    emit(out, output, &psi.serialize())
}

fn cmd_check_morphism(source: &Path, target: &Path, morphism: &Path, out: &mut dyn Write) -> CliResult {
    let (p, q, m) = (read_plane(source)?, read_plane(target)?, read_morphism(morphism)?);
    if m.kind != p.kind() || m.kind != q.kind() {
        return Err(usage("plane kinds do not match the morphism"));
    }
    let r = verify_morphism(&p, &q, &m).map_err(usage)?;
    for f in &r.failures {
        writeln!(out, "MORPHISM FAIL {f}")?;
    }
    if !r.is_morphism() {
        return Err(CliError::Math("not a morphism".into()));
    }
    writeln!(out, "MORPHISM PASS")?;
    writeln!(out, "ISOMORPHISM {}", if r.is_isomorphism() { "yes" } else { "no" })?;
    Ok(())
}
