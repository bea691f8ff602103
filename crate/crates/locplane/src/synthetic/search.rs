//! Search engine for axiom checking on synthetic planes.
//!
//! Universal sequents over a product of carriers run through [`check_forall`].
//! Configuration theorems (Desargues, Pappus and variants) are described by a
//! [`Schema`]: an ordered list of variables, each drawn from a candidate
//! source and filtered by premises that only mention earlier variables. The
//! schema prunes the search; the leaf callback re-checks every premise and
//! the conclusion.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{PlaneKind, SyntheticPlane};

/// Outcome of checking one configuration against a theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Premises hold and so does the conclusion.
    Holds,
    /// Premises hold and the conclusion fails.
    Violated,
    /// Some premise fails; the string names it.
    PremisesFail(String),
}

/// How a check covered its space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        })
    }
}

/// Budget and seed for verification.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Seed for sampled checks.
    pub seed: u64,
    /// Number of sampled tuples or premise-satisfying configurations.
    pub samples: u64,
    /// Spaces up to this size are checked exhaustively.
    pub exhaustive_limit: u64,
    /// Skip the configuration theorems.
    pub skip_theorems: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, samples: 100_000, exhaustive_limit: 10_000_000, skip_theorems: false }
    }
}

/// Result of checking one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
    pub checked: u64,
    pub mode: Mode,
}

impl AxiomResult {
    /// `AXIOM <name> PASS` or `AXIOM <name> FAIL witness=(…)`.
    pub fn line(&self) -> String {
        if self.passed {
            format!("AXIOM {} PASS", self.name)
        } else {
            let w = self.witness.as_deref().map(fmt_tuple).unwrap_or_else(|| "()".into());
            format!("AXIOM {} FAIL witness={}", self.name, w)
        }
    }
}

pub(crate) fn fmt_tuple(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// All axiom results for one plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub theory: PlaneKind,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }
    /// One report line per axiom.
    pub fn lines(&self) -> Vec<String> {
        self.results.iter().map(|r| r.line()).collect()
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

const CHUNKS: u64 = 64;

/// Checks `pred` on every tuple of `dims` (exhaustive, first failure in
/// lexicographic order) or on `opts.samples` uniform tuples when the space
/// exceeds the exhaustive limit.
pub(crate) fn check_forall<F>(name: &str, dims: &[usize], opts: &VerifyOptions, pred: F) -> AxiomResult
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let space = dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64)).unwrap_or(u64::MAX);
    if dims.contains(&0) {
        return AxiomResult { name: name.into(), passed: true, witness: None, checked: 0, mode: Mode::Exhaustive };
    }
    if space <= opts.exhaustive_limit {
        let k = dims.len();
        let first = (0..dims[0]).into_par_iter().find_map_first(|a| {
            let mut t = vec![0usize; k];
            t[0] = a;
            loop {
                if !pred(&t) {
                    return Some(t);
                }
                let mut i = k;
                loop {
                    i -= 1;
                    if i == 0 {
                        return None;
                    }
                    t[i] += 1;
                    if t[i] < dims[i] {
                        break;
                    }
                    t[i] = 0;
                }
            }
        });
        AxiomResult { name: name.into(), passed: first.is_none(), witness: first, checked: space, mode: Mode::Exhaustive }
    } else {
        let per = opts.samples.div_ceil(CHUNKS);
        let first = (0..CHUNKS).into_par_iter().find_map_first(|c| {
            let mut rng = chunk_rng(opts.seed, c);
            let mut t = vec![0usize; dims.len()];
            for _ in 0..per {
                for (x, &d) in t.iter_mut().zip(dims) {
                    *x = rng.gen_range(0..d);
                }
                if !pred(&t) {
                    return Some(t.clone());
                }
            }
            None
        });
        AxiomResult {
            name: name.into(),
            passed: first.is_none(),
            witness: first,
            checked: per * CHUNKS,
            mode: Mode::Sampled,
        }
    }
}

/// Where the candidates for a schema variable come from.
#[derive(Clone, Debug)]
pub enum Source {
    AllPoints,
    AllLines,
    /// Points on the line held by the variable.
    PointsOn(usize),
    /// Lines through the point held by the variable.
    LinesThrough(usize),
    /// Lines parallel to the line held by the variable.
    ParallelTo(usize),
    /// The join of two point variables, if defined.
    Join(usize, usize),
    /// The parallel to a line variable through a point variable, if defined.
    ParThrough(usize, usize),
}

/// Premise atoms over schema variables.
#[derive(Clone, Debug)]
pub enum Atom {
    Inc(usize, usize),
    Out(usize, usize),
    AptPt(usize, usize),
    AptLi(usize, usize),
    Par(usize, usize),
    /// `δ(k, l, A, B)` with variables `[k, l, A, B]`.
    Delta([usize; 4]),
    /// The joins `AB` and `CD` are parallel, variables `[A, B, C, D]`. Holds
    /// vacuously when a join is undefined so the leaf check can report it.
    ParJoin([usize; 4]),
    /// `P` outside the join of `A` and `B`, variables `[P, A, B]`; false
    /// when the join is undefined.
    OutJoin([usize; 3]),
    /// Disjunction.
    Any(Vec<Atom>),
    /// Conjunction.
    All(Vec<Atom>),
}

impl Atom {
    fn eval(&self, p: &SyntheticPlane, v: &[usize]) -> bool {
        match self {
            Atom::Inc(a, l) => p.incident(v[*a], v[*l]),
            Atom::Out(a, l) => p.outside(v[*a], v[*l]),
            Atom::AptPt(a, b) => p.pt_apart(v[*a], v[*b]),
            Atom::AptLi(k, l) => p.li_apart(v[*k], v[*l]),
            Atom::Par(k, l) => p.parallel(v[*k], v[*l]),
            Atom::Delta([k, l, a, b]) => p.delta(v[*k], v[*l], v[*a], v[*b]),
            Atom::ParJoin([a, b, c, d]) => match (p.join(v[*a], v[*b]), p.join(v[*c], v[*d])) {
                (Some(x), Some(y)) => p.parallel(x, y),
                _ => true,
            },
            Atom::OutJoin([q, a, b]) => p.join(v[*a], v[*b]).is_some_and(|l| p.outside(v[*q], l)),
            Atom::Any(xs) => xs.iter().any(|x| x.eval(p, v)),
            Atom::All(xs) => xs.iter().all(|x| x.eval(p, v)),
        }
    }
}

/// One variable of a schema.
#[derive(Clone, Debug)]
pub struct Step {
    pub source: Source,
    pub filters: Vec<Atom>,
}

impl Step {
    pub fn new(source: Source, filters: Vec<Atom>) -> Self {
        Step { source, filters }
    }
}

/// Premise-driven enumeration plan for a configuration theorem.
#[derive(Clone, Debug)]
pub struct Schema {
    pub steps: Vec<Step>,
}

/// What a schema run covered and found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub mode: Mode,
    /// Configurations handed to the leaf callback.
    pub leaves: u64,
    /// Leaves whose premises all held.
    pub premise_ok: u64,
    /// First violating assignment found.
    pub violation: Option<Vec<usize>>,
}

fn candidates(p: &SyntheticPlane, step: &Step, v: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let push = |out: &mut Vec<usize>, xs: &[u32]| out.extend(xs.iter().map(|&x| x as usize));
    match step.source {
        Source::AllPoints => out.extend(0..p.n_points()),
        Source::AllLines => out.extend(0..p.n_lines()),
        Source::PointsOn(l) => push(out, p.points_on(v[l])),
        Source::LinesThrough(a) => push(out, p.lines_through(v[a])),
        Source::ParallelTo(k) => push(out, p.parallels(v[k])),
        Source::Join(a, b) => out.extend(p.join(v[a], v[b])),
        Source::ParThrough(a, k) => out.extend(p.par_through(v[a], v[k])),
    }
    let d = v.len();
    let mut buf = v.to_vec();
    buf.push(0);
    out.retain(|&c| {
        buf[d] = c;
        step.filters.iter().all(|a| a.eval(p, &buf))
    });
}

struct Dfs<'a, F> {
    plane: &'a SyntheticPlane,
    schema: &'a Schema,
    leaf: &'a F,
    leaves: u64,
    ok: u64,
    budget: &'a AtomicU64,
    limit: u64,
    abort: &'a AtomicBool,
    bufs: Vec<Vec<usize>>,
}

impl<F: Fn(&[usize]) -> Verdict + Sync> Dfs<'_, F> {
    fn go(&mut self, v: &mut Vec<usize>) -> Option<Vec<usize>> {
        let d = v.len();
        if d == self.schema.steps.len() {
            self.leaves += 1;
            if self.leaves.is_multiple_of(4096) && self.budget.fetch_add(4096, Ordering::Relaxed) + 4096 > self.limit {
                self.abort.store(true, Ordering::Relaxed);
            }
            return match (self.leaf)(v) {
                Verdict::Holds => {
                    self.ok += 1;
                    None
                }
                Verdict::Violated => {
                    self.ok += 1;
                    Some(v.clone())
                }
                Verdict::PremisesFail(_) => None,
            };
        }
        if self.abort.load(Ordering::Relaxed) {
            return None;
        }
        let mut cands = std::mem::take(&mut self.bufs[d]);
        candidates(self.plane, &self.schema.steps[d], v, &mut cands);
        let mut found = None;
        for &c in &cands {
            v.push(c);
            found = self.go(v);
            v.pop();
            if found.is_some() {
                break;
            }
        }
        self.bufs[d] = cands;
        found
    }
}

/// Runs a schema: exhaustively when the enumeration stays within
/// `opts.exhaustive_limit` leaves, otherwise by seeded random descent until
/// `opts.samples` premise-satisfying configurations are seen (or the attempt
/// cap of 50 per requested sample is reached).
pub fn run_schema<F>(plane: &SyntheticPlane, schema: &Schema, leaf: &F, opts: &VerifyOptions) -> SearchOutcome
where
    F: Fn(&[usize]) -> Verdict + Sync,
{
    plane.index();
    let budget = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let mut roots = Vec::new();
    candidates(plane, &schema.steps[0], &[], &mut roots);
    let per_root: Vec<(u64, u64, Option<Vec<usize>>)> = roots
        .par_iter()
        .map(|&r| {
            let mut dfs = Dfs {
                plane,
                schema,
                leaf,
                leaves: 0,
                ok: 0,
                budget: &budget,
                limit: opts.exhaustive_limit,
                abort: &abort,
                bufs: vec![Vec::new(); schema.steps.len()],
            };
            let mut v = vec![r];
            let found = dfs.go(&mut v);
            (dfs.leaves, dfs.ok, found)
        })
        .collect();
    if !abort.load(Ordering::Relaxed) {
        let leaves = per_root.iter().map(|x| x.0).sum();
        let premise_ok = per_root.iter().map(|x| x.1).sum();
        let violation = per_root.into_iter().find_map(|x| x.2);
        return SearchOutcome { mode: Mode::Exhaustive, leaves, premise_ok, violation };
    }
    sample_schema(plane, schema, leaf, opts)
}

/// Seeded random descent through a schema.
pub(crate) fn sample_schema<F>(plane: &SyntheticPlane, schema: &Schema, leaf: &F, opts: &VerifyOptions) -> SearchOutcome
where
    F: Fn(&[usize]) -> Verdict + Sync,
{
    let per = opts.samples.div_ceil(CHUNKS);
    let results: Vec<(u64, u64, Option<Vec<usize>>)> = (0..CHUNKS)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(opts.seed, c);
            let (mut leaves, mut ok) = (0u64, 0u64);
            let mut cands = Vec::new();
            let mut v = Vec::with_capacity(schema.steps.len());
            let mut attempts = 0u64;
            while ok < per && attempts < per * 50 {
                attempts += 1;
                v.clear();
                let mut dead = false;
                for step in &schema.steps {
                    candidates(plane, step, &v, &mut cands);
                    if cands.is_empty() {
                        dead = true;
                        break;
                    }
                    v.push(cands[rng.gen_range(0..cands.len())]);
                }
                if dead {
                    continue;
                }
                leaves += 1;
                match leaf(&v) {
                    Verdict::Holds => ok += 1,
                    Verdict::Violated => return (leaves, ok + 1, Some(v.clone())),
                    Verdict::PremisesFail(_) => {}
                }
            }
            (leaves, ok, None)
        })
        .collect();
    let leaves = results.iter().map(|x| x.0).sum();
    let premise_ok = results.iter().map(|x| x.1).sum();
    let violation = results.into_iter().find_map(|x| x.2);
    SearchOutcome { mode: Mode::Sampled, leaves, premise_ok, violation }
}
