//! Finite planes given by explicit relation tables.
//!
//! A [`SyntheticPlane`] stores point apartness, line apartness, incidence,
//! outsideness and (for affine planes) parallelism as bit matrices over
//! indexed points and lines. Derived lookups such as joins, meets and the
//! relation `δ` are computed once on demand.
//!
//! Text format, one statement per line, `#` starts a comment:
//!
//! ```text
//! plane affine|projective
//! points N
//! lines M
//! apart_pt i j | apart_li i j | incident p l | outside p l | parallel k l
//! ```
//!
//! Apartness and parallelism may be stated once; they are closed symmetrically.

mod search;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use search::{
    run_schema, Atom, AxiomReport, AxiomResult, Mode, Schema, SearchOutcome, Source, Step, Verdict,
    VerifyOptions,
};
pub(crate) use search::check_forall;

use crate::GeoError;

/// Whether a plane is read against the projective or the affine axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaneKind {
    Affine,
    Projective,
}

impl fmt::Display for PlaneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlaneKind::Affine => "affine",
            PlaneKind::Projective => "projective",
        })
    }
}

/// Dense row-major bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.wpr + c / 64] >> (c % 64) & 1 == 1
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.wpr + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }
    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.wpr..(r + 1) * self.wpr]
    }
    /// Column indices set in row `r`.
    pub fn ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[inline]
fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

const NONE: u32 = u32::MAX;

/// Lookups derived from the relations of a plane.
#[derive(Debug)]
pub struct PlaneIndex {
    points_on: Vec<Vec<u32>>,
    lines_through: Vec<Vec<u32>>,
    parallels: Vec<Vec<u32>>,
    join: Vec<u32>,
    meet: Vec<u32>,
    par_through: Vec<u32>,
    common: BitMatrix,
    coll: BitMatrix,
}

/// A finite plane given by relation tables.
#[derive(Clone, Debug)]
pub struct SyntheticPlane {
    kind: PlaneKind,
    n_points: usize,
    n_lines: usize,
    apart_pt: BitMatrix,
    apart_li: BitMatrix,
    inc: BitMatrix,
    out: BitMatrix,
    par: BitMatrix,
    index: OnceLock<Arc<PlaneIndex>>,
}

impl PartialEq for SyntheticPlane {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind
            && self.n_points == o.n_points
            && self.n_lines == o.n_lines
            && self.apart_pt == o.apart_pt
            && self.apart_li == o.apart_li
            && self.inc == o.inc
            && self.out == o.out
            && self.par == o.par
    }
}
impl Eq for SyntheticPlane {}

impl SyntheticPlane {
    /// A plane with the given carriers and every relation empty.
    pub fn new(kind: PlaneKind, n_points: usize, n_lines: usize) -> Self {
        SyntheticPlane {
            kind,
            n_points,
            n_lines,
            apart_pt: BitMatrix::new(n_points, n_points),
            apart_li: BitMatrix::new(n_lines, n_lines),
            inc: BitMatrix::new(n_points, n_lines),
            out: BitMatrix::new(n_points, n_lines),
            par: BitMatrix::new(n_lines, n_lines),
            index: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> PlaneKind {
        self.kind
    }
    pub fn n_points(&self) -> usize {
        self.n_points
    }
    pub fn n_lines(&self) -> usize {
        self.n_lines
    }

    #[inline]
    pub fn pt_apart(&self, a: usize, b: usize) -> bool {
        self.apart_pt.get(a, b)
    }
    #[inline]
    pub fn li_apart(&self, k: usize, l: usize) -> bool {
        self.apart_li.get(k, l)
    }
    #[inline]
    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.inc.get(p, l)
    }
    #[inline]
    pub fn outside(&self, p: usize, l: usize) -> bool {
        self.out.get(p, l)
    }
    #[inline]
    pub fn parallel(&self, k: usize, l: usize) -> bool {
        self.par.get(k, l)
    }

    fn touch(&mut self) {
        self.index = OnceLock::new();
    }

    /// Sets `a # b` and `b # a`.
    pub fn set_pt_apart(&mut self, a: usize, b: usize, v: bool) {
        self.touch();
        self.apart_pt.set(a, b, v);
        self.apart_pt.set(b, a, v);
    }
    /// Sets `k # l` and `l # k`.
    pub fn set_li_apart(&mut self, k: usize, l: usize, v: bool) {
        self.touch();
        self.apart_li.set(k, l, v);
        self.apart_li.set(l, k, v);
    }
    pub fn set_incident(&mut self, p: usize, l: usize, v: bool) {
        self.touch();
        self.inc.set(p, l, v);
    }
    pub fn set_outside(&mut self, p: usize, l: usize, v: bool) {
        self.touch();
        self.out.set(p, l, v);
    }
    /// Sets `k ∥ l` and `l ∥ k`.
    pub fn set_parallel(&mut self, k: usize, l: usize, v: bool) {
        self.touch();
        self.par.set(k, l, v);
        self.par.set(l, k, v);
    }
    /// Sets a single ordered apartness entry, for building malformed test planes.
    pub fn set_pt_apart_directed(&mut self, a: usize, b: usize, v: bool) {
        self.touch();
        self.apart_pt.set(a, b, v);
    }

    /// Derived lookups, computed on first use.
    pub fn index(&self) -> &PlaneIndex {
        self.index.get_or_init(|| Arc::new(self.build_index()))
    }

    fn build_index(&self) -> PlaneIndex {
        let (n, m) = (self.n_points, self.n_lines);
        let mut on = BitMatrix::new(m, n);
        let mut points_on = vec![Vec::new(); m];
        let mut lines_through = vec![Vec::new(); n];
        for p in 0..n {
            for l in 0..m {
                if self.incident(p, l) {
                    on.set(l, p, true);
                    points_on[l].push(p as u32);
                    lines_through[p].push(l as u32);
                }
            }
        }
        let mut join = vec![NONE; n * n];
        let mut coll = BitMatrix::new(n * n, n);
        for a in 0..n {
            for b in 0..n {
                let mut found = NONE;
                let mut count = 0;
                let row = a * n + b;
                for &r in &lines_through[a] {
                    if self.incident(b, r as usize) {
                        count += 1;
                        found = r;
                        let src: Vec<u64> = on.row(r as usize).to_vec();
                        for (d, s) in coll.row_mut(row).iter_mut().zip(src) {
                            *d |= s;
                        }
                    }
                }
                if count == 1 && self.pt_apart(a, b) {
                    join[a * n + b] = found;
                }
            }
        }
        let mut meet = vec![NONE; m * m];
        let mut common = BitMatrix::new(m * m, n);
        for k in 0..m {
            for l in 0..m {
                let row = k * m + l;
                let mut count = 0;
                let mut found = NONE;
                for (wi, (a, b)) in on.row(k).iter().zip(on.row(l)).enumerate() {
                    let w = a & b;
                    common.row_mut(row)[wi] = w;
                    if w != 0 {
                        count += w.count_ones();
                        found = (wi * 64) as u32 + w.trailing_zeros();
                    }
                }
                if count == 1 && self.li_apart(k, l) {
                    meet[row] = found;
                }
            }
        }
        let mut parallels = vec![Vec::new(); m];
        let mut par_through = vec![NONE; n * m];
        if self.kind == PlaneKind::Affine {
            for k in 0..m {
                parallels[k] = (0..m).filter(|&l| self.parallel(k, l)).map(|l| l as u32).collect();
            }
            for a in 0..n {
                for k in 0..m {
                    let mut it = lines_through[a].iter().filter(|&&l| self.parallel(k, l as usize));
                    if let (Some(&l), None) = (it.next(), it.next()) {
                        par_through[a * m + k] = l;
                    }
                }
            }
        }
        PlaneIndex { points_on, lines_through, parallels, join, meet, par_through, common, coll }
    }

    /// Points incident with `l`, ascending.
    pub fn points_on(&self, l: usize) -> &[u32] {
        &self.index().points_on[l]
    }
    /// Lines incident with `p`, ascending.
    pub fn lines_through(&self, p: usize) -> &[u32] {
        &self.index().lines_through[p]
    }
    /// Lines parallel to `k` (affine planes), ascending.
    pub fn parallels(&self, k: usize) -> &[u32] {
        &self.index().parallels[k]
    }

    fn opt(v: u32) -> Option<usize> {
        (v != NONE).then_some(v as usize)
    }

    /// The unique line through two apart points.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        Self::opt(self.index().join[a * self.n_points + b])
    }
    /// The unique common point of two apart lines.
    pub fn meet(&self, k: usize, l: usize) -> Option<usize> {
        Self::opt(self.index().meet[k * self.n_lines + l])
    }
    /// The unique line through `a` parallel to `k` (affine planes).
    pub fn par_through(&self, a: usize, k: usize) -> Option<usize> {
        Self::opt(self.index().par_through[a * self.n_lines + k])
    }
    /// First point outside `l` in index order.
    pub fn first_outside(&self, l: usize) -> Option<usize> {
        (0..self.n_points).find(|&p| self.outside(p, l))
    }

    /// `δ(k, l, A, B)`: some line through `A` and `B` meets `k` and `l` in a common point.
    #[inline]
    pub fn delta(&self, k: usize, l: usize, a: usize, b: usize) -> bool {
        let ix = self.index();
        intersects(ix.common.row(k * self.n_lines + l), ix.coll.row(a * self.n_points + b))
    }

    /// First witness `(r, X)` of `δ(k, l, A, B)` in index order.
    pub fn delta_witness(&self, k: usize, l: usize, a: usize, b: usize) -> Option<(usize, usize)> {
        for r in 0..self.n_lines {
            if self.incident(a, r) && self.incident(b, r) {
                for &x in self.points_on(r) {
                    let x = x as usize;
                    if self.incident(x, k) && self.incident(x, l) {
                        return Some((r, x));
                    }
                }
            }
        }
        None
    }

    /// Same plane read against the other theory; parallelism is dropped when
    /// switching to projective.
    pub fn with_kind(&self, kind: PlaneKind) -> SyntheticPlane {
        let mut p = self.clone();
        p.kind = kind;
        if kind == PlaneKind::Projective {
            p.par = BitMatrix::new(self.n_lines, self.n_lines);
        }
        p.touch();
        p
    }

    /// Dual projective plane: points and lines swap, incidence and
    /// outsideness are transposed.
    pub fn dual(&self) -> SyntheticPlane {
        let mut d = SyntheticPlane::new(PlaneKind::Projective, self.n_lines, self.n_points);
        d.apart_pt = self.apart_li.clone();
        d.apart_li = self.apart_pt.clone();
        for p in 0..self.n_points {
            for l in 0..self.n_lines {
                d.inc.set(l, p, self.inc.get(p, l));
                d.out.set(l, p, self.out.get(p, l));
            }
        }
        d
    }

    /// Counts of stored relation pairs, in the order apart_pt, apart_li,
    /// incident, outside, parallel.
    pub fn relation_counts(&self) -> [usize; 5] {
        [self.apart_pt.count_ones(), self.apart_li.count_ones(), self.inc.count_ones(), self.out.count_ones(), self.par.count_ones()]
    }

    /// Parses the text format.
    pub fn parse(text: &str) -> Result<SyntheticPlane, ParseError> {
        parse_plane(text)
    }

    /// Renders the text format; symmetric relations are written once.
    pub fn serialize(&self) -> String {
        let mut s = format!("plane {}\npoints {}\nlines {}\n", self.kind, self.n_points, self.n_lines);
        for a in 0..self.n_points {
            for b in a..self.n_points {
                if self.pt_apart(a, b) {
                    s += &format!("apart_pt {a} {b}\n");
                }
            }
        }
        for k in 0..self.n_lines {
            for l in k..self.n_lines {
                if self.li_apart(k, l) {
                    s += &format!("apart_li {k} {l}\n");
                }
            }
        }
        for p in 0..self.n_points {
            for l in 0..self.n_lines {
                if self.incident(p, l) {
                    s += &format!("incident {p} {l}\n");
                }
            }
        }
        for p in 0..self.n_points {
            for l in 0..self.n_lines {
                if self.outside(p, l) {
                    s += &format!("outside {p} {l}\n");
                }
            }
        }
        if self.kind == PlaneKind::Affine {
            for k in 0..self.n_lines {
                for l in k..self.n_lines {
                    if self.parallel(k, l) {
                        s += &format!("parallel {k} {l}\n");
                    }
                }
            }
        }
        s
    }

    /// Verifies the axioms of the plane's own theory.
    pub fn verify(&self, opts: &VerifyOptions) -> AxiomReport {
        verify_synthetic(self, self.kind, opts)
    }
}

/// Checks a plane against the preprojective or preaffine axioms.
pub fn verify_synthetic(plane: &SyntheticPlane, theory: PlaneKind, opts: &VerifyOptions) -> AxiomReport {
    match theory {
        PlaneKind::Projective => crate::projective::verify_projective_axioms(plane, opts),
        PlaneKind::Affine => crate::affine::verify_affine_axioms(plane, opts),
    }
}

/// Parse failure with a 1-based line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{msg} at line {line}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl From<ParseError> for GeoError {
    fn from(e: ParseError) -> Self {
        GeoError::Invalid(e.to_string())
    }
}

fn parse_plane(text: &str) -> Result<SyntheticPlane, ParseError> {
    let mut header: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut plane: Option<SyntheticPlane> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let err = |msg: String| ParseError { line: ln, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if plane.is_none() {
            let expect = ["plane", "points", "lines"][header.len()];
            if toks[0] != expect || toks.len() != 2 {
                return Err(err(format!("expected `{expect} <value>`")));
            }
            header.push((ln, toks));
            if header.len() == 3 {
                let kind = match header[0].1[1] {
                    "affine" => PlaneKind::Affine,
                    "projective" => PlaneKind::Projective,
                    other => {
                        return Err(ParseError { line: header[0].0, msg: format!("unknown plane kind `{other}`") })
                    }
                };
                let num = |(l, t): &(usize, Vec<&str>)| {
                    t[1].parse::<usize>().map_err(|_| ParseError { line: *l, msg: format!("bad count `{}`", t[1]) })
                };
                plane = Some(SyntheticPlane::new(kind, num(&header[1])?, num(&header[2])?));
            }
            continue;
        }
        let p = plane.as_mut().unwrap();
        if toks.len() != 3 {
            return Err(err(format!("expected `<relation> <i> <j>`, got `{body}`")));
        }
        let parse_idx = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad index `{t}`")));
        let (a, b) = (parse_idx(toks[1])?, parse_idx(toks[2])?);
        let (np, nl) = (p.n_points, p.n_lines);
        let pt = |x: usize| if x < np { Ok(x) } else { Err(err("point index out of range".into())) };
        let li = |x: usize| if x < nl { Ok(x) } else { Err(err("line index out of range".into())) };
        match toks[0] {
            "apart_pt" => {
                let (a, b) = (pt(a)?, pt(b)?);
                if a == b {
                    return Err(err(format!("point apartness must be irreflexive, got {a} {a}")));
                }
                p.set_pt_apart(a, b, true);
            }
            "apart_li" => {
                let (a, b) = (li(a)?, li(b)?);
                if a == b {
                    return Err(err(format!("line apartness must be irreflexive, got {a} {a}")));
                }
                p.set_li_apart(a, b, true);
            }
            "incident" => {
                let (a, b) = (pt(a)?, li(b)?);
                if p.outside(a, b) {
                    return Err(err(format!("point {a} is both incident with and outside line {b}")));
                }
                p.set_incident(a, b, true);
            }
            "outside" => {
                let (a, b) = (pt(a)?, li(b)?);
                if p.incident(a, b) {
                    return Err(err(format!("point {a} is both incident with and outside line {b}")));
                }
                p.set_outside(a, b, true);
            }
            "parallel" => {
                if p.kind == PlaneKind::Projective {
                    return Err(err("parallel relation in a projective plane".into()));
                }
                p.set_parallel(li(a)?, li(b)?, true);
            }
            other => return Err(err(format!("unknown relation `{other}`"))),
        }
    }
    plane.ok_or_else(|| ParseError { line: text.lines().count().max(1), msg: "incomplete header".into() })
}

/// Incidence structure with decidable apartness, incidence and outsideness.
pub trait IncidenceGeometry {
    type Point: Clone + fmt::Debug;
    type Line: Clone + fmt::Debug;
    fn pt_apart(&self, a: &Self::Point, b: &Self::Point) -> bool;
    fn li_apart(&self, k: &Self::Line, l: &Self::Line) -> bool;
    fn incident(&self, p: &Self::Point, l: &Self::Line) -> bool;
    fn outside(&self, p: &Self::Point, l: &Self::Line) -> bool;
}

/// Projective structure: adds the relation `δ`.
pub trait ProjectiveGeometry: IncidenceGeometry {
    fn delta(&self, k: &Self::Line, l: &Self::Line, a: &Self::Point, b: &Self::Point) -> Result<bool, GeoError>;
}

/// Affine structure: adds parallelism, joins and parallels through a point.
pub trait AffineGeometry: IncidenceGeometry {
    fn parallel(&self, k: &Self::Line, l: &Self::Line) -> bool;
    fn join(&self, a: &Self::Point, b: &Self::Point) -> Option<Self::Line>;
    fn par_through(&self, a: &Self::Point, k: &Self::Line) -> Option<Self::Line>;
}

impl IncidenceGeometry for SyntheticPlane {
    type Point = usize;
    type Line = usize;
    fn pt_apart(&self, a: &usize, b: &usize) -> bool {
        SyntheticPlane::pt_apart(self, *a, *b)
    }
    fn li_apart(&self, k: &usize, l: &usize) -> bool {
        SyntheticPlane::li_apart(self, *k, *l)
    }
    fn incident(&self, p: &usize, l: &usize) -> bool {
        SyntheticPlane::incident(self, *p, *l)
    }
    fn outside(&self, p: &usize, l: &usize) -> bool {
        SyntheticPlane::outside(self, *p, *l)
    }
}

impl ProjectiveGeometry for SyntheticPlane {
    fn delta(&self, k: &usize, l: &usize, a: &usize, b: &usize) -> Result<bool, GeoError> {
        Ok(SyntheticPlane::delta(self, *k, *l, *a, *b))
    }
}

impl AffineGeometry for SyntheticPlane {
    fn parallel(&self, k: &usize, l: &usize) -> bool {
        SyntheticPlane::parallel(self, *k, *l)
    }
    fn join(&self, a: &usize, b: &usize) -> Option<usize> {
        SyntheticPlane::join(self, *a, *b)
    }
    fn par_through(&self, a: &usize, k: &usize) -> Option<usize> {
        SyntheticPlane::par_through(self, *a, *k)
    }
}
