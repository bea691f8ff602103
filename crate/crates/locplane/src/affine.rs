//! The affine plane `𝔸(R)`, affine planes derived from a projective plane with
//! a chosen line, and the affine configuration theorems.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::linalg::Vec3;
use crate::projective::{self, check_each, check_exists, common_axioms, ProjLine, ProjPoint};
use crate::ring::{RingContext, RingValue};
use crate::synthetic::{
    check_forall, run_schema, AffineGeometry, Atom, AxiomReport, AxiomResult, IncidenceGeometry, PlaneKind,
    Schema, SearchOutcome, Source, Step, SyntheticPlane, Verdict, VerifyOptions,
};
use crate::GeoError;

/// Point `(a₀, a₁)` of `𝔸(R)`, standing for the projective point `(a₀, a₁, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffPoint(pub RingValue, pub RingValue);

impl AffPoint {
    pub fn new(a0: RingValue, a1: RingValue) -> Result<Self, GeoError> {
        if a0.ctx() != a1.ctx() {
            return Err(GeoError::Invalid("coordinates from different rings".into()));
        }
        Ok(AffPoint(a0, a1))
    }
    pub fn from_ints(ctx: &RingContext, a: [i64; 2]) -> Self {
        AffPoint(ctx.int(a[0]), ctx.int(a[1]))
    }
    pub fn ctx(&self) -> &RingContext {
        self.0.ctx()
    }
    /// The projective point `(a₀, a₁, 1)`.
    pub fn to_proj(&self) -> ProjPoint {
        ProjPoint::new(Vec3([self.0.clone(), self.1.clone(), self.ctx().one()])).expect("third coordinate is 1")
    }
}

impl fmt::Display for AffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Line of `𝔸(R)`: a projective line with `λ₀` or `λ₁` invertible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffLine(ProjLine);

impl AffLine {
    pub fn new(l: ProjLine) -> Result<Self, GeoError> {
        let c = l.coords();
        if !(c.0[0].is_invertible() || c.0[1].is_invertible()) {
            return Err(GeoError::Precondition(format!("line {l} is not apart from (0,0,1)")));
        }
        Ok(AffLine(l))
    }
    pub fn from_ints(ctx: &RingContext, v: [i64; 3]) -> Result<Self, GeoError> {
        AffLine::new(ProjLine::from_ints(ctx, v)?)
    }
    pub fn proj(&self) -> &ProjLine {
        &self.0
    }
}

impl fmt::Display for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `a₀ − b₀` or `a₁ − b₁` is invertible.
pub fn aff_apart(a: &AffPoint, b: &AffPoint) -> bool {
    (&a.0 - &b.0).is_invertible() || (&a.1 - &b.1).is_invertible()
}

/// `λ₀μ₁ − λ₁μ₀ = 0`.
pub fn parallel(k: &AffLine, l: &AffLine) -> bool {
    let (a, b) = (k.0.coords(), l.0.coords());
    (&(&a.0[0] * &b.0[1]) - &(&a.0[1] * &b.0[0])).is_zero()
}

pub fn aff_incident(a: &AffPoint, l: &AffLine) -> bool {
    projective::incident(&a.to_proj(), &l.0)
}

pub fn aff_outside(a: &AffPoint, l: &AffLine) -> bool {
    projective::outside(&a.to_proj(), &l.0)
}

pub fn aff_li_apart(k: &AffLine, l: &AffLine) -> bool {
    projective::li_apart(&k.0, &l.0)
}

/// Line through two apart points.
pub fn aff_line_through(a: &AffPoint, b: &AffPoint) -> Result<AffLine, GeoError> {
    if !aff_apart(a, b) {
        return Err(GeoError::Precondition(format!("points {a} and {b} are not apart")));
    }
    AffLine::new(projective::line_through(&a.to_proj(), &b.to_proj())?)
}

/// The unique line through `a` parallel to `k`.
pub fn parallel_through(a: &AffPoint, k: &AffLine) -> AffLine {
    let c = k.0.coords();
    let t = -(&(&c.0[0] * &a.0) + &(&c.0[1] * &a.1));
    AffLine::new(ProjLine::new(Vec3([c.0[0].clone(), c.0[1].clone(), t])).expect("unimodular"))
        .expect("direction unchanged")
}

/// Common point of two lines, or `None` when the lines are not apart or
/// their projective meet has a non-invertible third coordinate.
pub fn aff_meet(k: &AffLine, l: &AffLine) -> Option<AffPoint> {
    let p = projective::meet(&k.0, &l.0).ok()?;
    let c = p.coords();
    let inv = c.0[2].try_inverse()?;
    Some(AffPoint(&c.0[0] * &inv, &c.0[1] * &inv))
}

/// A finite `𝔸(R)`: enumerated points and lines and the exported synthetic plane.
#[derive(Clone, Debug)]
pub struct AffineRingPlane {
    pub ctx: RingContext,
    pub points: Vec<AffPoint>,
    pub lines: Vec<AffLine>,
    pub plane: SyntheticPlane,
    point_ix: HashMap<AffPoint, usize>,
    line_ix: HashMap<AffLine, usize>,
}

impl AffineRingPlane {
    /// Points in lexicographic order of `(a₀, a₁)`; lines in canonical
    /// projective order restricted to those apart from `(0,0,1)`.
    pub fn new(ctx: &RingContext) -> Result<Self, GeoError> {
        let elems = ctx.enumerate().map_err(|_| GeoError::RequiresFinite(ctx.descriptor()))?;
        let points: Vec<AffPoint> =
            elems.iter().flat_map(|x| elems.iter().map(move |y| AffPoint(x.clone(), y.clone()))).collect();
        let lines: Vec<AffLine> = projective::enumerate_canonical(ctx)?
            .into_iter()
            .filter_map(|v| AffLine::new(ProjLine::new(v).ok()?).ok())
            .collect();
        let (n, m) = (points.len(), lines.len());
        let mut plane = SyntheticPlane::new(PlaneKind::Affine, n, m);
        for i in 0..n {
            for j in i + 1..n {
                if aff_apart(&points[i], &points[j]) {
                    plane.set_pt_apart(i, j, true);
                }
            }
            for j in 0..m {
                if aff_incident(&points[i], &lines[j]) {
                    plane.set_incident(i, j, true);
                } else if aff_outside(&points[i], &lines[j]) {
                    plane.set_outside(i, j, true);
                }
            }
        }
        for i in 0..m {
            for j in i..m {
                if j > i && aff_li_apart(&lines[i], &lines[j]) {
                    plane.set_li_apart(i, j, true);
                }
                if parallel(&lines[i], &lines[j]) {
                    plane.set_parallel(i, j, true);
                }
            }
        }
        let point_ix = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let line_ix = lines.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Ok(AffineRingPlane { ctx: ctx.clone(), points, lines, plane, point_ix, line_ix })
    }

    pub fn point_index(&self, p: &AffPoint) -> Option<usize> {
        self.point_ix.get(p).copied()
    }
    pub fn line_index(&self, l: &AffLine) -> Option<usize> {
        self.line_ix.get(l).copied()
    }
}

/// Builds `𝔸(R)` for a finite ring as a synthetic plane.
pub fn export_affine(ctx: &RingContext) -> Result<SyntheticPlane, GeoError> {
    Ok(AffineRingPlane::new(ctx)?.plane)
}

/// `𝔸(R)` with typed elements.
#[derive(Clone, Debug)]
pub struct RingAffine;

impl IncidenceGeometry for RingAffine {
    type Point = AffPoint;
    type Line = AffLine;
    fn pt_apart(&self, a: &AffPoint, b: &AffPoint) -> bool {
        aff_apart(a, b)
    }
    fn li_apart(&self, k: &AffLine, l: &AffLine) -> bool {
        aff_li_apart(k, l)
    }
    fn incident(&self, p: &AffPoint, l: &AffLine) -> bool {
        aff_incident(p, l)
    }
    fn outside(&self, p: &AffPoint, l: &AffLine) -> bool {
        aff_outside(p, l)
    }
}

impl AffineGeometry for RingAffine {
    fn parallel(&self, k: &AffLine, l: &AffLine) -> bool {
        parallel(k, l)
    }
    fn join(&self, a: &AffPoint, b: &AffPoint) -> Option<AffLine> {
        aff_line_through(a, b).ok()
    }
    fn par_through(&self, a: &AffPoint, k: &AffLine) -> Option<AffLine> {
        Some(parallel_through(a, k))
    }
}

/// The affine plane of points outside and lines apart from a chosen line
/// `l∞` of a projective plane, with parallelism read off the meets with `l∞`.
#[derive(Clone, Debug)]
pub struct DerivedAffinePlane {
    pub parent: SyntheticPlane,
    pub l_inf: usize,
    pub plane: SyntheticPlane,
    /// Parent index of each affine point.
    pub point_parent: Vec<usize>,
    /// Parent index of each affine line.
    pub line_parent: Vec<usize>,
    point_of: Vec<Option<usize>>,
    line_of: Vec<Option<usize>>,
}

impl DerivedAffinePlane {
    /// Affine index of a parent point, if it lies outside `l∞`.
    pub fn point_of_parent(&self, p: usize) -> Option<usize> {
        self.point_of[p]
    }
    /// Affine index of a parent line, if it is apart from `l∞`.
    pub fn line_of_parent(&self, l: usize) -> Option<usize> {
        self.line_of[l]
    }
}

/// Builds `𝔄(P, l∞)`.
pub fn derive_affine(parent: &SyntheticPlane, l_inf: usize) -> Result<DerivedAffinePlane, GeoError> {
    if parent.kind() != PlaneKind::Projective {
        return Err(GeoError::Invalid("derive_affine needs a projective plane".into()));
    }
    if l_inf >= parent.n_lines() {
        return Err(GeoError::Invalid(format!("line {l_inf} is not in the plane")));
    }
    let point_parent: Vec<usize> = (0..parent.n_points()).filter(|&p| parent.outside(p, l_inf)).collect();
    let line_parent: Vec<usize> = (0..parent.n_lines()).filter(|&l| parent.li_apart(l, l_inf)).collect();
    let mut point_of = vec![None; parent.n_points()];
    for (i, &p) in point_parent.iter().enumerate() {
        point_of[p] = Some(i);
    }
    let mut line_of = vec![None; parent.n_lines()];
    for (i, &l) in line_parent.iter().enumerate() {
        line_of[l] = Some(i);
    }
    let (n, m) = (point_parent.len(), line_parent.len());
    let mut plane = SyntheticPlane::new(PlaneKind::Affine, n, m);
    for (i, &a) in point_parent.iter().enumerate() {
        for (j, &b) in point_parent.iter().enumerate() {
            if parent.pt_apart(a, b) {
                plane.set_pt_apart(i, j, true);
            }
        }
        for (j, &l) in line_parent.iter().enumerate() {
            plane.set_incident(i, j, parent.incident(a, l));
            plane.set_outside(i, j, parent.outside(a, l));
        }
    }
    let at_inf: Vec<Option<usize>> = line_parent.iter().map(|&l| parent.meet(l, l_inf)).collect();
    for (i, &k) in line_parent.iter().enumerate() {
        for (j, &l) in line_parent.iter().enumerate() {
            if parent.li_apart(k, l) {
                plane.set_li_apart(i, j, true);
            }
            if at_inf[i].is_some() && at_inf[i] == at_inf[j] {
                plane.set_parallel(i, j, true);
            }
        }
    }
    Ok(DerivedAffinePlane { parent: parent.clone(), l_inf, plane, point_parent, line_parent, point_of, line_of })
}

/// Data of Desargues' small axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesSmallConfig<P, L> {
    pub k: L,
    pub l: L,
    pub m: L,
    pub n_a: L,
    pub n_a2: L,
    pub n_c: L,
    pub n_c2: L,
    pub a: P,
    pub a2: P,
    pub b: P,
    pub b2: P,
    pub c: P,
    pub c2: P,
}

fn first_failure(checks: &[(&str, bool)]) -> Option<Verdict> {
    checks.iter().find(|(_, ok)| !ok).map(|(n, _)| Verdict::PremisesFail((*n).into()))
}

fn joins_parallel<G: AffineGeometry>(g: &G, a: &G::Point, b: &G::Point, c: &G::Point, d: &G::Point) -> Option<bool> {
    Some(g.parallel(&g.join(a, b)?, &g.join(c, d)?))
}

/// Desargues' small axiom: conclusion `AC ∥ A'C'`.
pub fn desargues_small_check<G: AffineGeometry>(g: &G, c: &DesarguesSmallConfig<G::Point, G::Line>) -> Verdict {
    let checks = [
        ("k∥l", g.parallel(&c.k, &c.l)),
        ("l∥m", g.parallel(&c.l, &c.m)),
        ("n_A∥n_A'", g.parallel(&c.n_a, &c.n_a2)),
        ("n_C∥n_C'", g.parallel(&c.n_c, &c.n_c2)),
        ("A,B∈n_A", g.incident(&c.a, &c.n_a) && g.incident(&c.b, &c.n_a)),
        ("B,C∈n_C", g.incident(&c.b, &c.n_c) && g.incident(&c.c, &c.n_c)),
        ("A',B'∈n_A'", g.incident(&c.a2, &c.n_a2) && g.incident(&c.b2, &c.n_a2)),
        ("B',C'∈n_C'", g.incident(&c.b2, &c.n_c2) && g.incident(&c.c2, &c.n_c2)),
        ("A,A'∈k", g.incident(&c.a, &c.k) && g.incident(&c.a2, &c.k)),
        ("B,B'∈l", g.incident(&c.b, &c.l) && g.incident(&c.b2, &c.l)),
        ("C,C'∈m", g.incident(&c.c, &c.m) && g.incident(&c.c2, &c.m)),
        ("A#C", g.pt_apart(&c.a, &c.c)),
        ("A'#C'", g.pt_apart(&c.a2, &c.c2)),
        ("n_A#l", g.li_apart(&c.n_a, &c.l)),
        ("n_C#l", g.li_apart(&c.n_c, &c.l)),
    ];
    if let Some(v) = first_failure(&checks) {
        return v;
    }
    match joins_parallel(g, &c.a, &c.c, &c.a2, &c.c2) {
        Some(true) => Verdict::Holds,
        Some(false) => Verdict::Violated,
        None => Verdict::PremisesFail("join of apart points missing".into()),
    }
}

/// Data of Desargues' big axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesBigConfig<P, L> {
    pub k: L,
    pub l: L,
    pub m: L,
    pub n_ab: L,
    pub n_bc: L,
    pub n_ac: L,
    pub p: P,
    pub a: P,
    pub a2: P,
    pub b: P,
    pub b2: P,
    pub c: P,
    pub c2: P,
}

/// Desargues' big axiom: conclusion `C'` on the parallel to `n_AC` through `A'`.
pub fn desargues_big_check<G: AffineGeometry>(g: &G, c: &DesarguesBigConfig<G::Point, G::Line>) -> Verdict {
    let on = |x: &G::Point, l: &G::Line| g.incident(x, l);
    let checks = [
        ("P on k,l,m", on(&c.p, &c.k) && on(&c.p, &c.l) && on(&c.p, &c.m)),
        ("A,B∈n_AB", on(&c.a, &c.n_ab) && on(&c.b, &c.n_ab)),
        ("B,C∈n_BC", on(&c.b, &c.n_bc) && on(&c.c, &c.n_bc)),
        ("A,C∈n_AC", on(&c.a, &c.n_ac) && on(&c.c, &c.n_ac)),
        ("A,A'∈k", on(&c.a, &c.k) && on(&c.a2, &c.k)),
        ("B,B'∈l", on(&c.b, &c.l) && on(&c.b2, &c.l)),
        ("C,C'∈m", on(&c.c, &c.m) && on(&c.c2, &c.m)),
        ("P outside n_AB and n_BC", g.outside(&c.p, &c.n_ab) && g.outside(&c.p, &c.n_bc)),
    ];
    if let Some(v) = first_failure(&checks) {
        return v;
    }
    let Some(p1) = g.par_through(&c.a2, &c.n_ab) else {
        return Verdict::PremisesFail("no parallel to n_AB through A'".into());
    };
    if !on(&c.b2, &p1) {
        return Verdict::PremisesFail("B' on the parallel to n_AB through A'".into());
    }
    let Some(p2) = g.par_through(&c.b2, &c.n_bc) else {
        return Verdict::PremisesFail("no parallel to n_BC through B'".into());
    };
    if !on(&c.c2, &p2) {
        return Verdict::PremisesFail("C' on the parallel to n_BC through B'".into());
    }
    match g.par_through(&c.a2, &c.n_ac) {
        Some(p3) if on(&c.c2, &p3) => Verdict::Holds,
        _ => Verdict::Violated,
    }
}

/// Data of the affine Pappus axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PappusAffineConfig<P, L> {
    pub k: L,
    pub l: L,
    pub p: P,
    pub a: P,
    pub a2: P,
    pub b: P,
    pub b2: P,
    pub c: P,
    pub c2: P,
}

/// Affine Pappus: conclusion `AA' ∥ CC'`.
pub fn pappus_affine_check<G: AffineGeometry>(g: &G, c: &PappusAffineConfig<G::Point, G::Line>) -> Verdict {
    let on = |x: &G::Point, l: &G::Line| g.incident(x, l);
    let six = [&c.a, &c.a2, &c.b, &c.b2, &c.c, &c.c2];
    let checks = [
        ("P,A,B,C∈k", on(&c.p, &c.k) && on(&c.a, &c.k) && on(&c.b, &c.k) && on(&c.c, &c.k)),
        ("P,A',B',C'∈l", on(&c.p, &c.l) && on(&c.a2, &c.l) && on(&c.b2, &c.l) && on(&c.c2, &c.l)),
        ("k#l", g.li_apart(&c.k, &c.l)),
        ("six points apart from P", six.iter().all(|x| g.pt_apart(x, &c.p))),
    ];
    if let Some(v) = first_failure(&checks) {
        return v;
    }
    match (joins_parallel(g, &c.a, &c.b2, &c.b, &c.c2), joins_parallel(g, &c.a2, &c.b, &c.b2, &c.c)) {
        (Some(true), Some(true)) => {}
        (None, _) | (_, None) => return Verdict::PremisesFail("join of apart points missing".into()),
        (Some(false), _) => return Verdict::PremisesFail("AB'∥BC'".into()),
        (_, Some(false)) => return Verdict::PremisesFail("A'B∥B'C".into()),
    }
    match joins_parallel(g, &c.a, &c.a2, &c.c, &c.c2) {
        Some(true) => Verdict::Holds,
        _ => Verdict::Violated,
    }
}

/// Further versions of Desargues' theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DesarguesVariant {
    /// Lines `[k,l,m]`, points `[A,B,C,A',B',C']`.
    Parallel3,
    /// Lines `[k,l]`, points `[A0,A1,A2,B0,B1,B2]`.
    LemPar1,
    /// Lines `[k,l]`, points `[A,B,C,D,A',B',C',D']`.
    LemPar2,
    /// Lines `[k,l]`, points `[A,B,C,D,A',B',C',D']`.
    LemPar3,
    /// Lines `[k,l]`, points `[A,B,C,D,A',B',C',D']`.
    LemPar4,
    /// Lines `[k,l,m,n]`, points `[A,B,C,D,A',B',C',D']`.
    Parallel4,
    /// Lines `[k,l,m]`, points `[P,A,B,C,A',B',C']`.
    Concurrent3,
    /// Lines `[k,l,m,n]`, points `[P,A,B,C,D,A',B',C',D']`.
    Concurrent4,
    /// Lines `[k,l,m]`, points `[P,A,B,C,D,A',B',C',D']`.
    FivePoint,
}

impl DesarguesVariant {
    pub const ALL: [DesarguesVariant; 9] = [
        DesarguesVariant::Parallel3,
        DesarguesVariant::LemPar1,
        DesarguesVariant::LemPar2,
        DesarguesVariant::LemPar3,
        DesarguesVariant::LemPar4,
        DesarguesVariant::Parallel4,
        DesarguesVariant::Concurrent3,
        DesarguesVariant::Concurrent4,
        DesarguesVariant::FivePoint,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DesarguesVariant::Parallel3 => "parallel-3",
            DesarguesVariant::LemPar1 => "lempar1",
            DesarguesVariant::LemPar2 => "lempar2",
            DesarguesVariant::LemPar3 => "lempar3",
            DesarguesVariant::LemPar4 => "lempar4",
            DesarguesVariant::Parallel4 => "parallel-4",
            DesarguesVariant::Concurrent3 => "concurrent-3",
            DesarguesVariant::Concurrent4 => "concurrent-4",
            DesarguesVariant::FivePoint => "5-point",
        }
    }

    /// `(line count, point count)` of a configuration.
    pub fn arity(self) -> (usize, usize) {
        match self {
            DesarguesVariant::Parallel3 => (3, 6),
            DesarguesVariant::LemPar1 => (2, 6),
            DesarguesVariant::LemPar2 | DesarguesVariant::LemPar3 | DesarguesVariant::LemPar4 => (2, 8),
            DesarguesVariant::Parallel4 => (4, 8),
            DesarguesVariant::Concurrent3 => (3, 7),
            DesarguesVariant::Concurrent4 => (4, 9),
            DesarguesVariant::FivePoint => (3, 9),
        }
    }
}

impl FromStr for DesarguesVariant {
    type Err = GeoError;
    fn from_str(s: &str) -> Result<Self, GeoError> {
        DesarguesVariant::ALL
            .into_iter()
            .find(|v| v.id() == s)
            .ok_or_else(|| GeoError::Invalid(format!("unknown Desargues variant `{s}`")))
    }
}

/// Lines and points of a variant configuration, laid out as documented on
/// [`DesarguesVariant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantConfig<P, L> {
    pub lines: Vec<L>,
    pub points: Vec<P>,
}

/// Apartness along a chain `x₀ # x₁ # … # xₙ`.
fn chain<T, F: Fn(&T, &T) -> bool>(xs: &[&T], f: F) -> bool {
    xs.windows(2).all(|w| f(w[0], w[1]))
}

/// Checks a variant. Premises fail gives `PremisesFail`; a failed derived
/// apartness or a failed final parallelism gives `Violated`.
pub fn desargues_variant_check<G: AffineGeometry>(
    g: &G,
    v: DesarguesVariant,
    c: &VariantConfig<G::Point, G::Line>,
) -> Result<Verdict, GeoError> {
    let (nl, np) = v.arity();
    if c.lines.len() != nl || c.points.len() != np {
        return Err(GeoError::Invalid(format!("{} expects {nl} lines and {np} points", v.id())));
    }
    let l = |i: usize| &c.lines[i];
    let p = |i: usize| &c.points[i];
    let on = |x: &G::Point, k: &G::Line| g.incident(x, k);
    let apt = |a: &G::Point, b: &G::Point| g.pt_apart(a, b);
    let lines_chain = |ix: &[usize]| chain(&ix.iter().map(|&i| l(i)).collect::<Vec<_>>(), |a, b| g.li_apart(a, b));
    let pts_chain = |ix: &[usize]| chain(&ix.iter().map(|&i| p(i)).collect::<Vec<_>>(), |a, b| apt(a, b));
    let all_par = |ix: &[usize]| ix.iter().all(|&i| ix.iter().all(|&j| g.parallel(l(i), l(j))));
    let par = |a: usize, b: usize, c2: usize, d: usize| joins_parallel(g, p(a), p(b), p(c2), p(d));
    let on_all = |pt: usize, ls: &[usize]| ls.iter().all(|&k| on(p(pt), l(k)));

    // (premises, derived apartness, hypothesis parallels, conclusion parallel)
    type Quad = (usize, usize, usize, usize);
    let (premises, derived, hyps, concl): (Vec<(&str, bool)>, bool, Vec<Quad>, Quad) = match v {
        DesarguesVariant::Parallel3 => (
            vec![
                ("k∥l∥m", all_par(&[0, 1, 2])),
                ("k#l#m", lines_chain(&[0, 1, 2])),
                ("A#C", apt(p(0), p(2))),
                ("A'#C'", apt(p(3), p(5))),
                ("A,A'∈k", on(p(0), l(0)) && on(p(3), l(0))),
                ("B,B'∈l", on(p(1), l(1)) && on(p(4), l(1))),
                ("C,C'∈m", on(p(2), l(2)) && on(p(5), l(2))),
            ],
            pts_chain(&[0, 1, 2]) && pts_chain(&[3, 4, 5]),
            vec![(0, 1, 3, 4), (1, 2, 4, 5)],
            (0, 2, 3, 5),
        ),
        DesarguesVariant::LemPar1 => (
            vec![
                ("k#l", g.li_apart(l(0), l(1))),
                ("k∥l", g.parallel(l(0), l(1))),
                ("A0#A1#A2", pts_chain(&[0, 1, 2])),
                ("B0#B1#B2", pts_chain(&[3, 4, 5])),
                ("A0,A1,A2∈k", (0..3).all(|i| on(p(i), l(0)))),
                ("B0,B1,B2∈l", (3..6).all(|i| on(p(i), l(1)))),
            ],
            (0..3).all(|i| (3..6).all(|j| apt(p(i), p(j)))),
            vec![(0, 3, 1, 4), (1, 4, 2, 5), (1, 3, 2, 4)],
            (0, 4, 1, 5),
        ),
        DesarguesVariant::LemPar2 => (
            vec![
                ("k#l", g.li_apart(l(0), l(1))),
                ("k∥l", g.parallel(l(0), l(1))),
                ("A#C, B#D, A'#C', B'#D'", apt(p(0), p(2)) && apt(p(1), p(3)) && apt(p(4), p(6)) && apt(p(5), p(7))),
                ("A,A',C,C'∈k", [0, 2, 4, 6].iter().all(|&i| on(p(i), l(0)))),
                ("B,B',D,D'∈l", [1, 3, 5, 7].iter().all(|&i| on(p(i), l(1)))),
            ],
            [0, 2, 4, 6].iter().all(|&i| [1, 3, 5, 7].iter().all(|&j| apt(p(i), p(j)))),
            vec![(0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 6, 7), (1, 2, 5, 6)],
            (0, 3, 4, 7),
        ),
        DesarguesVariant::LemPar3 | DesarguesVariant::LemPar4 => {
            let mut pre = vec![
                ("k∥l", g.parallel(l(0), l(1))),
                ("k#l", g.li_apart(l(0), l(1))),
                ("A,A',C,C'∈k", [0, 2, 4, 6].iter().all(|&i| on(p(i), l(0)))),
                ("B,B',D,D'∈l", [1, 3, 5, 7].iter().all(|&i| on(p(i), l(1)))),
            ];
            if v == DesarguesVariant::LemPar3 {
                pre.push(("B#D", apt(p(1), p(3))));
            }
            (
                pre,
                pts_chain(&[0, 1, 2, 3, 0]) && pts_chain(&[4, 5, 6, 7, 4]),
                vec![(0, 1, 4, 5), (1, 2, 5, 6), (2, 3, 6, 7)],
                (0, 3, 4, 7),
            )
        }
        DesarguesVariant::Parallel4 => (
            vec![
                ("k,l,m,n parallel", all_par(&[0, 1, 2, 3])),
                ("k#l#m#n", lines_chain(&[0, 1, 2, 3])),
                ("A#D", apt(p(0), p(3))),
                ("A'#D'", apt(p(4), p(7))),
                ("A,A'∈k", on(p(0), l(0)) && on(p(4), l(0))),
                ("B,B'∈l", on(p(1), l(1)) && on(p(5), l(1))),
                ("C,C'∈m", on(p(2), l(2)) && on(p(6), l(2))),
                ("D,D'∈n", on(p(3), l(3)) && on(p(7), l(3))),
            ],
            pts_chain(&[0, 1, 2, 3]) && pts_chain(&[4, 5, 6, 7]),
            vec![(0, 1, 4, 5), (1, 2, 5, 6), (2, 3, 6, 7)],
            (0, 3, 4, 7),
        ),
        DesarguesVariant::Concurrent3 => (
            vec![
                ("P on k,l,m", on_all(0, &[0, 1, 2])),
                ("k#l#m", lines_chain(&[0, 1, 2])),
                ("P apart from the six points", (1..7).all(|i| apt(p(0), p(i)))),
                ("A,A'∈k", on(p(1), l(0)) && on(p(4), l(0))),
                ("B,B'∈l", on(p(2), l(1)) && on(p(5), l(1))),
                ("C,C'∈m", on(p(3), l(2)) && on(p(6), l(2))),
                ("A#C and A'#C'", apt(p(1), p(3)) && apt(p(4), p(6))),
            ],
            pts_chain(&[1, 2, 3]) && pts_chain(&[4, 5, 6]),
            vec![(1, 2, 4, 5), (2, 3, 5, 6)],
            (1, 3, 4, 6),
        ),
        DesarguesVariant::Concurrent4 => (
            vec![
                ("P on k,l,m,n", on_all(0, &[0, 1, 2, 3])),
                ("k#l#m#n", lines_chain(&[0, 1, 2, 3])),
                ("A#D", apt(p(1), p(4))),
                ("A'#D'", apt(p(5), p(8))),
                ("P apart from the eight points", (1..9).all(|i| apt(p(0), p(i)))),
                ("A,A'∈k", on(p(1), l(0)) && on(p(5), l(0))),
                ("B,B'∈l", on(p(2), l(1)) && on(p(6), l(1))),
                ("C,C'∈m", on(p(3), l(2)) && on(p(7), l(2))),
                ("D,D'∈n", on(p(4), l(3)) && on(p(8), l(3))),
            ],
            pts_chain(&[1, 2, 3, 4]) && pts_chain(&[5, 6, 7, 8]),
            vec![(1, 2, 5, 6), (2, 3, 6, 7), (3, 4, 7, 8)],
            (1, 4, 5, 8),
        ),
        DesarguesVariant::FivePoint => {
            let out_join = |d: usize, a: usize, b: usize| g.join(p(a), p(b)).is_some_and(|j| g.outside(p(d), &j));
            (
                vec![
                    ("P on k,l,m", on_all(0, &[0, 1, 2])),
                    ("k#l#m", lines_chain(&[0, 1, 2])),
                    ("P apart from A,A',B,B',C,C'", [1, 2, 3, 5, 6, 7].iter().all(|&i| apt(p(0), p(i)))),
                    ("A,A'∈k", on(p(1), l(0)) && on(p(5), l(0))),
                    ("B,B'∈l", on(p(2), l(1)) && on(p(6), l(1))),
                    ("C,C'∈m", on(p(3), l(2)) && on(p(7), l(2))),
                    ("D outside AB and BC", out_join(4, 1, 2) && out_join(4, 2, 3)),
                    ("D' outside A'B' and B'C'", out_join(8, 5, 6) && out_join(8, 6, 7)),
                ],
                pts_chain(&[4, 1, 2, 3, 4, 2]) && pts_chain(&[8, 5, 6, 7, 8, 6]),
                vec![(1, 2, 5, 6), (2, 3, 6, 7), (2, 4, 6, 8), (3, 4, 7, 8)],
                (1, 4, 5, 8),
            )
        }
    };
    if let Some(v) = first_failure(&premises) {
        return Ok(v);
    }
    if !derived {
        return Ok(Verdict::Violated);
    }
    for (a, b, c2, d) in hyps {
        match par(a, b, c2, d) {
            Some(true) => {}
            Some(false) => return Ok(Verdict::PremisesFail("hypothesis parallelism".into())),
            None => return Ok(Verdict::Violated),
        }
    }
    Ok(match par(concl.0, concl.1, concl.2, concl.3) {
        Some(true) => Verdict::Holds,
        _ => Verdict::Violated,
    })
}

fn small_schema() -> Schema {
    // 0 l, 1 k, 2 m, 3 B, 4 B', 5 nA, 6 nC, 7 A, 8 C, 9 nA', 10 nC', 11 A', 12 C'.
    use Atom::*;
    Schema {
        steps: vec![
            Step::new(Source::AllLines, vec![]),
            Step::new(Source::ParallelTo(0), vec![]),
            Step::new(Source::ParallelTo(0), vec![]),
            Step::new(Source::PointsOn(0), vec![]),
            Step::new(Source::PointsOn(0), vec![]),
            Step::new(Source::LinesThrough(3), vec![AptLi(5, 0)]),
            Step::new(Source::LinesThrough(3), vec![AptLi(6, 0)]),
            Step::new(Source::PointsOn(5), vec![Inc(7, 1)]),
            Step::new(Source::PointsOn(6), vec![Inc(8, 2), AptPt(7, 8)]),
            Step::new(Source::LinesThrough(4), vec![Par(9, 5)]),
            Step::new(Source::LinesThrough(4), vec![Par(10, 6)]),
            Step::new(Source::PointsOn(9), vec![Inc(11, 1)]),
            Step::new(Source::PointsOn(10), vec![Inc(12, 2), AptPt(11, 12)]),
        ],
    }
}

fn small_config(v: &[usize]) -> DesarguesSmallConfig<usize, usize> {
    DesarguesSmallConfig {
        l: v[0],
        k: v[1],
        m: v[2],
        b: v[3],
        b2: v[4],
        n_a: v[5],
        n_c: v[6],
        a: v[7],
        c: v[8],
        n_a2: v[9],
        n_c2: v[10],
        a2: v[11],
        c2: v[12],
    }
}

fn big_schema() -> Schema {
    // 0 P, 1 k, 2 l, 3 m, 4 A, 5 B, 6 C, 7 nAB, 8 nBC, 9 nAC, 10 A', 11 p1, 12 B', 13 p2, 14 C'.
    use Atom::*;
    Schema {
        steps: vec![
            Step::new(Source::AllPoints, vec![]),
            Step::new(Source::LinesThrough(0), vec![]),
            Step::new(Source::LinesThrough(0), vec![]),
            Step::new(Source::LinesThrough(0), vec![]),
            Step::new(Source::PointsOn(1), vec![]),
            Step::new(Source::PointsOn(2), vec![]),
            Step::new(Source::PointsOn(3), vec![]),
            Step::new(Source::LinesThrough(4), vec![Inc(5, 7), Out(0, 7)]),
            Step::new(Source::LinesThrough(5), vec![Inc(6, 8), Out(0, 8)]),
            Step::new(Source::LinesThrough(4), vec![Inc(6, 9)]),
            Step::new(Source::PointsOn(1), vec![]),
            Step::new(Source::ParThrough(10, 7), vec![]),
            Step::new(Source::PointsOn(11), vec![Inc(12, 2)]),
            Step::new(Source::ParThrough(12, 8), vec![]),
            Step::new(Source::PointsOn(13), vec![Inc(14, 3)]),
        ],
    }
}

fn big_config(v: &[usize]) -> DesarguesBigConfig<usize, usize> {
    DesarguesBigConfig {
        p: v[0],
        k: v[1],
        l: v[2],
        m: v[3],
        a: v[4],
        b: v[5],
        c: v[6],
        n_ab: v[7],
        n_bc: v[8],
        n_ac: v[9],
        a2: v[10],
        b2: v[12],
        c2: v[14],
    }
}

fn pappus_schema() -> Schema {
    // 0 k, 1 l, 2 P, 3 A, 4 B, 5 C, 6 A', 7 B', 8 C'.
    use Atom::*;
    Schema {
        steps: vec![
            Step::new(Source::AllLines, vec![]),
            Step::new(Source::AllLines, vec![AptLi(1, 0)]),
            Step::new(Source::PointsOn(0), vec![Inc(2, 1)]),
            Step::new(Source::PointsOn(0), vec![AptPt(3, 2)]),
            Step::new(Source::PointsOn(0), vec![AptPt(4, 2)]),
            Step::new(Source::PointsOn(0), vec![AptPt(5, 2)]),
            Step::new(Source::PointsOn(1), vec![AptPt(6, 2)]),
            Step::new(Source::PointsOn(1), vec![AptPt(7, 2), ParJoin([6, 4, 7, 5])]),
            Step::new(Source::PointsOn(1), vec![AptPt(8, 2), ParJoin([3, 7, 4, 8])]),
        ],
    }
}

fn pappus_config(v: &[usize]) -> PappusAffineConfig<usize, usize> {
    PappusAffineConfig { k: v[0], l: v[1], p: v[2], a: v[3], b: v[4], c: v[5], a2: v[6], b2: v[7], c2: v[8] }
}

/// Premise-driven schema for a variant, and the map from schema variables to
/// the variant's `(lines, points)` layout.
fn variant_schema(v: DesarguesVariant) -> (Schema, Vec<usize>, Vec<usize>) {
    use Atom::*;
    use Source::*;
    let s = |steps: Vec<Step>| Schema { steps };
    match v {
        DesarguesVariant::Parallel3 => (
            // 0 l, 1 k, 2 m, 3 A, 4 B, 5 C, 6 A', 7 B', 8 C'
            s(vec![
                Step::new(AllLines, vec![]),
                Step::new(ParallelTo(0), vec![AptLi(1, 0)]),
                Step::new(ParallelTo(0), vec![AptLi(2, 0)]),
                Step::new(PointsOn(1), vec![]),
                Step::new(PointsOn(0), vec![]),
                Step::new(PointsOn(2), vec![AptPt(3, 5)]),
                Step::new(PointsOn(1), vec![]),
                Step::new(PointsOn(0), vec![ParJoin([3, 4, 6, 7])]),
                Step::new(PointsOn(2), vec![AptPt(6, 8), ParJoin([4, 5, 7, 8])]),
            ]),
            vec![1, 0, 2],
            vec![3, 4, 5, 6, 7, 8],
        ),
        DesarguesVariant::LemPar1 => (
            // 0 k, 1 l, 2 A0, 3 A1, 4 A2, 5 B0, 6 B1, 7 B2
            s(vec![
                Step::new(AllLines, vec![]),
                Step::new(ParallelTo(0), vec![AptLi(1, 0)]),
                Step::new(PointsOn(0), vec![]),
                Step::new(PointsOn(0), vec![AptPt(2, 3)]),
                Step::new(PointsOn(0), vec![AptPt(3, 4)]),
                Step::new(PointsOn(1), vec![]),
                Step::new(PointsOn(1), vec![AptPt(5, 6), ParJoin([2, 5, 3, 6])]),
                Step::new(PointsOn(1), vec![AptPt(6, 7), ParJoin([3, 6, 4, 7]), ParJoin([3, 5, 4, 6])]),
            ]),
            vec![0, 1],
            vec![2, 3, 4, 5, 6, 7],
        ),
        DesarguesVariant::LemPar2 | DesarguesVariant::LemPar3 | DesarguesVariant::LemPar4 => {
            // 0 k, 1 l, 2 A, 3 B, 4 C, 5 D, 6 A', 7 B', 8 C', 9 D'
            let steps = if v == DesarguesVariant::LemPar2 {
                vec![
                    Step::new(AllLines, vec![]),
                    Step::new(ParallelTo(0), vec![AptLi(1, 0)]),
                    Step::new(PointsOn(0), vec![]),
                    Step::new(PointsOn(1), vec![]),
                    Step::new(PointsOn(0), vec![AptPt(2, 4)]),
                    Step::new(PointsOn(1), vec![AptPt(3, 5), ParJoin([2, 3, 4, 5])]),
                    Step::new(PointsOn(0), vec![]),
                    Step::new(PointsOn(1), vec![ParJoin([2, 3, 6, 7])]),
                    Step::new(PointsOn(0), vec![AptPt(6, 8), ParJoin([3, 4, 7, 8])]),
                    Step::new(PointsOn(1), vec![AptPt(7, 9), ParJoin([2, 3, 8, 9])]),
                ]
            } else {
                let bd = if v == DesarguesVariant::LemPar3 { vec![AptPt(3, 5)] } else { vec![] };
                vec![
                    Step::new(AllLines, vec![]),
                    Step::new(ParallelTo(0), vec![AptLi(1, 0)]),
                    Step::new(PointsOn(0), vec![]),
                    Step::new(PointsOn(1), vec![]),
                    Step::new(PointsOn(0), vec![]),
                    Step::new(PointsOn(1), bd),
                    Step::new(PointsOn(0), vec![]),
                    Step::new(PointsOn(1), vec![ParJoin([2, 3, 6, 7])]),
                    Step::new(PointsOn(0), vec![ParJoin([3, 4, 7, 8])]),
                    Step::new(PointsOn(1), vec![ParJoin([4, 5, 8, 9])]),
                ]
            };
            (s(steps), vec![0, 1], vec![2, 3, 4, 5, 6, 7, 8, 9])
        }
        DesarguesVariant::Parallel4 => (
            // 0 l, 1 k, 2 m, 3 n, 4 A, 5 B, 6 C, 7 D, 8 A', 9 B', 10 C', 11 D'
            s(vec![
                Step::new(AllLines, vec![]),
                Step::new(ParallelTo(0), vec![AptLi(1, 0)]),
                Step::new(ParallelTo(0), vec![AptLi(2, 0)]),
                Step::new(ParallelTo(0), vec![AptLi(3, 2)]),
                Step::new(PointsOn(1), vec![]),
                Step::new(PointsOn(0), vec![]),
                Step::new(PointsOn(2), vec![]),
                Step::new(PointsOn(3), vec![AptPt(4, 7)]),
                Step::new(PointsOn(1), vec![]),
                Step::new(PointsOn(0), vec![ParJoin([4, 5, 8, 9])]),
                Step::new(PointsOn(2), vec![ParJoin([5, 6, 9, 10])]),
                Step::new(PointsOn(3), vec![AptPt(8, 11), ParJoin([6, 7, 10, 11])]),
            ]),
            vec![1, 0, 2, 3],
            vec![4, 5, 6, 7, 8, 9, 10, 11],
        ),
        DesarguesVariant::Concurrent3 => (
            // 0 P, 1 k, 2 l, 3 m, 4 A, 5 B, 6 C, 7 A', 8 B', 9 C'
            s(vec![
                Step::new(AllPoints, vec![]),
                Step::new(LinesThrough(0), vec![]),
                Step::new(LinesThrough(0), vec![AptLi(2, 1)]),
                Step::new(LinesThrough(0), vec![AptLi(3, 2)]),
                Step::new(PointsOn(1), vec![AptPt(4, 0)]),
                Step::new(PointsOn(2), vec![AptPt(5, 0)]),
                Step::new(PointsOn(3), vec![AptPt(6, 0), AptPt(4, 6)]),
                Step::new(PointsOn(1), vec![AptPt(7, 0)]),
                Step::new(PointsOn(2), vec![AptPt(8, 0), ParJoin([4, 5, 7, 8])]),
                Step::new(PointsOn(3), vec![AptPt(9, 0), AptPt(7, 9), ParJoin([5, 6, 8, 9])]),
            ]),
            vec![1, 2, 3],
            vec![0, 4, 5, 6, 7, 8, 9],
        ),
        DesarguesVariant::Concurrent4 => (
            // 0 P, 1 k, 2 l, 3 m, 4 n, 5 A, 6 B, 7 C, 8 D, 9 A', 10 B', 11 C', 12 D'
            s(vec![
                Step::new(AllPoints, vec![]),
                Step::new(LinesThrough(0), vec![]),
                Step::new(LinesThrough(0), vec![AptLi(2, 1)]),
                Step::new(LinesThrough(0), vec![AptLi(3, 2)]),
                Step::new(LinesThrough(0), vec![AptLi(4, 3)]),
                Step::new(PointsOn(1), vec![AptPt(5, 0)]),
                Step::new(PointsOn(2), vec![AptPt(6, 0)]),
                Step::new(PointsOn(3), vec![AptPt(7, 0)]),
                Step::new(PointsOn(4), vec![AptPt(8, 0), AptPt(5, 8)]),
                Step::new(PointsOn(1), vec![AptPt(9, 0)]),
                Step::new(PointsOn(2), vec![AptPt(10, 0), ParJoin([5, 6, 9, 10])]),
                Step::new(PointsOn(3), vec![AptPt(11, 0), ParJoin([6, 7, 10, 11])]),
                Step::new(PointsOn(4), vec![AptPt(12, 0), AptPt(9, 12), ParJoin([7, 8, 11, 12])]),
            ]),
            vec![1, 2, 3, 4],
            vec![0, 5, 6, 7, 8, 9, 10, 11, 12],
        ),
        DesarguesVariant::FivePoint => (
            // 0 P, 1 k, 2 l, 3 m, 4 A, 5 B, 6 C, 7 D, 8 A', 9 B', 10 C', 11 D'
            s(vec![
                Step::new(AllPoints, vec![]),
                Step::new(LinesThrough(0), vec![]),
                Step::new(LinesThrough(0), vec![AptLi(2, 1)]),
                Step::new(LinesThrough(0), vec![AptLi(3, 2)]),
                Step::new(PointsOn(1), vec![AptPt(4, 0)]),
                Step::new(PointsOn(2), vec![AptPt(5, 0)]),
                Step::new(PointsOn(3), vec![AptPt(6, 0)]),
                Step::new(AllPoints, vec![OutJoin([7, 4, 5]), OutJoin([7, 5, 6])]),
                Step::new(PointsOn(1), vec![AptPt(8, 0)]),
                Step::new(PointsOn(2), vec![AptPt(9, 0), ParJoin([4, 5, 8, 9])]),
                Step::new(PointsOn(3), vec![AptPt(10, 0), ParJoin([5, 6, 9, 10])]),
                Step::new(
                    AllPoints,
                    vec![OutJoin([11, 8, 9]), OutJoin([11, 9, 10]), ParJoin([5, 7, 9, 11]), ParJoin([6, 7, 10, 11])],
                ),
            ]),
            vec![1, 2, 3],
            vec![0, 4, 5, 6, 7, 8, 9, 10, 11],
        ),
    }
}

fn outcome_result(name: &str, out: SearchOutcome, order: impl Fn(&[usize]) -> Vec<usize>) -> AxiomResult {
    AxiomResult {
        name: name.into(),
        passed: out.violation.is_none(),
        witness: out.violation.as_deref().map(order),
        checked: out.premise_ok,
        mode: out.mode,
    }
}

/// Desargues' small axiom over a synthetic plane. Witness order
/// `(k,l,m,n_A,n_A',n_C,n_C',A,A',B,B',C,C')`.
pub fn check_desargues_small_synthetic(p: &SyntheticPlane, o: &VerifyOptions) -> AxiomResult {
    let leaf = |v: &[usize]| desargues_small_check(p, &small_config(v));
    outcome_result("desargues_small", run_schema(p, &small_schema(), &leaf, o), |v| {
        let c = small_config(v);
        vec![c.k, c.l, c.m, c.n_a, c.n_a2, c.n_c, c.n_c2, c.a, c.a2, c.b, c.b2, c.c, c.c2]
    })
}

/// Desargues' big axiom over a synthetic plane. Witness order
/// `(k,l,m,n_AB,n_BC,n_AC,P,A,A',B,B',C,C')`.
pub fn check_desargues_big_synthetic(p: &SyntheticPlane, o: &VerifyOptions) -> AxiomResult {
    let leaf = |v: &[usize]| desargues_big_check(p, &big_config(v));
    outcome_result("desargues_big", run_schema(p, &big_schema(), &leaf, o), |v| {
        let c = big_config(v);
        vec![c.k, c.l, c.m, c.n_ab, c.n_bc, c.n_ac, c.p, c.a, c.a2, c.b, c.b2, c.c, c.c2]
    })
}

/// Affine Pappus over a synthetic plane. Witness order `(k,l,P,A,A',B,B',C,C')`.
pub fn check_pappus_affine_synthetic(p: &SyntheticPlane, o: &VerifyOptions) -> AxiomResult {
    let leaf = |v: &[usize]| pappus_affine_check(p, &pappus_config(v));
    outcome_result("pappus", run_schema(p, &pappus_schema(), &leaf, o), |v| {
        let c = pappus_config(v);
        vec![c.k, c.l, c.p, c.a, c.a2, c.b, c.b2, c.c, c.c2]
    })
}

/// A Desargues variant over a synthetic plane. Witness order: the variant's
/// lines followed by its points.
pub fn check_variant_synthetic(p: &SyntheticPlane, v: DesarguesVariant, o: &VerifyOptions) -> AxiomResult {
    let (schema, li, pi) = variant_schema(v);
    let cfg = |x: &[usize]| VariantConfig {
        lines: li.iter().map(|&i| x[i]).collect(),
        points: pi.iter().map(|&i| x[i]).collect(),
    };
    let leaf = |x: &[usize]| desargues_variant_check(p, v, &cfg(x)).expect("arity matches");
    outcome_result(v.id(), run_schema(p, &schema, &leaf, o), |x| {
        let c = cfg(x);
        c.lines.into_iter().chain(c.points).collect()
    })
}

/// Checks a finite plane against the preaffine axioms plus Desargues' small
/// and big axioms and Pappus.
pub fn verify_affine_axioms(p: &SyntheticPlane, o: &VerifyOptions) -> AxiomReport {
    let (n, m) = (p.n_points(), p.n_lines());
    let mut r = common_axioms(p, o);
    r.push(check_forall("meet_at_most_one", &[m, m, n, n], o, |t| {
        let on = |a| p.incident(a, t[0]) && p.incident(a, t[1]);
        !(p.li_apart(t[0], t[1]) && on(t[2]) && on(t[3])) || t[2] == t[3]
    }));
    r.push(check_each("rich_line_points", m, |l| {
        let pts = p.points_on(l);
        pts.iter().any(|&a| pts.iter().any(|&b| p.pt_apart(a as usize, b as usize)))
    }));
    r.push(check_exists(
        "rich_config",
        (0..m).any(|l| {
            let pts = p.points_on(l);
            pts.iter().any(|&a| pts.iter().any(|&b| p.pt_apart(a as usize, b as usize))) && (0..n).any(|c| p.outside(c, l))
        }),
    ));
    r.push(check_each("rich_line_outside", m, |l| (0..n).any(|a| p.outside(a, l))));
    r.push(check_forall("par_reflexive", &[m], o, |t| p.parallel(t[0], t[0])));
    r.push(check_forall("par_symmetric", &[m, m], o, |t| !p.parallel(t[0], t[1]) || p.parallel(t[1], t[0])));
    r.push(check_forall("par_transitive", &[m, m, m], o, |t| {
        !(p.parallel(t[0], t[1]) && p.parallel(t[1], t[2])) || p.parallel(t[0], t[2])
    }));
    r.push(check_forall("par_through_exists", &[n, m], o, |t| {
        p.lines_through(t[0]).iter().any(|&l| p.parallel(t[1], l as usize))
    }));
    r.push(check_forall("par_through_unique", &[n, m, m], o, |t| {
        !(p.incident(t[0], t[1]) && p.incident(t[0], t[2]) && p.parallel(t[1], t[2])) || t[1] == t[2]
    }));
    r.push(check_forall("self_dual", &[n, n, m, m], o, |t| {
        let (a, b, l, q) = (t[0], t[1], t[2], t[3]);
        !(p.pt_apart(a, b) && p.li_apart(l, q)) || p.outside(a, l) || p.outside(b, q) || p.outside(a, q) || p.outside(b, l)
    }));
    r.push(check_forall("par_apart_outside", &[m, m, n], o, |t| {
        !(p.li_apart(t[0], t[1]) && p.parallel(t[0], t[1])) || p.outside(t[2], t[0]) || p.outside(t[2], t[1])
    }));
    r.push(check_forall("intersection", &[n, m, m, m], o, |t| {
        let (a, k, l, q) = (t[0], t[1], t[2], t[3]);
        !(p.incident(a, l) && p.incident(a, q) && p.parallel(k, l) && p.li_apart(l, q))
            || (p.li_apart(k, q) && (0..n).any(|b| p.incident(b, k) && p.incident(b, q)))
    }));
    if !o.skip_theorems {
        r.push(check_desargues_small_synthetic(p, o));
        r.push(check_desargues_big_synthetic(p, o));
        r.push(check_pappus_affine_synthetic(p, o));
    }
    AxiomReport { theory: PlaneKind::Affine, results: r }
}
