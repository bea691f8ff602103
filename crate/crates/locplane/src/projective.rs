//! The projective plane `ℙ(R)` over a ring with decidable invertibility.
//!
//! Points and lines are classes of unimodular vectors up to invertible
//! scalars, stored with their first invertible coordinate equal to 1.

use std::collections::HashMap;
use std::fmt;

use crate::linalg::{Mat3, ProjClassMatrix, Vec3};
use crate::ring::{LocalityReport, RingContext, RingValue};
use crate::synthetic::{
    check_forall, run_schema, Atom, AxiomReport, AxiomResult, IncidenceGeometry, Mode, PlaneKind,
    ProjectiveGeometry, Schema, Source, Step, SyntheticPlane, Verdict, VerifyOptions,
};
use crate::GeoError;

/// Scales a unimodular vector so its first invertible coordinate is 1.
pub fn canonical(v: &Vec3) -> Result<Vec3, GeoError> {
    let i = v.first_invertible().ok_or_else(|| GeoError::NotUnimodular(v.to_string()))?;
    Ok(v.scale(&v.0[i].try_inverse().expect("invertible")))
}

macro_rules! proj_elem {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A ", $what, " of `ℙ(R)` in canonical form.")]
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name(Vec3);

        impl $name {
            /// Canonicalizes a unimodular vector.
            pub fn new(v: Vec3) -> Result<Self, GeoError> {
                Ok($name(canonical(&v)?))
            }
            pub fn from_ints(ctx: &RingContext, v: [i64; 3]) -> Result<Self, GeoError> {
                Self::new(Vec3::from_ints(ctx, v))
            }
            pub fn coords(&self) -> &Vec3 {
                &self.0
            }
            pub fn ctx(&self) -> &RingContext {
                self.0.ctx()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}
proj_elem!(ProjPoint, "point");
proj_elem!(ProjLine, "line");

/// Some 2×2 minor of `[a|b]` is invertible.
pub fn pt_apart(a: &ProjPoint, b: &ProjPoint) -> bool {
    a.0.cross(&b.0).is_unimodular()
}

/// Dual of [`pt_apart`].
pub fn li_apart(k: &ProjLine, l: &ProjLine) -> bool {
    k.0.cross(&l.0).is_unimodular()
}

/// `Σ λᵢaᵢ = 0`.
pub fn incident(a: &ProjPoint, l: &ProjLine) -> bool {
    a.0.dot(&l.0).is_zero()
}

/// `Σ λᵢaᵢ` is invertible.
pub fn outside(a: &ProjPoint, l: &ProjLine) -> bool {
    a.0.dot(&l.0).is_invertible()
}

/// The unique line through two apart points.
pub fn line_through(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine, GeoError> {
    if !pt_apart(a, b) {
        return Err(GeoError::Precondition(format!("points {a} and {b} are not apart")));
    }
    ProjLine::new(a.0.cross(&b.0))
}

/// The unique common point of two apart lines.
pub fn meet(k: &ProjLine, l: &ProjLine) -> Result<ProjPoint, GeoError> {
    if !li_apart(k, l) {
        return Err(GeoError::Precondition(format!("lines {k} and {l} are not apart")));
    }
    ProjPoint::new(k.0.cross(&l.0))
}

/// A point or a line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlaneElement {
    Point(ProjPoint),
    Line(ProjLine),
}

/// Swaps points and lines with the same coordinates.
pub fn dualize(e: &PlaneElement) -> PlaneElement {
    match e {
        PlaneElement::Point(p) => PlaneElement::Line(ProjLine(p.0.clone())),
        PlaneElement::Line(l) => PlaneElement::Point(ProjPoint(l.0.clone())),
    }
}

/// `det [a|b|c]`.
pub fn collinear_det(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> RingValue {
    Mat3::from_columns(&a.0, &b.0, &c.0).expect("same ring").det()
}

/// For apart `A`, `B`: whether `C` lies on `AB`.
pub fn is_collinear_with(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<bool, GeoError> {
    if !pt_apart(a, b) {
        return Err(GeoError::Precondition(format!("points {a} and {b} are not apart")));
    }
    Ok(collinear_det(a, b, c).is_zero())
}

/// `B # C` and `A ∉ BC`.
pub fn non_collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    pt_apart(b, c) && outside(a, &ProjLine::new(b.0.cross(&c.0)).expect("apart"))
}

/// The symmetric form: `A ∉ BC`, `B ∉ CA`, `C ∉ AB` with all joins defined.
pub fn non_collinear_symmetric(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    let out = |x: &ProjPoint, y: &ProjPoint, z: &ProjPoint| pt_apart(y, z) && outside(x, &line_through(y, z).expect("apart"));
    out(a, b, c) && out(b, c, a) && out(c, a, b)
}

/// Dual of [`non_collinear`].
pub fn non_concurrent(k: &ProjLine, l: &ProjLine, m: &ProjLine) -> bool {
    non_collinear(&ProjPoint(k.0.clone()), &ProjPoint(l.0.clone()), &ProjPoint(m.0.clone()))
}

/// `(κ·a)(λ·b) − (κ·b)(λ·a)`.
pub fn delta_value(k: &ProjLine, l: &ProjLine, a: &ProjPoint, b: &ProjPoint) -> RingValue {
    &(&k.0.dot(&a.0) * &l.0.dot(&b.0)) - &(&k.0.dot(&b.0) * &l.0.dot(&a.0))
}

/// `(k # l ∨ A # B)` and one of `A`, `B` outside one of `k`, `l`.
pub fn delta_side_conditions(k: &ProjLine, l: &ProjLine, a: &ProjPoint, b: &ProjPoint) -> bool {
    (li_apart(k, l) || pt_apart(a, b)) && [a, b].iter().any(|p| outside(p, k) || outside(p, l))
}

/// Decides `δ(k, l, A, B)` by the determinant criterion; valid only under
/// [`delta_side_conditions`].
pub fn delta_det(k: &ProjLine, l: &ProjLine, a: &ProjPoint, b: &ProjPoint) -> Result<bool, GeoError> {
    if !delta_side_conditions(k, l, a, b) {
        return Err(GeoError::Precondition("side conditions of the determinant criterion fail".into()));
    }
    Ok(delta_value(k, l, a, b).is_zero())
}

/// Decides `δ(k, l, A, B)` by exhaustive search for a line `r` through `A`
/// and `B` and a point `X` on `k`, `l` and `r`. Returns the first witness
/// `(r, X)` in enumeration order.
pub fn delta_search(
    plane: &RingPlane,
    k: &ProjLine,
    l: &ProjLine,
    a: &ProjPoint,
    b: &ProjPoint,
) -> Result<Option<(ProjLine, ProjPoint)>, GeoError> {
    let ix = |p: &ProjPoint| plane.point_index(p).ok_or_else(|| GeoError::Invalid(format!("{p} is not in the plane")));
    let lx = |q: &ProjLine| plane.line_index(q).ok_or_else(|| GeoError::Invalid(format!("{q} is not in the plane")));
    let w = plane.plane.delta_witness(lx(k)?, lx(l)?, ix(a)?, ix(b)?);
    Ok(w.map(|(r, x)| (plane.lines[r].clone(), plane.points[x].clone())))
}

/// A finite projective plane over a ring: enumerated points and lines and the
/// exported synthetic plane.
#[derive(Clone, Debug)]
pub struct RingPlane {
    pub ctx: RingContext,
    pub points: Vec<ProjPoint>,
    pub lines: Vec<ProjLine>,
    pub plane: SyntheticPlane,
    index: HashMap<Vec3, usize>,
}

/// Canonical unimodular vectors of a finite ring in lexicographic order.
pub fn enumerate_canonical(ctx: &RingContext) -> Result<Vec<Vec3>, GeoError> {
    let elems = ctx.enumerate().map_err(|_| GeoError::RequiresFinite(ctx.descriptor()))?;
    let mut out = Vec::new();
    for x in &elems {
        for y in &elems {
            for z in &elems {
                let v = Vec3([x.clone(), y.clone(), z.clone()]);
                if v.0.iter().find(|c| c.is_invertible()).is_some_and(|c| c.is_one()) {
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

impl RingPlane {
    /// Enumerates `ℙ(R)` and exports its relations.
    pub fn new(ctx: &RingContext) -> Result<Self, GeoError> {
        let vecs = enumerate_canonical(ctx)?;
        let points: Vec<ProjPoint> = vecs.iter().cloned().map(ProjPoint).collect();
        let lines: Vec<ProjLine> = vecs.iter().cloned().map(ProjLine).collect();
        let n = points.len();
        let mut plane = SyntheticPlane::new(PlaneKind::Projective, n, n);
        for i in 0..n {
            for j in i + 1..n {
                if pt_apart(&points[i], &points[j]) {
                    plane.set_pt_apart(i, j, true);
                    plane.set_li_apart(i, j, true);
                }
            }
            for j in 0..n {
                let s = points[i].0.dot(&lines[j].0);
                if s.is_zero() {
                    plane.set_incident(i, j, true);
                } else if s.is_invertible() {
                    plane.set_outside(i, j, true);
                }
            }
        }
        let index = vecs.into_iter().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(RingPlane { ctx: ctx.clone(), points, lines, plane, index })
    }

    pub fn point_index(&self, p: &ProjPoint) -> Option<usize> {
        self.index.get(&p.0).copied()
    }
    pub fn line_index(&self, l: &ProjLine) -> Option<usize> {
        self.index.get(&l.0).copied()
    }
    /// Index of the class of an arbitrary unimodular vector.
    pub fn vec_index(&self, v: &Vec3) -> Option<usize> {
        canonical(v).ok().and_then(|c| self.index.get(&c).copied())
    }
}

/// Builds `ℙ(R)` for a finite ring as a synthetic plane.
pub fn export_plane(ctx: &RingContext) -> Result<SyntheticPlane, GeoError> {
    Ok(RingPlane::new(ctx)?.plane)
}

/// `ℙ(R)` with typed elements. `δ` uses the determinant criterion when its
/// side conditions hold, otherwise exhaustive search (finite rings only).
#[derive(Clone, Debug)]
pub struct RingProjective {
    ctx: RingContext,
    finite: Option<RingPlane>,
}

impl RingProjective {
    pub fn new(ctx: &RingContext) -> Result<Self, GeoError> {
        let finite = if ctx.is_finite() { Some(RingPlane::new(ctx)?) } else { None };
        Ok(RingProjective { ctx: ctx.clone(), finite })
    }
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }
}

impl IncidenceGeometry for RingProjective {
    type Point = ProjPoint;
    type Line = ProjLine;
    fn pt_apart(&self, a: &ProjPoint, b: &ProjPoint) -> bool {
        pt_apart(a, b)
    }
    fn li_apart(&self, k: &ProjLine, l: &ProjLine) -> bool {
        li_apart(k, l)
    }
    fn incident(&self, p: &ProjPoint, l: &ProjLine) -> bool {
        incident(p, l)
    }
    fn outside(&self, p: &ProjPoint, l: &ProjLine) -> bool {
        outside(p, l)
    }
}

impl ProjectiveGeometry for RingProjective {
    fn delta(&self, k: &ProjLine, l: &ProjLine, a: &ProjPoint, b: &ProjPoint) -> Result<bool, GeoError> {
        if delta_side_conditions(k, l, a, b) {
            return Ok(delta_value(k, l, a, b).is_zero());
        }
        // `δ(k, k, A, A)` holds in every projective plane over a local ring.
        if k == l && a == b && self.ctx.is_local()? {
            return Ok(true);
        }
        match &self.finite {
            Some(p) => Ok(delta_search(p, k, l, a, b)?.is_some()),
            None => Err(GeoError::Undecidable(format!(
                "δ({k},{l},{a},{b}) over {} without the determinant side conditions",
                self.ctx
            ))),
        }
    }
}

/// Points `A, B, C, D` and lines `k, l, m, n` of the Desargues theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesConfig<P, L> {
    pub a: P,
    pub b: P,
    pub c: P,
    pub d: P,
    pub k: L,
    pub l: L,
    pub m: L,
    pub n: L,
}

fn any_out<G: IncidenceGeometry>(g: &G, pts: &[&G::Point], lines: &[&G::Line]) -> bool {
    pts.iter().any(|p| lines.iter().any(|l| g.outside(p, l)))
}

/// Checks the premises of the Desargues theorem and, if they hold, the
/// conclusion `δ(l, n, A, C)`.
pub fn desargues_check<G: ProjectiveGeometry>(
    g: &G,
    c: &DesarguesConfig<G::Point, G::Line>,
) -> Result<Verdict, GeoError> {
    let deltas = [
        ("δ(k,l,A,B)", &c.k, &c.l, &c.a, &c.b),
        ("δ(l,m,B,C)", &c.l, &c.m, &c.b, &c.c),
        ("δ(m,n,C,D)", &c.m, &c.n, &c.c, &c.d),
        ("δ(n,k,D,A)", &c.n, &c.k, &c.d, &c.a),
        ("δ(k,m,B,D)", &c.k, &c.m, &c.b, &c.d),
    ];
    for (name, k, l, a, b) in deltas {
        if !g.delta(k, l, a, b)? {
            return Ok(Verdict::PremisesFail(name.into()));
        }
    }
    let checks: [(&str, bool); 6] = [
        ("l#n or A#C", g.li_apart(&c.l, &c.n) || g.pt_apart(&c.a, &c.c)),
        ("one of A,C outside one of l,n", any_out(g, &[&c.a, &c.c], &[&c.l, &c.n])),
        ("B outside one of k,l,m", any_out(g, &[&c.b], &[&c.k, &c.l, &c.m])),
        ("D outside one of m,n,k", any_out(g, &[&c.d], &[&c.m, &c.n, &c.k])),
        ("one of D,A,B outside k", any_out(g, &[&c.d, &c.a, &c.b], &[&c.k])),
        ("one of B,C,D outside m", any_out(g, &[&c.b, &c.c, &c.d], &[&c.m])),
    ];
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Ok(Verdict::PremisesFail((*name).into()));
    }
    Ok(if g.delta(&c.l, &c.n, &c.a, &c.c)? { Verdict::Holds } else { Verdict::Violated })
}

/// Points `A..F` and lines `k_A..k_F` of the Pappus theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PappusConfig<P, L> {
    pub points: [P; 6],
    pub lines: [L; 6],
}

/// Checks the premises of the Pappus theorem and, if they hold, the
/// conclusion `δ(k_A, k_D, F, C)`.
///
/// Besides the hexagon incidences and the two δ premises this requires
/// `(A#B ∧ D#E) ∨ (k_B#k_C ∧ k_E#k_F)`, one of `C, F` outside one of
/// `k_A, k_D`, and `k_A#k_D ∨ F#C`. Without the last condition `ℙ(Z/4)` has
/// violations.
pub fn pappus_check<G: ProjectiveGeometry>(g: &G, c: &PappusConfig<G::Point, G::Line>) -> Result<Verdict, GeoError> {
    let [a, b, cc, d, e, f] = &c.points;
    let [ka, kb, kc, kd, ke, kf] = &c.lines;
    let incs = [
        ("A on k_A", a, ka),
        ("B on k_A", b, ka),
        ("B on k_B", b, kb),
        ("C on k_B", cc, kb),
        ("C on k_C", cc, kc),
        ("D on k_C", d, kc),
        ("D on k_D", d, kd),
        ("E on k_D", e, kd),
        ("E on k_E", e, ke),
        ("F on k_E", f, ke),
        ("F on k_F", f, kf),
        ("A on k_F", a, kf),
    ];
    if let Some((name, _, _)) = incs.iter().find(|(_, p, l)| !g.incident(p, l)) {
        return Ok(Verdict::PremisesFail((*name).into()));
    }
    if !g.delta(kc, kf, b, e)? {
        return Ok(Verdict::PremisesFail("δ(k_C,k_F,B,E)".into()));
    }
    if !g.delta(kb, ke, a, d)? {
        return Ok(Verdict::PremisesFail("δ(k_B,k_E,A,D)".into()));
    }
    // The line disjunct is the dual of the point disjunct under the
    // relabeling that fixes the conclusion.
    if !((g.pt_apart(a, b) && g.pt_apart(d, e)) || (g.li_apart(kb, kc) && g.li_apart(ke, kf))) {
        return Ok(Verdict::PremisesFail("(A#B and D#E) or (k_B#k_C and k_E#k_F)".into()));
    }
    if !any_out(g, &[cc, f], &[ka, kd]) {
        return Ok(Verdict::PremisesFail("one of C,F outside one of k_A,k_D".into()));
    }
    // Side condition of the determinant criterion for the conclusion.
    if !(g.li_apart(ka, kd) || g.pt_apart(f, cc)) {
        return Ok(Verdict::PremisesFail("k_A#k_D or F#C".into()));
    }
    Ok(if g.delta(ka, kd, f, cc)? { Verdict::Holds } else { Verdict::Violated })
}

/// Four points, expected in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame4 {
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub d: ProjPoint,
}

impl Frame4 {
    /// `(1,0,0), (0,1,0), (0,0,1), (1,1,1)`.
    pub fn standard(ctx: &RingContext) -> Self {
        let p = |v| ProjPoint::from_ints(ctx, v).expect("unimodular");
        Frame4 { a: p([1, 0, 0]), b: p([0, 1, 0]), c: p([0, 0, 1]), d: p([1, 1, 1]) }
    }

    /// Every three of the four points are non-collinear.
    pub fn in_general_position(&self) -> bool {
        let p = [&self.a, &self.b, &self.c, &self.d];
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)].iter().all(|&(i, j, k)| non_collinear(p[i], p[j], p[k]))
    }

    pub fn points(&self) -> [&ProjPoint; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// Image of a point under a matrix; fails when the image is not unimodular.
pub fn apply_matrix(m: &Mat3, p: &ProjPoint) -> Result<ProjPoint, GeoError> {
    let v = m.mul_vec(&p.0);
    ProjPoint::new(v.clone()).map_err(|_| GeoError::NotAnAction {
        matrix: m.to_string(),
        point: p.to_string(),
        image: v.to_string(),
    })
}

/// Image of a point under an element of `H(R)`.
pub fn apply_h(h: &ProjClassMatrix, p: &ProjPoint) -> Result<ProjPoint, GeoError> {
    apply_matrix(h.matrix(), p)
}

/// Image of a line under an element of `H(R)`: `(M⁻¹)ᵀ λ`.
pub fn apply_h_line(h: &ProjClassMatrix, l: &ProjLine) -> Result<ProjLine, GeoError> {
    let t = h.matrix().inverse()?.transpose();
    let v = t.mul_vec(&l.0);
    ProjLine::new(v.clone()).map_err(|_| GeoError::NotAnAction {
        matrix: t.to_string(),
        point: l.to_string(),
        image: v.to_string(),
    })
}

/// The matrix with columns `λA, μB, νC`, `(λ,μ,ν) = [a|b|c]⁻¹ d`, which sends
/// the standard frame to the given one. Over a finite ring the matrix is also
/// checked to act on every point; over a non-local ring this can fail.
pub fn frame_to_h(f: &Frame4) -> Result<ProjClassMatrix, GeoError> {
    let ctx = f.a.ctx().clone();
    let local = match ctx.check_local() {
        Ok(LocalityReport::Local) => true,
        Ok(_) => false,
        Err(e) => return Err(e.into()),
    };
    if local && !f.in_general_position() {
        return Err(GeoError::Precondition("frame is not in general position".into()));
    }
    let abc = Mat3::from_columns(&f.a.0, &f.b.0, &f.c.0)?;
    let inv = abc
        .inverse()
        .map_err(|_| GeoError::Precondition("frame is not in general position: [a|b|c] is singular".into()))?;
    let s = inv.mul_vec(&f.d.0);
    if let Some(i) = s.0.iter().position(|x| !x.is_invertible()) {
        return Err(GeoError::Precondition(format!("frame is not in general position: coefficient {i} is {}", s.0[i])));
    }
    let m = Mat3::from_columns(&f.a.0.scale(&s.0[0]), &f.b.0.scale(&s.0[1]), &f.c.0.scale(&s.0[2]))?;
    if ctx.is_finite() {
        for v in enumerate_canonical(&ctx)? {
            apply_matrix(&m, &ProjPoint(v))?;
        }
    }
    Ok(ProjClassMatrix::new(m)?)
}

fn desargues_schema() -> Schema {
    // Variables: 0 k, 1 l, 2 A, 3 B, 4 m, 5 C, 6 D, 7 n.
    use Atom::*;
    Schema {
        steps: vec![
            Step::new(Source::AllLines, vec![]),
            Step::new(Source::AllLines, vec![]),
            Step::new(Source::AllPoints, vec![]),
            Step::new(Source::AllPoints, vec![Delta([0, 1, 2, 3])]),
            Step::new(Source::AllLines, vec![Any(vec![Out(3, 0), Out(3, 1), Out(3, 4)])]),
            Step::new(Source::AllPoints, vec![Delta([1, 4, 3, 5])]),
            Step::new(
                Source::AllPoints,
                vec![
                    Delta([0, 4, 3, 6]),
                    Any(vec![Out(6, 0), Out(2, 0), Out(3, 0)]),
                    Any(vec![Out(3, 4), Out(5, 4), Out(6, 4)]),
                ],
            ),
            Step::new(
                Source::AllLines,
                vec![
                    Delta([4, 7, 5, 6]),
                    Delta([7, 0, 6, 2]),
                    Any(vec![Out(6, 4), Out(6, 7), Out(6, 0)]),
                    Any(vec![AptLi(1, 7), AptPt(2, 5)]),
                    Any(vec![Out(2, 1), Out(2, 7), Out(5, 1), Out(5, 7)]),
                ],
            ),
        ],
    }
}

fn desargues_config(v: &[usize]) -> DesarguesConfig<usize, usize> {
    DesarguesConfig { k: v[0], l: v[1], a: v[2], b: v[3], m: v[4], c: v[5], d: v[6], n: v[7] }
}

fn pappus_schema() -> Schema {
    // Variables: 0 kA, 1 A, 2 B, 3 kB, 4 C, 5 kC, 6 D, 7 kD, 8 E, 9 kE, 10 F, 11 kF.
    use Atom::*;
    Schema {
        steps: vec![
            Step::new(Source::AllLines, vec![]),
            Step::new(Source::PointsOn(0), vec![]),
            Step::new(Source::PointsOn(0), vec![]),
            Step::new(Source::LinesThrough(2), vec![]),
            Step::new(Source::PointsOn(3), vec![]),
            Step::new(Source::LinesThrough(4), vec![]),
            Step::new(Source::PointsOn(5), vec![]),
            Step::new(Source::LinesThrough(6), vec![]),
            Step::new(Source::PointsOn(7), vec![]),
            Step::new(Source::LinesThrough(8), vec![Delta([3, 9, 1, 6])]),
            Step::new(
                Source::PointsOn(9),
                vec![Any(vec![Out(4, 0), Out(4, 7), Out(10, 0), Out(10, 7)]), Any(vec![AptLi(0, 7), AptPt(10, 4)])],
            ),
            Step::new(Source::LinesThrough(10), vec![Inc(1, 11), Delta([5, 11, 2, 8])]),
        ],
    }
}

fn pappus_config(v: &[usize]) -> PappusConfig<usize, usize> {
    PappusConfig { points: [v[1], v[2], v[4], v[6], v[8], v[10]], lines: [v[0], v[3], v[5], v[7], v[9], v[11]] }
}

fn theorem_result(name: &str, out: crate::synthetic::SearchOutcome, order: impl Fn(&[usize]) -> Vec<usize>) -> AxiomResult {
    AxiomResult {
        name: name.into(),
        passed: out.violation.is_none(),
        witness: out.violation.as_deref().map(order),
        checked: out.premise_ok,
        mode: out.mode,
    }
}

/// Runs the Desargues theorem over a synthetic plane. Witness order is
/// `(A, B, C, D, k, l, m, n)`.
pub fn check_desargues_synthetic(plane: &SyntheticPlane, opts: &VerifyOptions) -> AxiomResult {
    let leaf = |v: &[usize]| desargues_check(plane, &desargues_config(v)).expect("synthetic δ is total");
    let out = run_schema(plane, &desargues_schema(), &leaf, opts);
    theorem_result("desargues", out, |v| {
        let c = desargues_config(v);
        vec![c.a, c.b, c.c, c.d, c.k, c.l, c.m, c.n]
    })
}

/// Runs the Pappus theorem over a synthetic plane. Witness order is
/// `(A, …, F, k_A, …, k_F)`.
pub fn check_pappus_synthetic(plane: &SyntheticPlane, opts: &VerifyOptions) -> AxiomResult {
    let leaf = |v: &[usize]| pappus_check(plane, &pappus_config(v)).expect("synthetic δ is total");
    let out = run_schema(plane, &pappus_schema(), &leaf, opts);
    theorem_result("pappus", out, |v| {
        let c = pappus_config(v);
        c.points.iter().chain(c.lines.iter()).copied().collect()
    })
}

/// Existential axiom over one carrier: every element has a witness.
pub(crate) fn check_each<F: Fn(usize) -> bool + Sync>(name: &str, n: usize, f: F) -> AxiomResult {
    let bad = (0..n).find(|&i| !f(i));
    AxiomResult { name: name.into(), passed: bad.is_none(), witness: bad.map(|i| vec![i]), checked: n as u64, mode: Mode::Exhaustive }
}

/// Closed existential axiom.
pub(crate) fn check_exists(name: &str, found: bool) -> AxiomResult {
    AxiomResult { name: name.into(), passed: found, witness: None, checked: 1, mode: Mode::Exhaustive }
}

/// Sequents shared by the projective and affine theories: apartness,
/// incidence/outsideness and join existence and uniqueness.
pub(crate) fn common_axioms(p: &SyntheticPlane, o: &VerifyOptions) -> Vec<AxiomResult> {
    let (n, m) = (p.n_points(), p.n_lines());
    vec![
        check_forall("pt_irreflexive", &[n], o, |t| !p.pt_apart(t[0], t[0])),
        check_forall("pt_symmetric", &[n, n], o, |t| !p.pt_apart(t[0], t[1]) || p.pt_apart(t[1], t[0])),
        check_forall("pt_cotransitive", &[n, n, n], o, |t| {
            !p.pt_apart(t[0], t[1]) || p.pt_apart(t[0], t[2]) || p.pt_apart(t[1], t[2])
        }),
        check_forall("li_irreflexive", &[m], o, |t| !p.li_apart(t[0], t[0])),
        check_forall("li_symmetric", &[m, m], o, |t| !p.li_apart(t[0], t[1]) || p.li_apart(t[1], t[0])),
        check_forall("li_cotransitive", &[m, m, m], o, |t| {
            !p.li_apart(t[0], t[1]) || p.li_apart(t[0], t[2]) || p.li_apart(t[1], t[2])
        }),
        check_forall("inc_out_exclusive", &[n, m], o, |t| !(p.incident(t[0], t[1]) && p.outside(t[0], t[1]))),
        check_forall("out_point_split", &[n, n, m], o, |t| {
            !p.outside(t[0], t[2]) || p.pt_apart(t[0], t[1]) || p.outside(t[1], t[2])
        }),
        check_forall("out_line_split", &[n, m, m], o, |t| {
            !p.outside(t[0], t[1]) || p.li_apart(t[1], t[2]) || p.outside(t[0], t[2])
        }),
        check_forall("join_exists", &[n, n], o, |t| {
            !p.pt_apart(t[0], t[1]) || (0..m).any(|k| p.incident(t[0], k) && p.incident(t[1], k))
        }),
        check_forall("join_unique", &[n, n, m, m], o, |t| {
            let on = |k| p.incident(t[0], k) && p.incident(t[1], k);
            !(p.pt_apart(t[0], t[1]) && on(t[2]) && on(t[3])) || t[2] == t[3]
        }),
    ]
}

/// Checks a finite plane against the preprojective axioms plus Desargues and
/// Pappus. One result per axiom, first counterexample as witness.
pub fn verify_projective_axioms(p: &SyntheticPlane, o: &VerifyOptions) -> AxiomReport {
    let (n, m) = (p.n_points(), p.n_lines());
    let mut r = common_axioms(p, o);
    r.push(check_forall("meet_exists", &[m, m], o, |t| {
        !p.li_apart(t[0], t[1]) || (0..n).any(|a| p.incident(a, t[0]) && p.incident(a, t[1]))
    }));
    r.push(check_forall("meet_unique", &[m, m, n, n], o, |t| {
        let on = |a| p.incident(a, t[0]) && p.incident(a, t[1]);
        !(p.li_apart(t[0], t[1]) && on(t[2]) && on(t[3])) || t[2] == t[3]
    }));
    r.push(check_each("rich_line_points", m, |l| {
        let pts = p.points_on(l);
        pts.iter().any(|&a| {
            pts.iter().any(|&b| {
                p.pt_apart(a as usize, b as usize)
                    && pts.iter().any(|&c| p.pt_apart(b as usize, c as usize) && p.pt_apart(c as usize, a as usize))
            })
        })
    }));
    r.push(check_each("rich_line_outside", m, |l| (0..n).any(|a| p.outside(a, l))));
    r.push(check_exists(
        "rich_config",
        (0..m).any(|l| {
            let pts = p.points_on(l);
            pts.iter().any(|&a| pts.iter().any(|&b| p.pt_apart(a as usize, b as usize))) && (0..n).any(|c| p.outside(c, l))
        }),
    ));
    r.push(check_each("rich_point_lines", n, |a| {
        let ls = p.lines_through(a);
        ls.iter().any(|&k| {
            ls.iter().any(|&l| {
                p.li_apart(k as usize, l as usize)
                    && ls.iter().any(|&q| p.li_apart(l as usize, q as usize) && p.li_apart(q as usize, k as usize))
            })
        })
    }));
    r.push(check_each("rich_point_outside", n, |a| (0..m).any(|l| p.outside(a, l))));
    r.push(check_exists(
        "rich_dual_config",
        (0..n).any(|a| {
            let ls = p.lines_through(a);
            ls.iter().any(|&k| ls.iter().any(|&l| p.li_apart(k as usize, l as usize))) && (0..m).any(|q| p.outside(a, q))
        }),
    ));
    r.push(check_forall("self_dual", &[n, n, m, m], o, |t| {
        let (a, b, l, q) = (t[0], t[1], t[2], t[3]);
        !(p.pt_apart(a, b) && p.li_apart(l, q)) || p.outside(a, l) || p.outside(b, q) || p.outside(a, q) || p.outside(b, l)
    }));
    if !o.skip_theorems {
        r.push(check_desargues_synthetic(p, o));
        r.push(check_pappus_synthetic(p, o));
    }
    AxiomReport { theory: PlaneKind::Projective, results: r }
}
