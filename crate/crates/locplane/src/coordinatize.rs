//! Coordinates from synthetic planes: translations, dilatations, the ring
//! `Tp` of trace-preserving homomorphisms, the coordinate isomorphisms
//! `𝔸(Tp) → 𝒜` and `ℙ(Tp) → 𝒫`, and torsor checks for `G` and `H`.
//!
//! All constructions run on a finite [`SyntheticPlane`] through its join,
//! meet and parallel lookups. Auxiliary points are the first suitable ones in
//! index order.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{derive_affine, AffLine, AffPoint, AffineRingPlane};
use crate::linalg::{enumerate_g, enumerate_h, g_mul, h_mul, AffMatrix, ProjClassMatrix};
use crate::morphisms::{auto_from_g, auto_from_h, extend_affine_to_projective, verify_morphism, MorphismReport, PlaneMorphism};
use crate::projective::{self, Frame4, ProjLine, RingPlane};
use crate::ring::{Locality, RingContext, RingTable};
use crate::synthetic::{PlaneKind, SyntheticPlane, VerifyOptions};
use crate::GeoError;

/// The translation `τ_PP′`, identified by the image of one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Translation {
    pub from: usize,
    pub to: usize,
}

/// The dilatation sending `P ↦ P′` and `Q ↦ Q′`, with its point map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dilatation {
    pub p: usize,
    pub q: usize,
    pub p2: usize,
    pub q2: usize,
    map: Vec<usize>,
}

impl Dilatation {
    /// The image of every point, by index.
    pub fn point_map(&self) -> &[usize] {
        &self.map
    }
}

/// The trace-preserving homomorphism `α_ABC` sending `τ_AB` to `τ_AC`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TpElement {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

fn missing(what: &str) -> GeoError {
    GeoError::Construction(what.into())
}

/// `B # C` and `A` outside `BC`.
pub fn non_collinear(p: &SyntheticPlane, a: usize, b: usize, c: usize) -> bool {
    p.pt_apart(b, c) && p.join(b, c).is_some_and(|l| p.outside(a, l))
}

/// A finite affine plane with its full translation table.
#[derive(Debug)]
pub struct AffineStructure {
    plane: SyntheticPlane,
    n: usize,
    /// `trans[(p·n + q)·n + r] = τ_pq(r)`.
    trans: Vec<u32>,
}

const MAX_POINTS: usize = 512;

impl AffineStructure {
    /// Builds every translation `τ_pq`. For `p # q` a point `r` outside `pq`
    /// goes to the meet of the parallel to `pq` through `r` and the parallel
    /// to `pr` through `q`; points near `pq` go through an auxiliary point
    /// outside it. For `p` not apart from `q` the translation is composed
    /// through the first point apart from both.
    pub fn new(plane: &SyntheticPlane) -> Result<Self, GeoError> {
        if plane.kind() != PlaneKind::Affine {
            return Err(GeoError::Invalid("translations need an affine plane".into()));
        }
        let n = plane.n_points();
        if n > MAX_POINTS {
            return Err(GeoError::Invalid(format!("plane with {n} points is too large for a translation table")));
        }
        let mut s = AffineStructure { plane: plane.clone(), n, trans: vec![u32::MAX; n * n * n] };
        for p in 0..n {
            for q in 0..n {
                if p == q {
                    for r in 0..n {
                        s.trans[(p * n + q) * n + r] = r as u32;
                    }
                } else if plane.pt_apart(p, q) {
                    let img = s.apart_translation(p, q)?;
                    s.trans[(p * n + q) * n..(p * n + q + 1) * n].copy_from_slice(&img);
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                if p == q || plane.pt_apart(p, q) {
                    continue;
                }
                let q0 = (0..n)
                    .find(|&x| plane.pt_apart(p, x) && plane.pt_apart(x, q))
                    .ok_or_else(|| missing(&format!("no point apart from both {p} and {q}")))?;
                for r in 0..n {
                    let mid = s.trans[(p * n + q0) * n + r] as usize;
                    s.trans[(p * n + q) * n + r] = s.trans[(q0 * n + q) * n + mid];
                }
            }
        }
        Ok(s)
    }

    fn simple(&self, p: usize, q: usize, r: usize) -> Option<usize> {
        let g = &self.plane;
        let lpq = g.join(p, q)?;
        let lpr = g.join(p, r)?;
        g.meet(g.par_through(r, lpq)?, g.par_through(q, lpr)?)
    }

    fn apart_translation(&self, p: usize, q: usize) -> Result<Vec<u32>, GeoError> {
        let g = &self.plane;
        let lpq = g.join(p, q).ok_or_else(|| missing(&format!("no line through {p} and {q}")))?;
        let s = g.first_outside(lpq).ok_or_else(|| missing(&format!("no point outside line {lpq}")))?;
        let s2 = self.simple(p, q, s).ok_or_else(|| missing(&format!("translation {p}->{q} undefined at {s}")))?;
        let lss = g.join(s, s2).ok_or_else(|| missing(&format!("no line through {s} and {s2}")))?;
        (0..self.n)
            .map(|r| {
                let img = if g.outside(r, lpq) {
                    self.simple(p, q, r)
                } else if g.outside(r, lss) {
                    self.simple(s, s2, r)
                } else {
                    None
                };
                img.map(|x| x as u32).ok_or_else(|| missing(&format!("translation {p}->{q} undefined at {r}")))
            })
            .collect()
    }

    pub fn plane(&self) -> &SyntheticPlane {
        &self.plane
    }
    pub fn n_points(&self) -> usize {
        self.n
    }

    /// `τ_pq(r)`.
    #[inline]
    pub fn trans(&self, p: usize, q: usize, r: usize) -> usize {
        self.trans[(p * self.n + q) * self.n + r] as usize
    }

    pub fn translation_apply(&self, t: Translation, r: usize) -> usize {
        self.trans(t.from, t.to, r)
    }

    /// Normal form based at point 0.
    pub fn translation_normal(&self, t: Translation) -> Translation {
        Translation { from: 0, to: self.translation_apply(t, 0) }
    }

    /// `t1 ∘ t2`, based at point 0.
    pub fn translation_compose(&self, t1: Translation, t2: Translation) -> Translation {
        Translation { from: 0, to: self.translation_apply(t1, self.translation_apply(t2, 0)) }
    }

    pub fn translation_inverse(&self, t: Translation) -> Translation {
        Translation { from: t.to, to: t.from }
    }

    /// Equality by the image of point 0.
    pub fn translation_eq(&self, t1: Translation, t2: Translation) -> bool {
        self.translation_apply(t1, 0) == self.translation_apply(t2, 0)
    }

    /// The dilatation fixing `p` and sending `q` to `q2`, for `q # p # q2`
    /// and `q2` on `pq`.
    pub fn dilatation_from_fixed(&self, p: usize, q: usize, q2: usize) -> Result<Dilatation, GeoError> {
        let g = &self.plane;
        let pre = |m: &str| GeoError::Precondition(m.into());
        if !(g.pt_apart(q, p) && g.pt_apart(p, q2)) {
            return Err(pre("dilatation needs Q # P # Q'"));
        }
        let lpq = g.join(p, q).ok_or_else(|| missing("no line PQ"))?;
        if !g.incident(q2, lpq) {
            return Err(pre("dilatation needs Q' on PQ"));
        }
        if q == q2 {
            return Ok(Dilatation { p, q, p2: p, q2, map: (0..self.n).collect() });
        }
        let r = g.first_outside(lpq).ok_or_else(|| missing("no point outside PQ"))?;
        let lpr = g.join(p, r).ok_or_else(|| missing("no line PR"))?;
        let lqr = g.join(q, r).ok_or_else(|| missing("no line QR"))?;
        let r2 = g.meet(lpr, g.par_through(q2, lqr).ok_or_else(|| missing("no parallel"))?).ok_or_else(|| missing("R' undefined"))?;
        let image = |a: usize| -> Option<usize> {
            if g.outside(a, lpq) {
                g.meet(g.join(p, a)?, g.par_through(q2, g.join(q, a)?)?)
            } else if g.outside(a, lpr) {
                g.meet(g.join(p, a)?, g.par_through(r2, g.join(r, a)?)?)
            } else if g.pt_apart(a, q) && g.outside(a, lqr) {
                g.meet(g.par_through(q2, g.join(q, a)?)?, g.par_through(r2, g.join(r, a)?)?)
            } else {
                None
            }
        };
        let map = (0..self.n)
            .map(|a| image(a).ok_or_else(|| missing(&format!("dilatation undefined at point {a}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Dilatation { p, q, p2: p, q2, map })
    }

    /// The dilatation sending `p ↦ p2` and `q ↦ q2`: a translation followed by
    /// a dilatation fixing `p2`.
    pub fn dilatation(&self, p: usize, q: usize, p2: usize, q2: usize) -> Result<Dilatation, GeoError> {
        let t = Translation { from: p, to: p2 };
        let tq = self.translation_apply(t, q);
        let fixed = self.dilatation_from_fixed(p2, tq, q2)?;
        let map = (0..self.n).map(|a| fixed.map[self.translation_apply(t, a)]).collect();
        Ok(Dilatation { p, q, p2, q2, map })
    }

    pub fn dilatation_apply(&self, s: &Dilatation, a: usize) -> usize {
        s.map[a]
    }

    fn rule(&self, a: usize, b: usize, c: usize, y: usize) -> Option<usize> {
        let g = &self.plane;
        g.meet(g.join(a, y)?, g.par_through(c, g.join(b, y)?)?)
    }

    /// For `A # y`: the point `Z` with `α(τ_Ay) = τ_AZ`.
    fn hom_apart(&self, al: TpElement, y: usize) -> Result<usize, GeoError> {
        let g = &self.plane;
        let TpElement { a, b, c } = al;
        let lab = g.join(a, b).ok_or_else(|| missing("element base points are not apart"))?;
        let fail = || missing(&format!("trace-preserving map ({a},{b},{c}) undefined at {y}"));
        if g.outside(y, lab) {
            return self.rule(a, b, c, y).ok_or_else(fail);
        }
        let y0 = g.first_outside(lab).ok_or_else(fail)?;
        let z0 = self.rule(a, b, c, y0).ok_or_else(fail)?;
        if !g.join(a, y0).is_some_and(|l| g.outside(y, l)) {
            return Err(fail());
        }
        self.rule(a, y0, z0, y).ok_or_else(fail)
    }

    /// `τ^α`, returned based at `A`.
    pub fn tp_apply(&self, al: TpElement, t: Translation) -> Result<Translation, GeoError> {
        let g = &self.plane;
        let a = al.a;
        let y = self.translation_apply(t, a);
        if y == a {
            return Ok(Translation { from: a, to: a });
        }
        if g.pt_apart(a, y) {
            return Ok(Translation { from: a, to: self.hom_apart(al, y)? });
        }
        let q = (0..self.n)
            .find(|&x| g.pt_apart(a, x) && g.pt_apart(x, y))
            .ok_or_else(|| missing(&format!("no point apart from both {a} and {y}")))?;
        let z1 = self.hom_apart(al, q)?;
        let y2 = self.trans(q, y, a);
        let z2 = self.hom_apart(al, y2)?;
        Ok(Translation { from: a, to: self.trans(a, z2, z1) })
    }

    pub fn tp_is_invertible(&self, al: TpElement) -> bool {
        self.plane.pt_apart(al.a, al.c)
    }

    /// `(A, C, B)`.
    pub fn tp_inverse(&self, al: TpElement) -> Result<TpElement, GeoError> {
        if !self.tp_is_invertible(al) {
            return Err(GeoError::Precondition(format!("({},{},{}) is not invertible", al.a, al.b, al.c)));
        }
        Ok(TpElement { a: al.a, b: al.c, c: al.b })
    }

    /// `(A, B, τ_CA(A))`.
    pub fn tp_neg(&self, al: TpElement) -> TpElement {
        TpElement { a: al.a, b: al.b, c: self.trans(al.c, al.a, al.a) }
    }
}

/// The ring of trace-preserving homomorphisms of a finite affine plane, with
/// elements indexed by the points of the line through the first apart pair
/// `(A₀, B₀)`.
#[derive(Clone, Debug)]
pub struct TpRing {
    structure: Arc<AffineStructure>,
    a0: usize,
    b0: usize,
    line: usize,
    points: Vec<usize>,
    elem_of: Vec<Option<u32>>,
    table: RingTable,
    ctx: RingContext,
    /// `act[i·n + v]`: image of the translation `0 ↦ v` under element `i`,
    /// as the image of point 0.
    act: Vec<u32>,
}

/// Builds `Tp` for a finite affine plane after checking the coherent part of
/// the affine suite.
pub fn build_tp_ring(plane: &SyntheticPlane) -> Result<TpRing, GeoError> {
    let opts = VerifyOptions { skip_theorems: true, ..VerifyOptions::default() };
    let report = crate::affine::verify_affine_axioms(plane, &opts);
    if let Some(f) = report.failures().next() {
        return Err(GeoError::Precondition(format!("plane fails the affine suite: {}", f.line())));
    }
    TpRing::new(Arc::new(AffineStructure::new(plane)?))
}

impl TpRing {
    /// Builds the ring tables over an existing translation structure.
    pub fn new(structure: Arc<AffineStructure>) -> Result<Self, GeoError> {
        let g = structure.plane.clone();
        let n = structure.n;
        let (a0, b0) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| g.pt_apart(a, b))
            .ok_or_else(|| missing("no apart pair of points"))?;
        let line = g.join(a0, b0).ok_or_else(|| missing("no line through the base pair"))?;
        let points: Vec<usize> = g.points_on(line).iter().map(|&p| p as usize).collect();
        let mut elem_of = vec![None; n];
        for (i, &p) in points.iter().enumerate() {
            elem_of[p] = Some(i as u32);
        }
        let size = points.len();
        let mut tp = TpRing {
            structure,
            a0,
            b0,
            line,
            points,
            elem_of,
            table: RingTable::from_context(&RingContext::zmod(2)?)?,
            ctx: RingContext::rational(),
            act: Vec::new(),
        };
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for i in 0..size {
            for j in 0..size {
                let (x, y) = (tp.element(i as u32), tp.element(j as u32));
                add[i * size + j] = tp.class(tp.tp_add(x, y)?)?;
                mul[i * size + j] = tp.class(tp.tp_mul(x, y)?)?;
            }
        }
        let labels = tp.points.iter().map(|p| format!("P{p}")).collect();
        let table = RingTable::new(size, add, mul, tp.elem(a0)?, tp.elem(b0)?)
            .map_err(|e| GeoError::Construction(format!("Tp is not a ring: {e}")))?
            .with_labels(labels);
        if table.check_local() != Locality::Local {
            return Err(GeoError::Construction("Tp is not a local ring".into()));
        }
        tp.ctx = RingContext::from_table(table.clone());
        tp.table = table;
        let mut act = vec![0u32; size * n];
        for i in 0..size {
            let al = tp.element(i as u32);
            for v in 0..n {
                let t = tp.structure.tp_apply(al, Translation { from: 0, to: v })?;
                act[i * n + v] = tp.structure.translation_apply(t, 0) as u32;
            }
        }
        tp.act = act;
        Ok(tp)
    }

    pub fn structure(&self) -> &AffineStructure {
        &self.structure
    }
    pub fn plane(&self) -> &SyntheticPlane {
        &self.structure.plane
    }
    /// `(A₀, B₀)`.
    pub fn base_pair(&self) -> (usize, usize) {
        (self.a0, self.b0)
    }
    /// The line `A₀B₀` carrying the elements.
    pub fn base_line(&self) -> usize {
        self.line
    }
    pub fn size(&self) -> usize {
        self.points.len()
    }
    pub fn table(&self) -> &RingTable {
        &self.table
    }
    /// `Tp` as a ring context, for building `𝔸(Tp)` and `ℙ(Tp)`.
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }
    /// The point `C` of the element `(A₀, B₀, C)`.
    pub fn point_of(&self, i: u32) -> usize {
        self.points[i as usize]
    }
    /// `(A₀, B₀, C_i)`.
    pub fn element(&self, i: u32) -> TpElement {
        TpElement { a: self.a0, b: self.b0, c: self.points[i as usize] }
    }
    fn elem(&self, p: usize) -> Result<u32, GeoError> {
        self.elem_of[p].ok_or_else(|| missing(&format!("point {p} is not on the base line")))
    }

    /// Index of the class of an element: the image of `τ_{A₀B₀}` at `A₀`.
    pub fn class(&self, al: TpElement) -> Result<u32, GeoError> {
        let t = self.structure.tp_apply(al, Translation { from: self.a0, to: self.b0 })?;
        self.elem(self.structure.translation_apply(t, self.a0))
    }

    /// Transport to the base pair.
    pub fn normalize(&self, al: TpElement) -> Result<TpElement, GeoError> {
        Ok(self.element(self.class(al)?))
    }

    pub fn tp_eq(&self, x: TpElement, y: TpElement) -> Result<bool, GeoError> {
        Ok(self.class(x)? == self.class(y)?)
    }
    pub fn tp_zero(&self) -> TpElement {
        TpElement { a: self.a0, b: self.b0, c: self.a0 }
    }
    pub fn tp_one(&self) -> TpElement {
        TpElement { a: self.a0, b: self.b0, c: self.b0 }
    }

    /// `(A, B, τ_AC(D))` after transporting both operands to the base pair.
    pub fn tp_add(&self, x: TpElement, y: TpElement) -> Result<TpElement, GeoError> {
        let (x, y) = (self.normalize(x)?, self.normalize(y)?);
        Ok(TpElement { a: self.a0, b: self.b0, c: self.structure.trans(self.a0, x.c, y.c) })
    }

    /// With `B′` the first point outside `AB` and `C′ = τ^β_{AB′}(A)`, the
    /// product is `(A, B′, D)` where `D` is the meet of `AB′` with the
    /// parallel to `BC′` through `C`.
    pub fn tp_mul(&self, x: TpElement, y: TpElement) -> Result<TpElement, GeoError> {
        let g = &self.structure.plane;
        let (x, y) = (self.normalize(x)?, self.normalize(y)?);
        let (a, b, c) = (x.a, x.b, x.c);
        let b2 = g.first_outside(self.line).ok_or_else(|| missing("no point outside the base line"))?;
        let c2 = self.structure.translation_apply(self.structure.tp_apply(y, Translation { from: a, to: b2 })?, a);
        let ab2 = g.join(a, b2).ok_or_else(|| missing("no line AB'"))?;
        let bc2 = g.join(b, c2).ok_or_else(|| missing("no line BC'"))?;
        let d = g
            .par_through(c, bc2)
            .and_then(|l| g.meet(l, ab2))
            .ok_or_else(|| missing("product construction has no intersection"))?;
        self.normalize(TpElement { a, b: b2, c: d })
    }

    /// `α ∘ β` evaluated through [`AffineStructure::tp_apply`] twice.
    pub fn tp_mul_by_composition(&self, x: TpElement, y: TpElement) -> Result<TpElement, GeoError> {
        let s = &self.structure;
        let inner = s.tp_apply(y, Translation { from: self.a0, to: self.b0 })?;
        let outer = s.tp_apply(x, inner)?;
        Ok(self.element(self.elem(s.translation_apply(outer, self.a0))?))
    }

    pub fn tp_neg(&self, x: TpElement) -> TpElement {
        self.structure.tp_neg(x)
    }
    pub fn tp_is_invertible(&self, x: TpElement) -> bool {
        self.structure.tp_is_invertible(x)
    }
    pub fn tp_inverse(&self, x: TpElement) -> Result<TpElement, GeoError> {
        self.structure.tp_inverse(x)
    }

    /// Element `i` applied to the translation `0 ↦ v`, as the image of 0.
    #[inline]
    pub fn act(&self, i: u32, v: usize) -> usize {
        self.act[i as usize * self.structure.n + v] as usize
    }

    /// `τ^α_{from,to}` evaluated at `r`, for an element index.
    pub fn scaled_apply(&self, i: u32, from: usize, to: usize, r: usize) -> usize {
        let s = &self.structure;
        let v = s.trans(from, to, 0);
        s.trans(0, self.act(i, v), r)
    }
}

/// The isomorphism `φ: 𝔸(Tp) → 𝒜`, `φ(α, β) = τ^α_OX τ^β_OY (O)`.
#[derive(Clone, Debug)]
pub struct Coordinatization {
    /// `𝔸(Tp)`.
    pub source: AffineRingPlane,
    pub morphism: PlaneMorphism,
    pub report: MorphismReport,
}

/// Builds and verifies `φ` for the frame `(X, Y, O)`.
pub fn coord_map(tp: &TpRing, x: usize, y: usize, o: usize) -> Result<Coordinatization, GeoError> {
    let g = tp.plane();
    if !non_collinear(g, y, o, x) {
        return Err(GeoError::Precondition("X, Y, O are collinear".into()));
    }
    let source = AffineRingPlane::new(tp.ctx())?;
    let size = tp.size();
    let phi = |al: u32, be: u32| tp.scaled_apply(al, o, x, tp.scaled_apply(be, o, y, o));
    let points: Vec<usize> = source
        .points
        .iter()
        .map(|p| phi(p.0.index().expect("finite") as u32, p.1.index().expect("finite") as u32))
        .collect();
    debug_assert_eq!(points.len(), size * size);
    let src = &source.plane;
    let lines = (0..src.n_lines())
        .map(|l| {
            let pts = src.points_on(l);
            let (a, b) = pts
                .iter()
                .find_map(|&a| pts.iter().find(|&&b| src.pt_apart(a as usize, b as usize)).map(|&b| (a, b)))
                .ok_or_else(|| missing(&format!("line {l} of 𝔸(Tp) has no two apart points")))?;
            g.join(points[a as usize], points[b as usize])
                .ok_or_else(|| missing(&format!("images of points on line {l} have no join")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let morphism =
        PlaneMorphism::new(PlaneKind::Affine, (src.n_points(), src.n_lines()), (g.n_points(), g.n_lines()), points, lines)?;
    let report = verify_morphism(src, g, &morphism)?;
    Ok(Coordinatization { source, morphism, report })
}

/// Coordinates `(α, β)` of a point for the frame `(X, Y, O)`.
pub fn coord_inverse(tp: &TpRing, x: usize, y: usize, o: usize, p: usize) -> Result<(u32, u32), GeoError> {
    let g = tp.plane();
    let ox = g.join(o, x).ok_or_else(|| missing("no line OX"))?;
    let oy = g.join(o, y).ok_or_else(|| missing("no line OY"))?;
    let p1 = g.par_through(p, oy).and_then(|l| g.meet(l, ox)).ok_or_else(|| missing("no projection to OX"))?;
    let p2 = g.par_through(p, ox).and_then(|l| g.meet(l, oy)).ok_or_else(|| missing("no projection to OY"))?;
    Ok((tp.class(TpElement { a: o, b: x, c: p1 })?, tp.class(TpElement { a: o, b: y, c: p2 })?))
}

/// `ψ: ℙ(Tp) → 𝒫` for a frame `(A, B, O, I)`.
#[derive(Clone, Debug)]
pub struct ProjCoordinatization {
    pub tp: TpRing,
    /// `ℙ(Tp)`.
    pub source: RingPlane,
    pub morphism: PlaneMorphism,
    pub report: MorphismReport,
}

fn general_position(p: &SyntheticPlane, f: [usize; 4]) -> bool {
    [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)].iter().all(|&(i, j, k)| non_collinear(p, f[i], f[j], f[k]))
}

/// Coordinatizes a finite projective plane from a frame `[A, B, O, I]`:
/// `X = IB ∩ OA`, `Y = IA ∩ OB`, `Tp` from `𝔄(𝒫, AB)`, then `φ` extended to
/// the projective plane.
pub fn proj_coordinatize(plane: &SyntheticPlane, frame: [usize; 4]) -> Result<ProjCoordinatization, GeoError> {
    if plane.kind() != PlaneKind::Projective {
        return Err(GeoError::Invalid("proj_coordinatize needs a projective plane".into()));
    }
    if frame.iter().any(|&x| x >= plane.n_points()) {
        return Err(GeoError::Invalid("frame point out of range".into()));
    }
    if !general_position(plane, frame) {
        return Err(GeoError::Precondition("frame is not in general position".into()));
    }
    let [a, b, o, i] = frame;
    let j = |p, q| plane.join(p, q).ok_or_else(|| missing("frame join undefined"));
    let x = plane.meet(j(i, b)?, j(o, a)?).ok_or_else(|| missing("IB and OA do not meet"))?;
    let y = plane.meet(j(i, a)?, j(o, b)?).ok_or_else(|| missing("IA and OB do not meet"))?;
    let d = derive_affine(plane, j(a, b)?)?;
    let aff = |p: usize| d.point_of_parent(p).ok_or_else(|| missing("frame point lies near AB"));
    let tp = build_tp_ring(&d.plane)?;
    let cm = coord_map(&tp, aff(x)?, aff(y)?, aff(o)?)?;
    let source = RingPlane::new(tp.ctx())?;
    let ctx = tp.ctx().clone();
    let l_inf = source.line_index(&ProjLine::from_ints(&ctx, [0, 0, 1])?).expect("line (0,0,1)");
    let ds = derive_affine(&source.plane, l_inf)?;
    let points = ds
        .point_parent
        .iter()
        .map(|&pi| {
            let v = source.points[pi].coords();
            let inv = v.0[2].try_inverse().expect("outside (0,0,1)");
            let q = AffPoint(&v.0[0] * &inv, &v.0[1] * &inv);
            Ok(cm.morphism.points[cm.source.point_index(&q).expect("affine point")])
        })
        .collect::<Result<Vec<_>, GeoError>>()?;
    let lines = ds
        .line_parent
        .iter()
        .map(|&li| {
            let l = AffLine::new(source.lines[li].clone())?;
            Ok(cm.morphism.lines[cm.source.line_index(&l).expect("affine line")])
        })
        .collect::<Result<Vec<_>, GeoError>>()?;
    let phi = PlaneMorphism::new(
        PlaneKind::Affine,
        (ds.plane.n_points(), ds.plane.n_lines()),
        (d.plane.n_points(), d.plane.n_lines()),
        points,
        lines,
    )?;
    let morphism = extend_affine_to_projective(&ds, &d, &phi)?;
    let std = Frame4::standard(&ctx);
    for (p, want) in std.points().into_iter().zip(frame) {
        let got = morphism.points[source.point_index(p).expect("standard point")];
        if got != want {
            return Err(GeoError::Construction(format!("ψ sends {p} to point {got}, expected {want}")));
        }
    }
    let report = verify_morphism(&source.plane, plane, &morphism)?;
    Ok(ProjCoordinatization { tp, source, morphism, report })
}

/// Outcome of a torsor check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsorReport {
    pub set_size: usize,
    pub group_size: usize,
    /// The identity fixes every element.
    pub identity_ok: bool,
    /// Every image lies in the set.
    pub closed: bool,
    /// The action law holds on every checked pair.
    pub compatible: bool,
    /// Pairs of group elements checked for the action law.
    pub pairs_checked: usize,
    /// The orbit of the base element is the whole set.
    pub transitive: bool,
    /// Every stabilizer is trivial.
    pub free: bool,
}

impl TorsorReport {
    pub fn passed(&self) -> bool {
        self.set_size == self.group_size
            && self.identity_ok
            && self.closed
            && self.compatible
            && self.transitive
            && self.free
    }
}

/// Group pairs checked exhaustively up to this many, else sampled.
const PAIR_LIMIT: usize = 250_000;
const PAIR_SAMPLES: usize = 20_000;

fn pair_list(k: usize) -> Vec<(usize, usize)> {
    if k * k <= PAIR_LIMIT {
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..PAIR_SAMPLES).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k))).collect()
    }
}

/// Generic torsor check. `act(g, x)` returns the image index in `set` or
/// `None` when it falls outside; `prod(g, h)` is the index of the product
/// whose action equals acting by `g` then `h` (`left = false`) or by `h`
/// then `g` (`left = true`).
fn torsor_check<A, P>(set_size: usize, group_size: usize, identity: usize, left: bool, act: A, prod: P) -> TorsorReport
where
    A: Fn(usize, usize) -> Option<usize> + Sync,
    P: Fn(usize, usize) -> usize,
{
    use rayon::prelude::*;
    let table: Vec<Option<usize>> =
        (0..group_size).into_par_iter().flat_map_iter(|g| (0..set_size).map(move |x| (g, x))).map(|(g, x)| act(g, x)).collect();
    let at = |g: usize, x: usize| table[g * set_size + x];
    let closed = table.iter().all(|x| x.is_some());
    let identity_ok = (0..set_size).all(|x| at(identity, x) == Some(x));
    let pairs = pair_list(group_size);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let compatible = closed
        && set_size > 0
        && pairs.iter().all(|&(g, h)| {
            let gh = prod(g, h);
            [0, rng.gen_range(0..set_size)].iter().all(|&x| {
                let two = if left { at(h, x).and_then(|y| at(g, y)) } else { at(g, x).and_then(|y| at(h, y)) };
                at(gh, x) == two
            })
        });
    let mut seen = vec![false; set_size];
    let mut hits = 0;
    for g in 0..group_size {
        if let Some(y) = at(g, 0) {
            if !std::mem::replace(&mut seen[y], true) {
                hits += 1;
            }
        }
    }
    let transitive = set_size > 0 && hits == set_size;
    let free = closed && (0..set_size).all(|x| (0..group_size).filter(|&g| at(g, x) == Some(x)).count() == 1);
    TorsorReport {
        set_size,
        group_size,
        identity_ok,
        closed,
        compatible,
        pairs_checked: pairs.len(),
        transitive,
        free,
    }
}

/// Ordered non-collinear triples of a plane, in lexicographic order.
pub fn omega(p: &SyntheticPlane) -> Vec<[usize; 3]> {
    let n = p.n_points();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if non_collinear(p, a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Quadruples in general position, in lexicographic order.
pub fn omega4(p: &SyntheticPlane) -> Vec<[usize; 4]> {
    let n = p.n_points();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !p.pt_apart(a, b) {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    if general_position(p, [a, b, c, d]) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn index_of<T: std::hash::Hash + Eq + Clone>(xs: &[T]) -> HashMap<T, usize> {
    xs.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect()
}

/// `ω(R)` as a left `G(R)`-torsor, with base triple `((1,0),(0,1),(0,0))`.
pub fn torsor_verify_left(ctx: &RingContext) -> Result<TorsorReport, GeoError> {
    let plane = AffineRingPlane::new(ctx)?;
    let mut om = omega(&plane.plane);
    let base = [[1, 0], [0, 1], [0, 0]].map(|v| plane.point_index(&AffPoint::from_ints(ctx, v)).expect("point"));
    let bpos = om.iter().position(|t| *t == base).ok_or_else(|| missing("standard triple is collinear"))?;
    om.swap(0, bpos);
    let om_ix = index_of(&om);
    let group = enumerate_g(ctx)?;
    let g_ix = index_of(&group);
    let perms: Vec<Vec<usize>> =
        group.iter().map(|g| auto_from_g(&plane, g).map(|m| m.points)).collect::<Result<_, _>>()?;
    let id = g_ix[&AffMatrix::identity(ctx)];
    let act = |g: usize, x: usize| om_ix.get(&om[x].map(|p| perms[g][p])).copied();
    let prod = |g: usize, h: usize| g_ix[&g_mul(&group[g], &group[h])];
    Ok(torsor_check(om.len(), group.len(), id, true, act, prod))
}

/// `ω` of a finite affine plane as a right `G(Tp)`-torsor, acting by
/// `(A,B,C)·g = (τ_CA^{α₀+γ₀} τ_CB^{α₁+γ₁}(C), τ_CA^{β₀+γ₀} τ_CB^{β₁+γ₁}(C), τ_CA^{γ₀} τ_CB^{γ₁}(C))`
/// where `α, β, γ` are the columns of `g`.
pub fn torsor_verify_right(plane: &SyntheticPlane) -> Result<TorsorReport, GeoError> {
    let tp = build_tp_ring(plane)?;
    let om = omega(plane);
    let om_ix = index_of(&om);
    let group = enumerate_g(tp.ctx())?;
    let g_ix = index_of(&group);
    let cols: Vec<[[u32; 2]; 3]> = group
        .iter()
        .map(|g| {
            let e = |i: usize, j: usize| g.matrix().entry(i, j).index().expect("finite") as u32;
            [[e(0, 0), e(1, 0)], [e(0, 1), e(1, 1)], [e(0, 2), e(1, 2)]]
        })
        .collect();
    let t = tp.table();
    let s = tp.structure();
    let id = g_ix[&AffMatrix::identity(tp.ctx())];
    let act = |g: usize, x: usize| {
        let [a, b, c] = om[x];
        let (u, w) = (s.trans(c, a, 0), s.trans(c, b, 0));
        let img = |p: u32, q: u32| s.trans(0, s.trans(0, tp.act(p, u), tp.act(q, w)), c);
        let [al, be, ga] = cols[g];
        let t3 = [
            img(t.add(al[0], ga[0]), t.add(al[1], ga[1])),
            img(t.add(be[0], ga[0]), t.add(be[1], ga[1])),
            img(ga[0], ga[1]),
        ];
        om_ix.get(&t3).copied()
    };
    let prod = |g: usize, h: usize| g_ix[&g_mul(&group[g], &group[h])];
    Ok(torsor_check(om.len(), group.len(), id, false, act, prod))
}

/// `ω₄(R)` as an `H(R)`-torsor under `h·(A,B,C,D) = (hA,hB,hC,hD)`; the base
/// is the standard frame, and [`projective::frame_to_h`] must invert the
/// orbit map.
pub fn torsor_verify_h(ctx: &RingContext) -> Result<TorsorReport, GeoError> {
    let plane = RingPlane::new(ctx)?;
    let mut om = omega4(&plane.plane);
    let std = Frame4::standard(ctx);
    let base = std.points().map(|p| plane.point_index(p).expect("point"));
    let bpos = om.iter().position(|t| *t == base).ok_or_else(|| missing("standard frame not in general position"))?;
    om.swap(0, bpos);
    let om_ix = index_of(&om);
    let group = enumerate_h(ctx)?;
    let h_ix = index_of(&group);
    let perms: Vec<Vec<usize>> =
        group.iter().map(|h| auto_from_h(&plane, h).map(|m| m.points)).collect::<Result<_, _>>()?;
    let id = h_ix[&ProjClassMatrix::identity(ctx)];
    let act = |h: usize, x: usize| om_ix.get(&om[x].map(|p| perms[h][p])).copied();
    let prod = |g: usize, h: usize| h_ix[&h_mul(&group[g], &group[h])];
    let mut r = torsor_check(om.len(), group.len(), id, true, act, prod);
    for q in &om {
        let f = Frame4 {
            a: plane.points[q[0]].clone(),
            b: plane.points[q[1]].clone(),
            c: plane.points[q[2]].clone(),
            d: plane.points[q[3]].clone(),
        };
        let ok = projective::frame_to_h(&f).ok().and_then(|h| h_ix.get(&h).copied()).is_some_and(|h| base.map(|p| perms[h][p]) == *q);
        if !ok {
            r.transitive = false;
            break;
        }
    }
    Ok(r)
}
