//! Morphisms of finite planes: maps induced by ring homomorphisms and
//! matrices, structural verification, decomposition into a group element and
//! a ring homomorphism, and extension from derived affine planes to
//! projective planes.

use std::fmt;

use crate::affine::{AffLine, AffPoint, AffineRingPlane, DerivedAffinePlane};
use crate::linalg::{AffMatrix, Mat3, ProjClassMatrix, Vec3};
use crate::projective::{self, Frame4, ProjLine, ProjPoint, RingPlane};
use crate::ring::{LocalityReport, RingContext, RingError, RingHom};
use crate::synthetic::{PlaneKind, SyntheticPlane};
use crate::GeoError;

/// A map of points and lines between two finite planes, by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneMorphism {
    pub kind: PlaneKind,
    pub source_points: usize,
    pub source_lines: usize,
    pub target_points: usize,
    pub target_lines: usize,
    /// Image of each source point.
    pub points: Vec<usize>,
    /// Image of each source line.
    pub lines: Vec<usize>,
}

impl PlaneMorphism {
    /// Checks that the tables fit the stated carrier sizes.
    pub fn new(
        kind: PlaneKind,
        (source_points, source_lines): (usize, usize),
        (target_points, target_lines): (usize, usize),
        points: Vec<usize>,
        lines: Vec<usize>,
    ) -> Result<Self, GeoError> {
        if points.len() != source_points || lines.len() != source_lines {
            return Err(GeoError::Invalid("map tables do not cover the source".into()));
        }
        if points.iter().any(|&p| p >= target_points) || lines.iter().any(|&l| l >= target_lines) {
            return Err(GeoError::Invalid("map image out of range".into()));
        }
        Ok(PlaneMorphism { kind, source_points, source_lines, target_points, target_lines, points, lines })
    }

    pub fn identity(p: &SyntheticPlane) -> Self {
        PlaneMorphism {
            kind: p.kind(),
            source_points: p.n_points(),
            source_lines: p.n_lines(),
            target_points: p.n_points(),
            target_lines: p.n_lines(),
            points: (0..p.n_points()).collect(),
            lines: (0..p.n_lines()).collect(),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PlaneMorphism) -> Result<PlaneMorphism, GeoError> {
        if inner.target_points != self.source_points || inner.target_lines != self.source_lines {
            return Err(GeoError::Invalid("morphisms are not composable".into()));
        }
        Ok(PlaneMorphism {
            kind: self.kind,
            source_points: inner.source_points,
            source_lines: inner.source_lines,
            target_points: self.target_points,
            target_lines: self.target_lines,
            points: inner.points.iter().map(|&p| self.points[p]).collect(),
            lines: inner.lines.iter().map(|&l| self.lines[l]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        fn perm(xs: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            xs.len() == n && xs.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        }
        perm(&self.points, self.target_points) && perm(&self.lines, self.target_lines)
    }

    /// Inverse tables of a bijection.
    pub fn inverse(&self) -> Option<PlaneMorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut points = vec![0; self.target_points];
        for (i, &p) in self.points.iter().enumerate() {
            points[p] = i;
        }
        let mut lines = vec![0; self.target_lines];
        for (i, &l) in self.lines.iter().enumerate() {
            lines[l] = i;
        }
        Some(PlaneMorphism {
            kind: self.kind,
            source_points: self.target_points,
            source_lines: self.target_lines,
            target_points: self.source_points,
            target_lines: self.source_lines,
            points,
            lines,
        })
    }

    /// Parses the morphism text format.
    pub fn parse(text: &str) -> Result<PlaneMorphism, GeoError> {
        parse_morphism(text)
    }

    /// Renders the morphism text format.
    pub fn serialize(&self) -> String {
        let mut s = format!(
            "morphism {}\nsource_points {}\nsource_lines {}\ntarget_points {}\ntarget_lines {}\n",
            self.kind, self.source_points, self.source_lines, self.target_points, self.target_lines
        );
        for (i, p) in self.points.iter().enumerate() {
            s.push_str(&format!("point {i} {p}\n"));
        }
        for (i, l) in self.lines.iter().enumerate() {
            s.push_str(&format!("line {i} {l}\n"));
        }
        s
    }
}

fn parse_morphism(text: &str) -> Result<PlaneMorphism, GeoError> {
    let err = |n: usize, m: &str| GeoError::Invalid(format!("{m} at line {n}"));
    let mut header: Vec<(String, String)> = Vec::new();
    let mut points: Vec<Option<usize>> = Vec::new();
    let mut lines: Vec<Option<usize>> = Vec::new();
    const KEYS: [&str; 5] = ["morphism", "source_points", "source_lines", "target_points", "target_lines"];
    let mut sizes = [0usize; 4];
    let mut kind = PlaneKind::Projective;
    for (n, raw) in text.lines().enumerate() {
        let n = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if header.len() < KEYS.len() {
            let key = KEYS[header.len()];
            if toks.len() != 2 || toks[0] != key {
                return Err(err(n, &format!("expected `{key}`")));
            }
            if header.is_empty() {
                kind = match toks[1] {
                    "projective" => PlaneKind::Projective,
                    "affine" => PlaneKind::Affine,
                    other => return Err(err(n, &format!("unknown plane kind `{other}`"))),
                };
            } else {
                sizes[header.len() - 1] = toks[1].parse().map_err(|_| err(n, "bad count"))?;
            }
            header.push((key.into(), toks[1].into()));
            if header.len() == KEYS.len() {
                points = vec![None; sizes[0]];
                lines = vec![None; sizes[1]];
            }
            continue;
        }
        if toks.len() != 3 {
            return Err(err(n, "expected `point i j` or `line i j`"));
        }
        let i: usize = toks[1].parse().map_err(|_| err(n, "bad index"))?;
        let j: usize = toks[2].parse().map_err(|_| err(n, "bad index"))?;
        let (table, bound, what) = match toks[0] {
            "point" => (&mut points, sizes[2], "point"),
            "line" => (&mut lines, sizes[3], "line"),
            other => return Err(err(n, &format!("unknown entry `{other}`"))),
        };
        if i >= table.len() || j >= bound {
            return Err(err(n, &format!("{what} index out of range")));
        }
        if table[i].replace(j).is_some() {
            return Err(err(n, &format!("{what} {i} mapped twice")));
        }
    }
    if header.len() < KEYS.len() {
        return Err(GeoError::Invalid("incomplete header".into()));
    }
    let collect = |t: Vec<Option<usize>>, what: &str| {
        t.iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| GeoError::Invalid(format!("{what} {i} has no image"))))
            .collect::<Result<Vec<_>, _>>()
    };
    PlaneMorphism::new(kind, (sizes[0], sizes[1]), (sizes[2], sizes[3]), collect(points, "point")?, collect(lines, "line")?)
}

/// One failed preservation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismFailure {
    pub check: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "{} witness=({})", self.check, w.join(","))
    }
}

/// Outcome of [`verify_morphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    /// First failure of each check, in check order.
    pub failures: Vec<MorphismFailure>,
    pub bijective: bool,
    /// The inverse of a bijection is itself a morphism.
    pub inverse_ok: bool,
}

impl MorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn is_isomorphism(&self) -> bool {
        self.is_morphism() && self.bijective && self.inverse_ok
    }
}

fn morphism_failures(src: &SyntheticPlane, tgt: &SyntheticPlane, m: &PlaneMorphism) -> Vec<MorphismFailure> {
    let (n, k) = (src.n_points(), src.n_lines());
    let (fp, fl) = (&m.points, &m.lines);
    let mut out = Vec::new();
    let mut first = |check: &'static str, w: Option<Vec<usize>>| {
        if let Some(witness) = w {
            out.push(MorphismFailure { check, witness });
        }
    };
    let pairs = |a: usize, b: usize| (0..a).flat_map(move |i| (0..b).map(move |j| (i, j)));
    first(
        "point_apart",
        pairs(n, n).find(|&(a, b)| src.pt_apart(a, b) && !tgt.pt_apart(fp[a], fp[b])).map(|(a, b)| vec![a, b]),
    );
    first(
        "line_apart",
        pairs(k, k).find(|&(a, b)| src.li_apart(a, b) && !tgt.li_apart(fl[a], fl[b])).map(|(a, b)| vec![a, b]),
    );
    first(
        "incident",
        pairs(n, k).find(|&(a, l)| src.incident(a, l) && !tgt.incident(fp[a], fl[l])).map(|(a, l)| vec![a, l]),
    );
    first(
        "outside",
        pairs(n, k).find(|&(a, l)| src.outside(a, l) && !tgt.outside(fp[a], fl[l])).map(|(a, l)| vec![a, l]),
    );
    if src.kind() == PlaneKind::Affine {
        first(
            "parallel",
            pairs(k, k).find(|&(a, b)| src.parallel(a, b) && !tgt.parallel(fl[a], fl[b])).map(|(a, b)| vec![a, b]),
        );
    }
    first(
        "line_determined",
        (0..k).find_map(|l| {
            let pts = src.points_on(l);
            pts.iter().flat_map(|&a| pts.iter().map(move |&b| (a as usize, b as usize))).find_map(|(a, b)| {
                (src.pt_apart(a, b) && tgt.join(fp[a], fp[b]) != Some(fl[l])).then(|| vec![l, a, b])
            })
        }),
    );
    out
}

/// Checks preservation of both apartness relations, incidence, outsideness,
/// parallelism (affine) and that every line goes to the join of the images
/// of any two apart points on it. Bijections are also checked for an inverse
/// morphism.
pub fn verify_morphism(src: &SyntheticPlane, tgt: &SyntheticPlane, m: &PlaneMorphism) -> Result<MorphismReport, GeoError> {
    if m.source_points != src.n_points()
        || m.source_lines != src.n_lines()
        || m.target_points != tgt.n_points()
        || m.target_lines != tgt.n_lines()
    {
        return Err(GeoError::Invalid("morphism does not match the planes".into()));
    }
    let failures = morphism_failures(src, tgt, m);
    let inv = m.inverse();
    let bijective = inv.is_some();
    let inverse_ok = inv.is_some_and(|i| morphism_failures(tgt, src, &i).is_empty());
    Ok(MorphismReport { failures, bijective, inverse_ok })
}

fn map_vec(f: &RingHom, v: &Vec3) -> Result<Vec3, GeoError> {
    Ok(Vec3([f.apply(&v.0[0])?, f.apply(&v.0[1])?, f.apply(&v.0[2])?]))
}

/// Applies a ring homomorphism entrywise to a matrix.
pub fn map_matrix(f: &RingHom, m: &Mat3) -> Result<Mat3, GeoError> {
    let mut rows = m.0.clone();
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x = f.apply(x)?;
        }
    }
    Ok(Mat3(rows))
}

fn lookup<T>(x: Option<usize>, what: &str, v: &T) -> Result<usize, GeoError>
where
    T: fmt::Display,
{
    x.ok_or_else(|| GeoError::Construction(format!("{what} {v} is not in the target plane")))
}

/// `ℙ(f)` between enumerated projective planes.
pub fn proj_from_ring_hom(src: &RingPlane, tgt: &RingPlane, f: &RingHom) -> Result<PlaneMorphism, GeoError> {
    let points = src
        .points
        .iter()
        .map(|p| {
            let v = map_vec(f, p.coords())?;
            lookup(tgt.vec_index(&v), "point", &v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lines = src
        .lines
        .iter()
        .map(|l| {
            let v = map_vec(f, l.coords())?;
            lookup(tgt.vec_index(&v), "line", &v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    PlaneMorphism::new(PlaneKind::Projective, (points.len(), lines.len()), (tgt.points.len(), tgt.lines.len()), points, lines)
}

/// `𝔸(f)` between enumerated affine planes.
pub fn aff_from_ring_hom(src: &AffineRingPlane, tgt: &AffineRingPlane, f: &RingHom) -> Result<PlaneMorphism, GeoError> {
    let points = src
        .points
        .iter()
        .map(|p| {
            let q = AffPoint(f.apply(&p.0)?, f.apply(&p.1)?);
            lookup(tgt.point_index(&q), "point", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lines = src
        .lines
        .iter()
        .map(|l| {
            let q = AffLine::new(ProjLine::new(map_vec(f, l.proj().coords())?)?)?;
            lookup(tgt.line_index(&q), "line", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    PlaneMorphism::new(PlaneKind::Affine, (points.len(), lines.len()), (tgt.points.len(), tgt.lines.len()), points, lines)
}

/// Morphism induced by a ring homomorphism, building both planes.
pub fn from_ring_hom(f: &RingHom, kind: PlaneKind) -> Result<PlaneMorphism, GeoError> {
    match kind {
        PlaneKind::Projective => proj_from_ring_hom(&RingPlane::new(f.source())?, &RingPlane::new(f.target())?, f),
        PlaneKind::Affine => {
            aff_from_ring_hom(&AffineRingPlane::new(f.source())?, &AffineRingPlane::new(f.target())?, f)
        }
    }
}

/// Automorphism of `ℙ(R)` given by an element of `H(R)`: points by `M`,
/// lines by `(M⁻¹)ᵀ`. Fails on the first point whose image has no
/// invertible coordinate.
pub fn auto_from_h(plane: &RingPlane, h: &ProjClassMatrix) -> Result<PlaneMorphism, GeoError> {
    let points = plane
        .points
        .iter()
        .map(|p| {
            let q = projective::apply_h(h, p)?;
            lookup(plane.point_index(&q), "point", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lines = plane
        .lines
        .iter()
        .map(|l| {
            let q = projective::apply_h_line(h, l)?;
            lookup(plane.line_index(&q), "line", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = (plane.points.len(), plane.lines.len());
    PlaneMorphism::new(PlaneKind::Projective, n, n, points, lines)
}

/// Automorphism of `𝔸(R)` given by an element of `G(R)`.
pub fn auto_from_g(plane: &AffineRingPlane, g: &AffMatrix) -> Result<PlaneMorphism, GeoError> {
    let points = plane
        .points
        .iter()
        .map(|p| {
            let (x, y) = g.apply(&p.0, &p.1);
            let q = AffPoint(x, y);
            lookup(plane.point_index(&q), "point", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let t = g.matrix().inverse()?.transpose();
    let lines = plane
        .lines
        .iter()
        .map(|l| {
            let q = AffLine::new(ProjLine::new(t.mul_vec(l.proj().coords()))?)?;
            lookup(plane.line_index(&q), "line", &q)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = (plane.points.len(), plane.lines.len());
    PlaneMorphism::new(PlaneKind::Affine, n, n, points, lines)
}

fn require_local(plane_ctx: &RingContext) -> Result<(), GeoError> {
    match plane_ctx.check_local()? {
        LocalityReport::Local => Ok(()),
        _ => Err(RingError::Unsupported(format!("decomposition needs a local target ring, {plane_ctx} is not local")).into()),
    }
}

/// Writes a morphism `ℙ(R) → ℙ(S)` as `h ∘ ℙ(f)` with `h ∈ H(S)`.
pub fn decompose_proj(src: &RingPlane, tgt: &RingPlane, m: &PlaneMorphism) -> Result<(ProjClassMatrix, RingHom), GeoError> {
    require_local(&tgt.ctx)?;
    let (r, s) = (&src.ctx, &tgt.ctx);
    let img = |v: [i64; 3]| -> Result<ProjPoint, GeoError> {
        let p = ProjPoint::from_ints(r, v)?;
        let i = src.point_index(&p).expect("standard point");
        Ok(tgt.points[m.points[i]].clone())
    };
    let frame = Frame4 { a: img([1, 0, 0])?, b: img([0, 1, 0])?, c: img([0, 0, 1])?, d: img([1, 1, 1])? };
    let h = projective::frame_to_h(&frame)?;
    let hinv = h.matrix().inverse()?;
    let mut images = Vec::new();
    for a in r.enumerate()? {
        let p = ProjPoint::new(Vec3([a.clone(), r.zero(), r.one()]))?;
        let q = &tgt.points[m.points[src.point_index(&p).expect("enumerated")]];
        let v = hinv.mul_vec(q.coords());
        let inv = v.0[2]
            .try_inverse()
            .filter(|_| v.0[1].is_zero())
            .ok_or_else(|| GeoError::Invalid(format!("image of ({a},0,1) is not of the form (s,0,1)")))?;
        images.push(&v.0[0] * &inv);
    }
    let f = RingHom::new(r.clone(), s.clone(), images)?;
    let re = auto_from_h(tgt, &h)?.compose(&proj_from_ring_hom(src, tgt, &f)?)?;
    if re != *m {
        return Err(GeoError::Invalid("recomposition differs from the morphism".into()));
    }
    Ok((h, f))
}

/// Writes a morphism `𝔸(R) → 𝔸(S)` as `g ∘ 𝔸(f)` with `g ∈ G(S)`.
pub fn decompose_aff(
    src: &AffineRingPlane,
    tgt: &AffineRingPlane,
    m: &PlaneMorphism,
) -> Result<(AffMatrix, RingHom), GeoError> {
    require_local(&tgt.ctx)?;
    let (r, s) = (&src.ctx, &tgt.ctx);
    let img = |a: [i64; 2]| {
        let i = src.point_index(&AffPoint::from_ints(r, a)).expect("enumerated");
        tgt.points[m.points[i]].clone()
    };
    let (a, b, c) = (img([1, 0]), img([0, 1]), img([0, 0]));
    let mat = Mat3([
        [&a.0 - &c.0, &b.0 - &c.0, c.0.clone()],
        [&a.1 - &c.1, &b.1 - &c.1, c.1.clone()],
        [s.zero(), s.zero(), s.one()],
    ]);
    let g = AffMatrix::new(mat).map_err(|e| GeoError::Invalid(format!("images of the standard triple: {e}")))?;
    let ginv = g.matrix().inverse()?;
    let mut images = Vec::new();
    for x in r.enumerate()? {
        let q = &tgt.points[m.points[src.point_index(&AffPoint(x.clone(), r.zero())).expect("enumerated")]];
        let v = ginv.mul_vec(&Vec3([q.0.clone(), q.1.clone(), s.one()]));
        if !v.0[1].is_zero() {
            return Err(GeoError::Invalid(format!("image of ({x},0) is off the first axis")));
        }
        images.push(v.0[0].clone());
    }
    let f = RingHom::new(r.clone(), s.clone(), images)?;
    let re = auto_from_g(tgt, &g)?.compose(&aff_from_ring_hom(src, tgt, &f)?)?;
    if re != *m {
        return Err(GeoError::Invalid("recomposition differs from the morphism".into()));
    }
    Ok((g, f))
}

/// Extends an affine morphism `𝔄(P, k∞) → 𝔄(Q, l∞)` to `P → Q`. A point not
/// outside `k∞` goes to the meet of the images of the first two lines through
/// it that are apart from each other and from `k∞`; a line not apart from
/// `k∞` goes to the join of the images of its first two apart points.
pub fn extend_affine_to_projective(
    src: &DerivedAffinePlane,
    tgt: &DerivedAffinePlane,
    phi: &PlaneMorphism,
) -> Result<PlaneMorphism, GeoError> {
    let (p, q) = (&src.parent, &tgt.parent);
    if phi.source_points != src.plane.n_points() || phi.target_points != tgt.plane.n_points() {
        return Err(GeoError::Invalid("affine morphism does not match the derived planes".into()));
    }
    let line_img = |l: usize| phi.lines.get(src.line_of_parent(l)?).map(|&j| tgt.line_parent[j]);
    let mut lines = vec![0; p.n_lines()];
    lines[src.l_inf] = tgt.l_inf;
    for (i, &l) in src.line_parent.iter().enumerate() {
        lines[l] = tgt.line_parent[phi.lines[i]];
    }
    let mut points = vec![0; p.n_points()];
    for a in 0..p.n_points() {
        if let Some(i) = src.point_of_parent(a) {
            points[a] = tgt.point_parent[phi.points[i]];
            continue;
        }
        let cands: Vec<usize> =
            p.lines_through(a).iter().map(|&l| l as usize).filter(|&l| p.li_apart(l, src.l_inf)).collect();
        let pair = cands.iter().find_map(|&k| cands.iter().find(|&&l| p.li_apart(k, l)).map(|&l| (k, l)));
        let (k, l) = pair.ok_or_else(|| GeoError::Construction(format!("no two apart lines through point {a}")))?;
        let (fk, fl) = (line_img(k).expect("affine line"), line_img(l).expect("affine line"));
        points[a] = q
            .meet(fk, fl)
            .ok_or_else(|| GeoError::Construction(format!("images of lines {k} and {l} do not meet")))?;
    }
    for l in 0..p.n_lines() {
        if l == src.l_inf || src.line_of_parent(l).is_some() {
            continue;
        }
        let pts = p.points_on(l);
        let pair = pts.iter().find_map(|&a| pts.iter().find(|&&b| p.pt_apart(a as usize, b as usize)).map(|&b| (a, b)));
        let (a, b) = pair.ok_or_else(|| GeoError::Construction(format!("line {l} has no two apart points")))?;
        lines[l] = q
            .join(points[a as usize], points[b as usize])
            .ok_or_else(|| GeoError::Construction(format!("images of points on line {l} have no join")))?;
    }
    PlaneMorphism::new(PlaneKind::Projective, (p.n_points(), p.n_lines()), (q.n_points(), q.n_lines()), points, lines)
}

/// Restriction of a projective morphism sending `k∞` to `l∞` to the derived
/// affine planes.
pub fn restrict_to_affine(
    src: &DerivedAffinePlane,
    tgt: &DerivedAffinePlane,
    psi: &PlaneMorphism,
) -> Result<PlaneMorphism, GeoError> {
    if psi.lines.get(src.l_inf) != Some(&tgt.l_inf) {
        return Err(GeoError::Precondition("the morphism does not send k∞ to l∞".into()));
    }
    let points = src
        .point_parent
        .iter()
        .map(|&a| tgt.point_of_parent(psi.points[a]).ok_or_else(|| GeoError::Precondition(format!("point {a} lands on l∞"))))
        .collect::<Result<Vec<_>, _>>()?;
    let lines = src
        .line_parent
        .iter()
        .map(|&l| tgt.line_of_parent(psi.lines[l]).ok_or_else(|| GeoError::Precondition(format!("line {l} is not sent apart from l∞"))))
        .collect::<Result<Vec<_>, _>>()?;
    PlaneMorphism::new(
        PlaneKind::Affine,
        (src.plane.n_points(), src.plane.n_lines()),
        (tgt.plane.n_points(), tgt.plane.n_lines()),
        points,
        lines,
    )
}
