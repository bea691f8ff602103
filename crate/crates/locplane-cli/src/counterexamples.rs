//! The regression suite of known counterexamples over `Z/4`, `Z/6` and `Q`.
//!
//! Each item rebuilds its data from integers and re-checks every stated fact;
//! any difference is reported as drift.

use locplane::affine::{aff_apart, aff_meet, parallel, AffLine, AffPoint};
use locplane::linalg::{Mat3, Vec3};
use locplane::projective::{
    self, apply_matrix, desargues_check, frame_to_h, meet, DesarguesConfig, Frame4, ProjLine, ProjPoint, RingProjective,
};
use locplane::ring::{LocalityReport, RingContext};
use locplane::synthetic::Verdict;
use locplane::GeoError;

/// Outcome of one counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub id: &'static str,
    pub reproduced: bool,
    pub detail: String,
}

impl Finding {
    /// `COUNTEREXAMPLE <id> REPRODUCED|DRIFT <detail>`.
    pub fn line(&self) -> String {
        let status = if self.reproduced { "REPRODUCED" } else { "DRIFT" };
        format!("COUNTEREXAMPLE {} {} {}", self.id, status, self.detail)
    }
}

type Check = Result<(bool, String), GeoError>;
type Item = (&'static str, fn() -> Check);

fn zm(n: u64) -> RingContext {
    RingContext::zmod(n).expect("n >= 2")
}
fn pt(ctx: &RingContext, v: [i64; 3]) -> Result<ProjPoint, GeoError> {
    ProjPoint::from_ints(ctx, v)
}
fn ln(ctx: &RingContext, v: [i64; 3]) -> Result<ProjLine, GeoError> {
    ProjLine::from_ints(ctx, v)
}

/// Two distinct points on two distinct lines over `Z/4`.
fn z4_two_lines() -> Check {
    let z = zm(4);
    let (a, b) = (pt(&z, [2, 2, 1])?, pt(&z, [2, 0, 1])?);
    let (l, m) = (ln(&z, [1, 0, 2])?, ln(&z, [1, 2, 2])?);
    let all_on = [&l, &m].iter().all(|k| projective::incident(&a, k) && projective::incident(&b, k));
    let ok = all_on && a != b && l != m && !projective::pt_apart(&a, &b) && !projective::li_apart(&l, &m);
    Ok((ok, format!("A={a} B={b} on l={l} and m={m}, A!=B, l!=m, neither pair apart")))
}

/// A point apart from a point on `l` that is neither on nor outside `l`.
fn z4_neither_on_nor_outside() -> Check {
    let z = zm(4);
    let (a, b, l) = (pt(&z, [1, 0, 0])?, pt(&z, [0, 2, 1])?, ln(&z, [0, 1, 0])?);
    let ok = projective::incident(&a, &l)
        && projective::pt_apart(&a, &b)
        && !projective::incident(&b, &l)
        && !projective::outside(&b, &l);
    Ok((ok, format!("A={a} on l={l}, B={b} # A, B neither on nor outside l")))
}

fn z6_locality() -> Check {
    let z = zm(6);
    let ok = match z.check_local()? {
        LocalityReport::NotLocal(x, y) => x == z.int(3) && y == z.int(2) && (&x + &y).is_invertible(),
        _ => false,
    };
    Ok((ok, "3+2 invertible in Z/6, 3 and 2 are not".into()))
}

/// The frame matrix over `Z/6` does not act on `(3,1,2)`.
fn z6_frame() -> Check {
    let z = zm(6);
    let f = Frame4 { a: pt(&z, [1, 0, 0])?, b: pt(&z, [3, -1, 0])?, c: pt(&z, [3, 2, 1])?, d: pt(&z, [1, 1, 1])? };
    let m = Mat3::from_ints(&z, [[1, 3, 3], [0, -1, 2], [0, 0, 1]]);
    let img = m.mul_vec(&Vec3::from_ints(&z, [3, 1, 2]));
    let rejected = matches!(frame_to_h(&f), Err(GeoError::NotAnAction { ref matrix, .. }) if *matrix == m.to_string());
    let ok = rejected && img == Vec3::from_ints(&z, [0, 3, 2]) && apply_matrix(&m, &pt(&z, [3, 1, 2])?).is_err();
    Ok((ok, format!("frame matrix {m} sends (3,1,2) to {img}, not a point")))
}

/// An invertible matrix over `Z/6` sending `(1,0,0)` off the plane.
fn z6_matrix() -> Check {
    let z = zm(6);
    let m = Mat3::from_ints(&z, [[3, 0, 1], [0, 1, 0], [2, 0, 1]]);
    let img = m.mul_vec(&Vec3::from_ints(&z, [1, 0, 0]));
    let ok = m.det().is_invertible() && img == Vec3::from_ints(&z, [3, 0, 2]) && !img.is_unimodular();
    Ok((ok, format!("det {} invertible, (1,0,0) goes to {img}", m.det())))
}

/// Every Desargues condition holds over `Q` except that `B` lies on `k,l,m`.
fn q_desargues() -> Check {
    let q = RingContext::rational();
    let g = RingProjective::new(&q)?;
    let cfg = DesarguesConfig {
        a: pt(&q, [1, 0, 1])?,
        b: pt(&q, [0, 0, 1])?,
        c: pt(&q, [0, 1, 1])?,
        d: pt(&q, [1, 1, 1])?,
        k: ln(&q, [1, -2, 0])?,
        l: ln(&q, [2, 1, 0])?,
        m: ln(&q, [-2, 1, 0])?,
        n: ln(&q, [2, 2, -3])?,
    };
    let on_all = [&cfg.k, &cfg.l, &cfg.m].iter().all(|k| projective::incident(&cfg.b, k));
    let verdict = desargues_check(&g, &cfg)?;
    let concl = projective::delta_det(&cfg.l, &cfg.n, &cfg.a, &cfg.c)?;
    let ok = on_all && verdict == Verdict::PremisesFail("B outside one of k,l,m".into()) && !concl;
    Ok((ok, "B on k, l and m; conclusion δ(l,n,A,C) false".into()))
}

/// Apart, non-parallel affine lines over `Z/4` with no common affine point.
fn z4_affine_lines() -> Check {
    let z = zm(4);
    let (k, l) = (AffLine::from_ints(&z, [1, 0, 2])?, AffLine::from_ints(&z, [1, 2, 1])?);
    let pm = meet(k.proj(), l.proj())?;
    let common = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).any(|(x, y)| {
        let p = AffPoint::from_ints(&z, [x, y]).to_proj();
        projective::incident(&p, k.proj()) && projective::incident(&p, l.proj())
    });
    let ok = projective::li_apart(k.proj(), l.proj())
        && !parallel(&k, &l)
        && aff_meet(&k, &l).is_none()
        && !common
        && pm == pt(&z, [0, 1, 2])?
        && !aff_apart(&AffPoint::from_ints(&z, [2, 2]), &AffPoint::from_ints(&z, [2, 0]));
    Ok((ok, format!("k={k} l={l} apart, not parallel, no affine meet, projective meet {pm}")))
}

/// Runs all seven items in a fixed order.
pub fn run_all() -> Vec<Finding> {
    let items: [Item; 7] = [
        ("z4-two-points-two-lines", z4_two_lines),
        ("z4-neither-on-nor-outside", z4_neither_on_nor_outside),
        ("z6-locality-witness", z6_locality),
        ("z6-frame-matrix", z6_frame),
        ("z6-matrix-on-100", z6_matrix),
        ("q-desargues-premise", q_desargues),
        ("z4-affine-no-meet", z4_affine_lines),
    ];
    items
        .iter()
        .map(|&(id, f)| match f() {
            Ok((reproduced, detail)) => Finding { id, reproduced, detail },
            Err(e) => Finding { id, reproduced: false, detail: format!("error: {e}") },
        })
        .collect()
}
