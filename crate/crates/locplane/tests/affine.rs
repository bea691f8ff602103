//! The affine plane over a ring, the derived plane of a projective plane with
//! a line at infinity, and the affine configuration theorems.

// Relation tables are indexed in parallel by point and line number.
#![allow(clippy::needless_range_loop)]

use locplane::affine::*;
use locplane::linalg::Vec3;
use locplane::projective::{self, ProjLine, RingPlane};
use locplane::ring::*;
use locplane::synthetic::*;
use proptest::prelude::*;

fn zm(n: u64) -> RingContext {
    RingContext::zmod(n).unwrap()
}
fn ap(ctx: &RingContext, a: [i64; 2]) -> AffPoint {
    AffPoint::from_ints(ctx, a)
}
fn al(ctx: &RingContext, v: [i64; 3]) -> AffLine {
    AffLine::from_ints(ctx, v).unwrap()
}

/// Compares two synthetic affine planes under given point and line maps.
fn same_relations(a: &SyntheticPlane, b: &SyntheticPlane, pm: &[usize], lm: &[usize]) -> Result<(), String> {
    for i in 0..a.n_points() {
        for j in 0..a.n_points() {
            if a.pt_apart(i, j) != b.pt_apart(pm[i], pm[j]) {
                return Err(format!("apart {i} {j}"));
            }
        }
        for l in 0..a.n_lines() {
            if a.incident(i, l) != b.incident(pm[i], lm[l]) || a.outside(i, l) != b.outside(pm[i], lm[l]) {
                return Err(format!("incidence {i} {l}"));
            }
        }
    }
    for k in 0..a.n_lines() {
        for l in 0..a.n_lines() {
            if a.li_apart(k, l) != b.li_apart(lm[k], lm[l]) || a.parallel(k, l) != b.parallel(lm[k], lm[l]) {
                return Err(format!("lines {k} {l}"));
            }
        }
    }
    Ok(())
}

#[test]
fn point_and_line_examples() {
    let z4 = zm(4);
    assert!(!aff_apart(&ap(&z4, [2, 2]), &ap(&z4, [2, 0])));
    for n in [2, 3, 4, 5] {
        let c = zm(n);
        assert!(aff_apart(&ap(&c, [0, 0]), &ap(&c, [1, 0])));
    }
    assert!(!parallel(&al(&z4, [1, 0, 2]), &al(&z4, [1, 2, 1])));
    let k = al(&z4, [1, 3, 2]);
    assert!(parallel(&k, &k));
    assert!(parallel(&al(&z4, [0, 1, 0]), &al(&z4, [0, 1, 3])));
    assert!(AffLine::from_ints(&z4, [0, 0, 1]).is_err());
    assert!(AffLine::from_ints(&z4, [2, 2, 1]).is_err());
}

#[test]
fn construction_examples() {
    let z4 = zm(4);
    assert_eq!(parallel_through(&ap(&z4, [0, 0]), &al(&z4, [0, 1, 3])), al(&z4, [0, 1, 0]));
    assert_eq!(aff_meet(&al(&z4, [1, 0, 2]), &al(&z4, [1, 2, 1])), None);
    assert_eq!(aff_meet(&al(&z4, [1, 0, 0]), &al(&z4, [0, 1, 0])), Some(ap(&z4, [0, 0])));
    let q = RingContext::rational();
    let l = aff_line_through(&AffPoint::new(q.int(0), q.int(0)).unwrap(), &AffPoint::new(q.int(1), q.int(2)).unwrap());
    assert_eq!(l.unwrap(), al(&q, [2, -1, 0]));
    assert!(aff_line_through(&ap(&z4, [2, 2]), &ap(&z4, [2, 0])).is_err());
}

#[test]
fn apartness_matches_projective_embedding() {
    let z4 = zm(4);
    let pts = AffineRingPlane::new(&z4).unwrap().points;
    for a in &pts {
        for b in &pts {
            assert_eq!(aff_apart(a, b), projective::pt_apart(&a.to_proj(), &b.to_proj()));
        }
    }
}

#[test]
fn plane_counts() {
    let a2 = AffineRingPlane::new(&zm(2)).unwrap();
    assert_eq!((a2.points.len(), a2.lines.len()), (4, 6));
    let a4 = AffineRingPlane::new(&zm(4)).unwrap();
    assert_eq!((a4.points.len(), a4.lines.len()), (16, 24));
    let p2 = projective::export_plane(&zm(2)).unwrap();
    for l in 0..p2.n_lines() {
        let d = derive_affine(&p2, l).unwrap();
        assert_eq!((d.plane.n_points(), d.plane.n_lines()), (4, 6));
        for q in 0..p2.n_points() {
            assert_eq!(d.point_of_parent(q).is_none(), p2.incident(q, l));
        }
    }
    assert!(derive_affine(&p2, 7).is_err());
    assert!(derive_affine(&export_affine(&zm(2)).unwrap(), 0).is_err());
}

#[test]
fn derived_plane_is_isomorphic_to_ring_plane() {
    for ctx in [zm(2), zm(3), zm(4), RingContext::dual(2).unwrap()] {
        let rp = RingPlane::new(&ctx).unwrap();
        let inf = rp.line_index(&ProjLine::from_ints(&ctx, [0, 0, 1]).unwrap()).unwrap();
        let d = derive_affine(&rp.plane, inf).unwrap();
        let a = AffineRingPlane::new(&ctx).unwrap();
        let pm: Vec<usize> = a
            .points
            .iter()
            .map(|p| {
                let v = Vec3([p.0.clone(), p.1.clone(), ctx.one()]);
                d.point_of_parent(rp.vec_index(&v).unwrap()).unwrap()
            })
            .collect();
        let lm: Vec<usize> = a.lines.iter().map(|l| d.line_of_parent(rp.line_index(l.proj()).unwrap()).unwrap()).collect();
        same_relations(&a.plane, &d.plane, &pm, &lm).unwrap_or_else(|e| panic!("{ctx}: {e}"));
        assert_eq!(d.plane.n_points(), a.points.len());
        assert_eq!(d.plane.n_lines(), a.lines.len());
    }
}

#[test]
fn parallel_criteria_agree() {
    // Determinant criterion versus equal meets with the line at infinity.
    let ctx = zm(4);
    let a = AffineRingPlane::new(&ctx).unwrap();
    let inf = ProjLine::from_ints(&ctx, [0, 0, 1]).unwrap();
    for k in &a.lines {
        for l in &a.lines {
            let mk = projective::meet(k.proj(), &inf).unwrap();
            let ml = projective::meet(l.proj(), &inf).unwrap();
            assert_eq!(parallel(k, l), mk == ml);
        }
    }
}

#[test]
fn parallel_properties() {
    for ctx in [zm(3), zm(4)] {
        let a = AffineRingPlane::new(&ctx).unwrap();
        for p in &a.points {
            for k in &a.lines {
                let through: Vec<_> = a.lines.iter().filter(|l| aff_incident(p, l) && parallel(k, l)).collect();
                assert_eq!(through, vec![&parallel_through(p, k)]);
            }
        }
        for k in &a.lines {
            for l in &a.lines {
                if parallel(k, l) && aff_li_apart(k, l) {
                    assert!(a.points.iter().all(|p| aff_outside(p, k) || aff_outside(p, l)));
                }
                if let Some(x) = aff_meet(k, l) {
                    assert!(aff_incident(&x, k) && aff_incident(&x, l));
                    assert!(!parallel(k, l) || k == l);
                }
            }
        }
    }
}

#[test]
fn suites() {
    let opts = VerifyOptions::default();
    for ctx in [zm(2), zm(3), zm(4), RingContext::dual(2).unwrap()] {
        let r = export_affine(&ctx).unwrap().verify(&opts);
        assert!(r.all_passed(), "{ctx}: {:?}", r.lines());
        for t in ["desargues_small", "desargues_big", "pappus"] {
            let x = r.get(t).unwrap();
            assert_eq!(x.mode, Mode::Exhaustive, "{ctx} {t}");
            assert!(x.checked > 0, "{ctx} {t}");
        }
    }
}

#[test]
fn z6_fails_cotransitivity() {
    let r = export_affine(&zm(6)).unwrap().verify(&VerifyOptions { skip_theorems: true, ..Default::default() });
    assert!(!r.get("pt_cotransitive").unwrap().passed);
    assert!(r.get("pt_cotransitive").unwrap().witness.is_some());
}

#[test]
fn desargues_small_translated_triangle() {
    let z5 = zm(5);
    let g = RingAffine;
    let (a, b, c) = (ap(&z5, [0, 0]), ap(&z5, [1, 0]), ap(&z5, [0, 1]));
    let t = |p: &AffPoint| AffPoint::new(&p.0 + &z5.int(1), &p.1 + &z5.int(3)).unwrap();
    let (a2, b2, c2) = (t(&a), t(&b), t(&c));
    let j = |x: &AffPoint, y: &AffPoint| aff_line_through(x, y).unwrap();
    let cfg = DesarguesSmallConfig {
        k: j(&a, &a2),
        l: j(&b, &b2),
        m: j(&c, &c2),
        n_a: j(&a, &b),
        n_a2: j(&a2, &b2),
        n_c: j(&b, &c),
        n_c2: j(&b2, &c2),
        a: a.clone(),
        a2: a2.clone(),
        b: b.clone(),
        b2: b2.clone(),
        c: c.clone(),
        c2: c2.clone(),
    };
    assert_eq!(desargues_small_check(&g, &cfg), Verdict::Holds);
    let mut bad = cfg.clone();
    bad.l = j(&b, &ap(&z5, [4, 0]));
    assert!(matches!(desargues_small_check(&g, &bad), Verdict::PremisesFail(_)));
}

#[test]
fn desargues_big_and_pappus_instances() {
    let z5 = zm(5);
    let g = RingAffine;
    let o = ap(&z5, [0, 0]);
    let s = |p: &AffPoint, f: i64| AffPoint::new(&p.0 * &z5.int(f), &p.1 * &z5.int(f)).unwrap();
    let (a, b, c) = (ap(&z5, [1, 0]), ap(&z5, [0, 1]), ap(&z5, [1, 2]));
    let j = |x: &AffPoint, y: &AffPoint| aff_line_through(x, y).unwrap();
    let cfg = DesarguesBigConfig {
        k: j(&o, &a),
        l: j(&o, &b),
        m: j(&o, &c),
        n_ab: j(&a, &b),
        n_bc: j(&b, &c),
        n_ac: j(&a, &c),
        p: o.clone(),
        a: a.clone(),
        a2: s(&a, 3),
        b: b.clone(),
        b2: s(&b, 3),
        c: c.clone(),
        c2: s(&c, 3),
    };
    assert_eq!(desargues_big_check(&g, &cfg), Verdict::Holds);

    // Pappus: A, B, C on the x-axis and A', B', C' on the y-axis, with C
    // and C' fixed by A'B ∥ B'C and AB' ∥ BC'.
    let (x_axis, y_axis) = (al(&z5, [0, 1, 0]), al(&z5, [1, 0, 0]));
    let (pa, pb) = (ap(&z5, [1, 0]), ap(&z5, [2, 0]));
    let (qa, qb) = (ap(&z5, [0, 1]), ap(&z5, [0, 2]));
    let pc = aff_meet(&parallel_through(&qb, &j(&qa, &pb)), &x_axis).unwrap();
    let pc2 = aff_meet(&parallel_through(&pb, &j(&pa, &qb)), &y_axis).unwrap();
    assert_eq!((pc.clone(), pc2.clone()), (ap(&z5, [4, 0]), ap(&z5, [0, 4])));
    let cfg = PappusAffineConfig {
        k: x_axis,
        l: y_axis,
        p: o,
        a: pa,
        a2: qa,
        b: pb,
        b2: qb,
        c: pc,
        c2: pc2,
    };
    assert_eq!(pappus_affine_check(&g, &cfg), Verdict::Holds);
}

#[test]
fn variant_ids_roundtrip() {
    let ids: Vec<&str> = DesarguesVariant::ALL.iter().map(|v| v.id()).collect();
    assert_eq!(
        ids,
        ["parallel-3", "lempar1", "lempar2", "lempar3", "lempar4", "parallel-4", "concurrent-3", "concurrent-4", "5-point"]
    );
    for v in DesarguesVariant::ALL {
        assert_eq!(v.id().parse::<DesarguesVariant>().unwrap(), v);
    }
    assert!("parallel-5".parse::<DesarguesVariant>().is_err());
}

#[test]
fn variants_never_violated_on_small_planes() {
    let opts = VerifyOptions::default();
    for ctx in [zm(2), zm(3)] {
        let p = export_affine(&ctx).unwrap();
        for v in DesarguesVariant::ALL {
            let r = check_variant_synthetic(&p, v, &opts);
            assert!(r.passed, "{ctx} {}: {}", v.id(), r.line());
            assert_eq!(r.mode, Mode::Exhaustive);
            assert!(r.checked > 0, "{ctx} {} is vacuous", v.id());
        }
    }
}

#[test]
fn five_point_on_dilatation_image() {
    let z5 = zm(5);
    let g = RingAffine;
    let p = ap(&z5, [0, 0]);
    let s = |q: &AffPoint| AffPoint::new(&q.0 * &z5.int(2), &q.1 * &z5.int(2)).unwrap();
    let (a, b, c, d) = (ap(&z5, [1, 0]), ap(&z5, [1, 1]), ap(&z5, [0, 1]), ap(&z5, [3, 2]));
    let j = |x: &AffPoint, y: &AffPoint| aff_line_through(x, y).unwrap();
    let cfg = VariantConfig {
        lines: vec![j(&p, &a), j(&p, &b), j(&p, &c)],
        points: vec![p.clone(), a.clone(), b.clone(), c.clone(), d.clone(), s(&a), s(&b), s(&c), s(&d)],
    };
    assert_eq!(desargues_variant_check(&g, DesarguesVariant::FivePoint, &cfg).unwrap(), Verdict::Holds);

    let mut off = cfg.clone();
    off.points[0] = ap(&z5, [2, 2]);
    assert!(matches!(desargues_variant_check(&g, DesarguesVariant::FivePoint, &off).unwrap(), Verdict::PremisesFail(_)));
    let short = VariantConfig { lines: cfg.lines.clone(), points: cfg.points[..5].to_vec() };
    assert!(desargues_variant_check(&g, DesarguesVariant::FivePoint, &short).is_err());
}

proptest! {
    #[test]
    fn parallel_through_is_parallel_and_incident(x in 0i64..4, y in 0i64..4, v in proptest::array::uniform3(0i64..4)) {
        let z4 = zm(4);
        prop_assume!(v[0] % 2 == 1 || v[1] % 2 == 1);
        let k = al(&z4, v);
        let p = ap(&z4, [x, y]);
        let l = parallel_through(&p, &k);
        prop_assert!(parallel(&k, &l));
        prop_assert!(aff_incident(&p, &l));
    }

    #[test]
    fn join_contains_both_points(a in proptest::array::uniform2(0i64..9), b in proptest::array::uniform2(0i64..9)) {
        let z9 = zm(9);
        let (p, q) = (ap(&z9, a), ap(&z9, b));
        match aff_line_through(&p, &q) {
            Ok(l) => prop_assert!(aff_incident(&p, &l) && aff_incident(&q, &l)),
            Err(_) => prop_assert!(!aff_apart(&p, &q)),
        }
    }
}
