//! Synthetic planes: the text format, duality, derived lookups and axiom
//! reports on hand-written planes.

use locplane::affine::AffineRingPlane;
use locplane::projective::RingPlane;
use locplane::ring::RingContext;
use locplane::synthetic::*;

const FANO: [[usize; 3]; 7] = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];

/// A plane over a field from its lines: distinct elements are apart and
/// outside is non-incidence.
fn field_plane_text(kind: &str, n: usize, lines: &[Vec<usize>], parallel: &[(usize, usize)]) -> String {
    let mut s = format!("# hand-written\nplane {kind}\npoints {n}\nlines {}\n", lines.len());
    for a in 0..n {
        for b in a + 1..n {
            s += &format!("apart_pt {a} {b}\n");
        }
    }
    for k in 0..lines.len() {
        for l in k + 1..lines.len() {
            s += &format!("apart_li {k} {l}\n");
        }
    }
    for (l, pts) in lines.iter().enumerate() {
        for p in 0..n {
            let rel = if pts.contains(&p) { "incident" } else { "outside" };
            s += &format!("{rel} {p} {l}  # point {p}\n");
        }
    }
    for (k, l) in parallel {
        s += &format!("parallel {k} {l}\n");
    }
    s
}

fn fano_text() -> String {
    field_plane_text("projective", 7, &FANO.iter().map(|l| l.to_vec()).collect::<Vec<_>>(), &[])
}

/// The affine plane of order 2: all six pairs, three parallel classes.
fn affine4_text() -> String {
    let lines = vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3], vec![0, 3], vec![1, 2]];
    let par: Vec<(usize, usize)> = (0..6).map(|l| (l, l)).chain([(0, 1), (2, 3), (4, 5)]).collect();
    field_plane_text("affine", 4, &lines, &par)
}

#[test]
fn fano_plane_passes() {
    let p = SyntheticPlane::parse(&fano_text()).unwrap();
    assert_eq!(p.kind(), PlaneKind::Projective);
    let r = p.verify(&VerifyOptions::default());
    assert!(r.all_passed(), "{:?}", r.lines());
    for line in r.lines() {
        assert!(line.starts_with("AXIOM ") && line.ends_with(" PASS"), "{line}");
    }
    assert!(r.get("desargues").is_some() && r.get("pappus").is_some());
    for (l, pts) in FANO.iter().enumerate() {
        assert_eq!(p.join(pts[0], pts[2]), Some(l));
        assert_eq!(p.points_on(l), pts.map(|x| x as u32).as_slice());
    }
    assert_eq!(p.meet(0, 1), Some(0));
    assert_eq!(p.join(3, 3), None);
}

#[test]
fn affine_plane_of_order_two_passes() {
    let p = SyntheticPlane::parse(&affine4_text()).unwrap();
    let r = p.verify(&VerifyOptions::default());
    assert!(r.all_passed(), "{:?}", r.lines());
    assert_eq!(p.par_through(2, 0), Some(1));
    assert_eq!(p.meet(0, 1), None);
    assert_eq!(p.meet(0, 2), Some(0));
}

#[test]
fn broken_planes_fail_with_witness() {
    let text = fano_text().replace("incident 2 0  # point 2\n", "outside 2 0\n");
    let p = SyntheticPlane::parse(&text).unwrap();
    let r = p.verify(&VerifyOptions::default());
    assert!(!r.all_passed());
    let f = r.failures().next().unwrap();
    assert!(f.witness.is_some());
    assert!(f.line().starts_with(&format!("AXIOM {} FAIL witness=(", f.name)));

    // Parallelism that is not an equivalence relation.
    let text = affine4_text().replace("parallel 4 5\n", "");
    let r = SyntheticPlane::parse(&text).unwrap().verify(&VerifyOptions::default());
    assert!(!r.all_passed());
}

#[test]
fn text_roundtrip() {
    let planes = [
        RingPlane::new(&RingContext::zmod(2).unwrap()).unwrap().plane,
        RingPlane::new(&RingContext::zmod(4).unwrap()).unwrap().plane,
        AffineRingPlane::new(&RingContext::dual(2).unwrap()).unwrap().plane,
        SyntheticPlane::parse(&affine4_text()).unwrap(),
    ];
    for p in planes {
        let s = p.serialize();
        let q = SyntheticPlane::parse(&s).unwrap();
        assert_eq!(q.serialize(), s);
        assert_eq!(q.relation_counts(), p.relation_counts());
        assert_eq!(q.kind(), p.kind());
    }
}

#[test]
fn symmetric_relations_are_closed() {
    let p = SyntheticPlane::parse(&affine4_text()).unwrap();
    assert!(p.pt_apart(3, 1) && p.li_apart(5, 2) && p.parallel(1, 0));
}

#[test]
fn malformed_input() {
    let cases: [(&str, usize); 10] = [
        ("", 1),
        ("plane conic\npoints 1\nlines 1\n", 1),
        ("plane affine\nlines 1\n", 2),
        ("plane affine\npoints x\nlines 1\n", 2),
        ("plane affine\npoints 2\nlines 1\napart_pt 0 2\n", 4),
        ("plane affine\npoints 2\nlines 1\napart_pt 1 1\n", 4),
        ("plane affine\npoints 2\nlines 1\nincident 0 0\noutside 0 0\n", 5),
        ("plane projective\npoints 2\nlines 2\nparallel 0 1\n", 4),
        ("plane affine\npoints 2\nlines 1\n# note\nmeets 0 0\n", 5),
        ("plane affine\npoints 2\nlines 1\nincident 0\n", 4),
    ];
    for (text, line) in cases {
        let e = SyntheticPlane::parse(text).unwrap_err();
        assert_eq!(e.line, line, "{text:?}: {e}");
        assert!(e.to_string().contains(&format!("at line {line}")));
    }
}

#[test]
fn duality() {
    let p = RingPlane::new(&RingContext::zmod(3).unwrap()).unwrap().plane;
    let d = p.dual();
    assert_eq!((d.n_points(), d.n_lines()), (p.n_lines(), p.n_points()));
    assert_eq!(d.dual().serialize(), p.serialize());
    for a in 0..p.n_points() {
        for l in 0..p.n_lines() {
            assert_eq!(p.incident(a, l), d.incident(l, a));
            assert_eq!(p.outside(a, l), d.outside(l, a));
        }
    }
    assert!(d.verify(&VerifyOptions::default()).all_passed());
    let fano = SyntheticPlane::parse(&fano_text()).unwrap();
    assert!(fano.dual().verify(&VerifyOptions::default()).all_passed());
}

#[test]
fn delta_on_fano() {
    let p = SyntheticPlane::parse(&fano_text()).unwrap();
    let on = |x: usize, l: usize| FANO[l].contains(&x);
    let mut holds = 0;
    for k in 0..7 {
        for l in 0..7 {
            for a in 0..7 {
                for b in 0..7 {
                    let want = (0..7).any(|r| on(a, r) && on(b, r) && (0..7).any(|x| on(x, r) && on(x, k) && on(x, l)));
                    assert_eq!(p.delta(k, l, a, b), want, "δ({k},{l},{a},{b})");
                    match p.delta_witness(k, l, a, b) {
                        Some((r, x)) => {
                            assert!(want && on(a, r) && on(b, r) && on(x, r) && on(x, k) && on(x, l));
                            holds += 1;
                        }
                        None => assert!(!want),
                    }
                }
            }
        }
    }
    assert!(holds > 0 && holds < 7 * 7 * 7 * 7);
}

#[test]
fn kind_switch() {
    let a = SyntheticPlane::parse(&affine4_text()).unwrap();
    let p = a.with_kind(PlaneKind::Projective);
    assert_eq!(p.kind(), PlaneKind::Projective);
    assert_eq!(p.relation_counts()[4], 0);
    assert!(!p.verify(&VerifyOptions::default()).all_passed());
}
