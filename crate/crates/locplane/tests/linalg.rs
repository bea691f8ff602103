//! Matrices over rings: determinants, inverses, the groups G(R) and H(R).

use locplane::linalg::*;
use locplane::ring::*;
use proptest::prelude::*;

fn units(ctx: &RingContext) -> usize {
    ctx.enumerate().unwrap().iter().filter(|x| x.is_invertible()).count()
}

/// |GL₂(R)|·|R|² by enumerating every 2×2 block.
fn oracle_g_order(ctx: &RingContext) -> usize {
    let els = ctx.enumerate().unwrap();
    let n = els.len();
    let mut gl2 = 0;
    for a in &els {
        for b in &els {
            for c in &els {
                for d in &els {
                    if (a * d - b * c).is_invertible() {
                        gl2 += 1;
                    }
                }
            }
        }
    }
    gl2 * n * n
}

/// |GL₃(R)| / |R^×| by enumerating every 3×3 matrix.
fn oracle_h_order(ctx: &RingContext) -> usize {
    let els = ctx.enumerate().unwrap();
    let n = els.len();
    let total = n.pow(9);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let mut e = Vec::with_capacity(9);
        for _ in 0..9 {
            e.push(els[c % n].clone());
            c /= n;
        }
        let m = Mat3::new([
            [e[0].clone(), e[1].clone(), e[2].clone()],
            [e[3].clone(), e[4].clone(), e[5].clone()],
            [e[6].clone(), e[7].clone(), e[8].clone()],
        ])
        .unwrap();
        if det3(&m).is_invertible() {
            count += 1;
        }
    }
    count / units(ctx)
}

#[test]
fn group_orders() {
    let z2 = RingContext::zmod(2).unwrap();
    let z3 = RingContext::zmod(3).unwrap();
    assert_eq!(enumerate_g(&z2).unwrap().len(), 24);
    assert_eq!(enumerate_h(&z2).unwrap().len(), 168);
    assert_eq!(enumerate_g(&z3).unwrap().len(), 432);
    assert_eq!(enumerate_h(&z3).unwrap().len(), 5616);
    for ctx in [&z2, &z3] {
        assert_eq!(enumerate_g(ctx).unwrap().len(), oracle_g_order(ctx));
        assert_eq!(enumerate_h(ctx).unwrap().len(), oracle_h_order(ctx));
    }
    let z4 = RingContext::zmod(4).unwrap();
    assert_eq!(enumerate_g(&z4).unwrap().len(), oracle_g_order(&z4));
}

#[test]
fn determinant_examples() {
    let z6 = RingContext::zmod(6).unwrap();
    let m = Mat3::from_ints(&z6, [[3, 0, 1], [0, 1, 0], [2, 0, 1]]);
    assert_eq!(det3(&m), z6.int(1));
    let z4 = RingContext::zmod(4).unwrap();
    assert_eq!(det2(&Mat2::from_ints(&z4, [[1, 1], [0, 2]])), z4.int(2));
}

#[test]
fn inverse_examples() {
    let z4 = RingContext::zmod(4).unwrap();
    let d = Mat3::from_ints(&z4, [[3, 0, 0], [0, 3, 0], [0, 0, 1]]);
    assert_eq!(inverse3(&d).unwrap(), d);
    let q = RingContext::rational();
    let s = Mat3::from_ints(&q, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    assert_eq!(inverse3(&s).unwrap(), Mat3::from_ints(&q, [[1, -1, 0], [0, 1, 0], [0, 0, 1]]));
    let sing = Mat3::from_ints(&z4, [[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
    assert!(inverse3(&sing).is_err());
}

#[test]
fn canonicalize_examples() {
    let q = RingContext::rational();
    let two = Mat3::identity(&q).scale(&q.int(2));
    assert_eq!(canonicalize(&two), Mat3::identity(&q));
    let z4 = RingContext::zmod(4).unwrap();
    let three = Mat3::identity(&z4).scale(&z4.int(3));
    assert_eq!(canonicalize(&three), Mat3::identity(&z4));
}

#[test]
fn h_inverses() {
    let z2 = RingContext::zmod(2).unwrap();
    let id = ProjClassMatrix::identity(&z2);
    for h in enumerate_h(&z2).unwrap() {
        assert_eq!(h_mul(&h, &h_inverse(&h)), id);
        assert_eq!(h_mul(&h_inverse(&h), &h), id);
    }
}

#[test]
fn g_is_a_group() {
    let z3 = RingContext::zmod(3).unwrap();
    let g = enumerate_g(&z3).unwrap();
    let id = AffMatrix::identity(&z3);
    for a in g.iter().step_by(7) {
        assert_eq!(g_mul(a, &g_inverse(a)), id);
        for b in g.iter().step_by(31) {
            assert!(g.contains(&g_mul(a, b)));
        }
    }
}

#[test]
fn aff_matrix_shape() {
    let z4 = RingContext::zmod(4).unwrap();
    assert!(AffMatrix::new(Mat3::from_ints(&z4, [[1, 0, 0], [0, 1, 0], [1, 0, 1]])).is_err());
    assert!(AffMatrix::new(Mat3::from_ints(&z4, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])).is_err());
    let t = AffMatrix::new(Mat3::from_ints(&z4, [[1, 0, 2], [0, 1, 3], [0, 0, 1]])).unwrap();
    assert_eq!(t.apply(&z4.int(1), &z4.int(1)), (z4.int(3), z4.int(0)));
}

fn mat(n: u64) -> impl Strategy<Value = Mat3> {
    proptest::array::uniform9(0i64..n as i64).prop_map(move |e| {
        let ctx = RingContext::zmod(n).unwrap();
        Mat3::from_ints(&ctx, [[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    })
}

proptest! {
    #[test]
    fn det_is_multiplicative((a, b) in (mat(12), mat(12))) {
        prop_assert_eq!(det3(&a.mul(&b)), det3(&a) * det3(&b));
    }

    #[test]
    fn inverse_exists_iff_det_unit(a in mat(9)) {
        match inverse3(&a) {
            Ok(b) => {
                prop_assert!(a.mul(&b).is_identity());
                prop_assert!(b.mul(&a).is_identity());
            }
            Err(_) => prop_assert!(!det3(&a).is_invertible()),
        }
    }

    #[test]
    fn canonicalize_idempotent_and_unit_invariant(a in mat(8), u in prop::sample::select(vec![1i64, 3, 5, 7])) {
        prop_assume!(det3(&a).is_invertible());
        let ctx = a.ctx().clone();
        let c = canonicalize(&a);
        prop_assert_eq!(canonicalize(&c), c.clone());
        prop_assert_eq!(canonicalize(&a.scale(&ctx.int(u))), c);
    }

    #[test]
    fn transpose_preserves_det(a in mat(10)) {
        prop_assert_eq!(det3(&a.transpose()), det3(&a));
    }
}
