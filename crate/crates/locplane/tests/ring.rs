//! Ring arithmetic, locality and homomorphisms against brute-force oracles.

use locplane::ring::*;
use proptest::prelude::*;

/// Prime-power test by trial division, independent of the library.
fn oracle_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// A finite ring is local iff its non-units are closed under addition.
fn oracle_local(t: &RingTable) -> bool {
    let n = t.size() as u32;
    let unit = |x: u32| (0..n).any(|y| t.mul(x, y) == t.one());
    if unit(t.zero()) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| unit(x) || unit(y) || !unit(t.add(x, y))))
}

#[test]
fn zmod_examples() {
    let z4 = RingContext::zmod(4).unwrap();
    assert_eq!(z4.int(2) + z4.int(3), z4.int(1));
    assert!(!z4.int(2).is_invertible());
    assert!(z4.is_local().unwrap());

    let z6 = RingContext::zmod(6).unwrap();
    assert_eq!(z6.int(3) + z6.int(2), z6.int(5));
    assert_eq!(z6.int(5).try_inverse(), Some(z6.int(5)));
}

#[test]
fn dual_examples() {
    let d = RingContext::dual(2).unwrap();
    let one_eps = d.dual_elem(1, 1).unwrap();
    assert_eq!(&one_eps * &one_eps, d.one());
    let names: Vec<String> = d.enumerate().unwrap().iter().map(|v| v.to_string()).collect();
    assert_eq!(names, ["0", "1", "ε", "1+ε"]);
    let eps = d.dual_elem(0, 1).unwrap();
    assert!((&eps * &eps).is_zero());
    assert!(!eps.is_invertible());
    assert!(d.is_local().unwrap());
}

#[test]
fn rational_examples() {
    let q = RingContext::rational();
    assert_eq!(q.zero().try_inverse(), None);
    assert_eq!(q.ratio(2, 3).unwrap().try_inverse(), Some(q.ratio(3, 2).unwrap()));
    assert!(q.is_local().unwrap());
    assert!(!q.is_finite());
    assert!(q.enumerate().is_err());
}

#[test]
fn z6_locality_witness() {
    let z6 = RingContext::zmod(6).unwrap();
    match z6.check_local().unwrap() {
        LocalityReport::NotLocal(x, y) => {
            assert_eq!((x.clone(), y.clone()), (z6.int(3), z6.int(2)));
            assert!(!x.is_invertible() && !y.is_invertible() && (x + y).is_invertible());
        }
        r => panic!("expected non-local, got {r:?}"),
    }
}

#[test]
fn zmod_locality_matches_prime_powers() {
    for n in 2..=64u64 {
        let ctx = RingContext::zmod(n).unwrap();
        let t = ctx.table().unwrap();
        assert_eq!(ctx.is_local().unwrap(), oracle_prime_power(n), "n={n}");
        assert_eq!(oracle_local(&t), oracle_prime_power(n), "oracle n={n}");
    }
}

#[test]
fn dual_locality() {
    for p in [2u64, 3, 5] {
        let t = RingContext::dual(p).unwrap().table().unwrap();
        assert!(oracle_local(&t));
        assert_eq!(t.check_local(), Locality::Local);
    }
}

#[test]
fn parse_descriptors() {
    assert_eq!(RingContext::parse("zmod:4").unwrap(), RingContext::zmod(4).unwrap());
    assert_eq!(RingContext::parse("rational").unwrap(), RingContext::rational());
    assert_eq!(RingContext::parse("dual:2").unwrap(), RingContext::dual(2).unwrap());
    for bad in ["", "zmod", "zmod:x", "zmod:1", "dual:4", "field:2", "zmod:-3"] {
        assert!(RingContext::parse(bad).is_err(), "{bad}");
    }
    for d in ["zmod:4", "rational", "dual:3"] {
        assert_eq!(RingContext::parse(d).unwrap().descriptor(), d);
    }
}

#[test]
fn tables_match_direct_arithmetic() {
    for d in ["zmod:6", "dual:3"] {
        let ctx = RingContext::parse(d).unwrap();
        let t = ctx.table().unwrap();
        t.check_axioms().unwrap();
        let els = ctx.enumerate().unwrap();
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                assert_eq!(els[t.add(i as u32, j as u32) as usize], x + y);
                assert_eq!(els[t.mul(i as u32, j as u32) as usize], x * y);
            }
        }
    }
}

#[test]
fn dual_arithmetic_oracle() {
    let p = 3u64;
    let d = RingContext::dual(p).unwrap();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for e in 0..p {
                    let x = d.dual_elem(a, b).unwrap();
                    let y = d.dual_elem(c, e).unwrap();
                    let prod = d.dual_elem(a * c % p, (a * e + b * c) % p).unwrap();
                    assert_eq!(&x * &y, prod);
                    assert_eq!(x.dual_parts(), Some((a, b)));
                }
            }
        }
    }
}

#[test]
fn table_isomorphism() {
    let z4 = RingContext::zmod(4).unwrap().table().unwrap();
    let d2 = RingContext::dual(2).unwrap().table().unwrap();
    let z4b = RingContext::zmod(4).unwrap().table().unwrap();
    assert!(z4.find_isomorphism(&d2).is_none());
    assert_eq!(z4.find_isomorphism(&z4b), Some(vec![0, 1, 2, 3]));
    let ctx = RingContext::from_table(d2.clone());
    assert_eq!(ctx.size(), Some(4));
    assert!(ctx.is_local().unwrap());
}

#[test]
fn homomorphisms() {
    let z4 = RingContext::zmod(4).unwrap();
    let z2 = RingContext::zmod(2).unwrap();
    let d2 = RingContext::dual(2).unwrap();
    let red = RingHom::reduction(&z4, &z2).unwrap();
    assert_eq!(red.apply(&z4.int(3)).unwrap(), z2.int(1));
    assert_eq!(RingHom::enumerate_all(&z4, &z2).unwrap().len(), 1);
    assert_eq!(RingHom::enumerate_all(&z2, &z4).unwrap().len(), 0);
    let incl = RingHom::new(z2.clone(), d2.clone(), vec![d2.zero(), d2.one()]).unwrap();
    let back = RingHom::enumerate_all(&d2, &z2).unwrap();
    assert_eq!(back.len(), 1);
    let comp = incl.then(&back[0]).unwrap();
    assert_eq!(comp.images(), RingHom::identity(&z2).unwrap().images());
    assert!(RingHom::new(z2.clone(), z4.clone(), vec![z4.zero(), z4.one()]).is_err());
}

fn zmod_ctx() -> impl Strategy<Value = RingContext> {
    (2u64..40).prop_map(|n| RingContext::zmod(n).unwrap())
}

proptest! {
    #[test]
    fn zmod_matches_integer_arithmetic(n in 2u64..200, a in 0i64..1000, b in 0i64..1000) {
        let ctx = RingContext::zmod(n).unwrap();
        let m = n as i64;
        prop_assert_eq!(ctx.int(a) + ctx.int(b), ctx.int((a + b) % m));
        prop_assert_eq!(ctx.int(a) * ctx.int(b), ctx.int((a * b) % m));
        prop_assert_eq!(ctx.int(a) - ctx.int(b), ctx.int((a - b).rem_euclid(m)));
    }

    #[test]
    fn inverse_is_two_sided(ctx in zmod_ctx(), a in 0i64..100) {
        let x = ctx.int(a);
        match x.try_inverse() {
            Some(y) => { prop_assert!((&x * &y).is_one()); prop_assert!((&y * &x).is_one()); }
            None => prop_assert!((0..ctx.size().unwrap() as i64).all(|b| !(&x * &ctx.int(b)).is_one())),
        }
    }

    #[test]
    fn rational_field_laws(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let q = RingContext::rational();
        let x = q.ratio(a, b).unwrap();
        let y = q.ratio(c, d).unwrap();
        prop_assert_eq!(&x + &y, q.ratio(a * d + c * b, b * d).unwrap());
        prop_assert_eq!(&x * &y, q.ratio(a * c, b * d).unwrap());
        prop_assert_eq!(x.is_invertible(), a != 0);
    }
}
