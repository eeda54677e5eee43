use padic_hypergeom::field::FqField;
use padic_hypergeom::verify::{verify_bs1, verify_hessian, verify_mc, verify_mt1, Form, Verifier};
use padic_hypergeom::{Error, Gate};

fn gate<T: std::fmt::Debug>(r: padic_hypergeom::Result<T>) -> Gate {
    match r {
        Err(Error::PreconditionFailed(g)) => g,
        other => panic!("expected a gate, got {other:?}"),
    }
}

#[test]
fn main_theorem_gates() {
    let v = Verifier::new(13, 1, None).unwrap();
    let f = v.field().clone();
    assert_eq!(gate(verify_mt1(&v, f.from_i64(1))), Gate::DCubedIsOne);
    // 3^3 = 27 = 1 in F_13
    assert_eq!(gate(verify_mt1(&v, f.from_i64(3))), Gate::DCubedIsOne);
    // over F_7 and F_13 every d fails a gate, so the main theorem says nothing there
    for p in [7, 13] {
        let v = Verifier::new(p, 1, None).unwrap();
        for d in v.field().elements() {
            assert!(verify_mt1(&v, d).is_err());
        }
    }
}

#[test]
fn main_theorem_as_printed_over_f11() {
    let v = Verifier::new(11, 1, None).unwrap();
    let mut bad = Vec::new();
    let mut n = 0;
    for d in v.field().elements() {
        if let Ok(rec) = verify_mt1(&v, d) {
            n += 1;
            if !rec.pass {
                bad.push(format!("d={}: {} vs {}", rec.params["d"], rec.lhs, rec.rhs));
            }
        }
    }
    assert!(n > 0);
    assert!(bad.is_empty(), "{} of {n} fail: {}", bad.len(), bad.join("; "));
}

#[test]
fn main_theorem_corrected_over_small_fields() {
    for (p, r) in [(11, 1), (17, 1), (19, 1), (23, 1), (5, 2), (7, 2)] {
        let v = Verifier::new(p, r, None).unwrap();
        for d in v.field().elements() {
            if let Ok(s) = v.mt1(d, Form::Corrected) {
                assert!(s.pass(), "q = {}, d = {d:?}: {:?}", v.field().q(), s.render());
            }
        }
    }
}

#[test]
fn weierstrass_trace_examples() {
    let v = Verifier::new(7, 1, None).unwrap();
    let f = v.field().clone();
    let rec = verify_mc(&v, f.one(), f.one()).unwrap();
    assert!(rec.pass, "{rec:?}");
    assert_eq!(gate(verify_mc(&v, f.zero(), f.one())), Gate::JIsZero);
    let v = Verifier::new(5, 2, None).unwrap();
    let f = v.field().clone();
    for (a, b) in [("1,1", "2"), ("0,1", "3,4"), ("2,3", "1,1")] {
        let rec = verify_mc(&v, f.parse(a).unwrap(), f.parse(b).unwrap()).unwrap();
        assert!(rec.pass, "{rec:?}");
    }
}

#[test]
fn hessian_examples() {
    let v = Verifier::new(7, 1, None).unwrap().allow_p5(true);
    let f = v.field().clone();
    for a in f.elements() {
        match verify_hessian(&v, a) {
            Ok(rec) => assert!(rec.pass, "{rec:?}"),
            Err(e) => assert!(matches!(e, Error::PreconditionFailed(Gate::DIsZero | Gate::DCubedIsOne))),
        }
    }
    let v = Verifier::new(11, 1, None).unwrap();
    assert!(verify_hessian(&v, v.field().from_i64(2)).unwrap().pass);
    let v = Verifier::new(13, 1, None).unwrap();
    assert!(verify_hessian(&v, v.field().from_i64(2)).unwrap().pass);
    assert_eq!(gate(verify_hessian(&v, v.field().from_i64(3))), Gate::DCubedIsOne);
}

#[test]
fn first_branch_over_f7() {
    let v = Verifier::new(7, 1, None).unwrap();
    let f = v.field().clone();
    let k = f.one();
    let a = f.from_i64(-3);
    let mut n = 0;
    for b in f.nonzero_elements() {
        if let Ok(rec) = verify_bs1(&v, 1, a, b, k) {
            assert!(rec.pass, "{rec:?}");
            n += 1;
        }
    }
    assert!(n > 0);
    assert_eq!(gate(verify_bs1(&v, 1, a, f.zero(), k)), Gate::BIsZero);
}

#[test]
fn second_branch_over_f11_as_printed() {
    let v = Verifier::new(11, 1, None).unwrap();
    let f = v.field().clone();
    let mut bad = Vec::new();
    for h in f.nonzero_elements() {
        for a in f.nonzero_elements() {
            // b chosen so that h is a root of x^3 + ax + b
            let b = f.neg(f.add(f.mul(f.mul(h, h), h), f.mul(a, h)));
            if let Ok(rec) = verify_bs1(&v, 2, a, b, h) {
                if !rec.pass {
                    bad.push(format!("h={} a={}", rec.params["h"], rec.params["a"]));
                }
            }
        }
    }
    assert!(bad.is_empty(), "failing: {}", bad.join(", "));
}

#[test]
fn fields_are_rebuilt_identically() {
    let a = FqField::build(7, 2).unwrap();
    let b = FqField::build(7, 2).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.generator(), b.generator());
}
