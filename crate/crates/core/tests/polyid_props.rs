use matconic::lrs::{seq_b, seq_c, seq_u};
use matconic::polyid::families::{a_sq_recurrence, b_recurrence, c_recurrence, u_recurrence};
use matconic::polyid::{
    b_as_poly, c_as_poly, chebyshev_s, chebyshev_t, chebyshev_u, morgan_voyce_f,
    morgan_voyce_g, u_as_poly, verify, IdentitySuite, Status,
};
use matconic::Poly;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use proptest::prelude::*;

const N: usize = 30;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn binom(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn pow(p: &Poly, k: usize) -> Poly {
    (0..k).fold(Poly::from_ints(&[1]), |acc, _| &acc * p)
}

// Closed forms used as independent references.

/// `T(n) = sum_k C(n, 2k) x^(n-2k) (x^2 - 1)^k`.
fn t_closed(n: usize) -> Poly {
    let x2m1 = Poly::from_ints(&[-1, 0, 1]);
    (0..=n / 2).fold(Poly::from_ints(&[]), |acc, k| {
        let term = &pow(&Poly::x(), n - 2 * k) * &pow(&x2m1, k);
        &acc + &term.scale(&binom(n, 2 * k))
    })
}

/// `U(n) = sum_k C(n+1, 2k+1) x^(n-2k) (x^2 - 1)^k`.
fn u_closed(n: usize) -> Poly {
    let x2m1 = Poly::from_ints(&[-1, 0, 1]);
    (0..=n / 2).fold(Poly::from_ints(&[]), |acc, k| {
        let term = &pow(&Poly::x(), n - 2 * k) * &pow(&x2m1, k);
        &acc + &term.scale(&binom(n + 1, 2 * k + 1))
    })
}

/// Morgan-Voyce: `f(n) = sum_k C(n+k, n-k) x^k`, `g(n) = sum_k C(n+k+1, n-k) x^k`.
fn mv_closed(n: usize, extra: usize) -> Poly {
    Poly::new((0..=n).map(|k| binom(n + k + extra, n - k)).collect())
}

#[test]
fn small_examples() {
    assert_eq!(chebyshev_t(2), Poly::from_ints(&[-1, 0, 2]));
    assert_eq!(chebyshev_s(3), Poly::from_ints(&[0, -2, 0, 1]));
    let at2: Vec<_> = (0..4).map(|n| chebyshev_s(n).eval(&int(2))).collect();
    assert_eq!(at2, vec![int(1), int(2), int(3), int(4)]);
    assert_eq!(morgan_voyce_f(1), Poly::from_ints(&[1, 1]));
    assert_eq!(morgan_voyce_g(1), Poly::from_ints(&[2, 1]));
    assert_eq!(morgan_voyce_f(2), Poly::from_ints(&[1, 3, 1]));
    assert_eq!(b_as_poly(3), Poly::from_ints(&[3, -4, 1]));
    assert_eq!(c_as_poly(3), Poly::from_ints(&[-1, 6, -5, 1]));
    assert_eq!(u_as_poly(2), Poly::x());
    assert_eq!(chebyshev_t(2).eval(&BigRational::new(3.into(), 2.into())), BigRational::new(7.into(), 2.into()));
}

#[test]
fn families_match_closed_forms() {
    for n in 0..=N {
        assert_eq!(chebyshev_t(n), t_closed(n), "T({n})");
        assert_eq!(chebyshev_u(n), u_closed(n), "U({n})");
        assert_eq!(morgan_voyce_f(n), mv_closed(n, 0), "f({n})");
        assert_eq!(morgan_voyce_g(n), mv_closed(n, 1), "g({n})");
    }
}

#[test]
fn families_satisfy_their_recurrences() {
    let two_x = Poly::from_ints(&[0, 2]);
    let x = Poly::x();
    let x_plus_2 = Poly::from_ints(&[2, 1]);
    for n in 1..N {
        for (fam, mult) in [
            (chebyshev_t as fn(usize) -> Poly, &two_x),
            (chebyshev_u, &two_x),
            (chebyshev_s, &x),
            (morgan_voyce_f, &x_plus_2),
            (morgan_voyce_g, &x_plus_2),
        ] {
            assert_eq!(fam(n + 1), &(mult * &fam(n)) - &fam(n - 1), "n={n}");
        }
    }
}

#[test]
fn s_is_u_at_half() {
    let half_x = Poly::new(vec![int(0), BigRational::new(1.into(), 2.into())]);
    for n in 0..=N {
        assert_eq!(chebyshev_s(n), chebyshev_u(n).compose(&half_x), "n={n}");
    }
}

#[test]
fn sequence_polys_evaluate_to_sequences() {
    let b = b_recurrence().terms(51);
    let c = c_recurrence().terms(51);
    let u = u_recurrence().terms(51);
    assert_eq!(a_sq_recurrence().terms(51), u);
    assert_eq!((b[7].clone(), c[7].clone(), u[7].clone()), (b_as_poly(7), c_as_poly(7), u_as_poly(7)));
    for w in [5u64, 6, 7, 8] {
        let wr = int(w as i64);
        for n in 0..=50 {
            assert_eq!(b[n].eval(&wr), BigRational::from_integer(seq_b(w, n)), "b w={w} n={n}");
            assert_eq!(c[n].eval(&wr), BigRational::from_integer(seq_c(w, n)), "c w={w} n={n}");
            assert_eq!(u[n].eval(&wr), BigRational::from_integer(seq_u(w, n)), "u w={w} n={n}");
        }
    }
}

#[test]
fn every_suite_is_as_expected_at_30() {
    let reports = verify(IdentitySuite::All, 30).unwrap();
    for r in &reports {
        assert!(r.is_expected(), "{r:?}");
    }
    let printed = reports.iter().find(|r| r.identity == "MV.iv.printed").unwrap();
    assert_eq!(printed.status, Status::Counterexample);
    let first = printed.first_counterexample().unwrap();
    assert_eq!((first.index, first.lhs.as_str(), first.rhs.as_str()), (1, "x^2 - 1", "-1"));
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..6)
        .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect()))
}

proptest! {
    #[test]
    fn poly_ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
        prop_assert!(p.coeffs().last().is_none_or(|c| c != &int(0)));
    }

    #[test]
    fn eval_is_a_homomorphism(p in small_poly(), q in small_poly(), n in -7i64..=7, d in 1i64..=5) {
        let x = BigRational::new(n.into(), d.into());
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!(p.compose(&q).eval(&x), p.eval(&q.eval(&x)));
    }
}
