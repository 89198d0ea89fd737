//! Property tests over random small-coefficient instances.

use proptest::collection::vec;
use proptest::prelude::*;

use melzak_core::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    vec(rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

/// x drawn away from the poles 0, -1, ..., -n.
fn pole_free_x(n: u32) -> impl Strategy<Value = Rational> {
    rational().prop_filter("x must avoid 0, -1, ..., -n", move |x| {
        (0..=n).all(|k| !(x + &Rational::from(k)).is_zero())
    })
}

fn melzak_instance(max_n: u32) -> impl Strategy<Value = MelzakInstance> {
    (0..=max_n)
        .prop_flat_map(move |n| (polynomial(n as usize), pole_free_x(n), rational(), Just(n)))
        .prop_map(|(f, x, y, n)| MelzakInstance::new(f, x, y, n).unwrap())
}

fn knot_set(n: u32, max_j: u32) -> impl Strategy<Value = KnotSet> {
    vec(pole_free_x(n), 1..=(max_j as usize + 1))
        .prop_filter("pairwise distinct", |ks| {
            ks.iter()
                .enumerate()
                .all(|(i, a)| ks[..i].iter().all(|b| a != b))
        })
        .prop_map(|ks| KnotSet::new(ks).unwrap())
}

fn generalized_instance(max_n: u32, max_j: u32) -> impl Strategy<Value = GeneralizedInstance> {
    (0..=max_n)
        .prop_flat_map(move |n| (knot_set(n, max_j), Just(n)))
        .prop_flat_map(|(knots, n)| {
            let degree = n as usize + knots.len() - 1;
            (polynomial(degree), Just(knots), rational(), Just(n))
        })
        .prop_map(|(f, knots, y, n)| GeneralizedInstance::new(f, knots, y, n).unwrap())
}

proptest! {
    #[test]
    fn pascal_recurrence(x in rational(), n in 1u32..=12) {
        let lhs = binomial_general(&x, n);
        let rhs = binomial_general(&(&x - &Rational::one()), n)
            + binomial_general(&(&x - &Rational::one()), n - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn difference_annihilates_low_degrees(n in 1u32..=12, p in polynomial(11)) {
        prop_assume!(p.degree().is_none_or(|d| (d as u32) < n));
        prop_assert_eq!(alternating_difference(&p, n), Rational::zero());
    }

    #[test]
    fn polynomial_ring_laws(
        a in polynomial(4),
        b in polynomial(4),
        c in polynomial(4),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn melzak_identity_holds_in_degree(inst in melzak_instance(10)) {
        let report = verify_melzak(&inst).unwrap();
        prop_assert!(report.holds);
        prop_assert_eq!(report.residual, Rational::zero());
    }

    #[test]
    fn generalized_identity_holds_in_degree(inst in generalized_instance(8, 4)) {
        prop_assert!(verify_generalized(&inst).unwrap().holds);
    }

    #[test]
    fn beta_sum_closed_form(x in pole_free_x(12), n in 0u32..=12) {
        let product = reciprocal_beta_sum(&x, n).unwrap()
            * &x
            * binomial_general(&(&x + &Rational::from(n)), n);
        prop_assert_eq!(product, Rational::one());
    }

    #[test]
    fn melzak_sum_is_linear_in_f(
        inst in melzak_instance(8),
        g in polynomial(8),
        a in rational(),
        b in rational(),
    ) {
        let combined = MelzakInstance::new(
            inst.f.scale(&a) + g.scale(&b),
            inst.x.clone(),
            inst.y.clone(),
            inst.n,
        ).unwrap();
        let g_inst = MelzakInstance::new(g, inst.x.clone(), inst.y.clone(), inst.n).unwrap();
        prop_assert_eq!(
            melzak_sum(&combined).unwrap(),
            a * melzak_sum(&inst).unwrap() + b * melzak_sum(&g_inst).unwrap()
        );
    }

    #[test]
    fn shift_covariance(inst in melzak_instance(8), s in rational()) {
        // replacing f with f(. + s) and y with y - s leaves both sides alone
        let shifted = MelzakInstance::new(
            inst.f.shift(&s),
            inst.x.clone(),
            &inst.y - &s,
            inst.n,
        ).unwrap();
        prop_assert_eq!(
            melzak_closed_form(&shifted).unwrap(),
            melzak_closed_form(&inst).unwrap()
        );
        let a = verify_melzak(&inst).unwrap();
        let b = verify_melzak(&shifted).unwrap();
        prop_assert_eq!(a.holds, b.holds);
    }

    #[test]
    fn lagrange_interpolates_its_values(knots in knot_set(0, 5), t in rational()) {
        let mut sampler = InstanceSampler::new(1, 9);
        let values: Vec<Rational> = (0..knots.len()).map(|_| sampler.rational()).collect();
        for (i, x) in knots.knots().iter().enumerate() {
            prop_assert_eq!(
                lagrange_eval(&knots, &values, x).unwrap(),
                values[i].clone()
            );
        }
        let coeffs = lagrange_coeffs(&knots, &values).unwrap();
        prop_assert_eq!(lagrange_eval(&knots, &values, &t).unwrap(), coeffs.eval(&t));
    }

    #[test]
    fn lagrange_reproduces_polynomials(knots in knot_set(0, 10), seed in any::<u64>()) {
        let mut sampler = InstanceSampler::new(seed, 9);
        let f = sampler.polynomial((knots.len() - 1) as u32);
        let values: Vec<Rational> = knots.knots().iter().map(|x| f.eval(x)).collect();
        prop_assert_eq!(lagrange_coeffs(&knots, &values).unwrap(), f);
    }

    #[test]
    fn omega_roots_and_derivative(knots in knot_set(0, 5)) {
        let w = omega(&knots);
        prop_assert_eq!(w.degree(), Some(knots.len()));
        let dw = w.derivative();
        for (i, x) in knots.knots().iter().enumerate() {
            prop_assert_eq!(w.eval(x), Rational::zero());
            prop_assert_eq!(dw.eval(x), omega_prime_at(&knots, i));
        }
    }

    #[test]
    fn partial_fractions_reconstruct(knots in knot_set(0, 5), k in rational()) {
        prop_assume!(knots.knots().iter().all(|x| !(&k + x).is_zero()));
        let decomposition = partial_fractions(&knots);
        let direct = knots
            .knots()
            .iter()
            .fold(Rational::one(), |acc, x| acc * (&k + x))
            .recip()
            .unwrap();
        prop_assert_eq!(decomposition.eval(&k).unwrap(), direct);
    }

    #[test]
    fn interpolation_route_equivalence(inst in melzak_instance(8)) {
        prop_assert_eq!(
            melzak_via_lagrange(&inst.f, &inst.x, &inst.y, inst.n).unwrap(),
            melzak_closed_form(&inst).unwrap()
        );
    }

    #[test]
    fn derivation_replay_through_partial_fractions(inst in generalized_instance(6, 3)) {
        // expand 1/prod(x_nu + k) into simple poles and recombine per-pole sums
        let decomposition = partial_fractions(&inst.knots);
        let mut recombined = Rational::zero();
        for (x_i, c_i) in inst.knots.knots().iter().zip(&decomposition.residues) {
            let pole_inst = MelzakInstance::new(
                inst.f.clone(),
                x_i.clone(),
                inst.y.clone(),
                inst.n,
            ).unwrap();
            recombined = recombined + c_i * &melzak_sum(&pole_inst).unwrap();
        }
        prop_assert_eq!(generalized_lhs(&inst).unwrap(), recombined);
    }

    #[test]
    fn evaluation_is_deterministic(inst in melzak_instance(8)) {
        prop_assert_eq!(melzak_sum(&inst).unwrap(), melzak_sum(&inst).unwrap());
        let a = verify_melzak(&inst).unwrap();
        let b = verify_melzak(&inst).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn degree_sharpness_single_pole() {
    // for each n, the degree n+1 monomial must fail at some valid (x, y)
    for n in 0..=6u32 {
        let f = Polynomial::monomial(n + 1);
        let found = (1..=5i64).any(|num| {
            let x = Rational::new(num, 2);
            let inst = MelzakInstance::new(f.clone(), x, Rational::zero(), n).unwrap();
            !verify_melzak(&inst).unwrap().holds
        });
        assert!(found, "no failing instance at n = {n}");
    }
}

#[test]
fn degree_sharpness_generalized() {
    for n in 0..=4u32 {
        for j in 0..=2u32 {
            let f = Polynomial::monomial(n + j + 1);
            let knots: Vec<Rational> = (0..=j)
                .map(|i| Rational::new(2 * i as i64 + 1, 2))
                .collect();
            let inst =
                GeneralizedInstance::new(f, KnotSet::new(knots).unwrap(), Rational::zero(), n)
                    .unwrap();
            assert!(
                !verify_generalized(&inst).unwrap().holds,
                "degree n+j+1 held at n = {n}, j = {j}"
            );
        }
    }
}
