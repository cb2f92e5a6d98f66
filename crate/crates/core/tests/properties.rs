use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

use cyclozeta::characters::{char_eval, characters, gauss_sum, Parity};
use cyclozeta::cli::output::{
    cycnum_from_json, cycnum_to_json, rational_from_json, rational_to_json,
    special_value_from_json, special_value_to_json,
};
use cyclozeta::combinatorics::{
    chebyshev_coeff, circular_eulerian, circular_eulerian_bruteforce, class_number_m, ChebyshevKind,
};
use cyclozeta::exactnum::rational::{euler_phi, factorial, from_bigint, int, pow2, rat};
use cyclozeta::exactnum::{
    cyc_field_ops, cyc_to_complex, cyclotomic_polynomial, trig_alg, CycNum, CycOp, PolyQ, Rational,
    TrigKind,
};
use cyclozeta::lvalues::{
    dirichlet_l_closed, graph_l, spectral_sum, SpecialValue, SpectralSumSpec,
};
use cyclozeta::numoracle::{
    green_function, hurwitz_zeta_series, special_value_numeric, spectral_sum_series,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn cycnum_in(conductor: u64) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(small_rational(), conductor as usize)
        .prop_map(move |c| CycNum::new(conductor, c).unwrap())
}

fn cycnum() -> impl Strategy<Value = CycNum> {
    (1u64..=24).prop_flat_map(cycnum_in)
}

fn cycnum_pair() -> impl Strategy<Value = (CycNum, CycNum)> {
    (1u64..=24).prop_flat_map(|m| (cycnum_in(m), cycnum_in(m)))
}

fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn embedding_is_multiplicative((z, w) in cycnum_pair()) {
        let lhs = cyc_to_complex(&(&z * &w));
        let rhs = cyc_to_complex(&z) * cyc_to_complex(&w);
        prop_assert!(rel_close(lhs, rhs, 1e-9), "{lhs} vs {rhs}");
    }

    #[test]
    fn field_axioms((a, b) in cycnum_pair(), c in cycnum()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse_then_multiply_is_one(z in cycnum()) {
        prop_assume!(!z.is_zero());
        let inv = cyc_field_ops(&z, &z, CycOp::Inv).unwrap();
        let prod = cyc_field_ops(&z, &inv, CycOp::Mul).unwrap();
        prop_assert_eq!(prod, CycNum::one(1));
    }

    #[test]
    fn promotion_preserves_value(z in cycnum(), k in 1u64..=4) {
        let wide = CycNum::zero(z.conductor() * k);
        let promoted = cyc_field_ops(&z, &wide, CycOp::Promote).unwrap();
        prop_assert_eq!(promoted.conductor(), z.conductor() * k);
        prop_assert_eq!(&promoted, &z);
    }

    #[test]
    fn rational_json_round_trip(q in small_rational()) {
        let j = rational_to_json(&q);
        prop_assert_eq!(rational_from_json(&j).unwrap(), q);
    }

    #[test]
    fn cycnum_json_round_trip(z in cycnum(), pi_power in -3i32..=12) {
        let j = cycnum_to_json(&z);
        prop_assert_eq!(cycnum_to_json(&cycnum_from_json(&j).unwrap()), j);
        let v = SpecialValue::new(pi_power, z);
        let j = special_value_to_json(&v);
        let back = special_value_from_json(&j).unwrap();
        prop_assert_eq!(special_value_to_json(&back), j);
        prop_assert_eq!(back, v);
    }

    #[test]
    fn green_jump(t in 0.01f64..0.99, alpha in 0.1f64..6.1) {
        let eps = 1e-6;
        let jump = green_function(t + eps, t, alpha).unwrap() - green_function(t - eps, t, alpha).unwrap();
        // the phase e^{√−1 α(t−s)} moves by α·ε on each side
        let bound = 2.0 * alpha * eps * (1.0 + (alpha / 2.0).tan().recip().abs());
        prop_assert!((jump - Complex64::i()).norm() <= bound, "jump {jump}");
    }
}

#[test]
fn green_jump_is_exact_at_half_period() {
    // cot(α/2) = 0 removes the first-order term
    for &t in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        let eps = 1e-6;
        let jump =
            green_function(t + eps, t, PI).unwrap() - green_function(t - eps, t, PI).unwrap();
        assert!((jump - Complex64::i()).norm() < 1e-10, "{jump}");
    }
}

#[test]
fn pythagoras_and_reflection() {
    for n in 1..=30u64 {
        for m in 1..n as i64 {
            let s = trig_alg(n, m, TrigKind::Sin).unwrap();
            let c = trig_alg(n, m, TrigKind::Cos).unwrap();
            assert_eq!(&(&s * &s) + &(&c * &c), CycNum::one(1), "N={n} m={m}");
            assert_eq!(s, trig_alg(n, n as i64 - m, TrigKind::Sin).unwrap());
        }
    }
}

#[test]
fn cyclotomic_polynomials_factor_x_m_minus_one() {
    for m in 1..=50u64 {
        let prod = cyclozeta::exactnum::rational::divisors(m)
            .into_iter()
            .map(|d| cyclotomic_polynomial(d).unwrap())
            .fold(PolyQ::one(), |acc, p| &acc * &p);
        let expected = &PolyQ::monomial(Rational::one(), m as usize) - &PolyQ::one();
        assert_eq!(prod, expected, "M={m}");
    }
}

#[test]
fn circular_eulerian_symmetry_and_totals() {
    for n in 2..=30u32 {
        for l in 1..n as i64 {
            assert_eq!(
                circular_eulerian(n, l).unwrap(),
                circular_eulerian(n, n as i64 - l).unwrap()
            );
        }
    }
    for n in 1..=12u32 {
        let total: num_bigint::BigUint = (1..2 * n as i64)
            .map(|l| circular_eulerian(2 * n, l).unwrap())
            .sum();
        assert_eq!(num_bigint::BigInt::from(total), factorial(2 * n as u64 - 1));
    }
    for n in 2..=9u32 {
        let k = n as i64 - 2;
        let total: num_bigint::BigUint = (-k..=k).map(|m| class_number_m(n, m).unwrap()).sum();
        assert_eq!(num_bigint::BigInt::from(total), factorial(n as u64 - 1));
    }
}

#[test]
fn bruteforce_matches_formula() {
    for n in 2..=8u32 {
        for l in 0..=n as i64 {
            assert_eq!(
                circular_eulerian(n, l).unwrap(),
                circular_eulerian_bruteforce(n, l).unwrap()
            );
        }
    }
}

/// `Σ_i t(k,i) x^{2i}` with the textbook constant term `T_0 = 1`.
fn chebyshev_eval(k: u32, kind: ChebyshevKind, x: &CycNum) -> CycNum {
    let x2 = x * x;
    let mut acc = CycNum::zero(x.conductor());
    let mut power = CycNum::one(x.conductor());
    for i in 0..=k as i64 {
        let coeff = if k == 0 && kind == ChebyshevKind::T {
            Rational::one()
        } else {
            chebyshev_coeff(k, i, kind)
        };
        acc = &acc + &power.scale(&coeff);
        power = &power * &x2;
    }
    acc
}

#[test]
fn chebyshev_identities() {
    for n in 1..=12u64 {
        for m in 0..(2 * n as i64) {
            let s = trig_alg(n, m, TrigKind::Sin).unwrap();
            let c = trig_alg(n, m, TrigKind::Cos).unwrap();
            for k in 0..=4u32 {
                let sign = int(if k % 2 == 0 { 1 } else { -1 });
                let even = trig_alg(n, 2 * k as i64 * m, TrigKind::Cos).unwrap();
                assert_eq!(even, chebyshev_eval(k, ChebyshevKind::T, &s).scale(&sign));
                let odd = trig_alg(n, (2 * k as i64 + 1) * m, TrigKind::Cos).unwrap();
                assert_eq!(
                    odd,
                    (&c * &chebyshev_eval(k, ChebyshevKind::U, &s)).scale(&sign)
                );
            }
        }
    }
}

#[test]
fn character_orthogonality() {
    for n_mod in 1..=24u64 {
        let chars = characters(n_mod);
        let phi = euler_phi(n_mod);
        assert_eq!(chars.len() as u64, phi);
        for m in 0..n_mod as i64 {
            let total = chars
                .iter()
                .fold(CycNum::zero(1), |acc, chi| &acc + &char_eval(chi, m));
            let expected = if m.rem_euclid(n_mod as i64) == 1 % n_mod as i64 {
                phi as i64
            } else {
                0
            };
            assert_eq!(
                total,
                CycNum::from_rational(int(expected), 1),
                "N={n_mod} m={m}"
            );
        }
        for chi in &chars {
            let minus_one = char_eval(chi, -1);
            assert_eq!(
                minus_one,
                CycNum::from_rational(int(chi.parity().sign()), 1)
            );
        }
        if n_mod <= 2 {
            continue;
        }
        let half = (phi / 2) as i64;
        for m in 0..n_mod as i64 {
            let r = m.rem_euclid(n_mod as i64);
            let (is_one, is_minus_one) = (r == 1, r == n_mod as i64 - 1);
            for parity in [Parity::Even, Parity::Odd] {
                let total = chars
                    .iter()
                    .filter(|c| c.parity() == parity)
                    .fold(CycNum::zero(1), |acc, chi| &acc + &char_eval(chi, m));
                let expected = match parity {
                    Parity::Even => half * (is_one as i64 + is_minus_one as i64),
                    Parity::Odd => half * (is_one as i64 - is_minus_one as i64),
                };
                assert_eq!(
                    total,
                    CycNum::from_rational(int(expected), 1),
                    "N={n_mod} m={m} {parity}"
                );
            }
        }
    }
}

#[test]
fn gauss_sums_have_modulus_sqrt_n() {
    for n_mod in 1..=24u64 {
        for chi in characters(n_mod).into_iter().filter(|c| c.is_primitive()) {
            let g = cyc_to_complex(&gauss_sum(&chi));
            assert!((g.norm() - (n_mod as f64).sqrt()).abs() < 1e-9, "N={n_mod}");
            let g = gauss_sum(&chi);
            assert_eq!(&g * &g.conj(), CycNum::from_rational(int(n_mod as i64), 1));
        }
    }
}

#[test]
fn l_values_assemble_from_spectral_sums() {
    for n_mod in 2..=12u64 {
        for chi in characters(n_mod) {
            for n in 1..=5u32 {
                if Parity::of_integer(n as i64) != chi.parity() || (n == 1 && chi.is_principal()) {
                    continue;
                }
                let mut acc = CycNum::zero(1);
                for m in 1..n_mod as i64 {
                    let weight = char_eval(&chi, m);
                    if weight.is_zero() {
                        continue;
                    }
                    let spec = SpectralSumSpec::new(m, n_mod, n).unwrap();
                    acc = &acc + &(&weight * &spectral_sum(spec).unwrap().coeff);
                }
                let scale =
                    from_bigint(pow2(n - 1)) / from_bigint(num_bigint::BigInt::from(n_mod).pow(n));
                let assembled = SpecialValue::new(n as i32, acc.scale(&scale));
                assert_eq!(
                    assembled,
                    dirichlet_l_closed(n, &chi).unwrap(),
                    "N={n_mod} n={n}"
                );
            }
        }
    }
}

#[test]
fn graph_l_parity_vanishing() {
    for n_mod in 2..=20u64 {
        for chi in characters(n_mod) {
            for n in 1..=3u32 {
                let vanishing_twist = chi.parity() == Parity::Even;
                assert!(
                    graph_l(n, &chi, vanishing_twist).unwrap().is_zero(),
                    "N={n_mod} n={n}"
                );
            }
        }
    }
}

#[test]
fn spectral_series_decomposes_into_hurwitz_values() {
    let k_max = 200_000u64;
    for n_mod in 2..=8u64 {
        for m in 1..n_mod {
            for n in 2..=5u32 {
                let a = m as f64 / n_mod as f64;
                let series = spectral_sum_series(n, TAU * a, k_max).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let hurwitz = (hurwitz_zeta_series(n, a, k_max).unwrap()
                    + sign * hurwitz_zeta_series(n, 1.0 - a, k_max).unwrap())
                    / TAU.powi(n as i32);
                // truncation of the symmetric window, the two Hurwitz remainders, rounding
                let bound = 2.0 * (TAU * k_max as f64).powi(1 - n as i32) / (n - 1) as f64
                    + 2.0 * (k_max as f64).powi(-(n as i32))
                    + 1e-13 * hurwitz.abs();
                assert!((series - hurwitz).abs() <= bound, "N={n_mod} m={m} n={n}");
                let exact = special_value_numeric(
                    &spectral_sum(SpectralSumSpec::new(m as i64, n_mod, n).unwrap()).unwrap(),
                );
                assert!(
                    (exact.re - hurwitz).abs() <= bound && exact.im.abs() < 1e-12,
                    "N={n_mod} m={m} n={n}: {exact} vs {hurwitz}, bound {bound:e}"
                );
            }
        }
    }
}

#[test]
fn special_value_zero_ignores_pi_power() {
    let zero = SpecialValue::rational(3, Rational::zero());
    assert_eq!(zero, SpecialValue::rational(0, Rational::zero()));
}
