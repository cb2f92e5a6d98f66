//! Acceptance gate: one line per criterion, non-zero exit if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rayon::prelude::*;

use cyclozeta::characters::{characters, DirichletCharacter, Parity};
use cyclozeta::coeffs::{coeff_a, coeff_a_via_inverse, coeff_b, verify_ac_identity};
use cyclozeta::combinatorics::{
    bernoulli_numbers, bernoulli_via_eulerian, chebyshev_coeff, circular_eulerian,
    circular_eulerian_bruteforce, secant_numbers, secant_via_eulerian, ChebyshevKind,
};
use cyclozeta::exactnum::rational::{from_bigint, from_biguint, int, pow2, rat, sign_pow};
use cyclozeta::lvalues::{
    dirichlet_l_closed, dirichlet_l_leopoldt, graph_from_l, graph_from_l_values, graph_l,
    graph_l_via_bernoulli, graph_zeta, l_chi4_odd, l_from_graph, mean_l_bruteforce,
    mean_l_closed_form, s_value, spectral_sum, verlinde_zagier, zeta_even, zeta_from_spectral,
    SpecialValue, SpectralSumSpec,
};
use cyclozeta::numoracle::{
    dirichlet_l_series, mercer_integral_mc, special_value_numeric, McConfig,
};

type Outcome = Result<String, String>;
type Grid = Vec<(u32, DirichletCharacter)>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn c1_euler_values() -> Outcome {
    let expected = [
        rat(1, 6),
        rat(1, 90),
        rat(1, 945),
        rat(1, 9450),
        rat(1, 93555),
        rat(691, 638512875),
    ];
    for (i, q) in expected.iter().enumerate() {
        let n = i as u32 + 1;
        let v = zeta_even(n).map_err(|e| e.to_string())?;
        ensure(v == SpecialValue::rational(2 * n as i32, q.clone()), || {
            format!("zeta(2·{n}) = {v}")
        })?;
    }
    Ok("zeta(2..12) match".into())
}

fn c2_corollary() -> Outcome {
    let b = bernoulli_numbers(20);
    for n in 1..=10u32 {
        let v = bernoulli_via_eulerian(n).map_err(|e| e.to_string())?;
        ensure(v == b[2 * n as usize], || format!("B_{} = {v}", 2 * n))?;
    }
    let e = secant_numbers(8);
    for n in 1..=8u32 {
        let v = secant_via_eulerian(n).map_err(|e| e.to_string())?;
        ensure(v == from_bigint(e[2 * n as usize].clone()), || {
            format!("E_{} = {v}", 2 * n)
        })?;
    }
    Ok("B_2..B_20 and E_2..E_16 match".into())
}

fn c3_bruteforce() -> Outcome {
    let mut count = 0;
    for n in 2..=9u32 {
        for l in 1..n as i64 {
            let a = circular_eulerian(n, l).map_err(|e| e.to_string())?;
            let b = circular_eulerian_bruteforce(n, l).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("Ā({n},{l}): {a} vs {b}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} values agree"))
}

fn c4_matrix_identity() -> Outcome {
    for n in 1..=12u32 {
        let r = verify_ac_identity(n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("A·C row {n} fails"))?;
        let a = coeff_a(n).map_err(|e| e.to_string())?;
        let inv = coeff_a_via_inverse(n).map_err(|e| e.to_string())?;
        ensure(*a == inv, || {
            format!("a_{n} differs from the triangular solve")
        })?;
    }
    Ok("n ≤ 12".into())
}

fn c5_b_scaling() -> Outcome {
    for n in 1..=12u32 {
        let a = coeff_a(n).map_err(|e| e.to_string())?;
        let b = coeff_b(n).map_err(|e| e.to_string())?;
        for i in 1..=n as i64 {
            // the second-kind sum, evaluated here independently of the library row
            let u_sum: cyclozeta::exactnum::Rational = (1..=i)
                .map(|l| {
                    let u = chebyshev_coeff((n as i64 - l) as u32, n as i64 - i, ChebyshevKind::U);
                    u * from_biguint(&circular_eulerian(2 * n + 1, l).unwrap())
                        * int(sign_pow(n as i64 - l))
                })
                .sum();
            let scaled = &a[i as usize - 1] * int(i);
            ensure(u_sum == scaled && b[i as usize - 1] == scaled, || {
                format!("b[{n},{i}] = {u_sum}, i·a = {scaled}")
            })?;
        }
    }
    Ok("n ≤ 12".into())
}

fn c6_verlinde() -> Outcome {
    let grid: Vec<(u32, u64)> = (1..=6)
        .flat_map(|g| (2..=20).map(move |n| (g, n)))
        .collect();
    grid.par_iter().try_for_each(|&(g, n)| {
        let a = graph_zeta(g, n).map_err(|e| e.to_string())?;
        let b = verlinde_zagier(g, n).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("V_{g}({n}): {a} vs {b}"))
    })?;
    Ok(format!("{} pairs (g, N)", grid.len()))
}

/// Parity-matched `(n, χ)` pairs for the route-equivalence sweep.
fn l_grid(max_modulus: u64) -> (Grid, Grid) {
    let mut leopoldt = Vec::new();
    let mut graph = Vec::new();
    for n_mod in 1..=max_modulus {
        for chi in characters(n_mod) {
            if chi.is_primitive() {
                for n in 1..=6u32 {
                    if chi.parity() == Parity::of_integer(n as i64) {
                        leopoldt.push((n, chi.clone()));
                    }
                }
            }
            if n_mod >= 2 {
                for k in 1..=5u32 {
                    let s = match chi.parity() {
                        Parity::Even => 2 * k,
                        Parity::Odd => 2 * k + 1,
                    };
                    graph.push((s, chi.clone()));
                }
            }
        }
    }
    (leopoldt, graph)
}

fn c7_route_equivalence() -> Outcome {
    let (leopoldt, graph) = l_grid(20);
    leopoldt.par_iter().try_for_each(|(n, chi)| {
        let a = dirichlet_l_closed(*n, chi).map_err(|e| e.to_string())?;
        let b = dirichlet_l_leopoldt(*n, chi).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("L({n}, χ mod {}) closed ≠ Leopoldt", chi.modulus())
        })
    })?;
    graph.par_iter().try_for_each(|(s, chi)| {
        let a = dirichlet_l_closed(*s, chi).map_err(|e| e.to_string())?;
        let b = l_from_graph(s / 2, chi).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("L({s}, χ mod {}) closed ≠ graph", chi.modulus())
        })
    })?;
    Ok(format!(
        "{} Leopoldt and {} graph comparisons",
        leopoldt.len(),
        graph.len()
    ))
}

fn c8_graph_back_map() -> Outcome {
    let mut round = Vec::new();
    for n_mod in 2..=12u64 {
        for chi in characters(n_mod) {
            for n in 1..=4u32 {
                round.push((n, chi.clone()));
            }
        }
    }
    round.par_iter().try_for_each(|(n, chi)| {
        let twisted = chi.parity() == Parity::Odd;
        let direct = graph_l(*n, chi, twisted).map_err(|e| e.to_string())?;
        let values: Vec<_> = (1..=*n)
            .map(|i| l_from_graph(i, chi))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let back = graph_from_l_values(*n, chi, &values).map_err(|e| e.to_string())?;
        let back_closed = graph_from_l(*n, chi).map_err(|e| e.to_string())?;
        ensure(back == direct && back_closed == direct, || {
            format!("round trip n={n} mod {}", chi.modulus())
        })
    })?;
    let mut bern = Vec::new();
    for n_mod in 2..=16u64 {
        for chi in characters(n_mod).into_iter().filter(|c| c.is_primitive()) {
            for n in 1..=4u32 {
                bern.push((n, chi.clone()));
            }
        }
    }
    bern.par_iter().try_for_each(|(n, chi)| {
        let twisted = chi.parity() == Parity::Odd;
        let a = graph_l_via_bernoulli(*n, chi).map_err(|e| e.to_string())?;
        let b = graph_l(*n, chi, twisted).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("Bernoulli route n={n} mod {}", chi.modulus())
        })
    })?;
    Ok(format!(
        "{} round trips, {} Bernoulli comparisons",
        round.len(),
        bern.len()
    ))
}

fn c9_zeta_from_graphs() -> Outcome {
    for n in 1..=6u32 {
        let z = zeta_even(n).map_err(|e| e.to_string())?;
        for n_mod in 2..=12u64 {
            let v = zeta_from_spectral(n, n_mod).map_err(|e| e.to_string())?;
            ensure(v == z, || format!("zeta({}) from C_{n_mod}: {v}", 2 * n))?;
        }
    }
    Ok("n ≤ 6, N ≤ 12".into())
}

fn c10_means() -> Outcome {
    let mut grid = Vec::new();
    for n_mod in 3..=16u64 {
        for n in 1..=3u32 {
            for parity in [Parity::Even, Parity::Odd] {
                grid.push((n, n_mod, parity));
            }
        }
    }
    grid.par_iter().try_for_each(|&(n, n_mod, parity)| {
        let a = mean_l_closed_form(n, n_mod, parity).map_err(|e| e.to_string())?;
        let b = mean_l_bruteforce(n, n_mod, parity).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("mean n={n} N={n_mod} {parity}: {a} vs {b}")
        })
    })?;
    let v = mean_l_closed_form(1, 100, Parity::Even).map_err(|e| e.to_string())?;
    let x = special_value_numeric(&v);
    ensure((x.re - 1.0).abs() < 0.01 && x.im.abs() < 1e-9, || {
        format!("N=100 mean = {x}")
    })?;
    Ok(format!(
        "{} exact means; N=100 even mean = {:.6}",
        grid.len(),
        x.re
    ))
}

fn c11_numeric_concordance() -> Outcome {
    let (leopoldt, graph) = l_grid(12);
    let mut pairs: Grid = leopoldt.into_iter().chain(graph).collect();
    pairs.sort_by_key(|(n, c)| (c.modulus(), c.exponents().to_vec(), *n));
    pairs.dedup();
    let worst = pairs
        .par_iter()
        .map(|(n, chi)| -> Result<f64, String> {
            let exact =
                special_value_numeric(&dirichlet_l_closed(*n, chi).map_err(|e| e.to_string())?);
            let series = dirichlet_l_series(*n, chi, 1_000_000).map_err(|e| e.to_string())?;
            let err = (exact - series).norm();
            ensure(err < 1e-5, || {
                format!(
                    "L({n}, χ mod {}) = {exact} vs series {series}",
                    chi.modulus()
                )
            })?;
            Ok(err)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    Ok(format!("{} values, max deviation {worst:.2e}", pairs.len()))
}

fn c12_mercer() -> Outcome {
    let mut lines = Vec::new();
    for n in 2..=5u32 {
        for (p, q) in [(1i64, 4u64), (1, 3), (1, 2)] {
            let alpha = 2.0 * PI * p as f64 / q as f64;
            let spec = SpectralSumSpec::new(p, q, n).map_err(|e| e.to_string())?;
            let exact: Complex64 =
                special_value_numeric(&spectral_sum(spec).map_err(|e| e.to_string())?);
            let mc = mercer_integral_mc(n, alpha, McConfig::new(10_000_000, 20_240_601))
                .map_err(|e| e.to_string())?;
            ensure(mc.agrees_with(exact.re, 3.0), || {
                format!(
                    "n={n} α=2π·{p}/{q}: MC {} ± {:.2e} vs {}",
                    mc.estimate.re, mc.stderr_re, exact.re
                )
            })?;
            // constant integrands have zero variance and are excluded from the z-score summary
            if mc.stderr_re > 1e-9 {
                lines.push((mc.estimate.re - exact.re).abs() / mc.stderr_re);
            }
        }
    }
    let worst = lines.iter().copied().fold(0.0f64, f64::max);
    Ok(format!(
        "12 configurations, worst |Δ|/σ = {worst:.2} over {} non-degenerate",
        lines.len()
    ))
}

fn c13_s_values() -> Outcome {
    for n in 1..=10u32 {
        let s = s_value(n).map_err(|e| e.to_string())?;
        let other = if n % 2 == 0 {
            zeta_even(n / 2)
                .map_err(|e| e.to_string())?
                .scale(&(int(1) - from_bigint(pow2(n)).recip()))
        } else {
            l_chi4_odd((n - 1) / 2)
        };
        ensure(s == other, || format!("S({n}) = {s} vs {other}"))?;
    }
    Ok("S(1..10)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("Euler values", Duration::from_secs(1), c1_euler_values),
        (
            "Bernoulli and secant from Eulerian numbers",
            Duration::from_secs(5),
            c2_corollary,
        ),
        (
            "circular Eulerian brute force",
            Duration::from_secs(30),
            c3_bruteforce,
        ),
        (
            "A·C matrix identity",
            Duration::from_secs(5),
            c4_matrix_identity,
        ),
        ("b = i·a scaling", Duration::from_secs(5), c5_b_scaling),
        ("Verlinde numbers", Duration::from_secs(30), c6_verlinde),
        (
            "L-value route equivalence",
            Duration::from_secs(120),
            c7_route_equivalence,
        ),
        (
            "graph-value back-map",
            Duration::from_secs(120),
            c8_graph_back_map,
        ),
        (
            "zeta from graph zeta values",
            Duration::from_secs(30),
            c9_zeta_from_graphs,
        ),
        ("character mean values", Duration::from_secs(60), c10_means),
        (
            "numeric concordance",
            Duration::from_secs(180),
            c11_numeric_concordance,
        ),
        (
            "Monte-Carlo trace integral",
            Duration::from_secs(300),
            c12_mercer,
        ),
        ("S-values", Duration::from_secs(5), c13_s_values),
    ];
    let mut all_ok = true;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= *budget;
        let (status, detail) = match &outcome {
            Ok(d) if within => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over budget {budget:?}")),
            Err(d) => ("FAIL", d.clone()),
        };
        all_ok &= status == "PASS";
        println!(
            "criterion {:>2} {status}: {name} ({detail}) [{:.2}s]",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
