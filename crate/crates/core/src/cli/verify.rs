//! The cross-route verification sweep behind `cyclozeta verify`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::output::{cycnum_to_json, rational_to_json, special_value_to_json, ReportEntry, Status};
use crate::characters::{characters, DirichletCharacter, Parity};
use crate::coeffs::{coeff_a, coeff_a_via_inverse, coeff_b, verify_ac_identity};
use crate::combinatorics::{
    bernoulli_numbers, bernoulli_via_eulerian, circular_eulerian, circular_eulerian_bruteforce,
    secant_numbers, secant_via_eulerian,
};
use crate::error::Result;
use crate::exactnum::rational::{from_bigint, int};
use crate::lvalues::{
    dirichlet_l_closed, dirichlet_l_leopoldt, graph_from_l, graph_from_l_values, graph_l,
    graph_l_via_bernoulli, graph_zeta, l_chi4_odd, l_from_graph, mean_l_bruteforce,
    mean_l_closed_form, s_value, spectral_sum, verlinde_zagier, zeta_even, zeta_from_spectral,
    SpecialValue, SpectralSumSpec,
};
use crate::numoracle::{dirichlet_l_series, mercer_integral_mc, special_value_numeric, McConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub max_modulus: u64,
    pub mc_samples: u64,
    pub seed: u64,
    pub series_terms: u64,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            max_modulus: 12,
            mc_samples: 1_000_000,
            seed: 2024,
            series_terms: 1_000_000,
            timing: true,
        }
    }
}

/// `(lhs, rhs, pass)` of one check.
type Outcome = (Value, Value, bool);
type CheckFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

struct Check {
    name: &'static str,
    parameters: BTreeMap<String, String>,
    run: CheckFn,
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn exact_values(a: SpecialValue, b: SpecialValue) -> Outcome {
    let pass = a == b;
    (special_value_to_json(&a), special_value_to_json(&b), pass)
}

fn char_params(n: u32, chi: &DirichletCharacter, index: usize) -> BTreeMap<String, String> {
    params(&[
        ("n", n.to_string()),
        ("N", chi.modulus().to_string()),
        ("char", index.to_string()),
    ])
}

fn indexed_characters(n_mod: u64) -> Vec<(usize, DirichletCharacter)> {
    characters(n_mod).into_iter().enumerate().collect()
}

fn combinatorial_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for n in 1..=2 * cfg.max_n {
        out.push(Check {
            name: "bernoulli_via_eulerian",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let a = bernoulli_via_eulerian(n)?;
                let b = bernoulli_numbers(2 * n as usize)[2 * n as usize].clone();
                Ok((rational_to_json(&a), rational_to_json(&b), a == b))
            }),
        });
        out.push(Check {
            name: "secant_via_eulerian",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let a = secant_via_eulerian(n)?;
                let b = from_bigint(secant_numbers(n as usize)[2 * n as usize].clone());
                Ok((rational_to_json(&a), rational_to_json(&b), a == b))
            }),
        });
    }
    for n in 2..=(2 * cfg.max_n + 1).min(9) {
        out.push(Check {
            name: "circular_eulerian_bruteforce",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let a: Vec<_> = (1..n as i64)
                    .map(|l| circular_eulerian(n, l))
                    .collect::<Result<_>>()?;
                let b: Vec<_> = (1..n as i64)
                    .map(|l| circular_eulerian_bruteforce(n, l))
                    .collect::<Result<_>>()?;
                let show = |v: &[num_bigint::BigUint]| {
                    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
                };
                Ok((show(&a), show(&b), a == b))
            }),
        });
    }
    for n in 1..=3 * cfg.max_n {
        out.push(Check {
            name: "ac_identity",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let r = verify_ac_identity(n)?;
                let lhs = r.checks.iter().map(|c| rational_to_json(&c.lhs)).collect();
                let rhs = r.checks.iter().map(|c| rational_to_json(&c.rhs)).collect();
                Ok((Value::Array(lhs), Value::Array(rhs), r.passed()))
            }),
        });
        out.push(Check {
            name: "coeff_a_via_inverse",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let a = coeff_a(n)?;
                let b = coeff_a_via_inverse(n)?;
                let show = |v: &[crate::exactnum::Rational]| {
                    Value::Array(v.iter().map(rational_to_json).collect())
                };
                Ok((show(&a), show(&b), *a == b))
            }),
        });
        out.push(Check {
            name: "coeff_b_scaling",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let a = coeff_a(n)?;
                let b = coeff_b(n)?;
                let scaled: Vec<_> = a
                    .iter()
                    .enumerate()
                    .map(|(i, x)| x * int(i as i64 + 1))
                    .collect();
                let show = |v: &[crate::exactnum::Rational]| {
                    Value::Array(v.iter().map(rational_to_json).collect())
                };
                Ok((show(&b), show(&scaled), *b == scaled))
            }),
        });
    }
}

fn graph_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for g in 1..=cfg.max_n {
        for n_mod in 2..=cfg.max_modulus {
            out.push(Check {
                name: "verlinde",
                parameters: params(&[("g", g.to_string()), ("N", n_mod.to_string())]),
                run: Box::new(move || {
                    let a = graph_zeta(g, n_mod)?;
                    let b = verlinde_zagier(g, n_mod)?;
                    Ok((rational_to_json(&a), rational_to_json(&b), a == b))
                }),
            });
            out.push(Check {
                name: "zeta_from_spectral",
                parameters: params(&[("n", g.to_string()), ("N", n_mod.to_string())]),
                run: Box::new(move || {
                    Ok(exact_values(zeta_from_spectral(g, n_mod)?, zeta_even(g)?))
                }),
            });
        }
    }
}

fn l_value_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    let terms = cfg.series_terms;
    for n_mod in 1..=cfg.max_modulus {
        for (index, chi) in indexed_characters(n_mod) {
            let primitive = chi.is_primitive();
            for n in 1..=cfg.max_n {
                if chi.parity() != Parity::of_integer(n as i64) {
                    continue;
                }
                if primitive {
                    let c = chi.clone();
                    out.push(Check {
                        name: "l_closed_vs_leopoldt",
                        parameters: char_params(n, &chi, index),
                        run: Box::new(move || {
                            Ok(exact_values(
                                dirichlet_l_closed(n, &c)?,
                                dirichlet_l_leopoldt(n, &c)?,
                            ))
                        }),
                    });
                }
                if n_mod >= 2 && n >= 2 {
                    let c = chi.clone();
                    out.push(Check {
                        name: "l_closed_vs_graph",
                        parameters: char_params(n, &chi, index),
                        run: Box::new(move || {
                            Ok(exact_values(
                                dirichlet_l_closed(n, &c)?,
                                l_from_graph(n / 2, &c)?,
                            ))
                        }),
                    });
                }
                let c = chi.clone();
                out.push(Check {
                    name: "l_closed_vs_series",
                    parameters: char_params(n, &chi, index),
                    run: Box::new(move || {
                        let exact = special_value_numeric(&dirichlet_l_closed(n, &c)?);
                        let series = dirichlet_l_series(n, &c, terms)?;
                        let pass = (exact - series).norm() < 1e-5;
                        Ok((
                            json!([exact.re, exact.im]),
                            json!([series.re, series.im]),
                            pass,
                        ))
                    }),
                });
            }
            if n_mod < 2 {
                continue;
            }
            let twisted = chi.parity() == Parity::Odd;
            for n in 1..=cfg.max_n {
                let c = chi.clone();
                out.push(Check {
                    name: "graph_round_trip",
                    parameters: char_params(n, &chi, index),
                    run: Box::new(move || {
                        let direct = graph_l(n, &c, twisted)?;
                        let values: Vec<_> = (1..=n)
                            .map(|i| l_from_graph(i, &c))
                            .collect::<Result<_>>()?;
                        let via_graph = graph_from_l_values(n, &c, &values)?;
                        let via_closed = graph_from_l(n, &c)?;
                        let pass = via_graph == direct && via_closed == direct;
                        Ok((cycnum_to_json(&via_graph), cycnum_to_json(&direct), pass))
                    }),
                });
                if primitive {
                    let c = chi.clone();
                    out.push(Check {
                        name: "graph_via_bernoulli",
                        parameters: char_params(n, &chi, index),
                        run: Box::new(move || {
                            let a = graph_l_via_bernoulli(n, &c)?;
                            let b = graph_l(n, &c, twisted)?;
                            Ok((cycnum_to_json(&a), cycnum_to_json(&b), a == b))
                        }),
                    });
                }
            }
        }
    }
}

fn mean_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for n_mod in 3..=cfg.max_modulus {
        for n in 1..=cfg.max_n.min(3) {
            for parity in [Parity::Even, Parity::Odd] {
                out.push(Check {
                    name: "mean_value",
                    parameters: params(&[
                        ("n", n.to_string()),
                        ("N", n_mod.to_string()),
                        ("parity", parity.to_string()),
                    ]),
                    run: Box::new(move || {
                        Ok(exact_values(
                            mean_l_closed_form(n, n_mod, parity)?,
                            mean_l_bruteforce(n, n_mod, parity)?,
                        ))
                    }),
                });
            }
        }
    }
}

fn spectral_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for n in 1..=2 * cfg.max_n {
        out.push(Check {
            name: "s_value",
            parameters: params(&[("n", n.to_string())]),
            run: Box::new(move || {
                let other = if n % 2 == 0 {
                    zeta_even(n / 2)?
                        .scale(&(int(1) - from_bigint(crate::exactnum::rational::pow2(n)).recip()))
                } else {
                    l_chi4_odd((n - 1) / 2)
                };
                Ok(exact_values(s_value(n)?, other))
            }),
        });
    }
    let samples = cfg.mc_samples;
    let seed = cfg.seed;
    if samples == 0 {
        return;
    }
    for n in 2..=cfg.max_n.clamp(2, 5) {
        for (p, q, label) in [(1i64, 4u64, "pi/2"), (1, 3, "2pi/3"), (1, 2, "pi")] {
            out.push(Check {
                name: "mercer_monte_carlo",
                parameters: params(&[
                    ("n", n.to_string()),
                    ("alpha", label.to_string()),
                    ("samples", samples.to_string()),
                    ("seed", seed.to_string()),
                ]),
                run: Box::new(move || {
                    let spec = SpectralSumSpec::new(p, q, n)?;
                    let exact = special_value_numeric(&spectral_sum(spec)?);
                    let mc = mercer_integral_mc(
                        n,
                        2.0 * PI * p as f64 / q as f64,
                        McConfig::new(samples, seed),
                    )?;
                    let pass = mc.agrees_with(exact.re, 3.0);
                    Ok((
                        json!([mc.estimate.re, mc.estimate.im, mc.stderr_re]),
                        json!([exact.re, exact.im]),
                        pass,
                    ))
                }),
            });
        }
    }
}

/// Runs every cross-route check; entries are grouped by check name in a fixed order.
pub fn run_suite(cfg: &VerifyConfig) -> Vec<ReportEntry> {
    let mut checks = Vec::new();
    combinatorial_checks(cfg, &mut checks);
    graph_checks(cfg, &mut checks);
    l_value_checks(cfg, &mut checks);
    mean_checks(cfg, &mut checks);
    spectral_checks(cfg, &mut checks);
    let mut entries: Vec<ReportEntry> = checks
        .par_iter()
        .map(|check| {
            let start = Instant::now();
            let outcome = (check.run)();
            let elapsed_ms = if cfg.timing {
                start.elapsed().as_secs_f64() * 1e3
            } else {
                0.0
            };
            let (lhs, rhs, pass) =
                outcome.unwrap_or_else(|e| (json!(e.to_string()), Value::Null, false));
            ReportEntry {
                check_name: check.name.to_string(),
                parameters: check.parameters.clone(),
                status: if pass { Status::Pass } else { Status::Fail },
                lhs,
                rhs,
                elapsed_ms,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    entries
}
