//! Floating-point oracles, independent of the exact machinery: truncated
//! Dirichlet, Hurwitz and spectral series, the Green function of the twisted
//! circle operator, and a seeded Monte-Carlo estimate of the `n`-fold trace integral.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::lvalues::SpecialValue;

/// `χ(m)` as a complex double for `m = 0..N−1`.
fn character_table(chi: &DirichletCharacter) -> Vec<Complex64> {
    let r = chi.order() as f64;
    (0..chi.modulus() as i64)
        .map(|m| match chi.exponent_at(m) {
            Some(j) => Complex64::from_polar(1.0, TAU * j as f64 / r),
            None => Complex64::new(0.0, 0.0),
        })
        .collect()
}

/// `Σ_{k ≤ K} χ(k) k^{−n}` with `K = N·⌈terms/N⌉`, plus the midpoint integral of the
/// tail over each residue class.
pub fn dirichlet_l_series(n: u32, chi: &DirichletCharacter, terms: u64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    if n == 1 && chi.is_principal() {
        return Err(Error::Divergent("L(1, principal character)".into()));
    }
    let n_mod = chi.modulus();
    let table = character_table(chi);
    let periods = terms.div_ceil(n_mod).max(1);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=n_mod {
        let c = table[(m % n_mod) as usize];
        if c.norm_sqr() == 0.0 {
            continue;
        }
        // smallest terms first
        let mut class = 0.0f64;
        for j in (0..periods).rev() {
            class += ((j * n_mod + m) as f64).powi(-(n as i32));
        }
        // tail Σ_{j ≥ J} (jN + m)^{−n} ≈ ∫_{J−1/2}^∞ (xN + m)^{−n} dx
        let start = (periods as f64 - 0.5) * n_mod as f64 + m as f64;
        let tail = if n == 1 {
            -start.ln() / n_mod as f64
        } else {
            start.powi(1 - n as i32) / (n_mod as f64 * (n - 1) as f64)
        };
        sum += c * (class + tail);
    }
    Ok(sum)
}

/// `ζ(n, a) ≈ Σ_{k<K} (k+a)^{−n} + (K+a)^{1−n}/(n−1)`; absolute error below `(K+a)^{−n}`.
pub fn hurwitz_zeta_series(n: u32, a: f64, terms: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument("Hurwitz series needs n ≥ 2".into()));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::InvalidArgument(format!("a = {a} outside (0, 1]")));
    }
    let mut sum = 0.0;
    for k in (0..terms).rev() {
        sum += (k as f64 + a).powi(-(n as i32));
    }
    Ok(sum + (terms as f64 + a).powi(1 - n as i32) / (n - 1) as f64)
}

/// `Σ_{k=−K}^{K} (2kπ + α)^{−n}`.
pub fn spectral_sum_series(n: u32, alpha: f64, k_max: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    if (alpha / TAU).fract() == 0.0 {
        return Err(Error::Divergent(format!("α = {alpha} is a multiple of 2π")));
    }
    let e = -(n as i32);
    let mut sum = 0.0;
    for k in (1..=k_max).rev() {
        let shift = TAU * k as f64;
        sum += (alpha + shift).powi(e) + (alpha - shift).powi(e);
    }
    Ok(sum + alpha.powi(e))
}

/// `G(s, t) = e^{√−1 α(t−s)} e^{∓√−1 α/2} / (2 sin(α/2))`, upper sign for `s < t`.
pub fn green_function(s: f64, t: f64, alpha: f64) -> Result<Complex64> {
    if s == t {
        return Err(Error::OnDiagonal);
    }
    let half = if s < t { -alpha / 2.0 } else { alpha / 2.0 };
    let phase = Complex64::from_polar(1.0, alpha * (t - s) + half);
    Ok(phase / (2.0 * (alpha / 2.0).sin()))
}

/// `(G(t+ε, t) + G(t−ε, t))/2`, the diagonal value of the kernel.
pub fn green_diagonal_average(t: f64, alpha: f64, eps: f64) -> Result<Complex64> {
    Ok((green_function(t + eps, t, alpha)? + green_function(t - eps, t, alpha)?) / 2.0)
}

/// `∫_0^1 G(t, t) dt` by the midpoint rule on `points` nodes, the `n = 1` trace.
pub fn mercer_trace_quadrature(alpha: f64, points: u32, eps: f64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..points {
        let t = (i as f64 + 0.5) / points as f64;
        acc += green_diagonal_average(t, alpha, eps)?;
    }
    Ok(acc / points as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub batch_count: u64,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig {
            samples,
            seed,
            batch_count: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: Complex64,
    /// Standard errors of the real and imaginary parts, from batch means.
    pub stderr_re: f64,
    pub stderr_im: f64,
    pub samples: u64,
}

/// Absolute slack for float summation, relevant when the integrand is constant and
/// the batch variance vanishes.
pub const MC_ROUNDING_FLOOR: f64 = 1e-12;

impl McEstimate {
    /// `|Re(estimate) − target| ≤ k·stderr + MC_ROUNDING_FLOOR`.
    pub fn agrees_with(&self, target: f64, k_sigma: f64) -> bool {
        (self.estimate.re - target).abs() <= k_sigma * self.stderr_re + MC_ROUNDING_FLOOR
    }
}

fn mercer_batch(n: usize, alpha: f64, samples: u64, seed: u64, batch: u64) -> Complex64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    let mut x = vec![0.0f64; n];
    let mut acc = Complex64::new(0.0, 0.0);
    for _ in 0..samples {
        loop {
            x.iter_mut().for_each(|v| *v = rng.gen::<f64>());
            let distinct = (0..n).all(|i| x[i] != x[(i + 1) % n]);
            if distinct {
                break;
            }
        }
        let mut prod = Complex64::new(1.0, 0.0);
        for i in 0..n {
            prod *=
                green_function(x[i], x[(i + 1) % n], alpha).expect("resampled off the diagonal");
        }
        acc += prod;
    }
    acc
}

/// Monte-Carlo mean of `G(x_1, x_2) G(x_2, x_3) ⋯ G(x_n, x_1)` over `[0,1]^n`.
///
/// Batch `b` draws from the ChaCha8 stream `b` of the seed, so the estimate depends
/// only on `cfg`.
pub fn mercer_integral_mc(n: u32, alpha: f64, cfg: McConfig) -> Result<McEstimate> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "Monte-Carlo trace needs n ≥ 2".into(),
        ));
    }
    if (alpha / TAU).fract() == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "sin(α/2) = 0 at α = {alpha}"
        )));
    }
    if cfg.samples == 0 || cfg.batch_count == 0 || cfg.batch_count > cfg.samples {
        return Err(Error::InvalidArgument(
            "need 1 ≤ batch_count ≤ samples".into(),
        ));
    }
    let base = cfg.samples / cfg.batch_count;
    let extra = cfg.samples % cfg.batch_count;
    let batches: Vec<(u64, Complex64)> = (0..cfg.batch_count)
        .into_par_iter()
        .map(|b| {
            let size = base + u64::from(b < extra);
            (size, mercer_batch(n as usize, alpha, size, cfg.seed, b))
        })
        .collect();
    let total: Complex64 = batches.iter().map(|(_, s)| s).sum();
    let estimate = total / cfg.samples as f64;
    let (mut var_re, mut var_im) = (0.0, 0.0);
    for (size, s) in &batches {
        let mean = s / *size as f64 - estimate;
        var_re += mean.re * mean.re;
        var_im += mean.im * mean.im;
    }
    let b = cfg.batch_count as f64;
    let denom = if b > 1.0 { b * (b - 1.0) } else { 1.0 };
    Ok(McEstimate {
        estimate,
        stderr_re: (var_re / denom).sqrt(),
        stderr_im: (var_im / denom).sqrt(),
        samples: cfg.samples,
    })
}

/// `coeff·π^k` as a complex double.
pub fn special_value_numeric(v: &SpecialValue) -> Complex64 {
    v.coeff.to_complex() * PI.powi(v.pi_power)
}
