//! Monte-Carlo estimate of the `n`-fold Green-kernel trace against the exact spectral sum.

use cyclozeta::lvalues::{spectral_sum, SpectralSumSpec};
use cyclozeta::numoracle::{mercer_integral_mc, special_value_numeric, McConfig};

fn main() -> cyclozeta::Result<()> {
    let cfg = McConfig::new(1_000_000, 7);
    for (p, q) in [(1, 4), (1, 3), (1, 2)] {
        for n in 2..=5 {
            let spec = SpectralSumSpec::new(p, q, n)?;
            let exact = special_value_numeric(&spectral_sum(spec)?).re;
            let mc = mercer_integral_mc(n, spec.alpha(), cfg)?;
            println!(
                "α = 2π·{p}/{q} n = {n}: exact {exact:.8} MC {:.8} ± {:.1e} ({})",
                mc.estimate.re,
                mc.stderr_re,
                if mc.agrees_with(exact, 3.0) {
                    "within 3σ"
                } else {
                    "outside 3σ"
                }
            );
        }
    }
    Ok(())
}
