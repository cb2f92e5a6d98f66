//! Euler's values `ζ(2n)` as exact multiples of `π^{2n}`, next to their floats.

use cyclozeta::lvalues::zeta_even;
use cyclozeta::numoracle::special_value_numeric;

fn main() -> cyclozeta::Result<()> {
    for n in 1..=8 {
        let v = zeta_even(n)?;
        println!(
            "zeta({:>2}) = {:<28} ≈ {:.15}",
            2 * n,
            v.to_string(),
            special_value_numeric(&v).re
        );
    }
    Ok(())
}
