//! Verlinde numbers `Σ_m sin^{−2g}(mπ/N)` as exact rationals, two ways.

use cyclozeta::lvalues::{graph_zeta, verlinde_zagier};

fn main() -> cyclozeta::Result<()> {
    for g in 1..=4 {
        let row: Vec<String> = (2..=8)
            .map(|n| {
                let v = verlinde_zagier(g, n)?;
                assert_eq!(v, graph_zeta(g, n)?);
                Ok(v.to_string())
            })
            .collect::<cyclozeta::Result<_>>()?;
        println!("g = {g}: {}", row.join(", "));
    }
    Ok(())
}
