//! Twisted and untwisted cycle-graph `L`-values and the map back from Dirichlet `L`-values.

use cyclozeta::characters::{characters, Parity};
use cyclozeta::lvalues::{graph_from_l, graph_l, graph_l_via_bernoulli, zeta_from_spectral};

fn main() -> cyclozeta::Result<()> {
    for chi in characters(7) {
        let twisted = chi.parity() == Parity::Odd;
        for n in 1..=3 {
            let direct = graph_l(n, &chi, twisted)?;
            assert_eq!(direct, graph_from_l(n, &chi)?);
            if chi.is_primitive() {
                assert_eq!(direct, graph_l_via_bernoulli(n, &chi)?);
            }
            println!(
                "χ {:?} n = {n} twisted = {twisted}: {direct}",
                chi.exponents()
            );
        }
    }
    println!("zeta(4) from C_9: {}", zeta_from_spectral(2, 9)?);
    Ok(())
}
