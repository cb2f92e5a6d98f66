//! Averages of `L(s, χ)` over characters of one parity, exact and numeric.

use cyclozeta::characters::Parity;
use cyclozeta::lvalues::{mean_l_bruteforce, mean_l_closed_form};
use cyclozeta::numoracle::special_value_numeric;

fn main() -> cyclozeta::Result<()> {
    for n_mod in [5u64, 8, 12] {
        for parity in [Parity::Even, Parity::Odd] {
            let closed = mean_l_closed_form(1, n_mod, parity)?;
            assert_eq!(closed, mean_l_bruteforce(1, n_mod, parity)?);
            println!("N = {n_mod:>3} {parity}: {closed}");
        }
    }
    for n_mod in [10u64, 100, 1000] {
        let v = mean_l_closed_form(1, n_mod, Parity::Even)?;
        println!(
            "N = {n_mod:>4} even mean of L(2) ≈ {:.8}",
            special_value_numeric(&v).re
        );
    }
    Ok(())
}
