//! Characters modulo `N`: generators, parity, conductor and Gauss sums.

use cyclozeta::characters::{characters, gauss_sum, unit_group_structure};
use cyclozeta::exactnum::cyc_to_complex;

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(15u64);
    let structure = unit_group_structure(n);
    println!(
        "(Z/{n})^× generated by {:?} with orders {:?}",
        structure.generators, structure.orders
    );
    for (i, chi) in characters(n).iter().enumerate() {
        let g = cyc_to_complex(&gauss_sum(chi));
        println!(
            "#{i:<2} exponents {:?} order {} {} conductor {:>2} |G| = {:.6}",
            chi.exponents(),
            chi.order(),
            chi.parity(),
            chi.conductor(),
            g.norm()
        );
    }
}
