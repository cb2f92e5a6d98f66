//! The triangular coefficient matrices `A`, `C` and their product.

use cyclozeta::coeffs::{CoeffFamily, CoeffMatrix};

fn main() -> cyclozeta::Result<()> {
    let n = 5;
    let a = CoeffMatrix::build(n, CoeffFamily::A)?;
    let c = CoeffMatrix::build(n, CoeffFamily::C)?;
    for (name, m) in [("A", &a), ("C", &c)] {
        println!("{name}:");
        for k in 1..=n {
            let row: Vec<String> = (1..=k).map(|i| m.get(k, i).to_string()).collect();
            println!("  {}", row.join("  "));
        }
    }
    println!("A·C:");
    for row in a.product(&c) {
        println!(
            "  {}",
            row.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join("  ")
        );
    }
    Ok(())
}
