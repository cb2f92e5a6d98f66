//! Linear and circular Eulerian triangles, with a brute-force check of the circular one.

use cyclozeta::combinatorics::{
    circular_eulerian_bruteforce, circular_permutations, EulerianTable,
};

fn main() -> cyclozeta::Result<()> {
    for circular in [false, true] {
        println!(
            "{} Eulerian numbers",
            if circular { "circular" } else { "linear" }
        );
        for n in 2..=8 {
            let table = EulerianTable::build(n, circular)?;
            let row: Vec<String> = table.values.values().map(|v| v.to_string()).collect();
            println!("  n = {n}: {}  (total {})", row.join(" "), table.total());
        }
    }
    let n = 6;
    let perms = circular_permutations(n)?;
    println!(
        "{} circular arrangements of 1..={n}; first: {:?}",
        perms.len(),
        perms[0].arrangement()
    );
    let counted: Vec<String> = (1..n as i64)
        .map(|l| circular_eulerian_bruteforce(n, l).map(|v| v.to_string()))
        .collect::<cyclozeta::Result<_>>()?;
    println!("by enumeration: {}", counted.join(" "));
    Ok(())
}
