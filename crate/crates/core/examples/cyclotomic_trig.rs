//! Exact sines, cosines and cosecants in cyclotomic fields.

use cyclozeta::exactnum::{csc, cyc_to_complex, trig_alg, CycNum, TrigKind};

fn main() -> cyclozeta::Result<()> {
    let n = 12;
    for m in 1..n as i64 {
        let s = trig_alg(n, m, TrigKind::Sin)?;
        let c = csc(n, m)?;
        assert_eq!(&s * &c, CycNum::one(1));
        println!(
            "sin({m}π/{n}) ≈ {:+.12}   exact in Q(ζ_{}): {s}",
            cyc_to_complex(&s).re,
            s.conductor()
        );
    }
    let cot = trig_alg(8, 1, TrigKind::Cot)?;
    println!("cot(π/8) = {cot} ≈ {:.12}", cyc_to_complex(&cot).re);
    Ok(())
}
