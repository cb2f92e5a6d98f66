//! One `L`-value three ways: Eulerian closed form, generalized Bernoulli numbers,
//! cycle-graph values, plus a truncated series.

use cyclozeta::characters::{characters, Parity};
use cyclozeta::lvalues::{dirichlet_l_closed, dirichlet_l_leopoldt, l_from_graph};
use cyclozeta::numoracle::{dirichlet_l_series, special_value_numeric};

fn main() -> cyclozeta::Result<()> {
    for chi in characters(5).into_iter().filter(|c| !c.is_principal()) {
        let n = match chi.parity() {
            Parity::Even => 2,
            Parity::Odd => 3,
        };
        let closed = dirichlet_l_closed(n, &chi)?;
        let leopoldt = dirichlet_l_leopoldt(n, &chi)?;
        let graph = l_from_graph(n / 2, &chi)?;
        assert!(closed == leopoldt && closed == graph);
        let series = dirichlet_l_series(n, &chi, 1_000_000)?;
        println!(
            "χ {:?} ({}): L({n}) = {closed}",
            chi.exponents(),
            chi.parity()
        );
        println!(
            "   ≈ {:.12}, series {:.12}",
            special_value_numeric(&closed),
            series
        );
    }
    Ok(())
}
