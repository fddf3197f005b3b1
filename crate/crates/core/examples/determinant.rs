//! F2(s, gamma) as a Nystrom-discretized Fredholm determinant, with the
//! resolvent derivatives.

use thinned_tw::fredholm::{
    default_order, ln_f2_determinant, resolvent_diagnostics, ThinningParams,
};

fn main() -> thinned_tw::Result<()> {
    println!(
        "{:>6} {:>22} {:>22} {:>22}",
        "s", "gamma = 1", "gamma = 0.5", "gamma = 0.1"
    );
    for k in -8..=4 {
        let s = k as f64;
        let row = [1.0, 0.5, 0.1]
            .iter()
            .map(|&g| Ok(ln_f2_determinant(ThinningParams::new(s, g)?, default_order(s))?.exp()))
            .collect::<thinned_tw::Result<Vec<_>>>()?;
        println!(
            "{s:>6} {:>22.15e} {:>22.15e} {:>22.15e}",
            row[0], row[1], row[2]
        );
    }

    // Convergence in the number of quadrature nodes.
    let p = ThinningParams::new(-6.0, 0.7)?;
    for order in [16, 32, 64, 128, 256] {
        println!(
            "order {order:>4}: ln F2(-6, 0.7) = {:.16}",
            ln_f2_determinant(p, order)?
        );
    }

    let r = resolvent_diagnostics(p, default_order(p.s))?;
    println!(
        "d/ds ln F2 = {:.12}, d/dgamma ln F2 = {:.12}",
        r.dlnf2_ds, r.dlnf2_dgamma
    );
    Ok(())
}
