//! The Ablowitz-Segur transcendent and F1, F2, F4 from one pair of
//! trajectories.

use thinned_tw::painleve::{solve_as, total_integral, AsDistributions, DEFAULT_TOL};

fn main() -> thinned_tw::Result<()> {
    let gamma = 0.5;
    let tr = solve_as(gamma, -40.0, DEFAULT_TOL)?;
    println!(
        "{} accepted steps from x0 = {} to {}",
        tr.step_count(),
        tr.x0(),
        tr.s_min()
    );
    println!("{:>6} {:>16} {:>16} {:>16}", "x", "u", "H - int u^2", "mu");
    for k in (-40..=10).step_by(5) {
        let x = k as f64;
        let h = tr.hamiltonian(x)? - tr.u2_integral(x)?;
        println!(
            "{x:>6} {:>16.8e} {:>16.2e} {:>16.10}",
            tr.u(x)?,
            h,
            tr.mu(x)?
        );
    }
    println!("mu(-inf) = atanh(sqrt(gamma)) = {}", total_integral(gamma));

    let d = AsDistributions::new(gamma, -8.0, 4.0, DEFAULT_TOL)?;
    println!("\n{:>6} {:>14} {:>14} {:>14}", "s", "F1", "F2", "F4");
    for k in -8..=4 {
        let s = k as f64;
        println!(
            "{s:>6} {:>14.10} {:>14.10} {:>14.10}",
            d.f(1, s)?,
            d.f(2, s)?,
            d.f(4, s)?
        );
    }
    Ok(())
}
