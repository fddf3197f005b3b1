//! Left-tail expansions against the Painleve route, plus the right tail,
//! Weibull and transition forms.

use thinned_tw::painleve::AsDistributions;
use thinned_tw::tails::{
    ln_f1_left, ln_f2_left, ln_f4_left, right_tail, transition_ln_f2, v_of_gamma, weibull_limit,
};

fn main() -> thinned_tw::Result<()> {
    let gamma = 0.5;
    let v = v_of_gamma(gamma);
    let d = AsDistributions::new(gamma, -60.0, -10.0, 1e-11)?;
    println!("residual ln F_beta - expansion at gamma = {gamma}");
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "s", "beta 1", "beta 2", "beta 4"
    );
    for s in [-10.0, -20.0, -40.0, -60.0] {
        println!(
            "{s:>6} {:>12.3e} {:>12.3e} {:>12.3e}",
            d.ln_f1(s)? - ln_f1_left(s, v)?.value,
            d.ln_f2(s)? - ln_f2_left(s, v)?.value,
            d.ln_f4(s)? - ln_f4_left(s, v)?.value,
        );
    }

    let e = right_tail(6.0, 1.0, 2)?;
    println!(
        "\nright tail F2(6, 1) ~ {} [{}]",
        e.value, e.claimed_error_order
    );
    println!(
        "Weibull limit at s = -1, beta 2: {}",
        weibull_limit(-1.0, 2)?
    );
    let t = transition_ln_f2(-10.0, 25.0, 0.0)?;
    println!("transition ln F2(-10, v = 25, chi = 0) = {}", t.value);
    Ok(())
}
