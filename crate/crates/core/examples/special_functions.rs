//! Airy function, complex log-gamma and the Barnes-G product behind the
//! left-tail constants.

use num_complex::Complex64;
use thinned_tw::specfun::{airy, log_barnes_g_product, log_gamma, zeta_prime_minus_one};

fn main() -> thinned_tw::Result<()> {
    println!("{:>8} {:>24} {:>24}", "x", "Ai(x)", "Ai'(x)");
    for x in [-20.0, -5.0, 0.0, 2.5, 10.0, 50.0] {
        let p = airy(x)?;
        println!("{x:>8} {:>24.16e} {:>24.16e}", p.ai, p.aip);
    }

    let z = Complex64::new(0.0, -1.0 / (2.0 * std::f64::consts::PI));
    let lg = log_gamma(z)?;
    println!(
        "\nln Gamma(-i/2pi) = {} (arg on the continuous branch {})",
        lg.value,
        lg.arg()
    );

    println!("zeta'(-1) = {}", zeta_prime_minus_one());
    for v in [0.0, 0.5, 1.0, 5.0] {
        println!(
            "ln G(1 + iv/2pi) G(1 - iv/2pi) at v = {v}: {}",
            log_barnes_g_product(v)?
        );
    }
    Ok(())
}
