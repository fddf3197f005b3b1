//! Probabilities of exactly m Airy points in (s, inf), and the thinned
//! determinant recovered from them.

use thinned_tw::fredholm::{
    counting_distribution, default_order, ln_f2_determinant, ThinningParams,
};

fn main() -> thinned_tw::Result<()> {
    for s in [-6.0, -4.0, -2.0, 0.0] {
        let order = default_order(s);
        let dist = counting_distribution(s, 8, order)?;
        let probs: Vec<String> = dist
            .probabilities
            .iter()
            .map(|p| format!("{p:.3e}"))
            .collect();
        println!("s = {s:>4}: E2(0..=8) = [{}]", probs.join(", "));
        let det = ln_f2_determinant(ThinningParams::new(s, 0.3)?, order)?.exp();
        println!(
            "          sum E2(m) 0.7^m = {:.15}, F2(s, 0.3) = {det:.15}",
            dist.thinned_sum(0.3)
        );
    }
    Ok(())
}
