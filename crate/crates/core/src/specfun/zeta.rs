/// ζ'(-1) = 1/12 - ln A, with A the Glaisher–Kinkelin constant.
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165_421_143_700_450_93;

pub fn zeta_prime_minus_one() -> f64 {
    ZETA_PRIME_MINUS_ONE
}
