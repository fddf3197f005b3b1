//! Special functions used by the kernels and the asymptotic constants.

mod airy;
mod barnes;
mod ddouble;
mod gamma;
mod zeta;

pub use airy::{airy, airy_asymptotic, airy_series, AiryPair, MAX_ABS_ARG, SERIES_LIMIT};
pub use barnes::log_barnes_g_product;
pub use gamma::{ln_gamma_real, log_gamma, LogGammaValue};
pub use zeta::{zeta_prime_minus_one, ZETA_PRIME_MINUS_ONE};
