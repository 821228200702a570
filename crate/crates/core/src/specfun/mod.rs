//! Error-controlled complex special functions.

mod gamma;
mod logpolar;
mod zeta;

pub use gamma::{log_gamma, log_gamma_real};
pub use logpolar::{wrap_phase, LogPolarComplex};
pub use zeta::{
    default_cutoff, hurwitz_zeta, hurwitz_zeta_with_terms, zeta_em, zeta_em_with_terms,
    SeriesError, BERNOULLI_ORDER, DEFAULT_ERROR_TARGET,
};
