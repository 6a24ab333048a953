pub mod asymptotics;
pub mod cfrac_engine;
pub mod error;
pub mod hyp2f1_core;
pub mod integral_rep;
pub mod nevanlinna;
pub mod poly;
pub mod scalar;
pub mod shift_engine;

pub use error::{Error, Result};
pub use num_complex::Complex64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergeometric.md")]
    mod hypergeometric {}
    #[doc = include_str!("../../../book/src/shifts.md")]
    mod shifts {}
    #[doc = include_str!("../../../book/src/fractions.md")]
    mod fractions {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/nevanlinna.md")]
    mod nevanlinna {}
    #[doc = include_str!("../../../book/src/integral.md")]
    mod integral {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
