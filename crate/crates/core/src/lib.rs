pub mod analysis;
pub mod cumulants;
pub mod error;
pub mod io;
pub mod lie;
pub mod path;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{rat, Rational, Scalar};
pub use tensor::{shuffle, TensorSeries, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/tensor-algebra.md")]
    struct TensorAlgebra;
    #[doc = include_str!("../../../book/src/lie-and-bch.md")]
    struct LieAndBch;
    #[doc = include_str!("../../../book/src/paths.md")]
    struct Paths;
    #[doc = include_str!("../../../book/src/vanishing.md")]
    struct Vanishing;
    #[doc = include_str!("../../../book/src/cumulants.md")]
    struct Cumulants;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
