//! Real-argument evaluation of Wright-type special functions: the Wright,
//! generalized Wright, Fox-Wright and multi-parametric Mittag-Leffler
//! functions, by series and by quadrature over integral representations.
//! Also provides sampling probes for complete monotonicity and log-convexity,
//! and a catalog of functional inequalities that can be audited over
//! parameter grids.

pub mod audit;
pub mod error;
pub mod gamma;
pub mod integral;
pub mod probes;
pub mod quadrature;
pub mod series;
pub mod summation;

pub use error::{Error, Result};
pub use series::{
    fox_wright, gen_wright, gen_wright_derivative, mittag_leffler, ml4, wright, wright_derivative, wright_neg,
    Evaluation, FoxWrightSpec, GenWrightParams, Method, MittagLefflerSpec, SeriesConfig, WrightParams,
};
