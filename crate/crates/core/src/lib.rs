//! Exact symbolic verification engine for the computer-algebra identities
//! around rank-2 symplectic Casimir operators, Maass raising/lowering
//! operators and Sturm's integral transform on the genus-2 Siegel cone.
//!
//! Everything on the symbolic path is exact: Gaussian-rational scalars,
//! multivariate polynomials over a fixed symbol registry, rational
//! functions, Gamma-factor products with affine arguments, PBW-ordered
//! enveloping-algebra elements, skew shift operators and half-space
//! differential expressions. Floating point appears only in the numeric
//! quadrature oracle used to cross-check the Gamma-integral lemmas.

pub mod affine;
pub mod error;
pub mod gamma;
pub mod half;
pub mod integrals;
pub mod matrix;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod registry;
pub mod report;
pub mod reptables;
pub mod scalar;
pub mod shift;
pub mod suites;
pub mod textio;
pub mod uea;

pub use affine::AffineSK;
pub use error::EngineError;
pub use gamma::{GammaLimit, GammaProduct};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use registry::{Registry, Symbol};
pub use report::{CheckResult, CheckStatus, SuiteReport};
pub use scalar::ExactScalar;
