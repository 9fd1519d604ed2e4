//! Certified polynomial bounds for Wilker–Cusa–Huygens-type trigonometric
//! expressions: exact rational coefficient sequences, alternating-series
//! sandwich bounds, endpoint-corrected bounds for the two positive-series
//! targets, and interval-arithmetic certification on (0, pi/2).

pub mod bernoulli;
pub mod consts;
pub mod enclosure;
pub mod error;
pub mod functions;
pub mod leibniz;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod series;
pub mod verify;
pub mod wd;

pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use functions::{enclose, FnId};
pub use leibniz::{alternating_bounds, check_hypothesis, error_bound, BoundPair, HypothesisReport, Wrapper};
pub use oracle::{oracle_series, OracleExpr};
pub use poly::{DensePoly, EvenPolynomial, RationalFunction};
pub use rational::Rational;
pub use series::{CoeffSeq, SeriesId, SignMode};
pub use verify::{
    bercu_check, certify_bound, certify_positive, certify_positive_poly, certify_wd_bound,
    CertStatus, Certificate, EpsilonPolicy, VerifyOptions, WdSide,
};
pub use wd::{remainder_table, wd_bounds, RemainderRow, WdBound, WdTheorem};
