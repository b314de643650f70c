pub mod docs;
mod error;
pub mod functions;
pub mod generalized;
pub mod identities;
pub mod integral;
mod kernel;
pub mod output;
pub mod quadrature;
pub mod special;
pub mod transforms;

pub use docs::{render_catalog, write_docs, Document};
pub use error::{Error, Result};
pub use functions::{
    bateman_k, bateman_k_quadrature, derivative_nu, derivative_x, havelock_h, havelock_h_quadrature,
    special_value_at_zero, FunctionId, Order, OrderClass,
};
pub use generalized::{bateman_k_gen, havelock_h_gen, s_polynomial, GenParams, SPolynomial};
pub use identities::{
    list_identities, registry, run_suite, verify_identity, Identity, IdentityReport, Residual, Status, SuiteReport,
    Tier, Totals,
};
pub use integral::{bessel_integral_ji, ki, ki_quadrature, ki_sequence, ki_special_zero, KiOrder};
pub use output::{csv_row, format_number, CSV_HEADER};
pub use quadrature::{EvalResult, Method, QuadConfig};
pub use transforms::{
    initial_final_value_check, laplace_closed, laplace_numeric, laplace_subject, transform, transforms, LimitReport,
    TransformEntry,
};
