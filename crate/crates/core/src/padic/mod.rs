//! Fixed-precision arithmetic in `Z/p^K`, in the unramified extension `Z_q / p^K`,
//! and in `Q_q` via valuation/unit pairs.

mod context;
mod number;
mod zp;
mod zq;

pub use context::{PrecisionContext, UnramifiedContext};
pub use number::{padic_sum, PadicNumber};
pub(crate) use number::symmetric_lift;
pub use zp::{zp_from_rational, ZpElement};
pub use zq::{naive_lift, teichmueller, ZqElement};
