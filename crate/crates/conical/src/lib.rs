// `!(a > b)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// scaled and complex types chain `a.mul(b).add(c)` without operator traits
#![allow(clippy::should_implement_trait)]

pub mod bessel;
pub mod bessel_type;
pub mod dd;
pub mod dispatch;
pub mod elementary;
pub mod error;
pub mod goldens;
pub mod large_tau;
pub mod line;
pub mod negative_x;
pub mod oracle;
pub mod quad;
pub mod recurrence;
pub mod scaled;
pub mod selftest;
