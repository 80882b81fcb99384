//! The chapters of the guide in `book/src`, compiled so their examples run
//! as doc-tests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/order-sets.md")]
pub mod order_sets {}

#[doc = include_str!("../../../book/src/prime-graphs.md")]
pub mod prime_graphs {}

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub mod finite_fields {}

#[doc = include_str!("../../../book/src/linear-actions.md")]
pub mod linear_actions {}

#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}

#[doc = include_str!("../../../book/src/database.md")]
pub mod database {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
