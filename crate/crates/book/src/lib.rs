//! The guide under `book/`, compiled so that its code samples run as
//! doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/tilings-and-paths.md")]
pub mod tilings_and_paths {}

#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}

#[doc = include_str!("../../../book/src/pfaffians.md")]
pub mod pfaffians {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/product-formulas.md")]
pub mod product_formulas {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
