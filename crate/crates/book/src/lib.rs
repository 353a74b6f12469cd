//! The guide in `book/`, compiled as documentation so that every Rust
//! snippet in it runs under `cargo test --doc`. One module per chapter keeps
//! doc-test names pointing at their chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/palindromization.md")]
pub mod palindromization {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}

#[doc = include_str!("../../../book/src/extremal.md")]
pub mod extremal {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
