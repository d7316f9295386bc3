// Each chapter of the guide (and the README) becomes the docs of an empty module, so that
// `cargo test --doc` compiles and runs its code blocks.

#[doc = include_str!("../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../book/src/tensor.md")]
pub mod tensor {}
#[doc = include_str!("../../book/src/symmetries.md")]
pub mod symmetries {}
#[doc = include_str!("../../book/src/helicity.md")]
pub mod helicity {}
#[doc = include_str!("../../book/src/evolution.md")]
pub mod evolution {}
#[doc = include_str!("../../book/src/maxwell.md")]
pub mod maxwell {}
#[doc = include_str!("../../book/src/toy_models.md")]
pub mod toy_models {}
#[doc = include_str!("../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../README.md")]
pub mod readme {}
