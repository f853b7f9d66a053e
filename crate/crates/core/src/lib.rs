pub mod bounds;
pub mod cli;
pub mod degrees;
pub mod expr;
pub mod oracle;
pub mod polytope;
pub mod sample;
