//! Library side of the `relsub` subcommands: report types and text rendering.

pub mod demo;
pub mod solve;

pub use demo::{demo_susy, demo_susy_rest, DemoReport, DemoRow};
pub use solve::{parse_batch, solve, Equation, Solution, SolveInput, SolveReport};
