pub mod arith;
pub mod cli;
pub mod coord;
pub mod digits;
pub mod grid;
pub mod lex;
pub mod plot;
pub mod queens;
pub mod seq;
pub mod tag;
