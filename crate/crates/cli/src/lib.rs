//! Text front end for `derivkit`: a polynomial expression parser, generator
//! word syntax, and the jobs behind the `derivkit` binary.

pub mod job;
pub mod parse;

pub use job::{run, CliError, Command, Inputs, JobSpec, Report};
pub use parse::{
    parse_expr, parse_pair, parse_point, parse_poly, parse_word, print_poly, Expr, ParseError,
};
