//! Text in and out: the expression parser, the canonical printer and
//! presentation files.

pub mod parse;
pub mod presfile;
pub mod print;

pub use parse::{parse_expr, ExprAst};
pub use print::print_expr;
