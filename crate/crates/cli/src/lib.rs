//! Script language and session driver for `R(I)_{a,b}` computations.

pub mod ast;
pub mod parser;
pub mod session;

pub use ast::Command;
pub use parser::{parse_script, ParseError};
pub use session::{Config, Reply, Session, Status};
