//! Concrete syntax, trace formats, bundled scenarios and the command-line
//! interface for the cc-Golog projection engine in `ccgolog-core`.

pub mod cli;
pub mod domain_file;
pub mod scenarios;
pub mod sexpr;
pub mod syntax;
pub mod trace;

use ccgolog_core::domain::{expand_macros, FreshNames};
use ccgolog_core::{Domain, DomainError, Program};

pub use domain_file::parse_domain;
pub use sexpr::{ParseError, Pos};
pub use syntax::{parse_condition, parse_program};
pub use trace::{format_trace, Format, Status, TraceDocument};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("domain: {0}")]
    DomainSyntax(ParseError),
    #[error("program: {0}")]
    ProgramSyntax(ParseError),
    #[error("invalid domain: {0}")]
    Domain(DomainError),
    #[error("invalid program: {0}")]
    Program(DomainError),
}

/// Parses and validates a domain and a program, and expands the program
/// into core form. The returned domain includes the hidden flags that the
/// expansion introduced.
pub fn load(domain_text: &str, program_text: &str) -> Result<(Program, Domain), LoadError> {
    let source = parse_domain(domain_text).map_err(LoadError::DomainSyntax)?;
    let domain = Domain::validate(source).map_err(LoadError::Domain)?;
    let surface = parse_program(program_text).map_err(LoadError::ProgramSyntax)?;
    expand_macros(&surface, &domain, &mut FreshNames::new()).map_err(LoadError::Program)
}
