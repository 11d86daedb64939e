use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{TForm, Value};

/// Prefix reserved for names generated during macro expansion.
pub(crate) const HIDDEN_PREFIX: char = '$';

/// A primitive action term. Equality is unique-names equality: same name
/// and same arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ActionTerm {
    Named {
        name: String,
        args: Vec<Value>,
    },
    /// The time-advancing action; its argument is a temporal formula.
    WaitFor(TForm),
}

impl ActionTerm {
    pub fn named(name: impl Into<String>, args: Vec<Value>) -> Self {
        ActionTerm::Named { name: name.into(), args }
    }

    pub fn nullary(name: impl Into<String>) -> Self {
        ActionTerm::named(name, Vec::new())
    }

    pub fn name(&self) -> &str {
        match self {
            ActionTerm::Named { name, .. } => name,
            ActionTerm::WaitFor(_) => "waitFor",
        }
    }

    pub fn is_wait_for(&self) -> bool {
        matches!(self, ActionTerm::WaitFor(_))
    }

    /// Actions introduced by the `par`/`prio` encodings.
    pub fn is_hidden(&self) -> bool {
        matches!(self, ActionTerm::Named { name, .. } if name.starts_with(HIDDEN_PREFIX))
    }

    /// Rendering used in traces: `startGo(50)`, `endGo`, `waitFor(= robotLoc 1000)`.
    pub fn label(&self) -> Label<'_> {
        Label(self)
    }
}

/// Program-syntax rendering: `endGo`, `(startGo 50)`, `(waitFor (= clock 8))`.
impl fmt::Display for ActionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionTerm::Named { name, args } if args.is_empty() => f.write_str(name),
            ActionTerm::Named { name, args } => {
                write!(f, "({name}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
            ActionTerm::WaitFor(phi) => write!(f, "(waitFor {phi})"),
        }
    }
}

pub struct Label<'a>(&'a ActionTerm);

impl fmt::Display for Label<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ActionTerm::Named { name, args } if args.is_empty() => f.write_str(name),
            ActionTerm::Named { name, args } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            // strip the outer parentheses of the condition
            ActionTerm::WaitFor(phi) => {
                let text = alloc::format!("{phi}");
                let inner = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(&text);
                write!(f, "waitFor({inner})")
            }
        }
    }
}
