//! Domains shared by unit tests.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;

use crate::domain::{ActionDecl, Cond, DomainSource, EffectRule, Expr};
use crate::model::{Real, TFunction, Value};

pub(crate) fn r(n: i64) -> Real {
    Real::from_integer(n.into())
}

pub(crate) fn s(x: &str) -> String {
    x.to_string()
}

pub(crate) fn decl(name: &str, params: &[&str]) -> ActionDecl {
    ActionDecl { name: s(name), params: params.iter().map(|p| s(p)).collect(), precondition: Cond::True }
}

pub(crate) fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

/// `x = val(robotLoc(s), start(s))` as an expression.
pub(crate) fn current_loc() -> Expr {
    Expr::Val(b(Expr::Old(s("robotLoc"))), b(Expr::NewStart))
}

pub(crate) fn robot1d_source() -> DomainSource {
    DomainSource {
        continuous: vec![(s("robotLoc"), TFunction::constant(r(0)))],
        discrete: vec![],
        actions: vec![decl("startGo", &["v"]), decl("endGo", &[]), decl("say", &["w"])],
        effects: vec![
            EffectRule {
                action: s("startGo"),
                params: vec![s("v")],
                fluent: s("robotLoc"),
                value: Expr::Linear(b(current_loc()), b(Expr::Lit(Value::symbol("v"))), b(Expr::NewStart)),
            },
            EffectRule {
                action: s("endGo"),
                params: vec![],
                fluent: s("robotLoc"),
                value: Expr::Constant(b(current_loc())),
            },
        ],
        procedures: vec![],
        conditions: vec![],
    }
}

/// A clock running at one unit per second from 0 and an always-possible
/// `runBackup`.
pub(crate) fn backup_source() -> DomainSource {
    DomainSource {
        continuous: vec![(s("clock"), TFunction::linear(r(0), r(1), r(0)))],
        actions: vec![decl("runBackup", &[]), decl("a1", &[]), decl("a2", &[])],
        ..DomainSource::default()
    }
}
