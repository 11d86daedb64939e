//! Basic action theories: fluent declarations, precondition rules, effect
//! rules (successor state axioms in assignment form), the initial situation,
//! procedures and named conditions. Also resolves surface conditions and
//! expands surface programs into core programs.

mod expand;
mod expr;
mod surface;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use expand::{expand_macros, FreshNames};
pub use expr::{ArithOp, Datum, Expr};
pub use surface::{Cond, Surface};

pub(crate) use expr::{compare_values, EvalContext};

use crate::engine::Situation;
use crate::model::{ActionTerm, Formula, PolylineError, TForm, TFunction, Value};
use crate::temporal::{atom_holds, TemporalError, Valuation};

const RESERVED_PREFIX: char = '$';

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    #[error("undeclared fluent `{fluent}` in {context}")]
    UndeclaredFluent { fluent: String, context: String },
    #[error("`{0}` is neither a declared action nor a procedure")]
    UndeclaredAction(String),
    #[error("`{0}` is declared more than once")]
    DuplicateName(String),
    #[error("`{0}` uses the reserved prefix `$`")]
    ReservedName(String),
    #[error("more than one effect rule for action `{action}` on fluent `{fluent}`")]
    DuplicateEffect { action: String, fluent: String },
    #[error("recursive procedures are not supported: {}", Cycle(.0))]
    RecursiveProcedure(Vec<String>),
    #[error("named conditions refer to each other cyclically: {}", Cycle(.0))]
    RecursiveCondition(Vec<String>),
    #[error("`{name}` expects {expected} argument(s), got {found}")]
    ArityMismatch { name: String, expected: usize, found: usize },
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: &'static str, found: String },
    #[error("waitFor condition `{0}` may only compare continuous fluents with reals")]
    NotTemporal(String),
    #[error("division by zero in effect expression")]
    DivisionByZero,
    #[error(transparent)]
    Polyline(#[from] PolylineError),
    #[error(transparent)]
    Temporal(#[from] TemporalError),
}

struct Cycle<'a>(&'a [String]);

impl fmt::Display for Cycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            f.write_str(name)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDecl {
    pub name: String,
    pub params: Vec<String>,
    pub precondition: Cond,
}

/// `fluent(do(action(params), s)) = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectRule {
    pub action: String,
    pub params: Vec<String>,
    pub fluent: String,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Procedure {
    pub name: String,
    pub params: Vec<String>,
    pub body: Surface,
}

/// Unvalidated domain, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DomainSource {
    pub continuous: Vec<(String, TFunction)>,
    pub discrete: Vec<(String, Value)>,
    pub actions: Vec<ActionDecl>,
    pub effects: Vec<EffectRule>,
    pub procedures: Vec<Procedure>,
    pub conditions: Vec<(String, Cond)>,
}

/// An effect rule bound to a concrete action: parameters are substituted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEffect {
    pub fluent: String,
    pub value: Expr,
}

/// A validated basic action theory.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Domain {
    continuous: BTreeMap<String, TFunction>,
    discrete: BTreeMap<String, Value>,
    actions: BTreeMap<String, ActionDecl>,
    effects: BTreeMap<String, Vec<EffectRule>>,
    procedures: BTreeMap<String, Procedure>,
    conditions: BTreeMap<String, Cond>,
}

impl Domain {
    /// Checks declarations and builds the domain. Rejects duplicate names,
    /// undeclared fluents, duplicate (action, fluent) effect rules and
    /// recursive procedures or named conditions.
    pub fn validate(source: DomainSource) -> Result<Domain, DomainError> {
        let mut d = Domain::default();
        let mut names = BTreeSet::new();
        let mut claim = |name: &str| -> Result<(), DomainError> {
            if name.starts_with(RESERVED_PREFIX) {
                return Err(DomainError::ReservedName(name.into()));
            }
            if !names.insert(name.to_string()) {
                return Err(DomainError::DuplicateName(name.into()));
            }
            Ok(())
        };
        for (name, f) in source.continuous {
            claim(&name)?;
            d.continuous.insert(name, f);
        }
        for (name, v) in source.discrete {
            claim(&name)?;
            d.discrete.insert(name, v);
        }
        for (name, c) in source.conditions {
            claim(&name)?;
            d.conditions.insert(name, c);
        }
        for decl in source.actions {
            claim(&decl.name)?;
            d.actions.insert(decl.name.clone(), decl);
        }
        for proc in source.procedures {
            claim(&proc.name)?;
            d.procedures.insert(proc.name.clone(), proc);
        }

        for (name, c) in &d.conditions {
            d.check_cond_names(c, &alloc::format!("condition `{name}`"))?;
        }
        let cond_graph = d
            .conditions
            .iter()
            .map(|(name, c)| {
                let mut refs = Vec::new();
                c.for_each_name(&mut |n| {
                    if d.conditions.contains_key(n) {
                        refs.push(n.to_string());
                    }
                });
                (name.clone(), refs)
            })
            .collect();
        if let Some(cycle) = find_cycle(&cond_graph) {
            return Err(DomainError::RecursiveCondition(cycle));
        }
        for decl in d.actions.values() {
            d.check_cond_names(&decl.precondition, &alloc::format!("precondition of `{}`", decl.name))?;
        }

        for rule in source.effects {
            let decl = d.actions.get(&rule.action).ok_or_else(|| DomainError::UndeclaredAction(rule.action.clone()))?;
            if decl.params.len() != rule.params.len() {
                return Err(DomainError::ArityMismatch {
                    name: rule.action.clone(),
                    expected: decl.params.len(),
                    found: rule.params.len(),
                });
            }
            let context = alloc::format!("effect of `{}` on `{}`", rule.action, rule.fluent);
            if !d.is_fluent(&rule.fluent) {
                return Err(DomainError::UndeclaredFluent { fluent: rule.fluent.clone(), context });
            }
            let mut missing = None;
            rule.value.for_each_old(&mut |f| {
                if missing.is_none() && !d.is_fluent(f) {
                    missing = Some(f.to_string());
                }
            });
            if let Some(fluent) = missing {
                return Err(DomainError::UndeclaredFluent { fluent, context });
            }
            let rules = d.effects.entry(rule.action.clone()).or_default();
            if rules.iter().any(|r| r.fluent == rule.fluent) {
                return Err(DomainError::DuplicateEffect { action: rule.action, fluent: rule.fluent });
            }
            rules.push(rule);
        }

        let mut call_graph = BTreeMap::new();
        for proc in d.procedures.values() {
            let mut calls = Vec::new();
            let mut unknown = None;
            proc.body.for_each_call(&mut |n| {
                if d.procedures.contains_key(n) {
                    calls.push(n.to_string());
                } else if !d.actions.contains_key(n) && unknown.is_none() {
                    unknown = Some(n.to_string());
                }
            });
            if let Some(name) = unknown {
                return Err(DomainError::UndeclaredAction(name));
            }
            call_graph.insert(proc.name.clone(), calls);
        }
        if let Some(cycle) = find_cycle(&call_graph) {
            return Err(DomainError::RecursiveProcedure(cycle));
        }
        Ok(d)
    }

    fn check_cond_names(&self, c: &Cond, context: &str) -> Result<(), DomainError> {
        let mut missing = None;
        c.for_each_name(&mut |n| {
            if missing.is_none() && !self.is_fluent(n) && !self.conditions.contains_key(n) {
                missing = Some(n.to_string());
            }
        });
        match missing {
            Some(fluent) => Err(DomainError::UndeclaredFluent { fluent, context: context.into() }),
            None => Ok(()),
        }
    }

    pub fn is_fluent(&self, name: &str) -> bool {
        self.continuous.contains_key(name) || self.discrete.contains_key(name)
    }

    pub fn is_continuous(&self, name: &str) -> bool {
        self.continuous.contains_key(name)
    }

    pub fn action(&self, name: &str) -> Option<&ActionDecl> {
        self.actions.get(name)
    }

    pub fn actions(&self) -> impl Iterator<Item = &ActionDecl> {
        self.actions.values()
    }

    pub fn procedure(&self, name: &str) -> Option<&Procedure> {
        self.procedures.get(name)
    }

    pub fn effect_rules(&self) -> impl Iterator<Item = &EffectRule> {
        self.effects.values().flatten()
    }

    pub fn initial_valuation(&self) -> Valuation {
        Valuation { continuous: self.continuous.clone(), discrete: self.discrete.clone() }
    }

    /// Declares a hidden boolean flag (initially false) together with its
    /// setter action, as used by the `par` and `prio` encodings.
    pub(crate) fn declare_flag(&mut self, flag: &str, setter: &str) {
        self.discrete.insert(flag.into(), Value::Bool(false));
        self.actions
            .insert(setter.into(), ActionDecl { name: setter.into(), params: Vec::new(), precondition: Cond::True });
        self.effects.insert(
            setter.into(),
            alloc::vec![EffectRule {
                action: setter.into(),
                params: Vec::new(),
                fluent: flag.into(),
                value: Expr::Lit(Value::Bool(true)),
            }],
        );
    }

    pub(crate) fn has_name(&self, name: &str) -> bool {
        self.is_fluent(name)
            || self.actions.contains_key(name)
            || self.procedures.contains_key(name)
            || self.conditions.contains_key(name)
    }

    /// Resolves a surface condition to a formula: comparisons on continuous
    /// fluents become continuous atoms, bare names become boolean flags or
    /// are replaced by the named condition they denote.
    pub fn resolve(&self, c: &Cond) -> Result<Formula, DomainError> {
        Ok(match c {
            Cond::True => Formula::True,
            Cond::False => Formula::False,
            Cond::Ref(name) => {
                if let Some(body) = self.conditions.get(name) {
                    self.resolve(body)?
                } else if let Some(v) = self.discrete.get(name) {
                    if v.as_bool().is_none() {
                        return Err(DomainError::TypeMismatch { expected: "boolean", found: v.kind().into() });
                    }
                    Formula::flag(name.clone())
                } else if self.continuous.contains_key(name) {
                    return Err(DomainError::TypeMismatch { expected: "boolean", found: "time function".into() });
                } else {
                    return Err(DomainError::UndeclaredFluent { fluent: name.clone(), context: "condition".into() });
                }
            }
            Cond::Cmp { op, fluent, value } => {
                if self.continuous.contains_key(fluent) {
                    let bound = value
                        .as_real()
                        .ok_or_else(|| DomainError::TypeMismatch { expected: "real", found: value.kind().into() })?;
                    Formula::Continuous(crate::model::Atom::new(fluent.clone(), *op, bound.clone()))
                } else if let Some(init) = self.discrete.get(fluent) {
                    // checks operator and kind compatibility
                    compare_values(*op, init, value)?;
                    Formula::compare(fluent.clone(), *op, value.clone())
                } else {
                    return Err(DomainError::UndeclaredFluent { fluent: fluent.clone(), context: "condition".into() });
                }
            }
            Cond::And(parts) => fold(self, parts, Formula::True, Formula::and)?,
            Cond::Or(parts) => fold(self, parts, Formula::False, Formula::or)?,
            Cond::Not(inner) => Formula::not(self.resolve(inner)?),
        })
    }

    /// Resolves a `waitFor` condition; only continuous atoms are allowed.
    pub fn resolve_tform(&self, c: &Cond) -> Result<TForm, DomainError> {
        self.resolve(c)?.to_tform().ok_or_else(|| DomainError::NotTemporal(c.to_string()))
    }

    /// Effect rules matching `a`, with parameters bound to its arguments.
    pub fn lookup_effects(&self, a: &ActionTerm) -> Vec<BoundEffect> {
        let ActionTerm::Named { name, args } = a else {
            return Vec::new();
        };
        let Some(rules) = self.effects.get(name) else {
            return Vec::new();
        };
        rules
            .iter()
            .filter(|r| r.params.len() == args.len())
            .map(|r| {
                let env: BTreeMap<String, Value> = r.params.iter().cloned().zip(args.iter().cloned()).collect();
                BoundEffect { fluent: r.fluent.clone(), value: r.value.substitute(&env) }
            })
            .collect()
    }

    /// Evaluates the precondition of a named action in `s`.
    pub fn precondition_holds(&self, name: &str, args: &[Value], s: &Situation) -> Result<bool, DomainError> {
        let decl = self.actions.get(name).ok_or_else(|| DomainError::UndeclaredAction(name.into()))?;
        if decl.params.len() != args.len() {
            return Err(DomainError::ArityMismatch {
                name: name.into(),
                expected: decl.params.len(),
                found: args.len(),
            });
        }
        if decl.precondition == Cond::True {
            return Ok(true);
        }
        let env: BTreeMap<String, Value> = decl.params.iter().cloned().zip(args.iter().cloned()).collect();
        let phi = self.resolve(&decl.precondition.substitute(&env))?;
        eval_formula(&phi, s)
    }
}

/// Right fold of a connective; `unit` for an empty list.
fn fold(
    d: &Domain,
    parts: &[Cond],
    unit: Formula,
    join: fn(Formula, Formula) -> Formula,
) -> Result<Formula, DomainError> {
    let mut resolved = parts.iter().map(|c| d.resolve(c)).collect::<Result<Vec<_>, _>>()?;
    let Some(last) = resolved.pop() else {
        return Ok(unit);
    };
    Ok(resolved.into_iter().rev().fold(last, |acc, f| join(f, acc)))
}

/// `phi[s]`: discrete atoms read from the valuation, continuous atoms
/// sampled at the situation's start time.
pub fn eval_formula(phi: &Formula, s: &Situation) -> Result<bool, DomainError> {
    Ok(match phi {
        Formula::True => true,
        Formula::False => false,
        Formula::Compare { fluent, op, value } => {
            let current = s
                .valuation()
                .discrete
                .get(fluent)
                .ok_or_else(|| DomainError::UndeclaredFluent { fluent: fluent.clone(), context: "formula".into() })?;
            compare_values(*op, current, value)?
        }
        Formula::Continuous(a) => atom_holds(a, s.valuation(), s.start().value())?,
        Formula::And(a, b) => eval_formula(a, s)? && eval_formula(b, s)?,
        Formula::Or(a, b) => eval_formula(a, s)? || eval_formula(b, s)?,
        Formula::Not(a) => !eval_formula(a, s)?,
    })
}

/// Some cycle of `graph`, listed with its first node repeated at the end.
fn find_cycle(graph: &BTreeMap<String, Vec<String>>) -> Option<Vec<String>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }
    fn visit<'a>(
        node: &'a str,
        graph: &'a BTreeMap<String, Vec<String>>,
        marks: &mut BTreeMap<&'a str, Mark>,
        path: &mut Vec<&'a str>,
    ) -> Option<Vec<String>> {
        match marks.get(node) {
            Some(Mark::Done) => return None,
            Some(Mark::Active) => {
                let from = path.iter().position(|n| *n == node).unwrap_or(0);
                let mut cycle: Vec<String> = path[from..].iter().map(|n| n.to_string()).collect();
                cycle.push(node.to_string());
                return Some(cycle);
            }
            None => {}
        }
        marks.insert(node, Mark::Active);
        path.push(node);
        for next in graph.get(node).into_iter().flatten() {
            if let Some(cycle) = visit(next, graph, marks, path) {
                return Some(cycle);
            }
        }
        path.pop();
        marks.insert(node, Mark::Done);
        None
    }
    let mut marks = BTreeMap::new();
    graph.keys().find_map(|k| visit(k, graph, &mut marks, &mut Vec::new()))
}
