//! Seeded generators for domains, programs and temporal formulas.

use ccgolog_core::model::{ActionTerm, CmpOp, Formula, Program, Real, TForm, TFunction, Value};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn real(rng: &mut ChaCha8Rng) -> Real {
    Real::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=3).into())
}

pub fn tfunction(rng: &mut ChaCha8Rng) -> TFunction {
    match rng.gen_range(0..4) {
        0 => TFunction::constant(real(rng)),
        1 => TFunction::linear(real(rng), real(rng), real(rng)),
        _ => {
            let mut t = real(rng);
            let breaks = (0..rng.gen_range(1..=4))
                .map(|_| {
                    let point = (t.clone(), real(rng));
                    t += Real::new(rng.gen_range(1i64..=12).into(), rng.gen_range(1i64..=3).into());
                    point
                })
                .collect();
            TFunction::piecewise(breaks, real(rng)).unwrap()
        }
    }
}

fn op(rng: &mut ChaCha8Rng) -> CmpOp {
    CmpOp::ALL[rng.gen_range(0..CmpOp::ALL.len())]
}

pub fn tform(rng: &mut ChaCha8Rng, depth: u32) -> TForm {
    if depth == 0 || rng.gen_bool(0.4) {
        let fluent = if rng.gen_bool(0.5) { "x" } else { "y" };
        return TForm::atom(fluent, op(rng), real(rng));
    }
    match rng.gen_range(0..3) {
        0 => TForm::and(tform(rng, depth - 1), tform(rng, depth - 1)),
        1 => TForm::or(tform(rng, depth - 1), tform(rng, depth - 1)),
        _ => TForm::not(tform(rng, depth - 1)),
    }
}

fn formula(rng: &mut ChaCha8Rng, depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.6) {
        return match rng.gen_range(0..5) {
            0 => Formula::True,
            1 => Formula::False,
            2 => Formula::flag("f"),
            3 => Formula::compare("n", op(rng), Value::int(rng.gen_range(0..4))),
            _ => tform(rng, 1).into(),
        };
    }
    match rng.gen_range(0..3) {
        0 => Formula::and(formula(rng, depth - 1), formula(rng, depth - 1)),
        1 => Formula::or(formula(rng, depth - 1), formula(rng, depth - 1)),
        _ => Formula::not(formula(rng, depth - 1)),
    }
}

fn action(rng: &mut ChaCha8Rng) -> ActionTerm {
    match rng.gen_range(0..8) {
        0 => ActionTerm::named("mvx", vec![Value::Real(real(rng))]),
        1 => ActionTerm::nullary("stop"),
        2 => ActionTerm::named("bump", vec![Value::Real(real(rng))]),
        3 => ActionTerm::nullary("tog"),
        4 => ActionTerm::nullary("inc"),
        5 => ActionTerm::nullary("noop"),
        _ => ActionTerm::WaitFor(tform(rng, 2)),
    }
}

/// A core program of depth at most `depth`.
pub fn program(rng: &mut ChaCha8Rng, depth: u32) -> Program {
    if depth <= 1 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..8) {
            0 => Program::Nil,
            1 => Program::Test(formula(rng, 2)),
            _ => Program::prim(action(rng)),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..9) {
        0..=2 => {
            let a = program(rng, d);
            Program::seq(a, program(rng, d))
        }
        3 => {
            let (a, b) = (program(rng, d), program(rng, d));
            Program::if_(formula(rng, 2), a, b)
        }
        4 => {
            let a = program(rng, d);
            Program::while_(formula(rng, 2), a)
        }
        5 | 6 => {
            let a = program(rng, d);
            Program::try_all(a, program(rng, d))
        }
        _ => {
            let a = program(rng, d);
            Program::with_pol(a, program(rng, d))
        }
    }
}

/// Domain text over continuous `x`, `y` and discrete `f`, `n`.
pub fn domain_text(rng: &mut ChaCha8Rng) -> String {
    format!(
        "(continuous x {})
         (continuous y {})
         (discrete f {})
         (discrete n 0)
         (action mvx (v))
         (action stop ())
         (action bump (k))
         (action tog ())
         (action inc () (poss (< n 3)))
         (action noop ())
         (effect (mvx v) x (linear (val (old x) newStart) v newStart))
         (effect stop x (constant (val (old x) newStart)))
         (effect (bump k) y (piecewise ((newStart (val (old y) newStart))
                                        ((+ newStart 2) (+ (val (old y) newStart) k))) 0))
         (effect tog f (not (old f)))
         (effect inc n (+ (old n) 1))",
        tfunction(rng),
        tfunction(rng),
        rng.gen_bool(0.5),
    )
}
