//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod interleave;
mod random;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use ccgolog::cli::{bench, EXIT_BLOCKED};
use ccgolog::scenarios::{self, Scenario};
use ccgolog::{load, parse_program, TraceDocument};
use ccgolog_core::domain::{eval_formula, expand_macros, Cond, Datum, FreshNames, Surface};
use ccgolog_core::engine::{replay, BlockReason, Outcome};
use ccgolog_core::model::{print_program, ActionTerm, CmpOp, Program, Real, TForm, TFunction, TimePoint, Value};
use ccgolog_core::temporal::{holds, ltp, solve_tform, Valuation};
use ccgolog_core::{project, Domain, ProjectionResult};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use interleave::{interleave, Step};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ms(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

fn q(n: i64) -> Real {
    Real::from_integer(n.into())
}

fn run(s: Scenario) -> Result<(ProjectionResult, Domain), String> {
    let (program, domain) = load(s.domain, s.program).map_err(|e| e.to_string())?;
    let result = project(&program, &domain, 100_000).map_err(|e| e.to_string())?;
    Ok((result, domain))
}

fn worked_entailment() -> Verdict {
    let started = Instant::now();
    let (result, _) = run(scenarios::ROBOT1D)?;
    let elapsed = started.elapsed();
    let Outcome::Completed { situation } = &result.outcome else {
        return Err(format!("not completed: {:?}", result.outcome));
    };
    ensure(situation.start() == &TimePoint::from(20), || format!("start = {}", situation.start()))?;
    let loc = &situation.valuation().continuous["robotLoc"];
    ensure(loc == &TFunction::constant(q(1000)), || format!("robotLoc = {loc}"))?;
    let times: Vec<_> = result.trace.iter().map(|e| e.time.clone()).collect();
    ensure(times == [0, 20, 20].map(TimePoint::from), || format!("times {times:?}"))?;
    ensure(elapsed < Duration::from_millis(10), || format!("took {}", ms(elapsed)))?;
    Ok(format!("start = 20, robotLoc = (constant 1000), exact; {}", ms(elapsed)))
}

fn backup_uniqueness() -> Verdict {
    let (program, domain) = load(scenarios::BACKUP.domain, scenarios::BACKUP.program).map_err(|e| e.to_string())?;
    let wait8 = ActionTerm::WaitFor(TForm::atom("clock", CmpOp::Eq, q(8)));
    let expected = vec![(TimePoint::from(8), wait8), (TimePoint::from(8), ActionTerm::nullary("runBackup"))];
    let mut slowest = Duration::ZERO;
    for run in 0..100 {
        let started = Instant::now();
        let result = project(&program, &domain, 1000).map_err(|e| e.to_string())?;
        slowest = slowest.max(started.elapsed());
        let trace: Vec<_> = result.trace.iter().map(|e| (e.time.clone(), e.action.clone())).collect();
        ensure(result.is_completed() && trace == expected, || format!("run {run}: {trace:?}"))?;
        ensure(!trace.iter().any(|(t, _)| *t == TimePoint::from(20)), || format!("run {run} reached 20"))?;
    }
    ensure(slowest < Duration::from_millis(10), || format!("slowest run {}", ms(slowest)))?;
    Ok(format!("100/100 runs gave [waitFor(= clock 8)@8, runBackup@8]; slowest {}", ms(slowest)))
}

/// Situation after `a` computed from the effect rules directly.
fn oracle_step(d: &Domain, start: &TimePoint, v: &Valuation, a: &ActionTerm) -> Result<(TimePoint, Valuation), String> {
    match a {
        ActionTerm::WaitFor(phi) => {
            let t = ltp(phi, v, start).map_err(|e| e.to_string())?.ok_or("waitFor without least time point")?;
            Ok((t, v.clone()))
        }
        ActionTerm::Named { name, args } => {
            let mut next = v.clone();
            for rule in d.effect_rules().filter(|r| &r.action == name) {
                let env: BTreeMap<_, _> = rule.params.iter().cloned().zip(args.iter().cloned()).collect();
                match rule.value.substitute(&env).evaluate(v, start.value()).map_err(|e| e.to_string())? {
                    Datum::Function(f) => {
                        next.continuous.insert(rule.fluent.clone(), f);
                    }
                    Datum::Value(x) => {
                        next.discrete.insert(rule.fluent.clone(), x);
                    }
                }
            }
            Ok((start.clone(), next))
        }
    }
}

fn monotone_asap_traces() -> Verdict {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let (mut entries, mut waits, mut blocked) = (0usize, 0usize, 0usize);
    let pairs = 1000;
    for case in 0..pairs {
        let domain_text = random::domain_text(&mut rng);
        let program = random::program(&mut rng, 6);
        let text = print_program(&program);
        let (parsed, domain) = load(&domain_text, &text).map_err(|e| format!("case {case}: {e}"))?;
        ensure(parsed == program && program.depth() <= 6, || format!("case {case}: parse mismatch"))?;
        let result = project(&program, &domain, 300).map_err(|e| format!("case {case}: {e}"))?;
        blocked += usize::from(matches!(result.outcome, Outcome::Blocked { .. }));
        let mut start = TimePoint::zero();
        let mut v = domain.initial_valuation();
        for (k, e) in result.trace.iter().enumerate() {
            let fail = |what: &str| format!("case {case}, entry {k} ({}): {what}\n{text}", e.action.label());
            let (next_start, next_v) = oracle_step(&domain, &start, &v, &e.action).map_err(|m| fail(&m))?;
            ensure(e.time >= start, || fail("time decreased"))?;
            ensure(e.time == next_start, || fail("time differs from the oracle"))?;
            if let ActionTerm::WaitFor(phi) = &e.action {
                waits += 1;
                ensure(holds(phi, &v, &e.time).unwrap_or(false), || fail("condition false at landing time"))?;
            } else {
                ensure(e.time == start, || fail("non-waitFor action moved time"))?;
            }
            start = next_start;
            v = next_v;
            entries += 1;
        }
        let s = result.situation();
        ensure(s.start() == &start && s.valuation() == &v, || format!("case {case}: final situation differs"))?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{pairs} pairs, {entries} entries ({waits} waitFor, {blocked} blocked runs), 0 violations; {:.2} s",
        elapsed.as_secs_f64()
    ))
}

const GRID: i64 = 10_000;

/// `start + (end - start) * i / GRID` for `i` in `0..GRID`.
fn grid<'a>(start: &'a Real, end: &Real) -> impl Iterator<Item = TimePoint> + 'a {
    let width = end - start;
    (0..GRID).map(move |i| TimePoint::new(start + &width * Real::new(i.into(), GRID.into())))
}

fn ltp_oracle() -> Verdict {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let (mut present, mut open, mut empty) = (0usize, 0usize, 0usize);
    let mut trial = 0;
    while present + open < 200 {
        trial += 1;
        let phi = ccgolog_core::model::normalize_tform(&random::tform(&mut rng, 3));
        let v = Valuation {
            continuous: [
                ("x".to_string(), random::tfunction(&mut rng)),
                ("y".to_string(), random::tfunction(&mut rng)),
            ]
            .into(),
            discrete: BTreeMap::new(),
        };
        let start = TimePoint::new(random::real(&mut rng));
        let fail = |what: &str| format!("trial {trial}: {what}: {phi} from {start}");
        let holds_at = |t: &TimePoint| holds(&phi, &v, t).map_err(|e| e.to_string());
        match ltp(&phi, &v, &start).map_err(|e| e.to_string())? {
            Some(t) => {
                present += 1;
                ensure(holds_at(&t)?, || fail("ltp does not satisfy the formula"))?;
                for p in grid(start.value(), t.value()).filter(|p| p < &t) {
                    ensure(!holds_at(&p)?, || fail(&format!("satisfied earlier at {p}")))?;
                }
            }
            None => {
                let set = solve_tform(&phi, &v, &start).map_err(|e| e.to_string())?;
                let Some(inf) = set.infimum() else {
                    empty += 1;
                    continue;
                };
                open += 1;
                let inf = TimePoint::new(inf.value.clone());
                ensure(!holds_at(&inf)?, || fail("infimum attained but ltp absent"))?;
                for p in grid(start.value(), inf.value()) {
                    ensure(!holds_at(&p)?, || fail(&format!("satisfied at {p} before the infimum")))?;
                }
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(open > 0, || "no open-infimum case was generated".into())?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} checks ({present} attained, {open} open infimum; {empty} empty skipped), 10^4-point grid, 0 disagreements; {:.2} s",
        present + open,
        elapsed.as_secs_f64()
    ))
}

fn sequences(alphabet: &[Step], max_len: usize) -> Vec<Vec<Step>> {
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s: &Vec<Step>| {
                alphabet.iter().map(move |a| {
                    let mut next = s.clone();
                    next.push(a.clone());
                    next
                })
            })
            .collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

fn to_surface(steps: &[Step]) -> Surface {
    Surface::Seq(
        steps
            .iter()
            .map(|s| match s {
                Step::Act(name) => Surface::call(*name, vec![]),
                Step::Wait(k) => Surface::WaitFor(Cond::cmp(CmpOp::Ge, "clock", Value::int(*k))),
            })
            .collect(),
    )
}

fn step_of(a: &ActionTerm) -> Step {
    match a {
        ActionTerm::WaitFor(TForm::Atom(atom)) => Step::Wait(atom.bound.to_integer().try_into().unwrap()),
        ActionTerm::Named { name, .. } if name == "a" => Step::Act("a"),
        ActionTerm::Named { name, .. } if name == "b" => Step::Act("b"),
        other => Step::Act(Box::leak(other.to_string().into_boxed_str())),
    }
}

/// Whether `part` occurs in order within `whole` at positions marked in `used`.
fn take_subsequence(whole: &[Step], used: &mut [bool], part: &[Step]) -> bool {
    let mut k = 0;
    for (i, s) in whole.iter().enumerate() {
        if k < part.len() && !used[i] && *s == part[k] {
            used[i] = true;
            k += 1;
        }
    }
    k == part.len()
}

fn par_prio_encodings() -> Verdict {
    let started = Instant::now();
    let domain = Domain::validate(
        ccgolog::parse_domain("(continuous clock (linear 0 1 0)) (action a ()) (action b ())")
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let left = sequences(&[Step::Act("a"), Step::Wait(1), Step::Wait(2)], 4);
    let right = sequences(&[Step::Act("b"), Step::Wait(1), Step::Wait(2)], 4);
    let mut checked = 0;
    for l in &left {
        for r in &right {
            let expected = interleave(l, r);
            for (kind, surface) in [
                ("par", Surface::Par(Box::new(to_surface(l)), Box::new(to_surface(r)))),
                ("prio", Surface::Prio(Box::new(to_surface(l)), Box::new(to_surface(r)))),
            ] {
                let fail = |what: &str| format!("{kind}({l:?}, {r:?}): {what}");
                let (program, d) =
                    expand_macros(&surface, &domain, &mut FreshNames::new()).map_err(|e| e.to_string())?;
                let result = project(&program, &d, 1000).map_err(|e| e.to_string())?;
                ensure(result.is_completed(), || fail("did not complete"))?;
                let trace: Vec<(TimePoint, Step)> = result
                    .trace
                    .iter()
                    .filter(|e| !e.action.is_hidden())
                    .map(|e| (e.time.clone(), step_of(&e.action)))
                    .collect();
                let steps: Vec<Step> = trace.iter().map(|(_, s)| s.clone()).collect();
                ensure(steps.len() == l.len() + r.len(), || fail(&format!("multiset differs: {steps:?}")))?;
                let mut used = vec![false; steps.len()];
                let both = take_subsequence(&steps, &mut used, l) && take_subsequence(&steps, &mut used, r);
                ensure(both && used.iter().all(|u| *u), || fail(&format!("orders not preserved: {steps:?}")))?;
                ensure(trace == expected, || fail(&format!("trace {trace:?} vs reference {expected:?}")))?;
                checked += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{checked} expansions ({} x {} program pairs, par and prio) match the reference interleaver; {:.2} s",
        left.len(),
        right.len(),
        elapsed.as_secs_f64()
    ))
}

fn collect_prims(p: &Program, out: &mut Vec<ActionTerm>) {
    match p {
        Program::Nil | Program::Test(_) => {}
        Program::Prim(a) => out.push(a.clone()),
        Program::While(_, a) => collect_prims(a, out),
        Program::Seq(a, b) | Program::If(_, a, b) | Program::TryAll(a, b) | Program::WithPol(a, b) => {
            collect_prims(a, out);
            collect_prims(b, out);
        }
    }
}

fn intro_properties() -> Verdict {
    let started = Instant::now();
    let (result, domain) = run(scenarios::INTRO)?;
    ensure(result.is_completed(), || format!("{:?}", result.outcome))?;
    let trace = &result.trace;
    let actions: Vec<ActionTerm> = trace.iter().map(|e| e.action.clone()).collect();
    let situations = replay(&domain, &actions).map_err(|e| e.to_string())?;

    // (a)
    let low = TForm::atom("battLevel", CmpOp::Le, q(46));
    let first_low = ltp(&low, &domain.initial_valuation(), &TimePoint::zero())
        .map_err(|e| e.to_string())?
        .ok_or("battery never runs low")?;
    let charges: Vec<usize> = (0..trace.len()).filter(|&i| trace[i].action.name() == "chargeBatteries").collect();
    ensure(charges.len() == 1, || format!("{} charging events", charges.len()))?;
    for &i in &charges {
        ensure(trace[i].time >= first_low, || format!("charging at {} before {first_low}", trace[i].time))?;
        ensure(holds(&low, situations[i].valuation(), &trace[i].time).unwrap_or(false), || {
            format!("battery not low when charging at {}", trace[i].time)
        })?;
    }

    // (b)
    let (mail, _) =
        expand_macros(&parse_program("(withCtrl wheels deliverMail)").unwrap(), &domain, &mut FreshNames::new())
            .map_err(|e| e.to_string())?;
    let mut mail_actions = Vec::new();
    collect_prims(&mail, &mut mail_actions);
    let mut grabbed = false;
    let mut blocked_checks = 0;
    for e in trace {
        match e.action.name() {
            "grabWhls" => grabbed = true,
            "releaseWhls" => grabbed = false,
            _ if grabbed => {
                blocked_checks += 1;
                ensure(!mail_actions.contains(&e.action), || {
                    format!("{} at {} while wheels are held", e.action.label(), e.time)
                })?;
            }
            _ => {}
        }
    }
    ensure(blocked_checks > 0, || "nothing happened while the wheels were held".into())?;

    // (c)
    let near = domain.resolve(&Cond::Ref("nearDoor".into())).map_err(|e| e.to_string())?;
    let near_t = domain.resolve_tform(&Cond::Ref("nearDoor".into())).map_err(|e| e.to_string())?;
    let hellos: Vec<usize> = (0..trace.len())
        .filter(|&i| trace[i].action == ActionTerm::named("say", vec![Value::symbol("hello")]))
        .collect();
    ensure(!hellos.is_empty(), || "no greeting".into())?;
    for &i in &hellos {
        let s = &situations[i + 1];
        let ok =
            eval_formula(&near, s).unwrap_or(false) && holds(&near_t, s.valuation(), &trace[i].time).unwrap_or(false);
        ensure(ok, || format!("hello at {} outside nearDoor", trace[i].time))?;
    }

    let (again, _) = run(scenarios::INTRO)?;
    ensure(again == result, || "second projection differs".into())?;
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {}", ms(elapsed)))?;
    Ok(format!(
        "(a) charging at {} >= ltp {first_low}; (b) {blocked_checks} actions while wheels held, none from deliverMail; \
         (c) {} hello(s) inside nearDoor; deterministic; {}",
        trace[charges[0]].time,
        hellos.len(),
        ms(elapsed)
    ))
}

fn performance() -> Verdict {
    let (long, _) = bench(scenarios::LONG, 1)?;
    let (intro, _) = bench(scenarios::INTRO, 1)?;
    let (long_t, intro_t) = (long.times[0], intro.times[0]);
    ensure(long.actions >= 300, || format!("long scenario has {} actions", long.actions))?;
    ensure(long_t < Duration::from_secs(1), || format!("long took {}", ms(long_t)))?;
    ensure(intro_t < Duration::from_millis(200), || format!("intro took {}", ms(intro_t)))?;
    Ok(format!("long: {} actions in {}; intro: {} actions in {}", long.actions, ms(long_t), intro.actions, ms(intro_t)))
}

fn blocking() -> Verdict {
    let (result, _) = run(scenarios::BLOCKED)?;
    let Outcome::Blocked { reason, .. } = &result.outcome else {
        return Err(format!("not blocked: {:?}", result.outcome));
    };
    ensure(matches!(reason, BlockReason::NoLeastTimePoint(_)), || format!("reason {reason:?}"))?;
    let message = TraceDocument::from_result(&result).reason.unwrap_or_default();
    ensure(message.starts_with("waitFor condition has no least time point"), || message.clone())?;
    ensure(run(scenarios::BLOCKED)?.0 == result, || "second projection differs".into())?;

    let dir = env!("CARGO_MANIFEST_DIR");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_ccgolog"))
        .args(["check", "--domain", &format!("{dir}/scenarios/robot1d.domain")])
        .args(["--program", &format!("{dir}/scenarios/blocked.golog")])
        .output()
        .map_err(|e| e.to_string())?;
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(EXIT_BLOCKED), || format!("exit status {:?}", out.status.code()))?;
    ensure(stderr.contains("no least time point"), || format!("stderr: {stderr}"))?;
    Ok(format!("Blocked: {message}; CLI exit {EXIT_BLOCKED}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 worked entailment (robot1d)", worked_entailment),
        ("2 backup trace uniqueness", backup_uniqueness),
        ("3 time monotonicity and ASAP", monotone_asap_traces),
        ("4 ltp against grid oracle", ltp_oracle),
        ("5 par/prio encodings", par_prio_encodings),
        ("6 intro scenario properties", intro_properties),
        ("7 performance envelope", performance),
        ("8 blocking on open infimum", blocking),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let verdict = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
