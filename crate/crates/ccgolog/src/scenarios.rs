//! Scenarios shipped with the crate.

#[derive(Clone, Copy, Debug)]
pub struct Scenario {
    pub name: &'static str,
    pub domain: &'static str,
    pub program: &'static str,
}

const ROBOT1D_DOMAIN: &str = include_str!("../scenarios/robot1d.domain");
const OFFICE_DOMAIN: &str = include_str!("../scenarios/office.domain");

pub const ROBOT1D: Scenario =
    Scenario { name: "robot1d", domain: ROBOT1D_DOMAIN, program: include_str!("../scenarios/robot1d.golog") };
/// The robot approaches a strict bound that is never attained.
pub const BLOCKED: Scenario =
    Scenario { name: "blocked", domain: ROBOT1D_DOMAIN, program: include_str!("../scenarios/blocked.golog") };
pub const BACKUP: Scenario = Scenario {
    name: "backup",
    domain: include_str!("../scenarios/backup.domain"),
    program: include_str!("../scenarios/backup.golog"),
};
/// Mail delivery under a battery policy and a greeting policy.
pub const INTRO: Scenario =
    Scenario { name: "intro", domain: OFFICE_DOMAIN, program: include_str!("../scenarios/intro.golog") };
/// Delivery that detours into an open room spotted on the way.
pub const OPPORTUNITY: Scenario =
    Scenario { name: "opportunity", domain: OFFICE_DOMAIN, program: include_str!("../scenarios/opportunity.golog") };
/// A tour through all ten rooms while watching the doors.
pub const LONG: Scenario =
    Scenario { name: "long", domain: OFFICE_DOMAIN, program: include_str!("../scenarios/long.golog") };

pub const ALL: &[Scenario] = &[ROBOT1D, BLOCKED, BACKUP, INTRO, OPPORTUNITY, LONG];

pub fn by_name(name: &str) -> Option<Scenario> {
    ALL.iter().copied().find(|s| s.name == name)
}
