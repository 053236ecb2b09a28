//! Plan execution against latency-modeled task modules, result fan-out to
//! subscribers, and the periodic job scheduler.

mod modules;
mod periodic;
mod serve;
mod subs;

pub use modules::{ModuleSet, TaskModule};
pub use periodic::{run_periodic_horizon, tick_periodic, PeriodicScheduler};
pub use serve::{
    execute_plan, serve_read, CaptureSpec, ExecutionOutcome, Milestones, ReadOutcome,
};
pub use subs::{subscribe, Notification, Subscription};

use alloc::string::String;

use crate::assets::{AssetError, AssetRegistry, ContextDb};
use crate::planner::{PlanError, ProfileSet};
use crate::simnet::{Channel, SimClock, Trace};

/// Events driven through the edge runtime's clock.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEvent {
    /// Poll the periodic scheduler.
    PeriodicTick,
}

/// The simulated edge runtime: registry, context database, task modules,
/// profiles and the timed channel, all on one clock. This is the fixture
/// every scenario and the REPL poke at.
#[derive(Debug)]
pub struct EdgeEnv {
    pub registry: AssetRegistry,
    pub context_db: ContextDb,
    pub modules: ModuleSet,
    pub profiles: ProfileSet,
    pub channel: Channel,
    pub clock: SimClock<EdgeEvent>,
    pub trace: Trace,
}

impl EdgeEnv {
    pub fn new(channel: Channel) -> Self {
        Self {
            registry: AssetRegistry::new(),
            context_db: ContextDb::new(),
            modules: ModuleSet::new(),
            profiles: ProfileSet::new(),
            channel,
            clock: SimClock::new(),
            trace: Trace::new(),
        }
    }
}

/// Executor errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExecError {
    /// The registry moved past the revision the plan was computed at.
    #[error("stale plan: planned at revision {planned}, registry at {current}")]
    StalePlan { planned: u64, current: u64 },
    /// The chosen sensor disappeared between planning and execution.
    #[error("sensor `{id}` unavailable")]
    SensorUnavailable { id: String },
    /// No task module installed for the job's task type.
    #[error("no module for task type `{task}`")]
    ModuleMissing { task: String },
    /// The session driving a read is not ready for service calls.
    #[error("session not ready: state {state}")]
    SessionNotReady { state: String },
    #[error(transparent)]
    Plan(#[from] PlanError),
    #[error(transparent)]
    Asset(#[from] AssetError),
}
