//! Client-side discovery session state machine.

use alloc::collections::BTreeSet;
use alloc::string::String;

use super::{scan_match, Beacon, DiscoveryError, ServiceId};
use crate::simnet::{Channel, Segment, SimClock, Trace};
use crate::TimeMs;

/// Session lifecycle. Transitions only move along
/// Scanning → Matched → Connecting → Interrogating → Ready; any state may
/// drop to Failed, and Failed is absorbing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SessionState {
    Scanning,
    Matched,
    Connecting,
    Interrogating,
    Ready,
    Failed,
}

impl SessionState {
    pub fn as_str(&self) -> &'static str {
        match self {
            SessionState::Scanning => "Scanning",
            SessionState::Matched => "Matched",
            SessionState::Connecting => "Connecting",
            SessionState::Interrogating => "Interrogating",
            SessionState::Ready => "Ready",
            SessionState::Failed => "Failed",
        }
    }
}

/// One client's discovery session.
#[derive(Debug, Clone)]
pub struct ClientSession {
    pub client_id: String,
    pub state: SessionState,
    pub matched_services: BTreeSet<ServiceId>,
    /// When scanning began.
    pub t_scan_start: TimeMs,
    /// Set on reaching Ready.
    pub t_ready: Option<TimeMs>,
    /// Optional budget for the connect + enumerate exchange.
    pub interrogate_budget_ms: Option<f64>,
}

impl ClientSession {
    pub fn start_scan(client_id: &str, now: TimeMs) -> Self {
        Self {
            client_id: String::from(client_id),
            state: SessionState::Scanning,
            matched_services: BTreeSet::new(),
            t_scan_start: now,
            t_ready: None,
            interrogate_budget_ms: None,
        }
    }

    /// Feed observed frames to a scanning session. Moves to Matched once
    /// any wanted id has been seen. Failed sessions stay failed.
    pub fn observe(&mut self, frames: &[Beacon], wanted: &BTreeSet<ServiceId>) {
        if !matches!(self.state, SessionState::Scanning | SessionState::Matched) {
            return;
        }
        let found = scan_match(frames, wanted);
        self.matched_services.extend(found);
        if !self.matched_services.is_empty() {
            self.state = SessionState::Matched;
        }
    }

    /// Elapsed time from scan start to service readiness.
    pub fn interrogation_time(&self) -> Option<f64> {
        self.t_ready.map(|t| t - self.t_scan_start)
    }

    pub fn fail(&mut self) {
        self.state = SessionState::Failed;
    }
}

/// Drive a matched session through Connecting and Interrogating to Ready
/// over the connection channel. On a blown budget the session fails and
/// stays failed.
pub fn interrogate<E>(
    session: &mut ClientSession,
    channel: &mut Channel,
    clock: &mut SimClock<E>,
    trace: &mut Trace,
) -> Result<(), DiscoveryError> {
    if session.state != SessionState::Matched {
        return Err(DiscoveryError::InvalidState {
            expected: SessionState::Matched.as_str(),
            actual: session.state.as_str(),
        });
    }
    let started = clock.now();

    session.state = SessionState::Connecting;
    channel.transfer(Segment::Connect, 0.0, clock, trace);

    session.state = SessionState::Interrogating;
    channel.transfer(Segment::Enumerate, 0.0, clock, trace);

    let elapsed = clock.now() - started;
    if let Some(budget) = session.interrogate_budget_ms {
        if elapsed > budget {
            session.fail();
            return Err(DiscoveryError::ChannelTimeout {
                elapsed_ms: elapsed,
                budget_ms: budget,
            });
        }
    }

    session.state = SessionState::Ready;
    session.t_ready = Some(clock.now());
    trace.record(clock.now(), "session", "ready", 0.0);
    Ok(())
}
