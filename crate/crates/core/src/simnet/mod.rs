//! Discrete-event simulation substrate.
//!
//! A [`SimClock`] carries the virtual time and an event queue ordered by
//! (due time, insertion sequence). [`Channel`] models the latency of the
//! advertisement, connection, sensor and cloud links as named
//! [`LatencyModel`] segments, each sampling from its own seeded stream.
//! Every time-consuming step records a line in the [`Trace`] so two runs
//! can be diffed byte for byte.

mod channel;
mod clock;
mod latency;
mod trace;

pub use channel::{Channel, ChannelConfig, Segment};
pub use clock::{EventId, Fired, SimClock};
pub use latency::{Distribution, LatencyModel};
pub use trace::{Trace, TraceEntry};

use alloc::string::String;

/// Simulation substrate errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    /// The event loop hit its safety guard while the queue was still
    /// non-empty; a periodic workload was probably run without a horizon.
    #[error("event horizon exceeded at t={at_ms}ms after {processed} events")]
    HorizonExceeded { at_ms: f64, processed: u64 },
    /// A segment name did not match any configured channel segment.
    #[error("unknown channel segment `{name}`")]
    UnknownSegment { name: String },
}
