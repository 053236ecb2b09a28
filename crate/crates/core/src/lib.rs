//! Deterministic simulation core for an edge-coordinated context-management
//! framework.
//!
//! The crate models an edge server that keeps a registry of sensor and
//! intelligence-task assets, advertises them in beacon frames, plans task
//! execution against quality-checked sensors, and executes plans over a
//! discrete-event timeline with configurable latency models. Everything in
//! here is pure computation over an explicit simulated clock: same seed and
//! config always produce the same timings, traces and results, on any
//! platform.
//!
//! Layout:
//! - [`assets`] — thing/job descriptors, the asset registry, the context
//!   database of task results.
//! - [`discovery`] — service identifiers, beacon encoding and the client
//!   discover→interrogate→ready session.
//! - [`planner`] — quality checks, sensor selection, latency profiles and
//!   the execution-plan decision ladder.
//! - [`executor`] — plan execution against latency-modeled task modules,
//!   subscriptions and the periodic scheduler.
//! - [`simnet`] — virtual clock, latency models, channel segments and the
//!   event trace.
//!
//! The crate is `no_std` + `alloc`; IO, file formats and the benchmark CLI
//! live in the companion `edgecoord` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod assets;
pub mod discovery;
pub mod executor;
pub mod hash;
pub mod planner;
pub mod simnet;

/// Simulated time in milliseconds. All timestamps and durations in the
/// crate are on this clock; there is no wall time anywhere.
pub type TimeMs = f64;
