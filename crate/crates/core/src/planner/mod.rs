//! Execution planning: quality-checked sensor selection and the
//! cheapest-feasible-executor decision ladder.
//!
//! Everything here is a pure function over immutable snapshots, so plans
//! are reproducible and the whole module is safe to call concurrently.

mod plan;
mod profile;
mod quality;

pub use plan::plan;
pub use profile::{fit_profile, ExecutorRoute, LatencyProfile, ProfileError, ProfileSet};
pub use quality::{check_quality, quality_margin, select_sensor};

use alloc::string::String;
use core::fmt;

use crate::assets::QualifiedId;
use crate::TimeMs;

/// A client's ask: run (or fetch) a job's result under a freshness bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TaskRequest {
    pub job_name: String,
    pub requester: String,
    /// Maximum acceptable age of a cached result; the bound is inclusive.
    pub max_result_age_ms: f64,
    pub input_size_kb: f64,
    /// Expected number of faces in the input, when known. Absent counts
    /// as a single face: the per-face cost applies only beyond the first.
    pub face_count_hint: Option<u32>,
    pub internet_available: bool,
    pub now: TimeMs,
}

impl TaskRequest {
    pub fn validate(&self) -> bool {
        self.max_result_age_ms >= 0.0 && self.input_size_kb > 0.0
    }

    pub fn face_count(&self) -> u32 {
        self.face_count_hint.unwrap_or(1)
    }
}

/// Which execution route a plan takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExecutorKind {
    /// Serve the newest stored record; valid only while one is fresh.
    CachedResult,
    /// Run the task against a model already resident in edge memory.
    PreloadedLocalModel,
    /// Load the model from disk, then run.
    ColdLocalModel,
    /// Ship the input to the remote vision endpoint.
    CloudService,
}

impl ExecutorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExecutorKind::CachedResult => "cached-result",
            ExecutorKind::PreloadedLocalModel => "preloaded-local-model",
            ExecutorKind::ColdLocalModel => "cold-local-model",
            ExecutorKind::CloudService => "cloud-service",
        }
    }
}

impl fmt::Display for ExecutorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Planner output, bound to the registry revision it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct ExecutionPlan {
    pub job_name: String,
    /// The sensor to capture from; absent for cached results.
    pub chosen_sensor: Option<QualifiedId>,
    pub executor: ExecutorKind,
    pub predicted_latency_ms: f64,
    pub registry_revision: u64,
}

/// Planner errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("unknown job `{name}`")]
    UnknownJob { name: String },
    #[error("no viable sensor for job `{job}`: {reason}")]
    NoViableSensor { job: String, reason: String },
    #[error("no executor available for job `{job}`: {reason}")]
    NoExecutor { job: String, reason: String },
}
