//! Execution-time prediction profiles.
//!
//! A profile is a linear model of task duration over input size with a
//! per-face surcharge beyond the first face. Profiles either come
//! calibrated from config or are fitted by ordinary least squares over
//! recorded observations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::assets::TaskType;

/// Profile errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    /// Fitting needs at least two observations with two distinct sizes.
    #[error("insufficient data to fit a profile: {observations} observations, {distinct_sizes} distinct sizes")]
    InsufficientData {
        observations: usize,
        distinct_sizes: usize,
    },
    /// Prediction asked of a route with no profile yet.
    #[error("no fitted profile for {task} via {route}")]
    UnfittedProfile { task: TaskType, route: ExecutorRoute },
}

/// Which executor a profile predicts for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExecutorRoute {
    /// Inference with the model already in memory.
    Warm,
    /// Model load plus inference, as reported end to end.
    Cold,
    /// Remote endpoint round trip, as reported end to end.
    Cloud,
}

impl ExecutorRoute {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExecutorRoute::Warm => "warm",
            ExecutorRoute::Cold => "cold",
            ExecutorRoute::Cloud => "cloud",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "warm" => Some(ExecutorRoute::Warm),
            "cold" => Some(ExecutorRoute::Cold),
            "cloud" => Some(ExecutorRoute::Cloud),
            _ => None,
        }
    }
}

impl core::fmt::Display for ExecutorRoute {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Linear execution-time predictor.
#[derive(Debug, Clone, PartialEq)]
pub struct LatencyProfile {
    pub task_type: TaskType,
    pub intercept_ms: f64,
    pub slope_ms_per_kb: f64,
    /// Surcharge for every face beyond the first.
    pub per_face_ms: f64,
    /// Number of observations behind a fitted profile; zero for
    /// config-calibrated ones.
    pub observation_count: usize,
}

impl LatencyProfile {
    /// Profile taken from configuration rather than fitted from data.
    pub fn calibrated(
        task_type: TaskType,
        intercept_ms: f64,
        slope_ms_per_kb: f64,
        per_face_ms: f64,
    ) -> Self {
        Self {
            task_type,
            intercept_ms,
            slope_ms_per_kb,
            per_face_ms,
            observation_count: 0,
        }
    }

    /// Predicted duration, clamped at zero:
    /// `intercept + slope × size + per_face × max(faces − 1, 0)`.
    pub fn predict(&self, input_size_kb: f64, face_count: u32) -> f64 {
        let extra_faces = face_count.saturating_sub(1) as f64;
        let ms = self.intercept_ms
            + self.slope_ms_per_kb * input_size_kb
            + self.per_face_ms * extra_faces;
        ms.max(0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.intercept_ms.is_finite()
            && self.slope_ms_per_kb.is_finite()
            && self.per_face_ms.is_finite()
    }
}

/// Ordinary least squares over `(input_size_kb, face_count, duration_ms)`
/// observations. The known per-face surcharge is subtracted before the
/// size regression, so mixed-face observation sets fit cleanly.
pub fn fit_profile(
    task_type: TaskType,
    per_face_ms: f64,
    observations: &[(f64, u32, f64)],
) -> Result<LatencyProfile, ProfileError> {
    let n = observations.len();
    let mut distinct_sizes = 0usize;
    for (i, (size, _, _)) in observations.iter().enumerate() {
        if observations[..i].iter().all(|(s, _, _)| s != size) {
            distinct_sizes += 1;
        }
    }
    if n < 2 || distinct_sizes < 2 {
        return Err(ProfileError::InsufficientData {
            observations: n,
            distinct_sizes,
        });
    }

    let nf = n as f64;
    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    let mut sum_xy = 0.0;
    let mut sum_xx = 0.0;
    for &(size, faces, duration) in observations {
        let y = duration - per_face_ms * faces.saturating_sub(1) as f64;
        sum_x += size;
        sum_y += y;
        sum_xy += size * y;
        sum_xx += size * size;
    }
    let denom = nf * sum_xx - sum_x * sum_x;
    let slope = (nf * sum_xy - sum_x * sum_y) / denom;
    let intercept = (sum_y - slope * sum_x) / nf;

    Ok(LatencyProfile {
        task_type,
        intercept_ms: intercept,
        slope_ms_per_kb: slope,
        per_face_ms,
        observation_count: n,
    })
}

/// Per-(task, route) profiles plus the observation log that refits the
/// warm route as durations come in.
#[derive(Debug, Clone, Default)]
pub struct ProfileSet {
    profiles: BTreeMap<(TaskType, ExecutorRoute), LatencyProfile>,
    observations: BTreeMap<TaskType, Vec<(f64, u32, f64)>>,
}

impl ProfileSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, route: ExecutorRoute, profile: LatencyProfile) {
        self.profiles.insert((profile.task_type, route), profile);
    }

    pub fn get(&self, task: TaskType, route: ExecutorRoute) -> Option<&LatencyProfile> {
        self.profiles.get(&(task, route))
    }

    pub fn predict(
        &self,
        task: TaskType,
        route: ExecutorRoute,
        input_size_kb: f64,
        face_count: u32,
    ) -> Result<f64, ProfileError> {
        self.get(task, route)
            .map(|p| p.predict(input_size_kb, face_count))
            .ok_or(ProfileError::UnfittedProfile { task, route })
    }

    pub fn observation_count(&self, task: TaskType) -> usize {
        self.observations.get(&task).map(Vec::len).unwrap_or(0)
    }

    /// Append a measured duration and refit the warm profile once two
    /// distinct sizes are on record. Until then any calibrated warm
    /// profile stays in place.
    pub fn record_observation(
        &mut self,
        task: TaskType,
        input_size_kb: f64,
        face_count: u32,
        duration_ms: f64,
    ) {
        debug_assert!(duration_ms >= 0.0);
        let log = self.observations.entry(task).or_default();
        log.push((input_size_kb, face_count, duration_ms));

        let per_face = self
            .get(task, ExecutorRoute::Warm)
            .map(|p| p.per_face_ms)
            .unwrap_or(0.0);
        if let Ok(fitted) = fit_profile(task, per_face, self.observations[&task].as_slice()) {
            self.profiles.insert((task, ExecutorRoute::Warm), fitted);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(TaskType, ExecutorRoute), &LatencyProfile)> {
        self.profiles.iter()
    }
}
