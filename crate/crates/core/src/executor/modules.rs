//! Latency-modeled task module stubs.
//!
//! Real recognition code is out of scope; a module costs what its profile
//! says and emits a deterministic synthetic label, which is all the
//! coordination layer under test can observe.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::assets::{QualifiedId, TaskType};
use crate::hash::fnv1a_64;
use crate::planner::LatencyProfile;

const OBJECT_LABELS: [&str; 8] = [
    "person", "chair", "laptop", "bottle", "monitor", "dog", "cup", "book",
];
const FACE_NAMES: [&str; 6] = ["alice", "bob", "carol", "dave", "erin", "frank"];

/// One installed intelligence-task component.
#[derive(Debug, Clone)]
pub struct TaskModule {
    pub task_type: TaskType,
    /// Whether the model is preloaded in edge memory.
    pub model_resident: bool,
    /// One-time cost paid by a cold execution before inference.
    pub model_load_ms: f64,
    /// Inference duration model (the warm cost).
    pub latency_profile: LatencyProfile,
    /// Seed for the synthetic label stream.
    pub label_seed: u64,
}

impl TaskModule {
    /// Warm inference duration for this input.
    pub fn inference_ms(&self, input_size_kb: f64, face_count: u32) -> f64 {
        self.latency_profile.predict(input_size_kb, face_count)
    }

    /// Cold duration: model load plus inference, exactly.
    pub fn cold_ms(&self, input_size_kb: f64, face_count: u32) -> f64 {
        self.model_load_ms + self.inference_ms(input_size_kb, face_count)
    }

    /// Deterministic label for (sensor, input size, seed).
    pub fn generate_result(
        &self,
        sensor: Option<&QualifiedId>,
        input_size_kb: f64,
        face_count: u32,
    ) -> String {
        let mut key = Vec::new();
        if let Some(id) = sensor {
            key.extend_from_slice(id.owner.as_str().as_bytes());
            key.push(b':');
            key.extend_from_slice(id.name.as_bytes());
        }
        key.extend_from_slice(&input_size_kb.to_bits().to_be_bytes());
        key.extend_from_slice(&self.label_seed.to_be_bytes());
        let h = fnv1a_64(&key);

        match self.task_type {
            TaskType::FaceRecognition => {
                // One recognized identity per face in the input.
                let mut names = Vec::new();
                for i in 0..face_count.max(1) {
                    let idx = (h.rotate_left(i * 8) as usize) % FACE_NAMES.len();
                    names.push(FACE_NAMES[idx]);
                }
                names.join(",")
            }
            _ => {
                let count = 1 + (h % 3) as usize;
                let mut labels = Vec::new();
                for i in 0..count {
                    let idx = (h.rotate_left(i as u32 * 8) as usize) % OBJECT_LABELS.len();
                    let label = OBJECT_LABELS[idx];
                    if !labels.contains(&label) {
                        labels.push(label);
                    }
                }
                labels.join(",")
            }
        }
    }
}

/// Installed modules by task type.
#[derive(Debug, Clone, Default)]
pub struct ModuleSet {
    modules: BTreeMap<TaskType, TaskModule>,
}

impl ModuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn install(&mut self, module: TaskModule) {
        self.modules.insert(module.task_type, module);
    }

    pub fn get(&self, task: TaskType) -> Option<&TaskModule> {
        self.modules.get(&task)
    }

    pub fn get_mut(&mut self, task: TaskType) -> Option<&mut TaskModule> {
        self.modules.get_mut(&task)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_module() -> TaskModule {
        TaskModule {
            task_type: TaskType::FaceRecognition,
            model_resident: true,
            model_load_ms: 500.0,
            latency_profile: LatencyProfile::calibrated(
                TaskType::FaceRecognition,
                453.2191780821918,
                2.8226027397260274,
                360.0,
            ),
            label_seed: 7,
        }
    }

    #[test]
    fn cold_is_warm_plus_load_exactly() {
        let m = face_module();
        assert_eq!(m.cold_ms(8.0, 1) - m.inference_ms(8.0, 1), 500.0);
    }

    #[test]
    fn labels_are_deterministic() {
        let m = face_module();
        let id = QualifiedId::new(crate::assets::Owner::EdgeConnected, "cam");
        let a = m.generate_result(Some(&id), 8.0, 2);
        let b = m.generate_result(Some(&id), 8.0, 2);
        assert_eq!(a, b);
        assert_eq!(a.split(',').count(), 2);
    }

    #[test]
    fn labels_vary_with_sensor() {
        let m = face_module();
        let a = m.generate_result(
            Some(&QualifiedId::new(crate::assets::Owner::EdgeConnected, "cam-a")),
            8.0,
            1,
        );
        let b = m.generate_result(
            Some(&QualifiedId::new(crate::assets::Owner::EdgeConnected, "cam-b")),
            8.0,
            1,
        );
        // Different preimages; equal labels would only happen on a small-
        // vocabulary coincidence, so just pin the current distinct pair.
        assert_eq!(a, "frank");
        assert_eq!(b, "erin");
    }
}
