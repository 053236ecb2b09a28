//! The execution-plan decision ladder.

use alloc::format;
use alloc::string::ToString;

use super::profile::{ExecutorRoute, ProfileSet};
use super::quality::select_sensor;
use super::{ExecutionPlan, ExecutorKind, PlanError, TaskRequest};
use crate::assets::{ContextDb, RegistrySnapshot};

/// Devise the cheapest feasible plan for `request` against an immutable
/// snapshot.
///
/// Ladder: (1) a stored result no older than the request's bound (age
/// compared inclusively) is served from cache with no sensor; (2)
/// otherwise a quality-passing sensor is selected, and a resident model
/// executes warm; (3) otherwise the cheaper predicted route between the
/// cloud endpoint (only with internet access) and a cold local load wins,
/// the cloud on an exact tie.
///
/// Pure: identical inputs always yield the identical plan.
pub fn plan(
    request: &TaskRequest,
    snapshot: &RegistrySnapshot,
    context_db: &ContextDb,
    profiles: &ProfileSet,
) -> Result<ExecutionPlan, PlanError> {
    let job = snapshot
        .job(&request.job_name)
        .ok_or_else(|| PlanError::UnknownJob {
            name: request.job_name.clone(),
        })?;

    if let Some(record) = context_db.latest(&request.job_name) {
        let age = request.now - record.produced_at;
        if age <= request.max_result_age_ms {
            return Ok(ExecutionPlan {
                job_name: request.job_name.clone(),
                chosen_sensor: None,
                executor: ExecutorKind::CachedResult,
                predicted_latency_ms: 0.0,
                registry_revision: snapshot.revision,
            });
        }
    }

    let sensor = select_sensor(snapshot, &request.job_name)?;
    let faces = request.face_count();

    if job.model_resident {
        let predicted = profiles
            .predict(job.task_type, ExecutorRoute::Warm, request.input_size_kb, faces)
            .map_err(|e| PlanError::NoExecutor {
                job: request.job_name.clone(),
                reason: e.to_string(),
            })?;
        return Ok(ExecutionPlan {
            job_name: request.job_name.clone(),
            chosen_sensor: Some(sensor),
            executor: ExecutorKind::PreloadedLocalModel,
            predicted_latency_ms: predicted,
            registry_revision: snapshot.revision,
        });
    }

    let cloud = if request.internet_available {
        profiles
            .predict(job.task_type, ExecutorRoute::Cloud, request.input_size_kb, faces)
            .ok()
    } else {
        None
    };
    let cold = profiles
        .predict(job.task_type, ExecutorRoute::Cold, request.input_size_kb, faces)
        .ok();

    let (executor, predicted) = match (cloud, cold) {
        (Some(cl), Some(co)) => {
            // Smaller predicted latency wins; the cloud takes exact ties.
            if cl <= co {
                (ExecutorKind::CloudService, cl)
            } else {
                (ExecutorKind::ColdLocalModel, co)
            }
        }
        (Some(cl), None) => (ExecutorKind::CloudService, cl),
        (None, Some(co)) => (ExecutorKind::ColdLocalModel, co),
        (None, None) => {
            return Err(PlanError::NoExecutor {
                job: request.job_name.clone(),
                reason: format!(
                    "model not resident, internet {}, no cold-load profile",
                    if request.internet_available {
                        "available but no cloud profile"
                    } else {
                        "unavailable"
                    }
                ),
            })
        }
    };

    Ok(ExecutionPlan {
        job_name: request.job_name.clone(),
        chosen_sensor: Some(sensor),
        executor,
        predicted_latency_ms: predicted,
        registry_revision: snapshot.revision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assets::{
        AssetRegistry, ContextRecord, JobDescriptor, Owner, QualityValue, TaskType,
        ThingDescriptor, ThingType,
    };
    use crate::planner::LatencyProfile;
    use alloc::string::String;
    use alloc::vec;

    fn fixture(model_resident: bool) -> (RegistrySnapshot, ProfileSet) {
        let mut reg = AssetRegistry::new();
        reg.register_thing(ThingDescriptor {
            thing_name: String::from("cam"),
            thing_type: ThingType::Camera,
            owner: Owner::EdgeConnected,
            tethered: true,
            quality_values: vec![QualityValue::new("brightness", 0.7, 0.3, 1.0)],
            coordinates: None,
            last_seen: 0.0,
        })
        .unwrap();
        reg.register_job(JobDescriptor {
            job_name: String::from("object-reco"),
            task_type: TaskType::ObjectRecognition,
            alternative_sensors: vec![String::from("cam")],
            periodic: false,
            period_ms: None,
            subscribers: vec![],
            last_updated_at: None,
            model_resident,
        })
        .unwrap();

        let mut profiles = ProfileSet::new();
        profiles.insert(
            ExecutorRoute::Warm,
            LatencyProfile::calibrated(TaskType::ObjectRecognition, 989.0, 0.0, 0.0),
        );
        profiles.insert(
            ExecutorRoute::Cold,
            LatencyProfile::calibrated(TaskType::ObjectRecognition, 23964.0, 0.0, 0.0),
        );
        profiles.insert(
            ExecutorRoute::Cloud,
            LatencyProfile::calibrated(TaskType::ObjectRecognition, 3847.0, 0.0, 0.0),
        );
        (reg.snapshot(), profiles)
    }

    fn request(now: f64, max_age: f64, internet: bool) -> TaskRequest {
        TaskRequest {
            job_name: String::from("object-reco"),
            requester: String::from("client-1"),
            max_result_age_ms: max_age,
            input_size_kb: 8.0,
            face_count_hint: None,
            internet_available: internet,
            now,
        }
    }

    #[test]
    fn fresh_record_serves_from_cache() {
        let (snap, profiles) = fixture(false);
        let mut db = ContextDb::new();
        db.append(ContextRecord::new("object-reco", "person", 900.0, 8.0));
        let p = plan(&request(1000.0, 5000.0, true), &snap, &db, &profiles).unwrap();
        assert_eq!(p.executor, ExecutorKind::CachedResult);
        assert!(p.chosen_sensor.is_none());
    }

    #[test]
    fn staleness_boundary_is_inclusive() {
        let (snap, profiles) = fixture(true);
        let mut db = ContextDb::new();
        db.append(ContextRecord::new("object-reco", "person", 0.0, 8.0));

        let at_bound = plan(&request(5000.0, 5000.0, true), &snap, &db, &profiles).unwrap();
        assert_eq!(at_bound.executor, ExecutorKind::CachedResult);

        let past_bound = plan(&request(5001.0, 5000.0, true), &snap, &db, &profiles).unwrap();
        assert_ne!(past_bound.executor, ExecutorKind::CachedResult);
    }

    #[test]
    fn stale_and_resident_goes_preloaded() {
        let (snap, profiles) = fixture(true);
        let db = ContextDb::new();
        let p = plan(&request(1000.0, 100.0, true), &snap, &db, &profiles).unwrap();
        assert_eq!(p.executor, ExecutorKind::PreloadedLocalModel);
        assert!((p.predicted_latency_ms - 989.0).abs() < 1e-9);
        assert!(p.chosen_sensor.is_some());
    }

    #[test]
    fn stale_not_resident_with_internet_prefers_cheaper_cloud() {
        let (snap, profiles) = fixture(false);
        let db = ContextDb::new();
        let p = plan(&request(1000.0, 100.0, true), &snap, &db, &profiles).unwrap();
        assert_eq!(p.executor, ExecutorKind::CloudService);
        assert!((p.predicted_latency_ms - 3847.0).abs() < 1e-9);
    }

    #[test]
    fn no_internet_forces_cold_local() {
        let (snap, profiles) = fixture(false);
        let db = ContextDb::new();
        let p = plan(&request(1000.0, 100.0, false), &snap, &db, &profiles).unwrap();
        assert_eq!(p.executor, ExecutorKind::ColdLocalModel);
        assert!((p.predicted_latency_ms - 23964.0).abs() < 1e-9);
    }

    #[test]
    fn nothing_available_is_no_executor() {
        let (snap, _) = fixture(false);
        let db = ContextDb::new();
        let empty = ProfileSet::new();
        let err = plan(&request(1000.0, 100.0, false), &snap, &db, &empty).unwrap_err();
        assert!(matches!(err, PlanError::NoExecutor { .. }));
    }

    #[test]
    fn unknown_job_is_reported() {
        let (snap, profiles) = fixture(false);
        let db = ContextDb::new();
        let mut r = request(0.0, 0.0, true);
        r.job_name = String::from("nope");
        assert!(matches!(
            plan(&r, &snap, &db, &profiles),
            Err(PlanError::UnknownJob { .. })
        ));
    }

    #[test]
    fn plan_is_deterministic() {
        let (snap, profiles) = fixture(false);
        let mut db = ContextDb::new();
        db.append(ContextRecord::new("object-reco", "person", 0.0, 8.0));
        let r = request(1000.0, 100.0, true);
        let a = plan(&r, &snap, &db, &profiles).unwrap();
        let b = plan(&r, &snap, &db, &profiles).unwrap();
        assert_eq!(a, b);
    }
}
