//! Quality gating and sensor selection.

use alloc::format;
use alloc::string::ToString;

use super::PlanError;
use crate::assets::{QualifiedId, RegistrySnapshot, ThingDescriptor};

/// A thing passes when every quality value sits inside its accepted range
/// (bounds inclusive). A thing with no quality values has nothing to fail.
pub fn check_quality(thing: &ThingDescriptor) -> bool {
    thing.quality_values.iter().all(|q| q.within_accepted())
}

/// Worst-case slack across the thing's quality values: the minimum over
/// values of the distance from the nearer accepted bound. No quality
/// values means unbounded slack.
pub fn quality_margin(thing: &ThingDescriptor) -> f64 {
    thing
        .quality_values
        .iter()
        .map(|q| q.margin())
        .fold(f64::INFINITY, f64::min)
}

/// Pick the job's sensor: among listed things present in the snapshot and
/// passing [`check_quality`], prefer tethered over untethered (sparing
/// battery-powered devices), break ties by larger quality margin, then by
/// lexicographic qualified id. Deterministic for a given snapshot.
pub fn select_sensor(
    snapshot: &RegistrySnapshot,
    job_name: &str,
) -> Result<QualifiedId, PlanError> {
    let job = snapshot.job(job_name).ok_or_else(|| PlanError::UnknownJob {
        name: job_name.to_string(),
    })?;

    let mut candidates = 0usize;
    let mut best: Option<&ThingDescriptor> = None;
    for thing in snapshot.things.values() {
        if !job.alternative_sensors.iter().any(|n| *n == thing.thing_name) {
            continue;
        }
        candidates += 1;
        if !check_quality(thing) {
            continue;
        }
        best = Some(match best {
            None => thing,
            Some(cur) => {
                if prefer(thing, cur) {
                    thing
                } else {
                    cur
                }
            }
        });
    }

    match best {
        Some(t) => Ok(t.qualified_id()),
        None => Err(PlanError::NoViableSensor {
            job: job_name.to_string(),
            reason: if candidates == 0 {
                format!(
                    "none of the {} listed sensors is registered",
                    job.alternative_sensors.len()
                )
            } else {
                format!("all {candidates} candidate sensors fail their quality checks")
            },
        }),
    }
}

/// True when `a` outranks `b` under the documented ordering.
fn prefer(a: &ThingDescriptor, b: &ThingDescriptor) -> bool {
    if a.tethered != b.tethered {
        return a.tethered;
    }
    let (ma, mb) = (quality_margin(a), quality_margin(b));
    match ma.total_cmp(&mb) {
        core::cmp::Ordering::Greater => true,
        core::cmp::Ordering::Less => false,
        core::cmp::Ordering::Equal => a.qualified_id() < b.qualified_id(),
    }
}
