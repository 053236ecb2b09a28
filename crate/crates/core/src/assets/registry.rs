//! The asset registry and its immutable snapshots.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::types::{JobDescriptor, Owner, QualifiedId, ThingDescriptor};
use super::AssetError;
use crate::TimeMs;

/// Mutable store of things and jobs. Every successful mutation bumps the
/// revision by exactly one; reads go through [`AssetRegistry::snapshot`].
#[derive(Debug, Clone, Default)]
pub struct AssetRegistry {
    things: BTreeMap<QualifiedId, ThingDescriptor>,
    jobs: BTreeMap<String, JobDescriptor>,
    revision: u64,
}

/// Immutable view of the registry at a single revision. Cheap to clone,
/// safe to hand to concurrent planners.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RegistrySnapshot {
    pub things: BTreeMap<QualifiedId, ThingDescriptor>,
    pub jobs: BTreeMap<String, JobDescriptor>,
    pub revision: u64,
}

impl RegistrySnapshot {
    pub fn thing(&self, id: &QualifiedId) -> Option<&ThingDescriptor> {
        self.things.get(id)
    }

    pub fn job(&self, name: &str) -> Option<&JobDescriptor> {
        self.jobs.get(name)
    }

    pub fn asset_count(&self) -> usize {
        self.things.len() + self.jobs.len()
    }
}

impl AssetRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn revision(&self) -> u64 {
        self.revision
    }

    pub fn thing(&self, id: &QualifiedId) -> Option<&ThingDescriptor> {
        self.things.get(id)
    }

    pub fn job(&self, name: &str) -> Option<&JobDescriptor> {
        self.jobs.get(name)
    }

    pub fn things(&self) -> impl Iterator<Item = &ThingDescriptor> {
        self.things.values()
    }

    pub fn jobs(&self) -> impl Iterator<Item = &JobDescriptor> {
        self.jobs.values()
    }

    /// Register or replace a thing. Re-registering the same (owner, name)
    /// is an upsert; `last_seen` never moves backwards.
    pub fn register_thing(&mut self, descriptor: ThingDescriptor) -> Result<u64, AssetError> {
        descriptor.validate()?;
        let id = descriptor.qualified_id();
        let mut descriptor = descriptor;
        if let Some(existing) = self.things.get(&id) {
            if existing.last_seen > descriptor.last_seen {
                descriptor.last_seen = existing.last_seen;
            }
        }
        self.things.insert(id, descriptor);
        self.revision += 1;
        Ok(self.revision)
    }

    /// Register or replace a job. Listed alternative sensors may be
    /// registered later (late binding).
    pub fn register_job(&mut self, descriptor: JobDescriptor) -> Result<u64, AssetError> {
        descriptor.validate()?;
        self.jobs.insert(descriptor.job_name.clone(), descriptor);
        self.revision += 1;
        Ok(self.revision)
    }

    /// Refresh a thing's liveness and overwrite the named quality values.
    /// Updates for names the descriptor does not track are ignored.
    pub fn heartbeat(
        &mut self,
        owner: Owner,
        thing_name: &str,
        quality_updates: &[(&str, f64)],
        now: TimeMs,
    ) -> Result<ThingDescriptor, AssetError> {
        let id = QualifiedId::new(owner, thing_name);
        let thing = self
            .things
            .get_mut(&id)
            .ok_or_else(|| AssetError::UnknownThing { id: id.to_string() })?;
        if now > thing.last_seen {
            thing.last_seen = now;
        }
        for &(name, value) in quality_updates {
            if let Some(q) = thing.quality_values.iter_mut().find(|q| q.name == name) {
                q.current = value;
            }
        }
        self.revision += 1;
        Ok(thing.clone())
    }

    /// Drop every thing not heard from for strictly more than
    /// `liveness_window_ms`; a thing exactly at the window boundary is
    /// retained. Counts as one mutation when anything was removed.
    pub fn prune_stale(&mut self, now: TimeMs, liveness_window_ms: f64) -> Vec<QualifiedId> {
        debug_assert!(liveness_window_ms > 0.0);
        let removed: Vec<QualifiedId> = self
            .things
            .iter()
            .filter(|(_, t)| now - t.last_seen > liveness_window_ms)
            .map(|(id, _)| id.clone())
            .collect();
        for id in &removed {
            self.things.remove(id);
        }
        if !removed.is_empty() {
            self.revision += 1;
        }
        removed
    }

    /// Record that `job_name` produced a result at `produced_at`.
    pub fn touch_job_result(&mut self, job_name: &str, produced_at: TimeMs) -> Result<u64, AssetError> {
        let job = self.jobs.get_mut(job_name).ok_or_else(|| AssetError::UnknownJob {
            name: job_name.to_string(),
        })?;
        job.last_updated_at = Some(match job.last_updated_at {
            Some(prev) if prev > produced_at => prev,
            _ => produced_at,
        });
        self.revision += 1;
        Ok(self.revision)
    }

    /// Add `client_id` to the job's subscriber list. Idempotent: only an
    /// actual insertion counts as a mutation.
    pub fn add_subscriber(&mut self, job_name: &str, client_id: &str) -> Result<bool, AssetError> {
        let job = self.jobs.get_mut(job_name).ok_or_else(|| AssetError::UnknownJob {
            name: job_name.to_string(),
        })?;
        let added = job.add_subscriber(client_id);
        if added {
            self.revision += 1;
        }
        Ok(added)
    }

    pub fn snapshot(&self) -> RegistrySnapshot {
        RegistrySnapshot {
            things: self.things.clone(),
            jobs: self.jobs.clone(),
            revision: self.revision,
        }
    }
}

/// Union of the edge and client asset views for planning.
///
/// Thing identity is (owner, name), so the same name under different
/// owners co-exists. When both sides carry the same qualified id the
/// fresher `last_seen` wins, the edge side on a tie. Jobs are keyed by
/// name with the same edge-wins rule. The merged revision is the edge
/// side's: execution validity is checked against the edge registry.
pub fn merge_assets(edge: &RegistrySnapshot, client: &RegistrySnapshot) -> RegistrySnapshot {
    let mut things = edge.things.clone();
    for (id, thing) in &client.things {
        match things.get(id) {
            Some(existing) if existing.last_seen >= thing.last_seen => {}
            _ => {
                things.insert(id.clone(), thing.clone());
            }
        }
    }
    let mut jobs = edge.jobs.clone();
    for (name, job) in &client.jobs {
        jobs.entry(name.clone()).or_insert_with(|| job.clone());
    }
    RegistrySnapshot {
        things,
        jobs,
        revision: edge.revision,
    }
}
