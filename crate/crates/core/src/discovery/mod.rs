//! Advertisement encoding and the client discovery session.
//!
//! Registry contents are summarized as 128-bit service identifiers and
//! rotated through fixed-capacity beacon frames. A client scans for the
//! identifiers it cares about, then walks Matched → Connecting →
//! Interrogating → Ready over the connection channel before it can invoke
//! anything.

mod beacon;
mod session;

pub use beacon::{encode_beacons, scan_match, Beacon, DEFAULT_BEACON_CAPACITY};
pub use session::{interrogate, ClientSession, SessionState};

use alloc::string::String;
use core::fmt;

use crate::assets::{QualifiedId, RegistrySnapshot};
use crate::hash::fnv1a_128;

/// Discovery-layer errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiscoveryError {
    /// The connection exchange exceeded the session's time budget.
    #[error("channel timeout after {elapsed_ms}ms (budget {budget_ms}ms)")]
    ChannelTimeout { elapsed_ms: f64, budget_ms: f64 },
    /// A session method was called in the wrong state.
    #[error("invalid session state: expected {expected}, was {actual}")]
    InvalidState {
        expected: &'static str,
        actual: &'static str,
    },
    /// A beacon frame failed to decode.
    #[error("malformed beacon frame: {reason}")]
    MalformedFrame { reason: String },
}

/// What kind of asset a service id names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AssetKind {
    Thing,
    Job,
}

impl AssetKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AssetKind::Thing => "thing",
            AssetKind::Job => "job",
        }
    }
}

/// 128-bit service identifier advertised for one asset.
///
/// Derived as the FNV-1a-128 hash of `kind:owner:name`, so equal assets
/// map to equal ids on every platform and distinct assets collide with
/// negligible probability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ServiceId(pub u128);

impl ServiceId {
    pub fn to_bytes(self) -> [u8; 16] {
        self.0.to_be_bytes()
    }

    pub fn from_bytes(bytes: [u8; 16]) -> Self {
        ServiceId(u128::from_be_bytes(bytes))
    }
}

impl fmt::Display for ServiceId {
    /// UUID-style grouping of the 32 hex digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.0;
        write!(
            f,
            "{:08x}-{:04x}-{:04x}-{:04x}-{:012x}",
            (b >> 96) as u32,
            (b >> 80) as u16,
            (b >> 64) as u16,
            (b >> 48) as u16,
            b & 0xffff_ffff_ffff
        )
    }
}

/// Deterministic service id for `(kind, owner, name)`.
pub fn service_id_of(kind: AssetKind, owner: &str, name: &str) -> ServiceId {
    debug_assert!(!name.is_empty());
    let mut buf = alloc::vec::Vec::with_capacity(kind.as_str().len() + owner.len() + name.len() + 2);
    buf.extend_from_slice(kind.as_str().as_bytes());
    buf.push(b':');
    buf.extend_from_slice(owner.as_bytes());
    buf.push(b':');
    buf.extend_from_slice(name.as_bytes());
    ServiceId(fnv1a_128(&buf))
}

/// Service id of a registered thing.
pub fn thing_service_id(id: &QualifiedId) -> ServiceId {
    service_id_of(AssetKind::Thing, id.owner.as_str(), &id.name)
}

/// Service id of a registered job. Jobs are hosted by the edge server.
pub fn job_service_id(job_name: &str) -> ServiceId {
    service_id_of(AssetKind::Job, "edge", job_name)
}

/// All service ids present in a snapshot, in ascending id order.
pub fn snapshot_service_ids(snapshot: &RegistrySnapshot) -> alloc::vec::Vec<ServiceId> {
    let mut ids: alloc::vec::Vec<ServiceId> = snapshot
        .things
        .keys()
        .map(thing_service_id)
        .chain(snapshot.jobs.keys().map(|n| job_service_id(n)))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn service_id_is_deterministic() {
        let a = service_id_of(AssetKind::Thing, "edge", "cam1");
        let b = service_id_of(AssetKind::Thing, "edge", "cam1");
        assert_eq!(a, b);
    }

    #[test]
    fn kind_is_part_of_the_namespace() {
        // Oracle: recompute both hashes from the documented preimage with
        // an independent FNV-1a-128 walk.
        fn oracle(preimage: &str) -> u128 {
            let mut h = crate::hash::FNV128_OFFSET;
            for &b in preimage.as_bytes() {
                h ^= u128::from(b);
                h = h.wrapping_mul(crate::hash::FNV128_PRIME);
            }
            h
        }
        let thing = service_id_of(AssetKind::Thing, "edge", "cam1");
        let job = service_id_of(AssetKind::Job, "edge", "cam1");
        assert_eq!(thing.0, oracle("thing:edge:cam1"));
        assert_eq!(job.0, oracle("job:edge:cam1"));
        assert_ne!(thing, job);
    }

    #[test]
    fn ten_thousand_random_names_have_distinct_ids() {
        let mut rng = crate::hash::SplitMix64::new(5);
        let mut seen = alloc::collections::BTreeSet::new();
        for _ in 0..10_000 {
            let name = alloc::format!("sensor-{:016x}", rng.next_u64());
            assert!(seen.insert(service_id_of(AssetKind::Thing, "edge", &name)));
        }
        assert_eq!(seen.len(), 10_000);
    }

    #[test]
    fn display_is_uuid_shaped() {
        let id = ServiceId(0x0011_2233_4455_6677_8899_aabb_ccdd_eeff);
        assert_eq!(
            alloc::format!("{id}"),
            "00112233-4455-6677-8899-aabbccddeeff"
        );
    }
}
