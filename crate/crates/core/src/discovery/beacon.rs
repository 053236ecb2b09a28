//! Beacon frame encoding.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{snapshot_service_ids, DiscoveryError, ServiceId};
use crate::assets::RegistrySnapshot;

/// Default number of service ids per advertisement frame, reflecting the
/// small payload of a single advertisement packet.
pub const DEFAULT_BEACON_CAPACITY: usize = 4;

/// One advertisement frame.
///
/// Canonical byte layout (big-endian):
///
/// ```text
/// offset 0  u8   frame_index
/// offset 1  u8   frame_count
/// offset 2  u32  registry revision (low 32 bits)
/// offset 6  16B  service ids, frame_index .. capacity entries
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Beacon {
    pub frame_index: u8,
    pub frame_count: u8,
    pub registry_revision: u32,
    pub services: Vec<ServiceId>,
}

impl Beacon {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(6 + 16 * self.services.len());
        out.push(self.frame_index);
        out.push(self.frame_count);
        out.extend_from_slice(&self.registry_revision.to_be_bytes());
        for id in &self.services {
            out.extend_from_slice(&id.to_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, DiscoveryError> {
        if bytes.len() < 6 {
            return Err(DiscoveryError::MalformedFrame {
                reason: format!("frame of {} bytes is shorter than the header", bytes.len()),
            });
        }
        if (bytes.len() - 6) % 16 != 0 {
            return Err(DiscoveryError::MalformedFrame {
                reason: format!("payload of {} bytes is not a whole number of ids", bytes.len() - 6),
            });
        }
        let frame_index = bytes[0];
        let frame_count = bytes[1];
        if frame_count == 0 {
            return Err(DiscoveryError::MalformedFrame {
                reason: "frame_count is zero".into(),
            });
        }
        if frame_index >= frame_count {
            return Err(DiscoveryError::MalformedFrame {
                reason: format!("frame_index {frame_index} >= frame_count {frame_count}"),
            });
        }
        let registry_revision = u32::from_be_bytes([bytes[2], bytes[3], bytes[4], bytes[5]]);
        let services = bytes[6..]
            .chunks_exact(16)
            .map(|c| ServiceId::from_bytes(c.try_into().expect("chunk of 16")))
            .collect();
        Ok(Beacon {
            frame_index,
            frame_count,
            registry_revision,
            services,
        })
    }
}

/// Split the snapshot's service ids into rotation frames of at most
/// `capacity` ids. Every id lands in exactly one frame; an empty registry
/// still yields a single empty frame so the server's presence is
/// advertised.
pub fn encode_beacons(snapshot: &RegistrySnapshot, capacity: usize) -> Vec<Beacon> {
    assert!(capacity >= 1, "beacon capacity must be at least 1");
    let ids = snapshot_service_ids(snapshot);
    let frame_count = ids.len().div_ceil(capacity).max(1);
    assert!(
        frame_count <= u8::MAX as usize,
        "registry too large for the u8 frame counter at this capacity"
    );
    let revision = snapshot.revision as u32;
    if ids.is_empty() {
        return alloc::vec![Beacon {
            frame_index: 0,
            frame_count: 1,
            registry_revision: revision,
            services: Vec::new(),
        }];
    }
    ids.chunks(capacity)
        .enumerate()
        .map(|(i, chunk)| Beacon {
            frame_index: i as u8,
            frame_count: frame_count as u8,
            registry_revision: revision,
            services: chunk.to_vec(),
        })
        .collect()
}

/// Pure scan filter: which of the wanted ids appear in the observed
/// frames.
pub fn scan_match(observed: &[Beacon], wanted: &BTreeSet<ServiceId>) -> BTreeSet<ServiceId> {
    observed
        .iter()
        .flat_map(|b| b.services.iter())
        .filter(|id| wanted.contains(id))
        .copied()
        .collect()
}
