//! Asset domain types, the registry and the context database.
//!
//! Things are sensors (edge- or mobile-connected), jobs are the
//! intelligence tasks that run over them. The registry tracks both with a
//! monotonic revision; planning always works against an immutable
//! [`RegistrySnapshot`] taken at a single revision, so readers never see a
//! half-applied mutation.

mod context;
mod registry;
mod types;

pub use context::{ContextDb, ContextRecord, MAX_RECORDS_PER_JOB};
pub use registry::{merge_assets, AssetRegistry, RegistrySnapshot};
pub use types::{
    JobDescriptor, Owner, QualifiedId, QualityValue, TaskType, ThingDescriptor, ThingType,
};

use alloc::string::String;

/// Errors raised by registry operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssetError {
    #[error("invalid descriptor: {reason}")]
    InvalidDescriptor { reason: String },
    #[error("unknown thing `{id}`")]
    UnknownThing { id: String },
    #[error("unknown job `{name}`")]
    UnknownJob { name: String },
}
