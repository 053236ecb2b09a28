//! Descriptor types for things (sensors) and jobs (intelligence tasks).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::AssetError;
use crate::TimeMs;

/// Who a sensor is attached to. Edge-connected sensors are installed in
/// the environment; mobile-connected ones ride along with a user device.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Owner {
    EdgeConnected,
    MobileConnected,
}

impl Owner {
    pub fn as_str(&self) -> &'static str {
        match self {
            Owner::EdgeConnected => "edge",
            Owner::MobileConnected => "mobile",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "edge" => Some(Owner::EdgeConnected),
            "mobile" => Some(Owner::MobileConnected),
            _ => None,
        }
    }
}

impl fmt::Display for Owner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sensor kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThingType {
    Camera,
    Microphone,
    Temperature,
    Motion,
    Light,
    Other,
}

impl ThingType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThingType::Camera => "camera",
            ThingType::Microphone => "microphone",
            ThingType::Temperature => "temperature",
            ThingType::Motion => "motion",
            ThingType::Light => "light",
            ThingType::Other => "other",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "camera" => Some(ThingType::Camera),
            "microphone" => Some(ThingType::Microphone),
            "temperature" => Some(ThingType::Temperature),
            "motion" => Some(ThingType::Motion),
            "light" => Some(ThingType::Light),
            "other" => Some(ThingType::Other),
            _ => None,
        }
    }
}

/// Intelligence-task kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TaskType {
    ObjectRecognition,
    FaceRecognition,
    Other,
}

impl TaskType {
    pub fn as_str(&self) -> &'static str {
        match self {
            TaskType::ObjectRecognition => "object-recognition",
            TaskType::FaceRecognition => "face-recognition",
            TaskType::Other => "other",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "object-recognition" => Some(TaskType::ObjectRecognition),
            "face-recognition" => Some(TaskType::FaceRecognition),
            "other" => Some(TaskType::Other),
            _ => None,
        }
    }
}

impl fmt::Display for TaskType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One tracked quality measure, e.g. brightness for a camera or noise for
/// a microphone. Values are dimensionless; each descriptor carries its own
/// accepted range.
#[derive(Debug, Clone, PartialEq)]
pub struct QualityValue {
    pub name: String,
    pub current: f64,
    pub accepted_min: f64,
    pub accepted_max: f64,
}

impl QualityValue {
    pub fn new(name: &str, current: f64, accepted_min: f64, accepted_max: f64) -> Self {
        Self {
            name: String::from(name),
            current,
            accepted_min,
            accepted_max,
        }
    }

    /// True when the current value sits inside the accepted range
    /// (inclusive on both ends).
    pub fn within_accepted(&self) -> bool {
        self.accepted_min <= self.current && self.current <= self.accepted_max
    }

    /// Distance from the nearer bound; negative when outside the range.
    pub fn margin(&self) -> f64 {
        (self.current - self.accepted_min).min(self.accepted_max - self.current)
    }
}

/// Registry identity of a thing: same name under different owners denotes
/// two distinct sensors. Ordering is lexicographic on the rendered
/// `owner:name` form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QualifiedId {
    pub owner: Owner,
    pub name: String,
}

impl QualifiedId {
    pub fn new(owner: Owner, name: &str) -> Self {
        Self {
            owner,
            name: String::from(name),
        }
    }
}

impl fmt::Display for QualifiedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.owner, self.name)
    }
}

/// A registered sensor.
#[derive(Debug, Clone, PartialEq)]
pub struct ThingDescriptor {
    pub thing_name: String,
    pub thing_type: ThingType,
    pub owner: Owner,
    pub tethered: bool,
    pub quality_values: Vec<QualityValue>,
    /// Position in meters, when known. Stored for distance-aware policies;
    /// the default planner does not consult it.
    pub coordinates: Option<[f64; 3]>,
    pub last_seen: TimeMs,
}

impl ThingDescriptor {
    pub fn qualified_id(&self) -> QualifiedId {
        QualifiedId::new(self.owner, &self.thing_name)
    }

    pub fn validate(&self) -> Result<(), AssetError> {
        if self.thing_name.is_empty() {
            return Err(AssetError::InvalidDescriptor {
                reason: String::from("thing_name is empty"),
            });
        }
        if !self.last_seen.is_finite() || self.last_seen < 0.0 {
            return Err(AssetError::InvalidDescriptor {
                reason: format!("last_seen {} is not a valid timestamp", self.last_seen),
            });
        }
        for (i, q) in self.quality_values.iter().enumerate() {
            if q.name.is_empty() {
                return Err(AssetError::InvalidDescriptor {
                    reason: format!("quality value #{i} has an empty name"),
                });
            }
            if !(q.current.is_finite() && q.accepted_min.is_finite() && q.accepted_max.is_finite())
            {
                return Err(AssetError::InvalidDescriptor {
                    reason: format!("quality value `{}` has non-finite bounds", q.name),
                });
            }
            if q.accepted_min > q.accepted_max {
                return Err(AssetError::InvalidDescriptor {
                    reason: format!(
                        "quality value `{}` has accepted_min {} > accepted_max {}",
                        q.name, q.accepted_min, q.accepted_max
                    ),
                });
            }
            if self.quality_values[..i].iter().any(|p| p.name == q.name) {
                return Err(AssetError::InvalidDescriptor {
                    reason: format!("duplicate quality value name `{}`", q.name),
                });
            }
        }
        if let Some(c) = self.coordinates {
            if c.iter().any(|v| !v.is_finite()) {
                return Err(AssetError::InvalidDescriptor {
                    reason: String::from("coordinates contain a non-finite component"),
                });
            }
        }
        Ok(())
    }
}

/// A registered intelligence task.
#[derive(Debug, Clone, PartialEq)]
pub struct JobDescriptor {
    pub job_name: String,
    pub task_type: TaskType,
    /// Candidate sensors by thing name; any owner's thing with a listed
    /// name qualifies. Selection order comes from the planner's policy,
    /// not from this list.
    pub alternative_sensors: Vec<String>,
    pub periodic: bool,
    pub period_ms: Option<f64>,
    /// Sorted, deduplicated client ids.
    pub subscribers: Vec<String>,
    /// Timestamp of the newest result produced for this job.
    pub last_updated_at: Option<TimeMs>,
    /// Whether the task's model is preloaded in edge memory.
    pub model_resident: bool,
}

impl JobDescriptor {
    pub fn validate(&self) -> Result<(), AssetError> {
        if self.job_name.is_empty() {
            return Err(AssetError::InvalidDescriptor {
                reason: String::from("job_name is empty"),
            });
        }
        if self.periodic {
            match self.period_ms {
                Some(p) if p > 0.0 && p.is_finite() => {}
                Some(p) => {
                    return Err(AssetError::InvalidDescriptor {
                        reason: format!("periodic job has non-positive period {p}"),
                    })
                }
                None => {
                    return Err(AssetError::InvalidDescriptor {
                        reason: String::from("periodic job without a period"),
                    })
                }
            }
        }
        if let Some(t) = self.last_updated_at {
            if !t.is_finite() || t < 0.0 {
                return Err(AssetError::InvalidDescriptor {
                    reason: format!("last_updated_at {t} is not a valid timestamp"),
                });
            }
        }
        Ok(())
    }

    /// Insert a subscriber keeping the list sorted and unique. Returns
    /// whether the list changed.
    pub fn add_subscriber(&mut self, client_id: &str) -> bool {
        match self.subscribers.binary_search_by(|s| s.as_str().cmp(client_id)) {
            Ok(_) => false,
            Err(pos) => {
                self.subscribers.insert(pos, String::from(client_id));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn camera(name: &str) -> ThingDescriptor {
        ThingDescriptor {
            thing_name: String::from(name),
            thing_type: ThingType::Camera,
            owner: Owner::EdgeConnected,
            tethered: true,
            quality_values: vec![QualityValue::new("brightness", 0.7, 0.3, 1.0)],
            coordinates: None,
            last_seen: 0.0,
        }
    }

    #[test]
    fn valid_descriptor_passes() {
        assert!(camera("cam1").validate().is_ok());
    }

    #[test]
    fn inverted_quality_range_is_invalid() {
        let mut d = camera("cam1");
        d.quality_values[0].accepted_min = 1.0;
        d.quality_values[0].accepted_max = 0.3;
        assert!(matches!(
            d.validate(),
            Err(AssetError::InvalidDescriptor { .. })
        ));
    }

    #[test]
    fn empty_name_is_invalid() {
        assert!(camera("").validate().is_err());
    }

    #[test]
    fn duplicate_quality_names_are_invalid() {
        let mut d = camera("cam1");
        d.quality_values.push(QualityValue::new("brightness", 0.5, 0.0, 1.0));
        assert!(d.validate().is_err());
    }

    #[test]
    fn periodic_requires_positive_period() {
        let mut j = JobDescriptor {
            job_name: String::from("face-reco"),
            task_type: TaskType::FaceRecognition,
            alternative_sensors: vec![String::from("cam1")],
            periodic: true,
            period_ms: None,
            subscribers: vec![],
            last_updated_at: None,
            model_resident: false,
        };
        assert!(j.validate().is_err());
        j.period_ms = Some(0.0);
        assert!(j.validate().is_err());
        j.period_ms = Some(1000.0);
        assert!(j.validate().is_ok());
    }

    #[test]
    fn qualified_id_ordering_is_lexicographic() {
        let edge = QualifiedId::new(Owner::EdgeConnected, "cam1");
        let mobile = QualifiedId::new(Owner::MobileConnected, "cam1");
        assert!(edge < mobile); // "edge:cam1" < "mobile:cam1"
        assert_eq!(format!("{edge}"), "edge:cam1");
    }

    #[test]
    fn subscriber_insert_is_idempotent_and_sorted() {
        let mut j = JobDescriptor {
            job_name: String::from("j"),
            task_type: TaskType::Other,
            alternative_sensors: vec![],
            periodic: false,
            period_ms: None,
            subscribers: vec![],
            last_updated_at: None,
            model_resident: false,
        };
        assert!(j.add_subscriber("carol"));
        assert!(j.add_subscriber("alice"));
        assert!(!j.add_subscriber("carol"));
        assert_eq!(j.subscribers, vec!["alice", "carol"]);
    }
}
