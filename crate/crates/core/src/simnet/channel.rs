//! Named channel segments with seeded sampling and clock integration.

use alloc::string::ToString;

use super::{LatencyModel, SimClock, SimError, Trace};
use crate::hash::{derive_seed, SplitMix64};
use crate::TimeMs;

/// The timed segments of the client↔edge, edge↔sensor and edge↔cloud
/// interactions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Segment {
    /// Scan start until the matching advertisement frame is observed.
    ScanGap,
    /// Connection establishment after a match.
    Connect,
    /// Service and characteristic enumeration before first use.
    Enumerate,
    /// Client request reaching the edge server.
    Request,
    /// Base cost of returning a response to the client.
    Response,
    /// Size-dependent part of the response, per kilobyte of payload.
    ResponsePerKb,
    /// Pulling one input sample from a sensor to the edge server.
    SensorCapture,
    /// Round trip to the remote vision endpoint.
    CloudRoundTrip,
}

impl Segment {
    pub const ALL: [Segment; 8] = [
        Segment::ScanGap,
        Segment::Connect,
        Segment::Enumerate,
        Segment::Request,
        Segment::Response,
        Segment::ResponsePerKb,
        Segment::SensorCapture,
        Segment::CloudRoundTrip,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Segment::ScanGap => "scan_gap",
            Segment::Connect => "connect",
            Segment::Enumerate => "enumerate",
            Segment::Request => "request",
            Segment::Response => "response",
            Segment::ResponsePerKb => "response_per_kb",
            Segment::SensorCapture => "sensor_capture",
            Segment::CloudRoundTrip => "cloud_round_trip",
        }
    }

    pub fn parse(name: &str) -> Result<Self, SimError> {
        Segment::ALL
            .iter()
            .copied()
            .find(|s| s.as_str() == name)
            .ok_or(SimError::UnknownSegment {
                name: name.to_string(),
            })
    }
}

/// One latency model per segment.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelConfig {
    pub scan_gap: LatencyModel,
    pub connect: LatencyModel,
    pub enumerate: LatencyModel,
    pub request: LatencyModel,
    pub response: LatencyModel,
    pub response_per_kb: LatencyModel,
    pub sensor_capture: LatencyModel,
    pub cloud_round_trip: LatencyModel,
}

impl ChannelConfig {
    /// All segments at zero latency.
    pub fn zero() -> Self {
        Self {
            scan_gap: LatencyModel::constant(0.0),
            connect: LatencyModel::constant(0.0),
            enumerate: LatencyModel::constant(0.0),
            request: LatencyModel::constant(0.0),
            response: LatencyModel::constant(0.0),
            response_per_kb: LatencyModel::constant(0.0),
            sensor_capture: LatencyModel::constant(0.0),
            cloud_round_trip: LatencyModel::constant(0.0),
        }
    }

    pub fn segment(&self, seg: Segment) -> &LatencyModel {
        match seg {
            Segment::ScanGap => &self.scan_gap,
            Segment::Connect => &self.connect,
            Segment::Enumerate => &self.enumerate,
            Segment::Request => &self.request,
            Segment::Response => &self.response,
            Segment::ResponsePerKb => &self.response_per_kb,
            Segment::SensorCapture => &self.sensor_capture,
            Segment::CloudRoundTrip => &self.cloud_round_trip,
        }
    }

    pub fn segment_mut(&mut self, seg: Segment) -> &mut LatencyModel {
        match seg {
            Segment::ScanGap => &mut self.scan_gap,
            Segment::Connect => &mut self.connect,
            Segment::Enumerate => &mut self.enumerate,
            Segment::Request => &mut self.request,
            Segment::Response => &mut self.response,
            Segment::ResponsePerKb => &mut self.response_per_kb,
            Segment::SensorCapture => &mut self.sensor_capture,
            Segment::CloudRoundTrip => &mut self.cloud_round_trip,
        }
    }

    pub fn is_valid(&self) -> bool {
        Segment::ALL.iter().all(|&s| self.segment(s).is_valid())
    }
}

/// A channel binds a [`ChannelConfig`] to per-segment random streams
/// derived from one seed. Each segment owns its stream, so reconfiguring
/// or adding a segment never perturbs the draws of the others.
#[derive(Debug, Clone)]
pub struct Channel {
    config: ChannelConfig,
    streams: [SplitMix64; Segment::ALL.len()],
}

impl Channel {
    pub fn new(config: ChannelConfig, seed: u64) -> Self {
        let streams = Segment::ALL
            .map(|seg| SplitMix64::new(derive_seed(seed, seg.as_str())));
        Self { config, streams }
    }

    pub fn config(&self) -> &ChannelConfig {
        &self.config
    }

    /// Draw one delay for `seg`, consuming that segment's stream.
    pub fn sample(&mut self, seg: Segment) -> f64 {
        let idx = Segment::ALL.iter().position(|&s| s == seg).unwrap();
        self.config.segment(seg).sample(&mut self.streams[idx])
    }

    /// Move `payload_kb` across `seg`: advances the clock to the arrival
    /// time and records a trace line. The response segment additionally
    /// pays the size-dependent per-kilobyte cost.
    pub fn transfer<E>(
        &mut self,
        seg: Segment,
        payload_kb: f64,
        clock: &mut SimClock<E>,
        trace: &mut Trace,
    ) -> TimeMs {
        let mut delay = self.sample(seg);
        if seg == Segment::Response {
            delay += payload_kb * self.sample(Segment::ResponsePerKb);
        }
        let arrival = clock.now() + delay;
        clock.advance_to(arrival);
        trace.record(arrival, "channel", seg.as_str(), payload_kb);
        arrival
    }
}
