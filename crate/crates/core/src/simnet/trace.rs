//! Event trace for golden-trace comparisons.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::TimeMs;

/// One recorded simulation event.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceEntry {
    pub time: TimeMs,
    pub component: String,
    pub event: String,
    pub payload_kb: f64,
}

/// Append-only log of everything that consumed simulated time or moved a
/// message. Rendered line format (one entry per line, trailing newline):
///
/// ```text
/// <time ms, 3 decimals>,<component>,<event>,<payload kb, 3 decimals>
/// ```
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Trace {
    entries: Vec<TraceEntry>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, time: TimeMs, component: &str, event: &str, payload_kb: f64) {
        self.entries.push(TraceEntry {
            time,
            component: component.to_string(),
            event: event.to_string(),
            payload_kb,
        });
    }

    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Canonical line-delimited rendering; byte-identical for identical
    /// runs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:.3},{},{},{:.3}",
                e.time, e.component, e.event, e.payload_kb
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_format_is_pinned() {
        let mut t = Trace::new();
        t.record(10.4, "channel", "sensor_capture", 8.0);
        t.record(261.0, "module", "inference", 8.0);
        assert_eq!(
            t.render(),
            "10.400,channel,sensor_capture,8.000\n261.000,module,inference,8.000\n"
        );
    }

    #[test]
    fn empty_trace_renders_empty() {
        assert_eq!(Trace::new().render(), "");
    }
}
