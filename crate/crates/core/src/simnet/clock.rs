//! Virtual clock and event queue.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use super::SimError;
use crate::TimeMs;

/// Handle for a scheduled event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EventId(pub u64);

/// An event popped off the queue.
#[derive(Debug, Clone)]
pub struct Fired<E> {
    pub time: TimeMs,
    pub id: EventId,
    pub payload: E,
}

struct Scheduled<E> {
    due: TimeMs,
    seq: u64,
    payload: E,
}

// Min-heap ordering: earliest due time first, insertion order among equal
// due times (stable FIFO).
impl<E> PartialEq for Scheduled<E> {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}
impl<E> Eq for Scheduled<E> {}
impl<E> Ord for Scheduled<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.due
            .total_cmp(&other.due)
            .then_with(|| self.seq.cmp(&other.seq))
            .reverse()
    }
}
impl<E> PartialOrd for Scheduled<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Discrete-event clock. `now` never decreases; events with equal due time
/// fire in insertion order.
pub struct SimClock<E> {
    now: TimeMs,
    seq: u64,
    processed: u64,
    max_events: u64,
    queue: BinaryHeap<Scheduled<E>>,
}

/// Default guard on the number of events one loop call may process. A
/// periodic workload that never drains the queue trips this instead of
/// hanging the process.
pub const DEFAULT_MAX_EVENTS: u64 = 10_000_000;

impl<E> Default for SimClock<E> {
    fn default() -> Self {
        Self::new()
    }
}

impl<E> SimClock<E> {
    pub fn new() -> Self {
        Self::with_max_events(DEFAULT_MAX_EVENTS)
    }

    pub fn with_max_events(max_events: u64) -> Self {
        Self {
            now: 0.0,
            seq: 0,
            processed: 0,
            max_events,
            queue: BinaryHeap::new(),
        }
    }

    pub fn now(&self) -> TimeMs {
        self.now
    }

    pub fn pending(&self) -> usize {
        self.queue.len()
    }

    /// Schedule `payload` to fire `delay_ms` from now. Zero-delay events
    /// fire after already-queued events with the same due time.
    pub fn schedule(&mut self, delay_ms: TimeMs, payload: E) -> EventId {
        assert!(
            delay_ms >= 0.0 && delay_ms.is_finite(),
            "delay must be finite and non-negative"
        );
        self.schedule_at(self.now + delay_ms, payload)
    }

    /// Schedule `payload` at absolute time `due` (clamped to `now`).
    pub fn schedule_at(&mut self, due: TimeMs, payload: E) -> EventId {
        let due = if due < self.now { self.now } else { due };
        let seq = self.seq;
        self.seq += 1;
        self.queue.push(Scheduled { due, seq, payload });
        EventId(seq)
    }

    /// Move the clock forward to `t`. Moving backwards is a no-op; the
    /// clock is monotonic by construction.
    pub fn advance_to(&mut self, t: TimeMs) {
        if t > self.now {
            self.now = t;
        }
    }

    /// Pop the next event and advance the clock to its due time.
    pub fn pop_next(&mut self) -> Option<Fired<E>> {
        let ev = self.queue.pop()?;
        self.advance_to(ev.due);
        self.processed += 1;
        Some(Fired {
            time: self.now,
            id: EventId(ev.seq),
            payload: ev.payload,
        })
    }

    /// Pop the next event only if it is due at or before `limit`.
    pub fn pop_due(&mut self, limit: TimeMs) -> Option<Fired<E>> {
        if self.queue.peek().map(|e| e.due <= limit)? {
            self.pop_next()
        } else {
            None
        }
    }

    /// Process events until the queue is empty, handing each to `handle`.
    /// The handler may schedule further events and advance the clock.
    /// Returns the final time, or [`SimError::HorizonExceeded`] if the
    /// event guard trips before the queue drains.
    pub fn run_until_idle(
        &mut self,
        mut handle: impl FnMut(&mut Self, Fired<E>),
    ) -> Result<TimeMs, SimError> {
        loop {
            if self.queue.is_empty() {
                return Ok(self.now);
            }
            if self.processed >= self.max_events {
                return Err(SimError::HorizonExceeded {
                    at_ms: self.now,
                    processed: self.processed,
                });
            }
            let fired = self.pop_next().expect("queue checked non-empty");
            handle(self, fired);
        }
    }

    /// Process events due at or before `horizon`, then advance the clock
    /// to the horizon. Events scheduled beyond it stay queued.
    pub fn run_until(
        &mut self,
        horizon: TimeMs,
        mut handle: impl FnMut(&mut Self, Fired<E>),
    ) -> Result<TimeMs, SimError> {
        loop {
            if self.processed >= self.max_events {
                return Err(SimError::HorizonExceeded {
                    at_ms: self.now,
                    processed: self.processed,
                });
            }
            match self.pop_due(horizon) {
                Some(fired) => handle(self, fired),
                None => {
                    self.advance_to(horizon);
                    return Ok(self.now);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn zero_delay_fires_after_queued_same_time_events() {
        let mut clock = SimClock::new();
        clock.schedule(0.0, "first");
        clock.schedule(0.0, "second");
        assert_eq!(clock.pop_next().unwrap().payload, "first");
        assert_eq!(clock.pop_next().unwrap().payload, "second");
        assert_eq!(clock.now(), 0.0);
    }

    #[test]
    fn earlier_due_fires_first_regardless_of_insertion() {
        let mut clock = SimClock::new();
        clock.schedule(5.0, "late");
        clock.schedule(3.0, "early");
        assert_eq!(clock.pop_next().unwrap().payload, "early");
        assert_eq!(clock.now(), 3.0);
        assert_eq!(clock.pop_next().unwrap().payload, "late");
        assert_eq!(clock.now(), 5.0);
    }

    #[test]
    fn firing_order_matches_sort_by_time_then_insertion_oracle() {
        // Oracle: stable sort of (due, insertion index) over 1000 random
        // events, compared against the heap's pop order.
        let mut rng = crate::hash::SplitMix64::new(7);
        let mut clock = SimClock::new();
        let mut expected: Vec<(TimeMs, usize)> = Vec::new();
        for i in 0..1000 {
            // Coarse grid so duplicate due times actually occur.
            let due = (rng.next_u64() % 50) as f64;
            clock.schedule(due, i);
            expected.push((due, i));
        }
        expected.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

        let mut fired = Vec::new();
        while let Some(ev) = clock.pop_next() {
            fired.push((ev.time, ev.payload));
        }
        assert_eq!(fired, expected);
    }

    #[test]
    fn run_until_idle_on_empty_queue_returns_now() {
        let mut clock: SimClock<u32> = SimClock::new();
        clock.advance_to(17.5);
        let t = clock.run_until_idle(|_, _| {}).unwrap();
        assert_eq!(t, 17.5);
    }

    #[test]
    fn run_until_idle_guard_trips_on_self_rescheduling_event() {
        let mut clock = SimClock::with_max_events(100);
        clock.schedule(1.0, ());
        let err = clock
            .run_until_idle(|c, _| {
                c.schedule(1.0, ());
            })
            .unwrap_err();
        assert!(matches!(err, SimError::HorizonExceeded { processed: 100, .. }));
    }

    #[test]
    fn run_until_leaves_future_events_queued() {
        let mut clock = SimClock::new();
        clock.schedule(4.0, "in");
        clock.schedule(11.0, "out");
        let mut seen = Vec::new();
        let t = clock.run_until(10.0, |_, ev| seen.push(ev.payload)).unwrap();
        assert_eq!(t, 10.0);
        assert_eq!(seen, ["in"]);
        assert_eq!(clock.pending(), 1);
    }

    #[test]
    fn event_due_exactly_at_horizon_fires() {
        let mut clock = SimClock::new();
        clock.schedule(10.0, ());
        let mut count = 0;
        clock.run_until(10.0, |_, _| count += 1).unwrap();
        assert_eq!(count, 1);
    }
}
