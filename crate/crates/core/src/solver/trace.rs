/// Hooks invoked by the solvers. All methods default to no-ops, so
/// [`NoTrace`] compiles away.
pub trait Observer {
    fn on_step(&mut self, _step: u64) {}
    /// `node`'s out-edges are about to be relaxed.
    fn on_scan(&mut self, _step: u64, _node: usize) {}
    fn on_write(&mut self, _step: u64, _from: usize, _to: usize, _old: f64, _new: f64) {}
}

#[derive(Debug, Default, Clone, Copy)]
pub struct NoTrace;

impl Observer for NoTrace {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TraceEvent {
    Step(u64),
    Scan { step: u64, node: usize },
    Write { step: u64, from: usize, to: usize, old: f64, new: f64 },
}

/// Records every event in order.
#[derive(Debug, Default, Clone)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Observer for Trace {
    fn on_step(&mut self, step: u64) {
        self.events.push(TraceEvent::Step(step));
    }

    fn on_scan(&mut self, step: u64, node: usize) {
        self.events.push(TraceEvent::Scan { step, node });
    }

    fn on_write(&mut self, step: u64, from: usize, to: usize, old: f64, new: f64) {
        self.events.push(TraceEvent::Write { step, from, to, old, new });
    }
}
