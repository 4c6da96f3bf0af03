//! Opt-in wall-clock accounting per computation phase.
//!
//! Phases nest (conversion time includes the character lookups it triggers),
//! so the totals are not additive.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Characters,
    Plethysm,
    Conversion,
    LittlewoodRichardson,
}

impl Phase {
    pub const ALL: [Phase; 4] = [
        Phase::Characters,
        Phase::Plethysm,
        Phase::Conversion,
        Phase::LittlewoodRichardson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Characters => "character table",
            Phase::Plethysm => "plethysm",
            Phase::Conversion => "conversion",
            Phase::LittlewoodRichardson => "littlewood-richardson",
        }
    }
}

static ENABLED: AtomicBool = AtomicBool::new(false);
static NANOS: [AtomicU64; 4] = [const { AtomicU64::new(0) }; 4];

pub fn enable() {
    ENABLED.store(true, Ordering::Relaxed);
}

pub fn is_enabled() -> bool {
    ENABLED.load(Ordering::Relaxed)
}

pub fn timed<R>(phase: Phase, f: impl FnOnce() -> R) -> R {
    if !is_enabled() {
        return f();
    }
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed().as_nanos() as u64;
    NANOS[phase as usize].fetch_add(elapsed, Ordering::Relaxed);
    out
}

/// Accumulated time per phase since start-up.
pub fn report() -> Vec<(Phase, Duration)> {
    Phase::ALL
        .iter()
        .map(|&p| (p, Duration::from_nanos(NANOS[p as usize].load(Ordering::Relaxed))))
        .collect()
}
