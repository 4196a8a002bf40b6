use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use thiserror::Error;

/// Caller-owned cancellation flag, polled by long computations.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Limits on a Groebner basis computation: an optional deadline and an
/// optional cancellation token.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    cancel: Option<CancelToken>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + timeout), cancel: None }
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    pub(crate) fn check(&self) -> Option<InterruptReason> {
        if self.cancel.as_ref().is_some_and(CancelToken::is_cancelled) {
            return Some(InterruptReason::Cancelled);
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Some(InterruptReason::Timeout);
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterruptReason {
    Timeout,
    Cancelled,
}

impl fmt::Display for InterruptReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterruptReason::Timeout => f.write_str("timeout"),
            InterruptReason::Cancelled => f.write_str("cancelled"),
        }
    }
}

/// Partial diagnostics of an interrupted Buchberger run.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{reason} after {pairs_processed} pairs (basis size {basis_size}, {pairs_pending} pairs pending)")]
pub struct Interrupted {
    pub reason: InterruptReason,
    pub basis_size: usize,
    pub pairs_processed: usize,
    pub pairs_pending: usize,
}
