//! Error types shared across the workbench.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Positioned error produced by the text-format parsers.
///
/// Rendered as `line:col: message`; front ends prepend the file name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("label arity {got} does not match the ket's {expected} slots (label \"{label}\")")]
    ArityMismatch {
        expected: usize,
        got: usize,
        label: String,
    },
    #[error("empty mode label in basis label")]
    EmptyModeLabel,
    #[error("non-finite amplitude for label \"{label}\"")]
    NonFiniteAmplitude { label: String },
    #[error("cannot normalize a zero state")]
    ZeroNorm,
    #[error("kets have different slot counts ({left} vs {right})")]
    SlotMismatch { left: usize, right: usize },
    #[error("slot {slot} out of range for a {slots}-slot ket")]
    SlotOutOfRange { slot: usize, slots: usize },
    #[error("state is not normalized (Σ|amp|² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("occupation number {value} out of range (must be 0 or 1)")]
    OccupancyOutOfRange { value: u8 },

    #[error("duplicate mode label \"{label}\" in mode map")]
    DuplicateModeLabel { label: String },
    #[error("matrix is not unitary (max |M†M − I| = {deviation:.3e})")]
    NonUnitary { deviation: f64 },
    #[error("mode maps do not chain: outer inputs {outer:?} != inner outputs {inner:?}")]
    ModeMapMismatch { outer: Vec<String>, inner: Vec<String> },

    #[error("conditioning on an impossible outcome: \"{label}\" on slot {slot} has probability 0")]
    ZeroProbability { slot: usize, label: String },
    #[error("slot {slot} was consumed by an absorbing detection; it cannot be measured again")]
    ConsumedSlot { slot: usize },
    #[error("mode \"{label}\" has no ancilla marking")]
    UnmappedLabel { label: String },

    #[error("invalid frame: |v| must be < c (v = {v}, c = {c})")]
    SuperluminalFrame { v: f64, c: f64 },
    #[error("events are {class} separated; a simultaneity frame requires spacelike separation")]
    NotSpacelike { class: String },

    #[error("invalid probability table: {detail}")]
    InvalidProbability { detail: String },
    #[error("invalid measurement times: need t_meas2 >= t_meas1 >= 0 (got t_meas1 = {t1}, t_meas2 = {t2})")]
    InvalidTimes { t1: f64, t2: f64 },
    #[error("sample count must be positive")]
    ZeroSamples,
    #[error("invalid pair configuration: {detail}")]
    InvalidPairConfig { detail: String },

    #[error("{0}")]
    Parse(#[from] ParseError),
}
