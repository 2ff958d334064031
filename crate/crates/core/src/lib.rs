//! Desk-scale workbench for two-particle path-entangled interferometry,
//! occupation-number expectations, Lorentz-frame event analysis, and a
//! random-jump particle model, with scripted scenario reports.
//!
//! Modules:
//! - [`state`]: sparse kets over labeled path bases, occupation states
//! - [`optics`]: unitary mode maps (beam splitters, phase shifters) on slots
//! - [`measurement`]: projective collapse, ancillas, seeded sampling
//! - [`relativity`]: 1+1D boosts, interval classes, event ordering
//! - [`rdm`]: jump-model Monte Carlo (density sampling, pair correlations)
//! - [`notation`]: ket-expression and bench-layout text formats
//! - [`scenarios`]: six end-to-end analyses with verdict reports
//! - [`stats`]: chi-square and binomial-sigma acceptance helpers
//!
//! All state values are immutable after construction and all operations are
//! pure; randomness flows only through explicit seeds.

pub mod error;
pub mod measurement;
pub mod notation;
pub mod optics;
pub mod rdm;
pub mod relativity;
pub mod scenarios;
pub mod state;
pub mod stats;

pub use error::{Error, ParseError, Result};
pub use measurement::{
    attach_ancilla, outcome_probability, project, sample_outcome, MeasurementOutcome,
    OutcomeSampler, RngSeed,
};
pub use notation::{compile_and_run, format_ket, parse_bench, parse_ket, BenchPlan, KetExpr};
pub use optics::{
    apply_to_slot, compose, make_beam_splitter, make_phase, BeamSplitterKind, ModeMap,
};
pub use rdm::{
    analyze_jump_frames, presence_fraction, run_entangled_pair, sample_density,
    CorrelationReport, DensityTable, DuplicationReport, JumpRecord, Position3, RdmPairConfig,
};
pub use relativity::{
    boosted_time_closed_form, interval_class, order_in_frame, simultaneity_velocity, Frame,
    IntervalClass, SpacetimeEvent,
};
pub use scenarios::{ScenarioReport, Verdict};
pub use state::{
    canonicalize, distribution, equal_exact, equal_up_to_phase, occupation_pair_expectation,
    superpose, tensor, BasisLabel, Ket, OccupationKet, ProbabilityTable,
};

pub use num_complex::Complex64;
