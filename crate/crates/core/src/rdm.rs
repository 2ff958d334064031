//! Monte Carlo engine for the random-discontinuous-motion particle model:
//! density-matched jump sampling, synchronized entangled-pair jumps with an
//! optional detection-freezing mechanism, presence-fraction simulation, and
//! relativistic analysis of jump records.
//!
//! Jump dynamics are memoryless: the occupied branch/cell is resampled
//! i.i.d. once per tick, so the time-averaged occupancy matches the density
//! table. Synchronized pair jumps and the freezing mechanism are both
//! defined in the lab frame (the model's preferred frame). Trials are
//! independent given per-shard seeds; shard seeds come from
//! [`measurement::subseed`].

use std::collections::BTreeMap;
use std::io::Write;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measurement::{rng, RngSeed};
use crate::relativity::{
    boosted_time_closed_form, interval_class, simultaneity_velocity, IntervalClass,
    SpacetimeEvent,
};

/// Discrete position density: cell probabilities, nonnegative, summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityTable {
    cells: BTreeMap<String, f64>,
}

impl DensityTable {
    pub fn new(cells: BTreeMap<String, f64>) -> Result<DensityTable> {
        if cells.is_empty() {
            return Err(Error::InvalidProbability {
                detail: "density table has no cells".into(),
            });
        }
        let mut total = 0.0;
        for (cell, &p) in &cells {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidProbability {
                    detail: format!("cell \"{cell}\" has probability {p}"),
                });
            }
            total += p;
        }
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidProbability {
                detail: format!("cell probabilities sum to {total}, not 1"),
            });
        }
        Ok(DensityTable { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = (&str, f64)> {
        self.cells.iter().map(|(c, &p)| (c.as_str(), p))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Parse "cell,probability" lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<DensityTable> {
        let mut cells = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| {
                Error::Parse(crate::error::ParseError::new(idx + 1, 1, message))
            };
            let (cell, prob) = line
                .split_once(',')
                .ok_or_else(|| err(format!("expected \"cell,probability\", got \"{line}\"")))?;
            let p: f64 = prob
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid probability \"{}\"", prob.trim())))?;
            if cells.insert(cell.trim().to_string(), p).is_some() {
                return Err(err(format!("duplicate cell \"{}\"", cell.trim())));
            }
        }
        DensityTable::new(cells)
    }
}

/// A 3-space position; the x component is the one that enters boost analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3 {
    pub fn new(x: f64, y: f64, z: f64) -> Position3 {
        Position3 { x, y, z }
    }
}

/// Configuration of a position-entangled pair: when branch 1 is occupied the
/// particles sit at `positions.0`, when branch 2 at `positions.1`. Branches
/// are resampled each `tick`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RdmPairConfig {
    pub positions: ((Position3, Position3), (Position3, Position3)),
    pub branch_probabilities: (f64, f64),
    pub tick: f64,
}

impl RdmPairConfig {
    pub fn validate(&self) -> Result<()> {
        let (p1, p2) = self.branch_probabilities;
        if !(p1.is_finite() && p2.is_finite()) || p1 < 0.0 || p2 < 0.0 {
            return Err(Error::InvalidPairConfig {
                detail: format!("branch probabilities ({p1}, {p2}) must be nonnegative"),
            });
        }
        if (p1 + p2 - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPairConfig {
                detail: format!("branch probabilities sum to {}, not 1", p1 + p2),
            });
        }
        if !(self.tick.is_finite() && self.tick > 0.0) {
            return Err(Error::InvalidPairConfig {
                detail: format!("tick {} must be positive", self.tick),
            });
        }
        if self.positions.0 == self.positions.1 {
            return Err(Error::InvalidPairConfig {
                detail: "branch positions must be distinct".into(),
            });
        }
        Ok(())
    }
}

/// One recorded jump: departure and arrival events in the recording frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JumpRecord {
    pub departure_t: f64,
    pub departure_x: f64,
    pub arrival_t: f64,
    pub arrival_x: f64,
    pub particle: String,
}

impl JumpRecord {
    pub fn departure(&self) -> SpacetimeEvent {
        SpacetimeEvent::new(self.departure_t, self.departure_x)
    }

    pub fn arrival(&self) -> SpacetimeEvent {
        SpacetimeEvent::new(self.arrival_t, self.arrival_x)
    }
}

/// Outcome of an entangled-pair correlation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub trials: u64,
    pub matches: u64,
    pub mismatch_rate: f64,
    pub freezing: bool,
    pub seed: RngSeed,
}

/// Frame analysis of a jump record.
///
/// For a spacelike jump there is a frame in which departure and arrival are
/// simultaneous — the particle occupies both wave packets at once there. For
/// a record whose two events belong to the two particles of an entangled
/// pair, the same frame is the one in which the pair's correlation fails,
/// flagged separately.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DuplicationReport {
    pub class: String,
    pub simultaneity_velocity: Option<f64>,
    pub common_boosted_time: Option<f64>,
    pub duplication_frame_exists: bool,
    pub entanglement_violation_frame: bool,
}

/// Draw `n` i.i.d. cells from the density. Counts sum to `n`; deterministic
/// per seed.
pub fn sample_density(
    d: &DensityTable,
    n: u64,
    seed: RngSeed,
) -> Result<BTreeMap<String, u64>> {
    if n == 0 {
        return Err(Error::ZeroSamples);
    }
    let labels: Vec<&str> = d.cells.keys().map(|s| s.as_str()).collect();
    let mut cumulative = Vec::with_capacity(labels.len());
    let mut total = 0.0;
    for &p in d.cells.values() {
        total += p;
        cumulative.push(total);
    }
    let mut counts: BTreeMap<String, u64> =
        labels.iter().map(|&l| (l.to_string(), 0)).collect();
    let mut gen = rng(seed);
    for _ in 0..n {
        let u: f64 = gen.random::<f64>() * total;
        let idx = cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(labels.len() - 1);
        *counts.get_mut(labels[idx]).expect("preseeded") += 1;
    }
    Ok(counts)
}

fn draw_branch<R: Rng>(rng: &mut R, p1: f64) -> u8 {
    if rng.random::<f64>() < p1 {
        0
    } else {
        1
    }
}

/// Simulate readouts of a synchronized-jump entangled pair.
///
/// Each tick the pair's branch is resampled from `branch_probabilities`
/// (both particles jump together). Particle 1 is read at `t_meas1`. With
/// `freezing`, particle 2's branch is pinned from that detection onward;
/// without it, particle 2 keeps jumping and is read at `t_meas2`. A match
/// means the joint readout lies on one branch.
pub fn run_entangled_pair(
    cfg: &RdmPairConfig,
    t_meas1: f64,
    t_meas2: f64,
    freezing: bool,
    trials: u64,
    seed: RngSeed,
) -> Result<CorrelationReport> {
    cfg.validate()?;
    if !(t_meas1.is_finite() && t_meas2.is_finite()) || t_meas1 < 0.0 || t_meas2 < t_meas1 {
        return Err(Error::InvalidTimes {
            t1: t_meas1,
            t2: t_meas2,
        });
    }
    if trials == 0 {
        return Err(Error::ZeroSamples);
    }
    let tick1 = (t_meas1 / cfg.tick).floor() as u64;
    let tick2 = (t_meas2 / cfg.tick).floor() as u64;
    let p1 = cfg.branch_probabilities.0;
    let mut gen = rng(seed);
    let mut matches = 0u64;
    for _ in 0..trials {
        let readout1 = draw_branch(&mut gen, p1);
        let readout2 = if freezing || tick2 == tick1 {
            readout1
        } else {
            draw_branch(&mut gen, p1)
        };
        if readout1 == readout2 {
            matches += 1;
        }
    }
    Ok(CorrelationReport {
        trials,
        matches,
        mismatch_rate: 1.0 - matches as f64 / trials as f64,
        freezing,
        seed,
    })
}

/// Fraction of ticks a particle occupies the surviving packet when it is
/// present with probability `p_present` per tick.
pub fn presence_fraction(p_present: f64, ticks: u64, seed: RngSeed) -> Result<f64> {
    if !(0.0..=1.0).contains(&p_present) {
        return Err(Error::InvalidProbability {
            detail: format!("presence probability {p_present} outside [0, 1]"),
        });
    }
    if ticks == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut gen = rng(seed);
    let mut present = 0u64;
    for _ in 0..ticks {
        if gen.random::<f64>() < p_present {
            present += 1;
        }
    }
    Ok(present as f64 / ticks as f64)
}

/// Classify a jump and, when spacelike, report the simultaneity frame.
pub fn analyze_jump_frames(j: &JumpRecord, c: f64) -> DuplicationReport {
    let a = j.departure();
    let b = j.arrival();
    let class = interval_class(a, b, c);
    let spacelike = class == IntervalClass::Spacelike;
    let (velocity, common_time) = if spacelike {
        (
            simultaneity_velocity(a, b, c).ok(),
            boosted_time_closed_form(a, b, c).ok(),
        )
    } else {
        (None, None)
    };
    DuplicationReport {
        class: class.to_string(),
        simultaneity_velocity: velocity,
        common_boosted_time: common_time,
        duplication_frame_exists: spacelike,
        entanglement_violation_frame: spacelike,
    }
}

/// Write counts as "cell,count,frequency" CSV (header row, LF endings).
pub fn write_histogram<W: Write>(
    counts: &BTreeMap<String, u64>,
    mut out: W,
) -> std::io::Result<()> {
    let total: u64 = counts.values().sum();
    out.write_all(b"cell,count,frequency\n")?;
    for (cell, &count) in counts {
        let freq = if total == 0 {
            0.0
        } else {
            count as f64 / total as f64
        };
        writeln!(out, "{cell},{count},{freq}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats;

    fn uniform_pair_config() -> RdmPairConfig {
        RdmPairConfig {
            positions: (
                (Position3::new(0.0, 0.0, 0.0), Position3::new(5.0, 0.0, 0.0)),
                (Position3::new(1.0, 0.0, 0.0), Position3::new(6.0, 0.0, 0.0)),
            ),
            branch_probabilities: (0.5, 0.5),
            tick: 1.0,
        }
    }

    #[test]
    fn uniform_density_counts_within_three_sigma() {
        let d = DensityTable::new(
            [("a".to_string(), 0.5), ("b".to_string(), 0.5)].into(),
        )
        .unwrap();
        let counts = sample_density(&d, 100_000, RngSeed(0)).unwrap();
        assert_eq!(counts.values().sum::<u64>(), 100_000);
        for (_, &count) in &counts {
            assert!(stats::within_three_sigma(count, 100_000, 0.5));
        }
    }

    #[test]
    fn interferometer_density_passes_chi_square() {
        let d = DensityTable::new(
            [
                ("c+c-".to_string(), 0.75),
                ("c+d-".to_string(), 1.0 / 12.0),
                ("d+c-".to_string(), 1.0 / 12.0),
                ("d+d-".to_string(), 1.0 / 12.0),
            ]
            .into(),
        )
        .unwrap();
        let counts = sample_density(&d, 100_000, RngSeed(0)).unwrap();
        let observed: Vec<u64> = d
            .cells()
            .map(|(c, _)| counts.get(c).copied().unwrap_or(0))
            .collect();
        let expected: Vec<f64> = d.cells().map(|(_, p)| p).collect();
        let test = stats::chi_square_gof(&observed, &expected).unwrap();
        assert!(test.passes(0.001), "p = {}", test.p_value);
    }

    #[test]
    fn point_mass_density() {
        let d = DensityTable::new(
            [("only".to_string(), 1.0), ("never".to_string(), 0.0)].into(),
        )
        .unwrap();
        let counts = sample_density(&d, 1000, RngSeed(9)).unwrap();
        assert_eq!(counts["only"], 1000);
        assert_eq!(counts["never"], 0);
    }

    #[test]
    fn zero_samples_rejected() {
        let d = DensityTable::new([("a".to_string(), 1.0)].into()).unwrap();
        assert!(matches!(
            sample_density(&d, 0, RngSeed(0)),
            Err(Error::ZeroSamples)
        ));
    }

    #[test]
    fn density_validation() {
        assert!(DensityTable::new([("a".to_string(), 0.9)].into()).is_err());
        assert!(DensityTable::new([("a".to_string(), -0.1), ("b".to_string(), 1.1)].into()).is_err());
    }

    #[test]
    fn density_parse_round_trip() {
        let d = DensityTable::parse("# two cells\nleft,0.25\nright,0.75\n").unwrap();
        assert_eq!(d.len(), 2);
        let err = DensityTable::parse("left,not-a-number").unwrap_err();
        assert!(err.to_string().contains("1:1"));
    }

    #[test]
    fn freezing_gives_perfect_correlation() {
        let cfg = uniform_pair_config();
        for seed in 0..5 {
            let report =
                run_entangled_pair(&cfg, 1.0, 7.5, true, 2000, RngSeed(seed)).unwrap();
            assert_eq!(report.mismatch_rate, 0.0);
            assert_eq!(report.matches, report.trials);
        }
    }

    #[test]
    fn delayed_readout_without_freezing_decorrelates() {
        let cfg = uniform_pair_config();
        let trials = 10_000;
        let report = run_entangled_pair(&cfg, 1.0, 2.0, false, trials, RngSeed(0)).unwrap();
        // independent redraw oracle: mismatch expectation 1 − Σpᵢ² = 1/2
        let expected = 0.5;
        let sigma = stats::binomial_sigma(trials, expected) / trials as f64;
        assert!(
            (report.mismatch_rate - expected).abs() <= 3.0 * sigma,
            "mismatch {} not within 3σ of {expected}",
            report.mismatch_rate
        );
    }

    #[test]
    fn skewed_branches_match_product_oracle() {
        let mut cfg = uniform_pair_config();
        cfg.branch_probabilities = (0.3, 0.7);
        let trials = 10_000;
        let report = run_entangled_pair(&cfg, 0.0, 3.0, false, trials, RngSeed(4)).unwrap();
        let expected = 1.0 - (0.3f64.powi(2) + 0.7f64.powi(2));
        let sigma = stats::binomial_sigma(trials, expected) / trials as f64;
        assert!((report.mismatch_rate - expected).abs() <= 3.0 * sigma);
    }

    #[test]
    fn simultaneous_readout_always_matches() {
        let cfg = uniform_pair_config();
        let report = run_entangled_pair(&cfg, 2.0, 2.0, false, 5000, RngSeed(1)).unwrap();
        assert_eq!(report.mismatch_rate, 0.0);
        // same tick, even with t_meas2 > t_meas1
        let report = run_entangled_pair(&cfg, 2.0, 2.5, false, 5000, RngSeed(1)).unwrap();
        assert_eq!(report.mismatch_rate, 0.0);
    }

    #[test]
    fn deterministic_branch_always_matches() {
        let mut cfg = uniform_pair_config();
        cfg.branch_probabilities = (1.0, 0.0);
        let report = run_entangled_pair(&cfg, 0.0, 9.0, false, 5000, RngSeed(2)).unwrap();
        assert_eq!(report.mismatch_rate, 0.0);
    }

    #[test]
    fn invalid_times_rejected() {
        let cfg = uniform_pair_config();
        assert!(matches!(
            run_entangled_pair(&cfg, 2.0, 1.0, false, 100, RngSeed(0)),
            Err(Error::InvalidTimes { .. })
        ));
        assert!(matches!(
            run_entangled_pair(&cfg, -1.0, 1.0, false, 100, RngSeed(0)),
            Err(Error::InvalidTimes { .. })
        ));
    }

    #[test]
    fn presence_fraction_statistics() {
        let f = presence_fraction(0.5, 100_000, RngSeed(0)).unwrap();
        assert!((f - 0.5).abs() <= 0.005, "presence {f}");
        assert_eq!(presence_fraction(1.0, 1000, RngSeed(1)).unwrap(), 1.0);
        assert_eq!(presence_fraction(0.0, 1000, RngSeed(1)).unwrap(), 0.0);
        assert!(presence_fraction(1.5, 10, RngSeed(0)).is_err());
    }

    #[test]
    fn spacelike_jump_admits_duplication_frame() {
        let jump = JumpRecord {
            departure_t: 0.0,
            departure_x: 0.0,
            arrival_t: 1.0,
            arrival_x: 3.0,
            particle: "p1".into(),
        };
        let report = analyze_jump_frames(&jump, 1.0);
        assert!(report.duplication_frame_exists);
        assert_eq!(report.class, "spacelike");
        let v = report.simultaneity_velocity.unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        assert!(report.common_boosted_time.unwrap().abs() < 1e-12);
    }

    #[test]
    fn timelike_jump_has_no_such_frame() {
        let jump = JumpRecord {
            departure_t: 0.0,
            departure_x: 0.0,
            arrival_t: 2.0,
            arrival_x: 1.0,
            particle: "p1".into(),
        };
        let report = analyze_jump_frames(&jump, 1.0);
        assert!(!report.duplication_frame_exists);
        assert!(report.simultaneity_velocity.is_none());
    }

    #[test]
    fn pair_record_common_time() {
        let jump = JumpRecord {
            departure_t: 1.0,
            departure_x: 1.0,
            arrival_t: 2.0,
            arrival_x: 4.0,
            particle: "pair".into(),
        };
        let report = analyze_jump_frames(&jump, 1.0);
        assert!(report.entanglement_violation_frame);
        let t = report.common_boosted_time.unwrap();
        assert!((t - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        // agrees with the kinematics module to machine precision
        let direct = boosted_time_closed_form(jump.departure(), jump.arrival(), 1.0).unwrap();
        assert!((t - direct).abs() < 1e-12);
    }

    #[test]
    fn histogram_format() {
        let counts: BTreeMap<String, u64> =
            [("a".to_string(), 3), ("b".to_string(), 1)].into();
        let mut buf = Vec::new();
        write_histogram(&counts, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "cell,count,frequency\na,3,0.75\nb,1,0.25\n"
        );
    }
}
