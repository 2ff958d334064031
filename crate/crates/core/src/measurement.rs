//! Projective detection with collapse, absorbing detectors, ancilla
//! attachment, and seeded outcome sampling.
//!
//! # Randomness policy
//!
//! All randomness flows from a [`RngSeed`] through ChaCha8
//! ([`rand_chacha::ChaCha8Rng`]), seeded with `seed_from_u64`. Independent
//! sub-streams (one per scenario run, one per Monte Carlo shard) are derived
//! with [`subseed`], a splitmix64 step — so runs are reproducible within this
//! implementation and shards never share a stream. RNG state is always an
//! explicit value; nothing reads ambient entropy.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{BasisLabel, Ket};

/// Seed for the deterministic generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

/// The workbench generator: ChaCha8 seeded from a 64-bit value.
pub fn rng(seed: RngSeed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.0)
}

/// Derive the `index`-th sub-stream seed (splitmix64 of seed ⊕ index·φ64).
pub fn subseed(seed: RngSeed, index: u64) -> RngSeed {
    let mut z = seed
        .0
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    RngSeed(z ^ (z >> 31))
}

/// Result of projecting one slot on one mode.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    pub slot: usize,
    pub label: String,
    pub probability: f64,
    pub post_state: Ket,
}

/// Probability that `slot` would be found on `label`, without collapsing.
pub fn outcome_probability(k: &Ket, slot: usize, label: &str) -> Result<f64> {
    if slot >= k.slots() {
        return Err(Error::SlotOutOfRange {
            slot,
            slots: k.slots(),
        });
    }
    k.require_normalized()?;
    Ok(k.terms()
        .filter(|(l, _)| l.mode(slot) == label)
        .map(|(_, amp)| amp.norm_sqr())
        .sum())
}

/// Project `slot` onto `label` and collapse. The post state is the
/// renormalized restriction to matching terms. Conditioning on an impossible
/// outcome is an error, not a zero ket. With `absorbing` set, the slot is
/// marked consumed and any later projection on it errors.
pub fn project(k: &Ket, slot: usize, label: &str, absorbing: bool) -> Result<MeasurementOutcome> {
    if slot >= k.slots() {
        return Err(Error::SlotOutOfRange {
            slot,
            slots: k.slots(),
        });
    }
    if k.consumed_slots().contains(&slot) {
        return Err(Error::ConsumedSlot { slot });
    }
    k.require_normalized()?;

    let mut probability = 0.0;
    let mut map = BTreeMap::new();
    for (l, amp) in k.terms() {
        if l.mode(slot) == label {
            probability += amp.norm_sqr();
            map.insert(l.clone(), *amp);
        }
    }
    if probability == 0.0 {
        return Err(Error::ZeroProbability {
            slot,
            label: label.to_string(),
        });
    }
    let scale = probability.sqrt();
    for amp in map.values_mut() {
        *amp /= scale;
    }
    let mut consumed = k.consumed_slots().clone();
    if absorbing {
        consumed.insert(slot);
    }
    Ok(MeasurementOutcome {
        slot,
        label: label.to_string(),
        probability,
        post_state: Ket::from_map(k.slots(), map).with_consumed(consumed),
    })
}

/// Cumulative-weight sampler over a normalized ket's joint outcomes.
pub struct OutcomeSampler {
    labels: Vec<BasisLabel>,
    cumulative: Vec<f64>,
}

impl OutcomeSampler {
    pub fn new(k: &Ket) -> Result<OutcomeSampler> {
        k.require_normalized()?;
        let mut labels = Vec::with_capacity(k.len());
        let mut cumulative = Vec::with_capacity(k.len());
        let mut total = 0.0;
        for (label, amp) in k.terms() {
            total += amp.norm_sqr();
            labels.push(label.clone());
            cumulative.push(total);
        }
        Ok(OutcomeSampler { labels, cumulative })
    }

    pub fn draw<R: Rng>(&self, rng: &mut R) -> &BasisLabel {
        &self.labels[self.draw_index(rng)]
    }

    /// Index into [`labels`](Self::labels) of one draw.
    pub fn draw_index<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random::<f64>() * self.cumulative.last().copied().unwrap_or(1.0);
        self.cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.labels.len() - 1)
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }
}

/// Draw one full joint label from the ket's distribution. Deterministic for
/// a given seed.
pub fn sample_outcome(k: &Ket, seed: RngSeed) -> Result<BasisLabel> {
    let sampler = OutcomeSampler::new(k)?;
    Ok(sampler.draw(&mut rng(seed)).clone())
}

/// Entangle a fresh ancilla slot with `slot`: each term gains the ancilla
/// label `marking[mode]` as a new final slot. Models a non-absorbing
/// detector. Norm is preserved.
pub fn attach_ancilla(k: &Ket, slot: usize, marking: &BTreeMap<String, String>) -> Result<Ket> {
    if slot >= k.slots() {
        return Err(Error::SlotOutOfRange {
            slot,
            slots: k.slots(),
        });
    }
    let mut map = BTreeMap::new();
    for (label, amp) in k.terms() {
        let mode = label.mode(slot);
        let ancilla = marking.get(mode).ok_or_else(|| Error::UnmappedLabel {
            label: mode.to_string(),
        })?;
        let mut modes = label.modes().to_vec();
        modes.push(ancilla.clone());
        map.insert(BasisLabel::new(modes), *amp);
    }
    Ok(Ket::from_map(k.slots() + 1, map).with_consumed(k.consumed_slots().clone()))
}
