//! Sparse complex state vectors over labeled multi-particle path bases.
//!
//! A [`Ket`] is a finite map from basis labels (one mode label per particle
//! slot) to complex amplitudes. Kets are immutable after construction and all
//! operations are pure functions, so values can be shared freely across
//! threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Amplitudes below this modulus are dropped on insertion. Keeps the sparse
/// maps clean after destructive interference: a term that cancels must become
/// an absent entry, not a stored 1e-16 residue.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// A ket constructed with the normalize flag has Σ|amp|² = 1 within this.
pub const NORM_TOL_STRICT: f64 = 1e-12;

/// Operations that require a normalized input accept Σ|amp|² within this of 1.
pub const NORM_TOL: f64 = 1e-9;

/// One basis label: an ordered tuple of mode labels, one per particle slot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel(Vec<String>);

impl BasisLabel {
    pub fn new<I, S>(modes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        BasisLabel(modes.into_iter().map(Into::into).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn modes(&self) -> &[String] {
        &self.0
    }

    pub fn mode(&self, slot: usize) -> &str {
        &self.0[slot]
    }

    /// New label with `slot` replaced by `mode`.
    pub fn with_mode(&self, slot: usize, mode: &str) -> Self {
        let mut modes = self.0.clone();
        modes[slot] = mode.to_string();
        BasisLabel(modes)
    }

    fn validate(&self, slots: usize) -> Result<()> {
        if self.arity() != slots {
            return Err(Error::ArityMismatch {
                expected: slots,
                got: self.arity(),
                label: self.to_string(),
            });
        }
        if self.0.iter().any(|m| m.is_empty()) {
            return Err(Error::EmptyModeLabel);
        }
        Ok(())
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

impl<S: Into<String>> From<Vec<S>> for BasisLabel {
    fn from(modes: Vec<S>) -> Self {
        BasisLabel::new(modes)
    }
}

/// Sparse state vector over multi-particle path labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket {
    slots: usize,
    terms: BTreeMap<BasisLabel, Complex64>,
    consumed: BTreeSet<usize>,
}

impl Ket {
    /// Build a ket from `(label, amplitude)` terms. Duplicate labels have
    /// their amplitudes summed; near-zero terms are pruned. With `normalize`
    /// set the result is rescaled to unit norm (error on a zero state).
    pub fn new<I>(slots: usize, terms: I, normalize: bool) -> Result<Ket>
    where
        I: IntoIterator<Item = (BasisLabel, Complex64)>,
    {
        let mut map: BTreeMap<BasisLabel, Complex64> = BTreeMap::new();
        for (label, amp) in terms {
            label.validate(slots)?;
            if !amp.re.is_finite() || !amp.im.is_finite() {
                return Err(Error::NonFiniteAmplitude {
                    label: label.to_string(),
                });
            }
            *map.entry(label).or_insert(Complex64::ZERO) += amp;
        }
        map.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
        let mut ket = Ket {
            slots,
            terms: map,
            consumed: BTreeSet::new(),
        };
        if normalize {
            let norm = ket.norm_sqr().sqrt();
            if norm == 0.0 {
                return Err(Error::ZeroNorm);
            }
            for amp in ket.terms.values_mut() {
                *amp /= norm;
            }
        }
        Ok(ket)
    }

    /// Single-term unit ket.
    pub fn basis<I, S>(modes: I) -> Ket
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let label = BasisLabel::new(modes);
        let slots = label.arity();
        Ket::new(slots, [(label, Complex64::ONE)], false).expect("basis label is valid")
    }

    /// Zero ket with the given slot count.
    pub fn zero(slots: usize) -> Ket {
        Ket {
            slots,
            terms: BTreeMap::new(),
            consumed: BTreeSet::new(),
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn amplitude(&self, label: &BasisLabel) -> Complex64 {
        self.terms.get(label).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized(NORM_TOL) {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                norm_sqr: self.norm_sqr(),
            })
        }
    }

    /// Slots consumed by absorbing detections; see `measurement::project`.
    pub fn consumed_slots(&self) -> &BTreeSet<usize> {
        &self.consumed
    }

    pub(crate) fn with_consumed(mut self, consumed: BTreeSet<usize>) -> Ket {
        self.consumed = consumed;
        self
    }

    pub(crate) fn from_map(slots: usize, terms: BTreeMap<BasisLabel, Complex64>) -> Ket {
        let mut terms = terms;
        terms.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
        Ket {
            slots,
            terms,
            consumed: BTreeSet::new(),
        }
    }

    /// Rename mode labels in every slot according to `map`; labels not in the
    /// map pass through. Mirrors are identity relabelings, so this is also
    /// how a mirror stage acts.
    pub fn relabeled(&self, map: &BTreeMap<String, String>) -> Ket {
        let terms = self
            .terms
            .iter()
            .map(|(label, amp)| {
                let modes: Vec<String> = label
                    .modes()
                    .iter()
                    .map(|m| map.get(m).cloned().unwrap_or_else(|| m.clone()))
                    .collect();
                (BasisLabel(modes), *amp)
            })
            .collect();
        Ket {
            slots: self.slots,
            terms,
            consumed: self.consumed.clone(),
        }
    }
}

/// Linear combination `Σ wᵢ·kᵢ`. Not auto-normalized.
pub fn superpose(weights: &[(Complex64, &Ket)]) -> Result<Ket> {
    let Some((_, first)) = weights.first() else {
        return Ok(Ket::zero(0));
    };
    let slots = first.slots;
    let mut map: BTreeMap<BasisLabel, Complex64> = BTreeMap::new();
    let mut consumed = BTreeSet::new();
    for (w, k) in weights {
        if k.slots != slots {
            return Err(Error::SlotMismatch {
                left: slots,
                right: k.slots,
            });
        }
        for (label, amp) in &k.terms {
            *map.entry(label.clone()).or_insert(Complex64::ZERO) += w * amp;
        }
        consumed.extend(k.consumed.iter().copied());
    }
    Ok(Ket::from_map(slots, map).with_consumed(consumed))
}

/// Tensor product; result slots = a.slots + b.slots, amplitudes multiply.
pub fn tensor(a: &Ket, b: &Ket) -> Ket {
    let mut map = BTreeMap::new();
    for (la, aa) in &a.terms {
        for (lb, ab) in &b.terms {
            let mut modes = la.modes().to_vec();
            modes.extend(lb.modes().iter().cloned());
            map.insert(BasisLabel(modes), aa * ab);
        }
    }
    let mut consumed: BTreeSet<usize> = a.consumed.clone();
    consumed.extend(b.consumed.iter().map(|s| s + a.slots));
    Ket::from_map(a.slots + b.slots, map).with_consumed(consumed)
}

/// Born-rule probability table of a normalized ket.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityTable {
    entries: BTreeMap<BasisLabel, f64>,
}

impl ProbabilityTable {
    pub fn entries(&self) -> impl Iterator<Item = (&BasisLabel, f64)> {
        self.entries.iter().map(|(l, &p)| (l, p))
    }

    pub fn probability(&self, label: &BasisLabel) -> f64 {
        self.entries.get(label).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Squared moduli of a normalized ket, one entry per stored term.
pub fn distribution(k: &Ket) -> Result<ProbabilityTable> {
    k.require_normalized()?;
    Ok(ProbabilityTable {
        entries: k
            .terms
            .iter()
            .map(|(label, amp)| (label.clone(), amp.norm_sqr()))
            .collect(),
    })
}

/// Rotate the global phase so the first nonzero amplitude in label-sorted
/// order is real and positive. Idempotent; the zero ket is unchanged.
pub fn canonicalize(k: &Ket) -> Ket {
    let Some((first_label, first)) = k.terms.iter().next() else {
        return k.clone();
    };
    let magnitude = first.norm();
    let phase_conj = first.conj() / magnitude;
    let terms = k
        .terms
        .iter()
        .map(|(label, amp)| {
            // the leading term lands exactly on the real axis
            let rotated = if label == first_label {
                Complex64::new(magnitude, 0.0)
            } else {
                amp * phase_conj
            };
            (label.clone(), rotated)
        })
        .collect();
    Ket {
        slots: k.slots,
        terms,
        consumed: k.consumed.clone(),
    }
}

/// True iff `a = γ·b` for some unit complex γ, term-by-term within `tol`.
pub fn equal_up_to_phase(a: &Ket, b: &Ket, tol: f64) -> bool {
    if a.slots != b.slots {
        return false;
    }
    equal_exact(&canonicalize(a), &canonicalize(b), tol)
}

/// Term-wise comparison without phase fixing; absent terms compare as zero.
pub fn equal_exact(a: &Ket, b: &Ket, tol: f64) -> bool {
    if a.slots != b.slots {
        return false;
    }
    let labels: BTreeSet<&BasisLabel> = a.terms.keys().chain(b.terms.keys()).collect();
    labels
        .into_iter()
        .all(|l| (a.amplitude(l) - b.amplitude(l)).norm() <= tol)
}

/// Two-mode occupation-number state with occupancies 0 or 1 per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupationKet {
    terms: BTreeMap<(u8, u8), Complex64>,
}

impl OccupationKet {
    pub fn new<I>(terms: I, normalize: bool) -> Result<OccupationKet>
    where
        I: IntoIterator<Item = ((u8, u8), Complex64)>,
    {
        let mut map: BTreeMap<(u8, u8), Complex64> = BTreeMap::new();
        for ((na, nb), amp) in terms {
            for n in [na, nb] {
                if n > 1 {
                    return Err(Error::OccupancyOutOfRange { value: n });
                }
            }
            if !amp.re.is_finite() || !amp.im.is_finite() {
                return Err(Error::NonFiniteAmplitude {
                    label: format!("{na},{nb}"),
                });
            }
            *map.entry((na, nb)).or_insert(Complex64::ZERO) += amp;
        }
        map.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
        let mut ket = OccupationKet { terms: map };
        if normalize {
            let norm = ket.norm_sqr().sqrt();
            if norm == 0.0 {
                return Err(Error::ZeroNorm);
            }
            for amp in ket.terms.values_mut() {
                *amp /= norm;
            }
        }
        Ok(ket)
    }

    /// Reinterpret a 2-slot path ket whose mode labels are "0"/"1" as an
    /// occupation state.
    pub fn from_path_ket(k: &Ket) -> Result<OccupationKet> {
        let parse = |m: &str| -> Result<u8> {
            match m {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(Error::InvalidProbability {
                    detail: format!("mode label \"{other}\" is not an occupancy (0 or 1)"),
                }),
            }
        };
        if k.slots() != 2 {
            return Err(Error::SlotMismatch {
                left: k.slots(),
                right: 2,
            });
        }
        let mut terms = Vec::new();
        for (label, amp) in k.terms() {
            terms.push(((parse(label.mode(0))?, parse(label.mode(1))?), *amp));
        }
        OccupationKet::new(terms, false)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u8, u8), Complex64)> + '_ {
        self.terms.iter().map(|(&occ, &amp)| (occ, amp))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }
}

/// Joint-occupancy expectation ⟨n_A·n_B⟩ — the weight multiplying any
/// pairwise interaction between the two modes. Exactly 0 for any state
/// supported on {(1,0), (0,1)}: every contributing term carries the factor
/// n_A·n_B = 0, so no tolerance is involved.
pub fn occupation_pair_expectation(k: &OccupationKet) -> Result<f64> {
    if !k.is_normalized(NORM_TOL) {
        return Err(Error::NotNormalized {
            norm_sqr: k.norm_sqr(),
        });
    }
    Ok(k.terms
        .iter()
        .filter(|((na, nb), _)| *na == 1 && *nb == 1)
        .map(|(_, amp)| amp.norm_sqr())
        .sum())
}
