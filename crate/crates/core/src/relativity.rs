//! 1+1-dimensional Lorentz kinematics: boosts, interval classification,
//! simultaneity-frame velocities, and frame-dependent event ordering.
//!
//! Natural units (c = 1) are the default, but c is an explicit parameter
//! everywhere so SI-style inputs work too.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interval discriminants within this of zero classify as lightlike.
pub const LIGHTLIKE_TOL: f64 = 1e-12;

/// An event on the boost axis: time and position in some inertial frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimeEvent {
    pub t: f64,
    pub x: f64,
}

impl SpacetimeEvent {
    pub fn new(t: f64, x: f64) -> SpacetimeEvent {
        SpacetimeEvent { t, x }
    }
}

/// An inertial frame moving at velocity `v` along x, |v| < c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    v: f64,
    c: f64,
}

impl Frame {
    pub fn new(v: f64, c: f64) -> Result<Frame> {
        if !(v.is_finite() && c.is_finite()) || c <= 0.0 || v.abs() >= c {
            return Err(Error::SuperluminalFrame { v, c });
        }
        Ok(Frame { v, c })
    }

    /// Frame in natural units (c = 1).
    pub fn natural(v: f64) -> Result<Frame> {
        Frame::new(v, 1.0)
    }

    pub fn velocity(&self) -> f64 {
        self.v
    }

    pub fn light_speed(&self) -> f64 {
        self.c
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - (self.v / self.c).powi(2)).sqrt()
    }

    /// Frame moving at −v: boosting by it undoes this frame's boost.
    pub fn inverse(&self) -> Frame {
        Frame {
            v: -self.v,
            c: self.c,
        }
    }

    /// Lorentz-transform an event into this frame:
    /// t′ = γ(t − xv/c²), x′ = γ(x − tv).
    pub fn boost(&self, e: SpacetimeEvent) -> SpacetimeEvent {
        let gamma = self.gamma();
        SpacetimeEvent {
            t: gamma * (e.t - e.x * self.v / (self.c * self.c)),
            x: gamma * (e.x - e.t * self.v),
        }
    }
}

/// Causal character of an event pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalClass {
    Timelike,
    Spacelike,
    Lightlike,
}

impl std::fmt::Display for IntervalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            IntervalClass::Timelike => "timelike",
            IntervalClass::Spacelike => "spacelike",
            IntervalClass::Lightlike => "lightlike",
        };
        write!(f, "{name}")
    }
}

/// Invariant interval discriminant (cΔt)² − (Δx)².
pub fn interval_discriminant(a: SpacetimeEvent, b: SpacetimeEvent, c: f64) -> f64 {
    let dt = c * (b.t - a.t);
    let dx = b.x - a.x;
    dt * dt - dx * dx
}

/// Spacelike iff |Δx| > c|Δt|, with a [`LIGHTLIKE_TOL`] band at the boundary.
pub fn interval_class(a: SpacetimeEvent, b: SpacetimeEvent, c: f64) -> IntervalClass {
    let disc = interval_discriminant(a, b, c);
    if disc.abs() <= LIGHTLIKE_TOL {
        IntervalClass::Lightlike
    } else if disc < 0.0 {
        IntervalClass::Spacelike
    } else {
        IntervalClass::Timelike
    }
}

/// Velocity of the frame in which `a` and `b` are simultaneous:
/// v = (t₂ − t₁)c² / (x₂ − x₁). Requires spacelike separation, which
/// guarantees |v| < c.
pub fn simultaneity_velocity(a: SpacetimeEvent, b: SpacetimeEvent, c: f64) -> Result<f64> {
    let class = interval_class(a, b, c);
    if class != IntervalClass::Spacelike {
        return Err(Error::NotSpacelike {
            class: class.to_string(),
        });
    }
    Ok((b.t - a.t) * c * c / (b.x - a.x))
}

/// Common boosted time of a spacelike pair in its simultaneity frame,
/// in closed form: (x₂t₁ − t₂x₁) / ((x₂ − x₁)·√(1 − v²/c²)).
/// Agrees with boosting either event by [`simultaneity_velocity`].
pub fn boosted_time_closed_form(a: SpacetimeEvent, b: SpacetimeEvent, c: f64) -> Result<f64> {
    let v = simultaneity_velocity(a, b, c)?;
    let gamma_inv = (1.0 - (v / c).powi(2)).sqrt();
    Ok((b.x * a.t - b.t * a.x) / ((b.x - a.x) * gamma_inv))
}

/// Indices of `events` in ascending boosted-time order (stable sort, so
/// simultaneous events keep their input order).
pub fn order_in_frame(events: &[SpacetimeEvent], f: &Frame) -> Vec<usize> {
    let times: Vec<f64> = events.iter().map(|&e| f.boost(e).t).collect();
    let mut order: Vec<usize> = (0..events.len()).collect();
    order.sort_by(|&i, &j| times[i].total_cmp(&times[j]));
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn boost_worked_example() {
        let f = Frame::natural(0.5).unwrap();
        let e = f.boost(SpacetimeEvent::new(1.0, 1.0));
        assert!((e.t - 0.5773502691896258).abs() < 1e-12);
        assert!((e.x - 0.5773502691896258).abs() < 1e-12);
        assert!((f.gamma() - 1.1547005383792517).abs() < 1e-12);
    }

    #[test]
    fn zero_velocity_is_identity() {
        let f = Frame::natural(0.0).unwrap();
        let e = SpacetimeEvent::new(2.5, -1.25);
        assert_eq!(f.boost(e), e);
    }

    #[test]
    fn superluminal_frame_rejected() {
        assert!(matches!(
            Frame::natural(1.5),
            Err(Error::SuperluminalFrame { .. })
        ));
        assert!(Frame::natural(1.0).is_err());
        assert!(Frame::new(2.0, 3.0).is_ok());
    }

    #[test]
    fn interval_classification() {
        let o = SpacetimeEvent::new(0.0, 0.0);
        assert_eq!(
            interval_class(o, SpacetimeEvent::new(1.0, 3.0), 1.0),
            IntervalClass::Spacelike
        );
        assert_eq!(
            interval_class(o, SpacetimeEvent::new(2.0, 1.0), 1.0),
            IntervalClass::Timelike
        );
        assert_eq!(
            interval_class(o, SpacetimeEvent::new(1.0, 1.0), 1.0),
            IntervalClass::Lightlike
        );
    }

    #[test]
    fn simultaneity_velocity_worked_examples() {
        let o = SpacetimeEvent::new(0.0, 0.0);
        let b = SpacetimeEvent::new(1.0, 3.0);
        let v = simultaneity_velocity(o, b, 1.0).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        let f = Frame::natural(v).unwrap();
        assert!(f.boost(o).t.abs() < 1e-12);
        assert!(f.boost(b).t.abs() < 1e-12);

        let a = SpacetimeEvent::new(1.0, 1.0);
        let b = SpacetimeEvent::new(2.0, 4.0);
        let v = simultaneity_velocity(a, b, 1.0).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        let f = Frame::natural(v).unwrap();
        let expected = std::f64::consts::FRAC_1_SQRT_2;
        assert!((f.boost(a).t - expected).abs() < 1e-9);
        assert!((f.boost(b).t - expected).abs() < 1e-9);
    }

    #[test]
    fn timelike_pair_has_no_simultaneity_frame() {
        let err = simultaneity_velocity(
            SpacetimeEvent::new(0.0, 0.0),
            SpacetimeEvent::new(2.0, 1.0),
            1.0,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotSpacelike { .. }));
    }

    #[test]
    fn closed_form_worked_examples() {
        let t = boosted_time_closed_form(
            SpacetimeEvent::new(1.0, 1.0),
            SpacetimeEvent::new(2.0, 4.0),
            1.0,
        )
        .unwrap();
        assert!((t - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);

        let t = boosted_time_closed_form(
            SpacetimeEvent::new(0.0, 0.0),
            SpacetimeEvent::new(1.0, 3.0),
            1.0,
        )
        .unwrap();
        assert!(t.abs() < 1e-12);
    }

    #[test]
    fn detection_order_reverses_in_fast_frame() {
        let events = [SpacetimeEvent::new(1.0, 0.0), SpacetimeEvent::new(2.0, 5.0)];
        let f = Frame::natural(0.8).unwrap();
        assert!((f.boost(events[0]).t - 5.0 / 3.0).abs() < 1e-12);
        assert!((f.boost(events[1]).t + 10.0 / 3.0).abs() < 1e-12);
        assert_eq!(order_in_frame(&events, &f), vec![1, 0]);

        let rest = Frame::natural(0.0).unwrap();
        assert_eq!(order_in_frame(&events, &rest), vec![0, 1]);
    }

    fn arb_event() -> impl Strategy<Value = SpacetimeEvent> {
        (-50.0f64..50.0, -50.0f64..50.0).prop_map(|(t, x)| SpacetimeEvent::new(t, x))
    }

    proptest! {
        #[test]
        fn boost_round_trip(e in arb_event(), v in -0.99f64..0.99) {
            let f = Frame::natural(v).unwrap();
            let back = f.inverse().boost(f.boost(e));
            prop_assert!((back.t - e.t).abs() < 1e-12 * e.t.abs().max(1.0) * f.gamma().powi(2));
            prop_assert!((back.x - e.x).abs() < 1e-12 * e.x.abs().max(1.0) * f.gamma().powi(2));
        }

        #[test]
        fn interval_is_invariant(a in arb_event(), b in arb_event(), v in -0.99f64..0.99) {
            let f = Frame::natural(v).unwrap();
            let before = interval_discriminant(a, b, 1.0);
            let after = interval_discriminant(f.boost(a), f.boost(b), 1.0);
            let scale = before.abs().max(1.0) * f.gamma().powi(2);
            prop_assert!((before - after).abs() < 1e-9 * scale);
        }

        #[test]
        fn spacelike_pairs_have_subluminal_simultaneity_velocity(
            a in arb_event(),
            b in arb_event(),
        ) {
            prop_assume!(interval_class(a, b, 1.0) == IntervalClass::Spacelike);
            let v = simultaneity_velocity(a, b, 1.0).unwrap();
            prop_assert!(v.abs() < 1.0);
            let f = Frame::natural(v).unwrap();
            let ta = f.boost(a).t;
            let tb = f.boost(b).t;
            prop_assert!((ta - tb).abs() < 1e-9 * ta.abs().max(1.0));
        }

        #[test]
        fn timelike_pairs_are_rejected(a in arb_event(), b in arb_event()) {
            prop_assume!(interval_class(a, b, 1.0) == IntervalClass::Timelike);
            // The raw formula would give |v| ≥ c here; the operation refuses.
            if (b.x - a.x).abs() > 1e-12 {
                let raw = (b.t - a.t) / (b.x - a.x);
                prop_assert!(raw.abs() > 1.0 - 1e-9);
            }
            prop_assert!(simultaneity_velocity(a, b, 1.0).is_err());
        }

        #[test]
        fn closed_form_matches_direct_boost(a in arb_event(), b in arb_event()) {
            prop_assume!(interval_class(a, b, 1.0) == IntervalClass::Spacelike);
            let v = simultaneity_velocity(a, b, 1.0).unwrap();
            let f = Frame::natural(v).unwrap();
            let closed = boosted_time_closed_form(a, b, 1.0).unwrap();
            let scale = closed.abs().max(1.0) * f.gamma();
            prop_assert!((closed - f.boost(a).t).abs() < 1e-9 * scale);
            prop_assert!((closed - f.boost(b).t).abs() < 1e-9 * scale);
        }

        #[test]
        fn timelike_order_is_frame_invariant(
            t in 0.1f64..40.0,
            x_frac in -0.99f64..0.99,
            base in arb_event(),
            v in -0.99f64..0.99,
        ) {
            let later = SpacetimeEvent::new(base.t + t, base.x + t * x_frac);
            let f = Frame::natural(v).unwrap();
            let order = order_in_frame(&[base, later], &f);
            prop_assert_eq!(order, vec![0, 1]);
        }
    }
}
