//! Finite lattice-point sets in the dominant cone used by the closed-form
//! degree tables.
//!
//! Points live in (L1, L2) coordinates: `LPoint { a, b }` is a L1 + b L2.
//! Q_+ is the quadrant a, b >= 0, Q'_+ drops the L1 axis, and Q_++ drops
//! both axes. The diamond of lambda = a L1 + b L2 is the convex hull of
//! 0, (a/2 + b) L2, (a + b) L1, lambda.

use crate::classes::ClassId;
use crate::coweight::Coweight;
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LPoint {
    pub a: i64,
    pub b: i64,
}

pub const fn lp(a: i64, b: i64) -> LPoint {
    LPoint { a, b }
}

impl LPoint {
    pub fn to_coweight(self) -> Coweight {
        Coweight::from_q(self.a, self.b)
    }

    pub fn from_coweight(lam: Coweight) -> Option<LPoint> {
        lam.q_coords().map(|(a, b)| lp(a, b))
    }

    pub fn in_q_plus(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn in_q_plus_plus(self) -> bool {
        self.a >= 1 && self.b >= 1
    }

    pub fn sub(self, other: LPoint) -> LPoint {
        lp(self.a - other.a, self.b - other.b)
    }

    /// O_lambda for a point of Q_+.
    pub fn trans_class(self) -> Option<ClassId> {
        self.in_q_plus().then(|| ClassId::Trans(self.to_coweight()))
    }

    /// O_{lambda,tau} for a point of Q'_+.
    pub fn trans_tau_class(self) -> Option<ClassId> {
        (self.a >= 0 && self.b >= 1).then(|| ClassId::TransTau(self.to_coweight()))
    }
}

/// `{lambda - n' (2 L1 - L2) | n' >= 0}` intersected with Q_++.
pub fn lambda_one(lam: LPoint) -> BTreeSet<LPoint> {
    ray(lam, lp(-2, 1), 0)
}

/// `{lambda - n' (L2 - L1) | n' >= 1}` intersected with Q_++.
pub fn lambda_two(lam: LPoint) -> BTreeSet<LPoint> {
    ray(lam, lp(1, -1), 1)
}

/// Union of the two rays with n' >= 1 on both.
pub fn lambda_plain(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = ray(lam, lp(-2, 1), 1);
    out.extend(ray(lam, lp(1, -1), 1));
    out
}

pub fn lambda_one_two(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = lambda_one(lam);
    out.extend(lambda_two(lam));
    out
}

/// Lambda^{<,1}: lambda_one without lambda itself.
pub fn lambda_one_strict(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = lambda_one(lam);
    out.remove(&lam);
    out
}

/// Lambda^{<=,2}: lambda_two together with lambda itself.
pub fn lambda_two_closed(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = lambda_two(lam);
    out.insert(lam);
    out
}

fn ray(lam: LPoint, step: LPoint, from: i64) -> BTreeSet<LPoint> {
    // one coordinate strictly decreases along each ray we use, so the walk
    // stays finite: stop once that coordinate drops below 1
    let mut out = BTreeSet::new();
    let mut n = from;
    loop {
        let p = lp(lam.a + n * step.a, lam.b + n * step.b);
        let decreasing = if step.a < 0 { p.a } else { p.b };
        if decreasing < 1 {
            break;
        }
        if p.in_q_plus_plus() {
            out.insert(p);
        }
        n += 1;
    }
    out
}

/// Q_++ points inside the diamond of lambda.
///
/// For lambda = a L1 + b L2 in the dominant cone this is the convex hull of
/// 0, (a/2 + b) L2, (a + b) L1 and lambda, cut out by the half planes
/// p >= 0, q >= 0, p + q <= a + b, p/2 + q <= a/2 + b. The half-plane form
/// is used verbatim so that degenerate parameters (a < 0) stay consistent
/// with the recursion.
pub fn diamond_le(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = BTreeSet::new();
    let bound = (lam.a.abs() + lam.b.abs() + 2).max(1);
    for p in 1..=bound {
        for q in 1..=bound {
            // p + q <= a + b and p/2 + q <= a/2 + b (doubled to stay exact)
            if p + q <= lam.a + lam.b && p + 2 * q <= lam.a + 2 * lam.b {
                out.insert(lp(p, q));
            }
        }
    }
    out
}

pub fn diamond_lt(lam: LPoint) -> BTreeSet<LPoint> {
    let mut out = diamond_le(lam);
    out.remove(&lam);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_plus_plus_membership() {
        assert!(lp(1, 1).in_q_plus_plus());
        assert!(!lp(0, 3).in_q_plus_plus());
        assert!(!lp(3, 0).in_q_plus_plus());
    }

    #[test]
    fn rays() {
        // lambda = 3 L1 + 2 L2: lambda - (2L1 - L2) = (1, 3); next leaves
        assert_eq!(
            lambda_one(lp(3, 2)),
            BTreeSet::from([lp(3, 2), lp(1, 3)])
        );
        assert_eq!(
            lambda_two(lp(3, 2)),
            BTreeSet::from([lp(4, 1)])
        );
        assert!(lambda_one(lp(-1, 3)).is_empty());
        assert_eq!(lambda_one_strict(lp(3, 2)), BTreeSet::from([lp(1, 3)]));
        assert_eq!(
            lambda_two_closed(lp(3, 2)),
            BTreeSet::from([lp(3, 2), lp(4, 1)])
        );
    }

    #[test]
    fn diamonds() {
        // diamond of L1 or 2L1 holds no Q_++ points
        assert!(diamond_le(lp(1, 0)).is_empty());
        assert!(diamond_le(lp(2, 0)).is_empty());
        // diamond of 3L1: vertices 0, (3/2)L2, 3L1; (1,1) is inside
        assert_eq!(diamond_le(lp(3, 0)), BTreeSet::from([lp(1, 1)]));
        // diamond of 2L1 + L2: contains (1,1) and (2,1) itself
        let d = diamond_le(lp(2, 1));
        assert!(d.contains(&lp(1, 1)));
        assert!(d.contains(&lp(2, 1)));
        assert!(!d.contains(&lp(3, 1)));
        assert!(!diamond_lt(lp(2, 1)).contains(&lp(2, 1)));
    }
}
