//! Coweight lattice data for type C2.
//!
//! A coweight is an integer pair (m, n) in the (eps1, eps2) basis of P.
//! The coroot lattice Q is spanned by L1 = eps1 and L2 = 2 eps2, so
//! membership in Q is the parity of n. Pairings against the four positive
//! roots a1, a2, a1+a2, a0 = 2a1+a2 are the fixed linear forms
//! m, n, m+n, 2m+n.

use crate::weyl::{WeylElt, W_ALL, W_INV_ROOT_POS};
use num_rational::Rational64;
use num_traits::Zero;
use std::fmt;

/// Element of the coweight lattice P, coordinates in the (eps1, eps2) basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight {
    pub m: i64,
    pub n: i64,
}

pub const fn cw(m: i64, n: i64) -> Coweight {
    Coweight { m, n }
}

/// L1 = eps1, the first fundamental coweight of Q.
pub const LAMBDA1: Coweight = cw(1, 0);
/// L2 = 2 eps2.
pub const LAMBDA2: Coweight = cw(0, 2);
/// eps2 itself, the translation part of tau.
pub const EPS2: Coweight = cw(0, 1);

/// The four positive roots of C2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PositiveRoot {
    A1,
    A2,
    A12,
    A0,
}

pub const POSITIVE_ROOTS: [PositiveRoot; 4] =
    [PositiveRoot::A1, PositiveRoot::A2, PositiveRoot::A12, PositiveRoot::A0];

impl PositiveRoot {
    pub(crate) fn index(self) -> usize {
        match self {
            PositiveRoot::A1 => 0,
            PositiveRoot::A2 => 1,
            PositiveRoot::A12 => 2,
            PositiveRoot::A0 => 3,
        }
    }
}

impl Coweight {
    pub const ZERO: Coweight = cw(0, 0);

    pub fn add(self, other: Coweight) -> Coweight {
        cw(self.m + other.m, self.n + other.n)
    }

    pub fn sub(self, other: Coweight) -> Coweight {
        cw(self.m - other.m, self.n - other.n)
    }

    pub fn neg(self) -> Coweight {
        cw(-self.m, -self.n)
    }

    pub fn scale(self, k: i64) -> Coweight {
        cw(k * self.m, k * self.n)
    }

    /// Membership in the coroot lattice Q.
    pub fn in_q(self) -> bool {
        self.n % 2 == 0
    }

    pub fn pairing(self, root: PositiveRoot) -> i64 {
        match root {
            PositiveRoot::A1 => self.m,
            PositiveRoot::A2 => self.n,
            PositiveRoot::A12 => self.m + self.n,
            PositiveRoot::A0 => 2 * self.m + self.n,
        }
    }

    /// `<lambda, 2 rho>` = sum of the four positive-root pairings = 4m + 3n.
    pub fn pairing_2rho(self) -> i64 {
        4 * self.m + 3 * self.n
    }

    pub fn is_dominant(self) -> bool {
        self.m >= 0 && self.n >= 0
    }

    pub fn act(self, w: WeylElt) -> Coweight {
        let (m, n) = w.act(self.m, self.n);
        cw(m, n)
    }

    pub fn dominant(self) -> Coweight {
        for w in W_ALL {
            let image = self.act(w);
            if image.is_dominant() {
                return image;
            }
        }
        unreachable!("every W-orbit meets the dominant cone")
    }

    pub fn to_rational(self) -> RatCoweight {
        RatCoweight {
            m: Rational64::from_integer(self.m),
            n: Rational64::from_integer(self.n),
        }
    }

    /// Coordinates a, b with self = a L1 + b L2; requires `in_q`.
    pub fn q_coords(self) -> Option<(i64, i64)> {
        if self.in_q() {
            Some((self.m, self.n / 2))
        } else {
            None
        }
    }

    /// a L1 + b L2 as a coweight.
    pub fn from_q(a: i64, b: i64) -> Coweight {
        cw(a, 2 * b)
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Coweight with rational coordinates, used for Newton points.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RatCoweight {
    pub m: Rational64,
    pub n: Rational64,
}

impl RatCoweight {
    pub const fn new(m: Rational64, n: Rational64) -> Self {
        RatCoweight { m, n }
    }

    pub fn zero() -> Self {
        RatCoweight {
            m: Rational64::zero(),
            n: Rational64::zero(),
        }
    }

    pub fn pairing(self, root: PositiveRoot) -> Rational64 {
        match root {
            PositiveRoot::A1 => self.m,
            PositiveRoot::A2 => self.n,
            PositiveRoot::A12 => self.m + self.n,
            PositiveRoot::A0 => Rational64::from_integer(2) * self.m + self.n,
        }
    }

    pub fn pairing_2rho(self) -> Rational64 {
        Rational64::from_integer(4) * self.m + Rational64::from_integer(3) * self.n
    }

    pub fn is_dominant(self) -> bool {
        !self.m.is_negative() && !self.n.is_negative()
    }

    pub fn act(self, w: WeylElt) -> RatCoweight {
        let mat = &crate::weyl::W_MAT[w.index()];
        RatCoweight {
            m: Rational64::from_integer(mat[0]) * self.m + Rational64::from_integer(mat[1]) * self.n,
            n: Rational64::from_integer(mat[2]) * self.m + Rational64::from_integer(mat[3]) * self.n,
        }
    }

    /// The unique dominant member of the W-orbit.
    pub fn dominant(self) -> RatCoweight {
        for w in W_ALL {
            let image = self.act(w);
            if image.is_dominant() {
                return image;
            }
        }
        unreachable!("every W-orbit meets the dominant cone")
    }

    pub fn is_zero(self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }
}

impl fmt::Display for RatCoweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}

impl IsNegative for Rational64 {
    fn is_negative(&self) -> bool {
        *self < Rational64::zero()
    }
}

/// Index of the Xi-partition part containing a point of Q.
///
/// The five parts, in a L1 + b L2 coordinates:
/// Xi1: a <= 0, b >= floor(-a/2) + 1; Xi2: a >= 1, b >= 0;
/// Xi3: b <= -1, a + b >= 1; Xi4: b <= -1, a + b <= 0;
/// Xi5: b >= 0, a <= -2b.
pub fn xi_partition(lambda: Coweight) -> Result<u8, NotInQ> {
    let (a, b) = lambda.q_coords().ok_or(NotInQ(lambda))?;
    let idx = if b <= -1 {
        if a + b >= 1 {
            3
        } else {
            4
        }
    } else if a >= 1 {
        2
    } else if a <= -2 * b {
        5
    } else {
        1
    };
    Ok(idx)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotInQ(pub Coweight);

impl fmt::Display for NotInQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coweight {:?} is not in the coroot lattice Q", self.0)
    }
}

impl std::error::Error for NotInQ {}

/// Sign data of w^{-1}(alpha) used by the Iwahori-Matsumoto length formula.
pub(crate) fn inv_root_positive(w: WeylElt, root: PositiveRoot) -> bool {
    W_INV_ROOT_POS[w.index()][root.index()]
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: pairings recomputed in the orthonormal model e1, e2 where
    // eps1 = e1, eps2 = (e1 + e2)/2, a1 = e1 - e2, a2 = 2 e2.
    fn pairing_oracle(lam: Coweight, root: PositiveRoot) -> i64 {
        // lam = (m + n/2) e1 + (n/2) e2, doubled to stay integral
        let x2 = 2 * lam.m + lam.n;
        let y2 = lam.n;
        // root vectors doubled pair with <v, alpha> = v . alpha (dot product)
        let (r1, r2) = match root {
            PositiveRoot::A1 => (1, -1),
            PositiveRoot::A2 => (0, 2),
            PositiveRoot::A12 => (1, 1),
            PositiveRoot::A0 => (2, 0),
        };
        let dot2 = x2 * r1 + y2 * r2;
        assert_eq!(dot2 % 2, 0);
        dot2 / 2
    }

    #[test]
    fn pairing_table_matches_oracle() {
        for m in -10..=10 {
            for n in -10..=10 {
                let lam = cw(m, n);
                for root in POSITIVE_ROOTS {
                    assert_eq!(lam.pairing(root), pairing_oracle(lam, root));
                }
                assert_eq!(
                    lam.pairing_2rho(),
                    POSITIVE_ROOTS.iter().map(|&r| lam.pairing(r)).sum::<i64>()
                );
            }
        }
        assert_eq!(LAMBDA2.pairing(PositiveRoot::A2), 2);
        assert_eq!(LAMBDA1.pairing(PositiveRoot::A0), 2);
        assert_eq!(LAMBDA1.pairing_2rho(), 4);
        assert_eq!(LAMBDA2.pairing_2rho(), 6);
    }

    #[test]
    fn weyl_action_preserves_form() {
        // pairing(w(lam), alpha) = pairing(lam, w^{-1}(alpha)); checking
        // invariance via the orthonormal oracle on the full grid.
        for m in -10..=10 {
            for n in -10..=10 {
                let lam = cw(m, n);
                for w in W_ALL {
                    assert_eq!(lam.act(w).in_q(), lam.in_q(), "Q preserved");
                    // orbit pairing multiset invariance
                    let mut a: Vec<i64> = POSITIVE_ROOTS
                        .iter()
                        .map(|&r| lam.pairing(r).abs())
                        .collect();
                    let mut b: Vec<i64> = POSITIVE_ROOTS
                        .iter()
                        .map(|&r| lam.act(w).pairing(r).abs())
                        .collect();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn dominant_representative() {
        assert_eq!(cw(-1, 0).dominant(), cw(1, 0));
        assert_eq!(cw(2, 2).dominant(), cw(2, 2));
        let d = cw(0, -3).dominant();
        assert!(d.is_dominant());
        assert!(W_ALL.iter().any(|&w| cw(0, -3).act(w) == d));
        // idempotent, and unique when both pairings are nonzero
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                let lam = cw(m, n);
                let d = lam.dominant();
                assert_eq!(d.dominant(), d);
                let count = W_ALL
                    .iter()
                    .filter(|&&w| lam.act(w).is_dominant())
                    .map(|&w| lam.act(w))
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                if d.m > 0 && d.n > 0 {
                    assert_eq!(count, 1, "unique dominant member for {lam:?}");
                }
            }
        }
    }

    #[test]
    fn xi_partition_examples_and_exhaustive() {
        assert_eq!(xi_partition(LAMBDA2).unwrap(), 1);
        assert_eq!(xi_partition(LAMBDA1).unwrap(), 2);
        assert_eq!(xi_partition(Coweight::ZERO).unwrap(), 5);
        assert!(xi_partition(cw(0, 1)).is_err());

        // disjointness/exhaustiveness against the raw parameterizations
        for a in -40..=40i64 {
            for b in -40..=40i64 {
                let lam = Coweight::from_q(a, b);
                let got = xi_partition(lam).unwrap();
                let mut hits = vec![];
                // Xi1: -2m L1 + (m+n+1) L2 and -(2m+1) L1 + (m+n+1) L2
                if a <= 0 {
                    let m = (-a) / 2;
                    if (a == -2 * m || a == -(2 * m + 1)) && b - m - 1 >= 0 {
                        hits.push(1);
                    }
                }
                if a >= 1 && b >= 0 {
                    hits.push(2);
                }
                if b <= -1 && a + b - 1 >= 0 {
                    hits.push(3);
                }
                if b <= -1 && -b - a >= 0 {
                    hits.push(4);
                }
                if b >= 0 && -a - 2 * b >= 0 {
                    hits.push(5);
                }
                assert_eq!(hits.len(), 1, "point ({a},{b}) hit {hits:?}");
                assert_eq!(hits[0], got);
            }
        }
    }
}
