//! The named catalog of conjugacy classes of W~ and the membership
//! classifier.
//!
//! Classes on the W_a side: O_lambda (translations, lambda dominant in Q),
//! O_2, O'_2, O_{s1212}, and the three one-parameter reflection families
//! O_{4k+1}, O'_{6k+1}, O'_{6k+3}. On the W_a tau side: O_{lambda,tau}
//! (translations outside Q), O_{1,tau}, O'_{1,tau}, O_{4k+2,tau},
//! O'_{6k,tau}, O'_{6k+4,tau}.

use crate::coweight::{cw, Coweight, RatCoweight, EPS2};
use crate::element::{elt, ExtAffineElement};
use crate::weyl::{W_E, W_S1, W_S12, W_S121, W_S1212, W_S2, W_S21, W_S212};
use num_rational::Rational64;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassId {
    /// O_lambda, lambda dominant in Q (stored in eps coordinates).
    Trans(Coweight),
    /// O_2 = { t^lambda s1s2, t^lambda s2s1 }.
    TwoA,
    /// O'_2: w = s1s2s1s2 with odd L1-coordinate.
    TwoB,
    /// O_{s1212}: w = s1s2s1s2 with even L1-coordinate.
    S1212,
    /// O_{4k+1}.
    A(i64),
    /// O'_{6k+1}.
    B(i64),
    /// O'_{6k+3}.
    C(i64),
    /// O_{lambda,tau}: translations by P - Q, lambda in Q'_+ (eps coords).
    TransTau(Coweight),
    /// O_{1,tau}.
    OneTauA,
    /// O'_{1,tau}.
    OneTauB,
    /// O_{4k+2,tau}.
    ATau(i64),
    /// O'_{6k,tau}.
    BTau(i64),
    /// O'_{6k+4,tau}.
    CTau(i64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassInvariants {
    pub min_length: i64,
    pub newton: RatCoweight,
    pub kottwitz: u8,
    pub straight: bool,
}

impl ClassId {
    /// Minimal length, by closed form (verified against BFS in tests).
    pub fn min_length(self) -> i64 {
        match self {
            ClassId::Trans(lam) => lam.pairing_2rho(),
            ClassId::TwoA | ClassId::TwoB => 2,
            ClassId::S1212 => 4,
            ClassId::A(k) => 4 * k + 1,
            ClassId::B(k) => 6 * k + 1,
            ClassId::C(k) => 6 * k + 3,
            ClassId::TransTau(lam) => lam.sub(EPS2).pairing_2rho(),
            ClassId::OneTauA | ClassId::OneTauB => 1,
            ClassId::ATau(k) => 4 * k + 2,
            ClassId::BTau(k) => 6 * k,
            ClassId::CTau(k) => 6 * k + 4,
        }
    }

    /// A fixed representative used for invariants.
    pub fn representative(self) -> ExtAffineElement {
        match self {
            ClassId::Trans(lam) => ExtAffineElement::translation(lam),
            ClassId::TwoA => elt(Coweight::ZERO, W_S12),
            ClassId::TwoB => elt(cw(1, 0), W_S1212),
            ClassId::S1212 => elt(Coweight::ZERO, W_S1212),
            ClassId::A(k) => elt(cw(k, 0), W_S2),
            ClassId::B(k) => elt(cw(0, 2 * k), W_S1),
            ClassId::C(k) => elt(cw(2 * k + 1, -2 * k), W_S212),
            ClassId::TransTau(lam) => ExtAffineElement::translation(lam.sub(EPS2)),
            ClassId::OneTauA => elt(cw(1, -1), W_S12),
            ClassId::OneTauB => elt(cw(0, 1), W_S1212),
            ClassId::ATau(k) => elt(cw(k, 1), W_S2),
            ClassId::BTau(k) => elt(cw(2 * k, -2 * k + 1), W_S212),
            ClassId::CTau(k) => elt(cw(0, 2 * k + 1), W_S1),
        }
    }

    pub fn invariants(self) -> ClassInvariants {
        let rep = self.representative();
        let newton = rep.newton_point();
        let min_length = self.min_length();
        ClassInvariants {
            min_length,
            newton,
            kottwitz: rep.kottwitz(),
            straight: Rational64::from_integer(min_length) == newton.pairing_2rho(),
        }
    }

    pub fn kottwitz(self) -> u8 {
        match self {
            ClassId::Trans(_)
            | ClassId::TwoA
            | ClassId::TwoB
            | ClassId::S1212
            | ClassId::A(_)
            | ClassId::B(_)
            | ClassId::C(_) => 0,
            _ => 1,
        }
    }

    /// (Newton point, Kottwitz) pair.
    pub fn f_invariant(self) -> (RatCoweight, u8) {
        let inv = self.invariants();
        (inv.newton, inv.kottwitz)
    }

    /// Deterministic ordering for reports: min length, then text id.
    pub fn report_key(self) -> (i64, String) {
        (self.min_length(), self.to_string())
    }

    /// Parse the text form; inverse of `Display`.
    pub fn parse(s: &str) -> Option<ClassId> {
        let s = s.trim();
        match s {
            "O2" => return Some(ClassId::TwoA),
            "O2'" => return Some(ClassId::TwoB),
            "Os1212" => return Some(ClassId::S1212),
            "O1tau" => return Some(ClassId::OneTauA),
            "O1tau'" => return Some(ClassId::OneTauB),
            _ => {}
        }
        let paren = |prefix: &str| -> Option<i64> {
            let rest = s.strip_prefix(prefix)?;
            let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
            inner.trim().parse().ok()
        };
        if let Some(k) = paren("ATau") {
            return (k >= 0).then_some(ClassId::ATau(k));
        }
        if let Some(k) = paren("BTau") {
            return (k >= 0).then_some(ClassId::BTau(k));
        }
        if let Some(k) = paren("CTau") {
            return (k >= 0).then_some(ClassId::CTau(k));
        }
        if let Some(k) = paren("A") {
            return (k >= 0).then_some(ClassId::A(k));
        }
        if let Some(k) = paren("B") {
            return (k >= 0).then_some(ClassId::B(k));
        }
        if let Some(k) = paren("C") {
            return (k >= 0).then_some(ClassId::C(k));
        }
        let coords = |prefix: &str| -> Option<Coweight> {
            let rest = s.strip_prefix(prefix)?;
            let inner = rest.strip_prefix('[')?.strip_suffix(']')?;
            let mut it = inner.splitn(2, ',');
            let m: i64 = it.next()?.trim().parse().ok()?;
            let n: i64 = it.next()?.trim().parse().ok()?;
            Some(cw(m, n))
        };
        if let Some(lam) = coords("O2tau") {
            let valid = lam.m >= 0 && lam.n >= 2 && lam.n % 2 == 0;
            return valid.then_some(ClassId::TransTau(lam));
        }
        if let Some(lam) = coords("O") {
            let valid = lam.is_dominant() && lam.in_q();
            return valid.then_some(ClassId::Trans(lam));
        }
        None
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Trans(lam) => write!(f, "O[{},{}]", lam.m, lam.n),
            ClassId::TwoA => f.write_str("O2"),
            ClassId::TwoB => f.write_str("O2'"),
            ClassId::S1212 => f.write_str("Os1212"),
            ClassId::A(k) => write!(f, "A({k})"),
            ClassId::B(k) => write!(f, "B({k})"),
            ClassId::C(k) => write!(f, "C({k})"),
            ClassId::TransTau(lam) => write!(f, "O2tau[{},{}]", lam.m, lam.n),
            ClassId::OneTauA => f.write_str("O1tau"),
            ClassId::OneTauB => f.write_str("O1tau'"),
            ClassId::ATau(k) => write!(f, "ATau({k})"),
            ClassId::BTau(k) => write!(f, "BTau({k})"),
            ClassId::CTau(k) => write!(f, "CTau({k})"),
        }
    }
}

/// The conjugacy class containing x, by pattern matching the catalog.
pub fn classify(x: ExtAffineElement) -> ClassId {
    if x.kottwitz() == 0 {
        classify_wa(x)
    } else {
        classify_wa_tau(x)
    }
}

fn classify_wa(x: ExtAffineElement) -> ClassId {
    let (a, b) = x
        .lambda
        .q_coords()
        .expect("kottwitz 0 forces lambda in Q");
    match x.w {
        W_E => ClassId::Trans(x.lambda.dominant()),
        W_S12 | W_S21 => ClassId::TwoA,
        W_S1212 => {
            if a.rem_euclid(2) == 1 {
                ClassId::TwoB
            } else {
                ClassId::S1212
            }
        }
        W_S2 => ClassId::A((a + b).abs()),
        W_S121 => ClassId::A(b.abs()),
        W_S1 => {
            if a.rem_euclid(2) == 0 {
                ClassId::B((b + a / 2).abs())
            } else {
                let c = b + (a - 1) / 2;
                ClassId::C(if c >= 0 { c } else { -c - 1 })
            }
        }
        W_S212 => {
            if a.rem_euclid(2) == 0 {
                ClassId::B(a.abs() / 2)
            } else {
                ClassId::C((a.abs() - 1) / 2)
            }
        }
        _ => unreachable!(),
    }
}

fn classify_wa_tau(x: ExtAffineElement) -> ClassId {
    // x = t^lambda w tau with lambda = mu - w(eps2), w = u s212.
    let w = x.w.compose(W_S212);
    let lambda = x.lambda.sub(EPS2.act(w));
    let (a, b) = lambda.q_coords().expect("lambda lies in Q");
    let offset_param = |o: i64| if o >= 1 { o - 1 } else { -o };
    match w {
        W_S212 => ClassId::TransTau(x.lambda.dominant().add(EPS2)),
        W_S2 | W_S121 => ClassId::OneTauA,
        W_S1 => ClassId::OneTauB,
        W_S12 => ClassId::ATau(offset_param(a + b)),
        W_S21 => ClassId::ATau(offset_param(b)),
        W_E => {
            if a.rem_euclid(2) == 0 {
                ClassId::BTau(a.abs() / 2)
            } else {
                ClassId::CTau(offset_param((a + 1) / 2))
            }
        }
        W_S1212 => {
            if a.rem_euclid(2) == 1 {
                ClassId::BTau((b + (a - 1) / 2).abs())
            } else {
                ClassId::CTau(offset_param(b + a / 2))
            }
        }
        _ => unreachable!(),
    }
}

/// Every catalog class with `min_length <= max_length`, sorted by report key.
pub fn catalog(max_length: i64) -> Vec<ClassId> {
    let mut out = Vec::new();
    // translations: 4m + 3n <= L over dominant lambda in Q (n even)
    let mut m = 0;
    while 4 * m <= max_length {
        let mut n = 0;
        while 4 * m + 3 * n <= max_length {
            out.push(ClassId::Trans(cw(m, n)));
            n += 2;
        }
        m += 1;
    }
    // translations outside Q: lambda = (m, n) with n even >= 2
    let mut m = 0;
    while 4 * m + 3 <= max_length {
        let mut n = 2;
        while 4 * m + 3 * n - 3 <= max_length {
            out.push(ClassId::TransTau(cw(m, n)));
            n += 2;
        }
        m += 1;
    }
    for c in [ClassId::TwoA, ClassId::TwoB, ClassId::S1212, ClassId::OneTauA, ClassId::OneTauB] {
        if c.min_length() <= max_length {
            out.push(c);
        }
    }
    type Family = (fn(i64) -> ClassId, i64, i64);
    let families: [Family; 6] = [
        (ClassId::A, 4, 1),
        (ClassId::B, 6, 1),
        (ClassId::C, 6, 3),
        (ClassId::ATau, 4, 2),
        (ClassId::BTau, 6, 0),
        (ClassId::CTau, 6, 4),
    ];
    for (mk, step, offset) in families {
        let mut k = 0;
        while step * k + offset <= max_length {
            out.push(mk(k));
            k += 1;
        }
    }
    out.sort_by_key(|c| c.report_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coweight::{LAMBDA1, LAMBDA2};
    use crate::element::{ball, conjugacy_orbit, IDENTITY, S0, S1, S2, TAU};

    #[test]
    fn named_examples() {
        assert_eq!(classify(S0.multiply(S2)), ClassId::TwoB);
        assert_eq!(classify(S0), ClassId::A(0));
        assert_eq!(classify(TAU), ClassId::BTau(0));
        assert_eq!(classify(S1.multiply(S2)), ClassId::TwoA);
        assert_eq!(
            classify(ExtAffineElement::translation(LAMBDA2)),
            ClassId::Trans(LAMBDA2)
        );
        assert_eq!(classify(IDENTITY), ClassId::Trans(Coweight::ZERO));
        assert_eq!(classify(S2.multiply(TAU)), ClassId::OneTauA);
        assert_eq!(classify(S1.multiply(TAU)), ClassId::OneTauB);
    }

    #[test]
    fn representative_classifies_back() {
        for c in catalog(18) {
            let rep = c.representative();
            assert_eq!(classify(rep), c, "rep {rep:?}");
            assert_eq!(rep.length(), c.min_length(), "min length of {c}");
        }
    }

    #[test]
    fn invariants_examples() {
        let inv = ClassId::Trans(LAMBDA2).invariants();
        assert_eq!(inv.min_length, 6);
        assert_eq!(inv.newton, LAMBDA2.to_rational());
        assert_eq!(inv.kottwitz, 0);
        assert!(inv.straight);

        let inv = ClassId::A(1).invariants();
        assert_eq!(inv.min_length, 5);
        assert_eq!(inv.newton, LAMBDA1.to_rational());
        assert_eq!(inv.kottwitz, 0);
        assert!(!inv.straight);

        let inv = ClassId::BTau(0).invariants();
        assert_eq!(inv.min_length, 0);
        assert!(inv.newton.is_zero());
        assert_eq!(inv.kottwitz, 1);
        assert!(inv.straight);

        assert_eq!(ClassId::TwoA.f_invariant().1, 0);
        assert!(ClassId::TwoA.f_invariant().0.is_zero());
        assert_eq!(ClassId::OneTauA.f_invariant().1, 1);
        assert!(ClassId::OneTauA.f_invariant().0.is_zero());
    }

    #[test]
    fn classifier_constant_on_orbits() {
        for x in ball(8).unwrap() {
            let c = classify(x);
            assert_eq!(c.kottwitz(), x.kottwitz());
            for y in conjugacy_orbit(x, 10) {
                assert_eq!(classify(y), c, "orbit of {x:?} at {y:?}");
            }
        }
    }

    #[test]
    fn min_lengths_match_bfs() {
        // smallest observed length in ball(12), per class
        use std::collections::HashMap;
        let mut best: HashMap<ClassId, i64> = HashMap::new();
        for x in ball(12).unwrap() {
            let c = classify(x);
            let e = best.entry(c).or_insert(i64::MAX);
            *e = (*e).min(x.length());
        }
        for c in catalog(12) {
            assert_eq!(best.get(&c), Some(&c.min_length()), "class {c}");
        }
        // and no class beyond the catalog bound shows up shorter
        for (c, l) in best {
            assert_eq!(l, c.min_length());
        }
    }

    #[test]
    fn text_round_trip() {
        for c in catalog(14) {
            let s = c.to_string();
            assert_eq!(ClassId::parse(&s), Some(c), "{s}");
        }
        assert_eq!(ClassId::parse("O2'"), Some(ClassId::TwoB));
        assert_eq!(ClassId::parse("O[1,1]"), None); // not in Q
        assert_eq!(ClassId::parse("O[-1,0]"), None); // not dominant
        assert_eq!(ClassId::parse("bogus"), None);
    }
}
