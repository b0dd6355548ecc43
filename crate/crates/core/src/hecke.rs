//! Hecke-algebra generator multiplication and the class-polynomial
//! recursion.
//!
//! The recursion works on elements directly: an element either admits a
//! length-reducing cyclic shift after moving through its equal-length
//! conjugation class, or it is of minimal length in its conjugacy class and
//! reduces to the indicator of that class.

use crate::classes::{classify, ClassId};
use crate::element::{DiagramAut, ExtAffineElement, Gen, SIMPLE_GENS, TAU};
use crate::laurent::{Degree, Laurent};
use dashmap::DashMap;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

/// Finite A-linear combination of basis elements T_x.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct HeckeElement {
    terms: BTreeMap<ExtAffineElement, Laurent>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn basis(x: ExtAffineElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, Laurent::one());
        HeckeElement { terms }
    }

    pub fn coeff(&self, x: ExtAffineElement) -> Laurent {
        self.terms.get(&x).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElement, &Laurent)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, x: ExtAffineElement, p: &Laurent) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(x).or_insert_with(Laurent::zero);
        *entry = entry.add(p);
        if entry.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&x, p) in &other.terms {
            out.add_term(x, p);
        }
        out
    }

    pub fn scale(&self, p: &Laurent) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&x, q) in &self.terms {
            out.add_term(x, &q.mul(p));
        }
        out
    }

    /// Multiply by the generator T_s on the given side.
    ///
    /// For s in {s0, s1, s2}: T_x T_s = T_{xs} when the length goes up and
    /// (v - v^-1) T_x + T_{xs} otherwise; tau multiplies with no correction.
    pub fn mul_generator(&self, gen: Gen, side: Side) -> HeckeElement {
        let mut out = HeckeElement::zero();
        let bracket = Laurent::bracket();
        for (&x, p) in &self.terms {
            let product = match side {
                Side::Right => x.apply_gen(gen),
                Side::Left => x.apply_gen_left(gen),
            };
            if gen == Gen::Tau || product.length() > x.length() {
                out.add_term(product, p);
            } else {
                out.add_term(x, &p.mul(&bracket));
                out.add_term(product, p);
            }
        }
        out
    }
}

/// Class polynomial vector: class id -> polynomial, zero entries omitted.
pub type ClassPolyVector = BTreeMap<ClassId, Laurent>;

/// Outcome of the cyclic-shift search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShiftOutcome {
    /// x is of minimal length in its class; carries the canonical (lexically
    /// least reduced word) representative of the equal-length class.
    Minimal(ExtAffineElement),
    /// Witness x1 ~ x of equal length and s with l(s x1 s) < l(x1).
    Reduce(ExtAffineElement, Gen),
}

/// Shared, thread-safe context for class-polynomial computation.
///
/// The memo table has get-or-compute semantics; concurrent duplicate work is
/// allowed and harmless because the computation is deterministic.
pub struct ClassPolyCtx {
    memo: DashMap<ExtAffineElement, Arc<ClassPolyVector>>,
    delta: DiagramAut,
    tie_break_seed: Option<u64>,
}

impl Default for ClassPolyCtx {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassPolyCtx {
    pub fn new() -> Self {
        ClassPolyCtx::with_delta(DiagramAut::Identity)
    }

    pub fn with_delta(delta: DiagramAut) -> Self {
        ClassPolyCtx {
            memo: DashMap::new(),
            delta,
            tie_break_seed: None,
        }
    }

    /// Context whose shift search shuffles its exploration order from the
    /// seed. Results must not depend on the seed; the path-independence
    /// tests rely on this knob.
    pub fn with_seed(seed: u64) -> Self {
        ClassPolyCtx {
            memo: DashMap::new(),
            delta: DiagramAut::Identity,
            tie_break_seed: Some(seed),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Pre-seed the memo table, e.g. from a persisted cache.
    pub fn insert_cached(&self, x: ExtAffineElement, vector: ClassPolyVector) {
        self.memo.insert(x, Arc::new(vector));
    }

    pub fn cached(&self, x: ExtAffineElement) -> Option<Arc<ClassPolyVector>> {
        self.memo.get(&x).map(|r| r.clone())
    }

    /// Iterate the memo table (for cache persistence).
    pub fn snapshot(&self) -> Vec<(ExtAffineElement, Arc<ClassPolyVector>)> {
        let mut out: Vec<_> = self
            .memo
            .iter()
            .map(|r| (*r.key(), r.value().clone()))
            .collect();
        out.sort_by_key(|(x, _)| *x);
        out
    }

    fn gen_order(&self, x: ExtAffineElement) -> [Gen; 3] {
        let mut order = SIMPLE_GENS;
        if let Some(seed) = self.tie_break_seed {
            let mix = seed
                ^ (x.lambda.m as u64).wrapping_mul(0x9e3779b97f4a7c15)
                ^ (x.lambda.n as u64).rotate_left(17)
                ^ (x.w.index() as u64) << 40;
            let mut rng = ChaCha8Rng::seed_from_u64(mix);
            order.shuffle(&mut rng);
        }
        order
    }

    /// BFS over the equal-length cyclic-shift class of x. Returns either a
    /// reducing pair or the canonical minimal representative (the
    /// lexicographically least reduced word among the class and its
    /// tau-conjugates).
    pub fn shift_search(&self, x: ExtAffineElement) -> ShiftOutcome {
        let len = x.length();
        let mut seen: HashSet<ExtAffineElement> = HashSet::new();
        let mut queue: VecDeque<ExtAffineElement> = VecDeque::new();
        seen.insert(x);
        queue.push_back(x);
        let mut class: Vec<ExtAffineElement> = vec![x];
        while let Some(y) = queue.pop_front() {
            for g in self.gen_order(y) {
                let z = y.twisted_conjugate_by(g, self.delta);
                let zlen = z.length();
                if zlen < len {
                    return ShiftOutcome::Reduce(y, g);
                }
                if zlen == len && seen.insert(z) {
                    class.push(z);
                    queue.push_back(z);
                }
            }
        }
        // minimal; canonicalize over the class and its tau-conjugates
        let mut best: Option<(Vec<Gen>, ExtAffineElement)> = None;
        for &y in &class {
            let twisted_tau = TAU.multiply(y).multiply(self.delta.apply(TAU).inverse());
            for cand in [y, twisted_tau] {
                let word = cand.reduced_word().letters;
                match &best {
                    Some((w, _)) if *w <= word => {}
                    _ => best = Some((word, cand)),
                }
            }
        }
        ShiftOutcome::Minimal(best.expect("class is nonempty").1)
    }

    /// The class polynomial vector of x, memoized.
    pub fn class_polynomials(&self, x: ExtAffineElement) -> Arc<ClassPolyVector> {
        if let Some(hit) = self.memo.get(&x) {
            return hit.clone();
        }
        // Iterative post-order over the recursion DAG; keeps the stack flat
        // for long elements.
        enum Frame {
            Visit(ExtAffineElement),
            Combine {
                key: ExtAffineElement,
                shorter: ExtAffineElement,
                shorter2: ExtAffineElement,
            },
        }
        let mut stack = vec![Frame::Visit(x)];
        while let Some(frame) = stack.pop() {
            match frame {
                Frame::Visit(y) => {
                    if self.memo.contains_key(&y) {
                        continue;
                    }
                    match self.shift_search(y) {
                        ShiftOutcome::Minimal(_) => {
                            let mut v = ClassPolyVector::new();
                            v.insert(classify(y), Laurent::one());
                            self.memo.insert(y, Arc::new(v));
                        }
                        ShiftOutcome::Reduce(y1, s) => {
                            let shorter = y1.apply_gen_left(s);
                            let shorter2 = shorter.apply_gen(self.delta.apply_gen(s));
                            debug_assert_eq!(shorter.length(), y.length() - 1);
                            debug_assert_eq!(shorter2.length(), y.length() - 2);
                            stack.push(Frame::Combine {
                                key: y,
                                shorter,
                                shorter2,
                            });
                            stack.push(Frame::Visit(shorter));
                            stack.push(Frame::Visit(shorter2));
                        }
                    }
                }
                Frame::Combine {
                    key,
                    shorter,
                    shorter2,
                } => {
                    let bracket = Laurent::bracket();
                    let a = self.memo.get(&shorter).expect("computed").clone();
                    let b = self.memo.get(&shorter2).expect("computed").clone();
                    let mut v = ClassPolyVector::new();
                    for (&c, p) in a.iter() {
                        v.insert(c, p.mul(&bracket));
                    }
                    for (&c, p) in b.iter() {
                        let entry = v.entry(c).or_insert_with(Laurent::zero);
                        *entry = entry.add(p);
                        if entry.is_zero() {
                            v.remove(&c);
                        }
                    }
                    self.memo.insert(key, Arc::new(v));
                }
            }
        }
        self.memo.get(&x).expect("just computed").clone()
    }

    /// Degree of f_{x, c}; -inf when the class does not occur.
    pub fn class_poly_degree(&self, x: ExtAffineElement, c: ClassId) -> Degree {
        match self.class_polynomials(x).get(&c) {
            Some(p) => p.degree(),
            None => Degree::NegInf,
        }
    }
}

/// Convenience: degrees of a whole vector.
pub fn degree_table(v: &ClassPolyVector) -> HashMap<ClassId, i64> {
    v.iter()
        .filter_map(|(&c, p)| p.degree().finite().map(|d| (c, d)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coweight::cw;
    use crate::element::{ball, elt, parse_element, IDENTITY, S1, S2, TAU};
    use crate::weyl::W_S21;
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn generator_multiplication() {
        let t_s1 = HeckeElement::basis(S1);
        let up = t_s1.mul_generator(Gen::S2, Side::Right);
        assert_eq!(up, HeckeElement::basis(S1.multiply(S2)));

        let square = t_s1.mul_generator(Gen::S1, Side::Right);
        assert_eq!(square.coeff(S1), Laurent::bracket());
        assert_eq!(square.coeff(IDENTITY), Laurent::one());
        assert_eq!(square.support_len(), 2);

        let via_tau = t_s1.mul_generator(Gen::Tau, Side::Right);
        assert_eq!(via_tau, HeckeElement::basis(S1.multiply(TAU)));

        // left mirror
        let left = t_s1.mul_generator(Gen::S1, Side::Left);
        assert_eq!(left.coeff(S1), Laurent::bracket());
        assert_eq!(left.coeff(IDENTITY), Laurent::one());
    }

    #[test]
    fn quadratic_relation() {
        // (T_s - v)(T_s + v^-1) = 0: expand T_s^2 - (v - v^-1) T_s - 1 = 0
        for g in SIMPLE_GENS {
            let t = HeckeElement::basis(g.element());
            let sq = t.mul_generator(g, Side::Right);
            let rhs = t
                .scale(&Laurent::bracket())
                .add(&HeckeElement::basis(IDENTITY));
            assert_eq!(sq, rhs);
        }
    }

    #[test]
    fn shift_search_basics() {
        let ctx = ClassPolyCtx::new();
        assert!(matches!(ctx.shift_search(S1), ShiftOutcome::Minimal(_)));
        // t^{L1} s1 s2 = s0 s1 has length 2 and is minimal in O2
        let x = parse_element("s0 s1").unwrap();
        assert_eq!(x.length(), 2);
        assert!(matches!(ctx.shift_search(x), ShiftOutcome::Minimal(_)));
        // t^{L1} s2 s1 is not minimal
        let y = elt(cw(1, 0), W_S21);
        assert!(matches!(ctx.shift_search(y), ShiftOutcome::Reduce(_, _)));
    }

    #[test]
    fn spot_class_polynomials() {
        let ctx = ClassPolyCtx::new();
        let s1s2 = S1.multiply(S2);
        let v = ctx.class_polynomials(s1s2);
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&ClassId::TwoA), Some(&Laurent::one()));

        // t^{L1} s2 s1 -> O2: 1, C(0): v - v^-1
        let x = elt(cw(1, 0), W_S21);
        let v = ctx.class_polynomials(x);
        assert_eq!(v.len(), 2);
        assert_eq!(v.get(&ClassId::TwoA), Some(&Laurent::one()));
        assert_eq!(v.get(&ClassId::C(0)), Some(&Laurent::bracket()));

        let t = ExtAffineElement::translation(cw(0, 2));
        let v = ctx.class_polynomials(t);
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&ClassId::Trans(cw(0, 2))), Some(&Laurent::one()));
    }

    #[test]
    fn structural_invariants_small() {
        let ctx = ClassPolyCtx::new();
        for x in ball(8).unwrap() {
            let v = ctx.class_polynomials(x);
            // v = 1 total is 1
            let total: BigInt = v.values().map(|p| p.eval_one()).sum();
            assert!(total.is_one(), "{x:?}");
            for (c, p) in v.iter() {
                assert_eq!(c.kottwitz(), x.kottwitz(), "{x:?} {c}");
                let coeffs = p.to_bracket_basis().expect("bracket subring");
                assert!(coeffs.values().all(|c| c > &BigInt::from(0)), "{x:?} {c}");
            }
            // tau-conjugation invariance
            let vt = ctx.class_polynomials(x.conjugate_by(TAU));
            assert_eq!(*v, *vt, "{x:?}");
        }
    }

    #[test]
    fn path_independence_small() {
        let base = ClassPolyCtx::new();
        for seed in [1u64, 7, 42] {
            let ctx = ClassPolyCtx::with_seed(seed);
            for x in ball(7).unwrap() {
                assert_eq!(
                    *base.class_polynomials(x),
                    *ctx.class_polynomials(x),
                    "seed {seed} element {x:?}"
                );
            }
        }
    }
}
