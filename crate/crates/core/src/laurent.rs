//! Integer Laurent polynomials in one variable v, plus the (v - v^-1)-power
//! basis used by class polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Degree of a Laurent polynomial; the zero polynomial has degree -infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse exponent -> coefficient map; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    pub fn v() -> Self {
        Laurent::monomial(1, BigInt::one())
    }

    pub fn v_inv() -> Self {
        Laurent::monomial(-1, BigInt::one())
    }

    /// The basis element [v] = v - v^-1.
    pub fn bracket() -> Self {
        let mut p = Laurent::v();
        p.add_term(-1, &BigInt::from(-1));
        p
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn from_int(k: i64) -> Self {
        Laurent::monomial(0, BigInt::from(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Laurent {
        let mut out = Laurent::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &(c * k));
        }
        out
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(&e) => Degree::Finite(e),
            None => Degree::NegInf,
        }
    }

    /// Evaluate at v = 1 (every monomial specializes to its coefficient).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficients c_k with self = sum c_k (v - v^-1)^k, by exact division
    /// from the top degree down.
    pub fn to_bracket_basis(&self) -> Result<BTreeMap<i64, BigInt>, NotInBracketSubring> {
        let mut rem = self.clone();
        let mut out = BTreeMap::new();
        let bracket = Laurent::bracket();
        let mut power_cache: Vec<Laurent> = vec![Laurent::one()];
        while !rem.is_zero() {
            let d = match rem.degree() {
                Degree::Finite(d) if d >= 0 => d,
                _ => return Err(NotInBracketSubring { remainder: rem }),
            };
            let c = rem.coeff(d);
            while (power_cache.len() as i64) <= d {
                let last = power_cache.last().unwrap().mul(&bracket);
                power_cache.push(last);
            }
            rem = rem.sub(&power_cache[d as usize].scalar_mul(&c));
            out.insert(d, c);
        }
        Ok(out)
    }

    /// Rebuild a polynomial from bracket-basis coefficients.
    pub fn from_bracket_basis(coeffs: &BTreeMap<i64, BigInt>) -> Laurent {
        let bracket = Laurent::bracket();
        let mut out = Laurent::zero();
        let mut power = Laurent::one();
        let mut k = 0i64;
        let max = coeffs.keys().next_back().copied().unwrap_or(-1);
        while k <= max {
            if let Some(c) = coeffs.get(&k) {
                out = out.add(&power.scalar_mul(c));
            }
            power = power.mul(&bracket);
            k += 1;
        }
        out
    }

    /// JSON object {"exp": coeff, ...}; coefficients beyond the i64 range
    /// fall back to decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (&e, c) in &self.terms {
            let value = match c.to_string().parse::<i64>() {
                Ok(small) => serde_json::Value::from(small),
                Err(_) => serde_json::Value::String(c.to_string()),
            };
            map.insert(e.to_string(), value);
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Laurent> {
        let obj = value.as_object()?;
        let mut out = Laurent::zero();
        for (k, v) in obj {
            let exp: i64 = k.parse().ok()?;
            let coeff: BigInt = match v {
                serde_json::Value::String(s) => s.parse().ok()?,
                serde_json::Value::Number(n) => BigInt::from(n.as_i64()?),
                _ => return None,
            };
            out.add_term(exp, &coeff);
        }
        Some(out)
    }
}

/// Error from `to_bracket_basis` on input outside Z[v - v^-1].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotInBracketSubring {
    pub remainder: Laurent,
}

impl fmt::Display for NotInBracketSubring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not in the (v - v^-1) subring; remainder {}",
            self.remainder
        )
    }
}

impl std::error::Error for NotInBracketSubring {}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_part = if abs.is_one() && e != 0 {
                String::new()
            } else {
                abs.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{e}"),
            };
            write!(f, "{coeff_part}{var_part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let v = Laurent::v();
        let vi = Laurent::v_inv();
        assert_eq!(v.mul(&vi), Laurent::one());
        let b = Laurent::bracket();
        let sq = b.mul(&b);
        // v^2 - 2 + v^-2
        assert_eq!(sq.coeff(2), BigInt::from(1));
        assert_eq!(sq.coeff(0), BigInt::from(-2));
        assert_eq!(sq.coeff(-2), BigInt::from(1));
        let p = Laurent::monomial(3, BigInt::from(5));
        assert_eq!(p.add(&Laurent::zero()), p);
        assert_eq!(p.sub(&p), Laurent::zero());
    }

    #[test]
    fn degrees() {
        assert_eq!(Laurent::zero().degree(), Degree::NegInf);
        assert_eq!(Laurent::one().degree(), Degree::Finite(0));
        assert_eq!(Laurent::bracket().degree(), Degree::Finite(1));
        assert!(Degree::NegInf < Degree::Finite(-100));
    }

    #[test]
    fn bracket_basis() {
        assert_eq!(
            Laurent::one().to_bracket_basis().unwrap(),
            BTreeMap::from([(0, BigInt::one())])
        );
        assert_eq!(
            Laurent::bracket().to_bracket_basis().unwrap(),
            BTreeMap::from([(1, BigInt::one())])
        );
        // mixed parity fails
        assert!(Laurent::v().add(&Laurent::one()).to_bracket_basis().is_err());
        assert!(Laurent::v_inv().to_bracket_basis().is_err());
        // v^2 - 1 + v^-2 = [v]^2 + 1 is in the subring
        let p = Laurent::monomial(2, BigInt::one())
            .add(&Laurent::from_int(-1))
            .add(&Laurent::monomial(-2, BigInt::one()));
        assert_eq!(
            p.to_bracket_basis().unwrap(),
            BTreeMap::from([(0, BigInt::one()), (2, BigInt::one())])
        );
    }

    #[test]
    fn display_form() {
        let p = Laurent::monomial(2, BigInt::from(3))
            .add(&Laurent::from_int(-1))
            .add(&Laurent::monomial(-4, BigInt::one()));
        assert_eq!(p.to_string(), "3v^2 - 1 + v^-4");
        let q = Laurent::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
    }
}
