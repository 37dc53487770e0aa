//! Truncated Laurent series in a uniformizer ε over 𝔽_p.
//!
//! A series stores its nonzero coefficients sparsely together with a
//! precision bound `N`: every coefficient at an exponent below `N` is known
//! exactly, and nothing is claimed at or above `N`. Exact values (Laurent
//! polynomials with no truncation) carry the sentinel precision
//! [`PREC_EXACT`]. Arithmetic propagates precision pessimistically:
//!
//! - sum: `min(prec(a), prec(b))`
//! - product: `min(val(a) + prec(b), prec(a) + val(b))`, with the stored
//!   lower bound standing in for the valuation of a series that is zero to
//!   precision.
//!
//! The valuation of a zero-to-precision series is reported as `AtLeast(N)`,
//! never as a finite number; consumers that need an exact valuation must go
//! through [`TruncatedLaurentSeries::known_valuation`].

use std::collections::BTreeMap;
use std::fmt;

use super::field::PrimeFieldElement;
use super::AlgebraError;

/// Sentinel precision for exactly known series. Large enough that no real
/// exponent reaches it, small enough that saturating sums never wrap.
pub const PREC_EXACT: i64 = i64::MAX / 4;

/// Valuation of a series: the least exponent with a nonzero coefficient, or
/// a lower bound when the series is zero to its precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Known(i64),
    AtLeast(i64),
}

impl Valuation {
    /// The certified lower bound in either case.
    pub fn lower_bound(&self) -> i64 {
        match *self {
            Valuation::Known(v) | Valuation::AtLeast(v) => v,
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, Valuation::Known(_))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    modulus: u64,
    coeffs: BTreeMap<i64, PrimeFieldElement>,
    precision: i64,
}

fn sat_add(a: i64, b: i64) -> i64 {
    a.saturating_add(b).min(PREC_EXACT)
}

impl TruncatedLaurentSeries {
    /// The zero series known exactly below `precision`.
    pub fn zero(modulus: u64, precision: i64) -> Result<Self, AlgebraError> {
        if !super::field::is_odd_prime(modulus) {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        Ok(TruncatedLaurentSeries { modulus, coeffs: BTreeMap::new(), precision })
    }

    /// The zero series, exact at all exponents.
    pub fn exact_zero(modulus: u64) -> Result<Self, AlgebraError> {
        Self::zero(modulus, PREC_EXACT)
    }

    pub fn one(modulus: u64) -> Result<Self, AlgebraError> {
        Self::from_terms(modulus, &[(0, 1)], PREC_EXACT)
    }

    /// The uniformizer ε itself, exact.
    pub fn epsilon(modulus: u64) -> Result<Self, AlgebraError> {
        Self::from_terms(modulus, &[(1, 1)], PREC_EXACT)
    }

    /// `c · ε^exp`, exact.
    pub fn monomial(modulus: u64, coeff: i64, exp: i64) -> Result<Self, AlgebraError> {
        Self::from_terms(modulus, &[(exp, coeff)], PREC_EXACT)
    }

    /// Builds a series from `(exponent, coefficient)` terms, reducing the
    /// coefficients mod p and dropping zeros. Repeated exponents accumulate.
    pub fn from_terms(
        modulus: u64,
        terms: &[(i64, i64)],
        precision: i64,
    ) -> Result<Self, AlgebraError> {
        let mut s = Self::zero(modulus, precision)?;
        for &(exp, c) in terms {
            if exp >= precision {
                return Err(AlgebraError::TermBeyondPrecision { exp, precision });
            }
            let cur = s.coefficient_at(exp);
            let next = cur + PrimeFieldElement::reduced(modulus, c);
            if next.is_zero() {
                s.coeffs.remove(&exp);
            } else {
                s.coeffs.insert(exp, next);
            }
        }
        Ok(s)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision == PREC_EXACT
    }

    /// True when no nonzero coefficient is known below the precision.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the series is the exact zero value.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.is_exact()
    }

    /// The coefficient at `exp`; zero for absent exponents below precision,
    /// `None` at or above the precision (unknown).
    pub fn coefficient(&self, exp: i64) -> Option<PrimeFieldElement> {
        if exp >= self.precision {
            return None;
        }
        Some(self.coefficient_at(exp))
    }

    fn coefficient_at(&self, exp: i64) -> PrimeFieldElement {
        self.coeffs
            .get(&exp)
            .copied()
            .unwrap_or_else(|| PrimeFieldElement::zero(self.modulus))
    }

    /// Iterates the stored nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, PrimeFieldElement)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Smallest exponent that may carry a nonzero coefficient.
    pub fn min_exponent(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.precision)
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.keys().next() {
            Some(&v) => Valuation::Known(v),
            None => Valuation::AtLeast(self.precision),
        }
    }

    /// The exact valuation, or an error when the series is zero to precision.
    pub fn known_valuation(&self) -> Result<i64, AlgebraError> {
        match self.valuation() {
            Valuation::Known(v) => Ok(v),
            Valuation::AtLeast(n) => Err(AlgebraError::ZeroToPrecision(n)),
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    /// Drops terms at or above `precision` and lowers the bound. The bound
    /// never increases.
    pub fn truncate(&self, precision: i64) -> Self {
        let precision = precision.min(self.precision);
        let coeffs = self
            .coeffs
            .range(..precision)
            .map(|(&e, &c)| (e, c))
            .collect();
        TruncatedLaurentSeries { modulus: self.modulus, coeffs, precision }
    }

    /// Multiplies by the exact monomial ε^k: shifts exponents and precision.
    pub fn shift(&self, k: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (sat_add(e, k), c)).collect();
        TruncatedLaurentSeries {
            modulus: self.modulus,
            coeffs,
            precision: sat_add(self.precision, k),
        }
    }

    pub fn scalar_mul(&self, c: PrimeFieldElement) -> Self {
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        if c.is_zero() {
            // All terms below the precision become exactly zero.
            return TruncatedLaurentSeries {
                modulus: self.modulus,
                coeffs: BTreeMap::new(),
                precision: self.precision,
            };
        }
        let coeffs = self.coeffs.iter().map(|(&e, &k)| (e, k * c)).collect();
        TruncatedLaurentSeries { modulus: self.modulus, coeffs, precision: self.precision }
    }

    pub fn negate(&self) -> Self {
        self.scalar_mul(PrimeFieldElement::reduced(self.modulus, -1))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_modulus(other)?;
        let precision = self.precision.min(other.precision);
        let mut coeffs: BTreeMap<i64, PrimeFieldElement> = BTreeMap::new();
        for (&e, &c) in self.coeffs.range(..precision).chain(other.coeffs.range(..precision)) {
            let cur = coeffs
                .get(&e)
                .copied()
                .unwrap_or_else(|| PrimeFieldElement::zero(self.modulus));
            let next = cur + c;
            if next.is_zero() {
                coeffs.remove(&e);
            } else {
                coeffs.insert(e, next);
            }
        }
        Ok(TruncatedLaurentSeries { modulus: self.modulus, coeffs, precision })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_modulus(other)?;
        // An exact zero annihilates regardless of the other precision.
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::exact_zero(self.modulus);
        }
        let precision = sat_add(self.min_exponent(), other.precision)
            .min(sat_add(self.precision, other.min_exponent()));
        let mut coeffs: BTreeMap<i64, PrimeFieldElement> = BTreeMap::new();
        for (&ea, &ca) in &self.coeffs {
            for (&eb, &cb) in &other.coeffs {
                let e = sat_add(ea, eb);
                if e >= precision {
                    break; // other.coeffs ascends, later eb only grow
                }
                let cur = coeffs
                    .get(&e)
                    .copied()
                    .unwrap_or_else(|| PrimeFieldElement::zero(self.modulus));
                let next = cur + ca * cb;
                if next.is_zero() {
                    coeffs.remove(&e);
                } else {
                    coeffs.insert(e, next);
                }
            }
        }
        Ok(TruncatedLaurentSeries { modulus: self.modulus, coeffs, precision })
    }

    /// Nonnegative integer power by repeated squaring. `a^0` is one at the
    /// precision of `a`.
    pub fn pow(&self, exp: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(self.modulus)?.truncate(self.precision);
        if exp == 0 {
            return Ok(acc);
        }
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse: `self · result = 1 + O(ε^target_precision)`.
    ///
    /// The input must have a known valuation `v`; the result has valuation
    /// `-v`. When the input itself is truncated, the achievable precision is
    /// capped by what the input determines.
    pub fn invert(&self, target_precision: i64) -> Result<Self, AlgebraError> {
        let v = self.known_valuation()?;
        let lead = self.coefficient_at(v);
        let lead_inv = lead.inverse().expect("leading coefficient is nonzero");
        // Normalize to constant term 1: n = self / (lead ε^v).
        let n = self.scalar_mul(lead_inv).shift(-v);
        let needed = target_precision.min(n.precision);
        if needed <= 0 {
            return Err(AlgebraError::PrecisionExhausted(needed));
        }
        let one = Self::one(self.modulus)?;
        // Geometric series in u = 1 - n (valuation >= 1).
        let u = one.sub(&n)?;
        let mut acc = one.clone().truncate(needed);
        if !u.is_zero_to_precision() {
            let vu = u.known_valuation()?;
            debug_assert!(vu >= 1);
            let mut term = one;
            let mut covered = 0i64;
            while covered < needed {
                term = term.mul(&u)?.truncate(needed);
                if term.is_zero_to_precision() {
                    break;
                }
                acc = acc.add(&term)?;
                covered += vu;
            }
        }
        let acc = acc.truncate(needed);
        Ok(acc.scalar_mul(lead_inv).shift(-v))
    }

    /// True when every coefficient below `bound` is certified zero.
    pub fn is_zero_below(&self, bound: i64) -> bool {
        self.precision >= bound && self.coeffs.range(..bound).next().is_none()
    }

    /// True when `self` equals one up to `O(ε^bound)`.
    pub fn is_one_to(&self, bound: i64) -> Result<bool, AlgebraError> {
        let one = Self::one(self.modulus)?;
        Ok(self.sub(&one)?.is_zero_below(bound))
    }
}

impl fmt::Debug for TruncatedLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match e {
                    0 => write!(f, "{c}")?,
                    1 => write!(f, "{c}*e")?,
                    _ => write!(f, "{c}*e^{e}")?,
                }
            }
        }
        if self.precision < PREC_EXACT {
            write!(f, " + O(e^{})", self.precision)?;
        }
        write!(f, " (mod {})", self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u64, terms: &[(i64, i64)], prec: i64) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::from_terms(p, terms, prec).unwrap()
    }

    #[test]
    fn cancellation_keeps_precision() {
        // (e + e^2) + (-e) = e^2, valuation 2.
        let a = s(5, &[(1, 1), (2, 1)], 10);
        let b = s(5, &[(1, -1)], 10);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.valuation(), Valuation::Known(2));
        assert_eq!(sum.precision(), 10);
        assert_eq!(sum.terms().collect::<Vec<_>>().len(), 1);
    }

    #[test]
    fn binomial_square_mod_5() {
        // (1 + e)^2 = 1 + 2e + e^2 over F_5.
        let a = s(5, &[(0, 1), (1, 1)], PREC_EXACT);
        let sq = a.pow(2).unwrap();
        let expect = s(5, &[(0, 1), (1, 2), (2, 1)], PREC_EXACT);
        assert_eq!(sq, expect);
    }

    #[test]
    fn frobenius_kills_middle_binomials() {
        // (z+1)^7 over F_7 via series in "z": coefficient of z^3 is
        // C(7,3) = 35 = 0 mod 7; the whole expansion collapses to z^7 + 1.
        let a = s(7, &[(0, 1), (1, 1)], PREC_EXACT);
        let p7 = a.pow(7).unwrap();
        assert_eq!(p7, s(7, &[(0, 1), (7, 1)], PREC_EXACT));
        assert!(p7.coefficient(3).unwrap().is_zero());
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = s(5, &[(0, 1)], 10);
        let b = s(7, &[(0, 1)], 10);
        assert!(matches!(a.add(&b), Err(AlgebraError::ModulusMismatch(5, 7))));
        assert!(matches!(a.mul(&b), Err(AlgebraError::ModulusMismatch(5, 7))));
    }

    #[test]
    fn invert_geometric() {
        // 1/(1 - e) to precision 4 over F_5 is 1 + e + e^2 + e^3.
        let a = s(5, &[(0, 1), (1, -1)], PREC_EXACT);
        let inv = a.invert(4).unwrap();
        assert_eq!(inv.terms().map(|(e, c)| (e, c.value())).collect::<Vec<_>>(),
                   vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(inv.precision(), 4);
        assert!(a.mul(&inv).unwrap().is_one_to(4).unwrap());
    }

    #[test]
    fn invert_monomial() {
        let eps = TruncatedLaurentSeries::epsilon(5).unwrap();
        let inv = eps.invert(6).unwrap();
        assert_eq!(inv.known_valuation().unwrap(), -1);
        assert!(eps.mul(&inv).unwrap().is_one_to(6).unwrap());
    }

    #[test]
    fn invert_unit_with_pole_free_check() {
        // d = 1/(e^4 - 1) over F_5 has valuation 0 and constant term -1 = 4.
        // Oracle: multiply back and check the product is 1 + O(e^N).
        let a = s(5, &[(4, 1), (0, -1)], PREC_EXACT);
        let n = 40;
        let d = a.invert(n).unwrap();
        assert_eq!(d.known_valuation().unwrap(), 0);
        assert_eq!(d.coefficient(0).unwrap().value(), 4);
        assert!(a.mul(&d).unwrap().is_one_to(n).unwrap());
    }

    #[test]
    fn zero_to_precision_valuation_is_a_bound() {
        let z = TruncatedLaurentSeries::zero(5, 8).unwrap();
        assert_eq!(z.valuation(), Valuation::AtLeast(8));
        assert!(z.known_valuation().is_err());
        assert!(matches!(z.invert(4), Err(AlgebraError::ZeroToPrecision(8))));
    }

    #[test]
    fn product_precision_rule() {
        // a = e^2 + O(e^10), b = e^-1 + O(e^5):
        // prec = min(2 + 5, 10 + (-1)) = 7.
        let a = s(5, &[(2, 1)], 10);
        let b = s(5, &[(-1, 1)], 5);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.precision(), 7);
        assert_eq!(prod.known_valuation().unwrap(), 1);
    }

    #[test]
    fn valuation_laws() {
        let a = s(7, &[(2, 3), (5, 1)], 30);
        let b = s(7, &[(1, 2), (2, 4)], 30);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.known_valuation().unwrap(), 3); // val(ab) = val a + val b
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.known_valuation().unwrap(), 1); // distinct vals: equality
    }
}
