//! Polynomials in one indeterminate over truncated Laurent series.

use super::field::{binomial_mod_p, PrimeFieldElement};
use super::series::TruncatedLaurentSeries;
use super::AlgebraError;

/// A polynomial Σ aᵢ·zⁱ whose coefficients are truncated Laurent series.
/// The leading coefficient must not be zero to precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPolynomial {
    coeffs: Vec<TruncatedLaurentSeries>,
}

impl SeriesPolynomial {
    /// Builds from degree-indexed coefficients; trailing exact zeros are
    /// trimmed. A trailing coefficient that is zero merely to precision is
    /// rejected: the degree would be unknown.
    pub fn new(mut coeffs: Vec<TruncatedLaurentSeries>) -> Result<Self, AlgebraError> {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_exact_zero()) {
            coeffs.pop();
        }
        let Some(last) = coeffs.last() else {
            return Err(AlgebraError::EmptyPolynomial);
        };
        if coeffs.len() > 1 && last.is_zero_to_precision() {
            return Err(AlgebraError::UnknownLeadingCoefficient);
        }
        let p = last.modulus();
        if coeffs.iter().any(|c| c.modulus() != p) {
            return Err(AlgebraError::ModulusMismatch(p, 0));
        }
        Ok(SeriesPolynomial { coeffs })
    }

    /// Builds from sparse `(degree, series)` terms; absent degrees are the
    /// exact zero series.
    pub fn from_sparse(
        modulus: u64,
        terms: Vec<(usize, TruncatedLaurentSeries)>,
    ) -> Result<Self, AlgebraError> {
        let degree = terms.iter().map(|(d, _)| *d).max().unwrap_or(0);
        let mut coeffs = vec![TruncatedLaurentSeries::exact_zero(modulus)?; degree + 1];
        for (d, s) in terms {
            coeffs[d] = coeffs[d].add(&s)?;
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn modulus(&self) -> u64 {
        self.coeffs[0].modulus()
    }

    pub fn coefficient(&self, degree: usize) -> Option<&TruncatedLaurentSeries> {
        self.coeffs.get(degree)
    }

    pub fn coefficients(&self) -> &[TruncatedLaurentSeries] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let p = self.modulus();
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = TruncatedLaurentSeries::exact_zero(p)?;
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a.add(b)?);
        }
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let p = self.modulus();
        let zero = TruncatedLaurentSeries::exact_zero(p)?;
        let mut coeffs = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_exact_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_exact_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Self::new(coeffs)
    }

    /// Substitutes the shifted, scaled variable: given f as a polynomial in
    /// y, returns N(z) = f(scale·(z + 1)).
    ///
    /// Expanding (scale·(z+1))^i = scaleⁱ·Σⱼ C(i,j)·zʲ, the coefficient of
    /// zʲ in N is Σ_{i≥j} aᵢ·scaleⁱ·C(i,j), with the binomials taken mod p.
    pub fn substitute_shifted(
        &self,
        scale: &TruncatedLaurentSeries,
    ) -> Result<SeriesPolynomial, AlgebraError> {
        let p = self.modulus();
        if scale.modulus() != p {
            return Err(AlgebraError::ModulusMismatch(p, scale.modulus()));
        }
        let e = self.degree();
        let zero = TruncatedLaurentSeries::exact_zero(p)?;
        let mut out = vec![zero; e + 1];
        let mut scale_pow = TruncatedLaurentSeries::one(p)?;
        for i in 0..=e {
            let a = &self.coeffs[i];
            if !a.is_exact_zero() {
                let base = a.mul(&scale_pow)?;
                for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                    let c = binomial_mod_p(i as u64, j as u64, p);
                    if c != 0 {
                        let term = base.scalar_mul(PrimeFieldElement::reduced(p, c as i64));
                        *slot = slot.add(&term)?;
                    }
                }
            }
            if i < e {
                scale_pow = scale_pow.mul(scale)?;
            }
        }
        SeriesPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::PREC_EXACT;

    fn s(p: u64, terms: &[(i64, i64)]) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::from_terms(p, terms, PREC_EXACT).unwrap()
    }

    #[test]
    fn substitute_quadratic() {
        // f = y^2 - e^2 with scale = e gives N(z) = e^2 z^2 + 2 e^2 z:
        // b2 = e^2, b1 = 2 e^2, b0 = 0.
        let p = 5;
        let f = SeriesPolynomial::from_sparse(
            p,
            vec![(2, s(p, &[(0, 1)])), (0, s(p, &[(2, -1)]))],
        )
        .unwrap();
        let eps = TruncatedLaurentSeries::epsilon(p).unwrap();
        let n = f.substitute_shifted(&eps).unwrap();
        assert_eq!(n.degree(), 2);
        assert_eq!(n.coefficient(2).unwrap(), &s(p, &[(2, 1)]));
        assert_eq!(n.coefficient(1).unwrap(), &s(p, &[(2, 2)]));
        assert!(n.coefficient(0).unwrap().is_exact_zero());
    }

    #[test]
    fn substitute_is_additive_and_multiplicative() {
        // Ring-homomorphism check on small fixed polynomials.
        let p = 7;
        let eps = TruncatedLaurentSeries::epsilon(p).unwrap();
        let f = SeriesPolynomial::from_sparse(
            p,
            vec![(0, s(p, &[(1, 3)])), (1, s(p, &[(0, 2)])), (3, s(p, &[(0, 1)]))],
        )
        .unwrap();
        let g = SeriesPolynomial::from_sparse(
            p,
            vec![(0, s(p, &[(0, 4)])), (2, s(p, &[(-1, 5)]))],
        )
        .unwrap();
        let lhs_add = f.add(&g).unwrap().substitute_shifted(&eps).unwrap();
        let rhs_add = f
            .substitute_shifted(&eps)
            .unwrap()
            .add(&g.substitute_shifted(&eps).unwrap())
            .unwrap();
        assert_eq!(lhs_add, rhs_add);

        let lhs_mul = f.mul(&g).unwrap().substitute_shifted(&eps).unwrap();
        let rhs_mul = f
            .substitute_shifted(&eps)
            .unwrap()
            .mul(&g.substitute_shifted(&eps).unwrap())
            .unwrap();
        assert_eq!(lhs_mul, rhs_mul);
    }

    #[test]
    fn rejects_unknown_leading_coefficient() {
        let p = 5;
        let truncated_zero = TruncatedLaurentSeries::zero(p, 3).unwrap();
        let r = SeriesPolynomial::new(vec![s(p, &[(0, 1)]), truncated_zero]);
        assert!(matches!(r, Err(AlgebraError::UnknownLeadingCoefficient)));
    }
}
