use std::fmt;

use super::{ExactError, Ring, Q};

/// `c[0] + c[1] ℏ + … + c[N] ℏ^N`; products drop everything past `N`.
#[derive(Clone, PartialEq)]
pub struct HSeries<R: Ring> {
    c: Vec<R>,
}

impl<R: Ring> HSeries<R> {
    pub fn zero(order: usize) -> Self {
        HSeries { c: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, R::one())
    }

    pub fn constant(order: usize, r: R) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = r;
        s
    }

    /// Coefficients beyond `order` are discarded, missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: Vec<R>) -> Self {
        let mut s = Self::zero(order);
        for (k, r) in coeffs.into_iter().enumerate().take(order + 1) {
            s.c[k] = r;
        }
        s
    }

    /// `r ℏ^k`.
    pub fn monomial(order: usize, k: usize, r: R) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.c[k] = r;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn set(&mut self, k: usize, r: R) {
        if k < self.c.len() {
            self.c[k] = r;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.c.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> HSeries<S> {
        HSeries { c: self.c.iter().map(f).collect() }
    }

    fn check(&self, o: &Self) -> Result<(), ExactError> {
        if self.order() != o.order() {
            Err(ExactError::OrderMismatch(self.order(), o.order()))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        Ok(HSeries { c: self.c.iter().zip(&o.c).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        Ok(HSeries { c: self.c.iter().zip(&o.c).map(|(a, b)| a.minus(b)).collect() })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if o.c[j].is_zero() {
                    continue;
                }
                out.c[i + j] = out.c[i + j].plus(&self.c[i].times(&o.c[j]));
            }
        }
        Ok(out)
    }

    /// Two-sided inverse: b₀ = c₀⁻¹, b_k = −c₀⁻¹ Σ_{j≥1} c_j b_{k−j}.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let inv0 = self.c[0].try_inverse().ok_or(ExactError::NotInvertible)?;
        let n = self.order();
        let mut b = Self::zero(n);
        b.c[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.plus(&self.c[j].times(&b.c[k - j]));
            }
            b.c[k] = inv0.times(&acc).negate();
        }
        Ok(b)
    }

    pub fn scale(&self, s: &Q) -> Self {
        self.map(|r| r.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|r| r.negate())
    }

    pub fn render(&self, f: impl Fn(&R) -> String) -> String {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(k, r)| match k {
                0 => format!("({})", f(r)),
                1 => format!("h*({})", f(r)),
                _ => format!("h^{}*({})", k, f(r)),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl<R: Ring> fmt::Debug for HSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|r| format!("{:?}", r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi, Poly};

    #[test]
    fn one_plus_minus() {
        let g = Poly::var(0);
        let a = HSeries::from_coeffs(1, vec![Poly::int(1), g.clone()]);
        let b = HSeries::from_coeffs(1, vec![Poly::int(1), -&g]);
        assert_eq!(a.try_mul(&b).unwrap(), HSeries::one(1));
        assert!(a.try_mul(&HSeries::zero(1)).unwrap().is_zero());
        assert!(a.try_mul(&HSeries::zero(2)).is_err());
    }

    #[test]
    fn inverse_closed_form() {
        let g1 = Poly::var(0);
        let g2 = Poly::var(1);
        let f = HSeries::from_coeffs(2, vec![Poly::int(1), g1.clone(), g2.clone()]);
        let want = HSeries::from_coeffs(2, vec![Poly::int(1), -&g1, &(&g1 * &g1) - &g2]);
        assert_eq!(f.inverse().unwrap(), want);
        let nz = HSeries::from_coeffs(2, vec![Poly::zero(), g1]);
        assert_eq!(nz.inverse(), Err(ExactError::NotInvertible));
        let c = HSeries::from_coeffs(3, vec![q(2, 3), qi(1), qi(0), qi(5)]);
        assert_eq!(c.try_mul(&c.inverse().unwrap()).unwrap(), HSeries::one(3));
    }
}
