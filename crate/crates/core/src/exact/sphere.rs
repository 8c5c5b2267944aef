use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{qi, Poly, Ring, Q};

const X: usize = 0;
const Y: usize = 1;

/// `(p + q z) / z^m` on the upper hemisphere, z² = 1 − x² − y².
///
/// Canonical: m is minimal.  The numerator is divisible by z exactly when
/// (1 − x² − y²) divides p, in which case (p + qz)/z = q + (p/z²) z.
#[derive(Clone, PartialEq, Eq)]
pub struct SphereElem {
    p: Poly,
    q: Poly,
    m: u32,
}

fn zsq() -> Poly {
    &(&Poly::int(1) - &Poly::var(X).pow(2)) - &Poly::var(Y).pow(2)
}

impl SphereElem {
    /// Builds and canonicalises `(p + q z) / z^m`.
    pub fn new(p: Poly, q: Poly, m: u32) -> Self {
        let mut e = SphereElem { p, q, m };
        e.canonicalize();
        e
    }

    pub fn from_poly(p: Poly) -> Self {
        SphereElem { p, q: Poly::zero(), m: 0 }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(qi(n))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::var(X))
    }

    pub fn y() -> Self {
        Self::from_poly(Poly::var(Y))
    }

    pub fn z() -> Self {
        SphereElem { p: Poly::zero(), q: Poly::int(1), m: 0 }
    }

    pub fn zinv() -> Self {
        SphereElem { p: Poly::int(1), q: Poly::zero(), m: 1 }
    }

    /// z^k for any integer k.
    pub fn zpow(k: i32) -> Self {
        if k >= 0 {
            let k = k as u32;
            let p = zsq().pow(k / 2);
            if k % 2 == 0 {
                Self::from_poly(p)
            } else {
                SphereElem { p: Poly::zero(), q: p, m: 0 }
            }
        } else {
            SphereElem { p: Poly::int(1), q: Poly::zero(), m: (-k) as u32 }
        }
    }

    pub fn parts(&self) -> (&Poly, &Poly, u32) {
        (&self.p, &self.q, self.m)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.is_zero() {
            self.m = 0;
            return;
        }
        let s = zsq();
        while self.m > 0 {
            if self.p.is_zero() {
                self.p = std::mem::take(&mut self.q);
                self.m -= 1;
                continue;
            }
            match self.p.div_exact(&s) {
                Some(b) => {
                    // (b z² + q z)/z^m = (q + b z)/z^{m-1}
                    let q = std::mem::take(&mut self.q);
                    self.p = q;
                    self.q = b;
                    self.m -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator times z^k, same denominator.
    fn lift(&self, k: u32) -> (Poly, Poly) {
        let (mut p, mut q) = (self.p.clone(), self.q.clone());
        let s = zsq();
        for _ in 0..k {
            let np = &q * &s;
            q = p;
            p = np;
        }
        (p, q)
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        let m = self.m.max(o.m);
        let (p1, q1) = self.lift(m - self.m);
        let (p2, q2) = o.lift(m - o.m);
        let c = qi(sign);
        let mut p = p1;
        p.add_scaled(&p2, &c);
        let mut q = q1;
        q.add_scaled(&q2, &c);
        Self::new(p, q, m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let s = zsq();
        let p = &(&self.p * &o.p) + &(&(&self.q * &o.q) * &s);
        let q = &(&self.p * &o.q) + &(&self.q * &o.p);
        Self::new(p, q, self.m + o.m)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.p.scale(c), self.q.scale(c), self.m)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::int(1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// ∂ₓ (var = 0) or ∂ᵧ (var = 1), using ∂z = −x/z, −y/z.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < 2, "sphere chart has coordinates x, y");
        let s = zsq();
        let c = Poly::var(var);
        let m = qi(self.m as i64);
        // d[(p + qz) z^-m] = [(∂p s + m c p) + (∂q s − c q + m c q) z] / z^{m+2}
        let np = &(&self.p.partial(var) * &s) + &(&c * &self.p).scale(&m);
        let nq = &(&(&self.q.partial(var) * &s) - &(&c * &self.q)) + &(&c * &self.q).scale(&m);
        Self::new(np, nq, self.m + 2)
    }

    /// Value at x = y = 0, where z = 1.
    pub fn at_origin(&self) -> Q {
        self.p.constant_term() + self.q.constant_term()
    }

    pub fn render(&self) -> String {
        let names = ["x", "y"];
        let num = match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => return "0".into(),
            (false, true) => self.p.render(&names),
            (true, false) => format!("({})*z", self.q.render(&names)),
            (false, false) => format!("{} + ({})*z", self.p.render(&names), self.q.render(&names)),
        };
        match self.m {
            0 => num,
            1 => format!("({})/z", num),
            m => format!("({})/z^{}", num, m),
        }
    }
}

impl fmt::Debug for SphereElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for SphereElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Ring for SphereElem {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        SphereElem::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }
    fn minus(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }
    fn times(&self, o: &Self) -> Self {
        SphereElem::mul(self, o)
    }
    fn scale(&self, c: &Q) -> Self {
        SphereElem::scale(self, c)
    }
    /// Units are c·z^k; anything else is not invertible in this ring.
    fn try_inverse(&self) -> Option<Self> {
        let s = zsq();
        let (base, odd) = match (self.p.is_zero(), self.q.is_zero()) {
            (false, true) => (&self.p, 0),
            (true, false) => (&self.q, 1),
            _ => return None,
        };
        let mut r = base.clone();
        let mut k = 0i32;
        while r.degree().unwrap_or(0) > 0 {
            r = r.div_exact(&s)?;
            k += 2;
        }
        let c = r.constant_term();
        let zk = k + odd - self.m as i32;
        Some(Self::zpow(-zk).scale(&(qi(1) / c)))
    }
}

impl Add for &SphereElem {
    type Output = SphereElem;
    fn add(self, o: &SphereElem) -> SphereElem {
        self.plus(o)
    }
}

impl Sub for &SphereElem {
    type Output = SphereElem;
    fn sub(self, o: &SphereElem) -> SphereElem {
        self.minus(o)
    }
}

impl Mul for &SphereElem {
    type Output = SphereElem;
    fn mul(self, o: &SphereElem) -> SphereElem {
        SphereElem::mul(self, o)
    }
}

impl Neg for &SphereElem {
    type Output = SphereElem;
    fn neg(self) -> SphereElem {
        self.scale(&qi(-1))
    }
}
