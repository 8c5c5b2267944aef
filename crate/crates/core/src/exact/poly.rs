use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::{qi, ExactError, Ring, Q};

/// Exponent tuple with trailing zeros trimmed, so `x` is the same monomial
/// whatever the ambient variable count.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn new(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Mono(e)
    }

    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Mono(e)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variable slots actually touched.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let n = self.0.len().max(o.0.len());
        Mono::new((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        if o.0.len() > self.0.len() {
            if o.0[self.0.len()..].iter().any(|&e| e > 0) {
                return None;
            }
        }
        let mut out = self.0.clone();
        for (i, &e) in o.0.iter().enumerate() {
            if i >= out.len() {
                break;
            }
            if out[i] < e {
                return None;
            }
            out[i] -= e;
        }
        Some(Mono::new(out))
    }
}

impl Ord for Mono {
    // graded lex: total degree first, then the first differing exponent
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&o.exp(i)) {
                    Ordering::Equal => {}
                    c => return c,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Q) -> Self {
        Poly::term(Mono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(qi(n))
    }

    pub fn var(i: usize) -> Self {
        Poly::term(Mono::var(i), qi(1))
    }

    pub fn term(m: Mono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(exps: &[u32], c: Q) -> Self {
        Poly::term(Mono::new(exps.to_vec()), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(|| qi(0))
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Mono::one())
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn width(&self) -> usize {
        self.terms.keys().map(|m| m.width()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, o: &Poly, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), &(c * s));
        }
    }

    pub fn scale(&self, s: &Q) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, s: &Q) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in &self.terms {
            out.add_term(k.mul(m), &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::int(1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut ex = m.0.clone();
            ex[i] -= 1;
            out.add_term(Mono::new(ex), &(c * qi(e as i64)));
        }
        out
    }

    /// Substitute `vals[i]` for variable `i` (missing entries stay symbolic).
    pub fn subst(&self, vals: &[Option<Poly>]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            let mut keep = vec![0u32; m.width()];
            for (i, &e) in m.exps().iter().enumerate() {
                match vals.get(i).and_then(|v| v.as_ref()) {
                    Some(v) => t = t.mul(&v.pow(e)),
                    None => keep[i] = e,
                }
            }
            out.add_assign(&t.mul_mono(&Mono::new(keep), &qi(1)));
        }
        out
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self`.
    /// Single-divisor reduction leaves a unique remainder, so this decides
    /// divisibility.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let mut tail = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let (m, c) = (m.clone(), c.clone());
            match m.div(&lm) {
                Some(qm) => {
                    let qc = &c / &lc;
                    rem = rem.sub_poly(&d.mul_mono(&qm, &qc));
                    quo.add_term(qm, &qc);
                }
                None => {
                    rem.terms.remove(&m);
                    tail.add_term(m, &c);
                }
            }
        }
        if tail.is_zero() {
            Some(quo)
        } else {
            None
        }
    }

    fn sub_poly(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(o, &qi(-1));
        out
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (v, &e) in m.exps().iter().enumerate() {
                let name = names.get(v).map(|n| n.to_string()).unwrap_or_else(|| format!("v{}", v));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{}^{}", name, e)),
                }
            }
            if factors.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
    fn times(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn scale(&self, c: &Q) -> Self {
        Poly::scale(self, c)
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.len() == 1 && self.degree() == Some(0) {
            Some(Poly::constant(qi(1) / self.constant_term()))
        } else {
            None
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.plus(o)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.sub_poly(o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        Poly::mul(self, o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&qi(-1))
    }
}

/// A named variable list; the checked entry points used at API boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub vars: Vec<String>,
}

impl PolyRing {
    pub fn new(vars: &[&str]) -> Self {
        PolyRing { vars: vars.iter().map(|s| s.to_string()).collect() }
    }

    pub fn var(&self, name: &str) -> Result<Poly, ExactError> {
        Ok(Poly::var(self.index(name)?))
    }

    pub fn index(&self, name: &str) -> Result<usize, ExactError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ExactError::UnknownVar(name.to_string()))
    }

    fn check(&self, p: &Poly) -> Result<(), ExactError> {
        if p.width() > self.vars.len() {
            Err(ExactError::VarMismatch { used: p.width(), ring: self.vars.len() })
        } else {
            Ok(())
        }
    }

    pub fn product(&self, a: &Poly, b: &Poly) -> Result<Poly, ExactError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a * b)
    }

    pub fn partial(&self, p: &Poly, var: &str) -> Result<Poly, ExactError> {
        self.check(p)?;
        Ok(p.partial(self.index(var)?))
    }

    pub fn render(&self, p: &Poly) -> String {
        let names: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        p.render(&names)
    }
}
