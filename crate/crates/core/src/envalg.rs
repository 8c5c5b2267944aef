//! U_ℏ(g) as a rewriting system over PBW monomials, the symmetrisation map
//! φ : S(g) → U_ℏ(g), and the star products it induces on S(g).
//!
//! Both PBW elements and elements of S(g) are carried as `HSeries<Poly>`;
//! for a PBW element the monomial e₀^{a₀}e₁^{a₁}… is read as the ordered
//! product in basis order.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;

use crate::exact::{q, qi, HSeries, Mono, Poly, Ring, Q};
use crate::lie::LieAlgebra;

pub type Sym = HSeries<Poly>;
pub type Pbw = HSeries<Poly>;
pub type Word = Vec<usize>;

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

fn qfact(n: u32) -> Q {
    Q::from_integer(factorial(n))
}

/// Letters of a commutative monomial, with multiplicity, in basis order.
pub fn letters(m: &Mono) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.degree() as usize);
    for (i, &e) in m.exps().iter().enumerate() {
        out.extend(std::iter::repeat(i).take(e as usize));
    }
    out
}

fn buf(order: usize) -> Vec<Poly> {
    vec![Poly::zero(); order + 1]
}

/// out += c ℏ^shift s, dropping anything past the buffer.
fn acc(out: &mut [Poly], s: &Pbw, shift: usize, c: &Q) {
    for (k, p) in s.coeffs().iter().enumerate() {
        if k + shift >= out.len() {
            break;
        }
        out[k + shift].add_scaled(p, c);
    }
}

/// Normal-ordering engine for one algebra at one truncation order.
///
/// The core step is `a · e_j` for a normal monomial `a`: if every letter of
/// `a` is ≤ j the letter is appended, otherwise `a = a'e_k` with k > j and
/// `a'e_k e_j = (a'e_j)e_k + ℏ Σ_l f_{kjl} a'e_l`.  Results are memoised;
/// the caches make an `Envelope` single-task (it is deliberately not `Sync`).
pub struct Envelope {
    alg: LieAlgebra,
    order: usize,
    letter: RefCell<HashMap<(Mono, usize), Rc<Pbw>>>,
    monos: RefCell<HashMap<(Mono, Mono), Rc<Pbw>>>,
    sym: RefCell<HashMap<Mono, Rc<Pbw>>>,
}

impl Envelope {
    pub fn new(alg: &LieAlgebra, order: usize) -> Self {
        Envelope {
            alg: alg.clone(),
            order,
            letter: RefCell::default(),
            monos: RefCell::default(),
            sym: RefCell::default(),
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn monomial(&self, m: Mono) -> Pbw {
        HSeries::constant(self.order, Poly::term(m, qi(1)))
    }

    pub fn constant(&self, p: Poly) -> Sym {
        HSeries::constant(self.order, p)
    }

    fn mono_times_letter(&self, a: &Mono, j: usize) -> Rc<Pbw> {
        let key = (a.clone(), j);
        if let Some(r) = self.letter.borrow().get(&key) {
            return r.clone();
        }
        let w = a.width();
        let res = if w == 0 || w - 1 <= j {
            self.monomial(a.mul(&Mono::var(j)))
        } else {
            let k = w - 1;
            let rest = a.div(&Mono::var(k)).expect("k is a letter of a");
            let first = self.mono_times_letter(&rest, j);
            let mut out = self.series_times_letter_buf(&first, k);
            for (l, c) in self.alg.bracket_basis(k, j) {
                acc(&mut out, &self.mono_times_letter(&rest, *l), 1, c);
            }
            HSeries::from_coeffs(self.order, out)
        };
        let res = Rc::new(res);
        self.letter.borrow_mut().insert(key, res.clone());
        res
    }

    fn series_times_letter_buf(&self, s: &Pbw, j: usize) -> Vec<Poly> {
        let mut out = buf(self.order);
        for (k, p) in s.coeffs().iter().enumerate() {
            for (m, c) in p.terms() {
                acc(&mut out, &self.mono_times_letter(m, j), k, c);
            }
        }
        out
    }

    pub fn times_letter(&self, s: &Pbw, j: usize) -> Pbw {
        HSeries::from_coeffs(self.order, self.series_times_letter_buf(s, j))
    }

    fn mono_times_mono(&self, a: &Mono, b: &Mono) -> Rc<Pbw> {
        let key = (a.clone(), b.clone());
        if let Some(r) = self.monos.borrow().get(&key) {
            return r.clone();
        }
        let mut s = self.monomial(a.clone());
        for l in letters(b) {
            s = self.times_letter(&s, l);
        }
        let r = Rc::new(s);
        self.monos.borrow_mut().insert(key, r.clone());
        r
    }

    /// Normal form of a word (product of basis letters, left to right).
    pub fn normalize(&self, word: &[usize]) -> Pbw {
        let mut s = self.monomial(Mono::one());
        for &l in word {
            s = self.times_letter(&s, l);
        }
        s
    }

    /// Product in U_ℏ(g) of two normal-ordered elements.
    pub fn mul(&self, a: &Pbw, b: &Pbw) -> Pbw {
        let mut out = buf(self.order);
        for (i, pa) in a.coeffs().iter().enumerate() {
            for (j, pb) in b.coeffs().iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                for (ma, ca) in pa.terms() {
                    for (mb, cb) in pb.terms() {
                        acc(&mut out, &self.mono_times_mono(ma, mb), i + j, &(ca * cb));
                    }
                }
            }
        }
        HSeries::from_coeffs(self.order, out)
    }

    /// Sum of all distinct arrangements of the multiset `m`, normal-ordered.
    fn arrangements(&self, m: &Mono) -> Rc<Pbw> {
        if let Some(r) = self.sym.borrow().get(m) {
            return r.clone();
        }
        let res = if m.degree() == 0 {
            self.monomial(Mono::one())
        } else {
            let mut out = buf(self.order);
            for (l, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let prev = self.arrangements(&m.div(&Mono::var(l)).unwrap());
                let s = self.times_letter(&prev, l);
                acc(&mut out, &s, 0, &qi(1));
            }
            HSeries::from_coeffs(self.order, out)
        };
        let r = Rc::new(res);
        self.sym.borrow_mut().insert(m.clone(), r.clone());
        r
    }

    /// φ on a single commutative monomial.
    pub fn symmetrize_mono(&self, m: &Mono) -> Pbw {
        let count = m.exps().iter().fold(qfact(m.degree()), |acc, &e| acc / qfact(e));
        self.arrangements(m).scale(&(qi(1) / count))
    }

    /// φ : S(g)[ℏ] → U_ℏ(g).
    pub fn symmetrize(&self, s: &Sym) -> Pbw {
        let mut out = buf(self.order);
        for (k, p) in s.coeffs().iter().enumerate() {
            for (m, c) in p.terms() {
                acc(&mut out, &self.symmetrize_mono(m), k, c);
            }
        }
        HSeries::from_coeffs(self.order, out)
    }

    /// φ⁻¹ by back-substitution in ℏ: φ(m) = m + O(ℏ), so the lowest
    /// surviving ℏ-coefficient of the remainder is read off directly.
    pub fn unsymmetrize(&self, u: &Pbw) -> Sym {
        let mut rem: Vec<Poly> = u.coeffs().to_vec();
        let mut out = buf(self.order);
        for k in 0..=self.order {
            let top = rem[k].clone();
            for (m, c) in top.terms() {
                let img = self.symmetrize_mono(m);
                acc(&mut rem, &img, k, &-c);
            }
            debug_assert!(rem[k].is_zero());
            out[k] = top;
        }
        HSeries::from_coeffs(self.order, out)
    }

    /// a • b = φ⁻¹(φ(a)φ(b)).
    pub fn star(&self, a: &Sym, b: &Sym) -> Sym {
        self.unsymmetrize(&self.mul(&self.symmetrize(a), &self.symmetrize(b)))
    }

    pub fn star_mono(&self, a: &Mono, b: &Mono) -> Sym {
        self.star(&self.constant(Poly::term(a.clone(), qi(1))), &self.constant(Poly::term(b.clone(), qi(1))))
    }
}

fn e(i: usize) -> Poly {
    Poly::var(i)
}

/// Product of the letters at the positions not in `skip`.
fn rest(ls: &[usize], skip: &[usize]) -> Poly {
    let mut m = Mono::one();
    for (pos, &l) in ls.iter().enumerate() {
        if !skip.contains(&pos) {
            m = m.mul(&Mono::var(l));
        }
    }
    Poly::term(m, qi(1))
}

fn br(alg: &LieAlgebra, a: &Poly, b: &Poly) -> Poly {
    alg.bracket_lin(a, b)
}

/// Closed form for (w₁…w_m) • (v₁…v_n) through ℏ², with each displayed
/// term read symmetrically: the coefficient n m/2 in front of
/// [v₁,w₁]w₂…v₂… stands for the sum over every choice of the distinguished
/// factors, so only the sum over ordered position choices remains.
pub fn star_closed_form(alg: &LieAlgebra, w: &Mono, v: &Mono, order: usize) -> Result<Sym, String> {
    if order > 2 {
        return Err(format!("closed form is only known through h^2 (asked for order {})", order));
    }
    let (ws, vs) = (letters(w), letters(v));
    let mut c = buf(order);
    c[0] = Poly::term(w.mul(v), qi(1));
    if order >= 1 {
        let mut t = Poly::zero();
        for (a, &wa) in ws.iter().enumerate() {
            for (b, &vb) in vs.iter().enumerate() {
                t.add_assign(&(&br(alg, &e(vb), &e(wa)) * &(&rest(&ws, &[a]) * &rest(&vs, &[b]))));
            }
        }
        c[1] = t.scale(&q(-1, 2));
    }
    if order >= 2 {
        let mut t = Poly::zero();
        for (a1, &w1) in ws.iter().enumerate() {
            for (a2, &w2) in ws.iter().enumerate() {
                if a1 == a2 {
                    continue;
                }
                for (b1, &v1) in vs.iter().enumerate() {
                    for (b2, &v2) in vs.iter().enumerate() {
                        if b1 == b2 {
                            continue;
                        }
                        let x = &br(alg, &e(v1), &e(w1)) * &br(alg, &e(v2), &e(w2));
                        t.add_scaled(&(&x * &(&rest(&ws, &[a1, a2]) * &rest(&vs, &[b1, b2]))), &q(1, 8));
                    }
                }
            }
        }
        for (a, &wa) in ws.iter().enumerate() {
            for (b1, &v1) in vs.iter().enumerate() {
                for (b2, &v2) in vs.iter().enumerate() {
                    if b1 == b2 {
                        continue;
                    }
                    let x = br(alg, &e(v1), &br(alg, &e(v2), &e(wa)));
                    t.add_scaled(&(&x * &(&rest(&ws, &[a]) * &rest(&vs, &[b1, b2]))), &q(1, 12));
                }
            }
        }
        for (b, &vb) in vs.iter().enumerate() {
            for (a1, &w1) in ws.iter().enumerate() {
                for (a2, &w2) in ws.iter().enumerate() {
                    if a1 == a2 {
                        continue;
                    }
                    let x = br(alg, &e(w1), &br(alg, &e(w2), &e(vb)));
                    t.add_scaled(&(&x * &(&rest(&ws, &[a1, a2]) * &rest(&vs, &[b]))), &q(1, 12));
                }
            }
        }
        c[2] = t;
    }
    Ok(HSeries::from_coeffs(order, c))
}

/// w • (v₁…v_n) for a single generator w, through ℏ².
pub fn single_letter_star(alg: &LieAlgebra, w: usize, v: &Mono) -> Sym {
    let vs = letters(v);
    let mut c = buf(2);
    c[0] = &e(w) * &Poly::term(v.clone(), qi(1));
    for (b, &vb) in vs.iter().enumerate() {
        c[1].add_scaled(&(&br(alg, &e(vb), &e(w)) * &rest(&vs, &[b])), &q(-1, 2));
        for (b2, &v2) in vs.iter().enumerate() {
            if b2 != b {
                let x = br(alg, &e(vb), &br(alg, &e(v2), &e(w)));
                c[2].add_scaled(&(&x * &rest(&vs, &[b, b2])), &q(1, 12));
            }
        }
    }
    HSeries::from_coeffs(2, c)
}

// b₊ with basis (t, x), [t, x] = x: variable 0 is t, variable 1 is x.
const T: usize = 0;
const X: usize = 1;

fn xt(a: u32, b: i64) -> Option<Mono> {
    (b >= 0).then(|| Mono::new(vec![b as u32, a]))
}

/// Displayed expansion of φ(xⁿtᵐ) through ℏ³, as ordered monomials xᵃtᵇ
/// (encoded with t as variable 0 and x as variable 1).
pub fn bplus_phi_closed(n: u32, m: u32) -> Pbw {
    let (nn, mm) = (qi(n as i64), qi(m as i64));
    let f = |k: i64| &mm - qi(k);
    let coeffs = [
        qi(1),
        &nn * &mm / qi(2),
        &nn * (qi(3) * &nn + qi(1)) * &mm * f(1) / qi(24),
        &nn * &nn * (&nn + qi(1)) * &mm * f(1) * f(2) / qi(48),
    ];
    bplus_series(n, m, &coeffs)
}

/// Displayed expansion of φ⁻¹(xⁿtᵐ) through ℏ³.
pub fn bplus_phi_inv_closed(n: u32, m: u32) -> Sym {
    let (nn, mm) = (qi(n as i64), qi(m as i64));
    let f = |k: i64| &mm - qi(k);
    let coeffs = [
        qi(1),
        -(&nn * &mm) / qi(2),
        &nn * (qi(3) * &nn - qi(1)) * &mm * f(1) / qi(24),
        &nn * &nn * (qi(1) - &nn) * &mm * f(1) * f(2) / qi(48),
    ];
    bplus_series(n, m, &coeffs)
}

fn bplus_series(n: u32, m: u32, coeffs: &[Q; 4]) -> HSeries<Poly> {
    let mut c = buf(3);
    for (k, a) in coeffs.iter().enumerate() {
        if let Some(mono) = xt(n, m as i64 - k as i64) {
            c[k] = Poly::term(mono, a.clone());
        } else {
            assert!(a.is_zero(), "negative power of t with nonzero coefficient");
        }
    }
    HSeries::from_coeffs(3, c)
}

/// The displayed closed form for (xⁿtᵐ) • (xʳtˢ) through ℏ³.
pub fn bplus_star_closed_form(n: u32, m: u32, r: u32, s: u32, order: usize) -> Result<Sym, String> {
    if order > 3 {
        return Err(format!("closed form is only known through h^3 (asked for order {})", order));
    }
    let (n, m, r, s) = (qi(n as i64), qi(m as i64), qi(r as i64), qi(s as i64));
    let p = |a: &Q, k: u32| -> Q { (0..k).fold(qi(1), |acc, _| acc * a) };
    let c1 = (&m * &r - &n * &s) / qi(2);
    let c2 = (&m * &r - p(&m, 2) * &r - qi(3) * &m * p(&r, 2) + qi(3) * p(&m, 2) * p(&r, 2) + &n * &s
        - qi(2) * &m * &n * &s
        - qi(3) * p(&n, 2) * &s
        - qi(2) * &m * &r * &s
        - qi(6) * &m * &n * &r * &s
        - &n * p(&s, 2)
        + qi(3) * p(&n, 2) * p(&s, 2))
        / qi(24);
    let terms3: [(i64, [u32; 4]); 22] = [
        // (coefficient, [n, m, r, s] exponents)
        (-2, [0, 1, 2, 0]),
        (3, [0, 2, 2, 0]),
        (-1, [0, 3, 2, 0]),
        (2, [0, 1, 3, 0]),
        (-3, [0, 2, 3, 0]),
        (1, [0, 3, 3, 0]),
        (2, [2, 0, 0, 1]),
        (-2, [2, 1, 0, 1]),
        (-2, [3, 0, 0, 1]),
        (-1, [1, 2, 1, 1]),
        (-3, [2, 1, 1, 1]),
        (2, [0, 1, 2, 1]),
        (-2, [0, 2, 2, 1]),
        (3, [1, 1, 2, 1]),
        (-3, [1, 2, 2, 1]),
        (-3, [2, 0, 0, 2]),
        (2, [2, 1, 0, 2]),
        (3, [3, 0, 0, 2]),
        (1, [1, 1, 1, 2]),
        (3, [2, 1, 1, 2]),
        (1, [2, 0, 0, 3]),
        (-1, [3, 0, 0, 3]),
    ];
    let mut c3 = qi(0);
    for (c, [en, em, er, es]) in terms3 {
        c3 += qi(c) * p(&n, en) * p(&m, em) * p(&r, er) * p(&s, es);
    }
    let c3 = c3 / qi(48);
    let to_u = |a: &Q| -> i64 { a.to_integer().try_into().unwrap() };
    let (dx, dt) = (to_u(&(&n + &r)) as u32, to_u(&(&m + &s)));
    let mut c = buf(order);
    for (k, a) in [qi(1), c1, c2, c3].into_iter().enumerate().take(order + 1) {
        match xt(dx, dt - k as i64) {
            Some(mono) => c[k] = Poly::term(mono, a),
            None => {
                if !a.is_zero() {
                    return Err(format!("nonzero h^{} coefficient with negative power of t", k));
                }
            }
        }
    }
    Ok(HSeries::from_coeffs(order, c))
}

/// Variables for the CBH check: t, x, then the symbolic exponents p, q, r, s.
const P: usize = 2;
const QV: usize = 3;
const R: usize = 4;
const S: usize = 5;

fn param_degree(m: &Mono) -> u32 {
    (P..=S).map(|i| m.exp(i)).sum()
}

fn cut(p: &Poly, max_deg: u32) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        if param_degree(m) <= max_deg {
            out.add_term(m.clone(), c);
        }
    }
    out
}

fn cut_series(s: &Sym, max_deg: u32) -> Sym {
    s.map(|p| cut(p, max_deg))
}

fn smul(a: &Sym, b: &Sym) -> Sym {
    a.try_mul(b).expect("same order")
}

/// Both sides of exp(pt+qx) • exp(rt+sx) = exp((p+r)t + Qx) with p, q, r, s
/// symbolic, keeping every term of total degree ≤ `max_deg` in p, q, r, s.
/// The left side is assembled from the star-product oracle, the right side
/// from the closed-form coefficient
/// Q = (q E(p) + e^{ℏp} s E(r)) / E(p + r),  E(u) = (e^{ℏu} − 1)/(ℏu).
pub fn bplus_cbh_sides(alg: &LieAlgebra, order: usize, max_deg: u32) -> (Sym, Sym) {
    let env = Envelope::new(alg, order);
    let mut lhs = buf(order);
    for a in 0..=max_deg {
        for b in 0..=(max_deg - a) {
            for c in 0..=(max_deg - a - b) {
                for d in 0..=(max_deg - a - b - c) {
                    let coef = qi(1) / (qfact(a) * qfact(b) * qfact(c) * qfact(d));
                    let pq = Mono::new(vec![0, 0, a, b, c, d]);
                    let st = env.star_mono(&Mono::new(vec![a, b]), &Mono::new(vec![c, d]));
                    for (k, p) in st.coeffs().iter().enumerate() {
                        lhs[k].add_assign(&p.mul_mono(&pq, &coef));
                    }
                }
            }
        }
    }
    let lhs = HSeries::from_coeffs(order, lhs);

    let ser = |f: &dyn Fn(usize) -> Poly| HSeries::from_coeffs(order, (0..=order).map(f).collect());
    let lin = |u: &Poly| {
        let u = u.clone();
        move |k: usize| u.pow(k as u32).scale(&(qi(1) / qfact(k as u32 + 1)))
    };
    let pp = e(P);
    let rr = e(R);
    let e_p = ser(&lin(&pp));
    let e_r = ser(&lin(&rr));
    let e_pr = ser(&lin(&(&pp + &rr)));
    let exp_hp = ser(&|k| pp.pow(k as u32).scale(&(qi(1) / qfact(k as u32))));
    let qs = HSeries::constant(order, e(QV));
    let ss = HSeries::constant(order, e(S));
    let num = smul(&qs, &e_p).try_add(&smul(&smul(&exp_hp, &ss), &e_r)).unwrap();
    let qcoef = smul(&num, &e_pr.inverse().expect("E(0) = 1"));
    let y = HSeries::constant(order, &(&pp + &rr) * &e(T)).try_add(&smul(&qcoef, &HSeries::constant(order, e(X)))).unwrap();
    let mut rhs = HSeries::one(order);
    let mut pow = HSeries::one(order);
    for j in 1..=max_deg {
        pow = cut_series(&smul(&pow, &y), max_deg);
        rhs = rhs.try_add(&pow.scale(&(qi(1) / qfact(j)))).unwrap();
    }
    (cut_series(&lhs, max_deg), cut_series(&rhs, max_deg))
}

/// Specialises the symbolic parameters (None keeps a parameter symbolic).
pub fn specialise(s: &Sym, vals: [Option<Q>; 4]) -> Sym {
    let mut sub: Vec<Option<Poly>> = vec![None, None];
    sub.extend(vals.into_iter().map(|v| v.map(Poly::constant)));
    s.map(|p| p.subst(&sub))
}

pub const CBH_VARS: [&str; 6] = ["t", "x", "p", "q", "r", "s"];
