//! Preconnections on S(g): the potential-level rule ∇̂_v dw = dΞ(v,w), the
//! one induced by a cochain through a•ξ − ξ•a = ℏ∇̂_aξ + O(ℏ²), the slₙ
//! trilinear and the sl₃ curvature obstruction, and the Mackey case.

use crate::exact::{q, qi, Poly, Ring, Q};
use crate::geom::{module_product, FieldRealization, OneForm, Side, VectorField};
use crate::lie::LieAlgebra;
use crate::twist::{apply_cochain, Cochain, TwistError};

type Vector = Vec<Q>;

fn axpy(acc: &mut Vector, c: &Q, x: &[Q]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += c * b;
    }
}

fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scaled(a: &[Q], c: &Q) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// ∇̂_v dw = d Ξ(v,w), Ξ(v,w) = t[v,w] + Ξ̂(v,w); every result is returned as
/// its potential in g.
#[derive(Clone, Debug)]
pub struct Preconnection {
    g: LieAlgebra,
    /// t; ½ for the canonical rule.
    pub weight: Q,
    /// Ξ̂(e_i,e_j) in coordinates, symmetric in i,j.
    pub sym: Option<Vec<Vec<Vector>>>,
}

impl Preconnection {
    pub fn canonical(g: &LieAlgebra) -> Self {
        Preconnection { g: g.clone(), weight: q(1, 2), sym: None }
    }

    /// The full bracket: flat, but not Poisson-compatible.
    pub fn without_half(g: &LieAlgebra) -> Self {
        Preconnection { g: g.clone(), weight: qi(1), sym: None }
    }

    pub fn with_symmetric(g: &LieAlgebra, sym: Vec<Vec<Vector>>) -> Self {
        Preconnection { sym: Some(sym), ..Self::canonical(g) }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    fn antisym(&self, v: &[Q], w: &[Q]) -> Vector {
        scaled(&self.g.bracket(v, w), &self.weight)
    }

    pub fn xi_hat(&self, v: &[Q], w: &[Q]) -> Vector {
        let n = self.g.dim();
        let mut out = vec![qi(0); n];
        if let Some(t) = &self.sym {
            for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    axpy(&mut out, &(vi * wj), &t[i][j]);
                }
            }
        }
        out
    }

    pub fn xi(&self, v: &[Q], w: &[Q]) -> Vector {
        add(&self.antisym(v, w), &self.xi_hat(v, w))
    }

    /// Potential of ∇̂_v dw.
    pub fn nabla(&self, v: &[Q], w: &[Q]) -> Vector {
        self.xi(v, w)
    }

    /// ∇̂_v dw − ∇̂_w dv − d[v,w]
    pub fn compat_defect(&self, v: &[Q], w: &[Q]) -> Vector {
        sub(&sub(&self.xi(v, w), &self.xi(w, v)), &self.g.bracket(v, w))
    }

    /// R(v,w)dz = ∇̂_v∇̂_w dz − ∇̂_w∇̂_v dz − ∇̂_[v,w] dz
    pub fn curvature(&self, v: &[Q], w: &[Q], z: &[Q]) -> Vector {
        let a = self.xi(v, &self.xi(w, z));
        let b = self.xi(w, &self.xi(v, z));
        sub(&sub(&a, &b), &self.xi(&self.g.bracket(v, w), z))
    }

    /// The curvature split by degree in Ξ̂: [Ξ̂⁰, Ξ̂¹, Ξ̂²] parts.
    pub fn curvature_by_degree(&self, v: &[Q], w: &[Q], z: &[Q]) -> [Vector; 3] {
        let b = |x: &[Q], y: &[Q]| self.antisym(x, y);
        let s = |x: &[Q], y: &[Q]| self.xi_hat(x, y);
        let vw = self.g.bracket(v, w);
        let r0 = sub(&sub(&b(v, &b(w, z)), &b(w, &b(v, z))), &b(&vw, z));
        let r1 = {
            let a = add(&b(v, &s(w, z)), &s(v, &b(w, z)));
            let c = add(&b(w, &s(v, z)), &s(w, &b(v, z)));
            sub(&sub(&a, &c), &s(&vw, z))
        };
        let r2 = sub(&s(v, &s(w, z)), &s(w, &s(v, z)));
        [r0, r1, r2]
    }

    /// ⟨T(v,w),dz⟩ = v̂(ŵ(z)) − ⟨ŵ,∇̂_v dz⟩ − (v↔w) − {{v,w},z}, with â = [a, ·].
    pub fn torsion(&self, v: &[Q], w: &[Q], z: &[Q]) -> Vector {
        let br = |a: &[Q], b: &[Q]| self.g.bracket(a, b);
        let half = |a: &[Q], b: &[Q]| sub(&br(a, &br(b, z)), &br(b, &self.xi(a, z)));
        sub(&sub(&half(v, w), &half(w, v)), &br(&br(v, w), z))
    }
}

/// The preconnection, bracket, curvature and torsion read off from a cochain
/// acting by vector fields on a polynomial chart.
pub struct InducedCalculus {
    c: Cochain,
    pub fields: Vec<VectorField<Poly>>,
}

impl InducedCalculus {
    pub fn new(c: &Cochain, fields: Vec<VectorField<Poly>>) -> Self {
        InducedCalculus { c: c.truncate(1), fields }
    }

    pub fn dim(&self) -> usize {
        self.fields.first().map_or(0, |f| f.dim())
    }

    pub fn d(&self, f: &Poly) -> OneForm<Poly> {
        OneForm::exact(f, self.dim())
    }

    /// {a,b}: the ℏ part of a•b − b•a.
    pub fn bracket(&self, a: &Poly, b: &Poly) -> Result<Poly, TwistError> {
        let rz = FieldRealization { fields: self.fields.clone() };
        let ab = apply_cochain(&self.c.finv, &rz, a, b)?;
        let ba = apply_cochain(&self.c.finv, &rz, b, a)?;
        Ok(ab.coeff(1).minus(ba.coeff(1)))
    }

    /// ∇̂_a ξ: the ℏ part of a•ξ − ξ•a.
    pub fn nabla(&self, a: &Poly, xi: &OneForm<Poly>) -> Result<OneForm<Poly>, TwistError> {
        let l = module_product(&self.c.finv, &self.fields, a, xi, Side::Left)?;
        let r = module_product(&self.c.finv, &self.fields, a, xi, Side::Right)?;
        Ok(l[1].plus(&r[1].scale(&qi(-1))))
    }

    /// ∇̂_a db − ∇̂_b da − d{a,b}
    pub fn compat_defect(&self, a: &Poly, b: &Poly) -> Result<OneForm<Poly>, TwistError> {
        let x = self.nabla(a, &self.d(b))?.plus(&self.nabla(b, &self.d(a))?.scale(&qi(-1)));
        Ok(x.plus(&self.d(&self.bracket(a, b)?).scale(&qi(-1))))
    }

    pub fn curvature(&self, a: &Poly, b: &Poly, xi: &OneForm<Poly>) -> Result<OneForm<Poly>, TwistError> {
        let ab = self.nabla(a, &self.nabla(b, xi)?)?;
        let ba = self.nabla(b, &self.nabla(a, xi)?)?;
        let br = self.nabla(&self.bracket(a, b)?, xi)?;
        Ok(ab.plus(&ba.scale(&qi(-1))).plus(&br.scale(&qi(-1))))
    }

    /// ⟨â, ξ⟩ with â = {a, ·}
    fn pair(&self, a: &Poly, xi: &OneForm<Poly>) -> Result<Poly, TwistError> {
        let mut out = Poly::zero();
        for (k, c) in xi.comps.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&(c * &self.bracket(a, &Poly::var(k))?));
            }
        }
        Ok(out)
    }

    pub fn torsion(&self, a: &Poly, b: &Poly, z: &Poly) -> Result<Poly, TwistError> {
        let half = |x: &Poly, y: &Poly| -> Result<Poly, TwistError> {
            let t = self.bracket(x, &self.bracket(y, z)?)?;
            Ok(&t - &self.pair(y, &self.nabla(x, &self.d(z))?)?)
        };
        let ab = self.bracket(a, b)?;
        Ok(&(&half(a, b)? - &half(b, a)?) - &self.bracket(&ab, z)?)
    }
}

/// g⋉g* as vector fields on g* (coordinates = basis of g): e_i by the
/// adjoint derivation, eⁱ by ∂_i.
pub fn sym_fields(g: &LieAlgebra) -> Vec<VectorField<Poly>> {
    let mut f = mackey_fields(g, &vec![vec![]; g.dim()]);
    f.truncate(2 * g.dim());
    f
}

/// g⋉g*⊕g on g* × N: as [`sym_fields`] on the first n coordinates, then
/// čc_i by the given fields on N.
pub fn mackey_fields(g: &LieAlgebra, on_n: &[Vec<Poly>]) -> Vec<VectorField<Poly>> {
    let n = g.dim();
    let d = on_n.first().map_or(0, |f| f.len());
    let dim = n + d;
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let mut comps = vec![Poly::zero(); dim];
        for (j, c) in comps.iter_mut().enumerate().take(n) {
            *c = g.bracket_lin(&Poly::var(i), &Poly::var(j));
        }
        out.push(VectorField::new(comps));
    }
    for i in 0..n {
        out.push(VectorField::coord(dim, i));
    }
    for f in on_n {
        let mut comps = vec![Poly::zero(); n];
        comps.extend(f.iter().cloned());
        out.push(VectorField::new(comps));
    }
    out
}

// ---------------------------------------------------------------- slₙ trilinear

/// The invariant cubic on the diagonal of slₙ, I(v) = Σ_{i<j<k} vⁱvʲvᵏ,
/// with its polarisations.
#[derive(Clone, Copy, Debug)]
pub struct Trilinear {
    pub n: usize,
}

impl Trilinear {
    pub fn cubic(&self, v: &[Q]) -> Q {
        let mut s = qi(0);
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    s += &v[i] * &v[j] * &v[k];
                }
            }
        }
        s
    }

    /// I(v,w,w) = (I(v+2w) − 2I(v+w) + I(v))/6 − I(w)
    pub fn vww(&self, v: &[Q], w: &[Q]) -> Q {
        let w2 = scaled(w, &qi(2));
        let t = self.cubic(&add(v, &w2)) - qi(2) * self.cubic(&add(v, w)) + self.cubic(v);
        t / qi(6) - self.cubic(w)
    }

    /// Full polarisation, from the values on sums.
    pub fn full(&self, u: &[Q], v: &[Q], w: &[Q]) -> Q {
        let c = |x: &[Q]| self.cubic(x);
        let t = c(&add(&add(u, v), w)) - c(&add(u, v)) - c(&add(u, w)) - c(&add(v, w)) + c(u) + c(v) + c(w);
        t / qi(6)
    }
}

pub type Mat3 = [[Q; 3]; 3];

fn mat_zero() -> Mat3 {
    std::array::from_fn(|_| std::array::from_fn(|_| qi(0)))
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = mat_zero();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    c
}

fn trace(a: &Mat3) -> Q {
    &a[0][0] + &a[1][1] + &a[2][2]
}

/// Defining representation of the catalogue sl₃ basis
/// (t1 t2 e12 e23 e13 e21 e32 e31).
pub fn sl3_matrix(i: usize) -> Mat3 {
    let mut m = mat_zero();
    match i {
        0 => {
            m[0][0] = qi(1);
            m[1][1] = qi(-1);
        }
        1 => {
            m[1][1] = qi(1);
            m[2][2] = qi(-1);
        }
        _ => {
            let (r, c) = [(0, 1), (1, 2), (0, 2), (1, 0), (2, 1), (2, 0)][i - 2];
            m[r][c] = qi(1);
        }
    }
    m
}

pub fn sl3_from_coords(v: &[Q]) -> Mat3 {
    let mut m = mat_zero();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let b = sl3_matrix(i);
        for r in 0..3 {
            for s in 0..3 {
                m[r][s] += c * &b[r][s];
            }
        }
    }
    m
}

/// I(A,B,C) = (tr ABC + tr ACB)/6, the polarisation of tr(A³)/3; on the
/// diagonal of sl₃ this is the cubic Σ_{i<j<k} (= det).
pub fn sl3_trilinear(a: &[Q], b: &[Q], c: &[Q]) -> Q {
    let (a, b, c) = (sl3_from_coords(a), sl3_from_coords(b), sl3_from_coords(c));
    (trace(&mat_mul(&mat_mul(&a, &b), &c)) + trace(&mat_mul(&mat_mul(&a, &c), &b))) / qi(6)
}

/// κ(e_i,e_j) = tr(e_i e_j) in the defining representation.
pub fn sl3_trace_form() -> Vec<Vec<Q>> {
    (0..8).map(|i| (0..8).map(|j| trace(&mat_mul(&sl3_matrix(i), &sl3_matrix(j)))).collect()).collect()
}

/// Gauss–Jordan inverse over ℚ.
pub fn inverse_q(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().cloned().chain((0..n).map(|j| if i == j { qi(1) } else { qi(0) })).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = qi(1) / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank over ℚ, rows fed one at a time into a reduced echelon basis.
pub fn rank_q(rows: impl IntoIterator<Item = Vec<Q>>) -> usize {
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    for mut r in rows {
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = qi(1) / &r[p];
            for x in r.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push((p, r));
        }
    }
    basis.len()
}

/// Dimension of the space of symmetric ad-invariant Ξ̂ : g⊗g → g.
pub fn invariant_symmetric_maps(g: &LieAlgebra) -> usize {
    let n = g.dim();
    // unknowns Ξ̂(e_a,e_b)_c for a ≤ b
    let mut pair = vec![vec![0usize; n]; n];
    let mut k = 0;
    for a in 0..n {
        for b in a..n {
            pair[a][b] = k;
            pair[b][a] = k;
            k += 1;
        }
    }
    let unknowns = k * n;
    let var = |a: usize, b: usize, c: usize| pair[a][b] * n + c;
    let mut rows = Vec::new();
    // [x, Ξ̂(a,b)] − Ξ̂([x,a],b) − Ξ̂(a,[x,b]) = 0, component c
    for x in 0..n {
        for a in 0..n {
            for b in a..n {
                let mut eqs = vec![vec![qi(0); unknowns]; n];
                for d in 0..n {
                    for (c, f) in g.bracket_basis(x, d) {
                        eqs[*c][var(a, b, d)] += f;
                    }
                }
                for (d, f) in g.bracket_basis(x, a) {
                    for (c, eq) in eqs.iter_mut().enumerate() {
                        eq[var(*d, b, c)] -= f;
                    }
                }
                for (d, f) in g.bracket_basis(x, b) {
                    for (c, eq) in eqs.iter_mut().enumerate() {
                        eq[var(a, *d, c)] -= f;
                    }
                }
                rows.extend(eqs.into_iter().filter(|e| e.iter().any(|v| !v.is_zero())));
            }
        }
    }
    unknowns - rank_q(rows)
}

/// Ξ̂(v,w) = I(v,w,e_i) κ^{ij} e_j on the catalogue sl₃.
pub fn sl3_symmetric_table(lambda: &Q) -> Vec<Vec<Vector>> {
    let kinv = inverse_q(&sl3_trace_form()).expect("trace form is nondegenerate");
    let e = |i: usize| -> Vector { (0..8).map(|k| if k == i { qi(1) } else { qi(0) }).collect() };
    (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let mut out = vec![qi(0); 8];
                    for (i, row) in kinv.iter().enumerate() {
                        let t = sl3_trilinear(&e(a), &e(b), &e(i));
                        if t.is_zero() {
                            continue;
                        }
                        for (j, k) in row.iter().enumerate() {
                            out[j] += &t * k * lambda;
                        }
                    }
                    out
                })
                .collect()
        })
        .collect()
}

/// The obstruction scalar as displayed, in the I-values.
pub fn printed_obstruction(i111: &Q, i112: &Q, i122: &Q, i222: &Q) -> Q {
    let h = q(1, 2);
    let t = q(2, 3);
    let a = &h * i111 * i111;
    let b = (i112 + &h * i122) * (i112 + &h * i122) * &t;
    let c = &h * i111 * i122;
    let d = (i111 + &h * i112) * (i122 + &h * i222) * &t;
    a + b - c - d
}

/// Σ_a κ^{aa}[I(t₁,t₂,e_a)² − I(t₂,t₂,e_a)I(t₁,t₁,e_a)] over the κ-orthogonal
/// Cartan basis e₁ = t₁, e₂ = ½t₁ + t₂ (κ^{ab} = diag(1/2, 2/3)).
pub fn cartan_obstruction(i111: &Q, i112: &Q, i122: &Q, i222: &Q) -> Q {
    let h = q(1, 2);
    let a1 = (i112 * i112 - i122 * i111) * &h;
    let vw = &h * i112 + i122;
    let ww = &h * i122 + i222;
    let vv = &h * i111 + i112;
    a1 + (&vw * &vw - ww * vv) * q(2, 3)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Obstruction {
    /// No nonzero invariant symmetric Ξ̂: the canonical rule is the only one.
    Unique { invariant_maps: usize },
    Sl3(Sl3Obstruction),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl3Obstruction {
    pub invariant_maps: usize,
    pub i111: Q,
    pub i112: Q,
    pub i122: Q,
    pub i222: Q,
    /// I(v,e_i,w)I(w,v,e_j)κ^{ij} − I(w,e_i,w)I(v,v,e_j)κ^{ij} over the full basis.
    pub scalar: Q,
    /// The same restricted to the Cartan with the diagonal κ weights.
    pub cartan: Q,
    /// The displayed formula evaluated on the computed I-values.
    pub printed_formula: Q,
    /// Potential of R(t₁,t₂)dt₂ with Ξ̂ at unit strength.
    pub curvature: Vector,
}

pub fn sln_obstruction(n: usize) -> Result<Obstruction, String> {
    match n {
        2 => {
            let g = crate::lie::catalogue("sl2").map_err(|e| e.to_string())?;
            Ok(Obstruction::Unique { invariant_maps: invariant_symmetric_maps(&g) })
        }
        3 => Ok(Obstruction::Sl3(sl3_obstruction())),
        _ => Err(format!("slₙ obstruction implemented for n ∈ {{2,3}}, got {}", n)),
    }
}

fn sl3_obstruction() -> Sl3Obstruction {
    let g = crate::lie::catalogue("sl3").expect("catalogue");
    let e = |i: usize| g.unit(i);
    let (t1, t2) = (e(0), e(1));
    let i = |a: &[Q], b: &[Q], c: &[Q]| sl3_trilinear(a, b, c);
    let kinv = inverse_q(&sl3_trace_form()).expect("nondegenerate");
    let mut scalar = qi(0);
    for (a, row) in kinv.iter().enumerate() {
        for (b, k) in row.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            scalar += k * (i(&t1, &e(a), &t2) * i(&t2, &t1, &e(b)) - i(&t2, &e(a), &t2) * i(&t1, &t1, &e(b)));
        }
    }
    let (i111, i112, i122, i222) = (i(&t1, &t1, &t1), i(&t1, &t1, &t2), i(&t1, &t2, &t2), i(&t2, &t2, &t2));
    let p = Preconnection::with_symmetric(&g, sl3_symmetric_table(&qi(1)));
    Sl3Obstruction {
        invariant_maps: invariant_symmetric_maps(&g),
        cartan: cartan_obstruction(&i111, &i112, &i122, &i222),
        printed_formula: printed_obstruction(&i111, &i112, &i122, &i222),
        curvature: p.curvature(&t1, &t2, &t2),
        scalar,
        i111,
        i112,
        i122,
        i222,
    }
}

// ---------------------------------------------------------------- Mackey

/// An argument of the Mackey preconnection: v ∈ g plus a function on N.
#[derive(Clone, Debug, PartialEq)]
pub struct MackeyArg {
    pub v: Vector,
    pub f: Poly,
}

impl MackeyArg {
    pub fn g(v: Vector) -> Self {
        MackeyArg { v, f: Poly::zero() }
    }

    pub fn func(n: usize, f: Poly) -> Self {
        MackeyArg { v: vec![qi(0); n], f }
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(|x| x.is_zero()) && self.f.is_zero()
    }

    fn minus(&self, o: &Self) -> Self {
        MackeyArg { v: sub(&self.v, &o.v), f: &self.f - &o.f }
    }

    /// As a polynomial on g* × N (g-coordinates first).
    pub fn to_poly(&self) -> Poly {
        let mut p = self.f.clone();
        for (i, c) in self.v.iter().enumerate() {
            p.add_scaled(&Poly::var(i), c);
        }
        p
    }
}

/// The table ∇̂_v dw = ½d[v,w], ∇̂_v dg = d(v▷g), ∇̂_f d(·) = 0, with
/// {v,w} = [v,w], {v,f} = v▷f, {f,g} = 0.
pub struct MackeyPrecon<'a> {
    pub g: &'a LieAlgebra,
    /// Action of e_i on N: components along the N coordinates (variables n..).
    pub on_n: &'a [Vec<Poly>],
}

impl MackeyPrecon<'_> {
    fn act(&self, v: &[Q], f: &Poly) -> Poly {
        let n = self.g.dim();
        let mut out = Poly::zero();
        for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, comp) in self.on_n[i].iter().enumerate() {
                out.add_assign(&(&f.partial(n + k) * comp).scale(c));
            }
        }
        out
    }

    pub fn bracket(&self, a: &MackeyArg, b: &MackeyArg) -> MackeyArg {
        MackeyArg { v: self.g.bracket(&a.v, &b.v), f: &self.act(&a.v, &b.f) - &self.act(&b.v, &a.f) }
    }

    /// Potential of ∇̂_a dc.
    pub fn nabla(&self, a: &MackeyArg, c: &MackeyArg) -> MackeyArg {
        MackeyArg { v: scaled(&self.g.bracket(&a.v, &c.v), &q(1, 2)), f: self.act(&a.v, &c.f) }
    }

    pub fn curvature(&self, a: &MackeyArg, b: &MackeyArg, c: &MackeyArg) -> MackeyArg {
        let x = self.nabla(a, &self.nabla(b, c));
        let y = self.nabla(b, &self.nabla(a, c));
        x.minus(&y).minus(&self.nabla(&self.bracket(a, b), c))
    }

    pub fn compat_defect(&self, a: &MackeyArg, b: &MackeyArg) -> MackeyArg {
        self.nabla(a, b).minus(&self.nabla(b, a)).minus(&self.bracket(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalogue;

    #[test]
    fn canonical_sl2_curvature() {
        let g = catalogue("sl2").unwrap();
        let p = Preconnection::canonical(&g);
        // basis H E F
        let r = p.curvature(&g.unit(0), &g.unit(1), &g.unit(2));
        assert_eq!(r, vec![q(-1, 2), qi(0), qi(0)]);
    }

    #[test]
    fn inverse_and_rank() {
        let m = vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]];
        assert_eq!(inverse_q(&m).unwrap(), vec![vec![qi(1), qi(-1)], vec![qi(-1), qi(2)]]);
        assert_eq!(rank_q(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]), 1);
    }

    #[test]
    fn trilinear_polarisations_agree() {
        let t = Trilinear { n: 4 };
        let v = vec![qi(1), qi(2), qi(-4), qi(1)];
        let w = vec![qi(3), qi(0), qi(-1), qi(-2)];
        assert_eq!(t.vww(&v, &w), t.full(&v, &w, &w));
        assert_eq!(t.full(&v, &v, &v), t.cubic(&v));
    }
}
