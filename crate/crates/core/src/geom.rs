//! Coordinate-chart differential geometry: vector fields, Lie derivatives,
//! and the bivector / connection / curvature induced by the leading term
//! Σ X⊗Y of a cochain.

use std::fmt;

use crate::exact::{qi, Poly, Ring, SphereElem, Q};
use crate::twist::{Realization, TSeries, TwistError, WordAction};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("bivector is degenerate: determinant {0} is not a unit of the chart ring")]
    Degenerate(String),
    #[error("Christoffel target is not totally symmetric at ({0},{1},{2})")]
    NotSymmetric(usize, usize, usize),
    #[error("Christoffel target is not constant")]
    NotConstant,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// A coordinate ring with partial derivatives along the chart coordinates.
pub trait ChartRing: Ring {
    fn d(&self, var: usize) -> Self;
    fn constant(c: Q) -> Self;
}

impl ChartRing for Poly {
    fn d(&self, var: usize) -> Self {
        self.partial(var)
    }
    fn constant(c: Q) -> Self {
        Poly::constant(c)
    }
}

impl ChartRing for SphereElem {
    fn d(&self, var: usize) -> Self {
        self.partial(var)
    }
    fn constant(c: Q) -> Self {
        SphereElem::constant(c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    pub names: Vec<String>,
}

impl Chart {
    pub fn new(names: &[&str]) -> Self {
        let mut seen = std::collections::HashSet::new();
        assert!(names.iter().all(|n| seen.insert(*n)), "coordinate names must be distinct");
        Chart { names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VectorField<R> {
    pub comps: Vec<R>,
}

#[derive(Clone, PartialEq)]
pub struct OneForm<R> {
    pub comps: Vec<R>,
}

// (f₀)dx0 + (f₁)dx1, zero components omitted
impl<R: Ring> fmt::Debug for OneForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.comps.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({:?})dx{}", c, i)).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<R: ChartRing> VectorField<R> {
    pub fn new(comps: Vec<R>) -> Self {
        VectorField { comps }
    }

    pub fn coord(dim: usize, i: usize) -> Self {
        VectorField { comps: (0..dim).map(|k| if k == i { R::one() } else { R::zero() }).collect() }
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    /// X(f) = Xⁱ f_{,i}
    pub fn apply(&self, f: &R) -> R {
        let mut out = R::zero();
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                out = out.plus(&c.times(&f.d(i)));
            }
        }
        out
    }

    pub fn times_fn(&self, f: &R) -> Self {
        VectorField { comps: self.comps.iter().map(|c| c.times(f)).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        VectorField { comps: self.comps.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn plus(&self, o: &Self) -> Self {
        VectorField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

impl<R: ChartRing> OneForm<R> {
    pub fn new(comps: Vec<R>) -> Self {
        OneForm { comps }
    }

    pub fn zero(dim: usize) -> Self {
        OneForm { comps: vec![R::zero(); dim] }
    }

    pub fn exact(f: &R, dim: usize) -> Self {
        OneForm { comps: (0..dim).map(|i| f.d(i)).collect() }
    }

    pub fn times_fn(&self, f: &R) -> Self {
        OneForm { comps: self.comps.iter().map(|c| f.times(c)).collect() }
    }

    pub fn plus(&self, o: &Self) -> Self {
        OneForm { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        OneForm { comps: self.comps.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

/// [X,Y]ⁱ = Yⁱ_{,j}Xʲ − Xⁱ_{,j}Yʲ
pub fn vf_bracket<R: ChartRing>(x: &VectorField<R>, y: &VectorField<R>) -> VectorField<R> {
    VectorField { comps: (0..x.dim()).map(|i| x.apply(&y.comps[i]).minus(&y.apply(&x.comps[i]))).collect() }
}

pub fn lie_derivative_fn<R: ChartRing>(x: &VectorField<R>, f: &R) -> R {
    x.apply(f)
}

/// ℒ_Xξ = (Xʲξ_{k,j} + Xʲ_{,k}ξ_j) dxᵏ
pub fn lie_derivative_form<R: ChartRing>(x: &VectorField<R>, xi: &OneForm<R>) -> OneForm<R> {
    let n = x.dim();
    OneForm {
        comps: (0..n)
            .map(|k| {
                let mut c = x.apply(&xi.comps[k]);
                for j in 0..n {
                    if !xi.comps[j].is_zero() {
                        c = c.plus(&x.comps[j].d(k).times(&xi.comps[j]));
                    }
                }
                c
            })
            .collect(),
    }
}

pub type Matrix<R> = Vec<Vec<R>>;
/// Γ[i][j][p] = Γⁱ_{jp}
pub type Christoffel<R> = Vec<Vec<Vec<R>>>;

/// A term X⊗Y of G⁽¹⁾ with its coefficient folded into X.
pub type Pair<R> = (VectorField<R>, VectorField<R>);

/// ω^{ij} = Σ (XⁱYʲ − XʲYⁱ)
pub fn bivector_from_cochain<R: ChartRing>(pairs: &[Pair<R>], dim: usize) -> Matrix<R> {
    let mut w = vec![vec![R::zero(); dim]; dim];
    for (x, y) in pairs {
        for i in 0..dim {
            for j in 0..dim {
                w[i][j] = w[i][j].plus(&x.comps[i].times(&y.comps[j]).minus(&x.comps[j].times(&y.comps[i])));
            }
        }
    }
    w
}

fn det<R: ChartRing>(m: &Matrix<R>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = R::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let t = m[0][c].times(&det(&minor(m, 0, c)));
        out = if c % 2 == 0 { out.plus(&t) } else { out.minus(&t) };
    }
    out
}

fn minor<R: Clone>(m: &Matrix<R>, r: usize, c: usize) -> Matrix<R> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Adjugate over determinant; the determinant must be a unit of the ring.
pub fn invert<R: ChartRing>(m: &Matrix<R>) -> Result<Matrix<R>, GeomError> {
    let n = m.len();
    let d = det(m);
    let dinv = d.try_inverse().ok_or_else(|| GeomError::Degenerate(format!("{:?}", d)))?;
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(&minor(m, j, i)).times(&dinv);
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.negate()
                    }
                })
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct ConnectionData<R> {
    pub omega: Matrix<R>,
    pub omega_inv: Matrix<R>,
    pub gamma: Christoffel<R>,
}

/// Γⁱ_{jp} = −Σ ω_{js}(XˢYⁱ_{,p} − YˢXⁱ_{,p})
pub fn christoffel_from_cochain<R: ChartRing>(pairs: &[Pair<R>], dim: usize) -> Result<ConnectionData<R>, GeomError> {
    let omega = bivector_from_cochain(pairs, dim);
    let omega_inv = invert(&omega)?;
    let mut gamma = vec![vec![vec![R::zero(); dim]; dim]; dim];
    for (x, y) in pairs {
        // t[s][i][p] = XˢYⁱ_{,p} − YˢXⁱ_{,p}
        for i in 0..dim {
            for p in 0..dim {
                let (dy, dx) = (y.comps[i].d(p), x.comps[i].d(p));
                for s in 0..dim {
                    let t = x.comps[s].times(&dy).minus(&y.comps[s].times(&dx));
                    if t.is_zero() {
                        continue;
                    }
                    for j in 0..dim {
                        if !omega_inv[j][s].is_zero() {
                            gamma[i][j][p] = gamma[i][j][p].minus(&omega_inv[j][s].times(&t));
                        }
                    }
                }
            }
        }
    }
    Ok(ConnectionData { omega, omega_inv, gamma })
}

impl<R: ChartRing> ConnectionData<R> {
    pub fn dim(&self) -> usize {
        self.omega.len()
    }

    /// Entries (i,j,p) where ω^{ij}_{,p} ≠ ω^{jq}Γⁱ_{qp} − ω^{iq}Γʲ_{qp}.
    pub fn compatibility_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    let mut rhs = R::zero();
                    for q in 0..n {
                        rhs = rhs
                            .plus(&self.omega[j][q].times(&self.gamma[i][q][p]))
                            .minus(&self.omega[i][q].times(&self.gamma[j][q][p]));
                    }
                    if self.omega[i][j].d(p) != rhs {
                        bad.push((i, j, p));
                    }
                }
            }
        }
        bad
    }

    pub fn torsion_free(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|p| self.gamma[i][j][p] == self.gamma[i][p][j])))
    }

    pub fn curvature(&self) -> Vec<Vec<Vec<Vec<R>>>> {
        curvature_tensor(&self.gamma)
    }
}

/// R^l_{ijk} = Γ^l_{ki,j} − Γ^l_{ji,k} + Γ^m_{ki}Γ^l_{jm} − Γ^m_{ji}Γ^l_{km}, as r[l][i][j][k].
pub fn curvature_tensor<R: ChartRing>(g: &Christoffel<R>) -> Vec<Vec<Vec<Vec<R>>>> {
    let n = g.len();
    let mut r = vec![vec![vec![vec![R::zero(); n]; n]; n]; n];
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut v = g[l][k][i].d(j).minus(&g[l][j][i].d(k));
                    for m in 0..n {
                        v = v.plus(&g[m][k][i].times(&g[l][j][m])).minus(&g[m][j][i].times(&g[l][k][m]));
                    }
                    r[l][i][j][k] = v;
                }
            }
        }
    }
    r
}

/// Σ over permutations of (k,i,j) with sign of ω_{ir}ω^{rs}_{,k}ω_{sj}; zero iff ω⁻¹ is closed.
pub fn closedness_defect<R: ChartRing>(omega: &Matrix<R>, omega_inv: &Matrix<R>) -> Vec<R> {
    let n = omega.len();
    let t = |k: usize, i: usize, j: usize| {
        let mut v = R::zero();
        for r in 0..n {
            for s in 0..n {
                let w = omega[r][s].d(k);
                if !w.is_zero() {
                    v = v.plus(&omega_inv[i][r].times(&w).times(&omega_inv[s][j]));
                }
            }
        }
        v
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let v = t(a, b, c).plus(&t(b, c, a)).plus(&t(c, a, b)).minus(&t(b, a, c)).minus(&t(a, c, b)).minus(&t(c, b, a));
                out.push(v);
            }
        }
    }
    out
}

/// ω^{il}ω^{jk}_{,l} + cyclic in (i,j,k); zero iff ω is Poisson.
pub fn jacobi_defect<R: ChartRing>(omega: &Matrix<R>) -> Vec<R> {
    let n = omega.len();
    let t = |i: usize, j: usize, k: usize| {
        let mut v = R::zero();
        for l in 0..n {
            if !omega[i][l].is_zero() {
                v = v.plus(&omega[i][l].times(&omega[j][k].d(l)));
            }
        }
        v
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(t(i, j, k).plus(&t(j, k, i)).plus(&t(k, i, j)));
            }
        }
    }
    out
}

/// Vector fields acting on chart functions; the letters of a cochain are
/// indices into `fields`.
pub struct FieldRealization<R> {
    pub fields: Vec<VectorField<R>>,
}

impl<R: ChartRing> Realization for FieldRealization<R> {
    type Elem = R;
    fn symbols(&self) -> usize {
        self.fields.len()
    }
    fn act(&self, l: usize, a: &R) -> R {
        self.fields[l].apply(a)
    }
}

impl<R: ChartRing> FieldRealization<R> {
    pub fn act_form(&self, l: usize, xi: &OneForm<R>) -> OneForm<R> {
        lie_derivative_form(&self.fields[l], xi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// a • ξ
    Left,
    /// ξ • a
    Right,
}

/// Deformed bimodule product of a function with a 1-form, one coefficient per
/// power of ℏ.  Letters act on functions by the fields and on forms by Lie
/// derivative.
pub fn module_product<R: ChartRing>(
    finv: &TSeries,
    fields: &[VectorField<R>],
    a: &R,
    xi: &OneForm<R>,
    side: Side,
) -> Result<Vec<OneForm<R>>, TwistError> {
    for t in finv.coeffs() {
        for (k, _) in t.terms() {
            if let Some(&l) = k.iter().flatten().find(|&&l| l >= fields.len()) {
                return Err(TwistError::UnknownLetter { letter: l, known: fields.len() });
            }
        }
    }
    let dim = xi.comps.len();
    let act_f = |l: usize, f: &R| fields[l].apply(f);
    let act_x = |l: usize, x: &OneForm<R>| lie_derivative_form(&fields[l], x);
    let mut wf = WordAction::new(&act_f, a.clone());
    let mut wx = WordAction::new(&act_x, xi.clone());
    let empty = Vec::new();
    let mut out = Vec::with_capacity(finv.order() + 1);
    for t in finv.coeffs() {
        let mut acc = OneForm::zero(dim);
        for (k, c) in t.terms() {
            let w1 = k.first().unwrap_or(&empty);
            let w2 = k.get(1).unwrap_or(&empty);
            let (f, x) = match side {
                Side::Left => (wf.get(w1), wx.get(w2)),
                Side::Right => (wf.get(w2), wx.get(w1)),
            };
            if f.is_zero() || x.is_zero() {
                continue;
            }
            acc = acc.plus(&x.times_fn(&f).scale(c));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Standard symplectic structure on ℝ²ⁿ, coordinates (q₁..qₙ, p₁..pₙ):
/// ω^{i,n+i} = 1.
pub fn standard_omega(n2: usize) -> Matrix<Q> {
    let n = n2 / 2;
    let mut w = vec![vec![qi(0); n2]; n2];
    for i in 0..n {
        w[i][n + i] = qi(1);
        w[n + i][i] = qi(-1);
    }
    w
}

/// One generator f·U⊗V − U⊗f·V with f = ω_{pq}Wᵠxᵖ.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    pub u: Vec<Q>,
    pub v: Vec<Q>,
    pub w: Vec<Q>,
}

fn mat_vec(m: &Matrix<Q>, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn constant_field(v: &[Q]) -> VectorField<Poly> {
    VectorField::new(v.iter().map(|c| Poly::constant(c.clone())).collect())
}

impl Triple {
    /// The two pairs (fU, V) and (U, −fV).
    pub fn pairs(&self, omega_lower: &Matrix<Q>) -> Vec<Pair<Poly>> {
        let wl = mat_vec(omega_lower, &self.w);
        let mut f = Poly::zero();
        for (p, c) in wl.iter().enumerate() {
            f.add_scaled(&Poly::var(p), c);
        }
        let (u, v) = (constant_field(&self.u), constant_field(&self.v));
        vec![(u.times_fn(&f), v.clone()), (u, v.times_fn(&f).scale(&qi(-1)))]
    }
}

/// The cochain leading term realising ω plus the target constant Γ_{abc}
/// (index lowered with ω_{ad}).  Returns the generator triples and the full
/// pair list (constant pairs first).
pub fn r2n_inverse_builder(target: &[Vec<Vec<Q>>]) -> Result<(Vec<Triple>, Vec<Pair<Poly>>), GeomError> {
    let n2 = target.len();
    if n2 % 2 != 0 || target.iter().any(|m| m.len() != n2 || m.iter().any(|r| r.len() != n2)) {
        return Err(GeomError::Dimension(format!("target must be a cube of even side, got {}", n2)));
    }
    for a in 0..n2 {
        for b in 0..n2 {
            for c in 0..n2 {
                let x = &target[a][b][c];
                if x != &target[b][a][c] || x != &target[a][c][b] {
                    return Err(GeomError::NotSymmetric(a, b, c));
                }
            }
        }
    }
    let upper = standard_omega(n2);
    let lower = invert(&upper.iter().map(|r| r.iter().map(|c| Poly::constant(c.clone())).collect()).collect())?
        .into_iter()
        .map(|r| r.into_iter().map(|p| p.constant_term()).collect::<Vec<Q>>())
        .collect::<Matrix<Q>>();
    // lowered vector e_a ↦ U with ω_{ik}Uᵏ = δ_{ia}, i.e. U = ω^{..} e_a up to the inverse
    let raise = |a: usize| -> Vec<Q> { (0..n2).map(|k| upper[k][a].clone()).collect() };
    let mut triples = Vec::new();
    for a in 0..n2 {
        for b in a..n2 {
            for c in b..n2 {
                let g = &target[a][b][c];
                if g.is_zero() {
                    continue;
                }
                // Σ over the three cyclic triples gives every permutation once;
                // repeated indices are overcounted by the multiplicity factorials.
                let mult: i64 = if a == b && b == c {
                    6
                } else if a == b || b == c {
                    2
                } else {
                    1
                };
                let coef = g / qi(mult);
                let (u, v, w) = (raise(a), raise(b), raise(c));
                for (x, y, z) in [(&u, &v, &w), (&v, &w, &u), (&w, &u, &v)] {
                    triples.push(Triple { u: x.clone(), v: y.clone(), w: z.iter().map(|t| t * &coef).collect() });
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n2 / 2 {
        pairs.push((VectorField::coord(n2, i), VectorField::coord(n2, n2 / 2 + i)));
    }
    for t in &triples {
        pairs.extend(t.pairs(&lower));
    }
    Ok((triples, pairs))
}

/// Γ_{abc} = ω_{ad}Γᵈ_{bc}, rejecting non-constant entries.
pub fn lowered_constant_christoffel(c: &ConnectionData<Poly>) -> Result<Vec<Vec<Vec<Q>>>, GeomError> {
    let n = c.dim();
    let mut out = vec![vec![vec![qi(0); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let mut v = Poly::zero();
                for d in 0..n {
                    v.add_assign(&(&c.omega_inv[a][d] * &c.gamma[d][b][cc]));
                }
                if v.degree().unwrap_or(0) > 0 {
                    return Err(GeomError::NotConstant);
                }
                out[a][b][cc] = v.constant_term();
            }
        }
    }
    Ok(out)
}

/// R^a_{bcd} = ω^{me}ω^{ag}(Γ_{edb}Γ_{gcm} − Γ_{ecb}Γ_{gdm}) for constant Γ_{abc}.
pub fn r2n_curvature_closed_form(omega: &Matrix<Q>, g: &[Vec<Vec<Q>>]) -> Vec<Vec<Vec<Vec<Q>>>> {
    let n = g.len();
    let mut r = vec![vec![vec![vec![qi(0); n]; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut v = qi(0);
                    for m in 0..n {
                        for e in 0..n {
                            if omega[m][e].is_zero() {
                                continue;
                            }
                            for gg in 0..n {
                                if omega[a][gg].is_zero() {
                                    continue;
                                }
                                let t = &g[e][d][b] * &g[gg][c][m] - &g[e][c][b] * &g[gg][d][m];
                                v += &omega[m][e] * &omega[a][gg] * t;
                            }
                        }
                    }
                    r[a][b][c][d] = v;
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn brackets_and_derivatives() {
        let dx: VectorField<Poly> = VectorField::coord(2, 0);
        let dy: VectorField<Poly> = VectorField::coord(2, 1);
        assert!(vf_bracket(&dx, &dy).is_zero());
        let xdx = dx.times_fn(&p(0));
        assert_eq!(vf_bracket(&xdx, &dx), dx.scale(&qi(-1)));
        assert_eq!(lie_derivative_fn(&dx, &(&p(0) * &p(0))), p(0).scale(&qi(2)));
        let xdy = dy.times_fn(&p(0));
        let dyform = OneForm::new(vec![Poly::zero(), Poly::int(1)]);
        assert_eq!(lie_derivative_form(&xdy, &dyform), OneForm::new(vec![Poly::int(1), Poly::zero()]));
    }

    #[test]
    fn bivectors() {
        let dx: VectorField<Poly> = VectorField::coord(2, 0);
        let dy: VectorField<Poly> = VectorField::coord(2, 1);
        let w = bivector_from_cochain(&[(dx.clone(), dy)], 2);
        assert_eq!(w[0][1], Poly::int(1));
        assert_eq!(w[1][0], Poly::int(-1));
        let w = bivector_from_cochain(&[(dx.clone(), dx)], 2);
        assert!(w.iter().flatten().all(|c| c.is_zero()));
    }

    #[test]
    fn constant_fields_give_flat_connection() {
        let pairs: Vec<Pair<Poly>> = vec![(VectorField::coord(2, 0), VectorField::coord(2, 1))];
        let c = christoffel_from_cochain(&pairs, 2).unwrap();
        assert!(c.gamma.iter().flatten().flatten().all(|g| g.is_zero()));
        assert!(c.curvature().iter().flatten().flatten().flatten().all(|g| g.is_zero()));
        assert!(c.compatibility_failures().is_empty());
    }

    #[test]
    fn degenerate_bivector_is_an_error() {
        let pairs: Vec<Pair<Poly>> = vec![(VectorField::coord(2, 0), VectorField::coord(2, 0))];
        assert!(matches!(christoffel_from_cochain(&pairs, 2), Err(GeomError::Degenerate(_))));
    }

    #[test]
    fn builder_rejects_bad_targets() {
        let mut t = vec![vec![vec![qi(0); 2]; 2]; 2];
        t[0][0][1] = qi(1);
        assert!(matches!(r2n_inverse_builder(&t), Err(GeomError::NotSymmetric(..))));
        let zero = vec![vec![vec![qi(0); 2]; 2]; 2];
        assert!(r2n_inverse_builder(&zero).unwrap().0.is_empty());
    }
}
