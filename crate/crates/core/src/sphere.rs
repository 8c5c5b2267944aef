//! The hemisphere z > 0 of S² with the so(1,3) fields X[v] = v − r⟨v,r⟩,
//! Y[v] = v × r, quantised by G⁽¹⁾ = ½Xᵢ⊗Yᵢ, G⁽²⁾ = (G⁽¹⁾)²/2.

use std::collections::BTreeMap;

use crate::exact::{q, qi, HSeries, Mono, Poly, Ring, SphereElem, Q};
use crate::geom::*;
use crate::lie::{catalogue, LieAlgebra};
use crate::twist::{apply_cochain, Cochain, Tensor, TSeries};

type S = SphereElem;

/// Letters: Xᵢ = i−1, Yᵢ = 3+i−1, matching the so13_abstract basis.
pub fn sphere_fields() -> Vec<VectorField<S>> {
    let (x, y, z) = (S::x(), S::y(), S::z());
    let one = S::int(1);
    let vf = |a: S, b: S| VectorField::new(vec![a, b]);
    vec![
        vf(&one - &(&x * &x), -&(&x * &y)),
        vf(-&(&x * &y), &one - &(&y * &y)),
        vf(-&(&x * &z), -&(&y * &z)),
        vf(S::zero(), -&z),
        vf(z.clone(), S::zero()),
        vf(-&y, x.clone()),
    ]
}

pub fn so13() -> LieAlgebra {
    catalogue("so13_abstract").expect("catalogue entry")
}

/// Pairs (i,j) whose chart bracket differs from the abstract table.
pub fn bracket_table_failures() -> Vec<(usize, usize)> {
    let f = sphere_fields();
    let l = so13();
    let mut bad = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            let got = vf_bracket(&f[i], &f[j]);
            let mut want = VectorField::new(vec![S::zero(), S::zero()]);
            for (k, c) in l.bracket_basis(i, j) {
                want = want.plus(&f[*k].scale(c));
            }
            if got != want {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// ½(Xᵢ, Yᵢ).
pub fn sphere_pairs() -> Vec<Pair<S>> {
    let f = sphere_fields();
    (0..3).map(|i| (f[i].scale(&q(1, 2)), f[3 + i].clone())).collect()
}

pub fn sphere_cochain() -> Cochain {
    let mut g1 = Tensor::zero();
    for i in 0..3 {
        g1.add_term(vec![vec![i], vec![3 + i]], &q(1, 2));
    }
    let g2 = g1.mul(&g1).scale(&q(1, 2));
    Cochain::new(so13(), HSeries::from_coeffs(2, vec![Tensor::unit(), g1, g2]))
}

fn zz() -> S {
    S::zpow(-2)
}

fn p2s(p: Poly) -> S {
    S::from_poly(p)
}

/// The table Γⁱ_{jp} as printed for this chart.
pub fn expected_christoffel() -> Christoffel<S> {
    let (x, y) = (Poly::var(0), Poly::var(1));
    let one = Poly::int(1);
    let e = |p: Poly| &p2s(p) * &zz();
    let g111 = e(&x * &(&one - &(&y * &y)));
    let g112 = e(&(&x * &x) * &y);
    let g122 = e(&x * &(&one - &(&x * &x)));
    let g211 = e(&y * &(&one - &(&y * &y)));
    let g212 = e(&(&y * &y) * &x);
    let g222 = e(&y * &(&one - &(&x * &x)));
    vec![
        vec![vec![g111, g112.clone()], vec![g112, g122]],
        vec![vec![g211, g212.clone()], vec![g212, g222]],
    ]
}

/// g = (1/z²)[[1−y², xy],[xy, 1−x²]].
pub fn metric() -> Matrix<S> {
    let (x, y) = (Poly::var(0), Poly::var(1));
    let one = Poly::int(1);
    let e = |p: Poly| &p2s(p) * &zz();
    vec![vec![e(&one - &(&y * &y)), e(&x * &y)], vec![e(&x * &y), e(&one - &(&x * &x))]]
}

/// ∇_k g = ∂_k g − N_k g − g N_kᵀ with (N_k)_{ab} = Γᵇ_{ka}.
pub fn metric_derivative(gamma: &Christoffel<S>, g: &Matrix<S>) -> Vec<Matrix<S>> {
    (0..2)
        .map(|k| {
            let nk: Matrix<S> = (0..2).map(|a| (0..2).map(|b| gamma[b][k][a].clone()).collect()).collect();
            (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| {
                            let mut v = g[i][j].d(k);
                            for m in 0..2 {
                                v = v.minus(&nk[i][m].times(&g[m][j])).minus(&g[i][m].times(&nk[j][m]));
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SphereGeometry {
    pub connection: ConnectionData<S>,
    pub christoffel_diffs: Vec<(usize, usize, usize, String, String)>,
    pub metric_defect: Vec<S>,
    pub torsion_free: bool,
    pub compat_failures: Vec<(usize, usize, usize)>,
    pub closedness: Vec<S>,
    pub curvature_at_origin: Vec<Vec<Vec<Vec<Q>>>>,
    pub curvature_diffs: Vec<(usize, usize, usize, usize)>,
}

impl SphereGeometry {
    pub fn all_ok(&self) -> bool {
        self.christoffel_diffs.is_empty()
            && self.metric_defect.iter().all(|m| m.is_zero())
            && self.torsion_free
            && self.compat_failures.is_empty()
            && self.closedness.iter().all(|c| c.is_zero())
            && self.curvature_diffs.is_empty()
    }
}

pub fn sphere_geometry() -> SphereGeometry {
    let connection = christoffel_from_cochain(&sphere_pairs(), 2).expect("ω¹² = −z is invertible");
    let want = expected_christoffel();
    let mut christoffel_diffs = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for p in 0..2 {
                if connection.gamma[i][j][p] != want[i][j][p] {
                    christoffel_diffs.push((i, j, p, connection.gamma[i][j][p].render(), want[i][j][p].render()));
                }
            }
        }
    }
    let metric_defect = metric_derivative(&connection.gamma, &metric()).into_iter().flatten().flatten().collect();
    let r = connection.curvature();
    let delta = |a: usize, b: usize| if a == b { qi(1) } else { qi(0) };
    let mut curvature_at_origin = vec![vec![vec![vec![qi(0); 2]; 2]; 2]; 2];
    let mut curvature_diffs = Vec::new();
    for l in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let v = r[l][i][j][k].at_origin();
                    if v != delta(l, j) * delta(k, i) - delta(l, k) * delta(j, i) {
                        curvature_diffs.push((l, i, j, k));
                    }
                    curvature_at_origin[l][i][j][k] = v;
                }
            }
        }
    }
    SphereGeometry {
        torsion_free: connection.torsion_free(),
        compat_failures: connection.compatibility_failures(),
        closedness: closedness_defect(&connection.omega, &connection.omega_inv),
        connection,
        christoffel_diffs,
        metric_defect,
        curvature_at_origin,
        curvature_diffs,
    }
}

/// ψ as signed letter triples, three cyclic blocks of the form
/// (Y_[c]⊗Y_[b] − Y_[b]⊗Y_[c] − X_[b]⊗X_[c] + X_[c]⊗X_[b])⊗Y_[a].
pub fn psi_terms(blocks: &[usize]) -> Vec<(Q, [usize; 3])> {
    let xx = |i: usize| i - 1;
    let yy = |i: usize| 2 + i;
    let mut out = Vec::new();
    for &a in blocks {
        let (b, c) = match a {
            1 => (2, 3),
            2 => (3, 1),
            _ => (1, 2),
        };
        out.push((qi(1), [yy(c), yy(b), yy(a)]));
        out.push((qi(-1), [yy(b), yy(c), yy(a)]));
        out.push((qi(-1), [xx(b), xx(c), yy(a)]));
        out.push((qi(1), [xx(c), xx(b), yy(a)]));
    }
    out
}

pub fn psi_tensor(blocks: &[usize]) -> Tensor {
    let mut t = Tensor::zero();
    for (c, [a, b, d]) in psi_terms(blocks) {
        t.add_term(vec![vec![a], vec![b], vec![d]], &c);
    }
    t
}

/// π: components Σ AⁱBʲCᵏ over the sphere ring, indexed [i][j][k].
pub fn psi_reduction(blocks: &[usize]) -> Vec<Vec<Vec<S>>> {
    let f = sphere_fields();
    let mut out = vec![vec![vec![S::zero(); 2]; 2]; 2];
    for (c, [a, b, d]) in psi_terms(blocks) {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let t = f[a].comps[i].times(&f[b].comps[j]).times(&f[d].comps[k]).scale(&c);
                    out[i][j][k] = out[i][j][k].plus(&t);
                }
            }
        }
    }
    out
}

pub fn realization() -> FieldRealization<S> {
    FieldRealization { fields: sphere_fields() }
}

/// f•g through ℏ^order (≤ 2).
pub fn sphere_star(f: &S, g: &S, order: usize) -> HSeries<S> {
    let c = sphere_cochain().truncate(order.min(2));
    apply_cochain(&c.finv, &realization(), f, g).expect("letters are the six fields")
}

/// Bilinear extension to series: Σ ℏ^{i+j} aᵢ•bⱼ, truncated.
pub fn sphere_star_series(a: &HSeries<S>, b: &HSeries<S>) -> HSeries<S> {
    let order = a.order().min(b.order());
    let c = sphere_cochain().truncate(order);
    let rz = realization();
    let mut out = vec![S::zero(); order + 1];
    for i in 0..=order {
        for j in 0..=order - i {
            if a.coeff(i).is_zero() || b.coeff(j).is_zero() {
                continue;
            }
            let p = apply_cochain(&c.finv, &rz, a.coeff(i), b.coeff(j)).unwrap();
            for k in 0..=order - i - j {
                out[i + j + k] = out[i + j + k].plus(p.coeff(k));
            }
        }
    }
    HSeries::from_coeffs(order, out)
}

/// Polynomial with possibly negative exponents, for the intermediate stage
/// of the closed-form monomial product.
#[derive(Default, Debug, Clone)]
struct Laurent(BTreeMap<(i64, i64), Q>);

impl Laurent {
    fn add(&mut self, ex: i64, ey: i64, c: Q) {
        let e = self.0.entry((ex, ey)).or_insert_with(|| qi(0));
        *e += c;
    }

    fn into_poly(self) -> Result<Poly, String> {
        let mut p = Poly::zero();
        for ((ex, ey), c) in self.0 {
            if c.is_zero() {
                continue;
            }
            if ex < 0 || ey < 0 {
                return Err(format!("x^{} y^{} survives with coefficient {}", ex, ey, c));
            }
            p.add_term(Mono::new(vec![ex as u32, ey as u32]), &c);
        }
        Ok(p)
    }
}

/// (xᵃyᵇ)•(xᶜyᵈ) from the closed form, through ℏ².
pub fn monomial_formula(a: u32, b: u32, c: u32, d: u32) -> Result<HSeries<S>, String> {
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    let qq = |n: i64| qi(n);
    let (ex, ey) = (a + c, b + d);
    let mut h0 = Laurent::default();
    h0.add(ex, ey, qi(1));
    let mut h1 = Laurent::default();
    h1.add(ex - 1, ey - 1, qq(b * c - a * d) / qi(2));
    let k0 = b * c * (b - 1) * (c - 1) + a * d * (a - 1) * (d - 1) - 2 * a * b * c * d;
    let ky = a * c - a * a * c + b * b * c - a * c * c - b * b * c * c + 2 * a * b * c * d + a * d * d - a * a * d * d;
    let kx = b * c * c - b * b * c * c + a * a * d + b * d - b * b * d + 2 * a * b * c * d - a * a * d * d - b * d * d;
    let kxy = (a + b) * (c + d) * (1 + a + b + c + d);
    let mut h2 = Laurent::default();
    h2.add(ex - 2, ey - 2, qq(k0) / qi(8));
    h2.add(ex - 2, ey, qq(ky) / qi(8));
    h2.add(ex, ey - 2, qq(kx) / qi(8));
    h2.add(ex, ey, qq(kxy) / qi(8));
    Ok(HSeries::from_coeffs(
        2,
        vec![p2s(h0.into_poly()?), &p2s(h1.into_poly()?) * &S::z(), p2s(h2.into_poly()?)],
    ))
}

pub fn monomial(a: u32, b: u32) -> S {
    p2s(Poly::monomial(&[a, b], qi(1)))
}

/// 8 × the ℏ² part at the origin and the right-hand side
/// f_xx g_yy + f_yy g_xx − 2f_xy g_xy − f_x g_x − f_y g_y.
pub fn second_order_at_origin(f: &S, g: &S) -> (Q, Q) {
    let lhs = sphere_star(f, g, 2).coeff(2).at_origin() * qi(8);
    let d = |h: &S, i: usize| h.d(i);
    let dd = |h: &S, i: usize, j: usize| h.d(i).d(j);
    let rhs = dd(f, 0, 0).times(&dd(g, 1, 1)).plus(&dd(f, 1, 1).times(&dd(g, 0, 0)))
        .minus(&dd(f, 0, 1).times(&dd(g, 0, 1)).scale(&qi(2)))
        .minus(&d(f, 0).times(&d(g, 0)))
        .minus(&d(f, 1).times(&d(g, 1)));
    (lhs, rhs.at_origin())
}

/// ω^{ij}ω^{kl}(∇_i f_{,k})(∇_j g_{,l}) and gⁱʲ f_{,i} g_{,j}, both at the origin.
pub fn fedosov_terms_at_origin(f: &S, g: &S) -> (Q, Q) {
    let geo = christoffel_from_cochain(&sphere_pairs(), 2).unwrap();
    let hess = |h: &S| -> Matrix<S> {
        (0..2)
            .map(|i| {
                (0..2)
                    .map(|k| {
                        let mut v = h.d(k).d(i);
                        for m in 0..2 {
                            v = v.minus(&geo.gamma[m][i][k].times(&h.d(m)));
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    };
    let (hf, hg) = (hess(f), hess(g));
    let w = &geo.omega;
    let mut fed = S::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    fed = fed.plus(&w[i][j].times(&w[k][l]).times(&hf[i][k]).times(&hg[j][l]));
                }
            }
        }
    }
    let ginv = invert(&metric()).unwrap();
    let mut gt = S::zero();
    for i in 0..2 {
        for j in 0..2 {
            gt = gt.plus(&ginv[i][j].times(&f.d(i)).times(&g.d(j)));
        }
    }
    (fed.at_origin(), gt.at_origin())
}

/// The coassociator's ℏ² part is ψ/8 in U(so(1,3))^{⊗3}.
pub fn psi_is_coassociator() -> bool {
    let c = sphere_cochain();
    let phi: TSeries = crate::twist::coassociator(&c, 2);
    let u = crate::twist::PlainU::new(&c.algebra, 8);
    u.reduce(phi.coeff(2)) == u.reduce(&psi_tensor(&[1, 2, 3]).scale(&q(1, 8)))
}
