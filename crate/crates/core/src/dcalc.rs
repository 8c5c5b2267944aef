//! Deformed differential calculus: the function/1-form bimodule products
//! induced by a cochain, on S(g) and on the sphere chart.

use crate::exact::{q, qi, Poly, Ring, SphereElem, Q};
use crate::geom::{module_product, ChartRing, FieldRealization, OneForm, Side, VectorField};
use crate::lie::LieAlgebra;
use crate::precon::sym_fields;
use crate::sphere::{sphere_cochain, sphere_fields, sphere_geometry};
use crate::twist::{apply_cochain, cbh_cochain, CbhParams, Cochain, TSeries, Tensor, TwistError};

/// One 1-form per power of ℏ.
pub type FormSeries<R> = Vec<OneForm<R>>;

/// A cochain acting on a chart by vector fields.
pub struct Calculus<R> {
    pub cochain: Cochain,
    pub fields: Vec<VectorField<R>>,
}

fn add_series<R: ChartRing>(a: &FormSeries<R>, b: &FormSeries<R>, s: &Q) -> FormSeries<R> {
    a.iter().zip(b).map(|(x, y)| x.plus(&y.scale(s))).collect()
}

impl<R: ChartRing> Calculus<R> {
    pub fn new(cochain: Cochain, fields: Vec<VectorField<R>>) -> Self {
        Calculus { cochain, fields }
    }

    pub fn dim(&self) -> usize {
        self.fields.first().map_or(0, |f| f.dim())
    }

    pub fn order(&self) -> usize {
        self.cochain.order()
    }

    pub fn d(&self, f: &R) -> OneForm<R> {
        OneForm::exact(f, self.dim())
    }

    pub fn product(&self, a: &R, b: &R) -> Result<Vec<R>, TwistError> {
        let rz = FieldRealization { fields: self.fields.clone() };
        Ok(apply_cochain(&self.cochain.finv, &rz, a, b)?.coeffs().to_vec())
    }

    /// a • ξ (Left) or ξ • a (Right).
    pub fn form_product(&self, a: &R, xi: &OneForm<R>, side: Side) -> Result<FormSeries<R>, TwistError> {
        module_product(&self.cochain.finv, &self.fields, a, xi, side)
    }

    /// a • ξ − ξ • a
    pub fn commutator(&self, a: &R, xi: &OneForm<R>) -> Result<FormSeries<R>, TwistError> {
        Ok(add_series(&self.form_product(a, xi, Side::Left)?, &self.form_product(a, xi, Side::Right)?, &qi(-1)))
    }

    /// d(a•b) − da•b − a•db
    pub fn leibniz_defect(&self, a: &R, b: &R) -> Result<FormSeries<R>, TwistError> {
        let ab: FormSeries<R> = self.product(a, b)?.iter().map(|c| self.d(c)).collect();
        let l = self.form_product(b, &self.d(a), Side::Right)?;
        let r = self.form_product(a, &self.d(b), Side::Left)?;
        Ok(add_series(&add_series(&ab, &l, &qi(-1)), &r, &qi(-1)))
    }

    /// (a•ξ)•b − a•(ξ•b), truncated at the cochain order.  Not asserted to
    /// vanish: this is the nonassociativity of the calculus.
    pub fn associator(&self, a: &R, xi: &OneForm<R>, b: &R) -> Result<FormSeries<R>, TwistError> {
        let n = self.order();
        let mut out = vec![OneForm::zero(self.dim()); n + 1];
        let axi = self.form_product(a, xi, Side::Left)?;
        let xib = self.form_product(b, xi, Side::Right)?;
        for (m, c) in axi.iter().enumerate() {
            for (k, t) in self.form_product(b, c, Side::Right)?.into_iter().enumerate().take(n + 1 - m) {
                out[m + k] = out[m + k].plus(&t);
            }
        }
        for (m, c) in xib.iter().enumerate() {
            for (k, t) in self.form_product(a, c, Side::Left)?.into_iter().enumerate().take(n + 1 - m) {
                out[m + k] = out[m + k].plus(&t.scale(&qi(-1)));
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------- S(g)

pub fn sym_calculus(g: &LieAlgebra, p: &CbhParams, order: usize) -> Result<Calculus<Poly>, TwistError> {
    Ok(Calculus::new(cbh_cochain(g, p, order)?, sym_fields(g)))
}

/// v dw + ℏβ d[v,w] and (dw)v + ℏα d[v,w], through the given order.
pub fn sym_expected(g: &LieAlgebra, p: &CbhParams, v: &Poly, w: &Poly, order: usize, side: Side) -> FormSeries<Poly> {
    let n = g.dim();
    let mut out = vec![OneForm::zero(n); order + 1];
    out[0] = OneForm::exact(w, n).times_fn(v);
    if order >= 1 {
        let c = match side {
            Side::Left => p.beta(),
            Side::Right => p.alpha.clone(),
        };
        out[1] = OneForm::exact(&g.bracket_lin(v, w), n).scale(&c);
    }
    out
}

/// The ℏ² contribution of each term of G⁽²⁾ separately to v•dw (or dw•v).
pub fn g2_term_contributions(calc: &Calculus<Poly>, v: &Poly, w: &Poly, side: Side) -> Result<Vec<(Tensor, OneForm<Poly>)>, TwistError> {
    let xi = calc.d(w);
    let mut out = Vec::new();
    for (k, c) in calc.cochain.g(2).terms() {
        let t = Tensor::pure(k.clone(), c.clone());
        let finv = TSeries::from_coeffs(2, vec![Tensor::zero(), Tensor::zero(), t.clone()]);
        let r = module_product(&finv, &calc.fields, v, &xi, side)?;
        out.push((t, r[2].clone()));
    }
    Ok(out)
}

// ---------------------------------------------------------------- spacetime

#[derive(Clone, Debug)]
pub struct SpacetimeRelations {
    /// t•dx − dx•t
    pub t_dx: FormSeries<Poly>,
    /// dt•x − x•dt
    pub dt_x: FormSeries<Poly>,
    /// x•dx − dx•x
    pub x_dx: FormSeries<Poly>,
}

/// The b₊ model [t,x] = x (coordinates t = 0, x = 1) with α = −1/4.
pub fn spacetime_relations(order: usize) -> Result<SpacetimeRelations, TwistError> {
    let g = crate::lie::catalogue("bplus").expect("catalogue");
    let calc = sym_calculus(&g, &CbhParams::improved(q(-1, 4)), order)?;
    let (t, x) = (Poly::var(0), Poly::var(1));
    let neg = |s: FormSeries<Poly>| s.into_iter().map(|f| f.scale(&qi(-1))).collect();
    Ok(SpacetimeRelations {
        t_dx: calc.commutator(&t, &calc.d(&x))?,
        dt_x: neg(calc.commutator(&x, &calc.d(&t))?),
        x_dx: calc.commutator(&x, &calc.d(&x))?,
    })
}

// ---------------------------------------------------------------- sphere

type S = SphereElem;

pub fn sphere_calculus(order: usize) -> Calculus<S> {
    Calculus::new(sphere_cochain().truncate(order), sphere_fields())
}

/// f • dg for f, g ∈ {x, y} as displayed, through ℏ².
pub fn sphere_form_expected(f: usize, g: usize) -> FormSeries<S> {
    let (x, y) = (S::x(), S::y());
    let one = S::int(1);
    let form = |a: S, b: S| OneForm::new(vec![a, b]);
    let h1 = S::zinv().scale(&q(1, 2));
    let first = match (f, g) {
        (0, 0) => form(&(&x * &x) * &y, &x * &(&one - &(&x * &x))),
        (0, 1) => form(&x * &(&y * &y), &y * &(&one - &(&x * &x))),
        (1, 0) => form(-&(&x * &(&one - &(&y * &y))), -&(&(&x * &x) * &y)),
        (1, 1) => form(-&(&y * &(&one - &(&y * &y))), -&(&x * &(&y * &y))),
        _ => panic!("f, g index x = 0 or y = 1"),
    };
    let coord = [x, y];
    let zero = OneForm::exact(&coord[g], 2).times_fn(&coord[f]);
    vec![zero.clone(), first.times_fn(&h1), zero.scale(&q(1, 8))]
}

/// ∇_f̂ dg from the sphere Christoffel symbols, f̂ = {f, ·}:
/// f̂ʲ = ω^{ij}f_{,i}, (∇_X dg)_k = Xʲ(g_{,jk} − Γⁱ_{jk}g_{,i}).
pub fn sphere_levi_civita(f: &S, g: &S) -> OneForm<S> {
    let geo = sphere_geometry();
    let w = &geo.connection.omega;
    let gamma = &geo.connection.gamma;
    let xhat: Vec<S> = (0..2)
        .map(|j| (0..2).fold(S::zero(), |acc, i| acc.plus(&w[i][j].times(&f.partial(i)))))
        .collect();
    OneForm::new(
        (0..2)
            .map(|k| {
                let mut c = S::zero();
                for (j, xj) in xhat.iter().enumerate() {
                    let mut inner = g.partial(j).partial(k);
                    for i in 0..2 {
                        inner = inner.minus(&gamma[i][j][k].times(&g.partial(i)));
                    }
                    c = c.plus(&xj.times(&inner));
                }
                c
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalogue;

    #[test]
    fn trivial_cochain_is_undeformed() {
        let g = catalogue("sl2").unwrap();
        let calc = Calculus::new(Cochain::trivial(g.semidirect(crate::lie::Extension::Dual), 2), sym_fields(&g));
        let (v, w) = (Poly::var(0), &Poly::var(1) * &Poly::var(2));
        let r = calc.form_product(&v, &calc.d(&w), Side::Left).unwrap();
        assert_eq!(r[0], calc.d(&w).times_fn(&v));
        assert!(r[1].is_zero() && r[2].is_zero());
    }

    #[test]
    fn sphere_unit() {
        let calc = sphere_calculus(2);
        let r = calc.form_product(&S::int(1), &calc.d(&S::x()), Side::Left).unwrap();
        assert_eq!(r[0], calc.d(&S::x()));
        assert!(r[1].is_zero() && r[2].is_zero());
    }
}
