//! sphere, sphere-forms and r2n suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{none_of, show, Options};
use crate::dcalc::{sphere_calculus, sphere_form_expected, sphere_levi_civita};
use crate::exact::{q, qi, HSeries, Mono, Poly, Ring, SphereElem, Q};
use crate::geom::*;
use crate::report::{Check, Tally};
use crate::sphere::*;
use crate::twist::PlainU;

type S = SphereElem;

pub fn sphere(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    let geo = sphere_geometry();
    let c = &geo.connection;
    out.push(Check::new("omega", c.omega[0][1] == -&S::z(), "ω¹² = -z", format!("ω¹² = {}", c.omega[0][1])));
    out.push(Check::timed("christoffel-table", || {
        let diffs: Vec<String> = geo.christoffel_diffs.iter().map(|(i, j, p, got, want)| format!("Γ{}_{}{}: {} vs {}", i, j, p, got, want)).collect();
        none_of("", "differing symbols", diffs)
    }));
    out.push(Check::timed("metric-parallel", || {
        let bad: Vec<String> = geo.metric_defect.iter().filter(|m| !m.is_zero()).map(|m| m.render()).collect();
        none_of("", "nonzero ∇g components", bad)
    }));
    out.push(Check::new("torsion-free", geo.torsion_free, "Γⁱ_jk = Γⁱ_kj", if geo.torsion_free { "Γⁱ_jk = Γⁱ_kj" } else { "torsion" }));
    out.push(none_of(
        "poisson-compatible",
        "failures of ∇ω = 0",
        geo.compat_failures.iter().map(|t| format!("{:?}", t)).collect(),
    ));
    out.push(Check::timed("symplectic", || {
        let mut bad: Vec<String> = geo.closedness.iter().filter(|d| !d.is_zero()).map(|d| format!("dω: {}", d)).collect();
        bad.extend(jacobi_defect(&c.omega).iter().filter(|d| !d.is_zero()).map(|d| format!("Jacobi: {}", d)));
        none_of("", "defects", bad)
    }));
    out.push(Check::timed("curvature", || {
        let r = &geo.curvature_at_origin;
        let bad: Vec<String> = geo.curvature_diffs.iter().map(|(l, i, j, k)| format!("R{}_{}{}{} = {}", l, i, j, k, r[*l][*i][*j][*k])).collect();
        none_of("", "components off δˡⱼδₖᵢ − δˡₖδⱼᵢ at the origin", bad)
    }));
    out.push(Check::timed("so13-fields", || none_of("", "bracket mismatches", bracket_table_failures().iter().map(show).collect())));
    out.push(Check::timed("psi-reduction", psi_check));
    let dmax = o.max_degree.saturating_sub(1);
    out.push(Check::timed("monomial-products", || {
        let mut t = Tally::default();
        for a in 0..=dmax {
            for b in 0..=dmax {
                for c in 0..=dmax {
                    for d in 0..=dmax {
                        let got = sphere_star(&monomial(a, b), &monomial(c, d), 2);
                        let want = monomial_formula(a, b, c, d).map(|s| show(&s)).unwrap_or_else(|e| e);
                        t.record(|| format!("x^{}y^{} * x^{}y^{}", a, b, c, d), &want, &show(&got));
                    }
                }
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("examples", || {
        let (x, y) = (S::x(), S::y());
        let xy = sphere_star(&x, &y, 2);
        let yx = sphere_star(&y, &x, 2);
        let comm = xy.coeff(1).minus(yx.coeff(1));
        let xx = sphere_star(&x, &x, 2).coeff(2).clone();
        let g = &(&x * &y) + &S::z();
        let unit = sphere_star(&S::int(1), &g, 2) == HSeries::constant(2, g.clone());
        let want_xx = &(&x * &x).scale(&q(3, 8)) - &S::constant(q(1, 8));
        Check::same(
            "",
            format!("[x,y]₁ = {}; (x•x)₂ = {}; 1•g = g", -&S::z(), want_xx),
            format!("[x,y]₁ = {}; (x•x)₂ = {}; 1•g = g{}", comm, xx, if unit { "" } else { " fails" }),
        )
    }));
    out.push(Check::timed("associativity-h2", || {
        let mut t = Tally::default();
        let mut monos = Vec::new();
        for a in 0..=o.max_degree {
            for b in 0..=o.max_degree - a {
                monos.push((a, b));
            }
        }
        for &(a, b) in &monos {
            for &(c, d) in &monos {
                for &(e, f) in &monos {
                    if a + b + c + d + e + f > o.max_degree {
                        continue;
                    }
                    let s = |u, v| HSeries::constant(2, monomial(u, v));
                    let (p, r, w) = (s(a, b), s(c, d), s(e, f));
                    let l = sphere_star_series(&sphere_star_series(&p, &r), &w);
                    let rr = sphere_star_series(&p, &sphere_star_series(&r, &w));
                    t.record(|| format!("x^{}y^{}, x^{}y^{}, x^{}y^{}", a, b, c, d, e, f), &show(&l), &show(&rr));
                }
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("fedosov-difference", || {
        let mut t = Tally::default();
        for a in 0..=dmax {
            for b in 0..=dmax {
                for c in 0..=dmax {
                    for d in 0..=dmax {
                        let (f, g) = (monomial(a, b), monomial(c, d));
                        let (lhs, rhs) = second_order_at_origin(&f, &g);
                        let (fed, metric_term) = fedosov_terms_at_origin(&f, &g);
                        let case = || format!("x^{}y^{}, x^{}y^{}", a, b, c, d);
                        t.record(case, &rhs.to_string(), &lhs.to_string());
                        // 8·(ℏ² part) − Fedosov term = −gⁱʲf_{,i}g_{,j}
                        t.record(case, &(-metric_term).to_string(), &(lhs - fed).to_string());
                    }
                }
            }
        }
        t.into_check("")
    }));
    out
}

fn psi_check() -> Check {
    let full = psi_reduction(&[1, 2, 3]);
    let nonzero: Vec<String> = full
        .iter()
        .enumerate()
        .flat_map(|(i, a)| a.iter().enumerate().flat_map(move |(j, b)| b.iter().enumerate().map(move |(k, c)| (i, j, k, c))))
        .filter(|(_, _, _, c)| !c.is_zero())
        .map(|(i, j, k, c)| format!("π({}{}{}) = {}", i, j, k, c))
        .collect();
    let mut bad = nonzero;
    // each block alone does not reduce to zero; the sum does
    for drop in 1..=3 {
        let blocks: Vec<usize> = (1..=3).filter(|&b| b != drop).collect();
        if psi_reduction(&blocks).iter().flatten().flatten().all(|c| c.is_zero()) {
            bad.push(format!("blocks {:?} already vanish", blocks));
        }
    }
    let c = sphere_cochain();
    if PlainU::new(&c.algebra, 8).reduce(&psi_tensor(&[1, 2, 3])).is_empty() {
        bad.push("ψ vanishes before reduction".into());
    }
    if !psi_is_coassociator() {
        bad.push("ψ/8 is not the ℏ² coassociator".into());
    }
    none_of("", "defects", bad)
}

pub fn sphere_forms(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    let calc = sphere_calculus(2);
    let co = [S::x(), S::y()];
    let nm = ["x", "y"];
    for f in 0..2 {
        for g in 0..2 {
            let calc = &calc;
            out.push(Check::timed(format!("{}*d{}", nm[f], nm[g]), || {
                let got = calc.form_product(&co[f], &calc.d(&co[g]), Side::Left).map(|s| show(&s)).unwrap_or_else(|e| e.to_string());
                Check::same("", show(&sphere_form_expected(f, g)), got)
            }));
            out.push(Check::timed(format!("levi-civita/{}*d{}", nm[f], nm[g]), || {
                let c = calc.commutator(&co[f], &calc.d(&co[g])).unwrap();
                Check::same("", show(&sphere_levi_civita(&co[f], &co[g])), show(&c[1]))
            }));
        }
    }
    out.push(Check::timed("leibniz", || {
        let mut t = Tally::default();
        let d = o.max_degree.saturating_sub(1);
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d {
                    for e in 0..=d - c {
                        let r = calc.leibniz_defect(&monomial(a, b), &monomial(c, e)).unwrap();
                        let ok = r.iter().all(|f| f.is_zero());
                        t.record(|| format!("x^{}y^{}, x^{}y^{}", a, b, c, e), "0", if ok { "0" } else { "nonzero" });
                    }
                }
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("associator", || {
        // (x•dy)•x − x•(dy•x): reported, with the ℏ⁰ and ℏ¹ parts required to vanish
        let a = calc.associator(&co[0], &calc.d(&co[1]), &co[0]).unwrap();
        let ok = a[0].is_zero() && a[1].is_zero() && !a[2].is_zero();
        Check::new("", ok, "0 + 0·ℏ + ℏ²·(nonzero)", format!("{} + {}·ℏ + ℏ²·{}", show(&a[0]), show(&a[1]), show(&a[2])))
    }));
    out
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Vec<Q>>> {
    let mut t = vec![vec![vec![qi(0); n]; n]; n];
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let v = q(rng.gen_range(-4..=4), rng.gen_range(1..=3));
                for (i, j, k) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    t[i][j][k] = v.clone();
                }
            }
        }
    }
    t
}

fn rand_poly(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..4 {
        let e: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..=deg)).collect();
        p.add_term(Mono::new(e), &qi(rng.gen_range(-3..=3)));
    }
    p
}

fn rand_field(rng: &mut ChaCha8Rng, n: usize) -> VectorField<Poly> {
    VectorField::new((0..n).map(|_| rand_poly(rng, n, 2)).collect())
}

/// Builder round trip on random constant targets: ω stays standard, Γ is
/// recovered, the connection is torsion-free and compatible, and the
/// curvature equals the constant closed form.
fn round_trip(n: usize, target: &[Vec<Vec<Q>>]) -> Result<(), String> {
    let (_, pairs) = r2n_inverse_builder(target).map_err(|e| e.to_string())?;
    let c = christoffel_from_cochain(&pairs, n).map_err(|e| e.to_string())?;
    let w = standard_omega(n);
    if (0..n).any(|i| (0..n).any(|j| c.omega[i][j] != Poly::constant(w[i][j].clone()))) {
        return Err("ω changed".into());
    }
    if lowered_constant_christoffel(&c).map_err(|e| e.to_string())? != target {
        return Err("Γ not recovered".into());
    }
    if !c.torsion_free() || !c.compatibility_failures().is_empty() {
        return Err("torsion or incompatibility".into());
    }
    if closedness_defect(&c.omega, &c.omega_inv).iter().any(|d| !d.is_zero()) {
        return Err("ω not closed".into());
    }
    let r = c.curvature();
    let closed = r2n_curvature_closed_form(&w, target);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    if r[a][b][cc][d] != Poly::constant(closed[a][b][cc][d].clone()) {
                        return Err(format!("R{}_{}{}{}: {:?} vs {}", a, b, cc, d, r[a][b][cc][d], closed[a][b][cc][d]));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn r2n(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, count) in [(2usize, 20), (4, 5)] {
        out.push(Check::timed(format!("inverse-builder/R{}", n), || {
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ (n as u64) << 8);
            let mut t = Tally::default();
            for case in 0..count {
                let target = random_symmetric(&mut rng, n);
                let r = round_trip(n, &target).err().unwrap_or_else(|| "ok".into());
                t.record(|| format!("target {}", case), "ok", &r);
            }
            t.into_check("")
        }));
    }
    out.push(Check::timed("single-generator", || {
        let mut t = vec![vec![vec![qi(0); 2]; 2]; 2];
        t[0][0][0] = qi(1);
        let (triples, _) = r2n_inverse_builder(&t).unwrap();
        let sixth = triples.iter().all(|tr| tr.u == tr.v && tr.v.iter().zip(&tr.w).all(|(a, b)| b == &(a * q(1, 6))));
        let r = round_trip(2, &t).err().unwrap_or_else(|| "ok".into());
        Check::new("", sixth && r == "ok", "weights 1/6; round trip: ok", format!("weights 1/6: {}; round trip: {}", sixth, r))
    }));
    out.push(Check::timed("non-constant-rejected", || {
        let pairs: Vec<Pair<Poly>> = vec![
            (VectorField::coord(2, 0), VectorField::coord(2, 1)),
            (VectorField::coord(2, 0).times_fn(&(&Poly::var(0) * &Poly::var(0))), VectorField::coord(2, 0)),
        ];
        let c = christoffel_from_cochain(&pairs, 2).unwrap();
        Check::same("", show(&Err::<(), _>(GeomError::NotConstant)), show(&lowered_constant_christoffel(&c).map(|_| ())))
    }));
    out.push(Check::timed("random-pairs-compatible", || {
        // f·U⊗V − U⊗f·V leaves ω alone but bends Γ
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 0x51);
        let mut t = Tally::default();
        for case in 0..20 {
            let mut pairs: Vec<Pair<Poly>> = vec![(VectorField::coord(2, 0), VectorField::coord(2, 1))];
            let (u, v) = (rand_field(&mut rng, 2), rand_field(&mut rng, 2));
            let f = rand_poly(&mut rng, 2, 3);
            pairs.push((u.times_fn(&f), v.clone()));
            pairs.push((u, v.times_fn(&f).scale(&qi(-1))));
            let c = christoffel_from_cochain(&pairs, 2).unwrap();
            t.record(|| format!("case {}", case), "[]", &show(&c.compatibility_failures()));
        }
        t.into_check("")
    }));
    out.push(Check::timed("lie-derivative", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 0x11);
        let mut t = Tally::default();
        for case in 0..30 {
            let (x, y) = (rand_field(&mut rng, 2), rand_field(&mut rng, 2));
            let f = rand_poly(&mut rng, 2, 3);
            let xi = OneForm::new(vec![rand_poly(&mut rng, 2, 2), rand_poly(&mut rng, 2, 2)]);
            let xy = vf_bracket(&x, &y);
            let action = lie_derivative_form(&x, &lie_derivative_form(&y, &xi))
                .plus(&lie_derivative_form(&y, &lie_derivative_form(&x, &xi)).scale(&qi(-1)));
            let leib = xi.times_fn(&x.apply(&f)).plus(&lie_derivative_form(&x, &xi).times_fn(&f));
            let ok = xy.apply(&f) == x.apply(&y.apply(&f)).minus(&y.apply(&x.apply(&f)))
                && lie_derivative_form(&xy, &xi) == action
                && lie_derivative_form(&x, &xi.times_fn(&f)) == leib
                && lie_derivative_form(&x, &OneForm::exact(&f, 2)) == OneForm::exact(&x.apply(&f), 2);
            t.record(|| format!("case {}", case), "ok", if ok { "ok" } else { "identity fails" });
        }
        t.into_check("")
    }));
    out
}
