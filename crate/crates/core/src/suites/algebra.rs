//! lie, cbh and bplus suites.

use super::props;
use super::{monos_of_degree, monos_upto, poly, show, Options};
use crate::envalg::*;
use crate::exact::{q, qi, HSeries, Mono, Poly, Q};
use crate::lie::{catalogue, parse_definition, LieAlgebra};
use crate::report::{Check, Tally};
use crate::twist::{apply_cochain, cbh_cochain, Blocks, CbhParams, SymRealization, Tensor};

pub fn lie(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    let algs = o.algebras(&["abelian(3)", "heisenberg3", "sl2", "sl3", "bplus", "so13_abstract"]);
    for g in &algs {
        out.push(Check::timed(format!("jacobi/{}", g.name()), || {
            let v = g.jacobi_violations();
            Check::same("", "no violations", if v.is_empty() { "no violations".into() } else { format!("{:?}", v) })
        }));
        out.push(Check::timed(format!("definition-roundtrip/{}", g.name()), || {
            let back = parse_definition(&g.to_definition());
            Check::new("", back.as_ref() == Ok(g), "identical algebra", format!("{:?}", back))
        }));
        out.push(Check::timed(format!("killing-symmetric/{}", g.name()), || {
            let k = g.killing_form();
            let n = g.dim();
            let ok = (0..n).all(|i| (0..n).all(|j| k[i][j] == k[j][i]));
            Check::new("", ok, "symmetric", if ok { "symmetric" } else { "asymmetric" })
        }));
    }
    if o.algebra.is_none() {
        out.push(Check::timed("killing/sl2", || {
            let k = catalogue("sl2").unwrap().killing_form();
            Check::same("", "k(H,H) = 8, k(E,F) = 4", format!("k(H,H) = {}, k(E,F) = {}", k[0][0], k[1][2]))
        }));
        out.push(Check::timed("killing/bplus", || {
            let k = catalogue("bplus").unwrap().killing_form();
            Check::same("", "[[1, 0], [0, 0]]", format!("[[{}, {}], [{}, {}]]", k[0][0], k[0][1], k[1][0], k[1][1]))
        }));
        out.push(Check::timed("so13/vector-field-realisation", || {
            let f = crate::sphere::bracket_table_failures();
            Check::same("", "bracket table reproduced", if f.is_empty() { "bracket table reproduced".into() } else { show(&f) })
        }));
    }
    out.push(Check::timed("property/ring-axioms", || props::ring_axioms(o.seed)));
    out.push(Check::timed("property/jacobi", || props::jacobi(o.seed)));
    out.push(Check::timed("property/pbw-confluence", || props::pbw_confluence(o.seed)));
    out
}

/// Closed form against the PBW product for every pair of monomials with
/// degrees ≤ max.
fn closed_form_grid(g: &LieAlgebra, max: u32, order: usize) -> Check {
    let env = Envelope::new(g, order);
    let mut t = Tally::default();
    for m in 0..=max {
        for n in 0..=max {
            for w in monos_of_degree(g.dim(), m) {
                for v in monos_of_degree(g.dim(), n) {
                    let want = env.star_mono(&w, &v);
                    let got = star_closed_form(g, &w, &v, order).map(|s| show(&s)).unwrap_or_else(|e| e);
                    t.record(|| format!("{:?} * {:?}", w, v), &show(&want), &got);
                }
            }
        }
    }
    t.into_check("")
}

pub fn cbh(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    let order = o.order.min(2);
    let big = o.max_degree;
    let small = o.max_degree.min(3);
    let grid: Vec<(LieAlgebra, u32)> = match &o.algebra {
        Some(g) => vec![(g.clone(), small)],
        None => vec![
            (catalogue("sl2").unwrap(), big),
            (catalogue("bplus").unwrap(), big),
            (catalogue("sl3").unwrap(), small),
            (catalogue("heisenberg3").unwrap(), small),
        ],
    };
    for (g, max) in &grid {
        out.push(Check::timed(format!("closed-form/{}", g.name()), || closed_form_grid(g, *max, order)));
    }
    for (g, max) in &grid {
        out.push(Check::timed(format!("single-letter/{}", g.name()), || {
            let env = Envelope::new(g, 2);
            let mut t = Tally::default();
            for v in monos_upto(g.dim(), *max) {
                for w in 0..g.dim() {
                    t.record(|| format!("e{} * {:?}", w, v), &show(&env.star_mono(&Mono::var(w), &v)), &show(&single_letter_star(g, w, &v)));
                }
            }
            t.into_check("")
        }));
        out.push(Check::timed(format!("generators/{}", g.name()), || {
            let env = Envelope::new(g, o.order);
            let mut t = Tally::default();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    let mut want = HSeries::constant(o.order, &Poly::var(i) * &Poly::var(j));
                    if o.order >= 1 {
                        want.set(1, g.bracket_lin(&Poly::var(i), &Poly::var(j)).scale(&q(1, 2)));
                    }
                    t.record(|| format!("e{} * e{}", i, j), &show(&want), &show(&env.star_mono(&Mono::var(i), &Mono::var(j))));
                }
            }
            t.into_check("")
        }));
        out.push(Check::timed(format!("symmetrisation-inverse/{}", g.name()), || {
            let env = Envelope::new(g, o.order.max(1));
            let mut t = Tally::default();
            for m in monos_upto(g.dim(), max + 2) {
                let s = env.constant(poly(&m));
                t.record(|| format!("{:?}", m), &show(&s), &show(&env.unsymmetrize(&env.symmetrize(&s))));
            }
            t.into_check("")
        }));
        out.push(Check::timed(format!("semiclassical/{}", g.name()), || semiclassical(g, (*max).min(3))));
    }
    if o.algebra.is_none() {
        out.push(Check::timed("displayed-example/v2-w", v_squared_w));
    }
    out.push(Check::timed("property/star-associativity", || props::star_associativity(o.seed, o.order, o.max_degree)));
    out
}

/// a⋆b − b⋆a = ℏ{a,b} + O(ℏ²) with the Kirillov–Kostant bracket.
fn semiclassical(g: &LieAlgebra, max: u32) -> Check {
    let env = Envelope::new(g, 1);
    let n = g.dim();
    let pb = |a: &Poly, b: &Poly| {
        let mut out = Poly::zero();
        for i in 0..n {
            for j in 0..n {
                out.add_assign(&(&(&a.partial(i) * &b.partial(j)) * &g.bracket_lin(&Poly::var(i), &Poly::var(j))));
            }
        }
        out
    };
    let mut t = Tally::default();
    let ms = monos_upto(n, max);
    for x in &ms {
        for y in &ms {
            let d = env.star_mono(x, y).try_sub(&env.star_mono(y, x)).unwrap();
            let want = HSeries::from_coeffs(1, vec![Poly::zero(), pb(&poly(x), &poly(y))]);
            t.record(|| format!("{:?}, {:?}", x, y), &show(&want), &show(&d));
        }
    }
    t.into_check("")
}

/// φ(v²)φ(w) in sl₂ with v = H, w = E: the displayed ℏ coefficient is ½,
/// the product (and the general closed form) gives 1.
fn v_squared_w() -> Check {
    let g = catalogue("sl2").unwrap();
    let env = Envelope::new(&g, 2);
    let (v2, w) = (Mono::new(vec![2]), Mono::new(vec![0, 1]));
    let s = env.star_mono(&v2, &w);
    let (h, e) = (Poly::var(0), Poly::var(1));
    let vvw = &h * &g.bracket_lin(&h, &e);
    let closed = star_closed_form(&g, &v2, &w, 2).unwrap();
    let coeff = |p: &Poly| -> Option<Q> {
        // p = c · v[v,w]
        let (m, c) = vvw.leading()?;
        let c = p.coeff(m) / c;
        (vvw.scale(&c) == *p).then_some(c)
    };
    let got = coeff(s.coeff(1));
    let actual = match &got {
        Some(c) => format!("hbar coefficient of phi(v[v,w]): {} (PBW product); closed form agrees: {}", c, closed == s),
        None => format!("not a multiple of v[v,w]: {:?}", s.coeff(1)),
    };
    let expected = "hbar coefficient of phi(v[v,w]): 1/2 (as displayed)";
    match got {
        Some(c) if c == q(1, 2) => Check::new("", true, expected, actual),
        Some(c) if c == qi(1) && closed == s => Check::flagged("", expected, actual),
        _ => Check::new("", false, expected, actual),
    }
}

pub fn bplus(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    let order = o.order;
    let max = o.max_degree;
    // x first, so that ordered monomials are xⁿtᵐ
    let swap = |s: &HSeries<Poly>| s.map(|p| p.subst(&[Some(Poly::var(1)), Some(Poly::var(0))]));
    out.push(Check::timed("phi", || {
        let b = catalogue("bplus").unwrap().permuted(&[1, 0]);
        let env = Envelope::new(&b, order);
        let mut t = Tally::default();
        for n in 0..=max + 1 {
            for m in 0..=max + 1 {
                let got = swap(&env.symmetrize_mono(&Mono::new(vec![n, m])));
                t.record(|| format!("x^{} t^{}", n, m), &show(&bplus_phi_closed(n, m).truncate(order)), &show(&got));
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("phi-inverse", || {
        let b = catalogue("bplus").unwrap().permuted(&[1, 0]);
        let env = Envelope::new(&b, order);
        let mut t = Tally::default();
        for n in 0..=max + 1 {
            for m in 0..=max + 1 {
                let got = swap(&env.unsymmetrize(&env.monomial(Mono::new(vec![n, m]))));
                t.record(|| format!("x^{} t^{}", n, m), &show(&bplus_phi_inv_closed(n, m).truncate(order)), &show(&got));
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("star-closed-form", || {
        let env = Envelope::new(&catalogue("bplus").unwrap(), order);
        let mut t = Tally::default();
        for n in 0..=max {
            for m in 0..=max {
                for r in 0..=max {
                    for s in 0..=max {
                        let want = env.star_mono(&Mono::new(vec![m, n]), &Mono::new(vec![s, r]));
                        let got = bplus_star_closed_form(n, m, r, s, order).map(|x| show(&x)).unwrap_or_else(|e| e);
                        t.record(|| format!("x^{} t^{} * x^{} t^{}", n, m, r, s), &show(&want), &got);
                    }
                }
            }
        }
        t.into_check("")
    }));
    out.push(Check::timed("cbh-closed-form", || {
        let b = catalogue("bplus").unwrap();
        let mut t = Tally::default();
        for k in 0..=order {
            let (l, r) = bplus_cbh_sides(&b, k, k as u32 + 2);
            t.record(|| format!("order {}", k), &show(&r), &show(&l));
        }
        t.into_check("")
    }));
    if order >= 3 {
        let b = catalogue("bplus").unwrap();
        for a in o.alphas() {
            let b = b.clone();
            out.push(Check::timed(format!("g3-product/alpha={}", a), move || {
                let c = cbh_cochain(&b, &CbhParams::improved(a), 3).unwrap();
                product_grid(&b, &c.finv, max + 1, 3)
            }));
        }
        out.push(Check::timed("g3-printed-sign", g3_printed));
    }
    out
}

/// apply_cochain against the PBW product, ℏ⁰…ℏ^order, total degree ≤ max.
pub(crate) fn product_grid(g: &LieAlgebra, finv: &HSeries<Tensor>, max: u32, order: usize) -> Check {
    let env = Envelope::new(g, order);
    let rz = SymRealization::new(g);
    let ms = monos_upto(g.dim(), max);
    let mut t = Tally::default();
    for a in &ms {
        for b in &ms {
            if a.degree() + b.degree() > max {
                continue;
            }
            let got = apply_cochain(finv, &rz, &poly(a), &poly(b)).map(|s| show(&s.truncate(order)));
            let want = env.star(&env.constant(poly(a)), &env.constant(poly(b)));
            t.record(|| format!("{:?} * {:?}", a, b), &show(&want), &got.unwrap_or_else(|e| e.to_string()));
        }
    }
    t.into_check("")
}

/// The third-order term with its middle sign as usually printed misses
/// ℏ³ parts of the product, e.g. on x²•t³.
fn g3_printed() -> Check {
    let g = catalogue("bplus").unwrap();
    let b = Blocks::new(&g);
    let rz = SymRealization::new(&g);
    let env = Envelope::new(&g, 3);
    let (x2, t3) = (Poly::monomial(&[0, 2], qi(1)), Poly::monomial(&[3], qi(1)));
    let want = env.star(&env.constant(x2.clone()), &env.constant(t3.clone())).coeff(3).clone();
    let h3 = |t: Tensor| {
        let s = HSeries::from_coeffs(3, vec![Tensor::unit(), Tensor::zero(), Tensor::zero(), t]);
        apply_cochain(&s, &rz, &x2, &t3).unwrap().coeff(3).clone()
    };
    let (printed, corrected) = (h3(b.g3_printed()), h3(b.g3()));
    let names = ["t", "x"];
    let expected = format!("printed term gives the hbar^3 part of x^2*t^3: {}", want.render(&names));
    let actual = format!("printed: {}; middle sign flipped: {}", printed.render(&names), corrected.render(&names));
    if printed == want {
        Check::new("", true, expected, actual)
    } else if corrected == want {
        Check::flagged("", expected, actual)
    } else {
        Check::new("", false, expected, actual)
    }
}
