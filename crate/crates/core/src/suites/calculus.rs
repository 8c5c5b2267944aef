//! precon, mackey, dcalc and spacetime suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{none_of, props, show, Options};
use crate::dcalc::*;
use crate::exact::{q, qi, Mono, Poly, Ring, Q};
use crate::geom::{lie_derivative_form, OneForm, Side, VectorField};
use crate::lie::{catalogue, LieAlgebra};
use crate::precon::*;
use crate::report::{Check, Tally};
use crate::twist::{apply_cochain, cbh_cochain, mackey_cochain, CbhParams, MackeyRealization, SymRealization};

fn scaled(v: &[Q], c: Q) -> Vec<Q> {
    v.iter().map(|x| x * &c).collect()
}

fn zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn precon(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    for g in o.algebras(&["abelian(2)", "heisenberg3", "sl2", "sl3", "bplus", "so13_abstract"]) {
        out.push(Check::timed(format!("canonical/{}", g.name()), || canonical(&g)));
        out.push(Check::timed(format!("full-bracket-control/{}", g.name()), || {
            // Ξ = [v,w] is flat but breaks compatibility (unless g is abelian)
            let p = Preconnection::without_half(&g);
            let n = g.dim();
            let mut breaks = false;
            let mut curved = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    breaks |= !zero(&p.compat_defect(&g.unit(i), &g.unit(j)));
                    for k in 0..n {
                        if !zero(&p.curvature(&g.unit(i), &g.unit(j), &g.unit(k))) {
                            curved.push(format!("R({},{})d{}", i, j, k));
                        }
                    }
                }
            }
            let want = format!("flat; compatible: {}", g.is_abelian());
            let got = if curved.is_empty() { format!("flat; compatible: {}", !breaks) } else { format!("curved at {}", curved[0]) };
            Check::same("", want, got)
        }));
    }
    if o.algebra.is_none() {
        out.push(Check::timed("sl2/curvature-example", || {
            // R(H,E)dF = −¼d[2E,F] = −½dH
            let g = catalogue("sl2").unwrap();
            let r = Preconnection::canonical(&g).curvature(&g.unit(0), &g.unit(1), &g.unit(2));
            Check::same("", "[-1/2, 0, 0]", format!("[{}, {}, {}]", r[0], r[1], r[2]))
        }));
    }
    for g in o.algebras(&["sl2", "bplus", "heisenberg3", "sl3"]) {
        for a in o.alphas() {
            let g = g.clone();
            out.push(Check::timed(format!("induced-by-cochain/{}/alpha={}", g.name(), a), move || induced(&g, a)));
        }
    }
    if o.algebra.is_none() {
        out.push(Check::timed("sl3/matrices", sl3_matrices));
        out.push(Check::timed("sl3/trilinear-vs-determinant", || {
            let (lib, oracle) = (library_values(), det_values());
            Check::same("", fmt4(&oracle), fmt4(&lib))
        }));
        out.push(Check::timed("sl3/trilinear-values", || {
            let want = [qi(-1), q(3, 2), q(5, 6), qi(-1)];
            Check::same("", fmt4(&want), fmt4(&library_values()))
        }));
        out.push(Check::timed("sl3/obstruction-positive", obstruction_positive));
        out.push(Check::timed("invariant-symmetric-maps", || {
            let count = |n: &str| invariant_symmetric_maps(&catalogue(n).unwrap());
            Check::same(
                "",
                "sl2: 0, sl3: 1, abelian(2): 6",
                format!("sl2: {}, sl3: {}, abelian(2): {}", count("sl2"), count("sl3"), count("abelian(2)")),
            )
        }));
        out.push(Check::timed("sl3/linear-terms-cancel", linear_terms_cancel));
    }
    out
}

fn canonical(g: &LieAlgebra) -> Check {
    let p = Preconnection::canonical(g);
    let mut t = Tally::default();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let (v, w) = (g.unit(i), g.unit(j));
            t.record(|| format!("compat({},{})", i, j), "0", if zero(&p.compat_defect(&v, &w)) { "0" } else { "nonzero" });
            for k in 0..n {
                let z = g.unit(k);
                let vwz = g.bracket(&g.bracket(&v, &w), &z);
                t.record(|| format!("R({},{})d{}", i, j, k), &show(&scaled(&vwz, q(-1, 4))), &show(&p.curvature(&v, &w, &z)));
                t.record(|| format!("T({},{})d{}", i, j, k), &show(&scaled(&vwz, q(1, 2))), &show(&p.torsion(&v, &w, &z)));
            }
        }
    }
    t.into_check("")
}

/// ∇̂, bracket, curvature and torsion read off the cochain's action on
/// S(g) against the potential-level canonical rule.
fn induced(g: &LieAlgebra, alpha: Q) -> Check {
    let n = g.dim();
    let p = Preconnection::canonical(g);
    let c = cbh_cochain(g, &CbhParams::improved(alpha), 1).unwrap();
    let calc = InducedCalculus::new(&c, sym_fields(g));
    let lin = |v: &[Q]| g.from_coords(v);
    // on sl₃ a spanning sample: both Cartan directions' partner, a root and its negative
    let range: Vec<usize> = if n > 4 { vec![0, 2, 5] } else { (0..n).collect() };
    let mut t = Tally::default();
    let err = |e: crate::twist::TwistError| e.to_string();
    for &i in &range {
        for &j in &range {
            let (v, w) = (g.unit(i), g.unit(j));
            let (pv, pw) = (lin(&v), lin(&w));
            t.record(|| format!("{{{},{}}}", i, j), &show(&lin(&g.bracket(&v, &w))), &calc.bracket(&pv, &pw).map(|x| show(&x)).unwrap_or_else(err));
            t.record(
                || format!("nabla_{} d{}", i, j),
                &show(&calc.d(&lin(&p.nabla(&v, &w)))),
                &calc.nabla(&pv, &calc.d(&pw)).map(|x| show(&x)).unwrap_or_else(err),
            );
            for &k in &range {
                let z = g.unit(k);
                let r = calc.curvature(&pv, &pw, &calc.d(&lin(&z))).map(|x| show(&x)).unwrap_or_else(err);
                t.record(|| format!("R({},{})d{}", i, j, k), &show(&calc.d(&lin(&p.curvature(&v, &w, &z)))), &r);
                let tt = calc.torsion(&pv, &pw, &lin(&z)).map(|x| show(&x)).unwrap_or_else(err);
                t.record(|| format!("T({},{})d{}", i, j, k), &show(&lin(&p.torsion(&v, &w, &z))), &tt);
            }
        }
    }
    t.into_check("")
}

fn sl3_matrices() -> Check {
    let g = catalogue("sl3").unwrap();
    let comm = |a: &Mat3, b: &Mat3| -> Mat3 {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j]).fold(qi(0), |x, y| x + y)))
    };
    let mut bad = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            if comm(&sl3_matrix(i), &sl3_matrix(j)) != sl3_from_coords(&g.bracket(&g.unit(i), &g.unit(j))) {
                bad.push(format!("[{},{}]", i, j));
            }
        }
    }
    for x in 0..8 {
        for a in 0..8 {
            for b in a..8 {
                for c in b..8 {
                    let (ex, ea, eb, ec) = (g.unit(x), g.unit(a), g.unit(b), g.unit(c));
                    let s = sl3_trilinear(&g.bracket(&ex, &ea), &eb, &ec)
                        + sl3_trilinear(&ea, &g.bracket(&ex, &eb), &ec)
                        + sl3_trilinear(&ea, &eb, &g.bracket(&ex, &ec));
                    if !s.is_zero() {
                        bad.push(format!("ad_{} I({},{},{})", x, a, b, c));
                    }
                }
            }
        }
    }
    none_of("", "mismatches", bad)
}

// --- independent sl₃ oracle: 3×3 determinants and polarisation by hand

fn det(m: &Mat3) -> Q {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn madd(a: &Mat3, b: &Mat3, s: i64) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j] * qi(s)))
}

/// I(v,w,w) = (I(v+2w) − 2I(v+w) + I(v))/6 − I(w) with I = det.
fn det_vww(v: &Mat3, w: &Mat3) -> Q {
    (det(&madd(v, w, 2)) - qi(2) * det(&madd(v, w, 1)) + det(v)) / qi(6) - det(w)
}

fn diag(a: i64, b: i64, c: i64) -> Mat3 {
    let z = || qi(0);
    [[qi(a), z(), z()], [z(), qi(b), z()], [z(), z(), qi(c)]]
}

/// (I₁₁₁, I₁₁₂, I₁₂₂, I₂₂₂) with t₁ = diag(1,−1,0), t₂ = diag(0,1,−1).
fn det_values() -> [Q; 4] {
    let (t1, t2) = (diag(1, -1, 0), diag(0, 1, -1));
    [det(&t1), det_vww(&t2, &t1), det_vww(&t1, &t2), det(&t2)]
}

fn library_values() -> [Q; 4] {
    match sln_obstruction(3) {
        Ok(Obstruction::Sl3(o)) => [o.i111, o.i112, o.i122, o.i222],
        _ => unreachable!("sl3 has an obstruction record"),
    }
}

fn fmt4(v: &[Q; 4]) -> String {
    format!("I111 = {}, I112 = {}, I122 = {}, I222 = {}", v[0], v[1], v[2], v[3])
}

fn obstruction_positive() -> Check {
    let o = match sln_obstruction(3) {
        Ok(Obstruction::Sl3(o)) => o,
        _ => unreachable!(),
    };
    // oracle: Cartan sum over e₁ = t₁, e₂ = ½t₁ + t₂ with weights 1/tr(e_a²)
    let (t1, t2) = (diag(1, -1, 0), diag(0, 1, -1));
    let e2 = madd(&madd(&t1, &t1, 0), &diag(1, 1, -2), 0);
    let e2: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| &e2[i][j] * q(1, 2)));
    let tr2 = |m: &Mat3| (0..3).map(|i| &m[i][i] * &m[i][i]).fold(qi(0), |a, b| a + b);
    let tri = |a: &Mat3, b: &Mat3, c: &Mat3| {
        let s = |x: &Mat3, y: &Mat3| madd(x, y, 1);
        (det(&s(&s(a, b), c)) - det(&s(a, b)) - det(&s(a, c)) - det(&s(b, c)) + det(a) + det(b) + det(c)) / qi(6)
    };
    let mut oracle = qi(0);
    for e in [&t1, &e2] {
        oracle += (tri(&t1, &t2, e) * tri(&t1, &t2, e) - tri(&t2, &t2, e) * tri(&t1, &t1, e)) / tr2(e);
    }
    // and as a curvature pairing: −κ(R(t₁,t₂)dt₂, t₁)
    let k = sl3_trace_form();
    let pairing = -o.curvature.iter().enumerate().map(|(a, r)| r * &k[a][0]).fold(qi(0), |x, y| x + y);
    let ok = o.scalar > qi(0) && o.scalar == oracle && o.cartan == oracle && pairing == oracle;
    Check::new(
        "",
        ok,
        format!("> 0, equal to the Cartan oracle {}", oracle),
        format!("full sum {}, Cartan {}, −κ(R(t1,t2)dt2, t1) = {}", o.scalar, o.cartan, pairing),
    )
}

fn linear_terms_cancel() -> Check {
    let g = catalogue("sl3").unwrap();
    let p = Preconnection::with_symmetric(&g, sl3_symmetric_table(&q(3, 7)));
    let canon = Preconnection::canonical(&g);
    let mut bad = Vec::new();
    let mut quadratic = false;
    for i in 0..8 {
        for j in 0..8 {
            if p.xi_hat(&g.unit(i), &g.unit(j)) != p.xi_hat(&g.unit(j), &g.unit(i)) || !zero(&p.compat_defect(&g.unit(i), &g.unit(j))) {
                bad.push(format!("Ξ̂({},{}) asymmetric or incompatible", i, j));
            }
            for k in 0..8 {
                let (v, w, z) = (g.unit(i), g.unit(j), g.unit(k));
                let [r0, r1, r2] = p.curvature_by_degree(&v, &w, &z);
                if r0 != canon.curvature(&v, &w, &z) || !zero(&r1) {
                    bad.push(format!("R({},{})d{}", i, j, k));
                }
                quadratic |= !zero(&r2);
            }
        }
    }
    if !quadratic {
        bad.push("quadratic part vanishes too".into());
    }
    none_of("", "surviving linear terms", bad)
}

// ---------------------------------------------------------------- Mackey

struct Case {
    label: &'static str,
    g: &'static str,
    on_n: Vec<Vec<Poly>>,
    funcs: Vec<Poly>,
}

fn cases() -> Vec<Case> {
    let s = Poly::var(2);
    let (u, v) = (Poly::var(3), Poly::var(4));
    vec![
        // t ↦ s∂ₛ, x ↦ s²∂ₛ
        Case { label: "bplus-on-R", g: "bplus", on_n: vec![vec![s.clone()], vec![&s * &s]], funcs: vec![s.clone(), &(&s * &s) + &Poly::int(1)] },
        // H = u∂ᵤ − v∂ᵥ, E = u∂ᵥ, F = v∂ᵤ
        Case {
            label: "sl2-on-R2",
            g: "sl2",
            on_n: vec![vec![u.clone(), -&v], vec![Poly::zero(), u.clone()], vec![v.clone(), Poly::zero()]],
            funcs: vec![u.clone(), v.clone(), &u * &v],
        },
        Case { label: "sl2-on-point", g: "sl2", on_n: vec![vec![]; 3], funcs: vec![] },
    ]
}

fn args(g: &LieAlgebra, case: &Case) -> Vec<MackeyArg> {
    let n = g.dim();
    let mut a: Vec<MackeyArg> = (0..n).map(|i| MackeyArg::g(g.unit(i))).collect();
    a.extend(case.funcs.iter().map(|f| MackeyArg::func(n, f.clone())));
    a
}

pub fn mackey(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    for case in cases() {
        let g = catalogue(case.g).unwrap();
        let l = case.label;
        out.push(Check::timed(format!("representation/{}", l), || {
            let ok = MackeyRealization::new(&g, case.on_n.clone()).is_representation();
            Check::new("", ok, "g acts on N by a Lie homomorphism", if ok { "g acts on N by a Lie homomorphism" } else { "not a representation" })
        }));
        let c = mackey_cochain(&g);
        out.push(Check::timed(format!("semidirect-bracket/{}", l), || {
            // directly from G⁽¹⁾: {v,w} = [v,w], {v,f} = v▷f, {f,g} = 0
            let rz = MackeyRealization::new(&g, case.on_n.clone());
            let br = |a: &Poly, b: &Poly| {
                let ab = apply_cochain(&c.finv, &rz, a, b).unwrap();
                let ba = apply_cochain(&c.finv, &rz, b, a).unwrap();
                ab.coeff(1) - ba.coeff(1)
            };
            let mut t = Tally::default();
            let n = g.dim();
            for i in 0..n {
                for j in 0..n {
                    t.record(|| format!("{{e{},e{}}}", i, j), &show(&g.bracket_lin(&Poly::var(i), &Poly::var(j))), &show(&br(&Poly::var(i), &Poly::var(j))));
                }
                for f in &case.funcs {
                    t.record(|| format!("{{e{},{:?}}}", i, f), &show(&rz.act_on_n(i, f)), &show(&br(&Poly::var(i), f)));
                }
            }
            for f in &case.funcs {
                for h in &case.funcs {
                    t.record(|| format!("{{{:?},{:?}}}", f, h), "0", &show(&br(f, h)));
                }
            }
            t.into_check("")
        }));
        let calc = InducedCalculus::new(&c, mackey_fields(&g, &case.on_n));
        let table = MackeyPrecon { g: &g, on_n: &case.on_n };
        let all = args(&g, &case);
        out.push(Check::timed(format!("bracket-table/{}", l), || {
            let mut t = Tally::default();
            for a in &all {
                for b in &all {
                    let got = calc.bracket(&a.to_poly(), &b.to_poly()).map(|x| show(&x)).unwrap_or_else(|e| e.to_string());
                    t.record(|| format!("{{{:?},{:?}}}", a.to_poly(), b.to_poly()), &show(&table.bracket(a, b).to_poly()), &got);
                }
            }
            t.into_check("")
        }));
        out.push(Check::timed(format!("preconnection-table/{}", l), || {
            let mut t = Tally::default();
            for a in &all {
                for b in &all {
                    let (pa, pb) = (a.to_poly(), b.to_poly());
                    let got = calc.nabla(&pa, &calc.d(&pb)).map(|x| show(&x)).unwrap_or_else(|e| e.to_string());
                    t.record(|| format!("nabla_{:?} d{:?}", pa, pb), &show(&calc.d(&table.nabla(a, b).to_poly())), &got);
                    let compat = calc.compat_defect(&pa, &pb).map(|x| x.is_zero()).unwrap_or(false) && table.compat_defect(a, b).is_zero();
                    t.record(|| format!("compat {:?} {:?}", pa, pb), "compatible", if compat { "compatible" } else { "incompatible" });
                }
            }
            t.into_check("")
        }));
        out.push(Check::timed(format!("curvature-table/{}", l), || {
            let canon = Preconnection::canonical(&g);
            let mut t = Tally::default();
            for a in &all {
                for b in &all {
                    for c3 in &all {
                        let r = table.curvature(a, b, c3);
                        let want = if a.f.is_zero() && b.f.is_zero() && c3.f.is_zero() {
                            MackeyArg::g(canon.curvature(&a.v, &b.v, &c3.v))
                        } else {
                            // any function argument, including R(v,w)dg, gives 0
                            MackeyArg::func(g.dim(), Poly::zero())
                        };
                        let case = || format!("R({:?},{:?})d{:?}", a.to_poly(), b.to_poly(), c3.to_poly());
                        t.record(case, &show(&want.to_poly()), &show(&r.to_poly()));
                        let induced = calc.curvature(&a.to_poly(), &b.to_poly(), &calc.d(&c3.to_poly())).map(|x| show(&x)).unwrap_or_else(|e| e.to_string());
                        t.record(case, &show(&calc.d(&r.to_poly())), &induced);
                    }
                }
            }
            t.into_check("")
        }));
        if !case.funcs.is_empty() {
            let fields = mackey_fields(&g, &case.on_n);
            out.push(Check::timed(format!("lie-derivative-formula/{}", l), || lie_derivative_formula(&g, &fields, &calc, o.seed)));
        }
    }
    out.push(Check::timed("bplus-example", || {
        // ∇̂_t ds = d(t▷s) = ds
        let g = catalogue("bplus").unwrap();
        let s = Poly::var(2);
        let on_n = vec![vec![s.clone()], vec![&s * &s]];
        let table = MackeyPrecon { g: &g, on_n: &on_n };
        let r = table.nabla(&MackeyArg::g(g.unit(0)), &MackeyArg::func(2, s.clone()));
        Check::same("", "potential s", format!("potential {}", r.to_poly().render(&["t", "x", "s"])))
    }));
    out.push(Check::timed("point-reduction/sl2", || {
        // N a point: the Mackey cochain acts on S(g) as the CBH cochain at α = −1/2
        let g = catalogue("sl2").unwrap();
        let c = mackey_cochain(&g);
        let cbh = cbh_cochain(&g, &CbhParams::improved(q(-1, 2)), 2).unwrap();
        let (pt, sym) = (MackeyRealization::point(&g), SymRealization::new(&g));
        let ms = super::monos_upto(3, 2);
        let mut t = Tally::default();
        for a in &ms {
            for b in &ms {
                let (pa, pb) = (super::poly(a), super::poly(b));
                let want = apply_cochain(&cbh.finv, &sym, &pa, &pb).unwrap();
                let got = apply_cochain(&c.finv, &pt, &pa, &pb).unwrap();
                t.record(|| format!("{:?} * {:?}", a, b), &show(&want), &show(&got));
            }
        }
        t.into_check("")
    }));
    out
}

/// ∇̂_aξ = čeⁱ(a) ℒ_{čc_i + če_i/2}ξ − (čc_i + če_i/2)(a) ℒ_{čeⁱ}ξ on random
/// functions and forms.
fn lie_derivative_formula(g: &LieAlgebra, fields: &[VectorField<Poly>], calc: &InducedCalculus, seed: u64) -> Check {
    let n = g.dim();
    let dim = fields[0].dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4d41);
    let rand_poly = |rng: &mut ChaCha8Rng| {
        let mut p = Poly::zero();
        for _ in 0..3 {
            let e: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..2)).collect();
            p.add_term(Mono::new(e), &qi(rng.gen_range(-2..=2)));
        }
        p
    };
    let mut t = Tally::default();
    for case in 0..10 {
        let a = rand_poly(&mut rng);
        let xi = OneForm::new((0..dim).map(|_| rand_poly(&mut rng)).collect());
        let mut want = OneForm::zero(dim);
        for i in 0..n {
            let x = fields[2 * n + i].plus(&fields[i].scale(&q(1, 2)));
            let d = &fields[n + i];
            want = want.plus(&lie_derivative_form(&x, &xi).times_fn(&d.apply(&a)));
            want = want.plus(&lie_derivative_form(d, &xi).times_fn(&x.apply(&a)).scale(&qi(-1)));
        }
        let got = calc.nabla(&a, &xi).map(|x| show(&x)).unwrap_or_else(|e| e.to_string());
        t.record(|| format!("case {}", case), &show(&want), &got);
    }
    t.into_check("")
}

// ---------------------------------------------------------------- dcalc

pub fn dcalc(o: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    for g in o.algebras(&["sl2", "bplus", "heisenberg3", "sl3"]) {
        let order = if g.dim() > 4 { o.order.min(2) } else { o.order };
        for a in o.alphas() {
            let g = g.clone();
            out.push(Check::timed(format!("one-forms/{}/alpha={}", g.name(), a), move || {
                let p = CbhParams::improved(a);
                let calc = sym_calculus(&g, &p, order).unwrap();
                let mut t = Tally::default();
                for i in 0..g.dim() {
                    for j in 0..g.dim() {
                        let (v, w) = (Poly::var(i), Poly::var(j));
                        for side in [Side::Left, Side::Right] {
                            let got = calc.form_product(&v, &calc.d(&w), side).map(|x| show(&x)).unwrap_or_else(|e| e.to_string());
                            t.record(|| format!("{:?} e{} e{}", side, i, j), &show(&sym_expected(&g, &p, &v, &w, order, side)), &got);
                        }
                    }
                }
                t.into_check("")
            }));
        }
    }
    for g in o.algebras(&["sl2", "bplus"]) {
        out.push(Check::timed(format!("second-order-summands/{}", g.name()), || {
            let calc = sym_calculus(&g, &CbhParams::improved(q(-1, 4)), 2).unwrap();
            let mut bad = Vec::new();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    for side in [Side::Left, Side::Right] {
                        for (term, f) in g2_term_contributions(&calc, &Poly::var(i), &Poly::var(j), side).unwrap() {
                            if !f.is_zero() {
                                bad.push(format!("{:?} on e{}, de{}", term, i, j));
                            }
                        }
                    }
                }
            }
            none_of("", "contributing summands", bad)
        }));
    }
    for g in o.algebras(&["sl2", "bplus", "heisenberg3"]) {
        out.push(Check::timed(format!("preconnection-identity/{}", g.name()), || {
            let pre = Preconnection::canonical(&g);
            let mut t = Tally::default();
            for a in o.alphas() {
                let calc = sym_calculus(&g, &CbhParams::improved(a.clone()), 2).unwrap();
                for i in 0..g.dim() {
                    for j in 0..g.dim() {
                        let c = calc.commutator(&Poly::var(i), &calc.d(&Poly::var(j))).unwrap();
                        let want = calc.d(&g.from_coords(&pre.nabla(&g.unit(i), &g.unit(j))));
                        t.record(|| format!("alpha={} e{} de{}", a, i, j), &show(&(want, OneForm::<Poly>::zero(g.dim()))), &show(&(c[1].clone(), c[2].clone())));
                    }
                }
            }
            t.into_check("")
        }));
    }
    if o.algebra.is_none() {
        out.push(Check::timed("associator/sl2", || {
            // (a•ξ)•b − a•(ξ•b) vanishes through ℏ and is curvature at ℏ²
            let g = catalogue("sl2").unwrap();
            let calc = sym_calculus(&g, &CbhParams::improved(q(-1, 4)), 2).unwrap();
            let mut low = Vec::new();
            let mut seen = 0;
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        let a = calc.associator(&Poly::var(i), &calc.d(&Poly::var(j)), &Poly::var(k)).unwrap();
                        if !(a[0].is_zero() && a[1].is_zero()) {
                            low.push(format!("({},{},{})", i, j, k));
                        }
                        seen += usize::from(!a[2].is_zero());
                    }
                }
            }
            let ok = low.is_empty() && seen > 0;
            Check::new("", ok, "zero at h^0 and h^1; nonzero at h^2", format!("nonzero below h^2 at {:?}; {} of 27 triples nonzero at h^2", low, seen))
        }));
    }
    let alpha = o.alpha.clone().unwrap_or_else(|| q(-1, 4));
    out.push(Check::timed("property/leibniz", || props::leibniz(o.seed, &alpha)));
    out
}

pub fn spacetime(o: &Options) -> Vec<Check> {
    let order = o.order.max(1);
    let r = match spacetime_relations(order) {
        Ok(r) => r,
        Err(e) => return vec![Check::new("relations", false, "relations computed", e.to_string())],
    };
    let dx = OneForm::new(vec![Poly::zero(), Poly::int(1)]);
    let series = |lead: Option<OneForm<Poly>>| {
        let mut s = vec![OneForm::zero(2); order + 1];
        if let Some(f) = lead {
            s[1] = f;
        }
        s
    };
    let half = series(Some(dx.scale(&q(1, 2))));
    vec![
        Check::same("t*dx-dx*t", show(&half), show(&r.t_dx)),
        Check::same("dt*x-x*dt", show(&half), show(&r.dt_x)),
        Check::same("x*dx-dx*x", show(&series(None)), show(&r.x_dx)),
    ]
}
