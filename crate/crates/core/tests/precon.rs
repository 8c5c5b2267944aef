use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistlab::exact::{q, qi, Mono, Poly, Ring, Q};
use twistlab::geom::{lie_derivative_form, OneForm, VectorField};
use twistlab::lie::catalogue;
use twistlab::precon::*;
use twistlab::twist::{cbh_cochain, mackey_cochain, CbhParams, MackeyRealization, Realization, SymRealization};

const ALGEBRAS: [&str; 6] = ["abelian(2)", "heisenberg3", "sl2", "sl3", "bplus", "so13_abstract"];

fn scaled(v: &[Q], c: Q) -> Vec<Q> {
    v.iter().map(|x| x * &c).collect()
}

#[test]
fn canonical_rule_on_the_catalogue() {
    for name in ALGEBRAS {
        let g = catalogue(name).unwrap();
        let p = Preconnection::canonical(&g);
        let flat = Preconnection::without_half(&g);
        let mut compat_breaks = false;
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let (v, w) = (g.unit(i), g.unit(j));
                assert!(p.compat_defect(&v, &w).iter().all(|x| x.is_zero()), "{}", name);
                compat_breaks |= flat.compat_defect(&v, &w).iter().any(|x| !x.is_zero());
                for k in 0..g.dim() {
                    let z = g.unit(k);
                    let vwz = g.bracket(&g.bracket(&v, &w), &z);
                    assert_eq!(p.curvature(&v, &w, &z), scaled(&vwz, q(-1, 4)), "{} R({},{})d{}", name, i, j, k);
                    assert_eq!(p.torsion(&v, &w, &z), scaled(&vwz, q(1, 2)));
                    assert!(flat.curvature(&v, &w, &z).iter().all(|x| x.is_zero()));
                }
            }
        }
        assert_eq!(compat_breaks, !g.is_abelian(), "{}", name);
    }
}

#[test]
fn sl2_example_and_nilpotent_cases() {
    let g = catalogue("sl2").unwrap();
    let p = Preconnection::canonical(&g);
    // R(H,E)dF = −¼d[2E,F] = −½dH
    assert_eq!(p.curvature(&g.unit(0), &g.unit(1), &g.unit(2)), vec![q(-1, 2), qi(0), qi(0)]);
    for name in ["heisenberg3", "abelian(3)"] {
        let g = catalogue(name).unwrap();
        let p = Preconnection::canonical(&g);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (v, w, z) = (g.unit(i), g.unit(j), g.unit(k));
                    assert!(p.curvature(&v, &w, &z).iter().all(|x| x.is_zero()));
                }
            }
        }
    }
}

#[test]
fn cochain_induces_the_canonical_rule() {
    for name in ["sl2", "bplus", "heisenberg3", "sl3"] {
        let g = catalogue(name).unwrap();
        let n = g.dim();
        let p = Preconnection::canonical(&g);
        for alpha in [qi(0), q(-1, 4), q(-1, 2)] {
            let c = cbh_cochain(&g, &CbhParams::improved(alpha), 1).unwrap();
            let calc = InducedCalculus::new(&c, sym_fields(&g));
            let lin = |v: &[Q]| g.from_coords(v);
            let range: Vec<usize> = if name == "sl3" { vec![0, 2, 5] } else { (0..n).collect() };
            for &i in &range {
                for &j in &range {
                    let (v, w) = (g.unit(i), g.unit(j));
                    assert_eq!(calc.bracket(&lin(&v), &lin(&w)).unwrap(), lin(&g.bracket(&v, &w)));
                    assert_eq!(calc.nabla(&lin(&v), &calc.d(&lin(&w))).unwrap(), calc.d(&lin(&p.nabla(&v, &w))));
                    assert!(calc.compat_defect(&lin(&v), &lin(&w)).unwrap().is_zero());
                    for &k in &range {
                        let z = g.unit(k);
                        let r = calc.curvature(&lin(&v), &lin(&w), &calc.d(&lin(&z))).unwrap();
                        assert_eq!(r, calc.d(&lin(&p.curvature(&v, &w, &z))), "{} {} {} {}", name, i, j, k);
                        let t = calc.torsion(&lin(&v), &lin(&w), &lin(&z)).unwrap();
                        assert_eq!(t, lin(&p.torsion(&v, &w, &z)));
                    }
                }
            }
        }
    }
}

#[test]
fn vector_fields_match_the_realisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = catalogue("sl2").unwrap();
    let rz = SymRealization::new(&g);
    let fields = sym_fields(&g);
    for _ in 0..20 {
        let mut p = Poly::zero();
        for _ in 0..4 {
            let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            p.add_term(Mono::new(e), &qi(rng.gen_range(-3..=3)));
        }
        for (l, f) in fields.iter().enumerate() {
            assert_eq!(f.apply(&p), rz.act(l, &p));
        }
    }
}

// --- sl₃ oracle: det of diagonal-plus-offdiagonal matrices, polarised by hand.

type M = [[Q; 3]; 3];

fn det(m: &M) -> Q {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn diag(a: i64, b: i64, c: i64, den: i64) -> M {
    let z = || qi(0);
    [[q(a, den), z(), z()], [z(), q(b, den), z()], [z(), z(), q(c, den)]]
}

fn madd(a: &M, b: &M, s: i64) -> M {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j] * qi(s)))
}

/// I(v,w,w) = (I(v+2w) − 2I(v+w) + I(v))/6 − I(w), with I = det
fn vww(v: &M, w: &M) -> Q {
    (det(&madd(v, w, 2)) - qi(2) * det(&madd(v, w, 1)) + det(v)) / qi(6) - det(w)
}

#[test]
fn sl3_trilinear_against_the_determinant() {
    let t1 = diag(1, -1, 0, 1);
    let t2 = diag(0, 1, -1, 1);
    let o = match sln_obstruction(3).unwrap() {
        Obstruction::Sl3(o) => o,
        _ => unreachable!(),
    };
    assert_eq!(o.i111, det(&t1));
    assert_eq!(o.i222, det(&t2));
    assert_eq!(o.i112, vww(&t2, &t1));
    assert_eq!(o.i122, vww(&t1, &t2));
    // the cubic vanishes on t₁ and t₂ (eigenvalue 0), so I₁₁₁ = I₂₂₂ = 0
    assert_eq!((o.i111.clone(), o.i112.clone(), o.i122.clone(), o.i222.clone()), (qi(0), q(1, 3), q(-1, 3), qi(0)));
    let t = Trilinear { n: 3 };
    let (d1, d2) = (vec![qi(1), qi(-1), qi(0)], vec![qi(0), qi(1), qi(-1)]);
    assert_eq!(t.vww(&d2, &d1), o.i112);
    assert_eq!(t.full(&d1, &d2, &d2), o.i122);
}

#[test]
fn sl3_obstruction_is_positive() {
    let o = match sln_obstruction(3).unwrap() {
        Obstruction::Sl3(o) => o,
        _ => unreachable!(),
    };
    // oracle: Cartan sum with e₁ = t₁, e₂ = ½t₁ + t₂, weights 1/tr(e_a²)
    let t1 = diag(1, -1, 0, 1);
    let t2 = diag(0, 1, -1, 1);
    let e2 = diag(1, 1, -2, 2);
    let tr2 = |m: &M| (0..3).map(|i| &m[i][i] * &m[i][i]).fold(qi(0), |a, b| a + b);
    let tri = |a: &M, b: &M, c: &M| {
        // full polarisation of det on diagonal matrices
        let s = |x: &M, y: &M| madd(x, y, 1);
        (det(&s(&s(a, b), c)) - det(&s(a, b)) - det(&s(a, c)) - det(&s(b, c)) + det(a) + det(b) + det(c)) / qi(6)
    };
    let mut want = qi(0);
    for e in [&t1, &e2] {
        want += (tri(&t1, &t2, e) * tri(&t1, &t2, e) - tri(&t2, &t2, e) * tri(&t1, &t1, e)) / tr2(e);
    }
    assert_eq!(o.scalar, want);
    assert_eq!(o.cartan, want);
    assert_eq!(want, q(1, 9));
    assert!(o.scalar > qi(0));
    // the displayed combination on the displayed values
    assert_eq!(printed_obstruction(&qi(-1), &q(3, 2), &q(5, 6), &qi(-1)), q(739, 216));
    assert_ne!(o.printed_formula, o.scalar);
    // the scalar is −κ(R(t₁,t₂)dt₂, t₁)
    let g = catalogue("sl3").unwrap();
    let k = sl3_trace_form();
    let mut pairing = qi(0);
    for (a, r) in o.curvature.iter().enumerate() {
        pairing += r * &k[a][0];
    }
    assert_eq!(-pairing, o.scalar);
    assert!(o.curvature.iter().any(|x| !x.is_zero()));
    assert_eq!(o.invariant_maps, 1);
    assert_eq!(g.dim(), 8);
}

#[test]
fn sl3_matrices_and_invariance() {
    let g = catalogue("sl3").unwrap();
    let m = |v: &[Q]| sl3_from_coords(v);
    let comm = |a: &[[Q; 3]; 3], b: &[[Q; 3]; 3]| -> [[Q; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j]).fold(qi(0), |x, y| x + y))
        })
    };
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(comm(&sl3_matrix(i), &sl3_matrix(j)), m(&g.bracket(&g.unit(i), &g.unit(j))), "{} {}", i, j);
        }
    }
    // ad-invariance and total symmetry
    for x in 0..8 {
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let (ex, ea, eb, ec) = (g.unit(x), g.unit(a), g.unit(b), g.unit(c));
                    let s = sl3_trilinear(&g.bracket(&ex, &ea), &eb, &ec)
                        + sl3_trilinear(&ea, &g.bracket(&ex, &eb), &ec)
                        + sl3_trilinear(&ea, &eb, &g.bracket(&ex, &ec));
                    assert!(s.is_zero());
                    if x == 0 {
                        assert_eq!(sl3_trilinear(&ea, &eb, &ec), sl3_trilinear(&eb, &ec, &ea));
                    }
                }
            }
        }
    }
    // Cartan, Cartan, root vector → 0
    for (a, b) in [(0, 0), (0, 1), (1, 1)] {
        for r in 2..8 {
            assert!(sl3_trilinear(&g.unit(a), &g.unit(b), &g.unit(r)).is_zero());
        }
    }
    // trace form: κ^{ab} on t₁ and ½t₁ + t₂ is diag(1/2, 2/3); Killing = 6 × trace form
    let k = sl3_trace_form();
    let e2 = vec![q(1, 2), qi(1), qi(0), qi(0), qi(0), qi(0), qi(0), qi(0)];
    let kf = |a: &[Q], b: &[Q]| {
        let mut s = qi(0);
        for i in 0..8 {
            for j in 0..8 {
                s += &a[i] * &b[j] * &k[i][j];
            }
        }
        s
    };
    assert_eq!(kf(&g.unit(0), &e2), qi(0));
    assert_eq!(qi(1) / kf(&g.unit(0), &g.unit(0)), q(1, 2));
    assert_eq!(qi(1) / kf(&e2, &e2), q(2, 3));
    let kill = g.killing_form();
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(kill[i][j], &k[i][j] * qi(6));
        }
    }
}

#[test]
fn linear_terms_in_the_symmetric_part_cancel() {
    let g = catalogue("sl3").unwrap();
    let lambda = q(3, 7);
    let p = Preconnection::with_symmetric(&g, sl3_symmetric_table(&lambda));
    let canon = Preconnection::canonical(&g);
    let mut quadratic_seen = false;
    for i in 0..8 {
        for j in 0..8 {
            // Ξ̂ is symmetric and the compatibility condition is untouched
            assert_eq!(p.xi_hat(&g.unit(i), &g.unit(j)), p.xi_hat(&g.unit(j), &g.unit(i)));
            assert!(p.compat_defect(&g.unit(i), &g.unit(j)).iter().all(|x| x.is_zero()));
            for k in 0..8 {
                let (v, w, z) = (g.unit(i), g.unit(j), g.unit(k));
                let [r0, r1, r2] = p.curvature_by_degree(&v, &w, &z);
                assert_eq!(r0, canon.curvature(&v, &w, &z));
                assert!(r1.iter().all(|x| x.is_zero()), "linear term at {} {} {}", i, j, k);
                quadratic_seen |= r2.iter().any(|x| !x.is_zero());
                let total: Vec<Q> = r0.iter().zip(&r2).map(|(a, b)| a + b).collect();
                assert_eq!(p.curvature(&v, &w, &z), total);
            }
        }
    }
    assert!(quadratic_seen);
}

#[test]
fn sl2_has_no_symmetric_deformation() {
    assert_eq!(sln_obstruction(2).unwrap(), Obstruction::Unique { invariant_maps: 0 });
    assert!(sln_obstruction(4).is_err());
    // abelian: every symmetric map is invariant
    assert_eq!(invariant_symmetric_maps(&catalogue("abelian(2)").unwrap()), 6);
}

// --- Mackey

struct Case {
    g: &'static str,
    on_n: Vec<Vec<Poly>>,
    funcs: Vec<Poly>,
}

fn cases() -> Vec<Case> {
    let s = Poly::var(2);
    let (u, v) = (Poly::var(3), Poly::var(4));
    vec![
        // t ↦ s∂ₛ, x ↦ s²∂ₛ
        Case { g: "bplus", on_n: vec![vec![s.clone()], vec![&s * &s]], funcs: vec![s.clone(), &(&s * &s) + &Poly::int(1)] },
        // H = u∂ᵤ − v∂ᵥ, E = u∂ᵥ, F = v∂ᵤ
        Case {
            g: "sl2",
            on_n: vec![vec![u.clone(), -&v], vec![Poly::zero(), u.clone()], vec![v.clone(), Poly::zero()]],
            funcs: vec![u.clone(), v.clone(), &u * &v],
        },
        Case { g: "sl2", on_n: vec![vec![]; 3], funcs: vec![] },
    ]
}

#[test]
fn mackey_bracket_and_preconnection_tables() {
    for case in cases() {
        let g = catalogue(case.g).unwrap();
        let n = g.dim();
        assert!(MackeyRealization::new(&g, case.on_n.clone()).is_representation());
        let table = MackeyPrecon { g: &g, on_n: &case.on_n };
        let calc = InducedCalculus::new(&mackey_cochain(&g), mackey_fields(&g, &case.on_n));
        let mut args: Vec<MackeyArg> = (0..n).map(|i| MackeyArg::g(g.unit(i))).collect();
        args.extend(case.funcs.iter().map(|f| MackeyArg::func(n, f.clone())));
        for a in &args {
            for b in &args {
                let (pa, pb) = (a.to_poly(), b.to_poly());
                assert_eq!(calc.bracket(&pa, &pb).unwrap(), table.bracket(a, b).to_poly(), "{}", case.g);
                assert_eq!(calc.nabla(&pa, &calc.d(&pb)).unwrap(), calc.d(&table.nabla(a, b).to_poly()));
                assert!(calc.compat_defect(&pa, &pb).unwrap().is_zero());
                assert!(table.compat_defect(a, b).is_zero());
                // function arguments differentiate nothing
                if a.v.iter().all(|x| x.is_zero()) {
                    assert!(table.nabla(a, b).is_zero());
                    if b.v.iter().all(|x| x.is_zero()) {
                        assert!(table.bracket(a, b).is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn mackey_bplus_example() {
    let g = catalogue("bplus").unwrap();
    let s = Poly::var(2);
    let on_n = vec![vec![s.clone()], vec![&s * &s]];
    let table = MackeyPrecon { g: &g, on_n: &on_n };
    // ∇̂_t ds = d(t▷s) = ds
    let r = table.nabla(&MackeyArg::g(g.unit(0)), &MackeyArg::func(2, s.clone()));
    assert_eq!(r.to_poly(), s);
}

#[test]
fn mackey_curvature_table() {
    for case in cases() {
        let g = catalogue(case.g).unwrap();
        let n = g.dim();
        let table = MackeyPrecon { g: &g, on_n: &case.on_n };
        let calc = InducedCalculus::new(&mackey_cochain(&g), mackey_fields(&g, &case.on_n));
        let canon = Preconnection::canonical(&g);
        let vs: Vec<MackeyArg> = (0..n).map(|i| MackeyArg::g(g.unit(i))).collect();
        let fs: Vec<MackeyArg> = case.funcs.iter().map(|f| MackeyArg::func(n, f.clone())).collect();
        let all: Vec<&MackeyArg> = vs.iter().chain(&fs).collect();
        for a in &all {
            for b in &all {
                for c in &all {
                    let r = table.curvature(a, b, c);
                    let a_is_g = a.f.is_zero();
                    let b_is_g = b.f.is_zero();
                    let c_is_g = c.f.is_zero();
                    if a_is_g && b_is_g && c_is_g {
                        assert_eq!(r, MackeyArg::g(canon.curvature(&a.v, &b.v, &c.v)));
                    } else {
                        assert!(r.is_zero(), "{} R with a function argument", case.g);
                    }
                    let induced = calc.curvature(&a.to_poly(), &b.to_poly(), &calc.d(&c.to_poly())).unwrap();
                    assert_eq!(induced, calc.d(&r.to_poly()));
                }
            }
        }
    }
}

#[test]
fn mackey_lie_derivative_formula() {
    // ∇̂_aξ = čeⁱ(a) ℒ_{čc_i + če_i/2}ξ − (čc_i + če_i/2)(a) ℒ_{čeⁱ}ξ
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in cases().into_iter().take(2) {
        let g = catalogue(case.g).unwrap();
        let n = g.dim();
        let fields = mackey_fields(&g, &case.on_n);
        let dim = fields[0].dim();
        let calc = InducedCalculus::new(&mackey_cochain(&g), fields.clone());
        let rand_poly = |rng: &mut ChaCha8Rng| {
            let mut p = Poly::zero();
            for _ in 0..3 {
                let e: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..2)).collect();
                p.add_term(Mono::new(e), &qi(rng.gen_range(-2..=2)));
            }
            p
        };
        for _ in 0..10 {
            let a = rand_poly(&mut rng);
            let xi = OneForm::new((0..dim).map(|_| rand_poly(&mut rng)).collect());
            let mut want = OneForm::zero(dim);
            for i in 0..n {
                let x: VectorField<Poly> = fields[2 * n + i].plus(&fields[i].scale(&q(1, 2)));
                let d = &fields[n + i];
                want = want.plus(&lie_derivative_form(&x, &xi).times_fn(&d.apply(&a)));
                want = want.plus(&lie_derivative_form(d, &xi).times_fn(&x.apply(&a)).scale(&qi(-1)));
            }
            assert_eq!(calc.nabla(&a, &xi).unwrap(), want, "{}", case.g);
        }
    }
}
