use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistlab::exact::{q, qi, HSeries, Poly, Ring, SphereElem, Q};
use twistlab::geom::*;
use twistlab::sphere::*;
use twistlab::twist::{PlainU, QuasiLieData};

type S = SphereElem;

fn rand_poly(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..4 {
        let e: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..=deg)).collect();
        p.add_term(twistlab::exact::Mono::new(e), &qi(rng.gen_range(-3..=3)));
    }
    p
}

fn rand_field(rng: &mut ChaCha8Rng, n: usize) -> VectorField<Poly> {
    VectorField::new((0..n).map(|_| rand_poly(rng, n, 2)).collect())
}

#[test]
fn lie_derivative_is_an_action_and_leibniz() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let (x, y) = (rand_field(&mut rng, 2), rand_field(&mut rng, 2));
        let f = rand_poly(&mut rng, 2, 3);
        let xi = OneForm::new(vec![rand_poly(&mut rng, 2, 2), rand_poly(&mut rng, 2, 2)]);
        let xy = vf_bracket(&x, &y);
        assert_eq!(xy.apply(&f), x.apply(&y.apply(&f)).minus(&y.apply(&x.apply(&f))));
        let lhs = lie_derivative_form(&xy, &xi);
        let rhs = lie_derivative_form(&x, &lie_derivative_form(&y, &xi))
            .plus(&lie_derivative_form(&y, &lie_derivative_form(&x, &xi)).scale(&qi(-1)));
        assert_eq!(lhs, rhs);
        let lhs = lie_derivative_form(&x, &xi.times_fn(&f));
        let rhs = xi.times_fn(&x.apply(&f)).plus(&lie_derivative_form(&x, &xi).times_fn(&f));
        assert_eq!(lhs, rhs);
        // ℒ commutes with d
        assert_eq!(lie_derivative_form(&x, &OneForm::exact(&f, 2)), OneForm::exact(&x.apply(&f), 2));
    }
}

#[test]
fn compatibility_holds_for_random_pairs() {
    // f·U⊗V − U⊗f·V leaves ω alone but bends Γ for any function f
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let mut pairs: Vec<Pair<Poly>> = vec![(VectorField::coord(2, 0), VectorField::coord(2, 1))];
        let (u, v) = (rand_field(&mut rng, 2), rand_field(&mut rng, 2));
        let f = rand_poly(&mut rng, 2, 3);
        pairs.push((u.times_fn(&f), v.clone()));
        pairs.push((u, v.times_fn(&f).scale(&qi(-1))));
        let c = christoffel_from_cochain(&pairs, 2).unwrap();
        assert!(c.compatibility_failures().is_empty());
    }
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

#[test]
fn inverse_builder_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [2usize, 4] {
        for _ in 0..(if n == 2 { 10 } else { 3 }) {
            let target = random_symmetric(&mut rng, n);
            let (_, pairs) = r2n_inverse_builder(&target).unwrap();
            let c = christoffel_from_cochain(&pairs, n).unwrap();
            // ω is still the standard one
            let w = standard_omega(n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(c.omega[i][j], Poly::constant(w[i][j].clone()));
                }
            }
            assert_eq!(lowered_constant_christoffel(&c).unwrap(), target);
            assert!(c.torsion_free());
            assert!(c.compatibility_failures().is_empty());
            assert!(closedness_defect(&c.omega, &c.omega_inv).iter().all(|d| d.is_zero()));
            // curvature: coordinate formula against the constant closed form
            let r = c.curvature();
            let closed = r2n_curvature_closed_form(&w, &target);
            for a in 0..n {
                for b in 0..n {
                    for cc in 0..n {
                        for d in 0..n {
                            assert_eq!(r[a][b][cc][d], Poly::constant(closed[a][b][cc][d].clone()));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn single_generator_builder() {
    let mut t = vec![vec![vec![qi(0); 2]; 2]; 2];
    t[0][0][0] = qi(1);
    let (triples, pairs) = r2n_inverse_builder(&t).unwrap();
    assert!(triples.iter().all(|tr| tr.u == tr.v && tr.v.iter().zip(&tr.w).all(|(a, b)| b == &(a * q(1, 6)))));
    let c = christoffel_from_cochain(&pairs, 2).unwrap();
    assert_eq!(lowered_constant_christoffel(&c).unwrap(), t);
}

#[test]
fn non_constant_connection_is_rejected() {
    let pairs: Vec<Pair<Poly>> = vec![
        (VectorField::coord(2, 0), VectorField::coord(2, 1)),
        (VectorField::coord(2, 0).times_fn(&(&Poly::var(0) * &Poly::var(0))), VectorField::coord(2, 0)),
    ];
    let c = christoffel_from_cochain(&pairs, 2).unwrap();
    assert_eq!(lowered_constant_christoffel(&c), Err(GeomError::NotConstant));
}

#[test]
fn sphere_brackets() {
    let f = sphere_fields();
    assert!(bracket_table_failures().is_empty());
    assert_eq!(vf_bracket(&f[0], &f[1]), f[5]);
    assert!(vf_bracket(&f[5], &f[5]).is_zero());
    assert!(vf_bracket(&f[3], &f[0]).is_zero());
    assert_eq!(vf_bracket(&f[3], &f[4]), f[5].scale(&qi(-1)));
}

#[test]
fn sphere_geometry_matches_the_tables() {
    let g = sphere_geometry();
    assert!(g.christoffel_diffs.is_empty(), "{:?}", g.christoffel_diffs);
    assert!(g.metric_defect.iter().all(|m| m.is_zero()));
    assert!(g.torsion_free);
    assert!(g.compat_failures.is_empty());
    assert!(g.curvature_diffs.is_empty());
    assert_eq!(g.curvature_at_origin[0][1][0][1], qi(1));
    assert_eq!(g.curvature_at_origin[0][1][1][0], qi(-1));
    assert!(jacobi_defect(&g.connection.omega).iter().all(|d| d.is_zero()));
    assert_eq!(g.connection.omega_inv[0][1], S::zinv());
}

#[test]
fn lemma_psi_reduces_to_zero() {
    let full = psi_reduction(&[1, 2, 3]);
    assert!(full.iter().flatten().flatten().all(|c| c.is_zero()));
    for drop in 1..=3 {
        let blocks: Vec<usize> = (1..=3).filter(|&b| b != drop).collect();
        assert!(psi_reduction(&blocks).iter().flatten().flatten().any(|c| !c.is_zero()));
    }
    assert!(psi_is_coassociator());
    // ψ itself is not zero before reduction
    let c = sphere_cochain();
    let u = PlainU::new(&c.algebra, 8);
    assert!(!u.reduce(&psi_tensor(&[1, 2, 3])).is_empty());
    assert!(!QuasiLieData::new(&c).psi.is_empty());
}

#[test]
fn star_matches_monomial_formula() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    let got = sphere_star(&monomial(a, b), &monomial(c, d), 2);
                    let want = monomial_formula(a, b, c, d).unwrap();
                    assert_eq!(got, want, "x^{} y^{} • x^{} y^{}", a, b, c, d);
                }
            }
        }
    }
}

#[test]
fn star_examples() {
    let (x, y) = (S::x(), S::y());
    let xy = sphere_star(&x, &y, 2);
    let yx = sphere_star(&y, &x, 2);
    assert_eq!(xy.coeff(1).minus(yx.coeff(1)), -&S::z());
    let xx = sphere_star(&x, &x, 2);
    assert_eq!(xx.coeff(2), &(&(&x * &x).scale(&q(3, 8)) - &S::constant(q(1, 8))));
    let g = &(&x * &y) + &S::z();
    let one = sphere_star(&S::int(1), &g, 2);
    assert_eq!(one, HSeries::constant(2, g.clone()));
}

#[test]
fn star_is_associative_to_second_order() {
    let mut monos = Vec::new();
    for a in 0..=2 {
        for b in 0..=2 - a {
            monos.push((a, b));
        }
    }
    for &(a, b) in &monos {
        for &(c, d) in &monos {
            for &(e, f) in &monos {
                if a + b + c + d + e + f > 4 {
                    continue;
                }
                let (p, r, s) = (
                    HSeries::constant(2, monomial(a, b)),
                    HSeries::constant(2, monomial(c, d)),
                    HSeries::constant(2, monomial(e, f)),
                );
                let left = sphere_star_series(&sphere_star_series(&p, &r), &s);
                let right = sphere_star_series(&p, &sphere_star_series(&r, &s));
                assert_eq!(left, right, "{:?}", ((a, b), (c, d), (e, f)));
            }
        }
    }
}

#[test]
fn second_order_and_fedosov_comparison() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    let (f, g) = (monomial(a, b), monomial(c, d));
                    let (lhs, rhs) = second_order_at_origin(&f, &g);
                    assert_eq!(lhs, rhs);
                    let (fed, metric_term) = fedosov_terms_at_origin(&f, &g);
                    assert_eq!(lhs - fed, -metric_term);
                }
            }
        }
    }
}
