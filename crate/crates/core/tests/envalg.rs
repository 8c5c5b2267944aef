use std::collections::{BTreeMap, HashMap};

use twistlab::envalg::*;
use twistlab::exact::{q, qi, HSeries, Mono, Poly, Q};
use twistlab::lie::{catalogue, LieAlgebra};

type Normal = BTreeMap<(Vec<usize>, usize), Q>;

/// Rewrites a word by trying *every* out-of-order adjacent pair and checks
/// that all choices lead to the same normal form.
struct Rewriter<'a> {
    alg: &'a LieAlgebra,
    order: usize,
    memo: HashMap<Vec<usize>, Normal>,
}

impl<'a> Rewriter<'a> {
    fn reduce(&mut self, w: &[usize]) -> Normal {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let spots: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        let res = if spots.is_empty() {
            let mut n = Normal::new();
            n.insert((w.to_vec(), 0), qi(1));
            n
        } else {
            let mut results = Vec::new();
            for &i in &spots {
                let mut out = Normal::new();
                let mut swapped = w.to_vec();
                swapped.swap(i, i + 1);
                add(&mut out, &self.reduce(&swapped), 0, &qi(1), self.order);
                for (k, c) in self.alg.bracket_basis(w[i], w[i + 1]) {
                    let mut nw = w[..i].to_vec();
                    nw.push(*k);
                    nw.extend_from_slice(&w[i + 2..]);
                    let sub = self.reduce(&nw);
                    add(&mut out, &sub, 1, c, self.order);
                }
                results.push(out);
            }
            for r in &results[1..] {
                assert_eq!(r, &results[0], "rewrite order matters for {:?}", w);
            }
            results.swap_remove(0)
        };
        self.memo.insert(w.to_vec(), res.clone());
        res
    }
}

fn add(out: &mut Normal, src: &Normal, shift: usize, c: &Q, order: usize) {
    for ((w, k), v) in src {
        if k + shift > order {
            continue;
        }
        let e = out.entry((w.clone(), k + shift)).or_insert_with(|| qi(0));
        *e += v * c;
        if *e == qi(0) {
            out.remove(&(w.clone(), k + shift));
        }
    }
}

fn to_normal(p: &Pbw) -> Normal {
    let mut n = Normal::new();
    for (k, poly) in p.coeffs().iter().enumerate() {
        for (m, c) in poly.terms() {
            n.insert((letters(m), k), c.clone());
        }
    }
    n
}

fn words(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..dim).map(move |l| [w.clone(), vec![l]].concat())).collect();
    }
    out
}

fn monos(dim: usize, deg: u32) -> Vec<Mono> {
    fn rec(dim: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i == dim - 1 {
            cur.push(left);
            out.push(Mono::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(dim, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, 0, deg, &mut Vec::new(), &mut out);
    out
}

fn mono(e: &[u32]) -> Mono {
    Mono::new(e.to_vec())
}

#[test]
fn normal_forms_are_confluent() {
    for name in ["sl2", "heisenberg3", "bplus", "sl3"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 4);
        let mut rw = Rewriter { alg: &alg, order: 4, memo: HashMap::new() };
        let max = if name == "sl3" { 3 } else { 4 };
        for len in 0..=max {
            for w in words(alg.dim(), len) {
                assert_eq!(to_normal(&env.normalize(&w)), rw.reduce(&w), "{} {:?}", name, w);
            }
        }
    }
}

#[test]
fn phi_hef_is_the_permutation_average() {
    let sl2 = catalogue("sl2").unwrap();
    let env = Envelope::new(&sl2, 2);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut want = HSeries::zero(2);
    for p in perms {
        want = want.try_add(&env.normalize(&p)).unwrap();
    }
    let want = want.scale(&q(1, 6));
    assert_eq!(env.symmetrize_mono(&mono(&[1, 1, 1])), want);
}

#[test]
fn unsymmetrize_inverts_symmetrize() {
    for name in ["sl2", "bplus", "heisenberg3"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 4);
        for d in 0..=6 {
            for m in monos(alg.dim(), d) {
                let s = env.constant(Poly::term(m.clone(), qi(1)));
                assert_eq!(env.unsymmetrize(&env.symmetrize(&s)), s, "{} {:?}", name, m);
            }
        }
    }
    let one = Envelope::new(&catalogue("sl2").unwrap(), 3).constant(Poly::int(1));
    assert_eq!(Envelope::new(&catalogue("sl2").unwrap(), 3).unsymmetrize(&one), one);
}

#[test]
fn generators_star() {
    for name in ["sl2", "sl3", "heisenberg3", "bplus", "so13_abstract"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 3);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let s = env.star_mono(&Mono::var(i), &Mono::var(j));
                let mut want = HSeries::constant(3, &Poly::var(i) * &Poly::var(j));
                want.set(1, alg.bracket_lin(&Poly::var(i), &Poly::var(j)).scale(&q(1, 2)));
                assert_eq!(s, want, "{} {} {}", name, i, j);
            }
        }
    }
}

#[test]
fn abelian_star_is_plain_product() {
    let a = catalogue("abelian(3)").unwrap();
    let env = Envelope::new(&a, 3);
    for x in monos(3, 2) {
        for y in monos(3, 3) {
            assert_eq!(env.star_mono(&x, &y), env.constant(Poly::term(x.mul(&y), qi(1))));
        }
    }
}

#[test]
fn v_squared_star_w_has_unit_h_coefficient() {
    // φ(v²)φ(w) = φ(v²w) + ℏφ(v[v,w]) + ℏ²φ([v,[v,w]])/6 in sl2 with v = H, w = E
    let sl2 = catalogue("sl2").unwrap();
    let env = Envelope::new(&sl2, 2);
    let s = env.star_mono(&mono(&[2]), &mono(&[0, 1]));
    let (h, e) = (Poly::var(0), Poly::var(1));
    let vw = sl2.bracket_lin(&h, &e);
    assert_eq!(s.coeff(1), &(&h * &vw));
    assert_eq!(s.coeff(2), &sl2.bracket_lin(&h, &vw).scale(&q(1, 6)));
}

fn prop_grid(name: &str, max: u32) {
    let alg = catalogue(name).unwrap();
    let env = Envelope::new(&alg, 2);
    for m in 0..=max {
        for n in 0..=max {
            for w in monos(alg.dim(), m) {
                for v in monos(alg.dim(), n) {
                    let want = env.star_mono(&w, &v);
                    let got = star_closed_form(&alg, &w, &v, 2).unwrap();
                    assert_eq!(got, want, "{} {:?} {:?}", name, w, v);
                }
            }
        }
    }
}

#[test]
fn closed_form_sl2() {
    prop_grid("sl2", 4);
}

#[test]
fn closed_form_bplus() {
    prop_grid("bplus", 4);
}

#[test]
fn closed_form_heisenberg() {
    prop_grid("heisenberg3", 3);
}

#[test]
fn closed_form_sl3() {
    prop_grid("sl3", 3);
}

#[test]
fn single_letter_lemma() {
    for name in ["sl2", "sl3", "bplus"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 2);
        for n in 0..=4 {
            for v in monos(alg.dim(), n) {
                for w in 0..alg.dim() {
                    assert_eq!(single_letter_star(&alg, w, &v), env.star_mono(&Mono::var(w), &v));
                }
            }
        }
    }
}

#[test]
fn bplus_phi_expansions() {
    // x first, so that the ordered monomials are xⁿtᵐ
    let b = catalogue("bplus").unwrap().permuted(&[1, 0]);
    let env = Envelope::new(&b, 3);
    let swap = |s: &HSeries<Poly>| s.map(|p| p.subst(&[Some(Poly::var(1)), Some(Poly::var(0))]));
    for n in 0..=5 {
        for m in 0..=5 {
            let xm = Mono::new(vec![n, m]);
            assert_eq!(swap(&env.symmetrize_mono(&xm)), bplus_phi_closed(n, m), "phi {} {}", n, m);
            let u = env.monomial(xm.clone());
            assert_eq!(swap(&env.unsymmetrize(&u)), bplus_phi_inv_closed(n, m), "phi^-1 {} {}", n, m);
        }
    }
}

#[test]
fn bplus_closed_product_grid() {
    let b = catalogue("bplus").unwrap();
    let env = Envelope::new(&b, 3);
    for n in 0..=4 {
        for m in 0..=4 {
            for r in 0..=4 {
                for s in 0..=4 {
                    let want = env.star_mono(&Mono::new(vec![m, n]), &Mono::new(vec![s, r]));
                    let got = bplus_star_closed_form(n, m, r, s, 3).unwrap();
                    assert_eq!(got, want, "{} {} {} {}", n, m, r, s);
                }
            }
        }
    }
}

#[test]
fn bplus_cbh_closed_form() {
    let b = catalogue("bplus").unwrap();
    for order in 0..=4 {
        let (l, r) = bplus_cbh_sides(&b, order, order as u32 + 2);
        assert_eq!(l, r, "order {}", order);
    }
    let (l, r) = bplus_cbh_sides(&b, 3, 5);
    let z = Some(qi(0));
    // commuting directions
    let tt = specialise(&l, [None, z.clone(), None, z.clone()]);
    assert_eq!(tt, specialise(&r, [None, z.clone(), None, z.clone()]));
    assert!(tt.coeffs()[1..].iter().all(|p| p.is_zero()));
    let xx = specialise(&l, [z.clone(), None, z.clone(), None]);
    assert!(xx.coeffs()[1..].iter().all(|p| p.is_zero()));
    let one = Some(qi(1));
    let pick = [one.clone(), z, one.clone(), one];
    assert_eq!(specialise(&l, pick.clone()), specialise(&r, pick));
}

fn random_monos(alg: &LieAlgebra, seed: u64, count: usize, max_deg: u32) -> Vec<Mono> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            let mut e = vec![0u32; alg.dim()];
            for _ in 0..d {
                e[rng.gen_range(0..alg.dim())] += 1;
            }
            Mono::new(e)
        })
        .collect()
}

#[test]
fn star_is_associative() {
    for name in ["sl2", "heisenberg3", "bplus"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 3);
        let ms = random_monos(&alg, 7, 60, 4);
        for t in ms.chunks(3) {
            let c = |m: &Mono| env.constant(Poly::term(m.clone(), qi(1)));
            let (a, b, cc) = (c(&t[0]), c(&t[1]), c(&t[2]));
            assert_eq!(env.star(&env.star(&a, &b), &cc), env.star(&a, &env.star(&b, &cc)));
        }
    }
}

#[test]
fn semiclassical_limit_is_kirillov_kostant() {
    for name in ["sl2", "heisenberg3", "bplus"] {
        let alg = catalogue(name).unwrap();
        let env = Envelope::new(&alg, 1);
        let pb = |a: &Poly, b: &Poly| {
            let mut out = Poly::zero();
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let br = alg.bracket_lin(&Poly::var(i), &Poly::var(j));
                    out.add_assign(&(&(&a.partial(i) * &b.partial(j)) * &br));
                }
            }
            out
        };
        for d1 in 0..=3 {
            for d2 in 0..=3 {
                for x in monos(alg.dim(), d1) {
                    for y in monos(alg.dim(), d2) {
                        let ab = env.star_mono(&x, &y);
                        let ba = env.star_mono(&y, &x);
                        let diff = ab.try_sub(&ba).unwrap();
                        let (px, py) = (Poly::term(x.clone(), qi(1)), Poly::term(y.clone(), qi(1)));
                        assert!(diff.coeff(0).is_zero());
                        assert_eq!(diff.coeff(1), &pb(&px, &py));
                    }
                }
            }
        }
    }
}
