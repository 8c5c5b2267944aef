//! Seeded property checks.  Every generator draws from its own ChaCha8
//! stream derived from the run seed, so one property's case count never
//! shifts another's cases.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dcalc::{sphere_calculus, sym_calculus};
use crate::envalg::{letters, Envelope, Pbw};
use crate::exact::{q, qi, HSeries, Mono, Poly, Ring, SphereElem, Q};
use crate::lie::{catalogue, LieAlgebra};
use crate::report::{Check, Tally};
use crate::twist::CbhParams;

pub const CASES: usize = 200;

fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ tag)
}

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn rand_poly(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let mut e = vec![0u32; vars];
        for _ in 0..rng.gen_range(0..=deg) {
            e[rng.gen_range(0..vars)] += 1;
        }
        p.add_term(Mono::new(e), &rand_q(rng));
    }
    p
}

fn rand_sphere(rng: &mut ChaCha8Rng) -> SphereElem {
    SphereElem::new(rand_poly(rng, 2, 3), rand_poly(rng, 2, 2), rng.gen_range(0..=3))
}

fn rand_mono(rng: &mut ChaCha8Rng, vars: usize, max_deg: u32) -> Mono {
    let mut e = vec![0u32; vars];
    for _ in 0..rng.gen_range(0..=max_deg) {
        e[rng.gen_range(0..vars)] += 1;
    }
    Mono::new(e)
}

/// First violated axiom, if any.
fn axioms<R: Ring>(a: &R, b: &R, c: &R, commutative: bool) -> Option<&'static str> {
    let checks: [(&'static str, bool); 8] = [
        ("associativity of +", a.plus(b).plus(c) == a.plus(&b.plus(c))),
        ("commutativity of +", a.plus(b) == b.plus(a)),
        ("additive identity", a.plus(&R::zero()) == *a),
        ("additive inverse", a.minus(a).is_zero()),
        ("associativity of ×", a.times(b).times(c) == a.times(&b.times(c))),
        ("multiplicative identity", a.times(&R::one()) == *a && R::one().times(a) == *a),
        ("distributivity", a.times(&b.plus(c)) == a.times(b).plus(&a.times(c)) && b.plus(c).times(a) == b.times(a).plus(&c.times(a))),
        ("commutativity of ×", !commutative || a.times(b) == b.times(a)),
    ];
    checks.iter().find(|(_, ok)| !ok).map(|(n, _)| *n)
}

/// Ring axioms on ℚ, ℚ[x,y,z], the hemisphere ring and ℏ-series over ℚ[x,y].
pub fn ring_axioms(seed: u64) -> Check {
    let mut rng = stream(seed, 1);
    let mut t = Tally::default();
    for case in 0..CASES {
        let (a, b, c) = (rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        let r1 = axioms(&a, &b, &c, true);
        let (a, b, c) = (rand_poly(&mut rng, 3, 3), rand_poly(&mut rng, 3, 3), rand_poly(&mut rng, 3, 3));
        let r2 = axioms(&a, &b, &c, true);
        let (a, b, c) = (rand_sphere(&mut rng), rand_sphere(&mut rng), rand_sphere(&mut rng));
        let r3 = axioms(&a, &b, &c, true);
        let s = |rng: &mut ChaCha8Rng| HSeries::from_coeffs(2, (0..3).map(|_| rand_poly(rng, 2, 2)).collect());
        let (a, b, c) = (s(&mut rng), s(&mut rng), s(&mut rng));
        let ab = a.try_mul(&b).unwrap();
        let r4 = (ab.try_mul(&c).unwrap() != a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
            || ab != b.try_mul(&a).unwrap()
            || a.try_mul(&b.try_add(&c).unwrap()).unwrap() != ab.try_add(&a.try_mul(&c).unwrap()).unwrap())
        .then_some("series product");
        let bad = [("Q", r1), ("Poly", r2), ("SphereElem", r3), ("HSeries", r4)]
            .into_iter()
            .find_map(|(ring, r)| r.map(|ax| format!("{}: {}", ring, ax)));
        t.record(|| format!("case {}", case), "all axioms", bad.as_deref().unwrap_or("all axioms"));
    }
    t.into_check("property/ring-axioms")
}

const JACOBI_ALGEBRAS: [&str; 7] = ["abelian(3)", "heisenberg3", "sl2", "sl3", "bplus", "so13_abstract", "abelian(1)"];

/// Antisymmetry and Jacobi on random rational vectors of catalogue algebras.
pub fn jacobi(seed: u64) -> Check {
    let mut rng = stream(seed, 2);
    let algs: Vec<LieAlgebra> = JACOBI_ALGEBRAS.iter().map(|n| catalogue(n).unwrap()).collect();
    let mut t = Tally::default();
    for case in 0..CASES {
        let g = &algs[case % algs.len()];
        let v = |rng: &mut ChaCha8Rng| (0..g.dim()).map(|_| rand_q(rng)).collect::<Vec<Q>>();
        let (x, y, z) = (v(&mut rng), v(&mut rng), v(&mut rng));
        let br = |a: &[Q], b: &[Q]| g.bracket(a, b);
        let (a, b, c) = (br(&x, &br(&y, &z)), br(&y, &br(&z, &x)), br(&z, &br(&x, &y)));
        let cyc: Vec<Q> = (0..g.dim()).map(|i| &a[i] + &b[i] + &c[i]).collect();
        let anti = br(&x, &y).iter().zip(br(&y, &x)).all(|(a, b)| (a + b).is_zero());
        let ok = cyc.iter().all(|c| c.is_zero()) && anti;
        t.record(|| format!("{} case {}", g.name(), case), "0", if ok { "0" } else { "nonzero" });
    }
    t.into_check("property/jacobi")
}

type Normal = BTreeMap<(Vec<usize>, usize), Q>;

/// Brute-force rewriting that tries every out-of-order adjacent pair and
/// demands that all choices agree.
struct Rewriter<'a> {
    alg: &'a LieAlgebra,
    order: usize,
    memo: HashMap<Vec<usize>, Result<Normal, Vec<usize>>>,
}

impl Rewriter<'_> {
    fn reduce(&mut self, w: &[usize]) -> Result<Normal, Vec<usize>> {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let spots: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        let res = if spots.is_empty() {
            Ok(Normal::from([((w.to_vec(), 0), qi(1))]))
        } else {
            let mut results = Vec::new();
            for &i in &spots {
                let mut out = Normal::new();
                let mut swapped = w.to_vec();
                swapped.swap(i, i + 1);
                let sub = self.reduce(&swapped)?;
                self.add(&mut out, &sub, 0, &qi(1));
                for (k, c) in self.alg.bracket_basis(w[i], w[i + 1]).to_vec() {
                    let mut nw = w[..i].to_vec();
                    nw.push(k);
                    nw.extend_from_slice(&w[i + 2..]);
                    let sub = self.reduce(&nw)?;
                    self.add(&mut out, &sub, 1, &c);
                }
                results.push(out);
            }
            if results.iter().all(|r| r == &results[0]) {
                Ok(results.swap_remove(0))
            } else {
                Err(w.to_vec())
            }
        };
        self.memo.insert(w.to_vec(), res.clone());
        res
    }

    fn add(&self, out: &mut Normal, src: &Normal, shift: usize, c: &Q) {
        for ((w, k), v) in src {
            if k + shift > self.order {
                continue;
            }
            let key = (w.clone(), k + shift);
            let e = out.entry(key.clone()).or_insert_with(|| qi(0));
            *e += v * c;
            if e.is_zero() {
                out.remove(&key);
            }
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

/// Normal forms of random words (length ≤ 4) against exhaustive rewriting.
pub fn pbw_confluence(seed: u64) -> Check {
    let mut rng = stream(seed, 3);
    let names = ["sl2", "sl3", "heisenberg3", "bplus", "so13_abstract"];
    let algs: Vec<LieAlgebra> = names.iter().map(|n| catalogue(n).unwrap()).collect();
    let envs: Vec<Envelope> = algs.iter().map(|g| Envelope::new(g, 4)).collect();
    let mut rws: Vec<Rewriter> = algs.iter().map(|g| Rewriter { alg: g, order: 4, memo: HashMap::new() }).collect();
    let mut t = Tally::default();
    for case in 0..CASES {
        let a = case % algs.len();
        let len = rng.gen_range(0..=4);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..algs[a].dim())).collect();
        let got = to_normal(&envs[a].normalize(&w));
        let (e, g) = match rws[a].reduce(&w) {
            Ok(want) if want == got => ("agree".to_string(), "agree".to_string()),
            Ok(want) => (format!("{:?}", want), format!("{:?}", got)),
            Err(at) => ("confluent".to_string(), format!("rewrite order matters at {:?}", at)),
        };
        t.record(|| format!("{} {:?}", names[a], w), &e, &g);
    }
    t.into_check("property/pbw-confluence")
}

/// (a⋆b)⋆c = a⋆(b⋆c) through ℏ^order for random monomials of degree ≤ max_deg.
pub fn star_associativity(seed: u64, order: usize, max_deg: u32) -> Check {
    let mut rng = stream(seed, 4);
    let names = ["sl2", "heisenberg3", "bplus"];
    let algs: Vec<LieAlgebra> = names.iter().map(|n| catalogue(n).unwrap()).collect();
    let envs: Vec<Envelope> = algs.iter().map(|g| Envelope::new(g, order)).collect();
    let mut t = Tally::default();
    for case in 0..CASES {
        let a = case % algs.len();
        let env = &envs[a];
        let m: Vec<Mono> = (0..3).map(|_| rand_mono(&mut rng, algs[a].dim(), max_deg)).collect();
        let c = |m: &Mono| env.constant(Poly::term(m.clone(), qi(1)));
        let (x, y, z) = (c(&m[0]), c(&m[1]), c(&m[2]));
        let l = env.star(&env.star(&x, &y), &z);
        let r = env.star(&x, &env.star(&y, &z));
        t.record(|| format!("{} {:?}", names[a], m), &format!("{:?}", l), &format!("{:?}", r));
    }
    t.into_check("property/star-associativity")
}

/// d(a•b) = da•b + a•db under the CBH cochain on S(g) and the sphere cochain.
pub fn leibniz(seed: u64, alpha: &Q) -> Check {
    let mut rng = stream(seed, 5);
    let names = ["sl2", "bplus", "heisenberg3"];
    let algs: Vec<LieAlgebra> = names.iter().map(|n| catalogue(n).unwrap()).collect();
    let calcs: Vec<_> = algs.iter().map(|g| sym_calculus(g, &CbhParams::improved(alpha.clone()), 2).unwrap()).collect();
    let sphere = sphere_calculus(2);
    let mut t = Tally::default();
    for case in 0..CASES {
        if case % 4 == 3 {
            let (a, b) = (rand_sphere(&mut rng), rand_sphere(&mut rng));
            let ok = sphere.leibniz_defect(&a, &b).map(|d| d.iter().all(|f| f.is_zero()));
            t.record(|| format!("sphere {} , {}", a, b), "0", &render_ok(ok));
        } else {
            let i = case % 4;
            let (a, b) = (rand_poly(&mut rng, algs[i].dim(), 3), rand_poly(&mut rng, algs[i].dim(), 3));
            let ok = calcs[i].leibniz_defect(&a, &b).map(|d| d.iter().all(|f| f.is_zero()));
            t.record(|| format!("{} {:?} , {:?}", names[i], a, b), "0", &render_ok(ok));
        }
    }
    t.into_check("property/leibniz")
}

fn render_ok<E: std::fmt::Display>(r: Result<bool, E>) -> String {
    match r {
        Ok(true) => "0".into(),
        Ok(false) => "nonzero defect".into(),
        Err(e) => format!("error: {}", e),
    }
}
