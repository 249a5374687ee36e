//! Cross-checks of the Gröbner engine against degree-by-degree linear algebra.

use std::collections::HashMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regulus_gb::{
    buchberger_gb, eliminate, is_groebner_basis, module_map_kernel, syzygies, FreeModule,
    GroebnerBasis, ModElem, ModuleOrder, Mono, MonomialOrder, Poly, PrimeField, Ring,
};

const P: u32 = 32003;

fn monomials(n: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Mono::from_exps(cur).unwrap());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Row echelon form over F_p with incremental insertion.
struct Echelon {
    f: PrimeField,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            f: PrimeField::new(P).unwrap(),
            rows: Vec::new(),
        }
    }

    fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        for (p, r) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(r) {
                    *a = self.f.sub(*a, self.f.mul(c, *b));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u32>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = self.f.inv(v[p]);
        for a in v.iter_mut() {
            *a = self.f.mul(*a, inv);
        }
        for (_, r) in self.rows.iter_mut() {
            let c = r[p];
            if c != 0 {
                for (a, b) in r.iter_mut().zip(&v) {
                    *a = self.f.sub(*a, self.f.mul(c, *b));
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn contains(&self, v: Vec<u32>) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Coordinates of degree-`d` parts over the basis `(component, monomial)`.
struct Basis {
    index: HashMap<(u32, Mono), usize>,
}

impl Basis {
    fn new(n: usize, twists: &[i32], d: i32) -> Self {
        let mut index = HashMap::new();
        for (c, &t) in twists.iter().enumerate() {
            if d >= t {
                for m in monomials(n, (d - t) as u32) {
                    let k = index.len();
                    index.insert((c as u32, m), k);
                }
            }
        }
        Basis { index }
    }

    fn vector(&self, e: &ModElem) -> Vec<u32> {
        let mut v = vec![0; self.index.len()];
        for (c, m, x) in e.terms() {
            v[self.index[&(*c, m.clone())]] = *x;
        }
        v
    }
}

/// The degree-`d` part of the submodule generated by `gens`.
fn span(r: &Ring, twists: &[i32], gens: &[ModElem], d: i32) -> (Basis, Echelon) {
    let basis = Basis::new(r.nvars(), twists, d);
    let module = FreeModule::new(twists.iter().map(|&t| regulus_gb::Deg(t, 0)).collect());
    let mut ech = Echelon::new();
    for g in gens {
        let Some(dg) = g.homogeneous_degree(r, &module) else {
            continue;
        };
        if dg.0 > d {
            continue;
        }
        for m in monomials(r.nvars(), (d - dg.0) as u32) {
            let e = g.scale_poly(&Poly::monomial(m, 1), r);
            ech.insert(basis.vector(&e));
        }
    }
    (basis, ech)
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, d: u32, terms: usize) -> Vec<(Mono, u32)> {
    let monos = monomials(n, d);
    (0..terms)
        .map(|_| (monos[rng.gen_range(0..monos.len())].clone(), rng.gen_range(1..P)))
        .collect()
}

fn random_ideal(seed: u64, n: usize, count: usize, max_deg: u32) -> (Ring, Vec<ModElem>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = Ring::indexed("x", n, P).unwrap();
    let gens = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            let t = rng.gen_range(1..=3);
            let p = Poly::from_terms(&r, random_poly(&mut rng, n, d, t));
            ModElem::from_poly(0, &p)
        })
        .filter(|g| !g.is_zero())
        .collect();
    (r, gens)
}

fn grevlex() -> ModuleOrder {
    ModuleOrder::top(MonomialOrder::GRevLex, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduced_basis_satisfies_buchberger(seed in any::<u64>(), lex in any::<bool>()) {
        let (r, gens) = random_ideal(seed, 3, 3, 3);
        let mono = if lex { MonomialOrder::Lex } else { MonomialOrder::GRevLex };
        let order = ModuleOrder::top(mono, 1);
        let gb = buchberger_gb(&r, &gens, &order).unwrap();
        prop_assert!(is_groebner_basis(&r, &gb, &order).unwrap());
        let basis = GroebnerBasis::from_basis(&r, &order, &gb).unwrap();
        for g in &gens {
            prop_assert!(basis.contains(g).unwrap());
        }
        let leads = basis.leads();
        for (i, a) in leads.iter().enumerate() {
            for (j, b) in leads.iter().enumerate() {
                prop_assert!(i == j || !a.1.divides(&b.1));
            }
        }
        // Determinism.
        prop_assert_eq!(gb, buchberger_gb(&r, &gens, &order).unwrap());
    }

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>()) {
        let (r, gens) = random_ideal(seed, 3, 3, 3);
        let order = grevlex();
        let basis = GroebnerBasis::compute(&r, &order, &gens).unwrap();
        let leads = basis.leads();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for d in 0..=6 {
            let (b, ech) = span(&r, &[0], &gens, d);
            // Standard monomials count the quotient in every degree.
            let standard = monomials(3, d as u32)
                .into_iter()
                .filter(|m| !leads.iter().any(|(_, l)| l.divides(m)))
                .count();
            prop_assert_eq!(standard + ech.rank(), b.index.len());
            for _ in 0..4 {
                let f = ModElem::from_poly(0, &Poly::from_terms(&r, random_poly(&mut rng, 3, d as u32, 3)));
                let member = basis.contains(&f).unwrap();
                prop_assert_eq!(member, ech.contains(b.vector(&f)));
            }
        }
    }

    #[test]
    fn syzygies_match_kernels(seed in any::<u64>()) {
        let (r, gens) = random_ideal(seed, 3, 3, 2);
        prop_assume!(!gens.is_empty());
        let (src, syz) = syzygies(&r, &FreeModule::trivial(1), &gens).unwrap();
        for z in &syz {
            let coeffs = z.to_polys(gens.len());
            prop_assert!(ModElem::combination(&r, &coeffs, &gens).is_zero());
        }
        let twists: Vec<i32> = src.twists.iter().map(|d| d.0).collect();
        for d in 0..=6 {
            // Kernel of the degree-d map by brute force: dim source - rank of image.
            let sb = Basis::new(3, &twists, d);
            let mut image = Echelon::new();
            let tb = Basis::new(3, &[0], d);
            for (c, m) in sb.index.keys() {
                let e = gens[*c as usize].scale_poly(&Poly::monomial(m.clone(), 1), &r);
                image.insert(tb.vector(&e));
            }
            let kernel_dim = sb.index.len() - image.rank();
            let (_, syz_span) = span(&r, &twists, &syz, d);
            prop_assert_eq!(syz_span.rank(), kernel_dim);
        }
    }

    #[test]
    fn elimination_matches_intersection(seed in any::<u64>()) {
        let (r, gens) = random_ideal(seed, 3, 3, 2);
        let polys: Vec<Poly> = gens.iter().map(|g| g.component(0)).collect();
        let elim = eliminate(&r, &polys, 2).unwrap();
        for p in &elim {
            prop_assert!(p.terms().iter().all(|(m, _)| m.get(0) == 0));
        }
        // The eliminated ideal lives in k[x1, x2].
        let sub = Ring::indexed("x", 2, P).unwrap();
        let elim_elems: Vec<ModElem> = elim
            .iter()
            .map(|p| {
                let q = Poly::from_terms(&sub, p.terms().iter().map(|(m, c)| (m.project(1..3), *c)));
                ModElem::from_poly(0, &q)
            })
            .collect();
        for d in 0..=5 {
            let (b, ech) = span(&r, &[0], &gens, d);
            // dim(I_d ∩ k[x1,x2]) = rank(I_d) - rank of the projection onto x0-monomials.
            let mut proj = Echelon::new();
            for (_, row) in &ech.rows {
                let v: Vec<u32> = b
                    .index
                    .iter()
                    .map(|((_, m), &k)| if m.get(0) > 0 { row[k] } else { 0 })
                    .collect();
                proj.insert(v);
            }
            let expect = ech.rank() - proj.rank();
            let (_, got) = span(&sub, &[0], &elim_elems, d);
            prop_assert_eq!(got.rank(), expect, "degree {}", d);
        }
    }
}

fn parse(r: &Ring, s: &str) -> Poly {
    Poly::parse(r, s).unwrap()
}

/// Kernel dimension of `k[y]_d -> B`, `y_j -> images[j]`, by linear algebra.
fn ring_map_kernel_dim(t: &Ring, b: &Ring, images: &[Poly], d: u32, target_deg: u32) -> usize {
    let src = monomials(t.nvars(), d);
    let tb = Basis::new(b.nvars(), &[0], target_deg as i32);
    let mut ech = Echelon::new();
    for m in &src {
        let img = Poly::monomial(m.clone(), 1).substitute(t, images, b);
        ech.insert(tb.vector(&ModElem::from_poly(0, &img)));
    }
    src.len() - ech.rank()
}

#[test]
fn conic_relation_is_the_whole_degree_two_kernel() {
    let s = Ring::standard(&["x", "y"], P).unwrap();
    let t = Ring::standard(&["y0", "y1", "y2"], P).unwrap();
    let images = [parse(&s, "x^2"), parse(&s, "x*y"), parse(&s, "y^2")];
    assert_eq!(ring_map_kernel_dim(&t, &s, &images, 2, 4), 1);
    let q = parse(&t, "y0*y2 - y1^2");
    assert!(q.substitute(&t, &images, &s).is_zero());
    let k = module_map_kernel(&s, &[parse(&s, "1")], &t, &images).unwrap();
    assert_eq!(k.gens.len(), 1);
    let gb = GroebnerBasis::compute(&t, &grevlex(), &k.gens).unwrap();
    assert!(gb.contains(&ModElem::from_poly(0, &q)).unwrap());
}

#[test]
fn twisted_cubic_relations_span_degree_two_kernel() {
    let s = Ring::standard(&["x", "y"], P).unwrap();
    let t = Ring::standard(&["y0", "y1", "y2", "y3"], P).unwrap();
    let images = [
        parse(&s, "x^3"),
        parse(&s, "x^2*y"),
        parse(&s, "x*y^2"),
        parse(&s, "y^3"),
    ];
    assert_eq!(ring_map_kernel_dim(&t, &s, &images, 2, 6), 3);
    let k = module_map_kernel(&s, &[parse(&s, "1")], &t, &images).unwrap();
    let (_, ech) = span(&t, &[0], &k.gens, 2);
    assert_eq!(ech.rank(), 3);
}

#[test]
fn slice_kernel_matches_low_degree_linear_algebra() {
    let s = Ring::standard(&["x", "y"], P).unwrap();
    let t = Ring::standard(&["y0", "y1", "y2"], P).unwrap();
    let images = [parse(&s, "x^2"), parse(&s, "x*y"), parse(&s, "y^2")];
    let targets = [parse(&s, "x"), parse(&s, "y")];
    let k = module_map_kernel(&s, &targets, &t, &images).unwrap();
    for d in 0..=4u32 {
        // Source T_d^2 maps to S_{2d+1}.
        let sb = Basis::new(3, &[0, 0], d as i32);
        let tb = Basis::new(2, &[0], (2 * d + 1) as i32);
        let mut image = Echelon::new();
        for (c, m) in sb.index.keys() {
            let img = Poly::monomial(m.clone(), 1)
                .substitute(&t, &images, &s)
                .mul(&targets[*c as usize], &s);
            image.insert(tb.vector(&ModElem::from_poly(0, &img)));
        }
        let kernel_dim = sb.index.len() - image.rank();
        let (_, got) = span(&t, &[0, 0], &k.gens, d as i32);
        assert_eq!(got.rank(), kernel_dim, "degree {d}");
    }
}

#[test]
fn quadric_syzygies_in_degree_three() {
    let r = Ring::standard(&["x", "y"], P).unwrap();
    let gens: Vec<ModElem> = ["x^2", "x*y", "y^2"]
        .iter()
        .map(|s| ModElem::from_poly(0, &parse(&r, s)))
        .collect();
    let (_, syz) = syzygies(&r, &FreeModule::trivial(1), &gens).unwrap();
    let (_, ech) = span(&r, &[2, 2, 2], &syz, 3);
    assert_eq!(ech.rank(), 2);
}

