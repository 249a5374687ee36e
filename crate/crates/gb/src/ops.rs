//! Syzygies, elimination, module-map kernels, colon ideals and intersections.
//!
//! All of these reduce to one Gröbner computation in an augmented module or
//! an auxiliary ring and insist on homogeneous input.

use crate::groebner::{minimal_generators, GroebnerBasis};
use crate::mono::Mono;
use crate::order::{ModuleOrder, MonomialOrder};
use crate::poly::{FreeModule, ModElem, Poly};
use crate::ring::{Deg, Grading, Ring};
use crate::GbError;

fn elem_degree(ring: &Ring, module: &FreeModule, g: &ModElem) -> Result<Option<Deg>, GbError> {
    if g.is_zero() {
        return Ok(None);
    }
    for (c, _, _) in g.terms() {
        if *c as usize >= module.rank() {
            return Err(GbError::Structure(format!(
                "component {c} outside a module of rank {}",
                module.rank()
            )));
        }
    }
    g.homogeneous_degree(ring, module)
        .map(Some)
        .ok_or_else(|| GbError::NotHomogeneous(g.display(ring)))
}

fn poly_degree(ring: &Ring, p: &Poly) -> Result<Option<Deg>, GbError> {
    if p.is_zero() {
        return Ok(None);
    }
    p.homogeneous_degree(ring)
        .map(Some)
        .ok_or_else(|| GbError::NotHomogeneous(p.display(ring)))
}

/// First syzygies of homogeneous generators of a submodule of `module`.
///
/// Returns the source free module (twists = generator degrees) and a
/// homogeneous generating set of the syzygy module. Zero generators are
/// rejected because their degree is unknown; see [`syzygies_with_degrees`].
pub fn syzygies(
    ring: &Ring,
    module: &FreeModule,
    gens: &[ModElem],
) -> Result<(FreeModule, Vec<ModElem>), GbError> {
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        match elem_degree(ring, module, g)? {
            Some(d) => degs.push(d),
            None => {
                return Err(GbError::DegreeIncompatible(
                    "zero generator has no degree".into(),
                ))
            }
        }
    }
    syzygies_with_degrees(ring, module, gens, &degs)
}

/// Syzygies with prescribed generator degrees; zero generators are allowed
/// and contribute the corresponding unit vector.
pub fn syzygies_with_degrees(
    ring: &Ring,
    module: &FreeModule,
    gens: &[ModElem],
    degs: &[Deg],
) -> Result<(FreeModule, Vec<ModElem>), GbError> {
    if degs.len() != gens.len() {
        return Err(GbError::Structure("one degree per generator required".into()));
    }
    for (g, d) in gens.iter().zip(degs) {
        if let Some(e) = elem_degree(ring, module, g)? {
            if e != *d {
                return Err(GbError::DegreeIncompatible(format!(
                    "generator of degree {e} declared as {d}"
                )));
            }
        }
    }
    let source = FreeModule::new(degs.to_vec());
    if gens.is_empty() {
        return Ok((source, Vec::new()));
    }
    let r = module.rank();
    let s = gens.len();
    let mut twists = module.twists.clone();
    twists.extend_from_slice(degs);
    let aug = FreeModule::new(twists);
    let mut priority = vec![1u8; r];
    priority.extend(std::iter::repeat_n(0, s));
    let order = ModuleOrder::top(MonomialOrder::GRevLex, r + s).with_priority(priority);
    let one = Mono::one(ring.nvars());
    let inputs: Vec<ModElem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            ModElem::from_terms(
                ring,
                g.terms()
                    .iter()
                    .cloned()
                    .chain(std::iter::once(((r + i) as u32, one.clone(), 1))),
            )
        })
        .collect();
    let gb = GroebnerBasis::compute_graded(ring, &order, &aug, &inputs)?;
    let syz = gb
        .elements()
        .into_iter()
        .filter(|e| e.terms().iter().all(|t| t.0 as usize >= r))
        .map(|e| e.shift_components(-(r as i64)))
        .collect();
    Ok((source, syz))
}

/// Generators of `(gens) ∩ k[x_{n-keep_last} .. x_{n-1}]`, as polynomials of
/// the same ring.
pub fn eliminate(ring: &Ring, gens: &[Poly], keep_last: usize) -> Result<Vec<Poly>, GbError> {
    let n = ring.nvars();
    if keep_last == 0 || keep_last > n {
        return Err(GbError::OutOfRange(format!(
            "keep_last = {keep_last} with {n} variables"
        )));
    }
    for g in gens {
        poly_degree(ring, g)?;
    }
    let k = n - keep_last;
    let mono_order = if k == 0 {
        MonomialOrder::GRevLex
    } else {
        MonomialOrder::Elimination(k)
    };
    let order = ModuleOrder::top(mono_order, 1);
    let elems: Vec<ModElem> = gens.iter().map(|g| ModElem::from_poly(0, g)).collect();
    let gb = GroebnerBasis::compute(ring, &order, &elems)?;
    Ok(gb
        .elements()
        .into_iter()
        .map(|e| e.component(0))
        .filter(|p| p.terms().iter().all(|(m, _)| m.support_within(k..n)))
        .collect())
}

/// Kernel of a map `T^s → B` of graded modules.
#[derive(Clone, Debug)]
pub struct MapKernel {
    /// Source module; twists are target degrees relative to `base`, divided by `scale`.
    pub module: FreeModule,
    /// Generators of the kernel, as elements of `module`.
    pub gens: Vec<ModElem>,
    /// Smallest target degree in the grading of `B`.
    pub base: Deg,
    /// Ratio between `B`-degrees of variable images and `T`-degrees of variables.
    pub scale: i32,
}

fn grading_from(degs: &[Deg]) -> Result<Grading, GbError> {
    if degs.iter().any(|d| d.0 < 0 || d.1 < 0 || (d.0 == 0 && d.1 == 0)) {
        return Err(GbError::DegreeIncompatible(
            "auxiliary ring needs positive variable degrees".into(),
        ));
    }
    if degs.iter().all(|d| d.1 == 0) {
        Ok(Grading::Single(degs.iter().map(|d| d.0 as u32).collect()))
    } else {
        Ok(Grading::Double(
            degs.iter().map(|d| (d.0 as u32, d.1 as u32)).collect(),
        ))
    }
}

fn divide_deg(d: Deg, scale: i32) -> Option<Deg> {
    (d.0 % scale == 0 && d.1 % scale == 0).then(|| Deg(d.0 / scale, d.1 / scale))
}

/// Kernel of `T^s → B`, `e_k ↦ targets[k]`, where `B` is a `T`-module through
/// `y_j ↦ images[j]`.
///
/// Works in the auxiliary ring `B ⊗ T` with the submodule generated by
/// `e_{k+1} - targets[k] e_0` and `(y_j - images[j]) e_0`, eliminating both
/// `e_0` and the variables of `B`.
pub fn module_map_kernel(
    b_ring: &Ring,
    targets: &[Poly],
    t_ring: &Ring,
    images: &[Poly],
) -> Result<MapKernel, GbError> {
    if images.len() != t_ring.nvars() {
        return Err(GbError::Structure(format!(
            "{} variable images for {} variables",
            images.len(),
            t_ring.nvars()
        )));
    }
    if b_ring.char() != t_ring.char() {
        return Err(GbError::Structure("rings over different fields".into()));
    }
    let nb = b_ring.nvars();
    let nt = t_ring.nvars();

    let mut scale: Option<i32> = None;
    for (j, img) in images.iter().enumerate() {
        let Some(d) = poly_degree(b_ring, img)? else {
            continue;
        };
        let t = t_ring.var_degree(j);
        let ratio = if t.0 > 0 { d.0 / t.0 } else { d.1 / t.1 };
        if ratio < 1 || Deg(t.0 * ratio, t.1 * ratio) != d {
            return Err(GbError::DegreeIncompatible(format!(
                "image of {} has degree {d}, not a positive multiple of {t}",
                t_ring.names()[j]
            )));
        }
        match scale {
            None => scale = Some(ratio),
            Some(s) if s != ratio => {
                return Err(GbError::DegreeIncompatible(
                    "variable images scale the grading unevenly".into(),
                ))
            }
            _ => {}
        }
    }
    let scale = scale.unwrap_or(1);

    let mut tdegs = Vec::with_capacity(targets.len());
    for b in targets {
        match poly_degree(b_ring, b)? {
            Some(d) => tdegs.push(d),
            None => {
                return Err(GbError::DegreeIncompatible(
                    "zero target has no degree".into(),
                ))
            }
        }
    }
    let base = tdegs.iter().copied().min().unwrap_or(Deg::ZERO);
    let mut twists = Vec::with_capacity(tdegs.len());
    for &d in &tdegs {
        twists.push(divide_deg(d - base, scale).ok_or_else(|| {
            GbError::DegreeIncompatible(format!(
                "target degree {d} is not congruent to {base} modulo {scale}"
            ))
        })?);
    }
    let module = FreeModule::new(twists);
    if targets.is_empty() {
        return Ok(MapKernel {
            module,
            gens: Vec::new(),
            base,
            scale,
        });
    }

    let mut names: Vec<String> = (0..nb).map(|j| format!("b{j}")).collect();
    names.extend((0..nt).map(|j| format!("t{j}")));
    let mut vdegs: Vec<Deg> = (0..nb).map(|j| b_ring.var_degree(j)).collect();
    vdegs.extend((0..nt).map(|j| {
        let t = t_ring.var_degree(j);
        Deg(t.0 * scale, t.1 * scale)
    }));
    let aux = Ring::new(names, b_ring.char(), grading_from(&vdegs)?)?;
    let lift_b = |p: &Poly| -> Poly {
        Poly::from_terms(&aux, p.terms().iter().map(|(m, c)| (m.embed(nb + nt, 0), *c)))
    };

    let s = targets.len();
    let mut gens = Vec::with_capacity(s + nt);
    let one = Mono::one(nb + nt);
    let field = aux.field();
    for (k, b) in targets.iter().enumerate() {
        let lb = lift_b(b);
        gens.push(ModElem::from_terms(
            &aux,
            std::iter::once(((k + 1) as u32, one.clone(), 1)).chain(
                lb.terms()
                    .iter()
                    .map(|(m, c)| (0u32, m.clone(), field.neg(*c))),
            ),
        ));
    }
    for (j, img) in images.iter().enumerate() {
        let li = lift_b(img);
        gens.push(ModElem::from_terms(
            &aux,
            std::iter::once((0u32, Mono::var(nb + nt, nb + j, 1), 1)).chain(
                li.terms()
                    .iter()
                    .map(|(m, c)| (0u32, m.clone(), field.neg(*c))),
            ),
        ));
    }
    let mut aux_twists = vec![Deg::ZERO];
    aux_twists.extend_from_slice(&tdegs);
    let aux_module = FreeModule::new(aux_twists);
    let mut priority = vec![0u8; s + 1];
    priority[0] = 1;
    let order =
        ModuleOrder::top(MonomialOrder::Elimination(nb), s + 1).with_priority(priority);
    let gb = GroebnerBasis::compute_graded(&aux, &order, &aux_module, &gens)?;
    let kernel = gb
        .elements()
        .into_iter()
        .filter(|e| {
            e.terms()
                .iter()
                .all(|(c, m, _)| *c > 0 && m.support_within(nb..nb + nt))
        })
        .map(|e| {
            ModElem::from_terms(
                t_ring,
                e.terms()
                    .iter()
                    .map(|(c, m, v)| (c - 1, m.project(nb..nb + nt), *v)),
            )
        })
        .collect::<Vec<_>>();
    let kernel = minimal_generators(t_ring, &module, &kernel)?;
    Ok(MapKernel {
        module,
        gens: kernel,
        base,
        scale,
    })
}

fn reduced_ideal(ring: &Ring, polys: Vec<Poly>) -> Result<Vec<Poly>, GbError> {
    let order = ModuleOrder::top(MonomialOrder::GRevLex, 1);
    let elems: Vec<ModElem> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ModElem::from_poly(0, p))
        .collect();
    Ok(GroebnerBasis::compute(ring, &order, &elems)?
        .elements()
        .into_iter()
        .map(|e| e.component(0))
        .collect())
}

/// `(a) ∩ (b)` as a reduced grevlex Gröbner basis.
pub fn intersect_ideals(ring: &Ring, a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>, GbError> {
    let a: Vec<&Poly> = a.iter().filter(|p| !p.is_zero()).collect();
    let b: Vec<&Poly> = b.iter().filter(|p| !p.is_zero()).collect();
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let gens: Vec<ModElem> = a
        .iter()
        .chain(b.iter())
        .map(|p| ModElem::from_poly(0, p))
        .collect();
    let (_, syz) = syzygies(ring, &FreeModule::trivial(1), &gens)?;
    let mut out = Vec::with_capacity(syz.len());
    for z in &syz {
        let mut acc = Poly::zero();
        for (i, p) in a.iter().enumerate() {
            let c = z.component(i as u32);
            if !c.is_zero() {
                acc = acc.add(&c.mul(p, ring), ring);
            }
        }
        out.push(acc);
    }
    reduced_ideal(ring, out)
}

/// `(a) : (b)` as a reduced grevlex Gröbner basis.
pub fn colon_ideal(ring: &Ring, a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>, GbError> {
    let a: Vec<&Poly> = a.iter().filter(|p| !p.is_zero()).collect();
    let mut acc: Option<Vec<Poly>> = None;
    for f in b.iter().filter(|p| !p.is_zero()) {
        let mut gens = vec![ModElem::from_poly(0, f)];
        gens.extend(a.iter().map(|p| ModElem::from_poly(0, p)));
        let (_, syz) = syzygies(ring, &FreeModule::trivial(1), &gens)?;
        let part: Vec<Poly> = syz.iter().map(|z| z.component(0)).collect();
        let part = reduced_ideal(ring, part)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect_ideals(ring, &prev, &part)?,
        });
    }
    // Colon by the zero ideal is the unit ideal.
    Ok(acc.unwrap_or_else(|| vec![Poly::constant(ring, 1)]))
}
