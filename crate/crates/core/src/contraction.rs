//! The contraction engine: the presentation of the contraction algebra over
//! `k[t]` and everything derived from it — fibers, flatness witness,
//! localization, double contraction, tensor compatibility, extended Rees
//! comparison.
//!
//! The construction realizes the contraction of (A, θ) as a scheme-theoretic
//! closure: in the ambient ring `k[y, s, u, t, X]` take the ideal generated by
//! the relations of A in the y's, su - 1, t - s^2, and the graph relations
//! tying each X to its witness (a plus eigencomponent, or 1/s times a minus
//! eigencomponent), then eliminate {y, s, u}. The Groebner basis of that
//! graph ideal is kept: reducing an element of `A[s, u]` against it rewrites
//! the element in the tagged generators whenever it lies in the subalgebra.

use crate::coeff::{field_make, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::ideals::{colon, ideal_equal, GroebnerConfig, Ideal, SubalgebraGraph};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};
use crate::presentations::{
    eigen_split, map_is_iso, tensor, tensor_involution, validate_involution, AlgebraMap,
    EigenSplit, FPAlgebra, Involution,
};

/// How a generator of the contraction presentation sits in `A[√t^±1]`:
/// a θ-fixed element, a minus element over √t, or √t times a minus element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenTag {
    Plus,
    MinusOver,
    MinusTimes,
}

impl GenTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenTag::Plus => "plus",
            GenTag::MinusOver => "minus_over",
            GenTag::MinusTimes => "minus_times",
        }
    }
}

/// Presentation of the contraction algebra over `k[t]`, together with the
/// embedding witness into `A[s, u]/(su - 1)` where s stands for √t.
#[derive(Debug)]
pub struct ContractionPresentation {
    /// `k[t, X...]`/relations; variable 0 is t.
    pub algebra: FPAlgebra,
    /// Tag of each generator variable (aligned with ring vars 1..).
    pub tags: Vec<GenTag>,
    /// `k[A-vars, s, u]`/(A-relations + su - 1).
    pub witness_algebra: FPAlgebra,
    /// Witness image of every presentation variable, t included.
    pub witness: Vec<Poly>,
    pub source: FPAlgebra,
    pub theta: Involution,
    pub split: EigenSplit,
    s_var: usize,
    u_var: usize,
    graph: SubalgebraGraph,
}

/// A fiber of the contraction, with the t-value it came from.
#[derive(Debug, Clone)]
pub struct FiberAlgebra {
    pub algebra: FPAlgebra,
    pub t_value: Scalar,
}

/// Outcome of an isomorphism check, with the maps as witnesses.
#[derive(Debug)]
pub struct IsoVerdict {
    pub holds: bool,
    pub forward: AlgebraMap,
    pub inverse: AlgebraMap,
}

/// Build the witness algebra `k[A-vars, s, u]`/(A-rels + su - 1).
fn witness_algebra(a: &FPAlgebra) -> (FPAlgebra, usize, usize) {
    let n = a.nvars();
    let mut vars = a.ring.vars.clone();
    vars.push("s".into());
    vars.push("u".into());
    let ring = Ring::new(a.ring.field.clone(), vars, MonomialOrder::GrevLex);
    let emb: Vec<usize> = (0..n).collect();
    let mut rels: Vec<Poly> = a
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&emb, &ring))
        .collect();
    let s = Poly::var(&ring, n);
    let u = Poly::var(&ring, n + 1);
    rels.push(s.mul(&u).sub(&Poly::one(&ring)));
    (FPAlgebra::new(ring, rels), n, n + 1)
}

fn eigen_names(a: &FPAlgebra, split: &EigenSplit) -> (Vec<String>, Vec<String>) {
    let mut plus_names = vec![String::new(); split.plus_reps.len()];
    let mut minus_names = vec![String::new(); split.minus_reps.len()];
    for (i, (p, m)) in split.per_gen.iter().enumerate() {
        if let Some(c) = p {
            if plus_names[c.rep].is_empty() {
                plus_names[c.rep] = format!("{}+", a.ring.vars[i]);
            }
        }
        if let Some(c) = m {
            if minus_names[c.rep].is_empty() {
                minus_names[c.rep] = format!("{}-", a.ring.vars[i]);
            }
        }
    }
    (plus_names, minus_names)
}

/// Compute the contraction presentation of (A, θ).
pub fn contract(
    a: &FPAlgebra,
    theta: &Involution,
    cfg: &GroebnerConfig,
) -> Result<ContractionPresentation> {
    let split = eigen_split(a, theta, cfg)?;
    let (wit, s_var, u_var) = witness_algebra(a);
    let wring = &wit.ring;
    let emb: Vec<usize> = (0..a.nvars()).collect();
    let s = Poly::var(wring, s_var);
    let u = Poly::var(wring, u_var);

    let (plus_names, minus_names) = eigen_names(a, &split);
    let mut new_vars: Vec<String> = vec!["t".into()];
    new_vars.extend(plus_names.iter().cloned());
    new_vars.extend(minus_names.iter().cloned());

    let mut images: Vec<Poly> = vec![s.mul(&s)];
    for rep in &split.plus_reps {
        images.push(rep.map_vars(&emb, wring));
    }
    for rep in &split.minus_reps {
        images.push(u.mul(&rep.map_vars(&emb, wring)));
    }

    let graph = SubalgebraGraph::build(wring, wit.relations.gens(), &new_vars, &images, cfg)?;
    let algebra = FPAlgebra {
        ring: graph.back_ring.clone(),
        relations: graph.kernel.clone(),
    };
    let mut tags = vec![GenTag::Plus; split.plus_reps.len()];
    tags.extend(vec![GenTag::MinusOver; split.minus_reps.len()]);

    Ok(ContractionPresentation {
        algebra,
        tags,
        witness_algebra: wit,
        witness: images,
        source: a.clone(),
        theta: theta.clone(),
        split,
        s_var,
        u_var,
        graph,
    })
}

impl ContractionPresentation {
    pub fn n_plus(&self) -> usize {
        self.split.plus_reps.len()
    }

    pub fn n_minus(&self) -> usize {
        self.split.minus_reps.len()
    }

    /// Position of the i-th plus generator in the presentation ring.
    pub fn plus_var(&self, i: usize) -> usize {
        1 + i
    }

    /// Position of the j-th minus_over generator in the presentation ring.
    pub fn minus_var(&self, j: usize) -> usize {
        1 + self.n_plus() + j
    }

    pub fn t_poly(&self) -> Poly {
        Poly::var(&self.algebra.ring, 0)
    }

    pub fn s_poly(&self) -> Poly {
        Poly::var(&self.witness_algebra.ring, self.s_var)
    }

    pub fn u_poly(&self) -> Poly {
        Poly::var(&self.witness_algebra.ring, self.u_var)
    }

    /// Embed an element of the source ring into the witness ring.
    pub fn to_witness(&self, p: &Poly) -> Poly {
        let emb: Vec<usize> = (0..self.source.nvars()).collect();
        p.map_vars(&emb, &self.witness_algebra.ring)
    }

    /// Re-express an element of the witness ring in the tagged generators,
    /// when it lies in the contraction subalgebra.
    pub fn express(&self, elem: &Poly) -> Result<Poly> {
        self.graph.express(elem)
    }

    /// Soundness of the output: every relation vanishes on the witnesses.
    pub fn verify_witness(&self, cfg: &GroebnerConfig) -> Result<bool> {
        for rel in self.algebra.relations.gens() {
            let val = rel.substitute(&self.witness, &self.witness_algebra.ring)?;
            if !self.witness_algebra.relations.contains(&val, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Substitute t := value and renormalize. The zero ring is a legitimate
    /// outcome and is reported as such, not as an error.
    fn fiber_at(&self, value: &Scalar) -> Result<FiberAlgebra> {
        let ring = &self.algebra.ring;
        let n = ring.nvars();
        let field = ring.field.clone();
        let fiber_ring = Ring::new(
            field.clone(),
            ring.vars[1..].to_vec(),
            MonomialOrder::GrevLex,
        );
        let mut images: Vec<Poly> = vec![Poly::constant(&fiber_ring, value.clone())];
        for i in 1..n {
            images.push(Poly::var(&fiber_ring, i - 1));
        }
        let rels = self
            .algebra
            .relations
            .gens()
            .iter()
            .map(|g| g.substitute(&images, &fiber_ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiberAlgebra {
            algebra: FPAlgebra::new(fiber_ring, rels),
            t_value: value.clone(),
        })
    }

    pub fn fiber_at_zero(&self) -> Result<FiberAlgebra> {
        self.fiber_at(&self.algebra.ring.field.zero())
    }

    pub fn fiber_at_unit(&self, t0: &Scalar) -> Result<FiberAlgebra> {
        if self.algebra.ring.field.is_zero(t0) {
            return Err(Error::ZeroFiberPoint);
        }
        self.fiber_at(t0)
    }
}

/// The isomorphism A_{t0} ≅ A determined by a square root α of t0:
/// plus generators map to their eigencomponents, minus_over generators to
/// the minus component divided by α.
pub fn unit_fiber_iso(
    c: &ContractionPresentation,
    t0: &Scalar,
    alpha: &Scalar,
    cfg: &GroebnerConfig,
) -> Result<IsoVerdict> {
    let field = &c.algebra.ring.field;
    let alpha_sq = field.mul(alpha, alpha);
    if alpha_sq != *t0 {
        return Err(Error::BadSquareRoot(field.display(&alpha_sq).to_string()));
    }
    let fiber = c.fiber_at_unit(t0)?;
    let a = &c.source;
    let alpha_inv = field.invert(alpha)?;

    let mut fwd_images = Vec::with_capacity(fiber.algebra.nvars());
    for i in 0..c.n_plus() {
        fwd_images.push(c.split.plus_reps[i].clone());
    }
    for j in 0..c.n_minus() {
        fwd_images.push(c.split.minus_reps[j].scalar_mul(&alpha_inv));
    }
    let forward = AlgebraMap::new(fiber.algebra.clone(), a.clone(), fwd_images)?;

    let fring = &fiber.algebra.ring;
    let mut inv_images = Vec::with_capacity(a.nvars());
    for (p, m) in &c.split.per_gen {
        let mut img = Poly::zero(fring);
        if let Some(comp) = p {
            img = img.add(&Poly::var(fring, comp.rep).scalar_mul(&comp.coeff));
        }
        if let Some(comp) = m {
            let coeff = field.mul(alpha, &comp.coeff);
            img = img.add(&Poly::var(fring, c.n_plus() + comp.rep).scalar_mul(&coeff));
        }
        inv_images.push(img);
    }
    let inverse = AlgebraMap::new(a.clone(), fiber.algebra.clone(), inv_images)?;

    let holds = map_is_iso(&forward, &inverse, cfg)?;
    Ok(IsoVerdict {
        holds,
        forward,
        inverse,
    })
}

/// Quadratic descent at a non-square t0: after base change to
/// `k[x]`/(x^2 - t0), the fiber A_{t0} becomes isomorphic to A, the minus_over
/// generators mapping to (minus component)·x/t0.
pub fn fiber_descent_check(
    c: &ContractionPresentation,
    t0: &Scalar,
    cfg: &GroebnerConfig,
) -> Result<IsoVerdict> {
    let base = &c.algebra.ring.field;
    if base.is_zero(t0) {
        return Err(Error::ZeroFiberPoint);
    }
    let ext = field_make(FieldSpec::QuadraticExt {
        base: Box::new(base.spec().clone()),
        t0: t0.clone(),
    })?;
    if !ext.is_field() {
        return Err(Error::Invalid(format!(
            "t0 = {} is a square; use unit_fiber_iso with its square root",
            base.display(t0)
        )));
    }
    let fiber = c.fiber_at_unit(t0)?;
    let a_ext = c.source.extend_scalars(&ext);
    let fiber_ext = fiber.algebra.extend_scalars(&ext);

    // x^-1 = x / t0
    let x = ext.gen_i()?;
    let t0_inv = ext.invert(&ext.embed(t0))?;
    let x_inv = ext.mul(&x, &t0_inv);

    let emb_a: Vec<usize> = (0..c.source.nvars()).collect();
    let mut fwd_images = Vec::with_capacity(fiber_ext.nvars());
    for i in 0..c.n_plus() {
        fwd_images.push(c.split.plus_reps[i].map_vars(&emb_a, &a_ext.ring));
    }
    for j in 0..c.n_minus() {
        fwd_images.push(
            c.split.minus_reps[j]
                .map_vars(&emb_a, &a_ext.ring)
                .scalar_mul(&x_inv),
        );
    }
    let forward = AlgebraMap::new(fiber_ext.clone(), a_ext.clone(), fwd_images)?;

    let fring = &fiber_ext.ring;
    let mut inv_images = Vec::with_capacity(a_ext.nvars());
    for (p, m) in &c.split.per_gen {
        let mut img = Poly::zero(fring);
        if let Some(comp) = p {
            img = img.add(&Poly::var(fring, comp.rep).scalar_mul(&ext.embed(&comp.coeff)));
        }
        if let Some(comp) = m {
            let coeff = ext.mul(&x, &ext.embed(&comp.coeff));
            img = img.add(&Poly::var(fring, c.n_plus() + comp.rep).scalar_mul(&coeff));
        }
        inv_images.push(img);
    }
    let inverse = AlgebraMap::new(a_ext, fiber_ext, inv_images)?;
    let holds = map_is_iso(&forward, &inverse, cfg)?;
    Ok(IsoVerdict {
        holds,
        forward,
        inverse,
    })
}

/// t is a non-zerodivisor modulo the contraction ideal:
/// colon(relations, t) = relations.
pub fn flatness_check(c: &ContractionPresentation, cfg: &GroebnerConfig) -> Result<bool> {
    let quot = colon(&c.algebra.relations, &c.t_poly(), cfg)?;
    ideal_equal(&quot, &c.algebra.relations, cfg)
}

/// The extended Rees presentation of (`A[s]`, I) with I generated by the minus
/// eigencomponents: ring k[s, Y (one per A generator), X (one per minus
/// representative)], where Y_λ carries a_λ and X_j carries (minus rep)/s.
pub struct ReesPresentation {
    pub algebra: FPAlgebra,
    pub n_gens: usize,
    pub n_minus: usize,
}

fn extended_rees(c: &ContractionPresentation, cfg: &GroebnerConfig) -> Result<ReesPresentation> {
    let a = &c.source;
    let wit = &c.witness_algebra;
    let wring = &wit.ring;
    let emb: Vec<usize> = (0..a.nvars()).collect();
    let u = c.u_poly();

    let mut new_vars: Vec<String> = vec!["s".into()];
    new_vars.extend(a.ring.vars.iter().cloned());
    let mut images: Vec<Poly> = vec![c.s_poly()];
    for i in 0..a.nvars() {
        images.push(Poly::var(wring, i));
    }
    let (_, minus_names) = eigen_names(a, &c.split);
    for (j, rep) in c.split.minus_reps.iter().enumerate() {
        new_vars.push(minus_names[j].clone());
        images.push(u.mul(&rep.map_vars(&emb, wring)));
    }
    let graph = SubalgebraGraph::build(wring, wit.relations.gens(), &new_vars, &images, cfg)?;
    Ok(ReesPresentation {
        algebra: FPAlgebra {
            ring: graph.back_ring.clone(),
            relations: graph.kernel.clone(),
        },
        n_gens: a.nvars(),
        n_minus: c.split.minus_reps.len(),
    })
}

/// Dimensions of the degree-≤d filtration pieces of ring/relations, for
/// d = 0..=max_degree, counted as standard monomials for the (degree
/// compatible) grevlex order.
pub fn affine_hilbert(
    algebra: &FPAlgebra,
    max_degree: u32,
    cfg: &GroebnerConfig,
) -> Result<Vec<u64>> {
    let basis = algebra.relations.basis(cfg)?;
    let lead: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading().unwrap().1.clone())
        .collect();
    let n = algebra.nvars();
    let mut counts = vec![0u64; (max_degree + 1) as usize];
    let mut stack: Vec<Vec<u16>> = vec![vec![]];
    // enumerate all monomials of total degree <= max_degree
    fn rec(prefix: &mut Vec<u16>, n: usize, remaining: u32, lead: &[Monomial], counts: &mut [u64]) {
        if prefix.len() == n {
            let m = Monomial(prefix.clone());
            if !lead.iter().any(|l| l.divides(&m)) {
                let d = m.total_degree() as usize;
                for c in counts.iter_mut().skip(d) {
                    *c += 1;
                }
            }
            return;
        }
        for e in 0..=remaining {
            prefix.push(e as u16);
            rec(prefix, n, remaining - e, lead, counts);
            prefix.pop();
        }
    }
    stack.clear();
    let mut prefix = Vec::with_capacity(n);
    rec(&mut prefix, n, max_degree, &lead, &mut counts);
    Ok(counts)
}

/// Verdict of the associated-graded comparison at t = 0.
#[derive(Debug)]
pub struct GradedFiberVerdict {
    pub holds: bool,
    pub iso_holds: bool,
    pub series_fiber: Vec<u64>,
    pub series_graded: Vec<u64>,
}

/// Compare the t = 0 fiber of the contraction with the associated graded
/// ring computed independently through the extended Rees presentation, under
/// the canonical generator matching, and compare truncated Hilbert series.
pub fn graded_fiber_check(
    c: &ContractionPresentation,
    hilbert_degree: u32,
    cfg: &GroebnerConfig,
) -> Result<GradedFiberVerdict> {
    let fiber0 = c.fiber_at_zero()?;
    let rees = extended_rees(c, cfg)?;

    // gr = Rees / (s)
    let rring = &rees.algebra.ring;
    let gr_ring = Ring::new(
        rring.field.clone(),
        rring.vars[1..].to_vec(),
        MonomialOrder::GrevLex,
    );
    let mut images: Vec<Poly> = vec![Poly::zero(&gr_ring)];
    for i in 1..rring.nvars() {
        images.push(Poly::var(&gr_ring, i - 1));
    }
    let gr_rels = rees
        .algebra
        .relations
        .gens()
        .iter()
        .map(|g| g.substitute(&images, &gr_ring))
        .collect::<Result<Vec<_>>>()?;
    let graded = FPAlgebra::new(gr_ring.clone(), gr_rels);

    // canonical matching: fiber0 generator P_i -> plus rep evaluated on the
    // degree-0 classes Y, M_j -> X_j; inverse Y_λ -> plus component of a_λ,
    // X_j -> M_j
    let y_positions: Vec<usize> = (0..rees.n_gens).collect();
    let mut fwd_images = Vec::with_capacity(fiber0.algebra.nvars());
    for i in 0..c.n_plus() {
        fwd_images.push(c.split.plus_reps[i].map_vars(&y_positions, &gr_ring));
    }
    for j in 0..c.n_minus() {
        fwd_images.push(Poly::var(&gr_ring, rees.n_gens + j));
    }
    let forward = AlgebraMap::new(fiber0.algebra.clone(), graded.clone(), fwd_images)?;

    let fring = &fiber0.algebra.ring;
    let mut inv_images = Vec::with_capacity(graded.nvars());
    for (p, _) in &c.split.per_gen {
        match p {
            Some(comp) => inv_images.push(Poly::var(fring, comp.rep).scalar_mul(&comp.coeff)),
            None => inv_images.push(Poly::zero(fring)),
        }
    }
    for j in 0..c.n_minus() {
        inv_images.push(Poly::var(fring, c.n_plus() + j));
    }
    let inverse = AlgebraMap::new(graded, fiber0.algebra.clone(), inv_images)?;

    let iso_holds = map_is_iso(&forward, &inverse, cfg)?;
    let series_fiber = affine_hilbert(&fiber0.algebra, hilbert_degree, cfg)?;
    let series_graded = affine_hilbert(&inverse.source, hilbert_degree, cfg)?;
    let series_equal = series_fiber == series_graded;
    Ok(GradedFiberVerdict {
        holds: iso_holds && series_equal,
        iso_holds,
        series_fiber,
        series_graded,
    })
}

/// Verify 𝐀 ⊗`_{k[t]`} `k[s]`/(t - s^2) ≅ extended Rees algebra of (`A[s]`, I):
/// plus generators go to degree-0 elements, minus_over generators to the
/// I·s^{-1} generators.
pub fn rees_comparison(c: &ContractionPresentation, cfg: &GroebnerConfig) -> Result<IsoVerdict> {
    // left side: substitute t = s^2 in the contraction relations
    let cring = &c.algebra.ring;
    let n = cring.nvars();
    let mut vars = vec!["s".to_string()];
    vars.extend(cring.vars[1..].iter().cloned());
    let lhs_ring = Ring::new(cring.field.clone(), vars, MonomialOrder::GrevLex);
    let s = Poly::var(&lhs_ring, 0);
    let mut images: Vec<Poly> = vec![s.mul(&s)];
    for i in 1..n {
        images.push(Poly::var(&lhs_ring, i));
    }
    let lhs_rels = c
        .algebra
        .relations
        .gens()
        .iter()
        .map(|g| g.substitute(&images, &lhs_ring))
        .collect::<Result<Vec<_>>>()?;
    let lhs = FPAlgebra::new(lhs_ring.clone(), lhs_rels);

    let rees = extended_rees(c, cfg)?;
    let rring = &rees.algebra.ring;

    // forward: s -> s, P_i -> plus rep on the Y's, M_j -> X_j
    let y_positions: Vec<usize> = (1..=rees.n_gens).collect();
    let mut fwd_images = vec![Poly::var(rring, 0)];
    for i in 0..c.n_plus() {
        fwd_images.push(c.split.plus_reps[i].map_vars(&y_positions, rring));
    }
    for j in 0..c.n_minus() {
        fwd_images.push(Poly::var(rring, 1 + rees.n_gens + j));
    }
    let forward = AlgebraMap::new(lhs.clone(), rees.algebra.clone(), fwd_images)?;

    // inverse: s -> s, Y_λ -> plus part + s * minus part, X_j -> M_j
    let s_l = Poly::var(&lhs_ring, 0);
    let mut inv_images = vec![s_l.clone()];
    for (p, m) in &c.split.per_gen {
        let mut img = Poly::zero(&lhs_ring);
        if let Some(comp) = p {
            img = img.add(&Poly::var(&lhs_ring, 1 + comp.rep).scalar_mul(&comp.coeff));
        }
        if let Some(comp) = m {
            img = img.add(
                &s_l.mul(&Poly::var(&lhs_ring, 1 + c.n_plus() + comp.rep))
                    .scalar_mul(&comp.coeff),
            );
        }
        inv_images.push(img);
    }
    for j in 0..c.n_minus() {
        inv_images.push(Poly::var(&lhs_ring, 1 + c.n_plus() + j));
    }
    let inverse = AlgebraMap::new(rees.algebra.clone(), lhs, inv_images)?;

    let holds = map_is_iso(&forward, &inverse, cfg)?;
    Ok(IsoVerdict {
        holds,
        forward,
        inverse,
    })
}

/// The sign of a θ-eigenvector, +1 or -1.
pub fn eigen_sign(
    a: &FPAlgebra,
    theta: &Involution,
    f: &Poly,
    cfg: &GroebnerConfig,
) -> Result<i32> {
    let tf = theta.apply(f)?;
    if a.relations.contains(f, cfg)? {
        return Err(Error::NotEigenvector(format!(
            "{f} is zero modulo the relations"
        )));
    }
    if a.relations.contains(&tf.sub(f), cfg)? {
        Ok(1)
    } else if a.relations.contains(&tf.add(f), cfg)? {
        Ok(-1)
    } else {
        Err(Error::NotEigenvector(f.to_string()))
    }
}

/// Localization check: the contraction of A_f is canonically isomorphic to
/// the localization of the contraction of A at 𝐟 (f when θ-fixed, √t·f when
/// θ-anti-fixed). Returns the verdict and the localized presentation.
pub struct LocalizeVerdict {
    pub holds: bool,
    pub sign: i32,
    pub bold_f: Poly,
    pub localized: FPAlgebra,
    pub contracted_localization: ContractionPresentation,
    pub forward: AlgebraMap,
    pub inverse: AlgebraMap,
}

pub fn localize_check(
    a: &FPAlgebra,
    theta: &Involution,
    f: &Poly,
    cfg: &GroebnerConfig,
) -> Result<LocalizeVerdict> {
    let sign = eigen_sign(a, theta, f, cfg)?;
    let c = contract(a, theta, cfg)?;

    // B = A_f with the inverse adjoined as a fresh generator
    let mut gname = "g".to_string();
    while a.ring.var_index(&gname).is_some() {
        gname.push('0');
    }
    let mut bvars = a.ring.vars.clone();
    bvars.push(gname);
    let bring = Ring::new(a.ring.field.clone(), bvars, MonomialOrder::GrevLex);
    let emb: Vec<usize> = (0..a.nvars()).collect();
    let g = Poly::var(&bring, a.nvars());
    let mut brels: Vec<Poly> = a
        .relations
        .gens()
        .iter()
        .map(|r| r.map_vars(&emb, &bring))
        .collect();
    brels.push(g.mul(&f.map_vars(&emb, &bring)).sub(&Poly::one(&bring)));
    let b = FPAlgebra::new(bring.clone(), brels);
    let mut theta_b_images: Vec<Poly> = theta
        .map
        .images
        .iter()
        .map(|p| p.map_vars(&emb, &bring))
        .collect();
    theta_b_images.push(if sign == 1 { g.clone() } else { g.neg() });
    let theta_b = validate_involution(&b, theta_b_images, cfg)?;
    let cb = contract(&b, &theta_b, cfg)?;

    // 𝐟 inside the contraction presentation of A
    let f_w = c.to_witness(f);
    let bold_f = if sign == 1 {
        c.express(&f_w)?
    } else {
        c.t_poly().mul(&c.express(&c.u_poly().mul(&f_w))?)
    };

    // localized presentation 𝐀_𝐟 = k[t, X, h]/(C-rels + h·𝐟 - 1)
    let cring = &c.algebra.ring;
    let mut lvars = cring.vars.clone();
    let mut hname = "h".to_string();
    while cring.var_index(&hname).is_some() {
        hname.push('0');
    }
    lvars.push(hname);
    let lring = Ring::new(cring.field.clone(), lvars, MonomialOrder::GrevLex);
    let emb_c: Vec<usize> = (0..cring.nvars()).collect();
    let h = Poly::var(&lring, cring.nvars());
    let mut lrels: Vec<Poly> = c
        .algebra
        .relations
        .gens()
        .iter()
        .map(|r| r.map_vars(&emb_c, &lring))
        .collect();
    lrels.push(
        h.mul(&bold_f.map_vars(&emb_c, &lring))
            .sub(&Poly::one(&lring)),
    );
    let localized = FPAlgebra::new(lring.clone(), lrels);

    // forward: 𝐀_𝐟 -> 𝐁, re-expressing each witness in B's contraction
    let bwring = &cb.witness_algebra.ring;
    let emb_ab: Vec<usize> = (0..a.nvars()).collect();
    let u_b = cb.u_poly();
    let mut fwd_images: Vec<Poly> = vec![cb.t_poly()];
    for i in 0..c.n_plus() {
        fwd_images.push(cb.express(&c.split.plus_reps[i].map_vars(&emb_ab, bwring))?);
    }
    for j in 0..c.n_minus() {
        fwd_images.push(cb.express(&u_b.mul(&c.split.minus_reps[j].map_vars(&emb_ab, bwring)))?);
    }
    let g_w = Poly::var(bwring, a.nvars());
    fwd_images.push(if sign == 1 {
        cb.express(&g_w)?
    } else {
        cb.express(&u_b.mul(&g_w))?
    });
    let forward = AlgebraMap::new(localized.clone(), cb.algebra.clone(), fwd_images)?;

    // inverse: 𝐁 -> 𝐀_𝐟 via the graph of the localized subalgebra
    let mut loc_images: Vec<Poly> = Vec::with_capacity(lring.nvars());
    let s_b = cb.s_poly();
    loc_images.push(s_b.mul(&s_b));
    for i in 0..c.n_plus() {
        loc_images.push(c.split.plus_reps[i].map_vars(&emb_ab, bwring));
    }
    for j in 0..c.n_minus() {
        loc_images.push(u_b.mul(&c.split.minus_reps[j].map_vars(&emb_ab, bwring)));
    }
    loc_images.push(if sign == 1 {
        g_w.clone()
    } else {
        u_b.mul(&g_w)
    });
    let loc_graph = SubalgebraGraph::build(
        bwring,
        cb.witness_algebra.relations.gens(),
        &lring.vars,
        &loc_images,
        cfg,
    )?;
    let mut inv_images: Vec<Poly> = Vec::with_capacity(cb.algebra.nvars());
    inv_images.push(Poly::var(&lring, 0));
    for w in &cb.witness[1..] {
        let e = loc_graph.express(w)?;
        inv_images.push(e.map_vars(&(0..lring.nvars()).collect::<Vec<_>>(), &lring));
    }
    let inverse = AlgebraMap::new(cb.algebra.clone(), localized.clone(), inv_images)?;

    let holds = map_is_iso(&forward, &inverse, cfg)?;
    Ok(LocalizeVerdict {
        holds,
        sign,
        bold_f,
        localized,
        contracted_localization: cb,
        forward,
        inverse,
    })
}

/// Tag of a double-contraction generator by its (θ, η) eigensigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleTag {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl DoubleTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            DoubleTag::PlusPlus => "plus_plus",
            DoubleTag::PlusMinus => "plus_minus_over2",
            DoubleTag::MinusPlus => "minus_over1_plus",
            DoubleTag::MinusMinus => "minus_over12",
        }
    }
}

/// Presentation of the double contraction over `k[t1, t2]`, from one
/// elimination with both square roots and their inverses adjoined.
pub struct DoubleContraction {
    pub algebra: FPAlgebra,
    pub tags: Vec<DoubleTag>,
    pub reps: [Vec<Poly>; 4],
}

fn bi_eigen_reps(
    a: &FPAlgebra,
    theta: &Involution,
    eta: &Involution,
    cfg: &GroebnerConfig,
) -> Result<([Vec<Poly>; 4], Vec<String>)> {
    let field = &a.ring.field;
    let quarter = field.from_ratio(1, 4)?;
    let mut reps: [Vec<Poly>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    let mut names: [Vec<String>; 4] = Default::default();
    let suffix = ["++", "+-", "-+", "--"];
    for i in 0..a.nvars() {
        let x = a.gen(i);
        let tx = theta.apply(&x)?;
        let ex = eta.apply(&x)?;
        let tex = theta.apply(&eta.apply(&x)?)?;
        // component with θ-sign ε and η-sign δ: (x + ε θx + δ ηx + εδ θηx)/4
        let comps = [
            x.add(&tx).add(&ex).add(&tex),
            x.add(&tx).sub(&ex).sub(&tex),
            x.sub(&tx).add(&ex).sub(&tex),
            x.sub(&tx).sub(&ex).add(&tex),
        ];
        for (k, comp) in comps.into_iter().enumerate() {
            let reduced = a.reduce(&comp.scalar_mul(&quarter), cfg)?;
            if reduced.is_zero() {
                continue;
            }
            let monic = reduced.monic();
            if !reps[k].iter().any(|r| r.monic() == monic) {
                reps[k].push(reduced);
                names[k].push(format!("{}{}", a.ring.vars[i], suffix[k]));
            }
        }
    }
    let mut flat_names = Vec::new();
    for k in 0..4 {
        flat_names.extend(names[k].iter().cloned());
    }
    Ok((reps, flat_names))
}

/// Compute the double contraction of (A, θ, η) for commuting involutions,
/// and check the symmetry 𝐀(θ,η) ≅ 𝐀(η,θ) by swapping (t1, t2) and matching
/// the generator families.
pub fn double_contract(
    a: &FPAlgebra,
    theta: &Involution,
    eta: &Involution,
    cfg: &GroebnerConfig,
) -> Result<(DoubleContraction, bool)> {
    if !theta.commutes_with(eta, cfg)? {
        for i in 0..a.nvars() {
            let te = theta.map.apply(&eta.map.images[i])?;
            let et = eta.map.apply(&theta.map.images[i])?;
            if !a.relations.contains(&te.sub(&et), cfg)? {
                return Err(Error::NonCommutingInvolutions(a.ring.vars[i].clone()));
            }
        }
    }
    let direct = double_contract_one_sided(a, theta, eta, cfg)?;
    let swapped = double_contract_one_sided(a, eta, theta, cfg)?;

    // symmetry: match (t1, t2) -> (t2, t1) and family +- <-> -+
    let dring = &direct.algebra.ring;
    let symmetric = if direct.reps[0].len() == swapped.reps[0].len()
        && direct.reps[1].len() == swapped.reps[2].len()
        && direct.reps[2].len() == swapped.reps[1].len()
        && direct.reps[3].len() == swapped.reps[3].len()
    {
        let counts = [
            direct.reps[0].len(),
            direct.reps[1].len(),
            direct.reps[2].len(),
            direct.reps[3].len(),
        ];
        let base = |k: usize| 2 + counts[..k].iter().sum::<usize>();
        // position map for the swapped presentation's variables
        let swapped_counts = [counts[0], counts[2], counts[1], counts[3]];
        let swapped_base = |k: usize| 2 + swapped_counts[..k].iter().sum::<usize>();
        let mut var_map = vec![usize::MAX; dring.nvars()];
        var_map[0] = 1; // t1 of (η,θ) is t2 of (θ,η)
        var_map[1] = 0;
        for (k_swapped, k_direct) in [(0usize, 0usize), (1, 2), (2, 1), (3, 3)] {
            for j in 0..swapped_counts[k_swapped] {
                var_map[swapped_base(k_swapped) + j] = base(k_direct) + j;
            }
        }
        let moved: Vec<Poly> = swapped
            .algebra
            .relations
            .gens()
            .iter()
            .map(|g| g.map_vars(&var_map, dring))
            .collect();
        let moved_ideal = Ideal::new(dring, moved);
        ideal_equal(&direct.algebra.relations, &moved_ideal, cfg)?
    } else {
        false
    };
    Ok((direct, symmetric))
}

fn double_contract_one_sided(
    a: &FPAlgebra,
    theta: &Involution,
    eta: &Involution,
    cfg: &GroebnerConfig,
) -> Result<DoubleContraction> {
    let (reps, names) = bi_eigen_reps(a, theta, eta, cfg)?;

    // witness ring k[A-vars, s1, u1, s2, u2]
    let n = a.nvars();
    let mut wvars = a.ring.vars.clone();
    wvars.extend([
        "s1".to_string(),
        "u1".to_string(),
        "s2".to_string(),
        "u2".to_string(),
    ]);
    let wring = Ring::new(a.ring.field.clone(), wvars, MonomialOrder::GrevLex);
    let emb: Vec<usize> = (0..n).collect();
    let mut wrels: Vec<Poly> = a
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&emb, &wring))
        .collect();
    let s1 = Poly::var(&wring, n);
    let u1 = Poly::var(&wring, n + 1);
    let s2 = Poly::var(&wring, n + 2);
    let u2 = Poly::var(&wring, n + 3);
    wrels.push(s1.mul(&u1).sub(&Poly::one(&wring)));
    wrels.push(s2.mul(&u2).sub(&Poly::one(&wring)));

    let mut new_vars: Vec<String> = vec!["t1".into(), "t2".into()];
    new_vars.extend(names);
    let mut images: Vec<Poly> = vec![s1.mul(&s1), s2.mul(&s2)];
    let weights = [Poly::one(&wring), u2.clone(), u1.clone(), u1.mul(&u2)];
    let mut tags: Vec<DoubleTag> = Vec::new();
    let tag_of = [
        DoubleTag::PlusPlus,
        DoubleTag::PlusMinus,
        DoubleTag::MinusPlus,
        DoubleTag::MinusMinus,
    ];
    for k in 0..4 {
        for rep in &reps[k] {
            images.push(weights[k].mul(&rep.map_vars(&emb, &wring)));
            tags.push(tag_of[k]);
        }
    }
    let graph = SubalgebraGraph::build(&wring, &wrels, &new_vars, &images, cfg)?;
    Ok(DoubleContraction {
        algebra: FPAlgebra {
            ring: graph.back_ring.clone(),
            relations: graph.kernel.clone(),
        },
        tags,
        reps,
    })
}

/// Verify contract(A⊗B, θ⊗η) ≅ contract(A,θ) ⊗`_{k[t]`} contract(B,η) by ideal
/// equality under the canonical generator matching.
pub fn tensor_compat_check(
    a: &FPAlgebra,
    theta: &Involution,
    b: &FPAlgebra,
    eta: &Involution,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    let tp = tensor(a, b)?;
    let combined = tensor_involution(&tp, theta, eta)?;
    let cab = contract(&tp.algebra, &combined, cfg)?;
    let ca = contract(a, theta, cfg)?;
    let cb = contract(b, eta, cfg)?;

    // the tensor of the two contractions over k[t]:
    // ring k[t, A-plus, A-minus, B-plus, B-minus]
    let mut vars: Vec<String> = vec!["t".into()];
    let push_block = |vars: &mut Vec<String>, c: &ContractionPresentation, side: usize| {
        for (i, v) in c.algebra.ring.vars[1..].iter().enumerate() {
            let _ = i;
            vars.push(format!("{v}_{side}"));
        }
    };
    push_block(&mut vars, &ca, 1);
    push_block(&mut vars, &cb, 2);
    let tring = Ring::new(a.ring.field.clone(), vars, MonomialOrder::GrevLex);
    let na = ca.algebra.nvars() - 1;
    let mut map_a = vec![0usize];
    map_a.extend(1..=na);
    let mut map_b = vec![0usize];
    map_b.extend(na + 1..tring.nvars());
    let mut trels: Vec<Poly> = Vec::new();
    for g in ca.algebra.relations.gens() {
        trels.push(g.map_vars(&map_a, &tring));
    }
    for g in cb.algebra.relations.gens() {
        trels.push(g.map_vars(&map_b, &tring));
    }
    let tensor_side = Ideal::new(&tring, trels);

    // matching: cab's plus reps are A's plus reps then B's (generator order),
    // same for minus; verify the counts line up before renaming
    if cab.n_plus() != ca.n_plus() + cb.n_plus() || cab.n_minus() != ca.n_minus() + cb.n_minus() {
        return Err(Error::Invalid(
            "tensor generator matching failed: eigencomponent counts differ".into(),
        ));
    }
    let mut var_map = vec![usize::MAX; cab.algebra.nvars()];
    var_map[0] = 0; // t
    for i in 0..cab.n_plus() {
        let target = if i < ca.n_plus() {
            1 + i // A-plus block of the tensor ring
        } else {
            1 + na + (i - ca.n_plus()) // B-plus block
        };
        var_map[cab.plus_var(i)] = target;
    }
    for j in 0..cab.n_minus() {
        let target = if j < ca.n_minus() {
            1 + ca.n_plus() + j
        } else {
            1 + na + cb.n_plus() + (j - ca.n_minus())
        };
        var_map[cab.minus_var(j)] = target;
    }
    let moved: Vec<Poly> = cab
        .algebra
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&var_map, &tring))
        .collect();
    let moved_ideal = Ideal::new(&tring, moved);
    ideal_equal(&moved_ideal, &tensor_side, cfg)
}

/// Contract after a flat field extension versus extend the contraction:
/// the two presentations must have equal ideals.
pub fn flat_base_change_check(
    a: &FPAlgebra,
    theta: &Involution,
    extension: &FieldSpec,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    let base_spec = a.ring.field.spec();
    let ext_field = if extension == base_spec {
        a.ring.field.clone()
    } else {
        match extension {
            FieldSpec::QuadraticExt { base, .. } if **base == *base_spec => {
                field_make(extension.clone())?
            }
            _ => {
                return Err(Error::UnsupportedExtension(format!(
                    "{extension} does not extend {base_spec}"
                )))
            }
        }
    };
    if !ext_field.is_field() {
        return Err(Error::NotAField(ext_field.spec().to_string()));
    }
    let c = contract(a, theta, cfg)?;
    let extended_after = c.algebra.extend_scalars(&ext_field);

    let a_ext = a.extend_scalars(&ext_field);
    let emb: Vec<usize> = (0..a.nvars()).collect();
    let theta_ext_images: Vec<Poly> = theta
        .map
        .images
        .iter()
        .map(|p| p.map_vars(&emb, &a_ext.ring))
        .collect();
    let theta_ext = validate_involution(&a_ext, theta_ext_images, cfg)?;
    let c_ext = contract(&a_ext, &theta_ext, cfg)?;

    if c_ext.algebra.ring.vars != extended_after.ring.vars {
        return Ok(false);
    }
    ideal_equal(&c_ext.algebra.relations, &extended_after.relations, cfg)
}

/// The gluing identity of the contracted punctured line: localizing the
/// sign-involution chart `k[t, v]` at 𝐟 = t·v and contracting `k[w, w^{-1}]`
/// give transition v ↦ 1/(t·v'), verified as an exact relation.
pub struct ChartGluing {
    pub verdict: bool,
    pub transition: String,
}

pub fn chart_gluing(
    a: &FPAlgebra,
    theta: &Involution,
    f: &Poly,
    cfg: &GroebnerConfig,
) -> Result<ChartGluing> {
    let loc = localize_check(a, theta, f, cfg)?;
    if !loc.holds {
        return Ok(ChartGluing {
            verdict: false,
            transition: String::new(),
        });
    }
    // In the contraction of A_f, the minus generator v of f and the minus
    // generator v' of 1/f satisfy t·v·v' = 1 exactly when f is θ-anti-fixed.
    let cb = &loc.contracted_localization;
    if loc.sign == -1 {
        let wring = &cb.witness_algebra.ring;
        let u = cb.u_poly();
        let emb: Vec<usize> = (0..a.nvars()).collect();
        let v1 = cb.express(&u.mul(&f.map_vars(&emb, wring)))?;
        let g = Poly::var(wring, a.nvars());
        let v2 = cb.express(&u.mul(&g))?;
        let identity = cb.algebra.relations.contains(
            &cb.t_poly()
                .mul(&v1)
                .mul(&v2)
                .sub(&Poly::one(&cb.algebra.ring)),
            cfg,
        )?;
        Ok(ChartGluing {
            verdict: identity,
            transition: format!("{v1} -> 1/(t*{v2})"),
        })
    } else {
        Ok(ChartGluing {
            verdict: true,
            transition: format!("{f} -> {f}"),
        })
    }
}

/// Contraction respects surjections: for a θ-stable quotient A ↠ A/J the
/// induced map of contraction presentations is surjective (every generator
/// of the quotient contraction is hit).
pub fn surjection_check(
    a: &FPAlgebra,
    theta: &Involution,
    extra_rels: Vec<Poly>,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    let mut rels = a.relations.gens().to_vec();
    rels.extend(extra_rels.iter().cloned());
    let quotient = FPAlgebra::new(a.ring.clone(), rels);
    // θ must descend
    let theta_q = validate_involution(&quotient, theta.map.images.clone(), cfg)?;
    let cq = contract(&quotient, &theta_q, cfg)?;
    let c = contract(a, theta, cfg)?;
    // the induced map sends each tagged generator of C to the corresponding
    // expression in C(A/J); surjectivity holds when every tagged generator of
    // C(A/J) is the image of some element, which the shared generator scheme
    // gives for free as long as every eigencomponent of the quotient is
    // reachable from a component upstairs
    let emb: Vec<usize> = (0..a.nvars()).collect();
    let wq = &cq.witness_algebra.ring;
    for rep in &c.split.plus_reps {
        cq.express(&rep.map_vars(&emb, wq))?;
    }
    let uq = cq.u_poly();
    for rep in &c.split.minus_reps {
        cq.express(&uq.mul(&rep.map_vars(&emb, wq)))?;
    }
    // surjectivity: each generator of cq is expressible through images of c's
    // generators; build the subalgebra generated by the images and check
    let mut imgs: Vec<Poly> = vec![cq.s_poly().mul(&cq.s_poly())];
    for rep in &c.split.plus_reps {
        imgs.push(rep.map_vars(&emb, wq));
    }
    for rep in &c.split.minus_reps {
        imgs.push(uq.mul(&rep.map_vars(&emb, wq)));
    }
    let names: Vec<String> = c.algebra.ring.vars.clone();
    let graph =
        SubalgebraGraph::build(wq, cq.witness_algebra.relations.gens(), &names, &imgs, cfg)?;
    for w in &cq.witness[1..] {
        if graph.express(w).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}
