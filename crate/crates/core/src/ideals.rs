//! Buchberger Groebner engine and the ideal operations the contraction
//! construction needs: reduction, membership, equality, elimination,
//! saturation, colon ideals, and kernels of ring maps.
//!
//! Reduced monic bases are the canonical form; ideal equality is basis
//! equality, which is sound and complete for a fixed order. Saturation uses
//! the extra-variable method: one elimination instead of an iterated colon.

use crate::error::{Error, Result};
use crate::poly::{compare, Monomial, MonomialOrder, Poly, Ring};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

/// Resource caps for basis computations. Exceeding a cap is an error,
/// never silent truncation.
#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 1_000_000,
            max_degree: 60,
        }
    }
}

/// An ideal with a lazily computed, cached reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
    basis: OnceLock<Vec<Poly>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.gens == other.gens
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Ideal {
        for g in &gens {
            assert!(*g.ring == **ring, "generator from a different ring");
        }
        Ideal {
            ring: ring.clone(),
            gens,
            basis: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// The reduced Groebner basis in the ring's order.
    pub fn basis(&self, cfg: &GroebnerConfig) -> Result<&[Poly]> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        if !self.ring.field.is_field() {
            return Err(Error::NotAField(self.ring.field.spec().to_string()));
        }
        let b = groebner(&self.gens, &self.ring, cfg)?;
        Ok(self.basis.get_or_init(|| b))
    }

    /// Normal form of `p` against the reduced basis.
    pub fn reduce(&self, p: &Poly, cfg: &GroebnerConfig) -> Result<Poly> {
        Ok(normal_form(p, self.basis(cfg)?))
    }

    pub fn contains(&self, p: &Poly, cfg: &GroebnerConfig) -> Result<bool> {
        Ok(self.reduce(p, cfg)?.is_zero())
    }

    pub fn is_zero_ideal(&self, cfg: &GroebnerConfig) -> Result<bool> {
        Ok(self.basis(cfg)?.is_empty())
    }

    /// Whether the ideal is the whole ring (quotient is the zero ring).
    pub fn is_unit_ideal(&self, cfg: &GroebnerConfig) -> Result<bool> {
        let b = self.basis(cfg)?;
        Ok(b.len() == 1 && b[0].is_one())
    }
}

/// True iff the two ideals of the same ring have identical reduced bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, cfg: &GroebnerConfig) -> Result<bool> {
    assert!(*a.ring == *b.ring, "ideal_equal needs a common ring");
    Ok(a.basis(cfg)? == b.basis(cfg)?)
}

/// Full normal form: no term of the result is divisible by any leading
/// monomial of `basis`. `p - normal_form(p)` lies in the ideal of `basis`.
pub fn normal_form(p: &Poly, basis: &[Poly]) -> Poly {
    let ring = p.ring.clone();
    let field = ring.field.clone();
    let mut rem: Vec<(crate::coeff::Scalar, Monomial)> = Vec::new();
    let mut cur = p.clone();
    'outer: while let Some((c, m)) = cur.leading().cloned() {
        for g in basis {
            let (gc, gm) = g.leading().expect("basis elements are nonzero");
            if gm.divides(&m) {
                let q = gm.quotient_into(&m);
                let factor = field.div(&c, gc).expect("leading coefficient invertible");
                cur = cur.sub(&g.term_mul(&factor, &q));
                continue 'outer;
            }
        }
        // leading term is irreducible; every remaining term is smaller
        rem.push((c, m));
        cur.terms.remove(0);
    }
    Poly { ring, terms: rem }
}

fn spoly(f: &Poly, g: &Poly) -> Poly {
    // both inputs are monic
    let (_, fm) = f.leading().expect("nonzero");
    let (_, gm) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let one = f.ring.field.one();
    f.term_mul(&one, &fm.quotient_into(&lcm))
        .sub(&g.term_mul(&one, &gm.quotient_into(&lcm)))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    deg: u32,
    lcm: Vec<u16>,
    i: usize,
    j: usize,
}

fn pair_key(basis: &[Poly], i: usize, j: usize) -> PairKey {
    let lcm = basis[i]
        .leading()
        .unwrap()
        .1
        .lcm(&basis[j].leading().unwrap().1);
    PairKey {
        deg: lcm.total_degree(),
        lcm: lcm.0,
        i,
        j,
    }
}

/// Buchberger's algorithm with the coprime (product) criterion and the
/// chain criterion in its Gebauer-Moeller update form. Deterministic for a
/// fixed input: the pending-pair queue is ordered by (degree, lcm, i, j).
pub fn groebner(gens: &[Poly], ring: &Arc<Ring>, cfg: &GroebnerConfig) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        assert!(*g.ring == **ring, "generator from a different ring");
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.insert(pair_key(&basis, i, j));
        }
    }
    let mut processed: usize = 0;
    while let Some(key) = pairs.pop_first() {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit {
                what: "S-pair count".into(),
                limit: cfg.max_pairs,
            });
        }
        let (i, j) = (key.i, key.j);
        let lm_i = &basis[i].leading().unwrap().1;
        let lm_j = &basis[j].leading().unwrap().1;
        if lm_i.coprime(lm_j) {
            continue;
        }
        if key.deg > cfg.max_degree {
            return Err(Error::ResourceLimit {
                what: format!("S-pair lcm degree {}", key.deg),
                limit: cfg.max_degree as usize,
            });
        }
        let s = spoly(&basis[i], &basis[j]);
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.total_degree() > cfg.max_degree {
            return Err(Error::ResourceLimit {
                what: format!("basis element degree {}", h.total_degree()),
                limit: cfg.max_degree as usize,
            });
        }
        let h = h.monic();
        basis.push(h);
        let t = basis.len() - 1;
        let lm_t = basis[t].leading().unwrap().1.clone();
        // chain criterion: drop pending (i, j) once the new leading monomial
        // divides lcm(i, j) strictly finer than both mixed lcms
        pairs.retain(|k| {
            let lcm_ij = Monomial(k.lcm.clone());
            if !lm_t.divides(&lcm_ij) {
                return true;
            }
            let lcm_it = basis[k.i].leading().unwrap().1.lcm(&lm_t);
            let lcm_jt = basis[k.j].leading().unwrap().1.lcm(&lm_t);
            lcm_it == lcm_ij || lcm_jt == lcm_ij
        });
        for k in 0..t {
            pairs.insert(pair_key(&basis, k, t));
        }
    }
    Ok(reduce_basis(basis))
}

/// Minimalize and tail-reduce a Groebner basis; output is monic, mutually
/// reduced, and sorted ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading().unwrap().1.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading().unwrap().1.clone();
            if lm_j.divides(&lm_i) && (lm_j != lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Poly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce each element against the others
    for i in 0..minimal.len() {
        let g = minimal[i].clone();
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, h)| if j != i { Some(h.clone()) } else { None })
            .collect();
        minimal[i] = normal_form(&g, &others).monic();
    }
    minimal.sort_by(|a, b| {
        let (_, ma) = a.leading().expect("nonzero");
        let (_, mb) = b.leading().expect("nonzero");
        compare(ma, mb, &a.ring.order).then(Ordering::Equal)
    });
    minimal
}

/// Intersection `I ∩ k[kept vars]` computed with a block elimination order.
/// `drop` lists variable indices of `I`'s ring to eliminate. The result
/// lives in a fresh grevlex ring on the remaining variables.
pub fn eliminate(ideal: &Ideal, drop: &[usize], cfg: &GroebnerConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let dropped: BTreeSet<usize> = drop.iter().copied().collect();
    let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();

    // block ring with dropped variables in front
    let mut big_vars: Vec<String> = Vec::with_capacity(n);
    let mut var_map = vec![usize::MAX; n];
    for (pos, &i) in dropped.iter().enumerate() {
        big_vars.push(ring.vars[i].clone());
        var_map[i] = pos;
    }
    for (pos, &i) in kept.iter().enumerate() {
        big_vars.push(ring.vars[i].clone());
        var_map[i] = dropped.len() + pos;
    }
    let big_ring = Ring::new(
        ring.field.clone(),
        big_vars,
        MonomialOrder::elimination(dropped.len()),
    );
    let big_gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|g| g.map_vars(&var_map, &big_ring))
        .collect();
    let gb = groebner(&big_gens, &big_ring, cfg)?;

    let small_ring = Ring::new(
        ring.field.clone(),
        kept.iter().map(|&i| ring.vars[i].clone()).collect(),
        MonomialOrder::GrevLex,
    );
    let front: Vec<usize> = (0..dropped.len()).collect();
    let mut back_map = vec![usize::MAX; big_ring.nvars()];
    for pos in 0..kept.len() {
        back_map[dropped.len() + pos] = pos;
    }
    let small_gens: Vec<Poly> = gb
        .iter()
        .filter(|g| !g.involves(&front))
        .map(|g| g.map_vars(&back_map, &small_ring))
        .collect();
    let result = Ideal::new(&small_ring, small_gens);
    // the filtered elements already form a reduced grevlex basis
    let basis: Vec<Poly> = result.gens.clone();
    let _ = result.basis.set(basis);
    Ok(result)
}

/// `I : f^∞` by the extra-variable method: adjoin z, add z*f - 1, eliminate z.
pub fn saturate(ideal: &Ideal, f: &Poly, cfg: &GroebnerConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    assert!(
        *f.ring == **ring,
        "saturation multiplier from a different ring"
    );
    let n = ring.nvars();
    let mut vars = vec!["#sat".to_string()];
    vars.extend(ring.vars.iter().cloned());
    let big_ring = Ring::new(ring.field.clone(), vars, MonomialOrder::elimination(1));
    let shift: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|g| g.map_vars(&shift, &big_ring))
        .collect();
    let z = Poly::var(&big_ring, 0);
    gens.push(
        z.mul(&f.map_vars(&shift, &big_ring))
            .sub(&Poly::one(&big_ring)),
    );
    let big = Ideal::new(&big_ring, gens);
    let out = eliminate(&big, &[0], cfg)?;
    // move back into the original ring (same variables, original order)
    let idmap: Vec<usize> = (0..n).collect();
    let gens: Vec<Poly> = out
        .gens()
        .iter()
        .map(|g| g.map_vars(&idmap, ring))
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// Intersection of two ideals of the same ring via the w-trick:
/// eliminate w from w*I + (1-w)*J.
pub fn intersect(a: &Ideal, b: &Ideal, cfg: &GroebnerConfig) -> Result<Ideal> {
    let ring = a.ring();
    assert!(*b.ring == **ring, "intersection needs a common ring");
    let n = ring.nvars();
    let mut vars = vec!["#int".to_string()];
    vars.extend(ring.vars.iter().cloned());
    let big_ring = Ring::new(ring.field.clone(), vars, MonomialOrder::elimination(1));
    let shift: Vec<usize> = (1..=n).collect();
    let w = Poly::var(&big_ring, 0);
    let one_minus_w = Poly::one(&big_ring).sub(&w);
    let mut gens: Vec<Poly> = Vec::new();
    for g in a.gens() {
        gens.push(w.mul(&g.map_vars(&shift, &big_ring)));
    }
    for g in b.gens() {
        gens.push(one_minus_w.mul(&g.map_vars(&shift, &big_ring)));
    }
    let big = Ideal::new(&big_ring, gens);
    let out = eliminate(&big, &[0], cfg)?;
    let idmap: Vec<usize> = (0..n).collect();
    let gens: Vec<Poly> = out
        .gens()
        .iter()
        .map(|g| g.map_vars(&idmap, ring))
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// Exact division g / f; `None` when f does not divide g.
pub fn divide_exact(g: &Poly, f: &Poly) -> Option<Poly> {
    let field = g.ring.field.clone();
    let (fc, fm) = f.leading()?;
    let mut cur = g.clone();
    let mut quot: Vec<(crate::coeff::Scalar, Monomial)> = Vec::new();
    while let Some((c, m)) = cur.leading().cloned() {
        if !fm.divides(&m) {
            return None;
        }
        let q = fm.quotient_into(&m);
        let factor = field.div(&c, fc).ok()?;
        cur = cur.sub(&f.term_mul(&factor, &q));
        quot.push((factor, q));
    }
    Some(Poly::from_terms(&g.ring, quot))
}

/// The colon ideal `I : f = {g : g f ∈ I}`, via `(I ∩ ⟨f⟩) / f`.
pub fn colon(ideal: &Ideal, f: &Poly, cfg: &GroebnerConfig) -> Result<Ideal> {
    if f.is_zero() {
        // I : 0 is the whole ring
        return Ok(Ideal::new(ideal.ring(), vec![Poly::one(ideal.ring())]));
    }
    let principal = Ideal::new(ideal.ring(), vec![f.clone()]);
    let meet = intersect(ideal, &principal, cfg)?;
    let gens: Vec<Poly> = meet
        .gens()
        .iter()
        .map(|g| divide_exact(g, f).expect("intersection elements are multiples of f"))
        .collect();
    Ok(Ideal::new(ideal.ring(), gens))
}

/// Presentation of the image of a polynomial map: the kernel of
/// `k[new vars]` -> target_ring/target_rels sending the j-th new variable to
/// `images[j]`. Returned together with the graph basis, which can re-express
/// subalgebra elements in the new variables.
#[derive(Debug)]
pub struct SubalgebraGraph {
    pub big_ring: Arc<Ring>,
    pub gb: Vec<Poly>,
    pub n_front: usize,
    pub back_ring: Arc<Ring>,
    pub kernel: Ideal,
}

impl SubalgebraGraph {
    pub fn build(
        target_ring: &Arc<Ring>,
        target_rels: &[Poly],
        new_vars: &[String],
        images: &[Poly],
        cfg: &GroebnerConfig,
    ) -> Result<SubalgebraGraph> {
        assert_eq!(new_vars.len(), images.len());
        let n_front = target_ring.nvars();
        let mut vars = target_ring.vars.clone();
        vars.extend(new_vars.iter().cloned());
        let big_ring = Ring::new(
            target_ring.field.clone(),
            vars,
            MonomialOrder::elimination(n_front),
        );
        let emb: Vec<usize> = (0..n_front).collect();
        let mut gens: Vec<Poly> = target_rels
            .iter()
            .map(|g| g.map_vars(&emb, &big_ring))
            .collect();
        for (j, img) in images.iter().enumerate() {
            assert!(*img.ring == **target_ring, "image from a different ring");
            let xj = Poly::var(&big_ring, n_front + j);
            gens.push(xj.sub(&img.map_vars(&emb, &big_ring)));
        }
        let gb = groebner(&gens, &big_ring, cfg)?;

        let back_ring = Ring::new(
            target_ring.field.clone(),
            new_vars.to_vec(),
            MonomialOrder::GrevLex,
        );
        let front: Vec<usize> = (0..n_front).collect();
        let mut back_map = vec![usize::MAX; big_ring.nvars()];
        for j in 0..new_vars.len() {
            back_map[n_front + j] = j;
        }
        let kernel_gens: Vec<Poly> = gb
            .iter()
            .filter(|g| !g.involves(&front))
            .map(|g| g.map_vars(&back_map, &back_ring))
            .collect();
        let kernel = Ideal::new(&back_ring, kernel_gens);
        let basis = kernel.gens.clone();
        let _ = kernel.basis.set(basis);
        Ok(SubalgebraGraph {
            big_ring,
            gb,
            n_front,
            back_ring,
            kernel,
        })
    }

    /// Re-express a target-ring element in the new variables, when it lies in
    /// the subalgebra generated by the images (modulo the target relations).
    pub fn express(&self, elem: &Poly) -> Result<Poly> {
        let emb: Vec<usize> = (0..self.n_front).collect();
        let big = elem.map_vars(&emb, &self.big_ring);
        let nf = normal_form(&big, &self.gb);
        let front: Vec<usize> = (0..self.n_front).collect();
        if nf.involves(&front) {
            return Err(Error::NotInSubalgebra(elem.to_string()));
        }
        let mut back_map = vec![usize::MAX; self.big_ring.nvars()];
        for j in 0..self.back_ring.nvars() {
            back_map[self.n_front + j] = j;
        }
        Ok(nf.map_vars(&back_map, &self.back_ring))
    }
}

/// Kernel of the ring map determined by `images`, as an ideal in a fresh
/// ring on `new_vars`.
pub fn map_kernel(
    target_ring: &Arc<Ring>,
    target_rels: &[Poly],
    new_vars: &[String],
    images: &[Poly],
    cfg: &GroebnerConfig,
) -> Result<Ideal> {
    Ok(SubalgebraGraph::build(target_ring, target_rels, new_vars, images, cfg)?.kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{field_make, FieldSpec};
    use crate::poly::MonomialOrder;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    fn ring(vars: &[&str], order: MonomialOrder) -> Arc<Ring> {
        let f = field_make(FieldSpec::Rationals).unwrap();
        Ring::new(f, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    #[test]
    fn basis_of_two_variables_lex() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let i = Ideal::new(&r, vec![Poly::var(&r, 0), Poly::var(&r, 1)]);
        let b = i.basis(&cfg()).unwrap();
        assert_eq!(b, &[Poly::var(&r, 1), Poly::var(&r, 0)]);
    }

    #[test]
    fn hand_buchberger_example_lex() {
        // <x^2 - 1, x y - 1> under lex x > y: S-poly y(x^2-1) - x(xy-1) = x - y,
        // and the reduced basis is {x - y, y^2 - 1}
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let one = Poly::one(&r);
        let i = Ideal::new(&r, vec![x.mul(&x).sub(&one), x.mul(&y).sub(&one)]);
        let b = i.basis(&cfg()).unwrap();
        assert_eq!(b, &[y.mul(&y).sub(&one), x.sub(&y)]);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring(&["x"], MonomialOrder::GrevLex);
        let i = Ideal::zero(&r);
        assert!(i.basis(&cfg()).unwrap().is_empty());
        assert!(i.is_zero_ideal(&cfg()).unwrap());
    }

    #[test]
    fn reduce_examples() {
        let r = ring(&["x"], MonomialOrder::GrevLex);
        let x = Poly::var(&r, 0);
        let i = Ideal::new(&r, vec![x.clone()]);
        assert!(i.reduce(&x.mul(&x), &cfg()).unwrap().is_zero());

        // reduce(ad - bc, <ad - bc - 1>) = 1
        let r4 = ring(&["a", "b", "c", "d"], MonomialOrder::GrevLex);
        let (a, b, c, d) = (
            Poly::var(&r4, 0),
            Poly::var(&r4, 1),
            Poly::var(&r4, 2),
            Poly::var(&r4, 3),
        );
        let det = a.mul(&d).sub(&b.mul(&c));
        let i = Ideal::new(&r4, vec![det.sub(&Poly::one(&r4))]);
        assert_eq!(i.reduce(&det, &cfg()).unwrap(), Poly::one(&r4));
    }

    #[test]
    fn reduce_derived_from_basis() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let one = Poly::one(&r);
        let i = Ideal::new(&r, vec![x.mul(&x).sub(&one), x.mul(&y).sub(&one)]);
        assert!(i.reduce(&x.sub(&y), &cfg()).unwrap().is_zero());
    }

    #[test]
    fn eliminate_no_relation() {
        // eliminate s from <t - s^2>: nothing survives
        let r = ring(&["s", "t"], MonomialOrder::GrevLex);
        let s = Poly::var(&r, 0);
        let t = Poly::var(&r, 1);
        let i = Ideal::new(&r, vec![t.sub(&s.mul(&s))]);
        let out = eliminate(&i, &[0], &cfg()).unwrap();
        assert!(out.is_zero_ideal(&cfg()).unwrap());
    }

    #[test]
    fn eliminate_parabola_graph() {
        // eliminate s from <x - s, y - s^2> = <y - x^2>
        let r = ring(&["s", "x", "y"], MonomialOrder::GrevLex);
        let (s, x, y) = (Poly::var(&r, 0), Poly::var(&r, 1), Poly::var(&r, 2));
        let i = Ideal::new(&r, vec![x.sub(&s), y.sub(&s.mul(&s))]);
        let out = eliminate(&i, &[0], &cfg()).unwrap();
        let rr = out.ring().clone();
        let (x, y) = (Poly::var(&rr, 0), Poly::var(&rr, 1));
        let expect = Ideal::new(&rr, vec![y.sub(&x.mul(&x))]);
        assert!(ideal_equal(&out, &expect, &cfg()).unwrap());
    }

    #[test]
    fn eliminate_split_points_contraction() {
        // eliminate {y, s, u} from <y^2-1, su-1, v-uy, t-s^2> = <t v^2 - 1>
        let r = ring(&["y", "s", "u", "t", "v"], MonomialOrder::GrevLex);
        let (y, s, u, t, v) = (
            Poly::var(&r, 0),
            Poly::var(&r, 1),
            Poly::var(&r, 2),
            Poly::var(&r, 3),
            Poly::var(&r, 4),
        );
        let one = Poly::one(&r);
        let i = Ideal::new(
            &r,
            vec![
                y.mul(&y).sub(&one),
                s.mul(&u).sub(&one),
                v.sub(&u.mul(&y)),
                t.sub(&s.mul(&s)),
            ],
        );
        let out = eliminate(&i, &[0, 1, 2], &cfg()).unwrap();
        let rr = out.ring().clone();
        let (t, v) = (Poly::var(&rr, 0), Poly::var(&rr, 1));
        let expect = Ideal::new(&rr, vec![t.mul(&v.mul(&v)).sub(&Poly::one(&rr))]);
        assert!(ideal_equal(&out, &expect, &cfg()).unwrap());
    }

    #[test]
    fn saturate_examples() {
        let r = ring(&["t", "x"], MonomialOrder::GrevLex);
        let t = Poly::var(&r, 0);
        let x = Poly::var(&r, 1);
        let i = Ideal::new(&r, vec![t.mul(&x)]);
        let out = saturate(&i, &t, &cfg()).unwrap();
        assert!(ideal_equal(&out, &Ideal::new(&r, vec![x.clone()]), &cfg()).unwrap());

        // saturate(<x^2 - x>, x) = <x - 1>
        let r1 = ring(&["x"], MonomialOrder::GrevLex);
        let x = Poly::var(&r1, 0);
        let i = Ideal::new(&r1, vec![x.mul(&x).sub(&x)]);
        let out = saturate(&i, &x, &cfg()).unwrap();
        let expect = Ideal::new(&r1, vec![x.sub(&Poly::one(&r1))]);
        assert!(ideal_equal(&out, &expect, &cfg()).unwrap());

        // saturate(<x>, y) = <x>
        let r2 = ring(&["x", "y"], MonomialOrder::GrevLex);
        let x = Poly::var(&r2, 0);
        let y = Poly::var(&r2, 1);
        let i = Ideal::new(&r2, vec![x.clone()]);
        let out = saturate(&i, &y, &cfg()).unwrap();
        assert!(ideal_equal(&out, &i, &cfg()).unwrap());
    }

    #[test]
    fn saturation_contains_ideal() {
        let r = ring(&["t", "x"], MonomialOrder::GrevLex);
        let t = Poly::var(&r, 0);
        let x = Poly::var(&r, 1);
        let i = Ideal::new(&r, vec![t.mul(&x), x.mul(&x)]);
        let sat = saturate(&i, &t, &cfg()).unwrap();
        for g in i.gens() {
            assert!(sat.contains(g, &cfg()).unwrap());
        }
        // f*g in sat implies g in sat: saturation at t is already t-saturated
        let again = saturate(&sat, &t, &cfg()).unwrap();
        assert!(ideal_equal(&sat, &again, &cfg()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let i = Ideal::new(&r, vec![x.mul(&y)]);
        let out = colon(&i, &x, &cfg()).unwrap();
        assert!(ideal_equal(&out, &Ideal::new(&r, vec![y.clone()]), &cfg()).unwrap());

        // colon(<t v^2 - 1>, t) = <t v^2 - 1>: t is a unit modulo the ideal
        let r2 = ring(&["t", "v"], MonomialOrder::GrevLex);
        let t = Poly::var(&r2, 0);
        let v = Poly::var(&r2, 1);
        let i = Ideal::new(&r2, vec![t.mul(&v.mul(&v)).sub(&Poly::one(&r2))]);
        let out = colon(&i, &t, &cfg()).unwrap();
        assert!(ideal_equal(&out, &i, &cfg()).unwrap());

        // colon(<0>, t) = <0>
        let z = Ideal::zero(&r2);
        let out = colon(&z, &t, &cfg()).unwrap();
        assert!(out.is_zero_ideal(&cfg()).unwrap());
    }

    #[test]
    fn ideal_equality_examples() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let one = Poly::one(&r);
        let a = Ideal::new(&r, vec![x.sub(&y), y.mul(&y).sub(&one)]);
        let b = Ideal::new(&r, vec![x.mul(&x).sub(&one), x.mul(&y).sub(&one)]);
        assert!(ideal_equal(&a, &b, &cfg()).unwrap());

        let c = Ideal::new(&r, vec![x.clone()]);
        let d = Ideal::new(&r, vec![x.mul(&x)]);
        assert!(!ideal_equal(&c, &d, &cfg()).unwrap());

        assert!(ideal_equal(
            &Ideal::zero(&r),
            &Ideal::new(&r, vec![Poly::zero(&r)]),
            &cfg()
        )
        .unwrap());
    }

    #[test]
    fn map_kernel_examples() {
        let target = ring(&["x"], MonomialOrder::GrevLex);
        let x = Poly::var(&target, 0);

        // u -> x^2 is injective on k[u]
        let k = map_kernel(&target, &[], &["u".into()], &[x.mul(&x)], &cfg()).unwrap();
        assert!(k.is_zero_ideal(&cfg()).unwrap());

        // u -> x, v -> x^2 has kernel <v - u^2>
        let k = map_kernel(
            &target,
            &[],
            &["u".into(), "v".into()],
            &[x.clone(), x.mul(&x)],
            &cfg(),
        )
        .unwrap();
        let rr = k.ring().clone();
        let (u, v) = (Poly::var(&rr, 0), Poly::var(&rr, 1));
        let expect = Ideal::new(&rr, vec![v.sub(&u.mul(&u))]);
        assert!(ideal_equal(&k, &expect, &cfg()).unwrap());

        // u -> x in k[x]/(x^2) pulls back the relation: kernel <u^2>
        let k = map_kernel(&target, &[x.mul(&x)], &["u".into()], &[x.clone()], &cfg()).unwrap();
        let rr = k.ring().clone();
        let u = Poly::var(&rr, 0);
        let expect = Ideal::new(&rr, vec![u.mul(&u)]);
        assert!(ideal_equal(&k, &expect, &cfg()).unwrap());
    }

    #[test]
    fn express_finds_subalgebra_representation() {
        // subalgebra of k[x] generated by x^2 and x^3: x^6 = (x^2)^3 = (x^3)^2
        let target = ring(&["x"], MonomialOrder::GrevLex);
        let x = Poly::var(&target, 0);
        let graph = SubalgebraGraph::build(
            &target,
            &[],
            &["p".into(), "q".into()],
            &[x.pow(2), x.pow(3)],
            &cfg(),
        )
        .unwrap();
        let e = graph.express(&x.pow(6)).unwrap();
        assert!(!e.is_zero());
        // x itself is not in the subalgebra
        assert!(matches!(graph.express(&x), Err(Error::NotInSubalgebra(_))));
    }

    #[test]
    fn resource_cap_reports_cleanly() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GrevLex);
        let tight = GroebnerConfig {
            max_pairs: 1,
            max_degree: 60,
        };
        let (x, y, z) = (Poly::var(&r, 0), Poly::var(&r, 1), Poly::var(&r, 2));
        let gens = vec![
            x.pow(3).sub(&y.mul(&z)),
            y.pow(3).sub(&x.mul(&z)),
            z.pow(3).sub(&x.mul(&y)),
        ];
        let i = Ideal::new(&r, gens);
        match i.basis(&tight) {
            Err(Error::ResourceLimit { .. }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn division_is_exact() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.add(&y);
        let g = f.mul(&f).mul(&x);
        let q = divide_exact(&g, &f).unwrap();
        assert_eq!(q, f.mul(&x));
        assert!(divide_exact(&x, &y).is_none());
    }
}
