//! Finitely presented commutative algebras, algebra maps, involutions,
//! eigen-splitting of generators, and tensor products.
//!
//! Generators of an algebra are exactly its presentation variables. An
//! involution splits each generator into (a + θa)/2 and (a - θa)/2; zero
//! components are dropped and proportional components are identified, so the
//! split stores one representative per ray together with the factor that
//! recovers each generator's component.

use crate::coeff::{Field, Scalar};
use crate::error::{Error, Result};
use crate::ideals::{ideal_equal, GroebnerConfig, Ideal};
use crate::poly::{MonomialOrder, Poly, Ring};
use std::sync::Arc;

/// A finitely presented commutative algebra: polynomial ring plus relation
/// ideal. The coefficient field always has 2 invertible (enforced by
/// `field_make`).
#[derive(Debug, Clone)]
pub struct FPAlgebra {
    pub ring: Arc<Ring>,
    pub relations: Ideal,
}

impl FPAlgebra {
    pub fn new(ring: Arc<Ring>, relations: Vec<Poly>) -> FPAlgebra {
        let relations = Ideal::new(&ring, relations);
        FPAlgebra { ring, relations }
    }

    pub fn free(field: Field, vars: Vec<String>) -> FPAlgebra {
        let ring = Ring::new(field, vars, MonomialOrder::GrevLex);
        FPAlgebra {
            relations: Ideal::zero(&ring),
            ring,
        }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gen(&self, idx: usize) -> Poly {
        Poly::var(&self.ring, idx)
    }

    /// Whether the presented algebra is the zero ring.
    pub fn is_zero_ring(&self, cfg: &GroebnerConfig) -> Result<bool> {
        self.relations.is_unit_ideal(cfg)
    }

    /// Normal form of an element modulo the relations.
    pub fn reduce(&self, p: &Poly, cfg: &GroebnerConfig) -> Result<Poly> {
        self.relations.reduce(p, cfg)
    }

    /// Same variables and relations over an extension of the coefficient
    /// field (scalars embedded componentwise).
    pub fn extend_scalars(&self, field: &Field) -> FPAlgebra {
        let ring = Ring::new(
            field.clone(),
            self.ring.vars.clone(),
            self.ring.order.clone(),
        );
        let idmap: Vec<usize> = (0..self.nvars()).collect();
        let rels = self
            .relations
            .gens()
            .iter()
            .map(|g| g.map_vars(&idmap, &ring))
            .collect();
        FPAlgebra::new(ring, rels)
    }
}

/// An algebra map given by generator images in the target ring.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    pub source: FPAlgebra,
    pub target: FPAlgebra,
    pub images: Vec<Poly>,
}

impl AlgebraMap {
    pub fn new(source: FPAlgebra, target: FPAlgebra, images: Vec<Poly>) -> Result<AlgebraMap> {
        if images.len() != source.nvars() {
            return Err(Error::MissingImage(format!(
                "expected {} images, got {}",
                source.nvars(),
                images.len()
            )));
        }
        for img in &images {
            assert!(*img.ring == *target.ring, "image from a different ring");
        }
        Ok(AlgebraMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(a: &FPAlgebra) -> AlgebraMap {
        let images = (0..a.nvars()).map(|i| a.gen(i)).collect();
        AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            images,
        }
    }

    /// Apply to an element of the source ring (no reduction).
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        p.substitute(&self.images, &self.target.ring)
    }

    /// Apply and reduce modulo the target relations.
    pub fn apply_reduced(&self, p: &Poly, cfg: &GroebnerConfig) -> Result<Poly> {
        self.target.reduce(&self.apply(p)?, cfg)
    }

    /// Well-definedness: every source relation maps into the target ideal.
    pub fn validate(&self, cfg: &GroebnerConfig) -> Result<()> {
        for rel in self.source.relations.gens() {
            let image = self.apply_reduced(rel, cfg)?;
            if !image.is_zero() {
                return Err(Error::NotWellDefined {
                    relation: rel.to_string(),
                    remainder: image.to_string(),
                });
            }
        }
        Ok(())
    }

    /// g ∘ self (first self, then g).
    pub fn then(&self, g: &AlgebraMap) -> Result<AlgebraMap> {
        assert!(
            *self.target.ring == *g.source.ring,
            "composition mismatch: target of first map differs from source of second"
        );
        let images = self
            .images
            .iter()
            .map(|p| g.apply(p))
            .collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(self.source.clone(), g.target.clone(), images)
    }

    /// Identity modulo relations on every generator.
    pub fn is_identity(&self, cfg: &GroebnerConfig) -> Result<bool> {
        if *self.source.ring != *self.target.ring {
            return Ok(false);
        }
        for i in 0..self.source.nvars() {
            let diff = self.images[i].sub(&self.source.gen(i));
            if !self.target.relations.contains(&diff, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Check that f and g are mutually inverse isomorphisms (both directions
/// compose to the identity modulo relations).
pub fn map_is_iso(f: &AlgebraMap, g: &AlgebraMap, cfg: &GroebnerConfig) -> Result<bool> {
    f.validate(cfg)?;
    g.validate(cfg)?;
    Ok(f.then(g)?.is_identity(cfg)? && g.then(f)?.is_identity(cfg)?)
}

/// A validated algebra involution.
#[derive(Debug, Clone)]
pub struct Involution {
    pub map: AlgebraMap,
}

impl Involution {
    pub fn identity(a: &FPAlgebra) -> Involution {
        Involution {
            map: AlgebraMap::identity(a),
        }
    }

    pub fn algebra(&self) -> &FPAlgebra {
        &self.map.source
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        self.map.apply(p)
    }

    /// Whether this involution commutes with another one on the same algebra.
    pub fn commutes_with(&self, other: &Involution, cfg: &GroebnerConfig) -> Result<bool> {
        let a = self.algebra();
        for i in 0..a.nvars() {
            let te = self.map.apply(&other.map.images[i])?;
            let et = other.map.apply(&self.map.images[i])?;
            if !a.relations.contains(&te.sub(&et), cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Validate that the generator images define an involution of `a`:
/// well-defined on relations, and of order 2 modulo relations.
pub fn validate_involution(
    a: &FPAlgebra,
    images: Vec<Poly>,
    cfg: &GroebnerConfig,
) -> Result<Involution> {
    let map = AlgebraMap::new(a.clone(), a.clone(), images)?;
    map.validate(cfg)?;
    let square = map.then(&map)?;
    for i in 0..a.nvars() {
        let diff = square.images[i].sub(&a.gen(i));
        if !a.relations.contains(&diff, cfg)? {
            return Err(Error::NotInvolution(format!(
                "theta^2({}) = {} differs from {}",
                a.ring.vars[i],
                a.reduce(&square.images[i], cfg)?,
                a.ring.vars[i]
            )));
        }
    }
    Ok(Involution { map })
}

/// One eigencomponent of a generator: `coeff * reps[rep]`.
#[derive(Debug, Clone)]
pub struct EigenComponent {
    pub rep: usize,
    pub coeff: Scalar,
}

/// Plus/minus eigencomponents of the generators, with zero components
/// dropped and proportional components identified.
#[derive(Debug, Clone)]
pub struct EigenSplit {
    pub plus_reps: Vec<Poly>,
    pub minus_reps: Vec<Poly>,
    /// Per generator: the plus and minus components, if nonzero.
    pub per_gen: Vec<(Option<EigenComponent>, Option<EigenComponent>)>,
}

fn register(reps: &mut Vec<Poly>, p: Poly, field: &Field) -> EigenComponent {
    let lc = p.leading().expect("nonzero").0.clone();
    let normal = p.monic();
    for (i, r) in reps.iter().enumerate() {
        let rc = r.leading().expect("nonzero").0.clone();
        if r.monic() == normal {
            // p = (lc / rc) * r
            let coeff = field
                .div(&lc, &rc)
                .expect("leading coefficients invertible");
            return EigenComponent { rep: i, coeff };
        }
    }
    reps.push(p);
    EigenComponent {
        rep: reps.len() - 1,
        coeff: field.one(),
    }
}

/// Split every generator into θ-eigencomponents (a ± θa)/2, reduced to
/// normal form modulo the relations.
pub fn eigen_split(a: &FPAlgebra, theta: &Involution, cfg: &GroebnerConfig) -> Result<EigenSplit> {
    let field = &a.ring.field;
    let half = field.from_ratio(1, 2)?;
    let mut plus_reps: Vec<Poly> = Vec::new();
    let mut minus_reps: Vec<Poly> = Vec::new();
    let mut per_gen = Vec::with_capacity(a.nvars());
    for i in 0..a.nvars() {
        let x = a.gen(i);
        let tx = theta.apply(&x)?;
        let plus = a.reduce(&x.add(&tx).scalar_mul(&half), cfg)?;
        let minus = a.reduce(&x.sub(&tx).scalar_mul(&half), cfg)?;
        let p = if plus.is_zero() {
            None
        } else {
            Some(register(&mut plus_reps, plus, field))
        };
        let m = if minus.is_zero() {
            None
        } else {
            Some(register(&mut minus_reps, minus, field))
        };
        per_gen.push((p, m));
    }
    Ok(EigenSplit {
        plus_reps,
        minus_reps,
        per_gen,
    })
}

impl EigenSplit {
    /// The plus component of generator `i` as a polynomial (zero if absent).
    pub fn plus_of(&self, i: usize, ring: &Arc<Ring>) -> Poly {
        match &self.per_gen[i].0 {
            None => Poly::zero(ring),
            Some(c) => self.plus_reps[c.rep].scalar_mul(&c.coeff),
        }
    }

    pub fn minus_of(&self, i: usize, ring: &Arc<Ring>) -> Poly {
        match &self.per_gen[i].1 {
            None => Poly::zero(ring),
            Some(c) => self.minus_reps[c.rep].scalar_mul(&c.coeff),
        }
    }
}

/// Tensor product A ⊗_k B with the variable injections recorded. Variable
/// names survive unless the two sets clash, in which case every variable
/// gets a `_1` / `_2` suffix.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub algebra: FPAlgebra,
    pub left_vars: Vec<usize>,
    pub right_vars: Vec<usize>,
}

pub fn tensor(a: &FPAlgebra, b: &FPAlgebra) -> Result<TensorProduct> {
    if a.ring.field != b.ring.field {
        return Err(Error::FieldMismatch(
            a.ring.field.spec().to_string(),
            b.ring.field.spec().to_string(),
        ));
    }
    let clash = a.ring.vars.iter().any(|v| b.ring.vars.contains(v));
    let mut vars: Vec<String> = Vec::with_capacity(a.nvars() + b.nvars());
    for v in &a.ring.vars {
        vars.push(if clash { format!("{v}_1") } else { v.clone() });
    }
    for v in &b.ring.vars {
        vars.push(if clash { format!("{v}_2") } else { v.clone() });
    }
    let ring = Ring::new(a.ring.field.clone(), vars, MonomialOrder::GrevLex);
    let left_vars: Vec<usize> = (0..a.nvars()).collect();
    let right_vars: Vec<usize> = (a.nvars()..a.nvars() + b.nvars()).collect();
    let mut rels: Vec<Poly> = Vec::new();
    for g in a.relations.gens() {
        rels.push(g.map_vars(&left_vars, &ring));
    }
    for g in b.relations.gens() {
        rels.push(g.map_vars(&right_vars, &ring));
    }
    Ok(TensorProduct {
        algebra: FPAlgebra::new(ring, rels),
        left_vars,
        right_vars,
    })
}

/// θ ⊗ η on a tensor product built by [`tensor`].
pub fn tensor_involution(
    tp: &TensorProduct,
    theta: &Involution,
    eta: &Involution,
) -> Result<Involution> {
    let ring = &tp.algebra.ring;
    let mut images = Vec::with_capacity(ring.nvars());
    for img in &theta.map.images {
        images.push(img.map_vars(&tp.left_vars, ring));
    }
    for img in &eta.map.images {
        images.push(img.map_vars(&tp.right_vars, ring));
    }
    let map = AlgebraMap::new(tp.algebra.clone(), tp.algebra.clone(), images)?;
    Ok(Involution { map })
}

/// Rename variables of an algebra (used to align presentations before
/// comparing ideals).
pub fn rename_vars(a: &FPAlgebra, names: Vec<String>) -> FPAlgebra {
    assert_eq!(names.len(), a.nvars());
    let ring = Ring::new(a.ring.field.clone(), names, a.ring.order.clone());
    let idmap: Vec<usize> = (0..a.nvars()).collect();
    let rels = a
        .relations
        .gens()
        .iter()
        .map(|g| g.map_vars(&idmap, &ring))
        .collect();
    FPAlgebra::new(ring, rels)
}

/// Ideal equality of two presentations after matching variables by position.
pub fn presentations_equal(a: &FPAlgebra, b: &FPAlgebra, cfg: &GroebnerConfig) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Ok(false);
    }
    let renamed = rename_vars(b, a.ring.vars.clone());
    let reordered = FPAlgebra {
        ring: a.ring.clone(),
        relations: Ideal::new(
            &a.ring,
            renamed
                .relations
                .gens()
                .iter()
                .map(|g| g.map_vars(&(0..a.nvars()).collect::<Vec<_>>(), &a.ring))
                .collect(),
        ),
    };
    ideal_equal(&a.relations, &reordered.relations, cfg)
}
