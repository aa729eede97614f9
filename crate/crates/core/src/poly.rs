//! Multivariate polynomials over an exact coefficient field, with
//! configurable monomial orders including block elimination orders.
//!
//! Terms are kept sorted strictly descending in the ring's order with no
//! zero coefficients and no duplicate monomials; every operation maintains
//! that canonical form. Exponent vectors are dense: variable counts stay
//! small for everything this engine does.

use crate::coeff::{scalar_is_atomic, Field, Scalar};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A monomial as a dense exponent vector indexed by ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total order on monomials. Block orders make the first `front` variables
/// an elimination block: any monomial containing a front variable exceeds
/// every monomial in back variables only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block {
        front: usize,
        front_order: Box<MonomialOrder>,
        back_order: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn elimination(front: usize) -> Self {
        MonomialOrder::Block {
            front,
            front_order: Box::new(MonomialOrder::GrevLex),
            back_order: Box::new(MonomialOrder::GrevLex),
        }
    }
}

fn cmp_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // reverse lexicographic from the last variable: smaller trailing
            // exponent wins
            for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Compare two exponent vectors under an order.
pub fn compare(m1: &Monomial, m2: &Monomial, order: &MonomialOrder) -> Ordering {
    cmp_slices(&m1.0, &m2.0, order)
}

fn cmp_slices(a: &[u16], b: &[u16], order: &MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::GrevLex => cmp_grevlex(a, b),
        MonomialOrder::Lex => cmp_lex(a, b),
        MonomialOrder::Block {
            front,
            front_order,
            back_order,
        } => match cmp_slices(&a[..*front], &b[..*front], front_order) {
            Ordering::Equal => cmp_slices(&a[*front..], &b[*front..], back_order),
            other => other,
        },
    }
}

/// A polynomial ring: coefficient field, named variables, monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { field, vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A polynomial in canonical form.
#[derive(Debug, Clone)]
pub struct Poly {
    pub ring: Arc<Ring>,
    /// (coefficient, monomial), strictly descending in the ring's order.
    pub terms: Vec<(Scalar, Monomial)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

fn assert_same_ring(a: &Poly, b: &Poly) {
    assert!(*a.ring == *b.ring, "polynomials from different rings");
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Poly {
        if ring.field.is_zero(&c) {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.nvars()))],
        }
    }

    pub fn var(ring: &Arc<Ring>, idx: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: vec![(ring.field.one(), Monomial::var(ring.nvars(), idx))],
        }
    }

    pub fn from_i64(ring: &Arc<Ring>, n: i64) -> Poly {
        Poly::constant(ring, ring.field.from_i64(n))
    }

    /// Build from arbitrary (coefficient, monomial) pairs, normalizing.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Scalar, Monomial)>) -> Poly {
        let mut terms = terms;
        terms.sort_by(|a, b| compare(&b.1, &a.1, &ring.order).then(Ordering::Equal));
        let mut out: Vec<(Scalar, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = ring.field.add(&last.0, &c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !ring.field.is_zero(c));
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].1.is_one()
            && self.ring.field.is_one(&self.terms[0].0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].1.is_one())
    }

    pub fn leading(&self) -> Option<&(Scalar, Monomial)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, m)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_same_ring(self, other);
        let field = &self.ring.field;
        let order = &self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match compare(ma, mb, order) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        let field = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Poly {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    pub fn term_mul(&self, c: &Scalar, m: &Monomial) -> Poly {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, n)| (field.mul(a, c), n.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_same_ring(self, other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        // accumulate products term by term; sizes stay small enough that a
        // merge per term is fine
        let mut acc = Poly::zero(&self.ring);
        for (c, m) in &other.terms {
            acc = acc.add(&self.term_mul(c, m));
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((c, _)) => {
                let inv = self
                    .ring
                    .field
                    .invert(c)
                    .expect("leading coefficient invertible");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Ring homomorphism determined by `images[i]` for variable i; all images
    /// must live in `target`. Respects + and *.
    pub fn substitute(&self, images: &[Poly], target: &Arc<Ring>) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::MissingImage(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let mut acc = Poly::zero(target);
        for (c, m) in &self.terms {
            let mut t = Poly::constant(target, target.field.embed(c));
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Move this polynomial into a ring whose variables include this ring's,
    /// at positions given by `var_map` (`var_map[i]` = index in target).
    pub fn map_vars(&self, var_map: &[usize], target: &Arc<Ring>) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &exp) in m.0.iter().enumerate() {
                    if exp > 0 {
                        e[var_map[i]] = exp;
                    }
                }
                (target.field.embed(c), Monomial(e))
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Poly {
        let field = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.0[idx] > 0)
            .map(|(c, m)| {
                let e = m.0[idx];
                let mut n = m.clone();
                n.0[idx] = e - 1;
                (field.mul(c, &field.from_i64(e as i64)), n)
            })
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Largest exponent of variable `idx` in any term.
    pub fn degree_in(&self, idx: usize) -> u16 {
        self.terms.iter().map(|(_, m)| m.0[idx]).max().unwrap_or(0)
    }

    /// Whether any term involves one of the given variables.
    pub fn involves(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|(_, m)| vars.iter().any(|&v| m.0[v] > 0))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg_c = field.neg(c);
            let flip = scalar_is_atomic(field, &neg_c) && !scalar_is_atomic(field, c);
            let (sign, coeff) = match (i > 0, flip) {
                (true, true) => (" - ", neg_c),
                (true, false) => (" + ", c.clone()),
                (false, true) => ("-", neg_c),
                (false, false) => ("", c.clone()),
            };
            write!(f, "{sign}")?;
            let coeff_str = field.display(&coeff).to_string();
            let coeff_atomic = scalar_is_atomic(field, &coeff) && !coeff_str.contains('*');
            if m.is_one() {
                if coeff_atomic {
                    write!(f, "{coeff_str}")?;
                } else {
                    write!(f, "({coeff_str})")?;
                }
            } else {
                if field.is_one(&coeff) {
                    // omit unit coefficient
                } else if coeff_atomic {
                    write!(f, "{coeff_str}*")?;
                } else {
                    write!(f, "({coeff_str})*")?;
                }
                let mut first = true;
                for (v, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{}", self.ring.vars[v])?;
                    } else {
                        write!(f, "{}^{}", self.ring.vars[v], e)?;
                    }
                }
            }
        }
        Ok(())
    }
}
