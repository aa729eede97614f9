//! Lie algebra contraction by structure constants: eigendecomposition of the
//! involution, the t-parametrized bracket, Jacobi verification, motion
//! algebra fibers, and contracted differential actions on algebras.
//!
//! The adapted basis is canonical: fixed-space vectors first, each eigenbasis
//! in reduced row echelon form over the field.

use crate::coeff::{Field, Scalar};
use crate::contraction::{contract, ContractionPresentation};
use crate::error::{Error, Result};
use crate::ideals::GroebnerConfig;
use crate::poly::{MonomialOrder, Poly, Ring};
use crate::presentations::{FPAlgebra, Involution};
use std::sync::Arc;

/// A finite-dimensional Lie algebra over an exact field, by structure
/// constants, together with an involution given as a matrix.
#[derive(Debug, Clone)]
pub struct LieData {
    pub field: Field,
    pub labels: Vec<String>,
    /// `brackets[i][j]` = coordinates of `[e_i, e_j]` in the basis.
    pub brackets: Vec<Vec<Vec<Scalar>>>,
    /// `theta[r][c]`: θ(e_c) = Σ_r `theta[r][c]` e_r.
    pub theta: Vec<Vec<Scalar>>,
}

// -- small exact linear algebra helpers ------------------------------------

fn mat_vec(field: &Field, m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    (0..m.len())
        .map(|r| {
            let mut acc = field.zero();
            for (c, x) in v.iter().enumerate() {
                acc = field.add(&acc, &field.mul(&m[r][c], x));
            }
            acc
        })
        .collect()
}

fn mat_mul(field: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = field.zero();
                    for k in 0..inner {
                        acc = field.add(&acc, &field.mul(&a[i][k], &b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form, in place; returns pivot columns.
pub fn rref(field: &Field, m: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.invert(&m[r][c]).expect("pivot invertible");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = field.mul(&f, &m[r][j]);
                    m[i][j] = field.sub(&m[i][j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    pivots
}

/// Basis of the nullspace of m (row vectors), echelonized.
pub fn nullspace(field: &Field, m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let mut work = m.to_vec();
    let pivots = rref(field, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![field.zero(); cols];
        v[f] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(&work[r][f]);
        }
        basis.push(v);
    }
    let mut b = basis;
    rref(field, &mut b);
    b
}

/// Inverse of a square matrix; errors when singular.
pub fn mat_inverse(field: &Field, m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut work: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    let pivots = rref(field, &mut work);
    if pivots != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidLieData(
            "singular change-of-basis matrix".into(),
        ));
    }
    Ok(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

// ---------------------------------------------------------------------------

impl LieData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for i in 0..n {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..n {
                if f.is_zero(&y[j]) {
                    continue;
                }
                let coeff = f.mul(&x[i], &y[j]);
                for k in 0..n {
                    let term = f.mul(&coeff, &self.brackets[i][j][k]);
                    out[k] = f.add(&out[k], &term);
                }
            }
        }
        out
    }

    /// Antisymmetry, the Jacobi identity, θ² = id, and θ being a bracket
    /// automorphism.
    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim();
        if self.brackets.len() != n
            || self
                .brackets
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
            || self.theta.len() != n
            || self.theta.iter().any(|r| r.len() != n)
        {
            return Err(Error::InvalidLieData("dimension mismatch".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let sum = f.add(&self.brackets[i][j][k], &self.brackets[j][i][k]);
                    if !f.is_zero(&sum) {
                        return Err(Error::InvalidLieData(format!(
                            "antisymmetry fails on ({}, {})",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        let basis: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { f.one() } else { f.zero() })
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc =
                        self.bracket_vec(&basis[i], &self.bracket_vec(&basis[j], &basis[k]));
                    let t2 = self.bracket_vec(&basis[j], &self.bracket_vec(&basis[k], &basis[i]));
                    let t3 = self.bracket_vec(&basis[k], &self.bracket_vec(&basis[i], &basis[j]));
                    for l in 0..n {
                        acc[l] = f.add(&acc[l], &f.add(&t2[l], &t3[l]));
                    }
                    if acc.iter().any(|x| !f.is_zero(x)) {
                        return Err(Error::InvalidLieData(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        let theta_sq = mat_mul(f, &self.theta, &self.theta);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { f.one() } else { f.zero() };
                if theta_sq[i][j] != expect {
                    return Err(Error::InvalidLieData("theta^2 is not the identity".into()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = mat_vec(f, &self.theta, &self.brackets[i][j]);
                let ti: Vec<Scalar> = (0..n).map(|r| self.theta[r][i].clone()).collect();
                let tj: Vec<Scalar> = (0..n).map(|r| self.theta[r][j].clone()).collect();
                let rhs = self.bracket_vec(&ti, &tj);
                if lhs != rhs {
                    return Err(Error::InvalidLieData(format!(
                        "theta is not a bracket automorphism on ({}, {})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Adapted eigenbasis: the fixed space 𝔨 and the anti-fixed space 𝔭, each in
/// reduced row echelon form.
#[derive(Debug, Clone)]
pub struct LieSplit {
    pub k_basis: Vec<Vec<Scalar>>,
    pub p_basis: Vec<Vec<Scalar>>,
}

pub fn lie_eigensplit(l: &LieData) -> Result<LieSplit> {
    l.validate()?;
    let f = &l.field;
    let n = l.dim();
    let mut minus_id = l.theta.clone();
    let mut plus_id = l.theta.clone();
    for i in 0..n {
        minus_id[i][i] = f.sub(&minus_id[i][i], &f.one());
        plus_id[i][i] = f.add(&plus_id[i][i], &f.one());
    }
    let k_basis = nullspace(f, &minus_id);
    let p_basis = nullspace(f, &plus_id);
    if k_basis.len() + p_basis.len() != n {
        return Err(Error::InvalidLieData(
            "theta is not diagonalizable with eigenvalues ±1".into(),
        ));
    }
    Ok(LieSplit { k_basis, p_basis })
}

/// The contraction: same module over `k[t]`, brackets unchanged on 𝔨×𝔤 and
/// multiplied by t on 𝔭×𝔭, in the adapted basis.
#[derive(Debug, Clone)]
pub struct ContractedLie {
    pub field: Field,
    pub ring: Arc<Ring>,
    pub dim_k: usize,
    pub dim_p: usize,
    /// Adapted basis vectors in the original coordinates, 𝔨 first.
    pub basis: Vec<Vec<Scalar>>,
    pub labels: Vec<String>,
    /// `brackets[i][j]` = adapted coordinates of `[b_i, b_j]`, entries in `k[t]`.
    pub brackets: Vec<Vec<Vec<Poly>>>,
}

impl ContractedLie {
    pub fn dim(&self) -> usize {
        self.dim_k + self.dim_p
    }

    fn bracket_vec(&self, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
        let n = self.dim();
        let mut out = vec![Poly::zero(&self.ring); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = x[i].mul(&y[j]);
                for k in 0..n {
                    out[k] = out[k].add(&coeff.mul(&self.brackets[i][j][k]));
                }
            }
        }
        out
    }

    /// Jacobi identity, identically in t.
    pub fn verify_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let basis: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Poly::one(&self.ring)
                        } else {
                            Poly::zero(&self.ring)
                        }
                    })
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let t1 = self.bracket_vec(&basis[i], &self.bracket_vec(&basis[j], &basis[k]));
                    let t2 = self.bracket_vec(&basis[j], &self.bracket_vec(&basis[k], &basis[i]));
                    let t3 = self.bracket_vec(&basis[k], &self.bracket_vec(&basis[i], &basis[j]));
                    for l in 0..n {
                        let sum = t1[l].add(&t2[l]).add(&t3[l]);
                        if !sum.is_zero() {
                            return Err(Error::InvalidLieData(format!(
                                "contracted Jacobi fails on basis triple ({i}, {j}, {k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Substitute t := t0. At t0 = 0 the 𝔭-part must be an abelian ideal.
    pub fn motion_fiber(&self, t0: &Scalar) -> Result<LieData> {
        let f = &self.field;
        let n = self.dim();
        let eval = |p: &Poly| -> Scalar {
            let mut acc = f.zero();
            for (c, m) in &p.terms {
                let mut v = c.clone();
                for _ in 0..m.0[0] {
                    v = f.mul(&v, t0);
                }
                acc = f.add(&acc, &v);
            }
            acc
        };
        let brackets: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.brackets[i][j].iter().map(&eval).collect())
                    .collect()
            })
            .collect();
        let mut theta = vec![vec![f.zero(); n]; n];
        for (i, row) in theta.iter_mut().enumerate() {
            row[i] = if i < self.dim_k {
                f.one()
            } else {
                f.neg(&f.one())
            };
        }
        let data = LieData {
            field: f.clone(),
            labels: self.labels.clone(),
            brackets,
            theta,
        };
        data.validate()?;
        if f.is_zero(t0) {
            // [𝔭, 𝔭] = 0 and [𝔤, 𝔭] ⊆ 𝔭: 𝔭 is an abelian ideal
            for i in self.dim_k..n {
                for j in self.dim_k..n {
                    if data.brackets[i][j].iter().any(|x| !f.is_zero(x)) {
                        return Err(Error::InvalidLieData(
                            "p-part brackets do not vanish at t = 0".into(),
                        ));
                    }
                }
            }
            for i in 0..n {
                for j in self.dim_k..n {
                    if data.brackets[i][j][..self.dim_k]
                        .iter()
                        .any(|x| !f.is_zero(x))
                    {
                        return Err(Error::InvalidLieData(
                            "p-part is not an ideal at t = 0".into(),
                        ));
                    }
                }
            }
        }
        Ok(data)
    }
}

pub fn contract_lie(l: &LieData) -> Result<ContractedLie> {
    let split = lie_eigensplit(l)?;
    let f = l.field.clone();
    let n = l.dim();
    let dim_k = split.k_basis.len();
    let dim_p = split.p_basis.len();
    let mut basis = split.k_basis.clone();
    basis.extend(split.p_basis.iter().cloned());
    // adapted coordinates: x = (S^T)^{-1} (e-coordinates)
    let st: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| basis[j][i].clone()).collect())
        .collect();
    let st_inv = mat_inverse(&f, &st)?;

    let ring = Ring::new(f.clone(), vec!["t".into()], MonomialOrder::GrevLex);
    let t = Poly::var(&ring, 0);
    let mut brackets = vec![vec![vec![Poly::zero(&ring); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let w = l.bracket_vec(&basis[i], &basis[j]);
            let adapted = mat_vec(&f, &st_inv, &w);
            // grading forced by θ being an automorphism
            let (lo, hi) = if (i < dim_k) == (j < dim_k) {
                (dim_k, n) // result lies in 𝔨: p-coordinates vanish
            } else {
                (0, dim_k) // result lies in 𝔭
            };
            for c in adapted[lo..hi].iter() {
                if !f.is_zero(c) {
                    return Err(Error::InvalidLieData(format!(
                        "bracket ({i}, {j}) violates the eigenspace grading"
                    )));
                }
            }
            let weight_t = i >= dim_k && j >= dim_k;
            for k in 0..n {
                let c = Poly::constant(&ring, adapted[k].clone());
                brackets[i][j][k] = if weight_t { t.mul(&c) } else { c };
            }
        }
    }
    let mut labels: Vec<String> = (0..dim_k).map(|i| format!("k{i}")).collect();
    labels.extend((0..dim_p).map(|j| format!("p{j}")));
    let out = ContractedLie {
        field: f,
        ring,
        dim_k,
        dim_p,
        basis,
        labels,
        brackets,
    };
    out.verify_jacobi()?;
    Ok(out)
}

/// A contracted differential action: the images of the contraction
/// presentation's variables under each adapted Lie basis derivation.
pub struct ContractedAction {
    pub contraction: ContractionPresentation,
    pub lie: ContractedLie,
    /// `images[i][v]` = 𝐱_i applied to ring variable v of the contraction
    /// (v = 0 is t, always 0).
    pub images: Vec<Vec<Poly>>,
}

fn apply_derivation(p: &Poly, images: &[Poly]) -> Poly {
    let ring = images
        .iter()
        .find(|q| !q.is_zero())
        .map(|q| q.ring.clone())
        .unwrap_or_else(|| images[0].ring.clone());
    let mut acc = Poly::zero(&ring);
    for (v, img) in images.iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        let dp = p.derivative(v);
        if dp.is_zero() {
            continue;
        }
        acc = acc.add(&dp.mul(img));
    }
    acc
}

/// Contract a derivation action of a Lie algebra on an algebra B along a
/// pair of compatible involutions. Verifies eigen-compatibility, the Leibniz
/// extension's well-definedness on the contraction ideal, and bracket
/// compatibility with the contracted Lie structure, as polynomial identities
/// in t.
pub fn contract_derivation_action(
    l: &LieData,
    b: &FPAlgebra,
    eta: &Involution,
    action: &[Vec<Poly>],
    cfg: &GroebnerConfig,
) -> Result<ContractedAction> {
    let lie = contract_lie(l)?;
    let n = l.dim();
    if action.len() != n || action.iter().any(|imgs| imgs.len() != b.nvars()) {
        return Err(Error::IncompatibleAction(
            "action images must cover every generator".into(),
        ));
    }
    let f = &l.field;
    if b.ring.field != *f {
        return Err(Error::FieldMismatch(
            b.ring.field.spec().to_string(),
            f.spec().to_string(),
        ));
    }

    // derivations in the adapted basis
    let adapted: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..b.nvars())
                .map(|g| {
                    let mut acc = Poly::zero(&b.ring);
                    for (a, imgs) in action.iter().enumerate() {
                        acc = acc.add(&imgs[g].scalar_mul(&lie.basis[i][a]));
                    }
                    acc
                })
                .collect()
        })
        .collect();

    // derivations must be Leibniz-compatible with the relations of B
    for (i, imgs) in adapted.iter().enumerate() {
        for rel in b.relations.gens() {
            let v = apply_derivation(rel, imgs);
            if !b.relations.contains(&v, cfg)? {
                return Err(Error::IncompatibleAction(format!(
                    "derivation {} does not preserve the relation {}",
                    lie.labels[i], rel
                )));
            }
        }
    }

    let c = contract(b, eta, cfg)?;

    // eigen-compatibility: a 𝔨-derivation preserves the η-eigenspaces, a
    // 𝔭-derivation swaps them
    for (i, imgs) in adapted.iter().enumerate() {
        let x_sign = if i < lie.dim_k { 1i32 } else { -1 };
        for (reps, b_sign) in [(&c.split.plus_reps, 1i32), (&c.split.minus_reps, -1)] {
            for rep in reps.iter() {
                let v = apply_derivation(rep, imgs);
                let ev = eta.apply(&v)?;
                let expect = if x_sign * b_sign == 1 {
                    v.clone()
                } else {
                    v.neg()
                };
                if !b.relations.contains(&ev.sub(&expect), cfg)? {
                    return Err(Error::IncompatibleAction(format!(
                        "derivation {} is not η-homogeneous on {}",
                        lie.labels[i], rep
                    )));
                }
            }
        }
    }

    // the four-case weighted action on tagged generators
    let wring = &c.witness_algebra.ring;
    let emb: Vec<usize> = (0..b.nvars()).collect();
    let u = c.u_poly();
    let t = c.t_poly();
    let mut images: Vec<Vec<Poly>> = Vec::with_capacity(n);
    for (i, imgs) in adapted.iter().enumerate() {
        let in_k = i < lie.dim_k;
        let mut row = vec![Poly::zero(&c.algebra.ring)];
        for rep in &c.split.plus_reps {
            let v = apply_derivation(rep, imgs).map_vars(&emb, wring);
            row.push(if in_k {
                c.express(&v)?
            } else {
                t.mul(&c.express(&u.mul(&v))?)
            });
        }
        for rep in &c.split.minus_reps {
            let v = apply_derivation(rep, imgs).map_vars(&emb, wring);
            row.push(if in_k {
                c.express(&u.mul(&v))?
            } else {
                c.express(&v)?
            });
        }
        images.push(row);
    }

    // Leibniz extension preserves the contraction ideal
    for (i, row) in images.iter().enumerate() {
        for rel in c.algebra.relations.gens() {
            let v = apply_derivation(rel, row);
            if !c.algebra.relations.contains(&v, cfg)? {
                return Err(Error::IncompatibleAction(format!(
                    "contracted derivation {} does not preserve the relation {}",
                    lie.labels[i], rel
                )));
            }
        }
    }

    // bracket compatibility: [𝐱_i, 𝐱_j] acts as Σ_k c'_{ij}^k(t) 𝐱_k
    let cring = &c.algebra.ring;
    let t_map = vec![0usize];
    for i in 0..n {
        for j in (i + 1)..n {
            for v in 0..cring.nvars() {
                let lhs = apply_derivation(&images[j][v], &images[i])
                    .sub(&apply_derivation(&images[i][v], &images[j]));
                let mut rhs = Poly::zero(cring);
                for k in 0..n {
                    let coeff = lie.brackets[i][j][k].map_vars(&t_map, cring);
                    if coeff.is_zero() {
                        continue;
                    }
                    rhs = rhs.add(&coeff.mul(&images[k][v]));
                }
                if !c.algebra.relations.contains(&lhs.sub(&rhs), cfg)? {
                    return Err(Error::IncompatibleAction(format!(
                        "bracket compatibility fails for ({}, {}) on {}",
                        lie.labels[i], lie.labels[j], cring.vars[v]
                    )));
                }
            }
        }
    }

    Ok(ContractedAction {
        contraction: c,
        lie,
        images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{field_make, FieldSpec};

    fn qq() -> Field {
        field_make(FieldSpec::Rationals).unwrap()
    }

    fn sc(f: &Field, vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| f.from_i64(v)).collect()
    }

    /// sl2 with basis (e, h, f): `[h,e]` = 2e, `[h,f]` = -2f, `[e,f]` = h, and the
    /// negative-transpose involution θe = -f, θh = -h, θf = -e.
    pub(super) fn sl2_lie() -> LieData {
        let f = qq();
        let z = || vec![f.zero(), f.zero(), f.zero()];
        let mut brackets = vec![vec![z(); 3]; 3];
        brackets[1][0] = sc(&f, &[2, 0, 0]); // [h, e] = 2e
        brackets[0][1] = sc(&f, &[-2, 0, 0]);
        brackets[1][2] = sc(&f, &[0, 0, -2]); // [h, f] = -2f
        brackets[2][1] = sc(&f, &[0, 0, 2]);
        brackets[0][2] = sc(&f, &[0, 1, 0]); // [e, f] = h
        brackets[2][0] = sc(&f, &[0, -1, 0]);
        let theta = vec![
            sc(&f, &[0, 0, -1]),
            sc(&f, &[0, -1, 0]),
            sc(&f, &[-1, 0, 0]),
        ];
        LieData {
            field: f,
            labels: vec!["e".into(), "h".into(), "f".into()],
            brackets,
            theta,
        }
    }

    #[test]
    fn sl2_validates() {
        sl2_lie().validate().unwrap();
    }

    #[test]
    fn sl2_eigensplit_by_inspection() {
        let split = lie_eigensplit(&sl2_lie()).unwrap();
        let f = qq();
        // 𝔨 = span{e - f}, 𝔭 = span{e + f, h} in echelon order
        assert_eq!(split.k_basis, vec![sc(&f, &[1, 0, -1])]);
        assert_eq!(split.p_basis, vec![sc(&f, &[1, 0, 1]), sc(&f, &[0, 1, 0])]);
    }

    #[test]
    fn abelian_split() {
        let f = qq();
        let z = || vec![f.zero(), f.zero()];
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into()],
            brackets: vec![vec![z(); 2]; 2],
            theta: vec![sc(&f, &[1, 0]), sc(&f, &[0, -1])],
        };
        let split = lie_eigensplit(&data).unwrap();
        assert_eq!(split.k_basis, vec![sc(&f, &[1, 0])]);
        assert_eq!(split.p_basis, vec![sc(&f, &[0, 1])]);
    }

    #[test]
    fn identity_involution_gives_all_fixed() {
        let f = qq();
        let z = || vec![f.zero(), f.zero()];
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into()],
            brackets: vec![vec![z(); 2]; 2],
            theta: vec![sc(&f, &[1, 0]), sc(&f, &[0, 1])],
        };
        let split = lie_eigensplit(&data).unwrap();
        assert_eq!(split.k_basis.len(), 2);
        assert!(split.p_basis.is_empty());
    }

    #[test]
    fn sl2_contraction_brackets_by_hand() {
        // adapted basis r = e - f, q = e + f, h (𝔨 first, then RREF of 𝔭):
        // [r, q] = 2h, [r, h] = -2q, [h, q] = 2t r
        let cl = contract_lie(&sl2_lie()).unwrap();
        let f = qq();
        assert_eq!(cl.dim_k, 1);
        assert_eq!(cl.dim_p, 2);
        let ring = &cl.ring;
        let t = Poly::var(ring, 0);
        let c = |v: i64| Poly::constant(ring, f.from_i64(v));
        // index 0 = r, 1 = q, 2 = h
        assert_eq!(cl.brackets[0][1], vec![c(0), c(0), c(2)]); // [r, q] = 2h
        assert_eq!(cl.brackets[0][2], vec![c(0), c(-2), c(0)]); // [r, h] = -2q
        assert_eq!(cl.brackets[2][1], vec![t.mul(&c(2)), c(0), c(0)]); // [h, q] = 2t r
        cl.verify_jacobi().unwrap();
    }

    #[test]
    fn heisenberg_contraction() {
        // [x, y] = z, θ = diag(-1, -1, 1): x, y ∈ 𝔭, z ∈ 𝔨; [x, y] becomes t z
        let f = qq();
        let z3 = || vec![f.zero(), f.zero(), f.zero()];
        let mut brackets = vec![vec![z3(); 3]; 3];
        brackets[0][1] = sc(&f, &[0, 0, 1]);
        brackets[1][0] = sc(&f, &[0, 0, -1]);
        let theta = vec![sc(&f, &[-1, 0, 0]), sc(&f, &[0, -1, 0]), sc(&f, &[0, 0, 1])];
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into(), "z".into()],
            brackets,
            theta,
        };
        let cl = contract_lie(&data).unwrap();
        assert_eq!(cl.dim_k, 1);
        // adapted order: [z; x, y]; [x, y] = t·z is brackets[1][2]
        let ring = &cl.ring;
        let t = Poly::var(ring, 0);
        assert_eq!(cl.brackets[1][2][0], t);
        assert!(cl.brackets[1][2][1].is_zero() && cl.brackets[1][2][2].is_zero());
    }

    #[test]
    fn motion_fiber_at_zero_and_one() {
        let cl = contract_lie(&sl2_lie()).unwrap();
        let f = qq();
        // t = 0: [r,h] = -2q, [r,q] = 2h, [h,q] = 0 — the plane motion algebra
        let at0 = cl.motion_fiber(&f.zero()).unwrap();
        assert_eq!(at0.brackets[0][2], sc(&f, &[0, -2, 0]));
        assert_eq!(at0.brackets[0][1], sc(&f, &[0, 0, 2]));
        assert!(at0.brackets[2][1].iter().all(|x| f.is_zero(x)));

        // t = 1: sl2 structure constants in the adapted basis
        let at1 = cl.motion_fiber(&f.one()).unwrap();
        assert_eq!(at1.brackets[2][1], sc(&f, &[2, 0, 0]));
        at1.validate().unwrap();
    }

    #[test]
    fn abelian_contraction_is_zero_everywhere() {
        let f = qq();
        let z = || vec![f.zero(), f.zero()];
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into()],
            brackets: vec![vec![z(); 2]; 2],
            theta: vec![sc(&f, &[1, 0]), sc(&f, &[0, -1])],
        };
        let cl = contract_lie(&data).unwrap();
        for t0 in [f.zero(), f.one(), f.from_i64(5)] {
            let fiber = cl.motion_fiber(&t0).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    assert!(fiber.brackets[i][j].iter().all(|x| f.is_zero(x)));
                }
            }
        }
    }

    #[test]
    fn grading_violation_is_rejected() {
        // θ = diag(1, -1) on a 2-dim algebra with [x, y] = x is not an
        // automorphism: θ[x,y] = x but [θx, θy] = -x
        let f = qq();
        let z = || vec![f.zero(), f.zero()];
        let mut brackets = vec![vec![z(); 2]; 2];
        brackets[0][1] = sc(&f, &[1, 0]);
        brackets[1][0] = sc(&f, &[-1, 0]);
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into()],
            brackets,
            theta: vec![sc(&f, &[1, 0]), sc(&f, &[0, -1])],
        };
        assert!(matches!(data.validate(), Err(Error::InvalidLieData(_))));
    }

    #[test]
    fn non_involution_matrix_is_rejected() {
        let f = qq();
        let z = || vec![f.zero(), f.zero()];
        let data = LieData {
            field: f.clone(),
            labels: vec!["x".into(), "y".into()],
            brackets: vec![vec![z(); 2]; 2],
            theta: vec![sc(&f, &[1, 1]), sc(&f, &[0, 1])],
        };
        assert!(matches!(data.validate(), Err(Error::InvalidLieData(_))));
    }
}
