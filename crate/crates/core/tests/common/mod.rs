#![allow(dead_code)]

use contralg::coeff::{field_make, Field, FieldSpec, Scalar};
use contralg::hopf::HopfData;
use contralg::ideals::GroebnerConfig;
use contralg::liecon::LieData;
use contralg::poly::{MonomialOrder, Poly, Ring};
use contralg::presentations::{tensor, validate_involution, FPAlgebra, Involution};

pub fn cfg() -> GroebnerConfig {
    GroebnerConfig::default()
}

pub fn qq() -> Field {
    field_make(FieldSpec::Rationals).unwrap()
}

/// O(SL2) = `Q[a,b,c,d]/(ad - bc - 1)`.
pub fn sl2() -> FPAlgebra {
    let ring = Ring::new(
        qq(),
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        MonomialOrder::GrevLex,
    );
    let (a, b, c, d) = (
        Poly::var(&ring, 0),
        Poly::var(&ring, 1),
        Poly::var(&ring, 2),
        Poly::var(&ring, 3),
    );
    let det = a.mul(&d).sub(&b.mul(&c)).sub(&Poly::one(&ring));
    FPAlgebra::new(ring, vec![det])
}

/// Transpose-inverse involution on O(SL2): a <-> d, b -> -c, c -> -b.
pub fn sl2_theta(a: &FPAlgebra) -> Involution {
    let r = &a.ring;
    let images = vec![
        Poly::var(r, 3),
        Poly::var(r, 2).neg(),
        Poly::var(r, 1).neg(),
        Poly::var(r, 0),
    ];
    validate_involution(a, images, &cfg()).unwrap()
}

/// `Q[w]` with the sign involution.
pub fn sign_line() -> (FPAlgebra, Involution) {
    let a = FPAlgebra::free(qq(), vec!["w".into()]);
    let theta = validate_involution(&a, vec![a.gen(0).neg()], &cfg()).unwrap();
    (a, theta)
}

/// `Q[w]`/(w^2 - 1) with the sign involution.
pub fn split_points() -> (FPAlgebra, Involution) {
    let ring = Ring::new(qq(), vec!["w".into()], MonomialOrder::GrevLex);
    let w = Poly::var(&ring, 0);
    let a = FPAlgebra::new(ring.clone(), vec![w.mul(&w).sub(&Poly::one(&ring))]);
    let theta = validate_involution(&a, vec![a.gen(0).neg()], &cfg()).unwrap();
    (a, theta)
}

/// `Q[x, y]` with the coordinate swap involution.
pub fn swap_plane() -> (FPAlgebra, Involution) {
    let a = FPAlgebra::free(qq(), vec!["x".into(), "y".into()]);
    let theta = validate_involution(&a, vec![a.gen(1), a.gen(0)], &cfg()).unwrap();
    (a, theta)
}

/// O(SL2) with the matrix Hopf structure: Δ(g_ij) = Σ_k g_ik ⊗ g_kj,
/// ε the identity matrix, S the matrix inverse.
pub fn sl2_hopf() -> HopfData {
    let a = sl2();
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    let v = |name: &str| Poly::var(r, r.var_index(name).unwrap());
    let comul = vec![
        v("a_1").mul(&v("a_2")).add(&v("b_1").mul(&v("c_2"))),
        v("a_1").mul(&v("b_2")).add(&v("b_1").mul(&v("d_2"))),
        v("c_1").mul(&v("a_2")).add(&v("d_1").mul(&v("c_2"))),
        v("c_1").mul(&v("b_2")).add(&v("d_1").mul(&v("d_2"))),
    ];
    let f = qq();
    let counit = vec![f.one(), f.zero(), f.zero(), f.one()];
    let ar = &a.ring;
    let antipode = vec![
        Poly::var(ar, 3),
        Poly::var(ar, 1).neg(),
        Poly::var(ar, 2).neg(),
        Poly::var(ar, 0),
    ];
    HopfData::new(a, comul, counit, antipode).unwrap()
}

fn sc(f: &Field, vals: &[i64]) -> Vec<Scalar> {
    vals.iter().map(|&v| f.from_i64(v)).collect()
}

/// sl2 with basis (e, h, f): `[h,e]` = 2e, `[h,f]` = -2f, `[e,f]` = h, and the
/// negative-transpose involution.
pub fn sl2_lie() -> LieData {
    let f = qq();
    let z = || vec![f.zero(), f.zero(), f.zero()];
    let mut brackets = vec![vec![z(); 3]; 3];
    brackets[1][0] = sc(&f, &[2, 0, 0]);
    brackets[0][1] = sc(&f, &[-2, 0, 0]);
    brackets[1][2] = sc(&f, &[0, 0, -2]);
    brackets[2][1] = sc(&f, &[0, 0, 2]);
    brackets[0][2] = sc(&f, &[0, 1, 0]);
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

/// Left-invariant derivations of O(SL2) indexed by the (e, h, f) basis:
/// D_X(g_ij) = (g · X)_ij.
pub fn sl2_action(a: &FPAlgebra) -> Vec<Vec<Poly>> {
    let r = &a.ring;
    let (ga, gb, gc, gd) = (
        Poly::var(r, 0),
        Poly::var(r, 1),
        Poly::var(r, 2),
        Poly::var(r, 3),
    );
    let zero = Poly::zero(r);
    vec![
        // e: a -> 0, b -> a, c -> 0, d -> c
        vec![zero.clone(), ga.clone(), zero.clone(), gc.clone()],
        // h: a -> a, b -> -b, c -> c, d -> -d
        vec![ga.clone(), gb.neg(), gc.clone(), gd.neg()],
        // f: a -> b, b -> 0, c -> d, d -> 0
        vec![gb.clone(), zero.clone(), gd.clone(), zero],
    ]
}
