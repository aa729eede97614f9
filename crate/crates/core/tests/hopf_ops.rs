//! Hopf layer checks on the group corpus: O(SL2), the additive group, and
//! the one-dimensional torus.

mod common;

use common::*;
use contralg::hopf::{
    cartan_motion_check, contract_hopf, sl2n_embedding_check, validate_hopf,
    validate_hopf_involution, verify_contracted_hopf, HopfData,
};
use contralg::poly::{MonomialOrder, Poly, Ring};
use contralg::presentations::{tensor, validate_involution, FPAlgebra, Involution};
use contralg::Error;

/// O(SL2) with the matrix Hopf structure: Δ(g_ij) = Σ_k g_ik ⊗ g_kj,
/// ε = identity matrix, S = matrix inverse.
fn sl2_hopf() -> HopfData {
    let a = sl2();
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    let v = |name: &str| Poly::var(r, r.var_index(name).unwrap());
    let comul = vec![
        // Δa = a⊗a + b⊗c
        v("a_1").mul(&v("a_2")).add(&v("b_1").mul(&v("c_2"))),
        // Δb = a⊗b + b⊗d
        v("a_1").mul(&v("b_2")).add(&v("b_1").mul(&v("d_2"))),
        // Δc = c⊗a + d⊗c
        v("c_1").mul(&v("a_2")).add(&v("d_1").mul(&v("c_2"))),
        // Δd = c⊗b + d⊗d
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

/// The additive group on `Q[w]`.
fn ga_hopf() -> HopfData {
    let a = FPAlgebra::free(qq(), vec!["w".into()]);
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    let comul = vec![Poly::var(r, 0).add(&Poly::var(r, 1))];
    let counit = vec![qq().zero()];
    let antipode = vec![a.gen(0).neg()];
    HopfData::new(a, comul, counit, antipode).unwrap()
}

/// The torus `Q[z, zi]`/(z·zi - 1) with inversion as the involution.
fn gm_hopf() -> (HopfData, Involution) {
    let ring = Ring::new(qq(), vec!["z".into(), "zi".into()], MonomialOrder::GrevLex);
    let z = Poly::var(&ring, 0);
    let zi = Poly::var(&ring, 1);
    let a = FPAlgebra::new(ring.clone(), vec![z.mul(&zi).sub(&Poly::one(&ring))]);
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    let v = |name: &str| Poly::var(r, r.var_index(name).unwrap());
    let comul = vec![v("z_1").mul(&v("z_2")), v("zi_1").mul(&v("zi_2"))];
    let counit = vec![qq().one(), qq().one()];
    let antipode = vec![zi.clone(), z.clone()];
    let h = HopfData::new(a.clone(), comul, counit, antipode).unwrap();
    let theta = validate_involution(&a, vec![zi, z], &cfg()).unwrap();
    (h, theta)
}

#[test]
fn sl2_hopf_axioms_hold() {
    validate_hopf(&sl2_hopf(), &cfg()).unwrap();
}

#[test]
fn ga_hopf_axioms_hold() {
    validate_hopf(&ga_hopf(), &cfg()).unwrap();
}

#[test]
fn gm_hopf_axioms_hold() {
    validate_hopf(&gm_hopf().0, &cfg()).unwrap();
}

#[test]
fn broken_antipode_is_reported() {
    // S(w) = w on the additive group breaks the antipode law
    let a = FPAlgebra::free(qq(), vec!["w".into()]);
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    let comul = vec![Poly::var(r, 0).add(&Poly::var(r, 1))];
    let h = HopfData::new(a.clone(), comul, vec![qq().zero()], vec![a.gen(0)]).unwrap();
    match validate_hopf(&h, &cfg()) {
        Err(Error::HopfAxiom {
            axiom, generator, ..
        }) => {
            assert!(axiom.contains("antipode"));
            assert_eq!(generator, "w");
        }
        other => panic!("expected antipode failure, got {other:?}"),
    }
}

#[test]
fn sl2_theta_is_a_hopf_involution() {
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    validate_hopf_involution(&h, &theta, &cfg()).unwrap();
}

#[test]
fn sl2_contracted_comultiplication_matches_hand_expansion() {
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    // generators: [t, a+, b+, a-, b-]; square vars [t, a+_1, b+_1, a-_1, b-_1, a+_2, ...]
    let sq = &ch.square.ring;
    let v = |name: &str| Poly::var(sq, sq.var_index(name).unwrap());
    let t = Poly::var(sq, 0);
    // oracle (hand expansion of Δ(a+d)/2 over a = p1 + s M1 etc.):
    // 𝚫(p1) = p1⊗p1 - p2⊗p2 + t(M1⊗M1 + M2⊗M2)
    let expect_p1 = v("a+_1")
        .mul(&v("a+_2"))
        .sub(&v("b+_1").mul(&v("b+_2")))
        .add(&t.mul(&v("a-_1").mul(&v("a-_2")).add(&v("b-_1").mul(&v("b-_2")))));
    assert_eq!(ch.comul[0], expect_p1);

    // counits: 𝛆(p1) = 1, rest 0
    let f = qq();
    assert_eq!(ch.counit, vec![f.one(), f.zero(), f.zero(), f.zero()]);
}

#[test]
fn sl2_contracted_hopf_axioms_hold() {
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    verify_contracted_hopf(&ch, &cfg()).unwrap();
}

#[test]
fn ga_contraction_is_primitive() {
    let h = ga_hopf();
    let theta = validate_involution(&h.algebra, vec![h.algebra.gen(0).neg()], &cfg()).unwrap();
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    // 𝚫(v) = v⊗1 + 1⊗v, 𝛆(v) = 0, 𝐢(v) = -v
    let sq = &ch.square.ring;
    let expect = Poly::var(sq, 1).add(&Poly::var(sq, 2));
    assert_eq!(ch.comul[0], expect);
    assert_eq!(ch.counit, vec![qq().zero()]);
    assert_eq!(
        ch.antipode[0],
        Poly::var(&ch.contraction.algebra.ring, 1).neg()
    );
    verify_contracted_hopf(&ch, &cfg()).unwrap();
}

#[test]
fn gm_contracted_hopf() {
    let (h, theta) = gm_hopf();
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    // presentation Q[t][p, m]/(p^2 - t m^2 - 1)
    let r = &ch.contraction.algebra.ring;
    assert_eq!(r.vars, vec!["t".to_string(), "z+".into(), "z-".into()]);
    verify_contracted_hopf(&ch, &cfg()).unwrap();
    // 𝚫(p) = p⊗p + t·m⊗m, 𝚫(m) = m⊗p + p⊗m
    let sq = &ch.square.ring;
    let v = |name: &str| Poly::var(sq, sq.var_index(name).unwrap());
    let t = Poly::var(sq, 0);
    assert_eq!(
        ch.comul[0],
        v("z+_1")
            .mul(&v("z+_2"))
            .add(&t.mul(&v("z-_1").mul(&v("z-_2"))))
    );
    assert_eq!(
        ch.comul[1],
        v("z+_1").mul(&v("z-_2")).add(&v("z-_1").mul(&v("z+_2")))
    );
}

#[test]
fn non_hopf_involution_is_rejected() {
    // on Q[z, zi], swapping is a Hopf involution but negating z alone is not
    // even an algebra involution of the torus; use Ga with a shift-free
    // broken case instead: θ = id is Hopf, so break ε-compatibility via the
    // involution w -> w + something is not order 2; instead check Ga with
    // θ(w) = -w against a *wrong* Hopf structure where ε(w) = 1
    let a = FPAlgebra::free(qq(), vec!["w".into()]);
    let sq = tensor(&a, &a).unwrap();
    let r = &sq.algebra.ring;
    // Δ(w) = w⊗1 + 1⊗w + 1⊗1 - 1 is not coassociative-compatible with ε(w)=1;
    // simpler: keep Δ primitive but set ε(w) = 1 so the counit law fails at
    // validate_hopf; the Hopf-involution check is exercised by theta below
    let comul = vec![Poly::var(r, 0).add(&Poly::var(r, 1))];
    let h = HopfData::new(a.clone(), comul, vec![qq().one()], vec![a.gen(0).neg()]).unwrap();
    assert!(validate_hopf(&h, &cfg()).is_err());

    // a genuine non-Hopf involution: on Q[w] with the additive structure,
    // w -> -w + 2 is an involution but ε∘θ ≠ ε
    let h = ga_hopf();
    let img = h
        .algebra
        .gen(0)
        .neg()
        .add(&Poly::from_i64(&h.algebra.ring, 2));
    let theta = validate_involution(&h.algebra, vec![img], &cfg()).unwrap();
    assert!(matches!(
        validate_hopf_involution(&h, &theta, &cfg()),
        Err(Error::NotHopfInvolution(_))
    ));
}

#[test]
fn sl2_cartan_motion_fiber() {
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    let verdict = cartan_motion_check(&h, &ch, &cfg()).unwrap();
    assert!(verdict.graded_algebra_ok);
    assert!(verdict.fixed_subgroup_ok);
    assert!(verdict.minus_linear_ok);
    assert!(verdict.holds);

    // Δ̃(p1) at t = 0 is p1⊗p1 - p2⊗p2 and Δ̃(M1) has no M⊗M terms
    let sq = &ch.square.ring;
    let mut kill_t = vec![Poly::zero(sq)];
    for i in 1..sq.nvars() {
        kill_t.push(Poly::var(sq, i));
    }
    let at0 = ch.comul[0].substitute(&kill_t, sq).unwrap();
    let v = |name: &str| Poly::var(sq, sq.var_index(name).unwrap());
    assert_eq!(
        at0,
        v("a+_1").mul(&v("a+_2")).sub(&v("b+_1").mul(&v("b+_2")))
    );
}

#[test]
fn trivial_involution_cartan_fiber_is_original() {
    let h = ga_hopf();
    let theta = Involution::identity(&h.algebra);
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    let verdict = cartan_motion_check(&h, &ch, &cfg()).unwrap();
    assert!(verdict.holds);
}

#[test]
fn ga_cartan_fiber_is_ga_again() {
    let h = ga_hopf();
    let theta = validate_involution(&h.algebra, vec![h.algebra.gen(0).neg()], &cfg()).unwrap();
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    let verdict = cartan_motion_check(&h, &ch, &cfg()).unwrap();
    assert!(verdict.holds);
}

#[test]
fn sl2_embedding_into_sl4() {
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    let matrix = vec![vec![0usize, 1], vec![2, 3]];
    let verdict = sl2n_embedding_check(&h, &theta, &matrix, &cfg()).unwrap();
    assert!(verdict.entries_expressed);
    assert!(verdict.det_is_one);
    assert!(verdict.coalgebra_map);
    assert!(verdict.holds);
}

#[test]
fn sl2_embedding_with_identity_involution() {
    let h = sl2_hopf();
    let theta = Involution::identity(&h.algebra);
    let matrix = vec![vec![0usize, 1], vec![2, 3]];
    let verdict = sl2n_embedding_check(&h, &theta, &matrix, &cfg()).unwrap();
    assert!(verdict.holds);
}

#[test]
fn contracted_unit_fiber_is_hopf_isomorphic() {
    // specialization compatibility: the t = 1 fiber recovers O(SL2) as a
    // Hopf algebra: the algebra iso from unit_fiber_iso also intertwines the
    // comultiplications, Δ_A(φ X) = (φ⊗φ)(𝚫 X at t = 1)
    let h = sl2_hopf();
    let theta = sl2_theta(&h.algebra);
    let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
    let c = &ch.contraction;
    let one = qq().one();
    let verdict = contralg::contraction::unit_fiber_iso(c, &one, &one, &cfg()).unwrap();
    assert!(verdict.holds);

    let a = &h.algebra;
    let n = a.nvars();
    let sq = &h.square.algebra;
    let m = c.algebra.nvars() - 1;
    // φ⊗φ after substituting t = 1 into the contracted square
    let mut images = vec![Poly::one(&sq.ring)];
    let m1: Vec<usize> = (0..n).collect();
    let m2: Vec<usize> = (n..2 * n).collect();
    for side in [&m1, &m2] {
        for img in &verdict.forward.images {
            images.push(img.map_vars(side, &sq.ring));
        }
    }
    for (i, delta) in ch.comul.iter().enumerate() {
        let rhs = delta.substitute(&images, &sq.ring).unwrap();
        // Δ_A applied to the forward image of the i-th contraction generator
        let comul_map = h.comul_map().unwrap();
        let lhs = comul_map.apply(&verdict.forward.images[i]).unwrap();
        assert!(
            sq.relations.contains(&lhs.sub(&rhs), &cfg()).unwrap(),
            "comultiplication does not specialize at generator {i}"
        );
    }
    let _ = m;
}

#[test]
fn antipode_involutivity_on_corpus() {
    // 𝛆∘𝐢 = 𝛆 and 𝐢² = id on generators for the corpus groups
    for (h, theta) in [
        {
            let h = sl2_hopf();
            let th = sl2_theta(&h.algebra);
            (h, th)
        },
        {
            let h = ga_hopf();
            let th = validate_involution(&h.algebra, vec![h.algebra.gen(0).neg()], &cfg()).unwrap();
            (h, th)
        },
        {
            let (h, th) = gm_hopf();
            (h, th)
        },
    ] {
        let ch = contract_hopf(&h, &theta, &cfg()).unwrap();
        let anti = ch.antipode_map().unwrap();
        let square = anti.then(&anti).unwrap();
        assert!(square.is_identity(&cfg()).unwrap());
        for (j, img) in ch.antipode.iter().enumerate() {
            let e_of_i = ch.counit_poly(img).unwrap();
            let cring = &ch.contraction.algebra.ring;
            let expect = Poly::constant(cring, ch.counit[j].clone());
            assert_eq!(e_of_i, expect);
        }
    }
}
