//! Contraction algebras of finitely presented commutative algebras with
//! involutions, computed by explicit Groebner-basis elimination: the
//! presentation of the contraction over `k[t]`, its fibers, flatness and
//! descent checks, Hopf structure transport, and Lie algebra contraction
//! by structure constants.

pub mod coeff;
pub mod contraction;
pub mod error;
pub mod hopf;
pub mod ideals;
pub mod liecon;
pub mod parse;
pub mod poly;
pub mod presentations;

pub use coeff::{field_make, Field, FieldSpec, Scalar};
pub use contraction::{
    chart_gluing, contract, double_contract, fiber_descent_check, flat_base_change_check,
    flatness_check, graded_fiber_check, localize_check, rees_comparison, surjection_check,
    tensor_compat_check, unit_fiber_iso, ContractionPresentation, DoubleContraction, FiberAlgebra,
    GenTag, IsoVerdict,
};
pub use error::{Error, Result};
pub use hopf::{
    cartan_motion_check, contract_hopf, sl2n_embedding_check, validate_hopf,
    verify_contracted_hopf, CartanVerdict, ContractedHopf, EmbeddingVerdict, HopfData,
};
pub use ideals::{
    colon, eliminate, ideal_equal, map_kernel, normal_form, saturate, GroebnerConfig, Ideal,
    SubalgebraGraph,
};
pub use liecon::{
    contract_derivation_action, contract_lie, lie_eigensplit, ContractedAction, ContractedLie,
    LieData, LieSplit,
};
pub use parse::parse_poly;
pub use poly::{compare, Monomial, MonomialOrder, Poly, Ring};
pub use presentations::{
    eigen_split, map_is_iso, tensor, tensor_involution, validate_involution, AlgebraMap,
    EigenSplit, FPAlgebra, Involution, TensorProduct,
};
