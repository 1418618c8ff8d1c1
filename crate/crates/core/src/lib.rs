//! Exact computation in the graded free group algebra `ℂF_* = ⊕_n ℂF_n`
//! with the comultiplication `Δ_φ` built from the splitting maps
//! `φ_{n,m}: F_{nm} → F_n × F_m`, `c_{m(i−1)+j} ↦ (a_i, b_j)`.
//!
//! Elements are generic over the real scalar type: [`BigRational`] gives
//! exact Gaussian-rational coefficients, `f64`/`f32` give floating point.
//! The `Exact*` and `Approx*` aliases below fix the common choices.
//!
//! ```
//! use freebialg::{delta_phi, parse_direct_sum, ExactDirectSum};
//!
//! let x: ExactDirectSum = parse_direct_sum("F6: g2").unwrap();
//! assert_eq!(
//!     delta_phi(&x).to_string(),
//!     "F1⊗F6: g1 ⊗ g2; F2⊗F3: g1 ⊗ g2; F3⊗F2: g1 ⊗ g2; F6⊗F1: g2 ⊗ g1"
//! );
//! ```

pub mod algebra;
pub mod bialgebra;
pub mod corpus;
pub mod error;
pub mod json;
pub mod lincomb;
pub mod morphisms;
pub mod report;
pub mod reps;
pub mod scalar;
pub mod suite;
pub mod text;
pub mod words;

pub use num_rational::BigRational;

pub use algebra::{AlgebraElement, Slot, Tensor, TensorElement, TripleTensorElement};
pub use bialgebra::{
    coassoc_check, counit, counit_check, delta_phi, DirectSumElement, DirectSumTensor, DirectSumTriple, GradedTensor,
    UnitizedElement, UnitizedTensor,
};
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use morphisms::{Alpha, Beta, GradedEndo, Identity};
pub use reps::{Coset, PdFunction, SuppVector};
pub use scalar::Real;
pub use text::{parse_algebra_element, parse_direct_sum, parse_word};
pub use words::{phi, phi_inf, PairWord, Rank, ReducedWord, Syllable};

pub type ExactElement = AlgebraElement<BigRational>;
pub type ExactTensor = TensorElement<BigRational>;
pub type ExactDirectSum = DirectSumElement<BigRational>;
pub type ExactDirectSumTensor = DirectSumTensor<BigRational>;

pub type ApproxElement = AlgebraElement<f64>;
pub type ApproxTensor = TensorElement<f64>;
pub type ApproxDirectSum = DirectSumElement<f64>;
pub type ApproxDirectSumTensor = DirectSumTensor<f64>;
