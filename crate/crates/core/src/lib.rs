//! Closed-form powers of one-cycle Sp(2) transfer matrices.
//!
//! A real unimodular 2×2 matrix is split into Bargmann factors
//! `rotation(θ₁)·boost(λ)·rotation(θ₂)`, rewritten as a similarity transform
//! of a Wigner little-group matrix `W`, and raised to the N-th power as
//! `C·Wᴺ·C⁻¹` at a cost that does not depend on N. The [`crystal`] module
//! applies this to finite periodic multilayers and delta-potential lattices.

pub mod bargmann;
pub mod crystal;
pub mod error;
pub mod mat2;
pub mod power;
pub mod wigner;

pub use bargmann::{
    bargmann_decompose, bargmann_decompose_with, recombine, symmetric_core, BargmannFactors,
    Recombination,
};
pub use error::{Error, Result};
pub use mat2::{
    boost, rotation, shear, squeeze45, Angle, Mat2, Rapidity, ShearOrientation, Tolerances,
    MAX_RAPIDITY,
};
pub use power::{
    chebyshev_power, closed_power, closed_power_signed, closed_power_with, naive_power,
};
pub use wigner::{
    classify, classify_with, params_from_bargmann, wigner_decompose, wigner_decompose_with,
    ClassTag, CoreParams, WignerClass, WignerDecomposition,
};
