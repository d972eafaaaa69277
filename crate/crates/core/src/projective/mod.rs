//! The cohomology of `CP^∞_G`, graded on `a + bΛ + nΩ`, with its fixed-set
//! restrictions and the checks establishing freeness on the basis B.

pub mod basis;
pub mod checks;
pub mod degree;
pub mod fixed;
pub mod ring;

pub use basis::{enumerate_basis_b, BasisBMonomial, CpMonomial};
pub use degree::PiDegree;
pub use fixed::{
    in_mv_kernel, pi, pi_minus, pi_plus, restrict, restrict_both, restrict_minus, restrict_plus,
    FixedEapElement, FixedElement, FixedEpElement, FixedPoly, Side, ZElement,
};
pub use ring::{chi_star, cp_mul, normal_form, normalize, CpElement};
