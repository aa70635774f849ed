//! Exact polynomials over the rationals, the Chebyshev and Morgan-Voyce
//! families, and symbolic identity verification.

pub mod families;
mod poly;
pub mod verify;

pub use families::{
    a_sq_as_poly, b_as_poly, c_as_poly, chebyshev_s, chebyshev_t, chebyshev_u, morgan_voyce_f,
    morgan_voyce_g, u_as_poly, Family,
};
pub use poly::DensePoly;
pub use verify::{
    all_expected, verify, verify_mv_identities, verify_s_identities, verify_ut, Counterexample,
    IdentityReport, IdentitySuite, Status,
};
