//! Classification and linear momenta of the S-matrix pole states.

use crate::{ComplexScalar, PtgError, PtgParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    Bound,
    Antibound,
    Resonant,
}

#[derive(Debug, Clone, Copy)]
pub struct PoleSpec {
    pub n: u32,
    pub big_n: u32,
    pub kind: PoleKind,
    pub k: ComplexScalar,
    pub e: ComplexScalar,
}

/// Momentum of the pole state with radial quantum number n. Bound states
/// need N = 2n+ell+1 below both the shape bound and the depth bound;
/// past the shape bound the pole pair moves off the imaginary axis into
/// resonances. A negative discriminant inside the antibound window is the
/// complex-virtual pair and takes the outgoing sign.
pub fn k_ptg_calc(p: &PtgParams, n: u32) -> Result<PoleSpec, PtgError> {
    let big_n = 2 * n + p.ell + 1;
    let nf = big_n as f64;
    let one_minus_a = 1.0 - p.a_mass;
    let la2_1ma = p.lambda * p.lambda * one_minus_a;
    if p.nu.fract() == 0.0 && nf == p.nu {
        return Err(PtgError::VanishingState { big_n });
    }
    let b_lam = if la2_1ma > 2.0 {
        p.lambda * (one_minus_a / (la2_1ma - 2.0)).sqrt() * (p.nu + 0.5) - 0.5
    } else {
        f64::INFINITY
    };
    let b_nu = if p.nu.fract() == 0.0 { p.nu - 1.0 } else { p.nu.floor() };
    let delta = p.lambda * p.lambda * (p.nu + 0.5) * (p.nu + 0.5) * one_minus_a
        - (la2_1ma - 1.0) * (nf + 0.5) * (nf + 0.5);
    let (kind, sign) = if nf <= b_lam && nf <= b_nu {
        (PoleKind::Bound, 1.0)
    } else if nf <= b_lam {
        (PoleKind::Antibound, if delta >= 0.0 { 1.0 } else { -1.0 })
    } else {
        (PoleKind::Resonant, -1.0)
    };
    let sq = ComplexScalar::new(delta, 0.0).sqrt();
    let k = ComplexScalar::i() * p.s * (sign * sq - (nf + 0.5)) / one_minus_a;
    Ok(PoleSpec { n, big_n, kind, k, e: k * k / p.kin_fact })
}
