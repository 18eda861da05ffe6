//! Elementary complex kernels shared by the gamma engine and the series code.
//!
//! Everything here exists to keep small quantities small: expm1/log1p lifted
//! to complex arguments, the finite differences E_eps and P^m_eps, and
//! argument-reduced trigonometry that survives inputs within a few ulp of an
//! integer.

use crate::ComplexScalar;

/// Nearest integer, half away from zero.
pub fn rnd(x: f64) -> i32 {
    x.round() as i32
}

/// max(|Re w|, |Im w|); the accuracy metric used throughout.
pub fn inf_norm(w: ComplexScalar) -> f64 {
    w.re.abs().max(w.im.abs())
}

/// e^z - 1 without cancellation for small z.
pub fn expm1_c(z: ComplexScalar) -> ComplexScalar {
    let (x, y) = (z.re, z.im);
    // e^(x+iy) - 1 = expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y
    let em = x.exp_m1();
    let s2 = (0.5 * y).sin();
    ComplexScalar::new(em * y.cos() - 2.0 * s2 * s2, (em + 1.0) * y.sin())
}

/// log(1 + z) without cancellation for small z.
pub fn log1p_c(z: ComplexScalar) -> ComplexScalar {
    let (x, y) = (z.re, z.im);
    if x.abs().max(y.abs()) >= 0.5 {
        return (ComplexScalar::new(1.0 + x, y)).ln();
    }
    // |1+z|^2 = 1 + (2x + x^2 + y^2), the parenthesis evaluated directly
    ComplexScalar::new(
        0.5 * (2.0 * x + x * x + y * y).ln_1p(),
        y.atan2(1.0 + x),
    )
}

/// E_eps(z) = (e^(eps z) - 1)/eps, continued to eps = 0 by its limit z.
pub fn e_eps(eps: ComplexScalar, z: ComplexScalar) -> ComplexScalar {
    if eps == ComplexScalar::ZERO {
        return z;
    }
    expm1_c(eps * z) / eps
}

/// Rising factorial (z)_m.
pub fn pochhammer(z: ComplexScalar, m: u32) -> ComplexScalar {
    let mut p = ComplexScalar::ONE;
    for n in 0..m {
        p *= z + n as f64;
    }
    p
}

/// P^m_eps(z) = ((z+eps)_m - (z)_m)/eps, continued to eps = 0.
///
/// The factor z+eps+n0 nearest to zero is split off so the remaining product
/// can go through expm1(sum of log1p) without cancellation.
pub fn p_m_eps(z: ComplexScalar, eps: ComplexScalar, m: u32) -> ComplexScalar {
    let n0 = -rnd(z.re);
    let in_range = n0 >= 0 && n0 <= m as i32 - 1;
    let mut prod = ComplexScalar::ONE;
    for n in 0..m as i32 {
        if n != n0 || !in_range {
            prod *= z + eps + n as f64;
        }
    }
    let delta = if in_range { prod } else { ComplexScalar::ZERO };
    let zm = pochhammer(z, m);
    if eps == ComplexScalar::ZERO {
        let mut sum = ComplexScalar::ZERO;
        for n in 0..m as i32 {
            if n != n0 || !in_range {
                sum += (z + n as f64).finv();
            }
        }
        return delta + zm * sum;
    }
    let mut sum = ComplexScalar::ZERO;
    for n in 0..m as i32 {
        if n != n0 || !in_range {
            sum += log1p_c(eps / (z + n as f64));
        }
    }
    delta + zm * expm1_c(sum) / eps
}

/// sin(pi eps)/(pi eps), 1 at eps = 0; argument-reduced, so exactly 0 at the
/// nonzero integers.
pub fn sinc_pi(eps: ComplexScalar) -> ComplexScalar {
    if eps == ComplexScalar::ZERO {
        return ComplexScalar::ONE;
    }
    sin_pi_reduced(eps) / (std::f64::consts::PI * eps)
}

/// sin(pi (z + shift)) with the nearest integer removed from the *sum* before
/// sin is taken. The subtraction Re(z) - n is exact, so a distance to an
/// integer carried entirely by `shift` is preserved instead of being rounded
/// away when the sum is formed first.
pub fn sin_pi_sum(z: ComplexScalar, shift: ComplexScalar) -> ComplexScalar {
    let n = rnd(z.re + shift.re);
    let d = ComplexScalar::new((z.re - n as f64) + shift.re, z.im + shift.im);
    let s = (std::f64::consts::PI * d).sin();
    if n & 1 != 0 {
        -s
    } else {
        s
    }
}

/// tan(pi (z + shift)) with the same pair-aware reduction as `sin_pi_sum`.
pub fn tan_pi_sum(z: ComplexScalar, shift: ComplexScalar) -> ComplexScalar {
    let n = rnd(z.re + shift.re);
    let d = ComplexScalar::new((z.re - n as f64) + shift.re, z.im + shift.im);
    (std::f64::consts::PI * d).tan()
}

/// sin(pi z), exact zeros at integers, period error-free over |Re z| <= 1e9.
pub fn sin_pi_reduced(z: ComplexScalar) -> ComplexScalar {
    sin_pi_sum(z, ComplexScalar::ZERO)
}

/// tan(pi z) through the same argument reduction.
pub fn tan_pi_reduced(z: ComplexScalar) -> ComplexScalar {
    tan_pi_sum(z, ComplexScalar::ZERO)
}
