//! The implicit coordinate map r -> y.
//!
//! Lambda^2 s r = arctanh(y) + sqrt(Lambda^2-1) arctan(sqrt(Lambda^2-1) y)
//! for lambda > 1; below 1 the second term continues to
//! -sqrt(1-Lambda^2) arctanh(sqrt(1-Lambda^2) y), and at lambda = 1 the map
//! is y = tanh(sr) in closed form.

use crate::{PtgError, PtgParams};

/// Solved point of the map. `one_minus_y2` and `exp_minus_2x` (with
/// x = arctanh y) are carried alongside y so that saturation keeps full
/// precision: near y = 1 the difference 1 - y*y computed from y alone
/// would lose everything, while 4e^{-2x}/(1+e^{-2x})^2 does not.
#[derive(Debug, Clone, Copy)]
pub struct YPoint {
    pub y: f64,
    pub one_minus_y2: f64,
    pub exp_minus_2x: f64,
}

pub fn lambda2_sr_of_y(p: &PtgParams, y: f64) -> Result<f64, PtgError> {
    if !(0.0..1.0).contains(&y) {
        return Err(PtgError::Domain(format!("y = {y} outside [0, 1)")));
    }
    let t = p.lambda * p.lambda - 1.0;
    let base = y.atanh();
    Ok(if t > 0.0 {
        let u = t.sqrt();
        base + u * (u * y).atan()
    } else if t < 0.0 {
        let u = (-t).sqrt();
        base - u * (u * y).atanh()
    } else {
        base
    })
}

/// Derivative dy/dr at a solved point; d(Lambda^2 s r)/dy telescopes to
/// Lambda^2 / ((1-y^2)(1+(Lambda^2-1)y^2)), so the reciprocal is cheap.
pub(crate) fn dy_dr(p: &PtgParams, yp: &YPoint) -> f64 {
    let t = p.lambda * p.lambda - 1.0;
    p.s * yp.one_minus_y2 * (1.0 + t * yp.y * yp.y)
}

pub fn y_search(p: &PtgParams, r: f64) -> Result<YPoint, PtgError> {
    if !(r >= 0.0) {
        return Err(PtgError::Domain(format!("r = {r} must be nonnegative")));
    }
    if r == 0.0 {
        return Ok(YPoint { y: 0.0, one_minus_y2: 1.0, exp_minus_2x: 1.0 });
    }
    let lam = p.lambda;
    let target = lam * lam * p.s * r;
    let t = lam * lam - 1.0;
    if t == 0.0 {
        return Ok(from_x(target));
    }

    // analytic bracket: bounding the inverse-trig term by its values at
    // y = 0 and y = 1 pins y between two tanh evaluations
    let (y_d, y_e) = if t > 0.0 {
        let u = t.sqrt();
        ((target - u * u.atan()).tanh().max(0.0), target.tanh())
    } else {
        let u = (-t).sqrt();
        (target.tanh(), (target + u * u.atanh()).tanh())
    };
    if y_d > 0.99 {
        return saturated(target, t);
    }

    let mut y = if t > 0.0 && y_d > 0.5 {
        y_d
    } else if t < 0.0 && y_e > 0.5 {
        y_e
    } else {
        (p.s * r).min(0.99)
    };
    let (mut lo, mut hi) = (y_d, y_e.min(1.0 - f64::EPSILON));
    if y < lo || y > hi {
        y = 0.5 * (lo + hi);
    }
    for _ in 0..100 {
        let f = lambda2_sr_of_y(p, y)? - target;
        if f > 0.0 {
            hi = y;
        } else {
            lo = y;
        }
        let omy2 = (1.0 - y) * (1.0 + y);
        let der = lam * lam / (omy2 * (1.0 + t * y * y));
        let mut next = y - f / der;
        if !(next > 0.0 && next < 1.0) || next < lo || next > hi {
            next = 0.5 * (lo + hi);
        }
        let done =
            (y - next).abs() <= 1e-15 * next.max(1.0) || f.abs() <= 1e-14 * target.max(1.0);
        y = next;
        if done {
            let omy2 = (1.0 - y) * (1.0 + y);
            return Ok(YPoint { y, one_minus_y2: omy2, exp_minus_2x: (1.0 - y) / (1.0 + y) });
        }
    }
    Err(PtgError::NoConvergence(100))
}

fn from_x(x: f64) -> YPoint {
    let e = (-2.0 * x).exp();
    let opp = 1.0 + e;
    YPoint { y: (1.0 - e) / opp, one_minus_y2: 4.0 * e / (opp * opp), exp_minus_2x: e }
}

/// Deep in the tail the Newton variable y is pinned to 1; iterate on
/// x = arctanh(y) instead, where the inverse-trig correction is a small
/// perturbation of the linear term and contracts in a few steps.
fn saturated(target: f64, t: f64) -> Result<YPoint, PtgError> {
    let correction = |y: f64| {
        if t > 0.0 {
            let u = t.sqrt();
            target - u * (u * y).atan()
        } else {
            let u = (-t).sqrt();
            target + u * (u * y).atanh()
        }
    };
    let mut x = correction(1.0);
    for _ in 0..200 {
        let next = correction(x.tanh());
        let delta = (next - x).abs();
        x = next;
        if delta <= 1e-15 * x {
            return Ok(from_x(x));
        }
    }
    Err(PtgError::NoConvergence(200))
}
