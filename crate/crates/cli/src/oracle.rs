//! Independent reference values for the verify command. Two routes, neither
//! sharing code with the main evaluator: a double-double power series for
//! small arguments, and adaptive Dormand-Prince integration of the
//! hypergeometric differential equation along a path from a series-seeded
//! start point out to the target.

use clap::ValueEnum;
use ddc::Cdd;
use hyp2f1::{ComplexScalar, HypParams};

#[derive(Debug, Clone, thiserror::Error)]
pub enum OracleError {
    /// The integration path cannot avoid the singular point at z = 1.
    #[error("oracle path unsafe: {0}")]
    PathUnsafe(String),
    #[error("oracle did not converge: {0}")]
    NoConvergence(String),
    /// The requested point is outside this oracle's domain.
    #[error("oracle unsupported here: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Integrate the defining differential equation outward from |z| = 0.5.
    Ode,
    /// Sum the power series in double-double arithmetic; needs |z| <= 0.8.
    Series,
}

impl OracleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleKind::Ode => "ode",
            OracleKind::Series => "series",
        }
    }
}

pub fn oracle_value(p: &HypParams, kind: OracleKind) -> Result<ComplexScalar, OracleError> {
    match kind {
        OracleKind::Series => series_value(p),
        OracleKind::Ode => ode_value(p),
    }
}

/// Real z at or beyond 1 is taken as the limit from below the cut, matching
/// the evaluator's convention.
pub fn cut_nudged(z: ComplexScalar) -> ComplexScalar {
    if z.im == 0.0 && z.re >= 1.0 {
        ComplexScalar::new(z.re, -1e-307)
    } else {
        z
    }
}

pub fn on_cut(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re >= 1.0
}

fn near_nonpositive_integer(c: ComplexScalar) -> bool {
    c.im == 0.0 && c.re <= 1e-9 && (c.re - c.re.round()).abs() < 1e-9
}

fn inf(w: Cdd) -> f64 {
    let (re, im) = w.to_f64();
    re.abs().max(im.abs())
}

pub fn series_value(p: &HypParams) -> Result<ComplexScalar, OracleError> {
    if p.z.norm() > 0.8 {
        return Err(OracleError::Unsupported(
            "the series oracle needs |z| <= 0.8; use --oracle ode".into(),
        ));
    }
    if near_nonpositive_integer(p.c) {
        return Err(OracleError::Unsupported("c is at or near a nonpositive integer".into()));
    }
    let (re, im) = series_dd(p.a, p.b, p.c, p.z)?.to_f64();
    Ok(ComplexScalar::new(re, im))
}

fn series_dd(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<Cdd, OracleError> {
    let (za, zb, zc, zz) = (
        Cdd::new(a.re, a.im),
        Cdd::new(b.re, b.im),
        Cdd::new(c.re, c.im),
        Cdd::new(z.re, z.im),
    );
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    for n in 0..6000u32 {
        let nf = n as f64;
        let nc = Cdd::new(nf, 0.0);
        term = term * (za + nc) * (zb + nc) * zz / ((zc + nc) * Cdd::new(nf + 1.0, 0.0));
        sum = sum + term;
        if inf(term) <= 1e-33 * inf(sum) {
            return Ok(sum);
        }
    }
    Err(OracleError::NoConvergence("series oracle hit its term cap".into()))
}

const RTOL: f64 = 1e-12;
const ATOL: f64 = 1e-280;
const SAFE_DIST: f64 = 0.05;

type State = [ComplexScalar; 2];

fn segment_distance(a: ComplexScalar, b: ComplexScalar, p: ComplexScalar) -> f64 {
    let ab = b - a;
    let denom = ab.norm_sqr();
    if denom == 0.0 {
        return (p - a).norm();
    }
    let ap = p - a;
    let t = ((ap.re * ab.re + ap.im * ab.im) / denom).clamp(0.0, 1.0);
    (a + ab * t - p).norm()
}

pub fn ode_value(p: &HypParams) -> Result<ComplexScalar, OracleError> {
    let one = ComplexScalar::new(1.0, 0.0);
    let z = cut_nudged(p.z);
    if near_nonpositive_integer(p.c) {
        return Err(OracleError::Unsupported("c is at or near a nonpositive integer".into()));
    }
    if (z - one).norm() < SAFE_DIST {
        return Err(OracleError::PathUnsafe(format!(
            "target is within {SAFE_DIST} of the singular point z = 1"
        )));
    }
    if z.norm() <= 0.5 {
        return Err(OracleError::Unsupported(
            "|z| <= 0.5 sits inside the series seed disk; use --oracle series".into(),
        ));
    }
    let start = z * (0.5 / z.norm());
    let seeded = HypParams::new(p.a, p.b, p.c, start);
    let f0 = series_value(&seeded)?;
    let shifted = HypParams::new(p.a + one, p.b + one, p.c + one, start);
    let d0 = p.a * p.b / p.c * series_value(&shifted)?;
    let mut y: State = [f0, d0];
    // A straight radial leg when it keeps clear of z = 1, otherwise a detour
    // through a waypoint beside the singular point, on the side matching the
    // sign of Im z so cut-limit targets stay consistent.
    let legs: Vec<(ComplexScalar, ComplexScalar)> =
        if segment_distance(start, z, one) >= SAFE_DIST {
            vec![(start, z)]
        } else {
            let side = if z.im > 0.0 { 1.0 } else { -1.0 };
            let waypoint = ComplexScalar::new(1.0, 0.6 * side);
            vec![(start, waypoint), (waypoint, z)]
        };
    for (from, to) in legs {
        y = integrate(p, y, from, to)?;
    }
    Ok(y[0])
}

fn rhs(p: &HypParams, zeta: ComplexScalar, dir: ComplexScalar, y: &State) -> State {
    let one = ComplexScalar::new(1.0, 0.0);
    let d2 = (p.a * p.b * y[0] - (p.c - (p.a + p.b + one) * zeta) * y[1]) / (zeta * (one - zeta));
    [dir * y[1], dir * d2]
}

fn lc(base: &State, h: f64, terms: &[(f64, State)]) -> State {
    let mut out = *base;
    for (w, k) in terms {
        out[0] += k[0] * (h * w);
        out[1] += k[1] * (h * w);
    }
    out
}

fn dp54(p: &HypParams, from: ComplexScalar, dir: ComplexScalar, t: f64, h: f64, y: &State) -> (State, State) {
    let zeta = |s: f64| from + dir * s;
    let k1 = rhs(p, zeta(t), dir, y);
    let k2 = rhs(p, zeta(t + 0.2 * h), dir, &lc(y, h, &[(1.0 / 5.0, k1)]));
    let k3 = rhs(p, zeta(t + 0.3 * h), dir, &lc(y, h, &[(3.0 / 40.0, k1), (9.0 / 40.0, k2)]));
    let k4 = rhs(
        p,
        zeta(t + 0.8 * h),
        dir,
        &lc(y, h, &[(44.0 / 45.0, k1), (-56.0 / 15.0, k2), (32.0 / 9.0, k3)]),
    );
    let k5 = rhs(
        p,
        zeta(t + 8.0 / 9.0 * h),
        dir,
        &lc(
            y,
            h,
            &[
                (19372.0 / 6561.0, k1),
                (-25360.0 / 2187.0, k2),
                (64448.0 / 6561.0, k3),
                (-212.0 / 729.0, k4),
            ],
        ),
    );
    let k6 = rhs(
        p,
        zeta(t + h),
        dir,
        &lc(
            y,
            h,
            &[
                (9017.0 / 3168.0, k1),
                (-355.0 / 33.0, k2),
                (46732.0 / 5247.0, k3),
                (49.0 / 176.0, k4),
                (-5103.0 / 18656.0, k5),
            ],
        ),
    );
    let y5 = lc(
        y,
        h,
        &[
            (35.0 / 384.0, k1),
            (500.0 / 1113.0, k3),
            (125.0 / 192.0, k4),
            (-2187.0 / 6784.0, k5),
            (11.0 / 84.0, k6),
        ],
    );
    let k7 = rhs(p, zeta(t + h), dir, &y5);
    let zero: State = [ComplexScalar::ZERO; 2];
    let err = lc(
        &zero,
        h,
        &[
            (71.0 / 57600.0, k1),
            (-71.0 / 16695.0, k3),
            (71.0 / 1920.0, k4),
            (-17253.0 / 339200.0, k5),
            (22.0 / 525.0, k6),
            (-1.0 / 40.0, k7),
        ],
    );
    (y5, err)
}

fn integrate(p: &HypParams, mut y: State, from: ComplexScalar, to: ComplexScalar) -> Result<State, OracleError> {
    let dir = to - from;
    let mut t = 0.0f64;
    let mut h = 0.01f64;
    let mut steps = 0u32;
    while t < 1.0 {
        steps += 1;
        if steps > 100_000 {
            return Err(OracleError::NoConvergence("step limit in the ODE integrator".into()));
        }
        h = h.min(1.0 - t);
        let (y5, err) = dp54(p, from, dir, t, h, &y);
        let mut ratio = 0.0f64;
        for i in 0..2 {
            let scale = ATOL + RTOL * y[i].norm().max(y5[i].norm());
            ratio = ratio.max(err[i].norm() / scale);
        }
        if ratio <= 1.0 {
            t += h;
            y = y5;
            if t >= 1.0 {
                break;
            }
        }
        let factor = if ratio > 0.0 {
            (0.9 * ratio.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= factor;
        if h < 1e-12 {
            return Err(OracleError::NoConvergence("step size underflow near a singular point".into()));
        }
    }
    Ok(y)
}
