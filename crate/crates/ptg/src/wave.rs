//! Wave functions of pole and scattering states with first and second
//! radial derivatives, plus the normalized residual test.
//!
//! Every factor of the wave function is a function of the map variable y,
//! so derivatives are propagated as degree-2 jets (value, d/dr, d2/dr2)
//! through the chain r -> y -> (x+, x-) -> factors. The hypergeometric
//! factor differentiates through the contiguous shift
//! dF/dz = (ab/c) F(a+1,b+1,c+1;z).

use hyp2f1::gamma::{gamma, gamma_inv};
use hyp2f1::{hyp_2f1, HypParams};

use crate::map::{dy_dr, y_search, YPoint};
use crate::potential::v_ptg_from;
use crate::spectrum::k_ptg_calc;
use crate::{ComplexScalar, PtgError, PtgParams};

/// Hypergeometric data of one state at one radius. The parameter block is
/// fixed per state; `x_plus`/`x_minus` carry the radius dependence and
/// always sum to 1 exactly.
#[derive(Debug, Clone, Copy)]
pub struct HyperArgs {
    pub beta_bar: ComplexScalar,
    pub nu_bar: ComplexScalar,
    pub nu_plus: ComplexScalar,
    pub nu_minus: ComplexScalar,
    pub mu_plus: ComplexScalar,
    pub mu_minus: ComplexScalar,
    pub a_plus: ComplexScalar,
    pub a_minus: ComplexScalar,
    pub x_plus: f64,
    pub x_minus: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct WaveSample {
    pub phi: ComplexScalar,
    pub dphi: ComplexScalar,
    pub d2phi: ComplexScalar,
}

/// Leading constants of the power law at the origin and the free waves at
/// infinity: phi ~ c0 r^{ell+1} and phi ~ c_plus e^{ikr} + c_minus e^{-ikr}.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticConstants {
    pub c0: ComplexScalar,
    pub c_plus: ComplexScalar,
    pub c_minus: ComplexScalar,
    pub r1: f64,
}

struct StateParams {
    beta_bar: ComplexScalar,
    l32: f64,
    nu_bar: ComplexScalar,
    nu_plus: ComplexScalar,
    nu_minus: ComplexScalar,
    mu_plus: ComplexScalar,
    mu_minus: ComplexScalar,
    a_plus: ComplexScalar,
    a_minus: ComplexScalar,
    norm: ComplexScalar,
    pole: bool,
}

impl StateParams {
    fn pole(p: &PtgParams, n: u32, k: ComplexScalar) -> Self {
        let lam2 = p.lambda * p.lambda;
        let beta = -ComplexScalar::i() * k / (lam2 * p.s);
        let l32 = p.ell as f64 + 1.5;
        let nf = n as f64;
        // nu_minus = -n terminates the series; A- drops out and the generic
        // A+ collapses to a Pochhammer because Gamma(-beta)/Gamma(mu_minus)
        // is a ratio of two poles
        let mut poch = ComplexScalar::new(1.0, 0.0);
        for j in 0..n {
            poch *= beta + (1.0 + j as f64);
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let g_l32 = gamma(ComplexScalar::new(l32, 0.0));
        let a_plus = g_l32 * sign * poch * gamma_inv(ComplexScalar::new(l32 + nf, 0.0));
        let num = 2.0 * lam2 * p.s * beta * (beta + (l32 + 2.0 * nf))
            * gamma(beta + (l32 + nf))
            * gamma(ComplexScalar::new(l32 + nf, 0.0));
        let den = (beta * (lam2 * (1.0 - p.a_mass)) + (l32 + 2.0 * nf))
            * gamma(ComplexScalar::new(nf + 1.0, 0.0))
            * gamma(beta + (nf + 1.0))
            * g_l32
            * g_l32;
        Self {
            beta_bar: beta,
            l32,
            nu_bar: beta + (l32 + 2.0 * nf),
            nu_plus: beta + (l32 + nf),
            nu_minus: ComplexScalar::new(-nf, 0.0),
            mu_plus: ComplexScalar::new(l32 + nf, 0.0),
            mu_minus: -(beta + nf),
            a_plus,
            a_minus: ComplexScalar::ZERO,
            norm: (num / den).sqrt(),
            pole: true,
        }
    }

    fn scatter(p: &PtgParams, k: ComplexScalar) -> Self {
        let lam2 = p.lambda * p.lambda;
        let beta = -ComplexScalar::i() * k / (lam2 * p.s);
        let l32 = p.ell as f64 + 1.5;
        let nu_bar = (ComplexScalar::new((p.nu + 0.5) * (p.nu + 0.5), 0.0)
            - beta * beta * (lam2 * (1.0 - p.a_mass) - 1.0))
            .sqrt();
        let nu_plus = 0.5 * (beta + nu_bar + l32);
        let nu_minus = 0.5 * (beta - nu_bar + l32);
        let mu_plus = 0.5 * (-beta + nu_bar + l32);
        let mu_minus = 0.5 * (-beta - nu_bar + l32);
        let g_l32 = gamma(ComplexScalar::new(l32, 0.0));
        let a_plus = g_l32 * gamma(-beta) * gamma_inv(mu_plus) * gamma_inv(mu_minus);
        let a_minus = g_l32 * gamma(beta) * gamma_inv(nu_plus) * gamma_inv(nu_minus);
        let num = gamma(nu_plus) * gamma(nu_minus) * gamma(mu_plus) * gamma(mu_minus);
        let den = 2.0 * std::f64::consts::PI * gamma(beta) * gamma(-beta) * g_l32 * g_l32;
        Self {
            beta_bar: beta,
            l32,
            nu_bar,
            nu_plus,
            nu_minus,
            mu_plus,
            mu_minus,
            a_plus,
            a_minus,
            norm: (num / den).sqrt(),
            pole: false,
        }
    }
}

/// Degree-2 jet of a real-valued function of r.
#[derive(Debug, Clone, Copy)]
struct RJet {
    f: f64,
    d1: f64,
    d2: f64,
}

impl RJet {
    fn add(self, o: Self) -> Self {
        Self { f: self.f + o.f, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }

    fn scale(self, c: f64) -> Self {
        Self { f: c * self.f, d1: c * self.d1, d2: c * self.d2 }
    }

    fn div(self, o: Self) -> Self {
        let q = self.f / o.f;
        let q1 = (self.d1 - q * o.d1) / o.f;
        let q2 = (self.d2 - q * o.d2 - 2.0 * q1 * o.d1) / o.f;
        Self { f: q, d1: q1, d2: q2 }
    }

    fn sqrt(self) -> Self {
        let v = self.f.sqrt();
        let d1 = self.d1 / (2.0 * v);
        Self { f: v, d1, d2: (self.d2 - 2.0 * d1 * d1) / (2.0 * v) }
    }

    fn powf(self, e: f64) -> Self {
        let v = self.f.powf(e);
        let r1 = self.d1 / self.f;
        let r2 = self.d2 / self.f;
        Self { f: v, d1: v * e * r1, d2: v * e * (r2 + (e - 1.0) * r1 * r1) }
    }

    fn powc(self, e: ComplexScalar) -> CJet {
        let v = ComplexScalar::new(self.f, 0.0).powc(e);
        let r1 = self.d1 / self.f;
        let r2 = self.d2 / self.f;
        CJet { f: v, d1: v * e * r1, d2: v * e * (r2 + (e - 1.0) * (r1 * r1)) }
    }

    fn mul(self, o: Self) -> Self {
        Self {
            f: self.f * o.f,
            d1: self.f * o.d1 + self.d1 * o.f,
            d2: self.f * o.d2 + 2.0 * self.d1 * o.d1 + self.d2 * o.f,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct CJet {
    f: ComplexScalar,
    d1: ComplexScalar,
    d2: ComplexScalar,
}

impl CJet {
    fn from_real(j: RJet) -> Self {
        Self {
            f: ComplexScalar::new(j.f, 0.0),
            d1: ComplexScalar::new(j.d1, 0.0),
            d2: ComplexScalar::new(j.d2, 0.0),
        }
    }

    fn add(self, o: Self) -> Self {
        Self { f: self.f + o.f, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }

    fn scale(self, c: ComplexScalar) -> Self {
        Self { f: c * self.f, d1: c * self.d1, d2: c * self.d2 }
    }

    fn mul(self, o: Self) -> Self {
        Self {
            f: self.f * o.f,
            d1: self.f * o.d1 + self.d1 * o.f,
            d2: self.f * o.d2 + 2.0 * self.d1 * o.d1 + self.d2 * o.f,
        }
    }
}

/// Jets of y^2 and 1-y^2: values from the solved point, derivatives from
/// dy/dr = s(1-y^2)(1+(Lambda^2-1)y^2) and its chain-rule derivative.
fn y_jets(p: &PtgParams, yp: &YPoint) -> (RJet, RJet) {
    let t = p.lambda * p.lambda - 1.0;
    let y = yp.y;
    let d1 = dy_dr(p, yp);
    let d2 = 2.0 * p.s * y * d1 * (t * yp.one_minus_y2 - (1.0 + t * y * y));
    let y2 = RJet { f: y * y, d1: 2.0 * y * d1, d2: 2.0 * (d1 * d1 + y * d2) };
    let omy2 = RJet { f: yp.one_minus_y2, d1: -y2.d1, d2: -y2.d2 };
    (y2, omy2)
}

fn x_jets(p: &PtgParams, yp: &YPoint) -> (RJet, RJet) {
    let lam2 = p.lambda * p.lambda;
    let (y2, omy2) = y_jets(p, yp);
    let den = omy2.add(y2.scale(lam2));
    let xp = omy2.div(den);
    let xm = y2.scale(lam2).div(den);
    // x+ + x- = 1 exactly; rebuild the one near 1 from the small one
    if xm.f <= xp.f {
        (RJet { f: 1.0 - xm.f, d1: -xm.d1, d2: -xm.d2 }, xm)
    } else {
        (xp, RJet { f: 1.0 - xp.f, d1: -xp.d1, d2: -xp.d2 })
    }
}

/// Hypergeometric parameters of the state with momentum k at a solved map
/// point; pass the radial quantum number for pole states so the terminating
/// parameters come out as exact integers.
pub fn hyper_args(
    p: &PtgParams,
    k: ComplexScalar,
    pole_n: Option<u32>,
    yp: &YPoint,
) -> HyperArgs {
    let sp = match pole_n {
        Some(n) => StateParams::pole(p, n, k),
        None => StateParams::scatter(p, k),
    };
    let (xp, xm) = x_jets(p, yp);
    HyperArgs {
        beta_bar: sp.beta_bar,
        nu_bar: sp.nu_bar,
        nu_plus: sp.nu_plus,
        nu_minus: sp.nu_minus,
        mu_plus: sp.mu_plus,
        mu_minus: sp.mu_minus,
        a_plus: sp.a_plus,
        a_minus: sp.a_minus,
        x_plus: xp.f,
        x_minus: xm.f,
    }
}

fn hyp_jet(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    x: RJet,
) -> Result<CJet, PtgError> {
    let one = ComplexScalar::new(1.0, 0.0);
    let z = ComplexScalar::new(x.f, 0.0);
    let f0 = hyp_2f1(&HypParams::new(a, b, c, z))?.value;
    let s1 = a * b / c;
    let f1 = s1 * hyp_2f1(&HypParams::new(a + one, b + one, c + one, z))?.value;
    let s2 = s1 * (a + one) * (b + one) / (c + one);
    let f2 = s2 * hyp_2f1(&HypParams::new(a + 2.0 * one, b + 2.0 * one, c + 2.0 * one, z))?.value;
    Ok(CJet { f: f0, d1: f1 * x.d1, d2: f2 * (x.d1 * x.d1) + f1 * x.d2 })
}

fn c0_of(p: &PtgParams, sp: &StateParams) -> ComplexScalar {
    sp.norm
        * ((p.lambda * (1.0 - p.a_mass)).sqrt() * (p.lambda * p.s).powi(p.ell as i32 + 1))
}

fn r_one(p: &PtgParams) -> f64 {
    let lam = p.lambda;
    let lam2s = lam * lam * p.s;
    if lam > 1.0 {
        let t = (lam * lam - 1.0).sqrt();
        (t * t.atan() - (lam / 2.0).ln()) / lam2s
    } else if lam < 1.0 {
        let t = (1.0 - lam * lam).sqrt();
        -(t * t.atanh() + (lam / 2.0).ln()) / lam2s
    } else {
        std::f64::consts::LN_2 / p.s
    }
}

fn asym_of(p: &PtgParams, sp: &StateParams, k: ComplexScalar) -> AsymptoticConstants {
    let r1 = r_one(p);
    let ikr1 = ComplexScalar::i() * k * r1;
    AsymptoticConstants {
        c0: c0_of(p, sp),
        c_plus: sp.norm * sp.a_plus * (-ikr1).exp(),
        c_minus: sp.norm * sp.a_minus * ikr1.exp(),
        r1,
    }
}

/// Selects which hypergeometric representation of the wave function to
/// evaluate. `Auto` switches on the argument size; the forced variants
/// exist so the two representations can be compared against each other on
/// radii where both converge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveForm {
    Auto,
    Inner,
    Outer,
}

/// Evaluates one wave-function sample with explicit control over the
/// representation. `pole_n = Some(n)` selects the discrete state, in which
/// case `k` must be the momentum from [`k_ptg_calc`] for that `n`; `None`
/// treats `k` as a scattering momentum.
pub fn wave_sample_at(
    p: &PtgParams,
    k: ComplexScalar,
    pole_n: Option<u32>,
    r: f64,
    form: WaveForm,
) -> Result<WaveSample, PtgError> {
    let sp = match pole_n {
        Some(n) => StateParams::pole(p, n, k),
        None => {
            if k == ComplexScalar::ZERO {
                return Err(PtgError::Domain("scattering momentum must be nonzero".into()));
            }
            StateParams::scatter(p, k)
        }
    };
    wave_sample_with(p, &sp, r, form)
}

fn wave_sample(p: &PtgParams, sp: &StateParams, r: f64) -> Result<WaveSample, PtgError> {
    wave_sample_with(p, sp, r, WaveForm::Auto)
}

fn wave_sample_with(
    p: &PtgParams,
    sp: &StateParams,
    r: f64,
    form: WaveForm,
) -> Result<WaveSample, PtgError> {
    let lam2 = p.lambda * p.lambda;
    let yp = if r == 0.0 { None } else { Some(y_search(p, r)?) };
    if yp.map_or(true, |yp| lam2 * yp.y * yp.y == 0.0) {
        // at (or numerically at) the origin the whole product reduces to
        // the power law c0 r^{ell+1}
        let c0 = c0_of(p, sp);
        let l1 = p.ell as f64 + 1.0;
        let phi = c0 * r.powi(p.ell as i32 + 1);
        let dphi = c0 * l1 * r.powi(p.ell as i32);
        let d2phi = if p.ell == 0 {
            ComplexScalar::ZERO
        } else {
            c0 * l1 * p.ell as f64 * r.powi(p.ell as i32 - 1)
        };
        return Ok(WaveSample { phi, dphi, d2phi });
    }
    let yp = yp.unwrap();
    let (xp, xm) = x_jets(p, &yp);
    let chi = xm
        .add(xp.scale(lam2 * (1.0 - p.a_mass)))
        .div(xm.add(xp.scale(lam2)).sqrt())
        .sqrt()
        .mul(xm.powf((p.ell as f64 + 1.0) / 2.0));
    let one = ComplexScalar::new(1.0, 0.0);
    let inner = match form {
        WaveForm::Auto => xm.f < 0.5,
        WaveForm::Inner => true,
        WaveForm::Outer => false,
    };
    let wf = if inner {
        let f = hyp_jet(sp.nu_minus, sp.nu_plus, ComplexScalar::new(sp.l32, 0.0), xm)?;
        xp.powc(0.5 * sp.beta_bar).mul(f).scale(sp.norm)
    } else if sp.pole {
        let f = hyp_jet(sp.nu_minus, sp.nu_plus, one + sp.beta_bar, xp)?;
        xp.powc(0.5 * sp.beta_bar).mul(f).scale(sp.norm * sp.a_plus)
    } else {
        let fp = hyp_jet(sp.nu_minus, sp.nu_plus, one + sp.beta_bar, xp)?;
        let fm = hyp_jet(sp.mu_minus, sp.mu_plus, one - sp.beta_bar, xp)?;
        let out = xp.powc(0.5 * sp.beta_bar).mul(fp).scale(sp.a_plus);
        let inc = xp.powc(-0.5 * sp.beta_bar).mul(fm).scale(sp.a_minus);
        out.add(inc).scale(sp.norm)
    };
    let full = wf.mul(CJet::from_real(chi));
    Ok(WaveSample { phi: full.f, dphi: full.d1, d2phi: full.d2 })
}

pub fn ptg_pole(
    p: &PtgParams,
    n: u32,
    r_grid: &[f64],
) -> Result<(AsymptoticConstants, Vec<WaveSample>), PtgError> {
    let pole = k_ptg_calc(p, n)?;
    let sp = StateParams::pole(p, n, pole.k);
    let consts = asym_of(p, &sp, pole.k);
    let mut samples = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        samples.push(wave_sample(p, &sp, r)?);
    }
    Ok((consts, samples))
}

pub fn ptg_scat(
    p: &PtgParams,
    k: ComplexScalar,
    r_grid: &[f64],
) -> Result<(AsymptoticConstants, Vec<WaveSample>), PtgError> {
    if k == ComplexScalar::ZERO {
        return Err(PtgError::Domain("scattering momentum must be nonzero".into()));
    }
    let sp = StateParams::scatter(p, k);
    let consts = asym_of(p, &sp, k);
    let mut samples = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        samples.push(wave_sample(p, &sp, r)?);
    }
    Ok((consts, samples))
}

/// Normalized residual of the radial equation at one point: zero for an
/// exact solution, order one for an unrelated function, and scale-free in
/// phi so it can gate accuracy claims.
pub fn ptg_test_calc(
    p: &PtgParams,
    k: ComplexScalar,
    r: f64,
    w: &WaveSample,
) -> Result<f64, PtgError> {
    if !(r > 0.0) {
        return Err(PtgError::Domain(format!("r = {r} must be positive")));
    }
    let e = k * k / p.kin_fact;
    let yp = y_search(p, r)?;
    let mu = 1.0 - p.a_mass * yp.one_minus_y2;
    let dmu = 2.0 * p.a_mass * yp.y * dy_dr(p, &yp);
    let v = v_ptg_from(p, &yp, r);
    let ll1 = (p.ell * (p.ell + 1)) as f64;
    let pot = p.kin_fact * mu * (ComplexScalar::new(v, 0.0) - e);
    let res = w.d2phi - (dmu / mu) * w.dphi - (ll1 / (r * r)) * w.phi - pot * w.phi;
    let scale =
        w.d2phi.norm() + (w.dphi / r).norm() + (w.phi / (r * r)).norm() + (pot * w.phi).norm();
    Ok(res.norm() / scale)
}
