//! Seeded random accuracy sweeps. One ChaCha8 stream drives every draw in a
//! fixed order (a.re, a.im, b.re, b.im, c.re, c.im, then z), so a given seed
//! reproduces the identical sample set on any platform.

use std::collections::BTreeMap;

use clap::ValueEnum;
use hyp2f1::{hyp_2f1, test_2f1, ComplexScalar, HypParams, Method};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    /// All six parameter components drawn from the signed bands.
    General,
    /// `a` is a nonpositive integer in -10..=0, truncating the series.
    Polynomial,
    /// `z` pinned to `z_box * exp(+-i pi/3)`, the slowest corner of the
    /// transformation plane.
    TaylorZone,
}

impl SweepMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepMode::General => "general",
            SweepMode::Polynomial => "polynomial",
            SweepMode::TaylorZone => "taylor-zone",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub samples: u32,
    /// Magnitude band for real parts; each draw gets a random sign.
    pub re_band: (f64, f64),
    /// Magnitude band for imaginary parts; each draw gets a random sign.
    pub im_band: (f64, f64),
    /// Half-width of the square `z` box in the infinity norm, or the fixed
    /// radius in taylor-zone mode.
    pub z_box: f64,
    pub seed: u64,
    pub mode: SweepMode,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.samples == 0 {
            return Err("samples must be positive".into());
        }
        for (name, (lo, hi)) in [("re-band", self.re_band), ("im-band", self.im_band)] {
            if !(0.0 <= lo && lo <= hi && hi.is_finite()) {
                return Err(format!("{name} must satisfy 0 <= low <= high"));
            }
        }
        match self.mode {
            SweepMode::TaylorZone => {
                if !(self.z_box == 0.99 || self.z_box == 1.01) {
                    return Err("taylor-zone sweeps pin |z| to 0.99 or 1.01; set --z-box accordingly".into());
                }
            }
            _ => {
                if !(self.z_box > 0.0 && self.z_box.is_finite()) {
                    return Err("z-box must be positive".into());
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub samples: u32,
    pub failures: u64,
    pub t_av: f64,
    pub t_max: f64,
    pub worst_case: HypParams,
    /// (decade, count) with decade = floor(log10 t), clamped below at -17;
    /// exact zeros land in the -17 bucket.
    pub histogram: Vec<(i32, u64)>,
    /// Counts per method tag, in `Method::ALL` order, zeros included.
    pub method_counts: Vec<(&'static str, u64)>,
}

fn signed_band(rng: &mut ChaCha8Rng, band: (f64, f64)) -> f64 {
    let mag = rng.gen_range(band.0..=band.1);
    if rng.gen::<bool>() {
        mag
    } else {
        -mag
    }
}

fn draw_z(rng: &mut ChaCha8Rng, cfg: &SweepConfig) -> ComplexScalar {
    if cfg.mode == SweepMode::TaylorZone {
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let (s, c) = (std::f64::consts::FRAC_PI_3).sin_cos();
        return ComplexScalar::new(cfg.z_box * c, sign * cfg.z_box * s);
    }
    loop {
        let re = rng.gen_range(-cfg.z_box..=cfg.z_box);
        let im = rng.gen_range(-cfg.z_box..=cfg.z_box);
        let z = ComplexScalar::new(re, im);
        if z.norm() >= 1e-6 && (z - ComplexScalar::new(1.0, 0.0)).norm() >= 1e-6 {
            return z;
        }
    }
}

fn draw_params(rng: &mut ChaCha8Rng, cfg: &SweepConfig) -> HypParams {
    let a = match cfg.mode {
        SweepMode::Polynomial => {
            let deg: u32 = rng.gen_range(0..=10);
            ComplexScalar::new(-(deg as f64), 0.0)
        }
        _ => ComplexScalar::new(signed_band(rng, cfg.re_band), signed_band(rng, cfg.im_band)),
    };
    let b = ComplexScalar::new(signed_band(rng, cfg.re_band), signed_band(rng, cfg.im_band));
    let c = ComplexScalar::new(signed_band(rng, cfg.re_band), signed_band(rng, cfg.im_band));
    let z = draw_z(rng, cfg);
    HypParams::new(a, b, c, z)
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, String> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut hist: BTreeMap<i32, u64> = BTreeMap::new();
    let mut methods = [0u64; Method::ALL.len()];
    let mut failures = 0u64;
    let mut t_sum = 0.0;
    let mut t_max = -1.0;
    let mut evaluated = 0u64;
    let mut worst: Option<HypParams> = None;
    for _ in 0..cfg.samples {
        let p = draw_params(&mut rng, cfg);
        if worst.is_none() {
            worst = Some(p.clone());
        }
        let outcome = hyp_2f1(&p).and_then(|r| test_2f1(&p, r.value).map(|t| (r.method, t)));
        match outcome {
            Ok((method, t)) if t.is_finite() => {
                let slot = Method::ALL.iter().position(|m| *m == method).unwrap();
                methods[slot] += 1;
                let decade = if t > 0.0 {
                    (t.log10().floor() as i32).max(-17)
                } else {
                    -17
                };
                *hist.entry(decade).or_insert(0) += 1;
                t_sum += t;
                evaluated += 1;
                if t > t_max {
                    t_max = t;
                    worst = Some(p);
                }
            }
            _ => failures += 1,
        }
    }
    let t_av = if evaluated > 0 { t_sum / evaluated as f64 } else { 0.0 };
    Ok(SweepReport {
        samples: cfg.samples,
        failures,
        t_av,
        t_max: t_max.max(0.0),
        worst_case: worst.expect("samples > 0"),
        histogram: hist.into_iter().collect(),
        method_counts: Method::ALL
            .iter()
            .zip(methods)
            .map(|(m, n)| (m.as_str(), n))
            .collect(),
    })
}

/// Accuracy gates implied by the sweep configuration, as
/// `(t_av gate, t_max gate)`. Configurations outside the charted bands get
/// no gate and `--assert` passes vacuously.
pub fn assert_gates(cfg: &SweepConfig) -> (Option<f64>, Option<f64>) {
    match cfg.mode {
        SweepMode::Polynomial => (Some(1e-10), None),
        SweepMode::TaylorZone => {
            if cfg.z_box <= 0.995 {
                (None, Some(1e-13))
            } else {
                (None, Some(1e-11))
            }
        }
        SweepMode::General => {
            if cfg.re_band.1 <= 1.0 && cfg.im_band.1 <= 1.0 && cfg.z_box <= 3.0 {
                (Some(1e-14), Some(1e-11))
            } else if cfg.re_band.1 <= 2.0 && cfg.im_band.1 <= 1.0 && cfg.z_box <= 3.0 {
                (Some(1e-13), None)
            } else {
                (None, None)
            }
        }
    }
}

pub fn check_asserts(cfg: &SweepConfig, rep: &SweepReport) -> Result<(), String> {
    if rep.failures > 0 {
        return Err(format!("{} samples failed to evaluate", rep.failures));
    }
    let (av_gate, max_gate) = assert_gates(cfg);
    if let Some(gate) = av_gate {
        if rep.t_av > gate {
            return Err(format!("t_av {:e} exceeds gate {gate:e}", rep.t_av));
        }
    }
    if let Some(gate) = max_gate {
        if rep.t_max > gate {
            return Err(format!("t_max {:e} exceeds gate {gate:e}", rep.t_max));
        }
    }
    Ok(())
}
