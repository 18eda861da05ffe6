//! One function per subcommand, taking typed arguments and returning the
//! rendered report. The binary in main.rs only parses flags and maps
//! [`AppError`] codes to exit statuses, so tests can drive these directly.

use hyp2f1::{hyp_2f1, test_2f1, ComplexScalar, HypParams};
use ptg::{
    effective_mass, effective_mass_der, k_ptg_calc, ptg_pole, ptg_scat, ptg_test_calc, v_ptg,
    PoleKind, PtgParams,
};
use serde_json::json;

use crate::oracle::{self, OracleKind};
use crate::report::{self, Format};
use crate::sweep::{self, SweepConfig, SweepReport};

/// Exit codes: 1 usage, 2 evaluation failure, 3 assert breach.
#[derive(Debug)]
pub struct AppError {
    pub code: u8,
    pub message: String,
}

impl AppError {
    pub fn usage(message: impl Into<String>) -> Self {
        AppError { code: 1, message: message.into() }
    }

    pub fn eval(message: impl Into<String>) -> Self {
        AppError { code: 2, message: message.into() }
    }

    pub fn breach(message: impl Into<String>) -> Self {
        AppError { code: 3, message: message.into() }
    }
}

const CUT_NOTE: &str = "z on the branch cut: evaluated as the limit from below (z - 1e-307i)";

pub fn cmd_eval(p: &HypParams, format: Format) -> Result<String, AppError> {
    let res = hyp_2f1(p).map_err(|e| AppError::eval(e.to_string()))?;
    let residual = test_2f1(p, res.value).unwrap_or(f64::NAN);
    let note = oracle::on_cut(p.z).then_some(CUT_NOTE);
    Ok(match format {
        Format::Table => {
            let mut rows = vec![
                ("value", report::fmt_c(res.value)),
                ("method", res.method.as_str().to_string()),
                ("terms", res.terms_used.to_string()),
                ("residual", report::fmt_f(residual)),
            ];
            if let Some(n) = note {
                rows.push(("note", n.to_string()));
            }
            report::table(&rows)
        }
        Format::Csv => {
            let mut out = String::from("value,method,terms,residual,note\n");
            out.push_str(&report::csv_line(&[
                report::fmt_c(res.value),
                res.method.as_str().to_string(),
                res.terms_used.to_string(),
                report::fmt_f(residual),
                note.unwrap_or("").to_string(),
            ]));
            out
        }
        Format::Json => {
            let v = json!({
                "value": report::json_c(res.value),
                "method": res.method.as_str(),
                "terms": res.terms_used,
                "residual": residual,
                "note": note,
            });
            format!("{v}\n")
        }
    })
}

pub fn cmd_verify(p: &HypParams, kind: OracleKind, format: Format) -> Result<String, AppError> {
    let engine = hyp_2f1(p).map_err(|e| AppError::eval(e.to_string()))?;
    let reference = oracle::oracle_value(p, kind).map_err(|e| AppError::eval(e.to_string()))?;
    let rel = (engine.value - reference).norm() / reference.norm().max(f64::MIN_POSITIVE);
    let note = oracle::on_cut(p.z).then_some(CUT_NOTE);
    let warning = (rel > 1e-8).then_some("oracle divergence exceeds 1e-8");
    Ok(match format {
        Format::Table => {
            let mut rows = vec![
                ("engine", report::fmt_c(engine.value)),
                ("method", engine.method.as_str().to_string()),
                ("oracle", report::fmt_c(reference)),
                ("oracle_kind", kind.as_str().to_string()),
                ("rel_diff", report::fmt_f(rel)),
            ];
            if let Some(n) = note {
                rows.push(("note", n.to_string()));
            }
            if let Some(w) = warning {
                rows.push(("warning", w.to_string()));
            }
            report::table(&rows)
        }
        Format::Csv => {
            let mut out = String::from("engine,method,oracle,oracle_kind,rel_diff,note,warning\n");
            out.push_str(&report::csv_line(&[
                report::fmt_c(engine.value),
                engine.method.as_str().to_string(),
                report::fmt_c(reference),
                kind.as_str().to_string(),
                report::fmt_f(rel),
                note.unwrap_or("").to_string(),
                warning.unwrap_or("").to_string(),
            ]));
            out
        }
        Format::Json => {
            let v = json!({
                "engine": report::json_c(engine.value),
                "method": engine.method.as_str(),
                "oracle": report::json_c(reference),
                "oracle_kind": kind.as_str(),
                "rel_diff": rel,
                "note": note,
                "warning": warning,
            });
            format!("{v}\n")
        }
    })
}

pub fn cmd_sweep(cfg: &SweepConfig, format: Format) -> Result<(SweepReport, String), AppError> {
    let rep = sweep::sweep(cfg).map_err(AppError::usage)?;
    let text = render_sweep(cfg, &rep, format);
    Ok((rep, text))
}

fn render_sweep(cfg: &SweepConfig, rep: &SweepReport, format: Format) -> String {
    let w = &rep.worst_case;
    match format {
        Format::Table => {
            let methods = rep
                .method_counts
                .iter()
                .map(|(tag, n)| format!("{tag}:{n}"))
                .collect::<Vec<_>>()
                .join(" ");
            let hist = rep
                .histogram
                .iter()
                .map(|(d, n)| format!("{d}:{n}"))
                .collect::<Vec<_>>()
                .join(" ");
            report::table(&[
                ("mode", cfg.mode.as_str().to_string()),
                ("samples", rep.samples.to_string()),
                ("seed", cfg.seed.to_string()),
                ("failures", rep.failures.to_string()),
                ("t_av", report::fmt_f(rep.t_av)),
                ("t_max", report::fmt_f(rep.t_max)),
                ("worst_a", report::fmt_c(w.a)),
                ("worst_b", report::fmt_c(w.b)),
                ("worst_c", report::fmt_c(w.c)),
                ("worst_z", report::fmt_c(w.z)),
                ("methods", methods),
                ("histogram", hist),
            ])
        }
        Format::Csv => {
            let mut out = String::from("field,value\n");
            let mut push = |k: &str, v: String| out.push_str(&report::csv_line(&[k.to_string(), v]));
            push("mode", cfg.mode.as_str().to_string());
            push("samples", rep.samples.to_string());
            push("seed", cfg.seed.to_string());
            push("failures", rep.failures.to_string());
            push("t_av", report::fmt_f(rep.t_av));
            push("t_max", report::fmt_f(rep.t_max));
            push("worst_a", report::fmt_c(w.a));
            push("worst_b", report::fmt_c(w.b));
            push("worst_c", report::fmt_c(w.c));
            push("worst_z", report::fmt_c(w.z));
            for (tag, n) in &rep.method_counts {
                push(&format!("method_{tag}"), n.to_string());
            }
            for (d, n) in &rep.histogram {
                push(&format!("decade_{d}"), n.to_string());
            }
            out
        }
        Format::Json => {
            let v = json!({
                "mode": cfg.mode.as_str(),
                "samples": rep.samples,
                "seed": cfg.seed,
                "failures": rep.failures,
                "t_av": rep.t_av,
                "t_max": rep.t_max,
                "worst_case": {
                    "a": report::json_c(w.a),
                    "b": report::json_c(w.b),
                    "c": report::json_c(w.c),
                    "z": report::json_c(w.z),
                },
                "methods": rep.method_counts.iter().map(|(tag, n)| json!({"method": tag, "count": n})).collect::<Vec<_>>(),
                "histogram": rep.histogram.iter().map(|(d, n)| json!({"decade": d, "count": n})).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum PtgState {
    Pole(u32),
    Scat(f64),
}

#[derive(Debug, Clone)]
pub struct PtgCmd {
    pub lambda: f64,
    pub scale: f64,
    pub nu: f64,
    pub a_mass: f64,
    pub ell: u32,
    pub kin_fact: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
    pub state: PtgState,
}

fn kind_str(kind: PoleKind) -> &'static str {
    match kind {
        PoleKind::Bound => "bound",
        PoleKind::Antibound => "antibound",
        PoleKind::Resonant => "resonant",
    }
}

pub fn cmd_ptg(cmd: &PtgCmd, format: Format) -> Result<String, AppError> {
    let p = PtgParams::new(cmd.lambda, cmd.scale, cmd.nu, cmd.a_mass, cmd.ell, cmd.kin_fact)
        .map_err(|e| AppError::usage(e.to_string()))?;
    if !(cmd.r_min >= 0.0 && cmd.r_max > cmd.r_min && cmd.r_max.is_finite()) {
        return Err(AppError::usage("grid requires 0 <= r_min < r_max"));
    }
    if cmd.n_points < 2 {
        return Err(AppError::usage("grid needs at least 2 points"));
    }
    let n = cmd.n_points;
    let grid: Vec<f64> = (0..n)
        .map(|i| cmd.r_min + (cmd.r_max - cmd.r_min) * i as f64 / (n - 1) as f64)
        .collect();
    let (label, k, consts, samples) = match cmd.state {
        PtgState::Pole(nq) => {
            let spec = k_ptg_calc(&p, nq).map_err(|e| AppError::eval(e.to_string()))?;
            let (consts, samples) = ptg_pole(&p, nq, &grid).map_err(|e| AppError::eval(e.to_string()))?;
            (kind_str(spec.kind), spec.k, consts, samples)
        }
        PtgState::Scat(kr) => {
            if !(kr > 0.0 && kr.is_finite()) {
                return Err(AppError::usage("scattering momentum must be positive"));
            }
            let k = ComplexScalar::new(kr, 0.0);
            let (consts, samples) = ptg_scat(&p, k, &grid).map_err(|e| AppError::eval(e.to_string()))?;
            ("scattering", k, consts, samples)
        }
    };

    struct Row {
        r: f64,
        phi: ComplexScalar,
        dphi: ComplexScalar,
        d2phi: ComplexScalar,
        v: f64,
        mu: f64,
        mu_der: f64,
        residual: f64,
    }
    let mut rows = Vec::with_capacity(grid.len());
    for (&r, w) in grid.iter().zip(&samples) {
        let v = match v_ptg(&p, r) {
            Ok(v) => v,
            Err(_) if r == 0.0 => f64::INFINITY,
            Err(e) => return Err(AppError::eval(e.to_string())),
        };
        let mu = effective_mass(&p, r).map_err(|e| AppError::eval(e.to_string()))?;
        let mu_der = effective_mass_der(&p, r).map_err(|e| AppError::eval(e.to_string()))?;
        let residual = if r > 0.0 {
            ptg_test_calc(&p, k, r, w).unwrap_or(f64::NAN)
        } else {
            0.0
        };
        rows.push(Row { r, phi: w.phi, dphi: w.dphi, d2phi: w.d2phi, v, mu, mu_der, residual });
    }

    const COLUMNS: &str = "r,phi_re,phi_im,dphi_re,dphi_im,d2phi_re,d2phi_im,v,mu,mu_der,residual";
    let row_fields = |row: &Row| -> Vec<String> {
        vec![
            report::fmt_f(row.r),
            report::fmt_f(row.phi.re),
            report::fmt_f(row.phi.im),
            report::fmt_f(row.dphi.re),
            report::fmt_f(row.dphi.im),
            report::fmt_f(row.d2phi.re),
            report::fmt_f(row.d2phi.im),
            report::fmt_f(row.v),
            report::fmt_f(row.mu),
            report::fmt_f(row.mu_der),
            report::fmt_f(row.residual),
        ]
    };

    Ok(match format {
        Format::Json => {
            let v = json!({
                "kind": label,
                "k": report::json_c(k),
                "c0": report::json_c(consts.c0),
                "c_plus": report::json_c(consts.c_plus),
                "c_minus": report::json_c(consts.c_minus),
                "abs_c_plus": consts.c_plus.norm(),
                "abs_c_minus": consts.c_minus.norm(),
                "r1": consts.r1,
                "rows": rows.iter().map(|row| json!({
                    "r": row.r,
                    "phi": report::json_c(row.phi),
                    "dphi": report::json_c(row.dphi),
                    "d2phi": report::json_c(row.d2phi),
                    "v": row.v,
                    "mu": row.mu,
                    "mu_der": row.mu_der,
                    "residual": row.residual,
                })).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
        Format::Csv | Format::Table => {
            // Table mode shares the CSV schema; the header carries the state
            // summary either way.
            let mut out = format!(
                "# kind = {label}, k = {}, c0 = {}, c_plus = {}, c_minus = {}, abs_c_plus = {}, abs_c_minus = {}, r1 = {}\n",
                report::fmt_c(k),
                report::fmt_c(consts.c0),
                report::fmt_c(consts.c_plus),
                report::fmt_c(consts.c_minus),
                report::fmt_f(consts.c_plus.norm()),
                report::fmt_f(consts.c_minus.norm()),
                report::fmt_f(consts.r1),
            );
            out.push_str(COLUMNS);
            out.push('\n');
            for row in &rows {
                out.push_str(&report::csv_line(&row_fields(row)));
            }
            out
        }
    })
}
