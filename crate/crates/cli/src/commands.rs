use std::path::Path;

use invspec_core::cohom1::{
    self, check_slope, cohom1_spectrum, dk_table, parse_profile, FIBER_CONVENTION,
};
use invspec_core::specfun::xi_k;
use invspec_core::toric::io::{parse_polytope, parse_potential};
use invspec_core::toric::{
    bound_table, compute_ck, direction_sweep, ibp_residual, toric1d_spectrum, Poly2, Polytope,
    QuadSetting, SymplecticPotential, SIGMA_CONVENTION,
};
use invspec_core::{Exec, SpectrumResult};

use crate::failure::{Failure, EXIT_CHECK_FAILED, EXIT_NOT_DELZANT};
use crate::record::{num, nums, RunRecord};

/// Eigenvalues may exceed a bound by this much before a check fails.
pub const BOUND_SLACK: f64 = 1e-6;
/// Sampled scalar curvature at or above this admits the bound check.
pub const CURVATURE_GATE: f64 = -1e-8;
pub const IBP_THRESHOLD: f64 = 1e-6;
pub const SWEEP_SAMPLES: usize = 32;
pub const PROFILE_GRID: usize = 1000;
pub const MAX_COMPARE_K: usize = 12;

pub struct Outcome {
    pub record: RunRecord,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(record: RunRecord) -> Self {
        Outcome {
            record,
            exit_code: 0,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.display().to_string(),
        source,
    })
}

fn conventions(r: &mut RunRecord) {
    r.set("convention.sigma", SIGMA_CONVENTION);
    r.set("convention.fiber", FIBER_CONVENTION);
}

fn require_positive(name: &str, v: usize) -> Result<(), Failure> {
    if v == 0 {
        return Err(Failure::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn default_direction(p: &Polytope) -> Vec<f64> {
    if p.dim() == 1 {
        vec![1.0]
    } else {
        vec![1.0, 0.0]
    }
}

pub fn bound_toric(
    file: &Path,
    k: usize,
    direction: Option<Vec<f64>>,
    sweep: bool,
) -> Result<Outcome, Failure> {
    require_positive("k", k)?;
    let polytope = parse_polytope(&read(file)?)?;
    let w = direction.unwrap_or_else(|| default_direction(&polytope));
    if w.len() != polytope.dim() {
        return Err(Failure::Usage(format!(
            "--direction needs {} components",
            polytope.dim()
        )));
    }
    let table = bound_table(&polytope, k, &w, Exec::default())?;
    let formal = !polytope.is_delzant();

    let mut r = RunRecord::new("bound toric");
    r.set("input.file", file.display());
    r.set("input.k", k);
    r.set("input.dimension", polytope.dim());
    r.set("input.direction", nums(&table[0].direction, ";"));
    conventions(&mut r);
    r.set("delzant", !formal);
    r.set("formal", formal);
    r.set("convergence.quadrature", "exact-degree-gauss");
    r.set(
        "maximizer.variable",
        "projection onto the direction, ascending powers",
    );
    if sweep {
        if polytope.dim() != 2 {
            return Err(Failure::Usage("--sweep needs a polygon".into()));
        }
        let s = direction_sweep(&polytope, k, SWEEP_SAMPLES)?;
        r.set("sweep.k", k);
        r.set("sweep.samples", SWEEP_SAMPLES);
        r.set_num("sweep.angle", s.angle);
        r.set("sweep.direction", nums(&s.direction, ";"));
        r.set_num("sweep.value", s.value);
        r.set_num("sweep.angle_tolerance", 1e-6);
    }
    r.header(&["k", "bound", "maximizer"]);
    for res in &table {
        r.row(vec![
            res.k.to_string(),
            num(res.value),
            nums(res.maximizer.coeffs(), ";"),
        ]);
    }
    Ok(Outcome {
        record: r,
        exit_code: if formal { EXIT_NOT_DELZANT } else { 0 },
    })
}

pub fn bound_cohom1(n: usize, k: usize) -> Result<Outcome, Failure> {
    require_positive("k", k)?;
    if n < 2 {
        return Err(Failure::Usage(format!("--n must be at least 2, got {n}")));
    }
    let table = dk_table(n, k, Exec::default())?;
    let mut r = RunRecord::new("bound cohom1");
    r.set("input.n", n);
    r.set("input.k", k);
    conventions(&mut r);
    r.set_num("convergence.quadrature_rel_tol", 1e-12);
    r.set("maximizer.variable", "s, ascending powers");
    r.header(&["k", "bound", "maximizer"]);
    for res in &table {
        r.row(vec![
            res.k.to_string(),
            num(res.value),
            nums(res.maximizer.coeffs(), ";"),
        ]);
    }
    Ok(Outcome::ok(r))
}

/// Records eigenvalues against bounds; the check runs only when the curvature gate holds.
fn spectrum_checks(r: &mut RunRecord, spec: &SpectrumResult, bounds: &[f64], min_scal: f64) -> u8 {
    let applicable = min_scal >= CURVATURE_GATE;
    r.set("convergence.mesh", spec.mesh);
    r.set("convergence.coarse_mesh", (spec.mesh / 2).max(16));
    r.set_num("convergence.rel_change", spec.rel_change);
    r.set_num("convergence.zero_mode_raw", spec.zero_mode_raw);
    r.set_num("check.slack", BOUND_SLACK);
    r.set_num("check.curvature_gate", CURVATURE_GATE);
    r.header(&["k", "eigenvalue", "bound", "check"]);
    let mut failed = false;
    for (i, bound) in bounds.iter().enumerate() {
        let lambda = spec.eigenvalues[i + 1];
        let verdict = if !applicable {
            "NOT APPLICABLE"
        } else if lambda <= bound + BOUND_SLACK {
            "PASS"
        } else {
            failed = true;
            "FAIL"
        };
        r.row(vec![
            (i + 1).to_string(),
            num(lambda),
            num(*bound),
            verdict.into(),
        ]);
    }
    let status = if !applicable {
        "NOT APPLICABLE"
    } else if failed {
        "FAIL"
    } else {
        "PASS"
    };
    r.set("status", status);
    if failed {
        EXIT_CHECK_FAILED
    } else {
        0
    }
}

pub fn spectrum_toric1d(
    file: &Path,
    potential: Option<&Path>,
    count: usize,
    mesh: usize,
) -> Result<Outcome, Failure> {
    require_positive("count", count)?;
    let polytope = parse_polytope(&read(file)?)?;
    if polytope.dim() != 1 {
        return Err(Failure::Usage("spectrum toric1d needs an interval".into()));
    }
    let u = match potential {
        Some(path) => parse_potential(&read(path)?, polytope.clone())?,
        None => SymplecticPotential::guillemin(polytope.clone()),
    };
    let spec = toric1d_spectrum(&u, count, mesh)?;
    let min_scal = u.min_scalar_curvature()?;
    let bounds = bound_table(&polytope, count, &[1.0], Exec::default())?;
    let bounds: Vec<f64> = bounds.iter().map(|b| b.value).collect();

    let mut r = RunRecord::new("spectrum toric1d");
    r.set("input.file", file.display());
    r.set(
        "input.potential",
        potential.map_or("guillemin".to_string(), |p| p.display().to_string()),
    );
    r.set("input.count", count);
    r.set("input.mesh", mesh);
    conventions(&mut r);
    r.set_num("min_scalar_curvature", min_scal);
    let code = spectrum_checks(&mut r, &spec, &bounds, min_scal);
    Ok(Outcome {
        record: r,
        exit_code: code,
    })
}

pub fn spectrum_cohom1(file: &Path, count: usize, mesh: usize) -> Result<Outcome, Failure> {
    require_positive("count", count)?;
    let profile = parse_profile(&read(file)?)?;
    let spec = cohom1_spectrum(&profile, count, mesh)?;
    let gradient = check_slope(&profile, PROFILE_GRID)?;
    let comparison = cohom1::check_comparison(&profile, PROFILE_GRID)?;
    let bounds: Vec<f64> = dk_table(profile.n(), count, Exec::default())?
        .iter()
        .map(|b| b.value)
        .collect();

    let mut r = RunRecord::new("spectrum cohom1");
    r.set("input.file", file.display());
    r.set("input.n", profile.n());
    r.set("input.count", count);
    r.set("input.mesh", mesh);
    conventions(&mut r);
    r.set_num("min_scalar_curvature", gradient.min_scal);
    r.set_num("max_abs_slope", gradient.max_abs_rho_dot);
    r.set("slope_curvature_consistent", gradient.consistent);
    r.set_num("max_excess_over_comparison", comparison.max_excess);
    let code = spectrum_checks(&mut r, &spec, &bounds, gradient.min_scal);
    Ok(Outcome {
        record: r,
        exit_code: code,
    })
}

pub fn verify_ibp(
    polytope_file: &Path,
    potential_file: &Path,
    degree: usize,
) -> Result<Outcome, Failure> {
    let polytope = parse_polytope(&read(polytope_file)?)?;
    let u = parse_potential(&read(potential_file)?, polytope.clone())?;
    let dim = polytope.dim();

    let mut r = RunRecord::new("verify ibp");
    r.set("input.polytope", polytope_file.display());
    r.set("input.potential", potential_file.display());
    r.set("input.degree", degree);
    conventions(&mut r);
    r.header(&[
        "i",
        "j",
        "hessian_term",
        "boundary_term",
        "curvature_term",
        "residual",
        "points",
    ]);
    let mut worst: f64 = 0.0;
    for total in 0..=degree {
        for j in 0..=total {
            if dim == 1 && j > 0 {
                continue;
            }
            let i = total - j;
            let t = ibp_residual(&u, &Poly2::monomial(i, j), QuadSetting::default())?;
            worst = worst.max(t.residual.abs());
            r.row(vec![
                i.to_string(),
                j.to_string(),
                num(t.hessian_term),
                num(t.boundary_term),
                num(t.curvature_term),
                num(t.residual),
                t.points.to_string(),
            ]);
        }
    }
    let pass = worst < IBP_THRESHOLD;
    r.set_num("max_abs_residual", worst);
    r.set_num("threshold", IBP_THRESHOLD);
    r.set("status", if pass { "PASS" } else { "FAIL" });
    Ok(Outcome {
        record: r,
        exit_code: if pass { 0 } else { EXIT_CHECK_FAILED },
    })
}

pub fn compare_af(k: usize) -> Result<Outcome, Failure> {
    if !(1..=MAX_COMPARE_K).contains(&k) {
        return Err(Failure::Usage(format!(
            "--k must lie in 1..={MAX_COMPARE_K}"
        )));
    }
    let interval = Polytope::interval(-1.0, 1.0)?;
    let mut r = RunRecord::new("compare af");
    r.set("input.k", k);
    r.set("geometry", "interval [-1,1], round 2-sphere of area 4*pi");
    conventions(&mut r);
    r.set(
        "statement",
        "both columns bound the same invariant eigenvalues under non-negative curvature",
    );
    r.header(&[
        "k",
        "bessel_zero",
        "bessel_bound",
        "polynomial_bound",
        "gap",
    ]);
    for i in 1..=k {
        let af = xi_k(i)?;
        let ck = compute_ck(&interval, i, &[1.0])?.value;
        r.row(vec![
            i.to_string(),
            num(af.xi),
            num(af.bound),
            num(ck),
            num(ck - af.bound),
        ]);
    }
    Ok(Outcome::ok(r))
}
