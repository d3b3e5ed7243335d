use invspec_core::cohom1::{check_slope, cohom1_spectrum, compute_dk, Profile};
use invspec_core::toric::{compute_ck, toric1d_spectrum, Poly2, Polytope, SymplecticPotential};
use invspec_core::Polynomial;

const GATE: f64 = -1e-8;

fn perturbations() -> Vec<Vec<(usize, usize, f64)>> {
    let mut out = Vec::new();
    for c in [0.02, 0.05, 0.1, 0.2, 0.5] {
        out.push(vec![(2, 0, c)]);
    }
    for c in [0.01, 0.03, 0.05, 0.1, 0.2] {
        out.push(vec![(4, 0, c)]);
    }
    out.push(vec![(3, 0, 0.02)]);
    out.push(vec![(6, 0, 0.01)]);
    out.push(vec![(8, 0, 0.01)]);
    out.push(vec![(2, 0, 0.1), (4, 0, 0.05)]);
    out
}

#[test]
fn toric_spectra_respect_the_bounds() {
    let p = Polytope::interval(-1.0, 1.0).unwrap();
    let bounds: Vec<f64> = (1..=5)
        .map(|k| compute_ck(&p, k, &[1.0]).unwrap().value)
        .collect();
    let mut gated = 0;
    for terms in perturbations() {
        let u =
            SymplecticPotential::with_perturbation(p.clone(), Poly2::from_terms(terms)).unwrap();
        if u.min_scalar_curvature().unwrap() < GATE {
            continue;
        }
        gated += 1;
        let spec = toric1d_spectrum(&u, 5, 2000).unwrap();
        for k in 1..=5 {
            assert!(
                spec.eigenvalues[k] <= bounds[k - 1] + 1e-6,
                "k={k}: {} > {}",
                spec.eigenvalues[k],
                bounds[k - 1]
            );
        }
    }
    assert!(gated >= 10, "{gated}");
}

#[test]
fn sphere_spectra_respect_the_bounds() {
    let mut gated = 0;
    for n in [2, 3] {
        let bounds: Vec<f64> = (1..=5).map(|k| compute_dk(n, k).unwrap().value).collect();
        let mut profiles = vec![Profile::round(n).unwrap()];
        for a in [-0.6, -0.3, 0.0, 0.2, 0.4, 0.6] {
            profiles.push(Profile::from_q(n, Polynomial::new(vec![1.0, a, -a])).unwrap());
        }
        for profile in profiles {
            if check_slope(&profile, 1000).unwrap().min_scal < GATE {
                continue;
            }
            gated += 1;
            let spec = cohom1_spectrum(&profile, 5, 2000).unwrap();
            for k in 1..=5 {
                assert!(spec.eigenvalues[k] <= bounds[k - 1] + 1e-6);
            }
        }
    }
    assert!(gated >= 10, "{gated}");
}
