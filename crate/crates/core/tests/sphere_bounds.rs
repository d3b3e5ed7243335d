use invspec_core::cohom1::{
    check_comparison, check_slope, cohom1_spectrum, compute_dk, dk_pencil, half_interval_spectrum,
    phi_max, Profile,
};
use invspec_core::numerics::{sym_gen_eig, SymMatrix};
use invspec_core::{Exec, Polynomial};

fn binomial(m: usize, l: usize) -> f64 {
    (0..l).fold(1.0, |acc, i| acc * (m - i) as f64 / (i + 1) as f64)
}

/// `D_k` in the monomial basis `s^i` from closed-form moments
/// `∫_0^½ (n u)^α u^l du = n^α (½)^{α+l+1} / (α+l+1)`, with the half `[½, 1]`
/// mapped by `u = 1 - s` and `(1-u)^m` expanded binomially.
fn moment_dk(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    let alpha = (2.0 * nf - 2.0) / nf;
    let moment =
        |l: usize| nf.powf(alpha) * 0.5_f64.powf(alpha + l as f64 + 1.0) / (alpha + l as f64 + 1.0);
    let a = SymMatrix::from_fn(k + 1, |i, j| {
        if i == 0 || j == 0 {
            return 0.0;
        }
        let m = i + j - 2;
        let near = moment(m);
        let far: f64 = (0..=m)
            .map(|l| binomial(m, l) * if l % 2 == 0 { 1.0 } else { -1.0 } * moment(l))
            .sum();
        (i * j) as f64 * (near + far)
    });
    let m = SymMatrix::from_fn(k + 1, |i, j| 1.0 / (i + j + 1) as f64);
    sym_gen_eig(&a, &m).unwrap().max_value()
}

#[test]
fn first_bound_on_the_two_sphere() {
    assert!((compute_dk(2, 1).unwrap().value - 6.0).abs() < 1e-10);
}

#[test]
fn pencil_matches_the_moment_oracle() {
    for n in 2..=4 {
        for k in 1..=5 {
            let want = moment_dk(n, k);
            let got = compute_dk(n, k).unwrap().value;
            assert!(
                (got - want).abs() < 1e-9 * want,
                "n={n} k={k}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn bounds_grow_with_degree() {
    for n in 2..=4 {
        let values: Vec<f64> = (1..=12).map(|k| compute_dk(n, k).unwrap().value).collect();
        assert!(values.iter().all(|v| *v > 0.0));
        for pair in values.windows(2) {
            assert!(pair[1] >= pair[0] * (1.0 - 1e-12), "n={n}: {values:?}");
        }
    }
}

#[test]
fn second_bound_by_dense_sampling() {
    // φ = a + b s + c s²; the stiffness ignores a, and a = -(b/2 + c/3) minimizes the mass.
    let (stiff, _) = dk_pencil(2, 2).unwrap();
    let d2 = compute_dk(2, 2).unwrap().value;
    let mut best: f64 = 0.0;
    let samples = 200_000;
    for i in 0..samples {
        let theta = std::f64::consts::PI * i as f64 / samples as f64;
        let (b, c) = (theta.cos(), theta.sin());
        let a = -(b / 2.0 + c / 3.0);
        let phi = Polynomial::new(vec![a, b, c]);
        let mass = (&phi * &phi).integrate(0.0, 1.0).unwrap();
        // Legendre coefficients of φ' on [0, 1]: φ = a + b s + c s², P_1 = 2s - 1, P_2 = 6s² - 6s + 1.
        let c2 = c / 6.0;
        let c1 = (b + c) / 2.0;
        let energy = stiff.quadratic_form(&[0.0, c1, c2]);
        best = best.max(energy / mass);
    }
    assert!(
        best <= d2 * (1.0 + 1e-12) && best >= d2 * (1.0 - 1e-6),
        "{best} vs {d2}"
    );
}

#[test]
fn repeated_calls_are_bit_identical() {
    for n in 2..=4 {
        let a = compute_dk(n, 6).unwrap();
        let b = compute_dk(n, 6).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}

#[test]
fn comparison_profile_is_mirror_symmetric() {
    for n in 2..=5 {
        for i in 0..=64 {
            let s = i as f64 / 128.0;
            assert_eq!(phi_max(n, s).unwrap(), phi_max(n, 1.0 - s).unwrap());
        }
    }
}

fn profile_corpus() -> Vec<Profile> {
    let mut out = Vec::new();
    for n in [2, 3] {
        for a in [-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 1.0, 2.0, 3.0] {
            out.push(Profile::from_q(n, Polynomial::new(vec![1.0, a, -a])).unwrap());
        }
        for b in [-0.5, 0.5] {
            // q = 1 + b s(1-s)(2s-1)
            out.push(
                Profile::from_q(n, Polynomial::new(vec![1.0, -b, 3.0 * b, -2.0 * b])).unwrap(),
            );
        }
    }
    out
}

#[test]
fn gradient_and_comparison_properties() {
    let corpus = profile_corpus();
    assert!(corpus.len() >= 20);
    let (mut nonneg, mut steep) = (0, 0);
    for profile in &corpus {
        let g = check_slope(profile, 1000).unwrap();
        assert!(g.consistent);
        if g.max_abs_rho_dot > 1.0 + 1e-8 {
            steep += 1;
            assert!(g.min_scal < 0.0);
        }
        if g.min_scal >= -1e-8 {
            nonneg += 1;
            assert!(g.max_abs_rho_dot <= 1.0 + 1e-6);
            assert!(check_comparison(profile, 1000).unwrap().within);
        }
    }
    assert!(nonneg >= 10 && steep >= 2, "nonneg {nonneg} steep {steep}");
}

#[test]
fn round_sphere_spectrum_converges_at_second_order() {
    let round = Profile::round(2).unwrap();
    let levels: Vec<Vec<f64>> = [1000, 2000, 4000]
        .iter()
        .map(|&m| cohom1_spectrum(&round, 5, m).unwrap().eigenvalues)
        .collect();
    for k in 1..=5 {
        let exact = (2 * k * (k + 1)) as f64;
        assert!(((levels[2][k] - exact) / exact).abs() < 1e-3);
        let order = ((levels[0][k] - levels[1][k]) / (levels[1][k] - levels[2][k])).log2();
        assert!((order - 2.0).abs() < 0.3, "k={k}: order {order}");
    }
}

#[test]
fn half_interval_cross_validation() {
    for profile in [
        Profile::round(3).unwrap(),
        Profile::from_q(2, Polynomial::new(vec![1.0, 0.5, -0.5])).unwrap(),
    ] {
        let full = cohom1_spectrum(&profile, 6, 4000).unwrap();
        let halves = half_interval_spectrum(&profile, 6, 4000, Exec::default()).unwrap();
        for k in 1..=6 {
            assert!(((full.eigenvalues[k] - halves[k]) / full.eigenvalues[k]).abs() < 1e-3);
        }
    }
    let lopsided = Profile::from_q(2, Polynomial::new(vec![1.0, 0.5, -1.0, 0.5])).unwrap();
    assert!(half_interval_spectrum(&lopsided, 3, 1000, Exec::default()).is_err());
}
