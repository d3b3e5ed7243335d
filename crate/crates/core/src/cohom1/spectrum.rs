use super::profile::Profile;
use crate::numerics::sturm::{sl_eigs_with, sl_spectrum, RightBoundary};
use crate::numerics::SpectrumResult;
use crate::{Error, Exec, Result};

/// Invariant spectrum `-(Φ^{2n-2} φ')' = λ φ` on `[0, 1]`.
///
/// Returns `count + 1` eigenvalues, the constant mode first.
pub fn cohom1_spectrum(profile: &Profile, count: usize, mesh: usize) -> Result<SpectrumResult> {
    cohom1_spectrum_with(profile, count, mesh, Exec::default())
}

pub fn cohom1_spectrum_with(
    profile: &Profile,
    count: usize,
    mesh: usize,
    exec: Exec,
) -> Result<SpectrumResult> {
    sl_spectrum(
        |s| profile.sl_coefficient(s).unwrap_or(f64::NAN),
        1.0,
        mesh,
        count + 1,
        exec,
    )
}

/// The same `count + 1` eigenvalues from the two half-interval problems of a
/// mirror-symmetric profile: even modes with zero flux at `s = ½`, odd modes
/// vanishing there. `mesh` is the full-interval mesh.
pub fn half_interval_spectrum(
    profile: &Profile,
    count: usize,
    mesh: usize,
    exec: Exec,
) -> Result<Vec<f64>> {
    if !profile.is_mirror_symmetric() {
        return Err(Error::input("profile is not symmetric about s = 1/2"));
    }
    let p = |s: f64| profile.sl_coefficient(s).unwrap_or(f64::NAN);
    let half_mesh = mesh / 2;
    let mut all = sl_eigs_with(p, 0.5, half_mesh, count + 1, RightBoundary::Natural, exec)?;
    all.extend(sl_eigs_with(
        p,
        0.5,
        half_mesh,
        count + 1,
        RightBoundary::Dirichlet,
        exec,
    )?);
    all.sort_by(f64::total_cmp);
    all.truncate(count + 1);
    Ok(all)
}
