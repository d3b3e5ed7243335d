use invspec_core::cohom1::{cohom1_spectrum_with, dk_table, Profile};
use invspec_core::toric::{bound_table, direction_sweep_with, Polytope};
use invspec_core::Exec;

#[test]
fn sequential_and_parallel_agree_bitwise() {
    let square = Polytope::from_vertices(&[
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap();
    let bits = |v: Vec<f64>| v.into_iter().map(f64::to_bits).collect::<Vec<_>>();

    let seq = bound_table(&square, 5, &[1.0, 0.0], Exec::Sequential).unwrap();
    let par = bound_table(&square, 5, &[1.0, 0.0], Exec::default()).unwrap();
    assert_eq!(
        bits(seq.iter().map(|r| r.value).collect()),
        bits(par.iter().map(|r| r.value).collect())
    );

    let seq = direction_sweep_with(&square, 2, 12, Exec::Sequential).unwrap();
    let par = direction_sweep_with(&square, 2, 12, Exec::default()).unwrap();
    assert_eq!(seq.value.to_bits(), par.value.to_bits());

    let seq = dk_table(3, 5, Exec::Sequential).unwrap();
    let par = dk_table(3, 5, Exec::default()).unwrap();
    assert_eq!(seq, par);

    let round = Profile::round(3).unwrap();
    let seq = cohom1_spectrum_with(&round, 4, 1000, Exec::Sequential).unwrap();
    let par = cohom1_spectrum_with(&round, 4, 1000, Exec::default()).unwrap();
    assert_eq!(bits(seq.eigenvalues), bits(par.eigenvalues));
}
