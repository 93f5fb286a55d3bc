//! `FS_μ` is the restriction to diagrams of an element of `Λ` whose top
//! homogeneous part is `s_μ`. Recovered here by exact interpolation.

use zdiff_core::linalg::solve;
use zdiff_core::partitions::{enumerate_level, Partition};
use zdiff_core::symfunc::{
    eval_on_diagram, fs_eval, schur_to_p, Monomial, PowerSumPoly,
};
use zdiff_core::Rational;

fn monomials_up_to(m: usize) -> Vec<Monomial> {
    (0..=m)
        .flat_map(enumerate_level)
        .map(|rho| Monomial::from_indices(rho.rows().to_vec()))
        .collect()
}

fn interpolate(mu: &Partition, max_size: usize) -> PowerSumPoly {
    let monos = monomials_up_to(mu.size());
    let points: Vec<Partition> = (0..=max_size).flat_map(enumerate_level).collect();
    let one = Rational::from_integer(1.into());
    let a: Vec<Vec<Rational>> = points
        .iter()
        .map(|lam| {
            monos
                .iter()
                .map(|m| eval_on_diagram(&PowerSumPoly::monomial(m.clone(), one.clone()), lam))
                .collect()
        })
        .collect();
    let b: Vec<Rational> = points.iter().map(|lam| fs_eval(mu, lam)).collect();
    let x = solve(&a, &b).expect("FS_mu lies in the span of the p_rho");
    PowerSumPoly::from_terms(monos.into_iter().zip(x))
}

#[test]
fn top_degree_of_fs_is_schur() {
    for m in 0..=5 {
        for mu in enumerate_level(m) {
            let f = interpolate(&mu, m + 4);
            assert_eq!(f.homogeneous_part(m), schur_to_p(&mu), "mu = {mu}");
        }
    }
}

#[test]
fn small_cases() {
    let one = interpolate(&Partition::new(vec![1]).unwrap(), 5);
    assert_eq!(one, "p1".parse().unwrap());
    // FS_(2) - FS_(1,1) = p_2 exactly.
    let two = interpolate(&Partition::new(vec![2]).unwrap(), 6);
    let pair = interpolate(&Partition::new(vec![1, 1]).unwrap(), 6);
    assert_eq!(two - pair, "p2".parse().unwrap());
}
