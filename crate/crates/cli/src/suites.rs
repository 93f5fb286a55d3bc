//! The exact verification suites behind `zdiff verify`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use zdiff_core::chains::pascal::pascal_stationarity_check;
use zdiff_core::chains::{embed, reversibility_check_variant, UpDownChain, Variant};
use zdiff_core::generator::{
    apply_a_diff, apply_a_schur, apply_b, apply_b_diff, apply_b_from_content_ops,
    c1_diff, c2_diff, carre_du_champ_identity, charpoly_check, d_tilde_check, dirichlet_check,
    fs_chain_check, psd_check, rectangle_invariance_check, u_tilde_check, OperatorMatrix,
    Sl2Truncation,
};
use zdiff_core::partitions::{enumerate_level, interlacing, Partition};
use zdiff_core::symfunc::{
    content_op, pieri_p1, reduce_mod_p1, schur_to_p, Monomial, PowerSumPoly, QPoly, SchurVector,
};
use zdiff_core::zmeasure::{
    boundary_expectation, coherency_check, coherency_check_measures, down_kernel, up_kernel,
    LevelMeasure,
};
use zdiff_core::{format_rational, Rational, Result, Verdict, Violation, ZParams};

use crate::config::ExperimentConfig;
use crate::error::CliError;

pub const FAULTS: [&str; 4] = ["coherency", "reversibility", "sl2", "spectrum"];

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SuiteLine {
    pub suite: String,
    pub params: String,
    pub identity: String,
    pub passed: bool,
    pub witness: String,
}

type Check = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;

struct Suite {
    id: &'static str,
    identity: &'static str,
    params: Option<ZParams>,
    check: Check,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

fn up_to(m: usize) -> Vec<Partition> {
    (0..=m).flat_map(enumerate_level).collect()
}

fn mismatch(identity: &str, what: String) -> Verdict {
    Err(Violation::new(identity, what))
}

fn test_set() -> Vec<QPoly> {
    ["q1", "q2", "q3", "q1^2"]
        .iter()
        .map(|s| s.parse().expect("fixed polynomial"))
        .collect()
}

fn per_point(pt: &ZParams, cfg: &ExperimentConfig, fault: Option<&str>) -> Vec<Suite> {
    let max_n = cfg.max_n;
    let trunc = cfg.truncation;
    let degree = cfg.degree.clamp(4, 6);
    let p = |id, identity, check: Check| Suite {
        id,
        identity,
        params: Some(pt.clone()),
        check,
    };
    let mut out = Vec::new();

    let q = pt.clone();
    out.push(p(
        "kernels",
        "rows of p_down and p_up are probability vectors",
        Box::new(move || {
            for n in 1..=max_n {
                if let Err(v) = down_kernel(n)?.check_stochastic() {
                    return Ok(Err(v));
                }
                if let Err(v) = up_kernel(n, &q)?.check_stochastic() {
                    return Ok(Err(v));
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    let broken = fault == Some("coherency");
    out.push(p(
        "coherency",
        "M_n p_down = M_{n-1} and M_n p_up = M_{n+1}",
        Box::new(move || {
            if broken {
                let n = max_n.max(3);
                let lower = LevelMeasure::new(n - 1, &q)?;
                let mut mid = LevelMeasure::new(n, &q)?;
                let upper = LevelMeasure::new(n + 1, &q)?;
                // Move a little mass between two diagrams; the total stays 1.
                let eps = Rational::new(1.into(), 1000.into());
                mid.weights[0] += &eps;
                mid.weights[1] -= &eps;
                return coherency_check_measures(&lower, &mid, &upper, &q);
            }
            for n in 1..=max_n {
                if let Err(v) = coherency_check(n, &q)? {
                    return Ok(Err(v));
                }
            }
            Ok(Ok(()))
        }),
    ));

    for (id, variant) in [("reversibility", Variant::UpDown), ("reversibility-down-up", Variant::DownUp)] {
        let q = pt.clone();
        let broken = fault == Some("reversibility") && variant == Variant::UpDown;
        out.push(p(
            id,
            "M_n(l) T_n(l,m) = M_n(m) T_n(m,l) and M_n T_n = M_n",
            Box::new(move || {
                if broken {
                    let n = max_n.max(4);
                    let mut chain = UpDownChain::new(n, q.clone()).materialize()?;
                    let eps = Rational::new(1.into(), 1000.into());
                    chain.rows[1][0].1 += &eps;
                    chain.rows[1][1].1 -= &eps;
                    return Ok(chain.check_reversible(&LevelMeasure::new(n, &q)?));
                }
                for n in 1..=max_n {
                    if let Err(v) = reversibility_check_variant(n, &q, variant)? {
                        return Ok(Err(v));
                    }
                }
                Ok(Ok(()))
            }),
        ));
    }

    let q = pt.clone();
    out.push(p(
        "fs-up",
        "U FS_mu = sum bf(c) FS_mu. + (p1 + d + |mu|) FS_mu",
        Box::new(move || {
            for mu in up_to(3) {
                for n in 0..=max_n {
                    if let Err(v) = u_tilde_check(&mu, n, &q) {
                        return Ok(Err(v));
                    }
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "fs-chain",
        "(T_n - 1) FS_mu at finite n",
        Box::new(move || {
            for mu in up_to(3) {
                for n in 1..=max_n {
                    if let Err(v) = fs_chain_check(&mu, n, &q)? {
                        return Ok(Err(v));
                    }
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    let broken = fault == Some("sl2");
    out.push(p(
        "sl2",
        "[E,F] = H, [H,E] = 2E, [H,F] = -2F",
        Box::new(move || {
            let mut t = Sl2Truncation::new(trunc, &q);
            if broken {
                let col = t.index_of(&Partition::new(vec![1])?).expect("in basis");
                let row = t.index_of(&Partition::new(vec![2])?).expect("in basis");
                t.e[row][col] += one();
            }
            Ok(t.commutator_check())
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "b-commutes-with-p1",
        "B (p1 f) = p1 B f",
        Box::new(move || {
            for mu in up_to(5) {
                let s = SchurVector::basis(&mu);
                if apply_b(&pieri_p1(&s), &q) != pieri_p1(&apply_b(&s, &q)) {
                    return Ok(mismatch("B (p1 f) = p1 B f", format!("s_{mu}")));
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "b-differential",
        "B on Schur functions = B as a differential operator in p_k",
        Box::new(move || {
            for mu in up_to(5) {
                let f = schur_to_p(&mu);
                let want = apply_b(&SchurVector::basis(&mu), &q).to_power_sums();
                if apply_b_diff(&f, &q) != want || apply_b_from_content_ops(&f, &q) != want {
                    return Ok(mismatch("differential B", format!("s_{mu}")));
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "a-quotient",
        "A reduce(f) = reduce(B f) modulo p1 - 1",
        Box::new(move || {
            for rho in up_to(5) {
                let f = PowerSumPoly::monomial(Monomial::from_indices(rho.rows().to_vec()), one());
                if apply_a_diff(&reduce_mod_p1(&f), &q) != reduce_mod_p1(&apply_b_diff(&f, &q)) {
                    return Ok(mismatch("A on the quotient", format!("p_{rho}")));
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "a-schur",
        "A s°_mu = -sigma_m s°_mu + sum bf(c) s°_mu.",
        Box::new(move || {
            for mu in up_to(5) {
                let image = apply_a_schur(&BTreeMap::from([(mu.clone(), one())]), &q);
                let lhs = image
                    .iter()
                    .map(|(nu, c)| reduce_mod_p1(&schur_to_p(nu)).scale(c))
                    .fold(QPoly::zero(), |a, b| a + b);
                if lhs != apply_a_diff(&reduce_mod_p1(&schur_to_p(&mu)), &q) {
                    return Ok(mismatch("A on Schur images", format!("s°_{mu}")));
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    let broken = fault == Some("spectrum");
    out.push(p(
        "spectrum",
        "A is triangular with diagonal -m(m-1+d); det(t - A) matches",
        Box::new(move || {
            let mut op = OperatorMatrix::new(degree, &q)?;
            if broken {
                op.matrix[3][2] += one();
            }
            if let Err(v) = op.check_triangular(&q) {
                return Ok(Err(v));
            }
            charpoly_check(degree, &q)
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "carre-du-champ",
        "2 Gamma(f,g) = A(fg) - (Af)g - f(Ag)",
        Box::new(move || {
            for f in test_set() {
                for g in test_set() {
                    if let Err(v) = carre_du_champ_identity(&f, &g, &q) {
                        return Ok(Err(v));
                    }
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "dirichlet",
        "-<(Af)g> = <Gamma(f,g)> = -<f(Ag)> and <Af> = 0",
        Box::new(move || {
            for f in test_set() {
                for g in test_set() {
                    if let Err(v) = dirichlet_check(&f, &g, &q)? {
                        return Ok(Err(v));
                    }
                }
            }
            Ok(Ok(()))
        }),
    ));

    let q = pt.clone();
    out.push(p(
        "mean-q1",
        "<q1> = e/(d+1) under the boundary measure",
        Box::new(move || {
            let got = boundary_expectation(&"q1".parse()?, &q)?;
            let want = q.e() / (q.d() + one());
            if got == want {
                Ok(Ok(()))
            } else {
                Ok(mismatch(
                    "<q1> = e/(d+1)",
                    format!("{} vs {}", format_rational(&got), format_rational(&want)),
                ))
            }
        }),
    ));
    out
}

fn parameter_free(cfg: &ExperimentConfig) -> Vec<Suite> {
    let max_n = cfg.max_n;
    let s = |id, identity, check: Check| Suite {
        id,
        identity,
        params: None,
        check,
    };
    vec![
        s(
            "fs-down",
            "D FS_mu = (p1 - |mu|) FS_mu",
            Box::new(move || {
                for mu in up_to(3) {
                    for n in 0..=max_n {
                        if let Err(v) = d_tilde_check(&mu, n) {
                            return Ok(Err(v));
                        }
                    }
                }
                Ok(Ok(()))
            }),
        ),
        s(
            "interlacing",
            "sum x - sum y = 0 and sum x^2 - sum y^2 = 2|l|",
            Box::new(|| {
                for lam in up_to(10) {
                    let (x, y) = interlacing(&lam);
                    let s1: i64 = x.iter().sum::<i64>() - y.iter().sum::<i64>();
                    let s2: i64 = x.iter().map(|v| v * v).sum::<i64>()
                        - y.iter().map(|v| v * v).sum::<i64>();
                    if s1 != 0 || s2 != 2 * lam.size() as i64 {
                        return Ok(mismatch("interlacing", format!("{lam}: {s1}, {s2}")));
                    }
                }
                Ok(Ok(()))
            }),
        ),
        s(
            "rectangles",
            "span of diagrams in a k x l box is invariant at z=k, z'=-l",
            Box::new(|| {
                for (k, l) in [(1, 1), (2, 3), (3, 2)] {
                    if let Err(v) = rectangle_invariance_check(k, l) {
                        return Ok(Err(v));
                    }
                }
                Ok(Ok(()))
            }),
        ),
        s(
            "content-operators",
            "C'_0, C'_1, C'_2 as differential operators = content multipliers",
            Box::new(|| {
                for mu in up_to(5) {
                    let v = SchurVector::basis(&mu);
                    let f = schur_to_p(&mu);
                    let ok = c1_diff(&f) == content_op(1, &v).to_power_sums()
                        && c2_diff(&f) == content_op(2, &v).to_power_sums()
                        && f.derivative(1) == content_op(0, &v).to_power_sums();
                    if !ok {
                        return Ok(mismatch("content operators", format!("s_{mu}")));
                    }
                }
                Ok(Ok(()))
            }),
        ),
        s(
            "gamma-psd",
            "Gamma(omega) is nonnegative definite",
            Box::new(|| {
                let points = enumerate_level(10)
                    .iter()
                    .map(|lam| embed(lam, 8))
                    .collect::<Result<Vec<_>>>()?;
                Ok(psd_check(&points, 4))
            }),
        ),
        s(
            "pascal",
            "uniform law on a + b = n is stationary",
            Box::new(|| {
                for n in 0..=50 {
                    if let Err(v) = pascal_stationarity_check(n) {
                        return Ok(Err(v));
                    }
                }
                Ok(Ok(()))
            }),
        ),
    ]
}

/// Runs every suite in parallel. Lines come back in a fixed order.
pub fn run_all(cfg: &ExperimentConfig) -> std::result::Result<Vec<SuiteLine>, CliError> {
    let fault = cfg.inject_fault.as_deref();
    if let Some(f) = fault {
        if !FAULTS.contains(&f) {
            return Err(CliError::Config(format!(
                "unknown fault {f:?}, expected one of {}",
                FAULTS.join(", ")
            )));
        }
    }
    let points = cfg.points()?;
    for pt in &points {
        pt.require_admissible()?;
    }
    let mut suites = parameter_free(cfg);
    for pt in &points {
        suites.extend(per_point(pt, cfg, fault));
    }
    suites
        .par_iter()
        .map(|s| {
            let params = s.params.as_ref().map_or("-".to_string(), |p| p.to_string());
            let verdict = (s.check)()?;
            Ok(SuiteLine {
                suite: s.id.to_string(),
                params,
                identity: s.identity.to_string(),
                passed: verdict.is_ok(),
                witness: verdict.err().map(|v| v.to_string()).unwrap_or_default(),
            })
        })
        .collect::<std::result::Result<Vec<_>, zdiff_core::Error>>()
        .map_err(CliError::from)
}
