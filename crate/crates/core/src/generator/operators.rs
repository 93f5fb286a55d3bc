use std::collections::BTreeMap;

use num_traits::Zero;

use crate::partitions::Partition;
use crate::symfunc::{p_to_schur_graded, pieri_p1, PowerSumPoly, QPoly, SchurVector, Variables};
use crate::zmeasure::ZParams;
use crate::{int, Rational};

fn k(i: usize) -> Rational {
    int(i as i64)
}

/// `q_i` with the convention `q_0 = 1`.
fn q(i: usize) -> QPoly {
    if i == 0 {
        QPoly::one()
    } else {
        QPoly::var(i)
    }
}

/// First derivatives `∂f/∂x_i` for `i = 1..=max_var`, index 0 left empty.
fn gradient<V: Variables>(f: &crate::symfunc::Poly<V>) -> Vec<crate::symfunc::Poly<V>> {
    (0..=f.max_var())
        .map(|i| if i == 0 { Default::default() } else { f.derivative(i) })
        .collect()
}

/// Formal action on the spanning family `{s°_μ}`:
/// `s°_μ ↦ -σ_m s°_μ + Σ_{μ•↗μ} bf(c) s°_{μ•}`.
pub fn apply_a_schur(
    coeffs: &BTreeMap<Partition, Rational>,
    params: &ZParams,
) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut add = |p: Partition, c: Rational| {
        let slot = out.entry(p).or_insert_with(Rational::zero);
        *slot += c;
    };
    for (mu, c) in coeffs {
        add(mu.clone(), -params.sigma(mu.size()) * c);
        for (b, low) in mu.down_neighbors() {
            add(low, params.box_factor(b.content) * c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `B s_μ = -σ_m s_μ + p_1 Σ_{μ•↗μ} bf(c) s_{μ•}`. Homogeneous of degree 0.
pub fn apply_b(v: &SchurVector, params: &ZParams) -> SchurVector {
    let m = v.degree();
    let lowered = SchurVector::from_terms(
        m.saturating_sub(1),
        v.terms().flat_map(|(mu, c)| {
            mu.down_neighbors()
                .into_iter()
                .map(move |(b, low)| (low, params.box_factor(b.content) * c))
        }),
    )
    .expect("lowered terms have degree m-1");
    let diag = v.scale(&-params.sigma(m));
    if m == 0 {
        return diag;
    }
    &diag + &pieri_p1(&lowered)
}

/// `B` on an arbitrary element of `Λ`, through the Schur expansion.
pub fn apply_b_poly(f: &PowerSumPoly, params: &ZParams) -> PowerSumPoly {
    p_to_schur_graded(f)
        .values()
        .map(|v| apply_b(v, params).to_power_sums())
        .fold(PowerSumPoly::zero(), |acc, g| acc + g)
}

/// `B` as a second-order differential operator in `p_1, p_2, …`:
///
/// ```text
/// Σ_{i,j≥2} ij (p_1 p_{i+j-1} - p_i p_j) ∂_i ∂_j  -  d Σ_{i≥2} i p_i ∂_i
///   + e Σ_{i≥2} i p_1 p_{i-1} ∂_i  +  Σ_{i,j≥1} (i+j+1) p_1 p_i p_j ∂_{i+j+1}
///   - Σ_{i≥2} i(i-1) p_i ∂_i
/// ```
pub fn apply_b_diff(f: &PowerSumPoly, params: &ZParams) -> PowerSumPoly {
    let top = f.max_var();
    let grad = gradient(f);
    let mut out = PowerSumPoly::zero();
    for i in 2..=top {
        if grad[i].is_zero() {
            continue;
        }
        for j in 2..=top {
            let dij = grad[i].derivative(j);
            if dij.is_zero() {
                continue;
            }
            let coeff = PowerSumPoly::var(1).times_var(i + j - 1) - PowerSumPoly::var(i).times_var(j);
            out = out + (&coeff * &dij).scale(&k(i * j));
        }
        let first = grad[i].times_var(i).scale(&k(i));
        out = out - first.scale(params.d());
        out = out - first.scale(&k(i - 1));
        out = out + grad[i].times_var(1).times_var(i - 1).scale(&(params.e() * k(i)));
    }
    for s in 3..=top {
        // i + j + 1 = s with i, j ≥ 1
        for i in 1..s - 1 {
            let j = s - 1 - i;
            out = out + grad[s].times_var(1).times_var(i).times_var(j).scale(&k(s));
        }
    }
    out
}

/// `G = Σ i p_i ∂_i`, multiplication by the degree on homogeneous parts.
pub fn euler_operator(f: &PowerSumPoly) -> PowerSumPoly {
    let grad = gradient(f);
    (1..grad.len())
        .map(|i| grad[i].times_var(i).scale(&k(i)))
        .fold(PowerSumPoly::zero(), |acc, g| acc + g)
}

/// `C'_1 = Σ_{i≥1} (i+1) p_i ∂_{i+1}`.
pub fn c1_diff(f: &PowerSumPoly) -> PowerSumPoly {
    let grad = gradient(f);
    (2..grad.len())
        .map(|s| grad[s].times_var(s - 1).scale(&k(s)))
        .fold(PowerSumPoly::zero(), |acc, g| acc + g)
}

/// `C'_2 = Σ_{i,j≥1} ij p_{i+j-1} ∂_i ∂_j + Σ_{i,j≥1} (i+j+1) p_i p_j ∂_{i+j+1}`.
pub fn c2_diff(f: &PowerSumPoly) -> PowerSumPoly {
    let grad = gradient(f);
    let top = f.max_var();
    let mut out = PowerSumPoly::zero();
    for i in 1..=top {
        for j in 1..=top {
            let dij = grad[i].derivative(j);
            if !dij.is_zero() {
                out = out + dij.times_var(i + j - 1).scale(&k(i * j));
            }
        }
    }
    for s in 3..=top {
        for i in 1..s - 1 {
            out = out + grad[s].times_var(i).times_var(s - 1 - i).scale(&k(s));
        }
    }
    out
}

/// `B = -G(G - 1 + d) + p_1 (C'_2 + e C'_1 + d C'_0)` with `C'_0 = ∂/∂p_1`,
/// assembled from the differential forms of `G`, `C'_1`, `C'_2`.
pub fn apply_b_from_content_ops(f: &PowerSumPoly, params: &ZParams) -> PowerSumPoly {
    let g = euler_operator(f);
    let gg = euler_operator(&g);
    let diag = gg + g.scale(&(params.d() - int(1)));
    let c = c2_diff(f) + c1_diff(f).scale(params.e()) + f.derivative(1).scale(params.d());
    c.times_var(1) - diag
}

/// `A` in the moment coordinates, with `q_0 = 1`:
///
/// ```text
/// Σ_{i,j≥1} (i+1)(j+1)(q_{i+j} - q_i q_j) ∂_i ∂_j  -  d Σ (i+1) q_i ∂_i
///   + e Σ (i+1) q_{i-1} ∂_i  +  Σ_{i,j≥0} (i+j+3) q_i q_j ∂_{i+j+2}
///   - Σ (i+1) i q_i ∂_i
/// ```
pub fn apply_a_diff(f: &QPoly, params: &ZParams) -> QPoly {
    apply_a_diff_truncated(f, params, usize::MAX)
}

/// [`apply_a_diff`] with every term containing `∂/∂q_i`, `i > m`, dropped.
/// On functions of `q_1..q_m` only this is the full operator.
pub fn apply_a_diff_truncated(f: &QPoly, params: &ZParams, m: usize) -> QPoly {
    let top = f.max_var().min(m);
    let grad = gradient(f);
    let mut out = QPoly::zero();
    for i in 1..=top {
        if grad[i].is_zero() {
            continue;
        }
        for j in 1..=top {
            let dij = grad[i].derivative(j);
            if dij.is_zero() {
                continue;
            }
            let coeff = q(i + j) - q(i) * q(j);
            out = out + (&coeff * &dij).scale(&k((i + 1) * (j + 1)));
        }
        let first = (&q(i) * &grad[i]).scale(&k(i + 1));
        out = out - first.scale(params.d());
        out = out - first.scale(&k(i));
        out = out + (&q(i - 1) * &grad[i]).scale(&(params.e() * k(i + 1)));
    }
    for s in 2..=top {
        // i + j + 2 = s with i, j ≥ 0
        for i in 0..=s - 2 {
            let j = s - 2 - i;
            out = out + (&(q(i) * q(j)) * &grad[s]).scale(&k(s + 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_level;
    use crate::rat;
    use crate::symfunc::{content_op, reduce_mod_p1, schur_to_p};

    fn pts() -> Vec<ZParams> {
        vec![
            ZParams::classify(int(1), rat(6, 25)),
            ZParams::classify(int(0), int(1)),
            ZParams::classify(rat(-2, 3), rat(7, 5)),
        ]
    }

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn pp(s: &str) -> PowerSumPoly {
        s.parse().unwrap()
    }

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn a_diff_examples() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        let (e, d) = (pt.e().clone(), pt.d().clone());
        assert!(apply_a_diff(&QPoly::one(), &pt).is_zero());
        let want = qp("q1").scale(&(int(-2) * (&d + int(1)))) + QPoly::constant(int(2) * &e);
        assert_eq!(apply_a_diff(&qp("q1"), &pt), want);
        let want = qp("q1").scale(&(int(3) * &e)) + QPoly::constant(int(3))
            - qp("q2").scale(&(int(3) * (&d + int(2))));
        assert_eq!(apply_a_diff(&qp("q2"), &pt), want);
    }

    #[test]
    fn q1_shifted_is_an_eigenvector() {
        for pt in pts() {
            let c = pt.e() / (pt.d() + int(1));
            let f = qp("q1") - QPoly::constant(c);
            assert_eq!(apply_a_diff(&f, &pt), f.scale(&-pt.sigma(2)));
        }
    }

    #[test]
    fn a_schur_examples() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        let one = |mu: Partition| BTreeMap::from([(mu, int(1))]);
        assert!(apply_a_schur(&one(Partition::empty()), &pt).is_empty());
        let a1 = apply_a_schur(&one(p(&[1])), &pt);
        // -d s°_(1) + d s°_∅, and s°_(1) = 1.
        assert_eq!(a1[&p(&[1])], -pt.d().clone());
        assert_eq!(a1[&Partition::empty()], pt.d().clone());
        let a2 = apply_a_schur(&one(p(&[2])), &pt);
        assert_eq!(a2[&p(&[2])], -pt.sigma(2));
        assert_eq!(a2[&p(&[1])], pt.box_factor(1));
    }

    #[test]
    fn a_schur_matches_a_diff() {
        for pt in pts() {
            for m in 0..=5 {
                for mu in enumerate_level(m) {
                    let image = apply_a_schur(&BTreeMap::from([(mu.clone(), int(1))]), &pt);
                    let lhs = image
                        .iter()
                        .map(|(nu, c)| reduce_mod_p1(&schur_to_p(nu)).scale(c))
                        .fold(QPoly::zero(), |a, b| a + b);
                    let rhs = apply_a_diff(&reduce_mod_p1(&schur_to_p(&mu)), &pt);
                    assert_eq!(lhs, rhs, "{mu}");
                }
            }
        }
    }

    #[test]
    fn b_examples() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        assert!(apply_b(&SchurVector::basis(&Partition::empty()), &pt).is_zero());
        assert!(apply_b(&SchurVector::basis(&p(&[1])), &pt).is_zero());
        assert!(apply_b_diff(&pp("p1"), &pt).is_zero());
    }

    #[test]
    fn b_commutes_with_p1() {
        for pt in pts() {
            for m in 0..=6 {
                for mu in enumerate_level(m) {
                    let s = SchurVector::basis(&mu);
                    let lhs = apply_b(&pieri_p1(&s), &pt);
                    let rhs = pieri_p1(&apply_b(&s, &pt));
                    assert_eq!(lhs, rhs, "{mu}");
                }
            }
        }
    }

    #[test]
    fn differential_forms_agree_with_schur_forms() {
        for pt in pts() {
            for m in 0..=6 {
                for mu in enumerate_level(m) {
                    let f = schur_to_p(&mu);
                    let want = apply_b(&SchurVector::basis(&mu), &pt).to_power_sums();
                    assert_eq!(apply_b_diff(&f, &pt), want, "{mu}");
                    assert_eq!(apply_b_from_content_ops(&f, &pt), want, "{mu}");
                }
            }
        }
    }

    #[test]
    fn content_operators() {
        assert_eq!(c1_diff(&schur_to_p(&p(&[2]))), pp("p1"));
        for m in 0..=6 {
            for mu in enumerate_level(m) {
                let s = SchurVector::basis(&mu);
                let f = schur_to_p(&mu);
                assert_eq!(c1_diff(&f), content_op(1, &s).to_power_sums(), "{mu}");
                assert_eq!(c2_diff(&f), content_op(2, &s).to_power_sums(), "{mu}");
                assert_eq!(f.derivative(1), content_op(0, &s).to_power_sums(), "{mu}");
            }
        }
    }

    #[test]
    fn a_diff_is_b_diff_mod_the_ideal() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        for m in 0..=6 {
            for mu in enumerate_level(m) {
                // Monomials p_ρ of degree m, including ones with p_1 factors.
                let f = PowerSumPoly::monomial(
                    crate::symfunc::Monomial::from_indices(mu.rows().to_vec()),
                    int(1),
                );
                let lhs = apply_a_diff(&reduce_mod_p1(&f), &pt);
                let rhs = reduce_mod_p1(&apply_b_diff(&f, &pt));
                assert_eq!(lhs, rhs, "{mu}");
            }
        }
    }

    #[test]
    fn truncation_only_drops_high_derivatives() {
        let pt = ZParams::classify(int(0), int(1));
        let f = qp("q1^2 + q2*q1");
        assert_eq!(apply_a_diff_truncated(&f, &pt, 2), apply_a_diff(&f, &pt));
        let g = qp("q3 + q1");
        assert_eq!(apply_a_diff_truncated(&g, &pt, 1), apply_a_diff(&qp("q1"), &pt));
    }
}
