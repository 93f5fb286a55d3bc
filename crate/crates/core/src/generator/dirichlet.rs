use crate::chains::EmbeddedPoint;
use crate::linalg::{check_psd, DenseMatrix};
use crate::symfunc::QPoly;
use crate::zmeasure::{boundary_expectation, ZParams};
use crate::{format_rational, int, Rational, Result, Verdict, Violation};

use super::operators::apply_a_diff;

fn q(i: usize) -> QPoly {
    if i == 0 {
        QPoly::one()
    } else {
        QPoly::var(i)
    }
}

/// `Γ_ij = (i+1)(j+1)(q_{i+j} - q_i q_j)` as a polynomial.
pub fn gamma_coeff(i: usize, j: usize) -> QPoly {
    (q(i + j) - q(i) * q(j)).scale(&int(((i + 1) * (j + 1)) as i64))
}

/// `Γ(f, g) = Σ_{i,j≥1} Γ_ij ∂f/∂q_i ∂g/∂q_j`. No parameters enter.
pub fn gamma(f: &QPoly, g: &QPoly) -> QPoly {
    let mut out = QPoly::zero();
    for i in 1..=f.max_var() {
        let fi = f.derivative(i);
        if fi.is_zero() {
            continue;
        }
        for j in 1..=g.max_var() {
            let gj = g.derivative(j);
            if gj.is_zero() {
                continue;
            }
            out = out + &gamma_coeff(i, j) * &(&fi * &gj);
        }
    }
    out
}

/// `[Γ_ij(ω)]_{1 ≤ i,j ≤ I}`; needs the moments of `ω` up to `q_{2I}`.
pub fn gamma_matrix(point: &EmbeddedPoint, size: usize) -> DenseMatrix {
    assert!(point.order() >= 2 * size, "need moments up to q_{}", 2 * size);
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    int(((i + 1) * (j + 1)) as i64)
                        * (point.q(i + j) - point.q(i) * point.q(j))
                })
                .collect()
        })
        .collect()
}

/// Exact positive semidefiniteness of `Γ(ω)` at each sample.
pub fn psd_check(points: &[EmbeddedPoint], size: usize) -> Verdict {
    for (k, pt) in points.iter().enumerate() {
        if let Err((pivot, value)) = check_psd(&gamma_matrix(pt, size)) {
            return Err(Violation::new(
                "Gamma(omega) is nonnegative definite",
                format!(
                    "sample {k}: pivot {pivot} is {}",
                    format_rational(&value)
                ),
            ));
        }
    }
    Ok(())
}

/// `2Γ(f,g) = A(fg) - (Af)g - f(Ag)`.
pub fn carre_du_champ_identity(f: &QPoly, g: &QPoly, params: &ZParams) -> Verdict {
    let lhs = gamma(f, g).scale(&int(2));
    let rhs = apply_a_diff(&(f * g), params)
        - &apply_a_diff(f, params) * g
        - f * &apply_a_diff(g, params);
    if lhs == rhs {
        Ok(())
    } else {
        Err(Violation::new(
            "2 Gamma(f,g) = A(fg) - (Af)g - f(Ag)",
            format!("f={f}, g={g}, {params}: {lhs} vs {rhs}"),
        ))
    }
}

/// Under the boundary measure: `-⟨(Af)g⟩ = ⟨Γ(f,g)⟩ = -⟨f(Ag)⟩` and
/// `⟨Af⟩ = ⟨Ag⟩ = 0`.
pub fn dirichlet_check(f: &QPoly, g: &QPoly, params: &ZParams) -> Result<Verdict> {
    let ex = |h: &QPoly| boundary_expectation(h, params);
    let af = apply_a_diff(f, params);
    let ag = apply_a_diff(g, params);
    let left = -ex(&(&af * g))?;
    let middle = ex(&gamma(f, g))?;
    let right = -ex(&(f * &ag))?;
    let mismatch = |name: &str, a: &Rational, b: &Rational| {
        Violation::new(
            name,
            format!(
                "f={f}, g={g}, {params}: {} vs {}",
                format_rational(a),
                format_rational(b)
            ),
        )
    };
    if left != middle {
        return Ok(Err(mismatch("-<(Af)g> = <Gamma(f,g)>", &left, &middle)));
    }
    if right != middle {
        return Ok(Err(mismatch("-<f(Ag)> = <Gamma(f,g)>", &right, &middle)));
    }
    for (h, ah) in [(f, &af), (g, &ag)] {
        let v = ex(ah)?;
        if v != Rational::from_integer(0.into()) {
            return Ok(Err(Violation::new(
                "<Af> = 0",
                format!("f={h}, {params}: {}", format_rational(&v)),
            )));
        }
    }
    Ok(Ok(()))
}
