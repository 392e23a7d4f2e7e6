//! The weight module `D(a, z)` of the Heisenberg algebra `span{p_0, p_1, z}`
//! inside `g~(1/2)`, on Laurent polynomials in one variable:
//!
//! ```text
//! p_1 x^i = x^{i+1}      p_0 x^i = -z (a + i) x^{i-1}      z x^i = z x^i
//! ```
//!
//! It is simple exactly when `a` is not an integer. For `a` in `Z` the
//! monomials `x^i` with `i >= -a` span a submodule.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Family, GeneratorId, HalfInteger, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{as_int, fmt_q, Q};
use crate::report::Report;

use super::{check_realization, monomial, DiffOperator, PolySpace, Realization};

/// `p_1 = x`, `p_0 = -z (d + a/x)`, `z = z`.
pub fn d_module(a: &Q, z: &Q, window: u32) -> Result<Realization> {
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let alg = LieAlgebra::new(HalfInteger::half(1), Family::Extended)?;
    let space = PolySpace::new(&[("x", 1)], true);
    let mut r = Realization::new("d-module", alg, space)
        .with_param("a", fmt_q(a))
        .with_param("z", fmt_q(z))
        .with_param("window", window.to_string());
    let shifted = DiffOperator::deriv(1, 0).add(&DiffOperator::var_pow(1, 0, -1).scale(a));
    r.set_op(GeneratorId::P(0), shifted.scale(&-z.clone()));
    r.set_op(GeneratorId::P(1), DiffOperator::var(1, 0));
    r.set_op(GeneratorId::Z, DiffOperator::scalar(1, z.clone()));
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DModuleAnalysis {
    /// Exponents `i` in the window with `p_0 x^i = 0`.
    pub kernel_witnesses: Vec<i32>,
    /// `p_0` on exponents `-window+1 ..= window`.
    pub p0_injective: bool,
    /// `p_1` on exponents `-window ..= window-1`.
    pub p1_injective: bool,
}

/// Matrix of `g` from the exponents `from` to the whole window.
fn window_matrix(r: &Realization, g: GeneratorId, from: &[i32], window: i32) -> Result<Matrix> {
    let rows = (2 * window + 1) as usize;
    let mut m = Matrix::zeros(rows, from.len());
    for (col, &i) in from.iter().enumerate() {
        for (e, c) in r.apply(g, &monomial(vec![i]))? {
            if e[0].abs() > window {
                return Err(Error::Precondition(format!("{g} x^{i} leaves the window")));
            }
            m.set((e[0] + window) as usize, col, c);
        }
    }
    Ok(m)
}

pub fn analyze_d_module(a: &Q, z: &Q, window: u32) -> Result<DModuleAnalysis> {
    let r = d_module(a, z, window)?;
    let w = window as i32;
    let mut kernel_witnesses = Vec::new();
    for i in -w..=w {
        if r.apply(GeneratorId::P(0), &monomial(vec![i]))?.is_empty() {
            kernel_witnesses.push(i);
        }
    }
    let down: Vec<i32> = (-w + 1..=w).collect();
    let up: Vec<i32> = (-w..w).collect();
    let p0 = window_matrix(&r, GeneratorId::P(0), &down, w)?;
    let p1 = window_matrix(&r, GeneratorId::P(1), &up, w)?;
    Ok(DModuleAnalysis {
        kernel_witnesses,
        p0_injective: p0.rank() == down.len(),
        p1_injective: p1.rank() == up.len(),
    })
}

/// Relations on the window, the integrality dichotomy, and, with
/// `expect_simple`, the absence of an invariant subspace.
pub fn check_d_module(a: &Q, z: &Q, window: u32, expect_simple: bool) -> Result<Report> {
    let r = d_module(a, z, window)?;
    let analysis = analyze_d_module(a, z, window)?;
    let mut report = Report::new("d-module")
        .param("a", fmt_q(a))
        .param("z", fmt_q(z))
        .param("window", window as u64)
        .param("expect_simple", expect_simple);
    report.absorb("relations", check_realization(&r, window));

    let integral = as_int(a);
    let expected: Vec<i32> = integral
        .map(|n| -n)
        .filter(|i| i.unsigned_abs() <= u64::from(window))
        .map(|i| i as i32)
        .into_iter()
        .collect();
    report.check(
        "p0 kernel exactly at i = -a",
        analysis.kernel_witnesses == expected,
        (analysis.kernel_witnesses != expected)
            .then(|| format!("kernel at {:?}, expected {expected:?}", analysis.kernel_witnesses)),
    );
    if integral.is_none() {
        report.ok("p0 injective on the interior", analysis.p0_injective);
    }
    report.ok("p1 injective on the interior", analysis.p1_injective);
    if expect_simple {
        let witness = analysis
            .kernel_witnesses
            .first()
            .map(|i| format!("x^i with i >= {i} span an invariant subspace"));
        report.check("no invariant subspace", witness.is_none(), witness);
    }
    report.data = Some(serde_json::to_value(&analysis).expect("serializable"));
    Ok(report)
}
