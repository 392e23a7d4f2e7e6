//! Singular vectors, radicals and simplicity certificates.
//!
//! For a module `M` with one-dimensional top `M_0` and weights bounded above,
//! the largest submodule missing the top is
//!
//! ```text
//! R = { v : (U(g_+) v) has no component in M_0 }
//! ```
//!
//! and since `U(g_+)` is generated by the positive generators,
//! `R_0 = 0` and `R_n = { v in M_n : x v in R_{n - s(x)} for every positive x }`.
//! Each `R_n` is kept as the kernel of a full-row-rank matrix `Q_n`, built from
//! `Q_t A_x` for the lower `t`. Every positive generator lowers the depth, so
//! the recursion never leaves the window and its answer is exact at every
//! in-window depth. For a Verma module `R` is the radical and `M/R` is simple.

use std::collections::VecDeque;

use crate::algebra::GeneratorId;
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, Span, Vector};

use super::{Origin, WeightModule};

fn positive_generators(m: &WeightModule) -> Vec<GeneratorId> {
    m.generators()
        .iter()
        .copied()
        .filter(|&g| m.shift(g) < 0)
        .collect()
}

/// Joint kernel at depth `n` of every positive-degree generator.
pub fn primitive_vectors(m: &WeightModule, n: usize) -> Result<Vec<Vector>> {
    if n > m.depth() {
        return Err(Error::Precondition(format!("depth {n} is outside the window {}", m.depth())));
    }
    let mut stack = Matrix::zeros(0, m.dim(n));
    for g in positive_generators(m) {
        stack = stack.vstack(m.action(g, n).expect("raising maps stay in the window"));
    }
    Ok(stack.nullspace())
}

/// The matrices `Q_n` with `ker Q_n = R_n`.
fn radical_equations(m: &WeightModule) -> Vec<Matrix> {
    let pos = positive_generators(m);
    let mut eqs: Vec<Matrix> = Vec::with_capacity(m.depth() + 1);
    eqs.push(Matrix::identity(m.dim(0)));
    for n in 1..=m.depth() {
        let mut stack = Matrix::zeros(0, m.dim(n));
        for &g in &pos {
            let t = n as i64 + m.shift(g);
            if t < 0 {
                continue;
            }
            let a = m.action(g, n).expect("raising maps stay in the window");
            stack = stack.vstack(&eqs[t as usize].mul(a));
        }
        eqs.push(stack.row_basis());
    }
    eqs
}

fn require_verma(m: &WeightModule) -> Result<()> {
    if m.origin() != Origin::Verma {
        return Err(Error::Precondition(
            "radical computations need a Verma module".into(),
        ));
    }
    Ok(())
}

fn require_top(m: &WeightModule) -> Result<()> {
    if m.dim(0) != 1 {
        return Err(Error::Precondition(format!(
            "the criterion needs a one-dimensional top space, found dimension {}",
            m.dim(0)
        )));
    }
    Ok(())
}

/// Dimension of the radical of a Verma module at each depth.
pub fn radical_dims(m: &WeightModule) -> Result<Vec<usize>> {
    require_verma(m)?;
    Ok(radical_equations(m)
        .iter()
        .enumerate()
        .map(|(n, q)| m.dim(n) - q.rows())
        .collect())
}

/// The simple quotient `M / R` of a Verma module, in the coordinates `Q_n v`.
pub fn simple_quotient(m: &WeightModule) -> Result<WeightModule> {
    require_verma(m)?;
    let eqs = radical_equations(m);
    let sections: Vec<Matrix> = eqs
        .iter()
        .map(|q| q.right_inverse().expect("row basis has full rank"))
        .collect();
    let dims: Vec<usize> = eqs.iter().map(Matrix::rows).collect();
    WeightModule::build(
        m.algebra(),
        m.generators(),
        m.top_weight().clone(),
        m.step(),
        dims,
        Origin::Quotient,
        |g, n, t| {
            let a = m.action(g, n).expect("in window");
            Ok(eqs[t].mul(a).mul(&sections[n]))
        },
    )
}

/// Outcome of [`is_simple_at_truncation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplicity {
    /// Dimension of the submodule missing the top, per depth.
    pub kernel_dims: Vec<usize>,
    /// Dimension spanned from the top vector inside the window, per depth.
    pub generated_dims: Vec<usize>,
    pub dims: Vec<usize>,
}

impl Simplicity {
    /// First depth with a vector that never returns to the top. Definitive.
    pub fn kernel_failure(&self) -> Option<usize> {
        self.kernel_dims.iter().position(|&d| d > 0)
    }

    /// First depth not reached from the top inside the window. The span is a
    /// lower bound, so this is inconclusive rather than a disproof.
    pub fn generation_failure(&self) -> Option<usize> {
        self.generated_dims
            .iter()
            .zip(&self.dims)
            .position(|(g, d)| g < d)
    }

    pub fn pass(&self) -> bool {
        self.kernel_failure().is_none() && self.generation_failure().is_none()
    }

    pub fn summary(&self) -> String {
        match (self.kernel_failure(), self.generation_failure()) {
            (None, None) => "simple in the window".into(),
            (Some(n), _) => format!(
                "fail: {} vectors at depth {n} never reach the top",
                self.kernel_dims[n]
            ),
            (None, Some(n)) => format!(
                "inconclusive: the top generates {} of {} dimensions at depth {n}",
                self.generated_dims[n], self.dims[n]
            ),
        }
    }
}

/// Certificate that `M` is simple inside its window: (a) every nonzero vector
/// returns to the top under raising generators, and (b) the top vector spans
/// every weight space under the actions, discarding components that leave the
/// window.
pub fn is_simple_at_truncation(m: &WeightModule) -> Result<Simplicity> {
    require_top(m)?;
    let kernel_dims = radical_equations(m)
        .iter()
        .enumerate()
        .map(|(n, q)| m.dim(n) - q.rows())
        .collect();

    let mut spans: Vec<Span> = m.dims().iter().map(|&d| Span::new(d)).collect();
    let mut queue = VecDeque::new();
    let top = unit_vector(1, 0);
    spans[0].insert(&top);
    queue.push_back((0usize, top));
    while let Some((n, v)) = queue.pop_front() {
        for &g in m.generators() {
            let Some((t, w)) = m.apply(g, n, &v) else {
                continue;
            };
            if t < 0 {
                continue;
            }
            let t = t as usize;
            if spans[t].insert(&w) {
                queue.push_back((t, w));
            }
        }
    }
    Ok(Simplicity {
        kernel_dims,
        generated_dims: spans.iter().map(Span::rank).collect(),
        dims: m.dims().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Family, HalfInteger, LieAlgebra};
    use crate::rational::{q, qf};
    use crate::repr::{trivial_module, verma, HighestWeight};

    fn g_half() -> LieAlgebra {
        LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap()
    }

    #[test]
    fn sl2_singular_vector() {
        let s = verma(&g_half(), &HighestWeight::Sl2 { h: q(2) }, 5).unwrap();
        assert_eq!(primitive_vectors(&s, 0).unwrap().len(), 1);
        assert_eq!(primitive_vectors(&s, 3).unwrap().len(), 1);
        for n in [1, 2, 4] {
            assert!(primitive_vectors(&s, n).unwrap().is_empty());
        }
        let generic = verma(&g_half(), &HighestWeight::Sl2 { h: qf(1, 2) }, 5).unwrap();
        assert!((1..=5).all(|n| primitive_vectors(&generic, n).unwrap().is_empty()));
    }

    #[test]
    fn sl2_radical() {
        let s = verma(&g_half(), &HighestWeight::Sl2 { h: q(1) }, 5).unwrap();
        assert_eq!(radical_dims(&s).unwrap(), vec![0, 0, 1, 1, 1, 1]);
        let quo = simple_quotient(&s).unwrap();
        assert_eq!(quo.dims(), &[1, 1, 0, 0, 0, 0]);
        assert!(quo.check_consistency().pass);
    }

    #[test]
    fn schroedinger_radicals() {
        let generic = verma(&g_half(), &HighestWeight::Extended { z: q(1), h: qf(1, 3) }, 8).unwrap();
        assert!(radical_dims(&generic).unwrap().iter().all(|&d| d == 0));
        let special = verma(&g_half(), &HighestWeight::Extended { z: q(1), h: qf(-1, 2) }, 8).unwrap();
        let rad = radical_dims(&special).unwrap();
        assert_eq!(rad.iter().position(|&d| d > 0), Some(2));
        let verdict = is_simple_at_truncation(&special).unwrap();
        assert_eq!(verdict.kernel_failure(), Some(2));
        assert!(is_simple_at_truncation(&generic).unwrap().pass());
    }

    #[test]
    fn radical_matches_raising_words() {
        // independent check: v is in the radical iff every word in e, p0 of
        // the right total degree sends it to 0 in the top
        let m = verma(&g_half(), &HighestWeight::Extended { z: qf(-2, 3), h: qf(-1, 2) }, 6).unwrap();
        let rad = radical_dims(&m).unwrap();
        for (n, &r) in rad.iter().enumerate() {
            let mut rows = Matrix::zeros(0, m.dim(n));
            let mut words: Vec<(usize, Matrix)> = vec![(n, Matrix::identity(m.dim(n)))];
            while let Some((d, mat)) = words.pop() {
                if d == 0 {
                    rows = rows.vstack(&mat);
                    continue;
                }
                for g in [GeneratorId::E, GeneratorId::P(0)] {
                    let t = d as i64 + m.shift(g);
                    if t >= 0 {
                        words.push((t as usize, m.action(g, d).unwrap().mul(&mat)));
                    }
                }
            }
            assert_eq!(m.dim(n) - rows.rank(), r, "depth {n}");
        }
    }

    #[test]
    fn preconditions() {
        let t = trivial_module(&g_half(), 1, 3).unwrap();
        assert!(radical_dims(&t).is_err());
        assert!(is_simple_at_truncation(&t).unwrap().pass());
        let s = verma(&g_half(), &HighestWeight::Sl2 { h: q(1) }, 5).unwrap();
        assert!(primitive_vectors(&s, 6).is_err());
    }
}
