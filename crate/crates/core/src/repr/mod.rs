//! Weight modules truncated to a finite window below the top weight.
//!
//! A module stores, for every native depth `n` (weight `top - n * step`), the
//! dimension of that weight space and, for every acting generator, the exact
//! matrix from depth `n` to depth `n - deg/step`. Maps landing below the top are
//! stored as `0 x dim` matrices; maps landing past the window are `None`.

mod analysis;
mod ops;
mod theorems;
mod verma;

pub use analysis::{
    is_simple_at_truncation, primitive_vectors, radical_dims, simple_quotient, Simplicity,
};
pub use ops::{fock_module, inflate_sl2, lift_margin, oscillator_lift, tensor};
pub use theorems::{check_theorem2, check_theorem3, sl2_shift};
pub use verma::{sl2_simple, verma, HighestWeight};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{GeneratorId, LieAlgebra};
use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::{fmt_q, Q};
use crate::report::Report;

/// How a module was produced. Some analyses only apply to Verma modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Verma,
    Finite,
    Tensor,
    Lift,
    Inflation,
    Quotient,
    Realization,
    Induced,
}

pub type Actions = BTreeMap<GeneratorId, Vec<Option<Matrix>>>;

#[derive(Debug, Clone)]
pub struct WeightModule {
    alg: LieAlgebra,
    generators: Vec<GeneratorId>,
    top_weight: Q,
    step: u32,
    dims: Vec<usize>,
    actions: Actions,
    origin: Origin,
}

fn shift_of(alg: &LieAlgebra, g: GeneratorId, step: u32) -> Result<i64> {
    let d = alg.degree(g);
    if d % step as i64 != 0 {
        return Err(Error::ModuleMismatch(format!(
            "generator {g} has degree {d}, not a multiple of the step {step}"
        )));
    }
    Ok(-d / step as i64)
}

impl WeightModule {
    /// Builds a module by asking `matrix(g, n)` for every in-window map.
    pub fn build<F>(
        alg: &LieAlgebra,
        generators: &[GeneratorId],
        top_weight: Q,
        step: u32,
        dims: Vec<usize>,
        origin: Origin,
        mut matrix: F,
    ) -> Result<Self>
    where
        F: FnMut(GeneratorId, usize, usize) -> Result<Matrix>,
    {
        let depth = dims.len() as i64 - 1;
        let mut actions = Actions::new();
        for &g in generators {
            if !alg.contains(g) {
                return Err(Error::ForeignGenerator(g));
            }
            let s = shift_of(alg, g, step)?;
            let mut per_depth = Vec::with_capacity(dims.len());
            for (n, &dn) in dims.iter().enumerate() {
                let t = n as i64 + s;
                per_depth.push(if t < 0 {
                    Some(Matrix::zeros(0, dn))
                } else if t > depth {
                    None
                } else {
                    let m = matrix(g, n, t as usize)?;
                    if m.shape() != (dims[t as usize], dn) {
                        return Err(Error::ModuleMismatch(format!(
                            "{g} at depth {n} has shape {:?}, expected {:?}",
                            m.shape(),
                            (dims[t as usize], dn)
                        )));
                    }
                    Some(m)
                });
            }
            actions.insert(g, per_depth);
        }
        Ok(Self {
            alg: alg.clone(),
            generators: generators.to_vec(),
            top_weight,
            step,
            dims,
            actions,
            origin,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn acts(&self, g: GeneratorId) -> bool {
        self.actions.contains_key(&g)
    }

    pub fn top_weight(&self) -> &Q {
        &self.top_weight
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn depth(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn weight(&self, n: usize) -> Q {
        &self.top_weight - Q::from_integer((n as i64 * self.step as i64).into())
    }

    /// Depth change caused by `g`.
    pub fn shift(&self, g: GeneratorId) -> i64 {
        -self.alg.degree(g) / self.step as i64
    }

    pub fn action(&self, g: GeneratorId, n: usize) -> Option<&Matrix> {
        self.actions.get(&g)?.get(n)?.as_ref()
    }

    /// `g v` for `v` at depth `n`: `Some((t, w))` with `t` the target depth,
    /// `Some((t < 0, []))` below the top, `None` past the window.
    pub fn apply(&self, g: GeneratorId, n: usize, v: &[Q]) -> Option<(i64, Vector)> {
        let m = self.action(g, n)?;
        Some((n as i64 + self.shift(g), m.apply(v)))
    }

    pub fn character(&self) -> CharacterTable {
        CharacterTable::new(
            self.top_weight.clone(),
            self.step,
            self.dims.iter().map(|&d| d as u64).collect(),
        )
    }

    /// True when every stored matrix of `g` vanishes.
    pub fn acts_by_zero(&self, g: GeneratorId) -> bool {
        self.actions
            .get(&g)
            .map(|v| v.iter().flatten().all(Matrix::is_zero))
            .unwrap_or(true)
    }

    /// Restricts to depths `0..=depth`.
    pub fn truncate(&self, depth: usize) -> Result<Self> {
        if depth > self.depth() {
            return Err(Error::ModuleMismatch(format!(
                "cannot truncate depth {} to {depth}",
                self.depth()
            )));
        }
        Self::build(
            &self.alg,
            &self.generators,
            self.top_weight.clone(),
            self.step,
            self.dims[..=depth].to_vec(),
            self.origin,
            |g, n, _| Ok(self.action(g, n).expect("in window").clone()),
        )
    }

    /// `a b` from depth `n`: `None` if any factor leaves the window above.
    pub fn compose(&self, a: GeneratorId, b: GeneratorId, n: usize) -> Option<Matrix> {
        let t = n as i64 + self.shift(b) + self.shift(a);
        let rows = if t < 0 { 0 } else { *self.dims.get(t as usize)? };
        let mb = self.action(b, n)?;
        let mid = n as i64 + self.shift(b);
        if mid < 0 {
            return Some(Matrix::zeros(rows, self.dims[n]));
        }
        let ma = self.action(a, mid as usize)?;
        Some(ma.mul(mb))
    }

    /// `[x,y]`-consistency on every pair of acting generators and every depth
    /// where both orders stay in the window, plus the diagonal `h`.
    pub fn check_consistency(&self) -> Report {
        let mut report = Report::new("module-consistency");
        for (i, &x) in self.generators.iter().enumerate() {
            for &y in &self.generators[i + 1..] {
                let b = self.alg.bracket_gen(x, y);
                let name = format!("bracket [{x},{y}]");
                if b.terms().any(|(g, _)| !self.acts(g)) {
                    continue;
                }
                let mut witness = None;
                for n in 0..=self.depth() {
                    let (Some(xy), Some(yx)) = (self.compose(x, y, n), self.compose(y, x, n)) else {
                        continue;
                    };
                    let mut rhs = Matrix::zeros(xy.rows(), xy.cols());
                    let mut defined = true;
                    for (g, c) in b.terms() {
                        match self.action(g, n) {
                            Some(m) if m.shape() == rhs.shape() => rhs = rhs.add(&m.scale(c)),
                            _ => defined = false,
                        }
                    }
                    if !defined {
                        continue;
                    }
                    if xy.sub(&yx) != rhs {
                        witness = Some(format!("depth {n}: [{x},{y}] differs from the action of {b}"));
                        break;
                    }
                }
                report.check(name, witness.is_none(), witness);
            }
        }
        if self.acts(GeneratorId::H) {
            let mut witness = None;
            for n in 0..=self.depth() {
                let want = Matrix::scalar(self.dims[n], &self.weight(n));
                if self.action(GeneratorId::H, n) != Some(&want) {
                    witness = Some(format!("depth {n}: h is not {}", fmt_q(&self.weight(n))));
                    break;
                }
            }
            report.check("h diagonal", witness.is_none(), witness);
        }
        report
    }
}

/// One-dimensional module on which every generator acts by zero.
pub fn trivial_module(alg: &LieAlgebra, step: u32, depth: usize) -> Result<WeightModule> {
    let mut dims = vec![0; depth + 1];
    dims[0] = 1;
    WeightModule::build(alg, alg.basis(), Q::zero(), step, dims, Origin::Finite, |_, n, t| {
        Ok(Matrix::zeros(if t == 0 { 1 } else { 0 }, if n == 0 { 1 } else { 0 }))
    })
}
