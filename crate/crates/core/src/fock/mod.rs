//! Realizations of the algebras by differential operators on polynomial and
//! Laurent polynomial spaces, with an exact relation checker.
//!
//! Operators are kept in the normal form `sum c x^a d^b` (multiplication to
//! the left of differentiation), so composition and brackets are exact.

mod dmodule;
mod examples;
mod highest;

pub use dmodule::{analyze_d_module, check_d_module, d_module, DModuleAnalysis};
pub use examples::{
    check_laurent_witnesses, example1, laurent, laurent_witnesses, random_mu, seeded, whittaker,
    OscillatorKind,
};
pub use highest::{check_highest_n, f1_module, f1_module_normalized, induce_f1};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{GeneratorId, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{factorial_q, falling, fmt_q, Q};
use crate::report::Report;
use crate::repr::{Origin, WeightModule};

/// A (Laurent) polynomial: exponent vector to coefficient.
pub type Polynomial = BTreeMap<Vec<i32>, Q>;

fn add_into(p: &mut Polynomial, m: Vec<i32>, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(m.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&m);
    }
}

pub fn monomial(exps: Vec<i32>) -> Polynomial {
    let mut p = Polynomial::new();
    p.insert(exps, Q::one());
    p
}

pub fn render_polynomial(p: &Polynomial, space: &PolySpace) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(m, c)| format!("({}) {}", fmt_q(c), space.render_monomial(m)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Variables with their weight-lattice degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpace {
    names: Vec<String>,
    degrees: Vec<u32>,
    laurent: Vec<bool>,
}

impl PolySpace {
    pub fn new(vars: &[(&str, u32)], laurent: bool) -> Self {
        Self {
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            degrees: vars.iter().map(|(_, d)| *d).collect(),
            laurent: vec![laurent; vars.len()],
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent.iter().any(|&b| b)
    }

    /// Weight-lattice degree of a monomial (weight drop below the constant).
    pub fn degree(&self, m: &[i32]) -> i64 {
        m.iter().zip(&self.degrees).map(|(&e, &d)| e as i64 * d as i64).sum()
    }

    pub fn render_monomial(&self, m: &[i32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.names)
            .filter(|(e, _)| **e != 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    /// Test monomials: total degree at most `bound` for polynomial spaces,
    /// every exponent in `[-bound, bound]` for Laurent spaces.
    pub fn test_monomials(&self, bound: u32) -> Vec<Vec<i32>> {
        let n = self.nvars();
        let mut out = vec![vec![]];
        for v in 0..n {
            let mut next = Vec::new();
            for m in &out {
                let used: i32 = m.iter().sum();
                let range: Vec<i32> = if self.laurent[v] {
                    (-(bound as i32)..=bound as i32).collect()
                } else {
                    (0..=bound as i32 - used).collect()
                };
                for e in range {
                    let mut m2: Vec<i32> = m.clone();
                    m2.push(e);
                    next.push(m2);
                }
            }
            out = next;
        }
        out
    }
}

/// `sum c x^a d^b` with integer `a` (negative only on Laurent spaces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOperator {
    nvars: usize,
    terms: BTreeMap<(Vec<i32>, Vec<u32>), Q>,
}

impl DiffOperator {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(nvars: usize, c: Q, x: Vec<i32>, d: Vec<u32>) -> Self {
        assert_eq!(x.len(), nvars);
        assert_eq!(d.len(), nvars);
        let mut op = Self::zero(nvars);
        op.add_term(x, d, c);
        op
    }

    pub fn scalar(nvars: usize, c: Q) -> Self {
        Self::term(nvars, c, vec![0; nvars], vec![0; nvars])
    }

    /// Multiplication by `x_i^e`.
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        let mut x = vec![0; nvars];
        x[i] = e;
        Self::term(nvars, Q::one(), x, vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn deriv(nvars: usize, i: usize) -> Self {
        let mut d = vec![0; nvars];
        d[i] = 1;
        Self::term(nvars, Q::one(), vec![0; nvars], d)
    }

    fn add_term(&mut self, x: Vec<i32>, d: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = (x, d);
        let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((x, d), c) in &other.terms {
            out.add_term(x.clone(), d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.nvars);
        for ((x, d), v) in &self.terms {
            out.add_term(x.clone(), d.clone(), v * c);
        }
        out
    }

    /// `self . other`, by moving derivatives past multiplications with
    /// `d^b x^g = sum_k C(b,k) (g)_k x^{g-k} d^{b-k}`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for ((a, b), c1) in &self.terms {
            for ((g, dd), c2) in &other.terms {
                // all k <= b componentwise
                let mut ks: Vec<Vec<u32>> = vec![vec![]];
                for &bi in b {
                    ks = ks
                        .into_iter()
                        .flat_map(|k| (0..=bi).map(move |ki| {
                            let mut k2 = k.clone();
                            k2.push(ki);
                            k2
                        }))
                        .collect();
                }
                for k in ks {
                    let mut coeff = c1 * c2;
                    for i in 0..self.nvars {
                        let choose = Q::from_integer(falling(b[i] as i64, k[i])) / factorial_q(k[i]);
                        coeff *= choose * Q::from_integer(falling(g[i] as i64, k[i]));
                    }
                    if coeff.is_zero() {
                        continue;
                    }
                    let x: Vec<i32> = (0..self.nvars).map(|i| a[i] + g[i] - k[i] as i32).collect();
                    let d: Vec<u32> = (0..self.nvars).map(|i| b[i] - k[i] + dd[i]).collect();
                    out.add_term(x, d, coeff);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::new();
        for (m, c) in p {
            for ((x, d), v) in &self.terms {
                let mut coeff = c * v;
                for i in 0..self.nvars {
                    coeff *= Q::from_integer(falling(m[i] as i64, d[i]));
                }
                if coeff.is_zero() {
                    continue;
                }
                let e: Vec<i32> = (0..self.nvars).map(|i| m[i] - d[i] as i32 + x[i]).collect();
                add_into(&mut out, e, coeff);
            }
        }
        out
    }
}

/// An assignment of differential operators to generators of `alg`.
#[derive(Debug, Clone)]
pub struct Realization {
    name: String,
    alg: LieAlgebra,
    ops: BTreeMap<GeneratorId, DiffOperator>,
    space: PolySpace,
    params: BTreeMap<String, String>,
}

impl Realization {
    pub fn new(name: &str, alg: LieAlgebra, space: PolySpace) -> Self {
        Self {
            name: name.into(),
            alg,
            ops: BTreeMap::new(),
            space,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn space(&self) -> &PolySpace {
        &self.space
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn generators(&self) -> Vec<GeneratorId> {
        self.ops.keys().copied().collect()
    }

    pub fn op(&self, g: GeneratorId) -> Option<&DiffOperator> {
        self.ops.get(&g)
    }

    /// Replaces the operator of `g`.
    pub fn set_op(&mut self, g: GeneratorId, op: DiffOperator) {
        assert_eq!(op.nvars, self.space.nvars());
        self.ops.insert(g, op);
    }

    pub fn apply(&self, g: GeneratorId, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.ops.get(&g).ok_or(Error::ForeignGenerator(g))?.apply(p))
    }

    /// Operator of a Lie element, when all its generators are realized.
    pub fn op_of(&self, x: &crate::algebra::LieElement) -> Option<DiffOperator> {
        let mut acc = DiffOperator::zero(self.space.nvars());
        for (g, c) in x.terms() {
            acc = acc.add(&self.ops.get(&g)?.scale(c));
        }
        Some(acc)
    }

    /// The weight module on a polynomial space graded by the variable degrees,
    /// truncated at native depth `depth`. `h` must act on `1` by a scalar.
    pub fn to_weight_module(&self, step: u32, depth: usize) -> Result<WeightModule> {
        if self.space.is_laurent() {
            return Err(Error::Precondition("Laurent spaces have no top weight".into()));
        }
        if self.space.degrees.iter().any(|d| d % step != 0) {
            return Err(Error::Precondition(format!("variable degrees are not multiples of {step}")));
        }
        let parts: Vec<u32> = self.space.degrees.iter().map(|d| d / step).collect();
        let mut bases: Vec<Vec<Vec<i32>>> = vec![Vec::new(); depth + 1];
        for m in self.space.test_monomials(depth as u32) {
            let n: u32 = m.iter().zip(&parts).map(|(&e, &p)| e as u32 * p).sum();
            if (n as usize) <= depth {
                bases[n as usize].push(m);
            }
        }
        for b in bases.iter_mut() {
            b.sort();
        }
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let one = monomial(vec![0; self.space.nvars()]);
        let top = match self.ops.get(&GeneratorId::H) {
            Some(h) => {
                let image = h.apply(&one);
                let c = image.get(&vec![0; self.space.nvars()]).cloned().unwrap_or_else(Q::zero);
                if image.len() > usize::from(!c.is_zero()) {
                    return Err(Error::Precondition("h does not act on 1 by a scalar".into()));
                }
                c
            }
            None => Q::zero(),
        };
        let gens = self.generators();
        WeightModule::build(&self.alg, &gens, top, step, dims.clone(), Origin::Realization, |g, n, t| {
            let mut mat = Matrix::zeros(dims[t], dims[n]);
            for (col, m) in bases[n].iter().enumerate() {
                for (mono, c) in self.ops[&g].apply(&monomial(m.clone())) {
                    let row = bases[t].binary_search(&mono).map_err(|_| {
                        Error::ModuleMismatch(format!(
                            "{g} sends {} to {}, outside depth {t}",
                            self.space.render_monomial(m),
                            self.space.render_monomial(&mono)
                        ))
                    })?;
                    mat.set(row, col, c);
                }
            }
            Ok(mat)
        })
    }
}

/// `[X,Y] m = op([x,y]) m` for every realized generator pair and every test
/// monomial, with the first failing monomial as witness.
pub fn check_realization(r: &Realization, bound: u32) -> Report {
    let mut report = Report::new("fock-relations")
        .param("realization", r.name.clone())
        .param("bound", bound as u64);
    for (k, v) in &r.params {
        report.set_param(k, v.clone());
    }
    let tests = r.space.test_monomials(bound);
    let gens = r.generators();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            let bracket = r.alg.bracket_gen(x, y);
            let Some(rhs) = r.op_of(&bracket) else {
                continue;
            };
            let diff = r.ops[&x].commutator(&r.ops[&y]).sub(&rhs);
            let witness = tests.iter().find_map(|m| {
                let out = diff.apply(&monomial(m.clone()));
                (!out.is_empty()).then(|| {
                    format!(
                        "on {}: [{x},{y}] - ({bracket}) gives {}",
                        r.space.render_monomial(m),
                        render_polynomial(&out, &r.space)
                    )
                })
            });
            report.check(format!("[{x},{y}]"), witness.is_none(), witness);
        }
    }
    report
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((x, d), c)| {
                let mut s = format!("({})", fmt_q(c));
                for (i, &e) in x.iter().enumerate() {
                    if e != 0 {
                        s.push_str(&format!(" x{i}^{e}"));
                    }
                }
                for (i, &e) in d.iter().enumerate() {
                    if e != 0 {
                        s.push_str(&format!(" d{i}^{e}"));
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn weyl_relation() {
        let x = DiffOperator::var(1, 0);
        let d = DiffOperator::deriv(1, 0);
        assert_eq!(d.commutator(&x), DiffOperator::scalar(1, q(1)));
        // d^2 x^2 = x^2 d^2 + 4 x d + 2
        let d2 = d.compose(&d);
        let x2 = x.compose(&x);
        let want = x2.compose(&d2).add(&x.compose(&d).scale(&q(4))).add(&DiffOperator::scalar(1, q(2)));
        assert_eq!(d2.compose(&x2), want);
    }

    #[test]
    fn laurent_application() {
        let shifted = DiffOperator::deriv(1, 0).add(&DiffOperator::var_pow(1, 0, -1).scale(&q(2)));
        // (d + 2/x) x^-2 = -2 x^-3 + 2 x^-3 = 0
        assert!(shifted.apply(&monomial(vec![-2])).is_empty());
        let out = shifted.apply(&monomial(vec![3]));
        assert_eq!(out.get(&vec![2]), Some(&q(5)));
    }

    #[test]
    fn composition_is_associative_on_samples() {
        let ops = [
            DiffOperator::var(2, 0),
            DiffOperator::deriv(2, 1),
            DiffOperator::var_pow(2, 1, -1).add(&DiffOperator::deriv(2, 0)),
        ];
        for a in &ops {
            for b in &ops {
                for c in &ops {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn test_monomial_counts() {
        let poly = PolySpace::new(&[("x1", 1), ("x3", 3)], false);
        assert_eq!(poly.test_monomials(2).len(), 6);
        let laurent = PolySpace::new(&[("x", 1)], true);
        assert_eq!(laurent.test_monomials(3).len(), 7);
    }
}
