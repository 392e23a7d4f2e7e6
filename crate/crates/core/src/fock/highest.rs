//! Simple highest weight modules of `g(l)` for integer `l`.
//!
//! With `n = span{e, h, p_0, ..., p_2l}` the subalgebra of everything but
//! `f`, the space `F_1 = C[x]` carries the `n`-action
//!
//! ```text
//! e = d/dx    h = h0 - 2x d/dx    p_l = pl    p_0 = ... = p_{l-1} = 0
//! p_{l+k} = pl (l+k)! x^k / (l! k!)
//! ```
//!
//! and `Ind_n^g F_1 = C[f] (x) F_1` is the simple quotient of the Verma
//! module when `pl != 0`. When `pl = 0` the simple quotient is an `sl2`
//! simple module with the ideal acting by zero.
//!
//! [`f1_module`] keeps the variant `p_{l+k} = (l+k)! x^k / k!`, in which
//! `[e, p_{l+1}] = (l+1) p_l` holds only for `pl = l!`.

use num_traits::Zero;

use crate::algebra::{Family, GeneratorId, HalfInteger, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::oracle::{sl2_simple_oracle, sl2_verma_oracle};
use crate::rational::{as_nonneg_int, factorial_q, fmt_q, q, Q};
use crate::report::Report;
use crate::repr::{
    inflate_sl2, is_simple_at_truncation, simple_quotient, sl2_simple, verma, HighestWeight,
    Origin, WeightModule,
};
use crate::uea::{PbwMonomial, Uea};

use super::{check_realization, monomial, DiffOperator, Polynomial, PolySpace, Realization};

fn integer_l(l: HalfInteger) -> Result<u32> {
    if !l.is_integer() {
        return Err(Error::Precondition(format!("l = {l} must be a positive integer")));
    }
    Ok(l.twice() / 2)
}

fn f1(l: HalfInteger, pl: &Q, h: &Q, name: &str, scale: impl Fn(u32) -> Q) -> Result<Realization> {
    let li = integer_l(l)?;
    let alg = LieAlgebra::new(l, Family::Centerless)?;
    let mut r = Realization::new(name, alg, PolySpace::new(&[("x", 2)], false))
        .with_param("l", l.to_string())
        .with_param("pl", fmt_q(pl))
        .with_param("hw", fmt_q(h));
    let d = DiffOperator::deriv(1, 0);
    let x = DiffOperator::var(1, 0);
    r.set_op(GeneratorId::E, d.clone());
    r.set_op(
        GeneratorId::H,
        DiffOperator::scalar(1, h.clone()).sub(&x.compose(&d).scale(&q(2))),
    );
    for i in 0..li {
        r.set_op(GeneratorId::P(i), DiffOperator::zero(1));
    }
    r.set_op(GeneratorId::P(li), DiffOperator::scalar(1, pl.clone()));
    for k in 1..=li {
        r.set_op(GeneratorId::P(li + k), DiffOperator::var_pow(1, 0, k as i32).scale(&scale(k)));
    }
    Ok(r)
}

/// `F_1` with `p_{l+k} = (l+k)! x^k / k!`.
pub fn f1_module(l: HalfInteger, pl: &Q, h: &Q) -> Result<Realization> {
    let li = integer_l(l)?;
    f1(l, pl, h, "f1", |k| factorial_q(li + k) / factorial_q(k))
}

/// `F_1` with `p_{l+k} = pl (l+k)! x^k / (l! k!)`, an `n`-module for every `pl`.
pub fn f1_module_normalized(l: HalfInteger, pl: &Q, h: &Q) -> Result<Realization> {
    let li = integer_l(l)?;
    f1(l, pl, h, "f1-normalized", |k| {
        pl * factorial_q(li + k) / (factorial_q(li) * factorial_q(k))
    })
}

/// `C[f] (x) F_1` with basis `f^a (x) x^b` at native depth `a + b`, listed by
/// increasing `a`. A generator acts on `f^a` by straightening in `U(g)`; the
/// `n`-part of each resulting monomial then acts on `x^b`, right to left.
pub fn induce_f1(l: HalfInteger, pl: &Q, h: &Q, depth: usize) -> Result<WeightModule> {
    if pl.is_zero() {
        return Err(Error::Precondition(
            "p_l acts by zero; the simple module is an inflated sl2 module".into(),
        ));
    }
    let r = f1_module_normalized(l, pl, h)?;
    let alg = r.algebra().clone();
    let uea = Uea::new(alg.clone(), &[])?;
    let order = uea.order().to_vec();
    let fpos = uea.position(GeneratorId::F).expect("f is a generator");
    let dims: Vec<usize> = (0..=depth).map(|n| n + 1).collect();
    WeightModule::build(&alg, alg.basis(), h.clone(), 2, dims.clone(), Origin::Induced, |g, n, t| {
        let mut mat = Matrix::zeros(dims[t], dims[n]);
        for a in 0..=n {
            let b = (n - a) as i32;
            let mut exps = vec![0; order.len()];
            exps[fpos] = a as i32;
            for (mono, c) in uea.left_multiply(g, &PbwMonomial::new(exps))? {
                let mut poly: Polynomial = monomial(vec![b]);
                for (p, &e) in mono.exponents().iter().enumerate().rev() {
                    if p == fpos {
                        continue;
                    }
                    for _ in 0..e {
                        poly = r.apply(order[p], &poly)?;
                    }
                }
                let a2 = mono.exponents()[fpos] as usize;
                for (x, v) in poly {
                    let d = a2 + x[0] as usize;
                    if d != t {
                        return Err(Error::ModuleMismatch(format!(
                            "{g} f^{a} (x) x^{b} has a component at depth {d}, expected {t}"
                        )));
                    }
                    mat.add_at(a2, a, &(v * &c));
                }
            }
        }
        Ok(mat)
    })
}

fn dims_witness(got: &[u64], want: &[u64]) -> Option<String> {
    (got != want).then(|| format!("{got:?} vs {want:?}"))
}

/// Both branches of the classification of simple highest weight `g(l)`-modules
/// at integer `l`, checked to native depth `depth`.
pub fn check_highest_n(l: HalfInteger, pl: &Q, h: &Q, depth: usize) -> Result<Report> {
    let li = integer_l(l)?;
    let alg = LieAlgebra::new(l, Family::Centerless)?;
    let mut report = Report::new("check-highestN")
        .param("l", l.to_string())
        .param("pl", fmt_q(pl))
        .param("hw", fmt_q(h))
        .param("depth", depth as u64);
    let m = verma(&alg, &HighestWeight::Centerless { pl: Some(pl.clone()), h: h.clone() }, depth)?;
    let quotient = simple_quotient(&m)?;
    let quotient_char = quotient.character();

    if !pl.is_zero() {
        let r = f1_module_normalized(l, pl, h)?;
        report.absorb("f1 relations", check_realization(&r, depth as u32));
        let ind = induce_f1(l, pl, h, depth)?;
        report.absorb("induced module", ind.check_consistency());
        let ch = ind.character();
        let want: Vec<u64> = (0..=depth as u64).map(|n| n + 1).collect();
        report.check("induced dims = n + 1", ch.dims == want, dims_witness(&ch.dims, &want));
        let verdict = is_simple_at_truncation(&ind)?;
        report.check(
            "induced module is simple in the window",
            verdict.pass(),
            (!verdict.pass()).then(|| verdict.summary()),
        );
        if depth >= 1 && li >= 1 {
            let out = ind.apply(GeneratorId::P(li - 1), 1, &[q(0), q(1)]);
            let nonzero = out.is_some_and(|(_, v)| v.iter().any(|c| !c.is_zero()));
            report.ok(format!("p{} (f (x) 1) != 0", li - 1), nonzero);
        }
        report.check(
            "verma simple quotient character = induced character",
            quotient_char.dims == ch.dims,
            dims_witness(&quotient_char.dims, &ch.dims),
        );
        report.data = Some(serde_json::json!({
            "induced": ch.to_json_value(),
            "generated": verdict.generated_dims,
        }));
    } else {
        let ps: Vec<GeneratorId> = (0..=l.twice()).map(GeneratorId::P).collect();
        let killed: Vec<String> = ps
            .iter()
            .filter(|&&p| !quotient.acts_by_zero(p))
            .map(|p| p.to_string())
            .collect();
        report.check(
            "p acts by zero on the simple quotient",
            killed.is_empty(),
            (!killed.is_empty()).then(|| format!("nonzero: {}", killed.join(", "))),
        );
        let hint = as_nonneg_int(h);
        let oracle = match hint {
            Some(k) => sl2_simple_oracle(k, depth),
            None => sl2_verma_oracle(depth),
        };
        report.check(
            "simple quotient character = sl2 simple character",
            quotient_char.dims == oracle.dims,
            dims_witness(&quotient_char.dims, &oracle.dims),
        );
        let sl2 = match hint {
            Some(k) => sl2_simple(&alg, k as u32, depth)?,
            None => verma(&alg, &HighestWeight::Sl2 { h: h.clone() }, depth)?,
        };
        let inflated = inflate_sl2(&sl2, &alg)?;
        report.absorb("inflated module", inflated.check_consistency());
        let nonzero: Vec<String> = ps
            .iter()
            .filter(|&&p| !inflated.acts_by_zero(p))
            .map(|p| p.to_string())
            .collect();
        report.check(
            "p acts by zero on the inflated module",
            nonzero.is_empty(),
            (!nonzero.is_empty()).then(|| format!("nonzero: {}", nonzero.join(", "))),
        );
        let ch = inflated.character();
        report.check(
            "inflated character = sl2 simple character",
            ch.dims == oracle.dims,
            dims_witness(&ch.dims, &oracle.dims),
        );
        report.data = Some(serde_json::json!({ "simple": quotient_char.to_json_value() }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn f1_values() {
        let l = HalfInteger::half(2);
        let r = f1_module(l, &q(1), &qf(1, 2)).unwrap();
        let x3 = monomial(vec![3]);
        assert_eq!(r.apply(GeneratorId::H, &x3).unwrap(), [(vec![3], qf(1, 2) - q(6))].into());
        assert_eq!(r.apply(GeneratorId::P(2), &monomial(vec![0])).unwrap(), [(vec![1], q(2))].into());
        assert!(check_realization(&r, 8).pass);
        let l2 = HalfInteger::half(4);
        assert!(!check_realization(&f1_module(l2, &q(1), &q(0)).unwrap(), 6).pass);
        assert!(check_realization(&f1_module(l2, &q(2), &q(0)).unwrap(), 6).pass);
        assert!(check_realization(&f1_module_normalized(l2, &qf(-3, 5), &q(1)).unwrap(), 6).pass);
        assert!(f1_module(HalfInteger::half(1), &q(1), &q(0)).is_err());
    }

    #[test]
    fn induced_is_simple() {
        let l = HalfInteger::half(2);
        let ind = induce_f1(l, &q(1), &q(0), 8).unwrap();
        assert_eq!(ind.dims(), (1..=9).collect::<Vec<_>>().as_slice());
        assert!(is_simple_at_truncation(&ind).unwrap().pass());
        assert!(induce_f1(l, &q(0), &q(0), 3).is_err());
    }

    #[test]
    fn both_branches() {
        for (l, pl, h) in [(2, q(1), q(0)), (4, qf(2, 3), qf(-1, 2)), (2, q(0), q(2)), (4, q(0), qf(1, 3))] {
            let rep = check_highest_n(HalfInteger::half(l), &pl, &h, 6).unwrap();
            assert!(rep.pass, "{}", rep.to_json());
        }
    }
}
