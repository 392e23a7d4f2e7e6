//! Oscillator realizations of `g~(l)` on `C[x_1, x_3, ..., x_{2l}]` and its
//! Laurent version. The three families differ only in the shifted derivative
//! `D_k` standing in for `d/dx_{2(l-k)}`:
//!
//! ```text
//! plain       D_k = d_k
//! Whittaker   D_k = d_k + mu_k
//! Laurent     D_k = d_k + mu_k / x_{2(l-k)}
//! ```
//!
//! and then, with `c = (-1)^{k+l+1/2} z k! (2l-k)!`,
//!
//! ```text
//! p_k -> x_{2(k-l)}  (k > l)        p_k -> c D_k  (k < l)
//! e   -> -(z/2) ((l+1/2)! D_{l-1/2})^2 + sum_{k=1}^{l-1/2} (2l-k+1) x_{2(l-k)} D_{k-1}
//! f   -> (1/(2z)) (x_1/(l-1/2)!)^2 + sum_{k=0}^{l-1/2} k x_{2(l-k+1)} D_k
//! h   -> -sum_k 2(l-k) x_{2(l-k)} D_k - (l+1/2)^2/2
//! ```
//!
//! The last line is `-d - (l+1/2)^2/2`, `-d - sum 2(l-k) x mu_k - ...` and
//! `-d - sum 2(l-k) mu_k - ...` for the three families respectively.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Family, GeneratorId, HalfInteger, LieAlgebra};
use crate::error::{Error, Result};
use crate::rational::{factorial_q, fmt_q, q, qf, sign, Q};
use crate::report::Report;

use super::{monomial, DiffOperator, PolySpace, Realization};

#[derive(Debug, Clone, PartialEq)]
pub enum OscillatorKind {
    Plain,
    Whittaker(Vec<Q>),
    Laurent(Vec<Q>),
}

/// Position of `x_odd` among `x_1, x_3, ...`.
fn var(odd: u32) -> usize {
    ((odd - 1) / 2) as usize
}

fn oscillator(l: HalfInteger, z: &Q, kind: OscillatorKind) -> Result<Realization> {
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let alg = LieAlgebra::new(l, Family::Extended)?;
    let two_l = l.twice();
    let half = two_l.div_ceil(2); // l + 1/2, also the number of variables
    let nv = half as usize;
    let (mu, laurent, label) = match &kind {
        OscillatorKind::Plain => (vec![Q::zero(); nv], false, "example1"),
        OscillatorKind::Whittaker(mu) => (mu.clone(), false, "whittaker"),
        OscillatorKind::Laurent(mu) => (mu.clone(), true, "laurent"),
    };
    if mu.len() != nv {
        return Err(Error::Precondition(format!(
            "mu needs l + 1/2 = {nv} entries, got {}",
            mu.len()
        )));
    }
    let names: Vec<String> = (0..nv).map(|j| format!("x{}", 2 * j + 1)).collect();
    let vars: Vec<(&str, u32)> = names.iter().enumerate().map(|(j, n)| (n.as_str(), 2 * j as u32 + 1)).collect();
    let space = PolySpace::new(&vars, laurent);

    // D_k for k = 0..l-1/2 acts on x_{2(l-k)} = x_{2l-2k}
    let shifted = |k: u32| -> DiffOperator {
        let i = var(two_l - 2 * k);
        let d = DiffOperator::deriv(nv, i);
        match &kind {
            OscillatorKind::Plain => d,
            OscillatorKind::Whittaker(_) => d.add(&DiffOperator::scalar(nv, mu[k as usize].clone())),
            OscillatorKind::Laurent(_) => d.add(&DiffOperator::var_pow(nv, i, -1).scale(&mu[k as usize])),
        }
    };
    let x_of = |odd: u32| DiffOperator::var(nv, var(odd));

    let mut r = Realization::new(label, alg, space)
        .with_param("l", l.to_string())
        .with_param("z", fmt_q(z));
    if !matches!(kind, OscillatorKind::Plain) {
        r = r.with_param("mu", mu.iter().map(fmt_q).collect::<Vec<_>>().join(","));
    }

    for k in 0..=two_l {
        let op = if 2 * k > two_l {
            x_of(2 * k - two_l)
        } else {
            let c = sign(k as i64 + half as i64) * z * factorial_q(k) * factorial_q(two_l - k);
            shifted(k).scale(&c)
        };
        r.set_op(GeneratorId::P(k), op);
    }

    let top = half - 1; // l - 1/2
    let lead = shifted(top).scale(&factorial_q(half));
    let mut e = lead.compose(&lead).scale(&(-z / q(2)));
    for k in 1..=top {
        let c = q((two_l - k + 1) as i64);
        e = e.add(&x_of(two_l - 2 * k).compose(&shifted(k - 1)).scale(&c));
    }
    r.set_op(GeneratorId::E, e);

    let x1 = x_of(1).scale(&(q(1) / factorial_q(top)));
    let mut f = x1.compose(&x1).scale(&(q(1) / (q(2) * z)));
    for k in 1..=top {
        f = f.add(&x_of(two_l - 2 * k + 2).compose(&shifted(k)).scale(&q(k as i64)));
    }
    r.set_op(GeneratorId::F, f);

    let constant = {
        let a = l.value() + qf(1, 2);
        &a * &a / q(2)
    };
    let mut h = DiffOperator::scalar(nv, -constant);
    for k in 0..=top {
        let c = q(2) * (l.value() - q(k as i64));
        h = h.sub(&x_of(two_l - 2 * k).compose(&shifted(k)).scale(&c));
    }
    r.set_op(GeneratorId::H, h);
    r.set_op(GeneratorId::Z, DiffOperator::scalar(nv, z.clone()));
    Ok(r)
}

/// The classical oscillator representation on the Fock space.
pub fn example1(l: HalfInteger, z: &Q) -> Result<Realization> {
    oscillator(l, z, OscillatorKind::Plain)
}

/// Whittaker version: derivatives shifted by the scalars `mu_k`.
pub fn whittaker(l: HalfInteger, z: &Q, mu: &[Q]) -> Result<Realization> {
    oscillator(l, z, OscillatorKind::Whittaker(mu.to_vec()))
}

/// Laurent version: derivatives shifted by `mu_k / x`.
pub fn laurent(l: HalfInteger, z: &Q, mu: &[Q]) -> Result<Realization> {
    oscillator(l, z, OscillatorKind::Laurent(mu.to_vec()))
}

/// Exponents `n` in `[-window, window]` at which the shifted derivative `D_k`
/// kills `x_{2(l-k)}^n`, as `(k, n)`. Such an `n` bounds an invariant subspace
/// (all monomials whose exponent there is at least `n`).
pub fn laurent_witnesses(l: HalfInteger, z: &Q, mu: &[Q], window: i32) -> Result<Vec<(u32, i32)>> {
    let r = laurent(l, z, mu)?;
    let nv = r.space().nvars();
    let two_l = l.twice();
    let mut out = Vec::new();
    for k in 0..nv as u32 {
        let i = var(two_l - 2 * k);
        for n in -window..=window {
            let mut m = vec![0; nv];
            m[i] = n;
            if r.apply(GeneratorId::P(k), &monomial(m))?.is_empty() {
                out.push((k, n));
            }
        }
    }
    Ok(out)
}

/// For each witness `(k, n)`, checks that every realized generator maps the
/// test monomials with exponent `>= n` in `x_{2(l-k)}` into the same subspace.
pub fn check_laurent_witnesses(l: HalfInteger, z: &Q, mu: &[Q], window: i32) -> Result<Report> {
    let r = laurent(l, z, mu)?;
    let witnesses = laurent_witnesses(l, z, mu, window)?;
    let mut report = Report::new("laurent-invariant-subspaces")
        .param("l", l.to_string())
        .param("window", window as i64)
        .param("mu", mu.iter().map(fmt_q).collect::<Vec<_>>().join(","));
    let tests = r.space().test_monomials(window as u32);
    for &(k, n) in &witnesses {
        let i = var(l.twice() - 2 * k);
        let name = format!("x{}^{n} bounds an invariant subspace", 2 * i + 1);
        let mut witness = None;
        'outer: for m in tests.iter().filter(|m| m[i] >= n) {
            for g in r.generators() {
                let out = r.apply(g, &monomial(m.clone()))?;
                if let Some(bad) = out.keys().find(|e| e[i] < n) {
                    witness = Some(format!(
                        "{g} sends {} to {}",
                        r.space().render_monomial(m),
                        r.space().render_monomial(bad)
                    ));
                    break 'outer;
                }
            }
        }
        report.check(name, witness.is_none(), witness);
    }
    report.set_param("witnesses", witnesses.len() as u64);
    Ok(report)
}

/// Random rationals with small numerators and denominators, never integers.
pub fn random_mu(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n)
        .map(|_| {
            let den = rng.gen_range(2..=7i64);
            let mut num = rng.gen_range(-20..=20i64);
            if num % den == 0 {
                num += 1;
            }
            qf(num, den)
        })
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::check_realization;
    use crate::oracle::simple_character_oracle;
    use crate::repr::is_simple_at_truncation;

    #[test]
    fn example1_values() {
        let l = HalfInteger::half(3);
        let r = example1(l, &q(1)).unwrap();
        let one = monomial(vec![0, 0]);
        assert!(r.apply(GeneratorId::E, &one).unwrap().is_empty());
        assert_eq!(r.apply(GeneratorId::H, &one).unwrap(), {
            let mut p = super::super::Polynomial::new();
            p.insert(vec![0, 0], q(-2));
            p
        });
        assert_eq!(r.op(GeneratorId::P(3)), Some(&DiffOperator::var(2, 1)));
        let rep = check_realization(&r, 8);
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn example1_one_half_relations_and_character() {
        let l = HalfInteger::half(1);
        let r = example1(l, &qf(-2, 3)).unwrap();
        assert!(check_realization(&r, 8).pass);
        let m = r.to_weight_module(1, 8).unwrap();
        assert_eq!(m.character().dims, simple_character_oracle(l, 0, 8).unwrap().dims);
        assert_eq!(*m.top_weight(), qf(-1, 2));
        assert!(m.check_consistency().pass);
        assert!(is_simple_at_truncation(&m).unwrap().pass());
    }

    #[test]
    fn whittaker_reduces_and_checks() {
        let l = HalfInteger::half(3);
        let plain = example1(l, &q(2)).unwrap();
        let w0 = whittaker(l, &q(2), &[q(0), q(0)]).unwrap();
        for g in plain.generators() {
            assert_eq!(plain.op(g), w0.op(g));
        }
        let mu = [qf(1, 3), qf(-5, 2)];
        let w = whittaker(l, &q(2), &mu).unwrap();
        assert!(check_realization(&w, 6).pass);
        // p_0 1 = (-1)^{0+2} z 0! 3! mu_0
        let p0 = w.apply(GeneratorId::P(0), &monomial(vec![0, 0])).unwrap();
        assert_eq!(p0.get(&vec![0, 0]), Some(&(q(2) * q(6) * qf(1, 3))));
    }

    #[test]
    fn laurent_checks_and_witnesses() {
        let l = HalfInteger::half(1);
        let r = laurent(l, &q(1), &[qf(1, 3)]).unwrap();
        assert!(check_realization(&r, 8).pass);
        assert!(laurent_witnesses(l, &q(1), &[qf(1, 3)], 8).unwrap().is_empty());
        assert_eq!(laurent_witnesses(l, &q(1), &[q(2)], 8).unwrap(), vec![(0, -2)]);
        let rep = check_laurent_witnesses(l, &q(1), &[q(2)], 6).unwrap();
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn displayed_h_terms() {
        // -d - sum 2(l-k) x mu_k - c  and  -d - sum 2(l-k) mu_k - c, written out
        let l = HalfInteger::half(3);
        let mu = [qf(2, 7), qf(-1, 3)];
        let c = q(2);
        let x1 = DiffOperator::var(2, 0);
        let x3 = DiffOperator::var(2, 1);
        let d = x3
            .compose(&DiffOperator::deriv(2, 1))
            .scale(&q(3))
            .add(&x1.compose(&DiffOperator::deriv(2, 0)));
        let base = d.scale(&q(-1)).sub(&DiffOperator::scalar(2, c));
        let whit = base.sub(&x3.scale(&(q(3) * &mu[0]))).sub(&x1.scale(&mu[1]));
        assert_eq!(whittaker(l, &q(1), &mu).unwrap().op(GeneratorId::H), Some(&whit));
        let laur = base.sub(&DiffOperator::scalar(2, q(3) * &mu[0] + &mu[1]));
        assert_eq!(laurent(l, &q(1), &mu).unwrap().op(GeneratorId::H), Some(&laur));
    }

    #[test]
    fn wrong_f_scale_fails() {
        let l = HalfInteger::half(1);
        let mut r = example1(l, &q(3)).unwrap();
        let x = DiffOperator::var(1, 0);
        r.set_op(GeneratorId::F, x.compose(&x).scale(&qf(1, 3)));
        let rep = check_realization(&r, 8);
        assert!(!rep.result("[e,f]").unwrap().pass);
        assert!(rep.result("[e,f]").unwrap().witness.is_some());
    }
}
