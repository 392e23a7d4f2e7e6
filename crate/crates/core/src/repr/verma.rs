//! Highest weight modules induced from a one-dimensional module over the
//! nonnegative part, computed by straightening in the enveloping algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Family, GeneratorId, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::uea::{PbwMonomial, Uea};

use super::{Origin, WeightModule};

/// Highest weight data. `pl` is the scalar of `p_l`, present exactly for the
/// centerless algebras with integer `l`.
#[derive(Debug, Clone, PartialEq)]
pub enum HighestWeight {
    Extended { z: Q, h: Q },
    Centerless { pl: Option<Q>, h: Q },
    /// The Fock module of the Heisenberg subalgebra `span{p_k, z}`.
    Heisenberg { z: Q },
    /// The `sl2 = span{e, f, h}` Verma module.
    Sl2 { h: Q },
}

struct Induction {
    generators: Vec<GeneratorId>,
    scalars: BTreeMap<GeneratorId, Q>,
    top_weight: Q,
    step: u32,
}

fn induction(alg: &LieAlgebra, hw: &HighestWeight) -> Result<Induction> {
    let l = alg.l();
    let mismatch = |what: &str| {
        Err(Error::Precondition(format!(
            "{what} highest weight data does not fit the {} algebra with l = {l}",
            alg.family()
        )))
    };
    Ok(match hw {
        HighestWeight::Extended { z, h } => {
            if alg.family() != Family::Extended {
                return mismatch("extended");
            }
            Induction {
                generators: alg.basis().to_vec(),
                scalars: [(GeneratorId::H, h.clone()), (GeneratorId::Z, z.clone())].into(),
                top_weight: h.clone(),
                step: alg.step(),
            }
        }
        HighestWeight::Centerless { pl, h } => {
            if alg.family() != Family::Centerless || pl.is_some() != l.is_integer() {
                return mismatch("centerless");
            }
            let mut scalars: BTreeMap<_, _> = [(GeneratorId::H, h.clone())].into();
            if let Some(p) = pl {
                scalars.insert(GeneratorId::P(l.twice() / 2), p.clone());
            }
            Induction {
                generators: alg.basis().to_vec(),
                scalars,
                top_weight: h.clone(),
                step: alg.step(),
            }
        }
        HighestWeight::Heisenberg { z } => {
            if alg.family() != Family::Extended {
                return mismatch("Heisenberg");
            }
            let mut generators = vec![GeneratorId::Z];
            generators.extend((0..=l.twice()).map(GeneratorId::P));
            Induction {
                generators,
                scalars: [(GeneratorId::Z, z.clone())].into(),
                top_weight: Q::zero(),
                step: 1,
            }
        }
        HighestWeight::Sl2 { h } => Induction {
            generators: vec![GeneratorId::E, GeneratorId::F, GeneratorId::H],
            scalars: [(GeneratorId::H, h.clone())].into(),
            top_weight: h.clone(),
            step: 2,
        },
    })
}

/// Exponent vectors over `parts` (one entry per negative generator) with
/// weighted sum `n`.
fn compositions(parts: &[u64], n: u64) -> Vec<Vec<u64>> {
    if parts.is_empty() {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let (p, rest) = (parts[0], &parts[1..]);
    let mut out = Vec::new();
    for a in 0..=n / p {
        for mut tail in compositions(rest, n - a * p) {
            tail.insert(0, a);
            out.push(tail);
        }
    }
    out
}

/// Verma module truncated at native depth `depth`.
pub fn verma(alg: &LieAlgebra, hw: &HighestWeight, depth: usize) -> Result<WeightModule> {
    let ind = induction(alg, hw)?;
    let uea = Uea::new(alg.clone(), &[])?;
    let order = uea.order().to_vec();
    let step = ind.step as i64;
    // negative generators with their depth increments, in PBW order
    let negatives: Vec<(usize, u64)> = order
        .iter()
        .enumerate()
        .filter(|(_, g)| ind.generators.contains(g) && alg.degree(**g) < 0)
        .map(|(p, g)| (p, (-alg.degree(*g) / step) as u64))
        .collect();
    let parts: Vec<u64> = negatives.iter().map(|(_, s)| *s).collect();

    let mut bases: Vec<Vec<PbwMonomial>> = Vec::with_capacity(depth + 1);
    let mut index: Vec<HashMap<PbwMonomial, usize>> = Vec::with_capacity(depth + 1);
    for n in 0..=depth as u64 {
        let monos: Vec<PbwMonomial> = compositions(&parts, n)
            .into_iter()
            .map(|exps| {
                let mut v = vec![0i32; order.len()];
                for ((p, _), e) in negatives.iter().zip(exps) {
                    v[*p] = e as i32;
                }
                PbwMonomial::new(v)
            })
            .collect();
        index.push(monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect());
        bases.push(monos);
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let is_negative: Vec<bool> = (0..order.len()).map(|p| negatives.iter().any(|(q, _)| *q == p)).collect();

    let act = |g: GeneratorId, n: usize, t: usize| -> Result<Matrix> {
        let mut m = Matrix::zeros(dims[t], dims[n]);
        for (col, mono) in bases[n].iter().enumerate() {
            for (out, c) in uea.left_multiply(g, mono)? {
                if let Some((neg, scalar)) = evaluate_tail(&uea, &order, &is_negative, &ind, &out)? {
                    let row = *index[t].get(&neg).ok_or_else(|| {
                        Error::ModuleMismatch(format!("monomial {} left depth {t}", uea.render_monomial(&neg)))
                    })?;
                    m.add_at(row, col, &(c * scalar));
                }
            }
        }
        Ok(m)
    };
    WeightModule::build(alg, &ind.generators, ind.top_weight.clone(), ind.step, dims.clone(), Origin::Verma, act)
}

/// Splits `N * P` into its negative part `N` and the scalar by which `P` acts
/// on the highest weight vector (`None` if a raising factor kills it).
fn evaluate_tail(
    uea: &Arc<Uea>,
    order: &[GeneratorId],
    is_negative: &[bool],
    ind: &Induction,
    m: &PbwMonomial,
) -> Result<Option<(PbwMonomial, Q)>> {
    let mut neg = vec![0i32; order.len()];
    let mut scalar = Q::one();
    for (p, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let g = order[p];
        if is_negative[p] {
            neg[p] = e;
        } else if uea.algebra().degree(g) > 0 {
            return Ok(None);
        } else {
            let s = ind.scalars.get(&g).ok_or_else(|| {
                Error::Precondition(format!("no highest weight scalar for {g}"))
            })?;
            scalar *= num_traits::pow(s.clone(), e as usize);
        }
    }
    Ok(Some((PbwMonomial::new(neg), scalar)))
}

/// The `(m+1)`-dimensional simple `sl2` module with `v_j = f^j v_0`:
/// `f v_j = v_{j+1}`, `h v_j = (m-2j) v_j`, `e v_j = j(m-j+1) v_{j-1}`.
pub fn sl2_simple(alg: &LieAlgebra, m: u32, depth: usize) -> Result<WeightModule> {
    let dims: Vec<usize> = (0..=depth).map(|n| usize::from(n <= m as usize)).collect();
    let gens = [GeneratorId::E, GeneratorId::F, GeneratorId::H];
    WeightModule::build(alg, &gens, q(m as i64), 2, dims.clone(), Origin::Finite, |g, n, t| {
        let mut mat = Matrix::zeros(dims[t], dims[n]);
        if dims[t] == 1 && dims[n] == 1 {
            let j = n as i64;
            let c = match g {
                GeneratorId::F => q(1),
                GeneratorId::H => q(m as i64 - 2 * j),
                _ => q(j * (m as i64 - j + 1)),
            };
            mat.set(0, 0, c);
        }
        Ok(mat)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HalfInteger;
    use crate::rational::qf;

    #[test]
    fn dims_match_small_cases() {
        let g = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        let v = verma(&g, &HighestWeight::Extended { z: q(1), h: qf(1, 3) }, 6).unwrap();
        assert_eq!(v.dims(), &[1, 1, 2, 2, 3, 3, 4]);
        assert!(v.check_consistency().pass, "{}", v.check_consistency().to_json());

        let s = verma(&g, &HighestWeight::Sl2 { h: qf(-2, 5) }, 4).unwrap();
        assert_eq!(s.dims(), &[1; 5]);
        assert!(s.check_consistency().pass);

        let c = LieAlgebra::new(HalfInteger::half(2), Family::Centerless).unwrap();
        let v = verma(&c, &HighestWeight::Centerless { pl: Some(q(1)), h: q(0) }, 2).unwrap();
        assert_eq!(v.character().lattice_dims(), vec![1, 0, 2, 0, 3]);
        assert!(v.check_consistency().pass);
    }

    #[test]
    fn sl2_action_on_f_powers() {
        let g = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        let s = verma(&g, &HighestWeight::Sl2 { h: q(1) }, 3).unwrap();
        // e f^2 w = 2(h - 1) f w = 0 at h = 1
        assert!(s.action(GeneratorId::E, 2).unwrap().is_zero());
        assert_eq!(*s.action(GeneratorId::E, 1).unwrap().get(0, 0), q(1));
    }

    #[test]
    fn mismatched_data() {
        let g = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        assert!(verma(&g, &HighestWeight::Centerless { pl: None, h: q(0) }, 2).is_err());
        let c = LieAlgebra::new(HalfInteger::half(2), Family::Centerless).unwrap();
        assert!(verma(&c, &HighestWeight::Centerless { pl: None, h: q(0) }, 2).is_err());
        assert!(verma(&c, &HighestWeight::Heisenberg { z: q(1) }, 2).is_err());
    }

    #[test]
    fn finite_sl2() {
        let g = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        let v = sl2_simple(&g, 2, 5).unwrap();
        assert_eq!(v.dims(), &[1, 1, 1, 0, 0, 0]);
        assert!(v.check_consistency().pass);
    }
}
