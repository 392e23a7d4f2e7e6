//! Checks of the tensor factorization of highest weight `g~(l)` modules and
//! of simplicity of `M_H(z) (x) V(m)`, at a finite depth.

use num_traits::Zero;

use crate::algebra::{Family, HalfInteger, LieAlgebra};
use crate::error::{Error, Result};
use crate::oracle::{simple_character_oracle, verma_character_oracle};
use crate::rational::{as_nonneg_int, fmt_q, q, qf, Q};
use crate::report::Report;

use super::{
    fock_module, inflate_sl2, is_simple_at_truncation, lift_margin, oscillator_lift,
    radical_dims, sl2_simple, tensor, verma, HighestWeight, WeightModule,
};

/// `(l + 1/2)^2 / 2`, the amount by which the `sl2` factor's weight exceeds `h`.
pub fn sl2_shift(l: HalfInteger) -> Q {
    let a = l.value() + qf(1, 2);
    &a * &a / q(2)
}

fn require_half_odd(l: HalfInteger) -> Result<()> {
    if l.is_integer() {
        return Err(Error::ExtendedIntegerL(l.to_string()));
    }
    Ok(())
}

/// The oscillator lift of the Fock module, truncated at `depth`.
fn lifted_fock(l: HalfInteger, z: &Q, depth: usize) -> Result<WeightModule> {
    oscillator_lift(&fock_module(l, z, depth + lift_margin(l))?, z)?.truncate(depth)
}

fn dims_witness(got: &[u64], want: &[u64]) -> Option<String> {
    (got != want).then(|| format!("{got:?} vs {want:?}"))
}

/// Verma character against the tensor product and the oracle, the position of
/// the first radical vector, and the simple quotient's character.
pub fn check_theorem2(l: HalfInteger, z: &Q, h: &Q, depth: usize) -> Result<Report> {
    require_half_odd(l)?;
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let alg = LieAlgebra::new(l, Family::Extended)?;
    let lambda = h + sl2_shift(l);
    let mut report = Report::new("check-theorem2")
        .param("l", l.to_string())
        .param("z", fmt_q(z))
        .param("hw", fmt_q(h))
        .param("depth", depth as u64)
        .param("sl2_weight", fmt_q(&lambda));

    let m = verma(&alg, &HighestWeight::Extended { z: z.clone(), h: h.clone() }, depth)?;
    let fock = lifted_fock(l, z, depth)?;
    let sl2 = verma(&alg, &HighestWeight::Sl2 { h: lambda.clone() }, depth / 2 + 1)?;
    let factor = inflate_sl2(&sl2, &alg)?.truncate(depth)?;
    let t = tensor(&fock, &factor, depth)?;

    let verma_char = m.character();
    let oracle = verma_character_oracle(Family::Extended, l, depth);
    report.check(
        "verma character = oracle",
        verma_char.dims == oracle.dims,
        dims_witness(&verma_char.dims, &oracle.dims),
    );
    let tensor_char = t.character();
    report.check(
        "tensor character = verma character",
        tensor_char.dims == verma_char.dims,
        dims_witness(&tensor_char.dims, &verma_char.dims),
    );
    report.check(
        "tensor top weight = hw",
        t.top_weight() == h,
        (t.top_weight() != h).then(|| fmt_q(t.top_weight())),
    );
    report.absorb("tensor module", t.check_consistency());

    let rad = radical_dims(&m)?;
    let first = rad.iter().position(|&d| d > 0);
    let m_int = as_nonneg_int(&lambda);
    let expected = m_int
        .map(|k| 2 * (k as usize + 1))
        .filter(|&drop| drop <= depth);
    let name = match expected {
        Some(drop) => format!("radical first nonzero at weight drop {drop}"),
        None => format!("radical vanishes to depth {depth}"),
    };
    report.check(
        name,
        first == expected,
        (first != expected).then(|| format!("radical dims {rad:?}")),
    );

    let simple: Vec<u64> = m.dims().iter().zip(&rad).map(|(d, r)| (d - r) as u64).collect();
    let simple_oracle = match m_int {
        Some(k) => simple_character_oracle(l, k as i64, depth)?,
        None => oracle.clone(),
    };
    report.check(
        "simple quotient character = oracle",
        simple == simple_oracle.dims,
        dims_witness(&simple, &simple_oracle.dims),
    );
    report.data = Some(serde_json::json!({
        "verma": verma_char.to_json_value(),
        "radical": rad,
        "simple": { "top_weight": fmt_q(h), "step": 1, "dims": simple },
    }));
    Ok(report)
}

/// `M_H(z)^g (x) V(m)^g` passes the simplicity certificate and has the oracle
/// character.
pub fn check_theorem3(l: HalfInteger, z: &Q, m: u32, depth: usize) -> Result<Report> {
    require_half_odd(l)?;
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let alg = LieAlgebra::new(l, Family::Extended)?;
    let mut report = Report::new("check-theorem3")
        .param("l", l.to_string())
        .param("z", fmt_q(z))
        .param("m", m as u64)
        .param("depth", depth as u64);
    let fock = lifted_fock(l, z, depth)?;
    let vm = inflate_sl2(&sl2_simple(&alg, m, depth / 2 + 1)?, &alg)?.truncate(depth)?;
    let t = tensor(&fock, &vm, depth)?;
    report.absorb("tensor module", t.check_consistency());

    let oracle = simple_character_oracle(l, m as i64, depth)?;
    let ch = t.character();
    report.check(
        "character = oracle",
        ch.dims == oracle.dims,
        dims_witness(&ch.dims, &oracle.dims),
    );
    let verdict = is_simple_at_truncation(&t)?;
    report.check(
        "no vector misses the top",
        verdict.kernel_failure().is_none(),
        verdict.kernel_failure().map(|_| verdict.summary()),
    );
    report.check(
        "top vector generates the window",
        verdict.generation_failure().is_none(),
        verdict.generation_failure().map(|_| verdict.summary()),
    );
    report.data = Some(serde_json::json!({
        "character": ch.to_json_value(),
        "generated": verdict.generated_dims,
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem2_small() {
        let l = HalfInteger::half(1);
        for h in [qf(1, 3), qf(-1, 2), qf(1, 2)] {
            let rep = check_theorem2(l, &q(1), &h, 8).unwrap();
            assert!(rep.pass, "{}", rep.to_json());
        }
        let rep = check_theorem2(l, &q(1), &qf(-1, 2), 8).unwrap();
        assert!(rep.result("radical first nonzero at weight drop 2").is_some());
    }

    #[test]
    fn theorem3_small() {
        let rep = check_theorem3(HalfInteger::half(1), &q(1), 2, 6).unwrap();
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn preconditions() {
        assert!(check_theorem2(HalfInteger::half(2), &q(1), &q(0), 4).is_err());
        assert_eq!(
            check_theorem3(HalfInteger::half(1), &q(0), 0, 4).unwrap_err(),
            Error::ZeroCentralCharge
        );
    }
}
