//! Self-checks of the straightening engine on random elements.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Family, GeneratorId, HalfInteger};
use crate::error::Result;
use crate::rational::qf;
use crate::report::Report;

use super::{Uea, UeaElement};

/// A combination of up to three words with at most `max_len` factors each.
/// Invertible generators appear with exponent `-1` half of the time.
pub fn random_element(uea: &Arc<Uea>, rng: &mut ChaCha8Rng, max_len: usize) -> Result<UeaElement> {
    let gens = uea.order().to_vec();
    let mut acc = uea.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(1..=max_len);
        let factors: Vec<(GeneratorId, i32)> = (0..len)
            .map(|_| {
                let g = *gens.choose(rng).expect("nonempty basis");
                let e = if uea.is_invertible(g) && rng.gen_bool(0.5) { -1 } else { 1 };
                (g, e)
            })
            .collect();
        let mut num = rng.gen_range(-3..=3i64);
        if num == 0 {
            num = 1;
        }
        let c = qf(num, rng.gen_range(1..=3));
        acc = &acc + &uea.word(&factors)?.scale(&c);
    }
    Ok(acc)
}

/// Idempotence of normal forms, associativity on `triples` seeded random
/// triples of word length at most 4, and the inverse identities of the
/// localization. `U(g~(l))` is localized at `z`, `U(g(l))` at `f`.
pub fn check_engine(l: HalfInteger, family: Family, seed: u64, triples: usize) -> Result<Report> {
    let uea = match family {
        Family::Extended => Uea::z_localized(l)?,
        Family::Centerless => Uea::f_localized(l)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("engine-integrity")
        .param("l", l.to_string())
        .param("family", family.to_string())
        .param("seed", seed)
        .param("triples", triples as u64);

    let mut assoc_witness = None;
    let mut idem_witness = None;
    for i in 0..triples {
        let a = random_element(&uea, &mut rng, 4)?;
        let b = random_element(&uea, &mut rng, 4)?;
        let c = random_element(&uea, &mut rng, 4)?;
        let ab = a.mul(&b)?;
        let left = ab.mul(&c)?;
        let right = a.mul(&b.mul(&c)?)?;
        if assoc_witness.is_none() && left != right {
            assoc_witness = Some(format!("triple {i}: a = {a}, b = {b}, c = {c}"));
        }
        if idem_witness.is_none() {
            for x in [&a, &ab] {
                if x.renormalize()? != *x {
                    idem_witness = Some(format!("triple {i}: {x}"));
                    break;
                }
            }
        }
    }
    report.check("associativity", assoc_witness.is_none(), assoc_witness);
    report.check("normal form idempotent", idem_witness.is_none(), idem_witness);

    let one = uea.one();
    let inv = match family {
        Family::Extended => GeneratorId::Z,
        Family::Centerless => GeneratorId::F,
    };
    let g = uea.gen(inv)?;
    let gi = uea.inverse(inv)?;
    for (name, value) in [
        (format!("{inv} {inv}^-1 = 1"), g.mul(&gi)?),
        (format!("{inv}^-1 {inv} = 1"), gi.mul(&g)?),
    ] {
        let pass = value == one;
        report.check(name, pass, (!pass).then(|| value.to_string()));
    }
    if family == Family::Centerless {
        let e = uea.gen(GeneratorId::E)?;
        let back = e.mul(&gi)?.mul(&g)?;
        let pass = back == e;
        report.check("(e f^-1) f = e", pass, (!pass).then(|| back.to_string()));
    }
    Ok(report)
}
