//! The oscillator homomorphism from `U(g~(l))` into the Heisenberg part of the
//! enveloping algebra localized at `z`. It is the identity on `p_k` and `z`
//! and sends
//!
//! ```text
//! e -> E = z^-1 sum_{k=1}^{2l} (-1)^{k+l+1/2} (l-k) / ((k-1)!(2l-k)!) p_{k-1} p_{2l-k}
//! f -> F = z^-1 sum_{k=1}^{2l} (-1)^{k+l-1/2} (l-k) / ((k-1)!(2l-k)!) p_k p_{2l-k+1}
//! h -> H = 2 z^-1 sum_{k=0}^{l-1/2} (-1)^{k+l-1/2} (l-k) / (k!(2l-k)!) p_{2l-k} p_k - (l+1/2)^2/2
//! ```

use std::sync::Arc;

use crate::algebra::{Family, GeneratorId, LieElement};
use crate::error::{Error, Result};
use crate::rational::{factorial_q, q, qf, sign};
use crate::report::Report;

use super::{Uea, UeaElement};

/// Images of `e`, `f`, `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiImages {
    pub e: UeaElement,
    pub f: UeaElement,
    pub h: UeaElement,
}

impl PhiImages {
    pub fn get(&self, g: GeneratorId) -> Option<&UeaElement> {
        match g {
            GeneratorId::E => Some(&self.e),
            GeneratorId::F => Some(&self.f),
            GeneratorId::H => Some(&self.h),
            _ => None,
        }
    }
}

fn require_context(uea: &Arc<Uea>) -> Result<()> {
    if uea.algebra().family() != Family::Extended || !uea.is_invertible(GeneratorId::Z) {
        return Err(Error::Precondition(
            "the oscillator homomorphism needs the extended algebra localized at z".into(),
        ));
    }
    Ok(())
}

fn p_pair(uea: &Arc<Uea>, a: u32, b: u32) -> Result<UeaElement> {
    uea.gen(GeneratorId::P(a))?.mul(&uea.gen(GeneratorId::P(b))?)
}

/// Image of a single generator under the homomorphism.
pub fn phi_image(uea: &Arc<Uea>, g: GeneratorId) -> Result<UeaElement> {
    require_context(uea)?;
    if !uea.algebra().contains(g) {
        return Err(Error::ForeignGenerator(g));
    }
    let two_l = uea.algebra().l().twice() as i64;
    let l = uea.algebra().l().value();
    // exponent offsets l + 1/2 and l - 1/2
    let up = (two_l + 1) / 2;
    let down = (two_l - 1) / 2;
    let z_inv = uea.inverse(GeneratorId::Z)?;
    let mut sum = uea.zero();
    match g {
        GeneratorId::E => {
            for k in 1..=two_l {
                let c = sign(k + up) * (&l - q(k))
                    / (factorial_q((k - 1) as u32) * factorial_q((two_l - k) as u32));
                sum = &sum + &p_pair(uea, (k - 1) as u32, (two_l - k) as u32)?.scale(&c);
            }
            z_inv.mul(&sum)
        }
        GeneratorId::F => {
            for k in 1..=two_l {
                let c = sign(k + down) * (&l - q(k))
                    / (factorial_q((k - 1) as u32) * factorial_q((two_l - k) as u32));
                sum = &sum + &p_pair(uea, k as u32, (two_l - k + 1) as u32)?.scale(&c);
            }
            z_inv.mul(&sum)
        }
        GeneratorId::H => {
            for k in 0..=down {
                let c = q(2) * sign(k + down) * (&l - q(k))
                    / (factorial_q(k as u32) * factorial_q((two_l - k) as u32));
                sum = &sum + &p_pair(uea, (two_l - k) as u32, k as u32)?.scale(&c);
            }
            let shift = (&l + qf(1, 2)) * (&l + qf(1, 2)) / q(2);
            Ok(&z_inv.mul(&sum)? - &uea.scalar(shift))
        }
        GeneratorId::Z | GeneratorId::P(_) => uea.gen(g),
    }
}

pub fn phi_images(uea: &Arc<Uea>) -> Result<PhiImages> {
    Ok(PhiImages {
        e: phi_image(uea, GeneratorId::E)?,
        f: phi_image(uea, GeneratorId::F)?,
        h: phi_image(uea, GeneratorId::H)?,
    })
}

/// Verifies every defining relation involving `e`, `f`, `h` on the images.
pub fn check_phi_images(uea: &Arc<Uea>, images: &PhiImages) -> Result<Report> {
    require_context(uea)?;
    let alg = uea.algebra();
    let l = alg.l();
    let mut report = Report::new("verify-phi").param("l", l.to_string());

    let image = |g: GeneratorId| -> Result<UeaElement> {
        match images.get(g) {
            Some(x) => Ok(x.clone()),
            None => uea.gen(g),
        }
    };
    let image_of = |x: &LieElement| -> Result<UeaElement> {
        let mut acc = uea.zero();
        for (g, c) in x.terms() {
            acc = &acc + &image(g)?.scale(c);
        }
        Ok(acc)
    };
    let mut relation = |name: String, a: GeneratorId, b: GeneratorId| -> Result<()> {
        let lhs = image(a)?.commutator(&image(b)?)?;
        let rhs = image_of(&alg.bracket_gen(a, b))?;
        let diff = &lhs - &rhs;
        let witness = (!diff.is_zero()).then(|| format!("lhs - rhs = {diff}"));
        report.check(name, diff.is_zero(), witness);
        Ok(())
    };

    for i in 0..=l.twice() {
        relation(format!("[H,p{i}]=2(l-{i})p{i}"), GeneratorId::H, GeneratorId::P(i))?;
        let e_rhs = if i == 0 { "0".to_string() } else { format!("{i}p{}", i - 1) };
        relation(format!("[E,p{i}]={e_rhs}"), GeneratorId::E, GeneratorId::P(i))?;
        let f_rhs = if i == l.twice() { "0".to_string() } else { format!("(2l-{i})p{}", i + 1) };
        relation(format!("[F,p{i}]={f_rhs}"), GeneratorId::F, GeneratorId::P(i))?;
    }
    relation("[E,F]=H".into(), GeneratorId::E, GeneratorId::F)?;
    relation("[H,E]=2E".into(), GeneratorId::H, GeneratorId::E)?;
    relation("[H,F]=-2F".into(), GeneratorId::H, GeneratorId::F)?;
    Ok(report)
}

/// All homomorphism relations for the images defined above.
pub fn check_phi(l: crate::algebra::HalfInteger) -> Result<Report> {
    let uea = Uea::z_localized(l)?;
    let images = phi_images(&uea)?;
    let mut report = check_phi_images(&uea, &images)?;
    for k in 0..=l.twice() {
        let g = GeneratorId::P(k);
        report.ok(format!("identity on p{k}"), phi_image(&uea, g)? == uea.gen(g)?);
    }
    report.ok(
        "identity on z",
        phi_image(&uea, GeneratorId::Z)? == uea.gen(GeneratorId::Z)?,
    );
    Ok(report)
}
