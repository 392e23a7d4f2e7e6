//! The one-parameter family of automorphisms `theta_x` of `U(g(l))` localized
//! at `f`:
//!
//! ```text
//! theta_x(f) = f     theta_x(h) = h - 2x     theta_x(e) = e + x(h - 1 - x) f^-1
//! theta_x(p_j) = sum_{k=0}^{2l-j} (-1)^k C(x,k) (2l-j)!/(2l-j-k)! f^-k p_{j+k}
//! ```
//!
//! The parameter is handled by evaluation at rational sample points. Every
//! relation coefficient is a polynomial in `x` of degree at most `4l + 2`, so
//! agreement at `4l + 4` distinct points certifies the identity.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Family, GeneratorId, HalfInteger, LieElement};
use crate::error::{Error, Result};
use crate::rational::{binomial_q, factorial_q, fmt_q, q, qf, sign, Q};
use crate::report::Report;

use super::{Uea, UeaElement};

/// Images of the basis generators under an algebra endomorphism.
pub type ThetaMap = BTreeMap<GeneratorId, UeaElement>;

pub fn min_theta_samples(l: HalfInteger) -> usize {
    2 * l.twice() as usize + 4
}

/// `0, 1, -1, 2, -2, ...` interleaved with halves, enough points for `l`.
pub fn default_theta_samples(l: HalfInteger) -> Vec<Q> {
    let mut out = vec![q(0)];
    let mut n = 1;
    while out.len() < min_theta_samples(l) {
        out.push(q(n));
        out.push(qf(-(2 * n - 1), 2));
        n += 1;
    }
    out.truncate(min_theta_samples(l));
    out
}

fn require_context(uea: &Arc<Uea>) -> Result<()> {
    if uea.algebra().family() != Family::Centerless || !uea.is_invertible(GeneratorId::F) {
        return Err(Error::Precondition(
            "theta_x lives in the centerless enveloping algebra localized at f".into(),
        ));
    }
    Ok(())
}

pub fn theta_image(uea: &Arc<Uea>, g: GeneratorId, x: &Q) -> Result<UeaElement> {
    require_context(uea)?;
    if !uea.algebra().contains(g) {
        return Err(Error::ForeignGenerator(g));
    }
    let f_inv = uea.inverse(GeneratorId::F)?;
    match g {
        GeneratorId::F => uea.gen(g),
        GeneratorId::H => Ok(&uea.gen(g)? - &uea.scalar(q(2) * x)),
        GeneratorId::E => {
            let inner = &uea.gen(GeneratorId::H)? - &uea.scalar(Q::one() + x);
            Ok(&uea.gen(g)? + &inner.mul(&f_inv)?.scale(x))
        }
        GeneratorId::P(j) => {
            let top = uea.algebra().l().twice() - j;
            let mut acc = uea.zero();
            for k in 0..=top {
                let c = sign(k as i64) * binomial_q(x, k) * factorial_q(top)
                    / factorial_q(top - k);
                let term = uea.monomial(&[(GeneratorId::F, -(k as i32))])?
                    .mul(&uea.gen(GeneratorId::P(j + k))?)?;
                acc = &acc + &term.scale(&c);
            }
            Ok(acc)
        }
        GeneratorId::Z => Err(Error::ForeignGenerator(g)),
    }
}

pub fn theta_images(uea: &Arc<Uea>, x: &Q) -> Result<ThetaMap> {
    uea.algebra()
        .basis()
        .iter()
        .map(|&g| Ok((g, theta_image(uea, g, x)?)))
        .collect()
}

/// Extends generator images multiplicatively. Negative powers are only allowed
/// on generators that the map fixes (so their inverses are fixed too).
pub fn apply_homomorphism(uea: &Arc<Uea>, images: &ThetaMap, u: &UeaElement) -> Result<UeaElement> {
    let mut acc = uea.zero();
    for (m, c) in u.terms() {
        let mut prod = uea.scalar(c.clone());
        for (&e, &g) in m.exponents().iter().zip(uea.order()) {
            if e == 0 {
                continue;
            }
            let img = images.get(&g).ok_or(Error::ForeignGenerator(g))?;
            let factor = if e > 0 {
                img.pow(e as u32)?
            } else {
                if *img != uea.gen(g)? {
                    return Err(Error::Precondition(format!(
                        "cannot invert the image of {g}"
                    )));
                }
                uea.monomial(&[(g, e)])?
            };
            prod = prod.mul(&factor)?;
        }
        acc = &acc + &prod;
    }
    Ok(acc)
}

fn image_of(images: &ThetaMap, uea: &Arc<Uea>, x: &LieElement) -> Result<UeaElement> {
    let mut acc = uea.zero();
    for (g, c) in x.terms() {
        acc = &acc + &images[&g].scale(c);
    }
    Ok(acc)
}

/// Checks bracket preservation at every sample point, `theta_0 = id`, and
/// `theta_x . theta_y = theta_{x+y}` on the given pairs, for an arbitrary
/// family of generator images.
pub fn check_theta_with<F>(
    uea: &Arc<Uea>,
    xs: &[Q],
    pairs: &[(Q, Q)],
    images_at: F,
) -> Result<Report>
where
    F: Fn(&Q) -> Result<ThetaMap>,
{
    require_context(uea)?;
    let alg = uea.algebra();
    let l = alg.l();
    let distinct: BTreeSet<&Q> = xs.iter().collect();
    if distinct.len() < min_theta_samples(l) {
        return Err(Error::Precondition(format!(
            "need at least {} distinct sample points for l = {l}, got {}",
            min_theta_samples(l),
            distinct.len()
        )));
    }
    let mut report = Report::new("verify-theta")
        .param("l", l.to_string())
        .param(
            "samples",
            xs.iter().map(fmt_q).collect::<Vec<_>>().join(","),
        );

    let basis = alg.basis();
    let mut failures: BTreeMap<(GeneratorId, GeneratorId), String> = BTreeMap::new();
    for x in &distinct {
        let images = images_at(x)?;
        for (i, &a) in basis.iter().enumerate() {
            for &b in &basis[i + 1..] {
                if failures.contains_key(&(a, b)) {
                    continue;
                }
                let lhs = images[&a].commutator(&images[&b])?;
                let rhs = image_of(&images, uea, &alg.bracket_gen(a, b))?;
                if lhs != rhs {
                    failures.insert((a, b), format!("x = {}: lhs - rhs = {}", fmt_q(x), &lhs - &rhs));
                }
            }
        }
    }
    for (i, &a) in basis.iter().enumerate() {
        for &b in &basis[i + 1..] {
            let w = failures.remove(&(a, b));
            report.check(format!("bracket [{a},{b}]"), w.is_none(), w);
        }
    }

    let id = images_at(&q(0))?;
    let mut id_witness = None;
    for &g in basis {
        if id[&g] != uea.gen(g)? {
            id_witness = Some(format!("theta_0({g}) = {}", id[&g]));
            break;
        }
    }
    report.check("theta_0 = id", id_witness.is_none(), id_witness);

    let mut comp_witness = None;
    'pairs: for (x, y) in pairs {
        let tx = images_at(x)?;
        let ty = images_at(y)?;
        let txy = images_at(&(x + y))?;
        for &g in basis {
            let lhs = apply_homomorphism(uea, &tx, &ty[&g])?;
            if lhs != txy[&g] {
                comp_witness = Some(format!(
                    "x = {}, y = {}, generator {g}: {} vs {}",
                    fmt_q(x),
                    fmt_q(y),
                    lhs,
                    txy[&g]
                ));
                break 'pairs;
            }
        }
    }
    report.check(
        format!("composition on {} pairs", pairs.len()),
        comp_witness.is_none(),
        comp_witness,
    );
    Ok(report)
}

/// Runs [`check_theta_with`] on the displayed `theta_x`, with five
/// composition pairs drawn from `xs` by a seeded generator.
pub fn check_theta(l: HalfInteger, xs: &[Q], seed: u64) -> Result<Report> {
    let uea = Uea::f_localized(l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Q, Q)> = (0..5)
        .map(|_| {
            let x = xs.choose(&mut rng).cloned().unwrap_or_else(|| q(0));
            let y = xs.choose(&mut rng).cloned().unwrap_or_else(|| q(0));
            (x, y)
        })
        .collect();
    check_theta_with(&uea, xs, &pairs, |x| theta_images(&uea, x))
}
