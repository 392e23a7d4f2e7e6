//! PBW normal forms in the universal enveloping algebra, optionally localized
//! at the central element `z` and/or at `f`.
//!
//! Monomials are exponent vectors over the fixed order
//! `z, f, p_{2l}, ..., p_1, p_0, h, e`: lowering generators sit on the left and
//! raising generators on the right, so applying a normal monomial to a highest
//! weight vector only has to inspect its rightmost factors.
//!
//! Everything reduces to left multiplication of a normal monomial by one
//! generator `g`. If `g` is not ahead of the first factor `x^a` we just bump an
//! exponent. Otherwise
//!
//! ```text
//! g x^a R  = x (g x^{a-1} R) + [g,x] x^{a-1} R             (a > 0)
//! g f^-1 R = sum_{k>=0} f^{-(k+1)} ((ad f)^k g) R          (x = f, a < 0)
//! ```
//!
//! The second sum is finite because `ad f` is nilpotent. `z` is central and is
//! never reordered.

mod integrity;
mod phi;
mod theta;

pub use integrity::{check_engine, random_element};
pub use phi::{check_phi, check_phi_images, phi_image, phi_images, PhiImages};
pub use theta::{
    apply_homomorphism, check_theta, check_theta_with, default_theta_samples, min_theta_samples,
    theta_image, theta_images, ThetaMap,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{Family, GeneratorId, HalfInteger, LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

pub const DEFAULT_DEGREE_CAP: u64 = 40;

/// Exponent vector in PBW order. Negative entries only on invertible generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial(Vec<i32>);

impl PbwMonomial {
    /// Exponents in PBW order; no invertibility check.
    pub fn new(exponents: Vec<i32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    /// Sum of absolute exponents.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs() as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

type Terms = BTreeMap<PbwMonomial, Q>;

fn add_into(acc: &mut Terms, m: PbwMonomial, c: Q) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                acc.remove(&m);
            }
        }
        None => {
            acc.insert(m, c);
        }
    }
}

/// An enveloping algebra context: the Lie algebra, the PBW order, which of
/// `z`, `f` are invertible, and a memo table for straightening.
pub struct Uea {
    alg: LieAlgebra,
    order: Vec<GeneratorId>,
    pos: BTreeMap<GeneratorId, usize>,
    degrees: Vec<i64>,
    /// `brackets[i][j]` = `[x_i, x_j]` in position coordinates.
    brackets: Vec<Vec<Vec<(usize, Q)>>>,
    /// `ad_f[i][k]` = `(ad f)^k x_i`, truncated after the last nonzero power.
    ad_f: Vec<Vec<Vec<(usize, Q)>>>,
    z_pos: Option<usize>,
    f_pos: usize,
    invert_z: bool,
    invert_f: bool,
    degree_cap: u64,
    cache: Mutex<HashMap<(usize, PbwMonomial), Terms>>,
}

impl fmt::Debug for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Uea")
            .field("l", &self.alg.l())
            .field("family", &self.alg.family())
            .field("invert_z", &self.invert_z)
            .field("invert_f", &self.invert_f)
            .finish()
    }
}

/// The canonical PBW order `z, f, p_{2l}, ..., p_0, h, e`.
pub fn pbw_order(alg: &LieAlgebra) -> Vec<GeneratorId> {
    let mut order = Vec::with_capacity(alg.dim());
    if alg.family() == Family::Extended {
        order.push(GeneratorId::Z);
    }
    order.push(GeneratorId::F);
    order.extend((0..=alg.l().twice()).rev().map(GeneratorId::P));
    order.push(GeneratorId::H);
    order.push(GeneratorId::E);
    order
}

impl Uea {
    /// `invertible` may contain `z` (extended family only) and `f`.
    pub fn new(alg: LieAlgebra, invertible: &[GeneratorId]) -> Result<Arc<Self>> {
        Self::with_degree_cap(alg, invertible, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(
        alg: LieAlgebra,
        invertible: &[GeneratorId],
        degree_cap: u64,
    ) -> Result<Arc<Self>> {
        for &g in invertible {
            if !alg.contains(g) {
                return Err(Error::ForeignGenerator(g));
            }
            if !matches!(g, GeneratorId::Z | GeneratorId::F) {
                return Err(Error::NotInvertible(g));
            }
        }
        let order = pbw_order(&alg);
        let pos: BTreeMap<GeneratorId, usize> =
            order.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let to_pos = |x: &LieElement| -> Vec<(usize, Q)> {
            x.terms().map(|(g, c)| (pos[&g], c.clone())).collect()
        };
        let brackets = order
            .iter()
            .map(|&a| order.iter().map(|&b| to_pos(&alg.bracket_gen(a, b))).collect())
            .collect();

        let nil = alg.ad_nilpotency_index(GeneratorId::F)? as usize;
        let ad_f = order
            .iter()
            .map(|&g| {
                let mut powers = Vec::new();
                let mut cur = LieElement::gen(g);
                for _ in 0..nil {
                    if cur.is_zero() {
                        break;
                    }
                    powers.push(to_pos(&cur));
                    cur = alg.ad(GeneratorId::F, &cur);
                }
                assert!(cur.is_zero(), "ad f must be nilpotent");
                powers
            })
            .collect();

        let degrees = order.iter().map(|&g| alg.degree(g)).collect();
        Ok(Arc::new(Self {
            z_pos: pos.get(&GeneratorId::Z).copied(),
            f_pos: pos[&GeneratorId::F],
            invert_z: invertible.contains(&GeneratorId::Z),
            invert_f: invertible.contains(&GeneratorId::F),
            alg,
            order,
            pos,
            degrees,
            brackets,
            ad_f,
            degree_cap,
            cache: Mutex::new(HashMap::new()),
        }))
    }

    /// `U(g~(l))` localized at `z`, the target of the oscillator homomorphism.
    pub fn z_localized(l: HalfInteger) -> Result<Arc<Self>> {
        Self::new(LieAlgebra::new(l, Family::Extended)?, &[GeneratorId::Z])
    }

    /// `U(g(l))` localized at `f`, where the automorphisms `theta_x` live.
    pub fn f_localized(l: HalfInteger) -> Result<Arc<Self>> {
        Self::new(LieAlgebra::new(l, Family::Centerless)?, &[GeneratorId::F])
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn order(&self) -> &[GeneratorId] {
        &self.order
    }

    pub fn position(&self, g: GeneratorId) -> Option<usize> {
        self.pos.get(&g).copied()
    }

    pub fn is_invertible(&self, g: GeneratorId) -> bool {
        match g {
            GeneratorId::Z => self.invert_z,
            GeneratorId::F => self.invert_f,
            _ => false,
        }
    }

    pub fn degree_cap(&self) -> u64 {
        self.degree_cap
    }

    fn same(&self, other: &Uea) -> bool {
        std::ptr::eq(self, other)
            || (self.alg == other.alg
                && self.invert_z == other.invert_z
                && self.invert_f == other.invert_f)
    }

    fn unit_monomial(&self) -> PbwMonomial {
        PbwMonomial(vec![0; self.order.len()])
    }

    /// h-degree of a monomial.
    pub fn monomial_degree(&self, m: &PbwMonomial) -> i64 {
        m.0.iter().zip(&self.degrees).map(|(&e, &d)| e as i64 * d).sum()
    }

    /// `x_g * m` for a normal monomial `m`.
    fn left_mul_gen(&self, g: usize, m: &PbwMonomial) -> Terms {
        let bump = |m: &PbwMonomial| {
            let mut out = m.clone();
            out.0[g] += 1;
            let mut t = Terms::new();
            add_into(&mut t, out, Q::one());
            t
        };
        if Some(g) == self.z_pos {
            return bump(m);
        }
        let first = (0..m.0.len()).find(|&i| Some(i) != self.z_pos && m.0[i] != 0);
        let i = match first {
            Some(i) if i < g => i,
            _ => return bump(m),
        };

        let key = (g, m.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }

        let a = m.0[i];
        let mut out = Terms::new();
        let mut rest = m.clone();
        if a > 0 {
            rest.0[i] -= 1;
            // x (g rest)
            for (mono, c) in self.left_mul_gen(g, &rest) {
                for (mono2, c2) in self.left_mul_gen(i, &mono) {
                    add_into(&mut out, mono2, &c * c2);
                }
            }
            // [g, x] rest
            for (y, c) in &self.brackets[g][i] {
                for (mono, c2) in self.left_mul_gen(*y, &rest) {
                    add_into(&mut out, mono, c * c2);
                }
            }
        } else {
            debug_assert_eq!(i, self.f_pos);
            rest.0[i] += 1;
            for (k, power) in self.ad_f[g].iter().enumerate() {
                for (y, c) in power {
                    for (mut mono, c2) in self.left_mul_gen(*y, &rest) {
                        mono.0[self.f_pos] -= k as i32 + 1;
                        add_into(&mut out, mono, c * c2);
                    }
                }
            }
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    fn left_mul_gen_terms(&self, g: usize, v: &Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in v {
            for (m2, c2) in self.left_mul_gen(g, m) {
                add_into(&mut out, m2, c * c2);
            }
        }
        out
    }

    /// Multiplies by `x_p^e` on the left where `x_p` is central or leads the
    /// order (`z` and `f`), which never needs reordering.
    fn shift_exponent(&self, p: usize, e: i32, v: &Terms) -> Terms {
        v.iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.0[p] += e;
                (m, c.clone())
            })
            .collect()
    }

    fn left_mul_monomial(&self, m: &PbwMonomial, v: &Terms) -> Terms {
        let mut cur = v.clone();
        for p in (0..m.0.len()).rev() {
            let e = m.0[p];
            if e == 0 {
                continue;
            }
            if Some(p) == self.z_pos || (p == self.f_pos && e < 0) {
                cur = self.shift_exponent(p, e, &cur);
            } else {
                for _ in 0..e {
                    cur = self.left_mul_gen_terms(p, &cur);
                }
            }
        }
        cur
    }

    fn check_invertibility(&self, m: &PbwMonomial) -> Result<()> {
        for (p, &e) in m.0.iter().enumerate() {
            if e < 0 && !self.is_invertible(self.order[p]) {
                return Err(Error::NotInvertible(self.order[p]));
            }
        }
        Ok(())
    }

    fn element(self: &Arc<Self>, terms: Terms) -> UeaElement {
        UeaElement {
            ctx: Arc::clone(self),
            terms,
        }
    }

    pub fn zero(self: &Arc<Self>) -> UeaElement {
        self.element(Terms::new())
    }

    pub fn scalar(self: &Arc<Self>, c: Q) -> UeaElement {
        let mut t = Terms::new();
        add_into(&mut t, self.unit_monomial(), c);
        self.element(t)
    }

    pub fn one(self: &Arc<Self>) -> UeaElement {
        self.scalar(Q::one())
    }

    pub fn gen(self: &Arc<Self>, g: GeneratorId) -> Result<UeaElement> {
        self.monomial(&[(g, 1)])
    }

    /// `z^{-1}` or `f^{-1}`.
    pub fn inverse(self: &Arc<Self>, g: GeneratorId) -> Result<UeaElement> {
        self.monomial(&[(g, -1)])
    }

    /// The normal monomial with the given exponents (factor order is irrelevant).
    pub fn monomial(self: &Arc<Self>, factors: &[(GeneratorId, i32)]) -> Result<UeaElement> {
        let mut m = self.unit_monomial();
        for &(g, e) in factors {
            let p = self.position(g).ok_or(Error::ForeignGenerator(g))?;
            m.0[p] += e;
        }
        self.check_invertibility(&m)?;
        let mut t = Terms::new();
        add_into(&mut t, m, Q::one());
        Ok(self.element(t))
    }

    /// Normal form of the ordered product `g_1^{e_1} g_2^{e_2} ...`.
    pub fn word(self: &Arc<Self>, factors: &[(GeneratorId, i32)]) -> Result<UeaElement> {
        let mut acc = self.one();
        for &(g, e) in factors {
            acc = acc.mul(&self.monomial(&[(g, e)])?)?;
        }
        Ok(acc)
    }

    pub fn from_lie(self: &Arc<Self>, x: &LieElement) -> Result<UeaElement> {
        let mut acc = self.zero();
        for (g, c) in x.terms() {
            acc = &acc + &self.gen(g)?.scale(c);
        }
        Ok(acc)
    }

    /// Normal monomial from a raw exponent vector in PBW order.
    pub fn monomial_from_exponents(self: &Arc<Self>, exps: Vec<i32>) -> Result<UeaElement> {
        if exps.len() != self.order.len() {
            return Err(Error::Precondition(format!(
                "exponent vector of length {} for an algebra of dimension {}",
                exps.len(),
                self.order.len()
            )));
        }
        let m = PbwMonomial(exps);
        self.check_invertibility(&m)?;
        let mut t = Terms::new();
        add_into(&mut t, m, Q::one());
        Ok(self.element(t))
    }

    /// `x_g * m` for a single generator and normal monomial, used by module
    /// constructions that act generator by generator.
    pub fn left_multiply(
        self: &Arc<Self>,
        g: GeneratorId,
        m: &PbwMonomial,
    ) -> Result<Vec<(PbwMonomial, Q)>> {
        let p = self.position(g).ok_or(Error::ForeignGenerator(g))?;
        Ok(self.left_mul_gen(p, m).into_iter().collect())
    }

    pub fn render_monomial(&self, m: &PbwMonomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .zip(&self.order)
            .filter(|(e, _)| **e != 0)
            .map(|(&e, g)| if e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// A linear combination of normal PBW monomials, tied to its context.
#[derive(Clone)]
pub struct UeaElement {
    ctx: Arc<Uea>,
    terms: Terms,
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UeaElement({self})")
    }
}

impl PartialEq for UeaElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for UeaElement {}

impl UeaElement {
    pub fn context(&self) -> &Arc<Uea> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest total degree of a monomial.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(PbwMonomial::total_degree).max().unwrap_or(0)
    }

    /// Common h-degree of all monomials, or `None` if inhomogeneous.
    pub fn h_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| self.ctx.monomial_degree(m));
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Q) -> UeaElement {
        if c.is_zero() {
            return self.ctx.zero();
        }
        UeaElement {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &UeaElement) -> Result<UeaElement> {
        if !self.ctx.same(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let degree = self.degree() + other.degree();
        if degree > self.ctx.degree_cap {
            return Err(Error::DegreeCap {
                degree,
                cap: self.ctx.degree_cap,
            });
        }
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            for (m2, c2) in self.ctx.left_mul_monomial(m, &other.terms) {
                add_into(&mut out, m2, c * c2);
            }
        }
        Ok(self.ctx.element(out))
    }

    pub fn commutator(&self, other: &UeaElement) -> Result<UeaElement> {
        Ok(&self.mul(other)? - &other.mul(self)?)
    }

    pub fn pow(&self, n: u32) -> Result<UeaElement> {
        let mut acc = self.ctx.one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Re-multiplies every monomial out from its factors. Normal forms are
    /// fixed points of this map.
    pub fn renormalize(&self) -> Result<UeaElement> {
        let mut acc = self.ctx.zero();
        for (m, c) in &self.terms {
            let factors: Vec<(GeneratorId, i32)> = m
                .0
                .iter()
                .zip(&self.ctx.order)
                .filter(|(e, _)| **e != 0)
                .map(|(&e, &g)| (g, e))
                .collect();
            acc = &acc + &self.ctx.word(&factors)?.scale(c);
        }
        Ok(acc)
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant(&self) -> Q {
        self.coeff(&self.ctx.unit_monomial())
    }

    fn combine(&self, other: &UeaElement, sign: bool) -> UeaElement {
        assert!(
            self.ctx.same(&other.ctx),
            "adding elements of different enveloping algebra contexts"
        );
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), if sign { c.clone() } else { -c.clone() });
        }
        UeaElement {
            ctx: Arc::clone(&self.ctx),
            terms,
        }
    }
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        self.combine(rhs, true)
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        self.combine(rhs, false)
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&-Q::one())
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({}) {}", fmt_q(c), self.ctx.render_monomial(m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};
    use GeneratorId::*;

    fn schr() -> Arc<Uea> {
        let alg = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        Uea::new(alg, &[Z, F]).unwrap()
    }

    #[test]
    fn order_is_canonical() {
        let u = schr();
        assert_eq!(u.order(), &[Z, F, P(1), P(0), H, E]);
    }

    #[test]
    fn e_times_f() {
        let u = schr();
        let ef = u.gen(E).unwrap().mul(&u.gen(F).unwrap()).unwrap();
        let want = &u.monomial(&[(F, 1), (E, 1)]).unwrap() + &u.gen(H).unwrap();
        assert_eq!(ef, want);
        assert_eq!(u.gen(E).unwrap().commutator(&u.gen(F).unwrap()).unwrap(), u.gen(H).unwrap());
    }

    #[test]
    fn z_inverse_is_central() {
        let u = schr();
        let zi = u.inverse(Z).unwrap();
        let p0 = u.gen(P(0)).unwrap();
        assert_eq!(zi.mul(&p0).unwrap(), u.monomial(&[(P(0), 1), (Z, -1)]).unwrap());
        for g in [E, F, H, P(0), P(1)] {
            assert!(zi.commutator(&u.gen(g).unwrap()).unwrap().is_zero());
        }
        assert_eq!(u.gen(Z).unwrap().mul(&zi).unwrap(), u.one());
    }

    #[test]
    fn f_inverse_past_h() {
        let u = schr();
        let fi = u.inverse(F).unwrap();
        let h = u.gen(H).unwrap();
        // f^-1 h = (h - 2) f^-1
        let lhs = fi.mul(&h).unwrap();
        let rhs = (&h - &u.scalar(q(2))).mul(&fi).unwrap();
        assert_eq!(lhs, rhs);
        // and left-multiplying by f recovers h
        assert_eq!(u.gen(F).unwrap().mul(&lhs).unwrap(), h);
        assert_eq!(u.gen(F).unwrap().mul(&fi).unwrap(), u.one());
        assert_eq!(fi.mul(&u.gen(F).unwrap()).unwrap(), u.one());
    }

    #[test]
    fn squares_of_p() {
        let u = schr();
        let p0 = u.gen(P(0)).unwrap();
        let p1 = u.gen(P(1)).unwrap();
        let c = p0.pow(2).unwrap().commutator(&p1.pow(2).unwrap()).unwrap();
        let want = &u.monomial(&[(Z, 1), (P(1), 1), (P(0), 1)]).unwrap().scale(&q(-4))
            + &u.monomial(&[(Z, 2)]).unwrap().scale(&q(2));
        assert_eq!(c, want);
    }

    #[test]
    fn renormalize_is_identity_on_normal_forms() {
        let u = schr();
        let x = u.word(&[(E, 2), (F, -1), (P(0), 1), (H, 1), (P(1), 2)]).unwrap();
        assert_eq!(x.renormalize().unwrap(), x);
    }

    #[test]
    fn grading_respected() {
        let u = schr();
        let a = u.word(&[(E, 1), (P(1), 2)]).unwrap();
        let b = u.word(&[(P(0), 1), (F, 1)]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.h_degree(), Some(a.h_degree().unwrap() + b.h_degree().unwrap()));
    }

    #[test]
    fn errors() {
        let alg = LieAlgebra::new(HalfInteger::half(1), Family::Extended).unwrap();
        let plain = Uea::new(alg.clone(), &[]).unwrap();
        assert!(matches!(plain.inverse(Z), Err(Error::NotInvertible(Z))));
        assert!(Uea::new(alg.clone(), &[E]).is_err());
        let other = Uea::new(LieAlgebra::new(HalfInteger::half(3), Family::Extended).unwrap(), &[])
            .unwrap();
        let a = plain.gen(E).unwrap();
        let b = other.gen(E).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::ContextMismatch)));
        let capped = Uea::with_degree_cap(alg, &[], 4).unwrap();
        let big = capped.gen(E).unwrap().pow(3).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::DegreeCap { .. })));
        let _ = qf(1, 2);
    }
}
