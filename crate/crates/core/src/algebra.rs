//! The conformal Galilei algebras: the centrally extended family `g~(l)` for
//! `l` in `N - 1/2` and the centerless family `g(l)` for `l` in `N/2`.
//!
//! Basis: `e, f, h, p_0, ..., p_{2l}` and, in the extended family, the central
//! element `z`. The structure constants are
//!
//! ```text
//! [h,e] = 2e      [h,f] = -2f        [e,f] = h
//! [h,p_k] = 2(l-k) p_k   [e,p_k] = k p_{k-1}   [f,p_k] = (2l-k) p_{k+1}
//! [p_k,p_j] = delta_{k+j,2l} (-1)^{k+l+1/2} k! (2l-k)! z
//! ```
//!
//! with `[p_k,p_j] = 0` in the centerless family.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial_q, fmt_q, q, sign, Q};
use crate::report::Report;

/// A positive element of `N/2`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInteger {
    twice: u32,
}

impl HalfInteger {
    pub fn from_twice(twice: u32) -> Result<Self> {
        if twice == 0 {
            return Err(Error::ParseHalfInteger("0".into()));
        }
        Ok(Self { twice })
    }

    /// Shorthand for tests and literals; panics on zero.
    pub fn half(twice: u32) -> Self {
        Self::from_twice(twice).expect("l must be positive")
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn value(self) -> Q {
        Q::new(self.twice.into(), 2.into())
    }

    /// `l + 1/2` when `l` is half-odd, i.e. the number of `p`'s of each sign.
    pub fn half_odd_ceiling(self) -> u32 {
        self.twice.div_ceil(2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseHalfInteger(s.to_string());
        let t = s.trim();
        let twice = match t.split_once('/') {
            Some((num, "2")) => num.trim().parse::<u32>().map_err(|_| bad())?,
            Some((num, "1")) => num.trim().parse::<u32>().map_err(|_| bad())? * 2,
            Some(_) => return Err(bad()),
            None => t.parse::<u32>().map_err(|_| bad())? * 2,
        };
        Self::from_twice(twice).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    E,
    F,
    H,
    Z,
    P(u32),
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::E => write!(f, "e"),
            GeneratorId::F => write!(f, "f"),
            GeneratorId::H => write!(f, "h"),
            GeneratorId::Z => write!(f, "z"),
            GeneratorId::P(k) => write!(f, "p{k}"),
        }
    }
}

/// Weight of a generator under `ad h`. Always an integer since `2l` is.
pub fn h_degree(g: GeneratorId, l: HalfInteger) -> i64 {
    match g {
        GeneratorId::E => 2,
        GeneratorId::F => -2,
        GeneratorId::H | GeneratorId::Z => 0,
        GeneratorId::P(k) => l.twice() as i64 - 2 * k as i64,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Extended,
    Centerless,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "extended" => Ok(Family::Extended),
            "centerless" => Ok(Family::Centerless),
            other => Err(Error::Precondition(format!(
                "unknown family `{other}` (expected extended|centerless)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Extended => write!(f, "extended"),
            Family::Centerless => write!(f, "centerless"),
        }
    }
}

/// Sparse linear combination of basis generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<GeneratorId, Q>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(g: GeneratorId) -> Self {
        Self::term(g, Q::one())
    }

    pub fn term(g: GeneratorId, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn add_term(&mut self, g: GeneratorId, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(g, x)| (*g, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: GeneratorId) -> Q {
        self.terms.get(&g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (GeneratorId, &Q)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| {
                if c.is_one() {
                    g.to_string()
                } else {
                    format!("({})*{g}", fmt_q(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// One algebra of either family at a fixed `l`, with its precomputed bracket
/// table. Immutable after construction except through [`LieAlgebra::set_bracket`],
/// which exists to test the validators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    l: HalfInteger,
    family: Family,
    basis: Vec<GeneratorId>,
    table: BTreeMap<(GeneratorId, GeneratorId), LieElement>,
}

impl LieAlgebra {
    pub fn new(l: HalfInteger, family: Family) -> Result<Self> {
        if family == Family::Extended && l.is_integer() {
            return Err(Error::ExtendedIntegerL(l.to_string()));
        }
        let two_l = l.twice();
        let mut basis = vec![GeneratorId::E, GeneratorId::F, GeneratorId::H];
        basis.extend((0..=two_l).map(GeneratorId::P));
        if family == Family::Extended {
            basis.push(GeneratorId::Z);
        }

        let mut alg = Self {
            l,
            family,
            basis,
            table: BTreeMap::new(),
        };
        use GeneratorId::*;
        alg.set_bracket(H, E, LieElement::term(E, q(2)));
        alg.set_bracket(H, F, LieElement::term(F, q(-2)));
        alg.set_bracket(E, F, LieElement::gen(H));
        for k in 0..=two_l {
            alg.set_bracket(H, P(k), LieElement::term(P(k), q(two_l as i64 - 2 * k as i64)));
            // p_{-1} and p_{2l+1} only appear with a vanishing coefficient.
            if k > 0 {
                alg.set_bracket(E, P(k), LieElement::term(P(k - 1), q(k as i64)));
            } else {
                debug_assert_eq!(k, 0);
            }
            if k < two_l {
                alg.set_bracket(F, P(k), LieElement::term(P(k + 1), q((two_l - k) as i64)));
            }
        }
        if family == Family::Extended {
            // (-1)^{k + l + 1/2} with 2l odd
            let shift = (two_l as i64 + 1) / 2;
            for k in 0..=two_l {
                let j = two_l - k;
                if k < j {
                    let c = sign(k as i64 + shift) * factorial_q(k) * factorial_q(j);
                    alg.set_bracket(P(k), P(j), LieElement::term(Z, c));
                }
            }
        }
        Ok(alg)
    }

    pub fn l(&self) -> HalfInteger {
        self.l
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Basis in enumeration order `e, f, h, p_0..p_{2l}, [z]`.
    pub fn basis(&self) -> &[GeneratorId] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, g: GeneratorId) -> bool {
        match g {
            GeneratorId::E | GeneratorId::F | GeneratorId::H => true,
            GeneratorId::Z => self.family == Family::Extended,
            GeneratorId::P(k) => k <= self.l.twice(),
        }
    }

    pub fn degree(&self, g: GeneratorId) -> i64 {
        h_degree(g, self.l)
    }

    /// Weight lattice step of highest weight modules: 1 when some generator has
    /// odd degree, 2 otherwise.
    pub fn step(&self) -> u32 {
        if self.l.is_integer() {
            2
        } else {
            1
        }
    }

    /// Overwrites `[a,b]` (and `[b,a]` with the opposite sign).
    pub fn set_bracket(&mut self, a: GeneratorId, b: GeneratorId, value: LieElement) {
        self.table.insert((b, a), value.neg());
        self.table.insert((a, b), value);
        self.table.retain(|_, v| !v.is_zero());
    }

    pub fn bracket_gen(&self, a: GeneratorId, b: GeneratorId) -> LieElement {
        self.table.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn check_member(&self, x: &LieElement) -> Result<()> {
        match x.terms().find(|(g, _)| !self.contains(*g)) {
            Some((g, _)) => Err(Error::ForeignGenerator(g)),
            None => Ok(()),
        }
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        let mut out = LieElement::zero();
        for (ga, ca) in a.terms() {
            for (gb, cb) in b.terms() {
                let prod = ca * cb;
                for (g, c) in self.bracket_gen(ga, gb).terms() {
                    out.add_term(g, c * &prod);
                }
            }
        }
        Ok(out)
    }

    /// `ad s` applied to `x`.
    pub fn ad(&self, s: GeneratorId, x: &LieElement) -> LieElement {
        self.bracket(&LieElement::gen(s), x)
            .expect("generators of this algebra")
    }

    /// Antisymmetry, grading homogeneity and the Jacobi identity over all basis
    /// pairs and triples, in exact arithmetic.
    pub fn check_jacobi(&self) -> Report {
        let mut report = Report::new("verify-algebra")
            .param("l", self.l.to_string())
            .param("family", self.family.to_string());

        let mut antisym_witness = None;
        let mut grading_witness = None;
        for &a in &self.basis {
            for &b in &self.basis {
                let ab = self.bracket_gen(a, b);
                let ba = self.bracket_gen(b, a);
                if antisym_witness.is_none() && ab != ba.neg() {
                    antisym_witness = Some(format!("[{a},{b}] = {ab}, [{b},{a}] = {ba}"));
                }
                let want = self.degree(a) + self.degree(b);
                if grading_witness.is_none() {
                    if let Some((g, _)) = ab.terms().find(|(g, _)| self.degree(*g) != want) {
                        grading_witness =
                            Some(format!("[{a},{b}] = {ab} contains {g} of degree {}", self.degree(g)));
                    }
                }
            }
        }
        report.check("antisymmetry", antisym_witness.is_none(), antisym_witness);
        report.check("grading", grading_witness.is_none(), grading_witness);

        let mut jacobi_witness = None;
        'outer: for (i, &a) in self.basis.iter().enumerate() {
            for (j, &b) in self.basis.iter().enumerate().skip(i) {
                for &c in self.basis.iter().skip(j) {
                    let ga = LieElement::gen(a);
                    let gb = LieElement::gen(b);
                    let gc = LieElement::gen(c);
                    let t1 = self.bracket(&ga, &self.bracket_gen(b, c)).unwrap();
                    let t2 = self.bracket(&gb, &self.bracket_gen(c, a)).unwrap();
                    let t3 = self.bracket(&gc, &self.bracket_gen(a, b)).unwrap();
                    let sum = t1.add(&t2).add(&t3);
                    if !sum.is_zero() {
                        jacobi_witness = Some(format!("({a},{b},{c}): cyclic sum = {sum}"));
                        break 'outer;
                    }
                }
            }
        }
        report.check("jacobi", jacobi_witness.is_none(), jacobi_witness);
        report
    }

    /// Smallest `n >= 1` with `(ad s)^n = 0` on the whole algebra.
    pub fn ad_nilpotency_index(&self, s: GeneratorId) -> Result<u32> {
        if !self.contains(s) {
            return Err(Error::ForeignGenerator(s));
        }
        if matches!(s, GeneratorId::H | GeneratorId::Z) {
            return Err(Error::NotNilpotent(s));
        }
        let mut images: Vec<LieElement> = self.basis.iter().map(|&g| LieElement::gen(g)).collect();
        for n in 1..=(self.dim() as u32 + 1) {
            images = images.iter().map(|x| self.ad(s, x)).collect();
            if images.iter().all(LieElement::is_zero) {
                return Ok(n);
            }
        }
        Err(Error::NotNilpotent(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorId::*;

    fn alg(twice: u32, family: Family) -> LieAlgebra {
        LieAlgebra::new(HalfInteger::half(twice), family).unwrap()
    }

    #[test]
    fn half_integer_parsing() {
        assert_eq!("3/2".parse::<HalfInteger>().unwrap().twice(), 3);
        assert_eq!("2".parse::<HalfInteger>().unwrap().twice(), 4);
        assert_eq!("4/2".parse::<HalfInteger>().unwrap().twice(), 4);
        assert!("0".parse::<HalfInteger>().is_err());
        assert!("1/3".parse::<HalfInteger>().is_err());
        assert!("-1/2".parse::<HalfInteger>().is_err());
        assert_eq!(HalfInteger::half(5).to_string(), "5/2");
        assert_eq!(HalfInteger::half(6).to_string(), "3");
    }

    #[test]
    fn basis_sizes() {
        let a = alg(1, Family::Extended);
        assert_eq!(a.basis(), &[E, F, H, P(0), P(1), Z]);
        let b = alg(2, Family::Centerless);
        assert_eq!(b.basis(), &[E, F, H, P(0), P(1), P(2)]);
        assert!(matches!(
            LieAlgebra::new(HalfInteger::half(2), Family::Extended),
            Err(Error::ExtendedIntegerL(_))
        ));
    }

    #[test]
    fn displayed_brackets() {
        let a = alg(1, Family::Extended);
        assert_eq!(a.bracket_gen(H, E), LieElement::term(E, q(2)));
        assert_eq!(a.bracket_gen(P(0), P(1)), LieElement::term(Z, q(-1)));
        assert_eq!(a.bracket_gen(P(1), P(0)), LieElement::term(Z, q(1)));
        let c = alg(3, Family::Centerless);
        for i in 0..=3 {
            for j in 0..=3 {
                assert!(c.bracket_gen(P(i), P(j)).is_zero());
            }
        }
        assert!(a.bracket(&LieElement::gen(P(4)), &LieElement::gen(E)).is_err());
    }

    #[test]
    fn p_pairing_formula() {
        // [p_k, p_{2l-k}] = (-1)^{k+l+1/2} k! (2l-k)! z, e.g. l = 3/2
        let a = alg(3, Family::Extended);
        assert_eq!(a.bracket_gen(P(0), P(3)), LieElement::term(Z, q(6)));
        assert_eq!(a.bracket_gen(P(1), P(2)), LieElement::term(Z, q(-2)));
        assert!(a.bracket_gen(P(0), P(2)).is_zero());
    }

    #[test]
    fn degrees() {
        let l = HalfInteger::half(5);
        assert_eq!(h_degree(E, l), 2);
        assert_eq!(h_degree(F, l), -2);
        assert_eq!(h_degree(Z, l), 0);
        assert_eq!(h_degree(P(0), l), 5);
        assert_eq!(h_degree(P(5), l), -5);
    }

    #[test]
    fn jacobi_passes_and_detects_mutation() {
        for twice in 1..=6 {
            for fam in [Family::Extended, Family::Centerless] {
                if let Ok(a) = LieAlgebra::new(HalfInteger::half(twice), fam) {
                    assert!(a.check_jacobi().pass, "l={twice}/2 {fam}");
                }
            }
        }
        let mut bad = alg(1, Family::Extended);
        bad.set_bracket(H, E, LieElement::term(E, q(3)));
        let rep = bad.check_jacobi();
        assert!(!rep.pass);
        let w = rep.result("jacobi").unwrap().witness.clone().unwrap();
        assert!(w.starts_with("(e,f,h)"), "{w}");
    }

    #[test]
    fn nilpotency() {
        let a = alg(1, Family::Extended);
        // ad e: f -> h -> -2e -> 0
        assert_eq!(a.ad_nilpotency_index(E).unwrap(), 3);
        assert_eq!(a.ad_nilpotency_index(F).unwrap(), 3);
        for k in 0..=1 {
            let n = a.ad_nilpotency_index(P(k)).unwrap();
            assert!((2..=3).contains(&n));
        }
        assert!(matches!(a.ad_nilpotency_index(H), Err(Error::NotNilpotent(H))));
        assert!(a.ad_nilpotency_index(Z).is_err());
        let c = alg(4, Family::Centerless);
        assert_eq!(c.ad_nilpotency_index(P(2)).unwrap(), 2);
        // ad e lowers p_4 four times
        assert_eq!(c.ad_nilpotency_index(E).unwrap(), 5);
    }
}
