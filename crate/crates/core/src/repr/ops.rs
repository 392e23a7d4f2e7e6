//! Tensor products, the oscillator lift of Heisenberg modules, and inflation
//! of `sl2` modules by letting the Heisenberg ideal act by zero.

use num_traits::Zero;

use crate::algebra::{Family, GeneratorId, HalfInteger, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;
use crate::uea::{phi_images, Uea, UeaElement};

use super::{verma, HighestWeight, Origin, WeightModule};

/// Leibniz action on `M (x) N`, truncated at `depth`. The basis at depth `n`
/// lists blocks `M_k (x) N_{n-k}` for `k = 0..=n`, each in Kronecker order.
pub fn tensor(m: &WeightModule, n: &WeightModule, depth: usize) -> Result<WeightModule> {
    if m.algebra() != n.algebra() || m.step() != n.step() {
        return Err(Error::ModuleMismatch("tensor factors over different algebras or lattices".into()));
    }
    let mut gens_m = m.generators().to_vec();
    let mut gens_n = n.generators().to_vec();
    gens_m.sort();
    gens_n.sort();
    if gens_m != gens_n {
        return Err(Error::ModuleMismatch("tensor factors with different acting generators".into()));
    }
    if depth > m.depth() || depth > n.depth() {
        return Err(Error::ModuleMismatch(format!(
            "tensor depth {depth} exceeds a factor's window ({}, {})",
            m.depth(),
            n.depth()
        )));
    }
    // offsets[d][k] = position of the block M_k (x) N_{d-k}
    let mut offsets = Vec::with_capacity(depth + 1);
    let mut dims = Vec::with_capacity(depth + 1);
    for d in 0..=depth {
        let mut off = Vec::with_capacity(d + 1);
        let mut total = 0;
        for k in 0..=d {
            off.push(total);
            total += m.dim(k) * n.dim(d - k);
        }
        offsets.push(off);
        dims.push(total);
    }
    let place = |out: &mut Matrix, block: &Matrix, r0: usize, c0: usize| {
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                let x = block.get(r, c);
                if !x.is_zero() {
                    out.add_at(r0 + r, c0 + c, x);
                }
            }
        }
    };
    WeightModule::build(
        m.algebra(),
        m.generators(),
        m.top_weight() + n.top_weight(),
        m.step(),
        dims.clone(),
        Origin::Tensor,
        |g, d, t| {
            let s = m.shift(g);
            let mut out = Matrix::zeros(dims[t], dims[d]);
            for k in 0..=d {
                let j = d - k;
                let col = offsets[d][k];
                let km = k as i64 + s;
                if km >= 0 {
                    let a = m.action(g, k).expect("target within the factor window");
                    let block = a.kron(&Matrix::identity(n.dim(j)));
                    place(&mut out, &block, offsets[t][km as usize], col);
                }
                let jn = j as i64 + s;
                if jn >= 0 {
                    let b = n.action(g, j).expect("target within the factor window");
                    let block = Matrix::identity(m.dim(k)).kron(b);
                    place(&mut out, &block, offsets[t][k], col);
                }
            }
            Ok(out)
        },
    )
}

/// The Fock module `M_H(z)` of `span{p_k, z}` inside `g~(l)`.
pub fn fock_module(l: HalfInteger, z: &Q, depth: usize) -> Result<WeightModule> {
    let alg = LieAlgebra::new(l, Family::Extended)?;
    verma(&alg, &HighestWeight::Heisenberg { z: z.clone() }, depth)
}

/// Extra depth a Heisenberg module needs so that the quadratic images of
/// `e, f, h` stay inside its window: the largest lowering shift, `2l`.
pub fn lift_margin(l: HalfInteger) -> usize {
    l.twice() as usize
}

/// Matrix of a normal-ordered element of the `z`-localized Heisenberg algebra
/// acting from depth `n`, factors applied right to left, `z` by `z_value`.
fn evaluate(v: &WeightModule, u: &UeaElement, z_value: &Q, n: usize, t: usize) -> Option<Matrix> {
    let uea = u.context();
    let order = uea.order();
    let mut acc = Matrix::zeros(v.dim(t), v.dim(n));
    for (mono, c) in u.terms() {
        let mut cur = n as i64;
        let mut mat = Matrix::identity(v.dim(n));
        let mut coeff = c.clone();
        let mut dead = false;
        for (p, &e) in mono.exponents().iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            let g = order[p];
            if g == GeneratorId::Z {
                let power = num_traits::pow(z_value.clone(), e.unsigned_abs() as usize);
                coeff = if e > 0 { coeff * power } else { coeff / power };
                continue;
            }
            for _ in 0..e {
                if cur < 0 {
                    dead = true;
                    break;
                }
                mat = v.action(g, cur as usize)?.mul(&mat);
                cur += v.shift(g);
            }
        }
        if dead || cur < 0 {
            continue;
        }
        debug_assert_eq!(cur as usize, t);
        acc = acc.add(&mat.scale(&coeff));
    }
    Some(acc)
}

/// Pulls a Heisenberg module back along the oscillator homomorphism: `e, f, h`
/// act through their quadratic images with `z^-1` evaluated at `1/z`. The
/// result is `lift_margin(l)` shallower than the input.
pub fn oscillator_lift(v: &WeightModule, z: &Q) -> Result<WeightModule> {
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let alg = v.algebra().clone();
    if alg.family() != Family::Extended || v.step() != 1 {
        return Err(Error::ModuleMismatch("the oscillator lift needs a g~(l) Heisenberg module".into()));
    }
    let l = alg.l();
    for g in std::iter::once(GeneratorId::Z).chain((0..=l.twice()).map(GeneratorId::P)) {
        if !v.acts(g) {
            return Err(Error::ModuleMismatch(format!("{g} does not act on the input module")));
        }
    }
    for n in 0..=v.depth() {
        if v.action(GeneratorId::Z, n) != Some(&Matrix::scalar(v.dim(n), z)) {
            return Err(Error::ModuleMismatch(format!("z does not act by the given charge at depth {n}")));
        }
    }
    let margin = lift_margin(l);
    if v.depth() < margin {
        return Err(Error::ModuleMismatch(format!(
            "the input window {} is smaller than the lift margin {margin}",
            v.depth()
        )));
    }
    let depth = v.depth() - margin;
    let uea = Uea::z_localized(l)?;
    let images = phi_images(&uea)?;
    let h0 = evaluate(v, &images.h, z, 0, 0).expect("within margin");
    let top = if v.dim(0) == 1 {
        h0.get(0, 0).clone()
    } else {
        return Err(Error::ModuleMismatch("the lift needs a one-dimensional top".into()));
    };
    WeightModule::build(
        &alg,
        alg.basis(),
        top,
        1,
        v.dims()[..=depth].to_vec(),
        Origin::Lift,
        |g, n, t| {
            let m = match g {
                GeneratorId::E => evaluate(v, &images.e, z, n, t),
                GeneratorId::F => evaluate(v, &images.f, z, n, t),
                GeneratorId::H => evaluate(v, &images.h, z, n, t),
                _ => v.action(g, n).cloned(),
            };
            m.ok_or_else(|| Error::ModuleMismatch(format!("{g} leaves the input window at depth {n}")))
        },
    )
}

/// An `sl2` module made into a module over `alg`, with `p_k` and `z` acting by
/// zero. Step-2 modules are spread onto the step-1 lattice when `alg` needs it.
pub fn inflate_sl2(nm: &WeightModule, alg: &LieAlgebra) -> Result<WeightModule> {
    for g in [GeneratorId::E, GeneratorId::F, GeneratorId::H] {
        if !nm.acts(g) {
            return Err(Error::ModuleMismatch(format!("{g} does not act on the sl2 module")));
        }
    }
    if nm.step() != 2 {
        return Err(Error::ModuleMismatch("sl2 modules live on the step-2 lattice".into()));
    }
    let step = alg.step();
    let spread = (2 / step) as usize;
    let depth = nm.depth() * spread;
    let dims: Vec<usize> = (0..=depth)
        .map(|d| if d % spread == 0 { nm.dim(d / spread) } else { 0 })
        .collect();
    WeightModule::build(
        alg,
        alg.basis(),
        nm.top_weight().clone(),
        step,
        dims.clone(),
        Origin::Inflation,
        |g, d, t| {
            let sl2 = matches!(g, GeneratorId::E | GeneratorId::F | GeneratorId::H);
            if sl2 && d % spread == 0 && dims[d] > 0 && dims[t] > 0 {
                Ok(nm.action(g, d / spread).expect("in window").clone())
            } else {
                Ok(Matrix::zeros(dims[t], dims[d]))
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fock_oracle;
    use crate::rational::{q, qf};
    use crate::repr::{sl2_simple, trivial_module};

    #[test]
    fn fock_lift_at_one_half() {
        let l = HalfInteger::half(1);
        let fock = fock_module(l, &q(1), 7).unwrap();
        assert_eq!(fock.character().dims, fock_oracle(l, 7).unwrap().dims);
        let lifted = oscillator_lift(&fock, &q(1)).unwrap();
        assert_eq!(lifted.depth(), 6);
        assert_eq!(*lifted.top_weight(), qf(-1, 2));
        assert!(lifted.action(GeneratorId::E, 0).unwrap().is_zero());
        let rep = lifted.check_consistency();
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn lift_three_halves() {
        let l = HalfInteger::half(3);
        let z = qf(-2, 3);
        let lifted = oscillator_lift(&fock_module(l, &z, 9).unwrap(), &z).unwrap();
        assert_eq!(*lifted.top_weight(), q(-2));
        let rep = lifted.check_consistency();
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn lift_rejects_zero_and_wrong_charge() {
        let l = HalfInteger::half(1);
        let fock = fock_module(l, &q(1), 4).unwrap();
        assert_eq!(oscillator_lift(&fock, &q(0)).unwrap_err(), Error::ZeroCentralCharge);
        assert!(oscillator_lift(&fock, &q(2)).is_err());
    }

    #[test]
    fn tensor_with_trivial_and_inflation() {
        let l = HalfInteger::half(1);
        let alg = LieAlgebra::new(l, Family::Extended).unwrap();
        let lifted = oscillator_lift(&fock_module(l, &q(1), 7).unwrap(), &q(1)).unwrap();
        let t = tensor(&lifted, &trivial_module(&alg, 1, 6).unwrap(), 6).unwrap();
        for &g in alg.basis() {
            for n in 0..=6 {
                assert_eq!(t.action(g, n), lifted.action(g, n));
            }
        }
        let v2 = inflate_sl2(&sl2_simple(&alg, 2, 3).unwrap(), &alg).unwrap();
        assert_eq!(v2.dims(), &[1, 0, 1, 0, 1, 0, 0]);
        assert!(v2.acts_by_zero(GeneratorId::P(0)) && v2.acts_by_zero(GeneratorId::Z));
        assert!(v2.check_consistency().pass);
        let sl2 = verma(&alg, &HighestWeight::Sl2 { h: qf(1, 3) }, 3).unwrap();
        let prod = tensor(&lifted, &inflate_sl2(&sl2, &alg).unwrap(), 6).unwrap();
        assert_eq!(prod.dims(), &[1, 1, 2, 2, 3, 3, 4]);
        assert!(prod.check_consistency().pass);
        let swapped = tensor(&inflate_sl2(&sl2, &alg).unwrap(), &lifted, 6).unwrap();
        assert_eq!(swapped.dims(), prod.dims());
    }
}
