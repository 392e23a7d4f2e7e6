//! Characters by counting partitions. Nothing here touches the enveloping
//! algebra or the module code, so agreement with those is independent evidence.

use num_traits::Zero;

use crate::algebra::{Family, HalfInteger};
use crate::character::CharacterTable;
use crate::error::{Error, Result};

/// Number of multisets drawn from `parts` (with repetition, parts counted
/// with multiplicity as distinct colours) summing to `n`.
pub fn partition_count(parts: &[u32], n: usize) -> u64 {
    partition_series(parts, n)[n]
}

/// Coefficients of `prod_p 1/(1 - q^p)` up to `q^n`.
pub fn partition_series(parts: &[u32], n: usize) -> Vec<u64> {
    let mut series = vec![0u64; n + 1];
    series[0] = 1;
    for &p in parts {
        assert!(p > 0, "parts must be positive");
        let p = p as usize;
        for k in p..=n {
            series[k] += series[k - p];
        }
    }
    series
}

/// Degrees (in weight units) of the negative generators: `f` and `p_k`, `k > l`.
/// Both families share them since `z` has degree 0.
pub fn negative_degrees(l: HalfInteger) -> Vec<u32> {
    let two_l = l.twice();
    let mut out = vec![2];
    // p_k with 2k > 2l has degree 2l - 2k < 0
    for k in 0..=two_l {
        if 2 * k > two_l {
            out.push(2 * k - two_l);
        }
    }
    out
}

fn family_step(l: HalfInteger) -> u32 {
    if l.is_integer() {
        2
    } else {
        1
    }
}

/// Verma character of `g~(l)` or `g(l)` to native depth `depth`. The family
/// only matters through which `l` it admits.
pub fn verma_character_oracle(_family: Family, l: HalfInteger, depth: usize) -> CharacterTable {
    let step = family_step(l);
    let parts: Vec<u32> = negative_degrees(l).iter().map(|d| d / step).collect();
    CharacterTable::new(Zero::zero(), step, partition_series(&parts, depth))
}

/// Verma character of `sl2`: one dimension at every step of 2.
pub fn sl2_verma_oracle(depth: usize) -> CharacterTable {
    CharacterTable::new(Zero::zero(), 2, vec![1; depth + 1])
}

/// Finite-dimensional simple `sl2` module of highest weight `m`.
pub fn sl2_simple_oracle(m: u64, depth: usize) -> CharacterTable {
    let dims = (0..=depth as u64).map(|n| u64::from(n <= m)).collect();
    CharacterTable::new(Zero::zero(), 2, dims)
}

/// Fock-space character: partitions into the odd parts `1, 3, ..., 2l`.
pub fn fock_oracle(l: HalfInteger, depth: usize) -> Result<CharacterTable> {
    if l.is_integer() {
        return Err(Error::Precondition(format!("the Fock space needs l in N - 1/2, got {l}")));
    }
    let parts: Vec<u32> = (0..=l.twice() / 2).map(|j| 2 * j + 1).collect();
    Ok(CharacterTable::new(Zero::zero(), 1, partition_series(&parts, depth)))
}

/// Character of the simple highest weight `g~(l)` module whose `sl2` part
/// has highest weight `m`: odd-part partitions times the window `{0, 2, ..., 2m}`.
pub fn simple_character_oracle(l: HalfInteger, m: i64, depth: usize) -> Result<CharacterTable> {
    if m < 0 {
        return Err(Error::Precondition(format!("m must be nonnegative, got {m}")));
    }
    let fock = fock_oracle(l, depth)?;
    let window = sl2_simple_oracle(m as u64, depth / 2 + 1).restep(1)?;
    Ok(convolve(&fock, &window)?.truncate(depth))
}

/// Character of a tensor product: `dims(n) = sum_k a(k) b(n-k)`.
pub fn convolve(a: &CharacterTable, b: &CharacterTable) -> Result<CharacterTable> {
    if a.step != b.step {
        return Err(Error::Precondition(format!(
            "cannot convolve characters with steps {} and {}",
            a.step, b.step
        )));
    }
    let depth = a.depth().min(b.depth());
    let dims = (0..=depth)
        .map(|n| (0..=n).map(|k| a.dim(k) * b.dim(n - k)).sum())
        .collect();
    Ok(CharacterTable::new(&a.top_weight + &b.top_weight, a.step, dims))
}
