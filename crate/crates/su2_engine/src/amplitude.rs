use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::sqrt_rational::{SqrtRational, SurdSum};

/// Computational-basis decomposition: qudit string -> exact amplitude.
///
/// Strings are read as `i0 i1 ... i_{n-1}`: the first character is the final
/// single-particle weight, the k-th the output digit of the step that consumed
/// path entry `p_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AmplitudeMap {
    amps: BTreeMap<String, SqrtRational>,
}

impl AmplitudeMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a non-zero amplitude. Zero amplitudes are dropped.
    pub fn insert(&mut self, key: String, amp: SqrtRational) {
        if amp.is_zero() {
            self.amps.remove(&key);
        } else {
            self.amps.insert(key, amp);
        }
    }

    /// Collapses accumulated sums; fails with the offending key if a sum is
    /// not a single surd.
    pub fn from_sums(sums: BTreeMap<String, SurdSum>) -> Result<Self, String> {
        let mut out = Self::new();
        for (k, s) in sums {
            let v = s
                .to_surd()
                .ok_or_else(|| format!("amplitude of {k} is not a single surd: {s:?}"))?;
            out.insert(k, v);
        }
        Ok(out)
    }

    pub fn get(&self, key: &str) -> SqrtRational {
        self.amps.get(key).cloned().unwrap_or_else(SqrtRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &SqrtRational)> {
        self.amps.iter()
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    /// Common key length, if all keys agree.
    pub fn width(&self) -> Option<usize> {
        let mut lens = self.amps.keys().map(String::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn norm_squared(&self) -> BigRational {
        self.amps
            .values()
            .fold(BigRational::zero(), |acc, a| acc + a.square())
    }

    /// Exact inner product.
    pub fn inner(&self, other: &AmplitudeMap) -> SurdSum {
        let mut acc = SurdSum::new();
        for (k, a) in &self.amps {
            if let Some(b) = other.amps.get(k) {
                acc.add(&(a * b));
            }
        }
        acc
    }

    pub fn to_f64_map(&self) -> BTreeMap<String, f64> {
        self.amps
            .iter()
            .map(|(k, v)| (k.clone(), v.to_f64()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn norm_and_inner() {
        let mut a = AmplitudeMap::new();
        a.insert("10".into(), SqrtRational::sqrt_frac(1, 2));
        a.insert("01".into(), -SqrtRational::sqrt_frac(1, 2));
        a.insert("00".into(), SqrtRational::zero());
        assert_eq!(a.len(), 2);
        assert_eq!(a.norm_squared(), BigRational::one());
        assert_eq!(a.width(), Some(2));
        let mut b = AmplitudeMap::new();
        b.insert("10".into(), SqrtRational::sqrt_frac(1, 2));
        b.insert("01".into(), SqrtRational::sqrt_frac(1, 2));
        assert!(a.inner(&b).is_zero());
        assert_eq!(a.inner(&a).to_rational(), Some(BigRational::one()));
    }
}
