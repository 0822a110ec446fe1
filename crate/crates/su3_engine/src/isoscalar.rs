//! Isoscalar factors for `(P1,Q1) ⊗ (1,0)` in the de Swart phase convention.
//!
//! The recursion starts from the highest-weight factors, walks down in `k`
//! at `l = 0`, then in `l`. The factor with the lower-row parent of a `u`
//! quark (`T' = T + 1/2`) is fixed by orthonormality away from the highest
//! weight.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use su2_engine::{BigRational, SqrtRational, SurdSum};

use crate::ladder::{factorial_root, root_q, LadderCoeffs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuarkType {
    /// The isodoublet `(u, d)`.
    U,
    /// The isosinglet `s`.
    S,
}

/// `F(k1,l1 : quark ; k,l)` for parent irrep `(P1,Q1)` and child `(P,Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoscalarQuery {
    pub p1: i64,
    pub q1: i64,
    pub k1: i64,
    pub l1: i64,
    pub quark: QuarkType,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub l: i64,
}

/// Child irrep reached by adding a box with path entry `p`.
pub fn child_irrep(p1: i64, q1: i64, p: u8) -> Option<(i64, i64)> {
    let (p, q) = match p {
        2 => (p1 + 1, q1),
        1 => (p1 - 1, q1 + 1),
        0 => (p1, q1 - 1),
        _ => return None,
    };
    (p >= 0 && q >= 0).then_some((p, q))
}

fn path_entry(p1: i64, q1: i64, p: i64, q: i64) -> Option<u8> {
    (0..3).find(|&e| child_irrep(p1, q1, e) == Some((p, q)))
}

fn valid(p: i64, q: i64, k: i64, l: i64) -> bool {
    p >= 0 && q >= 0 && q <= k && k <= p + q && 0 <= l && l <= q
}

pub fn b_coeff(p: i64, _q: i64, s: i64) -> SqrtRational {
    if s < 0 || s > p {
        return SqrtRational::zero();
    }
    factorial_root(&[p - s], &[p, s])
}

pub fn d_coeff(p1: i64, q1: i64, k1: i64, l1: i64, s: i64) -> SqrtRational {
    factorial_root(
        &[k1 + s + 1, k1 + s - q1, p1 + q1 - k1, k1 - l1 + 1],
        &[k1 + 1, k1 - q1, p1 + q1 - k1 - s, k1 - l1 + s + 1],
    )
}

fn parity_sign(l: i64) -> i8 {
    if l % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn a_coeff(p: i64, q: i64, k: i64, l: i64) -> SqrtRational {
    let mag = factorial_root(&[q - l, p + q - l + 1, k + 1], &[l, q, p + q + 1, k + 1 - l]);
    SqrtRational::new(parity_sign(l), mag.square())
}

pub fn c_coeff(p1: i64, q1: i64, k1: i64, l1: i64, l: i64) -> SqrtRational {
    let mag = factorial_root(
        &[l1, q1 - l1 + l, p1 + q1 - l1 + l + 1, k1 - l1 + 1],
        &[l1 - l, q1 - l1, p1 + q1 - l1 + 1, k1 - l1 + l + 1],
    );
    SqrtRational::new(parity_sign(l), mag.square())
}

fn sq(x: &SqrtRational) -> BigRational {
    x.square()
}

/// Highest-weight factors `(F(k1,l1-1:u), F(k1-1,l1:u), F(k1,l1:s))` onto the
/// child highest weight `(P+Q, 0)`; `child_pq = P+Q` selects the child irrep.
pub fn hws_isoscalars(
    p1: i64,
    q1: i64,
    k1: i64,
    l1: i64,
    child_pq: i64,
) -> (SqrtRational, SqrtRational, SqrtRational) {
    let up = LadderCoeffs::new(p1, q1, k1 - 1, l1 - 1);
    let here = LadderCoeffs::new(p1, q1, k1, l1);
    let (u1, u2, v1, v2) = (up.u1p, up.u2p, here.v1m, here.v2m);
    let mut mix = SurdSum::from_surd(&v1 * &u1);
    mix.add(&(&v2 * &u2));
    let mix2 = mix.mul(&mix).to_rational().expect("square of a surd sum pair");
    let a = sq(&u2) * BigRational::from_integer((k1 - l1 + 2).into());
    let g = &a + sq(&u1) + &mix2;
    let ratio = |x: BigRational| {
        if g == BigRational::from_integer(0.into()) {
            SqrtRational::zero()
        } else {
            root_q(x / &g)
        }
    };
    let seed = |kk: i64, ll: i64| kk - ll == p1 + q1 && child_pq == p1 + q1 + 1;
    let fa = if seed(k1, l1 - 1) {
        SqrtRational::one()
    } else {
        ratio(a.clone())
    };
    let fb = if seed(k1 - 1, l1) {
        SqrtRational::one()
    } else {
        -ratio(sq(&u1))
    };
    let fs = if k1 - l1 == child_pq {
        ratio(mix2)
    } else {
        SqrtRational::zero()
    };
    (fa, fb, fs)
}

type Cache = RwLock<HashMap<(IsoscalarQuery, bool), SqrtRational>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn memo(key: (IsoscalarQuery, bool), f: impl FnOnce() -> SqrtRational) -> SqrtRational {
    if let Some(v) = cache().read().expect("isoscalar cache poisoned").get(&key) {
        return v.clone();
    }
    let v = f();
    cache()
        .write()
        .expect("isoscalar cache poisoned")
        .insert(key, v.clone());
    v
}

fn with(q: &IsoscalarQuery, k1: i64, l1: i64, quark: QuarkType, k: i64, l: i64) -> IsoscalarQuery {
    IsoscalarQuery {
        k1,
        l1,
        quark,
        k,
        l,
        ..*q
    }
}

/// Ladder recursion from the highest weight.
fn recursive(q: &IsoscalarQuery) -> SqrtRational {
    memo((*q, false), || recursive_uncached(q))
}

fn recursive_uncached(q: &IsoscalarQuery) -> SqrtRational {
    let IsoscalarQuery {
        p1,
        q1,
        k1,
        l1,
        quark,
        p,
        q: qq,
        k,
        l,
    } = *q;
    if !valid(p1, q1, k1, l1) || !valid(p, qq, k, l) {
        return SqrtRational::zero();
    }
    let top = p + qq;
    if l == 0 && k == top {
        return match quark {
            QuarkType::S => hws_isoscalars(p1, q1, k1, l1, top).2,
            QuarkType::U if k1 - l1 == top + 1 => hws_isoscalars(p1, q1, k1, l1 + 1, top).0,
            QuarkType::U if k1 - l1 == top - 1 => hws_isoscalars(p1, q1, k1 + 1, l1, top).1,
            QuarkType::U => SqrtRational::zero(),
        };
    }
    if l == 0 {
        let s = top - k;
        let b = b_coeff(p, qq, s);
        let up = |kk, quark| recursive(&with(q, kk, l1, quark, top, 0));
        return match quark {
            QuarkType::U => &(&b * &d_coeff(p1, q1, k1, l1, s)) * &up(k1 + s, QuarkType::U),
            QuarkType::S => {
                let mut sum = SurdSum::from_surd(&d_coeff(p1, q1, k1, l1, s) * &up(k1 + s, QuarkType::S));
                sum.add(
                    &(&(&SqrtRational::from_int(s) * &d_coeff(p1, q1, k1, l1, s - 1))
                        * &up(k1 + s - 1, QuarkType::U)),
                );
                let sum = sum.to_surd().expect("isoscalar factors are single surds");
                &b * &sum
            }
        };
    }
    let ca = &c_coeff(p1, q1, k1, l1, l) * &a_coeff(p, qq, k, l);
    let base = &ca * &recursive(&with(q, k1, l1 - l, quark, k, 0));
    if quark == QuarkType::U && l == l1 + 1 {
        let fs = recursive(&with(q, k1, l1 + 1, QuarkType::S, k, l));
        let rest = fs.complement().unwrap_or_else(SqrtRational::zero);
        let mut sum = SurdSum::from_surd(base);
        sum.add(&-rest);
        return sum.to_surd().expect("isoscalar factors are single surds");
    }
    base
}

/// The isoscalar factor for any query; invalid queries give 0.
pub fn isoscalar(q: &IsoscalarQuery) -> SqrtRational {
    memo((*q, true), || isoscalar_uncached(q))
}

fn isoscalar_uncached(q: &IsoscalarQuery) -> SqrtRational {
    let IsoscalarQuery {
        p1,
        q1,
        k1,
        l1,
        quark,
        p,
        q: qq,
        k,
        l,
    } = *q;
    if !valid(p1, q1, k1, l1) || !valid(p, qq, k, l) {
        return SqrtRational::zero();
    }
    let Some(entry) = path_entry(p1, q1, p, qq) else {
        return SqrtRational::zero();
    };
    let lower_row_parent = if entry == 0 { (k + 1, l) } else { (k, l - 1) };
    if quark == QuarkType::U && (k1, l1) == lower_row_parent && !(l == 0 && k == p + qq) {
        let sigma = if entry == 0 { (k, l + 1) } else { (k - 1, l) };
        let s_parent = if entry == 0 { (k + 1, l + 1) } else { (k, l) };
        let fs = isoscalar(&with(q, s_parent.0, s_parent.1, QuarkType::S, k, l));
        let fg = isoscalar(&with(q, sigma.0, sigma.1, QuarkType::U, k, l));
        let rest = BigRational::from_integer(1.into()) - fs.square() - fg.square();
        let sign = if entry == 0 { 1 } else { -1 };
        return SqrtRational::new(sign, root_q(rest).square());
    }
    recursive(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> SqrtRational {
        SqrtRational::sqrt_frac(n, d)
    }

    #[test]
    fn closed_forms() {
        for p in 0..5 {
            assert_eq!(b_coeff(p, 1, 0), SqrtRational::one());
        }
        assert_eq!(b_coeff(2, 0, 1), s(1, 2));
        assert_eq!(c_coeff(2, 1, 3, 1, 0), SqrtRational::one());
        assert_eq!(a_coeff(2, 1, 3, 0), SqrtRational::one());
        assert!(b_coeff(1, 0, 2).is_zero());
        assert!(d_coeff(0, 0, 0, 0, 3).is_zero());
    }

    #[test]
    fn seed_is_one() {
        for (p1, q1) in [(0, 0), (1, 0), (2, 1), (0, 3)] {
            let top = p1 + q1;
            let (fa, _, _) = hws_isoscalars(p1, q1, top, 1, top + 1);
            assert_eq!(fa, SqrtRational::one());
        }
    }

    #[test]
    fn lower_row_highest_weight() {
        // (P1,Q1) -> (P1-1,Q1+1) at the child highest weight
        for p1 in 1..6 {
            for q1 in 0..3 {
                let top = p1 + q1;
                let base = IsoscalarQuery {
                    p1,
                    q1,
                    k1: top - 1,
                    l1: 0,
                    quark: QuarkType::U,
                    p: p1 - 1,
                    q: q1 + 1,
                    k: top,
                    l: 0,
                };
                assert_eq!(isoscalar(&base), -s(1, p1 + 1));
                let fs = IsoscalarQuery {
                    k1: top,
                    quark: QuarkType::S,
                    ..base
                };
                assert_eq!(isoscalar(&fs), s(p1, p1 + 1));
            }
        }
    }
}
