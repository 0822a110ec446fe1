use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rep_core::ReprStateSU3;
use su2_engine::{BigRational, SqrtRational};

use crate::Su3Error;

/// `sqrt(num/den)`, or 0 when the ratio is not positive or `den = 0`.
pub(crate) fn root(num: i64, den: i64) -> SqrtRational {
    if den == 0 {
        return SqrtRational::zero();
    }
    root_q(BigRational::new(num.into(), den.into()))
}

pub(crate) fn root_q(r: BigRational) -> SqrtRational {
    if r.is_positive() {
        SqrtRational::new(1, r)
    } else {
        SqrtRational::zero()
    }
}

fn factorial(n: i64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `sqrt(prod num_i! / prod den_i!)`, or 0 if any argument is negative.
pub(crate) fn factorial_root(num: &[i64], den: &[i64]) -> SqrtRational {
    if num.iter().chain(den).any(|&a| a < 0) {
        return SqrtRational::zero();
    }
    let n: BigInt = num.iter().map(|&a| factorial(a)).product();
    let d: BigInt = den.iter().map(|&a| factorial(a)).product();
    if n.is_zero() {
        return SqrtRational::zero();
    }
    SqrtRational::new(1, BigRational::new(n, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderOp {
    TPlus,
    TMinus,
    UPlus,
    UMinus,
    VPlus,
    VMinus,
}

impl LadderOp {
    pub const ALL: [LadderOp; 6] = [
        LadderOp::TPlus,
        LadderOp::TMinus,
        LadderOp::UPlus,
        LadderOp::UMinus,
        LadderOp::VPlus,
        LadderOp::VMinus,
    ];

    pub fn adjoint(self) -> Self {
        match self {
            LadderOp::TPlus => LadderOp::TMinus,
            LadderOp::TMinus => LadderOp::TPlus,
            LadderOp::UPlus => LadderOp::UMinus,
            LadderOp::UMinus => LadderOp::UPlus,
            LadderOp::VPlus => LadderOp::VMinus,
            LadderOp::VMinus => LadderOp::VPlus,
        }
    }
}

/// Action of a ladder operator on `|P,Q;k,l,m>`.
///
/// Returns at most two terms; targets outside the irrep are dropped.
pub fn ladder_apply(
    op: LadderOp,
    s: &ReprStateSU3,
) -> Result<Vec<(ReprStateSU3, SqrtRational)>, Su3Error> {
    s.check().map_err(|e| Su3Error::InvalidState(e.to_string()))?;
    let ReprStateSU3 { p, q, k, l, m } = *s;
    let pq = p + q;
    let terms: Vec<((i64, i64, i64), SqrtRational)> = match op {
        LadderOp::TPlus => vec![((k, l, m + 1), root((k - m) * (m - l + 1), 1))],
        LadderOp::TMinus => vec![((k, l, m - 1), root((k - m + 1) * (m - l), 1))],
        LadderOp::VPlus => vec![
            (
                (k + 1, l, m + 1),
                root(
                    (k + 2) * (m - l + 1) * (k - q + 1) * (pq - k),
                    (k - l + 1) * (k - l + 2),
                ),
            ),
            (
                (k, l + 1, m + 1),
                root((l + 1) * (k - m) * (q - l) * (pq - l + 1), (k - l) * (k - l + 1)),
            ),
        ],
        LadderOp::VMinus => vec![
            (
                (k - 1, l, m - 1),
                root((k + 1) * (m - l) * (k - q) * (pq - k + 1), (k - l) * (k - l + 1)),
            ),
            (
                (k, l - 1, m - 1),
                root(
                    l * (k - m + 1) * (q - l + 1) * (pq - l + 2),
                    (k - l + 1) * (k - l + 2),
                ),
            ),
        ],
        LadderOp::UPlus => vec![
            (
                (k + 1, l, m),
                root(
                    (k + 2) * (k - m + 1) * (k - q + 1) * (pq - k),
                    (k - l + 1) * (k - l + 2),
                ),
            ),
            (
                (k, l + 1, m),
                -root((m - l) * (l + 1) * (q - l) * (pq - l + 1), (k - l) * (k - l + 1)),
            ),
        ],
        LadderOp::UMinus => vec![
            (
                (k - 1, l, m),
                root((k + 1) * (k - m) * (k - q) * (pq - k + 1), (k - l) * (k - l + 1)),
            ),
            (
                (k, l - 1, m),
                -root(
                    l * (m - l + 1) * (q - l + 1) * (pq - l + 2),
                    (k - l + 1) * (k - l + 2),
                ),
            ),
        ],
    };
    Ok(terms
        .into_iter()
        .filter(|((k, l, m), c)| !c.is_zero() && ReprStateSU3::in_bounds(p, q, *k, *l, *m))
        .map(|((k, l, m), c)| (ReprStateSU3 { p, q, k, l, m }, c))
        .collect())
}

/// Ladder matrix elements on `T = T3` states (`k = m`), as magnitudes.
///
/// The second `U±` terms enter the ladder action with a minus sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderCoeffs {
    pub u1p: SqrtRational,
    pub u2p: SqrtRational,
    pub u1m: SqrtRational,
    pub u2m: SqrtRational,
    pub v1p: SqrtRational,
    pub v2p: SqrtRational,
    pub v1m: SqrtRational,
    pub v2m: SqrtRational,
}

impl LadderCoeffs {
    pub fn new(p: i64, q: i64, k: i64, l: i64) -> Self {
        let pq = p + q;
        Self {
            u1p: root((k + 2) * (k - q + 1) * (pq - k), (k - l + 2) * (k - l + 1)),
            u2p: root((l + 1) * (q - l) * (pq - l + 1), k - l + 1),
            u1m: SqrtRational::zero(),
            u2m: root(l * (q - l + 1) * (pq - l + 2), k - l + 2),
            v1p: root((k + 2) * (k - q + 1) * (pq - k), k - l + 2),
            v2p: SqrtRational::zero(),
            v1m: root((k + 1) * (k - q) * (pq - k + 1), k - l + 1),
            v2m: root(l * (q - l + 1) * (pq - l + 2), (k - l + 2) * (k - l + 1)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(p: i64, q: i64, k: i64, l: i64, m: i64) -> ReprStateSU3 {
        ReprStateSU3::new(p, q, k, l, m).unwrap()
    }

    #[test]
    fn quark_triplet() {
        let u = st(1, 0, 1, 0, 1);
        assert!(ladder_apply(LadderOp::TPlus, &u).unwrap().is_empty());
        assert_eq!(
            ladder_apply(LadderOp::TMinus, &u).unwrap(),
            vec![(st(1, 0, 1, 0, 0), SqrtRational::one())]
        );
        // V- takes u to s, U- takes d to s
        assert_eq!(
            ladder_apply(LadderOp::VMinus, &u).unwrap(),
            vec![(st(1, 0, 0, 0, 0), SqrtRational::one())]
        );
        let d = st(1, 0, 1, 0, 0);
        assert_eq!(
            ladder_apply(LadderOp::UMinus, &d).unwrap(),
            vec![(st(1, 0, 0, 0, 0), SqrtRational::one())]
        );
    }

    #[test]
    fn highest_weight_is_annihilated() {
        for (p, q) in [(1, 0), (2, 1), (0, 3), (3, 3)] {
            let hws = st(p, q, p + q, 0, p + q);
            for op in [LadderOp::TPlus, LadderOp::UMinus, LadderOp::VPlus] {
                assert!(ladder_apply(op, &hws).unwrap().is_empty(), "{op:?} ({p},{q})");
            }
        }
    }

    #[test]
    fn coeffs_vanish_at_k_eq_m() {
        let c = LadderCoeffs::new(2, 1, 2, 1);
        assert!(c.u1m.is_zero() && c.v2p.is_zero());
        assert_eq!(factorial_root(&[3], &[1, 2]), SqrtRational::sqrt_frac(3, 1));
        assert!(factorial_root(&[-1], &[]).is_zero());
    }
}
