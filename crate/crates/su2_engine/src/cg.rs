use std::collections::BTreeMap;

use rep_core::{SchurLabel, Weight};
use thiserror::Error;

use crate::amplitude::AmplitudeMap;
use crate::sqrt_rational::{SqrtRational, SurdSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Su2Error {
    #[error("parity mismatch: 2j={two_j}, 2m={two_m}")]
    Parity { two_j: i64, two_m: i64 },
    #[error("|m| > j: 2j={two_j}, 2m={two_m}")]
    Range { two_j: i64, two_m: i64 },
    #[error("invalid child state |j'={two_j_child}/2, m={two_m}/2>")]
    InvalidChild { two_j_child: i64, two_m: i64 },
    #[error("rotation angle undefined: {0}")]
    Angle(String),
    #[error("invalid intermediate label: {0}")]
    Label(String),
    #[error("label is not an su2 label")]
    WrongGroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// `J± |j,m> = sqrt((j∓m)(j±m+1)) |j,m±1>`.
pub fn ladder_coeff(two_j: i64, two_m: i64, dir: Direction) -> Result<SqrtRational, Su2Error> {
    if (two_j - two_m).rem_euclid(2) != 0 {
        return Err(Su2Error::Parity { two_j, two_m });
    }
    if two_m.abs() > two_j {
        return Err(Su2Error::Range { two_j, two_m });
    }
    let (a, b) = match dir {
        Direction::Raise => (two_j - two_m, two_j + two_m + 2),
        Direction::Lower => (two_j + two_m, two_j - two_m + 2),
    };
    Ok(SqrtRational::sqrt_frac(a * b, 4))
}

/// Doubled spins in `j1 ⊗ j2`, ascending.
pub fn clebsch_series(two_j1: i64, two_j2: i64) -> Vec<i64> {
    let lo = (two_j1 - two_j2).abs();
    (lo..=two_j1 + two_j2).step_by(2).collect()
}

/// Coefficients coupling spin `j` with a spin-½ into `|j±½, m>`.
///
/// `|j+½,m> = α |j,m-½>|↑> + β |j,m+½>|↓>`, and the lower multiplet uses
/// `(α', β') = (-β, α)`.
pub fn jplus_half_coeffs(
    two_j: i64,
    two_m_child: i64,
    upper: bool,
) -> Result<(SqrtRational, SqrtRational), Su2Error> {
    let two_j_child = if upper { two_j + 1 } else { two_j - 1 };
    if two_j < 0
        || two_j_child < 0
        || two_m_child.abs() > two_j_child
        || (two_j_child - two_m_child).rem_euclid(2) != 0
    {
        return Err(Su2Error::InvalidChild {
            two_j_child,
            two_m: two_m_child,
        });
    }
    let den = 2 * (two_j + 1);
    let alpha = SqrtRational::sqrt_frac(two_j + two_m_child + 1, den);
    let beta = SqrtRational::sqrt_frac(two_j - two_m_child + 1, den);
    Ok(if upper { (alpha, beta) } else { (-beta, alpha) })
}

/// `cos θ` of the inverse CG rotation from the child labels `(λ1, λ2, q)` and path bit `p`.
pub fn ucg_inv_angle(lam1: i64, lam2: i64, q: i64, p: u8) -> Result<SqrtRational, Su2Error> {
    let not_p = 1 - i64::from(p);
    ucg_inv_angle_primed(lam1 - i64::from(p), lam2 - not_p, q + not_p)
}

/// Same angle from the registers after the λ/q updates: `sqrt(q̃ / (λ1' - λ2' + 1))`.
pub fn ucg_inv_angle_primed(lam1p: i64, lam2p: i64, q_tilde: i64) -> Result<SqrtRational, Su2Error> {
    let den = lam1p - lam2p + 1;
    if den <= 0 {
        return Err(Su2Error::Angle(format!("λ1'-λ2'+1 = {den} must be positive")));
    }
    if q_tilde < 0 || q_tilde > den {
        return Err(Su2Error::Angle(format!("q̃ = {q_tilde} outside [0, {den}]")));
    }
    Ok(SqrtRational::sqrt_frac(q_tilde, den))
}

/// The qubit rotation: returns `[(p', amplitude)]` for input bit `p` and `cos θ`.
///
/// `|1> -> c|1> + s|0>`, `|0> -> c|0> - s|1>`.
pub fn rotate_bit(p: u8, cos: &SqrtRational) -> [(u8, SqrtRational); 2] {
    let sin = cos.complement().expect("cos θ lies in [0, 1]");
    if p == 1 {
        [(1, cos.clone()), (0, sin)]
    } else {
        [(0, cos.clone()), (1, -sin)]
    }
}

/// Partial decomposition: labels not yet consumed plus the bits already emitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su2Term {
    pub lam1: i64,
    pub lam2: i64,
    pub q: i64,
    /// Unconsumed path entries; the last one is consumed next.
    pub path: Vec<u8>,
    /// Emitted bits in emission order (`p'_{n-1}` first).
    pub out: Vec<u8>,
    pub amp: SqrtRational,
}

impl Su2Term {
    pub fn from_label(label: &SchurLabel) -> Result<Self, Su2Error> {
        let Weight::Su2(w) = label.weight else {
            return Err(Su2Error::WrongGroup);
        };
        let rows = label.partition.rows();
        Ok(Self {
            lam1: rows[0],
            lam2: rows[1],
            q: w.q,
            path: label.path.clone(),
            out: Vec::new(),
            amp: SqrtRational::one(),
        })
    }

    /// Basis string `i0 i1 ... i_{n-1}` once the path is consumed.
    pub fn key(&self) -> String {
        let mut s = self.q.to_string();
        for b in self.out.iter().rev() {
            s.push(char::from(b'0' + b));
        }
        s
    }
}

/// One inverse CG step: consumes the last path bit.
pub fn apply_ucg_inv(term: &Su2Term) -> Result<Vec<Su2Term>, Su2Error> {
    let mut path = term.path.clone();
    let p = path
        .pop()
        .ok_or_else(|| Su2Error::Label("no path entry left".into()))?;
    let lam1p = term.lam1 - i64::from(p);
    let lam2p = term.lam2 - 1 + i64::from(p);
    if lam2p < 0 || lam1p < lam2p {
        return Err(Su2Error::Label(format!(
            "parent diagram ({lam1p},{lam2p}) is not a partition"
        )));
    }
    let q_tilde = term.q + 1 - i64::from(p);
    let cos = ucg_inv_angle_primed(lam1p, lam2p, q_tilde)?;
    let mut out = Vec::with_capacity(2);
    for (bit, c) in rotate_bit(p, &cos) {
        if c.is_zero() {
            continue;
        }
        let q = q_tilde - i64::from(bit);
        if q < 0 || q > lam1p - lam2p {
            return Err(Su2Error::Label(format!(
                "q'={q} outside [0, {}] with non-zero amplitude",
                lam1p - lam2p
            )));
        }
        let mut emitted = term.out.clone();
        emitted.push(bit);
        out.push(Su2Term {
            lam1: lam1p,
            lam2: lam2p,
            q,
            path: path.clone(),
            out: emitted,
            amp: &term.amp * &c,
        });
    }
    Ok(out)
}

/// Full inverse Schur transform of an SU(2) label.
pub fn decompose_su2(label: &SchurLabel) -> Result<AmplitudeMap, Su2Error> {
    let mut terms = vec![Su2Term::from_label(label)?];
    for _ in 0..label.path.len() {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for t in &terms {
            next.extend(apply_ucg_inv(t)?);
        }
        terms = next;
    }
    let mut sums: BTreeMap<String, SurdSum> = BTreeMap::new();
    for t in terms {
        sums.entry(t.key()).or_default().add(&t.amp);
    }
    AmplitudeMap::from_sums(sums).map_err(Su2Error::Label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> SqrtRational {
        SqrtRational::sqrt_frac(n, d)
    }

    #[test]
    fn ladder_examples() {
        assert!(ladder_coeff(1, 1, Direction::Raise).unwrap().is_zero());
        assert_eq!(ladder_coeff(2, 0, Direction::Lower).unwrap(), s(2, 1));
        assert_eq!(ladder_coeff(1, -1, Direction::Raise).unwrap(), SqrtRational::one());
        assert!(matches!(
            ladder_coeff(1, 0, Direction::Raise),
            Err(Su2Error::Parity { .. })
        ));
    }

    #[test]
    fn series() {
        assert_eq!(clebsch_series(1, 1), vec![0, 2]);
        assert_eq!(clebsch_series(2, 2), vec![0, 2, 4]);
        assert_eq!(clebsch_series(1, 0), vec![1]);
        assert_eq!(clebsch_series(3, 2), vec![1, 3, 5]);
        // dimension count: (2j1+1)(2j2+1) = sum (2j+1)
        for (a, b) in [(3, 2), (4, 1), (5, 5)] {
            let total: i64 = clebsch_series(a, b).iter().map(|j| j + 1).sum();
            assert_eq!(total, (a + 1) * (b + 1));
        }
    }

    #[test]
    fn half_coefficients() {
        assert_eq!(jplus_half_coeffs(1, 0, true).unwrap(), (s(1, 2), s(1, 2)));
        assert_eq!(jplus_half_coeffs(1, 0, false).unwrap(), (-s(1, 2), s(1, 2)));
        assert_eq!(
            jplus_half_coeffs(3, 4, true).unwrap(),
            (SqrtRational::one(), SqrtRational::zero())
        );
        assert!(jplus_half_coeffs(0, 0, false).is_err());
        assert!(jplus_half_coeffs(1, 1, true).is_err());
    }

    #[test]
    fn angles() {
        assert_eq!(ucg_inv_angle(1, 1, 0, 0).unwrap(), s(1, 2));
        assert_eq!(ucg_inv_angle(2, 1, 1, 0).unwrap(), s(2, 3));
        assert_eq!(ucg_inv_angle(2, 1, 1, 1).unwrap(), SqrtRational::one());
        assert!(ucg_inv_angle_primed(0, 1, 0).is_err());
    }

    #[test]
    fn singlet_step() {
        let label = SchurLabel::su2([1, 1], 0, &[0]).unwrap();
        let t = Su2Term::from_label(&label).unwrap();
        let out = apply_ucg_inv(&t).unwrap();
        let got: Vec<_> = out.iter().map(|t| (t.lam1, t.lam2, t.q, t.out.clone(), t.amp.clone())).collect();
        assert_eq!(
            got,
            vec![(1, 0, 1, vec![0], s(1, 2)), (1, 0, 0, vec![1], -s(1, 2))]
        );
    }
}
