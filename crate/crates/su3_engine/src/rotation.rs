use su2_engine::{SqrtRational, SurdSum};

use crate::isoscalar::{child_irrep, isoscalar, IsoscalarQuery, QuarkType};
use crate::ladder::root;

/// Parent channel of one inverse CG step, stored as a qutrit value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Channel {
    /// `s` quark, parent isospin `T`.
    S = 0,
    /// `u`/`d` quark with parent isospin `T + 1/2` (lower-row parent).
    Rho = 1,
    /// `u`/`d` quark with parent isospin `T - 1/2`.
    Sigma = 2,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Sigma, Channel::Rho, Channel::S];

    pub fn from_code(c: u8) -> Option<Self> {
        match c {
            0 => Some(Channel::S),
            1 => Some(Channel::Rho),
            2 => Some(Channel::Sigma),
            _ => None,
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    /// Parent `(k1, l1)` for this channel given the shifted child `(k'', l'')`.
    pub fn parent(self, k2: i64, l2: i64) -> (i64, i64) {
        match self {
            Channel::Sigma => (k2 - 1, l2),
            Channel::Rho => (k2, l2 - 1),
            Channel::S => (k2, l2),
        }
    }

    pub fn quark(self) -> QuarkType {
        if self == Channel::S {
            QuarkType::S
        } else {
            QuarkType::U
        }
    }
}

/// Child `(k, l)` for path entry `p` from the shifted `(k'', l'')`.
pub fn unshift(p: u8, k2: i64, l2: i64) -> (i64, i64) {
    if p == 0 {
        (k2 - 1, l2 - 1)
    } else {
        (k2, l2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Rho,
    Sigma,
    /// `R(F)`: rows path entry `p`, columns [`Channel`].
    Isoscalar,
    /// `R(θ)`: rows [`Channel`], columns quark code (`s=0, d=1, u=2`).
    Isospin,
}

/// 3×3 exact matrix indexed by qutrit values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMatrix3 {
    pub flavor: Flavor,
    pub m: [[SqrtRational; 3]; 3],
}

impl RotationMatrix3 {
    fn zeros(flavor: Flavor) -> Self {
        Self {
            flavor,
            m: std::array::from_fn(|_| std::array::from_fn(|_| SqrtRational::zero())),
        }
    }

    pub fn get(&self, r: u8, c: u8) -> &SqrtRational {
        &self.m[r as usize][c as usize]
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &RotationMatrix3) -> [[SurdSum; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut s = SurdSum::new();
                for k in 0..3 {
                    s.add(&(&self.m[i][k] * &other.m[k][j]));
                }
                s
            })
        })
    }

    /// Dot product of two rows.
    pub fn row_dot(&self, a: u8, b: u8) -> SurdSum {
        let mut s = SurdSum::new();
        for k in 0..3 {
            s.add(&(&self.m[a as usize][k] * &self.m[b as usize][k]));
        }
        s
    }
}

/// `R(F)` for parent irrep `(P1,Q1)` at shifted child labels `(k'', l'')`.
///
/// Rows for entries whose child irrep or state does not exist are zero.
pub fn isoscalar_matrix(p1: i64, q1: i64, k2: i64, l2: i64) -> RotationMatrix3 {
    let mut out = RotationMatrix3::zeros(Flavor::Isoscalar);
    for p in 0..3u8 {
        let Some((cp, cq)) = child_irrep(p1, q1, p) else {
            continue;
        };
        let (k, l) = unshift(p, k2, l2);
        for c in Channel::ALL {
            let (k1, l1) = c.parent(k2, l2);
            out.m[p as usize][c.code() as usize] = isoscalar(&IsoscalarQuery {
                p1,
                q1,
                k1,
                l1,
                quark: c.quark(),
                p: cp,
                q: cq,
                k,
                l,
            });
        }
    }
    out
}

/// Isospin rotation `(α, β)` from the parent registers after the channel
/// update: `α = sqrt((m'' - l1)/(k1 - l1 + 1))`, `β = sqrt((k1 + 1 - m'')/(k1 - l1 + 1))`.
pub fn isospin_angle(k1: i64, l1: i64, m2: i64) -> (SqrtRational, SqrtRational) {
    let den = k1 - l1 + 1;
    (root(m2 - l1, den), root(k1 + 1 - m2, den))
}

/// `R(θ)` at shifted child labels `(k'', l'', m'')`.
pub fn isospin_matrix(k2: i64, l2: i64, m2: i64) -> RotationMatrix3 {
    let mut out = RotationMatrix3::zeros(Flavor::Isospin);
    out.m[0][0] = SqrtRational::one();
    let (k1, l1) = Channel::Sigma.parent(k2, l2);
    let (a, b) = isospin_angle(k1, l1, m2);
    out.m[2][2] = a;
    out.m[2][1] = b;
    let (k1, l1) = Channel::Rho.parent(k2, l2);
    let (a, b) = isospin_angle(k1, l1, m2);
    out.m[1][2] = -b;
    out.m[1][1] = a;
    out
}

/// Both factors of one step plus the per-flavor matrices `ρ̂`, `σ̂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRotation {
    pub iso: RotationMatrix3,
    pub isospin: RotationMatrix3,
    pub rho: RotationMatrix3,
    pub sigma: RotationMatrix3,
}

impl StepRotation {
    /// Isospin selector for entry `p`: 1 for `T' = T + 1/2`, 0 for `T' = T - 1/2`,
    /// `None` when both or neither u-type channel is open.
    pub fn w(&self, p: u8) -> Option<u8> {
        let rho = !self.iso.get(p, Channel::Rho.code()).is_zero();
        let sigma = !self.iso.get(p, Channel::Sigma.code()).is_zero();
        match (rho, sigma) {
            (true, false) => Some(1),
            (false, true) => Some(0),
            _ => None,
        }
    }

    /// Amplitude for entry `p` to reach channel `c` and emit quark code `q`.
    pub fn amplitude(&self, p: u8, c: Channel, q: u8) -> SqrtRational {
        self.iso.get(p, c.code()) * self.isospin.get(c.code(), q)
    }
}

/// Step matrices for parent irrep `(P1,Q1)` at shifted labels `(k'', l'', m'')`.
pub fn rotation_matrices(p1: i64, q1: i64, k2: i64, l2: i64, m2: i64) -> StepRotation {
    let iso = isoscalar_matrix(p1, q1, k2, l2);
    let isospin = isospin_matrix(k2, l2, m2);
    let restricted = |flavor: Flavor, keep: Channel| {
        let mut r = RotationMatrix3::zeros(flavor);
        for p in 0..3 {
            for q in 0..3 {
                let mut s = SurdSum::new();
                for c in [keep, Channel::S] {
                    s.add(&(iso.get(p, c.code()) * isospin.get(c.code(), q)));
                }
                r.m[p as usize][q as usize] = s.to_surd().expect("entries of disjoint support");
            }
        }
        r
    };
    StepRotation {
        rho: restricted(Flavor::Rho, Channel::Rho),
        sigma: restricted(Flavor::Sigma, Channel::Sigma),
        iso,
        isospin,
    }
}
