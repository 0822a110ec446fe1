use std::collections::BTreeMap;

use rep_core::{ReprStateSU3, SchurLabel, Weight};
use su2_engine::{AmplitudeMap, SqrtRational, SurdSum};

use crate::rotation::{rotation_matrices, Channel};
use crate::Su3Error;

/// Quark code of a single-particle weight: `u = 2`, `d = 1`, `s = 0`.
pub fn quark_code(k: i64, l: i64, m: i64) -> Option<u8> {
    match (k, l, m) {
        (1, 0, 1) => Some(2),
        (1, 0, 0) => Some(1),
        (0, 0, 0) => Some(0),
        _ => None,
    }
}

/// Partial qutrit decomposition: unconsumed labels plus emitted quarks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su3Term {
    pub lam: [i64; 3],
    pub k: i64,
    pub l: i64,
    pub m: i64,
    /// Unconsumed path entries; the last one is consumed next.
    pub path: Vec<u8>,
    /// Emitted quark codes in emission order.
    pub out: Vec<u8>,
    pub amp: SqrtRational,
}

impl Su3Term {
    pub fn from_label(label: &SchurLabel) -> Result<Self, Su3Error> {
        let Weight::Su3(w) = label.weight else {
            return Err(Su3Error::WrongGroup);
        };
        let r = label.partition.rows();
        Ok(Self {
            lam: [r[0], r[1], r[2]],
            k: w.k,
            l: w.l,
            m: w.m,
            path: label.path.clone(),
            out: Vec::new(),
            amp: SqrtRational::one(),
        })
    }

    pub fn pq(&self) -> (i64, i64) {
        (self.lam[0] - self.lam[1], self.lam[1] - self.lam[2])
    }

    /// Basis string once the path is consumed: first particle first.
    pub fn key(&self) -> Result<String, Su3Error> {
        if !self.path.is_empty() || self.lam != [1, 0, 0] {
            return Err(Su3Error::Malformed(format!(
                "term not fully consumed: λ={:?}, {} entries left",
                self.lam,
                self.path.len()
            )));
        }
        let q0 = quark_code(self.k, self.l, self.m).ok_or_else(|| {
            Su3Error::Malformed(format!("({},{},{}) is not a quark", self.k, self.l, self.m))
        })?;
        let mut s = String::with_capacity(self.out.len() + 1);
        s.push(char::from(b'0' + q0));
        for &q in self.out.iter().rev() {
            s.push(char::from(b'0' + q));
        }
        Ok(s)
    }
}

/// One inverse CG step on qutrits: up to five branches.
pub fn apply_ucg_inv_su3(term: &Su3Term) -> Result<Vec<Su3Term>, Su3Error> {
    let (p_child, q_child) = term.pq();
    ReprStateSU3::new(p_child, q_child, term.k, term.l, term.m)
        .map_err(|e| Su3Error::InvalidState(e.to_string()))?;
    let mut path = term.path.clone();
    let p = path
        .pop()
        .ok_or_else(|| Su3Error::Malformed("no path entry left".into()))?;
    if p > 2 {
        return Err(Su3Error::Malformed(format!("path entry {p} is not a qutrit value")));
    }
    let mut lam = term.lam;
    lam[2 - p as usize] -= 1;
    if lam[2] < 0 || lam[1] < lam[2] || lam[0] < lam[1] {
        return Err(Su3Error::Malformed(format!("parent diagram {lam:?} is not a partition")));
    }
    let (p1, q1) = (lam[0] - lam[1], lam[1] - lam[2]);
    let shift = i64::from(p == 0);
    let (k2, l2, m2) = (term.k + shift, term.l + shift, term.m + shift);
    let rot = rotation_matrices(p1, q1, k2, l2, m2);
    let mut out = Vec::with_capacity(5);
    for c in Channel::ALL {
        let (k1, l1) = c.parent(k2, l2);
        let quarks: &[u8] = if c == Channel::S { &[0] } else { &[2, 1] };
        for &q in quarks {
            let a = rot.amplitude(p, c, q);
            if a.is_zero() {
                continue;
            }
            let m1 = m2 - i64::from(q == 2);
            ReprStateSU3::new(p1, q1, k1, l1, m1).map_err(|e| {
                Su3Error::Malformed(format!("non-zero branch to invalid parent: {e}"))
            })?;
            let mut emitted = term.out.clone();
            emitted.push(q);
            out.push(Su3Term {
                lam,
                k: k1,
                l: l1,
                m: m1,
                path: path.clone(),
                out: emitted,
                amp: &term.amp * &a,
            });
        }
    }
    Ok(out)
}

/// Full inverse Schur transform of an SU(3) label.
pub fn decompose_su3(label: &SchurLabel) -> Result<AmplitudeMap, Su3Error> {
    let mut terms = vec![Su3Term::from_label(label)?];
    for _ in 0..label.path.len() {
        let mut next = Vec::with_capacity(terms.len() * 3);
        for t in &terms {
            next.extend(apply_ucg_inv_su3(t)?);
        }
        terms = next;
    }
    let mut sums: BTreeMap<String, SurdSum> = BTreeMap::new();
    for t in terms {
        sums.entry(t.key()?).or_default().add(&t.amp);
    }
    AmplitudeMap::from_sums(sums).map_err(Su3Error::Malformed)
}
