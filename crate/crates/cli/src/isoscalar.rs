use rep_core::ReprStateSU3;
use serde::Serialize;
use su2_engine::{BigRational, SurdSum};
use su3_engine::{child_irrep, isoscalar, isoscalar_matrix, unshift, Channel, IsoscalarQuery, QuarkType};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoscalarRow {
    pub child: (i64, i64),
    pub entry: u8,
    pub k: i64,
    pub l: i64,
    pub quark: &'static str,
    pub parent: (i64, i64),
    pub sign: i8,
    pub num: u64,
    pub den: u64,
    pub value: f64,
}

impl IsoscalarRow {
    pub fn text(&self) -> String {
        let s = if self.sign < 0 { "-" } else { "+" };
        format!(
            "({},{}) p={} k={} l={}  {} ({},{})  {s}sqrt({}/{})  {:+.12}",
            self.child.0, self.child.1, self.entry, self.k, self.l, self.quark, self.parent.0, self.parent.1, self.num,
            self.den, self.value
        )
    }
}

fn kl_pairs(p: i64, q: i64) -> impl Iterator<Item = (i64, i64)> {
    (q..=p + q).rev().flat_map(move |k| (0..=q).map(move |l| (k, l)))
}

/// Every non-zero factor of `(P1,Q1) ⊗ (1,0)`, by child entry, child state,
/// quark and parent state.
pub fn isoscalar_table(p1: i64, q1: i64) -> Vec<IsoscalarRow> {
    let mut rows = Vec::new();
    for entry in [2u8, 1, 0] {
        let Some((p, q)) = child_irrep(p1, q1, entry) else {
            continue;
        };
        for (k, l) in kl_pairs(p, q) {
            for quark in [QuarkType::U, QuarkType::S] {
                for (k1, l1) in kl_pairs(p1, q1) {
                    let f = isoscalar(&IsoscalarQuery { p1, q1, k1, l1, quark, p, q, k, l });
                    if f.is_zero() {
                        continue;
                    }
                    let e = state_sim::ReportEntry::new("", &f);
                    rows.push(IsoscalarRow {
                        child: (p, q),
                        entry,
                        k,
                        l,
                        quark: if quark == QuarkType::U { "u" } else { "s" },
                        parent: (k1, l1),
                        sign: e.sign,
                        num: e.num,
                        den: e.den,
                        value: e.value,
                    });
                }
            }
        }
    }
    rows
}

fn row_valid(p1: i64, q1: i64, entry: u8, k2: i64, l2: i64) -> bool {
    let Some((p, q)) = child_irrep(p1, q1, entry) else {
        return false;
    };
    let (k, l) = unshift(entry, k2, l2);
    ReprStateSU3::in_bounds(p, q, k, l, k)
}

/// Exact orthonormality of the 3×3 factor matrices of one parent: rows with a
/// valid child are orthonormal, columns with a valid parent are unit vectors.
/// Returns one message per violation.
pub fn orthonormality_failures(p1: i64, q1: i64) -> Vec<String> {
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    let mut bad = Vec::new();
    for k2 in 0..=p1 + q1 + 1 {
        for l2 in 0..=q1 + 1 {
            let m = isoscalar_matrix(p1, q1, k2, l2);
            let rows: Vec<u8> = (0..3).filter(|&e| row_valid(p1, q1, e, k2, l2)).collect();
            for &a in &rows {
                for &b in &rows {
                    let want = if a == b { &one } else { &zero };
                    if m.row_dot(a, b).to_rational().as_ref() != Some(want) {
                        bad.push(format!("({p1},{q1}) k''={k2} l''={l2}: rows {a},{b}"));
                    }
                }
            }
            if rows.is_empty() {
                continue;
            }
            for c in Channel::ALL {
                let (k1, l1) = c.parent(k2, l2);
                if !ReprStateSU3::in_bounds(p1, q1, k1, l1, k1) {
                    continue;
                }
                let mut s = SurdSum::new();
                for &e in &rows {
                    let x = m.get(e, c.code());
                    s.add(&(x * x));
                }
                if s.to_rational().as_ref() != Some(&one) {
                    bad.push(format!("({p1},{q1}) k''={k2} l''={l2}: column {c:?}"));
                }
            }
        }
    }
    bad
}
