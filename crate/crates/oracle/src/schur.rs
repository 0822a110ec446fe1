use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rep_core::{replay_path, su3_dimension, tty_from_klm, SchurLabel, Weight};
use su2_engine::AmplitudeMap;

use crate::generators::unit;
use crate::OracleError;

/// Eigenvalue matching tolerance.
pub const EIGEN_TOL: f64 = 1e-8;

/// Quadratic Casimir of `(P,Q)`.
pub fn casimir_f(p: i64, q: i64) -> f64 {
    let (p, q) = (p as f64, q as f64);
    (p * p + p * q + q * q) / 3.0 + p + q
}

/// Cubic Casimir of `(P,Q)`.
pub fn casimir_h(p: i64, q: i64) -> f64 {
    let (p, q) = (p as f64, q as f64);
    (p - q) * (2.0 * p + q + 3.0) * (p + 2.0 * q + 3.0) / 9.0
}

/// An invariant subspace: orthonormal columns `basis` in `(C^d)^{⊗k}` and the
/// matrices of the summed `E_ik` restricted to it.
struct Carrier {
    d: usize,
    basis: DMatrix<f64>,
    e: Vec<DMatrix<f64>>,
}

impl Carrier {
    fn single_site(d: usize) -> Self {
        Self {
            d,
            basis: DMatrix::identity(d, d),
            e: (0..d * d).map(|ik| unit(d, ik / d, ik % d)).collect(),
        }
    }

    fn e(&self, i: usize, k: usize) -> &DMatrix<f64> {
        &self.e[i * self.d + k]
    }

    /// Tensor with one more site. The span stays invariant, so restricted
    /// operators compose like the full ones.
    fn extend(&self) -> Self {
        let d = self.d;
        let r = self.basis.ncols();
        let id_d = DMatrix::<f64>::identity(d, d);
        let id_r = DMatrix::<f64>::identity(r, r);
        Self {
            d,
            basis: self.basis.kronecker(&id_d),
            e: (0..d * d)
                .map(|ik| self.e[ik].kronecker(&id_d) + id_r.kronecker(&unit(d, ik / d, ik % d)))
                .collect(),
        }
    }

    /// Keeps the columns spanned by `w` (orthonormal, in carrier coordinates).
    fn restrict(&self, w: &DMatrix<f64>) -> Self {
        let wt = w.transpose();
        Self {
            d: self.d,
            basis: &self.basis * w,
            e: self.e.iter().map(|m| &wt * m * w).collect(),
        }
    }

    fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Orthonormal eigenvectors of the symmetric `op` with eigenvalue `target`.
    fn eigenspace(&self, op: &DMatrix<f64>, target: f64, what: &str) -> Result<DMatrix<f64>, OracleError> {
        let sym = (op + op.transpose()) * 0.5;
        let eig = SymmetricEigen::new(sym);
        let cols: Vec<DVector<f64>> = eig
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &v)| (v - target).abs() < EIGEN_TOL)
            .map(|(j, _)| eig.eigenvectors.column(j).into_owned())
            .collect();
        if cols.is_empty() {
            let mut seen: Vec<f64> = eig.eigenvalues.iter().copied().collect();
            seen.sort_by(f64::total_cmp);
            seen.dedup_by(|a, b| (*a - *b).abs() < EIGEN_TOL);
            return Err(OracleError::EmptyProjection(format!(
                "{what}: no eigenvalue {target} among {seen:?}"
            )));
        }
        Ok(gram_schmidt(&DMatrix::from_columns(&cols)))
    }

    fn project(&self, op: &DMatrix<f64>, target: f64, what: &str) -> Result<Self, OracleError> {
        let w = self.eigenspace(op, target, what)?;
        Ok(self.restrict(&w))
    }

    /// Traceless `A_ik = E_ik - δ_ik N/d` with `N` the particle count.
    fn a(&self, n: usize) -> Vec<DMatrix<f64>> {
        let d = self.d;
        let id = DMatrix::<f64>::identity(self.dim(), self.dim());
        (0..d * d)
            .map(|ik| {
                let (i, k) = (ik / d, ik % d);
                if i == k {
                    self.e[ik].clone() - &id * (n as f64 / d as f64)
                } else {
                    self.e[ik].clone()
                }
            })
            .collect()
    }

    /// `½ Σ A_ik A_ki`.
    fn quadratic(&self, n: usize) -> DMatrix<f64> {
        let d = self.d;
        let a = self.a(n);
        let mut f = DMatrix::zeros(self.dim(), self.dim());
        for i in 0..d {
            for k in 0..d {
                f += &a[i * d + k] * &a[k * d + i];
            }
        }
        f * 0.5
    }

    /// `½ Σ (A_il A_ki A_lk + A_li A_ik A_kl)`.
    fn cubic(&self, n: usize) -> DMatrix<f64> {
        let a = self.a(n);
        let at = |i: usize, k: usize| &a[3 * i + k];
        let mut h = DMatrix::zeros(self.dim(), self.dim());
        for i in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    h += at(i, l) * at(k, i) * at(l, k) + at(l, i) * at(i, k) * at(k, l);
                }
            }
        }
        h * 0.5
    }

    /// `J² = J₋J₊ + Jz² + Jz` (d=2) or `T² = T₋T₊ + T3² + T3` (d=3), with the
    /// upper level of the isospin doublet at digit `d-1`.
    fn isospin_squared(&self) -> DMatrix<f64> {
        let (up, down) = (self.d - 1, self.d - 2);
        let tp = self.e(up, down);
        let t3 = (self.e(up, up) - self.e(down, down)) * 0.5;
        tp.transpose() * tp + &t3 * &t3 + t3
    }
}

fn gram_schmidt(m: &DMatrix<f64>) -> DMatrix<f64> {
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(m.ncols());
    for j in 0..m.ncols() {
        let mut v = m.column(j).into_owned();
        // twice for stability
        for _ in 0..2 {
            for u in &cols {
                let p = u.dot(&v);
                v -= u * p;
            }
        }
        let nrm = v.norm();
        if nrm > 1e-10 {
            cols.push(v / nrm);
        }
    }
    DMatrix::from_columns(&cols)
}

/// Reference state for a label, unique up to a global sign.
///
/// Follows the path: at each step the span is tensored with one more site and
/// projected onto the Casimir eigenspace of the next diagram (`J²` for
/// qubits, `F` then `H` for qutrits). The weight is then fixed by `Jz`, or
/// by `Y`, `T3` and `T²`.
pub fn oracle_state(label: &SchurLabel) -> Result<DVector<f64>, OracleError> {
    let d = label.partition.d();
    let steps = replay_path(&label.path, d).map_err(|e| OracleError::Label(e.to_string()))?;
    let mut carrier = Carrier::single_site(d);
    for (idx, part) in steps.iter().enumerate().skip(1) {
        let n = idx + 1;
        let (p, q) = part.pq();
        let next = carrier.extend();
        carrier = match d {
            2 => {
                let j = p as f64 / 2.0;
                let c = next.project(&next.isospin_squared(), j * (j + 1.0), &format!("step {n} J²"))?;
                check_dim(&c, (p + 1) as usize, n)?;
                c
            }
            _ => {
                let c = next.project(&next.quadratic(n), casimir_f(p, q), &format!("step {n} F"))?;
                let c = c.project(&c.cubic(n), casimir_h(p, q), &format!("step {n} H"))?;
                check_dim(&c, su3_dimension(p, q) as usize, n)?;
                c
            }
        };
    }
    let diag = |c: &Carrier, coeffs: &[f64]| -> DMatrix<f64> {
        let mut m = DMatrix::zeros(c.dim(), c.dim());
        for (i, &x) in coeffs.iter().enumerate() {
            m += c.e(i, i) * x;
        }
        m
    };
    let c = match label.weight {
        Weight::Su2(w) => {
            let two_m = w.two_m() as f64;
            carrier.project(&diag(&carrier, &[-0.5, 0.5]), two_m / 2.0, "Jz")?
        }
        Weight::Su3(w) => {
            let (two_t, two_t3, three_y) =
                tty_from_klm(&w).map_err(|e| OracleError::Label(e.to_string()))?;
            // T± leave a weight space, so T² is formed on the whole irrep and
            // carried through the diagonal projections
            let mut t2 = carrier.isospin_squared();
            let mut c = carrier;
            for (coeffs, target, what) in [
                ([-2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0], three_y as f64 / 3.0, "Y"),
                ([0.0, -0.5, 0.5], two_t3 as f64 / 2.0, "T3"),
            ] {
                let w = c.eigenspace(&diag(&c, &coeffs), target, what)?;
                t2 = w.transpose() * t2 * &w;
                c = c.restrict(&w);
            }
            let t = two_t as f64 / 2.0;
            c.project(&t2, t * (t + 1.0), "T²")?
        }
    };
    if c.dim() != 1 {
        return Err(OracleError::EmptyProjection(format!("weight space has dimension {}", c.dim())));
    }
    Ok(c.basis.column(0).into_owned())
}

fn check_dim(c: &Carrier, want: usize, n: usize) -> Result<(), OracleError> {
    if c.dim() == want {
        Ok(())
    } else {
        Err(OracleError::Dimension(format!(
            "step {n}: projected span has dimension {}, irrep has {want}",
            c.dim()
        )))
    }
}

/// Dense vector of an amplitude map; key digit `i` is particle `i+1`.
pub fn dense(map: &AmplitudeMap, d: usize, n: usize) -> Result<DVector<f64>, OracleError> {
    let mut v = DVector::zeros(d.pow(n as u32));
    for (k, a) in map.iter() {
        if k.len() != n {
            return Err(OracleError::Dimension(format!("key {k} has length {}, want {n}", k.len())));
        }
        let mut idx = 0;
        for ch in k.chars() {
            let digit = ch.to_digit(10).filter(|&x| (x as usize) < d).ok_or_else(|| {
                OracleError::Dimension(format!("key {k} has a digit outside 0..{d}"))
            })?;
            idx = idx * d + digit as usize;
        }
        v[idx] = a.to_f64();
    }
    Ok(v)
}

/// `|<oracle|engine>|`.
pub fn fidelity(engine: &AmplitudeMap, oracle: &DVector<f64>, d: usize) -> Result<f64, OracleError> {
    let mut n = 0usize;
    let mut dim = 1usize;
    while dim < oracle.len() {
        dim *= d;
        n += 1;
    }
    if dim != oracle.len() {
        return Err(OracleError::Dimension(format!("oracle length {} is not a power of {d}", oracle.len())));
    }
    let e = dense(engine, d, n)?;
    Ok(e.dot(oracle).abs())
}

/// Key/amplitude list of a dense vector, dropping entries below `tol`.
pub fn sparse(v: &DVector<f64>, d: usize, n: usize, tol: f64) -> Vec<(String, f64)> {
    let mut out = Vec::new();
    for (idx, &x) in v.iter().enumerate() {
        if x.abs() < tol {
            continue;
        }
        let mut digits = vec![0u8; n];
        let mut r = idx;
        for slot in digits.iter_mut().rev() {
            *slot = (r % d) as u8;
            r /= d;
        }
        out.push((digits.iter().map(|&b| char::from(b'0' + b)).collect(), x));
    }
    out
}
