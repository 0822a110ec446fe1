use nalgebra::{Complex, DMatrix};

use crate::OracleError;

pub type C64 = Complex<f64>;

/// Dense operator on `(C^d)^{⊗n}`; site 1 is the most significant digit.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    pub label: String,
    pub m: DMatrix<C64>,
}

impl OperatorMatrix {
    pub fn is_hermitian(&self, tol: f64) -> bool {
        (&self.m - self.m.adjoint()).iter().all(|z| z.norm() < tol)
    }
}

/// Generators summed over sites, plus the Casimir operators.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub d: usize,
    pub n: usize,
    pub ops: Vec<OperatorMatrix>,
}

impl GeneratorSet {
    pub fn get(&self, label: &str) -> Option<&DMatrix<C64>> {
        self.ops.iter().find(|o| o.label == label).map(|o| &o.m)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.ops.iter().map(|o| o.label.as_str()).collect()
    }
}

/// Labels of the operators that must be hermitian.
pub const HERMITIAN: [&str; 14] =
    ["Jx", "Jy", "Jz", "J2", "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "T3", "Y"];

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// `|i><k|` on one site.
pub(crate) fn unit(d: usize, i: usize, k: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(d, d);
    m[(i, k)] = 1.0;
    m
}

/// `Σ_s I ⊗ ... ⊗ a_s ⊗ ... ⊗ I`.
fn site_sum(a: &DMatrix<C64>, n: usize) -> DMatrix<C64> {
    let d = a.nrows();
    let id = DMatrix::<C64>::identity(d, d);
    let mut total = a.clone();
    let mut dim = d;
    for _ in 1..n {
        total = total.kronecker(&id) + DMatrix::<C64>::identity(dim, dim).kronecker(a);
        dim *= d;
    }
    total
}

fn real(m: &DMatrix<f64>) -> DMatrix<C64> {
    m.map(|x| c(x, 0.0))
}

/// Gell-Mann matrices over `(u, d, s)`, remapped to digit order `s=0, d=1, u=2`.
fn gell_mann() -> Vec<DMatrix<C64>> {
    let r3 = 1.0 / 3f64.sqrt();
    let raw: [[[C64; 3]; 3]; 8] = {
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        let i = c(0.0, 1.0);
        [
            [[z, o, z], [o, z, z], [z, z, z]],
            [[z, -i, z], [i, z, z], [z, z, z]],
            [[o, z, z], [z, -o, z], [z, z, z]],
            [[z, z, o], [z, z, z], [o, z, z]],
            [[z, z, -i], [z, z, z], [i, z, z]],
            [[z, z, z], [z, z, o], [z, o, z]],
            [[z, z, z], [z, z, -i], [z, i, z]],
            [[o * r3, z, z], [z, o * r3, z], [z, z, -o * 2.0 * r3]],
        ]
    };
    // standard row 0 = u = digit 2, row 1 = d = digit 1, row 2 = s = digit 0
    let digit = [2usize, 1, 0];
    raw.iter()
        .map(|g| {
            let mut m = DMatrix::zeros(3, 3);
            for a in 0..3 {
                for b in 0..3 {
                    m[(digit[a], digit[b])] = g[a][b] * 0.5;
                }
            }
            m
        })
        .collect()
}

pub fn build_generators(d: usize, n: usize) -> Result<GeneratorSet, OracleError> {
    if n == 0 {
        return Err(OracleError::Dimension("n must be positive".into()));
    }
    let mut ops = Vec::new();
    let mut push = |label: &str, m: DMatrix<C64>| ops.push(OperatorMatrix { label: label.into(), m });
    match d {
        2 => {
            // digit 1 is spin up
            let jp = site_sum(&real(&unit(2, 1, 0)), n);
            let jm = jp.adjoint();
            let jz = site_sum(&real(&(unit(2, 1, 1) * 0.5 - unit(2, 0, 0) * 0.5)), n);
            let jx = (&jp + &jm) * c(0.5, 0.0);
            let jy = (&jp - &jm) * c(0.0, -0.5);
            let j2 = &jx * &jx + &jy * &jy + &jz * &jz;
            push("J+", jp);
            push("J-", jm);
            push("Jx", jx);
            push("Jy", jy);
            push("Jz", jz);
            push("J2", j2);
        }
        3 => {
            let x: Vec<_> = gell_mann().iter().map(|g| site_sum(g, n)).collect();
            let t3 = x[2].clone();
            let y = &x[7] * c(2.0 / 3f64.sqrt(), 0.0);
            let lift = |i, k| site_sum(&real(&unit(3, i, k)), n);
            let (tp, up, vp) = (lift(2, 1), lift(1, 0), lift(2, 0));
            let t2 = &x[0] * &x[0] + &x[1] * &x[1] + &x[2] * &x[2];
            let f = x.iter().map(|m| m * m).fold(DMatrix::zeros(t3.nrows(), t3.ncols()), |a, b| a + b);
            let h = cubic(n);
            for (a, m) in x.into_iter().enumerate() {
                push(&format!("X{}", a + 1), m);
            }
            push("T3", t3);
            push("Y", y);
            push("T2", t2);
            push("T-", tp.adjoint());
            push("T+", tp);
            push("U-", up.adjoint());
            push("U+", up);
            push("V-", vp.adjoint());
            push("V+", vp);
            push("F", f);
            push("H", h);
        }
        _ => return Err(OracleError::Dimension(format!("d={d} is not 2 or 3"))),
    }
    Ok(GeneratorSet { d, n, ops })
}

/// `½ Σ (A_il A_ki A_lk + A_li A_ik A_kl)` with `A_ik = E_ik - δ_ik N/3`.
fn cubic(n: usize) -> DMatrix<C64> {
    let dim = 3usize.pow(n as u32);
    let id = DMatrix::<f64>::identity(dim, dim);
    let a: Vec<DMatrix<f64>> = (0..9)
        .map(|ik| {
            let (i, k) = (ik / 3, ik % 3);
            let e = site_sum(&real(&unit(3, i, k)), n).map(|z| z.re);
            if i == k {
                e - &id * (n as f64 / 3.0)
            } else {
                e
            }
        })
        .collect();
    let at = |i: usize, k: usize| &a[3 * i + k];
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for i in 0..3 {
        for k in 0..3 {
            for l in 0..3 {
                h += at(i, l) * at(k, i) * at(l, k) + at(l, i) * at(i, k) * at(k, l);
            }
        }
    }
    real(&(h * 0.5))
}
