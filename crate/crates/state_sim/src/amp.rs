use su2_engine::{BigRational, SqrtRational, SurdSum};

/// Amplitude arithmetic used by the simulator.
pub trait Amp: Clone + std::fmt::Debug {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Product with an exact matrix entry.
    fn scaled(&self, x: &SqrtRational) -> Self;
    fn accumulate(&mut self, other: &Self);
    fn to_f64(&self) -> f64;
    /// `Σ |a|²` over the given amplitudes.
    fn norm_squared<'a>(amps: impl Iterator<Item = &'a Self>) -> f64
    where
        Self: 'a;
}

impl Amp for SurdSum {
    fn one() -> Self {
        SurdSum::from_surd(SqrtRational::one())
    }

    fn is_zero(&self) -> bool {
        SurdSum::is_zero(self)
    }

    fn scaled(&self, x: &SqrtRational) -> Self {
        self.scale(x)
    }

    fn accumulate(&mut self, other: &Self) {
        self.add_sum(other)
    }

    fn to_f64(&self) -> f64 {
        SurdSum::to_f64(self)
    }

    fn norm_squared<'a>(amps: impl Iterator<Item = &'a Self>) -> f64 {
        let mut s = SurdSum::new();
        for a in amps {
            s.add_sum(&a.mul(a));
        }
        s.to_f64()
    }
}

impl Amp for f64 {
    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        self.abs() < 1e-15
    }

    fn scaled(&self, x: &SqrtRational) -> Self {
        self * x.to_f64()
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn norm_squared<'a>(amps: impl Iterator<Item = &'a Self>) -> f64 {
        amps.map(|a| a * a).sum()
    }
}

/// Exact `Σ a²` for an exact state.
pub fn exact_norm_squared<'a>(amps: impl Iterator<Item = &'a SurdSum>) -> Option<BigRational> {
    let mut s = SurdSum::new();
    for a in amps {
        s.add_sum(&a.mul(a));
    }
    s.to_rational()
}
