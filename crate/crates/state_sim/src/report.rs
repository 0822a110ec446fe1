use num_traits::ToPrimitive;
use serde::Serialize;
use su2_engine::{AmplitudeMap, SqrtRational};

/// One line of an amplitude report: `sign * sqrt(num/den)`.
///
/// `key` is the qudit string, particle 1 first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub key: String,
    pub sign: i8,
    pub num: u64,
    pub den: u64,
    pub value: f64,
}

impl ReportEntry {
    pub fn new(key: &str, amp: &SqrtRational) -> Self {
        let r = amp.radicand();
        Self {
            key: key.to_string(),
            sign: amp.sign(),
            num: r.numer().to_u64().unwrap_or(u64::MAX),
            den: r.denom().to_u64().unwrap_or(u64::MAX),
            value: amp.to_f64(),
        }
    }

    /// `|key>  -sqrt(1/6)  -0.408248290464`
    pub fn text(&self) -> String {
        let s = if self.sign < 0 { "-" } else { "+" };
        let root = if self.den == 1 {
            format!("sqrt({})", self.num)
        } else {
            format!("sqrt({}/{})", self.num, self.den)
        };
        format!("|{}>  {s}{root}  {:+.12}", self.key, self.value)
    }
}

pub fn report(map: &AmplitudeMap) -> Vec<ReportEntry> {
    map.iter().map(|(k, v)| ReportEntry::new(k, v)).collect()
}

/// Float-only report line, used in float simulation mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FloatEntry {
    pub key: String,
    pub value: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders() {
        let e = ReportEntry::new("01", &-SqrtRational::sqrt_frac(1, 2));
        assert_eq!((e.sign, e.num, e.den), (-1, 1, 2));
        assert_eq!(e.text(), "|01>  -sqrt(1/2)  -0.707106781187");
    }
}
