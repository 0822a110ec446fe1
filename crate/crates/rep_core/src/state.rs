use crate::error::RepError;

/// SU(3) irrep state `|P,Q; k,l,m>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReprStateSU3 {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub l: i64,
    pub m: i64,
}

impl ReprStateSU3 {
    pub fn new(p: i64, q: i64, k: i64, l: i64, m: i64) -> Result<Self, RepError> {
        let s = Self { p, q, k, l, m };
        s.check()?;
        Ok(s)
    }

    /// Whether `(k,l,m)` lies inside the label bounds of `(P,Q)`.
    pub fn in_bounds(p: i64, q: i64, k: i64, l: i64, m: i64) -> bool {
        p >= 0 && q >= 0 && q <= k && k <= p + q && 0 <= l && l <= q && l <= m && m <= k
    }

    pub fn check(&self) -> Result<(), RepError> {
        if Self::in_bounds(self.p, self.q, self.k, self.l, self.m) {
            Ok(())
        } else {
            Err(RepError::OutOfBounds(format!(
                "(P,Q;k,l,m)=({},{};{},{},{}) needs Q<=k<=P+Q, 0<=l<=Q, l<=m<=k",
                self.p, self.q, self.k, self.l, self.m
            )))
        }
    }

    /// The padded triple `(k+l, l+m, k+m)`.
    pub fn padded_triple(&self) -> (i64, i64, i64) {
        (self.k + self.l, self.l + self.m, self.k + self.m)
    }
}

/// SU(2) irrep state with `two_j = 2j` and `q = j+m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReprStateSU2 {
    pub two_j: i64,
    pub q: i64,
}

impl ReprStateSU2 {
    pub fn new(two_j: i64, q: i64) -> Result<Self, RepError> {
        if two_j < 0 || q < 0 || q > two_j {
            return Err(RepError::OutOfBounds(format!(
                "(2j,q)=({two_j},{q}) needs 0<=q<=2j"
            )));
        }
        Ok(Self { two_j, q })
    }

    /// `2m = 2q - 2j`.
    pub fn two_m(&self) -> i64 {
        2 * self.q - self.two_j
    }
}

pub fn su3_dimension(p: i64, q: i64) -> i64 {
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

/// All states of `(P,Q)`, ordered by decreasing `k`, then increasing `l`, then decreasing `m`.
pub fn enumerate_states(p: i64, q: i64) -> Vec<ReprStateSU3> {
    let mut out = Vec::with_capacity(su3_dimension(p, q).max(0) as usize);
    for k in (q..=p + q).rev() {
        for l in 0..=q {
            for m in (l..=k).rev() {
                out.push(ReprStateSU3 { p, q, k, l, m });
            }
        }
    }
    out
}

/// `(2T, 2T3, 3Y)` of a state.
pub fn tty_from_klm(s: &ReprStateSU3) -> Result<(i64, i64, i64), RepError> {
    s.check()?;
    Ok((
        s.k - s.l,
        2 * s.m - s.k - s.l,
        3 * (s.k + s.l) - 2 * (s.p + 2 * s.q),
    ))
}

/// Inverse of [`tty_from_klm`].
pub fn klm_from_tty(
    p: i64,
    q: i64,
    two_t: i64,
    two_t3: i64,
    three_y: i64,
) -> Result<ReprStateSU3, RepError> {
    let not_state = |reason: &str| RepError::NotAState {
        p,
        q,
        reason: reason.to_string(),
    };
    let kl3 = three_y + 2 * (p + 2 * q);
    if kl3 % 3 != 0 {
        return Err(not_state("k+l is not an integer"));
    }
    let kl = kl3 / 3;
    if (kl + two_t) % 2 != 0 || (kl + two_t3) % 2 != 0 {
        return Err(not_state("k, l or m is not an integer"));
    }
    let k = (kl + two_t) / 2;
    let l = (kl - two_t) / 2;
    let m = (kl + two_t3) / 2;
    if !ReprStateSU3::in_bounds(p, q, k, l, m) {
        return Err(not_state("quantum numbers outside the label bounds"));
    }
    Ok(ReprStateSU3 { p, q, k, l, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(su3_dimension(1, 1), 8);
        assert_eq!(su3_dimension(0, 0), 1);
        assert_eq!(enumerate_states(3, 0).len(), 10);
    }

    #[test]
    fn fundamental_states() {
        let ks: Vec<_> = enumerate_states(1, 0)
            .iter()
            .map(|s| (s.k, s.l, s.m))
            .collect();
        assert_eq!(ks, vec![(1, 0, 1), (1, 0, 0), (0, 0, 0)]);
        assert_eq!(enumerate_states(0, 0)[0], ReprStateSU3::new(0, 0, 0, 0, 0).unwrap());
        assert!(enumerate_states(1, 1).contains(&ReprStateSU3::new(1, 1, 2, 0, 2).unwrap()));
    }

    #[test]
    fn tty_values() {
        let u = ReprStateSU3::new(1, 0, 1, 0, 1).unwrap();
        assert_eq!(tty_from_klm(&u).unwrap(), (1, 1, 1));
        let hws = ReprStateSU3::new(1, 1, 2, 0, 2).unwrap();
        assert_eq!(tty_from_klm(&hws).unwrap(), (2, 2, 0));
        let s = klm_from_tty(1, 0, 0, 0, -2).unwrap();
        assert_eq!((s.k, s.l, s.m), (0, 0, 0));
        let oct = klm_from_tty(1, 1, 2, 0, 0).unwrap();
        assert_eq!((oct.k, oct.l, oct.m), (2, 0, 1));
        assert!(klm_from_tty(1, 0, 0, 0, -1).is_err());
        assert!(klm_from_tty(0, 0, 2, 0, 0).is_err());
    }

    #[test]
    fn su2_bounds() {
        assert!(ReprStateSU2::new(1, 2).is_err());
        assert_eq!(ReprStateSU2::new(2, 0).unwrap().two_m(), -2);
    }
}
