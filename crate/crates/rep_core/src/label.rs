use std::fmt;
use std::str::FromStr;

use crate::error::RepError;
use crate::partition::{partitions, Partition};
use crate::row_of_entry;
use crate::state::{enumerate_states, ReprStateSU2, ReprStateSU3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Su2,
    Su3,
}

impl Group {
    pub fn d(self) -> usize {
        match self {
            Group::Su2 => 2,
            Group::Su3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Su2 => "su2",
            Group::Su3 => "su3",
        }
    }
}

impl FromStr for Group {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "su2" => Ok(Group::Su2),
            "su3" => Ok(Group::Su3),
            other => Err(RepError::Parse(format!("unknown group `{other}` (want su2 or su3)"))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Su2(ReprStateSU2),
    Su3(ReprStateSU3),
}

/// Target eigenstate: partition, weight inside the irrep, and the path of
/// box additions (`path[i]` places box `i+2`; the first box is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchurLabel {
    pub partition: Partition,
    pub weight: Weight,
    pub path: Vec<u8>,
}

impl SchurLabel {
    /// Validates the path replay and weight bounds against the partition.
    pub fn new(partition: Partition, weight: Weight, path: Vec<u8>) -> Result<Self, RepError> {
        let d = partition.d();
        if !matches!((&weight, d), (Weight::Su2(_), 2) | (Weight::Su3(_), 3)) {
            return Err(RepError::InconsistentLabel(
                "weight type does not match the partition's row count".into(),
            ));
        }
        if path.len() as i64 + 1 != partition.n() {
            return Err(RepError::InconsistentLabel(format!(
                "path has {} entries but the partition has {} boxes",
                path.len(),
                partition.n()
            )));
        }
        let steps = replay_path(&path, d)?;
        if steps.last() != Some(&partition) {
            return Err(RepError::InconsistentLabel(format!(
                "path ends at {} instead of {}",
                steps.last().expect("replay is never empty"),
                partition
            )));
        }
        let (pp, qq) = partition.pq();
        match weight {
            Weight::Su2(w) => {
                if w.two_j != pp {
                    return Err(RepError::InconsistentLabel(format!(
                        "2j={} but lambda1-lambda2={pp}",
                        w.two_j
                    )));
                }
            }
            Weight::Su3(w) => {
                if (w.p, w.q) != (pp, qq) {
                    return Err(RepError::InconsistentLabel(format!(
                        "weight is in ({},{}) but the partition gives ({pp},{qq})",
                        w.p, w.q
                    )));
                }
                w.check()?;
            }
        }
        Ok(Self {
            partition,
            weight,
            path,
        })
    }

    pub fn su2(rows: [i64; 2], q: i64, path: &[u8]) -> Result<Self, RepError> {
        let p = Partition::new(&rows, 2)?;
        let w = ReprStateSU2::new(rows[0] - rows[1], q)?;
        Self::new(p, Weight::Su2(w), path.to_vec())
    }

    pub fn su3(rows: [i64; 3], klm: (i64, i64, i64), path: &[u8]) -> Result<Self, RepError> {
        let p = Partition::new(&rows, 3)?;
        let (pp, qq) = p.pq();
        let w = ReprStateSU3::new(pp, qq, klm.0, klm.1, klm.2)?;
        Self::new(p, Weight::Su3(w), path.to_vec())
    }

    pub fn group(&self) -> Group {
        match self.weight {
            Weight::Su2(_) => Group::Su2,
            Weight::Su3(_) => Group::Su3,
        }
    }

    pub fn n(&self) -> usize {
        self.path.len() + 1
    }
}

impl fmt::Display for SchurLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|p| p.to_string()).collect();
        match self.weight {
            Weight::Su2(w) => write!(f, "su2:{};{};{}", self.partition, w.q, path.join(",")),
            Weight::Su3(w) => write!(
                f,
                "su3:{};{},{},{};{}",
                self.partition,
                w.k,
                w.l,
                w.m,
                path.join(",")
            ),
        }
    }
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>, RepError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| RepError::Parse(format!("{what}: `{}` is not an integer", t.trim())))
        })
        .collect()
}

impl FromStr for SchurLabel {
    type Err = RepError;

    /// Grammar: `su2:(l1,l2);q;p1,...` or `su3:(l1,l2,l3);k,l,m;p1,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (g, rest) = s
            .split_once(':')
            .ok_or_else(|| RepError::Parse("missing `group:` prefix".into()))?;
        let group: Group = g.parse()?;
        let fields: Vec<&str> = rest.split(';').collect();
        if fields.len() != 3 {
            return Err(RepError::Parse(format!(
                "expected 3 `;`-separated fields after the group, found {}",
                fields.len()
            )));
        }
        let part = fields[0].trim();
        let inner = part
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| RepError::Parse(format!("partition `{part}` must be parenthesised")))?;
        let rows = parse_ints(inner, "partition")?;
        if rows.len() != group.d() {
            return Err(RepError::Parse(format!(
                "{group} partition needs {} rows, got {}",
                group.d(),
                rows.len()
            )));
        }
        let weight = parse_ints(fields[1], "weight")?;
        let path: Vec<u8> = parse_ints(fields[2], "path")?
            .into_iter()
            .map(|p| {
                u8::try_from(p)
                    .ok()
                    .filter(|&p| (p as usize) < group.d())
                    .ok_or_else(|| RepError::Parse(format!("path entry {p} out of range")))
            })
            .collect::<Result<_, _>>()?;
        match (group, weight.as_slice()) {
            (Group::Su2, [q]) => SchurLabel::su2([rows[0], rows[1]], *q, &path),
            (Group::Su3, [k, l, m]) => SchurLabel::su3([rows[0], rows[1], rows[2]], (*k, *l, *m), &path),
            _ => Err(RepError::Parse(format!(
                "{group} weight needs {} integers",
                if group == Group::Su2 { 1 } else { 3 }
            ))),
        }
    }
}

/// Partitions after each box addition, starting from the single box.
pub fn replay_path(path: &[u8], d: usize) -> Result<Vec<Partition>, RepError> {
    let mut cur = Partition::new(&[1], d)?;
    let mut out = vec![cur.clone()];
    for (i, &p) in path.iter().enumerate() {
        let step = i + 1;
        let row = row_of_entry(p, d).ok_or_else(|| RepError::IllegalStep {
            step,
            entry: p,
            reason: format!("entry must be below {d}"),
        })?;
        cur = cur.with_box(row).ok_or_else(|| RepError::IllegalStep {
            step,
            entry: p,
            reason: format!("row {} would exceed the row above it", row + 1),
        })?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// `(n_u, n_d, n_s)` of an SU(3) label.
pub fn quark_content(label: &SchurLabel) -> Result<(i64, i64, i64), RepError> {
    let Weight::Su3(w) = label.weight else {
        return Err(RepError::InconsistentLabel("quark content needs an su3 label".into()));
    };
    let lam3 = label.partition.rows()[2];
    let n_u = w.m + lam3;
    let n_d = w.k + w.l - w.m + lam3;
    let n_s = label.partition.n() - n_u - n_d;
    if n_u < 0 || n_d < 0 || n_s < 0 {
        return Err(RepError::InconsistentLabel(format!(
            "negative quark count ({n_u},{n_d},{n_s})"
        )));
    }
    Ok((n_u, n_d, n_s))
}

fn paths_to(p: &Partition, d: usize) -> Vec<Vec<u8>> {
    if p.n() <= 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for row in 0..d {
        if let Some(prev) = p.without_box(row) {
            let entry = (d - 1 - row) as u8;
            for mut path in paths_to(&prev, d) {
                path.push(entry);
                out.push(path);
            }
        }
    }
    out
}

/// Every valid label with `n` particles; there are `d^n` of them.
pub fn enumerate_labels(group: Group, n: usize) -> Vec<SchurLabel> {
    let d = group.d();
    let mut out = Vec::new();
    for part in partitions(n as i64, d) {
        let (pp, qq) = part.pq();
        let mut paths = paths_to(&part, d);
        paths.sort();
        for path in paths {
            match group {
                Group::Su2 => {
                    for q in (0..=pp).rev() {
                        let w = Weight::Su2(ReprStateSU2 { two_j: pp, q });
                        out.push(SchurLabel::new(part.clone(), w, path.clone()).unwrap());
                    }
                }
                Group::Su3 => {
                    for s in enumerate_states(pp, qq) {
                        out.push(SchurLabel::new(part.clone(), Weight::Su3(s), path.clone()).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_examples() {
        let rows = |v: Vec<Partition>| v.iter().map(|p| p.rows().to_vec()).collect::<Vec<_>>();
        assert_eq!(
            rows(replay_path(&[1, 1], 2).unwrap()),
            vec![vec![1, 0], vec![2, 0], vec![3, 0]]
        );
        assert_eq!(
            rows(replay_path(&[1, 0], 3).unwrap()),
            vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]
        );
        match replay_path(&[0, 0], 2) {
            Err(RepError::IllegalStep { step, .. }) => assert_eq!(step, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quark_counts() {
        let singlet = SchurLabel::su3([1, 1, 1], (0, 0, 0), &[1, 0]).unwrap();
        assert_eq!(quark_content(&singlet).unwrap(), (1, 1, 1));
        let top = SchurLabel::su3([3, 0, 0], (3, 0, 3), &[2, 2]).unwrap();
        assert_eq!(quark_content(&top).unwrap(), (3, 0, 0));
        let mixed = SchurLabel::su3([2, 1, 0], (2, 1, 2), &[2, 1]).unwrap();
        assert_eq!(quark_content(&mixed).unwrap(), (2, 1, 0));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["su2:(2,1);1;1,0", "su3:(1,1,1);0,0,0;1,0", "su2:(1,0);0;"] {
            let l: SchurLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        let err = "su2:(2,1);1;0,0".parse::<SchurLabel>().unwrap_err();
        assert!(err.to_string().starts_with("replay_path"), "{err}");
        assert!("su3:(2,1);0;1".parse::<SchurLabel>().is_err());
        assert!("su2:(2,1);5;1,0".parse::<SchurLabel>().is_err());
    }

    #[test]
    fn label_counts() {
        for n in 1..=6 {
            assert_eq!(enumerate_labels(Group::Su2, n).len(), 1 << n);
        }
        for n in 1..=4 {
            assert_eq!(enumerate_labels(Group::Su3, n).len(), 3usize.pow(n as u32));
        }
    }
}
