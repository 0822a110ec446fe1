use nalgebra::DVector;
use oracle::*;
use proptest::prelude::*;
use rep_core::{count_paths_to, enumerate_labels, Group, Partition, SchurLabel};
use su2_engine::AmplitudeMap;

fn engine(label: &SchurLabel) -> AmplitudeMap {
    match label.group() {
        Group::Su2 => su2_engine::decompose_su2(label).unwrap(),
        Group::Su3 => su3_engine::decompose_su3(label).unwrap(),
    }
}

fn d_of(g: Group) -> usize {
    match g {
        Group::Su2 => 2,
        Group::Su3 => 3,
    }
}

fn sweep(group: Group, max_n: usize) {
    let d = d_of(group);
    for n in 2..=max_n {
        let labels = enumerate_labels(group, n);
        let states: Vec<DVector<f64>> = labels.iter().map(|l| oracle_state(l).unwrap()).collect();
        for (label, o) in labels.iter().zip(&states) {
            let fid = fidelity(&engine(label), o, d).unwrap();
            assert!((fid - 1.0).abs() < 1e-10, "{label}: fidelity {fid}");
        }
        // a complete orthonormal basis of (C^d)^{⊗n}
        assert_eq!(states.len(), d.pow(n as u32), "n={n}");
        for i in 0..states.len() {
            for j in i..states.len() {
                let g = states[i].dot(&states[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((g - want).abs() < 1e-10, "{} . {} = {g}", labels[i], labels[j]);
            }
        }
    }
}

#[test]
fn su2_oracle_matches_engine() {
    sweep(Group::Su2, 6);
}

#[test]
fn su3_oracle_matches_engine() {
    sweep(Group::Su3, 4);
}

#[test]
fn singlet() {
    let label = SchurLabel::su2([1, 1], 0, &[0]).unwrap();
    let v = oracle_state(&label).unwrap();
    let s = sparse(&v, 2, 2, 1e-12);
    let sign = s[0].1.signum();
    let r = 0.5f64.sqrt();
    assert_eq!(s.len(), 2);
    assert_eq!((s[0].0.as_str(), s[1].0.as_str()), ("01", "10"));
    assert!((s[0].1 * sign - r).abs() < 1e-12 && (s[1].1 * sign + r).abs() < 1e-12);
}

#[test]
fn generators_are_hermitian_and_casimirs_match() {
    for (d, n) in [(2, 3), (3, 2), (3, 3)] {
        let g = build_generators(d, n).unwrap();
        for l in HERMITIAN {
            if let Some(m) = g.get(l) {
                let op = OperatorMatrix { label: l.into(), m: m.clone() };
                assert!(op.is_hermitian(1e-12), "d={d} n={n} {l}");
            }
        }
        if d == 3 {
            let (t3, tp) = (g.get("T3").unwrap(), g.get("T+").unwrap());
            assert!((t3 * tp - tp * t3 - tp).iter().all(|z| z.norm() < 1e-12));
            let (f, h) = (g.get("F").unwrap(), g.get("H").unwrap());
            for label in enumerate_labels(Group::Su3, n) {
                let v = oracle_state(&label).unwrap().map(|x| C64::new(x, 0.0));
                let (p, q) = label.partition.pq();
                let fv = f * &v - &v * C64::new(casimir_f(p, q), 0.0);
                let hv = h * &v - &v * C64::new(casimir_h(p, q), 0.0);
                assert!(fv.norm() < 1e-9 && hv.norm() < 1e-9, "{label}");
            }
        }
    }
}

#[test]
fn multiplicity_matches_path_count() {
    // the J² = j(j+1) eigenspace has dimension (2j+1) g(j) with g(j) = #paths
    for n in 1..=7usize {
        let g = build_generators(2, n).unwrap();
        let j2 = g.get("J2").unwrap().map(|z| z.re);
        let eig = nalgebra::SymmetricEigen::new(j2);
        let mut two_j = n as i64;
        while two_j >= 0 {
            let j = two_j as f64 / 2.0;
            let mult = eig.eigenvalues.iter().filter(|&&x| (x - j * (j + 1.0)).abs() < 1e-8).count();
            let paths = count_paths_to(&Partition::new(&[(n as i64 + two_j) / 2, (n as i64 - two_j) / 2], 2).unwrap());
            assert_eq!(mult, (two_j as usize + 1) * paths as usize, "n={n} 2j={two_j}");
            two_j -= 2;
        }
    }
}

#[test]
fn bad_inputs() {
    assert!(build_generators(2, 0).is_err());
    let v = DVector::zeros(5);
    assert!(fidelity(&AmplitudeMap::default(), &v, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn su2_seven_particles(idx in 0usize..128) {
        let labels = enumerate_labels(Group::Su2, 7);
        let label = &labels[idx % labels.len()];
        let fid = fidelity(&engine(label), &oracle_state(label).unwrap(), 2).unwrap();
        prop_assert!((fid - 1.0).abs() < 1e-10, "{} {}", label, fid);
    }
}
