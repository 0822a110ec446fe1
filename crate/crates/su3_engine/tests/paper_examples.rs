use rep_core::SchurLabel;
use su2_engine::{AmplitudeMap, SqrtRational};
use su3_engine::*;

fn s(n: i64, d: i64) -> SqrtRational {
    SqrtRational::sqrt_frac(n, d)
}

/// Quark letters to qutrit codes, first particle first.
fn key(letters: &str) -> String {
    letters
        .chars()
        .map(|c| match c {
            'u' => '2',
            'd' => '1',
            's' => '0',
            _ => panic!("not a quark letter: {c}"),
        })
        .collect()
}

fn map(scale: SqrtRational, entries: &[(i64, &str)]) -> AmplitudeMap {
    let mut m = AmplitudeMap::new();
    for &(c, k) in entries {
        m.insert(key(k), &scale * &SqrtRational::from_int(c));
    }
    m
}

fn dec(rows: [i64; 3], klm: (i64, i64, i64), path: &[u8]) -> AmplitudeMap {
    decompose_su3(&SchurLabel::su3(rows, klm, path).unwrap()).unwrap()
}

fn negate(m: &AmplitudeMap) -> AmplitudeMap {
    let mut out = AmplitudeMap::new();
    for (k, v) in m.iter() {
        out.insert(k.clone(), -v);
    }
    out
}

const ALL_UDS: [&str; 6] = ["uds", "dus", "usd", "sud", "sdu", "dsu"];

#[test]
fn example_one_symmetric() {
    let want = map(s(1, 6), &ALL_UDS.map(|k| (1, k)));
    assert_eq!(dec([3, 0, 0], (2, 0, 1), &[2, 2]), want);
}

#[test]
fn example_two_mixed_symmetric() {
    let mut want = map(s(1, 3), &[(1, "dus"), (1, "uds")]);
    for k in ["usd", "sud", "dsu", "sdu"] {
        want.insert(key(k), -s(1, 12));
    }
    assert_eq!(dec([2, 1, 0], (2, 0, 1), &[2, 1]), want);
}

#[test]
fn example_three_mixed_antisymmetric() {
    let want = map(
        s(1, 12),
        &[(1, "dsu"), (-1, "sdu"), (1, "sud"), (-1, "usd"), (2, "dus"), (-2, "uds")],
    );
    assert_eq!(dec([2, 1, 0], (1, 1, 1), &[1, 2]), want);
}

#[test]
fn example_four_singlet() {
    let want = map(
        s(1, 6),
        &[(1, "sdu"), (-1, "dsu"), (-1, "sud"), (1, "usd"), (1, "dus"), (-1, "uds")],
    );
    assert_eq!(dec([1, 1, 1], (0, 0, 0), &[1, 0]), want);
}

#[test]
fn first_iterations() {
    let step = |rows: [i64; 3], klm, path: &[u8]| {
        let t = Su3Term::from_label(&SchurLabel::su3(rows, klm, path).unwrap()).unwrap();
        apply_ucg_inv_su3(&t)
            .unwrap()
            .into_iter()
            .map(|t| ((t.k, t.l, t.m), t.out[0], t.amp))
            .collect::<Vec<_>>()
    };
    // symmetric: three branches of equal weight
    assert_eq!(
        step([3, 0, 0], (2, 0, 1), &[2, 2]),
        vec![((1, 0, 0), 2, s(1, 3)), ((1, 0, 1), 1, s(1, 3)), ((2, 0, 1), 0, s(1, 3))]
    );
    assert_eq!(
        step([2, 1, 0], (2, 0, 1), &[2, 1]),
        vec![((1, 0, 0), 2, -s(1, 6)), ((1, 0, 1), 1, -s(1, 6)), ((2, 0, 1), 0, s(2, 3))]
    );
    // singlet: -u + d + s over sqrt(3)
    assert_eq!(
        step([1, 1, 1], (0, 0, 0), &[1, 0]),
        vec![((1, 0, 0), 2, -s(1, 3)), ((1, 0, 1), 1, s(1, 3)), ((1, 1, 1), 0, s(1, 3))]
    );
}

#[test]
fn worked_isoscalars() {
    let q = |p1, q1, k1, l1, quark, p, q, k, l| {
        isoscalar(&IsoscalarQuery { p1, q1, k1, l1, quark, p, q, k, l })
    };
    use QuarkType::{S as Qs, U as Qu};
    // (2,0) -> (3,0)
    assert_eq!(q(2, 0, 2, 0, Qs, 3, 0, 2, 0), s(1, 3));
    assert_eq!(q(2, 0, 1, 0, Qu, 3, 0, 2, 0), s(2, 3));
    // (2,0) -> (1,1)
    assert_eq!(q(2, 0, 2, 0, Qs, 1, 1, 2, 0), s(2, 3));
    assert_eq!(q(2, 0, 1, 0, Qu, 1, 1, 2, 0), -s(1, 3));
    // (0,1) -> (1,1) at (1,1): lower-row parent only
    assert_eq!(q(0, 1, 1, 1, Qs, 1, 1, 1, 1), s(2, 3));
    assert_eq!(q(0, 1, 1, 0, Qu, 1, 1, 1, 1), -s(1, 3));
    assert!(q(0, 1, 0, 1, Qu, 1, 1, 1, 1).is_zero());
    // (0,1) -> (0,0)
    assert_eq!(q(0, 1, 1, 1, Qs, 0, 0, 0, 0), s(1, 3));
    assert_eq!(q(0, 1, 1, 0, Qu, 0, 0, 0, 0), s(2, 3));
}

#[test]
fn worked_rotations() {
    // symmetric step: T' = T - 1/2, equal isospin split
    let r = rotation_matrices(2, 0, 2, 0, 1);
    assert_eq!(r.w(2), Some(0));
    assert_eq!(r.isospin.get(2, 2), &s(1, 2));
    assert_eq!(r.isospin.get(2, 1), &s(1, 2));
    // mixed antisymmetric step: T' = T + 1/2
    let r = rotation_matrices(1, 1, 1, 1, 1);
    assert_eq!(r.w(2), Some(1));
    // degenerate k'' = l'': no lower isospin branch
    let r = rotation_matrices(0, 1, 1, 1, 1);
    assert!(r.isospin.get(2, 2).is_zero() && r.isospin.get(2, 1).is_zero());
}

/// The tensor-product table in the tableau section matches the cascade up to
/// one overall sign per state; the worked examples fix that sign.
#[test]
fn baryon_table() {
    let cases: Vec<([i64; 3], (i64, i64, i64), Vec<u8>, AmplitudeMap)> = vec![
        ([3, 0, 0], (3, 0, 3), vec![2, 2], map(SqrtRational::one(), &[(1, "uuu")])),
        ([3, 0, 0], (2, 0, 2), vec![2, 2], map(s(1, 3), &[(1, "uus"), (1, "usu"), (1, "suu")])),
        ([3, 0, 0], (2, 0, 1), vec![2, 2], map(s(1, 6), &ALL_UDS.map(|k| (1, k)))),
        ([2, 1, 0], (2, 0, 2), vec![2, 1], map(s(1, 6), &[(1, "usu"), (1, "suu"), (-2, "uus")])),
        (
            [2, 1, 0],
            (2, 0, 1),
            vec![2, 1],
            map(
                s(1, 12),
                &[(1, "dsu"), (1, "sdu"), (1, "sud"), (1, "usd"), (-2, "uds"), (-2, "dus")],
            ),
        ),
        (
            [2, 1, 0],
            (1, 1, 1),
            vec![2, 1],
            map(s(1, 4), &[(1, "sud"), (-1, "sdu"), (1, "usd"), (-1, "dsu")]),
        ),
        ([2, 1, 0], (2, 0, 2), vec![1, 2], map(s(1, 2), &[(1, "usu"), (-1, "suu")])),
        (
            [2, 1, 0],
            (2, 0, 1),
            vec![1, 2],
            map(s(1, 4), &[(1, "sud"), (1, "sdu"), (-1, "usd"), (-1, "dsu")]),
        ),
        (
            [2, 1, 0],
            (1, 1, 1),
            vec![1, 2],
            map(
                s(1, 12),
                &[(2, "uds"), (-2, "dus"), (-1, "dsu"), (1, "sdu"), (-1, "sud"), (1, "usd")],
            ),
        ),
        (
            [1, 1, 1],
            (0, 0, 0),
            vec![1, 0],
            map(
                s(1, 6),
                &[(1, "uds"), (1, "dsu"), (1, "sud"), (-1, "sdu"), (-1, "dus"), (-1, "usd")],
            ),
        ),
    ];
    let mut flipped = Vec::new();
    for (rows, klm, path, want) in cases {
        let got = dec(rows, klm, &path);
        if got != want {
            assert_eq!(got, negate(&want), "{rows:?} {klm:?} {path:?}");
            flipped.push((rows, klm, path));
        }
    }
    println!("table states matched up to overall sign: {flipped:?}");
}
