//! Random surgery presentations and brute-force lattice oracles shared by
//! the integration tests.

#![allow(dead_code, clippy::needless_range_loop)]

use lensknot::surgery::{KnotData, PushoffSign, SurgeryComponent, SurgeryPresentation};
use num_integer::Integer;
use rand::Rng;

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// `Q_ii = α_i`, `Q_ij = β_j lk_ij`, rebuilt from the raw presentation data.
pub fn q_matrix(p: &SurgeryPresentation<i64>) -> Vec<Vec<i128>> {
    let c = p.components();
    let n = c.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        c[i].alpha as i128
                    } else {
                        (c[j].beta * p.linking()[i][j]) as i128
                    }
                })
                .collect()
        })
        .collect()
}

/// Cramer numerators `det(Q with column i replaced by l)` and `det Q`.
pub fn cramer(q: &[Vec<i128>], l: &[i64]) -> (Vec<i128>, i128) {
    let d = det(q);
    let numerators = (0..q.len())
        .map(|i| {
            let replaced: Vec<Vec<i128>> = q
                .iter()
                .zip(l)
                .map(|(row, li)| {
                    let mut r = row.clone();
                    r[i] = *li as i128;
                    r
                })
                .collect();
            det(&replaced)
        })
        .collect();
    (numerators, d)
}

/// For invertible `Q`: whether `o·l` lies in the integer column span.
pub fn in_span(numerators: &[i128], d: i128, o: i128) -> bool {
    numerators.iter().all(|x| (o * x) % d == 0)
}

/// Least `o ≥ 1` with `o·l ∈ Q Z^n`, found by trying `o = 1, 2, ...`.
pub fn brute_force_order(p: &SurgeryPresentation<i64>) -> i128 {
    let q = q_matrix(p);
    let (num, d) = cramer(&q, &p.knot().lk);
    assert_ne!(d, 0, "oracle needs an invertible Q");
    (1..=d.abs())
        .find(|&o| in_span(&num, d, o))
        .expect("o = |det Q| always works")
}

/// Checks that `o` works and that no `o/p` does, for every prime `p | o`.
/// Valid orders form the multiples of the minimal one, so this certifies
/// minimality without scanning.
pub fn certify_order(p: &SurgeryPresentation<i64>, o: i128) -> bool {
    let q = q_matrix(p);
    let (num, d) = cramer(&q, &p.knot().lk);
    if d == 0 || !in_span(&num, d, o) {
        return false;
    }
    let mut rest = o;
    let mut f = 2;
    while rest > 1 {
        if rest % f == 0 {
            if in_span(&num, d, o / f) {
                return false;
            }
            while rest % f == 0 {
                rest /= f;
            }
        }
        f += 1;
    }
    true
}

/// A presentation with at most three components, entries in `[−4, 4]`,
/// `det Q ≠ 0`, and `sl = tb ∓ rot` for the given push-off.
pub fn random_presentation<R: Rng>(rng: &mut R, pushoff: PushoffSign) -> SurgeryPresentation<i64> {
    loop {
        let n = rng.gen_range(0..=3);
        let components: Vec<SurgeryComponent<i64>> = (0..n)
            .map(|_| loop {
                let alpha: i64 = rng.gen_range(-4..=4);
                let beta: i64 = rng.gen_range(1..=4);
                if alpha.gcd(&beta) == 1 {
                    break SurgeryComponent {
                        alpha,
                        beta,
                        rot: rng.gen_range(-4..=4),
                    };
                }
            })
            .collect();
        let mut linking = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-4..=4);
                linking[i][j] = v;
                linking[j][i] = v;
            }
        }
        let tb: i64 = rng.gen_range(-4..=4);
        let rot: i64 = rng.gen_range(-4..=4);
        let knot = KnotData {
            lk: (0..n).map(|_| rng.gen_range(-4..=4)).collect(),
            tb,
            rot,
            sl: tb - pushoff.sign() * rot,
        };
        let p = SurgeryPresentation::new(components, linking, knot).expect("valid by construction");
        if det(&q_matrix(&p)) != 0 {
            return p;
        }
    }
}
