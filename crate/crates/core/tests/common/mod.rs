#![allow(dead_code)]

use segre_strata::rootdata::{root_system_of, Group};

/// Window used for the golden GL(3) figure files at g = 7, δ = 0.
pub const GOLDEN_WINDOW: &str = "-12:2,-2:12";

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Every constructible group of semisimple rank 1..=max.
pub fn groups_up_to_rank(max: usize) -> Vec<Group> {
    let mut out = Vec::new();
    for k in 1..=max as u32 {
        let r = k + 1;
        out.extend([Group::gl(r), Group::sl(r), Group::pgl(r)].into_iter().flatten());
        for m in 2..r {
            if r % m == 0 {
                out.extend(Group::sl_mod(r, m));
            }
        }
        out.extend(
            [
                Group::sp(2 * k),
                Group::psp(2 * k),
                Group::so(2 * k + 1),
                Group::spin(2 * k + 1),
            ]
            .into_iter()
            .flatten(),
        );
        if k >= 3 {
            out.extend([Group::so(2 * k), Group::spin(2 * k)].into_iter().flatten());
        }
    }
    out.retain(|g| g.semisimple_rank() <= max);
    out
}

/// Simple roots as columns of an ambient-rank × rank matrix.
pub fn simple_root_matrix(g: &Group) -> Vec<Vec<f64>> {
    let rs = root_system_of(g);
    let rows = rs.ambient_rank;
    (0..rows)
        .map(|i| rs.simple_roots.iter().map(|a| a.coords()[i] as f64).collect())
        .collect()
}

/// Coordinates of `v` in the simple-root basis, by Gaussian elimination.
pub fn solve_coefficients(simple: &[Vec<f64>], v: &[i64]) -> Vec<i64> {
    let cols = simple[0].len();
    let mut m: Vec<Vec<f64>> = simple
        .iter()
        .zip(v)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b as f64);
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(best) = (pivot_row..m.len()).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())) else {
            break;
        };
        if m[best][c].abs() < 1e-9 {
            continue;
        }
        m.swap(pivot_row, best);
        let p = m[pivot_row][c];
        for x in m[pivot_row].iter_mut() {
            *x /= p;
        }
        for r in 0..m.len() {
            if r != pivot_row {
                let f = m[r][c];
                if f != 0.0 {
                    let pivot = m[pivot_row].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot) {
                        *x -= f * p;
                    }
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    assert_eq!(pivots.len(), cols, "simple roots are not independent");
    for row in &m[pivot_row..] {
        assert!(row[cols].abs() < 1e-9, "vector outside the root span");
    }
    let mut out = vec![0i64; cols];
    for (r, &c) in pivots.iter().enumerate() {
        let x = m[r][cols];
        assert!((x - x.round()).abs() < 1e-9, "non-integral coefficient {x}");
        out[c] = x.round() as i64;
    }
    out
}
