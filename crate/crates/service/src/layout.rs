//! Deterministic vertex coordinates in the unit square.

use icgame::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Graphs larger than this are placed on a circle instead of relaxed.
pub const SPRING_LIMIT: usize = 400;

const ITERATIONS: usize = 300;

/// Force-directed placement from a seeded start, scaled into `[0.05, 0.95]`.
/// The same graph and seed always give the same coordinates.
pub fn layout(g: &Graph, seed: u64) -> Vec<[f64; 2]> {
    let n = g.n();
    match n {
        0 => return Vec::new(),
        1 => return vec![[0.5, 0.5]],
        _ => {}
    }
    if n > SPRING_LIMIT {
        return circle(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<[f64; 2]> = (0..n)
        .map(|_| [rng.random::<f64>(), rng.random::<f64>()])
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let k = (1.0 / n as f64).sqrt();
    let mut temp = 0.1;
    let cooling = temp / (ITERATIONS as f64 + 1.0);
    for _ in 0..ITERATIONS {
        let mut disp = vec![[0.0f64; 2]; n];
        for i in 0..n {
            for j in i + 1..n {
                let dx = pos[i][0] - pos[j][0];
                let dy = pos[i][1] - pos[j][1];
                let d2 = (dx * dx + dy * dy).max(1e-9);
                let f = k * k / d2;
                disp[i][0] += dx * f;
                disp[i][1] += dy * f;
                disp[j][0] -= dx * f;
                disp[j][1] -= dy * f;
            }
        }
        for &(a, b) in &edges {
            let dx = pos[a][0] - pos[b][0];
            let dy = pos[a][1] - pos[b][1];
            let d = (dx * dx + dy * dy).sqrt().max(1e-9);
            let f = d / k;
            disp[a][0] -= dx * f;
            disp[a][1] -= dy * f;
            disp[b][0] += dx * f;
            disp[b][1] += dy * f;
        }
        for (p, d) in pos.iter_mut().zip(&disp) {
            let len = (d[0] * d[0] + d[1] * d[1]).sqrt().max(1e-9);
            let step = len.min(temp);
            p[0] += d[0] / len * step;
            p[1] += d[1] / len * step;
        }
        temp -= cooling;
    }
    normalize(&mut pos);
    pos
}

fn circle(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            [0.5 + 0.45 * t.cos(), 0.5 + 0.45 * t.sin()]
        })
        .collect()
}

fn normalize(pos: &mut [[f64; 2]]) {
    for axis in 0..2 {
        let lo = pos.iter().map(|p| p[axis]).fold(f64::INFINITY, f64::min);
        let hi = pos
            .iter()
            .map(|p| p[axis])
            .fold(f64::NEG_INFINITY, f64::max);
        let span = (hi - lo).max(1e-9);
        for p in pos.iter_mut() {
            p[axis] = 0.05 + 0.9 * (p[axis] - lo) / span;
        }
    }
}
