#![allow(dead_code)]

use coincidence::geometry::{ConfigurationSpace, Point};
use coincidence::linalg::{self, Scalar};
use coincidence::PLPath;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn space(n: usize, d: usize) -> ConfigurationSpace {
    ConfigurationSpace::new(n, d).unwrap()
}

pub fn hexagon() -> PLPath {
    PLPath::from_rows(
        space(3, 1),
        &[
            &[-1, 0, 1],
            &[0, -1, 1],
            &[1, -1, 0],
            &[1, 0, -1],
            &[0, 1, -1],
            &[-1, 1, 0],
            &[-1, 0, 1],
        ],
    )
    .unwrap()
}

/// Based at the hexagon's first vertex but enclosing nothing.
pub fn hexagon_tail() -> PLPath {
    PLPath::from_rows(space(3, 1), &[&[-1, 0, 1], &[-1, 0, 3], &[-2, 0, 3], &[-1, 0, 1]]).unwrap()
}

pub fn far_triangle() -> PLPath {
    PLPath::from_rows(space(3, 1), &[&[0, 1, 5], &[0, 2, 5], &[1, 2, 6], &[0, 1, 5]]).unwrap()
}

/// Particles 1–3 run the hexagon while particle 4 waits at 10.
pub fn hexagon_n4() -> PLPath {
    PLPath::from_rows(
        space(4, 1),
        &[
            &[-1, 0, 1, 10],
            &[0, -1, 1, 10],
            &[1, -1, 0, 10],
            &[1, 0, -1, 10],
            &[0, 1, -1, 10],
            &[-1, 1, 0, 10],
            &[-1, 0, 1, 10],
        ],
    )
    .unwrap()
}

/// Particles 2–4 run the hexagon while particle 1 waits at −10.
pub fn hexagon_n4_low() -> PLPath {
    PLPath::from_rows(
        space(4, 1),
        &[
            &[-10, -1, 0, 1],
            &[-10, 0, -1, 1],
            &[-10, 1, -1, 0],
            &[-10, 1, 0, -1],
            &[-10, 0, 1, -1],
            &[-10, -1, 1, 0],
            &[-10, -1, 0, 1],
        ],
    )
    .unwrap()
}

const TILTED_SQUARE: [[i64; 2]; 5] = [[2, 1], [-1, 2], [-2, -1], [1, -2], [2, 1]];

/// Planar loop (d = 2, N = 3): particle `mover` circles particle `center` at
/// the origin counterclockwise, the remaining particle parked at `parked`.
pub fn planar_orbit(mover: usize, center: usize, parked: [i64; 2]) -> PLPath {
    let other = (1..=3).find(|&p| p != mover && p != center).unwrap();
    let rows: Vec<Vec<i64>> = TILTED_SQUARE
        .iter()
        .map(|q| {
            let mut row = vec![0i64; 6];
            row[2 * (mover - 1)] = q[0];
            row[2 * (mover - 1) + 1] = q[1];
            row[2 * (other - 1)] = parked[0];
            row[2 * (other - 1) + 1] = parked[1];
            row
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    PLPath::from_rows(space(3, 2), &refs).unwrap()
}

/// The three generator loops of the planar three-particle complement.
pub fn planar_generators() -> Vec<PLPath> {
    vec![
        planar_orbit(1, 2, [50, 50]),
        planar_orbit(1, 3, [-50, 40]),
        planar_orbit(2, 3, [40, -50]),
    ]
}

/// Loop corpus paired with the k of the arrangement they avoid.
pub fn loop_corpus() -> Vec<(&'static str, PLPath, usize)> {
    let hex = hexagon();
    let mut corpus = vec![
        ("hexagon", hex.clone(), 3),
        ("hexagon twice", hex.concat(&hex).unwrap(), 3),
        ("hexagon then tail", hex.concat(&hexagon_tail()).unwrap(), 3),
        ("far triangle", far_triangle(), 3),
        ("four particles, 1-3 circle", hexagon_n4(), 3),
        ("four particles, 2-4 circle", hexagon_n4_low(), 3),
    ];
    for (i, g) in planar_generators().into_iter().enumerate() {
        let name = ["planar 1 around 2", "planar 1 around 3", "planar 2 around 3"][i];
        corpus.push((name, g, 2));
    }
    corpus
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> Scalar {
    let den = rng.gen_range(1..=max_den);
    linalg::ratio(rng.gen_range(-bound * den..=bound * den), den)
}

/// Moves every vertex by at most `1/amp_den` per coordinate, keeping the loop closed.
pub fn perturb(path: &PLPath, rng: &mut ChaCha8Rng, amp_den: i64) -> PLPath {
    let space = path.space();
    let n = path.vertices().len();
    let mut vertices: Vec<Point> = path.vertices()[..n - 1]
        .iter()
        .map(|p| {
            let coords = p
                .coords()
                .iter()
                .map(|x| {
                    let den = amp_den * 97;
                    x + linalg::ratio(rng.gen_range(-97..=97), den)
                })
                .collect();
            Point::new(space, coords).unwrap()
        })
        .collect();
    vertices.push(vertices[0].clone());
    PLPath::new(space, vertices).unwrap()
}
