#![allow(dead_code)]

use ivtrnn::sets::{IvnsElement, IvnsSet, SvnsElement, SvnsSet};
use ivtrnn::{Channel, Heights, Ivtrnn, Level, Trapezoid, Trnn, WeightVector};
use rand::Rng;

pub fn trapezoid(rng: &mut impl Rng) -> Trapezoid {
    let mut v: [f64; 4] = std::array::from_fn(|_| rng.random());
    v.sort_by(f64::total_cmp);
    Trapezoid::new(v[0], v[1], v[2], v[3]).unwrap()
}

pub fn triangle(rng: &mut impl Rng) -> Trapezoid {
    let mut v: [f64; 3] = std::array::from_fn(|_| rng.random());
    v.sort_by(f64::total_cmp);
    Trapezoid::new(v[0], v[1], v[1], v[2]).unwrap()
}

pub fn heights(rng: &mut impl Rng) -> Heights {
    if rng.random_bool(0.5) {
        Heights::default()
    } else {
        Heights::new(rng.random(), rng.random(), rng.random()).unwrap()
    }
}

pub fn trnn(rng: &mut impl Rng) -> Trnn {
    let (t, i, f) = (trapezoid(rng), trapezoid(rng), trapezoid(rng));
    Trnn::with_heights(t, i, f, heights(rng)).unwrap()
}

pub fn ivtrnn(rng: &mut impl Rng) -> Ivtrnn {
    Ivtrnn::new(trnn(rng), trnn(rng))
}

pub fn triangular_ivtrnn(rng: &mut impl Rng) -> Ivtrnn {
    let mut level = || Trnn::new(triangle(rng), triangle(rng), triangle(rng));
    Ivtrnn::new(level(), level())
}

/// Positive weights summing to 1 (up to rounding).
pub fn strict_weights(rng: &mut impl Rng, n: usize) -> WeightVector {
    let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.01..1.0)).collect();
    let total: f64 = raw.iter().sum();
    WeightVector::strict(raw.iter().map(|w| w / total).collect()).unwrap()
}

pub fn relaxed_weights(rng: &mut impl Rng, n: usize) -> WeightVector {
    WeightVector::relaxed((0..n).map(|_| rng.random_range(0.01..1.0)).collect()).unwrap()
}

/// Replaces one component, or `None` if that breaks ordering or range.
pub fn with_component(n: &Ivtrnn, level: Level, channel: Channel, index: usize, value: f64) -> Option<Ivtrnn> {
    let t = n.level(level);
    let traps = Channel::ALL.map(|ch| {
        let mut c = t.channel(ch).components();
        if ch == channel {
            c[index] = value;
        }
        Trapezoid::new(c[0], c[1], c[2], c[3])
    });
    let [tt, ii, ff] = traps;
    let replaced = Trnn::with_heights(tt.ok()?, ii.ok()?, ff.ok()?, t.heights()).ok()?;
    Some(match level {
        Level::Lower => Ivtrnn::new(replaced, n.upper),
        Level::Upper => Ivtrnn::new(n.lower, replaced),
    })
}

/// Every component in [0, 1] and non-decreasing, heights in [0, 1].
pub fn is_valid(n: &Ivtrnn) -> bool {
    Level::BOTH.iter().all(|&l| {
        let t = n.level(l);
        let h = t.heights();
        Channel::ALL.iter().all(|&ch| {
            let [a, b, c, d] = t.channel(ch).components();
            Trapezoid::new(a, b, c, d).is_ok()
        }) && [h.truth, h.indeterminacy, h.falsity].iter().all(|v| (0.0..=1.0).contains(v))
    })
}

pub const POINTS: [&str; 3] = ["x1", "x2", "x3"];

pub fn svns_set(rng: &mut impl Rng) -> SvnsSet {
    SvnsSet::new(POINTS.map(|p| (p, SvnsElement::new(rng.random(), rng.random(), rng.random()).unwrap()))).unwrap()
}

fn pair(rng: &mut impl Rng) -> [f64; 2] {
    let (a, b): (f64, f64) = (rng.random(), rng.random());
    [a.min(b), a.max(b)]
}

pub fn ivns_set(rng: &mut impl Rng) -> IvnsSet {
    IvnsSet::new(POINTS.map(|p| (p, IvnsElement::from_pairs(pair(rng), pair(rng), pair(rng)).unwrap()))).unwrap()
}
