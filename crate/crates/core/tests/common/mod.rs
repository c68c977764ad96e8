//! Random frame and quadrilateral generators shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use inellipse_core::quad::{check_frame_region, qstvw_quad};
use inellipse_core::{AffineMap, Point, Quadrilateral, Vector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parameters of the frame `(0,0), (0,1), (s,t), (v,w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub s: f64,
    pub t: f64,
    pub v: f64,
    pub w: f64,
}

impl Frame {
    pub fn quad(&self) -> Quadrilateral {
        qstvw_quad(self.s, self.t, self.v, self.w).expect("generated frame is convex")
    }

    pub fn f1(&self) -> f64 {
        self.v * (self.t - 1.0) + (1.0 - self.w) * self.s
    }

    pub fn f2(&self) -> f64 {
        self.v * self.t - self.w * self.s
    }

    pub fn f3(&self) -> f64 {
        self.w * self.s - self.v * (self.t - 1.0)
    }

    /// Every side and every vertex angle of reasonable size, no two sides
    /// close to parallel.
    fn well_shaped(&self) -> bool {
        if check_frame_region(self.s, self.t, self.v, self.w).is_err() {
            return false;
        }
        let margin = 0.05;
        if self.f1() < margin || self.f2() < margin || (self.s - self.v).abs() < margin || self.f3().abs() < margin {
            return false;
        }
        let Ok(q) = qstvw_quad(self.s, self.t, self.v, self.w) else {
            return false;
        };
        let diam = q.diameter();
        if diam > 12.0 {
            return false;
        }
        let v = q.vertices();
        (0..4).all(|i| {
            let prev = v[(i + 3) % 4] - v[i];
            let next = v[(i + 1) % 4] - v[i];
            next.norm() > 0.1 * diam && prev.sin_angle(next) > 0.05
        })
    }
}

fn retry(rng: &mut ChaCha8Rng, mut draw: impl FnMut(&mut ChaCha8Rng) -> Frame) -> Frame {
    loop {
        let f = draw(rng);
        if f.well_shaped() {
            return f;
        }
    }
}

/// Type 1: `vt = (w + 1)s`.
pub fn type1_frame(rng: &mut ChaCha8Rng) -> Frame {
    retry(rng, |rng| {
        let s = rng.gen_range(0.3..4.0);
        let v = rng.gen_range(0.05..2.0 * s);
        let w = rng.gen_range(-2.0..2.0);
        Frame { s, t: s * (w + 1.0) / v, v, w }
    })
}

/// Type 2: `(t − 2)v = (w − 1)s`.
pub fn type2_frame(rng: &mut ChaCha8Rng) -> Frame {
    retry(rng, |rng| {
        let s = rng.gen_range(0.3..4.0);
        let v = rng.gen_range(0.5 * s..4.0 * s);
        let w = rng.gen_range(-2.0..2.0);
        Frame { s, t: 2.0 + (w - 1.0) * s / v, v, w }
    })
}

/// Any frame in the analysis region.
pub fn generic_frame(rng: &mut ChaCha8Rng) -> Frame {
    retry(rng, |rng| {
        let s = rng.gen_range(0.3..4.0);
        let v = rng.gen_range(0.3..4.0);
        let w = rng.gen_range(-2.0..2.0);
        let t = w + rng.gen_range(0.2..4.0);
        Frame { s, t, v, w }
    })
}

/// A frame whose diagonal-midpoint defects both exceed `min_defect`
/// (relative to the diameter).
pub fn non_mdq_frame(rng: &mut ChaCha8Rng, min_defect: f64) -> Frame {
    loop {
        let f = generic_frame(rng);
        let (d1, d2) = f.quad().mdq_defects();
        if d1 > min_defect && d2 > min_defect {
            return f;
        }
    }
}

/// `(s, t)` in `{s, t > 0, s + t > 1}` with `|s − 1|` bounded away from zero.
pub fn qst_params(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let s = rng.gen_range(0.1..4.0);
        let t = rng.gen_range(0.1..4.0);
        if s + t > 1.1 && (s - 1.0_f64).abs() > 0.05 {
            return (s, t);
        }
    }
}

/// A random similarity with a rotation, a scale in `[0.2, 5]` and a shift.
pub fn similarity(rng: &mut ChaCha8Rng) -> AffineMap {
    let rot = AffineMap::rotation(rng.gen_range(-PI..PI));
    let scale = AffineMap::scaling(rng.gen_range(0.2..5.0)).unwrap();
    let shift = AffineMap::translation(Vector::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)));
    shift.then_after(&scale.then_after(&rot))
}

/// A random affine map whose singular values lie in `[0.3, 3]`.
pub fn affine(rng: &mut ChaCha8Rng) -> AffineMap {
    let stretch =
        AffineMap::new([[rng.gen_range(0.3..3.0), 0.0], [0.0, rng.gen_range(0.3..3.0)]], Vector::new(0.0, 0.0))
            .unwrap();
    AffineMap::rotation(rng.gen_range(-PI..PI))
        .then_after(&stretch)
        .then_after(&AffineMap::rotation(rng.gen_range(-PI..PI)))
        .then_after(&AffineMap::translation(Vector::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))))
}

fn polar(center: Point, radius: f64, angle: f64) -> Point {
    Point::new(center.x + radius * angle.cos(), center.y + radius * angle.sin())
}

/// A kite: axis through two vertices, the other two mirrored across it.
pub fn kite(rng: &mut ChaCha8Rng) -> Quadrilateral {
    loop {
        let top = rng.gen_range(0.3..4.0);
        let bottom = rng.gen_range(0.3..4.0);
        let half = rng.gen_range(0.3..3.0);
        let raw = [Point::new(0.0, -bottom), Point::new(-half, 0.0), Point::new(0.0, top), Point::new(half, 0.0)];
        let m = similarity(rng);
        if let Ok(q) = Quadrilateral::new(raw.map(|p| m.apply(p))) {
            return q;
        }
    }
}

/// Four tangent lines to a circle at random contact angles, with every
/// gap between consecutive contacts below π so the lines bound a quad.
pub fn tangential(rng: &mut ChaCha8Rng) -> Quadrilateral {
    loop {
        let mut angles: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..4).all(|i| {
            let next = if i == 3 { angles[0] + std::f64::consts::TAU } else { angles[i + 1] };
            let gap = next - angles[i];
            gap > 0.3 && gap < std::f64::consts::PI - 0.3
        });
        if !gaps_ok {
            continue;
        }
        let center = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let radius = rng.gen_range(0.2..3.0);
        let vertex = |a: f64, b: f64| {
            // tangent lines at a and b meet on the bisecting ray
            let mid = 0.5 * (a + b);
            polar(center, radius / (0.5 * (b - a)).cos(), mid)
        };
        let raw = [
            vertex(angles[0], angles[1]),
            vertex(angles[1], angles[2]),
            vertex(angles[2], angles[3]),
            vertex(angles[3], angles[0] + std::f64::consts::TAU),
        ];
        if let Ok(q) = Quadrilateral::new(raw) {
            return q;
        }
    }
}

/// Perpendicular diagonals crossing at an interior point of both.
pub fn orthodiagonal(rng: &mut ChaCha8Rng) -> Quadrilateral {
    loop {
        let raw = [
            Point::new(-rng.gen_range(0.2..3.0), 0.0),
            Point::new(0.0, rng.gen_range(0.2..3.0)),
            Point::new(rng.gen_range(0.2..3.0), 0.0),
            Point::new(0.0, -rng.gen_range(0.2..3.0)),
        ];
        let m = similarity(rng);
        if let Ok(q) = Quadrilateral::new(raw.map(|p| m.apply(p))) {
            return q;
        }
    }
}

/// Parameter in the interior of the family interval, away from the ends
/// where the ellipses degenerate.
pub fn param(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.05..0.95)
}

/// A trapezoid with one pair of parallel sides (possibly a parallelogram
/// when the two parallel sides happen to have equal length).
pub fn trapezoid(rng: &mut ChaCha8Rng) -> Quadrilateral {
    loop {
        let h = rng.gen_range(0.2..3.0);
        let bottom = rng.gen_range(0.3..4.0);
        let left = rng.gen_range(-2.0..2.0);
        let top = rng.gen_range(0.3..4.0);
        let raw = [Point::new(0.0, 0.0), Point::new(left, h), Point::new(left + top, h), Point::new(bottom, 0.0)];
        let m = similarity(rng);
        if let Ok(q) = Quadrilateral::new(raw.map(|p| m.apply(p))) {
            return q;
        }
    }
}

pub fn parallelogram(rng: &mut ChaCha8Rng) -> Quadrilateral {
    loop {
        let u = Vector::new(rng.gen_range(0.3..3.0), 0.0);
        let v = Vector::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..3.0));
        let raw = [Point::ORIGIN, Point::ORIGIN + v, Point::ORIGIN + u + v, Point::ORIGIN + u];
        let m = affine(rng);
        if let Ok(q) = Quadrilateral::new(raw.map(|p| m.apply(p))) {
            return q;
        }
    }
}
