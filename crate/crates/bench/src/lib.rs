//! Sample inputs shared by the benchmarks.

use inellipse_core::{Point, Quadrilateral};

fn quad(v: [(f64, f64); 4]) -> Quadrilateral {
    Quadrilateral::new(v.map(|(x, y)| Point::new(x, y))).expect("sample quadrilateral is convex")
}

/// `(0,0), (0,1), (8,4), (6,2)`: a type-1 midpoint diagonal quadrilateral.
pub fn example() -> Quadrilateral {
    quad([(0.0, 0.0), (0.0, 1.0), (8.0, 4.0), (6.0, 2.0)])
}

/// A type-2 midpoint diagonal quadrilateral (`(t − 2)v = (w − 1)s`).
pub fn type2() -> Quadrilateral {
    quad([(0.0, 0.0), (0.0, 1.0), (2.0, 2.25), (4.0, 1.5)])
}

/// No diagonal bisects the other; solved numerically.
pub fn generic() -> Quadrilateral {
    quad([(0.0, 0.0), (1.0, 3.0), (4.0, 4.0), (5.0, 1.0)])
}

pub fn parallelogram() -> Quadrilateral {
    quad([(0.0, 0.0), (1.0, 2.0), (4.0, 2.0), (3.0, 0.0)])
}

pub fn square() -> Quadrilateral {
    quad([(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)])
}

/// All samples with a short name, for parameterized benchmarks.
pub fn samples() -> [(&'static str, Quadrilateral); 5] {
    [
        ("example", example()),
        ("type2", type2()),
        ("generic", generic()),
        ("parallelogram", parallelogram()),
        ("square", square()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use inellipse_core::CLASSIFY_TOL;

    #[test]
    fn samples_have_their_advertised_class() {
        assert!(example().classify(CLASSIFY_TOL).mdq_type1);
        let t2 = type2().classify(CLASSIFY_TOL);
        assert!(t2.mdq_type2 && !t2.mdq_type1);
        assert!(!generic().classify(CLASSIFY_TOL).is_mdq());
        assert!(parallelogram().classify(CLASSIFY_TOL).parallelogram);
        assert!(square().classify(CLASSIFY_TOL).tangential);
    }
}
