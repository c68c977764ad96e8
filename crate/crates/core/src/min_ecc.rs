//! The inscribed ellipse of minimal eccentricity.
//!
//! In the similarity frame `Q_{s,t,v,w}` the family member with parameter
//! `r` has axis-ratio square
//!
//! `G(r) = (O − √M) / (O + √M)`, with `O = A + C` and `M = (A − C)² + B²`,
//!
//! so minimizing eccentricity means maximizing `G` over `(0, 1)`. The sign
//! of `G′` is the sign of the quartic `p = 2MO′ − OM′`. For midpoint
//! diagonal quadrilaterals of type 1, `p` factors through a quadratic `α`
//! whose root in `(0, 1)` is the optimum.

use serde::{Deserialize, Serialize};

use crate::affine::normalize_to_qstvw;
use crate::diameters::{conjugate_pair, PARALLEL_TOL};
use crate::error::{check_open, Error, Result};
use crate::family::{inscribe, inscribed_circle, qstvw_coeff_polys, InscribedEllipse, PARAM_MARGIN};
use crate::poly::Poly;
use crate::quad::{check_family_region, check_frame_region, f_values, Quadrilateral, CLASSIFY_TOL};

/// Grid size used to bracket sign changes of `p` in `(0, 1)`.
const SIGN_GRID: usize = 1024;

/// Halvings of the first and last grid step, for roots near the ends of
/// the parameter interval.
const GRADED_LEVELS: usize = 24;

/// Bisection stops once the bracket is this narrow.
const ROOT_TOL: f64 = 1e-12;

/// Below this eccentricity, equal conjugate diameters are not meaningful.
pub const NEAR_CIRCLE_ECC: f64 = 1e-6;

/// The polynomials `O`, `M`, `N = O² − M` and `p` of one frame.
#[derive(Debug, Clone, PartialEq)]
pub struct EccFunctional {
    pub s: f64,
    pub t: f64,
    pub v: f64,
    pub w: f64,
    o: Poly,
    m: Poly,
    n: Poly,
    p: Poly,
}

impl EccFunctional {
    pub fn new(s: f64, t: f64, v: f64, w: f64) -> Result<Self> {
        check_family_region(s, t, v, w)?;
        let [a, b, c, ..] = qstvw_coeff_polys(s, t, v, w);
        let o = &a + &c;
        let diff = &a - &c;
        let m = &(&diff * &diff) + &(&b * &b);
        let n = &(&o * &o) - &m;
        // the r⁵ terms of 2MO′ and OM′ cancel exactly
        let full = &(&m * &o.derivative()).scale(2.0) - &(&o * &m.derivative());
        let p = full.truncated(4);
        Ok(EccFunctional { s, t, v, w, o, m, n, p })
    }

    pub fn o(&self) -> &Poly {
        &self.o
    }

    pub fn m(&self) -> &Poly {
        &self.m
    }

    pub fn n(&self) -> &Poly {
        &self.n
    }

    /// `2MO′ − OM′`, of degree at most four.
    pub fn p(&self) -> &Poly {
        &self.p
    }

    /// `G(r) = b²/a²` of the `r`-th family member, evaluated as `N/(O + √M)²`
    /// to avoid cancellation.
    pub fn g(&self, r: f64) -> Result<f64> {
        check_open("r", r, 0.0, 1.0, PARAM_MARGIN)?;
        Ok(self.g_unchecked(r))
    }

    fn g_unchecked(&self, r: f64) -> f64 {
        let o = self.o.eval(r);
        let root_m = self.m.eval(r).max(0.0).sqrt();
        self.n.eval(r) / (o + root_m).powi(2)
    }

    /// `16s²v²·r(1 − r)·((s − v)r + v)·((s − v)r + f2)` expanded.
    pub fn n_factored(&self) -> Poly {
        let (s, v) = (self.s, self.v);
        let f2 = f_values(self.s, self.t, self.v, self.w).f2;
        let r_one_minus_r = Poly::new(vec![0.0, 1.0, -1.0]);
        let prod = &(&r_one_minus_r * &Poly::linear(s - v, v)) * &Poly::linear(s - v, f2);
        prod.scale(16.0 * s * s * v * v)
    }

    /// Roots `0, 1, f2/(v − s), v/(v − s)` of `N`; all four are distinct on
    /// the full frame region.
    pub fn n_roots(&self) -> Result<[f64; 4]> {
        let (s, t, v, w) = (self.s, self.t, self.v, self.w);
        check_frame_region(s, t, v, w)?;
        let f2 = f_values(s, t, v, w).f2;
        Ok([0.0, 1.0, f2 / (v - s), v / (v - s)])
    }
}

/// `G(r)` for the frame `(s, t, v, w)`.
pub fn g_value(s: f64, t: f64, v: f64, w: f64, r: f64) -> Result<f64> {
    EccFunctional::new(s, t, v, w)?.g(r)
}

/// The roots of `N = O² − M`.
pub fn n_factorization(s: f64, t: f64, v: f64, w: f64) -> Result<[f64; 4]> {
    EccFunctional::new(s, t, v, w)?.n_roots()
}

/// The critical-point quartic `p = 2MO′ − OM′`.
pub fn p_quartic(s: f64, t: f64, v: f64, w: f64) -> Result<Poly> {
    Ok(EccFunctional::new(s, t, v, w)?.p().clone())
}

/// Coefficients of `α(r) = 2(s−v)(v²+w²+1)r² + 2v(v²+w²+1)r − s(v²+(w+1)²)`
/// in ascending order. Integer inputs give integer coefficients.
pub fn alpha_coeffs(s: f64, v: f64, w: f64) -> [f64; 3] {
    let k = v * v + w * w + 1.0;
    [-s * (v * v + (w + 1.0) * (w + 1.0)), 2.0 * v * k, 2.0 * (s - v) * k]
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The root of `α` in `(0, 1)`: the optimal parameter for a type-1
/// midpoint diagonal frame.
pub fn alpha_root(s: f64, v: f64, w: f64) -> Result<f64> {
    check_open("s", s, 0.0, f64::INFINITY, 0.0)?;
    check_open("v", v, 0.0, f64::INFINITY, 0.0)?;
    check_open("2s - v", 2.0 * s - v, 0.0, f64::INFINITY, 0.0)?;
    if !w.is_finite() {
        return Err(Error::ParamOutOfRegion { name: "w", value: w });
    }
    if (s - v).abs() <= CLASSIFY_TOL * (1.0 + s.max(v)) {
        return Err(Error::ParamOutOfRegion { name: "s - v", value: s - v });
    }
    let [c0, c1, c2] = alpha_coeffs(s, v, w);
    let alpha = |r: f64| (c2 * r + c1) * r + c0;
    if !(alpha(0.0) < 0.0 && alpha(1.0) > 0.0) {
        return Err(Error::NoRootInJ);
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc >= 0.0 {
        let q = -0.5 * (c1 + c1.signum() * disc.sqrt());
        for root in [q / c2, c0 / q] {
            if root > 0.0 && root < 1.0 && alpha(root).abs() <= 1e-9 * (c0.abs() + c1.abs() + c2.abs()) {
                return Ok(root);
            }
        }
    }
    Ok(bisect(alpha, 0.0, 1.0))
}

/// How a [`MinEccResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinEccMethod {
    Incircle,
    AlphaClosedForm,
    QuarticNumeric,
    ParallelogramNumeric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinEccResult {
    /// Fraction along `A1 → A2` of the optimal ellipse's contact point on `S1`.
    pub r_star: f64,
    pub ellipse: InscribedEllipse,
    pub eccentricity: f64,
    /// `b²/a²`, equal to `1 − eccentricity²`.
    pub axis_ratio_sq: f64,
    pub method: MinEccMethod,
}

fn finish(q: &Quadrilateral, r_star: f64, method: MinEccMethod) -> Result<MinEccResult> {
    let ellipse = inscribe(q, r_star)?;
    Ok(result_from(ellipse, r_star, method))
}

fn result_from(ellipse: InscribedEllipse, r_star: f64, method: MinEccMethod) -> MinEccResult {
    let axis_ratio_sq = ellipse.conic.axis_ratio_sq().clamp(0.0, 1.0);
    MinEccResult { r_star, ellipse, eccentricity: (1.0 - axis_ratio_sq).sqrt(), axis_ratio_sq, method }
}

/// Optimal parameter of a type-1 midpoint diagonal quadrilateral, in its own labeling.
fn type1_r_star(q: &Quadrilateral) -> Result<f64> {
    let f = normalize_to_qstvw(q)?;
    alpha_root(f.s, f.v, f.w)
}

/// The inscribed ellipse of minimal eccentricity.
///
/// Tangential quadrilaterals give their incircle. Type-1 midpoint diagonal
/// quadrilaterals use the root of `α`; type 2 is relabeled by one vertex,
/// which swaps the diagonals and turns it into type 1. Parallelograms are
/// optimized numerically over their family, and all other quadrilaterals go
/// through [`min_ecc_numeric`].
pub fn min_ecc(q: &Quadrilateral) -> Result<MinEccResult> {
    let class = q.classify(CLASSIFY_TOL);
    if class.tangential {
        let ellipse = inscribed_circle(q)?;
        return Ok(MinEccResult {
            r_star: ellipse.param,
            ellipse,
            eccentricity: 0.0,
            axis_ratio_sq: 1.0,
            method: MinEccMethod::Incircle,
        });
    }
    if class.parallelogram {
        return parallelogram_min_ecc(q);
    }
    if class.mdq_type1 {
        return finish(q, type1_r_star(q)?, MinEccMethod::AlphaClosedForm);
    }
    if class.mdq_type2 {
        let shifted = q.relabeled(1);
        let r = type1_r_star(&shifted)?;
        // the shifted S4 is the original S1
        let contact = inscribe(&shifted, r)?.tangency[3];
        let r_star = q.side(0).project_param(contact);
        return finish(q, r_star, MinEccMethod::AlphaClosedForm);
    }
    min_ecc_numeric(q)
}

/// Maximizes `G` by locating the sign change of `p` in `(0, 1)`. Serves as
/// an oracle for the closed form and as the solver for general quadrilaterals.
pub fn min_ecc_numeric(q: &Quadrilateral) -> Result<MinEccResult> {
    let frame = normalize_to_qstvw(q)?;
    let ecc = EccFunctional::new(frame.s, frame.t, frame.v, frame.w)?;
    let r_star = critical_point(ecc.p())?;
    finish(q, r_star, MinEccMethod::QuarticNumeric)
}

/// The unique sign change of `p` in `(0, 1)`, refined by bisection.
fn critical_point(p: &Poly) -> Result<f64> {
    // uniform in the interior, graded toward both ends where badly
    // proportioned frames push the root
    let step = 1.0 / SIGN_GRID as f64;
    let graded = (1..=GRADED_LEVELS).map(|k| step * 0.5f64.powi(k as i32));
    let mut grid: Vec<f64> = graded.clone().collect();
    grid.extend((1..SIGN_GRID).map(|i| i as f64 * step));
    grid.extend(graded.map(|h| 1.0 - h));
    grid.sort_by(f64::total_cmp);
    let values: Vec<f64> = grid.iter().map(|&r| p.eval(r)).collect();
    let mut brackets = Vec::new();
    for i in 0..grid.len() - 1 {
        if values[i] == 0.0 {
            brackets.push((grid[i], grid[i]));
        } else if (values[i] < 0.0) != (values[i + 1] < 0.0) && values[i + 1] != 0.0 {
            brackets.push((grid[i], grid[i + 1]));
        }
    }
    match brackets.as_slice() {
        [(lo, hi)] if lo == hi => Ok(*lo),
        [(lo, hi)] => Ok(bisect(|r| p.eval(r), *lo, *hi)),
        other => Err(Error::MultipleCriticalPoints { count: other.len() }),
    }
}

/// Golden-section maximization of the axis ratio over the parallelogram family.
fn parallelogram_min_ecc(q: &Quadrilateral) -> Result<MinEccResult> {
    let ratio = |r: f64| -> Result<f64> { Ok(inscribe(q, r)?.conic.axis_ratio_sq()) };
    let n = 256;
    let mut best = (0, f64::NEG_INFINITY);
    for i in 1..n {
        let g = ratio(i as f64 / n as f64)?;
        if g > best.1 {
            best = (i, g);
        }
    }
    let (mut lo, mut hi) = ((best.0 - 1) as f64 / n as f64, (best.0 + 1) as f64 / n as f64);
    lo = lo.max(PARAM_MARGIN * 2.0);
    hi = hi.min(1.0 - PARAM_MARGIN * 2.0);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut g1, mut g2) = (ratio(x1)?, ratio(x2)?);
    while hi - lo > ROOT_TOL {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = ratio(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = ratio(x1)?;
        }
    }
    finish(q, 0.5 * (lo + hi), MinEccMethod::ParallelogramNumeric)
}

/// Outcome of checking that the diameters of the minimal-eccentricity
/// ellipse along the diagonals are conjugate and of equal length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct T3Report {
    pub equal_len: bool,
    pub parallel: bool,
    /// Squared lengths of the diameter along `D1` and of its conjugate.
    pub len_sq: (f64, f64),
    /// Closed-form squared lengths along `D1` and `D2`, when the optimum came
    /// from `α`.
    pub closed_form: Option<(f64, f64)>,
    /// `|sin|` between the conjugate of `D1` and `D2`.
    pub parallel_margin: f64,
    /// `|len1² − len2²| / max(len1², len2²)`.
    pub length_gap: f64,
    /// Set when the optimum is (numerically) a circle. Both checks are then
    /// reported as passing, since every pair of perpendicular diameters is
    /// conjugate and equal.
    pub near_circle: bool,
    pub r_star: f64,
    pub eccentricity: f64,
}

/// Closed-form squared lengths of the conjugate diameters along `D1` and
/// `D2` of the minimal ellipse in a type-1 frame, in frame units.
pub fn closed_form_diameters(s: f64, v: f64, w: f64, r1: f64) -> (f64, f64) {
    let beta = (s - v) * r1 + v;
    let zeta = (s - v) * r1 + s;
    let d1 = (1.0 + ((w + 1.0) / v).powi(2)) * v * v * s * (1.0 - r1) * zeta / (beta * beta);
    let d2 = (1.0 + ((w - 1.0) / v).powi(2)) * r1 * s * v * v / beta;
    (d1, d2)
}

pub fn verify_t3(q: &Quadrilateral, tol: f64) -> Result<T3Report> {
    let class = q.classify(CLASSIFY_TOL);
    if !class.is_mdq() {
        return Err(Error::NotMdq);
    }
    let res = min_ecc(q)?;
    let near_circle = res.eccentricity < NEAR_CIRCLE_ECC;
    let diag = q.diagonals();
    let pair = conjugate_pair(&res.ellipse.conic, diag.d1.direction())?;
    let parallel_margin = pair.dir2.sin_angle(diag.d2.direction());
    let length_gap = (pair.len1_sq - pair.len2_sq).abs() / pair.len1_sq.max(pair.len2_sq);

    let closed_form = if res.method == MinEccMethod::AlphaClosedForm {
        let type2 = !class.mdq_type1;
        let labeled = if type2 { q.relabeled(1) } else { *q };
        let f = normalize_to_qstvw(&labeled)?;
        let r1 = alpha_root(f.s, f.v, f.w)?;
        let unit = f.unit_length().powi(2);
        let (a, b) = closed_form_diameters(f.s, f.v, f.w, r1);
        // relabeling swaps the roles of the diagonals
        Some(if type2 { (b * unit, a * unit) } else { (a * unit, b * unit) })
    } else {
        None
    };

    Ok(T3Report {
        equal_len: near_circle || length_gap <= tol,
        parallel: near_circle || parallel_margin <= tol,
        len_sq: (pair.len1_sq, pair.len2_sq),
        closed_form,
        parallel_margin,
        length_gap,
        near_circle,
        r_star: res.r_star,
        eccentricity: res.eccentricity,
    })
}

/// Default tolerance for [`verify_t3`].
pub const T3_TOL: f64 = PARALLEL_TOL;
