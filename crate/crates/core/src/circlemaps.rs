//! Lifts of circle maps: iteration, rotation numbers, and the averaging
//! conjugators that straighten finite cyclic and dihedral actions on the circle.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{arg, Error, Result};

/// Grid size used when a composite has to be resampled.
pub const DEFAULT_SAMPLES: usize = 2048;

const INVERSE_TOL: f64 = 1e-12;
const RELATION_TOL: f64 = 1e-7;

/// A lift `R -> R` of a circle homeomorphism, `f(x + 1) = f(x) + degree`.
#[derive(Debug, Clone, PartialEq)]
pub enum CircleMapLift {
    /// `x -> degree * x + shift`.
    Affine { degree: i8, shift: f64 },
    Sampled(SampledLift),
}

/// Monotone piecewise-cubic interpolant through `f(i / N)`, `0 <= i < N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLift {
    degree: i8,
    values: Vec<f64>,
    tangents: Vec<f64>,
}

impl SampledLift {
    fn value_at(&self, j: i64) -> f64 {
        let n = self.values.len() as i64;
        let k = j.div_euclid(n);
        self.values[j.rem_euclid(n) as usize] + (self.degree as i64 * k) as f64
    }

    fn build(degree: i8, values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 8 {
            return arg("a sampled circle map needs at least 8 samples");
        }
        if degree != 1 && degree != -1 {
            return arg("degree must be +1 or -1");
        }
        if values.iter().any(|v| !v.is_finite()) {
            return arg("samples must be finite");
        }
        let mut lift = SampledLift { degree, values, tangents: Vec::new() };
        let sgn = degree as f64;
        for j in 0..n as i64 {
            if (lift.value_at(j + 1) - lift.value_at(j)) * sgn <= 0.0 {
                return arg(format!("samples are not strictly monotone at index {j}"));
            }
        }
        let h = 1.0 / n as f64;
        let mut m: Vec<f64> = (0..n as i64)
            .map(|i| {
                (-lift.value_at(i + 2) + 8.0 * lift.value_at(i + 1) - 8.0 * lift.value_at(i - 1)
                    + lift.value_at(i - 2))
                    / (12.0 * h)
            })
            .collect();
        // Fritsch-Carlson limiter keeps each cubic piece monotone.
        for i in 0..n {
            let j = (i + 1) % n;
            let delta = (lift.value_at(i as i64 + 1) - lift.value_at(i as i64)) / h;
            let (a, b) = (m[i] / delta, m[j] / delta);
            if a < 0.0 {
                m[i] = 0.0;
            }
            if b < 0.0 {
                m[j] = 0.0;
            }
            let (a, b) = (m[i] / delta, m[j] / delta);
            let r = a * a + b * b;
            if r > 9.0 {
                let tau = 3.0 / libm::sqrt(r);
                m[i] = tau * a * delta;
                m[j] = tau * b * delta;
            }
        }
        lift.tangents = m;
        Ok(lift)
    }

    fn eval(&self, x: f64) -> f64 {
        let n = self.values.len();
        let k = libm::floor(x);
        let t = (x - k) * n as f64;
        let mut i = libm::floor(t) as usize;
        if i >= n {
            i = n - 1;
        }
        let u = t - i as f64;
        let h = 1.0 / n as f64;
        let y0 = self.values[i];
        let y1 = self.value_at(i as i64 + 1);
        let (m0, m1) = (self.tangents[i], self.tangents[(i + 1) % n]);
        let u2 = u * u;
        let u3 = u2 * u;
        let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
        let h10 = u3 - 2.0 * u2 + u;
        let h01 = -2.0 * u3 + 3.0 * u2;
        let h11 = u3 - u2;
        h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1 + self.degree as f64 * k
    }

    fn psi_bounds(&self) -> (f64, f64) {
        let n = self.values.len();
        let d = self.degree as f64;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (i, v) in self.values.iter().enumerate() {
            let psi = v - d * (i as f64 / n as f64);
            lo = lo.min(psi);
            hi = hi.max(psi);
        }
        let slack = 2.0 / n as f64 + 1e-9;
        (lo - slack, hi + slack)
    }
}

impl CircleMapLift {
    pub fn translation(shift: f64) -> Self {
        CircleMapLift::Affine { degree: 1, shift }
    }

    /// `x -> shift - x`.
    pub fn reflection(shift: f64) -> Self {
        CircleMapLift::Affine { degree: -1, shift }
    }

    pub fn identity() -> Self {
        CircleMapLift::translation(0.0)
    }

    /// Interpolant through `values[i] = f(i / N)`.
    pub fn from_samples(degree: i8, values: Vec<f64>) -> Result<Self> {
        Ok(CircleMapLift::Sampled(SampledLift::build(degree, values)?))
    }

    /// Samples `f` on a uniform grid of `n` points of `[0, 1)`.
    pub fn sample<F: Fn(f64) -> f64>(degree: i8, n: usize, f: F) -> Result<Self> {
        let values = (0..n).map(|i| f(i as f64 / n as f64)).collect();
        CircleMapLift::from_samples(degree, values)
    }

    pub fn degree(&self) -> i8 {
        match self {
            CircleMapLift::Affine { degree, .. } => *degree,
            CircleMapLift::Sampled(s) => s.degree,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            CircleMapLift::Affine { degree, shift } => *degree as f64 * x + shift,
            CircleMapLift::Sampled(s) => s.eval(x),
        }
    }

    fn grid_len(&self) -> Option<usize> {
        match self {
            CircleMapLift::Affine { .. } => None,
            CircleMapLift::Sampled(s) => Some(s.values.len()),
        }
    }

    /// Values on the uniform grid of `n` points, used for serialization.
    pub fn grid_values(&self, n: usize) -> Vec<f64> {
        match self {
            CircleMapLift::Sampled(s) if s.values.len() == n => s.values.clone(),
            _ => (0..n).map(|i| self.eval(i as f64 / n as f64)).collect(),
        }
    }

    /// Natural number of samples for serialization.
    pub fn native_samples(&self) -> usize {
        self.grid_len().unwrap_or(DEFAULT_SAMPLES)
    }

    /// Solves `f(x) = y` by bisection.
    pub fn inverse_eval(&self, y: f64) -> f64 {
        match self {
            CircleMapLift::Affine { degree, shift } => (y - shift) / *degree as f64,
            CircleMapLift::Sampled(s) => {
                let (lo_psi, hi_psi) = s.psi_bounds();
                let d = s.degree as f64;
                // f(x) = d x + psi(x), so x = d (y - psi(x)).
                let (mut lo, mut hi) = if s.degree == 1 {
                    (y - hi_psi, y - lo_psi)
                } else {
                    (lo_psi - y, hi_psi - y)
                };
                while hi - lo > INVERSE_TOL {
                    let mid = 0.5 * (lo + hi);
                    if (s.eval(mid) - y) * d < 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                    if mid == lo && mid == hi {
                        break;
                    }
                }
                0.5 * (lo + hi)
            }
        }
    }

    /// `self` after `other`, resampled unless both are affine.
    pub fn compose(&self, other: &CircleMapLift) -> Result<CircleMapLift> {
        if let (
            CircleMapLift::Affine { degree: d1, shift: s1 },
            CircleMapLift::Affine { degree: d2, shift: s2 },
        ) = (self, other)
        {
            return Ok(CircleMapLift::Affine {
                degree: d1 * d2,
                shift: *d1 as f64 * s2 + s1,
            });
        }
        let n = self.grid_len().max(other.grid_len()).unwrap_or(DEFAULT_SAMPLES);
        CircleMapLift::sample(self.degree() * other.degree(), n, |x| self.eval(other.eval(x)))
    }

    pub fn inverse(&self) -> Result<CircleMapLift> {
        match self {
            CircleMapLift::Affine { degree, shift } => Ok(CircleMapLift::Affine {
                degree: *degree,
                shift: -shift / *degree as f64,
            }),
            CircleMapLift::Sampled(s) => {
                CircleMapLift::sample(s.degree, s.values.len(), |y| self.inverse_eval(y))
            }
        }
    }

    /// `f^k(x)` for `k >= 0`.
    pub fn iterate(&self, x: f64, k: u64) -> f64 {
        let mut y = x;
        for _ in 0..k {
            y = self.eval(y);
        }
        y
    }
}

/// Estimate `(f^k(0) - 0) / k` with error bound `1 / k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationNumber {
    pub value: f64,
    pub error_bound: f64,
    pub iterations: u64,
}

impl RotationNumber {
    /// The fraction `p/q` with least `q <= max_den` within the error bound, if the
    /// bound is tight enough to make it unambiguous (`< 1/(2 q^2)`).
    pub fn snap(&self, max_den: u64) -> Option<(i64, u64)> {
        for q in 1..=max_den {
            let p = libm::round(self.value * q as f64);
            let err = libm::fabs(self.value - p / q as f64);
            if err <= self.error_bound + 1e-12 && self.error_bound < 1.0 / (2.0 * (q * q) as f64) {
                return Some((p as i64, q));
            }
        }
        None
    }

    /// Nearest `a/n`, accepted when within `1/(2 n^2)`.
    pub fn snap_to_order(&self, n: u64) -> Option<i64> {
        let a = libm::round(self.value * n as f64);
        if libm::fabs(self.value - a / n as f64) < 1.0 / (2.0 * (n * n) as f64) {
            Some(a as i64)
        } else {
            None
        }
    }
}

pub fn rotation_number(f: &CircleMapLift, iterations: u64) -> Result<RotationNumber> {
    if f.degree() != 1 {
        return arg("rotation number needs a degree +1 lift");
    }
    if iterations < 64 {
        return arg("use at least 64 iterations");
    }
    let y = f.iterate(0.0, iterations);
    Ok(RotationNumber {
        value: y / iterations as f64,
        error_bound: 1.0 / iterations as f64,
        iterations,
    })
}

/// Outcome of checking `deg(h) rtn(f) = rtn(g)` for `h f = g h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiconjugacyReport {
    pub holds: bool,
    /// `deg(h) * rtn(f)`.
    pub lhs: f64,
    /// `rtn(g)`.
    pub rhs: f64,
    /// Distance of `lhs - rhs` to the nearest integer.
    pub discrepancy: f64,
    pub bound: f64,
    /// Largest deviation of `g h - h f` from a constant integer on the check grid.
    pub relation_deviation: f64,
}

fn grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| i as f64 / n as f64)
}

/// Largest distance of `d(x)` from the integer nearest `d(0)`, over a grid.
fn integer_constant_deviation<F: Fn(f64) -> f64>(d: F, n: usize) -> (i64, f64) {
    let k = libm::round(d(0.0));
    let dev = grid(n).map(|x| libm::fabs(d(x) - k)).fold(0.0, f64::max);
    (k as i64, dev)
}

pub fn semiconjugacy_check(
    f: &CircleMapLift,
    g: &CircleMapLift,
    h: &CircleMapLift,
    iterations: u64,
) -> Result<SemiconjugacyReport> {
    if f.degree() != 1 || g.degree() != 1 {
        return arg("f and g must have degree +1");
    }
    let (_, dev) = integer_constant_deviation(|x| g.eval(h.eval(x)) - h.eval(f.eval(x)), 1024);
    if dev > RELATION_TOL {
        return Err(Error::Precondition(format!("h f != g h: max deviation {dev:e}")));
    }
    let rf = rotation_number(f, iterations)?;
    let rg = rotation_number(g, iterations)?;
    let lhs = h.degree() as f64 * rf.value;
    let diff = lhs - rg.value;
    let discrepancy = libm::fabs(diff - libm::round(diff));
    let bound = rf.error_bound + rg.error_bound + 1e-12;
    Ok(SemiconjugacyReport {
        holds: discrepancy <= bound,
        lhs,
        rhs: rg.value,
        discrepancy,
        bound,
        relation_deviation: dev,
    })
}

/// `g^n = id + m`: returns `m`, or an order error.
fn order_shift(g: &CircleMapLift, n: u64) -> Result<i64> {
    let (m, dev) = integer_constant_deviation(|x| g.iterate(x, n) - x, 512);
    if dev > RELATION_TOL {
        return Err(Error::Order { n, deviation: dev });
    }
    Ok(m)
}

/// `h = (1/n) sum_{i<n} g^i`, which satisfies `h g = h + rtn(g)`.
///
/// `g` must have order `n` on the circle with rotation number `1/n`.
pub fn cyclic_conjugator(g: &CircleMapLift, n: u64) -> Result<CircleMapLift> {
    if g.degree() != 1 {
        return arg("g must have degree +1");
    }
    if n == 0 {
        return arg("n must be positive");
    }
    let m = order_shift(g, n)?;
    if m.rem_euclid(n as i64) != 1 % n as i64 {
        return Err(Error::Convention { n, measured: m as f64 / n as f64 });
    }
    if let CircleMapLift::Affine { shift, .. } = g {
        let s = (0..n).map(|i| i as f64 * shift).sum::<f64>() / n as f64;
        return Ok(CircleMapLift::translation(s));
    }
    let len = g.grid_len().unwrap_or(DEFAULT_SAMPLES);
    CircleMapLift::sample(1, len, |x| {
        let mut y = x;
        let mut acc = 0.0;
        for _ in 0..n {
            acc += y;
            y = g.eval(y);
        }
        acc / n as f64
    })
}

/// `h = sum_{i<n} (g^i - g^i s) / (2n)`, which satisfies `h g = h + rtn(g)` and `h s = -h`.
pub fn dihedral_conjugator(g: &CircleMapLift, s: &CircleMapLift, n: u64) -> Result<CircleMapLift> {
    if g.degree() != 1 {
        return arg("g must have degree +1");
    }
    if s.degree() != -1 {
        return arg("s must have degree -1");
    }
    if n == 0 {
        return arg("n must be positive");
    }
    let ss = grid(512).map(|x| libm::fabs(s.eval(s.eval(x)) - x)).fold(0.0, f64::max);
    let sg = grid(512)
        .map(|x| libm::fabs(s.eval(g.eval(x)) - g.inverse_eval(s.eval(x))))
        .fold(0.0, f64::max);
    if ss > RELATION_TOL || sg > RELATION_TOL {
        return Err(Error::GroupRelation(format!(
            "|s s - id| = {ss:e}, |s g - g^-1 s| = {sg:e}"
        )));
    }
    let _ = order_shift(g, n).map_err(|e| Error::GroupRelation(format!("{e}")))?;
    if let (CircleMapLift::Affine { .. }, CircleMapLift::Affine { shift: t, .. }) = (g, s) {
        // g^i(x) - g^i(t - x) = 2x - t, independent of i.
        return Ok(CircleMapLift::translation(-t / 2.0));
    }
    let len = g.grid_len().max(s.grid_len()).unwrap_or(DEFAULT_SAMPLES);
    CircleMapLift::sample(1, len, |x| {
        let (mut y, mut z) = (x, s.eval(x));
        let mut acc = 0.0;
        for _ in 0..n {
            acc += y - z;
            y = g.eval(y);
            z = g.eval(z);
        }
        acc / (2 * n) as f64
    })
}

/// `sup |h g - h - c|` over a grid.
pub fn translation_defect(h: &CircleMapLift, g: &CircleMapLift, c: f64, samples: usize) -> f64 {
    grid(samples)
        .map(|x| libm::fabs(h.eval(g.eval(x)) - h.eval(x) - c))
        .fold(0.0, f64::max)
}

/// `sup |h s + h|` over a grid.
pub fn reflection_defect(h: &CircleMapLift, s: &CircleMapLift, samples: usize) -> f64 {
    grid(samples)
        .map(|x| libm::fabs(h.eval(s.eval(x)) + h.eval(x)))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A fixed smooth degree-one diffeomorphism.
    fn phi(x: f64) -> f64 {
        use core::f64::consts::PI;
        x + 0.2 * libm::sin(2.0 * PI * x) / (2.0 * PI) + 0.1 * libm::sin(6.0 * PI * x + 1.0) / (6.0 * PI)
    }

    fn phi_map() -> CircleMapLift {
        CircleMapLift::sample(1, DEFAULT_SAMPLES, phi).unwrap()
    }

    fn conj(inner: &CircleMapLift) -> CircleMapLift {
        let p = phi_map();
        let pinv = p.inverse().unwrap();
        p.compose(&inner.compose(&pinv).unwrap()).unwrap()
    }

    #[test]
    fn rigid_rotation_numbers() {
        let r = rotation_number(&CircleMapLift::translation(1.0 / 3.0), 300).unwrap();
        assert_eq!(r.snap(16), Some((1, 3)));
        let r = rotation_number(&CircleMapLift::identity(), 64).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(rotation_number(&CircleMapLift::reflection(0.0), 100).is_err());
        assert!(rotation_number(&CircleMapLift::identity(), 10).is_err());
    }

    #[test]
    fn conjugated_rotation_number() {
        let g = conj(&CircleMapLift::translation(1.0 / 3.0));
        let r = rotation_number(&g, 3000).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() <= r.error_bound);
        assert_eq!(r.snap_to_order(3), Some(1));
    }

    #[test]
    fn additivity_on_rigid_rotations() {
        for (a, b) in [(0.1, 0.25), (0.5, 0.75), (1.0 / 3.0, 1.0 / 7.0)] {
            let f = CircleMapLift::translation(a).compose(&CircleMapLift::translation(b)).unwrap();
            let r = rotation_number(&f, 64).unwrap();
            assert!((r.value - (a + b)).abs() < 1e-12);
        }
    }

    #[test]
    fn sampled_interpolation_is_accurate_and_invertible() {
        let p = phi_map();
        for i in 0..1000 {
            let x = -1.5 + 3.0 * i as f64 / 1000.0 + 1e-4;
            assert!((p.eval(x) - phi(x)).abs() < 1e-9, "x = {x}");
            assert!((p.inverse_eval(p.eval(x)) - x).abs() < 1e-11);
        }
        assert!(CircleMapLift::from_samples(1, vec![0.0, 0.5, 0.4, 0.6, 0.7, 0.8, 0.9, 0.95]).is_err());
    }

    #[test]
    fn semiconjugacy_examples() {
        let q = CircleMapLift::translation(0.25);
        let rep = semiconjugacy_check(&q, &q, &CircleMapLift::translation(0.3), 400).unwrap();
        assert!(rep.holds);
        assert!((rep.lhs - 0.25).abs() < 1e-12);
        let f = CircleMapLift::translation(0.2);
        let g = CircleMapLift::translation(-0.2);
        let rep = semiconjugacy_check(&f, &g, &CircleMapLift::reflection(0.0), 400).unwrap();
        assert!(rep.holds);
        assert!(((rep.lhs - rep.rhs) - ((rep.lhs - rep.rhs).round())).abs() < 1e-9);
        let err = semiconjugacy_check(
            &CircleMapLift::translation(1.0 / 3.0),
            &CircleMapLift::translation(0.25),
            &CircleMapLift::identity(),
            400,
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn cyclic_conjugator_examples() {
        let h = cyclic_conjugator(&CircleMapLift::translation(0.25), 4).unwrap();
        assert!((h.eval(0.0) - 0.375).abs() < 1e-15);
        assert!(translation_defect(&h, &CircleMapLift::translation(0.25), 0.25, 100) < 1e-15);
        let g = conj(&CircleMapLift::translation(1.0 / 3.0));
        let h = cyclic_conjugator(&g, 3).unwrap();
        assert_eq!(h.degree(), 1);
        assert!(translation_defect(&h, &g, 1.0 / 3.0, 1000) < 1e-6);
        let id = cyclic_conjugator(&CircleMapLift::identity(), 1).unwrap();
        assert_eq!(id.eval(0.3), 0.3);
        for n in 1..=12u64 {
            let h = cyclic_conjugator(&CircleMapLift::translation(1.0 / n as f64), n).unwrap();
            assert!((h.eval(0.0) - (n - 1) as f64 / (2 * n) as f64).abs() < 1e-12);
        }
        assert!(matches!(
            cyclic_conjugator(&CircleMapLift::translation(0.4), 5),
            Err(Error::Convention { .. })
        ));
        assert!(matches!(
            cyclic_conjugator(&CircleMapLift::translation(0.3), 5),
            Err(Error::Order { .. })
        ));
    }

    #[test]
    fn dihedral_conjugator_examples() {
        let g = CircleMapLift::translation(1.0 / 3.0);
        let s = CircleMapLift::reflection(0.0);
        let h = dihedral_conjugator(&g, &s, 3).unwrap();
        assert!(reflection_defect(&h, &s, 100) < 1e-15);
        assert!((h.eval(0.7) - 0.7).abs() < 1e-15);

        let gs = conj(&g);
        let ss = conj(&s);
        let h = dihedral_conjugator(&gs, &ss, 3).unwrap();
        assert_eq!(h.degree(), 1);
        assert!(translation_defect(&h, &gs, 1.0 / 3.0, 1000) < 1e-6);
        assert!(reflection_defect(&h, &ss, 1000) < 1e-6);

        assert!(dihedral_conjugator(&g, &CircleMapLift::translation(0.5), 3).is_err());
        assert!(matches!(
            dihedral_conjugator(&g, &s, 4),
            Err(Error::GroupRelation(_))
        ));
    }
}
