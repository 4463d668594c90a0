//! Curves in the unit 3-sphere, numerical linking numbers, and type detection
//! for knots carrying an explicit orthogonal group action.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector3, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{arg, Error, Result};
use crate::orthrep::{evaluate, GroupElement, IrredLabel, OrthMatrix, RepSum};
use crate::typing::{admissible_types, c2_type, classify, SymmetryType};
use crate::zmod::{gcd, GroupSpec, ModClass};

pub type Point = Vector4<f64>;

const TAU: f64 = 2.0 * PI;

/// Smallest sample count accepted for a sampled curve.
pub const MIN_CURVE_SAMPLES: usize = 512;
/// Default number of samples per curve in a linking integral.
pub const DEFAULT_LINK_SAMPLES: usize = 1024;
/// Largest sample count reached when a linking integral is refined automatically.
pub const MAX_LINK_SAMPLES: usize = 8192;
/// A linking integral further than this from an integer is rejected.
pub const RESIDUAL_LIMIT: f64 = 0.05;
/// One-sided Hausdorff distance accepted for curve invariance.
pub const INVARIANCE_TOL: f64 = 1e-6;

const RELATION_TOL: f64 = 1e-9;
const FAITHFUL_TOL: f64 = 1e-6;
const KERNEL_TOL: f64 = 1e-9;
const POLE_CANDIDATES: usize = 64;
const POLE_SEED: u64 = 0x5eed_0001;
const PAIR_SEED: u64 = 0x5eed_0002;
// Orientation of the projection frame relative to the Gauss kernel below; fixed so that
// the xy and zw great circles link with +1.
const LINK_SIGN: f64 = -1.0;

/// A great circle: the unit circle of a 2-plane through the origin, traversed
/// from `u` towards `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundCircle {
    u: Point,
    v: Point,
}

impl RoundCircle {
    pub fn new(u: Point, v: Point) -> Result<Self> {
        let dev = (u.norm_squared() - 1.0)
            .abs()
            .max((v.norm_squared() - 1.0).abs())
            .max(u.dot(&v).abs());
        if dev > 1e-12 {
            return arg(format!("circle basis is not orthonormal (deviation {dev:e})"));
        }
        Ok(RoundCircle { u, v })
    }

    /// Orthonormalizes `a`, `b` (in that order).
    pub fn spanning(a: Point, b: Point) -> Result<Self> {
        let na = a.norm();
        if na < 1e-12 {
            return arg("degenerate plane");
        }
        let u = a / na;
        let w = b - u * u.dot(&b);
        let nw = w.norm();
        if nw < 1e-9 * b.norm().max(1.0) {
            return arg("degenerate plane");
        }
        RoundCircle::new(u, w / nw)
    }

    pub fn xy() -> Self {
        RoundCircle { u: Point::x(), v: Point::y() }
    }

    pub fn zw() -> Self {
        RoundCircle { u: Point::z(), v: Point::w() }
    }

    pub fn basis(&self) -> (Point, Point) {
        (self.u, self.v)
    }

    pub fn reversed(&self) -> Self {
        RoundCircle { u: self.u, v: -self.v }
    }

    pub fn point(&self, t: f64) -> Point {
        self.u * libm::cos(t) + self.v * libm::sin(t)
    }

    /// Euclidean distance from `x` to the circle.
    pub fn distance(&self, x: &Point) -> f64 {
        let p = libm::sqrt(self.u.dot(x).powi(2) + self.v.dot(x).powi(2));
        libm::sqrt((x.norm_squared() + 1.0 - 2.0 * p).max(0.0))
    }

    /// The circle of the orthogonal plane, oriented to link this one positively.
    pub fn complement(&self) -> RoundCircle {
        let mut basis: Vec<Point> = Vec::new();
        let mut cands: Vec<Point> = (0..4)
            .map(|i| {
                let e = Point::ith(i, 1.0);
                e - self.u * self.u.dot(&e) - self.v * self.v.dot(&e)
            })
            .collect();
        while basis.len() < 2 {
            let (i, _) = cands
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.norm()))
                .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            let c = cands.swap_remove(i);
            let c = c / c.norm();
            for d in cands.iter_mut() {
                *d -= c * c.dot(d);
            }
            basis.push(c);
        }
        let out = RoundCircle { u: basis[0], v: basis[1] };
        if linking_sign(self, &out) == Some(-1) {
            out.reversed()
        } else {
            out
        }
    }

    pub fn curve(&self) -> KnotCurve {
        KnotCurve::circle(*self)
    }
}

/// Linking number of two great circles in complementary planes (`None` if the
/// planes meet, i.e. the circles intersect).
pub fn linking_sign(a: &RoundCircle, b: &RoundCircle) -> Option<i64> {
    let m = Matrix4::from_columns(&[a.u, a.v, b.u, b.v]);
    let d = m.determinant();
    if d.abs() < 1e-9 {
        None
    } else if d > 0.0 {
        Some(1)
    } else {
        Some(-1)
    }
}

/// Periodic cubic spline through uniformly spaced samples of `[0, 2 pi)`.
#[derive(Debug, Clone, PartialEq)]
struct PeriodicSpline {
    values: Vec<Point>,
    second: Vec<Point>,
}

/// Solves the cyclic system with rows `x[i-1] + 4 x[i] + x[i+1] = r[i]`.
fn solve_cyclic(rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let gamma = -4.0;
    let mut diag = alloc::vec![4.0; n];
    diag[0] = 4.0 - gamma;
    diag[n - 1] = 4.0 - 1.0 / gamma;
    let thomas = |r: &[f64]| -> Vec<f64> {
        let mut cp = alloc::vec![0.0; n];
        let mut dp = alloc::vec![0.0; n];
        cp[0] = 1.0 / diag[0];
        dp[0] = r[0] / diag[0];
        for i in 1..n {
            let m = diag[i] - cp[i - 1];
            cp[i] = 1.0 / m;
            dp[i] = (r[i] - dp[i - 1]) / m;
        }
        let mut x = alloc::vec![0.0; n];
        x[n - 1] = dp[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = dp[i] - cp[i] * x[i + 1];
        }
        x
    };
    let x = thomas(rhs);
    let mut u = alloc::vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = 1.0;
    let z = thomas(&u);
    let fact = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
    x.iter().zip(&z).map(|(xi, zi)| xi - fact * zi).collect()
}

impl PeriodicSpline {
    fn new(values: Vec<Point>) -> Self {
        let n = values.len();
        let h = TAU / n as f64;
        let mut second = alloc::vec![Point::zeros(); n];
        for k in 0..4 {
            let rhs: Vec<f64> = (0..n)
                .map(|i| {
                    let prev = values[(i + n - 1) % n][k];
                    let next = values[(i + 1) % n][k];
                    6.0 / (h * h) * (next - 2.0 * values[i][k] + prev)
                })
                .collect();
            for (i, s) in solve_cyclic(&rhs).into_iter().enumerate() {
                second[i][k] = s;
            }
        }
        PeriodicSpline { values, second }
    }

    fn eval(&self, t: f64) -> Point {
        let n = self.values.len();
        let h = TAU / n as f64;
        let s = t.rem_euclid(TAU) / h;
        let mut i = libm::floor(s) as usize;
        if i >= n {
            i = n - 1;
        }
        let b = s - i as f64;
        let a = 1.0 - b;
        let j = (i + 1) % n;
        self.values[i] * a
            + self.values[j] * b
            + (self.second[i] * (a * a * a - a) + self.second[j] * (b * b * b - b)) * (h * h / 6.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    /// `(cos p t, sin p t, r cos q t, r sin q t)` normalized.
    Torus { p: i64, q: i64, ratio: f64 },
    Circle(RoundCircle),
    Sampled(PeriodicSpline),
}

/// A closed curve `[0, 2 pi) -> S^3`, optionally moved by an orthogonal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotCurve {
    shape: Shape,
    frame: Matrix4<f64>,
    orientation: i8,
}

impl KnotCurve {
    fn with_shape(shape: Shape) -> Self {
        KnotCurve { shape, frame: Matrix4::identity(), orientation: 1 }
    }

    /// Torus-type curve on the torus with radius ratio `ratio`; embedded when
    /// `gcd(p, q) = 1`.
    pub fn torus_like(p: i64, q: i64, ratio: f64) -> Result<Self> {
        if !(ratio.is_finite() && ratio > 0.0) {
            return arg("radius ratio must be positive");
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs());
        if g != 1 {
            return Err(Error::Construction(format!(
                "({p},{q}) has gcd {g}, so the curve is not embedded"
            )));
        }
        Ok(KnotCurve::with_shape(Shape::Torus { p, q, ratio }))
    }

    pub fn circle(c: RoundCircle) -> Self {
        KnotCurve::with_shape(Shape::Circle(c))
    }

    /// Interpolating curve through unit vectors at `t_i = 2 pi i / N`.
    pub fn from_samples(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        if n < MIN_CURVE_SAMPLES {
            return arg(format!("a sampled curve needs at least {MIN_CURVE_SAMPLES} points, got {n}"));
        }
        let mut pts = Vec::with_capacity(n);
        for (i, p) in points.into_iter().enumerate() {
            let norm = p.norm();
            if !norm.is_finite() || (norm - 1.0).abs() > 1e-6 {
                return arg(format!("sample {i} is not on the unit sphere (norm {norm})"));
            }
            pts.push(p / norm);
        }
        let mut closest = f64::INFINITY;
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                closest = closest.min((pts[i] - pts[j]).norm_squared());
            }
        }
        if closest <= 1e-24 {
            return arg("sampled curve is not embedded");
        }
        Ok(KnotCurve::with_shape(Shape::Sampled(PeriodicSpline::new(pts))))
    }

    /// Samples `f` (normalized) at `n` uniform parameters.
    pub fn from_fn<F: Fn(f64) -> Point>(n: usize, f: F) -> Result<Self> {
        let pts = (0..n)
            .map(|i| {
                let p = f(TAU * i as f64 / n as f64);
                p / p.norm()
            })
            .collect();
        KnotCurve::from_samples(pts)
    }

    pub fn eval(&self, t: f64) -> Point {
        let t = self.orientation as f64 * t;
        let x = match &self.shape {
            Shape::Torus { p, q, ratio } => {
                let (pt, qt) = (*p as f64 * t, *q as f64 * t);
                Point::new(
                    libm::cos(pt),
                    libm::sin(pt),
                    ratio * libm::cos(qt),
                    ratio * libm::sin(qt),
                ) / libm::sqrt(1.0 + ratio * ratio)
            }
            Shape::Circle(c) => c.point(t),
            Shape::Sampled(s) => s.eval(t).normalize(),
        };
        self.frame * x
    }

    /// Points at `2 pi i / n`.
    pub fn sample(&self, n: usize) -> Vec<Point> {
        (0..n).map(|i| self.eval(TAU * i as f64 / n as f64)).collect()
    }

    /// Number of stored samples for sampled curves.
    pub fn native_samples(&self) -> Option<usize> {
        match &self.shape {
            Shape::Sampled(s) => Some(s.values.len()),
            _ => None,
        }
    }

    /// Stored samples for sampled curves, otherwise an even sampling.
    pub fn reference_points(&self) -> Vec<Point> {
        self.sample(self.native_samples().unwrap_or(DEFAULT_LINK_SAMPLES))
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn reversed(&self) -> Self {
        KnotCurve { orientation: -self.orientation, ..self.clone() }
    }

    /// Image under an orthogonal matrix.
    pub fn transformed(&self, m: &Matrix4<f64>) -> Result<Self> {
        let dev = (m.transpose() * m - Matrix4::identity()).amax();
        if dev > 1e-9 {
            return arg(format!("matrix is not orthogonal (deviation {dev:e})"));
        }
        Ok(KnotCurve { frame: m * self.frame, ..self.clone() })
    }
}

/// The torus knot `T(p, q)` on the Clifford torus.
pub fn torus_knot(p: i64, q: i64) -> Result<KnotCurve> {
    if p < 2 || q < 2 {
        return arg("torus knots need p, q >= 2");
    }
    let g = gcd(p as u64, q as u64);
    if g != 1 {
        return Err(Error::Construction(format!(
            "T({p},{q}) is a {g}-component link, not a knot"
        )));
    }
    KnotCurve::torus_like(p, q, 1.0)
}

/// The `k`-th power map of `O(2)`: `R(t) -> R(k t)`, `R(t) C -> R(k t) C` with
/// `C = diag(1, -1)`. Agrees with the matrix power on rotations.
fn o2_power(m: &Matrix2<f64>, k: i64) -> Matrix2<f64> {
    let t = libm::atan2(m[(1, 0)], m[(0, 0)]) * k as f64;
    let (c, s) = (libm::cos(t), libm::sin(t));
    if m.determinant() > 0.0 {
        Matrix2::new(c, -s, s, c)
    } else {
        Matrix2::new(c, s, s, -c)
    }
}

/// The matrix by which an element of `O(2)` acts on `T(p, q)`:
/// `diag(M^p, M^q)` with powers taken in `O(2)`.
pub fn torus_action(p: i64, q: i64, m: &OrthMatrix) -> Result<OrthMatrix> {
    if m.dim() != 2 {
        return arg("torus action takes a 2x2 orthogonal matrix");
    }
    let mm = m.matrix();
    let m2 = Matrix2::new(mm[(0, 0)], mm[(0, 1)], mm[(1, 0)], mm[(1, 1)]);
    let (a, b) = (o2_power(&m2, p), o2_power(&m2, q));
    let mut out = Matrix4::zeros();
    out.fixed_view_mut::<2, 2>(0, 0).copy_from(&a);
    out.fixed_view_mut::<2, 2>(2, 2).copy_from(&b);
    OrthMatrix::from_matrix4(out)
}

fn matrix4(m: &OrthMatrix) -> Result<Matrix4<f64>> {
    m.to_matrix4()
}

/// An action of `C_n` or `D_n` on `S^3` by explicit orthogonal matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixAction {
    group: GroupSpec,
    rho: Matrix4<f64>,
    sigma: Option<Matrix4<f64>>,
}

impl MatrixAction {
    /// Checks the group relations (to `1e-9`) and faithfulness.
    pub fn new(group: GroupSpec, rho: &OrthMatrix, sigma: Option<&OrthMatrix>) -> Result<Self> {
        let rho = matrix4(rho)?;
        let sigma = sigma.map(matrix4).transpose()?;
        if group.is_dihedral() != sigma.is_some() {
            return arg(format!(
                "{group} needs {} reflection generator",
                if group.is_dihedral() { "a" } else { "no" }
            ));
        }
        let action = MatrixAction { group, rho, sigma };
        let id = Matrix4::identity();
        let rn = ((0..group.n()).fold(id, |acc, _| acc * rho) - id).amax();
        if rn > RELATION_TOL {
            return Err(Error::GroupRelation(format!("|rho^n - I| = {rn:e}")));
        }
        if let Some(s) = sigma {
            let s2 = (s * s - id).amax();
            let rs = rho * s;
            let rs2 = (rs * rs - id).amax();
            if s2.max(rs2) > RELATION_TOL {
                return Err(Error::GroupRelation(format!(
                    "|sigma^2 - I| = {s2:e}, |(rho sigma)^2 - I| = {rs2:e}"
                )));
            }
        }
        for g in GroupElement::all(group) {
            if g.is_identity(group.n()) {
                continue;
            }
            if (action.element(g) - id).amax() < FAITHFUL_TOL {
                return arg(format!("action is not faithful: {g} acts trivially"));
            }
        }
        Ok(action)
    }

    pub fn from_rep(rep: &RepSum) -> Result<Self> {
        if rep.dim() != 4 {
            return arg("matrix actions need a 4-dimensional representation");
        }
        let group = rep.group();
        let rho = evaluate(rep, GroupElement::rho(1))?;
        let sigma = if group.is_dihedral() {
            Some(evaluate(rep, GroupElement::sigma())?)
        } else {
            None
        };
        MatrixAction::new(group, &rho, sigma.as_ref())
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn rho(&self) -> Matrix4<f64> {
        self.rho
    }

    pub fn sigma(&self) -> Option<Matrix4<f64>> {
        self.sigma
    }

    fn power(&self, k: i64) -> Matrix4<f64> {
        let n = self.group.n() as i64;
        let mut out = Matrix4::identity();
        for _ in 0..k.rem_euclid(n) {
            out *= self.rho;
        }
        out
    }

    /// Matrix of `rho^k sigma^e`.
    pub fn element(&self, g: GroupElement) -> Matrix4<f64> {
        let r = self.power(g.rho_power);
        match (g.reflect, self.sigma) {
            (true, Some(s)) => r * s,
            _ => r,
        }
    }

    /// `Q M Q^T` for every generator.
    pub fn conjugated(&self, q: &Matrix4<f64>) -> Result<Self> {
        let c = |m: Matrix4<f64>| OrthMatrix::from_matrix4(q * m * q.transpose());
        let rho = c(self.rho)?;
        let sigma = self.sigma.map(c).transpose()?;
        MatrixAction::new(self.group, &rho, sigma.as_ref())
    }

    /// Same action with `rho^k` as the rotation generator (`k` a unit mod `n`).
    pub fn with_generator_power(&self, k: i64) -> Result<Self> {
        let n = self.group.n();
        if gcd(k.rem_euclid(n as i64) as u64, n) != 1 {
            return arg(format!("{k} is not a unit mod {n}"));
        }
        let rho = OrthMatrix::from_matrix4(self.power(k))?;
        let sigma = self.sigma.map(OrthMatrix::from_matrix4).transpose()?;
        MatrixAction::new(self.group, &rho, sigma.as_ref())
    }
}

/// Fixed points of one element on `S^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedSet {
    Empty,
    /// `{p, -p}`.
    PointPair(Point),
    Circle(RoundCircle),
    /// A great 2-sphere, given by its unit normal.
    Sphere { normal: Point },
}

impl FixedSet {
    /// Dimension of the fixed set, `-1` for empty.
    pub fn dim(&self) -> i32 {
        match self {
            FixedSet::Empty => -1,
            FixedSet::PointPair(_) => 0,
            FixedSet::Circle(_) => 1,
            FixedSet::Sphere { .. } => 2,
        }
    }
}

/// Orthonormal basis of `ker(M - sign I)` for orthogonal `M`.
fn eigenspace(m: &Matrix4<f64>, sign: f64) -> Vec<Point> {
    let gram = Matrix4::identity() * 2.0 - (m + m.transpose()) * sign;
    let eig = SymmetricEigen::new(gram);
    (0..4)
        .filter(|&i| eig.eigenvalues[i].abs() < KERNEL_TOL)
        .map(|i| eig.eigenvectors.column(i).into_owned())
        .collect()
}

pub fn fixed_axis(action: &MatrixAction, element: GroupElement) -> Result<FixedSet> {
    let n = action.group.n();
    if element.reflect && !action.group.is_dihedral() {
        return arg(format!("{} has no reflections", action.group));
    }
    if element.is_identity(n) {
        return arg("the identity fixes everything");
    }
    let ker = eigenspace(&action.element(element), 1.0);
    Ok(match ker.len() {
        0 => FixedSet::Empty,
        1 => FixedSet::PointPair(ker[0]),
        2 => FixedSet::Circle(RoundCircle::spanning(ker[0], ker[1])?),
        3 => {
            let normal = eigenspace(&action.element(element), -1.0);
            FixedSet::Sphere { normal: normal[0] }
        }
        _ => return arg("element acts trivially"),
    })
}

/// Result of a numerical linking integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Linking {
    pub value: i64,
    /// Value of the discretized integral before rounding.
    pub raw: f64,
    pub residual: f64,
    pub samples: usize,
    /// Smallest distance between the two sample sets.
    pub min_distance: f64,
}

fn unit_candidates(count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point::from_fn(|_, _| rng.random_range(-1.0..1.0));
        let n = p.norm();
        if n > 0.1 && n <= 1.0 {
            out.push(p / n);
        }
    }
    out
}

/// Projection pole: the candidate (or antipode) farthest from every sample.
fn projection_pole(a: &[Point], b: &[Point]) -> Point {
    let mut best = (Point::w(), -1.0);
    for c in unit_candidates(POLE_CANDIDATES, POLE_SEED) {
        for pole in [c, -c] {
            let d = a
                .iter()
                .chain(b)
                .map(|x| (x - pole).norm_squared())
                .fold(f64::INFINITY, f64::min);
            if d > best.1 {
                best = (pole, d);
            }
        }
    }
    best.0
}

/// Orthonormal frame of the tangent space at `pole`, positively oriented after `pole`.
fn tangent_frame(pole: &Point) -> [Point; 3] {
    let skip = (0..4)
        .max_by(|&i, &j| pole[i].abs().total_cmp(&pole[j].abs()))
        .unwrap();
    let mut frame: Vec<Point> = Vec::with_capacity(3);
    for i in (0..4).filter(|&i| i != skip) {
        let mut e = Point::ith(i, 1.0);
        e -= pole * pole.dot(&e);
        for f in &frame {
            e -= f * f.dot(&e);
        }
        frame.push(e.normalize());
    }
    let mut out = [frame[0], frame[1], frame[2]];
    if Matrix4::from_columns(&[*pole, out[0], out[1], out[2]]).determinant() < 0.0 {
        out[2] = -out[2];
    }
    out
}

fn stereographic(pole: &Point, frame: &[Point; 3], x: &Point) -> Vector3<f64> {
    let s = 1.0 / (1.0 - pole.dot(x));
    Vector3::new(frame[0].dot(x), frame[1].dot(x), frame[2].dot(x)) * s
}

/// Midpoint-rule Gauss integral for closed polygons in `R^3`.
fn gauss_sum(a: &[Vector3<f64>], b: &[Vector3<f64>]) -> f64 {
    let seg = |p: &[Vector3<f64>]| -> Vec<(Vector3<f64>, Vector3<f64>)> {
        (0..p.len())
            .map(|i| {
                let q = p[(i + 1) % p.len()];
                ((p[i] + q) * 0.5, q - p[i])
            })
            .collect()
    };
    let (sa, sb) = (seg(a), seg(b));
    let mut total = 0.0;
    for (ma, da) in &sa {
        for (mb, db) in &sb {
            let r = ma - mb;
            let d = r.norm();
            total += r.dot(&da.cross(db)) / (d * d * d);
        }
    }
    total / (4.0 * PI)
}

fn max_spacing(p: &[Point]) -> f64 {
    (0..p.len())
        .map(|i| (p[(i + 1) % p.len()] - p[i]).norm())
        .fold(0.0, f64::max)
}

/// Linking number by the Gauss integral in a stereographic chart, with `samples`
/// points on each curve.
pub fn gauss_linking(c1: &KnotCurve, c2: &KnotCurve, samples: usize) -> Result<Linking> {
    if samples < 16 {
        return arg("use at least 16 samples per curve");
    }
    let a = c1.sample(samples);
    let b = c2.sample(samples);
    let spacing = max_spacing(&a).max(max_spacing(&b));
    let min_distance = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (x - y).norm_squared()))
        .fold(f64::INFINITY, f64::min)
        .sqrt();
    if min_distance <= 10.0 * spacing {
        return Err(Error::Proximity { distance: min_distance, required: 10.0 * spacing });
    }
    let pole = projection_pole(&a, &b);
    let frame = tangent_frame(&pole);
    let pa: Vec<_> = a.iter().map(|x| stereographic(&pole, &frame, x)).collect();
    let pb: Vec<_> = b.iter().map(|x| stereographic(&pole, &frame, x)).collect();
    let raw = LINK_SIGN * gauss_sum(&pa, &pb);
    let value = libm::round(raw);
    let residual = (raw - value).abs();
    if residual >= RESIDUAL_LIMIT {
        return Err(Error::Resolution { residual });
    }
    Ok(Linking { value: value as i64, raw, residual, samples, min_distance })
}

/// [`gauss_linking`], doubling the sample count on proximity or resolution
/// failures up to [`MAX_LINK_SAMPLES`].
pub fn gauss_linking_refined(c1: &KnotCurve, c2: &KnotCurve, samples: usize) -> Result<Linking> {
    let mut s = samples;
    loop {
        match gauss_linking(c1, c2, s) {
            Err(Error::Proximity { .. } | Error::Resolution { .. }) if s < MAX_LINK_SAMPLES => {
                s = (2 * s).min(MAX_LINK_SAMPLES)
            }
            other => return other,
        }
    }
}

/// Dense lookup table for nearest-point queries on a curve.
struct CurveIndex<'a> {
    curve: &'a KnotCurve,
    points: Vec<Point>,
}

impl<'a> CurveIndex<'a> {
    fn new(curve: &'a KnotCurve) -> Self {
        let n = curve.native_samples().map(|s| 4 * s).unwrap_or(0).max(4096);
        CurveIndex { curve, points: curve.sample(n) }
    }

    fn step(&self) -> f64 {
        TAU / self.points.len() as f64
    }

    /// Parameter in `[0, 2 pi)` of the nearest curve point, and the distance.
    fn nearest(&self, x: &Point) -> (f64, f64) {
        let (i, _) = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, (p - x).norm_squared()))
            .fold((0, f64::INFINITY), |acc, v| if v.1 < acc.1 { v } else { acc });
        let h = self.step();
        let f = |t: f64| (self.curve.eval(t) - x).norm_squared();
        let (mut lo, mut hi) = (i as f64 * h - h, i as f64 * h + h);
        let g = (libm::sqrt(5.0) - 1.0) / 2.0;
        let (mut c, mut d) = (hi - g * (hi - lo), lo + g * (hi - lo));
        let (mut fc, mut fd) = (f(c), f(d));
        while hi - lo > 1e-12 {
            if fc < fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - g * (hi - lo);
                fc = f(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + g * (hi - lo);
                fd = f(d);
            }
        }
        let t = 0.5 * (lo + hi);
        (t.rem_euclid(TAU), libm::sqrt(f(t)))
    }

    /// One-sided Hausdorff distance from `M K` to `K`.
    fn invariance_deviation(&self, m: &Matrix4<f64>) -> f64 {
        self.curve
            .reference_points()
            .iter()
            .map(|x| self.nearest(&(m * x)).1)
            .fold(0.0, f64::max)
    }

    /// Degree (`+1` or `-1`) of the self-map of the knot induced by `m`.
    fn induced_degree(&self, m: &Matrix4<f64>) -> i64 {
        let k = 256;
        let params: Vec<f64> = (0..k)
            .map(|i| self.nearest(&(m * self.curve.eval(TAU * i as f64 / k as f64))).0)
            .collect();
        let mut total = 0.0;
        for i in 0..k {
            let d = params[(i + 1) % k] - params[i];
            total += d - TAU * libm::round(d / TAU);
        }
        libm::round(total / TAU) as i64
    }

    fn distance_to_circle(&self, c: &RoundCircle) -> f64 {
        self.points.iter().map(|p| c.distance(p)).fold(f64::INFINITY, f64::min)
    }
}

/// One-sided Hausdorff distance from the image of the curve's samples under `m`
/// to the curve.
pub fn invariance_deviation(curve: &KnotCurve, m: &Matrix4<f64>) -> f64 {
    CurveIndex::new(curve).invariance_deviation(m)
}

/// A linking number measured during detection.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasuredLinking {
    pub circle: String,
    pub linking: Linking,
}

/// A detected type together with the evidence used.
#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub ty: SymmetryType,
    /// `k` such that `rho^k` is the generator turning the knot by `+1/n`.
    pub generator_power: u64,
    pub linking: Vec<MeasuredLinking>,
}

/// Rotation angle of `m` on the oriented plane of `c`, as a multiple of `2 pi / n`.
fn rotation_index(m: &Matrix4<f64>, c: &RoundCircle, n: u64) -> Result<i64> {
    let (u, v) = c.basis();
    let mu = m * u;
    let t = libm::atan2(v.dot(&mu), u.dot(&mu)) * n as f64 / TAU;
    let k = libm::round(t);
    if (t - k).abs() > 1e-6 {
        return Err(Error::Classification(format!(
            "rotation angle is not a multiple of 2 pi / {n}"
        )));
    }
    Ok((k as i64).rem_euclid(n as i64))
}

fn check_clear(index: &CurveIndex<'_>, c: &RoundCircle, what: &str) -> Result<()> {
    let d = index.distance_to_circle(c);
    if d < INVARIANCE_TOL {
        return Err(Error::Transversality { what: String::from(what), distance: d });
    }
    Ok(())
}

fn measure(curve: &KnotCurve, c: &RoundCircle, what: &str, samples: usize) -> Result<MeasuredLinking> {
    Ok(MeasuredLinking {
        circle: String::from(what),
        linking: gauss_linking_refined(curve, &c.curve(), samples)?,
    })
}

/// Clearance of the curve from a pair of complementary circles.
fn pair_clearance(points: &[Point], x: &RoundCircle, y: &RoundCircle) -> f64 {
    points
        .iter()
        .map(|p| x.distance(p).min(y.distance(p)))
        .fold(f64::INFINITY, f64::min)
}

/// Two complementary invariant great circles for a fixed-point-free rotation,
/// as far from the curve as the search finds.
fn invariant_pair(m: &Matrix4<f64>, points: &[Point]) -> Result<(RoundCircle, RoundCircle)> {
    let eig = SymmetricEigen::new(m + m.transpose());
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let col = |i: usize| eig.eigenvectors.column(order[i]).into_owned();
    let gap = eig.eigenvalues[order[2]] - eig.eigenvalues[order[1]];
    if gap > 1e-6 {
        let x = RoundCircle::spanning(col(0), col(1))?;
        let y = RoundCircle::spanning(col(2), col(3))?;
        let y = if linking_sign(&x, &y) == Some(-1) { y.reversed() } else { y };
        return Ok((x, y));
    }
    // Every plane span(v, m v) is invariant; search for one clear of the curve.
    let pair_for = |v: &Point| -> Option<(RoundCircle, RoundCircle)> {
        let x = RoundCircle::spanning(*v, m * v).ok()?;
        let y = x.complement();
        Some((x, y))
    };
    let score = |v: &Point| pair_for(v).map(|(x, y)| pair_clearance(points, &x, &y)).unwrap_or(-1.0);
    let mut best = (Point::x(), score(&Point::x()));
    for v in unit_candidates(256, PAIR_SEED) {
        let s = score(&v);
        if s > best.1 {
            best = (v, s);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PAIR_SEED + 1);
    let mut step = 0.2;
    for _ in 0..300 {
        let trial = (best.0 + Point::from_fn(|_, _| rng.random_range(-step..step))).normalize();
        let s = score(&trial);
        if s > best.1 {
            best = (trial, s);
        } else {
            step = (step * 0.97).max(1e-4);
        }
    }
    pair_for(&best.0).ok_or_else(|| Error::Classification(String::from("no invariant circle pair found")))
}

fn cyc_rep(n: u64, blocks: Vec<IrredLabel>) -> Result<RepSum> {
    RepSum::new(GroupSpec::cyclic(n)?, blocks)
}

/// Type of `<m>` acting on the curve, `m` turning the knot by `+1/n` (`n >= 3`).
fn cyclic_part(
    m: &Matrix4<f64>,
    n: u64,
    curve: &KnotCurve,
    index: &CurveIndex<'_>,
    samples: usize,
) -> Result<(SymmetryType, Vec<MeasuredLinking>)> {
    let res = |k: i64| ModClass::new(k, n);
    let plus = eigenspace(m, 1.0);
    if m.determinant() < 0.0 {
        let minus = eigenspace(m, -1.0);
        if plus.len() != 1 || minus.len() != 1 {
            return Err(Error::Classification(String::from(
                "orientation-reversing generator without a rotoreflection axis",
            )));
        }
        let axis = RoundCircle::spanning(plus[0], minus[0])?;
        check_clear(index, &axis, "rotoreflection axis")?;
        let turning = axis.complement();
        let idx = rotation_index(m, &turning, n)?;
        let lk = measure(curve, &axis, "rotoreflection axis", samples)?;
        consistent(lk.linking.value, idx, n)?;
        let rep = cyc_rep(n, alloc::vec![
            IrredLabel::CycRot(res(lk.linking.value)?),
            IrredLabel::CycSign,
            IrredLabel::CycOne
        ])?;
        return Ok((classify(&rep)?, alloc::vec![lk]));
    }
    match plus.len() {
        2 => {
            let axis = RoundCircle::spanning(plus[0], plus[1])?;
            check_clear(index, &axis, "rotation axis")?;
            let turning = axis.complement();
            let idx = rotation_index(m, &turning, n)?;
            let lk = measure(curve, &axis, "rotation axis", samples)?;
            consistent(lk.linking.value, idx, n)?;
            let rep = cyc_rep(n, alloc::vec![
                IrredLabel::CycRot(res(lk.linking.value)?),
                IrredLabel::CycOne,
                IrredLabel::CycOne
            ])?;
            Ok((classify(&rep)?, alloc::vec![lk]))
        }
        0 => {
            let (x, y) = invariant_pair(m, &index.points)?;
            check_clear(index, &x, "first invariant circle")?;
            check_clear(index, &y, "second invariant circle")?;
            let lx = measure(curve, &x, "first invariant circle", samples)?;
            let ly = measure(curve, &y, "second invariant circle", samples)?;
            consistent(ly.linking.value, rotation_index(m, &x, n)?, n)?;
            consistent(lx.linking.value, rotation_index(m, &y, n)?, n)?;
            let rep = cyc_rep(n, alloc::vec![
                IrredLabel::CycRot(res(ly.linking.value)?),
                IrredLabel::CycRot(res(lx.linking.value)?)
            ])?;
            Ok((classify(&rep)?, alloc::vec![lx, ly]))
        }
        k => Err(Error::Classification(format!(
            "orientation-preserving generator with a {k}-dimensional fixed space"
        ))),
    }
}

fn consistent(lk: i64, idx: i64, n: u64) -> Result<()> {
    if (lk - idx).rem_euclid(n as i64) != 0 {
        return Err(Error::Classification(format!(
            "measured linking number {lk} disagrees with the rotation angle {idx}/{n}"
        )));
    }
    Ok(())
}

fn sphere_fixed_dim(m: &Matrix4<f64>) -> i32 {
    eigenspace(m, 1.0).len() as i32 - 1
}

/// The dihedral type with the given rotation part and reflection fixed-set dimensions.
fn match_dihedral(group: GroupSpec, rho: SymmetryType, refl: (i32, i32)) -> Result<SymmetryType> {
    let want = (refl.0.max(refl.1), refl.0.min(refl.1));
    for t in admissible_types(group) {
        if t.rho_type() != Some(rho) {
            continue;
        }
        let (a, b) = t.reflection_types().unwrap();
        let (da, db) = (a.c2_fixed_dims().unwrap().1, b.c2_fixed_dims().unwrap().1);
        if (da.max(db), da.min(db)) == want {
            return Ok(t);
        }
    }
    Err(Error::Classification(format!(
        "no {group} type has rotation part {rho} and reflections fixing spheres of dimensions {} and {}",
        want.0, want.1
    )))
}

/// Type of a symmetric knot given by an explicit isometric action.
///
/// The rotation generator is re-chosen so it turns the knot by `+1/n` along the
/// curve's orientation, then the axis or invariant circles are located and
/// linked with the knot.
pub fn detect_type(action: &MatrixAction, curve: &KnotCurve, samples: usize) -> Result<Detection> {
    let index = CurveIndex::new(curve);
    let group = action.group;
    let n = group.n();
    let mut gens = alloc::vec![action.rho];
    gens.extend(action.sigma);
    for g in &gens {
        let dev = index.invariance_deviation(g);
        if dev > INVARIANCE_TOL {
            return Err(Error::Invariance { deviation: dev });
        }
    }
    if group.is_order_two() {
        let g = if group.is_dihedral() { action.sigma.unwrap() } else { action.rho };
        let knot = if index.induced_degree(&g) > 0 { -1 } else { 0 };
        let ty = c2_type(knot, sphere_fixed_dim(&g))?;
        return Ok(Detection { ty, generator_power: 1, linking: Vec::new() });
    }
    if n == 2 {
        let s = action.sigma.unwrap();
        let invols = [action.rho, s, action.rho * s];
        let free: Vec<usize> = (0..3).filter(|&i| index.induced_degree(&invols[i]) > 0).collect();
        if free.len() != 1 {
            return Err(Error::Classification(format!(
                "expected one involution preserving the knot's orientation, found {}",
                free.len()
            )));
        }
        let r = invols[free[0]];
        let others: Vec<Matrix4<f64>> = (0..3).filter(|&i| i != free[0]).map(|i| invols[i]).collect();
        let rho_ty = c2_type(-1, sphere_fixed_dim(&r))?;
        let ty = match_dihedral(
            group,
            rho_ty,
            (sphere_fixed_dim(&others[0]), sphere_fixed_dim(&others[1])),
        )?;
        return Ok(Detection { ty, generator_power: 1, linking: Vec::new() });
    }
    let j = first_return_power(&index, action, n)?;
    let m = action.power(j as i64);
    let (rho_ty, linking) = cyclic_part(&m, n, curve, &index, samples)?;
    let ty = if let Some(s) = action.sigma {
        match_dihedral(group, rho_ty, (sphere_fixed_dim(&s), sphere_fixed_dim(&(action.rho * s))))?
    } else {
        rho_ty
    };
    Ok(Detection { ty, generator_power: j, linking })
}

/// The power `j` such that `rho^j` carries a marked point to the next point of
/// its orbit along the knot.
fn first_return_power(index: &CurveIndex<'_>, action: &MatrixAction, n: u64) -> Result<u64> {
    let mark = index.curve.eval(0.0);
    let mut best = (0, f64::INFINITY);
    let mut x = mark;
    for j in 1..n {
        x = action.rho * x;
        let (t, _) = index.nearest(&x);
        if t < best.1 {
            best = (j, t);
        }
    }
    if gcd(best.0, n) != 1 {
        return Err(Error::Classification(String::from(
            "rotation subgroup does not act on the knot as a rotation of order n",
        )));
    }
    Ok(best.0)
}

/// Linking numbers of one curve with two others, compared modulo the group order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CongruenceReport {
    pub first: Linking,
    pub second: Linking,
    pub modulus: u64,
    pub congruent: bool,
}

/// Compares `lk(c1, c2a)` and `lk(c1, c2b)` mod `n` for invariant curves with a
/// free action on `c1`.
pub fn linking_congruence_probe(
    action: &MatrixAction,
    c1: &KnotCurve,
    c2a: &KnotCurve,
    c2b: &KnotCurve,
    samples: usize,
) -> Result<CongruenceReport> {
    let mut gens = alloc::vec![action.rho];
    gens.extend(action.sigma);
    for (name, c) in [("first", c1), ("second", c2a), ("third", c2b)] {
        let dev = gens.iter().map(|g| invariance_deviation(c, g)).fold(0.0, f64::max);
        if dev > INVARIANCE_TOL {
            return Err(Error::Precondition(format!(
                "{name} curve is not invariant (deviation {dev:e})"
            )));
        }
    }
    let index = CurveIndex::new(c1);
    let group = action.group;
    for g in GroupElement::all(group) {
        if g.is_identity(group.n()) {
            continue;
        }
        let m = action.element(g);
        let moved = index.points.iter().map(|p| (m * p - p).norm()).fold(0.0, f64::max);
        if index.induced_degree(&m) < 0 || moved < INVARIANCE_TOL {
            return Err(Error::Precondition(format!("{g} does not act freely on the first curve")));
        }
    }
    let first = gauss_linking(c1, c2a, samples)?;
    let second = gauss_linking(c1, c2b, samples)?;
    let n = group.n();
    Ok(CongruenceReport {
        first,
        second,
        modulus: n,
        congruent: (first.value - second.value).rem_euclid(n as i64) == 0,
    })
}

/// A rotation in `SO(4)` drawn from a seeded generator (QR of a random matrix).
pub fn seeded_rotation(seed: u64) -> Matrix4<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Matrix4::from_fn(|_, _| rng.random_range(-1.0..1.0));
    let qr = a.qr();
    let mut q = qr.q();
    let r = qr.r();
    for i in 0..4 {
        if r[(i, i)] < 0.0 {
            let c = -q.column(i);
            q.set_column(i, &c);
        }
    }
    if q.determinant() < 0.0 {
        let c = -q.column(0);
        q.set_column(0, &c);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typing::TypeKind;
    use crate::zmod::{FClass, TClass};
    use nalgebra::DMatrix;

    fn rot2(t: f64) -> OrthMatrix {
        OrthMatrix::new(DMatrix::from_row_slice(2, 2, &[t.cos(), -t.sin(), t.sin(), t.cos()])).unwrap()
    }

    fn refl() -> OrthMatrix {
        OrthMatrix::new(DMatrix::from_row_slice(2, 2, &[-1.0, 0.0, 0.0, 1.0])).unwrap()
    }

    fn action(s: &str) -> MatrixAction {
        MatrixAction::from_rep(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn torus_knots() {
        let k = torus_knot(2, 3).unwrap();
        for p in k.sample(1000) {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
        assert!(torus_knot(2, 5).is_ok());
        assert!(matches!(torus_knot(2, 4), Err(Error::Construction(_))));
        assert!(torus_knot(1, 4).is_err());
    }

    #[test]
    fn torus_action_examples() {
        let m = torus_action(2, 3, &rot2(TAU / 5.0)).unwrap();
        let expect = Matrix4::from_fn(|i, j| match (i / 2, j / 2) {
            (0, 0) => rot2(4.0 * PI / 5.0).matrix()[(i, j)],
            (1, 1) => rot2(6.0 * PI / 5.0).matrix()[(i - 2, j - 2)],
            _ => 0.0,
        });
        assert!((m.to_matrix4().unwrap() - expect).amax() < 1e-12);
        let id = torus_action(2, 3, &OrthMatrix::identity(2)).unwrap();
        assert!(id.max_abs_diff(&OrthMatrix::identity(4)) < 1e-15);
    }

    fn equivariance_residual(p: i64, q: i64, m: &OrthMatrix) -> f64 {
        let k = torus_knot(p, q).unwrap();
        let a = torus_action(p, q, m).unwrap().to_matrix4().unwrap();
        let mm = m.matrix();
        (0..1024)
            .map(|i| {
                let t = TAU * i as f64 / 1024.0;
                let (c, s) = (t.cos(), t.sin());
                let ms = (mm[(0, 0)] * c + mm[(0, 1)] * s, mm[(1, 0)] * c + mm[(1, 1)] * s);
                let t2 = ms.1.atan2(ms.0);
                (a * k.eval(t) - k.eval(t2)).amax()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn torus_action_is_equivariant() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
            assert!(equivariance_residual(p, q, &refl()) < 1e-9, "({p},{q}) reflection");
            assert!(equivariance_residual(p, q, &rot2(0.7)) < 1e-9);
            let rs = rot2(1.1).mul(&refl());
            assert!(equivariance_residual(p, q, &rs) < 1e-9);
        }
    }

    #[test]
    fn hopf_link_converges() {
        let (x, z) = (RoundCircle::xy().curve(), RoundCircle::zw().curve());
        let mut last = f64::INFINITY;
        for s in [256, 512, 1024] {
            let l = gauss_linking(&x, &z, s).unwrap();
            assert_eq!(l.value, 1);
            assert!(l.residual < last);
            last = l.residual;
        }
        assert_eq!(gauss_linking(&z, &x, 256).unwrap().value, 1);
        assert_eq!(gauss_linking(&x.reversed(), &z, 256).unwrap().value, -1);
        assert_eq!(gauss_linking(&x, &z.reversed(), 256).unwrap().value, -1);
    }

    #[test]
    fn exact_circle_linking_matches_integral() {
        for seed in 0..6 {
            let q = seeded_rotation(seed);
            let a = RoundCircle::spanning(q * Point::x(), q * Point::y()).unwrap();
            let b = RoundCircle::spanning(q * Point::z(), -(q * Point::w())).unwrap();
            let l = gauss_linking(&a.curve(), &b.curve(), 512).unwrap();
            assert_eq!(Some(l.value), linking_sign(&a, &b));
            assert_eq!(linking_sign(&a, &a.complement()), Some(1));
        }
    }

    #[test]
    fn torus_knot_linking() {
        let k = torus_knot(2, 5).unwrap();
        assert_eq!(gauss_linking(&k, &RoundCircle::zw().curve(), 1024).unwrap().value, 2);
        assert_eq!(gauss_linking(&k, &RoundCircle::xy().curve(), 1024).unwrap().value, 5);
    }

    #[test]
    fn separated_small_circles_are_unlinked() {
        let small = |c: Point| {
            KnotCurve::from_fn(512, move |t| c + (Point::y() * t.cos() + Point::z() * t.sin()) * 0.2)
                .unwrap()
        };
        let l = gauss_linking(&small(Point::x()), &small(-Point::x()), 512).unwrap();
        assert_eq!(l.value, 0);
    }

    #[test]
    fn proximity_is_reported() {
        let a = RoundCircle::xy().curve();
        let b = RoundCircle::spanning(Point::new(1.0, 0.0, 0.01, 0.0), Point::w()).unwrap().curve();
        assert!(matches!(gauss_linking(&a, &b, 256), Err(Error::Proximity { .. })));
    }

    #[test]
    fn sampled_curves_interpolate() {
        let k = torus_knot(3, 5).unwrap();
        let s = KnotCurve::from_samples(k.sample(1024)).unwrap();
        for i in 0..997 {
            let t = TAU * i as f64 / 997.0;
            assert!((s.eval(t) - k.eval(t)).amax() < 1e-7);
            assert!((s.eval(t).norm() - 1.0).abs() < 1e-12);
        }
        assert!(KnotCurve::from_samples(k.sample(100)).is_err());
        let mut pts = k.sample(600);
        pts[300] = pts[100];
        assert!(KnotCurve::from_samples(pts).is_err());
    }

    #[test]
    fn fixed_axis_examples() {
        match fixed_axis(&action("C5: w[1]+w[0]"), GroupElement::rho(1)).unwrap() {
            FixedSet::Circle(c) => {
                let (u, v) = c.basis();
                assert!(u[0].abs() + u[1].abs() + v[0].abs() + v[1].abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(fixed_axis(&action("C5: w[1]+w[1]"), GroupElement::rho(1)).unwrap(), FixedSet::Empty);
        match fixed_axis(&action("C4: w[1]+w[sign]+1"), GroupElement::rho(1)).unwrap() {
            FixedSet::PointPair(p) => assert!((p[3].abs() - 1.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        assert!(fixed_axis(&action("C4: w[1]+w[sign]+1"), GroupElement::rho(4)).is_err());
        let s = fixed_axis(&action("D1: v[1]+1+1"), GroupElement::sigma()).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn matrix_action_validation() {
        let id = OrthMatrix::identity(4);
        let g = GroupSpec::cyclic(3).unwrap();
        assert!(matches!(MatrixAction::new(g, &id, None), Err(Error::Argument(_))));
        let r = evaluate(&"C5: w[1]+w[2]".parse().unwrap(), GroupElement::rho(1)).unwrap();
        assert!(matches!(MatrixAction::new(g, &r, None), Err(Error::GroupRelation(_))));
    }

    #[test]
    fn detects_torus_examples() {
        let c5 = GroupSpec::cyclic(5).unwrap();
        let k25 = torus_knot(2, 5).unwrap();
        let a = MatrixAction::new(c5, &torus_action(2, 5, &rot2(TAU / 5.0)).unwrap(), None).unwrap();
        let d = detect_type(&a, &k25, 1024).unwrap();
        assert_eq!(d.ty, SymmetryType::new(TypeKind::Per(FClass::from_int(2, 5).unwrap()), c5).unwrap());
        assert_eq!(d.linking[0].linking.value.rem_euclid(5), 2);

        let k23 = torus_knot(2, 3).unwrap();
        let a = MatrixAction::new(c5, &torus_action(2, 3, &rot2(TAU / 5.0)).unwrap(), None).unwrap();
        let d = detect_type(&a, &k23, 1024).unwrap();
        assert_eq!(d.ty, SymmetryType::new(TypeKind::FPer(TClass::from_ints(2, 3, 5).unwrap()), c5).unwrap());
        assert_eq!(d.generator_power, 1);

        // Relabelled generator: rho^2 is handed in, rho^3 = (rho^2)^{-1 mod 5}... recovered.
        let d2 = detect_type(&a.with_generator_power(2).unwrap(), &k23, 1024).unwrap();
        assert_eq!(d2.ty, d.ty);
        assert_eq!(d2.generator_power, 3);
    }

    #[test]
    fn detects_hopf_fiber_as_period_one() {
        let a = action("C4: w[1]+w[0]");
        let d = detect_type(&a, &RoundCircle::xy().curve(), 512).unwrap();
        assert_eq!(d.ty.to_string(), "Per(1)/C4");
    }

    #[test]
    fn detection_rejects_non_invariant_curves() {
        let a = action("C5: w[1]+w[2]");
        let k = torus_knot(2, 3).unwrap();
        assert!(matches!(detect_type(&a, &k, 512), Err(Error::Invariance { .. })));
    }

    #[test]
    fn detection_reports_axis_crossing() {
        // Invariant under w[1]+w[2] over C5 and passing through the xy circle at t = 0.
        let a = action("C5: w[1]+w[2]");
        let k = KnotCurve::from_fn(1024, |t| {
            let r = 0.5 * (1.0 - (5.0 * t).cos());
            Point::new(t.cos(), t.sin(), r * (2.0 * t).cos(), r * (2.0 * t).sin())
        })
        .unwrap();
        assert!(matches!(detect_type(&a, &k, 512), Err(Error::Transversality { .. })));
    }

    #[test]
    fn congruence_probe_examples() {
        let a = action("C3: w[1]+w[1]");
        let xy = RoundCircle::xy().curve();
        let zw = RoundCircle::zw().curve();
        let s = 0.5f64.sqrt();
        let fiber = RoundCircle::new(Point::new(s, 0.0, s, 0.0), Point::new(0.0, s, 0.0, s)).unwrap();
        let r = linking_congruence_probe(&a, &zw, &xy, &fiber.curve(), 512);
        // The fiber meets neither core circle but lies close to zw's complement.
        let r = r.unwrap();
        assert!(r.congruent);
        let r = linking_congruence_probe(&a, &xy, &zw, &zw, 512).unwrap();
        assert_eq!(r.first, r.second);

        let b = action("C5: w[1]+w[2]");
        let moved = zw.transformed(&seeded_rotation(7)).unwrap();
        assert!(matches!(
            linking_congruence_probe(&b, &xy, &zw, &moved, 512),
            Err(Error::Precondition(_))
        ));
    }
}
