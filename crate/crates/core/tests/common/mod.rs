//! Brute-force generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use ksk_core::circlemaps::{CircleMapLift, DEFAULT_SAMPLES};
use ksk_core::constructions::realize_parameters;
use ksk_core::geometry::{KnotCurve, MatrixAction, Point};
use ksk_core::orthrep::OrthMatrix;
use ksk_core::typing::TypeKind;
use nalgebra::{Matrix2, Matrix4};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ksk_core::geometry::seeded_rotation;
use ksk_core::orthrep::{
    enumerate_cyclic_o4, enumerate_dihedral_o4, evaluate, GroupElement, IrredLabel, RepSum,
};
use ksk_core::typing::{classify, SymmetryType};
use ksk_core::zmod::{GroupSpec, ModClass};

fn labels(group: GroupSpec) -> Vec<IrredLabel> {
    let n = group.n();
    let m = |a: u64| ModClass::new(a as i64, n).unwrap();
    let mut out = Vec::new();
    if group.is_dihedral() {
        out.extend((0..n).map(|a| IrredLabel::DihRot(m(a))));
        out.extend([IrredLabel::DihOne, IrredLabel::DihSigma]);
        if n.is_multiple_of(2) {
            out.extend([IrredLabel::DihSign, IrredLabel::DihInv]);
        }
    } else {
        out.extend((0..n).map(|a| IrredLabel::CycRot(m(a))));
        out.push(IrredLabel::CycOne);
        if n.is_multiple_of(2) {
            out.push(IrredLabel::CycSign);
        }
    }
    out
}

/// Every block sum of total dimension 4 (as non-decreasing label sequences).
pub fn all_reps(group: GroupSpec) -> Vec<RepSum> {
    let ls = labels(group);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<IrredLabel>, usize)> = vec![(0, Vec::new(), 0)];
    while let Some((start, blocks, dim)) = stack.pop() {
        if dim == 4 {
            out.push(RepSum::new(group, blocks).unwrap());
            continue;
        }
        for (i, &l) in ls.iter().enumerate().skip(start) {
            if dim + l.dim() <= 4 {
                let mut b = blocks.clone();
                b.push(l);
                stack.push((i, b, dim + l.dim()));
            }
        }
    }
    out
}

/// Faithfulness decided from the matrices alone.
pub fn numerically_faithful(rep: &RepSum) -> bool {
    let g = rep.group();
    GroupElement::all(g)
        .into_iter()
        .filter(|e| !e.is_identity(g.n()))
        .all(|e| {
            let m = evaluate(rep, e).unwrap();
            m.max_abs_diff(&ksk_core::orthrep::OrthMatrix::identity(4)) > 1e-9
        })
}

pub fn faithful_reps(group: GroupSpec) -> Vec<RepSum> {
    all_reps(group).into_iter().filter(numerically_faithful).collect()
}

/// A representation realizing each admissible type of the group.
pub fn type_witnesses(group: GroupSpec) -> BTreeMap<String, (SymmetryType, RepSum)> {
    let reps: Vec<RepSum> = if group.is_order_two() {
        faithful_reps(group)
    } else if group.is_dihedral() {
        enumerate_dihedral_o4(group.n()).unwrap().into_iter().map(|x| x.0).collect()
    } else {
        enumerate_cyclic_o4(group.n()).unwrap().into_iter().map(|x| x.0).collect()
    };
    let mut out = BTreeMap::new();
    for r in reps {
        if let Ok(t) = classify(&r) {
            out.entry(t.to_string()).or_insert((t, r));
        }
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The representation restricted to `<rho^d>`, written over `C_{n/d}`.
pub fn restrict_cyclic_rep(rep: &RepSum, d: u64) -> RepSum {
    let n = rep.group().n();
    let m = n / d;
    let blocks = rep
        .blocks()
        .iter()
        .map(|&l| match l {
            IrredLabel::CycRot(a) => IrredLabel::CycRot(a.reduce(m).unwrap()),
            IrredLabel::CycSign if d % 2 == 1 => IrredLabel::CycSign,
            _ => IrredLabel::CycOne,
        })
        .collect();
    RepSum::new(GroupSpec::cyclic(m).unwrap(), blocks).unwrap()
}

fn one_dim(rho_neg: bool, sigma_neg: bool) -> IrredLabel {
    match (rho_neg, sigma_neg) {
        (false, false) => IrredLabel::DihOne,
        (false, true) => IrredLabel::DihSigma,
        (true, false) => IrredLabel::DihSign,
        (true, true) => IrredLabel::DihInv,
    }
}

/// The representation restricted to `<rho^d, rho^r sigma>`, written over `D_{n/d}`
/// with generators `rho^d` and `rho^r sigma`.
pub fn restrict_dihedral_rep(rep: &RepSum, d: u64, r: u64) -> RepSum {
    let n = rep.group().n();
    let m = n / d;
    let (dodd, rodd) = (d % 2 == 1, r % 2 == 1);
    let mut blocks = Vec::new();
    for &l in rep.blocks() {
        match l {
            IrredLabel::DihRot(_) if m == 1 => blocks.extend([IrredLabel::DihSigma, IrredLabel::DihOne]),
            IrredLabel::DihRot(a) => blocks.push(IrredLabel::DihRot(a.reduce(m).unwrap())),
            IrredLabel::DihSign => blocks.push(one_dim(dodd, rodd)),
            IrredLabel::DihInv => blocks.push(one_dim(dodd, !rodd)),
            IrredLabel::DihSigma => blocks.push(IrredLabel::DihSigma),
            _ => blocks.push(IrredLabel::DihOne),
        }
    }
    RepSum::new(GroupSpec::dihedral(m).unwrap(), blocks).unwrap()
}

/// Generator matrices (rho, then sigma for dihedral groups).
pub fn generators(rep: &RepSum) -> Vec<Matrix4<f64>> {
    let mut gens = vec![GroupElement::rho(1)];
    if rep.group().is_dihedral() {
        gens.push(GroupElement::sigma());
    }
    gens.iter().map(|&g| evaluate(rep, g).unwrap().to_matrix4().unwrap()).collect()
}

/// A reproducible sample of rotations.
pub fn rotation_pool(size: usize, seed: u64) -> Vec<Matrix4<f64>> {
    (0..size as u64).map(|i| seeded_rotation(seed.wrapping_mul(1_000_003).wrapping_add(i))).collect()
}

fn residual(q: &Matrix4<f64>, a: &[Matrix4<f64>], b: &[Matrix4<f64>]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (q * x * q.transpose() - y).norm()).sum()
}

fn plane_rotation(i: usize, j: usize, t: f64) -> Matrix4<f64> {
    let mut g = Matrix4::identity();
    let (s, c) = t.sin_cos();
    g[(i, i)] = c;
    g[(j, j)] = c;
    g[(i, j)] = -s;
    g[(j, i)] = s;
    g
}

fn refine(mut q: Matrix4<f64>, a: &[Matrix4<f64>], b: &[Matrix4<f64>]) -> f64 {
    let mut best = residual(&q, a, b);
    let mut h = 0.2;
    let mut rounds = 0;
    while h > 1e-13 && best > 1e-12 && rounds < 20_000 {
        rounds += 1;
        let mut improved = false;
        for i in 0..4 {
            for j in i + 1..4 {
                for t in [h, -h] {
                    let cand = plane_rotation(i, j, t) * q;
                    let r = residual(&cand, a, b);
                    if r < best {
                        best = r;
                        q = cand;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    best
}

/// Smallest conjugation residual `|Q A Q^T - B|` found by scanning the pool and
/// polishing the best few candidates. With `reversing`, each `Q` is composed
/// with a reflection first.
pub fn conjugation_search(pool: &[Matrix4<f64>], a: &[Matrix4<f64>], b: &[Matrix4<f64>], reversing: bool) -> f64 {
    let flip = Matrix4::from_diagonal(&nalgebra::Vector4::new(-1.0, 1.0, 1.0, 1.0));
    let mut scored: Vec<(f64, Matrix4<f64>)> = pool
        .iter()
        .map(|q| if reversing { q * flip } else { *q })
        .map(|q| (residual(&q, a, b), q))
        .collect();
    scored.sort_by(|x, y| x.0.total_cmp(&y.0));
    scored.iter().take(4).map(|(_, q)| refine(*q, a, b)).fold(f64::INFINITY, f64::min)
}

/// Residual below which a search counts as having found a conjugator.
pub const FOUND: f64 = 1e-6;

fn rot(t: f64) -> Matrix2<f64> {
    Matrix2::new(t.cos(), -t.sin(), t.sin(), t.cos())
}

fn blocks(a: Matrix2<f64>, b: Matrix2<f64>) -> OrthMatrix {
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(&a);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(&b);
    OrthMatrix::from_matrix4(m).unwrap()
}

fn diag(d: [f64; 4]) -> OrthMatrix {
    OrthMatrix::from_matrix4(Matrix4::from_diagonal(&d.into())).unwrap()
}

/// An action and an invariant curve realizing `t`.
pub fn witness(t: SymmetryType) -> (MatrixAction, KnotCurve) {
    let g = t.group();
    let n = g.n();
    let step = TAU / n as f64;
    let (rho, curve) = match t.kind() {
        TypeKind::Per(a) => {
            let a = a.value() as i64;
            (blocks(rot(a as f64 * step), Matrix2::identity()), KnotCurve::torus_like(a, n as i64, 0.5).unwrap())
        }
        TypeKind::FPer(ab) => {
            let (p, q) = realize_parameters(n, ab.a(), ab.b()).unwrap();
            let rho = blocks(rot(p as f64 * step), rot(q as f64 * step));
            (rho, KnotCurve::torus_like(p as i64, q as i64, 0.7).unwrap())
        }
        TypeKind::RRef(a) => {
            let a = a.value() as f64;
            let h = n as f64;
            let curve = KnotCurve::from_fn(2048, |s| {
                Point::new((a * s).cos(), (a * s).sin(), 0.5 * (h * s / 2.0).cos(), 0.3 * (h * s).sin())
            })
            .unwrap();
            (blocks(rot(a * step), Matrix2::new(-1.0, 0.0, 0.0, 1.0)), curve)
        }
        kind => order_two(kind),
    };
    (MatrixAction::new(g, &rho, None).unwrap(), curve)
}

fn order_two(kind: TypeKind) -> (OrthMatrix, KnotCurve) {
    let curve = |f: fn(f64) -> Point| KnotCurve::from_fn(1024, f).unwrap();
    match kind {
        TypeKind::F2P => (diag([-1.0; 4]), KnotCurve::torus_like(1, 3, 0.8).unwrap()),
        TypeKind::TwoP => (diag([1.0, 1.0, -1.0, -1.0]), KnotCurve::torus_like(2, 1, 0.8).unwrap()),
        TypeKind::SPAc => (
            diag([1.0, -1.0, -1.0, -1.0]),
            curve(|t| Point::new(0.4 * (2.0 * t).cos(), t.cos(), t.sin(), 0.3 * (3.0 * t).sin())),
        ),
        TypeKind::SNAc => (
            diag([1.0, -1.0, -1.0, -1.0]),
            curve(|t| Point::new(t.cos(), t.sin(), 0.4 * (2.0 * t).sin(), 0.3 * (3.0 * t).sin())),
        ),
        TypeKind::SI => (
            diag([1.0, 1.0, -1.0, -1.0]),
            curve(|t| Point::new(t.cos(), 0.4 * (2.0 * t).cos(), t.sin(), 0.3 * (2.0 * t).sin())),
        ),
        TypeKind::TwoR => (
            diag([1.0, 1.0, 1.0, -1.0]),
            curve(|t| Point::new(t.cos(), 0.4 * (2.0 * t).cos(), 0.3 * (3.0 * t).cos(), t.sin())),
        ),
        other => panic!("no witness for {other:?}"),
    }
}

pub fn hidden(action: &MatrixAction, curve: &KnotCurve, seed: u64, power: i64) -> (MatrixAction, KnotCurve) {
    let q = seeded_rotation(seed);
    let a = action.conjugated(&q).unwrap().with_generator_power(power).unwrap();
    (a, curve.transformed(&q).unwrap())
}

/// A random smooth degree-one diffeomorphism: the identity plus a few small,
/// low-frequency Fourier modes with total derivative budget below one half.
pub fn random_diffeo(rng: &mut ChaCha8Rng) -> CircleMapLift {
    let modes: Vec<(f64, f64, f64)> = (1..=3)
        .map(|k| (k as f64, rng.random_range(-0.16..0.16), rng.random_range(0.0..TAU)))
        .collect();
    CircleMapLift::sample(1, DEFAULT_SAMPLES, move |x| {
        x + modes.iter().map(|(k, c, ph)| c * (TAU * k * x + ph).sin() / (TAU * k)).sum::<f64>()
    })
    .unwrap()
}

pub fn conjugate(phi: &CircleMapLift, inner: &CircleMapLift) -> CircleMapLift {
    phi.compose(&inner.compose(&phi.inverse().unwrap()).unwrap()).unwrap()
}
