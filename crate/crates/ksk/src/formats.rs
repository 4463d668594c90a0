//! Plain-text file formats for curves, circle maps and matrix actions.
//!
//! Floats are written with Rust's shortest round-trip formatting, so reading a
//! written file gives back bit-identical samples.

use std::fmt::Write as _;

use ksk_core::circlemaps::CircleMapLift;
use ksk_core::geometry::{KnotCurve, MatrixAction, Point};
use ksk_core::orthrep::OrthMatrix;
use ksk_core::zmod::GroupSpec;
use ksk_core::{Error, Result};
use nalgebra::Matrix4;

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

/// Non-empty lines with surrounding whitespace removed.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

fn floats(line: &str, lineno: usize, want: usize) -> Result<Vec<f64>> {
    let v: Vec<f64> = line
        .split_whitespace()
        .map(|s| s.parse::<f64>().map_err(|_| Error::Parse(format!("line {lineno}: bad number {s:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != want || v.iter().any(|x| !x.is_finite()) {
        return parse_err(format!("line {lineno}: expected {want} finite numbers"));
    }
    Ok(v)
}

fn header<'a>(it: &mut impl Iterator<Item = (usize, &'a str)>, magic: &str) -> Result<Vec<&'a str>> {
    let Some((_, h)) = it.next() else {
        return parse_err("empty file");
    };
    let mut words = h.split_whitespace();
    if words.next() != Some(magic) || words.next() != Some("v1") {
        return parse_err(format!("expected header \"{magic} v1 ...\", got {h:?}"));
    }
    Ok(words.collect())
}

fn count(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad sample count {s:?}")))
}

/// `knotcurve v1 <N>` then `N` rows of four coordinates.
pub fn read_curve(text: &str) -> Result<KnotCurve> {
    let mut it = lines(text);
    let h = header(&mut it, "knotcurve")?;
    let [n] = h[..] else {
        return parse_err("curve header needs exactly one count");
    };
    let n = count(n)?;
    let mut pts = Vec::with_capacity(n);
    for (lineno, line) in it {
        let v = floats(line, lineno, 4)?;
        pts.push(Point::new(v[0], v[1], v[2], v[3]));
    }
    if pts.len() != n {
        return parse_err(format!("header promises {n} points, found {}", pts.len()));
    }
    KnotCurve::from_samples(pts)
}

pub fn write_curve(points: &[Point]) -> String {
    let mut s = format!("knotcurve v1 {}\n", points.len());
    for p in points {
        let _ = writeln!(s, "{} {} {} {}", p[0], p[1], p[2], p[3]);
    }
    s
}

/// `circlemap v1 <degree> <N>` then `N` lift values on `[0, 1)`.
pub fn read_circle_map(text: &str) -> Result<CircleMapLift> {
    let mut it = lines(text);
    let h = header(&mut it, "circlemap")?;
    let [deg, n] = h[..] else {
        return parse_err("circle-map header needs a degree and a count");
    };
    let degree: i8 = deg.parse().map_err(|_| Error::Parse(format!("bad degree {deg:?}")))?;
    let n = count(n)?;
    let mut values = Vec::with_capacity(n);
    for (lineno, line) in it {
        for tok in line.split_whitespace() {
            let x: f64 = tok.parse().map_err(|_| Error::Parse(format!("line {lineno}: bad number {tok:?}")))?;
            values.push(x);
        }
    }
    if values.len() != n {
        return parse_err(format!("header promises {n} values, found {}", values.len()));
    }
    CircleMapLift::from_samples(degree, values)
}

pub fn write_circle_map(f: &CircleMapLift) -> String {
    let n = f.native_samples();
    let mut s = format!("circlemap v1 {} {n}\n", f.degree());
    for x in f.grid_values(n) {
        let _ = writeln!(s, "{x}");
    }
    s
}

/// `matrixaction v1 <group>`, then a `rho` line and four rows, and for
/// dihedral groups a `sigma` line and four rows.
pub fn read_action(text: &str) -> Result<MatrixAction> {
    let mut it = lines(text);
    let h = header(&mut it, "matrixaction")?;
    let [g] = h[..] else {
        return parse_err("action header needs exactly one group");
    };
    let group: GroupSpec = g.parse()?;
    let mut block = |name: &str| -> Result<OrthMatrix> {
        match it.next() {
            Some((_, l)) if l == name => {}
            other => return parse_err(format!("expected {name:?}, got {:?}", other.map(|x| x.1))),
        }
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            let Some((lineno, line)) = it.next() else {
                return parse_err(format!("{name} needs four rows"));
            };
            let row = floats(line, lineno, 4)?;
            for (j, x) in row.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        OrthMatrix::from_matrix4(m)
    };
    let rho = block("rho")?;
    let sigma = if group.is_dihedral() { Some(block("sigma")?) } else { None };
    if let Some((lineno, _)) = it.next() {
        return parse_err(format!("line {lineno}: unexpected trailing content"));
    }
    MatrixAction::new(group, &rho, sigma.as_ref())
}

pub fn write_action(a: &MatrixAction) -> String {
    let mut s = format!("matrixaction v1 {}\n", a.group());
    let mut block = |name: &str, m: Matrix4<f64>| {
        let _ = writeln!(s, "{name}");
        for i in 0..4 {
            let _ = writeln!(s, "{} {} {} {}", m[(i, 0)], m[(i, 1)], m[(i, 2)], m[(i, 3)]);
        }
    };
    block("rho", a.rho());
    if let Some(sg) = a.sigma() {
        block("sigma", sg);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use ksk_core::geometry::RoundCircle;

    #[test]
    fn curve_roundtrip() {
        let pts = KnotCurve::torus_like(2, 3, 0.6).unwrap().sample(600);
        let back = read_curve(&write_curve(&pts)).unwrap();
        for (x, y) in back.sample(600).iter().zip(&pts) {
            assert!((x - y).norm() < 1e-12);
        }
        assert!(read_curve("knotcurve v1 3\n1 0 0 0\n").is_err());
        assert!(read_curve("knotcurve v2 1\n1 0 0 0\n").is_err());
        let circle = RoundCircle::xy().curve().sample(512);
        assert!(read_curve(&write_curve(&circle)).is_ok());
    }

    #[test]
    fn map_roundtrip() {
        let f = CircleMapLift::sample(1, 64, |x| x + 0.25 + 0.02 * (6.0 * x).sin()).unwrap();
        let text = write_circle_map(&f);
        assert!(text.starts_with("circlemap v1 1 64\n"));
        let g = read_circle_map(&text).unwrap();
        assert_eq!(g.grid_values(64), f.grid_values(64));
        assert!(read_circle_map("circlemap v1 1 3\n0.1\n0.2\n").is_err());
    }

    #[test]
    fn action_roundtrip() {
        let a = MatrixAction::from_rep(&"D4: v[1]+v[sign]+v[sigma]".parse().unwrap()).unwrap();
        let b = read_action(&write_action(&a)).unwrap();
        assert_eq!(b.rho(), a.rho());
        assert_eq!(b.sigma(), a.sigma());
        assert!(read_action("matrixaction v1 C3\nrho\n1 0 0 0\n").is_err());
    }
}
