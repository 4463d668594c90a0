//! Existence constructions: symmetric torus knots, the interlaced-tangle family
//! realizing the rotoreflection/strong-inversion dihedral type, and connected
//! sums arranged around a bracelet.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{arg, Error, Result};
use crate::typing::{SymmetryType, TypeKind};
use crate::zmod::{gcd, generates_unit_ideal, FClass, GroupSpec, ModClass, TClass};

/// A bijection of `{1, .., a}`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(a: usize) -> Self {
        Permutation { images: (1..=a).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let a = images.len();
        let mut seen = alloc::vec![false; a + 1];
        for &x in &images {
            if x == 0 || x > a || seen[x] {
                return arg("not a bijection of {1..a}");
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of the given cycles on `{1..a}`; cycles are applied right to left,
    /// which is irrelevant for disjoint ones.
    pub fn from_cycles(a: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(a);
        for c in cycles.iter().rev() {
            let mut images: Vec<usize> = (1..=a).collect();
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > a {
                    return arg("cycle entry out of range");
                }
                images[x - 1] = c[(i + 1) % c.len()];
            }
            p = Permutation::from_images(images)?.then(&p);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.len());
        for _ in 0..k {
            out = out.then(self);
        }
        out
    }

    /// Disjoint cycles of length at least two, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let a = self.len();
        let mut seen = alloc::vec![false; a + 1];
        let mut out = Vec::new();
        for start in 1..=a {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Whether the permutation has a single orbit on `{1..a}`.
    pub fn is_full_cycle(&self) -> bool {
        let a = self.len();
        if a <= 1 {
            return true;
        }
        let c = self.cycles();
        c.len() == 1 && c[0].len() == a
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Type of `T_{p,q}` under the `D_n` generated by the rotation of order `n` and the
/// reflection of the circle parametrizing it.
pub fn torus_symmetry_structure(p: u64, q: u64, n: u64) -> Result<SymmetryType> {
    if p < 2 || q < 2 || gcd(p, q) != 1 {
        return arg(format!("T({p},{q}) needs coprime p, q >= 2"));
    }
    if n < 2 {
        return arg("n must be at least 2");
    }
    let (pb, qb) = (ModClass::new(p as i64, n)?, ModClass::new(q as i64, n)?);
    assert!(!(pb.is_zero() && qb.is_zero()), "coprime exponents cannot both vanish mod n");
    let kind = if pb.is_zero() {
        TypeKind::SIP(FClass::new(qb))
    } else if qb.is_zero() {
        TypeKind::SIP(FClass::new(pb))
    } else {
        TypeKind::SIFP(TClass::new(pb, qb)?)
    };
    SymmetryType::new(kind, GroupSpec::dihedral(n)?)
}

/// Torus-knot exponents `(p, q)`, coprime and at least 2, with `p = a`, `q = b` mod `n`.
pub fn realize_parameters(n: u64, a: ModClass, b: ModClass) -> Result<(u64, u64)> {
    if a.modulus() != n || b.modulus() != n {
        return arg("parameters must be residues mod n");
    }
    if !generates_unit_ideal(a, b)? {
        return arg("(a, b) must generate the unit ideal");
    }
    if a.is_zero() {
        return arg("a must be nonzero");
    }
    let p = if a.value() >= 2 { a.value() } else { a.value() + n };
    let bound = 64 * n;
    let mut q = b.value();
    while q <= bound {
        if q >= 2 && gcd(p, q) == 1 {
            return Ok((p, q));
        }
        q += n;
    }
    Err(Error::SearchExhausted { bound })
}

/// The strand permutations of the tangle and of its mirror:
/// `(1, a-1)(2, a-2)...` and `(2, a)(3, a-1)...`.
pub fn snasi_tangle_permutations(a: u64) -> Result<(Permutation, Permutation)> {
    if a == 0 || a.is_multiple_of(2) {
        return arg("a must be a positive odd integer");
    }
    let a = a as usize;
    // i <-> a - i for 1 <= i < a, fixing a.
    let t = Permutation { images: (1..=a).map(|i| if i < a { a - i } else { a }).collect() };
    // i <-> a + 2 - i for 2 <= i <= a, fixing 1.
    let m = Permutation { images: (1..=a).map(|i| if i >= 2 { a + 2 - i } else { 1 }).collect() };
    Ok((t, m))
}

/// Composite of one tangle followed by its mirror.
pub fn snasi_composite(a: u64) -> Result<Permutation> {
    let (t, m) = snasi_tangle_permutations(a)?;
    Ok(t.then(&m))
}

/// Whether the `2n` alternating tangles around the bracelet close up into one component.
pub fn snasi_single_component(n: u64, a: u64) -> Result<bool> {
    if n == 0 || n % 2 == 1 {
        return arg("n must be even");
    }
    if a.is_multiple_of(2) {
        return arg("a must be odd");
    }
    if gcd(a, n) != 1 {
        return arg("gcd(a, n) must be 1");
    }
    let (t, m) = snasi_tangle_permutations(a)?;
    let mut total = Permutation::identity(a as usize);
    for i in 0..2 * n {
        total = total.then(if i % 2 == 0 { &t } else { &m });
    }
    Ok(total.is_full_cycle())
}

/// Declared type of the interlaced-tangle knot with its linking number against
/// the rotoreflection axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnasiConstruction {
    pub ty: SymmetryType,
    pub axis_linking: u64,
}

pub fn snasi_declared_type(n: u64, a: u64) -> Result<SnasiConstruction> {
    if !snasi_single_component(n, a).map_err(|e| Error::Construction(format!("{e}")))? {
        return Err(Error::Construction(format!("strands do not close into one component for n={n}, a={a}")));
    }
    let ty = SymmetryType::new(TypeKind::SNASI(FClass::from_int(a as i64, n)?), GroupSpec::dihedral(n)?)?;
    Ok(SnasiConstruction { ty, axis_linking: a })
}

/// Base summand of a bracelet: its order-two type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceletBase {
    SNAc,
    SI,
    TwoR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraceletSpec {
    pub n: u64,
    pub base: BraceletBase,
    /// Mirror every other summand.
    pub alternation: bool,
}

pub fn bracelet_type(spec: BraceletSpec) -> Result<SymmetryType> {
    let n = spec.n;
    if n < 2 {
        return arg("a bracelet needs n >= 2");
    }
    let kind = match spec.base {
        BraceletBase::TwoR => TypeKind::DihB,
        BraceletBase::SI | BraceletBase::SNAc if n % 2 == 1 => {
            return arg("strongly invertible and negative amphichiral bases need even n")
        }
        BraceletBase::SI | BraceletBase::SNAc if !spec.alternation => {
            return arg("strongly invertible and negative amphichiral bases need alternating mirrors")
        }
        BraceletBase::SI => TypeKind::DihD,
        BraceletBase::SNAc => TypeKind::DihF,
    };
    SymmetryType::new(kind, GroupSpec::dihedral(n)?)
}
