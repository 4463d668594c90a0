//! Irreducible orthogonal representations of `C_n` and `D_n`, their block sums,
//! matrix evaluation, fixed subspaces, chirality and `SO(4)`-conjugacy, and the
//! enumeration of faithful four-dimensional classes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use nalgebra::{DMatrix, Matrix4};

use crate::error::{arg, Error, Result};
use crate::zmod::{enumerate_t_classes, f_units, gcd, jn_index_action, GroupKind, GroupSpec, ModClass};

/// Irreducible real orthogonal representations.
///
/// Cyclic: `1`, `w_sign` (`rho -> -1`, even `n`), `w_a` (`rho -> R^a`).
/// Dihedral: `1`, `v_sign` (`rho -> -1, sigma -> 1`), `v_sigma` (`rho -> 1, sigma -> -1`),
/// `v_inv` (`rho -> -1, sigma -> -1`), `v_a` (`rho -> R^a, sigma -> diag(-1, 1)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrredLabel {
    CycOne,
    CycSign,
    CycRot(ModClass),
    DihOne,
    DihSign,
    DihSigma,
    DihInv,
    DihRot(ModClass),
}

impl IrredLabel {
    pub fn dim(self) -> usize {
        match self {
            IrredLabel::CycRot(_) | IrredLabel::DihRot(_) => 2,
            _ => 1,
        }
    }

    pub fn is_dihedral(self) -> bool {
        matches!(
            self,
            IrredLabel::DihOne
                | IrredLabel::DihSign
                | IrredLabel::DihSigma
                | IrredLabel::DihInv
                | IrredLabel::DihRot(_)
        )
    }

    fn rot_param(self) -> Option<ModClass> {
        match self {
            IrredLabel::CycRot(a) | IrredLabel::DihRot(a) => Some(a),
            _ => None,
        }
    }

    fn with_rot(self, a: ModClass) -> Self {
        match self {
            IrredLabel::CycRot(_) => IrredLabel::CycRot(a),
            IrredLabel::DihRot(_) => IrredLabel::DihRot(a),
            other => other,
        }
    }
}

impl fmt::Display for IrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrredLabel::CycOne | IrredLabel::DihOne => write!(f, "1"),
            IrredLabel::CycSign => write!(f, "w[sign]"),
            IrredLabel::CycRot(a) => write!(f, "w[{}]", a.value()),
            IrredLabel::DihSign => write!(f, "v[sign]"),
            IrredLabel::DihSigma => write!(f, "v[sigma]"),
            IrredLabel::DihInv => write!(f, "v[inv]"),
            IrredLabel::DihRot(a) => write!(f, "v[{}]", a.value()),
        }
    }
}

/// `rho^k sigma^e` in `C_n` (`e = 0` always) or `D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub rho_power: i64,
    pub reflect: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { rho_power: 0, reflect: false };

    pub fn rho(k: i64) -> Self {
        GroupElement { rho_power: k, reflect: false }
    }

    pub fn sigma() -> Self {
        GroupElement { rho_power: 0, reflect: true }
    }

    /// `rho^k sigma`.
    pub fn rho_sigma(k: i64) -> Self {
        GroupElement { rho_power: k, reflect: true }
    }

    /// Product `self * other` in a group with rotation order `n`, using
    /// `sigma rho = rho^{-1} sigma`.
    pub fn mul(self, other: Self, n: u64) -> Self {
        let n = n as i64;
        let k = if self.reflect {
            self.rho_power - other.rho_power
        } else {
            self.rho_power + other.rho_power
        };
        GroupElement {
            rho_power: k.rem_euclid(n),
            reflect: self.reflect ^ other.reflect,
        }
    }

    pub fn reduced(self, n: u64) -> Self {
        GroupElement {
            rho_power: self.rho_power.rem_euclid(n as i64),
            reflect: self.reflect,
        }
    }

    pub fn is_identity(self, n: u64) -> bool {
        !self.reflect && self.rho_power.rem_euclid(n as i64) == 0
    }

    /// Every element of the group, rotations first.
    pub fn all(group: GroupSpec) -> Vec<GroupElement> {
        let n = group.n() as i64;
        let mut out: Vec<_> = (0..n).map(GroupElement::rho).collect();
        if group.is_dihedral() {
            out.extend((0..n).map(GroupElement::rho_sigma));
        }
        out
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rho_power, self.reflect) {
            (0, false) => write!(f, "e"),
            (0, true) => write!(f, "sigma"),
            (1, false) => write!(f, "rho"),
            (1, true) => write!(f, "rho sigma"),
            (k, false) => write!(f, "rho^{k}"),
            (k, true) => write!(f, "rho^{k} sigma"),
        }
    }
}

/// A real orthogonal matrix of size 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthMatrix(DMatrix<f64>);

impl OrthMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() || !(m.nrows() == 2 || m.nrows() == 4) {
            return arg("orthogonal matrices must be 2x2 or 4x4");
        }
        let dev = (m.transpose() * &m - DMatrix::identity(m.nrows(), m.nrows())).amax();
        if dev > 1e-9 {
            return arg(format!("matrix is not orthogonal (deviation {dev:e})"));
        }
        Ok(OrthMatrix(m))
    }

    pub fn from_matrix4(m: Matrix4<f64>) -> Result<Self> {
        OrthMatrix::new(DMatrix::from_column_slice(4, 4, m.as_slice()))
    }

    pub fn identity(dim: usize) -> Self {
        OrthMatrix(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn to_matrix4(&self) -> Result<Matrix4<f64>> {
        if self.dim() != 4 {
            return arg("expected a 4x4 matrix");
        }
        Ok(Matrix4::from_iterator(self.0.iter().copied()))
    }

    pub fn det(&self) -> f64 {
        self.0.determinant()
    }

    pub fn mul(&self, other: &OrthMatrix) -> OrthMatrix {
        OrthMatrix(&self.0 * &other.0)
    }

    pub fn max_abs_diff(&self, other: &OrthMatrix) -> f64 {
        (&self.0 - &other.0).amax()
    }

    /// Deviation of `M^T M` from the identity.
    pub fn orthogonality_defect(&self) -> f64 {
        (self.0.transpose() * &self.0 - DMatrix::identity(self.dim(), self.dim())).amax()
    }
}

pub(crate) fn rot2(num: i64, den: u64) -> [[f64; 2]; 2] {
    let t = 2.0 * core::f64::consts::PI * (num.rem_euclid(den as i64) as f64) / den as f64;
    let (s, c) = (libm::sin(t), libm::cos(t));
    [[c, -s], [s, c]]
}

/// A formal block sum of irreducibles over a fixed group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepSum {
    group: GroupSpec,
    blocks: Vec<IrredLabel>,
}

impl RepSum {
    pub fn new(group: GroupSpec, blocks: Vec<IrredLabel>) -> Result<Self> {
        let n = group.n();
        for b in &blocks {
            if b.is_dihedral() != group.is_dihedral() {
                return arg(format!("label {b} does not belong to {group}"));
            }
            if let Some(a) = b.rot_param() {
                if a.modulus() != n {
                    return arg(format!("label {b} has modulus {} but group is {group}", a.modulus()));
                }
            }
            if matches!(b, IrredLabel::CycSign | IrredLabel::DihSign | IrredLabel::DihInv) && n % 2 == 1 {
                return arg(format!("label {b} needs even n, group is {group}"));
            }
        }
        let rep = RepSum { group, blocks };
        let d = rep.dim();
        if d != 2 && d != 4 {
            return arg(format!("ambient dimension must be 2 or 4, got {d}"));
        }
        Ok(rep)
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn blocks(&self) -> &[IrredLabel] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim()).sum()
    }

    fn check_element(&self, g: GroupElement) -> Result<GroupElement> {
        if g.reflect && !self.group.is_dihedral() {
            return arg(format!("{g} is not an element of {}", self.group));
        }
        Ok(g.reduced(self.group.n()))
    }

    /// Image of the first block under conjugation by `diag(-1, 1, 1, 1)`.
    pub fn mirror(&self) -> RepSum {
        let mut blocks = self.blocks.clone();
        if let Some(first) = blocks.first_mut() {
            if let Some(a) = first.rot_param() {
                *first = first.with_rot(a.neg());
            }
        }
        RepSum { group: self.group, blocks }
    }

    /// Blocks with `w_0`, `w_{n/2}`, `v_0`, `v_{n/2}` split into one-dimensional
    /// summands; rotation parameters keep their sign.
    pub fn split_degenerate(&self) -> Vec<IrredLabel> {
        let n = self.group.n();
        let mut out = Vec::new();
        for &b in &self.blocks {
            match b {
                IrredLabel::CycRot(a) if a.is_zero() => out.extend([IrredLabel::CycOne, IrredLabel::CycOne]),
                IrredLabel::CycRot(a) if 2 * a.value() == n => {
                    out.extend([IrredLabel::CycSign, IrredLabel::CycSign])
                }
                IrredLabel::DihRot(a) if a.is_zero() => out.extend([IrredLabel::DihSigma, IrredLabel::DihOne]),
                IrredLabel::DihRot(a) if 2 * a.value() == n => {
                    out.extend([IrredLabel::DihInv, IrredLabel::DihSign])
                }
                other => out.push(other),
            }
        }
        out
    }

    /// Sorted multiset of irreducibles with rotation parameters identified up to sign:
    /// a complete `O(n)`-isomorphism invariant.
    pub fn o4_key(&self) -> Vec<IrredLabel> {
        let mut v: Vec<_> = self
            .split_degenerate()
            .into_iter()
            .map(|l| match l.rot_param() {
                Some(a) => l.with_rot(if a.neg().value() < a.value() { a.neg() } else { a }),
                None => l,
            })
            .collect();
        v.sort();
        v
    }

    /// Image under the automorphism `sigma -> rho^shift sigma`.
    pub fn jn_image(&self, shift: i64) -> Result<RepSum> {
        if !self.group.is_dihedral() {
            return arg("J_n acts on dihedral representations only");
        }
        let blocks = self
            .blocks
            .iter()
            .map(|&l| jn_index_action(self.group.n(), shift, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepSum { group: self.group, blocks })
    }
}

impl fmt::Display for RepSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.group)?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for RepSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (g, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in representation '{s}'")))?;
        let group: GroupSpec = g.trim().parse()?;
        let n = group.n();
        let mut blocks = Vec::new();
        for tok in rest.split('+') {
            let tok = tok.trim();
            let label = match (group.kind(), tok) {
                (GroupKind::Cyclic, "1") => IrredLabel::CycOne,
                (GroupKind::Dihedral, "1") => IrredLabel::DihOne,
                (GroupKind::Cyclic, "w[sign]") => IrredLabel::CycSign,
                (GroupKind::Dihedral, "v[sign]") => IrredLabel::DihSign,
                (GroupKind::Dihedral, "v[sigma]") => IrredLabel::DihSigma,
                (GroupKind::Dihedral, "v[inv]") => IrredLabel::DihInv,
                (kind, t) => {
                    let prefix = if kind == GroupKind::Cyclic { "w[" } else { "v[" };
                    let inner = t
                        .strip_prefix(prefix)
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(|| Error::Parse(format!("bad label '{t}' for {group}")))?;
                    let k: i64 = inner
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad parameter in label '{t}'")))?;
                    let a = ModClass::new(k, n)?;
                    if kind == GroupKind::Cyclic {
                        IrredLabel::CycRot(a)
                    } else {
                        IrredLabel::DihRot(a)
                    }
                }
            };
            blocks.push(label);
        }
        RepSum::new(group, blocks).map_err(|e| match e {
            Error::Argument(m) => Error::Parse(m),
            other => other,
        })
    }
}

/// Whether the block acts trivially at `g` (exact).
fn label_trivial_at(l: IrredLabel, g: GroupElement, n: u64) -> bool {
    let k = g.rho_power.rem_euclid(n as i64) as u64;
    let e = g.reflect;
    match l {
        IrredLabel::CycOne | IrredLabel::DihOne => true,
        IrredLabel::CycSign | IrredLabel::DihSign => k.is_multiple_of(2),
        IrredLabel::DihSigma => !e,
        IrredLabel::DihInv => (k + e as u64).is_multiple_of(2),
        IrredLabel::CycRot(a) | IrredLabel::DihRot(a) => !e && a.mul(k).is_zero(),
    }
}

/// Multiplicity of the eigenvalue `+1` of a block at `g` (exact).
fn label_fixed_dim(l: IrredLabel, g: GroupElement, n: u64) -> usize {
    match l {
        IrredLabel::DihRot(_) if g.reflect => 1,
        IrredLabel::CycRot(_) | IrredLabel::DihRot(_) => {
            if label_trivial_at(l, g, n) {
                2
            } else {
                0
            }
        }
        _ => label_trivial_at(l, g, n) as usize,
    }
}

pub fn evaluate(rep: &RepSum, element: GroupElement) -> Result<OrthMatrix> {
    let g = rep.check_element(element)?;
    let n = rep.group.n();
    let d = rep.dim();
    let k = g.rho_power;
    let sgn = |odd: bool| if odd { -1.0 } else { 1.0 };
    let mut m = DMatrix::zeros(d, d);
    let mut i = 0;
    for &l in &rep.blocks {
        match l {
            IrredLabel::CycOne | IrredLabel::DihOne => m[(i, i)] = 1.0,
            IrredLabel::CycSign | IrredLabel::DihSign => m[(i, i)] = sgn(k % 2 == 1),
            IrredLabel::DihSigma => m[(i, i)] = sgn(g.reflect),
            IrredLabel::DihInv => m[(i, i)] = sgn((k + g.reflect as i64) % 2 == 1),
            IrredLabel::CycRot(a) | IrredLabel::DihRot(a) => {
                let r = rot2(a.value() as i64 * k, n);
                // R^{ak} S with S = diag(-1, 1) negates the first column.
                let c0 = sgn(g.reflect);
                m[(i, i)] = r[0][0] * c0;
                m[(i, i + 1)] = r[0][1];
                m[(i + 1, i)] = r[1][0] * c0;
                m[(i + 1, i + 1)] = r[1][1];
            }
        }
        i += l.dim();
    }
    Ok(OrthMatrix(m))
}

pub fn fixed_dim(rep: &RepSum, element: GroupElement) -> Result<usize> {
    let g = rep.check_element(element)?;
    let n = rep.group.n();
    Ok(rep.blocks.iter().map(|&l| label_fixed_dim(l, g, n)).sum())
}

/// No non-identity element acts trivially.
pub fn is_faithful(rep: &RepSum) -> bool {
    let n = rep.group.n();
    GroupElement::all(rep.group)
        .into_iter()
        .filter(|g| !g.is_identity(n))
        .all(|g| !rep.blocks.iter().all(|&l| label_trivial_at(l, g, n)))
}

pub fn is_chiral(rep: &RepSum) -> Result<bool> {
    if rep.dim() != 4 {
        return arg("chirality is defined here for 4-dimensional representations");
    }
    Ok(rep.split_degenerate().iter().all(|l| l.dim() == 2))
}

pub fn so4_conjugate(rep1: &RepSum, rep2: &RepSum) -> Result<bool> {
    if rep1.group != rep2.group {
        return arg("representations of different groups");
    }
    if rep1.dim() != 4 || rep2.dim() != 4 {
        return arg("SO(4)-conjugacy needs 4-dimensional representations");
    }
    if rep1.o4_key() != rep2.o4_key() {
        return Ok(false);
    }
    if !is_chiral(rep1)? {
        return Ok(true);
    }
    let params = |r: &RepSum| -> Vec<ModClass> {
        r.split_degenerate().iter().filter_map(|l| l.rot_param()).collect()
    };
    let (p, q) = (params(rep1), params(rep2));
    let same = |x: &[ModClass], y: &[ModClass]| {
        (x[0] == y[0] && x[1] == y[1]) || (x[0] == y[1] && x[1] == y[0])
    };
    let qneg: Vec<_> = q.iter().map(|a| a.neg()).collect();
    Ok(same(&p, &q) || same(&p, &qneg))
}

/// The families of faithful four-dimensional orthogonal representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    CycA,
    CycB,
    CycC,
    DihA,
    DihB,
    DihC,
    DihD,
    DihE,
    DihF,
    DihG,
    DihH,
    DihI,
    DihJ,
    DihK,
    DihL,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A family together with its parameters, as read off a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: Family,
    /// Rotation parameter of the distinguished block (`v_a` / `w_a`); `None` for DihJ-L.
    pub a: Option<ModClass>,
    /// Second rotation parameter for CycA/DihA (zero for the `w_a + 1 + 1` shape).
    pub b: Option<ModClass>,
    /// Canonical representative of the class (after the `J_n` preference for `v_sign`).
    pub canonical: RepSum,
}

fn count(v: &[IrredLabel], l: IrredLabel) -> usize {
    v.iter().filter(|&&x| x == l).count()
}

fn unfaithful(rep: &RepSum) -> Error {
    Error::Argument(format!("{rep} is not faithful"))
}

/// Determine the family of a faithful four-dimensional representation.
pub fn identify_family(rep: &RepSum) -> Result<FamilyMatch> {
    use IrredLabel::*;
    if rep.dim() != 4 {
        return arg("families are defined for 4-dimensional representations");
    }
    if !is_faithful(rep) {
        return Err(unfaithful(rep));
    }
    let group = rep.group;
    let n = group.n();
    let mk = |a: i64| ModClass::new(a, n).expect("n >= 1");
    let half = mk((n / 2) as i64);
    let mut labels = rep.split_degenerate();

    if !group.is_dihedral() {
        if n < 3 {
            return arg("C_2 representations are typed through their fixed-set dimensions");
        }
        let rots: Vec<ModClass> = labels.iter().filter_map(|l| l.rot_param()).collect();
        let ones = count(&labels, CycOne);
        let signs = count(&labels, CycSign);
        let (family, a, b, blocks) = match (rots.len(), ones, signs) {
            (2, _, _) => (Family::CycA, rots[0], rots[1], vec![CycRot(rots[0]), CycRot(rots[1])]),
            (1, 2, 0) => (Family::CycA, rots[0], mk(0), vec![CycRot(rots[0]), CycRot(mk(0))]),
            (1, 0, 2) => (Family::CycA, rots[0], half, vec![CycRot(rots[0]), CycRot(half)]),
            (1, 1, 1) => {
                let a = rots[0];
                let fam = if a.is_unit() {
                    Family::CycB
                } else if n % 4 == 2 && a.ideal_generator() == 2 {
                    Family::CycC
                } else {
                    return Err(unfaithful(rep));
                };
                (fam, a, mk(0), vec![CycRot(a), CycSign, CycOne])
            }
            _ => return Err(unfaithful(rep)),
        };
        let b = if family == Family::CycA { Some(b) } else { None };
        return Ok(FamilyMatch {
            family,
            a: Some(a),
            b,
            canonical: RepSum::new(group, blocks)?,
        });
    }

    // Prefer v_sign over v_inv (the automorphism sigma -> rho sigma exchanges them).
    if count(&labels, DihInv) > count(&labels, DihSign) {
        labels = labels
            .into_iter()
            .map(|l| jn_index_action(n, 1, l))
            .collect::<Result<Vec<_>>>()?;
    }
    let mut rest = labels.clone();
    let take = |rest: &mut Vec<IrredLabel>, l: IrredLabel| -> bool {
        if let Some(i) = rest.iter().position(|&x| x == l) {
            rest.remove(i);
            true
        } else {
            false
        }
    };

    // Distinguished rotation block: a genuine v_a, or at n = 2 the split v_1 / v_0.
    let a: ModClass;
    let mut rots: Vec<ModClass> = rest.iter().filter_map(|l| l.rot_param()).collect();
    if !rots.is_empty() {
        a = rots.remove(0);
        let i = rest.iter().position(|l| l.rot_param() == Some(a)).unwrap();
        rest.remove(i);
    } else if n == 2 && count(&rest, DihInv) >= 1 && count(&rest, DihSign) >= 1 {
        take(&mut rest, DihInv);
        take(&mut rest, DihSign);
        a = mk(1);
    } else if n == 2 && count(&rest, DihSigma) >= 1 && count(&rest, DihOne) >= 1 {
        take(&mut rest, DihSigma);
        take(&mut rest, DihOne);
        a = mk(0);
    } else if n == 2 && count(&rest, DihOne) == 0 && count(&rest, DihInv) == 0 {
        let (s, g) = (count(&rest, DihSign), count(&rest, DihSigma));
        let (family, blocks) = match (s, g) {
            (3, 1) => (Family::DihJ, vec![DihSign, DihSign, DihSign, DihSigma]),
            (2, 2) => (Family::DihK, vec![DihSign, DihSign, DihSigma, DihSigma]),
            (1, 3) => (Family::DihL, vec![DihSign, DihSigma, DihSigma, DihSigma]),
            _ => return Err(unfaithful(rep)),
        };
        return Ok(FamilyMatch {
            family,
            a: None,
            b: None,
            canonical: RepSum::new(group, blocks)?,
        });
    } else {
        return Err(unfaithful(rep));
    }

    let va = DihRot(a);
    let result = |family, b: Option<ModClass>, tail: Vec<IrredLabel>| -> Result<FamilyMatch> {
        let mut blocks = vec![va];
        blocks.extend(tail);
        Ok(FamilyMatch {
            family,
            a: Some(a),
            b,
            canonical: RepSum::new(group, blocks)?,
        })
    };
    if let Some(&b) = rots.first() {
        return result(Family::DihA, Some(b), vec![DihRot(b)]);
    }
    rest.sort();
    let pair = (rest[0], rest[1]);
    let unit = a.is_unit();
    let two = n % 4 == 2 && a.ideal_generator() == 2;
    match pair {
        (DihSigma, DihOne) | (DihOne, DihSigma) => result(Family::DihA, Some(mk(0)), vec![DihRot(mk(0))]),
        (DihSign, DihInv) | (DihInv, DihSign) => result(Family::DihA, Some(half), vec![DihRot(half)]),
        (DihOne, DihOne) if unit => result(Family::DihB, None, vec![DihOne, DihOne]),
        (DihSigma, DihSigma) if unit => result(Family::DihC, None, vec![DihSigma, DihSigma]),
        (DihOne, DihSign) | (DihSign, DihOne) if unit => result(Family::DihD, None, vec![DihSign, DihOne]),
        (DihOne, DihSign) | (DihSign, DihOne) if two => result(Family::DihG, None, vec![DihSign, DihOne]),
        (DihSign, DihSigma) | (DihSigma, DihSign) if unit => {
            result(Family::DihE, None, vec![DihSign, DihSigma])
        }
        (DihSign, DihSigma) | (DihSigma, DihSign) if two => {
            result(Family::DihH, None, vec![DihSign, DihSigma])
        }
        (DihSign, DihSign) if unit => result(Family::DihF, None, vec![DihSign, DihSign]),
        (DihSign, DihSign) if two => result(Family::DihI, None, vec![DihSign, DihSign]),
        _ => Err(unfaithful(rep)),
    }
}

/// One representative per isomorphism class of faithful `C_n` actions on `R^4`.
pub fn enumerate_cyclic_o4(n: u64) -> Result<Vec<(RepSum, Family)>> {
    use IrredLabel::*;
    if n < 3 {
        return arg("n < 3: the group of order two is handled through fixed-set dimensions");
    }
    let g = GroupSpec::cyclic(n)?;
    let mk = |a: u64| ModClass::new(a as i64, n).unwrap();
    let mut out = Vec::new();
    for a in f_units(n) {
        out.push((RepSum::new(g, vec![CycRot(a.canonical()), CycRot(mk(0))])?, Family::CycA));
    }
    for t in enumerate_t_classes(n as i64)? {
        out.push((RepSum::new(g, vec![CycRot(t.a()), CycRot(t.b())])?, Family::CycA));
    }
    if n.is_multiple_of(2) {
        for a in f_units(n) {
            out.push((RepSum::new(g, vec![CycRot(a.canonical()), CycSign, CycOne])?, Family::CycB));
        }
    }
    if n % 4 == 2 {
        for a in (0..=n / 2).filter(|&a| gcd(a, n) == 2) {
            out.push((RepSum::new(g, vec![CycRot(mk(a)), CycSign, CycOne])?, Family::CycC));
        }
    }
    Ok(out)
}

/// One representative per `J_n`-orbit of isomorphism classes of faithful `D_n`
/// actions on `R^4`, always written with `v_sign` rather than `v_inv`.
pub fn enumerate_dihedral_o4(n: u64) -> Result<Vec<(RepSum, Family)>> {
    use IrredLabel::*;
    if n < 2 {
        return arg("dihedral enumeration needs n >= 2");
    }
    let g = GroupSpec::dihedral(n)?;
    let mk = |a: u64| ModClass::new(a as i64, n).unwrap();
    let units: Vec<ModClass> = f_units(n).iter().map(|a| a.canonical()).collect();
    let mut out = Vec::new();
    let mut push = |blocks: Vec<IrredLabel>, f: Family| -> Result<()> {
        out.push((RepSum::new(g, blocks)?, f));
        Ok(())
    };
    for &a in &units {
        push(vec![DihRot(a), DihRot(mk(0))], Family::DihA)?;
    }
    for t in enumerate_t_classes(n as i64)? {
        push(vec![DihRot(t.a()), DihRot(t.b())], Family::DihA)?;
    }
    for &a in &units {
        push(vec![DihRot(a), DihOne, DihOne], Family::DihB)?;
    }
    for &a in &units {
        push(vec![DihRot(a), DihSigma, DihSigma], Family::DihC)?;
    }
    if n.is_multiple_of(2) {
        for &a in &units {
            push(vec![DihRot(a), DihSign, DihOne], Family::DihD)?;
        }
        for &a in &units {
            push(vec![DihRot(a), DihSign, DihSigma], Family::DihE)?;
        }
        for &a in &units {
            push(vec![DihRot(a), DihSign, DihSign], Family::DihF)?;
        }
    }
    if n % 4 == 2 {
        let twos: Vec<ModClass> = (0..=n / 2).filter(|&a| gcd(a, n) == 2).map(mk).collect();
        for &a in &twos {
            push(vec![DihRot(a), DihSign, DihOne], Family::DihG)?;
        }
        for &a in &twos {
            push(vec![DihRot(a), DihSign, DihSigma], Family::DihH)?;
        }
        for &a in &twos {
            push(vec![DihRot(a), DihSign, DihSign], Family::DihI)?;
        }
    }
    if n == 2 {
        push(vec![DihSign, DihSign, DihSign, DihSigma], Family::DihJ)?;
        push(vec![DihSign, DihSign, DihSigma, DihSigma], Family::DihK)?;
        push(vec![DihSign, DihSigma, DihSigma, DihSigma], Family::DihL)?;
    }
    Ok(out)
}

/// How many round circles are invariant under a cyclic action with a genuine
/// rotation block `w_a`, `a` not in `{0, n/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleCensus {
    /// `w_a + w_0`: the fixed axis, plus the family of circles linking it.
    TrivialAxisPlusFamily,
    /// `w_a + w_b` with `b` not in `{a, -a, 0}`: only the two coordinate circles.
    ExactlyTwo,
    /// `w_a + w_{±a}`: an isoclinic family, all isotopic through invariant circles.
    InfinitelyManyIsotopic,
    /// `w_a + w_sign + 1`: the rotoreflection axis plus a family.
    ReflectionAxisPlusFamily,
}

pub fn invariant_round_circles(rep: &RepSum) -> Result<CircleCensus> {
    use IrredLabel::*;
    let n = rep.group.n();
    let pre = |m: &str| Err(Error::Precondition(format!("{rep}: {m}")));
    if rep.group.is_dihedral() || rep.dim() != 4 {
        return pre("expected a 4-dimensional cyclic representation");
    }
    let proper = |a: ModClass| !a.is_zero() && 2 * a.value() != n;
    let b = rep.blocks();
    match b {
        [CycRot(a), rest @ ..] if proper(*a) => match rest {
            [CycRot(c)] if c.is_zero() => Ok(CircleCensus::TrivialAxisPlusFamily),
            [CycOne, CycOne] => Ok(CircleCensus::TrivialAxisPlusFamily),
            [CycRot(c)] if *c == *a || *c == a.neg() => Ok(CircleCensus::InfinitelyManyIsotopic),
            [CycRot(_)] => Ok(CircleCensus::ExactlyTwo),
            [CycSign, CycSign] => Ok(CircleCensus::ExactlyTwo),
            [CycSign, CycOne] | [CycOne, CycSign] => Ok(CircleCensus::ReflectionAxisPlusFamily),
            _ => pre("not of the form w_a+w_b or w_a+w_sign+1"),
        },
        _ => pre("first block must be w_a with a not in {0, n/2}"),
    }
}

/// Printable name of a representation for messages.
pub fn describe(rep: &RepSum) -> String {
    format!("{rep}")
}
