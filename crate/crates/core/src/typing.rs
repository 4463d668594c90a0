//! The symmetry types of cyclic and dihedral symmetric knots, the classifier
//! from orthogonal representations, restriction to subgroups, and the decision
//! procedure from coarse symmetry-group data.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{arg, EliminationRule, Error, Result};
use crate::orthrep::{fixed_dim, identify_family, is_faithful, Family, GroupElement, RepSum};
use crate::zmod::{enumerate_t_classes, f_units, gcd, FClass, GroupKind, GroupSpec, TClass};

/// Type name with its parameters; the group lives in [`SymmetryType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeKind {
    F2P,
    SPAc,
    TwoP,
    SNAc,
    SI,
    TwoR,
    Per(FClass),
    FPer(TClass),
    RRef(FClass),
    SIFP(TClass),
    SIP(FClass),
    SNAP(FClass),
    SNASI(FClass),
    DihB,
    DihD,
    DihF,
}

/// Parameter-free tag of a [`TypeKind`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    F2P,
    SPAc,
    TwoP,
    SNAc,
    SI,
    TwoR,
    Per,
    FPer,
    RRef,
    SIFP,
    SIP,
    SNAP,
    SNASI,
    DihB,
    DihD,
    DihF,
}

impl TypeTag {
    pub fn name(self) -> &'static str {
        match self {
            TypeTag::F2P => "F2P",
            TypeTag::SPAc => "SPAc",
            TypeTag::TwoP => "2P",
            TypeTag::SNAc => "SNAc",
            TypeTag::SI => "SI",
            TypeTag::TwoR => "2R",
            TypeTag::Per => "Per",
            TypeTag::FPer => "FPer",
            TypeTag::RRef => "RRef",
            TypeTag::SIFP => "SIFP",
            TypeTag::SIP => "SIP",
            TypeTag::SNAP => "SNAP",
            TypeTag::SNASI => "SNASI",
            TypeTag::DihB => "DihB",
            TypeTag::DihD => "DihD",
            TypeTag::DihF => "DihF",
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl TypeKind {
    pub fn tag(self) -> TypeTag {
        match self {
            TypeKind::F2P => TypeTag::F2P,
            TypeKind::SPAc => TypeTag::SPAc,
            TypeKind::TwoP => TypeTag::TwoP,
            TypeKind::SNAc => TypeTag::SNAc,
            TypeKind::SI => TypeTag::SI,
            TypeKind::TwoR => TypeTag::TwoR,
            TypeKind::Per(_) => TypeTag::Per,
            TypeKind::FPer(_) => TypeTag::FPer,
            TypeKind::RRef(_) => TypeTag::RRef,
            TypeKind::SIFP(_) => TypeTag::SIFP,
            TypeKind::SIP(_) => TypeTag::SIP,
            TypeKind::SNAP(_) => TypeTag::SNAP,
            TypeKind::SNASI(_) => TypeTag::SNASI,
            TypeKind::DihB => TypeTag::DihB,
            TypeKind::DihD => TypeTag::DihD,
            TypeKind::DihF => TypeTag::DihF,
        }
    }

    fn is_c2(self) -> bool {
        matches!(
            self,
            TypeKind::F2P | TypeKind::SPAc | TypeKind::TwoP | TypeKind::SNAc | TypeKind::SI | TypeKind::TwoR
        )
    }

    fn is_cyclic(self) -> bool {
        matches!(self, TypeKind::Per(_) | TypeKind::FPer(_) | TypeKind::RRef(_))
    }
}

/// Informational refinement of freely periodic types by which subgroups have fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FPerSubcase {
    /// Both parameters are units: every non-identity element acts freely.
    TrulyFree,
    /// Some proper power has a fixed circle.
    SemiPeriodic,
    /// `ab = 0`: the group splits as a product of two periodic factors.
    Biperiodic,
}

/// A symmetry type together with the group it is a type for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryType {
    kind: TypeKind,
    group: GroupSpec,
}

impl SymmetryType {
    /// Validates parameters against the group. Order-two types are stored over `C2`.
    pub fn new(kind: TypeKind, group: GroupSpec) -> Result<Self> {
        let n = group.n();
        let modulus_ok = |m: u64| -> Result<()> {
            if m != n {
                return arg(format!("parameter modulus {m} does not match {group}"));
            }
            Ok(())
        };
        let unit = |a: FClass| -> Result<()> {
            modulus_ok(a.modulus())?;
            if !a.is_unit() {
                return arg(format!("parameter {a} is not a unit mod {n}"));
            }
            Ok(())
        };
        if kind.is_c2() {
            if !group.is_order_two() {
                return arg(format!("{} is a type for the group of order two", kind.tag()));
            }
            return Ok(SymmetryType { kind, group: GroupSpec::cyclic(2)? });
        }
        if kind.is_cyclic() {
            if group.kind() != GroupKind::Cyclic || n < 3 {
                return arg(format!("{} needs C_n with n >= 3", kind.tag()));
            }
        } else if group.kind() != GroupKind::Dihedral || n < 2 {
            return arg(format!("{} needs D_n with n >= 2", kind.tag()));
        }
        match kind {
            TypeKind::Per(a) | TypeKind::SIP(a) | TypeKind::SNAP(a) => unit(a)?,
            TypeKind::RRef(a) | TypeKind::SNASI(a) => {
                unit(a)?;
                if n % 2 == 1 {
                    return arg(format!("{} needs even n", kind.tag()));
                }
            }
            TypeKind::FPer(t) | TypeKind::SIFP(t) => modulus_ok(t.modulus())?,
            TypeKind::DihD | TypeKind::DihF if n % 2 == 1 => {
                return arg(format!("{} needs even n", kind.tag()));
            }
            _ => {}
        }
        Ok(SymmetryType { kind, group })
    }

    pub fn kind(self) -> TypeKind {
        self.kind
    }

    pub fn tag(self) -> TypeTag {
        self.kind.tag()
    }

    pub fn group(self) -> GroupSpec {
        self.group
    }

    pub fn n(self) -> u64 {
        self.group.n()
    }

    pub fn is_c2(self) -> bool {
        self.kind.is_c2()
    }

    pub fn is_cyclic(self) -> bool {
        self.kind.is_cyclic()
    }

    pub fn is_dihedral(self) -> bool {
        !self.is_c2() && !self.is_cyclic()
    }

    /// False exactly for the types that only composite knots can have.
    pub fn prime_admissible(self) -> bool {
        !matches!(self.kind, TypeKind::TwoR | TypeKind::DihB | TypeKind::DihD | TypeKind::DihF)
    }

    /// Whether a symmetric planar diagram exists, i.e. the group has a global fixed point.
    pub fn good_diagram(self) -> bool {
        !matches!(
            self.kind,
            TypeKind::F2P | TypeKind::FPer(_) | TypeKind::SIFP(_) | TypeKind::SNAP(_) | TypeKind::SNASI(_) | TypeKind::DihF
        )
    }

    /// `(dim Fix(tau; K), dim Fix(tau; S^3))` for order-two types, `-1` meaning empty.
    pub fn c2_fixed_dims(self) -> Option<(i32, i32)> {
        Some(match self.kind {
            TypeKind::F2P => (-1, -1),
            TypeKind::SPAc => (-1, 0),
            TypeKind::TwoP => (-1, 1),
            TypeKind::SNAc => (0, 0),
            TypeKind::SI => (0, 1),
            TypeKind::TwoR => (0, 2),
            _ => return None,
        })
    }

    /// Dimension of `Fix(rho; S^3)` for cyclic types.
    pub fn rho_fixed_sphere_dim(self) -> Option<i32> {
        match self.kind {
            TypeKind::FPer(_) => Some(-1),
            TypeKind::Per(_) => Some(1),
            TypeKind::RRef(_) => Some(0),
            _ => None,
        }
    }

    /// Parameter set the type ranges over: `"T(n)"`, `"F(n)x"`, or `"unique"`.
    pub fn quantification(self) -> &'static str {
        match self.kind {
            TypeKind::FPer(_) | TypeKind::SIFP(_) => "T(n)",
            TypeKind::Per(_) | TypeKind::RRef(_) | TypeKind::SIP(_) | TypeKind::SNAP(_) | TypeKind::SNASI(_) => {
                "F(n)x"
            }
            _ => "unique",
        }
    }

    /// Whether the type exists only for even `n`.
    pub fn needs_even_n(self) -> bool {
        matches!(
            self.kind,
            TypeKind::RRef(_) | TypeKind::SNASI(_) | TypeKind::DihD | TypeKind::DihF
        )
    }

    /// Representation family realizing the type.
    pub fn family(self) -> Option<Family> {
        match self.kind {
            TypeKind::Per(_) | TypeKind::FPer(_) => Some(Family::CycA),
            TypeKind::RRef(_) => Some(Family::CycB),
            TypeKind::SIFP(_) | TypeKind::SIP(_) => Some(Family::DihA),
            TypeKind::SNAP(_) => Some(Family::DihC),
            TypeKind::SNASI(_) => Some(Family::DihE),
            TypeKind::DihB => Some(Family::DihB),
            TypeKind::DihD => Some(Family::DihD),
            TypeKind::DihF => Some(Family::DihF),
            _ => None,
        }
    }

    /// Name of the corresponding order-two type (the `n = 2` column for cyclic
    /// types, the `n = 1` column for dihedral ones).
    pub fn order_two_name(self) -> Option<TypeTag> {
        match self.kind {
            TypeKind::FPer(_) => Some(TypeTag::F2P),
            TypeKind::Per(_) => Some(TypeTag::TwoP),
            TypeKind::RRef(_) => Some(TypeTag::SPAc),
            TypeKind::SIFP(_) | TypeKind::SIP(_) => Some(TypeTag::SI),
            TypeKind::SNAP(_) => Some(TypeTag::SNAc),
            TypeKind::DihB => Some(TypeTag::TwoR),
            _ => None,
        }
    }

    /// Type of the rotation subgroup `<rho>` of a dihedral type.
    pub fn rho_type(self) -> Option<SymmetryType> {
        let n = self.n();
        let one = || FClass::from_int(1, n).unwrap();
        let kind = match self.kind {
            TypeKind::SIFP(t) => TypeKind::FPer(t),
            TypeKind::SIP(a) | TypeKind::SNAP(a) => TypeKind::Per(a),
            TypeKind::SNASI(a) => TypeKind::RRef(a),
            TypeKind::DihB => TypeKind::Per(one()),
            TypeKind::DihD => TypeKind::RRef(one()),
            TypeKind::DihF => TypeKind::FPer(TClass::from_ints(1, (n / 2) as i64, n).unwrap()),
            _ => return None,
        };
        Some(cyclic_type(kind, n))
    }

    /// Types of the order-two subgroups `<sigma>` and `<rho sigma>` of a dihedral type.
    pub fn reflection_types(self) -> Option<(SymmetryType, SymmetryType)> {
        let (s, rs) = match self.kind {
            TypeKind::SIFP(_) | TypeKind::SIP(_) => (TypeKind::SI, TypeKind::SI),
            TypeKind::SNAP(_) => (TypeKind::SNAc, TypeKind::SNAc),
            TypeKind::SNASI(_) => (TypeKind::SI, TypeKind::SNAc),
            TypeKind::DihB => (TypeKind::TwoR, TypeKind::TwoR),
            TypeKind::DihD => (TypeKind::TwoR, TypeKind::SI),
            TypeKind::DihF => (TypeKind::TwoR, TypeKind::SNAc),
            _ => return None,
        };
        Some((c2(s), c2(rs)))
    }

    /// Subcase of a freely periodic rotation part.
    pub fn fper_subcase(self) -> Option<FPerSubcase> {
        let t = match self.kind {
            TypeKind::FPer(t) | TypeKind::SIFP(t) => t,
            _ => return None,
        };
        let n = t.modulus();
        let (a, b) = (t.a(), t.b());
        Some(if a.is_unit() && b.is_unit() {
            FPerSubcase::TrulyFree
        } else if (a.value() * b.value()) % n == 0 {
            FPerSubcase::Biperiodic
        } else {
            FPerSubcase::SemiPeriodic
        })
    }

    /// Whether the generator acts freely on `S^3` (freely periodic) or reverses
    /// the orientation of `S^3` (amphichiral). Meaningful for order-two and cyclic types.
    pub fn is_freely_periodic(self) -> bool {
        matches!(self.kind, TypeKind::F2P | TypeKind::FPer(_))
    }

    pub fn is_amphichiral(self) -> bool {
        matches!(
            self.kind,
            TypeKind::SPAc | TypeKind::SNAc | TypeKind::TwoR | TypeKind::RRef(_)
        )
    }
}

fn c2(kind: TypeKind) -> SymmetryType {
    SymmetryType { kind, group: GroupSpec::cyclic(2).unwrap() }
}

/// A cyclic type over `C_n`, renamed into the order-two vocabulary when `n = 2`.
fn cyclic_type(kind: TypeKind, n: u64) -> SymmetryType {
    if n == 2 {
        let k = match kind {
            TypeKind::FPer(_) => TypeKind::F2P,
            TypeKind::Per(_) => TypeKind::TwoP,
            TypeKind::RRef(_) => TypeKind::SPAc,
            other => other,
        };
        return c2(k);
    }
    SymmetryType { kind, group: GroupSpec::cyclic(n).unwrap() }
}

fn dihedral_type(kind: TypeKind, n: u64) -> SymmetryType {
    if n == 1 {
        let k = match kind {
            TypeKind::SIFP(_) | TypeKind::SIP(_) => TypeKind::SI,
            TypeKind::SNAP(_) => TypeKind::SNAc,
            TypeKind::DihB => TypeKind::TwoR,
            other => other,
        };
        return c2(k);
    }
    SymmetryType { kind, group: GroupSpec::dihedral(n).unwrap() }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.tag().name();
        match self.kind {
            TypeKind::Per(a) | TypeKind::RRef(a) | TypeKind::SIP(a) | TypeKind::SNAP(a) | TypeKind::SNASI(a) => {
                write!(f, "{name}({a})/{}", self.group)
            }
            TypeKind::FPer(t) | TypeKind::SIFP(t) => write!(f, "{name}({t})/{}", self.group),
            _ => write!(f, "{name}/{}", self.group),
        }
    }
}

impl FromStr for SymmetryType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perr = || Error::Parse(format!("bad type string '{s}'"));
        let (head, group) = s.trim().rsplit_once('/').ok_or_else(perr)?;
        let group: GroupSpec = group.parse()?;
        let n = group.n();
        let (name, params): (&str, Vec<i64>) = match head.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(perr)?;
                let ps = inner
                    .split(',')
                    .map(|p| p.trim().parse::<i64>().map_err(|_| perr()))
                    .collect::<Result<Vec<_>>>()?;
                (name, ps)
            }
            None => (head, Vec::new()),
        };
        let one = |ps: &[i64]| -> Result<FClass> {
            match ps {
                [a] => FClass::from_int(*a, n),
                _ => Err(perr()),
            }
        };
        let two = |ps: &[i64]| -> Result<TClass> {
            match ps {
                [a, b] => TClass::from_ints(*a, *b, n),
                _ => Err(perr()),
            }
        };
        let none = |ps: &[i64], k: TypeKind| -> Result<TypeKind> {
            if ps.is_empty() {
                Ok(k)
            } else {
                Err(perr())
            }
        };
        let kind = match name {
            "F2P" => none(&params, TypeKind::F2P)?,
            "SPAc" => none(&params, TypeKind::SPAc)?,
            "2P" => none(&params, TypeKind::TwoP)?,
            "SNAc" => none(&params, TypeKind::SNAc)?,
            "SI" => none(&params, TypeKind::SI)?,
            "2R" => none(&params, TypeKind::TwoR)?,
            "Per" => TypeKind::Per(one(&params)?),
            "FPer" => TypeKind::FPer(two(&params)?),
            "RRef" => TypeKind::RRef(one(&params)?),
            "SIFP" => TypeKind::SIFP(two(&params)?),
            "SIP" => TypeKind::SIP(one(&params)?),
            "SNAP" => TypeKind::SNAP(one(&params)?),
            "SNASI" => TypeKind::SNASI(one(&params)?),
            "DihB" => none(&params, TypeKind::DihB)?,
            "DihD" => none(&params, TypeKind::DihD)?,
            "DihF" => none(&params, TypeKind::DihF)?,
            _ => return Err(perr()),
        };
        SymmetryType::new(kind, group)
    }
}

/// Order-two type from the fixed-set dimensions on the knot and on `S^3`.
pub fn c2_type(fix_knot_dim: i32, fix_sphere_dim: i32) -> Result<SymmetryType> {
    if !(-1..=0).contains(&fix_knot_dim) || !(-1..=2).contains(&fix_sphere_dim) {
        return arg(format!(
            "fixed-set dimensions out of range: knot {fix_knot_dim}, sphere {fix_sphere_dim}"
        ));
    }
    let kind = match (fix_knot_dim, fix_sphere_dim) {
        (-1, -1) => TypeKind::F2P,
        (-1, 0) => TypeKind::SPAc,
        (-1, 1) => TypeKind::TwoP,
        (0, 0) => TypeKind::SNAc,
        (0, 1) => TypeKind::SI,
        (0, 2) => TypeKind::TwoR,
        (-1, 2) => {
            return Err(Error::InadmissiblePair {
                fix_knot: -1,
                fix_sphere: 2,
                rule: EliminationRule::FixedSphereFreeOnKnot,
            })
        }
        (k, s) => {
            return Err(Error::InadmissiblePair {
                fix_knot: k,
                fix_sphere: s,
                rule: EliminationRule::FixedLociNesting,
            })
        }
    };
    Ok(c2(kind))
}

/// Type of the action of a faithful four-dimensional orthogonal representation on
/// any knot it leaves invariant.
///
/// Over `C2` the generator is taken to preserve the knot's orientation; over `D1`
/// it reverses it.
pub fn classify(rep: &RepSum) -> Result<SymmetryType> {
    if rep.dim() != 4 {
        return arg("classification needs a 4-dimensional representation");
    }
    if !is_faithful(rep) {
        return arg(format!("{rep} is not faithful"));
    }
    let group = rep.group();
    if group.is_order_two() {
        let (g, knot) = if group.is_dihedral() {
            (GroupElement::sigma(), 0)
        } else {
            (GroupElement::rho(1), -1)
        };
        let d = fixed_dim(rep, g)? as i32;
        return c2_type(knot, d - 1);
    }
    let m = identify_family(rep)?;
    let fam = m.family;
    let eliminated = |rule| Err(Error::NotAKnotAction { family: fam, rule });
    let a = m.a.map(FClass::new);
    let t = || TClass::new(m.a.unwrap(), m.b.unwrap());
    let a_is_one = a.map(|x| x.value() == 1).unwrap_or(false);
    let kind = match fam {
        Family::CycA if m.b.unwrap().is_zero() => TypeKind::Per(a.unwrap()),
        Family::CycA => TypeKind::FPer(t()?),
        Family::CycB => TypeKind::RRef(a.unwrap()),
        Family::CycC => return eliminated(EliminationRule::CyclicSphereReflection),
        Family::DihA if m.b.unwrap().is_zero() => TypeKind::SIP(a.unwrap()),
        Family::DihA => TypeKind::SIFP(t()?),
        Family::DihC => TypeKind::SNAP(a.unwrap()),
        Family::DihE => TypeKind::SNASI(a.unwrap()),
        Family::DihB | Family::DihD | Family::DihF if !a_is_one => {
            return eliminated(EliminationRule::UnitAxisLinking)
        }
        Family::DihB => TypeKind::DihB,
        Family::DihD => TypeKind::DihD,
        Family::DihF => TypeKind::DihF,
        Family::DihG | Family::DihH => return eliminated(EliminationRule::FixedSphereFreeOnKnot),
        Family::DihI => return eliminated(EliminationRule::AxisLinking),
        Family::DihJ | Family::DihK | Family::DihL => return eliminated(EliminationRule::FixedLociNesting),
    };
    SymmetryType::new(kind, group)
}

/// Every type for the group, in table order.
pub fn admissible_types(group: GroupSpec) -> Vec<SymmetryType> {
    let n = group.n();
    let mut out = Vec::new();
    if group.is_order_two() {
        for k in [TypeKind::F2P, TypeKind::SPAc, TypeKind::TwoP, TypeKind::SNAc, TypeKind::SI, TypeKind::TwoR] {
            out.push(c2(k));
        }
        return out;
    }
    let ts = enumerate_t_classes(n as i64).unwrap_or_default();
    let us = f_units(n);
    let mut push = |k: TypeKind| out.push(SymmetryType::new(k, group).expect("table entries are valid"));
    if !group.is_dihedral() {
        ts.iter().for_each(|&t| push(TypeKind::FPer(t)));
        us.iter().for_each(|&a| push(TypeKind::Per(a)));
        if n.is_multiple_of(2) {
            us.iter().for_each(|&a| push(TypeKind::RRef(a)));
        }
    } else {
        ts.iter().for_each(|&t| push(TypeKind::SIFP(t)));
        us.iter().for_each(|&a| push(TypeKind::SIP(a)));
        us.iter().for_each(|&a| push(TypeKind::SNAP(a)));
        if n.is_multiple_of(2) {
            us.iter().for_each(|&a| push(TypeKind::SNASI(a)));
        }
        push(TypeKind::DihB);
        if n.is_multiple_of(2) {
            push(TypeKind::DihD);
            push(TypeKind::DihF);
        }
    }
    out
}

fn reduce_f(a: FClass, m: u64) -> FClass {
    FClass::new(a.canonical().reduce(m).unwrap())
}

fn check_divisor(n: u64, d: u64) -> Result<u64> {
    if d == 0 || !n.is_multiple_of(d) {
        return arg(format!("{d} does not divide {n}"));
    }
    Ok(n / d)
}

/// Type of the restriction to `<rho^d>`.
pub fn restrict_cyclic(t: SymmetryType, n: u64, d: u64) -> Result<SymmetryType> {
    if t.n() != n || !(t.is_cyclic() || (t.is_c2() && n == 2)) {
        return arg(format!("{t} is not a cyclic type for C{n}"));
    }
    let m = check_divisor(n, d)?;
    if m == 1 {
        return arg("the subgroup is trivial");
    }
    if d == 1 {
        return Ok(t);
    }
    let kind = match t.kind {
        TypeKind::FPer(p) => {
            let (a, b) = (p.a().reduce(m)?, p.b().reduce(m)?);
            if !a.is_zero() && !b.is_zero() {
                TypeKind::FPer(TClass::new(a, b)?)
            } else if a.is_zero() && b.is_zero() {
                return arg("restriction acts trivially");
            } else {
                TypeKind::Per(FClass::new(a.add(b)))
            }
        }
        TypeKind::Per(a) => TypeKind::Per(reduce_f(a, m)),
        TypeKind::RRef(a) if d.is_multiple_of(2) => TypeKind::Per(reduce_f(a, m)),
        TypeKind::RRef(a) => TypeKind::RRef(reduce_f(a, m)),
        _ => unreachable!(),
    };
    Ok(cyclic_type(kind, m))
}

/// Type of the restriction to `<rho^d, rho^r sigma>`.
pub fn restrict_dihedral(t: SymmetryType, n: u64, d: u64, r: u64) -> Result<SymmetryType> {
    if t.n() != n || !t.is_dihedral() {
        return arg(format!("{t} is not a dihedral type for D{n}"));
    }
    let m = check_divisor(n, d)?;
    if r >= d {
        return arg(format!("need 0 <= r < d, got r = {r}, d = {d}"));
    }
    if d == 1 {
        return Ok(t);
    }
    let one = || FClass::from_int(1, m).unwrap();
    let (d_even, r_even) = (d.is_multiple_of(2), r.is_multiple_of(2));
    let kind = match t.kind {
        TypeKind::SIFP(p) => {
            let (a, b) = (p.a().reduce(m)?, p.b().reduce(m)?);
            if !a.is_zero() && !b.is_zero() {
                TypeKind::SIFP(TClass::new(a, b)?)
            } else {
                TypeKind::SIP(FClass::new(a.add(b)))
            }
        }
        TypeKind::SIP(a) => TypeKind::SIP(reduce_f(a, m)),
        TypeKind::SNAP(a) => TypeKind::SNAP(reduce_f(a, m)),
        TypeKind::SNASI(a) if d_even && r_even => TypeKind::SIP(reduce_f(a, m)),
        TypeKind::SNASI(a) if d_even => TypeKind::SNAP(reduce_f(a, m)),
        TypeKind::SNASI(a) => TypeKind::SNASI(reduce_f(a, m)),
        TypeKind::DihB => TypeKind::DihB,
        TypeKind::DihD if d_even && r_even => TypeKind::DihB,
        TypeKind::DihD if d_even => TypeKind::SIP(one()),
        TypeKind::DihD => TypeKind::DihD,
        TypeKind::DihF if d_even && r_even => TypeKind::DihB,
        TypeKind::DihF if d_even => TypeKind::SNAP(one()),
        TypeKind::DihF => TypeKind::DihF,
        _ => unreachable!(),
    };
    Ok(dihedral_type(kind, m))
}

/// The type of each non-identity element, read as the type of the cyclic
/// subgroup it generates (with the generator re-chosen to turn the knot by
/// `1/m`), in the order of [`GroupElement::all`].
pub fn element_actions(t: SymmetryType) -> Vec<(GroupElement, SymmetryType)> {
    let n = t.n();
    if t.is_c2() {
        return alloc::vec![(GroupElement::rho(1), t)];
    }
    let rho = if t.is_cyclic() { t } else { t.rho_type().unwrap() };
    let mut out = Vec::new();
    for k in 1..n {
        let d = gcd(k, n);
        out.push((GroupElement::rho(k as i64), restrict_cyclic(rho, n, d).unwrap()));
    }
    if t.is_dihedral() {
        for k in 0..n {
            out.push((GroupElement::rho_sigma(k as i64), restrict_dihedral(t, n, n, k).unwrap()));
        }
    }
    out
}

/// Types whose element labels include both a freely periodic and an amphichiral
/// element, over the given groups.
pub fn free_and_amphichiral_types(groups: &[GroupSpec]) -> Vec<SymmetryType> {
    let mut out = Vec::new();
    for &g in groups {
        for t in admissible_types(g) {
            let acts = element_actions(t);
            let free = acts.iter().any(|(_, s)| s.is_freely_periodic());
            let amph = acts.iter().any(|(_, s)| s.is_amphichiral());
            if free && amph {
                out.push(t);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupShape {
    Trivial,
    Cyclic,
    Dihedral,
}

/// Coarse data about the symmetry group of a hyperbolic knot complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnappyProfile {
    pub shape: GroupShape,
    pub order: u64,
    pub invertible: bool,
    pub amphichiral: bool,
    /// Action `(x, y)` on meridian and longitude, for groups of order two.
    pub cusp: Option<(i8, i8)>,
}

/// Possible type tags given the profile.
pub fn snappy_decide(p: SnappyProfile) -> Result<BTreeSet<TypeTag>> {
    let bad = |m: &str| Err(Error::Classification(format!("inconsistent profile: {m}")));
    let mut out = BTreeSet::new();
    if p.order == 0 {
        return arg("group order must be positive");
    }
    if p.cusp.is_some() != (p.order == 2) {
        return arg("the cusp action is given exactly when the group has order two");
    }
    if p.shape == GroupShape::Trivial || p.order == 1 {
        if p.shape != GroupShape::Trivial || p.order != 1 {
            return bad("trivial group must have order 1");
        }
        if p.invertible || p.amphichiral {
            return bad("trivial group has no inversion or amphichiral element");
        }
        return Ok(out);
    }
    if p.order == 2 {
        let tag = match p.cusp.unwrap() {
            (1, 1) => {
                out.insert(TypeTag::TwoP);
                out.insert(TypeTag::F2P);
                return Ok(out);
            }
            (-1, 1) => TypeTag::SPAc,
            (1, -1) => TypeTag::SNAc,
            (-1, -1) => TypeTag::SI,
            _ => return arg("cusp entries must be +1 or -1"),
        };
        out.insert(tag);
        return Ok(out);
    }
    match p.shape {
        GroupShape::Cyclic => {
            if p.invertible {
                return bad("a cyclic group of order > 2 contains no inversion");
            }
            if p.amphichiral {
                if p.order % 2 == 1 {
                    return bad("an amphichiral cyclic group has even order");
                }
                out.insert(TypeTag::RRef);
            } else {
                out.insert(TypeTag::Per);
                out.insert(TypeTag::FPer);
            }
        }
        GroupShape::Dihedral => {
            if p.order % 2 == 1 {
                return bad("dihedral groups have even order");
            }
            match (p.invertible, p.amphichiral) {
                (true, false) => {
                    out.insert(TypeTag::SIP);
                    out.insert(TypeTag::SIFP);
                }
                (false, true) => {
                    out.insert(TypeTag::SNAP);
                }
                (true, true) => {
                    if !p.order.is_multiple_of(4) {
                        return bad("SNASI needs D_n with n even");
                    }
                    out.insert(TypeTag::SNASI);
                }
                (false, false) => return bad("a dihedral group contains an inversion or an amphichiral element"),
            }
        }
        GroupShape::Trivial => unreachable!(),
    }
    Ok(out)
}

/// Short human description of a type's table row.
pub fn row_summary(t: SymmetryType) -> String {
    let mut s = t.to_string();
    if let Some((k, sp)) = t.c2_fixed_dims() {
        s.push_str(&format!(" fix_knot={k} fix_sphere={sp}"));
    }
    if let Some(d) = t.rho_fixed_sphere_dim() {
        s.push_str(&format!(" fix_rho={d}"));
    }
    if let Some(r) = t.rho_type() {
        let (a, b) = t.reflection_types().unwrap();
        s.push_str(&format!(" rho={r} sigma={} rho_sigma={}", a.tag(), b.tag()));
    }
    s.push_str(&format!(" prime={} good_diagram={}", t.prime_admissible(), t.good_diagram()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthrep::{enumerate_cyclic_o4, enumerate_dihedral_o4};

    fn ty(s: &str) -> SymmetryType {
        s.parse().unwrap()
    }

    fn rep(s: &str) -> RepSum {
        s.parse().unwrap()
    }

    #[test]
    fn c2_examples() {
        assert_eq!(c2_type(-1, -1).unwrap().tag(), TypeTag::F2P);
        assert_eq!(c2_type(0, 1).unwrap().tag(), TypeTag::SI);
        let r = c2_type(0, 2).unwrap();
        assert_eq!(r.tag(), TypeTag::TwoR);
        assert!(!r.prime_admissible());
        assert!(matches!(
            c2_type(-1, 2),
            Err(Error::InadmissiblePair { rule: EliminationRule::FixedSphereFreeOnKnot, .. })
        ));
        assert!(matches!(
            c2_type(0, -1),
            Err(Error::InadmissiblePair { rule: EliminationRule::FixedLociNesting, .. })
        ));
        assert!(c2_type(1, 1).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&rep("C5: w[2]+w[0]")).unwrap(), ty("Per(2)/C5"));
        assert_eq!(classify(&rep("D5: v[2]+v[0]")).unwrap(), ty("SIP(2)/D5"));
        assert!(matches!(
            classify(&rep("C6: w[2]+w[sign]+1")),
            Err(Error::NotAKnotAction { family: Family::CycC, .. })
        ));
        // 4 is not 2 mod 4 and 1 is a unit: this is the DihF shape.
        assert_eq!(classify(&rep("D4: v[1]+v[sign]+v[sign]")).unwrap(), ty("DihF/D4"));
        assert!(matches!(
            classify(&rep("D6: v[2]+v[sign]+v[sign]")),
            Err(Error::NotAKnotAction { family: Family::DihI, rule: EliminationRule::AxisLinking })
        ));
        assert!(matches!(
            classify(&rep("D5: v[2]+1+1")),
            Err(Error::NotAKnotAction { family: Family::DihB, .. })
        ));
        assert_eq!(classify(&rep("C2: 1+1+w[sign]+w[sign]")).unwrap().tag(), TypeTag::TwoP);
        assert_eq!(classify(&rep("D1: v[sigma]+v[sigma]+1+1")).unwrap().tag(), TypeTag::SI);
    }

    #[test]
    fn type_string_roundtrip() {
        for s in ["Per(2)/C5", "SIFP(1,1)/D2", "SNASI(3)/D8", "2R/C2", "FPer(1,2)/C5", "DihF/D6"] {
            assert_eq!(ty(s).to_string(), s);
        }
        for bad in ["Per(2)/C4", "RRef(1)/C5", "SNASI(1)/D3", "SI/C3", "Per/C5", "DihB(1)/D3", "Foo/C3"] {
            assert!(bad.parse::<SymmetryType>().is_err(), "{bad}");
        }
        for n in 2..=12 {
            for g in [GroupSpec::cyclic(n).unwrap(), GroupSpec::dihedral(n).unwrap()] {
                for t in admissible_types(g) {
                    assert_eq!(t.to_string().parse::<SymmetryType>().unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_types(GroupSpec::cyclic(2).unwrap()).len(), 6);
        let c3: BTreeSet<String> =
            admissible_types(GroupSpec::cyclic(3).unwrap()).iter().map(|t| t.to_string()).collect();
        let want: BTreeSet<String> =
            ["Per(1)/C3", "FPer(1,1)/C3", "FPer(1,2)/C3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(c3, want);
        let d2: Vec<String> =
            admissible_types(GroupSpec::dihedral(2).unwrap()).iter().map(|t| t.to_string()).collect();
        assert_eq!(
            d2,
            ["SIFP(1,1)/D2", "SIP(1)/D2", "SNAP(1)/D2", "SNASI(1)/D2", "DihB/D2", "DihD/D2", "DihF/D2"]
        );
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restrict_cyclic(ty("FPer(2,3)/C6"), 6, 2).unwrap(), ty("Per(2)/C3"));
        assert_eq!(restrict_cyclic(ty("RRef(1)/C6"), 6, 3).unwrap(), ty("SPAc/C2"));
        assert_eq!(restrict_cyclic(ty("Per(1)/C6"), 6, 2).unwrap(), ty("Per(1)/C3"));
        assert!(restrict_cyclic(ty("Per(1)/C6"), 6, 4).is_err());
        assert!(restrict_cyclic(ty("Per(1)/C6"), 6, 6).is_err());
        assert_eq!(restrict_dihedral(ty("SNASI(1)/D4"), 4, 2, 1).unwrap(), ty("SNAP(1)/D2"));
        assert_eq!(restrict_dihedral(ty("SNASI(1)/D4"), 4, 2, 0).unwrap(), ty("SIP(1)/D2"));
        assert_eq!(restrict_dihedral(ty("SIFP(2,3)/D6"), 6, 2, 0).unwrap(), ty("SIP(2)/D3"));
        assert!(restrict_dihedral(ty("SIP(1)/D6"), 6, 2, 2).is_err());
    }

    #[test]
    fn good_diagram_means_global_fixed_vector() {
        for n in 2..=12u64 {
            for (r, _) in enumerate_dihedral_o4(n).unwrap().into_iter().chain(if n >= 3 {
                enumerate_cyclic_o4(n).unwrap()
            } else {
                Vec::new()
            }) {
                let Ok(t) = classify(&r) else { continue };
                let split = r.split_degenerate();
                let global = split
                    .iter()
                    .any(|l| matches!(l, crate::orthrep::IrredLabel::CycOne | crate::orthrep::IrredLabel::DihOne));
                assert_eq!(t.good_diagram(), global, "{r} -> {t}");
            }
        }
    }

    #[test]
    fn reflection_types_match_fixed_dims() {
        // sigma and rho sigma reverse the knot; their fixed dimension in R^4 fixes the order-two type.
        for n in 2..=12u64 {
            for (r, _) in enumerate_dihedral_o4(n).unwrap() {
                let Ok(t) = classify(&r) else { continue };
                let (s, rs) = t.reflection_types().unwrap();
                let ds = fixed_dim(&r, GroupElement::sigma()).unwrap() as i32 - 1;
                let drs = fixed_dim(&r, GroupElement::rho_sigma(1)).unwrap() as i32 - 1;
                assert_eq!(c2_type(0, ds).unwrap(), s, "{r}");
                assert_eq!(c2_type(0, drs).unwrap(), rs, "{r}");
                let cyc = t.rho_type().unwrap();
                let drho = fixed_dim(&r, GroupElement::rho(1)).unwrap() as i32 - 1;
                if n == 2 {
                    assert_eq!(c2_type(-1, drho).unwrap(), cyc, "{r}");
                } else {
                    assert_eq!(cyc.rho_fixed_sphere_dim().unwrap(), drho, "{r}");
                }
            }
        }
    }

    #[test]
    fn fper_subcases() {
        assert_eq!(ty("FPer(1,2)/C5").fper_subcase(), Some(FPerSubcase::TrulyFree));
        assert_eq!(ty("FPer(2,3)/C6").fper_subcase(), Some(FPerSubcase::Biperiodic));
        assert_eq!(ty("FPer(1,2)/C8").fper_subcase(), Some(FPerSubcase::SemiPeriodic));
        assert_eq!(ty("Per(1)/C8").fper_subcase(), None);
    }

    #[test]
    fn snappy_examples() {
        let p = |shape, order, inv, amph, cusp| SnappyProfile { shape, order, invertible: inv, amphichiral: amph, cusp };
        let set = |v: &[TypeTag]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(snappy_decide(p(GroupShape::Dihedral, 8, true, true, None)).unwrap(), set(&[TypeTag::SNASI]));
        assert_eq!(snappy_decide(p(GroupShape::Cyclic, 4, false, true, None)).unwrap(), set(&[TypeTag::RRef]));
        assert_eq!(snappy_decide(p(GroupShape::Cyclic, 2, false, false, Some((-1, -1)))).unwrap(), set(&[TypeTag::SI]));
        assert_eq!(
            snappy_decide(p(GroupShape::Cyclic, 2, false, false, Some((1, 1)))).unwrap(),
            set(&[TypeTag::TwoP, TypeTag::F2P])
        );
        assert_eq!(snappy_decide(p(GroupShape::Cyclic, 5, false, false, None)).unwrap(), set(&[TypeTag::Per, TypeTag::FPer]));
        assert_eq!(snappy_decide(p(GroupShape::Dihedral, 6, true, false, None)).unwrap(), set(&[TypeTag::SIP, TypeTag::SIFP]));
        assert_eq!(snappy_decide(p(GroupShape::Dihedral, 6, false, true, None)).unwrap(), set(&[TypeTag::SNAP]));
        assert!(snappy_decide(p(GroupShape::Trivial, 1, false, false, None)).unwrap().is_empty());
        assert!(matches!(snappy_decide(p(GroupShape::Dihedral, 6, false, false, None)), Err(Error::Classification(_))));
        assert!(matches!(snappy_decide(p(GroupShape::Cyclic, 4, true, false, None)), Err(Error::Classification(_))));
        assert!(snappy_decide(p(GroupShape::Cyclic, 4, false, false, Some((1, 1)))).is_err());
    }
}
