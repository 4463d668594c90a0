//! Residues mod `n`, the quotients `F(n)` (by negation) and `T(n)` (by negation
//! and swap), and the group descriptors `C_n` / `D_n`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{arg, Error, Result};
use crate::orthrep::IrredLabel;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `n`, if `a` is a unit.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

/// A residue class in `Z/(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModClass {
    value: u64,
    modulus: u64,
}

impl ModClass {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return arg("modulus must be positive");
        }
        Ok(ModClass {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    pub fn neg(self) -> Self {
        ModClass {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn add(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        ModClass {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(self, k: u64) -> Self {
        ModClass {
            value: ((self.value as u128 * k as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    /// Reduction into `Z/(m)` for `m | n`.
    pub fn reduce(self, m: u64) -> Result<Self> {
        if m == 0 || !self.modulus.is_multiple_of(m) {
            return arg("reduction modulus must divide the modulus");
        }
        Ok(ModClass {
            value: self.value % m,
            modulus: m,
        })
    }

    /// The generator of the additive subgroup `<a>`, i.e. `gcd(a, n)`.
    pub fn ideal_generator(self) -> u64 {
        gcd(self.value, self.modulus)
    }

    /// Signed representative in `(-n/2, n/2]`.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        let n = self.modulus as i64;
        if 2 * v > n {
            v - n
        } else {
            v
        }
    }
}

impl fmt::Display for ModClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `gcd(a, b, n) = 1`.
pub fn generates_unit_ideal(a: ModClass, b: ModClass) -> Result<bool> {
    if a.modulus != b.modulus {
        return arg("mismatched moduli");
    }
    Ok(gcd(gcd(a.value, b.value), a.modulus) == 1)
}

/// An element of `F(n) = Z/(n) / {±1}`, stored as `min(a, n - a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FClass {
    canonical: ModClass,
}

impl FClass {
    pub fn new(a: ModClass) -> Self {
        let c = if a.neg().value < a.value { a.neg() } else { a };
        FClass { canonical: c }
    }

    pub fn from_int(a: i64, n: u64) -> Result<Self> {
        Ok(FClass::new(ModClass::new(a, n)?))
    }

    pub fn canonical(self) -> ModClass {
        self.canonical
    }

    pub fn value(self) -> u64 {
        self.canonical.value
    }

    pub fn modulus(self) -> u64 {
        self.canonical.modulus
    }

    pub fn is_unit(self) -> bool {
        self.canonical.is_unit()
    }

    pub fn is_zero(self) -> bool {
        self.canonical.is_zero()
    }
}

impl fmt::Display for FClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical.value)
    }
}

pub fn enumerate_f_classes(n: i64) -> Result<Vec<FClass>> {
    if n <= 0 {
        return arg("F(n) needs n >= 1");
    }
    let n = n as u64;
    Ok((0..=n / 2)
        .map(|a| FClass::new(ModClass { value: a, modulus: n }))
        .collect())
}

/// Units of `F(n)`, the parameter set of the single-parameter types.
pub fn f_units(n: u64) -> Vec<FClass> {
    (1..=n / 2)
        .filter(|&a| gcd(a, n) == 1)
        .map(|a| FClass::new(ModClass { value: a, modulus: n }))
        .collect()
}

/// An element of `T(n)`: a pair of nonzero residues generating the unit ideal,
/// up to `(a,b) ~ (-a,-b) ~ (b,a)`. Stored as the lexicographically least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TClass {
    a: ModClass,
    b: ModClass,
}

impl TClass {
    pub fn new(a: ModClass, b: ModClass) -> Result<Self> {
        if a.modulus != b.modulus {
            return arg("mismatched moduli");
        }
        if a.modulus < 2 {
            return arg("T(n) needs n >= 2");
        }
        if a.is_zero() || b.is_zero() {
            return arg("T(n) entries must be nonzero");
        }
        if !generates_unit_ideal(a, b)? {
            return arg("pair does not generate the unit ideal");
        }
        let orbit = [(a, b), (a.neg(), b.neg()), (b, a), (b.neg(), a.neg())];
        let (a, b) = orbit
            .iter()
            .copied()
            .min_by_key(|(x, y)| (x.value, y.value))
            .unwrap();
        Ok(TClass { a, b })
    }

    pub fn from_ints(a: i64, b: i64, n: u64) -> Result<Self> {
        TClass::new(ModClass::new(a, n)?, ModClass::new(b, n)?)
    }

    pub fn a(self) -> ModClass {
        self.a
    }

    pub fn b(self) -> ModClass {
        self.b
    }

    pub fn modulus(self) -> u64 {
        self.a.modulus
    }
}

impl fmt::Display for TClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a.value, self.b.value)
    }
}

pub fn enumerate_t_classes(n: i64) -> Result<Vec<TClass>> {
    if n <= 1 {
        return arg("T(n) needs n >= 2");
    }
    let n = n as u64;
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n {
            if gcd(gcd(a, b), n) != 1 {
                continue;
            }
            let t = TClass::from_ints(a as i64, b as i64, n)?;
            if t.a.value == a && t.b.value == b {
                out.push(t);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

/// `C_n` (order `n`, generator `rho`) or `D_n` (order `2n`, generators `rho`, `sigma`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    kind: GroupKind,
    n: u64,
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n < 2 {
            return arg("C_n needs n >= 2");
        }
        Ok(GroupSpec { kind: GroupKind::Cyclic, n })
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        if n < 1 {
            return arg("D_n needs n >= 1");
        }
        Ok(GroupSpec { kind: GroupKind::Dihedral, n })
    }

    pub fn kind(self) -> GroupKind {
        self.kind
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn is_dihedral(self) -> bool {
        self.kind == GroupKind::Dihedral
    }

    pub fn order(self) -> u64 {
        match self.kind {
            GroupKind::Cyclic => self.n,
            GroupKind::Dihedral => 2 * self.n,
        }
    }

    /// `C_2` and `D_1` are the two presentations of the group of order two.
    pub fn is_order_two(self) -> bool {
        self.order() == 2
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Cyclic => write!(f, "C{}", self.n),
            GroupKind::Dihedral => write!(f, "D{}", self.n),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.chars().next() {
            Some('C') => (GroupKind::Cyclic, &s[1..]),
            Some('D') => (GroupKind::Dihedral, &s[1..]),
            _ => return Err(Error::Parse(alloc::format!("bad group '{s}'"))),
        };
        if rest.is_empty() || !rest.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(alloc::format!("bad group '{s}'")));
        }
        let n: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad group order in '{s}'")))?;
        match kind {
            GroupKind::Cyclic => GroupSpec::cyclic(n),
            GroupKind::Dihedral => GroupSpec::dihedral(n),
        }
    }
}

/// Action of the automorphism `f_shift: rho -> rho, sigma -> rho^shift sigma` on
/// dihedral irreducible labels, by precomposition. An odd shift exchanges
/// `v_sign` and `v_inv`; everything else is fixed.
pub fn jn_index_action(n: u64, shift: i64, label: IrredLabel) -> Result<IrredLabel> {
    if n == 0 {
        return arg("n must be positive");
    }
    let odd = shift.rem_euclid(2) == 1;
    match label {
        IrredLabel::CycOne | IrredLabel::CycSign | IrredLabel::CycRot(_) => {
            arg("J_n acts on dihedral labels only")
        }
        IrredLabel::DihRot(a) if a.modulus() != n => arg("label modulus differs from n"),
        IrredLabel::DihSign if odd => Ok(IrredLabel::DihInv),
        IrredLabel::DihInv if odd => Ok(IrredLabel::DihSign),
        other => Ok(other),
    }
}
