use alloc::string::String;

use crate::orthrep::Family;

/// Which proposition rules out a representation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EliminationRule {
    /// An element fixes a 2-sphere pointwise while acting freely on the knot.
    FixedSphereFreeOnKnot,
    /// Cyclic case of the above: `rho^{n/2}` reflects across a 2-sphere although
    /// the cyclic group acts freely on the knot.
    CyclicSphereReflection,
    /// A reflection fixes a 2-sphere, so the axis of `rho^2` links the knot once
    /// and the rotation parameter must be 1.
    UnitAxisLinking,
    /// The axis of the rotation part would have to link the knot in a way no
    /// knot admits (the `v_a + v_sign + v_sign`, `<a> = <2>` family).
    AxisLinking,
    /// Fixed loci fail to nest: some element fixes less of the sphere than of the knot.
    FixedLociNesting,
}

impl EliminationRule {
    /// Short tag used in error messages and JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            EliminationRule::FixedSphereFreeOnKnot => "noS2",
            EliminationRule::CyclicSphereReflection => "noCycC",
            EliminationRule::UnitAxisLinking => "subtleAMustBe1Cases",
            EliminationRule::AxisLinking => "noD9",
            EliminationRule::FixedLociNesting => "fixedLociNested",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            EliminationRule::FixedSphereFreeOnKnot => {
                "an element fixes a 2-sphere but acts freely on the knot"
            }
            EliminationRule::CyclicSphereReflection => {
                "rho^(n/2) fixes a 2-sphere but the group acts freely on the knot"
            }
            EliminationRule::UnitAxisLinking => {
                "a reflection fixes a 2-sphere, forcing the rotation axis to link the knot once (a = 1)"
            }
            EliminationRule::AxisLinking => {
                "the rotation axis cannot link the knot as the representation requires"
            }
            EliminationRule::FixedLociNesting => {
                "fixed set on the knot is not contained in a fixed set of matching dimension"
            }
        }
    }
}

impl core::fmt::Display for EliminationRule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Prop. {} ({})", self.tag(), self.description())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inadmissible fixed-set pair (knot {fix_knot}, sphere {fix_sphere}): {rule}")]
    InadmissiblePair {
        fix_knot: i32,
        fix_sphere: i32,
        rule: EliminationRule,
    },
    #[error("{family} eliminated by {rule}")]
    NotAKnotAction { family: Family, rule: EliminationRule },
    #[error("classification error: {0}")]
    Classification(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("curve is not invariant under the action (deviation {deviation:e})")]
    Invariance { deviation: f64 },
    #[error("curve meets the axis {what} (distance {distance:e}); perturb the curve equivariantly")]
    Transversality { what: String, distance: f64 },
    #[error("curves too close: distance {distance:e}, need more than {required:e}")]
    Proximity { distance: f64, required: f64 },
    #[error("linking integral not resolved: residual {residual:.4} (use more samples)")]
    Resolution { residual: f64 },
    #[error("map does not have order {n}: deviation {deviation:e}")]
    Order { n: u64, deviation: f64 },
    #[error("rotation number {measured} is not 1/{n} mod 1; regenerate with a different power")]
    Convention { n: u64, measured: f64 },
    #[error("group relations fail: {0}")]
    GroupRelation(String),
    #[error("no realization found within search bound {bound}")]
    SearchExhausted { bound: u64 },
    #[error("construction failed: {0}")]
    Construction(String),
}

/// Coarse grouping of errors, used by front ends to choose exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Argument,
    Classification,
    Numeric,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Argument(_)
            | Error::Parse(_)
            | Error::Precondition(_)
            | Error::GroupRelation(_)
            | Error::Convention { .. }
            | Error::Order { .. } => ErrorCategory::Argument,
            Error::InadmissiblePair { .. }
            | Error::NotAKnotAction { .. }
            | Error::Classification(_)
            | Error::Construction(_) => ErrorCategory::Classification,
            Error::Invariance { .. }
            | Error::Transversality { .. }
            | Error::Proximity { .. }
            | Error::Resolution { .. }
            | Error::SearchExhausted { .. } => ErrorCategory::Numeric,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Argument(_) => "argument",
            Error::Parse(_) => "parse",
            Error::InadmissiblePair { .. } => "inadmissible_pair",
            Error::NotAKnotAction { .. } => "not_a_knot_action",
            Error::Classification(_) => "classification",
            Error::Precondition(_) => "precondition",
            Error::Invariance { .. } => "invariance",
            Error::Transversality { .. } => "transversality",
            Error::Proximity { .. } => "proximity",
            Error::Resolution { .. } => "resolution",
            Error::Order { .. } => "order",
            Error::Convention { .. } => "convention",
            Error::GroupRelation(_) => "group_relation",
            Error::SearchExhausted { .. } => "search_exhausted",
            Error::Construction(_) => "construction",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
