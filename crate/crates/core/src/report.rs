use alloc::string::String;
use alloc::vec::Vec;

/// Identities of the transform theory that the verifiers know how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityTag {
    /// Forward linearity.
    Linearity,
    /// Inverse linearity.
    InverseLinearity,
    /// `F{f(x−c)}` against its sign variants.
    Shift,
    /// `F{f(ax)} = a^{−α} F(ω/a)`.
    Scaling,
    /// Frequency shift, with and without the `h₀` factor.
    Modulation,
    /// `F{f^{(α)}}` against `±s F{f}`.
    Derivative,
    /// `F{f₁ * f₂} = F{f₁} F{f₂}`.
    Convolution,
    Commutativity,
    Distributivity,
    /// Injectivity of the closed-form transform.
    Uniqueness,
    Parseval,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 11] = [
        Self::Linearity,
        Self::InverseLinearity,
        Self::Shift,
        Self::Scaling,
        Self::Modulation,
        Self::Derivative,
        Self::Convolution,
        Self::Commutativity,
        Self::Distributivity,
        Self::Uniqueness,
        Self::Parseval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Linearity => "linearity",
            Self::InverseLinearity => "inverse_linearity",
            Self::Shift => "shift",
            Self::Scaling => "scaling",
            Self::Modulation => "modulation",
            Self::Derivative => "derivative",
            Self::Convolution => "convolution",
            Self::Commutativity => "commutativity",
            Self::Distributivity => "distributivity",
            Self::Uniqueness => "uniqueness",
            Self::Parseval => "parseval",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// Discrepancy of one sign/normalization variant of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct VariantResult {
    pub name: String,
    pub discrepancy: f64,
}

/// Outcome of one identity check. `pass` holds iff the discrepancy of the
/// adopted variant is within `tolerance`; reports with `asserted == false`
/// are informational and never count as failures.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity: IdentityTag,
    pub lhs_norm: f64,
    pub rhs_norm: f64,
    pub max_abs_discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub asserted: bool,
    /// Name of the variant that holds (or the adopted one if none does).
    pub variant: String,
    pub variants: Vec<VariantResult>,
}

impl VerificationReport {
    pub fn new(
        identity: IdentityTag,
        lhs_norm: f64,
        rhs_norm: f64,
        discrepancy: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            identity,
            lhs_norm,
            rhs_norm,
            max_abs_discrepancy: discrepancy,
            tolerance,
            pass: discrepancy <= tolerance,
            asserted: true,
            variant: String::from("standard"),
            variants: Vec::new(),
        }
    }

    /// Build from several variants; `adopted` names the one whose
    /// discrepancy decides `pass`. `variant` records the first variant that
    /// holds, if any.
    pub fn from_variants(
        identity: IdentityTag,
        lhs_norm: f64,
        rhs_norm: f64,
        variants: Vec<VariantResult>,
        adopted: &str,
        tolerance: f64,
    ) -> Self {
        let disc = variants
            .iter()
            .find(|v| v.name == adopted)
            .map(|v| v.discrepancy)
            .unwrap_or(f64::INFINITY);
        let holding = variants
            .iter()
            .find(|v| v.discrepancy <= tolerance)
            .map(|v| v.name.clone())
            .unwrap_or_else(|| String::from(adopted));
        Self {
            identity,
            lhs_norm,
            rhs_norm,
            max_abs_discrepancy: disc,
            tolerance,
            pass: disc <= tolerance,
            asserted: true,
            variant: holding,
            variants,
        }
    }

    pub fn reported_only(mut self) -> Self {
        self.asserted = false;
        self
    }

    /// True unless this is an asserted check that failed.
    pub fn ok(&self) -> bool {
        self.pass || !self.asserted
    }
}
