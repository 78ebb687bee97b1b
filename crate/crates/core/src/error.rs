use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Domain errors raised by the arithmetic, sequence, solver and verifier layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two quadratic integers with different radicands were combined.
    RingMismatch,
    /// A square root of a negative integer was requested.
    NegativeRadicand,
    /// A radicand that is not a positive non-square.
    InvalidRadicand,
    /// A quadratic irrational with denominator zero.
    ZeroDenominator,
    /// The discriminant is non-positive or a perfect square.
    DegenerateDiscriminant,
    /// The integer is congruent to 2 or 3 modulo 4.
    NotADiscriminant,
    /// The leading coefficient of a quadratic form is zero.
    ZeroLeadingCoefficient,
    /// The right-hand side `m` of `F(x, y) = m` is zero.
    DegenerateRightHandSide,
    /// The index lies below the first index a formula is stated for.
    UndefinedIndex,
    /// A sequence or balancer symbol outside the known vocabulary.
    UnknownSequence,
    /// The sequence has no Binet-type closed form.
    NoClosedForm,
    /// The sequence is a witness sequence without its own membership test.
    NoMembershipCriterion,
    /// The candidate does not belong to the sequence a balancer was asked for.
    NotMember,
    /// `-2n - 1 + root` was odd. Unreachable for genuine members.
    ParityViolation,
    /// A negative value was passed where a non-negative one is required.
    NegativeInput,
    /// The identity id is not in the catalog.
    NoSuchIdentity,
    /// A count or index bound was zero.
    ArgumentsNotPositive,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::RingMismatch => "ring mismatch",
            Error::NegativeRadicand => "negative radicand",
            Error::InvalidRadicand => "radicand must be a positive non-square",
            Error::ZeroDenominator => "zero denominator",
            Error::DegenerateDiscriminant => "degenerate discriminant",
            Error::NotADiscriminant => "not a discriminant",
            Error::ZeroLeadingCoefficient => "leading coefficient is zero",
            Error::DegenerateRightHandSide => "degenerate right-hand side",
            Error::UndefinedIndex => "undefined index",
            Error::UnknownSequence => "unknown sequence",
            Error::NoClosedForm => "no closed form",
            Error::NoMembershipCriterion => "no membership criterion",
            Error::NotMember => "not a member",
            Error::ParityViolation => "parity violation",
            Error::NegativeInput => "negative input",
            Error::NoSuchIdentity => "no such identity",
            Error::ArgumentsNotPositive => "arguments positive",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Error {}
