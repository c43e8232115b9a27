use alloc::string::String;

use thiserror::Error;

/// A structural claim that did not hold, with a human readable witness.
///
/// Every verifier in this crate checks a statement that is a theorem for
/// valid input, so receiving one of these means either the input was not
/// what the caller promised or there is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{property}: {witness}")]
pub struct VerificationFailure {
    pub property: &'static str,
    pub witness: String,
}

impl VerificationFailure {
    pub fn new(property: &'static str, witness: impl Into<String>) -> Self {
        VerificationFailure {
            property,
            witness: witness.into(),
        }
    }
}

/// Returns early with a [`VerificationFailure`] when the condition is false.
macro_rules! ensure {
    ($cond:expr, $property:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::failure::VerificationFailure::new(
                $property,
                alloc::format!($($fmt)+),
            ));
        }
    };
}
pub(crate) use ensure;
