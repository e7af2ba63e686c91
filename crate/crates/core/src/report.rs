//! Failure records shared by every verifier.

use crate::exactnum::Vector;

/// One violated identity at a specific tuple of basis indices, with both
/// sides evaluated in coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Failure {
    pub fn new(condition: &str, indices: Vec<usize>, lhs: Vector, rhs: Vector) -> Self {
        Failure {
            condition: condition.to_string(),
            indices,
            lhs,
            rhs,
        }
    }
}

/// Pushes a failure when `lhs != rhs`; returns whether they agreed.
pub(crate) fn check_eq(
    failures: &mut Vec<Failure>,
    condition: &str,
    indices: &[usize],
    lhs: Vector,
    rhs: Vector,
) -> bool {
    if lhs == rhs {
        true
    } else {
        failures.push(Failure::new(condition, indices.to_vec(), lhs, rhs));
        false
    }
}
