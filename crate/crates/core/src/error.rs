use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinates ({0},{1},{2}) do not sum to zero")]
    OffLattice(i64, i64, i64),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is not antidominant")]
    NotAntidominant(Weight),
    #[error("level*lambda + rho is singular for lambda = {0}")]
    NotRegular(Weight),
    #[error("level must be odd and greater than 3, got {0}")]
    InvalidLevel(i64),
    #[error("characteristic must be 0 or a prime greater than 3, got {0}")]
    InvalidCharacteristic(u64),
    #[error("operation needs characteristic zero")]
    NeedsCharacteristicZero,
    #[error("twist parameter must be nonnegative, got {0}")]
    NegativeTwist(i64),
    #[error("affine elements live at different levels ({0} and {1})")]
    LevelMismatch(i64, i64),
    #[error("label does not match orbit: {0}")]
    LabelMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
