use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Cartan index out of range: ({i}, {j})")]
    IndexOutOfRange { i: usize, j: usize },

    #[error("string coordinates ({p},{q},{r}) out of range for shape ({m},{n})")]
    CoordsOutOfRange { m: u32, n: u32, p: u32, q: u32, r: u32 },

    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error("word {0} is not a valid G2 tableau")]
    InvalidTableau(String),

    #[error("invalid parameter {0}")]
    InvalidParam(String),

    #[error("tableau {0} does not belong to the level-{1} crystal")]
    NotInCrystal(String, u32),

    #[error("construction fault at level {level}: {detail}")]
    ConstructionFault { level: u32, detail: String },

    #[error("signature contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
