use thiserror::Error;

use crate::algebra::Insertion;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which library layer raised an error. Carried into CLI error documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    Algebra,
    Correlator,
    Hilbert,
    Fock,
    Amplitude,
    Cli,
}

impl Module {
    pub fn name(self) -> &'static str {
        match self {
            Module::Algebra => "algebra",
            Module::Correlator => "correlator",
            Module::Hilbert => "hilbert",
            Module::Fock => "fock",
            Module::Amplitude => "amplitude",
            Module::Cli => "cli",
        }
    }
}

impl std::fmt::Display for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{module}: {message}")]
    Domain { module: Module, message: String },

    /// Two insertions that would be contracted sit at the same point.
    #[error("{module}: pole between {first} and {second}")]
    Pole {
        module: Module,
        first: Box<Insertion>,
        second: Box<Insertion>,
    },

    #[error("amplitude: invalid disc configuration: {0}")]
    Configuration(String),

    #[error("{module}: {requested} items exceeds resource limit {limit}")]
    ResourceLimit {
        module: Module,
        requested: u128,
        limit: u128,
    },

    #[error("hilbert: matrix is not Hermitian (defect {defect:e} > tolerance {tolerance:e})")]
    NotHermitian { defect: f64, tolerance: f64 },

    #[error("cli: {0}")]
    Schema(String),
}

impl Error {
    pub(crate) fn domain(module: Module, message: impl Into<String>) -> Self {
        Error::Domain {
            module,
            message: message.into(),
        }
    }

    pub fn module(&self) -> Module {
        match self {
            Error::Domain { module, .. } | Error::Pole { module, .. } | Error::ResourceLimit { module, .. } => *module,
            Error::Configuration(_) => Module::Amplitude,
            Error::NotHermitian { .. } => Module::Hilbert,
            Error::Schema(_) => Module::Cli,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Pole { .. } => "pole",
            Error::Configuration(_) => "configuration",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::NotHermitian { .. } => "not_hermitian",
            Error::Schema(_) => "schema",
        }
    }
}
