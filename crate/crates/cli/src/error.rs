use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] lonely_core::Error),
}

impl CliError {
    /// 2 for exhausted resource limits, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(lonely_core::Error::ResourceLimit { .. }) => 2,
            _ => 1,
        }
    }
}
