use thiserror::Error;

/// Evaluation settings shared by the subcommands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalConfig {
    pub digits: u32,
    pub fuel: u32,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("digits must be at least 1")]
    Digits,
    #[error("fuel must be at least 1")]
    Fuel,
}

impl EvalConfig {
    pub const DEFAULT_FUEL: u32 = 64;

    pub fn new(digits: u32, fuel: u32, seed: u64) -> Result<Self, ConfigError> {
        if digits == 0 {
            return Err(ConfigError::Digits);
        }
        if fuel == 0 {
            return Err(ConfigError::Fuel);
        }
        Ok(EvalConfig { digits, fuel, seed })
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { digits: 20, fuel: Self::DEFAULT_FUEL, seed: 0 }
    }
}
