use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({a},{b},..) must satisfy 1 <= a < b")]
    EdgeOrder { a: u32, b: u32 },
    #[error("peg {peg} is outside the peg set [1,{n_pegs}]")]
    PegOutOfRange { peg: u32, n_pegs: u32 },
    #[error("heights are 1-based; found height 0 on peg {peg}")]
    ZeroHeight { peg: u32 },
    #[error("height {height} is used more than once on peg {peg}")]
    DuplicateHeight { peg: u32, height: u32 },
    #[error("heights on peg {peg} are not {{1..{count}}}: found height {height}")]
    HeightGap { peg: u32, count: u32, height: u32 },
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} too large: {size} candidates exceeds limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },
}

impl Error {
    /// True for enumeration-guard failures, as opposed to bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

/// Caps on the exhaustive enumerations. Every brute-force routine checks its
/// candidate count against one of these before starting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Product of `p_i!` over pegs when enumerating a world.
    pub world: u128,
    /// Number of candidate colour maps examined per diagram.
    pub colourings: u128,
    /// Number of candidate maps from a poset into a chain.
    pub poset_maps: u128,
    /// Longest word accepted by word reconstruction.
    pub word_len: usize,
    /// Largest `n` for the two-peg trace.
    pub two_peg_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            world: 10_000_000,
            colourings: 100_000_000,
            poset_maps: 100_000_000,
            word_len: 10,
            two_peg_n: 8,
        }
    }
}

impl Limits {
    pub const ENV_VAR: &'static str = "WEBWORLD_MAX_ENUM";

    /// Defaults, with the candidate-count limits replaced by
    /// `$WEBWORLD_MAX_ENUM` when it holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
            .filter(|&n| n > 0)
        {
            limits.world = n;
            limits.colourings = n;
            limits.poset_maps = n;
        }
        limits
    }

    pub(crate) fn check(what: &'static str, size: u128, limit: u128) -> crate::Result<()> {
        if size > limit {
            Err(Error::TooLarge { what, size, limit })
        } else {
            Ok(())
        }
    }
}
