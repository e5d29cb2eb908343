use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrime(u64),

    #[error("group rank m must be at least 1")]
    RankZero,

    #[error("group order {order} exceeds the dense-set cap {cap}")]
    OrderTooLarge { order: u128, cap: u64 },

    #[error("subgroup rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: u32, max: u32 },

    #[error("subgroup already spans the whole group; it has no proper complement")]
    NoComplementNeeded,

    #[error(
        "p = 2 is unsupported by the validity machinery: with p = 2 the rank-1 condition \
         reduces to forbidding repeated elements, and every such multiset fills the subgroup \
         it generates"
    )]
    EvenPrimeUnsupported,

    #[error("k = {k} outside 0..={max}")]
    KOutOfRange { k: u64, max: u64 },

    #[error("{count} submultisets exceed the brute-force cap {cap}")]
    TooManySubmultisets { count: u128, cap: u64 },

    #[error("multiset contains the identity element")]
    ZeroInMultiset,

    #[error("multiset elements span more than one line")]
    NotOnOneLine,

    #[error("partition has no parts")]
    EmptyPartition,

    #[error("multiset is not valid")]
    InvalidMultiset,

    #[error("|A| = {n} outside {lo}..={hi}")]
    SizeOutOfRange { n: u64, lo: u64, hi: u64 },

    #[error("j = {j} violates the pair-count inequality 2j <= {pair_sum}")]
    JOutOfRange { j: u64, pair_sum: u64 },

    #[error("target element must be nonzero")]
    ZeroTarget,

    #[error(
        "automorphism tables too large: |GL| = {size} over order {order} exceeds the \
         table budget"
    )]
    AutomorphismGroupTooLarge { size: u128, order: u32 },

    #[error(
        "estimated {estimate} orbits at n = {n} exceed the budget {budget}; \
         pass the override to force the scan"
    )]
    BudgetExceeded { n: u64, estimate: u128, budget: u64 },

    #[error("shard id {shard_id} out of range for {shards} shards")]
    ShardOutOfRange { shard_id: u64, shards: u64 },

    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),

    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },

    #[error("element has {got} coordinates; the group rank is {expected}")]
    DimensionMismatch { got: usize, expected: u32 },

    #[error("scan interrupted")]
    Interrupted,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
