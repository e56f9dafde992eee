//! Instance families shared by the criterion benches.

use pcdfs::oracle::{generate, GeneratorKind, GeneratorSpec};
use pcdfs::PcDigraph;

pub const SEED: u64 = 0x5eed;

/// The families whose step counts are expected to stay linear.
pub const FAMILIES: [GeneratorKind; 3] = [
    GeneratorKind::CompleteComplement,
    GeneratorKind::Random,
    GeneratorKind::Path,
];

/// Graphs of `kind` at `2^lo ..= 2^hi` vertices.
pub fn ladder(kind: GeneratorKind, lo: u32, hi: u32) -> Vec<PcDigraph> {
    (lo..=hi)
        .map(|e| generate(&GeneratorSpec::bench(kind, 1 << e, SEED)).expect("valid bench spec"))
        .collect()
}
