use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::rng::SeededRng;
use crate::graph::{build_pc_lists, PcDigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `arc_count` distinct random pairs, then each complement bit set with
    /// probability `complement_prob`.
    Random,
    /// `1 -> 2 -> ... -> n`, uncomplemented.
    Path,
    /// `1 -> k` for every `k > 1`, uncomplemented.
    Star,
    /// Every vertex complemented with an empty list: the complete digraph.
    CompleteComplement,
    /// Every vertex complemented, non-arcs `2i-1 <-> 2i`.
    MatchingComplement,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::Random,
        GeneratorKind::Path,
        GeneratorKind::Star,
        GeneratorKind::CompleteComplement,
        GeneratorKind::MatchingComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Random => "random",
            GeneratorKind::Path => "path",
            GeneratorKind::Star => "star",
            GeneratorKind::CompleteComplement => "complete-complement",
            GeneratorKind::MatchingComplement => "matching-complement",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown generator kind `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GenerateError {
    #[error("n must be >= 1")]
    NoVertices,
    #[error("{arc_count} arcs requested but at most {max} fit on {n} vertices")]
    TooManyArcs { arc_count: u64, max: u64, n: u32 },
    #[error("a perfect matching needs even n, got {0}")]
    OddMatching(u32),
    #[error("complement probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// Parameters of a reproducible instance. `arc_count`, `complement_prob` and
/// `seed` only affect [`GeneratorKind::Random`].
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: u32,
    pub arc_count: u64,
    pub complement_prob: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: u32) -> Self {
        GeneratorSpec {
            kind,
            n,
            arc_count: 0,
            complement_prob: 0.0,
            seed: 0,
        }
    }

    pub fn random(n: u32, arc_count: u64, complement_prob: f64, seed: u64) -> Self {
        GeneratorSpec {
            kind: GeneratorKind::Random,
            n,
            arc_count,
            complement_prob,
            seed,
        }
    }

    /// One randomized oracle trial drawn from `rng`: `n` uniform in
    /// `1..=max_n`, arc count uniform in `0..=n(n-1)/2`.
    pub fn trial(rng: &mut SeededRng, max_n: u32, complement_prob: f64) -> Self {
        let n = 1 + rng.below(max_n as u64) as u32;
        let half = n as u64 * (n as u64 - 1) / 2;
        let arcs = rng.below(half + 1);
        GeneratorSpec::random(n, arcs, complement_prob, rng.next_u64())
    }

    /// Benchmark families: random instances use `m̃ = 4n` (capped at
    /// `n(n-1)`) with complement probability 1/2.
    pub fn bench(kind: GeneratorKind, n: u32, seed: u64) -> Self {
        match kind {
            GeneratorKind::Random => {
                let cap = n as u64 * (n as u64).saturating_sub(1);
                GeneratorSpec::random(n, (4 * n as u64).min(cap), 0.5, seed)
            }
            _ => GeneratorSpec::new(kind, n),
        }
    }
}

/// Builds the instance described by `spec`. Identical specs give identical
/// graphs.
pub fn generate(spec: &GeneratorSpec) -> Result<PcDigraph, GenerateError> {
    let n = spec.n;
    if n == 0 {
        return Err(GenerateError::NoVertices);
    }
    let (entries, complemented) = match spec.kind {
        GeneratorKind::Random => random_pairs(spec)?,
        GeneratorKind::Path => (
            (1..n).map(|v| (v, v + 1)).collect(),
            vec![false; n as usize],
        ),
        GeneratorKind::Star => ((2..=n).map(|w| (1, w)).collect(), vec![false; n as usize]),
        GeneratorKind::CompleteComplement => (Vec::new(), vec![true; n as usize]),
        GeneratorKind::MatchingComplement => {
            if n % 2 == 1 {
                return Err(GenerateError::OddMatching(n));
            }
            let pairs = (1..=n)
                .step_by(2)
                .flat_map(|a| [(a, a + 1), (a + 1, a)])
                .collect();
            (pairs, vec![true; n as usize])
        }
    };
    Ok(build_pc_lists(n, &entries, &complemented).expect("generated entries are valid"))
}

/// Entry pairs and complement flags.
type Parts = (Vec<(u32, u32)>, Vec<bool>);

fn random_pairs(spec: &GeneratorSpec) -> Result<Parts, GenerateError> {
    let n = spec.n;
    let max = n as u64 * (n as u64 - 1);
    if spec.arc_count > max {
        return Err(GenerateError::TooManyArcs {
            arc_count: spec.arc_count,
            max,
            n,
        });
    }
    if !(0.0..=1.0).contains(&spec.complement_prob) {
        return Err(GenerateError::BadProbability(spec.complement_prob));
    }
    let mut rng = SeededRng::new(spec.seed);
    let mut seen = HashSet::with_capacity(spec.arc_count as usize);
    let mut pairs = Vec::with_capacity(spec.arc_count as usize);
    while (pairs.len() as u64) < spec.arc_count {
        let v = 1 + rng.below(n as u64) as u32;
        let w = 1 + rng.below(n as u64) as u32;
        if v != w && seen.insert((v, w)) {
            pairs.push((v, w));
        }
    }
    let flags = (0..n).map(|_| rng.chance(spec.complement_prob)).collect();
    Ok((pairs, flags))
}
