//! Vertex pairings (terminal pairs).

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("vertex {0} appears in more than one pair")]
    DuplicateEndpoint(Vertex),
    #[error("pair ({0}, {0}) joins a vertex to itself")]
    Degenerate(Vertex),
    #[error("vertex {id} out of range for graph on {n} vertices")]
    OutOfRange { id: Vertex, n: usize },
    #[error("a perfect pairing needs an even vertex count, got {0}")]
    OddVertexCount(usize),
}

/// Disjoint terminal pairs, ordered by smaller endpoint. The orientation of
/// each pair is kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Pairing {
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, PairingError> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        let mut seen = HashSet::with_capacity(2 * pairs.len());
        for &(x, y) in &pairs {
            if x == y {
                return Err(PairingError::Degenerate(x));
            }
            for v in [x, y] {
                if !seen.insert(v) {
                    return Err(PairingError::DuplicateEndpoint(v));
                }
            }
        }
        pairs.sort_by_key(|&(x, y)| x.min(y));
        Ok(Pairing { pairs })
    }

    /// Uniform random perfect pairing of `0..n`.
    ///
    /// The ids `0..n` are shuffled with ChaCha8 seeded by `seed`
    /// (`rand_chacha::ChaCha8Rng::seed_from_u64`) and consecutive entries
    /// of the shuffled list are paired.
    pub fn random_perfect(n: usize, seed: u64) -> Result<Self, PairingError> {
        if n % 2 == 1 {
            return Err(PairingError::OddVertexCount(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<Vertex> = (0..n).collect();
        ids.shuffle(&mut rng);
        Pairing::new(ids.chunks_exact(2).map(|c| (c[0], c[1])))
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks every endpoint against a vertex count.
    pub fn check_range(&self, n: usize) -> Result<(), PairingError> {
        match self
            .pairs
            .iter()
            .flat_map(|&(x, y)| [x, y])
            .find(|&v| v >= n)
        {
            Some(id) => Err(PairingError::OutOfRange { id, n }),
            None => Ok(()),
        }
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.pairs.len() == n
    }
}

/// `{"pairs": [[x, y], ...]}`, with the generating seed when there is one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairingDocument {
    pub pairs: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl PairingDocument {
    pub fn new(p: &Pairing, seed: Option<u64>) -> Self {
        PairingDocument {
            pairs: p.pairs().iter().map(|&(x, y)| [x, y]).collect(),
            seed,
        }
    }

    pub fn to_pairing(&self) -> Result<Pairing, PairingError> {
        Pairing::new(self.pairs.iter().map(|p| (p[0], p[1])))
    }
}
