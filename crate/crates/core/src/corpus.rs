//! Seeded random Seifert rational homology spheres for regression sweeps.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::plumbing::{star_plumbing, PlumbingGraph};
use crate::SeifertInvariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    /// Upper bound on each `a_i`.
    pub max_multiplicity: i64,
    /// Upper bound on the number of exceptional fibers.
    pub max_fibers: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_multiplicity: 50,
            max_fibers: 5,
        }
    }
}

/// One normalized invariant with nonzero degree. `b` is drawn from
/// `[-n-1, 1]` so both signs of the degree occur.
pub fn random_seifert<R: Rng + ?Sized>(rng: &mut R, cfg: &CorpusConfig) -> SeifertInvariants {
    loop {
        let n = rng.gen_range(0..=cfg.max_fibers);
        let pairs: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(2..=cfg.max_multiplicity);
                loop {
                    let b = rng.gen_range(1..a);
                    if a.gcd(&b) == 1 {
                        break (a, b);
                    }
                }
            })
            .collect();
        let b = rng.gen_range(-(n as i64) - 1..=1);
        let si = SeifertInvariants::normalize(b, &pairs).expect("valid by construction");
        if si.is_rational_homology_sphere() {
            return si;
        }
    }
}

pub fn seifert_corpus(count: usize, seed: u64, cfg: &CorpusConfig) -> Vec<SeifertInvariants> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_seifert(&mut rng, cfg)).collect()
}

/// Star plumbings of corpus members, keeping those with at most
/// `max_vertices` vertices, until `count` are found.
pub fn graph_corpus(
    count: usize,
    seed: u64,
    cfg: &CorpusConfig,
    max_vertices: usize,
) -> Vec<(SeifertInvariants, PlumbingGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let si = random_seifert(&mut rng, cfg);
        let g = star_plumbing(&si).expect("corpus members are valid");
        if g.len() <= max_vertices {
            out.push((si, g));
        }
    }
    out
}
