//! Exhaustive enumeration of delta-matroids on small ground sets.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{satisfies_exchange, validate, DeltaMatroid, Subset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Permit `n > 4`.
    pub allow_large: bool,
    /// Also run the polytope test on families the exchange filter rejects,
    /// and fail if the two disagree.
    pub cross_check: bool,
}

/// Every delta-matroid on `[n]`, ordered by the bitmask of its family.
///
/// Families rejected by the exchange axiom are dropped without the LP edge
/// test unless `cross_check` is set; accepted families are always confirmed
/// by the edge test.
pub fn enumerate_all(n: usize, opts: EnumerateOptions) -> Result<impl Iterator<Item = Result<DeltaMatroid>>> {
    if n == 0 {
        return Err(Error::invalid("ground size must be positive"));
    }
    if n > 4 && !opts.allow_large {
        return Err(Error::invalid(format!(
            "enumeration at n = {n} needs the allow_large override"
        )));
    }
    if n > 5 {
        return Err(Error::Resource(format!("2^{} families at n = {n}", 1u64 << n)));
    }
    let points = 1usize << n;
    let total: u64 = 1u64 << points;
    Ok((1..total).filter_map(move |code| {
        let family: Vec<Subset> = (0..points as Subset).filter(|&s| code & (1 << s) != 0).collect();
        let exchange = satisfies_exchange(&family);
        if !exchange && !opts.cross_check {
            return None;
        }
        let edges = match validate(n, &family) {
            Ok(v) => v.valid,
            Err(e) => return Some(Err(e)),
        };
        if opts.cross_check && exchange != edges {
            return Some(Err(Error::consistency(format!(
                "exchange axiom and edge test disagree on family {family:?}"
            ))));
        }
        edges.then(|| Ok(DeltaMatroid::new_unchecked(n, &family)))
    }))
}

/// `count` distinct delta-matroids on `[n]` drawn uniformly with a seeded
/// generator (all of them if there are fewer).
pub fn sample_random(n: usize, count: usize, seed: u64) -> Result<Vec<DeltaMatroid>> {
    let all: Vec<DeltaMatroid> =
        enumerate_all(n, EnumerateOptions::default())?.collect::<Result<Vec<_>>>()?;
    if count >= all.len() {
        return Ok(all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks: Vec<usize> = sample(&mut rng, all.len(), count).into_vec();
    picks.sort_unstable();
    Ok(picks.into_iter().map(|i| all[i].clone()).collect())
}
