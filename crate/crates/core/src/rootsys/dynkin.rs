//! Dynkin diagram data for the irreducible crystallographic types.
//!
//! Diagrams are stored in Bourbaki numbering and relabelled on demand.
//! Squared lengths are normalised so that short simple roots have norm 2 and
//! long simple roots have norm `2r`.

use super::{CartanType, Labeling};
use crate::error::{Error, Result};

/// Checks that `(kind, rank)` names an irreducible system we construct.
pub(crate) fn validate(kind: CartanType, rank: usize) -> Result<()> {
    use CartanType::*;
    let ok = match kind {
        A => rank >= 1,
        B | C => rank >= 2,
        D => rank >= 3,
        E => (6..=8).contains(&rank),
        F => rank == 4,
        G => rank == 2,
    };
    if ok {
        return Ok(());
    }
    let reason = match kind {
        A => "type A needs rank >= 1",
        B | C => "types B and C need rank >= 2",
        D => "type D needs rank >= 3",
        E => "type E exists only in ranks 6, 7, 8",
        F => "type F exists only in rank 4",
        G => "type G exists only in rank 2",
    };
    Err(Error::InvalidSystem {
        kind,
        rank,
        reason: reason.to_string(),
    })
}

/// Ratio of squared lengths long/short.
pub(crate) fn length_ratio(kind: CartanType) -> i32 {
    match kind {
        CartanType::B | CartanType::C | CartanType::F => 2,
        CartanType::G => 3,
        _ => 1,
    }
}

/// Edges (0-based, Bourbaki numbering) and simple-root norms.
fn bourbaki_diagram(kind: CartanType, rank: usize) -> (Vec<(usize, usize)>, Vec<i32>) {
    use CartanType::*;
    let r = length_ratio(kind);
    let long = 2 * r;
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match kind {
        A => (chain(rank), vec![2; rank]),
        B => {
            let mut norms = vec![long; rank];
            norms[rank - 1] = 2;
            (chain(rank), norms)
        }
        C => {
            let mut norms = vec![2; rank];
            norms[rank - 1] = long;
            (chain(rank), norms)
        }
        D => {
            let mut edges = chain(rank - 1);
            edges.push((rank - 3, rank - 1));
            (edges, vec![2; rank])
        }
        E => {
            // 1-3-4-5-...-n with 2 hanging off 4
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..rank - 1).map(|i| (i, i + 1)));
            (edges, vec![2; rank])
        }
        F => (chain(4), vec![long, long, 2, 2]),
        G => (chain(2), vec![2, long]),
    }
}

/// Position (0-based, Bourbaki) of each simple root in the given labeling.
///
/// `perm[i]` is the Bourbaki index of the root labelled `i` in `labeling`.
pub fn to_bourbaki(kind: CartanType, rank: usize, labeling: Labeling) -> Vec<usize> {
    use CartanType::*;
    if labeling == Labeling::Bourbaki {
        return (0..rank).collect();
    }
    // 1-based tables; the Vinberg-Onishchik E_n diagram is the chain
    // 1..n-1 with node n attached to node n-3.
    let one_based: Vec<usize> = match (kind, rank) {
        (E, 6) => vec![1, 3, 4, 5, 6, 2],
        (E, 7) => vec![7, 6, 5, 4, 3, 1, 2],
        (E, 8) => vec![8, 7, 6, 5, 4, 3, 1, 2],
        (F, 4) => vec![4, 3, 2, 1],
        _ => (1..=rank).collect(),
    };
    one_based.into_iter().map(|i| i - 1).collect()
}

/// Inverse of [`to_bourbaki`]: `perm[b]` is the label in `labeling` of the
/// Bourbaki root `b`.
pub fn from_bourbaki(kind: CartanType, rank: usize, labeling: Labeling) -> Vec<usize> {
    let forward = to_bourbaki(kind, rank, labeling);
    let mut inv = vec![0; rank];
    for (label, &b) in forward.iter().enumerate() {
        inv[b] = label;
    }
    inv
}

/// Symmetrised Gram matrix `(α_i, α_j)` of the simple roots in `labeling`.
pub(crate) fn gram_matrix(kind: CartanType, rank: usize, labeling: Labeling) -> Vec<Vec<i32>> {
    let (edges, norms) = bourbaki_diagram(kind, rank);
    let relabel = from_bourbaki(kind, rank, labeling);
    let mut gram = vec![vec![0; rank]; rank];
    for b in 0..rank {
        let i = relabel[b];
        gram[i][i] = norms[b];
    }
    for &(a, b) in &edges {
        let (i, j) = (relabel[a], relabel[b]);
        let entry = -norms[a].max(norms[b]) / 2;
        gram[i][j] = entry;
        gram[j][i] = entry;
    }
    gram
}
