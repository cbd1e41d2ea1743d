//! Brute-force reference implementations.
//!
//! Everything here recomputes from the Cartan matrix and the list of
//! positive roots only, so agreement with `mics-core` is independent
//! evidence. None of it is fast.

use std::collections::{HashMap, HashSet, VecDeque};

use mics_core::{Error, Result, RootId, RootSet, RootSystem, WeylWord};

/// Upper rank for [`subset_abelian_ideal_enumeration`].
pub const MAX_SUBSET_RANK: usize = 6;
/// Upper family size for [`exhaustive_mics_minimality`].
pub const MAX_FAMILY: usize = 20;
/// Upper bound on minimal words collected by the BFS.
pub const MAX_PATHS: usize = 200_000;

fn reflect(rs: &RootSystem, v: &[i32], i: usize) -> Vec<i32> {
    let c: i32 = v.iter().enumerate().map(|(j, &x)| x * rs.cartan()[j][i]).sum();
    let mut out = v.to_vec();
    out[i] -= c;
    out
}

/// Applies a word, rightmost letter first.
fn act(rs: &RootSystem, letters: &[usize], v: &[i32]) -> Vec<i32> {
    letters.iter().rev().fold(v.to_vec(), |acc, &i| reflect(rs, &acc, i))
}

fn images(rs: &RootSystem, letters: &[usize]) -> Vec<Vec<i32>> {
    (0..rs.rank())
        .map(|i| {
            let mut e = vec![0; rs.rank()];
            e[i] = 1;
            act(rs, letters, &e)
        })
        .collect()
}

fn negative(v: &[i32]) -> bool {
    v.iter().all(|&c| c <= 0)
}

/// Inversion set by applying the word to every positive root.
pub fn inversions(rs: &RootSystem, w: &WeylWord) -> RootSet {
    RootSet::from_ids(
        rs,
        rs.ids().filter(|&g| negative(&act(rs, w.letters(), rs.coeffs(g)))),
    )
}

/// Result of a breadth-first transporter search.
#[derive(Clone, Debug)]
pub struct BfsTransporter {
    pub length: usize,
    /// One minimal word, in written order.
    pub word: WeylWord,
    /// Number of distinct minimal words found.
    pub minimal_words: usize,
    /// All minimal words act identically.
    pub unique_element: bool,
}

/// Shortest walk from `γ` to `μ` in the graph on all roots whose edges are
/// simple reflections. Every shortest walk is read off as a word and the
/// resulting group elements are compared.
pub fn bfs_shortest_transporter(
    rs: &RootSystem,
    gamma: RootId,
    mu: RootId,
) -> Result<BfsTransporter> {
    let start = rs.coeffs(gamma).to_vec();
    let goal = rs.coeffs(mu).to_vec();
    let mut dist: HashMap<Vec<i32>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.clone(), 0);
    queue.push_back(start.clone());
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for i in 0..rs.rank() {
            let u = reflect(rs, &v, i);
            if !dist.contains_key(&u) {
                dist.insert(u.clone(), d + 1);
                queue.push_back(u);
            }
        }
    }
    let length = *dist.get(&goal).ok_or_else(|| {
        Error::Precondition(format!(
            "{} and {} lie in different W-orbits",
            rs.format_root(gamma),
            rs.format_root(mu)
        ))
    })?;

    // Walk back from the goal along strictly decreasing distance; the
    // letters come out in written order.
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<i32>, Vec<usize>)> = vec![(goal, Vec::new())];
    while let Some((v, suffix)) = stack.pop() {
        let d = dist[&v];
        if d == 0 {
            words.push(suffix);
            if words.len() >= MAX_PATHS {
                break;
            }
            continue;
        }
        for i in 0..rs.rank() {
            let u = reflect(rs, &v, i);
            if dist.get(&u) == Some(&(d - 1)) {
                let mut w = suffix.clone();
                w.push(i);
                stack.push((u, w));
            }
        }
    }
    let first = images(rs, &words[0]);
    let unique_element = words.iter().all(|w| images(rs, w) == first);
    let word = WeylWord::new(rs, words[0].clone())?;
    Ok(BfsTransporter {
        length,
        word,
        minimal_words: words.len(),
        unique_element,
    })
}

fn dominates(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// All abelian ideals, found as the upward closures of antichains of
/// `(Δ+, ⪰)` that pass the two defining conditions. Sorted like the core
/// enumeration.
pub fn subset_abelian_ideal_enumeration(rs: &RootSystem) -> Result<Vec<RootSet>> {
    if rs.rank() > MAX_SUBSET_RANK {
        return Err(Error::Precondition(format!(
            "subset oracle is limited to rank <= {MAX_SUBSET_RANK}"
        )));
    }
    let roots: Vec<Vec<i32>> = rs.ids().map(|g| rs.coeffs(g).to_vec()).collect();
    let index: HashMap<&[i32], usize> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (r.as_slice(), k))
        .collect();
    let n = roots.len();
    let comparable =
        |a: usize, b: usize| dominates(&roots[a], &roots[b]) || dominates(&roots[b], &roots[a]);

    let mut antichains: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((k, chosen)) = stack.pop() {
        if k == n {
            antichains.push(chosen);
            continue;
        }
        stack.push((k + 1, chosen.clone()));
        if chosen.iter().all(|&c| !comparable(c, k)) {
            let mut with = chosen;
            with.push(k);
            stack.push((k + 1, with));
        }
    }

    let add = |a: usize, b: usize| -> Option<usize> {
        let s: Vec<i32> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
        index.get(s.as_slice()).copied()
    };
    let mut out = Vec::new();
    for gens in antichains {
        let member: Vec<bool> = (0..n)
            .map(|k| gens.iter().any(|&g| dominates(&roots[k], &roots[g])))
            .collect();
        let closed = (0..n)
            .filter(|&a| member[a])
            .all(|a| (0..n).all(|b| add(a, b).is_none_or(|s| member[s])));
        let abelian = (0..n)
            .filter(|&a| member[a])
            .all(|a| (0..n).filter(|&b| member[b]).all(|b| add(a, b).is_none()));
        if closed && abelian {
            out.push(RootSet::from_ids(
                rs,
                (0..n).filter(|&k| member[k]).map(RootId),
            ));
        }
    }
    out.sort();
    Ok(out)
}

/// Literal minimality: the family covers `Δ+` and no proper subfamily
/// does.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExhaustiveMinimality {
    pub complete: bool,
    /// Every proper subfamily fails to cover.
    pub minimal: bool,
    /// Every subfamily with one member removed fails to cover.
    pub drop_one_minimal: bool,
}

pub fn exhaustive_mics_minimality(
    rs: &RootSystem,
    family: &[WeylWord],
) -> Result<ExhaustiveMinimality> {
    let k = family.len();
    if k > MAX_FAMILY {
        return Err(Error::Precondition(format!(
            "exhaustive check is limited to {MAX_FAMILY} members"
        )));
    }
    let sets: Vec<RootSet> = family.iter().map(|w| inversions(rs, w)).collect();
    let full = RootSet::full(rs);
    let union_of = |mask: u32| {
        (0..k)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(RootSet::empty(rs), |acc, i| acc.union(&sets[i]))
    };
    let all = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let complete = union_of(all) == full;
    let minimal = complete && (0..all).all(|mask| union_of(mask) != full);
    let drop_one_minimal = complete && (0..k).all(|i| union_of(all & !(1 << i)) != full);
    Ok(ExhaustiveMinimality {
        complete,
        minimal,
        drop_one_minimal,
    })
}

/// Full commutativity by exploring the commutation class of a reduced
/// word: the element is commutative iff no word in the class contains a
/// factor `s_a s_b s_a` with `a`, `b` adjacent. Returns `None` if the
/// class exceeds `cap` words.
pub fn fully_commutative(rs: &RootSystem, w: &WeylWord, cap: usize) -> Option<bool> {
    let adjacent = |a: usize, b: usize| a != b && rs.cartan()[a][b] != 0;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back(w.letters().to_vec());
    while let Some(word) = queue.pop_front() {
        if word
            .windows(3)
            .any(|t| t[0] == t[2] && adjacent(t[0], t[1]))
        {
            return Some(false);
        }
        for k in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[k], word[k + 1]);
            if a != b && !adjacent(a, b) {
                let mut next = word.clone();
                next.swap(k, k + 1);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Some(true)
}
