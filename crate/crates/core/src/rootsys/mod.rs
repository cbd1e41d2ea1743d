//! Irreducible crystallographic root systems with exact integer arithmetic.
//!
//! Roots are coefficient vectors over the simple roots. Positive roots are
//! generated from the Cartan matrix by root strings and stored in a fixed
//! order: ascending height, ties broken by lexicographic coefficient vector.
//! Everything else in the crate refers to positive roots through [`RootId`],
//! an index into that order.

mod dynkin;
mod set;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dynkin::{from_bourbaki, to_bourbaki};
pub use set::RootSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// Numbering convention for the simple roots.
///
/// `VinbergOnishchik` is the default. It differs from Bourbaki only for
/// E6, E7, E8 and F4; see [`to_bourbaki`] for the permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Labeling {
    #[default]
    #[serde(rename = "vo")]
    VinbergOnishchik,
    #[serde(rename = "bourbaki")]
    Bourbaki,
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Labeling::VinbergOnishchik => f.write_str("vo"),
            Labeling::Bourbaki => f.write_str("bourbaki"),
        }
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vo" | "vinberg-onishchik" => Ok(Labeling::VinbergOnishchik),
            "bourbaki" => Ok(Labeling::Bourbaki),
            _ => Err(Error::UnknownLabeling(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

/// Identity of a root system, carried by sets and words built over it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SystemId {
    pub kind: CartanType,
    pub rank: usize,
    pub labeling: Labeling,
    /// Set for the dual system built by [`RootSystem::dual`].
    pub dual: bool,
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)?;
        if self.dual {
            f.write_str("^dual")?;
        }
        Ok(())
    }
}

/// Index of a positive root in the system's root order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub usize);

/// A positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i32>,
    height: i32,
    length: LengthClass,
}

impl Root {
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn length_class(&self) -> LengthClass {
        self.length
    }
}

/// One connected component of the Dynkin diagram with a node removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    /// Simple root indices (0-based) in the component.
    pub simple: Vec<usize>,
    pub coxeter_number: i32,
    /// Cartan type of the component, e.g. `D5`.
    pub type_label: String,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    id: SystemId,
    /// `cartan[i][j] = <α_i, α_j^∨>`.
    cartan: Vec<Vec<i32>>,
    /// `gram[i][j] = (α_i, α_j)` with short simple roots of norm 2.
    gram: Vec<Vec<i32>>,
    r: i32,
    roots: Vec<Root>,
    lookup: HashMap<Vec<i32>, RootId>,
    highest: RootId,
    two_rho: Vec<i32>,
    rho_pairings: Vec<i32>,
    coxeter_number: i32,
    /// `sums[i * n + j]` is the positive root `γ_i + γ_j`, if any.
    sums: Vec<Option<RootId>>,
}

impl RootSystem {
    pub fn new(kind: CartanType, rank: usize, labeling: Labeling) -> Result<Self> {
        dynkin::validate(kind, rank)?;
        let gram = dynkin::gram_matrix(kind, rank, labeling);
        let id = SystemId {
            kind,
            rank,
            labeling,
            dual: false,
        };
        Ok(Self::from_gram(id, gram, dynkin::length_ratio(kind)))
    }

    /// Parses the labeling tag before building; convenience for front ends.
    pub fn parse(kind: &str, rank: usize, labeling: &str) -> Result<Self> {
        Self::new(kind.parse()?, rank, labeling.parse()?)
    }

    fn from_gram(id: SystemId, gram: Vec<Vec<i32>>, r: i32) -> Self {
        let n = gram.len();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let mut all: Vec<Vec<i32>> = Vec::new();
        let mut known: std::collections::HashSet<Vec<i32>> = Default::default();
        let mut layer: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        layer.sort();
        while !layer.is_empty() {
            known.extend(layer.iter().cloned());
            let mut next = std::collections::BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    // α_i-string through β: p - q = <β, α_i^∨>
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pair > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            all.append(&mut layer);
            layer = next.into_iter().collect();
        }

        let norm = |v: &[i32]| -> i32 {
            (0..n)
                .map(|i| (0..n).map(|j| v[i] * gram[i][j] * v[j]).sum::<i32>())
                .sum()
        };
        let long_norm = (0..n).map(|i| gram[i][i]).max().unwrap_or(2);
        let roots: Vec<Root> = all
            .into_iter()
            .map(|coeffs| {
                let height = coeffs.iter().sum();
                let length = if norm(&coeffs) == long_norm {
                    LengthClass::Long
                } else {
                    LengthClass::Short
                };
                Root {
                    coeffs,
                    height,
                    length,
                }
            })
            .collect();
        let lookup: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(k, root)| (root.coeffs.clone(), RootId(k)))
            .collect();
        let highest = RootId(roots.len() - 1);
        let mut two_rho = vec![0; n];
        for root in &roots {
            for (acc, c) in two_rho.iter_mut().zip(&root.coeffs) {
                *acc += c;
            }
        }
        let sums = roots
            .iter()
            .flat_map(|a| {
                roots.iter().map(|b| {
                    let s: Vec<i32> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                    lookup.get(&s).copied()
                })
            })
            .collect();

        let mut rs = RootSystem {
            id,
            cartan,
            gram,
            r,
            coxeter_number: roots[highest.0].height + 1,
            roots,
            lookup,
            highest,
            two_rho,
            rho_pairings: Vec::new(),
            sums,
        };
        rs.rho_pairings = (0..rs.roots.len())
            .map(|k| rs.compute_rho_pairing(RootId(k)))
            .collect();
        rs
    }

    /// The dual root system: same Weyl group, roots replaced by coroots.
    ///
    /// Simple root `i` of the dual is `α_i^∨`; short and long swap.
    pub fn dual(&self) -> RootSystem {
        let n = self.rank();
        let r = self.r;
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| r * 4 * self.gram[i][j] / (self.gram[i][i] * self.gram[j][j]))
                    .collect()
            })
            .collect();
        let kind = match self.id.kind {
            CartanType::B => CartanType::C,
            CartanType::C => CartanType::B,
            k => k,
        };
        let id = SystemId {
            kind,
            rank: n,
            labeling: self.id.labeling,
            dual: !self.id.dual,
        };
        RootSystem::from_gram(id, gram, r)
    }

    /// Coefficients of `γ^∨` over the simple coroots.
    pub fn coroot_coeffs(&self, gamma: RootId) -> Vec<i32> {
        let c = &self.roots[gamma.0].coeffs;
        let ng = self.norm(c);
        (0..self.rank())
            .map(|i| c[i] * self.gram[i][i] / ng)
            .collect()
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    pub fn kind(&self) -> CartanType {
        self.id.kind
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn labeling(&self) -> Labeling {
        self.id.labeling
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.id.kind, self.id.rank)
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i32>] {
        &self.gram
    }

    /// `r = ‖long‖² / ‖short‖²`.
    pub fn r_ratio(&self) -> i32 {
        self.r
    }

    pub fn is_simply_laced(&self) -> bool {
        self.r == 1
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.0]
    }

    pub fn coeffs(&self, id: RootId) -> &[i32] {
        &self.roots[id.0].coeffs
    }

    pub fn height(&self, id: RootId) -> i32 {
        self.roots[id.0].height
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = RootId> + ExactSizeIterator {
        (0..self.roots.len()).map(RootId)
    }

    pub fn highest_root(&self) -> RootId {
        self.highest
    }

    pub fn coxeter_number(&self) -> i32 {
        self.coxeter_number
    }

    /// `2ρ` as a coefficient vector.
    pub fn two_rho(&self) -> &[i32] {
        &self.two_rho
    }

    pub fn simple_root(&self, i: usize) -> Result<RootId> {
        if i >= self.rank() {
            return Err(Error::BadSimpleIndex {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(self.lookup[&unit(self.rank(), i)])
    }

    /// Index of the simple root `γ`, if it is simple.
    pub fn simple_index(&self, gamma: RootId) -> Option<usize> {
        let root = &self.roots[gamma.0];
        (root.height == 1).then(|| root.coeffs.iter().position(|&c| c == 1).unwrap())
    }

    pub fn simple_length(&self, i: usize) -> LengthClass {
        let long = self.long_norm();
        if self.gram[i][i] == long {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn find(&self, coeffs: &[i32]) -> Option<RootId> {
        self.lookup.get(coeffs).copied()
    }

    pub fn root_by_coeffs(&self, coeffs: &[i32]) -> Result<RootId> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        self.find(coeffs)
            .ok_or_else(|| Error::NotARoot(format_coeffs(coeffs)))
    }

    /// In simply-laced systems every root counts as both long and short.
    pub fn is_long(&self, id: RootId) -> bool {
        self.r == 1 || self.roots[id.0].length == LengthClass::Long
    }

    pub fn is_short(&self, id: RootId) -> bool {
        self.r == 1 || self.roots[id.0].length == LengthClass::Short
    }

    fn long_norm(&self) -> i32 {
        (0..self.rank()).map(|i| self.gram[i][i]).max().unwrap()
    }

    /// `(a, b)` for arbitrary coefficient vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn norm(&self, a: &[i32]) -> i32 {
        self.inner(a, a)
    }

    /// `<ν, μ^∨> = 2(ν, μ)/(μ, μ)` for coefficient vectors, `μ` a root.
    pub fn pair_vectors(&self, nu: &[i32], mu: &[i32]) -> Result<i32> {
        for v in [nu, mu] {
            if v.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    got: v.len(),
                });
            }
        }
        let nm = self.norm(mu);
        if nm == 0 {
            return Err(Error::Precondition("pairing against the zero vector".into()));
        }
        let num = 2 * self.inner(nu, mu);
        if num % nm != 0 {
            return Err(Error::NotARoot(format_coeffs(mu)));
        }
        Ok(num / nm)
    }

    /// `<ν, μ^∨>` for positive roots.
    pub fn pairing(&self, nu: RootId, mu: RootId) -> i32 {
        let (a, b) = (self.coeffs(nu), self.coeffs(mu));
        2 * self.inner(a, b) / self.norm(b)
    }

    /// `<v, α_i^∨>` for a coefficient vector and a simple index.
    pub fn simple_pairing(&self, v: &[i32], i: usize) -> i32 {
        v.iter().zip(&self.cartan).map(|(c, row)| c * row[i]).sum()
    }

    /// Cached `(ρ, γ^∨)`.
    pub fn rho_pairing(&self, gamma: RootId) -> i32 {
        self.rho_pairings[gamma.0]
    }

    fn compute_rho_pairing(&self, gamma: RootId) -> i32 {
        let root = &self.roots[gamma.0];
        if root.length == LengthClass::Long {
            // Σ_{long} c_α + (1/r) Σ_{short} c_α, kept integral as Σ c_α n_α / n_γ
            let long = self.long_norm();
            let scaled: i32 = root
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * self.gram[i][i])
                .sum();
            debug_assert_eq!(scaled % long, 0);
            scaled / long
        } else {
            self.inner(&self.two_rho, &root.coeffs) / self.norm(&root.coeffs)
        }
    }

    /// `γ ⪰ μ`.
    pub fn geq(&self, gamma: RootId, mu: RootId) -> bool {
        self.coeffs(gamma)
            .iter()
            .zip(self.coeffs(mu))
            .all(|(a, b)| a >= b)
    }

    /// Roots covered by `γ` in the root poset: `γ - α` for simple `α`.
    pub fn covers(&self, gamma: RootId) -> Vec<RootId> {
        let mut out: Vec<RootId> = (0..self.rank())
            .filter_map(|i| {
                let mut v = self.coeffs(gamma).to_vec();
                v[i] -= 1;
                self.find(&v)
            })
            .collect();
        out.sort();
        out
    }

    /// Roots covering `γ`: `γ + α` for simple `α`.
    pub fn covered_by(&self, gamma: RootId) -> Vec<RootId> {
        let mut out: Vec<RootId> = (0..self.rank())
            .filter_map(|i| {
                let mut v = self.coeffs(gamma).to_vec();
                v[i] += 1;
                self.find(&v)
            })
            .collect();
        out.sort();
        out
    }

    /// `γ + μ` if it is a (positive) root.
    pub fn sum(&self, gamma: RootId, mu: RootId) -> Option<RootId> {
        self.sums[gamma.0 * self.roots.len() + mu.0]
    }

    /// `γ - μ` if it is a positive root.
    pub fn difference(&self, gamma: RootId, mu: RootId) -> Option<RootId> {
        let v: Vec<i32> = self
            .coeffs(gamma)
            .iter()
            .zip(self.coeffs(mu))
            .map(|(a, b)| a - b)
            .collect();
        self.find(&v)
    }

    /// `Γ_γ = {ν ∈ Δ+ : γ - ν ∈ Δ+}`.
    pub fn gamma_set(&self, gamma: RootId) -> RootSet {
        RootSet::from_ids(
            self,
            self.ids().filter(|&nu| self.difference(gamma, nu).is_some()),
        )
    }

    /// `Φ_γ = {ν ∈ Δ+ : ν - γ ∈ Δ+}`.
    pub fn phi_set(&self, gamma: RootId) -> RootSet {
        RootSet::from_ids(
            self,
            self.ids().filter(|&nu| self.difference(nu, gamma).is_some()),
        )
    }

    /// Coefficient of the simple root `α` in `ν`.
    pub fn alpha_height(&self, nu: RootId, alpha: usize) -> i32 {
        self.coeffs(nu)[alpha]
    }

    /// Positive roots whose `α`-coefficient equals `level`.
    pub fn delta_alpha(&self, alpha: usize, level: i32) -> RootSet {
        RootSet::from_ids(
            self,
            self.ids().filter(|&nu| self.coeffs(nu)[alpha] == level),
        )
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.gram[i][j] != 0
    }

    /// Dynkin neighbours of a node.
    pub fn degree(&self, i: usize) -> usize {
        (0..self.rank()).filter(|&j| self.are_adjacent(i, j)).count()
    }

    /// Connected components of the diagram with `α` removed, each with the
    /// Coxeter number of its root subsystem.
    pub fn levi_components(&self, alpha: usize) -> Result<Vec<LeviComponent>> {
        if alpha >= self.rank() {
            return Err(Error::BadSimpleIndex {
                index: alpha,
                rank: self.rank(),
            });
        }
        let n = self.rank();
        let mut seen = vec![false; n];
        seen[alpha] = true;
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut nodes = Vec::new();
            while let Some(v) = stack.pop() {
                nodes.push(v);
                for w in 0..n {
                    if !seen[w] && self.are_adjacent(v, w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            nodes.sort_unstable();
            comps.push(self.subsystem_component(nodes));
        }
        Ok(comps)
    }

    /// Roots supported on `nodes` form the positive roots of the subsystem.
    fn subsystem_component(&self, nodes: Vec<usize>) -> LeviComponent {
        let inside = |id: &RootId| {
            self.coeffs(*id)
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || nodes.contains(&i))
        };
        let sub: Vec<RootId> = self.ids().filter(inside).collect();
        let max_height = sub.iter().map(|&id| self.height(id)).max().unwrap_or(0);
        let count = sub.len();
        let k = nodes.len();
        let long_simple = nodes
            .iter()
            .filter(|&&i| self.simple_length(i) == LengthClass::Long)
            .count();
        let multiply_laced = nodes
            .iter()
            .any(|&i| self.gram[i][i] != self.gram[nodes[0]][nodes[0]]);
        let type_label = classify(k, count, multiply_laced, long_simple, self.r);
        LeviComponent {
            simple: nodes,
            coxeter_number: max_height + 1,
            type_label,
        }
    }

    /// Renders `γ` as `[c1 c2 ... cn]`.
    pub fn format_root(&self, id: RootId) -> String {
        format_coeffs(self.coeffs(id))
    }
}

fn unit(n: usize, i: usize) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// Renders a coefficient vector as `[c1 c2 ... cn]`.
pub fn format_coeffs(coeffs: &[i32]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// Parses `[c1 c2 ... cn]`, `c1 c2 ... cn` or the compact `[2432]` form
/// (single-digit coefficients only).
pub fn parse_coeffs(s: &str) -> Option<Vec<i32>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if inner.contains(|c: char| c.is_whitespace() || c == ',') {
        inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().ok())
            .collect()
    } else {
        inner
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as i32))
            .collect()
    }
}

fn classify(rank: usize, count: usize, multiply_laced: bool, long_simple: usize, r: i32) -> String {
    let kind = if !multiply_laced {
        if count == rank * (rank + 1) / 2 {
            "A"
        } else if rank >= 4 && count == rank * (rank - 1) {
            "D"
        } else {
            "E"
        }
    } else if r == 3 {
        "G"
    } else if rank == 4 && count == 24 {
        "F"
    } else if long_simple == 1 && rank > 2 {
        "C"
    } else {
        "B"
    };
    format!("{kind}{rank}")
}
