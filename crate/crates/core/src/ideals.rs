//! Abelian ideals of the Borel subalgebra, realised as sets of positive roots.
//!
//! A set `I ⊆ Δ+` is an abelian ideal when it is closed upward under adding
//! positive roots and no two of its roots sum to a root. There are `2^rank`
//! of them. Nonzero ideals fall into fibres over the long positive roots:
//! `I` lies over `μ` when `I ∩ H` equals the minimal ideal `I(μ)_min`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSet, RootSystem};

/// Practical bound on the rank for exhaustive enumeration.
pub const MAX_ENUMERATION_RANK: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianIdeal {
    roots: RootSet,
    generators: Vec<RootId>,
}

impl AbelianIdeal {
    fn from_roots(rs: &RootSystem, roots: RootSet) -> Self {
        let generators = roots
            .iter()
            .filter(|&g| !roots.iter().any(|o| o != g && rs.geq(g, o)))
            .collect();
        AbelianIdeal { roots, generators }
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    /// Minimal elements under `⪰`.
    pub fn generators(&self) -> &[RootId] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, id: RootId) -> bool {
        self.roots.contains(id)
    }
}

/// Ideals lying over one long root `μ`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub mu: RootId,
    /// Sorted by (size, membership).
    pub ideals: Vec<AbelianIdeal>,
    /// Index of `I(μ)_min` in `ideals`.
    pub min: usize,
    /// Index of `I(μ)_max` in `ideals`.
    pub max: usize,
}

impl Fiber {
    pub fn minimal(&self) -> &AbelianIdeal {
        &self.ideals[self.min]
    }

    pub fn maximal(&self) -> &AbelianIdeal {
        &self.ideals[self.max]
    }
}

/// All abelian ideals of a system together with their fibre decomposition.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ideals: Vec<AbelianIdeal>,
    fibers: Vec<Fiber>,
}

impl IdealLattice {
    pub fn ideals(&self) -> &[AbelianIdeal] {
        &self.ideals
    }

    /// Fibres ordered by their base root.
    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn fiber(&self, mu: RootId) -> Option<&Fiber> {
        self.fibers.iter().find(|f| f.mu == mu)
    }

    /// Ideals not strictly contained in another ideal.
    pub fn globally_maximal(&self) -> Vec<&AbelianIdeal> {
        self.ideals
            .iter()
            .filter(|a| {
                !self
                    .ideals
                    .iter()
                    .any(|b| b.len() > a.len() && a.roots.is_subset(&b.roots))
            })
            .collect()
    }

    /// `I(α)_max` for a long simple root `α`.
    pub fn maximal_ideal(&self, rs: &RootSystem, alpha: usize) -> Result<AbelianIdeal> {
        let a = rs.simple_root(alpha)?;
        if !rs.is_long(a) {
            return Err(Error::Precondition(format!(
                "α{} is short; maximal ideals are indexed by long simple roots",
                alpha + 1
            )));
        }
        let fiber = self
            .fiber(a)
            .ok_or_else(|| Error::Consistency(format!("no fibre over α{}", alpha + 1)))?;
        let max = fiber.maximal().clone();

        if self
            .ideals
            .iter()
            .any(|b| b.len() > max.len() && max.roots.is_subset(&b.roots))
        {
            return Err(Error::Consistency(format!(
                "I(α{})_max is not globally maximal",
                alpha + 1
            )));
        }
        if rs.alpha_height(rs.highest_root(), alpha) == 1 && max.roots != rs.delta_alpha(alpha, 1) {
            return Err(Error::Consistency(format!(
                "I(α{})_max differs from the level-one roots",
                alpha + 1
            )));
        }
        if rs.h_set().contains(a) && fiber.max != fiber.min {
            return Err(Error::Consistency(format!(
                "α{} lies in H but its fibre has distinct extremes",
                alpha + 1
            )));
        }
        Ok(max)
    }
}

/// Outcome of the complement/pairing check for one simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCheck {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl RootSystem {
    /// `H = {θ} ∪ {γ : <γ, θ^∨> = 1}`.
    pub fn h_set(&self) -> RootSet {
        let t = self.highest_root();
        RootSet::from_ids(
            self,
            self.ids().filter(|&g| g == t || self.pairing(g, t) == 1),
        )
    }

    /// Closed under adding positive roots (the root set of a b-stable
    /// subspace).
    pub fn is_upward_closed(&self, s: &RootSet) -> bool {
        s.iter()
            .all(|g| self.ids().all(|nu| self.sum(g, nu).is_none_or(|x| s.contains(x))))
    }

    /// No two members (equal ones included) sum to a root.
    pub fn is_abelian(&self, s: &RootSet) -> bool {
        let v = s.to_vec();
        v.iter()
            .enumerate()
            .all(|(k, &a)| v[k..].iter().all(|&b| self.sum(a, b).is_none()))
    }

    pub fn is_abelian_ideal(&self, s: &RootSet) -> bool {
        s.system() == self.id() && self.is_upward_closed(s) && self.is_abelian(s)
    }

    /// Every abelian ideal, the zero ideal included, ordered by size and
    /// then membership vector.
    ///
    /// Depth-first over the positive roots in descending height: a root may
    /// join the current ideal only if every root covering it is already in
    /// and it sums to a root with no current member. Each partial state is
    /// itself an abelian ideal, so the search visits at most
    /// `|Δ+| · 2^rank` nodes.
    pub fn enumerate_abelian_ideals(&self) -> Result<Vec<AbelianIdeal>> {
        if self.rank() > MAX_ENUMERATION_RANK {
            return Err(Error::Unsupported(format!(
                "enumeration is limited to rank <= {MAX_ENUMERATION_RANK}"
            )));
        }
        let order: Vec<RootId> = self.ids().rev().collect();
        let up: Vec<Vec<RootId>> = self.ids().map(|g| self.covered_by(g)).collect();
        let mut current = RootSet::empty(self);
        let mut members = Vec::new();
        let mut out = Vec::new();
        self.ideal_dfs(&order, &up, 0, &mut current, &mut members, &mut out);
        let mut ideals: Vec<AbelianIdeal> = out
            .into_iter()
            .map(|s| AbelianIdeal::from_roots(self, s))
            .collect();
        ideals.sort();
        Ok(ideals)
    }

    fn ideal_dfs(
        &self,
        order: &[RootId],
        up: &[Vec<RootId>],
        k: usize,
        current: &mut RootSet,
        members: &mut Vec<RootId>,
        out: &mut Vec<RootSet>,
    ) {
        if k == order.len() {
            out.push(current.clone());
            return;
        }
        self.ideal_dfs(order, up, k + 1, current, members, out);
        let g = order[k];
        let closed = up[g.0].iter().all(|&c| current.contains(c));
        if closed
            && self.sum(g, g).is_none()
            && members.iter().all(|&m| self.sum(g, m).is_none())
        {
            current.insert(g);
            members.push(g);
            self.ideal_dfs(order, up, k + 1, current, members, out);
            members.pop();
            current.remove(g);
        }
    }

    /// `I(μ)_min = {θ} ∪ {θ - γ : γ ∈ N(w_{θ,μ})}` for a long root `μ`.
    pub fn minimal_ideal(&self, mu: RootId) -> Result<AbelianIdeal> {
        if !self.is_long(mu) {
            return Err(Error::Precondition(format!(
                "{} is short; minimal ideals are indexed by long roots",
                self.format_root(mu)
            )));
        }
        let t = self.highest_root();
        let w = self.shortest_transporter(t, mu)?.word;
        let mut roots = RootSet::empty(self);
        roots.insert(t);
        for g in self.inversion_set(&w).iter() {
            let d = self.difference(t, g).ok_or_else(|| {
                Error::Consistency(format!("θ - {} is not a root", self.format_root(g)))
            })?;
            roots.insert(d);
        }
        let expect = (self.rho_pairing(t) - self.rho_pairing(mu) + 1) as usize;
        if roots.len() != expect {
            return Err(Error::Consistency(format!(
                "I({})_min has {} roots, expected {expect}",
                self.format_root(mu),
                roots.len()
            )));
        }
        if !self.is_abelian_ideal(&roots) || !roots.is_subset(&self.h_set()) {
            return Err(Error::Consistency(format!(
                "I({})_min is not an abelian ideal inside H",
                self.format_root(mu)
            )));
        }
        Ok(AbelianIdeal::from_roots(self, roots))
    }

    /// Groups every nonzero abelian ideal by the long root whose minimal
    /// ideal equals its intersection with `H`.
    pub fn fiber_decomposition(&self) -> Result<IdealLattice> {
        let ideals = self.enumerate_abelian_ideals()?;
        let h = self.h_set();
        let mut base: HashMap<RootSet, RootId> = HashMap::new();
        for mu in self.ids().filter(|&m| self.is_long(m)) {
            let min = self.minimal_ideal(mu)?;
            if let Some(prev) = base.insert(min.roots.clone(), mu) {
                return Err(Error::Consistency(format!(
                    "{} and {} share a minimal ideal",
                    self.format_root(prev),
                    self.format_root(mu)
                )));
            }
        }
        let mut grouped: HashMap<RootId, Vec<AbelianIdeal>> = HashMap::new();
        for ideal in ideals.iter().filter(|i| !i.is_empty()) {
            let key = ideal.roots.intersection(&h);
            let mu = base.get(&key).ok_or_else(|| {
                Error::Consistency(format!(
                    "ideal with generators {:?} lies over no long root",
                    ideal.generators
                ))
            })?;
            grouped.entry(*mu).or_default().push(ideal.clone());
        }
        let mut fibers = Vec::new();
        let mut mus: Vec<RootId> = base.values().copied().collect();
        mus.sort();
        for mu in mus {
            let members = grouped.remove(&mu).unwrap_or_default();
            fibers.push(self.fiber_extremes(mu, members)?);
        }
        Ok(IdealLattice { ideals, fibers })
    }

    fn fiber_extremes(&self, mu: RootId, ideals: Vec<AbelianIdeal>) -> Result<Fiber> {
        let err = |what: &str| {
            Error::Consistency(format!("fibre over {} {what}", self.format_root(mu)))
        };
        let below_all = |k: usize| ideals.iter().all(|o| ideals[k].roots.is_subset(&o.roots));
        let above_all = |k: usize| ideals.iter().all(|o| o.roots.is_subset(&ideals[k].roots));
        let mins: Vec<usize> = (0..ideals.len()).filter(|&k| below_all(k)).collect();
        let maxs: Vec<usize> = (0..ideals.len()).filter(|&k| above_all(k)).collect();
        match (mins.as_slice(), maxs.as_slice()) {
            ([min], [max]) => Ok(Fiber {
                mu,
                min: *min,
                max: *max,
                ideals,
            }),
            ([], _) | ([_, _, ..], _) => Err(err("has no unique minimum")),
            _ => Err(err("has no unique maximum")),
        }
    }

    /// `I(α)_max`; enumerates all ideals, so callers handling several roots
    /// should build an [`IdealLattice`] once instead.
    pub fn maximal_ideal(&self, alpha: usize) -> Result<AbelianIdeal> {
        self.fiber_decomposition()?.maximal_ideal(self, alpha)
    }

    /// Checks, for a long simple `α`, that `H = I(α)_min ⊔ N(w_{θ,α})`, that
    /// `μ ∈ N(w_{θ,α})` iff `θ - μ ∈ I(α)_min ∖ {θ}`, and that every root
    /// outside `I(α)_max` sums to a root of `I(α)_min` with some member of
    /// `I(α)_min`.
    pub fn complement_pairing_check(
        &self,
        lattice: &IdealLattice,
        alpha: usize,
    ) -> Result<PairingCheck> {
        let a = self.simple_root(alpha)?;
        let t = self.highest_root();
        let min = self.minimal_ideal(a)?;
        let max = lattice.maximal_ideal(self, alpha)?;
        let n = self.inversion_set(&self.shortest_transporter(t, a)?.word);
        let h = self.h_set();
        let fail = |msg: String| {
            Ok(PairingCheck {
                holds: false,
                counterexample: Some(msg),
            })
        };

        if !min.roots.is_disjoint(&n) || min.roots.union(&n) != h {
            return fail("H is not the disjoint union of I(α)_min and N(w_θ,α)".into());
        }
        for mu in h.iter().filter(|&m| m != t) {
            let partner = self.difference(t, mu);
            let in_min = partner.is_some_and(|p| p != t && min.contains(p));
            if n.contains(mu) != in_min {
                return fail(format!("pairing fails at {}", self.format_root(mu)));
            }
        }
        for other in max.roots.complement().iter() {
            let ok = min
                .roots
                .iter()
                .any(|m| self.sum(m, other).is_some_and(|s| min.contains(s)));
            if !ok {
                return fail(format!(
                    "{} has no partner in I(α)_min",
                    self.format_root(other)
                ));
            }
        }
        Ok(PairingCheck {
            holds: true,
            counterexample: None,
        })
    }
}
