//! Minimal inversion complete sets.
//!
//! A finite family `F ⊆ W` is inversion complete when the inversion sets of
//! its members cover `Δ+`, and minimal when no member can be dropped. A root
//! covered exactly once is essential; the defect is `#ess(F) - #F`.
//!
//! For a simply-laced system and a simple root `α`, the canonical family is
//! `F_α = {σ_α w_{γ,α} : γ ∈ I(α)_max}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideals::IdealLattice;
use crate::rootsys::{CartanType, Labeling, RootId, RootSet, RootSystem, SystemId};
use crate::weylword::{Transporter, WeylWord};

/// How a family was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    CanonicalAde,
    F4Adhoc,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::CanonicalAde => "canonical-ade",
            Construction::F4Adhoc => "f4-adhoc",
        }
    }
}

/// Which simple roots a family is attached to (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Simple(usize),
    F4Pair { short: usize, long: usize },
}

/// One member `w̃_γ` of a family, indexed by its distinguished root.
#[derive(Clone, Debug)]
pub struct Member {
    pub gamma: RootId,
    pub word: WeylWord,
    pub inversions: RootSet,
}

#[derive(Clone, Debug)]
pub struct MicsFamily {
    system: SystemId,
    tag: FamilyTag,
    construction: Construction,
    members: Vec<Member>,
}

impl MicsFamily {
    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// Members in root order of their distinguished roots.
    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn words(&self) -> Vec<WeylWord> {
        self.members.iter().map(|m| m.word.clone()).collect()
    }

    pub fn inversion_sets(&self) -> Vec<RootSet> {
        self.members.iter().map(|m| m.inversions.clone()).collect()
    }
}

/// Why a family fails to be a MICS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Uncovered(RootId),
    /// Index of a member whose removal keeps the union unchanged.
    Removable(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MicsVerdict {
    pub complete: bool,
    /// Every member owns a root that no other member inverts.
    pub minimal: bool,
    pub witness: Option<Witness>,
}

impl MicsVerdict {
    pub fn is_mics(&self) -> bool {
        self.complete && self.minimal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MicsStats {
    /// `n_F(γ)`, indexed by root id.
    pub multiplicity: Vec<u32>,
    pub essential: RootSet,
    pub defect: i64,
}

impl MicsStats {
    pub fn multiplicity_of(&self, gamma: RootId) -> u32 {
        self.multiplicity[gamma.0]
    }
}

/// Comparison of a canonical family with the closed-form multiplicities.
#[derive(Clone, Debug)]
pub struct MultiplicityCheck {
    pub alpha: usize,
    /// `h - h_j` for each root of `Δ_α(0)+`.
    pub predicted: BTreeMap<RootId, i32>,
    /// Roots where the family disagrees with the prediction.
    pub mismatches: Vec<RootId>,
    /// `(θ, α) = 0`, in which case `ess = I(α)_max` and the defect is 0.
    pub orthogonal: bool,
    pub orthogonal_ok: bool,
    pub defect: i64,
}

impl MultiplicityCheck {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.orthogonal_ok
    }
}

#[derive(Clone, Debug)]
pub struct HatData {
    pub alpha_hat: usize,
    /// `ŵ = w_{θ-α̂, α̂}`.
    pub w_hat: Transporter,
    pub involution_ok: bool,
}

#[derive(Clone, Debug)]
pub struct HatCheck {
    pub alpha_hat: usize,
    pub ess_equals_h: bool,
    pub defect: i64,
    pub expected_defect: i64,
    /// `n_α̂(μ) >= (h - h_j)/2` on `Δ_α̂(0)+`.
    pub injection_ok: bool,
    /// `h - h_j` per Levi component of `α̂`.
    pub gaps: Vec<i32>,
    pub involution_ok: bool,
}

impl HatCheck {
    pub fn holds(&self) -> bool {
        self.ess_equals_h
            && self.defect == self.expected_defect
            && self.injection_ok
            && self.involution_ok
            && self.gaps.iter().all(|&g| g >= 4)
    }
}

#[derive(Clone, Debug)]
pub struct StronglyAbelianMax {
    pub size: usize,
    /// Number of strongly abelian sets of maximum size.
    pub count: u64,
    /// At most [`WITNESS_CAP`] of them, in discovery order.
    pub witnesses: Vec<RootSet>,
}

pub const WITNESS_CAP: usize = 64;

/// Where a system stands with respect to the conjecture sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureScope {
    /// Every family is described by theorems; nothing to test.
    TheoremCovered,
    /// Not of the form D_n (n >= 4) or E_n.
    OutsideRange,
    Checked,
}

#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub alpha: usize,
    pub is_hat: bool,
    pub is_endpoint: bool,
    pub size: usize,
    pub ess_size: usize,
    pub defect: i64,
    pub bound: i64,
    /// `ess(F_α) ∖ I(α)_max ⊆ H`.
    pub ess_in_h: bool,
    /// Roots of `ess(F_α) ∖ I(α)_max` outside `H`.
    pub outside_h: Vec<RootId>,
    pub defect_bounded: bool,
    /// `defect = h - 2` exactly when `α = α̂`.
    pub hat_iff: bool,
    /// `defect = 0` exactly when `α` is an endpoint other than `α̂`.
    pub zero_iff: bool,
    /// `ess(F_α)` is closed under adding positive roots.
    pub bstable: bool,
}

impl ConjectureRow {
    pub fn defect_pattern(&self) -> bool {
        self.defect_bounded && self.hat_iff && self.zero_iff
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub system: SystemId,
    pub scope: ConjectureScope,
    pub coxeter_number: i32,
    pub alpha_hat: Option<usize>,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    /// True when no row records a failed conjecture instance.
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.ess_in_h && r.defect_pattern())
    }
}

/// The strongly abelian set `A` used for the F4 families, in VO labels.
pub const F4_WITNESS: [[i32; 4]; 6] = [
    [2, 4, 3, 2],
    [2, 4, 3, 1],
    [2, 4, 2, 1],
    [2, 3, 2, 1],
    [1, 3, 2, 1],
    [1, 2, 2, 1],
];

impl RootSystem {
    /// Completeness and minimality of an arbitrary family of words.
    pub fn verify_mics(&self, words: &[WeylWord]) -> Result<MicsVerdict> {
        let sets = self.word_inversions(words)?;
        Ok(self.verify_sets(&sets))
    }

    fn word_inversions(&self, words: &[WeylWord]) -> Result<Vec<RootSet>> {
        words
            .iter()
            .map(|w| {
                if w.system() != self.id() {
                    return Err(Error::SystemMismatch(w.system(), self.id()));
                }
                Ok(self.inversion_set(w))
            })
            .collect()
    }

    fn verify_sets(&self, sets: &[RootSet]) -> MicsVerdict {
        let mult = self.multiplicities(sets);
        let uncovered = self.ids().find(|g| mult[g.0] == 0);
        let removable = sets
            .iter()
            .position(|s| !s.iter().any(|g| mult[g.0] == 1));
        let witness = uncovered
            .map(Witness::Uncovered)
            .or(removable.map(Witness::Removable));
        MicsVerdict {
            complete: uncovered.is_none(),
            minimal: removable.is_none(),
            witness,
        }
    }

    fn multiplicities(&self, sets: &[RootSet]) -> Vec<u32> {
        let mut mult = vec![0u32; self.num_positive()];
        for s in sets {
            for g in s.iter() {
                mult[g.0] += 1;
            }
        }
        mult
    }

    /// Multiplicities, essential set and defect of a complete family.
    pub fn stats(&self, words: &[WeylWord]) -> Result<MicsStats> {
        let sets = self.word_inversions(words)?;
        self.stats_from_sets(&sets)
    }

    pub fn family_stats(&self, family: &MicsFamily) -> Result<MicsStats> {
        if family.system != self.id() {
            return Err(Error::SystemMismatch(family.system, self.id()));
        }
        self.stats_from_sets(&family.inversion_sets())
    }

    fn stats_from_sets(&self, sets: &[RootSet]) -> Result<MicsStats> {
        let multiplicity = self.multiplicities(sets);
        if let Some(g) = self.ids().find(|g| multiplicity[g.0] == 0) {
            return Err(Error::Incomplete(self.format_root(g)));
        }
        let essential =
            RootSet::from_ids(self, self.ids().filter(|g| multiplicity[g.0] == 1));
        let defect = essential.len() as i64 - sets.len() as i64;
        Ok(MicsStats {
            multiplicity,
            essential,
            defect,
        })
    }

    /// `F_α`; builds the ideal lattice internally.
    pub fn build_canonical_mics(&self, alpha: usize) -> Result<MicsFamily> {
        self.require_simply_laced()?;
        self.simple_root(alpha)?;
        let lattice = self.fiber_decomposition()?;
        self.build_canonical_mics_with(&lattice, alpha)
    }

    fn require_simply_laced(&self) -> Result<()> {
        if self.is_simply_laced() {
            return Ok(());
        }
        Err(Error::Unsupported(format!(
            "the canonical family needs a simply-laced system; for {} the construction \
             through I(α)_max does not give a MICS",
            self.name()
        )))
    }

    /// `F_α` using a prebuilt lattice of this system.
    pub fn build_canonical_mics_with(
        &self,
        lattice: &IdealLattice,
        alpha: usize,
    ) -> Result<MicsFamily> {
        self.require_simply_laced()?;
        let a = self.simple_root(alpha)?;
        let max = lattice.maximal_ideal(self, alpha)?;
        let mut members = Vec::with_capacity(max.len());
        for gamma in max.roots().iter() {
            let t = self.shortest_transporter(gamma, a)?;
            let word = self.classify(t.word.prepend(alpha));
            let inversions = self.inversion_set(&word);
            let mut expect = self.inversion_set(&t.word);
            expect.insert(gamma);
            if inversions != expect || word.len() as i32 != self.height(gamma) {
                return Err(Error::Consistency(format!(
                    "w̃ for {} has the wrong inversion set or length",
                    self.format_root(gamma)
                )));
            }
            let image = self.apply_root(&word, gamma);
            if image.iter().zip(self.coeffs(a)).any(|(x, y)| *x != -y) {
                return Err(Error::Consistency(format!(
                    "w̃ does not send {} to -α{}",
                    self.format_root(gamma),
                    alpha + 1
                )));
            }
            members.push(Member {
                gamma,
                word,
                inversions,
            });
        }
        let family = MicsFamily {
            system: self.id(),
            tag: FamilyTag::Simple(alpha),
            construction: Construction::CanonicalAde,
            members,
        };
        let verdict = self.verify_sets(&family.inversion_sets());
        if !verdict.is_mics() {
            return Err(Error::Consistency(format!(
                "F_α{} fails verification: {:?}",
                alpha + 1,
                verdict.witness
            )));
        }
        Ok(family)
    }

    /// `h - h_j` on `Δ_α(0)+`, where `h_j` is the Coxeter number of the Levi
    /// component containing the root. Requires `[θ:α] = 1`.
    pub fn predicted_multiplicities(&self, alpha: usize) -> Result<BTreeMap<RootId, i32>> {
        self.simple_root(alpha)?;
        if self.alpha_height(self.highest_root(), alpha) != 1 {
            return Err(Error::Precondition(format!(
                "[θ:α{}] != 1; the nilradical is not abelian",
                alpha + 1
            )));
        }
        let comps = self.levi_components(alpha)?;
        let h = self.coxeter_number();
        let mut out = BTreeMap::new();
        for mu in self.delta_alpha(alpha, 0).iter() {
            let support = self.coeffs(mu).iter().position(|&c| c != 0).unwrap();
            let comp = comps
                .iter()
                .find(|c| c.simple.contains(&support))
                .ok_or_else(|| Error::Consistency("root outside every Levi component".into()))?;
            out.insert(mu, h - comp.coxeter_number);
        }
        Ok(out)
    }

    /// Compares `F_α` with [`RootSystem::predicted_multiplicities`].
    pub fn multiplicity_check(&self, lattice: &IdealLattice, alpha: usize) -> Result<MultiplicityCheck> {
        let predicted = self.predicted_multiplicities(alpha)?;
        let family = self.build_canonical_mics_with(lattice, alpha)?;
        let stats = self.family_stats(&family)?;
        let mismatches = predicted
            .iter()
            .filter(|(&mu, &n)| stats.multiplicity_of(mu) as i32 != n)
            .map(|(&mu, _)| mu)
            .collect();
        let a = self.simple_root(alpha)?;
        let orthogonal = self.pairing(self.highest_root(), a) == 0;
        let max = lattice.maximal_ideal(self, alpha)?;
        let orthogonal_ok = !orthogonal || (&stats.essential == max.roots() && stats.defect == 0);
        Ok(MultiplicityCheck {
            alpha,
            predicted,
            mismatches,
            orthogonal,
            orthogonal_ok,
            defect: stats.defect,
        })
    }

    /// The unique simple root meeting `θ`, if `θ` is a fundamental weight.
    pub fn alpha_hat(&self) -> Option<usize> {
        let t = self.coeffs(self.highest_root()).to_vec();
        let nonzero: Vec<usize> = (0..self.rank())
            .filter(|&i| self.simple_pairing(&t, i) != 0)
            .collect();
        match nonzero.as_slice() {
            [i] if self.simple_pairing(&t, *i) == 1 => Some(*i),
            _ => None,
        }
    }

    pub fn hat_data(&self) -> Result<HatData> {
        let alpha_hat = self.alpha_hat().ok_or_else(|| {
            Error::Precondition(format!("θ is not a fundamental weight in {}", self.name()))
        })?;
        let a = self.simple_root(alpha_hat)?;
        let top = self
            .difference(self.highest_root(), a)
            .ok_or_else(|| Error::Consistency("θ - α̂ is not a root".into()))?;
        let w_hat = self.shortest_transporter(top, a)?;
        let forth = self.apply_root(&w_hat.word, a) == self.coeffs(top);
        let square = w_hat.word.compose(&w_hat.word)?;
        let involution_ok = forth && self.element(&square).is_identity();
        Ok(HatData {
            alpha_hat,
            w_hat,
            involution_ok,
        })
    }

    /// `ess(F_α̂) = H`, `defect = h - 2`, the multiplicity lower bound on
    /// `Δ_α̂(0)+` and `ŵ² = 1`.
    pub fn fundamental_essential_check(&self, lattice: &IdealLattice) -> Result<HatCheck> {
        self.require_simply_laced()?;
        let hat = self.hat_data()?;
        let alpha = hat.alpha_hat;
        let family = self.build_canonical_mics_with(lattice, alpha)?;
        let stats = self.family_stats(&family)?;
        let h = self.coxeter_number();
        let comps = self.levi_components(alpha)?;
        let gaps: Vec<i32> = comps.iter().map(|c| h - c.coxeter_number).collect();
        let injection_ok = self.delta_alpha(alpha, 0).iter().all(|mu| {
            let support = self.coeffs(mu).iter().position(|&c| c != 0).unwrap();
            let gap = comps
                .iter()
                .find(|c| c.simple.contains(&support))
                .map_or(i32::MAX, |c| h - c.coxeter_number);
            2 * stats.multiplicity_of(mu) as i32 >= gap
        });
        Ok(HatCheck {
            alpha_hat: alpha,
            ess_equals_h: stats.essential == self.h_set(),
            defect: stats.defect,
            expected_defect: i64::from(h - 2),
            injection_ok,
            gaps,
            involution_ok: hat.involution_ok,
        })
    }

    /// No root lies in the open cone `ℝ>0 γ + ℝ>0 μ`. Distinct roots only.
    pub fn strongly_abelian_pair(&self, gamma: RootId, mu: RootId) -> bool {
        let (g, m) = (self.coeffs(gamma), self.coeffs(mu));
        let n = self.rank();
        let Some((i, j, det)) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, g[i] * m[j] - g[j] * m[i]))
            .find(|&(_, _, d)| d != 0)
        else {
            return false;
        };
        !self.ids().any(|nu| {
            let v = self.coeffs(nu);
            // ν·det = a·γ + b·μ, exactly
            let a = v[i] * m[j] - v[j] * m[i];
            let b = g[i] * v[j] - g[j] * v[i];
            let positive = a * det > 0 && b * det > 0;
            positive && (0..n).all(|k| v[k] * det == a * g[k] + b * m[k])
        })
    }

    pub fn is_strongly_abelian(&self, s: &RootSet) -> bool {
        let v = s.to_vec();
        v.iter()
            .enumerate()
            .all(|(k, &a)| v[k + 1..].iter().all(|&b| self.strongly_abelian_pair(a, b)))
    }

    /// Maximum strongly abelian subsets of `Δ+`, by branch and bound over
    /// the pair-compatibility graph with a greedy colouring bound.
    pub fn max_strongly_abelian(&self) -> Result<StronglyAbelianMax> {
        let n = self.num_positive();
        if n > 128 {
            return Err(Error::Unsupported(format!(
                "clique search is limited to 128 positive roots, {} has {n}",
                self.name()
            )));
        }
        let mut adj = vec![0u128; n];
        for a in 0..n {
            for b in a + 1..n {
                if self.strongly_abelian_pair(RootId(a), RootId(b)) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        let mut search = CliqueSearch {
            adj,
            best: 0,
            count: 0,
            found: Vec::new(),
        };
        let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        search.expand(0, all, 0);
        let witnesses = search
            .found
            .iter()
            .map(|&bits| RootSet::from_ids(self, ones(bits).map(RootId)))
            .collect();
        Ok(StronglyAbelianMax {
            size: search.best,
            count: search.count,
            witnesses,
        })
    }

    /// The family `F_{i,j}` of F4 built on the strongly abelian set
    /// [`F4_WITNESS`]; `short` and `long` are 0-based simple indices.
    pub fn build_f4_mics(&self, short: usize, long: usize) -> Result<MicsFamily> {
        if self.kind() != CartanType::F || self.id().dual {
            return Err(Error::Unsupported(format!(
                "the ad-hoc families exist only for F4, not {}",
                self.name()
            )));
        }
        if self.labeling() != Labeling::VinbergOnishchik {
            return Err(Error::Unsupported(
                "the F4 families are defined in the vo labeling".into(),
            ));
        }
        if !(short < 2 && (2..4).contains(&long)) {
            return Err(Error::Precondition(format!(
                "need i in {{1,2}} and j in {{3,4}}, got {},{}",
                short + 1,
                long + 1
            )));
        }
        let mut members = Vec::new();
        for c in F4_WITNESS {
            let gamma = self.root_by_coeffs(&c)?;
            let alpha = if self.is_long(gamma) { long } else { short };
            let t = self.shortest_transporter(gamma, self.simple_root(alpha)?)?;
            let word = self.classify(t.word.prepend(alpha));
            let inversions = self.inversion_set(&word);
            members.push(Member {
                gamma,
                word,
                inversions,
            });
        }
        members.sort_by_key(|m| m.gamma);
        let family = MicsFamily {
            system: self.id(),
            tag: FamilyTag::F4Pair { short, long },
            construction: Construction::F4Adhoc,
            members,
        };
        let verdict = self.verify_sets(&family.inversion_sets());
        if !verdict.is_mics() {
            return Err(Error::Consistency(format!(
                "F_{{{},{}}} fails verification: {:?}",
                short + 1,
                long + 1,
                verdict.witness
            )));
        }
        Ok(family)
    }

    /// Whether the conjecture sweep applies, and `α̂` when it does.
    pub fn conjecture_scope(&self) -> (ConjectureScope, Option<usize>) {
        let hat = self.alpha_hat();
        let scope = match (self.kind(), hat) {
            (CartanType::A, _) => ConjectureScope::TheoremCovered,
            (_, Some(_)) if self.is_simply_laced() => ConjectureScope::Checked,
            _ => ConjectureScope::OutsideRange,
        };
        (scope, hat)
    }

    /// Verdicts for one simple root, or `None` outside the checked range.
    pub fn conjecture_row(
        &self,
        lattice: &IdealLattice,
        alpha: usize,
    ) -> Result<Option<ConjectureRow>> {
        self.require_simply_laced()?;
        let (ConjectureScope::Checked, Some(hat)) = self.conjecture_scope() else {
            return Ok(None);
        };
        let family = self.build_canonical_mics_with(lattice, alpha)?;
        let stats = self.family_stats(&family)?;
        let max = lattice.maximal_ideal(self, alpha)?;
        let bound = i64::from(self.coxeter_number() - 2);
        let extra = stats.essential.difference(max.roots());
        let outside_h: Vec<RootId> = extra.difference(&self.h_set()).to_vec();
        let is_hat = alpha == hat;
        let is_endpoint = self.degree(alpha) == 1;
        Ok(Some(ConjectureRow {
            alpha,
            is_hat,
            is_endpoint,
            size: family.len(),
            ess_size: stats.essential.len(),
            defect: stats.defect,
            bound,
            ess_in_h: outside_h.is_empty(),
            outside_h,
            defect_bounded: stats.defect <= bound,
            hat_iff: (stats.defect == bound) == is_hat,
            zero_iff: (stats.defect == 0) == (is_endpoint && !is_hat),
            bstable: self.is_upward_closed(&stats.essential),
        }))
    }

    /// Per-root verdicts on the essential-set conjectures for `D_n` and `E_n`.
    pub fn conjecture_report(&self) -> Result<ConjectureReport> {
        self.require_simply_laced()?;
        let (scope, alpha_hat) = self.conjecture_scope();
        let mut report = ConjectureReport {
            system: self.id(),
            scope,
            coxeter_number: self.coxeter_number(),
            alpha_hat,
            rows: Vec::new(),
        };
        if scope != ConjectureScope::Checked {
            return Ok(report);
        }
        let lattice = self.fiber_decomposition()?;
        for alpha in 0..self.rank() {
            report.rows.extend(self.conjecture_row(&lattice, alpha)?);
        }
        Ok(report)
    }
}

fn ones(mut bits: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(i)
    })
}

struct CliqueSearch {
    adj: Vec<u128>,
    best: usize,
    count: u64,
    found: Vec<u128>,
}

impl CliqueSearch {
    /// Greedy colouring of `cand`; returns vertices with their colour
    /// numbers, colours non-decreasing.
    fn colour(&self, mut cand: u128) -> Vec<(usize, usize)> {
        let mut order = Vec::new();
        let mut colour = 0;
        while cand != 0 {
            colour += 1;
            let mut avail = cand;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v) & !self.adj[v];
                cand &= !(1 << v);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, clique: u128, mut cand: u128, size: usize) {
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.count = 0;
                self.found.clear();
            }
            if size == self.best {
                self.count += 1;
                if self.found.len() < WITNESS_CAP {
                    self.found.push(clique);
                }
            }
            return;
        }
        let order = self.colour(cand);
        for &(v, c) in order.iter().rev() {
            // ties are kept so every maximum clique is counted
            if size + c < self.best {
                return;
            }
            self.expand(clique | (1 << v), cand & self.adj[v], size + 1);
            cand &= !(1 << v);
        }
        // cliques that stop here are maximal only if nothing is left
    }
}
