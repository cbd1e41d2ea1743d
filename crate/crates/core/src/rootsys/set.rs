use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::{RootId, RootSystem, SystemId};

/// A subset of the positive roots of one root system.
///
/// Membership is a bit per positive root; iteration follows the system's
/// root order (ascending height, then lexicographic coefficients). Binary
/// operations between sets of different systems panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootSet {
    system: SystemId,
    bits: FixedBitSet,
}

impl RootSet {
    pub fn empty(rs: &RootSystem) -> Self {
        RootSet {
            system: rs.id(),
            bits: FixedBitSet::with_capacity(rs.num_positive()),
        }
    }

    pub fn full(rs: &RootSystem) -> Self {
        let mut set = Self::empty(rs);
        set.bits.insert_range(..);
        set
    }

    pub fn from_ids<I: IntoIterator<Item = RootId>>(rs: &RootSystem, ids: I) -> Self {
        let mut set = Self::empty(rs);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    /// Number of positive roots in the ambient system.
    pub fn universe_len(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, id: RootId) -> bool {
        self.bits.contains(id.0)
    }

    pub fn insert(&mut self, id: RootId) -> bool {
        !self.bits.put(id.0)
    }

    pub fn remove(&mut self, id: RootId) -> bool {
        let was = self.bits.contains(id.0);
        self.bits.set(id.0, false);
        was
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        self.bits.ones().map(RootId)
    }

    pub fn to_vec(&self) -> Vec<RootId> {
        self.iter().collect()
    }

    fn check(&self, other: &RootSet) {
        assert_eq!(
            self.system, other.system,
            "root sets from different systems"
        );
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        self.check(other);
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        self.check(other);
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        self.check(other);
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    /// Complement inside the positive roots.
    pub fn complement(&self) -> RootSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.check(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.check(other);
        self.bits.is_disjoint(&other.bits)
    }

    /// Membership flags in root order.
    pub fn membership(&self) -> Vec<bool> {
        (0..self.bits.len()).map(|i| self.bits.contains(i)).collect()
    }
}

/// Ordered by size, then by membership vector read in root order.
impl Ord for RootSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.membership().cmp(&other.membership()))
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl Extend<RootId> for RootSet {
    fn extend<T: IntoIterator<Item = RootId>>(&mut self, iter: T) {
        for id in iter {
            self.insert(id);
        }
    }
}
