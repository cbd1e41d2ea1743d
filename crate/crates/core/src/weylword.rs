//! Weyl group elements as words in the simple reflections.
//!
//! A word `s_{i_m} ... s_{i_1}` is stored in written order and acts on
//! roots right to left, so `s_{i_1}` is applied first. Two words are the same
//! group element exactly when they act identically on the simple roots; see
//! [`WeylElement`].

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{format_coeffs, RootId, RootSet, RootSystem, SystemId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reducedness {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct WeylWord {
    letters: Vec<usize>,
    reduced: Reducedness,
    system: SystemId,
}

impl WeylWord {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylWord {
            letters: Vec::new(),
            reduced: Reducedness::Yes,
            system: rs.id(),
        }
    }

    /// Word from 0-based simple indices in written order.
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::BadSimpleIndex {
                index: bad,
                rank: rs.rank(),
            });
        }
        let reduced = if letters.len() <= 1 {
            Reducedness::Yes
        } else {
            Reducedness::Unknown
        };
        Ok(WeylWord {
            letters,
            reduced,
            system: rs.id(),
        })
    }

    /// Word from 1-based letter indices: `[3, 2, 3, 4]` is
    /// `s3 s2 s3 s4`.
    pub fn from_one_based(rs: &RootSystem, letters: &[usize]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::BadSimpleIndex {
                index: 0,
                rank: rs.rank(),
            });
        }
        Self::new(rs, letters.iter().map(|i| i - 1).collect())
    }

    /// Parses `"s3 s2 s3 s4"`; `"e"` or the empty string is the identity.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let idx: usize = tok
                .trim_start_matches('s')
                .parse()
                .map_err(|_| Error::Precondition(format!("bad letter `{tok}`")))?;
            letters.push(idx);
        }
        Self::from_one_based(rs, &letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reduced(&self) -> Reducedness {
        self.reduced
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn inverse(&self) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        WeylWord {
            letters,
            reduced: self.reduced,
            system: self.system,
        }
    }

    /// `self · other`: `other` acts first.
    pub fn compose(&self, other: &WeylWord) -> Result<WeylWord> {
        if self.system != other.system {
            return Err(Error::SystemMismatch(self.system, other.system));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(WeylWord {
            reduced: if letters.is_empty() {
                Reducedness::Yes
            } else {
                Reducedness::Unknown
            },
            letters,
            system: self.system,
        })
    }

    /// `s_α · self`.
    pub fn prepend(&self, alpha: usize) -> WeylWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(alpha);
        letters.extend_from_slice(&self.letters);
        WeylWord {
            letters,
            reduced: Reducedness::Unknown,
            system: self.system,
        }
    }

    fn with_reduced(mut self, reduced: Reducedness) -> Self {
        self.reduced = reduced;
        self
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// A group element, represented by the images of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: Vec<Vec<i32>>,
}

impl WeylElement {
    pub fn images(&self) -> &[Vec<i32>] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, v)| v.iter().enumerate().all(|(j, &c)| c == i32::from(i == j)))
    }
}

/// Minimal-length element taking `source` to `target`.
#[derive(Clone, Debug)]
pub struct Transporter {
    pub word: WeylWord,
    pub source: RootId,
    pub target: RootId,
    /// `source = path[0], ..., path[m] = target`, one entry per letter.
    pub path: Vec<RootId>,
}

fn is_negative(v: &[i32]) -> bool {
    v.iter().all(|&c| c <= 0) && v.iter().any(|&c| c < 0)
}

impl RootSystem {
    fn check_word(&self, w: &WeylWord) -> Result<()> {
        if w.system != self.id() {
            return Err(Error::SystemMismatch(w.system, self.id()));
        }
        Ok(())
    }

    /// `v ↦ s_i(v) = v - <v, α_i^∨> α_i`, in place.
    pub fn reflect_simple(&self, v: &mut [i32], i: usize) {
        let k = self.simple_pairing(v, i);
        v[i] -= k;
    }

    fn act(&self, letters: &[usize], v: &mut [i32]) {
        for &i in letters.iter().rev() {
            self.reflect_simple(v, i);
        }
    }

    /// Image of an arbitrary coefficient vector under `w`.
    pub fn apply(&self, w: &WeylWord, v: &[i32]) -> Result<Vec<i32>> {
        self.check_word(w)?;
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        let mut out = v.to_vec();
        self.act(&w.letters, &mut out);
        Ok(out)
    }

    pub fn apply_root(&self, w: &WeylWord, gamma: RootId) -> Vec<i32> {
        let mut out = self.coeffs(gamma).to_vec();
        self.act(&w.letters, &mut out);
        out
    }

    /// `N(w) = {γ ∈ Δ+ : w(γ) ∈ -Δ+}`.
    pub fn inversion_set(&self, w: &WeylWord) -> RootSet {
        RootSet::from_ids(
            self,
            self.ids().filter(|&g| is_negative(&self.apply_root(w, g))),
        )
    }

    /// `ℓ(w) = #N(w)`.
    pub fn length(&self, w: &WeylWord) -> usize {
        self.inversion_set(w).len()
    }

    pub fn is_reduced(&self, w: &WeylWord) -> bool {
        match w.reduced {
            Reducedness::Yes => true,
            Reducedness::No => false,
            Reducedness::Unknown => self.length(w) == w.len(),
        }
    }

    /// Returns the word with its reducedness resolved.
    pub fn classify(&self, w: WeylWord) -> WeylWord {
        let reduced = if self.is_reduced(&w) {
            Reducedness::Yes
        } else {
            Reducedness::No
        };
        w.with_reduced(reduced)
    }

    pub fn element(&self, w: &WeylWord) -> WeylElement {
        let n = self.rank();
        let images = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                self.act(&w.letters, &mut e);
                e
            })
            .collect();
        WeylElement { images }
    }

    pub fn same_element(&self, a: &WeylWord, b: &WeylWord) -> bool {
        self.element(a) == self.element(b)
    }

    /// A reduced word for the same element, built by stripping right
    /// descents: if `w(α_i) < 0` then `w = (w s_i) s_i` with `ℓ(w s_i) = ℓ(w) - 1`.
    pub fn reduce(&self, w: &WeylWord) -> WeylWord {
        let n = self.rank();
        let mut images = self.element(w).images;
        let mut from_right = Vec::new();
        while let Some(i) = (0..n).find(|&i| is_negative(&images[i])) {
            // (w s_i)(α_j) = w(α_j) - <α_j, α_i^∨> w(α_i)
            let wi = images[i].clone();
            for (j, img) in images.iter_mut().enumerate() {
                let a = self.cartan()[j][i];
                if a != 0 {
                    for (x, y) in img.iter_mut().zip(&wi) {
                        *x -= a * y;
                    }
                }
            }
            from_right.push(i);
        }
        from_right.reverse();
        WeylWord {
            letters: from_right,
            reduced: Reducedness::Yes,
            system: self.id(),
        }
    }

    /// `N(σ_γ)`, computed by letting `ν ↦ ν - <ν, γ^∨> γ` act on every
    /// positive root. For long `γ` this must equal `Γ_γ ∪ {γ}`.
    pub fn reflection_inversions(&self, gamma: RootId) -> Result<RootSet> {
        let g = self.coeffs(gamma);
        let set = RootSet::from_ids(
            self,
            self.ids().filter(|&nu| {
                let k = self.pairing(nu, gamma);
                let img: Vec<i32> = self.coeffs(nu).iter().zip(g).map(|(a, b)| a - k * b).collect();
                is_negative(&img)
            }),
        );
        if self.is_long(gamma) {
            let mut expect = self.gamma_set(gamma);
            expect.insert(gamma);
            if expect != set {
                return Err(Error::Consistency(format!(
                    "N(s_γ) differs from Γ_γ ∪ {{γ}} for γ = {}",
                    self.format_root(gamma)
                )));
            }
        }
        Ok(set)
    }

    /// Depth of `γ`; equals its height in simply-laced systems.
    pub fn depth(&self, gamma: RootId) -> Result<i32> {
        if !self.is_simply_laced() {
            return Err(Error::Unsupported(format!(
                "depth is only implemented for simply-laced systems, not {}",
                self.name()
            )));
        }
        Ok(self.height(gamma))
    }

    /// The unique minimal-length `w` with `w(γ) = μ`, for `γ ⪰ μ` of equal
    /// length.
    ///
    /// Maintains a top root (starting at `γ`) and a bottom root (starting at
    /// `μ`). While they differ, take the lowest simple `α` with positive
    /// coefficient in `top - bottom` and `(top, α) > 0` and lower `top` by
    /// `s_α`; failing that, the lowest such `α` with `(bottom, α) < 0` and
    /// raise `bottom`. One of the two always exists. Short pairs are solved
    /// in the dual system, where they become long.
    pub fn shortest_transporter(&self, gamma: RootId, mu: RootId) -> Result<Transporter> {
        if !self.geq(gamma, mu) {
            return Err(Error::NotComparable {
                above: self.format_root(gamma),
                below: self.format_root(mu),
            });
        }
        let letters = if self.is_long(gamma) && self.is_long(mu) {
            let letters = self.greedy_transporter(self.coeffs(gamma), self.coeffs(mu))?;
            let expect = self.rho_pairing(gamma) - self.rho_pairing(mu);
            if letters.len() as i32 != expect {
                return Err(Error::Consistency(format!(
                    "transporter {} -> {} has length {}, expected {expect}",
                    self.format_root(gamma),
                    self.format_root(mu),
                    letters.len()
                )));
            }
            letters
        } else if self.is_short(gamma) && self.is_short(mu) {
            let dual = self.dual();
            let dg = dual.root_by_coeffs(&self.coroot_coeffs(gamma))?;
            let dm = dual.root_by_coeffs(&self.coroot_coeffs(mu))?;
            dual.shortest_transporter(dg, dm)?.word.letters
        } else {
            return Err(Error::LengthMismatch(
                self.format_root(gamma),
                self.format_root(mu),
            ));
        };

        let mut path = vec![gamma];
        let mut cur = self.coeffs(gamma).to_vec();
        for &i in letters.iter().rev() {
            self.reflect_simple(&mut cur, i);
            let id = self.find(&cur).ok_or_else(|| {
                Error::Consistency(format!("transporter path leaves Δ+ at {}", format_coeffs(&cur)))
            })?;
            path.push(id);
        }
        if *path.last().unwrap() != mu {
            return Err(Error::Consistency("transporter misses its target".into()));
        }
        let word = WeylWord {
            letters,
            reduced: Reducedness::Unknown,
            system: self.id(),
        };
        let word = self.classify(word);
        if word.reduced != Reducedness::Yes {
            return Err(Error::Consistency(format!("transporter word {word} is not reduced")));
        }
        Ok(Transporter {
            word,
            source: gamma,
            target: mu,
            path,
        })
    }

    fn greedy_transporter(&self, gamma: &[i32], mu: &[i32]) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut top = gamma.to_vec();
        let mut bottom = mu.to_vec();
        let mut descents = Vec::new();
        let mut ascents = Vec::new();
        while top != bottom {
            let diff: Vec<i32> = top.iter().zip(&bottom).map(|(a, b)| a - b).collect();
            if let Some(i) = (0..n).find(|&i| diff[i] > 0 && self.simple_pairing(&top, i) > 0) {
                self.reflect_simple(&mut top, i);
                descents.push(i);
            } else if let Some(i) =
                (0..n).find(|&i| diff[i] > 0 && self.simple_pairing(&bottom, i) < 0)
            {
                self.reflect_simple(&mut bottom, i);
                ascents.push(i);
            } else {
                return Err(Error::Consistency(format!(
                    "no descent or ascent between {} and {}",
                    format_coeffs(&top),
                    format_coeffs(&bottom)
                )));
            }
        }
        // μ = s_{b1} ... s_{bq} s_{ap} ... s_{a1} (γ)
        descents.reverse();
        ascents.extend(descents);
        Ok(ascents)
    }

    /// `N(w_{θ,μ}^{-1}) = {ν ∈ Δ+ : <ν, μ^∨> = -1}`, cross-checked against
    /// the inversion set of the inverted transporter.
    pub fn transporter_inverse_inversions(&self, mu: RootId) -> Result<RootSet> {
        if !self.is_long(mu) {
            return Err(Error::Precondition(format!(
                "{} is not a long root",
                self.format_root(mu)
            )));
        }
        let direct = RootSet::from_ids(self, self.ids().filter(|&nu| self.pairing(nu, mu) == -1));
        let t = self.shortest_transporter(self.highest_root(), mu)?;
        let via_word = self.inversion_set(&t.word.inverse());
        if via_word != direct {
            return Err(Error::Consistency(format!(
                "N(w_θ,μ^-1) mismatch for μ = {}",
                self.format_root(mu)
            )));
        }
        Ok(direct)
    }

    /// Commutativity test by pairwise non-negative scalar products on `N(w)`.
    pub fn is_commutative(&self, w: &WeylWord) -> Result<bool> {
        self.check_word(w)?;
        if !self.is_simply_laced() {
            return Err(Error::Unsupported(format!(
                "commutativity is only decided for simply-laced systems, not {}",
                self.name()
            )));
        }
        let inv = self.inversion_set(w).to_vec();
        Ok(inv.iter().enumerate().all(|(k, &a)| {
            inv[k + 1..]
                .iter()
                .all(|&b| self.inner(self.coeffs(a), self.coeffs(b)) >= 0)
        }))
    }

    /// `ℓ(w'^{-1} w) = ℓ(w) - ℓ(w')`.
    pub fn is_left_factor(&self, w_prime: &WeylWord, w: &WeylWord) -> Result<bool> {
        self.check_word(w_prime)?;
        self.check_word(w)?;
        let quotient = w_prime.inverse().compose(w)?;
        let (lq, lw, lp) = (self.length(&quotient), self.length(w), self.length(w_prime));
        Ok(lw >= lp && lq == lw - lp)
    }

    /// Every root of `lower` lies below some root of `upper`.
    pub fn located_below(&self, lower: &RootSet, upper: &RootSet) -> bool {
        lower
            .iter()
            .all(|a| upper.iter().any(|b| self.geq(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, Labeling};

    fn sys(kind: CartanType, rank: usize) -> RootSystem {
        RootSystem::new(kind, rank, Labeling::VinbergOnishchik).unwrap()
    }

    #[test]
    fn identity_and_simple_reflection() {
        let rs = sys(CartanType::B, 3);
        let e = WeylWord::identity(&rs);
        for g in rs.ids() {
            assert_eq!(rs.apply_root(&e, g), rs.coeffs(g));
        }
        assert!(rs.inversion_set(&e).is_empty());
        for i in 0..3 {
            let s = WeylWord::new(&rs, vec![i]).unwrap();
            let a = rs.simple_root(i).unwrap();
            let img = rs.apply_root(&s, a);
            assert!(img.iter().zip(rs.coeffs(a)).all(|(x, y)| *x == -y));
            assert_eq!(rs.inversion_set(&s).to_vec(), vec![a]);
        }
    }

    #[test]
    fn coxeter_word_sends_theta_to_minus_alpha1() {
        for n in 2..=6 {
            let rs = sys(CartanType::A, n);
            let w = WeylWord::new(&rs, (0..n).collect()).unwrap();
            let mut expect = vec![0; n];
            expect[0] = -1;
            assert_eq!(rs.apply_root(&w, rs.highest_root()), expect);
        }
    }

    #[test]
    fn reduce_examples() {
        let rs = sys(CartanType::A, 2);
        let ss = WeylWord::from_one_based(&rs, &[1, 1]).unwrap();
        assert!(rs.reduce(&ss).is_empty());
        let a = WeylWord::from_one_based(&rs, &[1, 2, 1]).unwrap();
        let b = WeylWord::from_one_based(&rs, &[2, 1, 2]).unwrap();
        assert!(rs.same_element(&a, &b));
        assert_eq!(rs.reduce(&a).len(), 3);
        assert!(rs.same_element(&rs.reduce(&a), &a));
    }

    #[test]
    fn word_formatting_round_trip() {
        let rs = sys(CartanType::F, 4);
        let w = WeylWord::parse(&rs, "s3 s2 s3 s4").unwrap();
        assert_eq!(w.letters(), &[2, 1, 2, 3]);
        assert_eq!(w.to_string(), "s3 s2 s3 s4");
        assert_eq!(WeylWord::identity(&rs).to_string(), "e");
        assert!(WeylWord::parse(&rs, "s5").is_err());
    }

    #[test]
    fn f4_transporter_matches_known_word() {
        let rs = sys(CartanType::F, 4);
        let mu = rs.root_by_coeffs(&[2, 2, 1, 1]).unwrap();
        let t = rs.shortest_transporter(rs.highest_root(), mu).unwrap();
        assert_eq!(t.word.len(), 4);
        let known = WeylWord::from_one_based(&rs, &[3, 2, 3, 4]).unwrap();
        assert!(rs.same_element(&t.word, &known));
        assert_eq!(t.path.len(), 5);
        assert_eq!(t.path[0], rs.highest_root());
        assert_eq!(*t.path.last().unwrap(), mu);
    }

    #[test]
    fn type_a_transporter_to_alpha1() {
        let rs = sys(CartanType::A, 5);
        let a1 = rs.simple_root(0).unwrap();
        let t = rs.shortest_transporter(rs.highest_root(), a1).unwrap();
        let known = WeylWord::from_one_based(&rs, &[2, 3, 4, 5]).unwrap();
        assert!(rs.same_element(&t.word, &known));
        let trivial = rs.shortest_transporter(a1, a1).unwrap();
        assert!(trivial.word.is_empty());
    }

    #[test]
    fn transporter_errors() {
        let rs = sys(CartanType::B, 3);
        let a1 = rs.simple_root(0).unwrap();
        let a3 = rs.simple_root(2).unwrap();
        assert!(matches!(
            rs.shortest_transporter(a1, a3),
            Err(Error::NotComparable { .. })
        ));
        let above = rs.root_by_coeffs(&[1, 1, 1]).unwrap();
        assert!(rs.is_short(above));
        assert!(matches!(
            rs.shortest_transporter(above, a1),
            Err(Error::LengthMismatch(..))
        ));
    }

    #[test]
    fn short_transporter_via_dual() {
        let rs = sys(CartanType::B, 3);
        let a3 = rs.simple_root(2).unwrap();
        let g = rs.root_by_coeffs(&[1, 1, 1]).unwrap();
        let t = rs.shortest_transporter(g, a3).unwrap();
        assert_eq!(t.word.len() as i32, rs.height(g) - 1);
        assert_eq!(rs.apply_root(&t.word, g), rs.coeffs(a3));
    }

    #[test]
    fn inverse_inversion_examples() {
        let a2 = sys(CartanType::A, 2);
        let a1 = a2.simple_root(0).unwrap();
        let a2s = a2.simple_root(1).unwrap();
        assert_eq!(a2.transporter_inverse_inversions(a1).unwrap().to_vec(), vec![a2s]);
        assert!(a2
            .transporter_inverse_inversions(a2.highest_root())
            .unwrap()
            .is_empty());
        let e6 = sys(CartanType::E, 6);
        let hat = e6.simple_root(5).unwrap();
        assert_eq!(e6.transporter_inverse_inversions(hat).unwrap().len(), 10);
    }

    #[test]
    fn reflection_inversions_examples() {
        let a3 = sys(CartanType::A, 3);
        let n = a3.reflection_inversions(a3.highest_root()).unwrap();
        let a2 = a3.simple_root(1).unwrap();
        assert_eq!(n.len(), 5);
        assert!(!n.contains(a2));
        assert_eq!(a3.reflection_inversions(a2).unwrap().to_vec(), vec![a2]);
    }

    #[test]
    fn commutativity() {
        let a2 = sys(CartanType::A, 2);
        let w0 = WeylWord::from_one_based(&a2, &[1, 2, 1]).unwrap();
        assert!(!a2.is_commutative(&w0).unwrap());
        assert!(a2.is_commutative(&WeylWord::identity(&a2)).unwrap());
        let b2 = sys(CartanType::B, 2);
        assert!(matches!(
            b2.is_commutative(&WeylWord::identity(&b2)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn depth_in_simply_laced_only() {
        let e8 = sys(CartanType::E, 8);
        assert_eq!(e8.depth(e8.highest_root()).unwrap(), 29);
        let d4 = sys(CartanType::D, 4);
        assert_eq!(d4.depth(d4.highest_root()).unwrap(), 5);
        let g2 = sys(CartanType::G, 2);
        assert!(g2.depth(g2.highest_root()).is_err());
    }

    #[test]
    fn left_factor_and_located_below() {
        let rs = sys(CartanType::D, 5);
        let e = WeylWord::identity(&rs);
        let t = rs.highest_root();
        let a = rs.simple_root(0).unwrap();
        let w = rs.shortest_transporter(t, a).unwrap().word;
        assert!(rs.is_left_factor(&e, &w).unwrap());
        let mid = rs.shortest_transporter(t, a).unwrap().path[3];
        let lower = rs.shortest_transporter(mid, a).unwrap().word;
        assert!(rs.is_left_factor(&lower, &w).unwrap());
        assert!(rs.located_below(&rs.inversion_set(&lower), &rs.inversion_set(&w)));
    }
}
