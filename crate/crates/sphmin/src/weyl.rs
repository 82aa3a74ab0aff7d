//! Exact root systems and Weyl groups.
//!
//! Weights live in fundamental-weight coordinates, so the pairing
//! `<λ, αᵢ∨>` is a plain coordinate read and simple roots are the
//! columns of the Cartan matrix.  Weyl elements carry their integer
//! action on the weight lattice plus a canonical reduced word obtained
//! by greedy smallest-descent stripping.  All arithmetic is over
//! arbitrary-precision integers.

use crate::{int, Int, IntMatrix};
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("Weyl group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
}

/// Supported Cartan types.  `Product` concatenates blocks with simple
/// indices offset, which is how the diagonal pairs are represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    F4,
    G2,
    Product(Vec<TypeLabel>),
}

impl TypeLabel {
    pub fn rank(&self) -> usize {
        match self {
            TypeLabel::A(m) | TypeLabel::B(m) | TypeLabel::C(m) | TypeLabel::D(m) => *m,
            TypeLabel::E6 => 6,
            TypeLabel::F4 => 4,
            TypeLabel::G2 => 2,
            TypeLabel::Product(parts) => parts.iter().map(TypeLabel::rank).sum(),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match self {
            TypeLabel::A(m) => m * (m + 1) / 2,
            TypeLabel::B(m) | TypeLabel::C(m) => m * m,
            TypeLabel::D(m) => m * (m - 1),
            TypeLabel::E6 => 36,
            TypeLabel::F4 => 24,
            TypeLabel::G2 => 6,
            TypeLabel::Product(parts) => parts.iter().map(TypeLabel::positive_root_count).sum(),
        }
    }

    pub fn weyl_order(&self) -> u128 {
        fn fact(m: u128) -> u128 {
            (1..=m).product()
        }
        match self {
            TypeLabel::A(m) => fact(*m as u128 + 1),
            TypeLabel::B(m) | TypeLabel::C(m) => (1u128 << m) * fact(*m as u128),
            TypeLabel::D(m) => (1u128 << (m - 1)) * fact(*m as u128),
            TypeLabel::E6 => 51840,
            TypeLabel::F4 => 1152,
            TypeLabel::G2 => 12,
            TypeLabel::Product(parts) => parts.iter().map(TypeLabel::weyl_order).product(),
        }
    }

    /// Cartan matrix with the convention `a[i][j] = <α_j, α_i∨>`, so
    /// column `j` is the fundamental-weight coordinate vector of `α_j`.
    fn cartan_rows(&self) -> Vec<Vec<i64>> {
        fn chain(m: usize) -> Vec<Vec<i64>> {
            let mut a = vec![vec![0; m]; m];
            for i in 0..m {
                a[i][i] = 2;
                if i + 1 < m {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
            }
            a
        }
        match self {
            TypeLabel::A(m) => chain(*m),
            TypeLabel::B(m) => {
                assert!(*m >= 2, "B requires rank >= 2");
                let mut a = chain(*m);
                a[m - 1][m - 2] = -2;
                a
            }
            TypeLabel::C(m) => {
                assert!(*m >= 2, "C requires rank >= 2");
                let mut a = chain(*m);
                a[m - 2][m - 1] = -2;
                a
            }
            TypeLabel::D(m) => {
                assert!(*m >= 3, "D requires rank >= 3");
                let mut a = chain(*m);
                // detach the last chain edge, fork nodes m-1 and m off node m-2
                a[m - 2][m - 1] = 0;
                a[m - 1][m - 2] = 0;
                a[m - 3][m - 1] = -1;
                a[m - 1][m - 3] = -1;
                a
            }
            TypeLabel::E6 => {
                let mut a = vec![vec![0; 6]; 6];
                for i in 0..6 {
                    a[i][i] = 2;
                }
                for &(i, j) in &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
                    a[i - 1][j - 1] = -1;
                    a[j - 1][i - 1] = -1;
                }
                a
            }
            TypeLabel::F4 => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            TypeLabel::G2 => vec![vec![2, -3], vec![-1, 2]],
            TypeLabel::Product(parts) => {
                let rank = self.rank();
                let mut a = vec![vec![0; rank]; rank];
                let mut off = 0;
                for p in parts {
                    let block = p.cartan_rows();
                    let r = p.rank();
                    for i in 0..r {
                        for j in 0..r {
                            a[off + i][off + j] = block[i][j];
                        }
                    }
                    off += r;
                }
                a
            }
        }
    }
}

/// One root, stored both in fundamental-weight and in simple-root
/// coordinates, together with a witness `(word, j)` expressing it as
/// `s_word · α_j` (used to form reflections and coroot pairings).
#[derive(Debug, Clone)]
pub struct Root {
    pub fw: Vec<Int>,
    pub simple: Vec<Int>,
    pub positive: bool,
    witness: (Vec<usize>, usize),
}

#[derive(Debug)]
pub struct RootSystemData {
    pub label: TypeLabel,
    pub rank: usize,
    pub cartan: IntMatrix,
    simple_reflections: Vec<IntMatrix>,
    roots: Vec<Root>,
    root_index: HashMap<Vec<Int>, usize>,
    longest: OnceLock<(IntMatrix, Vec<usize>)>,
}

impl PartialEq for RootSystemData {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
    }
}

pub type System = Arc<RootSystemData>;

impl RootSystemData {
    pub fn new(label: TypeLabel) -> System {
        let rank = label.rank();
        let rows = label.cartan_rows();
        let cartan = IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        );
        for i in 0..rank {
            assert_eq!(cartan[(i, i)], int(2));
            for j in 0..rank {
                assert!(i == j || cartan[(i, j)] <= int(0));
            }
        }

        // Reflection s_i acts on fw-coordinates as I - (column i) e_i^T.
        let simple_reflections: Vec<IntMatrix> = (0..rank)
            .map(|i| {
                let mut m = IntMatrix::identity(rank);
                for r in 0..rank {
                    m[(r, i)] = m[(r, i)].clone() - cartan[(r, i)].clone();
                }
                m
            })
            .collect();

        // Roots as the Weyl orbit of the simple roots.
        let mut roots: Vec<Root> = Vec::new();
        let mut root_index: HashMap<Vec<Int>, usize> = HashMap::new();
        for j in 0..rank {
            let fw: Vec<Int> = (0..rank).map(|r| cartan[(r, j)].clone()).collect();
            let mut simple = vec![Int::zero(); rank];
            simple[j] = int(1);
            root_index.insert(fw.clone(), roots.len());
            roots.push(Root {
                fw,
                simple,
                positive: true,
                witness: (Vec::new(), j),
            });
        }
        let mut head = 0;
        while head < roots.len() {
            for i in 0..rank {
                let (fw, simple, witness) = {
                    let beta = &roots[head];
                    let pairing = beta.fw[i].clone();
                    if pairing.is_zero() {
                        continue;
                    }
                    let fw: Vec<Int> = (0..rank)
                        .map(|r| beta.fw[r].clone() - pairing.clone() * cartan[(r, i)].clone())
                        .collect();
                    let mut simple = beta.simple.clone();
                    simple[i] = simple[i].clone() - pairing;
                    let mut word = vec![i + 1];
                    word.extend_from_slice(&beta.witness.0);
                    (fw, simple, (word, beta.witness.1))
                };
                if root_index.contains_key(&fw) {
                    continue;
                }
                let pos = simple.iter().all(|c| !c.is_negative());
                let neg = simple.iter().all(|c| !c.is_positive());
                assert!(pos ^ neg, "root with mixed simple coordinates");
                root_index.insert(fw.clone(), roots.len());
                roots.push(Root {
                    fw,
                    simple,
                    positive: pos,
                    witness,
                });
            }
            head += 1;
        }
        assert_eq!(
            roots.iter().filter(|r| r.positive).count(),
            label.positive_root_count(),
            "positive root count mismatch for {label:?}"
        );
        assert_eq!(roots.len(), 2 * label.positive_root_count());

        Arc::new(RootSystemData {
            label,
            rank,
            cartan,
            simple_reflections,
            roots,
            root_index,
            longest: OnceLock::new(),
        })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &Root)> {
        self.roots.iter().enumerate().filter(|(_, r)| r.positive)
    }

    pub fn root_lookup(&self, fw: &[Int]) -> Option<usize> {
        self.root_index.get(fw).copied()
    }

    pub fn is_positive_root(&self, fw: &[Int]) -> bool {
        self.root_lookup(fw)
            .map(|i| self.roots[i].positive)
            .unwrap_or(false)
    }

    pub fn is_negative_root(&self, fw: &[Int]) -> bool {
        self.root_lookup(fw)
            .map(|i| !self.roots[i].positive)
            .unwrap_or(false)
    }

    /// Simple root `α_i` (1-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Vec<Int> {
        assert!((1..=self.rank).contains(&i), "simple index {i} out of range");
        (0..self.rank).map(|r| self.cartan[(r, i - 1)].clone()).collect()
    }

    fn simple_reflection(&self, i: usize) -> &IntMatrix {
        assert!((1..=self.rank).contains(&i), "simple index {i} out of range");
        &self.simple_reflections[i - 1]
    }

    /// Pairing `<β, γ∨>` between two roots given by index.
    pub fn root_coroot_pairing(self: &System, beta: usize, gamma: usize) -> Int {
        let (word, j) = self.roots[gamma].witness.clone();
        // γ = w·α_j, so <β, γ∨> = <w⁻¹β, α_j∨>.
        let w = WeylElem::from_word(self, &word);
        let beta_back = w.inverse().act_fw(&self.roots[beta].fw);
        beta_back[j].clone()
    }

    /// Reflection in an arbitrary root, as a lattice action.
    pub fn reflection_in_root(self: &System, root: usize) -> WeylElem {
        let (word, j) = self.roots[root].witness.clone();
        let w = WeylElem::from_word(self, &word);
        let s = WeylElem::simple(self, j + 1);
        w.compose(&s).compose(&w.inverse())
    }

    fn longest_data<'a>(self: &'a System) -> &'a (IntMatrix, Vec<usize>) {
        self.longest.get_or_init(|| {
            let mut w = WeylElem::identity(self);
            'outer: loop {
                for i in 1..=self.rank {
                    if self.is_positive_root(&w.action.mul_vec(&self.simple_root(i))) {
                        w = w.compose(&WeylElem::simple(self, i));
                        continue 'outer;
                    }
                }
                break;
            }
            assert_eq!(w.length(), self.label.positive_root_count());
            (w.action.clone(), w.word.clone())
        })
    }
}

/// Longest element `w₀`.
pub fn longest_element(sys: &System) -> WeylElem {
    let (action, word) = sys.longest_data().clone();
    WeylElem {
        sys: sys.clone(),
        action,
        word,
    }
}

/// A weight in fundamental-weight coordinates: `coords[i]` is the
/// pairing with the `(i+1)`-th simple coroot.
#[derive(Clone)]
pub struct Weight {
    pub coords: Vec<Int>,
    pub sys: System,
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}
impl Eq for Weight {}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl Weight {
    pub fn new(sys: &System, coords: Vec<Int>) -> Self {
        assert_eq!(coords.len(), sys.rank);
        Self {
            coords,
            sys: sys.clone(),
        }
    }

    pub fn zero(sys: &System) -> Self {
        Self::new(sys, vec![Int::zero(); sys.rank])
    }

    pub fn fundamental(sys: &System, i: usize) -> Self {
        assert!((1..=sys.rank).contains(&i), "simple index {i} out of range");
        let mut coords = vec![Int::zero(); sys.rank];
        coords[i - 1] = int(1);
        Self::new(sys, coords)
    }

    /// `<λ, αᵢ∨>`, a plain coordinate read (1-based index).
    pub fn pairing(&self, i: usize) -> Int {
        assert!(
            (1..=self.sys.rank).contains(&i),
            "simple index {i} out of range"
        );
        self.coords[i - 1].clone()
    }

    /// `sᵢ(λ) = λ − <λ, αᵢ∨> αᵢ`.
    pub fn reflect(&self, i: usize) -> Weight {
        let c = self.pairing(i);
        let alpha = self.sys.simple_root(i);
        let coords = self
            .coords
            .iter()
            .zip(&alpha)
            .map(|(x, a)| x.clone() - c.clone() * a.clone())
            .collect();
        Weight::new(&self.sys, coords)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `λ* = −w₀ λ`.
    pub fn star(&self) -> Weight {
        let w0 = longest_element(&self.sys);
        let mut coords = w0.action.mul_vec(&self.coords);
        for c in &mut coords {
            *c = -c.clone();
        }
        Weight::new(&self.sys, coords)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Weight::new(&self.sys, coords)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Weight::new(&self.sys, coords)
    }

    pub fn scale(&self, k: &Int) -> Weight {
        Weight::new(
            &self.sys,
            self.coords.iter().map(|c| c.clone() * k.clone()).collect(),
        )
    }
}

/// Weyl group element: an integer lattice action plus the canonical
/// (greedy smallest-descent) reduced word, 1-based simple indices.
#[derive(Clone)]
pub struct WeylElem {
    pub sys: System,
    action: IntMatrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElem {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}
impl Eq for WeylElem {}

impl std::hash::Hash for WeylElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.s_word_string())
    }
}

impl WeylElem {
    pub fn identity(sys: &System) -> Self {
        Self {
            sys: sys.clone(),
            action: IntMatrix::identity(sys.rank),
            word: Vec::new(),
        }
    }

    pub fn simple(sys: &System, i: usize) -> Self {
        Self {
            sys: sys.clone(),
            action: sys.simple_reflection(i).clone(),
            word: vec![i],
        }
    }

    /// Product `s_{word[0]} s_{word[1]} ⋯` (left-to-right), then
    /// recanonicalized.
    pub fn from_word(sys: &System, word: &[usize]) -> Self {
        let mut action = IntMatrix::identity(sys.rank);
        for &i in word {
            action = action.mul(sys.simple_reflection(i));
        }
        Self::from_action(sys, action)
    }

    pub fn from_action(sys: &System, action: IntMatrix) -> Self {
        let word = canonical_word_of_action(sys, &action);
        Self {
            sys: sys.clone(),
            action,
            word,
        }
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    /// The canonical reduced word, as 1-based simple indices in
    /// product order.
    pub fn reduced_word(&self) -> &[usize] {
        &self.word
    }

    pub fn s_word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem::from_action(&self.sys, self.action.mul(&other.action))
    }

    pub fn inverse(&self) -> WeylElem {
        let mut action = IntMatrix::identity(self.sys.rank);
        for &i in self.word.iter().rev() {
            action = action.mul(self.sys.simple_reflection(i));
        }
        WeylElem::from_action(&self.sys, action)
    }

    pub fn act(&self, w: &Weight) -> Weight {
        Weight::new(&self.sys, self.action.mul_vec(&w.coords))
    }

    pub fn act_fw(&self, fw: &[Int]) -> Vec<Int> {
        self.action.mul_vec(fw)
    }

    /// Image of a root under the action; panics if the input is not a
    /// root (cannot happen for genuine Weyl actions).
    pub fn act_on_root(&self, root: usize) -> usize {
        let fw = self.action.mul_vec(&self.sys.roots[root].fw);
        self.sys
            .root_lookup(&fw)
            .expect("Weyl action must permute the roots")
    }

    /// Inversion count `#{β ∈ Φ⁺ : w·β ∈ Φ⁻}`.
    pub fn length(&self) -> usize {
        length_of_action(&self.sys, &self.action)
    }

    /// `ℓ(y⁻¹ w y)`: the length of `w` relative to the base `yΔ`.
    pub fn twisted_length(&self, y: &WeylElem) -> usize {
        let m = y.inverse().action.mul(&self.action).mul(&y.action);
        length_of_action(&self.sys, &m)
    }
}

/// `ℓ(y⁻¹vw y) = ℓ(y⁻¹v y) + ℓ(y⁻¹w y)`?
pub fn twisted_length_additive(v: &WeylElem, w: &WeylElem, y: &WeylElem) -> bool {
    v.compose(w).twisted_length(y) == v.twisted_length(y) + w.twisted_length(y)
}

fn length_of_action(sys: &System, action: &IntMatrix) -> usize {
    sys.positive_roots()
        .filter(|(_, r)| sys.is_negative_root(&action.mul_vec(&r.fw)))
        .count()
}

/// Greedy smallest-descent word extraction: repeatedly strip the
/// smallest `i` with `w·αᵢ ∈ Φ⁻`.
fn canonical_word_of_action(sys: &System, action: &IntMatrix) -> Vec<usize> {
    try_canonical_word(sys, action).expect("matrix is not a Weyl lattice action")
}

/// Fallible variant of the greedy word extraction; returns `None` when
/// the matrix is not the lattice action of a Weyl group element.
pub fn try_canonical_word(sys: &System, action: &IntMatrix) -> Option<Vec<usize>> {
    if !action.is_square() || action.rows() != sys.rank {
        return None;
    }
    let mut m = action.clone();
    let mut stripped = Vec::new();
    let max = sys.label.positive_root_count();
    while !m.is_identity() {
        if stripped.len() > max {
            return None;
        }
        let i = (1..=sys.rank)
            .find(|&i| sys.is_negative_root(&m.mul_vec(&sys.simple_root(i))))?;
        stripped.push(i);
        m = m.mul(sys.simple_reflection(i));
    }
    stripped.reverse();
    Some(stripped)
}

/// Greedy largest-descent variant; used as an independent reduced word
/// when checking braid invariance of lifted representatives.
pub fn alternative_reduced_word(w: &WeylElem) -> Vec<usize> {
    let sys = &w.sys;
    let mut m = w.action.clone();
    let mut stripped = Vec::new();
    while !m.is_identity() {
        let i = (1..=sys.rank)
            .rev()
            .find(|&i| sys.is_negative_root(&m.mul_vec(&sys.simple_root(i))))
            .expect("matrix is not a Weyl lattice action");
        stripped.push(i);
        m = m.mul(sys.simple_reflection(i));
    }
    stripped.reverse();
    stripped
}

/// Is `word` a reduced expression?
pub fn is_reduced(sys: &System, word: &[usize]) -> bool {
    WeylElem::from_word(sys, word).length() == word.len()
}

/// Every element exactly once, in breadth-first order by length.
/// Refuses groups larger than `cap`.
pub fn enumerate_weyl(sys: &System, cap: u128) -> Result<Vec<WeylElem>, WeylError> {
    let order = sys.label.weyl_order();
    if order > cap {
        return Err(WeylError::CapExceeded { order, cap });
    }
    let mut all: Vec<WeylElem> = vec![WeylElem::identity(sys)];
    let mut seen: HashMap<IntMatrix, ()> = HashMap::new();
    seen.insert(all[0].action.clone(), ());
    let mut level: Vec<usize> = vec![0];
    let mut len = 0usize;
    while !level.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for &idx in &level {
            for i in 1..=sys.rank {
                let parent = &all[idx];
                // right descent test: w·αᵢ ∈ Φ⁺ means length grows
                if !sys.is_positive_root(&parent.action.mul_vec(&sys.simple_root(i))) {
                    continue;
                }
                let action = parent.action.mul(sys.simple_reflection(i));
                if seen.contains_key(&action) {
                    continue;
                }
                seen.insert(action.clone(), ());
                let elem = WeylElem::from_action(sys, action);
                debug_assert_eq!(elem.length(), len);
                next.push(all.len());
                all.push(elem);
            }
        }
        level = next;
    }
    assert_eq!(all.len() as u128, order);
    Ok(all)
}

/// One-line permutation of `w` in a type-A system: `w·εᵢ = ε_{p[i-1]}`
/// with 1-based images.
pub fn a_type_permutation(w: &WeylElem) -> Vec<usize> {
    let sys = &w.sys;
    let m = match sys.label {
        TypeLabel::A(m) => m,
        _ => panic!("permutation extraction requires a type-A system"),
    };
    let eps: Vec<Vec<Int>> = (0..=m)
        .map(|i| {
            // ε_{i+1} = ϖ_{i+1} − ϖ_i (with ϖ_0 = ϖ_{m+1} = 0)
            let mut v = vec![Int::zero(); m];
            if i < m {
                v[i] = v[i].clone() + int(1);
            }
            if i > 0 {
                v[i - 1] = v[i - 1].clone() - int(1);
            }
            v
        })
        .collect();
    (0..=m)
        .map(|i| {
            let img = w.action.mul_vec(&eps[i]);
            1 + eps
                .iter()
                .position(|e| *e == img)
                .expect("image of a coordinate character must be one")
        })
        .collect()
}

/// Builds the type-A element with the given one-line permutation
/// (1-based images).
pub fn a_type_from_permutation(sys: &System, perm: &[usize]) -> WeylElem {
    match sys.label {
        TypeLabel::A(m) => assert_eq!(perm.len(), m + 1),
        _ => panic!("permutation construction requires a type-A system"),
    }
    let mut p = perm.to_vec();
    let mut stripped = Vec::new();
    loop {
        match (0..p.len() - 1).find(|&i| p[i] > p[i + 1]) {
            Some(i) => {
                stripped.push(i + 1);
                p.swap(i, i + 1);
            }
            None => break,
        }
    }
    stripped.reverse();
    let w = WeylElem::from_word(sys, &stripped);
    debug_assert_eq!(a_type_permutation(&w), perm);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn sys_a3() -> System {
        RootSystemData::new(TypeLabel::A(3))
    }

    fn random_elem(sys: &System, rng: &mut SplitMix64, len: usize) -> WeylElem {
        let word: Vec<usize> = (0..len).map(|_| 1 + rng.below(sys.rank)).collect();
        WeylElem::from_word(sys, &word)
    }

    #[test]
    fn pairing_examples() {
        let sys = sys_a3();
        let w1 = Weight::fundamental(&sys, 1);
        assert_eq!(w1.pairing(1), int(1));
        let alpha2 = Weight::new(&sys, sys.simple_root(2));
        assert_eq!(alpha2.pairing(1), int(-1));
        // −w₀ permutes the fundamental weights of A3 by i ↦ 4−i
        let w2_star = Weight::fundamental(&sys, 2).star();
        assert_eq!(w2_star.pairing(2), int(1));
    }

    #[test]
    fn reflect_examples() {
        let sys = sys_a3();
        let w1 = Weight::fundamental(&sys, 1);
        let alpha1 = Weight::new(&sys, sys.simple_root(1));
        assert_eq!(w1.reflect(1), w1.sub(&alpha1));
        assert_eq!(w1.reflect(2), w1);
        let alpha2 = Weight::new(&sys, sys.simple_root(2));
        assert_eq!(
            alpha2.reflect(2),
            Weight::zero(&sys).sub(&alpha2),
            "a reflection negates its own root"
        );
    }

    #[test]
    fn length_examples() {
        let sys = sys_a3();
        assert_eq!(WeylElem::identity(&sys).length(), 0);
        assert_eq!(longest_element(&sys).length(), 6);
        let y = WeylElem::from_word(&sys, &[3, 2]);
        assert_eq!(y.length(), 2);
        assert_eq!(y.reduced_word(), &[3, 2]);
    }

    #[test]
    fn twisted_length_examples() {
        let sys = sys_a3();
        let y = WeylElem::from_word(&sys, &[3, 2]);
        assert_eq!(WeylElem::identity(&sys).twisted_length(&y), 0);
        let tau2 = y.compose(&WeylElem::simple(&sys, 2)).compose(&y.inverse());
        assert_eq!(tau2.twisted_length(&y), 1);
        // τ₂τ₃τ₁τ₂ conjugates back to s₂s₃s₁s₂; oracle below counts the
        // inversions of its one-line permutation [3,4,1,2] directly.
        let hw = y
            .compose(&WeylElem::from_word(&sys, &[2, 3, 1, 2]))
            .compose(&y.inverse());
        let conj = WeylElem::from_word(&sys, &[2, 3, 1, 2]);
        let perm = a_type_permutation(&conj);
        assert_eq!(perm, vec![3, 4, 1, 2]);
        let mut inversions = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        assert_eq!(inversions, 4);
        assert_eq!(hw.twisted_length(&y), 4);
    }

    #[test]
    fn enumerate_small_groups() {
        let a1 = RootSystemData::new(TypeLabel::A(1));
        let elems = enumerate_weyl(&a1, 1000).unwrap();
        assert_eq!(elems.len(), 2);
        assert!(elems[0].is_identity());
        assert_eq!(elems[1].length(), 1);

        let a3 = sys_a3();
        assert_eq!(enumerate_weyl(&a3, 1000).unwrap().len(), 24);
    }

    #[test]
    fn enumerate_d4_matches_signed_permutation_count() {
        // Independent oracle: W(D4) is the group of signed 4x4
        // permutation matrices with an even number of sign flips.
        fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                permutations(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let mut perms = Vec::new();
        permutations(&mut vec![0, 1, 2, 3], 0, &mut perms);
        let mut signed = std::collections::HashSet::new();
        for p in &perms {
            for signs in 0..16u32 {
                if signs.count_ones() % 2 == 0 {
                    signed.insert((p.clone(), signs));
                }
            }
        }
        assert_eq!(signed.len(), 192);

        let d4 = RootSystemData::new(TypeLabel::D(4));
        assert_eq!(enumerate_weyl(&d4, 1000).unwrap().len(), signed.len());
    }

    #[test]
    fn cap_exceeded() {
        let a3 = sys_a3();
        assert!(matches!(
            enumerate_weyl(&a3, 10),
            Err(WeylError::CapExceeded { order: 24, cap: 10 })
        ));
    }

    #[test]
    fn word_roundtrip_and_triangle_inequality() {
        let mut rng = SplitMix64::new(42);
        for label in [
            TypeLabel::A(3),
            TypeLabel::B(3),
            TypeLabel::C(3),
            TypeLabel::D(4),
            TypeLabel::E6,
            TypeLabel::F4,
            TypeLabel::G2,
        ] {
            let sys = RootSystemData::new(label);
            for _ in 0..1000 {
                let v = random_elem(&sys, &mut rng, 10);
                let w = random_elem(&sys, &mut rng, 10);
                // replaying the canonical word reproduces the action
                let replay = WeylElem::from_word(&sys, v.reduced_word());
                assert_eq!(replay, v);
                assert_eq!(v.reduced_word().len(), v.length());
                let vw = v.compose(&w);
                assert!(vw.length() <= v.length() + w.length());
                assert_eq!((vw.length() + v.length() + w.length()) % 2, 0);
            }
        }
    }

    #[test]
    fn action_permutes_roots() {
        let mut rng = SplitMix64::new(7);
        for label in [
            TypeLabel::A(3),
            TypeLabel::B(3),
            TypeLabel::C(3),
            TypeLabel::D(4),
            TypeLabel::E6,
            TypeLabel::F4,
            TypeLabel::G2,
        ] {
            let sys = RootSystemData::new(label);
            for _ in 0..1000 {
                let w = random_elem(&sys, &mut rng, 8);
                let mut images: Vec<usize> =
                    (0..sys.roots().len()).map(|r| w.act_on_root(r)).collect();
                images.sort_unstable();
                images.dedup();
                assert_eq!(images.len(), sys.roots().len());
            }
        }
    }

    #[test]
    fn longest_element_involution_and_negation() {
        for label in [
            TypeLabel::A(4),
            TypeLabel::B(3),
            TypeLabel::C(3),
            TypeLabel::D(4),
            TypeLabel::E6,
            TypeLabel::F4,
            TypeLabel::G2,
        ] {
            let sys = RootSystemData::new(label);
            let w0 = longest_element(&sys);
            assert!(w0.compose(&w0).is_identity());
            for i in 1..=sys.rank {
                let img = w0.act_fw(&sys.simple_root(i));
                assert!(sys.is_negative_root(&img));
            }
        }
    }

    #[test]
    fn product_system_blocks() {
        let sys = RootSystemData::new(TypeLabel::Product(vec![TypeLabel::A(2), TypeLabel::A(2)]));
        assert_eq!(sys.rank, 4);
        assert_eq!(sys.label.positive_root_count(), 6);
        assert_eq!(enumerate_weyl(&sys, 1000).unwrap().len(), 36);
        // blocks do not interact
        assert_eq!(sys.cartan[(0, 2)], int(0));
    }

    #[test]
    fn permutation_helpers_roundtrip() {
        let sys = sys_a3();
        let z = a_type_from_permutation(&sys, &[1, 3, 4, 2]);
        assert_eq!(z.length(), 2);
        assert_eq!(a_type_permutation(&z), vec![1, 3, 4, 2]);
        let y = z.inverse();
        assert_eq!(a_type_permutation(&y), vec![1, 4, 2, 3]);
        assert_eq!(y.reduced_word(), &[3, 2]);
    }

    #[test]
    fn coroot_pairing_strong_orthogonality_probe() {
        // ε₁−ε₂ and ε₃−ε₄ in A3 are strongly orthogonal
        let sys = sys_a3();
        let a1 = sys.root_lookup(&sys.simple_root(1)).unwrap();
        let a3 = sys.root_lookup(&sys.simple_root(3)).unwrap();
        assert_eq!(sys.root_coroot_pairing(a1, a3), int(0));
        assert_eq!(sys.root_coroot_pairing(a3, a1), int(0));
        let sum: Vec<Int> = sys.roots()[a1]
            .fw
            .iter()
            .zip(&sys.roots()[a3].fw)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        assert!(sys.root_lookup(&sum).is_none());
    }
}
