//! Catalog of spherical pairs of minimal rank.
//!
//! For each cataloged pair `(G, Ĝ)` this module holds the restriction
//! (Dynkin folding) `ρ`, the root-fiber partition, the distinguished
//! Weyl elements `z` and `y = z⁻¹`, the free generators `𝓑` of the
//! spherical weight monoid, and the per-generator exchange data
//! `(ŵ_b, U_b, λ_b, A-row)`.  Everything is invariant-checked at
//! construction time.

use crate::weyl::{
    is_reduced, try_canonical_word, RootSystemData, System, TypeLabel, Weight, WeylElem,
};
use crate::{int, Int, IntMatrix, Rat, RatMatrix};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PairError {
    #[error("unsupported pair parameters: {0}")]
    Unsupported(String),
    #[error("weight is not a spherical basis element: {0}")]
    NotBasisElement(String),
    #[error("root fiber has size one; there is no (positive, negative) labelling")]
    SingletonFiber,
    #[error("input word is not reduced")]
    NotReduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Diagonal(TypeLabel),
    SlSp { n: usize },
    SpinSpin { n: usize },
    E6F4,
    B3G2,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Diagonal(t) => write!(f, "diag({t:?})"),
            Family::SlSp { n } => write!(f, "slsp({n})"),
            Family::SpinSpin { n } => write!(f, "spinspin({n})"),
            Family::E6F4 => write!(f, "e6f4"),
            Family::B3G2 => write!(f, "b3g2"),
        }
    }
}

/// Exchange data attached to one basis weight `b`.
#[derive(Debug, Clone)]
pub struct ExchangeData {
    pub b_index: usize,
    /// The twist element `ŵ_b`.
    pub hw: WeylElem,
    /// The summation set `U_b`, with `U_b[0] = e`.
    pub us: Vec<WeylElem>,
    /// The complementary weight `λ_b = Σ_{b'≠b} (−a_{b,b'}) b'`.
    pub lambda: Weight,
    /// Row of the small Cartan matrix `A` over the basis order.
    pub a_row: Vec<Int>,
}

#[derive(Debug)]
pub struct SphericalPair {
    pub family: Family,
    pub big: System,
    pub small: System,
    /// 1-based small simple index for each 1-based big simple index.
    pub fold: Vec<usize>,
    pub z: WeylElem,
    pub y: WeylElem,
    y_inv: WeylElem,
    /// `ρ` on fundamental-weight coordinates (small rank × big rank, 0/1).
    restriction: IntMatrix,
    /// Per small-root index, the big-root indices mapping onto it.
    fibers: Vec<Vec<usize>>,
    basis: Vec<Weight>,
    basis_names: Vec<String>,
    exchange: Vec<ExchangeData>,
    small_elements: OnceLock<Vec<WeylElem>>,
}

pub type Pair = Arc<SphericalPair>;

/// Cache so that repeated catalog calls (tests, CLI subcommands) do
/// not redo the construction-time scans.
fn cache() -> &'static Mutex<HashMap<Family, Pair>> {
    static CACHE: OnceLock<Mutex<HashMap<Family, Pair>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn catalog(family: Family) -> Result<Pair, PairError> {
    if let Some(p) = cache().lock().unwrap().get(&family) {
        return Ok(p.clone());
    }
    let pair = build(family.clone())?;
    cache().lock().unwrap().insert(family, pair.clone());
    Ok(pair)
}

enum ZSpec {
    Permutation(Vec<usize>),
    Word(Vec<usize>),
    DiagonalLongest,
}

fn build(family: Family) -> Result<Pair, PairError> {
    let (big_label, small_label, fold, z_spec): (TypeLabel, TypeLabel, Vec<usize>, ZSpec) =
        match &family {
            Family::SlSp { n } => {
                let n = *n;
                if !(2..=8).contains(&n) {
                    return Err(PairError::Unsupported(format!(
                        "slsp needs 2 <= n <= 8, got {n}"
                    )));
                }
                let fold = (1..=2 * n - 1).map(|i| i.min(2 * n - i)).collect();
                // one-line [1 3 ... (2n-1) (2n) ... 4 2]
                let mut perm: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
                perm.extend((1..=n).rev().map(|i| 2 * i));
                (
                    TypeLabel::A(2 * n - 1),
                    TypeLabel::C(n),
                    fold,
                    ZSpec::Permutation(perm),
                )
            }
            Family::SpinSpin { n } => {
                let n = *n;
                if !(4..=10).contains(&n) {
                    return Err(PairError::Unsupported(format!(
                        "spinspin needs 4 <= n <= 10, got {n}"
                    )));
                }
                let mut fold: Vec<usize> = (1..n).collect();
                fold.push(n - 1);
                (
                    TypeLabel::D(n),
                    TypeLabel::B(n - 1),
                    fold,
                    ZSpec::Word((1..n).collect()),
                )
            }
            Family::E6F4 => (
                TypeLabel::E6,
                TypeLabel::F4,
                vec![4, 1, 3, 2, 3, 4],
                ZSpec::Word(vec![6, 1, 3, 4, 5, 4, 3, 2, 4, 3, 5, 1]),
            ),
            Family::B3G2 => (
                TypeLabel::B(3),
                TypeLabel::G2,
                vec![1, 2, 1],
                ZSpec::Word(vec![3, 2, 3]),
            ),
            Family::Diagonal(t) => {
                if matches!(t, TypeLabel::Product(_)) {
                    return Err(PairError::Unsupported(
                        "diagonal factor must be a simple type".into(),
                    ));
                }
                if t.rank() > 6 {
                    return Err(PairError::Unsupported(format!(
                        "diagonal factor rank must be <= 6, got {}",
                        t.rank()
                    )));
                }
                if matches!(t, TypeLabel::D(m) if *m < 4) {
                    return Err(PairError::Unsupported(
                        "diagonal D factor needs rank >= 4".into(),
                    ));
                }
                let r = t.rank();
                let mut fold: Vec<usize> = (1..=r).collect();
                fold.extend(1..=r);
                (
                    TypeLabel::Product(vec![t.clone(), t.clone()]),
                    t.clone(),
                    fold,
                    ZSpec::DiagonalLongest,
                )
            }
        };

    let big = RootSystemData::new(big_label);
    let small = RootSystemData::new(small_label);
    assert_eq!(fold.len(), big.rank);
    for i in 1..=small.rank {
        assert!(fold.contains(&i), "folding must be surjective");
    }

    let mut restriction = IntMatrix::zero(small.rank, big.rank);
    for (i0, &ih) in fold.iter().enumerate() {
        restriction[(ih - 1, i0)] = int(1);
    }

    // ρ̄ maps Φ into Φ̂; collect the fibers.
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); small.roots().len()];
    for (bi, root) in big.roots().iter().enumerate() {
        let image = restriction.mul_vec(&root.fw);
        let si = small.root_lookup(&image).unwrap_or_else(|| {
            panic!("restriction of root {bi} is not a root of the small system")
        });
        assert_eq!(
            small.roots()[si].positive,
            root.positive,
            "restriction must preserve the sign of roots"
        );
        fibers[si].push(bi);
    }
    for (si, fiber) in fibers.iter().enumerate() {
        assert!(
            fiber.len() == 1 || fiber.len() == 2,
            "fiber of small root {si} has size {}",
            fiber.len()
        );
        if fiber.len() == 2 {
            let (a, b) = (fiber[0], fiber[1]);
            assert!(big.root_coroot_pairing(a, b).is_zero());
            assert!(big.root_coroot_pairing(b, a).is_zero());
            let sum: Vec<Int> = big.roots()[a]
                .fw
                .iter()
                .zip(&big.roots()[b].fw)
                .map(|(x, y)| x.clone() + y.clone())
                .collect();
            let diff: Vec<Int> = big.roots()[a]
                .fw
                .iter()
                .zip(&big.roots()[b].fw)
                .map(|(x, y)| x.clone() - y.clone())
                .collect();
            assert!(
                big.root_lookup(&sum).is_none() && big.root_lookup(&diff).is_none(),
                "size-2 fibers must consist of strongly orthogonal roots"
            );
        }
    }

    let z = match z_spec {
        ZSpec::Permutation(p) => crate::weyl::a_type_from_permutation(&big, &p),
        ZSpec::Word(w) => {
            let z = WeylElem::from_word(&big, &w);
            assert_eq!(z.length(), w.len(), "cataloged z word must be reduced");
            z
        }
        ZSpec::DiagonalLongest => {
            let w0 = crate::weyl::longest_element(&small);
            WeylElem::from_word(&big, w0.reduced_word())
        }
    };
    let y = z.inverse();
    let y_inv = z.clone();

    // Exactly one member of each positive size-2 fiber is sent to Φ⁻ by z.
    for (si, fiber) in fibers.iter().enumerate() {
        if !small.roots()[si].positive || fiber.len() != 2 {
            continue;
        }
        let negs = fiber
            .iter()
            .filter(|&&bi| !big.roots()[z.act_on_root(bi)].positive)
            .count();
        assert_eq!(
            negs, 1,
            "z must send exactly one root of each doubled fiber to the negatives"
        );
    }

    // Spherical weight monoid: dominant weights with ρ(yλ) = 0.
    let m = restriction.mul(y.action());
    let generators = monoid_generators(&m, 2);
    let sols3 = kernel_dominant_scan(&m, 3);
    for sol in &sols3 {
        assert!(
            decomposes_into(sol, &generators),
            "monoid generator missed by the bound-2 scan: {sol:?}"
        );
    }
    let basis: Vec<Weight> = generators
        .iter()
        .map(|c| Weight::new(&big, c.clone()))
        .collect();

    // The scan must reproduce the cataloged list.
    let (expected, names): (Vec<Weight>, Vec<String>) = expected_basis(&family, &big, &small);
    {
        let mut got: Vec<Vec<Int>> = basis.iter().map(|w| w.coords.clone()).collect();
        let mut want: Vec<Vec<Int>> = expected.iter().map(|w| w.coords.clone()).collect();
        got.sort();
        want.sort();
        assert_eq!(
            got, want,
            "computed spherical basis disagrees with the cataloged list for {family}"
        );
    }

    let mut pair = SphericalPair {
        family: family.clone(),
        big,
        small,
        fold,
        z,
        y,
        y_inv,
        restriction,
        fibers,
        basis: expected,
        basis_names: names,
        exchange: Vec::new(),
        small_elements: OnceLock::new(),
    };
    pair.exchange = exchange_table(&pair);
    let pair = Arc::new(pair);

    // Exchange-data invariants.
    for ex in &pair.exchange {
        assert!(ex.us[0].is_identity(), "U_b must start with e");
        assert!(ex.lambda.is_dominant());
        assert!(pair.restrict_weight(&pair.y.act(&ex.lambda)).is_zero());
        for (j, a) in ex.a_row.iter().enumerate() {
            if j == ex.b_index {
                assert_eq!(*a, int(2));
            } else {
                assert!(!a.is_positive(), "off-diagonal A entries must be <= 0");
            }
        }
        assert!(
            pair.in_small_weyl(&ex.hw),
            "the twist element must lie in the small Weyl group"
        );
        let target = pair.y.act(&ex.lambda.star());
        for u in &ex.us {
            assert_eq!(u.act(&target), target, "U_b must stabilise yλ_b*");
        }
    }
    Ok(pair)
}

fn expected_basis(family: &Family, big: &System, small: &System) -> (Vec<Weight>, Vec<String>) {
    match family {
        Family::SlSp { n } => {
            let ws = (1..*n).map(|k| Weight::fundamental(big, 2 * k)).collect();
            let names = (1..*n).map(|k| format!("w{}", 2 * k)).collect();
            (ws, names)
        }
        Family::SpinSpin { .. } => (vec![Weight::fundamental(big, 1)], vec!["w1".into()]),
        Family::E6F4 => (
            vec![Weight::fundamental(big, 1), Weight::fundamental(big, 6)],
            vec!["w1".into(), "w6".into()],
        ),
        Family::B3G2 => (vec![Weight::fundamental(big, 3)], vec!["w3".into()]),
        Family::Diagonal(_) => {
            let r = small.rank;
            let ws = (1..=r)
                .map(|i| {
                    let star = Weight::fundamental(small, i).star();
                    let mut coords = vec![Int::zero(); 2 * r];
                    coords[i - 1] = int(1);
                    for j in 0..r {
                        coords[r + j] = star.coords[j].clone();
                    }
                    Weight::new(big, coords)
                })
                .collect();
            let names = (1..=r).map(|i| format!("b{i}")).collect();
            (ws, names)
        }
    }
}

fn exchange_table(pair: &SphericalPair) -> Vec<ExchangeData> {
    let nb = pair.basis.len();
    let a_matrix: Vec<Vec<Int>> = match &pair.family {
        Family::SlSp { .. } | Family::E6F4 => (0..nb)
            .map(|i| {
                (0..nb)
                    .map(|j| {
                        if i == j {
                            int(2)
                        } else if i.abs_diff(j) == 1 {
                            int(-1)
                        } else {
                            int(0)
                        }
                    })
                    .collect()
            })
            .collect(),
        Family::SpinSpin { .. } | Family::B3G2 => vec![vec![int(2)]],
        // a_{b_î, b_ĵ} = <α̂_î, α̂_ĵ∨>
        Family::Diagonal(_) => (0..nb)
            .map(|i| (0..nb).map(|j| pair.small.cartan[(j, i)].clone()).collect())
            .collect(),
    };

    let lambda_of = |row: &[Int], skip: usize| {
        let mut acc = Weight::zero(&pair.big);
        for (j, a) in row.iter().enumerate() {
            if j == skip {
                continue;
            }
            acc = acc.add(&pair.basis[j].scale(&-a.clone()));
        }
        acc
    };

    match &pair.family {
        Family::SlSp { n } => (1..*n)
            .map(|k| {
                let a = 2 * (n - k);
                let hw = pair.tau_product(&[a, a + 1, a - 1, a]);
                let us = vec![
                    WeylElem::identity(&pair.big),
                    pair.tau_product(&[a]),
                    pair.tau_product(&[a + 1, a]),
                ];
                ExchangeData {
                    b_index: k - 1,
                    hw,
                    us,
                    lambda: lambda_of(&a_matrix[k - 1], k - 1),
                    a_row: a_matrix[k - 1].clone(),
                }
            })
            .collect(),
        Family::SpinSpin { n } => {
            let mut hw_word: Vec<usize> = (1..=*n).collect();
            hw_word.extend((1..=n - 2).rev());
            let us = (0..*n)
                .map(|j| {
                    let word: Vec<usize> = (1..=j).rev().collect();
                    pair.tau_product(&word)
                })
                .collect();
            vec![ExchangeData {
                b_index: 0,
                hw: pair.tau_product(&hw_word),
                us,
                lambda: lambda_of(&a_matrix[0], 0),
                a_row: a_matrix[0].clone(),
            }]
        }
        Family::E6F4 => {
            let sigma = |i: usize| [6, 2, 5, 4, 3, 1][i - 1];
            let hw6_word = [1, 3, 4, 2, 5, 4, 3, 1];
            let u6_words: [&[usize]; 5] = [&[], &[1], &[3, 1], &[4, 3, 1], &[2, 4, 3, 1]];
            let mut out = Vec::new();
            for (bi, apply_sigma) in [(0, true), (1, false)] {
                let map = |i: usize| if apply_sigma { sigma(i) } else { i };
                let hw_word: Vec<usize> = hw6_word.iter().map(|&i| map(i)).collect();
                let us = u6_words
                    .iter()
                    .map(|w| {
                        let word: Vec<usize> = w.iter().map(|&i| map(i)).collect();
                        pair.tau_product(&word)
                    })
                    .collect();
                out.push(ExchangeData {
                    b_index: bi,
                    hw: pair.tau_product(&hw_word),
                    us,
                    lambda: lambda_of(&a_matrix[bi], bi),
                    a_row: a_matrix[bi].clone(),
                });
            }
            out
        }
        Family::B3G2 => {
            let us = [&[][..], &[3][..], &[2, 3][..], &[3, 2, 3][..]]
                .iter()
                .map(|w| pair.tau_product(w))
                .collect();
            vec![ExchangeData {
                b_index: 0,
                hw: pair.tau_product(&[3, 2, 3, 1, 2, 3]),
                us,
                lambda: lambda_of(&a_matrix[0], 0),
                a_row: a_matrix[0].clone(),
            }]
        }
        Family::Diagonal(_) => {
            let r = pair.small.rank;
            (0..nb)
                .map(|i| {
                    let hw = WeylElem::from_word(&pair.big, &[i + 1, r + i + 1]);
                    let us = vec![
                        WeylElem::identity(&pair.big),
                        WeylElem::from_word(&pair.big, &[i + 1]),
                    ];
                    ExchangeData {
                        b_index: i,
                        hw,
                        us,
                        lambda: lambda_of(&a_matrix[i], i),
                        a_row: a_matrix[i].clone(),
                    }
                })
                .collect()
        }
    }
}

impl SphericalPair {
    /// `ρ(λ)`: applies the 0/1 folding matrix.
    pub fn restrict_weight(&self, lambda: &Weight) -> Weight {
        Weight::new(&self.small, self.restriction.mul_vec(&lambda.coords))
    }

    /// `ρ̄(β)`: the image of a big root, as a small-root index.
    pub fn restrict_root(&self, root: usize) -> usize {
        let image = self.restriction.mul_vec(&self.big.roots()[root].fw);
        self.small
            .root_lookup(&image)
            .expect("restriction maps roots to roots by construction")
    }

    /// Big-root indices restricting onto the given small root.
    pub fn root_fiber(&self, small_root: usize) -> &[usize] {
        &self.fibers[small_root]
    }

    /// Size of the fiber through a big root: 1 for `Φ¹`, 2 for `Φ²`.
    pub fn fiber_class(&self, root: usize) -> usize {
        self.fibers[self.restrict_root(root)].len()
    }

    /// Splits a positive doubled fiber into `(β_p, β_n)` with
    /// `z·β_n ∈ Φ⁻` and `z·β_p ∈ Φ⁺`.
    pub fn label_pn(&self, small_root: usize) -> Result<(usize, usize), PairError> {
        let fiber = &self.fibers[small_root];
        if fiber.len() != 2 {
            return Err(PairError::SingletonFiber);
        }
        assert!(self.small.roots()[small_root].positive);
        let first_neg = !self.big.roots()[self.z.act_on_root(fiber[0])].positive;
        if first_neg {
            Ok((fiber[1], fiber[0]))
        } else {
            Ok((fiber[0], fiber[1]))
        }
    }

    /// Lifts a reduced word in small simple indices to a reduced word
    /// in big simple indices, replacing each letter by its fiber with
    /// `β_p` first.
    pub fn lift_reduced_word(&self, small_word: &[usize]) -> Result<Vec<usize>, PairError> {
        if !is_reduced(&self.small, small_word) {
            return Err(PairError::NotReduced);
        }
        let mut out = Vec::new();
        for &ih in small_word {
            let si = self.small.root_lookup(&self.small.simple_root(ih)).unwrap();
            let fiber = &self.fibers[si];
            if fiber.len() == 1 {
                out.push(self.simple_index_of(fiber[0]));
            } else {
                let (p, n) = self.label_pn(si).unwrap();
                out.push(self.simple_index_of(p));
                out.push(self.simple_index_of(n));
            }
        }
        assert!(
            is_reduced(&self.big, &out),
            "lift of a reduced word must be reduced"
        );
        Ok(out)
    }

    fn simple_index_of(&self, root: usize) -> usize {
        let fw = &self.big.roots()[root].fw;
        (1..=self.big.rank)
            .find(|&i| self.big.simple_root(i) == *fw)
            .expect("fiber of a simple root consists of simple roots")
    }

    /// The ordered free generators `𝓑` of the spherical weight monoid.
    pub fn spherical_basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, b: &Weight) -> Result<usize, PairError> {
        self.basis
            .iter()
            .position(|w| w == b)
            .ok_or_else(|| PairError::NotBasisElement(format!("{b:?}")))
    }

    pub fn basis_index_by_name(&self, name: &str) -> Result<usize, PairError> {
        self.basis_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PairError::NotBasisElement(name.to_string()))
    }

    pub fn exchange_data(&self, b: &Weight) -> Result<&ExchangeData, PairError> {
        Ok(&self.exchange[self.basis_index(b)?])
    }

    pub fn exchange_by_index(&self, idx: usize) -> &ExchangeData {
        &self.exchange[idx]
    }

    pub fn exchange_all(&self) -> &[ExchangeData] {
        &self.exchange
    }

    /// `τᵢ = y sᵢ y⁻¹` for a 1-based big simple index.
    pub fn tau(&self, i: usize) -> WeylElem {
        self.tau_product(&[i])
    }

    /// Product `τ_{w[0]} τ_{w[1]} ⋯ = y (s_{w[0]} ⋯) y⁻¹`.
    pub fn tau_product(&self, word: &[usize]) -> WeylElem {
        let inner = WeylElem::from_word(&self.big, word);
        self.y.compose(&inner).compose(&self.y_inv)
    }

    /// Canonical word of `y⁻¹ w y`, i.e. the canonical τ-word of `w`.
    pub fn tau_word(&self, w: &WeylElem) -> Vec<usize> {
        self.y_inv
            .compose(w)
            .compose(&self.y)
            .reduced_word()
            .to_vec()
    }

    /// Root index of `δᵢ = y·αᵢ`.
    pub fn delta_root(&self, i: usize) -> usize {
        let fw = self.y.act_fw(&self.big.simple_root(i));
        self.big.root_lookup(&fw).unwrap()
    }

    /// `<μ, δᵢ∨> = <y⁻¹μ, αᵢ∨>`.
    pub fn delta_pairing(&self, mu: &Weight, i: usize) -> Int {
        self.y_inv.act(mu).pairing(i)
    }

    /// Membership in `Ŵ`, the subgroup generated by the lifted small
    /// reflections: descend the action through `ρ`, extract a small
    /// word, lift it back and compare.
    pub fn in_small_weyl(&self, w: &WeylElem) -> bool {
        let Some(desc) = self.descend(w) else {
            return false;
        };
        let Ok(lift) = self.lift_reduced_word(desc.reduced_word()) else {
            return false;
        };
        WeylElem::from_word(&self.big, &lift) == *w
    }

    /// Solves `ŵ ρ = ρ w` for an integral small Weyl action.
    fn descend(&self, w: &WeylElem) -> Option<WeylElem> {
        let p = int_to_rat(&self.restriction);
        let pw = p.mul(&int_to_rat(w.action()));
        // right inverse of p: pᵀ (p pᵀ)⁻¹; p pᵀ is the diagonal of fiber sizes
        let pt = p.transpose();
        let gram = p.mul(&pt).inverse();
        let cand = pw.mul(&pt).mul(&gram);
        let mut ihat = IntMatrix::zero(self.small.rank, self.small.rank);
        for i in 0..self.small.rank {
            for j in 0..self.small.rank {
                if !cand[(i, j)].is_integer() {
                    return None;
                }
                ihat[(i, j)] = cand[(i, j)].to_integer();
            }
        }
        // exact commutation check
        if int_to_rat(&ihat).mul(&p) != pw {
            return None;
        }
        let word = try_canonical_word(&self.small, &ihat)?;
        let elem = WeylElem::from_word(&self.small, &word);
        (elem.action() == &ihat).then_some(elem)
    }

    /// All elements of `Ŵ` as big Weyl elements (subgroup closure of
    /// the lifted simple reflections).
    pub fn small_weyl_elements(&self) -> &[WeylElem] {
        self.small_elements.get_or_init(|| {
            let gens: Vec<WeylElem> = (1..=self.small.rank)
                .map(|ih| {
                    let lift = self.lift_reduced_word(&[ih]).unwrap();
                    WeylElem::from_word(&self.big, &lift)
                })
                .collect();
            let mut all = vec![WeylElem::identity(&self.big)];
            let mut seen: std::collections::HashSet<IntMatrix> =
                [all[0].action().clone()].into_iter().collect();
            let mut head = 0;
            while head < all.len() {
                for g in &gens {
                    let next = all[head].compose(g);
                    if seen.insert(next.action().clone()) {
                        all.push(next);
                    }
                }
                head += 1;
            }
            assert_eq!(all.len() as u128, self.small.label.weyl_order());
            all
        })
    }

    /// The alternative twist bases `y' = ŵy` (excluding `y` itself)
    /// with `ℓ((y')⁻¹)` equal to the minimal value `ℓ(z)`.
    pub fn alternative_ys(&self) -> Vec<WeylElem> {
        let lz = self.z.length();
        self.small_weyl_elements()
            .iter()
            .map(|hw| hw.compose(&self.y))
            .filter(|y2| y2.inverse().length() == lz && *y2 != self.y)
            .collect()
    }

    pub fn dossier(&self) -> PairDossier {
        PairDossier {
            family: self.family.to_string(),
            big_type: format!("{:?}", self.big.label),
            small_type: format!("{:?}", self.small.label),
            big_cartan: cartan_rows_i64(&self.big),
            small_cartan: cartan_rows_i64(&self.small),
            folding: self.fold.clone(),
            z_word: self.z.reduced_word().to_vec(),
            basis: self
                .basis
                .iter()
                .zip(&self.basis_names)
                .map(|(w, n)| BasisEntry {
                    name: n.clone(),
                    coords: w.coords.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            exchange: self
                .exchange
                .iter()
                .map(|ex| ExchangeDossier {
                    b: self.basis_names[ex.b_index].clone(),
                    hw_tau_word: self.tau_word(&ex.hw),
                    u_tau_words: ex.us.iter().map(|u| self.tau_word(u)).collect(),
                    lambda_coords: ex.lambda.coords.iter().map(ToString::to_string).collect(),
                    a_row: ex.a_row.iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }
}

pub(crate) fn int_to_rat(m: &IntMatrix) -> RatMatrix {
    let mut r = RatMatrix::zero(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            r[(i, j)] = Rat::from(m[(i, j)].clone());
        }
    }
    r
}

fn cartan_rows_i64(sys: &System) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    (0..sys.rank)
        .map(|i| {
            (0..sys.rank)
                .map(|j| sys.cartan[(i, j)].to_i64().expect("cartan entry fits i64"))
                .collect()
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct PairDossier {
    pub family: String,
    pub big_type: String,
    pub small_type: String,
    pub big_cartan: Vec<Vec<i64>>,
    pub small_cartan: Vec<Vec<i64>>,
    pub folding: Vec<usize>,
    pub z_word: Vec<usize>,
    pub basis: Vec<BasisEntry>,
    pub exchange: Vec<ExchangeDossier>,
}

#[derive(Debug, Serialize)]
pub struct BasisEntry {
    pub name: String,
    pub coords: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ExchangeDossier {
    pub b: String,
    pub hw_tau_word: Vec<usize>,
    pub u_tau_words: Vec<Vec<usize>>,
    pub lambda_coords: Vec<String>,
    pub a_row: Vec<String>,
}

/// Dominant integer vectors with coordinates `<= bound` in the kernel
/// of `m`, found by pruned depth-first search.
fn kernel_dominant_scan(m: &IntMatrix, bound: i64) -> Vec<Vec<Int>> {
    let rank = m.cols();
    let rows = m.rows();
    // reachable range of the remaining partial sums per row and depth
    let mut lo = vec![vec![Int::zero(); rows]; rank + 1];
    let mut hi = vec![vec![Int::zero(); rows]; rank + 1];
    for d in (0..rank).rev() {
        for r in 0..rows {
            let c = m[(r, d)].clone() * int(bound);
            lo[d][r] =
                lo[d + 1][r].clone() + if c.is_negative() { c.clone() } else { Int::zero() };
            hi[d][r] = hi[d + 1][r].clone() + if c.is_positive() { c } else { Int::zero() };
        }
    }
    fn recurse(
        m: &IntMatrix,
        bound: i64,
        d: usize,
        coords: &mut Vec<Int>,
        partial: &mut Vec<Int>,
        lo: &[Vec<Int>],
        hi: &[Vec<Int>],
        out: &mut Vec<Vec<Int>>,
    ) {
        let rows = m.rows();
        for r in 0..rows {
            let floor = partial[r].clone() + lo[d][r].clone();
            let ceil = partial[r].clone() + hi[d][r].clone();
            if floor.is_positive() || ceil.is_negative() {
                return;
            }
        }
        if d == m.cols() {
            if partial.iter().all(Zero::is_zero) {
                out.push(coords.clone());
            }
            return;
        }
        for c in 0..=bound {
            coords[d] = int(c);
            if c > 0 {
                for r in 0..rows {
                    partial[r] = partial[r].clone() + m[(r, d)].clone();
                }
            }
            recurse(m, bound, d + 1, coords, partial, lo, hi, out);
        }
        for r in 0..rows {
            partial[r] = partial[r].clone() - m[(r, d)].clone() * int(bound);
        }
        coords[d] = Int::zero();
    }
    let mut out = Vec::new();
    let mut coords = vec![Int::zero(); rank];
    let mut partial = vec![Int::zero(); rows];
    recurse(m, bound, 0, &mut coords, &mut partial, &lo, &hi, &mut out);
    out
}

/// Minimal free generators: nonzero kernel-dominant vectors that do
/// not split off a smaller nonzero one.
fn monoid_generators(m: &IntMatrix, bound: i64) -> Vec<Vec<Int>> {
    let sols = kernel_dominant_scan(m, bound);
    sols.iter()
        .filter(|s| !s.iter().all(Zero::is_zero))
        .filter(|s| {
            !sols.iter().any(|t| {
                !t.iter().all(Zero::is_zero)
                    && t != *s
                    && s.iter().zip(t.iter()).all(|(a, b)| a >= b)
            })
        })
        .cloned()
        .collect()
}

fn decomposes_into(target: &[Int], gens: &[Vec<Int>]) -> bool {
    fn inner(target: &[Int], gens: &[Vec<Int>], memo: &mut HashMap<Vec<Int>, bool>) -> bool {
        if target.iter().all(Zero::is_zero) {
            return true;
        }
        if let Some(&v) = memo.get(target) {
            return v;
        }
        let mut ok = false;
        for g in gens {
            if target.iter().zip(g.iter()).all(|(a, b)| a >= b) {
                let rest: Vec<Int> = target
                    .iter()
                    .zip(g.iter())
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                if inner(&rest, gens, memo) {
                    ok = true;
                    break;
                }
            }
        }
        memo.insert(target.to_vec(), ok);
        ok
    }
    inner(target, gens, &mut HashMap::new())
}
