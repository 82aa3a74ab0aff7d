//! Numeric properties of the minor evaluators.

use sphmin::minors::Realization;
use sphmin::pair::{catalog, Family, Pair};
use sphmin::rng::SplitMix64;
use sphmin::weyl::{TypeLabel, WeylElem};
use sphmin::{rat, Rat, RatMatrix};
use num_traits::{One, Zero};

fn realized() -> Vec<Realization> {
    [
        Family::SlSp { n: 2 },
        Family::SlSp { n: 3 },
        Family::SpinSpin { n: 4 },
        Family::Diagonal(TypeLabel::A(2)),
    ]
    .into_iter()
    .map(|f| Realization::new(&catalog(f).unwrap()).unwrap())
    .collect()
}

/// Minors depend on their Weyl element only through the extremal
/// weight: right-multiplying by a stabilizing element changes nothing.
#[test]
fn minor_well_definedness() {
    for real in realized() {
        let pair = real.pair.clone();
        let mut rng = SplitMix64::new(41);
        for b_index in 0..pair.spherical_basis().len() {
            let target = pair.y.act(&pair.spherical_basis()[b_index].star());
            // collect a few stabilizing elements among short tau words
            let mut stabs = Vec::new();
            for i in 1..=pair.big.rank {
                let t = pair.tau(i);
                if t.act(&target) == target {
                    stabs.push(t);
                }
            }
            assert!(
                !stabs.is_empty(),
                "{}: no stabilizing twist found",
                pair.family
            );
            for w in [WeylElem::identity(&pair.big), pair.exchange_by_index(b_index).hw.clone()] {
                let base = real.minor(b_index, &w);
                for u in &stabs {
                    let v = w.compose(u);
                    assert_eq!(base.weight, v.act(&pair.y.act(&pair.spherical_basis()[b_index].star())).clone());
                    let other = real.minor(b_index, &v);
                    for _ in 0..25 {
                        let g = real.sample_group(rng.next_u64(), 8);
                        assert_eq!(
                            base.eval(&real, &g),
                            other.eval(&real, &g),
                            "{}: minors with equal weight differ",
                            pair.family
                        );
                    }
                }
            }
        }
    }
}

/// On the open cell (products unipotent · torus · small element) every
/// basis minor is nonvanishing.
#[test]
fn open_cell_nonvanishing() {
    for real in realized() {
        let pair = real.pair.clone();
        let e = WeylElem::identity(&pair.big);
        let forms: Vec<_> = (0..pair.spherical_basis().len())
            .map(|b| real.minor(b, &e))
            .collect();
        let mut rng = SplitMix64::new(97);
        let t_options = [rat(2, 1), rat(3, 1), rat(1, 2)];
        for _ in 0..100 {
            let u = real.sample_unipotent_yuy(rng.next_u64(), 6);
            let mut torus = RatMatrix::identity(real.dim);
            for _ in 0..2 {
                let i = 1 + rng.below(pair.big.rank);
                torus = torus.mul(&real.coweight(i, &t_options[rng.below(3)]));
            }
            let gh = real.sample_subgroup(rng.next_u64(), 6);
            let g = u.mul(&torus).mul(&gh);
            for form in &forms {
                assert!(
                    !form.eval(&real, &g).is_zero(),
                    "{}: open-cell minor vanishes",
                    pair.family
                );
            }
        }
    }
}

/// Exact polynomial interpolation of `t ↦ f(z_δ(−t)·g)`.
fn poly_coefficients(samples: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = samples.len();
    let mut vander = RatMatrix::zero(n, n);
    for (r, (t, _)) in samples.iter().enumerate() {
        let mut p = Rat::one();
        for c in 0..n {
            vander[(r, c)] = p.clone();
            p = p * t.clone();
        }
    }
    let inv = vander.inverse();
    let values: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    inv.mul_vec(&values)
}

/// The alternating sum of minor products has vanishing directional
/// derivative along every `Z_δ`: the degree-1 interpolation
/// coefficient of `t ↦ f_b(z_δ(−t)·g)` is exactly zero.
#[test]
fn alternating_sum_derivative_vanishes() {
    for real in realized() {
        let pair = real.pair.clone();
        let mut rng = SplitMix64::new(23);
        for b_index in 0..pair.spherical_basis().len() {
            let ex = pair.exchange_by_index(b_index);
            let terms: Vec<(i64, _, _)> = ex
                .us
                .iter()
                .map(|u| {
                    let sign = if u.twisted_length(&pair.y) % 2 == 0 { 1 } else { -1 };
                    (
                        sign,
                        real.minor(b_index, u),
                        real.minor(b_index, &u.compose(&ex.hw)),
                    )
                })
                .collect();
            let f = |g: &RatMatrix| -> Rat {
                let mut acc = Rat::zero();
                for (sign, f1, f2) in &terms {
                    acc = acc + rat(*sign, 1) * f1.eval(&real, g) * f2.eval(&real, g);
                }
                acc
            };
            for _ in 0..3 {
                let g = real.sample_group(rng.next_u64(), 8);
                for i in 1..=pair.big.rank {
                    let samples: Vec<(Rat, Rat)> = (0..13)
                        .map(|t| {
                            let tr = rat(t, 1);
                            let moved = real.z_delta(i, true, &-tr.clone()).mul(&g);
                            (tr, f(&moved))
                        })
                        .collect();
                    let coeffs = poly_coefficients(&samples);
                    assert!(
                        coeffs[1].is_zero(),
                        "{}/{}: derivative along delta_{i} is {}",
                        pair.family,
                        pair.basis_names()[b_index],
                        coeffs[1]
                    );
                }
            }
        }
    }
}

/// Pinning compatibility survives in all realized sizes (the
/// construction itself asserts the identities; this pins the sizes).
#[test]
fn pinning_compatibility_sizes() {
    for n in 2..=4 {
        Realization::new(&catalog(Family::SlSp { n }).unwrap()).unwrap();
    }
    for n in 4..=5 {
        Realization::new(&catalog(Family::SpinSpin { n }).unwrap()).unwrap();
    }
    for r in 1..=3 {
        Realization::new(&catalog(Family::Diagonal(TypeLabel::A(r))).unwrap()).unwrap();
    }
}

/// Realization rejection for pairs without a matrix model.
#[test]
fn unrealized_pairs_rejected() {
    for family in [Family::E6F4, Family::B3G2, Family::Diagonal(TypeLabel::B(2))] {
        let pair: Pair = catalog(family).unwrap();
        assert!(Realization::new(&pair).is_err());
    }
}

/// The twist verification passes on every realized model for a twist
/// covering all three derivation cases.
#[test]
fn twist_identities_all_models() {
    for real in realized() {
        let pair = real.pair.clone();
        let hw = pair.exchange_by_index(0).hw.clone();
        for w in [WeylElem::identity(&pair.big), hw] {
            let rep = sphmin::minors::verify_twist(&real, 0, &w, 10, 13);
            assert!(rep.passed(), "{}: {:?}", pair.family, rep.statement_id);
        }
    }
}
