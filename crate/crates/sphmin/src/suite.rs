//! The self-check suite: every statement the crate certifies, with
//! pinned seeds, trial counts and runtime budgets.  The `acceptance`
//! integration test and `sphmin selfcheck` both run these criteria.

use crate::claims::{
    self, hypothesis_ws, table_matches_golden, verify_assertion, verify_claim1_formal,
    verify_claim2, verify_claim3, verify_stabilizer, HypothesisScan,
};
use crate::minors::{verify_bar_lemmas, verify_characterisation, verify_exchange, Realization};
use crate::pair::{catalog, Family, Pair};
use crate::rng::SplitMix64;
use crate::stars::star_diagram;
use crate::weyl::{TypeLabel, WeylElem};
use crate::{rat, Rat, RatMatrix};
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: &'static str,
    pub label: &'static str,
    pub pass: bool,
    pub detail: String,
    pub runtime_ms: u128,
    pub budget_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}: {} ({} ms) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.label,
            self.runtime_ms,
            self.detail
        )
    }
}

fn run(
    id: &'static str,
    label: &'static str,
    budget_ms: u128,
    f: impl FnOnce() -> Result<String, String>,
) -> CriterionResult {
    let started = Instant::now();
    let outcome = f();
    let runtime_ms = started.elapsed().as_millis();
    let (pass, detail) = match outcome {
        Ok(d) => (runtime_ms <= budget_ms, d),
        Err(d) => (false, d),
    };
    let detail = if pass || runtime_ms <= budget_ms {
        detail
    } else {
        format!("{detail}; exceeded budget of {budget_ms} ms")
    };
    CriterionResult {
        id,
        label,
        pass,
        detail,
        runtime_ms,
        budget_ms,
    }
}

fn slsp2_realization() -> Realization {
    Realization::new(&catalog(Family::SlSp { n: 2 }).unwrap()).unwrap()
}

fn int_matrix(rows: &[[i64; 4]]) -> RatMatrix {
    RatMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
            .collect(),
    )
}

/// Criterion 1: the eight displayed 4x4 lift matrices of the
/// `SL_4 / Sp_4` model, entry for entry.
pub fn criterion_1() -> CriterionResult {
    run("C1", "displayed lift matrices (SL4/Sp4)", 1_000, || {
        let real = slsp2_realization();
        let pair = real.pair.clone();
        let checks: Vec<(&str, RatMatrix, RatMatrix)> = vec![
            (
                "s1bar",
                real.bar_s(1),
                int_matrix(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            ),
            (
                "s2bar",
                real.bar_s(2),
                int_matrix(&[[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
            ),
            (
                "s3bar",
                real.bar_s(3),
                int_matrix(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
            ),
            (
                "ybar",
                real.bar(&pair.y),
                int_matrix(&[[1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1], [0, -1, 0, 0]]),
            ),
            (
                "ybar_inv",
                real.bar(&pair.y).inverse(),
                int_matrix(&[[1, 0, 0, 0], [0, 0, 0, -1], [0, -1, 0, 0], [0, 0, 1, 0]]),
            ),
            (
                "d1tilde",
                real.tilde(&pair.tau(1)),
                int_matrix(&[[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [-1, 0, 0, 0]]),
            ),
            (
                "d2tilde",
                real.tilde(&pair.tau(2)),
                int_matrix(&[[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0]]),
            ),
            (
                "d3tilde",
                real.tilde(&pair.tau(3)),
                int_matrix(&[[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
            ),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(format!("{name} differs:\n{got}"));
            }
        }
        Ok("8 matrices exact".into())
    })
}

/// Criterion 2: the six displayed degree-2 minors of `SL_4 / Sp_4`
/// agree with the evaluator on 50 seeded group elements.
pub fn criterion_2() -> CriterionResult {
    run("C2", "displayed minors (SL4/Sp4, six twists)", 5_000, || {
        let real = slsp2_realization();
        let pair = real.pair.clone();
        type Poly = fn(&RatMatrix) -> Rat;
        
        let polys: Vec<(Vec<usize>, Poly)> = vec![
            (vec![], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                (x(2, 1) * x(3, 4) - x(2, 4) * x(3, 1)) + (x(2, 2) * x(3, 3) - x(2, 3) * x(3, 2))
            }),
            (vec![2, 3, 1, 2], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                -(x(1, 1) * x(4, 4) - x(1, 4) * x(4, 1)) - (x(1, 2) * x(4, 3) - x(1, 3) * x(4, 2))
            }),
            (vec![2], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                (x(3, 1) * x(4, 4) - x(3, 4) * x(4, 1)) + (x(3, 2) * x(4, 3) - x(3, 3) * x(4, 2))
            }),
            (vec![3, 1, 2], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                (x(1, 1) * x(2, 4) - x(1, 4) * x(2, 1)) + (x(1, 2) * x(2, 3) - x(1, 3) * x(2, 2))
            }),
            (vec![3, 2], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                -(x(2, 1) * x(4, 4) - x(2, 4) * x(4, 1)) - (x(2, 2) * x(4, 3) - x(2, 3) * x(4, 2))
            }),
            (vec![1, 2], |g| {
                let x = |i: usize, j: usize| g[(i - 1, j - 1)].clone();
                -(x(1, 1) * x(3, 4) - x(1, 4) * x(3, 1)) - (x(1, 2) * x(3, 3) - x(1, 3) * x(3, 2))
            }),
        ];
        let mut rng = SplitMix64::stream(DEFAULT_SEED, 0xc2);
        for (tau_word, poly) in &polys {
            let w = pair.tau_product(tau_word);
            let form = real.minor(0, &w);
            for _ in 0..50 {
                let g = real.sample_group(rng.next_u64(), 9);
                if form.eval(&real, &g) != poly(&g) {
                    return Err(format!("minor at tau-word {tau_word:?} disagrees"));
                }
            }
        }
        Ok("6 minors x 50 evaluations exact".into())
    })
}

/// Criterion 3: the alternating sum of minor products is the constant
/// `−1` on `SL_4`, matching the parity prediction `(−1)^3`.
pub fn criterion_3() -> CriterionResult {
    run("C3", "constant alternating sum and sign (SL4/Sp4)", 10_000, || {
        let real = slsp2_realization();
        let pair = real.pair.clone();
        let ex = pair.exchange_by_index(0);
        let terms: Vec<(i64, _, _)> = ex
            .us
            .iter()
            .map(|u| {
                let sign = if u.twisted_length(&pair.y) % 2 == 0 { 1 } else { -1 };
                (
                    sign,
                    real.minor(0, u),
                    real.minor(0, &u.compose(&ex.hw)),
                )
            })
            .collect();
        let mut rng = SplitMix64::stream(DEFAULT_SEED, 0xc3);
        for trial in 0..200 {
            let g = real.sample_group(rng.next_u64(), 10);
            let mut f = Rat::from(crate::int(0));
            for (sign, f1, f2) in &terms {
                f = f + rat(*sign, 1) * f1.eval(&real, &g) * f2.eval(&real, &g);
            }
            if f != rat(-1, 1) {
                return Err(format!("trial {trial}: sum is {f}, not -1"));
            }
        }
        let eps = real.epsilon(0);
        if eps.value != -1 || !eps.matches {
            return Err(format!("epsilon {} (predicted {})", eps.value, eps.predicted));
        }
        Ok("200 trials constant -1; sign matches (-1)^3".into())
    })
}

/// Criterion 4: the infinitesimal action tables, recomputed cell for
/// cell against the embedded expected tables.
pub fn criterion_4() -> CriterionResult {
    run("C4", "action tables (slsp n=2..5, e6f4 both, b3g2)", 30_000, || {
        let mut count = 0;
        for n in 2..=5 {
            let pair = catalog(Family::SlSp { n }).map_err(|e| e.to_string())?;
            for k in 1..n {
                table_matches_golden(&pair, k - 1)?;
                count += 1;
            }
        }
        let e6f4 = catalog(Family::E6F4).map_err(|e| e.to_string())?;
        table_matches_golden(&e6f4, 1)?;
        table_matches_golden(&e6f4, 0)?;
        count += 2;
        let b3g2 = catalog(Family::B3G2).map_err(|e| e.to_string())?;
        table_matches_golden(&b3g2, 0)?;
        count += 1;
        Ok(format!("{count} tables exact"))
    })
}

fn claims_roster() -> Vec<Pair> {
    let mut pairs = Vec::new();
    for n in 2..=6 {
        pairs.push(catalog(Family::SlSp { n }).unwrap());
    }
    for n in 4..=8 {
        pairs.push(catalog(Family::SpinSpin { n }).unwrap());
    }
    pairs.push(catalog(Family::E6F4).unwrap());
    pairs.push(catalog(Family::B3G2).unwrap());
    pairs.push(catalog(Family::Diagonal(TypeLabel::A(2))).unwrap());
    pairs.push(catalog(Family::Diagonal(TypeLabel::A(3))).unwrap());
    pairs
}

/// Criterion 5: the combinatorial statements behind the exchange
/// identity, for the whole roster.
pub fn criterion_5() -> CriterionResult {
    run("C5", "combinatorial claims for the full roster", 60_000, || {
        let mut checked = 0;
        for pair in claims_roster() {
            for b in 0..pair.spherical_basis().len() {
                let tag = format!("{}/{}", pair.family, pair.basis_names()[b]);
                verify_claim2(&pair, b)
                    .map_err(|(l, r)| format!("{tag}: weight identity {l:?} != {r:?}"))?;
                if !verify_claim3(&pair, b) {
                    return Err(format!("{tag}: restricted weights vanish"));
                }
                if !verify_stabilizer(&pair, b) {
                    return Err(format!("{tag}: stabilizer inclusion fails"));
                }
                if !pair.in_small_weyl(&pair.exchange_by_index(b).hw) {
                    return Err(format!("{tag}: twist element not in the small Weyl group"));
                }
                if !verify_assertion(&pair, b) {
                    return Err(format!("{tag}: shift-closure assertion fails"));
                }
                verify_claim1_formal(&pair, b)
                    .map_err(|terms| format!("{tag}: surviving terms {terms:?}"))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} (pair, b) combinations"))
    })
}

/// Criterion 6: the exchange identity, numerically, with a single
/// consistent sign per `(pair, b)`.
pub fn criterion_6() -> CriterionResult {
    run("C6", "numeric exchange identity", 300_000, || {
        let mut detail = Vec::new();

        // SL4/Sp4, exhaustive, 100 trials per element
        {
            let real = slsp2_realization();
            let ws = hypothesis_ws(&real.pair, 0, HypothesisScan::Exhaustive { cap: 1_000_000 })
                .map_err(|e| e.to_string())?;
            for w in &ws {
                let rep = verify_exchange(&real, 0, w, 100, DEFAULT_SEED)
                    .map_err(|e| e.to_string())?;
                if !rep.passed() {
                    return Err(format!("slsp(2) fails at {w:?}"));
                }
            }
            detail.push(format!("slsp(2): {} elements x100", ws.len()));
        }

        // SL6/Sp6, exhaustive over 720, both basis weights, 20 trials
        {
            let pair = catalog(Family::SlSp { n: 3 }).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            for b in 0..2 {
                let ws = hypothesis_ws(&pair, b, HypothesisScan::Exhaustive { cap: 1_000_000 })
                    .map_err(|e| e.to_string())?;
                for w in &ws {
                    let rep = verify_exchange(&real, b, w, 20, DEFAULT_SEED)
                        .map_err(|e| e.to_string())?;
                    if !rep.passed() {
                        return Err(format!("slsp(3)/{b} fails at {w:?}"));
                    }
                }
                detail.push(format!("slsp(3)/w{}: {} elements x20", 2 * (b + 1), ws.len()));
            }
        }

        // SO8 vector model, sampled
        {
            let pair = catalog(Family::SpinSpin { n: 4 }).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            let ws = hypothesis_ws(
                &pair,
                0,
                HypothesisScan::Sampled {
                    count: 20,
                    seed: DEFAULT_SEED,
                },
            )
            .map_err(|e| e.to_string())?;
            for w in &ws {
                let rep =
                    verify_exchange(&real, 0, w, 50, DEFAULT_SEED).map_err(|e| e.to_string())?;
                if !rep.passed() {
                    return Err(format!("spinspin(4) fails at {w:?}"));
                }
            }
            detail.push(format!("spinspin(4): {} elements x50", ws.len()));
        }

        // diagonal A2, exhaustive, both basis weights
        {
            let pair = catalog(Family::Diagonal(TypeLabel::A(2))).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            for b in 0..2 {
                let ws = hypothesis_ws(&pair, b, HypothesisScan::Exhaustive { cap: 1_000_000 })
                    .map_err(|e| e.to_string())?;
                for w in &ws {
                    let rep = verify_exchange(&real, b, w, 50, DEFAULT_SEED)
                        .map_err(|e| e.to_string())?;
                    if !rep.passed() {
                        return Err(format!("diag(A2)/{b} fails at {w:?}"));
                    }
                }
                detail.push(format!("diag(A2)/b{}: {} elements x50", b + 1, ws.len()));
            }
        }

        Ok(detail.join("; "))
    })
}

/// Criterion 7: the property suite for the lifted representatives and
/// the uniqueness characterisation.
pub fn criterion_7() -> CriterionResult {
    run("C7", "representative and minor property suite", 120_000, || {
        let trials = 50u64;
        let mut reports = Vec::new();

        // uniqueness characterisation, three models
        {
            let real = slsp2_realization();
            let pair = real.pair.clone();
            let ex = pair.exchange_by_index(0);
            for w in [
                WeylElem::identity(&pair.big),
                pair.tau(2),
                ex.hw.clone(),
            ] {
                reports.push(verify_characterisation(&real, 0, &w, trials, DEFAULT_SEED));
            }
        }
        {
            let pair = catalog(Family::SpinSpin { n: 4 }).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            let ex = pair.exchange_by_index(0);
            for w in [WeylElem::identity(&pair.big), ex.us[1].clone()] {
                reports.push(verify_characterisation(&real, 0, &w, trials, DEFAULT_SEED));
            }
        }
        {
            let pair = catalog(Family::Diagonal(TypeLabel::A(2))).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            for b in 0..2 {
                let u = pair.exchange_by_index(b).us[1].clone();
                reports.push(verify_characterisation(&real, b, &WeylElem::identity(&pair.big), trials, DEFAULT_SEED));
                reports.push(verify_characterisation(&real, b, &u, trials, DEFAULT_SEED));
            }
        }

        // twist identities; the chosen twists cover all three cases
        {
            let real = slsp2_realization();
            let pair = real.pair.clone();
            let ex = pair.exchange_by_index(0);
            let table = claims::build_action_table(&pair, 0);
            let has_minus = table
                .rows
                .iter()
                .any(|(_, cells)| cells[1] == claims::Cell::Pairing(-1));
            if !has_minus {
                return Err("twist coverage: no affine case available".into());
            }
            for w in [WeylElem::identity(&pair.big), ex.hw.clone(), pair.tau(2)] {
                reports.push(crate::minors::verify_twist(&real, 0, &w, trials, DEFAULT_SEED));
            }
            let pair4 = catalog(Family::SpinSpin { n: 4 }).unwrap();
            let real4 = Realization::new(&pair4).map_err(|e| e.to_string())?;
            let hw4 = pair4.exchange_by_index(0).hw.clone();
            for w in [WeylElem::identity(&pair4.big), hw4] {
                reports.push(crate::minors::verify_twist(&real4, 0, &w, trials, DEFAULT_SEED));
            }
        }

        // representative lemmas, including the base-change sign
        let mut base_change_count = 0usize;
        for family in [
            Family::SlSp { n: 2 },
            Family::SlSp { n: 3 },
            Family::SpinSpin { n: 4 },
            Family::Diagonal(TypeLabel::A(2)),
        ] {
            let pair = catalog(family).unwrap();
            let real = Realization::new(&pair).map_err(|e| e.to_string())?;
            for rep in verify_bar_lemmas(&real, trials, DEFAULT_SEED) {
                if rep.statement_id.starts_with("base-change-sign") {
                    base_change_count += 1;
                }
                reports.push(rep);
            }
        }
        if base_change_count < 3 {
            return Err(format!(
                "only {base_change_count} alternative twist bases available"
            ));
        }

        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.statement_id.clone())
            .collect();
        if !failed.is_empty() {
            return Err(format!("failing properties: {failed:?}"));
        }
        Ok(format!(
            "{} property reports, {} base-change comparisons",
            reports.len(),
            base_change_count
        ))
    })
}

/// Criterion 8: star diagrams, byte for byte.
pub fn criterion_8() -> CriterionResult {
    run("C8", "star diagrams", 1_000, || {
        let expected_2_1_e = "\
.     *     .     *     .     *     .     *
*  .  .  =  .  .  *  -  *  .  . +/- .  .  *
*     .     *     .     .     *     .     *
.     *     *     .     *     .     .     *";
        let expected_3_2_e = "\
.     *     .     *     .     *     .     *
*     .     .     *     *     .     .     *
*  .  *  =  *  .  *  -  *  .  * +/- *  .  *
*     *     *     *     *     *     *     *
*     .     *     .     .     *     .     *
.     *     *     .     *     .     .     *";
        let expected_3_2_t4 = "\
.     *     .     *     .     *     .     *
*     .     .     *     *     .     .     *
*  .  .  =  *  .  .  -  .  .  * +/- .  .  *
*     *     *     *     *     *     *     *
*     *     *     *     *     *     *     *
.     *     *     .     *     .     .     *";
        let p2 = catalog(Family::SlSp { n: 2 }).unwrap();
        let p3 = catalog(Family::SlSp { n: 3 }).unwrap();
        let cases = [
            (2usize, 1usize, WeylElem::identity(&p2.big), expected_2_1_e),
            (3, 2, WeylElem::identity(&p3.big), expected_3_2_e),
            (3, 2, p3.tau(4), expected_3_2_t4),
        ];
        for (n, k, w, want) in cases {
            let got = star_diagram(n, k, &w)
                .map_err(|e| e.to_string())?
                .render_ascii();
            if got != want {
                return Err(format!("diagram (n={n}, k={k}) differs:\n{got}"));
            }
        }
        Ok("3 diagrams byte-identical".into())
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}
