//! Star-diagram rendering of the `SL_2n / Sp_2n` exchange identity.
//!
//! A minor indexed by a row set `S ⊆ [2n]` is drawn as a column of
//! `2n` symbols, a star at each position of `S` and a dot elsewhere;
//! the constant `1` is drawn as an all-dot or all-star column.  The
//! whole identity for `(n, k, w)` is one equation of eight columns.

use crate::pair::{catalog, Family, Pair, PairError};
use crate::weyl::{a_type_permutation, WeylElem};

#[derive(Debug, Clone)]
pub struct StarDiagram {
    pub n: usize,
    pub k: usize,
    /// Eight column sets, as boolean star masks of length `2n`.
    pub columns: Vec<Vec<bool>>,
    /// Operators between consecutive columns.
    pub ops: Vec<&'static str>,
}

/// The middle block `R_k = {n−k+1, …, n+k}` (1-based, `R_0 = ∅`,
/// `R_n = [2n]`).
fn middle_block(n: usize, k: usize) -> Vec<usize> {
    (n - k + 1..=n + k).collect()
}

fn apply(perm: &[usize], set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&i| perm[i - 1]).collect();
    out.sort_unstable();
    out
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; 2 * n];
    for &i in set {
        m[i - 1] = true;
    }
    m
}

/// Builds the diagram of the exchange identity for `(n, k)` twisted by
/// `w`.
pub fn star_diagram(n: usize, k: usize, w: &WeylElem) -> Result<StarDiagram, PairError> {
    let pair: Pair = catalog(Family::SlSp { n })?;
    if !(1..n).contains(&k) {
        return Err(PairError::NotBasisElement(format!("w{}", 2 * k)));
    }
    let ex = pair.exchange_by_index(k - 1);
    let rk = middle_block(n, k);
    let w_perm = a_type_permutation(w);

    let mut columns = Vec::new();
    for u in &ex.us {
        for v in [u.clone(), u.compose(&ex.hw)] {
            let perm = a_type_permutation(&w.compose(&v));
            columns.push(mask(n, &apply(&perm, &rk)));
        }
    }
    columns.push(mask(n, &apply(&w_perm, &middle_block(n, k - 1))));
    columns.push(mask(n, &apply(&w_perm, &middle_block(n, k + 1))));
    for (ci, col) in columns.iter().enumerate() {
        let stars = col.iter().filter(|&&s| s).count();
        assert!(
            [0, 2 * k, 2 * (k - 1), 2 * (k + 1), 2 * n].contains(&stars),
            "column {ci} has star count {stars}"
        );
    }
    Ok(StarDiagram {
        n,
        k,
        columns,
        ops: vec![".", "=", ".", "-", ".", "+/-", "."],
    })
}

impl StarDiagram {
    /// ASCII rendering: `*` for a star, `.` for a dot, operators on
    /// the row just above the vertical midpoint.
    pub fn render_ascii(&self) -> String {
        let op_row = self.n - 1;
        let mut lines = Vec::new();
        for r in 0..2 * self.n {
            let mut line = String::new();
            for (c, col) in self.columns.iter().enumerate() {
                if c > 0 {
                    if r == op_row {
                        line.push_str(&format!("{:^5}", self.ops[c - 1]));
                    } else {
                        line.push_str("     ");
                    }
                }
                line.push(if col[r] { '*' } else { '.' });
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElem;

    #[test]
    fn column_sets_n2_k1() {
        let pair = catalog(Family::SlSp { n: 2 }).unwrap();
        let e = WeylElem::identity(&pair.big);
        let d = star_diagram(2, 1, &e).unwrap();
        let sets: Vec<Vec<usize>> = d
            .columns
            .iter()
            .map(|m| (1..=4).filter(|&i| m[i - 1]).collect())
            .collect();
        assert_eq!(
            sets,
            vec![
                vec![2, 3],
                vec![1, 4],
                vec![3, 4],
                vec![1, 2],
                vec![2, 4],
                vec![1, 3],
                vec![],
                vec![1, 2, 3, 4],
            ]
        );
    }

    #[test]
    fn column_sets_n3_k2_twisted() {
        let pair = catalog(Family::SlSp { n: 3 }).unwrap();
        let e = WeylElem::identity(&pair.big);
        let d = star_diagram(3, 2, &e).unwrap();
        let set = |m: &Vec<bool>| -> Vec<usize> { (1..=6).filter(|&i| m[i - 1]).collect() };
        assert_eq!(set(&d.columns[0]), vec![2, 3, 4, 5]);
        assert_eq!(set(&d.columns[1]), vec![1, 3, 4, 6]);
        assert_eq!(set(&d.columns[6]), vec![3, 4]);

        let tau4 = pair.tau(4);
        let d4 = star_diagram(3, 2, &tau4).unwrap();
        assert_eq!(set(&d4.columns[0]), vec![2, 3, 4, 5]);
        assert_eq!(set(&d4.columns[1]), vec![1, 4, 5, 6]);
        assert_eq!(set(&d4.columns[3]), vec![1, 2, 4, 5]);
        assert_eq!(set(&d4.columns[6]), vec![4, 5]);
    }

    #[test]
    fn render_shape() {
        let pair = catalog(Family::SlSp { n: 2 }).unwrap();
        let e = WeylElem::identity(&pair.big);
        let text = star_diagram(2, 1, &e).unwrap().render_ascii();
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains('='));
        assert!(text.contains("+/-"));
    }

    #[test]
    fn bad_k_rejected() {
        let pair = catalog(Family::SlSp { n: 2 }).unwrap();
        let e = WeylElem::identity(&pair.big);
        assert!(star_diagram(2, 2, &e).is_err());
    }
}
