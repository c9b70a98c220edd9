//! Built-in example codes and the reference classification table.

use serde::Serialize;

use crate::code::CanonicalGenerators;
use crate::poly::BinPoly;
use crate::ring::{ComplementPair, RTheta, ThetaParam};

/// A named example code together with its reference verdict and
/// exponents `(alpha, beta, gamma, delta)` where stated.
#[derive(Clone, Debug)]
pub struct Example {
    pub id: &'static str,
    pub gens: CanonicalGenerators,
    pub expected_reversible: bool,
    pub expected_exponents: [Option<i64>; 4],
}

fn build(n: usize, theta: &str, named: &[(&'static str, &str)]) -> CanonicalGenerators {
    let theta: ThetaParam = theta.parse().expect("built-in theta");
    let named = named.iter().map(|&(k, p)| (k, BinPoly::parse(p).expect("built-in polynomial")));
    CanonicalGenerators::from_named(n, theta, named).expect("built-in generators are valid")
}

const ALL_ONES_6: &str = "z^5+z^4+z^3+z^2+z+1";

pub fn examples() -> Vec<Example> {
    let ex1 = [
        ("g11", "z^3+z^2+z+1"),
        ("g22", "z^2+1"),
        ("g24", "1"),
        ("g33", "z^2+1"),
        ("g44", "z+1"),
    ];
    let mut ex4 = ex1.to_vec();
    ex4.extend([("g13", "z+1"), ("g14", "1")]);
    vec![
        Example {
            id: "ex1",
            gens: build(4, "2*v", &ex1),
            expected_reversible: true,
            expected_exponents: [Some(2), Some(3), Some(3), Some(2)],
        },
        Example {
            id: "ex2",
            gens: build(6, "2+v", &[
                ("g11", "z^4+z^3+z+1"),
                ("g22", "z^2+z+1"),
                ("g23", "z^2+z+1"),
                ("g33", "z^4+z^3+z+1"),
                ("g44", "z^2+z+1"),
            ]),
            expected_reversible: true,
            expected_exponents: [None; 4],
        },
        Example {
            id: "ex3",
            gens: build(4, "3+2*v", &[
                ("g11", "z^3+z^2+z+1"),
                ("g13", "1"),
                ("g22", "z^2+1"),
                ("g33", "z+1"),
                ("g44", "1"),
            ]),
            expected_reversible: true,
            expected_exponents: [None; 4],
        },
        Example {
            id: "ex4",
            gens: build(4, "2*v", &ex4),
            expected_reversible: true,
            expected_exponents: [None, Some(3), Some(2), Some(2)],
        },
        Example {
            id: "ex5",
            gens: build(6, "v", &[
                ("g11", ALL_ONES_6),
                ("g13", "z^4+z^2+1"),
                ("g22", "z+1"),
                ("g23", "z+1"),
                ("g33", ALL_ONES_6),
                ("g44", "1"),
            ]),
            expected_reversible: true,
            expected_exponents: [None, Some(5), Some(1), Some(0)],
        },
        Example {
            id: "ex6",
            gens: build(6, "0", &[
                ("g11", ALL_ONES_6),
                ("g13", "z^2+z+1"),
                ("g14", "z"),
                ("g22", "z^4+z^2+1"),
                ("g33", "z^3+1"),
                ("g34", "1"),
                ("g44", "z^2+z+1"),
            ]),
            expected_reversible: false,
            expected_exponents: [None; 4],
        },
    ]
}

pub fn example(id: &str) -> Option<Example> {
    examples().into_iter().find(|e| e.id == id)
}

/// Which complement pairs a table row speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairSpec {
    All,
    One { u: RTheta, t: RTheta },
}

/// One row of the reference classification table.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableRow {
    pub row: usize,
    pub example: &'static str,
    pub pairs: PairSpec,
    pub expected_reversible: bool,
    pub expected_rev_comp: bool,
}

pub fn table() -> Vec<TableRow> {
    let one = |u: RTheta, t: RTheta| PairSpec::One { u, t };
    let r = RTheta::new;
    let rows = [
        ("ex1", PairSpec::All, true, true),
        ("ex2", one(r(1, 0), r(2, 1)), true, true),
        ("ex2", one(r(1, 2), r(0, 2)), true, false),
        ("ex3", one(r(3, 2), r(2, 0)), true, true),
        ("ex3", one(r(3, 0), r(2, 2)), true, false),
        ("ex4", one(r(1, 0), r(0, 1)), true, true),
        ("ex4", one(r(1, 0), r(3, 1)), true, false),
        ("ex5", one(r(1, 0), r(0, 1)), true, true),
        ("ex5", one(r(1, 2), r(0, 2)), true, false),
        ("ex6", PairSpec::All, false, false),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(i, (example, pairs, rev, rc))| TableRow {
            row: i + 1,
            example,
            pairs,
            expected_reversible: rev,
            expected_rev_comp: rc,
        })
        .collect()
}

impl TableRow {
    /// The concrete pairs of this row; fails if a listed pair is invalid.
    pub fn resolve(&self, theta: ThetaParam) -> Result<Vec<ComplementPair>, crate::ring::RingError> {
        match self.pairs {
            PairSpec::All => Ok(crate::ring::enumerate_complement_pairs(theta)),
            PairSpec::One { u, t } => Ok(vec![ComplementPair::new(theta, u, t)?]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid() {
        assert_eq!(examples().len(), 6);
        for row in table() {
            let ex = example(row.example).unwrap();
            assert!(!row.resolve(ex.gens.theta()).unwrap().is_empty(), "row {}", row.row);
        }
    }
}
