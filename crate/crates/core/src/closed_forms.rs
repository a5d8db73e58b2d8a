//! Explicit Kostka-Foulkes polynomials: the small-shape tables for `B_n`,
//! `C_n`, `D_n`, the rank-2 weight-zero formulas and the `A₂` formula.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qlaurent::QLaurent;
use crate::roots::{Family, GenPartition};

/// `c + k·n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lin {
    pub c: i64,
    pub k: i64,
}

impl Lin {
    pub const fn new(c: i64, k: i64) -> Self {
        Lin { c, k }
    }

    pub fn at(self, n: usize) -> i64 {
        self.c + self.k * n as i64
    }
}

const fn n_plus(c: i64) -> Lin {
    Lin::new(c, 1)
}

const fn two_n_plus(c: i64) -> Lin {
    Lin::new(c, 2)
}

const fn cst(c: i64) -> Lin {
    Lin::new(c, 0)
}

/// `q^shift`, optionally times `(q^top − 1)/(q^step − 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub shift: Lin,
    pub ratio: Option<(Lin, i64)>,
}

const fn mono(shift: Lin) -> Term {
    Term { shift, ratio: None }
}

const fn geo(shift: Lin, top: Lin, step: i64) -> Term {
    Term {
        shift,
        ratio: Some((top, step)),
    }
}

impl Term {
    pub fn eval(&self, n: usize) -> Result<QLaurent> {
        let shift = self.shift.at(n);
        let base = match self.ratio {
            None => QLaurent::one(),
            Some((top, step)) => QLaurent::geometric_ratio(top.at(n), step)?,
        };
        Ok(base.shift(shift))
    }
}

/// One table cell: a sum of terms, valid from rank `floor` on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixEntry {
    pub family: Family,
    pub lambda: Vec<i32>,
    pub mu: Vec<i32>,
    pub terms: Vec<Term>,
    pub floor: usize,
    /// The form as typeset, when it differs from `terms`.
    pub printed: Option<Vec<Term>>,
}

impl MatrixEntry {
    pub fn eval(&self, n: usize) -> Result<QLaurent> {
        if n < self.floor {
            return Err(Error::Precondition(format!(
                "{}{n} is below the rank floor {} of entry ({:?}, {:?})",
                self.family, self.floor, self.lambda, self.mu
            )));
        }
        let mut out = QLaurent::zero();
        for t in &self.terms {
            out = out + t.eval(n)?;
        }
        Ok(out)
    }

    /// Evaluates the typeset form, which is `terms` unless listed as a misprint.
    pub fn eval_printed(&self, n: usize) -> Result<QLaurent> {
        match &self.printed {
            None => self.eval(n),
            Some(p) => MatrixEntry {
                terms: p.clone(),
                printed: None,
                ..self.clone()
            }
            .eval(n),
        }
    }

    pub fn lambda_at(&self, n: usize) -> Result<GenPartition> {
        GenPartition::from_ints(self.family, &padded(&self.lambda, n)?)
    }

    pub fn mu_at(&self, n: usize) -> Result<GenPartition> {
        GenPartition::from_ints(self.family, &padded(&self.mu, n)?)
    }
}

fn padded(parts: &[i32], n: usize) -> Result<Vec<i32>> {
    if parts.len() > n {
        return Err(Error::Precondition(format!("{parts:?} has more than {n} parts")));
    }
    let mut v = parts.to_vec();
    v.resize(n, 0);
    Ok(v)
}

const COLUMNS: [&[i32]; 6] = [&[3], &[2, 1], &[1, 1, 1], &[2], &[1, 1], &[1]];
const ROWS: [&[i32]; 4] = [&[2], &[1, 1], &[1], &[]];

type Cell = (&'static [Term], usize);

const Z: &[Term] = &[];

// Rows follow ROWS, columns follow COLUMNS.
const B_TABLE: [[Cell; 6]; 4] = [
    [
        (&[mono(n_plus(0))], 1),
        (&[mono(n_plus(-1))], 2),
        (Z, 3),
        (&[mono(cst(0))], 1),
        (Z, 2),
        (Z, 1),
    ],
    [
        (&[mono(n_plus(1))], 2),
        (&[mono(n_plus(0)), mono(n_plus(-1))], 2),
        (&[mono(n_plus(-2))], 3),
        (&[mono(cst(1))], 2),
        (&[mono(cst(0))], 2),
        (Z, 2),
    ],
    [
        (&[geo(cst(2), two_n_plus(0), 2)], 1),
        (&[geo(cst(1), two_n_plus(-1), 1)], 2),
        (&[geo(cst(1), two_n_plus(-2), 2)], 3),
        (&[mono(n_plus(0))], 1),
        (&[mono(n_plus(-1))], 2),
        (&[mono(cst(0))], 1),
    ],
    [
        (&[geo(n_plus(2), two_n_plus(0), 2)], 1),
        (&[geo(n_plus(1), two_n_plus(-1), 1)], 2),
        (&[geo(n_plus(-1), two_n_plus(0), 2)], 3),
        (&[geo(cst(2), two_n_plus(0), 2)], 1),
        (&[geo(cst(1), two_n_plus(0), 2)], 2),
        (&[mono(n_plus(0))], 1),
    ],
];

const C_TABLE: [[Cell; 5]; 4] = [
    [(Z, 1), (Z, 2), (Z, 3), (&[mono(cst(0))], 1), (Z, 2)],
    [(Z, 2), (Z, 2), (Z, 3), (&[mono(cst(1))], 2), (&[mono(cst(0))], 2)],
    [
        (&[geo(cst(1), two_n_plus(0), 2)], 1),
        (&[geo(cst(1), two_n_plus(-2), 1)], 2),
        (&[geo(cst(2), two_n_plus(-4), 2)], 3),
        (Z, 1),
        (Z, 2),
    ],
    [
        (Z, 1),
        (Z, 2),
        (Z, 3),
        (&[geo(cst(1), two_n_plus(0), 2)], 1),
        (&[geo(cst(2), two_n_plus(-2), 2)], 2),
    ],
];

const D_TABLE: [[Cell; 5]; 4] = [
    [(Z, 4), (Z, 4), (Z, 4), (&[mono(cst(0))], 4), (Z, 4)],
    [(Z, 4), (Z, 4), (Z, 4), (&[mono(cst(1))], 4), (&[mono(cst(0))], 4)],
    [
        (&[geo(cst(2), two_n_plus(-2), 2)], 4),
        (&[mono(n_plus(-1)), geo(cst(1), two_n_plus(-3), 1)], 4),
        (&[mono(n_plus(-2)), geo(cst(1), two_n_plus(-4), 2)], 4),
        (Z, 4),
        (Z, 4),
    ],
    [
        (Z, 4),
        (Z, 4),
        (Z, 4),
        (&[geo(cst(2), two_n_plus(-2), 2)], 4),
        (&[mono(n_plus(-1)), geo(cst(1), two_n_plus(-2), 2)], 4),
    ],
];

/// Cells whose typeset form disagrees with the Weyl sum at every rank.
const MISPRINTS: [(Family, usize, usize, &[Term]); 2] = [
    (Family::B, 2, 1, &[mono(n_plus(0)), geo(cst(1), two_n_plus(-1), 1)]),
    (Family::B, 3, 0, &[geo(n_plus(2), two_n_plus(-1), 1)]),
];

fn cell(family: Family, row: usize, col: usize) -> Option<Cell> {
    match family {
        Family::B => B_TABLE.get(row)?.get(col).copied(),
        Family::C => C_TABLE.get(row)?.get(col).copied(),
        Family::D => D_TABLE.get(row)?.get(col).copied(),
        Family::A => None,
    }
}

fn trimmed(parts: &[i32]) -> Vec<i32> {
    let mut v = parts.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Every tabulated entry of one family.
pub fn matrix_entries(family: Family) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for (row, mu) in ROWS.iter().enumerate() {
        for (col, lambda) in COLUMNS.iter().enumerate() {
            if let Some((terms, floor)) = cell(family, row, col) {
                out.push(MatrixEntry {
                    family,
                    lambda: lambda.to_vec(),
                    mu: mu.to_vec(),
                    terms: terms.to_vec(),
                    floor,
                    printed: MISPRINTS
                        .iter()
                        .find(|m| m.0 == family && m.1 == row && m.2 == col)
                        .map(|m| m.3.to_vec()),
                });
            }
        }
    }
    out
}

/// The table entry for `(λ, μ)`, if tabulated.
pub fn matrix_entry(family: Family, lambda: &[i32], mu: &[i32]) -> Option<MatrixEntry> {
    let (l, m) = (trimmed(lambda), trimmed(mu));
    matrix_entries(family).into_iter().find(|e| e.lambda == l && e.mu == m)
}

/// `K_{λ,μ}` read off the small-shape tables. `Ok(None)` if `(λ, μ)` is not tabulated.
pub fn small_matrix_entry(lambda: &GenPartition, mu: &GenPartition) -> Result<Option<QLaurent>> {
    if lambda.family != mu.family || lambda.rank() != mu.rank() {
        return Err(Error::Mismatch(format!("({lambda}) against ({mu})")));
    }
    let (Some(l), Some(m)) = (lambda.ints(), mu.ints()) else {
        return Ok(None);
    };
    match matrix_entry(lambda.family, &l, &m) {
        Some(e) => e.eval(lambda.rank()).map(Some),
        None => Ok(None),
    }
}

fn rank2_ints(lambda: &GenPartition, family: Family) -> Result<(i64, i64)> {
    if lambda.family != family || lambda.rank() != 2 {
        return Err(Error::Mismatch(format!("({lambda}) is not a {family}2 weight")));
    }
    let p = lambda.int_parts()?;
    Ok((i64::from(p[0]), i64::from(p[1])))
}

fn g(top: i64, step: i64) -> QLaurent {
    QLaurent::geometric_ratio(top, step).expect("nonnegative multiple of the step")
}

/// `K^{C₂}_{λ,0}(q)`.
pub fn k_c2_weight0(lambda: &GenPartition) -> Result<QLaurent> {
    let (l2, l1) = rank2_ints(lambda, Family::C)?;
    let half = (l2 + l1) / 2;
    let v = match (l2 % 2, l1 % 2) {
        (0, 0) => (g(l1 + 2, 2) + g(l1 + 1, 1) * g(l2 - l1, 2).shift(2)).shift(half),
        (1, 1) => (g(l1 + 1, 2) + g(l1 + 1, 1) * g(l2 - l1, 2).shift(1)).shift(half + 1),
        _ => QLaurent::zero(),
    };
    Ok(v)
}

/// `K^{B₂}_{λ,0}(q)`.
pub fn k_b2_weight0(lambda: &GenPartition) -> Result<QLaurent> {
    let (l2, l1) = rank2_ints(lambda, Family::B)?;
    let v = if (l2 + l1) % 2 == 0 {
        (g(2 * l1 + 2, 2) + g(2 * l1 + 1, 1) * g(l2 - l1, 2).shift(2)).shift(l2)
    } else {
        (g(2 * l1 + 1, 1) * g(l2 - l1 + 1, 2)).shift(l2 + 1)
    };
    Ok(v)
}

/// `Ψ(λ_2̄, λ_1̄) = (λ_2̄ + λ_1̄, λ_2̄ − λ_1̄)`, from `B₂` to `C₂`.
pub fn psi(lambda: &GenPartition) -> Result<GenPartition> {
    let (l2, l1) = rank2_ints(lambda, Family::B)?;
    GenPartition::from_ints(Family::C, &[(l2 + l1) as i32, (l2 - l1) as i32])
}

/// `K^{A₂}_{(a,b,0),μ}(q)` at the weight `μ = ((a+b)/3)(1,1,1)`; zero when `3 ∤ a+b`.
pub fn k_a2_weight0(lambda: &GenPartition) -> Result<QLaurent> {
    if lambda.family != Family::A || lambda.rank() != 3 {
        return Err(Error::Mismatch(format!("({lambda}) is not an A2 weight")));
    }
    let p = lambda.int_parts()?;
    let (a, b) = (i64::from(p[0] - p[2]), i64::from(p[1] - p[2]));
    if (a + b) % 3 != 0 {
        return Ok(QLaurent::zero());
    }
    Ok(if a >= 2 * b {
        g(b + 1, 1).shift(a - b)
    } else {
        g(a - b + 1, 1).shift(b)
    })
}

/// `A₂` formula with the exponents exactly as printed, kept for comparison.
pub fn k_a2_weight0_printed(a: i64, b: i64) -> QLaurent {
    if a >= 2 * b {
        g(a + 1, 1).shift(a - b)
    } else {
        g(a - b + 1, 1).shift(b)
    }
}
