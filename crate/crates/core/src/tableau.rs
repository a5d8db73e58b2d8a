//! Kashiwara–Nakashima tableaux realized as vertices of crystal components.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::crystal::{Crystal, Letter, Word, DEFAULT_COMPONENT_CAP};
use crate::error::{Error, Result};
use crate::roots::{Family, GenPartition, Weight};

/// A tableau of integer-part shape, stored through its column reading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub family: Family,
    pub rank: usize,
    pub shape: GenPartition,
    pub reading: Word,
}

/// Rank-independent identity of a tableau: signed shape without trailing
/// zero parts, and the reading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauKey {
    pub family: Family,
    pub parts: Vec<i32>,
    pub reading: Vec<i32>,
}

fn display_rows(parts: &[i32]) -> Vec<usize> {
    parts
        .iter()
        .map(|p| p.unsigned_abs() as usize)
        .filter(|&p| p > 0)
        .collect()
}

fn conjugate(rows: &[usize]) -> Vec<usize> {
    let width = rows.first().copied().unwrap_or(0);
    (0..width).map(|j| rows.iter().filter(|&&r| r > j).count()).collect()
}

/// Column reading of a row-major grid: columns right to left, each top to bottom.
pub fn read_rows(rows: &[Vec<Letter>]) -> Vec<Letter> {
    let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let heights = conjugate(&lengths);
    let mut out = Vec::new();
    for j in (0..heights.len()).rev() {
        for row in rows.iter().take(heights[j]) {
            out.push(row[j]);
        }
    }
    out
}

/// Reading of `T_λ`, the highest weight vertex `b_λ`.
pub fn highest_reading(family: Family, n: usize, parts: &[i32]) -> Word {
    let rows: Vec<Vec<Letter>> = parts
        .iter()
        .enumerate()
        .filter(|(_, p)| **p != 0)
        .map(|(k, &p)| {
            let letter = match family {
                Family::A => Letter(k as i32 + 1),
                Family::D if p < 0 => Letter(1),
                _ => Letter(-((n - k) as i32)),
            };
            vec![letter; p.unsigned_abs() as usize]
        })
        .collect();
    Word {
        family,
        letters: read_rows(&rows),
    }
}

impl Tableau {
    fn checked_parts(family: Family, n: usize, shape: &GenPartition) -> Result<Vec<i32>> {
        if shape.family != family || shape.rank() != n {
            return Err(Error::Mismatch(format!(
                "shape ({shape}) of {}{} used at {family}{n}",
                shape.family,
                shape.rank()
            )));
        }
        shape.int_parts()
    }

    pub fn highest(shape: &GenPartition) -> Result<Tableau> {
        let (family, n) = (shape.family, shape.rank());
        let parts = Self::checked_parts(family, n, shape)?;
        Ok(Tableau {
            family,
            rank: n,
            shape: shape.clone(),
            reading: highest_reading(family, n, &parts),
        })
    }

    /// Builds a tableau from its reading, checking crystal membership.
    pub fn from_reading(shape: &GenPartition, reading: Word) -> Result<Tableau> {
        let (family, n) = (shape.family, shape.rank());
        let parts = Self::checked_parts(family, n, shape)?;
        let crystal = Crystal::new(family, n)?;
        crystal.check_word(&reading)?;
        let b = highest_reading(family, n, &parts);
        let (hw, _) = crystal.raise(&reading);
        if hw != b {
            return Err(Error::MalformedTableau(format!(
                "reading {} is not in the component of shape ({shape})",
                reading.human()
            )));
        }
        Ok(Tableau {
            family,
            rank: n,
            shape: shape.clone(),
            reading,
        })
    }

    /// Builds a tableau from its rows (top row first), inferring the shape.
    pub fn from_rows(family: Family, n: usize, rows: &[Vec<Letter>]) -> Result<Tableau> {
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if lengths.windows(2).any(|p| p[0] < p[1]) || lengths.contains(&0) {
            return Err(Error::MalformedTableau("row lengths must weakly decrease".into()));
        }
        let reading = Word::new(family, read_rows(rows))?;
        let crystal = Crystal::new(family, n)?;
        crystal.check_word(&reading)?;
        let (hw, _) = crystal.raise(&reading);
        let shape = GenPartition::new(family, crystal.weight(&hw))
            .map_err(|e| Error::MalformedTableau(e.to_string()))?;
        let parts = shape.int_parts()?;
        if display_rows(&parts) != lengths {
            return Err(Error::MalformedTableau(format!(
                "rows do not form a tableau of shape ({shape})"
            )));
        }
        Tableau::from_reading(&shape, reading)
    }

    pub fn parts(&self) -> Vec<i32> {
        self.shape.ints().expect("tableau shapes have integer parts")
    }

    /// Row lengths of the displayed diagram (λ, or λ* when the last part is negative).
    pub fn row_lengths(&self) -> Vec<usize> {
        display_rows(&self.parts())
    }

    pub fn column_heights(&self) -> Vec<usize> {
        conjugate(&self.row_lengths())
    }

    pub fn num_boxes(&self) -> usize {
        self.reading.len()
    }

    /// Columns from left to right, each top to bottom.
    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let heights = self.column_heights();
        let mut cols = vec![Vec::new(); heights.len()];
        let mut pos = 0;
        for j in (0..heights.len()).rev() {
            cols[j] = self.reading.letters[pos..pos + heights[j]].to_vec();
            pos += heights[j];
        }
        cols
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let lengths = self.row_lengths();
        let cols = self.columns();
        lengths
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|j| cols[j][r]).collect())
            .collect()
    }

    /// Rectangular row-major grid padded with `None`.
    pub fn grid(&self) -> Vec<Vec<Option<Letter>>> {
        let rows = self.rows();
        let width = rows.first().map_or(0, |r| r.len());
        rows.iter()
            .map(|r| (0..width).map(|j| r.get(j).copied()).collect())
            .collect()
    }

    pub fn weight(&self) -> Weight {
        Crystal {
            family: self.family,
            rank: self.rank,
        }
        .weight(&self.reading)
    }

    pub fn key(&self) -> TableauKey {
        let mut parts = self.parts();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        TableauKey {
            family: self.family,
            parts,
            reading: self.reading.codes(),
        }
    }

    pub fn is_row(&self) -> bool {
        self.row_lengths().len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.column_heights().len() <= 1
    }

    /// Multi-line human rendering, one row per line.
    pub fn render(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|l| l.human()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            family: self.family,
            rank: self.rank,
            shape: self.shape.weight.to_string(),
            reading: self.reading.to_string(),
            grid: self
                .grid()
                .iter()
                .map(|r| r.iter().map(|c| c.map(|l| l.0)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableauJson {
    pub family: Family,
    pub rank: usize,
    pub shape: String,
    pub reading: String,
    pub grid: Vec<Vec<Option<i32>>>,
}

/// All tableaux of shape λ, in breadth-first order from `T_λ`.
pub fn component_tableaux(shape: &GenPartition, cap: usize) -> Result<Vec<Tableau>> {
    let top = Tableau::highest(shape)?;
    let crystal = Crystal::new(shape.family, shape.rank())?;
    Ok(crystal
        .component(&top.reading, cap)?
        .into_iter()
        .map(|reading| Tableau {
            family: shape.family,
            rank: shape.rank(),
            shape: shape.clone(),
            reading,
        })
        .collect())
}

/// Tableaux of shape λ grouped by weight.
pub fn tableaux_by_weight(shape: &GenPartition, cap: usize) -> Result<HashMap<Weight, Vec<Tableau>>> {
    let mut out: HashMap<Weight, Vec<Tableau>> = HashMap::new();
    for t in component_tableaux(shape, cap)? {
        out.entry(t.weight()).or_default().push(t);
    }
    Ok(out)
}

pub fn tableaux_of(shape: &GenPartition, mu: &Weight) -> Result<Vec<Tableau>> {
    if mu.rank() != shape.rank() {
        return Err(Error::Mismatch(format!("weight ({mu}) against shape ({shape})")));
    }
    Ok(component_tableaux(shape, DEFAULT_COMPONENT_CAP)?
        .into_iter()
        .filter(|t| &t.weight() == mu)
        .collect())
}

/// The tableau in the crystal class of `word` at rank `n`.
pub fn p_symbol(family: Family, n: usize, word: &Word) -> Result<Tableau> {
    let crystal = Crystal::new(family, n)?;
    crystal.check_word(word)?;
    let (hw, path) = crystal.raise(word);
    let shape = GenPartition::new(family, crystal.weight(&hw))
        .map_err(|e| Error::PropertyViolation(format!("highest weight not dominant: {e}")))?;
    let parts = shape.int_parts()?;
    let reading = crystal.transport(&path, &highest_reading(family, n, &parts))?;
    Ok(Tableau {
        family,
        rank: n,
        shape,
        reading,
    })
}

/// Smallest rank at which words of this family can be read.
pub fn base_rank(family: Family) -> usize {
    match family {
        Family::A | Family::D => 2,
        _ => 1,
    }
}

/// P-symbol computed at a rank large enough to avoid contraction: the first
/// rank `k` at which ranks `k` and `k+1` agree.
pub fn p_stable(family: Family, word: &Word) -> Result<(Tableau, usize)> {
    let n0 = word.max_magnitude().max(base_rank(family));
    p_stable_capped(family, word, n0 + word.len().max(1))
}

pub fn p_stable_capped(family: Family, word: &Word, rank_cap: usize) -> Result<(Tableau, usize)> {
    let n0 = word.max_magnitude().max(base_rank(family));
    let mut prev = p_symbol(family, n0, word)?;
    for k in n0..rank_cap {
        let next = p_symbol(family, k + 1, word)?;
        if next.key() == prev.key() {
            return Ok((prev, k));
        }
        prev = next;
    }
    Err(Error::TooLarge {
        what: "stabilization rank",
        size: rank_cap as u128 + 1,
        cap: rank_cap as u128,
    })
}

/// Splits `T` as a top row `R` (rank n) tensored with a rank-(n−1) tableau `T′`.
pub fn factor_row(t: &Tableau) -> Result<(Tableau, Tableau)> {
    let n = t.rank;
    let parts = t.parts();
    if parts[n - 1] < 0 {
        return Err(Error::Unsupported(format!(
            "row factorization of shape ({}) with negative last part",
            t.shape
        )));
    }
    if n < base_rank(t.family) + 1 {
        return Err(Error::Unsupported(format!("row factorization at {}{n}", t.family)));
    }
    let family = t.family;
    let crystal = Crystal::new(family, n)?;
    let a = parts[0] as usize;
    let rest_parts = parts[1..].to_vec();
    let mut target = vec![Letter(-(n as i32)); a];
    target.extend(highest_reading(family, n - 1, &rest_parts).letters);
    let target = Word {
        family,
        letters: target,
    };
    let (_, path) = crystal.raise(&t.reading);
    let image = crystal.transport(&path, &target)?;
    let r_word = Word {
        family,
        letters: image.letters[..a].to_vec(),
    };
    let tp_word = Word {
        family,
        letters: image.letters[a..].to_vec(),
    };
    if tp_word.max_magnitude() >= n {
        return Err(Error::PropertyViolation(format!(
            "row factorization of {} leaves letters of magnitude {n} in T′ = {}",
            t.reading.human(),
            tp_word.human()
        )));
    }
    let mut row_parts = vec![0; n];
    row_parts[0] = a as i32;
    let r = Tableau::from_reading(&GenPartition::from_ints(family, &row_parts)?, r_word)?;
    let tp = Tableau::from_reading(&GenPartition::from_ints(family, &rest_parts)?, tp_word)?;
    Ok((r, tp))
}

/// The reading of a row with every letter `n̄` and `n` removed.
pub fn strip_extremes(r: &Tableau, n: usize) -> Result<Word> {
    if !r.is_row() {
        return Err(Error::Precondition("strip_extremes expects a one-row tableau".into()));
    }
    Ok(Word {
        family: r.family,
        letters: r
            .reading
            .letters
            .iter()
            .copied()
            .filter(|l| l.magnitude() != n)
            .collect(),
    })
}
