//! Decomposition of `B(γ) ⊗ B(r)` where `B(r)` is the one-row crystal.

use std::collections::{BTreeMap, HashMap};

use crate::crystal::{Crystal, Word, DEFAULT_COMPONENT_CAP};
use crate::error::{Error, Result};
use crate::roots::{Family, GenPartition, Weight};
use crate::tableau::highest_reading;

/// Multiplicity of each `V(λ)` in `V(γ) ⊗ V(rε_n̄)`.
pub type PieriMultiplicities = BTreeMap<GenPartition, u64>;

/// Letter counts of a row vertex. `plain[i-1]` is `k_i`, `barred[i-1]` is `k_ī`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowVertexCounts {
    pub plain: Vec<u32>,
    pub barred: Vec<u32>,
    pub zero: u32,
}

impl RowVertexCounts {
    pub fn of_word(n: usize, w: &Word) -> RowVertexCounts {
        let mut c = RowVertexCounts {
            plain: vec![0; n],
            barred: vec![0; n],
            zero: 0,
        };
        for l in &w.letters {
            match l.0 {
                0 => c.zero += 1,
                x if x > 0 => c.plain[x as usize - 1] += 1,
                x => c.barred[(-x) as usize - 1] += 1,
            }
        }
        c
    }

    pub fn len(&self) -> u32 {
        self.plain.iter().sum::<u32>() + self.barred.iter().sum::<u32>() + self.zero
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All readings of one-row tableaux of length `r` at rank `n`.
pub fn row_vertices(family: Family, n: usize, r: usize) -> Result<Vec<Word>> {
    let crystal = Crystal::new(family, n)?;
    let mut parts = vec![0; n];
    if n > 0 {
        parts[0] = r as i32;
    }
    let top = highest_reading(family, n, &parts);
    crystal.component(&top, DEFAULT_COMPONENT_CAP)
}

fn check_gamma(family: Family, n: usize, gamma: &GenPartition) -> Result<Vec<i32>> {
    if gamma.family != family || gamma.rank() != n {
        return Err(Error::Mismatch(format!(
            "shape ({gamma}) of {}{} used at {family}{n}",
            gamma.family,
            gamma.rank()
        )));
    }
    gamma.int_parts()
}

/// Pieri multiplicities from the highest weight test on `b_γ ⊗ L`.
pub fn pieri_crystal(gamma: &GenPartition, r: usize) -> Result<PieriMultiplicities> {
    let rows = row_vertices(gamma.family, gamma.rank(), r)?;
    pieri_with_rows(gamma, &rows)
}

fn pieri_with_rows(gamma: &GenPartition, rows: &[Word]) -> Result<PieriMultiplicities> {
    let (family, n) = (gamma.family, gamma.rank());
    let parts = check_gamma(family, n, gamma)?;
    let crystal = Crystal::new(family, n)?;
    let b = highest_reading(family, n, &parts);
    let colors: Vec<usize> = crystal.colors().collect();
    let phi: Vec<usize> = colors.iter().map(|&i| crystal.eps_phi(&b, i).1).collect();
    let mut out = PieriMultiplicities::new();
    for l in rows {
        let ok = colors
            .iter()
            .zip(&phi)
            .all(|(&i, &p)| crystal.eps_phi(l, i).0 <= p);
        if ok {
            let lam = GenPartition::new(family, gamma.weight.add(&crystal.weight(l)))
                .map_err(|e| Error::PropertyViolation(format!("Pieri weight not dominant: {e}")))?;
            *out.entry(lam).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Enumerates count vectors `(k_1..k_n, k_1̄..k_n̄, k_0)` of total `r`.
fn count_vectors(n: usize, r: u32, zero_max: u32, d_exclusive: bool) -> Vec<RowVertexCounts> {
    fn compositions(slots: usize, total: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=total {
            cur.push(v);
            compositions(slots - 1, total - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for zero in 0..=zero_max.min(r) {
        let mut raw = Vec::new();
        compositions(2 * n, r - zero, &mut Vec::new(), &mut raw);
        for v in raw {
            let c = RowVertexCounts {
                plain: v[..n].to_vec(),
                barred: v[n..].to_vec(),
                zero,
            };
            if d_exclusive && c.plain[0] > 0 && c.barred[0] > 0 {
                continue;
            }
            out.push(c);
        }
    }
    out
}

fn shifted(gamma: &[i32], c: &RowVertexCounts) -> Vec<i64> {
    // Result index i-1 holds λ_ī.
    let n = gamma.len();
    (1..=n)
        .map(|i| i64::from(gamma[n - i]) + i64::from(c.barred[i - 1]) - i64::from(c.plain[i - 1]))
        .collect()
}

fn collect(family: Family, hits: Vec<Vec<i64>>) -> Result<PieriMultiplicities> {
    let mut out = PieriMultiplicities::new();
    for lam in hits {
        let parts: Vec<i32> = lam.iter().rev().map(|&x| x as i32).collect();
        let gp = GenPartition::new(family, Weight::from_ints(&parts))
            .map_err(|e| Error::PropertyViolation(format!("Pieri weight not dominant: {e}")))?;
        *out.entry(gp).or_insert(0) += 1;
    }
    Ok(out)
}

/// Counting form of the type B multiplicities by letter-count inequalities.
pub fn pieri_closed_b(gamma: &GenPartition, r: usize) -> Result<PieriMultiplicities> {
    let n = gamma.rank();
    let g = check_gamma(Family::B, n, gamma)?;
    let mut hits = Vec::new();
    for c in count_vectors(n, r as u32, 1, false) {
        let lam = shifted(&g, &c);
        let kb = |i: usize| i64::from(c.barred[i - 1]);
        let kp = |i: usize| i64::from(c.plain[i - 1]);
        let l = |i: usize| lam[i - 1];
        let ok = (1..n).all(|i| l(i) <= l(i + 1) - kb(i + 1))
            && (1..n).all(|i| l(i + 1) - kb(i + 1) >= l(i) + kp(i) - kb(i))
            && if c.zero == 0 { l(1) - kb(1) >= 0 } else { l(1) - kb(1) > 0 };
        if ok {
            hits.push(lam);
        }
    }
    collect(Family::B, hits)
}

/// Counting form of the type D multiplicities by letter-count inequalities.
pub fn pieri_closed_d(gamma: &GenPartition, r: usize) -> Result<PieriMultiplicities> {
    let n = gamma.rank();
    let g = check_gamma(Family::D, n, gamma)?;
    let g1 = i64::from(g[n - 1]);
    let mut hits = Vec::new();
    for c in count_vectors(n, r as u32, 0, true) {
        let lam = shifted(&g, &c);
        let kb = |i: usize| i64::from(c.barred[i - 1]);
        let kp = |i: usize| i64::from(c.plain[i - 1]);
        let l = |i: usize| lam[i - 1];
        let top = l(2) - kb(2);
        let first = if kp(1) == 0 { l(1) <= top } else { -l(1) <= top };
        let mut ok = first
            && (2..n).all(|i| l(i) <= l(i + 1) - kb(i + 1))
            && (2..n).all(|i| l(i + 1) - kb(i + 1) >= l(i) + kp(i) - kb(i));
        if g1 >= 0 {
            if kp(1) == 0 {
                ok &= top >= l(1) - kb(1);
            }
            if kb(1) == 0 {
                ok &= top >= l(1) + kp(1);
            }
        } else {
            if kb(1) == 0 {
                ok &= top >= -l(1) - kp(1);
            }
            if kp(1) == 0 {
                ok &= top >= -l(1) + kb(1);
            }
        }
        if ok {
            hits.push(lam);
        }
    }
    collect(Family::D, hits)
}

/// Memoizes row crystals and Pieri multiplicities.
#[derive(Default)]
pub struct PieriCache {
    rows: HashMap<(Family, usize, usize), Vec<Word>>,
    mults: HashMap<(GenPartition, usize), PieriMultiplicities>,
}

impl PieriCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, gamma: &GenPartition, r: usize) -> Result<&PieriMultiplicities> {
        let key = (gamma.clone(), r);
        if !self.mults.contains_key(&key) {
            let rk = (gamma.family, gamma.rank(), r);
            if let std::collections::hash_map::Entry::Vacant(e) = self.rows.entry(rk) {
                let rows = row_vertices(gamma.family, gamma.rank(), r)?;
                e.insert(rows);
            }
            let m = pieri_with_rows(gamma, &self.rows[&rk])?;
            self.mults.insert(key.clone(), m);
        }
        Ok(&self.mults[&key])
    }
}
