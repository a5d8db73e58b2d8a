//! Lascoux–Schützenberger charge and the `D₃ ≅ A₃` letter translation.

use crate::crystal::{Crystal, Letter, Word};
use crate::error::{Error, Result};
use crate::qlaurent::QLaurent;
use crate::roots::{Family, GenPartition};
use crate::tableau::{highest_reading, tableaux_of};

fn content(letters: &[u32], m: usize) -> Vec<usize> {
    let mut c = vec![0; m];
    for &x in letters {
        c[x as usize - 1] += 1;
    }
    c
}

/// Sorts the content into a partition with the type-A Weyl group action.
fn dominant_rearrangement(letters: &[u32]) -> Result<Vec<u32>> {
    let m = letters.iter().copied().max().unwrap_or(1).max(2) as usize;
    let crystal = Crystal::new(Family::A, m)?;
    let mut w = Word::new(Family::A, letters.iter().map(|&x| Letter(x as i32)).collect())?;
    loop {
        let c = content(&w.codes().iter().map(|&x| x as u32).collect::<Vec<_>>(), m);
        match (1..m).find(|&i| c[i - 1] < c[i]) {
            Some(i) => w = crystal.weyl_action(&w, i),
            None => return Ok(w.codes().iter().map(|&x| x as u32).collect()),
        }
    }
}

/// `ch_A` of a word over the letters `1, 2, …`, in the column reading used
/// for tableaux here (the mirror image of the classical row word).
pub fn charge_a(letters: &[u32]) -> Result<u64> {
    if letters.contains(&0) {
        return Err(Error::Precondition("charge needs letters ≥ 1".into()));
    }
    let word = dominant_rearrangement(letters)?;
    let len = word.len();
    let mut used = vec![false; len];
    let mut remaining = len;
    let mut total = 0u64;
    while remaining > 0 {
        let Some(mut pos) = (0..len).find(|&p| !used[p] && word[p] == 1) else {
            return Err(Error::PropertyViolation("charge content is not a partition".into()));
        };
        used[pos] = true;
        remaining -= 1;
        let mut index = 0u64;
        let mut r = 2;
        loop {
            let right = (pos + 1..len).find(|&p| !used[p] && word[p] == r);
            let next = match right {
                Some(p) => Some(p),
                None => {
                    let wrapped = (0..pos).find(|&p| !used[p] && word[p] == r);
                    if wrapped.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(p) = next else { break };
            used[p] = true;
            remaining -= 1;
            total += index;
            pos = p;
            r += 1;
        }
    }
    Ok(total)
}

/// `Σ_T q^{ch_A(T)}` over semistandard tableaux of shape λ and content μ.
pub fn kostka_charge(lambda: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
    if lambda.family != Family::A || mu.family != Family::A || lambda.rank() != mu.rank() {
        return Err(Error::Mismatch(format!("charge sum needs two type A weights of equal rank, got ({lambda}) and ({mu})")));
    }
    let mut out = QLaurent::zero();
    for t in tableaux_of(lambda, &mu.weight)? {
        let letters: Vec<u32> = t.reading.codes().iter().map(|&x| x as u32).collect();
        out.add_term(charge_a(&letters)? as i64, 1.into());
    }
    Ok(out)
}

/// Maps a D₃ color to the matching A₃ color.
pub fn d3_color(c: usize) -> usize {
    match c {
        0 => 3,
        c => c,
    }
}

/// Translates a word of the D₃ crystal into the isomorphic A₃ crystal on letters 1–4.
pub fn d3_to_a3(word: &Word) -> Result<Vec<u32>> {
    let d3 = Crystal::new(Family::D, 3)?;
    d3.check_word(word)?;
    let a3 = Crystal::new(Family::A, 4)?;
    let (hw, path) = d3.raise(word);
    let mut a = [0i32; 4];
    for c in d3.colors() {
        a[d3_color(c)] = d3.eps_phi(&hw, c).1 as i32;
    }
    let shape = [a[1] + a[2] + a[3], a[2] + a[3], a[3], 0];
    let top = highest_reading(Family::A, 4, &shape);
    let mapped: Vec<usize> = path.iter().map(|&c| d3_color(c)).collect();
    let image = a3.transport(&mapped, &top)?;
    Ok(image.codes().iter().map(|&x| x as u32).collect())
}
