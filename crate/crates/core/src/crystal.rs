//! Crystal graphs of words over the vector representation alphabets.
//!
//! A word `x₁…x_l` is the tensor product `x₁⊗…⊗x_l`; operators follow the
//! signature rule, which is the closed form of the tensor product rule.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem, Weight};

pub const DEFAULT_COMPONENT_CAP: usize = 1_000_000;

/// A letter: `i > 0` is `i`, `-i` is `ī`, and `0` is the letter 0 of type B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub i32);

impl Letter {
    pub fn magnitude(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// Human form, with a combining macron for barred letters.
    pub fn human(self) -> String {
        if self.0 < 0 {
            format!("{}\u{0304}", -self.0)
        } else {
            self.0.to_string()
        }
    }

    pub fn parse(token: &str) -> Result<Letter> {
        let t = token.trim();
        let bad = || Error::Parse(format!("bad letter {t:?}"));
        if let Some(digits) = t.strip_suffix('\u{0304}') {
            let v: i32 = digits.parse().map_err(|_| bad())?;
            if v <= 0 {
                return Err(bad());
            }
            return Ok(Letter(-v));
        }
        t.parse::<i32>().map(Letter).map_err(|_| bad())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A crystal vertex: a sequence of letters of one family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub family: Family,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(family: Family, letters: Vec<Letter>) -> Result<Word> {
        for &x in &letters {
            let legal = match family {
                Family::A => x.0 > 0,
                Family::B => true,
                Family::C | Family::D => x.0 != 0,
            };
            if !legal {
                return Err(Error::Parse(format!("letter {x} is not in the {family} alphabet")));
            }
        }
        Ok(Word { family, letters })
    }

    pub fn from_codes(family: Family, codes: &[i32]) -> Result<Word> {
        Word::new(family, codes.iter().map(|&c| Letter(c)).collect())
    }

    pub fn empty(family: Family) -> Word {
        Word {
            family,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated letters in machine (`-2`) or human (`2̄`) form.
    pub fn parse(family: Family, s: &str) -> Result<Word> {
        let letters = s
            .split_whitespace()
            .map(Letter::parse)
            .collect::<Result<Vec<_>>>()?;
        Word::new(family, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn codes(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.0).collect()
    }

    pub fn max_magnitude(&self) -> usize {
        self.letters.iter().map(|l| l.magnitude()).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            family: self.family,
            letters,
        }
    }

    pub fn human(&self) -> String {
        self.letters.iter().map(|l| l.human()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The crystal of words of a given family and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crystal {
    pub family: Family,
    pub rank: usize,
}

impl Crystal {
    pub fn new(family: Family, rank: usize) -> Result<Crystal> {
        let min = if family == Family::A { 2 } else { family.min_rank() };
        if rank < min {
            return Err(Error::InvalidRank {
                family: family.as_char(),
                rank,
            });
        }
        Ok(Crystal { family, rank })
    }

    pub fn system(&self) -> RootSystem {
        RootSystem {
            family: self.family,
            rank: self.rank,
        }
    }

    pub fn colors(&self) -> std::ops::Range<usize> {
        self.system().colors()
    }

    pub fn check_color(&self, color: usize) -> Result<()> {
        if self.colors().contains(&color) {
            Ok(())
        } else {
            Err(Error::InvalidColor {
                family: self.family.as_char(),
                rank: self.rank,
                color,
            })
        }
    }

    /// The letters of the vector representation, from highest to lowest.
    pub fn alphabet(&self) -> Vec<Letter> {
        let n = self.rank as i32;
        match self.family {
            Family::A => (1..=n).map(Letter).collect(),
            Family::B => (-n..=n).rev().map(|x| Letter(-x)).collect(),
            Family::C | Family::D => (1..=n)
                .rev()
                .map(|i| Letter(-i))
                .chain((1..=n).map(Letter))
                .collect(),
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.family != self.family {
            return Err(Error::Mismatch(format!(
                "{} word in a {} crystal",
                w.family, self.family
            )));
        }
        for &x in &w.letters {
            if x.magnitude() > self.rank || (x.0 == 0 && self.family != Family::B) || (self.family == Family::A && x.0 <= 0) {
                return Err(Error::InvalidLetter {
                    family: self.family.as_char(),
                    rank: self.rank,
                    letter: x.0,
                });
            }
        }
        Ok(())
    }

    /// `f̃_color` on a single letter.
    pub fn letter_f(&self, x: Letter, color: usize) -> Option<Letter> {
        let c = color as i32;
        let x = x.0;
        let y = match (self.family, color) {
            (Family::A, _) => (x == c).then_some(c + 1),
            (Family::B, 0) => match x {
                -1 => Some(0),
                0 => Some(1),
                _ => None,
            },
            (Family::C, 0) => (x == -1).then_some(1),
            (Family::D, 0) => match x {
                -2 => Some(1),
                -1 => Some(2),
                _ => None,
            },
            _ => {
                if x == -(c + 1) {
                    Some(-c)
                } else if x == c {
                    Some(c + 1)
                } else {
                    None
                }
            }
        };
        y.map(Letter)
    }

    /// `ẽ_color` on a single letter.
    pub fn letter_e(&self, x: Letter, color: usize) -> Option<Letter> {
        let c = color as i32;
        let x = x.0;
        let y = match (self.family, color) {
            (Family::A, _) => (x == c + 1).then_some(c),
            (Family::B, 0) => match x {
                0 => Some(-1),
                1 => Some(0),
                _ => None,
            },
            (Family::C, 0) => (x == 1).then_some(-1),
            (Family::D, 0) => match x {
                1 => Some(-2),
                2 => Some(-1),
                _ => None,
            },
            _ => {
                if x == -c {
                    Some(-(c + 1))
                } else if x == c + 1 {
                    Some(c)
                } else {
                    None
                }
            }
        };
        y.map(Letter)
    }

    pub fn letter_eps_phi(&self, x: Letter, color: usize) -> (usize, usize) {
        if self.family == Family::B && color == 0 {
            return match x.0 {
                -1 => (0, 2),
                0 => (1, 1),
                1 => (2, 0),
                _ => (0, 0),
            };
        }
        (
            usize::from(self.letter_e(x, color).is_some()),
            usize::from(self.letter_f(x, color).is_some()),
        )
    }

    /// Colored edges `x →^i y` of the vector representation.
    pub fn vector_edges(&self) -> Vec<(Letter, usize, Letter)> {
        let mut out = Vec::new();
        for x in self.alphabet() {
            for c in self.colors() {
                if let Some(y) = self.letter_f(x, c) {
                    out.push((x, c, y));
                }
            }
        }
        out
    }

    /// Unmatched signs: positions owning surviving `−` (left to right) and `+`.
    fn signature(&self, letters: &[Letter], color: usize) -> (Vec<usize>, Vec<usize>) {
        let mut plus: Vec<usize> = Vec::new();
        let mut minus: Vec<usize> = Vec::new();
        for (pos, &x) in letters.iter().enumerate() {
            let (eps, phi) = self.letter_eps_phi(x, color);
            for _ in 0..eps {
                if plus.pop().is_none() {
                    minus.push(pos);
                }
            }
            for _ in 0..phi {
                plus.push(pos);
            }
        }
        (minus, plus)
    }

    pub fn eps_phi(&self, w: &Word, color: usize) -> (usize, usize) {
        let (minus, plus) = self.signature(&w.letters, color);
        (minus.len(), plus.len())
    }

    pub fn e(&self, w: &Word, color: usize) -> Option<Word> {
        let (minus, _) = self.signature(&w.letters, color);
        let pos = *minus.last()?;
        let mut letters = w.letters.clone();
        letters[pos] = self.letter_e(letters[pos], color)?;
        Some(Word {
            family: w.family,
            letters,
        })
    }

    pub fn f(&self, w: &Word, color: usize) -> Option<Word> {
        let (_, plus) = self.signature(&w.letters, color);
        let pos = *plus.first()?;
        let mut letters = w.letters.clone();
        letters[pos] = self.letter_f(letters[pos], color)?;
        Some(Word {
            family: w.family,
            letters,
        })
    }

    pub fn weight(&self, w: &Word) -> Weight {
        let n = self.rank;
        let mut d = vec![0i32; n];
        for &x in &w.letters {
            match self.family {
                Family::A => d[x.magnitude() - 1] += 2,
                _ if x.0 < 0 => d[n - x.magnitude()] += 2,
                _ if x.0 > 0 => d[n - x.magnitude()] -= 2,
                _ => {}
            }
        }
        Weight::from_doubled(d)
    }

    pub fn is_highest(&self, w: &Word) -> bool {
        self.colors().all(|c| self.e(w, c).is_none())
    }

    /// Raises to the highest weight vertex, smallest applicable color first.
    pub fn raise(&self, w: &Word) -> (Word, Vec<usize>) {
        let mut cur = w.clone();
        let mut path = Vec::new();
        'outer: loop {
            for c in self.colors() {
                if let Some(next) = self.e(&cur, c) {
                    cur = next;
                    path.push(c);
                    continue 'outer;
                }
            }
            return (cur, path);
        }
    }

    /// Replays a raising path backwards from `target` with `f̃` operators.
    pub fn transport(&self, path: &[usize], target: &Word) -> Result<Word> {
        let mut cur = target.clone();
        for (step, &c) in path.iter().enumerate().rev() {
            cur = self
                .f(&cur, c)
                .ok_or(Error::InconsistentTransport { color: c, step })?;
        }
        Ok(cur)
    }

    /// The simple reflection `s_color` acting on the crystal.
    pub fn weyl_action(&self, w: &Word, color: usize) -> Word {
        let (eps, phi) = self.eps_phi(w, color);
        let mut cur = w.clone();
        if phi >= eps {
            for _ in 0..phi - eps {
                cur = self.f(&cur, color).expect("phi bounds f");
            }
        } else {
            for _ in 0..eps - phi {
                cur = self.e(&cur, color).expect("eps bounds e");
            }
        }
        cur
    }

    /// The connected component of `seed`, in breadth-first order.
    pub fn component(&self, seed: &Word, cap: usize) -> Result<Vec<Word>> {
        self.check_word(seed)?;
        let mut seen: HashSet<Word> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(seed.clone());
        queue.push_back(seed.clone());
        while let Some(w) = queue.pop_front() {
            for c in self.colors() {
                for next in [self.f(&w, c), self.e(&w, c)].into_iter().flatten() {
                    if seen.insert(next.clone()) {
                        if seen.len() > cap {
                            return Err(Error::TooLarge {
                                what: "crystal component",
                                size: seen.len() as u128,
                                cap: cap as u128,
                            });
                        }
                        queue.push_back(next);
                    }
                }
            }
            order.push(w);
        }
        Ok(order)
    }

    /// Graphviz rendering of a set of vertices with their `f̃` edges.
    pub fn to_dot(&self, vertices: &[Word]) -> String {
        let set: HashSet<&Word> = vertices.iter().collect();
        let mut out = String::from("digraph crystal {\n");
        for w in vertices {
            out.push_str(&format!("  \"{}\";\n", w.human()));
        }
        for w in vertices {
            for c in self.colors() {
                if let Some(v) = self.f(w, c) {
                    if set.contains(&v) {
                        out.push_str(&format!(
                            "  \"{}\" -> \"{}\" [label=\"{c}\"];\n",
                            w.human(),
                            v.human()
                        ));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
