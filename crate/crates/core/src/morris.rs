//! Rank recursion for `K_{ν,μ}(q)` in types B, C and D.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kostant::{weyl_sum, Kostant};
use crate::pieri::PieriCache;
use crate::qlaurent::QLaurent;
use crate::roots::{Family, GenPartition, RootSystem, Weight, DEFAULT_WEYL_CAP};

/// Memoized evaluator. Type D pairs with `ν_1̄ < 0` are first replaced by
/// `(ν*, μ*)` unless built with [`Morris::literal`].
pub struct Morris {
    memo: HashMap<(GenPartition, GenPartition), QLaurent>,
    pieri: PieriCache,
    kostant: HashMap<RootSystem, Kostant>,
    star_negative: bool,
}

impl Default for Morris {
    fn default() -> Self {
        Self::new()
    }
}

fn truncate(w: &GenPartition) -> Result<GenPartition> {
    let parts = w.int_parts()?;
    GenPartition::from_ints(w.family, &parts[1..])
}

fn base_rank(family: Family) -> usize {
    match family {
        Family::D => 2,
        _ => 1,
    }
}

impl Morris {
    pub fn new() -> Self {
        Morris {
            memo: HashMap::new(),
            pieri: PieriCache::new(),
            kostant: HashMap::new(),
            star_negative: true,
        }
    }

    /// Applies the recursion as stated even when `ν_1̄ < 0` in type D.
    pub fn literal() -> Self {
        Morris {
            star_negative: false,
            ..Self::new()
        }
    }

    fn check(nu: &GenPartition, mu: &GenPartition) -> Result<()> {
        if nu.family != mu.family || nu.rank() != mu.rank() {
            return Err(Error::Mismatch(format!("({nu}) against ({mu})")));
        }
        if nu.family == Family::A {
            return Err(Error::Unsupported("rank recursion for type A".into()));
        }
        nu.int_parts()?;
        mu.int_parts()?;
        Ok(())
    }

    fn base(&mut self, nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
        let sys = nu.system();
        let k = self.kostant.entry(sys).or_insert_with(|| Kostant::new(sys));
        weyl_sum(k, nu, mu, DEFAULT_WEYL_CAP)
    }

    pub fn kostka(&mut self, nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
        Self::check(nu, mu)?;
        self.eval(nu, mu)
    }

    fn eval(&mut self, nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
        let n = nu.rank();
        let family = nu.family;
        let nparts = nu.int_parts()?;
        if self.star_negative && family == Family::D && nparts[n - 1] < 0 {
            let nu_s = GenPartition::new(family, nu.weight.star())?;
            let mu_s = GenPartition::new(family, mu.weight.star())?;
            return self.eval(&nu_s, &mu_s);
        }
        if n <= base_rank(family) {
            return self.base(nu, mu);
        }
        let key = (nu.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mparts = mu.int_parts()?;
        let mu_prime = truncate(mu)?;
        // nu_bar(i) is ν_ī.
        let nu_bar = |i: usize| i64::from(nparts[n - i]);
        let mu_top = i64::from(mparts[0]);
        let n_i = n as i64;
        let mut out = QLaurent::zero();
        for k in 1..=n {
            let r_k = nu_bar(k) + k as i64 - mu_top - n_i;
            if r_k < 0 {
                continue;
            }
            let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
            let mut gamma: Vec<i32> = Vec::with_capacity(n - 1);
            for i in (k + 1..=n).rev() {
                gamma.push(nu_bar(i) as i32 + 1);
            }
            for i in (1..k).rev() {
                gamma.push(nu_bar(i) as i32);
            }
            let gamma = GenPartition::new(family, Weight::from_ints(&gamma))?;
            let inner = self.inner_sum(&gamma, r_k, &mu_prime)?;
            out.add_scaled(&inner, 0, &BigInt::from(sign));
        }
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    /// `Σ_{r+2m=R} q^{e} Σ_λ mult · K_{λ,μ′}` with `e = R` (B, D) or `R − m` (C).
    fn inner_sum(&mut self, gamma: &GenPartition, big_r: i64, mu_prime: &GenPartition) -> Result<QLaurent> {
        let family = gamma.family;
        let mut out = QLaurent::zero();
        let mut m = 0i64;
        while 2 * m <= big_r {
            let r = (big_r - 2 * m) as usize;
            let exp = if family == Family::C { big_r - m } else { big_r };
            let mults: Vec<(GenPartition, u64)> = self
                .pieri
                .get(gamma, r)?
                .iter()
                .map(|(l, c)| (l.clone(), *c))
                .collect();
            for (lam, c) in mults {
                let k = self.eval(&lam, mu_prime)?;
                out.add_scaled(&k, exp, &BigInt::from(c));
            }
            m += 1;
        }
        Ok(out)
    }

    /// The single-term case `μ_n̄ ≥ ν_{n−1}‾`.
    pub fn special(&mut self, nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
        Self::check(nu, mu)?;
        let n = nu.rank();
        if n <= base_rank(nu.family) {
            return Err(Error::Precondition(format!(
                "rank {n} is at or below the recursion base"
            )));
        }
        let nparts = nu.int_parts()?;
        let mparts = mu.int_parts()?;
        if mparts[0] < nparts[1] {
            return Err(Error::Precondition(format!(
                "μ_n̄ = {} is smaller than ν_(n-1)̄ = {}",
                mparts[0], nparts[1]
            )));
        }
        let l = i64::from(nparts[0] - mparts[0]);
        if l < 0 {
            return Ok(QLaurent::zero());
        }
        self.inner_sum(&truncate(nu)?, l, &truncate(mu)?)
    }
}

pub fn morris_kostka(nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
    Morris::new().kostka(nu, mu)
}

pub fn morris_special(nu: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
    Morris::new().special(nu, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::kostka_def;

    fn gp(f: Family, s: &str) -> GenPartition {
        GenPartition::new(f, s.parse().unwrap()).unwrap()
    }

    fn p(s: &str) -> QLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn worked_values() {
        let k = morris_kostka(&gp(Family::B, "4,1"), &gp(Family::B, "1,0")).unwrap();
        assert_eq!(k, p("q^7+q^6+2q^5+q^4+q^3"));
        let k = morris_kostka(&gp(Family::B, "3,0,0"), &gp(Family::B, "0,0,0")).unwrap();
        assert_eq!(k, p("q^9+q^7+q^5"));
        for n in 3..=5 {
            let mut nu = vec![0; n];
            nu[0] = 2;
            let nu = GenPartition::from_ints(Family::D, &nu).unwrap();
            let zero = GenPartition::from_ints(Family::D, &vec![0; n]).unwrap();
            let expected: QLaurent = (1..n as i64).map(|j| QLaurent::q_pow(2 * j)).fold(QLaurent::zero(), |a, b| a + b);
            assert_eq!(morris_kostka(&nu, &zero).unwrap(), expected, "D{n}");
        }
    }

    #[test]
    fn agrees_with_definition() {
        for (f, n, size) in [(Family::B, 2, 5), (Family::C, 2, 5), (Family::D, 3, 4), (Family::B, 3, 4), (Family::C, 3, 4)] {
            let shapes = GenPartition::enumerate(f, n, size);
            let mut m = Morris::new();
            for nu in &shapes {
                for mu in &shapes {
                    let expected = kostka_def(nu, mu).unwrap();
                    assert_eq!(m.kostka(nu, mu).unwrap(), expected, "{f}{n} ({nu}) ({mu})");
                }
            }
        }
    }

    #[test]
    fn negative_last_part_needs_star() {
        let nu = gp(Family::D, "2,2,-2");
        let mu = gp(Family::D, "0,0,0");
        assert_eq!(kostka_def(&nu, &mu).unwrap(), p("q^6"));
        assert_eq!(morris_kostka(&nu, &mu).unwrap(), p("q^6"));
        assert_eq!(Morris::literal().kostka(&nu, &mu).unwrap(), p("q^6-q^3"));
        let nu = gp(Family::D, "2,2,2,0");
        let mu = gp(Family::D, "0,0,0,0");
        assert_eq!(morris_kostka(&nu, &mu).unwrap(), kostka_def(&nu, &mu).unwrap());
    }

    #[test]
    fn special_case() {
        let nu = gp(Family::B, "4,1");
        let mu = gp(Family::B, "1,0");
        assert_eq!(morris_special(&nu, &mu).unwrap(), morris_kostka(&nu, &mu).unwrap());
        assert_eq!(morris_special(&nu, &nu).unwrap(), QLaurent::one());
        let low = gp(Family::C, "1,1");
        assert!(morris_special(&gp(Family::C, "1,1"), &low).unwrap() == QLaurent::one());
        assert!(morris_special(&gp(Family::C, "2,2"), &gp(Family::C, "1,1")).is_err());
        assert!(morris_special(&gp(Family::C, "1,0"), &gp(Family::C, "2,0")).unwrap().is_zero());
    }
}
