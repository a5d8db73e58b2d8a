//! The q-analogue of Kostant's partition function and the alternating Weyl sum
//! defining `K_{λ,μ}(q)`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qlaurent::QLaurent;
use crate::roots::{Family, GenPartition, RootSystem, Weight, DEFAULT_WEYL_CAP};

/// Evaluates `P_q(β)` with a memo table owned by the caller.
pub struct Kostant {
    sys: RootSystem,
    roots: Vec<Vec<i64>>,
    simple_count: usize,
    memo: HashMap<(usize, Vec<i64>), QLaurent>,
}

impl Kostant {
    pub fn new(sys: RootSystem) -> Self {
        let mut roots: Vec<Vec<i64>> = sys
            .positive_roots()
            .iter()
            .map(|r| sys.simple_root_coords(r).expect("positive roots lie in Q+"))
            .collect();
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let simple_count = roots.iter().filter(|r| r.iter().sum::<i64>() == 1).count();
        Kostant {
            sys,
            roots,
            simple_count,
            memo: HashMap::new(),
        }
    }

    pub fn system(&self) -> RootSystem {
        self.sys
    }

    pub fn eval(&mut self, beta: &Weight) -> QLaurent {
        match self.sys.simple_root_coords(beta) {
            Some(c) => self.eval_coords(c),
            None => QLaurent::zero(),
        }
    }

    pub fn eval_coords(&mut self, c: Vec<i64>) -> QLaurent {
        let j = self.roots.len();
        self.partial(j, c)
    }

    /// Sum over multisets drawn from `roots[..j]` summing to `c`.
    fn partial(&mut self, j: usize, c: Vec<i64>) -> QLaurent {
        if j <= self.simple_count {
            // Only simple roots remain, and they are a basis.
            return QLaurent::q_pow(c.iter().sum());
        }
        if let Some(v) = self.memo.get(&(j, c.clone())) {
            return v.clone();
        }
        let root = self.roots[j - 1].clone();
        let mut out = QLaurent::zero();
        let mut rest = c.clone();
        let mut k = 0i64;
        let one = BigInt::from(1);
        loop {
            let sub = self.partial(j - 1, rest.clone());
            out.add_scaled(&sub, k, &one);
            if rest.iter().zip(&root).any(|(x, r)| x < r) {
                break;
            }
            for (x, r) in rest.iter_mut().zip(&root) {
                *x -= r;
            }
            k += 1;
        }
        self.memo.insert((j, c), out.clone());
        out
    }
}

pub fn kostant_q(sys: RootSystem, beta: &Weight) -> QLaurent {
    Kostant::new(sys).eval(beta)
}

fn check_pair(lambda: &GenPartition, mu: &GenPartition) -> Result<RootSystem> {
    if lambda.family != mu.family || lambda.rank() != mu.rank() {
        return Err(Error::Mismatch(format!(
            "{}{} weight ({}) against {}{} weight ({})",
            lambda.family,
            lambda.rank(),
            lambda,
            mu.family,
            mu.rank(),
            mu
        )));
    }
    Ok(lambda.system())
}

/// `K_{λ,μ}(q) = Σ_{σ∈W} sign(σ) P_q(σ(λ+ρ) − (μ+ρ))`.
pub fn kostka_def(lambda: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
    kostka_def_capped(lambda, mu, DEFAULT_WEYL_CAP)
}

pub fn kostka_def_capped(lambda: &GenPartition, mu: &GenPartition, cap: u128) -> Result<QLaurent> {
    let sys = check_pair(lambda, mu)?;
    let mut kostant = Kostant::new(sys);
    weyl_sum(&mut kostant, lambda, mu, cap)
}

/// The Weyl sum evaluated with a shared partition-function memo.
pub fn weyl_sum(kostant: &mut Kostant, lambda: &GenPartition, mu: &GenPartition, cap: u128) -> Result<QLaurent> {
    let sys = check_pair(lambda, mu)?;
    if sys != kostant.system() {
        return Err(Error::Mismatch("partition function built for another system".into()));
    }
    let rho = sys.rho();
    let top = lambda.weight.add(&rho);
    let bottom = mu.weight.add(&rho);
    let mut out = QLaurent::zero();
    for sigma in sys.weyl_elements(cap)? {
        let beta = sigma.act(&top).sub(&bottom);
        let Some(c) = sys.simple_root_coords(&beta) else {
            continue;
        };
        let p = kostant.eval_coords(c);
        out.add_scaled(&p, 0, &BigInt::from(sigma.sign()));
    }
    Ok(out)
}

/// The degree predicted for a nonzero `K_{λ,μ}(q)`, which is also monic.
pub fn expected_degree(lambda: &GenPartition, mu: &GenPartition) -> Option<i64> {
    let n = lambda.rank();
    let dl = lambda.weight.doubled();
    let dm = mu.weight.doubled();
    // diff(i) is 2(λ_ī − μ_ī).
    let diff = |i: usize| i64::from(dl[n - i] - dm[n - i]);
    let twice: i64 = match lambda.family {
        Family::A => (1..=n).map(|p| (p as i64 - 1) * -i64::from(dl[p - 1] - dm[p - 1])).sum(),
        Family::B => (1..=n).map(|i| i as i64 * diff(i)).sum(),
        Family::C => {
            let base: i64 = (1..=n).map(|i| i as i64 * diff(i)).sum();
            let sizes = i64::from(lambda.weight.sum_doubled() - mu.weight.sum_doubled());
            base - sizes / 2
        }
        Family::D => (2..=n).map(|i| (i as i64 - 1) * diff(i)).sum(),
    };
    (twice % 2 == 0).then_some(twice / 2)
}
