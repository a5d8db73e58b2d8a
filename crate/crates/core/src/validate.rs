//! Cross-validation of every computation method against the Weyl-sum oracle.

use serde::Serialize;

use crate::charge::{charge_a, kostka_charge};
use crate::closed_forms::{k_b2_weight0, k_c2_weight0, matrix_entries, psi};
use crate::cyclage::{cyclage_chain, weight_at};
use crate::error::Result;
use crate::kostant::{expected_degree, kostka_def};
use crate::morris::Morris;
use crate::pieri::{pieri_closed_b, pieri_closed_d, pieri_crystal};
use crate::qlaurent::QLaurent;
use crate::roots::{Family, GenPartition, Weight};
use crate::statistic::{kostka_statistic, statistic_valid};
use crate::tableau::tableaux_of;

#[derive(Clone, Debug, Serialize)]
pub struct ValidateConfig {
    pub max_rank: usize,
    pub max_boxes: i32,
    pub families: Vec<Family>,
    /// Adds `1` to every oracle value, so that the harness must report failures.
    pub inject_fault: bool,
}

impl Default for ValidateConfig {
    fn default() -> Self {
        ValidateConfig {
            max_rank: 3,
            max_boxes: 4,
            families: vec![Family::A, Family::B, Family::C, Family::D],
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.failed == 0 { "PASS" } else { "FAIL" };
            s += &format!("{tag} {:<22} {} passed, {} failed\n", c.name, c.passed, c.failed);
            for f in &c.failures {
                s += &format!("    {f}\n");
            }
        }
        s += &format!("total: {} passed, {} failed\n", self.passed(), self.failed());
        s
    }
}

struct Oracle {
    fault: bool,
}

impl Oracle {
    fn k(&self, lam: &GenPartition, mu: &GenPartition) -> Result<QLaurent> {
        let v = kostka_def(lam, mu)?;
        Ok(if self.fault { v + QLaurent::one() } else { v })
    }
}

fn ranks(family: Family, max_rank: usize) -> std::ops::RangeInclusive<usize> {
    let low = match family {
        Family::D => 2,
        _ => 1,
    };
    low..=max_rank
}

pub fn run(cfg: &ValidateConfig) -> Result<Report> {
    let oracle = Oracle { fault: cfg.inject_fault };
    let has = |f: Family| cfg.families.contains(&f);
    let bcd: Vec<Family> = [Family::B, Family::C, Family::D].into_iter().filter(|&f| has(f)).collect();
    let mut checks = Vec::new();

    let mut morris = CheckResult::new("morris = oracle");
    let mut degree = CheckResult::new("degree and monicity");
    for &f in &bcd {
        for n in ranks(f, cfg.max_rank) {
            let shapes = GenPartition::enumerate(f, n, cfg.max_boxes);
            let mut m = Morris::new();
            for nu in &shapes {
                for mu in &shapes {
                    let k = oracle.k(nu, mu)?;
                    let got = m.kostka(nu, mu)?;
                    morris.record(got == k, || format!("{f}{n} ({nu}) ({mu}): {got} vs {k}"));
                    if !k.is_zero() {
                        let ok = k.leading_coeff() == Some(&1.into()) && k.degree() == expected_degree(nu, mu);
                        degree.record(ok, || format!("{f}{n} ({nu}) ({mu}): {k}"));
                    }
                }
            }
        }
    }
    checks.push(morris);
    checks.push(degree);

    let mut stat = CheckResult::new("statistic = oracle");
    let mut count = CheckResult::new("tableau counts");
    for &f in &bcd {
        for n in ranks(f, cfg.max_rank) {
            if f == Family::D && n < 3 {
                continue;
            }
            let shapes = GenPartition::enumerate(f, n, cfg.max_boxes);
            for lam in &shapes {
                if lam.int_parts()?[n - 1] < 0 {
                    continue;
                }
                for mu in &shapes {
                    if !statistic_valid(lam, mu) {
                        continue;
                    }
                    let k = oracle.k(lam, mu)?;
                    let (got, _) = kostka_statistic(lam, mu)?;
                    stat.record(got == k, || format!("{f}{n} ({lam}) ({mu}): {got} vs {k}"));
                    let c = tableaux_of(lam, &mu.weight)?.len();
                    count.record(k.eval_at_one() == c.into(), || format!("{f}{n} ({lam}) ({mu}): {c} tableaux, K(1) = {}", k.eval_at_one()));
                }
            }
        }
    }
    checks.push(stat);
    checks.push(count);

    let mut closed = CheckResult::new("closed forms = oracle");
    for &f in &bcd {
        for e in matrix_entries(f) {
            for n in e.floor..=cfg.max_rank {
                let k = oracle.k(&e.lambda_at(n)?, &e.mu_at(n)?)?;
                let got = e.eval(n)?;
                closed.record(got == k, || format!("{f}{n} {:?} {:?}: {got} vs {k}", e.lambda, e.mu));
            }
        }
    }
    if cfg.max_rank >= 2 {
        for l2 in 0..=cfg.max_boxes {
            for l1 in 0..=l2 {
                if has(Family::C) {
                    let c = GenPartition::from_ints(Family::C, &[l2, l1])?;
                    let k = oracle.k(&c, &GenPartition::from_ints(Family::C, &[0, 0])?)?;
                    let got = k_c2_weight0(&c)?;
                    closed.record(got == k, || format!("C2 ({c}) weight 0: {got} vs {k}"));
                }
                if has(Family::B) {
                    let b = GenPartition::from_ints(Family::B, &[l2, l1])?;
                    let k = oracle.k(&b, &GenPartition::from_ints(Family::B, &[0, 0])?)?;
                    let got = k_b2_weight0(&b)?;
                    closed.record(got == k, || format!("B2 ({b}) weight 0: {got} vs {k}"));
                    closed.record(got == k_c2_weight0(&psi(&b)?)?, || format!("Ψ at ({b})"));
                }
            }
        }
    }
    checks.push(closed);

    let mut pieri = CheckResult::new("pieri closed = crystal");
    for f in [Family::B, Family::D].into_iter().filter(|&f| has(f)) {
        for n in ranks(f, cfg.max_rank) {
            for g in GenPartition::enumerate(f, n, cfg.max_boxes) {
                for r in 0..=cfg.max_boxes as usize {
                    let expected = pieri_crystal(&g, r)?;
                    let got = match f {
                        Family::B => pieri_closed_b(&g, r)?,
                        _ => pieri_closed_d(&g, r)?,
                    };
                    pieri.record(got == expected, || format!("{f}{n} γ=({g}) r={r}"));
                }
            }
        }
    }
    checks.push(pieri);

    if has(Family::A) {
        let mut anchors = CheckResult::new("charge anchors");
        let cases: [(&[u32], u64); 5] = [(&[2, 1], 1), (&[1, 2], 0), (&[2, 1, 3], 2), (&[3, 1, 2], 1), (&[1, 1, 2, 1, 2, 3], 0)];
        for (w, v) in cases {
            let got = charge_a(w)?;
            anchors.record(got == v, || format!("{w:?}: {got} vs {v}"));
        }
        checks.push(anchors);

        let mut charge = CheckResult::new("charge sum = oracle");
        for n in 2..=cfg.max_rank + 1 {
            let shapes = GenPartition::enumerate(Family::A, n, cfg.max_boxes);
            for lam in &shapes {
                for mu in shapes.iter().filter(|m| m.boxes() == lam.boxes()) {
                    let k = oracle.k(lam, mu)?;
                    let got = kostka_charge(lam, mu)?;
                    charge.record(got == k, || format!("A{} ({lam}) ({mu}): {got} vs {k}", n - 1));
                }
            }
        }
        checks.push(charge);
    }

    let mut cyc = CheckResult::new("cyclage termination");
    for f in [Family::B, Family::D].into_iter().filter(|&f| has(f)) {
        for n in ranks(f, cfg.max_rank) {
            if f == Family::D && n < 3 {
                continue;
            }
            let zero = Weight::zero(n);
            for lam in GenPartition::enumerate(f, n, cfg.max_boxes) {
                for t in tableaux_of(&lam, &zero)? {
                    let ok = match cyclage_chain(&t, 10_000) {
                        Ok(chain) => chain.terminal().is_column() && weight_at(chain.terminal(), 0).is_zero(),
                        Err(_) => false,
                    };
                    cyc.record(ok, || format!("{f}{n}\n{}", t.render()));
                }
            }
        }
    }
    checks.push(cyc);

    Ok(Report { checks })
}
