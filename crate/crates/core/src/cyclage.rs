//! The cocyclage operation `U` on tableaux and the graphs it generates.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::crystal::Word;
use crate::error::{Error, Result};
use crate::roots::Weight;
use crate::tableau::{p_stable, Tableau, TableauKey};

/// Largest letter magnitude in `t`, the rank used by the authorization test.
pub fn ambient_rank(t: &Tableau) -> usize {
    t.reading.max_magnitude()
}

/// Whether `U(t)` is defined: more than one column, and some column holding
/// `n` or missing `n̄`.
pub fn cocyclage_authorized(t: &Tableau) -> bool {
    authorized_at(t, ambient_rank(t))
}

/// Authorization test with an explicit rank `n` (the length of the weight).
pub fn authorized_at(t: &Tableau, n: usize) -> bool {
    let cols = t.columns();
    if cols.len() <= 1 {
        return false;
    }
    let n = n as i32;
    if n == 0 {
        return true;
    }
    cols.iter()
        .any(|c| c.iter().any(|l| l.0 == n) || c.iter().all(|l| l.0 != -n))
}

/// `U(T) = P(w(T_*) x)` with `x` the first letter of the reading.
pub fn cocyclage(t: &Tableau) -> Result<Tableau> {
    if !cocyclage_authorized(t) {
        return Err(Error::Precondition(format!(
            "cocyclage is not authorized on\n{}",
            t.render()
        )));
    }
    cocyclage_unchecked(t)
}

fn cocyclage_unchecked(t: &Tableau) -> Result<Tableau> {
    if t.columns().len() <= 1 {
        return Err(Error::Precondition(format!(
            "cocyclage is not authorized on\n{}",
            t.render()
        )));
    }
    let mut letters = t.reading.letters[1..].to_vec();
    letters.push(t.reading.letters[0]);
    let w = Word {
        family: t.family,
        letters,
    };
    Ok(p_stable(t.family, &w)?.0)
}

/// Weight padded with leading zeros to `rank`.
pub fn weight_at(t: &Tableau, rank: usize) -> Weight {
    t.weight().padded(rank.max(t.rank))
}

#[derive(Clone, Debug)]
pub struct CyclageChain {
    pub nodes: Vec<Tableau>,
}

impl CyclageChain {
    pub fn terminal(&self) -> &Tableau {
        self.nodes.last().expect("a chain holds its start")
    }

    pub fn steps(&self) -> usize {
        self.nodes.len() - 1
    }
}

/// Iterates `U` until it is no longer authorized.
pub fn cyclage_chain(t: &Tableau, max_steps: usize) -> Result<CyclageChain> {
    let mut seen: HashSet<TableauKey> = HashSet::new();
    seen.insert(t.key());
    let mut nodes = vec![t.clone()];
    while cocyclage_authorized(nodes.last().unwrap()) {
        if nodes.len() > max_steps {
            return Err(Error::TooLarge {
                what: "cyclage chain steps",
                size: nodes.len() as u128,
                cap: max_steps as u128,
            });
        }
        let next = cocyclage(nodes.last().unwrap())?;
        if !seen.insert(next.key()) {
            return Err(Error::PropertyViolation(format!(
                "cyclage chain repeats\n{}",
                next.render()
            )));
        }
        nodes.push(next);
    }
    Ok(CyclageChain { nodes })
}

/// The cocyclage graph on a set of tableaux, closed under `U`.
#[derive(Clone, Debug)]
pub struct CyclageGraph {
    pub nodes: Vec<Tableau>,
    pub next: Vec<Option<usize>>,
}

impl CyclageGraph {
    pub fn build(seeds: &[Tableau], max_nodes: usize) -> Result<CyclageGraph> {
        Self::build_at(seeds, None, max_nodes)
    }

    /// Like [`CyclageGraph::build`], with a fixed authorization rank when given.
    pub fn build_at(seeds: &[Tableau], rank: Option<usize>, max_nodes: usize) -> Result<CyclageGraph> {
        let mut index: HashMap<TableauKey, usize> = HashMap::new();
        let mut nodes: Vec<Tableau> = Vec::new();
        for t in seeds {
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(t.key()) {
                e.insert(nodes.len());
                nodes.push(t.clone());
            }
        }
        let mut next = Vec::new();
        let mut i = 0;
        while i < nodes.len() {
            let t = nodes[i].clone();
            let allowed = match rank {
                Some(n) => authorized_at(&t, n),
                None => cocyclage_authorized(&t),
            };
            let edge = if allowed {
                let u = cocyclage_unchecked(&t)?;
                let j = match index.get(&u.key()) {
                    Some(&j) => j,
                    None => {
                        if nodes.len() >= max_nodes {
                            return Err(Error::TooLarge {
                                what: "cyclage graph nodes",
                                size: nodes.len() as u128 + 1,
                                cap: max_nodes as u128,
                            });
                        }
                        index.insert(u.key(), nodes.len());
                        nodes.push(u);
                        nodes.len() - 1
                    }
                };
                Some(j)
            } else {
                None
            };
            next.push(edge);
            i += 1;
        }
        Ok(CyclageGraph { nodes, next })
    }

    /// Graphviz digraph; each node is labeled by its rows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cyclage {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let label = t.render().replace('\n', "\\n");
            out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
        }
        for (i, e) in self.next.iter().enumerate() {
            if let Some(j) = e {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node {
            id: usize,
            rank: usize,
            shape: String,
            reading: String,
            rows: Vec<String>,
            next: Option<usize>,
        }
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .zip(&self.next)
            .enumerate()
            .map(|(id, (t, next))| Node {
                id,
                rank: t.rank,
                shape: t.shape.weight.to_string(),
                reading: t.reading.to_string(),
                rows: t.render().lines().map(str::to_string).collect(),
                next: *next,
            })
            .collect();
        serde_json::json!({ "nodes": nodes })
    }
}

/// Searches for labels `ch` on `members` with `ch(T) = ch(U(T)) + 1` along
/// every edge inside the set, where the labels within each group must form
/// the multiset `targets[group]`. Returns one such labeling if any exists.
pub fn find_compatible_labels(
    graph: &CyclageGraph,
    members: &[usize],
    groups: &[usize],
    targets: &BTreeMap<usize, Vec<i64>>,
) -> Option<Vec<i64>> {
    let mut pool: BTreeMap<usize, Vec<i64>> = targets.clone();
    for g in groups {
        pool.entry(*g).or_default();
    }
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for g in groups {
        *count.entry(*g).or_default() += 1;
    }
    if count.iter().any(|(g, c)| pool[g].len() != *c) {
        return None;
    }
    let position: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut labels: Vec<Option<i64>> = vec![None; members.len()];

    fn ok(graph: &CyclageGraph, members: &[usize], position: &HashMap<usize, usize>, labels: &[Option<i64>], i: usize) -> bool {
        let li = labels[i].expect("just assigned");
        let forward = match graph.next[members[i]].and_then(|j| position.get(&j)) {
            Some(&pj) => labels[pj].is_none_or(|lj| li == lj + 1),
            None => true,
        };
        let backward = members.iter().enumerate().all(|(k, &m)| {
            graph.next[m] != Some(members[i]) || labels[k].is_none_or(|lk| lk == li + 1)
        });
        forward && backward
    }

    fn rec(
        graph: &CyclageGraph,
        members: &[usize],
        groups: &[usize],
        position: &HashMap<usize, usize>,
        pool: &mut BTreeMap<usize, Vec<i64>>,
        labels: &mut Vec<Option<i64>>,
        i: usize,
    ) -> bool {
        if i == members.len() {
            return true;
        }
        let g = groups[i];
        let mut values = pool[&g].clone();
        values.sort();
        values.dedup();
        for v in values {
            let bucket = pool.get_mut(&g).unwrap();
            let k = bucket.iter().position(|&x| x == v).unwrap();
            bucket.remove(k);
            labels[i] = Some(v);
            if ok(graph, members, position, labels, i) && rec(graph, members, groups, position, pool, labels, i + 1) {
                return true;
            }
            labels[i] = None;
            pool.get_mut(&g).unwrap().push(v);
        }
        false
    }

    if rec(graph, members, groups, &position, &mut pool, &mut labels, 0) {
        Some(labels.into_iter().map(|l| l.unwrap()).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::Letter;
    use crate::roots::{Family, GenPartition};
    use crate::tableau::tableaux_of;

    fn rows(f: Family, n: usize, spec: &[&[i32]]) -> Tableau {
        let r: Vec<Vec<Letter>> = spec.iter().map(|r| r.iter().map(|&c| Letter(c)).collect()).collect();
        Tableau::from_rows(f, n, &r).unwrap()
    }

    fn t_col() -> Tableau {
        rows(Family::B, 3, &[&[-1], &[0], &[1]])
    }

    #[test]
    fn worked_chains() {
        let chains: [(&[&[&[i32]]], usize); 3] = [
            (&[&[&[-1, 0, 1]], &[&[-1, 0], &[1]], &[&[-2, 2], &[0]], &[&[-2], &[0], &[2]]], 2),
            (&[&[&[-2, 0, 2]], &[&[-2, 0], &[2]], &[&[-3, 3], &[0]], &[&[-3], &[0], &[3]]], 3),
            (&[&[&[-3, 0, 3]], &[&[-3, 0], &[3]], &[&[-4, 4], &[0]], &[&[-4], &[0], &[4]]], 4),
        ];
        for (spec, n) in chains {
            let start = rows(Family::B, n, spec[0]);
            let chain = cyclage_chain(&start, 100).unwrap();
            assert_eq!(chain.steps(), 3);
            for (node, expected) in chain.nodes.iter().zip(spec) {
                assert_eq!(node.rows(), rows(Family::B, 5, expected).rows());
            }
            assert!(chain.terminal().is_column());
        }
        let t = rows(Family::B, 3, &[&[-1], &[0], &[1]]);
        assert!(!cocyclage_authorized(&t));
        assert_eq!(cyclage_chain(&t, 10).unwrap().steps(), 0);
        let t = rows(Family::B, 3, &[&[-1, 1], &[0]]);
        assert_eq!(cocyclage(&t).unwrap().rows(), t_col().rows());
    }

    #[test]
    fn weight_zero_chains_end_in_columns() {
        for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::D, 3)] {
            for lam in GenPartition::enumerate(f, n, 4) {
                let zero = Weight::zero(n);
                for t in tableaux_of(&lam, &zero).unwrap() {
                    let chain = cyclage_chain(&t, 1000).unwrap();
                    let end = chain.terminal();
                    assert!(end.is_column(), "{f}{n}\n{}", t.render());
                    assert!(weight_at(end, 0).is_zero());
                    for node in &chain.nodes {
                        assert!(weight_at(node, 0).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn graph_export() {
        let g = CyclageGraph::build(&[], 10).unwrap();
        assert_eq!(g.to_dot(), "digraph cyclage {\n  node [shape=box, fontname=\"monospace\"];\n}\n");
        let t = rows(Family::B, 3, &[&[-1, 0, 1]]);
        let g = CyclageGraph::build(&[t], 10).unwrap();
        assert!(g.nodes[3].is_column());
        assert_eq!(g.nodes.len(), 4);
        assert_eq!(g.next, vec![Some(1), Some(2), Some(3), None]);
        assert!(g.to_dot().contains("n2 -> n3;"));
        assert_eq!(g.to_json()["nodes"][3]["rows"].as_array().unwrap().len(), 3);
    }

    fn impossibility(f: Family, mu: &str, shapes: &[&str]) -> (usize, Option<Vec<i64>>) {
        impossibility_at(f, mu, shapes, None)
    }

    fn impossibility_at(f: Family, mu: &str, shapes: &[&str], rank: Option<usize>) -> (usize, Option<Vec<i64>>) {
        let mu: Weight = mu.parse().unwrap();
        let mut seeds = Vec::new();
        let mut groups = Vec::new();
        let mut targets = BTreeMap::new();
        for (g, s) in shapes.iter().enumerate() {
            let lam = GenPartition::new(f, s.parse().unwrap()).unwrap();
            let ts = tableaux_of(&lam, &mu).unwrap();
            groups.extend(std::iter::repeat_n(g, ts.len()));
            seeds.extend(ts);
            let k = crate::kostant::kostka_def(&lam, &GenPartition::new(f, mu.clone()).unwrap()).unwrap();
            targets.insert(g, k.exponent_multiset().unwrap());
        }
        let graph = CyclageGraph::build_at(&seeds, rank, 1000).unwrap();
        let members: Vec<usize> = (0..seeds.len()).collect();
        (seeds.len(), find_compatible_labels(&graph, &members, &groups, &targets))
    }

    #[test]
    fn no_cyclage_statistic_in_b3() {
        let (count, found) = impossibility(Family::B, "0,0,0", &["3,0,0", "2,1,0", "1,1,1"]);
        assert_eq!(count, 11);
        assert_eq!(found, None);
    }

    // Edges inside the set alone do not obstruct a labeling for D₃, weight (1,0,0).
    #[test]
    fn d3_weight_one_internal_edges_admit_labels() {
        for rank in [None, Some(3)] {
            let (count, found) = impossibility_at(Family::D, "1,0,0", &["3,0,0", "2,1,0", "1,1,1", "1,1,-1"], rank);
            assert_eq!(count, 8);
            assert!(found.is_some());
        }
    }

    #[test]
    fn label_search_finds_chains() {
        let t = rows(Family::B, 3, &[&[-1, 0, 1]]);
        let g = CyclageGraph::build(&[t], 10).unwrap();
        let targets = BTreeMap::from([(0, vec![3, 2, 1, 0])]);
        assert_eq!(find_compatible_labels(&g, &[0, 1, 2, 3], &[0, 0, 0, 0], &targets), Some(vec![3, 2, 1, 0]));
    }
}
