//! Removal scenarios and attack curves.
//!
//! Every removal step starts again from the original network: the removal set
//! for grid point `p_j` is the first `round(p_j * P)` items of one
//! [`RemovalOrder`], so the sets are nested and a curve is obtained in a
//! single reverse union-find pass.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{DsuForest, Graph, NodeId};
use crate::rng::{self, ORDER_STREAM};
use crate::{fmt as numfmt, Error, Result};

/// What a scenario removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Node,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scenario {
    /// Random node failure.
    #[serde(rename = "RNF")]
    Rnf,
    /// High-degree attack on nodes.
    #[serde(rename = "HDAA")]
    Hdaa,
    /// Random edge failure.
    #[serde(rename = "REF")]
    Ref,
    /// High-edge-degree attack on edges.
    #[serde(rename = "HEDAA")]
    Hedaa,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::Rnf,
        Scenario::Hdaa,
        Scenario::Ref,
        Scenario::Hedaa,
    ];

    pub fn target(self) -> Target {
        match self {
            Scenario::Rnf | Scenario::Hdaa => Target::Node,
            Scenario::Ref | Scenario::Hedaa => Target::Edge,
        }
    }

    /// Whether the removal order depends on the seed.
    pub fn is_random(self) -> bool {
        matches!(self, Scenario::Rnf | Scenario::Ref)
    }

    /// Byte tag used by the record format.
    pub fn code(self) -> u8 {
        match self {
            Scenario::Rnf => 0,
            Scenario::Hdaa => 1,
            Scenario::Ref => 2,
            Scenario::Hedaa => 3,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        Scenario::ALL.get(code as usize).copied()
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::Rnf => "RNF",
            Scenario::Hdaa => "HDAA",
            Scenario::Ref => "REF",
            Scenario::Hedaa => "HEDAA",
        })
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rnf" => Ok(Scenario::Rnf),
            "hdaa" => Ok(Scenario::Hdaa),
            "ref" => Ok(Scenario::Ref),
            "hedaa" => Ok(Scenario::Hedaa),
            other => Err(Error::param(format!("unknown scenario '{other}'"))),
        }
    }
}

/// Removal-fraction grid `p_j = j / steps` for `j = 0..steps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    steps: usize,
}

impl CurveSpec {
    pub fn new(steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::param("curve needs at least one step"));
        }
        Ok(CurveSpec { steps })
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn p(&self, j: usize) -> f64 {
        j as f64 / self.steps as f64
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.steps).map(|j| self.p(j)).collect()
    }

    /// Items removed at grid point `j` out of `total`: `p_j * total` rounded
    /// half-up, computed in integers.
    pub fn removal_count(&self, j: usize, total: usize) -> usize {
        let (j, total, steps) = (j as u128, total as u128, self.steps as u128);
        ((2 * j * total + steps) / (2 * steps)) as usize
    }
}

/// Total order in which a scenario removes nodes or edges. Edge items are
/// indices into [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalOrder {
    target: Target,
    items: Vec<u32>,
}

impl RemovalOrder {
    /// Checks that `items` is a permutation of `0..len` before wrapping it.
    pub fn new(target: Target, items: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; items.len()];
        for &i in &items {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(Error::param(format!(
                        "removal order is not a permutation (item {i})"
                    )))
                }
            }
        }
        Ok(RemovalOrder { target, items })
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn items(&self) -> &[u32] {
        &self.items
    }

    fn check_against(&self, g: &Graph) -> Result<usize> {
        let total = match self.target {
            Target::Node => g.n(),
            Target::Edge => g.m(),
        };
        if self.items.len() != total {
            return Err(Error::param(format!(
                "removal order has {} items but the graph has {total} {}",
                self.items.len(),
                if self.target == Target::Node {
                    "nodes"
                } else {
                    "edges"
                }
            )));
        }
        if g.n() == 0 {
            return Err(Error::param("attack curve of an empty graph"));
        }
        Ok(total)
    }
}

/// Relative LCC size at each grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackCurve {
    values: Vec<f64>,
}

impl AttackCurve {
    pub fn new(values: Vec<f64>) -> Self {
        AttackCurve { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0])
    }

    /// Writes `p,value` CSV rows over the grid of `spec`.
    pub fn write_csv(&self, spec: &CurveSpec, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "p,value")?;
        for (j, v) in self.values.iter().enumerate() {
            writeln!(out, "{},{}", numfmt::sig9(spec.p(j)), numfmt::sig9(*v))?;
        }
        out.flush()
    }
}

/// Optional deviations from the default simulation semantics.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AttackOptions {
    /// HDAA/HEDAA: recompute (edge) degrees on the residual graph after
    /// every single removal instead of ranking once on the original graph.
    pub adaptive: bool,
    /// RNF/REF: draw an independent random removal set at every grid point
    /// instead of using prefixes of one permutation. Curves are then no
    /// longer guaranteed to be monotone.
    pub resample_per_step: bool,
}

/// Removal order for `scenario`. Random scenarios shuffle uniformly from
/// `seed`; degree attacks rank once on the original graph, descending, with
/// ties broken by ascending node id or ascending `(min, max)` endpoints.
pub fn removal_order(g: &Graph, scenario: Scenario, seed: u64) -> RemovalOrder {
    let items = match scenario {
        Scenario::Rnf => shuffled(g.n(), seed),
        Scenario::Ref => shuffled(g.m(), seed),
        Scenario::Hdaa => {
            let mut items: Vec<u32> = (0..g.n() as u32).collect();
            items.sort_by_key(|&v| (Reverse(g.degree(v)), v));
            items
        }
        Scenario::Hedaa => {
            let mut items: Vec<u32> = (0..g.m() as u32).collect();
            items.sort_by_key(|&e| {
                (
                    Reverse(g.edge_degree_by_id(e as usize)),
                    g.edges()[e as usize],
                )
            });
            items
        }
    };
    RemovalOrder {
        target: scenario.target(),
        items,
    }
}

/// Like [`removal_order`], but HDAA/HEDAA re-rank on the residual graph after
/// every removal. Same tie rules.
pub fn adaptive_removal_order(g: &Graph, scenario: Scenario, seed: u64) -> RemovalOrder {
    let items = match scenario {
        Scenario::Rnf | Scenario::Ref => return removal_order(g, scenario, seed),
        Scenario::Hdaa => adaptive_node_order(g),
        Scenario::Hedaa => adaptive_edge_order(g),
    };
    RemovalOrder {
        target: scenario.target(),
        items,
    }
}

fn shuffled(len: usize, seed: u64) -> Vec<u32> {
    let mut items: Vec<u32> = (0..len as u32).collect();
    items.shuffle(&mut rng::stream(seed, ORDER_STREAM));
    items
}

fn adaptive_node_order(g: &Graph) -> Vec<u32> {
    let mut degree = g.degrees();
    let mut removed = vec![false; g.n()];
    let mut heap: BinaryHeap<(usize, Reverse<NodeId>)> = (0..g.n() as NodeId)
        .map(|v| (degree[v as usize], Reverse(v)))
        .collect();
    let mut order = Vec::with_capacity(g.n());
    while let Some((d, Reverse(v))) = heap.pop() {
        if removed[v as usize] || d != degree[v as usize] {
            continue;
        }
        removed[v as usize] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w as usize] {
                degree[w as usize] -= 1;
                heap.push((degree[w as usize], Reverse(w)));
            }
        }
    }
    order
}

fn adaptive_edge_order(g: &Graph) -> Vec<u32> {
    let edges = g.edges();
    let mut degree = g.degrees();
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u as usize].push(id as u32);
        incident[v as usize].push(id as u32);
    }
    let key = |degree: &[usize], id: u32| {
        let (u, v) = edges[id as usize];
        let kd = degree[u as usize] as u64 * degree[v as usize] as u64;
        (kd, Reverse((u, v)), id)
    };
    let mut alive = vec![true; g.m()];
    let mut heap: BinaryHeap<_> = (0..g.m() as u32).map(|id| key(&degree, id)).collect();
    let mut order = Vec::with_capacity(g.m());
    while let Some(entry) = heap.pop() {
        let id = entry.2;
        if !alive[id as usize] || entry != key(&degree, id) {
            continue;
        }
        alive[id as usize] = false;
        order.push(id);
        let (u, v) = edges[id as usize];
        degree[u as usize] -= 1;
        degree[v as usize] -= 1;
        for &x in [u, v].iter() {
            for &other in &incident[x as usize] {
                if alive[other as usize] {
                    heap.push(key(&degree, other));
                }
            }
        }
    }
    order
}

/// Attack curve by replaying `order` backwards into a union-find forest and
/// reading the largest component at each prefix boundary. Runs in
/// `O((N + M) α(N) + steps)`.
pub fn attack_curve(g: &Graph, order: &RemovalOrder, spec: &CurveSpec) -> Result<AttackCurve> {
    let total = order.check_against(g)?;
    let n = g.n() as f64;
    let mut values = vec![0.0; spec.steps()];
    let mut dsu = match order.target {
        Target::Node => DsuForest::new(g.n()),
        Target::Edge => DsuForest::with_all_active(g.n()),
    };
    // Items order[removed..] are present.
    let mut removed = total;
    for j in (0..spec.steps()).rev() {
        let keep_from = spec.removal_count(j, total);
        while removed > keep_from {
            removed -= 1;
            let item = order.items[removed];
            match order.target {
                Target::Node => {
                    dsu.activate(item as usize);
                    for &w in g.neighbors(item) {
                        if dsu.is_active(w as usize) {
                            dsu.union(item as usize, w as usize);
                        }
                    }
                }
                Target::Edge => {
                    let (u, v) = g.edges()[item as usize];
                    dsu.union(u as usize, v as usize);
                }
            }
        }
        values[j] = dsu.max_size() as f64 / n;
    }
    Ok(AttackCurve { values })
}

/// Reference implementation: for every grid point, rebuild the residual
/// graph from scratch and find its largest component by BFS. Costs
/// `O(steps * (N + M))`.
pub fn naive_attack_curve(
    g: &Graph,
    order: &RemovalOrder,
    spec: &CurveSpec,
) -> Result<AttackCurve> {
    let total = order.check_against(g)?;
    let values = (0..spec.steps())
        .map(|j| {
            let k = spec.removal_count(j, total);
            residual_lcc(g, order.target, &order.items[..k]) as f64 / g.n() as f64
        })
        .collect();
    Ok(AttackCurve { values })
}

fn residual_lcc(g: &Graph, target: Target, removed_items: &[u32]) -> usize {
    let mut node_alive = vec![true; g.n()];
    let mut edge_alive = vec![true; g.m()];
    match target {
        Target::Node => removed_items
            .iter()
            .for_each(|&v| node_alive[v as usize] = false),
        Target::Edge => removed_items
            .iter()
            .for_each(|&e| edge_alive[e as usize] = false),
    }
    let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); g.n()];
    for (&(u, v), _) in g.edges().iter().zip(&edge_alive).filter(|(_, a)| **a) {
        if node_alive[u as usize] && node_alive[v as usize] {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
    }
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    let mut best = 0;
    for s in 0..g.n() {
        if seen[s] || !node_alive[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in &adj[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Random-failure curve where each grid point draws its own removal set,
/// independent of the other grid points. Deterministic scenarios fall back
/// to [`attack_curve`].
pub fn resampled_attack_curve(
    g: &Graph,
    scenario: Scenario,
    spec: &CurveSpec,
    seed: u64,
) -> Result<AttackCurve> {
    if !scenario.is_random() {
        return attack_curve(g, &removal_order(g, scenario, seed), spec);
    }
    let target = scenario.target();
    if g.n() == 0 {
        return Err(Error::param("attack curve of an empty graph"));
    }
    let total = match target {
        Target::Node => g.n(),
        Target::Edge => g.m(),
    };
    let mut rng = rng::stream(seed, ORDER_STREAM);
    let mut items: Vec<u32> = (0..total as u32).collect();
    let values = (0..spec.steps())
        .map(|j| {
            let k = spec.removal_count(j, total);
            let (removed, _) = items.partial_shuffle(&mut rng, k);
            residual_lcc(g, target, removed) as f64 / g.n() as f64
        })
        .collect();
    Ok(AttackCurve { values })
}

/// Simulates one curve for `scenario`, honouring `opts`.
pub fn simulate(
    g: &Graph,
    scenario: Scenario,
    spec: &CurveSpec,
    seed: u64,
    opts: &AttackOptions,
) -> Result<AttackCurve> {
    if opts.resample_per_step && scenario.is_random() {
        return resampled_attack_curve(g, scenario, spec, seed);
    }
    let order = if opts.adaptive {
        adaptive_removal_order(g, scenario, seed)
    } else {
        removal_order(g, scenario, seed)
    };
    attack_curve(g, &order, spec)
}

/// Independent realizations of a scenario on one graph. Realization `r` uses
/// seed `seed + r`. Deterministic scenarios yield exactly one curve whatever
/// `realizations` is. Output order follows the realization index.
pub fn curve_ensemble(
    g: &Graph,
    scenario: Scenario,
    spec: &CurveSpec,
    realizations: usize,
    seed: u64,
    opts: &AttackOptions,
) -> Result<Vec<AttackCurve>> {
    if realizations == 0 {
        return Err(Error::param("ensemble needs at least one realization"));
    }
    let count = if scenario.is_random() {
        realizations
    } else {
        1
    };
    (0..count as u64)
        .into_par_iter()
        .map(|r| simulate(g, scenario, spec, rng::graph_seed(seed, r), opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_er;
    use crate::graph::tests::{complete, path, star};

    fn curve(g: &Graph, scenario: Scenario, steps: usize) -> Vec<f64> {
        let spec = CurveSpec::new(steps).unwrap();
        attack_curve(g, &removal_order(g, scenario, 0), &spec)
            .unwrap()
            .into_values()
    }

    #[test]
    fn grid_shape() {
        let spec = CurveSpec::new(4).unwrap();
        assert_eq!(spec.grid(), vec![0.0, 0.25, 0.5, 0.75]);
        assert!(CurveSpec::new(0).is_err());
        let spec = CurveSpec::new(1000).unwrap();
        let grid = spec.grid();
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[999], 0.999);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn removal_counts_round_half_up() {
        let spec = CurveSpec::new(4).unwrap();
        // 2 * j / 4: 0, 0.5, 1, 1.5
        let counts: Vec<_> = (0..4).map(|j| spec.removal_count(j, 2)).collect();
        assert_eq!(counts, vec![0, 1, 1, 2]);
        let spec = CurveSpec::new(1000).unwrap();
        assert!((0..1000).all(|j| spec.removal_count(j, 1000) == j));
    }

    #[test]
    fn order_examples() {
        let s = star(5);
        assert_eq!(
            removal_order(&s, Scenario::Hdaa, 0).items(),
            &[0, 1, 2, 3, 4, 5]
        );

        let p = path(4);
        let order = removal_order(&p, Scenario::Hedaa, 0);
        let edges: Vec<_> = order
            .items()
            .iter()
            .map(|&e| p.edges()[e as usize])
            .collect();
        assert_eq!(edges, vec![(1, 2), (0, 1), (2, 3)]);

        assert_eq!(
            removal_order(&complete(4), Scenario::Hdaa, 9).items(),
            &[0, 1, 2, 3]
        );
    }

    #[test]
    fn random_orders_are_permutations() {
        let g = gen_er(50, 4.0, 3).unwrap();
        for scenario in Scenario::ALL {
            let order = removal_order(&g, scenario, 17);
            assert!(RemovalOrder::new(order.target(), order.items().to_vec()).is_ok());
        }
        assert_eq!(
            removal_order(&g, Scenario::Rnf, 5),
            removal_order(&g, Scenario::Rnf, 5)
        );
        assert_ne!(
            removal_order(&g, Scenario::Rnf, 5),
            removal_order(&g, Scenario::Rnf, 6)
        );
    }

    #[test]
    fn curve_examples() {
        assert_eq!(
            curve(&complete(4), Scenario::Hdaa, 4),
            vec![1.0, 0.75, 0.5, 0.25]
        );
        assert_eq!(
            curve(&star(3), Scenario::Hdaa, 4),
            vec![1.0, 0.25, 0.25, 0.25]
        );
        assert_eq!(curve(&path(4), Scenario::Hedaa, 3), vec![1.0, 0.5, 0.5]);
    }

    #[test]
    fn naive_examples() {
        let spec = CurveSpec::new(4).unwrap();
        let k4 = complete(4);
        let c = naive_attack_curve(&k4, &removal_order(&k4, Scenario::Hdaa, 0), &spec).unwrap();
        assert_eq!(c.values(), &[1.0, 0.75, 0.5, 0.25]);
        let spec = CurveSpec::new(3).unwrap();
        let p = path(4);
        let c = naive_attack_curve(&p, &removal_order(&p, Scenario::Hedaa, 0), &spec).unwrap();
        assert_eq!(c.values(), &[1.0, 0.5, 0.5]);
    }

    #[test]
    fn mismatched_order_rejected() {
        let g = path(4);
        let spec = CurveSpec::new(3).unwrap();
        let node_order = removal_order(&g, Scenario::Rnf, 0);
        let edge_order = RemovalOrder::new(Target::Edge, node_order.items().to_vec()).unwrap();
        assert!(attack_curve(&g, &edge_order, &spec).is_err());
        assert!(RemovalOrder::new(Target::Node, vec![0, 0, 1]).is_err());
        assert!(RemovalOrder::new(Target::Node, vec![0, 3]).is_err());
    }

    #[test]
    fn edge_removal_to_completion_leaves_singletons() {
        // With steps > 2M the last grid points remove every edge.
        let g = path(3);
        let values = curve(&g, Scenario::Ref, 8);
        assert_eq!(*values.last().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn disconnected_graph_starts_below_one() {
        let g = Graph::new(4, [(0, 1)]).unwrap();
        assert_eq!(curve(&g, Scenario::Rnf, 4)[0], 0.5);
    }

    #[test]
    fn adaptive_orders() {
        // Static HDAA on a path removes the interior nodes in id order;
        // adaptive ranking sees node 2 drop to degree 1 after node 1 goes.
        let p = path(5);
        assert_eq!(
            removal_order(&p, Scenario::Hdaa, 0).items(),
            &[1, 2, 3, 0, 4]
        );
        assert_eq!(
            adaptive_removal_order(&p, Scenario::Hdaa, 0).items(),
            &[1, 3, 0, 2, 4]
        );

        let g = gen_er(60, 4.0, 8).unwrap();
        for scenario in [Scenario::Hdaa, Scenario::Hedaa] {
            let order = adaptive_removal_order(&g, scenario, 0);
            assert!(RemovalOrder::new(order.target(), order.items().to_vec()).is_ok());
            let spec = CurveSpec::new(60).unwrap();
            let fast = attack_curve(&g, &order, &spec).unwrap();
            assert_eq!(fast, naive_attack_curve(&g, &order, &spec).unwrap());
        }
    }

    #[test]
    fn adaptive_edge_order_on_star_plus_tail() {
        // Star on 0 with leaves 1..=3, tail 3-4. Edge degrees: (0,1)=3,
        // (0,2)=3, (0,3)=6, (3,4)=2. After (0,3) goes: (0,1)=2, (0,2)=2, (3,4)=1.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let order = adaptive_removal_order(&g, Scenario::Hedaa, 0);
        assert_eq!(order.items(), &[2, 0, 1, 3]);
    }

    #[test]
    fn resampled_curves() {
        let g = complete(10);
        let spec = CurveSpec::new(10).unwrap();
        let c = resampled_attack_curve(&g, Scenario::Rnf, &spec, 4).unwrap();
        let expected: Vec<f64> = (0..10).map(|k| (10 - k) as f64 / 10.0).collect();
        assert_eq!(c.values(), &expected[..]);

        let g = gen_er(80, 3.0, 2).unwrap();
        let spec = CurveSpec::new(40).unwrap();
        let c = resampled_attack_curve(&g, Scenario::Ref, &spec, 4).unwrap();
        assert_eq!(c.len(), 40);
        assert!(c.values().iter().all(|v| (0.0..=1.0).contains(v)));
        assert_eq!(
            c,
            resampled_attack_curve(&g, Scenario::Ref, &spec, 4).unwrap()
        );
    }

    #[test]
    fn ensembles() {
        let k4 = complete(4);
        let spec = CurveSpec::new(4).unwrap();
        let runs =
            curve_ensemble(&k4, Scenario::Rnf, &spec, 7, 3, &AttackOptions::default()).unwrap();
        assert_eq!(runs.len(), 7);
        for r in &runs {
            assert_eq!(r.values(), &[1.0, 0.75, 0.5, 0.25]);
        }
        let runs = curve_ensemble(
            &k4,
            Scenario::Hdaa,
            &spec,
            100,
            3,
            &AttackOptions::default(),
        )
        .unwrap();
        assert_eq!(runs.len(), 1);
        assert!(
            curve_ensemble(&k4, Scenario::Rnf, &spec, 0, 3, &AttackOptions::default()).is_err()
        );
    }

    #[test]
    fn csv_output() {
        let spec = CurveSpec::new(3).unwrap();
        let mut buf = Vec::new();
        AttackCurve::new(vec![1.0, 0.5, 0.5])
            .write_csv(&spec, &mut buf)
            .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "p,value\n0,1\n0.333333333,0.5\n0.666666667,0.5\n"
        );
    }

    #[test]
    fn scenario_codes_and_names() {
        for s in Scenario::ALL {
            assert_eq!(Scenario::from_code(s.code()), Some(s));
            assert_eq!(s.to_string().parse::<Scenario>().unwrap(), s);
        }
        assert_eq!(Scenario::from_code(4), None);
    }
}
