//! Breadth-first generation of crystal graphs, rotation data for ε*, and JSON/DOT export.

use super::{path_eps, path_f, path_wt, BLambda, PathElem};
use crate::cartan::{cartan_matrix, CartanData, Weight};
use crate::crystal::Crystal;
use crate::error::RealizationError;
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphNode {
    pub id: usize,
    pub path: PathElem,
    pub wt: Weight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
    /// Canonical f̃-word: shortest, then lexicographically smallest.
    pub word: Vec<usize>,
    /// BFS tree parent and the color of the edge from it.
    pub parent: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// Nodes numbered in BFS discovery order (colors ascending), edges b → f̃_i b.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub l: usize,
    pub depth: usize,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    index: HashMap<PathElem, usize>,
}

impl CrystalGraph {
    pub fn node_of(&self, p: &PathElem) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|n| json!({"id": n.id, "wt": {"lam": n.wt.lam, "alpha": n.wt.alpha}, "eps": n.eps, "phi": n.phi}))
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|e| json!({"from": e.from, "to": e.to, "color": e.color})).collect();
        json!({"nodes": nodes, "edges": edges})
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  {} [label=\"{}\"];", n.id, n.id);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -> {} [label={}];", e.from, e.to, e.color);
        }
        s.push_str("}\n");
        s
    }
}

/// BFS from `root` under f̃_i, colors ascending, to the given depth.
fn bfs<C: Crystal<Elem = PathElem>>(c: &C, root: PathElem, depth: usize) -> CrystalGraph {
    let l = c.rank();
    let data = |id: usize, p: PathElem, word: Vec<usize>, parent| GraphNode {
        id,
        parent,
        wt: c.wt(&p),
        eps: (0..l).map(|i| c.eps(&p, i).finite().expect("finite ε")).collect(),
        phi: (0..l).map(|i| c.phi(&p, i).finite().expect("finite φ")).collect(),
        path: p,
        word,
    };
    let mut index = HashMap::new();
    index.insert(root.clone(), 0);
    let mut nodes = vec![data(0, root, Vec::new(), None)];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        if nodes[u].word.len() >= depth {
            continue;
        }
        for i in 0..l {
            let Some(q) = c.f(&nodes[u].path, i) else { continue };
            let v = match index.get(&q) {
                Some(&v) => v,
                None => {
                    let v = nodes.len();
                    let mut word = nodes[u].word.clone();
                    word.push(i);
                    index.insert(q.clone(), v);
                    nodes.push(data(v, q, word, Some((u, i))));
                    queue.push_back(v);
                    v
                }
            };
            edges.push(GraphEdge { from: u, to: v, color: i });
        }
    }
    CrystalGraph { l, depth, nodes, edges, index }
}

/// B(∞) to the given depth in the realization starting at color 0.
pub fn generate_binfty(l: usize, depth: usize) -> Result<CrystalGraph, RealizationError> {
    generate_binfty_from(l, depth, 0)
}

/// B(∞) in the realization whose first coordinate has color `start`.
pub fn generate_binfty_from(l: usize, depth: usize, start: usize) -> Result<CrystalGraph, RealizationError> {
    let cd = cartan_matrix(l)?;
    Ok(bfs(&super::PathCrystal::new(&cd), PathElem::vacuum(start % l), depth))
}

/// B(λ) as the f̃^λ-closure of the vacuum.
pub fn generate_blambda(l: usize, lambda: &Weight, depth: usize) -> Result<CrystalGraph, RealizationError> {
    let cd = cartan_matrix(l)?;
    let b = BLambda::new(&cd, lambda.clone())?;
    Ok(bfs(&b, PathElem::vacuum(0), depth))
}

/// B(λ) as the members of B(∞) (ε*_i ≤ λ(h_i), read from rotation data) with the edges
/// between them, renumbered in BFS order. Members not reachable inside the cut are kept and
/// numbered last, so a disconnected cut shows up when compared with the closure.
pub fn generate_blambda_cut(l: usize, lambda: &Weight, depth: usize) -> Result<CrystalGraph, RealizationError> {
    let cd = cartan_matrix(l)?;
    let b = BLambda::new(&cd, lambda.clone())?;
    let full = generate_binfty(l, depth)?;
    let star = StarData::new(&cd, &full)?;
    let member: Vec<bool> = (0..full.nodes.len())
        .map(|v| (0..l).all(|i| star.eps_star_at(v, i) as i64 <= cd.pairing(i, lambda)))
        .collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); full.nodes.len()];
    for e in &full.edges {
        if member[e.from] && member[e.to] {
            adj[e.from].push((e.color, e.to));
        }
    }
    let mut renum = vec![usize::MAX; full.nodes.len()];
    let mut order = vec![0usize];
    let mut tree: Vec<Option<(usize, usize)>> = vec![None];
    renum[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(c, v) in &adj[u] {
            if renum[v] == usize::MAX {
                renum[v] = order.len();
                order.push(v);
                tree.push(Some((renum[u], c)));
            }
        }
    }
    for v in 0..full.nodes.len() {
        if member[v] && renum[v] == usize::MAX {
            renum[v] = order.len();
            order.push(v);
            tree.push(None);
        }
    }
    let mut nodes: Vec<GraphNode> = Vec::with_capacity(order.len());
    for (id, &v) in order.iter().enumerate() {
        let p = full.nodes[v].path.clone();
        let word = match tree[id] {
            Some((u, c)) => [nodes[u].word.as_slice(), &[c]].concat(),
            None => full.nodes[v].word.clone(),
        };
        nodes.push(GraphNode {
            id,
            wt: b.wt(&p),
            eps: (0..l).map(|i| path_eps(&cd, &p, i)).collect(),
            phi: (0..l).map(|i| b.phi(&p, i).finite().expect("finite φ")).collect(),
            word,
            parent: tree[id],
            path: p,
        });
    }
    let mut edges = Vec::new();
    for &u in &order {
        for &(c, v) in &adj[u] {
            edges.push(GraphEdge { from: renum[u], to: renum[v], color: c });
        }
    }
    let index = nodes.iter().map(|n| (n.path.clone(), n.id)).collect();
    Ok(CrystalGraph { l, depth, nodes, edges, index })
}

/// Equal node sets with equal data, and equal colored edge sets, compared through paths.
pub fn same_graph(a: &CrystalGraph, b: &CrystalGraph) -> bool {
    let nodes = |g: &CrystalGraph| -> BTreeSet<(PathElem, Weight, Vec<i64>, Vec<i64>)> {
        g.nodes.iter().map(|n| (n.path.clone(), n.wt.clone(), n.eps.clone(), n.phi.clone())).collect()
    };
    let edges = |g: &CrystalGraph| -> BTreeSet<(PathElem, PathElem, usize)> {
        g.edges.iter().map(|e| (g.nodes[e.from].path.clone(), g.nodes[e.to].path.clone(), e.color)).collect()
    };
    nodes(a) == nodes(b) && edges(a) == edges(b)
}

/// Every node of a B(∞) graph re-expressed in each rotated realization by replaying its
/// canonical word. Construction fails if some edge or some pair of nodes is not respected.
#[derive(Clone, Debug)]
pub struct StarData {
    /// `rotated[s][v]`: node v in the realization starting at color s.
    pub rotated: Vec<Vec<PathElem>>,
    index: HashMap<PathElem, usize>,
}

impl StarData {
    pub fn new(cd: &CartanData, g: &CrystalGraph) -> Result<Self, RealizationError> {
        let l = cd.l;
        let mut rotated = Vec::with_capacity(l);
        for s in 0..l {
            let mut rot: Vec<PathElem> = Vec::with_capacity(g.nodes.len());
            rot.push(PathElem::vacuum(s));
            for n in &g.nodes[1..] {
                let (parent, c) = n.parent.expect("non-root nodes have a parent");
                rot.push(path_f(cd, &rot[parent], c));
            }
            for e in &g.edges {
                if path_f(cd, &rot[e.from], e.color) != rot[e.to] {
                    return Err(RealizationError::ConsistencyFailure {
                        start: s,
                        word: [g.nodes[e.from].word.as_slice(), &[e.color]].concat(),
                        detail: format!("edge {} -> {} lands elsewhere", e.from, e.to),
                    });
                }
            }
            let mut seen: HashMap<&PathElem, usize> = HashMap::new();
            for (v, p) in rot.iter().enumerate() {
                if let Some(&u) = seen.get(p) {
                    return Err(RealizationError::ConsistencyFailure {
                        start: s,
                        word: g.nodes[v].word.clone(),
                        detail: format!("nodes {u} and {v} coincide"),
                    });
                }
                seen.insert(p, v);
                if path_wt(cd, p) != path_wt(cd, &g.nodes[v].path) {
                    return Err(RealizationError::ConsistencyFailure {
                        start: s,
                        word: g.nodes[v].word.clone(),
                        detail: "weights differ".into(),
                    });
                }
            }
            rotated.push(rot);
        }
        let index = g.nodes.iter().map(|n| (n.path.clone(), n.id)).collect();
        Ok(StarData { rotated, index })
    }

    /// ε*_i of node v.
    pub fn eps_star_at(&self, v: usize, i: usize) -> u32 {
        self.rotated[i][v].coord(1)
    }

    pub fn eps_star(&self, p: &PathElem, i: usize) -> Result<u32, RealizationError> {
        let v = self.index.get(p).ok_or_else(|| RealizationError::Unknown(p.to_string()))?;
        Ok(self.eps_star_at(*v, i))
    }
}
