//! Isomorphisms of bipartite incidence graphs by backtracking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::BipartiteGraph;

/// Node correspondence `g1 → g2`. Without `swapped`, left maps to left and
/// right to right; with it, left maps to right and right to left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub swapped: bool,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Isomorphism {
    fn target(&self, g2: &BipartiteGraph) -> BipartiteGraph {
        if self.swapped {
            g2.transpose()
        } else {
            g2.clone()
        }
    }

    /// Whether the mapping is a bijection carrying edges onto edges.
    pub fn verify(&self, g1: &BipartiteGraph, g2: &BipartiteGraph) -> bool {
        let h = self.target(g2);
        let bijective = |m: &[usize], n: usize| {
            let mut seen = vec![false; n];
            m.len() == n && m.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        bijective(&self.left, h.left.len())
            && bijective(&self.right, h.right.len())
            && (0..g1.left.len()).all(|i| {
                (0..g1.right.len())
                    .all(|j| g1.incidence[i][j] == h.incidence[self.left[i]][self.right[j]])
            })
    }

    /// Node names paired across the two graphs.
    pub fn pairs(&self, g1: &BipartiteGraph, g2: &BipartiteGraph) -> Vec<(String, String)> {
        let h = self.target(g2);
        let mut out: Vec<_> = (0..g1.left.len())
            .map(|i| (g1.left[i].clone(), h.left[self.left[i]].clone()))
            .collect();
        out.extend((0..g1.right.len()).map(|j| (g1.right[j].clone(), h.right[self.right[j]].clone())));
        out
    }
}

/// Both parts as one node set: left nodes first.
struct Flat {
    n_left: usize,
    adj: Vec<Vec<bool>>,
}

impl Flat {
    fn new(g: &BipartiteGraph) -> Self {
        let (l, r) = (g.left.len(), g.right.len());
        let mut adj = vec![vec![false; l + r]; l + r];
        for i in 0..l {
            for j in 0..r {
                if g.incidence[i][j] != 0 {
                    adj[i][l + j] = true;
                    adj[l + j][i] = true;
                }
            }
        }
        Flat { n_left: l, adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn side(&self, v: usize) -> bool {
        v < self.n_left
    }

    /// Breadth-first order, so each node after the first of its component
    /// has an already placed neighbor.
    fn search_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut placed = vec![false; self.len()];
        for start in 0..self.len() {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            order.push(start);
            let mut k = order.len() - 1;
            while k < order.len() {
                let u = order[k];
                for v in 0..self.len() {
                    if self.adj[u][v] && !placed[v] {
                        placed[v] = true;
                        order.push(v);
                    }
                }
                k += 1;
            }
        }
        order
    }
}

type Colors = (Vec<usize>, Vec<usize>);

/// Initial colour: part, plus the multiset of common-neighbour counts with
/// the other nodes of the same part.
fn profile(g: &Flat, v: usize) -> (bool, Vec<usize>) {
    let mut counts: Vec<usize> = (0..g.len())
        .filter(|&u| u != v && g.side(u) == g.side(v))
        .map(|u| (0..g.len()).filter(|&w| g.adj[v][w] && g.adj[u][w]).count())
        .collect();
    counts.sort_unstable();
    (g.side(v), counts)
}

fn sorted(c: &[usize]) -> Vec<usize> {
    let mut s = c.to_vec();
    s.sort_unstable();
    s
}

/// Colour refinement run on both graphs with a shared palette, so equal
/// colours are comparable across them. `None` as soon as the colour
/// multisets differ.
fn refine(a: &Flat, b: &Flat, mut ca: Vec<usize>, mut cb: Vec<usize>) -> Option<Colors> {
    let mut classes = 0;
    loop {
        let mut palette = BTreeMap::new();
        let signature = |g: &Flat, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = (0..g.len()).filter(|&u| g.adj[v][u]).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.len()).map(|v| signature(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.len()).map(|v| signature(b, &cb, v)).collect();
        for sig in sa.iter().chain(&sb) {
            let next = palette.len();
            palette.entry(sig.clone()).or_insert(next);
        }
        ca = sa.iter().map(|s| palette[s]).collect();
        cb = sb.iter().map(|s| palette[s]).collect();
        if sorted(&ca) != sorted(&cb) {
            return None;
        }
        if palette.len() == classes {
            return Some((ca, cb));
        }
        classes = palette.len();
    }
}

/// Refines `base` with every mapped pair given its own colour.
fn individualize(a: &Flat, b: &Flat, base: &Colors, map: &[Option<usize>]) -> Option<Colors> {
    let offset = a.len() + b.len();
    let (mut ca, mut cb) = base.clone();
    for (k, (u, m)) in map.iter().enumerate().filter_map(|(u, m)| m.map(|m| (u, m))).enumerate() {
        ca[u] = offset + k;
        cb[m] = offset + k;
    }
    refine(a, b, ca, cb)
}

fn extend(
    a: &Flat,
    b: &Flat,
    base: &Colors,
    order: &[usize],
    depth: usize,
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let Some(colors) = individualize(a, b, base, map) else {
        return false;
    };
    for cand in 0..b.len() {
        if used[cand] || colors.0[v] != colors.1[cand] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.adj[v][u] == b.adj[cand][map[u].unwrap()]);
        if !consistent {
            continue;
        }
        map[v] = Some(cand);
        used[cand] = true;
        if extend(a, b, base, order, depth + 1, map, used) {
            return true;
        }
        map[v] = None;
        used[cand] = false;
    }
    false
}

fn preserving(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g1.left.len() != g2.left.len() || g1.right.len() != g2.right.len() {
        return None;
    }
    let (a, b) = (Flat::new(g1), Flat::new(g2));
    let mut palette = BTreeMap::new();
    let pa: Vec<_> = (0..a.len()).map(|v| profile(&a, v)).collect();
    let pb: Vec<_> = (0..b.len()).map(|v| profile(&b, v)).collect();
    for p in pa.iter().chain(&pb) {
        let next = palette.len();
        palette.entry(p.clone()).or_insert(next);
    }
    let base = refine(
        &a,
        &b,
        pa.iter().map(|p| palette[p]).collect(),
        pb.iter().map(|p| palette[p]).collect(),
    )?;
    let order = a.search_order();
    let mut map = vec![None; a.len()];
    let mut used = vec![false; b.len()];
    if !extend(&a, &b, &base, &order, 0, &mut map, &mut used) {
        return None;
    }
    let l = a.n_left;
    let map: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
    Some((map[..l].to_vec(), map[l..].iter().map(|&x| x - l).collect()))
}

/// A family-preserving isomorphism if one exists, otherwise a
/// family-swapping one, otherwise `None`. Deterministic.
pub fn graph_iso(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Option<Isomorphism> {
    if let Some((left, right)) = preserving(g1, g2) {
        return Some(Isomorphism {
            swapped: false,
            left,
            right,
        });
    }
    preserving(g1, &g2.transpose()).map(|(left, right)| Isomorphism {
        swapped: true,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::Atlas;
    use crate::gkm::{closed_form_incidence, derive_incidence};
    use crate::models::{p2p2_lines, pg24};

    fn path(n: usize) -> BipartiteGraph {
        // left i adjacent to right i and right i+1
        BipartiteGraph {
            left: (0..n).map(|i| format!("a{i}")).collect(),
            right: (0..n).map(|i| format!("b{i}")).collect(),
            incidence: (0..n)
                .map(|i| (0..n).map(|j| u8::from(j == i || j == i + 1)).collect())
                .collect(),
        }
    }

    #[test]
    fn identity_on_self() {
        let g = pg24();
        let iso = graph_iso(&g, &g).unwrap();
        assert!(!iso.swapped);
        assert!(iso.verify(&g, &g));
        assert_eq!(iso.left, (0..21).collect::<Vec<_>>());
    }

    #[test]
    fn three_models_agree() {
        let pg = pg24();
        let pp = p2p2_lines();
        let gk = BipartiteGraph::from_config(&derive_incidence(&Atlas::new()).unwrap());
        for (x, y) in [(&pg, &pp), (&gk, &pg), (&gk, &pp)] {
            let iso = graph_iso(x, y).expect("isomorphic");
            assert!(iso.verify(x, y));
            assert_eq!(iso.pairs(x, y).len(), 42);
        }
    }

    #[test]
    fn swapping_and_failure() {
        // path on 3+3: left degrees 2,2,1 and right 1,2,2 force a swap
        let g = path(3);
        let mut h = g.transpose();
        h.left.reverse();
        h.incidence.reverse();
        let iso = graph_iso(&g, &h).unwrap();
        assert!(iso.verify(&g, &h));
        let mut broken = pg24();
        broken.incidence[0][0] ^= 1;
        assert!(graph_iso(&pg24(), &broken).is_none());
        // regular with the same degrees, but not a projective plane
        let rules = BipartiteGraph::from_config(&closed_form_incidence());
        assert!(graph_iso(&rules, &pg24()).is_none());
    }
}
