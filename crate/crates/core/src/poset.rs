//! Isomorphism of finite graded posets given by their Hasse diagrams.
//!
//! Nodes are first coloured by `(rank, down-degree, up-degree)`, the colours
//! are refined by the multisets of neighbouring colours until stable, and a
//! backtracking search then matches nodes class by class.

use std::collections::BTreeMap;

/// A Hasse diagram: `ranks[i]` and cover edges `(lower, upper)`.
#[derive(Clone, Debug, Default)]
pub struct Hasse {
    pub ranks: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

struct Adjacency {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Hasse {
    fn adjacency(&self) -> Adjacency {
        let n = self.ranks.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in &self.edges {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        Adjacency { up, down }
    }
}

fn refine(h: &Hasse, adj: &Adjacency) -> Vec<u64> {
    let n = h.ranks.len();
    let mut colour: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            vec![
                h.ranks[i] as u64,
                adj.down[i].len() as u64,
                adj.up[i].len() as u64,
            ]
        })
        .collect();
    let mut classes = usize::MAX;
    loop {
        // Compress signatures to small integers through a sorted table, so
        // equal signatures in two diagrams receive equal ids.
        let table: BTreeMap<&Vec<u64>, u64> = {
            let mut keys: Vec<&Vec<u64>> = colour.iter().collect();
            keys.sort();
            keys.dedup();
            keys.into_iter().enumerate().map(|(i, k)| (k, i as u64)).collect()
        };
        let ids: Vec<u64> = colour.iter().map(|c| table[c]).collect();
        if table.len() == classes {
            return ids;
        }
        classes = table.len();
        colour = (0..n)
            .map(|i| {
                let mut sig = vec![ids[i]];
                let mut ups: Vec<u64> = adj.up[i].iter().map(|&j| ids[j]).collect();
                let mut downs: Vec<u64> = adj.down[i].iter().map(|&j| ids[j]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                sig.push(u64::MAX);
                sig.extend(ups);
                sig.push(u64::MAX);
                sig.extend(downs);
                sig
            })
            .collect();
    }
}

/// Refines both diagrams jointly so colour ids are comparable.
fn joint_colours(a: &Hasse, b: &Hasse) -> (Vec<u64>, Vec<u64>) {
    let na = a.ranks.len();
    let union = Hasse {
        ranks: a.ranks.iter().chain(&b.ranks).copied().collect(),
        edges: a
            .edges
            .iter()
            .copied()
            .chain(b.edges.iter().map(|&(x, y)| (x + na, y + na)))
            .collect(),
    };
    let ids = refine(&union, &union.adjacency());
    (ids[..na].to_vec(), ids[na..].to_vec())
}

/// An isomorphism `a → b` as a node map, if one exists.
pub fn isomorphism(a: &Hasse, b: &Hasse) -> Option<Vec<usize>> {
    let n = a.ranks.len();
    if n != b.ranks.len() || a.edges.len() != b.edges.len() {
        return None;
    }
    let (ca, cb) = joint_colours(a, b);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();
    let edge_b: std::collections::HashSet<(usize, usize)> = b.edges.iter().copied().collect();
    // Visit nodes of `a` from the smallest colour class outward.
    let mut class_size: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size[&ca[i]], a.ranks[i], i));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(
        x: usize,
        y: usize,
        map: &[usize],
        adj_a: &Adjacency,
        edge_b: &std::collections::HashSet<(usize, usize)>,
        adj_b: &Adjacency,
    ) -> bool {
        let mapped_up = adj_a.up[x].iter().filter(|&&j| map[j] != usize::MAX);
        let mapped_down = adj_a.down[x].iter().filter(|&&j| map[j] != usize::MAX);
        for &j in mapped_up.clone() {
            if !edge_b.contains(&(y, map[j])) {
                return false;
            }
        }
        for &j in mapped_down.clone() {
            if !edge_b.contains(&(map[j], y)) {
                return false;
            }
        }
        // The reverse direction: mapped neighbours of y must come from x's.
        let up_count = mapped_up.count();
        let down_count = mapped_down.count();
        let inv_up = adj_b.up[y].iter().filter(|&&j| map.contains(&j)).count();
        let inv_down = adj_b.down[y].iter().filter(|&&j| map.contains(&j)).count();
        up_count == inv_up && down_count == inv_down
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        pos: usize,
        order: &[usize],
        ca: &[u64],
        cb: &[u64],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        adj_a: &Adjacency,
        adj_b: &Adjacency,
        edge_b: &std::collections::HashSet<(usize, usize)>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for y in 0..cb.len() {
            if used[y] || cb[y] != ca[x] || !consistent(x, y, map, adj_a, edge_b, adj_b) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if search(pos + 1, order, ca, cb, map, used, adj_a, adj_b, edge_b) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    search(0, &order, &ca, &cb, &mut map, &mut used, &adj_a, &adj_b, &edge_b).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Hasse {
        Hasse {
            ranks: (0..n).collect(),
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    fn diamond() -> Hasse {
        Hasse {
            ranks: vec![0, 1, 1, 2],
            edges: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        }
    }

    #[test]
    fn basic_isomorphisms() {
        assert!(isomorphism(&chain(3), &chain(3)).is_some());
        assert!(isomorphism(&chain(3), &chain(4)).is_none());
        let relabelled = Hasse {
            ranks: vec![2, 1, 0, 1],
            edges: vec![(2, 1), (2, 3), (1, 0), (3, 0)],
        };
        let map = isomorphism(&diamond(), &relabelled).unwrap();
        assert_eq!(map[0], 2);
        assert_eq!(map[3], 0);
    }

    #[test]
    fn same_degrees_different_shape() {
        // Two disjoint-looking bowties vs a hexagon-like crown: same rank
        // histogram and degrees, different wiring.
        let crown = Hasse {
            ranks: vec![0, 0, 0, 1, 1, 1],
            edges: vec![(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)],
        };
        let split = Hasse {
            ranks: vec![0, 0, 0, 1, 1, 1],
            edges: vec![(0, 3), (0, 4), (1, 3), (1, 4), (2, 5), (2, 5)],
        };
        assert!(isomorphism(&crown, &split).is_none());
    }
}
