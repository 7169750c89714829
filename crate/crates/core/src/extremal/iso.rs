use std::collections::HashMap;

use crate::graph::Graph;

/// Joint colour refinement on both graphs so that colour ids are comparable.
/// Returns `None` when the colour histograms already differ.
fn refine(a: &Graph, b: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ca: Vec<usize> = a.degrees();
    let mut cb: Vec<usize> = b.degrees();
    let mut classes = 0;
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut signature = |g: &Graph, c: &[usize]| -> Vec<usize> {
            (0..g.n())
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
                    nb.sort_unstable();
                    let next = ids.len();
                    *ids.entry((c[v], nb)).or_insert(next)
                })
                .collect()
        };
        let na = signature(a, &ca);
        let nb = signature(b, &cb);
        let count = ids.len();
        let mut ha = vec![0usize; count];
        let mut hb = vec![0usize; count];
        na.iter().for_each(|&c| ha[c] += 1);
        nb.iter().for_each(|&c| hb[c] += 1);
        if ha != hb {
            return None;
        }
        ca = na;
        cb = nb;
        if count == classes {
            return Some((ca, cb));
        }
        classes = count;
    }
}

/// True iff an adjacency-preserving bijection between the vertex sets exists.
///
/// Degree-sequence prefilter, colour refinement, then backtracking over
/// colour-compatible assignments.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    let Some((ca, cb)) = refine(a, b) else {
        return false;
    };
    let n = a.n();
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    ca.iter()
        .for_each(|&c| *class_size.entry(c).or_default() += 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], std::cmp::Reverse(a.degree(v)), v));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.n() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| a.has_edge(v, x) == b.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Keeps one representative per isomorphism class, in first-seen order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinguishes_trees_with_equal_size() {
        assert!(!isomorphic(&Graph::path(4), &Graph::star(4)));
        assert!(isomorphic(
            &Graph::path(5),
            &Graph::path(5).permuted(&[4, 2, 0, 1, 3])
        ));
    }

    #[test]
    fn relabelled_cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(isomorphic(&c5, &c5.permuted(&[2, 4, 1, 3, 0])));
        // pentagram labelling of C5
        let star = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(isomorphic(&c5, &star));
    }

    #[test]
    fn knk_equals_collapsed_split() {
        let a = Graph::k_n_k(5, 2).unwrap();
        let b = Graph::g_split(1, &Graph::complete(2), 2).unwrap();
        assert!(isomorphic(&a, &b.permuted(&[3, 0, 4, 1, 2])));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // C6 and two triangles: both 2-regular on 6 vertices
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!isomorphic(&c6, &tt));
        // K_{3,3} vs the triangular prism: both 3-regular on 6 vertices
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!isomorphic(&k33, &prism));
        assert!(isomorphic(&prism, &prism.permuted(&[5, 3, 1, 0, 4, 2])));
    }

    #[test]
    fn dedup_keeps_first() {
        let reps = dedup_isomorphic([
            Graph::path(4),
            Graph::star(4),
            Graph::path(4).permuted(&[3, 2, 1, 0]),
            Graph::star(4).permuted(&[1, 0, 2, 3]),
        ]);
        assert_eq!(reps, vec![Graph::path(4), Graph::star(4)]);
    }
}
