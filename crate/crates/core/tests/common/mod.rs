#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zagreb_core::{Graph, GraphBuilder, VertexLabel};

pub fn v(i: usize) -> VertexLabel {
    VertexLabel::original(format!("v{i}")).unwrap()
}

/// G(n, p) with labels `v0..v{n-1}`; every vertex is present even if isolated.
pub fn random_graph(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let n = rng.gen_range(0..=max_order);
    let p: f64 = rng.gen_range(0.0..1.0);
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_vertex(v(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(v(i), v(j)).unwrap();
            }
        }
    }
    b.build()
}

/// Random spanning tree plus random extra edges; always connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let n = rng.gen_range(1..=max_order);
    let mut b = GraphBuilder::new();
    b.add_vertex(v(0));
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        b.add_edge(v(parent), v(i)).unwrap();
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let (a, c) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != c && !b.contains_edge(&v(a), &v(c)) {
            b.add_edge(v(a), v(c)).unwrap();
        }
    }
    b.build()
}

/// Component count by union-find over the edge list, ignoring `removed`.
pub fn components_without(g: &Graph, removed: Option<&VertexLabel>) -> usize {
    let verts: Vec<&VertexLabel> = g
        .vertices()
        .iter()
        .filter(|x| Some(*x) != removed)
        .collect();
    let pos = |x: &VertexLabel| verts.iter().position(|y| *y == x);
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (a, b) in g.edges() {
        if let (Some(i), Some(j)) = (pos(a), pos(b)) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    (0..verts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Vertices whose removal increases the component count.
pub fn brute_force_cut_vertices(g: &Graph) -> BTreeSet<VertexLabel> {
    let base = components_without(g, None);
    g.vertices()
        .iter()
        .filter(|x| components_without(g, Some(x)) > base)
        .cloned()
        .collect()
}

/// Coindices by direct enumeration over all vertex pairs, using label lookups only.
pub fn brute_force_coindices(g: &Graph) -> (u64, u64) {
    let vs = g.vertices();
    let deg: Vec<u64> = vs.iter().map(|x| g.degree(x).unwrap() as u64).collect();
    let (mut c1, mut c2) = (0, 0);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.has_edge(&vs[i], &vs[j]) {
                c1 += deg[i] + deg[j];
                c2 += deg[i] * deg[j];
            }
        }
    }
    (c1, c2)
}
