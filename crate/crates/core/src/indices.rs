//! Zagreb indices and coindices computed straight from the definitions,
//! together with the degree and edge partitions they are built from.
//!
//! Everything here is exact `u64`/`i128` arithmetic with checked operations;
//! an overflow surfaces as [`Error::Overflow`] instead of wrapping.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(d1, d2)` with `d1 <= d2` → number of edges whose endpoint degrees are `d1, d2`.
pub type EdgePartition = BTreeMap<(usize, usize), usize>;

/// Degree → number of vertices of that degree.
pub type DegreePartition = BTreeMap<usize, usize>;

fn to_u64(x: usize) -> u64 {
    x as u64
}

fn checked_add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn degrees(g: &Graph) -> Vec<u64> {
    g.adjacency_lists()
        .iter()
        .map(|n| to_u64(n.len()))
        .collect()
}

/// `M1 = Σ_v d(v)²`.
pub fn first_zagreb(g: &Graph) -> Result<u64> {
    degrees(g).into_iter().try_fold(0u64, |acc, d| {
        checked_add(acc, checked_mul(d, d, "M1")?, "M1")
    })
}

/// `M1` in its edge form `Σ_{uv ∈ E} (d(u) + d(v))`.
pub fn first_zagreb_by_edges(g: &Graph) -> Result<u64> {
    let deg = degrees(g);
    g.index_edges()
        .try_fold(0u64, |acc, (i, j)| checked_add(acc, deg[i] + deg[j], "M1"))
}

/// `M2 = Σ_{uv ∈ E} d(u)·d(v)`.
pub fn second_zagreb(g: &Graph) -> Result<u64> {
    let deg = degrees(g);
    g.index_edges().try_fold(0u64, |acc, (i, j)| {
        checked_add(acc, checked_mul(deg[i], deg[j], "M2")?, "M2")
    })
}

/// Walks every unordered pair of distinct non-adjacent vertices.
fn fold_non_adjacent<F>(g: &Graph, mut f: F) -> Result<()>
where
    F: FnMut(u64, u64) -> Result<()>,
{
    let adj = g.adjacency_lists();
    let deg = degrees(g);
    for i in 0..adj.len() {
        // Neighbour lists are sorted, so a merge-walk finds the gaps.
        let mut nbrs = adj[i].iter().peekable();
        for j in i + 1..adj.len() {
            while nbrs.next_if(|&&w| w < j).is_some() {}
            if nbrs.peek() == Some(&&j) {
                continue;
            }
            f(deg[i], deg[j])?;
        }
    }
    Ok(())
}

/// First Zagreb coindex by direct enumeration of non-adjacent pairs.
pub fn first_zagreb_coindex(g: &Graph) -> Result<u64> {
    let mut acc = 0u64;
    fold_non_adjacent(g, |du, dv| {
        acc = checked_add(acc, du + dv, "first Zagreb coindex")?;
        Ok(())
    })?;
    Ok(acc)
}

/// Second Zagreb coindex by direct enumeration of non-adjacent pairs.
pub fn second_zagreb_coindex(g: &Graph) -> Result<u64> {
    let mut acc = 0u64;
    fold_non_adjacent(g, |du, dv| {
        let p = checked_mul(du, dv, "second Zagreb coindex")?;
        acc = checked_add(acc, p, "second Zagreb coindex")?;
        Ok(())
    })?;
    Ok(acc)
}

/// `2m(n - 1) - M1`, the first coindex from order, size and `M1`.
pub fn first_coindex_identity(order: u64, size: u64, m1: u64) -> Result<i128> {
    let what = "first coindex identity";
    let (n, m, m1) = (i128::from(order), i128::from(size), i128::from(m1));
    2i128
        .checked_mul(m)
        .and_then(|x| x.checked_mul(n - 1))
        .and_then(|x| x.checked_sub(m1))
        .ok_or(Error::Overflow(what))
}

/// `2m² - M1/2 - M2`, the second coindex from size, `M1` and `M2`.
/// `M1` is always even for a graph; an odd value is rejected.
pub fn second_coindex_identity(size: u64, m1: u64, m2: u64) -> Result<i128> {
    let what = "second coindex identity";
    if !m1.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "M1 = {m1} is odd, so M1/2 is not an integer"
        )));
    }
    let (m, m1, m2) = (i128::from(size), i128::from(m1), i128::from(m2));
    m.checked_mul(m)
        .and_then(|x| x.checked_mul(2))
        .and_then(|x| x.checked_sub(m1 / 2))
        .and_then(|x| x.checked_sub(m2))
        .ok_or(Error::Overflow(what))
}

/// Buckets every edge by its sorted endpoint degrees.
pub fn edge_degree_partition(g: &Graph) -> EdgePartition {
    let adj = g.adjacency_lists();
    let mut parts = EdgePartition::new();
    for (i, j) in g.index_edges() {
        let (a, b) = (adj[i].len(), adj[j].len());
        *parts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    parts
}

/// Everything this module computes for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub order: u64,
    pub size: u64,
    pub m1: u64,
    pub m2: u64,
    pub m1_coindex: u64,
    pub m2_coindex: u64,
    pub degree_distribution: DegreePartition,
    #[serde(with = "crate::serde_pairs")]
    pub edge_partition: EdgePartition,
}

impl IndexReport {
    /// Checks the bookkeeping identities between the fields.
    pub fn is_consistent(&self) -> bool {
        let vertices: usize = self.degree_distribution.values().sum();
        let edges: usize = self.edge_partition.values().sum();
        let m1: u128 = self
            .edge_partition
            .iter()
            .map(|(&(a, b), &c)| (c as u128) * (a + b) as u128)
            .sum();
        let m2: u128 = self
            .edge_partition
            .iter()
            .map(|(&(a, b), &c)| (c as u128) * (a as u128) * (b as u128))
            .sum();
        to_u64(vertices) == self.order
            && to_u64(edges) == self.size
            && m1 == u128::from(self.m1)
            && m2 == u128::from(self.m2)
    }
}

pub fn index_report(g: &Graph) -> Result<IndexReport> {
    Ok(IndexReport {
        order: to_u64(g.order()),
        size: to_u64(g.size()),
        m1: first_zagreb(g)?,
        m2: second_zagreb(g)?,
        m1_coindex: first_zagreb_coindex(g)?,
        m2_coindex: second_zagreb_coindex(g)?,
        degree_distribution: g.degree_distribution(),
        edge_partition: edge_degree_partition(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(edges: &[(&str, &str)]) -> Graph {
        Graph::from_named_edges(edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        Graph::from_named_edges((0..n).map(|i| (names[i].as_str(), names[(i + 1) % n].as_str())))
            .unwrap()
    }

    fn complete(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((names[i].as_str(), names[j].as_str()));
            }
        }
        Graph::from_named_edges(edges).unwrap()
    }

    #[test]
    fn empty_graph_is_all_zero() {
        let r = index_report(&Graph::empty()).unwrap();
        assert_eq!(
            (r.order, r.size, r.m1, r.m2, r.m1_coindex, r.m2_coindex),
            (0, 0, 0, 0, 0, 0)
        );
        assert!(r.degree_distribution.is_empty() && r.edge_partition.is_empty());
        assert!(r.is_consistent());
        assert_eq!(first_coindex_identity(0, 0, 0).unwrap(), 0);
    }

    #[test]
    fn c4_values() {
        let c4 = cycle(4);
        assert_eq!(first_zagreb(&c4).unwrap(), 16);
        assert_eq!(second_zagreb(&c4).unwrap(), 16);
        assert_eq!(first_zagreb_coindex(&c4).unwrap(), 8);
        assert_eq!(second_zagreb_coindex(&c4).unwrap(), 8);
    }

    #[test]
    fn complete_graphs_have_zero_coindices() {
        for n in 1..7 {
            let k = complete(n);
            assert_eq!(first_zagreb_coindex(&k).unwrap(), 0);
            assert_eq!(second_zagreb_coindex(&k).unwrap(), 0);
        }
    }

    #[test]
    fn c5_edge_partition() {
        assert_eq!(
            edge_degree_partition(&cycle(5)),
            EdgePartition::from([((2, 2), 5)])
        );
    }

    #[test]
    fn vertex_and_edge_forms_agree() {
        let g = named(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("c", "d"),
            ("d", "e"),
            ("x", "y"),
        ]);
        assert_eq!(
            first_zagreb(&g).unwrap(),
            first_zagreb_by_edges(&g).unwrap()
        );
    }

    #[test]
    fn identities_on_a_small_graph() {
        let g = named(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")]);
        let r = index_report(&g).unwrap();
        assert!(r.is_consistent());
        assert_eq!(
            first_coindex_identity(r.order, r.size, r.m1).unwrap(),
            i128::from(r.m1_coindex)
        );
        assert_eq!(
            second_coindex_identity(r.size, r.m1, r.m2).unwrap(),
            i128::from(r.m2_coindex)
        );
    }

    #[test]
    fn odd_m1_is_rejected_by_the_second_identity() {
        assert!(second_coindex_identity(3, 7, 1).is_err());
    }
}
