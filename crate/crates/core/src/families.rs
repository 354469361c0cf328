//! The cycle-star family `CS_{k,n-k}`: a `k`-cycle with `n - k` pendant
//! leaves attached to one cycle vertex, the hub.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexLabel};

/// Parameters of `CS_{k,n-k}`. Always satisfies `k >= 3` and `leaves >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleStarParams {
    k: usize,
    leaves: usize,
}

impl CycleStarParams {
    pub fn new(k: usize, leaves: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle length k must be >= 3 (got {k})"
            )));
        }
        if leaves < 1 {
            return Err(Error::InvalidParameter(format!(
                "leaf count n - k must be >= 1 (got {leaves})"
            )));
        }
        Ok(Self { k, leaves })
    }

    /// Parameters from cycle length and total order `n`.
    pub fn from_order(k: usize, n: usize) -> Result<Self> {
        let leaves = n.checked_sub(k).ok_or_else(|| {
            Error::InvalidParameter(format!("order n = {n} is smaller than k = {k}"))
        })?;
        Self::new(k, leaves)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn n(&self) -> usize {
        self.k + self.leaves
    }
}

/// Hub label `c0`.
pub fn hub_label() -> VertexLabel {
    VertexLabel::Original("c0".into())
}

/// Builds `CS_{k,n-k}` with vertices `c0` (hub), `c1`..`c{k-1}` around the
/// cycle and leaves `l1`..`l{n-k}` hanging off `c0`.
pub fn cycle_star(params: CycleStarParams) -> Graph {
    let cycle: Vec<VertexLabel> = (0..params.k)
        .map(|i| VertexLabel::Original(format!("c{i}")))
        .collect();
    let mut b = GraphBuilder::new();
    for i in 0..params.k {
        b.add_edge(cycle[i].clone(), cycle[(i + 1) % params.k].clone())
            .expect("k >= 3 cycle is simple");
    }
    for j in 1..=params.leaves {
        b.add_edge(cycle[0].clone(), VertexLabel::Original(format!("l{j}")))
            .expect("leaves are fresh vertices");
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn cs_3_1() {
        let g = cycle_star(CycleStarParams::new(3, 1).unwrap());
        assert_eq!((g.order(), g.size()), (4, 4));
        assert_eq!(g.degree(&hub_label()).unwrap(), 3);
        assert!(g.is_unicyclic());
    }

    #[test]
    fn cs_3_4_hub_degree() {
        let g = cycle_star(CycleStarParams::new(3, 4).unwrap());
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(&hub_label()).unwrap(), 6);
    }

    #[test]
    fn invalid_parameters_name_the_bound() {
        let err = CycleStarParams::new(2, 1).unwrap_err();
        assert!(err.to_string().contains("k must be >= 3"), "{err}");
        let err = CycleStarParams::new(3, 0).unwrap_err();
        assert!(err.to_string().contains("n - k must be >= 1"), "{err}");
        assert!(CycleStarParams::from_order(5, 4).is_err());
        assert_eq!(CycleStarParams::from_order(4, 7).unwrap().leaves(), 3);
    }

    #[test]
    fn degree_multiset_over_a_range() {
        for k in 3..9 {
            for leaves in 1..9 {
                let g = cycle_star(CycleStarParams::new(k, leaves).unwrap());
                assert_eq!(g.order(), k + leaves);
                assert_eq!(g.size(), k + leaves);
                assert!(g.is_unicyclic());
                let mut expected = BTreeMap::new();
                *expected.entry(2 + leaves).or_insert(0) += 1;
                *expected.entry(2).or_insert(0) += k - 1;
                *expected.entry(1).or_insert(0) += leaves;
                assert_eq!(g.degree_distribution(), expected, "k={k} leaves={leaves}");
            }
        }
    }

    #[test]
    fn labels_are_deterministic() {
        let g = cycle_star(CycleStarParams::new(4, 2).unwrap());
        let tokens: Vec<String> = g.vertices().iter().map(VertexLabel::token).collect();
        assert_eq!(tokens, ["c0", "c1", "c2", "c3", "l1", "l2"]);
        assert_eq!(g, cycle_star(CycleStarParams::new(4, 2).unwrap()));
    }
}
