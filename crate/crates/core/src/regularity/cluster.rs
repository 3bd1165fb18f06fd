use super::Equipartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Scalar;

/// Graph on the parts with `i ~ j` iff `d(parts[i], parts[j]) >= threshold`.
pub fn cluster_graph<T: Scalar>(g: &Graph, parts: &Equipartition, threshold: &T) -> Result<Graph> {
    let l = parts.len();
    if l < 2 {
        return Err(Error::MalformedPartition(format!("cluster graph needs two parts, got {l}")));
    }
    let mut h = Graph::empty(l);
    for i in 0..l {
        for j in i + 1..l {
            let d: T = g.density(&parts.parts()[i], &parts.parts()[j])?;
            if d >= *threshold {
                h.add_edge_unchecked(i, j);
            }
        }
    }
    Ok(h)
}
