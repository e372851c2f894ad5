//! Edge expansion of a few hand-picked sets, and the smallest expansion
//! over all sets of bounded size.

use sparse_cheeger::graph::{expansion, min_expansion_small_sets, RegularGraph, VertexSet};

fn main() -> sparse_cheeger::Result<()> {
    let cycle = RegularGraph::cycle(10)?;
    for members in [vec![0], vec![0, 1, 2], vec![0, 2, 4, 6, 8]] {
        let set = VertexSet::new(members, cycle.n())?;
        let cut = expansion(&cycle, &set)?;
        println!("C10  S = {set:<12} |∂S| = {}  φ(S) = {:.4}", cut.boundary, cut.expansion);
    }

    // Two triangles glued by nothing: a component is a perfect cut.
    let g = RegularGraph::complete(4)?.disjoint_union(&RegularGraph::complete(4)?)?;
    for k in 1..=g.n() / 2 {
        let best = min_expansion_small_sets(&g, k)?;
        println!("2·K4 φ_{k} = {:.4} at {}", best.expansion, best.set);
    }
    Ok(())
}
