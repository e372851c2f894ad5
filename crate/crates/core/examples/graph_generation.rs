//! Random regular graphs, graphs with a planted sparse cut, and the plain
//! text edge-list format.

use sparse_cheeger::graph::{expansion, gen_planted_cut, gen_random_regular, read_graph, write_graph};

fn main() -> sparse_cheeger::Result<()> {
    let g = gen_random_regular(16, 3, 42)?;
    println!("random 3-regular graph on {} vertices, {} edges", g.n(), g.edges().len());
    println!("neighbors of 0: {:?}", g.neighbors(0));

    let (planted, set) = gen_planted_cut(40, 4, 8, 2, 7)?;
    let cut = expansion(&planted, &set)?;
    println!("planted set {set}: boundary {} edges, φ = {}", cut.boundary, cut.expansion);

    let path = std::env::temp_dir().join("planted_40_4.txt");
    write_graph(&planted, &path)?;
    let back = read_graph(&path)?;
    assert_eq!(back.edges(), planted.edges());
    println!("round-tripped through {}", path.display());
    Ok(())
}
