#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_walk::graph::MixedGraph;

fuzz_target!(|data: &[u8]| {
    let Ok(g) = MixedGraph::from_json_slice(data) else {
        return;
    };
    let again = MixedGraph::from_json_str(&g.to_json_string()).expect("round trip");
    assert_eq!(again, g);
    let degree_sum: usize = (0..g.n()).map(|v| g.degree(v).unwrap()).sum();
    assert_eq!(degree_sum, 2 * g.edge_count());
});
