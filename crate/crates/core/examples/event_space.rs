//! Bad events, their probabilities, the intersection graph and the clique
//! covers of its neighbourhoods on a small instance.
//!
//! ```bash
//! cargo run --example event_space
//! ```

use rainbow_lll::colouring::gen_k_bounded;
use rainbow_lll::events::{
    conflict_graph, enumerate_bad_events, intersection_graph, verify_clique_bounds,
};
use rainbow_lll::oracle::count_injections_in_event;
use rainbow_lll::rational::display;
use rainbow_lll::{Graph, Mode};

fn main() -> rainbow_lll::Result<()> {
    let g = Graph::path(4);
    let colouring = gen_k_bounded(6, 2, 3)?;
    let events = enumerate_bad_events(&g, &colouring, Mode::Rainbow)?;
    println!("{} bad events for P_4 in K_6", events.len());
    for x in events.iter().take(5) {
        let hits = count_injections_in_event(x, g.n_vertices(), colouring.n())?;
        println!(
            "  e={:?} f={:?} a={:?} b={:?} {:<12} P = {:<6} ({hits} of 360 injections)",
            x.e,
            x.f,
            x.a,
            x.b,
            x.kind.to_string(),
            display(&x.probability(6)?)
        );
    }
    let dep = intersection_graph(&events);
    let conflicts = conflict_graph(&events);
    println!(
        "intersection graph: {} edges, max degree {}; conflict graph: {} edges",
        dep.adjacency.edge_count(),
        dep.adjacency.max_degree(),
        conflicts.edge_count()
    );
    let report = verify_clique_bounds(&g, &colouring, Mode::Rainbow)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    Ok(())
}
