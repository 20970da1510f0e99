//! Fixed inputs for the benchmarks.

use uncrossed::graph::{make_complete, make_complete_bipartite, make_cube, make_wheel};
use uncrossed::Graph;

/// Small graphs for the exact search, named for report labels.
pub fn oracle_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", make_complete(4).unwrap()),
        ("K5", make_complete(5).unwrap()),
        ("K3,3", make_complete_bipartite(3, 3).unwrap()),
        ("W6", make_wheel(6).unwrap()),
        ("cube", make_cube()),
        ("K6", make_complete(6).unwrap()),
    ]
}

/// `(n, m)` pairs spanning sparse to complete.
pub fn bound_inputs() -> Vec<(usize, usize)> {
    [100usize, 1_000, 10_000, 100_000]
        .iter()
        .flat_map(|&n| {
            [
                (n, n - 1),
                (n, 3 * n - 6),
                (n, n * n / 5),
                (n, n * (n - 1) / 2),
            ]
        })
        .collect()
}
