//! Hamiltonian cycles in split graphs.
//!
//! Polynomial constructions with certificates for 2-connected split graphs
//! that are `K_{1,3}`-free or `K_{1,4}`-free, a reduction showing hardness for
//! `K_{1,5}`-free split graphs, an exact backtracking oracle, seeded instance
//! generators, and the text formats used by the command-line tool.
//!
//! ```
//! use split_hc_core::{solve, Graph, Verdict};
//!
//! let g = Graph::complete(4);
//! let out = solve(&g).unwrap();
//! assert!(matches!(out.verdict, Verdict::Cycle(_)));
//! ```

pub mod batch;
pub mod delta3;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod paths;
pub mod reduction;
pub mod split;

pub use delta3::{Claim, Delta3Context};
pub use engine::{solve, solve_with, Method, Premise, SolveOptions, SolveOutcome, Verdict};
pub use error::{Error, Result};
pub use generators::{enumerate_small_split, generate, hidden_short_cycle, Family, GenSpec, Generated};
pub use graph::{graph_from_edges, validate_ham_cycle, Graph, HamCycle, OrientedPath};
pub use io::{parse_graph, render_graph, GraphFile};
pub use oracle::{oracle_count, oracle_solve, OracleBudget, OracleCount, OracleVerdict};
pub use paths::{find_short_cycle, PathSystem, ShortCycleWitness};
pub use reduction::{reduce, BipartiteInstance, ReductionOutput};
pub use split::{
    is_two_connected, recognize_split, star_free_level, upgrade_to_maximum_clique, NoCycleCertificate,
    SplitPartition, StarFreeLevel, TwoConnectivity,
};
