//! Verification harnesses: figure fixtures, generators, automorphisms,
//! brute-force oracles and the conjecture scanner.

pub mod automorphism;
pub mod fixtures;
pub mod generators;
pub mod oracles;
pub mod scan;
pub mod transitive;
pub mod verify;

pub use automorphism::{automorphisms, is_edge_transitive, is_vertex_transitive};
pub use fixtures::{load_fixture, Fixture, FIXTURE_NAMES};
pub use scan::{check_conjecture, scan, ScanReport};
pub use transitive::{verify_transitive_corollaries, TransitivityReport};
pub use verify::{verify_fixture, FixtureCheck};
