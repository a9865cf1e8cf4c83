//! Executable star-center injections on spiders.
//!
//! Three families of maps, each paired with an exhaustive verifier:
//! a flip along the tail of a leg (`v_{i,j}` star into the leaf star of leg
//! `i`), a flip along a whole leg through the head (head star into a leaf
//! star), and the ladder-driven slide/shift/flip map between two leaf stars.

mod ladder;
mod maps;
mod verify;

pub use ladder::{ladder_of, Ladder, Parity, Rung};
pub use maps::{flip, flip_on_leg, flip_on_path, map_best_leaf, shift, slide, translate, MapCase};
pub use verify::{
    verify_theorem_1, verify_theorem_2, verify_theorem_3, CaseCounts, InjectionReport, Violation,
    ViolationKind,
};
