//! Euler tours and their relationship to Hamiltonian cycles of subdivided
//! doubles: deterministic and exhaustive tour construction, lifting tours to
//! cycles through a per-vertex twin bijection, hairpin analysis and projection
//! back to tours, exhaustive Hamiltonian-cycle enumeration, complement
//! pairing reports, and linear-forest partitions.

mod cycle;
mod enumerate;
mod euler;
mod lift;
mod linarb;

pub use cycle::{complement_cycle, HamCycle, TwoFactor};
pub use enumerate::{
    count_ham_decompositions, count_ham_decompositions_threads, enumerate_ham_cycles,
    enumerate_ham_cycles_threads, is_hamiltonian_paired, is_hamiltonian_paired_threads,
    pairing_report, PairingReport,
};
pub use euler::{all_euler_tours, euler_tour, EulerTour, TourStep};
pub use lift::{hairpins_of, lift_tour, project_to_tour, unlift, BijectionVector, Hairpin};
pub use linarb::linear_arboricity_two;
