//! Crystals of Fock spaces in affine type A: Kashiwara operators on
//! multipartitions, the `A_∞` crystal on columns, the combinatorial R-matrix,
//! the extended affine symmetric group on multicharges and the crystal
//! isomorphisms it induces.

pub mod ainf;
pub mod column;
pub mod error;
pub mod fock;
pub mod group;
pub mod iso;
pub mod partition;
pub mod rmatrix;
pub mod signature;

pub use ainf::{
    finite_e, finite_f, finite_tensor_e, finite_tensor_f, lem_pia_check, mp_e_inf, mp_f_inf,
    AinfVertex,
};
pub use column::{common_depth, FiniteColumn, InfiniteColumn};
pub use error::{Error, Result};
pub use fock::{
    kleshchev_lift, kleshchev_rank_bounded, kleshchev_with_lift, replay_path, Convention,
    CrystalGraph, Edge, FockSpace, ReplayTarget, ResidueOrder, Step,
};
pub use group::{is_fundamental, reduce_to_fundamental, ChargeGroupElement, Generator};
pub use iso::{
    cycle_iso, cycle_iso_inv, gamma, gamma_to, iso_class, iso_class_with_extra, oracle_gamma,
    rotation_iso, rotation_iso_inv, swap_iso, to_flotw, uglov_from_flotw, IsoClass,
};
pub use partition::{
    conjugate_mp, residue, Corner, Multicharge, Multipartition, Node, NodeKind, Partition,
};
pub use rmatrix::{psi, psi_at_depth, theta};
