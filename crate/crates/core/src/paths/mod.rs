//! Lattice paths: labelled decorated square and Dyck paths, Schröder-decorated square
//! paths, their area/dinv statistics, enumeration and generating functions, the
//! sign-reversing involution, and big-car removal.

mod labelled;
mod removal;
mod schroeder;
mod square;

pub use labelled::{enumerate, enumerate_with_content, gen_function, phi, weight, DinvParts, Family, LabelledPath};
pub use removal::{
    big_car_paths, check_removal_bijection, hperp_combinatorial, is_contractible, reinsert, reinsert_all, removal_step,
    remove_big_cars, BijectionReport, Removal, RemovalMode, RemovalRecord, RemovalRun,
};
pub use schroeder::{enumerate as enumerate_schroeder, qt_polynomial, SchroederFamily, SchroederPath};
pub use square::SquarePath;
