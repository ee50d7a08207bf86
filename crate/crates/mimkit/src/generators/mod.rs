//! Parameterized graph families and witness constructions, each paired with
//! a structural self-check.

pub mod coloring;
pub mod gadgets;
pub mod netwall;
pub mod wall;
pub mod witnesses;

pub use coloring::{
    check_coloring3, check_coloring4, netwall_coloring3, netwall_coloring4, Coloring,
};
pub use gadgets::{construct_gdoubleprime, construct_gprime, Gdoubleprime, Gprime};
pub use netwall::{net_wall, net_wall_of, NetVertex, NetWall};
pub use wall::{grid, wall, Wall, WallSpec};
pub use witnesses::{witness, Witness, WitnessFamily};
