//! Exact combinatorics of web diagrams and web worlds.
//!
//! A web diagram is a set of edges `(a, b, c, d)` joining the `c`-th vertex
//! (counted from the plane) of peg `a` to the `d`-th vertex of peg `b`. The
//! diagrams that share a labelled web graph form a web world, and every world
//! carries two square matrices indexed by its diagrams:
//!
//! * the web-colouring matrix, whose entries are integer polynomials counting
//!   surjective colourings of one diagram that reconstruct another, and
//! * the web-mixing matrix, the entrywise image of the former under
//!   `a_1 x + a_2 x^2 + ... -> a_1 - a_2/2 + a_3/3 - ...`.
//!
//! Everything here is exact: polynomial coefficients are big integers and
//! mixing entries are big rationals. The crate is organised as
//!
//! * [`diagram`] and [`world`]: diagrams, sums, flips, web graphs, world enumeration,
//! * [`colouring`]: colour classes, relabelling, reconstruction and colouring counts,
//! * [`decomposition`]: indecomposable components, decomposition posets, order-map counts,
//! * [`polyalg`]: polynomials, Stirling/Fubini numbers, the black diamond product, `L_i(x)`,
//! * [`matrices`]: colouring/mixing matrices and the theorem checks built on them,
//! * [`identities`]: identity generation from disjoint-world traces,
//! * [`words`]: word reconstruction and the two-peg permutation world,
//! * [`io`]: the structured text formats shared with the command-line tool.

pub mod colouring;
mod combinat;
pub mod decomposition;
pub mod diagram;
mod error;
pub mod identities;
pub mod io;
pub mod matrices;
pub mod polyalg;
pub mod words;
pub mod world;

pub use colouring::{count_colourings, reconstruct, relabel, Colouring};
pub use decomposition::{decompose, decomposition_poset, CompGraph, Decomposition, Poset};
pub use diagram::{diagram_sum, validate_diagram, Edge, WebDiagram};
pub use error::{Error, Limits, Result};
pub use matrices::{colouring_matrix, mixing_matrix, ColouringMatrix, MixingMatrix};
pub use polyalg::{black_diamond, Poly, Rat};
pub use world::{enumerate_world, WebGraph, WebWorld};
