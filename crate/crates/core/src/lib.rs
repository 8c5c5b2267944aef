//! Exact verification engine for quantisation by cochain twists.

pub mod exact;
pub mod lie;
pub mod envalg;
pub mod report;
pub mod twist;
pub mod geom;
pub mod sphere;
pub mod precon;
pub mod dcalc;
pub mod suites;
