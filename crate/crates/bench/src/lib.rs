//! Inputs shared by the benchmarks.

use spherimult::chevalley::{ChevalleyAlgebra, SubalgebraSpan};
use spherimult::satake::Catalog;

/// Chevalley algebra of `g` with the fixed-point subalgebra of the pair `(g, h)`.
pub fn pair_span(g: &str, h: &str) -> (ChevalleyAlgebra, SubalgebraSpan) {
    let rec = Catalog::builtin().expect("builtin catalog").lookup(g, h).expect("catalog pair");
    let alg = ChevalleyAlgebra::new(&rec.g).expect("algebra");
    let span = SubalgebraSpan::from_involution(&alg, &rec.involution, rec.h_label()).expect("involution");
    (alg, span)
}
