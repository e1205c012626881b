//! Small named instances used by the tests, the CLI and the documentation.

use crate::error::Result;
use crate::semidecomp::SemiDecomposition;
use crate::space::FiniteSpace;

/// ARC: `s <= o`, `t <= o`, with `s` and `t` incomparable.
pub fn arc_space() -> FiniteSpace {
    FiniteSpace::build(&["s", "t", "o"], &[("s", "o"), ("t", "o")]).expect("valid fixture")
}

/// The singleton decomposition on ARC.
pub fn arc() -> SemiDecomposition {
    SemiDecomposition::singletons(arc_space())
}

/// SEMIARC: ARC with `F(o) = {o, t}`.
pub fn semiarc() -> Result<SemiDecomposition> {
    SemiDecomposition::from_named(arc_space(), &[("s", vec!["s"]), ("t", vec!["t"]), ("o", vec!["o", "t"])])
}

/// The three-point chain `c <= p <= r`.
pub fn chain_space() -> FiniteSpace {
    FiniteSpace::build(&["c", "p", "r"], &[("c", "p"), ("p", "r")]).expect("valid fixture")
}

/// CHAIN: `F(c) = {c}`, `F(p) = {p}`, `F(r) = {r, c}` on the three-point chain.
pub fn chain() -> Result<SemiDecomposition> {
    SemiDecomposition::from_named(chain_space(), &[("c", vec!["c"]), ("p", vec!["p"]), ("r", vec!["r", "c"])])
}

/// E: `c <= p`, `F(c) = {c}`, `F(p) = {c, p}`.
pub fn fixture_e() -> Result<SemiDecomposition> {
    let space = FiniteSpace::build(&["c", "p"], &[("c", "p")]).expect("valid fixture");
    SemiDecomposition::from_named(space, &[("c", vec!["c"]), ("p", vec!["c", "p"])])
}
