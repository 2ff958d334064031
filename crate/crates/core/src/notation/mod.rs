//! Text front ends: Dirac-style ket expressions and bench layout files.
//!
//! # Ket expression grammar
//!
//! ```text
//! expr   := '(' sum ')' ('/' scale)? | sum ('/' scale)?
//! sum    := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff? ket
//! coeff  := 'i' | number '*'? 'i' | number | '(' number (',' number)? ')'
//! ket    := '|' label (',' label)* '>'
//! scale  := number | 'sqrt(' number ')'
//! number := digits ('.' digits)?
//! label  := [A-Za-z0-9_+'-]+
//! ```
//!
//! Whitespace is insignificant outside labels. A label ends at the first
//! character outside its alphabet, so `|u+,v->` reads the second label as
//! `v-` with `>` terminating the ket. Unicode `√` and `ι` are rejected;
//! write ASCII `sqrt(...)` and `i`.
//!
//! # Bench layout format
//!
//! Line oriented, `#` comments, UTF-8, LF. Slot numbers are 1-based.
//!
//! ```text
//! slots <n>
//! slot <k> modes <label>...
//! state <ket-expr>
//! stage slot=<k> bs kind=<splitter|recombiner> in=<m1>,<m2> out=<m3>,<m4>
//! stage slot=<k> phase mode=<m> phi=<radians|pi|-pi>
//! stage slot=<k> unitary in=<m1>,<m2> out=<m3>,<m4> matrix=<e00>,<e01>;<e10>,<e11>
//! snapshot <name>
//! detect slot=<k> <label>...
//! ```
//!
//! Custom `unitary` matrix entries are `re` or `re:im`, listed row by row;
//! columns are the images of the input modes. Matrices must be unitary.
//! Errors from both formats carry `line:col` positions.

mod bench;
mod ket;

pub use bench::{compile_and_run, parse_bench, BenchPlan, Stage};
pub use ket::{format_ket, parse_ket, parse_ket_expr, KetExpr, KetTerm};

/// Bundled input files.
pub mod assets {
    /// Two-particle interferometer layout: a splitter pair, a snapshot, a
    /// recombiner pair with detectors on the primed outputs.
    pub const HARDY_BENCH: &str = include_str!("../../assets/hardy.bench");
    /// (|a,b⟩ + |c,d⟩)/√2 — a path-entangled pair.
    pub const PATH_PAIR_KET: &str = include_str!("../../assets/kets/path_pair.ket");
    /// (|1,0⟩ + |0,1⟩)/√2 — one particle shared between two packets,
    /// written in occupation numbers.
    pub const OCCUPATION_PAIR_KET: &str = include_str!("../../assets/kets/occupation_pair.ket");
    /// (i|u+,v-⟩ + |v+,v-⟩ + i|v+,u-⟩)/√3 — the interferometer input.
    pub const INTERFEROMETER_INITIAL_KET: &str =
        include_str!("../../assets/kets/interferometer_initial.ket");
}
