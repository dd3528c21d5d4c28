//! Terms over the meadow signature, the axiom catalogs and a checker that
//! tests laws in a model by random sampling or exhaustive enumeration.

mod catalog;
mod check;
mod eval;
mod law;
mod term;

pub use catalog::{catalog, default_catalogs, find_law, UnknownCatalog, CATALOGS};
pub use check::{
    check, check_laws, check_suite, CheckError, Counterexample, Report, Status, Strategy,
    MIN_EFFECTIVE_SAMPLES,
};
pub use eval::{eval, lookup, Env, EvalError};
pub use law::{parse_law, parse_law_file, Builtin, Guard, Law, LawFileError, LawKind};
pub use term::{parse_term, SyntaxError, Term};
