//! Partitions, Schur polynomial specializations and symmetric group characters.

mod abacus;
mod character;
mod partition;
mod poly;
mod rsw;
mod tableau;

pub use abacus::{abacus_decompose, core_quotient, core_quotient_with_beads, Abacus, CoreQuotient};
pub use character::{border_strips, mn_character, mn_character_by_strip_search};
pub use partition::Partition;
pub use poly::{q_binomial, q_catalan, IntPolynomial};
pub use rsw::rsw_evaluate;
pub use tableau::{
    enumerate_ssyt, enumerate_syt, hooks_and_contents, principal_specialization, ssyt_count,
    HookCell, HookData, Tableau,
};
