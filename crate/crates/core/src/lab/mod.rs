//! Exhaustive corpora and machine checks of scheme properties.

pub mod checks;
pub mod corpus;
pub mod search;
pub mod witness;

pub use checks::{
    check_excisive, check_functorial, check_refines, check_scheme_equal, connected_hull_check, hull_check, replay,
    CheckReport, Counterexample, Property, Shard, Stat, Verdict,
};
pub use corpus::{generate_corpus, generate_simple_corpus, Corpus, CorpusBounds, CorpusMorphism};
pub use search::{search_equal_parts_example, validate_equal_parts, SearchBounds, SearchOutcome};
pub use witness::{finite_rep_witness, FiniteRepWitness};
