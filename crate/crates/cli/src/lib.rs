//! Analysis driver and corpus harness behind the `multikoszul` binary.

pub mod analyze;
pub mod corpus;

pub use analyze::{analyze_text, AnalyzeOptions, Report};
pub use corpus::{run_corpus, CaseResult, CorpusOptions, CorpusSummary};
