//! Root systems from generalized Cartan matrices, Weyl group machinery,
//! a sparse Demazure character engine, and Dynkin diagram stretch
//! embeddings of the exceptional simple Lie algebras into rank+1
//! (possibly affine) diagrams.

pub mod charcalc;
pub mod kacmoody;
pub mod stretchmap;
pub mod weylops;

pub use charcalc::{
    apply_demazure, char_unit, demazure_character, demazure_dim, weyl_dim, CharError,
    FormalCharacter,
};
pub use kacmoody::{
    catalog, default_cutoff, generate_roots, DiagramKind, Gcm, KacError, Root, RootSet,
};
pub use stretchmap::{
    classify_brackets, degree_diagnostic, enumerate_embeddings, enumerate_embeddings_with_cutoff,
    filtration_degree, BracketClass, BracketVerdict, CheckResults, DegreeReport, EmbeddingSpec,
    StretchError,
};
pub use weylops::{
    act_on_weight, inversion_set, is_reduced, longest_element, reduce_word,
    word_from_inversion_set, DominantWeight, WeylError, WeylWord,
};
