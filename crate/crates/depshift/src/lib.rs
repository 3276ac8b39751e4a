//! Detect and rank lexical semantic change between two time periods from
//! dependency-parsed corpora.
//!
//! The pipeline reads CoNLL-U input for two periods, collects directional
//! dependency slots (`chi_*` for dependents of a target, `pa_*` for its
//! governor) around a set of target lemmas, and compares the slot-filler
//! distributions of the two periods with Jensen-Shannon divergence (log
//! base 2, so every slot score lies in `[0, 1]`). Slot scores above a
//! threshold are averaged into a lemma-level change score, targets are
//! ranked, and a binary changed/stable label is derived either from a
//! percentile cutoff or from a least-squares change point over the sorted
//! scores.
//!
//! Every step is deterministic: profiles are plain count tables, all maps
//! are ordered, and repeated runs over the same inputs produce
//! byte-identical reports.

pub mod aggregate;
pub mod conllu;
pub mod divergence;
pub mod error;
pub mod evaluate;
pub mod pipeline;
pub mod slots;
pub mod synth;
pub mod targets;
pub mod transform;

pub use error::{Error, Result};

pub(crate) mod text {
    use unicode_normalization::{is_nfc, UnicodeNormalization};

    /// NFC-normalize, reusing the input when it is already normalized.
    pub fn nfc(s: &str) -> String {
        if is_nfc(s) {
            s.to_owned()
        } else {
            s.nfc().collect()
        }
    }

    /// Case-folded comparison key: NFC plus Unicode lowercase.
    pub fn fold(s: &str) -> String {
        nfc(s).to_lowercase()
    }
}
