//! Decoders: minimum-weight perfect matching for 2D codes (perfect and
//! repeated noisy syndromes), Toom and DKLP cellular automata for the 4D
//! toric code, and matching-based syndrome repair for 4D codes.

mod ca;
mod matching;
mod mwpm;
mod repair;

use serde::{Deserialize, Serialize};

use crate::gf2::BitVector;

pub use ca::{dklp_sweep, sweep, toom_sweep, toom_sweep_with, verify_correctable, Ca4Lattice, CaGrid4D, CaRule, PLANES};
pub use matching::{min_weight_pairing, Partner};
pub use mwpm::{mwpm_decode_2d, mwpm_decode_noisy_2d, MwpmDecoder, SpacetimeSyndrome};
pub use repair::{repair_syndrome_4d, SyndromeRepair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Success,
    LogicalFailure,
    StuckFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub class: Classification,
    pub correction: BitVector,
    pub sweeps: usize,
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        self.class == Classification::Success
    }
}
