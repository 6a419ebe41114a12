//! Codes for channels that make unbounded tandem duplications of a fixed
//! length `k` plus at most one substitution.
//!
//! Words live in [`word`], the transform and roots in [`transform`], the
//! channel model in [`channel`]. Detecting codes are in [`detect`],
//! correcting codes in [`correct`], counting bounds in [`bounds`] and the
//! brute-force certification engine in [`verify`].

pub mod bounds;
pub mod channel;
pub mod code;
pub mod correct;
pub mod detect;
pub mod enumerate;
pub mod error;
pub mod transform;
pub mod verify;
pub mod word;

pub use channel::{apply_event, ChannelEvent, EventTrace};
pub use code::{Code, CodeSpec};
pub use correct::{ecc_decode, ecc_encode, CijlSpec, EccCode, EccSpec, HammingCode};
pub use detect::{DecodeOutcome, DetectCodeSpec, ZetaReading};
pub use error::{Error, Result};
pub use transform::{phi, phi_inv, root, TransformPair};
pub use word::{Alphabet, BlockView, Symbol, Word};
