//! Group membership authentication and group key establishment, modelled as
//! explicit per-participant state machines over a simulated broadcast channel,
//! together with the insider attacks that make one victim accept a different
//! group key while every key-confirmation check still passes.
//!
//! The crate is organised bottom-up:
//!
//! * [`gfpoly`] — prime-field and polynomial arithmetic.
//! * [`scheme`] — dealer-side token issuance and pairwise key derivation.
//! * [`protocol`] — the per-participant state machine for group
//!   authentication, key establishment and key confirmation, in three
//!   variants (XOR, sum and product combiners).
//! * [`netsim`] — a deterministic round scheduler with an adversarial
//!   interposition policy (suppression, redirection, injection).
//! * [`session`] — wiring of tokens, participants and channel into full runs.
//! * [`attacks`] — contribution forgers and the attack drivers that subvert
//!   key establishment and masquerade through key confirmation.
//!
//! Everything is deterministic given a seed: equal seeds produce bit-identical
//! transcripts and reports.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod attacks;
pub mod gfpoly;
pub mod netsim;
pub mod protocol;
pub mod rng;
pub mod scheme;
pub mod session;
