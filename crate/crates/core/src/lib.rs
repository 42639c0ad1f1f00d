//! Exact reasoning about the ranks a candidate can reach when voter
//! preferences are only partially known.
//!
//! A partial voting profile gives each voter a partial order over a common
//! candidate set. Across its completions, a candidate's tie-broken rank
//! sweeps out a set of positions; this crate computes and decides questions
//! about the extremes of that set. It provides:
//!
//! - the profile/order model and enumeration utilities ([`model`]);
//! - positional and Bucklin/Copeland/Maximin scoring with tie-broken ranks
//!   ([`rules`]);
//! - a ground-truth oracle over the completion space ([`oracle`]);
//! - polynomial decision procedures for the tractable cases ([`solvers`]);
//! - hardness-gadget instance generators with oracle-backed verification
//!   ([`gadgets`]);
//! - an instance-document format shared with the command line ([`io`]).

pub mod error;
pub mod gadgets;
pub mod gen;
pub mod io;
pub mod model;
pub mod oracle;
pub mod rules;
pub mod solvers;

pub use error::{Error, Result};
