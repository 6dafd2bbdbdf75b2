//! Command-line and file-format companion to `tropaut-core`.
//!
//! `tropaut-core` carries the mathematics — multigraphs, automorphism and
//! isometry groups, enumeration, and the bound checks — with no standard
//! library dependency. This crate adds the parts that need an operating
//! system: the JSON wire format ([`format`]), report rendering ([`render`]),
//! timed and parallel sweep drivers ([`parallel`]), and the `tropaut`
//! binary's argument handling ([`cli`]).

#![forbid(unsafe_code)]

pub mod cli;
pub mod format;
pub mod parallel;
pub mod render;
