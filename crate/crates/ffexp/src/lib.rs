//! Expansion experiments for finitely generated matrix groups over `F_p[t]`.
//!
//! The crate is organized around the pipeline that takes a symmetric generating
//! set in `GL_n(F_p[t, 1/r0])`, reduces it modulo admissible square-free moduli,
//! and measures how the resulting Cayley graphs expand:
//!
//! * [`funcfield`] — polynomial arithmetic over `F_p`, quotient rings
//!   `F_p[t]/<f>`, valuations, norms, heights, and enumeration of admissible
//!   moduli.
//! * [`matgroup`] — matrix groups over quotient rings, BFS enumeration,
//!   subgroup construction and classification (structural vs subfield type),
//!   transporter and conjugate-intersection verifiers, small lifts.
//! * [`walks`] — finite-support measures: convolution, entropies, Kesten
//!   bounds for free walks, Diophantine checks, flattening, escape probes.
//! * [`multiscale`] — product groups: regular subsets, scale splitting,
//!   Gowers triple products, exceptional-subgroup counting, growth
//!   experiments.
//! * [`spectra`] — Cayley graphs, the averaging operator, spectral gaps,
//!   trace moments, and family scans.
//! * [`cli`] — config-driven experiment commands with cached group
//!   enumerations and machine-readable outputs.
//!
//! Every randomized procedure takes an explicit seed; identical configs
//! produce identical outputs.

pub mod cli;
pub mod funcfield;
pub mod matgroup;
pub mod multiscale;
pub mod spectra;
pub mod walks;
