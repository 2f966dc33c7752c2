//! Monte Carlo harness (placeholder).
