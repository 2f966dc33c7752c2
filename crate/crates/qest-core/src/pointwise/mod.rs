//! Pointwise machinery (placeholder).
