//! Equatorial-plane estimation (placeholder).
