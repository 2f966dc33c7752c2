//! Shared report schema (placeholder).
