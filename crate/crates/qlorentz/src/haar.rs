//! Implemented below.
