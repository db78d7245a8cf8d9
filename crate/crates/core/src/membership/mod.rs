//! Membership tests.
