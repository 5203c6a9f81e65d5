pub mod rat;
