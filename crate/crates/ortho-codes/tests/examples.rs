//! Every runnable example, executed as a test.
//!
//! The example files are mounted as modules (rather than `include!`d) so
//! that their `//!` module documentation stays valid.

macro_rules! example_test {
    ($module:ident, $file:literal) => {
        #[path = $file]
        mod $module;

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(field_and_character_sums, "../examples/field_and_character_sums.rs");
example_test!(weight_enumeration, "../examples/weight_enumeration.rs");
example_test!(macwilliams_duality, "../examples/macwilliams_duality.rs");
example_test!(family_predictions, "../examples/family_predictions.rs");
example_test!(support_designs, "../examples/support_designs.rs");
example_test!(locality_search, "../examples/locality_search.rs");
example_test!(verify_pipeline, "../examples/verify_pipeline.rs");
