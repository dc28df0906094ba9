//! Closed-form predictions of trace-code families against brute force.
//!
//! For a handful of family instances the predicted weight distribution is
//! compared with exhaustive enumeration.
//!
//! ```text
//! cargo run --example family_predictions
//! ```

use std::error::Error;

use ortho_codes::code_core::{weight_distribution, EnumOptions};
use ortho_codes::families::{build_family, predict_family, FamilyParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["family=c4 p=3 e=1 s=2", "family=bch2 q=3 m=3", "family=lrc1 q=3 m=4 m1=1 m2=1", "family=lrc2 p=3 m=4"]
    {
        let params = FamilyParams::parse(text)?;
        let prediction = predict_family(&params)?;
        let code = build_family(&params)?;
        let wd = weight_distribution(&code, &EnumOptions::default())?;
        let agrees = prediction.distribution.as_ref().is_some_and(|p| p.counts == wd.counts);
        println!(
            "{text}: case {}, [{}, {}, {:?}], {} weights, prediction agrees: {agrees}",
            prediction.case,
            code.n(),
            code.k(),
            wd.min_distance(),
            wd.weight_count()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
