//! Support designs held by a code and its dual.
//!
//! For the ternary `[27, 7, 15]` code with designed distance δ2, the
//! minimum-weight supports of the code and of its dual are checked to form
//! 2-designs, alongside the Assmus–Mattson prediction.
//!
//! ```text
//! cargo run --example support_designs
//! ```

use std::error::Error;

use ortho_codes::analysis::{assmus_mattson, extract_designs, DesignSource};
use ortho_codes::code_core::{macwilliams, weight_distribution, EnumOptions, DEFAULT_BUDGET};
use ortho_codes::families::{build_family, FamilyParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let code = build_family(&FamilyParams::parse("family=bch2 q=3 m=3")?)?;
    let wd = weight_distribution(&code, &EnumOptions::default())?;
    let dual = macwilliams(&wd)?;
    let d = wd.min_distance().ok_or("nonzero code")?;
    let d_perp = dual.d_perp.ok_or("proper code")?;

    if let Some(am) = assmus_mattson(&wd, &dual, 2) {
        println!("Assmus–Mattson at t = 2: code side {}, dual side {}", am.applies_to_code, am.applies_to_dual);
    }
    let requests = [(DesignSource::Code, d), (DesignSource::Dual, d_perp)];
    for w in extract_designs(&code, &wd, &dual, &requests, 2, DEFAULT_BUDGET)? {
        println!(
            "{:?} blocks: 2-({}, {}, {:?}) from {} supports, design: {}",
            w.source,
            w.n,
            w.kappa,
            w.lambda,
            w.block_count,
            w.is_design()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
