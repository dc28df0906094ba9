//! Exhaustive weight enumeration of a small code and its structural facts.
//!
//! Builds the `[9, 3, 6]` ternary example code, enumerates all `3^3`
//! codewords, and reads off divisibility, self-orthogonality and the bound
//! audit.
//!
//! ```text
//! cargo run --example weight_enumeration
//! ```

use std::error::Error;

use ortho_codes::code_core::{bounds_audit, divisor, is_self_orthogonal, weight_distribution, EnumOptions};
use ortho_codes::families::{build_family, FamilyParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let code = build_family(&FamilyParams::parse("family=example q=3 m=3")?)?;
    println!("generator matrix:\n{}", code.to_text());

    let wd = weight_distribution(&code, &EnumOptions::default())?;
    for (w, a) in &wd.counts {
        println!("A_{w} = {a}");
    }
    let d = wd.min_distance().ok_or("nonzero code")?;
    println!("[n, k, d] = [{}, {}, {d}]", code.n(), code.k());
    println!(
        "divisor {}, self-orthogonal {}, contains 1: {}",
        divisor(&wd),
        is_self_orthogonal(&code),
        code.contains_all_ones()
    );

    let bounds = bounds_audit(code.n(), code.k(), d, code.q() as u64);
    println!(
        "Griesmer bound met: {}, sphere-packing class: {}",
        bounds.griesmer_met,
        bounds.sphere_packing_class.label()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
