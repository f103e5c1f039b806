//! Arithmetic in F_4 and F_64 and the embedding between them.
//!
//! Run with `cargo run --example field_arithmetic`.

use superk3::gf2k::{self, Degree, Gf};

fn main() -> superk3::Result<()> {
    let w = Gf::w();
    println!("F_4 = {{{}}}", join(&gf2k::enumerate(Degree::F4)));
    println!("w^2 + w + 1 = {}", w * w + w + Gf::one(Degree::F4));
    println!("1/w = {}", w.inv()?);

    let t = Gf::generator(Degree::F64);
    let omega = Gf::omega(Degree::F64)?;
    println!("in F_64, t^21 = {} and omega = {}", t.pow(21), omega);
    println!("w embeds as {}", w.embed(Degree::F64)?);

    let x = Gf::parse("t^5 + t + 1", Degree::F64)?;
    println!("x = {x}, x^64 = {}, x * x^-1 = {}", x.pow(64), x * x.inv()?);

    match Gf::generator(Degree::F16).embed(Degree::F64) {
        Ok(_) => println!("F_16 embedded into F_64"),
        Err(e) => println!("F_16 -> F_64: {e}"),
    }
    Ok(())
}

fn join(xs: &[Gf]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
