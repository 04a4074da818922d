// Building finite rings: integers mod n, quotient polynomial rings,
// catalog rings, products and explicit tables.

use cozero::ring::{catalog_ring, gf, make_product, make_quotient_poly, make_zn, parse_table_ring, write_table_ring};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let z12 = make_zn(12)?;
    let units: Vec<&str> = z12.units().iter().map(|&u| z12.label(u)).collect();
    println!("{}: order {}, units {:?}", z12.expr(), z12.order(), units);

    // Z_2[X]/(X^2 + X + 1) is the field with four elements.
    let f4 = make_quotient_poly(2, &[1, 1, 1])?;
    let x = f4.element("x").unwrap();
    println!("{}: x*x = {}", f4.expr(), f4.label(f4.mul(x, x)));
    assert_eq!(f4.units().len(), 3);

    let gf9 = gf(9)?;
    println!("{}: characteristic {}", gf9.expr(), gf9.characteristic());

    let r = catalog_ring("Z2xy")?;
    println!("{}: {} units out of {}", r.expr(), r.units().len(), r.order());

    let p = make_product(&make_zn(2)?, &make_zn(4)?)?;
    let a = p.element("(1,2)").unwrap();
    println!("{}: (1,2)^2 = {}", p.expr(), p.label(p.mul(a, a)));

    let text = write_table_ring(&make_zn(3)?);
    let back = parse_table_ring(&text)?;
    println!("table round trip:\n{text}");
    assert_eq!(back.order(), 3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
