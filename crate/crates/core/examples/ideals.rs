// Ideal lattices, quotients, generators and the Jacobson radical.

use cozero::ring::{
    catalog_ring, enumerate_ideals, is_local, jacobson_radical, make_zn, min_generators, quotient_ring, MinGenerators,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let z24 = make_zn(24)?;
    for i in enumerate_ideals(&z24)? {
        let members: Vec<&str> = i.members().iter().map(|&x| z24.label(x)).collect();
        println!("|I| = {:2}  {:?}", i.len(), members);
    }

    let j = jacobson_radical(&z24)?;
    println!("J(Z24) has {} elements", j.len());

    let i = cozero::ring::ideal_generated(&z24, &[8]);
    let q = quotient_ring(&z24, &i)?;
    println!("Z24 / (8) has order {} with labels {:?}", q.ring.order(), q.ring.labels());

    let r = catalog_ring("Z2xy")?;
    let m = is_local(&r)?.expect("Z2xy is local");
    match min_generators(&r, &m, 5)? {
        MinGenerators::Exactly { count, generators } => {
            let g: Vec<&str> = generators.iter().map(|&x| r.label(x)).collect();
            println!("maximal ideal of {} needs {count} generators: {g:?}", r.expr());
        }
        MinGenerators::ExceedsCap { cap } => println!("more than {cap} generators"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
