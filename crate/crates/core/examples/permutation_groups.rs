//! Orbits, stabilizers and element enumeration for a small group.

use blockprim::perm::{GeneratedGroup, Permutation, DEFAULT_ELEMENT_CAP};

fn main() {
    // the dihedral group of the square
    let rotate = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
    let flip = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
    let d4 = GeneratedGroup::new(4, vec![rotate.clone(), flip.clone()]).unwrap();

    println!(
        "rotate then flip: {:?}",
        rotate.compose(&flip).unwrap().cycles()
    );
    println!("order: {}", d4.order(DEFAULT_ELEMENT_CAP).unwrap());
    println!("orbit of 0: {:?}", d4.orbit(0).unwrap());
    let stab = d4.point_stabilizer(0, DEFAULT_ELEMENT_CAP).unwrap();
    println!(
        "stabilizer of 0 has order {}",
        stab.order(DEFAULT_ELEMENT_CAP).unwrap()
    );
    println!(
        "transitive: {}, regular: {}",
        d4.is_transitive(),
        d4.is_regular()
    );

    let z4 = GeneratedGroup::new(4, vec![rotate]).unwrap();
    println!("the rotations alone are regular: {}", z4.is_regular());
}
