//! The three primitivity tests side by side on the bundled groups.

use blockprim::corpus;
use blockprim::primtest::{
    congruence_closure, is_maximal_stabilizer, is_primitive_congruence, is_primitive_higman,
};

fn main() {
    for (name, g) in corpus::transitive_groups() {
        let higman = is_primitive_higman(&g).unwrap();
        let congruence = is_primitive_congruence(&g).unwrap();
        let maximal = is_maximal_stabilizer(&g, 0).unwrap();
        print!(
            "{name:<10} higman {:<5} congruence {congruence:<5} maximal {maximal:<5}",
            higman.primitive
        );
        if let Some(pair) = higman.witness {
            // the congruence generated by the witness pair is a block system
            let blocks = congruence_closure(&g, pair).unwrap();
            print!(" blocks {:?}", blocks.classes());
        }
        println!();
    }
}
