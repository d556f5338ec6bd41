//! A regular block: stabilizer words of two adjacent vertices, their normal
//! forms, and the bounded check that beta never reaches alpha.

use blockprim::amalgam::build_ball;
use blockprim::corpus;
use blockprim::verdict::{
    bounded_word_orbit_check, normal_form_rewrite, GroupWord, StabilizerPair,
};

fn main() {
    let ball = build_ball(&corpus::directed_cycle(3), 2, 4).unwrap();
    let pair = StabilizerPair::new(&ball, 0, 1).unwrap();
    let y = ball.tree_node_of_block(pair.tree(), ball.root_block());
    let alphabet = pair.alphabet();
    println!("alphabet: {}", GroupWord::new(alphabet.clone()));

    let word = GroupWord::new(vec![alphabet[0], alphabet[1], alphabet[2], alphabet[0]]);
    let nf = normal_form_rewrite(&pair, &word, y).unwrap();
    println!(
        "{word} rewrites to {} with {} alternations",
        nf.word(),
        nf.alternations()
    );
    println!(
        "beta goes to {:?}",
        pair.evaluate_at(&word.letters, pair.beta()).unwrap()
    );

    for max_len in [2, 4, 6] {
        let r = bounded_word_orbit_check(&pair, y, max_len).unwrap();
        println!(
            "up to {max_len} letters: {} words, {} skipped, max distance {}, violations {}",
            r.words_total,
            r.words_skipped,
            r.max_distance,
            r.violations.len()
        );
    }
}
