//! Compare the decision procedure with brute-force search on small words.

use linkhom::oracle::{bounded_bfs, FieldBounds, InstanceGenerator, SearchConfig};
use linkhom::{apply_word, decide_equiv};

fn main() {
    let mut rng = InstanceGenerator::new(99);
    let bounds = FieldBounds { c: 3, f: 4, t: 4, word_len: 4, power: 1 };
    let cfg = SearchConfig { max_depth: 4, coord_bound: 40, seed: 99 };
    for _ in 0..8 {
        let a = rng.form(&bounds);
        let len = 1 + rng.index(4);
        let b = apply_word(&a, &rng.word_of_len(len, 1));
        let searched = bounded_bfs(&a, &b, &cfg).expect("within depth");
        let decided = decide_equiv(&a, &b);
        println!(
            "{a}\n  shortest {:>2} steps: {}\n  certificate: {}",
            searched.len(),
            searched.pretty(),
            decided.certificate().unwrap().pretty()
        );
    }
}
