//! Decide link-homotopy for two pairs that share all linking numbers.
//!
//! Run with `cargo run --example decide_pair`.

use linkhom::{apply_word, decide_equiv, ClasperForm, Verdict};

fn main() {
    let base = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [0, 0, 0, 0], [0, 0]);
    let twisted = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [1, 1]);
    let reachable = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [2, 0]);

    for (name, other) in [("twisted", &twisted), ("reachable", &reachable)] {
        match decide_equiv(&base, other) {
            Verdict::Equivalent { certificate } => {
                println!("base ~ {name}: certificate {}", certificate.pretty());
                assert_eq!(&apply_word(&base, &certificate), other);
            }
            Verdict::NotEquivalent { stage } => println!("base !~ {name}: fails at {stage}"),
        }
    }
}
