//! The six tabulated commutators act on `t` alone. This prints their
//! effects for a sample `c` and checks them against direct evaluation.

use linkhom::moves::CommutatorPair;
use linkhom::{apply_word, moves::commutator_t_effect, ClasperForm};

fn main() {
    let l = ClasperForm::from_i64([3, -2, 5, 7, 1, -4], [2, -1, 6, 0], [10, -3]);
    for pair in CommutatorPair::ALL {
        let moved = apply_word(&l, &pair.word());
        let observed = [&moved.t[0] - &l.t[0], &moved.t[1] - &l.t[1]];
        let predicted = commutator_t_effect(&l.c, pair);
        assert_eq!(moved.f, l.f);
        assert_eq!(observed, predicted);
        println!("{pair:<14} dt = ({}, {})", observed[0], observed[1]);
    }
}
