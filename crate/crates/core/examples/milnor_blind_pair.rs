//! Two tuples with identical Milnor invariants that are still distinct.
//! The T41-4 family invariant theta tells them apart.

use linkhom::invariants::{case_invariants, Family};
use linkhom::{decide_equiv, milnor_profile, ClasperForm};

fn main() {
    let c = [-1, -4, -4, -1, -1, -1];
    let a = ClasperForm::from_i64(c, [1, 4, 4, 16], [0, 0]);
    let b = ClasperForm::from_i64(c, [1, 8, 4, 16], [0, 0]);

    let (pa, pb) = (milnor_profile(&a), milnor_profile(&b));
    println!("linking numbers {:?}", pa.linking.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("delta4 = {}", pa.delta4());
    println!("profiles equal: {}", pa == pb);

    for l in [&a, &b] {
        let report = case_invariants(l, Family::T41_4).expect("hypotheses hold");
        println!("theta({l}) = {}", report.get("theta").unwrap());
    }
    println!("decision: {}", decide_equiv(&a, &b).stage().unwrap());
}
