//! Sample one tuple from each invariant family and print its report.

use linkhom::invariants::{applicability, case_invariants, Family};
use linkhom::oracle::{FieldBounds, InstanceGenerator};

fn main() {
    let mut rng = InstanceGenerator::new(2024);
    let bounds = FieldBounds { c: 6, f: 12, t: 12, word_len: 0, power: 1 };
    for family in Family::ALL {
        let l = rng.family_form(family, &bounds);
        let report = case_invariants(&l, family).unwrap();
        let values: Vec<String> = report.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{family}  {l}");
        println!("    {}", values.join(" "));
        println!("    also in {:?}", applicability(&l).iter().map(|f| f.id()).collect::<Vec<_>>());
    }

    // a tuple outside every family
    let outside = linkhom::ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [0; 4], [0; 2]);
    for family in [Family::T41_1, Family::P43_3] {
        if let Err(why) = family.check(&outside) {
            println!("{family} rejects {outside}: needs {why}");
        }
    }
}
