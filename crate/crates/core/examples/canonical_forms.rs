//! Canonical representatives. Scatter a few seed tuples with random words,
//! then bucket the results by canonical form: each seed's images share one
//! bucket, and seeds in the same class merge.

use std::collections::BTreeMap;

use linkhom::oracle::{FieldBounds, InstanceGenerator};
use linkhom::{apply_word, canonical_form, decide_equiv};

fn main() {
    let mut rng = InstanceGenerator::new(7);
    let bounds = FieldBounds { c: 2, f: 3, t: 3, word_len: 10, power: 2 };
    let c = [2, 2, 2, 2, 2, 2].map(Into::into);

    let seeds: Vec<_> = (0..10).map(|_| rng.form_with_c(&c, &bounds)).collect();
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut samples = Vec::new();
    for (i, seed) in seeds.iter().enumerate() {
        for _ in 0..5 {
            let image = apply_word(seed, &rng.word(&bounds));
            let canon = canonical_form(&image);
            buckets.entry(format!("f*={:?} t*={:?}", canon.f_star, canon.t_star)).or_default().push(i);
            samples.push(image);
        }
    }
    println!("{} images of {} seeds fall into {} classes", samples.len(), seeds.len(), buckets.len());
    for (key, members) in &buckets {
        let mut seeds_here = members.clone();
        seeds_here.dedup();
        println!("{key}: seeds {seeds_here:?}");
    }

    // bucket equality agrees with the decision procedure
    for a in samples.iter().step_by(7) {
        for b in samples.iter().step_by(5) {
            assert_eq!(canonical_form(a) == canonical_form(b), decide_equiv(a, b).is_equivalent());
        }
    }
}
