//! Convert between the two encodings and walk the Levine relations.

use linkhom::moves::{clasper_to_levine, levine_to_clasper, phi_move, Phi};
use linkhom::{decide_equiv, ClasperForm, Int};

fn main() {
    let l = ClasperForm::from_i64([2, -3, 4, 1, 0, 5], [7, -2, 3, 9], [4, -6]);
    let (levine, word) = clasper_to_levine(&l);
    println!("clasper  {l}");
    println!("levine   {levine}  (normalizing word {})", word.pretty());
    let back = levine_to_clasper(&levine);
    println!("back     {back}  equivalent: {}", decide_equiv(&l, &back).is_equivalent());

    // every relation lands in the same class
    let mut relations = vec![Phi::Phi1, Phi::Phi2, Phi::Phi3, Phi::Phi4, Phi::Phi5];
    let (k, r) = (&levine.k, &levine.r);
    // Φ6 needs a*k - b*r + c*l = 0; (r, k, 0) is one solution
    relations.push(Phi::Phi6 { a: r.clone(), b: k.clone(), c: Int::from(0) });
    for phi in relations {
        let moved = phi_move(&levine, &phi).unwrap();
        let same = decide_equiv(&levine_to_clasper(&levine), &levine_to_clasper(&moved)).is_equivalent();
        println!("{phi:<12} -> {moved}  same class: {same}");
    }
}
