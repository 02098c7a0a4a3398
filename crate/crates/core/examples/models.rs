//! Tensor powers of the fundamental representation in each model.
//!
//!     cargo run --example models [model] [pattern...]
//!     cargo run --example models ac U Ubar U

use freefusion::models::{one_dimensional_summand_check, Model, ModelName, PatternLetter};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<ModelName> = match args.first() {
        Some(m) => vec![m.parse().expect("model name")],
        None => ModelName::ALL.to_vec(),
    };
    let pattern: Vec<PatternLetter> = if args.len() > 1 {
        args[1..]
            .iter()
            .map(|p| p.parse().expect("U or Ubar"))
            .collect()
    } else {
        vec![PatternLetter::U, PatternLetter::Ubar]
    };

    for name in names {
        let m = Model::build(name);
        let d = m.decompose_fundamental_power(&pattern).unwrap();
        println!("{name}: {pattern:?}");
        for (label, mult) in d.iter() {
            println!("  {mult} × {:<24} dim {}", m.render(label), m.dim(label));
        }
        println!("  total dim {}", m.ring.total_dim(&d).unwrap());
        if let Ok(r) = one_dimensional_summand_check(&m) {
            let z = r.zeta.as_ref().map_or("none".to_string(), |z| m.render(z));
            println!(
                "  one-dimensional summand: {z} (self-dual: {})",
                r.self_dual
            );
        }
    }
}
