use jones_genus2::algebra::Sign;
use jones_genus2::jones::{search_valid_rep, JonesError};

use crate::args::SearchArgs;
use crate::output::{to_json, write_file, Failure};

pub fn run(args: &SearchArgs) -> Result<(), Failure> {
    let a_range = -(args.max_a as i64)..=0;
    let m_range = 1..=(args.max_m as i64);
    match search_valid_rep(&[Sign::Plus, Sign::Minus], a_range, m_range) {
        Ok(rep) => {
            let json = to_json(&rep.to_document());
            if let Some(n) = rep.normalization() {
                eprintln!("found eta = {}, a = {}, m = {}", n.eta, n.a, n.m);
            }
            match &args.common.out {
                Some(path) => write_file(path, &json),
                None => {
                    print!("{json}");
                    Ok(())
                }
            }
        }
        Err(JonesError::SearchExhausted { failures }) => {
            for f in &failures {
                eprintln!("eta = {}, a = {}, m = {}: {}", f.eta, f.a, f.m, f.reason);
            }
            Err(Failure::Check(format!(
                "SEARCH_EXHAUSTED: none of {} candidates with a in -{}..=0, m in 1..={} is valid",
                failures.len(),
                args.max_a,
                args.max_m
            )))
        }
        Err(e) => Err(Failure::Check(e.to_string())),
    }
}
