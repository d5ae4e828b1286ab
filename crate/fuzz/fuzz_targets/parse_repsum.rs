#![no_main]

use libfuzzer_sys::fuzz_target;
use qtriangles::sl2::RepSum;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rep) = text.parse::<RepSum>() {
            if !rep.is_empty() {
                let rendered = rep.to_string();
                let back: RepSum = rendered.parse().expect("canonical form parses");
                assert_eq!(back, rep, "round-trip changed {rendered}");
                // characters stay small only for small dimensions
                if rep.iter().all(|(&k, _)| k <= 64) {
                    assert!(rep.character().is_symmetric());
                }
            }
        }
    }
});
