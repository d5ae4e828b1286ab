#![no_main]

use libfuzzer_sys::fuzz_target;
use qtriangles::catalog::SequenceName;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(name) = text.parse::<SequenceName>() {
            let rendered = name.to_string();
            let back: SequenceName = rendered.parse().expect("canonical form parses");
            assert_eq!(back, name, "round-trip changed {rendered}");
        }
    }
});
