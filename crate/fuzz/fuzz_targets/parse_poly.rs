#![no_main]

use libfuzzer_sys::fuzz_target;
use qtriangles::laurent::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(poly) = text.parse::<LaurentPoly>() {
            // the canonical rendering must re-parse to the same polynomial
            let rendered = poly.to_string();
            let back: LaurentPoly = rendered.parse().expect("canonical form parses");
            assert_eq!(back, poly, "round-trip changed {rendered}");
        }
    }
});
