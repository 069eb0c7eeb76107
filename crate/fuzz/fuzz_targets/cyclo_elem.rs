#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_walk::cyclo::CycloElem;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = s.parse::<CycloElem>() {
        let back: CycloElem = x.to_string().parse().expect("display parses");
        assert_eq!(back, x);
    }
});
