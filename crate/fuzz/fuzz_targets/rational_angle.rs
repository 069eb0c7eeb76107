#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_walk::cyclo::RationalAngle;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(a) = s.parse::<RationalAngle>() {
        assert!(a.denom() >= 1 && a.numer() < a.denom());
        assert_eq!(a.to_string().parse::<RationalAngle>().unwrap(), a);
    }
});
