#![no_main]

use libfuzzer_sys::fuzz_target;

use canon::Multipermutation;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    // Raw literal parsing must never panic.
    let _ = canon::word::parse_word_literal(input);
    // Accepted words must satisfy their invariants and survive a
    // display/parse roundtrip.
    if let Ok(w) = input.parse::<Multipermutation>() {
        assert_eq!(w.entries().len(), w.n() * w.k().max(1));
        let reparsed: Multipermutation = w.to_string().parse().unwrap();
        assert_eq!(reparsed, w);
        let s = w.statistics();
        assert_eq!(s.wdes, s.des + s.plat);
        if w.k() == 2 {
            // The three membership routes stay consistent on any input.
            let by_copies = w.is_nonnesting().unwrap();
            let by_pattern = !canon::word::contains_pattern(w.entries(), &[1, 2, 2, 1])
                && !canon::word::contains_pattern(w.entries(), &[2, 1, 1, 2]);
            assert_eq!(by_copies, by_pattern);
        }
    }
});
