//! Randomized properties at sizes beyond the exhaustive sweeps.

use proptest::prelude::*;

use canon::bijection::{
    des_global_involution, des_involution, from_identity_class, lalanne_kreweras, layering_swaps,
    lk_rho, reverse_layered, rho, rho_inv, to_identity_class, wdes_global_involution,
    wdes_involution,
};
use canon::grid::descents_on_grid;
use canon::{DyckPath, Multipermutation, Permutation, Step};

/// Any bit string maps to a valid path: take an N only while it keeps the
/// prefix balanced, then close with the owed N steps.
fn path_from_bits(n: usize, bits: &[bool]) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * n);
    let mut east = 0usize;
    let mut north = 0usize;
    for &b in bits.iter().take(2 * n) {
        if east == n || (b && north < east) {
            steps.push(Step::N);
            north += 1;
        } else {
            steps.push(Step::E);
            east += 1;
        }
    }
    steps.extend(std::iter::repeat(Step::N).take(n - north));
    DyckPath::new(steps).expect("constructed path is balanced")
}

fn arb_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(any::<bool>(), 2 * n)
            .prop_map(move |bits| path_from_bits(n, &bits))
    })
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn arb_word(max_n: usize) -> impl Strategy<Value = Multipermutation> {
    (1..=max_n).prop_flat_map(move |n| {
        let sigma = Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap());
        let path = prop::collection::vec(any::<bool>(), 2 * n)
            .prop_map(move |bits| path_from_bits(n, &bits));
        (sigma, path).prop_map(|(s, d)| Multipermutation::from_parts(&s, &d).unwrap())
    })
}

proptest! {
    #[test]
    fn word_display_roundtrip(w in arb_word(30)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Multipermutation>().unwrap(), w);
    }

    #[test]
    fn path_display_roundtrip(d in arb_path(40)) {
        let text = d.to_string();
        prop_assert_eq!(text.parse::<DyckPath>().unwrap(), d);
    }

    #[test]
    fn lk_involution_and_peak_complement(d in arb_path(40)) {
        let image = lalanne_kreweras(&d);
        prop_assert_eq!(lalanne_kreweras(&image), d.clone());
        prop_assert_eq!(d.peak_stats().pea + image.peak_stats().pea, d.n() + 1);
    }

    #[test]
    fn rho_roundtrip_and_contract(d in arb_path(40)) {
        let image = rho(&d);
        prop_assert_eq!(rho_inv(&image), d.clone());
        prop_assert_eq!(d.peak_stats().hpea + 1, image.peak_stats().pea);
    }

    #[test]
    fn lk_rho_involution_preserves_low_peaks(d in arb_path(40)) {
        let image = lk_rho(&d);
        prop_assert_eq!(lk_rho(&image), d.clone());
        prop_assert_eq!(d.peak_stats().lpea, image.peak_stats().lpea);
        prop_assert_eq!(d.peak_stats().hpea, d.n() - image.peak_stats().pea);
    }

    #[test]
    fn assembled_word_roundtrip(sigma in arb_perm(24), bits in prop::collection::vec(any::<bool>(), 48)) {
        let d = path_from_bits(sigma.n(), &bits);
        let w = Multipermutation::from_parts(&sigma, &d).unwrap();
        prop_assert_eq!(w.underlying().unwrap(), sigma.clone());
        prop_assert_eq!(w.dyck_path().unwrap(), d.clone());
        // Geometric descent count and the plateau/low-peak correspondence.
        let s = w.statistics();
        prop_assert_eq!(descents_on_grid(&d, &sigma).unwrap(), s.des);
        prop_assert_eq!(s.plat, d.peak_stats().lpea);
        // Reversal complements weak descents.
        let r = w.reverse().statistics();
        prop_assert_eq!(r.des, 2 * sigma.n() - 1 - s.wdes);
        prop_assert_eq!(r.plat, s.plat);
    }

    #[test]
    fn layering_swaps_reach_layered_form(sigma in arb_perm(24)) {
        let target = reverse_layered(&sigma.descent_set(), sigma.n()).unwrap();
        let mut cur = sigma.clone();
        for k in layering_swaps(&sigma) {
            let a = cur.position_of(k);
            let b = cur.position_of(k + 1);
            prop_assert!(a + 1 < b);
            cur = cur.swap_values(k);
            prop_assert_eq!(cur.descent_set(), sigma.descent_set());
        }
        prop_assert_eq!(cur, target);
    }

    #[test]
    fn identity_class_contract_random(w in arb_word(12)) {
        let sigma = w.underlying().unwrap();
        let image = to_identity_class(&w).unwrap();
        let (s, t) = (w.statistics(), image.statistics());
        prop_assert_eq!(t.des, s.des - sigma.statistics().des);
        prop_assert_eq!(t.plat, s.plat);
        prop_assert_eq!(from_identity_class(&sigma, &image).unwrap(), w);
    }

    #[test]
    fn symmetry_involutions_random(w in arb_word(10)) {
        let n = w.n();
        let s = w.statistics();
        let des_sigma = w.underlying().unwrap().statistics().des;

        let a = wdes_involution(&w).unwrap();
        prop_assert_eq!(wdes_involution(&a).unwrap(), w.clone());
        prop_assert_eq!(s.wdes + a.statistics().wdes, n + 1 + 2 * des_sigma);

        let b = wdes_global_involution(&w).unwrap();
        prop_assert_eq!(wdes_global_involution(&b).unwrap(), w.clone());
        prop_assert_eq!(s.wdes + b.statistics().wdes, 2 * n);

        let c = des_involution(&w).unwrap();
        prop_assert_eq!(des_involution(&c).unwrap(), w.clone());
        prop_assert_eq!(s.des + c.statistics().des, n - 1 + 2 * des_sigma);

        let e = des_global_involution(&w).unwrap();
        prop_assert_eq!(des_global_involution(&e).unwrap(), w.clone());
        prop_assert_eq!(s.des + e.statistics().des, 2 * n - 2);
    }

    #[test]
    fn parser_rejects_or_roundtrips(input in "[0-9,EN]{0,24}") {
        // Anything the word parser accepts must print back to an equal word.
        if let Ok(w) = input.parse::<Multipermutation>() {
            prop_assert_eq!(w.to_string().parse::<Multipermutation>().unwrap(), w);
        }
        if let Ok(d) = input.parse::<DyckPath>() {
            prop_assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d);
        }
    }
}
