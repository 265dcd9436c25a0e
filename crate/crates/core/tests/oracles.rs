mod common;

use common::*;
use num_traits::{One, Signed};
use p2walls::exceptional::{chern_of, controlling, dyadics_in, left_line};
use p2walls::ktheory::{bar_disc, euler_form};
use p2walls::lepotier::{position, ConePosition};
use p2walls::walls::{candidate_ok, enumerate_candidates, tr_contains, RejectReason, Verdict};
use p2walls::{exactnum, ChernCharacter, DyadicIndex, QuadraticScalar};
use rand::{Rng, SeedableRng};

fn lib(v: &Ch) -> ChernCharacter {
    ChernCharacter::new(v.0.clone(), v.1.clone(), v.2.clone())
}

fn orc(v: &ChernCharacter) -> Ch {
    (v.ch0.clone(), v.ch1.clone(), v.ch2.clone())
}

#[test]
fn exceptional_characters_match_slope_recursion() {
    for ix in dyadics_in(-4, 4, 6) {
        let p: i64 = ix.p().try_into().unwrap();
        assert_eq!(orc(&chern_of(&ix)), exceptional_ch(p, ix.level()), "index {ix}");
    }
}

#[test]
fn exceptional_characters_are_exceptional() {
    for ix in dyadics_in(-4, 4, 6) {
        let e = orc(&chern_of(&ix));
        assert!(chi(&e, &e).is_one(), "{ix}");
        let r2 = &e.0 * &e.0;
        assert_eq!(bar_delta(&e), q(1, 2) - Q::one() / (qi(2) * r2), "{ix}");
    }
}

#[test]
fn positions_match_tent_scan() {
    for r in 1..=6i64 {
        for c in -6..=6i64 {
            for d2 in -80..=80i64 {
                if (d2 - c) % 2 != 0 {
                    continue;
                }
                let v = ch(r, c, d2);
                let bd = bar_delta(&v);
                if bd.is_negative() || bd > qi(2) {
                    continue;
                }
                let got = position(&lib(&v)).unwrap();
                let want = match position_sign(&v) {
                    1 => ConePosition::Above,
                    0 => ConePosition::On,
                    _ => ConePosition::Below,
                };
                assert_eq!(got, want, "{v:?}");
            }
        }
    }
}

#[test]
fn controlling_matches_tent_scan() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let d = rng.gen_range(1..=64i64);
        let n = rng.gen_range(-4 * d..=4 * d);
        let x = q(n, d);
        let (p, m) = tent_scan(&x, 12).expect("tent");
        let want = DyadicIndex::new(p, m);
        assert_eq!(controlling(&x).unwrap(), want, "{x}");
    }
}

#[test]
fn quadratic_comparison_matches_interval_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let draw = |rng: &mut rand::rngs::StdRng| {
        let a = q(rng.gen_range(-40..40), rng.gen_range(1..9));
        let b = q(rng.gen_range(-5..6), rng.gen_range(1..5));
        let d = qi([2, 3, 5, 6][rng.gen_range(0..4)]);
        (a, b, d)
    };
    for _ in 0..400 {
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let lx = QuadraticScalar::new(x.0.clone(), x.1.clone(), x.2.clone());
        let ly = QuadraticScalar::new(y.0.clone(), y.1.clone(), y.2.clone());
        let want = compare_quadratic((&x.0, &x.1, &x.2), (&y.0, &y.1, &y.2));
        assert_eq!(exactnum::compare(&lx, &ly), want, "{x:?} {y:?}");
    }
}

#[test]
fn tr_membership_matches_sign_test_oracle() {
    let w = ch(4, 0, -30);
    let e_w: DyadicIndex = "-3/2".parse().unwrap();
    for e_str in ["-1", "-2", "-5/2", "-7/4", "-9/4"] {
        let e: DyadicIndex = e_str.parse().unwrap();
        let ec = orc(&chern_of(&e));
        for v in enumerate_candidates(&lib(&w)).unwrap() {
            let want = tr_oracle(&w, &ec, e < e_w, &orc(&v));
            let got = tr_contains(&lib(&w), &e, &v).ok();
            assert_eq!(got, want, "{v} in TR({e})");
        }
    }
}

#[test]
fn printed_tr_character_is_a_misprint() {
    let w = ch(4, 0, -30);
    let e = orc(&chern_of(&DyadicIndex::integer(-1)));
    assert_eq!(tr_oracle(&w, &e, true, &ch(3, -2, -6)), Some(true));
    assert_eq!(tr_oracle(&w, &e, true, &ch(3, -2, 6)), Some(false));
    let verdict = candidate_ok(&lib(&w), &lib(&ch(3, -2, -6))).unwrap();
    assert_eq!(verdict, Verdict::Reject(RejectReason::VInTr(DyadicIndex::integer(-1))));
}

#[test]
fn left_line_incidences() {
    for ix in dyadics_in(-3, 3, 4) {
        let l = left_line(&ix);
        let e = orc(&chern_of(&ix));
        let e_plus = (e.0.clone(), e.1.clone(), &e.2 - Q::one() / &e.0);
        assert!(l.contains(&lib(&e_plus)), "{ix}");
        let shifted = (e.0.clone(), &e.1 - qi(3) * &e.0, &e.2 - qi(3) * &e.1 + q(9, 2) * &e.0 - Q::one() / &e.0);
        assert!(l.contains(&lib(&shifted)), "{ix}");
        let p: i64 = ix.p().try_into().unwrap();
        let (pl, ml) = (p - 1, ix.level());
        assert!(l.contains(&lib(&exceptional_ch(pl, ml))), "{ix}");
    }
}

#[test]
fn reduced_discriminant_matches() {
    for ix in dyadics_in(-2, 2, 3) {
        let e = chern_of(&ix);
        assert_eq!(bar_disc(&e).unwrap(), bar_delta(&orc(&e)));
        assert!(euler_form(&e, &e).is_one());
    }
}
