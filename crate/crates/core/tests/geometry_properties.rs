mod common;

use common::*;
use latcc::builtin::Builtin;
use latcc::construction::{associated_construction_c, construction_c_star};
use latcc::geometry::{min_distance_sq, min_representative, norm_sq, packing_density, structured_min_norm};
use latcc::latticeness::brute_force_is_lattice;
use latcc::{LayeredCode, Limits};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn min_representative_is_norm_minimal_and_idempotent() {
    for n in 1..=4usize {
        for levels in 1..=3usize {
            let m = 1i64 << levels;
            let span = (2 * m) as usize;
            for code in 0..span.pow(n as u32) {
                let mut c = code;
                let p: Vec<i64> = (0..n)
                    .map(|_| {
                        let v = (c % span) as i64 - m;
                        c /= span;
                        v
                    })
                    .collect();
                let rep = min_representative(&p, levels);
                assert_eq!(min_representative(&rep, levels), rep);
                assert!(rep.iter().zip(&p).all(|(a, b)| (a - b).rem_euclid(m) == 0));
                assert_eq!(norm_sq(&rep), min_norm_offsets(&p.iter().map(|v| v.rem_euclid(m)).collect::<Vec<_>>(), m));
                assert!(rep.iter().all(|&v| -m / 2 < v && v <= m / 2), "{rep:?}");
            }
        }
    }
}

fn single_point_min_norm(lc: &LayeredCode) -> i64 {
    let m = 1i64 << lc.levels();
    star_cosets(lc)
        .iter()
        .map(|p| if p.iter().all(|&v| v == 0) { m * m } else { min_norm_offsets(p, m) })
        .min()
        .unwrap()
}

fn check_lattice_distances(lc: &LayeredCode) {
    let k = construction_c_star(lc, &lim()).unwrap();
    let md = min_distance_sq(&k, &lim()).unwrap();
    assert_eq!(md.d2, min_distance_oracle(&star_cosets(lc), lc.levels()));
    let lattice = brute_force_is_lattice(&k, &lim()).unwrap().is_lattice == Some(true);
    let structured = structured_min_norm(lc, &lim()).unwrap();
    assert_eq!(structured.d2, single_point_min_norm(lc), "{lc:?}");
    let w = structured.witness.reconstruct();
    assert_eq!(norm_sq(&w), structured.d2);
    assert!(k.contains_point(&w).unwrap());
    if lattice {
        assert_eq!(md.d2, structured.d2, "{lc:?}");
    }
    let [p, q] = &md.witness;
    assert!(k.contains_point(p).unwrap() && k.contains_point(q).unwrap());
    let diff: Vec<i64> = q.iter().zip(p).map(|(a, b)| a - b).collect();
    let rep = min_representative(&diff, lc.levels());
    // a pure translate shows up as two copies of the same coset
    let shortest = if rep.iter().all(|&v| v == 0) { diff } else { rep };
    assert_eq!(norm_sq(&shortest), md.d2);
}

#[test]
fn examples_distances() {
    for b in [Builtin::Ex1, Builtin::Ex2, Builtin::Ex5] {
        check_lattice_distances(&b.layered());
    }
}

proptest! {
    #[test]
    fn random_code_distances(n in 1usize..=4, levels in 1usize..=3, gens in 0usize..=7, seed in any::<u64>()) {
        let mut r = rng(seed);
        check_lattice_distances(&random_layered(&mut r, n, levels, gens));
    }
}

#[test]
fn star_is_denser_than_associated_c_on_examples() {
    let lc = Builtin::Ex2.layered();
    let star = packing_density(&construction_c_star(&lc, &lim()).unwrap(), &lim()).unwrap();
    let assoc = packing_density(&associated_construction_c(&lc, &lim()).unwrap(), &lim()).unwrap();
    assert!(star.packing_density >= assoc.packing_density);
    let leech = latcc::leech::leech_verify().unwrap();
    assert!(leech.density.packing_density >= leech.associated.density.packing_density);
}
