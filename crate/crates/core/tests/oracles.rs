//! Brute-force oracles checked against the library.
//!
//! The oracles here use plain `i128` arithmetic and the raw defining predicates,
//! without the search box or any helper from the crate.

use hilbstab::conditions::{extension_euler_direct, extension_euler_formula};
use hilbstab::hilb::product_selfintersection;
use hilbstab::{enumerate, BigInt, K3Surface, MukaiVector, SearchQuery};
use num_traits::ToPrimitive;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Conditions (0)–(3) for `(r, h, s)` straight from their definitions.
fn admissible_raw(h2: i128, k: i128, r: i128, s: i128) -> bool {
    let v_sq = h2 - 2 * r * s;
    let chi = r + s;
    let nonempty = v_sq >= -2;
    let inequality = 2 * chi >= v_sq + 2 * (r + 1) * k + 2;
    let locally_free = v_sq + 2 < 2 * r;
    let fine = gcd(gcd(r, h2), chi) == 1;
    nonempty && inequality && locally_free && fine
}

fn brute_force(h2: i128, k: i128) -> Vec<(i128, i128)> {
    let mut hits = Vec::new();
    for r in 1..=h2 {
        for s in -(h2 + 2)..=(h2 + 2) {
            if admissible_raw(h2, k, r, s) {
                hits.push((r, s));
            }
        }
    }
    hits
}

fn library(h2: i64, k: u64) -> Vec<(i128, i128)> {
    enumerate(&SearchQuery::single(h2, k), 1)
        .unwrap()
        .iter()
        .map(|hit| {
            let v = hit.vector();
            assert_eq!(v.m, BigInt::from(1));
            (v.r.to_i128().unwrap(), v.s.to_i128().unwrap())
        })
        .collect()
}

#[test]
fn search_matches_brute_force_on_full_grid() {
    for h2 in (2..=200).step_by(2) {
        for k in 2..=4 {
            assert_eq!(
                library(h2, k),
                brute_force(h2 as i128, k as i128),
                "h^2 = {h2}, k = {k}"
            );
        }
    }
}

#[test]
fn worked_examples_against_brute_force() {
    assert_eq!(brute_force(50, 2), vec![(1, 26), (2, 13), (3, 8)]);
    assert!(brute_force(186, 3).contains(&(5, 18)));
    assert_eq!(library(2, 2), brute_force(2, 2));
}

/// `(x_1 + … + x_k)^{2k}` where each `x_i` squares to a point class of degree
/// `h²` and cubes to zero: count words of length `2k` using every letter exactly
/// twice.
fn multinomial_oracle(h2: i128, k: usize) -> i128 {
    let len = 2 * k;
    let mut count = 0i128;
    let mut word = vec![0usize; len];
    loop {
        let mut uses = vec![0usize; k];
        for &letter in &word {
            uses[letter] += 1;
        }
        if uses.iter().all(|&u| u == 2) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == len {
                return count * h2.pow(k as u32);
            }
            word[i] += 1;
            if word[i] < k {
                break;
            }
            word[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn selfintersection_matches_expansion() {
    for h2 in [2i64, 4, 50, 186] {
        for k in 1..=4usize {
            let surface = K3Surface::new(h2).unwrap();
            assert_eq!(
                product_selfintersection(&surface, k as u64),
                BigInt::from(multinomial_oracle(h2 as i128, k)),
                "h^2 = {h2}, k = {k}"
            );
        }
    }
}

#[test]
fn extension_euler_routes_agree_on_small_grid() {
    for h2 in (2..=40).step_by(2) {
        let surface = K3Surface::new(h2).unwrap();
        for r in -3..=8 {
            for m in -2..=2 {
                for s in -8..=8 {
                    let v = MukaiVector::new(r, m, s);
                    for k in 1..=4 {
                        assert_eq!(
                            extension_euler_formula(&surface, &v, k).unwrap(),
                            extension_euler_direct(&surface, &v, k).unwrap()
                        );
                    }
                }
            }
        }
    }
}
