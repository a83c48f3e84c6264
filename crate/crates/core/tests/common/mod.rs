#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tdesign::design::complement_design;
use tdesign::fixtures::complete_design;
use tdesign::pointset::masks_of_weight;
use tdesign::{BooleanFunction, IncidenceStructure, PointSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn structure(n: u32, k: u32, masks: impl IntoIterator<Item = u64>) -> IncidenceStructure {
    let set: BTreeSet<u64> = masks.into_iter().collect();
    let blocks = set.into_iter().map(|m| PointSet::new(n, m).unwrap()).collect();
    IncidenceStructure::new(n, k, blocks).unwrap()
}

pub fn random_structure(rng: &mut ChaCha8Rng, n: u32, k: u32) -> IncidenceStructure {
    let mut all: Vec<u64> = masks_of_weight(n, k).collect();
    all.shuffle(rng);
    let b = rng.gen_range(1..=all.len());
    structure(n, k, all.into_iter().take(b))
}

fn orbit(n: u32, gens: &[Vec<u32>], base: u64) -> Vec<u64> {
    let mut seen = BTreeSet::from([base]);
    let mut stack = vec![base];
    while let Some(m) = stack.pop() {
        for g in gens {
            let img = (0..n)
                .filter(|i| m >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << g[i as usize]);
            if seen.insert(img) {
                stack.push(img);
            }
        }
    }
    seen.into_iter().collect()
}

fn random_base(rng: &mut ChaCha8Rng, n: u32, k: u32) -> u64 {
    let mut pts: Vec<u32> = (0..n).collect();
    pts.shuffle(rng);
    pts[..k as usize].iter().fold(0u64, |acc, p| acc | 1 << p)
}

/// Union of one or two orbits of `Z_n` acting by translation.
pub fn cyclic_structure(rng: &mut ChaCha8Rng, n: u32, k: u32) -> IncidenceStructure {
    let shift: Vec<u32> = (0..n).map(|x| (x + 1) % n).collect();
    let gens = vec![shift];
    let mut masks = orbit(n, &gens, random_base(rng, n, k));
    if rng.gen_bool(0.3) {
        masks.extend(orbit(n, &gens, random_base(rng, n, k)));
    }
    structure(n, k, masks)
}

/// Orbit of a random base block under `x -> a x + b` over `GF(p)`.
pub fn affine_structure(rng: &mut ChaCha8Rng, p: u32, k: u32) -> IncidenceStructure {
    let shift: Vec<u32> = (0..p).map(|x| (x + 1) % p).collect();
    let prim = (2..p)
        .find(|&g| (1..p - 1).all(|e| (0..e).fold(1, |acc, _| acc * g % p) != 1))
        .unwrap();
    let scale: Vec<u32> = (0..p).map(|x| x * prim % p).collect();
    structure(p, k, orbit(p, &[shift, scale], random_base(rng, p, k)))
}

/// Orbit under PSL(2,7) acting on the projective line `{0..6, inf}`.
pub fn psl27_structure(rng: &mut ChaCha8Rng, k: u32) -> IncidenceStructure {
    let inv = |z: u32| (1..7).find(|y| z * y % 7 == 1).unwrap();
    let mut shift: Vec<u32> = (0..7).map(|x| (x + 1) % 7).collect();
    shift.push(7);
    let mut invert: Vec<u32> = (0..7).map(|z| if z == 0 { 7 } else { (7 - inv(z)) % 7 }).collect();
    invert.push(0);
    structure(8, k, orbit(8, &[shift, invert], random_base(rng, 8, k)))
}

/// A mixed corpus of k-uniform structures with `n <= max_n`.
pub fn corpus(seed: u64, count: usize, max_n: u32) -> Vec<IncidenceStructure> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let k = rng.gen_range(1..=n);
        let d = match rng.gen_range(0..6) {
            0 | 1 => random_structure(&mut rng, n, k),
            2 => cyclic_structure(&mut rng, n, k),
            3 if max_n >= 7 => {
                let p = *[5u32, 7].choose(&mut rng).unwrap();
                let k = rng.gen_range(1..=p);
                affine_structure(&mut rng, p, k)
            }
            4 if max_n >= 8 => {
                let k = rng.gen_range(1..=8);
                psl27_structure(&mut rng, k)
            }
            _ => complete_design(n, k).unwrap(),
        };
        let d = if rng.gen_bool(0.25) { complement_design(&d) } else { d };
        let d = if d.b() > 1 && rng.gen_bool(0.2) {
            let victim = d.blocks()[rng.gen_range(0..d.b())];
            d.without_block(&victim).unwrap()
        } else {
            d
        };
        out.push(d);
    }
    out
}

pub fn random_function(rng: &mut ChaCha8Rng, n: u32) -> BooleanFunction {
    let density: f64 = rng.gen_range(0.0..=1.0);
    let masks: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect();
    BooleanFunction::from_masks(n, masks).unwrap()
}
