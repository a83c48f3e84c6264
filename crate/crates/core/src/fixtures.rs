//! Reference structures: the Fano plane, complete designs, and S(5,6,12)
//! generated as an orbit of PSL(2,11) on the projective line over GF(11).

use std::collections::{BTreeSet, VecDeque};

use crate::design::{verify_bruteforce, DesignParameters, IncidenceStructure};
use crate::error::{Error, Result};
use crate::exactmath::ExactInt;
use crate::pointset::{masks_of_weight, PointSet};

const FANO_LINES: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 7],
    [2, 5, 6],
    [3, 4, 6],
    [3, 5, 7],
];

/// Base block of S(5,6,12) under `z -> z+1`, `z -> -1/z`, as found by
/// [`scan_s5612_base_block`]. Labels: field element `a` is point `a + 1`,
/// infinity is point 12.
pub const S5612_BASE_BLOCK: [u32; 6] = [1, 2, 3, 4, 5, 7];

pub fn fano() -> IncidenceStructure {
    let lists: Vec<Vec<u32>> = FANO_LINES.iter().map(|l| l.to_vec()).collect();
    IncidenceStructure::from_point_lists(7, &lists).expect("Fano lines are valid")
}

/// The Fano plane without its last line `{3,5,7}`.
pub fn fano_minus_one() -> IncidenceStructure {
    let lists: Vec<Vec<u32>> = FANO_LINES[..6].iter().map(|l| l.to_vec()).collect();
    IncidenceStructure::from_point_lists(7, &lists).expect("Fano lines are valid")
}

/// All `k`-subsets of `[1..n]`.
pub fn complete_design(n: u32, k: u32) -> Result<IncidenceStructure> {
    let blocks = masks_of_weight(n, k)
        .map(|m| PointSet::new(n, m))
        .collect::<Result<Vec<_>>>()?;
    IncidenceStructure::new(n, k, blocks)
}

const Q: u32 = 11;
const INF: u32 = Q;

fn inverse_mod(a: u32) -> u32 {
    (1..Q).find(|b| a * b % Q == 1).expect("nonzero elements are invertible")
}

/// Generators of PSL(2,11) as permutations of `{0..10, inf}` (index 11).
fn psl_2_11_generators() -> [[u32; 12]; 2] {
    let mut shift = [0u32; 12];
    let mut invert = [0u32; 12];
    for z in 0..Q {
        shift[z as usize] = (z + 1) % Q;
        invert[z as usize] = if z == 0 { INF } else { (Q - inverse_mod(z)) % Q };
    }
    shift[INF as usize] = INF;
    invert[INF as usize] = 0;
    [shift, invert]
}

fn permute_mask(perm: &[u32; 12], mask: u64) -> u64 {
    (0..12)
        .filter(|i| mask >> i & 1 == 1)
        .fold(0u64, |acc, i| acc | 1 << perm[i as usize])
}

/// Orbit of a 12-bit mask under the group generated by `z -> z+1` and
/// `z -> -1/z`. Bit `a` is field element `a`, bit 11 is infinity, which
/// matches the 1-based point labels `a + 1` and `12`.
pub fn psl_2_11_orbit(base: u64) -> Vec<u64> {
    let gens = psl_2_11_generators();
    let mut seen = BTreeSet::from([base]);
    let mut queue = VecDeque::from([base]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let img = permute_mask(g, m);
            if seen.insert(img) {
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

fn orbit_structure(base: u64) -> Result<IncidenceStructure> {
    let blocks = psl_2_11_orbit(base)
        .into_iter()
        .map(|m| PointSet::new(12, m))
        .collect::<Result<Vec<_>>>()?;
    IncidenceStructure::new(12, 6, blocks)
}

fn is_s5612(d: &IncidenceStructure) -> Result<bool> {
    Ok(matches!(verify_bruteforce(d, 5)?, Some(p) if p.lambda == ExactInt::from(1)))
}

/// Scans 6-subsets in increasing mask order for the first whose orbit has
/// exactly 132 blocks and verifies as a 5-(12,6,1) design.
pub fn scan_s5612_base_block() -> Result<PointSet> {
    for base in masks_of_weight(12, 6) {
        if psl_2_11_orbit(base).len() != 132 {
            continue;
        }
        if is_s5612(&orbit_structure(base)?)? {
            return PointSet::new(12, base);
        }
    }
    Err(Error::Inconsistency("no 6-subset generates S(5,6,12)".into()))
}

/// S(5,6,12) from the frozen base block, re-verified on every call.
pub fn generate_s5612() -> Result<IncidenceStructure> {
    let base = PointSet::from_points(12, &S5612_BASE_BLOCK)?;
    let d = orbit_structure(base.mask())?;
    if d.b() != 132 || !is_s5612(&d)? {
        return Err(Error::Inconsistency(
            "frozen base block no longer generates S(5,6,12)".into(),
        ));
    }
    Ok(d)
}

/// A named reference structure with the parameters it must verify to.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub structure: IncidenceStructure,
    pub expected_params: Option<DesignParameters>,
    pub t: u32,
}

impl Fixture {
    /// Re-runs brute-force verification and compares against the frozen
    /// expectation.
    pub fn reverify(&self) -> Result<()> {
        let got = verify_bruteforce(&self.structure, self.t)?;
        if got != self.expected_params {
            return Err(Error::Inconsistency(format!(
                "fixture {} failed re-verification at t = {}",
                self.name, self.t
            )));
        }
        Ok(())
    }
}

fn params(t: u32, n: u32, k: u32, lambda: i64) -> Option<DesignParameters> {
    crate::design::lambda_table(t, n, k, &ExactInt::from(lambda))
        .expect("fixture parameters satisfy 1 <= t <= k <= n")
}

/// All fixtures, each re-verified before being returned.
pub fn load_fixtures() -> Result<Vec<Fixture>> {
    let fixtures = vec![
        Fixture {
            name: "fano",
            structure: fano(),
            expected_params: params(2, 7, 3, 1),
            t: 2,
        },
        Fixture {
            name: "fano-minus-one",
            structure: fano_minus_one(),
            expected_params: None,
            t: 2,
        },
        Fixture {
            name: "complete-5-2",
            structure: complete_design(5, 2)?,
            expected_params: params(2, 5, 2, 1),
            t: 2,
        },
        Fixture {
            name: "s5612",
            structure: generate_s5612()?,
            expected_params: params(5, 12, 6, 1),
            t: 5,
        },
    ];
    for f in &fixtures {
        f.reverify()?;
    }
    Ok(fixtures)
}
