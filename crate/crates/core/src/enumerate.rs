//! Exhaustive and seeded-random instance generators for the verification grids.

use rand::Rng;

use crate::error::Result;
use crate::family::SetFamily;
use crate::matroid::{check_circuit_axioms, check_independence_axioms, Matroid};
use crate::relation::Relation;
use crate::universe::{ElementSet, Universe};

/// Builds the partial equivalence relation whose classes are `blocks`;
/// elements in no block are isolated.
pub fn per_from_blocks(universe: &Universe, blocks: &[ElementSet]) -> Relation {
    let mut rows = vec![ElementSet::EMPTY; universe.len()];
    for &block in blocks {
        for x in block.iter() {
            rows[x] = block;
        }
    }
    Relation::from_rows(universe, rows)
}

/// Every symmetric and transitive relation on `universe`: one per partition of
/// each subset `S ⊆ U`, with the elements outside `S` isolated. There are
/// `Bell(n + 1)` of them.
pub fn all_pers(universe: &Universe) -> Vec<Relation> {
    fn go(i: usize, n: usize, blocks: &mut Vec<ElementSet>, out: &mut Vec<Vec<ElementSet>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        // isolated
        go(i + 1, n, blocks, out);
        for b in 0..blocks.len() {
            let saved = blocks[b];
            blocks[b] = saved.with(i);
            go(i + 1, n, blocks, out);
            blocks[b] = saved;
        }
        blocks.push(ElementSet::singleton(i));
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut partitions = Vec::new();
    go(0, universe.len(), &mut Vec::new(), &mut partitions);
    partitions
        .iter()
        .map(|blocks| per_from_blocks(universe, blocks))
        .collect()
}

/// Every binary relation on `universe` (`2^(n²)` of them), for `n ≤ 4`.
pub fn all_relations(universe: &Universe) -> impl Iterator<Item = Relation> + '_ {
    let n = universe.len();
    assert!(n <= 4, "2^(n*n) relations; keep n <= 4");
    let row_mask = (1u64 << n) - 1;
    (0..1u64 << (n * n)).map(move |bits| {
        let rows = (0..n)
            .map(|i| ElementSet((bits >> (i * n)) & row_mask))
            .collect();
        Relation::from_rows(universe, rows)
    })
}

/// Every matroid on the alphabetic universe of size `n ≤ 4`, found by
/// filtering all families that contain `∅` through the independence axioms.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>> {
    assert!(n <= 4, "2^(2^n) families; keep n <= 4");
    let universe = Universe::alphabetic(n)?;
    let subsets = 1u64 << n;
    let mut out = Vec::new();
    // bit 0 (the empty set) is always present
    for bits in (0..1u64 << subsets).filter(|b| b & 1 == 1) {
        let hereditary = (0..subsets).filter(|s| bits >> s & 1 == 1).all(|s| {
            ElementSet(s)
                .iter()
                .all(|e| bits >> (s & !(1 << e)) & 1 == 1)
        });
        if !hereditary {
            continue;
        }
        let family = SetFamily::new(
            &universe,
            (0..subsets).filter(|s| bits >> s & 1 == 1).map(ElementSet),
        )?;
        if check_independence_axioms(&family)?.valid {
            out.push(Matroid::from_independents(family)?);
        }
    }
    Ok(out)
}

/// Every circuit family on `universe` made only of 2-element sets that
/// satisfies the circuit axioms.
pub fn all_pair_circuit_families(universe: &Universe) -> Result<Vec<SetFamily>> {
    let n = universe.len();
    let edges: Vec<ElementSet> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| ElementSet::from_indices([x, y])))
        .collect();
    assert!(edges.len() <= 20, "2^(n choose 2) graphs; keep n <= 6");
    let mut out = Vec::new();
    for bits in 0..1u64 << edges.len() {
        let members = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, e)| *e);
        let family = SetFamily::new(universe, members)?;
        if check_circuit_axioms(&family)?.valid {
            out.push(family);
        }
    }
    Ok(out)
}

pub fn random_subset<R: Rng>(rng: &mut R, universe: &Universe) -> ElementSet {
    ElementSet(rng.gen::<u64>() & universe.full().bits())
}

/// A random partial equivalence relation: each element is isolated with
/// probability 1/4, otherwise placed in one of up to `n` classes.
pub fn random_per<R: Rng>(rng: &mut R, universe: &Universe) -> Relation {
    let n = universe.len();
    let classes = rng.gen_range(1..=n.max(1));
    let mut blocks = vec![ElementSet::EMPTY; classes];
    for x in 0..n {
        if rng.gen_bool(0.75) {
            let b = rng.gen_range(0..classes);
            blocks[b].insert(x);
        }
    }
    per_from_blocks(universe, &blocks)
}

/// A random relation drawn from a mix of shapes so that symmetric and
/// transitive ones are not vanishingly rare: uniform pairs, PERs, PERs with one
/// pair toggled, and symmetric closures of uniform pairs.
pub fn random_relation<R: Rng>(rng: &mut R, universe: &Universe) -> Relation {
    let n = universe.len();
    let uniform =
        |rng: &mut R| -> Vec<ElementSet> { (0..n).map(|_| random_subset(rng, universe)).collect() };
    let rows = match rng.gen_range(0..4) {
        0 => uniform(rng),
        1 => random_per(rng, universe).rows().to_vec(),
        2 => {
            let mut rows = random_per(rng, universe).rows().to_vec();
            if n > 0 {
                let x = rng.gen_range(0..n);
                let y = rng.gen_range(0..n);
                rows[x] = ElementSet(rows[x].bits() ^ (1 << y));
            }
            rows
        }
        _ => {
            let mut rows = uniform(rng);
            for x in 0..n {
                for y in rows[x].iter() {
                    rows[y].insert(x);
                }
            }
            rows
        }
    };
    Relation::from_rows(universe, rows)
}

/// A random binary matroid: element `i` is a random vector in `GF(2)^rank`,
/// and a set is independent iff its vectors are linearly independent.
pub fn random_binary_matroid<R: Rng>(
    rng: &mut R,
    universe: &Universe,
    rank: u32,
) -> Result<Matroid> {
    let columns: Vec<u32> = (0..universe.len())
        .map(|_| rng.gen::<u32>() & ((1u32 << rank) - 1))
        .collect();
    let independent = |s: ElementSet| {
        let mut basis: Vec<u32> = Vec::new();
        for i in s.iter() {
            let mut v = columns[i];
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v == 0 {
                return false;
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        true
    };
    let family = SetFamily::new(universe, universe.subsets().filter(|s| independent(*s)))?;
    Matroid::from_independents(family)
}
