//! Verification harness: runs each relation/matroid claim over exhaustive
//! and seeded-random instance grids and reports the first counterexample.
//!
//! Counterexamples carry their inputs in the JSON file formats of
//! [`crate::io`], so they can be fed straight back to the CLI.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bridge::{
    circuit_approx, circuits_from_relation, induced_matroid, induced_relation, round_trip,
};
use crate::enumerate::{all_matroids, all_pers, random_per, random_subset};
use crate::error::Result;
use crate::io::{MatroidFile, RelationFile};
use crate::matroid::{check_circuit_axioms, union, Matroid};
use crate::par::Strategy;
use crate::relation::Relation;
use crate::rough::approx_report;
use crate::universe::{ElementSet, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    /// `C(R)` satisfies the circuit axioms.
    #[serde(rename = "p1")]
    P1,
    /// `M(R)` is normal.
    #[serde(rename = "p2")]
    P2,
    /// Circuit exchange through both private elements.
    #[serde(rename = "p3")]
    P3,
    /// `I(R1) ⊆ I(R1 ∩ R2)` and `I(R2) ⊆ I(R1 ∩ R2)`.
    #[serde(rename = "p4")]
    P4,
    /// Circuit-based approximations equal the neighborhood definition.
    #[serde(rename = "p5")]
    P5,
    /// `R(M)` is symmetric and transitive.
    #[serde(rename = "p6")]
    P6,
    /// `M(R1) + M(R2)` has no circuits and `R(M(R1) + M(R2))` is the diagonal.
    #[serde(rename = "p7")]
    P7,
    /// `R(M(R)) = R ∪ Δ`.
    #[serde(rename = "roundtrip")]
    RoundTrip,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::P1,
        Suite::P2,
        Suite::P3,
        Suite::P4,
        Suite::P5,
        Suite::P6,
        Suite::P7,
        Suite::RoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::P1 => "p1",
            Suite::P2 => "p2",
            Suite::P3 => "p3",
            Suite::P4 => "p4",
            Suite::P5 => "p5",
            Suite::P6 => "p6",
            Suite::P7 => "p7",
            Suite::RoundTrip => "roundtrip",
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            Suite::P1 => "C(R) satisfies the circuit axioms",
            Suite::P2 => "M(R) is a normal matroid",
            Suite::P3 => "circuits of M(R) meeting in one element exchange through a circuit holding both other elements",
            Suite::P4 => "I(R1) and I(R2) are contained in I(R1 ∩ R2)",
            Suite::P5 => "circuit-based lower/upper approximations equal the neighborhood definition",
            Suite::P6 => "R(M) is symmetric and transitive",
            Suite::P7 => "C(M(R1)+M(R2)) is empty and R(M(R1)+M(R2)) has no off-diagonal pairs",
            Suite::RoundTrip => "R(M(R)) = R ∪ Δ",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// A failing instance, serialized so it can be re-checked independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationFile>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub matroids: Vec<MatroidFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<Vec<String>>,
    pub claimed: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub proposition: Suite,
    pub claim: String,
    pub holds: bool,
    pub instances_checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

fn relation_counterexample(rels: &[&Relation], claimed: &str, observed: String) -> Counterexample {
    Counterexample {
        relations: rels
            .iter()
            .map(|r| RelationFile::from_relation(r))
            .collect(),
        matroids: Vec::new(),
        query: None,
        claimed: claimed.to_string(),
        observed,
    }
}

/// `C(R)` passes (C1)–(C3).
pub fn check_circuit_family(rel: &Relation) -> Result<Option<Counterexample>> {
    let report = check_circuit_axioms(&circuits_from_relation(rel)?)?;
    Ok((!report.valid).then(|| {
        relation_counterexample(&[rel], Suite::P1.claim(), report.describe(rel.universe()))
    }))
}

pub fn check_normal(rel: &Relation) -> Result<Option<Counterexample>> {
    let ind = induced_matroid(rel)?;
    let m = ind.matroid();
    let missing = (0..rel.universe().len()).find(|&x| !m.is_independent(ElementSet::singleton(x)));
    Ok(missing.map(|x| {
        relation_counterexample(
            &[rel],
            Suite::P2.claim(),
            format!("{{{}}} is dependent", rel.universe().label(x)),
        )
    }))
}

pub fn check_exchange(rel: &Relation) -> Result<Option<Counterexample>> {
    let ind = induced_matroid(rel)?;
    let circuits = ind.circuits().members();
    let u = rel.universe();
    for &c1 in circuits {
        for &c2 in circuits {
            if !c1.intersects(c2) {
                continue;
            }
            for e1 in c1.difference(c2).iter() {
                for e2 in c2.difference(c1).iter() {
                    let need = ElementSet::from_indices([e1, e2]);
                    let span = c1.union(c2);
                    let found = circuits
                        .iter()
                        .any(|c3| need.is_subset(*c3) && c3.is_subset(span));
                    if !found {
                        return Ok(Some(relation_counterexample(
                            &[rel],
                            Suite::P3.claim(),
                            format!(
                                "no circuit C3 with {} ⊆ C3 ⊆ {} ∪ {}",
                                u.render(need),
                                u.render(c1),
                                u.render(c2)
                            ),
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn check_intersection_inclusion(
    r1: &Relation,
    r2: &Relation,
) -> Result<Option<Counterexample>> {
    let both = r1.intersect(r2)?;
    let i1 = induced_matroid(r1)?.independents()?;
    let i2 = induced_matroid(r2)?.independents()?;
    let i12 = induced_matroid(&both)?.independents()?;
    let u = r1.universe();
    let missing = i1
        .members()
        .iter()
        .chain(i2.members())
        .find(|s| !i12.contains(**s));
    Ok(missing.map(|s| {
        relation_counterexample(
            &[r1, r2],
            Suite::P4.claim(),
            format!(
                "{} is independent in a factor but not in M(R1 ∩ R2)",
                u.render(*s)
            ),
        )
    }))
}

/// Compares both approximation routes on each query set.
pub fn check_circuit_approx(
    rel: &Relation,
    queries: impl IntoIterator<Item = ElementSet>,
) -> Result<Option<Counterexample>> {
    let ind = induced_matroid(rel)?;
    let u = rel.universe();
    for x in queries {
        let by_circuits = circuit_approx(&ind, x)?;
        let by_definition = approx_report(rel, x)?;
        if by_circuits != by_definition {
            let mut cx = relation_counterexample(
                &[rel],
                Suite::P5.claim(),
                format!(
                    "circuits: lower {} upper {}; definition: lower {} upper {}",
                    u.render(by_circuits.lower),
                    u.render(by_circuits.upper),
                    u.render(by_definition.lower),
                    u.render(by_definition.upper)
                ),
            );
            cx.query = Some(u.labels_of(x));
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

pub fn check_induced_relation(m: &Matroid) -> Result<Option<Counterexample>> {
    let rel = induced_relation(m)?;
    Ok(rel
        .check_properties()
        .violation(m.universe())
        .map(|v| Counterexample {
            relations: Vec::new(),
            matroids: vec![MatroidFile::from_matroid(m)],
            query: None,
            claimed: Suite::P6.claim().to_string(),
            observed: v.to_string(),
        }))
}

/// What the union of two induced matroids looks like.
#[derive(Clone, Debug)]
pub struct UnionOutcome {
    pub union: Matroid,
    pub circuits: crate::family::SetFamily,
    pub induced: Relation,
    pub off_diagonal_pairs: usize,
}

impl UnionOutcome {
    pub fn holds(&self) -> bool {
        self.circuits.is_empty() && self.off_diagonal_pairs == 0
    }
}

pub fn union_outcome(r1: &Relation, r2: &Relation) -> Result<UnionOutcome> {
    let m1 = induced_matroid(r1)?;
    let m2 = induced_matroid(r2)?;
    let union = union(m1.matroid(), m2.matroid())?;
    let circuits = union.circuits();
    let induced = induced_relation(&union)?;
    let off_diagonal_pairs = induced.pairs().filter(|(x, y)| x != y).count();
    Ok(UnionOutcome {
        union,
        circuits,
        induced,
        off_diagonal_pairs,
    })
}

pub fn check_union_circuit_free(r1: &Relation, r2: &Relation) -> Result<Option<Counterexample>> {
    let outcome = union_outcome(r1, r2)?;
    Ok((!outcome.holds()).then(|| {
        let mut cx = relation_counterexample(
            &[r1, r2],
            Suite::P7.claim(),
            format!(
                "C(M(R1)+M(R2)) = {}; off-diagonal pairs in R(M(R1)+M(R2)): {}",
                outcome.circuits.render(),
                outcome.off_diagonal_pairs
            ),
        );
        cx.matroids.push(MatroidFile::from_matroid(&outcome.union));
        cx
    }))
}

pub fn check_round_trip(rel: &Relation) -> Result<Option<Counterexample>> {
    let rt = round_trip(rel)?;
    Ok((!rt.holds()).then(|| {
        relation_counterexample(
            &[rel],
            Suite::RoundTrip.claim(),
            format!(
                "R(M(R)) has {} pairs, R ∪ Δ has {}",
                rt.regenerated.len(),
                rt.expected.len()
            ),
        )
    }))
}

/// Instance grid for [`verify`].
#[derive(Clone, Debug)]
pub struct Grid {
    /// Exhaustive grids cover every universe size `0..=max_n`.
    pub max_n: usize,
    /// Extra seeded random instances, if any.
    pub random: Option<RandomGrid>,
}

#[derive(Clone, Copy, Debug)]
pub struct RandomGrid {
    pub seed: u64,
    pub n: usize,
    pub relations: usize,
    pub queries_per_relation: usize,
}

impl Grid {
    pub fn exhaustive(max_n: usize) -> Self {
        Grid {
            max_n,
            random: None,
        }
    }
}

struct Instances {
    /// (relation, query sets for the approximation check)
    pers: Vec<(Relation, Option<Vec<ElementSet>>)>,
    pairs: Vec<(Relation, Relation)>,
    matroids: Vec<Matroid>,
}

fn instances(suite: Suite, grid: &Grid) -> Result<Instances> {
    let mut pers = Vec::new();
    let mut pairs = Vec::new();
    let mut matroids = Vec::new();
    let paired = matches!(suite, Suite::P4 | Suite::P7);
    for n in 0..=grid.max_n {
        let u = Universe::alphabetic(n)?;
        let all = all_pers(&u);
        match suite {
            Suite::P6 => {
                if n <= 4 {
                    matroids.extend(all_matroids(n)?);
                }
            }
            _ if paired => {
                for r1 in &all {
                    for r2 in &all {
                        pairs.push((r1.clone(), r2.clone()));
                    }
                }
            }
            _ => pers.extend(all.into_iter().map(|r| (r, None))),
        }
    }
    if let Some(rg) = grid.random {
        let mut rng = ChaCha8Rng::seed_from_u64(rg.seed);
        let u = Universe::alphabetic(rg.n)?;
        for _ in 0..rg.relations {
            match suite {
                Suite::P6 => {
                    let r = random_per(&mut rng, &u);
                    matroids.push(induced_matroid(&r)?.matroid().clone());
                }
                _ if paired => {
                    let r1 = random_per(&mut rng, &u);
                    let r2 = random_per(&mut rng, &u);
                    pairs.push((r1, r2));
                }
                _ => {
                    let r = random_per(&mut rng, &u);
                    let qs = (0..rg.queries_per_relation)
                        .map(|_| random_subset(&mut rng, &u))
                        .collect();
                    pers.push((r, Some(qs)));
                }
            }
        }
    }
    Ok(Instances {
        pers,
        pairs,
        matroids,
    })
}

fn summarize(
    suite: Suite,
    outcomes: Vec<Result<Option<Counterexample>>>,
) -> Result<PropositionReport> {
    let instances_checked = outcomes.len();
    let mut failures = 0;
    let mut counterexample = None;
    for outcome in outcomes {
        if let Some(cx) = outcome? {
            failures += 1;
            counterexample.get_or_insert(cx);
        }
    }
    Ok(PropositionReport {
        proposition: suite,
        claim: suite.claim().to_string(),
        holds: failures == 0,
        instances_checked,
        failures,
        counterexample,
    })
}

/// Checks one claim on every instance of the grid. The reported
/// counterexample is the first failing instance in enumeration order.
///
/// `strategy` drives the loop over instances; the work inside each instance
/// runs sequentially, since nested parallelism only adds scheduling cost.
pub fn verify(suite: Suite, grid: &Grid, strategy: Strategy) -> Result<PropositionReport> {
    let seq = Strategy::Sequential;
    let inst = seq.as_default(|| instances(suite, grid))?;
    let outcomes = match suite {
        Suite::P1 => strategy.map(&inst.pers, |(r, _)| {
            seq.as_default(|| check_circuit_family(r))
        }),
        Suite::P2 => strategy.map(&inst.pers, |(r, _)| seq.as_default(|| check_normal(r))),
        Suite::P3 => strategy.map(&inst.pers, |(r, _)| seq.as_default(|| check_exchange(r))),
        Suite::P5 => strategy.map(&inst.pers, |(r, qs)| {
            seq.as_default(|| match qs {
                Some(qs) => check_circuit_approx(r, qs.iter().copied()),
                None => check_circuit_approx(r, r.universe().subsets()),
            })
        }),
        Suite::RoundTrip => {
            strategy.map(&inst.pers, |(r, _)| seq.as_default(|| check_round_trip(r)))
        }
        Suite::P4 => strategy.map(&inst.pairs, |(a, b)| {
            seq.as_default(|| check_intersection_inclusion(a, b))
        }),
        Suite::P7 => strategy.map(&inst.pairs, |(a, b)| {
            seq.as_default(|| check_union_circuit_free(a, b))
        }),
        Suite::P6 => strategy.map(&inst.matroids, |m| {
            seq.as_default(|| check_induced_relation(m))
        }),
    };
    summarize(suite, outcomes)
}

pub fn verify_all(
    suites: &[Suite],
    grid: &Grid,
    strategy: Strategy,
) -> Result<Vec<PropositionReport>> {
    suites.iter().map(|&s| verify(s, grid, strategy)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_relation;
    use crate::sample;

    #[test]
    fn union_of_disjoint_pair_classes_is_free() {
        let out = union_outcome(&sample::ab_class_on_abc(), &sample::ac_class_on_abc()).unwrap();
        assert!(out.circuits.is_empty());
        assert_eq!(out.off_diagonal_pairs, 0);
        assert_eq!(out.induced, Relation::diagonal(out.induced.universe()));
        assert!(out.holds());
    }

    #[test]
    fn shared_three_class_breaks_circuit_freeness() {
        let full = sample::full_on_abc();
        let out = union_outcome(&full, &full).unwrap();
        let u = full.universe();
        assert_eq!(out.circuits.members(), &[u.full()]);
        assert_eq!(out.off_diagonal_pairs, 0);
        assert!(!out.holds());

        let cx = check_union_circuit_free(&full, &full).unwrap().unwrap();
        // re-check from the serialized inputs alone
        let text: Vec<String> = cx
            .relations
            .iter()
            .map(|f| serde_json::to_string(f).unwrap())
            .collect();
        let r1 = parse_relation(&text[0]).unwrap();
        let r2 = parse_relation(&text[1]).unwrap();
        assert!(!union_outcome(&r1, &r2).unwrap().holds());
        assert!(cx.observed.contains("{{a, b, c}}"), "{}", cx.observed);
    }

    #[test]
    fn intersection_inclusion_on_overlapping_classes() {
        let r1 = sample::abc_class_on_abcd();
        let r2 = sample::abd_class_on_abcd();
        assert_eq!(check_intersection_inclusion(&r1, &r2).unwrap(), None);
    }

    #[test]
    fn suites_on_small_grid() {
        let grid = Grid::exhaustive(3);
        for suite in Suite::ALL {
            let report = verify(suite, &grid, Strategy::default()).unwrap();
            assert!(report.instances_checked > 0);
            match suite {
                Suite::P7 => {
                    assert!(!report.holds);
                    assert!(report.counterexample.is_some());
                }
                _ => assert!(report.holds, "{suite:?}: {report:?}"),
            }
        }
    }

    #[test]
    fn strategies_produce_identical_reports() {
        let grid = Grid {
            max_n: 3,
            random: Some(RandomGrid {
                seed: 11,
                n: 6,
                relations: 20,
                queries_per_relation: 10,
            }),
        };
        for suite in [Suite::P5, Suite::P7] {
            let reports: Vec<_> = Strategy::available()
                .into_iter()
                .map(|s| verify(suite, &grid, s).unwrap())
                .collect();
            assert!(reports.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("p9".parse::<Suite>().is_err());
    }
}
