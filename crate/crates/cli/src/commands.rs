use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use roughmat::bridge::{circuit_approx, induced_matroid, induced_relation, round_trip};
use roughmat::io::{parse_matroid, parse_matroid_file, parse_relation, FamilyKind, RelationFile};
use roughmat::matroid::{
    check_circuit_axioms, check_independence_axioms, family_intersection_probe, union,
};
use roughmat::rough::{approx_report, probe_property};
use roughmat::verify::{verify_all, Grid, RandomGrid, Suite};
use roughmat::{
    ApproxReport, ElementSet, Matroid, Property, Relation, SetFamily, Strategy, Universe,
    ENUMERATION_CAP,
};

use crate::render;
use crate::{Command, Format, Method};

/// Largest exhaustive grid `verify` accepts, and the default.
const VERIFY_MAX_N: usize = 6;
const VERIFY_DEFAULT_N: usize = 4;

/// Shape of the random grid added by `verify --seed`.
const RANDOM_N: usize = 10;
const RANDOM_RELATIONS: usize = 100;
const RANDOM_QUERIES: usize = 16;

pub struct Output {
    pub rendered: String,
    /// A checked claim (axioms, a property, a proposition) came out false.
    pub claim_failed: bool,
}

pub fn run(command: Command, format: Format) -> Result<Output> {
    match command {
        Command::RelCheck(a) => rel_check(&load_relation(&a.relation)?, format),
        Command::Classes(a) => classes(&load_relation(&a.relation)?, format),
        Command::Approx {
            relation,
            set,
            method,
        } => approx(&load_relation(&relation.relation)?, &set, method, format),
        Command::Induce(a) => induce(&load_relation(&a.relation)?, format),
        Command::MatroidCheck(a) => matroid_check(&a.matroid, format),
        Command::Circuits(a) => circuits(&load_matroid(&a.matroid)?, format),
        Command::Union { matroid, matroid2 } => union_cmd(
            &load_matroid(&matroid.matroid)?,
            &load_matroid(&matroid2)?,
            format,
        ),
        Command::InduceRel(a) => induce_rel(&load_matroid(&a.matroid)?, format),
        Command::Roundtrip(a) => roundtrip(&load_relation(&a.relation)?, format),
        Command::Verify { suite, n, seed } => verify_cmd(&suite, n, seed, format),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_relation(path: &Path) -> Result<Relation> {
    parse_relation(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_matroid(path: &Path) -> Result<Matroid> {
    parse_matroid(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn finish<T: Serialize>(
    format: Format,
    text: String,
    json: &T,
    claim_failed: bool,
) -> Result<Output> {
    let rendered = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(json)? + "\n",
    };
    Ok(Output {
        rendered,
        claim_failed,
    })
}

fn labels(u: &Universe, s: ElementSet) -> Vec<String> {
    u.labels_of(s)
}

fn parse_set(u: &Universe, spec: &str) -> Result<ElementSet> {
    let parts = spec.split(',').map(str::trim).filter(|s| !s.is_empty());
    Ok(u.set_of(parts)?)
}

#[derive(Serialize)]
struct ProbeJson {
    holds: bool,
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct RelCheckJson {
    universe: Vec<String>,
    pairs: usize,
    symmetric: bool,
    transitive: bool,
    reflexive: bool,
    symmetric_and_transitive: bool,
    violation: Option<String>,
    not_reflexive_at: Option<String>,
    operator_probes: Option<[ProbeJson; 2]>,
}

fn rel_check(rel: &Relation, format: Format) -> Result<Output> {
    let u = rel.universe();
    let p = rel.check_properties();
    let per = p.symmetric && p.transitive;
    let violation = p.violation(u).map(|v| v.to_string());
    let not_reflexive_at = p.reflexivity_witness.map(|x| u.label(x).to_string());

    let mut text = String::new();
    writeln!(text, "universe: {}", render::set(u, u.full()))?;
    writeln!(text, "pairs: {}", rel.len())?;
    writeln!(text, "symmetric: {}", render::yes_no(p.symmetric))?;
    writeln!(text, "transitive: {}", render::yes_no(p.transitive))?;
    match &not_reflexive_at {
        None => writeln!(text, "reflexive: yes")?,
        Some(x) => writeln!(text, "reflexive: no ({x} is not related to itself)")?,
    }
    writeln!(text, "symmetric and transitive: {}", render::yes_no(per))?;
    if let Some(v) = &violation {
        writeln!(text, "violation: {v}")?;
    }

    let operator_probes = if u.len() <= ENUMERATION_CAP {
        let probes = [Property::Symmetric, Property::Transitive].map(|prop| {
            let r = probe_property(rel, prop).expect("universe within enumeration cap");
            match r.witness {
                None => writeln!(text, "operator probe, {}: holds", prop.name()),
                Some(w) => writeln!(
                    text,
                    "operator probe, {}: fails at X = {}",
                    prop.name(),
                    render::set(u, w)
                ),
            }
            .expect("writing to a String");
            ProbeJson {
                holds: r.holds,
                witness: r.witness.map(|w| labels(u, w)),
            }
        });
        Some(probes)
    } else {
        writeln!(
            text,
            "operator probes: skipped, universe exceeds {ENUMERATION_CAP} elements"
        )?;
        None
    };

    let json = RelCheckJson {
        universe: u.labels().to_vec(),
        pairs: rel.len(),
        symmetric: p.symmetric,
        transitive: p.transitive,
        reflexive: p.reflexive,
        symmetric_and_transitive: per,
        violation,
        not_reflexive_at,
        operator_probes,
    };
    finish(format, text, &json, !per)
}

#[derive(Serialize)]
struct Neighborhood {
    element: String,
    successors: Vec<String>,
}

#[derive(Serialize)]
struct ClassesJson {
    neighborhoods: Vec<Neighborhood>,
    classes: Vec<Vec<String>>,
    isolated: Vec<String>,
}

fn classes(rel: &Relation, format: Format) -> Result<Output> {
    let u = rel.universe();
    let c = rel.classes()?;
    let mut text = String::new();
    for x in 0..u.len() {
        writeln!(
            text,
            "r({}) = {}",
            u.label(x),
            render::set(u, rel.successors(x))
        )?;
    }
    if c.blocks.is_empty() {
        writeln!(text, "classes: none")?;
    } else {
        writeln!(text, "classes: {}", render::sets(u, &c.blocks))?;
    }
    writeln!(text, "isolated: {}", render::set(u, c.isolated))?;
    let json = ClassesJson {
        neighborhoods: (0..u.len())
            .map(|x| Neighborhood {
                element: u.label(x).to_string(),
                successors: labels(u, rel.successors(x)),
            })
            .collect(),
        classes: c.blocks.iter().map(|b| labels(u, *b)).collect(),
        isolated: labels(u, c.isolated),
    };
    finish(format, text, &json, false)
}

#[derive(Serialize)]
struct ApproxJson {
    lower: Vec<String>,
    upper: Vec<String>,
    alpha: Option<String>,
    rho: Option<String>,
    precise: bool,
}

impl ApproxJson {
    fn new(u: &Universe, r: &ApproxReport) -> Self {
        ApproxJson {
            lower: labels(u, r.lower),
            upper: labels(u, r.upper),
            alpha: render::ratio_json(r.alpha),
            rho: render::ratio_json(r.rho),
            precise: r.precise,
        }
    }
}

#[derive(Serialize)]
struct BothJson {
    def5: ApproxJson,
    circuit: ApproxJson,
    agree: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diff: Vec<String>,
}

fn approx_lines(u: &Universe, r: &ApproxReport, indent: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{indent}lower = {}", render::set(u, r.lower));
    let _ = writeln!(s, "{indent}upper = {}", render::set(u, r.upper));
    let _ = writeln!(s, "{indent}alpha = {}", render::ratio(r.alpha));
    let _ = writeln!(s, "{indent}rho = {}", render::ratio(r.rho));
    let _ = writeln!(s, "{indent}precise: {}", render::yes_no(r.precise));
    s
}

fn approx_diff(u: &Universe, a: &ApproxReport, b: &ApproxReport) -> Vec<String> {
    let mut diff = Vec::new();
    if a.lower != b.lower {
        diff.push(format!(
            "lower: def5 {} vs circuit {}",
            render::set(u, a.lower),
            render::set(u, b.lower)
        ));
    }
    if a.upper != b.upper {
        diff.push(format!(
            "upper: def5 {} vs circuit {}",
            render::set(u, a.upper),
            render::set(u, b.upper)
        ));
    }
    diff
}

fn approx(rel: &Relation, spec: &str, method: Method, format: Format) -> Result<Output> {
    let u = rel.universe();
    let x = parse_set(u, spec)?;
    let header = format!("X = {}\n", render::set(u, x));
    match method {
        Method::Def5 => {
            let r = approx_report(rel, x)?;
            finish(
                format,
                header + &approx_lines(u, &r, ""),
                &ApproxJson::new(u, &r),
                false,
            )
        }
        Method::Circuit => {
            let r = circuit_approx(&induced_matroid(rel)?, x)?;
            finish(
                format,
                header + &approx_lines(u, &r, ""),
                &ApproxJson::new(u, &r),
                false,
            )
        }
        Method::Both => {
            let d = approx_report(rel, x)?;
            let c = circuit_approx(&induced_matroid(rel)?, x)?;
            let diff = approx_diff(u, &d, &c);
            let agree = diff.is_empty();
            let mut text = header;
            text += "def5:\n";
            text += &approx_lines(u, &d, "  ");
            text += "circuit:\n";
            text += &approx_lines(u, &c, "  ");
            writeln!(text, "methods agree: {}", render::yes_no(agree))?;
            for line in &diff {
                writeln!(text, "  {line}")?;
            }
            let json = BothJson {
                def5: ApproxJson::new(u, &d),
                circuit: ApproxJson::new(u, &c),
                agree,
                diff,
            };
            finish(format, text, &json, !agree)
        }
    }
}

#[derive(Serialize)]
struct InduceJson {
    circuits: Vec<Vec<String>>,
    independents: Vec<Vec<String>>,
    normal: bool,
}

fn induce(rel: &Relation, format: Format) -> Result<Output> {
    let ind = induced_matroid(rel)?;
    let independents = ind.independents()?;
    let normal = ind.matroid().is_normal();
    let mut text = String::new();
    writeln!(text, "circuits: {}", render::family(ind.circuits()))?;
    writeln!(text, "independents: {}", render::family(&independents))?;
    writeln!(text, "normal: {}", render::yes_no(normal))?;
    let json = InduceJson {
        circuits: ind.circuits().to_labels(),
        independents: independents.to_labels(),
        normal,
    };
    finish(format, text, &json, false)
}

#[derive(Serialize)]
struct MatroidCheckJson {
    family: &'static str,
    sets: usize,
    valid: bool,
    failed_axiom: Option<&'static str>,
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    circuits: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    independents: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal: Option<bool>,
}

fn matroid_check(path: &Path, format: Format) -> Result<Output> {
    let file = parse_matroid_file(&read(path)?).with_context(|| format!("{}", path.display()))?;
    let (kind, family) = file
        .to_family()
        .with_context(|| format!("{}", path.display()))?;
    let u = family.universe().clone();
    let (kind_name, report) = match kind {
        FamilyKind::Independents => ("independents", check_independence_axioms(&family)?),
        FamilyKind::Circuits => ("circuits", check_circuit_axioms(&family)?),
    };

    let mut text = String::new();
    writeln!(text, "family: {kind_name}, {} sets", family.len())?;
    let mut json = MatroidCheckJson {
        family: kind_name,
        sets: family.len(),
        valid: report.valid,
        failed_axiom: report.failed_axiom.map(|a| a.name()),
        witness: (!report.valid).then(|| report.describe(&u)),
        circuits: None,
        independents: None,
        normal: None,
    };
    if report.valid {
        let axioms = match kind {
            FamilyKind::Independents => "I1, I2, I3",
            FamilyKind::Circuits => "C1, C2, C3",
        };
        writeln!(text, "axioms: valid ({axioms})")?;
        let m = match kind {
            FamilyKind::Independents => Matroid::from_independents(family)?,
            FamilyKind::Circuits => Matroid::from_circuits(&u, family)?,
        };
        let circuits = m.circuits();
        let independents = m.independents()?;
        writeln!(text, "circuits: {}", render::family(&circuits))?;
        writeln!(text, "independents: {}", render::family(&independents))?;
        writeln!(text, "normal: {}", render::yes_no(m.is_normal()))?;
        json.circuits = Some(circuits.to_labels());
        json.independents = Some(independents.to_labels());
        json.normal = Some(m.is_normal());
    } else {
        writeln!(text, "axioms: invalid; {}", report.describe(&u))?;
    }
    finish(format, text, &json, !report.valid)
}

#[derive(Serialize)]
struct CircuitsJson {
    circuits: Vec<Vec<String>>,
}

fn circuits(m: &Matroid, format: Format) -> Result<Output> {
    let c = m.circuits();
    let text = format!("circuits: {}\n", render::family(&c));
    finish(
        format,
        text,
        &CircuitsJson {
            circuits: c.to_labels(),
        },
        false,
    )
}

#[derive(Serialize)]
struct IntersectionJson {
    independents: Vec<Vec<String>>,
    is_independence_family: bool,
    witness: Option<String>,
}

#[derive(Serialize)]
struct UnionJson {
    independents: Vec<Vec<String>>,
    power_set: bool,
    circuits: Vec<Vec<String>>,
    induced_relation: RelationFile,
    off_diagonal_pairs: usize,
    intersection: IntersectionJson,
}

fn off_diagonal(rel: &Relation) -> usize {
    rel.pairs().filter(|(x, y)| x != y).count()
}

fn union_cmd(m1: &Matroid, m2: &Matroid, format: Format) -> Result<Output> {
    let sum = union(m1, m2)?;
    let u = sum.universe().clone();
    let independents = sum.independents()?;
    let power_set = independents.len() == 1usize << u.len();
    let circuits = sum.circuits();
    let induced = induced_relation(&sum)?;
    let off = off_diagonal(&induced);
    let meet: SetFamily = m1.independents()?.intersection(&m2.independents()?)?;
    let probe = family_intersection_probe(m1, m2)?;

    let mut text = String::new();
    writeln!(
        text,
        "union independents: {}",
        render::family(&independents)
    )?;
    writeln!(text, "power set: {}", render::yes_no(power_set))?;
    writeln!(text, "union circuits: {}", render::family(&circuits))?;
    writeln!(text, "induced relation: {}", render::relation(&induced))?;
    writeln!(text, "off-diagonal pairs: {off}")?;
    writeln!(text, "intersection of families: {}", render::family(&meet))?;
    if probe.valid {
        writeln!(text, "intersection is an independence family: yes")?;
    } else {
        writeln!(
            text,
            "intersection is an independence family: no; {}",
            probe.describe(&u)
        )?;
    }

    let json = UnionJson {
        independents: independents.to_labels(),
        power_set,
        circuits: circuits.to_labels(),
        induced_relation: RelationFile::from_relation(&induced),
        off_diagonal_pairs: off,
        intersection: IntersectionJson {
            independents: meet.to_labels(),
            is_independence_family: probe.valid,
            witness: (!probe.valid).then(|| probe.describe(&u)),
        },
    };
    finish(format, text, &json, false)
}

fn induce_rel(m: &Matroid, format: Format) -> Result<Output> {
    let rel = induced_relation(m)?;
    let u = rel.universe();
    let c = rel.classes()?;
    let mut text = String::new();
    writeln!(text, "R(M) = {}", render::relation(&rel))?;
    if c.blocks.is_empty() {
        writeln!(text, "classes: none")?;
    } else {
        writeln!(text, "classes: {}", render::sets(u, &c.blocks))?;
    }
    finish(format, text, &RelationFile::from_relation(&rel), false)
}

#[derive(Serialize)]
struct RoundTripJson {
    expected: RelationFile,
    regenerated: RelationFile,
    added: Vec<(String, String)>,
    holds: bool,
}

fn roundtrip(rel: &Relation, format: Format) -> Result<Output> {
    let rt = round_trip(rel)?;
    let u = rel.universe();
    let added = rt.added(rel);
    let holds = rt.holds();
    let mut text = String::new();
    writeln!(text, "R ∪ Δ = {}", render::relation(&rt.expected))?;
    writeln!(text, "R(M(R)) = {}", render::relation(&rt.regenerated))?;
    writeln!(text, "added to R: {}", render::pairs(u, &added))?;
    writeln!(text, "holds: {}", render::yes_no(holds))?;
    let json = RoundTripJson {
        expected: RelationFile::from_relation(&rt.expected),
        regenerated: RelationFile::from_relation(&rt.regenerated),
        added: added
            .iter()
            .map(|&(x, y)| (u.label(x).to_string(), u.label(y).to_string()))
            .collect(),
        holds,
    };
    finish(format, text, &json, !holds)
}

fn verify_cmd(suite: &str, n: usize, seed: Option<u64>, format: Format) -> Result<Output> {
    if n > VERIFY_MAX_N {
        bail!("--n {n} exceeds the exhaustive grid limit of {VERIFY_MAX_N}");
    }
    if n > VERIFY_DEFAULT_N {
        eprintln!("warning: exhaustive grid up to n = {n}; pair-based suites may take a while");
    }
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(anyhow::Error::msg)?]
    };
    let grid = Grid {
        max_n: n,
        random: seed.map(|seed| RandomGrid {
            seed,
            n: RANDOM_N,
            relations: RANDOM_RELATIONS,
            queries_per_relation: RANDOM_QUERIES,
        }),
    };
    let reports = verify_all(&suites, &grid, Strategy::default())?;
    let failed = reports.iter().any(|r| !r.holds);

    let mut text = String::new();
    for r in &reports {
        if r.holds {
            writeln!(
                text,
                "{} holds ({} instances): {}",
                r.proposition.name(),
                r.instances_checked,
                r.claim
            )?;
        } else {
            writeln!(
                text,
                "{} FAILS ({} of {} instances): {}",
                r.proposition.name(),
                r.failures,
                r.instances_checked,
                r.claim
            )?;
            if let Some(cx) = &r.counterexample {
                writeln!(text, "  observed: {}", cx.observed)?;
                for rel in &cx.relations {
                    writeln!(text, "  relation: {}", serde_json::to_string(rel)?)?;
                }
                for m in &cx.matroids {
                    writeln!(text, "  matroid: {}", serde_json::to_string(m)?)?;
                }
                if let Some(q) = &cx.query {
                    writeln!(text, "  query: {}", serde_json::to_string(q)?)?;
                }
            }
        }
    }
    finish(format, text, &reports, failed)
}
