//! Verification suites, one per acceptance property, runnable by name.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use typecount_core::archweyl::{
    cc_degree_scan, dominant_box, regular_bound, schur_at_ones, schur_trace, unit, weyl_dim,
    weyl_polynomial, Weight,
};
use typecount_core::field::Gf;
use typecount_core::globalbound::{
    c1, lower_bound, positivity_scan, ErrorTerm, GlobalConfig, TypeDescriptor,
};
use typecount_core::greenchar::{cuspidal_table, inner_product, trivial_character, CuspidalTable};
use typecount_core::localring::{make_ring, RingKind};
use typecount_core::matrix::{self, OMatrix};
use typecount_core::mpoly::{MPoly, Rational};
use typecount_core::poly;
use typecount_core::projcensus::{census, census_formula, Model};
use typecount_core::simpletypes::{make_minimal_unram, theta_pairing, theta_pairing_with, Extension};
use typecount_core::towerfield::make_tower;
use typecount_core::util::cuspidal_degree;
use typecount_core::Error;

use crate::report::Table;
use crate::{CliError, CliResult};

pub const SUITES: [&str; 10] = [
    "green-orthogonality",
    "green-dimension",
    "elliptic-bound",
    "split-vanishing",
    "census-oracle",
    "pairing",
    "weyl-schur",
    "regular-bound",
    "degree-scan",
    "global",
];

/// Grids for the finite-group checks.
pub const GREEN_GRID: [(u64, u32); 6] = [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)];

/// Relative tolerance for floating comparisons.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &'static str, pass: bool, detail: String) -> SuiteOutcome {
    SuiteOutcome { name, pass, detail }
}

pub fn run_suite(name: &str, budget: u64) -> CliResult<SuiteOutcome> {
    let name = SUITES
        .iter()
        .find(|s| **s == name)
        .ok_or_else(|| CliError::Usage(format!("unknown suite '{name}'")))?;
    match *name {
        "green-orthogonality" => green_orthogonality(budget),
        "green-dimension" => green_dimension(budget),
        "elliptic-bound" => elliptic_bound(budget),
        "split-vanishing" => split_vanishing(budget),
        "census-oracle" => census_oracle(budget),
        "pairing" => pairing(),
        "weyl-schur" => weyl_schur(),
        "regular-bound" => regular_bound_suite(),
        "degree-scan" => degree_scan(),
        "global" => global(),
        _ => unreachable!(),
    }
}

/// Runs `name` (or every suite for `all`) and tabulates the outcomes.
pub fn verify(name: &str, budget: u64) -> CliResult<(Table, bool)> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else {
        vec![name]
    };
    let mut t = Table::new(["suite", "status", "detail"]);
    let mut all = true;
    for n in names {
        let o = run_suite(n, budget)?;
        all &= o.pass;
        t.push([o.name, if o.pass { "pass" } else { "FAIL" }, &o.detail]);
    }
    Ok((t, all))
}

fn green_tables(budget: u64) -> CliResult<Vec<CuspidalTable>> {
    GREEN_GRID
        .par_iter()
        .map(|&(q, n)| Ok(cuspidal_table(&make_tower(q, n)?, budget)?))
        .collect()
}

fn green_orthogonality(budget: u64) -> CliResult<SuiteOutcome> {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for table in green_tables(budget)? {
        let triv = trivial_character(&table.tower, &table.classes);
        let cols: Vec<_> = (0..table.orbits.len()).map(|i| table.column(i)).collect();
        for (i, a) in cols.iter().enumerate() {
            checked += 1;
            if !inner_product(a, &triv, &table.classes).is_integer(0) {
                failures.push(format!("q={} n={} orbit {i} vs trivial", table.tower.q(), table.tower.n()));
            }
            for (j, b) in cols.iter().enumerate().skip(i) {
                checked += 1;
                if !inner_product(a, b, &table.classes).is_integer(i64::from(i == j)) {
                    failures.push(format!("q={} n={} orbits {i},{j}", table.tower.q(), table.tower.n()));
                }
            }
        }
    }
    Ok(outcome(
        "green-orthogonality",
        failures.is_empty(),
        format!("{checked} exact inner products; failures: [{}]", failures.join("; ")),
    ))
}

fn green_dimension(budget: u64) -> CliResult<SuiteOutcome> {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for table in green_tables(budget)? {
        let (q, n) = (table.tower.q(), table.tower.n());
        let ident = matrix::identity(table.tower.base().as_ref(), n as usize);
        let id = table
            .classes
            .iter()
            .position(|c| c.rep == ident)
            .expect("identity class");
        let want = cuspidal_degree(q, n) as i64;
        for v in &table.values[id] {
            checked += 1;
            if v.as_integer() != Some(want) {
                failures.push(format!("q={q} n={n}: {}", v.render()));
            }
        }
    }
    Ok(outcome(
        "green-dimension",
        failures.is_empty(),
        format!("{checked} identity values; failures: [{}]", failures.join("; ")),
    ))
}

/// Tallies of the depth-zero sweep shared by the three census suites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub matrices: u64,
    pub irreducible_checked: u64,
    pub irreducible_failures: Vec<String>,
    pub split_checked: u64,
    pub split_failures: Vec<String>,
    pub oracle_compared: u64,
    pub oracle_every_point: u64,
    pub oracle_uncovered: u64,
    pub oracle_failures: Vec<String>,
}

impl SweepStats {
    fn merge(mut self, other: SweepStats) -> SweepStats {
        self.matrices += other.matrices;
        self.irreducible_checked += other.irreducible_checked;
        self.irreducible_failures.extend(other.irreducible_failures);
        self.split_checked += other.split_checked;
        self.split_failures.extend(other.split_failures);
        self.oracle_compared += other.oracle_compared;
        self.oracle_every_point += other.oracle_every_point;
        self.oracle_uncovered += other.oracle_uncovered;
        self.oracle_failures.extend(other.oracle_failures);
        self
    }
}

/// Per residue characteristic polynomial: the largest `|tau(g)|` over
/// cuspidal characters and whether all of them vanish.
struct GreenSummary {
    by_charpoly: BTreeMap<Vec<u32>, (f64, bool)>,
}

fn green_summary(q: u64, n: u32, budget: u64) -> CliResult<GreenSummary> {
    let table = cuspidal_table(&make_tower(q, n)?, budget)?;
    let mut by_charpoly: BTreeMap<Vec<u32>, (f64, bool)> = BTreeMap::new();
    for (c, vals) in table.classes.iter().zip(&table.values) {
        let max = vals.iter().map(|v| v.abs()).fold(0.0, f64::max);
        let zero = vals.iter().all(|v| v.is_zero());
        let e = by_charpoly.entry(c.charpoly.clone()).or_insert((0.0, true));
        e.0 = e.0.max(max);
        e.1 &= zero;
    }
    Ok(GreenSummary { by_charpoly })
}

const SAMPLED_N3: usize = 600;

/// The test matrices: all of `GL_2(F_q[t]/t^L)` for `q in {2, 3}`,
/// `L in {1, 2}`, all of `GL_3(F_2)`, and a seeded sample of
/// `GL_3(F_2[t]/t^2)`. Central matrices are dropped.
fn sweep_inputs() -> CliResult<Vec<OMatrix>> {
    let mut out = Vec::new();
    for q in [2u64, 3] {
        for level in [1usize, 2] {
            let ring = make_ring(RingKind::Base, q, 1, level)?;
            out.extend(matrix::gl_elements(&ring, 2).filter(|g| !g.is_central()));
        }
    }
    let r1 = make_ring(RingKind::Base, 2, 1, 1)?;
    out.extend(matrix::gl_elements(&r1, 3).filter(|g| !g.is_central()));
    let r2 = make_ring(RingKind::Base, 2, 1, 2)?;
    let total = r2.size().pow(9);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7c3);
    let mut taken = 0;
    while taken < SAMPLED_N3 {
        let g = OMatrix::from_index(&r2, 3, rng.gen_range(0..total));
        if g.is_invertible() && !g.is_central() {
            out.push(g);
            taken += 1;
        }
    }
    Ok(out)
}

fn sweep_one(g: &OMatrix, green: &GreenSummary, budget: u64) -> CliResult<SweepStats> {
    let mut s = SweepStats {
        matrices: 1,
        ..Default::default()
    };
    let n = g.n() as u32;
    let f: Gf = (**g.ring().residue_field()).clone();
    let cp = matrix::charpoly(&f, &g.residue());
    let factors = poly::factor(&f, &cp);
    let irreducible = factors.len() == 1 && factors[0].1 == 1;
    let split = factors.len() >= 2;
    let (gmax, gzero) = green.by_charpoly[&cp];
    let tag = || format!("q={} n={n} {:?}", g.q(), g.mat().data());
    for k in 1..=g.level() {
        for model in [Model::Unramified, Model::Ramified] {
            let brute = match census(g, model, k, budget) {
                Ok(r) => Some(r),
                Err(Error::NotIwahori) => None,
                Err(e) => return Err(e.into()),
            };
            let formula = match census_formula(g, model, k) {
                Ok(r) => Some(r),
                Err(Error::NotIwahori | Error::NonMaximalDecomposition) => None,
                Err(e) => return Err(e.into()),
            };
            match (&brute, &formula) {
                (Some(b), Some(fm)) => {
                    s.oracle_compared += 1;
                    s.oracle_every_point += u64::from(b.flags.every_point_fixed);
                    if b.count != fm.count {
                        s.oracle_failures.push(format!("{} k={k} {model:?}: brute {} formula {}", tag(), b.count, fm.count));
                    }
                }
                _ => s.oracle_uncovered += 1,
            }
            let Some(b) = brute else { continue };
            if irreducible && model == Model::Unramified && k == g.level() {
                s.irreducible_checked += 1;
                if b.count > n as u128 || gmax > n as f64 * (1.0 + FLOAT_TOL) {
                    s.irreducible_failures.push(format!("{} census {} |tau| {gmax}", tag(), b.count));
                }
            }
            if split && k == g.level() {
                s.split_checked += 1;
                if b.count != 0 || !gzero {
                    s.split_failures.push(format!("{} {model:?} census {}", tag(), b.count));
                }
            }
        }
    }
    Ok(s)
}

static SWEEP: Mutex<Option<SweepStats>> = Mutex::new(None);

/// Runs the sweep once per process.
pub fn sweep(budget: u64) -> CliResult<SweepStats> {
    let mut guard = SWEEP.lock().expect("sweep cache");
    if let Some(s) = guard.as_ref() {
        return Ok(s.clone());
    }
    let mut greens = BTreeMap::new();
    for (q, n) in [(2u64, 2u32), (3, 2), (2, 3)] {
        greens.insert((q, n), green_summary(q, n, budget)?);
    }
    let inputs = sweep_inputs()?;
    let parts: Vec<SweepStats> = inputs
        .par_iter()
        .map(|g| sweep_one(g, &greens[&(g.q(), g.n() as u32)], budget))
        .collect::<CliResult<_>>()?;
    let stats = parts.into_iter().fold(SweepStats::default(), SweepStats::merge);
    *guard = Some(stats.clone());
    Ok(stats)
}

fn first(v: &[String]) -> String {
    v.first().cloned().unwrap_or_default()
}

fn elliptic_bound(budget: u64) -> CliResult<SuiteOutcome> {
    let s = sweep(budget)?;
    Ok(outcome(
        "elliptic-bound",
        s.irreducible_failures.is_empty() && s.irreducible_checked > 0,
        format!(
            "{} elliptic residues checked over {} matrices; {} failures {}",
            s.irreducible_checked,
            s.matrices,
            s.irreducible_failures.len(),
            first(&s.irreducible_failures)
        ),
    ))
}

fn split_vanishing(budget: u64) -> CliResult<SuiteOutcome> {
    let s = sweep(budget)?;
    Ok(outcome(
        "split-vanishing",
        s.split_failures.is_empty() && s.split_checked > 0,
        format!(
            "{} split-residue censuses; {} failures {}",
            s.split_checked,
            s.split_failures.len(),
            first(&s.split_failures)
        ),
    ))
}

fn census_oracle(budget: u64) -> CliResult<SuiteOutcome> {
    let s = sweep(budget)?;
    Ok(outcome(
        "census-oracle",
        s.oracle_failures.is_empty() && s.oracle_every_point > 0,
        format!(
            "{} brute/formula comparisons ({} with every point fixed, {} uncovered); {} mismatches {}",
            s.oracle_compared,
            s.oracle_every_point,
            s.oracle_uncovered,
            s.oracle_failures.len(),
            first(&s.oracle_failures)
        ),
    ))
}

fn pairing() -> CliResult<SuiteOutcome> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for q in [2u64, 3] {
        for n in [2u32, 3] {
            for m in [2usize, 4] {
                checked += 1;
                let d = make_minimal_unram(q, n, m)?;
                let p = theta_pairing(&d)?;
                let mut ok = p.rank == (n * n - n) as usize && p.is_alternating(d.residue_field());
                for c in d.residue_field().units() {
                    let tw = theta_pairing_with(&d, Extension::DetTwist(c))?;
                    ok &= tw.gram == p.gram && tw.values == p.values;
                }
                if !ok {
                    failures.push(format!("q={q} n={n} m={m} rank {}", p.rank));
                }
            }
        }
    }
    Ok(outcome(
        "pairing",
        failures.is_empty(),
        format!("{checked} unramified data; failures: [{}]", failures.join("; ")),
    ))
}

fn weyl_schur() -> CliResult<SuiteOutcome> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        for base in [-3i64, 0, 2] {
            for w in dominant_box(n, 6, base) {
                checked += 1;
                let exact = schur_at_ones(&w)?;
                let dim = weyl_dim(&w)? as i128;
                if exact != dim {
                    failures.push(format!("{:?}: {exact} vs {dim}", w.0));
                }
            }
        }
    }
    for n in 1..=5usize {
        let deg = weyl_polynomial(n).degree();
        if deg != Some((n * n - n) as u32 / 2) {
            failures.push(format!("n={n}: degree {deg:?}"));
        }
    }
    Ok(outcome(
        "weyl-schur",
        failures.is_empty(),
        format!("{checked} weights at the identity, degrees for n<=5; failures: [{}]", failures.join("; ")),
    ))
}

pub const REGULAR_SPECTRA: usize = 100;
pub const REGULAR_GAP: u64 = 30;

fn regular_bound_suite() -> CliResult<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let spectra: Vec<Vec<Complex64>> = (0..REGULAR_SPECTRA)
        .map(|i| {
            let n = 2 + i % 2;
            (0..n).map(|_| unit(rng.gen::<f64>())).collect()
        })
        .collect();
    let results: Vec<(f64, usize)> = spectra
        .par_iter()
        .map(|x| {
            let bound = regular_bound(x)?;
            let mut worst = 0.0f64;
            let mut bad = 0;
            for w in dominant_box(x.len(), REGULAR_GAP, 0) {
                let s = schur_trace(&w, x)?.norm();
                worst = worst.max(s / bound);
                if s > bound * (1.0 + FLOAT_TOL) + FLOAT_TOL {
                    bad += 1;
                }
            }
            Ok((worst, bad))
        })
        .collect::<Result<_, Error>>()?;
    let worst = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let bad: usize = results.iter().map(|r| r.1).sum();
    Ok(outcome(
        "regular-bound",
        bad == 0,
        format!("{REGULAR_SPECTRA} spectra, gaps <= {REGULAR_GAP}; max |s|/bound = {worst:.6}; {bad} violations"),
    ))
}

pub const SCAN_BOX: u64 = 20;

fn degree_scan() -> CliResult<SuiteOutcome> {
    let one = Complex64::new(1.0, 0.0);
    let scan = cc_degree_scan(&[one, one, -one], SCAN_BOX)?;
    let pass = scan.pass && scan.exponent <= 2.5;
    let pair = cc_degree_scan(&[one, -one], 50)?;
    let decays = pair.points.last().map(|p| p.max_ratio).unwrap_or(1.0) < 0.05;
    Ok(outcome(
        "degree-scan",
        pass && decays,
        format!(
            "x=(1,1,-1) B={SCAN_BOX}: exponent {:.4} vs Weyl degree {}; x=(1,-1): final ratio {:.4}",
            scan.exponent,
            scan.weyl_degree,
            pair.points.last().map(|p| p.max_ratio).unwrap_or(0.0)
        ),
    ))
}

/// A configuration with hand-computed `c1` and lower bound.
pub struct GlobalFixture {
    pub cfg: GlobalConfig,
    pub desc: TypeDescriptor,
    pub err: ErrorTerm,
    pub c1: BigRational,
    pub bound: BigRational,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn mpoly(n: usize, terms: &[(i128, &[u32])]) -> MPoly {
    let t: Vec<(Rational, Vec<u32>)> = terms
        .iter()
        .map(|(c, e)| (Rational::from_integer(*c), e.to_vec()))
        .collect();
    MPoly::from_terms(n, &t).expect("fixture polynomial")
}

pub fn global_fixtures() -> Vec<GlobalFixture> {
    let one2 = mpoly(2, &[(1, &[0, 0])]);
    let one3 = mpoly(3, &[(1, &[0, 0, 0])]);
    let gap3 = mpoly(3, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1]), (1, &[0, 0, 0])]);
    let w = |v: &[i64]| Weight(v.to_vec());
    vec![
        GlobalFixture {
            cfg: GlobalConfig { n: 2, mu_e: 2, masses: vec![2] },
            desc: TypeDescriptor { finite: vec![], arch: vec![w(&[0, 0])] },
            err: ErrorTerm { c2: rat(0, 1), p_v: vec![one2.clone()] },
            c1: rat(1, 1),
            bound: rat(1, 1),
        },
        GlobalFixture {
            cfg: GlobalConfig { n: 2, mu_e: 2, masses: vec![2, 4] },
            desc: TypeDescriptor { finite: vec![(3, 2)], arch: vec![w(&[1, 0])] },
            err: ErrorTerm { c2: rat(1, 1), p_v: vec![one2.clone()] },
            c1: rat(3, 2),
            bound: rat(4, 1),
        },
        GlobalFixture {
            cfg: GlobalConfig { n: 3, mu_e: 6, masses: vec![6, 12, 18] },
            desc: TypeDescriptor { finite: vec![(2, 3)], arch: vec![w(&[2, 1, 0])] },
            err: ErrorTerm { c2: rat(1, 2), p_v: vec![gap3] },
            c1: rat(11, 6),
            bound: rat(79, 2),
        },
        GlobalFixture {
            cfg: GlobalConfig { n: 2, mu_e: 4, masses: vec![8, 8, 12] },
            desc: TypeDescriptor {
                finite: vec![(5, 4), (3, 6)],
                arch: vec![w(&[3, 0]), w(&[1, 1])],
            },
            err: ErrorTerm { c2: rat(2, 1), p_v: vec![one2.clone(), one2] },
            c1: rat(4, 3),
            bound: rat(120, 1),
        },
        GlobalFixture {
            cfg: GlobalConfig { n: 3, mu_e: 2, masses: vec![4] },
            desc: TypeDescriptor { finite: vec![], arch: vec![w(&[0, 0, 0])] },
            err: ErrorTerm { c2: rat(3, 1), p_v: vec![one3] },
            c1: rat(1, 2),
            bound: rat(-5, 2),
        },
    ]
}

pub const GLOBAL_BOX: u64 = 8;

fn global() -> CliResult<SuiteOutcome> {
    let mut failures = Vec::new();
    let mut exceptional = Vec::new();
    for (i, f) in global_fixtures().iter().enumerate() {
        if c1(&f.cfg)? != f.c1 {
            failures.push(format!("fixture {i}: c1"));
        }
        if lower_bound(&f.cfg, &f.desc, &f.err)? != f.bound {
            failures.push(format!("fixture {i}: bound"));
        }
        let places: Vec<u64> = f.desc.finite.iter().map(|p| p.0).collect();
        let scan = positivity_scan(&f.cfg, &f.err, &places, GLOBAL_BOX)?;
        if !scan.stable {
            failures.push(format!("fixture {i}: exceptional set grows with the box"));
        }
        exceptional.push(scan.exceptional.len().to_string());
    }
    Ok(outcome(
        "global",
        failures.is_empty(),
        format!(
            "5 fixtures; exceptional set sizes [{}] at box {GLOBAL_BOX}; failures: [{}]",
            exceptional.join(","),
            failures.join("; ")
        ),
    ))
}
