//! One function per subcommand, each producing a report table.

use num_complex::Complex64;
use num_rational::BigRational;
use typecount_core::archweyl::{
    cc_degree_scan, dominant_box, regular_bound, schur_trace, weyl_dim, weyl_polynomial, Weight,
};
use typecount_core::globalbound::{
    c1, lower_bound, positivity_scan, type_dimension, TypeDescriptor,
};
use typecount_core::greenchar::cuspidal_table;
use typecount_core::matrix::OMatrix;
use typecount_core::projcensus::{census_formula, CensusReport, CosetModel, Model, Route};
use typecount_core::simpletypes::{
    make_minimal_ram, make_minimal_unram, theta_pairing, theta_pairing_with, type_trace_bound,
    Extension, TypeDatum,
};
use typecount_core::towerfield::make_tower;

use crate::config::GlobalInput;
use crate::parallel;
use crate::parse::parse_matrix;
use crate::report::{float, Table};
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelArg {
    Unram,
    Ram,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Unram => Model::Unramified,
            ModelArg::Ram => Model::Ramified,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RouteArg {
    /// Brute force when within budget, otherwise the closed formula.
    Auto,
    Brute,
    Formula,
    /// Both routes; fails if they disagree.
    Both,
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Unramified => "unram",
        Model::Ramified => "ram",
    }
}

fn census_row(t: &mut Table, r: &CensusReport) {
    t.push([
        model_name(r.model).to_string(),
        r.q.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        match r.route {
            Route::Brute => "brute",
            Route::Formula => "formula",
        }
        .to_string(),
        r.count.to_string(),
        r.flags.hensel_fallback.to_string(),
        r.flags.every_point_fixed.to_string(),
    ]);
}

pub fn census(
    model: ModelArg,
    q: u64,
    n: u32,
    k: usize,
    matrix: &str,
    route: RouteArg,
    budget: u64,
) -> CliResult<Table> {
    let model: Model = model.into();
    let cm = CosetModel::new(model, q, n, k)?;
    let g = parse_matrix(matrix, q, n as usize, cm.required_matrix_level())?;
    let mut t = Table::new([
        "model",
        "q",
        "n",
        "k",
        "route",
        "count",
        "hensel_fallback",
        "every_point_fixed",
    ]);
    let route = match route {
        RouteArg::Auto if cm.census_cost() <= budget as u128 => RouteArg::Brute,
        RouteArg::Auto => RouteArg::Formula,
        r => r,
    };
    match route {
        RouteArg::Brute => census_row(&mut t, &parallel::census(&g, model, k, budget)?),
        RouteArg::Formula => census_row(&mut t, &census_formula(&g, model, k)?),
        RouteArg::Both => {
            let b = parallel::census(&g, model, k, budget)?;
            let f = census_formula(&g, model, k)?;
            if b.count != f.count {
                return Err(CliError::Usage(format!(
                    "brute count {} differs from formula count {}",
                    b.count, f.count
                )));
            }
            census_row(&mut t, &b);
            census_row(&mut t, &f);
        }
        RouteArg::Auto => unreachable!(),
    }
    Ok(t)
}

fn join_codes(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Cuspidal character table: one row per conjugacy class, two columns
/// (exact value, modulus) per Frobenius orbit of regular characters.
pub fn green(q: u64, n: u32, budget: u64) -> CliResult<Table> {
    let tower = make_tower(q, n)?;
    let table = cuspidal_table(&tower, budget)?;
    let mut headers: Vec<String> = ["class", "size", "charpoly", "d", "r"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for k in &table.orbits {
        headers.push(format!("tau[{}]", k.0));
        headers.push(format!("|tau[{}]|", k.0));
    }
    let mut t = Table::new(headers);
    for (i, (c, vals)) in table.classes.iter().zip(&table.values).enumerate() {
        let mut row = vec![
            i.to_string(),
            c.size.to_string(),
            join_codes(&c.charpoly),
            c.d.map(|d| d.to_string()).unwrap_or_default(),
            c.r.map(|r| r.to_string()).unwrap_or_default(),
        ];
        for v in vals {
            row.push(v.render());
            row.push(float(v.abs()));
        }
        t.push(row);
    }
    Ok(t)
}

pub fn datum(model: ModelArg, q: u64, n: u32, m: usize) -> CliResult<TypeDatum> {
    Ok(match model {
        ModelArg::Unram => make_minimal_unram(q, n, m)?,
        ModelArg::Ram => make_minimal_ram(q, n, m)?,
    })
}

/// Gram matrix of `h_theta` on `W` plus a one-line summary.
pub fn pairing(model: ModelArg, q: u64, n: u32, m: usize) -> CliResult<(Table, String)> {
    let d = datum(model, q, n, m)?;
    let p = theta_pairing(&d)?;
    let independent = d
        .residue_field()
        .units()
        .map(|c| theta_pairing_with(&d, Extension::DetTwist(c)))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|tw| tw.gram == p.gram && tw.values == p.values);
    let mut t = Table::new(["i", "j", "b", "theta"]);
    for (i, (row, vals)) in p.gram.iter().zip(&p.values).enumerate() {
        for (j, (b, v)) in row.iter().zip(vals).enumerate() {
            t.push([i.to_string(), j.to_string(), b.to_string(), v.render()]);
        }
    }
    let summary = format!(
        "dim={} rank={} alternating={} extension_independent={}",
        p.basis.len(),
        p.rank,
        p.is_alternating(d.residue_field()),
        independent
    );
    Ok((t, summary))
}

pub fn bound(model: ModelArg, q: u64, n: u32, m: usize, matrix: &str) -> CliResult<Table> {
    let d = datum(model, q, n, m)?;
    let level = CosetModel::new(d.case.model(), q, n, d.k)?.required_matrix_level();
    let g: OMatrix = parse_matrix(matrix, q, n as usize, level)?;
    let tb = type_trace_bound(&g, &d)?;
    let mut t = Table::new([
        "model",
        "q",
        "n",
        "m",
        "k",
        "lambda_dim",
        "census",
        "per_point",
        "cosets",
        "bound",
        "closed_form",
        "within_closed_form",
        "hensel_fallback",
    ]);
    t.push([
        model_name(d.case.model()).to_string(),
        q.to_string(),
        n.to_string(),
        m.to_string(),
        d.k.to_string(),
        d.lambda_dim.to_string(),
        tb.census.to_string(),
        tb.per_point.to_string(),
        tb.cosets.to_string(),
        tb.bound.to_string(),
        tb.closed_form.map(|c| c.to_string()).unwrap_or_default(),
        tb.within_closed_form().to_string(),
        tb.hensel_fallback.to_string(),
    ]);
    Ok(t)
}

fn weight_str(w: &Weight) -> String {
    let parts: Vec<String> = w.0.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Without `weight` or `eigs`: the dimension polynomial. With `weight`: its
/// dimension (and trace at `eigs`). With only `eigs`: a trace scan over
/// weights with `a_n = 0` and gap at most `box_size`, plus a summary.
pub fn weyl(
    n: usize,
    weight: Option<&Weight>,
    eigs: Option<&[Complex64]>,
    box_size: u64,
) -> CliResult<(Table, Option<String>)> {
    if let Some(w) = weight {
        if w.n() != n {
            return Err(CliError::Usage(format!("weight has {} entries, n = {n}", w.n())));
        }
    }
    if let Some(x) = eigs {
        if x.len() != n {
            return Err(CliError::Usage(format!("{} eigenvalues given, n = {n}", x.len())));
        }
    }
    match (weight, eigs) {
        (None, None) => {
            let p = weyl_polynomial(n);
            let mut headers = vec!["coefficient".to_string()];
            headers.extend((1..=n).map(|i| format!("x{i}")));
            let mut t = Table::new(headers);
            for (e, c) in p.terms() {
                let mut row = vec![c.to_string()];
                row.extend(e.iter().map(u32::to_string));
                t.push(row);
            }
            let summary = format!("degree={}", p.degree().unwrap_or(0));
            Ok((t, Some(summary)))
        }
        (Some(w), x) => {
            let mut t = Table::new(["weight", "dimension", "re", "im", "abs"]);
            let dim = weyl_dim(w)?;
            let (re, im, abs) = match x {
                Some(x) => {
                    let s = schur_trace(w, x)?;
                    (float(s.re), float(s.im), float(s.norm()))
                }
                None => Default::default(),
            };
            t.push([weight_str(w), dim.to_string(), re, im, abs]);
            Ok((t, None))
        }
        (None, Some(x)) => {
            let mut t = Table::new(["weight", "dimension", "re", "im", "abs", "ratio"]);
            for w in dominant_box(n, box_size, 0) {
                let s = schur_trace(&w, x)?;
                let dim = weyl_dim(&w)?;
                t.push([
                    weight_str(&w),
                    dim.to_string(),
                    float(s.re),
                    float(s.im),
                    float(s.norm()),
                    float(s.norm() / dim as f64),
                ]);
            }
            let mut summary = Vec::new();
            if let Ok(b) = regular_bound(x) {
                summary.push(format!("regular_bound={}", float(b)));
            }
            match cc_degree_scan(x, box_size) {
                Ok(scan) => summary.push(format!(
                    "exponent={} weyl_degree={} max_ratio={} pass={}",
                    float(scan.exponent),
                    scan.weyl_degree,
                    float(scan.max_ratio),
                    scan.pass
                )),
                Err(e) => summary.push(format!("degree_scan: {e}")),
            }
            Ok((t, Some(summary.join(" "))))
        }
    }
}

fn support_str(desc: &TypeDescriptor) -> String {
    desc.finite
        .iter()
        .map(|(q, d)| format!("q={q}:dim={d}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn arch_str(desc: &TypeDescriptor) -> String {
    desc.arch.iter().map(weight_str).collect::<Vec<_>>().join(";")
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `c1`, bounds for the listed types, and the positivity scan.
pub fn global(input: &GlobalInput, box_override: Option<u64>) -> CliResult<Table> {
    let mut t = Table::new(["kind", "support", "weights", "dimension", "value"]);
    let c = c1(&input.cfg)?;
    t.push(["c1", "", "", "", &rational_str(&c)]);
    for desc in &input.types {
        let lb = lower_bound(&input.cfg, desc, &input.err)?;
        t.push([
            "type".to_string(),
            support_str(desc),
            arch_str(desc),
            type_dimension(desc)?.to_string(),
            rational_str(&lb),
        ]);
    }
    if let Some(b) = box_override.or(input.box_size) {
        let scan = positivity_scan(&input.cfg, &input.err, &input.places, b)?;
        for desc in &scan.exceptional {
            let lb = lower_bound(&input.cfg, desc, &input.err)?;
            t.push([
                "exceptional".to_string(),
                support_str(desc),
                arch_str(desc),
                type_dimension(desc)?.to_string(),
                rational_str(&lb),
            ]);
        }
        for r in &scan.crossovers {
            let support: Vec<String> = r.support.iter().map(|&i| format!("q={}", input.places[i])).collect();
            t.push([
                "crossover".to_string(),
                support.join(";"),
                format!("place={}", r.place),
                String::new(),
                r.s0.map(|s| s.to_string()).unwrap_or_else(|| "none".into()),
            ]);
        }
        t.push([
            "stable".to_string(),
            String::new(),
            format!("box={b}"),
            String::new(),
            scan.stable.to_string(),
        ]);
    }
    Ok(t)
}
