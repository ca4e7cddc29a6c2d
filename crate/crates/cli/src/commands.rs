use std::fmt::Write as _;

use pairflip::catalecticant::{
    check_multi_index, column_multi_indices, det_multiplicity, hankel_matrix, secant_point,
    splitting_type,
};
use pairflip::divisor::{
    certify_log_flip, discrepancy_table, lc_rows, lc_threshold, top_exceptional,
};
use pairflip::stability::{chamber_of, classify_pair, hn_filtration};
use pairflip::tower::tower;
use pairflip::{
    Destabilizer, DiscrepancyRow, Order, PairInvariants, ProjPoint, Rational, RationalSampler,
    SecantWitness, Status,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::{
    Curve, DiscArgs, FlipArgs, HankelAction, HankelArgs, MultiplicityArgs, PairArgs, PointArgs,
    SplitArgs, WallArgs,
};
use crate::table::table;

pub enum Failure {
    /// Malformed input that clap could not catch; exit code 1.
    Usage(String),
    /// The input is well formed but outside the domain of the computation.
    Domain(pairflip::Error),
}

impl From<pairflip::Error> for Failure {
    fn from(e: pairflip::Error) -> Self {
        Failure::Domain(e)
    }
}

pub struct Output {
    pub value: Value,
    pub text: String,
}

type Outcome = Result<Output, Failure>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn dim(d: i64) -> String {
    if d < 0 {
        "empty".into()
    } else {
        d.to_string()
    }
}

pub fn tower_cmd(c: &Curve) -> Outcome {
    let r = tower(c.genus, c.degree)?;
    let mut text = String::new();
    writeln!(
        text,
        "g = {}, d = {}, ambient P^{}",
        r.g, r.d, r.ambient_dim
    )
    .unwrap();
    writeln!(text).unwrap();
    let rows = r
        .spaces
        .iter()
        .map(|s| {
            vec![
                s.index.to_string(),
                format!("({}, {})", s.chamber[0], s.chamber[1]),
                s.label.clone(),
                dim(s.dimension),
            ]
        })
        .collect();
    text.push_str(&table(&["k", "chamber", "space", "dim"], rows));
    if !r.walls.is_empty() {
        writeln!(text).unwrap();
        let rows = r
            .walls
            .iter()
            .map(|w| {
                let codim = |c: Option<i64>| c.map_or("-".to_string(), |c| c.to_string());
                vec![
                    w.c.to_string(),
                    w.n.to_string(),
                    w.locus_dim.to_string(),
                    dim(w.fminus_fiber_dim),
                    dim(w.fplus_fiber_dim),
                    codim(w.fminus_exc_codim(r.ambient_dim)),
                    codim(w.fplus_exc_codim(r.ambient_dim)),
                    if w.divisorial { "yes" } else { "no" }.into(),
                ]
            })
            .collect();
        text.push_str(&table(
            &[
                "c",
                "n",
                "dim C_n",
                "f- fiber",
                "f+ fiber",
                "f- exc codim",
                "f+ exc codim",
                "divisorial",
            ],
            rows,
        ));
    }
    writeln!(text).unwrap();
    let f = &r.final_target;
    writeln!(
        text,
        "final target: {} (dim {}), {}, series {}",
        f.label,
        f.dimension,
        if f.is_contraction {
            "contraction"
        } else {
            "not a contraction"
        },
        f.series
    )
    .unwrap();
    for s in &r.series_labels {
        writeln!(text, "  {}  |{}|", s.map, s.class).unwrap();
    }
    Ok(Output {
        value: to_value(&r),
        text,
    })
}

fn pair(p: &PairArgs) -> Result<PairInvariants, Failure> {
    Ok(PairInvariants::new(p.degree, p.zeros, p.maxsub)?)
}

pub fn classify_cmd(args: &PairArgs) -> Outcome {
    let p = pair(args)?;
    let sigma = &args.sigma;
    let verdict = classify_pair(&p, sigma)?;
    let chamber = chamber_of(sigma, p.d()).ok();
    let hn = match verdict.status {
        Status::Unstable => Some(hn_filtration(&p, sigma)?),
        _ => None,
    };

    let mut text = String::new();
    writeln!(
        text,
        "pair (d, a, b) = ({}, {}, {}) at sigma = {sigma}",
        p.d(),
        p.a(),
        p.b()
    )
    .unwrap();
    writeln!(text, "status: {:?}", verdict.status).unwrap();
    if let Some(w) = &verdict.wall {
        match w {
            pairflip::Wall::Critical { c, n } => writeln!(text, "wall: c = {c}, n = {n}").unwrap(),
            pairflip::Wall::Origin => writeln!(text, "wall: sigma = 0").unwrap(),
        }
    }
    if let Some(dst) = &verdict.destabilizer {
        writeln!(text, "destabilizer: {dst}").unwrap();
    }
    if let Some(jh) = &verdict.jh_graded {
        writeln!(text, "graded: {jh}").unwrap();
    }
    if let Some(ch) = &chamber {
        writeln!(
            text,
            "chamber: ({}, {}), M_sigma = X_{}",
            ch.low, ch.high, ch.index
        )
        .unwrap();
    }
    if let Some(hn) = &hn {
        writeln!(text, "Harder-Narasimhan filtration:").unwrap();
        let rows = hn
            .pieces
            .iter()
            .map(|piece| {
                let t = &piece.invariants;
                vec![
                    piece.label.clone(),
                    format!("({}, {}, {}, {})", t.r1, t.r2, t.d1, t.d2),
                    piece
                        .slope
                        .as_ref()
                        .map_or("-inf".to_string(), Rational::to_string),
                ]
            })
            .collect();
        text.push_str(&table(&["piece", "(r1, r2, d1, d2)", "slope"], rows));
    }
    let value = json!({
        "pair": p,
        "sigma": sigma,
        "verdict": verdict,
        "chamber": chamber,
        "hn_filtration": hn,
    });
    Ok(Output { value, text })
}

pub fn slope_cmd(args: &PairArgs) -> Outcome {
    let p = pair(args)?;
    let sigma = &args.sigma;
    let whole = p.as_triple().mu_sigma(sigma)?;
    let mut tags = vec![
        Destabilizer::SectionLine(p.a()),
        Destabilizer::PlainLine(p.a()),
    ];
    if p.b() != p.a() {
        tags.push(Destabilizer::PlainLine(p.b()));
    }
    tags.push(Destabilizer::FullBundle);

    let mut subs = Vec::new();
    let mut rows = vec![vec![
        "(O, f, E)".to_string(),
        whole.to_string(),
        String::new(),
    ]];
    for tag in tags {
        let mu = p.subobject(tag).mu_sigma(sigma)?;
        let rel = match mu.cmp(&whole) {
            std::cmp::Ordering::Less => "<",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">",
        };
        rows.push(vec![tag.to_string(), mu.to_string(), rel.to_string()]);
        subs.push(json!({ "subobject": tag, "slope": mu, "relation": rel }));
    }
    let mut text = format!("sigma-slopes at sigma = {sigma}\n");
    text.push_str(&table(&["object", "slope", "vs pair"], rows));
    let value = json!({ "pair": p, "sigma": sigma, "pair_slope": whole, "subobjects": subs });
    Ok(Output { value, text })
}

fn rows_table(rows: &[DiscrepancyRow]) -> String {
    let body = rows
        .iter()
        .map(|r| {
            vec![
                format!("E({})", r.j),
                r.codim.to_string(),
                r.mult_f.to_string(),
                r.coeff.to_string(),
                if r.is_log_canonical() { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    table(&["divisor", "codim", "mult F", "coefficient", "lc"], body)
}

pub fn flip_cmd(args: &FlipArgs) -> Outcome {
    let WallArgs { curve, wall } = &args.wall;
    let lambda = match &args.lambda {
        Some(l) => l.clone(),
        None => lc_threshold(curve.genus, curve.degree, *wall)?,
    };
    let cert = certify_log_flip(curve.genus, curve.degree, *wall, &lambda)?;
    let mut text = String::new();
    writeln!(
        text,
        "flip X_{} --> X_{} for g = {}, d = {}, lambda = {}",
        wall - 1,
        wall,
        cert.genus,
        cert.degree,
        cert.lambda
    )
    .unwrap();
    writeln!(text, "B . (K + lambda F)  = {}", cert.b_pairing).unwrap();
    writeln!(text, "B+ . (K + lambda F) = {}", cert.bplus_pairing).unwrap();
    writeln!(text, "threshold           = {}", cert.threshold).unwrap();
    text.push_str(&rows_table(&cert.lc_rows));
    writeln!(text, "log canonical: {}", cert.log_canonical).unwrap();
    writeln!(text, "certified: {}", cert.certified).unwrap();
    Ok(Output {
        value: to_value(&cert),
        text,
    })
}

pub fn lct_cmd(args: &WallArgs) -> Outcome {
    let (g, d, k) = (args.curve.genus, args.curve.degree, args.wall);
    let threshold = lc_threshold(g, d, k)?;
    let rows = discrepancy_table(g, d, &threshold, lc_rows(d, k))?;
    let binding: Vec<i64> = rows.iter().filter(|r| r.coeff == -1).map(|r| r.j).collect();
    let mut text = format!(
        "lc threshold on X_{} (g = {g}, d = {d}): {threshold}\n",
        k - 1
    );
    text.push_str(&rows_table(&rows));
    let value = json!({
        "genus": g,
        "degree": d,
        "wall": k,
        "threshold": threshold,
        "rows": rows,
        "binding_rows": binding,
    });
    Ok(Output { value, text })
}

pub fn disc_cmd(args: &DiscArgs) -> Outcome {
    let (g, d) = (args.curve.genus, args.curve.degree);
    let range = match args.wall {
        Some(k) => lc_rows(d, k),
        None => 1..=top_exceptional(d),
    };
    let rows = discrepancy_table(g, d, &args.lambda, range)?;
    let mut text = format!(
        "discrepancies of K + ({})F, g = {g}, d = {d}\n",
        args.lambda
    );
    text.push_str(&rows_table(&rows));
    let value = json!({ "genus": g, "degree": d, "lambda": args.lambda, "rows": rows });
    Ok(Output { value, text })
}

#[derive(Deserialize)]
struct WitnessJson {
    t: Vec<Rational>,
    coeffs: Option<Vec<Rational>>,
}

fn witness(params: Vec<Rational>, coeffs: Option<Vec<Rational>>) -> Result<SecantWitness, Failure> {
    Ok(match coeffs {
        Some(c) => SecantWitness::new(params, c)?,
        None => SecantWitness::unit(params)?,
    })
}

fn resolve_point(d: i64, p: &PointArgs) -> Result<(ProjPoint, Option<SecantWitness>), Failure> {
    let w = if let Some(t) = &p.secant {
        witness(t.clone(), p.coeffs.clone())?
    } else if let Some(raw) = &p.witness {
        let parsed: WitnessJson =
            serde_json::from_str(raw).map_err(|e| Failure::Usage(format!("--witness: {e}")))?;
        witness(parsed.t, parsed.coeffs)?
    } else if let Some(z) = &p.point {
        return Ok((ProjPoint::new(z.clone())?, None));
    } else {
        return Err(Failure::Usage("a point is required".into()));
    };
    Ok((secant_point(d, &w)?, Some(w)))
}

fn point_json(p: &ProjPoint, w: &Option<SecantWitness>) -> Value {
    json!({ "coords": p, "witness": w })
}

pub fn hankel_cmd(args: &HankelArgs) -> Outcome {
    let (d, k) = (args.degree, args.rows);
    let (p, w) = resolve_point(d, &args.point)?;
    let m = hankel_matrix(d, k, &p)?;
    let base = json!({ "degree": d, "rows": k, "point": point_json(&p, &w) });
    let (key, value, text) = match args.action {
        HankelAction::Rank => {
            let r = m.rank();
            ("rank", json!(r), format!("{r}\n"))
        }
        HankelAction::Matrix => {
            let rows = m.to_string_rows();
            let body = table(&[], rows.clone());
            ("matrix", json!(rows), body)
        }
        HankelAction::Det => {
            let minor = match &args.cols {
                Some(cols) => {
                    let cols0 = check_multi_index(d, k, cols)?;
                    let all: Vec<usize> = (0..m.rows()).collect();
                    m.select(&all, &cols0)
                }
                None => m,
            };
            let det = minor.det()?;
            ("det", json!(det), format!("{det}\n"))
        }
    };
    let mut obj = base;
    obj[key] = value;
    if let Some(cols) = &args.cols {
        obj["cols"] = json!(cols);
    }
    Ok(Output { value: obj, text })
}

pub fn split_cmd(args: &SplitArgs) -> Outcome {
    let d = args.degree;
    let (p, w) = resolve_point(d, &args.point)?;
    let (m, rest) = splitting_type(d, &p)?;
    let text = format!("O({m}) + O({rest})\n");
    let value = json!({ "degree": d, "point": point_json(&p, &w), "splitting_type": [m, rest] });
    Ok(Output { value, text })
}

fn order_json(o: Order) -> Value {
    match o {
        Order::Finite(n) => json!(n),
        Order::Infinite => json!("infinite"),
    }
}

pub fn multiplicity_cmd(args: &MultiplicityArgs, seed: u64) -> Outcome {
    let (d, k) = (args.degree, args.rows);
    let (p, w) = resolve_point(d, &args.point)?;
    let minors = match &args.cols {
        Some(cols) => vec![cols.clone()],
        None => column_multi_indices(d, k),
    };
    if minors.is_empty() {
        return Err(Failure::Domain(pairflip::Error::InvalidMultiIndex(
            format!("a {k}x{} matrix has no {k}x{k} minors", d - k),
        )));
    }
    let mut sampler = RationalSampler::with_seed(seed);
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut least = Order::Infinite;
    for cols in minors {
        let order = det_multiplicity(d, k, &cols, &p, args.probes, &mut sampler)?;
        least = least.min(order);
        rows.push(vec![format!("{cols:?}"), order.to_string()]);
        entries.push(json!({ "cols": cols, "order": order_json(order) }));
    }
    let mut text = table(&["columns", "order"], rows);
    writeln!(text, "minimum: {least}").unwrap();
    let value = json!({
        "degree": d,
        "rows": k,
        "point": point_json(&p, &w),
        "probes": args.probes,
        "seed": seed,
        "minors": entries,
        "min_order": order_json(least),
    });
    Ok(Output { value, text })
}
