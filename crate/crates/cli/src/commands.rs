use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::Instant;

use eccentric::enumeration::{encode_graph6, enumerate_connected, read_graph6, EnumFilter, GENERATOR_MAX_ORDER};
use eccentric::formulas;
use eccentric::verification::{self, Census, Verdict};
use eccentric::{FamilySpec, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::cli::{Claim, Cli, Command, FormulaName, Params};
use crate::output::{Emitter, ReportRecord};

/// Any error that ends the run with exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

type Result<T, E = CliError> = std::result::Result<T, E>;

pub fn run<W: Write>(cli: &Cli, out: &mut Emitter<W>) -> Result<()> {
    match &cli.command {
        Command::Eci { g6 } => eci(g6, out),
        Command::Construct { family, emit_g6, relabel } => construct(family, *emit_g6, *relabel, cli.seed, out),
        Command::Formula { name, params } => formula(*name, params, out),
        Command::Verify { claim, params, to, all_m, g6 } => {
            let v = Verify { claim: *claim, params: *params, to: *to, all_m: *all_m, include_n9: cli.include_n9 };
            v.run(g6.as_deref(), out)
        }
        Command::Enumerate { n, diameter, size, emit_g6, count } => {
            gate(*n, cli.include_n9)?;
            let filter = match (diameter, size) {
                (Some(d), _) => EnumFilter::Diameter(*d),
                (_, Some(m)) => EnumFilter::Size(*m),
                _ => EnumFilter::None,
            };
            let graphs = timed(*n, || enumerate_connected(*n, filter))?;
            let inputs = json!({ "n": n, "diameter": diameter, "size": size });
            if *count {
                out.emit(&ReportRecord::new("enumerate", inputs, json!({ "count": graphs.len() })))?;
            } else if *emit_g6 {
                for g in &graphs {
                    out.raw(&encode_graph6(g))?;
                }
            } else {
                for g in &graphs {
                    out.emit(&ReportRecord::new("enumerate", inputs.clone(), summary(g)?))?;
                }
            }
            Ok(())
        }
    }
}

fn gate(n: usize, include_n9: bool) -> Result<()> {
    if n == 9 && !include_n9 {
        return Err(usage("order 9 is exhaustive and slow; pass --include-n9 to run it"));
    }
    if !(1..=GENERATOR_MAX_ORDER).contains(&n) {
        return Err(usage(format!(
            "enumeration supports 1 <= n <= {GENERATOR_MAX_ORDER}; pipe larger graphs in with --g6"
        )));
    }
    Ok(())
}

/// Runs `f`, reporting progress on stderr for the slow order.
fn timed<T>(n: usize, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    if n >= 9 {
        eprintln!("enumerating connected graphs of order {n} ...");
    }
    let value = f();
    if n >= 9 {
        eprintln!("order {n} done in {:.1?}", start.elapsed());
    }
    value
}

fn open(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn read_all(path: &Path) -> Result<Vec<Graph>> {
    Ok(read_graph6(open(path)?).collect::<Result<Vec<_>, _>>()?)
}

fn summary(g: &Graph) -> Result<Value> {
    Ok(json!({
        "n": g.order(),
        "m": g.size(),
        "diameter": g.diameter()?,
        "eci": g.eci()?,
        "graph6": encode_graph6(g),
    }))
}

fn eci<W: Write>(path: &Path, out: &mut Emitter<W>) -> Result<()> {
    for (i, g) in read_graph6(open(path)?).enumerate() {
        let g = g?;
        let line = i + 1;
        if !g.is_connected() {
            return Err(usage(format!("graph {line}: disconnected, index undefined")));
        }
        let outputs = json!({
            "n": g.order(),
            "m": g.size(),
            "diameter": g.diameter()?,
            "eci": g.eci()?,
            "vertices": g.vertex_metrics()?,
        });
        out.emit(&ReportRecord::new("eci", json!({ "graph": line, "graph6": encode_graph6(&g) }), outputs))?;
    }
    Ok(())
}

fn construct<W: Write>(family: &str, emit_g6: bool, relabel: bool, seed: u64, out: &mut Emitter<W>) -> Result<()> {
    let spec: FamilySpec = family.parse()?;
    let mut g = spec.make()?;
    if relabel {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        g = g.permuted(&perm);
    }
    let mut outputs = json!({
        "n": g.order(),
        "m": g.size(),
        "diameter": g.diameter()?,
        "eci": g.eci()?,
        "vertices": g.vertex_metrics()?,
    });
    if emit_g6 {
        outputs["graph6"] = Value::from(encode_graph6(&g));
    }
    let mut inputs = json!({ "family": spec.to_string() });
    if relabel {
        inputs["seed"] = Value::from(seed);
    }
    out.emit(&ReportRecord::new("construct", inputs, outputs))?;
    Ok(())
}

fn need(value: Option<usize>, flag: &str) -> Result<usize> {
    value.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn formula<W: Write>(name: FormulaName, p: &Params, out: &mut Emitter<W>) -> Result<()> {
    use FormulaName::*;
    let n = need(p.n, "n")?;
    let mut inputs = json!({ "name": clap::ValueEnum::to_possible_value(&name).unwrap().get_name(), "n": n });
    let mut with = |flag: &str, v: Option<usize>| -> Result<usize> {
        let v = need(v, flag)?;
        inputs[flag] = Value::from(v);
        Ok(v)
    };
    let value: Value = match name {
        Closed => {
            let (d, k) = (with("d", p.d)?, with("k", p.k)?);
            formulas::eci_extremal_closed(n, d, k)?.into()
        }
        F => formulas::extremal_bound(n, with("d", p.d)?)?.into(),
        OptimalK => formulas::optimal_k_set(n, with("d", p.d)?)?.into(),
        Class => {
            let class = formulas::extremal_class(n, with("d", p.d)?)?;
            class.members.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
        }
        Diameter2 => formulas::diameter2_max(n)?.into(),
        Path => formulas::path_eci(n)?.into(),
        LollipopGap => formulas::lollipop_gap(n, with("d", p.d)?)?.into(),
        G => formulas::order_max(n)?.into(),
        GSweep => formulas::order_max_sweep(n)?.into(),
        DStar => formulas::d_star(n)?.into(),
        Best => serde_json::to_value(formulas::best_for_order(n)?)?,
        Conjecture => serde_json::to_value(formulas::conjecture_params(n, with("m", p.m)?)?)?,
    };
    out.emit(&ReportRecord::new("formula", inputs, json!({ "value": value })))?;
    Ok(())
}

struct Verify {
    claim: Claim,
    params: Params,
    to: Option<usize>,
    all_m: bool,
    include_n9: bool,
}

impl Verify {
    fn orders(&self) -> Result<Vec<usize>> {
        let n = need(self.params.n, "n")?;
        let to = self.to.unwrap_or(n);
        if to < n {
            return Err(usage(format!("--to {to} is below --n {n}")));
        }
        Ok((n..=to).collect())
    }

    fn census(&self, n: usize, g6: Option<&Path>) -> Result<Census> {
        match g6 {
            Some(path) => Ok(Census::from_graphs(n, read_all(path)?)?),
            None => {
                gate(n, self.include_n9)?;
                timed(n, || Census::enumerate(n)).map_err(Into::into)
            }
        }
    }

    fn run<W: Write>(&self, g6: Option<&Path>, out: &mut Emitter<W>) -> Result<()> {
        use Claim::*;
        if g6.is_some() && (self.to.is_some() || matches!(self.claim, Corollaries | Lollipop)) {
            return Err(usage("--g6 takes a single --n and an enumeration-based claim"));
        }
        match self.claim {
            Corollaries | Lollipop => {
                let n_max = self.to.unwrap_or(need(self.params.n, "n")?);
                let (kind, report) = if self.claim == Corollaries {
                    ("corollaries", verification::check_corollaries(n_max)?)
                } else {
                    ("lollipop", verification::check_lollipop_claims(n_max)?)
                };
                let verdict = report.verdict;
                out.emit(&ReportRecord::new(kind, json!({ "n_max": n_max }), report).with_verdict(verdict))?;
                return Ok(());
            }
            Lemma1 if g6.is_some() && self.params.n.is_none() => return lemma1_graphs(g6.unwrap(), out),
            _ => {}
        }
        for n in self.orders()? {
            let census = self.census(n, g6)?;
            let source = g6.map(|p| p.display().to_string());
            match self.claim {
                Theorem2 => {
                    let r = census.check_diameter2()?;
                    let v = r.verdict;
                    out.emit(&ReportRecord::new("theorem2", json!({ "n": n, "g6": source }), r).with_verdict(v))?;
                }
                Theorem5 => {
                    let ds: Vec<usize> = match self.params.d {
                        Some(d) => vec![d],
                        None => (3..n).collect(),
                    };
                    for d in ds {
                        let r = census.check_theorem5(d)?;
                        let v = r.verdict;
                        let inputs = json!({ "n": n, "d": d, "g6": source });
                        out.emit(&ReportRecord::new("theorem5", inputs, r).with_verdict(v))?;
                    }
                }
                Table1 => {
                    let r = census.check_table1()?;
                    let v = r.verdict;
                    out.emit(&ReportRecord::new("table1", json!({ "n": n, "g6": source }), r).with_verdict(v))?;
                }
                Conjecture => self.conjecture(&census, source, out)?,
                Lemma1 => {
                    let r = census.check_lemma1()?;
                    let v = r.verdict;
                    out.emit(&ReportRecord::new("lemma1", json!({ "n": n, "g6": source }), r).with_verdict(v))?;
                }
                Corollaries | Lollipop => unreachable!(),
            }
        }
        Ok(())
    }

    fn conjecture<W: Write>(&self, census: &Census, source: Option<String>, out: &mut Emitter<W>) -> Result<()> {
        let n = census.order();
        let sizes: Vec<usize> = match (self.params.m, self.all_m) {
            (Some(m), _) => vec![m],
            (None, true) => (n.saturating_sub(1)..=(n.saturating_sub(1) * n.saturating_sub(2) / 2)).collect(),
            (None, false) => return Err(usage("verify conjecture needs --m or --all-m")),
        };
        let (mut pass, mut fail) = (0, 0);
        for m in sizes {
            let r = census.check_conjecture(m)?;
            match r.verdict {
                Verdict::Pass => pass += 1,
                Verdict::Fail => fail += 1,
            }
            let v = r.verdict;
            out.emit(&ReportRecord::new("conjecture", json!({ "n": n, "m": m, "g6": source }), r).with_verdict(v))?;
        }
        if self.all_m {
            let tally = json!({ "pass": pass, "fail": fail });
            out.emit(&ReportRecord::new("conjecture_tally", json!({ "n": n, "g6": source }), tally))?;
        }
        Ok(())
    }
}

fn lemma1_graphs<W: Write>(path: &Path, out: &mut Emitter<W>) -> Result<()> {
    for (i, g) in read_all(path)?.iter().enumerate() {
        let inputs = json!({ "graph": i + 1, "graph6": encode_graph6(g) });
        if !g.is_connected() || g.diameter()? < 3 {
            out.emit(&ReportRecord::new("lemma1", inputs, json!({ "skipped": "needs a connected graph of diameter >= 3" })))?;
            continue;
        }
        let r = verification::check_lemma1(g)?;
        let verdict = Verdict::from_bool(r.holds);
        out.emit(&ReportRecord::new("lemma1", inputs, r).with_verdict(verdict))?;
    }
    Ok(())
}
