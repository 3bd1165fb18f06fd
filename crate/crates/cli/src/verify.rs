use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

use aegame::graph::{parse_graph_text, Graph, VertexSet};
use aegame::regularity::{
    check_density_lemma, check_p1, check_p2, is_regular_pair, verify_slicing, Equipartition, SearchMode,
};
use aegame::Rational;

use crate::rational;

#[derive(Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    check: Check,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file: `n m` header, then one `u v` line per edge.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[arg(long, default_value_t = 2000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

impl ModeArgs {
    fn mode(&self) -> SearchMode {
        match self.mode {
            ModeArg::Exact => SearchMode::Exact,
            ModeArg::Sampled => SearchMode::Sampled {
                trials: self.trials,
                seed: self.seed,
            },
        }
    }
}

#[derive(Subcommand)]
enum Check {
    /// Minimum degree at least (1/2 - eps) n.
    P1 {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value = "0.1")]
        eps: String,
    },
    /// Every large disjoint pair is eps-unbiased.
    P2 {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value = "0.1")]
        eps: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Whether (A, B) is an alpha-regular pair.
    RegularPair {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertices.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Hypotheses and inequality of the cluster density bound.
    DensityLemma {
        #[command(flatten)]
        graph: GraphArg,
        /// Outer equipartition, parts separated by `;`.
        #[arg(long)]
        partition: String,
        /// One inner set per part, separated by `;`.
        #[arg(long)]
        inner: String,
        #[arg(long)]
        e: String,
    },
    /// Random slices of a verified alpha-regular pair.
    Slicing {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        li: usize,
        #[arg(long)]
        lj: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load(arg: &GraphArg) -> Result<Graph> {
    let text = fs::read_to_string(&arg.graph).with_context(|| format!("reading {}", arg.graph.display()))?;
    Ok(parse_graph_text(&text)?)
}

fn vertex_set(n: usize, list: &str) -> Result<VertexSet> {
    let items = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad vertex `{s}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_iter(n, items)?)
}

fn vertex_sets(n: usize, lists: &str) -> Result<Vec<VertexSet>> {
    lists.split(';').map(|l| vertex_set(n, l)).collect()
}

fn ratio_json(q: &Rational) -> serde_json::Value {
    json!(q.to_string())
}

pub fn run(args: VerifyArgs) -> Result<ExitCode> {
    let out = match args.check {
        Check::P1 { graph, eps } => {
            let g = load(&graph)?;
            let (passed, min_degree) = check_p1(&g, &rational(&eps, "eps")?);
            json!({"passed": passed, "min_degree": min_degree, "n": g.order()})
        }
        Check::P2 { graph, eps, mode } => {
            let g = load(&graph)?;
            let report = check_p2(&g, &rational(&eps, "eps")?, mode.mode())?;
            serde_json::from_str(&report.to_json())?
        }
        Check::RegularPair { graph, a, b, alpha, mode } => {
            let g = load(&graph)?;
            let n = g.order();
            let report = is_regular_pair(&g, &vertex_set(n, &a)?, &vertex_set(n, &b)?, &rational(&alpha, "alpha")?, mode.mode())?;
            serde_json::from_str(&report.to_json())?
        }
        Check::DensityLemma { graph, partition, inner, e } => {
            let g = load(&graph)?;
            let n = g.order();
            let outer = Equipartition::new(VertexSet::full(n), vertex_sets(n, &partition)?)?;
            let c = check_density_lemma(&g, &outer, &vertex_sets(n, &inner)?, &rational(&e, "E")?)?;
            json!({
                "clusters": c.clusters,
                "inner_size": c.inner_size,
                "deviant_pairs": c.deviant_pairs,
                "hypotheses_ok": c.hypotheses_ok,
                "deviant_ok": c.deviant_ok,
                "cluster_count_ok": c.cluster_count_ok,
                "order_ok": c.order_ok,
                "inner_edges": c.inner_edges,
                "lhs": c.lhs,
                "rhs": ratio_json(&c.rhs),
                "conclusion_ok": c.conclusion_ok,
            })
        }
        Check::Slicing { graph, a, b, alpha, li, lj, trials, seed } => {
            let g = load(&graph)?;
            let n = g.order();
            let c = verify_slicing(&g, &vertex_set(n, &a)?, &vertex_set(n, &b)?, &rational(&alpha, "alpha")?, li, lj, trials, seed)?;
            json!({
                "passed": c.violations == 0,
                "alpha_prime": ratio_json(&c.alpha_prime),
                "density": ratio_json(&c.density),
                "slices": c.slices,
                "violations": c.violations,
                "first_violation": c.first_violation.map(|(x, y)| (x.to_vec(), y.to_vec())),
            })
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}
