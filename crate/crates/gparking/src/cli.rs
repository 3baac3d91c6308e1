//! Command-line surface. Every command emits one JSON document of the shape
//! {command, input, result}; counts are decimal strings so arbitrary
//! precision survives the serialization.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::burning::{self, BurnEvent};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::RootedMultigraph;
use crate::ideal::{self, MonomialIdeal};
use crate::parking::{self, LambdaVector};
use crate::tree::{self, RootedLabelledTree};
use crate::verify;

#[derive(Parser)]
#[command(
    name = "gparking",
    about = "Exact computations with parking-function ideals, skeleton ideals and burning bijections",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the output document to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Complete graph on n+1 vertices rooted at 0; the value is n.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Complete multigraph: n, root multiplicity a, inner multiplicity b.
    #[arg(long, num_args = 3, value_names = ["N", "A", "B"])]
    complete_ab: Option<Vec<u64>>,
    /// Complete bipartite multigraph: m, n, a, b; root 0 sits in the m-side.
    #[arg(long, num_args = 4, value_names = ["M", "N", "A", "B"])]
    bipartite: Option<Vec<u64>>,
    /// Read the graph from a JSON file.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Delete all edges between two vertices; repeatable.
    #[arg(long, num_args = 2, value_names = ["I", "J"], action = clap::ArgAction::Append)]
    delete: Vec<usize>,
    /// Delete every edge incident to the root.
    #[arg(long)]
    delete_root_edges: bool,
}

impl GraphArgs {
    fn build(&self) -> Result<(RootedMultigraph, Value)> {
        let sources = [
            self.complete.is_some(),
            self.complete_ab.is_some(),
            self.bipartite.is_some(),
            self.graph.is_some(),
        ]
        .iter()
        .filter(|&&s| s)
        .count();
        if sources != 1 {
            return Err(Error::BadParameter(
                "choose exactly one of --complete, --complete-ab, --bipartite, --graph".into(),
            ));
        }
        let (mut g, mut input) = if let Some(n) = self.complete {
            (RootedMultigraph::complete(n)?, json!({"complete": n}))
        } else if let Some(v) = &self.complete_ab {
            (
                RootedMultigraph::complete_ab(v[0] as usize, v[1], v[2])?,
                json!({"complete_ab": v}),
            )
        } else if let Some(v) = &self.bipartite {
            (
                RootedMultigraph::complete_bipartite_ab(v[0] as usize, v[1] as usize, v[2], v[3])?,
                json!({"bipartite": v}),
            )
        } else {
            let path = self.graph.as_ref().unwrap();
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::BadGraphFile(format!("{}: {e}", path.display())))?;
            (
                RootedMultigraph::from_json(&text)?,
                json!({"graph": path.display().to_string()}),
            )
        };
        for pair in self.delete.chunks(2) {
            g = g.delete_edge(pair[0], pair[1])?;
        }
        if !self.delete.is_empty() {
            input["delete"] = json!(self.delete.chunks(2).collect::<Vec<_>>());
        }
        if self.delete_root_edges {
            g = g.delete_root_edges();
            input["delete_root_edges"] = json!(true);
        }
        Ok((g, input))
    }
}

fn parse_values(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::BadParameter(format!("bad integer {p:?}")))
        })
        .collect()
}

/// Parse a tree given as child:parent pairs, e.g. "1:2,2:3"; the root is
/// the unique label that never appears as a child.
fn parse_tree(text: &str) -> Result<RootedLabelledTree> {
    let mut parent = BTreeMap::new();
    for pair in text.split(',') {
        let (c, p) = pair
            .split_once(':')
            .ok_or_else(|| Error::BadParameter(format!("bad edge {pair:?}, expected child:parent")))?;
        let c: usize = c.trim().parse().map_err(|_| Error::BadParameter(format!("bad label {c:?}")))?;
        let p: usize = p.trim().parse().map_err(|_| Error::BadParameter(format!("bad label {p:?}")))?;
        parent.insert(c, p);
    }
    let root: Vec<usize> = parent
        .values()
        .filter(|v| !parent.contains_key(v))
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    match root.as_slice() {
        [r] => RootedLabelledTree::new(*r, parent),
        _ => Err(Error::BadTree("the edge list does not have a unique root".into())),
    }
}

fn tree_json(t: &RootedLabelledTree) -> Value {
    let edges: Vec<Value> = t
        .parent_map()
        .iter()
        .map(|(&c, &p)| {
            let mut e = json!({"child": c, "parent": p});
            if let Some(labels) = t.edge_labels() {
                e["label"] = json!(labels[&c]);
            }
            e
        })
        .collect();
    let mut out = json!({"root": t.root(), "edges": edges});
    if let Some(w) = t.root_weight() {
        out["root_weight"] = json!(w);
    }
    out
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({
        "generators": i.generators().iter().map(|g| ideal::monomial_string(g)).collect::<Vec<_>>(),
        "exponents": i.generators(),
    })
}

#[derive(Subcommand)]
enum Command {
    /// Print the parking-function ideal of a graph.
    Ideal {
        #[command(flatten)]
        graph: GraphArgs,
        /// Colon the ideal by the given variable (1-based vertex position).
        #[arg(long, value_name = "VAR")]
        colon: Option<usize>,
        /// Take the Alexander dual with respect to this bound vector.
        #[arg(long, value_name = "B1,B2,...")]
        dual: Option<String>,
    },
    /// Print the k-skeleton subideal.
    Skeleton {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// Standard monomials of the (skeleton) parking ideal and their count.
    Standard {
        #[command(flatten)]
        graph: GraphArgs,
        /// Skeleton order; defaults to the full parking ideal.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        count: bool,
    },
    /// Enumerate or test G-parking functions.
    Pf {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        count: bool,
        /// Test a single function, e.g. --check 0,1,2
        #[arg(long, value_name = "P")]
        check: Option<String>,
    },
    /// Enumerate, test or reduce spherical G-parking functions.
    Spf {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        count: bool,
        #[arg(long, value_name = "P")]
        check: Option<String>,
        /// Divide by the full-set generator.
        #[arg(long, value_name = "P")]
        reduce: Option<String>,
    },
    /// Enumerate lambda-parking functions.
    LambdaPf {
        #[arg(long, value_name = "L1,L2,...")]
        lambda: String,
        #[arg(long)]
        count: bool,
    },
    /// Run the depth-first burning process and print the full event log.
    Burn {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "P")]
        values: String,
        /// Start the fire at this vertex instead of the root.
        #[arg(long)]
        root: Option<usize>,
    },
    /// Burning bijection: parking function to spanning tree with statistics.
    Phi {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "P")]
        values: String,
    },
    /// Spherical burning bijection to an uprooted tree.
    PhiSpherical {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "P")]
        values: String,
    },
    /// Enumerate spanning trees oriented away from the root.
    Trees {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        count: bool,
    },
    /// Enumerate uprooted trees on [n], optionally avoiding an edge.
    Uprooted {
        #[arg(long)]
        n: usize,
        /// Forbid an edge, e.g. --avoid 1,4
        #[arg(long, value_name = "I,J")]
        avoid: Option<String>,
        #[arg(long)]
        count: bool,
    },
    /// Apply the uprooted-to-leaf-1 tree bijection (or its inverse).
    Psi {
        /// Tree as child:parent pairs, e.g. 1:2,2:3
        #[arg(long, value_name = "EDGES")]
        tree: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Steck determinant and the lambda-parking count it certifies.
    Steck {
        #[arg(long, value_name = "L1,L2,...")]
        lambda: String,
    },
    /// Closed-form dimension of the skeleton quotient of a complete multigraph.
    Dims {
        #[arg(long)]
        n: usize,
        /// Skeleton order; all of 0..n-1 when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        a: u64,
        #[arg(long, default_value_t = 1)]
        b: u64,
    },
    /// Betti numbers of skeleton ideals of complete graphs.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Homological position (1-based); all positions when omitted.
        #[arg(long)]
        i: Option<usize>,
        /// Include the multigraded table.
        #[arg(long)]
        table: bool,
    },
    /// Spherical parking count of a complete bipartite graph via the chain formula.
    Bipartite {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Run the verification suite and print one pass/fail line per identity.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn run_command(command: &Command) -> Result<(String, Value, Value)> {
    Ok(match command {
        Command::Ideal { graph, colon, dual } => {
            let (g, mut input) = graph.build()?;
            let mut i = ideal::parking_ideal(&g);
            if let Some(var) = colon {
                input["colon"] = json!(var);
                if *var < 1 || *var > g.n() {
                    return Err(Error::BadVertex(*var));
                }
                i = i.colon_var(var - 1)?;
            }
            if let Some(bound) = dual {
                let bound = parse_values(bound)?;
                input["dual"] = json!(bound);
                i = i.alexander_dual(&bound)?;
            }
            ("ideal".into(), input, ideal_json(&i))
        }
        Command::Skeleton { graph, k } => {
            let (g, mut input) = graph.build()?;
            input["k"] = json!(k);
            ("skeleton".into(), input, ideal_json(&ideal::skeleton_ideal(&g, *k)?))
        }
        Command::Standard { graph, k, count } => {
            let (g, mut input) = graph.build()?;
            let i = match k {
                Some(k) => {
                    input["k"] = json!(k);
                    ideal::skeleton_ideal(&g, *k)?
                }
                None => ideal::parking_ideal(&g),
            };
            let monomials = i.standard_monomials()?;
            let mut result = json!({"count": monomials.len().to_string()});
            if !count {
                result["monomials"] = json!(monomials);
            }
            ("standard".into(), input, result)
        }
        Command::Pf { graph, count, check } => {
            let (g, mut input) = graph.build()?;
            let result = if let Some(p) = check {
                let p = parse_values(p)?;
                input["check"] = json!(p);
                json!({"is_parking_function": parking::is_gpf(&g, &p)?})
            } else {
                let pf = parking::enumerate_pf(&g)?;
                let mut r = json!({"count": pf.len().to_string()});
                if !count {
                    r["functions"] = json!(pf);
                }
                r
            };
            ("pf".into(), input, result)
        }
        Command::Spf { graph, count, check, reduce } => {
            let (g, mut input) = graph.build()?;
            let result = if let Some(p) = check {
                let p = parse_values(p)?;
                input["check"] = json!(p);
                json!({"is_spherical": parking::is_spherical(&g, &p)?})
            } else if let Some(p) = reduce {
                let p = parse_values(p)?;
                input["reduce"] = json!(p);
                json!({"reduced": parking::reduce_spf(&g, &p)?})
            } else {
                let spf = parking::enumerate_spf(&g)?;
                let mut r = json!({"count": spf.len().to_string()});
                if !count {
                    r["functions"] = json!(spf);
                }
                r
            };
            ("spf".into(), input, result)
        }
        Command::LambdaPf { lambda, count } => {
            let entries = parse_values(lambda)?;
            let input = json!({"lambda": entries});
            let lv = LambdaVector::new(entries)?;
            let pf = parking::enumerate_lambda_pf(&lv)?;
            let mut result = json!({"count": pf.len().to_string()});
            if !count {
                result["functions"] = json!(pf);
            }
            ("lambda-pf".into(), input, result)
        }
        Command::Burn { graph, values, root } => {
            let (g, mut input) = graph.build()?;
            let p = parse_values(values)?;
            input["values"] = json!(p);
            let start = root.unwrap_or(g.root());
            if root.is_some() {
                input["root"] = json!(start);
            }
            let outcome = burning::burn(&g, start, &p)?;
            let events: Vec<Value> = outcome
                .events
                .iter()
                .map(|e| match e {
                    BurnEvent::Dampen { from, to, count } => {
                        json!({"dampen": {"from": from, "to": to, "count": count}})
                    }
                    BurnEvent::Burn { from, to, label } => {
                        json!({"burn": {"from": from, "to": to, "label": label}})
                    }
                    BurnEvent::Backtrack { at } => json!({"backtrack": {"at": at}}),
                })
                .collect();
            let result = json!({
                "burnt": outcome.burnt,
                "complete": outcome.complete(&g),
                "tree": tree_json(&outcome.tree),
                "residual": outcome.residual,
                "events": events,
            });
            ("burn".into(), input, result)
        }
        Command::Phi { graph, values } => {
            let (g, mut input) = graph.build()?;
            let p = parse_values(values)?;
            input["values"] = json!(p);
            let t = burning::phi(&g, &p)?;
            let result = json!({
                "tree": tree_json(&t),
                "kappa": burning::kappa_in(&g, &t),
                "inversions": burning::inversions(&t),
                "edge_label_sum": burning::edge_label_sum(&t),
                "rsum": parking::rsum(&g, &p),
            });
            ("phi".into(), input, result)
        }
        Command::PhiSpherical { graph, values } => {
            let (g, mut input) = graph.build()?;
            let p = parse_values(values)?;
            input["values"] = json!(p);
            let t = burning::phi_spherical(&g, &p)?;
            let result = json!({
                "tree": tree_json(&t),
                "kappa": burning::kappa_in(&g, &t),
                "sum": parking::sum(&p),
                "uprooted": tree::is_uprooted(&t),
            });
            ("phi-spherical".into(), input, result)
        }
        Command::Trees { graph, count } => {
            let (g, input) = graph.build()?;
            let trees = tree::spanning_trees(&g, g.root())?;
            let mut result = json!({"count": trees.len().to_string()});
            if !count {
                result["trees"] = json!(trees.iter().map(tree_json).collect::<Vec<_>>());
            }
            ("trees".into(), input, result)
        }
        Command::Uprooted { n, avoid, count } => {
            let mut input = json!({"n": n});
            let trees = match avoid {
                Some(pair) => {
                    let pair = parse_values(pair)?;
                    if pair.len() != 2 {
                        return Err(Error::BadParameter("--avoid takes two labels".into()));
                    }
                    input["avoid"] = json!(pair);
                    tree::uprooted_avoiding(*n, pair[0] as usize, pair[1] as usize)?
                }
                None => tree::uprooted_trees(*n),
            };
            let mut result = json!({"count": trees.len().to_string()});
            if !count {
                result["trees"] = json!(trees.iter().map(tree_json).collect::<Vec<_>>());
            }
            ("uprooted".into(), input, result)
        }
        Command::Psi { tree: edges, inverse } => {
            let input = json!({"tree": edges, "inverse": inverse});
            let t = parse_tree(edges)?;
            let image = if *inverse { tree::psi_inverse(&t)? } else { tree::psi(&t)? };
            ("psi".into(), input, json!({"tree": tree_json(&image)}))
        }
        Command::Steck { lambda } => {
            let entries = parse_values(lambda)?;
            let input = json!({"lambda": entries});
            let lv = LambdaVector::new(entries)?;
            let rationals: Vec<_> = lv
                .entries()
                .iter()
                .map(|&l| num_rational::BigRational::from_integer(l.into()))
                .collect();
            let det = formulas::steck_det(&rationals)?;
            let count = formulas::lambda_pf_count_steck(&lv)?;
            ("steck".into(), input, json!({"det": det.to_string(), "count": count.to_string()}))
        }
        Command::Dims { n, k, a, b } => {
            let input = json!({"n": n, "k": k, "a": a, "b": b});
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..*n).collect(),
            };
            let dims: Vec<Value> = ks
                .iter()
                .map(|&k|

                    formulas::dim_skeleton_closed(*n, k, *a, *b)
                        .map(|d| json!({"k": k, "dim": d.to_string()})))
                .collect::<Result<_>>()?;
            ("dims".into(), input, json!({"dims": dims}))
        }
        Command::Betti { n, k, i, table } => {
            let input = json!({"n": n, "k": k, "i": i, "table": table});
            let positions: Vec<usize> = match i {
                Some(i) => vec![*i],
                None => (1..=*n).collect(),
            };
            let totals: Vec<Value> = positions
                .iter()
                .map(|&i| {
                    formulas::betti_total(*n, *k, i)
                        .map(|b| json!({"i": i, "total": b.to_string()}))
                })
                .collect::<Result<_>>()?;
            let mut result = json!({"totals": totals});
            if *table {
                let entries: Vec<Value> = formulas::betti_table(*n, *k)?
                    .iter()
                    .map(|e| {
                        json!({
                            "index": e.index,
                            "degree": e.degree,
                            "multiplicity": e.multiplicity.to_string(),
                        })
                    })
                    .collect();
                result["table"] = json!(entries);
            }
            ("betti".into(), input, result)
        }
        Command::Bipartite { m, n } => {
            let input = json!({"m": m, "n": n});
            let count = formulas::spf_bipartite_count(*m, *n)?;
            ("bipartite".into(), input, json!({"count": count.to_string()}))
        }
        Command::Verify { max_n } => {
            let input = json!({"max_n": max_n, "workers": verify::workers_from_env()});
            let sections = verify::run_all(*max_n, verify::workers_from_env())?;
            let (text, all_pass) = verify::render(&sections);
            let result = json!({"report": text, "all_pass": all_pass});
            ("verify".into(), input, result)
        }
    })
}

/// Execute the parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let (document, code) = match run_command(&cli.command) {
        Ok((command, input, result)) => {
            let all_pass = result.get("all_pass").and_then(Value::as_bool).unwrap_or(true);
            (
                json!({"command": command, "input": input, "result": result}),
                if all_pass { 0 } else { 1 },
            )
        }
        Err(e) => (json!({"error": {"code": e.code(), "message": e.to_string()}}), 1),
    };
    let text = format!("{:#}\n", document);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_argv(argv: &[&str]) -> (Value, i32) {
        let cli = Cli::try_parse_from(argv).unwrap();
        match run_command(&cli.command) {
            Ok((command, input, result)) => {
                (json!({"command": command, "input": input, "result": result}), 0)
            }
            Err(e) => (json!({"error": {"code": e.code()}}), 1),
        }
    }

    #[test]
    fn spf_count() {
        let (doc, code) = run_argv(&["gparking", "spf", "--complete", "3", "--count"]);
        assert_eq!(code, 0);
        assert_eq!(doc["result"]["count"], "4");
    }

    #[test]
    fn steck_document() {
        let (doc, _) = run_argv(&["gparking", "steck", "--lambda", "3,2,1"]);
        assert_eq!(doc["result"]["det"], "8/3");
        assert_eq!(doc["result"]["count"], "16");
    }

    #[test]
    fn domain_error_has_a_code() {
        let (doc, code) =
            run_argv(&["gparking", "phi", "--complete", "2", "--values", "2,2"]);
        assert_eq!(code, 1);
        assert_eq!(doc["error"]["code"], "not-a-parking-function");
    }

    #[test]
    fn tree_round_trip_via_text() {
        let (doc, _) = run_argv(&["gparking", "psi", "--tree", "1:2,2:3"]);
        assert_eq!(doc["result"]["tree"]["root"], 3);
    }
}
