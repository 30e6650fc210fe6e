use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use locchrom_core::constructions::{
    corona_bounds, empty_corona_coloring, fixture_theorem2, star_corona_coloring,
    tree_empty_corona_bounds, ConstructionResult,
};
use locchrom_core::corpus::random_connected_graph;
use locchrom_core::{
    chi_l, corona, locating_lower_bound, parse_graph, serialize_graph, verify, ChiL, Coloring,
    CoronaMapRecord, Error, Family, Graph, Witness,
};
use rand::SeedableRng;
use serde::Serialize;
use thiserror::Error;

use crate::{
    Cli, Command, Format, EXIT_INDETERMINATE, EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_SOFTWARE,
    EXIT_USAGE,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{context}{source}")]
    Lib { context: String, source: Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib { source, .. } => match source {
                Error::InvalidInput(_)
                | Error::Parse { .. }
                | Error::Domain(_)
                | Error::SizeLimit { .. }
                | Error::Precondition(_) => EXIT_USAGE,
                Error::Indeterminate(_) => EXIT_INDETERMINATE,
                Error::Internal(_) => EXIT_SOFTWARE,
            },
        }
    }
}

impl From<Error> for CliError {
    fn from(source: Error) -> Self {
        CliError::Lib {
            context: String::new(),
            source,
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

fn ok(stdout: String) -> Output {
    Output {
        stdout,
        code: EXIT_OK,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Lib {
        context: format!("{}: ", path.display()),
        source,
    })
}

fn read_connected(path: &Path) -> Result<Graph, CliError> {
    let g = read_graph(path)?;
    if !g.is_connected() {
        return Err(CliError::Usage(format!(
            "{}: graph is disconnected; locating colorings are defined for connected graphs only",
            path.display()
        )));
    }
    Ok(g)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Gen { family, params } => gen(cli, family, params),
        Command::Corona { g, h, map_out } => corona_cmd(cli, g, h, map_out.as_deref()),
        Command::Chil { graph } => chil(cli, graph),
        Command::Verify { graph, coloring } => verify_cmd(cli, graph, coloring),
        Command::Bounds { g, h } => bounds(cli, g, h),
        Command::Fixture {
            name,
            params,
            out_dir,
        } => fixture(cli, name, params, out_dir.as_deref()),
    }
}

#[derive(Serialize)]
struct GraphOut<'a> {
    graph: &'a str,
}

fn gen(cli: &Cli, family: &str, params: &[String]) -> Result<Output, CliError> {
    let g = if family == "random" {
        let (n, p) = match params {
            [n, p] => (
                n.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad order `{n}`")))?,
                p.parse::<f64>()
                    .ok()
                    .filter(|p| (0.0..=1.0).contains(p))
                    .ok_or_else(|| CliError::Usage(format!("bad edge probability `{p}`")))?,
            ),
            _ => return Err(CliError::Usage("random takes N and P".into())),
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
        random_connected_graph(&mut rng, n, p)
    } else {
        let nums = params
            .iter()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad parameter `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let fam = Family::from_parts(family, &nums).map_err(|e| CliError::Usage(e.to_string()))?;
        Graph::generate(fam).map_err(|e| CliError::Usage(e.to_string()))?
    };
    let text = serialize_graph(&g);
    Ok(ok(match cli.format {
        Format::Human => text,
        Format::Json => json(&GraphOut { graph: &text }),
    }))
}

#[derive(Serialize)]
struct CoronaOut<'a> {
    graph: &'a str,
    map: CoronaMapRecord,
}

fn corona_cmd(cli: &Cli, gp: &Path, hp: &Path, map_out: Option<&Path>) -> Result<Output, CliError> {
    let g = read_graph(gp)?;
    let h = read_graph(hp)?;
    let (product, map) = corona(&g, &h)?;
    let text = serialize_graph(&product);
    if let Some(path) = map_out {
        write(path, &format!("{}\n", map.to_json()))?;
    }
    Ok(ok(match cli.format {
        Format::Human => text,
        Format::Json => json(&CoronaOut {
            graph: &text,
            map: map.record(),
        }),
    }))
}

fn chil(cli: &Cli, path: &Path) -> Result<Output, CliError> {
    let g = read_connected(path)?;
    let result = chi_l(&g, cli.budget)?;
    let code = match result {
        ChiL::Resolved { .. } => EXIT_OK,
        ChiL::Indeterminate { .. } => EXIT_INDETERMINATE,
    };
    let stdout = match cli.format {
        Format::Json => json(&result),
        Format::Human => match &result {
            ChiL::Resolved { value, certificate } => {
                format!("chi_L = {value}\ncertificate: {}\n", certificate.to_json())
            }
            ChiL::Indeterminate { lower, upper } => {
                format!(
                    "chi_L in [{lower}, {upper}] (budget of {} nodes exhausted)\n",
                    cli.budget
                )
            }
        },
    };
    Ok(Output { stdout, code })
}

fn verify_cmd(cli: &Cli, gpath: &Path, cpath: &Path) -> Result<Output, CliError> {
    let g = read_connected(gpath)?;
    let coloring = Coloring::from_json(&read(cpath)?).map_err(|source| CliError::Lib {
        context: format!("{}: ", cpath.display()),
        source,
    })?;
    let report = verify(&g, &coloring)?;
    let code = if report.is_locating() {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    let stdout = match cli.format {
        Format::Json => json(&report),
        Format::Human => match &report.witness {
            None => "locating\n".to_string(),
            Some(Witness::MonochromaticEdge { u, v, color }) => {
                format!("not proper: edge ({u}, {v}) has both ends colored {color}\n")
            }
            Some(Witness::CodeCollision { u, v, code }) => {
                format!("not locating: vertices {u} and {v} share the code {code:?}\n")
            }
        },
    };
    Ok(Output { stdout, code })
}

fn bounds(cli: &Cli, gp: &Path, hp: &Path) -> Result<Output, CliError> {
    let g = read_connected(gp)?;
    let h = read_graph(hp)?;
    let mut report = corona_bounds(&g, &h, cli.budget)?;
    if g.is_tree() && h.size() == 0 && h.order() >= 1 {
        report = report.merge(&tree_empty_corona_bounds(&g, h.order(), cli.budget)?);
    }
    let code = if report.indeterminate {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    };
    let stdout = match cli.format {
        Format::Json => json(&report),
        Format::Human => {
            let mut s = format!("{} <= chi_L(G o H) <= {}\n", report.lower, report.upper);
            for t in &report.tags {
                let side = match t.side {
                    locchrom_core::BoundSide::Lower => "lower",
                    locchrom_core::BoundSide::Upper => "upper",
                };
                writeln!(s, "  {side} {} = {}", t.rule.as_str(), t.value).expect("string write");
            }
            if report.indeterminate {
                s.push_str("  (some exact values were not resolved within budget)\n");
            }
            s
        }
    };
    Ok(Output { stdout, code })
}

/// A construction with everything needed to re-check it independently.
#[derive(Serialize)]
struct Bundle {
    name: String,
    graph: String,
    certificate: ConstructionResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    codes: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    map: Option<CoronaMapRecord>,
}

#[derive(Serialize)]
struct CodeRow<'a> {
    vertex: &'a str,
    code: &'a [u32],
}

fn fixture(
    cli: &Cli,
    name: &str,
    params: &[usize],
    out_dir: Option<&Path>,
) -> Result<Output, CliError> {
    let bundle = match (name, params) {
        ("theorem2", []) => {
            let fx = fixture_theorem2()?;
            Bundle {
                name: "theorem2".into(),
                graph: serialize_graph(&fx.graph),
                certificate: fx.result,
                lower_bound: None,
                names: Some(fx.names),
                codes: Some(fx.codes),
                map: Some(fx.map.record()),
            }
        }
        ("star", &[n]) => {
            let (product, result) = star_corona_coloring(n)?;
            Bundle {
                name: format!("star {n}"),
                graph: serialize_graph(&product),
                certificate: result,
                lower_bound: None,
                names: None,
                codes: None,
                map: None,
            }
        }
        ("empty-corona", &[n, k]) => {
            let g = Graph::generate(Family::Path(n)).map_err(|e| CliError::Usage(e.to_string()))?;
            let (product, result) = empty_corona_coloring(&g, k)?;
            Bundle {
                name: format!("empty-corona {n} {k}"),
                lower_bound: Some(locating_lower_bound(&product)?.value),
                graph: serialize_graph(&product),
                certificate: result,
                names: None,
                codes: None,
                map: None,
            }
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown fixture `{name}` with {} parameter(s); expected theorem2, star N or empty-corona N K",
                params.len()
            )))
        }
    };
    if let Some(dir) = out_dir {
        write_bundle(dir, &bundle)?;
    }
    let stdout = match cli.format {
        Format::Json => json(&bundle),
        Format::Human => {
            let c = &bundle.certificate;
            let mut s = format!(
                "{}: {} colors, verified = {}\ncolors: {:?}\n",
                bundle.name, c.k, c.verified, c.colors
            );
            if let Some(lb) = bundle.lower_bound {
                writeln!(s, "lower bound: {lb}").expect("string write");
            }
            if let (Some(names), Some(codes)) = (&bundle.names, &bundle.codes) {
                for (n, code) in names.iter().zip(codes) {
                    writeln!(s, "{n:>6} {code:?}").expect("string write");
                }
            }
            s
        }
    };
    Ok(ok(stdout))
}

fn write_bundle(dir: &Path, bundle: &Bundle) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    write(&dir.join("product.graph"), &bundle.graph)?;
    let coloring = bundle.certificate.coloring();
    write(
        &dir.join("coloring.json"),
        &format!("{}\n", coloring.to_json()),
    )?;
    write(&dir.join("certificate.json"), &json(&bundle.certificate))?;
    if let (Some(names), Some(codes)) = (&bundle.names, &bundle.codes) {
        let rows: Vec<_> = names
            .iter()
            .zip(codes)
            .map(|(n, c)| CodeRow { vertex: n, code: c })
            .collect();
        write(&dir.join("codes.json"), &json(&rows))?;
    }
    if let Some(map) = &bundle.map {
        write(&dir.join("corona_map.json"), &json(map))?;
    }
    Ok(())
}
