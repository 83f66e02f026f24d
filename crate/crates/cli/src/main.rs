mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::Value;
use snakepath::snake::{position_class, snake_qchar};
use snakepath::verify::verify_thin_criteria;
use snakepath::{
    Algebra, Monomial, Path, PathModel, QCharacter, SkewDiagram, SnakeSeq, SpectralPoint, Tableau,
};

#[derive(Parser)]
#[command(name = "snakepath", version, about = "q-characters of snake modules of type B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-character of the module with the given highest monomial.
    Qchar {
        #[arg(long = "type", value_name = "BN")]
        algebra: String,
        #[arg(long, value_name = "MONOMIAL")]
        m: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Print the prime factors and their product.
        #[arg(long)]
        factor: bool,
    },
    /// Decide tameness and classify consecutive pairs.
    Classify {
        #[arg(long = "type", value_name = "BN")]
        algebra: String,
        #[arg(long, value_name = "MONOMIAL")]
        m: String,
    },
    /// Work with a super skew diagram read from JSON.
    #[command(group(ArgGroup::new("mode").args(["enumerate", "dominant", "monomial", "reduce"])))]
    Tableaux {
        #[arg(long, value_name = "FILE")]
        diagram: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        dominant: bool,
        #[arg(long)]
        monomial: bool,
        #[arg(long)]
        reduce: bool,
    },
    /// Check the thin-character criteria.
    Verify {
        #[arg(long = "type", value_name = "BN")]
        algebra: String,
        #[arg(long, value_name = "MONOMIAL")]
        m: String,
        /// A q-character JSON file to check instead of the computed one.
        #[arg(long, value_name = "FILE")]
        against: Option<PathBuf>,
    },
    /// Draw path tuples or a tableau.
    #[command(group(ArgGroup::new("what").required(true).args(["paths", "owners", "tableau"])))]
    Render {
        #[arg(long = "type", value_name = "BN")]
        algebra: Option<String>,
        /// A JSON array of paths.
        #[arg(long, value_name = "FILE")]
        paths: Option<PathBuf>,
        /// Owners such as "(3,2) (1,8)"; draws their highest paths.
        #[arg(long, value_name = "POINTS")]
        owners: Option<String>,
        /// With --owners, draw the lowest paths instead.
        #[arg(long, requires = "owners")]
        lowest: bool,
        /// A tableau JSON file.
        #[arg(long, value_name = "FILE")]
        tableau: Option<PathBuf>,
        #[arg(long)]
        svg: bool,
    },
}

/// A failure with its exit code.
enum Failure {
    Input(String),
    Domain(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Domain(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<snakepath::Error> for Failure {
    fn from(e: snakepath::Error) -> Self {
        use snakepath::Error as E;
        match e {
            E::NotExtendedSnake { first, second } => {
                Failure::Domain(format!("not an extended snake: {first}→{second}"))
            }
            E::Parse { .. } | E::Json(_) | E::InvalidRank(_) | E::NodeOutOfRange { .. } => {
                Failure::Input(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn algebra(text: &str) -> Result<Algebra, Failure> {
    let alg: Algebra = text.parse()?;
    if alg.is_sl2() {
        return Err(Failure::Domain("the path model needs type B".into()));
    }
    Ok(alg)
}

fn monomial(text: &str) -> Result<Monomial, Failure> {
    Ok(text.parse()?)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn char_text(ch: &QCharacter) -> String {
    ch.iter().map(|(m, e)| if e == 1 { format!("{m}\n") } else { format!("{e} {m}\n") }).collect()
}

fn char_value(ch: &QCharacter) -> Value {
    serde_json::from_str(&ch.to_json()).expect("character JSON is valid")
}

fn qchar(alg: &str, m: &str, json: bool, factor: bool) -> Outcome {
    let alg = algebra(alg)?;
    let top = monomial(m)?;
    let model = PathModel::new(alg)?;
    let whole = snake_qchar(&model, &top)?;
    if !factor {
        return Ok(if json { whole.to_json() + "\n" } else { char_text(&whole) });
    }
    let parts = SnakeSeq::from_monomial(alg, &top)?.prime_split()?;
    let chars =
        parts.iter().map(|s| snakepath::snake::seq_qchar(&model, s)).collect::<Result<Vec<_>, _>>()?;
    if json {
        let factors: Vec<Value> = parts
            .iter()
            .zip(&chars)
            .map(|(s, c)| serde_json::json!({ "snake": s.to_string(), "character": char_value(c) }))
            .collect();
        let v = serde_json::json!({ "factors": factors, "product": char_value(&whole) });
        return Ok(v.to_string() + "\n");
    }
    let mut out = String::new();
    for (ix, (s, c)) in parts.iter().zip(&chars).enumerate() {
        out += &format!("# factor {}: {s}, {} terms\n", ix + 1, c.len());
        out += &char_text(c);
    }
    out += &format!("# product: {} terms\n", whole.len());
    out += &char_text(&whole);
    Ok(out)
}

fn classify(alg: &str, m: &str) -> Outcome {
    let alg = algebra(alg)?;
    let seq = SnakeSeq::from_monomial(alg, &monomial(m)?)?;
    let tame = seq.is_extended_snake();
    let mut out = format!("snake: {seq}\ntame: {tame}\nthin: {tame}\n");
    for w in seq.points().windows(2) {
        out += &format!("{} -> {}: {:?}\n", w[0], w[1], position_class(&alg, w[0], w[1])?);
    }
    Ok(out)
}

fn tableaux(file: &PathBuf, enumerate: bool, dominant: bool, mono: bool, reduce: bool) -> Outcome {
    let d = SkewDiagram::from_json(&read(file)?)?;
    if dominant {
        return Ok(d.dominant_tableau()?.grid());
    }
    if mono {
        return Ok(format!("{}\n", d.dominant_monomial()?));
    }
    if reduce {
        return Ok(d.related_generic()?.to_json() + "\n");
    }
    if enumerate {
        let mut out = String::new();
        let mut ix = 0;
        d.for_each_tableau(|t| {
            ix += 1;
            out += &format!("# {ix}: {}\n{}", t.monomial(), t.grid());
        });
        return Ok(out);
    }
    Ok(format!(
        "columns: {}\nboxes: {}\ngeneric: {}\ntableaux: {}\ndominant monomial: {}\n",
        d.num_columns(),
        d.num_boxes(),
        d.is_generic(),
        d.count_tableaux(),
        d.dominant_monomial()?
    ))
}

fn verify(alg: &str, m: &str, against: Option<&PathBuf>) -> Outcome {
    let alg = algebra(alg)?;
    let top = monomial(m)?;
    let ch = match against {
        Some(file) => QCharacter::from_json(&read(file)?)?,
        None => snake_qchar(&PathModel::new(alg)?, &top)?,
    };
    let members: Vec<Monomial> =
        ch.iter().flat_map(|(m, e)| std::iter::repeat_n(m.clone(), e as usize)).collect();
    let verdict = verify_thin_criteria(&alg, &top, &members);
    if verdict.passed() {
        Ok(format!("{verdict}\n"))
    } else {
        Err(Failure::Verification(verdict.to_string()))
    }
}

fn owners(text: &str) -> Result<Vec<SpectralPoint>, Failure> {
    let bad = || Failure::Input(format!("bad point list {text:?}, expected \"(i,k) (i,k) ...\""));
    let cleaned: String = text.chars().map(|c| if "(),".contains(c) { ' ' } else { c }).collect();
    let nums: Vec<i32> =
        cleaned.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| bad())?;
    if nums.len() % 2 != 0 {
        return Err(bad());
    }
    nums.chunks(2)
        .map(|c| u32::try_from(c[0]).map(|i| SpectralPoint::new(i, c[1])).map_err(|_| bad()))
        .collect()
}

fn render_cmd(
    alg: Option<&str>,
    paths: Option<&PathBuf>,
    points: Option<&str>,
    lowest: bool,
    tab: Option<&PathBuf>,
    svg: bool,
) -> Outcome {
    if let Some(file) = tab {
        let t = Tableau::from_json(&read(file)?)?;
        return Ok(if svg { render::tableau_svg(&t) } else { t.grid() });
    }
    let alg = algebra(alg.ok_or_else(|| Failure::Input("--type is required for paths".into()))?)?;
    let model = PathModel::new(alg)?;
    let tuple: Vec<Path> = match (paths, points) {
        (Some(file), _) => {
            let items: Vec<Value> =
                serde_json::from_str(&read(file)?).map_err(|e| Failure::Input(e.to_string()))?;
            let tuple =
                items.iter().map(|v| Path::from_json(&v.to_string())).collect::<Result<Vec<_>, _>>()?;
            for p in &tuple {
                let set = model.paths(p.owner)?;
                if set.find(&p.monomial(&alg)?).map(|ix| &set.paths[ix]) != Some(p) {
                    return Err(Failure::Domain(format!("{p} is not a path of {}", p.owner)));
                }
            }
            tuple
        }
        (None, Some(text)) => owners(text)?
            .into_iter()
            .map(|o| if lowest { model.lowest_path(o) } else { model.highest_path(o) })
            .collect::<Result<_, _>>()?,
        (None, None) => Vec::new(),
    };
    Ok(if svg { render::paths_svg(&alg, &tuple) } else { render::paths_ascii(&alg, &tuple) })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Qchar { algebra, m, json, text: _, factor } => qchar(&algebra, &m, json, factor),
        Command::Classify { algebra, m } => classify(&algebra, &m),
        Command::Tableaux { diagram, enumerate, dominant, monomial, reduce } => {
            tableaux(&diagram, enumerate, dominant, monomial, reduce)
        }
        Command::Verify { algebra, m, against } => verify(&algebra, &m, against.as_ref()),
        Command::Render { algebra, paths, owners, lowest, tableau, svg } => {
            render_cmd(algebra.as_deref(), paths.as_ref(), owners.as_deref(), lowest, tableau.as_ref(), svg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
