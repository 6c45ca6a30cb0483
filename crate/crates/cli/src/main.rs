mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thompson_links::linkdiag::{self, render, SignConvention, BRACKET_CAP};
use thompson_links::linkgroup::{abelianization, grid_presentation, half_grid_presentation};
use thompson_links::verify::{verify_suite, VerifyOptions};
use thompson_links::{Exec, GridDiagram};

use input::{domain, CliError, Input, Source};

#[derive(Parser, Debug)]
#[command(name = "tlinks", version, about = "Half grid diagrams, grid diagrams and link invariants from Thompson group elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print both half grids and the assembled grid
    Build {
        #[command(flatten)]
        source: Source,
        /// Assemble without requiring compatibility
        #[arg(long)]
        unoriented: bool,
        /// Reduce a tree pair before building
        #[arg(long)]
        reduce: bool,
    },
    /// Draw a grid, a half grid tangle or a front
    Render {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Part::Grid)]
        part: Part,
        /// Use 7-bit characters only
        #[arg(long)]
        ascii_only: bool,
        #[arg(long)]
        unoriented: bool,
        #[arg(long)]
        reduce: bool,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Components, crossings, writhe, tb, rot, Seifert data and the Kauffman bracket
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        unoriented: bool,
        #[arg(long)]
        reduce: bool,
    },
    /// Link group presentation and its abelianization
    Group {
        #[command(flatten)]
        source: Source,
        /// Emit GAP input instead of the plain listing
        #[arg(long)]
        gap: bool,
        #[arg(long)]
        reduce: bool,
    },
    /// Permutations of the two half grids
    Encode {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        reduce: bool,
    },
    /// Run the exhaustive checks over all trees up to a leaf count
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=8))]
        max_leaves: u8,
        /// Disable data parallelism
        #[arg(long)]
        sequential: bool,
        /// Read crossing signs backwards (harness self-test)
        #[arg(long, hide = true)]
        flipped_signs: bool,
    },
    /// Write the grid in its text format
    Export {
        #[command(flatten)]
        source: Source,
        /// Turn the grid a quarter turn counterclockwise first
        #[arg(long)]
        rotate90: bool,
        #[arg(long)]
        unoriented: bool,
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Ascii,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Part {
    Grid,
    Top,
    Bottom,
    Front,
}

/// Command output plus the exit code to finish with.
struct Outcome {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, code: 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(text: String, out: Option<PathBuf>) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| domain(format!("{}: {e}", path.display())))?;
            ok(String::new())
        }
        None => ok(text),
    }
}

fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Build { source, unoriented, reduce } => build(&source.resolve(reduce)?, unoriented),
        Command::Render { source, format, part, ascii_only, unoriented, reduce, out } => {
            let input = source.resolve(reduce)?;
            emit(render_part(&input, format, part, ascii_only, unoriented)?, out)
        }
        Command::Invariants { source, unoriented, reduce } => invariants(&source.resolve(reduce)?.grid(unoriented)?),
        Command::Group { source, gap, reduce } => group(&source.resolve(reduce)?, gap),
        Command::Encode { source, reduce } => match source.resolve(reduce)? {
            Input::Halves { top, bottom, .. } => ok(format!("plus: {}\nminus: {}\n", top.perm_encode(), bottom.perm_encode())),
            Input::Grid(_) => Err(domain("encode needs two half grids, not a full grid")),
        },
        Command::Verify { max_leaves, sequential, flipped_signs } => {
            let opts = VerifyOptions {
                max_leaves: max_leaves as usize,
                exec: if sequential { Exec::Sequential } else { Exec::Parallel },
                convention: if flipped_signs { SignConvention::Flipped } else { SignConvention::RightHanded },
            };
            let report = verify_suite(opts);
            Ok(Outcome { text: report.to_string(), code: if report.passed() { 0 } else { 3 } })
        }
        Command::Export { source, rotate90, unoriented, reduce, out } => {
            let g = source.resolve(reduce)?.grid(unoriented)?;
            let g = if rotate90 { g.rotate90() } else { g };
            emit(format!("{g}\n"), out)
        }
    }
}

fn build(input: &Input, unoriented: bool) -> Result<Outcome, CliError> {
    let mut s = String::new();
    if let Input::Halves { top, bottom, pair } = input {
        if let Some(p) = pair {
            let _ = writeln!(s, "pair: {p}");
            let _ = writeln!(s, "n-signs: {} | {}", p.top().leaf_signs(), p.bottom().leaf_signs());
            let _ = writeln!(s, "oriented element: {}", p.is_oriented());
        }
        let _ = writeln!(s, "top: {top}");
        let _ = writeln!(s, "bottom: {bottom}");
        let _ = writeln!(s, "compatible: {}", top.is_compatible(bottom).map_err(domain)?);
    }
    let g = input.grid(unoriented)?;
    let _ = writeln!(s, "grid: {g}");
    s.push('\n');
    s.push_str(&render::grid_text(&g, false));
    ok(s)
}

fn render_part(input: &Input, format: Format, part: Part, ascii_only: bool, unoriented: bool) -> Result<String, CliError> {
    let half = |top: bool| match input {
        Input::Halves { top: t, bottom: b, .. } => Ok(if top { t.clone() } else { b.clone() }),
        Input::Grid(_) => Err(domain("a full grid has no half grids to draw")),
    };
    Ok(match (part, format) {
        (Part::Top | Part::Bottom, Format::Text) => format!("{}\n", half(part == Part::Top)?),
        (Part::Top | Part::Bottom, Format::Ascii) => render::half_grid_text(&half(part == Part::Top)?, ascii_only),
        (Part::Top | Part::Bottom, Format::Svg) => render::half_grid_svg(&half(part == Part::Top)?),
        (Part::Grid, Format::Text) => format!("{}\n", input.grid(unoriented)?),
        (Part::Grid, Format::Ascii) => render::grid_text(&input.grid(unoriented)?, ascii_only),
        (Part::Grid, Format::Svg) => render::grid_svg(&input.grid(unoriented)?),
        (Part::Front, Format::Svg) => render::front_svg(&input.grid(unoriented)?),
        (Part::Front, _) => return Err(domain("fronts are drawn as SVG only")),
    })
}

fn invariants(g: &GridDiagram) -> Result<Outcome, CliError> {
    let mut s = String::new();
    let o = g.orient();
    let comps = linkdiag::components(g);
    let _ = writeln!(s, "size: {}", g.size());
    let _ = writeln!(s, "oriented: {}", g.is_oriented());
    let _ = writeln!(s, "components: {}", comps.count());
    let cycles: Vec<String> = comps
        .cycles
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(s, "component columns: {}", cycles.join(" "));
    let cs = linkdiag::crossings(&o).map_err(domain)?;
    let _ = writeln!(s, "crossings: {}", cs.len());
    let f = linkdiag::front_stats(&o).map_err(domain)?;
    let _ = writeln!(s, "writhe: {}", f.writhe);
    let _ = writeln!(s, "cusps: {} (up {}, down {})", f.cusps, f.up_cusps, f.down_cusps);
    let _ = writeln!(s, "tb: {}", f.tb);
    let _ = writeln!(s, "rot: {}", f.rot);
    let st = linkdiag::seifert_stats(&o).map_err(domain)?;
    let _ = writeln!(s, "seifert circles: {}", st.circles);
    let _ = writeln!(s, "seifert euler: {}", st.euler);
    if cs.len() > BRACKET_CAP {
        let _ = writeln!(s, "bracket: skipped ({} crossings > {BRACKET_CAP})", cs.len());
    } else {
        let _ = writeln!(s, "bracket: {}", linkdiag::kauffman_bracket(g).map_err(domain)?);
    }
    ok(s)
}

fn group(input: &Input, gap: bool) -> Result<Outcome, CliError> {
    let p = match input {
        Input::Halves { top, bottom, .. } => {
            half_grid_presentation(&top.perm_encode(), &bottom.perm_encode()).map_err(domain)?
        }
        Input::Grid(g) => grid_presentation(g),
    };
    if gap {
        return ok(p.to_gap());
    }
    ok(format!("{p}abelianization: {}\n", abelianization(&p)))
}
