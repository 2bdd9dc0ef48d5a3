use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use blockhh::{
    block_decomposition, brauer_feit_term, c_max_subgroups, report_to_csv, report_to_json,
    run_verify, BoundTable, CampaignConfig, FiniteField, GroupAlgebra,
};

#[derive(Parser)]
#[command(
    name = "blockhh",
    about = "Block decompositions, Hochschild cohomology, and defect-based dimension bounds \
             for group algebras of small finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a group algebra into blocks with defect groups
    Blocks(BlocksArgs),
    /// Hochschild cohomology dimensions of every block
    Hh(HhArgs),
    /// Evaluate the bound f(n, d) for one prime
    Bound(BoundArgs),
    /// Largest subgroup count among catalog groups of order p^d
    Cmax(CmaxArgs),
    /// Run the full verification campaign over a catalog
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GroupSelection {
    /// Group name from the catalog, or path to a group file
    #[arg(long)]
    group: String,
    /// Field characteristic
    #[arg(short)]
    p: u64,
    /// Field extension degree (defaults to the least splitting degree)
    #[arg(short)]
    m: Option<u32>,
    /// Catalog directory used to resolve group names
    #[arg(long, default_value = "data/catalog")]
    catalog: PathBuf,
}

#[derive(Args)]
struct BlocksArgs {
    #[command(flatten)]
    selection: GroupSelection,
}

#[derive(Args)]
struct HhArgs {
    #[command(flatten)]
    selection: GroupSelection,
    /// Largest cohomological degree to compute
    #[arg(long)]
    max_n: usize,
}

#[derive(Args)]
struct BoundArgs {
    /// Field characteristic
    #[arg(short)]
    p: u64,
    /// Cohomological degree
    #[arg(short)]
    n: usize,
    /// Defect
    #[arg(short)]
    d: u32,
    /// Catalog directory holding the subgroup-count manifests
    #[arg(long, default_value = "data/catalog")]
    catalog: PathBuf,
}

#[derive(Args)]
struct CmaxArgs {
    /// Field characteristic
    #[arg(short)]
    p: u64,
    /// Defect
    #[arg(short)]
    d: u32,
    /// Catalog directory holding the subgroup-count manifests
    #[arg(long, default_value = "data/catalog")]
    catalog: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog directory of group files and manifests
    #[arg(long, default_value = "data/catalog")]
    catalog: PathBuf,
    /// Largest group order to include
    #[arg(long, default_value_t = 16)]
    max_order: usize,
    /// Largest cohomological degree to check
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Write the report to this file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also run the structural lemma checks per block
    #[arg(long)]
    check_lemmas: bool,
    /// Emit the report as JSON (default)
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the report as CSV
    #[arg(long)]
    csv: bool,
    /// Multiply every field degree by this factor (sanity: results must not change)
    #[arg(long, default_value_t = 1)]
    field_scale: u32,
    /// Comma-separated list of primes
    #[arg(long, default_value = "2,3", value_delimiter = ',')]
    primes: Vec<u64>,
}

fn load_algebra(sel: &GroupSelection) -> blockhh::Result<GroupAlgebra> {
    let group = blockhh::catalog::find_group(&sel.catalog, &sel.group)?;
    let m = match sel.m {
        Some(m) => m,
        None => blockhh::splitting_degree(&group, sel.p),
    };
    let field = FiniteField::new(sel.p, m)?;
    Ok(GroupAlgebra::new(group, field))
}

fn print_blocks(ga: &GroupAlgebra) -> blockhh::Result<Vec<blockhh::Block>> {
    let f = &ga.field;
    println!(
        "group {}  order {}  p={}  field GF({}^{}) = GF({})",
        ga.group.name,
        ga.group.order,
        f.p(),
        f.p(),
        f.degree(),
        f.order()
    );
    let blocks = block_decomposition(ga)?;
    for b in &blocks {
        println!(
            "block {}: dim {}, centerDim {}, defect {} (defect group order {})",
            b.index,
            b.dim,
            b.center_dim,
            b.defect,
            b.defect_group.order()
        );
    }
    Ok(blocks)
}

fn cmd_blocks(args: &BlocksArgs) -> blockhh::Result<()> {
    let ga = load_algebra(&args.selection)?;
    print_blocks(&ga)?;
    Ok(())
}

fn cmd_hh(args: &HhArgs) -> blockhh::Result<()> {
    let ga = load_algebra(&args.selection)?;
    let blocks = print_blocks(&ga)?;
    let res = blockhh::cohomology::trivial_resolution(
        &ga,
        args.max_n + 1,
        blockhh::resolution::RESOLUTION_CAP,
    )?;
    for b in &blocks {
        let hh = blockhh::cohomology::hochschild_dims(&ga, &res, &b.subspace, args.max_n)?;
        let rendered: Vec<String> = hh.iter().map(|d| d.to_string()).collect();
        println!("block {}: hh = [{}]", b.index, rendered.join(", "));
    }
    Ok(())
}

fn cmd_bound(args: &BoundArgs) -> blockhh::Result<()> {
    if args.n == 0 {
        // degree 0 needs no subgroup counts: print the exact seed value
        println!("{}", brauer_feit_term(args.p, args.d));
        return Ok(());
    }
    let table = BoundTable::build(args.p, args.n, args.d, &args.catalog)?;
    match table.f(args.n, args.d) {
        Some(v) => {
            println!("{v}");
            Ok(())
        }
        None => Err(blockhh::Error::CUnavailable { p: args.p, d: args.d }),
    }
}

fn cmd_cmax(args: &CmaxArgs) -> blockhh::Result<()> {
    match c_max_subgroups(args.p, args.d, &args.catalog)? {
        Some(c) => {
            println!("{c}");
            Ok(())
        }
        None => Err(blockhh::Error::CUnavailable { p: args.p, d: args.d }),
    }
}

fn cmd_verify(args: &VerifyArgs) -> blockhh::Result<bool> {
    let config = CampaignConfig {
        primes: args.primes.clone(),
        max_order: args.max_order,
        max_n: args.max_n,
        catalog: args.catalog.display().to_string(),
        field_scale: args.field_scale,
        check_lemmas: args.check_lemmas,
        ..Default::default()
    };
    let report = run_verify(&config)?;
    let rendered = if args.csv {
        report_to_csv(&report)
    } else {
        report_to_json(&report)
    };
    if let Some(out) = &args.out {
        std::fs::write(out, &rendered).map_err(|e| blockhh::Error::Catalog {
            file: out.display().to_string(),
            reason: e.to_string(),
        })?;
        println!("report written to {}", out.display());
    } else {
        print!("{rendered}");
    }
    let failures = report.failure_count();
    let lemma_failures = report
        .lemma_checks
        .iter()
        .filter(|r| r.status == "fail")
        .count();
    println!(
        "checked {} blocks ({} lemma records): {} bound failures, {} lemma failures",
        report.results.len(),
        report.lemma_checks.len(),
        failures,
        lemma_failures
    );
    Ok(failures == 0 && lemma_failures == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: blockhh::Result<bool> = match &cli.command {
        Command::Blocks(args) => cmd_blocks(args).map(|()| true),
        Command::Hh(args) => cmd_hh(args).map(|()| true),
        Command::Bound(args) => cmd_bound(args).map(|()| true),
        Command::Cmax(args) => cmd_cmax(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
