//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the process exit code: 0 on success, 1 when a check fails, 2 on
//! a usage or input error.

use crate::error::{Error, Result};
use crate::files::{CodeFile, GroupFile};
use crate::groups::parse_group;
use crate::report::{to_json, ParamsJson};
use crate::search::golay_report;
use crate::sweep::{sweep_report, Engine, Generators};
use crate::verify::{verify, VerifyKind, VerifyOptions};
use clap::{Args, Parser, Subcommand};
use gcodelab_core::constructions::{reed_muller, rm_schur_square_check, RmSpec};
use gcodelab_core::schur::{fixed_point_structure, schur_power_chain, schur_product};
use gcodelab_core::{AlgElem, Fp, GCode, Group, GroupAlgebra, ParamReport, DEFAULT_GUARD};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "gcodelab",
    version,
    about = "Group codes: ideals of F_p G under the Hamming metric"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Largest number of codewords a distance computation may enumerate.
    #[arg(long, global = true, env = "GCODELAB_GUARD", value_parser = clap::value_parser!(u64).range(1..))]
    guard: Option<u64>,
    /// Seed for every random choice (sampling, shuffles, search).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build or inspect groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Ideals, parameters and duals.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Named code families.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Component-wise products of ideals.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Check the structural statements over cyclic ideals of a group algebra.
    Verify(VerifyArgs),
    /// Searches and parameter sweeps.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Debug, Args)]
struct GroupArg {
    /// `cyclic:n`, `dihedral:m`, `symmetric:k`, `quaternion`, `elemabelian:p,m`,
    /// `trivial`, products joined by `*`, or a group JSON file.
    #[arg(long)]
    group: String,
}

#[derive(Debug, Args)]
struct FieldArg {
    /// Characteristic of the prime field.
    #[arg(long = "p", visible_alias = "field")]
    p: u32,
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write the result as a JSON file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CodeInput {
    /// Read the code from a code JSON file.
    #[arg(long, conflicts_with_all = ["group", "p", "gens"])]
    code: Option<PathBuf>,
    #[arg(long, required_unless_present = "code")]
    group: Option<String>,
    #[arg(long = "p", visible_alias = "field", required_unless_present = "code")]
    p: Option<u32>,
    /// Generator coefficients in group-index order, e.g. `1,2`; repeat for
    /// more generators.
    #[arg(long = "gen", required_unless_present = "code")]
    gens: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum GroupCmd {
    /// Write a group JSON file.
    Make {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// List elements with orders and inverses.
    Show {
        #[command(flatten)]
        group: GroupArg,
    },
}

#[derive(Debug, Subcommand)]
enum CodeCmd {
    /// The right ideal generated by the given elements.
    Ideal {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        out: OutArg,
    },
    /// Length, dimension, minimum distance and the product bound.
    Params {
        #[command(flatten)]
        input: CodeInput,
    },
    /// The Euclidean dual.
    Dual {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        out: OutArg,
    },
    /// The code spanned by the right coset sums of a subgroup.
    Induced {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArg,
        /// Element indices generating the subgroup, e.g. `1` or `2,3`.
        #[arg(long, default_value = "")]
        subgroup: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// Reed-Muller code RM(r, m) as an ideal of F_2 (Z/2)^m.
    Rm {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
enum SchurCmd {
    /// The ideal spanned by products of codewords of two ideals.
    Product {
        #[command(flatten)]
        input: CodeInput,
        /// Generators of the second ideal (default: the first ideal).
        #[arg(long = "with")]
        with: Vec<String>,
    },
    /// The chain C, C*C, C*C*C, ... until it repeats.
    Power {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long, default_value_t = 64)]
        max_t: usize,
    },
    /// The subgroup H with C = K_H^G for an ideal with C*C = C.
    FixedPoint {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    kind: VerifyKind,
    #[command(flatten)]
    group: GroupArg,
    #[command(flatten)]
    field: FieldArg,
    /// Run over every generator f instead of a seeded sample.
    #[arg(long)]
    exhaustive: bool,
    /// Sample size when not exhaustive.
    #[arg(long, default_value_t = 256)]
    sample: usize,
    #[arg(long, hide = true)]
    inject_fault: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum SearchCmd {
    /// Seeded search for a self-dual [24, 12, 8] principal ideal.
    Golay {
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value = "symmetric:4")]
        group: String,
    },
    /// One row per distinct cyclic ideal, best d·k/|G| first.
    Sweep {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        field: FieldArg,
        /// Use a seeded sample of this many generators instead of all.
        #[arg(long)]
        sample: Option<usize>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Ctx<'a> {
    json: bool,
    engine: Engine,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        let s = if self.json { to_json(value) } else { text() };
        writeln!(self.out, "{}", s.trim_end()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let engine = Engine::new(
        cli.threads.map(|t| t as usize),
        cli.guard.unwrap_or(DEFAULT_GUARD),
        cli.seed,
    )?;
    let mut ctx = Ctx {
        json: cli.json,
        engine,
        out,
    };
    match &cli.command {
        Command::Group(cmd) => group_cmd(&mut ctx, cmd),
        Command::Code(cmd) => code_cmd(&mut ctx, cmd),
        Command::Construct(cmd) => construct_cmd(&mut ctx, cmd),
        Command::Schur(cmd) => schur_cmd(&mut ctx, cmd),
        Command::Verify(args) => verify_cmd(&mut ctx, args),
        Command::Search(cmd) => search_cmd(&mut ctx, cmd),
    }
}

fn field(p: u32) -> Result<Fp> {
    Ok(Fp::new(p)?)
}

/// A resolved [`CodeInput`]: the group is owned here and codes borrow it.
struct Setup {
    group: Group,
    field: Fp,
    /// Spec string to store in code files, when the group came from one.
    spec: Option<String>,
    file: Option<CodeFile>,
    gens: Vec<String>,
}

impl CodeInput {
    fn setup(&self) -> Result<Setup> {
        if let Some(path) = &self.code {
            let file = CodeFile::read(path)?;
            let group = file.group()?;
            let spec = match &file.group {
                crate::files::GroupRef::Spec(s) if !Path::new(s).is_file() => Some(s.clone()),
                _ => None,
            };
            return Ok(Setup {
                group,
                field: field(file.p)?,
                spec,
                file: Some(file),
                gens: Vec::new(),
            });
        }
        let spec = self.group.as_deref().expect("required by clap");
        Ok(Setup {
            group: parse_group(spec)?,
            field: field(self.p.expect("required by clap"))?,
            spec: (!Path::new(spec).is_file()).then(|| spec.to_string()),
            file: None,
            gens: self.gens.clone(),
        })
    }
}

impl Setup {
    fn alg(&self) -> GroupAlgebra<'_> {
        GroupAlgebra::new(&self.group, self.field)
    }

    fn parse_all(&self, texts: &[String]) -> Result<Vec<AlgElem<'_>>> {
        let alg = self.alg();
        Ok(texts
            .iter()
            .map(|t| alg.parse(t))
            .collect::<std::result::Result<_, _>>()?)
    }

    fn code(&self) -> Result<GCode<'_>> {
        match &self.file {
            Some(file) => file.to_code(&self.group),
            None => Ok(GCode::ideal_from_generators(
                self.alg(),
                &self.parse_all(&self.gens)?,
            )?),
        }
    }

    fn save(&self, code: &GCode<'_>, out: &OutArg) -> Result<()> {
        if let Some(path) = &out.out {
            CodeFile::from_code(code, self.spec.as_deref()).write(path)?;
        }
        Ok(())
    }
}

fn basis_rows(code: &GCode<'_>) -> Vec<Vec<u32>> {
    code.basis().rows().map(<[u32]>::to_vec).collect()
}

fn rows_text(rows: &[Vec<u32>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            let xs: Vec<String> = r.iter().map(u32::to_string).collect();
            format!("[{}]", xs.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

#[derive(Serialize)]
struct CodeView {
    group: String,
    p: u32,
    n: usize,
    k: usize,
    basis: Vec<Vec<u32>>,
}

impl CodeView {
    fn new(code: &GCode<'_>) -> Self {
        let alg = code.algebra();
        CodeView {
            group: alg.group().name().to_string(),
            p: alg.field().p(),
            n: code.length(),
            k: code.dim(),
            basis: basis_rows(code),
        }
    }

    fn text(&self) -> String {
        format!(
            "{} over F_{}: n={} k={}\nbasis {}",
            self.group,
            self.p,
            self.n,
            self.k,
            rows_text(&self.basis)
        )
    }
}

fn params_text(r: &ParamReport) -> String {
    match (r.min_distance, r.product) {
        (Some(d), Some(dk)) => format!(
            "n={} k={} d={d}\nbound {d}·{} = {dk} ≥ {}: {}\nequality: {}",
            r.length,
            r.dimension,
            r.dimension,
            r.length,
            if r.bound_ok { "ok" } else { "VIOLATED" },
            if r.equality { "yes" } else { "no" },
        ),
        _ => format!("n={} k=0 (zero code, no minimum distance)", r.length),
    }
}

fn group_cmd(ctx: &mut Ctx<'_>, cmd: &GroupCmd) -> Result<i32> {
    match cmd {
        GroupCmd::Make { group, out } => {
            let g = parse_group(&group.group)?;
            let file = GroupFile::from_group(&g);
            match &out.out {
                Some(path) => {
                    file.write(path)?;
                    ctx.emit(&file, || {
                        format!(
                            "wrote {} (order {}) to {}",
                            g.name(),
                            g.order(),
                            path.display()
                        )
                    })?;
                }
                None => ctx.emit(&file, || to_json(&file))?,
            }
        }
        GroupCmd::Show { group } => {
            let g = parse_group(&group.group)?;
            let file = GroupFile::from_group(&g);
            ctx.emit(&file, || {
                let mut s = format!("{} of order {}\n", g.name(), g.order());
                let gens: Vec<&str> = g.generators().iter().map(|&x| g.label(x)).collect();
                s += &format!("generators: {}\n", gens.join(", "));
                s += "index  label  order  inverse\n";
                for i in 0..g.order() {
                    s += &format!(
                        "{i:>5}  {:>5}  {:>5}  {:>7}\n",
                        g.label(i),
                        g.element_order(i),
                        g.label(g.inv(i))
                    );
                }
                s
            })?;
        }
    }
    Ok(0)
}

fn code_cmd(ctx: &mut Ctx<'_>, cmd: &CodeCmd) -> Result<i32> {
    match cmd {
        CodeCmd::Ideal { input, out } => {
            let setup = input.setup()?;
            let code = setup.code()?;
            setup.save(&code, out)?;
            let view = CodeView::new(&code);
            ctx.emit(&view, || view.text())?;
        }
        CodeCmd::Params { input } => {
            let setup = input.setup()?;
            let code = setup.code()?;
            let report = code.params(ctx.engine.guard())?;
            ctx.emit(&ParamsJson::from(&report), || params_text(&report))?;
        }
        CodeCmd::Dual { input, out } => {
            let setup = input.setup()?;
            let dual = setup.code()?.dual()?;
            setup.save(&dual, out)?;
            let view = CodeView::new(&dual);
            ctx.emit(&view, || view.text())?;
        }
        CodeCmd::Induced {
            group,
            field: p,
            subgroup,
            out,
        } => {
            let g = parse_group(&group.group)?;
            let alg = GroupAlgebra::new(&g, field(p.p)?);
            let seeds = parse_indices(subgroup)?;
            let h = g.subgroup_generated(&seeds)?;
            let code = GCode::trivial_induced(alg, &h)?;
            let spec = (!Path::new(&group.group).is_file()).then_some(group.group.as_str());
            if let Some(path) = &out.out {
                CodeFile::from_code(&code, spec).write(path)?;
            }
            let view = CodeView::new(&code);
            ctx.emit(&view, || view.text())?;
        }
    }
    Ok(0)
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Usage(format!("`{s}` is not an element index")))
        })
        .collect()
}

#[derive(Serialize)]
struct RmView {
    r: usize,
    m: usize,
    params: ParamsJson,
    expected_k: usize,
    expected_d: usize,
    square_dim: Option<usize>,
    square_is_rm_2r: Option<bool>,
    self_orthogonal: Option<bool>,
    strictly_inside_augmentation: Option<bool>,
    basis: Vec<Vec<u32>>,
}

fn construct_cmd(ctx: &mut Ctx<'_>, cmd: &ConstructCmd) -> Result<i32> {
    let ConstructCmd::Rm { r, m, out } = cmd;
    let spec = RmSpec::new(*r, *m)?;
    let g = Group::elementary_abelian(2, *m)?;
    let alg = GroupAlgebra::new(&g, Fp::binary());
    let code = reed_muller(alg, spec)?;
    if let Some(path) = &out.out {
        CodeFile::from_code(&code, Some(&format!("elemabelian:2,{m}"))).write(path)?;
    }
    let params = code.params(ctx.engine.guard())?;
    let square = if 2 * r <= *m {
        Some(rm_schur_square_check(alg, spec)?)
    } else {
        None
    };
    let ok = params.dimension == spec.dimension()
        && params.min_distance == Some(spec.min_distance())
        && square.as_ref().is_none_or(|s| s.holds());
    let view = RmView {
        r: *r,
        m: *m,
        params: ParamsJson::from(&params),
        expected_k: spec.dimension(),
        expected_d: spec.min_distance(),
        square_dim: square.as_ref().map(|s| s.square_dim),
        square_is_rm_2r: square.as_ref().map(|s| s.square_is_rm_2r),
        self_orthogonal: square.as_ref().and_then(|s| s.self_orthogonal),
        strictly_inside_augmentation: square.as_ref().and_then(|s| s.strictly_inside_augmentation),
        basis: basis_rows(&code),
    };
    ctx.emit(&view, || {
        let mut s = format!("RM({r},{m})\n{}\n", params_text(&params));
        if let Some(sq) = &square {
            s += &format!(
                "square: dim {} (RM({},{m}): {})\n",
                sq.square_dim,
                2 * r,
                sq.square_is_rm_2r
            );
        }
        s + &format!("basis {}", rows_text(&view.basis))
    })?;
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct ChainView {
    dims: Vec<usize>,
    status: String,
    cycle_start: Option<usize>,
    period: Option<usize>,
    regularity: Option<usize>,
    stabilizer: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct SubgroupView {
    order: usize,
    members: Vec<usize>,
    labels: Vec<String>,
}

fn schur_cmd(ctx: &mut Ctx<'_>, cmd: &SchurCmd) -> Result<i32> {
    match cmd {
        SchurCmd::Product { input, with } => {
            let setup = input.setup()?;
            let a = setup.code()?;
            let b = if with.is_empty() {
                a.clone()
            } else {
                GCode::ideal_from_generators(setup.alg(), &setup.parse_all(with)?)?
            };
            let view = CodeView::new(&schur_product(&a, &b)?);
            ctx.emit(&view, || view.text())?;
        }
        SchurCmd::Power { input, max_t } => {
            let setup = input.setup()?;
            let rep = schur_power_chain(&setup.code()?, *max_t, ctx.engine.guard())?;
            let view = ChainView {
                dims: rep.dims.clone(),
                status: format!("{:?}", rep.status).to_lowercase(),
                cycle_start: rep.cycle_start,
                period: rep.period,
                regularity: rep.regularity,
                stabilizer: rep
                    .stabilizer_subgroup
                    .as_ref()
                    .map(|h| h.members().to_vec()),
            };
            ctx.emit(&view, || {
                let mut s = format!("dims {:?}\nstatus {}", view.dims, view.status);
                if let (Some(start), Some(period)) = (view.cycle_start, view.period) {
                    s += &format!(" (from t={start}, period {period})");
                }
                if let Some(r) = view.regularity {
                    s += &format!("\nregularity {r}");
                }
                if let Some(h) = &rep.stabilizer_subgroup {
                    let labels: Vec<&str> =
                        h.members().iter().map(|&x| setup.group.label(x)).collect();
                    s += &format!("\nlimit K_H^G with H = {{{}}}", labels.join(", "));
                }
                s
            })?;
        }
        SchurCmd::FixedPoint { input } => {
            let setup = input.setup()?;
            let h = fixed_point_structure(&setup.code()?, ctx.engine.guard())?;
            let view = SubgroupView {
                order: h.order(),
                members: h.members().to_vec(),
                labels: h
                    .members()
                    .iter()
                    .map(|&x| setup.group.label(x).to_string())
                    .collect(),
            };
            ctx.emit(&view, || {
                format!(
                    "C = K_H^G with H = {{{}}} of order {}",
                    view.labels.join(", "),
                    view.order
                )
            })?;
        }
    }
    Ok(0)
}

fn verify_cmd(ctx: &mut Ctx<'_>, args: &VerifyArgs) -> Result<i32> {
    let g = parse_group(&args.group.group)?;
    let alg = GroupAlgebra::new(&g, field(args.field.p)?);
    let gens = if args.exhaustive {
        Generators::exhaustive(alg)?
    } else {
        Generators::sampled(alg, args.sample, ctx.engine.seed())
    };
    let opts = VerifyOptions {
        kind: args.kind,
        inject_fault: args.inject_fault,
    };
    let report = verify(&ctx.engine, alg, &gens, &opts)?;
    ctx.emit(&report, || {
        let mut s = format!(
            "{} over F_{}: {} checks, {} failures\n",
            g.name(),
            args.field.p,
            report.checked,
            report.failures.len()
        );
        for f in &report.failures {
            s += &format!(
                "FAIL {} f#{} [{}]: {}\n",
                f.check, f.index, f.generator, f.detail
            );
        }
        s
    })?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn search_cmd(ctx: &mut Ctx<'_>, cmd: &SearchCmd) -> Result<i32> {
    match cmd {
        SearchCmd::Golay { budget, group } => {
            let g = parse_group(group)?;
            let alg = GroupAlgebra::new(&g, Fp::binary());
            let report = golay_report(&ctx.engine, alg, *budget)?;
            ctx.emit(&report, || match (&report.generator, &report.params) {
                (Some(f), Some(p)) => format!(
                    "found at trial {} (seed {}): f = {f}\nn={} k={} d={} d·k={} self-dual: {}",
                    report.trials_run - 1,
                    report.seed,
                    p.n,
                    p.k,
                    p.d.unwrap_or(0),
                    p.dk.unwrap_or(0),
                    report.self_dual == Some(true),
                ),
                _ => format!(
                    "no [24,12,8] ideal in {} trials (seed {})",
                    report.budget, report.seed
                ),
            })?;
        }
        SearchCmd::Sweep {
            group,
            field: p,
            sample,
        } => {
            let g = parse_group(&group.group)?;
            let alg = GroupAlgebra::new(&g, field(p.p)?);
            let gens = match sample {
                Some(k) => Generators::sampled(alg, *k, ctx.engine.seed()),
                None => Generators::exhaustive(alg)?,
            };
            let report = sweep_report(&ctx.engine, alg, &gens)?;
            ctx.emit(&report, || {
                let mut s = format!(
                    "{} over F_{}: {} distinct nonzero cyclic ideals from {} generators\n",
                    report.group,
                    report.p,
                    report.rows.len(),
                    report.generators
                );
                s += "    k     d   d·k  d·k/|G|  self-orth  dim C*C  generator\n";
                for r in &report.rows {
                    s += &format!(
                        "{:>5} {:>5} {:>5} {:>8.3} {:>10} {:>8}  {}\n",
                        r.k, r.d, r.dk, r.ratio, r.self_orthogonal, r.square_dim, r.generator
                    );
                }
                s
            })?;
        }
    }
    Ok(0)
}
