use clap::{Args, Parser, Subcommand, ValueEnum};
use quadcover::absystems::dispatch::{construct_ab, exact_f_with, Method};
use quadcover::absystems::{ABInstance, Verdict};
use quadcover::designs::ingredients::{record_from_file, Provenance};
use quadcover::designs::verify::{verify_packing, verify_pair_covering, verify_sqs, verify_sts};
use quadcover::designs::Catalog;
use quadcover::general_r::RSystemInstance;
use quadcover::lottery::{
    assemble, bound_l, partition_search, residue_rule, verify_lottery, LotterySystem, LotteryVerdict,
};
use quadcover::oracle::{self, Budget, OracleResult};
use quadcover::registry::Registry;
use quadcover::{BlockSystem, DesignFile, Error};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "quadcover",
    version,
    about = "Constructions, verifiers and bounds for (A,B)-quadruple systems and (n,4,3,4)-lottery designs"
)]
struct Cli {
    /// Ingredient registry directory whose verified entries extend the bundled catalog.
    #[arg(long, global = true, env = "QUADCOVER_REGISTRY")]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lower and upper bounds for f(a,b) or L(n).
    Bounds {
        #[command(subcommand)]
        what: BoundsCmd,
    },
    /// Build a verified design and write it to a file.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Check a design file; exit 1 when it is not valid.
    Verify {
        #[arg(long, value_enum)]
        kind: VerifyKind,
        file: PathBuf,
    },
    /// Exact optimum by exhaustive search.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the witness here instead of standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Batch table of L(n) bounds with assembled and verified sizes.
    Table {
        #[command(subcommand)]
        what: TableCmd,
    },
    /// Manage the on-disk ingredient registry.
    Ingredients {
        #[command(subcommand)]
        what: IngredientsCmd,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    F {
        a: u32,
        b: u32,
    },
    #[command(name = "L", alias = "l")]
    L {
        n: u32,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    Ab {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        /// auto picks the cheapest buildable recipe.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    Lottery {
        #[arg(long)]
        n: u32,
        /// Ordered partition a,b,c of n.
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<u32>>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Ab,
    Lottery,
    R,
    Sts,
    Sqs,
    Packing,
    Covering,
    Family,
}

#[derive(Subcommand)]
enum OracleCmd {
    F {
        a: u32,
        b: u32,
        /// Block size.
        #[arg(long, default_value_t = 4)]
        r: u32,
    },
    #[command(name = "L", alias = "l")]
    L {
        n: u32,
    },
    Covering {
        a: u32,
    },
    Packing {
        a: u32,
    },
    Weight {
        a: u32,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 10_000_000, global = true)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 60.0, global = true)]
    budget_secs: f64,
}

#[derive(Subcommand)]
enum TableCmd {
    #[command(name = "L", alias = "l")]
    L {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum IngredientsCmd {
    List,
    Add { file: PathBuf },
    Verify,
}

/// An outcome with its own exit code and message.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedParameters(_) => 3,
            Error::MissingIngredient(_) => 4,
            Error::Domain(_) | Error::Io(_) => 2,
            _ => 1,
        };
        Fail(code, e.to_string())
    }
}

type Out = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}

fn default_registry() -> PathBuf {
    PathBuf::from("quadcover-registry")
}

fn run(cli: Cli) -> Out {
    let owned;
    let cat: &Catalog = match &cli.registry {
        Some(dir) if dir.exists() => {
            owned = Registry::open(dir)?.catalog();
            &owned
        }
        _ => Catalog::bundled(),
    };
    match cli.cmd {
        Cmd::Bounds { what: BoundsCmd::F { a, b } } => {
            let r = exact_f_with(a, b, cat)?;
            let upper = r.upper.map_or("none".to_string(), |u| u.to_string());
            println!(
                "lower={} upper={upper} exact={} ({} / {})",
                r.lower,
                if r.exact { "yes" } else { "no" },
                r.lower_provenance.join("+"),
                if r.upper_provenance.is_empty() { "no construction".into() } else { r.upper_provenance.join("+") },
            );
            if let Some(c) = r.constructive_upper().filter(|&c| Some(c) != r.upper) {
                println!("constructive={c}");
            }
            Ok(())
        }
        Cmd::Bounds { what: BoundsCmd::L { n } } => {
            let l = bound_l(n, cat)?;
            match &l.plan {
                Some(p) => println!("{} ({}, partition {})", l.value, l.provenance, p.label()),
                None => println!("{} ({})", l.value, l.provenance),
            }
            Ok(())
        }
        Cmd::Construct { what: ConstructCmd::Ab { a, b, method, output } } => {
            let m = match method.as_str() {
                "auto" => None,
                s => Some(s.parse::<Method>().map_err(|e| Fail(2, e.to_string()))?),
            };
            let inst = construct_ab(a, b, m, cat)?;
            write(&inst.to_file(), &output)?;
            println!("f({a},{b}) <= {} written to {}", inst.len(), output.display());
            Ok(())
        }
        Cmd::Construct { what: ConstructCmd::Lottery { n, partition, output } } => {
            let sys = match partition {
                Some(p) => {
                    if p.len() != 3 || p.iter().sum::<u32>() != n {
                        return Err(Fail(2, format!("partition {p:?} does not sum to {n}")));
                    }
                    assemble([p[0], p[1], p[2]], cat)?
                }
                None if n < 9 => {
                    let r = oracle::exact_l(n, Budget::default())?;
                    LotterySystem::new(BlockSystem::new(n, 4, r.witness)?)
                }
                None => {
                    let plan = partition_search(n, cat)?
                        .best
                        .ok_or_else(|| Fail(3, format!("no buildable partition for n = {n}")))?;
                    assemble(plan.parts, cat)?
                }
            };
            let mut f = sys.to_file();
            f.provenance = sys.partition.as_ref().map(|p| format!("partition {}", p.label()));
            write(&f, &output)?;
            println!("L({n}) <= {} written to {}", sys.len(), output.display());
            Ok(())
        }
        Cmd::Verify { kind, file } => verify(kind, &file),
        Cmd::Oracle { what, budget, output } => {
            let budget = Budget { nodes: budget.budget_nodes, secs: budget.budget_secs };
            let (label, res, file) = run_oracle(what, budget)?;
            println!("{label}: {}", res.summary());
            eprintln!("nodes={} millis={} bound={}", res.stats.nodes, res.stats.millis, res.stats.bound);
            match output {
                Some(p) => write(&file, &p)?,
                None => print!("{}", file.to_text()),
            }
            Ok(())
        }
        Cmd::Table { what: TableCmd::L { from, to, csv } } => table(from, to, csv.as_deref(), cat),
        Cmd::Ingredients { what } => ingredients(what, cli.registry.unwrap_or_else(default_registry)),
    }
}

fn write(f: &DesignFile, path: &Path) -> Out {
    f.write(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<DesignFile, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    Ok(DesignFile::parse(&text)?)
}

fn verdict(v: Verdict, what: &str, size: usize) -> Out {
    match v {
        Verdict::Valid => {
            println!("valid {what} with {size} blocks");
            Ok(())
        }
        Verdict::Uncovered(t) => Err(Fail(1, format!("invalid: triple {t:?} is not covered"))),
    }
}

fn verify(kind: VerifyKind, path: &Path) -> Out {
    let f = read(path)?;
    let simple = |check: fn(&BlockSystem) -> quadcover::Result<()>, what: &str| -> Out {
        let sys = f.system()?;
        check(&sys).map_err(|e| Fail(1, format!("invalid: {e}")))?;
        println!("valid {what} with {} blocks", sys.len());
        Ok(())
    };
    match kind {
        VerifyKind::Ab => {
            let inst = ABInstance::from_file(&f)?;
            verdict(inst.verify()?, "(A,B)-system", inst.len())
        }
        VerifyKind::R => {
            let inst = RSystemInstance::from_file(&f)?;
            verdict(inst.verify()?, &format!("r = {} system", inst.r), inst.len())
        }
        VerifyKind::Lottery => {
            let sys = f.system()?;
            match verify_lottery(&sys) {
                LotteryVerdict::Valid => {
                    println!("valid lottery system on {} points with {} blocks", sys.n(), sys.len());
                    Ok(())
                }
                LotteryVerdict::Uncovered(k) => {
                    Err(Fail(1, format!("invalid: {k:?} meets every block in at most 2 points")))
                }
            }
        }
        VerifyKind::Sts => simple(verify_sts, "STS"),
        VerifyKind::Sqs => simple(verify_sqs, "SQS"),
        VerifyKind::Packing => simple(verify_packing, "triple packing"),
        VerifyKind::Covering => simple(verify_pair_covering, "pair covering"),
        VerifyKind::Family => {
            let rec = record_from_file(&f, Provenance::UserSupplied).map_err(|e| Fail(1, format!("invalid: {e}")))?;
            println!("valid {} on {} points with {} members", rec.kind.name(), rec.n, rec.payload.len());
            Ok(())
        }
    }
}

fn run_oracle(what: OracleCmd, budget: Budget) -> Result<(String, OracleResult, DesignFile), Fail> {
    let witness = |kind: &str, n: u32, r: u32, res: &OracleResult| -> Result<DesignFile, Fail> {
        let mut f = DesignFile::single(kind, &BlockSystem::new(n, r, res.witness.clone())?);
        f.provenance = Some(format!("exact search, {}", res.summary()));
        Ok(f)
    };
    Ok(match what {
        OracleCmd::F { a, b, r } => {
            let res = oracle::exact_fr(a, b, r, budget)?;
            let kind = if r == 4 { "ab_system" } else { "r_system" };
            let f = witness(kind, a + b, r, &res)?.with_field("a", a as u64).with_field("b", b as u64);
            (format!("f({a},{b})"), res, f)
        }
        OracleCmd::L { n } => {
            let res = oracle::exact_l(n, budget)?;
            let f = witness("lottery", n, 4, &res)?;
            (format!("L({n})"), res, f)
        }
        OracleCmd::Covering { a } => {
            let res = oracle::exact_covering(a, budget)?;
            let f = witness("optimal_covering", a, 3, &res)?;
            (format!("C({a},3,2)"), res, f)
        }
        OracleCmd::Packing { a } => {
            let res = oracle::exact_packing(a, budget)?;
            let f = witness("optimal_packing", a, 3, &res)?;
            (format!("D({a},3,2)"), res, f)
        }
        OracleCmd::Weight { a } => {
            let (w, res) = oracle::exact_min_weight(a, budget)?;
            let triples: Vec<_> = res.witness.iter().filter(|b| b.len() == 3).cloned().collect();
            let mut f = DesignFile::single("triple_system", &BlockSystem::new(a, 3, triples)?);
            f.provenance = Some(format!("exact search, weight {w}"));
            (format!("2·C*({a})"), res, f)
        }
    })
}

fn table(from: u32, to: u32, csv: Option<&Path>, cat: &Catalog) -> Out {
    if from < 4 || to < from {
        return Err(Fail(2, format!("need 4 <= from <= to, got {from}..{to}")));
    }
    let sink: Box<dyn std::io::Write> = match csv {
        Some(p) => Box::new(std::fs::File::create(p).map_err(|e| Fail(2, format!("{}: {e}", p.display())))?),
        None => Box::new(std::io::stdout()),
    };
    let mut out = ::csv::Writer::from_writer(sink);
    let io = |e: ::csv::Error| Fail(2, e.to_string());
    out.write_record(["n", "residue", "bound", "partition", "size", "verified"]).map_err(io)?;
    for n in from..=to {
        let rule = residue_rule(n);
        let residue = format!("{} mod {}", rule.residue, rule.modulus);
        let bound = bound_l(n, cat)?;
        let (partition, size, status) = if n < 9 {
            let r = oracle::exact_l(n, Budget::default())?;
            let ok = verify_lottery(&BlockSystem::new(n, 4, r.witness.clone())?).is_valid();
            ("-".to_string(), r.witness.len().to_string(), if ok { "yes" } else { "formula-only" })
        } else {
            let built = partition_search(n, cat)?.best.and_then(|p| assemble(p.parts, cat).ok());
            match built {
                Some(l) => {
                    let label = l.partition.as_ref().map_or("-".into(), |p| p.label());
                    let status = if (l.len() as u64) <= bound.value { "yes" } else { "above-bound" };
                    (label, l.len().to_string(), status)
                }
                None => ("-".to_string(), "-".to_string(), "formula-only"),
            }
        };
        out.write_record([&n.to_string(), &residue, &bound.value.to_string(), &partition, &size, status])
            .map_err(io)?;
    }
    out.flush().map_err(|e| Fail(2, e.to_string()))?;
    Ok(())
}

fn ingredients(what: IngredientsCmd, dir: PathBuf) -> Out {
    match what {
        IngredientsCmd::List => {
            for (kind, n, members, prov) in Catalog::bundled().summary() {
                println!("{:<24} n={n:<3} members={members:<3} {prov:?}", kind.name());
            }
            if dir.exists() {
                for e in Registry::open(&dir)?.entries() {
                    println!(
                        "{:<24} n={:<3} {} {} {}",
                        e.kind.name(),
                        e.n,
                        &e.digest[..12],
                        if e.verified { "verified" } else { "UNVERIFIED" },
                        e.path
                    );
                }
            }
            Ok(())
        }
        IngredientsCmd::Add { file } => {
            let mut reg = Registry::open(&dir)?;
            let e = reg.add(&file)?;
            println!("added {} ({} on {} points) digest {}", e.path, e.kind.name(), e.n, e.digest);
            Ok(())
        }
        IngredientsCmd::Verify => {
            let mut reg = Registry::open(&dir)?;
            let mut bad = 0;
            for (e, problem) in reg.verify_all()? {
                match problem {
                    None => println!("ok {}", e.path),
                    Some(p) => {
                        bad += 1;
                        println!("FAILED {}: {p}", e.path);
                    }
                }
            }
            if bad > 0 {
                return Err(Fail(1, format!("{bad} registry entries failed verification")));
            }
            Ok(())
        }
    }
}
