//! `fatdelta`: command-line access to the library.
//!
//! Every command writes one canonical JSON document to stdout (or `-o FILE`).
//! Exit status is 0 on success, 1 when the input is well formed but fails a
//! check, and 2 on parse, usage or IO errors.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fatdelta::bicat::{
    bicat_to_fair2, fair2_to_bicat, identity_category, validate_bicategory, PseudoSection, StrictCompBicategory,
};
use fatdelta::fairset::{
    evaluate_map, evaluate_object, fair_nerve, theta, underlying_nerve_check, validate_fair_set, Chain, FairSetCategory,
};
use fatdelta::fairtwo::{validate_fair_two, SliceKind};
use fatdelta::fat::{
    compose_fat, compose_t, dotsum, dotsum_maps, enum_hom_fat, enum_hom_t, is_vertical, project, project_map,
    recompose, vertical_decompose, ColouredOrdinal, EpiSquare, FatMap, Generator, TMap,
};
use fatdelta::fincat::{
    binary_coproduct, binary_product, equimorphism_report, fibre_product_over_discrete, pi0, tau0, FinCategory, Verdict,
};
use fatdelta::gen::Sampler;
use fatdelta::json;
use fatdelta::ordinal::{compose_delta, dotsum_delta, enum_hom_delta, epi_mono_factor, DeltaMap, Ordinal};
use fatdelta::Error;

#[derive(Parser)]
#[command(name = "fatdelta", version, about = "Fat delta, fair categories and bicategories")]
struct Cli {
    /// Write the document here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all maps between two objects.
    EnumHom(EnumHom),
    /// Compose two maps, first F then G.
    Compose { f: String, g: String },
    /// Epi-mono factorisation of a map of ordinals.
    Factor { map: String },
    /// Dot-sum of two ordinals, coloured ordinals or fat maps.
    Dotsum { left: String, right: String },
    /// Contract links: a coloured ordinal or map down to the simplex category.
    Project { item: String },
    #[command(subcommand)]
    Vertical(VerticalCmd),
    #[command(subcommand)]
    Episquare(EpisquareCmd),
    #[command(subcommand)]
    Cat(CatCmd),
    #[command(subcommand)]
    Functor(FunctorCmd),
    #[command(subcommand)]
    Fair(FairCmd),
    #[command(subcommand)]
    Fair2(Fair2Cmd),
    #[command(subcommand)]
    Bicat(BicatCmd),
    /// Random instances, reproducible from the seed.
    Gen {
        kind: GenKind,
        #[arg(long)]
        seed: u64,
        /// Emit an array of this many instances instead of a single document.
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Kind {
    #[arg(long)]
    delta: bool,
    #[arg(long)]
    fat: bool,
    #[arg(long)]
    tmap: bool,
}

#[derive(Args)]
struct EnumHom {
    #[command(flatten)]
    kind: Kind,
    src: String,
    dst: String,
}

#[derive(Subcommand)]
enum VerticalCmd {
    /// Whether a fat map projects to an identity.
    Check { map: String },
    /// Factor a vertical map into elementary generator steps.
    Decompose { map: String },
    /// The five generators.
    Generators,
}

#[derive(Subcommand)]
enum EpisquareCmd {
    /// A fat map as a commuting square of ordinal maps.
    To { map: String },
    /// The fat map described by a square.
    From {
        top: String,
        bottom: String,
        src_epi: String,
        dst_epi: String,
    },
}

#[derive(Subcommand)]
enum CatCmd {
    Validate {
        file: String,
    },
    Pi0 {
        file: String,
    },
    Tau0 {
        file: String,
    },
    Product {
        a: String,
        b: String,
    },
    Coproduct {
        a: String,
        b: String,
    },
    /// Fibre product of two functors into the same discrete category.
    Fibre {
        f: String,
        g: String,
    },
}

#[derive(Subcommand)]
enum FunctorCmd {
    /// Fully faithful, essentially surjective, equimorphism.
    Report { file: String },
}

#[derive(Subcommand)]
enum FairCmd {
    Validate {
        file: String,
    },
    /// The underlying category.
    ToCat {
        file: String,
    },
    /// The nerve of a category as a fair Set-category.
    FromCat {
        file: String,
    },
    /// Value at a coloured ordinal, or the function induced by a fat map.
    Eval {
        file: String,
        #[arg(long, conflicts_with = "map", required_unless_present = "map")]
        object: Option<String>,
        #[arg(long)]
        map: Option<String>,
    },
    /// Compare with the classical nerve of the underlying category up to a level.
    NerveCheck {
        file: String,
        #[arg(long)]
        level: usize,
    },
}

#[derive(Subcommand)]
enum Fair2Cmd {
    Validate {
        file: String,
    },
    /// A hom-category or a unit category.
    Slice {
        file: String,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with = "unit", required_unless_present = "unit")]
        hom: Option<Vec<String>>,
        #[arg(long, value_name = "X")]
        unit: Option<String>,
    },
}

#[derive(Args)]
struct BicatInput {
    file: String,
    /// Read a one-object bicategory written as a monoidal category.
    #[arg(long)]
    monoidal: bool,
}

#[derive(Subcommand)]
enum BicatCmd {
    Validate(BicatInput),
    /// The category of identity triples at an object.
    IdCat {
        #[command(flatten)]
        input: BicatInput,
        #[arg(long)]
        object: String,
    },
    ToFair2(BicatInput),
    FromFair2 {
        file: String,
        /// Take the last unit of each unit category instead of the first.
        #[arg(long)]
        last: bool,
        /// Emit a monoidal document (one object only).
        #[arg(long)]
        monoidal: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Ordinal,
    FatMap,
    Category,
    Functor,
    FairSet,
    Bicat,
    Fair2,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: 2,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Self { code, error: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Self::usage(error)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

/// What a command produced: a document, plus violations that make the exit status 1.
struct Output {
    doc: String,
    violations: Vec<String>,
}

impl Output {
    fn ok(doc: String) -> Self {
        Self {
            doc,
            violations: Vec::new(),
        }
    }

    fn value(v: Value) -> Self {
        Self::ok(json::canonical(&v))
    }

    fn checked(v: Value, violations: Vec<String>) -> Self {
        Self {
            doc: json::canonical(&v),
            violations,
        }
    }
}

type CmdResult = Result<Output, Failure>;

/// Size caps from `FATDELTA_MAX_SIZE=DOTS[,ARROWS]`.
#[derive(Clone, Copy)]
struct Limits {
    dots: usize,
    arrows: usize,
}

impl Limits {
    fn from_env() -> Result<Self, Failure> {
        let mut limits = Limits { dots: 8, arrows: 30 };
        if let Ok(text) = std::env::var("FATDELTA_MAX_SIZE") {
            let mut parts = text.split(',').map(|p| p.trim().parse::<usize>());
            let bad = || Failure::usage(anyhow!("FATDELTA_MAX_SIZE must look like DOTS[,ARROWS], got `{text}`"));
            limits.dots = parts.next().and_then(|p| p.ok()).ok_or_else(bad)?;
            if let Some(a) = parts.next() {
                limits.arrows = a.map_err(|_| bad())?;
            }
            if parts.next().is_some() {
                return Err(bad());
            }
        }
        Ok(limits)
    }

    fn dots(&self, what: &str, n: usize) -> Result<(), Failure> {
        if n > self.dots {
            return Err(Failure::usage(anyhow!(
                "{what} has {n} dots, over the cap of {} (raise FATDELTA_MAX_SIZE)",
                self.dots
            )));
        }
        Ok(())
    }

    fn arrows(&self, what: &str, n: usize) -> Result<(), Failure> {
        if n > self.arrows {
            return Err(Failure::usage(anyhow!(
                "{what} has {n} arrows, over the cap of {} (raise FATDELTA_MAX_SIZE)",
                self.arrows
            )));
        }
        Ok(())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
    }
}

fn parse_ordinal(text: &str) -> Result<Ordinal, Failure> {
    text.trim()
        .parse()
        .map(Ordinal)
        .map_err(|_| Failure::usage(anyhow!("`{text}` is not an ordinal (a non-negative integer)")))
}

fn verdict_doc(v: &Verdict) -> Value {
    json!({ "valid": v.is_valid(), "violations": v.violations })
}

fn strs<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn names(c: &FinCategory, classes: Vec<Vec<usize>>) -> Vec<Vec<String>> {
    classes
        .into_iter()
        .map(|cls| cls.into_iter().map(|x| c.objects()[x].clone()).collect())
        .collect()
}

fn chain_doc(x: &FairSetCategory, c: &Chain) -> Value {
    json!({
        "start": x.objects()[c.start],
        "arrows": c.arrows.iter().map(|&a| x.arrows()[a].id.clone()).collect::<Vec<_>>(),
    })
}

fn load_bicat(input: &BicatInput) -> Result<StrictCompBicategory, Failure> {
    let text = read_input(&input.file)?;
    Ok(if input.monoidal {
        json::monoidal_from_json(&text)?
    } else {
        json::bicat_from_json(&text)?
    })
}

fn enum_hom(args: &EnumHom, limits: Limits) -> CmdResult {
    let maps: Vec<String> = if args.kind.delta {
        let (m, n) = (parse_ordinal(&args.src)?, parse_ordinal(&args.dst)?);
        limits.dots("source", m.dots())?;
        limits.dots("target", n.dots())?;
        strs(&enum_hom_delta(m, n))
    } else {
        let k: ColouredOrdinal = args.src.parse()?;
        let l: ColouredOrdinal = args.dst.parse()?;
        limits.dots("source", k.dots())?;
        limits.dots("target", l.dots())?;
        if args.kind.fat {
            strs(&enum_hom_fat(&k, &l))
        } else {
            strs(&enum_hom_t(&k, &l))
        }
    };
    Ok(Output::value(json!({ "count": maps.len(), "maps": maps })))
}

/// Tries ordinal maps, then fat maps, then T maps.
fn compose(f: &str, g: &str) -> CmdResult {
    if let (Ok(a), Ok(b)) = (f.parse::<DeltaMap>(), g.parse::<DeltaMap>()) {
        let h = compose_delta(&a, &b)?;
        return Ok(Output::value(json!({ "kind": "delta", "map": h.to_string() })));
    }
    if let (Ok(a), Ok(b)) = (f.parse::<FatMap>(), g.parse::<FatMap>()) {
        let h = compose_fat(&a, &b)?;
        return Ok(Output::value(json!({ "kind": "fat", "map": h.to_string() })));
    }
    let a: TMap = f.parse()?;
    let b: TMap = g.parse()?;
    let h = compose_t(&a, &b)?;
    Ok(Output::value(json!({ "kind": "tmap", "map": h.to_string() })))
}

fn factor(text: &str) -> CmdResult {
    let f: DeltaMap = text.parse()?;
    let fac = epi_mono_factor(&f);
    Ok(Output::value(json!({
        "epi": fac.epi.to_string(),
        "mono": fac.mono.to_string(),
        "isEpi": fac.is_epi,
        "isMono": fac.is_mono,
    })))
}

fn dotsum_cmd(left: &str, right: &str) -> CmdResult {
    if let (Ok(m), Ok(n)) = (left.trim().parse::<usize>(), right.trim().parse::<usize>()) {
        let s = dotsum_delta(Ordinal(m), Ordinal(n));
        return Ok(Output::value(json!({
            "sum": s.sum.0,
            "left": s.left.to_string(),
            "right": s.right.to_string(),
        })));
    }
    if left.contains("->") || right.contains("->") {
        let f: FatMap = left.parse()?;
        let g: FatMap = right.parse()?;
        return Ok(Output::value(json!({ "map": dotsum_maps(&f, &g)?.to_string() })));
    }
    let k: ColouredOrdinal = left.parse()?;
    let l: ColouredOrdinal = right.parse()?;
    Ok(Output::value(json!({ "sum": dotsum(&k, &l).to_string() })))
}

fn project_cmd(item: &str) -> CmdResult {
    if item.contains("->") {
        let f: TMap = item.parse()?;
        return Ok(Output::value(json!({ "map": project_map(&f).to_string() })));
    }
    let k: ColouredOrdinal = item.parse()?;
    Ok(Output::value(json!({ "ordinal": project(&k).0 })))
}

fn vertical(cmd: &VerticalCmd, limits: Limits) -> CmdResult {
    match cmd {
        VerticalCmd::Check { map } => {
            let f: FatMap = map.parse()?;
            let v = is_vertical(&f);
            let violations = if v {
                vec![]
            } else {
                vec![format!("{f} does not project to an identity")]
            };
            Ok(Output::checked(json!({ "vertical": v }), violations))
        }
        VerticalCmd::Decompose { map } => {
            let f: FatMap = map.parse()?;
            limits.dots("target", f.dst().dots())?;
            let steps = vertical_decompose(&f)?;
            let back = recompose(f.src(), &steps)?;
            Ok(Output::value(json!({
                "steps": steps
                    .iter()
                    .map(|s| json!({ "generator": s.generator.name(), "position": s.position }))
                    .collect::<Vec<_>>(),
                "recomposed": back.to_string(),
            })))
        }
        VerticalCmd::Generators => Ok(Output::value(json!({
            "generators": Generator::ALL
                .iter()
                .map(|g| json!({ "name": g.name(), "map": g.map().to_string() }))
                .collect::<Vec<_>>(),
        }))),
    }
}

fn episquare(cmd: &EpisquareCmd) -> CmdResult {
    match cmd {
        EpisquareCmd::To { map } => {
            let f: FatMap = map.parse()?;
            let sq = EpiSquare::from_fat(&f);
            Ok(Output::value(json!({
                "top": sq.top.to_string(),
                "bottom": sq.bottom.to_string(),
                "srcEpi": sq.src_epi.to_string(),
                "dstEpi": sq.dst_epi.to_string(),
            })))
        }
        EpisquareCmd::From {
            top,
            bottom,
            src_epi,
            dst_epi,
        } => {
            let sq = EpiSquare::new(top.parse()?, bottom.parse()?, src_epi.parse()?, dst_epi.parse()?)?;
            Ok(Output::value(json!({ "map": sq.to_fat()?.to_string() })))
        }
    }
}

fn cat(cmd: &CatCmd, limits: Limits) -> CmdResult {
    let load = |path: &str| -> Result<FinCategory, Failure> {
        let c = json::category_from_json(&read_input(path)?)?;
        limits.arrows("category", c.num_arrows())?;
        Ok(c)
    };
    let valid = |c: FinCategory| -> Result<FinCategory, Failure> {
        c.validate().into_result()?;
        Ok(c)
    };
    match cmd {
        CatCmd::Validate { file } => {
            let v = load(file)?.validate();
            Ok(Output::checked(verdict_doc(&v), v.violations))
        }
        CatCmd::Pi0 { file } => {
            let c = valid(load(file)?)?;
            let comps = pi0(&c);
            Ok(Output::value(
                json!({ "count": comps.count, "components": names(&c, comps.classes()) }),
            ))
        }
        CatCmd::Tau0 { file } => {
            let c = valid(load(file)?)?;
            let t = tau0(&c);
            Ok(Output::value(json!({
                "count": t.classes.count,
                "classes": names(&c, t.classes.classes()),
                "toComponents": t.to_components,
            })))
        }
        CatCmd::Product { a, b } => {
            let p = binary_product(&valid(load(a)?)?, &valid(load(b)?)?);
            Ok(Output::ok(json::category_to_json(&p.category)))
        }
        CatCmd::Coproduct { a, b } => {
            let s = binary_coproduct(&valid(load(a)?)?, &valid(load(b)?)?);
            Ok(Output::ok(json::category_to_json(&s.category)))
        }
        CatCmd::Fibre { f, g } => {
            let f = json::functor_from_json(&read_input(f)?)?;
            let g = json::functor_from_json(&read_input(g)?)?;
            let p = fibre_product_over_discrete(&f, &g)?;
            Ok(Output::ok(json::category_to_json(&p.category)))
        }
    }
}

fn functor(cmd: &FunctorCmd) -> CmdResult {
    let FunctorCmd::Report { file } = cmd;
    let f = json::functor_from_json(&read_input(file)?)?;
    let mut all = Verdict::default();
    all.extend_prefixed("source", f.src().validate());
    all.extend_prefixed("target", f.dst().validate());
    all.extend_prefixed("functor", f.validate());
    if !all.is_valid() {
        return Ok(Output::checked(verdict_doc(&all), all.violations));
    }
    let r = equimorphism_report(&f);
    Ok(Output::value(json!({
        "valid": true,
        "violations": Vec::<String>::new(),
        "fullyFaithful": r.fully_faithful,
        "essentiallySurjective": r.essentially_surjective,
        "equimorphism": r.equimorphism,
    })))
}

fn fair(cmd: &FairCmd, limits: Limits) -> CmdResult {
    let load = |path: &str| -> Result<FairSetCategory, Failure> {
        let x = json::fair_set_from_json(&read_input(path)?)?;
        limits.arrows("fair Set-category", x.arrows().len())?;
        Ok(x)
    };
    let valid = |x: FairSetCategory| -> Result<FairSetCategory, Failure> {
        validate_fair_set(&x).verdict.into_result()?;
        Ok(x)
    };
    match cmd {
        FairCmd::Validate { file } => {
            let v = validate_fair_set(&load(file)?);
            let mut doc = verdict_doc(&v.verdict);
            doc["isFairMonoid"] = json!(v.is_fair_monoid);
            doc["lemmaSEqT"] = json!(v.lemma_s_eq_t);
            doc["strictUnits"] = json!(v.strict_units);
            Ok(Output::checked(doc, v.verdict.violations))
        }
        FairCmd::ToCat { file } => Ok(Output::ok(json::category_to_json(&theta(&valid(load(file)?)?)?))),
        FairCmd::FromCat { file } => {
            let c = json::category_from_json(&read_input(file)?)?;
            limits.arrows("category", c.num_arrows())?;
            Ok(Output::ok(json::fair_set_to_json(&fair_nerve(&c)?)))
        }
        FairCmd::Eval { file, object, map } => {
            let x = valid(load(file)?)?;
            if let Some(k) = object {
                let k: ColouredOrdinal = k.parse()?;
                limits.dots("object", k.dots())?;
                let chains = evaluate_object(&x, &k);
                return Ok(Output::value(json!({
                    "object": k.to_string(),
                    "count": chains.len(),
                    "chains": chains.iter().map(|c| chain_doc(&x, c)).collect::<Vec<_>>(),
                })));
            }
            let phi: FatMap = map.as_deref().expect("clap requires one of the two").parse()?;
            limits.dots("target", phi.dst().dots())?;
            let m = evaluate_map(&x, &phi)?;
            Ok(Output::value(json!({
                "map": phi.to_string(),
                "domain": m.domain.iter().map(|c| chain_doc(&x, c)).collect::<Vec<_>>(),
                "codomain": m.codomain.iter().map(|c| chain_doc(&x, c)).collect::<Vec<_>>(),
                "table": m.table,
            })))
        }
        FairCmd::NerveCheck { file, level } => {
            let x = valid(load(file)?)?;
            limits.dots("level", level + 1)?;
            let r = underlying_nerve_check(&x, *level)?;
            let mut doc = verdict_doc(&r.verdict);
            doc["levels"] = json!(r.levels);
            Ok(Output::checked(doc, r.verdict.violations))
        }
    }
}

fn fair2(cmd: &Fair2Cmd) -> CmdResult {
    match cmd {
        Fair2Cmd::Validate { file } => {
            let x = json::fair_two_from_json(&read_input(file)?)?;
            let v = validate_fair_two(&x);
            let mut doc = verdict_doc(&v.verdict);
            doc["isFairMonoidal"] = json!(v.is_fair_monoidal);
            Ok(Output::checked(doc, v.verdict.violations))
        }
        Fair2Cmd::Slice { file, hom, unit } => {
            let x = json::fair_two_from_json(&read_input(file)?)?;
            let c = match (hom, unit) {
                (Some(h), _) => x.slice(SliceKind::Hom, &h[0], Some(&h[1]))?,
                (None, Some(u)) => x.slice(SliceKind::Unit, u, None)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            Ok(Output::ok(json::category_to_json(&c)))
        }
    }
}

fn bicat(cmd: &BicatCmd, limits: Limits) -> CmdResult {
    let valid = |c: StrictCompBicategory| -> Result<StrictCompBicategory, Failure> {
        validate_bicategory(&c).into_result()?;
        Ok(c)
    };
    match cmd {
        BicatCmd::Validate(input) => {
            let v = validate_bicategory(&load_bicat(input)?);
            Ok(Output::checked(verdict_doc(&v), v.violations))
        }
        BicatCmd::IdCat { input, object } => {
            let c = valid(load_bicat(input)?)?;
            let o = c
                .semi()
                .object_index(object)
                .ok_or_else(|| Error::UnknownObject(object.clone()))?;
            limits.arrows("endo-hom category", c.semi().hom(o, o).num_arrows())?;
            let ic = identity_category(&c, o)?;
            let triples: Vec<Value> = ic
                .triples
                .iter()
                .map(|t| serde_json::to_value(json::triple_doc(c.semi(), t)).expect("plain data"))
                .collect();
            Ok(Output::value(json!({
                "category": json::CategoryDoc::from_category(&ic.category),
                "contractible": ic.contractible,
                "triples": triples,
            })))
        }
        BicatCmd::ToFair2(input) => {
            let c = valid(load_bicat(input)?)?;
            Ok(Output::ok(json::fair_two_to_json(&bicat_to_fair2(&c)?)))
        }
        BicatCmd::FromFair2 { file, last, monoidal } => {
            let x = json::fair_two_from_json(&read_input(file)?)?;
            validate_fair_two(&x).verdict.into_result()?;
            let choice = if *last {
                PseudoSection::Last
            } else {
                PseudoSection::First
            };
            let c = fair2_to_bicat(&x, choice)?;
            Ok(Output::ok(if *monoidal {
                json::monoidal_to_json(&c)?
            } else {
                json::bicat_to_json(&c)
            }))
        }
    }
}

fn generate(kind: GenKind, seed: u64, count: Option<usize>) -> CmdResult {
    let mut s = Sampler::new(seed);
    let one = |s: &mut Sampler| -> Result<String, Failure> {
        Ok(match kind {
            GenKind::Ordinal => json::canonical(&s.coloured_ordinal(6).to_string()),
            GenKind::FatMap => json::canonical(&s.fat_map(3, 5).to_string()),
            GenKind::Category => json::category_to_json(&s.category()),
            GenKind::Functor => {
                let c = s.category();
                json::functor_to_json(&s.functor_to_discrete(&c, 2))
            }
            GenKind::FairSet => json::fair_set_to_json(&s.fair_set()),
            GenKind::Bicat => json::bicat_to_json(&s.bicategory()),
            GenKind::Fair2 => json::fair_two_to_json(&bicat_to_fair2(&s.bicategory())?),
        })
    };
    match count {
        None => Ok(Output::ok(one(&mut s)?)),
        Some(n) => {
            let docs = (0..n).map(|_| one(&mut s)).collect::<Result<Vec<_>, _>>()?;
            Ok(Output::ok(format!("[{}]", docs.join(","))))
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let limits = Limits::from_env()?;
    match &cli.command {
        Command::EnumHom(args) => enum_hom(args, limits),
        Command::Compose { f, g } => compose(f, g),
        Command::Factor { map } => factor(map),
        Command::Dotsum { left, right } => dotsum_cmd(left, right),
        Command::Project { item } => project_cmd(item),
        Command::Vertical(cmd) => vertical(cmd, limits),
        Command::Episquare(cmd) => episquare(cmd),
        Command::Cat(cmd) => cat(cmd, limits),
        Command::Functor(cmd) => functor(cmd),
        Command::Fair(cmd) => fair(cmd, limits),
        Command::Fair2(cmd) => fair2(cmd),
        Command::Bicat(cmd) => bicat(cmd, limits),
        Command::Gen { kind, seed, count } => generate(*kind, *seed, *count),
    }
}

fn emit(cli: &Cli, doc: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, format!("{doc}\n")).with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{doc}").context("writing stdout")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        emit(&cli, &out.doc)?;
        Ok(out.violations)
    });
    match result {
        Ok(violations) if violations.is_empty() => ExitCode::SUCCESS,
        Ok(violations) => {
            for v in violations {
                eprintln!("{v}");
            }
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
