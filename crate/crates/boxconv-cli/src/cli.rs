//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 validation error (malformed input or a violated precondition).
//!
//! Inputs that look like JSON (leading `{` or `[`) are taken inline;
//! anything else is read as a file path. `--out FILE` redirects the result,
//! which otherwise goes to standard output.

use std::collections::BTreeMap;
use std::fs;

use serde_json::{json, Value};

use boxconv::conv;
use boxconv::hopf;
use boxconv::ncpart::{self, NcCache, NcPartition};
use boxconv::onedim;
use boxconv::repr;
use boxconv::series::{restrict_word, words_up_to, NcSeries, Word};

use crate::json::{
    blocks_from_json, matrix_from_json, matrix_to_json, partition_from_json, partition_to_json,
    ps1_from_json, ps1_to_json, rational_from_str, rational_to_string, series_from_json,
    series_to_json, word_map_to_json, FormatError,
};
use crate::verify::{run_all, run_suite, SuiteParams, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

/// Every library operation with the one subcommand it is reachable from.
/// The CLI integration tests check this table for uniqueness and coverage.
pub const DISPATCH: &[(&str, &str)] = &[
    ("enumerate_nc", "nc enumerate"),
    ("kreweras", "nc kreweras"),
    ("kreweras_squared_shift", "nc kreweras"),
    ("nc_join", "nc join"),
    ("interval_partition", "nc join"),
    ("is_noncrossing", "nc join"),
    ("box_conv", "conv box"),
    ("commutator", "conv box"),
    ("box_inverse", "conv inv"),
    ("torus_factor", "conv inv"),
    ("addv", "conv addv"),
    ("join_free", "conv addv"),
    ("mulv", "conv mulv"),
    ("zeta", "series zeta"),
    ("moeb", "series moeb"),
    ("cumulants_from_moments", "series m2c"),
    ("r_v", "series m2c"),
    ("moments_from_cumulants", "series c2m"),
    ("grouped_cumulants", "series c2m"),
    ("add", "series arith"),
    ("scale", "series arith"),
    ("cauchy_mul", "series arith"),
    ("coeff", "series eval"),
    ("restrict_word", "series eval"),
    ("eval_block_functional", "series eval"),
    ("coproduct", "hopf coproduct"),
    ("reduced_coproduct", "hopf coproduct"),
    ("counit", "hopf coproduct"),
    ("antipode", "hopf antipode"),
    ("reduced_antipode", "hopf antipode"),
    ("lie_bracket", "hopf bracket"),
    ("formal_group_law", "hopf bracket"),
    ("bilinear_part", "hopf bracket"),
    ("build_rep", "repr build"),
    ("build_torus_rep", "repr build"),
    ("s_transform", "repr build"),
    ("certify_unipotent", "repr certify"),
    ("certify_triangular", "repr certify"),
    ("one_dim_s_matrix", "repr sdim1"),
    ("comp_inverse", "onedim finverse"),
    ("compose", "onedim finverse"),
    ("f_transform", "onedim ftrafo"),
    ("s_v_transform", "onedim svtrafo"),
    ("log_morphism", "onedim log"),
    ("exp_morphism", "onedim exp"),
    ("exp_v", "onedim expv"),
    ("log_v", "onedim logv"),
    ("symm_coordinates", "onedim symm"),
];

/// Flags that take no value.
const BOOLEAN_FLAGS: &[&str] = &[
    "squared",
    "commutator",
    "torus",
    "join-free",
    "reduced",
    "counit",
    "fgl",
    "bilinear",
    "torus-only",
    "s-transform",
];

pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
}

enum CliError {
    Usage(String),
    Validation(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Validation(e.0)
    }
}

fn validation<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Validation(e.to_string())
}

type Flags = BTreeMap<String, String>;

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let name = arg
            .strip_prefix("--")
            .ok_or_else(|| CliError::Usage(format!("expected a --flag, got {arg:?}")))?;
        if BOOLEAN_FLAGS.contains(&name) {
            flags.insert(name.to_string(), "true".to_string());
            i += 1;
        } else {
            let value = args
                .get(i + 1)
                .ok_or_else(|| CliError::Usage(format!("flag --{name} needs a value")))?;
            flags.insert(name.to_string(), value.clone());
            i += 2;
        }
    }
    Ok(flags)
}

fn flag<'a>(flags: &'a Flags, name: &str) -> Result<&'a str, CliError> {
    flags
        .get(name)
        .map(String::as_str)
        .ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
}

fn flag_bool(flags: &Flags, name: &str) -> bool {
    flags.contains_key(name)
}

fn flag_u32(flags: &Flags, name: &str) -> Result<u32, CliError> {
    flag(flags, name)?
        .parse()
        .map_err(|_| CliError::Usage(format!("flag --{name} must be a non-negative integer")))
}

fn flag_u32_or(flags: &Flags, name: &str, default: u32) -> Result<u32, CliError> {
    match flags.get(name) {
        Some(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("flag --{name} must be a non-negative integer"))),
        None => Ok(default),
    }
}

fn flag_u64_or(flags: &Flags, name: &str, default: u64) -> Result<u64, CliError> {
    match flags.get(name) {
        Some(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("flag --{name} must be a non-negative integer"))),
        None => Ok(default),
    }
}

/// Comma-separated positive integers, e.g. `2,4`.
fn flag_usize_list(flags: &Flags, name: &str) -> Result<Vec<usize>, CliError> {
    flag(flags, name)?
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("flag --{name} must list integers")))
        })
        .collect()
}

/// Inline JSON or a path to a JSON file.
fn input_json(flags: &Flags, name: &str) -> Result<Value, CliError> {
    let raw = flag(flags, name)?;
    let text = if raw.trim_start().starts_with(['{', '[']) {
        raw.to_string()
    } else {
        fs::read_to_string(raw)
            .map_err(|e| CliError::Validation(format!("cannot read {raw:?}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("invalid JSON: {e}")))
}

fn input_series(flags: &Flags, name: &str) -> Result<NcSeries, CliError> {
    Ok(series_from_json(&input_json(flags, name)?)?)
}

fn input_word(flags: &Flags, name: &str) -> Result<Word, CliError> {
    let v = input_json(flags, name)?;
    let arr = v
        .as_array()
        .ok_or_else(|| CliError::Validation(format!("--{name} must be a letter array")))?;
    let letters: Option<Vec<u32>> = arr.iter().map(|x| x.as_u64().map(|u| u as u32)).collect();
    letters
        .map(Word::new)
        .ok_or_else(|| CliError::Validation(format!("--{name} letters must be integers")))
}

fn input_partition(flags: &Flags, name: &str, n: Option<usize>) -> Result<NcPartition, CliError> {
    Ok(partition_from_json(&input_json(flags, name)?, n)?)
}

fn emit(v: Value) -> String {
    let mut text = serde_json::to_string(&v).expect("serializable value");
    text.push('\n');
    text
}

pub fn run(args: &[String]) -> RunOutcome {
    match run_inner(args) {
        Ok((code, stdout)) => RunOutcome { code, stdout },
        Err(CliError::Usage(msg)) => RunOutcome {
            code: EXIT_USAGE,
            stdout: format!("usage error: {msg}\n{USAGE}"),
        },
        Err(CliError::Validation(msg)) => RunOutcome {
            code: EXIT_VALIDATION,
            stdout: format!("validation error: {msg}\n"),
        },
    }
}

const USAGE: &str = "\
usage: boxconv <command> <subcommand> [--flags]

  nc enumerate|kreweras|join         non-crossing partitions
  conv box|inv|addv|mulv             boxed convolution group
  series zeta|moeb|m2c|c2m|arith|eval   series constructors and queries
  hopf coproduct|antipode|bracket    coordinate Hopf algebra
  repr build|certify|sdim1           matrix representations
  onedim finverse|ftrafo|svtrafo|log|exp|expv|logv|symm
  verify all|nc|series|conv|hopf|repr|onedim  [--s --maxdeg --seed]

  common flags: --out FILE, --jobs N; inputs are inline JSON or file paths
";

fn run_inner(args: &[String]) -> Result<(i32, String), CliError> {
    if args.is_empty() {
        return Err(CliError::Usage("no command given".into()));
    }
    if args[0] == "help" || args[0] == "--help" {
        return Ok((EXIT_OK, USAGE.to_string()));
    }
    let (code, output) = if args[0] == "verify" {
        verify_cmd(args.get(1).map(String::as_str), &parse_flags(&args[2.min(args.len())..])?)?
    } else {
        if args.len() < 2 {
            return Err(CliError::Usage("missing subcommand".into()));
        }
        let flags = parse_flags(&args[2..])?;
        let out = dispatch(&args[0], &args[1], &flags)?;
        let text = match flags.get("out") {
            Some(path) => {
                fs::write(path, &out)
                    .map_err(|e| CliError::Validation(format!("cannot write {path:?}: {e}")))?;
                String::new()
            }
            None => out,
        };
        (EXIT_OK, text)
    };
    Ok((code, output))
}

fn dispatch(group: &str, sub: &str, flags: &Flags) -> Result<String, CliError> {
    match (group, sub) {
        ("nc", "enumerate") => nc_enumerate(flags),
        ("nc", "kreweras") => nc_kreweras(flags),
        ("nc", "join") => nc_join(flags),
        ("conv", "box") => conv_box(flags),
        ("conv", "inv") => conv_inv(flags),
        ("conv", "addv") => conv_addv(flags),
        ("conv", "mulv") => conv_mulv(flags),
        ("series", "zeta") => series_fixed(flags, conv::zeta),
        ("series", "moeb") => series_fixed(flags, conv::moeb),
        ("series", "m2c") => series_m2c(flags),
        ("series", "c2m") => series_c2m(flags),
        ("series", "arith") => series_arith(flags),
        ("series", "eval") => series_eval(flags),
        ("hopf", "coproduct") => hopf_coproduct(flags),
        ("hopf", "antipode") => hopf_antipode(flags),
        ("hopf", "bracket") => hopf_bracket(flags),
        ("repr", "build") => repr_build(flags),
        ("repr", "certify") => repr_certify(flags),
        ("repr", "sdim1") => repr_sdim1(flags),
        ("onedim", op) => onedim_cmd(op, flags),
        _ => Err(CliError::Usage(format!("unknown command {group} {sub}"))),
    }
}

fn nc_enumerate(flags: &Flags) -> Result<String, CliError> {
    let n = flag_u32(flags, "n")? as usize;
    let cap = flag_u32_or(flags, "cap", ncpart::DEFAULT_ENUMERATION_CAP as u32)? as usize;
    let all = ncpart::enumerate_nc_with_cap(n, cap).map_err(validation)?;
    let parts: Vec<Value> = all.iter().map(partition_to_json).collect();
    Ok(emit(json!({"count": parts.len(), "partitions": parts})))
}

fn nc_kreweras(flags: &Flags) -> Result<String, CliError> {
    let n = flags.get("n").map(|v| v.parse::<usize>()).transpose()
        .map_err(|_| CliError::Usage("flag --n must be an integer".into()))?;
    let p = input_partition(flags, "partition", n)?;
    let out = if flag_bool(flags, "squared") {
        p.kreweras_squared_shift()
    } else {
        p.kreweras()
    };
    Ok(emit(partition_to_json(&out)))
}

fn nc_join(flags: &Flags) -> Result<String, CliError> {
    let n = flags.get("n").map(|v| v.parse::<usize>()).transpose()
        .map_err(|_| CliError::Usage("flag --n must be an integer".into()))?;
    if flags.contains_key("interval-cuts") {
        let cuts = flag_usize_list(flags, "interval-cuts")?;
        let n = n.ok_or_else(|| CliError::Usage("--interval-cuts needs --n".into()))?;
        let p = NcPartition::interval(n, &cuts).map_err(validation)?;
        return Ok(emit(partition_to_json(&p)));
    }
    if flags.contains_key("check") {
        let blocks = blocks_from_json(&input_json(flags, "check")?)?;
        let n = n.unwrap_or_else(|| blocks.iter().flatten().count());
        let ok = ncpart::is_noncrossing(n, &blocks).map_err(validation)?;
        return Ok(emit(json!({"noncrossing": ok})));
    }
    let p = input_partition(flags, "p", n)?;
    let q = input_partition(flags, "q", n)?;
    let j = p.join(&q).map_err(validation)?;
    Ok(emit(partition_to_json(&j)))
}

/// Boxed convolution with optional coefficient-level parallelism. The output
/// is assembled in word order, so it is byte-identical for every job count.
pub fn box_conv_jobs(f: &NcSeries, g: &NcSeries, jobs: usize) -> Result<NcSeries, conv::ConvError> {
    if jobs <= 1 {
        return conv::box_conv(f, g);
    }
    if f.s() != g.s() || f.maxdeg() != g.maxdeg() {
        // delegate shape errors to the sequential path
        return conv::box_conv(f, g);
    }
    let words = words_up_to(f.s(), f.maxdeg());
    let chunk = words.len().div_ceil(jobs);
    let results: Vec<Result<Vec<(Word, boxconv::rational::Rational)>, conv::ConvError>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = words
                .chunks(chunk.max(1))
                .map(|chunk_words| {
                    scope.spawn(move || {
                        let mut cache = NcCache::new();
                        chunk_words
                            .iter()
                            .map(|w| {
                                conv::box_conv_coeff(f, g, w, &mut cache).map(|c| (w.clone(), c))
                            })
                            .collect()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        });
    let mut out = NcSeries::zero(f.s(), f.maxdeg());
    for part in results {
        for (w, c) in part? {
            out.set_coeff(w, c).expect("word in range");
        }
    }
    Ok(out)
}

fn conv_box(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    let g = input_series(flags, "g")?;
    let out = if flag_bool(flags, "commutator") {
        conv::commutator(&f, &g).map_err(validation)?
    } else {
        let jobs = flag_u32_or(flags, "jobs", 1)? as usize;
        box_conv_jobs(&f, &g, jobs).map_err(validation)?
    };
    Ok(emit(series_to_json(&out)))
}

fn conv_inv(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    if flag_bool(flags, "torus") {
        let (t, p) = conv::torus_factor(&f).map_err(validation)?;
        return Ok(emit(json!({
            "torus": series_to_json(&t),
            "unipotent": series_to_json(&p),
        })));
    }
    let out = conv::box_inverse(&f).map_err(validation)?;
    Ok(emit(series_to_json(&out)))
}

fn conv_addv(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    let g = input_series(flags, "g")?;
    let out = if flag_bool(flags, "join-free") {
        conv::join_free(&f, &g).map_err(validation)?
    } else {
        conv::addv(&f, &g).map_err(validation)?
    };
    Ok(emit(series_to_json(&out)))
}

fn conv_mulv(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    let g = input_series(flags, "g")?;
    let out = conv::mulv(&f, &g).map_err(validation)?;
    Ok(emit(series_to_json(&out)))
}

fn series_fixed(flags: &Flags, make: fn(u32, u32) -> NcSeries) -> Result<String, CliError> {
    let s = flag_u32(flags, "s")?;
    let maxdeg = flag_u32(flags, "maxdeg")?;
    if s == 0 || maxdeg == 0 {
        return Err(CliError::Validation("s and maxdeg must be at least 1".into()));
    }
    if s > 6 || maxdeg > 12 {
        return Err(CliError::Validation("desk-scale bound: s <= 6, maxdeg <= 12".into()));
    }
    Ok(emit(series_to_json(&make(s, maxdeg))))
}

fn series_m2c(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    let out = conv::cumulants_from_moments(&f).map_err(validation)?;
    Ok(emit(series_to_json(&out)))
}

fn series_c2m(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    if flags.contains_key("grouped-cuts") {
        let cuts = flag_usize_list(flags, "grouped-cuts")?;
        let value = conv::grouped_cumulants(&f, &cuts).map_err(validation)?;
        return Ok(emit(json!({"value": rational_to_string(&value)})));
    }
    let out = conv::moments_from_cumulants(&f).map_err(validation)?;
    Ok(emit(series_to_json(&out)))
}

fn series_arith(flags: &Flags) -> Result<String, CliError> {
    let op = flag(flags, "op")?;
    let f = input_series(flags, "f")?;
    let out = match op {
        "add" => f.add(&input_series(flags, "g")?).map_err(validation)?,
        "cauchy" => f
            .cauchy_mul(&input_series(flags, "g")?)
            .map_err(validation)?,
        "scale" => {
            let c = rational_from_str(flag(flags, "c")?)?;
            f.scale(&c)
        }
        other => return Err(CliError::Usage(format!("unknown arith op {other:?}"))),
    };
    Ok(emit(series_to_json(&out)))
}

fn series_eval(flags: &Flags) -> Result<String, CliError> {
    if flags.contains_key("coeff") {
        let f = input_series(flags, "f")?;
        let w = input_word(flags, "coeff")?;
        let c = f.coeff(&w).map_err(validation)?;
        return Ok(emit(json!({"value": rational_to_string(&c)})));
    }
    if flags.contains_key("positions") {
        let w = input_word(flags, "word")?;
        let positions = flag_usize_list(flags, "positions")?;
        let sub = restrict_word(&w, &positions).map_err(validation)?;
        return Ok(emit(json!({"word": sub.letters()})));
    }
    if flags.contains_key("partition") {
        let f = input_series(flags, "f")?;
        let w = input_word(flags, "word")?;
        let p = input_partition(flags, "partition", Some(w.len()))?;
        let v = boxconv::series::eval_block_functional(&f, &w, &p).map_err(validation)?;
        return Ok(emit(json!({"value": rational_to_string(&v)})));
    }
    Err(CliError::Usage(
        "series eval needs --coeff, --positions or --partition".into(),
    ))
}

fn hopf_coproduct(flags: &Flags) -> Result<String, CliError> {
    let w = input_word(flags, "word")?;
    if flag_bool(flags, "counit") {
        let value = hopf::counit(&hopf::CoordPoly::gen(w));
        return Ok(emit(json!({"value": rational_to_string(&value)})));
    }
    let maxdeg = flag_u32_or(flags, "maxdeg", w.len() as u32)?;
    let (tensor, reduced) = if flag_bool(flags, "reduced") {
        (hopf::reduced_coproduct(&w, maxdeg).map_err(validation)?, true)
    } else {
        (hopf::coproduct(&w, maxdeg).map_err(validation)?, false)
    };
    Ok(emit(json!({
        "terms": tensor.num_terms(),
        "render": tensor.render(reduced),
    })))
}

fn hopf_antipode(flags: &Flags) -> Result<String, CliError> {
    let w = input_word(flags, "word")?;
    if w.is_empty() {
        return Err(CliError::Validation("the antipode needs a non-empty word".into()));
    }
    let (poly, reduced) = if flag_bool(flags, "reduced") {
        (hopf::reduced_antipode(&w).map_err(validation)?, true)
    } else {
        (hopf::antipode(&w), false)
    };
    Ok(emit(json!({
        "terms": poly.num_terms(),
        "render": poly.render(reduced),
    })))
}

fn hopf_bracket(flags: &Flags) -> Result<String, CliError> {
    if flag_bool(flags, "fgl") || flag_bool(flags, "bilinear") {
        let w = input_word(flags, "word")?;
        let maxdeg = flag_u32_or(flags, "maxdeg", w.len() as u32)?;
        let tensor = if flag_bool(flags, "bilinear") {
            hopf::bilinear_part(&w, maxdeg).map_err(validation)?
        } else {
            hopf::formal_group_law(&w, maxdeg).map_err(validation)?
        };
        return Ok(emit(json!({
            "terms": tensor.num_terms(),
            "render": tensor.render(true),
        })));
    }
    let u = input_word(flags, "u")?;
    let v = input_word(flags, "v")?;
    let s = flag_u32(flags, "s")?;
    let maxdeg = flag_u32(flags, "maxdeg")?;
    if s == 0 || s > 3 || maxdeg == 0 || maxdeg > 8 {
        return Err(CliError::Validation("desk-scale bound: s <= 3, maxdeg <= 8".into()));
    }
    let entries = hopf::lie_bracket(&u, &v, s, maxdeg).map_err(validation)?;
    Ok(emit(word_map_to_json(&entries)))
}

fn repr_build(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    // --d and --bound are synonyms for the weighted-degree bound
    let default = flag_u32_or(flags, "bound", repr::default_bound(f.maxdeg()))?;
    let bound = flag_u32_or(flags, "d", default)?;
    if flag_bool(flags, "torus-only") {
        let (t, _) = conv::torus_factor(&f).map_err(validation)?;
        let m = repr::build_torus_rep(&t, bound).map_err(validation)?;
        let basis = repr::s_transform_basis(f.s(), f.maxdeg(), bound);
        return Ok(emit(matrix_to_json(&m, &basis, "full", f.s(), f.maxdeg(), bound)));
    }
    if flag_bool(flags, "s-transform") {
        let m = repr::s_transform(&f, bound).map_err(validation)?;
        let basis = repr::s_transform_basis(f.s(), f.maxdeg(), bound);
        return Ok(emit(matrix_to_json(&m, &basis, "full", f.s(), f.maxdeg(), bound)));
    }
    let m = repr::build_rep(&f, bound).map_err(validation)?;
    let basis = repr::build_rep_basis(f.s(), f.maxdeg(), bound);
    Ok(emit(matrix_to_json(&m, &basis, "reduced", f.s(), f.maxdeg(), bound)))
}

fn repr_certify(flags: &Flags) -> Result<String, CliError> {
    let (m, basis) = matrix_from_json(&input_json(flags, "matrix")?)?;
    let unipotent = repr::certify_unipotent(&m);
    let triangular = repr::certify_triangular(&m, &basis);
    let index = repr::nilpotency_index(&m);
    Ok(emit(json!({
        "unipotent": unipotent,
        "triangular": triangular,
        "nilpotency_index": index,
    })))
}

fn repr_sdim1(flags: &Flags) -> Result<String, CliError> {
    let f = input_series(flags, "f")?;
    let m = repr::one_dim_s_matrix(&f).map_err(validation)?;
    let rows: Vec<Value> = (0..m.dim())
        .map(|i| {
            Value::Array(
                (0..m.dim())
                    .map(|j| Value::String(rational_to_string(m.get(i, j))))
                    .collect(),
            )
        })
        .collect();
    Ok(emit(json!({"dim": m.dim(), "rows": rows})))
}

fn onedim_cmd(op: &str, flags: &Flags) -> Result<String, CliError> {
    if op == "symm" {
        let maxdeg = flag_u32(flags, "maxdeg")?;
        if maxdeg > 12 {
            return Err(CliError::Validation("desk-scale bound: maxdeg <= 12".into()));
        }
        let polys = onedim::symm_coordinates(maxdeg).map_err(validation)?;
        let rendered: Vec<Value> = polys
            .iter()
            .map(|p| Value::String(p.render(true)))
            .collect();
        return Ok(emit(json!({"polys": rendered})));
    }
    let p = ps1_from_json(&input_json(flags, "p")?)?;
    let out = match op {
        "finverse" => {
            if flags.contains_key("compose-with") {
                let q = ps1_from_json(&input_json(flags, "compose-with")?)?;
                onedim::compose(&p, &q).map_err(validation)?
            } else {
                onedim::comp_inverse(&p).map_err(validation)?
            }
        }
        "ftrafo" => onedim::f_transform(&p).map_err(validation)?,
        "svtrafo" => onedim::s_v_transform(&p).map_err(validation)?,
        "log" => onedim::log_morphism(&p).map_err(validation)?,
        "exp" => onedim::exp_morphism(&p).map_err(validation)?,
        "expv" => onedim::exp_v(&p).map_err(validation)?,
        "logv" => onedim::log_v(&p).map_err(validation)?,
        other => return Err(CliError::Usage(format!("unknown onedim op {other:?}"))),
    };
    Ok(emit(ps1_to_json(&out)))
}

fn verify_cmd(suite: Option<&str>, flags: &Flags) -> Result<(i32, String), CliError> {
    let suite = suite.ok_or_else(|| {
        CliError::Usage(format!("verify needs a suite: all or one of {SUITES:?}"))
    })?;
    let s = flag_u32_or(flags, "s", 2)?;
    let maxdeg = flag_u32_or(flags, "maxdeg", 4)?;
    let seed = flag_u64_or(flags, "seed", 7)?;
    if !(1..=3).contains(&s) || !(1..=8).contains(&maxdeg) {
        return Err(CliError::Validation(
            "verification runs at desk scale: 1 <= s <= 3, 1 <= maxdeg <= 8".into(),
        ));
    }
    let params = SuiteParams { s, maxdeg, seed };
    let results = if suite == "all" {
        run_all(&params)
    } else {
        match run_suite(suite, &params) {
            Some(checks) => vec![(suite.to_string(), checks)],
            None => {
                return Err(CliError::Usage(format!(
                    "unknown suite {suite:?}; use all or one of {SUITES:?}"
                )))
            }
        }
    };
    let mut text = String::new();
    let mut failures = 0usize;
    let mut total = 0usize;
    for (_, checks) in &results {
        for c in checks {
            total += 1;
            if c.pass {
                text.push_str(&format!("PASS  {}\n", c.name));
            } else {
                failures += 1;
                text.push_str(&format!("FAIL  {} {}\n", c.name, c.detail));
            }
        }
    }
    text.push_str(&format!(
        "{} checks, {} failed (s={s}, maxdeg={maxdeg}, seed={seed})\n",
        total, failures
    ));
    Ok((
        if failures == 0 { EXIT_OK } else { EXIT_VERIFY_FAILURE },
        text,
    ))
}
