//! Command-line harness: construct, tensor, decompose, identify, fuse,
//! verify-relations, fusion-table, semisimplify, all with JSON output.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 mathematical diagnostic
//! (closed-vs-oracle mismatch, relation failures, field too small, ...).

use crate::catalog::{self, Label};
use crate::decomp::{Decomposer, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::green::{self, GreenElement};
use crate::rep::{RepJson, Representation};
use std::collections::BTreeMap;
use std::io::Write;

const USAGE: &str =
    "usage: fakesl2 [--field M] [--modulus BITS] [--seed N] [--output PATH] <command> [args]

commands:
  construct <label>                          emit the module of a label as JSON
  tensor <L> <K> [--mode closed|oracle|both] [--max-dim D]
                                             tensor two labels and decompose
  decompose <file|->                         decompose a module (JSON in)
  identify <file|->                          identify an indecomposable module
  fuse <L> <K>                               closed-form fusion product
  verify-relations [--smax N] [--rmax N]     check the ring presentation
  fusion-table --max-dim D [--smax N] [--rmax N] [--threads T]
                                             emit all fusion products as JSON
  semisimplify <label>                       image in the group ring of C2 x Z

labels: V0 V1 P0 P1 Om[s,i] A[(x1:x2),r] B[(x1:x2),r]
        U[i,r] Vs[j,t] W[j,t] BandA[l,r] BandB[l,r]
";

struct Options {
    ctx: FieldContext,
    seed: u64,
    output: Option<String>,
    rest: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options> {
    let mut degree = 2u32;
    let mut modulus: Option<u32> = None;
    let mut seed = DEFAULT_SEED;
    let mut output = None;
    let mut rest = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let mut grab = |name: &str| -> Result<String> {
            it.next()
                .cloned()
                .ok_or_else(|| Error::Parse(format!("{name} needs a value")))
        };
        match a.as_str() {
            "--field" => degree = grab("--field")?.parse().map_err(|_| bad_num("--field"))?,
            "--modulus" => {
                modulus = Some(
                    grab("--modulus")?
                        .parse()
                        .map_err(|_| bad_num("--modulus"))?,
                )
            }
            "--seed" => seed = grab("--seed")?.parse().map_err(|_| bad_num("--seed"))?,
            "--output" | "-o" => output = Some(grab("--output")?),
            _ => rest.push(a.clone()),
        }
    }
    let ctx = match modulus {
        Some(m) => FieldContext::with_modulus(degree, m)?,
        None => FieldContext::new(degree)?,
    };
    Ok(Options {
        ctx,
        seed,
        output,
        rest,
    })
}

fn bad_num(flag: &str) -> Error {
    Error::Parse(format!("{flag} expects a number"))
}

fn green_to_map(g: &GreenElement) -> BTreeMap<String, i64> {
    g.iter().map(|(l, &c)| (l.to_string(), c)).collect()
}

fn canonical(ctx: FieldContext, s: &str) -> Result<Label> {
    catalog::canonicalize_label(ctx, catalog::parse_label(ctx, s)?)
}

fn read_rep(path: &str) -> Result<Representation> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    let json: RepJson = serde_json::from_str(&text)?;
    Representation::from_json(&json)
}

enum Mode {
    Closed,
    Oracle,
    Both,
}

fn run_inner(opts: &Options, out: &mut String) -> Result<i32> {
    let ctx = opts.ctx;
    let rest: Vec<&str> = opts.rest.iter().map(|s| s.as_str()).collect();
    let Some((&cmd, args)) = rest.split_first() else {
        return Err(Error::Parse("missing command".into()));
    };
    match cmd {
        "construct" => {
            let [label] = args else {
                return Err(Error::Parse("construct <label>".into()));
            };
            let fam = catalog::parse_label(ctx, label)?;
            let rep = catalog::construct_family(ctx, fam)?;
            out.push_str(&serde_json::to_string_pretty(&rep.to_json())?);
            out.push('\n');
            Ok(0)
        }
        "identify" => {
            let [path] = args else {
                return Err(Error::Parse("identify <file|->".into()));
            };
            let rep = read_rep(path)?;
            let dec = Decomposer::new(opts.seed);
            let label = catalog::identify(&dec.alg, &rep, opts.seed)?;
            out.push_str(&serde_json::to_string(&serde_json::json!({
                "label": label.to_string(),
                "dim": rep.dim(),
            }))?);
            out.push('\n');
            Ok(0)
        }
        "decompose" => {
            let [path] = args else {
                return Err(Error::Parse("decompose <file|->".into()));
            };
            let rep = read_rep(path)?;
            let dec = Decomposer::new(opts.seed);
            let split = dec.decompose(&rep)?;
            let mut summands = Vec::new();
            for s in &split.summands {
                let label = catalog::identify(&dec.alg, &s.rep, opts.seed)?;
                summands.push(serde_json::json!({
                    "label": label.to_string(),
                    "multiplicity": s.multiplicity,
                    "dim": s.rep.dim(),
                    "end_dim": s.end_dim,
                    "end_local_dim": s.end_local_dim,
                }));
            }
            out.push_str(&serde_json::to_string_pretty(&serde_json::json!({
                "total_dim": rep.dim(),
                "summands": summands,
            }))?);
            out.push('\n');
            Ok(0)
        }
        "fuse" => {
            let [l, k] = args else {
                return Err(Error::Parse("fuse <label> <label>".into()));
            };
            let (ll, kk) = (canonical(ctx, l)?, canonical(ctx, k)?);
            let product = green::fuse(ll, kk);
            out.push_str(&serde_json::to_string(&serde_json::json!({
                "left": ll.to_string(),
                "right": kk.to_string(),
                "product": green_to_map(&product),
            }))?);
            out.push('\n');
            Ok(0)
        }
        "tensor" => {
            let mut mode = Mode::Both;
            let mut max_dim = 600usize;
            let mut labels = Vec::new();
            let mut it = args.iter();
            while let Some(&a) = it.next() {
                match a {
                    "--mode" => {
                        mode = match it.next().copied() {
                            Some("closed") => Mode::Closed,
                            Some("oracle") => Mode::Oracle,
                            Some("both") => Mode::Both,
                            _ => return Err(Error::Parse("--mode closed|oracle|both".into())),
                        }
                    }
                    "--max-dim" => {
                        max_dim = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--max-dim"))?
                    }
                    other => labels.push(other),
                }
            }
            let [l, k] = labels[..] else {
                return Err(Error::Parse("tensor <label> <label>".into()));
            };
            let (ll, kk) = (canonical(ctx, l)?, canonical(ctx, k)?);
            let closed = green::fuse(ll, kk);
            let run_oracle = |seed: u64| -> Result<GreenElement> {
                if ll.dim() * kk.dim() > max_dim {
                    return Err(Error::BadParameter(format!(
                        "product dimension {} exceeds the oracle cap {max_dim}",
                        ll.dim() * kk.dim()
                    )));
                }
                let dec = Decomposer::new(seed);
                let t = catalog::construct(ctx, ll)?.tensor(&catalog::construct(ctx, kk)?)?;
                dec.decompose_and_identify(&t)
            };
            match mode {
                Mode::Closed => {
                    out.push_str(&serde_json::to_string(&serde_json::json!({
                        "left": ll.to_string(),
                        "right": kk.to_string(),
                        "mode": "closed",
                        "product": green_to_map(&closed),
                    }))?);
                    out.push('\n');
                    Ok(0)
                }
                Mode::Oracle => {
                    let oracle = run_oracle(opts.seed)?;
                    out.push_str(&serde_json::to_string(&serde_json::json!({
                        "left": ll.to_string(),
                        "right": kk.to_string(),
                        "mode": "oracle",
                        "product": green_to_map(&oracle),
                    }))?);
                    out.push('\n');
                    Ok(0)
                }
                Mode::Both => {
                    let oracle = run_oracle(opts.seed)?;
                    let matched = oracle == closed;
                    out.push_str(&serde_json::to_string(&serde_json::json!({
                        "left": ll.to_string(),
                        "right": kk.to_string(),
                        "mode": "both",
                        "closed": green_to_map(&closed),
                        "oracle": green_to_map(&oracle),
                        "match": matched,
                    }))?);
                    out.push('\n');
                    Ok(if matched { 0 } else { 3 })
                }
            }
        }
        "semisimplify" => {
            let [label] = args else {
                return Err(Error::Parse("semisimplify <label>".into()));
            };
            let l = canonical(ctx, label)?;
            let image = green::semisimplify(&GreenElement::from_label(l));
            out.push_str(&serde_json::to_string(&serde_json::json!({
                "input": l.to_string(),
                "image": image.to_string(),
            }))?);
            out.push('\n');
            Ok(0)
        }
        "verify-relations" => {
            let (mut smax, mut rmax) = (3i64, 3u32);
            let mut it = args.iter();
            while let Some(&a) = it.next() {
                match a {
                    "--smax" => {
                        smax = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--smax"))?
                    }
                    "--rmax" => {
                        rmax = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--rmax"))?
                    }
                    _ => return Err(Error::Parse(format!("unknown flag {a}"))),
                }
            }
            let mut gens: Vec<GreenElement> = vec![
                GreenElement::unit(),
                GreenElement::from_label(Label::Simple(1)),
                GreenElement::from_label(Label::Projective(1)),
                GreenElement::from_label(Label::Syzygy(1, 0)),
                GreenElement::from_label(Label::Syzygy(-1, 0)),
            ];
            for p in crate::field::enumerate_projective_line(&ctx) {
                for s in 1..=rmax {
                    gens.push(GreenElement::from_label(Label::TypeB(p, s)));
                }
            }
            let mut pairs = Vec::new();
            for i in 0..gens.len() {
                for j in i..gens.len() {
                    pairs.push((gens[i].clone(), gens[j].clone()));
                }
            }
            let report = green::verify_presentation(&pairs);
            out.push_str(&format!(
                "presentation products checked: {}  mismatches: {}\n",
                report.checked,
                report.mismatches.len()
            ));
            // correction-polynomial chain: fusion powers of the first syzygy
            // class against its presentation powers
            let mut chain_ok = true;
            let th = GreenElement::from_label(Label::Syzygy(1, 0));
            let th_pres = green::label_to_presentation(Label::Syzygy(1, 0));
            let mut power = GreenElement::unit();
            let mut power_pres = green::PresentationElement::one();
            for n in 1..=(2 * smax.max(1) as u32) {
                power = green::multiply(&power, &th);
                power_pres = green::pe_multiply(&power_pres, &th_pres);
                let ok = green::to_presentation(&power) == power_pres;
                chain_ok &= ok;
                out.push_str(&format!(
                    "omega chain n={n}: {}\n",
                    if ok { "ok" } else { "MISMATCH" }
                ));
            }
            let pass = report.passed() && chain_ok;
            out.push_str(&format!(
                "verify-relations: {}\n",
                if pass { "PASS" } else { "FAIL" }
            ));
            Ok(if pass { 0 } else { 3 })
        }
        "fusion-table" => {
            let (mut smax, mut rmax) = (3i64, 3u32);
            let mut max_dim = 600usize;
            let mut threads = 4usize;
            let mut it = args.iter();
            while let Some(&a) = it.next() {
                match a {
                    "--smax" => {
                        smax = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--smax"))?
                    }
                    "--rmax" => {
                        rmax = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--rmax"))?
                    }
                    "--max-dim" => {
                        max_dim = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--max-dim"))?
                    }
                    "--threads" => {
                        threads = it
                            .next()
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad_num("--threads"))?
                    }
                    _ => return Err(Error::Parse(format!("unknown flag {a}"))),
                }
            }
            let labels = catalog::sweep_labels(ctx, smax, rmax);
            let mut pairs = Vec::new();
            for (i, &l) in labels.iter().enumerate() {
                for &k in labels.iter().skip(i) {
                    if l.dim() * k.dim() <= max_dim {
                        pairs.push((l, k));
                    }
                }
            }
            let threads = threads.clamp(1, 64);
            let chunk = pairs.len().div_ceil(threads).max(1);
            let mut rows: Vec<serde_json::Value> = Vec::with_capacity(pairs.len());
            std::thread::scope(|scope| {
                let handles: Vec<_> = pairs
                    .chunks(chunk)
                    .map(|slice| {
                        scope.spawn(move || {
                            slice
                                .iter()
                                .map(|&(l, k)| {
                                    serde_json::json!({
                                        "left": l.to_string(),
                                        "right": k.to_string(),
                                        "product": green_to_map(&green::fuse(l, k)),
                                    })
                                })
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                for h in handles {
                    rows.extend(h.join().expect("fusion worker panicked"));
                }
            });
            out.push_str(&serde_json::to_string_pretty(&rows)?);
            out.push('\n');
            Ok(0)
        }
        "help" | "--help" | "-h" => {
            out.push_str(USAGE);
            Ok(0)
        }
        other => Err(Error::Parse(format!("unknown command {other}"))),
    }
}

/// Entry point shared by the binary and the integration tests.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let opts = match parse_options(args) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let _ = write!(stderr, "{USAGE}");
            return 2;
        }
    };
    let mut out = String::new();
    let code = match run_inner(&opts, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return match e {
                Error::Parse(_) | Error::BadLabel(_) => 2,
                _ => 3,
            };
        }
    };
    match &opts.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                let _ = writeln!(stderr, "error: {e}");
                return 3;
            }
        }
        None => {
            let _ = stdout.write_all(out.as_bytes());
        }
    }
    code
}
