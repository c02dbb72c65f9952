//! Command-line front end. Every subcommand is a thin adapter: it parses
//! flags, calls one library operation, and prints either the human-readable
//! rendering or a stable JSON document (sorted term order, fixed field
//! order, byte-identical across runs).
//!
//! Exit codes: 0 success / all checks passed, 1 a verification failed,
//! 2 malformed input, 3 rewrite fuel exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::{monomial_expand, weyl_character, weyl_dimension, Character, MonomialMap};
use crate::error::Error;
use crate::fock::{FockConfig, FockElement, FockSpace, DEFAULT_FUEL};
use crate::laurent::LaurentPoly;
use crate::rootdata::{RootSystem, Weight};
use crate::theorems::{GradedCharacter, VerificationReport, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FUEL: i32 = 3;

/// A parsed invocation, ready to run.
#[derive(Parser, Debug)]
#[command(
    name = "fock",
    about = "Abstract Fock space calculator: straightening, canonical bases, and identity checks",
    version
)]
pub struct CliInvocation {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Ctx {
    /// Cartan type, e.g. A1, B2, G2.
    #[arg(long = "type", value_name = "TYPE")]
    type_str: String,
    /// Level parameter, at least 1.
    #[arg(long)]
    ell: i64,
    /// Rewrite-step budget (also settable via FOCK_FUEL).
    #[arg(long)]
    fuel: Option<u64>,
    /// Emit JSON instead of human-readable text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OneWeight {
    /// Weight in comma-separated fundamental coordinates, e.g. "4,2" or "-12".
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args, Debug)]
struct TwoWeights {
    /// Pass twice: first weight, then second weight.
    #[arg(long, allow_hyphen_values = true, num_args = 1, action = clap::ArgAction::Append)]
    weight: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Straighten a ket |w> into the dominant-ket basis.
    Straighten {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// Bar involution of the straightened ket |w>.
    Bar {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// Canonical basis element C_w for dominant w.
    Cb {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// Act by the Weyl character of the first weight on the straightened ket
    /// of the second.
    Act {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weights: TwoWeights,
    },
    /// Weyl character data for a dominant weight (no level needed).
    Char {
        /// Cartan type, e.g. A1, B2, G2.
        #[arg(long = "type", value_name = "TYPE")]
        type_str: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Also list the full monomial expansion.
        #[arg(long)]
        monomial: bool,
        #[arg(long)]
        json: bool,
    },
    /// Steinberg product s_{lambda_1^*} . C_{lambda_0} of a dominant weight.
    Steinberg {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// Casselman-Shalika collapse check for a dominant weight.
    Cs {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// Linkage sign rule at ell*lambda - rho for one simple direction.
    Linkage {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
        /// Simple-reflection index (1-based).
        #[arg(long)]
        index: usize,
    },
    /// Mod-v cancellation check: weights are lambda_0 (restricted) then nu.
    Modt {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weights: TwoWeights,
        /// Simple-reflection index (1-based).
        #[arg(long)]
        index: usize,
    },
    /// Specialization check at v = 1 for a dominant weight.
    Frobenius {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
    },
    /// LLT-style coefficient: weights are lambda then mu.
    Llt {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weights: TwoWeights,
    },
    /// Coefficients of s_{lambda^*} . |nu>: weights are lambda then nu.
    Gh {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weights: TwoWeights,
    },
    /// Truncated graded character of ell*lambda down to a depth bound.
    GradedChar {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        weight: OneWeight,
        /// Number of layers below the top (depth bound D >= 0).
        #[arg(long)]
        depth: usize,
    },
    /// Run every sweeping identity check over a dominant coordinate box.
    Sweep {
        #[command(flatten)]
        ctx: Ctx,
        /// Bound on dominant coordinates for the theorem sweeps.
        #[arg(long, default_value_t = 4)]
        bound: i64,
        /// Which check to sweep.
        #[arg(long, default_value = "all",
              value_parser = ["all", "steinberg", "cs", "modt", "frobenius", "gh"])]
        check: String,
        /// Coordinate bound for the random nu in the mod-v sweep.
        #[arg(long, default_value_t = 5)]
        nu_bound: i64,
        /// Random nu samples per restricted weight in the mod-v sweep.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// RNG seed for the mod-v sweep.
        #[arg(long, default_value_t = 20080913)]
        seed: u64,
    },
}

/// Parses an argument vector. On malformed input the returned `clap::Error`
/// renders a usage message and exits with code 2 via [`clap::Error::exit`].
pub fn parse_args<I, T>(argv: I) -> Result<CliInvocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    CliInvocation::try_parse_from(argv)
}

// ---------------------------------------------------------------------------
// JSON document shapes (field order is the struct order; all term lists are
// sorted, so output is byte-stable across runs).

#[derive(Serialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(b: &BigInt) -> Self {
        match i64::try_from(b) {
            Ok(v) => JsonInt::Small(v),
            Err(_) => JsonInt::Big(b.to_string()),
        }
    }
}

fn poly_pairs(p: &LaurentPoly) -> Vec<(i64, JsonInt)> {
    p.iter().map(|(e, c)| (e, JsonInt::from(c))).collect()
}

#[derive(Serialize)]
struct FockElementJson {
    #[serde(rename = "type")]
    type_str: String,
    ell: i64,
    terms: Vec<FockTermJson>,
}

#[derive(Serialize)]
struct FockTermJson {
    wt: Vec<i64>,
    coeff: Vec<(i64, JsonInt)>,
}

fn fock_element_json(x: &FockElement) -> FockElementJson {
    FockElementJson {
        type_str: x.cartan_type().to_string(),
        ell: x.ell(),
        terms: x
            .terms()
            .map(|(w, c)| FockTermJson {
                wt: w.coords().to_vec(),
                coeff: poly_pairs(c),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct PolyJson {
    #[serde(rename = "type")]
    type_str: String,
    ell: i64,
    coeff: Vec<(i64, JsonInt)>,
}

#[derive(Serialize)]
struct MultTermJson {
    wt: Vec<i64>,
    mult: i64,
}

fn monomial_terms_json(m: &MonomialMap) -> Vec<MultTermJson> {
    m.iter()
        .map(|(w, v)| MultTermJson {
            wt: w.coords().to_vec(),
            mult: *v,
        })
        .collect()
}

#[derive(Serialize)]
struct CharacterJson {
    #[serde(rename = "type")]
    type_str: String,
    highest: Vec<i64>,
    dimension: JsonInt,
    dominant_multiplicities: Vec<MultTermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    monomials: Option<Vec<MultTermJson>>,
}

#[derive(Serialize)]
struct ReportJson {
    claim: String,
    instance: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            claim: r.claim.clone(),
            instance: r.instance.clone(),
            passed: r.passed,
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
        }
    }
}

#[derive(Serialize)]
struct LayerJson {
    degree: usize,
    terms: Vec<MultTermJson>,
}

#[derive(Serialize)]
struct GradedJson {
    #[serde(rename = "type")]
    type_str: String,
    ell: i64,
    lambda: Vec<i64>,
    depth: usize,
    layers: Vec<LayerJson>,
}

#[derive(Serialize)]
struct SweepSummaryJson {
    total: usize,
    failed: usize,
}

// ---------------------------------------------------------------------------

struct Session {
    verifier: Verifier,
    json: bool,
}

impl Session {
    fn open(ctx: &Ctx) -> crate::Result<Self> {
        let rs = Arc::new(RootSystem::from_type_str(&ctx.type_str)?);
        let fuel = ctx
            .fuel
            .or_else(|| {
                std::env::var("FOCK_FUEL")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(DEFAULT_FUEL);
        let cfg = FockConfig::with_fuel(rs, ctx.ell, fuel)?;
        Ok(Session {
            verifier: Verifier::new(FockSpace::new(cfg)),
            json: ctx.json,
        })
    }

    fn fock(&self) -> &FockSpace {
        &self.verifier.fock()
    }

    fn parse_weight(&self, s: &str) -> crate::Result<Weight> {
        let w: Weight = s.parse()?;
        if w.rank() != self.fock().root_system().rank() {
            return Err(Error::RankMismatch {
                got: w.rank(),
                expected: self.fock().root_system().rank(),
            });
        }
        Ok(w)
    }

    fn emit_element(&self, out: &mut dyn Write, x: &FockElement) -> std::io::Result<()> {
        if self.json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&fock_element_json(x)).expect("serializable")
            )
        } else {
            writeln!(out, "{x}")
        }
    }

    fn emit_report(&self, out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<i32> {
        if self.json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&ReportJson::from(r)).expect("serializable")
            )?;
        } else {
            writeln!(out, "{r}")?;
        }
        Ok(if r.passed { EXIT_OK } else { EXIT_CHECK_FAILED })
    }
}

fn two_weights(ws: &[String]) -> Result<(&str, &str), Error> {
    match ws {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Precondition(format!(
            "expected exactly two --weight flags, got {}",
            ws.len()
        ))),
    }
}

fn character_json(
    rs: &RootSystem,
    c: &Character,
    monomials: Option<&MonomialMap>,
) -> CharacterJson {
    CharacterJson {
        type_str: rs.cartan_type().to_string(),
        highest: c.highest().coords().to_vec(),
        dimension: JsonInt::from(&weyl_dimension(rs, c.highest()).expect("dominant")),
        dominant_multiplicities: c
            .dominant_multiplicities()
            .iter()
            .map(|(w, m)| MultTermJson {
                wt: w.coords().to_vec(),
                mult: *m,
            })
            .collect(),
        monomials: monomials.map(monomial_terms_json),
    }
}

/// Executes a parsed invocation, writing output to `out`. Returns the
/// process exit code.
pub fn run(inv: &CliInvocation, out: &mut dyn Write) -> i32 {
    match run_inner(inv, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::FuelExhausted(_) => EXIT_FUEL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn run_inner(inv: &CliInvocation, out: &mut dyn Write) -> crate::Result<i32> {
    let io_err = |e: std::io::Error| Error::Precondition(format!("output error: {e}"));
    match &inv.command {
        Command::Straighten { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let x = s.fock().straighten_ket(&w)?;
            s.emit_element(out, &x).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Bar { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let x = s.fock().straighten_ket(&w)?;
            let b = s.fock().bar(&x)?;
            s.emit_element(out, &b).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Cb { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let x = s.fock().canonical_basis(&w)?;
            s.emit_element(out, &x).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Act { ctx, weights } => {
            let s = Session::open(ctx)?;
            let (a, b) = two_weights(&weights.weight)?;
            let hw = s.parse_weight(a)?;
            let ket = s.parse_weight(b)?;
            let c = weyl_character(s.fock().root_system(), &hw)?;
            let base = s.fock().straighten_ket(&ket)?;
            let x = s.fock().act_character(&c, &base)?;
            s.emit_element(out, &x).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Char {
            type_str,
            weight,
            monomial,
            json,
        } => {
            let rs = RootSystem::from_type_str(type_str)?;
            let w: Weight = weight.parse()?;
            if w.rank() != rs.rank() {
                return Err(Error::RankMismatch {
                    got: w.rank(),
                    expected: rs.rank(),
                });
            }
            let c = weyl_character(&rs, &w)?;
            let mon = monomial.then(|| monomial_expand(&rs, &c));
            if *json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&character_json(&rs, &c, mon.as_ref()))
                        .expect("serializable")
                )
                .map_err(io_err)?;
            } else {
                writeln!(
                    out,
                    "character {} of {}: dim {}",
                    w,
                    rs.cartan_type(),
                    weyl_dimension(&rs, &w)?
                )
                .map_err(io_err)?;
                for (mu, m) in c.dominant_multiplicities().iter().rev() {
                    writeln!(out, "  mult[{mu}] = {m}").map_err(io_err)?;
                }
                if let Some(m) = mon {
                    writeln!(out, "  monomials: {m}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Steinberg { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let x = s.verifier.steinberg_product(&w)?;
            s.emit_element(out, &x).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Cs { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let r = s.verifier.casselman_shalika_check(&w)?;
            s.emit_report(out, &r).map_err(io_err)
        }
        Command::Linkage { ctx, weight, index } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let r = s.verifier.verify_linkage_rho(&w, *index)?;
            s.emit_report(out, &r).map_err(io_err)
        }
        Command::Modt {
            ctx,
            weights,
            index,
        } => {
            let s = Session::open(ctx)?;
            let (a, b) = two_weights(&weights.weight)?;
            let l0 = s.parse_weight(a)?;
            let nu = s.parse_weight(b)?;
            let r = s.verifier.mod_t_cancellation_check(&l0, &nu, *index)?;
            s.emit_report(out, &r).map_err(io_err)
        }
        Command::Frobenius { ctx, weight } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let r = s.verifier.frobenius_check(&w)?;
            s.emit_report(out, &r).map_err(io_err)
        }
        Command::Llt { ctx, weights } => {
            let s = Session::open(ctx)?;
            let (a, b) = two_weights(&weights.weight)?;
            let lambda = s.parse_weight(a)?;
            let mu = s.parse_weight(b)?;
            let p = s.verifier.llt_coefficient(&lambda, &mu)?;
            if s.json {
                let doc = PolyJson {
                    type_str: s.fock().root_system().cartan_type().to_string(),
                    ell: s.fock().ell(),
                    coeff: poly_pairs(&p),
                };
                writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))
                    .map_err(io_err)?;
            } else {
                writeln!(out, "{p}").map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Gh { ctx, weights } => {
            let s = Session::open(ctx)?;
            let (a, b) = two_weights(&weights.weight)?;
            let lambda = s.parse_weight(a)?;
            let nu = s.parse_weight(b)?;
            let x = s.verifier.gh_coefficients(&lambda, &nu)?;
            s.emit_element(out, &x).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::GradedChar { ctx, weight, depth } => {
            let s = Session::open(ctx)?;
            let w = s.parse_weight(&weight.weight)?;
            let g = s.verifier.affine_graded_character(&w, *depth)?;
            if s.json {
                let doc = graded_json(&s, &w, &g);
                writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))
                    .map_err(io_err)?;
            } else {
                for (d, layer) in g.layers().iter().enumerate() {
                    writeln!(out, "q^-{d}: {layer}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            ctx,
            bound,
            check,
            nu_bound,
            samples,
            seed,
        } => {
            let s = Session::open(ctx)?;
            let reports = match check.as_str() {
                "steinberg" => s.verifier.sweep_steinberg(*bound)?,
                "cs" => s.verifier.sweep_casselman_shalika(*bound)?,
                "modt" => s.verifier.sweep_mod_t(*nu_bound, *samples, *seed)?,
                "frobenius" => s.verifier.sweep_frobenius(*bound)?,
                "gh" => s.verifier.sweep_gh_identity(*bound)?,
                _ => s.verifier.sweep_all(*bound, *nu_bound, *samples, *seed)?,
            };
            let failed = reports.iter().filter(|r| !r.passed).count();
            for r in &reports {
                if s.json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&ReportJson::from(r)).expect("serializable")
                    )
                    .map_err(io_err)?;
                } else {
                    writeln!(out, "{r}").map_err(io_err)?;
                }
            }
            if s.json {
                let summary = SweepSummaryJson {
                    total: reports.len(),
                    failed,
                };
                writeln!(out, "{}", serde_json::to_string(&summary).expect("serializable"))
                    .map_err(io_err)?;
            } else {
                writeln!(out, "summary: {} checks, {} failures", reports.len(), failed)
                    .map_err(io_err)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn graded_json(s: &Session, lambda: &Weight, g: &GradedCharacter) -> GradedJson {
    GradedJson {
        type_str: s.fock().root_system().cartan_type().to_string(),
        ell: s.fock().ell(),
        lambda: lambda.coords().to_vec(),
        depth: g.depth_bound(),
        layers: g
            .layers()
            .iter()
            .enumerate()
            .map(|(d, layer)| LayerJson {
                degree: d,
                terms: monomial_terms_json(layer),
            })
            .collect(),
    }
}

/// Full entry point used by the binary: parse, run, and return the exit code.
pub fn main_from_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match parse_args(argv) {
        Ok(inv) => inv,
        Err(e) => {
            // clap renders its own usage message; its exit code for
            // malformed input is 2.
            e.exit();
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(&inv, &mut lock)
}

/// Runs an invocation and captures stdout; used by tests to diff CLI output
/// against direct library calls.
pub fn run_to_string<I, T>(argv: I) -> Result<(i32, String), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = parse_args(argv)?;
    let mut buf = Vec::new();
    let code = run(&inv, &mut buf);
    Ok((code, String::from_utf8_lossy(&buf).into_owned()))
}
