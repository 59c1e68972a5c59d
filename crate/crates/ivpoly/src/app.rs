//! Command implementations shared by the binary and the integration tests.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{Map, Number, Value};

use ivpoly_core::{
    all_witnesses, canonicalize, companion_case_fails, divisibility_case_fails, entry_scalarize,
    generate_family, image_at, irreducible_companion_case_fails, irreducible_lift,
    is_irreducible_mod_p, member_matrix_poly, member_via_companion, member_via_divisibility,
    member_via_irreducible_companion, monic_from_index, padic_image, phi, reduced_representative,
    EnumerationBudget, Error as CoreError, IntMatrix, IntPoly, MembershipVerdict, Oracle,
    PadicMatrix, RationalPolyRep,
};

use crate::json;
use crate::parse;

pub const EXIT_MEMBER: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "ivpoly", version, about = "Exact arithmetic for integer-valued polynomials on matrix rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Enumeration budget (max residue cases); overrides IVPOLY_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for the enumeration scan.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleChoice {
    Div,
    Comp,
    Irr,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether g/d lies in Int(M_n(Z)).
    Member {
        #[arg(long)]
        n: usize,
        /// Polynomial g: expression string or JSON {"coeffs":[...]}.
        #[arg(long)]
        poly: String,
        /// Denominator d.
        #[arg(long, default_value = "1")]
        den: String,
        #[arg(long, value_enum, default_value_t = OracleChoice::Div)]
        oracle: OracleChoice,
        /// Collect every failing residue polynomial instead of stopping at the first.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Decide whether a matrix-coefficient polynomial lies in Int[M_n(Z)].
    MemberMatrix {
        #[arg(long)]
        file: PathBuf,
    },
    /// Lift a monic residue polynomial to an irreducible one congruent mod d.
    LiftIrreducible {
        /// Expected degree (checked against the polynomial).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: String,
        #[arg(long)]
        poly: String,
    },
    /// Evaluate a member f = g/d at an integer matrix exactly.
    Image {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "1")]
        den: String,
        /// Matrix: row-major text "0 -1 ; 1 0" or JSON {"n":..,"entries":[[..]]}.
        #[arg(long)]
        matrix: String,
    },
    /// Evaluate f at a finite-precision p-adic matrix.
    PadicImage {
        #[arg(long)]
        p: String,
        /// Input precision: entries are given mod p^prec_in.
        #[arg(long)]
        prec_in: u32,
        /// Output precision m for the reduced representative mod p^m.
        #[arg(long)]
        prec_out: u32,
        /// Matrix of residues mod p^prec_in, text or JSON form.
        #[arg(long)]
        matrix_mod: String,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "1")]
        den: String,
    },
    /// Emit the member (x^(p^2)-x)(x^p-x)/p of Int(M_2(Z)).
    Generate {
        #[arg(long)]
        p: String,
    },
    /// Apply the isomorphism phi: (M_n(Q))[x] -> M_n(Q[x]).
    Phi {
        #[arg(long)]
        file: PathBuf,
    },
    /// Extract the scalar entry c_jk of phi(F) via the matrix-unit sandwich.
    Scalarize {
        #[arg(long)]
        file: PathBuf,
        /// Row index, 1-based.
        #[arg(long)]
        j: usize,
        /// Column index, 1-based.
        #[arg(long)]
        k: usize,
    },
    /// Run the fast subset of the acceptance checks.
    Selftest,
}

/// A command's result: the JSON report, its text rendering, and the exit code.
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub exit: i32,
}

#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: "usage",
            message: message.into(),
            exit: EXIT_ERROR,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("code".into(), Value::String(self.code.into()));
        obj.insert("message".into(), Value::String(self.message.clone()));
        Value::Object(obj)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let (code, exit) = match &e {
            CoreError::BudgetExceeded { .. } => ("budget-exceeded", EXIT_BUDGET),
            CoreError::NotIntegerValuedAtMatrix => ("not-integer-valued", EXIT_NEGATIVE),
            CoreError::NonMemberGenerator | CoreError::NonMemberElement => {
                ("non-member", EXIT_NEGATIVE)
            }
            CoreError::InsufficientPrecision { .. } => ("insufficient-precision", EXIT_ERROR),
            CoreError::InternalAssertionFailure(_) => ("internal-assertion", EXIT_ERROR),
            _ => ("data-error", EXIT_ERROR),
        };
        CliError {
            code,
            message: e.to_string(),
            exit,
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError {
            code: "parse-error",
            message: e.to_string(),
            exit: EXIT_ERROR,
        }
    }
}

impl From<json::JsonError> for CliError {
    fn from(e: json::JsonError) -> Self {
        CliError {
            code: "json-error",
            message: e.to_string(),
            exit: EXIT_ERROR,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: "io-error",
            message: e.to_string(),
            exit: EXIT_ERROR,
        }
    }
}

/// Accepts a polynomial either as an expression string or as coefficient JSON.
fn read_poly(input: &str) -> Result<IntPoly, CliError> {
    if input.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(input)
            .map_err(|e| CliError::usage(format!("invalid polynomial JSON: {e}")))?;
        Ok(json::poly_from_json(&v)?)
    } else {
        Ok(parse::parse_poly(input)?)
    }
}

/// Accepts a matrix either in row-major text form or as JSON.
fn read_matrix(input: &str) -> Result<IntMatrix, CliError> {
    if input.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(input)
            .map_err(|e| CliError::usage(format!("invalid matrix JSON: {e}")))?;
        Ok(json::matrix_from_json(&v)?)
    } else {
        Ok(parse::parse_matrix(input)?)
    }
}

fn read_rational(poly: &str, den: &str) -> Result<RationalPolyRep, CliError> {
    let g = read_poly(poly)?;
    let d = parse::parse_bigint(den)?;
    Ok(canonicalize(g, d)?)
}

fn resolve_budget(opts: &GlobalOpts) -> Result<EnumerationBudget, CliError> {
    let max = match opts.budget {
        Some(b) => b,
        None => match std::env::var("IVPOLY_BUDGET") {
            Ok(s) => s
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("IVPOLY_BUDGET is not an integer: {s:?}")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    if max == 0 {
        return Err(CliError::usage("budget must be at least 1"));
    }
    Ok(EnumerationBudget::new(max))
}

fn case_fails(oracle: Oracle, g: &IntPoly, h: &IntPoly, d: &BigInt) -> ivpoly_core::Result<bool> {
    match oracle {
        Oracle::Divisibility => divisibility_case_fails(g, h, d),
        Oracle::Companion => companion_case_fails(g, h, d),
        Oracle::IrreducibleCompanion => irreducible_companion_case_fails(g, h, d),
    }
}

/// Membership scan partitioned across `jobs` worker threads. Each case is
/// independent; the merge keeps the least failing index, so the verdict,
/// witness, and case count are identical to the single-threaded scan.
pub fn member_with_jobs(
    f: &RationalPolyRep,
    n: usize,
    oracle: Oracle,
    budget: &EnumerationBudget,
    jobs: usize,
    collect_all: bool,
) -> Result<(MembershipVerdict, Vec<IntPoly>), CoreError> {
    if jobs <= 1 {
        if collect_all {
            return all_witnesses(f, n, oracle, budget);
        }
        let v = match oracle {
            Oracle::Divisibility => member_via_divisibility(f, n, budget),
            Oracle::Companion => member_via_companion(f, n, budget),
            Oracle::IrreducibleCompanion => member_via_irreducible_companion(f, n, budget),
        }?;
        return Ok((v, Vec::new()));
    }
    if n == 0 {
        return Err(CoreError::DegreeZero);
    }
    let d = f.denominator();
    if d.is_one() {
        return Ok((
            MembershipVerdict {
                member: true,
                witness: None,
                oracle,
                cases: 0,
            },
            Vec::new(),
        ));
    }
    let total_big = d.pow(n as u32);
    if total_big > BigInt::from(budget.max_cases) {
        return Err(CoreError::BudgetExceeded {
            cases: u128::try_from(total_big).unwrap_or(u128::MAX),
            max_cases: budget.max_cases,
        });
    }
    let total = u64::try_from(total_big).expect("bounded by budget");
    let d_small = u64::try_from(d).expect("bounded by budget");
    let g = f.numerator();
    let chunk = total.div_ceil(jobs as u64).max(1);
    let results: Vec<Result<Vec<u64>, CoreError>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..jobs as u64 {
            let lo = w * chunk;
            let hi = (lo + chunk).min(total);
            if lo >= hi {
                break;
            }
            handles.push(scope.spawn(move || {
                let mut failing = Vec::new();
                for idx in lo..hi {
                    let h = monic_from_index(idx, n, d_small);
                    if case_fails(oracle, g, &h, d)? {
                        failing.push(idx);
                        if !collect_all {
                            break;
                        }
                    }
                }
                Ok(failing)
            }));
        }
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut failing: Vec<u64> = Vec::new();
    for r in results {
        failing.extend(r?);
    }
    failing.sort_unstable();
    let member = failing.is_empty();
    let cases = match (member, collect_all) {
        (true, _) | (false, true) => total,
        (false, false) => failing[0] + 1,
    };
    let witnesses: Vec<IntPoly> = if collect_all {
        failing.iter().map(|&i| monic_from_index(i, n, d_small)).collect()
    } else {
        Vec::new()
    };
    let witness = if member {
        None
    } else if collect_all {
        witnesses.first().cloned()
    } else {
        Some(monic_from_index(failing[0], n, d_small))
    };
    Ok((
        MembershipVerdict {
            member,
            witness,
            oracle,
            cases,
        },
        witnesses,
    ))
}

fn oracle_of(choice: OracleChoice) -> Option<Oracle> {
    match choice {
        OracleChoice::Div => Some(Oracle::Divisibility),
        OracleChoice::Comp => Some(Oracle::Companion),
        OracleChoice::Irr => Some(Oracle::IrreducibleCompanion),
        OracleChoice::All => None,
    }
}

fn poly_text(p: &IntPoly) -> String {
    format!("{p}")
}

fn matrix_text(m: &IntMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn verdict_report(
    verdict: &MembershipVerdict,
    oracle_name: &str,
    witnesses: Option<&[IntPoly]>,
) -> Outcome {
    let mut obj = Map::new();
    obj.insert("cases".into(), Value::Number(Number::from(verdict.cases)));
    obj.insert("member".into(), Value::Bool(verdict.member));
    obj.insert("oracle".into(), Value::String(oracle_name.into()));
    obj.insert(
        "witness".into(),
        verdict
            .witness
            .as_ref()
            .map(json::poly_to_json)
            .unwrap_or(Value::Null),
    );
    let mut text = format!(
        "member: {}\noracle: {}\ncases: {}\nwitness: {}",
        verdict.member,
        oracle_name,
        verdict.cases,
        verdict
            .witness
            .as_ref()
            .map(poly_text)
            .unwrap_or_else(|| "none".into()),
    );
    if let Some(ws) = witnesses {
        obj.insert(
            "witnesses".into(),
            Value::Array(ws.iter().map(json::poly_to_json).collect()),
        );
        text.push_str("\nwitnesses:");
        for w in ws {
            text.push_str(&format!("\n  {w}"));
        }
    }
    Outcome {
        report: Value::Object(obj),
        text,
        exit: if verdict.member { EXIT_MEMBER } else { EXIT_NEGATIVE },
    }
}

fn cmd_member(
    n: usize,
    poly: &str,
    den: &str,
    oracle: OracleChoice,
    all: bool,
    opts: &GlobalOpts,
) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let f = read_rational(poly, den)?;
    let budget = resolve_budget(opts)?;
    match oracle_of(oracle) {
        Some(o) => {
            let (verdict, witnesses) = member_with_jobs(&f, n, o, &budget, opts.jobs, all)?;
            Ok(verdict_report(
                &verdict,
                o.as_str(),
                all.then_some(witnesses.as_slice()),
            ))
        }
        None => {
            let mut verdicts = Vec::new();
            let mut all_lists = Vec::new();
            for o in [Oracle::Divisibility, Oracle::Companion, Oracle::IrreducibleCompanion] {
                let (v, w) = member_with_jobs(&f, n, o, &budget, opts.jobs, all)?;
                verdicts.push(v);
                all_lists.push(w);
            }
            let agree = verdicts.windows(2).all(|p| {
                p[0].member == p[1].member && p[0].witness == p[1].witness
            });
            if !agree {
                return Err(CliError::from(CoreError::InternalAssertionFailure(
                    "oracles disagree".into(),
                )));
            }
            let verdict = verdicts.into_iter().next().expect("nonempty");
            Ok(verdict_report(
                &verdict,
                "all",
                all.then_some(all_lists[0].as_slice()),
            ))
        }
    }
}

fn cmd_member_matrix(file: &PathBuf, opts: &GlobalOpts) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(file)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("invalid JSON in {}: {e}", file.display())))?;
    let f = json::matcoeff_from_json(&v)?;
    let budget = resolve_budget(opts)?;
    let report = member_matrix_poly(&f, &budget)?;
    let mut obj = Map::new();
    obj.insert("cases".into(), Value::Number(Number::from(report.cases)));
    obj.insert(
        "entry".into(),
        report
            .failing_entry
            .map(|(j, k)| {
                Value::Array(vec![
                    Value::Number(Number::from(j as u64)),
                    Value::Number(Number::from(k as u64)),
                ])
            })
            .unwrap_or(Value::Null),
    );
    obj.insert("member".into(), Value::Bool(report.member));
    obj.insert(
        "witness".into(),
        report
            .scalar_verdict
            .as_ref()
            .and_then(|v| v.witness.as_ref())
            .map(json::poly_to_json)
            .unwrap_or(Value::Null),
    );
    let text = format!(
        "member: {}\nentry: {}\nwitness: {}\ncases: {}",
        report.member,
        report
            .failing_entry
            .map(|(j, k)| format!("({j},{k})"))
            .unwrap_or_else(|| "none".into()),
        report
            .scalar_verdict
            .as_ref()
            .and_then(|v| v.witness.as_ref())
            .map(poly_text)
            .unwrap_or_else(|| "none".into()),
        report.cases,
    );
    Ok(Outcome {
        report: Value::Object(obj),
        text,
        exit: if report.member { EXIT_MEMBER } else { EXIT_NEGATIVE },
    })
}

fn cmd_lift_irreducible(n: Option<usize>, d: &str, poly: &str) -> Result<Outcome, CliError> {
    let h = read_poly(poly)?;
    let d = parse::parse_bigint(d)?;
    if let (Some(n), Some(deg)) = (n, h.degree()) {
        if n != deg {
            return Err(CliError::usage(format!(
                "--n {n} does not match the degree {deg} of the polynomial"
            )));
        }
    }
    let (lift, p) = irreducible_lift(&h, &d)?;
    let mut obj = Map::new();
    obj.insert("lift".into(), json::poly_to_json(&lift));
    obj.insert("prime".into(), json::bigint_to_value(&p));
    let text = format!("lift: {lift}\nprime: {p}");
    Ok(Outcome {
        report: Value::Object(obj),
        text,
        exit: EXIT_MEMBER,
    })
}

fn cmd_image(n: usize, poly: &str, den: &str, matrix: &str) -> Result<Outcome, CliError> {
    let f = read_rational(poly, den)?;
    let c = read_matrix(matrix)?;
    if c.dim() != n {
        return Err(CliError::usage(format!(
            "--n {n} does not match the {0}x{0} matrix",
            c.dim()
        )));
    }
    let r = reduced_representative(&f, &c)?;
    let image = image_at(&f, &c)?;
    let mut obj = Map::new();
    obj.insert("image".into(), json::matrix_to_json(&image));
    obj.insert("r".into(), json::poly_to_json(&r));
    let text = format!("r: {r}\nimage: {}", matrix_text(&image));
    Ok(Outcome {
        report: Value::Object(obj),
        text,
        exit: EXIT_MEMBER,
    })
}

fn cmd_padic_image(
    p: &str,
    prec_in: u32,
    prec_out: u32,
    matrix_mod: &str,
    poly: &str,
    den: &str,
) -> Result<Outcome, CliError> {
    let f = read_rational(poly, den)?;
    let p = parse::parse_bigint(p)?;
    let raw = read_matrix(matrix_mod)?;
    let c = PadicMatrix::from_int_matrix(&raw, &p, prec_in)?;
    let s = padic_image(&f, &c, prec_out)?;
    let modulus = format!("{p}^{prec_out}");
    let mut s_obj = Map::new();
    s_obj.insert(
        "coeffs".into(),
        Value::Array(s.coeffs().iter().map(json::bigint_to_value).collect()),
    );
    s_obj.insert("mod".into(), Value::String(modulus.clone()));
    let mut obj = Map::new();
    obj.insert("s".into(), Value::Object(s_obj));
    let coeff_text = s
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let text = format!("s: {coeff_text}\nmod: {modulus}");
    Ok(Outcome {
        report: Value::Object(obj),
        text,
        exit: EXIT_MEMBER,
    })
}

fn cmd_generate(p: &str, opts: &GlobalOpts) -> Result<Outcome, CliError> {
    let p = parse::parse_bigint(p)?;
    let budget = resolve_budget(opts)?;
    let f = generate_family(&p, &budget)?;
    let report = json::rational_poly_to_json(&f);
    let text = format!("num: {}\nden: {}", f.numerator(), f.denominator());
    Ok(Outcome {
        report,
        text,
        exit: EXIT_MEMBER,
    })
}

fn read_matcoeff_file(file: &PathBuf) -> Result<ivpoly_core::MatCoeffPoly, CliError> {
    let text = fs::read_to_string(file)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("invalid JSON in {}: {e}", file.display())))?;
    Ok(json::matcoeff_from_json(&v)?)
}

fn cmd_phi(file: &PathBuf) -> Result<Outcome, CliError> {
    let f = read_matcoeff_file(file)?;
    let m = phi(&f);
    let report = json::matofpoly_to_json(&m);
    let mut lines = Vec::new();
    for j in 0..m.dim() {
        for k in 0..m.dim() {
            let e = m.entry(j, k);
            lines.push(format!(
                "({},{}): ({}) / {}",
                j + 1,
                k + 1,
                e.numerator(),
                e.denominator()
            ));
        }
    }
    Ok(Outcome {
        report,
        text: lines.join("\n"),
        exit: EXIT_MEMBER,
    })
}

fn cmd_scalarize(file: &PathBuf, j: usize, k: usize) -> Result<Outcome, CliError> {
    let f = read_matcoeff_file(file)?;
    let e = entry_scalarize(&f, j, k)?;
    let report = json::rational_poly_to_json(&e);
    let text = format!("num: {}\nden: {}", e.numerator(), e.denominator());
    Ok(Outcome {
        report,
        text,
        exit: EXIT_MEMBER,
    })
}

fn selftest_checks() -> Vec<(&'static str, bool)> {
    let budget = EnumerationBudget::new(DEFAULT_BUDGET);
    let mut checks = Vec::new();
    let rat = |coeffs: &[i64], d: i64| {
        canonicalize(IntPoly::from_i64s(coeffs), BigInt::from(d)).expect("valid")
    };

    // (x^(p^2)-x)(x^p-x)/p is a member of Int(M_2(Z)) for p = 2, 3.
    for p in [2i64, 3] {
        let f = generate_family(&BigInt::from(p), &budget);
        let ok = f.is_ok_and(|f| {
            [Oracle::Divisibility, Oracle::Companion, Oracle::IrreducibleCompanion]
                .iter()
                .all(|&o| {
                    member_with_jobs(&f, 2, o, &budget, 1, false)
                        .is_ok_and(|(v, _)| v.member)
                })
        });
        checks.push(("known member family", ok));
    }

    // (x^2-x)/2: member at n = 1, non-member at n = 2 with x^2+x+1 failing.
    let f = rat(&[0, -1, 1], 2);
    let ok1 = member_via_divisibility(&f, 1, &budget).is_ok_and(|v| v.member);
    checks.push(("(x^2-x)/2 in Int(M_1)", ok1));
    let ok2 = all_witnesses(&f, 2, Oracle::Divisibility, &budget).is_ok_and(|(v, w)| {
        !v.member && w.contains(&IntPoly::from_i64s(&[1, 1, 1]))
    });
    checks.push(("(x^2-x)/2 not in Int(M_2), x^2+x+1 fails", ok2));

    // Fixed image case: f = (x^4-x)(x^2-x)/2 at the rotation matrix is -I and r = -1.
    let family2 = rat(&[0, 0, 1, -1, 0, -1, 1], 2);
    let rot = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).expect("valid");
    let ok = reduced_representative(&family2, &rot)
        .is_ok_and(|r| r == IntPoly::from_i64s(&[-1]))
        && image_at(&family2, &rot)
            .is_ok_and(|m| m == IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]).unwrap());
    checks.push(("fixed image case r=-1, f(C)=-I", ok));

    // p-adic image at precision 5 truncated to 4 is the constant 15 mod 16,
    // independent of the lift.
    let two = BigInt::from(2);
    let ok = PadicMatrix::from_int_matrix(&rot, &two, 5).ok().and_then(|c| {
        let s = padic_image(&family2, &c, 4).ok()?;
        let shifted = IntMatrix::from_i64_rows(&[&[32, -1 + 64], &[1, 32]]).ok()?;
        let c2 = PadicMatrix::from_int_matrix(&shifted, &two, 5).ok()?;
        let s2 = padic_image(&family2, &c2, 4).ok()?;
        Some(s.coeffs() == [BigInt::from(15)] && s == s2)
    }) == Some(true);
    checks.push(("p-adic image mod 2^4 lift-independent", ok));

    // Irreducible lift contract on the worked example.
    let ok = irreducible_lift(&IntPoly::from_i64s(&[0, 1, 1]), &two).is_ok_and(|(k, p)| {
        k.is_monic()
            && k.degree() == Some(2)
            && (&k - &IntPoly::from_i64s(&[0, 1, 1]))
                .coeffs()
                .iter()
                .all(|c| (c % &two) == BigInt::from(0))
            && is_irreducible_mod_p(&k, &p).unwrap_or(false)
    });
    checks.push(("irreducible lift of x^2+x mod 2", ok));

    // phi round-trip and sandwich scalarization on a fixed input.
    let fm = ivpoly_core::MatCoeffPoly::scalar_times_unit(&family2, 2, 0, 1).expect("valid");
    let ok = ivpoly_core::phi_inv(&phi(&fm)) == fm
        && entry_scalarize(&fm, 1, 2).is_ok_and(|e| e == family2);
    checks.push(("phi round-trip and sandwich", ok));

    // Werner closure: the product of two members stays a member.
    let gm = ivpoly_core::MatCoeffPoly::scalar_times_unit(&family2, 2, 1, 0).expect("valid");
    let ok = ivpoly_core::mat_poly_mul(&fm, &gm)
        .and_then(|prod| member_matrix_poly(&prod, &budget))
        .is_ok_and(|r| r.member);
    checks.push(("product of members is a member", ok));

    checks
}

fn cmd_selftest() -> Result<Outcome, CliError> {
    let checks = selftest_checks();
    let all_ok = checks.iter().all(|(_, ok)| *ok);
    let mut obj = Map::new();
    obj.insert(
        "checks".into(),
        Value::Array(
            checks
                .iter()
                .map(|(name, ok)| {
                    let mut c = Map::new();
                    c.insert("name".into(), Value::String((*name).into()));
                    c.insert("pass".into(), Value::Bool(*ok));
                    Value::Object(c)
                })
                .collect(),
        ),
    );
    obj.insert("pass".into(), Value::Bool(all_ok));
    let text = checks
        .iter()
        .map(|(name, ok)| format!("{}: {name}", if *ok { "PASS" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        report: Value::Object(obj),
        text,
        exit: if all_ok { EXIT_MEMBER } else { EXIT_NEGATIVE },
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if cli.global.jobs == 0 {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    match &cli.command {
        Command::Member {
            n,
            poly,
            den,
            oracle,
            all_witnesses,
        } => cmd_member(*n, poly, den, *oracle, *all_witnesses, &cli.global),
        Command::MemberMatrix { file } => cmd_member_matrix(file, &cli.global),
        Command::LiftIrreducible { n, d, poly } => cmd_lift_irreducible(*n, d, poly),
        Command::Image { n, poly, den, matrix } => cmd_image(*n, poly, den, matrix),
        Command::PadicImage {
            p,
            prec_in,
            prec_out,
            matrix_mod,
            poly,
            den,
        } => cmd_padic_image(p, *prec_in, *prec_out, matrix_mod, poly, den),
        Command::Generate { p } => cmd_generate(p, &cli.global),
        Command::Phi { file } => cmd_phi(file),
        Command::Scalarize { file, j, k } => cmd_scalarize(file, *j, *k),
        Command::Selftest => cmd_selftest(),
    }
}
