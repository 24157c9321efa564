//! `ischubert`: command-line front end.
//!
//! Exit codes: 0 ok, 1 usage or input error, 2 guard exceeded, 3 an identity failed.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ischubert::insertion::{
    beta_coefficients, insert, involution_ck_insert, shifted_hecke_insert, tableau_descents, word_descents, SetValuedShiftedTableau,
    ShiftedTableau,
};
use ischubert::involution::all_involutions;
use ischubert::perm::parse_word;
use ischubert::pfaffian::verify_pfaffian_theorem;
use ischubert::schubert::{inv_schubert_poly, inv_stanley_truncation, schubert_poly, Method};
use ischubert::symfunc::{expand_in_schur_p, schur_q_scale};
use ischubert::transition::{
    classical_ls_tree, expand_f, expand_fhat, expand_fhat_quasi, expand_ghat, inv_ls_tree, transition_identity_check,
    triangularity_certificate, LSTreeNode,
};
use ischubert::vexillary::{first_pattern, is_q_vexillary, VexMethod, ELEVEN_P, FIVE_Q};
use ischubert::{BigInt, Error, Expansion, IntPolynomial, Involution, Permutation};
use rayon::prelude::*;
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "ischubert", version, about = "Involution Schubert polynomials and Schur P-positivity")]
struct Cli {
    /// How permutations and involutions are written.
    #[arg(long, value_enum, global = true, default_value_t = Notation::Auto)]
    notation: Notation,
    /// Number of variables for truncated symmetric functions.
    #[arg(long, global = true)]
    width: Option<usize>,
    #[arg(long, value_enum, global = true, env = "ISCHUBERT_FORMAT", default_value_t = Format::Text)]
    format: Format,
    /// Enumeration guard; each command documents what it bounds.
    #[arg(long, global = true)]
    guard: Option<usize>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Notation {
    /// Cycles if the input contains '(', one-line otherwise.
    Auto,
    OneLine,
    Cycles,
    /// A reduced word (involution word for involutions).
    Word,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SymBasis {
    P,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Tree,
    Quasi,
    Insertion,
    Truncation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InsertMode {
    Sh,
    Ick,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sweep {
    Pfaffian,
    Transition,
    Triangularity,
    InsertionAgreement,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sequence {
    /// Reduced words of the longest element.
    R,
    /// Involution words of the longest element.
    Rhat,
    /// I-Grassmannian involutions in I_n.
    G,
    /// P-vexillary involutions in I_n.
    V,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvMethod {
    Atoms,
    Recursion,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert polynomial of a permutation.
    Schubert { perm: String },
    /// Involution Schubert polynomial of an involution.
    InvSchubert {
        inv: String,
        #[arg(long, value_enum, default_value_t = InvMethod::Recursion)]
        method: InvMethod,
    },
    /// Expansion of F̂_y into Schur P-functions, or of Ĝ_y into Schur Q-functions.
    /// The guard bounds the support width (default 16), or the involution length for
    /// the insertion route (default 12).
    ExpandFhat {
        inv: String,
        #[arg(long, value_enum, default_value_t = SymBasis::P)]
        basis: SymBasis,
        #[arg(long, value_enum, default_value_t = Route::Tree)]
        route: Route,
    },
    /// Transition tree of an involution, or of a permutation with --classical.
    /// The guard bounds the support width (default 16).
    LsTree {
        element: String,
        #[arg(long)]
        classical: bool,
    },
    /// Shifted Hecke insertion or involution Coxeter–Knuth insertion of a word.
    Insert {
        word: String,
        #[arg(long, value_enum, default_value_t = InsertMode::Sh)]
        mode: InsertMode,
        /// Print the tableaux after every letter.
        #[arg(long)]
        trace: bool,
    },
    /// P- and Q-vexillarity, I-Grassmannian and dominance tests.
    Classify { inv: String },
    /// Exhaustive identity sweeps over I_n (or over φ ⊆ [n]). The guard bounds n (default 8).
    Verify {
        what: Sweep,
        #[arg(long)]
        n: usize,
        /// For the pfaffian sweep: every increasing φ with entries in [n].
        #[arg(long)]
        all_phi: bool,
        /// For the pfaffian sweep: a single φ, e.g. 1,3.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Integer sequences over a range such as 1..6 (inclusive). The guard bounds n (default 9).
    Count { seq: Sequence, range: String },
}

enum Failure {
    Usage(String),
    Guard(String),
    Falsified(String, Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guard { .. } | Error::Budget(_) => Failure::Guard(e.to_string()),
            Error::Falsified(ref w) => Failure::Falsified(e.to_string(), json!(w)),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

type Res = Result<Output, Failure>;

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Usage(_) => 1,
        Failure::Guard(_) => 2,
        Failure::Falsified(..) => 3,
    }
}

fn guard_check(what: &str, value: usize, guard: usize) -> Result<(), Failure> {
    if value > guard {
        return Err(Failure::Guard(format!("{what} is {value}, guard is {guard} (raise with --guard)")));
    }
    Ok(())
}

fn parse_perm(s: &str, notation: Notation) -> Result<Permutation, Failure> {
    let p = match notation {
        Notation::Auto if s.contains('(') => Permutation::parse_cycles(s)?,
        Notation::Auto | Notation::OneLine => Permutation::parse_one_line(s)?,
        Notation::Cycles => Permutation::parse_cycles(s)?,
        Notation::Word => {
            let w = parse_word(s)?;
            let p = Permutation::from_word(&w);
            if p.length() != w.len() {
                return Err(Failure::Usage(format!("{s:?} is not a reduced word")));
            }
            p
        }
    };
    Ok(p)
}

fn parse_inv(s: &str, notation: Notation) -> Result<Involution, Failure> {
    if notation == Notation::Word {
        let w = parse_word(s)?;
        return Involution::from_involution_word(&w).ok_or_else(|| Failure::Usage(format!("{s:?} is not an involution word")));
    }
    Ok(Involution::new(parse_perm(s, notation)?)?)
}

fn support_width(p: &Permutation) -> usize {
    p.support_bounds().map_or(0, |(lo, hi)| (hi - lo + 1) as usize)
}

fn int_json(c: &BigInt) -> Value {
    i64::try_from(c).map_or_else(|_| json!(c.to_string()), |v| json!(v))
}

fn poly_json(p: &IntPolynomial) -> Value {
    Value::Array(p.to_pairs().iter().map(|(e, c)| json!({"exponents": e, "coeff": int_json(c)})).collect())
}

fn expansion_json(e: &Expansion) -> Value {
    let terms: Vec<Value> = e.terms().map(|(l, c)| json!({"shape": l.parts(), "coeff": int_json(c)})).collect();
    json!({"basis": e.basis().symbol(), "terms": terms})
}

fn tableau_json(t: &ShiftedTableau) -> Value {
    json!(t.rows())
}

fn set_tableau_json(t: &SetValuedShiftedTableau) -> Value {
    json!(t.rows())
}

fn tree_output<T: Clone + std::fmt::Display>(tree: &LSTreeNode<T>, expansion: &Expansion) -> Output {
    let (vertices, edges) = tree.edges();
    let leaves: Vec<String> = tree.leaves().iter().map(|v| v.to_string()).collect();
    Output {
        text: format!("{}expansion: {expansion}", tree.to_text()),
        json: json!({
            "vertices": vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": edges,
            "leaves": leaves,
            "expansion": expansion_json(expansion),
        }),
    }
}

fn run_schubert(perm: &str, cli: &Cli) -> Res {
    let w = parse_perm(perm, cli.notation)?;
    if !w.in_s_infinity() {
        return Err(Failure::Usage(format!("{w} moves nonpositive integers")));
    }
    guard_check("support width", support_width(&w), cli.guard.unwrap_or(10))?;
    let p = schubert_poly(&w);
    Ok(Output { text: p.to_string(), json: json!({"input": w.to_string(), "polynomial": p.to_string(), "terms": poly_json(&p)}) })
}

fn run_inv_schubert(inv: &str, method: InvMethod, cli: &Cli) -> Res {
    let y = parse_inv(inv, cli.notation)?;
    if !y.in_i_infinity() {
        return Err(Failure::Usage(format!("{y} moves nonpositive integers")));
    }
    guard_check("support width", support_width(y.perm()), cli.guard.unwrap_or(10))?;
    let m = match method {
        InvMethod::Atoms => Method::AtomSum,
        InvMethod::Recursion => Method::Recursion,
    };
    let p = inv_schubert_poly(&y, m);
    Ok(Output { text: p.to_string(), json: json!({"input": y.to_string(), "polynomial": p.to_string(), "terms": poly_json(&p)}) })
}

fn run_expand(inv: &str, basis: SymBasis, route: Route, cli: &Cli) -> Res {
    let y = parse_inv(inv, cli.notation)?;
    let degree = y.inv_length();
    let p_expansion = match route {
        Route::Tree => {
            guard_check("support width", support_width(y.perm()), cli.guard.unwrap_or(16))?;
            if basis == SymBasis::Q {
                let e = expand_ghat(&y)?;
                return Ok(Output { text: e.to_string(), json: json!({"input": y.to_string(), "expansion": expansion_json(&e)}) });
            }
            expand_fhat(&y)
        }
        Route::Quasi => {
            guard_check("support width", support_width(y.perm()), cli.guard.unwrap_or(16))?;
            expand_fhat_quasi(&y)?
        }
        Route::Insertion => beta_coefficients(&y, cli.guard.unwrap_or(12))?,
        Route::Truncation => {
            guard_check("involution length", degree, cli.guard.unwrap_or(8))?;
            let width = cli.width.unwrap_or(degree);
            if width < degree {
                return Err(Failure::Usage(format!("--width {width} is below the degree {degree}; the truncation would not be faithful")));
            }
            expand_in_schur_p(&inv_stanley_truncation(&y, width))?
        }
    };
    let e = match basis {
        SymBasis::P => p_expansion,
        SymBasis::Q => schur_q_scale(&p_expansion, y.kappa())?,
    };
    Ok(Output { text: e.to_string(), json: json!({"input": y.to_string(), "expansion": expansion_json(&e)}) })
}

fn run_tree(element: &str, classical: bool, cli: &Cli) -> Res {
    let guard = cli.guard.unwrap_or(16);
    if classical {
        let w = parse_perm(element, cli.notation)?;
        guard_check("support width", support_width(&w), guard)?;
        let tree = classical_ls_tree(&w);
        let (vertices, _) = tree.edges();
        if cli.notation == Notation::Cycles || !vertices.iter().all(|v| v.in_s_infinity()) {
            return Ok(tree_output(&tree, &expand_f(&w)));
        }
        let n = vertices.iter().map(|v| v.max_moved()).max().unwrap_or(1) as usize;
        let one_line = |v: &Permutation| {
            let values = v.one_line_width(n);
            let sep = if n <= 9 { "" } else { " " };
            values.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
        };
        Ok(tree_output(&tree.map(&one_line), &expand_f(&w)))
    } else {
        let y = parse_inv(element, cli.notation)?;
        guard_check("support width", support_width(y.perm()), guard)?;
        Ok(tree_output(&inv_ls_tree(&y), &expand_fhat(&y)))
    }
}

fn descents_text(d: &std::collections::BTreeSet<usize>) -> String {
    format!("{{{}}}", d.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
}

fn run_insert(word: &str, mode: InsertMode, trace: bool) -> Res {
    let a = parse_word(word)?;
    if a.iter().any(|&x| x <= 0) {
        return Err(Failure::Usage("letters must be positive".into()));
    }
    let mut text = String::new();
    let mut steps = Vec::new();
    if trace {
        let mut p = ShiftedTableau::empty();
        for k in 1..=a.len() {
            let (j, dir, next) = insert(a[k - 1], &p);
            p = next;
            let (_, q) = shifted_hecke_insert(&a[..k]);
            text.push_str(&format!("step {k}: insert {} (ends at {} {j})\nP:\n{p}\nQ:\n{q}\n\n", a[k - 1], if dir == 0 { "row" } else { "column" }));
            steps.push(json!({"letter": a[k - 1], "index": j, "dir": dir, "P": tableau_json(&p), "Q": set_tableau_json(&q)}));
        }
    }
    let des = word_descents(&a);
    let json = match mode {
        InsertMode::Sh => {
            let (p, q) = shifted_hecke_insert(&a);
            text.push_str(&format!("P:\n{p}\nQ:\n{q}\nDes: {}", descents_text(&tableau_descents(&q))));
            json!({"word": a, "P": tableau_json(&p), "Q": set_tableau_json(&q), "descents": des, "steps": steps})
        }
        InsertMode::Ick => {
            let (p, q) = involution_ck_insert(&a)?;
            let y = Involution::from_involution_word(&a).expect("validated");
            text.push_str(&format!("involution: {y}\nP:\n{p}\nQ:\n{q}\nDes: {}", descents_text(&des)));
            json!({"word": a, "involution": y.to_string(), "P": tableau_json(&p), "Q": tableau_json(&q), "descents": des, "steps": steps})
        }
    };
    Ok(Output { text, json })
}

fn run_classify(inv: &str, cli: &Cli) -> Res {
    let y = parse_inv(inv, cli.notation)?;
    guard_check("support width", support_width(y.perm()), cli.guard.unwrap_or(16))?;
    let p_witness = first_pattern(&y, &ELEVEN_P);
    let q_witness = first_pattern(&y, &FIVE_Q);
    debug_assert_eq!(q_witness.is_none(), is_q_vexillary(&y, VexMethod::Vexillary));
    let fmt_witness = |w: &Option<(Involution, Vec<i64>)>| match w {
        None => "yes".to_string(),
        Some((p, e)) => format!("no (contains {p} on {e:?})"),
    };
    let text = format!(
        "p-vexillary: {}\nq-vexillary: {}\ni-grassmannian: {}\ndominant: {}",
        fmt_witness(&p_witness),
        fmt_witness(&q_witness),
        if y.is_i_grassmannian() { "yes" } else { "no" },
        if y.is_dominant() { "yes" } else { "no" },
    );
    let wj = |w: &Option<(Involution, Vec<i64>)>| w.as_ref().map(|(p, e)| json!({"pattern": p.to_string(), "positions": e}));
    let json = json!({
        "input": y.to_string(),
        "p_vexillary": p_witness.is_none(),
        "p_witness": wj(&p_witness),
        "q_vexillary": q_witness.is_none(),
        "q_witness": wj(&q_witness),
        "i_grassmannian": y.is_i_grassmannian(),
        "dominant": y.is_dominant(),
    });
    Ok(Output { text, json })
}

fn parse_phi(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad φ entry {t:?}"))))
        .collect()
}

/// Runs `check` over `cases` in parallel and reports the first failure in case order.
fn sweep<T: Sync>(
    name: &str,
    n: usize,
    cases: &[T],
    label: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Result<bool, Error> + Sync,
) -> Res {
    let results: Vec<Result<bool, Error>> = cases.par_iter().map(&check).collect();
    for (case, r) in cases.iter().zip(results) {
        match r {
            Ok(true) => {}
            Ok(false) => {
                let w = label(case);
                return Err(Failure::Falsified(format!("{name} fails at {w}"), json!({"sweep": name, "n": n, "witness": w})));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Output {
        text: format!("{name} n={n}: {} cases, all pass", cases.len()),
        json: json!({"sweep": name, "n": n, "cases": cases.len(), "pass": true}),
    })
}

fn run_verify(what: Sweep, n: usize, all_phi: bool, phi: Option<&str>, cli: &Cli) -> Res {
    guard_check("n", n, cli.guard.unwrap_or(8))?;
    match what {
        Sweep::Pfaffian => {
            let cases: Vec<Vec<usize>> = match (all_phi, phi) {
                (true, _) => (1u32..1 << n).map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect(),
                (false, Some(s)) => vec![parse_phi(s)?],
                (false, None) => return Err(Failure::Usage("pfaffian sweep needs --all-phi or --phi".into())),
            };
            sweep("pfaffian", n, &cases, |phi| format!("φ = {phi:?}"), |phi| verify_pfaffian_theorem(phi, n))
        }
        Sweep::Transition => {
            let mut cases = Vec::new();
            for y in all_involutions(n) {
                for p in 1..=n as i64 + 1 {
                    let q = y.apply(p);
                    if p <= q {
                        cases.push((y.clone(), p, q));
                    }
                }
            }
            sweep("transition", n, &cases, |(y, p, q)| format!("{y} at ({p},{q})"), |(y, p, q)| {
                Ok(transition_identity_check(y, *p, *q))
            })
        }
        Sweep::Triangularity => {
            let cases = all_involutions(n);
            sweep("triangularity", n, &cases, |y| y.to_string(), |y| Ok(triangularity_certificate(y).passes()))
        }
        Sweep::InsertionAgreement => {
            let cases = all_involutions(n);
            let guard = cli.guard.unwrap_or(12).max(n * n);
            sweep("insertion-agreement", n, &cases, |y| y.to_string(), |y| Ok(beta_coefficients(y, guard)? == expand_fhat(y)))
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("bad range {s:?}; use a..b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn run_count(seq: Sequence, range: &str, cli: &Cli) -> Res {
    let (a, b) = parse_range(range)?;
    guard_check("n", b, cli.guard.unwrap_or(9))?;
    let values: Vec<u128> = (a..=b)
        .into_par_iter()
        .map(|n| match seq {
            Sequence::R => Permutation::longest(n).count_reduced_words(),
            Sequence::Rhat => Involution::longest(n).count_involution_words(),
            Sequence::G => all_involutions(n).iter().filter(|z| z.is_i_grassmannian()).count() as u128,
            Sequence::V => all_involutions(n).par_iter().filter(|z| expand_fhat(z).single().is_some()).count() as u128,
        })
        .collect();
    let text = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let json_values: Vec<Value> = values.iter().map(|&v| u64::try_from(v).map_or_else(|_| json!(v.to_string()), |v| json!(v))).collect();
    Ok(Output { text, json: json!({"from": a, "to": b, "values": json_values}) })
}

fn run(cli: &Cli) -> Res {
    match &cli.command {
        Command::Schubert { perm } => run_schubert(perm, cli),
        Command::InvSchubert { inv, method } => run_inv_schubert(inv, *method, cli),
        Command::ExpandFhat { inv, basis, route } => run_expand(inv, *basis, *route, cli),
        Command::LsTree { element, classical } => run_tree(element, *classical, cli),
        Command::Insert { word, mode, trace } => run_insert(word, *mode, *trace),
        Command::Classify { inv } => run_classify(inv, cli),
        Command::Verify { what, n, all_phi, phi } => run_verify(*what, *n, *all_phi, phi.as_deref(), cli),
        Command::Count { seq, range } => run_count(*seq, range, cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(1);
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().expect("thread pool is built once");
    }
    if cli.guard == Some(0) {
        eprintln!("error: --guard must be positive");
        return ExitCode::from(1);
    }
    let json_mode = cli.format == Format::Json;
    match run(&cli) {
        Ok(out) => {
            if json_mode {
                let mut v = out.json;
                if let Value::Object(m) = &mut v {
                    m.insert("schema".into(), json!(SCHEMA));
                }
                println!("{v}");
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Usage(msg) | Failure::Guard(msg) => eprintln!("error: {msg}"),
                Failure::Falsified(msg, witness) if json_mode => {
                    println!("{}", json!({"schema": SCHEMA, "falsified": msg, "witness": witness}))
                }
                Failure::Falsified(msg, _) => println!("FALSIFIED: {msg}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
