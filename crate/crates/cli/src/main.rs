//! Command-line front end: compute single intersection numbers, emit full
//! tables, verify against the embedded golden values, and run the dual-path
//! cross-check sweeps.
//!
//! Exit codes: 0 success, 1 verification/cross-check failure, 2 domain error,
//! 64 usage error.

mod golden;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use agperf::coeffs::{c_coeff, c_coeff_gamma, level_ratio, todd_pair_closed, todd_pair_coeff, LevelTerm};
use agperf::exact::{rat_from_str, rat_int, rat_to_string};
use agperf::ring::y_pi_push;
use agperf::terms::{
    assemble, max_n, reported_closed_forms, term_i, term_ii, term_ii_closed, term_iii,
};
use agperf::{Rat, TermBreakdown, YPoly};

#[derive(Parser)]
#[command(name = "agperf", version, about = "Exact intersection numbers of the Hodge class and the boundary on the perfect cone compactification", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single intersection number with its term breakdown.
    Compute {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit all values for a genus range, ordered by (genus, N).
    Table {
        #[arg(long)]
        g_min: u32,
        #[arg(long)]
        g_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recompute the genus 2..7 rows and compare against the reference table.
    Verify {
        #[arg(long)]
        json: bool,
    },
    /// Run the dual-path consistency sweeps and report closed-form diffs.
    Crosscheck {
        #[arg(long, default_value_t = 10)]
        g_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Compute { genus, n, format } => run_compute(genus, n, format),
        Command::Table { g_min, g_max, format } => run_table(g_min, g_max, format),
        Command::Verify { json } => run_verify(json),
        Command::Crosscheck { g_max } => run_crosscheck(g_max),
    };
    ExitCode::from(code)
}

fn record_json(b: &TermBreakdown) -> serde_json::Value {
    let terms = b.terms.as_ref().map(|(i, ii, iii)| {
        json!({"I": rat_to_string(i), "II": rat_to_string(ii), "III": rat_to_string(iii)})
    });
    json!({
        "genus": b.genus,
        "N": b.n,
        "G": b.big_g,
        "value": rat_to_string(&b.total),
        "terms": terms,
        "formal": b.formal,
        "method": b.method.as_str(),
    })
}

const CSV_HEADER: &str = "genus,N,G,value,term_I,term_II,term_III,formal";

fn record_csv(b: &TermBreakdown) -> String {
    let (i, ii, iii) = match &b.terms {
        Some((i, ii, iii)) => (rat_to_string(i), rat_to_string(ii), rat_to_string(iii)),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{},{}",
        b.genus,
        b.n,
        b.big_g,
        rat_to_string(&b.total),
        i,
        ii,
        iii,
        b.formal
    )
}

fn record_md(b: &TermBreakdown) -> String {
    let (i, ii, iii) = match &b.terms {
        Some((i, ii, iii)) => (rat_to_string(i), rat_to_string(ii), rat_to_string(iii)),
        None => ("-".into(), "-".into(), "-".into()),
    };
    format!(
        "| {} | {} | {} | {} | {} | {} | {} | {} |",
        b.genus,
        b.n,
        b.big_g,
        rat_to_string(&b.total),
        i,
        ii,
        iii,
        b.formal
    )
}

const MD_HEADER: &str = "| genus | N | G | value | term I | term II | term III | formal |\n|---|---|---|---|---|---|---|---|";

fn emit(records: &[TermBreakdown], format: Format) {
    match format {
        Format::Json => {
            if records.len() == 1 {
                println!("{}", record_json(&records[0]));
            } else {
                let rows: Vec<_> = records.iter().map(record_json).collect();
                println!("{}", serde_json::Value::Array(rows));
            }
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for b in records {
                println!("{}", record_csv(b));
            }
        }
        Format::Md => {
            println!("{MD_HEADER}");
            for b in records {
                println!("{}", record_md(b));
            }
        }
    }
}

fn run_compute(genus: u32, n: u32, format: Format) -> u8 {
    match assemble(genus, n) {
        Ok(b) => {
            emit(&[b], format);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run_table(g_min: u32, g_max: u32, format: Format) -> u8 {
    if g_min < 2 || g_min > g_max {
        eprintln!("error: bad genus range {g_min}..{g_max} (need 2 <= g-min <= g-max)");
        return 64;
    }
    let mut rows = Vec::new();
    for g in g_min..=g_max {
        for n in 0..=max_n(g) {
            rows.push(assemble(g, n).expect("in-range table cell"));
        }
    }
    emit(&rows, format);
    0
}

fn run_verify(as_json: bool) -> u8 {
    // Test hook: perturbs one recomputed term so the mismatch path can be
    // exercised end to end.
    let inject = std::env::var_os("AGPERF_INJECT_FAULT").is_some();

    let mut results = Vec::new();
    let mut mismatches = 0usize;
    for rec in &golden::GOLDEN {
        let b = assemble(rec.g, 2 * rec.g - 1).expect("golden row in range");
        let (i, ii, mut iii) = b.terms.clone().expect("engine row has terms");
        let mut total = b.total.clone();
        if inject && rec.g == 3 {
            iii += rat_int(1);
            total = &i + &ii + &iii;
        }
        let expected: [(&str, &Rat, &str); 4] = [
            ("I", &i, rec.term_i),
            ("II", &ii, rec.term_ii),
            ("III", &iii, rec.term_iii),
            ("total", &total, rec.total),
        ];
        let mut row_ok = true;
        let mut diffs = Vec::new();
        for (name, got, want_s) in expected {
            let want = rat_from_str(want_s).expect("embedded golden value parses");
            if *got != want {
                row_ok = false;
                diffs.push(format!(
                    "g={} term {}: computed {} != published {}",
                    rec.g,
                    name,
                    rat_to_string(got),
                    want_s
                ));
            }
        }
        if !row_ok {
            mismatches += 1;
        }
        if as_json {
            results.push(json!({"g": rec.g, "match": row_ok}));
        } else if row_ok {
            println!("g={}: ok", rec.g);
        } else {
            for d in &diffs {
                println!("MISMATCH {d}");
            }
        }
    }
    if as_json {
        println!("{}", serde_json::Value::Array(results));
    } else {
        println!("{}/{} rows match", golden::GOLDEN.len() - mismatches, golden::GOLDEN.len());
    }
    u8::from(mismatches > 0)
}

fn y_integrand(use_t1: bool) -> YPoly {
    let mut q = YPoly::xi().scale(&rat_int(-2));
    if use_t1 {
        q.add_term([0, 1, 0, 0], rat_int(-2));
    } else {
        q.add_term([0, 0, 1, 0], rat_int(-2));
    }
    q.add_term([0, 0, 0, 1], rat_int(1));
    q
}

fn run_crosscheck(g_max: u32) -> u8 {
    if g_max < 2 {
        eprintln!("error: --g-max must be at least 2");
        return 64;
    }
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("[{}] {}", if ok { "ok" } else { "FAIL" }, name);
        if !ok {
            failures += 1;
        }
    };

    // C coefficients: defining sum vs Gamma closed form, plus symmetry.
    let mut c_ok = true;
    for g in 2..=g_max.min(25) {
        for a in 1..2 * g {
            for b in 1..=(2 * g - 1 - a) {
                if c_coeff(g, a, b) != c_coeff_gamma(g, a, b) || c_coeff(g, a, b) != c_coeff(g, b, a)
                {
                    c_ok = false;
                }
            }
        }
    }
    check("C_g^{a,b}: defining sum == Gamma closed form (symmetric)", c_ok);

    // Todd pair coefficients: double sum vs Bernoulli closed form.
    let tp_max = (6 * g_max).min(60);
    let mut tp_ok = true;
    for n in 0..=tp_max {
        for m in 0..=(tp_max - n) {
            if todd_pair_coeff(n, m) != todd_pair_closed(n, m) {
                tp_ok = false;
            }
        }
    }
    check("b_{n,m}: double sum == closed form", tp_ok);

    // Level ratios are 1/2, 1/8, 1/12 independent of the level.
    let mut lr_ok = true;
    for ell in [3u64, 5, 7] {
        for g in 2..=g_max.min(8) {
            lr_ok &= level_ratio(LevelTerm::I, g, ell) == Ok(Rat::new(1.into(), 2.into()));
            if g >= 3 {
                lr_ok &= level_ratio(LevelTerm::II, g, ell) == Ok(Rat::new(1.into(), 8.into()));
                lr_ok &= level_ratio(LevelTerm::III, g, ell) == Ok(Rat::new(1.into(), 12.into()));
            }
        }
    }
    check("level ratios constant in the level (1/2, 1/8, 1/12)", lr_ok);

    // Engine reproduces the Y pushforward proposition: 2 C_g^{a, 2g-1-a}.
    let mut push_ok = true;
    for g in 2..=g_max.min(10) {
        let n = 2 * g - 1;
        for a in 1..n {
            let b = n - a;
            let p = y_integrand(true).pow(a - 1).mul(&y_integrand(false).pow(b - 1));
            let engine = y_pi_push(&p, g);
            if engine != rat_int(2) * c_coeff(g, a, b) {
                push_ok = false;
            }
        }
        // off-degree products push to zero
        let off = y_integrand(true).pow(n as u32);
        if !num_is_zero(&y_pi_push(&off, g)) {
            push_ok = false;
        }
    }
    check("engine pushforward == 2 C_g^{a,2g-1-a} on Y", push_ok);

    // Term (II): engine sum vs verified closed form.
    let mut ii_ok = true;
    for g in 2..=g_max.min(20) {
        if term_ii(g, 2 * g - 1).expect("in range") != term_ii_closed(g) {
            ii_ok = false;
        }
    }
    check("term (II) engine == closed form", ii_ok);

    // Vanishing sweeps, with the interval above 2g-1 going through the full
    // three-term pipeline.
    let mut van_ok = true;
    for g in 2..=g_max.min(12) {
        for n in 1..g {
            van_ok &= num_is_zero(&assemble(g, n).expect("in range").total);
        }
        for n in (g + 1)..=(2 * g - 2) {
            van_ok &= num_is_zero(&assemble(g, n).expect("in range").total);
        }
        for n in (2 * g)..(3 * g - 3) {
            let full = term_i(g, n).unwrap() + term_ii(g, n).unwrap() + term_iii(g, n).unwrap();
            van_ok &= num_is_zero(&full);
        }
    }
    check("vanishing intervals (full pipeline above 2g-1)", van_ok);

    // Informational: the historically published closed forms for (III) and
    // (I) vs the engine values. Known to disagree at small genus; never
    // gating.
    println!("REPORTED (closed-form diffs, non-gating):");
    for g in 2..=g_max.min(7) {
        let n = 2 * g - 1;
        let r = reported_closed_forms(g);
        let eng_iii = term_iii(g, n).expect("in range");
        let eng_i = term_i(g, n).expect("in range");
        report_diff(g, "term (III) printed formula", &r.formula_iii, &eng_iii);
        report_diff(g, "term (I) printed corollary", &r.corollary_i, &eng_i);
        report_diff(g, "term (I) printed Bernoulli sum", &r.proposition_i, &eng_i);
    }

    // Informational: the five published table entries that disagree with the
    // values forced by the defining sums (see the notes in the golden data).
    println!("REPORTED (published-table deviations, non-gating):");
    for (g, name, published) in golden::PUBLISHED_DEVIATIONS {
        let b = assemble(g, 2 * g - 1).expect("in range");
        let (i, ii, iii) = b.terms.clone().expect("engine row has terms");
        let engine = match name {
            "I" => i,
            "II" => ii,
            "III" => iii,
            _ => b.total.clone(),
        };
        let printed = rat_from_str(published).expect("embedded deviation value parses");
        report_diff(g, &format!("published table {name}"), &printed, &engine);
    }

    if failures == 0 {
        println!("crosscheck passed");
        0
    } else {
        println!("crosscheck FAILED ({failures} gating checks)");
        1
    }
}

fn report_diff(g: u32, what: &str, printed: &Rat, engine: &Rat) {
    if printed == engine {
        println!("  g={g} {what}: agrees ({})", rat_to_string(engine));
    } else {
        println!(
            "  g={g} {what}: printed {} vs engine {} (diff {})",
            rat_to_string(printed),
            rat_to_string(engine),
            rat_to_string(&(printed - engine))
        );
    }
}

fn num_is_zero(r: &Rat) -> bool {
    use num_traits::Zero;
    r.is_zero()
}
