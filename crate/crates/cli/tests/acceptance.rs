//! The twelve acceptance criteria, each checked at its stated tolerance and
//! time limit. Prints one PASS/FAIL line per criterion and fails if any fail.

use std::time::{Duration, Instant};

use pslb_core::audit::{audit_all, ClaimId, Scale, ScaleConfig, Status};
use pslb_core::census::{
    figure1_series, potential_solutions_t, prime_count_via_eq1, prime_count_via_eq3,
    totient_of_primorial,
};
use pslb_core::goldbach::{
    class_slopes, goldbach_seed_set, mismatch_filter_with, pair_count_table,
};
use pslb_core::primes::{nth_primorial, primes_up_to, seed_prime_set, Primorial};
use pslb_core::scaffold::{build_table17, build_table18, build_table19_20, build_table21};
use pslb_core::signatures::{is_potential_prime, signature};
use pslb_core::Budget;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = pslb_cli::run(
        std::iter::once("pslb").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn csv_rows(s: &str) -> Vec<Vec<String>> {
    s.lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

const TABLE16: [(u64, u64); 8] = [
    (8, 3),
    (48, 15),
    (480, 135),
    (5_760, 1_485),
    (92_160, 22_275),
    (1_658_880, 378_675),
    (36_495_360, 7_952_175),
    (1_021_870_080, 214_708_725),
];

fn c1_totients() -> Outcome {
    let (code, out) = cli(&["table", "16"]);
    ensure(code == 0, || format!("table 16 exit {code}"))?;
    let rows = csv_rows(&out);
    ensure(rows.len() == 10, || format!("{} rows", rows.len()))?;
    ensure(rows[0][2..].iter().all(String::is_empty), || {
        "row 1 not blank".into()
    })?;
    ensure(rows[1][6].is_empty() && rows[1][7].is_empty(), || {
        "row 2 not blank".into()
    })?;
    for (i, &(phi, t)) in TABLE16.iter().enumerate() {
        let p = nth_primorial(i as u32 + 3).unwrap();
        ensure(totient_of_primorial(&p) == phi, || {
            format!("totient of {}", p.value())
        })?;
        ensure(potential_solutions_t(&p).unwrap() == t, || {
            format!("T of {}", p.value())
        })?;
        let row = &rows[i + 2];
        ensure(row[6] == phi.to_string() && row[7] == t.to_string(), || {
            format!("table row {}", i + 3)
        })?;
    }
    Ok("10 rows, 29# gives 1021870080 and 214708725".into())
}

fn c2_prime_counts() -> Outcome {
    let b = Budget::default();
    for (rank, pi, nb) in [(5, 343, 141), (6, 3_248, 2_517)] {
        let p = nth_primorial(rank).unwrap();
        let eq3 = prime_count_via_eq3(&p, &b).map_err(|e| e.to_string())?;
        let sieve = primes_up_to(p.value()).unwrap().count() as u64;
        ensure(eq3.pi == pi && sieve == pi, || {
            format!("pi({}) = {} / {}", p.value(), eq3.pi, sieve)
        })?;
        ensure(eq3.new_composites == nb, || {
            format!("n(B) at {} = {}", p.value(), eq3.new_composites)
        })?;
    }
    let big = primes_up_to(9_699_690).unwrap().count();
    ensure(big == 646_029, || format!("pi(9699690) = {big}"))?;
    Ok("pi(2310) = 343, pi(30030) = 3248, n(B) = 141 / 2517, pi(9699690) = 646029".into())
}

fn c3_eq1() -> Outcome {
    let c = prime_count_via_eq1(100, &[2, 3, 5, 7]).map_err(|e| e.to_string())?;
    ensure(c.expansion() == "117 - 45 + 6 - 0", || c.expansion())?;
    ensure(c.multiples == 78 && c.pi == 25, || {
        format!("{} multiples, pi {}", c.multiples, c.pi)
    })?;
    Ok("117 - 45 + 6 - 0 = 78, pi(100) = 25".into())
}

/// Columns of the printed table, read down then across.
const TABLE10_PAIRS: [u64; 103] = [
    1, 1, 2, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 2, 4, 4, 2, 3, 4, 3, 4, 5, 4, 3, 5, 3, //
    4, 6, 3, 5, 6, 2, 5, 6, 5, 5, 7, 4, 5, 8, 5, 4, 9, 4, 5, 7, 3, 6, 8, 5, 6, 8, //
    6, 7, 10, 6, 6, 12, 4, 5, 10, 3, 7, 9, 6, 5, 8, 7, 8, 11, 6, 5, 12, 4, 8, 11, 5, 8, //
    10, 5, 6, 13, 9, 6, 11, 7, 7, 14, 6, 8, 13, 5, 8, 11, 7, 9, 13, 8, 9, 14, 7, 7, 19,
];

fn c4_table10() -> Outcome {
    let (code, out) = cli(&["goldbach", "table", "--upper", "210"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let rows = csv_rows(&out);
    ensure(rows.len() == 103, || format!("{} rows", rows.len()))?;
    for (i, (row, &pairs)) in rows.iter().zip(&TABLE10_PAIRS).enumerate() {
        let e = 6 + 2 * i as u64;
        let want = [e.to_string(), (e % 3).to_string(), pairs.to_string()];
        ensure(row[..] == want[..], || {
            format!("row {row:?}, expected {want:?}")
        })?;
    }
    Ok("103 rows, 68 -> 2, 210 -> 19".into())
}

const TABLE5: [[u64; 8]; 13] = [
    [443, 113, 47, 66, 443, 113, 47, 66],
    [887, 228, 112, 116, 444, 115, 65, 50],
    [1329, 343, 186, 157, 442, 115, 74, 41],
    [1772, 455, 266, 189, 443, 112, 80, 32],
    [2215, 570, 345, 225, 443, 115, 79, 36],
    [2658, 684, 430, 254, 443, 114, 85, 29],
    [3102, 799, 515, 284, 444, 115, 85, 30],
    [3545, 913, 593, 320, 443, 114, 78, 36],
    [3988, 1028, 677, 351, 443, 115, 84, 31],
    [4431, 1141, 753, 388, 443, 113, 76, 37],
    [4873, 1255, 846, 409, 442, 114, 93, 21],
    [5317, 1370, 932, 438, 444, 115, 86, 29],
    [5760, 1484, 1019, 465, 443, 114, 87, 27],
];

fn c5_table5() -> Outcome {
    let (code, out) = cli(&["census", "--inner", "2310", "--outer", "30030"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let rows = csv_rows(&out);
    let mut mismatches = Vec::new();
    for (k, want) in TABLE5.iter().enumerate() {
        let row = &rows[k];
        ensure(row[1] == (2310 * (k as u64 + 1)).to_string(), || {
            format!("cycle end {}", row[1])
        })?;
        let got: Vec<u64> = row[3..11].iter().map(|c| c.parse().unwrap()).collect();
        if got[..] != want[..] {
            mismatches.push(format!("row {}: {got:?} vs {want:?}", k + 1));
        }
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    let stats: Vec<&str> = rows[16][7..].iter().map(String::as_str).collect();
    ensure(stats == ["0.62", "0.95", "11.29", "11.10"], || {
        format!("std devs {stats:?}")
    })?;
    Ok("13 cycle rows exact, cumulative 5760 / 1484 / 1019 / 465".into())
}

fn near(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol
}

fn c6_scaffold() -> Outcome {
    let b = Budget::default();
    let pf17 = [
        0.692308, 0.436373, 0.307356, 0.218553, 0.164156, 0.126197, 0.098251, 0.079161, 0.064543,
    ];
    let avg17 = [
        10,
        59,
        456,
        4_868,
        62_162,
        1_003_543,
        21_095_426,
        492_902_698,
        14_065_843_393,
    ];
    let pf19 = [
        0.357032, 0.260070, 0.192841, 0.146876, 0.115224, 0.091475, 0.074054, 0.061054,
    ];
    let avg19 = [5, 35, 286, 3_272, 43_632, 727_428, 15_900_087, 380_157_930];
    let avg20b = [
        59,
        456,
        4_868,
        62_162,
        1_003_543,
        21_095_426,
        492_902_698,
        14_065_843_393,
    ];
    let ratio18 = [
        5.6728, 7.7478, 10.6661, 12.7688, 16.1441, 21.0209, 23.3654, 28.5368,
    ];
    let pfr18 = [
        0.6303, 0.7043, 0.7111, 0.7511, 0.7688, 0.7786, 0.8057, 0.8153,
    ];

    let e = |x: pslb_core::Error| x.to_string();
    for (name, rows) in [
        ("17", build_table17(9, &b).map_err(e)?),
        ("21", build_table21(9, &b).map_err(e)?),
    ] {
        for (r, (&pf, &avg)) in rows.iter().zip(pf17.iter().zip(&avg17)) {
            ensure(near(r.product_factor, pf, 5e-7), || {
                format!("table {name} row {} pf {}", r.index, r.product_factor)
            })?;
            ensure(r.avg_t_a_display().abs_diff(avg) <= 1, || {
                format!("table {name} row {} avg", r.index)
            })?;
        }
    }
    let rows = build_table19_20(8, &b).map_err(e)?;
    for (i, r) in rows.iter().enumerate() {
        ensure(near(r.product_factor, pf19[i], 5e-7), || {
            format!("table 19 row {} pf {}", i + 1, r.product_factor)
        })?;
        ensure(r.avg_t_a_display().abs_diff(avg19[i]) <= 1, || {
            format!("table 19 row {} avg", i + 1)
        })?;
        let avg_b = r.avg_t_b_display().unwrap();
        ensure(avg_b.abs_diff(avg20b[i]) <= 1, || {
            format!("table 20 row {} avg B {avg_b}", i + 1)
        })?;
    }
    ensure(rows[7].p_z_squared == 7_420_769_843_881, || {
        "table 20 row 8 Pz^2".into()
    })?;
    let ratios = build_table18(9, &b).map_err(e)?;
    for (i, r) in ratios[1..].iter().enumerate() {
        let got = format!("{:.4}/{:.4}", r.avg_ratio.unwrap(), r.pf_ratio.unwrap());
        let want = format!("{:.4}/{:.4}", ratio18[i], pfr18[i]);
        ensure(got == want, || {
            format!("table 18 row {}: {got} vs {want}", i + 2)
        })?;
    }
    Ok("tables 17 to 21 within 5e-7, averages within 1, ratios to 4 decimals".into())
}

fn c7_mismatch() -> Outcome {
    let table = primes_up_to(30_030).unwrap();
    let mut checked = 0u64;
    for e in (6..=30_030u64).step_by(2) {
        let sps = goldbach_seed_set(e).map_err(|x| x.to_string())?;
        for p1 in mismatch_filter_with(e, &sps, &table).map_err(|x| x.to_string())? {
            ensure(table.is_prime(e - p1), || {
                format!("E = {e}, p1 = {p1}: {} composite", e - p1)
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} passing primes over even 6..=30030, no violations"
    ))
}

fn c8_noncore_bound() -> Outcome {
    for rank in [5u32, 6, 7] {
        let p = nth_primorial(rank).unwrap();
        let sps = seed_prime_set(&p).unwrap();
        let bound = sps.smallest_non_core().pow(2).min(p.value());
        let table = primes_up_to(bound).unwrap();
        let bad = (3..bound)
            .step_by(2)
            .filter(|&z| is_potential_prime(z, sps.core()) && !table.is_prime(z))
            .count();
        ensure(bad == 0, || {
            format!(
                "{bad} composite potential primes below {bound} at {}",
                p.value()
            )
        })?;
    }
    Ok("2310, 30030, 510510: no composite potential prime below the bound".into())
}

fn c9_crt() -> Outcome {
    let sps = seed_prime_set(&nth_primorial(6).unwrap()).unwrap();
    for z in 1..30_030 {
        let s = signature(z, sps.seeds()).map_err(|x| x.to_string())?;
        ensure(s.reconstruct().ok() == Some(z), || {
            format!("{z} does not round-trip")
        })?;
    }
    let top = nth_primorial(7).unwrap();
    let sps = seed_prime_set(&top).unwrap();
    let table = primes_up_to(top.value()).unwrap();
    for z in 2..=top.value() {
        let nonzero = sps.seeds().iter().all(|&q| z % q != 0);
        let want = if sps.is_seed(z) { true } else { nonzero };
        ensure(table.is_prime(z) == want, || {
            format!("signature test disagrees at {z}")
        })?;
    }
    Ok("round trip for z < 30030, signature primality exact to 510510".into())
}

fn c10_slopes() -> Outcome {
    let rows = pair_count_table(210, &Budget::default()).map_err(|x| x.to_string())?;
    let [s0, s1, s2] = class_slopes(&rows).map(|s| s.unwrap());
    ensure(s0 > 2.0 * s1 && s0 > 2.0 * s2, || {
        format!("slopes {s0:.5} {s1:.5} {s2:.5}")
    })?;
    Ok(format!("slopes {s0:.5} > 2 x {s1:.5}, 2 x {s2:.5}"))
}

fn c11_figure1() -> Outcome {
    let p = Primorial::from_value(30_030).unwrap();
    let series = figure1_series(&p, &Budget::default()).map_err(|x| x.to_string())?;
    let pp: u64 = series.iter().map(|w| w.potential_primes).sum();
    let nc: u64 = series.iter().map(|w| w.new_composites).sum();
    let last = series.last().unwrap().cumulative_new_composites;
    ensure(pp == 5_760 && nc == 2_517 && last == 2_517, || {
        format!("{pp} / {nc} / {last}")
    })?;
    let (code, out) = cli(&["figure", "1", "--primorial", "30030"]);
    ensure(code == 0 && csv_rows(&out).len() == series.len(), || {
        "figure 1 CLI output".into()
    })?;
    Ok(format!(
        "{} windows, 5760 potential primes, 2517 new composites",
        series.len()
    ))
}

fn c12_audit() -> Outcome {
    let reports = audit_all(&ScaleConfig::new(Scale::Default));
    ensure(reports.len() == 18, || format!("{} reports", reports.len()))?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.claim_id.as_str())
        .collect();
    ensure(failed.is_empty(), || format!("failed: {failed:?}"))?;
    let p5 = reports.iter().find(|r| r.claim_id == ClaimId::P5).unwrap();
    ensure(
        p5.status == Status::PassWithCaveat && p5.note.contains("cycles of 210 in 47#"),
        || format!("P5 {:?}: {}", p5.status, p5.note),
    )?;
    let (code, out) = cli(&["audit", "--format", "json"]);
    ensure(code == 0, || format!("audit exit {code}"))?;
    let parsed: serde_json::Value = serde_json::from_str(&out).map_err(|x| x.to_string())?;
    ensure(parsed.as_array().map(Vec::len) == Some(18), || {
        "CLI report count".into()
    })?;
    let caveats = reports
        .iter()
        .filter(|r| r.status == Status::PassWithCaveat)
        .count();
    Ok(format!(
        "18 reports, 0 failing, {caveats} with caveats, P5 minimum caveat present"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "1 totient and T(M) columns",
            c1_totients,
            Duration::from_secs(1),
        ),
        ("2 prime counts", c2_prime_counts, Duration::from_secs(30)),
        (
            "3 inclusion-exclusion at 100",
            c3_eq1,
            Duration::from_secs(1),
        ),
        ("4 Goldbach pair counts", c4_table10, Duration::from_secs(1)),
        ("5 twin census by cycle", c5_table5, Duration::from_secs(10)),
        ("6 scaffold tables", c6_scaffold, Duration::from_secs(60)),
        ("7 mismatch filter", c7_mismatch, Duration::from_secs(300)),
        (
            "8 non-core bound",
            c8_noncore_bound,
            Duration::from_secs(60),
        ),
        (
            "9 CRT and signature primality",
            c9_crt,
            Duration::from_secs(60),
        ),
        ("10 pair-count slopes", c10_slopes, Duration::from_secs(10)),
        (
            "11 window series reconciliation",
            c11_figure1,
            Duration::from_secs(10),
        ),
        ("12 audit suite", c12_audit, Duration::from_secs(300)),
    ];
    let mut failures = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > limit => {
                Err(format!("{detail}, but took {took:.2?} (limit {limit:?})"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{took:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why} [{took:.2?}]");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
