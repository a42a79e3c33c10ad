//! Tables 1 to 21 and the two figure series as uniform rows of cells.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::census::{cycle_census, figure1_series, potential_solutions_t, totient_of_primorial};
use crate::goldbach::{
    class_slopes, goldbach_seed_set, mod3_rule, pair_count_table, residue_addition_table,
    GoldbachPair, Mod3Member,
};
use crate::primes::{nth_primorial, seed_prime_set, Primorial};
use crate::scaffold::{
    build_table17, build_table18, build_table19_20, build_table21, round_half_up,
};
use crate::signatures::is_potential_prime;
use crate::{Budget, Error, Result};

pub const TABLE_COUNT: u32 = 21;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Empty,
    Int(u64),
    /// A real printed with `decimals` places unless overridden.
    Real {
        value: f64,
        decimals: usize,
    },
    Text(String),
}

impl Cell {
    fn real(value: f64, decimals: usize) -> Cell {
        Cell::Real { value, decimals }
    }

    fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    fn mark(b: bool) -> Cell {
        if b {
            Cell::text("X")
        } else {
            Cell::Empty
        }
    }

    /// Text form; `precision` replaces the default decimals of reals.
    pub fn render(&self, precision: Option<usize>) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Int(v) => v.to_string(),
            Cell::Real { value, decimals } => {
                format!("{:.*}", precision.unwrap_or(*decimals), value)
            }
            Cell::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(id: impl Into<String>, title: impl Into<String>, headers: &[&str]) -> Table {
        Table {
            id: id.into(),
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len(), "{}", self.id);
        self.rows.push(row);
    }

    /// Reals rounded to `precision` places when given, so that every
    /// output format carries the same values.
    pub fn with_precision(&self, precision: Option<usize>) -> Table {
        let Some(p) = precision else {
            return self.clone();
        };
        let mut t = self.clone();
        for c in t.rows.iter_mut().flatten() {
            if let Cell::Real { decimals, .. } = c {
                *decimals = p;
            }
        }
        t
    }
}

/// One JSON object per row, keyed by header; reals are emitted at their
/// display precision so JSON and CSV agree.
pub struct JsonRow<'a> {
    pub headers: &'a [String],
    pub cells: &'a [Cell],
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.cells.len()))?;
        for (h, c) in self.headers.iter().zip(self.cells) {
            match c {
                Cell::Empty => m.serialize_entry(h, &())?,
                Cell::Int(v) => m.serialize_entry(h, v)?,
                Cell::Real { value, decimals } => {
                    let rounded: f64 = format!("{:.*}", decimals, value)
                        .parse()
                        .expect("formatted float");
                    m.serialize_entry(h, &rounded)?
                }
                Cell::Text(t) => m.serialize_entry(h, t)?,
            }
        }
        m.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<JsonRow<'_>> = self
            .rows
            .iter()
            .map(|cells| JsonRow {
                headers: &self.headers,
                cells,
            })
            .collect();
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("id", &self.id)?;
        m.serialize_entry("title", &self.title)?;
        m.serialize_entry("headers", &self.headers)?;
        m.serialize_entry("rows", &rows)?;
        m.end()
    }
}

pub fn table(n: u32, budget: &Budget) -> Result<Table> {
    match n {
        1 => Ok(table1()),
        2 => table2(),
        3 => table3(),
        4 => table4(),
        5 => census_table(&nth_primorial(5)?, &nth_primorial(6)?, budget),
        6 => table6(),
        7 => Ok(table7()),
        8 => Ok(table8()),
        9 => table9(),
        10 => goldbach_count_table(210, budget),
        11 => table11(),
        12 => numbered(12, residue_comparison_table(60, 17)),
        13 => numbered(13, residue_comparison_table(68, 7)),
        14 => numbered(14, residue_comparison_table(68, 31)),
        15 => numbered(15, residue_comparison_table(68, 19)),
        16 => table16(),
        17..=21 => scaffold_table(n, default_scaffold_rows(n), budget),
        _ => Err(Error::domain(format!(
            "tables are numbered 1 to {TABLE_COUNT}, got {n}"
        ))),
    }
}

pub fn figure(n: u32, budget: &Budget) -> Result<Table> {
    match n {
        1 => figure1(&nth_primorial(6)?, budget),
        2 => figure2(210, budget),
        _ => Err(Error::domain(format!(
            "figures are numbered 1 and 2, got {n}"
        ))),
    }
}

fn mod_headers(seeds: &[u64]) -> Vec<String> {
    seeds.iter().map(|q| format!("mod {q}")).collect()
}

fn with_headers(id: &str, title: &str, parts: &[&[String]]) -> Table {
    Table {
        id: id.into(),
        title: title.into(),
        headers: parts.iter().flat_map(|p| p.iter().cloned()).collect(),
        rows: Vec::new(),
    }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn residues(z: u64, seeds: &[u64]) -> impl Iterator<Item = Cell> + '_ {
    seeds.iter().map(move |&q| Cell::Int(z % q))
}

/// Trial division; the tables only mark integers below a few thousand.
fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn table1() -> Table {
    let seeds = [2, 3, 5];
    let mut t = with_headers(
        "table-1",
        "Modular signatures of 1 to 30 under seed primes 2, 3, 5",
        &[
            &strs(&["Integer", "Prime"]),
            &mod_headers(&seeds),
            &strs(&["Twin Prime"]),
        ],
    );
    for z in 1..=30 {
        let mut row = vec![Cell::Int(z), Cell::mark(is_prime(z))];
        row.extend(residues(z, &seeds));
        row.push(Cell::mark(z >= 5 && is_prime(z) && is_prime(z - 2)));
        t.push(row);
    }
    t
}

fn table2() -> Result<Table> {
    let sps = seed_prime_set(&nth_primorial(5)?)?;
    let mut t = signature_table(2291, sps.seeds());
    t.id = "table-2".into();
    t.title = "Signature of 2291 under the seed primes of 2310".into();
    Ok(t)
}

fn table3() -> Result<Table> {
    let sps = seed_prime_set(&nth_primorial(4)?)?;
    let mut t = with_headers(
        "table-3",
        "Odd integers below 210 grouped by class mod 30, signatures under the seed primes of 210",
        &[&strs(&["Class", "Odd", "Prime"]), &mod_headers(sps.seeds())],
    );
    for class in (1..=15).step_by(2) {
        for k in 0..7 {
            let z = class + 30 * k;
            let mut row = vec![Cell::Int(class), Cell::Int(z), Cell::mark(is_prime(z))];
            row.extend(residues(z, sps.seeds()));
            t.push(row);
        }
    }
    Ok(t)
}

fn table4() -> Result<Table> {
    let sps = seed_prime_set(&nth_primorial(5)?)?;
    let mut t = with_headers(
        "table-4",
        "Classes [1] and [209] mod 210 within 2310, signatures under the seed primes of 2310",
        &[
            &strs(&["Class", "Count", "Odd", "Delta"]),
            &mod_headers(sps.seeds()),
            &strs(&["Prime"]),
        ],
    );
    for class in [1, 209] {
        for k in 0..11 {
            let z = class + 210 * k;
            let mut row = vec![
                Cell::Int(class),
                Cell::Int(k + 1),
                Cell::Int(z),
                if k == 0 { Cell::Empty } else { Cell::Int(210) },
            ];
            row.extend(residues(z, sps.seeds()));
            row.push(Cell::mark(is_prime(z)));
            t.push(row);
        }
    }
    for z in [30, 210, 2310] {
        let mut row = vec![Cell::Empty, Cell::Empty, Cell::Int(z), Cell::Empty];
        row.extend(residues(z, sps.seeds()));
        row.push(Cell::Empty);
        t.push(row);
    }
    Ok(t)
}

fn stat_cell(v: f64) -> Cell {
    if v.fract() == 0.0 {
        Cell::Int(v as u64)
    } else {
        Cell::real(v, 1)
    }
}

/// Per-cycle census of `inner` within `outer`, in the layout of table 5.
pub fn census_table(inner: &Primorial, outer: &Primorial, budget: &Budget) -> Result<Table> {
    let c = cycle_census(inner, outer, budget)?;
    let mut t = Table::new(
        "table-5",
        format!(
            "Twin prime count by cycle of {} within {}",
            inner.value(),
            outer.value()
        ),
        &[
            "Count",
            "Cycle End",
            "Cycle Length",
            "Cumulative Potential Primes",
            "Cumulative Potential Twins",
            "Cumulative False Twins",
            "Cumulative True Twins",
            "Potential Primes",
            "Potential Twins",
            "False Twins",
            "True Twins",
        ],
    );
    for r in &c.rows {
        let cum = r.cumulative;
        let cyc = r.in_cycle;
        t.push(vec![
            Cell::Int(r.cycle_index),
            Cell::Int(r.cycle_end),
            if r.cycle_index == 1 {
                Cell::Empty
            } else {
                Cell::Int(r.cycle_length)
            },
            Cell::Int(cum.potential_primes),
            Cell::Int(cum.potential_twins),
            Cell::Int(cum.false_twins),
            Cell::Int(cum.true_twins),
            Cell::Int(cyc.potential_primes),
            Cell::Int(cyc.potential_twins),
            Cell::Int(cyc.false_twins),
            Cell::Int(cyc.true_twins),
        ]);
    }
    let stats = c.summary();
    let labelled = |label: &str, cells: Vec<Cell>| {
        let mut row = vec![Cell::text(label)];
        row.extend(vec![Cell::Empty; 6]);
        row.extend(cells);
        row
    };
    t.push(labelled(
        "Min",
        stats.iter().map(|s| Cell::Int(s.min)).collect(),
    ));
    t.push(labelled(
        "Max",
        stats.iter().map(|s| Cell::Int(s.max)).collect(),
    ));
    t.push(labelled(
        "Median",
        stats.iter().map(|s| stat_cell(s.median)).collect(),
    ));
    t.push(labelled(
        "StdDev",
        stats.iter().map(|s| Cell::real(s.std_dev, 2)).collect(),
    ));
    Ok(t)
}

fn table6() -> Result<Table> {
    let sps = seed_prime_set(&nth_primorial(5)?)?;
    let mut t = with_headers(
        "table-6",
        "Ten consecutive odd integers in 2310 with their signatures",
        &[
            &strs(&["Prime", "Odd", "Delta"]),
            &mod_headers(sps.seeds()),
            &strs(&["Potential Prime", "Potential Twin"]),
        ],
    );
    let core = sps.core();
    for z in (2237..=2255).step_by(2) {
        let mut row = vec![Cell::mark(is_prime(z)), Cell::Int(z), Cell::Int(2)];
        row.extend(residues(z, sps.seeds()));
        let pp = is_potential_prime(z, core);
        row.push(Cell::mark(pp));
        row.push(Cell::mark(pp && is_potential_prime(z - 2, core)));
        t.push(row);
    }
    Ok(t)
}

fn table7() -> Table {
    let seeds = [2, 3, 5, 7];
    let odd: Vec<String> = seeds.iter().map(|q| format!("odd mod {q}")).collect();
    let even: Vec<String> = seeds.iter().map(|q| format!("even mod {q}")).collect();
    let mut t = with_headers(
        "table-7",
        "Residue cycles of odd and even integers under 2, 3, 5, 7",
        &[&strs(&["Integer"]), &odd, &even, &strs(&["Note"])],
    );
    for z in 1..=28u64 {
        let mut row = vec![Cell::Int(z)];
        let (o, e) = if z % 2 == 1 {
            (residues(z, &seeds).collect(), vec![Cell::Empty; 4])
        } else {
            (vec![Cell::Empty; 4], residues(z, &seeds).collect())
        };
        row.extend::<Vec<Cell>>(o);
        row.extend::<Vec<Cell>>(e);
        row.push(if z <= 2 {
            Cell::text("<-- Signature")
        } else {
            Cell::Empty
        });
        t.push(row);
    }
    t
}

fn table8() -> Table {
    let cols: Vec<String> = (1..=14).map(|z: u64| z.to_string()).collect();
    let mut t = with_headers(
        "table-8",
        "Mod 7 residues of the odd and even integers 1 to 14",
        &[&strs(&["Integers"]), &cols],
    );
    for (label, parity) in [("Odd", 1), ("Even", 0)] {
        let mut row = vec![Cell::text(label)];
        row.extend((1..=14u64).map(|z| {
            if z % 2 == parity {
                Cell::Int(z % 7)
            } else {
                Cell::Empty
            }
        }));
        t.push(row);
    }
    t
}

fn member(m: Mod3Member) -> Cell {
    Cell::text(m.to_string())
}

fn table9() -> Result<Table> {
    let mut t = Table::new(
        "table-9",
        "Mod 3 solution combinations",
        &["Even > 4", "P1", "P2"],
    );
    for (e, rep) in [(0u8, 12u64), (1, 10), (2, 8)] {
        let rule = mod3_rule(rep)?;
        for (i, &(a, b)) in rule.allowed.iter().enumerate() {
            let label = if i == 0 {
                Cell::text(format!("[{e}]"))
            } else {
                Cell::Empty
            };
            t.push(vec![label, member(a), member(b)]);
        }
        if e == 0 {
            let six = mod3_rule(6)?;
            let &(a, b) = six.allowed.last().expect("exception row");
            t.push(vec![Cell::text("6 (exception)"), member(a), member(b)]);
        }
    }
    Ok(t)
}

/// Goldbach pair counts for `6 <= E <= upper`, in the layout of table 10.
pub fn goldbach_count_table(upper: u64, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-10",
        format!("Number of Goldbach pairs for 4 < E <= {upper}"),
        &["Even", "Mod 3", "Pairs"],
    );
    for r in pair_count_table(upper, budget)? {
        t.push(vec![
            Cell::Int(r.e),
            Cell::Int(r.class as u64),
            Cell::Int(r.count),
        ]);
    }
    Ok(t)
}

fn table11() -> Result<Table> {
    let p = 7;
    let grid = residue_addition_table(p)?;
    let cols: Vec<String> = (0..p).map(|b| b.to_string()).collect();
    let mut t = with_headers(
        "table-11",
        "Residue addition table mod 7",
        &[&strs(&["7"]), &cols],
    );
    for a in std::iter::once(0).chain((1..p).rev()) {
        let mut row = vec![Cell::Int(a)];
        row.extend(grid[a as usize].iter().map(|&v| Cell::Int(v)));
        t.push(row);
    }
    Ok(t)
}

fn numbered(n: u32, t: Result<Table>) -> Result<Table> {
    t.map(|mut t| {
        t.id = format!("table-{n}");
        t
    })
}

/// Residues of `E`, `p1` and `E - p1` under the Goldbach seed primes of `E`.
pub fn residue_comparison_table(e: u64, p1: u64) -> Result<Table> {
    if p1 >= e {
        return Err(Error::domain(format!("{p1} is not below {e}")));
    }
    let sps = goldbach_seed_set(e)?;
    let pair = GoldbachPair { e, p1, p2: e - p1 };
    let mut t = with_headers(
        "residue-comparison",
        &format!(
            "Residues of {e}, {p1} and {} under the seed primes of {}",
            e - p1,
            sps.primorial().value()
        ),
        &[
            &strs(&["Role", "Value"]),
            &mod_headers(sps.seeds()),
            &strs(&["Note"]),
        ],
    );
    let cmp = pair.residue_comparison(sps.seeds());
    let mut row =
        |role: &str, v: u64, pick: fn(&crate::goldbach::ResidueTriple) -> u64, note: &str| {
            let mut r = vec![Cell::text(role), Cell::Int(v)];
            r.extend(cmp.iter().map(|c| Cell::Int(pick(c))));
            r.push(if note.is_empty() {
                Cell::Empty
            } else {
                Cell::text(note)
            });
            t.push(r);
        };
    row("Even", e, |c| c.e, "<- Signature");
    row("P1", p1, |c| c.p1, "");
    row("P2", e - p1, |c| c.p2, "");
    Ok(t)
}

fn table16() -> Result<Table> {
    let mut t = Table::new(
        "table-16",
        "Potential primes and potential solutions per primorial",
        &[
            "Count",
            "Prime P",
            "Primorial P#",
            "Cycles Of Prior Primorial",
            "P-1",
            "P-2",
            "Potential Primes",
            "Potential Solutions",
            "Avg Solutions Per Prior Cycle",
        ],
    );
    for k in 1..=10u32 {
        let p = nth_primorial(k)?;
        let q = p.largest_factor();
        let mut row = vec![Cell::Int(k as u64), Cell::Int(q)];
        match k {
            1 => row.extend(vec![Cell::Empty; 7]),
            2 => row.extend([
                Cell::Int(p.value()),
                Cell::Empty,
                Cell::Int(q - 1),
                Cell::Int(q - 2),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
            ]),
            _ => {
                let sol = potential_solutions_t(&p)?;
                let prior = p.prev().map(|pp| potential_solutions_t(&pp)).transpose()?;
                row.extend([
                    Cell::Int(p.value()),
                    if k == 3 { Cell::Empty } else { Cell::Int(q) },
                    Cell::Int(q - 1),
                    Cell::Int(q - 2),
                    Cell::Int(totient_of_primorial(&p)),
                    Cell::Int(sol),
                    match (k, prior) {
                        (3, _) | (_, None) => Cell::Empty,
                        _ => Cell::real(sol as f64 / q as f64, 1),
                    },
                ]);
            }
        }
        t.push(row);
    }
    Ok(t)
}

/// Row counts printed for scaffold tables 17 to 21.
pub fn default_scaffold_rows(n: u32) -> usize {
    match n {
        19 | 20 => 8,
        _ => 9,
    }
}

/// Scaffold table `n` (17 to 21) with the first `rows` rows.
pub fn scaffold_table(n: u32, rows: usize, budget: &Budget) -> Result<Table> {
    match n {
        17 => table17(rows, budget),
        18 => table18(rows, budget),
        19 => table19(rows, budget),
        20 => table20(rows, budget),
        21 => table21(rows, budget),
        _ => Err(Error::domain(format!(
            "scaffold tables are 17 to 21, got {n}"
        ))),
    }
}

/// Signature of `z` under `seeds`, in the layout of table 2.
pub fn signature_table(z: u64, seeds: &[u64]) -> Table {
    let mut t = with_headers(
        "signature",
        &format!("Signature of {z}"),
        &[&strs(&["Integer"]), &mod_headers(seeds)],
    );
    let mut row = vec![Cell::Int(z)];
    row.extend(residues(z, seeds));
    t.push(row);
    t
}

fn hash(p: u64) -> Cell {
    Cell::text(format!("{p}#"))
}

fn table17(rows: usize, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-17",
        "Two-primorial scaffold with N bounded by the square root of M",
        &[
            "Row",
            "M",
            "N",
            "Pm",
            "Pz",
            "T(M) in M",
            "Product Factor",
            "Avg T(M) in N",
            "Reciprocal Of Product Factor",
        ],
    );
    for r in build_table17(rows, budget)? {
        t.push(vec![
            Cell::Int(r.index as u64),
            Cell::Int(r.a.value()),
            hash(r.outer_largest_factor),
            Cell::Int(r.p_a),
            Cell::Int(r.outer_largest_factor),
            Cell::Int(r.t_a),
            Cell::real(r.product_factor, 6),
            Cell::Int(r.avg_t_a_display()),
            Cell::real(r.reciprocal(), 2),
        ]);
    }
    Ok(t)
}

fn table18(rows: usize, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-18",
        "Ratio of successive two-primorial averages",
        &[
            "Row",
            "M",
            "N",
            "T(M1) in N1",
            "T(M2) in N2",
            "Ratio Of Averages",
            "T(M2) / T(M1)",
            "PF2 / PF1",
        ],
    );
    for r in build_table18(rows, budget)? {
        let opt_int = |v: Option<u64>| v.map_or(Cell::Empty, Cell::Int);
        let opt_real = |v: Option<f64>| v.map_or(Cell::Empty, |x| Cell::real(x, 4));
        t.push(vec![
            Cell::Int(r.index as u64),
            Cell::Int(r.m.value()),
            hash(r.n_largest_factor),
            opt_int(r.previous_avg.map(round_half_up)),
            if r.previous_avg.is_some() {
                Cell::Int(round_half_up(r.avg))
            } else {
                Cell::Empty
            },
            opt_real(r.avg_ratio),
            opt_int(r.t_ratio),
            opt_real(r.pf_ratio),
        ]);
    }
    Ok(t)
}

fn b_value(b: &Option<Primorial>) -> Cell {
    b.as_ref().map_or(Cell::Empty, |p| Cell::Int(p.value()))
}

fn table19(rows: usize, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-19",
        "Three-primorial scaffold A-B-C",
        &[
            "Row",
            "A",
            "B",
            "C",
            "P_a",
            "P_b",
            "P_c",
            "T(A) in A",
            "Product Factor",
            "Avg T(A) in C",
        ],
    );
    for r in build_table19_20(rows, budget)? {
        t.push(vec![
            Cell::Int(r.index as u64),
            Cell::Int(r.a.value()),
            b_value(&r.b),
            hash(r.outer_largest_factor),
            Cell::Int(r.p_a),
            Cell::Int(r.p_b.unwrap_or_default()),
            Cell::Int(r.outer_largest_factor),
            Cell::Int(r.t_a),
            Cell::real(r.product_factor, 6),
            Cell::Int(r.avg_t_a_display()),
        ]);
    }
    Ok(t)
}

fn table20(rows: usize, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-20",
        "Three-primorial scaffold with both averages and the smallest non-core seed prime of C",
        &[
            "Row",
            "A",
            "B",
            "C",
            "Pa",
            "Pb",
            "Ps",
            "Pc",
            "Avg T(A) in C",
            "Avg T(B) in C",
            "Pz",
            "Pz^2",
        ],
    );
    for r in build_table19_20(rows, budget)? {
        t.push(vec![
            Cell::Int(r.index as u64),
            Cell::Int(r.a.value()),
            b_value(&r.b),
            hash(r.outer_largest_factor),
            Cell::Int(r.p_a),
            Cell::Int(r.p_b.unwrap_or_default()),
            Cell::Int(r.p_s.unwrap_or_default()),
            Cell::Int(r.outer_largest_factor),
            Cell::Int(r.avg_t_a_display()),
            Cell::Int(r.avg_t_b_display().unwrap_or_default()),
            Cell::Int(r.p_z),
            Cell::Int(r.p_z_squared),
        ]);
    }
    Ok(t)
}

fn table21(rows: usize, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "table-21",
        "Two-primorial scaffold for Goldbach solutions",
        &[
            "Row",
            "A",
            "B",
            "Pa",
            "Pb",
            "T(A) in A",
            "Product Factor",
            "Avg T(A) in B",
            "Pz",
            "Pz^2",
        ],
    );
    for r in build_table21(rows, budget)? {
        t.push(vec![
            Cell::Int(r.index as u64),
            Cell::Int(r.a.value()),
            hash(r.outer_largest_factor),
            Cell::Int(r.p_a),
            Cell::Int(r.outer_largest_factor),
            Cell::Int(r.t_a),
            Cell::real(r.product_factor, 6),
            Cell::Int(r.avg_t_a_display()),
            Cell::Int(r.p_z),
            Cell::Int(r.p_z_squared),
        ]);
    }
    Ok(t)
}

/// Potential primes and new composites per window of `2 * max_seed`.
pub fn figure1(p: &Primorial, budget: &Budget) -> Result<Table> {
    let mut t = Table::new(
        "figure-1",
        format!(
            "Potential primes and cumulative new composites per window across {}",
            p.value()
        ),
        &[
            "Window",
            "Start",
            "End",
            "Length",
            "Potential Primes",
            "New Composites",
            "Cumulative New Composites",
        ],
    );
    for w in figure1_series(p, budget)? {
        t.push(vec![
            Cell::Int(w.window_index),
            Cell::Int(w.window_start),
            Cell::Int(w.window_end),
            Cell::Int(w.window_length),
            Cell::Int(w.potential_primes),
            Cell::Int(w.new_composites),
            Cell::Int(w.cumulative_new_composites),
        ]);
    }
    Ok(t)
}

/// Goldbach pair counts with the least-squares line of each mod-3 class.
pub fn figure2(upper: u64, budget: &Budget) -> Result<Table> {
    let rows = pair_count_table(upper, budget)?;
    let slopes = class_slopes(&rows);
    let mut t = Table::new(
        "figure-2",
        format!("Goldbach pairs by mod 3 class for 6 <= E <= {upper} with least-squares fits"),
        &["Even", "Mod 3", "Pairs", "Fitted"],
    );
    for c in 0..3u8 {
        let pts: Vec<&crate::goldbach::PairCount> = rows.iter().filter(|r| r.class == c).collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|r| r.e as f64).sum::<f64>() / n;
        let my = pts.iter().map(|r| r.count as f64).sum::<f64>() / n;
        let slope = slopes[c as usize].unwrap_or(0.0);
        for r in pts {
            t.push(vec![
                Cell::Int(r.e),
                Cell::Int(c as u64),
                Cell::Int(r.count),
                Cell::real(my + slope * (r.e as f64 - mx), 4),
            ]);
        }
    }
    t.rows.sort_by_key(|r| match r[0] {
        Cell::Int(e) => e,
        _ => 0,
    });
    Ok(t)
}
