//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p caput-kit --test acceptance`.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use caput_core::oracle::Oracle;
use caput_core::partitions::enumerate_cycle_types;
use caput_core::{
    caput_combinations, caput_combinations_all_sizes, character_matrix, class_size, classes, enumerate_partitions,
    factorial, induced_value_multinomial, induced_value_quotient, Partition,
};
use num_bigint::BigUint;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn caput_kit(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_caput-kit"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
        elapsed,
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const PAPER_N5: [[u64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [5, 3, 1, 2, 0, 1, 0],
    [10, 4, 2, 1, 1, 0, 0],
    [20, 6, 0, 2, 0, 0, 0],
    [30, 6, 2, 0, 0, 0, 0],
    [60, 6, 0, 0, 0, 0, 0],
    [120, 0, 0, 0, 0, 0, 0],
];
const PAPER_ROWS: [&str; 7] = ["5", "4,1", "3,2", "3,1^2", "2^2,1", "2,1^3", "1^5"];
const PAPER_COLS: [&str; 7] = ["1^5", "1^3,2", "1,2^2", "1^2,3", "2,3", "1,4", "5"];

fn paper_matrix() -> Check {
    let (code, out, elapsed) = caput_kit(&["table", "5"]);
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split('\t').skip(1).collect();
    ensure(header == PAPER_COLS, || format!("header {header:?}"))?;
    let mut cells = 0;
    for (r, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split('\t').collect();
        ensure(r < 7 && fields[0] == PAPER_ROWS[r], || format!("row label {line}"))?;
        let values: Vec<u64> = fields[1..].iter().map(|v| v.parse().unwrap()).collect();
        ensure(values == PAPER_N5[r], || format!("row {} = {values:?}", fields[0]))?;
        cells += values.len();
    }
    ensure(cells == 49, || format!("{cells} cells"))?;
    Ok(format!("49/49 cells exact in {elapsed:?}"))
}

fn worked_example_row() -> Check {
    let lambda: Partition = "3,2".parse().unwrap();
    let row: Vec<BigUint> = ["1^5", "2,1^3", "2^2,1", "3,1^2", "3,2", "4,1", "5"]
        .iter()
        .map(|c| induced_value_quotient(&lambda, &c.parse().unwrap()).unwrap())
        .collect();
    let want: Vec<BigUint> = [10u32, 4, 2, 1, 1, 0, 0].map(BigUint::from).to_vec();
    ensure(row == want, || format!("row {row:?}"))?;

    let (code, out, _) = caput_kit(&["induce", "5", "--lambda", "3,2", "--class", "2,1^3", "--show-work"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let data: Vec<&str> = out.lines().nth(1).unwrap_or_default().split('\t').collect();
    ensure(data[1..] == ["120", "12", "10", "4", "4"], || {
        format!("show-work {data:?}")
    })?;
    Ok("10 4 2 1 1 0 0; components 120, 12, 10, 4".into())
}

fn class_sizes_s5() -> Check {
    let in_paper_order = ["5", "4,1", "3,2", "3,1^2", "2^2,1", "2,1^3", "1^5"];
    let sizes: Vec<BigUint> = in_paper_order
        .iter()
        .map(|c| class_size(5, &c.parse().unwrap()).unwrap())
        .collect();
    let want: Vec<BigUint> = [24u32, 30, 20, 20, 15, 10, 1].map(BigUint::from).to_vec();
    ensure(sizes == want, || format!("{sizes:?}"))?;
    Ok("24 30 20 20 15 10 1".into())
}

fn three_way() -> Check {
    let oracle = Oracle::default();
    let mut pairs = 0;
    for n in 1..=6 {
        for lambda in enumerate_partitions(n) {
            for rho in enumerate_cycle_types(n) {
                let q = induced_value_quotient(&lambda, &rho).unwrap();
                let m = induced_value_multinomial(&lambda, &rho).unwrap();
                let o = oracle.induced_value(&lambda, &rho).unwrap();
                ensure(q == m && m == o, || format!("n={n} {lambda} / {rho}: {q} {m} {o}"))?;
                pairs += 1;
            }
        }
    }
    let (code, out, elapsed) = caput_kit(&["verify", "6"]);
    ensure(code == 0, || format!("verify 6 exit {code}: {out}"))?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("verify 6 took {elapsed:?}")
    })?;
    ensure(out.contains("matches built-in n=5 table"), || out.clone())?;
    Ok(format!("{pairs} pairs agree; `verify 6` exit 0 in {elapsed:?}"))
}

fn path_equivalence() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 1..=9 {
        for lambda in enumerate_partitions(n) {
            for rho in enumerate_cycle_types(n) {
                let q = induced_value_quotient(&lambda, &rho).unwrap();
                let m = induced_value_multinomial(&lambda, &rho).unwrap();
                ensure(q == m, || format!("n={n} {lambda} / {rho}: {q} != {m}"))?;
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} pairs in {elapsed:?}"))
}

fn reciprocity() -> Check {
    let mut rows = 0;
    for n in 1..=9 {
        let cls = classes(n);
        for lambda in enumerate_partitions(n) {
            let total: BigUint = cls
                .iter()
                .map(|c| &c.size * induced_value_quotient(&lambda, &c.cycle_type).unwrap())
                .sum();
            ensure(total == factorial(n), || format!("n={n} {lambda}: {total}"))?;
            rows += 1;
        }
    }
    Ok(format!("{rows} rows sum to n!"))
}

/// Can the parts be dropped into bins of the given capacities, filling each exactly?
fn splits(parts: &[usize], bins: &mut [usize]) -> bool {
    let Some((&first, rest)) = parts.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    for i in 0..bins.len() {
        if bins[i] >= first {
            bins[i] -= first;
            let ok = splits(rest, bins);
            bins[i] += first;
            if ok {
                return true;
            }
        }
    }
    false
}

fn zero_pattern() -> Check {
    let mut zeros = 0;
    let mut pairs = 0;
    for n in 1..=9 {
        for lambda in enumerate_partitions(n) {
            for rho in enumerate_cycle_types(n) {
                let value = induced_value_quotient(&lambda, &rho).unwrap();
                let mut bins = lambda.parts().to_vec();
                let feasible = splits(rho.to_partition().parts(), &mut bins);
                ensure((value == BigUint::ZERO) == !feasible, || {
                    format!("n={n} {lambda} / {rho}: value {value}, split {feasible}")
                })?;
                zeros += usize::from(!feasible);
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, {zeros} zeros, all explained by the splitter"))
}

fn caput_combinatorics() -> Check {
    let mut cases = 0;
    for n in 0..=12usize {
        for c in 0..=n {
            let caput = (1u32 << c) - 1;
            let mut by_size = vec![0u64; n + 1];
            for s in 0u32..(1 << n) {
                if s & caput == caput {
                    by_size[s.count_ones() as usize] += 1;
                }
            }
            let mut sum = BigUint::ZERO;
            for (k, &count) in by_size.iter().enumerate().skip(c) {
                let got = caput_combinations(n, k, c).unwrap();
                ensure(got == BigUint::from(count), || format!("({n},{k},{c}) = {got}"))?;
                sum += got;
                cases += 1;
            }
            let all = caput_combinations_all_sizes(n, c).unwrap();
            let brute: u64 = by_size.iter().sum();
            ensure(all == BigUint::from(brute), || format!("all sizes ({n},{c}) = {all}"))?;
            ensure(sum == all && all == BigUint::from(1u64 << (n - c)), || {
                format!("2^(n-c) for ({n},{c})")
            })?;
        }
    }
    Ok(format!("{cases} (n,k,c) cases match brute force"))
}

fn exactness() -> Check {
    let ones: Partition = "1^12".parse().unwrap();
    let value = induced_value_quotient(&ones, &ones.to_cycle_type()).unwrap();
    ensure(value == BigUint::from(479_001_600u32), || format!("φ = {value}"))?;
    let m = character_matrix(12).unwrap();
    ensure(m.values[76][0] == BigUint::from(479_001_600u32), || {
        "n=12 table corner".into()
    })?;
    // values past u64: φ^{1^25}_{1^25} = 25!
    let big: Partition = "1^25".parse().unwrap();
    let v = induced_value_multinomial(&big, &big.to_cycle_type()).unwrap();
    ensure(v.to_string() == "15511210043330985984000000", || format!("25! = {v}"))?;

    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("..");
    for krate in ["core/src", "cli/src"] {
        for entry in std::fs::read_dir(src.join(krate)).unwrap() {
            let path = entry.unwrap().path();
            let text = std::fs::read_to_string(&path).unwrap();
            for token in ["f32", "f64"] {
                ensure(!text.contains(token), || format!("{} mentions {token}", path.display()))?;
            }
        }
    }
    Ok("φ^{1^12}_{1^12} = 479001600; no f32/f64 in sources".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 paper matrix reproduction", paper_matrix),
        ("2 worked-example row", worked_example_row),
        ("3 S5 class sizes", class_sizes_s5),
        ("4 three-way equivalence n<=6", three_way),
        ("5 path equivalence n<=9", path_equivalence),
        ("6 reciprocity n<=9", reciprocity),
        ("7 zero pattern n<=9", zero_pattern),
        ("8 caput combinatorics n<=12", caput_combinatorics),
        ("9 exactness", exactness),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
