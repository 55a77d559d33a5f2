//! SDPA sparse export of a relaxation and the round trip back through the
//! parser and embedded solver.

use qmcut::sdp::{build_level1_with_objective, export_sdpa, parse_sdpa, solve, solve_numeric};
use qmcut::swap::parse_polynomial;

fn main() {
    let objective = parse_polynomial(3, "s(1,2) + s(1,3) + s(2,3)").unwrap();
    let problem = build_level1_with_objective(3, &objective).unwrap();

    let text = export_sdpa(&problem, true);
    println!("--- exported .dat-s ---\n{text}-----------------------\n");

    let parsed = parse_sdpa(&text).unwrap();
    println!(
        "parsed back: {} variables, block size {}, maximize = {}",
        parsed.n_vars, parsed.block_dim, parsed.maximize
    );

    let direct = solve(&problem, 1e-9).unwrap();
    let reimported = solve_numeric(&parsed.to_numeric(), 1e-9).unwrap();
    println!("direct solve:     {:.9}", direct.value);
    println!("reimported solve: {:.9}", reimported.value);
    assert!((direct.value - reimported.value).abs() < 1e-7);
}
