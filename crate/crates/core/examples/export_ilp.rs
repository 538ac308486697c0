//! Prints the integer program for the fixture in LP format and checks the
//! known optimum against it.

use widepair::exact::build_ilp;
use widepair::{parse_topology, PathPair};

fn main() -> widepair::Result<()> {
    let g = parse_topology(include_str!("../data/worked_example.topo"))?;
    let model = build_ilp(&g, 0, 3)?;
    print!("{}", model.to_lp_string());

    let pair = PathPair::new(&g, vec![0, 2, 4, 3].into(), vec![0, 1, 3].into())?;
    let values = model.assignment_for(&pair)?;
    eprintln!(
        "{} binaries, {} continuous; known pair objective {} with {} violations",
        model.binary_count(),
        model.continuous_count(),
        model.objective_value(&values),
        model.violations(&values).len()
    );
    Ok(())
}
