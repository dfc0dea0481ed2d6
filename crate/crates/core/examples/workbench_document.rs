//! Loading a problem document and running its tasks, as the command line does.

use embrace::workbench::{self, tasks, Format, Problem, Report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/e2.json"))?;
    let problem = Problem::parse(&text)?;
    let names: Vec<&str> = problem.complexes.iter().map(|c| c.name.as_str()).collect();
    println!("{}: {} objects, complexes {names:?}", problem.name, problem.quiver.num_objects());

    let mut report = Report::default();
    report.extend(tasks::check(&problem));
    for t in &problem.tasks {
        report.extend(tasks::run_task(&problem, t)?);
    }
    print!("{}", report.render(Format::Text));

    // the same through the command-line entry point
    let out = workbench::run(["embrace", "hh", "--input", concat!(env!("CARGO_MANIFEST_DIR"), "/data/e1.json"), "--degree", "2"]);
    print!("{}", out.stdout);
    Ok(())
}
