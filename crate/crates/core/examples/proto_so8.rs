use liecheck_core::suites::{run_suite, SuiteConfig, SuiteKind};
use std::time::Instant;
fn main() {
    for (name, suite) in [("so8", SuiteKind::Wonderful), ("sl4", SuiteKind::Wonderful),
                          ("so8", SuiteKind::Kernel)] {
        let t = Instant::now();
        match run_suite(&SuiteConfig::new(name, suite)) {
            Ok(r) => {
                println!("{name} {}: {:?} ({:?})", suite.name(), r.overall, t.elapsed());
                for rec in &r.records { println!("   {:?} {}", rec.verdict, rec.name); }
            }
            Err(e) => println!("{name} {}: ERROR {e}", suite.name()),
        }
    }
}
