use std::time::Instant;
use tscreen_core::rings::Window;
use tscreen_core::suites::{run_suite, SUITE_NAMES};
use tscreen_core::CartanData;

#[test]
#[ignore]
fn timing() {
    let window = Window::new(-6, 6);
    for suite in SUITE_NAMES {
        for name in ["sl2", "A2", "A3", "B2", "G2"] {
            let cd = CartanData::named(name).unwrap();
            let samples = if suite == "lemma13" { 50 } else { 200 };
            let t0 = Instant::now();
            let out = run_suite(suite, &cd, name, window, 0, samples);
            let dt = t0.elapsed().as_millis();
            match out {
                Ok(r) => println!("{suite:18} {name:4} {dt:6} ms  passed={} failed={}", r.passed, r.failed),
                Err(e) => println!("{suite:18} {name:4} {dt:6} ms  skipped: {e}"),
            }
        }
    }
}
