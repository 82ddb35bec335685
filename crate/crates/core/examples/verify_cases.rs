//! Running the named verification cases from code.

use twodist::verify::{cases, run_case};

fn main() {
    for case in cases().iter().filter(|c| !c.slow) {
        let r = run_case(case);
        print!("{}", r.human());
    }
}
