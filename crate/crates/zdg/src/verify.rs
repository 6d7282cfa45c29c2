//! Catalog verification on a worker pool. Results keep catalog order, so
//! the report does not depend on the number of workers.

use rayon::prelude::*;
use zdg_core::harness::{analyze, Catalog, HarnessOptions, VerificationReport};

pub fn run(catalog: &Catalog, opts: &HarnessOptions, jobs: usize) -> VerificationReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let reports = pool.install(|| {
        catalog
            .specs
            .par_iter()
            .map(|s| analyze(s, opts))
            .collect()
    });
    VerificationReport::from_reports(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zdg_core::harness::run_all;

    #[test]
    fn parallel_matches_sequential() {
        let catalog = Catalog::from_specs(["Z12", "Z2 x Z3", "Z7", "Z9", "Z3 x Z4", "Z2 x Z2 x Z2"]);
        let opts = HarnessOptions::default();
        assert_eq!(run(&catalog, &opts, 4), run_all(&catalog, &opts));
    }
}
