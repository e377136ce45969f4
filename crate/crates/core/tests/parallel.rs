//! Results must not depend on the number of worker threads.
#![cfg(feature = "parallel")]

use sigma_triples::checks::check_wreath_conjugacy;
use sigma_triples::numtheory::bound_check;
use sigma_triples::permgroup::{centralizer_terms, triples_centralizer};
use sigma_triples::pipeline::coeffs_classes;
use sigma_triples::Caps;

fn with_threads<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn thread_count_does_not_change_results() {
    let caps = Caps::default();
    let run = || {
        (
            coeffs_classes(40),
            triples_centralizer(6, &caps).unwrap(),
            centralizer_terms(5, &caps).unwrap(),
            bound_check(2000).unwrap(),
            check_wreath_conjugacy(3, 3, 2000).unwrap(),
        )
    };
    let single = with_threads(1, run);
    for n in [2, 4, 7] {
        assert_eq!(with_threads(n, run), single, "{n} threads");
    }
}
