use defcol_core::EnumerationTask;
fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for n in 1..=max {
        let t = std::time::Instant::now();
        let c = EnumerationTask::triangle_free(n).unwrap().par_filter_map(|_| Some(())).len();
        println!("n={n} classes={c} {:?}", t.elapsed());
    }
}
