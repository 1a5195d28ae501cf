// Values in the open Mp window are printed, not claimed.
use bernstein_degree::combinatorics::Partition;
use bernstein_degree::degree::{mp_conjecture_probe, OracleLimits};

fn main() -> bernstein_degree::Result<()> {
    let sigmas = Partition::all_up_to(2);
    for (n, k) in [(3, 4), (4, 5), (4, 6)] {
        let r = mp_conjecture_probe(n, k, &sigmas, &OracleLimits::default())?;
        for e in &r.entries {
            println!("n={n} k={k} sigma={}: {} (conjectural)", e.sigma, e.value);
        }
        let ok = r.boundary.iter().filter(|b| b.passed).count();
        println!("boundary agreement {ok}/{}", r.boundary.len());
    }
    Ok(())
}
