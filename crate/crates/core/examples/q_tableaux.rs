// Tableaux surviving the alpha constraints, against the determinant count.
use bernstein_degree::combinatorics::Partition;
use bernstein_degree::dual_pair::{count_q_determinant, enumerate_q, enumerate_t, Setting, SigmaLabel};

fn main() -> bernstein_degree::Result<()> {
    let sigma = SigmaLabel::Single(Partition::new(vec![2, 1])?);
    for k in 3..=6 {
        let s = Setting::mp(3, k)?;
        let q = enumerate_q(&s, &sigma)?;
        let t = enumerate_t(&s, &sigma)?.len();
        println!(
            "{s}: #T = {t}, #Q = {} (determinant {})",
            q.len(),
            count_q_determinant(&s, &sigma)?
        );
        if k == 3 {
            for tab in &q {
                println!("  {tab}");
            }
        }
    }
    Ok(())
}
