use bernstein_degree::combinatorics::{Partition, SignedPartitionPair};
use bernstein_degree::degree::bernstein_degree;
use bernstein_degree::dual_pair::{Setting, SigmaLabel};

fn main() -> bernstein_degree::Result<()> {
    let zero = SigmaLabel::Signed(SignedPartitionPair::default());
    let pair = SigmaLabel::Signed(SignedPartitionPair::new(
        Partition::new(vec![2, 1])?,
        Partition::new(vec![1])?,
    ));
    let runs = [
        (Setting::upq(4, 5, 2)?, zero),
        (Setting::upq(3, 4, 3)?, pair),
        (Setting::mp(3, 2)?, SigmaLabel::Single(Partition::new(vec![1, 1])?)),
        (Setting::ostar(6, 2)?, SigmaLabel::Single(Partition::new(vec![2])?)),
    ];
    for (setting, sigma) in runs {
        let r = bernstein_degree(&setting, &sigma)?;
        println!(
            "{setting} sigma={sigma}: {} * {} = {} [{}]",
            r.q_count, r.p_count, r.degree, r.regime
        );
        for c in &r.cross_checks {
            println!("    {} {:?}", c.name, c.status);
        }
    }
    Ok(())
}
