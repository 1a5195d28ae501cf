use bernstein_degree::combinatorics::Partition;
use bernstein_degree::dual_pair::{enumerate_q, Setting, SigmaLabel};
use bernstein_degree::jellyfish::{enumerate_maximal_jellyfish, PathFamilies};

fn main() -> bernstein_degree::Result<()> {
    let s = Setting::ostar(6, 2)?;
    let sigma = SigmaLabel::Single(Partition::new(vec![1])?);
    let fam = PathFamilies::new(&s)?;
    println!(
        "{s}: d_k = {}, {} path families, {} maximal",
        fam.d_k,
        fam.all().len(),
        fam.maximal().len()
    );
    for e in fam.maximal_endpoints() {
        println!("maximal endpoint set {e:?}");
    }
    let jhat = enumerate_maximal_jellyfish(&s, &sigma)?;
    let q = enumerate_q(&s, &sigma)?;
    println!("#J^ = {} = #Q {} x #F^ {}", jhat.len(), q.len(), fam.maximal().len());
    Ok(())
}
