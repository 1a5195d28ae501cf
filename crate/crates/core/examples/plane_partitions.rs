use bernstein_degree::degree::hilbert_report;
use bernstein_degree::plane_partitions::{c_statistic, diagram_d, enumerate_p, HermitianType};

fn main() -> bernstein_degree::Result<()> {
    let mp3 = HermitianType::Metaplectic { n: 3 };
    println!("D_1 for {mp3}:\n{}", diagram_d(&mp3, 1));
    for p in enumerate_p(&mp3, 1)? {
        println!("c = {}\n{p}", c_statistic(&p));
    }
    let types = [
        (HermitianType::UnitaryPQ { p: 4, q: 5 }, 2),
        (HermitianType::SoOdd { n: 4 }, 1),
        (HermitianType::SoEven { n: 5 }, 2),
        (HermitianType::E6, 1),
        (HermitianType::E7, 2),
    ];
    for (ty, k) in types {
        let h = hilbert_report(&ty, k)?;
        println!("{ty} k={k}: {}  (#P = {})", h.rendered, h.p_count);
    }
    Ok(())
}
