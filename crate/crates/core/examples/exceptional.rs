use bernstein_degree::degree::{exceptional_degree, exceptional_rows};
use bernstein_degree::rep_dimensions::{dim_weyl, DominantWeight, RootSystemData};

fn main() -> bernstein_degree::Result<()> {
    for row in exceptional_rows() {
        print!(
            "{} lambda={} k={} {} sigma={}:",
            row.group, row.lambda, row.k, row.h_group, row.sigma
        );
        for a in 0..=3 {
            let d = exceptional_degree(&row, a, if row.uses_b { 1 } else { 0 })?;
            print!(" {}", d.degree);
        }
        println!();
    }
    let f4 = RootSystemData::builtin("F4")?;
    for i in 0..4 {
        let mut w = vec![0; 4];
        w[i] = 1;
        println!(
            "F4 fundamental {}: {}",
            i + 1,
            dim_weyl(&f4, &DominantWeight::Fundamental(w))?
        );
    }
    Ok(())
}
