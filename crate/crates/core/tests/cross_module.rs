//! Worked values that tie several modules together.

use num_bigint::BigInt;

use bernstein_degree::combinatorics::{Partition, SignedPartitionPair};
use bernstein_degree::degree::{bernstein_degree, exceptional_degree, exceptional_rows, hilbert_report};
use bernstein_degree::dual_pair::{Setting, SigmaLabel};
use bernstein_degree::jellyfish::{multiplicity_from_jellyfish, PathFamilies};
use bernstein_degree::plane_partitions::{count_p_product, HermitianType};
use bernstein_degree::rep_dimensions::{dim_o, dim_sp, dim_u_sigma};

fn single(v: &[u32]) -> SigmaLabel {
    SigmaLabel::Single(Partition::new(v.to_vec()).unwrap())
}

#[test]
fn jellyfish_count_is_the_degree() {
    let cases = [
        (Setting::ostar(3, 1).unwrap(), single(&[1])),
        (Setting::ostar(6, 2).unwrap(), single(&[2, 1])),
        (
            Setting::upq(2, 2, 1).unwrap(),
            SigmaLabel::Signed(SignedPartitionPair::new(
                Partition::new(vec![1]).unwrap(),
                Partition::empty(),
            )),
        ),
        (
            Setting::upq(3, 4, 2).unwrap(),
            SigmaLabel::Signed(SignedPartitionPair::new(
                Partition::new(vec![2]).unwrap(),
                Partition::new(vec![1]).unwrap(),
            )),
        ),
    ];
    for (s, sigma) in cases {
        let r = bernstein_degree(&s, &sigma).unwrap();
        assert_eq!(
            multiplicity_from_jellyfish(&s, &sigma).unwrap(),
            r.degree,
            "{s} {sigma}"
        );
        let fhat = PathFamilies::new(&s).unwrap().maximal().len();
        assert_eq!(BigInt::from(fhat), r.p_count);
    }
}

#[test]
fn compact_dimensions_match_q_for_small_k() {
    assert_eq!(dim_sp(1, &Partition::new(vec![1]).unwrap()).unwrap(), BigInt::from(2));
    assert_eq!(dim_o(1, &Partition::new(vec![1]).unwrap()).unwrap(), BigInt::from(1));
    let s = Setting::ostar(3, 1).unwrap();
    assert_eq!(
        dim_u_sigma(&s, &single(&[1])).unwrap(),
        bernstein_degree(&s, &single(&[1])).unwrap().q_count
    );
}

#[test]
fn exceptional_rows_and_orbit_degrees() {
    let rows = exceptional_rows();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        assert_eq!(
            hilbert_report(&row.group, row.k).unwrap().p_count,
            BigInt::from(row.deg_orbit)
        );
    }
    let d = exceptional_degree(&rows[3], 2, 3).unwrap();
    assert!(d.agrees);
    assert_eq!(d.degree, d.polynomial);
}

#[test]
fn pinned_products() {
    assert_eq!(
        count_p_product(&HermitianType::UnitaryPQ { p: 4, q: 5 }, 2).unwrap(),
        BigInt::from(50)
    );
    assert_eq!(
        count_p_product(&HermitianType::Metaplectic { n: 3 }, 1).unwrap(),
        BigInt::from(4)
    );
    assert_eq!(
        count_p_product(&HermitianType::StarOrthogonal { n: 6 }, 1).unwrap(),
        BigInt::from(14)
    );
}
