//! The shipped root and diagram tables are pinned by hash; editing one must be
//! a deliberate act.

use sha2::{Digest, Sha256};

const PINS: [(&str, &str); 6] = [
    (
        "data/roots/b3.txt",
        "09e7788a3dfcc086c19ad7034955e4f962e540f7da5d065b5722df438094a2d7",
    ),
    (
        "data/roots/b4.txt",
        "ffae4e425406d90d6205b39d1e21c0c65d6a24d2271ec066c94854dd819d864a",
    ),
    (
        "data/roots/f4.txt",
        "f2e69d2c60af5b24c30389065dd6c26557e7adcf01235a53d799c6ebd9c3e410",
    ),
    (
        "data/roots/g2.txt",
        "07351bc0b3e96ec3693afa8382979b7a4b2b6d82af24104b14c5d26ea634a4f4",
    ),
    (
        "data/diagrams/e6.txt",
        "7e1ea7a6e4600f9a79395d6f06e69092be57c7c860e0f4e00afa2a2ac59fc44e",
    ),
    (
        "data/diagrams/e7.txt",
        "15f0891072455af121e693a724bbdab1d269ef8a75dbc557e8c58d53282be404",
    ),
];

#[test]
fn data_files_match_pins() {
    for (file, want) in PINS {
        let bytes = std::fs::read(format!("{}/{file}", env!("CARGO_MANIFEST_DIR"))).unwrap();
        let got: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(got, want, "{file}");
    }
}
